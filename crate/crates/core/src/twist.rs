//! A wrapper that perturbs an instance's lcm choice by right units.
//!
//! Right lcms are only defined up to right multiplication by a unit, so any
//! construction built on top of `right_lcm` must give the same answers when
//! the join is replaced by `join * u`. Wrapping an instance in
//! [`UnitTwisted`] makes that replacement for every pair.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{MonoidError, Result};
use crate::monoid::{LcmCertificate, LcmMonoid, MonoidCapabilities};

/// `inner` with every lcm certificate twisted by the unit `choose(a, b)`.
pub struct UnitTwisted<M, F> {
    inner: M,
    choose: F,
}

impl<M, F> UnitTwisted<M, F>
where
    M: LcmMonoid,
    F: Fn(&M::Element, &M::Element) -> M::Element,
{
    pub fn new(inner: M, choose: F) -> Self {
        UnitTwisted { inner, choose }
    }

    pub fn inner(&self) -> &M {
        &self.inner
    }
}

impl<M, F> LcmMonoid for UnitTwisted<M, F>
where
    M: LcmMonoid,
    F: Fn(&M::Element, &M::Element) -> M::Element,
{
    type Element = M::Element;

    fn name(&self) -> String {
        format!("twisted({})", self.inner.name())
    }

    fn capabilities(&self) -> MonoidCapabilities {
        self.inner.capabilities()
    }

    fn one(&self) -> M::Element {
        self.inner.one()
    }

    fn generator(&self, index: usize) -> Result<M::Element> {
        self.inner.generator(index)
    }

    fn check(&self, a: &M::Element) -> Result<()> {
        self.inner.check(a)
    }

    fn mul(&self, a: &M::Element, b: &M::Element) -> Result<M::Element> {
        self.inner.mul(a, b)
    }

    fn left_cancel(&self, a: &M::Element, c: &M::Element) -> Result<M::Element> {
        self.inner.left_cancel(a, c)
    }

    fn right_lcm(&self, a: &M::Element, b: &M::Element) -> Result<LcmCertificate<M::Element>> {
        let cert = self.inner.right_lcm(a, b)?;
        let u = (self.choose)(a, b);
        self.inner.check(&u)?;
        if !self.inner.is_unit(&u) {
            return Err(MonoidError::InternalInvariantViolation(format!(
                "twist {u:?} is not a unit"
            )));
        }
        Ok(LcmCertificate {
            join: self.inner.mul(&cert.join, &u)?,
            left_comp: self.inner.mul(&cert.left_comp, &u)?,
            right_comp: self.inner.mul(&cert.right_comp, &u)?,
            ..cert
        })
    }

    fn is_unit(&self, a: &M::Element) -> bool {
        self.inner.is_unit(a)
    }

    fn element_count(&self) -> Option<usize> {
        self.inner.element_count()
    }

    fn degree(&self, a: &M::Element) -> Option<usize> {
        self.inner.degree(a)
    }

    fn units(&self) -> Option<Vec<M::Element>> {
        self.inner.units()
    }

    fn left_gcd(&self, a: &M::Element, b: &M::Element) -> Option<Result<M::Element>> {
        self.inner.left_gcd(a, b)
    }

    fn strip_right_gcd(&self, a: &M::Element, b: &M::Element) -> Option<Result<(M::Element, M::Element)>> {
        self.inner.strip_right_gcd(a, b)
    }
}
