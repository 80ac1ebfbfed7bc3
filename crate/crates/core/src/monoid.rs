//! The contract shared by every monoid instance: a left-cancellative monoid
//! in which any two elements admit a right lcm.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Debug;

use crate::error::{MonoidError, Result};

/// Constant facts about one monoid instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MonoidCapabilities {
    /// The identity is the only invertible element.
    pub has_trivial_units: bool,
    /// `left_gcd` is available.
    pub supports_left_gcd: bool,
    /// Number of atoms the instance is generated by.
    pub generator_count: usize,
}

/// Witness that `join = left * left_comp = right * right_comp` is a right lcm
/// of `left` and `right`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct LcmCertificate<E> {
    pub left: E,
    pub right: E,
    pub left_comp: E,
    pub right_comp: E,
    pub join: E,
}

impl<E: Clone + Eq> LcmCertificate<E> {
    /// Checks the two defining products by multiplication.
    pub fn is_sound<M: LcmMonoid<Element = E> + ?Sized>(&self, monoid: &M) -> Result<bool> {
        Ok(monoid.mul(&self.left, &self.left_comp)? == self.join
            && monoid.mul(&self.right, &self.right_comp)? == self.join)
    }

    /// The same lcm seen from the other side: `(right, left)`.
    pub fn swapped(&self) -> Self {
        LcmCertificate {
            left: self.right.clone(),
            right: self.left.clone(),
            left_comp: self.right_comp.clone(),
            right_comp: self.left_comp.clone(),
            join: self.join.clone(),
        }
    }
}

/// A left-cancellative monoid with right lcms.
///
/// Every operation validates that its arguments belong to `self` and answers
/// [`MonoidError::ForeignElement`] otherwise. Instances are immutable after
/// construction, so all methods take `&self` and are safe to share across
/// threads.
pub trait LcmMonoid {
    type Element: Clone + Eq + Ord + Debug;

    /// Selector-style name such as `braid:4`, used in diagnostics.
    fn name(&self) -> String;

    fn capabilities(&self) -> MonoidCapabilities;

    fn one(&self) -> Self::Element;

    /// The `index`-th atom, zero based.
    fn generator(&self, index: usize) -> Result<Self::Element>;

    /// Rejects elements built for a different instance.
    fn check(&self, a: &Self::Element) -> Result<()>;

    fn mul(&self, a: &Self::Element, b: &Self::Element) -> Result<Self::Element>;

    /// The unique `b` with `a * b = c`.
    fn left_cancel(&self, a: &Self::Element, c: &Self::Element) -> Result<Self::Element>;

    fn right_lcm(&self, a: &Self::Element, b: &Self::Element) -> Result<LcmCertificate<Self::Element>>;

    fn is_unit(&self, a: &Self::Element) -> bool;

    fn left_divides(&self, a: &Self::Element, c: &Self::Element) -> Result<bool> {
        match self.left_cancel(a, c) {
            Ok(_) => Ok(true),
            Err(MonoidError::NotLeftMultiple) => Ok(false),
            Err(e) => Err(e),
        }
    }

    /// Number of elements when the monoid is finite.
    fn element_count(&self) -> Option<usize> {
        None
    }

    /// Length of any word representing `a`, for instances whose defining
    /// relations preserve length.
    fn degree(&self, _a: &Self::Element) -> Option<usize> {
        None
    }

    /// Every unit, when the unit group is finite and enumerable.
    fn units(&self) -> Option<Vec<Self::Element>> {
        if self.capabilities().has_trivial_units {
            Some(alloc::vec![self.one()])
        } else {
            None
        }
    }

    /// Greatest common left divisor, for instances that have one.
    fn left_gcd(&self, _a: &Self::Element, _b: &Self::Element) -> Option<Result<Self::Element>> {
        None
    }

    /// `(a', b')` with `a = a' g`, `b = b' g` and `g` the greatest common
    /// right divisor, for instances that have one.
    fn strip_right_gcd(
        &self,
        _a: &Self::Element,
        _b: &Self::Element,
    ) -> Option<Result<(Self::Element, Self::Element)>> {
        None
    }

    fn generators(&self) -> Vec<Self::Element> {
        (0..self.capabilities().generator_count)
            .map(|i| self.generator(i).expect("index below generator_count"))
            .collect()
    }

    /// Product of the atoms named by `word`.
    fn word(&self, word: &[usize]) -> Result<Self::Element> {
        let mut acc = self.one();
        for &g in word {
            acc = self.mul(&acc, &self.generator(g)?)?;
        }
        Ok(acc)
    }

    /// Product of a sequence of elements, left to right.
    fn product<'a, I>(&self, factors: I) -> Result<Self::Element>
    where
        I: IntoIterator<Item = &'a Self::Element>,
        Self::Element: 'a,
    {
        let mut acc = self.one();
        for f in factors {
            acc = self.mul(&acc, f)?;
        }
        Ok(acc)
    }
}

/// `a = b * u` for some unit `u`.
pub fn equal_up_to_right_units<M: LcmMonoid + ?Sized>(
    monoid: &M,
    a: &M::Element,
    b: &M::Element,
) -> Result<bool> {
    match monoid.left_cancel(b, a) {
        Ok(u) => Ok(monoid.is_unit(&u)),
        Err(MonoidError::NotLeftMultiple) => Ok(false),
        Err(e) => Err(e),
    }
}

/// `c` is a right lcm of `a` and `b`, judged against the instance's own lcm.
///
/// Any right lcm differs from the certificate join by a right unit, so this
/// is a common-multiple test followed by a unit test.
pub fn is_right_lcm<M: LcmMonoid + ?Sized>(
    monoid: &M,
    a: &M::Element,
    b: &M::Element,
    c: &M::Element,
) -> Result<bool> {
    if !monoid.left_divides(a, c)? || !monoid.left_divides(b, c)? {
        return Ok(false);
    }
    let cert = monoid.right_lcm(a, b)?;
    equal_up_to_right_units(monoid, c, &cert.join)
}

/// Glues `lcm(x, y1)` and `lcm(x', y2)`, where `x'` is the right complement
/// of the first certificate, into a certificate for `lcm(x, y1 y2)`.
///
/// From `x y1' = y1 x'` and `x' y2' = y2 x''` it follows that
/// `x (y1' y2') = (y1 y2) x''`, and the product is again a right lcm.
pub fn compose_certificates<M: LcmMonoid + ?Sized>(
    monoid: &M,
    first: &LcmCertificate<M::Element>,
    second: &LcmCertificate<M::Element>,
) -> Result<LcmCertificate<M::Element>> {
    if second.left != first.right_comp {
        return Err(MonoidError::Malformed(String::from(
            "second certificate must start from the first one's right complement",
        )));
    }
    let left_comp = monoid.mul(&first.left_comp, &second.left_comp)?;
    Ok(LcmCertificate {
        left: first.left.clone(),
        right: monoid.mul(&first.right, &second.right)?,
        join: monoid.mul(&first.left, &left_comp)?,
        left_comp,
        right_comp: second.right_comp.clone(),
    })
}

/// Runs the composition on `(x, y1, y2)` from scratch.
pub fn composed_lcm<M: LcmMonoid + ?Sized>(
    monoid: &M,
    x: &M::Element,
    y1: &M::Element,
    y2: &M::Element,
) -> Result<LcmCertificate<M::Element>> {
    let first = monoid.right_lcm(x, y1)?;
    let second = monoid.right_lcm(&first.right_comp, y2)?;
    compose_certificates(monoid, &first, &second)
}

/// A generator or its inverse, for words evaluated in the group of fractions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedLetter {
    pub generator: usize,
    pub inverse: bool,
}

impl SignedLetter {
    pub fn positive(generator: usize) -> Self {
        SignedLetter {
            generator,
            inverse: false,
        }
    }

    pub fn negative(generator: usize) -> Self {
        SignedLetter {
            generator,
            inverse: true,
        }
    }
}
