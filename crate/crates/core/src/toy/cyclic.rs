use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{MonoidError, Result};
use crate::monoid::{LcmCertificate, LcmMonoid, MonoidCapabilities};

/// The cyclic group `Z/n`, written additively, viewed as a monoid.
///
/// Every element is a unit and every element is a common right multiple of
/// everything, so all residues are right lcms of any pair. The canonical
/// join is residue 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cyclic {
    n: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclicElement {
    modulus: u32,
    residue: u32,
}

impl CyclicElement {
    pub fn residue(&self) -> u32 {
        self.residue
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }
}

impl Cyclic {
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(MonoidError::Malformed(String::from("Z/n needs n >= 1")));
        }
        Ok(Cyclic { n })
    }

    pub fn modulus(&self) -> u32 {
        self.n
    }

    pub fn element(&self, residue: u32) -> Result<CyclicElement> {
        if residue >= self.n {
            return Err(MonoidError::Malformed(format!(
                "residue {residue} is not below {}",
                self.n
            )));
        }
        Ok(self.residue(residue as u64))
    }

    fn residue(&self, r: u64) -> CyclicElement {
        CyclicElement {
            modulus: self.n,
            residue: (r % self.n as u64) as u32,
        }
    }

    fn neg(&self, a: &CyclicElement) -> CyclicElement {
        self.residue(self.n as u64 - a.residue as u64)
    }

    /// Join 0, complements `-a` and `-b`.
    pub fn cyclic_lcm(&self, a: &CyclicElement, b: &CyclicElement) -> Result<LcmCertificate<CyclicElement>> {
        self.check(a)?;
        self.check(b)?;
        Ok(LcmCertificate {
            left: *a,
            right: *b,
            left_comp: self.neg(a),
            right_comp: self.neg(b),
            join: self.one(),
        })
    }

    pub fn all(&self) -> Vec<CyclicElement> {
        (0..self.n).map(|r| self.residue(r as u64)).collect()
    }
}

impl LcmMonoid for Cyclic {
    type Element = CyclicElement;

    fn name(&self) -> String {
        format!("cyclic:{}", self.n)
    }

    fn capabilities(&self) -> MonoidCapabilities {
        MonoidCapabilities {
            has_trivial_units: self.n == 1,
            supports_left_gcd: false,
            generator_count: 1,
        }
    }

    fn one(&self) -> CyclicElement {
        self.residue(0)
    }

    fn generator(&self, index: usize) -> Result<CyclicElement> {
        if index != 0 {
            return Err(MonoidError::GeneratorOutOfRange { index, count: 1 });
        }
        Ok(self.residue(1))
    }

    fn check(&self, a: &CyclicElement) -> Result<()> {
        if a.modulus == self.n {
            Ok(())
        } else {
            Err(MonoidError::ForeignElement {
                expected: self.name(),
                found: format!("cyclic:{}", a.modulus),
            })
        }
    }

    fn mul(&self, a: &CyclicElement, b: &CyclicElement) -> Result<CyclicElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.residue(a.residue as u64 + b.residue as u64))
    }

    fn left_cancel(&self, a: &CyclicElement, c: &CyclicElement) -> Result<CyclicElement> {
        self.check(a)?;
        self.check(c)?;
        Ok(self.residue(c.residue as u64 + self.n as u64 - a.residue as u64))
    }

    fn right_lcm(&self, a: &CyclicElement, b: &CyclicElement) -> Result<LcmCertificate<CyclicElement>> {
        self.cyclic_lcm(a, b)
    }

    fn is_unit(&self, a: &CyclicElement) -> bool {
        a.modulus == self.n
    }

    fn element_count(&self) -> Option<usize> {
        Some(self.n as usize)
    }

    fn units(&self) -> Option<Vec<CyclicElement>> {
        Some(self.all())
    }

    /// Every element is a unit, so `b` itself is a greatest common right
    /// divisor; the result is `(a - b, 0)`.
    fn strip_right_gcd(
        &self,
        a: &CyclicElement,
        b: &CyclicElement,
    ) -> Option<Result<(CyclicElement, CyclicElement)>> {
        Some(
            self.check(a)
                .and(self.check(b))
                .and_then(|_| Ok((self.mul(a, &self.neg(b))?, self.one()))),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{lcm_set_matches_units, BfsOracle};

    #[test]
    fn stripping_moves_everything_into_the_numerator() {
        let c = Cyclic::new(6).unwrap();
        let (a, b) = (c.element(2).unwrap(), c.element(5).unwrap());
        let (x, y) = c.strip_right_gcd(&a, &b).unwrap().unwrap();
        assert_eq!((x, y), (c.element(3).unwrap(), c.one()));
    }

    #[test]
    fn lcm_uses_modular_negation() {
        let m = Cyclic::new(6).unwrap();
        let c = m
            .cyclic_lcm(&m.element(2).unwrap(), &m.element(5).unwrap())
            .unwrap();
        assert_eq!(c.join.residue(), 0);
        assert_eq!(c.left_comp.residue(), 4);
        assert_eq!(c.right_comp.residue(), 1);

        let m = Cyclic::new(2).unwrap();
        let c = m
            .cyclic_lcm(&m.element(1).unwrap(), &m.element(0).unwrap())
            .unwrap();
        assert_eq!(
            (c.join.residue(), c.left_comp.residue(), c.right_comp.residue()),
            (0, 1, 0)
        );
    }

    #[test]
    fn every_residue_is_a_unit() {
        let m = Cyclic::new(6).unwrap();
        assert!(m.is_unit(&m.element(4).unwrap()));
        assert!(m.is_unit(&m.one()));
    }

    #[test]
    fn lcm_set_is_the_whole_group() {
        let m = Cyclic::new(6).unwrap();
        let oracle = BfsOracle::new(&m, 12);
        for a in m.all() {
            for b in m.all() {
                let set = oracle.lcm_set(&a, &b).unwrap();
                assert_eq!(set, m.all());
                assert!(lcm_set_matches_units(&oracle, &a, &b).unwrap());
            }
        }
    }

    #[test]
    fn lcm_sets_are_join_times_units_for_small_moduli() {
        for n in 1..=8 {
            let m = Cyclic::new(n).unwrap();
            let oracle = BfsOracle::new(&m, 12);
            for a in m.all() {
                for b in m.all() {
                    assert!(lcm_set_matches_units(&oracle, &a, &b).unwrap(), "n={n}");
                }
            }
        }
    }

    #[test]
    fn mixing_moduli_fails() {
        let m6 = Cyclic::new(6).unwrap();
        let m4 = Cyclic::new(4).unwrap();
        assert!(matches!(
            m6.mul(&m6.one(), &m4.one()),
            Err(MonoidError::ForeignElement { .. })
        ));
        assert!(m6.element(6).is_err());
        assert!(Cyclic::new(0).is_err());
    }

    #[test]
    fn exhaustion_beyond_bound_fails_loudly() {
        let m = Cyclic::new(8).unwrap();
        let oracle = BfsOracle::new(&m, 3);
        assert_eq!(
            oracle.lcm_set(&m.one(), &m.one()),
            Err(MonoidError::SearchBoundExceeded { bound: 3 })
        );
    }
}
