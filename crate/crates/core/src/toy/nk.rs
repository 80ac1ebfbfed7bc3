use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{MonoidError, Result};
use crate::monoid::{LcmCertificate, LcmMonoid, MonoidCapabilities};

/// The free commutative monoid `N^k` on `k` generators `e1..ek`.
///
/// Divisibility is the componentwise order, so the right lcm is the
/// componentwise maximum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FreeAbelian {
    k: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VecElement {
    coords: Vec<u64>,
}

impl VecElement {
    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn dimension(&self) -> usize {
        self.coords.len()
    }
}

impl FreeAbelian {
    pub fn new(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(MonoidError::Malformed(String::from("N^k needs k >= 1")));
        }
        Ok(FreeAbelian { k })
    }

    pub fn dimension(&self) -> usize {
        self.k
    }

    pub fn element(&self, coords: &[u64]) -> Result<VecElement> {
        let e = VecElement {
            coords: coords.to_vec(),
        };
        self.check(&e)?;
        Ok(e)
    }

    fn same_dim(&self, a: &VecElement, b: &VecElement) -> Result<()> {
        self.check(a)?;
        self.check(b)
    }

    fn zip(&self, a: &VecElement, b: &VecElement, f: impl Fn(u64, u64) -> u64) -> VecElement {
        VecElement {
            coords: a.coords.iter().zip(&b.coords).map(|(&x, &y)| f(x, y)).collect(),
        }
    }

    /// Componentwise maximum, with complements `join - a` and `join - b`.
    pub fn nk_lcm(&self, a: &VecElement, b: &VecElement) -> Result<LcmCertificate<VecElement>> {
        self.same_dim(a, b)?;
        let join = self.zip(a, b, u64::max);
        Ok(LcmCertificate {
            left_comp: self.zip(&join, a, |j, x| j - x),
            right_comp: self.zip(&join, b, |j, y| j - y),
            left: a.clone(),
            right: b.clone(),
            join,
        })
    }
}

impl LcmMonoid for FreeAbelian {
    type Element = VecElement;

    fn name(&self) -> String {
        format!("nk:{}", self.k)
    }

    fn capabilities(&self) -> MonoidCapabilities {
        MonoidCapabilities {
            has_trivial_units: true,
            supports_left_gcd: true,
            generator_count: self.k,
        }
    }

    fn one(&self) -> VecElement {
        VecElement {
            coords: alloc::vec![0; self.k],
        }
    }

    fn generator(&self, index: usize) -> Result<VecElement> {
        if index >= self.k {
            return Err(MonoidError::GeneratorOutOfRange { index, count: self.k });
        }
        let mut coords = alloc::vec![0; self.k];
        coords[index] = 1;
        Ok(VecElement { coords })
    }

    fn check(&self, a: &VecElement) -> Result<()> {
        if a.coords.len() == self.k {
            Ok(())
        } else {
            Err(MonoidError::ForeignElement {
                expected: self.name(),
                found: format!("nk:{}", a.coords.len()),
            })
        }
    }

    fn mul(&self, a: &VecElement, b: &VecElement) -> Result<VecElement> {
        self.same_dim(a, b)?;
        Ok(self.zip(a, b, |x, y| x + y))
    }

    fn left_cancel(&self, a: &VecElement, c: &VecElement) -> Result<VecElement> {
        self.same_dim(a, c)?;
        if a.coords.iter().zip(&c.coords).any(|(x, z)| x > z) {
            return Err(MonoidError::NotLeftMultiple);
        }
        Ok(self.zip(c, a, |z, x| z - x))
    }

    fn right_lcm(&self, a: &VecElement, b: &VecElement) -> Result<LcmCertificate<VecElement>> {
        self.nk_lcm(a, b)
    }

    fn is_unit(&self, a: &VecElement) -> bool {
        a.coords.iter().all(|&x| x == 0)
    }

    fn degree(&self, a: &VecElement) -> Option<usize> {
        Some(a.coords.iter().sum::<u64>() as usize)
    }

    fn left_gcd(&self, a: &VecElement, b: &VecElement) -> Option<Result<VecElement>> {
        Some(self.same_dim(a, b).map(|()| self.zip(a, b, u64::min)))
    }

    fn strip_right_gcd(&self, a: &VecElement, b: &VecElement) -> Option<Result<(VecElement, VecElement)>> {
        Some(self.same_dim(a, b).map(|()| {
            let g = self.zip(a, b, u64::min);
            (self.zip(a, &g, |x, y| x - y), self.zip(b, &g, |x, y| x - y))
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::BfsOracle;

    fn v(m: &FreeAbelian, c: &[u64]) -> VecElement {
        m.element(c).unwrap()
    }

    #[test]
    fn mul_adds_coordinates() {
        let m = FreeAbelian::new(2).unwrap();
        assert_eq!(m.mul(&v(&m, &[2, 0]), &v(&m, &[1, 3])).unwrap(), v(&m, &[3, 3]));
    }

    #[test]
    fn left_cancel_subtracts() {
        let m = FreeAbelian::new(2).unwrap();
        assert_eq!(
            m.left_cancel(&v(&m, &[1, 1]), &v(&m, &[3, 1])).unwrap(),
            v(&m, &[2, 0])
        );
        assert_eq!(
            m.left_cancel(&v(&m, &[1, 2]), &v(&m, &[3, 1])),
            Err(MonoidError::NotLeftMultiple)
        );
    }

    #[test]
    fn lcm_is_componentwise_max() {
        let m = FreeAbelian::new(2).unwrap();
        let c = m.nk_lcm(&v(&m, &[2, 0]), &v(&m, &[1, 3])).unwrap();
        assert_eq!(c.join, v(&m, &[2, 3]));
        assert_eq!(c.left_comp, v(&m, &[0, 3]));
        assert_eq!(c.right_comp, v(&m, &[1, 0]));

        let c = m.nk_lcm(&v(&m, &[0, 0]), &v(&m, &[5, 7])).unwrap();
        assert_eq!(c.join, v(&m, &[5, 7]));

        let c = m.nk_lcm(&v(&m, &[4, 4]), &v(&m, &[4, 4])).unwrap();
        assert_eq!(c.join, v(&m, &[4, 4]));
        assert_eq!(c.left_comp, m.one());
        assert_eq!(c.right_comp, m.one());
    }

    #[test]
    fn left_divides_is_componentwise_order() {
        let m = FreeAbelian::new(3).unwrap();
        assert!(m.left_divides(&v(&m, &[1, 0, 2]), &v(&m, &[1, 1, 2])).unwrap());
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        let m2 = FreeAbelian::new(2).unwrap();
        let m3 = FreeAbelian::new(3).unwrap();
        let a = v(&m3, &[1, 0, 0]);
        assert!(matches!(
            m2.nk_lcm(&a, &m2.one()),
            Err(MonoidError::ForeignElement { .. })
        ));
        assert!(m2.element(&[1]).is_err());
        assert!(FreeAbelian::new(0).is_err());
    }

    #[test]
    fn max_is_the_unique_minimal_common_multiple() {
        // exhaustive over coordinates <= 4 for k <= 3
        for k in 1..=3usize {
            let m = FreeAbelian::new(k).unwrap();
            let oracle = BfsOracle::new(&m, 4 * k * 2);
            let ball: Vec<_> = (0..5u64.pow(k as u32))
                .map(|mut code| {
                    let coords: Vec<u64> = (0..k)
                        .map(|_| {
                            let c = code % 5;
                            code /= 5;
                            c
                        })
                        .collect();
                    v(&m, &coords)
                })
                .collect();
            for a in ball.iter().step_by(3) {
                for b in ball.iter().step_by(2) {
                    if m.degree(a).unwrap() + m.degree(b).unwrap() > 9 {
                        continue;
                    }
                    let found = oracle.lcm_set(a, b).unwrap();
                    assert_eq!(found, alloc::vec![m.nk_lcm(a, b).unwrap().join]);
                }
            }
        }
    }

    #[test]
    fn unit_pair_lcm_set_is_a_singleton() {
        let m = FreeAbelian::new(2).unwrap();
        let oracle = BfsOracle::new(&m, 6);
        let (a, b) = (v(&m, &[1, 0]), v(&m, &[0, 1]));
        assert_eq!(oracle.lcm_set(&a, &b).unwrap(), alloc::vec![v(&m, &[1, 1])]);
        assert!(crate::oracle::lcm_set_matches_units(&oracle, &a, &b).unwrap());
    }
}
