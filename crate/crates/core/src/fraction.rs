//! The group of right fractions `G = { x y^-1 : x, y in M }`.
//!
//! Any two elements of `M` have a common right multiple and `M` is
//! cancellative, so `M` satisfies the right Ore conditions and embeds in
//! `G`. Fractions are not reduced; equality and products go through lcms.

use crate::error::Result;
use crate::monoid::{LcmMonoid, SignedLetter};

/// `num * den^-1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fraction<E> {
    pub num: E,
    pub den: E,
}

impl<E> Fraction<E> {
    pub fn new(num: E, den: E) -> Self {
        Fraction { num, den }
    }
}

/// Fraction arithmetic over one monoid instance.
pub struct FractionGroup<'m, M: ?Sized> {
    monoid: &'m M,
}

impl<M: ?Sized> Clone for FractionGroup<'_, M> {
    fn clone(&self) -> Self {
        *self
    }
}

impl<M: ?Sized> Copy for FractionGroup<'_, M> {}

impl<'m, M: LcmMonoid + ?Sized> FractionGroup<'m, M> {
    pub fn new(monoid: &'m M) -> Self {
        FractionGroup { monoid }
    }

    pub fn monoid(&self) -> &'m M {
        self.monoid
    }

    pub fn one(&self) -> Fraction<M::Element> {
        Fraction::new(self.monoid.one(), self.monoid.one())
    }

    /// `a / 1`, the image of `a` under the embedding `M -> G`.
    pub fn embed(&self, a: &M::Element) -> Fraction<M::Element> {
        Fraction::new(a.clone(), self.monoid.one())
    }

    pub fn check(&self, f: &Fraction<M::Element>) -> Result<()> {
        self.monoid.check(&f.num)?;
        self.monoid.check(&f.den)
    }

    /// With `den(f) c1 = den(g) c2` the lcm of the denominators,
    /// `f = g` iff `num(f) c1 = num(g) c2`.
    pub fn fraction_eq(&self, f: &Fraction<M::Element>, g: &Fraction<M::Element>) -> Result<bool> {
        self.check(f)?;
        self.check(g)?;
        let cert = self.monoid.right_lcm(&f.den, &g.den)?;
        Ok(self.monoid.mul(&f.num, &cert.left_comp)? == self.monoid.mul(&g.num, &cert.right_comp)?)
    }

    /// `f = 1` iff numerator and denominator coincide.
    pub fn is_identity(&self, f: &Fraction<M::Element>) -> Result<bool> {
        self.check(f)?;
        Ok(f.num == f.den)
    }

    /// Rewrites `den(f)^-1 num(g)` as `x' y'^-1` through the lcm of
    /// `num(g)` and `den(f)`, then returns `(num(f) x') / (den(g) y')`.
    pub fn fraction_mul(
        &self,
        f: &Fraction<M::Element>,
        g: &Fraction<M::Element>,
    ) -> Result<Fraction<M::Element>> {
        self.check(f)?;
        self.check(g)?;
        let cert = self.monoid.right_lcm(&g.num, &f.den)?;
        Ok(Fraction::new(
            self.monoid.mul(&f.num, &cert.right_comp)?,
            self.monoid.mul(&g.den, &cert.left_comp)?,
        ))
    }

    pub fn fraction_inv(&self, f: &Fraction<M::Element>) -> Fraction<M::Element> {
        Fraction::new(f.den.clone(), f.num.clone())
    }

    /// `f^k` by repeated multiplication.
    pub fn fraction_pow_direct(&self, f: &Fraction<M::Element>, k: usize) -> Result<Fraction<M::Element>> {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.fraction_mul(&acc, f)?;
        }
        Ok(acc)
    }

    /// `x f x^-1`.
    pub fn conjugate(&self, x: &M::Element, f: &Fraction<M::Element>) -> Result<Fraction<M::Element>> {
        let xf = self.fraction_mul(&self.embed(x), f)?;
        self.fraction_mul(&xf, &self.fraction_inv(&self.embed(x)))
    }

    /// Left-to-right evaluation of a word in generators and their inverses.
    pub fn eval_signed_word(&self, word: &[SignedLetter]) -> Result<Fraction<M::Element>> {
        let mut acc = self.one();
        for l in word {
            let g = self.monoid.generator(l.generator)?;
            let step = if l.inverse {
                Fraction::new(self.monoid.one(), g)
            } else {
                Fraction::new(g, self.monoid.one())
            };
            acc = self.fraction_mul(&acc, &step)?;
        }
        Ok(acc)
    }

    /// Strips the greatest common right divisor of numerator and
    /// denominator, `(a g) (b g)^-1 = a b^-1`, when the instance can compute
    /// one; otherwise returns `f` unchanged.
    pub fn normalize(&self, f: &Fraction<M::Element>) -> Result<Fraction<M::Element>> {
        self.check(f)?;
        match self.monoid.strip_right_gcd(&f.num, &f.den) {
            Some(stripped) => {
                let (num, den) = stripped?;
                Ok(Fraction::new(num, den))
            }
            None => Ok(f.clone()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::PositiveBraids;
    use crate::klein::{KleinLetter, KleinMonoid};
    use crate::toy::{Cyclic, FreeAbelian};
    use alloc::vec::Vec;
    use proptest::prelude::*;

    #[test]
    fn nk_equality_is_vector_difference() {
        let m = FreeAbelian::new(2).unwrap();
        let g = FractionGroup::new(&m);
        let f = Fraction::new(m.element(&[2, 1]).unwrap(), m.element(&[1, 1]).unwrap());
        let h = Fraction::new(m.element(&[1, 0]).unwrap(), m.one());
        assert!(g.fraction_eq(&f, &h).unwrap());
        let e1 = m.element(&[1, 0]).unwrap();
        let e2 = m.element(&[0, 1]).unwrap();
        let p = g
            .fraction_mul(&Fraction::new(e1.clone(), e2.clone()), &Fraction::new(e2, e1))
            .unwrap();
        assert!(g.fraction_eq(&p, &g.one()).unwrap());
    }

    #[test]
    fn braid_relation_gives_identity() {
        let b = PositiveBraids::new(3).unwrap();
        let g = FractionGroup::new(&b);
        let f = Fraction::new(
            b.braid_normal_form(&[0, 1, 0]).unwrap(),
            b.braid_normal_form(&[1, 0, 1]).unwrap(),
        );
        assert!(g.fraction_eq(&f, &g.one()).unwrap());
        assert!(g.is_identity(&f).unwrap());

        let (s1, s2) = (b.generator(0).unwrap(), b.generator(1).unwrap());
        let f = Fraction::new(s1.clone(), s2.clone());
        assert_eq!(g.fraction_inv(&f), Fraction::new(s2.clone(), s1.clone()));
        let p = g.fraction_mul(&f, &Fraction::new(s2, s1)).unwrap();
        assert!(g.fraction_eq(&p, &g.one()).unwrap());
        assert_eq!(g.fraction_inv(&g.one()), g.one());
    }

    #[test]
    fn klein_quotients() {
        let k = KleinMonoid::new();
        let g = FractionGroup::new(&k);
        let (x, y) = (k.generator(0).unwrap(), k.generator(1).unwrap());
        let xy = Fraction::new(x, y);
        let yx = g.fraction_inv(&xy);
        // the denominators y and x meet in D = y y = x x, so the cross
        // products are x y and y x, which differ
        assert_ne!(k.mul(&xy.num, &xy.den).unwrap(), k.mul(&yx.num, &yx.den).unwrap());
        assert!(!g.fraction_eq(&xy, &yx).unwrap());
        let back = g.fraction_mul(&g.fraction_inv(&xy), &xy).unwrap();
        assert!(g.fraction_eq(&back, &g.one()).unwrap());

        let word = [
            SignedLetter::positive(0),
            SignedLetter::positive(0),
            SignedLetter::negative(1),
            SignedLetter::negative(1),
        ];
        assert!(g
            .fraction_eq(&g.eval_signed_word(&word).unwrap(), &g.one())
            .unwrap());
        let xx = g.embed(&k.klein_normal_form(&[KleinLetter::X, KleinLetter::X]));
        let yy = g.embed(&k.klein_normal_form(&[KleinLetter::Y, KleinLetter::Y]));
        assert!(g.fraction_eq(&xx, &yy).unwrap());
    }

    #[test]
    fn signed_word_evaluation() {
        let b = PositiveBraids::new(3).unwrap();
        let g = FractionGroup::new(&b);
        let f = g
            .eval_signed_word(&[SignedLetter::positive(0), SignedLetter::negative(1)])
            .unwrap();
        let expected = Fraction::new(b.generator(0).unwrap(), b.generator(1).unwrap());
        assert!(g.fraction_eq(&f, &expected).unwrap());
        let f = g
            .eval_signed_word(&[SignedLetter::positive(0), SignedLetter::negative(0)])
            .unwrap();
        assert!(g.fraction_eq(&f, &g.one()).unwrap());
        assert!(g.eval_signed_word(&[SignedLetter::positive(5)]).is_err());
    }

    #[test]
    fn powers() {
        let c = Cyclic::new(6).unwrap();
        let g = FractionGroup::new(&c);
        let f = Fraction::new(c.element(5).unwrap(), c.element(1).unwrap());
        assert_eq!(g.fraction_pow_direct(&f, 0).unwrap(), g.one());
        assert!(g.fraction_eq(&g.fraction_pow_direct(&f, 1).unwrap(), &f).unwrap());
        assert!(g
            .fraction_eq(&g.fraction_pow_direct(&f, 3).unwrap(), &g.one())
            .unwrap());
    }

    #[test]
    fn normalize_keeps_the_value() {
        let b = PositiveBraids::new(4).unwrap();
        let g = FractionGroup::new(&b);
        let f = Fraction::new(
            b.braid_normal_form(&[2, 2, 0, 1]).unwrap(),
            b.braid_normal_form(&[0, 1, 0, 1]).unwrap(),
        );
        let n = g.normalize(&f).unwrap();
        assert!(g.fraction_eq(&f, &n).unwrap());
        assert_eq!(n.num, b.braid_normal_form(&[2, 2]).unwrap());
        assert_eq!(n.den, b.braid_normal_form(&[0, 1]).unwrap());
    }

    fn nk_strategy() -> impl Strategy<Value = (Vec<u64>, Vec<u64>)> {
        (
            proptest::collection::vec(0u64..5, 3),
            proptest::collection::vec(0u64..5, 3),
        )
    }

    proptest! {
        #[test]
        fn nk_fractions_are_integer_vectors(f in nk_strategy(), h in nk_strategy()) {
            let m = FreeAbelian::new(3).unwrap();
            let g = FractionGroup::new(&m);
            let fr = |p: &(Vec<u64>, Vec<u64>)| Fraction::new(m.element(&p.0).unwrap(), m.element(&p.1).unwrap());
            let diff = |p: &(Vec<u64>, Vec<u64>)| -> Vec<i64> {
                p.0.iter().zip(&p.1).map(|(&a, &b)| a as i64 - b as i64).collect()
            };
            prop_assert_eq!(g.fraction_eq(&fr(&f), &fr(&h)).unwrap(), diff(&f) == diff(&h));
            let prod = g.fraction_mul(&fr(&f), &fr(&h)).unwrap();
            let sum: Vec<i64> = diff(&f).iter().zip(diff(&h)).map(|(a, b)| a + b).collect();
            let got: Vec<i64> = prod.num.coords().iter().zip(prod.den.coords()).map(|(&a, &b)| a as i64 - b as i64).collect();
            prop_assert_eq!(got, sum);
        }

        #[test]
        fn embedding_is_injective(u in proptest::collection::vec(0usize..3, 0..6), v in proptest::collection::vec(0usize..3, 0..6)) {
            let b = PositiveBraids::new(4).unwrap();
            let g = FractionGroup::new(&b);
            let (x, y) = (b.braid_normal_form(&u).unwrap(), b.braid_normal_form(&v).unwrap());
            prop_assert_eq!(g.fraction_eq(&g.embed(&x), &g.embed(&y)).unwrap(), x == y);
        }
    }
}
