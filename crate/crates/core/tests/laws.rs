//! Monoid, lcm and group-of-fractions laws, checked through the public API
//! on every instance.

use lcm_core::braid::PositiveBraids;
use lcm_core::klein::KleinMonoid;
use lcm_core::monoid::is_right_lcm;
use lcm_core::toy::{Cyclic, FreeAbelian};
use lcm_core::{Fraction, FractionGroup, LcmMonoid};
use proptest::prelude::*;

type Words = (Vec<usize>, Vec<usize>, Vec<usize>);

fn words(gens: usize, max_len: usize) -> impl Strategy<Value = Words> {
    let w = move || proptest::collection::vec(0..gens, 0..=max_len);
    (w(), w(), w())
}

fn monoid_laws<M: LcmMonoid>(m: &M, (u, v, w): &Words) -> Result<(), TestCaseError> {
    let (a, b, c) = (m.word(u).unwrap(), m.word(v).unwrap(), m.word(w).unwrap());
    let one = m.one();
    prop_assert_eq!(m.mul(&a, &one).unwrap(), a.clone());
    prop_assert_eq!(m.mul(&one, &a).unwrap(), a.clone());
    let ab_c = m.mul(&m.mul(&a, &b).unwrap(), &c).unwrap();
    let a_bc = m.mul(&a, &m.mul(&b, &c).unwrap()).unwrap();
    prop_assert_eq!(&ab_c, &a_bc);

    let ab = m.mul(&a, &b).unwrap();
    prop_assert_eq!(m.left_cancel(&a, &ab).unwrap(), b.clone());
    prop_assert!(m.left_divides(&a, &ab).unwrap());

    let cert = m.right_lcm(&a, &b).unwrap();
    prop_assert!(cert.is_sound(m).unwrap());
    prop_assert!(is_right_lcm(m, &a, &b, &cert.join).unwrap());
    prop_assert!(is_right_lcm(m, &b, &a, &cert.join).unwrap());
    // the join divides the common multiple (a b) c' built from lcm(a b, b)
    let other = m.right_lcm(&ab, &b).unwrap().join;
    prop_assert!(m.left_divides(&cert.join, &other).unwrap());
    Ok(())
}

fn group_laws<M: LcmMonoid>(m: &M, (u, v, w): &Words) -> Result<(), TestCaseError> {
    let g = FractionGroup::new(m);
    let f = Fraction::new(m.word(u).unwrap(), m.word(v).unwrap());
    let h = Fraction::new(m.word(v).unwrap(), m.word(w).unwrap());
    let k = Fraction::new(m.word(w).unwrap(), m.word(u).unwrap());
    let one = g.one();
    prop_assert!(g.fraction_eq(&g.fraction_mul(&f, &one).unwrap(), &f).unwrap());
    prop_assert!(g.fraction_eq(&g.fraction_mul(&one, &f).unwrap(), &f).unwrap());
    let inv = g.fraction_inv(&f);
    prop_assert!(g.fraction_eq(&g.fraction_mul(&f, &inv).unwrap(), &one).unwrap());
    prop_assert!(g.fraction_eq(&g.fraction_mul(&inv, &f).unwrap(), &one).unwrap());
    let fh_k = g.fraction_mul(&g.fraction_mul(&f, &h).unwrap(), &k).unwrap();
    let f_hk = g.fraction_mul(&f, &g.fraction_mul(&h, &k).unwrap()).unwrap();
    prop_assert!(g.fraction_eq(&fh_k, &f_hk).unwrap());
    // u v^-1 * v w^-1 * w u^-1 = 1
    prop_assert!(g.fraction_eq(&fh_k, &one).unwrap());
    prop_assert!(g.fraction_eq(&g.normalize(&fh_k).unwrap(), &fh_k).unwrap());
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn braids(ws in words(3, 6)) {
        let b = PositiveBraids::new(4).unwrap();
        monoid_laws(&b, &ws)?;
        group_laws(&b, &ws)?;
    }

    #[test]
    fn braids_on_six_strands(ws in words(5, 5)) {
        let b = PositiveBraids::new(6).unwrap();
        monoid_laws(&b, &ws)?;
        group_laws(&b, &ws)?;
    }

    #[test]
    fn klein(ws in words(2, 8)) {
        monoid_laws(&KleinMonoid::new(), &ws)?;
        group_laws(&KleinMonoid::new(), &ws)?;
    }

    #[test]
    fn free_abelian(ws in words(3, 8)) {
        let m = FreeAbelian::new(3).unwrap();
        monoid_laws(&m, &ws)?;
        group_laws(&m, &ws)?;
    }

    #[test]
    fn cyclic(ws in words(1, 12), n in 1u32..9) {
        let m = Cyclic::new(n).unwrap();
        monoid_laws(&m, &ws)?;
        group_laws(&m, &ws)?;
    }
}
