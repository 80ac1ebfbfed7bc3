//! Torsion detection in a group of right fractions.
//!
//! Starting from `z = x1 y1^-1`, repeatedly rewrite `yi^-1 xi` as
//! `x(i+1) y(i+1)^-1` through an lcm certificate. With `X_k = x1..xk` and
//! `Y_k = y1..yk` the chain satisfies
//!
//! * `X_k y(k+1)..y(k+l) = Y_l x(l+1)..x(l+k)`, a right lcm of `X_k`, `Y_l`;
//! * `z = X_k (x(k+1) y(k+1)^-1) X_k^-1`;
//! * `z^k = X_k Y_k^-1`.
//!
//! So `z^p = 1` exactly when `X_p = Y_p`, and then `y(p+1)` must be a unit,
//! which turns `t = x(p+1) y(p+1)^-1` into an element of `M` with
//! `z = X_p t X_p^-1`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{MonoidError, Result};
use crate::fraction::{Fraction, FractionGroup};
use crate::monoid::{is_right_lcm, LcmCertificate, LcmMonoid};
use crate::oracle::BfsOracle;

/// `(x1, y1), (x2, y2), ..` with `certs[i]` linking pair `i` to pair `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairSequence<E> {
    pairs: Vec<(E, E)>,
    certs: Vec<LcmCertificate<E>>,
}

impl<E: Clone> PairSequence<E> {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[(E, E)] {
        &self.pairs
    }

    pub fn certificates(&self) -> &[LcmCertificate<E>] {
        &self.certs
    }

    /// `x_i`, one based.
    pub fn x(&self, i: usize) -> &E {
        &self.pairs[i - 1].0
    }

    /// `y_i`, one based.
    pub fn y(&self, i: usize) -> &E {
        &self.pairs[i - 1].1
    }

    fn require(&self, needed: usize) -> Result<()> {
        if self.pairs.len() < needed {
            Err(MonoidError::InsufficientPairs {
                needed,
                available: self.pairs.len(),
            })
        } else {
            Ok(())
        }
    }

    /// `x_from .. x_to`, one based and inclusive; the identity when empty.
    pub fn x_range<M: LcmMonoid<Element = E> + ?Sized>(
        &self,
        monoid: &M,
        from: usize,
        to: usize,
    ) -> Result<E> {
        self.require(to)?;
        monoid.product(
            self.pairs[from.max(1) - 1..to.max(from.max(1) - 1)]
                .iter()
                .map(|p| &p.0),
        )
    }

    pub fn y_range<M: LcmMonoid<Element = E> + ?Sized>(
        &self,
        monoid: &M,
        from: usize,
        to: usize,
    ) -> Result<E> {
        self.require(to)?;
        monoid.product(
            self.pairs[from.max(1) - 1..to.max(from.max(1) - 1)]
                .iter()
                .map(|p| &p.1),
        )
    }

    /// Every certificate is sound and matches the pairs it links.
    pub fn is_sound<M: LcmMonoid<Element = E> + ?Sized>(&self, monoid: &M) -> Result<bool>
    where
        E: Eq,
    {
        for (i, c) in self.certs.iter().enumerate() {
            let (x, y) = &self.pairs[i];
            let (nx, ny) = &self.pairs[i + 1];
            if c.left != *x || c.right != *y || c.left_comp != *ny || c.right_comp != *nx {
                return Ok(false);
            }
            if !c.is_sound(monoid)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `z = conjugator * torsion * conjugator^-1` with `torsion^order = 1` in `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionWitness<E> {
    pub order: usize,
    pub conjugator: E,
    pub torsion: E,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TorsionVerdict<E> {
    /// `z^q != 1` for every `1 <= q <= p_max`.
    NoTorsionUpTo(usize),
    Witness(TorsionWitness<E>),
}

/// The first `count` pairs of the chain starting at `z`.
pub fn build_pairs<M: LcmMonoid + ?Sized>(
    monoid: &M,
    z: &Fraction<M::Element>,
    count: usize,
) -> Result<PairSequence<M::Element>> {
    if count == 0 {
        return Err(MonoidError::Malformed(String::from(
            "a pair sequence needs count >= 1",
        )));
    }
    monoid.check(&z.num)?;
    monoid.check(&z.den)?;
    let mut pairs = Vec::with_capacity(count);
    let mut certs = Vec::with_capacity(count - 1);
    pairs.push((z.num.clone(), z.den.clone()));
    while pairs.len() < count {
        let (x, y) = pairs.last().expect("non-empty");
        // x y' = y x'  gives  x(i+1) = x', y(i+1) = y'
        let cert = monoid.right_lcm(x, y)?;
        pairs.push((cert.right_comp.clone(), cert.left_comp.clone()));
        certs.push(cert);
    }
    Ok(PairSequence { pairs, certs })
}

/// `(X_k, Y_l, lhs, rhs)` of the first identity.
type Eq1Sides<E> = (E, E, E, E);

fn eq1_sides<M: LcmMonoid + ?Sized>(
    monoid: &M,
    seq: &PairSequence<M::Element>,
    k: usize,
    l: usize,
) -> Result<Eq1Sides<M::Element>> {
    seq.require(k + l)?;
    let xk = seq.x_range(monoid, 1, k)?;
    let yl = seq.y_range(monoid, 1, l)?;
    let lhs = monoid.mul(&xk, &seq.y_range(monoid, k + 1, k + l)?)?;
    let rhs = monoid.mul(&yl, &seq.x_range(monoid, l + 1, l + k)?)?;
    Ok((xk, yl, lhs, rhs))
}

/// `X_k y(k+1)..y(k+l) = Y_l x(l+1)..x(l+k)`, and that value is a right lcm
/// of `X_k` and `Y_l` (checked against the instance's own lcm up to units).
pub fn check_eq1<M: LcmMonoid + ?Sized>(
    monoid: &M,
    seq: &PairSequence<M::Element>,
    k: usize,
    l: usize,
) -> Result<bool> {
    let (xk, yl, lhs, rhs) = eq1_sides(monoid, seq, k, l)?;
    Ok(lhs == rhs && is_right_lcm(monoid, &xk, &yl, &lhs)?)
}

/// [`check_eq1`] with the lcm property decided by brute-force enumeration.
pub fn check_eq1_oracle<M: LcmMonoid + ?Sized>(
    oracle: &BfsOracle<'_, M>,
    monoid: &M,
    seq: &PairSequence<M::Element>,
    k: usize,
    l: usize,
) -> Result<bool> {
    let (xk, yl, lhs, rhs) = eq1_sides(monoid, seq, k, l)?;
    Ok(lhs == rhs && oracle.lcm_set(&xk, &yl)?.contains(&lhs))
}

/// `z = X_k (x(k+1) / y(k+1)) X_k^-1` in the group.
pub fn check_eq2<M: LcmMonoid + ?Sized>(
    group: &FractionGroup<'_, M>,
    seq: &PairSequence<M::Element>,
    z: &Fraction<M::Element>,
    k: usize,
) -> Result<bool> {
    seq.require(k + 1)?;
    let monoid = group.monoid();
    let xk = seq.x_range(monoid, 1, k)?;
    let inner = Fraction::new(seq.x(k + 1).clone(), seq.y(k + 1).clone());
    group.fraction_eq(&group.conjugate(&xk, &inner)?, z)
}

/// `z^k = X_k / Y_k`, against repeated multiplication.
pub fn check_eq3<M: LcmMonoid + ?Sized>(
    group: &FractionGroup<'_, M>,
    seq: &PairSequence<M::Element>,
    z: &Fraction<M::Element>,
    k: usize,
) -> Result<bool> {
    seq.require(k)?;
    let monoid = group.monoid();
    let chain = Fraction::new(seq.x_range(monoid, 1, k)?, seq.y_range(monoid, 1, k)?);
    group.fraction_eq(&group.fraction_pow_direct(z, k)?, &chain)
}

/// Looks for the least `p <= p_max` with `z^p = 1` and extracts a witness.
pub fn torsion_check<M: LcmMonoid + ?Sized>(
    monoid: &M,
    z: &Fraction<M::Element>,
    p_max: usize,
) -> Result<TorsionVerdict<M::Element>> {
    if p_max == 0 {
        return Err(MonoidError::Malformed(String::from("p_max must be at least 1")));
    }
    let seq = build_pairs(monoid, z, p_max + 1)?;
    let mut xp = monoid.one();
    let mut yp = monoid.one();
    for p in 1..=p_max {
        xp = monoid.mul(&xp, seq.x(p))?;
        yp = monoid.mul(&yp, seq.y(p))?;
        if xp != yp {
            continue;
        }
        let unit = seq.y(p + 1);
        if !monoid.is_unit(unit) {
            return Err(MonoidError::InternalInvariantViolation(format!(
                "z^{p} = 1 but y{} = {unit:?} is not a unit",
                p + 1
            )));
        }
        let inverse = monoid.left_cancel(unit, &monoid.one())?;
        let witness = TorsionWitness {
            order: p,
            conjugator: xp,
            torsion: monoid.mul(seq.x(p + 1), &inverse)?,
        };
        if !witness_is_sound(&FractionGroup::new(monoid), z, &witness)? {
            return Err(MonoidError::InternalInvariantViolation(format!(
                "witness {witness:?} does not reproduce z"
            )));
        }
        return Ok(TorsionVerdict::Witness(witness));
    }
    Ok(TorsionVerdict::NoTorsionUpTo(p_max))
}

/// `torsion^order = 1` in `M` and `z = conjugator * torsion * conjugator^-1`.
pub fn witness_is_sound<M: LcmMonoid + ?Sized>(
    group: &FractionGroup<'_, M>,
    z: &Fraction<M::Element>,
    w: &TorsionWitness<M::Element>,
) -> Result<bool> {
    let monoid = group.monoid();
    let power = monoid.product(core::iter::repeat_n(&w.torsion, w.order))?;
    if power != monoid.one() {
        return Ok(false);
    }
    group.fraction_eq(&group.conjugate(&w.conjugator, &group.embed(&w.torsion))?, z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::PositiveBraids;
    use crate::klein::KleinMonoid;
    use crate::toy::{Cyclic, FreeAbelian};
    use crate::twist::UnitTwisted;

    fn s1_over_s2(b: &PositiveBraids) -> Fraction<crate::braid::BraidElement> {
        Fraction::new(b.generator(0).unwrap(), b.generator(1).unwrap())
    }

    #[test]
    fn braid_chain_starts_as_expected() {
        let b = PositiveBraids::new(3).unwrap();
        let seq = build_pairs(&b, &s1_over_s2(&b), 3).unwrap();
        assert_eq!(seq.x(2), &b.braid_normal_form(&[0, 1]).unwrap());
        assert_eq!(seq.y(2), &b.braid_normal_form(&[1, 0]).unwrap());
        assert!(seq.is_sound(&b).unwrap());
    }

    #[test]
    fn trivial_fraction_chain_is_constant() {
        let b = PositiveBraids::new(3).unwrap();
        let seq = build_pairs(&b, &FractionGroup::new(&b).one(), 4).unwrap();
        assert!(seq
            .pairs()
            .iter()
            .all(|(x, y)| x.is_identity() && y.is_identity()));
    }

    #[test]
    fn cyclic_chain_alternates() {
        let c = Cyclic::new(2).unwrap();
        let (one, zero) = (c.element(1).unwrap(), c.element(0).unwrap());
        let seq = build_pairs(&c, &Fraction::new(one, zero), 4).unwrap();
        let got: Vec<(u32, u32)> = seq
            .pairs()
            .iter()
            .map(|(x, y)| (x.residue(), y.residue()))
            .collect();
        assert_eq!(got, alloc::vec![(1, 0), (0, 1), (1, 0), (0, 1)]);
    }

    #[test]
    fn identities_on_examples() {
        let b = PositiveBraids::new(3).unwrap();
        let g = FractionGroup::new(&b);
        let z = s1_over_s2(&b);
        let seq = build_pairs(&b, &z, 7).unwrap();
        assert!(check_eq1(&b, &seq, 1, 1).unwrap());
        assert!(check_eq1(&b, &seq, 2, 1).unwrap());
        for k in 1..=3 {
            assert!(check_eq2(&g, &seq, &z, k).unwrap());
        }
        assert!(check_eq3(&g, &seq, &z, 4).unwrap());
        assert_eq!(
            check_eq3(&g, &seq, &z, 8),
            Err(MonoidError::InsufficientPairs {
                needed: 8,
                available: 7
            })
        );
        // z^2 computed both ways
        let chain = Fraction::new(seq.x_range(&b, 1, 2).unwrap(), seq.y_range(&b, 1, 2).unwrap());
        assert!(g
            .fraction_eq(&g.fraction_pow_direct(&z, 2).unwrap(), &chain)
            .unwrap());

        let c = Cyclic::new(2).unwrap();
        let g = FractionGroup::new(&c);
        let z = Fraction::new(c.element(1).unwrap(), c.element(0).unwrap());
        let seq = build_pairs(&c, &z, 5).unwrap();
        assert!(check_eq1(&c, &seq, 2, 2).unwrap());
        assert!(check_eq3(&g, &seq, &z, 2).unwrap());
        assert!(g
            .fraction_eq(&g.fraction_pow_direct(&z, 2).unwrap(), &g.one())
            .unwrap());

        let k = KleinMonoid::new();
        let g = FractionGroup::new(&k);
        let z = Fraction::new(k.generator(0).unwrap(), k.generator(1).unwrap());
        let seq = build_pairs(&k, &z, 4).unwrap();
        assert!(check_eq2(&g, &seq, &z, 2).unwrap());
    }

    #[test]
    fn eq1_against_oracle() {
        let k = KleinMonoid::new();
        let z = Fraction::new(k.generator(0).unwrap(), k.generator(1).unwrap());
        let seq = build_pairs(&k, &z, 7).unwrap();
        let oracle = BfsOracle::new(&k, 16);
        for a in 1..=3 {
            for l in 1..=3 {
                assert!(check_eq1_oracle(&oracle, &k, &seq, a, l).unwrap());
            }
        }
    }

    #[test]
    fn verdicts_on_examples() {
        let b = PositiveBraids::new(3).unwrap();
        assert_eq!(
            torsion_check(&b, &FractionGroup::new(&b).one(), 6).unwrap(),
            TorsionVerdict::Witness(TorsionWitness {
                order: 1,
                conjugator: b.one(),
                torsion: b.one(),
            })
        );
        assert_eq!(
            torsion_check(&b, &s1_over_s2(&b), 6).unwrap(),
            TorsionVerdict::NoTorsionUpTo(6)
        );

        let c = Cyclic::new(2).unwrap();
        let z = Fraction::new(c.element(1).unwrap(), c.element(0).unwrap());
        let TorsionVerdict::Witness(w) = torsion_check(&c, &z, 2).unwrap() else {
            panic!("Z/2 has torsion");
        };
        assert_eq!(w.order, 2);
        assert_eq!((w.conjugator.residue(), w.torsion.residue()), (1, 1));
        assert!(witness_is_sound(&FractionGroup::new(&c), &z, &w).unwrap());

        let n = FreeAbelian::new(2).unwrap();
        let z = Fraction::new(n.element(&[1, 0]).unwrap(), n.element(&[0, 1]).unwrap());
        assert_eq!(
            torsion_check(&n, &z, 6).unwrap(),
            TorsionVerdict::NoTorsionUpTo(6)
        );
        assert!(torsion_check(&n, &z, 0).is_err());
    }

    #[test]
    fn verdict_ignores_the_lcm_representative() {
        for n in 1..=8u32 {
            let plain = Cyclic::new(n).unwrap();
            let twisted = UnitTwisted::new(
                plain,
                move |a: &crate::toy::CyclicElement, b: &crate::toy::CyclicElement| {
                    plain
                        .element((a.residue() * 3 + b.residue() * 5 + 1) % n)
                        .unwrap()
                },
            );
            for a in plain.all() {
                for b in plain.all() {
                    let z = Fraction::new(a, b);
                    let (p, q) = (
                        torsion_check(&plain, &z, 8).unwrap(),
                        torsion_check(&twisted, &z, 8).unwrap(),
                    );
                    let order = |v: &TorsionVerdict<_>| match v {
                        TorsionVerdict::Witness(w) => Some(w.order),
                        TorsionVerdict::NoTorsionUpTo(_) => None,
                    };
                    assert_eq!(order(&p), order(&q));
                    if let TorsionVerdict::Witness(w) = q {
                        assert!(witness_is_sound(&FractionGroup::new(&twisted), &z, &w).unwrap());
                    }
                }
            }
        }
    }
}
