//! The monoid `K+ = <x, y | x^2 = y^2>` and its group of fractions.
//!
//! `D = x^2 = y^2` is central (`x D = x^3 = D x`, `y D = y^3 = D y`), so every
//! element is `D^d` times an alternating word in `x` and `y`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{MonoidError, Result};
use crate::monoid::{LcmCertificate, LcmMonoid, MonoidCapabilities, SignedLetter};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum KleinLetter {
    X,
    Y,
}

impl KleinLetter {
    pub fn other(self) -> Self {
        match self {
            KleinLetter::X => KleinLetter::Y,
            KleinLetter::Y => KleinLetter::X,
        }
    }

    pub fn index(self) -> usize {
        match self {
            KleinLetter::X => 0,
            KleinLetter::Y => 1,
        }
    }

    pub fn from_index(i: usize) -> Option<Self> {
        match i {
            0 => Some(KleinLetter::X),
            1 => Some(KleinLetter::Y),
            _ => None,
        }
    }
}

/// An alternating word, stored as its first letter and its length.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Tail {
    start: Option<KleinLetter>,
    len: usize,
}

impl Tail {
    pub const EMPTY: Tail = Tail { start: None, len: 0 };

    pub fn new(start: KleinLetter, len: usize) -> Self {
        if len == 0 {
            Tail::EMPTY
        } else {
            Tail {
                start: Some(start),
                len,
            }
        }
    }

    pub fn start(&self) -> Option<KleinLetter> {
        self.start
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    fn letter(&self, k: usize) -> KleinLetter {
        let s = self.start.expect("non-empty tail");
        if k.is_multiple_of(2) {
            s
        } else {
            s.other()
        }
    }

    fn last(&self) -> Option<KleinLetter> {
        (self.len > 0).then(|| self.letter(self.len - 1))
    }

    fn reversed(&self) -> Tail {
        match self.last() {
            Some(l) => Tail::new(l, self.len),
            None => Tail::EMPTY,
        }
    }

    pub fn letters(&self) -> impl Iterator<Item = KleinLetter> + '_ {
        (0..self.len).map(|k| self.letter(k))
    }

    /// Concatenation followed by the cascade `ll -> D`; returns the tail
    /// left over and how many `D`s were produced.
    fn join(self, next: Tail) -> (Tail, usize) {
        match (self.last(), next.start) {
            (Some(l), Some(f)) if l == f => {
                let m = self.len.min(next.len);
                let tail = if self.len > next.len {
                    Tail::new(self.letter(0), self.len - m)
                } else if next.len > self.len {
                    Tail::new(next.letter(m), next.len - m)
                } else {
                    Tail::EMPTY
                };
                (tail, m)
            }
            (None, _) => (next, 0),
            (_, None) => (self, 0),
            _ => (
                Tail {
                    start: self.start,
                    len: self.len + next.len,
                },
                0,
            ),
        }
    }
}

/// `D^delta_power * tail`, the normal form of an element of `K+`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KleinElement {
    delta_power: u64,
    tail: Tail,
}

impl KleinElement {
    pub fn delta_power(&self) -> u64 {
        self.delta_power
    }

    pub fn tail(&self) -> Tail {
        self.tail
    }

    pub fn length(&self) -> usize {
        2 * self.delta_power as usize + self.tail.len
    }
}

/// Image in the abelianization `Z + Z/2` of the group: total signed letter
/// count and signed count of `y` letters mod 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AbelianImage {
    pub degree: i64,
    pub parity: u8,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConjugacyCertificate {
    /// The abelian images differ, which rules out conjugacy.
    NonConjugate { left: AbelianImage, right: AbelianImage },
    /// The invariant does not separate the two words.
    Inconclusive,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct KleinMonoid;

impl KleinMonoid {
    pub fn new() -> Self {
        KleinMonoid
    }

    pub fn element(&self, delta_power: u64, tail: Tail) -> KleinElement {
        KleinElement { delta_power, tail }
    }

    pub fn delta(&self) -> KleinElement {
        self.element(1, Tail::EMPTY)
    }

    pub fn klein_normal_form(&self, word: &[KleinLetter]) -> KleinElement {
        let mut delta_power = 0;
        let mut tail = Tail::EMPTY;
        for &l in word {
            let (t, m) = tail.join(Tail::new(l, 1));
            tail = t;
            delta_power += m as u64;
        }
        KleinElement { delta_power, tail }
    }

    /// The shortest common right multiple, which is the right lcm.
    ///
    /// Every candidate is `D^n t` for an alternating `t`. For a fixed `t`
    /// the divisibility conditions give the least admissible `n` directly,
    /// and tails longer than both arguments' tails only add length, so the
    /// search runs over `O(|ta| + |tb|)` shapes.
    pub fn klein_right_lcm(&self, a: &KleinElement, b: &KleinElement) -> LcmCertificate<KleinElement> {
        let need = |e: &KleinElement, t: Tail| -> u64 {
            // e divides D^n t iff n >= d + |te| - cascade(rev(te), t)
            let (_, m) = e.tail.reversed().join(t);
            (e.delta_power + e.tail.len as u64).saturating_sub(m as u64)
        };
        let longest = a.tail.len.max(b.tail.len);
        let shapes = core::iter::once(Tail::EMPTY).chain(
            (1..=longest).flat_map(|len| [Tail::new(KleinLetter::X, len), Tail::new(KleinLetter::Y, len)]),
        );
        let join = shapes
            .map(|t| KleinElement {
                delta_power: need(a, t).max(need(b, t)),
                tail: t,
            })
            .min_by_key(|e| (e.length(), *e))
            .expect("at least the empty shape");
        LcmCertificate {
            left: *a,
            right: *b,
            left_comp: self.quotient(a, &join).expect("join is a multiple of a"),
            right_comp: self.quotient(b, &join).expect("join is a multiple of b"),
            join,
        }
    }

    /// `a^-1 c` computed in the group, if it lies in the monoid.
    fn quotient(&self, a: &KleinElement, c: &KleinElement) -> Option<KleinElement> {
        // t^-1 = D^-|t| rev(t) for an alternating t
        let (tail, m) = a.tail.reversed().join(c.tail);
        let power = c.delta_power as i128 - a.delta_power as i128 - a.tail.len as i128 + m as i128;
        (power >= 0).then_some(KleinElement {
            delta_power: power as u64,
            tail,
        })
    }

    pub fn abelianize(&self, word: &[SignedLetter]) -> Result<AbelianImage> {
        let mut degree = 0i64;
        let mut ys = 0i64;
        for l in word {
            let letter = self.letter(l.generator)?;
            let sign = if l.inverse { -1 } else { 1 };
            degree += sign;
            if letter == KleinLetter::Y {
                ys += sign;
            }
        }
        Ok(AbelianImage {
            degree,
            parity: ys.rem_euclid(2) as u8,
        })
    }

    /// Conjugation acts trivially on the abelianization, so different
    /// images prove non-conjugacy. Equal images prove nothing.
    pub fn certify_nonconjugate(
        &self,
        a: &[SignedLetter],
        b: &[SignedLetter],
    ) -> Result<ConjugacyCertificate> {
        let (left, right) = (self.abelianize(a)?, self.abelianize(b)?);
        Ok(if left != right {
            ConjugacyCertificate::NonConjugate { left, right }
        } else {
            ConjugacyCertificate::Inconclusive
        })
    }

    fn letter(&self, generator: usize) -> Result<KleinLetter> {
        KleinLetter::from_index(generator).ok_or(MonoidError::GeneratorOutOfRange {
            index: generator,
            count: 2,
        })
    }
}

impl LcmMonoid for KleinMonoid {
    type Element = KleinElement;

    fn name(&self) -> String {
        String::from("klein")
    }

    fn capabilities(&self) -> MonoidCapabilities {
        MonoidCapabilities {
            has_trivial_units: true,
            supports_left_gcd: false,
            generator_count: 2,
        }
    }

    fn one(&self) -> KleinElement {
        self.element(0, Tail::EMPTY)
    }

    fn generator(&self, index: usize) -> Result<KleinElement> {
        Ok(self.element(0, Tail::new(self.letter(index)?, 1)))
    }

    fn check(&self, _a: &KleinElement) -> Result<()> {
        Ok(())
    }

    fn mul(&self, a: &KleinElement, b: &KleinElement) -> Result<KleinElement> {
        let (tail, m) = a.tail.join(b.tail);
        let delta_power = a.delta_power + b.delta_power + m as u64;
        Ok(KleinElement { delta_power, tail })
    }

    fn left_cancel(&self, a: &KleinElement, c: &KleinElement) -> Result<KleinElement> {
        self.quotient(a, c).ok_or(MonoidError::NotLeftMultiple)
    }

    fn right_lcm(&self, a: &KleinElement, b: &KleinElement) -> Result<LcmCertificate<KleinElement>> {
        Ok(self.klein_right_lcm(a, b))
    }

    fn is_unit(&self, a: &KleinElement) -> bool {
        a.length() == 0
    }

    fn degree(&self, a: &KleinElement) -> Option<usize> {
        Some(a.length())
    }
}

impl core::fmt::Display for KleinElement {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.delta_power {
            0 => {}
            1 => parts.push(String::from("D")),
            d => parts.push(format!("D^{d}")),
        }
        for l in self.tail.letters() {
            parts.push(String::from(match l {
                KleinLetter::X => "x",
                KleinLetter::Y => "y",
            }));
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}
