//! The positive braid monoid `B_n^+`.
//!
//! Elements are kept in left-greedy normal form: a product of non-trivial
//! simple braids in which each factor is as large as its left neighbour
//! allows. Right lcms come from subword reversing at the generator level,
//! which produces both complements at once.

mod reversing;
mod simple;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

pub use reversing::{
    generator_complement, ComplementTable, GridCell, Reversal, ReversingGrid, DEFAULT_STEP_CAP,
};
pub use simple::Simple;

use crate::error::{MonoidError, Result};
use crate::monoid::{LcmCertificate, LcmMonoid, MonoidCapabilities};
use simple::left_weight;

/// Largest supported strand count.
pub const MAX_STRANDS: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BraidElement {
    strands: usize,
    factors: Vec<Simple>,
}

impl BraidElement {
    pub fn strands(&self) -> usize {
        self.strands
    }

    /// Left-greedy factors; empty for the identity.
    pub fn factors(&self) -> &[Simple] {
        &self.factors
    }

    /// Concatenated reduced words of the factors, zero-based generators.
    pub fn word(&self) -> Vec<usize> {
        self.factors.iter().flat_map(Simple::word).collect()
    }

    pub fn length(&self) -> usize {
        self.factors.iter().map(Simple::length).sum()
    }

    pub fn is_identity(&self) -> bool {
        self.factors.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct PositiveBraids {
    n: usize,
    table: ComplementTable,
    step_cap: usize,
}

impl PositiveBraids {
    pub fn new(n: usize) -> Result<Self> {
        if !(2..=MAX_STRANDS).contains(&n) {
            return Err(MonoidError::Malformed(format!(
                "braid monoid needs 2..={MAX_STRANDS} strands, got {n}"
            )));
        }
        Ok(PositiveBraids {
            n,
            table: ComplementTable::new(n),
            step_cap: DEFAULT_STEP_CAP,
        })
    }

    pub fn with_step_cap(mut self, cap: usize) -> Self {
        self.step_cap = cap;
        self
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn complement_table(&self) -> &ComplementTable {
        &self.table
    }

    /// The Garside element, the half twist.
    pub fn delta(&self) -> BraidElement {
        BraidElement {
            strands: self.n,
            factors: alloc::vec![Simple::delta(self.n)],
        }
    }

    fn check_word(&self, word: &[usize]) -> Result<()> {
        match word.iter().find(|&&g| g + 1 >= self.n) {
            Some(&index) => Err(MonoidError::GeneratorOutOfRange {
                index,
                count: self.n - 1,
            }),
            None => Ok(()),
        }
    }

    /// Normal form of a positive word in zero-based generators.
    pub fn braid_normal_form(&self, word: &[usize]) -> Result<BraidElement> {
        self.check_word(word)?;
        let mut factors = Vec::new();
        for &g in word {
            append_simple(&mut factors, Simple::generator(self.n, g));
        }
        Ok(self.finish(factors))
    }

    /// Builds an element from explicit factors, rejecting anything that is
    /// not already a left-greedy normal form.
    pub fn from_factors(&self, factors: Vec<Simple>) -> Result<BraidElement> {
        if let Some(f) = factors.iter().find(|f| f.strands() != self.n) {
            return Err(MonoidError::Malformed(format!(
                "factor on {} strands in braid:{}",
                f.strands(),
                self.n
            )));
        }
        if factors.iter().any(Simple::is_identity) {
            return Err(MonoidError::Malformed(String::from("identity factor")));
        }
        if factors.windows(2).any(|p| !p[0].is_left_weighted(&p[1])) {
            return Err(MonoidError::Malformed(String::from(
                "factors are not left weighted",
            )));
        }
        Ok(BraidElement {
            strands: self.n,
            factors,
        })
    }

    fn finish(&self, mut factors: Vec<Simple>) -> BraidElement {
        factors.retain(|f| !f.is_identity());
        debug_assert!(factors.windows(2).all(|p| p[0].is_left_weighted(&p[1])));
        BraidElement {
            strands: self.n,
            factors,
        }
    }

    /// `s\t` for generators `s`, `t`.
    pub fn simple_complement(&self, s: usize, t: usize) -> Result<Vec<usize>> {
        self.check_word(&[s, t])?;
        Ok(self.table.get(s, t).to_vec())
    }

    /// Reverses `num^-1 den` into `pos neg^-1`, so that
    /// `num * pos = den * neg` is the right lcm of the two words.
    pub fn reverse(&self, den: &[usize], num: &[usize]) -> Result<Reversal> {
        self.check_word(den)?;
        self.check_word(num)?;
        reversing::reverse_words(&self.table, den, num, self.step_cap, None)
    }

    /// [`Self::reverse`], keeping every elementary step.
    pub fn reverse_traced(&self, den: &[usize], num: &[usize]) -> Result<ReversingGrid> {
        self.check_word(den)?;
        self.check_word(num)?;
        let mut cells = Vec::new();
        let result = reversing::reverse_words(&self.table, den, num, self.step_cap, Some(&mut cells))?;
        Ok(ReversingGrid {
            den: den.to_vec(),
            num: num.to_vec(),
            cells,
            result,
        })
    }

    /// Each cell of the grid is a valid relation `s (s\t) = t (t\s)`, and the
    /// outcome satisfies `num * pos = den * neg`.
    pub fn grid_is_valid(&self, grid: &ReversingGrid) -> Result<bool> {
        for c in &grid.cells {
            let lhs: Vec<usize> = core::iter::once(c.s).chain(c.s_comp.iter().copied()).collect();
            let rhs: Vec<usize> = core::iter::once(c.t).chain(c.t_comp.iter().copied()).collect();
            if self.braid_normal_form(&lhs)? != self.braid_normal_form(&rhs)? {
                return Ok(false);
            }
        }
        let lhs: Vec<usize> = grid.num.iter().chain(&grid.result.pos).copied().collect();
        let rhs: Vec<usize> = grid.den.iter().chain(&grid.result.neg).copied().collect();
        Ok(self.braid_normal_form(&lhs)? == self.braid_normal_form(&rhs)?)
    }

    pub fn braid_right_lcm(
        &self,
        a: &BraidElement,
        b: &BraidElement,
    ) -> Result<LcmCertificate<BraidElement>> {
        self.check(a)?;
        self.check(b)?;
        let r = self.reverse(&b.word(), &a.word())?;
        let left_comp = self.braid_normal_form(&r.pos)?;
        let right_comp = self.braid_normal_form(&r.neg)?;
        let join = self.mul(a, &left_comp)?;
        debug_assert_eq!(self.mul(b, &right_comp).ok().as_ref(), Some(&join));
        Ok(LcmCertificate {
            left: a.clone(),
            right: b.clone(),
            left_comp,
            right_comp,
            join,
        })
    }

    pub fn braid_left_cancel(&self, a: &BraidElement, c: &BraidElement) -> Result<BraidElement> {
        self.check(a)?;
        self.check(c)?;
        if a.length() > c.length() {
            return Err(MonoidError::NotLeftMultiple);
        }
        // c * pos = a * neg is lcm(a, c); a divides c iff that lcm is c
        let r = self.reverse(&a.word(), &c.word())?;
        if !r.pos.is_empty() {
            return Err(MonoidError::NotLeftMultiple);
        }
        self.braid_normal_form(&r.neg)
    }

    /// The image under the anti-automorphism reversing every word.
    pub fn reversed(&self, a: &BraidElement) -> Result<BraidElement> {
        self.check(a)?;
        let mut w = a.word();
        w.reverse();
        self.braid_normal_form(&w)
    }

    fn strip_generator(&self, i: usize, a: &BraidElement) -> Result<BraidElement> {
        let g = self.braid_normal_form(&[i])?;
        self.braid_left_cancel(&g, a)
    }
}

/// Right-multiplies a left-greedy factor list by a simple braid.
///
/// Sweeps from the last factor to the first, left-weighting each factor
/// against what is carried in from the right; stops as soon as a pair is
/// already left weighted, since the prefix before it is untouched.
fn append_simple(factors: &mut Vec<Simple>, t: Simple) {
    let mut carry = t;
    let mut i = factors.len();
    factors.push(Simple::identity(carry.strands()));
    while i > 0 {
        let mut left = factors[i - 1].clone();
        let moved = left_weight(&mut left, &mut carry);
        factors[i] = carry;
        if !moved {
            return;
        }
        carry = left;
        i -= 1;
    }
    factors[0] = carry;
}

impl LcmMonoid for PositiveBraids {
    type Element = BraidElement;

    fn name(&self) -> String {
        format!("braid:{}", self.n)
    }

    fn capabilities(&self) -> MonoidCapabilities {
        MonoidCapabilities {
            has_trivial_units: true,
            supports_left_gcd: true,
            generator_count: self.n - 1,
        }
    }

    fn one(&self) -> BraidElement {
        BraidElement {
            strands: self.n,
            factors: Vec::new(),
        }
    }

    fn generator(&self, index: usize) -> Result<BraidElement> {
        self.braid_normal_form(&[index])
    }

    fn check(&self, a: &BraidElement) -> Result<()> {
        if a.strands == self.n {
            Ok(())
        } else {
            Err(MonoidError::ForeignElement {
                expected: self.name(),
                found: format!("braid:{}", a.strands),
            })
        }
    }

    fn mul(&self, a: &BraidElement, b: &BraidElement) -> Result<BraidElement> {
        self.check(a)?;
        self.check(b)?;
        let mut factors = a.factors.clone();
        for f in &b.factors {
            append_simple(&mut factors, f.clone());
        }
        Ok(self.finish(factors))
    }

    fn left_cancel(&self, a: &BraidElement, c: &BraidElement) -> Result<BraidElement> {
        self.braid_left_cancel(a, c)
    }

    fn right_lcm(&self, a: &BraidElement, b: &BraidElement) -> Result<LcmCertificate<BraidElement>> {
        self.braid_right_lcm(a, b)
    }

    fn is_unit(&self, a: &BraidElement) -> bool {
        a.strands == self.n && a.is_identity()
    }

    fn degree(&self, a: &BraidElement) -> Option<usize> {
        Some(a.length())
    }

    fn left_gcd(&self, a: &BraidElement, b: &BraidElement) -> Option<Result<BraidElement>> {
        let run = || -> Result<BraidElement> {
            self.check(a)?;
            self.check(b)?;
            let (mut a, mut b) = (a.clone(), b.clone());
            let mut gcd = Vec::new();
            loop {
                let common = match (a.factors.first(), b.factors.first()) {
                    (Some(fa), Some(fb)) => fa.starting_set().find(|&i| fb.starts_with(i)),
                    _ => None,
                };
                let Some(i) = common else { break };
                a = self.strip_generator(i, &a)?;
                b = self.strip_generator(i, &b)?;
                gcd.push(i);
            }
            self.braid_normal_form(&gcd)
        };
        Some(run())
    }

    fn strip_right_gcd(
        &self,
        a: &BraidElement,
        b: &BraidElement,
    ) -> Option<Result<(BraidElement, BraidElement)>> {
        // right divisibility is left divisibility of the reversed words
        let run = || -> Result<(BraidElement, BraidElement)> {
            let (ra, rb) = (self.reversed(a)?, self.reversed(b)?);
            let g = self.left_gcd(&ra, &rb).expect("braids have gcds")?;
            Ok((
                self.reversed(&self.braid_left_cancel(&g, &ra)?)?,
                self.reversed(&self.braid_left_cancel(&g, &rb)?)?,
            ))
        };
        Some(run())
    }
}
