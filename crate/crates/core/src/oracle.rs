//! Brute-force breadth-first oracles.
//!
//! Everything here is computed from `one`, the generators and `mul` alone:
//! no oracle consults `left_cancel` or `right_lcm`. Two regimes are
//! supported.
//!
//! * Finite instances (`element_count` is `Some`) are searched exhaustively:
//!   the right multiples of an element are closed off completely.
//! * Infinite instances must be length graded (`degree` is `Some`): every
//!   word representing an element has the same length. Searches are cut at
//!   `bound` letters and report [`MonoidError::SearchBoundExceeded`] instead
//!   of returning a truncated answer.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{MonoidError, Result};
use crate::monoid::LcmMonoid;

pub const DEFAULT_BFS_BOUND: usize = 12;

/// How a product was first reached: `levels[depth - 1][parent] * gens[generator]`.
#[derive(Clone, Copy)]
struct Step {
    depth: usize,
    parent: usize,
    generator: usize,
}

/// Right multiples `a * w` of a fixed `a`, grown one letter of `w` at a time.
struct Multiples<E> {
    seen: BTreeMap<E, Step>,
    /// products first reached with `|w| = depth`
    levels: Vec<Vec<E>>,
}

impl<E: Clone + Ord> Multiples<E> {
    fn new<M: LcmMonoid<Element = E> + ?Sized>(_monoid: &M, a: &E) -> Self {
        let mut seen = BTreeMap::new();
        seen.insert(
            a.clone(),
            Step {
                depth: 0,
                parent: 0,
                generator: 0,
            },
        );
        Multiples {
            seen,
            levels: alloc::vec![alloc::vec![a.clone()]],
        }
    }

    fn depth(&self) -> usize {
        self.levels.len() - 1
    }

    /// Adds one more letter. Returns `false` once nothing new appears.
    fn grow<M: LcmMonoid<Element = E> + ?Sized>(&mut self, monoid: &M, gens: &[E]) -> Result<bool> {
        let depth = self.levels.len();
        let mut next = Vec::new();
        for (parent, p) in self.levels.last().expect("at least one level").iter().enumerate() {
            for (generator, g) in gens.iter().enumerate() {
                let q = monoid.mul(p, g)?;
                if let alloc::collections::btree_map::Entry::Vacant(slot) = self.seen.entry(q) {
                    next.push(slot.key().clone());
                    slot.insert(Step {
                        depth,
                        parent,
                        generator,
                    });
                }
            }
        }
        let grew = !next.is_empty();
        self.levels.push(next);
        Ok(grew)
    }

    /// The `w` with `a * w = c` that the search found first.
    fn complement<M: LcmMonoid<Element = E> + ?Sized>(&self, monoid: &M, c: &E) -> Option<Result<E>> {
        let mut step = *self.seen.get(c)?;
        let mut word = Vec::with_capacity(step.depth);
        while step.depth > 0 {
            word.push(step.generator);
            step = self.seen[&self.levels[step.depth - 1][step.parent]];
        }
        word.reverse();
        Some(monoid.word(&word))
    }

    fn grow_to<M: LcmMonoid<Element = E> + ?Sized>(
        &mut self,
        monoid: &M,
        gens: &[E],
        depth: usize,
    ) -> Result<()> {
        while self.depth() < depth {
            self.grow(monoid, gens)?;
        }
        Ok(())
    }

    /// Grows until closed; fails if that takes more than `bound` letters.
    fn close<M: LcmMonoid<Element = E> + ?Sized>(
        &mut self,
        monoid: &M,
        gens: &[E],
        bound: usize,
    ) -> Result<()> {
        loop {
            if !self.grow(monoid, gens)? {
                return Ok(());
            }
            if self.depth() > bound {
                return Err(MonoidError::SearchBoundExceeded { bound });
            }
        }
    }

    fn level(&self, d: usize) -> &[E] {
        self.levels.get(d).map(Vec::as_slice).unwrap_or(&[])
    }
}

/// Outcome of a brute-force lcm search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LcmSearch<E> {
    /// All right lcms found: the common multiples dividing every other one.
    pub lcms: Vec<E>,
    /// Number of common right multiples inspected.
    pub common_multiples: usize,
}

pub struct BfsOracle<'m, M: ?Sized> {
    monoid: &'m M,
    bound: usize,
    window: Option<usize>,
}

enum Regime {
    Finite,
    Graded,
}

impl<'m, M: LcmMonoid + ?Sized> BfsOracle<'m, M> {
    /// `bound` caps the word length of every element the search touches.
    pub fn new(monoid: &'m M, bound: usize) -> Self {
        BfsOracle {
            monoid,
            bound,
            window: None,
        }
    }

    /// Restricts the minimality check of [`Self::lcm_search`] in graded
    /// instances to common multiples at most `extra` letters longer than the
    /// shortest one, instead of everything up to `bound`.
    pub fn with_window(mut self, extra: usize) -> Self {
        self.window = Some(extra);
        self
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    fn regime(&self) -> Result<Regime> {
        if self.monoid.element_count().is_some() {
            Ok(Regime::Finite)
        } else if self.monoid.degree(&self.monoid.one()).is_some() {
            Ok(Regime::Graded)
        } else {
            Err(MonoidError::Malformed(String::from(
                "oracle needs a finite or length-graded instance",
            )))
        }
    }

    fn degree(&self, a: &M::Element) -> Result<usize> {
        let d = self
            .monoid
            .degree(a)
            .ok_or_else(|| MonoidError::Malformed(String::from("instance is not graded")))?;
        if d > self.bound {
            return Err(MonoidError::SearchBoundExceeded { bound: self.bound });
        }
        Ok(d)
    }

    /// Every element of word length at most `len` (all of them, if finite).
    pub fn ball(&self, len: usize) -> Result<Vec<M::Element>> {
        let gens = self.monoid.generators();
        let one = self.monoid.one();
        let mut bfs = Multiples::new(self.monoid, &one);
        match self.regime()? {
            Regime::Finite => bfs.close(self.monoid, &gens, self.bound.max(len))?,
            Regime::Graded => {
                if len > self.bound {
                    return Err(MonoidError::SearchBoundExceeded { bound: self.bound });
                }
                bfs.grow_to(self.monoid, &gens, len)?
            }
        }
        Ok(bfs.seen.into_keys().collect())
    }

    /// Some `w` with `a * w = c`, found by search, or `None` when the search
    /// proves there is none.
    pub fn right_complement(&self, a: &M::Element, c: &M::Element) -> Result<Option<M::Element>> {
        self.monoid.check(a)?;
        self.monoid.check(c)?;
        let gens = self.monoid.generators();
        let mut bfs = Multiples::new(self.monoid, a);
        match self.regime()? {
            Regime::Finite => bfs.close(self.monoid, &gens, self.bound)?,
            Regime::Graded => {
                let (da, dc) = (self.degree(a)?, self.degree(c)?);
                if dc < da {
                    return Ok(None);
                }
                bfs.grow_to(self.monoid, &gens, dc - da)?;
            }
        }
        bfs.complement(self.monoid, c).transpose()
    }

    pub fn left_divides(&self, a: &M::Element, c: &M::Element) -> Result<bool> {
        Ok(self.right_complement(a, c)?.is_some())
    }

    /// Common right multiples of `a` and `b` of word length at most `bound`.
    pub fn common_right_multiples(&self, a: &M::Element, b: &M::Element) -> Result<BTreeSet<M::Element>> {
        self.monoid.check(a)?;
        self.monoid.check(b)?;
        let gens = self.monoid.generators();
        let mut ma = Multiples::new(self.monoid, a);
        let mut mb = Multiples::new(self.monoid, b);
        match self.regime()? {
            Regime::Finite => {
                ma.close(self.monoid, &gens, self.bound)?;
                mb.close(self.monoid, &gens, self.bound)?;
            }
            Regime::Graded => {
                let (da, db) = (self.degree(a)?, self.degree(b)?);
                ma.grow_to(self.monoid, &gens, self.bound - da)?;
                mb.grow_to(self.monoid, &gens, self.bound - db)?;
            }
        }
        Ok(ma
            .seen
            .keys()
            .filter(|c| mb.seen.contains_key(*c))
            .cloned()
            .collect())
    }

    /// All right lcms of `a` and `b`, by enumeration of common multiples.
    pub fn lcm_search(&self, a: &M::Element, b: &M::Element) -> Result<LcmSearch<M::Element>> {
        match self.regime()? {
            Regime::Finite => self.lcm_search_finite(a, b),
            Regime::Graded => self.lcm_search_graded(a, b),
        }
    }

    pub fn lcm_set(&self, a: &M::Element, b: &M::Element) -> Result<Vec<M::Element>> {
        Ok(self.lcm_search(a, b)?.lcms)
    }

    fn lcm_search_finite(&self, a: &M::Element, b: &M::Element) -> Result<LcmSearch<M::Element>> {
        let common = self.common_right_multiples(a, b)?;
        let gens = self.monoid.generators();
        let mut lcms = Vec::new();
        for m in &common {
            let mut mm = Multiples::new(self.monoid, m);
            mm.close(self.monoid, &gens, self.bound)?;
            if common.iter().all(|c| mm.seen.contains_key(c)) {
                lcms.push(m.clone());
            }
        }
        if lcms.is_empty() {
            return Err(MonoidError::NoCommonMultiple);
        }
        Ok(LcmSearch {
            lcms,
            common_multiples: common.len(),
        })
    }

    fn lcm_search_graded(&self, a: &M::Element, b: &M::Element) -> Result<LcmSearch<M::Element>> {
        self.monoid.check(a)?;
        self.monoid.check(b)?;
        let (da, db) = (self.degree(a)?, self.degree(b)?);
        let gens = self.monoid.generators();
        let mut ma = Multiples::new(self.monoid, a);
        let mut mb = Multiples::new(self.monoid, b);

        // common multiples by word length, shortest first
        let mut by_len: Vec<(usize, Vec<M::Element>)> = Vec::new();
        let mut shortest = None;
        let start = da.max(db);
        for len in start..=self.bound {
            if let (Some(s), Some(w)) = (shortest, self.window) {
                if len > s + w {
                    break;
                }
            }
            ma.grow_to(self.monoid, &gens, len - da)?;
            mb.grow_to(self.monoid, &gens, len - db)?;
            let hits: BTreeSet<&M::Element> = mb.level(len - db).iter().collect();
            let found: Vec<M::Element> = ma
                .level(len - da)
                .iter()
                .filter(|c| hits.contains(c))
                .cloned()
                .collect();
            if !found.is_empty() {
                shortest.get_or_insert(len);
                by_len.push((len, found));
            }
        }
        let shortest = shortest.ok_or(MonoidError::SearchBoundExceeded { bound: self.bound })?;
        let top = by_len.last().map(|(l, _)| *l).unwrap_or(shortest);

        // an lcm divides every common multiple, so it is among the shortest
        let mut lcms = Vec::new();
        for m in &by_len[0].1 {
            let mut mm = Multiples::new(self.monoid, m);
            mm.grow_to(self.monoid, &gens, top - shortest)?;
            if by_len
                .iter()
                .all(|(_, cs)| cs.iter().all(|c| mm.seen.contains_key(c)))
            {
                lcms.push(m.clone());
            }
        }
        if lcms.is_empty() {
            return Err(MonoidError::NoCommonMultiple);
        }
        Ok(LcmSearch {
            lcms,
            common_multiples: by_len.iter().map(|(_, cs)| cs.len()).sum(),
        })
    }
}

/// Whether the enumerated lcm set of `(a, b)` is exactly `{ join * u }` over
/// the units `u`, as it must be in a left-cancellative monoid.
pub fn lcm_set_matches_units<M: LcmMonoid + ?Sized>(
    oracle: &BfsOracle<'_, M>,
    a: &M::Element,
    b: &M::Element,
) -> Result<bool> {
    let monoid = oracle.monoid;
    let units = monoid
        .units()
        .ok_or_else(|| MonoidError::Malformed(String::from("unit group is not enumerable")))?;
    let join = monoid.right_lcm(a, b)?.join;
    let predicted = units
        .iter()
        .map(|u| monoid.mul(&join, u))
        .collect::<Result<BTreeSet<_>>>()?;
    let found: BTreeSet<_> = oracle.lcm_set(a, b)?.into_iter().collect();
    Ok(found == predicted)
}
