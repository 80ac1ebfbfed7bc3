//! Subword reversing for the positive braid presentation.
//!
//! A signed word is rewritten by replacing every `s^-1 t` with
//! `(s\t) (t\s)^-1`, where `s (s\t) = t (t\s)` is the right lcm of the two
//! generators, until no negative letter is followed by a positive one.

use alloc::vec::Vec;

use crate::error::{MonoidError, Result};

pub const DEFAULT_STEP_CAP: usize = 1 << 22;

/// Right lcm complements of two generators `s_i`, `s_j` (zero based).
#[derive(Clone, Debug)]
pub struct ComplementTable {
    n: usize,
    table: Vec<Vec<Vec<usize>>>,
}

impl ComplementTable {
    pub fn new(n: usize) -> Self {
        let gens = n - 1;
        let table = (0..gens)
            .map(|i| (0..gens).map(|j| generator_complement(i, j)).collect())
            .collect();
        ComplementTable { n, table }
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    /// `s\t`, so that `s (s\t) = t (t\s)`.
    pub fn get(&self, s: usize, t: usize) -> &[usize] {
        &self.table[s][t]
    }
}

/// Empty for `s = t`, `t s` for adjacent generators, `t` when they commute.
pub fn generator_complement(s: usize, t: usize) -> Vec<usize> {
    match s.abs_diff(t) {
        0 => Vec::new(),
        1 => alloc::vec![t, s],
        _ => alloc::vec![t],
    }
}

/// One elementary step `s^-1 t -> (s\t)(t\s)^-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridCell {
    pub s: usize,
    pub t: usize,
    pub s_comp: Vec<usize>,
    pub t_comp: Vec<usize>,
}

/// The complements produced by reversing `num^-1 den`:
/// `num * pos = den * neg` is the right lcm of the two words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reversal {
    pub pos: Vec<usize>,
    pub neg: Vec<usize>,
    pub steps: usize,
}

/// The full trace of a reversing: the two input words and every cell
/// filled on the way.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReversingGrid {
    pub den: Vec<usize>,
    pub num: Vec<usize>,
    pub cells: Vec<GridCell>,
    pub result: Reversal,
}

// letters are stored as +-(index + 1)
fn encode(i: usize, negative: bool) -> i32 {
    let v = i as i32 + 1;
    if negative {
        -v
    } else {
        v
    }
}

/// First `j >= from` with `w[j] w[j + 1]` of the form `s^-1 t`.
fn first_pattern(w: &[i32], from: usize) -> Option<usize> {
    (from..w.len().saturating_sub(1)).find(|&j| w[j] < 0 && w[j + 1] > 0)
}

pub(crate) fn reverse_words(
    table: &ComplementTable,
    den: &[usize],
    num: &[usize],
    cap: usize,
    mut trace: Option<&mut Vec<GridCell>>,
) -> Result<Reversal> {
    let mut w: Vec<i32> = num
        .iter()
        .rev()
        .map(|&i| encode(i, true))
        .chain(den.iter().map(|&i| encode(i, false)))
        .collect();
    let mut steps = 0;
    let mut from = 0;
    while let Some(j) = first_pattern(&w, from) {
        if steps == cap {
            return Err(MonoidError::StepBoundExceeded { cap });
        }
        steps += 1;
        let s = (-w[j] - 1) as usize;
        let t = (w[j + 1] - 1) as usize;
        let st = table.get(s, t);
        let ts = table.get(t, s);
        let block: Vec<i32> = st
            .iter()
            .map(|&i| encode(i, false))
            .chain(ts.iter().rev().map(|&i| encode(i, true)))
            .collect();
        if let Some(cells) = trace.as_deref_mut() {
            cells.push(GridCell {
                s,
                t,
                s_comp: st.to_vec(),
                t_comp: ts.to_vec(),
            });
        }
        w.splice(j..j + 2, block);
        from = j.saturating_sub(1);
    }
    let split = w.iter().position(|&l| l < 0).unwrap_or(w.len());
    let pos = w[..split].iter().map(|&l| (l - 1) as usize).collect();
    let neg = w[split..].iter().rev().map(|&l| (-l - 1) as usize).collect();
    Ok(Reversal { pos, neg, steps })
}
