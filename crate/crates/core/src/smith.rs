#![allow(clippy::needless_range_loop)]

//! Smith normal form of small integer matrices, used to read off the
//! structure of a finitely presented abelian group.

use alloc::vec::Vec;

type Matrix = Vec<Vec<i64>>;

fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| (i == j) as i64).collect())
        .collect()
}

/// `left * a * right = diag(d_1, .., d_r, 0, ..)` with `d_i | d_{i+1}`,
/// `left` and `right` unimodular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    diagonal: Vec<i64>,
    left: Matrix,
    right: Matrix,
    cols: usize,
}

impl SmithForm {
    /// `relations` has one row per relator, one column per generator.
    pub fn of(relations: &[Vec<i64>]) -> Self {
        let rows = relations.len();
        let cols = relations.first().map_or(0, Vec::len);
        let mut a: Matrix = relations.to_vec();
        let mut left = identity(rows);
        let mut right = identity(cols);

        let mut t = 0;
        while t < rows.min(cols) {
            // pivot: smallest non-zero entry of the remaining block
            let pivot = (t..rows)
                .flat_map(|i| (t..cols).map(move |j| (i, j)))
                .filter(|&(i, j)| a[i][j] != 0)
                .min_by_key(|&(i, j)| a[i][j].abs());
            let Some((pi, pj)) = pivot else { break };
            a.swap(t, pi);
            left.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            for row in right.iter_mut() {
                row.swap(t, pj);
            }

            let mut dirty = false;
            for i in t + 1..rows {
                let q = a[i][t] / a[t][t];
                if q != 0 {
                    for j in 0..cols {
                        a[i][j] -= q * a[t][j];
                    }
                    for j in 0..rows {
                        left[i][j] -= q * left[t][j];
                    }
                }
                dirty |= a[i][t] != 0;
            }
            for j in t + 1..cols {
                let q = a[t][j] / a[t][t];
                if q != 0 {
                    for i in 0..rows {
                        a[i][j] -= q * a[i][t];
                    }
                    for i in 0..cols {
                        right[i][j] -= q * right[i][t];
                    }
                }
                dirty |= a[t][j] != 0;
            }
            if dirty {
                continue;
            }
            // divisibility: fold an offending row into row t and retry
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| a[i][j] % a[t][t] != 0);
            if let Some((i, _)) = bad {
                for j in 0..cols {
                    a[t][j] += a[i][j];
                }
                for j in 0..rows {
                    left[t][j] += left[i][j];
                }
                continue;
            }
            if a[t][t] < 0 {
                for j in 0..cols {
                    a[t][j] = -a[t][j];
                }
                for j in 0..rows {
                    left[t][j] = -left[t][j];
                }
            }
            t += 1;
        }
        let diagonal = (0..t).map(|i| a[i][i]).collect();
        SmithForm {
            diagonal,
            left,
            right,
            cols,
        }
    }

    /// Non-zero diagonal entries.
    pub fn invariants(&self) -> &[i64] {
        &self.diagonal
    }

    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }

    pub fn free_rank(&self) -> usize {
        self.cols - self.rank()
    }

    pub fn left(&self) -> &[Vec<i64>] {
        &self.left
    }

    pub fn right(&self) -> &[Vec<i64>] {
        &self.right
    }

    /// Coordinates of the class of an exponent vector in
    /// `Z/d_1 + .. + Z/d_r + Z^free`: the vector times `right`, with the
    /// first `r` entries reduced modulo the invariants.
    pub fn quotient_image(&self, exponents: &[i64]) -> Vec<i64> {
        let mut v: Vec<i64> = (0..self.cols)
            .map(|j| exponents.iter().zip(&self.right).map(|(e, row)| e * row[j]).sum())
            .collect();
        for (x, d) in v.iter_mut().zip(&self.diagonal) {
            *x = x.rem_euclid(*d);
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Matrix {
        let inner = b.len();
        let cols = b.first().map_or(0, Vec::len);
        a.iter()
            .map(|row| {
                (0..cols)
                    .map(|j| (0..inner).map(|k| row[k] * b[k][j]).sum())
                    .collect()
            })
            .collect()
    }

    fn check(a: Matrix) -> SmithForm {
        let s = SmithForm::of(&a);
        let d = mul(&mul(s.left(), &a), s.right());
        for (i, row) in d.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                let expected = if i == j && i < s.rank() {
                    s.invariants()[i]
                } else {
                    0
                };
                assert_eq!(x, expected, "{d:?}");
            }
        }
        for w in s.invariants().windows(2) {
            assert_eq!(w[1] % w[0], 0);
        }
        s
    }

    #[test]
    fn single_relation() {
        let s = check(alloc::vec![alloc::vec![2, -2]]);
        assert_eq!(s.invariants(), &[2]);
        assert_eq!(s.free_rank(), 1);
    }

    #[test]
    fn classic_examples() {
        assert_eq!(
            check(alloc::vec![
                alloc::vec![2, 4, 4],
                alloc::vec![-6, 6, 12],
                alloc::vec![10, -4, -16]
            ])
            .invariants(),
            &[2, 6, 12]
        );
        assert_eq!(
            check(alloc::vec![alloc::vec![4, 0], alloc::vec![0, 6]]).invariants(),
            &[2, 12]
        );
        assert_eq!(check(alloc::vec![alloc::vec![0, 0]]).rank(), 0);
    }

    #[test]
    fn relators_map_to_zero() {
        let s = SmithForm::of(&[alloc::vec![2, -2]]);
        assert_eq!(s.quotient_image(&[2, -2]), alloc::vec![0, 0]);
        assert_ne!(s.quotient_image(&[1, 0]), s.quotient_image(&[0, 1]));
    }
}
