use alloc::vec::Vec;

/// A simple braid: a positive braid in which any two strands cross at most
/// once, identified with the permutation it induces.
///
/// Stored in one-line notation with zero-based values: the generator
/// `s_i` swaps positions `i` and `i + 1`, and a word acts by successive
/// position swaps starting from the identity.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simple {
    img: Vec<u8>,
}

impl Simple {
    pub fn identity(n: usize) -> Self {
        Simple {
            img: (0..n as u8).collect(),
        }
    }

    /// The half twist, the lcm of all generators.
    pub fn delta(n: usize) -> Self {
        Simple {
            img: (0..n as u8).rev().collect(),
        }
    }

    pub fn generator(n: usize, i: usize) -> Self {
        let mut s = Simple::identity(n);
        s.img.swap(i, i + 1);
        s
    }

    /// From one-line notation with values `1..=n`. `None` unless a permutation.
    pub fn from_one_line(values: &[u8]) -> Option<Self> {
        let n = values.len();
        let mut seen = alloc::vec![false; n];
        let mut img = Vec::with_capacity(n);
        for &v in values {
            let v = v.checked_sub(1)? as usize;
            if v >= n || seen[v] {
                return None;
            }
            seen[v] = true;
            img.push(v as u8);
        }
        Some(Simple { img })
    }

    /// One-line notation with values `1..=n`.
    pub fn one_line(&self) -> Vec<u8> {
        self.img.iter().map(|v| v + 1).collect()
    }

    pub fn strands(&self) -> usize {
        self.img.len()
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    /// Number of crossings, i.e. inversions of the permutation.
    pub fn length(&self) -> usize {
        let n = self.img.len();
        (0..n)
            .map(|i| (i + 1..n).filter(|&j| self.img[i] > self.img[j]).count())
            .sum()
    }

    fn position_of(&self, value: u8) -> usize {
        self.img
            .iter()
            .position(|&v| v == value)
            .expect("value of a permutation")
    }

    /// `s_i` left-divides this simple.
    pub fn starts_with(&self, i: usize) -> bool {
        self.position_of(i as u8 + 1) < self.position_of(i as u8)
    }

    /// `s_i` right-divides this simple.
    pub fn ends_with(&self, i: usize) -> bool {
        self.img[i] > self.img[i + 1]
    }

    pub fn starting_set(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.img.len() - 1).filter(|&i| self.starts_with(i))
    }

    pub fn finishing_set(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.img.len() - 1).filter(|&i| self.ends_with(i))
    }

    /// `self * s_i`. Only a simple braid when `!self.ends_with(i)`.
    pub(crate) fn push_right(&mut self, i: usize) {
        self.img.swap(i, i + 1);
    }

    /// `s_i * self`, or `s_i^-1 * self` when `self.starts_with(i)`.
    pub(crate) fn push_left(&mut self, i: usize) {
        let (a, b) = (self.position_of(i as u8), self.position_of(i as u8 + 1));
        self.img.swap(a, b);
    }

    /// A reduced word, as zero-based generator indices.
    pub fn word(&self) -> Vec<usize> {
        let mut p = self.clone();
        let mut rev = Vec::with_capacity(self.length());
        loop {
            let Some(i) = p.finishing_set().next() else { break };
            p.push_right(i);
            rev.push(i);
        }
        rev.reverse();
        rev
    }

    /// Every left divisor of `next` is already absorbed by `self`:
    /// the starting set of `next` lies in the finishing set of `self`.
    pub fn is_left_weighted(&self, next: &Simple) -> bool {
        next.starting_set().all(|i| self.ends_with(i))
    }
}

/// Moves the largest possible left divisor of `b` onto the end of `a`,
/// keeping the product `a * b` fixed and both factors simple.
pub(crate) fn left_weight(a: &mut Simple, b: &mut Simple) -> bool {
    let mut moved = false;
    loop {
        let Some(i) = b.starting_set().find(|&i| !a.ends_with(i)) else {
            break;
        };
        a.push_right(i);
        b.push_left(i);
        moved = true;
    }
    moved
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_word(n: usize, w: &[usize]) -> Simple {
        let mut s = Simple::identity(n);
        for &i in w {
            assert!(!s.ends_with(i), "word is not square free");
            s.push_right(i);
        }
        s
    }

    #[test]
    fn half_twist_of_three_strands() {
        let s = from_word(3, &[1, 0, 1]);
        assert_eq!(s.one_line(), alloc::vec![3, 2, 1]);
        assert_eq!(s, Simple::delta(3));
        assert_eq!(s.length(), 3);
        assert_eq!(from_word(3, &[0, 1, 0]), s);
    }

    #[test]
    fn commuting_generators_share_a_factor() {
        assert_eq!(from_word(4, &[0, 2]).one_line(), alloc::vec![2, 1, 4, 3]);
    }

    #[test]
    fn descent_sets() {
        let s = from_word(3, &[0, 1]);
        assert_eq!(s.starting_set().collect::<Vec<_>>(), alloc::vec![0]);
        assert_eq!(s.finishing_set().collect::<Vec<_>>(), alloc::vec![1]);
        let d = Simple::delta(4);
        assert_eq!(d.starting_set().count(), 3);
        assert_eq!(d.finishing_set().count(), 3);
    }

    #[test]
    fn reduced_word_round_trips() {
        for w in [&[0usize, 1, 0][..], &[2, 1, 0], &[0, 2, 1], &[1, 0, 2, 1]] {
            let s = from_word(4, w);
            let back = from_word(4, &s.word());
            assert_eq!(back, s);
            assert_eq!(s.word().len(), s.length());
        }
    }

    #[test]
    fn one_line_validation() {
        assert!(Simple::from_one_line(&[2, 1, 3]).is_some());
        assert!(Simple::from_one_line(&[2, 2, 3]).is_none());
        assert!(Simple::from_one_line(&[0, 1, 2]).is_none());
        assert!(Simple::from_one_line(&[1, 4, 2]).is_none());
    }

    #[test]
    fn left_weighting_pushes_material_left() {
        let mut a = from_word(3, &[0]);
        let mut b = from_word(3, &[1, 0]);
        assert!(left_weight(&mut a, &mut b));
        assert_eq!(a, Simple::delta(3));
        assert!(b.is_identity());

        let mut a = from_word(3, &[0]);
        let mut b = from_word(3, &[0]);
        assert!(!left_weight(&mut a, &mut b));
        assert!(a.is_left_weighted(&b));
    }
}
