use std::fmt;

use serde::{Deserialize, Serialize};

/// Largest strand count supported by the fixed-size permutation storage.
pub const MAX_STRANDS: usize = 16;

/// A permutation of the strand positions `0..n`, stored as an image array.
///
/// Convention: `img[p]` is the final position of the strand that starts at
/// position `p`. Braids are read left to right (top to bottom), so the
/// permutation of `uv` is "first `u`, then `v`": see [`Permutation::then`].
/// Each permutation is also identified with its permutation braid, the
/// positive braid in which every pair of strands crosses at most once.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    n: u8,
    img: [u8; MAX_STRANDS],
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_STRANDS, "at most {MAX_STRANDS} strands supported");
        let mut img = [0u8; MAX_STRANDS];
        for (p, v) in img.iter_mut().enumerate().take(n) {
            *v = p as u8;
        }
        Permutation { n: n as u8, img }
    }

    /// Build from a 0-based image array. Panics if it is not a bijection.
    pub fn from_images(images: &[usize]) -> Self {
        let n = images.len();
        let mut p = Permutation::identity(n);
        let mut seen = [false; MAX_STRANDS];
        for (k, &v) in images.iter().enumerate() {
            assert!(v < n && !seen[v], "not a permutation: {images:?}");
            seen[v] = true;
            p.img[k] = v as u8;
        }
        p
    }

    /// The half twist: `p -> n-1-p`.
    pub fn reversal(n: usize) -> Self {
        let mut p = Permutation::identity(n);
        for k in 0..n {
            p.img[k] = (n - 1 - k) as u8;
        }
        p
    }

    /// The transposition of positions `i-1` and `i` (the image of `s<i>`).
    pub fn crossing(n: usize, i: usize) -> Self {
        let mut p = Permutation::identity(n);
        p.img.swap(i - 1, i);
        p
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Image of position `p` (0-based).
    pub fn apply(&self, p: usize) -> usize {
        self.img[p] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.img[..self.n()].iter().map(|&v| v as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n()).all(|p| self.img[p] as usize == p)
    }

    pub fn is_reversal(&self) -> bool {
        let n = self.n();
        (0..n).all(|p| self.img[p] as usize == n - 1 - p)
    }

    /// `self` followed by `other`: `(self.then(other))[p] = other[self[p]]`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.n, other.n);
        let mut out = *self;
        for p in 0..self.n() {
            out.img[p] = other.img[self.img[p] as usize];
        }
        out
    }

    pub fn inverse(&self) -> Permutation {
        let mut out = *self;
        for p in 0..self.n() {
            out.img[self.img[p] as usize] = p as u8;
        }
        out
    }

    /// Conjugation by the half twist, `s<i> -> s<n-i>`.
    pub fn flip(&self) -> Permutation {
        let n = self.n();
        let mut out = *self;
        for p in 0..n {
            out.img[p] = (n - 1 - self.img[n - 1 - p] as usize) as u8;
        }
        out
    }

    /// Bit `i-1` set iff `s<i>` is a prefix of this permutation braid, i.e.
    /// the strands starting at positions `i-1`, `i` cross.
    pub fn starting_set(&self) -> u16 {
        let mut m = 0u16;
        for i in 0..self.n().saturating_sub(1) {
            if self.img[i] > self.img[i + 1] {
                m |= 1 << i;
            }
        }
        m
    }

    /// Bit `i-1` set iff `s<i>` is a suffix, i.e. the strands ending at
    /// positions `i-1`, `i` cross.
    pub fn finishing_set(&self) -> u16 {
        self.inverse().starting_set()
    }

    /// Number of crossings (inversions).
    pub fn crossings(&self) -> usize {
        let n = self.n();
        let mut c = 0;
        for a in 0..n {
            for b in a + 1..n {
                if self.img[a] > self.img[b] {
                    c += 1;
                }
            }
        }
        c
    }

    /// Append the crossing `s<i>` (0-based `i`) on the right.
    pub(crate) fn right_cross(&self, i: usize) -> Permutation {
        let mut out = *self;
        for p in 0..self.n() {
            let v = self.img[p] as usize;
            out.img[p] = if v == i {
                (i + 1) as u8
            } else if v == i + 1 {
                i as u8
            } else {
                v as u8
            };
        }
        out
    }

    /// Remove the crossing `s<i>` (0-based `i`) from the left; requires
    /// `s<i>` to be a prefix.
    pub(crate) fn left_strip(&self, i: usize) -> Permutation {
        let mut out = *self;
        out.img.swap(i, i + 1);
        out
    }

    /// A positive word (0-based crossing indices) for the permutation braid.
    pub fn crossing_word(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.crossings());
        let mut cur = *self;
        loop {
            let s = cur.starting_set();
            if s == 0 {
                break;
            }
            let i = s.trailing_zeros() as usize;
            out.push(i);
            cur = cur.left_strip(i);
        }
        out
    }

    /// Cycle notation with 1-based points, e.g. `(1 4)(2 3)`; `()` for the
    /// identity.
    pub fn cycles(&self) -> String {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            out.push('(');
            let mut p = start;
            let mut first = true;
            while !seen[p] {
                seen[p] = true;
                if !first {
                    out.push(' ');
                }
                first = false;
                out.push_str(&(p + 1).to_string());
                p = self.apply(p);
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one_based: Vec<usize> = self.images().iter().map(|v| v + 1).collect();
        write!(f, "{one_based:?}")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycles())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flip_is_conjugation_by_reversal() {
        let d = Permutation::reversal(5);
        let p = Permutation::from_images(&[2, 0, 4, 1, 3]);
        assert_eq!(p.flip(), d.then(&p).then(&d));
        assert_eq!(p.flip().flip(), p);
    }

    #[test]
    fn crossing_word_rebuilds_permutation() {
        let p = Permutation::from_images(&[3, 1, 0, 4, 2]);
        let mut q = Permutation::identity(5);
        for i in p.crossing_word() {
            q = q.then(&Permutation::crossing(5, i + 1));
        }
        assert_eq!(p, q);
        assert_eq!(p.crossing_word().len(), p.crossings());
    }

    #[test]
    fn descent_sets() {
        let d = Permutation::reversal(4);
        assert_eq!(d.starting_set(), 0b111);
        assert_eq!(d.finishing_set(), 0b111);
        let s2 = Permutation::crossing(4, 2);
        assert_eq!(s2.starting_set(), 0b010);
        assert_eq!(s2.finishing_set(), 0b010);
        assert_eq!(Permutation::reversal(4).cycles(), "(1 4)(2 3)");
    }
}
