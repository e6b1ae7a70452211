//! Left-greedy (Garside) normal form in the Artin braid group.
//!
//! Every braid is written uniquely as `D^inf * A_1 * ... * A_k` where `D` is
//! the positive half twist and the `A_i` are permutation braids, none equal
//! to `1` or `D`, with every pair `(A_i, A_{i+1})` left-weighted: the
//! starting set of `A_{i+1}` is contained in the finishing set of `A_i`.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::perm::Permutation;
use crate::words::{Letter, Sym, Word};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GarsideNF {
    n: usize,
    inf: i64,
    factors: Vec<Permutation>,
}

/// Rewrite the pair `(a, b)` so that it is left-weighted, keeping the
/// product `ab` fixed.
fn left_weight(mut a: Permutation, mut b: Permutation) -> (Permutation, Permutation) {
    loop {
        let bad = b.starting_set() & !a.finishing_set();
        if bad == 0 {
            return (a, b);
        }
        let i = bad.trailing_zeros() as usize;
        a = a.right_cross(i);
        b = b.left_strip(i);
    }
}

impl GarsideNF {
    pub fn identity(n: usize) -> Self {
        GarsideNF { n, inf: 0, factors: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn inf(&self) -> i64 {
        self.inf
    }

    /// The supremum `inf + k`.
    pub fn sup(&self) -> i64 {
        self.inf + self.factors.len() as i64
    }

    pub fn factors(&self) -> &[Permutation] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.inf == 0 && self.factors.is_empty()
    }

    fn trivial_group(&self) -> bool {
        self.n < 2
    }

    /// The positive half twist.
    pub fn delta(n: usize) -> Self {
        if n < 2 {
            return GarsideNF::identity(n);
        }
        GarsideNF { n, inf: 1, factors: Vec::new() }
    }

    /// Append one permutation braid on the right, restoring normal form.
    fn push(&mut self, b: Permutation) {
        if b.is_identity() {
            return;
        }
        self.factors.push(b);
        let mut j = self.factors.len() - 1;
        while j > 0 {
            let (a, c) = (self.factors[j - 1], self.factors[j]);
            let (a2, c2) = left_weight(a, c);
            if a2 == a {
                break;
            }
            self.factors[j - 1] = a2;
            self.factors[j] = c2;
            j -= 1;
        }
        while self.factors.last().is_some_and(|f| f.is_identity()) {
            self.factors.pop();
        }
        let lead = self.factors.iter().take_while(|f| f.is_reversal()).count();
        if lead > 0 {
            self.factors.drain(..lead);
            self.inf += lead as i64;
        }
    }

    /// Normal form of a word over `s1..s(n-1)`. Letters other than `Sigma`
    /// are a caller bug and panic.
    pub fn from_word(n: usize, w: &Word) -> Self {
        let mut out = GarsideNF::identity(n);
        if n < 2 {
            return out;
        }
        let syms = w.syms();
        let mut after = syms.iter().filter(|s| s.inv).count();
        out.inf = -(after as i64);
        let delta = Permutation::reversal(n);
        for s in syms {
            let i = match s.letter {
                Letter::Sigma(i) => i as usize,
                other => panic!("non-braid letter {other} in braid word"),
            };
            assert!(i >= 1 && i < n, "s{i} out of range for {n} strands");
            let mut f = if s.inv {
                after -= 1;
                // s_i^{-1} = D^{-1} (D s_i^{-1})
                delta.then(&Permutation::crossing(n, i))
            } else {
                Permutation::crossing(n, i)
            };
            // moving the remaining D^{-1} factors to the left flips f once each
            if after % 2 == 1 {
                f = f.flip();
            }
            out.push(f);
        }
        out
    }

    pub fn mul(&self, other: &GarsideNF) -> GarsideNF {
        assert_eq!(self.n, other.n, "strand count mismatch");
        if self.trivial_group() {
            return self.clone();
        }
        // D^p A D^q B = D^{p+q} flip^q(A) B
        let mut out = GarsideNF { n: self.n, inf: self.inf + other.inf, factors: Vec::new() };
        let odd = other.inf.rem_euclid(2) == 1;
        out.factors = if odd {
            self.factors.iter().map(|f| f.flip()).collect()
        } else {
            self.factors.clone()
        };
        for f in &other.factors {
            out.push(*f);
        }
        out
    }

    pub fn inverse(&self) -> GarsideNF {
        if self.trivial_group() {
            return self.clone();
        }
        // (D^p A_1..A_k)^{-1} = D^{-p-k} prod_{j=k..1} flip^{j+p}(A_j^{-1} D)
        let k = self.factors.len() as i64;
        let mut out = GarsideNF { n: self.n, inf: -self.inf - k, factors: Vec::new() };
        let delta = Permutation::reversal(self.n);
        for (idx, a) in self.factors.iter().enumerate().rev() {
            let j = idx as i64 + 1;
            let mut c = a.inverse().then(&delta);
            if (j + self.inf).rem_euclid(2) == 1 {
                c = c.flip();
            }
            out.push(c);
        }
        out
    }

    pub fn pow(&self, k: i64) -> GarsideNF {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut acc = GarsideNF::identity(self.n);
        let mut sq = base;
        let mut e = k.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        acc
    }

    /// `x^{-1} self x`.
    pub fn conj(&self, x: &GarsideNF) -> GarsideNF {
        x.inverse().mul(self).mul(x)
    }

    /// The permutation image of the braid.
    pub fn permutation(&self) -> Permutation {
        let mut p = Permutation::identity(self.n);
        if self.inf.rem_euclid(2) == 1 {
            p = Permutation::reversal(self.n);
        }
        for f in &self.factors {
            p = p.then(f);
        }
        p
    }

    /// A word for this braid: half-twist power followed by the factors.
    pub fn to_word(&self) -> Word {
        let mut syms = Vec::new();
        if self.n >= 2 {
            let delta_word: Vec<usize> = Permutation::reversal(self.n).crossing_word();
            for _ in 0..self.inf.unsigned_abs() {
                if self.inf > 0 {
                    syms.extend(delta_word.iter().map(|&i| Sym::pos(Letter::Sigma(i as u8 + 1))));
                } else {
                    syms.extend(
                        delta_word.iter().rev().map(|&i| Sym::neg(Letter::Sigma(i as u8 + 1))),
                    );
                }
            }
        }
        for f in &self.factors {
            syms.extend(f.crossing_word().into_iter().map(|i| Sym::pos(Letter::Sigma(i as u8 + 1))));
        }
        Word::new(syms)
    }

    /// Letter count of [`GarsideNF::to_word`]; used as a size measure.
    pub fn word_len(&self) -> usize {
        let d = self.n * self.n.saturating_sub(1) / 2;
        self.inf.unsigned_abs() as usize * d
            + self.factors.iter().map(|f| f.crossings()).sum::<usize>()
    }

    /// Check the structural invariants of a normal form.
    pub fn is_normal(&self) -> bool {
        self.factors.iter().all(|f| !f.is_identity() && !f.is_reversal())
            && self
                .factors
                .windows(2)
                .all(|w| w[1].starting_set() & !w[0].finishing_set() == 0)
    }
}

impl fmt::Debug for GarsideNF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NF(n={}, inf={}, {:?})", self.n, self.inf, self.factors)
    }
}

impl fmt::Display for GarsideNF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "inf {} [", self.inf)?;
        for (k, a) in self.factors.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a:?}")?;
        }
        write!(f, "]")
    }
}
