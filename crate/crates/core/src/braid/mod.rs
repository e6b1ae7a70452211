//! Exact word problem for the Artin braid group `B_n`.
//!
//! The primary oracle is the Garside normal form ([`garside_nf`]); the
//! free-group action in [`artin`] is an independent cross-check for short
//! words.

pub mod artin;
pub mod cache;
pub mod garside;
pub mod perm;

use std::fmt;

pub use artin::{artin_act, artin_equal, artin_images};
pub use cache::NfCache;
pub use garside::GarsideNF;
pub use perm::{Permutation, MAX_STRANDS};

use crate::error::{Error, Result};
use crate::words::{Alphabet, Letter, Word};

/// A word over `s1..s(n-1)` read as an element of `B_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    n: usize,
    word: Word,
}

impl BraidWord {
    pub fn new(n: usize, word: Word) -> Result<Self> {
        if n == 0 || n > MAX_STRANDS {
            return Err(Error::Params(format!("strand count {n} outside 1..={MAX_STRANDS}")));
        }
        Alphabet::sigma(n).check(&word)?;
        Ok(BraidWord { n, word })
    }

    pub fn parse(n: usize, text: &str) -> Result<Self> {
        BraidWord::new(n, text.parse()?)
    }

    pub fn identity(n: usize) -> Self {
        BraidWord { n, word: Word::empty() }
    }

    /// Single generator `s<i>`.
    pub fn sigma(n: usize, i: usize) -> Result<Self> {
        BraidWord::new(n, Word::gen(Letter::Sigma(i as u8)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Concatenation (unreduced).
    pub fn mul(&self, other: &BraidWord) -> BraidWord {
        assert_eq!(self.n, other.n, "strand count mismatch");
        BraidWord { n: self.n, word: self.word.mul(&other.word) }
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord { n: self.n, word: self.word.inverse() }
    }

    pub fn pow(&self, k: i64) -> BraidWord {
        BraidWord { n: self.n, word: self.word.pow(k) }
    }

    pub fn free_reduce(&self) -> BraidWord {
        BraidWord { n: self.n, word: self.word.free_reduce() }
    }

    /// `x^{-1} self x`.
    pub fn conj(&self, x: &BraidWord) -> BraidWord {
        x.inverse().mul(self).mul(x)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word)
    }
}

/// The image in the symmetric group; see [`Permutation`] for the
/// convention. `permutation_of(uv) == permutation_of(u).then(&permutation_of(v))`.
pub fn permutation_of(w: &BraidWord) -> Permutation {
    let mut p = Permutation::identity(w.n);
    for s in w.word.syms() {
        if let Letter::Sigma(i) = s.letter {
            p = p.then(&Permutation::crossing(w.n, i as usize));
        }
    }
    p
}

/// The positive half twist `s1 (s2 s1) (s3 s2 s1) ...`.
pub fn halftwist(n: usize) -> Result<BraidWord> {
    if n < 2 {
        return Err(Error::Params(format!("half twist needs n >= 2, got {n}")));
    }
    let mut letters = Vec::new();
    for k in 1..n {
        for i in (1..=k).rev() {
            letters.push(Letter::Sigma(i as u8));
        }
    }
    BraidWord::new(n, Word::from_letters(letters))
}

/// A uniformly random word of length `len` over `s1^±1 .. s(n-1)^±1`.
pub fn random_word<R: rand::Rng>(rng: &mut R, n: usize, len: usize) -> BraidWord {
    if n < 2 {
        return BraidWord::identity(n);
    }
    let syms = (0..len)
        .map(|_| {
            let l = Letter::Sigma(rng.gen_range(1..n) as u8);
            if rng.gen_bool(0.5) {
                crate::words::Sym::pos(l)
            } else {
                crate::words::Sym::neg(l)
            }
        })
        .collect();
    BraidWord { n, word: Word::new(syms) }
}

/// Garside normal form of `w`, served from the shared cache.
pub fn garside_nf(w: &BraidWord) -> GarsideNF {
    NfCache::global().get_or_compute(w.n, &w.word)
}

/// True iff `u` and `v` represent the same element of `B_n`.
pub fn braid_equal(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    if u.n != v.n {
        return Err(Error::StrandMismatch(u.n, v.n));
    }
    Ok(garside_nf(u) == garside_nf(v))
}

/// Signed crossing counts between strands, indexed by starting position
/// (0-based). For a pure braid, half of entry `(a, b)` is the exponent sum
/// of `A<a+1>.<b+1>` in any pure word.
pub fn crossing_counts(w: &BraidWord) -> Vec<Vec<i64>> {
    let mut at: Vec<usize> = (0..w.n).collect();
    let mut c = vec![vec![0i64; w.n]; w.n];
    for s in w.word.syms() {
        let Letter::Sigma(i) = s.letter else { unreachable!("non-sigma letter in a braid word") };
        let i = i as usize - 1;
        let (a, b) = (at[i].min(at[i + 1]), at[i].max(at[i + 1]));
        c[a][b] += s.sign();
        c[b][a] += s.sign();
        at.swap(i, i + 1);
    }
    c
}
