//! Signed-letter words over the finite alphabets used throughout the crate.
//!
//! Letters carry structured indices so that index-dependent formulas can be
//! written as ordinary `match` arms. Words are immutable values: every
//! operation returns a new word.

use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A generator letter. Indices are 1-based except for `Rho`, which starts at 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Letter {
    /// Artin generator `s<i>`.
    Sigma(u8),
    /// Pure braid generator `A<i>.<j>`.
    A(u8, u8),
    /// Central letter of the pure braid group.
    Z,
    /// Monomial braid generator `r<i>`.
    Rho(u8),
    /// Pure monomial generator `C<j>`.
    C(u8),
    /// Pure monomial generator `A<i>.<j>.<q>`.
    MA(u8, u8, u8),
    /// Central letter of the pure monomial braid group.
    Zrn,
    /// Free generator `x<i>`.
    X(u8),
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Letter::Sigma(i) => write!(f, "s{i}"),
            Letter::A(i, j) => write!(f, "A{i}.{j}"),
            Letter::Z => write!(f, "Z"),
            Letter::Rho(i) => write!(f, "r{i}"),
            Letter::C(j) => write!(f, "C{j}"),
            Letter::MA(i, j, q) => write!(f, "A{i}.{j}.{q}"),
            Letter::Zrn => write!(f, "Zrn"),
            Letter::X(i) => write!(f, "x{i}"),
        }
    }
}

/// One signed occurrence of a letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Sym<L = Letter> {
    pub letter: L,
    pub inv: bool,
}

impl<L: Copy + Eq> Sym<L> {
    pub fn pos(letter: L) -> Self {
        Sym { letter, inv: false }
    }

    pub fn neg(letter: L) -> Self {
        Sym { letter, inv: true }
    }

    pub fn inverse(self) -> Self {
        Sym { letter: self.letter, inv: !self.inv }
    }

    pub fn sign(self) -> i64 {
        if self.inv {
            -1
        } else {
            1
        }
    }

    fn cancels(self, other: Self) -> bool {
        self.letter == other.letter && self.inv != other.inv
    }
}

/// A finite sequence of signed letters, i.e. an element of a free group
/// together with a chosen spelling.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Word<L = Letter> {
    syms: Vec<Sym<L>>,
}

impl<L> Default for Word<L> {
    fn default() -> Self {
        Word { syms: Vec::new() }
    }
}

impl<L: Copy + Eq> Word<L> {
    pub fn new(syms: Vec<Sym<L>>) -> Self {
        Word { syms }
    }

    pub fn empty() -> Self {
        Word { syms: Vec::new() }
    }

    pub fn gen(letter: L) -> Self {
        Word { syms: vec![Sym::pos(letter)] }
    }

    /// `letter^k` spelled out.
    pub fn power_of(letter: L, k: i64) -> Self {
        let s = if k < 0 { Sym::neg(letter) } else { Sym::pos(letter) };
        Word { syms: vec![s; k.unsigned_abs() as usize] }
    }

    pub fn from_letters<I: IntoIterator<Item = L>>(letters: I) -> Self {
        Word { syms: letters.into_iter().map(Sym::pos).collect() }
    }

    pub fn syms(&self) -> &[Sym<L>] {
        &self.syms
    }

    pub fn into_syms(self) -> Vec<Sym<L>> {
        self.syms
    }

    pub fn len(&self) -> usize {
        self.syms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syms.is_empty()
    }

    /// Concatenation without reduction.
    pub fn mul(&self, other: &Word<L>) -> Word<L> {
        let mut syms = Vec::with_capacity(self.len() + other.len());
        syms.extend_from_slice(&self.syms);
        syms.extend_from_slice(&other.syms);
        Word { syms }
    }

    /// Concatenation followed by free reduction at the seam.
    pub fn mul_reduced(&self, other: &Word<L>) -> Word<L> {
        let mut out = self.clone();
        out.push_reduced_all(other.syms.iter().copied());
        out
    }

    pub fn inverse(&self) -> Word<L> {
        Word { syms: self.syms.iter().rev().map(|s| s.inverse()).collect() }
    }

    /// `self^k` without reduction; negative `k` uses the inverse.
    pub fn pow(&self, k: i64) -> Word<L> {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut syms = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            syms.extend_from_slice(&base.syms);
        }
        Word { syms }
    }

    /// `x^{-1} self x`.
    pub fn conj(&self, x: &Word<L>) -> Word<L> {
        x.inverse().mul(self).mul(x)
    }

    pub fn is_reduced(&self) -> bool {
        self.syms.windows(2).all(|w| !w[0].cancels(w[1]))
    }

    /// The unique freely reduced word equal to `self` in the free group.
    pub fn free_reduce(&self) -> Word<L> {
        let mut out = Word { syms: Vec::with_capacity(self.len()) };
        out.push_reduced_all(self.syms.iter().copied());
        out
    }

    fn push_reduced_all<I: IntoIterator<Item = Sym<L>>>(&mut self, it: I) {
        for s in it {
            match self.syms.last() {
                Some(&last) if last.cancels(s) => {
                    self.syms.pop();
                }
                _ => self.syms.push(s),
            }
        }
    }

    /// Replace every letter by `image(letter)` (inverse letters by the
    /// inverted image) and freely reduce.
    pub fn substitute_with<M, F>(&self, mut image: F) -> Word<M>
    where
        M: Copy + Eq,
        F: FnMut(L) -> Word<M>,
    {
        let mut out: Word<M> = Word::empty();
        for s in &self.syms {
            let img = image(s.letter);
            if s.inv {
                out.push_reduced_all(img.syms.iter().rev().map(|t| t.inverse()));
            } else {
                out.push_reduced_all(img.syms.iter().copied());
            }
        }
        out
    }

    /// Fallible variant of [`Word::substitute_with`].
    pub fn try_substitute_with<M, F>(&self, mut image: F) -> Result<Word<M>>
    where
        M: Copy + Eq,
        F: FnMut(L) -> Result<Word<M>>,
    {
        let mut out: Word<M> = Word::empty();
        for s in &self.syms {
            let img = image(s.letter)?;
            if s.inv {
                out.push_reduced_all(img.syms.iter().rev().map(|t| t.inverse()));
            } else {
                out.push_reduced_all(img.syms.iter().copied());
            }
        }
        Ok(out)
    }

    /// Sum of exponents of `letter`.
    pub fn exponent_sum(&self, letter: L) -> i64 {
        self.syms.iter().filter(|s| s.letter == letter).map(|s| s.sign()).sum()
    }

    /// Cyclic reduction: strip cancelling pairs from the two ends of a
    /// freely reduced word.
    pub fn cyclic_reduce(&self) -> Word<L> {
        let w = self.free_reduce();
        let (mut lo, mut hi) = (0usize, w.len());
        while hi - lo >= 2 && w.syms[lo].cancels(w.syms[hi - 1]) {
            lo += 1;
            hi -= 1;
        }
        Word { syms: w.syms[lo..hi].to_vec() }
    }

    /// True when the two words are conjugate in the free group.
    pub fn free_conjugate(&self, other: &Word<L>) -> bool {
        let a = self.cyclic_reduce();
        let b = other.cyclic_reduce();
        if a.len() != b.len() {
            return false;
        }
        if a.is_empty() {
            return true;
        }
        (0..a.len()).any(|k| a.syms[k..].iter().chain(&a.syms[..k]).eq(b.syms.iter()))
    }
}

impl<L: Copy + Eq + fmt::Display> fmt::Display for Word<L> {
    /// Runs of the same signed letter are written as a single power.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut k = 0;
        while k < self.syms.len() {
            let s = self.syms[k];
            let mut run = 1;
            while k + run < self.syms.len() && self.syms[k + run] == s {
                run += 1;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            let e = if s.inv { -(run as i64) } else { run as i64 };
            if e == 1 {
                write!(f, "{}", s.letter)?;
            } else {
                write!(f, "{}^{}", s.letter, e)?;
            }
            k += run;
        }
        Ok(())
    }
}

fn parse_index(s: &str, tok: &str) -> Result<u8> {
    s.parse::<u8>().map_err(|_| Error::Parse(tok.to_string()))
}

fn parse_letter(body: &str, tok: &str) -> Result<Letter> {
    if body == "Z" {
        return Ok(Letter::Z);
    }
    if body == "Zrn" {
        return Ok(Letter::Zrn);
    }
    let (head, rest) = body.split_at(1.min(body.len()));
    match head {
        "s" => Ok(Letter::Sigma(parse_index(rest, tok)?)),
        "r" => Ok(Letter::Rho(parse_index(rest, tok)?)),
        "x" => Ok(Letter::X(parse_index(rest, tok)?)),
        "C" => Ok(Letter::C(parse_index(rest, tok)?)),
        "A" => {
            let parts: Vec<&str> = rest.split('.').collect();
            match parts.as_slice() {
                [i, j] => Ok(Letter::A(parse_index(i, tok)?, parse_index(j, tok)?)),
                [i, j, q] => Ok(Letter::MA(
                    parse_index(i, tok)?,
                    parse_index(j, tok)?,
                    parse_index(q, tok)?,
                )),
                _ => Err(Error::Parse(tok.to_string())),
            }
        }
        _ => Err(Error::Parse(tok.to_string())),
    }
}

impl std::str::FromStr for Word {
    type Err = Error;

    /// Whitespace-separated tokens, each optionally suffixed with `^k`
    /// for a nonzero integer `k`. Empty input is the identity.
    fn from_str(text: &str) -> Result<Word> {
        let mut syms = Vec::new();
        for tok in text.split_whitespace() {
            let (body, exp) = match tok.split_once('^') {
                Some((b, e)) => {
                    let e: i64 = e.parse().map_err(|_| Error::Parse(tok.to_string()))?;
                    if e == 0 {
                        return Err(Error::Parse(tok.to_string()));
                    }
                    (b, e)
                }
                None => (tok, 1),
            };
            let letter = parse_letter(body, tok)?;
            let s = if exp < 0 { Sym::neg(letter) } else { Sym::pos(letter) };
            syms.extend(std::iter::repeat_n(s, exp.unsigned_abs() as usize));
        }
        Ok(Word { syms })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AlphabetKind {
    Sigma,
    PureA,
    Rho,
    MonoA,
    FreeX,
}

/// A declared, finite, totally ordered letter set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Alphabet {
    pub kind: AlphabetKind,
    pub n: usize,
    /// Only meaningful for [`AlphabetKind::MonoA`].
    pub r: usize,
}

impl Alphabet {
    pub fn sigma(n: usize) -> Self {
        Alphabet { kind: AlphabetKind::Sigma, n, r: 0 }
    }
    pub fn pure(n: usize) -> Self {
        Alphabet { kind: AlphabetKind::PureA, n, r: 0 }
    }
    pub fn rho(n: usize) -> Self {
        Alphabet { kind: AlphabetKind::Rho, n, r: 0 }
    }
    pub fn mono(r: usize, n: usize) -> Self {
        Alphabet { kind: AlphabetKind::MonoA, n, r }
    }
    pub fn free(n: usize) -> Self {
        Alphabet { kind: AlphabetKind::FreeX, n, r: 0 }
    }

    /// All letters in their canonical order.
    pub fn letters(&self) -> Vec<Letter> {
        let n = self.n as u8;
        match self.kind {
            AlphabetKind::Sigma => (1..n).map(Letter::Sigma).collect(),
            AlphabetKind::Rho => (0..n).map(Letter::Rho).collect(),
            AlphabetKind::FreeX => (1..=n).map(Letter::X).collect(),
            AlphabetKind::PureA => {
                let mut v: Vec<Letter> = pairs(n).map(|(i, j)| Letter::A(i, j)).collect();
                v.push(Letter::Z);
                v
            }
            AlphabetKind::MonoA => {
                let r = self.r as u8;
                let mut v: Vec<Letter> = (1..=n).map(Letter::C).collect();
                for (i, j) in pairs(n) {
                    for q in 1..=r {
                        v.push(Letter::MA(i, j, q));
                    }
                }
                v.push(Letter::Zrn);
                v
            }
        }
    }

    pub fn central(&self) -> Option<Letter> {
        match self.kind {
            AlphabetKind::PureA => Some(Letter::Z),
            AlphabetKind::MonoA => Some(Letter::Zrn),
            _ => None,
        }
    }

    pub fn contains(&self, letter: Letter) -> bool {
        let n = self.n as u8;
        let r = self.r as u8;
        match (self.kind, letter) {
            (AlphabetKind::Sigma, Letter::Sigma(i)) => i >= 1 && i < n,
            (AlphabetKind::Rho, Letter::Rho(i)) => i < n,
            (AlphabetKind::FreeX, Letter::X(i)) => i >= 1 && i <= n,
            (AlphabetKind::PureA, Letter::A(i, j)) => 1 <= i && i < j && j <= n,
            (AlphabetKind::PureA, Letter::Z) => true,
            (AlphabetKind::MonoA, Letter::C(j)) => 1 <= j && j <= n,
            (AlphabetKind::MonoA, Letter::MA(i, j, q)) => {
                1 <= i && i < j && j <= n && 1 <= q && q <= r
            }
            (AlphabetKind::MonoA, Letter::Zrn) => true,
            _ => false,
        }
    }

    pub fn check(&self, w: &Word) -> Result<()> {
        match w.syms().iter().find(|s| !self.contains(s.letter)) {
            None => Ok(()),
            Some(s) => Err(Error::LetterOutsideAlphabet {
                letter: s.letter.to_string(),
                alphabet: self.to_string(),
            }),
        }
    }

    /// Parse text and check every letter against this alphabet.
    pub fn parse(&self, text: &str) -> Result<Word> {
        let w: Word = text.parse()?;
        self.check(&w)?;
        Ok(w)
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            AlphabetKind::Sigma => write!(f, "sigma(n={})", self.n),
            AlphabetKind::PureA => write!(f, "pureA(n={})", self.n),
            AlphabetKind::Rho => write!(f, "rho(n={})", self.n),
            AlphabetKind::MonoA => write!(f, "monoA(r={}, n={})", self.r, self.n),
            AlphabetKind::FreeX => write!(f, "freeX(n={})", self.n),
        }
    }
}

/// Index pairs `1 <= i < j <= n` in lexicographic order.
pub fn pairs(n: u8) -> impl Iterator<Item = (u8, u8)> {
    (1..=n).flat_map(move |i| (i + 1..=n).map(move |j| (i, j)))
}

/// An endomorphism of a finitely generated group given by its images on
/// generators. Letters without an explicit image are fixed. The central
/// letter (if the source alphabet has one) maps to a power of itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorMap {
    pub source: Alphabet,
    pub target: Alphabet,
    images: BTreeMap<Letter, Word>,
    central_exp: i64,
}

impl GeneratorMap {
    pub fn identity(source: Alphabet) -> Self {
        GeneratorMap { source, target: source, images: BTreeMap::new(), central_exp: 1 }
    }

    pub fn new(
        source: Alphabet,
        target: Alphabet,
        images: BTreeMap<Letter, Word>,
        central_exp: i64,
    ) -> Result<Self> {
        for (l, w) in &images {
            if !source.contains(*l) {
                return Err(Error::LetterOutsideAlphabet {
                    letter: l.to_string(),
                    alphabet: source.to_string(),
                });
            }
            target.check(w)?;
        }
        Ok(GeneratorMap { source, target, images, central_exp })
    }

    pub fn central_exp(&self) -> i64 {
        self.central_exp
    }

    pub fn image(&self, letter: Letter) -> Result<Word> {
        if !self.source.contains(letter) {
            return Err(Error::LetterOutsideAlphabet {
                letter: letter.to_string(),
                alphabet: self.source.to_string(),
            });
        }
        if Some(letter) == self.source.central() {
            return Ok(Word::power_of(letter, self.central_exp));
        }
        Ok(self.images.get(&letter).cloned().unwrap_or_else(|| Word::gen(letter)))
    }

    /// Evaluate the endomorphism on `w`; the result is freely reduced.
    pub fn substitute(&self, w: &Word) -> Result<Word> {
        w.try_substitute_with(|l| self.image(l))
    }
}

/// Move every occurrence of the central letter `z` to the tail and merge it
/// into one power. Valid in any group where `z` is central.
pub fn normalize_central(w: &Word, z: Letter) -> Word {
    let mut e = 0i64;
    let mut rest = Vec::with_capacity(w.len());
    for s in w.syms() {
        if s.letter == z {
            e += s.sign();
        } else {
            rest.push(*s);
        }
    }
    Word::new(rest).free_reduce().mul(&Word::power_of(z, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn free_reduce_examples() {
        assert_eq!(w("x1 x2 x2^-1 x1").free_reduce(), w("x1 x1"));
        assert_eq!(w("").free_reduce(), w(""));
        assert_eq!(w("x1^-1 x1").free_reduce(), w(""));
    }

    #[test]
    fn invert_examples() {
        assert_eq!(w("x1 x2^-1").inverse(), w("x2 x1^-1"));
        assert_eq!(w("").inverse(), w(""));
        assert_eq!(w("A1.2 Z^-1").inverse(), w("Z A1.2^-1"));
    }

    #[test]
    fn substitute_examples() {
        let pure = Alphabet::pure(3);
        let id = GeneratorMap::identity(pure);
        assert_eq!(id.substitute(&w("A1.3 A2.3")).unwrap(), w("A1.3 A2.3"));

        let mut images = BTreeMap::new();
        images.insert(Letter::A(1, 2), w("A1.2 Z^-2"));
        let psi = GeneratorMap::new(pure, pure, images, -1).unwrap();
        assert_eq!(psi.substitute(&w("A1.2")).unwrap(), w("A1.2 Z^-2"));
        assert_eq!(psi.substitute(&w("Z")).unwrap(), w("Z^-1"));

        let free = Alphabet::free(2);
        let mut images = BTreeMap::new();
        images.insert(Letter::X(1), w("x1 x2 x1^-1"));
        images.insert(Letter::X(2), w("x1"));
        let m = GeneratorMap::new(free, free, images, 1).unwrap();
        assert_eq!(m.substitute(&w("x1 x2")).unwrap(), w("x1 x2"));
    }

    #[test]
    fn substitute_rejects_foreign_letter() {
        let id = GeneratorMap::identity(Alphabet::pure(3));
        assert!(matches!(
            id.substitute(&w("A1.4")),
            Err(Error::LetterOutsideAlphabet { .. })
        ));
    }

    #[test]
    fn normalize_central_examples() {
        let z = Letter::Z;
        assert_eq!(normalize_central(&w("A1.2 Z A1.3 Z^-1"), z), w("A1.2 A1.3"));
        assert_eq!(normalize_central(&w("Z^-2 A1.2"), z), w("A1.2 Z^-2"));
        assert_eq!(normalize_central(&w("A1.3 Z A2.3 Z"), z), w("A1.3 A2.3 Z^2"));
    }

    #[test]
    fn alphabet_sizes() {
        assert_eq!(Alphabet::pure(5).letters().len(), 10 + 1);
        // r*C(n,2) + n + 1
        assert_eq!(Alphabet::mono(3, 4).letters().len(), 3 * 6 + 4 + 1);
    }

    #[test]
    fn parse_and_display() {
        let x = w("A1.2.3^2 C1^-1 Zrn r0 s2^-3 x1");
        assert_eq!(x.len(), 9);
        assert_eq!(x.to_string(), "A1.2.3^2 C1^-1 Zrn r0 s2^-3 x1");
        assert!("s1^0".parse::<Word>().is_err());
        assert!("q1".parse::<Word>().is_err());
        assert!(Alphabet::sigma(3).parse("s3").is_err());
    }

    #[test]
    fn free_conjugacy() {
        assert!(w("x1 x2 x3").free_conjugate(&w("x3 x1 x2")));
        assert!(w("x1 x2 x1^-1").free_conjugate(&w("x2")));
        assert!(!w("x1 x2").free_conjugate(&w("x2 x2")));
    }
}
