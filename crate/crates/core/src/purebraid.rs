//! The pure braid group `P_n` in the generators `A<i>.<j>` plus a formal
//! central letter `Z` standing for the full twist.
//!
//! Equality is decided inside `B_n` through [`to_sigma`]. The module also
//! provides Artin combing ([`comb`]), a canonical form in the generators,
//! and an oracle-guided simplifier used to keep composed images short.

use std::collections::HashMap;
use std::fmt;
use std::time::Instant;

use crate::braid::{artin_images, braid_equal, permutation_of, BraidWord, GarsideNF};
use crate::error::{Error, Result};
use crate::report::{Budget, CaseResult, CaseStatus, SuiteParams, VerificationReport};
use crate::words::{normalize_central, pairs, Alphabet, Letter, Sym, Word};

/// A freely reduced word over the pure braid alphabet for `n` strands.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PureWord {
    n: usize,
    word: Word,
}

impl PureWord {
    pub fn new(n: usize, word: Word) -> Result<Self> {
        Alphabet::pure(n).check(&word)?;
        Ok(PureWord { n, word: word.free_reduce() })
    }

    pub fn parse(n: usize, text: &str) -> Result<Self> {
        PureWord::new(n, text.parse()?)
    }

    pub fn identity(n: usize) -> Self {
        PureWord { n, word: Word::empty() }
    }

    /// The generator `A<i>.<j>`.
    pub fn gen(n: usize, i: usize, j: usize) -> Result<Self> {
        PureWord::new(n, Word::gen(Letter::A(i as u8, j as u8)))
    }

    pub fn z(n: usize) -> Self {
        PureWord { n, word: Word::gen(Letter::Z) }
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

    pub fn mul(&self, other: &PureWord) -> PureWord {
        assert_eq!(self.n, other.n, "strand count mismatch");
        PureWord { n: self.n, word: self.word.mul_reduced(&other.word) }
    }

    pub fn inverse(&self) -> PureWord {
        PureWord { n: self.n, word: self.word.inverse() }
    }

    pub fn pow(&self, k: i64) -> PureWord {
        PureWord { n: self.n, word: self.word.pow(k).free_reduce() }
    }

    /// `x^{-1} self x`.
    pub fn conj(&self, x: &PureWord) -> PureWord {
        x.inverse().mul(self).mul(x)
    }

    /// Commutator `[self, other] = self other self^-1 other^-1`.
    pub fn commutator(&self, other: &PureWord) -> PureWord {
        self.mul(other).mul(&self.inverse()).mul(&other.inverse())
    }

    /// Move all `Z` letters to the tail.
    pub fn normalize_central(&self) -> PureWord {
        PureWord { n: self.n, word: normalize_central(&self.word, Letter::Z) }
    }
}

impl fmt::Display for PureWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word)
    }
}

/// Shorthand for products of generators in tables: `a(n, &[(1,2),(1,3)])`.
pub fn a_product(n: usize, idx: &[(usize, usize)]) -> PureWord {
    let letters = idx.iter().map(|&(i, j)| Letter::A(i as u8, j as u8));
    PureWord::new(n, Word::from_letters(letters)).expect("indices in range")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    /// `s(j-1) ... s(i+1) s(i)^2 s(i+1)^-1 ... s(j-1)^-1`
    Left,
    /// `s(i)^-1 ... s(j-2)^-1 s(j-1)^2 s(j-2) ... s(i)`
    Right,
}

/// The generator `A<i>.<j>` as a braid word.
pub fn agen_sigma(i: usize, j: usize, n: usize, variant: Variant) -> Result<BraidWord> {
    if !(1 <= i && i < j && j <= n) {
        return Err(Error::Index(format!("A{i}.{j} with n = {n}")));
    }
    let s = |k: usize| Letter::Sigma(k as u8);
    let mut syms = Vec::new();
    match variant {
        Variant::Left => {
            syms.extend((i + 1..j).rev().map(|k| Sym::pos(s(k))));
            syms.extend([Sym::pos(s(i)), Sym::pos(s(i))]);
            syms.extend((i + 1..j).map(|k| Sym::neg(s(k))));
        }
        Variant::Right => {
            syms.extend((i..j - 1).map(|k| Sym::neg(s(k))));
            syms.extend([Sym::pos(s(j - 1)), Sym::pos(s(j - 1))]);
            syms.extend((i..j - 1).rev().map(|k| Sym::pos(s(k))));
        }
    }
    BraidWord::new(n, Word::new(syms))
}

/// The full twist: its product form `A1.2 (A1.3 A2.3) ... (A1.n ... A(n-1).n)`
/// and its braid form `(s1 s2 ... s(n-1))^n`.
pub fn zword(n: usize) -> Result<(PureWord, BraidWord)> {
    if n < 2 {
        return Err(Error::Params(format!("full twist needs n >= 2, got {n}")));
    }
    let letters = (2..=n as u8).flat_map(|j| (1..j).map(move |i| Letter::A(i, j)));
    let pure = PureWord::new(n, Word::from_letters(letters))?;
    let row = Word::from_letters((1..n as u8).map(Letter::Sigma));
    let sigma = BraidWord::new(n, row.pow(n as i64))?;
    Ok((pure, sigma))
}

fn z_sigma(n: usize) -> Word {
    if n < 2 {
        return Word::empty();
    }
    zword(n).expect("n >= 2").1.word().clone()
}

/// Expand every letter into its braid word (`Left` variant for generators,
/// `(s1..s(n-1))^n` for `Z`). No reduction is applied.
pub fn to_sigma(w: &PureWord) -> BraidWord {
    let n = w.n;
    let z = z_sigma(n);
    let mut syms = Vec::new();
    for s in w.word.syms() {
        let img = match s.letter {
            Letter::A(i, j) => agen_sigma(i as usize, j as usize, n, Variant::Left)
                .expect("validated letter")
                .word()
                .clone(),
            Letter::Z => z.clone(),
            other => unreachable!("letter {other} outside the pure alphabet"),
        };
        if s.inv {
            syms.extend(img.inverse().into_syms());
        } else {
            syms.extend(img.into_syms());
        }
    }
    BraidWord::new(n, Word::new(syms)).expect("valid braid word")
}

/// Per-letter normal forms, so that long pure words can be normalized by
/// multiplying forms instead of expanding into one long braid word.
#[derive(Clone, Debug)]
pub struct PureNfTable {
    n: usize,
    table: HashMap<Letter, (GarsideNF, GarsideNF)>,
}

impl PureNfTable {
    pub fn new(n: usize) -> Self {
        let mut table = HashMap::new();
        for l in Alphabet::pure(n).letters() {
            let nf = GarsideNF::from_word(n, to_sigma(&PureWord { n, word: Word::gen(l) }).word());
            let inv = nf.inverse();
            table.insert(l, (nf, inv));
        }
        PureNfTable { n, table }
    }

    pub fn letter(&self, s: Sym) -> &GarsideNF {
        let (p, m) = &self.table[&s.letter];
        if s.inv {
            m
        } else {
            p
        }
    }

    pub fn nf(&self, w: &Word) -> GarsideNF {
        w.syms().iter().fold(GarsideNF::identity(self.n), |acc, s| acc.mul(self.letter(*s)))
    }
}

/// Equality in `P_n`, decided in `B_n`.
pub fn pure_equal(u: &PureWord, v: &PureWord) -> Result<bool> {
    if u.n != v.n {
        return Err(Error::StrandMismatch(u.n, v.n));
    }
    braid_equal(&to_sigma(u), &to_sigma(v))
}

pub fn is_pure(w: &BraidWord) -> bool {
    permutation_of(w).is_identity()
}

/// Which of the five conjugation rules applies to `A(r,s)^-1 A(i,j) A(r,s)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RelationCase {
    /// i < r < s < j
    Nested,
    /// r < s < i < j
    Disjoint,
    /// r < s = i < j
    SharedMiddle,
    /// r = i < s < j
    SharedStart,
    /// r < i < s < j
    Crossing,
}

impl RelationCase {
    pub fn label(&self) -> &'static str {
        match self {
            RelationCase::Nested => "i<r<s<j",
            RelationCase::Disjoint => "r<s<i<j",
            RelationCase::SharedMiddle => "r<s=i<j",
            RelationCase::SharedStart => "r=i<s<j",
            RelationCase::Crossing => "r<i<s<j",
        }
    }

    fn classify(r: usize, s: usize, i: usize, j: usize) -> Option<Self> {
        if i < r && s < j {
            Some(RelationCase::Nested)
        } else if s < i {
            Some(RelationCase::Disjoint)
        } else if s == i {
            Some(RelationCase::SharedMiddle)
        } else if r == i && s < j {
            Some(RelationCase::SharedStart)
        } else if r < i && i < s && s < j {
            Some(RelationCase::Crossing)
        } else {
            None
        }
    }
}

/// One instance of the pure braid relations:
/// `A(r,s)^-1 A(i,j) A(r,s) = rhs`.
#[derive(Clone, Debug)]
pub struct PureRelation {
    pub case: RelationCase,
    pub rs: (usize, usize),
    pub ij: (usize, usize),
    pub conjugator: PureWord,
    pub target: PureWord,
    pub rhs: PureWord,
}

impl PureRelation {
    pub fn lhs(&self) -> PureWord {
        self.target.conj(&self.conjugator)
    }

    pub fn describe(&self) -> String {
        let (r, s) = self.rs;
        let (i, j) = self.ij;
        format!("A{r}.{s}^-1 A{i}.{j} A{r}.{s} = {}  [{}]", self.rhs, self.case.label())
    }
}

/// Every instance of the five relation families for `n` strands.
pub fn pure_relations(n: usize) -> Vec<PureRelation> {
    let g = |i: usize, j: usize| PureWord::gen(n, i, j).expect("valid indices");
    let mut out = Vec::new();
    for (r, s) in pairs(n as u8) {
        for (i, j) in pairs(n as u8) {
            let (r, s, i, j) = (r as usize, s as usize, i as usize, j as usize);
            let Some(case) = RelationCase::classify(r, s, i, j) else {
                continue;
            };
            let aij = g(i, j);
            let rhs = match case {
                RelationCase::Nested | RelationCase::Disjoint => aij.clone(),
                RelationCase::SharedMiddle => aij.conj(&g(r, j).inverse()),
                RelationCase::SharedStart => aij.conj(&g(r, j).mul(&g(s, j)).inverse()),
                RelationCase::Crossing => aij.conj(&g(r, j).commutator(&g(s, j)).inverse()),
            };
            out.push(PureRelation { case, rs: (r, s), ij: (i, j), conjugator: g(r, s), target: aij, rhs });
        }
    }
    out
}

/// Check every defining relation of `P_n` in `B_n`.
pub fn relation_suite_purebraid(n: usize) -> Result<VerificationReport> {
    if n < 2 {
        return Err(Error::Params(format!("purebraid suite needs n >= 2, got {n}")));
    }
    let mut report = VerificationReport::new("purebraid", SuiteParams { n: Some(n), r: None });
    for (k, rel) in pure_relations(n).into_iter().enumerate() {
        let start = Instant::now();
        let lhs = to_sigma(&rel.lhs());
        let rhs = to_sigma(&rel.rhs);
        let ok = braid_equal(&lhs, &rhs)?;
        report.push(CaseResult {
            id: format!("rel-{k:04}"),
            relation: rel.describe(),
            status: if ok { CaseStatus::Pass } else { CaseStatus::Fail },
            elapsed_ms: start.elapsed().as_millis() as u64,
            peak_len: lhs.len().max(rhs.len()),
            witness: if ok { vec![] } else { vec![rel.lhs().to_string(), rel.rhs.to_string()] },
            note: None,
        });
    }
    Ok(report.finalize())
}

/// Canonical coordinates of a pure braid along the strand-forgetting tower:
/// the braid equals `levels[n] * levels[n-1] * ... * levels[2] * Z^central`,
/// where the level-`k` word uses only `A1.k .. A(k-1).k`.
///
/// [`comb`] never absorbs a full twist into `central`; it is always `0` for
/// combed braids, and the full twist appears spread over the levels.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CombedForm {
    pub n: usize,
    pub central: i64,
    levels: Vec<Word>,
}

impl CombedForm {
    /// The level-`k` word, `2 <= k <= n`.
    pub fn level(&self, k: usize) -> &Word {
        &self.levels[k - 2]
    }

    pub fn levels(&self) -> impl Iterator<Item = (usize, &Word)> {
        self.levels.iter().enumerate().map(|(k, w)| (k + 2, w))
    }

    /// The product `levels[n] ... levels[2] Z^central` as a pure word.
    pub fn to_pure_word(&self) -> PureWord {
        let mut w = Word::empty();
        for lvl in self.levels.iter().rev() {
            w = w.mul(lvl);
        }
        w = w.mul(&Word::power_of(Letter::Z, self.central));
        PureWord { n: self.n, word: w }
    }
}

impl fmt::Display for CombedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, w) in self.levels().collect::<Vec<_>>().into_iter().rev() {
            writeln!(f, "level {k}: {w}")?;
        }
        write!(f, "central: {}", self.central)
    }
}

/// Artin combing.
///
/// Let `act(b)` be the free-group automorphism of [`artin_images`]. For a
/// pure braid `b = u b'` with `u` in the free subgroup generated by
/// `A1.n .. A(n-1).n` and `b'` on the first `n-1` strands, `act(b)(xn)`
/// equals `W xn W^-1` and the map `u -> W mod xn` is an anti-isomorphism onto
/// `F(x1..x(n-1))` sending `A(i).n` to `P_i^-1 x_i P_i` with
/// `P_i = x(i+1) ... x(n-1)`. Inverting it gives `u`; the images for `b'` are
/// `act(u^-1) ∘ act(b)`, and the procedure repeats one level down.
pub fn comb(w: &BraidWord, max_len: usize) -> Result<CombedForm> {
    if !is_pure(w) {
        return Err(Error::NotPure);
    }
    let n = w.n();
    let mut levels = vec![Word::empty(); n.saturating_sub(1)];
    if n < 2 {
        return Ok(CombedForm { n, central: 0, levels });
    }
    let mut imgs = artin_images(w, max_len)?;
    for k in (2..=n).rev() {
        let xk = Letter::X(k as u8);
        let img = &imgs[k - 1];
        let syms = img.syms();
        let m = syms.len() / 2;
        if syms.len() % 2 != 1 || syms[m] != Sym::pos(xk) {
            return Err(Error::Params(format!("strand {k} image {img} is not a conjugate of x{k}")));
        }
        let conj: Word = Word::new(syms[..m].to_vec());
        let projected = Word::new(conj.syms().iter().copied().filter(|s| s.letter != xk).collect())
            .free_reduce();
        let u = level_word(k, &projected);
        levels[k - 2] = u.clone();
        if k > 2 {
            // images for b' = u^-1 b: act(b') = act(u^-1) ∘ act(b)
            let u_inv = to_sigma(&PureWord { n, word: u.inverse() });
            let uinv_imgs = artin_images(&u_inv, max_len)?;
            let sub = |l: Letter| match l {
                Letter::X(t) => uinv_imgs[t as usize - 1].clone(),
                _ => unreachable!(),
            };
            for x in imgs.iter_mut().take(k - 1) {
                *x = x.substitute_with(sub);
                if x.len() > max_len {
                    return Err(Error::LengthBudget(max_len));
                }
            }
        }
    }
    Ok(CombedForm { n, central: 0, levels })
}

/// Express `projected` in `F(x1..x(k-1))` through the basis
/// `g_i = P_i^-1 x_i P_i`, `P_i = x(i+1)...x(k-1)`, and reverse (the
/// correspondence is an anti-isomorphism).
fn level_word(k: usize, projected: &Word) -> Word {
    // x_i = P_i g_i P_i^-1 with P_i = x(i+1) P_(i+1); build from the top.
    let mut x_in_g: Vec<Word> = vec![Word::empty(); k];
    let mut p = Word::empty();
    for i in (1..k).rev() {
        let g = Word::gen(Letter::A(i as u8, k as u8));
        x_in_g[i] = p.mul(&g).mul(&p.inverse()).free_reduce();
        p = x_in_g[i].mul_reduced(&p);
    }
    let in_g = projected.substitute_with(|l| match l {
        Letter::X(t) => x_in_g[t as usize].clone(),
        _ => unreachable!(),
    });
    in_g.free_reduce().reversed()
}

trait Reversed {
    fn reversed(&self) -> Self;
}

impl Reversed for Word {
    /// Reverse the word without inverting the letters.
    fn reversed(&self) -> Self {
        Word::new(self.syms().iter().rev().copied().collect())
    }
}

/// Shorten a pure word without changing its value: free reduction, `Z`
/// collection, then deletion of any window of length `window..=2` (longest
/// first) that is trivial in `P_n`, rescanning after each deletion. Stops
/// early when the budget's deadline passes and returns the best word so far.
pub fn simplify(w: &PureWord, budget: &Budget) -> PureWord {
    let deadline = budget.deadline();
    let n = w.n;
    let norm = w.normalize_central();
    // the Z tail stays in play so windows like `A1.2 A1.3 A2.3 Z^-1` can vanish
    let mut body: Vec<Sym> = norm.word.into_syms();
    let table = PureNfTable::new(n);
    'outer: loop {
        let top = budget.window.min(body.len());
        for len in (2..=top).rev() {
            for start in 0..=body.len() - len {
                if deadline.expired() {
                    break 'outer;
                }
                let nf = body[start..start + len]
                    .iter()
                    .fold(GarsideNF::identity(n), |acc, s| acc.mul(table.letter(*s)));
                if nf.is_identity() {
                    body.drain(start..start + len);
                    let reduced = normalize_central(&Word::new(body), Letter::Z);
                    body = reduced.into_syms();
                    continue 'outer;
                }
            }
        }
        break;
    }
    PureWord { n, word: Word::new(body) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::garside_nf;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn pw(n: usize, s: &str) -> PureWord {
        PureWord::parse(n, s).unwrap()
    }

    #[test]
    fn agen_examples() {
        assert_eq!(agen_sigma(1, 2, 4, Variant::Left).unwrap().to_string(), "s1^2");
        assert_eq!(agen_sigma(1, 3, 3, Variant::Left).unwrap().to_string(), "s2 s1^2 s2^-1");
        assert_eq!(agen_sigma(1, 3, 3, Variant::Right).unwrap().to_string(), "s1^-1 s2^2 s1");
        assert!(agen_sigma(3, 2, 4, Variant::Left).is_err());
        for n in 2..=6 {
            for (i, j) in pairs(n as u8) {
                let (i, j) = (i as usize, j as usize);
                let l = agen_sigma(i, j, n, Variant::Left).unwrap();
                let r = agen_sigma(i, j, n, Variant::Right).unwrap();
                assert!(braid_equal(&l, &r).unwrap(), "A{i}.{j} n={n}");
            }
        }
    }

    #[test]
    fn zword_examples() {
        let (p, s) = zword(2).unwrap();
        assert_eq!(p.to_string(), "A1.2");
        assert_eq!(s.to_string(), "s1^2");
        let (p, s) = zword(3).unwrap();
        assert_eq!(p.to_string(), "A1.2 A1.3 A2.3");
        assert_eq!(s.to_string(), "s1 s2 s1 s2 s1 s2");
        for n in 2..=6 {
            let (p, s) = zword(n).unwrap();
            assert!(braid_equal(&to_sigma(&p), &s).unwrap());
            for k in 1..n {
                let g = BraidWord::sigma(n, k).unwrap();
                assert!(braid_equal(&s.mul(&g), &g.mul(&s)).unwrap());
            }
        }
    }

    #[test]
    fn to_sigma_examples() {
        assert_eq!(to_sigma(&pw(3, "A1.2")).to_string(), "s1^2");
        assert_eq!(to_sigma(&pw(3, "Z^-1")), zword(3).unwrap().1.inverse());
        assert_eq!(to_sigma(&pw(3, "A1.3 A2.3")).to_string(), "s2 s1^2 s2^-1 s2^2");
    }

    #[test]
    fn pure_equal_examples() {
        assert!(pure_equal(&pw(3, "Z"), &pw(3, "A1.2 A1.3 A2.3")).unwrap());
        assert!(!pure_equal(&pw(3, "A1.2 A1.3"), &pw(3, "A1.3 A1.2")).unwrap());
        assert!(!pure_equal(&pw(4, "A1.3"), &pw(4, "A2.4")).unwrap());
    }

    #[test]
    fn relation_examples() {
        let rels = pure_relations(3);
        let r = rels.iter().find(|r| r.rs == (1, 2) && r.ij == (1, 3)).unwrap();
        assert_eq!(r.case, RelationCase::SharedStart);
        assert_eq!(r.rhs, pw(3, "A1.3 A2.3 A1.3 A2.3^-1 A1.3^-1"));
        assert!(pure_equal(&r.lhs(), &r.rhs).unwrap());

        let rels = pure_relations(4);
        let r = rels.iter().find(|r| r.rs == (1, 2) && r.ij == (3, 4)).unwrap();
        assert_eq!(r.case, RelationCase::Disjoint);
        assert!(pure_equal(&r.lhs(), &pw(4, "A3.4")).unwrap());
        let r = rels.iter().find(|r| r.rs == (1, 3) && r.ij == (2, 4)).unwrap();
        assert_eq!(r.case, RelationCase::Crossing);
        let c = pw(4, "A1.4 A3.4 A1.4^-1 A3.4^-1");
        assert_eq!(r.rhs, pw(4, "A2.4").conj(&c.inverse()));
        assert!(pure_equal(&r.lhs(), &r.rhs).unwrap());
    }

    #[test]
    fn relation_suite_small() {
        for n in 2..=4 {
            let rep = relation_suite_purebraid(n).unwrap();
            assert!(rep.all_pass(), "{}", rep.to_text());
        }
        assert!(relation_suite_purebraid(1).is_err());
    }

    #[test]
    fn is_pure_examples() {
        assert!(is_pure(&BraidWord::parse(3, "s1 s1").unwrap()));
        assert!(!is_pure(&BraidWord::parse(3, "s1").unwrap()));
        assert!(is_pure(&to_sigma(&pw(4, "A1.3 A2.4^-1 Z"))));
    }

    #[test]
    fn comb_examples() {
        let c = comb(&to_sigma(&pw(3, "A1.3")), 1 << 16).unwrap();
        assert_eq!(c.level(3).to_string(), "A1.3");
        assert!(c.level(2).is_empty());
        assert_eq!(c.central, 0);

        let c = comb(&zword(3).unwrap().1, 1 << 16).unwrap();
        assert_eq!(c.level(3).to_string(), "A1.3 A2.3");
        assert_eq!(c.level(2).to_string(), "A1.2");

        let c = comb(&BraidWord::identity(3), 16).unwrap();
        assert!(c.levels().all(|(_, w)| w.is_empty()));
        assert_eq!(comb(&BraidWord::parse(3, "s1").unwrap(), 16), Err(Error::NotPure));
    }

    #[test]
    fn comb_single_generators() {
        for n in 2..=6 {
            for (i, k) in pairs(n as u8) {
                let w = to_sigma(&PureWord::gen(n, i as usize, k as usize).unwrap());
                let c = comb(&w, 1 << 16).unwrap();
                for (lvl, word) in c.levels() {
                    if lvl == k as usize {
                        assert_eq!(*word, Word::gen(Letter::A(i, k)));
                    } else {
                        assert!(word.is_empty());
                    }
                }
            }
        }
    }

    fn random_pure(rng: &mut ChaCha8Rng, n: usize, len: usize) -> PureWord {
        let letters = Alphabet::pure(n).letters();
        let syms = (0..len)
            .map(|_| {
                let l = letters[rng.gen_range(0..letters.len() - 1)];
                if rng.gen_bool(0.5) {
                    Sym::pos(l)
                } else {
                    Sym::neg(l)
                }
            })
            .collect();
        PureWord::new(n, Word::new(syms)).unwrap()
    }

    #[test]
    fn comb_reconstructs() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in 3..=5 {
            for _ in 0..30 {
                let w = random_pure(&mut rng, n, 6);
                let c = comb(&to_sigma(&w), 1 << 20).unwrap();
                assert!(pure_equal(&c.to_pure_word(), &w).unwrap(), "{w} -> {c}");
            }
        }
    }

    #[test]
    fn simplify_examples() {
        let b = Budget::default();
        assert_eq!(simplify(&pw(3, "A1.2 A1.2^-1 A1.3"), &b), pw(3, "A1.3"));
        assert_eq!(simplify(&pw(3, "Z A1.2 A1.2^-1 A1.3 Z^-1 A2.3"), &b), pw(3, "A1.3 A2.3"));
        assert!(simplify(&pw(3, "A1.2 A1.3 A2.3 Z^-1"), &b).is_empty());
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..20 {
            let w = random_pure(&mut rng, 4, 10);
            let s = simplify(&w, &b);
            assert!(s.len() <= w.len());
            assert!(pure_equal(&s, &w).unwrap());
            assert_eq!(simplify(&s, &b), s);
        }
    }

    #[test]
    fn nf_table_matches_expansion() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let t = PureNfTable::new(4);
        for _ in 0..20 {
            let w = random_pure(&mut rng, 4, 8);
            assert_eq!(t.nf(w.word()), garside_nf(&to_sigma(&w)));
        }
    }
}
