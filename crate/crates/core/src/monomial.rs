//! The monomial braid group `B(r,n)` on `r0 .. r(n-1)` and its pure
//! subgroup `P(r,n)` on `C<j>`, `A<i>.<j>.<q>` and the central `Zrn`.
//!
//! Both are handled through the embedding `B(r,n) -> B_{n+1}` given by
//! `r0 -> s1^2`, `rj -> s(j+1)`. With `r = 1` the pure generators map onto
//! the generators of `P_{n+1}` (up to relabeling), which is how the
//! degenerate case is identified with the pure braid group.

use std::fmt;
use std::time::Instant;

use crate::braid::{braid_equal, BraidWord, GarsideNF};
use crate::error::{Error, Result};
use crate::purebraid::{to_sigma, zword, PureWord};
use crate::report::{CaseResult, CaseStatus, SuiteParams, VerificationReport};
use crate::words::{Alphabet, Letter, Sym, Word};

/// A word in the monomial braid group `B(r,n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RhoWord {
    r: usize,
    n: usize,
    word: Word,
}

fn rho(k: usize) -> Letter {
    Letter::Rho(k as u8)
}

impl RhoWord {
    pub fn new(r: usize, n: usize, word: Word) -> Result<Self> {
        if r == 0 || n == 0 {
            return Err(Error::Params(format!("B(r,n) needs r, n >= 1, got r={r}, n={n}")));
        }
        Alphabet::rho(n).check(&word)?;
        Ok(RhoWord { r, n, word })
    }

    pub fn parse(r: usize, n: usize, text: &str) -> Result<Self> {
        RhoWord::new(r, n, text.parse()?)
    }

    pub fn identity(r: usize, n: usize) -> Self {
        RhoWord { r, n, word: Word::empty() }
    }

    /// `X_i = r(i-1) ... r1 r0 r1 ... r(i-1)`.
    pub fn x(r: usize, n: usize, i: usize) -> Result<Self> {
        if !(1..=n).contains(&i) {
            return Err(Error::Index(format!("X{i} with n = {n}")));
        }
        let up = Word::from_letters((1..i).map(rho));
        let down = Word::from_letters((1..i).rev().map(rho));
        RhoWord::new(r, n, down.mul(&Word::gen(rho(0))).mul(&up))
    }

    /// `zeta_n = (r0 r1 ... r(n-1))^n`, generating the center of `B(r,n)`.
    pub fn zeta(r: usize, n: usize) -> Self {
        let tau = Word::from_letters((0..n).map(rho));
        RhoWord { r, n, word: tau.pow(n as i64) }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn mul(&self, other: &RhoWord) -> RhoWord {
        assert_eq!((self.r, self.n), (other.r, other.n), "parameter mismatch");
        RhoWord { r: self.r, n: self.n, word: self.word.mul(&other.word) }
    }

    pub fn inverse(&self) -> RhoWord {
        RhoWord { r: self.r, n: self.n, word: self.word.inverse() }
    }

    pub fn pow(&self, k: i64) -> RhoWord {
        RhoWord { r: self.r, n: self.n, word: self.word.pow(k) }
    }
}

impl fmt::Display for RhoWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word)
    }
}

/// The embedding into `B_{n+1}`.
pub fn rho_embed(w: &RhoWord) -> BraidWord {
    let mut syms = Vec::with_capacity(w.word.len() + 4);
    for s in w.word.syms() {
        let Letter::Rho(k) = s.letter else { unreachable!("checked alphabet") };
        let img = if k == 0 {
            Sym { letter: Letter::Sigma(1), inv: s.inv }
        } else {
            Sym { letter: Letter::Sigma(k + 1), inv: s.inv }
        };
        syms.push(img);
        if k == 0 {
            syms.push(img);
        }
    }
    BraidWord::new(w.n + 1, Word::new(syms)).expect("n + 1 strands")
}

/// A freely reduced word in the pure monomial braid group `P(r,n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonoWord {
    r: usize,
    n: usize,
    word: Word,
}

impl MonoWord {
    pub fn new(r: usize, n: usize, word: Word) -> Result<Self> {
        if r == 0 || n == 0 {
            return Err(Error::Params(format!("P(r,n) needs r, n >= 1, got r={r}, n={n}")));
        }
        Alphabet::mono(r, n).check(&word)?;
        Ok(MonoWord { r, n, word: word.free_reduce() })
    }

    pub fn parse(r: usize, n: usize, text: &str) -> Result<Self> {
        MonoWord::new(r, n, text.parse()?)
    }

    pub fn identity(r: usize, n: usize) -> Self {
        MonoWord { r, n, word: Word::empty() }
    }

    pub fn c(r: usize, n: usize, j: usize) -> Result<Self> {
        MonoWord::new(r, n, Word::gen(Letter::C(j as u8)))
    }

    /// `A<i>.<j>.<q>`.
    pub fn a(r: usize, n: usize, i: usize, j: usize, q: usize) -> Result<Self> {
        MonoWord::new(r, n, Word::gen(Letter::MA(i as u8, j as u8, q as u8)))
    }

    pub fn zrn(r: usize, n: usize) -> Self {
        MonoWord { r, n, word: Word::gen(Letter::Zrn) }
    }

    pub fn r(&self) -> usize {
        self.r
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

    pub fn alphabet(&self) -> Alphabet {
        Alphabet::mono(self.r, self.n)
    }

    pub fn mul(&self, other: &MonoWord) -> MonoWord {
        assert_eq!((self.r, self.n), (other.r, other.n), "parameter mismatch");
        MonoWord { r: self.r, n: self.n, word: self.word.mul_reduced(&other.word) }
    }

    pub fn inverse(&self) -> MonoWord {
        MonoWord { r: self.r, n: self.n, word: self.word.inverse() }
    }

    pub fn pow(&self, k: i64) -> MonoWord {
        MonoWord { r: self.r, n: self.n, word: self.word.pow(k).free_reduce() }
    }

    /// `x^{-1} self x`.
    pub fn conj(&self, x: &MonoWord) -> MonoWord {
        x.inverse().mul(self).mul(x)
    }
}

impl fmt::Display for MonoWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word)
    }
}

/// The defining `rho` word of a pure monomial generator.
pub fn mono_gen_rho(letter: Letter, r: usize, n: usize) -> Result<RhoWord> {
    if !Alphabet::mono(r, n).contains(letter) {
        return Err(Error::LetterOutsideAlphabet {
            letter: letter.to_string(),
            alphabet: Alphabet::mono(r, n).to_string(),
        });
    }
    let ladder = |lo: usize, hi: usize| Word::from_letters((lo..hi).rev().map(rho));
    let word = match letter {
        Letter::C(j) => {
            let down = ladder(1, j as usize);
            down.mul(&Word::power_of(rho(0), r as i64)).mul(&down.inverse())
        }
        Letter::MA(i, j, q) => {
            let (i, j, q) = (i as usize, j as usize, q as i64);
            let x = RhoWord::x(r, n, i)?.word;
            let down = ladder(i + 1, j);
            let core = down.mul(&Word::power_of(rho(i), 2)).mul(&down.inverse());
            x.pow(q - r as i64).mul(&core).mul(&x.pow(r as i64 - q))
        }
        Letter::Zrn => RhoWord::zeta(r, n).word.pow(r as i64),
        _ => unreachable!(),
    };
    RhoWord::new(r, n, word)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    /// Expand each letter into `rho` letters, then embed.
    ViaRho,
    /// Use the closed-form images in `P_{n+1}`.
    Direct,
}

/// The image of a single letter in `P_{n+1}` under the closed-form map:
/// `C_j -> A1.(j+1)^r`, `A<i>.<j>.<q> -> T^(q-r) A(i+1).(j+1) T^(r-q)` with
/// `T = A1.(i+1) ... Ai.(i+1)`, `Zrn -> Z^r`.
pub fn mono_letter_pure(letter: Letter, r: usize, n: usize) -> PureWord {
    let m = n + 1;
    let a = |i: u8, j: u8| Word::gen(Letter::A(i, j));
    let word = match letter {
        Letter::C(j) => a(1, j + 1).pow(r as i64),
        Letter::MA(i, j, q) => {
            let t = Word::from_letters((1..=i).map(|k| Letter::A(k, i + 1)));
            let e = q as i64 - r as i64;
            t.pow(e).mul(&a(i + 1, j + 1)).mul(&t.pow(-e))
        }
        Letter::Zrn => Word::power_of(Letter::Z, r as i64),
        other => unreachable!("letter {other} outside the monomial alphabet"),
    };
    PureWord::new(m, word).expect("indices shift into P_(n+1)")
}

/// A pure monomial word as a pure braid word on `n + 1` strands.
pub fn mono_to_pure(w: &MonoWord) -> PureWord {
    let word = w.word.substitute_with(|l| mono_letter_pure(l, w.r, w.n).word().clone());
    PureWord::new(w.n + 1, word).expect("valid pure word")
}

pub fn mono_to_braid(w: &MonoWord, route: Route) -> BraidWord {
    match route {
        Route::Direct => to_sigma(&mono_to_pure(w)),
        Route::ViaRho => {
            let word = w.word.substitute_with(|l| {
                mono_gen_rho(l, w.r, w.n).expect("checked alphabet").word
            });
            rho_embed(&RhoWord { r: w.r, n: w.n, word })
        }
    }
}

/// Equality in `P(r,n)`, decided in `B_{n+1}`.
pub fn mono_equal(u: &MonoWord, v: &MonoWord) -> Result<bool> {
    if (u.r, u.n) != (v.r, v.n) {
        return Err(Error::Params(format!(
            "P({},{}) vs P({},{})",
            u.r, u.n, v.r, v.n
        )));
    }
    braid_equal(&mono_to_braid(u, Route::Direct), &mono_to_braid(v, Route::Direct))
}

/// Normal form of a pure monomial word in `B_{n+1}`.
pub fn mono_nf(w: &MonoWord) -> GarsideNF {
    crate::braid::garside_nf(&mono_to_braid(w, Route::Direct))
}

/// Named products of pure monomial generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Derived {
    /// `A<i>.<j>^[q] = A<i>.<j>.<q> A<i>.<j>.<q+1> ... A<i>.<j>.<r-1>`, `q < r`
    Abrkt { i: usize, j: usize, q: usize },
    /// `V<i>.<j>^(q) = A<i>.<j>.<q> A<i+1>.<j>.<q> ... A<j-1>.<j>.<q>`, empty when `i = j`
    V { i: usize, j: usize, q: usize },
    /// `D_k = A(k-1).k^[1] ... A1.k^[1] C_k V1.k^(r)`
    D { k: usize },
    /// `U<i>^(q) = A<i>.<i+1>.<q> ... A<i>.<n>.<q>`
    U { i: usize, q: usize },
    /// `D_1 D_2 ... D_n`, the product form of `Zrn`
    ZetaR,
}

pub fn derived(d: Derived, r: usize, n: usize) -> Result<MonoWord> {
    let ma = |i: usize, j: usize, q: usize| Letter::MA(i as u8, j as u8, q as u8);
    let bad = || Error::Index(format!("{d:?} with r = {r}, n = {n}"));
    let word = match d {
        Derived::Abrkt { i, j, q } => {
            if !(1 <= i && i < j && j <= n && 1 <= q && q < r) {
                return Err(bad());
            }
            Word::from_letters((q..r).map(|p| ma(i, j, p)))
        }
        Derived::V { i, j, q } => {
            if !(1 <= i && i <= j && j <= n && 1 <= q && q <= r) {
                return Err(bad());
            }
            Word::from_letters((i..j).map(|k| ma(k, j, q)))
        }
        Derived::D { k } => {
            if !(1..=n).contains(&k) {
                return Err(bad());
            }
            let mut w = Word::empty();
            for i in (1..k).rev() {
                w = w.mul(&Word::from_letters((1..r).map(|p| ma(i, k, p))));
            }
            w.mul(&Word::gen(Letter::C(k as u8)))
                .mul(&Word::from_letters((1..k).map(|i| ma(i, k, r))))
        }
        Derived::U { i, q } => {
            if !(1 <= i && i <= n && 1 <= q && q <= r) {
                return Err(bad());
            }
            Word::from_letters((i + 1..=n).map(|j| ma(i, j, q)))
        }
        Derived::ZetaR => {
            let mut w = Word::empty();
            for k in 1..=n {
                w = w.mul(derived(Derived::D { k }, r, n)?.word());
            }
            w
        }
    };
    MonoWord::new(r, n, word)
}

fn rho_case(id: String, relation: String, lhs: &RhoWord, rhs: &RhoWord) -> Result<CaseResult> {
    let start = Instant::now();
    let (a, b) = (rho_embed(lhs), rho_embed(rhs));
    let ok = braid_equal(&a, &b)?;
    Ok(CaseResult {
        id,
        relation,
        status: if ok { CaseStatus::Pass } else { CaseStatus::Fail },
        elapsed_ms: start.elapsed().as_millis() as u64,
        peak_len: a.len().max(b.len()),
        witness: if ok { vec![] } else { vec![lhs.to_string(), rhs.to_string()] },
        note: None,
    })
}

/// The identities behind the description of the center of `P(r,n)`:
/// (a) `zeta_n = X_1 ... X_n`, (b) the `X_i` commute, (c) `D_k = X_k^r`,
/// (d) `zeta_n^r = D_1 ... D_n`, (e) `zeta_n^r` commutes with every
/// generator.
pub fn center_lemma_suite(r: usize, n: usize) -> Result<VerificationReport> {
    if r < 2 || n < 1 {
        return Err(Error::Params(format!("center suite needs r >= 2, n >= 1, got r={r}, n={n}")));
    }
    let mut report = VerificationReport::new("center", SuiteParams { n: Some(n), r: Some(r) });
    let x = |i: usize| RhoWord::x(r, n, i).expect("valid index");
    let as_rho = |w: &MonoWord| RhoWord {
        r,
        n,
        word: w.word.substitute_with(|l| mono_gen_rho(l, r, n).expect("valid letter").word),
    };
    let zeta = RhoWord::zeta(r, n);

    let prod = (1..=n).fold(RhoWord::identity(r, n), |acc, i| acc.mul(&x(i)));
    report.push(rho_case("a".into(), "zeta_n = X1 ... Xn".into(), &zeta, &prod)?);

    for i in 1..=n {
        for j in i + 1..=n {
            report.push(rho_case(
                format!("b-{i}-{j}"),
                format!("X{i} X{j} = X{j} X{i}"),
                &x(i).mul(&x(j)),
                &x(j).mul(&x(i)),
            )?);
        }
    }

    for k in 1..=n {
        let d = as_rho(&derived(Derived::D { k }, r, n)?);
        report.push(rho_case(format!("c-{k}"), format!("D{k} = X{k}^{r}"), &d, &x(k).pow(r as i64))?);
    }

    let ds = as_rho(&derived(Derived::ZetaR, r, n)?);
    report.push(rho_case("d".into(), format!("zeta_n^{r} = D1 ... D{n}"), &zeta.pow(r as i64), &ds)?);

    let zr = zeta.pow(r as i64);
    for l in Alphabet::mono(r, n).letters() {
        if l == Letter::Zrn {
            continue;
        }
        let g = mono_gen_rho(l, r, n)?;
        report.push(rho_case(
            format!("e-{l}"),
            format!("zeta_n^{r} commutes with {l}"),
            &zr.mul(&g),
            &g.mul(&zr),
        )?);
    }
    Ok(report.finalize())
}

/// Route agreement and purity for every generator of `P(r,n)`.
pub fn route_suite(r: usize, n: usize) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("routes", SuiteParams { n: Some(n), r: Some(r) });
    for l in Alphabet::mono(r, n).letters() {
        let start = Instant::now();
        let w = MonoWord { r, n, word: Word::gen(l) };
        let a = mono_to_braid(&w, Route::ViaRho);
        let b = mono_to_braid(&w, Route::Direct);
        let ok = braid_equal(&a, &b)? && crate::purebraid::is_pure(&a);
        report.push(CaseResult {
            id: format!("route-{l}"),
            relation: format!("{l}: via rho = direct, pure"),
            status: if ok { CaseStatus::Pass } else { CaseStatus::Fail },
            elapsed_ms: start.elapsed().as_millis() as u64,
            peak_len: a.len().max(b.len()),
            witness: if ok { vec![] } else { vec![a.to_string(), b.to_string()] },
            note: None,
        });
    }
    Ok(report.finalize())
}

/// The defining relations of `B(r,n)` as pairs of words.
pub fn monomial_relations(r: usize, n: usize) -> Vec<(RhoWord, RhoWord)> {
    let g = |k: usize| Word::gen(rho(k));
    let mk = |w: Word| RhoWord { r, n, word: w };
    let mut out = Vec::new();
    if n >= 2 {
        out.push((mk(g(0).mul(&g(1)).pow(2)), mk(g(1).mul(&g(0)).pow(2))));
    }
    for i in 1..n.saturating_sub(1) {
        out.push((
            mk(g(i).mul(&g(i + 1)).mul(&g(i))),
            mk(g(i + 1).mul(&g(i)).mul(&g(i + 1))),
        ));
    }
    for i in 0..n {
        for j in i + 2..n {
            out.push((mk(g(i).mul(&g(j))), mk(g(j).mul(&g(i)))));
        }
    }
    out
}

/// Whether the embedding sends `zeta_n` to the full twist of `B_{n+1}`.
pub fn zeta_matches_full_twist(n: usize) -> Result<bool> {
    let zeta = rho_embed(&RhoWord::zeta(1, n));
    braid_equal(&zeta, &zword(n + 1)?.1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::purebraid::{agen_sigma, Variant};

    fn mw(r: usize, n: usize, s: &str) -> MonoWord {
        MonoWord::parse(r, n, s).unwrap()
    }

    #[test]
    fn embed_examples() {
        assert_eq!(rho_embed(&RhoWord::parse(2, 3, "r0").unwrap()).to_string(), "s1^2");
        assert_eq!(rho_embed(&RhoWord::parse(2, 3, "r1 r2").unwrap()).to_string(), "s2 s3");
        assert_eq!(rho_embed(&RhoWord::parse(2, 3, "r0^-1").unwrap()).to_string(), "s1^-2");
        for n in 1..=4 {
            assert!(zeta_matches_full_twist(n).unwrap(), "n = {n}");
        }
        assert!(RhoWord::parse(2, 2, "r2").is_err());
    }

    #[test]
    fn embedded_relations_hold() {
        for n in 2..=5 {
            for (a, b) in monomial_relations(2, n) {
                assert!(braid_equal(&rho_embed(&a), &rho_embed(&b)).unwrap(), "{a} = {b}");
            }
        }
    }

    #[test]
    fn generator_examples() {
        for r in 1..=4 {
            assert_eq!(mono_gen_rho(Letter::C(1), r, 3).unwrap().word, Word::power_of(rho(0), r as i64));
        }
        let a = mono_gen_rho(Letter::MA(1, 2, 2), 2, 2).unwrap();
        assert_eq!(a.word.free_reduce().to_string(), "r1^2");
        let a = mono_gen_rho(Letter::MA(1, 2, 1), 2, 2).unwrap();
        assert_eq!(a.word.free_reduce().to_string(), "r0^-1 r1^2 r0");
        assert!(mono_gen_rho(Letter::MA(1, 2, 3), 2, 2).is_err());
        assert_eq!(RhoWord::x(2, 3, 3).unwrap().to_string(), "r2 r1 r0 r1 r2");
    }

    #[test]
    fn route_examples() {
        let b = mono_to_braid(&mw(2, 2, "C1"), Route::Direct);
        assert!(braid_equal(&b, &BraidWord::parse(3, "s1^4").unwrap()).unwrap());
        let b = mono_to_braid(&mw(2, 2, "C1"), Route::ViaRho);
        assert_eq!(b.to_string(), "s1^4");
        let b = mono_to_braid(&mw(2, 2, "A1.2.2"), Route::ViaRho);
        assert!(braid_equal(&b, &agen_sigma(2, 3, 3, Variant::Left).unwrap()).unwrap());
        for (r, n) in [(1, 3), (2, 2), (2, 3), (3, 2), (3, 3), (2, 4), (3, 4)] {
            let rep = route_suite(r, n).unwrap();
            assert!(rep.all_pass(), "{}", rep.to_text());
        }
    }

    #[test]
    fn derived_examples() {
        for r in 2..=3 {
            assert_eq!(derived(Derived::D { k: 1 }, r, 3).unwrap(), mw(r, 3, "C1"));
        }
        assert_eq!(derived(Derived::V { i: 1, j: 3, q: 2 }, 2, 3).unwrap(), mw(2, 3, "A1.3.2 A2.3.2"));
        assert_eq!(derived(Derived::Abrkt { i: 1, j: 2, q: 1 }, 3, 2).unwrap(), mw(3, 2, "A1.2.1 A1.2.2"));
        assert_eq!(derived(Derived::U { i: 1, q: 1 }, 2, 3).unwrap(), mw(2, 3, "A1.2.1 A1.3.1"));
        assert_eq!(
            derived(Derived::D { k: 2 }, 2, 2).unwrap(),
            mw(2, 2, "A1.2.1 C2 A1.2.2")
        );
        assert!(derived(Derived::Abrkt { i: 1, j: 2, q: 2 }, 2, 2).is_err());
    }

    #[test]
    fn equality_examples() {
        let z = derived(Derived::ZetaR, 2, 2).unwrap();
        assert!(mono_equal(&MonoWord::zrn(2, 2), &z).unwrap());
        assert!(!mono_equal(&mw(2, 2, "C1 C2"), &mw(2, 2, "C2 C1")).unwrap());
        assert!(!mono_equal(&mw(2, 2, "A1.2.1"), &mw(2, 2, "A1.2.2")).unwrap());
        assert!(mono_equal(&mw(2, 2, "C1"), &mw(3, 2, "C1")).is_err());
    }

    #[test]
    fn center_lemma() {
        for r in 2..=3 {
            for n in 1..=4 {
                let rep = center_lemma_suite(r, n).unwrap();
                assert!(rep.all_pass(), "{}", rep.to_text());
            }
        }
        assert!(center_lemma_suite(1, 2).is_err());
    }
}
