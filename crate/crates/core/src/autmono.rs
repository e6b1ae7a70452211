//! Automorphisms of the pure monomial braid group `P(r,n)`: the
//! transvections `Ψ`, `Υ<i>`, `Φ<i>.<j>.<p>`, the lifts `ρ̃<k>`, `ε̃`, `Δ̃` of
//! the normalizer generators, the lifts of Nielsen's generators for `n = 2`,
//! and the relation suites.
//!
//! The lifts are entered as image tables. Each table entry is checked
//! against the defining composite, computed independently in `B_{n+1}`:
//! `ρ̃1 = Υ2 · c(r1)`, `ε̃ = Ψ · ε`, `Δ̃ = Υn · Ψ · Δ` in the right-action
//! convention of [`crate::endo`] (the transvection acts first), where `c(b)`
//! is `x -> b^-1 x b`, `ε` inverts every `r<k>`, and `Δ` sends `r0` to
//! `X_n^-1` and `r<i>` to `r<n-i>`.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::braid::{crossing_counts, garside_nf, GarsideNF};
use crate::endo::{
    first_violation, formal_of, inv, lit, run_cases, Case, Endo, EndoRelation, Formal, ImageIdentity, NfModel,
};
use crate::error::{Error, Result};
use crate::monomial::{derived, mono_gen_rho, rho_embed, Derived, RhoWord};
use crate::report::{RunConfig, SuiteParams, VerificationReport};
use crate::words::{Alphabet, Letter, Sym, Word};

/// An endomorphism of `P(r,n)`.
pub type MonoEndo = Endo;

/// Group parameters with the word builders used by the tables.
#[derive(Clone, Copy, Debug)]
pub struct Mono {
    pub r: usize,
    pub n: usize,
}

impl Mono {
    pub fn new(r: usize, n: usize) -> Result<Self> {
        if r < 2 || n < 2 || n + 1 > crate::braid::MAX_STRANDS {
            return Err(Error::Params(format!("need r >= 2 and 2 <= n < {}, got r = {r}, n = {n}", crate::braid::MAX_STRANDS)));
        }
        Ok(Mono { r, n })
    }

    pub fn alphabet(&self) -> Alphabet {
        Alphabet::mono(self.r, self.n)
    }

    pub fn c(&self, j: usize) -> Word {
        assert!((1..=self.n).contains(&j), "C{j} with n = {}", self.n);
        Word::gen(Letter::C(j as u8))
    }

    pub fn a(&self, i: usize, j: usize, q: usize) -> Word {
        assert!(1 <= i && i < j && j <= self.n && 1 <= q && q <= self.r, "A{i}.{j}.{q} with r = {}, n = {}", self.r, self.n);
        Word::gen(Letter::MA(i as u8, j as u8, q as u8))
    }

    pub fn z(&self, k: i64) -> Word {
        Word::power_of(Letter::Zrn, k)
    }

    fn derived(&self, d: Derived) -> Word {
        derived(d, self.r, self.n).expect("index in range").word().clone()
    }

    /// `A<i>.<j>.<lo> ... A<i>.<j>.<hi>`, empty when `hi < lo`.
    pub fn run(&self, i: usize, j: usize, lo: usize, hi: usize) -> Word {
        Word::from_letters((lo..=hi).map(|q| Letter::MA(i as u8, j as u8, q as u8)))
    }

    pub fn v(&self, i: usize, j: usize) -> Word {
        self.derived(Derived::V { i, j, q: self.r })
    }

    pub fn d(&self, k: usize) -> Word {
        self.derived(Derived::D { k })
    }

    pub fn u(&self, i: usize, q: usize) -> Word {
        self.derived(Derived::U { i, q })
    }

    pub fn brk(&self, i: usize, j: usize, q: usize) -> Word {
        self.derived(Derived::Abrkt { i, j, q })
    }

    /// The center generator as a product of the other generators.
    pub fn center_word(&self) -> Word {
        self.derived(Derived::ZetaR)
    }

    /// Non-central generators in canonical order.
    pub fn gens(&self) -> Vec<Letter> {
        self.alphabet().letters().into_iter().filter(|l| *l != Letter::Zrn).collect()
    }

    fn endo(&self, name: &str, e: i64, f: impl FnMut(Letter) -> Word) -> Endo {
        Endo::from_fn(name, self.alphabet(), e, f).expect("mono alphabet")
    }
}

fn up(y: &Word, x: &Word) -> Word {
    x.inverse().mul(y).mul(x)
}

/// Transvections of `P(r,n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Transvection {
    Psi,
    Upsilon(usize),
    Phi(usize, usize, usize),
}

impl Transvection {
    fn name(&self) -> String {
        match self {
            Transvection::Psi => "Ψ".into(),
            Transvection::Upsilon(i) => format!("Υ{i}"),
            Transvection::Phi(i, j, p) => format!("Φ{i}.{j}.{p}"),
        }
    }

    fn exponents(&self, m: &Mono) -> Result<HashMap<Letter, i64>> {
        let (r, n) = (m.r, m.n);
        Ok(match *self {
            Transvection::Psi => HashMap::from([(Letter::C(1), -2)]),
            Transvection::Upsilon(i) => {
                if !(2..=n).contains(&i) {
                    return Err(Error::Index(format!("Υ{i} with n = {n}")));
                }
                HashMap::from([(Letter::C(1), 1), (Letter::C(i as u8), -1)])
            }
            Transvection::Phi(i, j, p) => {
                if !(1 <= i && i < j && j <= n && 1 <= p && p <= r) {
                    return Err(Error::Index(format!("Φ{i}.{j}.{p} with r = {r}, n = {n}")));
                }
                HashMap::from([(Letter::C(1), 1), (Letter::MA(i as u8, j as u8, p as u8), -1)])
            }
        })
    }
}

fn build_transvection(m: &Mono, name: String, t: &HashMap<Letter, i64>) -> Result<MonoEndo> {
    let e = match t.values().sum::<i64>() {
        0 => 1,
        -2 => -1,
        s => return Err(Error::TransvectionSum(s)),
    };
    Ok(m.endo(&name, e, |l| Word::gen(l).mul(&m.z(t.get(&l).copied().unwrap_or(0)))))
}

pub fn mono_transvection(m: &Mono, t: Transvection) -> Result<MonoEndo> {
    build_transvection(m, t.name(), &t.exponents(m)?)
}

/// Closed-form inverse, named `<name>^-1`.
pub fn mono_transvection_inverse(m: &Mono, t: Transvection) -> Result<MonoEndo> {
    let mut ex = t.exponents(m)?;
    if ex.values().sum::<i64>() == 0 {
        ex.values_mut().for_each(|v| *v = -*v);
    }
    build_transvection(m, format!("{}^-1", t.name()), &ex)
}

/// Which version of the image tables to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Table {
    /// Entries exactly as printed.
    Printed,
    /// Printed entries with the rows that disagree with the defining
    /// composites replaced: `ρ̃1` on `A1.j.r`, `A2.j.r` (`j >= 3`); `ρ̃k`,
    /// `k >= 2`, on `A<k+1>.<j>.<q>` (`q < r`) and `A<k>.<j>.r` (`j > k + 1`);
    /// `Δ̃` on `A<i>.<j>.<q>` with `q < r`.
    Corrected,
}

/// `ρ̃<k>`, `0 <= k <= n - 1`, from its corrected image table.
pub fn rho_tilde(m: &Mono, k: usize) -> Result<MonoEndo> {
    rho_tilde_with(m, k, Table::Corrected)
}

pub fn rho_tilde_with(m: &Mono, k: usize, table: Table) -> Result<MonoEndo> {
    let fixed = table == Table::Corrected;
    let (r, n) = (m.r, m.n);
    if k >= n {
        return Err(Error::Index(format!("ρ̃{k} with n = {n}")));
    }
    let name = format!("ρ̃{k}");
    let endo = match k {
        0 => m.endo(&name, 1, |l| match l {
            Letter::C(1) => m.c(1),
            Letter::C(j) => {
                let x = m.a(1, j as usize, r - 1);
                x.mul(&m.c(j as usize)).mul(&x.inverse())
            }
            Letter::MA(1, j, 1) => up(&m.a(1, j as usize, r), &m.c(1)),
            Letter::MA(1, j, q) => m.a(1, j as usize, q as usize - 1),
            _ => Word::gen(l),
        }),
        1 => m.endo(&name, 1, |l| match l {
            Letter::C(1) => up(&m.c(2), &m.a(1, 2, r)).mul(&m.z(1)),
            Letter::C(2) => m.c(1).mul(&m.z(-1)),
            Letter::MA(1, 2, q) if (q as usize) < r => {
                let q = q as usize;
                let x = m.c(1).mul(&m.run(1, 2, 1, r - q - 1));
                up(&m.a(1, 2, r - q), &x.inverse())
            }
            Letter::MA(1, j, q) if j >= 3 && q as usize == r && fixed => up(&m.a(2, j as usize, r), &m.a(1, 2, r)),
            Letter::MA(1, j, q) if j >= 3 && q as usize == r => m.a(2, j as usize, r),
            Letter::MA(2, j, q) if q as usize == r && fixed => m.a(1, j as usize, r),
            Letter::MA(1, j, q) if j >= 3 => {
                let q = q as usize;
                let x = m.c(1).mul(&m.run(1, 2, 1, r - q - 1)).mul(&m.c(1).inverse());
                up(&m.a(2, j as usize, q), &x.inverse())
            }
            Letter::MA(2, j, q) if (q as usize) < r => {
                let q = q as usize;
                up(&m.a(1, j as usize, q), &m.run(1, 2, q + 1, r))
            }
            _ => Word::gen(l),
        }),
        k => m.endo(&name, 1, |l| match l {
            Letter::C(j) => {
                let j = j as usize;
                if k + 1 == j {
                    m.c(j - 1)
                } else if k == j {
                    up(&m.c(j + 1), &m.a(j, j + 1, r))
                } else {
                    m.c(j)
                }
            }
            Letter::MA(i, j, q) => {
                let (i, j, q) = (i as usize, j as usize, q as usize);
                let inner = |i: usize, q: usize| m.d(i).mul(&m.run(i, i + 1, 1, r - q - 1));
                if k + 1 == i && q < r {
                    let lo = if fixed { q + 1 } else { q };
                    up(&m.a(i - 1, j, q), &m.run(i - 1, i, lo, r - 1).mul(&m.a(i - 1, i, r)))
                } else if k + 1 == i {
                    m.a(i - 1, j, r)
                } else if k == i && i + 1 < j && q < r {
                    up(&m.a(i + 1, j, q), &inner(i, q).mul(&m.d(i).inverse()).inverse())
                } else if k == i && i + 1 < j && fixed {
                    up(&m.a(i + 1, j, r), &m.a(i, i + 1, r))
                } else if k == i && i + 1 < j {
                    m.a(i + 1, j, r)
                } else if k == i && i + 1 == j && q < r {
                    up(&m.a(i, i + 1, r - q), &inner(i, q).inverse())
                } else if k + 1 == j && j - 1 > i {
                    m.a(i, j - 1, q)
                } else if k == j {
                    up(&m.a(i, j + 1, q), &m.a(j, j + 1, r))
                } else {
                    m.a(i, j, q)
                }
            }
            _ => Word::gen(l),
        }),
    };
    Ok(endo)
}

/// `ε̃` from its image table.
pub fn eps_tilde(m: &Mono) -> MonoEndo {
    let r = m.r;
    m.endo("ε̃", 1, |l| match l {
        Letter::C(1) => m.c(1).inverse().mul(&m.z(2)),
        Letter::C(j) => up(&m.c(j as usize).inverse(), &m.v(1, j as usize)),
        Letter::MA(i, j, q) => {
            let (i, j, q) = (i as usize, j as usize, q as usize);
            let core = if q == r {
                m.a(i, j, r).inverse()
            } else {
                m.d(i).mul(&m.a(i, j, r - q).inverse()).mul(&m.d(i).inverse())
            };
            up(&core, &m.v(i + 1, j))
        }
        _ => Word::gen(l),
    })
}

/// `Δ̃` from its corrected image table.
pub fn delta_tilde(m: &Mono) -> MonoEndo {
    delta_tilde_with(m, Table::Corrected)
}

pub fn delta_tilde_with(m: &Mono, table: Table) -> MonoEndo {
    let (r, n) = (m.r, m.n);
    let bracket = |s: usize| {
        let mut w = m.u(s, r).mul(&m.d(s));
        for q in 1..r {
            w = w.mul(&m.u(s, q));
        }
        w.inverse()
    };
    m.endo("Δ̃", 1, |l| match l {
        Letter::C(1) => m.d(n).inverse().mul(&m.z(1)),
        Letter::C(j) if j as usize == n => bracket(1).mul(&m.z(1)),
        Letter::C(j) => bracket(n - j as usize + 1),
        Letter::MA(i, j, q) => {
            let (i, j, q) = (i as usize, j as usize, q as usize);
            let (a2, b2) = (n - j + 1, n - i + 1);
            if q == r {
                up(&m.a(a2, b2, r), &m.v(a2, b2))
            } else if table == Table::Corrected {
                // A<a>.<b>.<q> conjugated by (A^[q+1]_<b-1>.<b> ... A^[q+1]_<a+1>.<b>)^-1
                let x = (a2 + 1..b2).fold(Word::empty(), |w, k| m.run(k, b2, q + 1, r - 1).mul(&w));
                up(&m.a(a2, b2, q), &x.inverse())
            } else {
                let x = m.v(a2, b2).mul(&m.d(a2).inverse()).mul(&m.d(b2).inverse());
                up(&m.a(a2, b2, q), &x)
            }
        }
        _ => Word::gen(l),
    })
}

/// Maps of `B(r,n)` used to define the lifts, applied to words of `P(r,n)`
/// through the defining `r` words, and evaluated in `B_{n+1}`.
#[derive(Clone, Debug)]
pub enum BraidMap {
    /// `x -> b^-1 x b`.
    Conj(RhoWord),
    /// `r<k> -> r<k>^-1`.
    Mirror,
    /// `r0 -> X_n^-1`, `r<i> -> r<n-i>`.
    Delta,
}

impl BraidMap {
    fn apply_rho(&self, m: &Mono, rho: &Word) -> Word {
        match self {
            BraidMap::Conj(b) => b.word().inverse().mul(rho).mul(b.word()),
            BraidMap::Mirror => rho.substitute_with(|l| Word::new(vec![Sym::neg(l)])),
            BraidMap::Delta => rho.substitute_with(|l| match l {
                Letter::Rho(0) => RhoWord::x(m.r, m.n, m.n).expect("X_n").word().inverse(),
                Letter::Rho(i) => Word::gen(Letter::Rho(m.n as u8 - i)),
                other => unreachable!("{other} in a rho word"),
            }),
        }
    }

    /// Image of a word of `P(r,n)`, as a normal form in `B_{n+1}`.
    pub fn apply(&self, m: &Mono, w: &Word) -> GarsideNF {
        let rho = self.apply_rho(m, &to_rho(m, w));
        garside_nf(&rho_embed(&RhoWord::new(m.r, m.n, rho).expect("rho word")))
    }
}

fn to_rho(m: &Mono, w: &Word) -> Word {
    w.substitute_with(|l| mono_gen_rho(l, m.r, m.n).expect("mono letter").word().clone())
}

/// `Ψ` or `Υ<i>` on a word of `B(r,n)` lying in `P(r,n)`: the central shift
/// is read off the crossing counts of the first strand.
fn transvect_rho(m: &Mono, t: Transvection, rho: &Word) -> Word {
    let ex = t.exponents(m).expect("transvection");
    let counts = crossing_counts(&rho_embed(&RhoWord::new(m.r, m.n, rho.clone()).expect("rho word")));
    let mut shift = 0;
    for (l, e) in ex {
        let Letter::C(j) = l else { unreachable!("only Ψ and Υ act through crossing counts") };
        let c = counts[0][j as usize];
        assert_eq!(c % (2 * m.r as i64), 0, "not in P(r,n)");
        shift += e * c / (2 * m.r as i64);
    }
    rho.mul(&RhoWord::zeta(m.r, m.n).word().pow(shift * m.r as i64))
}

#[derive(Clone, Debug)]
pub enum Step {
    Tv(Transvection),
    Map(BraidMap),
}

impl Step {
    fn name(&self) -> String {
        match self {
            Step::Tv(t) => t.name(),
            Step::Map(BraidMap::Conj(b)) => format!("c({})", b.word()),
            Step::Map(BraidMap::Mirror) => "ε".into(),
            Step::Map(BraidMap::Delta) => "Δ".into(),
        }
    }
}

/// The defining composite of a lift, steps applied left to right.
#[derive(Clone, Debug)]
pub struct Composite {
    pub steps: Vec<Step>,
}

impl Composite {
    pub fn name(&self) -> String {
        self.steps.iter().map(Step::name).collect::<Vec<_>>().join(" then ")
    }

    pub fn image(&self, m: &Mono, l: Letter) -> GarsideNF {
        let rho = self.steps.iter().fold(to_rho(m, &Word::gen(l)), |w, s| match s {
            Step::Tv(t) => transvect_rho(m, *t, &w),
            Step::Map(b) => b.apply_rho(m, &w),
        });
        garside_nf(&rho_embed(&RhoWord::new(m.r, m.n, rho).expect("rho word")))
    }
}

fn rho_gen(m: &Mono, k: usize) -> RhoWord {
    RhoWord::new(m.r, m.n, Word::gen(Letter::Rho(k as u8))).expect("rho letter")
}

/// The defining composites of `ρ̃<k>`, `ε̃`, `Δ̃`, paired with their tables.
pub fn lifts(m: &Mono) -> Result<Vec<(Endo, Composite)>> {
    let n = m.n;
    let mut out = Vec::new();
    for k in 0..n {
        let mut steps = if k == 1 { vec![Step::Tv(Transvection::Upsilon(2))] } else { vec![] };
        steps.push(Step::Map(BraidMap::Conj(rho_gen(m, k))));
        out.push((rho_tilde(m, k)?, Composite { steps }));
    }
    let eps = vec![Step::Tv(Transvection::Psi), Step::Map(BraidMap::Mirror)];
    out.push((eps_tilde(m), Composite { steps: eps }));
    let delta = vec![Step::Tv(Transvection::Psi), Step::Tv(Transvection::Upsilon(n)), Step::Map(BraidMap::Delta)];
    out.push((delta_tilde(m), Composite { steps: delta }));
    Ok(out)
}

/// Table entries checked against the defining composites, one case per
/// generator.
pub fn definition_cases(m: &Mono) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for (endo, comp) in lifts(m)? {
        let shown = comp.name();
        for (x, g) in m.gens().into_iter().enumerate() {
            cases.push(Case::Image(ImageIdentity::new(
                format!("def-{}-{x:03}", endo.name),
                format!("{}({g}) = ({shown})({g}) = {}", endo.name, endo.image(g)),
                vec![endo.clone()],
                Word::gen(g),
                comp.image(m, g),
            )));
        }
    }
    Ok(cases)
}

/// Each lift sends the center word to the central generator.
pub fn center_cases(m: &Mono, model: &NfModel, endos: &[Endo], tag: &str) -> Vec<Case> {
    let zw = m.center_word();
    let target = model.nf(&m.z(1));
    endos
        .iter()
        .map(|e| {
            Case::Image(ImageIdentity::new(
                format!("{tag}-{}", e.name),
                format!("{}(Zrn) = Zrn, with Zrn = D1 ... D{}", e.name, m.n),
                vec![e.clone()],
                zw.clone(),
                target.clone(),
            ))
        })
        .collect()
}

/// A relation corpus for `P(r,n)`: every relation is confirmed by the
/// braid oracle before use. It contains the centrality of the center word,
/// commuting pairs of generators, commuting generator / conjugated
/// generator pairs, and seeded products of conjugates of these.
pub fn relation_corpus(m: &Mono, model: &NfModel, seed: u64) -> Vec<(Word, Word)> {
    let gens = m.gens();
    let zw = m.center_word();
    let mut out = Vec::new();
    let keep = |l: Word, r: Word, out: &mut Vec<(Word, Word)>| {
        if model.equal(&l, &r) {
            out.push((l, r));
        }
    };
    for &g in &gens {
        let g = Word::gen(g);
        keep(g.mul(&zw), zw.mul(&g), &mut out);
    }
    let syms: Vec<Sym> = gens.iter().flat_map(|&g| [Sym::pos(g), Sym::neg(g)]).collect();
    for (x, &g) in gens.iter().enumerate() {
        for &h in &gens[x + 1..] {
            let (g, h) = (Word::gen(g), Word::gen(h));
            keep(g.mul(&h), h.mul(&g), &mut out);
            for s in &syms {
                let w = Word::new(vec![*s]);
                let hc = w.mul(&h).mul(&w.inverse()).free_reduce();
                if hc.len() == 3 {
                    keep(g.mul(&hc), hc.mul(&g), &mut out);
                }
            }
        }
    }
    let base = out.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..base.min(16) {
        let mut lhs = Word::empty();
        for _ in 0..3 {
            let (l, r) = &out[rng.gen_range(0..base)];
            let rel = l.mul(&r.inverse());
            let c = Word::new((0..2).map(|_| syms[rng.gen_range(0..syms.len())]).collect());
            lhs = lhs.mul(&c.mul(&rel).mul(&c.inverse()));
        }
        keep(lhs.free_reduce(), Word::empty(), &mut out);
    }
    out
}

/// The first corpus relation `e` fails to respect, if any.
pub fn mono_violation(m: &Mono, model: &NfModel, corpus: &[(Word, Word)], e: &Endo) -> Option<String> {
    first_violation(model, e, corpus.iter().map(|(l, r)| (l, r)), &m.center_word())
}

pub fn mono_well_defined(m: &Mono, model: &NfModel, e: &Endo, seed: u64) -> bool {
    mono_violation(m, model, &relation_corpus(m, model, seed), e).is_none()
}

fn pow(seq: &[Endo], k: usize) -> Vec<Endo> {
    seq.iter().cloned().cycle().take(seq.len() * k).collect()
}

fn rel(id: String, text: String, lhs: Vec<Endo>, rhs: Vec<Endo>) -> Case {
    let stated = (formal_of(&lhs), formal_of(&rhs));
    Case::Relation(EndoRelation::new(id, text, lhs, rhs).stated(stated.0, stated.1))
}

/// `x^-1 t x = rhs`, checked as `t x = x rhs`.
fn conj_case(id: String, text: String, x: &Endo, t: &Endo, rhs: Vec<Endo>) -> Case {
    let mut right = vec![x.clone()];
    right.extend(rhs.iter().cloned());
    Case::Relation(
        EndoRelation::new(id, text, vec![t.clone(), x.clone()], right)
            .stated(vec![inv(x), lit(t), lit(x)], formal_of(&rhs)),
    )
}

/// `x t x = rhs` for an involution `x`, checked as written.
fn sandwich_case(id: String, text: String, x: &Endo, t: &Endo, rhs: Vec<Endo>) -> Case {
    rel(id, text, vec![x.clone(), t.clone(), x.clone()], rhs)
}

/// The lifts with their names, for building relations.
struct Lifts {
    rho: Vec<Endo>,
    eps: Endo,
    delta: Endo,
}

impl Lifts {
    fn new(m: &Mono) -> Result<Self> {
        Ok(Lifts { rho: (0..m.n).map(|k| rho_tilde(m, k)).collect::<Result<_>>()?, eps: eps_tilde(m), delta: delta_tilde(m) })
    }

    fn all(&self) -> Vec<Endo> {
        let mut v = self.rho.clone();
        v.push(self.eps.clone());
        v.push(self.delta.clone());
        v
    }

    fn rho_seq(&self, ks: impl IntoIterator<Item = usize>) -> Vec<Endo> {
        ks.into_iter().map(|k| self.rho[k].clone()).collect()
    }
}

/// Relations among `ρ̃<k>`, `ε̃`, `Δ̃`.
pub fn normalizer_cases(m: &Mono) -> Result<Vec<Case>> {
    let n = m.n;
    let lf = Lifts::new(m)?;
    let (e, d) = (&lf.eps, &lf.delta);
    let mut cases = Vec::new();
    for i in 1..n - 1 {
        cases.push(rel(
            format!("nrm-braid-{i:02}"),
            format!("ρ̃{i} ρ̃{} ρ̃{i} = ρ̃{} ρ̃{i} ρ̃{}", i + 1, i + 1, i + 1),
            lf.rho_seq([i, i + 1, i]),
            lf.rho_seq([i + 1, i, i + 1]),
        ));
    }
    for i in 0..n {
        for j in i + 2..n {
            cases.push(rel(
                format!("nrm-comm-{i:02}-{j:02}"),
                format!("ρ̃{i} ρ̃{j} = ρ̃{j} ρ̃{i}"),
                lf.rho_seq([i, j]),
                lf.rho_seq([j, i]),
            ));
        }
    }
    cases.push(rel("nrm-eps2".into(), "ε̃^2 = 1".into(), vec![e.clone(), e.clone()], vec![]));
    cases.push(rel(
        "nrm-tau-power".into(),
        format!("(ρ̃0 ... ρ̃{})^{n} = 1", n - 1),
        pow(&lf.rho_seq(0..n), n),
        vec![],
    ));
    cases.push(rel(
        "nrm-rho01".into(),
        "(ρ̃0 ρ̃1)^2 = (ρ̃1 ρ̃0)^2".into(),
        pow(&lf.rho_seq([0, 1]), 2),
        pow(&lf.rho_seq([1, 0]), 2),
    ));
    cases.push(rel("nrm-delta2".into(), "Δ̃^2 = 1".into(), vec![d.clone(), d.clone()], vec![]));
    let x: Vec<usize> = (1..n).rev().chain(0..n).collect();
    let mut lambda = lf.rho_seq(x.clone());
    lambda.extend([d.clone(), lf.rho[0].clone(), d.clone()]);
    let stated_rhs: Formal = x.iter().rev().map(|&k| inv(&lf.rho[k])).collect();
    cases.push(Case::Relation(
        EndoRelation::new(
            "nrm-delta-rho0",
            format!("Δ̃ ρ̃0 Δ̃ = (ρ̃{} ... ρ̃1 ρ̃0 ρ̃1 ... ρ̃{})^-1, checked as λ̃ = 1", n - 1, n - 1),
            lambda,
            vec![],
        )
        .stated(vec![lit(d), lit(&lf.rho[0]), lit(d)], stated_rhs),
    ));
    for k in 0..n {
        cases.push(rel(
            format!("nrm-eps-rho-{k:02}"),
            format!("(ε̃ ρ̃{k})^2 = 1"),
            pow(&[e.clone(), lf.rho[k].clone()], 2),
            vec![],
        ));
    }
    cases.push(rel("nrm-eps-delta".into(), "[ε̃, Δ̃] = 1".into(), vec![e.clone(), d.clone()], vec![d.clone(), e.clone()]));
    for k in 1..n {
        cases.push(sandwich_case(
            format!("nrm-delta-rho-{k:02}"),
            format!("Δ̃ ρ̃{k} Δ̃ = ρ̃{}", n - k),
            d,
            &lf.rho[k],
            vec![lf.rho[n - k].clone()],
        ));
    }
    Ok(cases)
}

/// The action of `τ̃ = ρ̃0 ... ρ̃(n-1)` against conjugation by
/// `T = r0 ... r(n-1)`: equal up to the central factors on `C1` and `C2`.
pub fn tau_cases(m: &Mono, model: &NfModel) -> Result<Vec<Case>> {
    let lf = Lifts::new(m)?;
    let seq = lf.rho_seq(0..m.n);
    let t = RhoWord::new(m.r, m.n, Word::from_letters((0..m.n).map(|k| Letter::Rho(k as u8))))?;
    let tau = BraidMap::Conj(t);
    let zp = model.nf(&m.z(1));
    let mut cases = Vec::new();
    for (x, g) in m.gens().into_iter().enumerate() {
        let base = tau.apply(m, &Word::gen(g));
        let (target, shown) = match g {
            Letter::C(1) => (base.mul(&zp), "τ(C1) Zrn".to_string()),
            Letter::C(2) => (base.mul(&zp.inverse()), "τ(C2) Zrn^-1".to_string()),
            _ => (base, format!("τ({g})")),
        };
        cases.push(Case::Image(ImageIdentity::new(
            format!("tau-{x:03}"),
            format!("τ̃({g}) = {shown}"),
            seq.clone(),
            Word::gen(g),
            target,
        )));
    }
    Ok(cases)
}

fn check_n3(m: &Mono) -> Result<()> {
    if m.n < 3 {
        return Err(Error::Params(format!("need n >= 3, got {}", m.n)));
    }
    Ok(())
}

/// Well-definedness of the lifts via the relation corpus.
fn hom_cases(m: &Mono, model: &NfModel, endos: &[Endo], seed: u64) -> Vec<Case> {
    let corpus = relation_corpus(m, model, seed);
    crate::endo::well_defined_cases(endos, "the relation corpus", |e| mono_violation(m, model, &corpus, e))
}

/// Relations of the normalizer lifts, their defining composites, center
/// fixing, and the `τ̃` identities.
pub fn suite_prop43(r: usize, n: usize, cfg: &RunConfig) -> Result<VerificationReport> {
    let m = Mono::new(r, n)?;
    check_n3(&m)?;
    let model = NfModel::mono(r, n);
    let lf = Lifts::new(&m)?;
    let mut cases = definition_cases(&m)?;
    cases.extend(center_cases(&m, &model, &lf.all(), "fixz"));
    cases.extend(hom_cases(&m, &model, &lf.all(), cfg.seed));
    cases.extend(normalizer_cases(&m)?);
    cases.extend(tau_cases(&m, &model)?);
    Ok(run_cases("prop43", SuiteParams { n: Some(n), r: Some(r) }, &model, &cases, cfg))
}

/// The transvection generators and their inverses.
struct Tvs {
    m: Mono,
}

impl Tvs {
    fn psi(&self) -> Endo {
        mono_transvection(&self.m, Transvection::Psi).expect("Ψ")
    }
    fn ups(&self, l: usize) -> Endo {
        mono_transvection(&self.m, Transvection::Upsilon(l)).expect("valid Υ")
    }
    fn ups_inv(&self, l: usize) -> Endo {
        mono_transvection_inverse(&self.m, Transvection::Upsilon(l)).expect("valid Υ")
    }
    fn phi(&self, i: usize, j: usize, p: usize) -> Endo {
        mono_transvection(&self.m, Transvection::Phi(i, j, p)).expect("valid Φ")
    }
    fn phi_inv(&self, i: usize, j: usize, p: usize) -> Endo {
        mono_transvection_inverse(&self.m, Transvection::Phi(i, j, p)).expect("valid Φ")
    }
    fn phis(&self) -> Vec<(usize, usize, usize)> {
        let (r, n) = (self.m.r, self.m.n);
        let mut v = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                for p in 1..=r {
                    v.push((i, j, p));
                }
            }
        }
        v
    }
}

fn names(v: &[Endo]) -> String {
    if v.is_empty() {
        return "1".into();
    }
    v.iter().map(|e| e.name.as_str()).collect::<Vec<_>>().join(" ")
}

/// The full presentation of `Aut(P(r,n))`, `n >= 3`.
pub fn suite_thm45(r: usize, n: usize, cfg: &RunConfig) -> Result<VerificationReport> {
    let m = Mono::new(r, n)?;
    check_n3(&m)?;
    let model = NfModel::mono(r, n);
    let lf = Lifts::new(&m)?;
    let tv = Tvs { m };
    let (e, d) = (&lf.eps, &lf.delta);
    let psi = tv.psi();
    let phis = tv.phis();
    let ups: Vec<usize> = (2..=n).collect();

    let mut gens = vec![psi.clone()];
    gens.extend(ups.iter().map(|&l| tv.ups(l)));
    gens.extend(phis.iter().map(|&(i, j, p)| tv.phi(i, j, p)));
    let mut cases = hom_cases(&m, &model, &gens, cfg.seed);
    cases.extend(normalizer_cases(&m)?);

    cases.push(rel("tv-psi2".into(), "Ψ^2 = 1".into(), vec![psi.clone(), psi.clone()], vec![]));
    for &l in &ups {
        for &(i, j, p) in &phis {
            cases.push(rel(
                format!("tv-comm-ups{l:02}-{i:02}-{j:02}-{p:02}"),
                format!("[Υ{l}, Φ{i}.{j}.{p}] = 1"),
                vec![tv.ups(l), tv.phi(i, j, p)],
                vec![tv.phi(i, j, p), tv.ups(l)],
            ));
        }
        for &l2 in ups.iter().filter(|&&x| x > l) {
            cases.push(rel(
                format!("tv-comm-ups{l:02}-ups{l2:02}"),
                format!("[Υ{l}, Υ{l2}] = 1"),
                vec![tv.ups(l), tv.ups(l2)],
                vec![tv.ups(l2), tv.ups(l)],
            ));
        }
    }
    for (x, &(i, j, p)) in phis.iter().enumerate() {
        for &(k, l, q) in &phis[x + 1..] {
            cases.push(rel(
                format!("tv-comm-{i:02}-{j:02}-{p:02}-{k:02}-{l:02}-{q:02}"),
                format!("[Φ{i}.{j}.{p}, Φ{k}.{l}.{q}] = 1"),
                vec![tv.phi(i, j, p), tv.phi(k, l, q)],
                vec![tv.phi(k, l, q), tv.phi(i, j, p)],
            ));
        }
    }
    cases.push(sandwich_case("tv-eps-psi".into(), "ε̃ Ψ ε̃ = Ψ".into(), e, &psi, vec![psi.clone()]));
    cases.push(sandwich_case("tv-delta-psi".into(), "Δ̃ Ψ Δ̃ = Ψ".into(), d, &psi, vec![psi.clone()]));
    for &l in &ups {
        cases.push(sandwich_case(format!("tv-psi-ups-{l:02}"), format!("Ψ Υ{l} Ψ = Υ{l}^-1"), &psi, &tv.ups(l), vec![tv.ups_inv(l)]));
    }
    for &(i, j, p) in &phis {
        cases.push(sandwich_case(
            format!("tv-psi-phi-{i:02}-{j:02}-{p:02}"),
            format!("Ψ Φ{i}.{j}.{p} Ψ = Φ{i}.{j}.{p}^-1"),
            &psi,
            &tv.phi(i, j, p),
            vec![tv.phi_inv(i, j, p)],
        ));
    }
    for k in 0..n {
        cases.push(conj_case(format!("conj-rho{k:02}-psi"), format!("ρ̃{k}^-1 Ψ ρ̃{k} = Ψ"), &lf.rho[k], &psi, vec![psi.clone()]));
    }

    // action on Υ
    for &l in &ups {
        let rhs = if l < n { vec![tv.ups_inv(n - l + 1), tv.ups(n)] } else { vec![tv.ups(n)] };
        cases.push(sandwich_case(format!("act-delta-ups-{l:02}"), format!("Δ̃ Υ{l} Δ̃ = {}", names(&rhs)), d, &tv.ups(l), rhs));
        let rhs = vec![tv.ups_inv(l)];
        cases.push(sandwich_case(format!("act-eps-ups-{l:02}"), format!("ε̃ Υ{l} ε̃ = {}", names(&rhs)), e, &tv.ups(l), rhs));
        let rhs = vec![tv.ups(l)];
        cases.push(conj_case(format!("act-rho00-ups-{l:02}"), format!("ρ̃0^-1 Υ{l} ρ̃0 = {}", names(&rhs)), &lf.rho[0], &tv.ups(l), rhs));
        let rhs = if l == 2 { vec![tv.ups_inv(2)] } else { vec![tv.ups_inv(2), tv.ups(l)] };
        cases.push(conj_case(format!("act-rho01-ups-{l:02}"), format!("ρ̃1^-1 Υ{l} ρ̃1 = {}", names(&rhs)), &lf.rho[1], &tv.ups(l), rhs));
        for k in 2..n {
            let t = if l == k {
                k + 1
            } else if l == k + 1 {
                k
            } else {
                l
            };
            let rhs = vec![tv.ups(t)];
            cases.push(conj_case(
                format!("act-rho{k:02}-ups-{l:02}"),
                format!("ρ̃{k}^-1 Υ{l} ρ̃{k} = {}", names(&rhs)),
                &lf.rho[k],
                &tv.ups(l),
                rhs,
            ));
        }
    }

    // action on Φ
    for &(i, j, p) in &phis {
        let tag = format!("{i:02}-{j:02}-{p:02}");
        let f = tv.phi(i, j, p);
        let rhs = if j < n {
            vec![tv.ups_inv(n - j + 1), tv.ups_inv(n - i + 1), tv.ups(n), tv.phi(n - j + 1, n - i + 1, p)]
        } else {
            vec![tv.ups_inv(n - i + 1), tv.ups(n), tv.phi(1, n - i + 1, p)]
        };
        cases.push(sandwich_case(format!("act-delta-phi-{tag}"), format!("Δ̃ {} Δ̃ = {}", f.name, names(&rhs)), d, &f, rhs));
        let rhs = if p < r { vec![tv.phi_inv(i, j, r - p)] } else { vec![tv.phi_inv(i, j, r)] };
        cases.push(sandwich_case(format!("act-eps-phi-{tag}"), format!("ε̃ {} ε̃ = {}", f.name, names(&rhs)), e, &f, rhs));
        let rhs = match (i, p) {
            (1, 1) => vec![tv.phi(1, j, r)],
            (1, p) => vec![tv.phi(1, j, p - 1)],
            _ => vec![f.clone()],
        };
        cases.push(conj_case(format!("act-rho00-phi-{tag}"), format!("ρ̃0^-1 {} ρ̃0 = {}", f.name, names(&rhs)), &lf.rho[0], &f, rhs));
        let rhs = match (i, j) {
            (1, 2) if p < r => vec![tv.ups_inv(2), tv.phi(1, 2, r - p)],
            (1, j) if j > 2 => vec![tv.ups_inv(2), tv.phi(2, j, p)],
            (2, j) => vec![tv.ups_inv(2), tv.phi(1, j, p)],
            _ => vec![tv.ups_inv(2), f.clone()],
        };
        cases.push(Case::Relation(match conj_case(
            format!("act-rho01-phi-{tag}"),
            format!("ρ̃1^-1 {} ρ̃1 = {}", f.name, names(&rhs)),
            &lf.rho[1],
            &f,
            rhs,
        ) {
            Case::Relation(x) => x.with_note("table index q on the left read as p on the right"),
            _ => unreachable!(),
        }));
        for k in 2..n {
            let rhs = if k + 1 == i {
                Some(tv.phi(k, j, p))
            } else if k == i && i + 1 < j {
                Some(tv.phi(k + 1, j, p))
            } else if k == i && i + 1 == j && p < r {
                Some(tv.phi(k, k + 1, r - p))
            } else if k + 1 == j && j - 1 > i {
                Some(tv.phi(i, k, p))
            } else if k == j {
                Some(tv.phi(i, k + 1, p))
            } else if k == i && i + 1 == j {
                None
            } else {
                Some(f.clone())
            };
            let uncovered = rhs.is_none();
            let rhs = vec![rhs.unwrap_or_else(|| f.clone())];
            let case = conj_case(
                format!("act-rho{k:02}-phi-{tag}"),
                format!("ρ̃{k}^-1 {} ρ̃{k} = {}", f.name, names(&rhs)),
                &lf.rho[k],
                &f,
                rhs,
            );
            cases.push(match case {
                Case::Relation(x) if uncovered => Case::Relation(x.with_note("no table row for p = r; checked as fixed")),
                other => other,
            });
        }
    }
    Ok(run_cases("thm45", SuiteParams { n: Some(n), r: Some(r) }, &model, &cases, cfg))
}

/// `A1.2.1 ... A1.2.(r-1) C2 A1.2.r`, the free basis of `P(r,2)` modulo
/// the center in order; `Zrn = C1` times this.
pub fn free_basis_product(m: &Mono) -> Word {
    let r = m.r;
    Word::from_letters((1..r).map(|x| Letter::MA(1, 2, x as u8)))
        .mul(&Word::gen(Letter::C(2)))
        .mul(&Word::gen(Letter::MA(1, 2, r as u8)))
}

/// The lifts to `P(r,2)` of Nielsen's generators `P`, `Q`, `σ`, `U` of
/// `Aut(F_(r+1))`.
pub fn nielsen(m: &Mono, name: &str) -> Result<MonoEndo> {
    if m.n != 2 {
        return Err(Error::Params(format!("Nielsen lifts live on P(r,2), got n = {}", m.n)));
    }
    let r = m.r;
    let a = |q: usize| m.a(1, 2, q);
    let endo = match name {
        "P" => {
            let swap = |l: Letter| match l {
                Letter::MA(1, 2, 1) => a(2),
                Letter::MA(1, 2, 2) => a(1),
                _ => Word::gen(l),
            };
            // the unique image fixing Zrn = C1 X; for r >= 3 it reduces to
            // C1 [A1.2.1, A1.2.2]
            let x = free_basis_product(m);
            let px = x.substitute_with(swap);
            m.endo("P", 1, |l| match l {
                Letter::C(1) => m.c(1).mul(&x).mul(&px.inverse()),
                _ => swap(l),
            })
        }
        "Q" => m.endo("Q", 1, |l| match l {
            Letter::C(1) => up(&m.c(1), &a(1)),
            Letter::C(2) => a(r),
            Letter::MA(1, 2, q) if (q as usize) < r - 1 => a(q as usize + 1),
            Letter::MA(1, 2, q) if q as usize == r - 1 => m.c(2),
            Letter::MA(1, 2, _) => a(1),
            _ => Word::gen(l),
        }),
        "σ" => m.endo("σ", 1, |l| match l {
            Letter::C(1) => m.c(1).mul(&a(1).pow(2)),
            Letter::MA(1, 2, 1) => a(1).inverse(),
            _ => Word::gen(l),
        }),
        "U" => m.endo("U", 1, |l| match l {
            Letter::C(1) => m.c(1).mul(&a(1)).mul(&a(1).mul(&a(2)).inverse()),
            Letter::MA(1, 2, 1) => a(1).mul(&a(2)),
            _ => Word::gen(l),
        }),
        other => return Err(Error::Params(format!("unknown generator {other}"))),
    };
    Ok(endo)
}

/// The `P(r,2)` case: the Nielsen lifts fix the center and act on the
/// transvections as tabulated.
pub fn suite_prop46(r: usize, cfg: &RunConfig) -> Result<VerificationReport> {
    let m = Mono::new(r, 2)?;
    let model = NfModel::mono(r, 2);
    let tv = Tvs { m };
    let lifts: Vec<Endo> = ["P", "Q", "σ", "U"].iter().map(|x| nielsen(&m, x)).collect::<Result<_>>()?;
    let (p, q, s, u) = (&lifts[0], &lifts[1], &lifts[2], &lifts[3]);
    let psi = tv.psi();
    let ups = tv.ups(2);
    let phi = |x: usize| tv.phi(1, 2, x);

    let zw = Word::gen(Letter::C(1)).mul(&free_basis_product(&m));
    let mut cases = vec![Case::Image(ImageIdentity::new(
        "center-word",
        if r == 2 {
            "Zrn = C1 A1.2.1 C2 A1.2.2".to_string()
        } else {
            format!("Zrn = C1 A1.2.1 ... A1.2.{} C2 A1.2.{r}", r - 1)
        },
        vec![],
        zw.clone(),
        model.nf(&m.z(1)),
    ))];
    for e in &lifts {
        cases.push(Case::Image(ImageIdentity::new(
            format!("fixz-{}", e.name),
            format!("{}(Zrn) = Zrn", e.name),
            vec![e.clone()],
            zw.clone(),
            model.nf(&m.z(1)),
        )));
    }
    let mut all = lifts.clone();
    all.extend([psi.clone(), ups.clone()]);
    all.extend((1..=r).map(phi));
    cases.extend(hom_cases(&m, &model, &all, cfg.seed));

    let mut act = |x: &Endo, t: &Endo, rhs: Vec<Endo>| {
        let id = format!("act-{}-{}", x.name, t.name);
        let text = format!("{}^-1 {} {} = {}", x.name, t.name, x.name, names(&rhs));
        cases.push(conj_case(id, text, x, t, rhs));
    };
    for x in [p, q, s, u] {
        act(x, &psi, vec![psi.clone()]);
    }
    act(p, &ups, vec![ups.clone()]);
    act(p, &phi(1), vec![phi(2)]);
    act(p, &phi(2), vec![phi(1)]);
    for k in 3..=r {
        act(p, &phi(k), vec![phi(k)]);
    }
    act(q, &ups, vec![phi(r)]);
    for k in 1..=r.saturating_sub(2) {
        act(q, &phi(k), vec![phi(k + 1)]);
    }
    act(q, &phi(r - 1), vec![ups.clone()]);
    act(q, &phi(r), vec![phi(1)]);
    act(s, &ups, vec![ups.clone()]);
    act(s, &phi(1), vec![tv.phi_inv(1, 2, 1)]);
    for k in 2..=r {
        act(s, &phi(k), vec![phi(k)]);
    }
    act(u, &ups, vec![ups.clone()]);
    act(u, &phi(2), vec![tv.phi_inv(1, 2, 1), phi(2)]);
    for k in (1..=r).filter(|&k| k != 2) {
        act(u, &phi(k), vec![phi(k)]);
    }
    Ok(run_cases("prop46", SuiteParams { n: Some(2), r: Some(r) }, &model, &cases, cfg))
}
