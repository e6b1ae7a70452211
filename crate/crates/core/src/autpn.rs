//! Automorphisms of the pure braid group `P_n`: the transvections `ψ` and
//! `φ<i>.<j>`, the mapping-class lifts `ω1 .. ωn` and `ε`, and the relation
//! suites for their presentations (including the three-strand case).
//!
//! See [`crate::endo`] for the composition convention.

use std::collections::BTreeMap;

use crate::braid::BraidWord;
use crate::endo::{first_violation, inv, lit, run_cases, Case, Endo, EndoRelation, Formal, ImageIdentity, NfModel};
use crate::error::{Error, Result};
use crate::purebraid::{comb, pure_relations, to_sigma, zword, PureWord};
use crate::report::{Budget, RunConfig, SuiteParams, VerificationReport};
use crate::words::{pairs, Alphabet, Letter, Sym, Word};

/// An endomorphism of `P_n`.
pub type PureEndo = Endo;

fn a(i: usize, j: usize) -> Word {
    Word::gen(Letter::A(i as u8, j as u8))
}

fn z(k: i64) -> Word {
    Word::power_of(Letter::Z, k)
}

/// `A(i,j) A(i,j+1) ...` style products: `prod(it)` multiplies generators.
fn prod(it: impl IntoIterator<Item = (usize, usize)>) -> Word {
    Word::from_letters(it.into_iter().map(|(i, j)| Letter::A(i as u8, j as u8)))
}

/// `y^x = x^-1 y x`.
fn up(y: &Word, x: &Word) -> Word {
    x.inverse().mul(y).mul(x)
}

fn indices(l: Letter) -> (usize, usize) {
    match l {
        Letter::A(i, j) => (i as usize, j as usize),
        other => unreachable!("{other} is not a pure braid generator"),
    }
}

fn check_n(n: usize, min: usize) -> Result<()> {
    if n < min || n > crate::braid::MAX_STRANDS {
        return Err(Error::Params(format!("need {min} <= n <= {}, got {n}", crate::braid::MAX_STRANDS)));
    }
    Ok(())
}

/// Exponent table of a transvection `A(i,j) -> A(i,j) Z^t(i,j)`.
pub type Exponents = BTreeMap<(usize, usize), i64>;

/// The transvection with exponents `t`; the central letter goes to `Z` or
/// `Z^-1` according as the exponents sum to `0` or `-2`.
pub fn transvection(name: &str, n: usize, t: &Exponents) -> Result<PureEndo> {
    check_n(n, 2)?;
    let sum: i64 = t.values().sum();
    let e = match sum {
        0 => 1,
        -2 => -1,
        s => return Err(Error::TransvectionSum(s)),
    };
    for &(i, j) in t.keys() {
        if !(1 <= i && i < j && j <= n) {
            return Err(Error::Index(format!("A{i}.{j} with n = {n}")));
        }
    }
    Endo::from_fn(name, Alphabet::pure(n), e, |l| {
        let k = t.get(&indices(l)).copied().unwrap_or(0);
        Word::gen(l).mul(&z(k))
    })
}

/// Closed-form inverse: negated exponents when the sum is `0`; a
/// transvection inverting `Z` is an involution.
pub fn transvection_inverse(name: &str, n: usize, t: &Exponents) -> Result<PureEndo> {
    let sum: i64 = t.values().sum();
    if sum == -2 {
        return transvection(name, n, t);
    }
    let neg = t.iter().map(|(k, v)| (*k, -v)).collect();
    transvection(name, n, &neg)
}

fn psi_table() -> Exponents {
    BTreeMap::from([((1, 2), -2)])
}

fn phi_table(i: usize, j: usize) -> Result<Exponents> {
    if (i, j) == (1, 2) {
        return Err(Error::Index("there is no φ1.2".into()));
    }
    Ok(BTreeMap::from([((1, 2), 1), ((i, j), -1)]))
}

pub fn psi(n: usize) -> Result<PureEndo> {
    transvection("ψ", n, &psi_table())
}

pub fn phi(n: usize, i: usize, j: usize) -> Result<PureEndo> {
    transvection(&format!("φ{i}.{j}"), n, &phi_table(i, j)?)
}

pub fn phi_inv(n: usize, i: usize, j: usize) -> Result<PureEndo> {
    transvection_inverse(&format!("φ{i}.{j}^-1"), n, &phi_table(i, j)?)
}

/// The lift `ωk` of the mapping class generator, `1 <= k <= n`.
pub fn omega(k: usize, n: usize) -> Result<PureEndo> {
    check_n(n, 3)?;
    if !(1..=n).contains(&k) {
        return Err(Error::Index(format!("ω{k} with n = {n}")));
    }
    let name = format!("ω{k}");
    Endo::from_fn(name, Alphabet::pure(n), 1, |l| {
        let (i, j) = indices(l);
        if k == n {
            if j != n {
                return a(i, j);
            }
            let w = a(i, n).mul(&prod((1..i).map(|p| (p, i)))).mul(&prod((i + 1..n).map(|q| (i, q))));
            let c = if i <= 2 { 1 } else { 0 };
            return w.inverse().mul(&z(c));
        }
        if k == 2 {
            return match (i, j) {
                (1, 2) => up(&a(1, 3), &a(2, 3)).mul(&z(1)),
                (1, 3) => a(1, 2).mul(&z(-1)),
                (2, j) if j >= 4 => up(&a(3, j), &a(2, 3)),
                (3, j) => a(2, j),
                _ => a(i, j),
            };
        }
        if k + 1 == i {
            a(i - 1, j)
        } else if k == i && i + 1 < j {
            up(&a(i + 1, j), &a(i, i + 1))
        } else if k + 1 == j && j - 1 > i {
            a(i, j - 1)
        } else if k == j {
            up(&a(i, j + 1), &a(j, j + 1))
        } else {
            a(i, j)
        }
    })
}

pub fn epsilon(n: usize) -> Result<PureEndo> {
    check_n(n, 2)?;
    Endo::from_fn("ε", Alphabet::pure(n), 1, |l| {
        let (i, j) = indices(l);
        if (i, j) == (1, 2) {
            return a(1, 2).inverse().mul(&z(2));
        }
        let tail = prod((i + 1..j).map(|p| (p, j)));
        tail.inverse().mul(&a(i, j).inverse()).mul(&tail)
    })
}

/// Conjugation `x -> b^-1 x b` by a braid `b` that normalizes `P_n` (any
/// braid does), with images recovered as combed words.
pub fn conjugation(name: &str, b: &BraidWord) -> Result<PureEndo> {
    let n = b.n();
    let mut err = None;
    let endo = Endo::from_fn(name, Alphabet::pure(n), 1, |l| {
        let g = to_sigma(&PureWord::new(n, Word::gen(l)).expect("generator"));
        let c = b.inverse().mul(&g).mul(b);
        match comb(&c, Budget::default().max_len) {
            Ok(f) => f.to_pure_word().word().clone(),
            Err(e) => {
                err = Some(e);
                Word::empty()
            }
        }
    })?;
    match err {
        Some(e) => Err(e),
        None => Ok(endo),
    }
}

/// Conjugation by `s<k>`.
pub fn conj_sigma(k: usize, n: usize) -> Result<PureEndo> {
    conjugation(&format!("c(s{k})"), &BraidWord::sigma(n, k)?)
}

/// Whether `e` respects every defining relation of `P_n` and sends the
/// full twist to its stated power of `Z`.
pub fn well_defined(model: &NfModel, e: &PureEndo) -> bool {
    violation(model, e).is_none()
}

/// The first relation `e` fails to respect, if any.
pub fn violation(model: &NfModel, e: &PureEndo) -> Option<String> {
    let n = e.alphabet().n;
    let rels: Vec<(Word, Word)> =
        pure_relations(n).into_iter().map(|r| (r.lhs().word().clone(), r.rhs.word().clone())).collect();
    let zw = zword(n).ok()?.0.word().clone();
    first_violation(model, e, rels.iter().map(|(l, r)| (l, r)), &zw)
}

/// `(ω1 ... ωn)` and friends: `seq(&[1, 2, 3])`.
struct Omegas {
    w: Vec<Endo>,
}

impl Omegas {
    fn new(n: usize) -> Result<Self> {
        Ok(Omegas { w: (1..=n).map(|k| omega(k, n)).collect::<Result<_>>()? })
    }

    fn get(&self, k: usize) -> Endo {
        self.w[k - 1].clone()
    }

    fn seq(&self, ks: impl IntoIterator<Item = usize>) -> Vec<Endo> {
        ks.into_iter().map(|k| self.get(k)).collect()
    }
}

fn pow(seq: &[Endo], k: usize) -> Vec<Endo> {
    seq.iter().cloned().cycle().take(seq.len() * k).collect()
}

fn formal(seq: &[Endo]) -> Formal {
    seq.iter().map(lit).collect()
}

/// Well-definedness of each named endomorphism, as cases.
pub fn well_defined_cases(model: &NfModel, endos: &[Endo]) -> Vec<Case> {
    crate::endo::well_defined_cases(endos, "the pure braid relations", |e| violation(model, e))
}

fn rel(id: String, text: String, lhs: Vec<Endo>, rhs: Vec<Endo>) -> Case {
    let stated = (formal(&lhs), formal(&rhs));
    Case::Relation(EndoRelation::new(id, text, lhs, rhs).stated(stated.0, stated.1))
}

/// The extended mapping class group relations among `ω1..ωn, ε`.
pub fn mapping_class_cases(n: usize, id: &str) -> Result<Vec<Case>> {
    let om = Omegas::new(n)?;
    let eps = epsilon(n)?;
    let mut cases = Vec::new();
    for i in 1..=n {
        for j in i + 2..=n {
            cases.push(rel(
                format!("{id}-comm-{i:02}-{j:02}"),
                format!("ω{i} ω{j} = ω{j} ω{i}"),
                om.seq([i, j]),
                om.seq([j, i]),
            ));
        }
    }
    for i in 1..n {
        cases.push(rel(
            format!("{id}-braid-{i:02}"),
            format!("ω{i} ω{} ω{i} = ω{} ω{i} ω{}", i + 1, i + 1, i + 1),
            om.seq([i, i + 1, i]),
            om.seq([i + 1, i, i + 1]),
        ));
    }
    let sphere: Vec<usize> = (1..n).chain([n, n]).chain((1..n).rev()).collect();
    cases.push(rel(
        format!("{id}-sphere"),
        format!("ω1 ... ω{} ω{n}^2 ω{} ... ω1 = 1", n - 1, n - 1),
        om.seq(sphere),
        vec![],
    ));
    cases.push(rel(
        format!("{id}-twist"),
        format!("(ω1 ... ω{n})^{} = 1", n + 1),
        pow(&om.seq(1..=n), n + 1),
        vec![],
    ));
    cases.push(rel(format!("{id}-eps2"), "ε^2 = 1".into(), vec![eps.clone(), eps.clone()], vec![]));
    for k in 1..=n {
        cases.push(rel(
            format!("{id}-eps-omega-{k:02}"),
            format!("(ε ω{k})^2 = 1"),
            pow(&[eps.clone(), om.get(k)], 2),
            vec![],
        ));
    }
    Ok(cases)
}

fn table_endo(name: &str, n: usize, f: impl FnMut(Letter) -> Word) -> Endo {
    Endo::from_fn(name, Alphabet::pure(n), 1, f).expect("pure alphabet")
}

/// The identities used in the proof of the mapping class relations: the
/// three composite tables, the behavior of `τ = ω1 ... ω(n-1)`, and `ε` on
/// the row and column products.
pub fn proof_identity_cases(n: usize) -> Result<Vec<Case>> {
    let om = Omegas::new(n)?;
    let eps = epsilon(n)?;
    let mut cases = Vec::new();
    let tau_seq = om.seq(1..n);

    // composite tables, as endomorphisms
    let tau_table = table_endo("τ-table", n, |l| {
        let (i, j) = indices(l);
        match (i, j) {
            (1, 2) => z(1).mul(&up(&a(1, n), &prod((2..n).map(|p| (p, n))))),
            (2, 3) => z(-1).mul(&a(1, 2)),
            (1, j) => {
                let x = prod((j..n).map(|p| (p, n))).mul(&prod((1..j - 1).map(|p| (p, j - 1))).inverse());
                up(&a(j - 1, n), &x)
            }
            _ => a(i - 1, j - 1),
        }
    });
    cases.push(rel("proof-tau-table".into(), "ω1 ... ω(n-1) acts by the displayed table".into(), tau_seq.clone(), vec![tau_table]));

    let wn2_table = table_endo("ωn^2-table", n, |l| {
        let (i, j) = indices(l);
        if j < n {
            a(i, j)
        } else {
            let x = prod((1..i).map(|p| (p, i))).mul(&prod((i + 1..n).map(|q| (i, q))));
            up(&a(i, n), &x)
        }
    });
    cases.push(rel("proof-omega-n-squared".into(), format!("ω{n}^2 acts by the displayed table"), om.seq([n, n]), vec![wn2_table]));

    let rev_table = table_endo("ω-reverse-table", n, |l| {
        let (i, j) = indices(l);
        match (i, j) {
            (1, 2) => a(2, 3).mul(&z(1)),
            (1, j) if j == n => a(1, 2).mul(&z(-1)),
            (i, j) if j == n && i >= 2 => a(1, i + 1),
            _ => a(i + 1, j + 1),
        }
    });
    cases.push(rel(
        "proof-reverse-table".into(),
        "ω(n-1) ... ω1 acts by the displayed table".into(),
        om.seq((1..n).rev()),
        vec![rev_table],
    ));

    let model = NfModel::pure(n);
    let image = |id: &str, text: String, seq: Vec<Endo>, word: Word, target: Word| {
        Case::Image(ImageIdentity::new(id, text, seq, word, model.nf(&target)))
    };
    let all_n = prod((1..n).map(|p| (p, n)));
    for j in 3..=n {
        cases.push(image(
            &format!("proof-tau-A1.{j:02}"),
            format!("τ(A1.{j}) = A{}.{n}^(A1.{n} ... A{}.{n})", j - 1, n - 1),
            tau_seq.clone(),
            a(1, j),
            up(&a(j - 1, n), &all_n),
        ));
    }
    cases.push(rel("proof-tau-power".into(), format!("τ^{n} = 1"), pow(&tau_seq, n), vec![]));
    let powers: [(usize, Word, String); 4] = [
        (n - 3, a(2, 3), "A2.3".into()),
        (n - 2, z(-1).mul(&a(1, 2)), "Z^-1 A1.2".into()),
        (n - 1, up(&a(1, n), &prod((2..n).map(|p| (p, n)))), format!("A1.{n}^(A2.{n} ... A{}.{n})", n - 1)),
        (n, a(n - 1, n), format!("A{}.{n}", n - 1)),
    ];
    for (p, target, shown) in powers {
        cases.push(image(
            &format!("proof-tau{p:02}-last"),
            format!("τ^{p}(A{}.{n}) = {shown}", n - 1),
            pow(&tau_seq, p),
            a(n - 1, n),
            target,
        ));
    }
    for q in 3..=n {
        cases.push(image(
            &format!("proof-tau-q{q:02}"),
            format!("τ^{q}(A1.{q}) = A{}.{n}", n - q + 1),
            pow(&tau_seq, q),
            a(1, q),
            a(n - q + 1, n),
        ));
        for p in 1..q {
            let m = n - p + 1;
            let x = prod((1..m).map(|s| (s, m))).mul(&prod((m + 1..=n).map(|t| (m, t))));
            let shown = format!("A{}.{m}^(A1.{m} ... A{}.{m} A{m}.{} ... A{m}.{n})", q - p, m - 1, m + 1);
            let target = up(&a(q - p, m), &x);
            let id = format!("proof-tau-q{q:02}-p{p:02}");
            // at q = n, p = n - 1 the image passes through A1.2, which picks
            // up the central factor of τ(A2.3) = Z^-1 A1.2
            let case = if q == n && p == n - 1 {
                ImageIdentity::new(id, format!("τ^{p}(A1.{q}) = {shown} Z^-1"), pow(&tau_seq, p), a(1, q), model.nf(&target.mul(&z(-1))))
                    .with_note("the displayed formula omits the factor Z^-1 in this one case")
            } else {
                ImageIdentity::new(id, format!("τ^{p}(A1.{q}) = {shown}"), pow(&tau_seq, p), a(1, q), model.nf(&target))
            };
            cases.push(Case::Image(case));
        }
    }
    for (i, j) in pairs(n as u8) {
        let (i, j) = (i as usize, j as usize);
        if i >= 2 && j >= 4 {
            cases.push(image(
                &format!("proof-tau-down-{i:02}-{j:02}"),
                format!("τ(A{i}.{j}) = A{}.{}", i - 1, j - 1),
                tau_seq.clone(),
                a(i, j),
                a(i - 1, j - 1),
            ));
        }
        // stated for j - i >= 2; adjacent pairs reach A2.3 and then Z^-1 A1.2
        if i > 1 && j - i >= 2 {
            cases.push(image(
                &format!("proof-tau-shift-{i:02}-{j:02}"),
                format!("τ^{}(A{i}.{j}) = A1.{}", i - 1, j - i + 1),
                pow(&tau_seq, i - 1),
                a(i, j),
                a(1, j - i + 1),
            ));
        }
    }
    for j in 3..=n {
        for i in 2..j {
            let w = prod((i..j).map(|p| (p, j)));
            cases.push(image(
                &format!("proof-eps-col-{i:02}-{j:02}"),
                format!("ε(A{i}.{j} ... A{}.{j}) = (A{i}.{j} ... A{}.{j})^-1", j - 1, j - 1),
                vec![eps.clone()],
                w.clone(),
                w.inverse(),
            ));
        }
    }
    for i in 2..n {
        for j in i + 1..=n {
            let w = prod((i + 1..=j).map(|q| (i, q)));
            cases.push(image(
                &format!("proof-eps-row-{i:02}-{j:02}"),
                format!("ε(A{i}.{} ... A{i}.{j}) = (A{i}.{} ... A{i}.{j})^-1", i + 1, i + 1),
                vec![eps.clone()],
                w.clone(),
                w.inverse(),
            ));
        }
    }
    for j in 2..=n {
        let w = prod((2..=j).map(|q| (1, q)));
        cases.push(image(
            &format!("proof-eps-first-{j:02}"),
            format!("ε(A1.2 ... A1.{j}) = (A1.2 ... A1.{j})^-1 Z^2"),
            vec![eps.clone()],
            w.clone(),
            w.inverse().mul(&z(2)),
        ));
    }
    for k in 1..=n {
        cases.push(rel(
            format!("proof-omega-eps-omega-{k:02}"),
            format!("ω{k} ε ω{k} = ε"),
            vec![om.get(k), eps.clone(), om.get(k)],
            vec![eps.clone()],
        ));
    }
    Ok(cases)
}

/// Mapping class relations, proof identities, and well-definedness of the
/// generators, for `n >= 4`.
pub fn suite_prop31(n: usize, cfg: &RunConfig) -> Result<VerificationReport> {
    check_n(n, 4)?;
    let model = NfModel::pure(n);
    let mut gens: Vec<Endo> = (1..=n).map(|k| omega(k, n)).collect::<Result<_>>()?;
    gens.push(epsilon(n)?);
    let mut cases = well_defined_cases(&model, &gens);
    cases.extend(mapping_class_cases(n, "mcg")?);
    cases.extend(proof_identity_cases(n)?);
    Ok(run_cases("prop31", SuiteParams { n: Some(n), r: None }, &model, &cases, cfg))
}

/// Conjugation of a transvection: `x^-1 t x = rhs`, checked as `t x = x rhs`.
fn conj_case(id: String, text: String, x: &Endo, t: &Endo, rhs: Vec<Endo>) -> Case {
    let mut right = vec![x.clone()];
    right.extend(rhs.iter().cloned());
    let stated_rhs: Formal = rhs.iter().flat_map(|e| crate::endo::formal_of(std::slice::from_ref(e))).collect();
    Case::Relation(
        EndoRelation::new(id, text, vec![t.clone(), x.clone()], right)
            .stated(vec![inv(x), lit(t), lit(x)], stated_rhs),
    )
}

/// Full relation list of the presentation of `Aut(P_n)`, `n >= 4`.
pub fn suite_thm32(n: usize, cfg: &RunConfig) -> Result<VerificationReport> {
    check_n(n, 4)?;
    let model = NfModel::pure(n);
    let om = Omegas::new(n)?;
    let eps = epsilon(n)?;
    let ps = psi(n)?;
    let idx: Vec<(usize, usize)> =
        pairs(n as u8).map(|(i, j)| (i as usize, j as usize)).filter(|&p| p != (1, 2)).collect();
    let ph = |i: usize, j: usize| phi(n, i, j).expect("valid φ");
    let phinv = |i: usize, j: usize| phi_inv(n, i, j).expect("valid φ");

    let mut gens = vec![ps.clone()];
    gens.extend(idx.iter().map(|&(i, j)| ph(i, j)));
    let mut cases = well_defined_cases(&model, &gens);
    cases.extend(mapping_class_cases(n, "mcg")?);

    cases.push(rel("tv-psi2".into(), "ψ^2 = 1".into(), vec![ps.clone(), ps.clone()], vec![]));
    cases.push(rel("tv-eps-psi".into(), "ε ψ ε = ψ".into(), vec![eps.clone(), ps.clone(), eps.clone()], vec![ps.clone()]));
    for k in 1..=n {
        cases.push(conj_case(format!("tv-omega-psi-{k:02}"), format!("ω{k}^-1 ψ ω{k} = ψ"), &om.get(k), &ps, vec![ps.clone()]));
    }
    for &(i, j) in &idx {
        let tag = format!("{i:02}-{j:02}");
        let stated_rhs = vec![inv(&ph(i, j))];
        cases.push(Case::Relation(
            EndoRelation::new(
                format!("tv-psi-phi-{tag}"),
                format!("ψ φ{i}.{j} ψ = φ{i}.{j}^-1"),
                vec![ps.clone(), ph(i, j), ps.clone()],
                vec![phinv(i, j)],
            )
            .stated(vec![lit(&ps), lit(&ph(i, j)), lit(&ps)], stated_rhs.clone()),
        ));
        cases.push(Case::Relation(
            EndoRelation::new(
                format!("tv-eps-phi-{tag}"),
                format!("ε φ{i}.{j} ε = φ{i}.{j}^-1"),
                vec![eps.clone(), ph(i, j), eps.clone()],
                vec![phinv(i, j)],
            )
            .stated(vec![lit(&eps), lit(&ph(i, j)), lit(&eps)], stated_rhs),
        ));
    }
    for (x, &(i, j)) in idx.iter().enumerate() {
        for &(p, q) in &idx[x + 1..] {
            cases.push(rel(
                format!("tv-comm-{i:02}-{j:02}-{p:02}-{q:02}"),
                format!("φ{i}.{j} φ{p}.{q} = φ{p}.{q} φ{i}.{j}"),
                vec![ph(i, j), ph(p, q)],
                vec![ph(p, q), ph(i, j)],
            ));
        }
    }

    for k in 1..=n {
        let w = om.get(k);
        for &(i, j) in &idx {
            let (rhs, shown): (Vec<Endo>, String) = match k {
                1 => {
                    let (a2, b2) = match i {
                        1 => (2, j),
                        2 => (1, j),
                        _ => (i, j),
                    };
                    (vec![ph(a2, b2)], format!("φ{a2}.{b2}"))
                }
                2 => match (i, j) {
                    (1, 3) => (vec![phinv(1, 3)], "φ1.3^-1".into()),
                    (2, j) if j > 3 => (vec![phinv(1, 3), ph(3, j)], format!("φ1.3^-1 φ3.{j}")),
                    (3, j) => (vec![phinv(1, 3), ph(2, j)], format!("φ1.3^-1 φ2.{j}")),
                    _ => (vec![phinv(1, 3), ph(i, j)], format!("φ1.3^-1 φ{i}.{j}")),
                },
                k if k == n => {
                    if j < n {
                        (
                            vec![ph(i, j), ph(1, n), ph(2, n), phinv(i, n), phinv(j, n)],
                            format!("φ{i}.{j} φ1.{n} φ2.{n} φ{i}.{n}^-1 φ{j}.{n}^-1"),
                        )
                    } else {
                        (vec![phinv(i, n), ph(1, n), ph(2, n)], format!("φ{i}.{n}^-1 φ1.{n} φ2.{n}"))
                    }
                }
                k => {
                    let (a2, b2) = if k + 1 == i {
                        (i - 1, j)
                    } else if k == i && i + 1 < j {
                        (i + 1, j)
                    } else if k + 1 == j && j - 1 > i {
                        (i, j - 1)
                    } else if k == j {
                        (i, j + 1)
                    } else {
                        (i, j)
                    };
                    (vec![ph(a2, b2)], format!("φ{a2}.{b2}"))
                }
            };
            cases.push(conj_case(
                format!("conj-omega{k:02}-phi-{i:02}-{j:02}"),
                format!("ω{k}^-1 φ{i}.{j} ω{k} = {shown}"),
                &w,
                &ph(i, j),
                rhs,
            ));
        }
    }
    Ok(run_cases("thm32", SuiteParams { n: Some(n), r: None }, &model, &cases, cfg))
}

/// The lifts to `P_3` of Neumann's generators `P`, `σ`, `U` of `Aut(F_2)`.
pub fn neumann(name: &str) -> Result<PureEndo> {
    let table = |l: Letter| -> Word {
        match (name, indices(l)) {
            ("P", (1, 3)) => a(2, 3),
            ("P", (2, 3)) => a(1, 3),
            ("P", (1, 2)) => a(2, 3).mul(&a(1, 2)).mul(&a(2, 3).inverse()),
            ("σ", (1, 3)) => a(1, 3).inverse(),
            ("σ", (2, 3)) => a(2, 3),
            ("σ", (1, 2)) => a(1, 2).mul(&a(1, 3).pow(2)),
            ("U", (1, 3)) => a(1, 3).mul(&a(2, 3)),
            ("U", (2, 3)) => a(2, 3),
            ("U", (1, 2)) => a(2, 3).inverse().mul(&a(1, 2)),
            _ => unreachable!(),
        }
    };
    if !matches!(name, "P" | "σ" | "U") {
        return Err(Error::Params(format!("unknown generator {name}")));
    }
    Endo::from_fn(name, Alphabet::pure(3), 1, table)
}

/// The presentation of `Aut(P_3)`: 18 relators, the family `(ψ φ<i>.3)^2`
/// split into its two members.
pub fn suite_autp3(cfg: &RunConfig) -> Result<VerificationReport> {
    let n = 3;
    let model = NfModel::pure(n);
    let p = neumann("P")?;
    let s = neumann("σ")?;
    let u = neumann("U")?;
    let ps = psi(n)?;
    let f13 = phi(n, 1, 3)?;
    let f23 = phi(n, 2, 3)?;
    let f23i = phi_inv(n, 2, 3)?;

    let mut cases = well_defined_cases(&model, &[p.clone(), s.clone(), u.clone(), ps.clone(), f13.clone(), f23.clone()]);
    let mut add = |k: usize, text: &str, lhs: Vec<Endo>, rhs: Vec<Endo>, stated: Formal| {
        cases.push(Case::Relation(
            EndoRelation::new(format!("autp3-{k:02}"), text, lhs, rhs).stated(stated, vec![]),
        ));
    };
    let c = |x: &Endo, y: &Endo| vec![lit(x), lit(y), inv(x), inv(y)];
    let v = |xs: &[&Endo]| xs.iter().map(|e| (*e).clone()).collect::<Vec<_>>();

    add(1, "P^2", v(&[&p, &p]), vec![], vec![lit(&p), lit(&p)]);
    add(2, "σ^2", v(&[&s, &s]), vec![], vec![lit(&s), lit(&s)]);
    add(3, "(σ P)^4", pow(&v(&[&s, &p]), 4), vec![], formal(&pow(&v(&[&s, &p]), 4)));
    add(4, "(P σ P U)^2", pow(&v(&[&p, &s, &p, &u]), 2), vec![], formal(&pow(&v(&[&p, &s, &p, &u]), 2)));
    add(5, "(U P σ)^3", pow(&v(&[&u, &p, &s]), 3), vec![], formal(&pow(&v(&[&u, &p, &s]), 3)));
    add(
        6,
        "[U, σ U σ]",
        v(&[&u, &s, &u, &s]),
        v(&[&s, &u, &s, &u]),
        vec![lit(&u), lit(&s), lit(&u), lit(&s), inv(&u), inv(&s), inv(&u), inv(&s)],
    );
    add(7, "[U, ψ]", v(&[&u, &ps]), v(&[&ps, &u]), c(&u, &ps));
    add(8, "[P, ψ]", v(&[&p, &ps]), v(&[&ps, &p]), c(&p, &ps));
    add(9, "[σ, ψ]", v(&[&s, &ps]), v(&[&ps, &s]), c(&s, &ps));
    add(10, "[U, φ1.3]", v(&[&u, &f13]), v(&[&f13, &u]), c(&u, &f13));
    add(11, "P φ1.3 P φ2.3^-1", v(&[&p, &f13, &p]), v(&[&f23]), vec![lit(&p), lit(&f13), lit(&p), inv(&f23)]);
    add(12, "(σ φ1.3)^2", pow(&v(&[&s, &f13]), 2), vec![], formal(&pow(&v(&[&s, &f13]), 2)));
    add(13, "ψ^2", v(&[&ps, &ps]), vec![], vec![lit(&ps), lit(&ps)]);
    add(15, "[φ1.3, φ2.3]", v(&[&f13, &f23]), v(&[&f23, &f13]), c(&f13, &f23));
    add(
        16,
        "φ1.3 [φ2.3, U]",
        v(&[&f13, &f23, &u, &f23i]),
        v(&[&u]),
        vec![lit(&f13), lit(&f23), lit(&u), inv(&f23), inv(&u)],
    );
    add(17, "P φ2.3 P φ1.3^-1", v(&[&p, &f23, &p]), v(&[&f13]), vec![lit(&p), lit(&f23), lit(&p), inv(&f13)]);
    add(18, "[σ, φ2.3]", v(&[&s, &f23]), v(&[&f23, &s]), c(&s, &f23));
    for (tag, f) in [("a", &f13), ("b", &f23)] {
        let name = &f.name;
        cases.push(Case::Relation(
            EndoRelation::new(format!("autp3-14{tag}"), format!("(ψ {name})^2"), pow(&v(&[&ps, f]), 2), vec![])
                .stated(formal(&pow(&v(&[&ps, f]), 2)), vec![]),
        ));
    }
    Ok(run_cases("autp3", SuiteParams { n: Some(3), r: None }, &model, &cases, cfg))
}

/// The pure braid generator word `A<i>.<j>` as a [`Sym`], for table code
/// elsewhere.
pub fn gen_sym(i: usize, j: usize) -> Sym {
    Sym::pos(Letter::A(i as u8, j as u8))
}
