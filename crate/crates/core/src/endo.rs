//! Endomorphisms of the pure braid groups given by generator images, and
//! the machinery shared by the relation suites.
//!
//! Products follow the right-action convention: `a · b` means "apply `a`,
//! then `b`", so `(a · b)(g) = b(a(g))`. A relation such as
//! `w1^-1 φ w1 = φ'` is read left to right in that convention and checked
//! in the inverse-free form `φ w1 = w1 φ'`.
//!
//! Worked example at `n = 3`: `ω2 = φ1.3 · c(s2)`, where `c(s2)` is
//! conjugation by `s2`. On `A1.2` the product first applies `φ1.3`
//! (`A1.2 -> A1.2 Z`), then conjugates: `s2^-1 A1.2 s2 Z = A2.3^-1 A1.3 A2.3 Z`,
//! which is the tabulated image. Reading the product the other way round
//! would give `... Z^-1` instead.
//!
//! Products are evaluated on Garside normal forms instead of words: for
//! `a1 · ... · ak` the images of `ak` are normalized first, and each
//! earlier factor's images are then evaluated letter by letter on the normal
//! forms already computed. Intermediate words never appear.

use std::collections::HashMap;
use std::fmt;
use std::time::Instant;

use rayon::prelude::*;

use crate::braid::{garside_nf, BraidWord, GarsideNF};
use crate::error::{Error, Result};
use crate::report::{Budget, CaseResult, CaseStatus, Deadline, RunConfig, SuiteParams, VerificationReport};
use crate::words::{Alphabet, GeneratorMap, Letter, Sym, Word};

/// Normal forms of the generators of a subgroup of `B_m`, used to evaluate
/// words and endomorphisms.
#[derive(Clone, Debug)]
pub struct NfModel {
    alphabet: Alphabet,
    strands: usize,
    gens: Vec<Letter>,
    table: HashMap<Letter, (GarsideNF, GarsideNF)>,
}

impl NfModel {
    /// `embed` sends one generator letter (the central one included) to its
    /// braid word on `strands` strands.
    pub fn new(alphabet: Alphabet, strands: usize, embed: impl Fn(Letter) -> BraidWord) -> Self {
        let mut table = HashMap::new();
        for l in alphabet.letters() {
            let nf = garside_nf(&embed(l));
            let inv = nf.inverse();
            table.insert(l, (nf, inv));
        }
        let central = alphabet.central();
        let gens = alphabet.letters().into_iter().filter(|l| Some(*l) != central).collect();
        NfModel { alphabet, strands, gens, table }
    }

    pub fn pure(n: usize) -> Self {
        NfModel::new(Alphabet::pure(n), n, |l| {
            crate::purebraid::to_sigma(&crate::purebraid::PureWord::new(n, Word::gen(l)).unwrap())
        })
    }

    pub fn mono(r: usize, n: usize) -> Self {
        NfModel::new(Alphabet::mono(r, n), n + 1, |l| {
            let w = crate::monomial::MonoWord::new(r, n, Word::gen(l)).unwrap();
            crate::monomial::mono_to_braid(&w, crate::monomial::Route::Direct)
        })
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    /// Generators other than the central letter, in canonical order.
    pub fn gens(&self) -> &[Letter] {
        &self.gens
    }

    pub fn central(&self) -> Letter {
        self.alphabet.central().expect("group alphabets have a central letter")
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
        w.syms().iter().fold(GarsideNF::identity(self.strands), |acc, s| acc.mul(self.letter(*s)))
    }

    pub fn equal(&self, u: &Word, v: &Word) -> bool {
        self.nf(u) == self.nf(v)
    }

    /// Drop windows that are trivial in the group, longest first, within
    /// the budget; the central letter is collected at the tail first.
    pub fn simplify(&self, w: &Word, budget: &Budget) -> Word {
        let z = self.central();
        let deadline = budget.deadline();
        let mut body = crate::words::normalize_central(w, z).into_syms();
        'outer: loop {
            let top = budget.window.min(body.len());
            for len in (2..=top).rev() {
                for start in 0..=body.len() - len {
                    if deadline.expired() {
                        break 'outer;
                    }
                    let nf = body[start..start + len]
                        .iter()
                        .fold(GarsideNF::identity(self.strands), |acc, s| acc.mul(self.letter(*s)));
                    if nf.is_identity() {
                        body.drain(start..start + len);
                        body = crate::words::normalize_central(&Word::new(body), z).into_syms();
                        continue 'outer;
                    }
                }
            }
            break;
        }
        Word::new(body)
    }
}

/// An endomorphism given by generator images; the central letter maps to a
/// power of itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Endo {
    pub name: String,
    pub map: GeneratorMap,
}

impl Endo {
    pub fn new(name: impl Into<String>, map: GeneratorMap) -> Self {
        Endo { name: name.into(), map }
    }

    pub fn identity(alphabet: Alphabet) -> Self {
        Endo::new("id", GeneratorMap::identity(alphabet))
    }

    /// Build from a closure giving the image of each non-central generator.
    pub fn from_fn(
        name: impl Into<String>,
        alphabet: Alphabet,
        central_exp: i64,
        mut image: impl FnMut(Letter) -> Word,
    ) -> Result<Self> {
        let central = alphabet.central();
        let images = alphabet
            .letters()
            .into_iter()
            .filter(|l| Some(*l) != central)
            .map(|l| (l, image(l).free_reduce()))
            .collect();
        Ok(Endo::new(name, GeneratorMap::new(alphabet, alphabet, images, central_exp)?))
    }

    pub fn alphabet(&self) -> Alphabet {
        self.map.source
    }

    pub fn central_exp(&self) -> i64 {
        self.map.central_exp()
    }

    pub fn image(&self, l: Letter) -> Word {
        self.map.image(l).expect("letter in alphabet")
    }

    pub fn apply(&self, w: &Word) -> Word {
        self.map.substitute(w).expect("word in alphabet")
    }

    /// Longest generator image.
    pub fn max_image_len(&self) -> usize {
        self.alphabet().letters().into_iter().map(|l| self.image(l).len()).max().unwrap_or(0)
    }
}

impl fmt::Display for Endo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}:", self.name)?;
        let central = self.alphabet().central();
        for l in self.alphabet().letters() {
            if Some(l) == central {
                writeln!(f, "  {l} -> {l}^{}", self.central_exp())?;
            } else {
                writeln!(f, "  {l} -> {}", self.image(l))?;
            }
        }
        Ok(())
    }
}

/// Word-level product `a · b` (apply `a`, then `b`), each image simplified
/// within the budget. Fails with [`Error::LengthBudget`] if an image
/// outgrows `budget.max_len` before simplification.
pub fn compose(model: &NfModel, a: &Endo, b: &Endo, budget: &Budget) -> Result<Endo> {
    let alphabet = a.alphabet();
    if alphabet != b.alphabet() {
        return Err(Error::Params(format!("cannot compose {} with {}", alphabet, b.alphabet())));
    }
    let mut err = None;
    let out = Endo::from_fn(
        format!("{}·{}", a.name, b.name),
        alphabet,
        a.central_exp() * b.central_exp(),
        |l| {
            let w = b.apply(&a.image(l));
            if w.len() > budget.max_len {
                err = Some(Error::LengthBudget(budget.max_len));
            }
            model.simplify(&w, budget)
        },
    )?;
    match err {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// Images of a product of endomorphisms, as normal forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Evaluated {
    pub images: Vec<GarsideNF>,
    pub central_exp: i64,
    /// Longest image normal form (in letters) met along the way.
    pub peak_len: usize,
}

/// Why an evaluation stopped without a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stop {
    Time,
    Length(usize),
}

impl fmt::Display for Stop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stop::Time => write!(f, "time budget exhausted"),
            Stop::Length(n) => write!(f, "image length exceeded {n}"),
        }
    }
}

/// Evaluate `seq[0] · seq[1] · ... ` on every generator.
pub fn evaluate(
    model: &NfModel,
    seq: &[&Endo],
    budget: &Budget,
    deadline: &Deadline,
) -> std::result::Result<Evaluated, Stop> {
    let z = model.central();
    let zs = Sym::pos(z);
    let mut cur: HashMap<Letter, (GarsideNF, GarsideNF)> = model
        .gens()
        .iter()
        .map(|&l| {
            let s = Sym::pos(l);
            (l, (model.letter(s).clone(), model.letter(s.inverse()).clone()))
        })
        .collect();
    let mut e = 1i64;
    let mut peak = 0usize;
    for a in seq.iter().rev() {
        let zp = model.letter(zs).pow(e);
        let zm = zp.inverse();
        let mut next = HashMap::with_capacity(cur.len());
        for &g in model.gens() {
            let mut acc = GarsideNF::identity(model.strands());
            for s in a.image(g).syms() {
                if deadline.expired() {
                    return Err(Stop::Time);
                }
                let f = if s.letter == z {
                    if s.inv {
                        &zm
                    } else {
                        &zp
                    }
                } else {
                    let (p, m) = &cur[&s.letter];
                    if s.inv {
                        m
                    } else {
                        p
                    }
                };
                acc = acc.mul(f);
            }
            let len = acc.word_len();
            peak = peak.max(len);
            if len > budget.max_len {
                return Err(Stop::Length(budget.max_len));
            }
            let inv = acc.inverse();
            next.insert(g, (acc, inv));
        }
        cur = next;
        e *= a.central_exp();
    }
    let images = model.gens().iter().map(|g| cur.remove(g).unwrap().0).collect();
    Ok(Evaluated { images, central_exp: e, peak_len: peak })
}

/// The image of `w` under an evaluated product.
pub fn evaluate_word(model: &NfModel, ev: &Evaluated, w: &Word) -> GarsideNF {
    let z = model.central();
    let zp = model.letter(Sym::pos(z)).pow(ev.central_exp);
    let img: HashMap<Letter, &GarsideNF> = model.gens().iter().copied().zip(ev.images.iter()).collect();
    w.syms().iter().fold(GarsideNF::identity(model.strands()), |acc, s| {
        let f = if s.letter == z { zp.clone() } else { img[&s.letter].clone() };
        acc.mul(&if s.inv { f.inverse() } else { f })
    })
}

/// Imagewise equality of two endomorphisms.
pub fn endo_equal(model: &NfModel, a: &Endo, b: &Endo) -> bool {
    let budget = Budget::extended();
    let d = budget.deadline();
    let x = evaluate(model, &[a], &budget, &d).expect("single endomorphism fits the budget");
    let y = evaluate(model, &[b], &budget, &d).expect("single endomorphism fits the budget");
    x.images == y.images && x.central_exp == y.central_exp
}

/// A relation between products of named endomorphisms, `lhs = rhs`.
#[derive(Clone, Debug)]
pub struct EndoRelation {
    pub id: String,
    /// The relation as stated, for the report.
    pub text: String,
    pub lhs: Vec<Endo>,
    pub rhs: Vec<Endo>,
    pub note: Option<String>,
    /// The relation in its original form `l = r`, before inverses were
    /// moved across; checked to be a formal consequence of `lhs = rhs`.
    pub stated: Option<(Formal, Formal)>,
}

/// A product of named generators with signs, for symbolic bookkeeping.
pub type Formal = Vec<(String, bool)>;

pub fn lit(e: &Endo) -> (String, bool) {
    (e.name.clone(), false)
}

pub fn inv(e: &Endo) -> (String, bool) {
    (e.name.clone(), true)
}

/// Formal spelling of a product; an endomorphism named `x^-1` counts as
/// the inverse of `x`.
pub fn formal_of(seq: &[Endo]) -> Formal {
    seq.iter()
        .map(|e| match e.name.strip_suffix("^-1") {
            Some(base) => (base.to_string(), true),
            None => (e.name.clone(), false),
        })
        .collect()
}

/// True when `l1 r1^-1` and `l2 r2^-1` are conjugate in the free group on
/// the names involved, i.e. the two relations are equivalent.
pub fn same_relator(a: &(Formal, Formal), b: &(Formal, Formal)) -> bool {
    let mut names: Vec<String> = Vec::new();
    let mut word = |l: &Formal, r: &Formal| -> Word<u32> {
        let mut syms = Vec::new();
        for (name, inv) in l {
            syms.push(Sym { letter: intern(&mut names, name), inv: *inv });
        }
        for (name, inv) in r.iter().rev() {
            syms.push(Sym { letter: intern(&mut names, name), inv: !*inv });
        }
        Word::new(syms)
    };
    let x = word(&a.0, &a.1);
    let y = word(&b.0, &b.1);
    x.free_conjugate(&y)
}

fn intern(names: &mut Vec<String>, name: &str) -> u32 {
    match names.iter().position(|n| n == name) {
        Some(k) => k as u32,
        None => {
            names.push(name.to_string());
            names.len() as u32 - 1
        }
    }
}

impl EndoRelation {
    pub fn new(id: impl Into<String>, text: impl Into<String>, lhs: Vec<Endo>, rhs: Vec<Endo>) -> Self {
        EndoRelation { id: id.into(), text: text.into(), lhs, rhs, note: None, stated: None }
    }

    /// Record the relation as originally stated.
    pub fn stated(mut self, l: Formal, r: Formal) -> Self {
        self.stated = Some((l, r));
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// Evaluate both sides within the budget.
    pub fn check(&self, model: &NfModel, budget: &Budget) -> CaseResult {
        let start = Instant::now();
        if let Some(stated) = &self.stated {
            let rewritten = (formal_of(&self.lhs), formal_of(&self.rhs));
            if !same_relator(stated, &rewritten) {
                return CaseResult {
                    id: self.id.clone(),
                    relation: self.text.clone(),
                    status: CaseStatus::Fail,
                    elapsed_ms: 0,
                    peak_len: 0,
                    witness: vec![format!("{rewritten:?}"), format!("{stated:?}")],
                    note: Some("rewritten relation is not equivalent to the stated one".into()),
                };
            }
        }
        let deadline = budget.deadline();
        let lhs: Vec<&Endo> = self.lhs.iter().collect();
        let rhs: Vec<&Endo> = self.rhs.iter().collect();
        let outcome = evaluate(model, &lhs, budget, &deadline)
            .and_then(|l| evaluate(model, &rhs, budget, &deadline).map(|r| (l, r)));
        let names = |v: &[Endo]| v.iter().map(|e| e.name.as_str()).collect::<Vec<_>>().join(" ");
        let (status, peak, witness, note) = match outcome {
            Ok((l, r)) => {
                let peak = l.peak_len.max(r.peak_len);
                let ok = l.images == r.images && l.central_exp == r.central_exp;
                let witness = if ok {
                    vec![]
                } else {
                    mismatch_witness(model, &l, &r, &names(&self.lhs), &names(&self.rhs))
                };
                (if ok { CaseStatus::Pass } else { CaseStatus::Fail }, peak, witness, self.note.clone())
            }
            Err(stop) => (CaseStatus::Indeterminate, 0, vec![], Some(stop.to_string())),
        };
        CaseResult {
            id: self.id.clone(),
            relation: self.text.clone(),
            status,
            elapsed_ms: start.elapsed().as_millis() as u64,
            peak_len: peak,
            witness,
            note,
        }
    }
}

fn mismatch_witness(model: &NfModel, l: &Evaluated, r: &Evaluated, ln: &str, rn: &str) -> Vec<String> {
    let mut out = vec![format!("lhs = {ln}"), format!("rhs = {rn}")];
    if l.central_exp != r.central_exp {
        out.push(format!("central exponent {} vs {}", l.central_exp, r.central_exp));
    }
    for (k, g) in model.gens().iter().enumerate() {
        if l.images[k] != r.images[k] {
            out.push(format!("{g}: {} | {}", l.images[k].to_word(), r.images[k].to_word()));
            break;
        }
    }
    out
}

/// Run independent checks, on `jobs` threads (0 = all cores, 1 = inline).
pub fn run_parallel<T, F>(items: &[T], jobs: usize, f: F) -> Vec<CaseResult>
where
    T: Sync,
    F: Fn(&T) -> CaseResult + Sync + Send,
{
    if jobs == 1 {
        return items.iter().map(&f).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().expect("thread pool");
    pool.install(|| items.par_iter().map(&f).collect())
}

/// Check that `a` respects every relation `lhs = rhs` in `relations`, and
/// that it sends the central word to the central letter's stated power.
/// Returns the first violated relation, if any.
pub fn first_violation<'r>(
    model: &NfModel,
    a: &Endo,
    relations: impl IntoIterator<Item = (&'r Word, &'r Word)>,
    central_word: &Word,
) -> Option<String> {
    let budget = Budget::extended();
    let d = budget.deadline();
    let ev = evaluate(model, &[a], &budget, &d).ok()?;
    let img: HashMap<Letter, (GarsideNF, GarsideNF)> = model
        .gens()
        .iter()
        .zip(ev.images)
        .map(|(&g, nf)| {
            let inv = nf.inverse();
            (g, (nf, inv))
        })
        .collect();
    let z = model.central();
    let zp = model.letter(Sym::pos(z)).pow(a.central_exp());
    let zm = zp.inverse();
    let eval = |w: &Word| {
        w.syms().iter().fold(GarsideNF::identity(model.strands()), |acc, s| {
            let f = if s.letter == z {
                if s.inv {
                    &zm
                } else {
                    &zp
                }
            } else {
                let (p, m) = &img[&s.letter];
                if s.inv {
                    m
                } else {
                    p
                }
            };
            acc.mul(f)
        })
    };
    for (l, r) in relations {
        if eval(l) != eval(r) {
            return Some(format!("{l} = {r}"));
        }
    }
    if eval(central_word) != zp {
        return Some(format!("{central_word} -> {z}^{}", a.central_exp()));
    }
    None
}

/// Checks that evaluate a product of endomorphisms on one word.
#[derive(Clone, Debug)]
pub struct ImageIdentity {
    pub id: String,
    pub text: String,
    pub seq: Vec<Endo>,
    pub word: Word,
    pub target: GarsideNF,
    pub note: Option<String>,
}

impl ImageIdentity {
    pub fn new(id: impl Into<String>, text: impl Into<String>, seq: Vec<Endo>, word: Word, target: GarsideNF) -> Self {
        ImageIdentity { id: id.into(), text: text.into(), seq, word, target, note: None }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn check(&self, model: &NfModel, budget: &Budget) -> CaseResult {
        let start = Instant::now();
        let d = budget.deadline();
        let refs: Vec<&Endo> = self.seq.iter().collect();
        let ev = evaluate(model, &refs, budget, &d);
        let (status, peak, witness, note) = match ev {
            Err(stop) => (CaseStatus::Indeterminate, 0, vec![], Some(stop.to_string())),
            Ok(ev) => {
                let note = self.note.clone();
                let got = evaluate_word(model, &ev, &self.word);
                let ok = got == self.target;
                let witness = if ok { vec![] } else { vec![got.to_word().to_string(), self.target.to_word().to_string()] };
                (if ok { CaseStatus::Pass } else { CaseStatus::Fail }, ev.peak_len, witness, note)
            }
        };
        CaseResult {
            id: self.id.clone(),
            relation: self.text.clone(),
            status,
            elapsed_ms: start.elapsed().as_millis() as u64,
            peak_len: peak,
            witness,
            note,
        }
    }
}

/// One case of a suite.
#[derive(Clone, Debug)]
pub enum Case {
    Relation(EndoRelation),
    Image(ImageIdentity),
    /// A precomputed verdict (e.g. a well-definedness check).
    Done(CaseResult),
}

impl Case {
    pub fn id(&self) -> &str {
        match self {
            Case::Relation(r) => &r.id,
            Case::Image(i) => &i.id,
            Case::Done(c) => &c.id,
        }
    }

    pub fn check(&self, model: &NfModel, budget: &Budget) -> CaseResult {
        match self {
            Case::Relation(r) => r.check(model, budget),
            Case::Image(i) => i.check(model, budget),
            Case::Done(c) => c.clone(),
        }
    }
}

/// Run cases and assemble a sorted report.
pub fn run_cases(
    suite: &str,
    params: SuiteParams,
    model: &NfModel,
    cases: &[Case],
    cfg: &RunConfig,
) -> VerificationReport {
    let mut report = VerificationReport::new(suite, params);
    report.extend(run_parallel(cases, cfg.jobs, |c| c.check(model, &cfg.budget)));
    report.finalize()
}

/// Well-definedness of each endomorphism, as cases; `violation` names the
/// first relation an endomorphism fails to respect.
pub fn well_defined_cases(endos: &[Endo], what: &str, violation: impl Fn(&Endo) -> Option<String>) -> Vec<Case> {
    endos
        .iter()
        .map(|e| {
            let start = Instant::now();
            let v = violation(e);
            Case::Done(CaseResult {
                id: format!("hom-{}", e.name),
                relation: format!("{} respects {what} and sends the center to itself up to sign", e.name),
                status: if v.is_none() { CaseStatus::Pass } else { CaseStatus::Fail },
                elapsed_ms: start.elapsed().as_millis() as u64,
                peak_len: e.max_image_len(),
                witness: v.into_iter().collect(),
                note: None,
            })
        })
        .collect()
}
