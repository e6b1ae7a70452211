//! Suite dispatch by name, normal-form cache persistence and the
//! oracle-agreement corpus.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::braid::{artin_equal, braid_equal, random_word, BraidWord, NfCache};
use crate::error::{Error, Result};
use crate::report::{CaseResult, CaseStatus, RunConfig, SuiteParams, VerificationReport};
use crate::words::{Letter, Sym, Word};
use crate::{autmono, autpn, monomial, purebraid};

/// Every name accepted by [`run_suite`].
pub const SUITES: [&str; 9] =
    ["purebraid", "center", "prop31", "thm32", "autp3", "prop43", "thm45", "prop46", "oracle-agreement"];

/// Pairs per strand count in the oracle-agreement suite.
pub const AGREEMENT_PAIRS: usize = 1000;
/// Longest word in the oracle-agreement corpus.
pub const AGREEMENT_MAX_LEN: usize = 12;

/// Run the named suite. When `cfg.cache_path` is set the normal-form cache is
/// loaded before the run and written back after it.
pub fn run_suite(name: &str, params: SuiteParams, cfg: &RunConfig) -> Result<VerificationReport> {
    let need = |p: Option<usize>, what: &str| {
        p.ok_or_else(|| Error::Params(format!("suite `{name}` needs --{what}")))
    };
    if !SUITES.contains(&name) {
        return Err(Error::UnknownSuite(name.to_string()));
    }
    if let Some(path) = &cfg.cache_path {
        NfCache::global().load(path);
    }
    let report = match name {
        "purebraid" => purebraid::relation_suite_purebraid(need(params.n, "n")?)?,
        "center" => monomial::center_lemma_suite(need(params.r, "r")?, need(params.n, "n")?)?,
        "prop31" => autpn::suite_prop31(need(params.n, "n")?, cfg)?,
        "thm32" => autpn::suite_thm32(need(params.n, "n")?, cfg)?,
        "autp3" => autpn::suite_autp3(cfg)?,
        "prop43" => autmono::suite_prop43(need(params.r, "r")?, need(params.n, "n")?, cfg)?,
        "thm45" => autmono::suite_thm45(need(params.r, "r")?, need(params.n, "n")?, cfg)?,
        "prop46" => autmono::suite_prop46(need(params.r, "r")?, cfg)?,
        _ => oracle_agreement(params.n, cfg)?,
    };
    if let Some(path) = &cfg.cache_path {
        NfCache::global().save(path)?;
    }
    Ok(report.finalize())
}

/// Compare Garside equality with free-group-action equality on seeded random
/// pairs. A third of the pairs are equal by construction, a third differ from
/// an equal pair by one inverted letter, and a third are independent. Without
/// `n` the suite covers `n = 2..=5`.
pub fn oracle_agreement(n: Option<usize>, cfg: &RunConfig) -> Result<VerificationReport> {
    let ns: Vec<usize> = match n {
        Some(n) if (2..=crate::braid::MAX_STRANDS).contains(&n) => vec![n],
        Some(n) => return Err(Error::Params(format!("oracle-agreement needs 2 <= n <= 16, got {n}"))),
        None => (2..=5).collect(),
    };
    let mut report = VerificationReport::new("oracle-agreement", SuiteParams { n, r: None });
    for n in ns {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ (n as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
        let start = Instant::now();
        let (mut equal, mut witness, mut peak) = (0usize, Vec::new(), 0usize);
        let mut status = CaseStatus::Pass;
        for k in 0..AGREEMENT_PAIRS {
            let (u, v) = agreement_pair(&mut rng, n, k % 3);
            peak = peak.max(u.len()).max(v.len());
            let garside = braid_equal(&u, &v)?;
            match artin_equal(&u, &v, cfg.budget.max_len) {
                Ok(artin) if artin == garside => equal += garside as usize,
                Ok(_) => {
                    status = CaseStatus::Fail;
                    witness.push(format!("{} vs {}", u.word(), v.word()));
                }
                Err(Error::LengthBudget(_)) if status == CaseStatus::Pass => {
                    status = CaseStatus::Indeterminate;
                }
                Err(Error::LengthBudget(_)) => {}
                Err(e) => return Err(e),
            }
        }
        report.push(CaseResult {
            id: format!("agree-n{n}"),
            relation: format!("{AGREEMENT_PAIRS} pairs in B_{n}, lengths <= {AGREEMENT_MAX_LEN}"),
            status,
            elapsed_ms: start.elapsed().as_millis() as u64,
            peak_len: peak,
            witness,
            note: Some(format!("{equal} equal pairs")),
        });
    }
    Ok(report)
}

/// One corpus pair: `kind` 0 is equal, 1 is equal with one letter inverted,
/// 2 is two independent words.
pub fn agreement_pair(rng: &mut ChaCha8Rng, n: usize, kind: usize) -> (BraidWord, BraidWord) {
    let len = rng.gen_range(0..=AGREEMENT_MAX_LEN);
    let u = random_word(rng, n, len);
    if kind == 2 {
        let len = rng.gen_range(0..=AGREEMENT_MAX_LEN);
        return (u, random_word(rng, n, len));
    }
    let mut syms = u.word().syms().to_vec();
    for _ in 0..24 {
        rewrite_step(rng, n, &mut syms);
    }
    if kind == 1 && !syms.is_empty() {
        let p = rng.gen_range(0..syms.len());
        syms[p] = syms[p].inverse();
    }
    let v = BraidWord::new(n, Word::new(syms)).expect("sigma letters stay in range");
    (u, v)
}

fn sigma(s: Sym) -> usize {
    match s.letter {
        Letter::Sigma(i) => i as usize,
        _ => unreachable!("braid words hold only sigma letters"),
    }
}

/// Apply one value-preserving move at a random position, keeping the length
/// at most [`AGREEMENT_MAX_LEN`]: a far commutation, a braid relation in any
/// of its length-3 forms, or insertion or deletion of a cancelling pair.
fn rewrite_step(rng: &mut ChaCha8Rng, n: usize, syms: &mut Vec<Sym>) {
    let len = syms.len();
    match rng.gen_range(0..4) {
        0 if len >= 2 => {
            let p = rng.gen_range(0..len - 1);
            if sigma(syms[p]).abs_diff(sigma(syms[p + 1])) >= 2 {
                syms.swap(p, p + 1);
            }
        }
        1 if len >= 3 => {
            let p = rng.gen_range(0..len - 2);
            if let Some(t) = braid_move(&syms[p..p + 3]) {
                syms[p..p + 3].copy_from_slice(&t);
            }
        }
        2 if len + 2 <= AGREEMENT_MAX_LEN => {
            let p = rng.gen_range(0..=len);
            let l = Sym::pos(Letter::Sigma(rng.gen_range(1..n) as u8));
            let pair = if rng.gen_bool(0.5) { [l, l.inverse()] } else { [l.inverse(), l] };
            syms.splice(p..p, pair);
        }
        3 if len >= 2 => {
            let p = rng.gen_range(0..len - 1);
            if syms[p] == syms[p + 1].inverse() {
                syms.drain(p..p + 2);
            }
        }
        _ => {}
    }
}

/// A length-3 window over two adjacent generators rewritten by a braid
/// relation, if one applies: `x y x = y x y` with `x, y` of one sign, and
/// `x y x^-1 = y^-1 x y` in both directions.
fn braid_move(w: &[Sym]) -> Option<[Sym; 3]> {
    let (a, b, c) = (w[0], w[1], w[2]);
    if sigma(a).abs_diff(sigma(b)) != 1 {
        return None;
    }
    if a == c && a.inv == b.inv {
        Some([b, a, b])
    } else if c == a.inverse() && a.inv == b.inv {
        Some([b.inverse(), a, b])
    } else if a == c.inverse() && b.inv == c.inv {
        Some([b, c, b.inverse()])
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::garside_nf;

    #[test]
    fn rewrites_preserve_value() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in 2..=5 {
            for _ in 0..200 {
                let (u, v) = agreement_pair(&mut rng, n, 0);
                assert!(v.len() <= AGREEMENT_MAX_LEN);
                assert_eq!(garside_nf(&u), garside_nf(&v), "{} vs {}", u.word(), v.word());
            }
        }
    }

    #[test]
    fn braid_moves_are_relations() {
        let n = 3;
        for text in ["s1 s2 s1", "s1^-1 s2^-1 s1^-1", "s1 s2 s1^-1", "s2^-1 s1 s2", "s2^-1 s1^-1 s2^-1 "] {
            let w = BraidWord::parse(n, text).unwrap();
            let t = braid_move(w.word().syms()).unwrap_or_else(|| panic!("{text}"));
            let v = BraidWord::new(n, Word::new(t.to_vec())).unwrap();
            assert_eq!(garside_nf(&w), garside_nf(&v), "{text}");
        }
    }

    #[test]
    fn unknown_suite_and_bad_params() {
        let cfg = RunConfig::default();
        assert_eq!(run_suite("nope", SuiteParams::default(), &cfg), Err(Error::UnknownSuite("nope".into())));
        let p = SuiteParams { n: Some(3), r: None };
        assert!(matches!(run_suite("thm32", p, &cfg), Err(Error::Params(_))));
        assert!(matches!(run_suite("center", p, &cfg), Err(Error::Params(_))));
    }

    #[test]
    fn agreement_is_deterministic() {
        let cfg = RunConfig::default();
        let p = SuiteParams { n: Some(3), r: None };
        let a = run_suite("oracle-agreement", p, &cfg).unwrap();
        let b = run_suite("oracle-agreement", p, &cfg).unwrap();
        assert!(a.all_pass());
        assert_eq!(a.to_json_untimed(), b.to_json_untimed());
    }
}
