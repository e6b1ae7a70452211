use braidaut::autpn::*;
use braidaut::endo::{compose, endo_equal, Endo, NfModel};
use braidaut::report::{Budget, CaseStatus, RunConfig};
use braidaut::words::{Alphabet, Letter, Word};

#[test]
fn omega2_is_phi13_then_conjugation() {
    for n in 3..=5 {
        let m = NfModel::pure(n);
        let c = compose(&m, &phi(n, 1, 3).unwrap(), &conj_sigma(2, n).unwrap(), &Budget::default()).unwrap();
        assert!(endo_equal(&m, &c, &omega(2, n).unwrap()), "n = {n}");
    }
}

#[test]
fn inner_omegas_are_conjugations() {
    for n in 3..=6 {
        let m = NfModel::pure(n);
        for k in (1..n).filter(|&k| k != 2) {
            assert!(endo_equal(&m, &conj_sigma(k, n).unwrap(), &omega(k, n).unwrap()), "ω{k}, n = {n}");
        }
    }
}

#[test]
fn generators_are_homomorphisms() {
    for n in 3..=5 {
        let m = NfModel::pure(n);
        let mut gens: Vec<Endo> = (1..=n).map(|k| omega(k, n).unwrap()).collect();
        gens.push(epsilon(n).unwrap());
        gens.push(psi(n).unwrap());
        gens.push(phi(n, 1, 3).unwrap());
        gens.push(phi_inv(n, 2, n).unwrap());
        for g in &gens {
            assert_eq!(violation(&m, g), None, "{} at n = {n}", g.name);
        }
    }
    let m = NfModel::pure(3);
    for name in ["P", "σ", "U"] {
        assert!(well_defined(&m, &neumann(name).unwrap()), "{name}");
    }
}

#[test]
fn non_homomorphism_is_rejected() {
    for n in 3..=4 {
        let m = NfModel::pure(n);
        let bad = Endo::from_fn("bad", Alphabet::pure(n), 1, |l| match l {
            Letter::A(1, 2) => Word::gen(Letter::A(1, 3)),
            _ => Word::gen(l),
        })
        .unwrap();
        assert!(!well_defined(&m, &bad));
    }
}

#[test]
fn transvection_inverses() {
    let n = 4;
    let m = NfModel::pure(n);
    let b = Budget::default();
    let id = Endo::identity(Alphabet::pure(n));
    let p = psi(n).unwrap();
    assert!(endo_equal(&m, &compose(&m, &p, &p, &b).unwrap(), &id));
    for (i, j) in [(1, 3), (2, 4), (3, 4)] {
        let f = phi(n, i, j).unwrap();
        let fi = phi_inv(n, i, j).unwrap();
        assert!(endo_equal(&m, &compose(&m, &f, &fi, &b).unwrap(), &id));
        let pfp = compose(&m, &compose(&m, &p, &f, &b).unwrap(), &p, &b).unwrap();
        assert!(endo_equal(&m, &pfp, &fi));
    }
    let mut bad = Exponents::new();
    bad.insert((1, 3), 1);
    assert!(transvection("t", n, &bad).is_err());
}

#[test]
fn compose_is_associative() {
    let n = 4;
    let m = NfModel::pure(n);
    let b = Budget::default();
    let (x, y, w) = (omega(1, n).unwrap(), epsilon(n).unwrap(), phi(n, 2, 4).unwrap());
    let l = compose(&m, &compose(&m, &x, &y, &b).unwrap(), &w, &b).unwrap();
    let r = compose(&m, &x, &compose(&m, &y, &w, &b).unwrap(), &b).unwrap();
    assert!(endo_equal(&m, &l, &r));
}

#[test]
fn small_n_is_rejected() {
    assert!(suite_thm32(3, &RunConfig::default()).is_err());
    assert!(suite_prop31(3, &RunConfig::default()).is_err());
}

#[test]
fn autp3_suite_passes() {
    let r = suite_autp3(&RunConfig::default()).unwrap();
    let bad: Vec<_> = r.cases.iter().filter(|c| c.status != CaseStatus::Pass).collect();
    assert!(bad.is_empty(), "{bad:#?}");
    assert_eq!(r.cases.iter().filter(|c| c.id.starts_with("autp3-")).count(), 19);
}

#[test]
fn mapping_class_suite_passes_n4() {
    let r = suite_prop31(4, &RunConfig::default()).unwrap();
    let bad: Vec<_> = r.cases.iter().filter(|c| c.status != CaseStatus::Pass).collect();
    assert!(bad.is_empty(), "{bad:#?}");
}

#[test]
fn presentation_suite_passes_n4() {
    let r = suite_thm32(4, &RunConfig::default()).unwrap();
    let bad: Vec<_> = r.cases.iter().filter(|c| c.status != CaseStatus::Pass).collect();
    assert!(bad.is_empty(), "{bad:#?}");
}
