use braidaut::autmono::*;
use braidaut::endo::{compose, endo_equal, Endo, NfModel};
use braidaut::report::{Budget, CaseStatus, RunConfig};
use braidaut::words::{Letter, Word};

fn mono(r: usize, n: usize) -> (Mono, NfModel) {
    (Mono::new(r, n).unwrap(), NfModel::mono(r, n))
}

fn w(m: &Mono, text: &str) -> Word {
    m.alphabet().parse(text).unwrap()
}

#[test]
fn transvection_images() {
    let (m, _) = mono(2, 3);
    let psi = mono_transvection(&m, Transvection::Psi).unwrap();
    assert_eq!(psi.image(Letter::C(1)), w(&m, "C1 Zrn^-2"));
    assert_eq!(psi.image(Letter::C(2)), w(&m, "C2"));
    assert_eq!(psi.central_exp(), -1);
    let ups = mono_transvection(&m, Transvection::Upsilon(2)).unwrap();
    assert_eq!(ups.image(Letter::C(1)), w(&m, "C1 Zrn"));
    assert_eq!(ups.image(Letter::C(2)), w(&m, "C2 Zrn^-1"));
    assert_eq!(ups.image(Letter::MA(1, 2, 1)), w(&m, "A1.2.1"));
    assert_eq!(ups.central_exp(), 1);
    assert!(mono_transvection(&m, Transvection::Upsilon(1)).is_err());
    assert!(mono_transvection(&m, Transvection::Phi(1, 2, 3)).is_err());
}

#[test]
fn transvection_relations() {
    let (m, model) = mono(2, 3);
    let b = Budget::default();
    let psi = mono_transvection(&m, Transvection::Psi).unwrap();
    let ups = mono_transvection(&m, Transvection::Upsilon(2)).unwrap();
    let id = Endo::identity(m.alphabet());
    assert!(endo_equal(&model, &compose(&model, &psi, &psi, &b).unwrap(), &id));
    let lhs = compose(&model, &compose(&model, &psi, &ups, &b).unwrap(), &psi, &b).unwrap();
    let ups_inv = mono_transvection_inverse(&m, Transvection::Upsilon(2)).unwrap();
    assert!(endo_equal(&model, &lhs, &ups_inv));
    let phi = mono_transvection(&m, Transvection::Phi(1, 3, 2)).unwrap();
    let phi_inv = mono_transvection_inverse(&m, Transvection::Phi(1, 3, 2)).unwrap();
    assert!(endo_equal(&model, &compose(&model, &phi, &phi_inv, &b).unwrap(), &id));
}

#[test]
fn table_rows() {
    let (m, _) = mono(3, 3);
    let rho0 = rho_tilde(&m, 0).unwrap();
    assert_eq!(rho0.image(Letter::C(1)), w(&m, "C1"));
    assert_eq!(rho0.image(Letter::MA(1, 2, 3)), w(&m, "A1.2.2"));
    assert_eq!(rho0.image(Letter::MA(1, 3, 1)), w(&m, "C1^-1 A1.3.3 C1"));
    assert_eq!(rho0.image(Letter::MA(2, 3, 1)), w(&m, "A2.3.1"));
    let eps = eps_tilde(&m);
    assert_eq!(eps.image(Letter::C(1)), w(&m, "C1^-1 Zrn^2"));
    let delta = delta_tilde(&m);
    assert_eq!(delta.image(Letter::C(1)), m.d(3).inverse().mul(&m.z(1)));
    assert!(rho_tilde(&m, 3).is_err());
}

#[test]
fn eps_tilde_is_not_identity() {
    let (m, model) = mono(2, 3);
    assert!(!endo_equal(&model, &eps_tilde(&m), &Endo::identity(m.alphabet())));
}

#[test]
fn tables_match_defining_composites() {
    for (r, n) in [(2, 3), (3, 3), (2, 4), (3, 4)] {
        let (m, model) = mono(r, n);
        for (e, c) in lifts(&m).unwrap() {
            for g in m.gens() {
                assert!(model.nf(&e.image(g)) == c.image(&m, g), "{}({g}) at r = {r}, n = {n}", e.name);
            }
        }
    }
}

#[test]
fn printed_rows_disagree_with_composites() {
    let (m, model) = mono(2, 3);
    let ls = lifts(&m).unwrap();
    let rho1 = rho_tilde_with(&m, 1, Table::Printed).unwrap();
    let a13 = Letter::MA(1, 3, 2);
    assert!(model.nf(&rho1.image(a13)) != ls[1].1.image(&m, a13));
    // two generators with the same image
    assert!(model.equal(&rho1.image(a13), &rho1.image(Letter::MA(2, 3, 2))));
    let delta = delta_tilde_with(&m, Table::Printed);
    let comp = &ls.last().unwrap().1;
    for l in [Letter::MA(1, 2, 1), Letter::MA(1, 3, 1), Letter::MA(2, 3, 1)] {
        assert!(model.nf(&delta.image(l)) != comp.image(&m, l), "{l}");
    }
    assert!(model.nf(&delta.image(Letter::C(1))) == comp.image(&m, Letter::C(1)));

    let (m, model) = mono(2, 4);
    let ls = lifts(&m).unwrap();
    let rho2 = rho_tilde_with(&m, 2, Table::Printed).unwrap();
    for l in [Letter::MA(2, 4, 2), Letter::MA(3, 4, 1)] {
        assert!(model.nf(&rho2.image(l)) != ls[2].1.image(&m, l), "{l}");
    }
}

#[test]
fn lifts_fix_the_center() {
    for (r, n) in [(2, 3), (3, 3)] {
        let (m, model) = mono(r, n);
        let z = model.nf(&m.z(1));
        for (e, _) in lifts(&m).unwrap() {
            assert!(model.nf(&e.apply(&m.center_word())) == z, "{} at r = {r}", e.name);
        }
    }
}

#[test]
fn involutions() {
    let (m, model) = mono(3, 3);
    let b = Budget::default();
    let id = Endo::identity(m.alphabet());
    for e in [eps_tilde(&m), delta_tilde(&m)] {
        assert!(endo_equal(&model, &compose(&model, &e, &e, &b).unwrap(), &id), "{}", e.name);
    }
}

#[test]
fn well_definedness() {
    let (m, model) = mono(2, 3);
    for (e, _) in lifts(&m).unwrap() {
        assert!(mono_well_defined(&m, &model, &e, 7), "{}", e.name);
    }
    let bad = Endo::from_fn("bad", m.alphabet(), 1, |l| match l {
        Letter::C(1) => Word::gen(Letter::C(2)),
        _ => Word::gen(l),
    })
    .unwrap();
    assert!(!mono_well_defined(&m, &model, &bad, 7));
}

fn all_pass(report: &braidaut::report::VerificationReport) -> bool {
    report.cases.iter().all(|c| c.status == CaseStatus::Pass)
}

#[test]
fn normalizer_and_presentation_suites_pass() {
    let cfg = RunConfig::default();
    for (r, n) in [(2, 3), (3, 3)] {
        assert!(all_pass(&suite_prop43(r, n, &cfg).unwrap()), "prop43 r = {r}");
        assert!(all_pass(&suite_thm45(r, n, &cfg).unwrap()), "thm45 r = {r}");
    }
    assert!(suite_prop43(2, 2, &cfg).is_err());
}

#[test]
fn rank_two_suite_passes() {
    let cfg = RunConfig::default();
    for r in 2..=4 {
        assert!(all_pass(&suite_prop46(r, &cfg).unwrap()), "r = {r}");
    }
}

fn commutator_lift(m: &Mono) -> Endo {
    let (a1, a2) = (m.a(1, 2, 1), m.a(1, 2, 2));
    let comm = a1.mul(&a2).mul(&a1.inverse()).mul(&a2.inverse());
    Endo::from_fn("P", m.alphabet(), 1, |l| match l {
        Letter::C(1) => m.c(1).mul(&comm),
        Letter::MA(1, 2, 1) => a2.clone(),
        Letter::MA(1, 2, 2) => a1.clone(),
        _ => Word::gen(l),
    })
    .unwrap()
}

#[test]
fn commutator_lift_of_p_needs_r_at_least_three() {
    let (m, model) = mono(2, 2);
    let lit = commutator_lift(&m);
    assert!(model.nf(&lit.apply(&m.center_word())) != model.nf(&m.z(1)));
    for r in 3..=4 {
        let (m, model) = mono(r, 2);
        assert!(endo_equal(&model, &commutator_lift(&m), &nielsen(&m, "P").unwrap()), "r = {r}");
    }
}
