//! Release gate: nine exhaustive / oracle-agreement criteria, one test and
//! one printed pass line each.  Everything runs over exact arithmetic; the
//! exhaustive families are small enough to finish in minutes.

use std::path::Path;

use pairlab::comonadics::{
    comodule_pairing_oracle, enumerate_compatible_comodules, ComonadClass,
};
use pairlab::entwine::{
    entwined_coproduct, entwined_product, entwining_from_action, entwining_from_coaction,
    ComoduleEntwining, ModuleEntwining,
};
use pairlab::mixed::MixedDistributiveLaw;
use pairlab::monadics::{
    enumerate_algebras, enumerate_compatible_modules, module_pairing_oracle, MonadClass,
    QUnitalAlgebra,
};
use pairlab::pairing::DualPairing;
use pairlab::{fixtures, ExactRing, LinMap, Scalar};
use pairlab_cli::schema::InstanceFile;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const Z2: ExactRing = ExactRing::Zn(2);
const CAP: u128 = 1 << 20;

fn weak_f() -> QUnitalAlgebra {
    fixtures::i2().mu_tilde().unwrap()
}

fn weak_g() -> pairlab::comonadics::QCounitalCoalgebra {
    fixtures::c2().delta_tilde().unwrap()
}

fn swap(ring: ExactRing, a: usize, b: usize) -> LinMap {
    let mut s = LinMap::zero(ring, b * a, a * b);
    for i in 0..a {
        for j in 0..b {
            s.set(j * a + i, i * b + j, ring.one());
        }
    }
    s
}

/// All dual pairings over `Z2` with both carriers of dimension 2.
fn all_pairings_2x2() -> Vec<DualPairing> {
    let mut out = Vec::new();
    for eta in LinMap::enumerate_maps(1, 4, Z2, CAP).unwrap() {
        for eps in LinMap::enumerate_maps(4, 1, Z2, CAP).unwrap() {
            out.push(DualPairing::new(Z2, 2, 2, eta.clone(), eps).unwrap());
        }
    }
    out
}

#[test]
fn a1_repair_constructions_classify_as_promised() {
    let mut checked = 0usize;
    for dim in 1..=2 {
        for alg in enumerate_algebras(dim, Z2, CAP).unwrap() {
            let lr = alg.law_report();
            if lr.unit_regular {
                let repaired = alg.mu_tilde().unwrap().law_report().classification;
                assert_ne!(repaired, MonadClass::QUnital, "mu_tilde must land r-unital or better");
                checked += 1;
            }
            if lr.mult_compatible {
                let repaired = alg.eta_tilde().unwrap().law_report().classification;
                assert_ne!(repaired, MonadClass::QUnital, "eta_tilde must land r-unital or better");
                checked += 1;
            }
            if lr.classification != MonadClass::QUnital {
                let repaired = alg.mu_hat().unwrap().law_report().classification;
                assert_eq!(repaired, MonadClass::WeakMonad, "mu_hat must land weak");
                checked += 1;
            }
            // dual family via transpose
            let coalg = alg.transpose_dual();
            let lc = coalg.law_report();
            if lc.counit_regular {
                let repaired = coalg.delta_tilde().unwrap().law_report().classification;
                assert_ne!(repaired, ComonadClass::QCounital);
                checked += 1;
            }
            if lc.comult_compatible {
                let repaired = coalg.eps_tilde().unwrap().law_report().classification;
                assert_ne!(repaired, ComonadClass::QCounital);
                checked += 1;
            }
            if lc.classification != ComonadClass::QCounital {
                let repaired = coalg.delta_hat().unwrap().law_report().classification;
                assert_eq!(repaired, ComonadClass::WeakComonad);
                checked += 1;
            }
        }
    }
    assert!(checked > 100, "family too small: {checked}");
    println!("A1 repair constructions, exhaustive over Z2 dim<=2 ({checked} repairs): pass");
}

#[test]
fn a2_dictionaries_agree_with_a_constant_reading() {
    let mut instances = 0usize;
    // which reading of the third coalgebra criterion matches, per instance
    let mut middle_always = true;
    let mut last_always = true;
    for dim in 1..=2 {
        for alg in enumerate_algebras(dim, Z2, CAP).unwrap() {
            instances += 1;
            let d = alg.algebra_dictionary();
            assert!(d.equivalences_hold(), "algebra dictionary mismatch");
            let c = alg.transpose_dual().coalgebra_dictionary();
            assert_eq!(c.counit_multiplicative, c.counit_regular);
            assert_eq!(c.sweedler_symmetric, c.counit_symmetric);
            let middle_ok = c.comult_middle == c.comult_compatible;
            let last_ok = c.comult_last == c.comult_compatible;
            assert!(middle_ok || last_ok, "neither reading matches");
            middle_always &= middle_ok;
            last_always &= last_ok;
        }
    }
    assert!(
        middle_always || last_always,
        "no single reading matches across the family"
    );
    println!(
        "A2 dictionaries over {instances} instances, constant reading (middle: {middle_always}, last: {last_always}): pass"
    );
}

#[test]
fn a3_homset_oracles_agree_with_closed_form_flags() {
    let pairings = all_pairings_2x2();
    assert_eq!(pairings.len(), 256);
    for p in &pairings {
        let o = p.homset_oracle(2, CAP).unwrap();
        assert!(o.agrees, "pairing oracle disagrees");
    }
    // structure fixtures: three monads, two comonads
    for alg in [fixtures::i1(), weak_f(), fixtures::i3()] {
        assert!(module_pairing_oracle(&alg, 2, CAP).unwrap().agrees);
    }
    for coalg in [weak_g(), fixtures::c3()] {
        assert!(comodule_pairing_oracle(&coalg, 2, CAP).unwrap().agrees);
    }
    println!("A3 hom-set oracles on 256 pairings + 5 fixtures: pass");
}

#[test]
fn a4_induced_structures_match_the_pairing_flags() {
    for p in all_pairings_2x2() {
        let pr = p.report();
        let monad = p.induced_monad().law_report().classification;
        let comonad = p.induced_comonad().law_report().classification;
        assert_eq!(pr.regular(), monad != MonadClass::QUnital);
        assert_eq!(
            pr.regular() && pr.alpha_symmetric,
            monad == MonadClass::WeakMonad
        );
        assert_eq!(pr.regular(), comonad != ComonadClass::QCounital);
        assert_eq!(
            pr.regular() && pr.beta_symmetric,
            comonad == ComonadClass::WeakComonad
        );
    }
    println!("A4 induced (co)monad classifications on 256 pairings: pass");
}

#[test]
fn a5_entwining_roundtrips_stabilize_with_identical_liftings() {
    let f = weak_f();
    let modules = enumerate_compatible_modules(&f, 2, CAP).unwrap();
    let mut corpus = 0usize;
    for lambda in LinMap::enumerate_maps(4, 4, Z2, CAP).unwrap() {
        let ent = ModuleEntwining::new(f.clone(), f.clone(), 2, lambda).unwrap();
        if !ent.lifting_report().all() {
            continue;
        }
        corpus += 1;
        let recovered = entwining_from_action(&f, &f, 2, &ent.chi()).unwrap();
        assert_eq!(recovered.lambda(), ent.lambda(), "roundtrip must stabilize");
        let twice = entwining_from_action(&f, &f, 2, &recovered.chi()).unwrap();
        assert_eq!(twice.lambda(), recovered.lambda());
        for m in &modules {
            assert_eq!(
                ent.lift_module(m).unwrap().action(),
                recovered.lift_module(m).unwrap().action(),
                "liftings must agree"
            );
        }
    }
    let g = weak_g();
    let comodules = enumerate_compatible_comodules(&g, 2, CAP).unwrap();
    let mut corpus_co = 0usize;
    for psi in LinMap::enumerate_maps(4, 4, Z2, CAP).unwrap() {
        let ent = ComoduleEntwining::new(g.clone(), g.clone(), 2, psi).unwrap();
        if !ent.lifting_report().all() {
            continue;
        }
        corpus_co += 1;
        let recovered = entwining_from_coaction(&g, &g, 2, &ent.zeta()).unwrap();
        assert_eq!(recovered.psi(), ent.psi());
        for m in &comodules {
            assert_eq!(
                ent.lift_comodule(m).unwrap().coaction(),
                recovered.lift_comodule(m).unwrap().coaction()
            );
        }
    }
    assert!(corpus > 0 && corpus_co > 0);
    println!("A5 entwining roundtrips on {corpus} module / {corpus_co} comodule fixtures: pass");
}

#[test]
fn a6_entwined_structure_is_weak_exactly_on_the_normalized_diagrams() {
    let f = weak_f();
    let mut weak_count = 0usize;
    for lambda in LinMap::enumerate_maps(4, 4, Z2, CAP).unwrap() {
        let ep = entwined_product(&f, &f, &lambda).unwrap();
        let weak = ep.is_weak();
        if ep.diagrams.all() {
            assert!(weak, "diagrams held but the entwined product is not weak");
        }
        if weak {
            weak_count += 1;
            // the normalized exchange map satisfies the diagrams and induces
            // the identical entwined structure
            let ep2 = entwined_product(&f, &f, &ep.normalized_lambda()).unwrap();
            assert!(ep2.diagrams.all(), "normalization must satisfy the diagrams");
            assert_eq!(ep2.product, ep.product);
            assert_eq!(ep2.unit, ep.unit);
        }
    }
    let g = weak_g();
    let mut weak_count_co = 0usize;
    for psi in LinMap::enumerate_maps(4, 4, Z2, CAP).unwrap() {
        let ec = entwined_coproduct(&g, &g, &psi).unwrap();
        let weak = ec.is_weak();
        if ec.diagrams.all() {
            assert!(weak);
        }
        if weak {
            weak_count_co += 1;
            let ec2 = entwined_coproduct(&g, &g, &ec.normalized_psi()).unwrap();
            assert!(ec2.diagrams.all());
            assert_eq!(ec2.delta_entwined, ec.delta_entwined);
            assert_eq!(ec2.counit, ec.counit);
        }
    }
    assert!(weak_count > 0 && weak_count_co > 0);
    println!(
        "A6 entwined weakness vs diagrams over 2x65536 exchange maps ({weak_count}/{weak_count_co} weak): pass"
    );
}

#[test]
fn a7_mixed_law_scan_identities_implications_and_lifted_suites() {
    let f = weak_f();
    let g = weak_g();
    let mut corpus = Vec::new();
    for omega in LinMap::enumerate_maps(4, 4, Z2, CAP).unwrap() {
        let w = MixedDistributiveLaw::new(f.clone(), g.clone(), omega).unwrap();
        let r = w.report();
        let p = w.kappa_tau_properties();
        assert!(p.identities(), "unconditional identities must hold for every omega");
        if r.mon_rect {
            assert!(p.kappa_idempotent, "monad rectangle must force kappa idempotent");
        }
        if r.com_rect {
            assert!(p.tau_idempotent, "comonad rectangle must force tau idempotent");
        }
        if r.cond_ve {
            assert!(r.counit_2, "cond-ve must imply counit-2");
            let c = w.consequence_flags();
            assert!(c.mu_tau_commute && c.tau_is_theta_gamma);
        }
        if r.eta_unit {
            assert!(r.unit_2, "eta-unit must imply unit-2");
            let c = w.consequence_flags();
            assert!(c.kappa_delta_commute && c.kappa_is_gamma_theta);
        }
        if r.mon() && r.com() {
            corpus.push((w, r));
        }
    }
    assert!(!corpus.is_empty(), "the rectangle corpus is empty");
    let mut lifted = 0usize;
    for (w, r) in &corpus {
        if r.cond_ve {
            assert!(w.lift_comonad_to_modules(2, CAP).unwrap().all());
            assert!(w.alt_counit(2, CAP).unwrap().agreement);
            lifted += 1;
        }
        if r.eta_unit {
            assert!(w.lift_monad_to_comodules(2, CAP).unwrap().all());
            assert!(w.alt_unit(2, CAP).unwrap().agreement);
            lifted += 1;
        }
        if r.cond_ve && r.counit_2 && r.eta_unit {
            let com = w.comonad_on_modules(2, CAP).unwrap();
            assert!(com.r_counital() && com.module_morphisms);
            let mon = w.monad_on_comodules(2, CAP).unwrap();
            assert!(mon.r_unital() && mon.comodule_morphisms);
        }
    }
    assert!(lifted > 0);
    println!(
        "A7 mixed-law scan over 65536 omega ({} rectangle corpus members, {lifted} lifted suites): pass",
        corpus.len()
    );
}

#[test]
fn a8_idempotent_splitting_and_related_adjunctions() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED);
    // rationals: conjugate a 0/1 diagonal by a product of elementary shears
    // (each shear I + c e_ij inverts to I - c e_ij, so s^-1 is exact)
    for split in 0..100usize {
        let ring = ExactRing::Rationals;
        let n = 2 + (split % 2); // alternate 2x2 and 3x3
        let mut s = LinMap::identity(ring, n);
        let mut s_inv = LinMap::identity(ring, n);
        for _ in 0..4 {
            let i = rng.gen_range(0..n);
            let mut j = rng.gen_range(0..n - 1);
            if j >= i {
                j += 1;
            }
            let c = Scalar::rational(rng.gen_range(-9..10), 1 + rng.gen_range(0..4));
            let mut shear = LinMap::identity(ring, n);
            shear.set(i, j, c.clone());
            let mut shear_inv = LinMap::identity(ring, n);
            shear_inv.set(i, j, ring.neg(&c));
            s = LinMap::compose(&s, &shear).unwrap();
            s_inv = LinMap::compose(&shear_inv, &s_inv).unwrap();
        }
        assert_eq!(LinMap::compose(&s, &s_inv).unwrap(), LinMap::identity(ring, n));
        let mut diag = LinMap::zero(ring, n, n);
        for i in 0..n {
            if rng.gen_bool(0.5) {
                diag.set(i, i, ring.one());
            }
        }
        let e = LinMap::compose(&s, &LinMap::compose(&diag, &s_inv).unwrap()).unwrap();
        let (p, i) = LinMap::split_idempotent(&e).unwrap();
        assert_eq!(LinMap::compose(&i, &p).unwrap(), e);
        assert_eq!(LinMap::compose(&p, &i).unwrap(), LinMap::identity(ring, p.rows()));
    }
    // prime fields: rejection-sample idempotents
    for ring in [ExactRing::Zn(2), ExactRing::Zn(3)] {
        let ExactRing::Zn(modulus) = ring else { unreachable!() };
        let mut found = 0usize;
        while found < 100 {
            let n = 2 + (found % 2);
            let mut e = LinMap::zero(ring, n, n);
            for i in 0..n {
                for j in 0..n {
                    e.set(i, j, Scalar::Int(rng.gen_range(0..modulus)));
                }
            }
            if LinMap::compose(&e, &e).unwrap() != e {
                continue;
            }
            let (p, i) = LinMap::split_idempotent(&e).unwrap();
            assert_eq!(LinMap::compose(&i, &p).unwrap(), e);
            assert_eq!(LinMap::compose(&p, &i).unwrap(), LinMap::identity(ring, p.rows()));
            found += 1;
        }
    }
    // related adjunctions: beta-after-alpha is the identity pointwise
    let mut adjunctions = 0usize;
    for p in all_pairings_2x2() {
        if !p.report().alpha_regular {
            continue;
        }
        let related = p.related_adjunction().unwrap();
        let (beta_alpha, _) = related.adjunction_check(2, CAP).unwrap();
        assert!(beta_alpha, "related adjunction must have beta . alpha = id");
        adjunctions += 1;
    }
    assert!(adjunctions > 0);
    println!("A8 idempotent splittings (300) and related adjunctions ({adjunctions}): pass");
}

#[test]
fn a9_infrastructure_interchange_duality_and_serialization() {
    // interchange: (f2 . f1) (x) (g2 . g1) = (f2 (x) g2) . (f1 (x) g1)
    let f1 = LinMap::from_rows(Z2, &[&[1, 1], &[0, 1]]);
    let f2 = LinMap::from_rows(Z2, &[&[1, 0], &[1, 1]]);
    let g1 = LinMap::from_rows(Z2, &[&[0, 1, 1], &[1, 0, 1]]);
    let g2 = LinMap::from_rows(Z2, &[&[1, 1], &[0, 1], &[1, 0]]);
    let lhs = LinMap::tensor(
        &LinMap::compose(&f2, &f1).unwrap(),
        &LinMap::compose(&g2, &g1).unwrap(),
    )
    .unwrap();
    let rhs = LinMap::compose(
        &LinMap::tensor(&f2, &g2).unwrap(),
        &LinMap::tensor(&f1, &g1).unwrap(),
    )
    .unwrap();
    assert_eq!(lhs, rhs, "interchange law");

    // duality: monad flags = comonad flags of the transpose dual
    for alg in enumerate_algebras(2, Z2, CAP).unwrap() {
        let m = alg.law_report();
        let c = alg.transpose_dual().law_report();
        assert_eq!(m.assoc, c.coassoc);
        assert_eq!(m.unit_regular, c.counit_regular);
        assert_eq!(m.unit_symmetric, c.counit_symmetric);
        assert_eq!(m.mult_compatible, c.comult_compatible);
    }

    // serialization: parse -> serialize -> parse fixes every corpus file
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let mut corpus = 0usize;
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().and_then(|e| e.to_str()) != Some("json") {
            continue;
        }
        let file = InstanceFile::load(&path).unwrap();
        let text = serde_json::to_string(&file).unwrap();
        let back: InstanceFile = serde_json::from_str(&text).unwrap();
        assert_eq!(file, back, "{} round-trip", path.display());
        back.build().unwrap();
        corpus += 1;
    }
    assert!(corpus >= 10);
    // entwined sanity on the normalized flip: swap normalizes into the corpus
    let flip = ModuleEntwining::new(weak_f(), weak_f(), 2, swap(Z2, 2, 2)).unwrap();
    assert!(flip.normalized().lifting_report().all());
    println!("A9 interchange, duality meta-check, serialization over {corpus} fixtures: pass");
}
