mod common;

use common::Dense;
use depthkit::depthcheck::{
    cor_spect_check, depth_formula_defect, descend_to_depth_one, find_regular_element,
    les_check_spect, reduce_pair, CheckOptions,
};
use depthkit::instance::parse_instance_file;
use depthkit::suite::{
    default_families, generate_instance, known_examples, run_check, run_lemma_suite,
    run_on_instances, InstanceFamily, Outcome, PairMode, SuiteConfig, ALL_CHECKS,
};
use depthkit::{FPModule, Poly};
use proptest::prelude::*;

fn family(ix: usize) -> InstanceFamily {
    default_families()[ix % default_families().len()].clone()
}

/// `x` is regular on `m` when `HF(M/xM)(t) = HF(M)(t) - HF(M)(t - deg x)`.
fn dense_regular(m: &FPModule, x: &Poly, top: i32) -> bool {
    let d = Dense::of(m);
    let e = x.homogeneous_degree().unwrap() as i32;
    let lo = *d.twists.iter().min().unwrap();
    let h = d.hilbert_range(lo - e, top);
    let hq = d.with_multiples(x).hilbert_range(lo, top);
    (0..hq.len()).all(|k| hq[k] as i64 == h[k + e as usize] as i64 - h[k] as i64)
}

fn dense_depth(m: &FPModule, seed: u64) -> usize {
    Dense::of(m).generic_depth(m.ring(), 9, seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn defect_record_against_dense_depths(fam in 0usize..8, index in 0usize..25) {
        let inst = generate_instance(&family(fam), index).unwrap();
        let bound = 2 * (inst.ring.nvars() + 1);
        let rec = depth_formula_defect(&inst.m, &inst.n, bound).unwrap();
        let t = inst.m.tensor_product(&inst.n).unwrap();
        prop_assert_eq!(rec.depth_m, dense_depth(&inst.m, 1));
        prop_assert_eq!(rec.depth_n, dense_depth(&inst.n, 2));
        prop_assert_eq!(rec.depth_tensor, dense_depth(&t, 3));
        prop_assert_eq!(rec.depth_r, dense_depth(&FPModule::free(inst.ring.clone(), vec![0]), 4));
        if rec.tor_verdict.holds() {
            prop_assert_eq!(rec.defect, 0);
        }
    }

    #[test]
    fn regular_sequence_pairs_are_tor_independent(fam in prop::sample::select(vec![0usize, 1, 4, 6, 7]), index in 0usize..25) {
        let f = family(fam);
        prop_assume!(f.pair == PairMode::RegularSequence);
        let inst = generate_instance(&f, index).unwrap();
        let rec = depth_formula_defect(&inst.m, &inst.n, 2 * (inst.ring.nvars() + 1)).unwrap();
        prop_assert!(!rec.tor_verdict.fails());
        prop_assert!(rec.depth_tensor >= 1);
    }

    #[test]
    fn found_elements_are_regular(fam in 0usize..8, index in 0usize..25, seed in any::<u64>()) {
        let inst = generate_instance(&family(fam), index).unwrap();
        let ms = [inst.m.clone(), inst.n.clone()];
        match find_regular_element(&ms, 3, 16, seed) {
            Ok(x) => {
                prop_assert!(dense_regular(&inst.m, &x, 8));
                prop_assert!(dense_regular(&inst.n, &x, 8));
            }
            Err(_) => {
                // one of the modules has depth zero
                prop_assert!(dense_depth(&inst.m, seed).min(dense_depth(&inst.n, seed)) == 0);
            }
        }
    }

    #[test]
    fn reduction_steps_check_out(fam in 0usize..8, index in 0usize..25) {
        let inst = generate_instance(&family(fam), index).unwrap();
        let opts = CheckOptions::for_ring(&inst.ring);
        let Ok(step) = reduce_pair(&inst.m, &inst.n, &opts) else { return Ok(()) };
        prop_assert!(step.postconditions_hold());
        let x = &step.element;
        prop_assert!(dense_regular(&inst.m, x, 8));
        prop_assert!(dense_regular(&inst.n, x, 8));
        let mbar = &step.modules_after[0].1;
        prop_assert_eq!(dense_depth(mbar, 5), step.depths_after.m);
        let dq = Dense::of(&inst.m).with_multiples(&x.clone());
        prop_assert_eq!(mbar.hilbert_range(0, 7), dq.hilbert_range(0, 7));
    }

    #[test]
    fn long_exact_sequences_hold(fam in 0usize..8, index in 0usize..25) {
        let inst = generate_instance(&family(fam), index).unwrap();
        let Ok(x) = find_regular_element(std::slice::from_ref(&inst.m), 2, 16, index as u64) else { return Ok(()) };
        let les = les_check_spect(&inst.n, &inst.m, &x, 3, 10).unwrap();
        prop_assert!(!les.fails(), "{}", les);
        let cor = cor_spect_check(&inst.n, &inst.m, &x, 3, 10, 6).unwrap();
        prop_assert!(!cor.fails(), "{}", cor);
    }

    #[test]
    fn instance_text_round_trips(fam in 0usize..8, index in 0usize..25) {
        let inst = generate_instance(&family(fam), index).unwrap();
        let file = parse_instance_file(&inst.to_text()).unwrap();
        prop_assert!(file.ring.same_as(&inst.ring));
        let (m, n) = (file.module("M").unwrap(), file.module("N").unwrap());
        prop_assert_eq!(m.generator_degrees(), inst.m.generator_degrees());
        prop_assert_eq!(m.hilbert_range(0, 7), inst.m.hilbert_range(0, 7));
        prop_assert_eq!(n.hilbert_range(0, 7), inst.n.hilbert_range(0, 7));
        prop_assert_eq!(&file.pairs, &vec![("M".to_string(), "N".to_string())]);
    }
}

#[test]
fn descent_on_the_cone_with_n_free() {
    let k3 = known_examples()
        .into_iter()
        .find(|k| k.name == "K3")
        .unwrap()
        .instance;
    let n = FPModule::free(k3.ring.clone(), vec![0]);
    let d = descend_to_depth_one(&k3.m, &n, &CheckOptions::for_ring(&k3.ring)).unwrap();
    assert_eq!(d.steps.len(), 1);
    assert!(d.consistent(), "{:?}", d.error);
}

#[test]
fn known_examples_have_no_failures() {
    let cfg = SuiteConfig::default();
    for k in known_examples() {
        let rec = depth_formula_defect(&k.instance.m, &k.instance.n, 8).unwrap();
        let got = (rec.depth_m, rec.depth_n, rec.depth_r, rec.depth_tensor);
        assert_eq!(got, k.expected.depths, "{}", k.name);
        assert_eq!(
            rec.tor_verdict.status(),
            k.expected.tor_status,
            "{}",
            k.name
        );
        assert_eq!(rec.defect, k.expected.defect);
        for c in ALL_CHECKS {
            let o = run_check(c, &k.instance, &cfg);
            assert!(!matches!(o, Outcome::Fails(_)), "{} {}: {:?}", k.name, c, o);
        }
    }
}

#[test]
fn suite_reports_are_reproducible() {
    let fams = vec![
        InstanceFamily::new("small2", 2, 0, PairMode::Random, 6, 11),
        InstanceFamily::new("small_hyp", 3, 1, PairMode::RegularSequence, 6, 12),
    ];
    let checks = ["depth_oracles", "depth_formula", "les_spect", "descent"];
    let a = run_lemma_suite(&fams, &checks, &SuiteConfig::default());
    let b = run_lemma_suite(&fams, &checks, &SuiteConfig::default());
    assert_eq!(a.to_json(), b.to_json());
    assert_eq!(a.to_text(), b.to_text());
    assert_eq!(a.instances + a.generation_failures.len(), 12);
    for t in &a.tallies {
        assert_eq!(t.total(), a.instances, "{}", t.check);
    }
    assert!(!a.has_failures(), "{:?}", a.failures);
}

#[test]
fn preconditions_are_skipped_not_failed() {
    // S/(x) and S/(y) over k[x,y]: depth of the tensor product is zero
    let k1 = known_examples().remove(0).instance;
    let r = run_on_instances(
        &[k1],
        &["depth_reduct", "descent", "les_spect"],
        &SuiteConfig::default(),
    );
    assert_eq!(r.tally("depth_reduct").unwrap().skipped, 1);
    assert_eq!(r.tally("depth_reduct").unwrap().fails, 0);
    assert!(!r.has_failures());
    assert_eq!(r.outcomes.len(), 1);
}
