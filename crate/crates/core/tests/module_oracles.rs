mod common;

use common::Dense;
use depthkit::homology::depth;
use depthkit::suite::gen_random_module;
use depthkit::{FPModule, Poly, QuotientTarget, Ring, RingRef};
use proptest::prelude::*;

fn rings() -> Vec<RingRef> {
    vec![
        Ring::polynomial(32003, &["x", "y"]).unwrap(),
        Ring::polynomial(32003, &["x", "y", "z"]).unwrap(),
        Ring::quotient(32003, &["x", "y", "z"], &["x^2 + y^2 + z^2"]).unwrap(),
        Ring::quotient(32003, &["x", "y", "z"], &["x*y", "z^2"]).unwrap(),
        Ring::quotient(101, &["x", "y"], &["x*y"]).unwrap(),
    ]
}

fn module(ring_ix: usize, gens: usize, rels: usize, max_deg: u32, seed: u64) -> FPModule {
    let rs = rings();
    gen_random_module(&rs[ring_ix % rs.len()], gens, rels, max_deg, seed).unwrap()
}

/// Presentation of `M ⊗ N` from `A ⊗ 1` and `1 ⊗ B`, built here.
fn dense_tensor(a: &Dense, b: &Dense) -> Dense {
    let (r, s) = (a.twists.len(), b.twists.len());
    let zero = Poly::zero(a.field, a.n);
    let mut twists = Vec::new();
    for i in 0..r {
        for j in 0..s {
            twists.push(a.twists[i] + b.twists[j]);
        }
    }
    let mut cols = Vec::new();
    for c in &a.cols {
        for j in 0..s {
            let mut v = vec![zero.clone(); r * s];
            for i in 0..r {
                v[i * s + j] = c[i].clone();
            }
            cols.push(v);
        }
    }
    for c in &b.cols {
        for i in 0..r {
            let mut v = vec![zero.clone(); r * s];
            for j in 0..s {
                v[i * s + j] = c[j].clone();
            }
            cols.push(v);
        }
    }
    Dense {
        n: a.n,
        field: a.field,
        p: a.p,
        twists,
        cols,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn hilbert_function_matches_dense(ring in 0usize..5, gens in 1usize..3, rels in 0usize..4, deg in 1u32..3, seed in any::<u64>()) {
        let m = module(ring, gens, rels, deg, seed);
        let d = Dense::of(&m);
        prop_assert_eq!(m.hilbert_range(-1, 6), d.hilbert_range(-1, 6));
    }

    #[test]
    fn minimal_presentation_keeps_hilbert(ring in 0usize..5, seed in any::<u64>()) {
        let m = module(ring, 2, 3, 2, seed);
        let mp = m.minimal_presentation();
        prop_assert!(mp.is_minimal());
        prop_assert_eq!(m.hilbert_range(0, 6), mp.hilbert_range(0, 6));
        prop_assert!(mp.num_generators() <= m.num_generators());
    }

    #[test]
    fn tensor_matches_dense(ring in 0usize..5, s1 in any::<u64>(), s2 in any::<u64>()) {
        let a = module(ring, 2, 2, 2, s1);
        let b = module(ring, 1, 2, 2, s2);
        let t = a.tensor_product(&b).unwrap();
        let dt = dense_tensor(&Dense::of(&a), &Dense::of(&b));
        prop_assert_eq!(t.hilbert_range(0, 6), dt.hilbert_range(0, 6));
    }

    #[test]
    fn direct_sum_and_shift(ring in 0usize..5, s1 in any::<u64>(), s2 in any::<u64>(), k in -2i32..3) {
        let a = module(ring, 2, 2, 2, s1);
        let b = module(ring, 1, 1, 2, s2);
        let ab = a.direct_sum(&b).unwrap();
        let (ha, hb) = (a.hilbert_range(-3, 6), b.hilbert_range(-3, 6));
        let sum: Vec<u64> = ha.iter().zip(&hb).map(|(x, y)| x + y).collect();
        prop_assert_eq!(ab.hilbert_range(-3, 6), sum);
        prop_assert_eq!(a.shifted(k).hilbert_range(-3 + k, 6 + k), ha);
    }

    #[test]
    fn quotient_and_regularity_match_dense(ring in 0usize..5, seed in any::<u64>(), c in 1i64..100) {
        let m = module(ring, 2, 2, 2, seed);
        let r = m.ring().clone();
        let x = r.var(0).add(&r.var(1).mul(&r.constant(c)));
        let q = m.quotient_mod_element(&x, QuotientTarget::SameRing).unwrap();
        let dq = Dense::of(&m).with_multiples(&x);
        prop_assert_eq!(q.hilbert_range(0, 6), dq.hilbert_range(0, 6));
        let h = m.hilbert_range(-1, 9);
        let hq = q.hilbert_range(0, 9);
        let identity = (0..hq.len()).all(|k| hq[k] as i64 == h[k + 1] as i64 - h[k] as i64);
        prop_assert_eq!(m.is_regular(&x).unwrap(), identity);
        let kernel = m.colon_kernel(&x).unwrap();
        prop_assert_eq!(kernel.is_zero(), identity);
    }

    #[test]
    fn depth_matches_generic_regular_sequence(ring in 0usize..5, gens in 1usize..3, seed in any::<u64>()) {
        let m = module(ring, gens, 2, 2, seed);
        let d = Dense::of(&m).generic_depth(m.ring(), 9, seed);
        prop_assert_eq!(depth(&m).unwrap(), d);
    }
}

#[test]
fn residue_field_and_free_modules() {
    for r in rings() {
        let k = FPModule::residue_field(r.clone());
        assert_eq!(k.hilbert_range(-1, 4), vec![0, 1, 0, 0, 0, 0]);
        let f = FPModule::free(r.clone(), vec![0, 1]);
        assert!(f.is_free());
        assert_eq!(f.hilbert_range(0, 5), Dense::of(&f).hilbert_range(0, 5));
        assert!(FPModule::zero(r).is_zero());
    }
}

#[test]
fn base_change_to_quotient_ring() {
    let s = Ring::polynomial(32003, &["x", "y"]).unwrap();
    let r = Ring::quotient(32003, &["x", "y"], &["x^2"]).unwrap();
    let m = FPModule::cyclic(s, &[r.var(1)]).unwrap();
    let mr = m.base_change(r.clone()).unwrap();
    // k[x,y]/(y, x^2)
    assert_eq!(mr.hilbert_range(0, 3), vec![1, 1, 0, 0]);
    let reduced = FPModule::cyclic(r.clone(), &[])
        .unwrap()
        .quotient_mod_element(&r.var(1), QuotientTarget::ReducedRing)
        .unwrap();
    assert_eq!(reduced.ring().relations().len(), 2);
    assert!(reduced
        .ring()
        .same_as(&Ring::quotient(32003, &["x", "y"], &["y", "x^2"]).unwrap()));
}
