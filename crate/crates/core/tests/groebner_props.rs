use depthkit::groebner::{buchberger, s_vector, syzygies, ModVec};
use depthkit::poly::{FieldElem, Monomial, Poly, PrimeField};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_form(field: PrimeField, n: usize, d: u32, rng: &mut ChaCha8Rng) -> Poly {
    let mut terms = Vec::new();
    for m in Monomial::all_of_degree(n, d) {
        if rng.gen_bool(0.5) {
            terms.push((
                m,
                field.elem(rng.gen_range(1..field.characteristic() as i64)),
            ));
        }
    }
    Poly::from_terms(field, n, terms)
}

/// Random homogeneous vectors in a free module with the given twists.
fn random_vectors(
    field: PrimeField,
    n: usize,
    twists: &[i32],
    count: usize,
    rng: &mut ChaCha8Rng,
) -> Vec<ModVec> {
    (0..count)
        .map(|_| {
            let d = twists.iter().max().unwrap() + rng.gen_range(1..3);
            let entries: Vec<Poly> = twists
                .iter()
                .map(|&t| random_form(field, n, (d - t) as u32, rng))
                .collect();
            ModVec::from_polys(&entries)
        })
        .filter(|v| !v.is_zero())
        .collect()
}

fn combine(cols: &[ModVec], coeffs: &[Poly], field: PrimeField) -> ModVec {
    cols.iter().zip(coeffs).fold(ModVec::zero(), |acc, (c, p)| {
        acc.add(&c.mul_poly(p, field), field)
    })
}

fn instance(seed: u64) -> (PrimeField, usize, Vec<i32>, Vec<ModVec>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let field = PrimeField::new([7, 101, 32003][rng.gen_range(0..3)]).unwrap();
    let n = rng.gen_range(2..=3);
    let rank = rng.gen_range(1..=3);
    let twists: Vec<i32> = (0..rank).map(|_| rng.gen_range(0..2)).collect();
    let count = rng.gen_range(1..=4);
    let gens = random_vectors(field, n, &twists, count, &mut rng);
    (field, n, twists, gens)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn generators_reduce_to_zero(seed in any::<u64>()) {
        let (field, n, twists, gens) = instance(seed);
        let gb = buchberger(field, n, &twists, &gens);
        for g in &gens {
            prop_assert!(gb.normal_form(g).is_zero());
        }
    }

    #[test]
    fn s_vectors_reduce_to_zero(seed in any::<u64>()) {
        let (field, n, twists, gens) = instance(seed);
        let gb = buchberger(field, n, &twists, &gens);
        let els = gb.elements();
        for i in 0..els.len() {
            for j in i + 1..els.len() {
                if let Some(s) = s_vector(&els[i], &els[j], field) {
                    prop_assert!(gb.normal_form(&s).is_zero());
                }
            }
        }
    }

    #[test]
    fn reduced_basis_is_interreduced(seed in any::<u64>()) {
        let (field, n, twists, gens) = instance(seed);
        let gb = buchberger(field, n, &twists, &gens);
        prop_assert!(gb.is_reduced());
        let els = gb.elements();
        for (i, g) in els.iter().enumerate() {
            prop_assert_eq!(g.lead().unwrap().coeff, FieldElem::ONE);
            for (j, h) in els.iter().enumerate() {
                if i == j {
                    continue;
                }
                let lh = h.lead().unwrap();
                for t in g.terms() {
                    prop_assert!(!(t.pos == lh.pos && lh.mon.divides(&t.mon)));
                }
            }
        }
    }

    #[test]
    fn syzygies_are_sound(seed in any::<u64>()) {
        let (field, n, twists, gens) = instance(seed);
        let degrees: Vec<i32> = gens.iter().map(|g| g.homogeneous_degree(&twists).unwrap()).collect();
        for s in syzygies(field, n, &gens, &degrees) {
            let coeffs = s.to_polys(gens.len(), field, n);
            prop_assert!(combine(&gens, &coeffs, field).is_zero());
        }
    }
}

#[test]
fn koszul_kernel_is_complete() {
    let field = PrimeField::new(32003).unwrap();
    for n in 2..=4 {
        let cols: Vec<ModVec> = (0..n)
            .map(|i| ModVec::from_polys(&[Poly::var(field, n, i)]))
            .collect();
        let syz = syzygies(field, n, &cols, &vec![1; n]);
        // Koszul relations x_j e_i - x_i e_j
        let mut koszul = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let mut entries = vec![Poly::zero(field, n); n];
                entries[i] = Poly::var(field, n, j);
                entries[j] = Poly::var(field, n, i).neg();
                koszul.push(ModVec::from_polys(&entries));
            }
        }
        let twists = vec![1; n];
        let syz_gb = buchberger(field, n, &twists, &syz);
        let kos_gb = buchberger(field, n, &twists, &koszul);
        assert!(koszul.iter().all(|k| syz_gb.contains(k)), "n = {n}");
        assert!(syz.iter().all(|s| kos_gb.contains(s)), "n = {n}");
    }
}

#[test]
fn injective_and_repeated_columns() {
    let field = PrimeField::new(32003).unwrap();
    let n = 2;
    let one = Poly::one(field, n);
    let zero = Poly::zero(field, n);
    let id = [
        ModVec::from_polys(&[one.clone(), zero.clone()]),
        ModVec::from_polys(&[zero.clone(), one.clone()]),
    ];
    assert!(syzygies(field, n, &id, &[0, 0]).is_empty());
    let x = Poly::var(field, n, 0);
    let rep = [ModVec::from_polys(std::slice::from_ref(&x)), ModVec::from_polys(&[x])];
    let syz = syzygies(field, n, &rep, &[1, 1]);
    let gb = buchberger(field, n, &[0, 0], &syz);
    assert!(gb.contains(&ModVec::from_polys(&[one.clone(), one.neg()])));
}

#[test]
fn empty_and_monomial_inputs() {
    let field = PrimeField::new(32003).unwrap();
    assert!(buchberger(field, 2, &[0], &[]).is_empty());
    let x = ModVec::from_polys(&[Poly::var(field, 2, 0)]);
    let gb = buchberger(field, 2, &[0], std::slice::from_ref(&x));
    assert_eq!(gb.elements(), std::slice::from_ref(&x));
}
