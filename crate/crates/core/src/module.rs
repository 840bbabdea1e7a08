//! Finitely presented graded modules over `R = S / I`, stored as cokernels.
//!
//! Every computation runs over the ambient polynomial ring `S`: a module
//! `coker(A)` over `R` is the `S`-module presented by `A` together with the
//! columns `g * e_j` for `g` in a Gröbner basis of `I` ("folded" relations).

use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::free::{FreeModule, ModuleMap};
use crate::groebner::{run_engine, EngineOptions, GroebnerBasis, Input, ModVec, Role};
use crate::poly::{Monomial, Poly};
use crate::resolution::Resolution;
use crate::ring::{Ring, RingRef};

/// Where `M / xM` lives.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuotientTarget {
    /// As a module over the same ring `R`.
    SameRing,
    /// Base-changed to `R / xR`.
    ReducedRing,
}

/// A finitely presented graded module `coker(presentation)`.
#[derive(Clone)]
pub struct FPModule {
    inner: Arc<Inner>,
}

struct Inner {
    ring: RingRef,
    pres: ModuleMap,
    minimal: bool,
    gb: OnceLock<GroebnerBasis>,
    ambient_res: OnceLock<Resolution>,
    ring_res: Mutex<Option<Resolution>>,
    depth: OnceLock<Result<usize>>,
}

impl std::fmt::Debug for FPModule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "FPModule {{ ring: {:?}, generators: {:?}, relations: {:?} }}",
            self.inner.ring,
            self.generator_degrees(),
            self.inner.pres.display_rows()
        )
    }
}

/// `g * e_j` for every ideal generator `g` and cover generator `j`.
pub(crate) fn ideal_multiples(ring: &Ring, degrees: &[i32]) -> Vec<(ModVec, i32)> {
    let mut out = Vec::new();
    for g in ring.ideal_gb() {
        let d = g.homogeneous_degree().unwrap() as i32;
        for (j, &a) in degrees.iter().enumerate() {
            let v =
                ModVec::from_polys(std::slice::from_ref(g)).remap_positions(|_| Some(j as u32), ring.field());
            out.push((v, a + d));
        }
    }
    out
}

/// Generators of `{u in U : phi(u) in im P + I*C}` where `phi: U -> C` and
/// `C` has generator degrees `target`.
pub(crate) fn kernel_generators(
    ring: &Ring,
    u_degrees: &[i32],
    phi: &[ModVec],
    target: &[i32],
    rels: &[(ModVec, i32)],
) -> Vec<(ModVec, i32)> {
    let mut inputs: Vec<Input> = phi
        .iter()
        .zip(u_degrees)
        .map(|(v, &d)| Input {
            vector: v.clone(),
            degree: d,
            role: Role::Fixed,
        })
        .collect();
    for (v, d) in rels.iter().cloned().chain(ideal_multiples(ring, target)) {
        inputs.push(Input {
            vector: v,
            degree: d,
            role: Role::Fixed,
        });
    }
    let out = run_engine(
        ring.field(),
        ring.nvars(),
        &inputs,
        EngineOptions {
            track_syzygies: true,
            tail_reduce: false,
            track_limit: Some(phi.len()),
        },
    );
    out.syzygies
        .into_iter()
        .filter_map(|s| {
            let s = reduce_vector(ring, &s, u_degrees.len());
            let d = s.homogeneous_degree(u_degrees)?;
            Some((s, d))
        })
        .collect()
}

/// Indices of `candidates` forming a minimal generating set modulo
/// `fixed + I * (ambient)`.
pub(crate) fn minimal_subset(
    ring: &Ring,
    ambient: &[i32],
    candidates: &[(ModVec, i32)],
    fixed: &[(ModVec, i32)],
) -> Vec<usize> {
    let mut inputs: Vec<Input> = candidates
        .iter()
        .map(|(v, d)| Input {
            vector: v.clone(),
            degree: *d,
            role: Role::Candidate,
        })
        .collect();
    for (v, d) in fixed.iter().cloned().chain(ideal_multiples(ring, ambient)) {
        inputs.push(Input {
            vector: v,
            degree: d,
            role: Role::Fixed,
        });
    }
    run_engine(
        ring.field(),
        ring.nvars(),
        &inputs,
        EngineOptions::default(),
    )
    .minimal
}

/// Reduces every entry of a vector modulo the ring's ideal.
pub(crate) fn reduce_vector(ring: &Ring, v: &ModVec, rank: usize) -> ModVec {
    if ring.is_polynomial_ring() {
        return v.clone();
    }
    let polys: Vec<Poly> = v
        .to_polys(rank, ring.field(), ring.nvars())
        .iter()
        .map(|p| ring.reduce(p))
        .collect();
    ModVec::from_polys(&polys)
}

/// The module `(span(gens) + span(rels)) / span(rels)` inside the free
/// module with generator degrees `cover`, presented minimally.
pub(crate) fn subquotient(
    ring: &RingRef,
    cover: &[i32],
    gens: &[(ModVec, i32)],
    rels: &[(ModVec, i32)],
) -> FPModule {
    let kept = minimal_subset(ring, cover, gens, rels);
    if kept.is_empty() {
        return FPModule::zero(ring.clone());
    }
    let kvecs: Vec<ModVec> = kept.iter().map(|&k| gens[k].0.clone()).collect();
    let kdegs: Vec<i32> = kept.iter().map(|&k| gens[k].1).collect();
    let syz = kernel_generators(ring, &kdegs, &kvecs, cover, rels);
    let sv: Vec<ModVec> = syz.iter().map(|s| s.0.clone()).collect();
    let sd: Vec<i32> = syz.iter().map(|s| s.1).collect();
    let pres = ModuleMap::from_modvecs(ring.clone(), FreeModule::new(kdegs), &sv, sd);
    FPModule::from_map_unchecked(ring.clone(), pres, false).minimal_presentation()
}

/// Homogeneous vectors with their degrees.
type Graded = Vec<(ModVec, i32)>;

impl FPModule {
    /// Validated module `coker(presentation)` over `ring`.
    pub fn new(ring: RingRef, presentation: ModuleMap) -> Result<Self> {
        if !presentation.ring().same_as(&ring) {
            return Err(Error::Ring("presentation is over a different ring".into()));
        }
        let pres = presentation.over_ring(ring.clone())?;
        Ok(FPModule::from_map_unchecked(ring, pres, false))
    }

    pub(crate) fn from_map_unchecked(ring: RingRef, pres: ModuleMap, minimal: bool) -> Self {
        FPModule {
            inner: Arc::new(Inner {
                ring,
                pres,
                minimal,
                gb: OnceLock::new(),
                ambient_res: OnceLock::new(),
                ring_res: Mutex::new(None),
                depth: OnceLock::new(),
            }),
        }
    }

    /// Module given by relation columns; source degrees are read off the columns.
    pub fn from_relations(
        ring: RingRef,
        generator_degrees: Vec<i32>,
        relations: Vec<Vec<Poly>>,
    ) -> Result<Self> {
        let pres =
            ModuleMap::from_columns(ring.clone(), FreeModule::new(generator_degrees), relations)?;
        FPModule::new(ring, pres)
    }

    pub fn free(ring: RingRef, degrees: Vec<i32>) -> Self {
        let pres = ModuleMap::zero(
            ring.clone(),
            FreeModule::default(),
            FreeModule::new(degrees),
        );
        FPModule::from_map_unchecked(ring, pres, true)
    }

    pub fn zero(ring: RingRef) -> Self {
        FPModule::free(ring, vec![])
    }

    /// `R / (f_1, ..., f_k)` for homogeneous `f_i`.
    pub fn cyclic(ring: RingRef, ideal: &[Poly]) -> Result<Self> {
        FPModule::from_relations(
            ring,
            vec![0],
            ideal.iter().map(|f| vec![f.clone()]).collect(),
        )
    }

    /// The residue field `R / m`.
    pub fn residue_field(ring: RingRef) -> Self {
        let vars: Vec<Poly> = (0..ring.nvars()).map(|i| ring.var(i)).collect();
        FPModule::cyclic(ring, &vars).expect("variables are homogeneous")
    }

    pub fn ring(&self) -> &RingRef {
        &self.inner.ring
    }

    pub fn presentation(&self) -> &ModuleMap {
        &self.inner.pres
    }

    pub fn generator_degrees(&self) -> &[i32] {
        self.inner.pres.target().degrees()
    }

    pub fn num_generators(&self) -> usize {
        self.inner.pres.nrows()
    }

    pub fn num_relations(&self) -> usize {
        self.inner.pres.ncols()
    }

    pub fn is_minimal(&self) -> bool {
        self.inner.minimal
    }

    pub(crate) fn ambient_resolution_cache(&self) -> &OnceLock<Resolution> {
        &self.inner.ambient_res
    }

    pub(crate) fn depth_cache(&self) -> &OnceLock<Result<usize>> {
        &self.inner.depth
    }

    pub(crate) fn ring_resolution_cache(&self) -> &Mutex<Option<Resolution>> {
        &self.inner.ring_res
    }

    /// Presentation columns plus the folded ideal multiples, over `S`.
    pub(crate) fn folded_relations(&self) -> Vec<(ModVec, i32)> {
        let p = &self.inner.pres;
        let mut out: Vec<(ModVec, i32)> = p
            .column_vectors()
            .into_iter()
            .zip(p.source().degrees().iter().copied())
            .filter(|(v, _)| !v.is_zero())
            .collect();
        out.extend(ideal_multiples(&self.inner.ring, self.generator_degrees()));
        out
    }

    pub(crate) fn relation_vectors(&self) -> Vec<(ModVec, i32)> {
        let p = &self.inner.pres;
        p.column_vectors()
            .into_iter()
            .zip(p.source().degrees().iter().copied())
            .filter(|(v, _)| !v.is_zero())
            .collect()
    }

    /// Gröbner basis of the submodule `im(A) + I F_0` of the cover.
    pub fn groebner_basis(&self) -> &GroebnerBasis {
        self.inner.gb.get_or_init(|| {
            let ring = &self.inner.ring;
            let inputs: Vec<Input> = self
                .folded_relations()
                .into_iter()
                .map(|(v, d)| Input {
                    vector: v,
                    degree: d,
                    role: Role::Fixed,
                })
                .collect();
            let out = run_engine(
                ring.field(),
                ring.nvars(),
                &inputs,
                EngineOptions {
                    track_syzygies: false,
                    tail_reduce: true,
                    track_limit: None,
                },
            );
            GroebnerBasis::from_engine(
                ring.field(),
                ring.nvars(),
                self.generator_degrees().to_vec(),
                out.basis,
                true,
            )
        })
    }

    /// Zero iff the relations generate every unit vector of the cover.
    pub fn is_zero(&self) -> bool {
        self.num_generators() == 0 || self.groebner_basis().contains_all_units()
    }

    /// Is the element represented by `v` (a cover vector) zero in the module?
    pub fn is_zero_element(&self, v: &ModVec) -> bool {
        self.groebner_basis().contains(v)
    }

    /// Dimensions of the graded pieces in degrees `lo..=hi`.
    pub fn hilbert_range(&self, lo: i32, hi: i32) -> Vec<u64> {
        let gb = self.groebner_basis();
        let n = self.inner.ring.nvars();
        let degs = self.generator_degrees();
        let leads: Vec<Vec<Monomial>> = (0..degs.len()).map(|j| gb.lead_monomials(j)).collect();
        let mut cache: Vec<Option<Vec<Monomial>>> = Vec::new();
        (lo..=hi)
            .map(|d| {
                let mut total = 0u64;
                for (j, &a) in degs.iter().enumerate() {
                    let e = d - a;
                    if e < 0 {
                        continue;
                    }
                    let e = e as usize;
                    if leads[j].iter().any(|m| m.is_one()) {
                        continue;
                    }
                    if cache.len() <= e {
                        cache.resize(e + 1, None);
                    }
                    let ms = cache[e].get_or_insert_with(|| Monomial::all_of_degree(n, e as u32));
                    total += ms
                        .iter()
                        .filter(|m| !leads[j].iter().any(|l| l.divides(m)))
                        .count() as u64;
                }
                total
            })
            .collect()
    }

    /// Dimensions of the graded pieces in degrees `0..=d_max`.
    pub fn hilbert_function(&self, d_max: u32) -> Vec<u64> {
        self.hilbert_range(0, d_max as i32)
    }

    /// Same module with every degree shifted: `M(-by)` when `by > 0`.
    pub fn shifted(&self, by: i32) -> FPModule {
        let p = &self.inner.pres;
        let pres = ModuleMap::from_parts_unchecked(
            self.inner.ring.clone(),
            p.source().shifted(by),
            p.target().shifted(by),
            p.columns().to_vec(),
        );
        FPModule::from_map_unchecked(self.inner.ring.clone(), pres, self.inner.minimal)
    }

    pub fn direct_sum(&self, other: &FPModule) -> Result<FPModule> {
        self.check_ring(other)?;
        let pres = self.inner.pres.direct_sum(&other.inner.pres);
        Ok(FPModule::from_map_unchecked(
            self.inner.ring.clone(),
            pres,
            self.inner.minimal && other.inner.minimal,
        ))
    }

    fn check_ring(&self, other: &FPModule) -> Result<()> {
        if self.inner.ring.same_as(&other.inner.ring) {
            Ok(())
        } else {
            Err(Error::Ring(format!(
                "{:?} vs {:?}",
                self.inner.ring, other.inner.ring
            )))
        }
    }

    /// `M ⊗_R N` presented by `[A ⊗ id | id ⊗ B]` on the tensored covers.
    pub fn tensor_product(&self, other: &FPModule) -> Result<FPModule> {
        self.check_ring(other)?;
        let a = &self.inner.pres;
        let b = &other.inner.pres;
        let left = a.tensor_identity(other.presentation().target());
        let right = b.identity_tensor(a.target());
        let pres = left.concat(&right)?;
        Ok(FPModule::from_map_unchecked(
            self.inner.ring.clone(),
            pres,
            false,
        ))
    }

    fn check_element(&self, x: &Poly) -> Result<u32> {
        let ring = &self.inner.ring;
        if x.field() != ring.field() || x.nvars() != ring.nvars() {
            return Err(Error::Ring("element from another ring".into()));
        }
        let Some(d) = x.homogeneous_degree() else {
            return Err(Error::Input(if x.is_zero() {
                "element is zero".into()
            } else {
                "element is not homogeneous".into()
            }));
        };
        if d == 0 {
            return Err(Error::Input("element is a unit".into()));
        }
        if ring.reduce(x).is_zero() {
            return Err(Error::Input("element is zero in the ring".into()));
        }
        Ok(d)
    }

    /// `M / xM`, over `R` or base-changed to `R / xR`.
    pub fn quotient_mod_element(&self, x: &Poly, target: QuotientTarget) -> Result<FPModule> {
        let d = self.check_element(x)? as i32;
        let ring = &self.inner.ring;
        match target {
            QuotientTarget::SameRing => {
                let r = self.num_generators();
                let degs = self.generator_degrees();
                let extra_cols: Vec<Vec<Poly>> = (0..r)
                    .map(|j| {
                        (0..r)
                            .map(|i| if i == j { x.clone() } else { ring.zero() })
                            .collect()
                    })
                    .collect();
                let extra = ModuleMap::new(
                    ring.clone(),
                    FreeModule::new(degs.iter().map(|a| a + d).collect()),
                    self.inner.pres.target().clone(),
                    extra_cols,
                )?;
                let pres = self.inner.pres.concat(&extra)?;
                Ok(FPModule::from_map_unchecked(ring.clone(), pres, false))
            }
            QuotientTarget::ReducedRing => {
                let rbar = ring.with_relation(x)?;
                self.base_change(rbar)
            }
        }
    }

    /// The same presentation read over a quotient ring `R'` of the same
    /// polynomial ring, i.e. `M ⊗_R R'`.
    pub fn base_change(&self, ring: RingRef) -> Result<FPModule> {
        if ring.field() != self.inner.ring.field() || ring.names() != self.inner.ring.names() {
            return Err(Error::Ring(
                "base change needs the same polynomial ring".into(),
            ));
        }
        let pres = self.inner.pres.over_ring(ring.clone())?;
        Ok(FPModule::from_map_unchecked(ring, pres, false))
    }

    /// The module regarded over the ambient polynomial ring.
    pub fn as_ambient(&self) -> FPModule {
        let s = self.inner.ring.ambient();
        if self.inner.ring.is_polynomial_ring() {
            return FPModule::from_map_unchecked(s, self.inner.pres.clone(), self.inner.minimal);
        }
        let rels = self.folded_relations();
        let vecs: Vec<ModVec> = rels.iter().map(|r| r.0.clone()).collect();
        let degs: Vec<i32> = rels.iter().map(|r| r.1).collect();
        let pres =
            ModuleMap::from_modvecs(s.clone(), self.inner.pres.target().clone(), &vecs, degs);
        FPModule::from_map_unchecked(s, pres, false)
    }

    /// `(0 :_M x)`, the kernel of multiplication by `x` on `M`.
    pub fn colon_kernel(&self, x: &Poly) -> Result<FPModule> {
        let (gens, rels) = self.colon_parts(x)?;
        Ok(subquotient(
            &self.inner.ring,
            self.generator_degrees(),
            &gens,
            &rels,
        ))
    }

    fn colon_parts(&self, x: &Poly) -> Result<(Graded, Graded)> {
        let ring = &self.inner.ring;
        if x.field() != ring.field() || x.nvars() != ring.nvars() {
            return Err(Error::Ring("element from another ring".into()));
        }
        let Some(d) = x.homogeneous_degree() else {
            // zero kills everything
            let gens = (0..self.num_generators())
                .map(|j| (ModVec::unit(ring.nvars(), j), self.generator_degrees()[j]))
                .collect();
            return Ok((gens, self.relation_vectors()));
        };
        let degs = self.generator_degrees();
        let phi: Vec<ModVec> = (0..degs.len())
            .map(|j| {
                ModVec::from_polys(std::slice::from_ref(x)).remap_positions(|_| Some(j as u32), ring.field())
            })
            .collect();
        let rels = self.relation_vectors();
        let target: Vec<i32> = degs.to_vec();
        let kgens = kernel_generators(ring, degs, &phi, &target, &rels);
        let _ = d;
        Ok((kgens, rels))
    }

    /// Is multiplication by `x` injective on this module?
    pub fn is_regular(&self, x: &Poly) -> Result<bool> {
        if self.num_generators() == 0 {
            return Ok(true);
        }
        let (gens, _) = self.colon_parts(x)?;
        Ok(gens.iter().all(|(g, _)| self.is_zero_element(g)))
    }

    /// Equivalent presentation with every entry in the maximal ideal and a
    /// minimal set of relations.
    pub fn minimal_presentation(&self) -> FPModule {
        if self.inner.minimal {
            return self.clone();
        }
        let ring = self.inner.ring.clone();
        let mut rows: Vec<i32> = self.generator_degrees().to_vec();
        let mut src: Vec<i32> = self.inner.pres.source().degrees().to_vec();
        let mut cols: Vec<Vec<Poly>> = self.inner.pres.columns().to_vec();
        let f = ring.field();
        while let Some((i, j)) = find_unit(&cols) {
            let pivot = cols[j][i].constant_term();
            let inv = f.inv(pivot).unwrap();
            let pcol = cols[j].clone();
            for (k, col) in cols.iter_mut().enumerate() {
                if k == j || col[i].is_zero() {
                    continue;
                }
                let factor = col[i].scale(inv);
                for (r, e) in col.iter_mut().enumerate() {
                    if !pcol[r].is_zero() {
                        *e = ring.reduce(&e.sub(&factor.mul(&pcol[r])));
                    }
                }
            }
            cols.remove(j);
            src.remove(j);
            for col in cols.iter_mut() {
                col.remove(i);
            }
            rows.remove(i);
        }
        let target = FreeModule::new(rows);
        let cand: Vec<(ModVec, i32)> = cols
            .iter()
            .zip(&src)
            .map(|(c, &d)| (ModVec::from_polys(c), d))
            .filter(|(v, _)| !v.is_zero())
            .collect();
        let keep = minimal_subset(&ring, target.degrees(), &cand, &[]);
        let kv: Vec<ModVec> = keep.iter().map(|&k| cand[k].0.clone()).collect();
        let kd: Vec<i32> = keep.iter().map(|&k| cand[k].1).collect();
        let pres = ModuleMap::from_modvecs(ring.clone(), target, &kv, kd);
        FPModule::from_map_unchecked(ring, pres, true)
    }

    /// Free of finite rank: minimal presentation without relations.
    pub fn is_free(&self) -> bool {
        self.minimal_presentation().num_relations() == 0
    }
}

fn find_unit(cols: &[Vec<Poly>]) -> Option<(usize, usize)> {
    for (j, col) in cols.iter().enumerate() {
        for (i, e) in col.iter().enumerate() {
            if e.is_unit() {
                return Some((i, j));
            }
        }
    }
    None
}

/// True iff `x` is regular on every listed module.
pub fn is_regular_on(x: &Poly, modules: &[FPModule]) -> Result<bool> {
    for m in modules {
        if !m.is_regular(x)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s2() -> RingRef {
        Ring::polynomial(32003, &["x", "y"]).unwrap()
    }

    #[test]
    fn make_module_examples() {
        let s = s2();
        let free = FPModule::free(s.clone(), vec![0]);
        assert_eq!(free.hilbert_function(4), vec![1, 2, 3, 4, 5]);
        let k = FPModule::residue_field(s.clone());
        assert_eq!(k.hilbert_function(3), vec![1, 0, 0, 0]);
        let rx = FPModule::cyclic(s.clone(), &[s.var(0)]).unwrap();
        assert_eq!(rx.hilbert_function(3), vec![1, 1, 1, 1]);
        let bad = FPModule::cyclic(s.clone(), &[s.parse_poly("x + y^2").unwrap()]);
        assert!(matches!(bad, Err(Error::Grading(_))));
    }

    #[test]
    fn hilbert_of_artinian_quotient() {
        let s = Ring::polynomial(5, &["x", "y"]).unwrap();
        let m = FPModule::cyclic(
            s.clone(),
            &[
                s.parse_poly("x^2+y^2").unwrap(),
                s.parse_poly("x*y").unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(m.hilbert_function(5), vec![1, 2, 1, 0, 0, 0]);
    }

    #[test]
    fn tensor_examples() {
        let s = s2();
        let a = FPModule::cyclic(s.clone(), &[s.var(0)]).unwrap();
        let b = FPModule::cyclic(s.clone(), &[s.var(1)]).unwrap();
        let t = a.tensor_product(&b).unwrap();
        assert_eq!(t.hilbert_function(4), vec![1, 0, 0, 0, 0]);
        let r = FPModule::free(s.clone(), vec![0]);
        assert_eq!(
            a.tensor_product(&r).unwrap().hilbert_function(6),
            a.hilbert_function(6)
        );
        let f2 = FPModule::free(s.clone(), vec![0, 1]);
        let f3 = FPModule::free(s.clone(), vec![0, 0, 2]);
        let t = f2.tensor_product(&f3).unwrap();
        assert_eq!(t.num_generators(), 6);
        assert!(t.is_free());
        let other = Ring::polynomial(32003, &["x", "y", "z"]).unwrap();
        let c = FPModule::free(other, vec![0]);
        assert!(matches!(a.tensor_product(&c), Err(Error::Ring(_))));
    }

    #[test]
    fn quotient_examples() {
        let s = s2();
        let (x, y) = (s.var(0), s.var(1));
        let r = FPModule::free(s.clone(), vec![0]);
        let q = r
            .quotient_mod_element(&x, QuotientTarget::SameRing)
            .unwrap();
        assert_eq!(q.hilbert_function(4), vec![1, 1, 1, 1, 1]);
        let qb = r
            .quotient_mod_element(&x, QuotientTarget::ReducedRing)
            .unwrap();
        assert!(qb.is_free());
        assert_eq!(qb.hilbert_function(4), vec![1, 1, 1, 1, 1]);
        let k = FPModule::residue_field(s.clone());
        let kq = k
            .quotient_mod_element(&y, QuotientTarget::SameRing)
            .unwrap();
        assert_eq!(kq.hilbert_function(3), vec![1, 0, 0, 0]);
        let m = FPModule::cyclic(s.clone(), &[s.parse_poly("x^2").unwrap()]).unwrap();
        let mb = m
            .quotient_mod_element(&y, QuotientTarget::ReducedRing)
            .unwrap();
        assert_eq!(mb.hilbert_function(4), vec![1, 1, 0, 0, 0]);
        assert!(matches!(
            r.quotient_mod_element(&s.one(), QuotientTarget::SameRing),
            Err(Error::Input(_))
        ));
        assert!(matches!(
            r.quotient_mod_element(&s.zero(), QuotientTarget::SameRing),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn colon_examples() {
        let s = s2();
        let x = s.var(0);
        let free = FPModule::free(s.clone(), vec![0, 1]);
        assert!(free.colon_kernel(&x).unwrap().is_zero());
        let k = FPModule::residue_field(s.clone());
        let c = k.colon_kernel(&x).unwrap();
        assert_eq!(c.hilbert_function(3), vec![1, 0, 0, 0]);
        let r = Ring::quotient(32003, &["x", "y"], &["x*y"]).unwrap();
        let m = FPModule::cyclic(r.clone(), &[r.var(0)]).unwrap();
        let c = m.colon_kernel(&r.var(0)).unwrap();
        assert_eq!(c.hilbert_function(6), m.hilbert_function(6));
    }

    #[test]
    fn regularity_examples() {
        let s = s2();
        let (x, y) = (s.var(0), s.var(1));
        assert!(is_regular_on(&x, &[FPModule::free(s.clone(), vec![0])]).unwrap());
        assert!(!is_regular_on(&x, &[FPModule::residue_field(s.clone())]).unwrap());
        let sx = FPModule::cyclic(s.clone(), std::slice::from_ref(&x)).unwrap();
        assert!(is_regular_on(&y, std::slice::from_ref(&sx)).unwrap());
        assert!(!is_regular_on(&x, &[sx]).unwrap());
    }

    #[test]
    fn minimal_presentation_examples() {
        let s = s2();
        let (x, y) = (s.var(0), s.var(1));
        let k = FPModule::residue_field(s.clone());
        let km = k.minimal_presentation();
        assert_eq!(km.num_generators(), 1);
        assert_eq!(km.num_relations(), 2);
        // a unit pivot: generators e1, e2 with relation e2 - x e1, plus y e1
        let m = FPModule::from_relations(
            s.clone(),
            vec![0, 1],
            vec![vec![x.neg(), s.one()], vec![y.clone(), s.zero()]],
        )
        .unwrap();
        let mm = m.minimal_presentation();
        assert_eq!(mm.num_generators(), 1);
        assert!(mm.presentation().is_minimal());
        assert_eq!(mm.hilbert_function(6), m.hilbert_function(6));
        // R ⊕ k presented redundantly: extra generator killed by a unit
        let z = s.zero();
        let red = FPModule::from_relations(
            s.clone(),
            vec![0, 0, 0],
            vec![
                vec![z.clone(), x.clone(), z.clone()],
                vec![z.clone(), y.clone(), z.clone()],
                vec![z.clone(), z.clone(), s.one()],
                vec![z.clone(), x.mul(&y), z.clone()],
            ],
        )
        .unwrap();
        let rm = red.minimal_presentation();
        assert_eq!(rm.num_generators(), 2);
        assert_eq!(rm.num_relations(), 2);
        assert_eq!(rm.hilbert_function(6), red.hilbert_function(6));
    }

    #[test]
    fn zero_module_detection() {
        let s = s2();
        let z = FPModule::from_relations(s.clone(), vec![0], vec![vec![s.one()]]).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.minimal_presentation().num_generators(), 0);
        assert!(FPModule::zero(s.clone()).is_zero());
        assert!(!FPModule::residue_field(s).is_zero());
    }
}
