//! Tor, Ext, grade, depth and bounded homological verdicts.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::free::{FreeModule, ModuleMap};
use crate::groebner::ModVec;
use crate::module::{kernel_generators, minimal_subset, subquotient, FPModule};
use crate::resolution::{free_resolution, projective_dimension_ambient, syzygy, Over, Resolution};
use crate::ring::RingRef;

/// Outcome of a check that may be cut off by a truncation bound.
#[derive(Clone, Debug)]
pub enum Verdict {
    Holds,
    /// `index` is the homological index (or similar) of the first failure,
    /// `degree` the internal degree when the check is degreewise.
    Fails {
        index: usize,
        degree: Option<i32>,
        witness: Option<FPModule>,
    },
    InconclusiveUpToBound {
        bound: usize,
    },
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn fails(&self) -> bool {
        matches!(self, Verdict::Fails { .. })
    }

    pub fn is_inconclusive(&self) -> bool {
        matches!(self, Verdict::InconclusiveUpToBound { .. })
    }

    pub fn status(&self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Fails { .. } => "fails",
            Verdict::InconclusiveUpToBound { .. } => "inconclusive",
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Holds => write!(f, "holds"),
            Verdict::Fails {
                index,
                degree: Some(d),
                ..
            } => write!(f, "fails at index {index}, degree {d}"),
            Verdict::Fails { index, .. } => write!(f, "fails at index {index}"),
            Verdict::InconclusiveUpToBound { bound } => {
                write!(f, "inconclusive up to bound {bound}")
            }
        }
    }
}

/// Short description of a module for reports.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ModuleSummary {
    pub generator_degrees: Vec<i32>,
    pub relations: Vec<Vec<String>>,
}

impl ModuleSummary {
    pub fn of(m: &FPModule) -> Self {
        let m = m.minimal_presentation();
        ModuleSummary {
            generator_degrees: m.generator_degrees().to_vec(),
            relations: m.presentation().display_rows(),
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Verdict", 5)?;
        st.serialize_field("status", self.status())?;
        match self {
            Verdict::Holds => {}
            Verdict::Fails {
                index,
                degree,
                witness,
            } => {
                st.serialize_field("index", index)?;
                st.serialize_field("degree", degree)?;
                st.serialize_field("witness", &witness.as_ref().map(ModuleSummary::of))?;
            }
            Verdict::InconclusiveUpToBound { bound } => st.serialize_field("bound", bound)?,
        }
        st.end()
    }
}

/// An integer result, or the bound at which the search gave up.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Bounded {
    Value(usize),
    InconclusiveUpToBound(usize),
}

impl Bounded {
    pub fn value(self) -> Option<usize> {
        match self {
            Bounded::Value(v) => Some(v),
            Bounded::InconclusiveUpToBound(_) => None,
        }
    }
}

/// Default truncation bound for resolutions over `R`.
pub fn default_bound(ring: &RingRef) -> usize {
    2 * (ring.nvars() + 1)
}

fn with_degrees(map: &ModuleMap) -> Vec<(ModVec, i32)> {
    map.column_vectors()
        .into_iter()
        .zip(map.source().degrees().iter().copied())
        .filter(|(v, _)| !v.is_zero())
        .collect()
}

/// One spot `C_+ -> C -> C_-` of a complex of finitely presented modules,
/// everything written on free covers.
struct Spot<'a> {
    cover: &'a FreeModule,
    rels: Vec<(ModVec, i32)>,
    incoming: Vec<(ModVec, i32)>,
    outgoing: Vec<ModVec>,
    out_cover: &'a FreeModule,
    out_rels: Vec<(ModVec, i32)>,
}

impl Spot<'_> {
    fn cycles(&self, ring: &RingRef) -> Vec<(ModVec, i32)> {
        let degs = self.cover.degrees();
        if self.out_cover.rank() == 0 {
            return (0..degs.len())
                .map(|j| (ModVec::unit(ring.nvars(), j), degs[j]))
                .collect();
        }
        kernel_generators(
            ring,
            degs,
            &self.outgoing,
            self.out_cover.degrees(),
            &self.out_rels,
        )
    }

    fn boundaries(&self) -> Vec<(ModVec, i32)> {
        let mut b = self.incoming.clone();
        b.extend(self.rels.iter().cloned());
        b
    }

    fn homology(&self, ring: &RingRef) -> FPModule {
        if self.cover.rank() == 0 {
            return FPModule::zero(ring.clone());
        }
        subquotient(
            ring,
            self.cover.degrees(),
            &self.cycles(ring),
            &self.boundaries(),
        )
    }

    fn homology_vanishes(&self, ring: &RingRef) -> bool {
        if self.cover.rank() == 0 {
            return true;
        }
        minimal_subset(
            ring,
            self.cover.degrees(),
            &self.cycles(ring),
            &self.boundaries(),
        )
        .is_empty()
    }
}

fn check_same_ring(m: &FPModule, n: &FPModule) -> Result<()> {
    if m.ring().same_as(n.ring()) {
        Ok(())
    } else {
        Err(Error::Ring("modules over different rings".into()))
    }
}

/// `F_i ⊗ N` around index `i` of the resolution.
fn tor_spot<'a>(
    res: &Resolution,
    n: &FPModule,
    i: usize,
    covers: &'a [FreeModule; 2],
) -> Result<Spot<'a>> {
    let g0 = n.presentation().target();
    let b = n.presentation();
    let d_in = res.differential(i + 1)?.tensor_identity(g0);
    let d_out = res.differential(i)?.tensor_identity(g0);
    let fi = res.module(i)?;
    let rels = with_degrees(&b.identity_tensor(&fi));
    let out_rels = if i == 0 {
        vec![]
    } else {
        with_degrees(&b.identity_tensor(&res.module(i - 1)?))
    };
    Ok(Spot {
        cover: &covers[0],
        rels,
        incoming: with_degrees(&d_in),
        outgoing: d_out.column_vectors(),
        out_cover: &covers[1],
        out_rels,
    })
}

fn tor_covers(res: &Resolution, n: &FPModule, i: usize) -> Result<[FreeModule; 2]> {
    let g0 = n.presentation().target();
    let fi = res.module(i)?.tensor(g0);
    let fo = if i == 0 {
        FreeModule::default()
    } else {
        res.module(i - 1)?.tensor(g0)
    };
    Ok([fi, fo])
}

fn over_base(n: &FPModule, over: Over) -> FPModule {
    match over {
        Over::Ring => n.clone(),
        Over::Ambient => n.as_ambient(),
    }
}

/// Resolution of `m` long enough to compute index `i`.
fn res_for_index(m: &FPModule, i: usize, over: Over) -> Result<Resolution> {
    let res = free_resolution(m, i + 1, over);
    res.module(i + 1)?;
    Ok(res)
}

/// `Tor_i(M, N)` as the homology of `F ⊗ N`, over `R` or over `S`.
pub fn tor_over(m: &FPModule, n: &FPModule, i: usize, over: Over) -> Result<FPModule> {
    check_same_ring(m, n)?;
    let n = over_base(n, over);
    let res = res_for_index(m, i, over)?;
    let covers = tor_covers(&res, &n, i)?;
    Ok(tor_spot(&res, &n, i, &covers)?.homology(n.ring()))
}

/// `Tor_i^R(M, N)`.
pub fn tor(m: &FPModule, n: &FPModule, i: usize) -> Result<FPModule> {
    tor_over(m, n, i, Over::Ring)
}

/// Does `Tor_i(M, N)` vanish, using an already computed resolution of `M`?
pub(crate) fn tor_vanishes_with(res: &Resolution, n: &FPModule, i: usize) -> Result<bool> {
    let covers = tor_covers(res, n, i)?;
    Ok(tor_spot(res, n, i, &covers)?.homology_vanishes(n.ring()))
}

pub(crate) fn tor_with(res: &Resolution, n: &FPModule, i: usize) -> Result<FPModule> {
    let covers = tor_covers(res, n, i)?;
    Ok(tor_spot(res, n, i, &covers)?.homology(n.ring()))
}

fn hom_cover(f: &FreeModule, n: &FPModule) -> FreeModule {
    f.dual().tensor(n.presentation().target())
}

/// Pieces of `Hom(F, N)` around index `i`: `Hom(F_{i-1},N) -> Hom(F_i,N) -> Hom(F_{i+1},N)`.
fn ext_parts(
    res: &Resolution,
    n: &FPModule,
    i: usize,
) -> Result<([FreeModule; 2], ModuleMap, ModuleMap, ModuleMap, ModuleMap)> {
    let g0 = n.presentation().target();
    let b = n.presentation();
    let fi = res.module(i)?;
    let fo = res.module(i + 1)?;
    let d_out = res.differential(i + 1)?.dual().tensor_identity(g0);
    let d_in = if i == 0 {
        ModuleMap::zero(res.ring().clone(), FreeModule::default(), hom_cover(&fi, n))
    } else {
        res.differential(i)?.dual().tensor_identity(g0)
    };
    let rels = b.identity_tensor(&fi.dual());
    let out_rels = b.identity_tensor(&fo.dual());
    Ok((
        [hom_cover(&fi, n), hom_cover(&fo, n)],
        d_in,
        d_out,
        rels,
        out_rels,
    ))
}

fn ext_spot<'a>(
    covers: &'a [FreeModule; 2],
    d_in: &ModuleMap,
    d_out: &ModuleMap,
    rels: &ModuleMap,
    out_rels: &ModuleMap,
) -> Spot<'a> {
    Spot {
        cover: &covers[0],
        rels: with_degrees(rels),
        incoming: with_degrees(d_in),
        outgoing: d_out.column_vectors(),
        out_cover: &covers[1],
        out_rels: with_degrees(out_rels),
    }
}

/// `Ext^i(M, N)` as the cohomology of `Hom(F, N)`, over `R` or over `S`.
pub fn ext_over(m: &FPModule, n: &FPModule, i: usize, over: Over) -> Result<FPModule> {
    check_same_ring(m, n)?;
    let n = over_base(n, over);
    let res = res_for_index(m, i, over)?;
    ext_with(&res, &n, i)
}

/// `Ext^i_R(M, N)`.
pub fn ext(m: &FPModule, n: &FPModule, i: usize) -> Result<FPModule> {
    ext_over(m, n, i, Over::Ring)
}

pub(crate) fn ext_with(res: &Resolution, n: &FPModule, i: usize) -> Result<FPModule> {
    let (covers, d_in, d_out, rels, out_rels) = ext_parts(res, n, i)?;
    Ok(ext_spot(&covers, &d_in, &d_out, &rels, &out_rels).homology(n.ring()))
}

pub(crate) fn ext_vanishes_with(res: &Resolution, n: &FPModule, i: usize) -> Result<bool> {
    let (covers, d_in, d_out, rels, out_rels) = ext_parts(res, n, i)?;
    Ok(ext_spot(&covers, &d_in, &d_out, &rels, &out_rels).homology_vanishes(n.ring()))
}

/// Smallest `i` with `Ext^i_R(M, R) != 0`, searched up to `depth R`.
pub fn grade(m: &FPModule) -> Result<Bounded> {
    if m.is_zero() {
        return Err(Error::Input("grade of the zero module".into()));
    }
    let ring = m.ring().clone();
    let limit = ring_depth(&ring)?;
    let res = free_resolution(m, limit + 1, Over::Ring);
    let r = FPModule::free(ring, vec![0]);
    for i in 0..=limit {
        if res.module(i + 1).is_err() {
            return Ok(Bounded::InconclusiveUpToBound(i));
        }
        if !ext_vanishes_with(&res, &r, i)? {
            return Ok(Bounded::Value(i));
        }
    }
    Ok(Bounded::InconclusiveUpToBound(limit))
}

/// First `i` with `Ext^i_S(k, M) != 0` over the ambient polynomial ring.
pub fn depth_by_ext(m: &FPModule) -> Result<usize> {
    if m.is_zero() {
        return Err(Error::Input("depth of the zero module".into()));
    }
    let ms = m.as_ambient();
    let s = ms.ring().clone();
    let n = s.nvars();
    let k = FPModule::residue_field(s);
    let res = free_resolution(&k, n + 1, Over::Ambient);
    for i in 0..=n {
        if !ext_vanishes_with(&res, &ms, i)? {
            return Ok(i);
        }
    }
    Err(Error::Inconsistency(
        "Ext against the residue field vanishes in every degree".into(),
    ))
}

/// `n - pd_S(M)`.
pub fn depth_by_pd(m: &FPModule) -> Result<usize> {
    if m.is_zero() {
        return Err(Error::Input("depth of the zero module".into()));
    }
    let n = m.ring().nvars();
    let pd = projective_dimension_ambient(m);
    n.checked_sub(pd)
        .ok_or_else(|| Error::Inconsistency(format!("projective dimension {pd} exceeds {n}")))
}

/// Depth of a nonzero module, computed two independent ways which must agree.
pub fn depth(m: &FPModule) -> Result<usize> {
    m.depth_cache()
        .get_or_init(|| {
            let a = depth_by_pd(m)?;
            let b = depth_by_ext(m)?;
            if a != b {
                return Err(Error::Inconsistency(format!(
                    "depth via projective dimension is {a}, via Ext is {b}"
                )));
            }
            Ok(a)
        })
        .clone()
}

/// Depth of the ring itself.
pub fn ring_depth(ring: &RingRef) -> Result<usize> {
    depth(&FPModule::free(ring.clone(), vec![0]))
}

/// Is `R` Cohen–Macaulay (depth equals Krull dimension)?
pub fn is_cohen_macaulay(ring: &RingRef) -> Result<bool> {
    Ok(ring_depth(ring)? == ring.krull_dimension())
}

/// `Tor_i^R(M, N) = 0` for `1 <= i <= bound`, with `Holds` only when a
/// resolution of one of the modules terminates.
pub fn is_tor_independent(m: &FPModule, n: &FPModule, bound: usize) -> Result<Verdict> {
    check_same_ring(m, n)?;
    if m.is_zero() || n.is_zero() {
        return Ok(Verdict::Holds);
    }
    let res_m = free_resolution(m, bound + 1, Over::Ring);
    if res_m.is_complete() {
        return first_nonzero_tor(&res_m, n, res_m.length().min(bound), true);
    }
    let res_n = free_resolution(n, bound + 1, Over::Ring);
    if res_n.is_complete() {
        return first_nonzero_tor(&res_n, m, res_n.length().min(bound), true);
    }
    first_nonzero_tor(&res_m, n, bound, false)
}

fn first_nonzero_tor(
    res: &Resolution,
    other: &FPModule,
    upto: usize,
    finite: bool,
) -> Result<Verdict> {
    for i in 1..=upto {
        if !tor_vanishes_with(res, other, i)? {
            return Ok(Verdict::Fails {
                index: i,
                degree: None,
                witness: Some(tor_with(res, other, i)?),
            });
        }
    }
    Ok(if finite {
        Verdict::Holds
    } else {
        Verdict::InconclusiveUpToBound { bound: upto }
    })
}

/// Functionals generating `Hom(X, R)` inside `F_0^*`.
fn dual_functionals(x: &FPModule) -> Vec<(ModVec, i32)> {
    let ring = x.ring();
    let p = x.presentation();
    let f0 = p.target().dual();
    if p.ncols() == 0 {
        return (0..f0.rank())
            .map(|j| (ModVec::unit(ring.nvars(), j), f0.degrees()[j]))
            .collect();
    }
    let d = p.dual();
    kernel_generators(
        ring,
        f0.degrees(),
        &d.column_vectors(),
        d.target().degrees(),
        &[],
    )
}

/// Is the biduality map `X -> X**` injective, with matching Hilbert functions
/// up to `d_max`?
fn biduality_holds(x: &FPModule, xdual: &FPModule, d_max: u32) -> Result<bool> {
    let ring = x.ring();
    let phis = dual_functionals(x);
    let f0 = x.presentation().target();
    // K: F_0 -> ⊕ R(deg phi), row l is phi_l
    let target = FreeModule::new(phis.iter().map(|p| -p.1).collect());
    let mut cols: Vec<Vec<crate::poly::Poly>> = vec![vec![ring.zero(); target.rank()]; f0.rank()];
    for (l, (phi, _)) in phis.iter().enumerate() {
        for (j, e) in phi
            .to_polys(f0.rank(), ring.field(), ring.nvars())
            .into_iter()
            .enumerate()
        {
            cols[j][l] = e;
        }
    }
    let k = ModuleMap::new(ring.clone(), f0.clone(), target.clone(), cols)?;
    let injective = if target.rank() == 0 {
        x.is_zero()
    } else {
        kernel_generators(
            ring,
            f0.degrees(),
            &k.column_vectors(),
            target.degrees(),
            &[],
        )
        .iter()
        .all(|(v, _)| x.is_zero_element(v))
    };
    if !injective {
        return Ok(false);
    }
    let bidual = ext(xdual, &FPModule::free(ring.clone(), vec![0]), 0)?;
    let lo = x
        .generator_degrees()
        .iter()
        .chain(bidual.generator_degrees())
        .copied()
        .min()
        .unwrap_or(0);
    Ok(x.hilbert_range(lo, d_max as i32) == bidual.hilbert_range(lo, d_max as i32))
}

/// Bounded total reflexivity: two-sided Ext vanishing against `R` for
/// `1..=bound` plus biduality.
pub fn is_totally_reflexive(x: &FPModule, bound: usize, d_max: u32) -> Result<bool> {
    let ring = x.ring().clone();
    if x.is_zero() {
        return Ok(true);
    }
    let r = FPModule::free(ring.clone(), vec![0]);
    let res = free_resolution(x, bound + 1, Over::Ring);
    for i in 1..=bound.min(if res.is_complete() {
        res.length()
    } else {
        bound
    }) {
        if !ext_vanishes_with(&res, &r, i)? {
            return Ok(false);
        }
    }
    let xdual = ext_with(&res, &r, 0)?;
    if !xdual.is_zero() {
        let res_d = free_resolution(&xdual, bound + 1, Over::Ring);
        for i in 1..=bound.min(if res_d.is_complete() {
            res_d.length()
        } else {
            bound
        }) {
            if !ext_vanishes_with(&res_d, &r, i)? {
                return Ok(false);
            }
        }
    }
    biduality_holds(x, &xdual, d_max)
}

/// Smallest `g <= depth R` with `Omega_g(M)` totally reflexive up to `bound`.
pub fn gdim_estimate(m: &FPModule, bound: usize) -> Result<Bounded> {
    gdim_estimate_with(m, bound, 12)
}

pub fn gdim_estimate_with(m: &FPModule, bound: usize, d_max: u32) -> Result<Bounded> {
    if m.is_zero() {
        return Err(Error::Input("G-dimension of the zero module".into()));
    }
    let dr = ring_depth(m.ring())?;
    for g in 0..=dr {
        let omega = syzygy(m, g)?;
        if is_totally_reflexive(&omega, bound, d_max)? {
            return Ok(Bounded::Value(g));
        }
    }
    Ok(Bounded::InconclusiveUpToBound(bound))
}
