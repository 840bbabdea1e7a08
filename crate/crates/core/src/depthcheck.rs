//! The depth formula and the reduction steps used to prove it: defects,
//! regular elements, reduction modulo a regular element, syzygy descent, and
//! the exact sequences coming from the change-of-rings spectral sequence.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::homology::{depth, is_tor_independent, ring_depth, tor, Verdict};
use crate::module::{FPModule, QuotientTarget};
use crate::poly::Poly;
use crate::resolution::{syzygy, syzygy_ambient};
use crate::ring::{random_form, RingRef};

/// Knobs shared by the checks.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct CheckOptions {
    /// Truncation bound for Tor over non-regular rings.
    pub bound: usize,
    /// Hilbert function cutoff for degreewise comparisons.
    pub d_max: u32,
    pub seed: u64,
    /// Highest degree tried by the regular element search.
    pub max_degree: u32,
    /// Samples per degree in the regular element search.
    pub trials: usize,
}

impl CheckOptions {
    pub fn for_ring(ring: &RingRef) -> Self {
        CheckOptions {
            bound: 2 * (ring.nvars() + 1),
            d_max: 12,
            seed: 0,
            max_degree: 3,
            trials: 16,
        }
    }
}

/// Depths entering the depth formula and the Tor verdict.
#[derive(Clone, Debug, Serialize)]
pub struct DefectRecord {
    pub depth_m: usize,
    pub depth_n: usize,
    pub depth_r: usize,
    pub depth_tensor: usize,
    /// `depth M + depth N - depth R - depth(M ⊗ N)`.
    pub defect: i64,
    pub tor_verdict: Verdict,
    /// False when Tor-independence fails, so the formula does not apply.
    pub applicable: bool,
}

pub fn depth_formula_defect(m: &FPModule, n: &FPModule, bound: usize) -> Result<DefectRecord> {
    if m.is_zero() || n.is_zero() {
        return Err(Error::Input("depth formula needs nonzero modules".into()));
    }
    let tor_verdict = is_tor_independent(m, n, bound)?;
    let depth_m = depth(m)?;
    let depth_n = depth(n)?;
    let depth_r = ring_depth(m.ring())?;
    let depth_tensor = depth(&m.tensor_product(n)?)?;
    let defect = depth_m as i64 + depth_n as i64 - depth_r as i64 - depth_tensor as i64;
    Ok(DefectRecord {
        applicable: !tor_verdict.fails(),
        depth_m,
        depth_n,
        depth_r,
        depth_tensor,
        defect,
        tor_verdict,
    })
}

/// A homogeneous `x` in the maximal ideal regular on every listed module:
/// seeded random linear forms first, then forms of degree `2..=max_degree`.
pub fn find_regular_element(
    ms: &[FPModule],
    max_degree: u32,
    trials: usize,
    seed: u64,
) -> Result<Poly> {
    let Some(first) = ms.first() else {
        return Err(Error::Input("no modules to be regular on".into()));
    };
    let ring = first.ring().clone();
    for (i, m) in ms.iter().enumerate() {
        if !m.ring().same_as(&ring) {
            return Err(Error::Ring("modules over different rings".into()));
        }
        if m.is_zero() {
            return Err(Error::Input(format!("module {i} is zero")));
        }
        if depth(m)? == 0 {
            return Err(Error::DepthZeroWitness(format!("module {i} has depth 0")));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tried = 0;
    for d in 1..=max_degree.max(1) {
        for _ in 0..trials {
            let x = ring.reduce(&random_form(&ring, d, &mut rng));
            tried += 1;
            if x.is_zero() {
                continue;
            }
            let mut ok = true;
            for m in ms {
                if !m.is_regular(&x)? {
                    ok = false;
                    break;
                }
            }
            if ok {
                return Ok(x);
            }
        }
    }
    Err(Error::SearchExhausted { trials: tried })
}

/// Depths of `(M, N, M ⊗ N)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PairDepths {
    pub m: usize,
    pub n: usize,
    pub tensor: usize,
    pub ring: usize,
}

/// One certified passage `R -> R / xR`.
#[derive(Clone, Debug)]
pub struct ReductionStep {
    pub element: Poly,
    pub ring_before: RingRef,
    pub ring_after: RingRef,
    pub modules_before: Vec<(String, FPModule)>,
    pub modules_after: Vec<(String, FPModule)>,
    /// Names of the modules `x` was checked to be regular on.
    pub certified: Vec<String>,
    pub depths_before: PairDepths,
    pub depths_after: PairDepths,
    pub tor_after: Verdict,
}

impl ReductionStep {
    /// Depths dropped by one and reduced Tor-independence did not fail.
    pub fn postconditions_hold(&self) -> bool {
        let (b, a) = (self.depths_before, self.depths_after);
        a.m + 1 == b.m
            && a.n + 1 == b.n
            && a.tensor + 1 == b.tensor
            && a.ring + 1 == b.ring
            && !self.tor_after.fails()
    }
}

/// Serializable view of a reduction step.
#[derive(Clone, Debug, Serialize)]
pub struct StepSummary {
    pub element: String,
    pub ring_after_relations: Vec<String>,
    pub certified: Vec<String>,
    pub depths_before: PairDepths,
    pub depths_after: PairDepths,
    pub tor_after: Verdict,
    pub postconditions_hold: bool,
}

impl From<&ReductionStep> for StepSummary {
    fn from(s: &ReductionStep) -> Self {
        StepSummary {
            element: s.ring_before.display_poly(&s.element),
            ring_after_relations: s
                .ring_after
                .relations()
                .iter()
                .map(|r| s.ring_after.display_poly(r))
                .collect(),
            certified: s.certified.clone(),
            depths_before: s.depths_before,
            depths_after: s.depths_after,
            tor_after: s.tor_after.clone(),
            postconditions_hold: s.postconditions_hold(),
        }
    }
}

fn pair_depths(m: &FPModule, n: &FPModule) -> Result<PairDepths> {
    Ok(PairDepths {
        m: depth(m)?,
        n: depth(n)?,
        tensor: depth(&m.tensor_product(n)?)?,
        ring: ring_depth(m.ring())?,
    })
}

/// Goes modulo an element regular on `R, M, N, M ⊗ N` and re-verifies
/// depths and Tor-independence over `R / xR`.
pub fn reduce_pair(m: &FPModule, n: &FPModule, opts: &CheckOptions) -> Result<ReductionStep> {
    if m.is_zero() || n.is_zero() {
        return Err(Error::Input("reduction needs nonzero modules".into()));
    }
    let ring = m.ring().clone();
    let verdict = is_tor_independent(m, n, opts.bound)?;
    if verdict.fails() {
        return Err(Error::Precondition(format!(
            "modules are not Tor-independent: Tor {verdict}"
        )));
    }
    let before = pair_depths(m, n)?;
    for (name, d) in [
        ("R", before.ring),
        ("M", before.m),
        ("N", before.n),
        ("M ⊗ N", before.tensor),
    ] {
        if d == 0 {
            return Err(Error::Precondition(format!("depth of {name} is 0")));
        }
    }
    let r = FPModule::free(ring.clone(), vec![0]);
    let mn = m.tensor_product(n)?;
    let x = find_regular_element(
        &[r, m.clone(), n.clone(), mn],
        opts.max_degree,
        opts.trials,
        opts.seed,
    )?;
    let mbar = m.quotient_mod_element(&x, QuotientTarget::ReducedRing)?;
    let nbar = n.quotient_mod_element(&x, QuotientTarget::ReducedRing)?;
    let ring_after = mbar.ring().clone();
    let depths_after = pair_depths(&mbar, &nbar)?;
    let tor_after = is_tor_independent(&mbar, &nbar, opts.bound)?;
    Ok(ReductionStep {
        element: x,
        ring_before: ring,
        ring_after,
        modules_before: vec![("M".into(), m.clone()), ("N".into(), n.clone())],
        modules_after: vec![("M".into(), mbar), ("N".into(), nbar)],
        certified: vec!["R".into(), "M".into(), "N".into(), "M ⊗ N".into()],
        depths_before: before,
        depths_after,
        tor_after,
    })
}

/// Transcript of a syzygy descent.
#[derive(Clone, Debug)]
pub struct Descent {
    pub steps: Vec<ReductionStep>,
    /// `(depth of the ring, depth of Omega ⊗ N)` at every level, top first.
    pub levels: Vec<(usize, usize)>,
    /// Set when a step could not be completed; the steps so far are kept.
    pub error: Option<Error>,
}

impl Descent {
    /// Every level has `depth(Omega ⊗ N) = depth R` and every step verified.
    pub fn consistent(&self) -> bool {
        self.error.is_none()
            && self.levels.iter().all(|(d, t)| d == t)
            && self.steps.iter().all(|s| s.postconditions_hold())
    }
}

/// Replaces `M` by `Omega_{d-1}(M)` and reduces `d - 1` times down to a
/// ring of depth one, for a maximal Cohen–Macaulay Tor-independent pair.
pub fn descend_to_depth_one(m: &FPModule, n: &FPModule, opts: &CheckOptions) -> Result<Descent> {
    let ring = m.ring().clone();
    let d = ring_depth(&ring)?;
    if d <= 1 {
        return Ok(Descent {
            steps: vec![],
            levels: vec![],
            error: None,
        });
    }
    if ring.krull_dimension() != d {
        return Err(Error::Precondition("ring is not Cohen–Macaulay".into()));
    }
    if depth(m)? != d || depth(n)? != d {
        return Err(Error::Precondition(
            "modules are not maximal Cohen–Macaulay".into(),
        ));
    }
    if is_tor_independent(m, n, opts.bound)?.fails() {
        return Err(Error::Precondition(
            "modules are not Tor-independent".into(),
        ));
    }
    let omega = syzygy(m, d - 1)?;
    // a free M has no nonzero syzygies; it is its own stand-in
    let mut cur_m = if omega.is_zero() { m.clone() } else { omega };
    let mut cur_n = n.clone();
    let mut steps = Vec::new();
    let mut levels = Vec::new();
    for level in (2..=d).rev() {
        let t = depth(&cur_m.tensor_product(&cur_n)?)?;
        levels.push((level, t));
        let step_opts = CheckOptions {
            seed: opts.seed.wrapping_add(level as u64),
            ..*opts
        };
        match reduce_pair(&cur_m, &cur_n, &step_opts) {
            Ok(step) => {
                cur_m = step.modules_after[0].1.clone();
                cur_n = step.modules_after[1].1.clone();
                steps.push(step);
            }
            Err(e) => {
                return Ok(Descent {
                    steps,
                    levels,
                    error: Some(e),
                })
            }
        }
    }
    let t = depth(&cur_m.tensor_product(&cur_n)?)?;
    levels.push((1, t));
    Ok(Descent {
        steps,
        levels,
        error: None,
    })
}

/// Lowest generator degree of a nonzero module.
fn min_degree(m: &FPModule) -> Option<i32> {
    let mp = m.minimal_presentation();
    mp.generator_degrees().iter().copied().min()
}

/// Hilbert functions on `lo..=hi` of a list of modules.
fn hf_table(ms: &[FPModule], lo: i32, hi: i32) -> Vec<Vec<u64>> {
    ms.iter().map(|m| m.hilbert_range(lo, hi)).collect()
}

fn same_hf(a: &FPModule, b: &FPModule, lo: i32, hi: i32) -> bool {
    a.hilbert_range(lo, hi) == b.hilbert_range(lo, hi)
}

/// Terms of the long exact sequence attached to `x`.
struct LesTerms {
    lo: i32,
    /// `A_p = Tor_p^R(N, M̄)`, `B_p = Tor_p^{R̄}(N̄, M̄)`, `C_q = Tor_q^{R̄}(T, M̄)`
    /// with `T = Tor_1^R(N, R̄)`, for `p, q = 0..=p_max`.
    a: Vec<FPModule>,
    b: Vec<FPModule>,
    c: Vec<FPModule>,
    /// Degree from which `A_p, B_p` may be nonzero: `base + p`.
    base: Option<i32>,
    /// Degree from which `C_q` may be nonzero: `c_base + q`.
    c_base: Option<i32>,
    mbar_r: FPModule,
    nbar: FPModule,
    mbar: FPModule,
}

fn check_regular_on_ring(ring: &RingRef, x: &Poly) -> Result<()> {
    let r = FPModule::free(ring.clone(), vec![0]);
    if !r.is_regular(x)? {
        return Err(Error::Input("element is not regular on the ring".into()));
    }
    Ok(())
}

fn les_terms(n: &FPModule, m: &FPModule, x: &Poly, p_max: usize) -> Result<LesTerms> {
    let ring = m.ring().clone();
    check_regular_on_ring(&ring, x)?;
    let r = FPModule::free(ring.clone(), vec![0]);
    let rbar_r = r.quotient_mod_element(x, QuotientTarget::SameRing)?;
    let mbar_r = m.quotient_mod_element(x, QuotientTarget::SameRing)?;
    let mbar = m.quotient_mod_element(x, QuotientTarget::ReducedRing)?;
    let nbar = n.quotient_mod_element(x, QuotientTarget::ReducedRing)?;
    let rbar = mbar.ring().clone();
    let t = tor(n, &rbar_r, 1)?.base_change(rbar)?;
    let a = (0..=p_max)
        .map(|p| tor(n, &mbar_r, p))
        .collect::<Result<Vec<_>>>()?;
    let b = (0..=p_max)
        .map(|p| tor(&nbar, &mbar, p))
        .collect::<Result<Vec<_>>>()?;
    let c = if t.is_zero() {
        vec![FPModule::zero(mbar.ring().clone()); p_max + 1]
    } else {
        (0..=p_max)
            .map(|q| tor(&t, &mbar, q))
            .collect::<Result<Vec<_>>>()?
    };
    let base = match (min_degree(n), min_degree(&mbar)) {
        (Some(a), Some(b)) => Some(a + b),
        _ => None,
    };
    let c_base = match (min_degree(&t), min_degree(&mbar)) {
        (Some(a), Some(b)) => Some(a + b),
        _ => None,
    };
    let lo = [base, c_base].into_iter().flatten().min().unwrap_or(0);
    Ok(LesTerms {
        lo,
        a,
        b,
        c,
        base,
        c_base,
        mbar_r,
        nbar,
        mbar,
    })
}

/// Degreewise rank bookkeeping along an exact sequence `X_top -> ... -> X_1 -> 0`.
/// `tail_vanishes` says whether every term beyond `X_top` is zero in this degree.
/// Returns the position of the first violated constraint.
fn exact_sequence_violation(dims: &[u64], tail_vanishes: bool) -> Option<usize> {
    // rank of X_{i+1} -> X_i
    let mut prev: i64 = 0;
    for i in 0..dims.len() {
        let rank = dims[i] as i64 - prev;
        if rank < 0 {
            return Some(i);
        }
        let next = dims.get(i + 1).copied();
        match next {
            Some(nd) if rank > nd as i64 => return Some(i + 1),
            None if tail_vanishes && rank != 0 => return Some(i),
            _ => {}
        }
        prev = rank;
    }
    None
}

/// The long exact sequence
/// `... -> A_{p+1} -> B_{p+1} -> C_{p-1} -> A_p -> B_p -> ... -> C_0 -> A_1 -> B_1 -> 0`
/// (plus `A_0 ≅ B_0`) checked degreewise for `p <= p_max`, `t <= d_max`; when
/// `x` is also regular on `N`, the isomorphisms `B_p ≅ Tor_p^R(M̄, N)`.
pub fn les_check_spect(
    n: &FPModule,
    m: &FPModule,
    x: &Poly,
    p_max: usize,
    d_max: u32,
) -> Result<Verdict> {
    if m.is_zero() || n.is_zero() {
        return Err(Error::Input("modules must be nonzero".into()));
    }
    if !m.ring().same_as(n.ring()) {
        return Err(Error::Ring("modules over different rings".into()));
    }
    let p_max = p_max.max(1);
    let terms = les_terms(n, m, x, p_max)?;
    let hi = d_max as i32;
    let lo = terms.lo.min(hi);
    if !same_hf(&terms.a[0], &terms.b[0], lo, hi) {
        return Ok(Verdict::Fails {
            index: 0,
            degree: None,
            witness: None,
        });
    }
    // X_1 = B_1, X_2 = A_1, X_3 = C_0, X_4 = B_2, ...
    let mut seq: Vec<(&FPModule, usize)> = Vec::new();
    for p in 1..=p_max {
        seq.push((&terms.b[p], p));
        seq.push((&terms.a[p], p));
        seq.push((&terms.c[p - 1], p));
    }
    let mods: Vec<FPModule> = seq.iter().map(|s| s.0.clone()).collect();
    let table = hf_table(&mods, lo, hi);
    for (k, t) in (lo..=hi).enumerate() {
        let dims: Vec<u64> = table.iter().map(|row| row[k]).collect();
        // beyond the window: B_{p_max+1}, A_{p_max+1} from base + p_max + 1, C_{p_max} from c_base + p_max
        let beyond_b = terms.base.is_none_or(|b| t < b + p_max as i32 + 1);
        let beyond_c = terms.c_base.is_none_or(|c| t < c + p_max as i32);
        if let Some(pos) = exact_sequence_violation(&dims, beyond_b && beyond_c) {
            return Ok(Verdict::Fails {
                index: seq[pos.min(seq.len() - 1)].1,
                degree: Some(t),
                witness: None,
            });
        }
    }
    if n.is_regular(x)? {
        for p in 1..=p_max {
            let rhs = tor(&terms.mbar_r, n, p)?;
            if !same_hf(&terms.b[p], &rhs, lo, hi) {
                return Ok(Verdict::Fails {
                    index: p,
                    degree: None,
                    witness: Some(terms.b[p].clone()),
                });
            }
        }
    }
    Ok(Verdict::Holds)
}

/// The corollary's four-term sequence
/// `0 -> B_2 -> T ⊗ M̄ -> A_1 -> B_1 -> 0`, the vanishing `A_p = 0` for
/// `p >= 2`, and `B_p ≅ C_{p-2}` for `3 <= p <= p_max`; if `x` is regular on
/// `N` too, `B_p = 0` for `p >= 2` and `B_1 ≅ Tor_1^R(M̄, N)`.
pub fn cor_spect_check(
    n: &FPModule,
    m: &FPModule,
    x: &Poly,
    p_max: usize,
    d_max: u32,
    bound: usize,
) -> Result<Verdict> {
    if m.is_zero() || n.is_zero() {
        return Err(Error::Input("modules must be nonzero".into()));
    }
    if is_tor_independent(m, n, bound)?.fails() {
        return Err(Error::Input("modules are not Tor-independent".into()));
    }
    if !m.is_regular(x)? {
        return Err(Error::Input("element is not regular on M".into()));
    }
    let p_max = p_max.max(2);
    let terms = les_terms(n, m, x, p_max)?;
    let hi = d_max as i32;
    let lo = terms.lo.min(hi);
    let four = [&terms.b[2], &terms.c[0], &terms.a[1], &terms.b[1]];
    let mods: Vec<FPModule> = four.iter().map(|m| (*m).clone()).collect();
    let table = hf_table(&mods, lo, hi);
    for (k, t) in (lo..=hi).enumerate() {
        // written right to left: B_1, A_1, C_0, B_2, then 0
        let dims = [table[3][k], table[2][k], table[1][k], table[0][k]];
        if let Some(pos) = exact_sequence_violation(&dims, true) {
            return Ok(Verdict::Fails {
                index: [1, 1, 2, 2][pos.min(3)],
                degree: Some(t),
                witness: None,
            });
        }
    }
    for p in 2..=p_max {
        if !terms.a[p].is_zero() {
            return Ok(Verdict::Fails {
                index: p,
                degree: None,
                witness: Some(terms.a[p].clone()),
            });
        }
    }
    for p in 3..=p_max {
        if !same_hf(&terms.b[p], &terms.c[p - 2], lo, hi) {
            return Ok(Verdict::Fails {
                index: p,
                degree: None,
                witness: Some(terms.b[p].clone()),
            });
        }
    }
    if n.is_regular(x)? {
        for p in 2..=p_max {
            let bp = tor(&terms.mbar, &terms.nbar, p)?;
            if !bp.is_zero() {
                return Ok(Verdict::Fails {
                    index: p,
                    degree: None,
                    witness: Some(bp),
                });
            }
        }
        let b1 = tor(&terms.mbar, &terms.nbar, 1)?;
        let rhs = tor(&terms.mbar_r, n, 1)?;
        if !same_hf(&b1, &rhs, lo, hi) {
            return Ok(Verdict::Fails {
                index: 1,
                degree: None,
                witness: Some(b1),
            });
        }
    }
    Ok(Verdict::Holds)
}

/// With `depth M > 0` and `Tor_1(M, N) = 0`: `depth(M ⊗ N) > 0` iff some
/// `M`-regular `x` has `Tor_1(M/xM, N) = 0`.
pub fn lemma_depth_check(m: &FPModule, n: &FPModule, opts: &CheckOptions) -> Result<Verdict> {
    if depth(m)? == 0 {
        return Err(Error::Precondition("depth of M is 0".into()));
    }
    if !tor(m, n, 1)?.is_zero() {
        return Err(Error::Precondition("Tor_1(M, N) is nonzero".into()));
    }
    let mn = m.tensor_product(n)?;
    let positive = depth(&mn)? > 0;
    let witnesses = if positive {
        vec![m.clone(), mn]
    } else {
        vec![m.clone()]
    };
    let x = find_regular_element(&witnesses, opts.max_degree, opts.trials, opts.seed)?;
    let mbar = m.quotient_mod_element(&x, QuotientTarget::SameRing)?;
    let vanishes = tor(&mbar, n, 1)?.is_zero();
    Ok(if vanishes == positive {
        Verdict::Holds
    } else {
        Verdict::Fails {
            index: 1,
            degree: None,
            witness: None,
        }
    })
}

/// With `Tor_1(M, N) = 0`: `depth M <= depth(M ⊗ N)` or
/// `depth(M ⊗ Omega_1 N) = depth(M ⊗ N) + 1`.
pub fn gdim_inequality_check(m: &FPModule, n: &FPModule) -> Result<Verdict> {
    if !tor(m, n, 1)?.is_zero() {
        return Err(Error::Precondition("Tor_1(M, N) is nonzero".into()));
    }
    let dm = depth(m)?;
    let dt = depth(&m.tensor_product(n)?)?;
    if dm <= dt {
        return Ok(Verdict::Holds);
    }
    let omega = syzygy(n, 1)?;
    let mo = m.tensor_product(&omega)?;
    if !mo.is_zero() && depth(&mo)? == dt + 1 {
        Ok(Verdict::Holds)
    } else {
        Ok(Verdict::Fails {
            index: 1,
            degree: None,
            witness: None,
        })
    }
}

/// `depth R + depth(M ⊗ N) >= depth M + depth N`.
pub fn main_inequality_check(
    m: &FPModule,
    n: &FPModule,
    bound: usize,
) -> Result<(Verdict, DefectRecord)> {
    let rec = depth_formula_defect(m, n, bound)?;
    if !rec.tor_verdict.holds() {
        return Err(Error::Precondition(format!(
            "Tor verdict is {}",
            rec.tor_verdict
        )));
    }
    let v = if rec.defect <= 0 {
        Verdict::Holds
    } else {
        Verdict::Fails {
            index: 0,
            degree: None,
            witness: None,
        }
    };
    Ok((v, rec))
}

/// For Tor-independent `(M, N)` with `depth R > max(depth M, depth N)`:
/// `X = Omega_1(M)/x`, `Y = Omega_1(N)/x` are Tor-independent over `R/xR`
/// with `depth X = depth M`, `depth Y = depth N`.
pub fn corollary_depth_reduct_check(
    m: &FPModule,
    n: &FPModule,
    opts: &CheckOptions,
) -> Result<Verdict> {
    let ring = m.ring().clone();
    let dr = ring_depth(&ring)?;
    let (dm, dn) = (depth(m)?, depth(n)?);
    if dr <= dm.max(dn) {
        return Err(Error::Precondition(
            "depth R does not exceed both depths".into(),
        ));
    }
    if !is_tor_independent(m, n, opts.bound)?.holds() {
        return Err(Error::Precondition("Tor-independence not certified".into()));
    }
    let om = syzygy(m, 1)?;
    let on = syzygy(n, 1)?;
    let r = FPModule::free(ring, vec![0]);
    let x = find_regular_element(
        &[r, om.clone(), on.clone(), om.tensor_product(&on)?],
        opts.max_degree,
        opts.trials,
        opts.seed,
    )?;
    let xm = om.quotient_mod_element(&x, QuotientTarget::ReducedRing)?;
    let ym = on.quotient_mod_element(&x, QuotientTarget::ReducedRing)?;
    if depth(&xm)? != dm {
        return Ok(Verdict::Fails {
            index: 0,
            degree: None,
            witness: Some(xm),
        });
    }
    if depth(&ym)? != dn {
        return Ok(Verdict::Fails {
            index: 0,
            degree: None,
            witness: Some(ym),
        });
    }
    Ok(match is_tor_independent(&xm, &ym, opts.bound)? {
        Verdict::Fails {
            index,
            degree,
            witness,
        } => Verdict::Fails {
            index,
            degree,
            witness,
        },
        _ => Verdict::Holds,
    })
}

/// Over the ambient ring: `depth Omega_1(M) = depth M + 1` when `depth M < n`.
pub fn syzygy_depth_check(m: &FPModule) -> Result<Verdict> {
    let n = m.ring().nvars();
    let dm = depth(m)?;
    if dm >= n {
        return Err(Error::Precondition(
            "module is free over the ambient ring".into(),
        ));
    }
    let omega = syzygy_ambient(m, 1)?;
    Ok(if depth(&omega)? == dm + 1 {
        Verdict::Holds
    } else {
        Verdict::Fails {
            index: 1,
            degree: None,
            witness: Some(omega),
        }
    })
}
