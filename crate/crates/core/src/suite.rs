//! Random instance families, the fixed worked examples, and the harness that
//! runs every check over them.

use std::collections::BTreeMap;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::depthcheck::{
    cor_spect_check, corollary_depth_reduct_check, depth_formula_defect, descend_to_depth_one,
    find_regular_element, gdim_inequality_check, lemma_depth_check, les_check_spect,
    main_inequality_check, reduce_pair, syzygy_depth_check, CheckOptions,
};
use crate::error::{Error, Result};
use crate::homology::{
    depth, depth_by_ext, depth_by_pd, gdim_estimate_with, is_tor_independent, ring_depth, tor,
    tor_over, Bounded, Verdict,
};
use crate::instance::{module_block, ring_block};
use crate::module::{FPModule, QuotientTarget};
use crate::poly::Poly;
use crate::resolution::{projective_dimension_ambient, syzygy, syzygy_ambient, Over};
use crate::ring::{random_form, Ring, RingRef};

/// Shape of the random presentations in a family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModuleRecipe {
    pub gens: usize,
    pub rels: usize,
    pub max_deg: u32,
    /// Replace the random module by its `k`-th syzygy, to reach positive depth.
    pub syzygy: usize,
}

/// How the second module of a pair is produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PairMode {
    /// `N = R / (f_1..f_c)` with `f` a regular sequence on `R` and `M`;
    /// such pairs are Tor-independent.
    RegularSequence,
    /// `N` drawn from the same recipe as `M`.
    Random,
}

impl PairMode {
    pub fn name(self) -> &'static str {
        match self {
            PairMode::RegularSequence => "regular_sequence",
            PairMode::Random => "random",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "regular_sequence" => Some(PairMode::RegularSequence),
            "random" => Some(PairMode::Random),
            _ => None,
        }
    }
}

/// A seeded family of pairs over complete intersection rings
/// `F_p[x_1..x_n] / (q_1..q_c)` with random forms `q_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InstanceFamily {
    pub name: String,
    pub characteristic: u32,
    pub nvars: usize,
    pub relations: usize,
    pub relation_degree: u32,
    pub module: ModuleRecipe,
    pub pair: PairMode,
    pub count: usize,
    pub seed: u64,
}

impl InstanceFamily {
    pub fn new(
        name: &str,
        nvars: usize,
        relations: usize,
        pair: PairMode,
        count: usize,
        seed: u64,
    ) -> Self {
        InstanceFamily {
            name: name.to_string(),
            characteristic: 32003,
            nvars,
            relations,
            relation_degree: 2,
            module: ModuleRecipe {
                gens: 2,
                rels: 2,
                max_deg: 2,
                syzygy: 0,
            },
            pair,
            count,
            seed,
        }
    }

    pub fn with_module(mut self, module: ModuleRecipe) -> Self {
        self.module = module;
        self
    }
}

/// Regular rings in 2 and 3 variables, quadric hypersurfaces, and
/// codimension-two complete intersections in 3 and 4 variables.
pub fn default_families() -> Vec<InstanceFamily> {
    let recipe = |gens, rels, syzygy| ModuleRecipe {
        gens,
        rels,
        max_deg: 2,
        syzygy,
    };
    vec![
        InstanceFamily::new("regular2_seq", 2, 0, PairMode::RegularSequence, 25, 1)
            .with_module(recipe(1, 2, 1)),
        InstanceFamily::new("regular3_seq", 3, 0, PairMode::RegularSequence, 25, 2)
            .with_module(recipe(2, 2, 1)),
        InstanceFamily::new("regular2_random", 2, 0, PairMode::Random, 25, 3)
            .with_module(recipe(2, 3, 0)),
        InstanceFamily::new("regular3_random", 3, 0, PairMode::Random, 25, 4)
            .with_module(recipe(3, 2, 0)),
        InstanceFamily::new("hypersurface3_seq", 3, 1, PairMode::RegularSequence, 25, 5)
            .with_module(recipe(1, 2, 2)),
        InstanceFamily::new("hypersurface3_random", 3, 1, PairMode::Random, 25, 6)
            .with_module(recipe(2, 2, 0)),
        InstanceFamily::new("ci3_seq", 3, 2, PairMode::RegularSequence, 25, 7)
            .with_module(recipe(1, 2, 1)),
        InstanceFamily::new("ci4_seq", 4, 2, PairMode::RegularSequence, 25, 8)
            .with_module(recipe(1, 2, 2)),
    ]
}

fn instance_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

/// Random homogeneous presentation with `gens` generators and `rels`
/// relations whose entries have degree between 1 and `max_deg`, minimalized.
pub fn gen_random_module(
    ring: &RingRef,
    gens: usize,
    rels: usize,
    max_deg: u32,
    seed: u64,
) -> Result<FPModule> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_module(ring, gens, rels, max_deg, &mut rng)
}

fn random_module(
    ring: &RingRef,
    gens: usize,
    rels: usize,
    max_deg: u32,
    rng: &mut ChaCha8Rng,
) -> Result<FPModule> {
    if gens == 0 {
        return Err(Error::Input("a module needs at least one generator".into()));
    }
    let max_deg = max_deg.max(1);
    let spread = if max_deg >= 2 { 1 } else { 0 };
    for _ in 0..32 {
        let twists: Vec<i32> = (0..gens).map(|_| rng.gen_range(0..=spread)).collect();
        let (lo, hi) = (*twists.iter().min().unwrap(), *twists.iter().max().unwrap());
        let mut cols = Vec::with_capacity(rels);
        for _ in 0..rels {
            let c = rng.gen_range(hi + 1..=lo + max_deg as i32);
            let col: Vec<Poly> = twists
                .iter()
                .map(|&t| {
                    if rng.gen_bool(0.25) {
                        ring.zero()
                    } else {
                        random_form(ring, (c - t) as u32, rng)
                    }
                })
                .collect();
            cols.push(col);
        }
        let m = FPModule::from_relations(ring.clone(), twists, cols)?.minimal_presentation();
        if !m.is_zero() {
            return Ok(m);
        }
    }
    Err(Error::Generation(
        "every attempt gave the zero module".into(),
    ))
}

fn random_ring(fam: &InstanceFamily, rng: &mut ChaCha8Rng) -> Result<RingRef> {
    let names: Vec<String> = (0..fam.nvars).map(var_name).collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let s = Ring::polynomial(fam.characteristic, &refs)?;
    if fam.relations == 0 {
        return Ok(s);
    }
    for _ in 0..32 {
        let rels: Vec<Poly> = (0..fam.relations)
            .map(|_| random_form(&s, fam.relation_degree.max(1), rng))
            .collect();
        let r = Ring::from_parts(s.field(), names.clone(), rels)?;
        if fam.relations <= fam.nvars && r.krull_dimension() == fam.nvars - fam.relations {
            return Ok(std::sync::Arc::new(r));
        }
    }
    Err(Error::Generation("no complete intersection found".into()))
}

fn var_name(i: usize) -> String {
    const NAMES: [&str; 8] = ["x", "y", "z", "w", "u", "v", "s", "t"];
    NAMES[i].to_string()
}

/// A generated or fixed pair `(M, N)` over a ring.
#[derive(Clone, Debug)]
pub struct Instance {
    pub family: String,
    pub index: usize,
    pub ring: RingRef,
    pub m: FPModule,
    pub n: FPModule,
}

impl Instance {
    /// Instance file text reproducing this pair.
    pub fn to_text(&self) -> String {
        let mut s = ring_block(&self.ring);
        s.push_str(&module_block("M", &self.m));
        s.push_str(&module_block("N", &self.n));
        s.push_str("pair M N\n");
        s
    }
}

/// The `index`-th pair of a family; deterministic in `(seed, index)`.
pub fn generate_instance(fam: &InstanceFamily, index: usize) -> Result<Instance> {
    let mut rng = instance_rng(fam.seed, index);
    let ring = random_ring(fam, &mut rng)?;
    let r = &fam.module;
    let mut m = random_module(&ring, r.gens, r.rels, r.max_deg, &mut rng)?;
    if r.syzygy > 0 {
        let om = syzygy(&m, r.syzygy)?;
        if !om.is_zero() {
            m = om;
        }
    }
    let n = match fam.pair {
        PairMode::Random => {
            let mut n = random_module(&ring, r.gens, r.rels, r.max_deg, &mut rng)?;
            if r.syzygy > 0 {
                let on = syzygy(&n, r.syzygy)?;
                if !on.is_zero() {
                    n = on;
                }
            }
            n
        }
        PairMode::RegularSequence => {
            let reach = depth(&m)?.min(ring_depth(&ring)?);
            // c < depth M keeps depth(M ⊗ N) = depth M - c positive
            let c = if reach == 0 {
                0
            } else {
                rng.gen_range(0..reach)
            };
            let mut seq: Vec<Poly> = Vec::new();
            let mut rbar = FPModule::free(ring.clone(), vec![0]);
            let mut mbar = m.clone();
            for _ in 0..c {
                let f = find_regular_element(&[rbar.clone(), mbar.clone()], 2, 16, rng.gen())?;
                rbar = rbar.quotient_mod_element(&f, QuotientTarget::SameRing)?;
                mbar = mbar.quotient_mod_element(&f, QuotientTarget::SameRing)?;
                seq.push(f);
            }
            FPModule::cyclic(ring.clone(), &seq)?
        }
    };
    Ok(Instance {
        family: fam.name.clone(),
        index,
        ring,
        m,
        n,
    })
}

/// Expected invariants of a worked example.
#[derive(Clone, Debug, Serialize)]
pub struct Expected {
    /// Depths of `M`, `N`, `R`, `M ⊗ N`.
    pub depths: (usize, usize, usize, usize),
    /// Status of the Tor-independence verdict.
    pub tor_status: &'static str,
    pub defect: i64,
}

#[derive(Clone, Debug)]
pub struct KnownExample {
    pub name: &'static str,
    pub description: &'static str,
    pub instance: Instance,
    pub expected: Expected,
}

/// Some `(a, b)` with `a^2 + b^2 = -1` modulo `p`.
fn sum_of_two_squares_minus_one(p: u32) -> (u64, u64) {
    let p = p as u64;
    let mut root = BTreeMap::new();
    for b in 0..p {
        root.entry(b * b % p).or_insert(b);
    }
    for a in 1..p {
        let want = (2 * p - 1 - a * a % p) % p;
        if let Some(&b) = root.get(&want) {
            return (a, b);
        }
    }
    unreachable!("-1 is a sum of two squares in every prime field")
}

/// K1: Koszul pair over a regular ring. K2: the non-rigid pair over
/// `k[x,y]/(xy)`. K3: a matrix factorization module over the quadric cone
/// paired with the residue ring of a regular linear form.
pub fn known_examples() -> Vec<KnownExample> {
    let p = 32003;
    let s = Ring::polynomial(p, &["x", "y"]).unwrap();
    let k1 = Instance {
        family: "K1".into(),
        index: 0,
        m: FPModule::cyclic(s.clone(), &[s.var(0)]).unwrap(),
        n: FPModule::cyclic(s.clone(), &[s.var(1)]).unwrap(),
        ring: s,
    };
    let r = Ring::quotient(p, &["x", "y"], &["x*y"]).unwrap();
    let rx = FPModule::cyclic(r.clone(), &[r.var(0)]).unwrap();
    let k2 = Instance {
        family: "K2".into(),
        index: 0,
        m: rx.clone(),
        n: rx,
        ring: r,
    };
    let q = Ring::quotient(p, &["x", "y", "z"], &["x^2 + y^2 + z^2"]).unwrap();
    let (a, b) = sum_of_two_squares_minus_one(p);
    let l = q.parse_poly(&format!("{a}*y + {b}*z")).unwrap();
    let t = q.parse_poly(&format!("{b}*y - {a}*z")).unwrap();
    let x = q.var(0);
    let mf = FPModule::from_relations(
        q.clone(),
        vec![0, 0],
        vec![vec![x.sub(&l), t.clone()], vec![t, x.add(&l)]],
    )
    .unwrap();
    let ell = q.parse_poly("x + y + z").unwrap();
    let k3 = Instance {
        family: "K3".into(),
        index: 0,
        n: FPModule::cyclic(q.clone(), &[ell]).unwrap(),
        m: mf,
        ring: q,
    };
    vec![
        KnownExample {
            name: "K1",
            description: "S = k[x,y], M = S/(x), N = S/(y)",
            instance: k1,
            expected: Expected {
                depths: (1, 1, 2, 0),
                tor_status: "holds",
                defect: 0,
            },
        },
        KnownExample {
            name: "K2",
            description: "R = k[x,y]/(xy), M = N = R/(x)",
            instance: k2,
            expected: Expected {
                depths: (1, 1, 1, 1),
                tor_status: "fails",
                defect: 0,
            },
        },
        KnownExample {
            name: "K3",
            description:
                "R = k[x,y,z]/(x^2+y^2+z^2), M = coker of a matrix factorization, N = R/(x+y+z)",
            instance: k3,
            expected: Expected {
                depths: (2, 1, 2, 1),
                tor_status: "holds",
                defect: 0,
            },
        },
    ]
}

/// Result of one check on one instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "detail", rename_all = "snake_case")]
pub enum Outcome {
    Holds,
    Fails(String),
    Inconclusive(String),
    Skipped(String),
}

impl Outcome {
    fn from_verdict(v: Verdict) -> Outcome {
        match v {
            Verdict::Holds => Outcome::Holds,
            Verdict::InconclusiveUpToBound { bound } => {
                Outcome::Inconclusive(format!("up to bound {bound}"))
            }
            f => Outcome::Fails(f.to_string()),
        }
    }

    fn from_error(e: Error) -> Outcome {
        match e {
            Error::Precondition(_) | Error::DepthZeroWitness(_) | Error::Input(_) => {
                Outcome::Skipped(e.to_string())
            }
            Error::SearchExhausted { .. } | Error::Bound { .. } => {
                Outcome::Inconclusive(e.to_string())
            }
            e => Outcome::Fails(format!("error: {e}")),
        }
    }

    pub fn status(&self) -> &'static str {
        match self {
            Outcome::Holds => "holds",
            Outcome::Fails(_) => "fails",
            Outcome::Inconclusive(_) => "inconclusive",
            Outcome::Skipped(_) => "skipped",
        }
    }
}

fn outcome(r: Result<Outcome>) -> Outcome {
    r.unwrap_or_else(Outcome::from_error)
}

fn verdict_outcome(r: Result<Verdict>) -> Outcome {
    match r {
        Ok(v) => Outcome::from_verdict(v),
        Err(e) => Outcome::from_error(e),
    }
}

fn check_bool(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Outcome::Holds
    } else {
        Outcome::Fails(msg())
    }
}

/// Every check the harness knows, in report order.
pub const ALL_CHECKS: &[&str] = &[
    "depth_oracles",
    "auslander_buchsbaum",
    "depth_formula",
    "main_inequality",
    "lemma_depth",
    "gdim_inequality",
    "depth_reduct",
    "corollary_depth_reduct",
    "les_spect",
    "cor_spect",
    "descent",
    "tor_balance",
    "euler_characteristic",
    "pd_syzygy",
    "syzygy_depth",
    "regular_hilbert",
    "gdim_formula",
];

/// Parameters of a check run.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteConfig {
    /// Tor truncation bound; `None` means `2(n + 1)` per ring.
    pub bound: Option<usize>,
    pub d_max: u32,
    pub seed: u64,
    pub max_degree: u32,
    pub p_max: usize,
    /// Record wall-clock time per check. Off by default so that reports
    /// are reproducible byte for byte.
    pub timings: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            bound: None,
            d_max: 12,
            seed: 0,
            max_degree: 3,
            p_max: 4,
            timings: false,
        }
    }
}

struct Ctx<'a> {
    inst: &'a Instance,
    opts: CheckOptions,
    p_max: usize,
}

impl Ctx<'_> {
    fn r(&self) -> FPModule {
        FPModule::free(self.inst.ring.clone(), vec![0])
    }
}

/// Runs one named check on an instance.
pub fn run_check(name: &str, inst: &Instance, cfg: &SuiteConfig) -> Outcome {
    let mut opts = CheckOptions::for_ring(&inst.ring);
    if let Some(b) = cfg.bound {
        opts.bound = b;
    }
    opts.d_max = cfg.d_max;
    opts.seed = cfg.seed;
    opts.max_degree = cfg.max_degree;
    let cx = Ctx {
        inst,
        opts,
        p_max: cfg.p_max,
    };
    let (m, n) = (&inst.m, &inst.n);
    match name {
        "depth_oracles" => outcome(depth_oracles(m, n)),
        "auslander_buchsbaum" => outcome(auslander_buchsbaum(m, n)),
        "depth_formula" => outcome(depth_formula(&cx)),
        "main_inequality" => match main_inequality_check(m, n, cx.opts.bound) {
            Ok((v, _)) => Outcome::from_verdict(v),
            Err(e) => Outcome::from_error(e),
        },
        "lemma_depth" => verdict_outcome(lemma_depth_check(m, n, &cx.opts)),
        "gdim_inequality" => verdict_outcome(gdim_inequality_check(m, n)),
        "depth_reduct" => outcome(reduce_pair(m, n, &cx.opts).map(|s| {
            check_bool(s.postconditions_hold(), || {
                format!(
                    "depths {:?} -> {:?}, reduced Tor {}",
                    s.depths_before, s.depths_after, s.tor_after
                )
            })
        })),
        "corollary_depth_reduct" => verdict_outcome(corollary_depth_reduct_check(m, n, &cx.opts)),
        "les_spect" => outcome(les_spect(&cx)),
        "cor_spect" => outcome(cor_spect(&cx)),
        "descent" => outcome(descent(&cx)),
        "tor_balance" => outcome(tor_balance(&cx)),
        "euler_characteristic" => outcome(euler_characteristic(&cx)),
        "pd_syzygy" => {
            verdict_outcome(pd_syzygy(m).and_then(|a| if a.holds() { pd_syzygy(n) } else { Ok(a) }))
        }
        "syzygy_depth" => verdict_outcome(syzygy_depth_check(m)),
        "regular_hilbert" => outcome(regular_hilbert(&cx)),
        "gdim_formula" => outcome(gdim_formula(&cx)),
        other => Outcome::Skipped(format!("unknown check {other}")),
    }
}

fn depth_oracles(m: &FPModule, n: &FPModule) -> Result<Outcome> {
    let mn = m.tensor_product(n)?;
    for (name, x) in [("M", m), ("N", n), ("M ⊗ N", &mn)] {
        let (a, b) = (depth_by_pd(x)?, depth_by_ext(x)?);
        if a != b {
            return Ok(Outcome::Fails(format!(
                "{name}: n - pd = {a}, Ext route = {b}"
            )));
        }
    }
    Ok(Outcome::Holds)
}

fn auslander_buchsbaum(m: &FPModule, n: &FPModule) -> Result<Outcome> {
    let nv = m.ring().nvars();
    for (name, x) in [("M", m), ("N", n)] {
        let d = depth_by_ext(x)?;
        let pd = projective_dimension_ambient(x);
        if d + pd != nv {
            return Ok(Outcome::Fails(format!(
                "{name}: depth {d} + pd {pd} != {nv}"
            )));
        }
    }
    Ok(Outcome::Holds)
}

fn depth_formula(cx: &Ctx) -> Result<Outcome> {
    let rec = depth_formula_defect(&cx.inst.m, &cx.inst.n, cx.opts.bound)?;
    Ok(match rec.tor_verdict {
        Verdict::Holds => check_bool(rec.defect == 0, || format!("defect {}", rec.defect)),
        Verdict::InconclusiveUpToBound { bound } => {
            Outcome::Inconclusive(format!("Tor up to bound {bound}"))
        }
        Verdict::Fails { index, .. } => Outcome::Skipped(format!("Tor_{index} is nonzero")),
    })
}

fn les_spect(cx: &Ctx) -> Result<Outcome> {
    let x = find_regular_element(&[cx.r()], cx.opts.max_degree, cx.opts.trials, cx.opts.seed)?;
    Ok(Outcome::from_verdict(les_check_spect(
        &cx.inst.n,
        &cx.inst.m,
        &x,
        cx.p_max,
        cx.opts.d_max,
    )?))
}

fn cor_spect(cx: &Ctx) -> Result<Outcome> {
    let (m, n) = (&cx.inst.m, &cx.inst.n);
    let v = is_tor_independent(m, n, cx.opts.bound)?;
    if v.fails() {
        return Ok(Outcome::Skipped("not Tor-independent".into()));
    }
    let x = find_regular_element(
        &[cx.r(), m.clone()],
        cx.opts.max_degree,
        cx.opts.trials,
        cx.opts.seed,
    )?;
    Ok(Outcome::from_verdict(cor_spect_check(
        n,
        m,
        &x,
        cx.p_max,
        cx.opts.d_max,
        cx.opts.bound,
    )?))
}

fn descent(cx: &Ctx) -> Result<Outcome> {
    let (m, n) = (&cx.inst.m, &cx.inst.n);
    let d = ring_depth(&cx.inst.ring)?;
    if d < 2 || depth(m)? != d || depth(n)? != d {
        return Ok(Outcome::Skipped(
            "not a maximal Cohen–Macaulay pair over a ring of depth >= 2".into(),
        ));
    }
    let desc = descend_to_depth_one(m, n, &cx.opts)?;
    if let Some(e) = desc.error {
        return Ok(Outcome::from_error(e));
    }
    Ok(check_bool(desc.consistent(), || {
        format!("levels {:?}", desc.levels)
    }))
}

fn tor_balance(cx: &Ctx) -> Result<Outcome> {
    let (m, n) = (&cx.inst.m, &cx.inst.n);
    let hi = cx.opts.d_max as i32;
    for i in 0..=cx.opts.bound {
        let a = tor(m, n, i)?;
        let b = tor(n, m, i)?;
        if a.hilbert_range(0, hi) != b.hilbert_range(0, hi) {
            return Ok(Outcome::Fails(format!("Tor_{i} differs")));
        }
    }
    Ok(Outcome::Holds)
}

fn low_degree(m: &FPModule) -> i32 {
    m.generator_degrees().iter().copied().min().unwrap_or(0)
}

/// `HF_M * HF_N = HF_S * sum (-1)^i HF_{Tor_i^S(M, N)}` as power series up to `d_max`.
fn euler_characteristic(cx: &Ctx) -> Result<Outcome> {
    let m = cx.inst.m.as_ambient().minimal_presentation();
    let n = cx.inst.n.as_ambient().minimal_presentation();
    let nv = m.ring().nvars();
    let (lm, ln) = (low_degree(&m), low_degree(&n));
    let lo = lm + ln;
    let hi = cx.opts.d_max as i32;
    if hi < lo {
        return Ok(Outcome::Skipped("d_max below the generator degrees".into()));
    }
    let hm = m.hilbert_range(lm, hi);
    let hn = n.hilbert_range(ln, hi);
    let len = (hi - lo + 1) as usize;
    let mut chi = vec![0i128; len];
    for i in 0..=nv {
        let t = tor_over(&m, &n, i, Over::Ambient)?;
        let sign = if i % 2 == 0 { 1 } else { -1 };
        for (k, v) in t.hilbert_range(lo, hi).into_iter().enumerate() {
            chi[k] += sign * v as i128;
        }
    }
    let binom = |t: usize| -> i128 {
        // dim S_t = C(t + n - 1, n - 1)
        let mut acc: i128 = 1;
        for j in 1..nv {
            acc = acc * (t + j) as i128 / j as i128;
        }
        acc
    };
    for k in 0..len {
        let lhs: i128 = (0..=k)
            .filter(|&a| a < hm.len() && k - a < hn.len())
            .map(|a| hm[a] as i128 * hn[k - a] as i128)
            .sum();
        let rhs: i128 = (0..=k).map(|u| binom(k - u) * chi[u]).sum();
        if lhs != rhs {
            return Ok(Outcome::Fails(format!(
                "degree {}: {lhs} != {rhs}",
                lo + k as i32
            )));
        }
    }
    Ok(Outcome::Holds)
}

fn pd_syzygy(m: &FPModule) -> Result<Verdict> {
    let pd = projective_dimension_ambient(m);
    for j in 1..=pd + 1 {
        let om = syzygy_ambient(m, j)?;
        let want = pd.saturating_sub(j);
        let got = if om.is_zero() {
            None
        } else {
            Some(projective_dimension_ambient(&om))
        };
        let ok = match got {
            None => j > pd,
            Some(g) => j <= pd && g == want,
        };
        if !ok {
            return Ok(Verdict::Fails {
                index: j,
                degree: None,
                witness: Some(om),
            });
        }
    }
    Ok(Verdict::Holds)
}

/// `x` is regular on `M` exactly when `HF(M/xM)(t) = HF(M)(t) - HF(M)(t - deg x)`.
fn regular_hilbert(cx: &Ctx) -> Result<Outcome> {
    let m = &cx.inst.m;
    let ring = &cx.inst.ring;
    let mut rng = ChaCha8Rng::seed_from_u64(cx.opts.seed);
    let candidates = [ring.var(0), ring.reduce(&random_form(ring, 1, &mut rng))];
    let lo = low_degree(m);
    let hi = cx.opts.d_max as i32;
    for x in candidates.iter().filter(|x| !x.is_zero()) {
        let d = x.homogeneous_degree().unwrap() as i32;
        let reg = m.is_regular(x)?;
        let hm = m.hilbert_range(lo - d, hi);
        let hq = m
            .quotient_mod_element(x, QuotientTarget::SameRing)?
            .hilbert_range(lo, hi);
        let matches =
            (0..hq.len()).all(|k| hq[k] as i64 == hm[k + d as usize] as i64 - hm[k] as i64);
        if reg != matches {
            return Ok(Outcome::Fails(format!(
                "{}: regular = {reg}, Hilbert identity = {matches}",
                ring.display_poly(x)
            )));
        }
    }
    Ok(Outcome::Holds)
}

/// Over the Gorenstein rings of the suite, `G-dim M = depth R - depth M`.
fn gdim_formula(cx: &Ctx) -> Result<Outcome> {
    let m = &cx.inst.m;
    let want = ring_depth(&cx.inst.ring)? - depth(m)?;
    Ok(match gdim_estimate_with(m, cx.opts.bound, cx.opts.d_max)? {
        Bounded::Value(g) => {
            check_bool(g == want, || format!("G-dim estimate {g}, expected {want}"))
        }
        Bounded::InconclusiveUpToBound(b) => Outcome::Inconclusive(format!("up to bound {b}")),
    })
}

/// Per-check counts. `holds + fails + inconclusive + skipped` is the
/// number of instances.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub check: String,
    pub holds: usize,
    pub fails: usize,
    pub inconclusive: usize,
    pub skipped: usize,
}

impl Tally {
    pub fn total(&self) -> usize {
        self.holds + self.fails + self.inconclusive + self.skipped
    }
}

/// A failing check with the instance needed to replay it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FailureRecord {
    pub check: String,
    pub family: String,
    pub index: usize,
    pub detail: String,
    pub instance: String,
}

/// Instances that could not be generated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenerationFailure {
    pub family: String,
    pub index: usize,
    pub error: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub config: SuiteConfig,
    pub families: Vec<InstanceFamily>,
    pub instances: usize,
    pub tallies: Vec<Tally>,
    /// Every check is a theorem over the suite's complete intersection
    /// rings, so each entry here points at a defect of the kernel.
    pub failures: Vec<FailureRecord>,
    pub generation_failures: Vec<GenerationFailure>,
    /// Outcome of every check on every instance, in instance order.
    pub outcomes: Vec<InstanceOutcomes>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seconds_per_check: Option<Vec<(String, f64)>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct InstanceOutcomes {
    pub family: String,
    pub index: usize,
    pub results: Vec<(String, Outcome)>,
}

impl SuiteReport {
    pub fn tally(&self, check: &str) -> Option<&Tally> {
        self.tallies.iter().find(|t| t.check == check)
    }

    pub fn has_failures(&self) -> bool {
        !self.failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("instances: {}\n", self.instances);
        s.push_str(&format!(
            "{:<24}{:>8}{:>8}{:>14}{:>9}\n",
            "check", "holds", "fails", "inconclusive", "skipped"
        ));
        for t in &self.tallies {
            s.push_str(&format!(
                "{:<24}{:>8}{:>8}{:>14}{:>9}\n",
                t.check, t.holds, t.fails, t.inconclusive, t.skipped
            ));
        }
        for g in &self.generation_failures {
            s.push_str(&format!(
                "generation failed: {} #{}: {}\n",
                g.family, g.index, g.error
            ));
        }
        for f in &self.failures {
            s.push_str(&format!(
                "FAIL {} on {} #{}: {}\n{}",
                f.check, f.family, f.index, f.detail, f.instance
            ));
        }
        if let Some(ts) = &self.seconds_per_check {
            for (c, t) in ts {
                s.push_str(&format!("time {c}: {t:.3}s\n"));
            }
        }
        s
    }
}

/// Runs every named check on every instance of every family. Instances are
/// processed in parallel and the report is assembled in instance order.
pub fn run_lemma_suite(
    families: &[InstanceFamily],
    checks: &[&str],
    cfg: &SuiteConfig,
) -> SuiteReport {
    let jobs: Vec<(&InstanceFamily, usize)> = families
        .iter()
        .flat_map(|f| (0..f.count).map(move |i| (f, i)))
        .collect();
    let generated: Vec<Result<Instance>> = jobs
        .par_iter()
        .map(|(f, i)| generate_instance(f, *i))
        .collect();
    let mut instances = Vec::new();
    let mut generation_failures = Vec::new();
    for ((f, i), g) in jobs.iter().zip(generated) {
        match g {
            Ok(inst) => instances.push(inst),
            Err(e) => generation_failures.push(GenerationFailure {
                family: f.name.clone(),
                index: *i,
                error: e.to_string(),
            }),
        }
    }
    let mut report = run_on_instances(&instances, checks, cfg);
    report.families = families.to_vec();
    report.generation_failures = generation_failures;
    report
}

/// The harness on an explicit list of instances.
pub fn run_on_instances(instances: &[Instance], checks: &[&str], cfg: &SuiteConfig) -> SuiteReport {
    let results: Vec<Vec<(Outcome, f64)>> = instances
        .par_iter()
        .map(|inst| {
            checks
                .iter()
                .map(|c| {
                    let t0 = Instant::now();
                    let o = run_check(c, inst, cfg);
                    (o, t0.elapsed().as_secs_f64())
                })
                .collect()
        })
        .collect();
    let mut tallies: Vec<Tally> = checks
        .iter()
        .map(|c| Tally {
            check: c.to_string(),
            ..Tally::default()
        })
        .collect();
    let mut seconds = vec![0.0; checks.len()];
    let mut failures = Vec::new();
    let mut outcomes = Vec::new();
    for (inst, row) in instances.iter().zip(&results) {
        for (k, (o, t)) in row.iter().enumerate() {
            seconds[k] += t;
            let tally = &mut tallies[k];
            match o {
                Outcome::Holds => tally.holds += 1,
                Outcome::Fails(detail) => {
                    tally.fails += 1;
                    failures.push(FailureRecord {
                        check: checks[k].to_string(),
                        family: inst.family.clone(),
                        index: inst.index,
                        detail: detail.clone(),
                        instance: inst.to_text(),
                    });
                }
                Outcome::Inconclusive(_) => tally.inconclusive += 1,
                Outcome::Skipped(_) => tally.skipped += 1,
            }
        }
        outcomes.push(InstanceOutcomes {
            family: inst.family.clone(),
            index: inst.index,
            results: checks
                .iter()
                .zip(row)
                .map(|(c, (o, _))| (c.to_string(), o.clone()))
                .collect(),
        });
    }
    SuiteReport {
        config: cfg.clone(),
        families: vec![],
        instances: instances.len(),
        tallies,
        failures,
        generation_failures: vec![],
        outcomes,
        seconds_per_check: cfg
            .timings
            .then(|| checks.iter().map(|c| c.to_string()).zip(seconds).collect()),
    }
}
