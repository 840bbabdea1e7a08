//! Buchberger's algorithm for homogeneous submodules of graded free modules.
//!
//! Vectors are sparse lists of terms `c * m * e_pos` ordered term-over-position:
//! degrevlex on the monomial first, then the lower position wins. Every input
//! is homogeneous, so the engine processes critical pairs and inputs degree by
//! degree. That gives three things from one pass:
//!
//! * a Gröbner basis (minimal by construction, optionally tail-reduced),
//! * which `Candidate` inputs are needed as generators modulo everything of
//!   lower degree plus the `Fixed` inputs, i.e. a minimal generating subset,
//! * the syzygies of the inputs, read off from the lifted reductions of the
//!   S-pairs (Schreyer) when representations are tracked.
//!
//! Critical pairs for a new element `g_j` are only formed with the `g_i` whose
//! quotient `lcm(lt g_i, lt g_j) / lt g_j` is a minimal generator of the colon
//! ideal of earlier leading terms; those pairs generate all syzygies of the
//! leading terms.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

use crate::poly::{FieldElem, Monomial, Poly, PrimeField};

/// One term `coeff * mon * e_pos`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MTerm {
    pub mon: Monomial,
    pub pos: u32,
    pub coeff: FieldElem,
}

#[inline]
fn term_cmp(am: &Monomial, ap: u32, bm: &Monomial, bp: u32) -> Ordering {
    am.cmp_degrevlex(bm).then(bp.cmp(&ap))
}

/// A sparse vector of a free module, leading term first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ModVec {
    terms: Vec<MTerm>,
}

impl ModVec {
    pub fn zero() -> Self {
        ModVec { terms: Vec::new() }
    }

    /// The unit vector `e_pos` in `nvars` variables.
    pub fn unit(nvars: usize, pos: usize) -> Self {
        ModVec {
            terms: vec![MTerm {
                mon: Monomial::one(nvars),
                pos: pos as u32,
                coeff: FieldElem::ONE,
            }],
        }
    }

    pub fn from_terms(mut terms: Vec<MTerm>, field: PrimeField) -> Self {
        terms.sort_by(|a, b| term_cmp(&b.mon, b.pos, &a.mon, a.pos));
        let mut out: Vec<MTerm> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(l) if l.mon == t.mon && l.pos == t.pos => {
                    l.coeff = field.add(l.coeff, t.coeff)
                }
                _ => out.push(t),
            }
        }
        out.retain(|t| !t.coeff.is_zero());
        ModVec { terms: out }
    }

    /// Column vector from its entries.
    pub fn from_polys(entries: &[Poly]) -> Self {
        let mut terms = Vec::new();
        let mut field = None;
        for (i, p) in entries.iter().enumerate() {
            field.get_or_insert(p.field());
            for &(m, c) in p.terms() {
                terms.push(MTerm {
                    mon: m,
                    pos: i as u32,
                    coeff: c,
                });
            }
        }
        match field {
            Some(f) => ModVec::from_terms(terms, f),
            None => ModVec::zero(),
        }
    }

    /// Entries of the vector in a free module of rank `rank`.
    pub fn to_polys(&self, rank: usize, field: PrimeField, nvars: usize) -> Vec<Poly> {
        let mut buckets: Vec<Vec<(Monomial, FieldElem)>> = vec![Vec::new(); rank];
        for t in &self.terms {
            buckets[t.pos as usize].push((t.mon, t.coeff));
        }
        buckets
            .into_iter()
            .map(|b| Poly::from_sorted_terms(field, nvars, b))
            .collect()
    }

    pub fn terms(&self) -> &[MTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&MTerm> {
        self.terms.first()
    }

    /// Degree with respect to generator degrees `twists`, if homogeneous.
    pub fn homogeneous_degree(&self, twists: &[i32]) -> Option<i32> {
        let t = self.terms.first()?;
        let d = t.mon.degree() as i32 + twists[t.pos as usize];
        self.terms
            .iter()
            .all(|t| t.mon.degree() as i32 + twists[t.pos as usize] == d)
            .then_some(d)
    }

    pub fn scale(&self, c: FieldElem, field: PrimeField) -> ModVec {
        if c.is_zero() {
            return ModVec::zero();
        }
        ModVec {
            terms: self
                .terms
                .iter()
                .map(|t| MTerm {
                    coeff: field.mul(t.coeff, c),
                    ..*t
                })
                .collect(),
        }
    }

    /// `c * m * self`.
    pub fn mul_term(&self, m: &Monomial, c: FieldElem, field: PrimeField) -> ModVec {
        if c.is_zero() {
            return ModVec::zero();
        }
        ModVec {
            terms: self
                .terms
                .iter()
                .map(|t| MTerm {
                    mon: t.mon.mul(m),
                    pos: t.pos,
                    coeff: field.mul(t.coeff, c),
                })
                .collect(),
        }
    }

    /// `c * p * self` for a polynomial `p`.
    pub fn mul_poly(&self, p: &Poly, field: PrimeField) -> ModVec {
        let mut acc = ModVec::zero();
        for (m, c) in p.terms() {
            acc = acc.add_mul(&self.clone(), *c, m, field);
        }
        acc
    }

    /// `self + c * m * other`.
    pub fn add_mul(&self, other: &ModVec, c: FieldElem, m: &Monomial, field: PrimeField) -> ModVec {
        let mut out = self.terms[..0].to_vec();
        merge_into(&mut out, &self.terms, 0, &other.terms, c, m, field);
        ModVec { terms: out }
    }

    pub fn add(&self, other: &ModVec, field: PrimeField) -> ModVec {
        let one = match other.terms.first() {
            Some(t) => Monomial::one(t.mon.nvars()),
            None => return self.clone(),
        };
        self.add_mul(other, FieldElem::ONE, &one, field)
    }

    pub fn sub(&self, other: &ModVec, field: PrimeField) -> ModVec {
        let one = match other.terms.first() {
            Some(t) => Monomial::one(t.mon.nvars()),
            None => return self.clone(),
        };
        self.add_mul(other, field.neg(FieldElem::ONE), &one, field)
    }

    /// Renumbers positions through `map`, dropping terms mapped to `None`.
    pub fn remap_positions(&self, map: impl Fn(u32) -> Option<u32>, field: PrimeField) -> ModVec {
        let terms = self
            .terms
            .iter()
            .filter_map(|t| map(t.pos).map(|p| MTerm { pos: p, ..*t }))
            .collect();
        ModVec::from_terms(terms, field)
    }

    fn make_monic(&mut self, field: PrimeField) -> FieldElem {
        let lc = self.terms[0].coeff;
        if lc != FieldElem::ONE {
            let inv = field.inv(lc).expect("nonzero lead");
            for t in &mut self.terms {
                t.coeff = field.mul(t.coeff, inv);
            }
            inv
        } else {
            FieldElem::ONE
        }
    }
}

/// Appends `a[start..] + c*m*b` to `out` (with `a[..start]` already in `out`).
fn merge_into(
    out: &mut Vec<MTerm>,
    a: &[MTerm],
    start: usize,
    b: &[MTerm],
    c: FieldElem,
    m: &Monomial,
    field: PrimeField,
) {
    out.reserve(a.len() - start + b.len());
    let (mut i, mut j) = (start, 0);
    let mut bt = b.first().map(|t| t.mon.mul(m));
    while i < a.len() || j < b.len() {
        let ord = match (a.get(i), &bt) {
            (Some(x), Some(bm)) => term_cmp(&x.mon, x.pos, bm, b[j].pos),
            (Some(_), None) => Ordering::Greater,
            _ => Ordering::Less,
        };
        match ord {
            Ordering::Greater => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Less => {
                let v = field.mul(b[j].coeff, c);
                if !v.is_zero() {
                    out.push(MTerm {
                        mon: bt.unwrap(),
                        pos: b[j].pos,
                        coeff: v,
                    });
                }
                j += 1;
                bt = b.get(j).map(|t| t.mon.mul(m));
            }
            Ordering::Equal => {
                let v = field.add(a[i].coeff, field.mul(b[j].coeff, c));
                if !v.is_zero() {
                    out.push(MTerm { coeff: v, ..a[i] });
                }
                i += 1;
                j += 1;
                bt = b.get(j).map(|t| t.mon.mul(m));
            }
        }
    }
}

/// `self - c*m*other` where the subtraction only touches terms from `start` on.
fn sub_from(
    v: &mut ModVec,
    start: usize,
    other: &ModVec,
    c: FieldElem,
    m: &Monomial,
    field: PrimeField,
) {
    let mut out = Vec::with_capacity(v.terms.len() + other.terms.len());
    out.extend_from_slice(&v.terms[..start]);
    let neg = field.neg(c);
    let tail = std::mem::take(&mut v.terms);
    let mut rest = Vec::new();
    merge_into(&mut rest, &tail[start..], 0, &other.terms, neg, m, field);
    out.extend(rest);
    v.terms = out;
}

/// S-vector of two vectors whose leading terms sit in the same position;
/// `None` when the positions differ.
pub fn s_vector(f: &ModVec, g: &ModVec, field: PrimeField) -> Option<ModVec> {
    let (lf, lg) = (f.lead()?, g.lead()?);
    if lf.pos != lg.pos {
        return None;
    }
    let l = lf.mon.lcm(&lg.mon);
    let uf = lf.mon.quotient_of(&l).unwrap();
    let ug = lg.mon.quotient_of(&l).unwrap();
    let cf = field.inv(lf.coeff).unwrap();
    let cg = field.inv(lg.coeff).unwrap();
    Some(
        f.mul_term(&uf, cf, field)
            .add_mul(g, field.neg(cg), &ug, field),
    )
}

/// S-polynomial `lcm/lt(f) * f - lcm/lt(g) * g` (leading coefficients normalized).
pub fn s_polynomial(f: &Poly, g: &Poly) -> Poly {
    let field = f.field();
    let n = f.nvars();
    if f.is_zero() || g.is_zero() {
        return Poly::zero(field, n);
    }
    let v = s_vector(
        &ModVec::from_polys(std::slice::from_ref(f)),
        &ModVec::from_polys(std::slice::from_ref(g)),
        field,
    )
    .expect("polynomials share position 0");
    v.to_polys(1, field, n).pop().unwrap()
}

/// Role of an engine input.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Role {
    /// Part of the submodule, never reported as a generator.
    Fixed,
    /// Tested for minimality against everything processed before it.
    Candidate,
}

#[derive(Clone, Debug)]
pub struct Input {
    pub vector: ModVec,
    pub degree: i32,
    pub role: Role,
}

#[derive(Clone, Debug, Default)]
pub struct EngineOutput {
    pub basis: Vec<ModVec>,
    pub basis_degrees: Vec<i32>,
    /// Indices (into the input list) of candidates kept as minimal generators.
    pub minimal: Vec<usize>,
    /// Syzygies of the inputs, positions indexed by input number.
    pub syzygies: Vec<ModVec>,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct EngineOptions {
    pub track_syzygies: bool,
    pub tail_reduce: bool,
    /// Only representation coordinates below this input index are tracked,
    /// i.e. syzygies come out projected onto the first inputs.
    pub track_limit: Option<usize>,
}

struct Pair {
    i: usize,
    j: usize,
}

struct Engine {
    field: PrimeField,
    opts: EngineOptions,
    basis: Vec<ModVec>,
    degrees: Vec<i32>,
    reprs: Vec<ModVec>,
    by_pos: HashMap<u32, Vec<usize>>,
    pairs: BTreeMap<i32, Vec<Pair>>,
    syzygies: Vec<ModVec>,
}

impl Engine {
    fn new(field: PrimeField, opts: EngineOptions) -> Self {
        Engine {
            field,
            opts,
            basis: Vec::new(),
            degrees: Vec::new(),
            reprs: Vec::new(),
            by_pos: HashMap::new(),
            pairs: BTreeMap::new(),
            syzygies: Vec::new(),
        }
    }

    fn find_reducer(&self, t: &MTerm) -> Option<usize> {
        self.by_pos
            .get(&t.pos)?
            .iter()
            .copied()
            .find(|&k| self.basis[k].terms[0].mon.divides(&t.mon))
    }

    /// Reduces until the leading term is irreducible (or the vector vanishes).
    fn top_reduce(&self, v: &mut ModVec, r: &mut ModVec) {
        while let Some(t) = v.terms.first().copied() {
            let Some(k) = self.find_reducer(&t) else {
                break;
            };
            let g = &self.basis[k];
            let u = g.terms[0].mon.quotient_of(&t.mon).unwrap();
            sub_from(v, 0, g, t.coeff, &u, self.field);
            if self.opts.track_syzygies {
                *r = r.add_mul(&self.reprs[k], self.field.neg(t.coeff), &u, self.field);
            }
        }
    }

    fn tail_reduce_from(&self, v: &mut ModVec, start: usize, skip: Option<usize>) {
        let mut k = start;
        while k < v.terms.len() {
            let t = v.terms[k];
            let red = self.by_pos.get(&t.pos).and_then(|ix| {
                ix.iter()
                    .copied()
                    .find(|&q| Some(q) != skip && self.basis[q].terms[0].mon.divides(&t.mon))
            });
            match red {
                Some(q) => {
                    let g = &self.basis[q];
                    let u = g.terms[0].mon.quotient_of(&t.mon).unwrap();
                    sub_from(v, k, g, t.coeff, &u, self.field);
                }
                None => k += 1,
            }
        }
    }

    fn insert(&mut self, mut v: ModVec, mut r: ModVec, degree: i32) {
        let inv = v.make_monic(self.field);
        if self.opts.track_syzygies {
            r = r.scale(inv, self.field);
        }
        let j = self.basis.len();
        let lead = v.terms[0];
        let mut cands: Vec<(usize, Monomial)> = Vec::new();
        if let Some(ix) = self.by_pos.get(&lead.pos) {
            for &i in ix {
                let li = self.basis[i].terms[0].mon;
                let q = lead.mon.quotient_of(&li.lcm(&lead.mon)).unwrap();
                cands.push((i, q));
            }
        }
        for (a, (i, q)) in cands.iter().enumerate() {
            let redundant = cands
                .iter()
                .enumerate()
                .any(|(b, (_, q2))| b != a && q2.divides(q) && (q2 != q || b < a));
            if redundant {
                continue;
            }
            let li = self.basis[*i].terms[0].mon;
            // the coprime-leads criterion only holds for vectors living in one position
            if !self.opts.track_syzygies
                && li.is_coprime(&lead.mon)
                && single_position(&self.basis[*i])
                && single_position(&v)
            {
                continue;
            }
            let d = degree + q.degree() as i32;
            self.pairs.entry(d).or_default().push(Pair { i: *i, j });
        }
        self.basis.push(v);
        self.degrees.push(degree);
        if self.opts.track_syzygies {
            self.reprs.push(r);
        }
        self.by_pos.entry(lead.pos).or_default().push(j);
    }

    fn process_pair(&mut self, p: Pair) {
        let (f, g) = (&self.basis[p.i], &self.basis[p.j]);
        let (lf, lg) = (f.terms[0].mon, g.terms[0].mon);
        let l = lf.lcm(&lg);
        let uf = lf.quotient_of(&l).unwrap();
        let ug = lg.quotient_of(&l).unwrap();
        let field = self.field;
        let minus = field.neg(FieldElem::ONE);
        let mut s = f
            .mul_term(&uf, FieldElem::ONE, field)
            .add_mul(g, minus, &ug, field);
        let mut r = if self.opts.track_syzygies {
            self.reprs[p.i]
                .mul_term(&uf, FieldElem::ONE, field)
                .add_mul(&self.reprs[p.j], minus, &ug, field)
        } else {
            ModVec::zero()
        };
        self.top_reduce(&mut s, &mut r);
        let degree = self.degrees[p.j] + ug.degree() as i32;
        if s.is_zero() {
            if self.opts.track_syzygies && !r.is_zero() {
                self.syzygies.push(r);
            }
        } else {
            self.insert(s, r, degree);
        }
    }

    fn run(mut self, nvars: usize, inputs: &[Input]) -> EngineOutput {
        let mut order: Vec<usize> = (0..inputs.len()).collect();
        order.sort_by_key(|&k| (inputs[k].degree, inputs[k].role, k));
        let mut minimal = Vec::new();
        let mut next = 0;
        loop {
            let pd = self.pairs.keys().next().copied();
            let id = order.get(next).map(|&k| inputs[k].degree);
            let d = match (pd, id) {
                (Some(a), Some(b)) => a.min(b),
                (Some(a), None) => a,
                (None, Some(b)) => b,
                (None, None) => break,
            };
            if pd == Some(d) {
                let mut batch = self.pairs.remove(&d).unwrap();
                batch.sort_by_key(|p| (p.j, p.i));
                for p in batch {
                    self.process_pair(p);
                }
                debug_assert!(self.pairs.keys().next().is_none_or(|&k| k > d));
            }
            while next < order.len() && inputs[order[next]].degree == d {
                let k = order[next];
                next += 1;
                let mut v = inputs[k].vector.clone();
                let tracked =
                    self.opts.track_syzygies && self.opts.track_limit.is_none_or(|l| k < l);
                let mut r = if tracked {
                    ModVec::unit(nvars, k)
                } else {
                    ModVec::zero()
                };
                self.top_reduce(&mut v, &mut r);
                if v.is_zero() {
                    if self.opts.track_syzygies && !r.is_zero() {
                        self.syzygies.push(r);
                    }
                } else {
                    if inputs[k].role == Role::Candidate {
                        minimal.push(k);
                    }
                    self.insert(v, r, d);
                }
            }
        }
        if self.opts.tail_reduce {
            for k in 0..self.basis.len() {
                let mut v = std::mem::take(&mut self.basis[k]);
                self.tail_reduce_from(&mut v, 1, Some(k));
                self.basis[k] = v;
            }
        }
        minimal.sort_unstable();
        EngineOutput {
            basis: self.basis,
            basis_degrees: self.degrees,
            minimal,
            syzygies: self.syzygies,
        }
    }
}

fn single_position(v: &ModVec) -> bool {
    let p = v.terms[0].pos;
    v.terms.iter().all(|t| t.pos == p)
}

/// Runs the homogeneous Buchberger engine over `inputs`.
pub fn run_engine(
    field: PrimeField,
    nvars: usize,
    inputs: &[Input],
    opts: EngineOptions,
) -> EngineOutput {
    Engine::new(field, opts).run(nvars, inputs)
}

/// A Gröbner basis of a homogeneous submodule of a graded free module.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    field: PrimeField,
    nvars: usize,
    twists: Vec<i32>,
    elements: Vec<ModVec>,
    reduced: bool,
    by_pos: HashMap<u32, Vec<usize>>,
}

impl GroebnerBasis {
    pub(crate) fn from_engine(
        field: PrimeField,
        nvars: usize,
        twists: Vec<i32>,
        elements: Vec<ModVec>,
        reduced: bool,
    ) -> Self {
        let mut by_pos: HashMap<u32, Vec<usize>> = HashMap::new();
        for (k, e) in elements.iter().enumerate() {
            by_pos.entry(e.terms[0].pos).or_default().push(k);
        }
        GroebnerBasis {
            field,
            nvars,
            twists,
            elements,
            reduced,
            by_pos,
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn twists(&self) -> &[i32] {
        &self.twists
    }

    pub fn elements(&self) -> &[ModVec] {
        &self.elements
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Leading monomials grouped by position.
    pub fn lead_monomials(&self, pos: usize) -> Vec<Monomial> {
        self.by_pos
            .get(&(pos as u32))
            .map(|ix| ix.iter().map(|&k| self.elements[k].terms[0].mon).collect())
            .unwrap_or_default()
    }

    /// Is `m * e_pos` a leading term multiple?
    pub fn is_lead_multiple(&self, m: &Monomial, pos: usize) -> bool {
        self.by_pos
            .get(&(pos as u32))
            .is_some_and(|ix| ix.iter().any(|&k| self.elements[k].terms[0].mon.divides(m)))
    }

    /// Fully reduced remainder of `v`: no term is divisible by a leading term.
    pub fn normal_form(&self, v: &ModVec) -> ModVec {
        let mut v = v.clone();
        let mut k = 0;
        while k < v.terms.len() {
            let t = v.terms[k];
            let red = self.by_pos.get(&t.pos).and_then(|ix| {
                ix.iter()
                    .copied()
                    .find(|&q| self.elements[q].terms[0].mon.divides(&t.mon))
            });
            match red {
                Some(q) => {
                    let g = &self.elements[q];
                    let u = g.terms[0].mon.quotient_of(&t.mon).unwrap();
                    let c = self.field.div(t.coeff, g.terms[0].coeff).unwrap();
                    sub_from(&mut v, k, g, c, &u, self.field);
                }
                None => k += 1,
            }
        }
        v
    }

    pub fn contains(&self, v: &ModVec) -> bool {
        self.normal_form(v).is_zero()
    }

    /// Does the submodule contain every unit vector, i.e. is the quotient zero?
    pub fn contains_all_units(&self) -> bool {
        (0..self.twists.len()).all(|p| {
            self.by_pos
                .get(&(p as u32))
                .is_some_and(|ix| ix.iter().any(|&k| self.elements[k].terms[0].mon.is_one()))
        })
    }
}

/// Reduced Gröbner basis of the submodule generated by `gens` inside the free
/// module with generator degrees `twists`. Panics on inhomogeneous input.
pub fn buchberger(
    field: PrimeField,
    nvars: usize,
    twists: &[i32],
    gens: &[ModVec],
) -> GroebnerBasis {
    let inputs: Vec<Input> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| Input {
            degree: g
                .homogeneous_degree(twists)
                .expect("buchberger requires homogeneous generators"),
            vector: g.clone(),
            role: Role::Fixed,
        })
        .collect();
    let out = run_engine(
        field,
        nvars,
        &inputs,
        EngineOptions {
            track_syzygies: false,
            tail_reduce: true,
            track_limit: None,
        },
    );
    GroebnerBasis::from_engine(field, nvars, twists.to_vec(), out.basis, true)
}

/// Reduced Gröbner basis of a homogeneous ideal.
pub fn ideal_basis(gens: &[Poly]) -> Vec<Poly> {
    let Some(first) = gens.first() else {
        return Vec::new();
    };
    let (field, n) = (first.field(), first.nvars());
    let vs: Vec<ModVec> = gens
        .iter()
        .map(|g| ModVec::from_polys(std::slice::from_ref(g)))
        .collect();
    buchberger(field, n, &[0], &vs)
        .elements()
        .iter()
        .map(|v| v.to_polys(1, field, n).pop().unwrap())
        .collect()
}

/// Normal form of a polynomial modulo a Gröbner basis of an ideal.
pub fn normal_form_poly(f: &Poly, basis: &[Poly]) -> Poly {
    let (field, n) = (f.field(), f.nvars());
    let gb = GroebnerBasis::from_engine(
        field,
        n,
        vec![0],
        basis
            .iter()
            .filter(|b| !b.is_zero())
            .map(|b| ModVec::from_polys(std::slice::from_ref(b)))
            .collect(),
        false,
    );
    gb.normal_form(&ModVec::from_polys(std::slice::from_ref(f)))
        .to_polys(1, field, n)
        .pop()
        .unwrap()
}

/// Generators of the syzygy module of `cols`, where `cols[k]` has degree
/// `degrees[k]`. Result vectors live in the free module indexed by `cols`.
pub fn syzygies(field: PrimeField, nvars: usize, cols: &[ModVec], degrees: &[i32]) -> Vec<ModVec> {
    let inputs: Vec<Input> = cols
        .iter()
        .zip(degrees)
        .map(|(v, &d)| Input {
            vector: v.clone(),
            degree: d,
            role: Role::Fixed,
        })
        .collect();
    run_engine(
        field,
        nvars,
        &inputs,
        EngineOptions {
            track_syzygies: true,
            tail_reduce: false,
            track_limit: None,
        },
    )
    .syzygies
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> PrimeField {
        PrimeField::new(5).unwrap()
    }

    fn poly(field: PrimeField, terms: &[(i64, [u16; 2])]) -> Poly {
        Poly::from_terms(
            field,
            2,
            terms
                .iter()
                .map(|(c, e)| (Monomial::from_exponents(e).unwrap(), field.elem(*c))),
        )
    }

    #[test]
    fn s_polynomial_examples() {
        let f = f5();
        let x2 = poly(f, &[(1, [2, 0])]);
        let xy = poly(f, &[(1, [1, 1])]);
        assert!(s_polynomial(&x2, &xy).is_zero());
        let g = poly(f, &[(1, [2, 0]), (1, [0, 2])]);
        assert_eq!(s_polynomial(&g, &xy), poly(f, &[(1, [0, 3])]));
        assert!(s_polynomial(&g, &g).is_zero());
    }

    #[test]
    fn s_vector_needs_same_position() {
        let f = f5();
        let a = ModVec::unit(2, 0);
        let b = ModVec::unit(2, 1);
        assert!(s_vector(&a, &b, f).is_none());
    }

    #[test]
    fn normal_form_examples() {
        let f = f5();
        let x = poly(f, &[(1, [1, 0])]);
        let y = poly(f, &[(1, [0, 1])]);
        assert!(normal_form_poly(&x, std::slice::from_ref(&x)).is_zero());
        assert_eq!(normal_form_poly(&y, std::slice::from_ref(&x)), y);
        let gb = vec![
            poly(f, &[(1, [2, 0]), (1, [0, 2])]),
            poly(f, &[(1, [1, 1])]),
            poly(f, &[(1, [0, 3])]),
        ];
        assert!(normal_form_poly(&poly(f, &[(1, [2, 1])]), &gb).is_zero());
    }

    #[test]
    fn buchberger_examples() {
        let f = f5();
        let x = poly(f, &[(1, [1, 0])]);
        assert_eq!(ideal_basis(std::slice::from_ref(&x)), vec![x]);
        assert!(ideal_basis(&[]).is_empty());
        let gens = vec![
            poly(f, &[(1, [2, 0]), (1, [0, 2])]),
            poly(f, &[(1, [1, 1])]),
        ];
        let gb = ideal_basis(&gens);
        assert_eq!(
            gb,
            vec![
                poly(f, &[(1, [2, 0]), (1, [0, 2])]),
                poly(f, &[(1, [1, 1])]),
                poly(f, &[(1, [0, 3])]),
            ]
        );
    }

    #[test]
    fn koszul_syzygy_of_two_variables() {
        let f = f5();
        let x = ModVec::from_polys(&[poly(f, &[(1, [1, 0])])]);
        let y = ModVec::from_polys(&[poly(f, &[(1, [0, 1])])]);
        let syz = syzygies(f, 2, &[x, y], &[1, 1]);
        assert_eq!(syz.len(), 1);
        let s = syz[0].to_polys(2, f, 2);
        // multiple of (y, -x)
        let c = s[0].terms()[0].1;
        assert_eq!(s[0], poly(f, &[(1, [0, 1])]).scale(c));
        assert_eq!(s[1], poly(f, &[(-1, [1, 0])]).scale(c));
    }

    #[test]
    fn minimal_candidates_skip_redundant() {
        let f = f5();
        let x = ModVec::from_polys(&[poly(f, &[(1, [1, 0])])]);
        let x2 = ModVec::from_polys(&[poly(f, &[(1, [2, 0])])]);
        let y = ModVec::from_polys(&[poly(f, &[(1, [0, 1])])]);
        let inputs = vec![
            Input {
                vector: x2,
                degree: 2,
                role: Role::Candidate,
            },
            Input {
                vector: x,
                degree: 1,
                role: Role::Candidate,
            },
            Input {
                vector: y,
                degree: 1,
                role: Role::Candidate,
            },
        ];
        let out = run_engine(f, 2, &inputs, EngineOptions::default());
        assert_eq!(out.minimal, vec![1, 2]);
    }
}
