//! Prime fields, exponent-vector monomials under degrevlex, and sparse
//! multivariate polynomials.
//!
//! Terms of a [`Poly`] are kept sorted in descending degrevlex order with no
//! zero coefficients, so equality is structural and printing is deterministic.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Default characteristic.
pub const DEFAULT_PRIME: u32 = 32003;

/// Largest number of variables a [`Monomial`] can carry.
pub const MAX_VARS: usize = 8;

/// The prime field `F_p`, `p < 2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

/// A residue modulo the prime of its field, always in `0..p`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElem(u32);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    pub fn value(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if !is_prime(p) || p >= 1 << 31 {
            return Err(Error::Input(format!("{p} is not a prime below 2^31")));
        }
        Ok(PrimeField { p })
    }

    pub fn characteristic(self) -> u32 {
        self.p
    }

    pub fn elem(self, v: i64) -> FieldElem {
        FieldElem(v.rem_euclid(self.p as i64) as u32)
    }

    #[inline]
    pub fn add(self, a: FieldElem, b: FieldElem) -> FieldElem {
        let s = a.0 + b.0;
        FieldElem(if s >= self.p { s - self.p } else { s })
    }

    #[inline]
    pub fn sub(self, a: FieldElem, b: FieldElem) -> FieldElem {
        FieldElem(if a.0 >= b.0 {
            a.0 - b.0
        } else {
            a.0 + self.p - b.0
        })
    }

    #[inline]
    pub fn neg(self, a: FieldElem) -> FieldElem {
        FieldElem(if a.0 == 0 { 0 } else { self.p - a.0 })
    }

    #[inline]
    pub fn mul(self, a: FieldElem, b: FieldElem) -> FieldElem {
        FieldElem(((a.0 as u64 * b.0 as u64) % self.p as u64) as u32)
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    pub fn inv(self, a: FieldElem) -> Result<FieldElem> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let (mut r0, mut r1) = (self.p as i64, a.0 as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Ok(self.elem(t0))
    }

    pub fn div(self, a: FieldElem, b: FieldElem) -> Result<FieldElem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Symmetric representative in `(-p/2, p/2]`, used for printing.
    pub fn signed(self, a: FieldElem) -> i64 {
        if a.0 > self.p / 2 {
            a.0 as i64 - self.p as i64
        } else {
            a.0 as i64
        }
    }
}

/// Inverse of `a` in its field; `DivisionByZero` for zero.
pub fn field_inverse(field: PrimeField, a: FieldElem) -> Result<FieldElem> {
    field.inv(a)
}

/// An exponent vector. Variables are indexed from 0.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    nvars: u8,
    deg: u16,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables supported");
        Monomial {
            exps: [0; MAX_VARS],
            nvars: nvars as u8,
            deg: 0,
        }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Monomial::one(nvars);
        assert!(i < nvars);
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    pub fn from_exponents(exps: &[u16]) -> Result<Self> {
        if exps.len() > MAX_VARS {
            return Err(Error::Shape(format!(
                "{} variables exceed the limit of {MAX_VARS}",
                exps.len()
            )));
        }
        let mut m = Monomial::one(exps.len());
        m.exps[..exps.len()].copy_from_slice(exps);
        m.deg = exps.iter().sum();
        Ok(m)
    }

    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps[..self.nvars as usize]
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.deg as u32
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for i in 0..self.nvars as usize {
            m.exps[i] += other.exps[i];
        }
        m.deg += other.deg;
        m
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && (0..self.nvars as usize).all(|i| self.exps[i] <= other.exps[i])
    }

    /// `other / self`, provided `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut m = *other;
        for i in 0..self.nvars as usize {
            m.exps[i] -= self.exps[i];
        }
        m.deg -= self.deg;
        Some(m)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        let mut deg = 0;
        for i in 0..self.nvars as usize {
            m.exps[i] = m.exps[i].max(other.exps[i]);
            deg += m.exps[i];
        }
        m.deg = deg;
        m
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        (0..self.nvars as usize).all(|i| self.exps[i] == 0 || other.exps[i] == 0)
    }

    /// Graded reverse lexicographic comparison.
    #[inline]
    pub fn cmp_degrevlex(&self, other: &Monomial) -> Ordering {
        match self.deg.cmp(&other.deg) {
            Ordering::Equal => {}
            o => return o,
        }
        for i in (0..self.nvars as usize).rev() {
            match self.exps[i].cmp(&other.exps[i]) {
                Ordering::Equal => continue,
                // smaller exponent in the last differing variable is larger
                o => return o.reverse(),
            }
        }
        Ordering::Equal
    }

    /// All monomials of total degree `d` in `nvars` variables, descending.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = Monomial::one(nvars);
        fn rec(i: usize, left: u32, cur: &mut Monomial, out: &mut Vec<Monomial>) {
            let n = cur.nvars as usize;
            if i + 1 == n {
                cur.exps[i] = left as u16;
                out.push(*cur);
                cur.exps[i] = 0;
                return;
            }
            for e in (0..=left).rev() {
                cur.exps[i] = e as u16;
                rec(i + 1, left - e, cur, out);
            }
            cur.exps[i] = 0;
        }
        if nvars == 0 {
            if d == 0 {
                out.push(cur);
            }
            return out;
        }
        cur.deg = d as u16;
        rec(0, d, &mut cur, &mut out);
        out.sort_by(|a, b| b.cmp_degrevlex(a));
        out
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_degrevlex(other)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exponents())
    }
}

/// Degrevlex comparison of two monomials with matching variable counts.
pub fn monomial_compare(a: &Monomial, b: &Monomial) -> Result<Ordering> {
    if a.nvars != b.nvars {
        return Err(Error::Shape(format!(
            "monomials in {} and {} variables",
            a.nvars, b.nvars
        )));
    }
    Ok(a.cmp_degrevlex(b))
}

/// A sparse polynomial over a prime field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: PrimeField,
    nvars: u8,
    terms: Vec<(Monomial, FieldElem)>,
}

impl Poly {
    pub fn zero(field: PrimeField, nvars: usize) -> Self {
        Poly {
            field,
            nvars: nvars as u8,
            terms: Vec::new(),
        }
    }

    pub fn constant(field: PrimeField, nvars: usize, c: FieldElem) -> Self {
        Poly::monomial(field, Monomial::one(nvars), c)
    }

    pub fn one(field: PrimeField, nvars: usize) -> Self {
        Poly::constant(field, nvars, FieldElem::ONE)
    }

    pub fn var(field: PrimeField, nvars: usize, i: usize) -> Self {
        Poly::monomial(field, Monomial::var(nvars, i), FieldElem::ONE)
    }

    pub fn monomial(field: PrimeField, m: Monomial, c: FieldElem) -> Self {
        let nvars = m.nvars;
        let terms = if c.is_zero() { vec![] } else { vec![(m, c)] };
        Poly {
            field,
            nvars,
            terms,
        }
    }

    /// Builds a polynomial from arbitrary (possibly repeated, unsorted) terms.
    pub fn from_terms(
        field: PrimeField,
        nvars: usize,
        terms: impl IntoIterator<Item = (Monomial, FieldElem)>,
    ) -> Self {
        let mut v: Vec<(Monomial, FieldElem)> = terms.into_iter().collect();
        v.sort_by(|a, b| b.0.cmp_degrevlex(&a.0));
        let mut out: Vec<(Monomial, FieldElem)> = Vec::with_capacity(v.len());
        for (m, c) in v {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = field.add(*lc, c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| !t.1.is_zero());
        Poly {
            field,
            nvars: nvars as u8,
            terms: out,
        }
    }

    /// Sorted terms, leading term first.
    pub(crate) fn from_sorted_terms(
        field: PrimeField,
        nvars: usize,
        terms: Vec<(Monomial, FieldElem)>,
    ) -> Self {
        Poly {
            field,
            nvars: nvars as u8,
            terms,
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    pub fn terms(&self) -> &[(Monomial, FieldElem)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<(Monomial, FieldElem)> {
        self.terms.first().copied()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    /// Constant term (zero when absent).
    pub fn constant_term(&self) -> FieldElem {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => *c,
            _ => FieldElem::ZERO,
        }
    }

    /// Total degree when every term shares it; `None` for zero or mixed degree.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.terms.first()?.0.degree();
        self.terms.iter().all(|(m, _)| m.degree() == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn neg(&self) -> Poly {
        let f = self.field;
        Poly {
            field: f,
            nvars: self.nvars,
            terms: self.terms.iter().map(|&(m, c)| (m, f.neg(c))).collect(),
        }
    }

    pub fn scale(&self, c: FieldElem) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.field, self.nvars());
        }
        let f = self.field;
        Poly {
            field: f,
            nvars: self.nvars,
            terms: self.terms.iter().map(|&(m, a)| (m, f.mul(a, c))).collect(),
        }
    }

    /// `c * m * self`.
    pub fn mul_term(&self, m: &Monomial, c: FieldElem) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.field, self.nvars());
        }
        let f = self.field;
        Poly {
            field: f,
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|&(t, a)| (t.mul(m), f.mul(a, c)))
                .collect(),
        }
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, other: &Poly, c: FieldElem) -> Poly {
        let f = self.field;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let ord = match (self.terms.get(i), other.terms.get(j)) {
                (Some(a), Some(b)) => a.0.cmp_degrevlex(&b.0),
                (Some(_), None) => Ordering::Greater,
                _ => Ordering::Less,
            };
            match ord {
                Ordering::Greater => {
                    out.push(self.terms[i]);
                    i += 1;
                }
                Ordering::Less => {
                    let (m, b) = other.terms[j];
                    let v = f.mul(b, c);
                    if !v.is_zero() {
                        out.push((m, v));
                    }
                    j += 1;
                }
                Ordering::Equal => {
                    let (m, a) = self.terms[i];
                    let v = f.add(a, f.mul(other.terms[j].1, c));
                    if !v.is_zero() {
                        out.push((m, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Poly {
            field: f,
            nvars: self.nvars,
            terms: out,
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.add_scaled(other, FieldElem::ONE)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add_scaled(other, self.field.neg(FieldElem::ONE))
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        poly_multiply(self, other)
    }

    /// Evaluates at a point given as field values, one per variable.
    pub fn evaluate(&self, point: &[FieldElem]) -> FieldElem {
        let f = self.field;
        let mut acc = FieldElem::ZERO;
        for (m, c) in &self.terms {
            let mut v = *c;
            for (i, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    v = f.mul(v, point[i]);
                }
            }
            acc = f.add(acc, v);
        }
        acc
    }

    /// Renders with the given variable names, leading term first.
    pub fn display_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let v = self.field.signed(*c);
            let (neg, abs) = (v < 0, v.unsigned_abs());
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mut factors = Vec::new();
            for (i, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(names[i].clone()),
                    _ => factors.push(format!("{}^{}", names[i], e)),
                }
            }
            if factors.is_empty() {
                s.push_str(&abs.to_string());
            } else {
                if abs != 1 {
                    s.push_str(&abs.to_string());
                    s.push('*');
                }
                s.push_str(&factors.join("*"));
            }
        }
        s
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars()).map(|i| format!("x{}", i + 1)).collect();
        write!(f, "{}", self.display_with(&names))
    }
}

/// Exact product. Homogeneous inputs give a homogeneous result of summed degree.
pub fn poly_multiply(a: &Poly, b: &Poly) -> Poly {
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    let mut acc = Poly::zero(a.field, a.nvars());
    for (m, c) in &small.terms {
        acc = acc.add(&large.mul_term(m, *c));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f5() -> PrimeField {
        PrimeField::new(5).unwrap()
    }

    fn mono(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e).unwrap()
    }

    #[test]
    fn inverse_examples() {
        let f = f5();
        assert_eq!(field_inverse(f, f.elem(1)).unwrap(), f.elem(1));
        assert_eq!(field_inverse(f, f.elem(2)).unwrap(), f.elem(3));
        assert_eq!(field_inverse(f, f.elem(0)), Err(Error::DivisionByZero));
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(PrimeField::new(4).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(32003).is_ok());
    }

    #[test]
    fn degrevlex_examples() {
        // x^2 vs xy in k[x,y]
        assert_eq!(
            monomial_compare(&mono(&[2, 0]), &mono(&[1, 1])).unwrap(),
            Ordering::Greater
        );
        assert_eq!(
            monomial_compare(&mono(&[1, 1]), &mono(&[1, 1])).unwrap(),
            Ordering::Equal
        );
        assert_eq!(
            monomial_compare(&mono(&[1, 0]), &mono(&[0, 2])).unwrap(),
            Ordering::Less
        );
        assert!(matches!(
            monomial_compare(&mono(&[1, 0]), &mono(&[1, 0, 0])),
            Err(Error::Shape(_))
        ));
        // degrevlex differs from deglex: x*z^... here x1*x3 vs x2^2 in 3 vars
        assert_eq!(
            mono(&[1, 0, 1]).cmp_degrevlex(&mono(&[0, 2, 0])),
            Ordering::Less
        );
    }

    #[test]
    fn multiply_examples() {
        let f = f5();
        let x = Poly::var(f, 2, 0);
        let y = Poly::var(f, 2, 1);
        let one = Poly::one(f, 2);
        let p = x.add(&y);
        assert_eq!(p.mul(&one), p);
        let prod = p.mul(&x.sub(&y));
        let expected = Poly::from_terms(
            f,
            2,
            [(mono(&[2, 0]), f.elem(1)), (mono(&[0, 2]), f.elem(4))],
        );
        assert_eq!(prod, expected);
        assert!(p.mul(&Poly::zero(f, 2)).is_zero());
    }

    #[test]
    fn all_of_degree_counts() {
        assert_eq!(Monomial::all_of_degree(3, 2).len(), 6);
        assert_eq!(Monomial::all_of_degree(2, 0).len(), 1);
        let ms = Monomial::all_of_degree(2, 3);
        assert_eq!(ms[0], mono(&[3, 0]));
        assert_eq!(ms[3], mono(&[0, 3]));
    }

    fn arb_mono(n: usize) -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u16..4, n).prop_map(|e| Monomial::from_exponents(&e).unwrap())
    }

    fn arb_homog(field: PrimeField, n: usize, d: u32) -> impl Strategy<Value = Poly> {
        let ms = Monomial::all_of_degree(n, d);
        proptest::collection::vec(0u32..field.characteristic(), ms.len()).prop_map(move |cs| {
            Poly::from_terms(
                field,
                n,
                ms.iter().zip(cs).map(|(m, c)| (*m, field.elem(c as i64))),
            )
        })
    }

    proptest! {
        #[test]
        fn field_axioms(p in prop::sample::select(vec![2u32, 5, 32003]), a in 0i64..100_000, b in 0i64..100_000, c in 0i64..100_000) {
            let f = PrimeField::new(p).unwrap();
            let (a, b, c) = (f.elem(a), f.elem(b), f.elem(c));
            prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
            prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            prop_assert_eq!(f.add(a, f.neg(a)), FieldElem::ZERO);
            if !a.is_zero() {
                prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElem::ONE);
            }
        }

        #[test]
        fn degrevlex_is_monomial_order(a in arb_mono(3), b in arb_mono(3), c in arb_mono(3)) {
            prop_assert_eq!(a.cmp_degrevlex(&b), b.cmp_degrevlex(&a).reverse());
            if a.cmp_degrevlex(&b) != Ordering::Less && b.cmp_degrevlex(&c) != Ordering::Less {
                prop_assert_ne!(a.cmp_degrevlex(&c), Ordering::Less);
            }
            prop_assert_eq!(a.mul(&c).cmp_degrevlex(&b.mul(&c)), a.cmp_degrevlex(&b));
            prop_assert_eq!(a.cmp_degrevlex(&b) == Ordering::Equal, a == b);
        }

        #[test]
        fn multiplication_ring_laws(
            f in arb_homog(PrimeField::new(32003).unwrap(), 3, 1),
            g in arb_homog(PrimeField::new(32003).unwrap(), 3, 2),
            h in arb_homog(PrimeField::new(32003).unwrap(), 3, 1),
        ) {
            prop_assert_eq!(f.mul(&g), g.mul(&f));
            prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
            let fg = f.mul(&g);
            if !f.is_zero() && !g.is_zero() {
                prop_assert_eq!(fg.homogeneous_degree(), Some(3));
            }
            prop_assert_eq!(f.mul(&g.add(&h.mul(&h))), fg.add(&f.mul(&h.mul(&h))));
        }
    }
}
