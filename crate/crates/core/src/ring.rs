//! Graded quotient rings `F_p[x_1..x_n] / I` and polynomial parsing.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::{ideal_basis, normal_form_poly};
use crate::poly::{Monomial, Poly, PrimeField, MAX_VARS};

/// `S / I` with `S = F_p[vars]` graded by total degree and `I` homogeneous.
#[derive(Clone, PartialEq, Eq)]
pub struct Ring {
    field: PrimeField,
    names: Vec<String>,
    relations: Vec<Poly>,
    gb: Vec<Poly>,
}

pub type RingRef = Arc<Ring>;

impl Ring {
    pub fn polynomial(p: u32, names: &[&str]) -> Result<RingRef> {
        Ring::quotient(p, names, &[])
    }

    /// Quotient ring from relation strings.
    pub fn quotient(p: u32, names: &[&str], relations: &[&str]) -> Result<RingRef> {
        let field = PrimeField::new(p)?;
        let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let ambient = Ring::from_parts(field, names.clone(), vec![])?;
        let rels = relations
            .iter()
            .map(|r| ambient.parse_poly(r))
            .collect::<Result<Vec<_>>>()?;
        Ok(Arc::new(Ring::from_parts(field, names, rels)?))
    }

    pub fn from_parts(field: PrimeField, names: Vec<String>, relations: Vec<Poly>) -> Result<Ring> {
        if names.len() > MAX_VARS {
            return Err(Error::Input(format!(
                "at most {MAX_VARS} variables supported"
            )));
        }
        for (i, n) in names.iter().enumerate() {
            if n.is_empty()
                || !n.chars().next().unwrap().is_ascii_alphabetic()
                || !n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
            {
                return Err(Error::Input(format!("invalid variable name {n:?}")));
            }
            if names[..i].contains(n) {
                return Err(Error::Input(format!("duplicate variable {n}")));
            }
        }
        let mut rels = Vec::new();
        for r in relations {
            if r.field() != field || r.nvars() != names.len() {
                return Err(Error::Ring("relation from a different ring".into()));
            }
            if r.is_zero() {
                continue;
            }
            let Some(d) = r.homogeneous_degree() else {
                return Err(Error::Grading(format!(
                    "relation {} is not homogeneous",
                    r.display_with(&names)
                )));
            };
            if d == 0 {
                return Err(Error::Input(
                    "relation is a unit; the ring would be zero".into(),
                ));
            }
            rels.push(r);
        }
        let gb = ideal_basis(&rels);
        Ok(Ring {
            field,
            names,
            relations: rels,
            gb,
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn characteristic(&self) -> u32 {
        self.field.characteristic()
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Relations as given.
    pub fn relations(&self) -> &[Poly] {
        &self.relations
    }

    /// Reduced Gröbner basis of the defining ideal.
    pub fn ideal_gb(&self) -> &[Poly] {
        &self.gb
    }

    pub fn is_polynomial_ring(&self) -> bool {
        self.gb.is_empty()
    }

    /// Same ring up to presentation of the ideal.
    pub fn same_as(&self, other: &Ring) -> bool {
        self.field == other.field && self.names == other.names && self.gb == other.gb
    }

    /// The polynomial ring this is a quotient of.
    pub fn ambient(&self) -> RingRef {
        Arc::new(Ring {
            field: self.field,
            names: self.names.clone(),
            relations: vec![],
            gb: vec![],
        })
    }

    /// `R / (x)`.
    pub fn with_relation(&self, x: &Poly) -> Result<RingRef> {
        let mut rels = self.relations.clone();
        rels.push(x.clone());
        Ok(Arc::new(Ring::from_parts(
            self.field,
            self.names.clone(),
            rels,
        )?))
    }

    /// Normal form modulo the defining ideal.
    pub fn reduce(&self, f: &Poly) -> Poly {
        if self.gb.is_empty() || f.is_zero() {
            f.clone()
        } else {
            normal_form_poly(f, &self.gb)
        }
    }

    pub fn zero(&self) -> Poly {
        Poly::zero(self.field, self.nvars())
    }

    pub fn one(&self) -> Poly {
        Poly::one(self.field, self.nvars())
    }

    pub fn var(&self, i: usize) -> Poly {
        Poly::var(self.field, self.nvars(), i)
    }

    pub fn constant(&self, c: i64) -> Poly {
        Poly::constant(self.field, self.nvars(), self.field.elem(c))
    }

    /// Krull dimension of `S / I`, from the leading-term ideal: the largest set
    /// of variables containing the support of no leading monomial.
    pub fn krull_dimension(&self) -> usize {
        let n = self.nvars();
        let leads: Vec<u32> = self
            .gb
            .iter()
            .map(|g| {
                let (m, _) = g.leading_term().unwrap();
                (0..n)
                    .filter(|&i| m.exponent(i) > 0)
                    .fold(0u32, |a, i| a | (1 << i))
            })
            .collect();
        (0u32..(1 << n))
            .filter(|set| leads.iter().all(|&s| s & !set != 0))
            .map(|set| set.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn display_poly(&self, f: &Poly) -> String {
        f.display_with(&self.names)
    }

    /// Parses `2*x^2 - x y + 3`. `*` is optional between factors.
    pub fn parse_poly(&self, s: &str) -> Result<Poly> {
        let toks = tokenize(s)?;
        let mut p = Parser {
            toks: &toks,
            at: 0,
            ring: self,
            input_len: s.len(),
        };
        let f = p.expr()?;
        if p.at < toks.len() {
            return Err(p.error("unexpected token"));
        }
        Ok(f)
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}[{}]", self.characteristic(), self.names.join(","))?;
        if !self.relations.is_empty() {
            let rels: Vec<String> = self
                .relations
                .iter()
                .map(|r| self.display_poly(r))
                .collect();
            write!(f, "/({})", rels.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(u64),
    Ident(String),
    Sym(char),
}

fn tokenize(s: &str) -> Result<Vec<(Tok, usize)>> {
    let mut out = Vec::new();
    let cs: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let mut v: u64 = 0;
            while i < cs.len() && cs[i].is_ascii_digit() {
                v = v
                    .checked_mul(10)
                    .and_then(|v| v.checked_add(cs[i].to_digit(10).unwrap() as u64))
                    .ok_or_else(|| parse_err(col, "number too large"))?;
                i += 1;
            }
            out.push((Tok::Num(v), col));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < cs.len() && (cs[i].is_ascii_alphanumeric() || cs[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(cs[start..i].iter().collect()), col));
        } else if "+-*^()".contains(c) {
            out.push((Tok::Sym(c), col));
            i += 1;
        } else {
            return Err(parse_err(col, &format!("unexpected character {c:?}")));
        }
    }
    Ok(out)
}

fn parse_err(column: usize, msg: &str) -> Error {
    Error::Parse {
        line: 1,
        column,
        message: msg.to_string(),
    }
}

struct Parser<'a> {
    toks: &'a [(Tok, usize)],
    at: usize,
    ring: &'a Ring,
    input_len: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        let col = self
            .toks
            .get(self.at)
            .map(|t| t.1)
            .unwrap_or(self.input_len + 1);
        parse_err(col, msg)
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.0)
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.ring.zero();
        let mut sign = match self.peek() {
            Some(Tok::Sym('-')) => {
                self.at += 1;
                -1
            }
            Some(Tok::Sym('+')) => {
                self.at += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            acc = if sign > 0 { acc.add(&t) } else { acc.sub(&t) };
            match self.peek() {
                Some(Tok::Sym('+')) => sign = 1,
                Some(Tok::Sym('-')) => sign = -1,
                _ => return Ok(acc),
            }
            self.at += 1;
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Sym('*')) => {
                    self.at += 1;
                    acc = acc.mul(&self.factor()?);
                }
                Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::Sym('(')) => {
                    acc = acc.mul(&self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn exponent(&mut self) -> Result<u32> {
        if let Some(Tok::Sym('^')) = self.peek() {
            self.at += 1;
            match self.peek() {
                Some(Tok::Num(e)) if *e <= 1000 => {
                    let e = *e as u32;
                    self.at += 1;
                    Ok(e)
                }
                _ => Err(self.error("expected a small non-negative exponent")),
            }
        } else {
            Ok(1)
        }
    }

    fn factor(&mut self) -> Result<Poly> {
        let base = match self.peek().cloned() {
            Some(Tok::Num(v)) => {
                self.at += 1;
                let f = self.ring.field;
                let c = f.elem((v % f.characteristic() as u64) as i64);
                Poly::constant(f, self.ring.nvars(), c)
            }
            Some(Tok::Ident(name)) => {
                let Some(i) = self.ring.names.iter().position(|n| *n == name) else {
                    return Err(self.error(&format!("unknown variable {name}")));
                };
                self.at += 1;
                self.ring.var(i)
            }
            Some(Tok::Sym('(')) => {
                self.at += 1;
                let e = self.expr()?;
                if self.peek() != Some(&Tok::Sym(')')) {
                    return Err(self.error("expected ')'"));
                }
                self.at += 1;
                e
            }
            _ => return Err(self.error("expected a number, variable or '('")),
        };
        let e = self.exponent()?;
        let mut acc = self.ring.one();
        for _ in 0..e {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }
}

/// A random homogeneous form of degree `d` with every coefficient drawn.
pub fn random_form(ring: &Ring, d: u32, rng: &mut impl rand::Rng) -> Poly {
    let f = ring.field();
    let p = f.characteristic();
    Poly::from_terms(
        f,
        ring.nvars(),
        Monomial::all_of_degree(ring.nvars(), d)
            .into_iter()
            .map(|m| (m, f.elem(rng.gen_range(0..p) as i64))),
    )
}
