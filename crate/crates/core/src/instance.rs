//! The instance file format.
//!
//! ```text
//! # comments run to the end of the line
//! ring
//!   char 32003
//!   vars x y z
//!   relation x^2 + y^2 + z^2
//! module M
//!   twists 0 0
//!   relation x, y        # one relation column, one entry per generator
//! module N
//!   relation z
//! pair M N
//! family small
//!   vars 3
//!   relations 1
//!   count 10
//! options
//!   bound 8
//! ```
//!
//! A module without a `twists` line has one generator in degree 0.

use crate::error::{Error, Result};
use crate::module::FPModule;
use crate::poly::Poly;
use crate::ring::{Ring, RingRef};
use crate::suite::{InstanceFamily, PairMode};

#[derive(Clone, Debug)]
pub struct ModuleDef {
    pub name: String,
    pub twists: Vec<i32>,
    pub relations: Vec<Vec<Poly>>,
    pub module: FPModule,
}

impl PartialEq for ModuleDef {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.twists == other.twists && self.relations == other.relations
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FileOptions {
    pub bound: Option<usize>,
    pub d_max: Option<u32>,
    pub seed: Option<u64>,
    pub max_degree: Option<u32>,
}

#[derive(Clone, Debug)]
pub struct InstanceFile {
    pub ring: RingRef,
    pub modules: Vec<ModuleDef>,
    pub pairs: Vec<(String, String)>,
    pub families: Vec<InstanceFamily>,
    pub options: FileOptions,
}

impl PartialEq for InstanceFile {
    fn eq(&self, other: &Self) -> bool {
        *self.ring == *other.ring
            && self.modules == other.modules
            && self.pairs == other.pairs
            && self.families == other.families
            && self.options == other.options
    }
}

impl InstanceFile {
    pub fn module(&self, name: &str) -> Result<&FPModule> {
        self.modules
            .iter()
            .find(|m| m.name == name)
            .map(|m| &m.module)
            .ok_or_else(|| Error::Name(format!("no module named {name}")))
    }

    pub fn to_text(&self) -> String {
        let mut s = ring_block(&self.ring);
        for m in &self.modules {
            s.push_str(&module_lines(&self.ring, &m.name, &m.twists, &m.relations));
        }
        for (a, b) in &self.pairs {
            s.push_str(&format!("pair {a} {b}\n"));
        }
        for f in &self.families {
            s.push_str(&family_block(f));
        }
        let o = &self.options;
        if *o != FileOptions::default() {
            s.push_str("options\n");
            if let Some(v) = o.bound {
                s.push_str(&format!("  bound {v}\n"));
            }
            if let Some(v) = o.d_max {
                s.push_str(&format!("  dmax {v}\n"));
            }
            if let Some(v) = o.seed {
                s.push_str(&format!("  seed {v}\n"));
            }
            if let Some(v) = o.max_degree {
                s.push_str(&format!("  max_degree {v}\n"));
            }
        }
        s
    }
}

pub fn ring_block(ring: &RingRef) -> String {
    let mut s = format!(
        "ring\n  char {}\n  vars {}\n",
        ring.characteristic(),
        ring.names().join(" ")
    );
    for r in ring.relations() {
        s.push_str(&format!("  relation {}\n", ring.display_poly(r)));
    }
    s
}

/// A module block holding the module's current presentation.
pub fn module_block(name: &str, m: &FPModule) -> String {
    let pres = m.presentation();
    module_lines(m.ring(), name, pres.target().degrees(), pres.columns())
}

fn module_lines(ring: &RingRef, name: &str, twists: &[i32], rels: &[Vec<Poly>]) -> String {
    let tw: Vec<String> = twists.iter().map(|t| t.to_string()).collect();
    let mut s = format!("module {name}\n  twists {}\n", tw.join(" "));
    for col in rels {
        let entries: Vec<String> = col.iter().map(|e| ring.display_poly(e)).collect();
        s.push_str(&format!("  relation {}\n", entries.join(", ")));
    }
    s
}

fn family_block(f: &InstanceFamily) -> String {
    format!(
        "family {}\n  char {}\n  vars {}\n  relations {}\n  relation_degree {}\n  gens {}\n  rels {}\n  max_deg {}\n  syzygy {}\n  pairing {}\n  count {}\n  seed {}\n",
        f.name,
        f.characteristic,
        f.nvars,
        f.relations,
        f.relation_degree,
        f.module.gens,
        f.module.rels,
        f.module.max_deg,
        f.module.syzygy,
        f.pair.name(),
        f.count,
        f.seed
    )
}

fn perr(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Whitespace-separated words with their 1-based columns.
fn words(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

fn number<T: std::str::FromStr>(line: usize, w: &[(usize, &str)], key: &str) -> Result<T> {
    match w {
        [_, (col, v)] => v
            .parse()
            .map_err(|_| perr(line, *col, format!("{key} expects a non-negative integer"))),
        [(col, _)] => Err(perr(
            line,
            col + key.len(),
            format!("{key} expects a value"),
        )),
        [_, _, (col, _), ..] => Err(perr(line, *col, format!("{key} takes one value"))),
        [] => unreachable!(),
    }
}

/// Parses `text` against `ring`, shifting error columns to the file.
fn poly_at(ring: &Ring, text: &str, line: usize, offset: usize) -> Result<Poly> {
    ring.parse_poly(text).map_err(|e| match e {
        Error::Parse {
            column, message, ..
        } => perr(line, offset + column - 1, message),
        e => e,
    })
}

enum Block {
    None,
    Ring { line: usize },
    Module(usize),
    Family(usize),
    Options,
}

struct PendingRing {
    characteristic: Option<u32>,
    vars: Option<Vec<String>>,
    relations: Vec<(usize, usize, String)>,
}

struct PendingModule {
    name: String,
    line: usize,
    twists: Option<Vec<i32>>,
    relations: Vec<Vec<Poly>>,
}

/// Parses and validates an instance file.
pub fn parse_instance_file(text: &str) -> Result<InstanceFile> {
    let mut block = Block::None;
    let mut pending_ring: Option<PendingRing> = None;
    let mut ring: Option<RingRef> = None;
    let mut modules: Vec<PendingModule> = Vec::new();
    let mut built: Vec<ModuleDef> = Vec::new();
    let mut pairs: Vec<(usize, String, String)> = Vec::new();
    let mut families: Vec<InstanceFamily> = Vec::new();
    let mut options = FileOptions::default();

    for (ln, raw) in text.lines().enumerate() {
        let line = ln + 1;
        let content = raw.split('#').next().unwrap();
        let w = words(content);
        let Some(&(col, key)) = w.first() else {
            continue;
        };
        match key {
            "ring" => {
                if pending_ring.is_some() || ring.is_some() {
                    return Err(perr(line, col, "second ring block"));
                }
                if w.len() > 1 {
                    return Err(perr(line, w[1].0, "ring takes no arguments"));
                }
                pending_ring = Some(PendingRing {
                    characteristic: None,
                    vars: None,
                    relations: Vec::new(),
                });
                block = Block::Ring { line };
                continue;
            }
            "module" | "pair" | "family" | "options" => {
                if let Some(p) = pending_ring.take() {
                    let Block::Ring { line: rl } = block else {
                        unreachable!()
                    };
                    ring = Some(finish_ring(p, rl)?);
                }
            }
            _ => {}
        }
        match key {
            "module" => {
                let Some(r) = &ring else {
                    return Err(perr(line, col, "module block before the ring block"));
                };
                let name = match w.as_slice() {
                    [_, (_, n)] => n.to_string(),
                    [_] => return Err(perr(line, col + 6, "module needs a name")),
                    _ => return Err(perr(line, w[2].0, "module takes one name")),
                };
                if modules.iter().any(|m| m.name == name) {
                    return Err(perr(line, w[1].0, format!("duplicate module {name}")));
                }
                let _ = r;
                modules.push(PendingModule {
                    name,
                    line,
                    twists: None,
                    relations: Vec::new(),
                });
                block = Block::Module(modules.len() - 1);
            }
            "pair" => {
                if w.len() != 3 {
                    return Err(perr(line, col, "pair needs two module names"));
                }
                pairs.push((line, w[1].1.to_string(), w[2].1.to_string()));
                block = Block::None;
            }
            "family" => {
                let name = match w.as_slice() {
                    [_, (_, n)] => n.to_string(),
                    _ => return Err(perr(line, col, "family takes one name")),
                };
                families.push(InstanceFamily::new(&name, 2, 0, PairMode::Random, 1, 0));
                block = Block::Family(families.len() - 1);
            }
            "options" => block = Block::Options,
            _ => match &mut block {
                Block::None => {
                    return Err(perr(
                        line,
                        col,
                        format!("unexpected {key:?} outside a block"),
                    ))
                }
                Block::Ring { .. } => {
                    let p = pending_ring.as_mut().unwrap();
                    match key {
                        "char" => p.characteristic = Some(number(line, &w, key)?),
                        "vars" => {
                            if w.len() < 2 {
                                return Err(perr(line, col + 4, "vars needs at least one name"));
                            }
                            p.vars = Some(w[1..].iter().map(|(_, v)| v.to_string()).collect());
                        }
                        "relation" => {
                            let off = col + key.len();
                            p.relations
                                .push((line, off, content[off - 1..].to_string()));
                        }
                        _ => return Err(perr(line, col, format!("unknown ring field {key:?}"))),
                    }
                }
                Block::Module(i) => {
                    let r = ring.as_ref().unwrap();
                    let m = &mut modules[*i];
                    match key {
                        "twists" => {
                            let mut t = Vec::new();
                            for (c, v) in &w[1..] {
                                t.push(
                                    v.parse()
                                        .map_err(|_| perr(line, *c, "twists must be integers"))?,
                                );
                            }
                            if t.is_empty() {
                                return Err(perr(
                                    line,
                                    col + 6,
                                    "twists needs at least one degree",
                                ));
                            }
                            if !m.relations.is_empty() {
                                return Err(perr(line, col, "twists must come before relations"));
                            }
                            m.twists = Some(t);
                        }
                        "relation" => {
                            let rank = m.twists.as_ref().map_or(1, |t| t.len());
                            let mut off = col + key.len();
                            let rest = &content[off - 1..];
                            let mut entries = Vec::new();
                            for piece in rest.split(',') {
                                entries.push(poly_at(r, piece, line, off)?);
                                off += piece.len() + 1;
                            }
                            if entries.len() != rank {
                                return Err(perr(
                                    line,
                                    col,
                                    format!(
                                        "relation has {} entries, module {} has {rank} generators",
                                        entries.len(),
                                        m.name
                                    ),
                                ));
                            }
                            m.relations.push(entries);
                        }
                        _ => return Err(perr(line, col, format!("unknown module field {key:?}"))),
                    }
                }
                Block::Family(i) => {
                    let f = &mut families[*i];
                    match key {
                        "char" => f.characteristic = number(line, &w, key)?,
                        "vars" => f.nvars = number(line, &w, key)?,
                        "relations" => f.relations = number(line, &w, key)?,
                        "relation_degree" => f.relation_degree = number(line, &w, key)?,
                        "gens" => f.module.gens = number(line, &w, key)?,
                        "rels" => f.module.rels = number(line, &w, key)?,
                        "max_deg" => f.module.max_deg = number(line, &w, key)?,
                        "syzygy" => f.module.syzygy = number(line, &w, key)?,
                        "count" => f.count = number(line, &w, key)?,
                        "seed" => f.seed = number(line, &w, key)?,
                        "pairing" => {
                            let v: String = number(line, &w, key)?;
                            f.pair = PairMode::from_name(&v).ok_or_else(|| {
                                perr(line, w[1].0, "pairing is regular_sequence or random")
                            })?;
                        }
                        _ => return Err(perr(line, col, format!("unknown family field {key:?}"))),
                    }
                    validate_family(f, line, col)?;
                }
                Block::Options => match key {
                    "bound" => options.bound = Some(number(line, &w, key)?),
                    "dmax" => options.d_max = Some(number(line, &w, key)?),
                    "seed" => options.seed = Some(number(line, &w, key)?),
                    "max_degree" => options.max_degree = Some(number(line, &w, key)?),
                    _ => return Err(perr(line, col, format!("unknown option {key:?}"))),
                },
            },
        }
    }
    if let Some(p) = pending_ring.take() {
        let Block::Ring { line: rl } = block else {
            unreachable!()
        };
        ring = Some(finish_ring(p, rl)?);
    }
    let Some(ring) = ring else {
        return Err(perr(1, 1, "missing ring block"));
    };
    for m in modules {
        let twists = m.twists.unwrap_or_else(|| vec![0]);
        let module = FPModule::from_relations(ring.clone(), twists.clone(), m.relations.clone())
            .map_err(|e| match e {
                Error::Grading(msg) => {
                    Error::Grading(format!("module {} (line {}): {msg}", m.name, m.line))
                }
                e => e,
            })?;
        built.push(ModuleDef {
            name: m.name,
            twists,
            relations: m.relations,
            module,
        });
    }
    let mut out_pairs = Vec::new();
    for (line, a, b) in pairs {
        for n in [&a, &b] {
            if !built.iter().any(|m| &m.name == n) {
                return Err(Error::Name(format!("line {line}: no module named {n}")));
            }
        }
        out_pairs.push((a, b));
    }
    Ok(InstanceFile {
        ring,
        modules: built,
        pairs: out_pairs,
        families,
        options,
    })
}

fn validate_family(f: &InstanceFamily, line: usize, col: usize) -> Result<()> {
    if f.nvars == 0 || f.nvars > 8 {
        return Err(perr(line, col, "family vars must be between 1 and 8"));
    }
    if f.module.gens == 0 {
        return Err(perr(line, col, "family gens must be positive"));
    }
    Ok(())
}

fn finish_ring(p: PendingRing, line: usize) -> Result<RingRef> {
    let characteristic = p.characteristic.unwrap_or(32003);
    let Some(vars) = p.vars else {
        return Err(perr(line, 1, "ring block needs a vars line"));
    };
    let refs: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
    let s = Ring::polynomial(characteristic, &refs).map_err(|e| match e {
        Error::Input(m) => perr(line, 1, m),
        e => e,
    })?;
    let mut rels = Vec::new();
    for (l, off, text) in &p.relations {
        let f = poly_at(&s, text, *l, *off)?;
        if !f.is_zero() && f.homogeneous_degree().is_none() {
            return Err(Error::Grading(format!(
                "ring block (line {l}): relation {} is not homogeneous",
                text.trim()
            )));
        }
        rels.push(f);
    }
    let r = Ring::from_parts(s.field(), vars, rels).map_err(|e| match e {
        Error::Grading(m) => Error::Grading(format!("ring block (line {line}): {m}")),
        e => e,
    })?;
    Ok(std::sync::Arc::new(r))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_file() {
        let f = parse_instance_file("ring\n  char 32003\n  vars x y\nmodule M\n  relation x\n")
            .unwrap();
        let m = f.module("M").unwrap();
        assert_eq!(m.hilbert_function(3), vec![1, 1, 1, 1]);
        assert!(matches!(f.module("N"), Err(Error::Name(_))));
    }

    #[test]
    fn errors() {
        assert_eq!(
            parse_instance_file("").unwrap_err(),
            Error::Parse {
                line: 1,
                column: 1,
                message: "missing ring block".into()
            }
        );
        let e = parse_instance_file("ring\n  vars x y\n  relation x + y^2\n").unwrap_err();
        assert!(
            matches!(e, Error::Grading(ref m) if m.contains("ring block")),
            "{e:?}"
        );
        let e =
            parse_instance_file("ring\n  vars x y\nmodule M\n  relation x + y^2\n").unwrap_err();
        assert!(
            matches!(e, Error::Grading(ref m) if m.contains("module M")),
            "{e:?}"
        );
        let e = parse_instance_file("ring\n  vars x y\nmodule M\n  relation x + q\n").unwrap_err();
        assert!(
            matches!(
                e,
                Error::Parse {
                    line: 4,
                    column: 16,
                    ..
                }
            ),
            "{e:?}"
        );
        let e = parse_instance_file("ring\n  vars x y\npair M M\n").unwrap_err();
        assert!(matches!(e, Error::Name(_)));
        let e = parse_instance_file("module M\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, .. }));
    }

    #[test]
    fn round_trip() {
        let text = "ring\n char 101\n vars x y z\n relation x*y - z^2\nmodule M\n twists 0 1\n relation y, 0\n relation x^2, -3 z\npair M M\nfamily f\n vars 3\n relations 1\n pairing regular_sequence\n count 4\noptions\n bound 5\n seed 9\n";
        let a = parse_instance_file(text).unwrap();
        let b = parse_instance_file(&a.to_text()).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_text(), b.to_text());
        assert_eq!(a.families[0].pair, PairMode::RegularSequence);
        assert_eq!(a.options.bound, Some(5));
    }
}
