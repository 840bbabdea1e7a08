//! Minimal graded free resolutions, syzygy modules and Betti tables.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::free::{FreeModule, ModuleMap};
use crate::groebner::{run_engine, EngineOptions, GroebnerBasis, Input, ModVec, Role};
use crate::module::{ideal_multiples, kernel_generators, minimal_subset, FPModule};
use crate::ring::RingRef;

/// Which ring a resolution is computed over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Over {
    /// The ambient polynomial ring `S`; resolutions are finite.
    Ambient,
    /// The module's own ring `R`; resolutions are truncated.
    Ring,
}

/// `0 <- F_0 <-d_1- F_1 <- ... <-d_L- F_L`, minimal.
#[derive(Clone, Debug)]
pub struct Resolution {
    ring: RingRef,
    modules: Vec<FreeModule>,
    maps: Vec<ModuleMap>,
    complete: bool,
    truncated_at: Option<usize>,
}

/// Graded Betti numbers: row `i` lists `(internal degree, multiplicity)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    pub rows: Vec<Vec<(i32, usize)>>,
}

impl BettiTable {
    pub fn totals(&self) -> Vec<usize> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|e| e.1).sum())
            .collect()
    }
}

/// Outcome of re-verifying a resolution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub composites_zero: bool,
    pub exact: bool,
    pub minimal: bool,
    /// First homological degree where a check failed.
    pub first_failure: Option<usize>,
}

impl Certificate {
    pub fn ok(&self) -> bool {
        self.composites_zero && self.exact && self.minimal
    }
}

fn vectors_of(map: &ModuleMap) -> Vec<(ModVec, i32)> {
    map.column_vectors()
        .into_iter()
        .zip(map.source().degrees().iter().copied())
        .collect()
}

fn submodule_gb(ring: &RingRef, degrees: &[i32], gens: &[(ModVec, i32)]) -> GroebnerBasis {
    let inputs: Vec<Input> = gens
        .iter()
        .cloned()
        .chain(ideal_multiples(ring, degrees))
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
        EngineOptions::default(),
    );
    GroebnerBasis::from_engine(
        ring.field(),
        ring.nvars(),
        degrees.to_vec(),
        out.basis,
        false,
    )
}

impl Resolution {
    fn start(m: &FPModule) -> Resolution {
        let mp = m.minimal_presentation();
        let ring = mp.ring().clone();
        let f0 = mp.presentation().target().clone();
        let d1 = mp.presentation().clone();
        let complete = d1.ncols() == 0;
        Resolution {
            ring,
            modules: vec![f0],
            maps: vec![],
            complete,
            truncated_at: None,
        }
        .with_first(d1)
    }

    fn with_first(mut self, d1: ModuleMap) -> Resolution {
        if !self.complete {
            self.modules.push(d1.source().clone());
            self.maps.push(d1);
        }
        self
    }

    /// Appends the next map (minimal generators of the last kernel).
    fn step(&mut self) {
        if self.complete {
            return;
        }
        let last = self.maps.last().expect("non-empty when incomplete");
        let src = last.source().degrees().to_vec();
        let phi = last.column_vectors();
        let kernel = kernel_generators(&self.ring, &src, &phi, last.target().degrees(), &[]);
        let keep = minimal_subset(&self.ring, &src, &kernel, &[]);
        if keep.is_empty() {
            self.complete = true;
            return;
        }
        let vecs: Vec<ModVec> = keep.iter().map(|&k| kernel[k].0.clone()).collect();
        let degs: Vec<i32> = keep.iter().map(|&k| kernel[k].1).collect();
        let d = ModuleMap::from_modvecs(self.ring.clone(), last.source().clone(), &vecs, degs);
        self.modules.push(d.source().clone());
        self.maps.push(d);
    }

    fn extend_to(&mut self, bound: usize) {
        while !self.complete && self.maps.len() < bound {
            self.step();
        }
        // the kernel of the last map may already be known to vanish
        if !self.complete && self.maps.len() == bound && self.ring.is_polynomial_ring() {
            let n = self.ring.nvars();
            if self.maps.len() >= n {
                self.complete = true;
            }
        }
    }

    /// Copy cut down to at most `bound` maps.
    fn truncated(&self, bound: usize) -> Resolution {
        let len = self.maps.len().min(bound);
        let complete = self.complete && self.maps.len() <= bound;
        Resolution {
            ring: self.ring.clone(),
            modules: self.modules[..=len].to_vec(),
            maps: self.maps[..len].to_vec(),
            complete,
            truncated_at: if complete { None } else { Some(bound) },
        }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    /// Number of maps computed.
    pub fn length(&self) -> usize {
        self.maps.len()
    }

    pub fn maps(&self) -> &[ModuleMap] {
        &self.maps
    }

    /// `d_i` for `1 <= i <= length`.
    pub fn map(&self, i: usize) -> &ModuleMap {
        &self.maps[i - 1]
    }

    pub fn modules(&self) -> &[FreeModule] {
        &self.modules
    }

    /// `F_i`; zero past the end of a complete resolution.
    pub fn module(&self, i: usize) -> Result<FreeModule> {
        if i < self.modules.len() {
            Ok(self.modules[i].clone())
        } else if self.complete {
            Ok(FreeModule::default())
        } else {
            Err(Error::Bound {
                needed: i,
                available: self.maps.len(),
            })
        }
    }

    /// `d_i: F_i -> F_{i-1}`, the zero map past the end of a complete resolution.
    pub fn differential(&self, i: usize) -> Result<ModuleMap> {
        if i == 0 {
            return Ok(ModuleMap::zero(
                self.ring.clone(),
                self.modules[0].clone(),
                FreeModule::default(),
            ));
        }
        if i <= self.maps.len() {
            return Ok(self.maps[i - 1].clone());
        }
        let src = self.module(i)?;
        let tgt = self.module(i - 1)?;
        Ok(ModuleMap::zero(self.ring.clone(), src, tgt))
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn truncated_at(&self) -> Option<usize> {
        self.truncated_at
    }

    pub fn is_minimal(&self) -> bool {
        self.maps.iter().all(|m| m.is_minimal())
    }

    pub fn betti_table(&self) -> BettiTable {
        let rows = self
            .modules
            .iter()
            .map(|f| {
                let mut degs = f.degrees().to_vec();
                degs.sort_unstable();
                let mut row: Vec<(i32, usize)> = Vec::new();
                for d in degs {
                    match row.last_mut() {
                        Some((e, c)) if *e == d => *c += 1,
                        _ => row.push((d, 1)),
                    }
                }
                row
            })
            .collect();
        BettiTable { rows }
    }

    /// `Omega_i = coker(d_{i+1})`, presented on `F_i`.
    pub fn syzygy(&self, i: usize) -> Result<FPModule> {
        let d = self.differential(i + 1)?;
        Ok(FPModule::from_map_unchecked(self.ring.clone(), d, true))
    }

    /// Re-verifies `d_i d_{i+1} = 0`, exactness at every interior `F_i`
    /// (and at `F_L` for complete resolutions), and minimality.
    pub fn certify(&self) -> Certificate {
        let mut cert = Certificate {
            composites_zero: true,
            exact: true,
            minimal: self.is_minimal(),
            first_failure: None,
        };
        let note = |i: usize, c: &mut Certificate| {
            if c.first_failure.is_none_or(|f| i < f) {
                c.first_failure = Some(i);
            }
        };
        for i in 1..self.maps.len() {
            let comp = self.maps[i - 1]
                .compose(&self.maps[i])
                .expect("consecutive maps");
            if !comp.is_zero() {
                cert.composites_zero = false;
                note(i, &mut cert);
            }
        }
        let last = if self.complete {
            self.maps.len()
        } else {
            self.maps.len().saturating_sub(1)
        };
        for i in 1..=last {
            let d = &self.maps[i - 1];
            let src = d.source().degrees();
            let kernel = kernel_generators(
                &self.ring,
                src,
                &d.column_vectors(),
                d.target().degrees(),
                &[],
            );
            let image = if i < self.maps.len() {
                vectors_of(&self.maps[i])
            } else {
                vec![]
            };
            let gb = submodule_gb(&self.ring, src, &image);
            if !kernel.iter().all(|(v, _)| gb.contains(v)) {
                cert.exact = false;
                note(i, &mut cert);
            }
        }
        if !cert.minimal {
            let i = self.maps.iter().position(|m| !m.is_minimal()).unwrap() + 1;
            note(i, &mut cert);
        }
        cert
    }
}

/// Minimal free resolution of `m` with at most `length_bound` maps.
pub fn free_resolution(m: &FPModule, length_bound: usize, over: Over) -> Resolution {
    match over {
        Over::Ambient => {
            let full = ambient_resolution(m);
            full.truncated(length_bound)
        }
        Over::Ring => {
            if m.ring().is_polynomial_ring() {
                return ambient_resolution(m).truncated(length_bound);
            }
            let mut guard = m.ring_resolution_cache().lock().unwrap();
            let res = guard.get_or_insert_with(|| Resolution::start(m));
            res.extend_to(length_bound);
            res.truncated(length_bound)
        }
    }
}

fn ambient_resolution(m: &FPModule) -> &Resolution {
    m.ambient_resolution_cache().get_or_init(|| {
        let s = m.as_ambient();
        let mut res = Resolution::start(&s);
        res.extend_to(s.ring().nvars() + 1);
        debug_assert!(res.complete);
        res
    })
}

/// `Omega_i(M)` over the module's own ring.
pub fn syzygy(m: &FPModule, i: usize) -> Result<FPModule> {
    if i == 0 {
        return Ok(m.minimal_presentation());
    }
    free_resolution(m, i + 1, Over::Ring).syzygy(i)
}

/// `Omega_i(M)` regarded over the ambient polynomial ring.
pub fn syzygy_ambient(m: &FPModule, i: usize) -> Result<FPModule> {
    if i == 0 {
        return Ok(m.as_ambient().minimal_presentation());
    }
    ambient_resolution(m).syzygy(i)
}

/// Length of the minimal resolution over the polynomial ring.
pub fn projective_dimension_ambient(m: &FPModule) -> usize {
    ambient_resolution(m).length()
}

/// Projective dimension over `R` when the resolution stops within `bound`.
pub fn projective_dimension(m: &FPModule, bound: usize) -> Option<usize> {
    let r = free_resolution(m, bound, Over::Ring);
    r.is_complete().then(|| r.length())
}

pub fn betti_table(res: &Resolution) -> BettiTable {
    res.betti_table()
}
