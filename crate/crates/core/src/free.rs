//! Graded free modules and homogeneous matrices between them.

use crate::error::{Error, Result};
use crate::groebner::ModVec;
use crate::poly::Poly;
use crate::ring::RingRef;

/// A graded free module `⊕ R(-a_j)`, stored by its generator degrees `a_j`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FreeModule {
    degrees: Vec<i32>,
}

impl FreeModule {
    pub fn new(degrees: Vec<i32>) -> Self {
        FreeModule { degrees }
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    /// Generator degrees (the twists).
    pub fn degrees(&self) -> &[i32] {
        &self.degrees
    }

    pub fn shifted(&self, by: i32) -> FreeModule {
        FreeModule::new(self.degrees.iter().map(|d| d + by).collect())
    }

    pub fn direct_sum(&self, other: &FreeModule) -> FreeModule {
        let mut d = self.degrees.clone();
        d.extend_from_slice(&other.degrees);
        FreeModule::new(d)
    }

    /// Tensor product, generator `(i, k)` at index `i * other.rank() + k`.
    pub fn tensor(&self, other: &FreeModule) -> FreeModule {
        let mut d = Vec::with_capacity(self.rank() * other.rank());
        for a in &self.degrees {
            for b in &other.degrees {
                d.push(a + b);
            }
        }
        FreeModule::new(d)
    }

    /// `Hom(F, R)` with negated degrees.
    pub fn dual(&self) -> FreeModule {
        FreeModule::new(self.degrees.iter().map(|d| -d).collect())
    }
}

/// A degree-preserving map `source -> target`; column `j` is the image of
/// the `j`-th source generator. Entries are kept reduced modulo the ring's
/// relations.
#[derive(Clone, Debug)]
pub struct ModuleMap {
    ring: RingRef,
    source: FreeModule,
    target: FreeModule,
    cols: Vec<Vec<Poly>>,
}

impl ModuleMap {
    /// Validates degrees: entry `(i, j)` must be zero or homogeneous of
    /// degree `source_j - target_i`.
    pub fn new(
        ring: RingRef,
        source: FreeModule,
        target: FreeModule,
        cols: Vec<Vec<Poly>>,
    ) -> Result<Self> {
        if cols.len() != source.rank() {
            return Err(Error::Shape(format!(
                "{} columns for a source of rank {}",
                cols.len(),
                source.rank()
            )));
        }
        let mut reduced = Vec::with_capacity(cols.len());
        for (j, col) in cols.into_iter().enumerate() {
            if col.len() != target.rank() {
                return Err(Error::Shape(format!(
                    "column {j} has {} entries, target rank {}",
                    col.len(),
                    target.rank()
                )));
            }
            let mut rc = Vec::with_capacity(col.len());
            for (i, e) in col.into_iter().enumerate() {
                if e.field() != ring.field() || e.nvars() != ring.nvars() {
                    return Err(Error::Ring(format!("entry ({i},{j}) from another ring")));
                }
                let e = ring.reduce(&e);
                if !e.is_zero() {
                    let want = source.degrees[j] - target.degrees[i];
                    match e.homogeneous_degree() {
                        Some(d) if d as i32 == want => {}
                        Some(d) => {
                            return Err(Error::Grading(format!(
                                "entry ({i},{j}) has degree {d}, expected {want}"
                            )))
                        }
                        None => {
                            return Err(Error::Grading(format!(
                                "entry ({i},{j}) is not homogeneous"
                            )))
                        }
                    }
                }
                rc.push(e);
            }
            reduced.push(rc);
        }
        Ok(ModuleMap {
            ring,
            source,
            target,
            cols: reduced,
        })
    }

    /// Builds a map from columns, reading each source degree off the column;
    /// zero columns are dropped.
    pub fn from_columns(ring: RingRef, target: FreeModule, cols: Vec<Vec<Poly>>) -> Result<Self> {
        let mut keep = Vec::new();
        let mut degs = Vec::new();
        for (j, col) in cols.into_iter().enumerate() {
            if col.len() != target.rank() {
                return Err(Error::Shape(format!(
                    "column {j} has {} entries, target rank {}",
                    col.len(),
                    target.rank()
                )));
            }
            let col: Vec<Poly> = col.iter().map(|e| ring.reduce(e)).collect();
            let Some((i, e)) = col.iter().enumerate().find(|(_, e)| !e.is_zero()) else {
                continue;
            };
            let Some(d) = e.homogeneous_degree() else {
                return Err(Error::Grading(format!(
                    "entry ({i},{j}) is not homogeneous"
                )));
            };
            degs.push(d as i32 + target.degrees[i]);
            keep.push(col);
        }
        ModuleMap::new(ring, FreeModule::new(degs), target, keep)
    }

    /// Map from sparse column vectors of known degrees.
    pub(crate) fn from_modvecs(
        ring: RingRef,
        target: FreeModule,
        vecs: &[ModVec],
        degrees: Vec<i32>,
    ) -> Self {
        let (f, n) = (ring.field(), ring.nvars());
        let cols = vecs
            .iter()
            .map(|v| v.to_polys(target.rank(), f, n))
            .collect();
        ModuleMap::new(ring, FreeModule::new(degrees), target, cols)
            .expect("homogeneous by construction")
    }

    pub fn zero(ring: RingRef, source: FreeModule, target: FreeModule) -> Self {
        let z = ring.zero();
        let cols = vec![vec![z; target.rank()]; source.rank()];
        ModuleMap {
            ring,
            source,
            target,
            cols,
        }
    }

    pub fn identity(ring: RingRef, module: FreeModule) -> Self {
        let n = module.rank();
        let cols = (0..n)
            .map(|j| {
                (0..n)
                    .map(|i| if i == j { ring.one() } else { ring.zero() })
                    .collect()
            })
            .collect();
        ModuleMap {
            ring,
            source: module.clone(),
            target: module,
            cols,
        }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn source(&self) -> &FreeModule {
        &self.source
    }

    pub fn target(&self) -> &FreeModule {
        &self.target
    }

    pub fn nrows(&self) -> usize {
        self.target.rank()
    }

    pub fn ncols(&self) -> usize {
        self.source.rank()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Poly {
        &self.cols[j][i]
    }

    pub fn column(&self, j: usize) -> &[Poly] {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[Vec<Poly>] {
        &self.cols
    }

    pub fn column_vectors(&self) -> Vec<ModVec> {
        self.cols.iter().map(|c| ModVec::from_polys(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.iter().all(|e| e.is_zero()))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &ModuleMap) -> Result<ModuleMap> {
        if other.target != self.source {
            return Err(Error::Shape("composition of incompatible maps".into()));
        }
        let cols = other
            .cols
            .iter()
            .map(|oc| {
                (0..self.nrows())
                    .map(|i| {
                        let mut acc = self.ring.zero();
                        for (k, b) in oc.iter().enumerate() {
                            if !b.is_zero() && !self.cols[k][i].is_zero() {
                                acc = acc.add(&self.cols[k][i].mul(b));
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        ModuleMap::new(
            self.ring.clone(),
            other.source.clone(),
            self.target.clone(),
            cols,
        )
    }

    /// `Hom(-, R)` of the map: `target* -> source*`, transposed matrix.
    pub fn dual(&self) -> ModuleMap {
        let cols = (0..self.nrows())
            .map(|i| (0..self.ncols()).map(|j| self.cols[j][i].clone()).collect())
            .collect();
        ModuleMap {
            ring: self.ring.clone(),
            source: self.target.dual(),
            target: self.source.dual(),
            cols,
        }
    }

    /// `self ⊗ id_F`, generator `(i, k)` at index `i * F.rank() + k`.
    pub fn tensor_identity(&self, f: &FreeModule) -> ModuleMap {
        let r = f.rank();
        let z = self.ring.zero();
        let mut cols = Vec::with_capacity(self.ncols() * r);
        for j in 0..self.ncols() {
            for k in 0..r {
                let mut col = vec![z.clone(); self.nrows() * r];
                for i in 0..self.nrows() {
                    col[i * r + k] = self.cols[j][i].clone();
                }
                cols.push(col);
            }
        }
        ModuleMap {
            ring: self.ring.clone(),
            source: self.source.tensor(f),
            target: self.target.tensor(f),
            cols,
        }
    }

    /// `id_F ⊗ self`, generator `(k, i)` at index `k * self.rank + i`.
    pub fn identity_tensor(&self, f: &FreeModule) -> ModuleMap {
        let r = f.rank();
        let (m, c) = (self.nrows(), self.ncols());
        let z = self.ring.zero();
        let mut cols = Vec::with_capacity(c * r);
        for k in 0..r {
            for j in 0..c {
                let mut col = vec![z.clone(); m * r];
                for i in 0..m {
                    col[k * m + i] = self.cols[j][i].clone();
                }
                cols.push(col);
            }
        }
        ModuleMap {
            ring: self.ring.clone(),
            source: f.tensor(&self.source),
            target: f.tensor(&self.target),
            cols,
        }
    }

    /// Columns of `self` followed by columns of `other` (same target).
    pub fn concat(&self, other: &ModuleMap) -> Result<ModuleMap> {
        if self.target != other.target {
            return Err(Error::Shape(
                "concatenating maps with different targets".into(),
            ));
        }
        let mut cols = self.cols.clone();
        cols.extend(other.cols.iter().cloned());
        Ok(ModuleMap {
            ring: self.ring.clone(),
            source: self.source.direct_sum(&other.source),
            target: self.target.clone(),
            cols,
        })
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &ModuleMap) -> ModuleMap {
        let z = self.ring.zero();
        let mut cols = Vec::new();
        for c in &self.cols {
            let mut col = c.clone();
            col.extend(std::iter::repeat_n(z.clone(), other.nrows()));
            cols.push(col);
        }
        for c in &other.cols {
            let mut col = vec![z.clone(); self.nrows()];
            col.extend(c.iter().cloned());
            cols.push(col);
        }
        ModuleMap {
            ring: self.ring.clone(),
            source: self.source.direct_sum(&other.source),
            target: self.target.direct_sum(&other.target),
            cols,
        }
    }

    /// The same matrix viewed over another ring with the same variables
    /// (entries re-reduced).
    pub fn over_ring(&self, ring: RingRef) -> Result<ModuleMap> {
        ModuleMap::new(
            ring,
            self.source.clone(),
            self.target.clone(),
            self.cols.clone(),
        )
    }

    /// Every entry in the maximal ideal (no nonzero constants).
    pub fn is_minimal(&self) -> bool {
        self.cols
            .iter()
            .all(|c| c.iter().all(|e| e.constant_term().is_zero()))
    }

    /// Drops the listed columns.
    pub fn select_columns(&self, keep: &[usize]) -> ModuleMap {
        ModuleMap {
            ring: self.ring.clone(),
            source: FreeModule::new(keep.iter().map(|&j| self.source.degrees[j]).collect()),
            target: self.target.clone(),
            cols: keep.iter().map(|&j| self.cols[j].clone()).collect(),
        }
    }

    /// Renders rows of the matrix.
    pub fn display_rows(&self) -> Vec<Vec<String>> {
        (0..self.nrows())
            .map(|i| {
                (0..self.ncols())
                    .map(|j| self.ring.display_poly(&self.cols[j][i]))
                    .collect()
            })
            .collect()
    }

    pub(crate) fn from_parts_unchecked(
        ring: RingRef,
        source: FreeModule,
        target: FreeModule,
        cols: Vec<Vec<Poly>>,
    ) -> Self {
        ModuleMap {
            ring,
            source,
            target,
            cols,
        }
    }
}
