//! Finite-length modules over `k[[H]]`, given by one action matrix per
//! minimal generator of `H`.
//!
//! Monomial modules (subquotients `E/F` of relative ideals) carry degree
//! labels on their basis; `Hom` modules and quotients by arbitrary subspaces
//! do not. Homomorphism spaces are solved as commutant systems, split by
//! degree shift when both sides are labeled.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ideal::{IdealError, RelativeIdeal};
use crate::linalg::{Matrix, Scalar, Subspace};
use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModuleError {
    #[error("modules live over different semigroups: {0} and {1}")]
    AmbientMismatch(String, String),
    #[error("degree {0} is not in the ideal")]
    NotInIdeal(i64),
    #[error("expected one action per generator {expected:?}, got {got:?}")]
    ActionMismatch { expected: Vec<i64>, got: Vec<i64> },
    #[error("action of t^{generator} has shape {rows}x{cols}, module dimension is {dimension}")]
    BadShape {
        generator: i64,
        rows: usize,
        cols: usize,
        dimension: usize,
    },
    #[error("actions of t^{0} and t^{1} do not commute")]
    NotCommuting(i64, i64),
    #[error("action of t^{0} is not nilpotent")]
    NotNilpotent(i64),
    #[error("action of t^{0} does not respect the basis degrees")]
    NotGraded(i64),
    #[error("the given vectors do not span a submodule")]
    NotSubmodule,
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

#[derive(Debug, Clone)]
pub struct FiniteLengthModule {
    ambient: Arc<NumericalSemigroup>,
    dimension: usize,
    basis_labels: Option<Vec<i64>>,
    /// Multiplication by `t^g`, in the order of `ambient.generators()`.
    actions: Vec<Matrix>,
}

impl FiniteLengthModule {
    /// Validates shapes, commutation and nilpotency; for labeled modules also
    /// that every action moves degree `z` to `z + g`.
    pub fn new(
        ambient: &Arc<NumericalSemigroup>,
        dimension: usize,
        basis_labels: Option<Vec<i64>>,
        actions: Vec<(i64, Matrix)>,
    ) -> Result<Self, ModuleError> {
        let gens = ambient.generators();
        let got: Vec<i64> = actions.iter().map(|(g, _)| *g).collect();
        if got != gens {
            return Err(ModuleError::ActionMismatch {
                expected: gens.to_vec(),
                got,
            });
        }
        for (g, a) in &actions {
            if a.rows() != dimension || a.cols() != dimension {
                return Err(ModuleError::BadShape {
                    generator: *g,
                    rows: a.rows(),
                    cols: a.cols(),
                    dimension,
                });
            }
        }
        if let Some(labels) = &basis_labels {
            assert_eq!(labels.len(), dimension, "one label per basis vector");
            for (g, a) in &actions {
                for r in 0..dimension {
                    for c in 0..dimension {
                        if !a[(r, c)].is_zero() && labels[r] != labels[c] + g {
                            return Err(ModuleError::NotGraded(*g));
                        }
                    }
                }
            }
        }
        for (i, (g, a)) in actions.iter().enumerate() {
            for (h, b) in &actions[i + 1..] {
                if a.mul(b) != b.mul(a) {
                    return Err(ModuleError::NotCommuting(*g, *h));
                }
            }
            // Graded actions raise degree, so they are nilpotent already.
            if basis_labels.is_none() && !is_nilpotent(a) {
                return Err(ModuleError::NotNilpotent(*g));
            }
        }
        Ok(Self {
            ambient: Arc::clone(ambient),
            dimension,
            basis_labels,
            actions: actions.into_iter().map(|(_, a)| a).collect(),
        })
    }

    pub fn zero(ambient: &Arc<NumericalSemigroup>) -> Self {
        Self {
            ambient: Arc::clone(ambient),
            dimension: 0,
            basis_labels: Some(Vec::new()),
            actions: ambient.generators().iter().map(|_| Matrix::zeros(0, 0)).collect(),
        }
    }

    pub fn ambient(&self) -> &Arc<NumericalSemigroup> {
        &self.ambient
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn basis_labels(&self) -> Option<&[i64]> {
        self.basis_labels.as_deref()
    }

    /// `(generator, matrix)` pairs.
    pub fn actions(&self) -> impl Iterator<Item = (i64, &Matrix)> {
        self.ambient.generators().iter().copied().zip(&self.actions)
    }

    pub fn action(&self, generator: i64) -> Option<&Matrix> {
        self.ambient
            .generators()
            .iter()
            .position(|&g| g == generator)
            .map(|i| &self.actions[i])
    }

    fn check_ambient(&self, other: &Self) -> Result<(), ModuleError> {
        if self.ambient == other.ambient {
            Ok(())
        } else {
            Err(ModuleError::AmbientMismatch(
                self.ambient.to_string(),
                other.ambient.to_string(),
            ))
        }
    }

    /// `r(M) = dim (0 :_M m)`, the intersection of the kernels of all actions.
    pub fn socle_dimension(&self) -> usize {
        if self.dimension == 0 {
            return 0;
        }
        let blocks: Vec<&Matrix> = self.actions.iter().collect();
        self.dimension - Matrix::vstack(&blocks, self.dimension).rank()
    }

    /// `ν(M) = dim M − dim mM`.
    pub fn minimal_generator_count(&self) -> usize {
        if self.dimension == 0 {
            return 0;
        }
        let blocks: Vec<&Matrix> = self.actions.iter().collect();
        self.dimension - Matrix::hstack(&blocks, self.dimension).rank()
    }

    /// Freeness over an Artinian quotient `A` of length `a_length`: a
    /// surjection `A^r -> M` with `ℓ(M) = r ℓ(A)` is an isomorphism. Rank 0
    /// means the zero module.
    pub fn is_free_over_quotient(&self, a_length: usize, expected_rank: usize) -> bool {
        if expected_rank == 0 {
            return self.dimension == 0;
        }
        self.dimension == expected_rank * a_length
            && self.minimal_generator_count() == expected_rank
    }

    /// `M / S` where `S` is the span of `vectors`, which must be a submodule.
    pub fn quotient_by(&self, vectors: &[Vec<Scalar>]) -> Result<Self, ModuleError> {
        let sub = Subspace::spanned_by(vectors, self.dimension);
        for a in &self.actions {
            if vectors.iter().any(|v| !sub.contains(&a.mul_vec(v))) {
                return Err(ModuleError::NotSubmodule);
            }
        }
        let keep = sub.complement_columns();
        let n = keep.len();
        let actions = self
            .ambient
            .generators()
            .iter()
            .zip(&self.actions)
            .map(|(&g, a)| {
                let mut m = Matrix::zeros(n, n);
                for (j, &col) in keep.iter().enumerate() {
                    let image = sub.reduce(&a.column(col));
                    for (i, &row) in keep.iter().enumerate() {
                        m[(i, j)] = image[row].clone();
                    }
                }
                (g, m)
            })
            .collect();
        Self::new(&self.ambient, n, None, actions)
    }

    /// Dense dump for debugging: dimension, labels and every action matrix.
    pub fn dump(&self) -> ModuleDump {
        ModuleDump {
            dimension: self.dimension,
            basis_labels: self.basis_labels.clone(),
            actions: self
                .actions()
                .map(|(g, a)| ActionDump {
                    generator: g,
                    matrix: (0..a.rows())
                        .map(|r| a.row(r).iter().map(|v| v.to_string()).collect())
                        .collect(),
                })
                .collect(),
        }
    }
}

fn is_nilpotent(a: &Matrix) -> bool {
    let n = a.rows();
    if n == 0 {
        return true;
    }
    // A^n = 0 iff A^(2^k) = 0 for 2^k >= n.
    let mut p = a.clone();
    let mut reach = 1;
    while reach < n {
        p = p.mul(&p);
        reach *= 2;
        if p.is_zero() {
            return true;
        }
    }
    p.is_zero()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleDump {
    pub dimension: usize,
    pub basis_labels: Option<Vec<i64>>,
    pub actions: Vec<ActionDump>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionDump {
    pub generator: i64,
    pub matrix: Vec<Vec<String>>,
}

/// The monomial module `E/F` for relative ideals `F ⊆ E`, with basis `E \ F`.
pub fn subquotient_module(
    outer: &RelativeIdeal,
    inner: &RelativeIdeal,
) -> Result<FiniteLengthModule, ModuleError> {
    let h = outer.ambient();
    if !inner.is_subset(outer)? {
        return Err(ModuleError::NotSubmodule);
    }
    let labels = outer.difference(inner)?;
    let index: HashMap<i64, usize> = labels.iter().enumerate().map(|(i, &z)| (z, i)).collect();
    let n = labels.len();
    let actions = h
        .generators()
        .iter()
        .map(|&g| {
            let mut m = Matrix::zeros(n, n);
            for (c, &z) in labels.iter().enumerate() {
                if let Some(&r) = index.get(&(z + g)) {
                    m[(r, c)] = Scalar::one();
                }
            }
            (g, m)
        })
        .collect();
    FiniteLengthModule::new(h, n, Some(labels), actions)
}

/// `E / (t^q)`: with `E = H` this is `R/Q`, with `E = I` it is `I/Q`.
pub fn quotient_module(ideal: &RelativeIdeal, q_degree: i64) -> Result<FiniteLengthModule, ModuleError> {
    if !ideal.contains(q_degree) {
        return Err(ModuleError::NotInIdeal(q_degree));
    }
    let q = RelativeIdeal::principal(ideal.ambient(), q_degree);
    subquotient_module(ideal, &q)
}

/// `Hom(M, N)` as a subspace of `dim N x dim M` matrices, with the module
/// structure given by post-composition.
#[derive(Debug, Clone)]
pub struct HomSpace {
    source_dim: usize,
    target_dim: usize,
    basis: Vec<Matrix>,
    /// Entry `(row, col)` on which each basis map is normalized to 1, with
    /// every other basis map vanishing there.
    coordinate_entries: Vec<(usize, usize)>,
    module: FiniteLengthModule,
}

impl HomSpace {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn module(&self) -> &FiniteLengthModule {
        &self.module
    }

    pub fn into_module(self) -> FiniteLengthModule {
        self.module
    }

    /// Coordinates of `phi` in the basis, or `None` if `phi` is not a
    /// module homomorphism.
    pub fn coordinates(&self, phi: &Matrix) -> Option<Vec<Scalar>> {
        if phi.rows() != self.target_dim || phi.cols() != self.source_dim {
            return None;
        }
        let coords: Vec<Scalar> = self
            .coordinate_entries
            .iter()
            .map(|&(r, c)| phi[(r, c)].clone())
            .collect();
        let mut rebuilt = Matrix::zeros(self.target_dim, self.source_dim);
        for (b, x) in self.basis.iter().zip(&coords) {
            if x.is_zero() {
                continue;
            }
            for r in 0..self.target_dim {
                for c in 0..self.source_dim {
                    if !b[(r, c)].is_zero() {
                        rebuilt[(r, c)] += x * &b[(r, c)];
                    }
                }
            }
        }
        (rebuilt == *phi).then_some(coords)
    }
}

/// Solves `phi A_M(g) = A_N(g) phi` for every generator `g`.
pub fn hom_space(source: &FiniteLengthModule, target: &FiniteLengthModule) -> Result<HomSpace, ModuleError> {
    source.check_ambient(target)?;
    let m = source.dimension;
    let n = target.dimension;
    let blocks: Vec<Vec<(usize, usize)>> = match (&source.basis_labels, &target.basis_labels) {
        (Some(ls), Some(lt)) => {
            let mut by_shift: BTreeMap<i64, Vec<(usize, usize)>> = BTreeMap::new();
            for (r, &zt) in lt.iter().enumerate() {
                for (c, &zs) in ls.iter().enumerate() {
                    by_shift.entry(zt - zs).or_default().push((r, c));
                }
            }
            by_shift.into_values().collect()
        }
        _ => vec![(0..n).flat_map(|r| (0..m).map(move |c| (r, c))).collect()],
    };

    let mut basis = Vec::new();
    let mut coordinate_entries = Vec::new();
    for unknowns in &blocks {
        let local: HashMap<(usize, usize), usize> =
            unknowns.iter().enumerate().map(|(i, &rc)| (rc, i)).collect();
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for (a_m, a_n) in source.actions.iter().zip(&target.actions) {
            // Equation for entry (r, i) of phi A_M - A_N phi.
            let mut equations: BTreeMap<(usize, usize), Vec<Scalar>> = BTreeMap::new();
            for (&(r, k), &idx) in &local {
                for i in 0..m {
                    let a = &a_m[(k, i)];
                    if !a.is_zero() {
                        equations
                            .entry((r, i))
                            .or_insert_with(|| vec![Scalar::zero(); unknowns.len()])[idx] += a;
                    }
                }
                // phi[(r, k)] feeds (A_N phi)[(s, k)] through A_N[(s, r)].
                for s in 0..n {
                    let b = &a_n[(s, r)];
                    if !b.is_zero() {
                        equations
                            .entry((s, k))
                            .or_insert_with(|| vec![Scalar::zero(); unknowns.len()])[idx] -= b;
                    }
                }
            }
            rows.extend(equations.into_values().filter(|row| row.iter().any(|v| !v.is_zero())));
        }
        let system = if rows.is_empty() {
            Matrix::zeros(0, unknowns.len())
        } else {
            Matrix::from_rows(&rows)
        };
        let ns = system.nullspace();
        for (v, f) in ns.basis.into_iter().zip(ns.free) {
            let mut phi = Matrix::zeros(n, m);
            for (val, &(r, c)) in v.into_iter().zip(unknowns) {
                phi[(r, c)] = val;
            }
            basis.push(phi);
            coordinate_entries.push(unknowns[f]);
        }
    }

    let mut space = HomSpace {
        source_dim: m,
        target_dim: n,
        basis,
        coordinate_entries,
        module: FiniteLengthModule::zero(&source.ambient),
    };
    let h = space.dimension();
    let actions = source
        .ambient
        .generators()
        .iter()
        .zip(&target.actions)
        .map(|(&g, a_n)| {
            let mut act = Matrix::zeros(h, h);
            for (j, phi) in space.basis.iter().enumerate() {
                let image = a_n.mul(phi);
                let coords = space
                    .coordinates(&image)
                    .expect("post-composition preserves homomorphisms");
                for (i, x) in coords.into_iter().enumerate() {
                    act[(i, j)] = x;
                }
            }
            (g, act)
        })
        .collect();
    space.module = FiniteLengthModule::new(&source.ambient, h, None, actions)?;
    Ok(space)
}

pub fn hom_module(source: &FiniteLengthModule, target: &FiniteLengthModule) -> Result<FiniteLengthModule, ModuleError> {
    hom_space(source, target).map(HomSpace::into_module)
}
