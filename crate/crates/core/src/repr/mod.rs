//! Finite-dimensional weight modules for `sl3`/`gl3` over `F_p`.
//!
//! A [`Representation`] stores one action matrix per basis element of the
//! algebra (acting on column vectors: column `j` of `actions[x]` is `x . v_j`)
//! together with an integer weight for every basis vector. Weights are kept
//! over the integers so that the torus grading of cochains is well defined
//! beyond its reduction mod p.

mod character;
mod construct;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::{FieldError, PrimeField};
use crate::liealg::{basis, AlgebraKind, LieAlgebraSpec, Weight};
use crate::linalg::{self, LinalgError, SparseMat, SparseVec, SubspaceBasis};

pub use character::Character;
pub use construct::{
    coordinate_ring_module, generated_submodule, induced_module, simple_module, singular_vectors, trivial_module, verma,
    verma_index, verma_map, verma_quotient, weyl_generators, weyl_module,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReprError {
    #[error("invalid module selector `{0}` (expected trivial or simple|weyl|induced|verma:r,s)")]
    BadSelector(String),
    #[error("{0} modules have no standalone constructor")]
    NotConstructible(&'static str),
    #[error("module is defined over F_{found}, expected F_{expected}")]
    PrimeMismatch { expected: u32, found: u32 },
    #[error("weight ({r},{s}) is not restricted for p = {p}")]
    WeightOutOfRange { r: i64, s: i64, p: u32 },
    #[error("subspace is not stable under the action of {0}")]
    NotASubmodule(&'static str),
    #[error("subspace is not spanned by weight vectors")]
    NotWeightHomogeneous,
    #[error("module is for {found}, expected {expected}")]
    AlgebraMismatch {
        expected: AlgebraKind,
        found: AlgebraKind,
    },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModuleFamily {
    Trivial,
    Verma,
    Weyl,
    Simple,
    Induced,
    Dual,
    Quotient,
    Submodule,
}

impl ModuleFamily {
    pub fn name(&self) -> &'static str {
        match self {
            ModuleFamily::Trivial => "trivial",
            ModuleFamily::Verma => "verma",
            ModuleFamily::Weyl => "weyl",
            ModuleFamily::Simple => "simple",
            ModuleFamily::Induced => "induced",
            ModuleFamily::Dual => "dual",
            ModuleFamily::Quotient => "quotient",
            ModuleFamily::Submodule => "submodule",
        }
    }
}

/// Where a module came from: family plus the `(r, s)` it was built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ModuleLabel {
    pub family: ModuleFamily,
    pub weight: Weight,
}

impl fmt::Display for ModuleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            ModuleFamily::Trivial => f.write_str("trivial"),
            fam => write!(f, "{}:{},{}", fam.name(), self.weight.a, self.weight.b),
        }
    }
}

impl std::str::FromStr for ModuleLabel {
    type Err = ReprError;

    /// Parses `trivial` or `family:r,s`.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let bad = || ReprError::BadSelector(text.to_string());
        let t = text.trim();
        if t == "trivial" {
            return Ok(ModuleLabel {
                family: ModuleFamily::Trivial,
                weight: Weight::ZERO,
            });
        }
        let (fam, rest) = t.split_once(':').ok_or_else(bad)?;
        let family = match fam {
            "simple" => ModuleFamily::Simple,
            "weyl" => ModuleFamily::Weyl,
            "induced" => ModuleFamily::Induced,
            "verma" => ModuleFamily::Verma,
            _ => return Err(bad()),
        };
        let (r, s) = rest.split_once(',').ok_or_else(bad)?;
        let r: i64 = r.trim().parse().map_err(|_| bad())?;
        let s: i64 = s.trim().parse().map_err(|_| bad())?;
        if r < 0 || s < 0 {
            return Err(bad());
        }
        Ok(ModuleLabel {
            family,
            weight: Weight::new(r, s),
        })
    }
}

impl ModuleLabel {
    pub fn new(family: ModuleFamily, r: u32, s: u32) -> Self {
        ModuleLabel {
            family,
            weight: Weight::new(r as i64, s as i64),
        }
    }

    /// Constructs the module this label names, over `F_p`.
    pub fn build(&self, p: u32) -> Result<Representation, ReprError> {
        let (r, s) = (self.weight.a, self.weight.b);
        if r < 0 || s < 0 || r >= p as i64 || s >= p as i64 {
            PrimeField::new(p as i64)?;
            return Err(ReprError::WeightOutOfRange { r, s, p });
        }
        let (r, s) = (r as u32, s as u32);
        match self.family {
            ModuleFamily::Trivial => trivial_module(p),
            ModuleFamily::Verma => verma(p, r, s),
            ModuleFamily::Weyl => weyl_module(p, r, s),
            ModuleFamily::Simple => simple_module(p, r, s),
            ModuleFamily::Induced => induced_module(p, r, s),
            other => Err(ReprError::NotConstructible(other.name())),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Representation {
    field: PrimeField,
    algebra: LieAlgebraSpec,
    actions: Vec<SparseMat>,
    weights: Vec<Weight>,
    highest_weight: Weight,
    label: ModuleLabel,
}

/// One failed representation axiom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Shape { element: &'static str },
    Bracket { x: &'static str, y: &'static str },
    WeightShift { element: &'static str, column: usize },
    CartanEigenvalue { element: &'static str, column: usize },
    NotNilpotent { element: &'static str },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Shape { element } => write!(f, "action of {element} has the wrong shape"),
            Violation::Bracket { x, y } => {
                write!(f, "action([{x},{y}]) != [action({x}), action({y})]")
            }
            Violation::WeightShift { element, column } => {
                write!(f, "{element} maps basis vector {column} outside the shifted weight space")
            }
            Violation::CartanEigenvalue { element, column } => {
                write!(f, "{element} does not act on basis vector {column} by its weight")
            }
            Violation::NotNilpotent { element } => write!(f, "{element}^p != 0"),
        }
    }
}

impl Representation {
    /// Assembles a module from raw parts. Only shapes are checked here; use
    /// [`Representation::check`] for the module axioms.
    pub fn from_parts(
        field: PrimeField,
        algebra: LieAlgebraSpec,
        actions: Vec<SparseMat>,
        weights: Vec<Weight>,
        highest_weight: Weight,
        label: ModuleLabel,
    ) -> Self {
        let n = weights.len();
        assert_eq!(actions.len(), algebra.dim(), "one action per basis element");
        for a in &actions {
            assert_eq!((a.rows(), a.cols()), (n, n), "action shape");
        }
        Representation {
            field,
            algebra,
            actions,
            weights,
            highest_weight,
            label,
        }
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn p(&self) -> u32 {
        self.field.p()
    }

    pub fn algebra(&self) -> &LieAlgebraSpec {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn action(&self, x: usize) -> &SparseMat {
        &self.actions[x]
    }

    pub fn actions(&self) -> &[SparseMat] {
        &self.actions
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn highest_weight(&self) -> Weight {
        self.highest_weight
    }

    pub fn label(&self) -> ModuleLabel {
        self.label
    }

    pub fn with_label(mut self, label: ModuleLabel) -> Self {
        self.label = label;
        self
    }

    pub fn character(&self) -> Character {
        Character::from_weights(self.weights.iter().copied())
    }

    /// Indices of basis vectors grouped by weight.
    pub fn weight_spaces(&self) -> BTreeMap<Weight, Vec<usize>> {
        let mut out: BTreeMap<Weight, Vec<usize>> = BTreeMap::new();
        for (i, w) in self.weights.iter().enumerate() {
            out.entry(*w).or_default().push(i);
        }
        out
    }

    /// Images `x . v_j` for every basis vector, i.e. the transposed actions.
    pub fn images(&self) -> Vec<SparseMat> {
        self.actions.iter().map(SparseMat::transpose).collect()
    }

    /// Regards an `sl3`-module as a `gl3`-module on which the identity
    /// matrix acts by zero.
    pub fn extend_to_gl3(&self) -> Result<Representation, ReprError> {
        if self.algebra.kind != AlgebraKind::Sl3 {
            return Err(ReprError::AlgebraMismatch {
                expected: AlgebraKind::Sl3,
                found: self.algebra.kind,
            });
        }
        let mut actions = self.actions.clone();
        actions.push(SparseMat::zeros(self.dim(), self.dim()));
        Ok(Representation {
            algebra: crate::liealg::gl3_spec(),
            actions,
            ..self.clone()
        })
    }

    /// `M*`: `x` acts by `-transpose(action(x))`, weights are negated. The
    /// highest weight becomes `-w0(lambda) = (s, r)`.
    pub fn dual(&self) -> Representation {
        let f = self.field;
        let actions = self
            .actions
            .iter()
            .map(|a| a.transpose().scale(&f, f.neg(1)))
            .collect();
        let hw = self.highest_weight;
        Representation {
            field: f,
            algebra: self.algebra.clone(),
            actions,
            weights: self.weights.iter().map(|w| -*w).collect(),
            highest_weight: Weight::new(hw.b, hw.a),
            label: ModuleLabel {
                family: ModuleFamily::Dual,
                weight: Weight::new(hw.b, hw.a),
            },
        }
    }

    /// Direct sum `self + other`.
    pub fn direct_sum(&self, other: &Representation) -> Representation {
        assert_eq!(self.algebra.kind, other.algebra.kind);
        let (n, m) = (self.dim(), other.dim());
        let actions = self
            .actions
            .iter()
            .zip(&other.actions)
            .map(|(a, b)| {
                let rows = a
                    .row_vecs()
                    .iter()
                    .cloned()
                    .chain(
                        b.row_vecs()
                            .iter()
                            .map(|r| r.iter().map(|&(j, v)| (j + n, v)).collect()),
                    )
                    .collect();
                SparseMat::from_rows(n + m, rows)
            })
            .collect();
        let mut weights = self.weights.clone();
        weights.extend_from_slice(&other.weights);
        let highest_weight = if other.highest_weight.dominates(&self.highest_weight) {
            other.highest_weight
        } else {
            self.highest_weight
        };
        Representation {
            field: self.field,
            algebra: self.algebra.clone(),
            actions,
            weights,
            highest_weight,
            label: self.label,
        }
    }

    fn check_sub(&self, sub: &SubspaceBasis) -> Result<(), ReprError> {
        if sub.ambient_dim() != self.dim() {
            return Err(LinalgError::DimensionMismatch {
                expected: self.dim(),
                found: sub.ambient_dim(),
            }
            .into());
        }
        for v in sub.vectors() {
            let w0 = self.weights[v[0].0];
            if v.iter().any(|&(j, _)| self.weights[j] != w0) {
                return Err(ReprError::NotWeightHomogeneous);
            }
        }
        for (x, a) in self.actions.iter().enumerate() {
            if !sub.is_stable_under(&self.field, a) {
                return Err(ReprError::NotASubmodule(self.algebra.labels[x]));
            }
        }
        Ok(())
    }

    /// `self / sub`, in the coordinates of the non-pivot basis vectors of
    /// `sub`'s echelon form.
    pub fn quotient(&self, sub: &SubspaceBasis) -> Result<Representation, ReprError> {
        self.check_sub(sub)?;
        if sub.is_zero() {
            return Ok(self.clone());
        }
        let f = self.field;
        let mut new_index = vec![usize::MAX; self.dim()];
        for &pc in sub.pivots() {
            new_index[pc] = usize::MAX - 1;
        }
        let mut keep = Vec::with_capacity(self.dim() - sub.dim());
        for (i, slot) in new_index.iter_mut().enumerate() {
            if *slot == usize::MAX {
                *slot = keep.len();
                keep.push(i);
            }
        }
        let actions = self
            .images()
            .iter()
            .map(|img| {
                let mut triplets = Vec::new();
                for (col, &q) in keep.iter().enumerate() {
                    for (i, v) in sub.reduce(&f, img.row(q)) {
                        triplets.push((new_index[i], col, v as i64));
                    }
                }
                SparseMat::from_triplets(&f, keep.len(), keep.len(), triplets)
            })
            .collect();
        Ok(Representation {
            field: f,
            algebra: self.algebra.clone(),
            actions,
            weights: keep.iter().map(|&i| self.weights[i]).collect(),
            highest_weight: self.highest_weight,
            label: ModuleLabel {
                family: ModuleFamily::Quotient,
                weight: self.highest_weight,
            },
        })
    }

    /// The submodule `sub` as a module in its own right, with basis the
    /// echelon vectors of `sub`. Also returns the inclusion matrix
    /// (`self.dim() x sub.dim()`).
    pub fn submodule(&self, sub: &SubspaceBasis) -> Result<(Representation, SparseMat), ReprError> {
        self.check_sub(sub)?;
        let f = self.field;
        let n = sub.dim();
        let actions = self
            .actions
            .iter()
            .map(|a| {
                let triplets = sub.vectors().iter().enumerate().flat_map(|(col, v)| {
                    let image = a.mul_vec(&f, v);
                    sub.coordinates(&f, &image)
                        .expect("stability checked above")
                        .into_iter()
                        .map(move |(k, c)| (k, col, c as i64))
                });
                SparseMat::from_triplets(&f, n, n, triplets.collect::<Vec<_>>())
            })
            .collect();
        let weights: Vec<Weight> = sub.vectors().iter().map(|v| self.weights[v[0].0]).collect();
        let highest_weight = weights
            .iter()
            .copied()
            .find(|w| weights.iter().all(|u| w.dominates(u)))
            .unwrap_or(Weight::ZERO);
        let inclusion = SparseMat::from_triplets(
            &f,
            self.dim(),
            n,
            sub.vectors()
                .iter()
                .enumerate()
                .flat_map(|(k, v)| v.iter().map(move |&(i, x)| (i, k, x as i64))),
        );
        let rep = Representation {
            field: f,
            algebra: self.algebra.clone(),
            actions,
            weights,
            highest_weight,
            label: ModuleLabel {
                family: ModuleFamily::Submodule,
                weight: highest_weight,
            },
        };
        Ok((rep, inclusion))
    }

    /// Checks the module axioms: bracket compatibility, weight shifts, Cartan
    /// eigenvalues and `x^p = 0` for root vectors. Empty means pass.
    pub fn check(&self) -> Vec<Violation> {
        let f = self.field;
        let g = &self.algebra;
        let n = self.dim();
        let mut out = Vec::new();
        for (x, a) in self.actions.iter().enumerate() {
            if (a.rows(), a.cols()) != (n, n) {
                out.push(Violation::Shape {
                    element: g.labels[x],
                });
            }
        }
        if !out.is_empty() {
            return out;
        }
        for x in 0..g.dim() {
            for y in x + 1..g.dim() {
                let ax = &self.actions[x];
                let ay = &self.actions[y];
                let mut defect = ax.mul(&f, ay).sub(&f, &ay.mul(&f, ax));
                for &(k, c) in g.bracket(x, y) {
                    defect = defect.sub(&f, &self.actions[k].scale(&f, f.reduce(c)));
                }
                if !defect.is_zero() {
                    out.push(Violation::Bracket {
                        x: g.labels[x],
                        y: g.labels[y],
                    });
                }
            }
        }
        for (x, a) in self.actions.iter().enumerate() {
            let shift = g.basis_weights[x];
            if let Some((_, col, _)) = a
                .triplets()
                .find(|&(i, j, _)| self.weights[i] != self.weights[j] + shift)
            {
                out.push(Violation::WeightShift {
                    element: g.labels[x],
                    column: col,
                });
            }
        }
        for (h, pick) in [(basis::H1, 0usize), (basis::H2, 1)] {
            let a = &self.actions[h];
            for j in 0..n {
                let w = self.weights[j];
                let ev = f.reduce(if pick == 0 { w.a } else { w.b });
                let col_ok = (0..n).all(|i| a.get(i, j) == if i == j { ev } else { 0 });
                if !col_ok {
                    out.push(Violation::CartanEigenvalue {
                        element: g.labels[h],
                        column: j,
                    });
                    break;
                }
            }
        }
        let p = self.p() as u64;
        for x in g.positive_indices().into_iter().chain(g.negative_indices()) {
            if !matrix_power(&f, &self.actions[x], p).is_zero() {
                out.push(Violation::NotNilpotent {
                    element: g.labels[x],
                });
            }
        }
        out
    }

    /// Checks that `inclusion` (`self.dim() x other.dim()`) intertwines the
    /// actions of `other` and `self` and is injective.
    pub fn is_embedding_of(&self, other: &Representation, inclusion: &SparseMat) -> bool {
        let f = self.field;
        if (inclusion.rows(), inclusion.cols()) != (self.dim(), other.dim()) {
            return false;
        }
        if linalg::rank(&f, &inclusion.transpose()) != other.dim() {
            return false;
        }
        self.actions.iter().zip(&other.actions).all(|(a, b)| {
            a.mul(&f, inclusion) == inclusion.mul(&f, b)
        })
    }

    /// Coordinates of a vector of `self` given as `(index, integer)` pairs.
    pub fn vector(&self, entries: &[(usize, i64)]) -> SparseVec {
        let f = self.field;
        let m = SparseMat::from_triplets(&f, 1, self.dim(), entries.iter().map(|&(i, c)| (0, i, c)));
        m.row(0).to_vec()
    }
}

fn matrix_power(f: &PrimeField, a: &SparseMat, mut exp: u64) -> SparseMat {
    let mut acc = SparseMat::identity(a.rows());
    let mut base = a.clone();
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc.mul(f, &base);
        }
        exp >>= 1;
        if exp > 0 {
            base = base.mul(f, &base);
        }
    }
    acc
}

#[cfg(test)]
mod tests;
