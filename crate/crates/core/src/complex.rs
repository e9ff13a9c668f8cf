//! The Chevalley–Eilenberg complex `C^n(g, M) = Λ^n g^* ⊗ M`.
//!
//! A cochain basis vector is a pair `(S, m)` with `S` an `n`-subset of the
//! Lie algebra basis (stored as a bit mask) and `m` a basis index of `M`.
//! Subsets of a fixed size are ordered colexicographically, which is the
//! numeric order of their masks; the module index varies fastest.
//!
//! The coboundary is
//!
//! ```text
//! d(ω ⊗ m) = d₀ω ⊗ m + Σ_k (x_k^* ∧ ω) ⊗ x_k m,     d₀ x_k^* = -Σ_{a<b} c_{ab}^k x_a^* ∧ x_b^*,
//! ```
//!
//! with `d₀` extended to `Λ g^*` as a graded derivation. Evaluated on
//! arguments this is the usual formula
//! `(dφ)(x₀..xₙ) = Σ (-1)^i x_i φ(..x̂_i..) + Σ_{i<j} (-1)^{i+j} φ([x_i,x_j], ..x̂_i..x̂_j..)`.
//!
//! `x_k^*` has weight `-wt(x_k)`, so the weight of `(S, m)` is
//! `wt(m) - Σ_{k∈S} wt(x_k)`. The torus acts on the complex and `d` preserves
//! weights; everything downstream works one weight block at a time.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use rayon::prelude::*;
use thiserror::Error;

use crate::field::PrimeField;
use crate::liealg::{LieAlgebraSpec, Weight};
use crate::linalg::{SparseMat, SparseVec};
use crate::repr::{ModuleLabel, Representation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("module is a {found}-module, complex requested over {expected}")]
    AlgebraModuleMismatch {
        expected: &'static str,
        found: &'static str,
    },
    #[error("d^{} d^{} is not zero", .degree + 1, .degree)]
    NotAComplex { degree: usize },
    #[error("d^{degree} does not preserve the weight of cochain {index}")]
    WeightNotPreserved { degree: usize, index: usize },
}

/// Bit masks of the `n`-subsets of `0..dim`, in increasing numeric order.
pub fn subsets(dim: usize, n: usize) -> Vec<u32> {
    let mut out: Vec<u32> = (0u32..1 << dim)
        .filter(|m| m.count_ones() as usize == n)
        .collect();
    out.sort_unstable();
    out
}

/// Position of `mask` among the subsets of its size (colex rank).
pub fn subset_rank(mask: u32) -> usize {
    let mut rank = 0;
    let mut k = 0;
    for t in 0..32 {
        if mask >> t & 1 == 1 {
            k += 1;
            rank += binomial(t, k);
        }
    }
    rank
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Sorts `seq` into a mask; `None` if an index repeats, otherwise the mask and
/// the sign of the sorting permutation.
fn wedge(seq: &[usize]) -> Option<(u32, i64)> {
    let mut mask = 0u32;
    let mut inversions = 0;
    for (i, &a) in seq.iter().enumerate() {
        if mask >> a & 1 == 1 {
            return None;
        }
        mask |= 1 << a;
        inversions += seq[..i].iter().filter(|&&b| b > a).count();
    }
    Some((mask, if inversions % 2 == 0 { 1 } else { -1 }))
}

fn members(mask: u32) -> Vec<usize> {
    (0..32).filter(|t| mask >> t & 1 == 1).collect()
}

/// One degree of the complex.
#[derive(Debug, Clone)]
pub struct Degree {
    pub subsets: Vec<u32>,
    /// Cochain indices grouped by weight.
    pub blocks: BTreeMap<Weight, Vec<usize>>,
    /// Row `i` is `d` of cochain `i`, in the coordinates of the next degree.
    pub coboundary: SparseMat,
}

/// Cochain complex of a module, with its weight grading.
#[derive(Debug, Clone)]
pub struct GradedComplex {
    field: PrimeField,
    algebra: LieAlgebraSpec,
    label: ModuleLabel,
    module_dim: usize,
    module_weights: Vec<Weight>,
    degrees: Vec<Degree>,
    /// `Some(p)` once restricted to weights in `pX(T)`.
    restricted: Option<u32>,
}

/// Builds the complex and checks `d² = 0` and weight preservation.
pub fn build_complex(
    algebra: &LieAlgebraSpec,
    module: &Representation,
) -> Result<GradedComplex, ComplexError> {
    if module.algebra().kind != algebra.kind {
        return Err(ComplexError::AlgebraModuleMismatch {
            expected: algebra.kind.name(),
            found: module.algebra().kind.name(),
        });
    }
    let field = *module.field();
    let g = algebra.dim();
    let dm = module.dim();
    // d₀ x_k^* = -Σ_{a<b} c_ab^k x_a^* ∧ x_b^*
    let mut d0: Vec<Vec<(usize, usize, i64)>> = vec![Vec::new(); g];
    for a in 0..g {
        for b in a + 1..g {
            for &(k, c) in algebra.bracket(a, b) {
                d0[k].push((a, b, -c));
            }
        }
    }
    let images = module.images();
    let subset_weights: Vec<Weight> = (0u32..1 << g)
        .map(|mask| {
            members(mask)
                .into_iter()
                .fold(Weight::ZERO, |acc, k| acc + algebra.basis_weights[k])
        })
        .collect();
    let degrees: Vec<Degree> = (0..=g)
        .into_par_iter()
        .map(|n| {
            let subs = subsets(g, n);
            let mut blocks: BTreeMap<Weight, Vec<usize>> = BTreeMap::new();
            for (r, &mask) in subs.iter().enumerate() {
                for (m, wm) in module.weights().iter().enumerate() {
                    let w = *wm - subset_weights[mask as usize];
                    blocks.entry(w).or_default().push(r * dm + m);
                }
            }
            let next = if n < g { binomial(g, n + 1) * dm } else { 0 };
            let mut rows = Vec::with_capacity(subs.len() * dm);
            let mut acc: HashMap<usize, i64> = HashMap::new();
            for &mask in &subs {
                let s = members(mask);
                // form part, shared by every m
                let mut form: Vec<(u32, i64)> = Vec::new();
                for (j, &sj) in s.iter().enumerate() {
                    let sign_j = if j % 2 == 0 { 1 } else { -1 };
                    for &(a, b, c) in &d0[sj] {
                        let mut seq = Vec::with_capacity(n + 1);
                        seq.extend_from_slice(&s[..j]);
                        seq.push(a);
                        seq.push(b);
                        seq.extend_from_slice(&s[j + 1..]);
                        if let Some((t, sign)) = wedge(&seq) {
                            form.push((t, sign_j * sign * c));
                        }
                    }
                }
                for m in 0..dm {
                    acc.clear();
                    for &(t, c) in &form {
                        *acc.entry(subset_rank(t) * dm + m).or_insert(0) += c;
                    }
                    for (k, img) in images.iter().enumerate() {
                        if mask >> k & 1 == 1 {
                            continue;
                        }
                        let below = (mask & ((1u32 << k) - 1)).count_ones();
                        let sign = if below.is_multiple_of(2) { 1 } else { -1 };
                        let base = subset_rank(mask | 1 << k) * dm;
                        for &(i, x) in img.row(m) {
                            *acc.entry(base + i).or_insert(0) += sign * x as i64;
                        }
                    }
                    let mut row: SparseVec = acc
                        .iter()
                        .filter_map(|(&i, &c)| {
                            let v = field.reduce(c);
                            (v != 0).then_some((i, v))
                        })
                        .collect();
                    row.sort_unstable();
                    rows.push(row);
                }
            }
            Degree {
                subsets: subs,
                blocks,
                coboundary: SparseMat::from_rows(next, rows),
            }
        })
        .collect();
    let complex = GradedComplex {
        field,
        algebra: algebra.clone(),
        label: module.label(),
        module_dim: dm,
        module_weights: module.weights().to_vec(),
        degrees,
        restricted: None,
    };
    complex.check()?;
    Ok(complex)
}

impl GradedComplex {
    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn algebra(&self) -> &LieAlgebraSpec {
        &self.algebra
    }

    pub fn label(&self) -> ModuleLabel {
        self.label
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    /// Top degree, `dim g`.
    pub fn top_degree(&self) -> usize {
        self.degrees.len() - 1
    }

    pub fn degree(&self, n: usize) -> &Degree {
        &self.degrees[n]
    }

    pub fn restricted_to(&self) -> Option<u32> {
        self.restricted
    }

    /// `(S, m)` of cochain `index` in degree `n`.
    pub fn basis_element(&self, n: usize, index: usize) -> (Vec<usize>, usize) {
        let mask = self.degrees[n].subsets[index / self.module_dim];
        (members(mask), index % self.module_dim)
    }

    /// Index of `(S, m)` in degree `|S|`.
    pub fn index_of(&self, subset: &[usize], m: usize) -> usize {
        let mask = subset.iter().fold(0u32, |acc, &k| acc | 1 << k);
        subset_rank(mask) * self.module_dim + m
    }

    pub fn weight_of(&self, n: usize, index: usize) -> Weight {
        let (s, m) = self.basis_element(n, index);
        s.iter()
            .fold(self.module_weights[m], |acc, &k| acc - self.algebra.basis_weights[k])
    }

    /// Weights carrying at least one cochain, in any degree.
    pub fn weights(&self) -> Vec<Weight> {
        let mut all: Vec<Weight> = self
            .degrees
            .iter()
            .flat_map(|d| d.blocks.keys().copied())
            .collect();
        all.sort_unstable();
        all.dedup();
        all
    }

    /// `dim C^n` (of the restricted subcomplex, once restricted).
    pub fn dim(&self, n: usize) -> usize {
        self.degrees[n].blocks.values().map(Vec::len).sum()
    }

    pub fn block(&self, n: usize, w: Weight) -> &[usize] {
        self.degrees[n].blocks.get(&w).map_or(&[], Vec::as_slice)
    }

    /// Matrix of `d^n` on the weight-`w` block, as image rows in the local
    /// coordinates of the weight-`w` block of degree `n + 1`.
    pub fn block_matrix(&self, n: usize, w: Weight) -> SparseMat {
        let src = self.block(n, w);
        if n == self.top_degree() {
            return SparseMat::zeros(src.len(), 0);
        }
        let dst = self.block(n + 1, w);
        let local: HashMap<usize, usize> =
            dst.iter().enumerate().map(|(l, &g)| (g, l)).collect();
        let d = &self.degrees[n].coboundary;
        let rows = src
            .iter()
            .map(|&i| d.row(i).iter().map(|&(j, x)| (local[&j], x)).collect())
            .collect();
        SparseMat::from_rows(dst.len(), rows)
    }

    /// Subcomplex of the weights in `pX(T)`.
    pub fn restrict_to_pxt(&self, p: u32) -> GradedComplex {
        let mut out = self.clone();
        for d in &mut out.degrees {
            d.blocks.retain(|w, _| w.in_p_lattice(p));
        }
        out.restricted = Some(p);
        out
    }

    /// `d^{n+1} d^n = 0` for every `n`, and every `d` preserves weights.
    pub fn check(&self) -> Result<(), ComplexError> {
        let top = self.top_degree();
        for n in 0..top {
            let d = &self.degrees[n].coboundary;
            for (w, idx) in &self.degrees[n].blocks {
                for &i in idx {
                    if d.row(i).iter().any(|&(j, _)| self.weight_of(n + 1, j) != *w) {
                        return Err(ComplexError::WeightNotPreserved { degree: n, index: i });
                    }
                }
            }
            if n + 1 < top {
                let dd = d.mul(&self.field, &self.degrees[n + 1].coboundary);
                if !dd.is_zero() {
                    return Err(ComplexError::NotAComplex { degree: n });
                }
            }
        }
        Ok(())
    }

    /// Sparse triplet dump `row col value` of the weight-`w` block of `d^n`,
    /// preceded by a header line `rows cols nnz`.
    pub fn block_triplets(&self, n: usize, w: Weight) -> String {
        let m = self.block_matrix(n, w);
        let mut out = format!("{} {} {}\n", m.rows(), m.cols(), m.nnz());
        for (i, j, x) in m.triplets() {
            let _ = writeln!(out, "{i} {j} {x}");
        }
        out
    }
}
