//! Cohomology dimensions, composition factors and consistency checks.

use std::collections::BTreeMap;
use std::sync::Mutex;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::{build_complex, ComplexError, GradedComplex};
use crate::liealg::{weyl_character, AlgebraKind, Weight};
use crate::linalg;
use crate::repr::{simple_module, Character, ModuleLabel, ReprError, Representation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomError {
    #[error(
        "H^{degree} at weight {weight}: ker/im gives {direct}, dimension formula gives {via_cocycles}"
    )]
    InternalInconsistency {
        degree: usize,
        weight: Weight,
        direct: usize,
        via_cocycles: usize,
    },
    #[error("H^{degree}: maximal remaining weight {weight} is not dominant")]
    NonDominantMaximal { degree: usize, weight: Weight },
    #[error("H^{degree} has weight {weight} outside pX(T)")]
    NotInPLattice { degree: usize, weight: Weight },
    #[error("characters do not satisfy ch B = ch A + ch C")]
    CharacterMismatch,
    #[error("the given map is not an embedding of modules")]
    NotAnEmbedding,
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Repr(#[from] ReprError),
}

/// `[L(weight)^{(twist)} : H^n] = mult`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factor {
    pub weight: Weight,
    pub twist: u32,
    pub mult: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeReport {
    pub degree: usize,
    pub dim: usize,
    pub weights: BTreeMap<Weight, usize>,
    pub factors: Vec<Factor>,
    /// Weights left over when the factors do not account for everything.
    pub residual: BTreeMap<Weight, usize>,
}

impl DegreeReport {
    fn empty(degree: usize) -> Self {
        DegreeReport {
            degree,
            dim: 0,
            weights: BTreeMap::new(),
            factors: Vec::new(),
            residual: BTreeMap::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyReport {
    pub p: u32,
    pub algebra: AlgebraKind,
    pub module: ModuleLabel,
    pub degrees: Vec<DegreeReport>,
}

impl CohomologyReport {
    pub fn dims(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.dim).collect()
    }

    pub fn top_degree(&self) -> usize {
        self.degrees.len() - 1
    }

    /// Weights with nonzero cohomology in some degree.
    pub fn support(&self) -> Vec<Weight> {
        let mut out: Vec<Weight> = self
            .degrees
            .iter()
            .flat_map(|d| d.weights.keys().copied())
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn is_zero(&self) -> bool {
        self.degrees.iter().all(|d| d.dim == 0)
    }
}

/// Dimensions of one weight block, indexed by degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockDims {
    pub weight: Weight,
    pub cochains: Vec<usize>,
    pub cocycles: Vec<usize>,
    pub coboundaries: Vec<usize>,
    pub cohomology: Vec<usize>,
}

/// Dimensions of `C`, `Z`, `B`, `H` on the weight-`w` block.
///
/// `dim H^n` is computed as `dim Z^n - rank d^{n-1}` from row ranks of the
/// image matrices, and again as `dim Z^n + dim Z^{n-1} - dim C^{n-1}` with
/// the cocycle spaces taken from an independent kernel computation; the two
/// must agree.
pub fn block_dims(complex: &GradedComplex, w: Weight) -> Result<BlockDims, CohomError> {
    let f = complex.field();
    let top = complex.top_degree();
    let cochains: Vec<usize> = (0..=top).map(|n| complex.block(n, w).len()).collect();
    let mut ranks = Vec::with_capacity(top + 1);
    let mut kernels = Vec::with_capacity(top + 1);
    for n in 0..=top {
        if cochains[n] == 0 {
            ranks.push(0);
            kernels.push(0);
            continue;
        }
        let m = complex.block_matrix(n, w);
        ranks.push(linalg::rank(f, &m));
        let (_, ker) = linalg::rank_and_kernel(f, &m.transpose());
        kernels.push(ker.dim());
    }
    let cocycles: Vec<usize> = (0..=top).map(|n| cochains[n] - ranks[n]).collect();
    let coboundaries: Vec<usize> = (0..=top)
        .map(|n| if n == 0 { 0 } else { ranks[n - 1] })
        .collect();
    let mut cohomology = Vec::with_capacity(top + 1);
    for n in 0..=top {
        let direct = cocycles[n] - coboundaries[n];
        let via_cocycles = if n == 0 {
            kernels[0]
        } else {
            (kernels[n] + kernels[n - 1]).saturating_sub(cochains[n - 1])
        };
        if direct != via_cocycles || kernels[n] != cocycles[n] {
            return Err(CohomError::InternalInconsistency {
                degree: n,
                weight: w,
                direct,
                via_cocycles,
            });
        }
        cohomology.push(direct);
    }
    Ok(BlockDims {
        weight: w,
        cochains,
        cocycles,
        coboundaries,
        cohomology,
    })
}

/// Block dimensions for every weight of the complex, in weight order.
pub fn all_block_dims(complex: &GradedComplex) -> Result<Vec<BlockDims>, CohomError> {
    complex
        .weights()
        .par_iter()
        .map(|&w| block_dims(complex, w))
        .collect()
}

/// Cohomology dimensions per degree and weight (no factors yet).
pub fn cohomology(complex: &GradedComplex) -> Result<CohomologyReport, CohomError> {
    let blocks = all_block_dims(complex)?;
    let top = complex.top_degree();
    let mut degrees: Vec<DegreeReport> = (0..=top).map(DegreeReport::empty).collect();
    for b in &blocks {
        for (n, &h) in b.cohomology.iter().enumerate() {
            if h > 0 {
                degrees[n].dim += h;
                degrees[n].weights.insert(b.weight, h);
            }
        }
    }
    Ok(CohomologyReport {
        p: complex.field().p(),
        algebra: complex.algebra().kind,
        module: complex.label(),
        degrees,
    })
}

/// Characters of simple modules by highest weight.
pub struct CharacterTable {
    source: TableSource,
    cache: Mutex<BTreeMap<Weight, Option<Character>>>,
}

enum TableSource {
    /// `ch L(λ)` computed at the given prime; defined for restricted `λ`.
    Simple(u32),
    /// Weyl characters `χ(λ)`, defined for every dominant `λ`.
    Weyl,
    Fixed,
}

impl CharacterTable {
    pub fn simple(p: u32) -> Self {
        CharacterTable {
            source: TableSource::Simple(p),
            cache: Mutex::new(BTreeMap::new()),
        }
    }

    pub fn weyl() -> Self {
        CharacterTable {
            source: TableSource::Weyl,
            cache: Mutex::new(BTreeMap::new()),
        }
    }

    pub fn from_map(map: BTreeMap<Weight, Character>) -> Self {
        CharacterTable {
            source: TableSource::Fixed,
            cache: Mutex::new(map.into_iter().map(|(w, c)| (w, Some(c))).collect()),
        }
    }

    pub fn get(&self, w: Weight) -> Option<Character> {
        if let Some(c) = self.cache.lock().unwrap().get(&w) {
            return c.clone();
        }
        let computed = match self.source {
            TableSource::Fixed => None,
            _ if !w.is_dominant() => None,
            TableSource::Weyl => Some(Character::from_map(weyl_character(w.a as u32, w.b as u32))),
            TableSource::Simple(p) if w.is_restricted(p) => {
                simple_module(p, w.a as u32, w.b as u32)
                    .ok()
                    .map(|m| m.character())
            }
            TableSource::Simple(_) => None,
        };
        self.cache.lock().unwrap().insert(w, computed.clone());
        computed
    }
}

/// Outcome of a greedy character decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    /// Highest weights and multiplicities, in the order they were found.
    pub factors: Vec<(Weight, usize)>,
    pub residual: Character,
}

/// Repeatedly strips the character of `L(μ)` for a dominance-maximal weight
/// `μ` of what remains. Stops with a residual when `μ` has no entry in the
/// table or its character does not fit; errors with the offending weight if a
/// maximal weight is not dominant.
pub fn decompose_character(ch: &Character, table: &CharacterTable) -> Result<Decomposition, Weight> {
    let mut rest = ch.clone();
    let mut factors: Vec<(Weight, usize)> = Vec::new();
    while !rest.is_empty() {
        let support: Vec<Weight> = rest.multiplicities().keys().copied().collect();
        let top = *support
            .iter()
            .rev()
            .find(|w| !support.iter().any(|v| v != *w && v.dominates(w)))
            .expect("a finite set has maximal elements");
        if !top.is_dominant() {
            return Err(top);
        }
        let Some(c) = table.get(top) else { break };
        let Some(next) = rest.checked_sub(&c) else { break };
        rest = next;
        match factors.iter_mut().find(|(w, _)| *w == top) {
            Some((_, m)) => *m += 1,
            None => factors.push((top, 1)),
        }
    }
    Ok(Decomposition {
        factors,
        residual: rest,
    })
}

/// Fills in composition factors `L(μ)^{(1)}` of every degree.
pub fn decompose(
    report: &CohomologyReport,
    table: &CharacterTable,
) -> Result<CohomologyReport, CohomError> {
    let p = report.p;
    let mut out = report.clone();
    for d in &mut out.degrees {
        let mut untwisted = BTreeMap::new();
        for (w, m) in &d.weights {
            let u = w.untwist(p).ok_or(CohomError::NotInPLattice {
                degree: d.degree,
                weight: *w,
            })?;
            untwisted.insert(u, *m);
        }
        let dec = decompose_character(&Character::from_map(untwisted), table).map_err(|w| {
            CohomError::NonDominantMaximal {
                degree: d.degree,
                weight: p as i64 * w,
            }
        })?;
        d.factors = dec
            .factors
            .iter()
            .map(|&(weight, mult)| Factor {
                weight,
                twist: 1,
                mult,
            })
            .collect();
        d.residual = dec.residual.twist(p).multiplicities().clone();
    }
    Ok(out)
}

/// Restricted-subcomplex cohomology of `module` as a module over `kind`
/// (for `gl3`, `z` acts by `0`), decomposed with simple characters.
pub fn compute(kind: AlgebraKind, module: &Representation) -> Result<CohomologyReport, CohomError> {
    compute_with(kind, module, &CharacterTable::simple(module.p()))
}

pub fn compute_with(
    kind: AlgebraKind,
    module: &Representation,
    table: &CharacterTable,
) -> Result<CohomologyReport, CohomError> {
    let complex = complex_for(kind, module)?.restrict_to_pxt(module.p());
    decompose(&cohomology(&complex)?, table)
}

/// The full complex of `module` over `kind`.
pub fn complex_for(kind: AlgebraKind, module: &Representation) -> Result<GradedComplex, CohomError> {
    let m = match kind {
        AlgebraKind::Sl3 => module.clone(),
        AlgebraKind::Gl3 => module.extend_to_gl3()?,
    };
    Ok(build_complex(&kind.spec(), &m)?)
}

/// `dim H^n(g, M^*) = dim H^{dim g - n}(g, M)` for all `n`, with weights
/// negated.
pub fn verify_duality(kind: AlgebraKind, module: &Representation) -> Result<bool, CohomError> {
    let a = compute_dims(kind, module)?;
    let b = compute_dims(kind, &module.dual())?;
    Ok(are_dual(&a, &b))
}

/// Whether `b` is the degree-reversed, weight-negated copy of `a`.
pub fn are_dual(a: &CohomologyReport, b: &CohomologyReport) -> bool {
    let top = a.top_degree();
    if b.top_degree() != top {
        return false;
    }
    (0..=top).all(|n| {
        let x = &a.degrees[n];
        let y = &b.degrees[top - n];
        x.dim == y.dim
            && x.weights.len() == y.weights.len()
            && x.weights.iter().all(|(w, m)| y.weights.get(&-*w) == Some(m))
    })
}

fn compute_dims(kind: AlgebraKind, module: &Representation) -> Result<CohomologyReport, CohomError> {
    cohomology(&complex_for(kind, module)?.restrict_to_pxt(module.p()))
}

/// `H^n(gl3, M) = H^n(sl3, M) ⊕ H^{n-1}(sl3, M)` for `M` with `z` acting by 0.
pub fn gl3_from_sl3(report: &CohomologyReport) -> CohomologyReport {
    let top = report.top_degree() + 1;
    let degrees = (0..=top)
        .map(|n| {
            let mut d = DegreeReport::empty(n);
            let parts = [n.checked_sub(0), n.checked_sub(1)];
            for k in parts.into_iter().flatten() {
                let Some(src) = report.degrees.get(k) else { continue };
                d.dim += src.dim;
                for (w, m) in &src.weights {
                    *d.weights.entry(*w).or_insert(0) += m;
                }
                for (w, m) in &src.residual {
                    *d.residual.entry(*w).or_insert(0) += m;
                }
                for f in &src.factors {
                    match d.factors.iter_mut().find(|g| g.weight == f.weight) {
                        Some(g) => g.mult += f.mult,
                        None => d.factors.push(*f),
                    }
                }
            }
            d
        })
        .collect();
    CohomologyReport {
        p: report.p,
        algebra: AlgebraKind::Gl3,
        module: report.module,
        degrees,
    }
}

/// `Σ (-1)^n dim H^n = 0`, in total and for every weight.
pub fn euler_check(report: &CohomologyReport) -> bool {
    let alt = |f: &dyn Fn(&DegreeReport) -> usize| -> i64 {
        report
            .degrees
            .iter()
            .map(|d| if d.degree % 2 == 0 { 1 } else { -1 } * f(d) as i64)
            .sum()
    };
    alt(&|d| d.dim) == 0
        && report
            .support()
            .into_iter()
            .all(|w| alt(&|d| d.weights.get(&w).copied().unwrap_or(0)) == 0)
}

/// Necessary conditions on the cohomology of `0 -> A -> B -> C -> 0` over
/// `kind`, weight by weight: the long exact sequence admits a rank
/// assignment, i.e. starting from `H^0(A) -> H^0(B)` injective the forced
/// ranks of every map are non-negative and the last connecting map is zero.
pub fn ses_consistency(
    kind: AlgebraKind,
    a: &Representation,
    b: &Representation,
    c: &Representation,
    inclusion: &linalg::SparseMat,
) -> Result<bool, CohomError> {
    if b.character() != a.character().add(&c.character()) {
        return Err(CohomError::CharacterMismatch);
    }
    if !b.is_embedding_of(a, inclusion) {
        return Err(CohomError::NotAnEmbedding);
    }
    let ha = compute_dims(kind, a)?;
    let hb = compute_dims(kind, b)?;
    let hc = compute_dims(kind, c)?;
    Ok(les_consistent(&ha, &hb, &hc))
}

/// The rank-assignment test of [`ses_consistency`] on computed reports.
pub fn les_consistent(a: &CohomologyReport, b: &CohomologyReport, c: &CohomologyReport) -> bool {
    let mut weights = a.support();
    weights.extend(b.support());
    weights.extend(c.support());
    weights.sort_unstable();
    weights.dedup();
    let at = |r: &CohomologyReport, n: usize, w: Weight| -> i64 {
        r.degrees
            .get(n)
            .and_then(|d| d.weights.get(&w))
            .copied()
            .unwrap_or(0) as i64
    };
    let top = a.top_degree().max(b.top_degree()).max(c.top_degree());
    weights.into_iter().all(|w| {
        // x: H^n A -> H^n B, y: H^n B -> H^n C, z: H^n C -> H^{n+1} A
        let mut z_prev = 0i64;
        for n in 0..=top {
            let x = at(a, n, w) - z_prev;
            let y = at(b, n, w) - x;
            let z = at(c, n, w) - y;
            if x < 0 || y < 0 || z < 0 || z > at(a, n + 1, w) {
                return false;
            }
            z_prev = z;
        }
        z_prev == 0
    })
}

/// Builds the module named by `label` over `F_p` and runs [`compute`].
pub fn compute_label(
    p: u32,
    kind: AlgebraKind,
    label: &ModuleLabel,
) -> Result<CohomologyReport, CohomError> {
    compute(kind, &label.build(p)?)
}
