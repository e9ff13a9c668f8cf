//! Constructors for the restricted Verma, Weyl, simple and induced modules.

use crate::field::PrimeField;
use std::collections::HashMap;

use crate::liealg::{basis, natural_matrix, sl3_spec, Weight};
use crate::linalg::{self, SparseMat, SparseVec, SubspaceBasis};

use super::{ModuleFamily, ModuleLabel, ReprError, Representation};

fn check_restricted(p: u32, r: u32, s: u32) -> Result<(), ReprError> {
    if r >= p || s >= p {
        return Err(ReprError::WeightOutOfRange {
            r: r as i64,
            s: s as i64,
            p,
        });
    }
    Ok(())
}

/// The one-dimensional trivial module `k`.
pub fn trivial_module(p: u32) -> Result<Representation, ReprError> {
    let field = PrimeField::new(p as i64)?;
    let g = sl3_spec();
    let actions = (0..g.dim()).map(|_| SparseMat::zeros(1, 1)).collect();
    Ok(Representation::from_parts(
        field,
        g,
        actions,
        vec![Weight::ZERO],
        Weight::ZERO,
        ModuleLabel {
            family: ModuleFamily::Trivial,
            weight: Weight::ZERO,
        },
    ))
}

/// Position of `v_{i,j,t}` in the basis of `W(r, s)`.
pub fn verma_index(p: u32, i: u32, j: u32, t: u32) -> usize {
    let p = p as usize;
    (t as usize * p + j as usize) * p + i as usize
}

/// Restricted Verma module `W(r, s)` with basis
/// `v_{i,j,t} = f3^t f2^j f1^i u / (t! j! i!)`, `0 <= i, j, t < p`.
pub fn verma(p: u32, r: u32, s: u32) -> Result<Representation, ReprError> {
    let field = PrimeField::new(p as i64)?;
    check_restricted(p, r, s)?;
    let g = sl3_spec();
    let n = (p as usize).pow(3);
    let (r, s) = (r as i64, s as i64);
    let pi = p as i64;
    let idx = |i: i64, j: i64, t: i64| -> Option<usize> {
        let ok = |x: i64| (0..pi).contains(&x);
        (ok(i) && ok(j) && ok(t)).then(|| verma_index(p, i as u32, j as u32, t as u32))
    };
    let mut triplets: Vec<Vec<(usize, usize, i64)>> = vec![Vec::new(); g.dim()];
    let mut weights = vec![Weight::ZERO; n];
    for t in 0..pi {
        for j in 0..pi {
            for i in 0..pi {
                let col = idx(i, j, t).unwrap();
                weights[col] = Weight::new(r - 2 * i + j - t, s + i - 2 * j - t);
                let mut put = |x: usize, target: Option<usize>, c: i64| {
                    if let Some(row) = target {
                        triplets[x].push((row, col, c));
                    }
                };
                put(basis::E1, idx(i, j + 1, t - 1), -(j + 1));
                put(basis::E1, idx(i - 1, j, t), r - i + 1);
                put(basis::E2, idx(i, j - 1, t), s + i - j - t + 1);
                put(basis::E2, idx(i + 1, j, t - 1), i + 1);
                put(basis::E3, idx(i, j, t - 1), r + s - i - j - t + 1);
                put(basis::E3, idx(i - 1, j - 1, t), r - i + 1);
                put(basis::H1, Some(col), r - 2 * i + j - t);
                put(basis::H2, Some(col), s + i - 2 * j - t);
                put(basis::F1, idx(i, j - 1, t + 1), -(t + 1));
                put(basis::F1, idx(i + 1, j, t), i + 1);
                put(basis::F2, idx(i, j + 1, t), j + 1);
                put(basis::F3, idx(i, j, t + 1), t + 1);
            }
        }
    }
    let actions = triplets
        .into_iter()
        .map(|t| SparseMat::from_triplets(&field, n, n, t))
        .collect();
    Ok(Representation::from_parts(
        field,
        g,
        actions,
        weights,
        Weight::new(r, s),
        ModuleLabel {
            family: ModuleFamily::Verma,
            weight: Weight::new(r, s),
        },
    ))
}

/// Submodule generated by `seeds` (closure under every action matrix).
pub fn generated_submodule(
    rep: &Representation,
    seeds: &[SparseVec],
) -> Result<SubspaceBasis, ReprError> {
    Ok(linalg::rowspace_closure(
        rep.field(),
        rep.dim(),
        seeds,
        rep.actions(),
    )?)
}

/// The generators `v_{r+1,0,0}` and `v_{0,s+1,0}` of `I(r, s)`; a generator
/// whose index would exceed `p - 1` does not exist and is left out.
pub fn weyl_generators(p: u32, r: u32, s: u32) -> Vec<SparseVec> {
    let mut out = Vec::new();
    if r + 1 < p {
        out.push(vec![(verma_index(p, r + 1, 0, 0), 1)]);
    }
    if s + 1 < p {
        out.push(vec![(verma_index(p, 0, s + 1, 0), 1)]);
    }
    out
}

/// `W(r, s) / I(r, s)`.
///
/// This is the Weyl module only while `r + s <= p - 2`. Beyond that the
/// kernel of `W(r, s) -> V(r, s)` needs relations among divided powers that
/// `I(r, s)` does not contain; for example the quotient has dimension 31 for
/// `(r, s) = (3, 1)`, `p = 5`, where `V(3, 1)` has dimension 24.
pub fn verma_quotient(p: u32, r: u32, s: u32) -> Result<Representation, ReprError> {
    let w = verma(p, r, s)?;
    let sub = generated_submodule(&w, &weyl_generators(p, r, s))?;
    Ok(w.quotient(&sub)?.with_label(ModuleLabel {
        family: ModuleFamily::Quotient,
        weight: Weight::new(r as i64, s as i64),
    }))
}

/// Weyl module `V(r, s)`, realised as `W(r, s) / K` where `K` is the kernel
/// of the map `W(r, s) -> coordinate_ring_module(p, s, r)^*` sending `u` to the
/// highest weight vector. Basis vectors are the surviving `v_{i,j,t}`.
pub fn weyl_module(p: u32, r: u32, s: u32) -> Result<Representation, ReprError> {
    let w = verma(p, r, s)?;
    let target = coordinate_ring_module(p, s, r)?.dual();
    let top = target
        .weights()
        .iter()
        .position(|x| *x == w.highest_weight())
        .expect("highest weight vector");
    let phi = verma_map(p, r, s, &target, top)?;
    let (rank, kernel) = linalg::rank_and_kernel(w.field(), &phi);
    debug_assert_eq!(rank, target.dim());
    Ok(w.quotient(&kernel)?.with_label(ModuleLabel {
        family: ModuleFamily::Weyl,
        weight: Weight::new(r as i64, s as i64),
    }))
}

/// `H^0(r, s) = V(-w0(r, s))^* = V(s, r)^*`.
pub fn induced_module(p: u32, r: u32, s: u32) -> Result<Representation, ReprError> {
    Ok(weyl_module(p, s, r)?.dual().with_label(ModuleLabel {
        family: ModuleFamily::Induced,
        weight: Weight::new(r as i64, s as i64),
    }))
}

/// Exponents of `x1, x2, x3, y1, y2, y3`.
type Monomial = [u32; 6];

struct Quadric {
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl Quadric {
    /// Normal monomials of bidegree `(r, s)`: those not divisible by `x1 y1`.
    fn new(r: u32, s: u32) -> Self {
        let mut basis = Vec::new();
        for a in compositions(r) {
            for b in compositions(s) {
                if a[0] > 0 && b[0] > 0 {
                    continue;
                }
                basis.push([a[0], a[1], a[2], b[0], b[1], b[2]]);
            }
        }
        let index = basis.iter().enumerate().map(|(k, m)| (*m, k)).collect();
        Quadric { basis, index }
    }

    /// Adds `c * m` reduced modulo `x1 y1 + x2 y2 + x3 y3` into `out`.
    fn reduce_into(&self, m: Monomial, c: i64, out: &mut Vec<(usize, i64)>) {
        if m[0] > 0 && m[3] > 0 {
            let mut rest = m;
            rest[0] -= 1;
            rest[3] -= 1;
            for k in 1..3 {
                let mut n = rest;
                n[k] += 1;
                n[3 + k] += 1;
                self.reduce_into(n, -c, out);
            }
        } else {
            out.push((self.index[&m], c));
        }
    }
}

fn compositions(n: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for a in (0..=n).rev() {
        for b in (0..=n - a).rev() {
            out.push([a, b, n - a - b]);
        }
    }
    out
}

/// `H^0(r, s)` as the bidegree `(r, s)` part of
/// `k[x1, x2, x3, y1, y2, y3] / (x1 y1 + x2 y2 + x3 y3)`, with `x` spanning
/// the natural module, `y` its dual, and the Lie algebra acting by
/// derivations. Highest weight vector `x1^r y3^s`.
pub fn coordinate_ring_module(p: u32, r: u32, s: u32) -> Result<Representation, ReprError> {
    let field = PrimeField::new(p as i64)?;
    check_restricted(p, r, s)?;
    let g = sl3_spec();
    let q = Quadric::new(r, s);
    let n = q.basis.len();
    let weights = q
        .basis
        .iter()
        .map(|m| {
            let e = [
                m[0] as i64 - m[3] as i64,
                m[1] as i64 - m[4] as i64,
                m[2] as i64 - m[5] as i64,
            ];
            Weight::new(e[0] - e[1], e[1] - e[2])
        })
        .collect();
    let mut actions = Vec::with_capacity(g.dim());
    for x in 0..g.dim() {
        let a = natural_matrix(x);
        let mut triplets = Vec::new();
        let mut terms = Vec::new();
        for (col, m) in q.basis.iter().enumerate() {
            for v in 0..6 {
                if m[v] == 0 {
                    continue;
                }
                let e = m[v] as i64;
                for w in 0..3 {
                    // x_k -> sum_i a[i][k] x_i, y_k -> -sum_j a[k][j] y_j
                    let (target, c) = if v < 3 {
                        (w, a[w][v])
                    } else {
                        (3 + w, -a[v - 3][w])
                    };
                    if c == 0 {
                        continue;
                    }
                    let mut n = *m;
                    n[v] -= 1;
                    n[target] += 1;
                    q.reduce_into(n, e * c, &mut terms);
                }
            }
            triplets.extend(terms.drain(..).map(|(row, c)| (row, col, c)));
        }
        actions.push(SparseMat::from_triplets(&field, n, n, triplets));
    }
    let hw = Weight::new(r as i64, s as i64);
    Ok(Representation::from_parts(
        field,
        g,
        actions,
        weights,
        hw,
        ModuleLabel {
            family: ModuleFamily::Induced,
            weight: hw,
        },
    ))
}

/// The homomorphism `W(r, s) -> target` sending `u` to basis vector `top`:
/// column `verma_index(p, i, j, t)` holds `f3^t f2^j f1^i u / (t! j! i!)`.
pub fn verma_map(
    p: u32,
    r: u32,
    s: u32,
    target: &Representation,
    top: usize,
) -> Result<SparseMat, ReprError> {
    check_restricted(p, r, s)?;
    let f = *target.field();
    if f.p() != p {
        return Err(ReprError::PrimeMismatch {
            expected: p,
            found: f.p(),
        });
    }
    let n = target.dim();
    let mut cols: Vec<SparseVec> = vec![Vec::new(); (p as usize).pow(3)];
    let lower = |x: usize, v: &SparseVec, k: u32| -> SparseVec {
        // divided power step: f v / k
        let w = target.action(x).mul_vec(&f, v);
        linalg::scale(&f, &w, f.inv(k))
    };
    let mut a: SparseVec = vec![(top, 1)];
    for i in 0..p {
        if i > 0 {
            a = lower(basis::F1, &a, i);
        }
        let mut b = a.clone();
        for j in 0..p {
            if j > 0 {
                b = lower(basis::F2, &b, j);
            }
            let mut c = b.clone();
            for t in 0..p {
                if t > 0 {
                    c = lower(basis::F3, &c, t);
                }
                cols[verma_index(p, i, j, t)] = c.clone();
            }
        }
    }
    let triplets = cols
        .iter()
        .enumerate()
        .flat_map(|(col, v)| v.iter().map(move |&(row, x)| (row, col, x as i64)));
    Ok(SparseMat::from_triplets(&f, n, cols.len(), triplets))
}

/// For each weight other than the highest one, the joint kernel of `e1` and
/// `e2` on that weight space (only nonzero kernels are listed).
pub fn singular_vectors(rep: &Representation) -> Vec<(Weight, SubspaceBasis)> {
    let f = rep.field();
    let images = rep.images();
    let raising = [basis::E1, basis::E2];
    let n = rep.dim();
    let mut out = Vec::new();
    for (wt, cols) in rep.weight_spaces() {
        if wt == rep.highest_weight() {
            continue;
        }
        // rows: stacked coordinates of e1 v and e2 v; cols: the weight space
        let mut triplets = Vec::new();
        for (local, &j) in cols.iter().enumerate() {
            for (k, &x) in raising.iter().enumerate() {
                for &(i, v) in images[x].row(j) {
                    triplets.push((k * n + i, local, v as i64));
                }
            }
        }
        let m = SparseMat::from_triplets(f, 2 * n, cols.len(), triplets);
        let (_, kernel) = linalg::rank_and_kernel(f, &m);
        if kernel.is_zero() {
            continue;
        }
        let lifted = kernel
            .vectors()
            .iter()
            .map(|v| v.iter().map(|&(l, x)| (cols[l], x)).collect::<SparseVec>());
        out.push((wt, SubspaceBasis::span(f, n, lifted)));
    }
    out
}

/// Simple module `L(r, s)`: the Weyl module with every submodule generated by
/// singular vectors factored out, repeated until no singular vectors remain.
pub fn simple_module(p: u32, r: u32, s: u32) -> Result<Representation, ReprError> {
    let mut m = weyl_module(p, r, s)?;
    loop {
        let singular = singular_vectors(&m);
        if singular.is_empty() {
            break;
        }
        let seeds: Vec<SparseVec> = singular
            .iter()
            .flat_map(|(_, b)| b.vectors().iter().cloned())
            .collect();
        let sub = generated_submodule(&m, &seeds)?;
        debug_assert!(sub.dim() > 0 && sub.dim() < m.dim());
        m = m.quotient(&sub)?;
    }
    Ok(m.with_label(ModuleLabel {
        family: ModuleFamily::Simple,
        weight: Weight::new(r as i64, s as i64),
    }))
}
