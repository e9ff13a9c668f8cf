//! Exact sparse linear algebra over `F_p`.
//!
//! Matrices are row-major lists of sorted `(column, value)` pairs with every
//! stored value nonzero and reduced. Subspaces are represented canonically by
//! their reduced row-echelon basis, so two subspaces are equal exactly when
//! their [`SubspaceBasis`] values compare equal.
//!
//! Elimination is left-looking: each incoming row is scattered into a dense
//! accumulator and reduced against the pivot rows found so far, scanning
//! columns left to right. Pivots are the first nonzero column of a reduced
//! row. Matrices denser than [`DENSE_THRESHOLD`] go through a plain dense
//! Gauss–Jordan instead; both paths return the identical RREF.

use thiserror::Error;

use crate::field::PrimeField;

/// Sparse vector: sorted indices, nonzero reduced values.
pub type SparseVec = Vec<(usize, u32)>;

/// Density above which [`rank_and_kernel`] switches to dense elimination.
pub const DENSE_THRESHOLD: f64 = 0.2;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMat {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec>,
}

impl SparseMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMat {
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        SparseMat {
            rows: n,
            cols: n,
            data: (0..n).map(|i| vec![(i, 1)]).collect(),
        }
    }

    /// Builds from `(row, col, value)` triplets; duplicates are summed.
    pub fn from_triplets<I>(field: &PrimeField, rows: usize, cols: usize, entries: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, i64)>,
    {
        let mut buckets: Vec<Vec<(usize, u32)>> = vec![Vec::new(); rows];
        for (r, c, v) in entries {
            assert!(r < rows && c < cols, "entry ({r},{c}) outside {rows}x{cols}");
            let v = field.reduce(v);
            if v != 0 {
                buckets[r].push((c, v));
            }
        }
        let data = buckets
            .into_iter()
            .map(|mut row| {
                row.sort_unstable_by_key(|e| e.0);
                let mut out: SparseVec = Vec::with_capacity(row.len());
                for (c, v) in row {
                    match out.last_mut() {
                        Some(last) if last.0 == c => last.1 = field.add(last.1, v),
                        _ => out.push((c, v)),
                    }
                }
                out.retain(|e| e.1 != 0);
                out
            })
            .collect();
        SparseMat { rows, cols, data }
    }

    /// Builds from already-normalised sparse rows.
    pub fn from_rows(cols: usize, data: Vec<SparseVec>) -> Self {
        debug_assert!(data.iter().all(|r| is_normalised(r, cols)));
        SparseMat {
            rows: data.len(),
            cols,
            data,
        }
    }

    pub fn from_dense(field: &PrimeField, dense: &[Vec<i64>]) -> Self {
        let rows = dense.len();
        let cols = dense.first().map_or(0, Vec::len);
        Self::from_triplets(
            field,
            rows,
            cols,
            dense
                .iter()
                .enumerate()
                .flat_map(|(i, r)| r.iter().enumerate().map(move |(j, &v)| (i, j, v))),
        )
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[(usize, u32)] {
        &self.data[i]
    }

    pub fn row_vecs(&self) -> &[SparseVec] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        match self.data[i].binary_search_by_key(&j, |e| e.0) {
            Ok(k) => self.data[i][k].1,
            Err(_) => 0,
        }
    }

    /// Overwrites one entry; mostly useful for building negative controls.
    pub fn set(&mut self, field: &PrimeField, i: usize, j: usize, value: i64) {
        let v = field.reduce(value);
        let row = &mut self.data[i];
        match row.binary_search_by_key(&j, |e| e.0) {
            Ok(k) if v == 0 => {
                row.remove(k);
            }
            Ok(k) => row[k].1 = v,
            Err(k) if v != 0 => row.insert(k, (j, v)),
            Err(_) => {}
        }
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn density(&self) -> f64 {
        if self.rows == 0 || self.cols == 0 {
            0.0
        } else {
            self.nnz() as f64 / (self.rows as f64 * self.cols as f64)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn transpose(&self) -> SparseMat {
        let mut data: Vec<SparseVec> = vec![Vec::new(); self.cols];
        for (i, row) in self.data.iter().enumerate() {
            for &(j, v) in row {
                data[j].push((i, v));
            }
        }
        SparseMat {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, field: &PrimeField, other: &SparseMat) -> SparseMat {
        assert_eq!(self.cols, other.rows, "incompatible shapes for product");
        let mut acc = vec![0u32; other.cols];
        let mut touched: Vec<usize> = Vec::new();
        let data = self
            .data
            .iter()
            .map(|row| {
                for &(k, a) in row {
                    for &(j, b) in &other.data[k] {
                        if acc[j] == 0 {
                            touched.push(j);
                        }
                        acc[j] = field.add(acc[j], field.mul(a, b));
                    }
                }
                gather(&mut acc, &mut touched)
            })
            .collect();
        SparseMat {
            rows: self.rows,
            cols: other.cols,
            data,
        }
    }

    /// `self * v` for a column vector `v`.
    pub fn mul_vec(&self, field: &PrimeField, v: &[(usize, u32)]) -> SparseVec {
        let mut out = Vec::new();
        for (i, row) in self.data.iter().enumerate() {
            let s = sparse_dot(field, row, v);
            if s != 0 {
                out.push((i, s));
            }
        }
        out
    }

    pub fn sub(&self, field: &PrimeField, other: &SparseMat) -> SparseMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| axpy(field, a, field.neg(1), b))
            .collect();
        SparseMat {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, field: &PrimeField, c: u32) -> SparseMat {
        let data = self
            .data
            .iter()
            .map(|r| scale(field, r, c))
            .collect();
        SparseMat {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<u32>> {
        let mut out = vec![vec![0u32; self.cols]; self.rows];
        for (i, row) in self.data.iter().enumerate() {
            for &(j, v) in row {
                out[i][j] = v;
            }
        }
        out
    }

    /// Triplets in row-major order.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |&(j, v)| (i, j, v)))
    }
}

fn gather(acc: &mut [u32], touched: &mut Vec<usize>) -> SparseVec {
    touched.sort_unstable();
    touched.dedup();
    let out = touched
        .iter()
        .filter_map(|&j| {
            let v = std::mem::take(&mut acc[j]);
            (v != 0).then_some((j, v))
        })
        .collect();
    touched.clear();
    out
}

fn is_normalised(v: &[(usize, u32)], dim: usize) -> bool {
    v.windows(2).all(|w| w[0].0 < w[1].0) && v.iter().all(|e| e.1 != 0 && e.0 < dim)
}

pub fn sparse_dot(field: &PrimeField, a: &[(usize, u32)], b: &[(usize, u32)]) -> u32 {
    let (mut i, mut j, mut s) = (0, 0, 0u32);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                s = field.add(s, field.mul(a[i].1, b[j].1));
                i += 1;
                j += 1;
            }
        }
    }
    s
}

/// `a + c*b`.
pub fn axpy(field: &PrimeField, a: &[(usize, u32)], c: u32, b: &[(usize, u32)]) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i]);
            i += 1;
        } else if take_b {
            let v = field.mul(c, b[j].1);
            if v != 0 {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = field.add(a[i].1, field.mul(c, b[j].1));
            if v != 0 {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn scale(field: &PrimeField, v: &[(usize, u32)], c: u32) -> SparseVec {
    if c == 0 {
        return Vec::new();
    }
    v.iter().map(|&(i, x)| (i, field.mul(c, x))).collect()
}

pub fn sparse_from_dense(v: &[u32]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|e| *e.1 != 0)
        .map(|(i, &x)| (i, x))
        .collect()
}

/// A subspace of `F_p^ambient_dim` held as its reduced row-echelon basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceBasis {
    ambient_dim: usize,
    vectors: Vec<SparseVec>,
    pivots: Vec<usize>,
}

impl SubspaceBasis {
    pub fn zero(ambient_dim: usize) -> Self {
        SubspaceBasis {
            ambient_dim,
            vectors: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        SubspaceBasis {
            ambient_dim,
            vectors: (0..ambient_dim).map(|i| vec![(i, 1)]).collect(),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Span of arbitrary vectors.
    pub fn span<I>(field: &PrimeField, ambient_dim: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = SparseVec>,
    {
        let mut b = Echelon::new(*field, ambient_dim);
        for v in vectors {
            b.insert(&v);
        }
        b.into_basis()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_zero(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[SparseVec] {
        &self.vectors
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Remainder of `v` modulo the subspace; supported off the pivot columns.
    pub fn reduce(&self, field: &PrimeField, v: &[(usize, u32)]) -> SparseVec {
        let mut acc = v.to_vec();
        for (k, &pc) in self.pivots.iter().enumerate() {
            let c = match v.binary_search_by_key(&pc, |e| e.0) {
                Ok(idx) => v[idx].1,
                Err(_) => continue,
            };
            acc = axpy(field, &acc, field.neg(c), &self.vectors[k]);
        }
        acc
    }

    pub fn contains(&self, field: &PrimeField, v: &[(usize, u32)]) -> bool {
        self.reduce(field, v).is_empty()
    }

    /// Coordinates of `v` in this basis, or `None` when `v` is outside.
    pub fn coordinates(&self, field: &PrimeField, v: &[(usize, u32)]) -> Option<SparseVec> {
        if !self.contains(field, v) {
            return None;
        }
        let coords = self
            .pivots
            .iter()
            .enumerate()
            .filter_map(|(k, pc)| {
                v.binary_search_by_key(pc, |e| e.0)
                    .ok()
                    .map(|idx| (k, v[idx].1))
            })
            .collect();
        Some(coords)
    }

    pub fn is_subspace_of(&self, field: &PrimeField, other: &SubspaceBasis) -> bool {
        self.vectors.iter().all(|v| other.contains(field, v))
    }

    /// True when `op * v` stays in the subspace for every basis vector `v`.
    pub fn is_stable_under(&self, field: &PrimeField, op: &SparseMat) -> bool {
        self.vectors
            .iter()
            .all(|v| self.contains(field, &op.mul_vec(field, v)))
    }
}

/// Incremental echelon form: rows are normalised to leading coefficient 1
/// and reduced against earlier pivots, but not back-substituted until
/// [`Echelon::into_basis`].
pub struct Echelon {
    field: PrimeField,
    cols: usize,
    pivot_row: Vec<usize>,
    rows: Vec<SparseVec>,
    scratch: Vec<u32>,
}

const NO_PIVOT: usize = usize::MAX;

impl Echelon {
    pub fn new(field: PrimeField, cols: usize) -> Self {
        Echelon {
            field,
            cols,
            pivot_row: vec![NO_PIVOT; cols],
            rows: Vec::new(),
            scratch: vec![0; cols],
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the current pivots, returning the normalised
    /// remainder (leading coefficient 1), or an empty vector.
    pub fn reduce(&mut self, v: &[(usize, u32)]) -> SparseVec {
        let Some(&(start, _)) = v.first() else {
            return Vec::new();
        };
        let f = self.field;
        for &(j, x) in v {
            debug_assert!(j < self.cols);
            self.scratch[j] = x;
        }
        let mut lead: Option<(usize, u32)> = None;
        let mut out = Vec::new();
        for c in start..self.cols {
            let x = self.scratch[c];
            if x == 0 {
                continue;
            }
            let pr = self.pivot_row[c];
            if pr != NO_PIVOT {
                let row = &self.rows[pr];
                for &(j, y) in &row[1..] {
                    self.scratch[j] = f.sub_mul(self.scratch[j], x, y);
                }
                self.scratch[c] = 0;
            } else {
                let inv = match lead {
                    Some((_, inv)) => inv,
                    None => {
                        let inv = f.inv(x);
                        lead = Some((c, inv));
                        inv
                    }
                };
                out.push((c, f.mul(x, inv)));
                self.scratch[c] = 0;
            }
        }
        out
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &[(usize, u32)]) -> bool {
        self.insert_reduced(v).is_some()
    }

    /// Like [`Echelon::insert`] but hands back the new pivot row.
    pub fn insert_reduced(&mut self, v: &[(usize, u32)]) -> Option<&SparseVec> {
        let r = self.reduce(v);
        let &(c, _) = r.first()?;
        self.pivot_row[c] = self.rows.len();
        self.rows.push(r);
        self.rows.last()
    }

    /// Back-substitutes into reduced row-echelon form.
    pub fn into_basis(self) -> SubspaceBasis {
        let f = self.field;
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_unstable_by_key(|&k| self.rows[k][0].0);
        let pivots: Vec<usize> = order.iter().map(|&k| self.rows[k][0].0).collect();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut reduced: Vec<SparseVec> = vec![Vec::new(); order.len()];
        let mut slot_of_col = vec![NO_PIVOT; self.cols];
        for (slot, &c) in pivots.iter().enumerate() {
            slot_of_col[c] = slot;
        }
        let mut scratch = self.scratch;
        for slot in (0..order.len()).rev() {
            let row = &self.rows[order[slot]];
            let start = row[0].0;
            for &(j, x) in row {
                scratch[j] = x;
            }
            let mut out = Vec::with_capacity(row.len());
            out.push((start, 1));
            scratch[start] = 0;
            for c in start + 1..self.cols {
                let x = scratch[c];
                if x == 0 {
                    continue;
                }
                if is_pivot[c] {
                    for &(j, y) in &reduced[slot_of_col[c]][1..] {
                        scratch[j] = f.sub_mul(scratch[j], x, y);
                    }
                } else {
                    out.push((c, x));
                }
                scratch[c] = 0;
            }
            reduced[slot] = out;
        }
        SubspaceBasis {
            ambient_dim: self.cols,
            vectors: reduced,
            pivots,
        }
    }
}

/// Which elimination routine [`rank_and_kernel_with`] uses.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Strategy {
    Sparse,
    Dense,
    /// Dense when density exceeds the threshold.
    Auto(f64),
}

impl Default for Strategy {
    fn default() -> Self {
        Strategy::Auto(DENSE_THRESHOLD)
    }
}

/// Row space of `m` in reduced row-echelon form.
pub fn row_space(field: &PrimeField, m: &SparseMat, strategy: Strategy) -> SubspaceBasis {
    let dense = match strategy {
        Strategy::Sparse => false,
        Strategy::Dense => true,
        Strategy::Auto(t) => m.density() > t,
    };
    if dense {
        dense_rref(field, m)
    } else {
        let mut e = Echelon::new(*field, m.cols());
        for row in m.row_vecs() {
            e.insert(row);
        }
        e.into_basis()
    }
}

fn dense_rref(field: &PrimeField, m: &SparseMat) -> SubspaceBasis {
    let mut a = m.to_dense();
    let (rows, cols) = (m.rows(), m.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, pr);
        let inv = field.inv(a[r][c]);
        for x in a[r][c..].iter_mut() {
            *x = field.mul(*x, inv);
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let factor = row[c];
            for j in c..cols {
                if pivot_row[j] != 0 {
                    row[j] = field.sub_mul(row[j], factor, pivot_row[j]);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    SubspaceBasis {
        ambient_dim: cols,
        vectors: a.iter().map(|row| sparse_from_dense(row)).collect(),
        pivots,
    }
}

pub fn rank(field: &PrimeField, m: &SparseMat) -> usize {
    let mut e = Echelon::new(*field, m.cols());
    for row in m.row_vecs() {
        e.insert(row);
    }
    e.rank()
}

/// Rank of `m` and a basis of `{x : m x = 0}`.
pub fn rank_and_kernel(field: &PrimeField, m: &SparseMat) -> (usize, SubspaceBasis) {
    rank_and_kernel_with(field, m, Strategy::default())
}

pub fn rank_and_kernel_with(
    field: &PrimeField,
    m: &SparseMat,
    strategy: Strategy,
) -> (usize, SubspaceBasis) {
    let rref = row_space(field, m, strategy);
    (rref.dim(), kernel_from_rref(field, &rref))
}

fn kernel_from_rref(field: &PrimeField, rref: &SubspaceBasis) -> SubspaceBasis {
    let n = rref.ambient_dim();
    let mut is_pivot = vec![false; n];
    for &c in rref.pivots() {
        is_pivot[c] = true;
    }
    // column f of the RREF, as (row, value) pairs
    let mut by_col: Vec<Vec<(usize, u32)>> = vec![Vec::new(); n];
    for (k, row) in rref.vectors().iter().enumerate() {
        for &(j, x) in row {
            if !is_pivot[j] {
                by_col[j].push((k, x));
            }
        }
    }
    let kernel = (0..n).filter(|&f| !is_pivot[f]).map(|f| {
        let mut v: SparseVec = by_col[f]
            .iter()
            .map(|&(k, x)| (rref.pivots()[k], field.neg(x)))
            .collect();
        v.push((f, 1));
        v.sort_unstable_by_key(|e| e.0);
        v
    });
    SubspaceBasis::span(field, n, kernel)
}

/// Smallest subspace containing `seeds` and stable under every operator.
///
/// Operators act on column vectors, `v -> op * v`.
pub fn rowspace_closure(
    field: &PrimeField,
    ambient_dim: usize,
    seeds: &[SparseVec],
    operators: &[SparseMat],
) -> Result<SubspaceBasis, LinalgError> {
    for op in operators {
        for d in [op.rows(), op.cols()] {
            if d != ambient_dim {
                return Err(LinalgError::DimensionMismatch {
                    expected: ambient_dim,
                    found: d,
                });
            }
        }
    }
    for s in seeds {
        if let Some(&(j, _)) = s.last() {
            if j >= ambient_dim {
                return Err(LinalgError::DimensionMismatch {
                    expected: ambient_dim,
                    found: j + 1,
                });
            }
        }
    }
    // images of basis vectors: column j of op is row j of its transpose
    let images: Vec<SparseMat> = operators.iter().map(SparseMat::transpose).collect();
    let mut e = Echelon::new(*field, ambient_dim);
    let mut queue: Vec<SparseVec> = Vec::new();
    for s in seeds {
        if let Some(r) = e.insert_reduced(s) {
            queue.push(r.clone());
        }
    }
    let mut acc = vec![0u32; ambient_dim];
    let mut touched = Vec::new();
    while let Some(v) = queue.pop() {
        for img in &images {
            for &(j, x) in &v {
                for &(i, y) in img.row(j) {
                    if acc[i] == 0 {
                        touched.push(i);
                    }
                    acc[i] = field.add(acc[i], field.mul(x, y));
                }
            }
            let w = gather(&mut acc, &mut touched);
            if let Some(r) = e.insert_reduced(&w) {
                queue.push(r.clone());
            }
        }
    }
    Ok(e.into_basis())
}
