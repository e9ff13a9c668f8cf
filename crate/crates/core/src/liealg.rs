//! Structure data for `sl3` and `gl3`.
//!
//! Weights are integer pairs in fundamental-weight coordinates,
//! `(a, b) = a*w1 + b*w2`, and are never reduced mod p. Structure constants
//! are integers; they are only reduced when a module or complex is built
//! over a particular field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
pub struct Weight {
    pub a: i64,
    pub b: i64,
}

impl Weight {
    pub const ZERO: Weight = Weight { a: 0, b: 0 };
    /// Simple root `alpha_1 = 2w1 - w2`.
    pub const ALPHA1: Weight = Weight { a: 2, b: -1 };
    /// Simple root `alpha_2 = -w1 + 2w2`.
    pub const ALPHA2: Weight = Weight { a: -1, b: 2 };
    /// Half-sum of positive roots.
    pub const RHO: Weight = Weight { a: 1, b: 1 };

    pub const fn new(a: i64, b: i64) -> Self {
        Weight { a, b }
    }

    pub fn is_dominant(&self) -> bool {
        self.a >= 0 && self.b >= 0
    }

    pub fn is_restricted(&self, p: u32) -> bool {
        let p = p as i64;
        (0..p).contains(&self.a) && (0..p).contains(&self.b)
    }

    /// Both coordinates divisible by `p`, i.e. the weight lies in `pX(T)`.
    pub fn in_p_lattice(&self, p: u32) -> bool {
        let p = p as i64;
        self.a.rem_euclid(p) == 0 && self.b.rem_euclid(p) == 0
    }

    /// Divides by `p`; `None` unless the weight lies in `pX(T)`.
    pub fn untwist(&self, p: u32) -> Option<Weight> {
        self.in_p_lattice(p)
            .then(|| Weight::new(self.a / p as i64, self.b / p as i64))
    }

    /// Root coordinates `(m, n)` with `self = m*alpha_1 + n*alpha_2`, if integral.
    pub fn root_coordinates(&self) -> Option<(i64, i64)> {
        let m3 = 2 * self.a + self.b;
        let n3 = self.a + 2 * self.b;
        (m3 % 3 == 0 && n3 % 3 == 0).then_some((m3 / 3, n3 / 3))
    }

    /// Dominance order: `self >= other` iff the difference is a non-negative
    /// integer combination of simple roots.
    pub fn dominates(&self, other: &Weight) -> bool {
        matches!((*self - *other).root_coordinates(), Some((m, n)) if m >= 0 && n >= 0)
    }

    /// Pairing with the simple coroots.
    pub fn coroot_pairings(&self) -> (i64, i64) {
        (self.a, self.b)
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, o: Weight) -> Weight {
        Weight::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, o: Weight) -> Weight {
        Weight::new(self.a - o.a, self.b - o.b)
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight::new(-self.a, -self.b)
    }
}

impl Mul<Weight> for i64 {
    type Output = Weight;
    fn mul(self, w: Weight) -> Weight {
        Weight::new(self * w.a, self * w.b)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// Element of the Weyl group as an integer matrix acting on
/// fundamental-weight coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WeylElement {
    m: [[i64; 2]; 2],
    length: u8,
}

impl WeylElement {
    pub const IDENTITY: WeylElement = WeylElement {
        m: [[1, 0], [0, 1]],
        length: 0,
    };
    /// `s1(a, b) = (-a, a + b)`.
    pub const S1: WeylElement = WeylElement {
        m: [[-1, 0], [1, 1]],
        length: 1,
    };
    /// `s2(a, b) = (a + b, -b)`.
    pub const S2: WeylElement = WeylElement {
        m: [[1, 1], [0, -1]],
        length: 1,
    };

    pub fn apply(&self, w: Weight) -> Weight {
        Weight::new(
            self.m[0][0] * w.a + self.m[0][1] * w.b,
            self.m[1][0] * w.a + self.m[1][1] * w.b,
        )
    }

    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let mut m = [[0i64; 2]; 2];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                *x = (0..2).map(|k| self.m[i][k] * other.m[k][j]).sum();
            }
        }
        WeylElement {
            m,
            length: self.length + other.length,
        }
    }

    pub fn matrix(&self) -> [[i64; 2]; 2] {
        self.m
    }

    /// Length of the reduced word this element was generated with.
    pub fn length(&self) -> u8 {
        self.length
    }

    /// Dot action `w . lambda = w(lambda + rho) - rho`.
    pub fn dot(&self, w: Weight) -> Weight {
        self.apply(w + Weight::RHO) - Weight::RHO
    }
}

/// The six elements of `W`, generated by breadth-first words in `s1, s2`,
/// so each element carries its length.
pub fn weyl_group() -> Vec<WeylElement> {
    let mut out = vec![WeylElement::IDENTITY];
    let mut frontier = vec![WeylElement::IDENTITY];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for w in &frontier {
            for s in [WeylElement::S1, WeylElement::S2] {
                let v = s.compose(w);
                if !out.iter().any(|u| u.m == v.m) {
                    out.push(v);
                    next.push(v);
                }
            }
        }
        frontier = next;
    }
    out
}

/// The longest element, `w0(a, b) = (-b, -a)`.
pub fn longest_element() -> WeylElement {
    weyl_group()
        .into_iter()
        .max_by_key(|w| w.length)
        .expect("Weyl group is nonempty")
}

#[derive(Debug, Clone)]
pub struct RootDatum {
    pub simple_roots: [Weight; 2],
    pub rho: Weight,
    pub weyl_group: Vec<WeylElement>,
    pub w0: WeylElement,
}

impl RootDatum {
    pub fn a2() -> Self {
        RootDatum {
            simple_roots: [Weight::ALPHA1, Weight::ALPHA2],
            rho: Weight::RHO,
            weyl_group: weyl_group(),
            w0: longest_element(),
        }
    }
}

/// `lambda + rho == w(mu + rho) mod pX(T)` for some `w` in `W`.
pub fn is_linked(lambda: Weight, mu: Weight, p: u32) -> bool {
    weyl_group()
        .iter()
        .any(|w| (lambda + Weight::RHO - w.apply(mu + Weight::RHO)).in_p_lattice(p))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AlgebraKind {
    Sl3,
    Gl3,
}

impl AlgebraKind {
    pub fn name(&self) -> &'static str {
        match self {
            AlgebraKind::Sl3 => "sl3",
            AlgebraKind::Gl3 => "gl3",
        }
    }

    pub fn spec(&self) -> LieAlgebraSpec {
        match self {
            AlgebraKind::Sl3 => sl3_spec(),
            AlgebraKind::Gl3 => gl3_spec(),
        }
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for AlgebraKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "sl3" => Ok(AlgebraKind::Sl3),
            "gl3" => Ok(AlgebraKind::Gl3),
            other => Err(format!("unknown algebra `{other}` (expected sl3 or gl3)")),
        }
    }
}

/// Basis positions in the fixed ordering `e1 e2 e3 h1 h2 f1 f2 f3 [z]`.
pub mod basis {
    pub const E1: usize = 0;
    pub const E2: usize = 1;
    pub const E3: usize = 2;
    pub const H1: usize = 3;
    pub const H2: usize = 4;
    pub const F1: usize = 5;
    pub const F2: usize = 6;
    pub const F3: usize = 7;
    pub const Z: usize = 8;
}

/// Nonzero brackets of the Chevalley basis, `[x, y] = sum c * z`.
const SL3_BRACKETS: &[(usize, usize, &[(usize, i64)])] = {
    use basis::*;
    &[
        (E1, F1, &[(H1, 1)]),
        (E2, F2, &[(H2, 1)]),
        (E3, F3, &[(H1, 1), (H2, 1)]),
        (H1, E1, &[(E1, 2)]),
        (H2, E2, &[(E2, 2)]),
        (H1, F1, &[(F1, -2)]),
        (H2, F2, &[(F2, -2)]),
        (H1, E2, &[(E2, -1)]),
        (H1, E3, &[(E3, 1)]),
        (H2, E1, &[(E1, -1)]),
        (H2, E3, &[(E3, 1)]),
        (H1, F2, &[(F2, 1)]),
        (H1, F3, &[(F3, -1)]),
        (H2, F1, &[(F1, 1)]),
        (H2, F3, &[(F3, -1)]),
        (E1, E2, &[(E3, 1)]),
        (E3, F1, &[(E2, -1)]),
        (E3, F2, &[(E1, 1)]),
        (F1, F2, &[(F3, -1)]),
        (E1, F3, &[(F2, -1)]),
        (E2, F3, &[(F1, 1)]),
    ]
};

/// Basis, integer structure constants and basis weights of `sl3` or `gl3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebraSpec {
    pub kind: AlgebraKind,
    pub labels: Vec<&'static str>,
    /// `brackets[i][j]` lists `(k, c)` with `[x_i, x_j] = sum c x_k`.
    brackets: Vec<Vec<Vec<(usize, i64)>>>,
    pub basis_weights: Vec<Weight>,
}

impl LieAlgebraSpec {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn bracket(&self, i: usize, j: usize) -> &[(usize, i64)] {
        &self.brackets[i][j]
    }

    /// Structure constant `c_{ij}^k`.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> i64 {
        self.brackets[i][j]
            .iter()
            .find(|e| e.0 == k)
            .map_or(0, |e| e.1)
    }

    /// Bracket of two arbitrary integer combinations of basis elements.
    pub fn bracket_vectors(&self, x: &[i64], y: &[i64]) -> Vec<i64> {
        let mut out = vec![0i64; self.dim()];
        for (i, &a) in x.iter().enumerate().filter(|e| *e.1 != 0) {
            for (j, &b) in y.iter().enumerate().filter(|e| *e.1 != 0) {
                for &(k, c) in self.bracket(i, j) {
                    out[k] += a * b * c;
                }
            }
        }
        out
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| *l == label)
    }

    /// The raising operators `e1, e2, e3`.
    pub fn positive_indices(&self) -> [usize; 3] {
        [basis::E1, basis::E2, basis::E3]
    }

    pub fn negative_indices(&self) -> [usize; 3] {
        [basis::F1, basis::F2, basis::F3]
    }

    pub fn cartan_indices(&self) -> [usize; 2] {
        [basis::H1, basis::H2]
    }
}

fn build_spec(kind: AlgebraKind) -> LieAlgebraSpec {
    let mut labels = vec!["e1", "e2", "e3", "h1", "h2", "f1", "f2", "f3"];
    let mut basis_weights = vec![
        Weight::new(2, -1),
        Weight::new(-1, 2),
        Weight::new(1, 1),
        Weight::ZERO,
        Weight::ZERO,
        Weight::new(-2, 1),
        Weight::new(1, -2),
        Weight::new(-1, -1),
    ];
    if kind == AlgebraKind::Gl3 {
        labels.push("z");
        basis_weights.push(Weight::ZERO);
    }
    let n = labels.len();
    let mut brackets = vec![vec![Vec::new(); n]; n];
    for &(i, j, terms) in SL3_BRACKETS {
        brackets[i][j] = terms.to_vec();
        brackets[j][i] = terms.iter().map(|&(k, c)| (k, -c)).collect();
    }
    LieAlgebraSpec {
        kind,
        labels,
        brackets,
        basis_weights,
    }
}

/// `sl3` in the Chevalley basis `e1 e2 e3 h1 h2 f1 f2 f3`.
pub fn sl3_spec() -> LieAlgebraSpec {
    build_spec(AlgebraKind::Sl3)
}

/// `gl3 = sl3 + kI`, with the central element `z` appended last.
pub fn gl3_spec() -> LieAlgebraSpec {
    build_spec(AlgebraKind::Gl3)
}

/// Weight multiset of the characteristic-zero irreducible of highest weight
/// `(r, s)`, enumerated as semistandard tableaux of shape `(r + s, s)` in
/// entries `1, 2, 3`. A tableau with content `(n1, n2, n3)` has weight
/// `(n1 - n2, n2 - n3)`.
pub fn weyl_character(r: u32, s: u32) -> std::collections::BTreeMap<Weight, usize> {
    let (top, bottom) = ((r + s) as usize, s as usize);
    let mut out = std::collections::BTreeMap::new();
    // Row 1: x1 ones, x2 twos, x3 threes. Row 2 (length `bottom`) holds only
    // 2s and 3s: y2 twos then y3 threes. Column strictness: the 2s of row 2
    // sit under 1s, the 3s of row 2 sit under entries <= 2.
    for x1 in 0..=top {
        for x2 in 0..=top - x1 {
            let x3 = top - x1 - x2;
            for y2 in 0..=bottom {
                let y3 = bottom - y2;
                if y2 > x1 || (y3 > 0 && bottom > x1 + x2) {
                    continue;
                }
                let n1 = x1 as i64;
                let n2 = (x2 + y2) as i64;
                let n3 = (x3 + y3) as i64;
                *out.entry(Weight::new(n1 - n2, n2 - n3)).or_insert(0) += 1;
            }
        }
    }
    out
}

/// Basis element `x` of `gl3` as a 3x3 integer matrix acting on `k^3`.
pub fn natural_matrix(x: usize) -> [[i64; 3]; 3] {
    use basis::*;
    let mut m = [[0i64; 3]; 3];
    match x {
        E1 => m[0][1] = 1,
        E2 => m[1][2] = 1,
        E3 => m[0][2] = 1,
        H1 => (m[0][0], m[1][1]) = (1, -1),
        H2 => (m[1][1], m[2][2]) = (1, -1),
        F1 => m[1][0] = 1,
        F2 => m[2][1] = 1,
        F3 => m[2][0] = 1,
        Z => (m[0][0], m[1][1], m[2][2]) = (1, 1, 1),
        _ => panic!("no basis element {x}"),
    }
    m
}

/// Weyl dimension formula `(r+1)(s+1)(r+s+2)/2`.
pub fn weyl_dimension(r: u32, s: u32) -> usize {
    let (r, s) = (r as usize, s as usize);
    (r + 1) * (s + 1) * (r + s + 2) / 2
}
