//! The cochain complex against a from-scratch dense implementation of the
//! Chevalley–Eilenberg differential, built here from 3x3 matrices.

use modcohom::cohom::{all_block_dims, cohomology, complex_for};
use modcohom::complex::{binomial, subsets};
use modcohom::liealg::AlgebraKind;
use modcohom::repr::{simple_module, trivial_module};
use modcohom::{Representation, Weight};

type Mat3 = [[i64; 3]; 3];

fn unit(i: usize, j: usize) -> Mat3 {
    let mut m = [[0; 3]; 3];
    m[i][j] = 1;
    m
}

/// e1 e2 e3 h1 h2 f1 f2 f3 as matrices.
fn basis() -> Vec<Mat3> {
    let mut h1 = [[0; 3]; 3];
    h1[0][0] = 1;
    h1[1][1] = -1;
    let mut h2 = [[0; 3]; 3];
    h2[1][1] = 1;
    h2[2][2] = -1;
    vec![unit(0, 1), unit(1, 2), unit(0, 2), h1, h2, unit(1, 0), unit(2, 1), unit(2, 0)]
}

fn commutator(a: &Mat3, b: &Mat3) -> Mat3 {
    let mut c = [[0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                c[i][j] += a[i][k] * b[k][j] - b[i][k] * a[k][j];
            }
        }
    }
    c
}

/// Coordinates of a trace-zero matrix in [`basis`].
fn coords(m: &Mat3) -> [i64; 8] {
    [m[0][1], m[1][2], m[0][2], m[0][0], -m[2][2], m[1][0], m[2][1], m[2][0]]
}

fn structure() -> Vec<Vec<[i64; 8]>> {
    let b = basis();
    b.iter()
        .map(|x| b.iter().map(|y| coords(&commutator(x, y))).collect())
        .collect()
}

/// Action matrices `rho(x_i)` on a module, dense, with `rho(x) v` for column `v`.
fn natural_action() -> Vec<Vec<Vec<i64>>> {
    basis()
        .iter()
        .map(|m| m.iter().map(|r| r.to_vec()).collect())
        .collect()
}

fn adjoint_action(c: &[Vec<[i64; 8]>]) -> Vec<Vec<Vec<i64>>> {
    (0..8)
        .map(|i| {
            let mut m = vec![vec![0; 8]; 8];
            for j in 0..8 {
                for k in 0..8 {
                    m[k][j] = c[i][j][k];
                }
            }
            m
        })
        .collect()
}

fn rank_mod(p: i64, mut a: Vec<Vec<i64>>) -> usize {
    let cols = a.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(i) = (r..a.len()).find(|&i| a[i][c].rem_euclid(p) != 0) else {
            continue;
        };
        a.swap(r, i);
        let piv = a[r][c].rem_euclid(p);
        let inv = (1..p).find(|x| piv * x % p == 1).unwrap();
        for i in 0..a.len() {
            let x = a[i][c].rem_euclid(p);
            if i != r && x != 0 {
                let fct = x * inv % p;
                for j in 0..cols {
                    a[i][j] = (a[i][j] - fct * a[r][j]).rem_euclid(p);
                }
            }
        }
        r += 1;
    }
    r
}

/// Sign of moving `c` into sorted position within `rest`, or `None` if
/// `c` already occurs.
fn insert(rest: &[usize], c: usize) -> Option<(Vec<usize>, i64)> {
    if rest.contains(&c) {
        return None;
    }
    let before = rest.iter().filter(|&&x| x < c).count();
    let mut v = rest.to_vec();
    v.insert(before, c);
    Some((v, if before % 2 == 0 { 1 } else { -1 }))
}

/// Ranks of `d^n`, n = 0..8, on `Hom(Λ^n g, M)`, from
/// `(dω)(x_0..x_n) = Σ (-1)^k x_k ω(..x̂_k..) + Σ_{k<l} (-1)^{k+l} ω([x_k,x_l], ..)`.
fn oracle_ranks(p: i64, rho: &[Vec<Vec<i64>>]) -> Vec<usize> {
    let c = structure();
    let dm = rho[0].len();
    let sets = |n: usize| -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for mask in 0u32..256 {
            if mask.count_ones() as usize == n {
                out.push((0..8).filter(|i| mask >> i & 1 == 1).collect());
            }
        }
        out
    };
    (0..8)
        .map(|n| {
            let src = sets(n);
            let dst = sets(n + 1);
            let col_of = |s: &[usize], m: usize| src.iter().position(|t| t == s).unwrap() * dm + m;
            let mut mat = vec![vec![0i64; src.len() * dm]; dst.len() * dm];
            for (si, s) in dst.iter().enumerate() {
                for k in 0..=n {
                    let sign = if k % 2 == 0 { 1 } else { -1 };
                    let mut rest = s.clone();
                    let xk = rest.remove(k);
                    // x_k . ω(rest): row component i gets rho[xk][i][m] ω(rest)_m
                    for i in 0..dm {
                        for m in 0..dm {
                            mat[si * dm + i][col_of(&rest, m)] += sign * rho[xk][i][m];
                        }
                    }
                }
                for k in 0..=n {
                    for l in k + 1..=n {
                        let sign = if (k + l) % 2 == 0 { 1 } else { -1 };
                        let rest: Vec<usize> =
                            s.iter().enumerate().filter(|(i, _)| *i != k && *i != l).map(|e| *e.1).collect();
                        for (b, &coef) in c[s[k]][s[l]].iter().enumerate() {
                            if coef == 0 {
                                continue;
                            }
                            let Some((t, ins)) = insert(&rest, b) else { continue };
                            for m in 0..dm {
                                mat[si * dm + m][col_of(&t, m)] += sign * ins * coef;
                            }
                        }
                    }
                }
            }
            rank_mod(p, mat)
        })
        .collect()
}

fn library_ranks(rep: &Representation) -> Vec<usize> {
    let complex = complex_for(AlgebraKind::Sl3, rep).unwrap();
    let blocks = all_block_dims(&complex).unwrap();
    (0..8)
        .map(|n| blocks.iter().map(|b| b.cochains[n] - b.cocycles[n]).sum())
        .collect()
}

fn dims_from_ranks(dm: usize, ranks: &[usize]) -> Vec<usize> {
    (0..=8)
        .map(|n| {
            let c = binomial(8, n) * dm;
            let out = if n < 8 { ranks[n] } else { 0 };
            let inc = if n > 0 { ranks[n - 1] } else { 0 };
            c - out - inc
        })
        .collect()
}

#[test]
fn brackets_from_matrices_satisfy_jacobi() {
    let c = structure();
    for i in 0..8 {
        for j in 0..8 {
            for k in 0..8 {
                let mut total = [0i64; 8];
                for (a, b, d) in [(i, j, k), (j, k, i), (k, i, j)] {
                    for (m, &x) in c[a][b].iter().enumerate() {
                        for (t, &y) in c[m][d].iter().enumerate() {
                            total[t] += x * y;
                        }
                    }
                }
                assert_eq!(total, [0; 8]);
            }
        }
    }
}

#[test]
fn trivial_coefficients_match_oracle() {
    for p in [5u32, 7] {
        let rep = trivial_module(p).unwrap();
        let oracle = oracle_ranks(p as i64, &vec![vec![vec![0]]; 8]);
        assert_eq!(library_ranks(&rep), oracle);
        let h = cohomology(&complex_for(AlgebraKind::Sl3, &rep).unwrap()).unwrap();
        assert_eq!(h.dims(), dims_from_ranks(1, &oracle));
        assert_eq!(h.dims(), vec![1, 0, 0, 1, 0, 1, 0, 0, 1]);
    }
}

#[test]
fn natural_and_adjoint_coefficients_match_oracle() {
    let p = 5;
    let c = structure();
    for (rep, rho) in [
        (simple_module(p, 1, 0).unwrap(), natural_action()),
        (simple_module(p, 1, 1).unwrap(), adjoint_action(&c)),
    ] {
        let dm = rho[0].len();
        assert_eq!(rep.dim(), dm);
        let oracle = oracle_ranks(p as i64, &rho);
        assert_eq!(library_ranks(&rep), oracle);
        let h = cohomology(&complex_for(AlgebraKind::Sl3, &rep).unwrap()).unwrap();
        assert_eq!(h.dims(), dims_from_ranks(dm, &oracle));
    }
}

#[test]
fn cochain_dimensions_and_weights() {
    let p = 5;
    let k = trivial_module(p).unwrap();
    let complex = complex_for(AlgebraKind::Sl3, &k).unwrap();
    assert_eq!(complex.dim(4), 70);
    for n in 0..=8 {
        assert_eq!(complex.dim(n), binomial(8, n));
        assert_eq!(subsets(8, n).len(), binomial(8, n));
    }
    complex.check().unwrap();
    // weight of f1* ∧ f2* ⊗ 1 is -(weight f1 + weight f2) = α1 + α2
    let i = complex.index_of(&[5, 6], 0);
    assert_eq!(complex.weight_of(2, i), Weight::new(1, 1));
    let restricted = complex.restrict_to_pxt(p);
    assert!(restricted.weights().iter().all(|w| w.in_p_lattice(p)));
    assert_eq!(restricted.weights(), vec![Weight::ZERO]);

    let gl = complex_for(AlgebraKind::Gl3, &k).unwrap();
    assert_eq!(gl.top_degree(), 9);
    assert_eq!(gl.dim(4), binomial(9, 4));
    gl.check().unwrap();

    let l = simple_module(p, 3, 1).unwrap();
    let cl = complex_for(AlgebraKind::Sl3, &l).unwrap();
    cl.check().unwrap();
    assert_eq!(cl.dim(3), binomial(8, 3) * l.dim());
    let mut ws = cl.restrict_to_pxt(p).weights();
    ws.sort();
    assert_eq!(ws, vec![Weight::new(-5, 5), Weight::new(0, -5), Weight::new(5, 0)]);
}

#[test]
fn block_triplets_header() {
    let l = simple_module(5, 2, 0).unwrap();
    let c = complex_for(AlgebraKind::Sl3, &l).unwrap();
    let text = c.block_triplets(2, Weight::new(5, 0));
    let header: Vec<usize> = text
        .lines()
        .next()
        .unwrap()
        .split_whitespace()
        .map(|t| t.parse().unwrap())
        .collect();
    assert_eq!(header[0], 1);
    assert_eq!(header[2], text.lines().count() - 1);
}
