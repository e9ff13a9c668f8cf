//! Sparse elimination against a naive dense oracle written here.

use modcohom::linalg::{self, rank_and_kernel_with, row_space, rowspace_closure, SparseVec, Strategy as Elim};
use modcohom::{PrimeField, SparseMat};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn oracle_rank(p: u64, m: &[Vec<u64>]) -> usize {
    let mut a: Vec<Vec<u64>> = m.to_vec();
    let cols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(i) = (rank..a.len()).find(|&i| a[i][c] % p != 0) else {
            continue;
        };
        a.swap(rank, i);
        let inv = (1..p).find(|x| a[rank][c] * x % p == 1).unwrap();
        for i in 0..a.len() {
            if i != rank && a[i][c] != 0 {
                let f = a[i][c] * inv % p;
                for j in 0..cols {
                    a[i][j] = (a[i][j] + (p - f) * a[rank][j]) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn random_matrix(rng: &mut ChaCha8Rng, p: u64) -> Vec<Vec<u64>> {
    let rows = rng.gen_range(1..=50);
    let cols = rng.gen_range(1..=50);
    let density: f64 = rng.gen_range(0.02..0.9);
    let mut m: Vec<Vec<u64>> = (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| if rng.gen_bool(density) { rng.gen_range(1..p) } else { 0 })
                .collect()
        })
        .collect();
    // force some dependent rows
    if rows > 2 && rng.gen_bool(0.5) {
        let c = rng.gen_range(1..p);
        let (a, b) = (m[0].clone(), m[1].clone());
        m[rows - 1] = a.iter().zip(&b).map(|(x, y)| (x + c * y) % p).collect();
    }
    m
}

fn to_sparse(f: &PrimeField, m: &[Vec<u64>]) -> SparseMat {
    let dense: Vec<Vec<i64>> = m.iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect();
    SparseMat::from_dense(f, &dense)
}

fn apply(f: &PrimeField, m: &SparseMat, v: &[(usize, u32)]) -> SparseVec {
    m.mul_vec(f, v)
}

#[test]
fn rank_and_kernel_match_dense_oracle() {
    for p in [5u64, 7] {
        let f = PrimeField::new(p as i64).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed + p);
        for _ in 0..250 {
            let m = random_matrix(&mut rng, p);
            let s = to_sparse(&f, &m);
            let expected = oracle_rank(p, &m);
            for strategy in [Elim::Sparse, Elim::Dense, Elim::default()] {
                let (rank, kernel) = rank_and_kernel_with(&f, &s, strategy);
                assert_eq!(rank, expected, "p={p} {strategy:?}");
                assert_eq!(kernel.dim(), s.cols() - rank);
                for v in kernel.vectors() {
                    assert!(apply(&f, &s, v).is_empty());
                }
            }
            assert_eq!(linalg::rank(&f, &s), expected);
            assert_eq!(
                row_space(&f, &s, Elim::Sparse),
                row_space(&f, &s, Elim::Dense)
            );
        }
    }
}

fn matrix_strategy() -> impl Strategy<Value = (u64, Vec<Vec<u64>>)> {
    (prop::sample::select(vec![5u64, 7]), 1usize..12, 1usize..12).prop_flat_map(|(p, r, c)| {
        (
            Just(p),
            prop::collection::vec(prop::collection::vec(0..p, c), r),
        )
    })
}

proptest! {
    #[test]
    fn rank_equals_rank_of_transpose((p, m) in matrix_strategy()) {
        let f = PrimeField::new(p as i64).unwrap();
        let s = to_sparse(&f, &m);
        prop_assert_eq!(linalg::rank(&f, &s), linalg::rank(&f, &s.transpose()));
        prop_assert_eq!(linalg::rank(&f, &s), oracle_rank(p, &m));
    }

    #[test]
    fn closure_is_idempotent_and_stable((p, m) in matrix_strategy(), seed in 0u64..1000) {
        let f = PrimeField::new(p as i64).unwrap();
        let n = m[0].len();
        let square: Vec<Vec<u64>> = (0..n).map(|i| m.get(i).cloned().unwrap_or(vec![0; n])).collect();
        let op = to_sparse(&f, &square);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let seed_vec: SparseVec = (0..n)
            .filter_map(|i| {
                let x = rng.gen_range(0..p) as u32;
                (x != 0).then_some((i, x))
            })
            .collect();
        let closed = rowspace_closure(&f, n, &[seed_vec.clone()], &[op.clone()]).unwrap();
        prop_assert!(closed.is_stable_under(&f, &op));
        prop_assert!(closed.contains(&f, &seed_vec));
        let again = rowspace_closure(&f, n, closed.vectors(), &[op.clone()]).unwrap();
        prop_assert_eq!(&again, &closed);
    }
}
