use super::*;
use crate::liealg::{weyl_character, weyl_dimension};

fn w(a: i64, b: i64) -> Weight {
    Weight::new(a, b)
}

#[test]
fn verma_shape_and_highest_weight() {
    let m = verma(5, 3, 1).unwrap();
    assert_eq!(m.dim(), 125);
    assert_eq!(m.weights()[verma_index(5, 0, 0, 0)], w(3, 1));
    assert!(m.check().is_empty(), "{:?}", m.check());
    // e1 v_{1,0,0} = r v_{0,0,0}
    let img = m.images()[basis::E1].row(verma_index(5, 1, 0, 0)).to_vec();
    assert_eq!(img, vec![(verma_index(5, 0, 0, 0), 3)]);
}

#[test]
fn verma_rejects_unrestricted_weights() {
    assert_eq!(
        verma(5, 5, 0).unwrap_err(),
        ReprError::WeightOutOfRange { r: 5, s: 0, p: 5 }
    );
    assert!(matches!(verma(4, 0, 0), Err(ReprError::Field(_))));
}

#[test]
fn corrupted_action_is_reported() {
    let m = verma(5, 3, 1).unwrap();
    let f = *m.field();
    let mut actions = m.actions().to_vec();
    let col = verma_index(5, 1, 0, 0);
    let row = verma_index(5, 0, 0, 0);
    actions[basis::E1].set(&f, row, col, 2);
    let bad = Representation::from_parts(
        f,
        m.algebra().clone(),
        actions,
        m.weights().to_vec(),
        m.highest_weight(),
        m.label(),
    );
    let v = bad.check();
    assert!(v.iter().any(|x| matches!(x, Violation::Bracket { .. })), "{v:?}");
}

#[test]
fn trivial_and_small_weyl_modules() {
    let k = weyl_module(5, 0, 0).unwrap();
    assert_eq!(k.dim(), 1);
    assert!(k.actions().iter().all(SparseMat::is_zero));
    assert_eq!(weyl_module(5, 2, 0).unwrap().dim(), 6);
    assert_eq!(weyl_module(5, 3, 1).unwrap().dim(), 24);
    assert_eq!(weyl_module(5, 3, 3).unwrap().dim(), 64);
}

#[test]
fn generated_submodules() {
    let m = verma(5, 3, 1).unwrap();
    assert!(generated_submodule(&m, &[]).unwrap().is_zero());
    let all = generated_submodule(&m, &[vec![(verma_index(5, 0, 0, 0), 1)]]).unwrap();
    assert_eq!(all.dim(), 125);
    // I(3,1) is strictly smaller than the kernel of W(3,1) -> V(3,1)
    let i = generated_submodule(&m, &weyl_generators(5, 3, 1)).unwrap();
    assert_eq!(i.dim(), 94);
    assert_eq!(verma_quotient(5, 3, 1).unwrap().dim(), 31);
}

#[test]
fn verma_quotient_agrees_with_weyl_module_for_small_weights() {
    for p in [5u32, 7] {
        for r in 0..p - 1 {
            for s in 0..p - 1 - r {
                let q = verma_quotient(p, r, s).unwrap();
                assert_eq!(q.character(), weyl_module(p, r, s).unwrap().character());
            }
        }
    }
}

#[test]
fn weyl_modules_are_quotients_of_verma_modules() {
    for (p, r, s) in [(5u32, 3u32, 1u32), (5, 3, 3), (5, 2, 2), (7, 5, 5), (7, 5, 1), (7, 4, 0)] {
        let v = weyl_module(p, r, s).unwrap();
        let top = v.weights().iter().position(|x| *x == w(r as i64, s as i64)).unwrap();
        let phi = verma_map(p, r, s, &v, top).unwrap();
        let f = *v.field();
        let image = SubspaceBasis::span(&f, v.dim(), phi.transpose().row_vecs().iter().cloned());
        assert_eq!(image.dim(), v.dim(), "V({r},{s}) is cyclic");
        // phi intertwines the actions on basis vectors of W
        let m = verma(p, r, s).unwrap();
        for x in 0..8 {
            let lhs = v.action(x).mul(&f, &phi);
            let rhs = phi.mul(&f, m.action(x));
            assert_eq!(lhs, rhs, "x = {x}");
        }
        // and kills I(r, s)
        for g in weyl_generators(p, r, s) {
            assert!(phi.mul_vec(&f, &g).is_empty());
        }
    }
}

#[test]
fn quotient_by_zero_is_identity() {
    let m = weyl_module(5, 2, 0).unwrap();
    let q = m.quotient(&SubspaceBasis::zero(m.dim())).unwrap();
    assert_eq!(q.dim(), m.dim());
    assert_eq!(q.actions(), m.actions());
}

#[test]
fn quotient_rejects_non_submodules() {
    let m = verma(5, 3, 1).unwrap();
    let f = *m.field();
    // v_{0,0,0} alone is not stable
    let sub = SubspaceBasis::span(&f, m.dim(), vec![vec![(verma_index(5, 0, 0, 0), 1)]]);
    assert!(matches!(m.quotient(&sub), Err(ReprError::NotASubmodule(_))));
    let mixed = SubspaceBasis::span(
        &f,
        m.dim(),
        vec![vec![(verma_index(5, 0, 0, 0), 1), (verma_index(5, 1, 0, 0), 1)]],
    );
    assert_eq!(m.quotient(&mixed).unwrap_err(), ReprError::NotWeightHomogeneous);
}

#[test]
fn weyl_relations_hold_in_quotient() {
    // in V(3,1) the images of v_{4,0,0} and v_{0,2,0} vanish: f1^4 u = 0 and f2^2 u = 0
    let v = weyl_module(5, 3, 1).unwrap();
    let f = *v.field();
    let hw = v
        .weights()
        .iter()
        .position(|x| *x == w(3, 1))
        .unwrap();
    let f1 = v.action(basis::F1);
    let f2 = v.action(basis::F2);
    let mut x = vec![(hw, 1u32)];
    for _ in 0..4 {
        x = f1.mul_vec(&f, &x);
    }
    assert!(x.is_empty());
    let mut y = vec![(hw, 1u32)];
    for _ in 0..2 {
        y = f2.mul_vec(&f, &y);
    }
    assert!(y.is_empty());
}

#[test]
fn singular_vectors_of_peculiar_weyl_modules() {
    let v = weyl_module(5, 3, 1).unwrap();
    let sv = singular_vectors(&v);
    assert_eq!(sv.len(), 1);
    assert_eq!(sv[0].0, w(2, 0));
    assert_eq!(sv[0].1.dim(), 1);

    let v = weyl_module(5, 3, 3).unwrap();
    let sv = singular_vectors(&v);
    assert_eq!(sv.len(), 1);
    assert_eq!(sv[0].0, w(0, 0));

    assert!(singular_vectors(&weyl_module(5, 2, 0).unwrap()).is_empty());
}

#[test]
fn printed_generators_are_singular_in_the_weyl_module() {
    for p in [5u32, 7] {
        let f = PrimeField::new(p as i64).unwrap();
        let pi = p as i64;
        let cases: Vec<(u32, u32, Weight, Vec<(usize, i64)>)> = vec![
            (
                p - 2,
                1,
                w(pi - 3, 0),
                vec![(verma_index(p, 1, 1, 0), 1), (verma_index(p, 0, 0, 1), -2)],
            ),
            (
                1,
                p - 2,
                w(0, pi - 3),
                vec![(verma_index(p, 1, 1, 0), 1), (verma_index(p, 0, 0, 1), 1)],
            ),
            (
                p - 2,
                p - 2,
                w(0, 0),
                (0..=p - 2)
                    .map(|i| {
                        // i! (p-2-i)!; with (p-2-i) in place of (p-2-i)! the vector is not singular
                        let c = f.factorial(i as u64) as i64 * f.factorial((p - 2 - i) as u64) as i64;
                        (verma_index(p, p - 2 - i, p - 2 - i, i), c)
                    })
                    .collect(),
            ),
        ];
        for (r, s, wt, vec) in cases {
            let v = weyl_module(p, r, s).unwrap();
            let top = v.weights().iter().position(|x| *x == w(r as i64, s as i64)).unwrap();
            let phi = verma_map(p, r, s, &v, top).unwrap();
            let x = phi.mul_vec(&f, &verma(p, r, s).unwrap().vector(&vec));
            assert!(!x.is_empty(), "p={p} ({r},{s}) generator vanishes");
            assert!(x.iter().all(|&(k, _)| v.weights()[k] == wt));
            for e in [basis::E1, basis::E2] {
                assert!(v.action(e).mul_vec(&f, &x).is_empty(), "p={p} ({r},{s}) e={e}");
            }
            // it spans the singular vectors of V(r, s)
            let sv = singular_vectors(&v);
            assert_eq!(sv.len(), 1);
            assert_eq!(sv[0].0, wt);
            assert!(sv[0].1.contains(&f, &x));
        }
    }
}

#[test]
fn linear_factor_instead_of_factorial_is_not_singular() {
    for p in [5u32, 7] {
        let f = PrimeField::new(p as i64).unwrap();
        let m = verma(p, p - 2, p - 2).unwrap();
        let x = m.vector(
            &(0..=p - 2)
                .map(|i| {
                    let c = (p as i64 - 2 - i as i64) * f.factorial(i as u64) as i64;
                    (verma_index(p, p - 2 - i, p - 2 - i, i), c)
                })
                .collect::<Vec<_>>(),
        );
        let v = weyl_module(p, p - 2, p - 2).unwrap();
        let top = v.weights().iter().position(|y| *y == m.highest_weight()).unwrap();
        let phi = verma_map(p, p - 2, p - 2, &v, top).unwrap();
        let y = phi.mul_vec(&f, &x);
        assert!(!v.action(basis::E1).mul_vec(&f, &y).is_empty());
    }
}

#[test]
fn simple_modules_of_small_weight() {
    let l = simple_module(5, 2, 0).unwrap();
    assert_eq!(l.dim(), 6);
    let l = simple_module(5, 3, 1).unwrap();
    assert_eq!(l.dim(), 18);
    let l = simple_module(5, 3, 3).unwrap();
    assert_eq!(l.dim(), 63);
    assert!(l.check().is_empty());
    assert!(singular_vectors(&l).is_empty());
}

#[test]
fn characters_of_standard_and_adjoint() {
    let l10 = simple_module(5, 1, 0).unwrap().character();
    let expect = Character::from_weights([w(1, 0), w(-1, 1), w(0, -1)]);
    assert_eq!(l10, expect);
    let adj = simple_module(5, 1, 1).unwrap().character();
    assert_eq!(adj.dim(), 8);
    assert_eq!(adj.get(Weight::ZERO), 2);
    for root in crate::liealg::sl3_spec().basis_weights {
        if root != Weight::ZERO {
            assert_eq!(adj.get(root), 1);
        }
    }
    assert_eq!(weyl_module(5, 3, 1).unwrap().character().dim(), 24);
}

#[test]
fn weyl_characters_match_tableaux() {
    for (r, s) in [(3u32, 1u32), (2, 0), (3, 3), (1, 1)] {
        let ch = weyl_module(5, r, s).unwrap().character();
        assert_eq!(ch, Character::from_map(weyl_character(r, s)));
        assert_eq!(ch.dim(), weyl_dimension(r, s));
    }
}

#[test]
fn duals() {
    let k = trivial_module(5).unwrap();
    let kd = k.dual();
    assert_eq!(kd.dim(), 1);
    assert!(kd.actions().iter().all(SparseMat::is_zero));

    let l = simple_module(5, 3, 1).unwrap();
    let d = l.dual();
    assert!(d.check().is_empty());
    assert_eq!(d.highest_weight(), w(1, 3));
    assert_eq!(d.character(), simple_module(5, 1, 3).unwrap().character());
    assert_eq!(d.dual().character(), l.character());
    assert_eq!(d.character(), l.character().dual());
}

#[test]
fn induced_modules() {
    let h = induced_module(5, 0, 0).unwrap();
    assert_eq!(h.dim(), 1);
    let h = induced_module(5, 2, 0).unwrap();
    assert_eq!(h.character(), simple_module(5, 2, 0).unwrap().character());
    let h = induced_module(5, 3, 3).unwrap();
    let expect = simple_module(5, 3, 3)
        .unwrap()
        .character()
        .add(&trivial_module(5).unwrap().character());
    assert_eq!(h.character(), expect);
    assert!(h.check().is_empty());
}

#[test]
fn gl3_extension_and_submodules() {
    let h = induced_module(5, 3, 3).unwrap();
    let f = *h.field();
    let top = h.weights().iter().position(|x| *x == w(3, 3)).unwrap();
    let sub = generated_submodule(&h, &[vec![(top, 1)]]).unwrap();
    assert_eq!(sub.dim(), 63);
    let (a, incl) = h.submodule(&sub).unwrap();
    assert!(a.check().is_empty());
    assert!(h.is_embedding_of(&a, &incl));
    let c = h.quotient(&sub).unwrap();
    assert_eq!(c.dim(), 1);
    assert_eq!(c.weights(), &[Weight::ZERO]);
    let g = a.extend_to_gl3().unwrap();
    assert_eq!(g.actions().len(), 9);
    assert!(g.check().is_empty());
    assert!(g.extend_to_gl3().is_err());
    let _ = f;
}

#[test]
fn coordinate_ring_model_matches_induced_module() {
    for (p, r, s) in [(5u32, 3u32, 1u32), (5, 3, 3), (5, 0, 0), (7, 5, 1), (7, 2, 4)] {
        let q = coordinate_ring_module(p, r, s).unwrap();
        assert!(q.check().is_empty(), "{:?}", q.check());
        assert_eq!(q.dim(), weyl_dimension(r, s));
        assert_eq!(q.character(), induced_module(p, r, s).unwrap().character());
        // socle is L(r, s): the submodule generated by the highest weight vector
        let top = q.weights().iter().position(|x| *x == w(r as i64, s as i64)).unwrap();
        let soc = generated_submodule(&q, &[vec![(top, 1)]]).unwrap();
        assert_eq!(soc.dim(), simple_module(p, r, s).unwrap().dim());
    }
}
