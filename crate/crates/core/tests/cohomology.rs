use modcohom::cohom::{
    are_dual, compute, compute_label, decompose, euler_check, gl3_from_sl3, les_consistent, ses_consistency,
    verify_duality, CharacterTable,
};
use modcohom::liealg::AlgebraKind;
use modcohom::repr::{induced_module, simple_module, weyl_module};
use modcohom::suite::{self, SuiteName};
use modcohom::{ModuleFamily, ModuleLabel, Weight};

fn source(p: u32) -> impl Fn(AlgebraKind, &ModuleLabel) -> Result<modcohom::CohomologyReport, modcohom::cohom::CohomError> + Sync {
    move |kind, m| compute_label(p, kind, m)
}

#[test]
fn theorem_tables_at_p5() {
    let out = suite::run(SuiteName::Theorem1, 5, &source(5)).unwrap();
    assert!(out.all_passed(), "{}", out.render());
    let l31 = compute(AlgebraKind::Sl3, &simple_module(5, 3, 1).unwrap()).unwrap();
    assert_eq!(l31.dims(), vec![0, 3, 0, 0, 6, 0, 0, 3, 0]);
    assert_eq!(
        l31.degrees[4].weights.keys().copied().collect::<Vec<_>>(),
        vec![Weight::new(-5, 5), Weight::new(0, -5), Weight::new(5, 0)]
    );
}

#[test]
fn gl3_split_and_direct_agree() {
    let m = simple_module(5, 3, 3).unwrap();
    let sl = compute(AlgebraKind::Sl3, &m).unwrap();
    let gl = compute(AlgebraKind::Gl3, &m).unwrap();
    assert_eq!(gl3_from_sl3(&sl).dims(), gl.dims());
    assert_eq!(gl.dims(), vec![0, 1, 1, 8, 26, 26, 8, 1, 1, 0]);
}

#[test]
fn duality_and_euler() {
    for (r, s) in [(3u32, 1u32), (2, 0), (3, 3)] {
        let l = simple_module(5, r, s).unwrap();
        assert!(verify_duality(AlgebraKind::Sl3, &l).unwrap());
        assert!(euler_check(&compute(AlgebraKind::Sl3, &l).unwrap()));
    }
    let h = compute(AlgebraKind::Sl3, &induced_module(5, 3, 3).unwrap()).unwrap();
    let v = compute(AlgebraKind::Sl3, &weyl_module(5, 3, 3).unwrap()).unwrap();
    assert_eq!(h.dims(), vec![0, 0, 0, 8, 17, 9, 0, 1, 1]);
    assert_eq!(v.dims(), vec![1, 1, 0, 9, 17, 8, 0, 0, 0]);
    assert!(are_dual(&h, &v));
}

#[test]
fn long_exact_sequence_of_weyl_module_extension() {
    // 0 -> L(p-3,0) -> V(p-2,1) -> L(p-2,1) -> 0
    let p = 5;
    let a = compute(AlgebraKind::Sl3, &simple_module(p, 2, 0).unwrap()).unwrap();
    let b = compute(AlgebraKind::Sl3, &weyl_module(p, 3, 1).unwrap()).unwrap();
    let c = compute(AlgebraKind::Sl3, &simple_module(p, 3, 1).unwrap()).unwrap();
    assert!(les_consistent(&a, &b, &c));
    // a split extension would add dimensions degree by degree
    let mut split = c.clone();
    for (d, e) in split.degrees.iter_mut().zip(&a.degrees) {
        d.dim += e.dim;
        for (w, m) in &e.weights {
            *d.weights.entry(*w).or_insert(0) += m;
        }
    }
    assert_ne!(split.dims(), b.dims());
    assert!(les_consistent(&a, &split, &c));
}

#[test]
fn ses_consistency_rejects_mismatched_characters() {
    let p = 5;
    let a = simple_module(p, 2, 0).unwrap();
    let b = weyl_module(p, 3, 1).unwrap();
    let inclusion = modcohom::SparseMat::zeros(b.dim(), a.dim());
    assert!(ses_consistency(AlgebraKind::Sl3, &a, &b, &a, &inclusion).is_err());
}

#[test]
fn decomposition_with_weyl_table() {
    let m = simple_module(5, 3, 3).unwrap();
    let raw = compute(AlgebraKind::Sl3, &m).unwrap();
    let weyl = decompose(&raw, &CharacterTable::weyl()).unwrap();
    assert_eq!(weyl.degrees[4].factors, raw.degrees[4].factors);
    assert!(weyl.degrees.iter().all(|d| d.residual.is_empty()));
}

#[test]
fn peculiar_scan_at_p5() {
    let found = suite::peculiar_scan(5, ModuleFamily::Simple, &source(5)).unwrap();
    assert_eq!(found, vec![(0, 0), (0, 2), (1, 3), (2, 0), (3, 1), (3, 3)]);
}

#[test]
fn lemma_blocks_at_p5() {
    let out = suite::run(SuiteName::LemmaBlocks, 5, &source(5)).unwrap();
    assert!(out.all_passed(), "{}", out.render());
}
