use modcohom::repr::{induced_module, simple_module, singular_vectors, verma, verma_quotient, weyl_module};
use modcohom::Weight;

fn closed_form(r: u32, s: u32) -> usize {
    ((r + 1) * (s + 1) * (r + s + 2) / 2) as usize
}

#[test]
fn weyl_dimensions_follow_the_closed_form() {
    for p in [5u32, 7] {
        for r in 0..=p - 2 {
            for s in 0..=p - 2 {
                let v = weyl_module(p, r, s).unwrap();
                assert_eq!(v.dim(), closed_form(r, s), "V({r},{s}) at p={p}");
                assert!(v.check().is_empty());
                assert_eq!(v.character().get(Weight::new(r as i64, s as i64)), 1);
                let h = induced_module(p, r, s).unwrap();
                assert_eq!(h.character(), v.character());
            }
        }
    }
}

#[test]
fn verma_quotient_departs_from_the_closed_form_exactly_when_r_plus_s_reaches_p_minus_1() {
    let p = 5;
    for r in 0..=p - 2 {
        for s in 0..=p - 2 {
            let q = verma_quotient(p, r, s).unwrap().dim();
            if r + s <= p - 2 {
                assert_eq!(q, closed_form(r, s), "({r},{s})");
            } else {
                assert!(q > closed_form(r, s), "({r},{s})");
            }
        }
    }
}

#[test]
fn simple_modules_have_only_the_highest_singular_line() {
    let p = 5;
    for r in 0..p {
        for s in 0..p {
            let l = simple_module(p, r, s).unwrap();
            assert!(singular_vectors(&l).is_empty(), "L({r},{s})");
            assert!(l.character().is_weyl_symmetric());
        }
    }
}

#[test]
fn verma_modules_are_p_cubed_dimensional() {
    for p in [5u32, 7] {
        let w = verma(p, p - 2, 1).unwrap();
        assert_eq!(w.dim(), (p * p * p) as usize);
        assert!(w.check().is_empty());
    }
}

#[test]
fn peculiar_simple_dimensions_at_p5() {
    let dims: Vec<usize> = [(0, 0), (3, 1), (1, 3), (2, 0), (0, 2), (3, 3)]
        .iter()
        .map(|&(r, s)| simple_module(5, r, s).unwrap().dim())
        .collect();
    assert_eq!(dims, vec![1, 18, 18, 6, 6, 63]);
}
