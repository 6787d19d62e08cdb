use std::collections::{BTreeMap, BTreeSet};

use super::*;
use crate::group::{in_levi, in_radical};

type Cf = ClassFunction<Rational>;

fn r(v: i64) -> Rational {
    Rational::from_int(v)
}

fn element_order(g: &FqMatrix) -> usize {
    let id = FqMatrix::identity(g.n(), g.field());
    let mut x = *g;
    let mut k = 1;
    while x != id {
        x = x.mul(g);
        k += 1;
    }
    k
}

/// Values of a class function on GL_2(F_2), keyed by element order.
fn by_order(psi: &Cf) -> BTreeMap<usize, Rational> {
    let g = psi.group();
    (0..g.class_count() as u32)
        .map(|c| {
            (
                element_order(g.class_rep_matrix(c)),
                psi.class_value(c).clone(),
            )
        })
        .collect()
}

#[test]
fn flag_character_of_gl2() {
    let e = Engine::with_budget(2, 25_000).unwrap();
    let h = GlHopf::new(&e);
    let one1 = Cf::one(e.gl(1).unwrap());
    let prod = h.mu_homogeneous(&one1, &one1).unwrap();
    let expected = BTreeMap::from([(1, r(3)), (2, r(1)), (3, r(0))]);
    assert_eq!(by_order(&prod), expected);
    let ind = h
        .induce_homogeneous(&delta_indicator(&e, &Nuio::chain(2)).unwrap())
        .unwrap();
    assert_eq!(by_order(&ind), expected);
    assert_eq!(prod.values(), &[r(1), r(0), r(3)]);
}

#[test]
fn units_and_degree_one() {
    let e = Engine::with_budget(2, 25_000).unwrap();
    let h = GlHopf::new(&e);
    let unit: GlCf<Rational> = h.unit().unwrap();
    let x = GlCf::homogeneous(Cf::class_indicator(e.gl(2).unwrap(), 1));
    assert_eq!(h.mu(&unit, &x).unwrap(), x);
    assert_eq!(h.mu(&x, &unit).unwrap(), x);
    let u0 = unit.component(0).unwrap().clone();
    let mut expected = GlTensor::zero();
    expected
        .add_component(ProductClassFunction::tensor(&u0, &u0))
        .unwrap();
    assert_eq!(h.delta(&unit).unwrap(), expected);
    let one1 = Cf::one(e.gl(1).unwrap());
    let mut expected = GlTensor::zero();
    expected
        .add_component(ProductClassFunction::tensor(&one1, &u0))
        .unwrap();
    expected
        .add_component(ProductClassFunction::tensor(&u0, &one1))
        .unwrap();
    assert_eq!(h.delta_homogeneous(&one1).unwrap(), expected);
    assert_eq!(
        h.induce(&h.ut_hopf().unit::<Rational>().unwrap()).unwrap(),
        unit
    );
}

#[test]
fn associative_on_indicators() {
    let e = Engine::with_budget(2, 25_000).unwrap();
    let h = GlHopf::new(&e);
    let basis: Vec<Cf> = (0..=3)
        .flat_map(|n| Cf::indicator_basis(&e.gl(n).unwrap()))
        .collect();
    for x in &basis {
        for y in &basis {
            for z in &basis {
                if x.group().n() + y.group().n() + z.group().n() > 3 {
                    continue;
                }
                let left = h
                    .mu_homogeneous(&h.mu_homogeneous(x, y).unwrap(), z)
                    .unwrap();
                let right = h
                    .mu_homogeneous(x, &h.mu_homogeneous(y, z).unwrap())
                    .unwrap();
                assert_eq!(left, right);
            }
        }
    }
}

type Triple = BTreeMap<(usize, usize, usize, u32, u32, u32), Rational>;

fn expand_left(h: &GlHopf<'_>, d: &GlTensor<Rational>) -> Triple {
    let mut out = Triple::new();
    for piece in d.components().values() {
        for (a, ea) in Cf::indicator_basis(piece.left()).into_iter().enumerate() {
            for b in 0..piece.right().class_count() as u32 {
                let w = piece.value(a as u32, b).clone();
                if w == r(0) {
                    continue;
                }
                for inner in h.delta_homogeneous(&ea).unwrap().components().values() {
                    for c in 0..inner.left().class_count() as u32 {
                        for dd in 0..inner.right().class_count() as u32 {
                            let key = (
                                inner.left().n(),
                                inner.right().n(),
                                piece.right().n(),
                                c,
                                dd,
                                b,
                            );
                            *out.entry(key).or_insert_with(|| r(0)) +=
                                w.clone() * inner.value(c, dd).clone();
                        }
                    }
                }
            }
        }
    }
    out.retain(|_, v| *v != r(0));
    out
}

fn expand_right(h: &GlHopf<'_>, d: &GlTensor<Rational>) -> Triple {
    let mut out = Triple::new();
    for piece in d.components().values() {
        for (b, eb) in Cf::indicator_basis(piece.right()).into_iter().enumerate() {
            for a in 0..piece.left().class_count() as u32 {
                let w = piece.value(a, b as u32).clone();
                if w == r(0) {
                    continue;
                }
                for inner in h.delta_homogeneous(&eb).unwrap().components().values() {
                    for c in 0..inner.left().class_count() as u32 {
                        for dd in 0..inner.right().class_count() as u32 {
                            let key = (
                                piece.left().n(),
                                inner.left().n(),
                                inner.right().n(),
                                a,
                                c,
                                dd,
                            );
                            *out.entry(key).or_insert_with(|| r(0)) +=
                                w.clone() * inner.value(c, dd).clone();
                        }
                    }
                }
            }
        }
    }
    out.retain(|_, v| *v != r(0));
    out
}

#[test]
fn coassociative_at_degree_three() {
    let e = Engine::with_budget(2, 25_000).unwrap();
    let h = GlHopf::new(&e);
    for psi in Cf::indicator_basis(&e.gl(3).unwrap()) {
        let d = h.delta_homogeneous(&psi).unwrap();
        assert_eq!(expand_left(&h, &d), expand_right(&h, &d));
    }
}

#[test]
fn bialgebra_on_indicators() {
    let e = Engine::with_budget(2, 25_000).unwrap();
    let h = GlHopf::new(&e);
    let basis: Vec<Cf> = (0..=2)
        .flat_map(|n| Cf::indicator_basis(&e.gl(n).unwrap()))
        .collect();
    for x in &basis {
        for y in &basis {
            if x.group().n() + y.group().n() > 3 {
                continue;
            }
            let lhs = h
                .delta_homogeneous(&h.mu_homogeneous(x, y).unwrap())
                .unwrap();
            let rhs = h
                .tensor_mu(
                    &h.delta_homogeneous(x).unwrap(),
                    &h.delta_homogeneous(y).unwrap(),
                )
                .unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn induction_is_a_hopf_map_small() {
    for (q, n) in [(2, 3), (3, 2)] {
        let e = Engine::with_budget(q, 25_000).unwrap();
        let report = verify_induction_hom(&e, n).unwrap();
        assert!(report.passed(), "{:?}", report.failures().next());
        assert!(report.len() > 5);
    }
}

#[test]
fn induction_hom_on_class_indicators() {
    let e = Engine::with_budget(2, 25_000).unwrap();
    let h = GlHopf::new(&e);
    let ut = h.ut_hopf();
    let basis: Vec<Cf> = (0..=3)
        .flat_map(|n| Cf::indicator_basis(&e.ut(n).unwrap()))
        .collect();
    for x in &basis {
        assert_eq!(
            h.delta_homogeneous(&h.induce_homogeneous(x).unwrap())
                .unwrap(),
            h.induce_tensor(&ut.delta_homogeneous(x).unwrap()).unwrap()
        );
        for y in &basis {
            if x.group().n() + y.group().n() > 3 {
                continue;
            }
            assert_eq!(
                h.mu_homogeneous(
                    &h.induce_homogeneous(x).unwrap(),
                    &h.induce_homogeneous(y).unwrap()
                )
                .unwrap(),
                h.induce_homogeneous(&ut.mu_homogeneous(x, y).unwrap())
                    .unwrap()
            );
        }
    }
}

#[test]
fn dagger_invariance_small() {
    for q in [2, 3] {
        let e = Engine::with_budget(q, 25_000).unwrap();
        let report = verify_dagger_invariance(&e, 3).unwrap();
        assert!(report.passed());
    }
}

#[test]
fn mackey_formula() {
    let e = Engine::with_budget(2, 25_000).unwrap();
    for (n, i) in [(2, 1), (3, 1), (3, 2), (3, 0), (3, 3), (2, 0)] {
        let report = mackey_witness(&e, n, i).unwrap();
        assert!(report.passed(), "n={n} i={i}");
        assert_eq!(report.len(), e.ut(n).unwrap().class_count());
    }
    assert!(mackey_witness(&e, 2, 3).is_err());
    let e3 = Engine::with_budget(3, 25_000).unwrap();
    assert!(mackey_witness(&e3, 2, 1).unwrap().passed());
}

#[test]
fn bruhat_double_cosets_partition_gl() {
    let e = Engine::with_budget(2, 25_000).unwrap();
    for n in 1..=3 {
        let gl = e.gl(n).unwrap();
        let ut = e.ut(n).unwrap();
        for i in 0..=n {
            let p = e.parabolic(n, i).unwrap();
            let mut seen = BTreeSet::new();
            let mut total = 0;
            for sub in subsets(&interval(n)).into_iter().filter(|s| s.len() == i) {
                let w = FqMatrix::permutation(&coset_rep_w(&sub, n), gl.field());
                let coset: BTreeSet<FqMatrix> = ut
                    .elements()
                    .iter()
                    .flat_map(|u| p.elements().iter().map(move |x| u.mul(&w).mul(x)))
                    .collect();
                total += coset.len();
                seen.extend(coset);
            }
            assert_eq!(total, gl.order(), "disjoint for n={n} i={i}");
            assert_eq!(seen.len(), gl.order(), "cover for n={n} i={i}");
        }
    }
}

#[test]
fn conjugated_blocks_meet_ut_in_pattern_groups() {
    let e = Engine::with_budget(2, 25_000).unwrap();
    for n in 1..=4 {
        let ut = e.ut(n).unwrap();
        for sub in subsets(&interval(n)) {
            let i = sub.len();
            let w = coset_rep_w(&sub, n);
            let mut back = vec![0; n];
            for (k, img) in w.iter().enumerate() {
                back[*img as usize - 1] = k as Label + 1;
            }
            let a = SetComposition::split(&sub, &complement(&interval(n), &sub)).unwrap();
            let (l, rad, p) =
                PatternDescriptor::levi_radical_parabolic(TotalOrder::standard(n).as_order(), &a)
                    .unwrap();
            for g in ut.elements() {
                let pulled = g.conjugate_by_permutation(&back);
                assert_eq!(l.contains(g), in_levi(&pulled, i));
                assert_eq!(rad.contains(g), in_radical(&pulled, i));
                assert_eq!(p.contains(g), in_parabolic(&pulled, i));
            }
        }
    }
}

#[test]
fn unipotent_elements_conjugate_to_their_dagger() {
    for q in [2, 3] {
        let e = Engine::with_budget(q, 25_000).unwrap();
        for n in 1..=3 {
            let gl = e.gl(n).unwrap();
            for g in e.ut(n).unwrap().elements() {
                assert_eq!(gl.class_of_matrix(g), gl.class_of_matrix(&g.dagger()));
            }
        }
    }
}

#[test]
fn rejects_foreign_groups() {
    let e = Engine::with_budget(2, 25_000).unwrap();
    let h = GlHopf::new(&e);
    let on_ut = Cf::one(e.ut(2).unwrap());
    assert!(matches!(
        h.delta_homogeneous(&on_ut),
        Err(Error::GroupMismatch(..))
    ));
}
