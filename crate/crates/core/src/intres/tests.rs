use super::*;
use crate::families::{a_type, atilde, chain, star};
use crate::gen;
use crate::io::parse_poset;
use crate::linalg::Field;
use crate::pmod::{hom_dim, is_isomorphic, PersistenceModule};
use crate::poset::{InteriorSystem, Interval, Poset};
use crate::Error;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

const F2: Field = Field::GF2;

fn iv(p: &Arc<Poset>, labels: &[&str]) -> Interval {
    Interval::from_labels(p, labels).unwrap()
}

fn module(p: &Arc<Poset>, labels: &[&str]) -> PersistenceModule {
    PersistenceModule::interval(p.clone(), F2, iv(p, labels).members()).unwrap()
}

fn arrow_labels(p: &Poset, arrows: &[IrreducibleArrow]) -> Vec<(Vec<String>, ArrowKind)> {
    arrows
        .iter()
        .map(|a| (p.set_labels(a.source.members()), a.kind))
        .collect()
}

#[test]
fn arrows_on_two_chain() {
    let p = Arc::new(chain(2));
    assert!(irreducible_arrows(&p, &iv(&p, &["2"])).is_empty());
    let got = arrow_labels(&p, &irreducible_arrows(&p, &iv(&p, &["1"])));
    assert_eq!(
        got,
        vec![(vec!["1".to_string(), "2".to_string()], ArrowKind::Surjective)]
    );
    let g = gamma(&p, F2, &iv(&p, &["1"])).unwrap();
    assert!(is_isomorphic(&g, &module(&p, &["2"])).unwrap());
    assert!(gamma(&p, F2, &iv(&p, &["2"])).unwrap().is_zero());
}

#[test]
fn arrows_inside_a4() {
    let p = Arc::new(chain(4));
    let s = iv(&p, &["2", "3"]);
    let got = arrow_labels(&p, &irreducible_arrows(&p, &s));
    let want = vec![
        (
            vec!["2".to_string(), "3".to_string(), "4".to_string()],
            ArrowKind::Surjective,
        ),
        (vec!["3".to_string()], ArrowKind::Injective),
    ];
    assert_eq!(got, want);
    let g = gamma(&p, F2, &s).unwrap();
    assert!(is_isomorphic(&g, &module(&p, &["3", "4"])).unwrap());
}

#[test]
fn arrow_morphisms_are_natural() {
    let p = Arc::new(atilde(&[1, 0, 1, 0]));
    for s in p.enumerate_intervals() {
        for a in irreducible_arrows(&p, &s) {
            let phi = a.morphism(&p, F2).unwrap();
            match a.kind {
                ArrowKind::Surjective => assert!(phi.is_surjective()),
                ArrowKind::Injective => assert!(phi.is_injective()),
            }
        }
    }
}

#[test]
fn maximal_leaf_singleton_has_zero_gamma() {
    let p = Arc::new(star(3, true));
    assert!(gamma(&p, F2, &iv(&p, &["1"])).unwrap().is_zero());
}

#[test]
fn cover_of_an_interval_is_itself() {
    let p = Arc::new(atilde(&[0, 0, 0, 0]));
    for s in p.enumerate_intervals() {
        let m = PersistenceModule::interval(p.clone(), F2, s.members()).unwrap();
        let c = interval_cover(&m).unwrap();
        assert_eq!(c.total_multiplicity(), 1);
        assert_eq!(c.summands, vec![s.members().clone()]);
        assert!(c.kernel.is_zero());
        assert!(verify_cover_minimal(&c, &m));
        assert_eq!(intresdim(&m).unwrap(), 0);
    }
}

#[test]
fn gamma_of_star_centre() {
    let p = Arc::new(star(3, true));
    let g = gamma(&p, F2, &iv(&p, &["c"])).unwrap();
    let c = interval_cover(&g).unwrap();
    assert!(c.kernel.total_dim() < g.total_dim());
    assert!(c.cover_map.is_surjective());
    assert!(is_interval_approximation(&c.cover_map));
    assert_eq!(intresdim(&g).unwrap(), 1);
}

#[test]
fn a_type_modules_have_dimension_zero() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for orient in [[true, true, true], [true, false, true], [false, false, true]] {
        let p = Arc::new(a_type(&orient));
        for _ in 0..5 {
            let m = gen::random_module(&mut rng, &p, F2, 8).unwrap();
            assert_eq!(intresdim(&m).unwrap(), 0);
        }
    }
}

#[test]
fn intresdim_of_sum_is_max() {
    let p = Arc::new(star(4, true));
    let g1 = gamma(&p, F2, &iv(&p, &["c"])).unwrap();
    let g2 = gamma(&p, F2, &iv(&p, &["c", "1"])).unwrap();
    let (d1, d2) = (intresdim(&g1).unwrap(), intresdim(&g2).unwrap());
    let sum = PersistenceModule::direct_sum(p.clone(), F2, &[g1, g2]).unwrap();
    assert_eq!(intresdim(&sum).unwrap(), d1.max(d2));
}

#[test]
fn small_gldims() {
    assert_eq!(intresgldim(&chain(2)).unwrap().gldim, 0);
    let square = parse_poset(include_str!("../../tests/data/square.poset")).unwrap();
    assert_eq!(intresgldim(&square).unwrap().gldim, 0);
    assert_eq!(intresgldim(&star(3, true)).unwrap().gldim, 1);
    let r = intresgldim(&star(4, false)).unwrap();
    assert_eq!(r.gldim, 2);
    assert!(r.per_interval.iter().all(|(_, d)| *d <= 2));
    assert_eq!(r.per_interval.iter().find(|(_, d)| *d == 2).unwrap().0, r.witness);
    assert_eq!(intresgldim(&atilde(&[0, 0, 0, 0])).unwrap().gldim, 1);
    assert_eq!(intresgldim(&atilde(&[0; 6])).unwrap().gldim, 2);
}

#[test]
fn gldim_errors() {
    let anti = Poset::from_covers::<&str>("anti", &["p", "q"], &[]).unwrap();
    assert!(matches!(intresgldim(&anti), Err(Error::Disconnected)));
    let empty = Poset::from_covers::<&str>("empty", &[], &[]).unwrap();
    assert!(matches!(intresgldim(&empty), Err(Error::EmptyPoset)));
    assert!(matches!(tree_gldim(&atilde(&[0; 4])), Err(Error::NotTree)));
}

#[test]
fn gldim_over_other_fields() {
    let p = star(4, true);
    for q in [3, 5] {
        assert_eq!(intresgldim_over(&p, Field::new(q).unwrap()).unwrap().gldim, 2);
    }
}

#[test]
fn tree_formula() {
    assert_eq!(tree_gldim(&chain(2)).unwrap(), 0);
    assert_eq!(tree_gldim(&star(3, true)).unwrap(), 1);
    // Spine 1-2-3 with two extra leaves on 2 and one on each end.
    let caterpillar = Poset::from_covers(
        "caterpillar",
        &["s1", "s2", "s3", "l1", "l2", "l3", "l4", "l5"],
        &[
            ("s1", "s2"),
            ("s3", "s2"),
            ("l1", "s1"),
            ("s1", "l2"),
            ("s2", "l3"),
            ("l4", "s3"),
            ("s3", "l5"),
        ],
    )
    .unwrap();
    assert_eq!(caterpillar.leaves().len(), 5);
    assert_eq!(tree_gldim(&caterpillar).unwrap(), 3);
    assert_eq!(intresgldim(&caterpillar).unwrap().gldim, 3);
}

#[test]
fn koszul_degenerate_case() {
    let p = Arc::new(chain(2));
    let s = iv(&p, &["1"]);
    let k = tree_koszul_resolution(&p, F2, &s).unwrap();
    assert_eq!(k.m(), 1);
    assert_eq!(k.gamma_dim(), 0);
    let g = gamma(&p, F2, &s).unwrap();
    let (ker, _) = k.differentials[0].kernel();
    assert!(is_isomorphic(&ker, &g).unwrap());
    assert!(matches!(
        tree_koszul_resolution(&p, F2, &iv(&p, &["2"])),
        Err(Error::NoOracle(_))
    ));
}

fn koszul_matches_engine(p: &Arc<Poset>, s: &Interval) {
    let k = tree_koszul_resolution(p, F2, s).unwrap();
    let g = gamma(p, F2, s).unwrap();
    let res = interval_resolution(&g, default_max_len(&g)).unwrap();
    assert_eq!(res.dim(), k.gamma_dim(), "{p:?} S={}", p.fmt_set(s.members()));
    if k.m() >= 2 {
        assert_eq!(k.differentials.len(), k.m());
        let engine: Vec<Vec<(_, usize)>> = res
            .terms()
            .into_iter()
            .map(|t| t.into_iter().map(|(s, c)| (s.into_members(), c)).collect())
            .collect();
        assert_eq!(engine, k.resolution_terms());
    }
}

#[test]
fn koszul_on_stars() {
    let p = Arc::new(star(3, true));
    let k = tree_koszul_resolution(&p, F2, &iv(&p, &["c"])).unwrap();
    assert_eq!(k.m(), 3);
    assert_eq!(k.gamma_dim(), 1);
    koszul_matches_engine(&p, &iv(&p, &["c"]));
    let p = Arc::new(star(4, true));
    let k = tree_koszul_resolution(&p, F2, &iv(&p, &["c"])).unwrap();
    assert_eq!(k.gamma_dim(), 2);
    koszul_matches_engine(&p, &iv(&p, &["c"]));
}

#[test]
fn koszul_agrees_on_random_trees() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for n in 2..=8 {
        let p = Arc::new(gen::random_tree(&mut rng, n));
        for s in p.enumerate_intervals() {
            if !irreducible_arrows(&p, &s).is_empty() {
                koszul_matches_engine(&p, &s);
            }
        }
    }
}

#[test]
fn koszul_with_two_arrows_at_one_element() {
    // a ← z → b with S = P: z carries one arrow per side and V_2 vanishes.
    let p = Arc::new(Poset::from_covers("v", &["z", "a", "b"], &[("z", "a"), ("z", "b")]).unwrap());
    let s = iv(&p, &["z", "a", "b"]);
    let k = tree_koszul_resolution(&p, F2, &s).unwrap();
    assert_eq!(k.index, vec![0, 0]);
    assert!(k.terms[2][0].is_empty());
    assert!(gamma(&p, F2, &s).unwrap().is_zero());
    koszul_matches_engine(&p, &s);
}

#[test]
fn contraction_of_long_chain() {
    let (d, steps, reduced) = gldim_via_contraction(&chain(9)).unwrap();
    assert_eq!(d, 0);
    assert!(!steps.is_empty());
    assert!(reduced.n() < 9);
}

#[test]
fn minimality() {
    assert!(is_minimal_m(&star(4, true), 2).unwrap());
    assert!(is_minimal_m(&star(3, false), 1).unwrap());
    assert!(!is_minimal_m(&chain(5), 1).unwrap());
    assert!(!is_minimal_m(&star(5, true), 3).unwrap() || intresgldim(&star(5, true)).unwrap().gldim == 3);
}

#[test]
fn ind_preserves_resolution_on_example() {
    let p = Arc::new(parse_poset(include_str!("../../tests/data/aligned_example.poset")).unwrap());
    let sys = InteriorSystem::new(p.clone(), &p.subset(&["a", "u", "x"]).unwrap()).unwrap();
    let q = sys.sub_poset().clone();
    for t in q.enumerate_intervals() {
        let m = PersistenceModule::interval(q.clone(), F2, t.members()).unwrap();
        let r = verify_ind_preserves_resolution(&sys, &m).unwrap();
        assert!(r.holds());
        assert_eq!(r.dim_over_q, 0);
        let g = gamma(&q, F2, &t).unwrap();
        assert!(verify_ind_preserves_resolution(&sys, &g).unwrap().holds());
    }
}

#[test]
fn cover_multiplicities_match_hom_counts() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..10 {
        let p = Arc::new(gen::random_connected_poset(&mut rng, 5, 0.4));
        let m = gen::random_module(&mut rng, &p, F2, 7).unwrap();
        let c = interval_cover(&m).unwrap();
        assert!(verify_cover_minimal(&c, &m));
        assert!(c.cover_map.is_surjective());
        // Every interval module maps through the cover.
        for s in p.enumerate_intervals() {
            let i = PersistenceModule::interval(p.clone(), F2, s.members()).unwrap();
            assert!(hom_dim(&i, &c.cover).unwrap() >= hom_dim(&i, &m).unwrap());
        }
    }
}
