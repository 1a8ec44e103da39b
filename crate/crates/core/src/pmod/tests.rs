use super::*;
use crate::families::chain;
use crate::gen;
use crate::io::parse_poset;
use crate::poset::{InteriorSystem, Interval};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const F2: Field = Field::GF2;

fn two_chain() -> Arc<Poset> {
    Arc::new(Poset::from_covers("c2", &["x", "y"], &[("x", "y")]).unwrap())
}

fn square() -> Arc<Poset> {
    Arc::new(parse_poset(include_str!("../../tests/data/square.poset")).unwrap())
}

fn iv(p: &Arc<Poset>, labels: &[&str]) -> PersistenceModule {
    PersistenceModule::interval(p.clone(), F2, &p.subset(labels).unwrap()).unwrap()
}

fn m1(v: i64) -> Matrix {
    Matrix::from_rows(F2, 1, &[[v]])
}

#[test]
fn interval_module_on_chain() {
    let p = two_chain();
    let m = iv(&p, &["x", "y"]);
    assert_eq!(m.dims(), &[1, 1]);
    assert_eq!(m.cover_map(0, 1).unwrap(), &m1(1));
    assert_eq!(m.dims(), PersistenceModule::projective(p.clone(), F2, 0).dims());
    assert_eq!(PersistenceModule::injective(p.clone(), F2, 0).dims(), &[1, 0]);
    assert_eq!(PersistenceModule::simple(p, F2, 1).dims(), &[0, 1]);
}

#[test]
fn convex_indicator_splits() {
    let p = square();
    let bc = p.subset(&["b", "c"]).unwrap();
    assert!(matches!(
        PersistenceModule::interval(p.clone(), F2, &bc),
        Err(Error::NotInterval(_))
    ));
    let m = PersistenceModule::indicator(p.clone(), F2, &bc).unwrap();
    let split = split_interval_summands(&m).unwrap();
    assert!(split.is_interval_decomposable());
    let labels: Vec<Vec<String>> = split.summands.iter().map(|(s, _)| p.set_labels(s.members())).collect();
    assert_eq!(labels, vec![vec!["b".to_string()], vec!["c".to_string()]]);
}

#[test]
fn non_commutative_square() {
    let p = square();
    let maps = vec![m1(1), m1(1), m1(1), m1(0)];
    let bad = PersistenceModule::new(p.clone(), F2, vec![1; 4], maps.clone());
    assert!(matches!(bad, Err(Error::NonCommutativeModule(..))));
    let raw = PersistenceModule::new_unchecked(p, F2, vec![1; 4], maps);
    assert!(!raw.is_commutative());
    assert!(raw.check_commutativity_all_paths().is_err());
}

#[test]
fn shape_checked() {
    let p = two_chain();
    let r = PersistenceModule::new(p, F2, vec![1, 2], vec![m1(1)]);
    assert!(matches!(r, Err(Error::ShapeMismatch(..))));
}

#[test]
fn path_maps() {
    let p = square();
    let m = iv(&p, &["a", "b", "c", "d"]);
    assert_eq!(m.path_map(1, 1).unwrap(), Matrix::identity(F2, 1));
    assert_eq!(m.path_map(0, 1).unwrap(), m1(1));
    let via_b = m.cover_map(1, 3).unwrap().mul(m.cover_map(0, 1).unwrap());
    let via_c = m.cover_map(2, 3).unwrap().mul(m.cover_map(0, 2).unwrap());
    assert_eq!(m.path_map(0, 3).unwrap(), via_b);
    assert_eq!(via_b, via_c);
    assert!(matches!(m.path_map(1, 2), Err(Error::NotComparable(..))));
}

#[test]
fn hom_dimensions_on_chain() {
    let p = two_chain();
    let (x, xy) = (iv(&p, &["x"]), iv(&p, &["x", "y"]));
    assert_eq!(hom_dim(&x, &xy).unwrap(), 0);
    assert_eq!(hom_dim(&xy, &x).unwrap(), 1);
    for s in p.enumerate_intervals() {
        let m = PersistenceModule::interval(p.clone(), F2, s.members()).unwrap();
        assert_eq!(hom_dim(&m, &m).unwrap(), 1);
    }
}

#[test]
fn hom_interval_components_agree() {
    let p = square();
    let ints = p.enumerate_intervals();
    for s in &ints {
        let ms = PersistenceModule::interval(p.clone(), F2, s.members()).unwrap();
        for t in &ints {
            let mt = PersistenceModule::interval(p.clone(), F2, t.members()).unwrap();
            let comps = hom_interval_components(&p, s.members(), t.members());
            assert_eq!(comps.len(), hom_dim(&ms, &mt).unwrap());
            assert_eq!(hom_from_interval(&mt, s.members()).cols(), comps.len());
        }
    }
}

#[test]
fn kernels_and_cokernels() {
    let p = two_chain();
    let xy = iv(&p, &["x", "y"]);
    let x = iv(&p, &["x"]);
    let id = ModuleMorphism::identity(xy.clone());
    assert!(id.kernel().0.is_zero());
    let proj = hom_basis(&xy, &x).unwrap().remove(0);
    assert!(proj.is_surjective());
    let (k, incl) = proj.kernel();
    assert_eq!(k.dims(), &[0, 1]);
    assert!(incl.is_injective());
    let zero = ModuleMorphism::zero(x.clone(), xy.clone());
    let (c, _) = zero.cokernel();
    assert!(is_isomorphic(&c, &xy).unwrap());
    let (im, _) = proj.image();
    assert!(is_isomorphic(&im, &x).unwrap());
}

#[test]
fn direct_sums() {
    let p = two_chain();
    assert!(PersistenceModule::direct_sum(p.clone(), F2, &[]).unwrap().is_zero());
    let s = PersistenceModule::direct_sum(p.clone(), F2, &[iv(&p, &["x"]), iv(&p, &["y"])]).unwrap();
    assert_eq!(s.dims(), &[1, 1]);
    assert!(s.cover_map(0, 1).unwrap().is_zero());
    let other = Arc::new(chain(2));
    assert!(PersistenceModule::direct_sum(p, F2, &[iv(&other, &["1"])]).is_err());
}

#[test]
fn restriction() {
    let p = square();
    let m = iv(&p, &["a", "b", "c", "d"]);
    assert_eq!(restrict(&m, &p.full_set()), m);
    let q = p.subset(&["a", "d"]).unwrap();
    let r = restrict(&m, &q);
    assert_eq!(r.dims(), &[1, 1]);
    assert_eq!(r.cover_map(0, 1).unwrap(), &m1(1));
    let r = restrict(&iv(&p, &["b", "d"]), &q);
    assert_eq!(r.dims(), &[0, 1]);
}

fn preservation() -> (Arc<Poset>, InteriorSystem) {
    let p = Arc::new(parse_poset(include_str!("../../tests/data/preservation.poset")).unwrap());
    let mut q = p.full_set();
    q.remove(p.id("x'").unwrap());
    let sys = InteriorSystem::new(p.clone(), &q).unwrap();
    (p, sys)
}

#[test]
fn non_aligned_contraction_is_not_interval_decomposable() {
    let (p, sys) = preservation();
    assert!(!sys.is_aligned());
    let s = iv(&p, &["y", "z", "w", "x'"]);
    assert!(matches!(contract(&sys, &s), Err(Error::NotAligned)));
    let c = contract_general(&sys, &s).unwrap();
    let labels: Vec<&str> = (0..sys.q_len()).map(|y| sys.sub_poset().label(y)).collect();
    assert_eq!(labels, ["x", "y", "z", "w"]);
    assert_eq!(c.dims(), &[1, 1, 2, 1]);
    let split = split_interval_summands(&c).unwrap();
    assert!(split.summands.is_empty());
    assert!(!split.residual.is_zero());
}

fn aligned_example() -> InteriorSystem {
    let p = Arc::new(parse_poset(include_str!("../../tests/data/aligned_example.poset")).unwrap());
    let q = p.subset(&["a", "u", "x"]).unwrap();
    InteriorSystem::new(p, &q).unwrap()
}

#[test]
fn ind_and_cont_on_intervals() {
    let sys = aligned_example();
    let p = sys.ambient().clone();
    let q = sys.sub_poset().clone();
    for t in q.enumerate_intervals() {
        let n = PersistenceModule::interval(q.clone(), F2, t.members()).unwrap();
        let ind = induct(&sys, &n).unwrap();
        let expect = PersistenceModule::interval(p.clone(), F2, &sys.ceil_preimage(t.members())).unwrap();
        assert_eq!(ind, expect);
        assert!(same_data(&contract(&sys, &ind).unwrap(), &n));
        assert!(in_essential_image(&sys, &ind).unwrap());
    }
    for s in p.enumerate_intervals() {
        let m = PersistenceModule::interval(p.clone(), F2, s.members()).unwrap();
        let c = contract(&sys, &m).unwrap();
        let tbar = sys.tbar(s.members()).unwrap();
        let expect = PersistenceModule::indicator(q.clone(), F2, &tbar).unwrap();
        assert!(is_isomorphic(&c, &expect).unwrap());
        assert!(same_data(&c, &contract_general(&sys, &m).unwrap()));
    }
}

#[test]
fn essential_image_on_chain() {
    let p = Arc::new(chain(3));
    let q = p.subset(&["1", "3"]).unwrap();
    let sys = InteriorSystem::new(p.clone(), &q).unwrap();
    let s1 = iv(&p, &["1"]);
    assert!(!in_essential_image(&sys, &s1).unwrap());
    assert!(in_essential_image(&sys, &PersistenceModule::zero(p, F2)).unwrap());
}

#[test]
fn coinduction() {
    let sys = aligned_example();
    let q = sys.sub_poset().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..5 {
        let n = gen::random_module(&mut rng, &q, F2, 5).unwrap();
        let co = coinduct(&sys, &n).unwrap();
        assert!(same_data(&res(&sys, &co).unwrap(), &n));
        let x = gen::random_module(&mut rng, sys.ambient(), F2, 6).unwrap();
        assert_eq!(hom_dim(&res(&sys, &x).unwrap(), &n).unwrap(), hom_dim(&x, &co).unwrap());
    }
    let p = sys.ambient().clone();
    let full = InteriorSystem::new(p.clone(), &p.full_set()).unwrap();
    let m = iv(&p, &["b", "u", "d", "v"]);
    assert!(same_data(&coinduct(&full, &m).unwrap(), &m));
}

#[test]
fn colimits_of_intervals() {
    let p = square();
    for s in p.enumerate_intervals() {
        let m = PersistenceModule::interval(p.clone(), F2, s.members()).unwrap();
        let expect = usize::from(p.is_upset(s.members()));
        assert_eq!(colimit(&m).dim, expect, "{}", p.fmt_set(s.members()));
        let dual = usize::from(p.is_downset(s.members()));
        assert_eq!(limit(&m).dim, dual);
    }
    assert_eq!(colimit(&PersistenceModule::zero(p, F2)).dim, 0);
}

#[test]
fn splitting_recovers_shuffled_sums() {
    let p = square();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let ints = p.enumerate_intervals();
    for field in [F2, Field::new(3).unwrap()] {
        for round in 0..10 {
            let chosen: Vec<&Interval> = (0..3).map(|k| &ints[(round * 7 + k * 5) % ints.len()]).collect();
            let parts: Vec<_> = chosen
                .iter()
                .map(|s| PersistenceModule::interval(p.clone(), field, s.members()).unwrap())
                .collect();
            let sum = PersistenceModule::direct_sum(p.clone(), field, &parts).unwrap();
            let shuffled = gen::shuffle_basis(&mut rng, &sum);
            let split = split_interval_summands(&shuffled).unwrap();
            assert!(split.is_interval_decomposable());
            let mut expect: Vec<Interval> = chosen.into_iter().cloned().collect();
            expect.sort();
            let got: Vec<Interval> = split
                .summands
                .iter()
                .flat_map(|(s, k)| std::iter::repeat_n(s.clone(), *k))
                .collect();
            assert_eq!(got, expect);
            assert!(is_isomorphic(&shuffled, &sum).unwrap());
        }
    }
}

#[test]
fn isomorphism_rejects_different_modules() {
    let p = two_chain();
    let a = PersistenceModule::direct_sum(p.clone(), F2, &[iv(&p, &["x"]), iv(&p, &["y"])]).unwrap();
    let b = iv(&p, &["x", "y"]);
    assert_eq!(a.dims(), b.dims());
    assert!(!is_isomorphic(&a, &b).unwrap());
    assert!(find_isomorphism(&a, &b).unwrap().is_none());
    let f = find_isomorphism(&b, &b).unwrap().unwrap();
    assert!(f.is_isomorphism());
}

#[test]
fn morphism_algebra() {
    let p = two_chain();
    let xy = iv(&p, &["x", "y"]);
    let id = ModuleMorphism::identity(xy.clone());
    assert!(id.add(&id).unwrap().is_zero());
    assert_eq!(id.compose(&id).unwrap().to_vector(), id.to_vector());
    let bad = ModuleMorphism::new(xy.clone(), iv(&p, &["y"]), vec![Matrix::zeros(F2, 0, 1), m1(1)]);
    assert!(matches!(bad, Err(Error::NotNatural(..))));
}

#[test]
fn commutativity_checkers_agree_on_random_modules() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..20 {
        let p = Arc::new(gen::random_connected_poset(&mut rng, 5, 0.5));
        let m = gen::random_module(&mut rng, &p, F2, 8).unwrap();
        assert!(m.check_commutativity_all_paths().is_ok());
        // Perturb one cover map and compare verdicts.
        if let Some(i) = (0..p.covers().len()).find(|&i| m.maps()[i].rows() * m.maps()[i].cols() > 0) {
            let mut maps = m.maps().to_vec();
            let v = maps[i].get(0, 0);
            maps[i].set(0, 0, 1 - v);
            let raw = PersistenceModule::new_unchecked(p.clone(), F2, m.dims().to_vec(), maps);
            assert_eq!(raw.is_commutative(), raw.check_commutativity_all_paths().is_ok());
        }
    }
}
