//! Seeded random instances for property tests and the acceptance harness.

use crate::bitset::ElemSet;
use crate::error::Result;
use crate::linalg::{Field, Matrix};
use crate::pmod::{hom_basis, ModuleMorphism, PersistenceModule};
use crate::poset::{InteriorSystem, Poset};
use rand::seq::SliceRandom;
use rand::Rng;
use std::sync::Arc;

/// Random poset on `n` elements: a random DAG on a shuffled vertex order
/// with edge probability `density`, then closed and reduced. Ids are not a
/// linear extension.
pub fn random_poset<R: Rng>(rng: &mut R, n: usize, density: f64) -> Poset {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                edges.push((order[i], order[j]));
            }
        }
    }
    let labels = (0..n).map(|i| format!("p{i}")).collect();
    Poset::from_id_edges("random", labels, &edges).expect("edges follow a linear order")
}

/// Random connected poset; retries until connected.
pub fn random_connected_poset<R: Rng>(rng: &mut R, n: usize, density: f64) -> Poset {
    loop {
        let p = random_poset(rng, n, density);
        if p.n() > 0 && p.is_poset_connected() {
            return p;
        }
    }
}

/// Random tree on `n` vertices with random edge orientations.
pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> Poset {
    let mut ids: Vec<usize> = (0..n).collect();
    ids.shuffle(rng);
    let mut edges = Vec::new();
    for k in 1..n {
        let parent = ids[rng.gen_range(0..k)];
        let child = ids[k];
        edges.push(if rng.gen_bool(0.5) {
            (parent, child)
        } else {
            (child, parent)
        });
    }
    let labels = (0..n).map(|i| format!("v{i}")).collect();
    Poset::from_id_edges("tree", labels, &edges).expect("trees are acyclic")
}

/// Uniformly random invertible `d × d` matrix, by rejection.
pub fn random_invertible<R: Rng>(rng: &mut R, field: Field, d: usize) -> Matrix {
    loop {
        let mut g = Matrix::zeros(field, d, d);
        for i in 0..d {
            for j in 0..d {
                g.set(i, j, rng.gen_range(0..field.p()));
            }
        }
        if g.is_invertible() {
            return g;
        }
    }
}

/// `m` with a random change of basis at every element.
pub fn shuffle_basis<R: Rng>(rng: &mut R, m: &PersistenceModule) -> PersistenceModule {
    let g: Vec<Matrix> = m.dims().iter().map(|&d| random_invertible(rng, m.field(), d)).collect();
    m.transport(&g).expect("basis change has matching shapes")
}

/// Random linear combination of a basis of `Hom(M, N)`.
pub fn random_morphism<R: Rng>(rng: &mut R, m: &PersistenceModule, n: &PersistenceModule) -> Result<ModuleMorphism> {
    let p = m.field().p();
    let mut acc = ModuleMorphism::zero(m.clone(), n.clone());
    for b in hom_basis(m, n)? {
        let c = rng.gen_range(0..p);
        if c != 0 {
            acc = acc.add(&b.scale(c))?;
        }
    }
    Ok(acc)
}

/// Random module: the cokernel of a random map between sums of
/// indecomposable projectives, rejected until its total dimension is in
/// `1..=max_total`.
pub fn random_module<R: Rng>(rng: &mut R, p: &Arc<Poset>, field: Field, max_total: usize) -> Result<PersistenceModule> {
    let n = p.n();
    loop {
        let k_top = rng.gen_range(1..=3);
        let k_rel = rng.gen_range(0..=3);
        let tops: Vec<PersistenceModule> = (0..k_top)
            .map(|_| PersistenceModule::projective(p.clone(), field, rng.gen_range(0..n)))
            .collect();
        let rels: Vec<PersistenceModule> = (0..k_rel)
            .map(|_| PersistenceModule::projective(p.clone(), field, rng.gen_range(0..n)))
            .collect();
        let top = PersistenceModule::direct_sum(p.clone(), field, &tops)?;
        let rel = PersistenceModule::direct_sum(p.clone(), field, &rels)?;
        let phi = random_morphism(rng, &rel, &top)?;
        let (c, _) = phi.cokernel();
        if (1..=max_total).contains(&c.total_dim()) {
            return Ok(c);
        }
    }
}

/// Random aligned interior system on a random connected poset with `n`
/// elements; `Q` is a proper subset whenever one is found within the
/// attempt budget.
pub fn random_aligned_system<R: Rng>(rng: &mut R, n: usize, density: f64) -> InteriorSystem {
    loop {
        let p = Arc::new(random_connected_poset(rng, n, density));
        for _ in 0..40 {
            let mut q = ElemSet::empty(n);
            for a in 0..n {
                if rng.gen_bool(0.6) {
                    q.insert(a);
                }
            }
            if q.is_empty() || q.len() == n {
                continue;
            }
            if let Ok(sys) = InteriorSystem::new(p.clone(), &q) {
                if sys.is_aligned() {
                    return sys;
                }
            }
        }
    }
}
