use super::PersistenceModule;
use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// A natural transformation: one matrix `dim_N(a) × dim_M(a)` per element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMorphism {
    source: PersistenceModule,
    target: PersistenceModule,
    comps: Vec<Matrix>,
}

impl ModuleMorphism {
    /// Validate shapes and naturality on every cover.
    pub fn new(source: PersistenceModule, target: PersistenceModule, comps: Vec<Matrix>) -> Result<Self> {
        source.compatible(&target)?;
        let p = source.poset();
        if comps.len() != p.n() {
            return Err(Error::ShapeMismatch(format!(
                "{} components for {} elements",
                comps.len(),
                p.n()
            )));
        }
        for (a, c) in comps.iter().enumerate() {
            if c.shape() != (target.dim(a), source.dim(a)) {
                return Err(Error::ShapeMismatch(format!(
                    "component at {} has wrong shape",
                    p.label(a)
                )));
            }
        }
        let f = Self::new_unchecked(source, target, comps);
        f.check_naturality()?;
        Ok(f)
    }

    pub(crate) fn new_unchecked(source: PersistenceModule, target: PersistenceModule, comps: Vec<Matrix>) -> Self {
        ModuleMorphism { source, target, comps }
    }

    pub fn zero(source: PersistenceModule, target: PersistenceModule) -> Self {
        let f = source.field();
        let comps = (0..source.poset().n())
            .map(|a| Matrix::zeros(f, target.dim(a), source.dim(a)))
            .collect();
        Self::new_unchecked(source, target, comps)
    }

    pub fn identity(m: PersistenceModule) -> Self {
        let f = m.field();
        let comps = (0..m.poset().n()).map(|a| Matrix::identity(f, m.dim(a))).collect();
        Self::new_unchecked(m.clone(), m, comps)
    }

    pub fn check_naturality(&self) -> Result<()> {
        let p = self.source.poset();
        for (i, &(a, b)) in p.covers().iter().enumerate() {
            let lhs = self.comps[b].mul(&self.source.maps()[i]);
            let rhs = self.target.maps()[i].mul(&self.comps[a]);
            if lhs != rhs {
                return Err(Error::NotNatural(p.label(a).into(), p.label(b).into()));
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &PersistenceModule {
        &self.source
    }

    pub fn target(&self) -> &PersistenceModule {
        &self.target
    }

    pub fn comp(&self, a: usize) -> &Matrix {
        &self.comps[a]
    }

    pub fn comps(&self) -> &[Matrix] {
        &self.comps
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &ModuleMorphism) -> Result<ModuleMorphism> {
        if first.target != self.source {
            return Err(Error::ShapeMismatch("composition of non-composable morphisms".into()));
        }
        let comps = self.comps.iter().zip(&first.comps).map(|(g, f)| g.mul(f)).collect();
        Ok(Self::new_unchecked(first.source.clone(), self.target.clone(), comps))
    }

    pub fn add(&self, other: &ModuleMorphism) -> Result<ModuleMorphism> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::ShapeMismatch("adding morphisms with different ends".into()));
        }
        let comps = self.comps.iter().zip(&other.comps).map(|(a, b)| a.add(b)).collect();
        Ok(Self::new_unchecked(self.source.clone(), self.target.clone(), comps))
    }

    pub fn scale(&self, c: u8) -> ModuleMorphism {
        let comps = self.comps.iter().map(|m| m.scale(c)).collect();
        Self::new_unchecked(self.source.clone(), self.target.clone(), comps)
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|m| m.is_zero())
    }

    pub fn is_injective(&self) -> bool {
        self.comps.iter().all(|m| m.is_injective())
    }

    pub fn is_surjective(&self) -> bool {
        self.comps.iter().all(|m| m.is_surjective())
    }

    pub fn is_isomorphism(&self) -> bool {
        self.comps.iter().all(|m| m.is_invertible())
    }

    /// Flatten the components into one vector, element by element, each
    /// component row-major.
    pub fn to_vector(&self) -> Vec<u8> {
        self.comps.iter().flat_map(|m| m.data().iter().copied()).collect()
    }

    /// Pointwise kernel with its inclusion.
    pub fn kernel(&self) -> (PersistenceModule, ModuleMorphism) {
        super::limits::kernel(self)
    }

    /// Pointwise cokernel with its projection.
    pub fn cokernel(&self) -> (PersistenceModule, ModuleMorphism) {
        super::limits::cokernel(self)
    }

    /// Pointwise image with its inclusion into the target.
    pub fn image(&self) -> (PersistenceModule, ModuleMorphism) {
        super::limits::image(self)
    }
}
