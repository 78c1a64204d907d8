use std::sync::Arc;

use super::{LeviPair, LieError, LieModule};
use crate::extension::FiniteAbelianGroup;

/// The data of a connected algebraic group `G = G_u ⋊ G_red` that the
/// classification consumes: the Levi pair of Lie algebras, the fundamental
/// group of the derived group of `G_red`, and the dimension of its central
/// torus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgGroupData {
    levi: LeviPair,
    pi1_derived: FiniteAbelianGroup,
    center_torus_dim: usize,
}

impl AlgGroupData {
    pub fn new(levi: LeviPair, pi1_derived: FiniteAbelianGroup, center_torus_dim: usize) -> Result<Self, LieError> {
        let center = levi.red_center().dim();
        if center_torus_dim > center {
            return Err(LieError::InvalidGroupData(format!(
                "central torus of dimension {center_torus_dim} does not fit in a center of dimension {center}"
            )));
        }
        Ok(AlgGroupData { levi, pi1_derived, center_torus_dim })
    }

    pub fn levi(&self) -> &LeviPair {
        &self.levi
    }

    pub fn pi1_derived(&self) -> &FiniteAbelianGroup {
        &self.pi1_derived
    }

    pub fn center_torus_dim(&self) -> usize {
        self.center_torus_dim
    }
}

/// A connected abelian group `A = A_u × A_s`: the torus dimension of `A_s`
/// and the Lie algebra `a_u` as a `g`-module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffGroupData {
    torus_dim: usize,
    au_module: LieModule,
}

impl CoeffGroupData {
    /// Checks that `au_module` is a module over the pair's algebra on which
    /// every basis element of `g_u` acts nilpotently.
    pub fn new(torus_dim: usize, au_module: LieModule, levi: &LeviPair) -> Result<Self, LieError> {
        let au_module = au_module.rebind(levi.algebra().clone())?;
        au_module.validate()?;
        if let Some(&bad) = levi.u_indices().iter().find(|&&i| !au_module.action(i).is_nilpotent()) {
            return Err(LieError::InvalidGroupData(format!(
                "basis element {} of g_u does not act nilpotently on a_u",
                levi.algebra().labels()[bad]
            )));
        }
        Ok(CoeffGroupData { torus_dim, au_module })
    }

    /// A torus of dimension `torus_dim` (no unipotent part).
    pub fn torus(torus_dim: usize, g: Arc<crate::lie::LieAlgebra>) -> Self {
        CoeffGroupData { torus_dim, au_module: LieModule::trivial(g, 0) }
    }

    pub fn torus_dim(&self) -> usize {
        self.torus_dim
    }

    pub fn au_module(&self) -> &LieModule {
        &self.au_module
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{standard, LieModule};

    #[test]
    fn center_torus_must_fit() {
        let gl2 = Arc::new(standard::gl2());
        let pair = LeviPair::reductive(gl2).unwrap();
        assert!(AlgGroupData::new(pair.clone(), FiniteAbelianGroup::trivial(), 1).is_ok());
        assert!(AlgGroupData::new(pair, FiniteAbelianGroup::trivial(), 2).is_err());
    }

    #[test]
    fn unipotent_part_must_act_nilpotently() {
        let borel = Arc::new(standard::borel());
        let pair = LeviPair::new(borel.clone(), vec![0], vec![1]).unwrap();
        assert!(CoeffGroupData::new(0, LieModule::adjoint(borel.clone()), &pair).is_ok());
        let h3 = Arc::new(standard::heisenberg());
        let pair = LeviPair::unipotent(h3.clone()).unwrap();
        assert!(CoeffGroupData::new(1, LieModule::adjoint(h3.clone()), &pair).is_ok());
        let sl2 = Arc::new(standard::sl2());
        let semi = Arc::new(standard::sl2_ltimes_std());
        let pair = LeviPair::new(semi.clone(), vec![0, 1, 2], vec![3, 4]).unwrap();
        assert!(CoeffGroupData::new(0, standard::std_module_of_semidirect(semi), &pair).is_ok());
        // a module over a different algebra is rejected
        assert!(CoeffGroupData::new(0, LieModule::trivial(sl2, 1), &pair).is_err());
    }
}
