//! Hyperstructures on the powerset of a small space.
//!
//! A subset `A` of the base is the hyper-point with index `A.mask()`. Labels
//! are `{}` and `{a,b}` with members in carrier order.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::morphism::SpaceMap;
use crate::rel::{Carrier, Entourage, PointSet};
use crate::space::FiniteEntourageSpace;

/// Largest base handled; the powerset then has 4096 points.
pub const MAX_HYPER_BASE: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowersetCarrier {
    base: Arc<Carrier>,
    points: Arc<Carrier>,
}

impl PowersetCarrier {
    pub fn new(base: &Arc<Carrier>) -> Result<Self> {
        let n = base.size();
        if n > MAX_HYPER_BASE {
            return Err(Error::SizeCap {
                what: "powerset base",
                size: n,
                limit: MAX_HYPER_BASE,
            });
        }
        let labels = (0..1u64 << n).map(|m| format!("{{{}}}", base.labels_of(&PointSet::from_mask(n, m)).join(",")));
        Ok(PowersetCarrier {
            base: base.clone(),
            points: Carrier::new(labels)?.shared(),
        })
    }

    pub fn base(&self) -> &Arc<Carrier> {
        &self.base
    }

    pub fn points(&self) -> &Arc<Carrier> {
        &self.points
    }

    pub fn size(&self) -> usize {
        self.points.size()
    }

    pub fn subset(&self, index: usize) -> PointSet {
        PointSet::from_mask(self.base.size(), index as u64)
    }

    pub fn index(&self, a: &PointSet) -> usize {
        debug_assert_eq!(a.universe(), self.base.size());
        a.mask() as usize
    }

    /// Hyper-points other than `∅`.
    pub fn non_empty(&self) -> PointSet {
        let mut all = self.points.all();
        all.remove(0);
        all
    }
}

fn check_reflexive(e: &Entourage) -> Result<()> {
    if !e.is_reflexive() {
        return Err(Error::Hypothesis("hyperstructure needs Δ ⊆ E".into()));
    }
    Ok(())
}

/// `H(E) = {(A, B) | B ⊆ E[A]}`.
pub fn hyper_entourage(e: &Entourage) -> Result<(PowersetCarrier, Entourage)> {
    check_reflexive(e)?;
    let pc = PowersetCarrier::new(e.carrier())?;
    // E[A] as a bitmask, built from E[A \ {min}] ∪ E[min].
    let rows: Vec<u64> = e.rows().iter().map(PointSet::mask).collect();
    let mut image = vec![0u64; pc.size()];
    for a in 1..pc.size() {
        let low = a.trailing_zeros() as usize;
        image[a] = image[a & (a - 1)] | rows[low];
    }
    let rel = Entourage::from_fn(pc.points(), |a, b| b as u64 & !image[a] == 0);
    Ok((pc, rel))
}

/// The entourage hyperstructure: principal with maximum `H(M)`.
pub fn hyper_space(space: &FiniteEntourageSpace) -> Result<FiniteEntourageSpace> {
    let (_, h) = hyper_entourage(space.max_ent())?;
    Ok(FiniteEntourageSpace::principal(h))
}

/// The semi-coarse hyperstructure: principal with maximum `H(M) ∩ H(M)⁻¹`.
pub fn exp_space(space: &FiniteEntourageSpace) -> Result<FiniteEntourageSpace> {
    let (_, h) = hyper_entourage(space.max_ent())?;
    Ok(FiniteEntourageSpace::principal(h.symmetric_part()))
}

/// `A ↦ f(A)` between the hyper spaces of the source and target.
pub fn lift_map(f: &SpaceMap) -> Result<SpaceMap> {
    let src = hyper_space(f.src())?;
    let dst = hyper_space(f.dst())?;
    let table = (0..1u64 << f.src().size())
        .map(|a| {
            PointSet::from_mask(f.src().size(), a)
                .iter()
                .fold(0usize, |acc, x| acc | 1 << f.apply(x))
        })
        .collect();
    SpaceMap::new(src, dst, table)
}

/// The hyper space restricted to non-empty subsets.
pub fn hyper_non_empty(space: &FiniteEntourageSpace) -> Result<FiniteEntourageSpace> {
    let h = hyper_space(space)?;
    let keep = PowersetCarrier::new(space.carrier())?.non_empty();
    h.restrict(&keep)
}
