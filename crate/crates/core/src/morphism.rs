//! Maps between finite entourage spaces.
//!
//! Every morphism property quantifies over all entourages of a structure, and
//! each one is monotone in the entourage, so it suffices to check it on the
//! principal generators `M_X` and `M_Y`.

use serde::Serialize;

use crate::enumerate::all_tables;
use crate::error::{Error, Result};
use crate::rel::{same_carrier, Entourage, PointSet};
use crate::space::FiniteEntourageSpace;

/// Upper bound on `|Y|^|X| · |X|^|Y|` for [`equivalence_oracle`].
pub const ORACLE_MAP_PAIRS: u128 = 1_000_000;

/// A total function between the carriers of two spaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpaceMap {
    src: FiniteEntourageSpace,
    dst: FiniteEntourageSpace,
    table: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MapProfile {
    pub bornologous: bool,
    pub weakly_ubc: bool,
    pub ubc: bool,
    pub effectively_proper: bool,
    pub ls_injective: bool,
    pub ls_surjective: bool,
    pub asymorphism: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Closeness {
    Plain,
    SymFunctor,
}

/// Outcome of deciding whether a map is a Sym-coarse equivalence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EquivalenceVerdict {
    Yes { inverse: SpaceMap },
    No { failed: Vec<&'static str> },
}

impl EquivalenceVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, EquivalenceVerdict::Yes { .. })
    }
}

impl SpaceMap {
    pub fn new(src: FiniteEntourageSpace, dst: FiniteEntourageSpace, table: Vec<usize>) -> Result<Self> {
        if table.len() != src.size() {
            return Err(Error::Invalid(format!(
                "map table has {} entries for {} source points",
                table.len(),
                src.size()
            )));
        }
        if let Some(&bad) = table.iter().find(|&&y| y >= dst.size()) {
            return Err(Error::Invalid(format!("map target index {bad} out of range")));
        }
        Ok(SpaceMap { src, dst, table })
    }

    /// Map given as `(source label, target label)` pairs covering the source.
    pub fn from_labels<S: AsRef<str>>(
        src: FiniteEntourageSpace,
        dst: FiniteEntourageSpace,
        assignments: &[(S, S)],
    ) -> Result<Self> {
        let mut table = vec![None; src.size()];
        for (a, b) in assignments {
            let i = src.carrier().index_of(a.as_ref())?;
            let j = dst.carrier().index_of(b.as_ref())?;
            if table[i].replace(j).is_some() {
                return Err(Error::Invalid(format!("point `{}` mapped twice", a.as_ref())));
            }
        }
        let table = table
            .into_iter()
            .enumerate()
            .map(|(i, t)| t.ok_or_else(|| Error::Invalid(format!("point `{}` has no image", src.carrier().label(i)))))
            .collect::<Result<Vec<_>>>()?;
        SpaceMap::new(src, dst, table)
    }

    pub fn identity(space: &FiniteEntourageSpace) -> SpaceMap {
        SpaceMap {
            src: space.clone(),
            dst: space.clone(),
            table: (0..space.size()).collect(),
        }
    }

    pub fn src(&self) -> &FiniteEntourageSpace {
        &self.src
    }

    pub fn dst(&self) -> &FiniteEntourageSpace {
        &self.dst
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    /// `g ∘ self` (apply `self` first).
    pub fn then(&self, g: &SpaceMap) -> Result<SpaceMap> {
        if !same_carrier(self.dst.carrier(), g.src.carrier()) {
            return Err(Error::CarrierMismatch("composed maps do not meet".into()));
        }
        Ok(SpaceMap {
            src: self.src.clone(),
            dst: g.dst.clone(),
            table: self.table.iter().map(|&y| g.table[y]).collect(),
        })
    }

    /// Same underlying function between other spaces on the same carriers.
    pub fn retarget(&self, src: FiniteEntourageSpace, dst: FiniteEntourageSpace) -> Result<SpaceMap> {
        if !same_carrier(self.src.carrier(), src.carrier()) || !same_carrier(self.dst.carrier(), dst.carrier()) {
            return Err(Error::CarrierMismatch("retarget must keep both carriers".into()));
        }
        Ok(SpaceMap {
            src,
            dst,
            table: self.table.clone(),
        })
    }

    pub fn image_set(&self) -> PointSet {
        PointSet::from_indices(self.dst.size(), self.table.iter().copied())
    }

    pub fn is_injective(&self) -> bool {
        self.image_set().count() == self.table.len()
    }

    pub fn is_surjective(&self) -> bool {
        self.image_set().is_full()
    }

    /// `(f×f)(E)`.
    pub fn push(&self, e: &Entourage) -> Entourage {
        let mut out = Entourage::empty(self.dst.carrier());
        for (x, y) in e.pairs() {
            out.insert(self.table[x], self.table[y]);
        }
        out
    }

    /// `(f×f)⁻¹(E)`.
    pub fn pull(&self, e: &Entourage) -> Entourage {
        Entourage::from_fn(self.src.carrier(), |x, y| e.contains(self.table[x], self.table[y]))
    }

    /// `R_f = {(x,y) | f(x) = f(y)}`.
    pub fn fiber_relation(&self) -> Entourage {
        Entourage::from_fn(self.src.carrier(), |x, y| self.table[x] == self.table[y])
    }

    /// `f(A)`.
    pub fn image_of(&self, a: &PointSet) -> PointSet {
        PointSet::from_indices(self.dst.size(), a.iter().map(|x| self.table[x]))
    }

    pub fn is_bornologous(&self) -> bool {
        self.push(self.src.max_ent()).is_subset(self.dst.max_ent())
    }

    pub fn is_effectively_proper(&self) -> bool {
        self.pull(self.dst.max_ent()).is_subset(self.src.max_ent())
    }

    pub fn profile(&self) -> MapProfile {
        let mx = self.src.max_ent();
        let my = self.dst.max_ent();
        let fx = self.image_set();
        let pushed = self.push(mx);

        let bornologous = pushed.is_subset(my);
        let effectively_proper = self.is_effectively_proper();
        let weakly_ubc = my
            .pairs()
            .filter(|&(a, b)| fx.contains(a) && fx.contains(b))
            .all(|(a, b)| pushed.contains(a, b));
        let ubc = (0..self.src.size()).all(|x| {
            my.row(self.table[x])
                .intersection(&fx)
                .is_subset(&self.image_of(mx.row(x)))
        });
        let ls_injective = self.fiber_relation().is_subset(mx);
        let ls_surjective = my.symmetric_part().image(&fx).expect("same carrier").is_full();
        let bijective = self.is_injective() && self.is_surjective();
        MapProfile {
            bornologous,
            weakly_ubc,
            ubc,
            effectively_proper,
            ls_injective,
            ls_surjective,
            asymorphism: bijective && bornologous && effectively_proper,
        }
    }
}

fn check_parallel(f: &SpaceMap, g: &SpaceMap) -> Result<()> {
    if !same_carrier(f.src.carrier(), g.src.carrier()) || f.dst != g.dst {
        return Err(Error::CarrierMismatch("closeness needs maps with shared source and target".into()));
    }
    Ok(())
}

/// Closeness of `f` and `g`: `{(f(x), g(x))}` lies in the target structure,
/// or in its symmetric part for [`Closeness::SymFunctor`].
///
/// Plain closeness is only an equivalence relation on coarse targets.
pub fn are_close(f: &SpaceMap, g: &SpaceMap, mode: Closeness) -> Result<bool> {
    check_parallel(f, g)?;
    let m = match mode {
        Closeness::Plain => f.dst.max_ent().clone(),
        Closeness::SymFunctor => f.dst.max_ent().symmetric_part(),
    };
    Ok(f.table.iter().zip(&g.table).all(|(&a, &b)| m.contains(a, b)))
}

fn require_quasi(space: &FiniteEntourageSpace, which: &str) -> Result<()> {
    if space.classify().is_quasi() {
        Ok(())
    } else {
        Err(Error::Hypothesis(format!("{which} space is not quasi-coarse")))
    }
}

/// Decides whether `f` is a Sym-coarse equivalence through the criterion
/// large-scale surjective ∧ bornologous ∧ effectively proper, and on success
/// builds an inverse up to Sym-closeness.
///
/// The inverse sends `y` to its least preimage when `y ∈ f(X)`, and otherwise
/// to the least `x` with `(y, f(x))` in the symmetric part of `M_Y`.
pub fn sym_coarse_equivalence(f: &SpaceMap) -> Result<EquivalenceVerdict> {
    require_quasi(&f.src, "source")?;
    require_quasi(&f.dst, "target")?;
    let p = f.profile();
    let mut failed = Vec::new();
    if !p.ls_surjective {
        failed.push("large-scale surjective");
    }
    if !p.bornologous {
        failed.push("bornologous");
    }
    if !p.effectively_proper {
        failed.push("effectively proper");
    }
    if !failed.is_empty() {
        return Ok(EquivalenceVerdict::No { failed });
    }
    let sym = f.dst.max_ent().symmetric_part();
    let table = (0..f.dst.size())
        .map(|y| {
            (0..f.src.size())
                .find(|&x| f.table[x] == y)
                .or_else(|| (0..f.src.size()).find(|&x| sym.contains(y, f.table[x])))
                .expect("large-scale surjectivity provides a witness")
        })
        .collect();
    let inverse = SpaceMap {
        src: f.dst.clone(),
        dst: f.src.clone(),
        table,
    };
    Ok(EquivalenceVerdict::Yes { inverse })
}

fn sym_close_to_identity(table_round: &[usize], space: &FiniteEntourageSpace) -> bool {
    let m = space.max_ent();
    table_round
        .iter()
        .enumerate()
        .all(|(x, &y)| m.contains(x, y) && m.contains(y, x))
}

/// Definition-level search: is there a bornologous `f: X → Y` with a
/// bornologous `g: Y → X` such that `g∘f` and `f∘g` are Sym-close to the
/// identities?
pub fn equivalence_oracle(x: &FiniteEntourageSpace, y: &FiniteEntourageSpace) -> Result<bool> {
    let (n, m) = (x.size(), y.size());
    let pairs = (m as u128).checked_pow(n as u32).zip((n as u128).checked_pow(m as u32));
    match pairs.and_then(|(a, b)| a.checked_mul(b)) {
        Some(p) if p <= ORACLE_MAP_PAIRS => {}
        other => {
            return Err(Error::SizeCap {
                what: "map pairs for the equivalence oracle",
                size: other.map_or(usize::MAX, |p| p.min(usize::MAX as u128) as usize),
                limit: ORACLE_MAP_PAIRS as usize,
            })
        }
    }
    let born = |src: &FiniteEntourageSpace, dst: &FiniteEntourageSpace, t: &[usize]| {
        src.max_ent().pairs().all(|(a, b)| dst.max_ent().contains(t[a], t[b]))
    };
    let fs: Vec<Vec<usize>> = all_tables(n, m).filter(|t| born(x, y, t)).collect();
    let gs: Vec<Vec<usize>> = all_tables(m, n).filter(|t| born(y, x, t)).collect();
    for f in &fs {
        for g in &gs {
            let gf: Vec<usize> = f.iter().map(|&b| g[b]).collect();
            let fg: Vec<usize> = g.iter().map(|&a| f[a]).collect();
            if sym_close_to_identity(&gf, x) && sym_close_to_identity(&fg, y) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rel::Carrier;
    use crate::enumerate::all_structures_on;
    use crate::space::StructureClass;
    use std::sync::Arc;

    fn c(n: usize) -> Arc<Carrier> {
        Carrier::numbered(n).unwrap().shared()
    }

    fn space(x: &Arc<Carrier>, pairs: &[(usize, usize)]) -> FiniteEntourageSpace {
        FiniteEntourageSpace::principal(Entourage::from_pairs(x, pairs.iter().copied()))
    }

    #[test]
    fn identity_between_example_structures() {
        let x = c(3);
        let e2 = space(&x, &[(0, 1), (0, 2)]);
        let e1 = space(&x, &[(0, 1), (0, 2), (1, 0), (2, 0)]);
        let id = SpaceMap::new(e2, e1, vec![0, 1, 2]).unwrap();
        let p = id.profile();
        assert!(p.bornologous);
        assert!(!p.effectively_proper);
        assert!(!p.asymorphism);
    }

    #[test]
    fn constant_maps_are_bornologous() {
        for s in all_structures_on(3) {
            for t in all_structures_on(2) {
                for k in 0..2 {
                    let f = SpaceMap::new(s.clone(), t.clone(), vec![k; 3]).unwrap();
                    assert!(f.profile().bornologous);
                }
            }
        }
    }

    #[test]
    fn bijection_matching_generators_is_asymorphism() {
        let x = c(3);
        let s = space(&x, &[(0, 1), (1, 2), (0, 2)]);
        let t = space(&x, &[(2, 1), (1, 0), (2, 0)]);
        let f = SpaceMap::new(s, t, vec![2, 1, 0]).unwrap();
        assert!(f.profile().asymorphism);
    }

    #[test]
    fn map_table_validation() {
        let x = c(2);
        let s = FiniteEntourageSpace::discrete(&x);
        assert!(SpaceMap::new(s.clone(), s.clone(), vec![0]).is_err());
        assert!(SpaceMap::new(s.clone(), s.clone(), vec![0, 2]).is_err());
        assert!(SpaceMap::from_labels(s.clone(), s.clone(), &[("0", "1")]).is_err());
        assert!(SpaceMap::from_labels(s.clone(), s, &[("0", "1"), ("1", "1")]).is_ok());
    }

    #[test]
    fn closeness_examples() {
        let x = c(2);
        let s = space(&x, &[(0, 1)]);
        let id = SpaceMap::identity(&s);
        let swap = SpaceMap::new(s.clone(), s.clone(), vec![1, 0]).unwrap();
        assert!(are_close(&id, &id, Closeness::Plain).unwrap());
        assert!(are_close(&id, &id, Closeness::SymFunctor).unwrap());
        assert!(!are_close(&id, &swap, Closeness::Plain).unwrap());
        let swap_back = SpaceMap::new(s.clone(), s.clone(), vec![0, 0]).unwrap();
        // {(0,0),(1,0)}: (1,0) is not in M
        assert!(!are_close(&id, &swap_back, Closeness::Plain).unwrap());
        let up = SpaceMap::new(s.clone(), s.clone(), vec![1, 1]).unwrap();
        // {(0,1),(1,1)} ⊆ M but (0,1) ∉ M ∩ M⁻¹
        assert!(are_close(&id, &up, Closeness::Plain).unwrap());
        assert!(!are_close(&id, &up, Closeness::SymFunctor).unwrap());

        let ind = FiniteEntourageSpace::indiscrete(&x);
        let f = SpaceMap::new(s.clone(), ind.clone(), vec![0, 1]).unwrap();
        let g = SpaceMap::new(s.clone(), ind, vec![1, 1]).unwrap();
        assert!(are_close(&f, &g, Closeness::Plain).unwrap());
        assert!(are_close(&f, &g, Closeness::SymFunctor).unwrap());
        assert!(are_close(&f, &swap, Closeness::Plain).is_err());
    }

    #[test]
    fn closeness_spec_pair_on_generated_structure() {
        // f = id, g = swap on ({0,1}, generated by {(0,1)}): the pairs are (0,1) and (1,0)
        let x = c(2);
        let s = space(&x, &[(0, 1)]);
        let id = SpaceMap::identity(&s);
        let swap = SpaceMap::new(s.clone(), s, vec![1, 0]).unwrap();
        assert!(!are_close(&id, &swap, Closeness::SymFunctor).unwrap());
    }

    #[test]
    fn sym_closeness_is_an_equivalence() {
        let x = c(3);
        for s in all_structures_on(3).into_iter().step_by(5) {
            let maps: Vec<SpaceMap> = all_tables(3, 3)
                .map(|t| SpaceMap::new(FiniteEntourageSpace::discrete(&x), s.clone(), t).unwrap())
                .collect();
            for f in &maps {
                assert!(are_close(f, f, Closeness::SymFunctor).unwrap());
                for g in &maps {
                    let fg = are_close(f, g, Closeness::SymFunctor).unwrap();
                    assert_eq!(fg, are_close(g, f, Closeness::SymFunctor).unwrap());
                    if !fg {
                        continue;
                    }
                    if s.classify() == StructureClass::Coarse {
                        for h in &maps {
                            if are_close(g, h, Closeness::SymFunctor).unwrap() {
                                assert!(are_close(f, h, Closeness::SymFunctor).unwrap());
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn equivalence_examples() {
        let two = c(2);
        let one = c(1);
        let point = FiniteEntourageSpace::discrete(&one);
        let ind = FiniteEntourageSpace::indiscrete(&two);
        let f = SpaceMap::new(ind.clone(), point.clone(), vec![0, 0]).unwrap();
        assert!(sym_coarse_equivalence(&f).unwrap().is_yes());
        let disc = FiniteEntourageSpace::discrete(&two);
        let g = SpaceMap::new(disc.clone(), point.clone(), vec![0, 0]).unwrap();
        match sym_coarse_equivalence(&g).unwrap() {
            EquivalenceVerdict::No { failed } => assert_eq!(failed, vec!["effectively proper"]),
            v => panic!("unexpected {v:?}"),
        }
        assert!(equivalence_oracle(&ind, &ind).unwrap());
        assert!(equivalence_oracle(&ind, &point).unwrap());
        assert!(!equivalence_oracle(&disc, &point).unwrap());
    }

    #[test]
    fn equivalence_requires_quasi_coarse_inputs() {
        let x = c(3);
        let e1 = space(&x, &[(0, 1), (0, 2), (1, 0), (2, 0)]);
        let f = SpaceMap::identity(&e1);
        assert!(matches!(sym_coarse_equivalence(&f), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn oracle_size_guard() {
        let big = FiniteEntourageSpace::discrete(&c(8));
        let small = FiniteEntourageSpace::discrete(&c(3));
        assert!(matches!(equivalence_oracle(&big, &small), Err(Error::SizeCap { .. })));
    }

    #[test]
    fn large_subspace_inclusion_is_equivalence() {
        // Y' = {0,2} in an indiscrete-on-{0,1} ⊔ {2} space is large.
        let x = c(3);
        let s = space(&x, &[(0, 1), (1, 0)]);
        let sub = s.restrict_labels(&["0", "2"]).unwrap();
        let inc = SpaceMap::new(sub, s, vec![0, 2]).unwrap();
        match sym_coarse_equivalence(&inc).unwrap() {
            EquivalenceVerdict::Yes { inverse } => assert_eq!(inverse.table(), &[0, 0, 1]),
            v => panic!("unexpected {v:?}"),
        }
    }

    #[test]
    fn copreservation_implications_exhaustive() {
        for n in 1..=3 {
            for m in 1..=3 {
                let srcs = all_structures_on(n);
                let dsts = all_structures_on(m);
                for t in all_tables(n, m) {
                    for s in &srcs {
                        for d in &dsts {
                            let p = SpaceMap::new(s.clone(), d.clone(), t.clone()).unwrap().profile();
                            assert!(!p.effectively_proper || p.ubc);
                            assert!(!p.ubc || p.weakly_ubc);
                            assert!(!p.effectively_proper || p.ls_injective);
                            if s.classify().is_quasi() {
                                let a = p.ls_injective && p.weakly_ubc;
                                let b = p.ls_injective && p.ubc;
                                assert_eq!(a, p.effectively_proper);
                                assert_eq!(b, p.effectively_proper);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn ubc_surjections_transfer_bounded_geometry() {
        for s in all_structures_on(3) {
            for d in all_structures_on(2) {
                for t in all_tables(3, 2) {
                    let f = SpaceMap::new(s.clone(), d.clone(), t).unwrap();
                    if f.is_surjective() && f.profile().ubc {
                        assert!(d.geometry().phi <= s.geometry().phi);
                    }
                }
            }
        }
    }

    #[test]
    fn asymorphisms_preserve_class() {
        for s in all_structures_on(3) {
            for d in all_structures_on(3) {
                for t in [vec![0, 1, 2], vec![1, 2, 0], vec![2, 1, 0]] {
                    let f = SpaceMap::new(s.clone(), d.clone(), t).unwrap();
                    if f.profile().asymorphism {
                        assert_eq!(s.classify(), d.classify());
                        assert_eq!(s.connectivity().connected, d.connectivity().connected);
                        assert_eq!(s.connectivity().strongly_connected, d.connectivity().strongly_connected);
                    }
                }
            }
        }
    }
}
