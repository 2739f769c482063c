//! Entourage spaces on finite carriers.
//!
//! On a finite carrier every entourage structure is the family of all subsets
//! of its largest member `M`, so a space is stored as that single reflexive
//! relation. Membership, classification and every construction reduce to
//! relation algebra on `M`.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rel::{check_same, Carrier, Entourage, PointSet};

/// Which closure axioms a structure satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StructureClass {
    Entourage,
    SemiCoarse,
    QuasiCoarse,
    Coarse,
}

impl StructureClass {
    pub fn from_flags(symmetric: bool, transitive: bool) -> Self {
        match (symmetric, transitive) {
            (true, true) => StructureClass::Coarse,
            (true, false) => StructureClass::SemiCoarse,
            (false, true) => StructureClass::QuasiCoarse,
            (false, false) => StructureClass::Entourage,
        }
    }

    pub fn is_semi(self) -> bool {
        matches!(self, StructureClass::SemiCoarse | StructureClass::Coarse)
    }

    pub fn is_quasi(self) -> bool {
        matches!(self, StructureClass::QuasiCoarse | StructureClass::Coarse)
    }

    /// True when every axiom required by `required` holds for `self`.
    pub fn satisfies(self, required: StructureClass) -> bool {
        (!required.is_semi() || self.is_semi()) && (!required.is_quasi() || self.is_quasi())
    }

    pub fn name(self) -> &'static str {
        match self {
            StructureClass::Entourage => "entourage",
            StructureClass::SemiCoarse => "semi-coarse",
            StructureClass::QuasiCoarse => "quasi-coarse",
            StructureClass::Coarse => "coarse",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "entourage" => Some(StructureClass::Entourage),
            "semi-coarse" | "semi" => Some(StructureClass::SemiCoarse),
            "quasi-coarse" | "quasi" => Some(StructureClass::QuasiCoarse),
            "coarse" => Some(StructureClass::Coarse),
            _ => None,
        }
    }
}

impl fmt::Display for StructureClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// (B1)–(B3) for one subset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Boundedness {
    pub b1: bool,
    pub b2: bool,
    pub b3: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Connectivity {
    pub connected: bool,
    pub strongly_connected: bool,
    /// Witnessed by `M` itself whenever it holds.
    pub uniformly_connected: bool,
    pub components: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Geometry {
    pub locally_finite: bool,
    pub phi: usize,
}

/// An entourage space in principal form: the structure is `{E | E ⊆ M}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteEntourageSpace {
    max_ent: Entourage,
}

impl fmt::Debug for FiniteEntourageSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteEntourageSpace")
            .field("points", &self.carrier().labels())
            .field("max_ent", &self.max_ent)
            .finish()
    }
}

impl FiniteEntourageSpace {
    /// Space generated by `Δ ∪ ⋃ gens`.
    pub fn from_generators(carrier: &Arc<Carrier>, gens: &[Entourage]) -> Result<Self> {
        let mut m = Entourage::diagonal(carrier);
        for g in gens {
            check_same(carrier, g.carrier(), "generator lives on another carrier")?;
            m = m.union(g)?;
        }
        Ok(FiniteEntourageSpace { max_ent: m })
    }

    /// Space whose largest entourage is `m ∪ Δ`.
    pub fn principal(m: Entourage) -> Self {
        FiniteEntourageSpace {
            max_ent: m.with_diagonal(),
        }
    }

    pub fn discrete(carrier: &Arc<Carrier>) -> Self {
        FiniteEntourageSpace {
            max_ent: Entourage::diagonal(carrier),
        }
    }

    pub fn indiscrete(carrier: &Arc<Carrier>) -> Self {
        FiniteEntourageSpace {
            max_ent: Entourage::full(carrier),
        }
    }

    pub fn carrier(&self) -> &Arc<Carrier> {
        self.max_ent.carrier()
    }

    pub fn size(&self) -> usize {
        self.max_ent.size()
    }

    pub fn max_ent(&self) -> &Entourage {
        &self.max_ent
    }

    /// Membership in the structure.
    pub fn contains(&self, e: &Entourage) -> bool {
        crate::rel::same_carrier(self.carrier(), e.carrier()) && e.is_subset(&self.max_ent)
    }

    pub fn classify(&self) -> StructureClass {
        StructureClass::from_flags(self.max_ent.is_symmetric(), self.max_ent.is_transitive())
    }

    /// Entourage subspace on `y`; points keep their labels and carrier order.
    pub fn restrict(&self, y: &PointSet) -> Result<FiniteEntourageSpace> {
        if y.universe() != self.size() {
            return Err(Error::CarrierMismatch("subset universe differs from carrier".into()));
        }
        let keep: Vec<usize> = y.iter().collect();
        let carrier = Carrier::new(keep.iter().map(|&i| self.carrier().label(i).to_string()))?.shared();
        let m = Entourage::from_fn(&carrier, |a, b| self.max_ent.contains(keep[a], keep[b]));
        Ok(FiniteEntourageSpace { max_ent: m })
    }

    pub fn restrict_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<FiniteEntourageSpace> {
        self.restrict(&self.carrier().set_of(labels)?)
    }

    pub fn boundedness(&self, a: &PointSet) -> Result<Boundedness> {
        if a.universe() != self.size() {
            return Err(Error::CarrierMismatch("subset universe differs from carrier".into()));
        }
        if a.is_empty() {
            return Err(Error::EmptyBoundedSet);
        }
        let covers = |x: usize| a.is_subset(self.max_ent.row(x));
        let b1 = a.iter().any(covers);
        let b2 = a.iter().all(covers);
        let b3 = a.iter().all(|x| a.is_subset(self.max_ent.row(x)));
        Ok(Boundedness { b1, b2, b3 })
    }

    pub fn uniformly_bounded(&self, family: &[PointSet]) -> bool {
        family
            .iter()
            .all(|a| a.iter().all(|x| a.is_subset(self.max_ent.row(x))))
    }

    pub fn connectivity(&self) -> Connectivity {
        let n = self.size();
        let reach = self.max_ent.symmetric_closure().transitive_closure();
        let mut seen = PointSet::empty(n);
        let mut components = Vec::new();
        for x in 0..n {
            if seen.contains(x) {
                continue;
            }
            let comp = reach.row(x).clone();
            seen.union_with(&comp);
            components.push(self.carrier().labels_of(&comp));
        }
        let connected = components.len() == 1;
        Connectivity {
            connected,
            strongly_connected: self.max_ent.is_full(),
            uniformly_connected: connected,
            components,
        }
    }

    /// Component partition as point sets, ordered by least member.
    pub fn component_sets(&self) -> Vec<PointSet> {
        let n = self.size();
        let reach = self.max_ent.symmetric_closure().transitive_closure();
        let mut seen = PointSet::empty(n);
        let mut out = Vec::new();
        for x in 0..n {
            if !seen.contains(x) {
                seen.union_with(reach.row(x));
                out.push(reach.row(x).clone());
            }
        }
        out
    }

    pub fn geometry(&self) -> Geometry {
        Geometry {
            locally_finite: true,
            phi: self.max_ent.rows().iter().map(PointSet::count).max().unwrap_or(0),
        }
    }

    /// Same space with the carrier handle replaced by an equal one.
    pub fn rehome(&self, carrier: &Arc<Carrier>) -> Result<FiniteEntourageSpace> {
        Ok(FiniteEntourageSpace {
            max_ent: self.max_ent.rehome(carrier)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: usize) -> Arc<Carrier> {
        Carrier::numbered(n).unwrap().shared()
    }

    fn e1(x: &Arc<Carrier>) -> FiniteEntourageSpace {
        FiniteEntourageSpace::from_generators(x, &[Entourage::from_pairs(x, [(0, 1), (0, 2), (1, 0), (2, 0)])]).unwrap()
    }

    fn e2(x: &Arc<Carrier>) -> FiniteEntourageSpace {
        FiniteEntourageSpace::from_generators(x, &[Entourage::from_pairs(x, [(0, 1), (0, 2)])]).unwrap()
    }

    /// Every structure on `n` points, as generated spaces.
    fn all_spaces(n: usize) -> Vec<FiniteEntourageSpace> {
        let x = c(n);
        let off: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b))).collect();
        (0u32..1 << off.len())
            .map(|mask| {
                let e = Entourage::from_pairs(&x, off.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p));
                FiniteEntourageSpace::principal(e)
            })
            .collect()
    }

    /// Closure axioms checked over every subset of `M`.
    fn classify_oracle(s: &FiniteEntourageSpace) -> StructureClass {
        let x = s.carrier();
        let pairs: Vec<(usize, usize)> = s.max_ent().pairs().collect();
        assert!(pairs.len() <= 12);
        let members: Vec<Entourage> = (0u32..1 << pairs.len())
            .map(|mask| Entourage::from_pairs(x, pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p)))
            .collect();
        let semi = members.iter().all(|e| s.contains(&e.inverse()));
        let quasi = members
            .iter()
            .all(|e| members.iter().all(|f| s.contains(&e.compose(f).unwrap())));
        StructureClass::from_flags(semi, quasi)
    }

    #[test]
    fn generator_examples() {
        let x = c(3);
        let m2 = Entourage::from_pairs(&x, [(0, 1), (0, 2)]).with_diagonal();
        assert_eq!(e2(&x).max_ent(), &m2);
        let discrete = FiniteEntourageSpace::from_generators(&x, &[]).unwrap();
        assert_eq!(discrete, FiniteEntourageSpace::discrete(&x));
        let ind = FiniteEntourageSpace::from_generators(&x, &[Entourage::full(&x)]).unwrap();
        assert_eq!(ind, FiniteEntourageSpace::indiscrete(&x));
    }

    #[test]
    fn generators_on_other_carrier_are_rejected() {
        let r = FiniteEntourageSpace::from_generators(&c(3), &[Entourage::diagonal(&c(2))]);
        assert!(matches!(r, Err(Error::CarrierMismatch(_))));
    }

    #[test]
    fn from_generators_is_idempotent() {
        for s in all_spaces(3) {
            let again = FiniteEntourageSpace::from_generators(s.carrier(), &[s.max_ent().clone()]).unwrap();
            assert_eq!(again, s);
        }
    }

    #[test]
    fn classification_examples() {
        let x = c(3);
        assert_eq!(e1(&x).classify(), StructureClass::SemiCoarse);
        assert_eq!(e2(&x).classify(), StructureClass::QuasiCoarse);
        assert_eq!(FiniteEntourageSpace::discrete(&x).classify(), StructureClass::Coarse);
    }

    #[test]
    fn classify_agrees_with_subset_oracle() {
        for n in 1..=3 {
            for s in all_spaces(n) {
                assert_eq!(s.classify(), classify_oracle(&s), "{s:?}");
            }
        }
    }

    #[test]
    fn restrict_examples() {
        let x = c(3);
        let r = e2(&x).restrict_labels(&["1", "2"]).unwrap();
        assert_eq!(r, FiniteEntourageSpace::discrete(&Carrier::new(["1", "2"]).unwrap().shared()));
        assert_eq!(e2(&x).restrict(&x.all()).unwrap(), e2(&x));
        assert!(e2(&x).restrict_labels(&["9"]).is_err());
    }

    #[test]
    fn restriction_preserves_axioms() {
        for n in 1..=3 {
            for s in all_spaces(n) {
                let class = s.classify();
                for mask in 1u64..(1 << n) {
                    let r = s.restrict(&PointSet::from_mask(n, mask)).unwrap();
                    assert!(r.classify().satisfies(class));
                }
            }
        }
    }

    #[test]
    fn boundedness_examples() {
        let x = c(3);
        let all = x.all();
        let expected = Boundedness {
            b1: true,
            b2: false,
            b3: false,
        };
        assert_eq!(e2(&x).boundedness(&all).unwrap(), expected);
        assert_eq!(e1(&x).boundedness(&all).unwrap(), expected);
        for i in 0..3 {
            let b = e2(&x).boundedness(&PointSet::singleton(3, i)).unwrap();
            assert!(b.b1 && b.b2 && b.b3);
        }
        assert_eq!(e2(&x).boundedness(&PointSet::empty(3)), Err(Error::EmptyBoundedSet));
    }

    #[test]
    fn boundedness_implications_exhaustive() {
        for n in 1..=3 {
            for s in all_spaces(n) {
                for mask in 1u64..(1 << n) {
                    let b = s.boundedness(&PointSet::from_mask(n, mask)).unwrap();
                    assert!(!b.b3 || b.b2);
                    assert!(!b.b2 || b.b1);
                }
            }
        }
    }

    #[test]
    fn uniform_boundedness_examples() {
        let x = c(3);
        let singletons: Vec<_> = (0..3).map(|i| PointSet::singleton(3, i)).collect();
        assert!(e2(&x).uniformly_bounded(&singletons));
        assert!(!e2(&x).uniformly_bounded(&[x.all()]));
        for s in all_spaces(3).into_iter().filter(|s| s.classify() == StructureClass::Coarse) {
            let balls: Vec<_> = s.max_ent().rows().to_vec();
            assert!(s.uniformly_bounded(&balls));
        }
    }

    #[test]
    fn connectivity_examples() {
        let x = c(3);
        let r = e2(&x).connectivity();
        assert!(r.connected && !r.strongly_connected && r.uniformly_connected);
        let ind = FiniteEntourageSpace::indiscrete(&x).connectivity();
        assert!(ind.connected && ind.strongly_connected && ind.uniformly_connected);
        let two = FiniteEntourageSpace::discrete(&Carrier::new(["a", "b"]).unwrap().shared()).connectivity();
        assert_eq!(two.components, vec![vec!["a".to_string()], vec!["b".to_string()]]);
        assert!(!two.connected);
    }

    #[test]
    fn coarse_spaces_connected_iff_strongly_connected() {
        for n in 1..=3 {
            for s in all_spaces(n).into_iter().filter(|s| s.classify() == StructureClass::Coarse) {
                let r = s.connectivity();
                assert_eq!(r.connected, r.strongly_connected);
            }
        }
    }

    #[test]
    fn geometry_examples() {
        let x = c(3);
        assert_eq!(e2(&x).geometry().phi, 3);
        assert_eq!(FiniteEntourageSpace::discrete(&x).geometry().phi, 1);
        assert_eq!(FiniteEntourageSpace::indiscrete(&c(5)).geometry().phi, 5);
        assert!(e2(&x).geometry().locally_finite);
    }
}
