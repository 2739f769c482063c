//! Exact relation algebra on finite carriers.
//!
//! A [`Carrier`] fixes a finite, labelled point set. An [`Entourage`] is an
//! arbitrary relation on a carrier, stored as one dense bit row per point.
//! Composition follows the order `E∘F = {(x,z) | ∃y: (x,y)∈E, (y,z)∈F}`, so
//! `(E∘F)[x] = F[E[x]]`.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest carrier the dense representation accepts.
pub const MAX_CARRIER: usize = 4096;

const WORD: usize = 64;

fn words_for(len: usize) -> usize {
    len.div_ceil(WORD)
}

/// A subset of `0..len`, stored as a dense bitset.
///
/// Bits past `len` are always zero, so derived equality and hashing are exact.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointSet {
    len: usize,
    words: Vec<u64>,
}

impl PointSet {
    pub fn empty(len: usize) -> Self {
        PointSet {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn full(len: usize) -> Self {
        let mut s = Self::empty(len);
        for w in s.words.iter_mut() {
            *w = !0;
        }
        s.trim();
        s
    }

    pub fn singleton(len: usize, i: usize) -> Self {
        let mut s = Self::empty(len);
        s.insert(i);
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(len: usize, it: I) -> Self {
        let mut s = Self::empty(len);
        for i in it {
            s.insert(i);
        }
        s
    }

    /// Builds a set over at most 64 points from a bitmask.
    pub fn from_mask(len: usize, mask: u64) -> Self {
        debug_assert!(len <= WORD);
        let mut s = Self::empty(len);
        if len > 0 {
            s.words[0] = mask;
            s.trim();
        }
        s
    }

    /// Low 64 bits of the set.
    pub fn mask(&self) -> u64 {
        self.words.first().copied().unwrap_or(0)
    }

    fn trim(&mut self) {
        let rem = self.len % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    /// Size of the ambient universe, not the number of members.
    pub fn universe(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.len && self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        assert!(i < self.len, "point {i} outside universe of size {}", self.len);
        self.words[i / WORD] |= 1 << (i % WORD);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        if i < self.len {
            self.words[i / WORD] &= !(1 << (i % WORD));
        }
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.count() == self.len
    }

    pub fn is_subset(&self, other: &PointSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &PointSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn union_with(&mut self, other: &PointSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &PointSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &PointSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &PointSet) -> PointSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &PointSet) -> PointSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * WORD + b)
            })
        })
    }

    /// Least member, if any.
    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A finite set of labelled points.
///
/// Labels are pairwise distinct and index `i` always refers to `labels[i]`.
#[derive(Clone)]
pub struct Carrier {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl Carrier {
    pub fn new<S: Into<String>, I: IntoIterator<Item = S>>(labels: I) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptyCarrier);
        }
        if labels.len() > MAX_CARRIER {
            return Err(Error::SizeCap {
                what: "carrier",
                size: labels.len(),
                limit: MAX_CARRIER,
            });
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(Carrier { labels, index })
    }

    /// Carrier with points labelled `0..n`.
    pub fn numbered(n: usize) -> Result<Self> {
        Self::new((0..n).map(|i| i.to_string()))
    }

    pub fn shared(self) -> Arc<Carrier> {
        Arc::new(self)
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Point set from labels; fails on the first unknown label.
    pub fn set_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<PointSet> {
        let mut s = PointSet::empty(self.size());
        for l in labels {
            s.insert(self.index_of(l.as_ref())?);
        }
        Ok(s)
    }

    pub fn labels_of(&self, set: &PointSet) -> Vec<String> {
        set.iter().map(|i| self.labels[i].clone()).collect()
    }

    pub fn all(&self) -> PointSet {
        PointSet::full(self.size())
    }
}

impl PartialEq for Carrier {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels
    }
}

impl Eq for Carrier {}

impl fmt::Debug for Carrier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Carrier").field(&self.labels).finish()
    }
}

pub(crate) fn same_carrier(a: &Arc<Carrier>, b: &Arc<Carrier>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

pub(crate) fn check_same(a: &Arc<Carrier>, b: &Arc<Carrier>, what: &str) -> Result<()> {
    if same_carrier(a, b) {
        Ok(())
    } else {
        Err(Error::CarrierMismatch(what.to_string()))
    }
}

/// Reflexivity, symmetry and transitivity of a relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RelationFlags {
    pub reflexive: bool,
    pub symmetric: bool,
    pub transitive: bool,
}

/// A relation `E ⊆ X × X` on a carrier.
#[derive(Clone)]
pub struct Entourage {
    carrier: Arc<Carrier>,
    rows: Vec<PointSet>,
}

impl PartialEq for Entourage {
    fn eq(&self, other: &Self) -> bool {
        same_carrier(&self.carrier, &other.carrier) && self.rows == other.rows
    }
}

impl Eq for Entourage {}

impl std::hash::Hash for Entourage {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.rows.hash(state);
    }
}

impl fmt::Debug for Entourage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<(&str, &str)> = self
            .pairs()
            .map(|(x, y)| (self.carrier.label(x), self.carrier.label(y)))
            .collect();
        f.debug_set().entries(pairs).finish()
    }
}

impl Entourage {
    pub fn empty(carrier: &Arc<Carrier>) -> Self {
        let n = carrier.size();
        Entourage {
            carrier: carrier.clone(),
            rows: vec![PointSet::empty(n); n],
        }
    }

    pub fn diagonal(carrier: &Arc<Carrier>) -> Self {
        let n = carrier.size();
        Entourage {
            carrier: carrier.clone(),
            rows: (0..n).map(|i| PointSet::singleton(n, i)).collect(),
        }
    }

    pub fn full(carrier: &Arc<Carrier>) -> Self {
        let n = carrier.size();
        Entourage {
            carrier: carrier.clone(),
            rows: vec![PointSet::full(n); n],
        }
    }

    /// Builds a relation from index pairs. Panics on out-of-range indices.
    pub fn from_pairs<I: IntoIterator<Item = (usize, usize)>>(carrier: &Arc<Carrier>, pairs: I) -> Self {
        let mut e = Self::empty(carrier);
        for (x, y) in pairs {
            e.insert(x, y);
        }
        e
    }

    pub fn from_label_pairs<S: AsRef<str>>(carrier: &Arc<Carrier>, pairs: &[(S, S)]) -> Result<Self> {
        let mut e = Self::empty(carrier);
        for (a, b) in pairs {
            e.insert(carrier.index_of(a.as_ref())?, carrier.index_of(b.as_ref())?);
        }
        Ok(e)
    }

    /// Relation given by one row per point.
    pub fn from_rows(carrier: &Arc<Carrier>, rows: Vec<PointSet>) -> Result<Self> {
        let n = carrier.size();
        if rows.len() != n || rows.iter().any(|r| r.universe() != n) {
            return Err(Error::CarrierMismatch("row shape does not match carrier".into()));
        }
        Ok(Entourage {
            carrier: carrier.clone(),
            rows,
        })
    }

    /// Relation `{(x,y) | pred(x,y)}`.
    pub fn from_fn(carrier: &Arc<Carrier>, mut pred: impl FnMut(usize, usize) -> bool) -> Self {
        let n = carrier.size();
        let rows = (0..n)
            .map(|x| PointSet::from_indices(n, (0..n).filter(|&y| pred(x, y))))
            .collect();
        Entourage {
            carrier: carrier.clone(),
            rows,
        }
    }

    pub fn carrier(&self) -> &Arc<Carrier> {
        &self.carrier
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.rows[x].contains(y)
    }

    #[inline]
    pub fn insert(&mut self, x: usize, y: usize) {
        self.rows[x].insert(y);
    }

    pub fn remove(&mut self, x: usize, y: usize) {
        self.rows[x].remove(y);
    }

    /// The row `E[x]`.
    pub fn row(&self, x: usize) -> &PointSet {
        &self.rows[x]
    }

    pub fn rows(&self) -> &[PointSet] {
        &self.rows
    }

    /// Number of pairs.
    pub fn count(&self) -> usize {
        self.rows.iter().map(PointSet::count).sum()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(x, r)| r.iter().map(move |y| (x, y)))
    }

    pub fn label_pairs(&self) -> Vec<(String, String)> {
        self.pairs()
            .map(|(x, y)| (self.carrier.label(x).to_string(), self.carrier.label(y).to_string()))
            .collect()
    }

    pub fn is_subset(&self, other: &Entourage) -> bool {
        self.rows.iter().zip(&other.rows).all(|(a, b)| a.is_subset(b))
    }

    pub fn union(&self, other: &Entourage) -> Result<Entourage> {
        check_same(&self.carrier, &other.carrier, "union")?;
        let mut e = self.clone();
        for (a, b) in e.rows.iter_mut().zip(&other.rows) {
            a.union_with(b);
        }
        Ok(e)
    }

    pub fn intersection(&self, other: &Entourage) -> Result<Entourage> {
        check_same(&self.carrier, &other.carrier, "intersection")?;
        let mut e = self.clone();
        for (a, b) in e.rows.iter_mut().zip(&other.rows) {
            a.intersect_with(b);
        }
        Ok(e)
    }

    /// `E∘F = {(x,z) | ∃y: (x,y)∈E, (y,z)∈F}`.
    pub fn compose(&self, other: &Entourage) -> Result<Entourage> {
        check_same(&self.carrier, &other.carrier, "compose")?;
        let n = self.size();
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut out = PointSet::empty(n);
                for y in r.iter() {
                    out.union_with(&other.rows[y]);
                }
                out
            })
            .collect();
        Ok(Entourage {
            carrier: self.carrier.clone(),
            rows,
        })
    }

    pub fn inverse(&self) -> Entourage {
        let n = self.size();
        let mut rows = vec![PointSet::empty(n); n];
        for (x, y) in self.pairs() {
            rows[y].insert(x);
        }
        Entourage {
            carrier: self.carrier.clone(),
            rows,
        }
    }

    /// `E[A] = ⋃_{a∈A} E[a]`.
    pub fn image(&self, a: &PointSet) -> Result<PointSet> {
        if a.universe() != self.size() {
            return Err(Error::CarrierMismatch("point set universe differs from carrier".into()));
        }
        let mut out = PointSet::empty(self.size());
        for x in a.iter() {
            out.union_with(&self.rows[x]);
        }
        Ok(out)
    }

    /// Image of a labelled point set, reported as labels in carrier order.
    pub fn image_labels<S: AsRef<str>>(&self, a: &[S]) -> Result<Vec<String>> {
        let set = self.carrier.set_of(a)?;
        Ok(self.carrier.labels_of(&self.image(&set)?))
    }

    /// `n`-fold composite `E∘⋯∘E`, with `power(1) = E`.
    pub fn power(&self, n: usize) -> Result<Entourage> {
        if n == 0 {
            return Err(Error::ZeroPower);
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.compose(self)?;
        }
        Ok(acc)
    }

    pub fn is_reflexive(&self) -> bool {
        self.rows.iter().enumerate().all(|(x, r)| r.contains(x))
    }

    pub fn is_symmetric(&self) -> bool {
        self.pairs().all(|(x, y)| self.contains(y, x))
    }

    pub fn is_transitive(&self) -> bool {
        self.rows.iter().all(|r| r.iter().all(|y| self.rows[y].is_subset(r)))
    }

    pub fn classify_relation(&self) -> RelationFlags {
        RelationFlags {
            reflexive: self.is_reflexive(),
            symmetric: self.is_symmetric(),
            transitive: self.is_transitive(),
        }
    }

    /// Least transitive relation containing `E` (Warshall over bit rows).
    pub fn transitive_closure(&self) -> Entourage {
        let mut rows = self.rows.clone();
        for k in 0..rows.len() {
            let rk = rows[k].clone();
            for row in rows.iter_mut() {
                if row.contains(k) {
                    row.union_with(&rk);
                }
            }
        }
        Entourage {
            carrier: self.carrier.clone(),
            rows,
        }
    }

    /// `E ∪ E⁻¹`.
    pub fn symmetric_closure(&self) -> Entourage {
        self.union(&self.inverse()).expect("same carrier")
    }

    /// `E ∩ E⁻¹`.
    pub fn symmetric_part(&self) -> Entourage {
        self.intersection(&self.inverse()).expect("same carrier")
    }

    pub fn with_diagonal(&self) -> Entourage {
        let mut e = self.clone();
        for x in 0..e.size() {
            e.insert(x, x);
        }
        e
    }

    pub fn is_full(&self) -> bool {
        self.rows.iter().all(PointSet::is_full)
    }

    /// Moves the relation onto an equal carrier held by a different handle.
    pub fn rehome(&self, carrier: &Arc<Carrier>) -> Result<Entourage> {
        check_same(&self.carrier, carrier, "rehome")?;
        Ok(Entourage {
            carrier: carrier.clone(),
            rows: self.rows.clone(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(n: usize) -> Arc<Carrier> {
        Carrier::numbered(n).unwrap().shared()
    }

    fn m1(x: &Arc<Carrier>) -> Entourage {
        Entourage::from_pairs(x, [(0, 1), (0, 2), (1, 0), (2, 0)]).with_diagonal()
    }

    fn m2(x: &Arc<Carrier>) -> Entourage {
        Entourage::from_pairs(x, [(0, 1), (0, 2)]).with_diagonal()
    }

    /// Relation on `n` points whose pair `(x,y)` is bit `x*n+y` of `mask`.
    fn rel(x: &Arc<Carrier>, mask: u32) -> Entourage {
        let n = x.size();
        Entourage::from_fn(x, |a, b| mask >> (a * n + b) & 1 == 1)
    }

    fn compose_oracle(e: &Entourage, f: &Entourage) -> Entourage {
        let n = e.size();
        let mut out = Entourage::empty(e.carrier());
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if e.contains(x, y) && f.contains(y, z) {
                        out.insert(x, z);
                    }
                }
            }
        }
        out
    }

    #[test]
    fn compose_single_witness() {
        let x = c(3);
        let e = Entourage::from_pairs(&x, [(0, 1)]);
        let f = Entourage::from_pairs(&x, [(1, 2)]);
        assert_eq!(e.compose(&f).unwrap(), Entourage::from_pairs(&x, [(0, 2)]));
        assert!(f.compose(&e).unwrap().count() == 0);
    }

    #[test]
    fn diagonal_is_left_identity() {
        let x = c(4);
        let f = rel(&x, 0b1011_0110_0001_1100);
        assert_eq!(Entourage::diagonal(&x).compose(&f).unwrap(), f);
    }

    #[test]
    fn compose_rejects_foreign_carrier() {
        let e = Entourage::diagonal(&c(2));
        let f = Entourage::diagonal(&c(3));
        assert!(matches!(e.compose(&f), Err(Error::CarrierMismatch(_))));
    }

    #[test]
    fn inverse_examples() {
        let x = c(3);
        let e = Entourage::from_pairs(&x, [(0, 1)]);
        assert_eq!(e.inverse(), Entourage::from_pairs(&x, [(1, 0)]));
        assert_eq!(Entourage::diagonal(&x).inverse(), Entourage::diagonal(&x));
        assert_eq!(m1(&x).inverse(), m1(&x));
    }

    #[test]
    fn image_examples() {
        let x = c(3);
        assert_eq!(m2(&x).image_labels(&["0"]).unwrap(), vec!["0", "1", "2"]);
        assert_eq!(m2(&x).image_labels(&["1"]).unwrap(), vec!["1"]);
        assert!(m2(&x).image(&PointSet::empty(3)).unwrap().is_empty());
        assert_eq!(m2(&x).image_labels(&["7"]), Err(Error::UnknownLabel("7".into())));
    }

    #[test]
    fn power_examples() {
        let x = c(3);
        let e = Entourage::from_pairs(&x, [(0, 1), (1, 2)]).with_diagonal();
        let expected = Entourage::from_pairs(&x, [(0, 1), (1, 2), (0, 2)]).with_diagonal();
        assert_eq!(e.power(2).unwrap(), expected);
        assert_eq!(e.power(1).unwrap(), e);
        let d = Entourage::diagonal(&x);
        for n in 1..5 {
            assert_eq!(d.power(n).unwrap(), d);
        }
        assert_eq!(e.power(0), Err(Error::ZeroPower));
    }

    #[test]
    fn classify_examples() {
        let x = c(3);
        let f2 = m2(&x).classify_relation();
        assert_eq!(
            f2,
            RelationFlags {
                reflexive: true,
                symmetric: false,
                transitive: true
            }
        );
        let f1 = m1(&x).classify_relation();
        assert_eq!(
            f1,
            RelationFlags {
                reflexive: true,
                symmetric: true,
                transitive: false
            }
        );
        let full = Entourage::full(&x).classify_relation();
        assert!(full.reflexive && full.symmetric && full.transitive);
    }

    #[test]
    fn associativity_exhaustive_on_two_points() {
        let x = c(2);
        for a in 0..16 {
            for b in 0..16 {
                for g in 0..16 {
                    let (e, f, h) = (rel(&x, a), rel(&x, b), rel(&x, g));
                    let l = e.compose(&f).unwrap().compose(&h).unwrap();
                    let r = e.compose(&f.compose(&h).unwrap()).unwrap();
                    assert_eq!(l, r);
                }
            }
        }
    }

    #[test]
    fn transitive_closure_matches_power_limit() {
        let x = c(4);
        let e = Entourage::from_pairs(&x, [(0, 1), (1, 2), (2, 3)]).with_diagonal();
        assert_eq!(e.transitive_closure(), e.power(4).unwrap());
        assert!(e.transitive_closure().is_transitive());
    }

    proptest! {
        #[test]
        fn compose_matches_triple_loop(a in 0u32..(1 << 25), b in 0u32..(1 << 25)) {
            let x = c(5);
            let (e, f) = (rel(&x, a), rel(&x, b));
            prop_assert_eq!(e.compose(&f).unwrap(), compose_oracle(&e, &f));
        }

        #[test]
        fn associativity_on_three_and_four(a in 0u32..(1 << 16), b in 0u32..(1 << 16), g in 0u32..(1 << 16)) {
            for n in [3usize, 4] {
                let x = c(n);
                let m = (1u32 << (n * n)) - 1;
                let (e, f, h) = (rel(&x, a & m), rel(&x, b & m), rel(&x, g & m));
                let l = e.compose(&f).unwrap().compose(&h).unwrap();
                let r = e.compose(&f.compose(&h).unwrap()).unwrap();
                prop_assert_eq!(l, r);
            }
        }

        #[test]
        fn inverse_reverses_composition(a in 0u32..(1 << 16), b in 0u32..(1 << 16)) {
            let x = c(4);
            let (e, f) = (rel(&x, a), rel(&x, b));
            prop_assert_eq!(e.compose(&f).unwrap().inverse(), f.inverse().compose(&e.inverse()).unwrap());
            prop_assert_eq!(e.inverse().inverse(), e);
        }

        #[test]
        fn image_pins_composition_order(a in 0u32..(1 << 16), b in 0u32..(1 << 16), s in 0u64..16) {
            let x = c(4);
            let (e, f) = (rel(&x, a), rel(&x, b));
            let set = PointSet::from_mask(4, s);
            let lhs = e.compose(&f).unwrap().image(&set).unwrap();
            let rhs = f.image(&e.image(&set).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn composition_is_monotone(a in 0u32..(1 << 16), extra in 0u32..(1 << 16), g in 0u32..(1 << 16)) {
            let x = c(4);
            let e = rel(&x, a);
            let f = rel(&x, a | extra);
            let h = rel(&x, g);
            prop_assert!(e.compose(&h).unwrap().is_subset(&f.compose(&h).unwrap()));
            prop_assert!(h.compose(&e).unwrap().is_subset(&h.compose(&f).unwrap()));
        }

        #[test]
        fn powers_of_reflexive_relations_increase(a in 0u32..(1 << 16)) {
            let x = c(4);
            let e = rel(&x, a).with_diagonal();
            let mut prev = e.power(1).unwrap();
            for n in 2..=4 {
                let next = e.power(n).unwrap();
                prop_assert!(prev.is_subset(&next));
                prop_assert_eq!(&next, &compose_oracle(&prev, &e));
                prev = next;
            }
        }
    }
}
