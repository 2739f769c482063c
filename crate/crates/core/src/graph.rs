//! Directed graphs, path quasi-metrics, graphic structures and Cayley digraphs.

use std::collections::VecDeque;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{classify_magma, MagmaTable, Side};
use crate::error::{Error, Result};
use crate::morphism::SpaceMap;
use crate::rel::{Carrier, Entourage, PointSet};
use crate::space::FiniteEntourageSpace;
use crate::weight::{classify_weight, structure_from_weight, Weight, WeightStructure, WeightTable};

/// Edges are an arbitrary relation on the vertices; loops are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiGraph {
    edges: Entourage,
}

impl DiGraph {
    pub fn new(edges: Entourage) -> Self {
        DiGraph { edges }
    }

    pub fn edgeless(vertices: &Arc<Carrier>) -> Self {
        DiGraph {
            edges: Entourage::empty(vertices),
        }
    }

    pub fn vertices(&self) -> &Arc<Carrier> {
        self.edges.carrier()
    }

    pub fn size(&self) -> usize {
        self.edges.size()
    }

    pub fn edges(&self) -> &Entourage {
        &self.edges
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        self.edges.contains(x, y)
    }

    /// Breadth-first distances from `s`; `None` when unreachable.
    pub fn bfs(&self, s: usize) -> Vec<Option<u64>> {
        let mut dist = vec![None; self.size()];
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].expect("queued vertices are reached");
            for v in self.edges.row(u).iter() {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }
}

/// Shortest directed path lengths, `∞` when unreachable.
pub fn path_weight(g: &DiGraph) -> WeightTable {
    let rows: Vec<Vec<Option<u64>>> = (0..g.size()).map(|s| g.bfs(s)).collect();
    WeightTable::from_fn(g.vertices(), |x, y| rows[x][y].map_or(Weight::Infinite, |d| Weight::int(d as i64)))
        .expect("bfs puts 0 on the diagonal")
}

/// Structure of the path quasi-metric; always quasi-coarse.
pub fn graphic_structure(g: &DiGraph) -> WeightStructure {
    structure_from_weight(&path_weight(g))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GraphHomCheck {
    pub homomorphism: bool,
    /// `d₂(f(x), f(y)) ≤ d₁(x, y)` for all pairs; checked for homomorphisms only.
    pub non_expanding: Option<bool>,
    /// Bornologous between the graphic structures; checked for homomorphisms only.
    pub bornologous: Option<bool>,
}

/// Every edge `(x,y)` has `f(x) = f(y)` or `(f(x), f(y))` an edge.
pub fn is_graph_homomorphism(f: &[usize], g1: &DiGraph, g2: &DiGraph) -> Result<GraphHomCheck> {
    if f.len() != g1.size() || f.iter().any(|&v| v >= g2.size()) {
        return Err(Error::Invalid("vertex map does not fit the graphs".into()));
    }
    let homomorphism = g1
        .edges
        .pairs()
        .all(|(x, y)| f[x] == f[y] || g2.has_edge(f[x], f[y]));
    if !homomorphism {
        return Ok(GraphHomCheck {
            homomorphism,
            non_expanding: None,
            bornologous: None,
        });
    }
    let d1 = path_weight(g1);
    let d2 = path_weight(g2);
    let n = g1.size();
    let non_expanding = (0..n).all(|x| (0..n).all(|y| d2.get(f[x], f[y]) <= d1.get(x, y)));
    let s1 = structure_from_weight(&d1).space;
    let s2 = structure_from_weight(&d2).space;
    let bornologous = SpaceMap::new(s1, s2, f.to_vec())?.is_bornologous();
    Ok(GraphHomCheck {
        homomorphism,
        non_expanding: Some(non_expanding),
        bornologous: Some(bornologous),
    })
}

/// A digraph whose graphic structure is `space`: the vertices are the
/// points and the edges are `M \ Δ`.
pub fn graphic_realization(space: &FiniteEntourageSpace) -> Result<DiGraph> {
    if !space.classify().is_quasi() {
        return Err(Error::Hypothesis("space is not quasi-coarse".into()));
    }
    if !space.connectivity().connected {
        return Err(Error::Hypothesis("space is not connected".into()));
    }
    let c = space.carrier();
    Ok(DiGraph::new(Entourage::from_fn(c, |x, y| x != y && space.max_ent().contains(x, y))))
}

fn require_monoid(m: &MagmaTable) -> Result<usize> {
    let e = m.require_identity()?;
    if !classify_magma(m).associative {
        return Err(Error::Hypothesis("table is not a monoid".into()));
    }
    Ok(e)
}

fn check_gens(m: &MagmaTable, sigma: &PointSet) -> Result<()> {
    if sigma.universe() != m.size() {
        return Err(Error::CarrierMismatch("generators live on another table".into()));
    }
    Ok(())
}

/// Left: edges `(x, x·σ)`. Right: edges `(x, σ·x)`.
pub fn cayley(m: &MagmaTable, sigma: &PointSet, side: Side) -> Result<DiGraph> {
    require_monoid(m)?;
    check_gens(m, sigma)?;
    let mut edges = Entourage::empty(m.elements());
    for x in 0..m.size() {
        for s in sigma.iter() {
            let y = match side {
                Side::Left => m.mul(x, s),
                Side::Right => m.mul(s, x),
            };
            edges.insert(x, y);
        }
    }
    Ok(DiGraph::new(edges))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordWeight {
    pub weight: WeightTable,
    /// `d(zx, zy) ≤ d(x, y)` on the left side, `d(xz, yz) ≤ d(x, y)` on the right.
    pub non_expanding: bool,
    /// Equality in place of `≤`; decided for groups only.
    pub invariant: Option<bool>,
}

/// Word quasi-metric: the least number of generators carrying `x` to `y`.
pub fn word_weight(m: &MagmaTable, sigma: &PointSet, side: Side) -> Result<WordWeight> {
    let weight = path_weight(&cayley(m, sigma, side)?);
    let n = m.size();
    let act = |z: usize, x: usize| match side {
        Side::Left => m.mul(z, x),
        Side::Right => m.mul(x, z),
    };
    let cmp = |pred: &dyn Fn(Weight, Weight) -> bool| {
        (0..n).all(|z| (0..n).all(|x| (0..n).all(|y| pred(weight.get(act(z, x), act(z, y)), weight.get(x, y)))))
    };
    let non_expanding = cmp(&|a, b| a <= b);
    let invariant = classify_magma(m).group.then(|| cmp(&|a, b| a == b));
    Ok(WordWeight {
        weight,
        non_expanding,
        invariant,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenInvariance {
    pub equal_structures: bool,
    /// `max_σ d_Δ(e, σ)`.
    pub k: u64,
    /// `max_δ d_Σ(e, δ)`.
    pub l: u64,
    /// `d_Δ ≤ k·d_Σ` and `d_Σ ≤ l·d_Δ` pointwise.
    pub lipschitz: bool,
}

/// Compares the word structures of two generating sets.
pub fn gen_invariance(m: &MagmaTable, sigma: &PointSet, delta: &PointSet, side: Side) -> Result<GenInvariance> {
    let e = require_monoid(m)?;
    let ws = word_weight(m, sigma, side)?.weight;
    let wd = word_weight(m, delta, side)?.weight;
    for (name, w) in [("first", &ws), ("second", &wd)] {
        if (0..m.size()).any(|y| !w.get(e, y).is_finite()) {
            return Err(Error::Hypothesis(format!("{name} set does not generate the monoid")));
        }
    }
    let max_from_e = |w: &WeightTable, set: &PointSet| {
        set.iter()
            .map(|s| w.get(e, s).finite().expect("generating").to_integer() as u64)
            .max()
            .unwrap_or(0)
    };
    let k = max_from_e(&wd, sigma);
    let l = max_from_e(&ws, delta);
    let scale = |w: Weight, c: u64| match w {
        Weight::Finite(r) => Weight::Finite(r * c as i64),
        Weight::Infinite => Weight::Infinite,
    };
    let n = m.size();
    let lipschitz = (0..n).all(|x| {
        (0..n).all(|y| wd.get(x, y) <= scale(ws.get(x, y), k) && ws.get(x, y) <= scale(wd.get(x, y), l))
    });
    let equal_structures = structure_from_weight(&ws).space == structure_from_weight(&wd).space;
    Ok(GenInvariance {
        equal_structures,
        k,
        l,
        lipschitz,
    })
}

/// The path weight satisfies the triangle inequality.
pub fn is_quasi_metric_graph(g: &DiGraph) -> bool {
    classify_weight(&path_weight(g)).triangle
}
