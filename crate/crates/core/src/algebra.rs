//! Finite magmas given by multiplication tables, principal ideals, and the
//! left and right entourage structures they induce.
//!
//! An ideal on a finite magma is the family of all subsets of its union `U`,
//! so every ideal-kind predicate reduces to a closure condition on `U`.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::morphism::SpaceMap;
use crate::rel::{same_carrier, Carrier, Entourage, PointSet};
use crate::space::FiniteEntourageSpace;

/// A total binary operation on a labelled carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MagmaTable {
    elements: Arc<Carrier>,
    op: Vec<usize>,
    identity: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AlgebraProfile {
    pub unitary: bool,
    pub associative: bool,
    #[serde(rename = "loop")]
    pub is_loop: bool,
    pub group: bool,
    pub abelian: bool,
    pub right_ip: bool,
    pub left_ip: bool,
    pub two_sided_inverses: bool,
}

/// `g·g^ρ = e` and `g^λ·g = e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoopInverses {
    pub lambda: Vec<usize>,
    pub rho: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IdealFlags {
    pub magmatic: bool,
    pub monoid_ideal: bool,
    pub left_loop: bool,
    pub right_loop: bool,
    pub loop_ideal: bool,
    pub group_ideal: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn parse(s: &str) -> Option<Side> {
        match s {
            "left" => Some(Side::Left),
            "right" => Some(Side::Right),
            _ => None,
        }
    }
}

impl MagmaTable {
    /// `op[a * n + b] = a·b`.
    pub fn new(elements: &Arc<Carrier>, op: Vec<usize>) -> Result<Self> {
        let n = elements.size();
        if op.len() != n * n {
            return Err(Error::Invalid(format!("table needs {} entries, got {}", n * n, op.len())));
        }
        if let Some(&bad) = op.iter().find(|&&v| v >= n) {
            return Err(Error::Invalid(format!("table entry {bad} out of range")));
        }
        let identity = (0..n).find(|&e| (0..n).all(|g| op[e * n + g] == g && op[g * n + e] == g));
        Ok(MagmaTable {
            elements: elements.clone(),
            op,
            identity,
        })
    }

    /// Table from label rows, row `a` listing `a·b` for each column `b`.
    pub fn from_rows<S: AsRef<str>>(elements: &Arc<Carrier>, rows: &[Vec<S>]) -> Result<Self> {
        let n = elements.size();
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::Invalid(format!("table must be {n}×{n}")));
        }
        let op = rows
            .iter()
            .flatten()
            .map(|l| elements.index_of(l.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        MagmaTable::new(elements, op)
    }

    pub fn from_fn(elements: &Arc<Carrier>, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let n = elements.size();
        MagmaTable::new(elements, (0..n * n).map(|i| f(i / n, i % n)).collect())
    }

    pub fn elements(&self) -> &Arc<Carrier> {
        &self.elements
    }

    pub fn size(&self) -> usize {
        self.elements.size()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.op[a * self.size() + b]
    }

    pub fn identity(&self) -> Option<usize> {
        self.identity
    }

    pub fn require_identity(&self) -> Result<usize> {
        self.identity
            .ok_or_else(|| Error::Hypothesis("magma has no identity".into()))
    }

    pub fn rows(&self) -> Vec<Vec<String>> {
        let n = self.size();
        (0..n)
            .map(|a| (0..n).map(|b| self.elements.label(self.mul(a, b)).to_string()).collect())
            .collect()
    }

    pub fn is_associative(&self) -> bool {
        let n = self.size();
        (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c)))))
    }

    /// Every row and every column is a permutation.
    pub fn is_latin(&self) -> bool {
        let n = self.size();
        let perm = |f: &dyn Fn(usize) -> usize| {
            let mut seen = vec![false; n];
            (0..n).all(|b| !std::mem::replace(&mut seen[f(b)], true))
        };
        (0..n).all(|a| perm(&|b| self.mul(a, b)) && perm(&|b| self.mul(b, a)))
    }

    /// `A·B`.
    pub fn product_set(&self, a: &PointSet, b: &PointSet) -> PointSet {
        PointSet::from_indices(self.size(), a.iter().flat_map(|x| b.iter().map(move |y| self.mul(x, y))))
    }
}

pub fn classify_magma(t: &MagmaTable) -> AlgebraProfile {
    let n = t.size();
    let unitary = t.identity.is_some();
    let associative = t.is_associative();
    let is_loop = unitary && t.is_latin();
    let abelian = (0..n).all(|a| (0..a).all(|b| t.mul(a, b) == t.mul(b, a)));
    let (right_ip, left_ip, two_sided_inverses) = match loop_inverses(t) {
        Ok(inv) => (
            (0..n).all(|g| (0..n).all(|h| t.mul(t.mul(g, h), inv.rho[h]) == g)),
            (0..n).all(|g| (0..n).all(|h| t.mul(inv.lambda[g], t.mul(g, h)) == h)),
            inv.lambda == inv.rho,
        ),
        Err(_) => (false, false, false),
    };
    AlgebraProfile {
        unitary,
        associative,
        is_loop,
        group: is_loop && associative,
        abelian,
        right_ip,
        left_ip,
        two_sided_inverses,
    }
}

pub fn loop_inverses(t: &MagmaTable) -> Result<LoopInverses> {
    let e = t.require_identity()?;
    if !t.is_latin() {
        return Err(Error::Hypothesis("magma is not a loop".into()));
    }
    let n = t.size();
    let rho = (0..n)
        .map(|g| (0..n).find(|&x| t.mul(g, x) == e).expect("latin row"))
        .collect();
    let lambda = (0..n)
        .map(|g| (0..n).find(|&y| t.mul(y, g) == e).expect("latin column"))
        .collect();
    Ok(LoopInverses { lambda, rho })
}

fn require_unit_in(t: &MagmaTable, u: &PointSet) -> Result<usize> {
    let e = t.require_identity()?;
    if u.universe() != t.size() {
        return Err(Error::CarrierMismatch("ideal lives on another magma".into()));
    }
    if !u.contains(e) {
        return Err(Error::Hypothesis("ideal must contain the identity".into()));
    }
    Ok(e)
}

pub fn classify_ideal(t: &MagmaTable, u: &PointSet) -> Result<IdealFlags> {
    require_unit_in(t, u)?;
    let profile = classify_magma(t);
    let closed = t.product_set(u, u).is_subset(u);
    let (left_loop, right_loop) = match loop_inverses(t) {
        Ok(inv) => {
            let image = |m: &[usize]| PointSet::from_indices(t.size(), u.iter().map(|g| m[g]));
            (closed && image(&inv.lambda).is_subset(u), closed && image(&inv.rho).is_subset(u))
        }
        Err(_) => (false, false),
    };
    let monoid_ideal = closed && profile.associative;
    Ok(IdealFlags {
        magmatic: closed,
        monoid_ideal,
        left_loop,
        right_loop,
        loop_ideal: left_loop && right_loop,
        group_ideal: profile.group && monoid_ideal && left_loop && right_loop,
    })
}

/// Left: `Δ ∪ {(x, x·k) | k ∈ U}`. Right: `Δ ∪ {(x, k·x) | k ∈ U}`.
pub fn side_structure(t: &MagmaTable, u: &PointSet, side: Side) -> Result<FiniteEntourageSpace> {
    require_unit_in(t, u)?;
    let mut m = Entourage::diagonal(&t.elements);
    for x in 0..t.size() {
        for k in u.iter() {
            let y = match side {
                Side::Left => t.mul(x, k),
                Side::Right => t.mul(k, x),
            };
            m.insert(x, y);
        }
    }
    Ok(FiniteEntourageSpace::principal(m))
}

/// `s_x(y) = x·y` on the left, `y·x` on the right, as maps of `space` to itself.
pub fn shifts(t: &MagmaTable, space: &FiniteEntourageSpace, side: Side) -> Result<Vec<SpaceMap>> {
    if !same_carrier(t.elements(), space.carrier()) {
        return Err(Error::CarrierMismatch("space does not live on the magma".into()));
    }
    (0..t.size())
        .map(|x| {
            let table = (0..t.size())
                .map(|y| match side {
                    Side::Left => t.mul(x, y),
                    Side::Right => t.mul(y, x),
                })
                .collect();
            SpaceMap::new(space.clone(), space.clone(), table)
        })
        .collect()
}

/// `⋃_f (f×f)(M_src) ⊆ M_dst`.
pub fn equi_bornologous(maps: &[SpaceMap]) -> Result<bool> {
    let Some(first) = maps.first() else {
        return Ok(true);
    };
    if maps.iter().any(|f| f.src() != first.src() || f.dst() != first.dst()) {
        return Err(Error::CarrierMismatch("family members have different spaces".into()));
    }
    Ok(maps.iter().all(SpaceMap::is_bornologous))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdealRecovery {
    /// `U = M[e]`.
    pub ideal: Vec<String>,
    pub flags: IdealFlags,
    /// Left structure of `U` is contained in the space.
    pub contained: bool,
    pub equal: bool,
    /// Which conclusion applies: `loop`, `monoid`, `group` or `magma`.
    pub case: &'static str,
}

/// Reads off the ideal `{E[e]}` of a space whose left shifts are equi-bornologous.
pub fn recover_ideal(space: &FiniteEntourageSpace, t: &MagmaTable) -> Result<IdealRecovery> {
    let e = t.require_identity()?;
    if !equi_bornologous(&shifts(t, space, Side::Left)?)? {
        return Err(Error::Hypothesis("left shifts are not equi-bornologous".into()));
    }
    let u = space.max_ent().row(e).clone();
    let flags = classify_ideal(t, &u)?;
    let left = side_structure(t, &u, Side::Left)?;
    let profile = classify_magma(t);
    let class = space.classify();
    let case = if profile.group && class.is_semi() && class.is_quasi() {
        "group"
    } else if profile.is_loop && profile.left_ip && profile.right_ip && profile.two_sided_inverses && class.is_semi() {
        "loop"
    } else if profile.associative && class.is_quasi() {
        "monoid"
    } else {
        "magma"
    };
    Ok(IdealRecovery {
        ideal: t.elements.labels_of(&u),
        flags,
        contained: left.max_ent().is_subset(space.max_ent()),
        equal: left == *space,
        case,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HomReport {
    /// `f(U_M) ⊆ U_N`.
    pub forward_ideal: bool,
    pub left_bornologous: bool,
    pub right_bornologous: bool,
    /// `f⁻¹(U_N) ⊆ U_M`; only decided between loops with inverse property.
    pub preimage_ideal: Option<bool>,
    pub left_effectively_proper: Option<bool>,
    /// `f(x)^λ = f(x^λ)` and `f(x)^ρ = f(x^ρ)`; only between loops.
    pub inverses_preserved: Option<bool>,
    pub image_subloop: Option<bool>,
    /// Image has two-sided inverses; decided when the domain has them.
    pub image_two_sided: Option<bool>,
}

/// Coarse profile of a homomorphism between side structures.
pub fn hom_profile(f: &[usize], tm: &MagmaTable, tn: &MagmaTable, um: &PointSet, un: &PointSet) -> Result<HomReport> {
    let em = require_unit_in(tm, um)?;
    let en = require_unit_in(tn, un)?;
    let (n, m) = (tm.size(), tn.size());
    if f.len() != n || f.iter().any(|&v| v >= m) {
        return Err(Error::Invalid("element map does not fit the magmas".into()));
    }
    let hom = f[em] == en && (0..n).all(|g| (0..n).all(|h| f[tm.mul(g, h)] == tn.mul(f[g], f[h])));
    if !hom {
        return Err(Error::Hypothesis("map is not a homomorphism".into()));
    }
    let image_u = PointSet::from_indices(m, um.iter().map(|g| f[g]));
    let borno = |side| -> Result<bool> {
        let s = side_structure(tm, um, side)?;
        let d = side_structure(tn, un, side)?;
        Ok(SpaceMap::new(s, d, f.to_vec())?.is_bornologous())
    };
    let pm = classify_magma(tm);
    let pn = classify_magma(tn);
    let ip = |p: &AlgebraProfile| p.is_loop && p.left_ip && p.right_ip;
    let (preimage_ideal, left_effectively_proper) = if ip(&pm) && ip(&pn) && pm.two_sided_inverses {
        let pre = PointSet::from_indices(n, (0..n).filter(|&g| un.contains(f[g])));
        let s = side_structure(tm, um, Side::Left)?;
        let d = side_structure(tn, un, Side::Left)?;
        (Some(pre.is_subset(um)), Some(SpaceMap::new(s, d, f.to_vec())?.is_effectively_proper()))
    } else {
        (None, None)
    };
    let (inverses_preserved, image_subloop, image_two_sided) = match (loop_inverses(tm), loop_inverses(tn)) {
        (Ok(im), Ok(inn)) => {
            let preserved = (0..n).all(|x| inn.lambda[f[x]] == f[im.lambda[x]] && inn.rho[f[x]] == f[im.rho[x]]);
            let img = PointSet::from_indices(m, f.iter().copied());
            let subloop = tn.product_set(&img, &img).is_subset(&img)
                && img.iter().all(|a| {
                    img.iter().all(|b| {
                        let x = (0..m).find(|&x| tn.mul(a, x) == b).expect("latin");
                        let y = (0..m).find(|&y| tn.mul(y, a) == b).expect("latin");
                        img.contains(x) && img.contains(y)
                    })
                });
            let two_sided = pm
                .two_sided_inverses
                .then(|| img.iter().all(|g| inn.lambda[g] == inn.rho[g]));
            (Some(preserved), Some(subloop), two_sided)
        }
        _ => (None, None, None),
    };
    Ok(HomReport {
        forward_ideal: image_u.is_subset(un),
        left_bornologous: borno(Side::Left)?,
        right_bornologous: borno(Side::Right)?,
        preimage_ideal,
        left_effectively_proper,
        inverses_preserved,
        image_subloop,
        image_two_sided,
    })
}

/// `ℤ_n` under addition, elements labelled `0..n`.
pub fn cyclic(n: usize) -> MagmaTable {
    let c = Carrier::numbered(n).expect("n ≥ 1").shared();
    MagmaTable::from_fn(&c, |a, b| (a + b) % n).expect("closed")
}

/// Symmetric group on three letters, `r` a 3-cycle and `s` a reflection.
pub fn s3() -> MagmaTable {
    // r^a s^b as permutations of {0,1,2}: i ↦ a + (-1)^b i
    let perm = |a: usize, b: usize| -> [usize; 3] {
        std::array::from_fn(|i| if b == 0 { (a + i) % 3 } else { (a + 3 - i) % 3 })
    };
    let elems: Vec<[usize; 3]> = [(0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (2, 1)]
        .iter()
        .map(|&(a, b)| perm(a, b))
        .collect();
    let c = Carrier::new(["e", "r", "r2", "s", "rs", "r2s"]).expect("distinct").shared();
    MagmaTable::from_fn(&c, |x, y| {
        let comp: [usize; 3] = std::array::from_fn(|i| elems[x][elems[y][i]]);
        elems.iter().position(|p| *p == comp).expect("closed")
    })
    .expect("closed")
}

/// `{e, a}` with `a·a = a`.
pub fn idempotent_monoid() -> MagmaTable {
    let c = Carrier::new(["e", "a"]).expect("distinct").shared();
    MagmaTable::from_fn(&c, |x, y| x.max(y)).expect("closed")
}

/// A nonassociative loop of order 5; it has neither inverse property.
pub fn loop5() -> MagmaTable {
    let c = Carrier::new(["e", "a", "b", "c", "d"]).expect("distinct").shared();
    let rows = [
        ["e", "a", "b", "c", "d"],
        ["a", "e", "c", "d", "b"],
        ["b", "d", "a", "e", "c"],
        ["c", "b", "d", "a", "e"],
        ["d", "c", "e", "b", "a"],
    ];
    let rows: Vec<Vec<&str>> = rows.iter().map(|r| r.to_vec()).collect();
    MagmaTable::from_rows(&c, &rows).expect("valid table")
}

/// Steiner loop of the affine plane over `ℤ₃`: `x·x = e`, and for distinct
/// points `x·y` is the third point on their line. Nonassociative with the
/// inverse property.
pub fn steiner10() -> MagmaTable {
    let pts: Vec<(usize, usize)> = (0..3).flat_map(|i| (0..3).map(move |j| (i, j))).collect();
    let labels = std::iter::once("e".to_string()).chain(pts.iter().map(|(i, j)| format!("{i}{j}")));
    let c = Carrier::new(labels).expect("distinct").shared();
    MagmaTable::from_fn(&c, |x, y| match (x, y) {
        (0, y) => y,
        (x, 0) => x,
        (x, y) if x == y => 0,
        (x, y) => {
            let (a, b) = (pts[x - 1], pts[y - 1]);
            let third = ((6 - a.0 - b.0) % 3, (6 - a.1 - b.1) % 3);
            1 + pts.iter().position(|&p| p == third).expect("in plane")
        }
    })
    .expect("closed")
}

/// The shipped tables, by name.
pub fn catalog() -> Vec<(&'static str, MagmaTable)> {
    vec![
        ("Z2", cyclic(2)),
        ("Z3", cyclic(3)),
        ("Z4", cyclic(4)),
        ("Z6", cyclic(6)),
        ("S3", s3()),
        ("idem2", idempotent_monoid()),
        ("loop5", loop5()),
        ("steiner10", steiner10()),
    ]
}

pub fn catalog_entry(name: &str) -> Option<MagmaTable> {
    catalog().into_iter().find(|(n, _)| *n == name).map(|(_, t)| t)
}
