//! Extended semi-positive-definite maps and the structures they induce.
//!
//! A weight assigns every ordered pair a non-negative rational or `∞`, with
//! zero on the diagonal. Balls are closed: `B(x,R) = {y | d(x,y) ≤ R}`.

use std::fmt;
use std::ops::Add;
use std::str::FromStr;
use std::sync::Arc;

use num_rational::Rational64;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rel::{check_same, Carrier, Entourage, MAX_CARRIER};
use crate::space::FiniteEntourageSpace;

/// A non-negative rational or `∞`; `∞` absorbs addition and exceeds every finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Weight {
    Finite(Rational64),
    Infinite,
}

impl Weight {
    pub const ZERO: Weight = Weight::Finite(Rational64::new_raw(0, 1));

    pub fn int(n: i64) -> Weight {
        Weight::Finite(Rational64::from_integer(n))
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Weight::Finite(_))
    }

    pub fn finite(self) -> Option<Rational64> {
        match self {
            Weight::Finite(r) => Some(r),
            Weight::Infinite => None,
        }
    }

    pub fn le_radius(self, r: Rational64) -> bool {
        matches!(self, Weight::Finite(v) if v <= r)
    }
}

impl Add for Weight {
    type Output = Weight;

    fn add(self, rhs: Weight) -> Weight {
        match (self, rhs) {
            (Weight::Finite(a), Weight::Finite(b)) => Weight::Finite(a + b),
            _ => Weight::Infinite,
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Weight::Finite(r) => write!(f, "{r}"),
            Weight::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for Weight {
    type Err = Error;

    /// Accepts `inf`, integers and `p/q` fractions.
    fn from_str(s: &str) -> Result<Weight> {
        if s == "inf" {
            return Ok(Weight::Infinite);
        }
        let r = Rational64::from_str(s).map_err(|_| Error::Invalid(format!("bad weight value `{s}`")))?;
        if r.is_negative() {
            return Err(Error::Invalid(format!("negative weight `{s}`")));
        }
        Ok(Weight::Finite(r))
    }
}

impl Serialize for Weight {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_str(self)
    }
}

/// A weight on a finite carrier, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct WeightTable {
    carrier: Arc<Carrier>,
    d: Vec<Weight>,
}

impl fmt::Debug for WeightTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.size();
        let rows: Vec<Vec<String>> = (0..n)
            .map(|x| (0..n).map(|y| self.get(x, y).to_string()).collect())
            .collect();
        f.debug_struct("WeightTable")
            .field("points", &self.carrier.labels())
            .field("d", &rows)
            .finish()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WeightFlags {
    pub symmetric: bool,
    pub triangle: bool,
    pub separated: bool,
    pub extended: bool,
}

impl WeightFlags {
    /// Conventional name, e.g. `extended quasi-pseudometric`.
    pub fn name(&self) -> String {
        let base = match (self.symmetric, self.triangle) {
            (true, true) => "metric",
            (true, false) => "semi-metric",
            (false, true) => "quasi-metric",
            (false, false) => "semi-positive-definite map",
        };
        let base = if self.separated || base.ends_with("map") {
            base.to_string()
        } else {
            match base.split_once('-') {
                Some((pre, rest)) => format!("{pre}-pseudo{rest}"),
                None => format!("pseudo{base}"),
            }
        };
        if self.extended {
            format!("extended {base}")
        } else {
            base
        }
    }
}

impl WeightTable {
    pub fn new(carrier: &Arc<Carrier>, d: Vec<Weight>) -> Result<Self> {
        let n = carrier.size();
        if d.len() != n * n {
            return Err(Error::Invalid(format!("weight table needs {} entries, got {}", n * n, d.len())));
        }
        for (i, w) in d.iter().enumerate() {
            if let Weight::Finite(r) = w {
                if r.is_negative() {
                    return Err(Error::Invalid("negative weight".into()));
                }
            }
            if i / n == i % n && *w != Weight::ZERO {
                return Err(Error::Invalid(format!(
                    "d({0},{0}) must be 0",
                    carrier.label(i / n)
                )));
            }
        }
        Ok(WeightTable {
            carrier: carrier.clone(),
            d,
        })
    }

    pub fn from_fn(carrier: &Arc<Carrier>, mut f: impl FnMut(usize, usize) -> Weight) -> Result<Self> {
        let n = carrier.size();
        let d = (0..n * n).map(|i| f(i / n, i % n)).collect();
        WeightTable::new(carrier, d)
    }

    pub fn carrier(&self) -> &Arc<Carrier> {
        &self.carrier
    }

    pub fn size(&self) -> usize {
        self.carrier.size()
    }

    pub fn get(&self, x: usize, y: usize) -> Weight {
        self.d[x * self.size() + y]
    }

    /// Distinct finite values in increasing order; always starts with 0.
    pub fn finite_values(&self) -> Vec<Rational64> {
        let mut v: Vec<Rational64> = self.d.iter().filter_map(|w| w.finite()).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Largest value over all pairs, `∞` if any pair is at infinite distance.
    pub fn diameter(&self) -> Weight {
        self.d.iter().copied().max().unwrap_or(Weight::ZERO)
    }
}

/// Symmetry, triangle inequality, separation and extendedness, by full scans.
pub fn classify_weight(w: &WeightTable) -> WeightFlags {
    let n = w.size();
    let symmetric = (0..n).all(|x| (0..x).all(|y| w.get(x, y) == w.get(y, x)));
    let triangle = (0..n).all(|x| (0..n).all(|z| (0..n).all(|y| w.get(x, y) <= w.get(x, z) + w.get(z, y))));
    let separated = (0..n).all(|x| (0..n).all(|y| x == y || w.get(x, y) != Weight::ZERO));
    let extended = w.d.contains(&Weight::Infinite);
    WeightFlags {
        symmetric,
        triangle,
        separated,
        extended,
    }
}

/// An increasing sequence `Δ = F_0 ⊆ F_1 ⊆ … ⊆ F_k`; balls are `B(x,n) = F_n[x]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    levels: Vec<Entourage>,
}

impl Chain {
    pub fn new(levels: Vec<Entourage>) -> Result<Self> {
        let first = levels
            .first()
            .ok_or_else(|| Error::Invalid("chain needs at least one level".into()))?;
        if *first != Entourage::diagonal(first.carrier()) {
            return Err(Error::Invalid("chain must start at the diagonal".into()));
        }
        for pair in levels.windows(2) {
            check_same(pair[0].carrier(), pair[1].carrier(), "chain levels on different carriers")?;
            if !pair[0].is_subset(&pair[1]) {
                return Err(Error::Invalid("chain levels must increase".into()));
            }
        }
        Ok(Chain { levels })
    }

    pub fn levels(&self) -> &[Entourage] {
        &self.levels
    }

    pub fn top(&self) -> &Entourage {
        self.levels.last().expect("non-empty")
    }

    pub fn carrier(&self) -> &Arc<Carrier> {
        self.levels[0].carrier()
    }
}

/// `E_R = {(x,y) | d(x,y) ≤ R}`.
pub fn ball_entourage(w: &WeightTable, r: Rational64) -> Entourage {
    Entourage::from_fn(&w.carrier, |x, y| w.get(x, y).le_radius(r))
}

/// The structure of a weight with its ball chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightStructure {
    pub space: FiniteEntourageSpace,
    /// `Δ` followed by `E_R` for each distinct finite value `R`, with repeats removed.
    pub chain: Chain,
    /// Distinct finite values of the weight, increasing.
    pub radii: Vec<Rational64>,
}

pub fn structure_from_weight(w: &WeightTable) -> WeightStructure {
    let radii = w.finite_values();
    let mut levels = vec![Entourage::diagonal(&w.carrier)];
    for &r in &radii {
        let e = ball_entourage(w, r);
        if levels.last() != Some(&e) {
            levels.push(e);
        }
    }
    let top = levels.last().expect("non-empty").clone();
    WeightStructure {
        space: FiniteEntourageSpace::principal(top),
        chain: Chain::new(levels).expect("balls grow with the radius"),
        radii,
    }
}

/// `d(x,y) = min{n | y ∈ F_n[x]}`, or `∞` when no level contains the pair.
pub fn weight_from_chain(c: &Chain) -> WeightTable {
    WeightTable::from_fn(c.carrier(), |x, y| {
        c.levels
            .iter()
            .position(|f| f.contains(x, y))
            .map_or(Weight::Infinite, |n| Weight::int(n as i64))
    })
    .expect("level 0 is the diagonal")
}

/// `(Δ, M)` for a quasi-coarse space; `F_m∘F_n ⊆ F_{m+n}` holds because `M` is transitive.
pub fn subadditive_chain(space: &FiniteEntourageSpace) -> Result<Chain> {
    if !space.classify().is_quasi() {
        return Err(Error::Hypothesis("space is not quasi-coarse".into()));
    }
    Chain::new(vec![Entourage::diagonal(space.carrier()), space.max_ent().clone()])
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainFlags {
    pub weakly_upper_multiplicative: bool,
    pub upper_multiplicative: bool,
    pub upper_symmetric: bool,
    /// For each level `r`, the least `r'` with `F_r⁻¹ ⊆ F_{r'}`, if any.
    pub inverse_radius: Vec<Option<usize>>,
}

impl ChainFlags {
    pub fn kind(&self) -> &'static str {
        let semi = self.weakly_upper_multiplicative && self.upper_symmetric;
        match (semi, self.upper_multiplicative) {
            (true, true) => "ballean",
            (true, false) => "semi-ballean",
            (false, true) => "quasi-ballean",
            (false, false) => "ball structure",
        }
    }
}

/// Ball-structure predicates with radii ranging over the chain's levels.
pub fn classify_chain(c: &Chain) -> ChainFlags {
    let f = &c.levels;
    let k = f.len();
    let weakly_upper_multiplicative = (0..k).all(|r| {
        (0..k).all(|s| {
            (0..k).any(|t| f[r].union(&f[s]).expect("same carrier").is_subset(&f[t]))
        })
    });
    let upper_multiplicative = (0..k).all(|r| {
        (0..k).all(|s| {
            let rs = f[r].compose(&f[s]).expect("same carrier");
            (0..k).any(|t| rs.is_subset(&f[t]))
        })
    });
    let inverses: Vec<Entourage> = f.iter().map(Entourage::inverse).collect();
    let inverse_radius: Vec<Option<usize>> = (0..k)
        .map(|r| (0..k).find(|&t| inverses[r].is_subset(&f[t])))
        .collect();
    let covered_by_inverse = (0..k).all(|s| (0..k).any(|t| f[s].is_subset(&inverses[t])));
    let upper_symmetric = inverse_radius.iter().all(Option::is_some) && covered_by_inverse;
    debug_assert!(!upper_multiplicative || weakly_upper_multiplicative);
    ChainFlags {
        weakly_upper_multiplicative,
        upper_multiplicative,
        upper_symmetric,
        inverse_radius,
    }
}

/// Builtin weights on windows of ℤ or ℤ².
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    /// `n-m` forward, `2(m-n)` backward.
    QuasiSymZ,
    /// `|x-y| + y³ - x³` when `y ≥ x`, else `|x-y|`.
    CubicSkew,
    /// `min{m,n}` off the diagonal; defined on ℕ.
    MinSemi,
    /// `0` when `n > m`, else `m-n`; defined on ℕ.
    DropQuasi,
    /// Axis-parallel distance on ℤ², `∞` off the axes.
    ZsqSemi,
    /// Horizontal distance on ℤ², `∞` across rows.
    ZsqD1,
    /// Vertical distance on ℤ², `∞` across columns.
    ZsqD2,
    Euclidean,
    /// `1` off the diagonal.
    Unit,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 9] = [
        FamilyKind::QuasiSymZ,
        FamilyKind::CubicSkew,
        FamilyKind::MinSemi,
        FamilyKind::DropQuasi,
        FamilyKind::ZsqSemi,
        FamilyKind::ZsqD1,
        FamilyKind::ZsqD2,
        FamilyKind::Euclidean,
        FamilyKind::Unit,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::QuasiSymZ => "quasi_sym_Z",
            FamilyKind::CubicSkew => "cubic_skew",
            FamilyKind::MinSemi => "min_semi",
            FamilyKind::DropQuasi => "drop_quasi",
            FamilyKind::ZsqSemi => "zsq_semi",
            FamilyKind::ZsqD1 => "zsq_d1",
            FamilyKind::ZsqD2 => "zsq_d2",
            FamilyKind::Euclidean => "euclidean",
            FamilyKind::Unit => "unit",
        }
    }

    pub fn parse(s: &str) -> Option<FamilyKind> {
        FamilyKind::ALL.into_iter().find(|k| k.name() == s)
    }

    fn planar(self) -> bool {
        matches!(self, FamilyKind::ZsqSemi | FamilyKind::ZsqD1 | FamilyKind::ZsqD2)
    }

    fn natural(self) -> bool {
        matches!(self, FamilyKind::MinSemi | FamilyKind::DropQuasi)
    }
}

/// A builtin weight restricted to a window `[lo, hi]` (squared for ℤ² families).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WeightFamily {
    pub kind: FamilyKind,
    pub lo: i64,
    pub hi: i64,
}

/// A window point: one coordinate on ℤ, two on ℤ².
pub type Point = Vec<i64>;

pub fn point_label(p: &[i64]) -> String {
    match p {
        [x] => x.to_string(),
        _ => format!("({})", p.iter().map(i64::to_string).collect::<Vec<_>>().join(",")),
    }
}

fn checked(v: Option<i64>) -> Weight {
    v.map_or(Weight::Infinite, Weight::int)
}

impl WeightFamily {
    pub fn new(kind: FamilyKind, lo: i64, hi: i64) -> Result<Self> {
        if lo > hi {
            return Err(Error::Invalid(format!("empty window {lo}:{hi}")));
        }
        if kind.natural() && lo < 0 {
            return Err(Error::Invalid(format!("{} is defined on non-negative integers only", kind.name())));
        }
        let side = (hi - lo + 1) as u128;
        let points = if kind.planar() { side * side } else { side };
        if points > MAX_CARRIER as u128 {
            return Err(Error::SizeCap {
                what: "window points",
                size: points.min(usize::MAX as u128) as usize,
                limit: MAX_CARRIER,
            });
        }
        Ok(WeightFamily { kind, lo, hi })
    }

    pub fn points(&self) -> Vec<Point> {
        if self.kind.planar() {
            (self.lo..=self.hi)
                .flat_map(|x| (self.lo..=self.hi).map(move |y| vec![x, y]))
                .collect()
        } else {
            (self.lo..=self.hi).map(|x| vec![x]).collect()
        }
    }

    /// The formula at a pair of points; `∞` also signals arithmetic overflow.
    pub fn eval(&self, a: &[i64], b: &[i64]) -> Weight {
        if a == b {
            return Weight::ZERO;
        }
        match self.kind {
            FamilyKind::QuasiSymZ => {
                let (m, n) = (a[0], b[0]);
                checked(if m <= n { n.checked_sub(m) } else { m.checked_sub(n).and_then(|v| v.checked_mul(2)) })
            }
            FamilyKind::CubicSkew => {
                let (x, y) = (a[0], b[0]);
                let dist = (x - y).checked_abs();
                if y >= x {
                    let cube = |v: i64| v.checked_pow(3);
                    checked((|| dist?.checked_add(cube(y)?.checked_sub(cube(x)?)?))())
                } else {
                    checked(dist)
                }
            }
            FamilyKind::MinSemi => Weight::int(a[0].min(b[0])),
            FamilyKind::DropQuasi => {
                if b[0] > a[0] {
                    Weight::ZERO
                } else {
                    Weight::int(a[0] - b[0])
                }
            }
            FamilyKind::ZsqSemi => {
                if a[1] == b[1] {
                    Weight::int((a[0] - b[0]).abs())
                } else if a[0] == b[0] {
                    Weight::int((a[1] - b[1]).abs())
                } else {
                    Weight::Infinite
                }
            }
            FamilyKind::ZsqD1 => {
                if a[1] == b[1] {
                    Weight::int((a[0] - b[0]).abs())
                } else {
                    Weight::Infinite
                }
            }
            FamilyKind::ZsqD2 => {
                if a[0] == b[0] {
                    Weight::int((a[1] - b[1]).abs())
                } else {
                    Weight::Infinite
                }
            }
            FamilyKind::Euclidean => checked((a[0] - b[0]).checked_abs()),
            FamilyKind::Unit => Weight::int(1),
        }
    }

    pub fn table(&self) -> Result<WeightTable> {
        let pts = self.points();
        let carrier = Carrier::new(pts.iter().map(|p| point_label(p)))?.shared();
        WeightTable::from_fn(&carrier, |x, y| self.eval(&pts[x], &pts[y]))
    }
}

/// Outcome of a bounded probe.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Verdict {
    /// The property holds on the window with the reported bound.
    HoldsUpToBound { bound: Weight },
    /// `(x, y)` is within the radius but `d(y, x)` exceeds the bound.
    Counterexample {
        x: Point,
        y: Point,
        forward: Weight,
        inverse: Weight,
    },
}

/// Searches the window for the least `S ≤ s_max` with `E_R⁻¹ ⊆ E_S`.
///
/// On failure reports the lexicographically least pair `(x,y)` with
/// `d(x,y) ≤ R` and `d(y,x) > s_max`.
pub fn probe_inverse_bound(fam: &WeightFamily, r: Rational64, s_max: Rational64) -> Result<Verdict> {
    if r.is_negative() || s_max < r {
        return Err(Error::Invalid("probe needs 0 ≤ R ≤ S_max".into()));
    }
    let pts = fam.points();
    if pts.len() < 2 {
        return Err(Error::Invalid("window must contain at least two points".into()));
    }
    let mut need = Rational64::zero();
    for x in &pts {
        for y in &pts {
            let fwd = fam.eval(x, y);
            if !fwd.le_radius(r) {
                continue;
            }
            let inv = fam.eval(y, x);
            match inv {
                Weight::Finite(v) if v <= s_max => need = need.max(v),
                _ => {
                    return Ok(Verdict::Counterexample {
                        x: x.clone(),
                        y: y.clone(),
                        forward: fwd,
                        inverse: inv,
                    });
                }
            }
        }
    }
    Ok(Verdict::HoldsUpToBound {
        bound: Weight::Finite(need),
    })
}

/// One row of the B3 radius table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RadiusRow {
    pub lo: i64,
    pub hi: i64,
    /// Least `R` with `X_w × X_w ⊆ E_R`, i.e. the diameter of the window.
    pub radius: Weight,
}

pub fn probe_b3_radius(kind: FamilyKind, windows: &[(i64, i64)]) -> Result<Vec<RadiusRow>> {
    if windows.windows(2).any(|w| w[1].1 - w[1].0 < w[0].1 - w[0].0) {
        return Err(Error::Invalid("windows must be given in ascending size".into()));
    }
    windows
        .iter()
        .map(|&(lo, hi)| {
            let fam = WeightFamily::new(kind, lo, hi)?;
            let pts = fam.points();
            let radius = pts
                .iter()
                .flat_map(|x| pts.iter().map(move |y| (x, y)))
                .map(|(x, y)| fam.eval(x, y))
                .max()
                .unwrap_or(Weight::ZERO);
            Ok(RadiusRow { lo, hi, radius })
        })
        .collect()
}
