//! Functors between the structure categories, the lattice of structures on a
//! carrier, and the categorical constructions.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::morphism::SpaceMap;
use crate::rel::{Carrier, Entourage, MAX_CARRIER};
use crate::space::{FiniteEntourageSpace, StructureClass};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum FunctorTag {
    /// Largest symmetric substructure, `M ∩ M⁻¹`.
    Sym,
    /// Smallest symmetric superstructure, `M ∪ M⁻¹`.
    USym,
    /// Smallest quasi-coarse superstructure, the transitive closure of `M`.
    W,
    /// `W ∘ USym`, the smallest coarse superstructure.
    WSemi,
    /// Inverse structure, `M⁻¹`.
    J,
}

impl FunctorTag {
    pub const ALL: [FunctorTag; 5] = [
        FunctorTag::Sym,
        FunctorTag::USym,
        FunctorTag::W,
        FunctorTag::WSemi,
        FunctorTag::J,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FunctorTag::Sym => "SYM",
            FunctorTag::USym => "USYM",
            FunctorTag::W => "W",
            FunctorTag::WSemi => "WSEMI",
            FunctorTag::J => "J",
        }
    }

    /// Case-insensitive.
    pub fn parse(s: &str) -> Option<FunctorTag> {
        FunctorTag::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
    }

    /// Class of the output given the class of the input.
    pub fn promised(self, input: StructureClass) -> StructureClass {
        use StructureClass::*;
        match self {
            FunctorTag::Sym => {
                if input.is_quasi() {
                    Coarse
                } else {
                    SemiCoarse
                }
            }
            FunctorTag::USym => {
                if input == Coarse {
                    Coarse
                } else {
                    SemiCoarse
                }
            }
            FunctorTag::W => {
                if input.is_semi() {
                    Coarse
                } else {
                    QuasiCoarse
                }
            }
            FunctorTag::WSemi => Coarse,
            FunctorTag::J => input,
        }
    }
}

impl fmt::Display for FunctorTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn apply_functor(tag: FunctorTag, space: &FiniteEntourageSpace) -> FiniteEntourageSpace {
    let m = space.max_ent();
    let out = match tag {
        FunctorTag::Sym => m.symmetric_part(),
        FunctorTag::USym => m.symmetric_closure(),
        FunctorTag::W => m.transitive_closure(),
        FunctorTag::WSemi => m.symmetric_closure().transitive_closure(),
        FunctorTag::J => m.inverse(),
    };
    FiniteEntourageSpace::principal(out)
}

/// Finest structure of class `class` whose largest entourage contains `m`.
pub fn close_to(class: StructureClass, m: &Entourage) -> Entourage {
    let m = m.with_diagonal();
    match class {
        StructureClass::Entourage => m,
        StructureClass::SemiCoarse => m.symmetric_closure(),
        StructureClass::QuasiCoarse => m.transitive_closure(),
        StructureClass::Coarse => m.symmetric_closure().transitive_closure(),
    }
}

pub fn meet(a: &FiniteEntourageSpace, b: &FiniteEntourageSpace) -> Result<FiniteEntourageSpace> {
    Ok(FiniteEntourageSpace::principal(a.max_ent().intersection(b.max_ent())?))
}

/// Finest structure of class `class` containing both inputs.
pub fn join(a: &FiniteEntourageSpace, b: &FiniteEntourageSpace, class: StructureClass) -> Result<FiniteEntourageSpace> {
    let u = a.max_ent().union(b.max_ent())?;
    Ok(FiniteEntourageSpace::principal(close_to(class, &u)))
}

/// Initial structure on `domain` for `f: domain → Y`: `M = (f×f)⁻¹(M_Y)`.
pub fn initial(domain: &Arc<Carrier>, f: &[usize], y: &FiniteEntourageSpace) -> Result<FiniteEntourageSpace> {
    if f.len() != domain.size() || f.iter().any(|&v| v >= y.size()) {
        return Err(Error::Invalid("function table does not fit domain and codomain".into()));
    }
    let m = Entourage::from_fn(domain, |a, b| y.max_ent().contains(f[a], f[b]));
    Ok(FiniteEntourageSpace::principal(m))
}

/// A limit or colimit together with its structure maps.
#[derive(Debug, Clone)]
pub struct Construction {
    pub space: FiniteEntourageSpace,
    /// Projections for a product, injections for a coproduct.
    pub maps: Vec<SpaceMap>,
}

fn ensure_nonempty(spaces: &[FiniteEntourageSpace]) -> Result<()> {
    if spaces.is_empty() {
        Err(Error::Invalid("construction needs at least one space".into()))
    } else {
        Ok(())
    }
}

/// Mixed-radix decoding of a product index, first factor most significant.
fn decode(mut code: usize, sizes: &[usize]) -> Vec<usize> {
    let mut out = vec![0; sizes.len()];
    for (slot, &s) in out.iter_mut().zip(sizes).rev() {
        *slot = code % s;
        code /= s;
    }
    out
}

pub fn product(spaces: &[FiniteEntourageSpace]) -> Result<Construction> {
    ensure_nonempty(spaces)?;
    let sizes: Vec<usize> = spaces.iter().map(FiniteEntourageSpace::size).collect();
    let total = sizes
        .iter()
        .try_fold(1usize, |acc, &s| acc.checked_mul(s).filter(|&t| t <= MAX_CARRIER))
        .ok_or(Error::SizeCap {
            what: "product carrier",
            size: sizes.iter().fold(1usize, |a, &s| a.saturating_mul(s)),
            limit: MAX_CARRIER,
        })?;
    let coords: Vec<Vec<usize>> = (0..total).map(|c| decode(c, &sizes)).collect();
    let labels = coords.iter().map(|cs| {
        let parts: Vec<&str> = cs.iter().zip(spaces).map(|(&i, s)| s.carrier().label(i)).collect();
        format!("({})", parts.join(","))
    });
    let carrier = Carrier::new(labels)?.shared();
    let m = Entourage::from_fn(&carrier, |a, b| {
        spaces
            .iter()
            .enumerate()
            .all(|(k, s)| s.max_ent().contains(coords[a][k], coords[b][k]))
    });
    let space = FiniteEntourageSpace::principal(m);
    let maps = spaces
        .iter()
        .enumerate()
        .map(|(k, s)| SpaceMap::new(space.clone(), s.clone(), coords.iter().map(|c| c[k]).collect()))
        .collect::<Result<Vec<_>>>()?;
    Ok(Construction { space, maps })
}

pub fn coproduct(spaces: &[FiniteEntourageSpace]) -> Result<Construction> {
    ensure_nonempty(spaces)?;
    let total: usize = spaces.iter().map(FiniteEntourageSpace::size).sum();
    if total > MAX_CARRIER {
        return Err(Error::SizeCap {
            what: "coproduct carrier",
            size: total,
            limit: MAX_CARRIER,
        });
    }
    let mut offsets = Vec::with_capacity(spaces.len());
    let mut labels = Vec::with_capacity(total);
    for (k, s) in spaces.iter().enumerate() {
        offsets.push(labels.len());
        labels.extend(s.carrier().labels().iter().map(|l| format!("{k}:{l}")));
    }
    let carrier = Carrier::new(labels)?.shared();
    let mut m = Entourage::diagonal(&carrier);
    for (s, &off) in spaces.iter().zip(&offsets) {
        for (x, y) in s.max_ent().pairs() {
            m.insert(off + x, off + y);
        }
    }
    let space = FiniteEntourageSpace::principal(m);
    let maps = spaces
        .iter()
        .zip(&offsets)
        .map(|(s, &off)| SpaceMap::new(s.clone(), space.clone(), (off..off + s.size()).collect()))
        .collect::<Result<Vec<_>>>()?;
    Ok(Construction { space, maps })
}

/// A surjection `q: X → Y` onto a labelled codomain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Surjection {
    codomain: Arc<Carrier>,
    table: Vec<usize>,
}

impl Surjection {
    pub fn new(codomain: Arc<Carrier>, table: Vec<usize>) -> Result<Self> {
        let mut hit = vec![false; codomain.size()];
        for &y in &table {
            *hit
                .get_mut(y)
                .ok_or_else(|| Error::Invalid(format!("quotient index {y} out of range")))? = true;
        }
        if let Some(miss) = hit.iter().position(|h| !h) {
            return Err(Error::Invalid(format!(
                "quotient map is not surjective: `{}` has no preimage",
                codomain.label(miss)
            )));
        }
        Ok(Surjection { codomain, table })
    }

    /// Quotient onto the blocks of a partition of `domain`, given as label
    /// lists. Each block is labelled by its members joined with `+`, and
    /// blocks are ordered by least member.
    pub fn from_blocks<S: AsRef<str>>(domain: &Arc<Carrier>, blocks: &[Vec<S>]) -> Result<Self> {
        let mut table = vec![usize::MAX; domain.size()];
        let mut members: Vec<Vec<usize>> = Vec::with_capacity(blocks.len());
        for block in blocks {
            if block.is_empty() {
                return Err(Error::Invalid("empty block in partition".into()));
            }
            let mut idx = block
                .iter()
                .map(|l| domain.index_of(l.as_ref()))
                .collect::<Result<Vec<_>>>()?;
            idx.sort_unstable();
            members.push(idx);
        }
        members.sort();
        for (b, idx) in members.iter().enumerate() {
            for &i in idx {
                if table[i] != usize::MAX {
                    return Err(Error::Invalid(format!("point `{}` in two blocks", domain.label(i))));
                }
                table[i] = b;
            }
        }
        if let Some(miss) = table.iter().position(|&t| t == usize::MAX) {
            return Err(Error::Invalid(format!("point `{}` in no block", domain.label(miss))));
        }
        let labels = members.iter().map(|idx| {
            idx.iter().map(|&i| domain.label(i)).collect::<Vec<_>>().join("+")
        });
        Surjection::new(Carrier::new(labels)?.shared(), table)
    }

    pub fn codomain(&self) -> &Arc<Carrier> {
        &self.codomain
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    fn check_domain(&self, space: &FiniteEntourageSpace) -> Result<()> {
        if self.table.len() != space.size() {
            return Err(Error::CarrierMismatch("quotient map domain differs from carrier".into()));
        }
        Ok(())
    }

    /// `R_q = {(x,y) | q(x) = q(y)}`.
    pub fn kernel(&self, domain: &Arc<Carrier>) -> Entourage {
        Entourage::from_fn(domain, |a, b| self.table[a] == self.table[b])
    }
}

/// Quotient structure through `q`, closed up to the requested class.
pub fn quotient(space: &FiniteEntourageSpace, q: &Surjection, class: StructureClass) -> Result<FiniteEntourageSpace> {
    q.check_domain(space)?;
    let mut m = Entourage::empty(&q.codomain);
    for (x, y) in space.max_ent().pairs() {
        m.insert(q.table[x], q.table[y]);
    }
    Ok(FiniteEntourageSpace::principal(close_to(class, &m)))
}

/// `M∘R_q∘M ⊆ R_q∘M∘R_q`.
pub fn is_weakly_soft(space: &FiniteEntourageSpace, q: &Surjection) -> Result<bool> {
    q.check_domain(space)?;
    let m = space.max_ent();
    let r = q.kernel(space.carrier());
    let lhs = m.compose(&r)?.compose(m)?;
    let rhs = r.compose(m)?.compose(&r)?;
    Ok(lhs.is_subset(&rhs))
}
