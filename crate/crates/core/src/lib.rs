//! Finite entourage spaces: relation algebra, structure classes, morphisms,
//! functors, weights, graphs, magma structures and hyperstructures.
//!
//! Every finite structure is principal, so a space is stored as its maximum
//! entourage `M` and all predicates are decided on `M`.

pub mod algebra;
pub mod enumerate;
pub mod error;
pub mod format;
pub mod functor;
pub mod graph;
pub mod hyper;
pub mod morphism;
pub mod rel;
pub mod space;
pub mod weight;

pub use algebra::{MagmaTable, Side};
pub use error::{Error, Result};
pub use format::{FormatError, Workspace};
pub use functor::{FunctorTag, Surjection};
pub use graph::DiGraph;
pub use hyper::PowersetCarrier;
pub use morphism::{Closeness, EquivalenceVerdict, SpaceMap};
pub use rel::{Carrier, Entourage, PointSet};
pub use space::{FiniteEntourageSpace, StructureClass};
pub use weight::{FamilyKind, Verdict, Weight, WeightFamily, WeightTable};
