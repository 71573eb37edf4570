//! Span categories of finite G-sets and their fused quotients, the Mackey
//! algebra and the fused Mackey algebra with explicit bases and structure
//! constants, and fusion of Mackey functors presented as modules.
//!
//! Everything is exact and exhaustive: groups are Cayley tables, G-sets are
//! permutation tables, and quotients of free abelian groups go through Smith
//! normal form over arbitrary-precision integers.

pub mod algebra;
mod bitset;
pub mod error;
pub mod fused;
pub mod functor;
pub mod fused_algebra;
pub mod group;
pub mod gset;
pub mod parse;
pub mod span;
pub mod verify;
pub mod zlattice;

pub use error::{Error, Result};
pub use group::{Elem, FiniteGroup, Subgroup, SubgroupClass, SubgroupId};
pub use gset::{GMap, GSet, Omega};
pub use span::{BurnsideElement, SpanClass};
pub use fused::{FusedElement, FusedHom, FusedSpanClass};
pub use algebra::{AlgebraData, AlgebraElement, TWIndex};
pub use fused_algebra::{FusedAlgebraData, FusedTWIndex};
pub use functor::{MackeyModule, Mat};
