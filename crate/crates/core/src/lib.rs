//! Weak degeneracy of graphs.
//!
//! The crate implements the DelSave game, exhaustive search for small
//! graphs, and a constructive procedure that emits a checkable witness of
//! weak 4-degeneracy for every plane graph.
pub mod coloring;
pub mod delsave;
pub mod exact;
pub mod format;
pub mod gen;
pub mod graph;
pub mod plane;
pub mod selfcheck;
pub mod witness;

pub use coloring::{Coloring, ListAssignment};
pub use delsave::{ChargeFn, Move, MoveError, Position, Trace, VerifyError, Witness};
pub use format::FormatError;
pub use gen::{Family, GenSpec, SplitMix64};
pub use graph::{GraphError, SimpleGraph, VertexId};
pub use plane::{Boundary, Dart, EmbedError, PlaneGraph, SeparatingPath};
pub use witness::{make_instance, witness, witness_planar_4, Instance, RuleId};
