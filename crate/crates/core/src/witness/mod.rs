//! Constructive witnesses of weak degeneracy for plane graphs.

mod engine;
mod instance;

pub use engine::{witness, witness_planar_4, EngineError, EngineOutput, RuleFiring, RuleId};
pub use instance::{make_instance, Instance, InstanceError};
