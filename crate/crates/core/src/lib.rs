//! Effective infinite Eulerian paths on oracle-presented multigraphs.
//!
//! A graph is given by a [`GraphOracle`]: decidable vertex and edge index
//! sets, an incidence lookup and a degree function into ℕ∪{∞}. On top of
//! that the crate offers
//!
//! * finite multigraph machinery ([`finite`]): induced subgraphs, components,
//!   Hierholzer construction and a brute-force cross-check,
//! * the decision procedures ([`deciders`]) telling whether a finite path
//!   extends to a one-way or two-way infinite Eulerian path, built from
//!   resumable semideciders run side by side,
//! * streaming generators ([`stream`]) that emit such infinite paths edge by
//!   edge,
//! * property harnesses ([`verify`]) and the `infeuler` command line ([`cli`]).

pub mod cli;
pub mod deciders;
pub mod error;
pub mod finite;
pub mod oracle;
pub mod path;
mod search;
pub mod stream;
pub mod types;
pub mod verify;

pub use deciders::{
    connectivity_decider_one_end, finite_component_semidecider, incident_survivors, is_bi_extensible, is_distinguished,
    is_right_extensible, Budget, Decider, DistinguishedQuery, StepBudgetOutcome, Verdict,
};
pub use error::{Error, PathError, Result};
pub use finite::{brute_force_euler, eulerian_finite, FiniteMultigraph, Infeasible};
pub use oracle::{ball, families, load_presentation, Ball, Conditions, GraphDescription, GraphOracle, Metadata};
pub use path::FinitePath;
pub use stream::{one_way_stream, two_way_stream, Emitted, EulerStream, Mode, Side};
pub use types::{Degree, EdgeId, EdgeSet, Incidence, VertexId};
