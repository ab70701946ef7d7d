//! Vacillating tableaux, orthogonal Littlewood-Richardson tableaux, and the
//! descent-preserving bijection between them.

pub mod crystal;
pub mod descent;
pub mod error;
pub mod partition;
pub mod tableau;
pub mod verify;
pub mod word;

pub use descent::{DescentMultiset, DescentSet};
pub mod arcs;
pub mod bijection;
pub mod lr;
pub use error::{LrError, PipelineError, ValidationError};
pub use partition::Partition;
pub use tableau::StandardYoungTableau;
pub use word::{Letter, VacillatingWord};
