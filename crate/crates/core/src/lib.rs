//! Exact computation of low-degree homotopy groups of suspended
//! Eilenberg-MacLane spaces `Sigma^k K(A,1)` for finitely generated abelian `A`.

pub mod error;
pub mod functor;
pub mod group;
pub mod homology;
pub mod homotopy;
pub mod matrix;
pub mod parse;
pub mod presentation;
pub mod space;
pub mod verify;

pub use error::{Error, Result};
pub use group::{FgAbGroup, GroupOrder};
pub use presentation::{AbMap, AbPresentation};
