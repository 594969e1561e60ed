//! Exact linear algebra over ℚ and ℤ.

pub mod basis;
pub mod functor;
pub mod intmatrix;
pub mod matrix;
pub mod rational;

pub use basis::{binomial, BasisIndex};
pub use functor::{exterior_power_map, tensor_power_map};
pub use intmatrix::{IntMatrix, Smith};
pub use matrix::{RankKernelImage, RatMatrix, SpanSolver, Subquotient};
pub use rational::{format_rat, parse_rat, rat, ratio, Rat};
