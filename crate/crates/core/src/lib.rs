//! Quantale-valued norms on sets, metric spaces, distributors and
//! categories, with exact finite checks of normed colimits and Banach-style
//! fixed points.

pub mod banach;
pub mod cauchy;
pub mod cli;
pub mod dist;
pub mod enumerate;
pub mod io;
pub mod normed_cat;
pub mod normed_sets;
pub mod quantale;
pub mod snvec;
pub mod report;
pub mod vcat;

pub use quantale::{AnyQuantale, AnyValue, Boolean2, ExtReal, FiniteQuantale, LawverePlus, LawvereTimes, Quantale};
pub use report::{Check, Status, ValidationReport};
