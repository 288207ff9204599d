//! Asymmetric Boolean logic with IAND (`a @ b`, a and not b) and IMPLY
//! (`a -> b`, not a or b).
//!
//! Expressions are parsed with [`parse`], evaluated into truth tables, checked
//! against a catalog of rewrite laws, put into canonical sum-of-IAND (SOI) and
//! NAND-of-IMPLY (NOI) forms, minimized, and compiled to memristor IMPLY
//! programs or spin-diode OR/IAND netlists.
//!
//! ```
//! use asymlogic::{parse, truth_table};
//!
//! let t = truth_table(&parse("A @ B").unwrap(), None).unwrap();
//! assert_eq!(t.bit_string(), "0010");
//! ```

pub mod canon;
pub mod cli;
pub mod expr;
pub mod laws;
pub mod memristor;
pub mod minimize;
pub mod semantics;
pub mod spindiode;
pub mod syntax;

pub use expr::{Expr, VarId};
pub use semantics::{equivalent, eval, truth_table, Assignment, TruthTable, Verdict};
pub use syntax::{format, parse};
