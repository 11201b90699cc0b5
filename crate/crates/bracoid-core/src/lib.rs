//! Finite skew bracoids, braces, and their exhaustive verification.
//!
//! A *skew left bracoid* is a tuple `(G, ·, N, ⋆, ⊙)` where `(G, ·)` and
//! `(N, ⋆)` are groups and `⊙` is a transitive left action of `G` on the set
//! `N` that twists the `⋆`-product:
//!
//! ```text
//! g ⊙ (μ ⋆ η) = (g ⊙ μ) ⋆ (g ⊙ e_N)⁻¹ ⋆ (g ⊙ η)
//! ```
//!
//! Everything in this crate is finite and fully tabulated: groups are Cayley
//! tables, actions are lookup tables, and every axiom or identity is decided
//! by exhaustive scan — no sampling, no symbolic shortcuts. That keeps the
//! checkers trivially trustworthy and makes counterexamples concrete: a
//! failed check always carries the first offending tuple in canonical
//! element names.
//!
//! Structure:
//!
//! ```text
//! group      Cayley-table groups, presented families, automorphism search
//! action     validated left/right action tables, orbits, transitivity
//! report     check reports and theorem verdicts shared by all checkers
//! bracoid    skew left/right bracoids, skew braces, γ/δ/α/β maps, identity suites
//! two_sided  two-sided bracoids, structure theorems, radical-ring checks
//! family     the parametric dihedral example family and brace seeds
//! enumerate  brute-force enumeration of bracoid and brace structures
//! ```
//!
//! The crate is `no_std` (with `alloc`); IO and file formats live in the
//! companion CLI crate.

#![cfg_attr(not(test), no_std)]
// Exhaustive table scans index by element throughout, because the indices
// double as witness coordinates; rewriting them as iterator chains would
// obscure which tuple failed.
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod action;
pub mod bracoid;
pub mod enumerate;
pub mod family;
pub mod group;
pub mod report;
pub mod two_sided;

pub use action::{ActionError, LeftActionTable, RightActionTable};
pub use bracoid::{BracoidError, NMap, SkewBrace, SkewLeftBracoid, SkewRightBracoid};
pub use enumerate::{Caps, Enumeration, EnumerateError};
pub use family::{FamilyError, FamilyParams};
pub use group::{FiniteGroup, GroupError, GroupMap};
pub use report::{CheckReport, CheckStatus, PropertyCheck, TheoremVerdict, VerdictFlag};
pub use two_sided::{TwoSidedError, TwoSidedSkewBracoid};
