//! Succinct binary trees built on balanced-parenthesis ordinal trees.
//!
//! A binary tree with `n` nodes is mapped to an ordinal tree with `n + 1`
//! nodes (one dummy root) by one of four symmetric transformations
//! ([`Variant::T1`] .. [`Variant::T4`]). The ordinal tree is stored as a
//! `2(n + 1)`-bit parenthesis sequence plus a range min-max index, and every
//! binary-tree operation (children, parent, subtree size, LCA, inorder and
//! pre- or postorder numbering) is answered with a handful of ordinal-tree
//! operations.
//!
//! The [`cartesian`] module builds the `T4` encoding of a Cartesian tree in a
//! single streaming pass with `O(sqrt(n) log n)` bits of working memory and
//! answers range-minimum queries on it without access to the original array.
//!
//! The [`reference`] module holds pointer-based trees, explicit
//! transformations, every sequence encoder, and naive oracles. It is used to
//! build trees from arbitrary shapes and to check the succinct structures.

pub mod bintree;
pub mod bitvec;
pub mod bp;
pub mod cartesian;
mod error;
pub mod ordinal;
pub mod parens;
pub mod reference;

pub use bintree::{BinaryNodeHandle, OrderKind, SuccinctBinaryTree, Variant};
pub use bitvec::RankSelectBits;
pub use bp::ParenSupport;
pub use cartesian::{build_stream, RmqIndex, StreamStats};
pub use error::{Error, Result};
pub use ordinal::{NodeHandle, Order, OrdinalTree};
pub use parens::Parens;
