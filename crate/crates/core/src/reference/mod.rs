//! Pointer-based ground truth: linked binary and ordinal trees, the four
//! binary-to-ordinal transformations, every sequence encoder, naive
//! operation answers and uniform random tree generation.
//!
//! Nothing here is succinct or fast; these are the builders and oracles the
//! succinct structures are checked against.

mod encode;
mod linked;
mod naive;
mod random;
mod transform;

pub use encode::{
    decode_bp, decode_dfuds, decode_zaks, encode_bp, encode_dfuds, encode_dfuds_rtl, encode_pods,
    zaks, zaks_with_correspondence, ZaksCorrespondence,
};
pub use linked::{BinaryNode, LinkedBinaryTree, LinkedOrdinalTree, OrdinalNode};
pub use naive::{naive_cartesian, NaiveOps};
pub use random::{random_binary_tree, random_ordinal_tree};
pub use transform::{transform, untransform, Transformed, Variant};
