use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::encode::decode_zaks;
use super::linked::{LinkedBinaryTree, LinkedOrdinalTree};
use super::transform::{transform, Variant};
use crate::parens::Parens;

/// Uniformly random binary tree shape with `n` nodes, deterministic per seed.
///
/// Shuffles `n` opens and `n + 1` closes, then rotates the sequence to
/// start just after its first lowest prefix. By the cycle lemma exactly one
/// rotation of every such sequence is a valid Zaks sequence, so each of the
/// Catalan-many shapes is hit by the same number of shuffles.
pub fn random_binary_tree(n: usize, seed: u64) -> LinkedBinaryTree {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seq: Vec<bool> = std::iter::repeat_n(true, n)
        .chain(std::iter::repeat_n(false, n + 1))
        .collect();
    seq.shuffle(&mut rng);
    let mut excess = 0i64;
    let mut lowest = i64::MAX;
    let mut cut = 0;
    for (i, &open) in seq.iter().enumerate() {
        excess += if open { 1 } else { -1 };
        if excess < lowest {
            lowest = excess;
            cut = i + 1;
        }
    }
    let len = seq.len();
    seq.rotate_left(cut % len);
    decode_zaks(&Parens::from(seq)).expect("cycle lemma rotation is a valid Zaks sequence")
}

/// Uniformly random ordinal tree with `n >= 1` nodes (the first
/// transformation is a bijection from binary trees with `n - 1` nodes).
pub fn random_ordinal_tree(n: usize, seed: u64) -> LinkedOrdinalTree {
    assert!(n >= 1, "an ordinal tree has at least one node");
    let mut t = transform(Variant::T1, &random_binary_tree(n - 1, seed)).tree;
    t.set_dummy_root(false);
    t
}
