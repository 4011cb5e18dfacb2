#![allow(dead_code)]

use succinct_bintree::reference::{encode_bp, random_ordinal_tree, LinkedOrdinalTree};
use succinct_bintree::Parens;

/// Prefix excess after each position.
pub fn excess(p: &Parens) -> Vec<i64> {
    let mut e = 0;
    p.iter()
        .map(|open| {
            e += if open { 1 } else { -1 };
            e
        })
        .collect()
}

pub fn random_bp(nodes: usize, seed: u64) -> (LinkedOrdinalTree, Parens) {
    let t = random_ordinal_tree(nodes.max(1), seed);
    let p = encode_bp(&t);
    (t, p)
}

/// Open position of every linked node, indexed by node id.
pub fn positions(t: &LinkedOrdinalTree, p: &Parens) -> Vec<usize> {
    let opens: Vec<usize> = (0..p.len()).filter(|&i| p.get(i) == Some(true)).collect();
    let mut pos = vec![0; t.len()];
    for (k, v) in t.preorder().into_iter().enumerate() {
        pos[v] = opens[k];
    }
    pos
}

/// 1-based rank of every node in a traversal.
pub fn ranks(order: &[usize]) -> Vec<usize> {
    let mut r = vec![0; order.len()];
    for (k, &v) in order.iter().enumerate() {
        r[v] = k + 1;
    }
    r
}
