//! Sequence encoders and decoders over linked trees.

use super::linked::{LinkedBinaryTree, LinkedOrdinalTree};
use crate::error::{Error, Result};
use crate::parens::Parens;

/// Depth-first: open on entering a node, close after its subtree.
pub fn encode_bp(t: &LinkedOrdinalTree) -> Parens {
    let mut out = Parens::with_capacity(2 * t.len());
    let mut stack = vec![(t.root(), 0usize)];
    out.push_open();
    while let Some((v, i)) = stack.last_mut() {
        let kids = t.children(*v);
        if *i < kids.len() {
            let c = kids[*i];
            *i += 1;
            out.push_open();
            stack.push((c, 0));
        } else {
            out.push_close();
            stack.pop();
        }
    }
    out
}

fn dfuds_impl(t: &LinkedOrdinalTree, order: Vec<usize>) -> Parens {
    let mut out = Parens::with_capacity(2 * t.len());
    out.push_open();
    for v in order {
        for _ in 0..t.children(v).len() {
            out.push_open();
        }
        out.push_close();
    }
    out
}

/// A leading open, then `(^d )` per node in preorder.
pub fn encode_dfuds(t: &LinkedOrdinalTree) -> Parens {
    dfuds_impl(t, t.preorder())
}

/// As [`encode_dfuds`] with children visited right to left.
pub fn encode_dfuds_rtl(t: &LinkedOrdinalTree) -> Parens {
    dfuds_impl(t, t.preorder_right())
}

/// Post-order degree sequence: `( )^d` per node in postorder, then one
/// final close.
pub fn encode_pods(t: &LinkedOrdinalTree) -> Parens {
    let mut out = Parens::with_capacity(2 * t.len());
    for v in t.postorder() {
        out.push_open();
        for _ in 0..t.children(v).len() {
            out.push_close();
        }
    }
    out.push_close();
    out
}

/// Parses a BP sequence. Nodes are numbered in preorder, root `0`.
pub fn decode_bp(p: &Parens) -> Result<LinkedOrdinalTree> {
    if p.is_empty() {
        return Err(Error::Malformed {
            position: 0,
            reason: "empty sequence",
        });
    }
    let mut children: Vec<Vec<usize>> = Vec::with_capacity(p.len() / 2);
    let mut stack: Vec<usize> = Vec::new();
    for (i, open) in p.iter().enumerate() {
        if open {
            if stack.is_empty() && !children.is_empty() {
                return Err(Error::Malformed {
                    position: i,
                    reason: "more than one root",
                });
            }
            let id = children.len();
            children.push(Vec::new());
            if let Some(&parent) = stack.last() {
                children[parent].push(id);
            }
            stack.push(id);
        } else if stack.pop().is_none() {
            return Err(Error::Malformed {
                position: i,
                reason: "close parenthesis without a matching open",
            });
        }
    }
    if !stack.is_empty() {
        return Err(Error::Malformed {
            position: p.len(),
            reason: "unclosed parenthesis at end of input",
        });
    }
    Ok(LinkedOrdinalTree::from_children(children, 0, false))
}

/// Parses a DFUDS sequence (with its leading open). Nodes are numbered in
/// preorder, root `0`.
pub fn decode_dfuds(p: &Parens) -> Result<LinkedOrdinalTree> {
    let bad = |position, reason| Err(Error::Malformed { position, reason });
    if p.get(0) != Some(true) {
        return bad(0, "missing leading open parenthesis");
    }
    let mut degrees = Vec::new();
    let mut d = 0;
    for open in p.iter().skip(1) {
        if open {
            d += 1;
        } else {
            degrees.push(d);
            d = 0;
        }
    }
    if d != 0 {
        return bad(p.len(), "degree run not terminated");
    }
    if degrees.is_empty() {
        return bad(p.len(), "no nodes");
    }
    let n = degrees.len();
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
    // (node, children still to attach)
    let mut stack: Vec<(usize, usize)> = vec![(0, degrees[0])];
    for (v, &deg) in degrees.iter().enumerate().skip(1) {
        while let Some(&(_, 0)) = stack.last() {
            stack.pop();
        }
        let Some(top) = stack.last_mut() else {
            return bad(v, "degree sequence describes a forest");
        };
        top.1 -= 1;
        children[top.0].push(v);
        stack.push((v, deg));
    }
    if stack.iter().any(|&(_, rem)| rem != 0) {
        return bad(p.len(), "degree sequence ends early");
    }
    Ok(LinkedOrdinalTree::from_children(children, 0, false))
}

/// Node correspondence recorded while emitting a Zaks sequence.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ZaksCorrespondence {
    /// Binary node of each open parenthesis, left to right.
    pub opens: Vec<usize>,
    /// Binary node of each close parenthesis that ends a node's left
    /// subtree, left to right (the first `n` of the `n + 1` closes that
    /// match something once a leading open is prepended).
    pub closes: Vec<usize>,
}

/// Preorder over the extended tree: `(` for each node, `)` for each
/// missing child. Length `2n + 1`.
pub fn zaks(t: &LinkedBinaryTree) -> Parens {
    zaks_with_correspondence(t).0
}

pub fn zaks_with_correspondence(t: &LinkedBinaryTree) -> (Parens, ZaksCorrespondence) {
    enum Step {
        Visit(Option<usize>),
        // left subtree of the node is done
        EndLeft(usize),
    }
    let mut out = Parens::with_capacity(2 * t.len() + 1);
    let mut corr = ZaksCorrespondence::default();
    let mut stack = vec![Step::Visit(t.root())];
    while let Some(step) = stack.pop() {
        match step {
            Step::Visit(None) => out.push_close(),
            Step::Visit(Some(u)) => {
                out.push_open();
                corr.opens.push(u);
                stack.push(Step::Visit(t.right(u)));
                stack.push(Step::EndLeft(u));
                stack.push(Step::Visit(t.left(u)));
            }
            // the close just emitted terminates u's left subtree
            Step::EndLeft(u) => corr.closes.push(u),
        }
    }
    (out, corr)
}

/// Inverse of [`zaks`]. Nodes are numbered in preorder.
pub fn decode_zaks(p: &Parens) -> Result<LinkedBinaryTree> {
    let bad = |position, reason| Err(Error::Malformed { position, reason });
    let mut t = LinkedBinaryTree::empty();
    // pending child slots: (parent, is_left); None marks the root slot
    let mut slots: Vec<Option<(usize, bool)>> = vec![None];
    for (i, open) in p.iter().enumerate() {
        let Some(slot) = slots.pop() else {
            return bad(i, "trailing symbols after a complete tree");
        };
        if open {
            let u = t.add_node();
            match slot {
                None => t.set_root(u),
                Some((parent, true)) => t.set_left(parent, u),
                Some((parent, false)) => t.set_right(parent, u),
            }
            slots.push(Some((u, false)));
            slots.push(Some((u, true)));
        }
    }
    if !slots.is_empty() {
        return bad(p.len(), "sequence ends before the tree is complete");
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::super::transform::{transform, Variant};
    use super::*;

    fn abc() -> LinkedBinaryTree {
        let mut t = LinkedBinaryTree::with_nodes(3);
        t.set_root(0);
        t.set_left(0, 1);
        t.set_right(0, 2);
        t
    }

    fn single() -> LinkedOrdinalTree {
        LinkedOrdinalTree::from_children(vec![vec![]], 0, false)
    }

    fn s(p: &Parens) -> String {
        p.to_string()
    }

    #[test]
    fn single_node_encodings() {
        assert_eq!(s(&encode_bp(&single())), "()");
        assert_eq!(s(&encode_dfuds(&single())), "()");
        assert_eq!(s(&encode_dfuds_rtl(&single())), "()");
        assert_eq!(s(&encode_pods(&single())), "()");
    }

    #[test]
    fn abc_encodings() {
        let t1 = transform(Variant::T1, &abc()).tree;
        let t2 = transform(Variant::T2, &abc()).tree;
        let t3 = transform(Variant::T3, &abc()).tree;
        let t4 = transform(Variant::T4, &abc()).tree;
        assert_eq!(s(&encode_bp(&t1)), "((())())");
        assert_eq!(s(&encode_bp(&t4)), "(()(()))");
        assert_eq!(s(&encode_dfuds(&t4)), "((())())");
        // T3 and T2 are T1 and T4 of the tree with left and right swapped
        assert_eq!(encode_bp(&t3), encode_dfuds(&t2));
        assert_ne!(encode_bp(&t2), encode_dfuds(&t3));
    }

    #[test]
    fn pods_of_small_cartesian_tree() {
        // Cartesian tree of [3, 1, 2]: root 1 (index), left 0, right 2
        let mut c = LinkedBinaryTree::with_nodes(3);
        c.set_root(1);
        c.set_left(1, 0);
        c.set_right(1, 2);
        assert_eq!(
            s(&encode_pods(&transform(Variant::T1, &c).tree)),
            "(()(()))"
        );
    }

    #[test]
    fn zaks_examples() {
        assert_eq!(s(&zaks(&LinkedBinaryTree::singleton())), "())");
        assert_eq!(s(&zaks(&abc())), "(())())");
        let mut left_only = LinkedBinaryTree::with_nodes(2);
        left_only.set_root(0);
        left_only.set_left(0, 1);
        assert_eq!(s(&zaks(&left_only)), "(()))");
        assert_eq!(s(&zaks(&LinkedBinaryTree::empty())), ")");
    }

    #[test]
    fn zaks_correspondence_abc() {
        let (_, c) = zaks_with_correspondence(&abc());
        assert_eq!(c.opens, [0, 1, 2]);
        assert_eq!(c.closes, [1, 0, 2]);
    }

    #[test]
    fn decoders_invert_encoders() {
        let t = abc();
        assert_eq!(decode_zaks(&zaks(&t)).unwrap(), t);
        let t4 = transform(Variant::T4, &t).tree;
        let from_bp = decode_bp(&encode_bp(&t4)).unwrap();
        assert_eq!(encode_bp(&from_bp), encode_bp(&t4));
        let from_dfuds = decode_dfuds(&encode_dfuds(&t4)).unwrap();
        assert_eq!(encode_bp(&from_dfuds), encode_bp(&t4));
    }

    #[test]
    fn decoders_reject_garbage() {
        for bad in ["", ")", "()()", "(()"] {
            assert!(decode_bp(&bad.parse().unwrap()).is_err(), "{bad:?}");
        }
        for bad in ["", ")", "(()", "(())()", "((()"] {
            assert!(decode_dfuds(&bad.parse().unwrap()).is_err(), "{bad:?}");
        }
        for bad in ["", "(", "()", "()))", "(()"] {
            assert!(decode_zaks(&bad.parse().unwrap()).is_err(), "{bad:?}");
        }
    }
}
