use std::fmt;
use std::str::FromStr;

use super::linked::{LinkedBinaryTree, LinkedOrdinalTree};
use crate::error::{Error, Result};

/// The four binary-to-ordinal transformations. For a binary node `u` with
/// ordinal image `v`:
///
/// | variant | left child of `u` | right child of `u` |
/// |---------|-------------------|--------------------|
/// | `T1`    | first child of `v` | next sibling of `v` |
/// | `T2`    | last child of `v`  | previous sibling of `v` |
/// | `T3`    | next sibling of `v` | first child of `v` |
/// | `T4`    | previous sibling of `v` | last child of `v` |
///
/// The binary root is the first (`T1`, `T3`) or last (`T2`, `T4`) child of
/// a dummy ordinal root. `T2` and `T4` are mirror images of `T1` and `T3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    T1,
    T2,
    T3,
    T4,
}

impl Variant {
    pub const ALL: [Variant; 4] = [Variant::T1, Variant::T2, Variant::T3, Variant::T4];

    pub fn tag(self) -> u8 {
        match self {
            Variant::T1 => 1,
            Variant::T2 => 2,
            Variant::T3 => 3,
            Variant::T4 => 4,
        }
    }

    pub fn from_tag(tag: u8) -> Result<Self> {
        match tag {
            1 => Ok(Variant::T1),
            2 => Ok(Variant::T2),
            3 => Ok(Variant::T3),
            4 => Ok(Variant::T4),
            t => Err(Error::Format(format!("unknown variant tag {t}"))),
        }
    }

    /// True when children are listed right to left relative to `T1`/`T3`.
    pub fn is_mirrored(self) -> bool {
        matches!(self, Variant::T2 | Variant::T4)
    }

    /// True when the left child hangs below (`T1`, `T2`) rather than beside.
    pub fn left_is_child(self) -> bool {
        matches!(self, Variant::T1 | Variant::T2)
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t{}", self.tag())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "t1" | "1" => Ok(Variant::T1),
            "t2" | "2" => Ok(Variant::T2),
            "t3" | "3" => Ok(Variant::T3),
            "t4" | "4" => Ok(Variant::T4),
            _ => Err(Error::Format(format!("unknown variant {s:?}"))),
        }
    }
}

/// A transformed tree and the binary-to-ordinal node correspondence.
#[derive(Clone, Debug)]
pub struct Transformed {
    pub tree: LinkedOrdinalTree,
    /// `map[u]` is the ordinal node for binary node `u`.
    pub map: Vec<usize>,
}

type Step = fn(&LinkedBinaryTree, usize) -> Option<usize>;

/// Ordinal node `0` is the dummy root; binary node `u` becomes `u + 1`.
pub fn transform(variant: Variant, t: &LinkedBinaryTree) -> Transformed {
    let n = t.len();
    // a node's ordinal children are the chain reached by one step "down"
    // followed by repeated steps "across"
    let (down, across): (Step, Step) = if variant.left_is_child() {
        (LinkedBinaryTree::left, LinkedBinaryTree::right)
    } else {
        (LinkedBinaryTree::right, LinkedBinaryTree::left)
    };
    let chain = |start: Option<usize>| {
        let mut out = Vec::new();
        let mut cur = start;
        while let Some(x) = cur {
            out.push(x + 1);
            cur = across(t, x);
        }
        if variant.is_mirrored() {
            out.reverse();
        }
        out
    };
    let mut children = Vec::with_capacity(n + 1);
    children.push(chain(t.root()));
    for u in 0..n {
        children.push(chain(down(t, u)));
    }
    Transformed {
        tree: LinkedOrdinalTree::from_children(children, 0, true),
        map: (1..=n).collect(),
    }
}

/// Inverts [`transform`]: the ordinal root is taken as the dummy root and
/// ordinal node `v` becomes binary node `v - 1` when the root is node `0`;
/// otherwise nodes are numbered in ordinal preorder.
pub fn untransform(variant: Variant, t: &LinkedOrdinalTree) -> LinkedBinaryTree {
    let order = t.preorder();
    let mut id = vec![usize::MAX; t.len()];
    if t.root() == 0 {
        for (v, slot) in id.iter_mut().enumerate().skip(1) {
            *slot = v - 1;
        }
    } else {
        for (k, &v) in order.iter().enumerate().skip(1) {
            id[v] = k - 1;
        }
    }
    let mut b = LinkedBinaryTree::with_nodes(t.len() - 1);
    let pick_first = !variant.is_mirrored();
    let first = |v: usize| -> Option<usize> {
        let c = t.children(v);
        if pick_first {
            c.first().copied()
        } else {
            c.last().copied()
        }
    };
    if let Some(r) = first(t.root()) {
        b.set_root(id[r]);
    }
    for &v in &order {
        let kids = t.children(v);
        // consecutive children in list order are linked "across"
        for w in kids.windows(2) {
            let (from, to) = if pick_first {
                (w[0], w[1])
            } else {
                (w[1], w[0])
            };
            if variant.left_is_child() {
                b.set_right(id[from], id[to]);
            } else {
                b.set_left(id[from], id[to]);
            }
        }
        if v != t.root() {
            if let Some(c) = first(v) {
                if variant.left_is_child() {
                    b.set_left(id[v], id[c]);
                } else {
                    b.set_right(id[v], id[c]);
                }
            }
        }
    }
    b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc() -> LinkedBinaryTree {
        let mut t = LinkedBinaryTree::with_nodes(3);
        t.set_root(0);
        t.set_left(0, 1);
        t.set_right(0, 2);
        t
    }

    #[test]
    fn singleton_t1() {
        let tr = transform(Variant::T1, &LinkedBinaryTree::singleton());
        assert_eq!(tr.tree.len(), 2);
        assert_eq!(tr.tree.children(0), [1]);
        assert!(tr.tree.has_dummy_root());
    }

    #[test]
    fn abc_t1_and_t4() {
        // a=1, b=2, c=3 in ordinal ids
        let t1 = transform(Variant::T1, &abc()).tree;
        assert_eq!(t1.children(0), [1, 3]);
        assert_eq!(t1.children(1), [2]);
        let t4 = transform(Variant::T4, &abc()).tree;
        assert_eq!(t4.children(0), [2, 1]);
        assert_eq!(t4.children(1), [3]);
    }

    #[test]
    fn mirrors() {
        let t = abc();
        assert_eq!(
            transform(Variant::T2, &t).tree,
            transform(Variant::T1, &t).tree.mirrored()
        );
        assert_eq!(
            transform(Variant::T4, &t).tree,
            transform(Variant::T3, &t).tree.mirrored()
        );
    }

    #[test]
    fn empty_tree_is_dummy_only() {
        for v in Variant::ALL {
            let tr = transform(v, &LinkedBinaryTree::empty());
            assert_eq!(tr.tree.len(), 1);
            assert!(tr.tree.children(0).is_empty());
            assert_eq!(untransform(v, &tr.tree), LinkedBinaryTree::empty());
        }
    }

    #[test]
    fn untransform_inverts() {
        let t = abc();
        for v in Variant::ALL {
            let back = untransform(v, &transform(v, &t).tree);
            assert_eq!(back, t, "{v}");
        }
    }

    #[test]
    fn variant_parsing() {
        assert_eq!("T3".parse::<Variant>().unwrap(), Variant::T3);
        assert_eq!(Variant::from_tag(4).unwrap(), Variant::T4);
        assert!(Variant::from_tag(0).is_err());
        assert!("t5".parse::<Variant>().is_err());
        assert_eq!(Variant::T2.to_string(), "t2");
    }
}
