//! Succinct binary trees: a transformation variant plus the BP-encoded
//! ordinal tree it produces.
//!
//! Every binary operation is a short combination of ordinal operations on
//! the image `v` of the binary node `u`:
//!
//! | op | `T1` | `T2` | `T3` | `T4` |
//! |----|------|------|------|------|
//! | left | first child | last child | next sibling | prev sibling |
//! | right | next sibling | prev sibling | first child | last child |
//! | parent | prev sibling, else parent | next sibling, else parent | prev sibling, else parent | next sibling, else parent |
//! | inorder | postorder | postorder-right | preorder-right − 1 | preorder − 1 |
//! | second order | preorder − 1 | preorder-right − 1 | postorder | postorder |
//!
//! Subtree size counts `v`, its subtree, and the subtrees of the siblings
//! on the "across" side; those form a contiguous run in one of the four
//! orders, ending at the extreme leaf under `parent(v)`.

use crate::error::{Error, Result};
use crate::ordinal::{NodeHandle, Order, OrdinalTree};
use crate::parens::Parens;
use crate::reference::{decode_zaks, LinkedBinaryTree};

pub use crate::reference::Variant;

const MAGIC: &[u8; 4] = b"SBT1";
/// Magic, variant byte and node count.
pub const HEADER_BYTES: usize = 4 + 1 + 8;

/// A binary node, held as the position of its ordinal image.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BinaryNodeHandle(NodeHandle);

impl BinaryNodeHandle {
    pub fn ordinal(self) -> NodeHandle {
        self.0
    }

    pub fn pos(self) -> usize {
        self.0.pos()
    }
}

/// The order available besides inorder.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderKind {
    Preorder,
    Postorder,
}

#[derive(Clone, Debug)]
pub struct SuccinctBinaryTree {
    variant: Variant,
    tree: OrdinalTree,
    n: usize,
}

type Step = fn(&LinkedBinaryTree, usize) -> Option<usize>;

/// BP of the transformed tree, emitted straight from the linked tree.
fn encode_variant(t: &LinkedBinaryTree, variant: Variant) -> Parens {
    enum Act {
        Node(Option<usize>),
        Open,
        Close,
    }
    let (down, across): (Step, Step) = if variant.left_is_child() {
        (LinkedBinaryTree::left, LinkedBinaryTree::right)
    } else {
        (LinkedBinaryTree::right, LinkedBinaryTree::left)
    };
    let mut out = Parens::with_capacity(2 * t.len() + 2);
    out.push_open();
    let mut stack = vec![Act::Node(t.root())];
    while let Some(act) = stack.pop() {
        match act {
            Act::Node(None) => {}
            Act::Node(Some(u)) if !variant.is_mirrored() => {
                // ( down ) across
                out.push_open();
                stack.push(Act::Node(across(t, u)));
                stack.push(Act::Close);
                stack.push(Act::Node(down(t, u)));
            }
            Act::Node(Some(u)) => {
                // across ( down )
                stack.push(Act::Close);
                stack.push(Act::Node(down(t, u)));
                stack.push(Act::Open);
                stack.push(Act::Node(across(t, u)));
            }
            Act::Open => out.push_open(),
            Act::Close => out.push_close(),
        }
    }
    out.push_close();
    out
}

impl SuccinctBinaryTree {
    pub fn from_linked(t: &LinkedBinaryTree, variant: Variant) -> Result<Self> {
        t.validate()?;
        Self::from_parens(variant, &encode_variant(t, variant))
    }

    /// Wraps the BP sequence of an already transformed tree.
    pub fn from_parens(variant: Variant, parens: &Parens) -> Result<Self> {
        Self::from_ordinal(variant, OrdinalTree::from_parens(parens)?)
    }

    pub fn from_ordinal(variant: Variant, tree: OrdinalTree) -> Result<Self> {
        if tree.is_empty() {
            return Err(Error::Malformed {
                position: 0,
                reason: "missing dummy root",
            });
        }
        let n = tree.len() - 1;
        Ok(SuccinctBinaryTree { variant, tree, n })
    }

    /// A `T1` tree from a Zaks sequence (prepend one open parenthesis).
    pub fn from_zaks(zaks: &Parens) -> Result<Self> {
        decode_zaks(zaks)?;
        let mut bp = Parens::with_capacity(zaks.len() + 1);
        bp.push_open();
        for b in zaks.iter() {
            bp.push(b);
        }
        Self::from_parens(Variant::T1, &bp)
    }

    /// The Zaks sequence, available for `T1` (drop the leading open).
    pub fn to_zaks(&self) -> Result<Parens> {
        if self.variant != Variant::T1 {
            return Err(Error::Format(format!(
                "Zaks export needs variant t1, tree is {}",
                self.variant
            )));
        }
        Ok(self.bp().iter().skip(1).collect())
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    /// Number of binary nodes.
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn ordinal(&self) -> &OrdinalTree {
        &self.tree
    }

    pub fn bp(&self) -> Parens {
        self.tree.to_parens()
    }

    /// Always `2(n + 1)`.
    pub fn encoding_bits(&self) -> usize {
        self.tree.support().len()
    }

    pub fn index_bits(&self) -> usize {
        self.tree.support().index_bits() + 3 * 64
    }

    pub fn order_kind(&self) -> OrderKind {
        if self.variant.left_is_child() {
            OrderKind::Preorder
        } else {
            OrderKind::Postorder
        }
    }

    fn check(&self, u: BinaryNodeHandle) -> Result<NodeHandle> {
        let v = u.0;
        if v.pos() == 0 || !self.tree.is_valid(v) {
            return Err(Error::InvalidHandle(v.pos()));
        }
        Ok(v)
    }

    /// Maps an ordinal result back, hiding the dummy root.
    fn wrap(&self, v: Option<NodeHandle>) -> Option<BinaryNodeHandle> {
        v.filter(|v| v.pos() != 0).map(BinaryNodeHandle)
    }

    /// Accepts a raw ordinal handle if it names a binary node.
    pub fn handle(&self, v: NodeHandle) -> Result<BinaryNodeHandle> {
        let u = BinaryNodeHandle(v);
        self.check(u).map(|_| u)
    }

    pub fn root(&self) -> Option<BinaryNodeHandle> {
        let root = NodeHandle(0);
        let r = if self.variant.is_mirrored() {
            self.tree.last_child(root)
        } else {
            self.tree.first_child(root)
        };
        r.expect("root is valid").map(BinaryNodeHandle)
    }

    pub fn left_child(&self, u: BinaryNodeHandle) -> Result<Option<BinaryNodeHandle>> {
        let v = self.check(u)?;
        let r = match self.variant {
            Variant::T1 => self.tree.first_child(v)?,
            Variant::T2 => self.tree.last_child(v)?,
            Variant::T3 => self.tree.next_sibling(v)?,
            Variant::T4 => self.tree.prev_sibling(v)?,
        };
        Ok(r.map(BinaryNodeHandle))
    }

    pub fn right_child(&self, u: BinaryNodeHandle) -> Result<Option<BinaryNodeHandle>> {
        let v = self.check(u)?;
        let r = match self.variant {
            Variant::T1 => self.tree.next_sibling(v)?,
            Variant::T2 => self.tree.prev_sibling(v)?,
            Variant::T3 => self.tree.first_child(v)?,
            Variant::T4 => self.tree.last_child(v)?,
        };
        Ok(r.map(BinaryNodeHandle))
    }

    pub fn is_leaf(&self, u: BinaryNodeHandle) -> Result<bool> {
        Ok(self.left_child(u)?.is_none() && self.right_child(u)?.is_none())
    }

    pub fn parent(&self, u: BinaryNodeHandle) -> Result<Option<BinaryNodeHandle>> {
        let v = self.check(u)?;
        let sibling = if self.variant.is_mirrored() {
            self.tree.next_sibling(v)?
        } else {
            self.tree.prev_sibling(v)?
        };
        if sibling.is_some() {
            return Ok(sibling.map(BinaryNodeHandle));
        }
        Ok(self.wrap(self.tree.parent(v)?))
    }

    /// Number of binary nodes in the subtree of `u`, counting `u`.
    pub fn subtree_size(&self, u: BinaryNodeHandle) -> Result<usize> {
        let v = self.check(u)?;
        let p = self
            .tree
            .parent(v)?
            .expect("binary nodes lie below the dummy root");
        let t = &self.tree;
        let exclusive = match self.variant {
            Variant::T1 => {
                let leaf = t.rightmost_leaf(p)?;
                t.node_rank(Order::Preorder, leaf)? - t.node_rank(Order::Preorder, v)?
            }
            Variant::T2 => {
                let leaf = t.leftmost_leaf(p)?;
                t.node_rank(Order::PreorderRight, leaf)? - t.node_rank(Order::PreorderRight, v)?
            }
            Variant::T3 => {
                let leaf = t.rightmost_leaf(p)?;
                t.node_rank(Order::PostorderRight, v)? - t.node_rank(Order::PostorderRight, leaf)?
            }
            Variant::T4 => {
                let leaf = t.leftmost_leaf(p)?;
                t.node_rank(Order::Postorder, v)? - t.node_rank(Order::Postorder, leaf)?
            }
        };
        Ok(exclusive + 1)
    }

    /// Rank used to order the arguments of [`lca`](Self::lca): the node
    /// whose ordinal image is an ancestor-side of the other comes first.
    fn lca_key(&self, v: NodeHandle) -> Result<usize> {
        if self.variant.is_mirrored() {
            self.tree.node_rank(Order::PreorderRight, v)
        } else {
            self.tree.node_rank(Order::Preorder, v)
        }
    }

    pub fn lca(&self, u: BinaryNodeHandle, w: BinaryNodeHandle) -> Result<BinaryNodeHandle> {
        let (a, b) = (self.check(u)?, self.check(w)?);
        if a == b {
            return Ok(u);
        }
        let (first, second) = if self.lca_key(a)? < self.lca_key(b)? {
            (a, b)
        } else {
            (b, a)
        };
        let lca = self.tree.lca(first, second)?;
        if lca == first {
            return Ok(BinaryNodeHandle(lca));
        }
        if Some(lca) == self.tree.parent(first)? {
            return Ok(BinaryNodeHandle(first));
        }
        let d = self.tree.depth(lca)? + 1;
        Ok(BinaryNodeHandle(self.tree.ancestor_at_depth(first, d)?))
    }

    pub fn inorder_rank(&self, u: BinaryNodeHandle) -> Result<usize> {
        let v = self.check(u)?;
        let t = &self.tree;
        Ok(match self.variant {
            Variant::T1 => t.node_rank(Order::Postorder, v)?,
            Variant::T2 => t.node_rank(Order::PostorderRight, v)?,
            Variant::T3 => t.node_rank(Order::PreorderRight, v)? - 1,
            Variant::T4 => t.node_rank(Order::Preorder, v)? - 1,
        })
    }

    /// Preorder rank for `T1`/`T2`, postorder rank for `T3`/`T4`.
    pub fn order_rank(&self, u: BinaryNodeHandle) -> Result<usize> {
        let v = self.check(u)?;
        let t = &self.tree;
        Ok(match self.variant {
            Variant::T1 => t.node_rank(Order::Preorder, v)? - 1,
            Variant::T2 => t.node_rank(Order::PreorderRight, v)? - 1,
            Variant::T3 => t.node_rank(Order::PostorderRight, v)?,
            Variant::T4 => t.node_rank(Order::Postorder, v)?,
        })
    }

    fn check_rank(&self, k: usize) -> Result<()> {
        if k == 0 || k > self.n {
            Err(Error::NotFound)
        } else {
            Ok(())
        }
    }

    pub fn select_inorder(&self, k: usize) -> Result<BinaryNodeHandle> {
        self.check_rank(k)?;
        let (order, j) = match self.variant {
            Variant::T1 => (Order::Postorder, k),
            Variant::T2 => (Order::PostorderRight, k),
            Variant::T3 => (Order::PreorderRight, k + 1),
            Variant::T4 => (Order::Preorder, k + 1),
        };
        Ok(BinaryNodeHandle(self.tree.node_select(order, j)?))
    }

    /// Inverse of [`order_rank`](Self::order_rank).
    pub fn select_order(&self, k: usize) -> Result<BinaryNodeHandle> {
        self.check_rank(k)?;
        let (order, j) = match self.variant {
            Variant::T1 => (Order::Preorder, k + 1),
            Variant::T2 => (Order::PreorderRight, k + 1),
            Variant::T3 => (Order::PostorderRight, k),
            Variant::T4 => (Order::Postorder, k),
        };
        Ok(BinaryNodeHandle(self.tree.node_select(order, j)?))
    }

    /// `"SBT1"`, variant byte, little-endian u64 binary node count, then the
    /// `2(n + 1)` BP bits packed LSB-first into bytes.
    pub fn to_bytes(&self) -> Vec<u8> {
        let payload = self.bp().to_packed_bytes();
        let mut out = Vec::with_capacity(HEADER_BYTES + payload.len());
        out.extend_from_slice(MAGIC);
        out.push(self.variant.tag());
        out.extend_from_slice(&(self.n as u64).to_le_bytes());
        out.extend_from_slice(&payload);
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        if bytes.len() < HEADER_BYTES || &bytes[..4] != MAGIC {
            return Err(Error::Format("missing SBT1 header".into()));
        }
        let variant = Variant::from_tag(bytes[4])?;
        let n = u64::from_le_bytes(bytes[5..13].try_into().unwrap()) as usize;
        let bits = 2 * (n + 1);
        let body = &bytes[HEADER_BYTES..];
        if body.len() != bits.div_ceil(8) {
            return Err(Error::Format(format!(
                "expected {} payload bytes for {} nodes, found {}",
                bits.div_ceil(8),
                n,
                body.len()
            )));
        }
        Self::from_parens(variant, &Parens::from_packed_bytes(body, bits)?)
    }
}
