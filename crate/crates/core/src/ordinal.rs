//! Ordinal trees over a balanced-parentheses sequence.
//!
//! A node is identified by the position of its open parenthesis. The root
//! is at position 0 and has depth 0.

use crate::bp::ParenSupport;
use crate::error::{Error, Result};
use crate::parens::Parens;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeHandle(pub usize);

impl NodeHandle {
    #[inline]
    pub fn pos(self) -> usize {
        self.0
    }
}

/// Node orderings. The `*Right` orders visit children right to left.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Order {
    Preorder,
    Postorder,
    PreorderRight,
    PostorderRight,
}

impl Order {
    pub const ALL: [Order; 4] = [
        Order::Preorder,
        Order::Postorder,
        Order::PreorderRight,
        Order::PostorderRight,
    ];
}

#[derive(Clone, Debug)]
pub struct OrdinalTree {
    support: ParenSupport,
    n_nodes: usize,
}

impl OrdinalTree {
    /// Requires a single outermost pair (or the empty sequence).
    pub fn new(support: ParenSupport) -> Result<Self> {
        if !support.is_empty() && support.find_close(0)? != support.len() - 1 {
            return Err(Error::Malformed {
                position: support.find_close(0)? + 1,
                reason: "more than one root",
            });
        }
        let n_nodes = support.len() / 2;
        Ok(OrdinalTree { support, n_nodes })
    }

    pub fn from_parens(parens: &Parens) -> Result<Self> {
        Self::new(ParenSupport::new(parens)?)
    }

    pub fn support(&self) -> &ParenSupport {
        &self.support
    }

    pub fn to_parens(&self) -> Parens {
        self.support.to_parens()
    }

    pub fn len(&self) -> usize {
        self.n_nodes
    }

    pub fn is_empty(&self) -> bool {
        self.n_nodes == 0
    }

    pub fn root(&self) -> Result<NodeHandle> {
        if self.n_nodes == 0 {
            Err(Error::EmptyTree)
        } else {
            Ok(NodeHandle(0))
        }
    }

    pub fn is_valid(&self, x: NodeHandle) -> bool {
        self.support.is_open(x.0)
    }

    #[inline]
    fn check(&self, x: NodeHandle) -> Result<()> {
        if self.is_valid(x) {
            Ok(())
        } else {
            Err(Error::InvalidHandle(x.0))
        }
    }

    #[inline]
    fn close_of(&self, x: NodeHandle) -> usize {
        self.support.find_close(x.0).expect("validated handle")
    }

    pub fn is_leaf(&self, x: NodeHandle) -> Result<bool> {
        self.check(x)?;
        Ok(self.support.is_close(x.0 + 1))
    }

    pub fn parent(&self, x: NodeHandle) -> Result<Option<NodeHandle>> {
        self.check(x)?;
        Ok(self.support.enclose(x.0)?.map(NodeHandle))
    }

    pub fn first_child(&self, x: NodeHandle) -> Result<Option<NodeHandle>> {
        self.check(x)?;
        Ok(self.support.is_open(x.0 + 1).then_some(NodeHandle(x.0 + 1)))
    }

    /// The `i`-th child (1-based), walking siblings from the first child.
    pub fn child(&self, x: NodeHandle, i: usize) -> Result<Option<NodeHandle>> {
        if i == 0 {
            return Err(Error::NotFound);
        }
        let mut c = self.first_child(x)?;
        for _ in 1..i {
            match c {
                Some(node) => c = self.next_sibling(node)?,
                None => break,
            }
        }
        Ok(c)
    }

    pub fn last_child(&self, x: NodeHandle) -> Result<Option<NodeHandle>> {
        self.check(x)?;
        if self.support.is_close(x.0 + 1) {
            return Ok(None);
        }
        let close = self.close_of(x);
        Ok(Some(NodeHandle(self.support.find_open(close - 1)?)))
    }

    pub fn next_sibling(&self, x: NodeHandle) -> Result<Option<NodeHandle>> {
        self.check(x)?;
        let next = self.close_of(x) + 1;
        Ok(self.support.is_open(next).then_some(NodeHandle(next)))
    }

    pub fn prev_sibling(&self, x: NodeHandle) -> Result<Option<NodeHandle>> {
        self.check(x)?;
        if x.0 == 0 || self.support.is_open(x.0 - 1) {
            return Ok(None);
        }
        Ok(Some(NodeHandle(self.support.find_open(x.0 - 1)?)))
    }

    pub fn depth(&self, x: NodeHandle) -> Result<usize> {
        self.check(x)?;
        Ok(self.support.excess(x.0)? as usize - 1)
    }

    /// Number of children, counted as the minima of the excess strictly
    /// inside the node's pair.
    pub fn degree(&self, x: NodeHandle) -> Result<usize> {
        self.check(x)?;
        let close = self.close_of(x);
        if close == x.0 + 1 {
            return Ok(0);
        }
        Ok(self.support.range_min(x.0 + 1, close - 1)?.count)
    }

    /// 1-based rank of `x` in the given order.
    pub fn node_rank(&self, order: Order, x: NodeHandle) -> Result<usize> {
        self.check(x)?;
        let bits = self.support.bits();
        let pre = || bits.ones_before(x.0 + 1);
        let post = || {
            let close = self.close_of(x);
            close + 1 - bits.ones_before(close + 1)
        };
        Ok(match order {
            Order::Preorder => pre(),
            Order::Postorder => post(),
            Order::PreorderRight => self.n_nodes - post() + 1,
            Order::PostorderRight => self.n_nodes - pre() + 1,
        })
    }

    /// The `j`-th node (1-based) in the given order.
    pub fn node_select(&self, order: Order, j: usize) -> Result<NodeHandle> {
        if j == 0 || j > self.n_nodes {
            return Err(Error::NotFound);
        }
        let bits = self.support.bits();
        let pos = match order {
            Order::Preorder => bits.select1(j)?,
            Order::Postorder => self.support.find_open(bits.select0(j)?)?,
            Order::PreorderRight => self
                .support
                .find_open(bits.select0(self.n_nodes - j + 1)?)?,
            Order::PostorderRight => bits.select1(self.n_nodes - j + 1)?,
        };
        Ok(NodeHandle(pos))
    }

    pub fn leftmost_leaf(&self, x: NodeHandle) -> Result<NodeHandle> {
        self.check(x)?;
        let bits = self.support.bits();
        let closes_before = x.0 - bits.ones_before(x.0);
        Ok(NodeHandle(bits.select0(closes_before + 1)? - 1))
    }

    pub fn rightmost_leaf(&self, x: NodeHandle) -> Result<NodeHandle> {
        self.check(x)?;
        let close = self.close_of(x);
        let bits = self.support.bits();
        Ok(NodeHandle(bits.select1(bits.ones_before(close + 1))?))
    }

    /// Subtree size excluding `x` itself.
    pub fn subtree_size(&self, x: NodeHandle) -> Result<usize> {
        self.check(x)?;
        Ok((self.close_of(x) - x.0 - 1) / 2)
    }

    pub fn is_ancestor(&self, x: NodeHandle, y: NodeHandle) -> Result<bool> {
        self.check(x)?;
        self.check(y)?;
        Ok(x.0 <= y.0 && y.0 < self.close_of(x))
    }

    pub fn lca(&self, x: NodeHandle, y: NodeHandle) -> Result<NodeHandle> {
        self.check(x)?;
        self.check(y)?;
        let (a, b) = if x.0 <= y.0 { (x, y) } else { (y, x) };
        if b.0 < self.close_of(a) {
            return Ok(a);
        }
        // leftmost minimum is the close of the lca's child holding `a`
        let m = self.support.min_excess_pos(a.0, b.0)?;
        Ok(NodeHandle(
            self.support
                .enclose(m + 1)?
                .expect("lca of disjoint nodes exists"),
        ))
    }

    /// Ancestor of `x` at absolute depth `d` (`x` itself when `d = depth(x)`).
    pub fn ancestor_at_depth(&self, x: NodeHandle, d: usize) -> Result<NodeHandle> {
        let depth = self.depth(x)?;
        if d > depth {
            return Err(Error::OutOfRange {
                index: d,
                len: depth + 1,
            });
        }
        if d == depth {
            return Ok(x);
        }
        // the ancestor's open is preceded by the last position of excess d
        Ok(NodeHandle(
            match self.support.bwd_excess_search(x.0, d as i64)? {
                Some(q) => q + 1,
                None => 0,
            },
        ))
    }

    /// Ancestor `i` levels above `x`.
    pub fn level_ancestor(&self, x: NodeHandle, i: usize) -> Result<NodeHandle> {
        let depth = self.depth(x)?;
        let d = depth.checked_sub(i).ok_or(Error::OutOfRange {
            index: i,
            len: depth + 1,
        })?;
        self.ancestor_at_depth(x, d)
    }
}
