use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BinaryNode {
    pub left: Option<usize>,
    pub right: Option<usize>,
    pub parent: Option<usize>,
}

/// Arena-backed binary tree. Node ids are indices into the arena.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinkedBinaryTree {
    nodes: Vec<BinaryNode>,
    root: Option<usize>,
}

impl LinkedBinaryTree {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn singleton() -> Self {
        let mut t = Self::with_nodes(1);
        t.root = Some(0);
        t
    }

    /// `n` unlinked nodes and no root; link them with the setters.
    pub fn with_nodes(n: usize) -> Self {
        LinkedBinaryTree {
            nodes: vec![BinaryNode::default(); n],
            root: None,
        }
    }

    pub fn add_node(&mut self) -> usize {
        self.nodes.push(BinaryNode::default());
        self.nodes.len() - 1
    }

    pub fn set_root(&mut self, u: usize) {
        self.root = Some(u);
    }

    pub fn set_left(&mut self, parent: usize, child: usize) {
        self.nodes[parent].left = Some(child);
        self.nodes[child].parent = Some(parent);
    }

    pub fn set_right(&mut self, parent: usize, child: usize) {
        self.nodes[parent].right = Some(child);
        self.nodes[child].parent = Some(parent);
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn root(&self) -> Option<usize> {
        self.root
    }

    pub fn node(&self, u: usize) -> &BinaryNode {
        &self.nodes[u]
    }

    pub fn left(&self, u: usize) -> Option<usize> {
        self.nodes[u].left
    }

    pub fn right(&self, u: usize) -> Option<usize> {
        self.nodes[u].right
    }

    pub fn parent(&self, u: usize) -> Option<usize> {
        self.nodes[u].parent
    }

    /// Checks that every node is reachable from the root exactly once and
    /// that parent links agree with child links.
    pub fn validate(&self) -> Result<()> {
        let bad = |position, reason| Err(Error::Malformed { position, reason });
        let Some(root) = self.root else {
            return if self.nodes.is_empty() {
                Ok(())
            } else {
                bad(0, "nodes present but no root")
            };
        };
        if root >= self.nodes.len() {
            return bad(root, "root out of range");
        }
        if self.nodes[root].parent.is_some() {
            return bad(root, "root has a parent");
        }
        let mut seen = vec![false; self.nodes.len()];
        let mut stack = vec![root];
        let mut count = 0;
        while let Some(u) = stack.pop() {
            if seen[u] {
                return bad(u, "node reached twice");
            }
            seen[u] = true;
            count += 1;
            for c in [self.nodes[u].left, self.nodes[u].right]
                .into_iter()
                .flatten()
            {
                if c >= self.nodes.len() {
                    return bad(u, "child out of range");
                }
                if self.nodes[c].parent != Some(u) {
                    return bad(c, "parent link disagrees with child link");
                }
                stack.push(c);
            }
        }
        if count != self.nodes.len() {
            return bad(
                seen.iter().position(|&s| !s).unwrap_or(0),
                "unreachable node",
            );
        }
        Ok(())
    }

    /// Node ids in preorder.
    pub fn preorder(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len());
        let mut stack: Vec<usize> = self.root.into_iter().collect();
        while let Some(u) = stack.pop() {
            out.push(u);
            stack.extend(self.nodes[u].right);
            stack.extend(self.nodes[u].left);
        }
        out
    }

    pub fn inorder(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len());
        let mut stack = Vec::new();
        let mut cur = self.root;
        loop {
            while let Some(u) = cur {
                stack.push(u);
                cur = self.nodes[u].left;
            }
            let Some(u) = stack.pop() else { break };
            out.push(u);
            cur = self.nodes[u].right;
        }
        out
    }

    pub fn postorder(&self) -> Vec<usize> {
        // reverse of (node, right, left) preorder
        let mut out = Vec::with_capacity(self.len());
        let mut stack: Vec<usize> = self.root.into_iter().collect();
        while let Some(u) = stack.pop() {
            out.push(u);
            stack.extend(self.nodes[u].left);
            stack.extend(self.nodes[u].right);
        }
        out.reverse();
        out
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OrdinalNode {
    pub children: Vec<usize>,
    pub parent: Option<usize>,
}

/// Arena-backed ordinal tree with ordered child lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkedOrdinalTree {
    nodes: Vec<OrdinalNode>,
    root: usize,
    dummy_root: bool,
}

impl LinkedOrdinalTree {
    /// Builds from child lists; parent links are derived.
    pub fn from_children(children: Vec<Vec<usize>>, root: usize, dummy_root: bool) -> Self {
        let mut nodes: Vec<OrdinalNode> = children
            .into_iter()
            .map(|children| OrdinalNode {
                children,
                parent: None,
            })
            .collect();
        for v in 0..nodes.len() {
            for i in 0..nodes[v].children.len() {
                let c = nodes[v].children[i];
                nodes[c].parent = Some(v);
            }
        }
        LinkedOrdinalTree {
            nodes,
            root,
            dummy_root,
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn has_dummy_root(&self) -> bool {
        self.dummy_root
    }

    pub fn set_dummy_root(&mut self, dummy: bool) {
        self.dummy_root = dummy;
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.nodes[v].children
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.nodes[v].parent
    }

    pub fn node(&self, v: usize) -> &OrdinalNode {
        &self.nodes[v]
    }

    pub fn preorder(&self) -> Vec<usize> {
        self.preorder_impl(false)
    }

    pub fn preorder_right(&self) -> Vec<usize> {
        self.preorder_impl(true)
    }

    fn preorder_impl(&self, right_to_left: bool) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len());
        let mut stack = vec![self.root];
        while let Some(v) = stack.pop() {
            out.push(v);
            if right_to_left {
                stack.extend(self.nodes[v].children.iter().copied());
            } else {
                stack.extend(self.nodes[v].children.iter().rev().copied());
            }
        }
        out
    }

    pub fn postorder(&self) -> Vec<usize> {
        // reverse of the right-to-left preorder
        let mut out = self.preorder_impl(true);
        out.reverse();
        out
    }

    pub fn postorder_right(&self) -> Vec<usize> {
        let mut out = self.preorder_impl(false);
        out.reverse();
        out
    }

    /// Mirror image: every child list reversed.
    pub fn mirrored(&self) -> Self {
        let mut m = self.clone();
        for n in &mut m.nodes {
            n.children.reverse();
        }
        m
    }
}
