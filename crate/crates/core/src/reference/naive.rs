use super::linked::LinkedBinaryTree;

/// Precomputed traversal answers for a linked binary tree. Ranks are
/// 1-based; subtree sizes include the node itself.
#[derive(Clone, Debug)]
pub struct NaiveOps<'a> {
    tree: &'a LinkedBinaryTree,
    pub depth: Vec<usize>,
    pub preorder: Vec<usize>,
    pub inorder: Vec<usize>,
    pub postorder: Vec<usize>,
    pub subtree_size: Vec<usize>,
    by_inorder: Vec<usize>,
    by_preorder: Vec<usize>,
    by_postorder: Vec<usize>,
}

fn ranks(order: &[usize]) -> Vec<usize> {
    let mut r = vec![0; order.len()];
    for (k, &u) in order.iter().enumerate() {
        r[u] = k + 1;
    }
    r
}

impl<'a> NaiveOps<'a> {
    pub fn new(tree: &'a LinkedBinaryTree) -> Self {
        let pre = tree.preorder();
        let ino = tree.inorder();
        let post = tree.postorder();
        let n = tree.len();
        let mut depth = vec![0; n];
        for &u in &pre {
            if let Some(p) = tree.parent(u) {
                depth[u] = depth[p] + 1;
            }
        }
        let mut subtree_size = vec![1; n];
        for &u in &post {
            if let Some(p) = tree.parent(u) {
                subtree_size[p] += subtree_size[u];
            }
        }
        NaiveOps {
            tree,
            depth,
            preorder: ranks(&pre),
            inorder: ranks(&ino),
            postorder: ranks(&post),
            subtree_size,
            by_inorder: ino,
            by_preorder: pre,
            by_postorder: post,
        }
    }

    pub fn tree(&self) -> &LinkedBinaryTree {
        self.tree
    }

    pub fn left(&self, u: usize) -> Option<usize> {
        self.tree.left(u)
    }

    pub fn right(&self, u: usize) -> Option<usize> {
        self.tree.right(u)
    }

    pub fn parent(&self, u: usize) -> Option<usize> {
        self.tree.parent(u)
    }

    pub fn is_leaf(&self, u: usize) -> bool {
        self.tree.left(u).is_none() && self.tree.right(u).is_none()
    }

    pub fn select_inorder(&self, k: usize) -> usize {
        self.by_inorder[k - 1]
    }

    pub fn select_preorder(&self, k: usize) -> usize {
        self.by_preorder[k - 1]
    }

    pub fn select_postorder(&self, k: usize) -> usize {
        self.by_postorder[k - 1]
    }

    pub fn is_ancestor(&self, a: usize, mut u: usize) -> bool {
        loop {
            if u == a {
                return true;
            }
            match self.tree.parent(u) {
                Some(p) => u = p,
                None => return false,
            }
        }
    }

    pub fn lca(&self, mut u: usize, mut v: usize) -> usize {
        while self.depth[u] > self.depth[v] {
            u = self.tree.parent(u).unwrap();
        }
        while self.depth[v] > self.depth[u] {
            v = self.tree.parent(v).unwrap();
        }
        while u != v {
            u = self.tree.parent(u).unwrap();
            v = self.tree.parent(v).unwrap();
        }
        u
    }
}

/// Cartesian tree by the recursive definition: the root is the leftmost
/// minimum, the flanks are built recursively. Node `i` is array index `i`
/// (0-based), so the inorder of the result is the array order.
pub fn naive_cartesian<T: Ord>(a: &[T]) -> LinkedBinaryTree {
    let mut t = LinkedBinaryTree::with_nodes(a.len());
    // (lo, hi, parent, is_left) over half-open ranges
    let mut work = vec![(0usize, a.len(), None::<usize>, false)];
    while let Some((lo, hi, parent, is_left)) = work.pop() {
        if lo >= hi {
            continue;
        }
        let mut m = lo;
        for i in lo + 1..hi {
            if a[i] < a[m] {
                m = i;
            }
        }
        match parent {
            None => t.set_root(m),
            Some(p) if is_left => t.set_left(p, m),
            Some(p) => t.set_right(p, m),
        }
        work.push((lo, m, Some(m), true));
        work.push((m + 1, hi, Some(m), false));
    }
    t
}
