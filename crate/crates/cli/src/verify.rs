use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use succinct_bintree::reference::{
    encode_bp, encode_dfuds, encode_dfuds_rtl, encode_pods, naive_cartesian, random_binary_tree,
    transform, zaks, LinkedBinaryTree, NaiveOps,
};
use succinct_bintree::{
    build_stream, NodeHandle, OrderKind, Parens, RmqIndex, SuccinctBinaryTree, Variant,
};

pub struct Options {
    pub max_n: usize,
    pub seed: u64,
    pub trees: usize,
    /// Flip one bit of the first tree's encoding before checking it.
    pub corrupt: bool,
}

#[derive(Debug)]
pub struct Check {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Check {
            name,
            cases: 0,
            failures: 0,
        }
    }

    fn record(&mut self, ok: bool) {
        self.cases += 1;
        self.failures += !ok as usize;
    }
}

fn sequence_identities(t: &LinkedBinaryTree) -> bool {
    let [t1, t2, t3, t4] = Variant::ALL.map(|v| transform(v, t).tree);
    let [bp1, bp2, bp3, bp4] = [&t1, &t2, &t3, &t4].map(encode_bp);
    let mut z = Parens::new();
    z.push_open();
    bp1.reversed() == bp2
        && bp3.reversed() == bp4
        && encode_dfuds(&t1) == encode_dfuds_rtl(&t2)
        && encode_dfuds(&t3) == encode_dfuds_rtl(&t4)
        && bp1 == encode_dfuds(&t4)
        && bp3 == encode_dfuds(&t2)
        && encode_pods(&t1) == bp4
        && z.concat(&zaks(t)) == bp1
}

/// Compares every operation on every node, plus sampled LCA pairs.
fn operations_match(t: &LinkedBinaryTree, s: &SuccinctBinaryTree, rng: &mut ChaCha8Rng) -> bool {
    let n = t.len();
    let ops = NaiveOps::new(t);
    let tr = transform(s.variant(), t);
    let order = tr.tree.preorder();
    let mut pre = vec![0; order.len()];
    for (k, &v) in order.iter().enumerate() {
        pre[v] = k + 1;
    }
    let bits = s.ordinal().support().bits();
    let mut h = Vec::with_capacity(n);
    for u in 0..n {
        let Ok(pos) = bits.select1(pre[tr.map[u]]) else {
            return false;
        };
        let Ok(x) = s.handle(NodeHandle(pos)) else {
            return false;
        };
        h.push(x);
    }
    let oh = |u: Option<usize>| u.map(|u| h[u]);
    let node_ok = |u: usize| -> bool {
        let x = h[u];
        let second = match s.order_kind() {
            OrderKind::Preorder => ops.preorder[u],
            OrderKind::Postorder => ops.postorder[u],
        };
        s.left_child(x).ok() == Some(oh(t.left(u)))
            && s.right_child(x).ok() == Some(oh(t.right(u)))
            && s.parent(x).ok() == Some(oh(t.parent(u)))
            && s.subtree_size(x).ok() == Some(ops.subtree_size[u])
            && s.inorder_rank(x).ok() == Some(ops.inorder[u])
            && s.order_rank(x).ok() == Some(second)
            && s.select_inorder(ops.inorder[u]).ok() == Some(x)
    };
    if s.root() != oh(t.root()) || !(0..n).all(node_ok) {
        return false;
    }
    (0..if n == 0 { 0 } else { 32 }).all(|_| {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        s.lca(h[a], h[b]).ok() == Some(h[ops.lca(a, b)])
    })
}

fn random_array(n: usize, rng: &mut ChaCha8Rng) -> Vec<i64> {
    if rng.gen() {
        let mut a: Vec<i64> = (0..n as i64).collect();
        a.shuffle(rng);
        a
    } else {
        let range = (n as i64 / 4).max(2);
        (0..n).map(|_| rng.gen_range(0..range)).collect()
    }
}

fn leftmost_argmin(a: &[i64], i: usize, j: usize) -> usize {
    (i..=j).min_by_key(|&k| (a[k - 1], k)).unwrap()
}

pub fn run(opts: &Options) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut encodings = Check::new("encodings");
    let mut operations = Check::new("operations");
    let mut files = Check::new("serialization");
    let mut stream = Check::new("stream");
    let mut rmq = Check::new("rmq");

    for k in 0..opts.trees {
        let n = rng.gen_range(0..=opts.max_n);
        let t = random_binary_tree(n, rng.gen());
        encodings.record(sequence_identities(&t));
        for v in Variant::ALL {
            let mut bp = encode_bp(&transform(v, &t).tree);
            if opts.corrupt && k == 0 && v == Variant::T1 {
                let at = rng.gen_range(0..bp.len());
                let mut raw = bp.into_inner();
                raw[at] = !raw[at];
                bp = Parens::from(raw);
            }
            let ok = match SuccinctBinaryTree::from_parens(v, &bp) {
                Ok(s) => {
                    let round = SuccinctBinaryTree::from_bytes(&s.to_bytes());
                    files.record(round.is_ok_and(|r| r.bp() == s.bp() && r.variant() == v));
                    operations_match(&t, &s, &mut rng)
                }
                Err(_) => false,
            };
            operations.record(ok);
        }

        let a = random_array(rng.gen_range(1..=opts.max_n.max(1)), &mut rng);
        let oracle = encode_bp(&transform(Variant::T4, &naive_cartesian(&a)).tree);
        stream.record(build_stream(&a).0 == oracle);
        let (q, _) = RmqIndex::build(&a);
        let n = a.len();
        if n <= 64 {
            for i in 1..=n {
                for j in i..=n {
                    rmq.record(q.rmq(i, j).ok() == Some(leftmost_argmin(&a, i, j)));
                }
            }
        } else {
            for _ in 0..500 {
                let (i, j) = (rng.gen_range(1..=n), rng.gen_range(1..=n));
                let (i, j) = (i.min(j), i.max(j));
                rmq.record(q.rmq(i, j).ok() == Some(leftmost_argmin(&a, i, j)));
            }
        }
    }
    vec![encodings, operations, files, stream, rmq]
}
