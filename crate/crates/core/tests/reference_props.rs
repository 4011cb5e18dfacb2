mod common;

use common::ranks;
use proptest::prelude::*;
use succinct_bintree::reference::{
    decode_bp, decode_dfuds, decode_zaks, encode_bp, encode_dfuds, encode_dfuds_rtl, encode_pods,
    random_binary_tree, transform, untransform, zaks, zaks_with_correspondence, NaiveOps, Variant,
};
use succinct_bintree::Parens;

fn encodings_agree(n: usize, seed: u64) {
    let t = random_binary_tree(n, seed);
    let [t1, t2, t3, t4] = Variant::ALL.map(|v| transform(v, &t).tree);
    assert_eq!(encode_bp(&t1).reversed(), encode_bp(&t2));
    assert_eq!(encode_bp(&t3).reversed(), encode_bp(&t4));
    assert_eq!(encode_dfuds(&t1), encode_dfuds_rtl(&t2));
    assert_eq!(encode_dfuds(&t3), encode_dfuds_rtl(&t4));
    assert_eq!(encode_bp(&t1), encode_dfuds(&t4));
    assert_eq!(encode_bp(&t3), encode_dfuds(&t2));
    assert_eq!(encode_pods(&t1), encode_bp(&t4));
    assert_eq!(t2, t1.mirrored());
    assert_eq!(t4, t3.mirrored());

    let mut z = Parens::new();
    z.push_open();
    assert_eq!(z.concat(&zaks(&t)), encode_bp(&t1));
    assert_eq!(decode_zaks(&zaks(&t)).unwrap().preorder().len(), n);
}

fn round_trips(n: usize, seed: u64) {
    let t = random_binary_tree(n, seed);
    for v in Variant::ALL {
        let o = transform(v, &t).tree;
        assert_eq!(untransform(v, &o), t, "{v}");
        let bp = encode_bp(&o);
        assert_eq!(encode_bp(&decode_bp(&bp).unwrap()), bp);
        let d = encode_dfuds(&o);
        assert_eq!(encode_dfuds(&decode_dfuds(&d).unwrap()), d);
    }
    let z = zaks(&t);
    assert_eq!(zaks(&decode_zaks(&z).unwrap()), z);
}

fn order_mappings(n: usize, seed: u64) {
    let t = random_binary_tree(n, seed);
    let ops = NaiveOps::new(&t);
    for v in Variant::ALL {
        let tr = transform(v, &t);
        let o = &tr.tree;
        let pre = ranks(&o.preorder());
        let post = ranks(&o.postorder());
        let pre_r = ranks(&o.preorder_right());
        let post_r = ranks(&o.postorder_right());
        for u in 0..n {
            let x = tr.map[u];
            let (ino, other) = match v {
                Variant::T1 => (post[x], pre[x] - 1),
                Variant::T2 => (post_r[x], pre_r[x] - 1),
                Variant::T3 => (pre_r[x] - 1, post_r[x]),
                Variant::T4 => (pre[x] - 1, post[x]),
            };
            assert_eq!(ino, ops.inorder[u], "{v} inorder of {u}");
            let want = if v.left_is_child() {
                ops.preorder[u]
            } else {
                ops.postorder[u]
            };
            assert_eq!(other, want, "{v} second order of {u}");
        }
    }
}

fn zaks_correspondence(n: usize, seed: u64) {
    let t = random_binary_tree(n, seed);
    let ops = NaiveOps::new(&t);
    let (z, c) = zaks_with_correspondence(&t);
    assert_eq!(z.len(), 2 * n + 1);
    assert_eq!(c.opens, t.preorder());
    assert_eq!(c.closes, t.inorder());
    for (k, &u) in c.opens.iter().enumerate() {
        assert_eq!(ops.preorder[u], k + 1);
    }
    for (k, &u) in c.closes.iter().enumerate() {
        assert_eq!(ops.inorder[u], k + 1);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn sequence_identities(n in 0usize..300, seed in any::<u64>()) {
        encodings_agree(n, seed);
    }

    #[test]
    fn decoders_invert_encoders(n in 0usize..200, seed in any::<u64>()) {
        round_trips(n, seed);
    }

    #[test]
    fn traversal_orders_map_across(n in 1usize..300, seed in any::<u64>()) {
        order_mappings(n, seed);
    }

    #[test]
    fn zaks_parens_follow_preorder_and_inorder(n in 0usize..300, seed in any::<u64>()) {
        zaks_correspondence(n, seed);
    }
}

#[test]
fn singleton_literals() {
    let t = random_binary_tree(1, 0);
    assert_eq!(zaks(&t).to_string(), "())");
    assert_eq!(
        encode_bp(&transform(Variant::T1, &t).tree).to_string(),
        "(())"
    );
}
