use std::cell::RefCell;

use proptest::prelude::*;
use succinct_bintree::cartesian::{build_rmq, build_stream_into, OutputTape};
use succinct_bintree::reference::{encode_bp, encode_pods, naive_cartesian, transform, Variant};
use succinct_bintree::{build_stream, Parens, RmqIndex};

/// Tape that rejects rewrites and reads of unwritten cells, and counts how
/// often each cell is read back.
#[derive(Default)]
struct CheckedTape {
    cells: Vec<Option<bool>>,
    reads: RefCell<Vec<u32>>,
}

impl OutputTape for CheckedTape {
    fn push(&mut self, open: bool) {
        self.cells.push(Some(open));
        self.reads.borrow_mut().push(0);
    }

    fn get(&self, pos: usize) -> bool {
        self.reads.borrow_mut()[pos] += 1;
        self.cells[pos].expect("read of an unwritten cell")
    }

    fn len(&self) -> usize {
        self.cells.len()
    }
}

fn oracle(a: &[i64]) -> Parens {
    encode_bp(&transform(Variant::T4, &naive_cartesian(a)).tree)
}

fn leftmost_argmin(a: &[i64], i: usize, j: usize) -> usize {
    (i..=j).min_by_key(|&k| (a[k - 1], k)).unwrap()
}

fn array(max_len: usize) -> impl Strategy<Value = Vec<i64>> {
    prop_oneof![
        prop::collection::vec(any::<i64>(), 0..max_len),
        prop::collection::vec(0i64..4, 0..max_len),
        (0usize..max_len).prop_map(|n| (0..n as i64).collect()),
        (0usize..max_len).prop_map(|n| (0..n as i64).rev().collect()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn stream_matches_oracle(a in array(600)) {
        let (p, stats) = build_stream(&a);
        prop_assert_eq!(&p, &oracle(&a));
        prop_assert_eq!(&p, &encode_pods(&transform(Variant::T1, &naive_cartesian(&a)).tree));
        prop_assert_eq!(p.len(), 2 * (a.len() + 1));
        let n = a.len().max(1) as f64;
        prop_assert!(stats.aux_peak_words as f64 <= 64.0 * n.sqrt());
    }

    #[test]
    fn stream_reads_each_cell_at_most_once(a in array(600)) {
        let mut tape = CheckedTape::default();
        let stats = build_stream_into(&a, &mut tape);
        prop_assert!(tape.cells.iter().all(|c| c.is_some()));
        prop_assert!(tape.reads.borrow().iter().all(|&r| r <= 1));
        prop_assert_eq!(stats.scanned, tape.reads.borrow().iter().map(|&r| r as usize).sum::<usize>());
        let out: Parens = tape.cells.iter().map(|c| c.unwrap()).collect();
        prop_assert_eq!(out, oracle(&a));
    }

    #[test]
    fn rmq_matches_scan(a in array(200)) {
        let n = a.len();
        let (q, _) = RmqIndex::build(&a);
        prop_assert_eq!(q.len(), n);
        for i in 1..=n {
            for j in i..=n {
                prop_assert_eq!(q.rmq(i, j).unwrap(), leftmost_argmin(&a, i, j), "rmq({}, {})", i, j);
            }
        }
        let from_parens = build_rmq(&build_stream(&a).0, n).unwrap();
        if n > 0 {
            prop_assert_eq!(from_parens.rmq(1, n).unwrap(), leftmost_argmin(&a, 1, n));
        }
    }
}

#[test]
fn rmq_rejects_bad_ranges() {
    let (q, _) = RmqIndex::build(&[2, 7, 1, 8]);
    for (i, j) in [(0, 1), (2, 1), (1, 5), (5, 5)] {
        assert!(q.rmq(i, j).is_err(), "({i}, {j})");
    }
    let (empty, _) = RmqIndex::build::<i64>(&[]);
    assert!(empty.rmq(1, 1).is_err());
}

#[test]
fn block_size_is_floor_sqrt() {
    for n in [0usize, 1, 3, 4, 99, 100, 10_000] {
        let a: Vec<i64> = (0..n as i64).collect();
        let (_, stats) = build_stream(&a);
        assert_eq!(stats.block_size, n.isqrt().max(1));
    }
}

#[test]
fn increasing_array_is_the_memory_worst_case() {
    // every element stays a suffix minimum
    let n = 40_000usize;
    let up: Vec<i64> = (0..n as i64).collect();
    let (_, stats) = build_stream(&up);
    let root = n.isqrt();
    assert!(stats.peak_directory <= 2 * n / root + 2);
    assert!(stats.peak_tail <= root);
    assert!(stats.aux_peak_words <= 64 * root);
}
