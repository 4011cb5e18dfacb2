//! Streaming Cartesian-tree encoder and the range-minimum index built on it.
//!
//! [`build_stream`] reads the array once from left to right and writes
//! `BP(T4(C))`, where `C` is the Cartesian tree, to an append-only tape.
//! The output starts with the open parenthesis of the dummy root. For each
//! element, one close is written per suffix minimum with a strictly larger
//! value, then one open for the element itself. The remaining unmatched
//! opens are closed at the end.
//!
//! The unmatched opens are exactly the suffix minima, so the algorithm never
//! keeps an explicit stack. The output is cut into blocks of `floor(sqrt(n))`
//! positions. Unmatched opens in the block being written are listed
//! explicitly. Every earlier block that still holds an unmatched open has
//! one directory entry that points at the rightmost one. When that open is
//! matched, the next one is found by scanning the block backwards and
//! skipping balanced runs. Scanned positions are never scanned again, so
//! the pass runs in linear time with `O(sqrt(n))` words of working memory.

use crate::bintree::{SuccinctBinaryTree, Variant};
use crate::bitvec::RankSelectBits;
use crate::bp::ParenSupport;
use crate::error::{Error, Result};
use crate::ordinal::OrdinalTree;
use crate::parens::Parens;

/// Append-only output that may be read back.
pub trait OutputTape {
    fn push(&mut self, open: bool);
    fn get(&self, pos: usize) -> bool;
    fn len(&self) -> usize;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl OutputTape for Parens {
    fn push(&mut self, open: bool) {
        Parens::push(self, open);
    }

    fn get(&self, pos: usize) -> bool {
        self.as_slice()[pos]
    }

    fn len(&self) -> usize {
        Parens::len(self)
    }
}

/// Bits packed LSB-first into `u64` words.
#[derive(Clone, Debug, Default)]
pub struct PackedTape {
    words: Vec<u64>,
    len: usize,
}

impl PackedTape {
    pub fn with_capacity(bits: usize) -> Self {
        PackedTape {
            words: Vec::with_capacity(bits.div_ceil(64)),
            len: 0,
        }
    }

    pub fn into_bits(self) -> RankSelectBits {
        RankSelectBits::from_words(self.words, self.len)
    }

    pub fn to_parens(&self) -> Parens {
        Parens::from_words(&self.words, self.len)
    }
}

impl OutputTape for PackedTape {
    fn push(&mut self, open: bool) {
        if self.len.is_multiple_of(64) {
            self.words.push(0);
        }
        if open {
            *self.words.last_mut().unwrap() |= 1 << (self.len % 64);
        }
        self.len += 1;
    }

    fn get(&self, pos: usize) -> bool {
        debug_assert!(pos < self.len);
        self.words[pos / 64] >> (pos % 64) & 1 == 1
    }

    fn len(&self) -> usize {
        self.len
    }
}

/// Working-memory figures of one [`build_stream`] run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct StreamStats {
    pub n: usize,
    pub block_size: usize,
    /// Most directory entries alive at once.
    pub peak_directory: usize,
    /// Most explicitly listed opens in the current block at once.
    pub peak_tail: usize,
    /// Peak working memory in machine words (output excluded).
    pub aux_peak_words: usize,
    /// The same peak with every word cut to `ceil(log2(2n + 2))` bits.
    pub aux_peak_bits: usize,
    /// Positions read back during backward scans.
    pub scanned: usize,
}

const ENTRY_WORDS: usize = 4;
const TAIL_WORDS: usize = 2;
// input index, tape length, opens so far, block size, current block and the
// opens before it, scan cursor and its counters
const CURSOR_WORDS: usize = 9;

#[derive(Clone, Copy, Debug)]
struct DirEntry {
    block: usize,
    opens_before_block: usize,
    /// Rightmost unmatched open of the block.
    pos: usize,
    /// Opens in the block before `pos`.
    opens_before_pos: usize,
}

struct Stream<'t, O: OutputTape> {
    out: &'t mut O,
    block_size: usize,
    block: usize,
    opens_before_block: usize,
    opens: usize,
    directory: Vec<DirEntry>,
    /// (position, array index) of each unmatched open in the current block.
    tail: Vec<(usize, usize)>,
    stats: StreamStats,
}

impl<O: OutputTape> Stream<'_, O> {
    fn note_memory(&mut self) {
        let s = &mut self.stats;
        s.peak_directory = s.peak_directory.max(self.directory.len());
        s.peak_tail = s.peak_tail.max(self.tail.len());
        let words =
            ENTRY_WORDS * self.directory.len() + TAIL_WORDS * self.tail.len() + CURSOR_WORDS;
        s.aux_peak_words = s.aux_peak_words.max(words);
    }

    fn write(&mut self, open: bool) {
        let pos = self.out.len();
        let block = pos / self.block_size;
        if block != self.block {
            if let Some(&(p, idx)) = self.tail.last() {
                self.directory.push(DirEntry {
                    block: self.block,
                    opens_before_block: self.opens_before_block,
                    pos: p,
                    opens_before_pos: idx - self.opens_before_block,
                });
                self.tail.clear();
            }
            self.block = block;
            self.opens_before_block = self.opens;
        }
        self.out.push(open);
        if open {
            self.tail.push((pos, self.opens));
            self.opens += 1;
        }
        self.note_memory();
    }

    /// Array index (1-based, 0 for the dummy) of the rightmost unmatched open.
    fn top(&self) -> usize {
        match (self.tail.last(), self.directory.last()) {
            (Some(&(_, idx)), _) => idx,
            (None, Some(e)) => e.opens_before_block + e.opens_before_pos,
            (None, None) => unreachable!("the dummy open is never matched before the end"),
        }
    }

    /// Forgets the rightmost unmatched open, which the next close matches.
    fn pop(&mut self) {
        if self.tail.pop().is_some() {
            return;
        }
        let block_start = self.directory.last().expect("nonempty").block * self.block_size;
        let e = self.directory.last_mut().expect("nonempty");
        let mut depth = 0usize;
        let mut opens_seen = 0usize;
        let mut q = e.pos;
        while q > block_start {
            q -= 1;
            self.stats.scanned += 1;
            if self.out.get(q) {
                if depth == 0 {
                    e.pos = q;
                    e.opens_before_pos -= opens_seen + 1;
                    return;
                }
                depth -= 1;
                opens_seen += 1;
            } else {
                depth += 1;
            }
        }
        self.directory.pop();
    }
}

/// Writes `BP(T4(C))` for the Cartesian tree `C` of `a` to `out`, which must
/// be empty. Ties go to the leftmost minimum.
pub fn build_stream_into<T: Ord, O: OutputTape>(a: &[T], out: &mut O) -> StreamStats {
    assert!(out.is_empty(), "output tape must start empty");
    let n = a.len();
    let block_size = n.isqrt().max(1);
    let mut s = Stream {
        out,
        block_size,
        block: 0,
        opens_before_block: 0,
        opens: 0,
        directory: Vec::new(),
        tail: Vec::new(),
        stats: StreamStats {
            n,
            block_size,
            ..StreamStats::default()
        },
    };
    s.write(true);
    for x in a {
        loop {
            let idx = s.top();
            if idx == 0 || a[idx - 1] <= *x {
                break;
            }
            s.pop();
            s.write(false);
        }
        s.write(true);
    }
    while s.out.len() < 2 * (n + 1) {
        s.write(false);
    }
    let bits_per_word = (usize::BITS - (2 * n + 1).leading_zeros()) as usize;
    let mut stats = s.stats;
    stats.aux_peak_bits = stats.aux_peak_words * bits_per_word;
    stats
}

/// [`build_stream_into`] on a packed tape.
pub fn build_stream<T: Ord>(a: &[T]) -> (Parens, StreamStats) {
    let mut tape = PackedTape::with_capacity(2 * (a.len() + 1));
    let stats = build_stream_into(a, &mut tape);
    (tape.to_parens(), stats)
}

/// Range-minimum index over an array that is no longer needed: the `T4`
/// encoding of its Cartesian tree. Positions are 1-based.
#[derive(Clone, Debug)]
pub struct RmqIndex {
    tree: SuccinctBinaryTree,
}

/// Wraps the `T4` encoding of a Cartesian tree over `n` values.
pub fn build_rmq(parens: &Parens, n: usize) -> Result<RmqIndex> {
    if parens.len() != 2 * (n + 1) {
        return Err(Error::Malformed {
            position: parens.len(),
            reason: "length is not 2(n + 1)",
        });
    }
    RmqIndex::from_tree(SuccinctBinaryTree::from_parens(Variant::T4, parens)?)
}

impl RmqIndex {
    /// Streams `a` straight into the index.
    pub fn build<T: Ord>(a: &[T]) -> (Self, StreamStats) {
        let mut tape = PackedTape::with_capacity(2 * (a.len() + 1));
        let stats = build_stream_into(a, &mut tape);
        let support = ParenSupport::from_bits(tape.into_bits()).expect("stream output is balanced");
        let tree = OrdinalTree::new(support).expect("stream output is a single tree");
        let tree = SuccinctBinaryTree::from_ordinal(Variant::T4, tree).expect("dummy root present");
        (RmqIndex { tree }, stats)
    }

    pub fn from_tree(tree: SuccinctBinaryTree) -> Result<Self> {
        if tree.variant() != Variant::T4 {
            return Err(Error::Format(format!(
                "range-minimum index needs variant t4, tree is {}",
                tree.variant()
            )));
        }
        Ok(RmqIndex { tree })
    }

    pub fn len(&self) -> usize {
        self.tree.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tree.is_empty()
    }

    pub fn tree(&self) -> &SuccinctBinaryTree {
        &self.tree
    }

    /// Leftmost position of the minimum of `a[i..=j]`, 1-based.
    pub fn rmq(&self, i: usize, j: usize) -> Result<usize> {
        let n = self.len();
        if i == 0 || i > j || j > n {
            return Err(Error::InvalidRange {
                lo: i,
                hi: j,
                len: n,
            });
        }
        if i == j {
            return Ok(i);
        }
        let u = self.tree.select_inorder(i)?;
        let w = self.tree.select_inorder(j)?;
        self.tree.inorder_rank(self.tree.lca(u, w)?)
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        self.tree.to_bytes()
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        Self::from_tree(SuccinctBinaryTree::from_bytes(bytes)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reference::{encode_bp, naive_cartesian, transform};

    fn stream(a: &[i64]) -> String {
        build_stream(a).0.to_string()
    }

    #[test]
    fn examples() {
        assert_eq!(stream(&[3, 1, 2]), "(()(()))");
        assert_eq!(stream(&[5]), "(())");
        assert_eq!(stream(&[3, 2, 1]), "(()()())");
        assert_eq!(stream(&[1, 2, 3]), "(((())))");
        assert_eq!(stream(&[]), "()");
    }

    #[test]
    fn matches_oracle_on_small_arrays() {
        let arrays: [&[i64]; 6] = [
            &[1, 1],
            &[2, 1, 2, 1],
            &[5, 2, 8, 2, 9, 1, 7, 7, 3],
            &[4, 3, 2, 1, 0, 1, 2, 3, 4],
            &[0, 9, 1, 8, 2, 7, 3, 6, 4, 5],
            &[3; 11],
        ];
        for a in arrays {
            let want = encode_bp(&transform(Variant::T4, &naive_cartesian(a)).tree);
            assert_eq!(build_stream(a).0, want, "{a:?}");
        }
    }

    #[test]
    fn rmq_examples() {
        let (q, _) = RmqIndex::build(&[3, 1, 2]);
        assert_eq!(q.rmq(1, 3).unwrap(), 2);
        assert_eq!(q.rmq(1, 1).unwrap(), 1);
        assert_eq!(q.rmq(3, 3).unwrap(), 3);
        assert_eq!(q.rmq(1, 2).unwrap(), 2);
        assert!(q.rmq(0, 2).is_err());
        assert!(q.rmq(3, 2).is_err());
        assert!(q.rmq(1, 4).is_err());
        let (q, _) = RmqIndex::build(&[1, 1]);
        assert_eq!(q.rmq(1, 2).unwrap(), 1);
    }

    #[test]
    fn build_rmq_checks_input() {
        let q = build_rmq(&"(())".parse().unwrap(), 1).unwrap();
        assert_eq!(q.len(), 1);
        assert!(build_rmq(&"(())".parse().unwrap(), 2).is_err());
        assert!(build_rmq(&"()))".parse().unwrap(), 1).is_err());
        let q = build_rmq(&build_stream(&[3, 1, 2]).0, 3).unwrap();
        assert_eq!(q.tree().encoding_bits(), 8);
    }

    #[test]
    fn serialization_round_trip() {
        let (q, _) = RmqIndex::build(&[4, 1, 3, 1, 2]);
        let back = RmqIndex::from_bytes(&q.to_bytes()).unwrap();
        assert_eq!(back.rmq(1, 5).unwrap(), 2);
        assert_eq!(back.rmq(3, 5).unwrap(), 4);
        let t1 = SuccinctBinaryTree::from_parens(Variant::T1, &"(())".parse().unwrap()).unwrap();
        assert!(RmqIndex::from_bytes(&t1.to_bytes()).is_err());
    }

    #[test]
    fn packed_tape_reads_back() {
        let mut t = PackedTape::default();
        let bits: Vec<bool> = (0..130).map(|i| i % 3 == 0).collect();
        for &b in &bits {
            t.push(b);
        }
        assert_eq!(t.len(), 130);
        assert!((0..130).all(|i| t.get(i) == bits[i]));
        assert_eq!(t.to_parens(), Parens::from(bits));
    }
}
