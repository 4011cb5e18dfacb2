//! Balanced-parentheses support: excess, matching, enclosing, range minima
//! of the excess and backward/forward excess search.
//!
//! The index is a range min-max tree. The sequence is cut into blocks of
//! `block_size` positions; each block keeps its total excess and the
//! minimum, maximum and minimum multiplicity of the prefix excess relative
//! to the block start (16 bits each). Blocks are grouped `BRANCH` at a time
//! into a complete k-ary hierarchy holding absolute values. Inside a block,
//! scans step a byte at a time through a 256-entry table.
//!
//! `excess(i)` counts positions `0..=i`; the excess "before" position `p`
//! is `excess(p - 1)`, with an implicit 0 before the start.

use crate::bitvec::RankSelectBits;
use crate::error::{check_index, Error, Result};
use crate::parens::Parens;

pub const DEFAULT_BLOCK_SIZE: usize = 512;
pub const BRANCH: usize = 32;

#[derive(Clone, Copy)]
struct ByteInfo {
    exc: i8,
    min: i8,
    max: i8,
    min_count: u8,
    min_pos: u8,
}

const BYTE_INFO: [ByteInfo; 256] = byte_table();

const fn byte_table() -> [ByteInfo; 256] {
    let mut t = [ByteInfo {
        exc: 0,
        min: 0,
        max: 0,
        min_count: 0,
        min_pos: 0,
    }; 256];
    let mut v = 0;
    while v < 256 {
        let mut e = 0i8;
        let mut min = i8::MAX;
        let mut max = i8::MIN;
        let mut count = 0u8;
        let mut pos = 0u8;
        let mut k = 0;
        while k < 8 {
            if (v >> k) & 1 == 1 {
                e += 1;
            } else {
                e -= 1;
            }
            if e < min {
                min = e;
                count = 1;
                pos = k as u8;
            } else if e == min {
                count += 1;
            }
            if e > max {
                max = e;
            }
            k += 1;
        }
        t[v] = ByteInfo {
            exc: e,
            min,
            max,
            min_count: count,
            min_pos: pos,
        };
        v += 1;
    }
    t
}

/// Per-block record, values relative to the excess before the block.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
struct BlockSummary {
    excess: i16,
    min: i16,
    max: i16,
    min_count: u16,
}

/// Absolute min/max over the prefix excess of a span of positions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct NodeSummary {
    min: i64,
    max: i64,
    min_count: u64,
}

impl NodeSummary {
    fn merge(self, other: NodeSummary) -> NodeSummary {
        let (min, min_count) = match self.min.cmp(&other.min) {
            std::cmp::Ordering::Less => (self.min, self.min_count),
            std::cmp::Ordering::Greater => (other.min, other.min_count),
            std::cmp::Ordering::Equal => (self.min, self.min_count + other.min_count),
        };
        NodeSummary {
            min,
            max: self.max.max(other.max),
            min_count,
        }
    }

    #[inline]
    fn contains(&self, d: i64) -> bool {
        self.min <= d && d <= self.max
    }
}

/// Result of a range-minimum query on the excess.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RangeMin {
    /// Leftmost position attaining the minimum.
    pub pos: usize,
    pub excess: i64,
    /// Number of positions in the range attaining the minimum.
    pub count: usize,
}

#[derive(Clone, Debug)]
pub struct ParenSupport {
    bits: RankSelectBits,
    block_size: usize,
    leaves: Vec<BlockSummary>,
    /// `levels[k]` aggregates `BRANCH` nodes of the level below it.
    levels: Vec<Vec<NodeSummary>>,
}

#[inline]
fn step(open: bool) -> i64 {
    if open {
        1
    } else {
        -1
    }
}

impl ParenSupport {
    pub fn new(parens: &Parens) -> Result<Self> {
        Self::with_block_size(parens, DEFAULT_BLOCK_SIZE)
    }

    /// `block_size` must be a multiple of 8 in `8..=16384`.
    pub fn with_block_size(parens: &Parens, block_size: usize) -> Result<Self> {
        if let Some(position) = parens.first_imbalance() {
            return Err(unbalanced(position, parens.len()));
        }
        Self::build(
            RankSelectBits::from_words(parens.to_words(), parens.len()),
            block_size,
        )
    }

    pub fn from_bits(bits: RankSelectBits) -> Result<Self> {
        Self::from_bits_with_block_size(bits, DEFAULT_BLOCK_SIZE)
    }

    pub fn from_bits_with_block_size(bits: RankSelectBits, block_size: usize) -> Result<Self> {
        let mut excess = 0i64;
        for i in 0..bits.len() {
            excess += step(bits.get(i));
            if excess < 0 {
                return Err(unbalanced(i, bits.len()));
            }
        }
        if excess != 0 {
            return Err(unbalanced(bits.len(), bits.len()));
        }
        Self::build(bits, block_size)
    }

    fn build(bits: RankSelectBits, block_size: usize) -> Result<Self> {
        assert!(
            block_size.is_multiple_of(8) && (8..=16384).contains(&block_size),
            "block size {block_size} must be a multiple of 8 in 8..=16384"
        );
        let len = bits.len();
        let mut s = ParenSupport {
            bits,
            block_size,
            leaves: Vec::with_capacity(len.div_ceil(block_size)),
            levels: Vec::new(),
        };
        let mut base = 0i64;
        let mut start = 0;
        while start < len {
            let end = (start + block_size).min(len);
            let (min, _, count) = s.scan_min(start, end, 0);
            let (max, exc) = s.scan_max(start, end);
            s.leaves.push(BlockSummary {
                excess: exc as i16,
                min: min as i16,
                max: max as i16,
                min_count: count as u16,
            });
            base += exc;
            start = end;
        }
        debug_assert_eq!(base, 0);

        if s.leaves.len() > 1 {
            let mut below: Vec<NodeSummary> =
                (0..s.leaves.len()).map(|b| s.leaf_summary(b)).collect();
            while below.len() > 1 {
                let above: Vec<NodeSummary> = below
                    .chunks(BRANCH)
                    .map(|c| c.iter().copied().reduce(NodeSummary::merge).unwrap())
                    .collect();
                s.levels.push(above.clone());
                below = above;
            }
        }
        Ok(s)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn block_size(&self) -> usize {
        self.block_size
    }

    pub fn bits(&self) -> &RankSelectBits {
        &self.bits
    }

    pub fn to_parens(&self) -> Parens {
        Parens::from_words(self.bits.words(), self.len())
    }

    #[inline]
    pub fn is_open(&self, i: usize) -> bool {
        i < self.len() && self.bits.get(i)
    }

    #[inline]
    pub fn is_close(&self, i: usize) -> bool {
        i < self.len() && !self.bits.get(i)
    }

    /// Excess of the prefix `[0, pos)`.
    #[inline]
    pub(crate) fn excess_before(&self, pos: usize) -> i64 {
        2 * self.bits.ones_before(pos) as i64 - pos as i64
    }

    pub fn excess(&self, i: usize) -> Result<i64> {
        check_index(i, self.len())?;
        Ok(self.excess_before(i + 1))
    }

    pub fn find_close(&self, i: usize) -> Result<usize> {
        self.require_open(i)?;
        let target = self.excess_before(i);
        Ok(self
            .fwd_from(i + 1, target)
            .expect("balanced sequence has a match for every open"))
    }

    pub fn find_open(&self, i: usize) -> Result<usize> {
        self.require_close(i)?;
        let e = self.excess_before(i + 1);
        Ok(match self.bwd_before(i, e) {
            Some(q) => q + 1,
            None => 0,
        })
    }

    /// Open position of the tightest pair strictly enclosing the pair at `i`.
    pub fn enclose(&self, i: usize) -> Result<Option<usize>> {
        self.require_open(i)?;
        let e = self.excess_before(i + 1);
        if e == 1 {
            return Ok(None);
        }
        Ok(Some(match self.bwd_before(i, e - 2) {
            Some(q) => q + 1,
            None => 0,
        }))
    }

    /// Leftmost position in `[i, j]` of minimum excess.
    pub fn min_excess_pos(&self, i: usize, j: usize) -> Result<usize> {
        Ok(self.range_min(i, j)?.pos)
    }

    pub fn range_min(&self, i: usize, j: usize) -> Result<RangeMin> {
        if i > j || j >= self.len() {
            return Err(Error::InvalidRange {
                lo: i,
                hi: j,
                len: self.len(),
            });
        }
        Ok(self.range_min_unchecked(i, j))
    }

    /// Largest `p < i` with `excess(p) = d`.
    pub fn bwd_excess_search(&self, i: usize, d: i64) -> Result<Option<usize>> {
        check_index(i, self.len())?;
        Ok(self.bwd_before(i, d))
    }

    /// Smallest `p > i` with `excess(p) = d`.
    pub fn fwd_excess_search(&self, i: usize, d: i64) -> Result<Option<usize>> {
        check_index(i, self.len())?;
        Ok(self.fwd_from(i + 1, d))
    }

    /// Bits used by the index beyond the raw sequence, including the
    /// rank/select directory of the underlying bit vector.
    pub fn index_bits(&self) -> usize {
        self.bits.index_bits()
            + self.leaves.len() * 64
            + self.levels.iter().map(|l| l.len() * 3 * 64).sum::<usize>()
            + 4 * 64
    }

    fn require_open(&self, i: usize) -> Result<()> {
        check_index(i, self.len())?;
        if self.bits.get(i) {
            Ok(())
        } else {
            Err(Error::Precondition {
                position: i,
                reason: "expected an open parenthesis",
            })
        }
    }

    fn require_close(&self, i: usize) -> Result<()> {
        check_index(i, self.len())?;
        if !self.bits.get(i) {
            Ok(())
        } else {
            Err(Error::Precondition {
                position: i,
                reason: "expected a close parenthesis",
            })
        }
    }

    // ---- tree navigation ----

    fn level_count(&self, level: usize) -> usize {
        if level == 0 {
            self.leaves.len()
        } else {
            self.levels[level - 1].len()
        }
    }

    fn leaf_summary(&self, b: usize) -> NodeSummary {
        let base = self.excess_before(b * self.block_size);
        let leaf = self.leaves[b];
        NodeSummary {
            min: base + leaf.min as i64,
            max: base + leaf.max as i64,
            min_count: leaf.min_count as u64,
        }
    }

    fn summary(&self, level: usize, idx: usize) -> NodeSummary {
        if level == 0 {
            self.leaf_summary(idx)
        } else {
            self.levels[level - 1][idx]
        }
    }

    fn leaf_end(&self, b: usize) -> usize {
        ((b + 1) * self.block_size).min(self.len())
    }

    /// Leftmost leaf under `(level, idx)` whose range contains `d`.
    fn descend_left(&self, mut level: usize, mut idx: usize, d: i64) -> usize {
        while level > 0 {
            let lo = idx * BRANCH;
            let hi = (lo + BRANCH).min(self.level_count(level - 1));
            idx = (lo..hi)
                .find(|&c| self.summary(level - 1, c).contains(d))
                .expect("parent range covers child ranges");
            level -= 1;
        }
        idx
    }

    fn descend_right(&self, mut level: usize, mut idx: usize, d: i64) -> usize {
        while level > 0 {
            let lo = idx * BRANCH;
            let hi = (lo + BRANCH).min(self.level_count(level - 1));
            idx = (lo..hi)
                .rev()
                .find(|&c| self.summary(level - 1, c).contains(d))
                .expect("parent range covers child ranges");
            level -= 1;
        }
        idx
    }

    /// Smallest position `>= start` with excess `d`.
    fn fwd_from(&self, start: usize, d: i64) -> Option<usize> {
        if start >= self.len() {
            return None;
        }
        let b = start / self.block_size;
        if let Ok(p) = self.scan_fwd(start, self.leaf_end(b), self.excess_before(start), d) {
            return Some(p);
        }
        let (mut level, mut idx) = (0, b);
        let leaf = loop {
            let group_end = ((idx / BRANCH + 1) * BRANCH).min(self.level_count(level));
            if let Some(k) = (idx + 1..group_end).find(|&k| self.summary(level, k).contains(d)) {
                break self.descend_left(level, k, d);
            }
            if level == self.levels.len() {
                return None;
            }
            idx /= BRANCH;
            level += 1;
        };
        let lo = leaf * self.block_size;
        let p = self.scan_fwd(lo, self.leaf_end(leaf), self.excess_before(lo), d);
        Some(p.expect("leaf range contains target"))
    }

    /// Largest position `< end` with excess `d`.
    fn bwd_before(&self, end: usize, d: i64) -> Option<usize> {
        if end == 0 {
            return None;
        }
        let b = (end - 1) / self.block_size;
        let lo = b * self.block_size;
        if let Some(p) = self.scan_bwd(lo, end, self.excess_before(end), d) {
            return Some(p);
        }
        let (mut level, mut idx) = (0, b);
        let leaf = loop {
            let group_start = idx / BRANCH * BRANCH;
            if let Some(k) = (group_start..idx)
                .rev()
                .find(|&k| self.summary(level, k).contains(d))
            {
                break self.descend_right(level, k, d);
            }
            if level == self.levels.len() {
                return None;
            }
            idx /= BRANCH;
            level += 1;
        };
        let hi = self.leaf_end(leaf);
        let p = self.scan_bwd(leaf * self.block_size, hi, self.excess_before(hi), d);
        Some(p.expect("leaf range contains target"))
    }

    fn range_min_unchecked(&self, i: usize, j: usize) -> RangeMin {
        let bs = self.block_size;
        let (bi, bj) = (i / bs, j / bs);
        if bi == bj {
            let (excess, pos, count) = self.scan_min(i, j + 1, self.excess_before(i));
            return RangeMin { pos, excess, count };
        }
        let (mut best, mut pos, mut count) =
            self.scan_min(i, self.leaf_end(bi), self.excess_before(i));

        if bi + 1 < bj {
            let mut mid: Option<(NodeSummary, usize, usize)> = None;
            self.cover(self.levels.len(), 0, bi + 1, bj - 1, &mut |level, idx| {
                let s = self.summary(level, idx);
                mid = Some(match mid {
                    None => (s, level, idx),
                    Some((acc, l, k)) => {
                        let merged = acc.merge(s);
                        if s.min < acc.min {
                            (merged, level, idx)
                        } else {
                            (merged, l, k)
                        }
                    }
                });
            });
            let (agg, level, idx) = mid.expect("nonempty block range");
            if agg.min < best {
                let leaf = self.descend_min(level, idx, agg.min);
                let lo = leaf * bs;
                let (_, p, _) = self.scan_min(lo, self.leaf_end(leaf), self.excess_before(lo));
                best = agg.min;
                pos = p;
                count = agg.min_count as usize;
            } else if agg.min == best {
                count += agg.min_count as usize;
            }
        }

        let lo = bj * bs;
        let (m, p, c) = self.scan_min(lo, j + 1, self.excess_before(lo));
        if m < best {
            best = m;
            pos = p;
            count = c;
        } else if m == best {
            count += c;
        }
        RangeMin {
            pos,
            excess: best,
            count,
        }
    }

    /// Visits, left to right, the maximal nodes covering leaves `[lo, hi]`.
    fn cover(
        &self,
        level: usize,
        idx: usize,
        lo: usize,
        hi: usize,
        f: &mut impl FnMut(usize, usize),
    ) {
        let span = BRANCH.pow(level as u32);
        let first = idx * span;
        let last = (first + span).min(self.leaves.len()) - 1;
        if last < lo || first > hi {
            return;
        }
        if lo <= first && last <= hi {
            f(level, idx);
            return;
        }
        let c_lo = idx * BRANCH;
        let c_hi = (c_lo + BRANCH).min(self.level_count(level - 1));
        for c in c_lo..c_hi {
            self.cover(level - 1, c, lo, hi, f);
        }
    }

    fn descend_min(&self, mut level: usize, mut idx: usize, min: i64) -> usize {
        while level > 0 {
            let lo = idx * BRANCH;
            let hi = (lo + BRANCH).min(self.level_count(level - 1));
            idx = (lo..hi)
                .find(|&c| self.summary(level - 1, c).min == min)
                .expect("minimum is attained in some child");
            level -= 1;
        }
        idx
    }

    // ---- in-block scans ----

    #[inline]
    fn byte_at(&self, p: usize) -> u8 {
        debug_assert!(p.is_multiple_of(8));
        (self.bits.words()[p / 64] >> (p % 64)) as u8
    }

    /// First `p` in `[from, to)` with `excess(p) = d`, given `e = excess_before(from)`.
    /// On failure returns the excess before `to`.
    fn scan_fwd(
        &self,
        from: usize,
        to: usize,
        mut e: i64,
        d: i64,
    ) -> std::result::Result<usize, i64> {
        let mut p = from;
        while p < to && !p.is_multiple_of(8) {
            e += step(self.bits.get(p));
            if e == d {
                return Ok(p);
            }
            p += 1;
        }
        while p + 8 <= to {
            let info = BYTE_INFO[self.byte_at(p) as usize];
            if e + info.min as i64 <= d && d <= e + info.max as i64 {
                break;
            }
            e += info.exc as i64;
            p += 8;
        }
        while p < to {
            e += step(self.bits.get(p));
            if e == d {
                return Ok(p);
            }
            p += 1;
        }
        Err(e)
    }

    /// Last `p` in `[lo, hi)` with `excess(p) = d`, given `e = excess_before(hi)`.
    fn scan_bwd(&self, lo: usize, hi: usize, mut e: i64, d: i64) -> Option<usize> {
        let mut p = hi;
        while p > lo && !p.is_multiple_of(8) {
            p -= 1;
            if e == d {
                return Some(p);
            }
            e -= step(self.bits.get(p));
        }
        while p >= lo + 8 {
            let info = BYTE_INFO[self.byte_at(p - 8) as usize];
            let before = e - info.exc as i64;
            if before + info.min as i64 <= d && d <= before + info.max as i64 {
                break;
            }
            e = before;
            p -= 8;
        }
        while p > lo {
            p -= 1;
            if e == d {
                return Some(p);
            }
            e -= step(self.bits.get(p));
        }
        None
    }

    /// (min excess, leftmost position, multiplicity) over `[from, to)`.
    fn scan_min(&self, from: usize, to: usize, mut e: i64) -> (i64, usize, usize) {
        debug_assert!(from < to);
        let mut best = i64::MAX;
        let mut pos = from;
        let mut count = 0;
        let mut p = from;
        let visit = |e: i64, p: usize, best: &mut i64, pos: &mut usize, count: &mut usize| {
            if e < *best {
                *best = e;
                *pos = p;
                *count = 1;
            } else if e == *best {
                *count += 1;
            }
        };
        while p < to && !p.is_multiple_of(8) {
            e += step(self.bits.get(p));
            visit(e, p, &mut best, &mut pos, &mut count);
            p += 1;
        }
        while p + 8 <= to {
            let info = BYTE_INFO[self.byte_at(p) as usize];
            let m = e + info.min as i64;
            if m < best {
                best = m;
                pos = p + info.min_pos as usize;
                count = info.min_count as usize;
            } else if m == best {
                count += info.min_count as usize;
            }
            e += info.exc as i64;
            p += 8;
        }
        while p < to {
            e += step(self.bits.get(p));
            visit(e, p, &mut best, &mut pos, &mut count);
            p += 1;
        }
        (best, pos, count)
    }

    /// (max relative excess, total relative excess) over `[from, to)`.
    fn scan_max(&self, from: usize, to: usize) -> (i64, i64) {
        let mut e = 0i64;
        let mut best = i64::MIN;
        let mut p = from;
        while p < to && !p.is_multiple_of(8) {
            e += step(self.bits.get(p));
            best = best.max(e);
            p += 1;
        }
        while p + 8 <= to {
            let info = BYTE_INFO[self.byte_at(p) as usize];
            best = best.max(e + info.max as i64);
            e += info.exc as i64;
            p += 8;
        }
        while p < to {
            e += step(self.bits.get(p));
            best = best.max(e);
            p += 1;
        }
        (best, e)
    }
}

fn unbalanced(position: usize, len: usize) -> Error {
    Error::Malformed {
        position,
        reason: if position >= len {
            "unclosed parenthesis at end of input"
        } else {
            "close parenthesis without a matching open"
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ps(s: &str) -> ParenSupport {
        ParenSupport::new(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn byte_table_spot_checks() {
        // 0b1111_1111: all opens
        let all_open = BYTE_INFO[0xff];
        assert_eq!((all_open.exc, all_open.min, all_open.max), (8, 1, 8));
        // "()()()()" = bits 1,0,1,0.. LSB first = 0b0101_0101
        let info = BYTE_INFO[0x55];
        assert_eq!(
            (info.exc, info.min, info.max, info.min_count, info.min_pos),
            (0, 0, 1, 4, 1)
        );
    }

    #[test]
    fn build_examples() {
        assert_eq!(ps("()").len(), 2);
        let err = ParenSupport::new(&"(()".parse().unwrap()).unwrap_err();
        assert!(matches!(err, Error::Malformed { position: 3, .. }));
        let err = ParenSupport::new(&"())(".parse().unwrap()).unwrap_err();
        assert!(matches!(err, Error::Malformed { position: 2, .. }));
        assert_eq!(ps("((())())").len(), 8);
    }

    #[test]
    fn running_example() {
        let s = ps("((())())");
        assert_eq!(s.excess(0).unwrap(), 1);
        assert_eq!(s.excess(2).unwrap(), 3);
        assert_eq!(s.excess(7).unwrap(), 0);
        assert_eq!(s.find_close(0).unwrap(), 7);
        assert_eq!(s.find_close(2).unwrap(), 3);
        assert_eq!(s.find_open(7).unwrap(), 0);
        assert_eq!(s.find_open(6).unwrap(), 5);
        assert_eq!(s.enclose(1).unwrap(), Some(0));
        assert_eq!(s.enclose(2).unwrap(), Some(1));
        assert_eq!(s.enclose(0).unwrap(), None);
        assert_eq!(s.min_excess_pos(1, 5).unwrap(), 4);
        assert_eq!(s.min_excess_pos(2, 2).unwrap(), 2);
        assert_eq!(s.min_excess_pos(0, 7).unwrap(), 7);
        assert_eq!(s.bwd_excess_search(2, 1).unwrap(), Some(0));
        assert_eq!(s.bwd_excess_search(5, 1).unwrap(), Some(4));
        assert_eq!(s.bwd_excess_search(0, 1).unwrap(), None);
        assert_eq!(s.bwd_excess_search(0, 0).unwrap(), None);

        let s = ps("()");
        assert_eq!(s.find_close(0).unwrap(), 1);
        assert_eq!(s.find_open(1).unwrap(), 0);
    }

    #[test]
    fn precondition_and_range_errors() {
        let s = ps("((())())");
        assert!(matches!(s.find_close(3), Err(Error::Precondition { .. })));
        assert!(matches!(s.find_open(0), Err(Error::Precondition { .. })));
        assert!(matches!(s.enclose(4), Err(Error::Precondition { .. })));
        assert!(matches!(s.excess(8), Err(Error::OutOfRange { .. })));
        assert!(matches!(
            s.min_excess_pos(5, 4),
            Err(Error::InvalidRange { .. })
        ));
        assert!(matches!(
            s.min_excess_pos(0, 8),
            Err(Error::InvalidRange { .. })
        ));
        assert!(s.bwd_excess_search(8, 0).is_err());
    }

    #[test]
    fn empty_sequence_is_allowed() {
        let s = ps("");
        assert!(s.is_empty());
        assert!(s.excess(0).is_err());
    }

    #[test]
    fn forest_top_level_has_no_enclosure() {
        let s = ps("()(())");
        assert_eq!(s.enclose(2).unwrap(), None);
        assert_eq!(s.enclose(3).unwrap(), Some(2));
    }

    #[test]
    fn deep_nesting_crosses_blocks() {
        let n = 3000;
        let p: Parens = std::iter::repeat_n(true, n)
            .chain(std::iter::repeat_n(false, n))
            .collect();
        for bs in [8, 64, 512] {
            let s = ParenSupport::with_block_size(&p, bs).unwrap();
            for i in 0..n {
                assert_eq!(s.find_close(i).unwrap(), 2 * n - 1 - i);
                assert_eq!(s.find_open(2 * n - 1 - i).unwrap(), i);
            }
            assert_eq!(s.enclose(n - 1).unwrap(), Some(n - 2));
            assert_eq!(s.min_excess_pos(1, 2 * n - 2).unwrap(), 2 * n - 2);
            assert_eq!(s.range_min(n - 1, n).unwrap().count, 1);
        }
    }
}
