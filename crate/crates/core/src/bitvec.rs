//! Immutable bit sequence with rank and select.
//!
//! Layout: bits packed 64 per word, LSB first. Rank uses a two-level
//! directory: absolute counts every [`SUPERBLOCK_BITS`] bits and 16-bit
//! relative counts every [`BLOCK_BITS`] bits. Select samples the block of
//! every [`SELECT_SAMPLE`]-th occurrence, binary searches the blocks between
//! two samples and finishes with a word scan.
//!
//! Positions are 0-based and ranks are 1-based.

use crate::error::{check_index, Error, Result};

pub const BLOCK_BITS: usize = 512;
const WORDS_PER_BLOCK: usize = BLOCK_BITS / 64;
pub const SUPERBLOCK_BITS: usize = 1 << 16;
const BLOCKS_PER_SUPER: usize = SUPERBLOCK_BITS / BLOCK_BITS;
pub const SELECT_SAMPLE: usize = 4096;

const MAGIC: &[u8; 4] = b"SBV1";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankSelectBits {
    words: Vec<u64>,
    len: usize,
    ones: usize,
    superblocks: Vec<u64>,
    blocks: Vec<u16>,
    select1_samples: Vec<u32>,
    select0_samples: Vec<u32>,
}

impl RankSelectBits {
    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let mut words = Vec::new();
        let mut len = 0usize;
        for b in bits {
            if len.is_multiple_of(64) {
                words.push(0u64);
            }
            if b {
                *words.last_mut().unwrap() |= 1 << (len % 64);
            }
            len += 1;
        }
        Self::from_words(words, len)
    }

    /// Builds from packed words. Bits at positions `>= len` are cleared.
    pub fn from_words(mut words: Vec<u64>, len: usize) -> Self {
        words.resize(len.div_ceil(64), 0);
        if !len.is_multiple_of(64) {
            let last = words.len() - 1;
            words[last] &= (1u64 << (len % 64)) - 1;
        }
        let n_blocks = len.div_ceil(BLOCK_BITS);
        let mut superblocks = Vec::with_capacity(len / SUPERBLOCK_BITS + 2);
        let mut blocks = Vec::with_capacity(n_blocks);
        let mut select1_samples = Vec::new();
        let mut select0_samples = Vec::new();

        let mut total = 0usize;
        let mut zeros = 0usize;
        let mut in_super = 0usize;
        for b in 0..n_blocks {
            if b % BLOCKS_PER_SUPER == 0 {
                superblocks.push(total as u64);
                in_super = 0;
            }
            blocks.push(in_super as u16);
            let start = b * WORDS_PER_BLOCK;
            let end = (start + WORDS_PER_BLOCK).min(words.len());
            let block_len = (len - b * BLOCK_BITS).min(BLOCK_BITS);
            let pop: usize = words[start..end]
                .iter()
                .map(|w| w.count_ones() as usize)
                .sum();
            let pop0 = block_len - pop;
            // sample k records the block holding occurrence k*SELECT_SAMPLE + 1
            while select1_samples.len() * SELECT_SAMPLE < total + pop {
                select1_samples.push(b as u32);
            }
            while select0_samples.len() * SELECT_SAMPLE < zeros + pop0 {
                select0_samples.push(b as u32);
            }
            total += pop;
            zeros += pop0;
            in_super += pop;
        }
        superblocks.push(total as u64);

        RankSelectBits {
            words,
            len,
            ones: total,
            superblocks,
            blocks,
            select1_samples,
            select0_samples,
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn count_ones(&self) -> usize {
        self.ones
    }

    pub fn count_zeros(&self) -> usize {
        self.len - self.ones
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn access(&self, i: usize) -> Result<bool> {
        check_index(i, self.len)?;
        Ok(self.get(i))
    }

    /// Unchecked access; panics past the last word.
    #[inline]
    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    /// Number of ones in positions `[0, pos)`, for `pos <= len`.
    #[inline]
    pub fn ones_before(&self, pos: usize) -> usize {
        debug_assert!(pos <= self.len);
        if pos == self.len {
            return self.ones;
        }
        let block = pos / BLOCK_BITS;
        let mut r =
            self.superblocks[block / BLOCKS_PER_SUPER] as usize + self.blocks[block] as usize;
        let word = pos / 64;
        for w in &self.words[block * WORDS_PER_BLOCK..word] {
            r += w.count_ones() as usize;
        }
        let rem = pos % 64;
        if rem != 0 {
            r += (self.words[word] & ((1u64 << rem) - 1)).count_ones() as usize;
        }
        r
    }

    /// Number of positions `<= i` holding `bit`.
    pub fn rank(&self, bit: bool, i: usize) -> Result<usize> {
        check_index(i, self.len)?;
        let ones = self.ones_before(i + 1);
        Ok(if bit { ones } else { i + 1 - ones })
    }

    pub fn rank1(&self, i: usize) -> Result<usize> {
        self.rank(true, i)
    }

    pub fn rank0(&self, i: usize) -> Result<usize> {
        self.rank(false, i)
    }

    #[inline]
    fn block_rank(&self, bit: bool, block: usize) -> usize {
        let ones =
            self.superblocks[block / BLOCKS_PER_SUPER] as usize + self.blocks[block] as usize;
        if bit {
            ones
        } else {
            block * BLOCK_BITS - ones
        }
    }

    /// Position of the `j`-th occurrence of `bit` (`j >= 1`).
    pub fn select(&self, bit: bool, j: usize) -> Result<usize> {
        let total = if bit { self.ones } else { self.len - self.ones };
        if j == 0 || j > total {
            return Err(Error::NotFound);
        }
        let samples = if bit {
            &self.select1_samples
        } else {
            &self.select0_samples
        };
        let s = (j - 1) / SELECT_SAMPLE;
        let mut lo = samples[s] as usize;
        let mut hi = samples
            .get(s + 1)
            .map(|&b| b as usize)
            .unwrap_or(self.blocks.len() - 1);
        // last block whose preceding count is < j
        while lo < hi {
            let mid = (lo + hi).div_ceil(2);
            if self.block_rank(bit, mid) < j {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        let mut remaining = j - self.block_rank(bit, lo);
        let start = lo * WORDS_PER_BLOCK;
        let end = (start + WORDS_PER_BLOCK).min(self.words.len());
        for (wi, &raw) in self.words[start..end].iter().enumerate() {
            let word_index = start + wi;
            let w = if bit {
                raw
            } else {
                !raw & self.valid_mask(word_index)
            };
            let pop = w.count_ones() as usize;
            if remaining <= pop {
                return Ok(word_index * 64 + select_in_word(w, remaining - 1));
            }
            remaining -= pop;
        }
        unreachable!("select directory inconsistent")
    }

    pub fn select1(&self, j: usize) -> Result<usize> {
        self.select(true, j)
    }

    pub fn select0(&self, j: usize) -> Result<usize> {
        self.select(false, j)
    }

    #[inline]
    fn valid_mask(&self, word_index: usize) -> u64 {
        let valid = self.len - word_index * 64;
        if valid >= 64 {
            u64::MAX
        } else {
            (1u64 << valid) - 1
        }
    }

    /// Bits spent on the rank/select directory, excluding the payload.
    pub fn index_bits(&self) -> usize {
        self.superblocks.len() * 64
            + self.blocks.len() * 16
            + (self.select0_samples.len() + self.select1_samples.len()) * 32
            + 4 * 64
    }

    /// `"SBV1"`, little-endian u64 bit count, then LSB-first u64 words.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(12 + self.words.len() * 8);
        out.extend_from_slice(MAGIC);
        out.extend_from_slice(&(self.len as u64).to_le_bytes());
        for w in &self.words {
            out.extend_from_slice(&w.to_le_bytes());
        }
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        if bytes.len() < 12 || &bytes[..4] != MAGIC {
            return Err(Error::Format("missing SBV1 header".into()));
        }
        let len = u64::from_le_bytes(bytes[4..12].try_into().unwrap()) as usize;
        let n_words = len.div_ceil(64);
        let body = &bytes[12..];
        if body.len() != n_words * 8 {
            return Err(Error::Format(format!(
                "expected {} payload bytes, found {}",
                n_words * 8,
                body.len()
            )));
        }
        let words = body
            .chunks_exact(8)
            .map(|c| u64::from_le_bytes(c.try_into().unwrap()))
            .collect();
        Ok(Self::from_words(words, len))
    }
}

/// Position of the `k`-th (0-based) set bit of `w`.
#[inline]
pub(crate) fn select_in_word(mut w: u64, k: usize) -> usize {
    for _ in 0..k {
        w &= w - 1;
    }
    w.trailing_zeros() as usize
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn parse(s: &str) -> RankSelectBits {
        RankSelectBits::from_bits(s.bytes().map(|c| c == b'1'))
    }

    #[test]
    fn empty() {
        let b = RankSelectBits::from_bits(std::iter::empty());
        assert_eq!(b.len(), 0);
        assert!(b.access(0).is_err());
        assert!(b.rank(true, 0).is_err());
        assert_eq!(b.select(true, 1), Err(Error::NotFound));
        assert_eq!(b.select(false, 1), Err(Error::NotFound));
    }

    #[test]
    fn small_examples() {
        let b = parse("1010");
        assert_eq!(b.rank1(3).unwrap(), 2);
        assert!(b.access(0).unwrap());
        assert!(!b.access(3).unwrap());
        assert_eq!(b.select1(2).unwrap(), 2);
        assert_eq!(b.select0(1).unwrap(), 1);
        assert_eq!(b.select1(3), Err(Error::NotFound));
        assert_eq!(b.select1(0), Err(Error::NotFound));
        assert!(b.access(4).is_err());

        let b = parse("1100");
        assert_eq!(b.rank(true, 1).unwrap(), 2);
        assert_eq!(b.rank(false, 3).unwrap(), 2);
    }

    fn check_against_scan(bits: &[bool]) {
        let b = RankSelectBits::from_bits(bits.iter().copied());
        let mut ones = 0;
        let mut pos1 = Vec::new();
        let mut pos0 = Vec::new();
        for (i, &bit) in bits.iter().enumerate() {
            assert_eq!(b.access(i).unwrap(), bit);
            if bit {
                ones += 1;
                pos1.push(i);
            } else {
                pos0.push(i);
            }
            assert_eq!(b.rank1(i).unwrap(), ones, "rank1({i})");
            assert_eq!(b.rank0(i).unwrap(), i + 1 - ones, "rank0({i})");
        }
        for (j, &p) in pos1.iter().enumerate() {
            assert_eq!(b.select1(j + 1).unwrap(), p);
        }
        for (j, &p) in pos0.iter().enumerate() {
            assert_eq!(b.select0(j + 1).unwrap(), p);
        }
        assert!(b.select1(pos1.len() + 1).is_err());
        assert!(b.select0(pos0.len() + 1).is_err());
    }

    #[test]
    fn random_against_scan() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for &(len, density) in &[
            (1usize, 0.5),
            (63, 0.5),
            (64, 0.3),
            (65, 0.9),
            (10_000, 0.5),
            (10_000, 0.01),
            (10_000, 0.99),
            (140_000, 0.5),
        ] {
            let bits: Vec<bool> = (0..len).map(|_| rng.gen_bool(density)).collect();
            check_against_scan(&bits);
        }
    }

    #[test]
    fn million_bits_rank_matches_prefix_sums() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let bits: Vec<bool> = (0..1_000_000).map(|_| rng.gen()).collect();
        let b = RankSelectBits::from_bits(bits.iter().copied());
        let mut ones = 0;
        for (i, &bit) in bits.iter().enumerate() {
            ones += bit as usize;
            assert_eq!(b.rank1(i).unwrap(), ones);
        }
    }

    #[test]
    fn all_same_bits() {
        check_against_scan(&vec![true; 9000]);
        check_against_scan(&vec![false; 9000]);
    }

    #[test]
    fn serialization_round_trip_and_rebuild() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let bits: Vec<bool> = (0..5000).map(|_| rng.gen()).collect();
        let b = RankSelectBits::from_bits(bits.iter().copied());
        let bytes = b.to_bytes();
        assert_eq!(&bytes[..4], b"SBV1");
        assert_eq!(u64::from_le_bytes(bytes[4..12].try_into().unwrap()), 5000);
        assert_eq!(bytes.len(), 12 + 5000usize.div_ceil(64) * 8);
        let back = RankSelectBits::from_bytes(&bytes).unwrap();
        assert_eq!(back, b);
        assert!(RankSelectBits::from_bytes(&bytes[..20]).is_err());
        assert!(RankSelectBits::from_bytes(b"XXXX00000000").is_err());
    }

    #[test]
    fn index_overhead_is_small() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let n = 1 << 20;
        let b = RankSelectBits::from_bits((0..n).map(|_| rng.gen::<bool>()));
        assert!(b.index_bits() * 4 <= n, "{} index bits", b.index_bits());
    }
}
