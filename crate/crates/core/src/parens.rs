//! Plain parenthesis sequences and their two interchange formats.
//!
//! ASCII uses `'('` and `')'`. The packed format stores one bit per
//! parenthesis, `1` for open and `0` for close, least-significant bit first
//! within each byte (equivalently, within each little-endian 64-bit word).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub const OPEN: bool = true;
pub const CLOSE: bool = false;

/// An owned parenthesis sequence. `true` is `'('`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Parens(Vec<bool>);

impl Parens {
    pub fn new() -> Self {
        Parens(Vec::new())
    }

    pub fn with_capacity(cap: usize) -> Self {
        Parens(Vec::with_capacity(cap))
    }

    #[inline]
    pub fn push(&mut self, open: bool) {
        self.0.push(open);
    }

    pub fn push_open(&mut self) {
        self.0.push(OPEN);
    }

    pub fn push_close(&mut self) {
        self.0.push(CLOSE);
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn get(&self, i: usize) -> Option<bool> {
        self.0.get(i).copied()
    }

    pub fn as_slice(&self) -> &[bool] {
        &self.0
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = bool> + '_ {
        self.0.iter().copied()
    }

    pub fn into_inner(self) -> Vec<bool> {
        self.0
    }

    /// Reverses the sequence and swaps open with close, which maps a
    /// balanced sequence to the encoding of its mirror image.
    pub fn reversed(&self) -> Parens {
        Parens(self.0.iter().rev().map(|&b| !b).collect())
    }

    /// Sequence read right to left without swapping symbols.
    pub fn reversed_raw(&self) -> Parens {
        Parens(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Parens) -> Parens {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Parens(v)
    }

    /// Returns the first prefix length at which the running excess goes
    /// negative, or the total length if the final excess is nonzero.
    pub fn first_imbalance(&self) -> Option<usize> {
        let mut excess = 0i64;
        for (i, &b) in self.0.iter().enumerate() {
            excess += if b { 1 } else { -1 };
            if excess < 0 {
                return Some(i);
            }
        }
        if excess != 0 {
            Some(self.0.len())
        } else {
            None
        }
    }

    pub fn is_balanced(&self) -> bool {
        self.first_imbalance().is_none()
    }

    /// Packs into bytes, LSB-first. Trailing bits of the last byte are zero.
    pub fn to_packed_bytes(&self) -> Vec<u8> {
        let mut out = vec![0u8; self.0.len().div_ceil(8)];
        for (i, &b) in self.0.iter().enumerate() {
            if b {
                out[i / 8] |= 1 << (i % 8);
            }
        }
        out
    }

    pub fn from_packed_bytes(bytes: &[u8], len: usize) -> Result<Parens> {
        if bytes.len() < len.div_ceil(8) {
            return Err(Error::Format(format!(
                "{} bytes cannot hold {} bits",
                bytes.len(),
                len
            )));
        }
        Ok(Parens(
            (0..len).map(|i| bytes[i / 8] >> (i % 8) & 1 == 1).collect(),
        ))
    }

    /// Packs into 64-bit words, LSB-first.
    pub fn to_words(&self) -> Vec<u64> {
        let mut out = vec![0u64; self.0.len().div_ceil(64)];
        for (i, &b) in self.0.iter().enumerate() {
            if b {
                out[i / 64] |= 1 << (i % 64);
            }
        }
        out
    }

    pub fn from_words(words: &[u64], len: usize) -> Parens {
        Parens(
            (0..len)
                .map(|i| words[i / 64] >> (i % 64) & 1 == 1)
                .collect(),
        )
    }
}

impl From<Vec<bool>> for Parens {
    fn from(v: Vec<bool>) -> Self {
        Parens(v)
    }
}

impl FromIterator<bool> for Parens {
    fn from_iter<I: IntoIterator<Item = bool>>(iter: I) -> Self {
        Parens(iter.into_iter().collect())
    }
}

impl FromStr for Parens {
    type Err = Error;

    /// Parses ASCII parentheses. ASCII whitespace is ignored.
    fn from_str(s: &str) -> Result<Parens> {
        let mut v = Vec::with_capacity(s.len());
        for (i, c) in s.char_indices() {
            match c {
                '(' => v.push(OPEN),
                ')' => v.push(CLOSE),
                c if c.is_ascii_whitespace() => {}
                _ => {
                    return Err(Error::Malformed {
                        position: i,
                        reason: "expected '(' or ')'",
                    })
                }
            }
        }
        Ok(Parens(v))
    }
}

impl fmt::Display for Parens {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.0.iter().map(|&b| if b { '(' } else { ')' }).collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for Parens {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Parens({self})")
    }
}
