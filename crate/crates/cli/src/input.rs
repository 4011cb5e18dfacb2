use std::fs;
use std::io::Read;
use std::path::Path;

use anyhow::{bail, Context, Result};
use succinct_bintree::Parens;

/// What a build input file holds.
pub enum Source {
    Array(Vec<i64>),
    /// Zaks sequence of a binary tree.
    Zaks(Parens),
}

/// `.i64` files are little-endian 64-bit integers. Anything else is text:
/// either whitespace-separated decimal integers or a parenthesis string.
pub fn read_source(path: &Path) -> Result<Source> {
    let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    if path.extension().is_some_and(|e| e == "i64") {
        if bytes.len() % 8 != 0 {
            bail!(
                "{}: length {} is not a multiple of 8",
                path.display(),
                bytes.len()
            );
        }
        if bytes.is_empty() {
            bail!("{}: empty input", path.display());
        }
        return Ok(Source::Array(
            bytes
                .chunks_exact(8)
                .map(|c| i64::from_le_bytes(c.try_into().unwrap()))
                .collect(),
        ));
    }
    let text = String::from_utf8(bytes)
        .with_context(|| format!("{} is not UTF-8 text", path.display()))?;
    let trimmed = text.trim();
    if trimmed.is_empty() {
        bail!("{}: empty input", path.display());
    }
    if trimmed.starts_with(['(', ')']) {
        let p: Parens = trimmed
            .parse()
            .with_context(|| format!("parsing {}", path.display()))?;
        return Ok(Source::Zaks(p));
    }
    let values = trimmed
        .split_whitespace()
        .enumerate()
        .map(|(i, tok)| {
            tok.parse::<i64>().with_context(|| {
                format!(
                    "{}: value {} ({tok:?}) is not an integer",
                    path.display(),
                    i + 1
                )
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Source::Array(values))
}

/// Reads a parenthesis string from a file, or standard input when `path` is
/// `None`.
pub fn read_parens(path: Option<&Path>) -> Result<Parens> {
    let text = match path {
        Some(p) => fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?,
        None => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .context("reading standard input")?;
            s
        }
    };
    Ok(text.trim().parse()?)
}
