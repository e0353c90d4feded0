//! Line-oriented text formats for set systems and set tuples.
//!
//! ```text
//! n=4        m=3
//! 0 1        0
//! 1 2 3      1 2
//!            <- an empty line is the empty set
//! ```

use super::{SetSystem, SetTuple, MAX_GROUND};
use crate::error::{Error, Result};

fn parse_header(line: Option<&str>, key: &str) -> Result<usize> {
    let line = line.ok_or_else(|| Error::parse(format!("missing `{key}=` header line")))?;
    let value = line
        .trim()
        .strip_prefix(key)
        .and_then(|rest| rest.trim_start().strip_prefix('='))
        .ok_or_else(|| Error::parse(format!("expected `{key}=<size>`, found {line:?}")))?;
    let size: usize = value
        .trim()
        .parse()
        .map_err(|_| Error::parse(format!("bad size in header {line:?}")))?;
    if size > MAX_GROUND {
        return Err(Error::GroundTooLarge(size));
    }
    Ok(size)
}

fn parse_mask(line: &str, lineno: usize, ground: usize) -> Result<u64> {
    let mut mask = 0u64;
    for token in line.split_whitespace() {
        let j: usize = token
            .parse()
            .map_err(|_| Error::parse(format!("line {lineno}: bad index {token:?}")))?;
        if j >= ground {
            return Err(Error::parse(format!(
                "line {lineno}: index {j} outside ground set of size {ground}"
            )));
        }
        mask |= 1 << j;
    }
    Ok(mask)
}

fn parse_body(text: &str, key: &str) -> Result<(usize, Vec<u64>)> {
    let mut lines = text.lines();
    let ground = parse_header(lines.next(), key)?;
    let masks = lines
        .enumerate()
        .map(|(k, line)| parse_mask(line, k + 2, ground))
        .collect::<Result<Vec<_>>>()?;
    Ok((ground, masks))
}

/// Parses the `n=<ground>` set-system format. Duplicate members collapse.
pub fn parse_set_system(text: &str) -> Result<SetSystem> {
    let (ground, masks) = parse_body(text, "n")?;
    SetSystem::from_masks(ground, masks)
}

/// Parses the `m=<codomain>` set-tuple format; line `i` after the header is `S_i`.
pub fn parse_set_tuple(text: &str) -> Result<SetTuple> {
    let (m, masks) = parse_body(text, "m")?;
    SetTuple::from_masks(m, masks)
}
