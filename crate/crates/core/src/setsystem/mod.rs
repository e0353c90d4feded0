//! Families of subsets of a small ground set and their invariants.
//!
//! Subsets of `{0..n-1}` are `u64` bitmasks (bit `j` set iff `j` is present),
//! which caps every ground set at 64 points.

pub(crate) mod dandy;
mod depth;
pub mod identities;
mod ops;
mod text;
mod transversal;

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub use dandy::{dandy_to_depth, MAX_DANDY_GROUND};
pub use depth::{depth, maximal_member_free_sets};
pub use ops::{induced_system, restrict, Restriction};
pub use text::{parse_set_system, parse_set_tuple};
pub use transversal::{
    is_transversal, least_minimum_transversal, transversal_number, tuple_transversal_number,
};

/// Largest ground set supported by bitmask subsets.
pub const MAX_GROUND: usize = 64;

/// The mask `{0..n-1}`.
#[inline]
pub fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Elements of a mask in increasing order.
pub fn mask_elements(mask: u64) -> impl Iterator<Item = usize> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let j = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(j)
        }
    })
}

pub fn mask_from_elements(ground: usize, elements: &[usize]) -> Result<u64> {
    let mut mask = 0u64;
    for &j in elements {
        if j >= ground {
            return Err(Error::IndexOutOfRange {
                what: "ground element",
                index: j,
                limit: ground,
            });
        }
        mask |= 1 << j;
    }
    Ok(mask)
}

fn check_ground(ground: usize) -> Result<()> {
    if ground > MAX_GROUND {
        return Err(Error::GroundTooLarge(ground));
    }
    Ok(())
}

/// A deduplicated family of subsets of `{0..ground-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetSystem {
    ground: usize,
    // sorted ascending, no duplicates
    members: Vec<u64>,
}

impl SetSystem {
    pub fn new(ground: usize, members: Vec<Vec<usize>>) -> Result<Self> {
        check_ground(ground)?;
        let masks = members
            .iter()
            .map(|m| mask_from_elements(ground, m))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_masks_unchecked(ground, masks))
    }

    pub fn from_masks(ground: usize, masks: impl IntoIterator<Item = u64>) -> Result<Self> {
        check_ground(ground)?;
        let full = full_mask(ground);
        let masks: Vec<u64> = masks.into_iter().collect();
        if let Some(&bad) = masks.iter().find(|&&m| m & !full != 0) {
            return Err(Error::IndexOutOfRange {
                what: "ground element",
                index: 63 - (bad & !full).leading_zeros() as usize,
                limit: ground,
            });
        }
        Ok(Self::from_masks_unchecked(ground, masks))
    }

    fn from_masks_unchecked(ground: usize, mut masks: Vec<u64>) -> Self {
        masks.sort_unstable();
        masks.dedup();
        SetSystem {
            ground,
            members: masks,
        }
    }

    pub fn empty(ground: usize) -> Self {
        SetSystem {
            ground: ground.min(MAX_GROUND),
            members: Vec::new(),
        }
    }

    /// `[n]^k`: every `k`-element subset of `{0..n-1}`.
    pub fn uniform(n: usize, k: usize) -> Result<Self> {
        if n > 30 {
            return Err(Error::Unsupported(format!(
                "uniform family over {n} points is too large to enumerate"
            )));
        }
        let masks = (0..1u64 << n).filter(|m| m.count_ones() as usize == k);
        Ok(Self::from_masks_unchecked(n, masks.collect()))
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, member: u64) -> bool {
        self.members.binary_search(&member).is_ok()
    }

    /// Members as sorted index lists.
    pub fn member_sets(&self) -> Vec<Vec<usize>> {
        self.members
            .iter()
            .map(|&m| mask_elements(m).collect())
            .collect()
    }

    /// The family with every member that strictly contains another member
    /// removed. Depth and transversal number are unchanged by this.
    pub fn minimized(&self) -> Self {
        let members = self
            .members
            .iter()
            .copied()
            .filter(|&m| {
                !self
                    .members
                    .iter()
                    .any(|&other| other != m && other & !m == 0)
            })
            .collect();
        SetSystem {
            ground: self.ground,
            members,
        }
    }
}

impl fmt::Display for SetSystem {
    /// The text format: `n=<ground>` then one member per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={}", self.ground)?;
        for &m in &self.members {
            writeln!(f, "{}", join_elements(m))?;
        }
        Ok(())
    }
}

fn join_elements(mask: u64) -> String {
    mask_elements(mask)
        .map(|j| j.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// An `n`-tuple `⟨S_0, .., S_{n-1}⟩` of subsets of `{0..m-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetTuple {
    m: usize,
    sets: Vec<u64>,
}

impl SetTuple {
    pub fn new(m: usize, sets: Vec<Vec<usize>>) -> Result<Self> {
        check_ground(m)?;
        let sets = sets
            .iter()
            .map(|s| mask_from_elements(m, s))
            .collect::<Result<Vec<_>>>()?;
        Ok(SetTuple { m, sets })
    }

    pub fn from_masks(m: usize, sets: Vec<u64>) -> Result<Self> {
        check_ground(m)?;
        if sets.iter().any(|&s| s & !full_mask(m) != 0) {
            return Err(Error::invalid(format!("set outside codomain {{0..{m}}}")));
        }
        Ok(SetTuple { m, sets })
    }

    /// `⟨{0}, {1}, .., {n-1}⟩` over codomain `n`: the tuple of the `n`-cube.
    pub fn standard(n: usize) -> Result<Self> {
        Self::from_masks(n, (0..n).map(|i| 1u64 << i).collect())
    }

    /// Tuple length.
    pub fn n(&self) -> usize {
        self.sets.len()
    }

    /// Codomain size.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn sets(&self) -> &[u64] {
        &self.sets
    }

    pub fn set(&self, i: usize) -> u64 {
        self.sets[i]
    }

    pub fn all_nonempty(&self) -> bool {
        self.sets.iter().all(|&s| s != 0)
    }

    /// The family `{S_0, .., S_{n-1}}` over ground `m`.
    pub fn as_family(&self) -> SetSystem {
        SetSystem::from_masks_unchecked(self.m, self.sets.clone())
    }

    /// Every `n`-tuple of subsets of `{0..m-1}`, in lexicographic mask order.
    pub fn enumerate_all(n: usize, m: usize, nonempty: bool) -> Result<Vec<SetTuple>> {
        check_ground(m)?;
        let choices: Vec<u64> = (0..=full_mask(m))
            .filter(|&s| !nonempty || s != 0)
            .collect();
        let total = (choices.len() as u128).checked_pow(n as u32);
        if total.is_none_or(|t| t > 1 << 24) {
            return Err(Error::Unsupported(format!(
                "too many {n}-tuples of subsets of {m} to enumerate"
            )));
        }
        let mut out = Vec::new();
        let mut idx = vec![0usize; n];
        loop {
            out.push(SetTuple {
                m,
                sets: idx.iter().map(|&k| choices[k]).collect(),
            });
            let mut pos = n;
            loop {
                if pos == 0 {
                    return Ok(out);
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < choices.len() {
                    break;
                }
                idx[pos] = 0;
            }
        }
    }
}

impl fmt::Display for SetTuple {
    /// The text format: `m=<codomain>` then one set per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "m={}", self.m)?;
        for &s in &self.sets {
            writeln!(f, "{}", join_elements(s))?;
        }
        Ok(())
    }
}

/// A non-negative integer or `∞`, with `∞ - k = ∞`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtendedNat {
    Finite(u64),
    Infinity,
}

impl ExtendedNat {
    pub fn is_finite(self) -> bool {
        matches!(self, ExtendedNat::Finite(_))
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            ExtendedNat::Finite(v) => Some(v),
            ExtendedNat::Infinity => None,
        }
    }

    /// Truncated subtraction; `∞ - k = ∞`.
    pub fn saturating_sub(self, k: u64) -> Self {
        match self {
            ExtendedNat::Finite(v) => ExtendedNat::Finite(v.saturating_sub(k)),
            ExtendedNat::Infinity => ExtendedNat::Infinity,
        }
    }
}

impl From<u64> for ExtendedNat {
    fn from(v: u64) -> Self {
        ExtendedNat::Finite(v)
    }
}

impl fmt::Display for ExtendedNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedNat::Finite(v) => write!(f, "{v}"),
            ExtendedNat::Infinity => f.write_str("inf"),
        }
    }
}

impl Serialize for ExtendedNat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ExtendedNat::Finite(v) => s.serialize_u64(*v),
            ExtendedNat::Infinity => s.serialize_str("inf"),
        }
    }
}
