//! Bounded checks for "embeds every finite `S`-cube" and the finite cube number.
//!
//! Every `S`-cube whose factors have at most `k` points is an induced
//! substructure of the `S`-cube over `{0..k-1}`, so embedding all cubes up to
//! factor size `k` is the same as embedding that single cube.

use serde::{Serialize, Serializer};

use super::{find_embedding, NodeBudget, Search};
use crate::cubes::{make_cube, CubeShape, MAX_CUBE_SIZE};
use crate::error::{Error, Result};
use crate::hyperspace::FiniteIndexedHyperspace as Space;
use crate::setsystem::SetTuple;

/// Whether `A` embeds every `S`-cube with all factor sizes `≤ max_factor`.
///
/// `Found(())` means yes, `NotFound` means no, `Indeterminate` means the node
/// budget ran out.
pub fn embeds_all_small_cubes(
    a: &Space,
    tuple: &SetTuple,
    max_factor: usize,
    budget: &mut NodeBudget,
) -> Result<Search<()>> {
    if tuple.n() != a.n() {
        return Err(Error::ArityMismatch {
            expected: a.n(),
            found: tuple.n(),
        });
    }
    if max_factor == 0 {
        return Ok(Search::Found(()));
    }
    let size = (max_factor as u128).checked_pow(tuple.m() as u32);
    if size.is_none_or(|s| s > a.size() as u128) {
        return Ok(Search::NotFound);
    }
    if size.is_some_and(|s| s > MAX_CUBE_SIZE as u128) {
        return Err(Error::Unsupported("cube too large to search".into()));
    }
    let cube = make_cube(&CubeShape::over(tuple.clone(), max_factor))?;
    Ok(find_embedding(&cube.space, a, budget)?.map(|_| ()))
}

/// Serializes as a number, `"inf"` or `"indeterminate"`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FcnValue {
    Finite(usize),
    Infinity,
    Indeterminate,
}

impl Serialize for FcnValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            FcnValue::Finite(d) => serializer.serialize_u64(*d as u64),
            FcnValue::Infinity => serializer.serialize_str("inf"),
            FcnValue::Indeterminate => serializer.serialize_str("indeterminate"),
        }
    }
}

/// Budget-relative finite cube number.
///
/// `value` is the least `d ≤ n` for which some `n`-tuple of subsets of `d`
/// passes [`embeds_all_small_cubes`] at factor size `max_factor`. A finite
/// factor bound can only make more tuples pass, so this is a lower bound on
/// the unbounded quantity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FcnEstimate {
    pub value: FcnValue,
    /// The first passing tuple, as sorted index lists over `{0..d-1}`.
    pub witness: Option<Vec<Vec<usize>>>,
    pub max_factor: usize,
    pub nonempty_only: bool,
}

/// Searches `d = 1..=n` and, for each `d`, every `n`-tuple of subsets of `d`
/// in lexicographic order. With `nonempty_only` the tuples are restricted to
/// nonempty sets.
pub fn fcn_estimate(
    a: &Space,
    max_factor: usize,
    nonempty_only: bool,
    budget: &mut NodeBudget,
) -> Result<FcnEstimate> {
    let n = a.n();
    let estimate = |value, witness| FcnEstimate {
        value,
        witness,
        max_factor,
        nonempty_only,
    };
    for d in 1..=n {
        let mut undecided = false;
        for tuple in SetTuple::enumerate_all(n, d, nonempty_only)? {
            match embeds_all_small_cubes(a, &tuple, max_factor, budget)? {
                Search::Found(()) => {
                    let sets = tuple
                        .sets()
                        .iter()
                        .map(|&s| crate::setsystem::mask_elements(s).collect())
                        .collect();
                    return Ok(estimate(FcnValue::Finite(d), Some(sets)));
                }
                Search::Indeterminate => {
                    undecided = true;
                    break;
                }
                Search::NotFound => {}
            }
        }
        if undecided {
            return Ok(estimate(FcnValue::Indeterminate, None));
        }
    }
    Ok(estimate(FcnValue::Infinity, None))
}
