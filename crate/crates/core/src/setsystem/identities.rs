//! Randomized and exhaustive checks of the identities relating transversal
//! number, depth, restriction and dandy-depth.
//!
//! * tuple identity: `τ(S) = δ(I(S))` for tuples of finite sets;
//! * restriction: `δ(I ∩ P(J)) ≥ δ(I) - 1` for every transversal `J`;
//! * dandy: `d < δ(I)` iff `I` is dandy to depth `d`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{
    dandy_to_depth, depth, full_mask, induced_system, is_transversal, mask_elements, restrict,
    tuple_transversal_number, ExtendedNat, SetSystem, SetTuple,
};
use crate::error::Result;

/// Exhaustive tuple enumeration is capped at this length/codomain.
pub const EXHAUSTIVE_TUPLE_LIMIT: usize = 4;
/// Exhaustive dandy enumeration is capped at this ground size.
pub const EXHAUSTIVE_DANDY_LIMIT: usize = 4;
/// Random tuples and restriction pairs use `n, m ≤` this.
pub const RANDOM_SIZE_LIMIT: usize = 6;
/// Random dandy families live over a ground set of this size.
pub const RANDOM_DANDY_GROUND: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdentityConfig {
    /// Largest size for the exhaustive parts.
    pub n_max: usize,
    /// Number of random cases per identity.
    pub samples: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub name: &'static str,
    pub checked: u64,
    pub counterexample: Option<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Runs all three suites with one seeded generator.
pub fn run_all(config: &IdentityConfig) -> Result<Vec<SuiteResult>> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    Ok(vec![
        check_tuple_identity(config, &mut rng)?,
        check_restriction_inequality(config, &mut rng),
        check_dandy_equivalence(config, &mut rng)?,
    ])
}

fn tuple_mismatch(tuple: &SetTuple) -> Result<Option<String>> {
    let tau = tuple_transversal_number(tuple);
    let delta = depth(&induced_system(tuple)?);
    Ok((tau != delta).then(|| {
        format!(
            "tuple {:?} over m={}: tau={tau} depth(I(S))={delta}",
            tuple.sets(),
            tuple.m()
        )
    }))
}

pub fn random_tuple(rng: &mut impl Rng, max_n: usize, max_m: usize, nonempty: bool) -> SetTuple {
    let n = rng.gen_range(1..=max_n);
    let m = rng.gen_range(1..=max_m);
    let sets = (0..n)
        .map(|_| loop {
            let s = rng.gen_range(0..=full_mask(m));
            if !nonempty || s != 0 {
                break s;
            }
        })
        .collect();
    SetTuple::from_masks(m, sets).expect("sets inside codomain")
}

/// `τ(S) = δ(I(S))`, exhaustively for tuples of nonempty subsets with
/// `n, m ≤ min(n_max, 4)` and on `samples` random tuples with `n, m ≤ 6`.
pub fn check_tuple_identity(config: &IdentityConfig, rng: &mut impl Rng) -> Result<SuiteResult> {
    let mut checked = 0;
    let limit = config.n_max.min(EXHAUSTIVE_TUPLE_LIMIT);
    for n in 1..=limit {
        for m in 1..=limit {
            for tuple in SetTuple::enumerate_all(n, m, true)? {
                checked += 1;
                if let Some(cex) = tuple_mismatch(&tuple)? {
                    return Ok(suite("tuple-transversal-equals-depth", checked, Some(cex)));
                }
            }
        }
    }
    for _ in 0..config.samples {
        // a few tuples with empty sets exercise the infinite branch
        let nonempty = rng.gen_bool(0.9);
        let tuple = random_tuple(rng, RANDOM_SIZE_LIMIT, RANDOM_SIZE_LIMIT, nonempty);
        checked += 1;
        if let Some(cex) = tuple_mismatch(&tuple)? {
            return Ok(suite("tuple-transversal-equals-depth", checked, Some(cex)));
        }
    }
    Ok(suite("tuple-transversal-equals-depth", checked, None))
}

fn suite(name: &'static str, checked: u64, counterexample: Option<String>) -> SuiteResult {
    SuiteResult {
        name,
        checked,
        counterexample,
    }
}

/// A random family over `{0..n-1}` whose members have at least `min_size`
/// elements.
pub fn random_family(rng: &mut impl Rng, n: usize, min_size: u32, max_members: usize) -> SetSystem {
    let count = rng.gen_range(0..=max_members);
    let members: Vec<u64> = (0..count)
        .filter_map(|_| {
            (0..32)
                .map(|_| rng.gen_range(0..=full_mask(n)))
                .find(|s| s.count_ones() >= min_size)
        })
        .collect();
    SetSystem::from_masks(n, members).expect("members inside ground")
}

/// Grows a random subset into a transversal; `None` if the family has none.
pub fn random_transversal(rng: &mut impl Rng, family: &SetSystem) -> Option<u64> {
    if family.members().contains(&0) {
        return None;
    }
    let mut j = rng.gen_range(0..=full_mask(family.ground()));
    for &m in family.members() {
        if m & j == 0 {
            let choices: Vec<usize> = mask_elements(m).collect();
            j |= 1 << choices[rng.gen_range(0..choices.len())];
        }
    }
    debug_assert!(is_transversal(j, family));
    Some(j)
}

/// `δ(restrict(I, J)) ≥ δ(I) - 1` on `samples` random pairs with `n ≤ 6`.
pub fn check_restriction_inequality(config: &IdentityConfig, rng: &mut impl Rng) -> SuiteResult {
    let mut checked = 0;
    while checked < config.samples as u64 {
        let n = rng.gen_range(1..=RANDOM_SIZE_LIMIT);
        let min_size = if rng.gen_bool(0.8) { 2 } else { 1 };
        let family = random_family(rng, n, min_size, 8);
        let Some(j) = random_transversal(rng, &family) else {
            continue;
        };
        checked += 1;
        let whole = depth(&family);
        let part = depth(&restrict(&family, j).system);
        if part < whole.saturating_sub(1) {
            let cex = format!(
                "family {:?} over n={n}, J={j:#b}: depth={whole}, restricted depth={part}",
                family.member_sets()
            );
            return suite("restriction-depth-drop", checked, Some(cex));
        }
    }
    suite("restriction-depth-drop", checked, None)
}

fn dandy_mismatch(family: &SetSystem) -> Result<Option<String>> {
    let delta = depth(family);
    for d in 0..=family.ground() {
        let dandy = dandy_to_depth(family, d)?;
        if dandy != (ExtendedNat::Finite(d as u64) < delta) {
            return Ok(Some(format!(
                "family {:?} over n={}: d={d} dandy={dandy} depth={delta}",
                family.member_sets(),
                family.ground()
            )));
        }
    }
    Ok(None)
}

/// Every family of subsets with at least two elements over a ground set
/// `{0..n-1}` with `n ≤ min(n_max, 4)`.
pub fn exhaustive_pair_families(n: usize) -> impl Iterator<Item = SetSystem> {
    let candidates: Vec<u64> = (0..1u64 << n).filter(|m| m.count_ones() >= 2).collect();
    let count = candidates.len();
    (0u64..1 << count).map(move |pick| {
        let masks = mask_elements(pick).map(|k| candidates[k]);
        SetSystem::from_masks(n, masks).expect("inside ground")
    })
}

/// `d < δ(I)` iff dandy to depth `d`, for every `d ≤ n`: exhaustive over
/// families of `≥2`-element members with `n ≤ min(n_max, 4)`, then `samples`
/// random families over 5 points.
pub fn check_dandy_equivalence(config: &IdentityConfig, rng: &mut impl Rng) -> Result<SuiteResult> {
    let mut checked = 0;
    for n in 1..=config.n_max.min(EXHAUSTIVE_DANDY_LIMIT) {
        for family in exhaustive_pair_families(n) {
            checked += 1;
            if let Some(cex) = dandy_mismatch(&family)? {
                return Ok(suite("dandy-iff-below-depth", checked, Some(cex)));
            }
        }
    }
    for _ in 0..config.samples {
        let min_size = if rng.gen_bool(0.9) { 2 } else { 1 };
        let family = random_family(rng, RANDOM_DANDY_GROUND, min_size, 8);
        checked += 1;
        if let Some(cex) = dandy_mismatch(&family)? {
            return Ok(suite("dandy-iff-below-depth", checked, Some(cex)));
        }
    }
    Ok(suite("dandy-iff-below-depth", checked, None))
}
