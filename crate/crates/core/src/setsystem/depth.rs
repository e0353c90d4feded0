//! Depth of a set system.
//!
//! `T` is a transversal iff its complement contains no member, and
//! transversals `T_0..T_{d-1}` have empty intersection iff their complements
//! cover the ground set. The depth is therefore the least number of
//! member-free sets covering `{0..n-1}`, with one set needed at minimum. The
//! cover only has to draw from the maximal member-free sets.

use super::{full_mask, ExtendedNat, SetSystem};

/// `δ(I)`: least `d ≥ 1` such that `d` transversals have empty intersection.
///
/// `∞` iff some member has at most one element; `1` iff the family is empty.
pub fn depth(family: &SetSystem) -> ExtendedNat {
    let family = family.minimized();
    if family.members().iter().any(|m| m.count_ones() <= 1) {
        return ExtendedNat::Infinity;
    }
    let ground = full_mask(family.ground());
    let free = maximal_member_free_sets(&family);
    let mut best = family.ground().max(1);
    min_cover(&free, ground, 0, &mut best);
    ExtendedNat::Finite(best.max(1) as u64)
}

fn contains_member(set: u64, members: &[u64]) -> bool {
    members.iter().any(|&m| m & !set == 0)
}

/// All inclusion-maximal subsets of the ground set containing no member.
pub fn maximal_member_free_sets(family: &SetSystem) -> Vec<u64> {
    let members = family.minimized().members().to_vec();
    let n = family.ground();
    let mut out = Vec::new();
    if contains_member(0, &members) {
        return out;
    }
    extend_free(&members, n, 0, 0, &mut out);
    out
}

fn extend_free(members: &[u64], n: usize, next: usize, current: u64, out: &mut Vec<u64>) {
    if next == n {
        let maximal = (0..n)
            .filter(|&j| current >> j & 1 == 0)
            .all(|j| contains_member(current | 1 << j, members));
        if maximal {
            out.push(current);
        }
        return;
    }
    let with = current | 1 << next;
    if !contains_member(with, members) {
        extend_free(members, n, next + 1, with, out);
    }
    extend_free(members, n, next + 1, current, out);
}

fn min_cover(sets: &[u64], uncovered: u64, used: usize, best: &mut usize) {
    if uncovered == 0 {
        *best = (*best).min(used);
        return;
    }
    let widest = sets
        .iter()
        .map(|&s| (s & uncovered).count_ones())
        .max()
        .unwrap_or(0);
    if widest == 0 {
        return;
    }
    let remaining = uncovered.count_ones();
    if used + remaining.div_ceil(widest) as usize >= *best {
        return;
    }
    // branch on the uncovered element contained in the fewest sets
    let pivot = (0..64)
        .filter(|&j| uncovered >> j & 1 == 1)
        .min_by_key(|&j| sets.iter().filter(|&&s| s >> j & 1 == 1).count())
        .expect("uncovered is nonempty");
    let mut options: Vec<u64> = sets
        .iter()
        .copied()
        .filter(|&s| s >> pivot & 1 == 1)
        .collect();
    options.sort_by_key(|&s| std::cmp::Reverse((s & uncovered).count_ones()));
    for s in options {
        min_cover(sets, uncovered & !s, used + 1, best);
    }
}
