//! Transversals and the exact transversal number (minimum hitting set).

use super::{mask_elements, ExtendedNat, SetSystem, SetTuple};

/// True iff `t` meets every member of `family`.
pub fn is_transversal(t: u64, family: &SetSystem) -> bool {
    family.members().iter().all(|&m| m & t != 0)
}

/// The least size of a transversal; `∞` when the empty set is a member.
///
/// Branch and bound: a greedy transversal seeds the incumbent, a packing of
/// pairwise disjoint unhit members gives the lower bound, and the search
/// branches on the elements of a smallest unhit member.
pub fn transversal_number(family: &SetSystem) -> ExtendedNat {
    let members = family.minimized().members().to_vec();
    if members.is_empty() {
        return ExtendedNat::Finite(0);
    }
    if members.contains(&0) {
        return ExtendedNat::Infinity;
    }
    let mut best = greedy_transversal(&members).count_ones() as usize;
    branch(&members, 0, 0, 0, &mut best);
    ExtendedNat::Finite(best as u64)
}

/// `τ(S) = τ({S_0, .., S_{n-1}})`.
pub fn tuple_transversal_number(tuple: &SetTuple) -> ExtendedNat {
    transversal_number(&tuple.as_family())
}

fn greedy_transversal(members: &[u64]) -> u64 {
    let mut chosen = 0u64;
    loop {
        let unhit: Vec<u64> = members.iter().copied().filter(|&m| m & chosen == 0).collect();
        if unhit.is_empty() {
            return chosen;
        }
        let support = unhit.iter().fold(0, |acc, &m| acc | m);
        let pick = mask_elements(support)
            .max_by_key(|&j| {
                let hits = unhit.iter().filter(|&&m| m >> j & 1 == 1).count();
                // prefer the lowest index among ties
                (hits, std::cmp::Reverse(j))
            })
            .expect("unhit members are nonempty");
        chosen |= 1 << pick;
    }
}

fn packing_bound(unhit: &mut [u64]) -> usize {
    unhit.sort_by_key(|m| m.count_ones());
    let mut used = 0u64;
    let mut count = 0;
    for &m in unhit.iter() {
        if m & used == 0 {
            used |= m;
            count += 1;
        }
    }
    count
}

fn branch(members: &[u64], chosen: u64, forbidden: u64, size: usize, best: &mut usize) {
    let mut unhit: Vec<u64> = members.iter().copied().filter(|&m| m & chosen == 0).collect();
    if unhit.is_empty() {
        *best = (*best).min(size);
        return;
    }
    if size + packing_bound(&mut unhit) >= *best {
        return;
    }
    // unhit is now sorted by size; branch on the smallest member's free elements
    let pivot = unhit
        .iter()
        .copied()
        .min_by_key(|&m| (m & !forbidden).count_ones())
        .expect("nonempty");
    let free = pivot & !forbidden;
    let mut tried = 0u64;
    for e in mask_elements(free) {
        branch(members, chosen | 1 << e, forbidden | tried, size + 1, best);
        tried |= 1 << e;
    }
}

/// The lexicographically least transversal of minimum size, as an increasing
/// list. `None` when no transversal exists.
pub fn least_minimum_transversal(family: &SetSystem) -> Option<Vec<usize>> {
    let size = transversal_number(family).finite()? as usize;
    let n = family.ground();
    if size == 0 {
        return Some(Vec::new());
    }
    let mut combo: Vec<usize> = (0..size).collect();
    loop {
        let mask = combo.iter().fold(0u64, |acc, &j| acc | 1 << j);
        if is_transversal(mask, family) {
            return Some(combo);
        }
        // next combination in lexicographic order
        let mut pos = size;
        loop {
            if pos == 0 {
                return None;
            }
            pos -= 1;
            if combo[pos] < n - size + pos {
                break;
            }
        }
        combo[pos] += 1;
        for k in pos + 1..size {
            combo[k] = combo[k - 1] + 1;
        }
    }
}
