use super::SetSystem;
use crate::error::{Error, Result};

/// Largest ground set for which every permutation is examined.
pub const MAX_DANDY_GROUND: usize = 8;

/// Whether `family` is dandy to depth `d`: for every permutation `π` of the
/// ground set there are `0 = i_0 ≤ i_1 ≤ .. ≤ i_d < n` such that each window
/// `{π(j) : i_k ≤ j ≤ i_{k+1}}` contains a member.
///
/// The last index only has to stay below `n`; the windows need not reach the
/// end of the permutation. Over the empty ground set the single index `0` is
/// allowed and every window is empty.
pub fn dandy_to_depth(family: &SetSystem, d: usize) -> Result<bool> {
    let n = family.ground();
    if n > MAX_DANDY_GROUND {
        return Err(Error::Unsupported(format!(
            "dandy check enumerates all permutations; ground {n} exceeds {MAX_DANDY_GROUND}"
        )));
    }
    if n == 0 {
        return Ok(d == 0 || family.contains(0));
    }
    let members = family.minimized().members().to_vec();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        if !chain_fits(&members, &perm, d) {
            return Ok(false);
        }
        if !next_permutation(&mut perm) {
            return Ok(true);
        }
    }
}

// Taking each window end as early as possible is optimal: a window that
// starts earlier contains every window that starts later with the same end.
fn chain_fits(members: &[u64], perm: &[usize], d: usize) -> bool {
    let n = perm.len();
    let mut start = 0;
    for _ in 0..d {
        let mut window = 0u64;
        let mut end = None;
        for (j, &p) in perm.iter().enumerate().skip(start) {
            window |= 1 << p;
            if members.iter().any(|&m| m & !window == 0) {
                end = Some(j);
                break;
            }
        }
        match end {
            Some(j) => start = j,
            None => return false,
        }
    }
    start < n
}

/// Advances to the next permutation in lexicographic order.
pub(crate) fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}
