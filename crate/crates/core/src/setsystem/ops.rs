use super::{full_mask, mask_elements, SetSystem, SetTuple};
use crate::error::{Error, Result};

/// Largest tuple length for which `I(S)` is enumerated.
const MAX_INDUCED_N: usize = 20;

/// `I(S) = { I ⊆ n : ⋂_{i∈I} S_i = ∅ }`, with the empty intersection taken to
/// be the whole codomain `{0..m-1}`.
pub fn induced_system(tuple: &SetTuple) -> Result<SetSystem> {
    if tuple.m() == 0 {
        return Err(Error::invalid(
            "induced system needs a nonempty codomain (m >= 1)",
        ));
    }
    let n = tuple.n();
    if n > MAX_INDUCED_N {
        return Err(Error::Unsupported(format!(
            "induced system of a {n}-tuple is too large to enumerate"
        )));
    }
    // meet[I] = ⋂_{i∈I} S_i, filled in increasing mask order
    let mut meet = vec![full_mask(tuple.m()); 1 << n];
    let mut members = Vec::new();
    for mask in 1usize..1 << n {
        let low = mask.trailing_zeros() as usize;
        meet[mask] = meet[mask & (mask - 1)] & tuple.set(low);
        if meet[mask] == 0 {
            members.push(mask as u64);
        }
    }
    SetSystem::from_masks(n, members)
}

/// A family restricted to the subsets of `J`, re-indexed onto `{0..|J|-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Restriction {
    pub system: SetSystem,
    /// `index_map[k]` is the original ground element renamed to `k`.
    pub index_map: Vec<usize>,
}

/// `I ∩ P(J)` over the ground set `J`.
pub fn restrict(family: &SetSystem, j: u64) -> Restriction {
    let j = j & full_mask(family.ground());
    let index_map: Vec<usize> = mask_elements(j).collect();
    let members = family
        .members()
        .iter()
        .copied()
        .filter(|&m| m & !j == 0)
        .map(|m| {
            index_map
                .iter()
                .enumerate()
                .filter(|&(_, &old)| m >> old & 1 == 1)
                .fold(0u64, |acc, (k, _)| acc | 1 << k)
        });
    let system = SetSystem::from_masks(index_map.len(), members)
        .expect("restriction stays inside the ground set");
    Restriction { system, index_map }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn induced_of_disjoint_singletons() {
        let t = SetTuple::new(2, vec![vec![0], vec![1]]).unwrap();
        assert_eq!(induced_system(&t).unwrap().member_sets(), vec![vec![0, 1]]);
    }

    #[test]
    fn induced_contains_index_of_empty_set() {
        let t = SetTuple::new(3, vec![vec![0], vec![], vec![1, 2]]).unwrap();
        let sys = induced_system(&t).unwrap();
        assert!(sys.contains(0b010));
        assert!(!sys.contains(0));
    }

    #[test]
    fn induced_of_equal_sets_is_empty() {
        let t = SetTuple::new(1, vec![vec![0], vec![0]]).unwrap();
        assert!(induced_system(&t).unwrap().is_empty());
    }

    #[test]
    fn induced_rejects_empty_codomain() {
        let t = SetTuple::new(0, vec![vec![], vec![]]).unwrap();
        assert!(induced_system(&t).is_err());
    }

    #[test]
    fn induced_is_upward_closed() {
        for t in SetTuple::enumerate_all(3, 3, false).unwrap() {
            let sys = induced_system(&t).unwrap();
            for &m in sys.members() {
                for extra in 0..3 {
                    assert!(sys.contains(m | 1 << extra));
                }
            }
        }
    }

    #[test]
    fn restrict_examples() {
        let pairs = SetSystem::uniform(3, 2).unwrap();
        let r = restrict(&pairs, 0b011);
        assert_eq!(r.system.member_sets(), vec![vec![0, 1]]);
        assert_eq!(r.index_map, vec![0, 1]);

        let s = SetSystem::new(3, vec![vec![0, 1], vec![2]]).unwrap();
        assert_eq!(restrict(&s, 0b011).system.member_sets(), vec![vec![0, 1]]);
        assert_eq!(restrict(&s, 0b111).system, s);
    }

    #[test]
    fn restrict_reindexes() {
        let s = SetSystem::new(5, vec![vec![1, 4], vec![0, 2]]).unwrap();
        let r = restrict(&s, 0b10010);
        assert_eq!(r.index_map, vec![1, 4]);
        assert_eq!(r.system.ground(), 2);
        assert_eq!(r.system.member_sets(), vec![vec![0, 1]]);
    }
}
