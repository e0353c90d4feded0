//! Complete backtracking search for class-preserving injections.
//!
//! All three morphism kinds share one engine. For every relation `i` of the
//! target, `source_rel[i]` names the source relation it is compared with
//! (identity, a permutation, or `β`), and the engine maintains the induced
//! partial map from source classes to target classes. Biconditional kinds also
//! keep the reverse map, so distinct source classes never share a target class.
//!
//! Source elements are assigned in index order and candidates are tried in
//! increasing order, so the first witness found is the lexicographically least
//! map.

use crate::hyperspace::FiniteIndexedHyperspace as Space;

/// Outcome of a bounded search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Search<T> {
    Found(T),
    /// The search space was exhausted: no witness exists.
    NotFound,
    /// The node budget ran out before the search finished.
    Indeterminate,
}

impl<T> Search<T> {
    pub fn is_found(&self) -> bool {
        matches!(self, Search::Found(_))
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Search<U> {
        match self {
            Search::Found(t) => Search::Found(f(t)),
            Search::NotFound => Search::NotFound,
            Search::Indeterminate => Search::Indeterminate,
        }
    }
}

/// Shared node counter for one top-level query.
#[derive(Debug, Clone, Copy)]
pub struct NodeBudget {
    remaining: u64,
    exhausted: bool,
}

impl NodeBudget {
    pub fn new(nodes: u64) -> Self {
        NodeBudget {
            remaining: nodes,
            exhausted: false,
        }
    }

    pub fn unlimited() -> Self {
        Self::new(u64::MAX)
    }

    pub fn is_exhausted(&self) -> bool {
        self.exhausted
    }

    fn spend(&mut self) -> bool {
        if self.remaining == 0 {
            self.exhausted = true;
            return false;
        }
        self.remaining -= 1;
        true
    }
}

const UNSET: u32 = u32::MAX;

struct Engine<'s> {
    b: &'s Space,
    a: &'s Space,
    source_rel: &'s [usize],
    biconditional: bool,
    // forward[i][source class] = target class, with an element count for undo
    forward: Vec<Vec<(u32, u32)>>,
    // reverse[i][target class] = source class (biconditional only)
    reverse: Vec<Vec<u32>>,
    // occupied slots per target class
    used_in_class: Vec<Vec<u32>>,
    // assigned elements per source class
    placed_in_class: Vec<Vec<u32>>,
    used: Vec<bool>,
    map: Vec<usize>,
}

impl<'s> Engine<'s> {
    fn new(b: &'s Space, a: &'s Space, source_rel: &'s [usize], biconditional: bool) -> Self {
        let forward = source_rel
            .iter()
            .map(|&j| vec![(UNSET, 0); b.class_count(j)])
            .collect();
        let reverse = (0..a.n()).map(|i| vec![UNSET; a.class_count(i)]).collect();
        let used_in_class = (0..a.n()).map(|i| vec![0; a.class_count(i)]).collect();
        let placed_in_class = source_rel
            .iter()
            .map(|&j| vec![0; b.class_count(j)])
            .collect();
        Engine {
            b,
            a,
            source_rel,
            biconditional,
            forward,
            reverse,
            used_in_class,
            placed_in_class,
            used: vec![false; a.size()],
            map: Vec::with_capacity(b.size()),
        }
    }

    // Class sizes can only grow along an injection that maps classes into classes.
    fn signature_fits(&self, x: usize, y: usize) -> bool {
        self.source_rel
            .iter()
            .enumerate()
            .all(|(i, &j)| self.b.class_size(j, x) <= self.a.class_size(i, y))
    }

    fn consistent(&self, x: usize, y: usize) -> bool {
        for (i, &j) in self.source_rel.iter().enumerate() {
            let sc = self.b.label(j, x) as usize;
            let tc = self.a.label(i, y);
            let (image, _) = self.forward[i][sc];
            if image != UNSET {
                if image != tc {
                    return false;
                }
            } else if self.biconditional {
                if self.reverse[i][tc as usize] != UNSET {
                    return false;
                }
                // the whole source class must fit into the free part of tc
                let free = self.a.class_size(i, y) as u32 - self.used_in_class[i][tc as usize];
                if (self.b.class_size(j, x) as u32) > free {
                    return false;
                }
            }
            if self.biconditional && image != UNSET {
                let remaining =
                    self.b.class_size(j, x) as u32 - self.placed_in_class[i][sc];
                let free = self.a.class_size(i, y) as u32 - self.used_in_class[i][tc as usize];
                if remaining > free {
                    return false;
                }
            }
        }
        true
    }

    fn assign(&mut self, x: usize, y: usize) {
        for (i, &j) in self.source_rel.iter().enumerate() {
            let sc = self.b.label(j, x) as usize;
            let tc = self.a.label(i, y);
            let entry = &mut self.forward[i][sc];
            if entry.1 == 0 {
                entry.0 = tc;
                if self.biconditional {
                    self.reverse[i][tc as usize] = sc as u32;
                }
            }
            entry.1 += 1;
            self.used_in_class[i][tc as usize] += 1;
            self.placed_in_class[i][sc] += 1;
        }
        self.used[y] = true;
        self.map.push(y);
    }

    fn unassign(&mut self, x: usize, y: usize) {
        for (i, &j) in self.source_rel.iter().enumerate() {
            let sc = self.b.label(j, x) as usize;
            let tc = self.a.label(i, y);
            let entry = &mut self.forward[i][sc];
            entry.1 -= 1;
            if entry.1 == 0 {
                entry.0 = UNSET;
                if self.biconditional {
                    self.reverse[i][tc as usize] = UNSET;
                }
            }
            self.used_in_class[i][tc as usize] -= 1;
            self.placed_in_class[i][sc] -= 1;
        }
        self.used[y] = false;
        self.map.pop();
    }

    fn run(&mut self, budget: &mut NodeBudget) -> Search<Vec<usize>> {
        let x = self.map.len();
        if x == self.b.size() {
            return Search::Found(self.map.clone());
        }
        for y in 0..self.a.size() {
            if self.used[y] || !self.signature_fits(x, y) || !self.consistent(x, y) {
                continue;
            }
            if !budget.spend() {
                return Search::Indeterminate;
            }
            self.assign(x, y);
            let outcome = self.run(budget);
            self.unassign(x, y);
            if !matches!(outcome, Search::NotFound) {
                return outcome;
            }
        }
        Search::NotFound
    }
}

/// Searches for an injection `f: B -> A` with, for every relation `i` of `A`,
/// `[x]_{source_rel[i]} = [y]_{source_rel[i]}` implying (or, when
/// `biconditional`, equivalent to) `[f(x)]_i = [f(y)]_i`.
pub fn search_map(
    b: &Space,
    a: &Space,
    source_rel: &[usize],
    biconditional: bool,
    budget: &mut NodeBudget,
) -> Search<Vec<usize>> {
    debug_assert_eq!(source_rel.len(), a.n());
    debug_assert!(source_rel.iter().all(|&j| j < b.n()));
    if b.size() > a.size() {
        return Search::NotFound;
    }
    if budget.is_exhausted() {
        return Search::Indeterminate;
    }
    Engine::new(b, a, source_rel, biconditional).run(budget)
}
