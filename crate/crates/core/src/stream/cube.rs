//! The `S`-cube over `ℕ^m` as a stream.

use std::collections::HashSet;

use super::{DeclaredProfile, StreamHyperspace};
use crate::error::{Error, Result};
use crate::setsystem::{full_mask, induced_system, mask_elements, SetTuple};

/// The `S`-cube over `ℕ^m`, enumerated by coordinate sum and then
/// lexicographically: `(0,0), (0,1), (1,0), (0,2), (1,1), ..` for `m = 2`.
///
/// The declared profile is `I(S)` with bound 1: points agreeing outside
/// `⋂_{i∈I} S_i = ∅` are equal.
#[derive(Debug, Clone)]
pub struct CubeStream {
    tuple: SetTuple,
    // coordinates outside S_i, ascending
    kept: Vec<Vec<usize>>,
    profile: DeclaredProfile,
}

impl CubeStream {
    pub fn new(tuple: SetTuple) -> Result<Self> {
        if tuple.n() == 0 || tuple.m() == 0 {
            return Err(Error::invalid("a cube stream needs n >= 1 and m >= 1"));
        }
        let profile = DeclaredProfile::uniform(&induced_system(&tuple)?, Some(1));
        let kept = tuple
            .sets()
            .iter()
            .map(|&s| mask_elements(full_mask(tuple.m()) & !s).collect())
            .collect();
        Ok(CubeStream {
            tuple,
            kept,
            profile,
        })
    }

    /// `ℕ²` with `E_0` = same first coordinate and `E_1` = same second
    /// coordinate.
    pub fn plane() -> Self {
        let tuple = SetTuple::new(2, vec![vec![1], vec![0]]).expect("valid tuple");
        Self::new(tuple).expect("valid cube stream")
    }

    pub fn tuple(&self) -> &SetTuple {
        &self.tuple
    }
}

/// All compositions of `sum` into `m` parts, in lexicographic order.
fn compositions(m: usize, sum: usize) -> Vec<Vec<usize>> {
    fn go(m: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() + 1 == m {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for x in 0..=left {
            cur.push(x);
            go(m, left - x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(m, sum, &mut Vec::with_capacity(m), &mut out);
    out
}

impl StreamHyperspace for CubeStream {
    type Element = Vec<usize>;
    type Key = Vec<usize>;

    fn n(&self) -> usize {
        self.tuple.n()
    }

    fn elements(&self) -> Box<dyn Iterator<Item = Vec<usize>> + '_> {
        let m = self.tuple.m();
        Box::new((0..).flat_map(move |sum| compositions(m, sum)))
    }

    fn class_key(&self, i: usize, x: &Vec<usize>) -> Vec<usize> {
        self.kept[i].iter().map(|&j| x[j]).collect()
    }

    fn declared_profile(&self) -> &DeclaredProfile {
        &self.profile
    }

    /// Counts points `x ∈ ℕ^m` whose every projection `x|kept_t` already
    /// occurs among `a_0..a_k`. Each new projection `p` of relation `t`
    /// contributes exactly the points with `x|kept_t = p`.
    fn exact_bounds(&self, prefix: &[Vec<usize>], ks: &[usize]) -> Option<Vec<u64>> {
        if !self.profile.contains_full_set() {
            return None;
        }
        let m = self.tuple.m();
        let n = self.n();
        let mut values: Vec<Vec<usize>> = vec![Vec::new(); m];
        let mut seen_values: Vec<HashSet<usize>> = vec![HashSet::new(); m];
        let mut projections: Vec<HashSet<Vec<usize>>> = vec![HashSet::new(); n];
        let mut total = 0u64;
        let mut out = Vec::with_capacity(ks.len());
        let mut next = ks.iter().peekable();
        for (k, a) in prefix.iter().enumerate() {
            if next.peek().is_none() {
                break;
            }
            for (j, &v) in a.iter().enumerate() {
                if seen_values[j].insert(v) {
                    values[j].push(v);
                }
            }
            for t in 0..n {
                let p = self.class_key(t, a);
                if projections[t].contains(&p) {
                    continue;
                }
                projections[t].insert(p.clone());
                total += self.completions(t, &p, &values, &projections);
            }
            while next.next_if(|&&q| q == k).is_some() {
                out.push(total);
            }
        }
        (out.len() == ks.len()).then_some(out)
    }
}

impl CubeStream {
    /// Points `x` with `x|kept_t = p` and every projection in `projections`.
    fn completions(
        &self,
        t: usize,
        p: &[usize],
        values: &[Vec<usize>],
        projections: &[HashSet<Vec<usize>>],
    ) -> u64 {
        let m = self.tuple.m();
        let mut x = vec![0; m];
        for (&j, &v) in self.kept[t].iter().zip(p) {
            x[j] = v;
        }
        let free: Vec<usize> = mask_elements(self.tuple.set(t)).collect();
        let mut count = 0;
        self.fill(&free, 0, &mut x, values, projections, &mut count);
        count
    }

    fn fill(
        &self,
        free: &[usize],
        depth: usize,
        x: &mut Vec<usize>,
        values: &[Vec<usize>],
        projections: &[HashSet<Vec<usize>>],
        count: &mut u64,
    ) {
        if depth == free.len() {
            if (0..self.n()).all(|s| projections[s].contains(&self.class_key(s, x))) {
                *count += 1;
            }
            return;
        }
        let j = free[depth];
        for &v in &values[j] {
            x[j] = v;
            self.fill(free, depth + 1, x, values, projections, count);
        }
    }
}
