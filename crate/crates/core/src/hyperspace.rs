//! Finite indexed hyperspaces.
//!
//! Elements are the indices `0..size`. Each relation `E_i` is stored as a dense
//! labeling `labels[i][x]` of class identifiers, kept in canonical form: ids
//! are numbered in order of first occurrence, so two labelings describing the
//! same partition are equal as values.

use std::collections::HashMap;
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::setsystem::SetSystem;

/// A finite set carrying `n` equivalence relations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawHyperspace", into = "RawHyperspace")]
pub struct FiniteIndexedHyperspace {
    n: usize,
    size: usize,
    labels: Vec<Vec<u32>>,
    // class_sizes[i][c] = number of elements with label c under relation i
    class_sizes: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawHyperspace {
    n: usize,
    size: usize,
    labels: Vec<Vec<u64>>,
}

impl TryFrom<RawHyperspace> for FiniteIndexedHyperspace {
    type Error = Error;

    fn try_from(raw: RawHyperspace) -> Result<Self> {
        if raw.labels.len() != raw.n {
            return Err(Error::invalid(format!(
                "expected {} label arrays, found {}",
                raw.n,
                raw.labels.len()
            )));
        }
        for (i, row) in raw.labels.iter().enumerate() {
            if row.len() != raw.size {
                return Err(Error::invalid(format!(
                    "relation {i} labels {} elements, expected {}",
                    row.len(),
                    raw.size
                )));
            }
        }
        Self::from_keys(raw.n, raw.size, |i, x| raw.labels[i][x])
    }
}

impl From<FiniteIndexedHyperspace> for RawHyperspace {
    fn from(h: FiniteIndexedHyperspace) -> Self {
        RawHyperspace {
            n: h.n,
            size: h.size,
            labels: h
                .labels
                .into_iter()
                .map(|row| row.into_iter().map(u64::from).collect())
                .collect(),
        }
    }
}

impl FiniteIndexedHyperspace {
    /// Builds a hyperspace from arbitrary per-relation class keys.
    ///
    /// `key(i, x)` names the `E_i`-class of element `x`; elements with equal
    /// keys are related. Keys are renumbered into canonical labels.
    pub fn from_keys<K, F>(n: usize, size: usize, mut key: F) -> Result<Self>
    where
        K: Hash + Eq,
        F: FnMut(usize, usize) -> K,
    {
        if n == 0 {
            return Err(Error::invalid("relation count must be positive"));
        }
        if size > u32::MAX as usize {
            return Err(Error::invalid("too many elements"));
        }
        let mut labels = Vec::with_capacity(n);
        let mut class_sizes = Vec::with_capacity(n);
        for i in 0..n {
            let mut ids: HashMap<K, u32> = HashMap::new();
            let mut row = Vec::with_capacity(size);
            let mut sizes: Vec<u32> = Vec::new();
            for x in 0..size {
                let next = ids.len() as u32;
                let id = *ids.entry(key(i, x)).or_insert(next);
                if id == next {
                    sizes.push(0);
                }
                sizes[id as usize] += 1;
                row.push(id);
            }
            labels.push(row);
            class_sizes.push(sizes);
        }
        Ok(FiniteIndexedHyperspace {
            n,
            size,
            labels,
            class_sizes,
        })
    }

    /// Builds a hyperspace from label arrays, canonicalizing class ids.
    pub fn from_labels(labels: Vec<Vec<usize>>) -> Result<Self> {
        let n = labels.len();
        let size = labels.first().map_or(0, Vec::len);
        if let Some((i, row)) = labels.iter().enumerate().find(|(_, r)| r.len() != size) {
            return Err(Error::invalid(format!(
                "relation {i} labels {} elements, expected {size}",
                row.len()
            )));
        }
        Self::from_keys(n, size, |i, x| labels[i][x])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    /// Canonical class id of `x` under relation `i`.
    #[inline]
    pub fn label(&self, i: usize, x: usize) -> u32 {
        self.labels[i][x]
    }

    pub fn labels(&self, i: usize) -> &[u32] {
        &self.labels[i]
    }

    pub fn class_count(&self, i: usize) -> usize {
        self.class_sizes[i].len()
    }

    /// `|[x]_i|`.
    #[inline]
    pub fn class_size(&self, i: usize, x: usize) -> usize {
        self.class_sizes[i][self.labels[i][x] as usize] as usize
    }

    #[inline]
    pub fn same_class(&self, i: usize, x: usize, y: usize) -> bool {
        self.labels[i][x] == self.labels[i][y]
    }

    fn check_element(&self, a: usize) -> Result<()> {
        if a >= self.size {
            return Err(Error::IndexOutOfRange {
                what: "element",
                index: a,
                limit: self.size,
            });
        }
        Ok(())
    }

    fn check_relation(&self, i: usize) -> Result<()> {
        if i >= self.n {
            return Err(Error::IndexOutOfRange {
                what: "relation",
                index: i,
                limit: self.n,
            });
        }
        Ok(())
    }

    /// The class `[a]_i`, in increasing element order.
    pub fn class_of(&self, a: usize, i: usize) -> Result<Vec<usize>> {
        self.check_element(a)?;
        self.check_relation(i)?;
        let id = self.labels[i][a];
        Ok((0..self.size)
            .filter(|&x| self.labels[i][x] == id)
            .collect())
    }

    /// `[a]_0 ∩ .. ∩ [a]_{n-1}`.
    pub fn total_intersection(&self, a: usize) -> Result<Vec<usize>> {
        self.check_element(a)?;
        Ok(self.intersection_of(a, (0..self.n).collect::<Vec<_>>().as_slice()))
    }

    /// `⋂_{i ∈ relations} [a]_i`; the whole carrier for an empty index set.
    pub fn intersection_of(&self, a: usize, relations: &[usize]) -> Vec<usize> {
        (0..self.size)
            .filter(|&x| relations.iter().all(|&i| self.same_class(i, a, x)))
            .collect()
    }

    /// Largest `|⋂_{i∈I} [a]_i|` over all elements `a`, for the index set given
    /// as a bitmask over relations.
    pub fn max_intersection_size(&self, relations: u64) -> usize {
        let idx: Vec<usize> = (0..self.n).filter(|&i| relations >> i & 1 == 1).collect();
        let mut groups: HashMap<Vec<u32>, usize> = HashMap::new();
        for x in 0..self.size {
            let key: Vec<u32> = idx.iter().map(|&i| self.labels[i][x]).collect();
            *groups.entry(key).or_default() += 1;
        }
        groups.into_values().max().unwrap_or(0)
    }

    /// Finite-scale `(n, I)`-grid test: every `⋂_{i∈I}[a]_i` with `I` a member
    /// of `family` has at most `bound` elements.
    pub fn is_grid_for(&self, family: &SetSystem, bound: usize) -> Result<bool> {
        if family.ground() != self.n {
            return Err(Error::GroundMismatch {
                expected: self.n,
                found: family.ground(),
            });
        }
        Ok(family
            .members()
            .iter()
            .all(|&member| self.max_intersection_size(member) <= bound))
    }

    /// `counts[a][i] = |{x ∈ [a]_i : χ(x) = i}|`.
    pub fn color_counts(&self, coloring: &Coloring) -> Result<Vec<Vec<usize>>> {
        self.check_coloring(coloring)?;
        let mut per_class: Vec<Vec<usize>> = (0..self.n)
            .map(|i| vec![0; self.class_count(i)])
            .collect();
        for x in 0..self.size {
            let c = coloring.color(x);
            per_class[c][self.labels[c][x] as usize] += 1;
        }
        Ok((0..self.size)
            .map(|a| {
                (0..self.n)
                    .map(|i| per_class[i][self.labels[i][a] as usize])
                    .collect()
            })
            .collect())
    }

    /// Acceptability of `χ` together with the largest per-`(a, i)` count.
    ///
    /// Every coloring of a finite structure is acceptable; the count is the
    /// diagnostic the audit machinery tracks.
    pub fn is_acceptable(&self, coloring: &Coloring) -> Result<Acceptability> {
        let counts = self.color_counts(coloring)?;
        let max_count = counts
            .iter()
            .flat_map(|row| row.iter().copied())
            .max()
            .unwrap_or(0);
        Ok(Acceptability {
            acceptable: true,
            max_count,
        })
    }

    fn check_coloring(&self, coloring: &Coloring) -> Result<()> {
        if coloring.len() != self.size {
            return Err(Error::PartialColoring {
                colored: coloring.len(),
                size: self.size,
            });
        }
        if coloring.n() != self.n {
            return Err(Error::ArityMismatch {
                expected: self.n,
                found: coloring.n(),
            });
        }
        Ok(())
    }

    /// The substructure on `elements` (new element `k` is `elements[k]`).
    pub fn induced(&self, elements: &[usize]) -> Result<Self> {
        for &a in elements {
            self.check_element(a)?;
        }
        Self::from_keys(self.n, elements.len(), |i, k| self.labels[i][elements[k]])
    }

    /// The hyperspace whose relation `i` is this one's relation `order[i]`.
    pub fn reindex_relations(&self, order: &[usize]) -> Result<Self> {
        for &i in order {
            self.check_relation(i)?;
        }
        if order.is_empty() {
            return Err(Error::invalid("relation count must be positive"));
        }
        Self::from_keys(order.len(), self.size, |i, x| self.labels[order[i]][x])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Acceptability {
    pub acceptable: bool,
    pub max_count: usize,
}

/// A map from elements to relation indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Coloring {
    n: usize,
    colors: Vec<usize>,
}

impl Coloring {
    pub fn new(n: usize, colors: Vec<usize>) -> Result<Self> {
        if let Some(&c) = colors.iter().find(|&&c| c >= n) {
            return Err(Error::IndexOutOfRange {
                what: "color",
                index: c,
                limit: n,
            });
        }
        Ok(Coloring { n, colors })
    }

    pub fn constant(n: usize, size: usize, color: usize) -> Result<Self> {
        Self::new(n, vec![color; size])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    #[inline]
    pub fn color(&self, x: usize) -> usize {
        self.colors[x]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// The coloring of the first `len` elements.
    pub fn truncated(&self, len: usize) -> Coloring {
        Coloring {
            n: self.n,
            colors: self.colors[..len.min(self.colors.len())].to_vec(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // 2-cube over {0..k-1}; element (x, y) has index x + k*y.
    fn square(k: usize) -> FiniteIndexedHyperspace {
        FiniteIndexedHyperspace::from_keys(2, k * k, |i, e| {
            let (x, y) = (e % k, e / k);
            if i == 0 {
                y
            } else {
                x
            }
        })
        .unwrap()
    }

    #[test]
    fn class_of_cube_line() {
        let a = square(2);
        // E_0 identifies points with the same second coordinate
        assert_eq!(a.class_of(0, 0).unwrap(), vec![0, 1]);
        assert_eq!(a.class_of(0, 1).unwrap(), vec![0, 2]);
    }

    #[test]
    fn class_of_coarsest_relation() {
        let a = FiniteIndexedHyperspace::from_labels(vec![vec![0, 0, 0]]).unwrap();
        assert_eq!(a.class_of(0, 0).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn class_of_rejects_bad_indices() {
        let a = square(2);
        assert!(matches!(a.class_of(4, 0), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(a.class_of(0, 2), Err(Error::IndexOutOfRange { .. })));
        assert!(a.total_intersection(9).is_err());
    }

    #[test]
    fn total_intersection_cases() {
        let a = square(3);
        for e in 0..9 {
            assert_eq!(a.total_intersection(e).unwrap(), vec![e]);
        }
        let one = FiniteIndexedHyperspace::from_labels(vec![vec![0; 4]]).unwrap();
        assert_eq!(one.total_intersection(2).unwrap(), vec![0, 1, 2, 3]);
        let twin =
            FiniteIndexedHyperspace::from_labels(vec![vec![0, 1, 0, 1], vec![0, 1, 0, 1]]).unwrap();
        assert_eq!(twin.total_intersection(1).unwrap(), twin.class_of(1, 0).unwrap());
    }

    #[test]
    fn grid_checks() {
        let a = square(3);
        let lines = SetSystem::new(2, vec![vec![0, 1]]).unwrap();
        assert!(a.is_grid_for(&lines, 1).unwrap());
        assert!(a.is_grid_for(&SetSystem::empty(2), 0).unwrap());

        let collapsed = FiniteIndexedHyperspace::from_labels(vec![vec![0; 5], vec![0; 5]]).unwrap();
        assert!(!collapsed.is_grid_for(&lines, 4).unwrap());
        assert!(collapsed.is_grid_for(&lines, 5).unwrap());

        let wrong = SetSystem::new(3, vec![vec![0, 1]]).unwrap();
        assert!(matches!(
            a.is_grid_for(&wrong, 1),
            Err(Error::GroundMismatch { .. })
        ));
    }

    #[test]
    fn acceptability_counts() {
        let a = square(2);
        let chi = Coloring::constant(2, 4, 0).unwrap();
        let report = a.is_acceptable(&chi).unwrap();
        assert!(report.acceptable);
        assert_eq!(report.max_count, 2);

        let empty = FiniteIndexedHyperspace::from_labels(vec![vec![], vec![]]).unwrap();
        let report = empty.is_acceptable(&Coloring::new(2, vec![]).unwrap()).unwrap();
        assert_eq!(report.max_count, 0);

        let partial = Coloring::new(2, vec![0, 1]).unwrap();
        assert!(matches!(
            a.is_acceptable(&partial),
            Err(Error::PartialColoring { .. })
        ));
    }

    #[test]
    fn canonical_labels() {
        let a = FiniteIndexedHyperspace::from_labels(vec![vec![7, 3, 7, 9]]).unwrap();
        assert_eq!(a.labels(0), &[0, 1, 0, 2]);
        let b = FiniteIndexedHyperspace::from_labels(vec![vec![1, 0, 1, 2]]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn json_round_trip_canonicalizes() {
        let text = r#"{"n":1,"size":3,"labels":[[5,2,5]]}"#;
        let a: FiniteIndexedHyperspace = serde_json::from_str(text).unwrap();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            r#"{"n":1,"size":3,"labels":[[0,1,0]]}"#
        );
        assert!(serde_json::from_str::<FiniteIndexedHyperspace>(
            r#"{"n":2,"size":3,"labels":[[0,1,0]]}"#
        )
        .is_err());
        assert!(serde_json::from_str::<FiniteIndexedHyperspace>(
            r#"{"n":1,"size":2,"labels":[[0,1,0]]}"#
        )
        .is_err());
    }

    #[test]
    fn coloring_rejects_out_of_range_color() {
        assert!(Coloring::new(2, vec![0, 2]).is_err());
    }
}
