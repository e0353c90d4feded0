//! Countable hyperspaces given by an enumeration, the greedy acceptable
//! coloring, and the acceptability audit.
//!
//! A stream fixes a nonrepeating enumeration `a_0, a_1, ..` and decides class
//! equality through hashable class keys. For an element `a` and relation `i`,
//! `m_i(a)` is the least `m` with `a ∈ [a_m]_i`; the greedy coloring gives
//! `a_k` the least `j` maximizing `m_j(a_k)`.
//!
//! If every class intersection `⋂_i [a]_i` is finite, a point `x ∈ [a]_i` of
//! greedy color `i` has all `m_t(x) ≤ m_i(a)`, so it lies in the union of the
//! intersections `⋂_t [a_{r_t}]_t` over tuples with every `r_t ≤ m_i(a)`. The
//! size of that union is the certificate bound reported by the audit.

mod cube;
mod simple;

use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hyperspace::Coloring;
use crate::setsystem::{full_mask, mask_elements, SetSystem};

pub use cube::CubeStream;
pub use simple::{collapsed, CollapsedStream, FnStream};

/// Elements checked for the equivalence axioms during an audit.
pub const AXIOM_CHECK_PREFIX: usize = 64;

/// Index sets whose class intersections a stream claims to be finite, each
/// with an optional bound on the intersection size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeclaredProfile {
    n: usize,
    bounds: BTreeMap<u64, Option<usize>>,
}

impl DeclaredProfile {
    pub fn new(n: usize, entries: impl IntoIterator<Item = (u64, Option<usize>)>) -> Result<Self> {
        let full = full_mask(n);
        let mut bounds = BTreeMap::new();
        for (mask, bound) in entries {
            if mask & !full != 0 {
                return Err(Error::invalid(format!(
                    "profile member {mask:#b} is not a subset of {{0..{n}}}"
                )));
            }
            bounds.insert(mask, bound);
        }
        Ok(DeclaredProfile { n, bounds })
    }

    /// Every member of `family`, all with the same bound.
    pub fn uniform(family: &SetSystem, bound: Option<usize>) -> Self {
        DeclaredProfile {
            n: family.ground(),
            bounds: family.members().iter().map(|&m| (m, bound)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> SetSystem {
        SetSystem::from_masks(self.n, self.bounds.keys().copied())
            .expect("members lie inside the index set")
    }

    pub fn bound(&self, member: u64) -> Option<usize> {
        self.bounds.get(&member).copied().flatten()
    }

    pub fn entries(&self) -> impl Iterator<Item = (u64, Option<usize>)> + '_ {
        self.bounds.iter().map(|(&m, &b)| (m, b))
    }

    pub fn contains_full_set(&self) -> bool {
        self.bounds.contains_key(&full_mask(self.n))
    }
}

/// A countable indexed hyperspace presented by an enumeration.
pub trait StreamHyperspace {
    type Element: Clone + Eq + Hash + std::fmt::Debug;
    type Key: Clone + Eq + Hash;

    /// Relation count.
    fn n(&self) -> usize;

    /// The enumeration `a_0, a_1, ..`. Must be infinite and deterministic.
    fn elements(&self) -> Box<dyn Iterator<Item = Self::Element> + '_>;

    /// Canonical name of the `E_i`-class of `x`.
    fn class_key(&self, i: usize, x: &Self::Element) -> Self::Key;

    fn same_class(&self, i: usize, x: &Self::Element, y: &Self::Element) -> bool {
        self.class_key(i, x) == self.class_key(i, y)
    }

    fn declared_profile(&self) -> &DeclaredProfile;

    /// Exact certificate bounds over the whole structure for the requested
    /// element indices (ascending), when the stream can compute them.
    fn exact_bounds(&self, _prefix: &[Self::Element], _ks: &[usize]) -> Option<Vec<u64>> {
        None
    }

    /// The element `a_k`.
    fn enumerate(&self, k: usize) -> Self::Element {
        self.elements().nth(k).expect("stream enumerations are infinite")
    }
}

/// The first `len` elements, rejecting a repeated enumeration.
pub fn checked_prefix<S: StreamHyperspace + ?Sized>(
    stream: &S,
    len: usize,
) -> Result<Vec<S::Element>> {
    let prefix: Vec<S::Element> = stream.elements().take(len).collect();
    if prefix.len() < len {
        return Err(Error::invalid("stream enumeration ended early"));
    }
    let mut seen = HashMap::with_capacity(len);
    for (k, x) in prefix.iter().enumerate() {
        if let Some(first) = seen.insert(x, k) {
            return Err(Error::RepeatedElement { first, second: k });
        }
    }
    Ok(prefix)
}

/// `first[i][k] = m_i(a_k)`, via one first-occurrence table per relation.
fn first_occurrences<S: StreamHyperspace + ?Sized>(
    stream: &S,
    prefix: &[S::Element],
) -> Vec<Vec<usize>> {
    (0..stream.n())
        .map(|i| {
            let mut table = HashMap::new();
            prefix
                .iter()
                .enumerate()
                .map(|(k, x)| *table.entry(stream.class_key(i, x)).or_insert(k))
                .collect()
        })
        .collect()
}

/// How a prefix is colored.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Least `j` maximizing `m_j`.
    Greedy,
    Constant(usize),
    /// `χ(a_k) = k mod n`.
    Cyclic,
}

impl Strategy {
    /// Every strategy the library offers for `n` colors.
    pub fn all(n: usize) -> Vec<Strategy> {
        let mut out = vec![Strategy::Greedy, Strategy::Cyclic];
        out.extend((0..n).map(Strategy::Constant));
        out
    }
}

impl std::str::FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "greedy" => Ok(Strategy::Greedy),
            "cyclic" => Ok(Strategy::Cyclic),
            "constant" => Ok(Strategy::Constant(0)),
            _ => match s.strip_prefix("constant:").map(str::parse) {
                Some(Ok(c)) => Ok(Strategy::Constant(c)),
                _ => Err(Error::parse(format!("unknown strategy {s:?}"))),
            },
        }
    }
}

fn greedy_colors(first: &[Vec<usize>], len: usize) -> Vec<usize> {
    (0..len)
        .map(|k| {
            let mut best = 0;
            for (j, row) in first.iter().enumerate() {
                if row[k] > first[best][k] {
                    best = j;
                }
            }
            best
        })
        .collect()
}

/// The greedy coloring of `a_0..a_{len-1}`.
pub fn greedy_coloring<S: StreamHyperspace + ?Sized>(stream: &S, len: usize) -> Result<Coloring> {
    color_prefix(stream, len, Strategy::Greedy)
}

pub fn color_prefix<S: StreamHyperspace + ?Sized>(
    stream: &S,
    len: usize,
    strategy: Strategy,
) -> Result<Coloring> {
    let n = stream.n();
    if n == 0 {
        return Err(Error::invalid("a stream needs at least one relation"));
    }
    let prefix = checked_prefix(stream, len)?;
    let colors = match strategy {
        Strategy::Greedy => {
            if !stream.declared_profile().contains_full_set() {
                return Err(Error::ProfileMissingFullSet);
            }
            greedy_colors(&first_occurrences(stream, &prefix), len)
        }
        Strategy::Constant(c) => vec![c; len],
        Strategy::Cyclic => (0..len).map(|k| k % n).collect(),
    };
    Coloring::new(n, colors)
}

/// A certificate bound and whether it holds for the whole structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub value: u64,
    /// `false` when the bound only counts points inside the prefix.
    pub exact: bool,
}

/// Per-index certificate bounds for the requested `ks` (ascending).
fn certificates<S: StreamHyperspace + ?Sized>(
    stream: &S,
    prefix: &[S::Element],
    first: &[Vec<usize>],
    ks: &[usize],
) -> (Vec<u64>, bool) {
    if let Some(exact) = stream.exact_bounds(prefix, ks) {
        return (exact, true);
    }
    // within the prefix: #{x : max_t m_t(x) <= k}
    let mut at = vec![0u64; prefix.len()];
    for x in 0..prefix.len() {
        let top = first.iter().map(|row| row[x]).max().unwrap_or(0);
        at[top] += 1;
    }
    let mut running = 0;
    let cumulative: Vec<u64> = at
        .iter()
        .map(|&c| {
            running += c;
            running
        })
        .collect();
    (ks.iter().map(|&k| cumulative[k]).collect(), false)
}

/// `|⋃ { ⋂_t [a_{r_t}]_t : every r_t ≤ k }|`, computed from the first `len`
/// elements. Exact when the stream supplies closed-form intersections.
pub fn certificate_bound<S: StreamHyperspace + ?Sized>(
    stream: &S,
    k: usize,
    i: usize,
    len: usize,
) -> Result<Certificate> {
    if i >= stream.n() {
        return Err(Error::IndexOutOfRange {
            what: "relation",
            index: i,
            limit: stream.n(),
        });
    }
    if k >= len {
        return Err(Error::IndexOutOfRange {
            what: "element",
            index: k,
            limit: len,
        });
    }
    let prefix = checked_prefix(stream, len)?;
    let first = first_occurrences(stream, &prefix);
    let (values, exact) = certificates(stream, &prefix, &first, &[k]);
    Ok(Certificate {
        value: values[0],
        exact,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountEntry {
    pub a: usize,
    pub i: usize,
    /// `|{x in prefix : x ∈ [a]_i, χ(x) = i}|`.
    pub count: usize,
    pub bound: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Violation {
    /// A count above its certificate bound.
    Certificate {
        a: usize,
        i: usize,
        count: usize,
        bound: u64,
    },
    /// A declared-finite intersection larger than its declared bound.
    Profile {
        member: Vec<usize>,
        a: usize,
        size: usize,
        bound: usize,
    },
    /// `same_class` disagrees with the class keys on a pair of elements.
    Relation { i: usize, x: usize, y: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    #[serde(rename = "N")]
    pub len: usize,
    pub bounds_exact: bool,
    pub violations: Vec<Violation>,
    pub counts: Vec<CountEntry>,
}

impl AuditReport {
    pub fn max_count(&self) -> usize {
        self.counts.iter().map(|c| c.count).max().unwrap_or(0)
    }

    pub fn certificate_violations(&self) -> usize {
        self.violations
            .iter()
            .filter(|v| matches!(v, Violation::Certificate { .. }))
            .count()
    }

    pub fn profile_violations(&self) -> usize {
        self.violations
            .iter()
            .filter(|v| matches!(v, Violation::Profile { .. }))
            .count()
    }
}

/// Counts, certificate bounds and violations for `χ` on the first `len`
/// elements.
pub fn acceptability_audit<S: StreamHyperspace + ?Sized>(
    stream: &S,
    coloring: &Coloring,
    len: usize,
) -> Result<AuditReport> {
    let n = stream.n();
    if coloring.len() < len {
        return Err(Error::PartialColoring {
            colored: coloring.len(),
            size: len,
        });
    }
    if coloring.n() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            found: coloring.n(),
        });
    }
    let prefix = checked_prefix(stream, len)?;
    let first = first_occurrences(stream, &prefix);

    let mut ks: Vec<usize> = first.iter().flatten().copied().collect();
    ks.sort_unstable();
    ks.dedup();
    let (values, bounds_exact) = certificates(stream, &prefix, &first, &ks);
    let bound_of: HashMap<usize, u64> = ks.into_iter().zip(values).collect();

    // color-i points per E_i-class, keyed by the class's first occurrence
    let mut per_class: Vec<HashMap<usize, usize>> = vec![HashMap::new(); n];
    for x in 0..len {
        let c = coloring.color(x);
        *per_class[c].entry(first[c][x]).or_default() += 1;
    }

    let mut counts = Vec::with_capacity(len * n);
    let mut violations = Vec::new();
    for a in 0..len {
        for i in 0..n {
            let rep = first[i][a];
            let count = per_class[i].get(&rep).copied().unwrap_or(0);
            let bound = bound_of[&rep];
            if count as u64 > bound {
                violations.push(Violation::Certificate { a, i, count, bound });
            }
            counts.push(CountEntry { a, i, count, bound });
        }
    }

    violations.extend(profile_violations(stream, &prefix));
    violations.extend(relation_violations(stream, &prefix));
    Ok(AuditReport {
        len,
        bounds_exact,
        violations,
        counts,
    })
}

fn profile_violations<S: StreamHyperspace + ?Sized>(
    stream: &S,
    prefix: &[S::Element],
) -> Vec<Violation> {
    let mut out = Vec::new();
    for (member, bound) in stream.declared_profile().entries() {
        let Some(bound) = bound else { continue };
        let relations: Vec<usize> = mask_elements(member).collect();
        // first element and size of every intersection class
        let mut groups: HashMap<Vec<S::Key>, (usize, usize)> = HashMap::new();
        for (x, elem) in prefix.iter().enumerate() {
            let key = relations.iter().map(|&i| stream.class_key(i, elem)).collect();
            groups.entry(key).or_insert((x, 0)).1 += 1;
        }
        let mut over: Vec<(usize, usize)> =
            groups.into_values().filter(|&(_, size)| size > bound).collect();
        over.sort_unstable();
        out.extend(over.into_iter().map(|(a, size)| Violation::Profile {
            member: relations.clone(),
            a,
            size,
            bound,
        }));
    }
    out
}

fn relation_violations<S: StreamHyperspace + ?Sized>(
    stream: &S,
    prefix: &[S::Element],
) -> Vec<Violation> {
    let head = &prefix[..prefix.len().min(AXIOM_CHECK_PREFIX)];
    let mut out = Vec::new();
    for i in 0..stream.n() {
        let keys: Vec<S::Key> = head.iter().map(|x| stream.class_key(i, x)).collect();
        for (x, ex) in head.iter().enumerate() {
            for (y, ey) in head.iter().enumerate() {
                if stream.same_class(i, ex, ey) != (keys[x] == keys[y]) {
                    out.push(Violation::Relation { i, x, y });
                }
            }
        }
    }
    out
}
