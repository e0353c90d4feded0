//! `S`-cubes, halfcubes, and the explicit parbedding of the `d`-cube into an
//! `S`-cube.
//!
//! For an `n`-tuple `S` of subsets of `{0..m-1}` and factors `A_0..A_{m-1}`,
//! the `S`-cube has carrier `A_0 × .. × A_{m-1}` and relates `x, y` under `E_i`
//! iff they agree on every coordinate outside `S_i`. Finite factors are
//! `{0..size-1}`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hyperspace::FiniteIndexedHyperspace;
use crate::setsystem::{least_minimum_transversal, SetTuple};

/// Largest carrier built by the finite generators.
pub const MAX_CUBE_SIZE: usize = 1 << 22;

/// Size of one factor of a cube.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Factor {
    Finite(usize),
    /// The natural numbers; only meaningful for stream cubes.
    Omega,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubeShape {
    pub tuple: SetTuple,
    pub factors: Vec<Factor>,
}

impl CubeShape {
    pub fn new(tuple: SetTuple, factors: Vec<Factor>) -> Result<Self> {
        if factors.len() != tuple.m() {
            return Err(Error::invalid(format!(
                "{} factors given for a tuple over m={}",
                factors.len(),
                tuple.m()
            )));
        }
        Ok(CubeShape { tuple, factors })
    }

    pub fn finite(tuple: SetTuple, sizes: &[usize]) -> Result<Self> {
        Self::new(tuple, sizes.iter().map(|&s| Factor::Finite(s)).collect())
    }

    /// The `S`-cube over `{0..size-1}`: every factor has `size` points.
    pub fn over(tuple: SetTuple, size: usize) -> Self {
        let factors = vec![Factor::Finite(size); tuple.m()];
        CubeShape { tuple, factors }
    }
}

/// A finite hyperspace whose elements carry coordinate tuples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cube {
    pub space: FiniteIndexedHyperspace,
    /// `points[e]` are the coordinates of element `e`.
    pub points: Vec<Vec<usize>>,
    factors: Vec<usize>,
}

impl Cube {
    /// Element id of a coordinate tuple of a full product cube.
    pub fn index_of(&self, coords: &[usize]) -> Option<usize> {
        if coords.len() != self.factors.len() {
            return None;
        }
        let mut index = 0;
        let mut stride = 1;
        for (&x, &size) in coords.iter().zip(&self.factors) {
            if x >= size {
                return None;
            }
            index += x * stride;
            stride *= size;
        }
        (self.points.get(index).map(Vec::as_slice) == Some(coords)).then_some(index)
    }
}

fn class_key(tuple: &SetTuple, i: usize, coords: &[usize]) -> Vec<usize> {
    let s = tuple.set(i);
    coords
        .iter()
        .enumerate()
        .map(|(j, &x)| if s >> j & 1 == 1 { usize::MAX } else { x })
        .collect()
}

fn build(tuple: &SetTuple, points: Vec<Vec<usize>>, factors: Vec<usize>) -> Result<Cube> {
    if tuple.n() == 0 {
        return Err(Error::invalid("a cube needs at least one relation"));
    }
    let space = FiniteIndexedHyperspace::from_keys(tuple.n(), points.len(), |i, e| {
        class_key(tuple, i, &points[e])
    })?;
    Ok(Cube {
        space,
        points,
        factors,
    })
}

/// The finite `S`-cube. Elements are numbered in colexicographic order of
/// their coordinates (coordinate 0 varies fastest).
pub fn make_cube(shape: &CubeShape) -> Result<Cube> {
    let mut sizes = Vec::with_capacity(shape.factors.len());
    for (j, factor) in shape.factors.iter().enumerate() {
        match *factor {
            Factor::Finite(0) => return Err(Error::invalid(format!("factor {j} is empty"))),
            Factor::Finite(s) => sizes.push(s),
            Factor::Omega => {
                return Err(Error::invalid(format!(
                    "factor {j} is infinite; use a cube stream"
                )))
            }
        }
    }
    let total = sizes
        .iter()
        .try_fold(1usize, |acc, &s| acc.checked_mul(s))
        .filter(|&t| t <= MAX_CUBE_SIZE)
        .ok_or_else(|| Error::Unsupported("cube carrier too large".into()))?;
    let points = (0..total)
        .map(|mut e| {
            sizes
                .iter()
                .map(|&s| {
                    let x = e % s;
                    e /= s;
                    x
                })
                .collect()
        })
        .collect();
    build(&shape.tuple, points, sizes)
}

/// The `n`-cube over `{0..size-1}`.
pub fn n_cube(n: usize, size: usize) -> Result<Cube> {
    make_cube(&CubeShape::over(SetTuple::standard(n)?, size))
}

/// Strictly increasing `m`-tuples from `{0..k-1}` in lexicographic order.
pub fn increasing_tuples(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if m > k {
        return out;
    }
    let mut combo: Vec<usize> = (0..m).collect();
    loop {
        out.push(combo.clone());
        let mut pos = m;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if combo[pos] < k - m + pos {
                break;
            }
        }
        combo[pos] += 1;
        for q in pos + 1..m {
            combo[q] = combo[q - 1] + 1;
        }
    }
}

/// The `S`-halfcube truncated to `{0..k-1}`: the `S`-cube over `{0..k-1}`
/// restricted to strictly increasing tuples. Fails when `k < m` (empty carrier).
pub fn make_halfcube(tuple: &SetTuple, k: usize) -> Result<Cube> {
    if k < tuple.m() {
        return Err(Error::invalid(format!(
            "halfcube over {{0..{k}}} with m={} has an empty carrier",
            tuple.m()
        )));
    }
    let points = increasing_tuples(tuple.m(), k);
    if points.len() > MAX_CUBE_SIZE {
        return Err(Error::Unsupported("halfcube carrier too large".into()));
    }
    build(tuple, points, vec![k; tuple.m()])
}

/// The `n`-halfcube, i.e. the `⟨{0}, .., {n-1}⟩`-halfcube, over `{0..k-1}`.
pub fn n_halfcube(n: usize, k: usize) -> Result<Cube> {
    make_halfcube(&SetTuple::standard(n)?, k)
}

/// The parbedding of the `d`-cube over `X` into the `S`-cube over `X`, where
/// `d = τ(S)`.
#[derive(Debug, Clone)]
pub struct CubeParbedding {
    /// Lexicographically least minimum transversal `t_0 < .. < t_{d-1}`.
    pub transversal: Vec<usize>,
    /// `beta[i]` = least `j` with `t_j ∈ S_i`.
    pub beta: Vec<usize>,
    /// `map[x]` is the target element for source element `x`.
    pub map: Vec<usize>,
    /// The `d`-cube over `X`.
    pub source: Cube,
    /// The `S`-cube over `X`.
    pub target: Cube,
}

/// Places the source coordinates on the transversal positions and fills every
/// other coordinate with `fill`.
pub fn cube_parbedding(tuple: &SetTuple, x_size: usize, fill: usize) -> Result<CubeParbedding> {
    if let Some(i) = tuple.sets().iter().position(|&s| s == 0) {
        return Err(Error::EmptySet(i));
    }
    if fill >= x_size {
        return Err(Error::IndexOutOfRange {
            what: "fill element",
            index: fill,
            limit: x_size,
        });
    }
    let transversal = least_minimum_transversal(&tuple.as_family())
        .filter(|t| !t.is_empty())
        .ok_or_else(|| Error::invalid("tuple has no nonempty transversal"))?;
    let beta: Vec<usize> = tuple
        .sets()
        .iter()
        .map(|&s| {
            transversal
                .iter()
                .position(|&t| s >> t & 1 == 1)
                .expect("transversal meets every set")
        })
        .collect();
    let d = transversal.len();
    let source = n_cube(d, x_size)?;
    let target = make_cube(&CubeShape::over(tuple.clone(), x_size))?;
    let map = source
        .points
        .iter()
        .map(|x| {
            let mut y = vec![fill; tuple.m()];
            for (j, &t) in transversal.iter().enumerate() {
                y[t] = x[j];
            }
            target.index_of(&y).expect("coordinates inside the target cube")
        })
        .collect();
    Ok(CubeParbedding {
        transversal,
        beta,
        map,
        source,
        target,
    })
}
