//! Sphere relations around rational centers and spray covers of `ℚ^m`.
//!
//! For a center `c`, points `x, y` are `E(c)`-related iff `‖x - c‖ = ‖y - c‖`.
//! All comparisons use squared distances in exact rational arithmetic.
//!
//! With centers `c_0..c_{n-1}`, a coloring of `ℚ^m` is acceptable exactly when
//! color class `i` meets every sphere around `c_i` in finitely many points,
//! i.e. the color classes are sprays centered at the `c_i` covering `ℚ^m`.

mod enumerate;

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::hyperspace::Coloring;
use crate::setsystem::full_mask;
use crate::stream::{
    acceptability_audit, checked_prefix, greedy_coloring, AuditReport, DeclaredProfile,
    StreamHyperspace,
};

pub use enumerate::{fractions_up_to, RationalGrid};

/// A point of `ℚ^m`. Coordinates are kept reduced with positive denominators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalPoint(Vec<BigRational>);

impl RationalPoint {
    pub fn new(coords: Vec<BigRational>) -> Self {
        RationalPoint(coords)
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        RationalPoint(coords.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.0
    }

    pub fn squared_distance(&self, other: &RationalPoint) -> Result<BigRational> {
        if self.dim() != other.dim() {
            return Err(Error::ArityMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(self
            .0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| {
                let d = a - b;
                &d * &d
            })
            .fold(BigRational::zero(), |acc, d| acc + d))
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::parse(format!("{s:?} is not a rational number"));
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

impl FromStr for RationalPoint {
    type Err = Error;

    /// Comma-separated coordinates, each an integer or `p/q`.
    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Err(Error::parse("empty point"));
        }
        s.split(',').map(parse_rational).collect::<Result<_>>().map(RationalPoint)
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, c) in self.0.iter().enumerate() {
            if j > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Parses `"0,0;1,0;0,1"`: points separated by semicolons.
pub fn parse_centers(s: &str) -> Result<Vec<RationalPoint>> {
    s.split(';').map(str::parse).collect()
}

/// Whether `x` and `y` lie on a common sphere around `c`.
pub fn same_sphere(c: &RationalPoint, x: &RationalPoint, y: &RationalPoint) -> Result<bool> {
    Ok(c.squared_distance(x)? == c.squared_distance(y)?)
}

/// Rank of a rational matrix by Gaussian elimination.
fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let head = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] / &head[col];
            for (x, h) in row.iter_mut().zip(&head).skip(col) {
                *x -= &factor * h;
            }
        }
        rank += 1;
    }
    rank
}

fn affinely_independent(points: &[&RationalPoint]) -> bool {
    let Some((base, rest)) = points.split_first() else {
        return true;
    };
    let rows = rest
        .iter()
        .map(|p| p.0.iter().zip(&base.0).map(|(a, b)| a - b).collect())
        .collect();
    rank(rows) == rest.len()
}

/// Whether every `min(m+1, n)` of the centers are affinely independent.
/// Centers of mixed dimension are never in general position.
pub fn general_position_check(centers: &[RationalPoint]) -> bool {
    let Some(first) = centers.first() else {
        return true;
    };
    let m = first.dim();
    if centers.iter().any(|c| c.dim() != m) {
        return false;
    }
    let size = (m + 1).min(centers.len());
    let mut chosen: Vec<usize> = (0..size).collect();
    loop {
        let subset: Vec<&RationalPoint> = chosen.iter().map(|&k| &centers[k]).collect();
        if !affinely_independent(&subset) {
            return false;
        }
        // next combination in lexicographic order
        let n = centers.len();
        let Some(pos) = (0..size).rev().find(|&p| chosen[p] < n - size + p) else {
            return true;
        };
        chosen[pos] += 1;
        for q in pos + 1..size {
            chosen[q] = chosen[q - 1] + 1;
        }
    }
}

/// Centers of the sprays, all in `ℚ^m` and pairwise distinct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SprayConfig {
    centers: Vec<RationalPoint>,
}

impl SprayConfig {
    pub fn new(centers: Vec<RationalPoint>) -> Result<Self> {
        let Some(first) = centers.first() else {
            return Err(Error::invalid("at least one center is required"));
        };
        let m = first.dim();
        if m == 0 {
            return Err(Error::invalid("centers need at least one coordinate"));
        }
        if let Some(c) = centers.iter().find(|c| c.dim() != m) {
            return Err(Error::ArityMismatch {
                expected: m,
                found: c.dim(),
            });
        }
        for (k, c) in centers.iter().enumerate() {
            if let Some(first) = centers[..k].iter().position(|d| d == c) {
                return Err(Error::invalid(format!(
                    "centers {first} and {k} coincide"
                )));
            }
        }
        if centers.len() > 64 {
            return Err(Error::GroundTooLarge(centers.len()));
        }
        Ok(SprayConfig { centers })
    }

    pub fn centers(&self) -> &[RationalPoint] {
        &self.centers
    }

    pub fn m(&self) -> usize {
        self.centers[0].dim()
    }

    pub fn n(&self) -> usize {
        self.centers.len()
    }
}

/// `ℚ^m` in [`RationalGrid`] order with the sphere relations of the centers.
///
/// The declared profile is every index set of size at least `m`: `m` spheres
/// with affinely independent centers meet in at most 2 points, and `m + 1`
/// in at most 1.
#[derive(Debug, Clone)]
pub struct SprayStream {
    config: SprayConfig,
    profile: DeclaredProfile,
}

pub fn spray_stream(config: SprayConfig) -> Result<SprayStream> {
    if !general_position_check(config.centers()) {
        return Err(Error::invalid("spray centers are not in general position"));
    }
    let (n, m) = (config.n(), config.m());
    let entries = (1..=full_mask(n)).filter_map(|mask| {
        let size = mask.count_ones() as usize;
        (size >= m).then_some((mask, Some(if size == m { 2 } else { 1 })))
    });
    let profile = DeclaredProfile::new(n, entries)?;
    Ok(SprayStream { config, profile })
}

impl SprayStream {
    pub fn config(&self) -> &SprayConfig {
        &self.config
    }
}

impl StreamHyperspace for SprayStream {
    type Element = RationalPoint;
    type Key = BigRational;

    fn n(&self) -> usize {
        self.config.n()
    }

    fn elements(&self) -> Box<dyn Iterator<Item = RationalPoint> + '_> {
        Box::new(RationalGrid::new(self.config.m()))
    }

    fn class_key(&self, i: usize, x: &RationalPoint) -> BigRational {
        self.config.centers[i]
            .squared_distance(x)
            .expect("points share the centers' dimension")
    }

    fn declared_profile(&self) -> &DeclaredProfile {
        &self.profile
    }
}

/// A prefix of `ℚ^m` split into sprays around the centers.
#[derive(Debug, Clone)]
pub struct SprayCover {
    pub points: Vec<RationalPoint>,
    pub coloring: Coloring,
    pub report: AuditReport,
}

/// Greedy-colors the first `len` points and audits the result.
pub fn cover_with_sprays(config: SprayConfig, len: usize) -> Result<SprayCover> {
    let stream = spray_stream(config)?;
    let coloring = greedy_coloring(&stream, len)?;
    let report = acceptability_audit(&stream, &coloring, len)?;
    let points = checked_prefix(&stream, len)?;
    Ok(SprayCover {
        points,
        coloring,
        report,
    })
}

/// One row per point: numerator and denominator of each coordinate, then the
/// color. Columns are `x_num,x_den,y_num,y_den,color` in the plane and
/// `c0_num,c0_den,..` otherwise.
pub fn write_csv(cover: &SprayCover, mut out: impl Write) -> std::io::Result<()> {
    let m = cover.points.first().map_or(2, RationalPoint::dim);
    let names: Vec<String> = if m == 2 {
        vec!["x".into(), "y".into()]
    } else {
        (0..m).map(|j| format!("c{j}")).collect()
    };
    for name in &names {
        write!(out, "{name}_num,{name}_den,")?;
    }
    writeln!(out, "color")?;
    for (k, p) in cover.points.iter().enumerate() {
        for c in p.coords() {
            write!(out, "{},{},", c.numer(), c.denom())?;
        }
        writeln!(out, "{}", cover.coloring.color(k))?;
    }
    Ok(())
}

/// Largest absolute numerator or denominator among the coordinates.
pub fn height(p: &RationalPoint) -> BigInt {
    p.coords()
        .iter()
        .map(|c| c.numer().abs().max(c.denom().clone()))
        .max()
        .unwrap_or_default()
}
