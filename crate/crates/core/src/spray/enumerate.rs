//! A fixed nonrepeating enumeration of `ℚ^m`.

use num_integer::Integer;
use num_rational::BigRational;

use super::RationalPoint;

/// Reduced fractions `p/q` with `|p| ≤ h` and `1 ≤ q ≤ h`, sorted by `(p, q)`.
pub fn fractions_up_to(h: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for p in -h..=h {
        for q in 1..=h {
            if p.gcd(&q) == 1 {
                out.push((p, q));
            }
        }
    }
    out
}

fn frac_height((p, q): (i64, i64)) -> i64 {
    p.abs().max(q)
}

/// `ℚ^m` ordered by height `max_j max(|p_j|, q_j)` and then lexicographically
/// on `(p_0, q_0, p_1, q_1, ..)`. Every point appears exactly once.
#[derive(Debug, Clone)]
pub struct RationalGrid {
    m: usize,
    height: i64,
    fractions: Vec<(i64, i64)>,
    // odometer over fractions^m; None once the current height is exhausted
    digits: Option<Vec<usize>>,
}

impl RationalGrid {
    pub fn new(m: usize) -> Self {
        assert!(m > 0, "the grid needs at least one coordinate");
        let mut grid = RationalGrid {
            m,
            height: 0,
            fractions: Vec::new(),
            digits: None,
        };
        grid.next_height();
        grid
    }

    fn next_height(&mut self) {
        self.height += 1;
        self.fractions = fractions_up_to(self.height);
        self.digits = Some(vec![0; self.m]);
    }

    fn advance(&mut self) {
        let len = self.fractions.len();
        let Some(digits) = self.digits.as_mut() else {
            return;
        };
        for pos in (0..digits.len()).rev() {
            digits[pos] += 1;
            if digits[pos] < len {
                return;
            }
            digits[pos] = 0;
        }
        self.digits = None;
    }
}

impl Iterator for RationalGrid {
    type Item = RationalPoint;

    fn next(&mut self) -> Option<RationalPoint> {
        loop {
            let Some(digits) = &self.digits else {
                self.next_height();
                continue;
            };
            let coords: Vec<(i64, i64)> = digits.iter().map(|&d| self.fractions[d]).collect();
            self.advance();
            if coords.iter().any(|&f| frac_height(f) == self.height) {
                let point = coords
                    .into_iter()
                    .map(|(p, q)| BigRational::new(p.into(), q.into()))
                    .collect();
                return Some(RationalPoint::new(point));
            }
        }
    }
}
