//! The affine space AG(m, q): points in a fixed order, lines, collinearity.
//!
//! Point index i decodes base q into coordinates (x_1, ..., x_m) with x_1
//! the least significant digit. This order is the column order of every
//! matrix built on top of the space.

use std::cmp::Ordering;
use std::fmt;

use once_cell::sync::OnceCell;

use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Clone)]
pub struct AffineSpace {
    field: Field,
    m: usize,
    n: usize,
    coords: Vec<u8>,
    lines: OnceCell<Vec<Line>>,
}

/// A line `{base + t * direction : t in F_q}` in canonical form: `base` is
/// the smallest point index on the line and `direction` has last nonzero
/// coordinate 1. Points are listed in t order starting from `base`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Line {
    base: usize,
    direction: Vec<u8>,
    points: Vec<usize>,
}

impl Line {
    pub fn base(&self) -> usize {
        self.base
    }

    pub fn direction(&self) -> &[u8] {
        &self.direction
    }

    /// Points in t order.
    pub fn points(&self) -> &[usize] {
        &self.points
    }

    pub fn sorted_points(&self) -> Vec<usize> {
        let mut p = self.points.clone();
        p.sort_unstable();
        p
    }

    pub fn contains(&self, point: usize) -> bool {
        self.points.contains(&point)
    }

    /// Parameter t (as a field element) of a point on the line.
    pub fn parameter(&self, point: usize) -> Option<u8> {
        self.points
            .iter()
            .position(|&p| p == point)
            .map(|t| t as u8)
    }
}

impl Ord for Line {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sorted_points().cmp(&other.sorted_points())
    }
}

impl PartialOrd for Line {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.sorted_points())
    }
}

impl AffineSpace {
    pub fn new(field: &Field, m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::invalid("dimension m must be at least 1"));
        }
        let q = field.q();
        let n = q
            .checked_pow(m as u32)
            .filter(|&n| n <= 1 << 24)
            .ok_or_else(|| Error::invalid(format!("AG({m},{q}) is too large")))?;
        let mut coords = vec![0u8; n * m];
        for i in 0..n {
            let mut rest = i;
            for x in &mut coords[i * m..(i + 1) * m] {
                *x = (rest % q) as u8;
                rest /= q;
            }
        }
        Ok(AffineSpace {
            field: field.clone(),
            m,
            n,
            coords,
            lines: OnceCell::new(),
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn q(&self) -> usize {
        self.field.q()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of points, q^m.
    pub fn n(&self) -> usize {
        self.n
    }

    /// `[m]_q = (q^m - 1)/(q - 1)`, the number of lines through a point.
    pub fn q_analog(&self) -> usize {
        (self.n - 1) / (self.q() - 1)
    }

    pub fn point(&self, i: usize) -> &[u8] {
        &self.coords[i * self.m..(i + 1) * self.m]
    }

    pub fn index_of(&self, coords: &[u8]) -> usize {
        coords
            .iter()
            .rev()
            .fold(0, |acc, &c| acc * self.q() + c as usize)
    }

    fn check_point(&self, i: usize) -> Result<()> {
        if i < self.n {
            Ok(())
        } else {
            Err(Error::invalid(format!(
                "point {i} outside AG({},{})",
                self.m,
                self.q()
            )))
        }
    }

    fn line_from(&self, a: usize, direction: &[u8]) -> Line {
        let f = &self.field;
        let pa = self.point(a);
        let mut pts: Vec<usize> = f
            .elements()
            .map(|t| {
                let p: Vec<u8> = pa
                    .iter()
                    .zip(direction)
                    .map(|(&x, &d)| f.add(x, f.mul(t, d)))
                    .collect();
                self.index_of(&p)
            })
            .collect();
        let base = *pts.iter().min().unwrap();
        if base != a {
            let pb = self.point(base);
            pts = f
                .elements()
                .map(|t| {
                    let p: Vec<u8> = pb
                        .iter()
                        .zip(direction)
                        .map(|(&x, &d)| f.add(x, f.mul(t, d)))
                        .collect();
                    self.index_of(&p)
                })
                .collect();
        }
        Line {
            base,
            direction: direction.to_vec(),
            points: pts,
        }
    }

    /// Scales a nonzero vector so its last nonzero coordinate is 1.
    fn normalize_direction(&self, d: &mut [u8]) {
        let f = &self.field;
        let last = d.iter().rposition(|&c| c != 0).expect("nonzero direction");
        let inv = f.inv(d[last]).expect("nonzero");
        for c in d.iter_mut() {
            *c = f.mul(inv, *c);
        }
    }

    /// The unique line through two distinct points.
    pub fn line_through(&self, a: usize, b: usize) -> Result<Line> {
        self.check_point(a)?;
        self.check_point(b)?;
        if a == b {
            return Err(Error::invalid("a line needs two distinct points"));
        }
        let f = &self.field;
        let mut d: Vec<u8> = self
            .point(b)
            .iter()
            .zip(self.point(a))
            .map(|(&y, &x)| f.sub(y, x))
            .collect();
        self.normalize_direction(&mut d);
        Ok(self.line_from(a, &d))
    }

    /// All `[m]_q` lines through point `a`, sorted.
    pub fn lines_through_point(&self, a: usize) -> Result<Vec<Line>> {
        self.check_point(a)?;
        let mut lines = Vec::with_capacity(self.q_analog());
        for d in self.directions() {
            lines.push(self.line_from(a, &d));
        }
        lines.sort();
        Ok(lines)
    }

    /// Normalized directions, one per parallel class, in index order.
    pub fn directions(&self) -> Vec<Vec<u8>> {
        (1..self.n)
            .map(|i| self.point(i).to_vec())
            .filter(|d| d[d.iter().rposition(|&c| c != 0).unwrap()] == 1)
            .collect()
    }

    /// Every line of the space, sorted. Computed once.
    pub fn lines(&self) -> &[Line] {
        self.lines.get_or_init(|| {
            let mut out = Vec::new();
            for d in self.directions() {
                let mut seen = vec![false; self.n];
                for a in 0..self.n {
                    if !seen[a] {
                        let l = self.line_from(a, &d);
                        for &p in l.points() {
                            seen[p] = true;
                        }
                        out.push(l);
                    }
                }
            }
            out.sort();
            out
        })
    }

    /// True iff the three points lie on one line; trivially true when two
    /// of them coincide.
    pub fn collinear(&self, a: usize, b: usize, c: usize) -> Result<bool> {
        self.check_point(a)?;
        self.check_point(b)?;
        self.check_point(c)?;
        if a == b || a == c || b == c {
            return Ok(true);
        }
        Ok(self.line_through(a, b)?.contains(c))
    }
}

impl fmt::Debug for AffineSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AG({}, {})", self.m, self.q())
    }
}
