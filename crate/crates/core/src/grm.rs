//! Generalized Reed-Muller codes RM_q(r, m) built by evaluating reduced
//! monomials at the points of AG(m, q).

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::geometry::AffineSpace;
use crate::linalg::{min_weight_from_parity, CosetLeaderTable, FqMatrix, FqVector};
use crate::words::{decode_index, CodeWords};

/// Default cap on `q^dim` for exhaustive codeword enumeration.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1 << 24;

/// Order and number of variables of a GRM code.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GrmOrder {
    pub r: usize,
    pub m: usize,
}

/// A linear code with an RREF generator and a full-rank parity-check matrix.
#[derive(Clone, Debug)]
pub struct LinearCode {
    field: Field,
    n: usize,
    generator: FqMatrix,
    parity: FqMatrix,
    order: Option<GrmOrder>,
}

impl LinearCode {
    /// Row-reduces the generator and derives the parity-check matrix as its
    /// nullspace.
    pub fn from_generator(generator: &FqMatrix) -> Result<Self> {
        let generator = generator.row_basis();
        let parity = generator.nullspace();
        Self::assemble(generator, parity, None)
    }

    fn assemble(generator: FqMatrix, parity: FqMatrix, order: Option<GrmOrder>) -> Result<Self> {
        let n = generator.cols();
        if parity.cols() != n {
            return Err(Error::consistency("parity and generator lengths differ"));
        }
        if parity.rank() != parity.rows() {
            return Err(Error::consistency("parity-check matrix is not full rank"));
        }
        if generator.rows() + parity.rows() != n {
            return Err(Error::consistency(format!(
                "dim {} + redundancy {} != length {n}",
                generator.rows(),
                parity.rows()
            )));
        }
        if !generator.mul_transpose(&parity)?.is_zero() {
            return Err(Error::consistency("generator * parity^T != 0"));
        }
        Ok(LinearCode {
            field: generator.field().clone(),
            n,
            generator,
            parity,
            order,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.generator.rows()
    }

    pub fn generator(&self) -> &FqMatrix {
        &self.generator
    }

    pub fn parity(&self) -> &FqMatrix {
        &self.parity
    }

    pub fn order(&self) -> Option<GrmOrder> {
        self.order
    }

    pub fn size(&self) -> BigUint {
        BigUint::from(self.field.q()).pow(self.dim() as u32)
    }

    pub fn contains(&self, v: &FqVector) -> Result<bool> {
        if v.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        Ok(self.parity.mul_vec(v.coords())?.iter().all(|&c| c == 0))
    }

    /// Codeword for a message given as generator-row coefficients.
    pub fn encode(&self, message: &[u8]) -> Result<FqVector> {
        if message.len() != self.dim() {
            return Err(Error::LengthMismatch {
                expected: self.dim(),
                got: message.len(),
            });
        }
        let mut out = vec![0u8; self.n];
        for (&c, row) in message.iter().zip(self.generator.iter_rows()) {
            crate::linalg::axpy(&self.field, &mut out, c, row);
        }
        FqVector::new(&self.field, out)
    }

    /// `q^dim`, or `None` if it overflows u64.
    pub fn size_u64(&self) -> Option<u64> {
        (self.field.q() as u64).checked_pow(self.dim() as u32)
    }

    /// Calls `visit` on every codeword in message order.
    pub fn for_each_codeword(&self, cap: u64, mut visit: impl FnMut(&[u8])) -> Result<()> {
        let size = self.size_u64().unwrap_or(u64::MAX);
        Error::check_budget("codeword enumeration", size as u128, cap as u128)?;
        let q = self.field.q();
        let mut msg = vec![0u8; self.dim()];
        let mut word = vec![0u8; self.n];
        for idx in 0..size {
            decode_index(q, idx, &mut msg);
            word.iter_mut().for_each(|x| *x = 0);
            for (&c, row) in msg.iter().zip(self.generator.iter_rows()) {
                crate::linalg::axpy(&self.field, &mut word, c, row);
            }
            visit(&word);
        }
        Ok(())
    }

    pub fn codewords(&self, cap: u64) -> Result<CodeWords> {
        let mut rows = Vec::new();
        self.for_each_codeword(cap, |w| rows.push(w.to_vec()))?;
        CodeWords::from_rows(&self.field, self.n, rows)
    }

    /// Minimum nonzero weight by enumerating all codewords.
    pub fn min_weight_by_enumeration(&self, cap: u64) -> Result<Option<usize>> {
        let mut best: Option<usize> = None;
        self.for_each_codeword(cap, |w| {
            let wt = crate::linalg::weight(w);
            if wt > 0 {
                best = Some(best.map_or(wt, |b| b.min(wt)));
            }
        })?;
        Ok(best)
    }

    /// Minimum distance: by enumeration when `q^dim <= enumeration_cap`,
    /// otherwise from punctured syndrome balls of the parity matrix.
    pub fn min_distance(&self, enumeration_cap: u64, leader_cap: usize) -> Result<Option<usize>> {
        match self.size_u64() {
            Some(s) if s <= enumeration_cap => self.min_weight_by_enumeration(enumeration_cap),
            _ => min_weight_from_parity(&self.parity, leader_cap),
        }
    }

    /// True iff the code has no codeword of weight 1 or 2: no zero parity
    /// column and no two proportional columns.
    pub fn has_no_weight_one_or_two(&self) -> bool {
        let f = &self.field;
        let cols: Vec<Vec<u8>> = (0..self.n).map(|j| self.parity.column(j)).collect();
        if cols.iter().any(|c| c.iter().all(|&x| x == 0)) {
            return false;
        }
        for a in 0..self.n {
            for b in a + 1..self.n {
                let proportional = f.nonzero().any(|c| {
                    cols[a]
                        .iter()
                        .zip(&cols[b])
                        .all(|(&x, &y)| f.mul(c, x) == y)
                });
                if proportional {
                    return false;
                }
            }
        }
        true
    }

    pub fn leader_table(&self, cap: usize) -> Result<CosetLeaderTable> {
        CosetLeaderTable::build(&self.parity, cap)
    }

    /// Covering radius as the largest coset-leader weight.
    pub fn covering_radius(&self, cap: usize) -> Result<usize> {
        Ok(self.leader_table(cap)?.covering_radius())
    }

    pub fn weight_distribution(&self, cap: u64) -> Result<Vec<u64>> {
        let mut dist = vec![0u64; self.n + 1];
        self.for_each_codeword(cap, |w| dist[crate::linalg::weight(w)] += 1)?;
        Ok(dist)
    }

    /// Whether both codes have the same row space.
    pub fn same_code(&self, other: &LinearCode) -> bool {
        self.generator.same_row_space(&other.generator)
    }
}

fn check_order(q: usize, m: usize, r: usize) -> Result<()> {
    if r > (q - 1) * m {
        Err(Error::invalid(format!(
            "order {r} outside [0, {}] for q={q}, m={m}",
            (q - 1) * m
        )))
    } else {
        Ok(())
    }
}

fn binomial(a: i64, b: i64) -> BigUint {
    if b < 0 || a < b {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    for i in 0..b {
        acc = acc * BigUint::from((a - i) as u64) / BigUint::from((i + 1) as u64);
    }
    acc
}

/// Dimension of RM_q(r, m):
/// `sum_k (-1)^k C(m, k) C(m + r - kq, r - kq)`, with `C(a, b) = 0` when
/// `b < 0` or `a < b`.
pub fn grm_dimension(q: usize, m: usize, r: usize) -> Result<u64> {
    check_order(q, m, r)?;
    let (q, m, r) = (q as i64, m as i64, r as i64);
    let mut pos = BigUint::zero();
    let mut neg = BigUint::zero();
    for k in 0..=m {
        let term = binomial(m, k) * binomial(m + r - k * q, r - k * q);
        if k % 2 == 0 {
            pos += term;
        } else {
            neg += term;
        }
    }
    if neg > pos {
        return Err(Error::consistency("negative dimension"));
    }
    (pos - neg)
        .to_u64()
        .ok_or_else(|| Error::invalid("dimension overflows u64"))
}

/// Minimum distance of RM_q(r, m): with `r = (q-1)a + b`, `0 <= b < q-1`,
/// it is `(q - b) q^(m - a - 1)`. For `r = (q-1)m` the code is the whole
/// space and the distance is 1.
pub fn grm_min_distance(q: usize, m: usize, r: usize) -> Result<u64> {
    check_order(q, m, r)?;
    if q < 2 {
        return Err(Error::invalid("q must be at least 2"));
    }
    let a = r / (q - 1);
    let b = r % (q - 1);
    if a >= m {
        // r = (q-1)m: every vector is a codeword
        return Ok(1);
    }
    Ok((q - b) as u64 * (q as u64).pow((m - a - 1) as u32))
}

/// Order of the dual: RM_q(r, m)^perp = RM_q((q-1)m - 1 - r, m).
pub fn dual_order(q: usize, m: usize, r: usize) -> Result<usize> {
    if r >= (q - 1) * m {
        return Err(Error::invalid(format!(
            "order {r} has no GRM dual (needs r < {})",
            (q - 1) * m
        )));
    }
    Ok((q - 1) * m - 1 - r)
}

/// Order of the code the switching construction starts from.
pub fn target_order(q: usize, m: usize) -> Result<usize> {
    if q < 3 {
        return Err(Error::invalid("the construction needs q >= 3"));
    }
    Ok((q - 1) * m - 2)
}

/// Exponent vectors `(a_1..a_m)`, `0 <= a_j <= q-1`, `sum a_j <= r`, in
/// base-q order of the exponent vector (a_1 least significant).
pub fn reduced_monomials(q: usize, m: usize, r: usize) -> Vec<Vec<usize>> {
    let total = q.pow(m as u32);
    (0..total)
        .map(|mut idx| {
            (0..m)
                .map(|_| {
                    let d = idx % q;
                    idx /= q;
                    d
                })
                .collect::<Vec<usize>>()
        })
        .filter(|e| e.iter().sum::<usize>() <= r)
        .collect()
}

/// RM_q(r, m) from monomial evaluations at the canonical point order.
pub fn build_grm(space: &AffineSpace, r: usize) -> Result<LinearCode> {
    let (q, m, n) = (space.q(), space.m(), space.n());
    check_order(q, m, r)?;
    let f = space.field();
    let rows: Vec<Vec<u8>> = reduced_monomials(q, m, r)
        .iter()
        .map(|exps| {
            (0..n)
                .map(|j| {
                    space
                        .point(j)
                        .iter()
                        .zip(exps)
                        .fold(1u8, |acc, (&x, &e)| f.mul(acc, f.pow(x, e as u64)))
                })
                .collect()
        })
        .collect();
    let eval = FqMatrix::from_rows(f, n, &rows)?;
    let generator = eval.row_basis();
    let expected = grm_dimension(q, m, r)? as usize;
    if generator.rows() != expected {
        return Err(Error::consistency(format!(
            "evaluation rank {} differs from the dimension formula {expected}",
            generator.rows()
        )));
    }
    let parity = generator.nullspace();
    LinearCode::assemble(generator, parity, Some(GrmOrder { r, m }))
}

/// The `(m+1) x q^m` parity-check matrix: an all-ones row, then the point
/// coordinates x_1..x_m column by column.
pub fn target_parity(space: &AffineSpace) -> FqMatrix {
    let (m, n) = (space.m(), space.n());
    let mut data = vec![1u8; n];
    for l in 0..m {
        data.extend((0..n).map(|j| space.point(j)[l]));
    }
    FqMatrix::new(space.field(), m + 1, n, data).expect("valid elements")
}

/// RM_q((q-1)m - 2, m) carrying the explicit parity-check matrix.
pub fn build_target_code(space: &AffineSpace) -> Result<LinearCode> {
    let r = target_order(space.q(), space.m())?;
    let grm = build_grm(space, r)?;
    let parity = target_parity(space);
    let n = space.n();
    if grm.dim() != n - space.m() - 1 {
        return Err(Error::consistency(format!(
            "dimension {} differs from n - m - 1 = {}",
            grm.dim(),
            n - space.m() - 1
        )));
    }
    LinearCode::assemble(grm.generator, parity, grm.order)
}
