//! Dense vectors and matrices over GF(q), row reduction, and syndrome
//! tables.
//!
//! Syndromes are encoded as integers in `[0, q^s)`: the digits, base q, are
//! the element indices of `H x^T`, row 0 least significant.

use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::field::Field;

/// Default cap on the number of entries in a coset-leader table.
pub const DEFAULT_LEADER_CAP: usize = 1 << 26;

/// Marks a syndrome not reachable from the columns of the parity matrix.
pub const UNREACHABLE: u8 = u8::MAX;

#[derive(Clone, PartialEq, Eq)]
pub struct FqVector {
    field: Field,
    coords: Vec<u8>,
}

impl FqVector {
    pub fn new(field: &Field, coords: Vec<u8>) -> Result<Self> {
        if let Some(&bad) = coords.iter().find(|&&c| c as usize >= field.q()) {
            return Err(Error::ElementOutOfRange {
                idx: bad as usize,
                q: field.q(),
            });
        }
        Ok(FqVector {
            field: field.clone(),
            coords,
        })
    }

    /// Caller guarantees every coordinate is a valid element.
    pub(crate) fn from_raw(field: &Field, coords: Vec<u8>) -> Self {
        debug_assert!(coords.iter().all(|&c| (c as usize) < field.q()));
        FqVector {
            field: field.clone(),
            coords,
        }
    }

    pub fn zeros(field: &Field, n: usize) -> Self {
        Self::from_raw(field, vec![0; n])
    }

    /// `scale * e_i`.
    pub fn unit(field: &Field, n: usize, i: usize, scale: u8) -> Self {
        let mut v = vec![0; n];
        v[i] = scale;
        Self::from_raw(field, v)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &[u8] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<u8> {
        self.coords
    }

    pub fn weight(&self) -> usize {
        weight(&self.coords)
    }

    pub fn support(&self) -> Vec<usize> {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn distance(&self, other: &FqVector) -> Result<usize> {
        self.check_compatible(other)?;
        Ok(distance(&self.coords, &other.coords))
    }

    pub fn add(&self, other: &FqVector) -> Result<FqVector> {
        self.check_compatible(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(&a, &b)| self.field.add(a, b))
            .collect();
        Ok(Self::from_raw(&self.field, coords))
    }

    pub fn sub(&self, other: &FqVector) -> Result<FqVector> {
        self.check_compatible(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(&a, &b)| self.field.sub(a, b))
            .collect();
        Ok(Self::from_raw(&self.field, coords))
    }

    pub fn scale(&self, c: u8) -> FqVector {
        let coords = self.coords.iter().map(|&a| self.field.mul(c, a)).collect();
        Self::from_raw(&self.field, coords)
    }

    fn check_compatible(&self, other: &FqVector) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                got: other.len(),
            });
        }
        Ok(())
    }
}

impl Hash for FqVector {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coords.hash(state);
    }
}

impl fmt::Debug for FqVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coords)
    }
}

pub fn weight(v: &[u8]) -> usize {
    v.iter().filter(|&&c| c != 0).count()
}

pub fn distance(a: &[u8], b: &[u8]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

/// `acc += c * v` in place.
pub(crate) fn axpy(field: &Field, acc: &mut [u8], c: u8, v: &[u8]) {
    if c == 0 {
        return;
    }
    for (a, &x) in acc.iter_mut().zip(v) {
        *a = field.add(*a, field.mul(c, x));
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct FqMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

/// Result of [`FqMatrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: FqMatrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl FqMatrix {
    pub fn new(field: &Field, rows: usize, cols: usize, data: Vec<u8>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::LengthMismatch {
                expected: rows * cols,
                got: data.len(),
            });
        }
        if let Some(&bad) = data.iter().find(|&&c| c as usize >= field.q()) {
            return Err(Error::ElementOutOfRange {
                idx: bad as usize,
                q: field.q(),
            });
        }
        Ok(FqMatrix {
            field: field.clone(),
            rows,
            cols,
            data,
        })
    }

    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Self {
        FqMatrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows<R: AsRef<[u8]>>(field: &Field, cols: usize, rows: &[R]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::LengthMismatch {
                    expected: cols,
                    got: r.len(),
                });
            }
            data.extend_from_slice(r);
        }
        Self::new(field, rows.len(), cols, data)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[u8] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vector(&self, r: usize) -> FqVector {
        FqVector::from_raw(&self.field, self.row(r).to_vec())
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[u8]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn column(&self, c: usize) -> Vec<u8> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn push_row(&mut self, row: &[u8]) -> Result<()> {
        if row.len() != self.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                got: row.len(),
            });
        }
        self.data.extend_from_slice(row);
        self.rows += 1;
        Ok(())
    }

    /// Matrix with the selected columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> FqMatrix {
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for r in 0..self.rows {
            data.extend(cols.iter().map(|&c| self.get(r, c)));
        }
        FqMatrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: cols.len(),
            data,
        }
    }

    /// `self * other^T`.
    pub fn mul_transpose(&self, other: &FqMatrix) -> Result<FqMatrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.cols != other.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                got: other.cols,
            });
        }
        let mut out = FqMatrix::zeros(&self.field, self.rows, other.rows);
        for i in 0..self.rows {
            for j in 0..other.rows {
                out.data[i * other.rows + j] = dot(&self.field, self.row(i), other.row(j));
            }
        }
        Ok(out)
    }

    /// `self * v^T`.
    pub fn mul_vec(&self, v: &[u8]) -> Result<Vec<u8>> {
        if v.len() != self.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        Ok(self.iter_rows().map(|r| dot(&self.field, r, v)).collect())
    }

    /// Reduced row-echelon form. Pivots are taken in the leftmost column
    /// that still has a nonzero entry, using the topmost such row.
    pub fn rref(&self) -> Rref {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..m.cols {
            if lead == m.rows {
                break;
            }
            let Some(r) = (lead..m.rows).find(|&r| m.get(r, c) != 0) else {
                continue;
            };
            m.swap_rows(lead, r);
            let inv = f.inv(m.get(lead, c)).expect("pivot is nonzero");
            m.scale_row(lead, inv);
            let pivot_row = m.row(lead).to_vec();
            for r in 0..m.rows {
                if r != lead {
                    let factor = m.get(r, c);
                    if factor != 0 {
                        let start = r * m.cols;
                        axpy(
                            f,
                            &mut m.data[start..start + m.cols],
                            f.neg(factor),
                            &pivot_row,
                        );
                    }
                }
            }
            pivots.push(c);
            lead += 1;
        }
        let rank = pivots.len();
        Rref {
            matrix: m,
            pivots,
            rank,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// The nonzero rows of the RREF: a canonical basis of the row space.
    pub fn row_basis(&self) -> FqMatrix {
        let Rref { matrix, rank, .. } = self.rref();
        FqMatrix {
            field: matrix.field,
            rows: rank,
            cols: matrix.cols,
            data: matrix.data[..rank * matrix.cols].to_vec(),
        }
    }

    /// Basis of `{x : self * x^T = 0}`, one row per free column in
    /// ascending order.
    pub fn nullspace(&self) -> FqMatrix {
        let f = &self.field;
        let Rref { matrix, pivots, .. } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = FqMatrix::zeros(f, free.len(), self.cols);
        for (k, &fc) in free.iter().enumerate() {
            out.data[k * self.cols + fc] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                out.data[k * self.cols + pc] = f.neg(matrix.get(r, fc));
            }
        }
        out
    }

    /// Whether both matrices span the same row space.
    pub fn same_row_space(&self, other: &FqMatrix) -> bool {
        self.field == other.field
            && self.cols == other.cols
            && self.row_basis() == other.row_basis()
    }

    /// Rows of space-separated element indices, one row per line.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in self.iter_rows() {
            s.push_str(&row_to_text(r));
            s.push('\n');
        }
        s
    }

    pub fn from_text(field: &Field, text: &str) -> Result<FqMatrix> {
        let mut rows = Vec::new();
        for (n, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            rows.push(parse_row(field, line).map_err(|msg| Error::Parse { line: n + 1, msg })?);
        }
        let cols = rows.first().map_or(0, Vec::len);
        FqMatrix::from_rows(field, cols, &rows)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    fn scale_row(&mut self, r: usize, s: u8) {
        let f = self.field.clone();
        for x in &mut self.data[r * self.cols..(r + 1) * self.cols] {
            *x = f.mul(s, *x);
        }
    }
}

impl fmt::Debug for FqMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} over {:?}", self.rows, self.cols, self.field)?;
        write!(f, "{}", self.to_text())
    }
}

pub(crate) fn row_to_text(r: &[u8]) -> String {
    r.iter().map(u8::to_string).collect::<Vec<_>>().join(" ")
}

pub(crate) fn parse_row(field: &Field, line: &str) -> std::result::Result<Vec<u8>, String> {
    line.split_whitespace()
        .map(|tok| {
            let v: usize = tok
                .parse()
                .map_err(|_| format!("`{tok}` is not an element index"))?;
            field.elem(v).map_err(|e| e.to_string())
        })
        .collect()
}

pub(crate) fn dot(field: &Field, a: &[u8], b: &[u8]) -> u8 {
    a.iter()
        .zip(b)
        .fold(0, |acc, (&x, &y)| field.add(acc, field.mul(x, y)))
}

/// Incrementally maintained echelon basis; used where many candidate rows
/// are tested against a growing span.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: Field,
    cols: usize,
    rows: Vec<Vec<u8>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(field: &Field, cols: usize) -> Self {
        Echelon {
            field: field.clone(),
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &[u8]) -> Vec<u8> {
        let f = &self.field;
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = w[p];
            if c != 0 {
                axpy(f, &mut w, f.neg(c), row);
            }
        }
        w
    }

    pub fn contains(&self, v: &[u8]) -> bool {
        self.reduce(v).iter().all(|&c| c == 0)
    }

    /// Adds `v` to the span; returns false if it was already there.
    pub fn insert(&mut self, v: &[u8]) -> bool {
        assert_eq!(v.len(), self.cols);
        let f = self.field.clone();
        let mut w = self.reduce(v);
        let Some(p) = w.iter().position(|&c| c != 0) else {
            return false;
        };
        let inv = f.inv(w[p]).expect("nonzero");
        for x in w.iter_mut() {
            *x = f.mul(inv, *x);
        }
        // keep existing rows reduced at the new pivot
        for row in self.rows.iter_mut() {
            let c = row[p];
            if c != 0 {
                axpy(&f, row, f.neg(c), &w);
            }
        }
        self.rows.push(w);
        self.pivots.push(p);
        true
    }
}

/// True iff `v` lies in the row space of `basis`.
pub fn span_contains(basis: &FqMatrix, v: &FqVector) -> Result<bool> {
    if basis.field() != v.field() {
        return Err(Error::FieldMismatch);
    }
    if basis.cols() != v.len() {
        return Err(Error::LengthMismatch {
            expected: basis.cols(),
            got: v.len(),
        });
    }
    let mut ext = basis.clone();
    ext.push_row(v.coords())?;
    Ok(ext.rank() == basis.rank())
}

/// Integer encoding of `F_q^s`, digit r is coordinate r.
#[derive(Clone, Debug)]
pub struct SyndromeSpace {
    field: Field,
    digits: usize,
    size: usize,
    place: Vec<usize>,
}

impl SyndromeSpace {
    pub fn new(field: &Field, digits: usize, cap: usize) -> Result<Self> {
        let needed = (field.q() as u128)
            .checked_pow(digits as u32)
            .unwrap_or(u128::MAX);
        Error::check_budget("syndrome space", needed, cap as u128)?;
        let size = needed as usize;
        let place = (0..digits).map(|r| field.q().pow(r as u32)).collect();
        Ok(SyndromeSpace {
            field: field.clone(),
            digits,
            size,
            place,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn digits(&self) -> usize {
        self.digits
    }

    pub fn encode(&self, digits: &[u8]) -> usize {
        digits
            .iter()
            .zip(&self.place)
            .map(|(&d, &p)| d as usize * p)
            .sum()
    }

    pub fn decode_into(&self, mut s: usize, out: &mut [u8]) {
        let q = self.field.q();
        for d in out.iter_mut().take(self.digits) {
            *d = (s % q) as u8;
            s /= q;
        }
    }

    pub fn decode(&self, s: usize) -> Vec<u8> {
        let mut out = vec![0; self.digits];
        self.decode_into(s, &mut out);
        out
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.combine(a, b, |x, y| self.field.add(x, y))
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.combine(a, b, |x, y| self.field.sub(x, y))
    }

    pub fn scale(&self, c: u8, a: usize) -> usize {
        let q = self.field.q();
        let mut a = a;
        let mut out = 0;
        for &p in &self.place {
            out += self.field.mul(c, (a % q) as u8) as usize * p;
            a /= q;
        }
        out
    }

    fn combine(&self, mut a: usize, mut b: usize, op: impl Fn(u8, u8) -> u8) -> usize {
        let q = self.field.q();
        let mut out = 0;
        for &p in &self.place {
            out += op((a % q) as u8, (b % q) as u8) as usize * p;
            a /= q;
            b /= q;
        }
        out
    }
}

/// Syndrome of `v` under `parity`, encoded base q with row 0 least
/// significant.
pub fn syndrome(parity: &FqMatrix, v: &FqVector) -> Result<u64> {
    if parity.field() != v.field() {
        return Err(Error::FieldMismatch);
    }
    let digits = parity.mul_vec(v.coords())?;
    let q = parity.field().q() as u64;
    Ok(digits.iter().rev().fold(0u64, |acc, &d| acc * q + d as u64))
}

/// Fast syndrome evaluation for a fixed parity matrix: each column's
/// syndrome multiples are precomputed as digit vectors.
#[derive(Clone, Debug)]
pub struct SyndromeEncoder {
    space: SyndromeSpace,
    /// `columns[j]` holds the digits of column j.
    columns: Vec<Vec<u8>>,
}

impl SyndromeEncoder {
    pub fn new(parity: &FqMatrix, cap: usize) -> Result<Self> {
        let space = SyndromeSpace::new(parity.field(), parity.rows(), cap)?;
        let columns = (0..parity.cols()).map(|j| parity.column(j)).collect();
        Ok(SyndromeEncoder { space, columns })
    }

    pub fn space(&self) -> &SyndromeSpace {
        &self.space
    }

    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    /// Encoded syndrome of a raw coordinate slice.
    pub fn syndrome(&self, v: &[u8]) -> usize {
        let f = &self.space.field;
        let mut acc = vec![0u8; self.space.digits];
        for (&c, col) in v.iter().zip(&self.columns) {
            axpy(f, &mut acc, c, col);
        }
        self.space.encode(&acc)
    }

    /// Encoded syndrome of `c * e_j`.
    pub fn column_syndrome(&self, j: usize, c: u8) -> usize {
        let f = &self.space.field;
        let digits: Vec<u8> = self.columns[j].iter().map(|&x| f.mul(c, x)).collect();
        self.space.encode(&digits)
    }

    /// Distinct nonzero syndromes of single-coordinate vectors, skipping
    /// column `skip` if given.
    fn steps(&self, skip: Option<usize>) -> Vec<usize> {
        let f = &self.space.field;
        let mut steps: Vec<usize> = (0..self.columns.len())
            .filter(|&j| Some(j) != skip)
            .flat_map(|j| f.nonzero().map(move |c| (j, c)))
            .map(|(j, c)| self.column_syndrome(j, c))
            .filter(|&s| s != 0)
            .collect();
        steps.sort_unstable();
        steps.dedup();
        steps
    }

    /// Breadth-first ball growth from syndrome 0. Entry s is the minimum
    /// weight of a vector with syndrome s, or [`UNREACHABLE`].
    /// Stops after layer `max_layer` when given.
    fn grow_ball(&self, steps: &[usize], max_layer: Option<u8>) -> Vec<u8> {
        let space = &self.space;
        let f = &space.field;
        let q = f.q();
        let mut weights = vec![UNREACHABLE; space.size];
        weights[0] = 0;
        let step_digits: Vec<Vec<u8>> = steps.iter().map(|&s| space.decode(s)).collect();
        let mut frontier = vec![0usize];
        let mut layer = 0u8;
        let mut digits = vec![0u8; space.digits];
        while !frontier.is_empty() && Some(layer) != max_layer {
            assert!(layer < UNREACHABLE - 1, "coset leader weight overflow");
            layer += 1;
            let mut next = Vec::new();
            for &s in &frontier {
                space.decode_into(s, &mut digits);
                for sd in &step_digits {
                    let mut t = 0;
                    for ((&a, &b), &p) in digits.iter().zip(sd).zip(&space.place) {
                        t += f.add(a, b) as usize * p;
                    }
                    if weights[t] == UNREACHABLE {
                        weights[t] = layer;
                        next.push(t);
                    }
                }
            }
            debug_assert!(q > 1);
            frontier = next;
        }
        weights
    }
}

/// Minimal Hamming weight of every coset of the kernel of a parity matrix,
/// indexed by syndrome.
#[derive(Clone, Debug)]
pub struct CosetLeaderTable {
    parity: FqMatrix,
    encoder: SyndromeEncoder,
    weights: Vec<u8>,
    full_rank: bool,
}

impl CosetLeaderTable {
    /// Builds the table by ball growth from syndrome 0. `cap` bounds the
    /// number of table entries. A rank-deficient parity still yields a
    /// table; syndromes outside the column span stay [`UNREACHABLE`].
    pub fn build(parity: &FqMatrix, cap: usize) -> Result<Self> {
        let encoder = SyndromeEncoder::new(parity, cap)?;
        let steps = encoder.steps(None);
        let weights = encoder.grow_ball(&steps, None);
        let full_rank = parity.rank() == parity.rows();
        Ok(CosetLeaderTable {
            parity: parity.clone(),
            encoder,
            weights,
            full_rank,
        })
    }

    pub fn parity(&self) -> &FqMatrix {
        &self.parity
    }

    pub fn encoder(&self) -> &SyndromeEncoder {
        &self.encoder
    }

    pub fn space(&self) -> &SyndromeSpace {
        self.encoder.space()
    }

    pub fn is_full_rank(&self) -> bool {
        self.full_rank
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Raw table; [`UNREACHABLE`] marks syndromes outside the image.
    pub fn weights(&self) -> &[u8] {
        &self.weights
    }

    pub fn leader_weight(&self, syndrome: usize) -> Option<usize> {
        match self.weights.get(syndrome) {
            Some(&w) if w != UNREACHABLE => Some(w as usize),
            _ => None,
        }
    }

    /// Largest leader weight: the covering radius of the kernel code.
    pub fn covering_radius(&self) -> usize {
        self.weights
            .iter()
            .filter(|&&w| w != UNREACHABLE)
            .map(|&w| w as usize)
            .max()
            .unwrap_or(0)
    }

    /// Number of syndromes reached.
    pub fn reachable(&self) -> usize {
        self.weights.iter().filter(|&&w| w != UNREACHABLE).count()
    }
}

/// Minimum nonzero weight of `{x : parity * x^T = 0}`, or `None` for the
/// zero code.
///
/// A codeword with value c at coordinate j is `c e_j` plus a vector avoiding
/// j with syndrome `-c h_j`, so the answer is one more than the smallest
/// such weight over all (j, c). Each j gets a ball grown without column j.
pub fn min_weight_from_parity(parity: &FqMatrix, cap: usize) -> Result<Option<usize>> {
    let encoder = SyndromeEncoder::new(parity, cap)?;
    let f = parity.field();
    let mut best: Option<usize> = None;
    for j in 0..parity.cols() {
        // no need to grow past best - 1 layers
        let max_layer = best.map(|b| (b - 1) as u8);
        if max_layer == Some(0) {
            break;
        }
        let steps = encoder.steps(Some(j));
        let weights = encoder.grow_ball(&steps, max_layer);
        for c in f.nonzero() {
            let target = encoder.column_syndrome(j, f.neg(c));
            let w = weights[target];
            if w != UNREACHABLE {
                let cand = w as usize + 1;
                best = Some(best.map_or(cand, |b| b.min(cand)));
            }
        }
    }
    Ok(best)
}
