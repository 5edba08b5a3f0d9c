//! Switching inside RM_q((q-1)m - 2, m).
//!
//! `R_i` is spanned by the weight-3 codewords (triples) with a 1 at
//! coordinate i. The target code splits into `T = q^([m]_q - m)` cosets
//! `R_i + x_t`; a switch vector `(lambda_t)` replaces each coset by
//! `R_i + x_t + lambda_t e_i`. The union is a code with the same length,
//! size, minimum distance 3 and covering radius 2.
//!
//! Membership never materializes the code: the syndrome of y under the
//! parity matrix of `R_i` identifies the unique `(t, lambda)` with
//! `y in R_i + x_t + lambda e_i`, if any.

use std::collections::HashMap;
use std::sync::Arc;

use once_cell::sync::OnceCell;
use rand::Rng;

use crate::error::{Error, Result};
use crate::geometry::{AffineSpace, Line};
use crate::grm::{build_target_code, LinearCode};
use crate::linalg::{
    axpy, min_weight_from_parity, CosetLeaderTable, Echelon, FqMatrix, FqVector, SyndromeEncoder,
};
use crate::words::{decode_index, CodeWords};

/// Cap on the number of cosets that get explicit representatives.
pub const MAX_COSETS: u64 = 1 << 22;

/// A weight-3 codeword whose support lies on `line`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triple {
    vector: FqVector,
    support: [usize; 3],
    line: Line,
}

impl Triple {
    pub fn vector(&self) -> &FqVector {
        &self.vector
    }

    /// Support in ascending order.
    pub fn support(&self) -> [usize; 3] {
        self.support
    }

    pub fn line(&self) -> &Line {
        &self.line
    }
}

/// The triple of `code` supported on `{a, b, c}`, normalized to coefficient
/// 1 at the smallest of the three indices.
///
/// The coefficients span the one-dimensional kernel of the three parity
/// columns `h_a, h_b, h_c`.
pub fn triple_on_line(
    code: &LinearCode,
    line: &Line,
    a: usize,
    b: usize,
    c: usize,
) -> Result<Triple> {
    let mut support = [a, b, c];
    support.sort_unstable();
    if support[0] == support[1] || support[1] == support[2] {
        return Err(Error::invalid("triple support needs three distinct points"));
    }
    if !support.iter().all(|&p| line.contains(p)) {
        return Err(Error::invalid(format!(
            "points {support:?} are not all on line {line:?}"
        )));
    }
    let kernel = code.parity().select_columns(&support).nullspace();
    if kernel.rows() != 1 || kernel.row(0).contains(&0) {
        return Err(Error::invalid(format!(
            "columns {support:?} do not carry a weight-3 codeword"
        )));
    }
    let f = code.field();
    let inv = f.inv(kernel.get(0, 0))?;
    let mut v = vec![0u8; code.n()];
    for (k, &p) in support.iter().enumerate() {
        v[p] = f.mul(inv, kernel.get(0, k));
    }
    let vector = FqVector::new(f, v)?;
    if !code.contains(&vector)? {
        return Err(Error::consistency("triple fails the parity check"));
    }
    Ok(Triple {
        vector,
        support,
        line: line.clone(),
    })
}

/// The subspace `R_i` with its parity-check matrix.
#[derive(Debug)]
pub struct RiSubspace {
    i: usize,
    basis: FqMatrix,
    parity: FqMatrix,
    leader: OnceCell<CosetLeaderTable>,
    min_weight: OnceCell<Option<usize>>,
}

impl RiSubspace {
    pub fn coordinate(&self) -> usize {
        self.i
    }

    /// RREF basis.
    pub fn basis(&self) -> &FqMatrix {
        &self.basis
    }

    /// `[m]_q + 1` rows; its kernel is exactly `R_i`.
    pub fn parity(&self) -> &FqMatrix {
        &self.parity
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    /// Coset-leader table of `parity`, built on first use.
    pub fn leader_table(&self, cap: usize) -> Result<&CosetLeaderTable> {
        self.leader
            .get_or_try_init(|| CosetLeaderTable::build(&self.parity, cap))
    }

    /// Minimum nonzero weight of `R_i`, computed on first use.
    pub fn min_weight(&self, cap: usize) -> Result<Option<usize>> {
        self.min_weight
            .get_or_try_init(|| min_weight_from_parity(&self.parity, cap))
            .copied()
    }
}

/// Builds `R_i` from `q - 2` triples per line through `P_i`: with the other
/// points of the line `p_1 < ... < p_{q-1}`, the triples on
/// `{P_i, p_1, p_j}` for `j = 2..q-1`, scaled to 1 at coordinate i.
pub fn build_ri(code: &LinearCode, space: &AffineSpace, i: usize) -> Result<RiSubspace> {
    let q = space.q();
    if q < 3 {
        return Err(Error::invalid("R_i needs q >= 3"));
    }
    if i >= space.n() {
        return Err(Error::invalid(format!("coordinate {i} out of range")));
    }
    let f = space.field();
    let mut rows = Vec::with_capacity((q - 2) * space.q_analog());
    for line in space.lines_through_point(i)? {
        let others: Vec<usize> = line
            .sorted_points()
            .into_iter()
            .filter(|&p| p != i)
            .collect();
        for &pj in &others[1..] {
            let t = triple_on_line(code, &line, i, others[0], pj)?;
            let scale = f.inv(t.vector().coords()[i])?;
            rows.push(t.vector().scale(scale).into_coords());
        }
    }
    let basis = FqMatrix::from_rows(f, space.n(), &rows)?.row_basis();
    let expected = space.n() - space.q_analog() - 1;
    if basis.rows() != expected {
        return Err(Error::consistency(format!(
            "R_{i} has rank {}, expected n - [m]_q - 1 = {expected}",
            basis.rows()
        )));
    }
    let parity = basis.nullspace();
    Ok(RiSubspace {
        i,
        basis,
        parity,
        leader: OnceCell::new(),
        min_weight: OnceCell::new(),
    })
}

/// Extension vectors completing a basis of `R_i` to a basis of the code, and
/// the coset representatives they generate. Representative t has the base-q
/// digits of t as coefficients, first extension vector least significant.
#[derive(Clone, Debug)]
pub struct CosetPartition {
    extension: FqMatrix,
    reps: Vec<u8>,
    n: usize,
}

impl CosetPartition {
    pub fn extension(&self) -> &FqMatrix {
        &self.extension
    }

    pub fn len(&self) -> usize {
        self.reps.len() / self.n
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn rep(&self, t: usize) -> &[u8] {
        &self.reps[t * self.n..(t + 1) * self.n]
    }

    pub fn reps(&self) -> impl Iterator<Item = &[u8]> {
        (0..self.len()).map(move |t| self.rep(t))
    }
}

/// Greedily extends the basis of `R_i` with generator rows of `code`.
pub fn coset_partition(code: &LinearCode, ri: &RiSubspace) -> Result<CosetPartition> {
    let f = code.field();
    let mut ech = Echelon::new(f, code.n());
    for row in ri.basis().iter_rows() {
        if !code.contains(&FqVector::new(f, row.to_vec())?)? {
            return Err(Error::invalid("R_i is not contained in the code"));
        }
        ech.insert(row);
    }
    let mut ext = FqMatrix::zeros(f, 0, code.n());
    for row in code.generator().iter_rows() {
        if ech.insert(row) {
            ext.push_row(row)?;
        }
    }
    partition_from_extension(code, ri, ext)
}

/// Partition from explicit extension vectors (e.g. read from a file).
pub fn partition_from_extension(
    code: &LinearCode,
    ri: &RiSubspace,
    extension: FqMatrix,
) -> Result<CosetPartition> {
    let f = code.field();
    let n = code.n();
    if extension.cols() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: extension.cols(),
        });
    }
    let mut ech = Echelon::new(f, n);
    for row in ri.basis().iter_rows() {
        ech.insert(row);
    }
    for row in extension.iter_rows() {
        if !code.contains(&FqVector::new(f, row.to_vec())?)? {
            return Err(Error::invalid("extension vector is not a codeword"));
        }
        if !ech.insert(row) {
            return Err(Error::invalid("extension vectors are dependent modulo R_i"));
        }
    }
    if ech.rank() != code.dim() {
        return Err(Error::invalid(format!(
            "R_i plus extension has rank {}, code dimension is {}",
            ech.rank(),
            code.dim()
        )));
    }
    let k = extension.rows();
    let q = f.q();
    let count = (q as u64)
        .checked_pow(k as u32)
        .filter(|&c| c <= MAX_COSETS)
        .ok_or(Error::BudgetExceeded {
            what: "coset representatives",
            needed: (q as u128).saturating_pow(k as u32),
            cap: MAX_COSETS as u128,
        })?;
    let mut reps = vec![0u8; count as usize * n];
    let mut coeffs = vec![0u8; k];
    for t in 0..count as usize {
        decode_index(q, t as u64, &mut coeffs);
        let dst = &mut reps[t * n..(t + 1) * n];
        for (&c, row) in coeffs.iter().zip(extension.iter_rows()) {
            axpy(f, dst, c, row);
        }
    }
    Ok(CosetPartition { extension, reps, n })
}

/// Everything a switch vector acts on: the space, the target code, `R_i`,
/// the coset partition and the syndrome lookup that drives membership.
#[derive(Debug)]
pub struct SwitchingFrame {
    space: AffineSpace,
    code: LinearCode,
    ri: RiSubspace,
    partition: CosetPartition,
    encoder: SyndromeEncoder,
    rep_syndromes: Vec<usize>,
    unit_syndrome: usize,
    /// syndrome of `x_t + lambda e_i` -> (t, lambda)
    lookup: HashMap<usize, (u32, u8)>,
    ri_elements: OnceCell<Vec<u8>>,
}

impl SwitchingFrame {
    /// Frame for the target code of `space` switched around coordinate `i`.
    pub fn new(space: &AffineSpace, i: usize, leader_cap: usize) -> Result<Arc<Self>> {
        let code = build_target_code(space)?;
        let ri = build_ri(&code, space, i)?;
        let partition = coset_partition(&code, &ri)?;
        Self::assemble(space.clone(), code, ri, partition, leader_cap)
    }

    /// Frame with caller-supplied extension vectors fixing the coset order.
    pub fn with_extension(
        space: &AffineSpace,
        i: usize,
        extension: FqMatrix,
        leader_cap: usize,
    ) -> Result<Arc<Self>> {
        let code = build_target_code(space)?;
        let ri = build_ri(&code, space, i)?;
        let partition = partition_from_extension(&code, &ri, extension)?;
        Self::assemble(space.clone(), code, ri, partition, leader_cap)
    }

    fn assemble(
        space: AffineSpace,
        code: LinearCode,
        ri: RiSubspace,
        partition: CosetPartition,
        leader_cap: usize,
    ) -> Result<Arc<Self>> {
        let f = space.field().clone();
        let encoder = SyndromeEncoder::new(ri.parity(), leader_cap)?;
        let rep_syndromes: Vec<usize> = partition.reps().map(|x| encoder.syndrome(x)).collect();
        let unit_syndrome = encoder.column_syndrome(ri.coordinate(), 1);
        let sp = encoder.space();
        let mut lookup = HashMap::with_capacity(rep_syndromes.len() * f.q());
        for (t, &s) in rep_syndromes.iter().enumerate() {
            for lam in f.elements() {
                let key = sp.add(s, sp.scale(lam, unit_syndrome));
                if lookup.insert(key, (t as u32, lam)).is_some() {
                    return Err(Error::consistency(format!(
                        "syndrome collision at coset {t}, lambda {lam}"
                    )));
                }
            }
        }
        Ok(Arc::new(SwitchingFrame {
            space,
            code,
            ri,
            partition,
            encoder,
            rep_syndromes,
            unit_syndrome,
            lookup,
            ri_elements: OnceCell::new(),
        }))
    }

    pub fn space(&self) -> &AffineSpace {
        &self.space
    }

    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    pub fn ri(&self) -> &RiSubspace {
        &self.ri
    }

    pub fn partition(&self) -> &CosetPartition {
        &self.partition
    }

    pub fn encoder(&self) -> &SyndromeEncoder {
        &self.encoder
    }

    pub fn coordinate(&self) -> usize {
        self.ri.coordinate()
    }

    pub fn n(&self) -> usize {
        self.code.n()
    }

    /// Number of cosets T.
    pub fn coset_count(&self) -> usize {
        self.partition.len()
    }

    /// Syndrome of `x_t` under the parity matrix of `R_i`.
    pub fn rep_syndrome(&self, t: usize) -> usize {
        self.rep_syndromes[t]
    }

    /// Syndrome of `e_i`.
    pub fn unit_syndrome(&self) -> usize {
        self.unit_syndrome
    }

    /// The `(t, lambda)` with `syndrome(x_t + lambda e_i) = s`.
    pub fn locate(&self, syndrome: usize) -> Option<(usize, u8)> {
        self.lookup.get(&syndrome).map(|&(t, l)| (t as usize, l))
    }

    /// All `q^dim(R_i)` elements of `R_i`, flattened, built on first use.
    pub fn ri_elements(&self, cap: u64) -> Result<&[u8]> {
        self.ri_elements
            .get_or_try_init(|| {
                let f = self.space.field();
                let q = f.q();
                let dim = self.ri.dim();
                let size = (q as u64).checked_pow(dim as u32).unwrap_or(u64::MAX);
                Error::check_budget("R_i enumeration", size as u128, cap as u128)?;
                let n = self.n();
                let mut out = vec![0u8; size as usize * n];
                let mut coeffs = vec![0u8; dim];
                for idx in 0..size as usize {
                    decode_index(q, idx as u64, &mut coeffs);
                    let dst = &mut out[idx * n..(idx + 1) * n];
                    for (&c, row) in coeffs.iter().zip(self.ri.basis().iter_rows()) {
                        axpy(f, dst, c, row);
                    }
                }
                Ok(out)
            })
            .map(Vec::as_slice)
    }

    /// Lambda vector for enumeration index `idx`; `lambda_0` is the least
    /// significant digit.
    pub fn lambdas_from_index(&self, idx: u64) -> Vec<u8> {
        let mut out = vec![0u8; self.coset_count()];
        decode_index(self.space.q(), idx, &mut out);
        out
    }

    pub fn random_lambdas<R: Rng>(&self, rng: &mut R) -> Vec<u8> {
        let q = self.space.q();
        (0..self.coset_count())
            .map(|_| rng.gen_range(0..q) as u8)
            .collect()
    }

    /// Switch vector with a single nonzero entry: the one-coset switching.
    pub fn single_lambdas(&self, t: usize, lambda: u8) -> Result<Vec<u8>> {
        if t >= self.coset_count() {
            return Err(Error::invalid(format!(
                "coset {t} out of range (T = {})",
                self.coset_count()
            )));
        }
        self.space.field().elem(lambda as usize)?;
        let mut out = vec![0u8; self.coset_count()];
        out[t] = lambda;
        Ok(out)
    }
}

/// `union_t (R_i + x_t + lambda_t e_i)`, kept in structural form.
#[derive(Clone, Debug)]
pub struct SwitchedCode {
    frame: Arc<SwitchingFrame>,
    lambdas: Vec<u8>,
}

/// Applies a switch vector to the partition held by `frame`.
pub fn apply_switch(frame: &Arc<SwitchingFrame>, lambdas: Vec<u8>) -> Result<SwitchedCode> {
    if lambdas.len() != frame.coset_count() {
        return Err(Error::LengthMismatch {
            expected: frame.coset_count(),
            got: lambdas.len(),
        });
    }
    let f = frame.space.field();
    for &l in &lambdas {
        f.elem(l as usize)?;
    }
    Ok(SwitchedCode {
        frame: Arc::clone(frame),
        lambdas,
    })
}

impl SwitchedCode {
    pub fn frame(&self) -> &Arc<SwitchingFrame> {
        &self.frame
    }

    pub fn lambdas(&self) -> &[u8] {
        &self.lambdas
    }

    pub fn n(&self) -> usize {
        self.frame.n()
    }

    /// `x_t + lambda_t e_i`.
    pub fn shifted_rep(&self, t: usize) -> Vec<u8> {
        let mut v = self.frame.partition.rep(t).to_vec();
        let i = self.frame.coordinate();
        v[i] = self.frame.space.field().add(v[i], self.lambdas[t]);
        v
    }

    /// Syndrome of `x_t + lambda_t e_i` under the parity matrix of `R_i`.
    pub fn shifted_syndrome(&self, t: usize) -> usize {
        let sp = self.frame.encoder.space();
        sp.add(
            self.frame.rep_syndromes[t],
            sp.scale(self.lambdas[t], self.frame.unit_syndrome),
        )
    }

    /// Membership by syndrome alone: the coset of `R_i` containing y decides.
    pub fn contains_syndrome(&self, s: usize) -> bool {
        matches!(self.frame.locate(s), Some((t, l)) if self.lambdas[t] == l)
    }

    pub fn contains_raw(&self, y: &[u8]) -> bool {
        self.contains_syndrome(self.frame.encoder.syndrome(y))
    }

    pub fn member(&self, y: &FqVector) -> Result<bool> {
        if y.len() != self.n() {
            return Err(Error::LengthMismatch {
                expected: self.n(),
                got: y.len(),
            });
        }
        if y.field() != self.frame.space.field() {
            return Err(Error::FieldMismatch);
        }
        Ok(self.contains_raw(y.coords()))
    }

    /// Every codeword, subject to `cap` on the code size.
    pub fn materialize(&self, cap: u64) -> Result<CodeWords> {
        let f = self.frame.space.field();
        let n = self.n();
        let ri_size = (f.q() as u128).saturating_pow(self.frame.ri.dim() as u32);
        let total = ri_size.saturating_mul(self.frame.coset_count() as u128);
        Error::check_budget("codeword materialization", total, cap as u128)?;
        let elems = self.frame.ri_elements(cap)?;
        let mut rows = Vec::with_capacity(total as usize);
        for t in 0..self.frame.coset_count() {
            let shift = self.shifted_rep(t);
            for r in elems.chunks_exact(n) {
                rows.push(
                    r.iter()
                        .zip(&shift)
                        .map(|(&a, &b)| f.add(a, b))
                        .collect::<Vec<u8>>(),
                );
            }
        }
        CodeWords::from_rows(f, n, rows)
    }
}

/// Recovers the switch vector that produced `words`.
///
/// Every word must lie in some `R_i + x_t + lambda e_i`, words of the same
/// coset must agree on lambda, and each coset must be fully present.
pub fn recover_lambdas(frame: &SwitchingFrame, words: &CodeWords) -> Result<Vec<u8>> {
    if words.n() != frame.n() {
        return Err(Error::LengthMismatch {
            expected: frame.n(),
            got: words.n(),
        });
    }
    let t_count = frame.coset_count();
    let mut lambdas: Vec<Option<u8>> = vec![None; t_count];
    let mut counts = vec![0u64; t_count];
    for w in words.iter() {
        let s = frame.encoder.syndrome(w);
        let (t, lam) = frame
            .locate(s)
            .ok_or_else(|| Error::invalid("word lies outside every switched coset"))?;
        match lambdas[t] {
            Some(prev) if prev != lam => {
                return Err(Error::invalid(format!(
                    "coset {t} appears with shifts {prev} and {lam}"
                )))
            }
            _ => lambdas[t] = Some(lam),
        }
        counts[t] += 1;
    }
    let ri_size = (frame.space.q() as u64).pow(frame.ri.dim() as u32);
    lambdas
        .into_iter()
        .zip(counts)
        .enumerate()
        .map(|(t, (lam, c))| match lam {
            Some(l) if c == ri_size => Ok(l),
            _ => Err(Error::invalid(format!(
                "coset {t} has {c} of {ri_size} words"
            ))),
        })
        .collect()
}
