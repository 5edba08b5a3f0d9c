//! Code parameters two ways: brute force over explicit codeword sets, and
//! structurally through the syndrome quotient by `R_i`.
//!
//! A switched code is a union of cosets of `R_i`, so the distance from any
//! vector to it depends only on the vector's `R_i`-syndrome. The structured
//! routines scan `q^([m]_q + 1)` syndromes instead of `q^n` vectors.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::atomic::{AtomicUsize, Ordering};

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::grm::{LinearCode, DEFAULT_ENUMERATION_CAP};
use crate::linalg::{weight, Echelon, DEFAULT_LEADER_CAP};
use crate::switching::SwitchedCode;
use crate::words::{decode_index, CodeWords};

/// Work caps. Exceeding one is an error, never a truncated scan.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budgets {
    /// Codeword pairs in pairwise scans.
    pub pairs: u64,
    /// Distance evaluations in ambient-space scans (`q^n * |C|`).
    pub ambient: u64,
    /// Entries in a coset-leader table.
    pub leader: usize,
    /// Codewords enumerated or materialized.
    pub enumeration: u64,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            pairs: 10_000_000,
            ambient: 1_000_000_000,
            leader: DEFAULT_LEADER_CAP,
            enumeration: DEFAULT_ENUMERATION_CAP,
        }
    }
}

// Bytes packed into a u128: two words differ in a coordinate iff the XOR
// byte is nonzero.
const LOW_BITS: u128 = 0x0101_0101_0101_0101_0101_0101_0101_0101;

fn pack(w: &[u8]) -> u128 {
    w.iter()
        .enumerate()
        .fold(0u128, |acc, (j, &x)| acc | ((x as u128) << (8 * j)))
}

#[inline]
fn packed_distance(a: u128, b: u128) -> usize {
    let x = a ^ b;
    let mut y = x | (x >> 4);
    y |= y >> 2;
    y |= y >> 1;
    (y & LOW_BITS).count_ones() as usize
}

fn slice_distance(a: &[u8], b: &[u8]) -> usize {
    crate::linalg::distance(a, b)
}

/// Smallest distance between two distinct words.
pub fn min_distance_exhaustive(words: &CodeWords, pair_budget: u64) -> Result<usize> {
    let len = words.len();
    if len < 2 {
        return Err(Error::invalid(
            "minimum distance needs at least two codewords",
        ));
    }
    let pairs = (len as u128) * (len as u128 - 1) / 2;
    Error::check_budget("pairwise distance scan", pairs, pair_budget as u128)?;
    let best = if words.n() <= 16 {
        let packed: Vec<u128> = words.iter().map(pack).collect();
        (0..len)
            .into_par_iter()
            .map(|i| {
                packed[i + 1..]
                    .iter()
                    .map(|&b| packed_distance(packed[i], b))
                    .min()
                    .unwrap_or(usize::MAX)
            })
            .min()
    } else {
        (0..len)
            .into_par_iter()
            .map(|i| {
                (i + 1..len)
                    .map(|j| slice_distance(words.get(i), words.get(j)))
                    .min()
                    .unwrap_or(usize::MAX)
            })
            .min()
    };
    Ok(best.expect("at least one pair"))
}

/// `max_x min_c d(x, c)` over all of `F_q^n`.
pub fn covering_radius_exhaustive(words: &CodeWords, ambient_budget: u64) -> Result<usize> {
    if words.is_empty() {
        return Err(Error::invalid("covering radius of an empty set"));
    }
    let q = words.field().q();
    let n = words.n();
    let ambient = (q as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    Error::check_budget(
        "ambient covering scan",
        ambient.saturating_mul(words.len() as u128),
        ambient_budget as u128,
    )?;
    let ambient = ambient as u64;
    // a word whose nearest codeword is within the running maximum cannot
    // raise it, so its scan may stop early
    let running = AtomicUsize::new(0);
    const CHUNK: u64 = 1024;
    let chunks = ambient.div_ceil(CHUNK);
    if n <= 16 {
        let packed: Vec<u128> = words.iter().map(pack).collect();
        (0..chunks).into_par_iter().for_each(|c| {
            let mut x = vec![0u8; n];
            for idx in c * CHUNK..((c + 1) * CHUNK).min(ambient) {
                decode_index(q, idx, &mut x);
                let px = pack(&x);
                let floor = running.load(Ordering::Relaxed);
                let mut best = usize::MAX;
                for &w in &packed {
                    let d = packed_distance(px, w);
                    if d < best {
                        best = d;
                        if best <= floor {
                            break;
                        }
                    }
                }
                running.fetch_max(best, Ordering::Relaxed);
            }
        });
    } else {
        (0..chunks).into_par_iter().for_each(|c| {
            let mut x = vec![0u8; n];
            for idx in c * CHUNK..((c + 1) * CHUNK).min(ambient) {
                decode_index(q, idx, &mut x);
                let floor = running.load(Ordering::Relaxed);
                let mut best = usize::MAX;
                for w in words.iter() {
                    let d = slice_distance(&x, w);
                    if d < best {
                        best = d;
                        if best <= floor {
                            break;
                        }
                    }
                }
                running.fetch_max(best, Ordering::Relaxed);
            }
        });
    }
    Ok(running.into_inner())
}

/// Dimension of the span of `{c - c0}`, with c0 the smallest word.
pub fn span_rank(words: &CodeWords) -> usize {
    let Some(c0) = words.iter().next() else {
        return 0;
    };
    let f = words.field();
    let mut ech = Echelon::new(f, words.n());
    for w in words.iter() {
        let d: Vec<u8> = w.iter().zip(c0).map(|(&a, &b)| f.sub(a, b)).collect();
        ech.insert(&d);
    }
    ech.rank()
}

/// True iff the set is a subspace: it contains 0 and has `q^rank` words.
pub fn is_linear(words: &CodeWords) -> bool {
    let zero = vec![0u8; words.n()];
    if !words.contains(&zero) {
        return false;
    }
    let rank = span_rank(words);
    (words.field().q() as u128).checked_pow(rank as u32) == Some(words.len() as u128)
}

/// True iff `C - c` is linear for some (hence every) `c in C`.
pub fn is_translate_linear(words: &CodeWords) -> bool {
    let Some(c0) = words.iter().next() else {
        return false;
    };
    let f = words.field();
    let neg: Vec<u8> = c0.iter().map(|&x| f.neg(x)).collect();
    is_linear(&words.translate(&neg))
}

fn log_q(q: usize, mut size: u128) -> Result<usize> {
    let mut k = 0;
    while size > 1 {
        if !size.is_multiple_of(q as u128) {
            return Err(Error::consistency(format!("{size} is not a power of {q}")));
        }
        size /= q as u128;
        k += 1;
    }
    Ok(k)
}

/// Dimension of `{v : a v + C = C for all a in F_q}`.
pub fn kernel_dim(words: &CodeWords, pair_budget: u64) -> Result<usize> {
    let Some(c0) = words.iter().next() else {
        return Err(Error::invalid("kernel of an empty set"));
    };
    let len = words.len() as u128;
    Error::check_budget("kernel scan", len * len, pair_budget as u128)?;
    let f = words.field();
    let neg: Vec<u8> = c0.iter().map(|&x| f.neg(x)).collect();
    let shifted = words.translate(&neg);
    let count = (0..shifted.len())
        .into_par_iter()
        .filter(|&k| {
            let v = shifted.get(k);
            let mut sum = vec![0u8; shifted.n()];
            f.nonzero().all(|a| {
                shifted.iter().all(|w| {
                    for ((s, &x), &y) in sum.iter_mut().zip(v).zip(w) {
                        *s = f.add(f.mul(a, x), y);
                    }
                    shifted.contains(&sum)
                })
            })
        })
        .count();
    log_q(f.q(), count as u128)
}

/// `A_w`: number of words of weight w.
pub fn weight_distribution(words: &CodeWords) -> Vec<u64> {
    let mut dist = vec![0u64; words.n() + 1];
    for w in words.iter() {
        dist[weight(w)] += 1;
    }
    dist
}

/// Number of ordered pairs `(x, y)` at each distance, `x = y` included.
/// Invariant under translations and monomial maps.
pub fn distance_distribution(words: &CodeWords, pair_budget: u64) -> Result<Vec<u64>> {
    let len = words.len();
    let pairs = (len as u128) * (len as u128).saturating_sub(1) / 2;
    Error::check_budget("distance distribution", pairs, pair_budget as u128)?;
    let n = words.n();
    let mut dist = (0..len)
        .into_par_iter()
        .fold(
            || vec![0u64; n + 1],
            |mut acc, i| {
                for j in i + 1..len {
                    acc[slice_distance(words.get(i), words.get(j))] += 2;
                }
                acc
            },
        )
        .reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    dist[0] += len as u64;
    Ok(dist)
}

/// Invariants of a code under translation composed with monomial maps.
/// Different fingerprints prove two codes nonequivalent; equal ones prove
/// nothing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub size: BigUint,
    pub min_distance: usize,
    pub covering_radius: usize,
    pub rank: usize,
    pub kernel_dim: Option<usize>,
    pub distance_distribution: Option<Vec<u64>>,
}

impl Fingerprint {
    pub fn to_text(&self) -> String {
        format!(
            "size={} d={} rho={} rank={} kernel_dim={} distances={}",
            self.size,
            self.min_distance,
            self.covering_radius,
            self.rank,
            opt_to_text(self.kernel_dim),
            self.distance_distribution
                .as_deref()
                .map_or_else(|| "skipped".to_string(), join_counts)
        )
    }
}

pub fn invariant_fingerprint(words: &CodeWords, budgets: &Budgets) -> Result<Fingerprint> {
    Ok(Fingerprint {
        size: BigUint::from(words.len()),
        min_distance: min_distance_exhaustive(words, budgets.pairs)?,
        covering_radius: covering_radius_exhaustive(words, budgets.ambient)?,
        rank: span_rank(words),
        kernel_dim: Some(kernel_dim(words, budgets.pairs)?),
        distance_distribution: Some(distance_distribution(words, budgets.pairs)?),
    })
}

fn shifted_syndromes(sw: &SwitchedCode) -> Vec<usize> {
    (0..sw.frame().coset_count())
        .map(|t| sw.shifted_syndrome(t))
        .collect()
}

/// Minimum distance from the coset structure: the smallest nonzero weight
/// in `R_i` (pairs inside one coset) against the smallest leader weight of
/// the differences `(x_t1 + l_t1 e_i) - (x_t2 + l_t2 e_i)`.
pub fn min_distance_structured(sw: &SwitchedCode, budgets: &Budgets) -> Result<usize> {
    let frame = sw.frame();
    let within = frame.ri().min_weight(budgets.leader)?.unwrap_or(usize::MAX);
    let t_count = frame.coset_count() as u128;
    Error::check_budget(
        "structured coset pair scan",
        t_count * t_count.saturating_sub(1) / 2,
        budgets.pairs as u128,
    )?;
    let table = frame.ri().leader_table(budgets.leader)?;
    let sp = table.space();
    let shifts = shifted_syndromes(sw);
    let across = (0..shifts.len())
        .into_par_iter()
        .map(|a| {
            shifts[a + 1..]
                .iter()
                .map(|&s| {
                    table
                        .leader_weight(sp.sub(shifts[a], s))
                        .expect("R_i parity has full rank")
                })
                .min()
                .unwrap_or(usize::MAX)
        })
        .min()
        .unwrap_or(usize::MAX);
    let d = within.min(across);
    if d == usize::MAX {
        return Err(Error::invalid(
            "minimum distance needs at least two codewords",
        ));
    }
    Ok(d)
}

/// Covering radius as `max_s min_t leader[s - syndrome(x_t + l_t e_i)]`
/// over every `R_i`-syndrome s.
pub fn covering_radius_structured(sw: &SwitchedCode, budgets: &Budgets) -> Result<usize> {
    let frame = sw.frame();
    let table = frame.ri().leader_table(budgets.leader)?;
    if !table.is_full_rank() {
        return Err(Error::consistency("R_i parity matrix is rank deficient"));
    }
    let sp = table.space();
    let shifts = shifted_syndromes(sw);
    Error::check_budget(
        "structured covering scan",
        sp.size() as u128 * shifts.len() as u128,
        budgets.ambient as u128,
    )?;
    let weights = table.weights();
    let running = AtomicUsize::new(0);
    (0..sp.size()).into_par_iter().for_each(|s| {
        let floor = running.load(Ordering::Relaxed);
        let mut best = usize::MAX;
        for &sh in &shifts {
            let w = weights[sp.sub(s, sh)] as usize;
            if w < best {
                best = w;
                if best <= floor {
                    break;
                }
            }
        }
        running.fetch_max(best, Ordering::Relaxed);
    });
    Ok(running.into_inner())
}

/// `(linear, translate_linear)`. The code minus `x_0 + l_0 e_i` is linear
/// iff `t -> l_t - l_0` is linear in the coefficients of `x_t`; the code
/// itself is linear iff additionally `l_0 = 0`.
pub fn structured_linearity(sw: &SwitchedCode) -> (bool, bool) {
    let frame = sw.frame();
    let f = frame.space().field();
    let q = f.q();
    let k = frame.partition().extension().rows();
    let lam = sw.lambdas();
    let l0 = lam[0];
    let mu: Vec<u8> = (0..k).map(|j| f.sub(lam[q.pow(j as u32)], l0)).collect();
    let mut coeffs = vec![0u8; k];
    let affine = (0..lam.len()).all(|t| {
        decode_index(q, t as u64, &mut coeffs);
        let predicted = coeffs
            .iter()
            .zip(&mu)
            .fold(l0, |acc, (&c, &m)| f.add(acc, f.mul(c, m)));
        predicted == lam[t]
    });
    (affine && l0 == 0, affine)
}

/// Dimension of the span of `C' - c` for any `c in C'`.
pub fn structured_rank(sw: &SwitchedCode) -> usize {
    let frame = sw.frame();
    let f = frame.space().field();
    let mut ech = Echelon::new(f, sw.n());
    for row in frame.ri().basis().iter_rows() {
        ech.insert(row);
    }
    let a0 = sw.shifted_rep(0);
    for t in 1..frame.coset_count() {
        let d: Vec<u8> = sw
            .shifted_rep(t)
            .iter()
            .zip(&a0)
            .map(|(&a, &b)| f.sub(a, b))
            .collect();
        ech.insert(&d);
    }
    ech.rank()
}

/// Kernel dimension. `R_i` is always inside the kernel, so only one
/// candidate per coset needs testing, and membership of a whole coset is
/// decided by its syndrome.
pub fn structured_kernel_dim(sw: &SwitchedCode, budgets: &Budgets) -> Result<usize> {
    let frame = sw.frame();
    let f = frame.space().field();
    let t_count = frame.coset_count() as u128;
    Error::check_budget(
        "structured kernel scan",
        t_count * t_count * (f.q() as u128 - 1),
        budgets.pairs as u128,
    )?;
    let sp = frame.encoder().space();
    let shifts = shifted_syndromes(sw);
    let accepted = (0..shifts.len())
        .into_par_iter()
        .filter(|&t| {
            let v = sp.sub(shifts[t], shifts[0]);
            f.nonzero().all(|a| {
                let av = sp.scale(a, v);
                shifts.iter().all(|&u| sw.contains_syndrome(sp.add(av, u)))
            })
        })
        .count();
    Ok(frame.ri().dim() + log_q(f.q(), accepted as u128)?)
}

/// `A_w` summed over the cosets `R_i + x_t + l_t e_i`.
pub fn structured_weight_distribution(sw: &SwitchedCode, budgets: &Budgets) -> Result<Vec<u64>> {
    let frame = sw.frame();
    let f = frame.space().field();
    let n = sw.n();
    let ri_size = (f.q() as u128).pow(frame.ri().dim() as u32);
    Error::check_budget(
        "structured weight distribution",
        ri_size * frame.coset_count() as u128,
        budgets.enumeration as u128,
    )?;
    let elems = frame.ri_elements(budgets.enumeration)?;
    let per_coset: Vec<Vec<u64>> = (0..frame.coset_count())
        .into_par_iter()
        .map(|t| coset_weights(f, elems, n, &sw.shifted_rep(t)))
        .collect();
    Ok(sum_counts(n, per_coset))
}

/// Distance distribution from coset pairs: the differences between cosets
/// t1 and t2 fill the coset `R_i + a_t1 - a_t2` exactly `|R_i|` times.
pub fn structured_distance_distribution(sw: &SwitchedCode, budgets: &Budgets) -> Result<Vec<u64>> {
    let frame = sw.frame();
    let f = frame.space().field();
    let n = sw.n();
    let t_count = frame.coset_count();
    let ri_size = (f.q() as u128).pow(frame.ri().dim() as u32);
    let distinct_cap = (t_count as u128 * f.q() as u128).min(t_count as u128 * t_count as u128);
    Error::check_budget(
        "structured distance distribution",
        (t_count as u128 * t_count as u128).max(distinct_cap * ri_size),
        budgets.pairs as u128,
    )?;
    let sp = frame.encoder().space();
    let shifts = shifted_syndromes(sw);
    // difference syndrome -> (multiplicity, one (t1, t2) realizing it)
    let mut classes: HashMap<usize, (u64, usize, usize)> = HashMap::new();
    for (t1, &s1) in shifts.iter().enumerate() {
        for (t2, &s2) in shifts.iter().enumerate() {
            classes
                .entry(sp.sub(s1, s2))
                .and_modify(|e| e.0 += 1)
                .or_insert((1, t1, t2));
        }
    }
    let elems = frame.ri_elements(budgets.enumeration)?;
    let mut classes: Vec<(usize, (u64, usize, usize))> = classes.into_iter().collect();
    classes.sort_unstable();
    let parts: Vec<Vec<u64>> = classes
        .par_iter()
        .map(|&(_, (mult, t1, t2))| {
            let a1 = sw.shifted_rep(t1);
            let a2 = sw.shifted_rep(t2);
            let diff: Vec<u8> = a1.iter().zip(&a2).map(|(&a, &b)| f.sub(a, b)).collect();
            coset_weights(f, elems, n, &diff)
                .into_iter()
                .map(|c| c * mult * ri_size as u64)
                .collect()
        })
        .collect();
    Ok(sum_counts(n, parts))
}

fn coset_weights(f: &crate::field::Field, elems: &[u8], n: usize, shift: &[u8]) -> Vec<u64> {
    let mut dist = vec![0u64; n + 1];
    for r in elems.chunks_exact(n) {
        let w = r
            .iter()
            .zip(shift)
            .filter(|(&a, &b)| f.add(a, b) != 0)
            .count();
        dist[w] += 1;
    }
    dist
}

fn sum_counts(n: usize, parts: Vec<Vec<u64>>) -> Vec<u64> {
    parts.into_iter().fold(vec![0u64; n + 1], |mut acc, p| {
        acc.iter_mut().zip(p).for_each(|(a, b)| *a += b);
        acc
    })
}

/// Fingerprint from the structure; entries whose budget is exceeded are
/// left out.
pub fn structured_fingerprint(sw: &SwitchedCode, budgets: &Budgets) -> Result<Fingerprint> {
    Ok(Fingerprint {
        size: switched_size(sw),
        min_distance: min_distance_structured(sw, budgets)?,
        covering_radius: covering_radius_structured(sw, budgets)?,
        rank: structured_rank(sw),
        kernel_dim: skip_over_budget(structured_kernel_dim(sw, budgets))?,
        distance_distribution: skip_over_budget(structured_distance_distribution(sw, budgets))?,
    })
}

fn skip_over_budget<T>(r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::BudgetExceeded { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

fn switched_size(sw: &SwitchedCode) -> BigUint {
    let frame = sw.frame();
    BigUint::from(frame.space().q()).pow(frame.ri().dim() as u32)
        * BigUint::from(frame.coset_count())
}

/// Parameters of a code in `(n, M, d; rho)_q` form plus structural facts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeReport {
    pub q: usize,
    pub n: usize,
    pub size: BigUint,
    pub min_distance: usize,
    pub covering_radius: usize,
    pub is_linear: bool,
    pub is_translate_linear: bool,
    pub rank: usize,
    pub kernel_dim: Option<usize>,
    pub weight_distribution: Option<Vec<u64>>,
}

impl CodeReport {
    /// `floor((d - 1) / 2)`.
    pub fn packing_radius(&self) -> usize {
        self.min_distance.saturating_sub(1) / 2
    }

    pub fn is_quasi_perfect(&self) -> bool {
        self.covering_radius == self.packing_radius() + 1
    }

    pub fn is_perfect(&self) -> bool {
        self.covering_radius == self.packing_radius()
    }

    /// `(n, M, d; rho)_q`.
    pub fn params(&self) -> String {
        format!(
            "({}, {}, {}; {})_{}",
            self.n, self.size, self.min_distance, self.covering_radius, self.q
        )
    }

    /// Brute force over an explicit set.
    pub fn for_words(words: &CodeWords, budgets: &Budgets) -> Result<Self> {
        Ok(CodeReport {
            q: words.field().q(),
            n: words.n(),
            size: BigUint::from(words.len()),
            min_distance: min_distance_exhaustive(words, budgets.pairs)?,
            covering_radius: covering_radius_exhaustive(words, budgets.ambient)?,
            is_linear: is_linear(words),
            is_translate_linear: is_translate_linear(words),
            rank: span_rank(words),
            kernel_dim: Some(kernel_dim(words, budgets.pairs)?),
            weight_distribution: Some(weight_distribution(words)),
        })
    }

    /// Linear code: distance by enumeration or punctured syndrome balls,
    /// covering radius from the coset-leader table.
    pub fn for_linear(code: &LinearCode, budgets: &Budgets) -> Result<Self> {
        let d = code
            .min_distance(budgets.enumeration, budgets.leader)?
            .ok_or_else(|| Error::invalid("the zero code has no minimum distance"))?;
        Ok(CodeReport {
            q: code.field().q(),
            n: code.n(),
            size: code.size(),
            min_distance: d,
            covering_radius: code.covering_radius(budgets.leader)?,
            is_linear: true,
            is_translate_linear: true,
            rank: code.dim(),
            kernel_dim: Some(code.dim()),
            weight_distribution: skip_over_budget(code.weight_distribution(budgets.enumeration))?,
        })
    }

    /// Switched code, from its coset structure only.
    pub fn for_switched(sw: &SwitchedCode, budgets: &Budgets) -> Result<Self> {
        let (is_linear, is_translate_linear) = structured_linearity(sw);
        Ok(CodeReport {
            q: sw.frame().space().q(),
            n: sw.n(),
            size: switched_size(sw),
            min_distance: min_distance_structured(sw, budgets)?,
            covering_radius: covering_radius_structured(sw, budgets)?,
            is_linear,
            is_translate_linear,
            rank: structured_rank(sw),
            kernel_dim: skip_over_budget(structured_kernel_dim(sw, budgets))?,
            weight_distribution: skip_over_budget(structured_weight_distribution(sw, budgets))?,
        })
    }

    /// Flat `key=value` block, one entry per line.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "q={}", self.q);
        let _ = writeln!(s, "n={}", self.n);
        let _ = writeln!(s, "size={}", self.size);
        let _ = writeln!(s, "d={}", self.min_distance);
        let _ = writeln!(s, "e={}", self.packing_radius());
        let _ = writeln!(s, "rho={}", self.covering_radius);
        let _ = writeln!(s, "linear={}", self.is_linear);
        let _ = writeln!(s, "translate_linear={}", self.is_translate_linear);
        let _ = writeln!(s, "quasi_perfect={}", self.is_quasi_perfect());
        let _ = writeln!(s, "perfect={}", self.is_perfect());
        let _ = writeln!(s, "rank={}", self.rank);
        let _ = writeln!(s, "kernel_dim={}", opt_to_text(self.kernel_dim));
        let _ = writeln!(
            s,
            "weight_distribution={}",
            self.weight_distribution
                .as_deref()
                .map_or_else(|| "skipped".to_string(), join_counts)
        );
        let _ = writeln!(s, "params={}", self.params());
        s
    }
}

fn opt_to_text(v: Option<usize>) -> String {
    v.map_or_else(|| "skipped".to_string(), |k| k.to_string())
}

fn join_counts(c: &[u64]) -> String {
    c.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}
