//! Batches of switched codes over one partition: sampling or enumerating
//! switch vectors, verifying each code and counting distinct codes and
//! fingerprints.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::format::lambda_to_digits;
use crate::switching::{apply_switch, recover_lambdas, SwitchingFrame};
use crate::verify::{structured_fingerprint, structured_linearity, Budgets, Fingerprint};

/// Largest family that `FamilyCount::All` will enumerate.
pub const MAX_FAMILY: u64 = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyCount {
    All,
    Count(u64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LambdaSource {
    /// Independent uniform vectors from a ChaCha8 stream.
    Random { seed: u64 },
    /// Enumeration indices 0, 1, 2, ... with `lambda_0` least significant.
    Sequential,
}

#[derive(Clone, Debug)]
pub struct FamilyRow {
    pub index: u64,
    pub lambdas: Vec<u8>,
    pub min_distance: usize,
    pub covering_radius: usize,
    pub is_linear: bool,
    pub is_translate_linear: bool,
    pub fingerprint: Fingerprint,
    /// Switch vector read back from the materialized code, when it fits.
    pub recovered: Option<Vec<u8>>,
}

#[derive(Clone, Debug)]
pub struct FamilySummary {
    pub q: usize,
    pub m: usize,
    pub coordinate: usize,
    pub rows: Vec<FamilyRow>,
    /// Distinct switch vectors among the rows; random samples may repeat.
    pub distinct_lambdas: usize,
    pub distinct_codes: usize,
    /// True when `distinct_codes` was certified by recovering every switch
    /// vector from its materialized code.
    pub distinct_certified: bool,
    pub distinct_fingerprints: usize,
    pub quasi_perfect: usize,
    pub linear: usize,
}

/// The switch vectors selected by `count` and `source`.
pub fn family_lambdas(
    frame: &SwitchingFrame,
    count: FamilyCount,
    source: LambdaSource,
) -> Result<Vec<(u64, Vec<u8>)>> {
    let q = frame.space().q() as u128;
    let total = q.checked_pow(frame.coset_count() as u32);
    let wanted = match count {
        FamilyCount::All => match total {
            Some(t) if t <= MAX_FAMILY as u128 => t as u64,
            _ => {
                return Err(Error::invalid(format!(
                    "`all` needs q^T <= {MAX_FAMILY}; T = {}",
                    frame.coset_count()
                )))
            }
        },
        FamilyCount::Count(c) => {
            if c > MAX_FAMILY {
                return Err(Error::invalid(format!(
                    "family size {c} exceeds {MAX_FAMILY}"
                )));
            }
            if total.is_some_and(|t| c as u128 > t) {
                return Err(Error::invalid(format!(
                    "only {} switch vectors exist",
                    total.unwrap_or_default()
                )));
            }
            c
        }
    };
    Ok(match (count, source) {
        (FamilyCount::Count(_), LambdaSource::Random { seed }) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..wanted)
                .map(|k| (k, frame.random_lambdas(&mut rng)))
                .collect()
        }
        _ => (0..wanted)
            .map(|k| (k, frame.lambdas_from_index(k)))
            .collect(),
    })
}

/// Verifies every switch vector of the family structurally. Output order
/// follows the input order regardless of the worker count.
pub fn run_family(
    frame: &Arc<SwitchingFrame>,
    lambdas: Vec<(u64, Vec<u8>)>,
    budgets: &Budgets,
) -> Result<FamilySummary> {
    let space = frame.space();
    let ri_size = (space.q() as u128).pow(frame.ri().dim() as u32);
    let code_size = ri_size * frame.coset_count() as u128;
    let materialize = code_size <= budgets.enumeration as u128;
    let rows: Vec<FamilyRow> = lambdas
        .into_par_iter()
        .map(|(index, lam)| {
            let sw = apply_switch(frame, lam)?;
            let (is_linear, is_translate_linear) = structured_linearity(&sw);
            let fingerprint = structured_fingerprint(&sw, budgets)?;
            let recovered = if materialize {
                let words = sw.materialize(budgets.enumeration)?;
                Some(recover_lambdas(frame, &words)?)
            } else {
                None
            };
            Ok(FamilyRow {
                index,
                lambdas: sw.lambdas().to_vec(),
                min_distance: fingerprint.min_distance,
                covering_radius: fingerprint.covering_radius,
                is_linear,
                is_translate_linear,
                fingerprint,
                recovered,
            })
        })
        .collect::<Result<_>>()?;

    let distinct_certified = materialize
        && rows
            .iter()
            .all(|r| r.recovered.as_deref() == Some(r.lambdas.as_slice()));
    let distinct_lambdas = rows
        .iter()
        .map(|r| &r.lambdas)
        .collect::<HashSet<_>>()
        .len();
    let distinct_codes = if materialize {
        rows.iter()
            .filter_map(|r| r.recovered.as_ref())
            .collect::<HashSet<_>>()
            .len()
    } else {
        distinct_lambdas
    };
    let distinct_fingerprints = rows
        .iter()
        .map(|r| &r.fingerprint)
        .collect::<HashSet<_>>()
        .len();
    let quasi_perfect = rows
        .iter()
        .filter(|r| r.covering_radius == (r.min_distance.saturating_sub(1) / 2) + 1)
        .count();
    let linear = rows.iter().filter(|r| r.is_linear).count();
    Ok(FamilySummary {
        q: space.q(),
        m: space.m(),
        coordinate: frame.coordinate(),
        rows,
        distinct_lambdas,
        distinct_codes,
        distinct_certified,
        distinct_fingerprints,
        quasi_perfect,
        linear,
    })
}

impl FamilySummary {
    /// One tab-separated line per code.
    pub fn table_text(&self) -> Result<String> {
        let mut s = String::from("index\tlambda\td\trho\tlinear\ttranslate_linear\tfingerprint\n");
        for r in &self.rows {
            let _ = writeln!(
                s,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                r.index,
                lambda_to_digits(&r.lambdas)?,
                r.min_distance,
                r.covering_radius,
                r.is_linear,
                r.is_translate_linear,
                r.fingerprint.to_text()
            );
        }
        Ok(s)
    }

    pub fn summary_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "q={}", self.q);
        let _ = writeln!(s, "m={}", self.m);
        let _ = writeln!(s, "i={}", self.coordinate);
        let _ = writeln!(s, "codes={}", self.rows.len());
        let _ = writeln!(s, "distinct_lambdas={}", self.distinct_lambdas);
        let _ = writeln!(s, "distinct_codes={}", self.distinct_codes);
        let _ = writeln!(
            s,
            "distinct_method={}",
            if self.distinct_certified {
                "recovered"
            } else {
                "structural"
            }
        );
        let _ = writeln!(s, "distinct_fingerprints={}", self.distinct_fingerprints);
        let _ = writeln!(s, "quasi_perfect={}", self.quasi_perfect);
        let _ = writeln!(s, "linear={}", self.linear);
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::geometry::AffineSpace;
    use crate::linalg::DEFAULT_LEADER_CAP;

    fn frame() -> Arc<SwitchingFrame> {
        let space = AffineSpace::new(&Field::new(3, 1).unwrap(), 2).unwrap();
        SwitchingFrame::new(&space, 0, DEFAULT_LEADER_CAP).unwrap()
    }

    #[test]
    fn sequential_starts_at_zero() {
        let f = frame();
        let lams = family_lambdas(&f, FamilyCount::Count(1), LambdaSource::Sequential).unwrap();
        let out = run_family(&f, lams, &Budgets::default()).unwrap();
        assert_eq!(out.rows.len(), 1);
        assert_eq!(out.linear, 1);
        assert!(out.rows[0].lambdas.iter().all(|&l| l == 0));
    }

    #[test]
    fn seeded_samples_repeat() {
        let f = frame();
        let a =
            family_lambdas(&f, FamilyCount::Count(5), LambdaSource::Random { seed: 3 }).unwrap();
        let b =
            family_lambdas(&f, FamilyCount::Count(5), LambdaSource::Random { seed: 3 }).unwrap();
        assert_eq!(a, b);
        let out = run_family(&f, a, &Budgets::default()).unwrap();
        assert!(out
            .rows
            .iter()
            .all(|r| r.min_distance == 3 && r.covering_radius == 2));
        assert!(out.distinct_certified);
    }

    #[test]
    fn oversized_requests_fail() {
        let f = frame();
        assert!(family_lambdas(&f, FamilyCount::Count(20_000), LambdaSource::Sequential).is_err());
    }
}
