//! Explicit codeword sets for desk-scale exhaustive checks.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::FqVector;

/// A set of vectors of length n, stored sorted and deduplicated.
#[derive(Clone, PartialEq, Eq)]
pub struct CodeWords {
    field: Field,
    n: usize,
    data: Vec<u8>,
}

impl CodeWords {
    /// Collects rows of length `n`; duplicates collapse.
    pub fn from_rows<I, R>(field: &Field, n: usize, rows: I) -> Result<Self>
    where
        I: IntoIterator<Item = R>,
        R: AsRef<[u8]>,
    {
        let mut rows: Vec<Vec<u8>> = rows.into_iter().map(|r| r.as_ref().to_vec()).collect();
        for r in &rows {
            if r.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    got: r.len(),
                });
            }
            if let Some(&bad) = r.iter().find(|&&c| c as usize >= field.q()) {
                return Err(Error::ElementOutOfRange {
                    idx: bad as usize,
                    q: field.q(),
                });
            }
        }
        rows.sort_unstable();
        rows.dedup();
        Ok(CodeWords {
            field: field.clone(),
            n,
            data: rows.concat(),
        })
    }

    pub fn from_vectors(field: &Field, n: usize, words: &[FqVector]) -> Result<Self> {
        Self::from_rows(field, n, words.iter().map(FqVector::coords))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.data.len().checked_div(self.n).unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, i: usize) -> &[u8] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    /// Words in lexicographic order.
    pub fn iter(&self) -> impl ExactSizeIterator<Item = &[u8]> + '_ {
        (0..self.len()).map(move |i| self.get(i))
    }

    pub fn contains(&self, v: &[u8]) -> bool {
        self.position(v).is_some()
    }

    fn position(&self, v: &[u8]) -> Option<usize> {
        if v.len() != self.n {
            return None;
        }
        let (mut lo, mut hi) = (0, self.len());
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.get(mid).cmp(v) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Some(mid),
            }
        }
        None
    }

    /// The set `{c + shift : c in self}`.
    pub fn translate(&self, shift: &[u8]) -> CodeWords {
        let f = &self.field;
        let rows = self.iter().map(|c| {
            c.iter()
                .zip(shift)
                .map(|(&a, &b)| f.add(a, b))
                .collect::<Vec<u8>>()
        });
        CodeWords::from_rows(f, self.n, rows).expect("same length and field")
    }

    /// Applies a coordinate permutation: word position j moves to `perm[j]`.
    pub fn permute(&self, perm: &[usize]) -> CodeWords {
        let rows = self.iter().map(|c| {
            let mut out = vec![0u8; self.n];
            for (j, &x) in c.iter().enumerate() {
                out[perm[j]] = x;
            }
            out
        });
        CodeWords::from_rows(&self.field, self.n, rows).expect("same length and field")
    }

    /// Multiplies coordinate j by `scales[j]` (all nonzero).
    pub fn scale_coordinates(&self, scales: &[u8]) -> CodeWords {
        let f = &self.field;
        let rows = self.iter().map(|c| {
            c.iter()
                .zip(scales)
                .map(|(&x, &s)| f.mul(x, s))
                .collect::<Vec<u8>>()
        });
        CodeWords::from_rows(f, self.n, rows).expect("same length and field")
    }
}

impl fmt::Debug for CodeWords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CodeWords({} words of length {})", self.len(), self.n)
    }
}

/// Iterates all vectors of `F_q^n` by their base-q index, coordinate 0
/// least significant.
pub(crate) fn decode_index(q: usize, mut idx: u64, out: &mut [u8]) {
    for x in out.iter_mut() {
        *x = (idx % q as u64) as u8;
        idx /= q as u64;
    }
}
