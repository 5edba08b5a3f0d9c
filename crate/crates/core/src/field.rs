//! Small finite fields GF(p^k) with table arithmetic.
//!
//! An element is its index in `[0, q)`. Written in base p, the index gives
//! the coefficients of the element's polynomial representative, constant
//! term first, so index 0 is zero, index 1 is one and, for k > 1, index p is
//! the class of `x`. Extension fields are reduced modulo the
//! lexicographically smallest monic irreducible of degree k, comparing
//! coefficient lists from the constant term upward.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest supported field size. Elements are stored as bytes.
pub const MAX_FIELD_SIZE: usize = 256;

#[derive(Clone)]
pub struct Field {
    inner: Arc<Tables>,
}

struct Tables {
    p: u32,
    k: u32,
    q: usize,
    modulus: Vec<u8>,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

impl Field {
    /// Builds GF(p^k).
    pub fn new(p: u32, k: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 {
            return Err(Error::ZeroDegree);
        }
        let q = (p as u64)
            .checked_pow(k)
            .filter(|&q| q <= MAX_FIELD_SIZE as u64)
            .ok_or(Error::FieldTooLarge {
                p,
                k,
                max: MAX_FIELD_SIZE,
            })? as usize;

        let modulus = if k == 1 {
            Vec::new()
        } else {
            smallest_irreducible(p, k as usize)
        };

        let to_poly = |mut idx: usize| -> Vec<u32> {
            let mut c = vec![0u32; k as usize];
            for slot in c.iter_mut() {
                *slot = (idx % p as usize) as u32;
                idx /= p as usize;
            }
            c
        };
        let from_poly = |c: &[u32]| -> u8 {
            c.iter()
                .rev()
                .fold(0usize, |acc, &d| acc * p as usize + d as usize) as u8
        };

        let polys: Vec<Vec<u32>> = (0..q).map(to_poly).collect();
        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for a in 0..q {
            for b in 0..q {
                let sum: Vec<u32> = polys[a]
                    .iter()
                    .zip(&polys[b])
                    .map(|(x, y)| (x + y) % p)
                    .collect();
                add[a * q + b] = from_poly(&sum);
                let prod = if k == 1 {
                    vec![(polys[a][0] * polys[b][0]) % p]
                } else {
                    poly_mulmod(&polys[a], &polys[b], &modulus, p)
                };
                mul[a * q + b] = from_poly(&prod);
            }
        }
        let mut neg = vec![0u8; q];
        let mut inv = vec![0u8; q];
        for a in 0..q {
            neg[a] = (0..q).find(|&b| add[a * q + b] == 0).unwrap() as u8;
            if a != 0 {
                inv[a] = (1..q)
                    .find(|&b| mul[a * q + b] == 1)
                    .expect("nonzero element without inverse: modulus is reducible")
                    as u8;
            }
        }

        Ok(Field {
            inner: Arc::new(Tables {
                p,
                k,
                q,
                modulus,
                add,
                mul,
                neg,
                inv,
            }),
        })
    }

    /// Builds the field with `q` elements, `q` a prime power.
    pub fn with_order(q: usize) -> Result<Self> {
        let (p, k) =
            prime_power(q).ok_or_else(|| Error::invalid(format!("{q} is not a prime power")))?;
        Field::new(p, k)
    }

    pub fn p(&self) -> u32 {
        self.inner.p
    }

    pub fn k(&self) -> u32 {
        self.inner.k
    }

    pub fn q(&self) -> usize {
        self.inner.q
    }

    /// Coefficients of the reduction polynomial, constant term first.
    /// `None` for prime fields.
    pub fn modulus(&self) -> Option<&[u8]> {
        if self.inner.k == 1 {
            None
        } else {
            Some(&self.inner.modulus)
        }
    }

    /// Validates an element index.
    pub fn elem(&self, idx: usize) -> Result<u8> {
        if idx < self.q() {
            Ok(idx as u8)
        } else {
            Err(Error::ElementOutOfRange { idx, q: self.q() })
        }
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.inner.add[a as usize * self.inner.q + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.inner.mul[a as usize * self.inner.q + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.inner.neg[a as usize]
    }

    pub fn inv(&self, a: u8) -> Result<u8> {
        if a == 0 {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.inner.inv[a as usize])
        }
    }

    pub fn div(&self, a: u8, b: u8) -> Result<u8> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: u8, mut e: u64) -> u8 {
        let mut base = a;
        let mut acc = 1u8;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// All elements in canonical (index) order.
    pub fn elements(&self) -> impl Iterator<Item = u8> {
        (0..self.q()).map(|i| i as u8)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = u8> {
        (1..self.q()).map(|i| i as u8)
    }

    /// Field identity as `p^k`, with `;mod=c0,c1,...` appended when k > 1.
    pub fn descriptor(&self) -> String {
        let mut s = format!("{}^{}", self.p(), self.k());
        if let Some(m) = self.modulus() {
            let coeffs: Vec<String> = m.iter().map(u8::to_string).collect();
            s.push_str(";mod=");
            s.push_str(&coeffs.join(","));
        }
        s
    }

    /// Inverse of [`Field::descriptor`]. A supplied modulus must match the
    /// canonical one.
    pub fn from_descriptor(s: &str) -> Result<Self> {
        let (pk, modulus) = match s.split_once(';') {
            Some((pk, rest)) => {
                let list = rest
                    .strip_prefix("mod=")
                    .ok_or_else(|| Error::invalid(format!("bad field suffix `{rest}`")))?;
                let coeffs = list
                    .split(',')
                    .map(|c| c.trim().parse::<u8>())
                    .collect::<std::result::Result<Vec<u8>, _>>()
                    .map_err(|_| Error::invalid(format!("bad modulus `{list}`")))?;
                (pk, Some(coeffs))
            }
            None => (s, None),
        };
        let (p, k) = pk
            .split_once('^')
            .ok_or_else(|| Error::invalid(format!("field `{pk}` is not of the form p^k")))?;
        let p: u32 = p
            .trim()
            .parse()
            .map_err(|_| Error::invalid(format!("bad characteristic `{p}`")))?;
        let k: u32 = k
            .trim()
            .parse()
            .map_err(|_| Error::invalid(format!("bad degree `{k}`")))?;
        let field = Field::new(p, k)?;
        match (field.modulus(), modulus.as_deref()) {
            (None, None) => Ok(field),
            (Some(a), Some(b)) if a == b => Ok(field),
            (None, Some(_)) => Err(Error::invalid("prime field carries no modulus")),
            (Some(_), None) => Err(Error::invalid("extension field needs its modulus")),
            (Some(a), Some(b)) => Err(Error::invalid(format!(
                "modulus {b:?} differs from the canonical {a:?}"
            ))),
        }
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p && self.inner.k == other.inner.k)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.descriptor())
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q = p^k`; `None` if `q` is not a prime power.
pub fn prime_power(q: usize) -> Option<(u32, u32)> {
    if q < 2 || q > u32::MAX as usize {
        return None;
    }
    let q = q as u32;
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

/// Monic degree-k irreducible over GF(p), smallest when compared from the
/// constant coefficient upward. Returned with its leading 1.
fn smallest_irreducible(p: u32, k: usize) -> Vec<u8> {
    let total = (p as usize).pow(k as u32);
    for n in 0..total {
        // c0 is the most significant digit of n, so n walks the lexicographic order.
        let mut low = vec![0u32; k];
        let mut rest = n;
        for j in (0..k).rev() {
            low[j] = (rest % p as usize) as u32;
            rest /= p as usize;
        }
        let mut f = low;
        f.push(1);
        if is_irreducible(&f, p) {
            return f.into_iter().map(|c| c as u8).collect();
        }
    }
    unreachable!("an irreducible polynomial exists in every degree")
}

/// Trial division by every monic polynomial of degree 1..=deg/2.
pub(crate) fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        for n in 0..(p as usize).pow(d as u32) {
            let mut g = Vec::with_capacity(d + 1);
            let mut rest = n;
            for _ in 0..d {
                g.push((rest % p as usize) as u32);
                rest /= p as usize;
            }
            g.push(1);
            if poly_rem(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Remainder of `f` modulo the monic `g`.
fn poly_rem(f: &[u32], g: &[u32], p: u32) -> Vec<u32> {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    while r.len() > dg {
        let lead = r.pop().unwrap();
        if lead != 0 {
            let shift = r.len() - dg;
            for (j, &gc) in g[..dg].iter().enumerate() {
                r[shift + j] = (r[shift + j] + (p - lead) * gc) % p;
            }
        }
    }
    r
}

fn poly_mulmod(a: &[u32], b: &[u32], modulus: &[u8], p: u32) -> Vec<u32> {
    let k = a.len();
    let mut prod = vec![0u32; 2 * k - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    let g: Vec<u32> = modulus.iter().map(|&c| c as u32).collect();
    let mut r = poly_rem(&prod, &g, p);
    r.resize(k, 0);
    r
}
