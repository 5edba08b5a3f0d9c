use qpc::error::Error;
use qpc::field::{is_prime, prime_power, Field};

const SMALL: [(u32, u32); 7] = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)];

fn digits(mut idx: usize, p: usize, k: usize) -> Vec<usize> {
    (0..k)
        .map(|_| {
            let d = idx % p;
            idx /= p;
            d
        })
        .collect()
}

fn undigits(c: &[usize], p: usize) -> usize {
    c.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Schoolbook product of two residues modulo `modulus` (monic, constant term first).
fn poly_mul(a: &[usize], b: &[usize], modulus: &[usize], p: usize) -> Vec<usize> {
    let k = modulus.len() - 1;
    let mut prod = vec![0usize; 2 * k];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for deg in (k..prod.len()).rev() {
        let c = prod[deg];
        if c != 0 {
            for (s, &mcoef) in modulus.iter().enumerate() {
                let slot = deg - k + s;
                prod[slot] = (prod[slot] + p * p - c * mcoef % p) % p;
            }
        }
    }
    prod.truncate(k);
    prod
}

/// True iff the monic polynomial has no factor of degree <= k/2, by brute force
/// over all monic divisors.
fn irreducible_oracle(poly: &[usize], p: usize) -> bool {
    let k = poly.len() - 1;
    for d in 1..=k / 2 {
        for low in 0..p.pow(d as u32) {
            let mut div = digits(low, p, d);
            div.push(1);
            let mut rem = poly.to_vec();
            for deg in (d..=k).rev() {
                let c = rem[deg];
                if c != 0 {
                    for (s, &dc) in div.iter().enumerate() {
                        let slot = deg - d + s;
                        rem[slot] = (rem[slot] + p * p - c * dc % p) % p;
                    }
                }
            }
            if rem.iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

#[test]
fn axioms_hold_exhaustively_for_small_fields() {
    for (p, k) in SMALL {
        let f = Field::new(p, k).unwrap();
        let q = f.q() as u8;
        for a in 0..q {
            assert_eq!(f.add(a, 0), a);
            assert_eq!(f.mul(a, 1), a);
            assert_eq!(f.add(a, f.neg(a)), 0);
            for b in 0..q {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                assert_eq!(f.sub(f.add(a, b), b), a);
                for c in 0..q {
                    assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}

#[test]
fn fermat_and_inverses() {
    for (p, k) in SMALL {
        let f = Field::new(p, k).unwrap();
        let q = f.q();
        for a in f.nonzero() {
            assert_eq!(f.pow(a, q as u64 - 1), 1, "GF({q}) a={a}");
            let inv = f.inv(a).unwrap();
            assert_eq!(f.mul(a, inv), 1);
            assert_eq!(f.div(a, a).unwrap(), 1);
        }
        assert_eq!(f.inv(0), Err(Error::DivisionByZero));
    }
}

#[test]
fn multiplication_matches_polynomial_oracle() {
    for (p, k) in [(2, 2), (2, 3), (3, 2), (2, 4), (5, 2), (3, 3), (7, 2)] {
        let f = Field::new(p, k).unwrap();
        let modulus: Vec<usize> = f.modulus().unwrap().iter().map(|&c| c as usize).collect();
        let (p, k) = (p as usize, k as usize);
        for a in 0..f.q() {
            for b in 0..f.q() {
                let expect = undigits(
                    &poly_mul(&digits(a, p, k), &digits(b, p, k), &modulus, p),
                    p,
                );
                assert_eq!(
                    f.mul(a as u8, b as u8) as usize,
                    expect,
                    "GF({p}^{k}) {a}*{b}"
                );
                let sum: Vec<usize> = digits(a, p, k)
                    .iter()
                    .zip(digits(b, p, k))
                    .map(|(x, y)| (x + y) % p)
                    .collect();
                assert_eq!(f.add(a as u8, b as u8) as usize, undigits(&sum, p));
            }
        }
    }
}

#[test]
fn modulus_is_smallest_irreducible() {
    for (p, k) in [(2, 2), (2, 3), (3, 2), (2, 4), (5, 2), (3, 3), (2, 5)] {
        let f = Field::new(p, k).unwrap();
        let (p, k) = (p as usize, k as usize);
        // Lexicographic from the constant term up is the order of the base-p
        // value of the reversed coefficient list read as constant-term-major.
        let first = (0..p.pow(k as u32))
            .map(|idx| {
                // idx's most significant digit is the constant term
                let mut c = digits(idx, p, k);
                c.reverse();
                c.push(1);
                c
            })
            .find(|c| irreducible_oracle(c, p))
            .unwrap();
        let got: Vec<usize> = f.modulus().unwrap().iter().map(|&c| c as usize).collect();
        assert_eq!(got, first, "GF({p}^{k})");
    }
}

#[test]
fn worked_examples() {
    let f3 = Field::new(3, 1).unwrap();
    assert_eq!(f3.add(1, 2), 0);
    assert!(f3.modulus().is_none());
    let f4 = Field::new(2, 2).unwrap();
    assert_eq!(f4.modulus().unwrap(), &[1, 1, 1]);
    assert_eq!(f4.mul(2, 2), 3);
    assert_eq!(f4.descriptor(), "2^2;mod=1,1,1");
    assert_eq!(Field::new(2, 3).unwrap().modulus().unwrap(), &[1, 0, 1, 1]);
    assert_eq!(Field::new(3, 2).unwrap().modulus().unwrap(), &[1, 0, 1]);
    assert_eq!(Field::new(5, 1).unwrap().inv(2).unwrap(), 3);
    assert_eq!(Field::new(4, 1).unwrap_err(), Error::NotPrime(4));
    assert_eq!(Field::new(3, 0).unwrap_err(), Error::ZeroDegree);
    assert!(matches!(Field::new(2, 9), Err(Error::FieldTooLarge { .. })));
}

#[test]
fn descriptors_round_trip() {
    for (p, k) in SMALL {
        let f = Field::new(p, k).unwrap();
        let back = Field::from_descriptor(&f.descriptor()).unwrap();
        assert_eq!(back, f);
        assert_eq!(back.descriptor(), f.descriptor());
    }
    assert!(Field::from_descriptor("2^2;mod=1,0,1").is_err());
    assert!(Field::from_descriptor("2^2").is_err());
    assert!(Field::from_descriptor("3^1;mod=1,1").is_err());
    assert!(Field::from_descriptor("nine").is_err());
}

#[test]
fn prime_power_splits() {
    assert_eq!(prime_power(9), Some((3, 2)));
    assert_eq!(prime_power(7), Some((7, 1)));
    assert_eq!(prime_power(12), None);
    assert!(is_prime(251) && !is_prime(1) && !is_prime(91));
    assert_eq!(Field::with_order(8).unwrap().k(), 3);
    assert!(Field::with_order(6).is_err());
}
