use std::collections::{BTreeSet, HashSet};

use qpc::field::Field;
use qpc::geometry::AffineSpace;
use qpc::grm::{
    build_grm, build_target_code, dual_order, grm_dimension, grm_min_distance, target_order,
    target_parity,
};
use qpc::linalg::FqMatrix;

fn space(q: usize, m: usize) -> AffineSpace {
    AffineSpace::new(&Field::with_order(q).unwrap(), m).unwrap()
}

/// Point sets `{a + t d}` for every point a and nonzero direction d.
fn brute_lines(sp: &AffineSpace) -> HashSet<BTreeSet<usize>> {
    let f = sp.field();
    let (q, m, n) = (sp.q(), sp.m(), sp.n());
    let mut out = HashSet::new();
    for a in 0..n {
        for d in 1..n {
            let dir = sp.point(d).to_vec();
            let pts: BTreeSet<usize> = (0..q as u8)
                .map(|t| {
                    let c: Vec<u8> = (0..m)
                        .map(|l| f.add(sp.point(a)[l], f.mul(t, dir[l])))
                        .collect();
                    sp.index_of(&c)
                })
                .collect();
            out.insert(pts);
        }
    }
    out
}

#[test]
fn line_counts_and_incidence() {
    for (q, m) in [(3, 1), (3, 2), (4, 2), (5, 2), (3, 3), (2, 3)] {
        let sp = space(q, m);
        let n = sp.n();
        let qa = sp.q_analog();
        assert_eq!(qa, (n - 1) / (q - 1));
        let lines = sp.lines();
        assert_eq!(lines.len(), q.pow(m as u32 - 1) * qa, "({q},{m})");
        let brute = brute_lines(&sp);
        let ours: HashSet<BTreeSet<usize>> = lines
            .iter()
            .map(|l| l.points().iter().copied().collect())
            .collect();
        assert_eq!(ours, brute);
        for l in lines {
            assert_eq!(l.points().len(), q);
        }
        for a in 0..n {
            let through = sp.lines_through_point(a).unwrap();
            assert_eq!(through.len(), qa);
            assert!(through.iter().all(|l| l.contains(a)));
        }
        // exactly one line through every pair
        let mut pair_count = vec![0u32; n * n];
        for l in lines {
            for &x in l.points() {
                for &y in l.points() {
                    pair_count[x * n + y] += 1;
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                if x != y {
                    assert_eq!(pair_count[x * n + y], 1);
                    let l = sp.line_through(x, y).unwrap();
                    assert!(l.contains(x) && l.contains(y));
                }
            }
        }
    }
}

#[test]
fn collinearity_matches_rank_oracle() {
    let sp = space(3, 2);
    let f = sp.field();
    for a in 0..9 {
        for b in 0..9 {
            for c in 0..9 {
                if a == b || b == c || a == c {
                    continue;
                }
                let diff = |x: usize| -> Vec<u8> {
                    (0..2)
                        .map(|l| f.sub(sp.point(x)[l], sp.point(a)[l]))
                        .collect()
                };
                let m = FqMatrix::from_rows(f, 2, &[diff(b), diff(c)]).unwrap();
                assert_eq!(sp.collinear(a, b, c).unwrap(), m.rank() == 1);
            }
        }
    }
}

#[test]
fn point_order_puts_first_coordinate_lowest() {
    let sp = space(3, 2);
    assert_eq!(sp.point(1), &[1, 0]);
    assert_eq!(sp.point(3), &[0, 1]);
    for i in 0..9 {
        assert_eq!(sp.index_of(sp.point(i)), i);
    }
}

/// Number of exponent vectors in `[0, q-1]^m` with sum at most r.
fn monomial_count(q: usize, m: usize, r: usize) -> u64 {
    (0..q.pow(m as u32))
        .filter(|&idx| {
            let mut x = idx;
            let mut s = 0;
            for _ in 0..m {
                s += x % q;
                x /= q;
            }
            s <= r
        })
        .count() as u64
}

#[test]
fn dimension_formula_matches_monomial_count_and_rank() {
    for (q, m) in [(2, 3), (3, 1), (3, 2), (4, 2), (5, 2), (3, 3), (7, 1)] {
        let sp = space(q, m);
        for r in 0..=(q - 1) * m {
            let formula = grm_dimension(q, m, r).unwrap();
            assert_eq!(formula, monomial_count(q, m, r), "({q},{m}) r={r}");
            assert_eq!(build_grm(&sp, r).unwrap().dim() as u64, formula);
        }
    }
}

#[test]
fn distance_formula_matches_enumeration() {
    for (q, m) in [(2, 3), (3, 1), (3, 2), (4, 1), (5, 1), (4, 2)] {
        let sp = space(q, m);
        for r in 0..=(q - 1) * m {
            let code = build_grm(&sp, r).unwrap();
            if code.size_u64().is_none_or(|s| s > 1 << 20) {
                continue;
            }
            let d = code.min_weight_by_enumeration(1 << 20).unwrap().unwrap();
            assert_eq!(
                d as u64,
                grm_min_distance(q, m, r).unwrap(),
                "({q},{m}) r={r}"
            );
        }
    }
}

#[test]
fn dual_codes_are_orthogonal_with_complementary_dimension() {
    for (q, m) in [(3, 2), (4, 2), (2, 3), (5, 1)] {
        let sp = space(q, m);
        for r in 0..(q - 1) * m {
            let s = dual_order(q, m, r).unwrap();
            let a = build_grm(&sp, r).unwrap();
            let b = build_grm(&sp, s).unwrap();
            assert_eq!(a.dim() + b.dim(), sp.n());
            assert!(a
                .generator()
                .mul_transpose(b.generator())
                .unwrap()
                .is_zero());
        }
        assert!(dual_order(q, m, (q - 1) * m).is_err());
    }
}

#[test]
fn target_code_parameters() {
    for (q, m) in [(3, 1), (3, 2), (4, 2), (5, 2), (3, 3)] {
        let sp = space(q, m);
        let r = target_order(q, m).unwrap();
        assert_eq!(r, (q - 1) * m - 2);
        let code = build_target_code(&sp).unwrap();
        let n = sp.n();
        assert_eq!(code.dim(), n - m - 1);
        assert_eq!(grm_dimension(q, m, r).unwrap() as usize, n - m - 1);
        assert_eq!(grm_min_distance(q, m, r).unwrap(), 3);
        assert!(code.has_no_weight_one_or_two());
        let h = target_parity(&sp);
        assert!(code.generator().mul_transpose(&h).unwrap().is_zero());
        assert_eq!(h.rank(), m + 1);
    }
    assert!(target_order(2, 3).is_err());
}
