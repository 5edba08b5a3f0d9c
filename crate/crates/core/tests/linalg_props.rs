use proptest::prelude::*;
use qpc::field::Field;
use qpc::geometry::AffineSpace;
use qpc::grm::build_target_code;
use qpc::linalg::{
    min_weight_from_parity, span_contains, weight, CosetLeaderTable, FqMatrix, FqVector,
    DEFAULT_LEADER_CAP,
};
use qpc::switching::build_ri;

fn field_strategy() -> impl Strategy<Value = Field> {
    prop_oneof![
        Just(Field::new(2, 1).unwrap()),
        Just(Field::new(3, 1).unwrap()),
        Just(Field::new(2, 2).unwrap()),
        Just(Field::new(5, 1).unwrap()),
    ]
}

fn matrix_strategy() -> impl Strategy<Value = FqMatrix> {
    (field_strategy(), 0usize..6, 1usize..8).prop_flat_map(|(f, r, c)| {
        let q = f.q() as u8;
        proptest::collection::vec(0..q, r * c)
            .prop_map(move |data| FqMatrix::new(&f, r, c, data).unwrap())
    })
}

/// Every vector of `F_q^n` in index order.
fn all_vectors(q: usize, n: usize) -> impl Iterator<Item = Vec<u8>> {
    (0..q.pow(n as u32)).map(move |mut idx| {
        (0..n)
            .map(|_| {
                let d = idx % q;
                idx /= q;
                d as u8
            })
            .collect()
    })
}

/// Syndrome index computed directly: row 0 is the least significant digit.
fn direct_syndrome(parity: &FqMatrix, v: &[u8]) -> usize {
    let q = parity.field().q();
    parity
        .mul_vec(v)
        .unwrap()
        .iter()
        .rev()
        .fold(0, |acc, &d| acc * q + d as usize)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn rref_is_idempotent_and_preserves_row_space(m in matrix_strategy()) {
        let r = m.rref();
        prop_assert_eq!(&r.matrix.rref().matrix, &r.matrix);
        prop_assert_eq!(r.rank, r.pivots.len());
        prop_assert!(m.same_row_space(&r.matrix));
        for (row, &pc) in r.pivots.iter().enumerate() {
            prop_assert_eq!(r.matrix.get(row, pc), 1);
            for other in 0..r.matrix.rows() {
                if other != row {
                    prop_assert_eq!(r.matrix.get(other, pc), 0);
                }
            }
        }
    }

    #[test]
    fn rank_plus_nullity_is_width(m in matrix_strategy()) {
        let ns = m.nullspace();
        prop_assert_eq!(m.rank() + ns.rows(), m.cols());
        prop_assert_eq!(ns.rank(), ns.rows());
        if ns.rows() > 0 && m.rows() > 0 {
            prop_assert!(m.mul_transpose(&ns).unwrap().is_zero());
        }
    }

    #[test]
    fn rows_and_their_combinations_are_in_the_span(m in matrix_strategy(), c in proptest::collection::vec(0u8..2, 6)) {
        let f = m.field().clone();
        let mut acc = vec![0u8; m.cols()];
        for (r, &k) in m.iter_rows().zip(&c) {
            prop_assert!(span_contains(&m, &FqVector::new(&f, r.to_vec()).unwrap()).unwrap());
            for (a, &x) in acc.iter_mut().zip(r) {
                *a = f.add(*a, f.mul(k, x));
            }
        }
        prop_assert!(span_contains(&m, &FqVector::new(&f, acc).unwrap()).unwrap());
    }

    #[test]
    fn matrix_text_round_trips(m in matrix_strategy()) {
        let back = FqMatrix::from_text(m.field(), &m.to_text()).unwrap();
        if m.rows() > 0 {
            prop_assert_eq!(back, m);
        }
    }
}

#[test]
fn worked_examples() {
    let f = Field::new(3, 1).unwrap();
    let id = FqMatrix::identity(&f, 3);
    assert_eq!(id.rref().matrix, id);
    assert_eq!(id.rank(), 3);
    assert_eq!(id.nullspace().rows(), 0);
    let z = FqMatrix::zeros(&f, 2, 3);
    assert_eq!(z.rank(), 0);
    assert_eq!(z.rref().matrix, z);
    let m = FqMatrix::from_rows(&f, 3, &[vec![1, 1, 1], vec![2, 2, 2]]).unwrap();
    assert_eq!(m.rank(), 1);
    let ones = FqMatrix::from_rows(&f, 3, &[vec![1, 1, 1]]).unwrap();
    let ns = ones.nullspace();
    assert_eq!(ns.rows(), 2);
    for r in ns.iter_rows() {
        assert_eq!(r.iter().map(|&x| x as usize).sum::<usize>() % 3, 0);
    }
    let e = FqMatrix::identity(&f, 2);
    assert!(span_contains(&e, &FqVector::new(&f, vec![2, 2]).unwrap()).unwrap());
    let b = FqMatrix::from_rows(&f, 3, &[vec![1, 1, 0]]).unwrap();
    assert!(!span_contains(&b, &FqVector::new(&f, vec![1, 2, 0]).unwrap()).unwrap());
    assert!(span_contains(&b, &FqVector::zeros(&f, 3)).unwrap());
    assert!(span_contains(&b, &FqVector::zeros(&f, 4)).is_err());
}

#[test]
fn base_parity_nullspace_has_six_rows() {
    let space = AffineSpace::new(&Field::new(3, 1).unwrap(), 2).unwrap();
    let code = build_target_code(&space).unwrap();
    assert_eq!(code.parity().rows(), 3);
    assert_eq!(code.parity().nullspace().rows(), 6);
}

/// Leader weights by brute force over all of `F_q^n`.
fn brute_leaders(parity: &FqMatrix) -> Vec<u8> {
    let q = parity.field().q();
    let mut best = vec![u8::MAX; q.pow(parity.rows() as u32)];
    for v in all_vectors(q, parity.cols()) {
        let s = direct_syndrome(parity, &v);
        best[s] = best[s].min(weight(&v) as u8);
    }
    best
}

#[test]
fn leader_table_matches_brute_force() {
    let f = Field::new(3, 1).unwrap();
    let space = AffineSpace::new(&f, 2).unwrap();
    let code = build_target_code(&space).unwrap();
    for parity in [
        code.parity().clone(),
        build_ri(&code, &space, 4).unwrap().parity().clone(),
    ] {
        let table = CosetLeaderTable::build(&parity, DEFAULT_LEADER_CAP).unwrap();
        let brute = brute_leaders(&parity);
        assert_eq!(table.weights(), brute.as_slice());
        assert_eq!(table.leader_weight(0), Some(0));
        assert_eq!(table.covering_radius() as u8, *brute.iter().max().unwrap());
        for v in all_vectors(3, 9).step_by(97) {
            assert_eq!(table.encoder().syndrome(&v), direct_syndrome(&parity, &v));
        }
    }
}

#[test]
fn min_weight_from_parity_matches_enumeration() {
    for (q, m) in [(3usize, 1usize), (3, 2), (4, 1), (5, 1), (7, 1)] {
        let space = AffineSpace::new(&Field::with_order(q).unwrap(), m).unwrap();
        let code = build_target_code(&space).unwrap();
        let by_parity = min_weight_from_parity(code.parity(), DEFAULT_LEADER_CAP).unwrap();
        let by_enum = code.min_weight_by_enumeration(1 << 24).unwrap();
        assert_eq!(by_parity, by_enum, "({q},{m})");
        if q == 3 && m == 2 {
            for i in 0..9 {
                let ri = build_ri(&code, &space, i).unwrap();
                let words = brute_min_weight(ri.basis());
                assert_eq!(ri.min_weight(DEFAULT_LEADER_CAP).unwrap(), Some(words));
            }
        }
    }
}

#[test]
fn min_weight_from_parity_beyond_enumeration() {
    for (q, m) in [(4usize, 2usize), (5, 2), (3, 3)] {
        let space = AffineSpace::new(&Field::with_order(q).unwrap(), m).unwrap();
        let code = build_target_code(&space).unwrap();
        assert_eq!(
            min_weight_from_parity(code.parity(), DEFAULT_LEADER_CAP).unwrap(),
            Some(3)
        );
    }
}

fn brute_min_weight(basis: &FqMatrix) -> usize {
    let f = basis.field();
    let q = f.q();
    all_vectors(q, basis.rows())
        .skip(1)
        .map(|c| {
            let mut v = vec![0u8; basis.cols()];
            for (&k, r) in c.iter().zip(basis.iter_rows()) {
                for (a, &x) in v.iter_mut().zip(r) {
                    *a = f.add(*a, f.mul(k, x));
                }
            }
            weight(&v)
        })
        .min()
        .unwrap()
}
