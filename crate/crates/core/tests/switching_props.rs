use std::sync::Arc;

use qpc::field::Field;
use qpc::geometry::AffineSpace;
use qpc::grm::build_target_code;
use qpc::linalg::{distance, span_contains, weight, FqVector, DEFAULT_LEADER_CAP};
use qpc::switching::{
    apply_switch, build_ri, coset_partition, recover_lambdas, triple_on_line, SwitchingFrame,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn space(q: usize, m: usize) -> AffineSpace {
    AffineSpace::new(&Field::with_order(q).unwrap(), m).unwrap()
}

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

#[test]
fn triple_examples() {
    let sp = space(3, 2);
    let code = build_target_code(&sp).unwrap();
    let line = sp.line_through(0, 1).unwrap();
    let t = triple_on_line(&code, &line, 0, 1, 2).unwrap();
    assert_eq!(t.support(), [0, 1, 2]);
    assert_eq!(&t.vector().coords()[..3], &[1, 1, 1]);
    // (0,0), (1,0), (0,1) are not collinear
    assert!(triple_on_line(&code, &line, 0, 1, 3).is_err());
    assert!(triple_on_line(&code, &line, 0, 1, 1).is_err());

    let sp4 = space(4, 2);
    let code4 = build_target_code(&sp4).unwrap();
    for line in sp4.lines().iter().take(6) {
        let pts = line.sorted_points();
        for skip in 0..4 {
            let s: Vec<usize> = pts
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != skip)
                .map(|(_, &p)| p)
                .collect();
            let t = triple_on_line(&code4, line, s[0], s[1], s[2]).unwrap();
            assert_eq!(t.vector().weight(), 3);
            assert!(code4
                .parity()
                .mul_vec(t.vector().coords())
                .unwrap()
                .iter()
                .all(|&x| x == 0));
            assert_eq!(t.vector().coords()[s[0]], 1);
        }
    }
}

#[test]
fn ri_dimensions() {
    for (q, m) in [(3, 2), (4, 2), (5, 2), (3, 3)] {
        let sp = space(q, m);
        let code = build_target_code(&sp).unwrap();
        for i in 0..sp.n() {
            let ri = build_ri(&code, &sp, i).unwrap();
            assert_eq!(ri.dim(), sp.n() - sp.q_analog() - 1, "({q},{m}) i={i}");
            assert_eq!(ri.parity().rows(), sp.q_analog() + 1);
        }
    }
    for q in [3, 5, 7] {
        let sp = space(q, 1);
        let code = build_target_code(&sp).unwrap();
        let ri = build_ri(&code, &sp, 0).unwrap();
        assert_eq!(ri.dim(), q - 2);
        assert_eq!(code.dim(), q - 2);
        assert_eq!(coset_partition(&code, &ri).unwrap().len(), 1);
    }
}

#[test]
fn partition_sizes() {
    for (q, m, t) in [(3, 2, 9), (4, 2, 64)] {
        let sp = space(q, m);
        let frame = SwitchingFrame::new(&sp, 1, DEFAULT_LEADER_CAP).unwrap();
        assert_eq!(frame.coset_count(), t);
        assert!(frame.partition().rep(0).iter().all(|&x| x == 0));
    }
}

#[test]
fn cosets_partition_the_code() {
    let sp = space(3, 2);
    let code = build_target_code(&sp).unwrap();
    let words = code.codewords(1 << 20).unwrap();
    for i in 0..9 {
        let frame = SwitchingFrame::new(&sp, i, DEFAULT_LEADER_CAP).unwrap();
        let mut seen = vec![0u32; frame.coset_count()];
        for w in words.iter() {
            let (t, lam) = frame.locate(frame.encoder().syndrome(w)).unwrap();
            assert_eq!(lam, 0);
            seen[t] += 1;
        }
        assert!(seen.iter().all(|&c| c == 81));
        let elems = frame.ri_elements(1 << 20).unwrap();
        for t in 0..frame.coset_count() {
            let rep = frame.partition().rep(t);
            for r in elems.chunks_exact(9) {
                let v: Vec<u8> = r
                    .iter()
                    .zip(rep)
                    .map(|(&a, &b)| sp.field().add(a, b))
                    .collect();
                assert!(words.contains(&v));
            }
        }
    }
}

/// Every weight-3 element of R_i lies on one line through P_i.
#[test]
fn weight_three_elements_of_ri_lie_on_lines_through_pi() {
    let sp = space(3, 2);
    for i in 0..9 {
        let frame = SwitchingFrame::new(&sp, i, DEFAULT_LEADER_CAP).unwrap();
        let elems = frame.ri_elements(1 << 20).unwrap();
        assert_eq!(elems.len(), 81 * 9);
        let mut triples = 0;
        for r in elems.chunks_exact(9) {
            if weight(r) != 3 {
                continue;
            }
            triples += 1;
            let supp: Vec<usize> = (0..9).filter(|&k| r[k] != 0).collect();
            assert!(supp.contains(&i), "i={i} supp={supp:?}");
            assert!(sp.collinear(supp[0], supp[1], supp[2]).unwrap());
        }
        // 4 lines through P_i, 2 nonzero multiples of one triple each
        assert_eq!(triples, 8);
    }
}

/// For every weight-2 x at distance 2 from the code and every i collinear
/// with its support, some triple of R_i on {i, j, k} is at distance 2 from x.
#[test]
fn weight_two_vectors_have_a_close_triple_in_ri() {
    let sp = space(3, 2);
    let f = sp.field().clone();
    let code = build_target_code(&sp).unwrap();
    let table = code.leader_table(DEFAULT_LEADER_CAP).unwrap();
    let ris: Vec<_> = (0..9).map(|i| build_ri(&code, &sp, i).unwrap()).collect();
    let mut checked = 0;
    for x in all_vectors(3, 9).filter(|v| weight(v) == 2) {
        if table.leader_weight(table.encoder().syndrome(&x)) != Some(2) {
            continue;
        }
        let supp: Vec<usize> = (0..9).filter(|&k| x[k] != 0).collect();
        let (j, k) = (supp[0], supp[1]);
        let line = sp.line_through(j, k).unwrap();
        for i in line.points().iter().copied().filter(|&i| i != j && i != k) {
            let t = triple_on_line(&code, &line, i, j, k).unwrap();
            let found = f.nonzero().any(|lam| {
                let c = t.vector().scale(lam);
                distance(c.coords(), &x) == 2 && span_contains(ris[i].basis(), &c).unwrap()
            });
            assert!(found, "x={x:?} i={i}");
            checked += 1;
        }
    }
    assert!(checked > 0);
}

/// For y in R_i + x and z in the code outside that coset,
/// d(y + lambda e_i, z) >= 3.
#[test]
fn one_coset_switch_keeps_distance_three() {
    let sp = space(3, 2);
    let f = sp.field().clone();
    let code = build_target_code(&sp).unwrap();
    let words = code.codewords(1 << 20).unwrap();
    for i in 0..9 {
        let frame = SwitchingFrame::new(&sp, i, DEFAULT_LEADER_CAP).unwrap();
        let coset_of = |w: &[u8]| frame.locate(frame.encoder().syndrome(w)).unwrap().0;
        for t in 0..frame.coset_count() {
            let inside: Vec<&[u8]> = words.iter().filter(|w| coset_of(w) == t).collect();
            let outside: Vec<&[u8]> = words.iter().filter(|w| coset_of(w) != t).collect();
            assert_eq!(inside.len(), 81);
            for lam in f.nonzero() {
                for y in &inside {
                    let mut shifted = y.to_vec();
                    shifted[i] = f.add(shifted[i], lam);
                    let d = outside.iter().map(|z| distance(&shifted, z)).min().unwrap();
                    assert!(d >= 3, "i={i} t={t} lam={lam}");
                }
            }
        }
    }
}

fn frame32(i: usize) -> Arc<SwitchingFrame> {
    SwitchingFrame::new(&space(3, 2), i, DEFAULT_LEADER_CAP).unwrap()
}

#[test]
fn membership_counts_and_representatives() {
    let frame = frame32(2);
    let f = frame.space().field().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..20 {
        let sw = apply_switch(&frame, frame.random_lambdas(&mut rng)).unwrap();
        let members = all_vectors(3, 9).filter(|v| sw.contains_raw(v)).count();
        assert_eq!(members, 729);
        for t in 0..frame.coset_count() {
            let rep = sw.shifted_rep(t);
            assert!(sw.member(&FqVector::new(&f, rep.clone()).unwrap()).unwrap());
            for lam in f.elements().filter(|&l| l != sw.lambdas()[t]) {
                let mut y = frame.partition().rep(t).to_vec();
                y[2] = f.add(y[2], lam);
                assert!(!sw.member(&FqVector::new(&f, y).unwrap()).unwrap());
            }
        }
    }
}

#[test]
fn recovery_round_trips() {
    let frame = frame32(5);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..100 {
        let lam = frame.random_lambdas(&mut rng);
        let sw = apply_switch(&frame, lam.clone()).unwrap();
        let words = sw.materialize(1 << 20).unwrap();
        assert_eq!(words.len(), 729);
        assert_eq!(recover_lambdas(&frame, &words).unwrap(), lam);
    }
    let base = build_target_code(frame.space())
        .unwrap()
        .codewords(1 << 20)
        .unwrap();
    assert_eq!(recover_lambdas(&frame, &base).unwrap(), vec![0; 9]);
    // a set that is not a switched code
    let mut rows: Vec<Vec<u8>> = base.iter().map(<[u8]>::to_vec).collect();
    rows[10][0] = (rows[10][0] + 1) % 3;
    let broken = qpc::words::CodeWords::from_rows(frame.space().field(), 9, rows).unwrap();
    assert!(recover_lambdas(&frame, &broken).is_err());
}

#[test]
fn zero_and_constant_switches() {
    let frame = frame32(0);
    let base = build_target_code(frame.space())
        .unwrap()
        .codewords(1 << 20)
        .unwrap();
    let zero = apply_switch(&frame, vec![0; 9])
        .unwrap()
        .materialize(1 << 20)
        .unwrap();
    assert_eq!(zero, base);
    let mut shift = vec![0u8; 9];
    shift[0] = 2;
    let constant = apply_switch(&frame, vec![2; 9])
        .unwrap()
        .materialize(1 << 20)
        .unwrap();
    assert_eq!(constant, base.translate(&shift));
    assert!(apply_switch(&frame, vec![0; 8]).is_err());
    assert!(frame.single_lambdas(9, 1).is_err());
}
