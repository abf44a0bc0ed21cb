//! Duadic-code facts checked on constructed instances. Expected weights were
//! produced by an independent Python enumeration over all splittings.

use duadiq::arith::ord_mod;
use duadiq::cyclic::is_quadratic_residue;
use duadiq::distance::{min_odd_like_weight, min_weight, Budget};
use duadiq::duadic::*;
use duadiq::galois::field_of_order;
use duadiq::stabilizer::{css_from_quartet, hermitian_from_quartet, hermitian_splitting, Degenerate};

/// (n, odd-like minimum weight, even-like minimum weight) for q = 2.
const BINARY_ORACLE: &[(u32, u64, u64)] = &[(7, 3, 4), (17, 5, 6), (23, 7, 8), (31, 7, 8), (41, 9, 10)];

fn budget() -> Budget {
    Budget::default().with_workers(2)
}

#[test]
fn splittings_exist_iff_q_is_a_square() {
    for q in [2u64, 3, 4, 5] {
        for n in (3..=61u32).step_by(2).filter(|n| duadiq::arith::gcd(*n as u64, q) == 1) {
            let found = !find_splittings(n, q, Some(1)).unwrap().is_empty();
            assert_eq!(found, is_quadratic_residue(q, n as u64).unwrap(), "n={n} q={q}");
            assert_eq!(found, duadic_exists(n, q).unwrap());
        }
    }
}

#[test]
fn survey_range_for_q2() {
    let existent: Vec<u32> = (3..=61u32).step_by(2).filter(|&n| duadic_exists(n, 2).unwrap()).collect();
    assert_eq!(existent, vec![7, 17, 23, 31, 41, 47, 49]);
    let orders: Vec<u64> = existent.iter().map(|&n| ord_mod(n as u64, 2).unwrap()).collect();
    assert_eq!(orders, vec![3, 8, 11, 5, 20, 23, 21]);
}

#[test]
fn mu_minus_one_and_mu_minus_q_agree_when_order_is_odd() {
    for q in [2u64, 3] {
        for n in (3..=61u32).step_by(2).filter(|n| duadiq::arith::gcd(*n as u64, q) == 1) {
            if ord_mod(n as u64, q).unwrap().is_multiple_of(2) {
                continue;
            }
            let a = splitting_by(n, q * q, n as u64 - 1).unwrap().expect("mu_-1 splits");
            let b = hermitian_splitting(n, q).unwrap().expect("mu_-q splits");
            assert!(a.same_partition(&b), "n={n} q={q}");
        }
    }
}

#[test]
fn odd_like_weights_match_oracle_on_every_splitting() {
    let f = field_of_order(2).unwrap();
    for &(n, d_o, even) in BINARY_ORACLE {
        for s in distinct_splittings(n, 2).unwrap() {
            let q = build_quartet(&s, f.clone()).unwrap();
            let d0 = min_odd_like_weight(q.d0(), &budget()).unwrap();
            let d1 = min_odd_like_weight(q.d1(), &budget()).unwrap();
            assert_eq!((d0.exact(), d1.exact()), (Some(d_o), Some(d_o)), "n={n} {s}");
            assert_eq!(min_weight(q.c0(), &budget()).unwrap().exact(), Some(even), "n={n}");
            let r = check_square_root_bound(&s, &d0, &d1);
            assert!(!r.is_violated());
            assert_eq!(r.square_root, BoundCheck::Holds);
        }
    }
}

#[test]
fn css_parameters() {
    let f = field_of_order(2).unwrap();
    for &(n, d_o, even) in BINARY_ORACLE {
        let s = find_splittings(n, 2, Some(1)).unwrap().remove(0);
        let p = css_from_quartet(&build_quartet(&s, f.clone()).unwrap(), &budget()).unwrap();
        assert_eq!((p.k, p.d.exact(), p.purity.exact()), (1, Some(d_o), Some(even)));
        assert_eq!(p.degenerate, Degenerate::No);
        if n <= 31 {
            assert_eq!(p.d_direct.unwrap().exact(), Some(d_o));
        }
    }
}

#[test]
fn hermitian_parameters_small() {
    let f = field_of_order(4).unwrap();
    for n in [5u32, 7, 11, 13] {
        let Some(s) = hermitian_splitting(n, 2).unwrap() else {
            continue;
        };
        let p = hermitian_from_quartet(&build_quartet(&s, f.clone()).unwrap(), &budget()).unwrap();
        let d = p.d.exact().unwrap();
        assert!(d * d >= n as u64);
        assert_eq!(p.d_cross_check.exact(), Some(d));
        if s.is_given_by(n as u64 - 1) {
            assert!(d * d - d + 1 >= n as u64);
        }
    }
}
