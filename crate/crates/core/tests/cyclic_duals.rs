use duadiq::cyclic::*;
use duadiq::distance::{weight_distribution, Budget};
use duadiq::galois::field_of_order;
use std::sync::Arc;

/// Every union of cosets, as defining sets.
fn all_defining_sets(ctx: &Arc<CyclotomicContext>, q: u64) -> Vec<DefiningSet> {
    let cosets = ctx.cosets().cosets();
    (0u64..1 << cosets.len())
        .map(|mask| {
            let members = cosets
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .flat_map(|(_, c)| c.iter().copied());
            DefiningSet::new(ctx.n(), q, members).unwrap()
        })
        .collect()
}

#[test]
fn euclidean_dual_matches_defining_set_formula() {
    for n in (3..=35u32).step_by(2) {
        let ctx = CyclotomicContext::new(n, field_of_order(2).unwrap()).unwrap();
        for t in all_defining_sets(&ctx, 2) {
            let c = ctx.code(&t).unwrap();
            let d = euclidean_dual(&c).unwrap();
            assert_eq!(d.defining_set(), &dual_defining_set(&t), "n={n} T={t}");
            assert_eq!(dual_defining_set(d.defining_set()), t);
            let f = c.field();
            assert_eq!(c.genpoly().mul(c.checkpoly()).coeffs(), duadiq::galois::FieldPoly::x_n_minus_one(f.clone(), n as usize).coeffs());
        }
    }
}

#[test]
fn dual_of_dual_is_identity_for_odd_characteristic() {
    for (n, q) in [(13u32, 3u64), (11, 3), (11, 5), (13, 9)] {
        let ctx = CyclotomicContext::new(n, field_of_order(q).unwrap()).unwrap();
        for t in all_defining_sets(&ctx, q) {
            let c = ctx.code(&t).unwrap();
            let d = euclidean_dual(&c).unwrap();
            assert_eq!(euclidean_dual(&d).unwrap(), c);
        }
    }
}

#[test]
fn hermitian_dual_matches_defining_set_formula() {
    for (n, q2) in [(3u32, 4u64), (5, 4), (7, 4), (9, 4), (11, 4), (13, 4), (15, 4), (7, 9), (13, 16)] {
        let ctx = CyclotomicContext::new(n, field_of_order(q2).unwrap()).unwrap();
        for t in all_defining_sets(&ctx, q2) {
            let c = ctx.code(&t).unwrap();
            let h = hermitian_dual(&c).unwrap();
            assert_eq!(h.defining_set(), &hermitian_dual_defining_set(&t).unwrap(), "n={n} q2={q2} T={t}");
        }
    }
}

#[test]
fn mu_images_have_identical_weight_distributions() {
    let budget = Budget::default().with_workers(2);
    for n in (3..=21u32).step_by(2) {
        let ctx = CyclotomicContext::new(n, field_of_order(2).unwrap()).unwrap();
        for t in all_defining_sets(&ctx, 2) {
            let c = ctx.code(&t).unwrap();
            if c.k() > 16 {
                continue;
            }
            let h = weight_distribution(&c, &budget).unwrap();
            for a in (2..n as u64).filter(|a| duadiq::arith::gcd(*a, n as u64) == 1) {
                let img = code_under_mu(&c, a).unwrap();
                assert_eq!(img.k(), c.k());
                assert_eq!(weight_distribution(&img, &budget).unwrap(), h, "n={n} T={t} a={a}");
            }
        }
    }
}

#[test]
fn mu_preserves_coset_closure() {
    for n in (3..=45u32).step_by(2) {
        let cs = cyclotomic_cosets(n, 2).unwrap();
        for c in cs.cosets() {
            for a in (1..n as u64).filter(|a| duadiq::arith::gcd(*a, n as u64) == 1) {
                let img = mu_apply(c, a, n).unwrap();
                assert!(DefiningSet::new(n, 2, img).is_ok());
            }
        }
    }
}

#[test]
fn even_like_subcode_dimension() {
    let ctx = CyclotomicContext::new(21, field_of_order(2).unwrap()).unwrap();
    for t in all_defining_sets(&ctx, 2) {
        let c = ctx.code(&t).unwrap();
        let e = even_like_subcode(&c).unwrap();
        assert!(e.k() == c.k() || e.k() + 1 == c.k());
        assert!(e.generator_matrix().same_row_space(c.field(), &even_like_subcode_matrix(&c)));
    }
}
