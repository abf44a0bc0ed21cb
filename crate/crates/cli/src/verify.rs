//! Cross-module property suites run by `duadiq verify`.

use crate::report::SuiteTally;
use crate::{default_css_splitting, progress};
use duadiq::arith::{gcd, ord_mod};
use duadiq::cyclic::{
    code_under_mu, euclidean_dual, dual_defining_set, hermitian_dual, hermitian_dual_defining_set,
    is_quadratic_residue, CyclotomicContext, DefiningSet,
};
use duadiq::distance::{min_odd_like_weight, weight_distribution, Budget, DistanceError};
use duadiq::duadic::{
    build_quartet_in, check_square_root_bound, degeneracy_certificate, distinct_splittings, find_splittings,
    splitting_by, BoundCheck, Construction,
};
use duadiq::galois::field_of_order;
use duadiq::stabilizer::{
    css_from_quartet, degeneracy_verdict, hermitian_splitting, Agreement, Degenerate, StabilizerError,
};
use std::sync::Arc;

/// Lengths up to which the dual-formula suite runs.
pub const DUAL_SUITE_MAX_N: u32 = 35;
/// Lengths up to which the equivalence suite runs.
pub const EQUIVALENCE_SUITE_MAX_N: u32 = 21;
/// Largest message space enumerated by the equivalence suite.
pub const EQUIVALENCE_SUITE_MAX_CODEWORDS: u64 = 1 << 21;
/// Lengths up to which the Hermitian dual suite runs.
pub const HERMITIAN_SUITE_MAX_N: u32 = 15;
/// Skip defining-set sweeps with more than this many cosets.
const MAX_COSETS_SWEPT: usize = 14;
/// Distinct splittings examined per length.
const MAX_SPLITTINGS_PER_N: usize = 64;

fn lengths(q: u64, max_n: u32) -> impl Iterator<Item = u32> {
    (3..=max_n).step_by(2).filter(move |&n| gcd(n as u64, q) == 1)
}

fn all_defining_sets(ctx: &Arc<CyclotomicContext>, q: u64) -> Option<Vec<DefiningSet>> {
    let cosets = ctx.cosets().cosets();
    if cosets.len() > MAX_COSETS_SWEPT {
        return None;
    }
    Some(
        (0u64..1 << cosets.len())
            .map(|mask| {
                let members = cosets
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .flat_map(|(_, c)| c.iter().copied());
                DefiningSet::new(ctx.n(), q, members).expect("union of cosets")
            })
            .collect(),
    )
}

/// Representatives of the unit classes modulo `<q>`; `mu_q` fixes every
/// q-ary cyclic code, so these multipliers cover all distinct images.
fn unit_class_representatives(n: u32, q: u64) -> Vec<u64> {
    let n = n as u64;
    let mut seen = vec![false; n as usize];
    let mut reps = Vec::new();
    for a in 1..n {
        if gcd(a, n) != 1 || seen[a as usize] {
            continue;
        }
        reps.push(a);
        let mut x = a;
        while !seen[x as usize] {
            seen[x as usize] = true;
            x = x * q % n;
        }
    }
    reps
}

pub fn run_suites(q: u64, max_n: u32, budget: &Budget) -> Vec<SuiteTally> {
    let field = field_of_order(q).expect("validated field order");
    let field2 = field_of_order(q * q).ok();
    let mut existence = SuiteTally::new("existence");
    let mut equality = SuiteTally::new("odd_like_equality");
    let mut bounds = SuiteTally::new("square_root_bounds");
    let mut duals = SuiteTally::new("dual_formula");
    let mut equivalence = SuiteTally::new("mu_equivalence");
    let mut lemma6 = SuiteTally::new("mu_minus_one_vs_mu_minus_q");
    let mut herm = SuiteTally::new("hermitian_dual_formula");
    let mut css = SuiteTally::new("css_parameters");

    for n in lengths(q, max_n) {
        progress(&format!("verify: n = {n}"));
        let qr = is_quadratic_residue(q, n as u64).unwrap_or(false);
        let found = find_splittings(n, q, Some(1)).map(|v| !v.is_empty());
        existence.record(found.as_ref().is_ok_and(|f| *f == qr), || {
            format!("n={n}: splitting found {found:?}, q square {qr}")
        });

        let Ok(ctx) = CyclotomicContext::new(n, field.clone()) else {
            continue;
        };

        if qr {
            let splittings = distinct_splittings(n, q).unwrap_or_default();
            for s in splittings.iter().take(MAX_SPLITTINGS_PER_N) {
                let quartet = match build_quartet_in(&ctx, s) {
                    Ok(x) => x,
                    Err(e) => {
                        equality.record(false, || format!("n={n} {s}: {e}"));
                        continue;
                    }
                };
                let d0 = min_odd_like_weight(quartet.d0(), budget);
                let d1 = min_odd_like_weight(quartet.d1(), budget);
                let (Ok(d0), Ok(d1)) = (d0, d1) else {
                    equality.record(false, || format!("n={n} {s}: odd-like weight failed"));
                    continue;
                };
                let report = check_square_root_bound(s, &d0, &d1);
                match report.equal_odd_like_weights {
                    BoundCheck::Holds => equality.record(true, String::new),
                    BoundCheck::Violated => equality.record(false, || format!("n={n} {s}: {d0} != {d1}")),
                    _ => equality.skip(),
                }
                for (name, check) in [
                    ("d_o^2 >= n", report.square_root),
                    ("d_o^2 - d_o + 1 >= n", report.square_root_mu_minus_one),
                ] {
                    match check {
                        BoundCheck::Holds => bounds.record(true, String::new),
                        BoundCheck::Violated => bounds.record(false, || format!("n={n} {s}: {name} fails for {d0}")),
                        BoundCheck::Undetermined => bounds.skip(),
                        BoundCheck::NotApplicable => {}
                    }
                }
            }
            for _ in splittings.iter().skip(MAX_SPLITTINGS_PER_N) {
                equality.skip();
            }

            match default_css_splitting(n, q) {
                Ok(Some(s)) => match build_quartet_in(&ctx, &s).map_err(StabilizerError::from).and_then(|qt| css_from_quartet(&qt, budget)) {
                    Ok(p) if !p.is_exact() => css.skip(),
                    Ok(p) => {
                        let cert = degeneracy_certificate(n, q, Construction::Css);
                        let ok = p.k == 1
                            && p.d_direct.as_ref().is_none_or(|x| x.exact() == p.d.exact())
                            && cert.as_ref().is_ok_and(|c| {
                                let v = degeneracy_verdict(&p, c);
                                match v.agreement {
                                    Agreement::Agrees => true,
                                    Agreement::NoPrediction => true,
                                    Agreement::Discrepancy | Agreement::Undecided => false,
                                }
                            });
                        css.record(ok, || format!("n={n}: {} purity {} {:?}", p.label(), p.purity, p.degenerate));
                        if let Ok(c) = &cert {
                            if c.purity_bound.is_some() && degeneracy_verdict(&p, c).agreement == Agreement::Agrees {
                                css.record(p.degenerate == Degenerate::Yes, || {
                                    format!("n={n}: predicted degenerate, computed {:?}", p.degenerate)
                                });
                            }
                        }
                    }
                    Err(StabilizerError::Distance(DistanceError::BudgetExceeded { .. })) => css.skip(),
                    Err(e) => css.record(false, || format!("n={n}: {e}")),
                },
                Ok(None) => css.record(false, || format!("n={n}: q is a square but no splitting")),
                Err(e) => css.record(false, || format!("n={n}: {e}")),
            }
        }

        if n <= DUAL_SUITE_MAX_N {
            match all_defining_sets(&ctx, q) {
                Some(sets) => {
                    for t in sets {
                        let ok = ctx
                            .code(&t)
                            .and_then(|c| euclidean_dual(&c))
                            .is_ok_and(|d| d.defining_set() == &dual_defining_set(&t));
                        duals.record(ok, || format!("n={n} T={t}"));
                    }
                }
                None => duals.skip(),
            }
        }

        if n <= EQUIVALENCE_SUITE_MAX_N {
            if let Some(sets) = all_defining_sets(&ctx, q) {
                let reps = unit_class_representatives(n, q);
                for t in sets {
                    let Ok(c) = ctx.code(&t) else { continue };
                    if (q as u128).pow(c.k() as u32) > EQUIVALENCE_SUITE_MAX_CODEWORDS as u128 {
                        equivalence.skip();
                        continue;
                    }
                    let Ok(h) = weight_distribution(&c, budget) else {
                        equivalence.skip();
                        continue;
                    };
                    for &a in &reps {
                        let ok = code_under_mu(&c, a)
                            .ok()
                            .and_then(|img| weight_distribution(&img, budget).ok())
                            .is_some_and(|h2| h2 == h);
                        equivalence.record(ok, || format!("n={n} T={t} a={a}"));
                    }
                }
            }
        }

        if ord_mod(n as u64, q).is_ok_and(|t| t % 2 == 1) {
            let a = splitting_by(n, q * q, n as u64 - 1);
            let b = hermitian_splitting(n, q);
            let ok = matches!((&a, &b), (Ok(Some(x)), Ok(Some(y))) if x.same_partition(y));
            lemma6.record(ok, || format!("n={n}: mu_-1 {a:?} vs mu_-q {b:?}"));
        }

        if n <= HERMITIAN_SUITE_MAX_N {
            if let Some(f2) = &field2 {
                if let Ok(ctx2) = CyclotomicContext::new(n, f2.clone()) {
                    match all_defining_sets(&ctx2, q * q) {
                        Some(sets) => {
                            for t in sets {
                                let ok = ctx2
                                    .code(&t)
                                    .and_then(|c| hermitian_dual(&c))
                                    .is_ok_and(|h| Ok(h.defining_set().clone()) == hermitian_dual_defining_set(&t));
                                herm.record(ok, || format!("n={n} T={t}"));
                            }
                        }
                        None => herm.skip(),
                    }
                }
            }
        }
    }
    vec![existence, equality, bounds, duals, equivalence, lemma6, herm, css]
}
