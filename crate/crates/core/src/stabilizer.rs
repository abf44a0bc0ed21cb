//! Quantum stabilizer parameters from duadic quartets.
//!
//! Only parameters and their classical witnesses are computed; the quantum
//! code itself is never materialized. "Pure to d'" is reported as the exact
//! minimum nonzero weight of the classical codes generating the stabilizer,
//! and a code is degenerate when that weight is strictly below `d`.

use crate::cyclic::{euclidean_dual, hermitian_dual, hermitian_dual_defining_set, CyclicError};
use crate::distance::{
    min_odd_like_weight, min_weight, min_weight_diffset_syndrome, Budget, DistanceError, DistanceResult,
};
use crate::duadic::{
    check_square_root_bound, splitting_by, BoundReport, Construction, DegeneracyCertificate, DuadicError,
    DuadicQuartet, Splitting,
};
use crate::galois::exact_sqrt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest length at which the matrix-dual cross-checks run.
pub const MATRIX_CHECK_MAX_N: u32 = 31;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StabilizerError {
    #[error(transparent)]
    Duadic(#[from] DuadicError),
    #[error(transparent)]
    Cyclic(#[from] CyclicError),
    #[error(transparent)]
    Distance(#[from] DistanceError),
    #[error("square-root bound violated: {0:?}")]
    BoundViolated(Vec<&'static str>),
    #[error("distance paths disagree: {0}")]
    PathMismatch(String),
    #[error("Hermitian construction refused: {0}")]
    HermitianRefused(String),
    #[error("quartet is over GF({field}), expected GF({expected})")]
    WrongField { field: u64, expected: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Degenerate {
    Yes,
    No,
    Undecided,
}

/// Parameters `[[n, k, d]]_q` of a duadic stabilizer code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilizerParams {
    pub n: u32,
    pub k: u32,
    /// Base field order of the quantum code.
    pub q: u64,
    pub construction: Construction,
    pub splitting_id: String,
    /// Minimum odd-like weight of `D0`.
    pub d: DistanceResult,
    /// Minimum odd-like weight of `D1`, which must agree with `d`.
    pub d_cross_check: DistanceResult,
    /// `min wt((D0 \ C0) u (C0^perp \ D0^perp))` from explicit duals; CSS at
    /// small n only.
    pub d_direct: Option<DistanceResult>,
    pub purity: DistanceResult,
    pub degenerate: Degenerate,
    pub bounds: BoundReport,
    /// Matrix confirmation that the even-like code's Hermitian dual is `D0`.
    pub hermitian_dual_matrix_checked: Option<bool>,
    pub notes: Vec<String>,
}

impl StabilizerParams {
    pub fn is_exact(&self) -> bool {
        self.d.is_exact() && self.purity.is_exact()
    }

    /// `[[n,k,d]]_q` with the distance as a value or an interval.
    pub fn label(&self) -> String {
        format!("[[{},{},{}]]_{}", self.n, self.k, self.d, self.q)
    }
}

fn degeneracy(d: &DistanceResult, purity: &DistanceResult) -> Degenerate {
    match (d.exact(), purity.exact()) {
        (Some(d), Some(p)) if p < d => Degenerate::Yes,
        (Some(_), Some(_)) => Degenerate::No,
        _ => Degenerate::Undecided,
    }
}

fn budget_note(name: &str, r: &DistanceResult, budget: &Budget) -> Option<String> {
    (!r.is_exact()).then(|| {
        format!(
            "{name}: enumeration budget {} exceeded; support search exhausted weights below {} within budget {}",
            budget.enumeration, r.lo, budget.support
        )
    })
}

fn odd_like_pair(
    quartet: &DuadicQuartet,
    budget: &Budget,
) -> Result<(DistanceResult, DistanceResult, BoundReport), StabilizerError> {
    let d0 = min_odd_like_weight(quartet.d0(), budget)?;
    let d1 = min_odd_like_weight(quartet.d1(), budget)?;
    let bounds = check_square_root_bound(quartet.splitting(), &d0, &d1);
    if bounds.is_violated() {
        return Err(StabilizerError::BoundViolated(bounds.violations()));
    }
    Ok((d0, d1, bounds))
}

/// CSS code from `C0 < D0` over GF(q).
pub fn css_from_quartet(quartet: &DuadicQuartet, budget: &Budget) -> Result<StabilizerParams, StabilizerError> {
    let s = quartet.splitting();
    let n = s.n();
    let (d, d1, bounds) = odd_like_pair(quartet, budget)?;
    let mut notes = Vec::new();

    let c0 = min_weight(quartet.c0(), budget)?;
    let c1 = min_weight(quartet.c1(), budget)?;
    let purity = c0.min_of(&c1);

    let mut d_direct = None;
    if n <= MATRIX_CHECK_MAX_N {
        let c0_perp = euclidean_dual(quartet.c0())?;
        let d0_perp = euclidean_dual(quartet.d0())?;
        let a = min_weight_diffset_syndrome(quartet.d0(), quartet.c0(), budget)?;
        let b = min_weight_diffset_syndrome(&c0_perp, &d0_perp, budget)?;
        let direct = a.min_of(&b);
        if let (Some(x), Some(y)) = (direct.exact(), d.exact()) {
            if x != y {
                return Err(StabilizerError::PathMismatch(format!("direct {x} vs odd-like {y}")));
            }
        }
        let dp = min_weight(&d0_perp, budget)?;
        if let (Some(x), Some(y)) = (dp.exact(), c1.exact()) {
            if x != y {
                return Err(StabilizerError::PathMismatch(format!("wt(D0^perp) {x} vs wt(C1) {y}")));
            }
        }
        d_direct = Some(direct);
    }
    notes.extend(budget_note("d", &d, budget));
    notes.extend(budget_note("purity", &purity, budget));

    Ok(StabilizerParams {
        n,
        k: (quartet.d0().k() - quartet.c0().k()) as u32,
        q: s.q(),
        construction: Construction::Css,
        splitting_id: s.id(),
        degenerate: degeneracy(&d, &purity),
        d,
        d_cross_check: d1,
        d_direct,
        purity,
        bounds,
        hermitian_dual_matrix_checked: None,
        notes,
    })
}

/// The splitting given by `mu_{-q}` over GF(q^2), which the Hermitian
/// construction needs.
pub fn hermitian_splitting(n: u32, q: u64) -> Result<Option<Splitting>, DuadicError> {
    let q2 = q * q;
    let a = (n as u64 - q % n as u64) % n as u64;
    splitting_by(n, q2, a)
}

/// Hermitian code from a quartet over GF(q^2); the result is a code over
/// GF(q). Refused unless `C_i`'s Hermitian dual is `D_i`.
pub fn hermitian_from_quartet(quartet: &DuadicQuartet, budget: &Budget) -> Result<StabilizerParams, StabilizerError> {
    let s = quartet.splitting();
    let n = s.n();
    let q2 = s.q();
    let q = exact_sqrt(q2).ok_or(StabilizerError::WrongField { field: q2, expected: q2 })?;
    for i in 0..2 {
        let dual = hermitian_dual_defining_set(quartet.even_like(i).defining_set())?;
        if &dual != quartet.odd_like(i).defining_set() {
            return Err(StabilizerError::HermitianRefused(format!(
                "the Hermitian dual of C{i} has defining set {dual}, not S{i}; mu_-{q} does not give this splitting"
            )));
        }
    }
    let matrix_checked = if n <= MATRIX_CHECK_MAX_N {
        let ok = hermitian_dual(quartet.c0())? == *quartet.d0();
        if !ok {
            return Err(StabilizerError::HermitianRefused("matrix Hermitian dual of C0 differs from D0".into()));
        }
        Some(true)
    } else {
        None
    };
    let (d, d1, bounds) = odd_like_pair(quartet, budget)?;
    let purity = min_weight(quartet.c0(), budget)?;
    let mut notes = Vec::new();
    notes.extend(budget_note("d", &d, budget));
    notes.extend(budget_note("purity", &purity, budget));
    Ok(StabilizerParams {
        n,
        k: (quartet.d0().k() - quartet.c0().k()) as u32,
        q,
        construction: Construction::Hermitian,
        splitting_id: s.id(),
        degenerate: degeneracy(&d, &purity),
        d,
        d_cross_check: d1,
        d_direct: None,
        purity,
        bounds,
        hermitian_dual_matrix_checked: matrix_checked,
        notes,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Agreement {
    /// Computed purity is at most the predicted bound.
    Agrees,
    /// Computed purity exceeds the predicted bound.
    Discrepancy,
    /// The certificate's hypotheses do not hold.
    NoPrediction,
    /// Purity is an interval that straddles the bound.
    Undecided,
}

/// Reconciliation of a certificate's predicted purity bound with the
/// computed purity. Computed values are never replaced by predictions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegeneracyVerdict {
    pub agreement: Agreement,
    pub predicted_bound: Option<u64>,
    /// Which reading of the hypotheses produced the prediction.
    pub basis: Option<String>,
    pub computed_purity: DistanceResult,
    pub degenerate: Degenerate,
    pub note: String,
}

pub fn degeneracy_verdict(params: &StabilizerParams, cert: &DegeneracyCertificate) -> DegeneracyVerdict {
    let c = &cert.conditions;
    let basis = if c.predicts {
        Some("strict hypotheses (m_i > 2 z_i)".to_string())
    } else if cert.construction == Construction::Css && c.q_residue_all && c.relaxed_multiplicity_all {
        Some("relaxed multiplicity (m_i >= 2 z_i)".to_string())
    } else {
        None
    };
    let purity = params.purity.clone();
    let (agreement, predicted_bound, note) = match (basis.as_ref(), cert.purity_bound) {
        (Some(_), Some(bound)) => {
            let agreement = if purity.hi() <= bound {
                Agreement::Agrees
            } else if purity.lo() > bound {
                Agreement::Discrepancy
            } else {
                Agreement::Undecided
            };
            let note = match agreement {
                Agreement::Agrees => format!("computed purity {purity} <= predicted bound {bound}"),
                Agreement::Discrepancy => format!("computed purity {purity} exceeds predicted bound {bound}; review"),
                _ => format!(
                    "purity interval {purity} does not decide against bound {bound}; {}",
                    params.notes.join("; ")
                ),
            };
            (agreement, Some(bound), note)
        }
        _ => (
            Agreement::NoPrediction,
            None,
            format!("hypotheses unmet; computed degeneracy {:?}", params.degenerate),
        ),
    };
    DegeneracyVerdict {
        agreement,
        predicted_bound,
        basis,
        computed_purity: purity,
        degenerate: params.degenerate,
        note,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::duadic::{build_quartet, degeneracy_certificate, find_splittings};
    use crate::galois::field_of_order;

    fn css(n: u32) -> StabilizerParams {
        let s = splitting_by(n, 2, n as u64 - 1)
            .unwrap()
            .unwrap_or_else(|| find_splittings(n, 2, Some(1)).unwrap().remove(0));
        let quartet = build_quartet(&s, field_of_order(2).unwrap()).unwrap();
        css_from_quartet(&quartet, &Budget::default().with_workers(2)).unwrap()
    }

    #[test]
    fn steane_instance() {
        let p = css(7);
        assert_eq!((p.n, p.k, p.d.exact(), p.purity.exact()), (7, 1, Some(3), Some(4)));
        assert_eq!(p.degenerate, Degenerate::No);
        assert_eq!(p.d_direct.as_ref().unwrap().exact(), Some(3));
        assert_eq!(p.label(), "[[7,1,3]]_2");
        let v = degeneracy_verdict(&p, &degeneracy_certificate(7, 2, Construction::Css).unwrap());
        assert_eq!(v.agreement, Agreement::NoPrediction);
    }

    #[test]
    fn swap_symmetry() {
        let s = find_splittings(17, 2, Some(1)).unwrap().remove(0);
        let quartet = build_quartet(&s, field_of_order(2).unwrap()).unwrap();
        let b = Budget::default().with_workers(2);
        let a = css_from_quartet(&quartet, &b).unwrap();
        let c = css_from_quartet(&quartet.swapped(), &b).unwrap();
        assert_eq!((a.d.exact(), a.purity.exact()), (Some(5), Some(6)));
        assert_eq!((a.d.exact(), a.purity.exact(), a.splitting_id.clone()), (c.d.exact(), c.purity.exact(), c.splitting_id));
    }

    #[test]
    fn hermitian_seven() {
        let s = hermitian_splitting(7, 2).unwrap().unwrap();
        let quartet = build_quartet(&s, field_of_order(4).unwrap()).unwrap();
        let p = hermitian_from_quartet(&quartet, &Budget::default().with_workers(2)).unwrap();
        assert_eq!((p.n, p.k, p.q, p.d.exact()), (7, 1, 2, Some(3)));
        assert_eq!(p.hermitian_dual_matrix_checked, Some(true));
        assert!(quartet.c0().is_subcode_of(&hermitian_dual(quartet.c0()).unwrap()));
    }

    #[test]
    fn hermitian_refused_without_mu_minus_q() {
        // Over GF(4), n = 9: mu_2 splits but mu_{-2} fixes the coset of 1.
        assert!(hermitian_splitting(9, 2).unwrap().is_none());
        let s = splitting_by(9, 4, 2).unwrap().unwrap();
        assert!(!s.is_given_by(7));
        let quartet = build_quartet(&s, field_of_order(4).unwrap()).unwrap();
        let r = hermitian_from_quartet(&quartet, &Budget::default());
        assert!(matches!(r, Err(StabilizerError::HermitianRefused(_))), "{r:?}");
    }
}
