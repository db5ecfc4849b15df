//! Natural reductivity. The space is naturally reductive exactly when
//! psi(xi, eta, zeta) = <[xi,eta]_m, zeta> + <eta, [xi,zeta]_m> vanishes for
//! all xi, eta, zeta in m; by trilinearity it suffices to test basis triples.

use crate::linalg::vec_is_zero;
use crate::report::NatredReport;
use crate::scalar::Scalar;
use crate::space::{basis_vec, Field, ReductiveSpace};

pub fn psi(space: &ReductiveSpace, xi: &[Scalar], eta: &[Scalar], zeta: &[Scalar]) -> Scalar {
    let xi_full = space.embed_m(xi);
    let a = space.bracket_m(&xi_full, &space.embed_m(eta));
    let b = space.bracket_m(&xi_full, &space.embed_m(zeta));
    space.metric_eval(&a, zeta) + space.metric_eval(eta, &b)
}

/// Scans basis triples in lexicographic order and returns the first failing
/// one as complement positions, or None when the space is naturally reductive.
pub fn natred_witness(space: &ReductiveSpace) -> Option<[usize; 3]> {
    let lm = space.dim_m();
    for i in 0..lm {
        let xi = basis_vec(lm, i);
        for j in 0..lm {
            let eta = basis_vec(lm, j);
            for k in 0..lm {
                let zeta = basis_vec(lm, k);
                if !psi(space, &xi, &eta, &zeta).is_zero() {
                    return Some([i, j, k]);
                }
            }
        }
    }
    None
}

pub fn is_naturally_reductive(space: &ReductiveSpace) -> bool {
    natred_witness(space).is_none()
}

/// Full report. Rational spaces are additionally rerun over their
/// complexification; the two answers must agree because the defining
/// equations have the same coefficients over both fields.
pub fn natred_report(space: &ReductiveSpace) -> NatredReport {
    let witness = natred_witness(space);
    let natred = witness.is_none();
    let (crown_natred, consistent) = match space.field() {
        Field::Rational => {
            let crown = crate::family::complexify(space)
                .expect("rational space always complexifies");
            let c = is_naturally_reductive(&crown);
            (Some(c), Some(c == natred))
        }
        Field::Gaussian => (None, None),
    };
    NatredReport {
        space: space.name().to_string(),
        natred,
        witness,
        crown_natred,
        consistent,
    }
}

/// Audit hook: a naturally reductive space must admit the zero linear
/// certificate, because every inhomogeneous coefficient of the certificate
/// system is a psi value. Returns false only if that implication breaks.
pub fn natred_implies_go_audit(space: &ReductiveSpace) -> bool {
    if !is_naturally_reductive(space) {
        return true;
    }
    match crate::geodesic::certify_go_linear(space) {
        Some(l) => (0..l.nrows()).all(|r| vec_is_zero(l.row(r))),
        None => false,
    }
}
