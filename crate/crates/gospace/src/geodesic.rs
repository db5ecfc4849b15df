//! Geodesic completion machinery: the defect polynomial, the per-vector
//! completion system, membership in the completion variety, and the
//! three-mode verdict (refute, sample, certify) with crown consistency.

use rayon::prelude::*;

use crate::family::complexify;
use crate::linalg::Matrix;
use crate::report::{CrownGoReport, GoReport, OmegaReport, SampleBlock};
use crate::sampling;
use crate::scalar::Scalar;
use crate::space::{Field, ReductiveSpace};

/// A candidate point (xi, alpha, c). The constant c can only be nonzero
/// when xi is a null vector; the constructor enforces that.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuliPoint {
    pub xi: Vec<Scalar>,
    pub alpha: Vec<Scalar>,
    pub c: Scalar,
}

impl ModuliPoint {
    pub fn new(space: &ReductiveSpace, xi: Vec<Scalar>, alpha: Vec<Scalar>, c: Scalar) -> Self {
        assert_eq!(xi.len(), space.dim_m(), "dimension mismatch");
        assert_eq!(alpha.len(), space.dim_h(), "dimension mismatch");
        assert!(
            c.is_zero() || space.metric_eval(&xi, &xi).is_zero(),
            "c must be 0 for non-null xi"
        );
        ModuliPoint { xi, alpha, c }
    }
}

/// The defect <[xi + alpha, zeta]_m, xi> - c<xi, zeta>. A point completes
/// xi to a geodesic generator exactly when this vanishes for every zeta.
pub fn phi(space: &ReductiveSpace, point: &ModuliPoint, zeta: &[Scalar]) -> Scalar {
    assert_eq!(zeta.len(), space.dim_m(), "dimension mismatch");
    let mut full = space.embed_m(&point.xi);
    let alpha_full = space.embed_h(&point.alpha);
    for (slot, v) in full.iter_mut().zip(&alpha_full) {
        *slot += v;
    }
    let bracket_m = space.bracket_m(&full, &space.embed_m(zeta));
    let lead = space.metric_eval(&bracket_m, &point.xi);
    &lead - &(&point.c * &space.metric_eval(&point.xi, zeta))
}

/// True iff phi vanishes against every complement basis vector; linearity
/// in zeta extends that to all of m.
pub fn omega_member(space: &ReductiveSpace, point: &ModuliPoint) -> bool {
    (0..space.dim_m())
        .all(|j| phi(space, point, &crate::space::basis_vec(space.dim_m(), j)).is_zero())
}

/// The linear completion system for a fixed nonzero xi. Unknowns are the
/// isotropy coordinates of alpha, plus c as one trailing unknown when xi is
/// null. One row per complement basis vector zeta_j.
pub fn geodesic_system(space: &ReductiveSpace, xi: &[Scalar]) -> (Matrix, Vec<Scalar>) {
    assert_eq!(xi.len(), space.dim_m(), "dimension mismatch");
    assert!(!crate::linalg::vec_is_zero(xi), "zero xi");
    let lm = space.dim_m();
    let lh = space.dim_h();
    let null_xi = space.metric_eval(xi, xi).is_zero();
    let cols = lh + usize::from(null_xi);
    let xi_full = space.embed_m(xi);
    let mut a = Matrix::zeros(lm, cols);
    let mut b = Vec::with_capacity(lm);
    for j in 0..lm {
        let zeta_full = crate::space::basis_vec(space.dim(), space.complement()[j]);
        for k in 0..lh {
            let hk_full = crate::space::basis_vec(space.dim(), space.isotropy()[k]);
            let v = space.metric_eval(&space.bracket_m(&hk_full, &zeta_full), xi);
            a.set(j, k, v);
        }
        if null_xi {
            let zeta_m = crate::space::basis_vec(lm, j);
            a.set(j, lh, -&space.metric_eval(xi, &zeta_m));
        }
        b.push(-&space.metric_eval(&space.bracket_m(&xi_full, &zeta_full), xi));
    }
    (a, b)
}

/// Solves the completion system; free variables are zeroed, so the result
/// is deterministic. None exactly when the system is inconsistent, which
/// refutes the geodesic-completion property at xi.
pub fn solve_geodesic_vector(space: &ReductiveSpace, xi: &[Scalar]) -> Option<ModuliPoint> {
    let lh = space.dim_h();
    let (a, b) = geodesic_system(space, xi);
    let x = a.solve(&b)?;
    let alpha = x[..lh].to_vec();
    let c = x.get(lh).cloned().unwrap_or_else(Scalar::zero);
    Some(ModuliPoint::new(space, xi.to_vec(), alpha, c))
}

#[derive(Debug, Clone)]
pub struct Refutation {
    pub xi: Vec<Scalar>,
    pub rank_coeff: usize,
    pub rank_aug: usize,
    pub candidate_index: usize,
}

fn candidate(
    space: &ReductiveSpace,
    deterministic: &[Vec<Scalar>],
    seed: u64,
    bound: i64,
    index: usize,
) -> Vec<Scalar> {
    if index < deterministic.len() {
        deterministic[index].clone()
    } else {
        let stream = (index - deterministic.len()) as u64;
        sampling::random_nonzero_vector(
            &mut sampling::rng_for(seed, stream),
            space.dim_m(),
            space.field() == Field::Gaussian,
            bound,
        )
    }
}

/// Searches the deterministic enumeration (basis vectors, pairwise sums and
/// differences, null combinations on gaussian fields) and then `n_random`
/// seeded samples for a vector with no geodesic completion. The candidate
/// order is canonical, so the earliest witness is found regardless of the
/// thread count.
pub fn find_refutation(
    space: &ReductiveSpace,
    n_random: usize,
    seed: u64,
    bound: i64,
) -> (Option<Refutation>, usize) {
    let lm = space.dim_m();
    if lm == 0 {
        return (None, 0);
    }
    let mut deterministic = sampling::enumeration(space);
    let nulls = sampling::null_candidates(space, &deterministic);
    deterministic.extend(nulls);
    let total = deterministic.len() + n_random;
    let witness_index = (0..total).into_par_iter().find_first(|&idx| {
        let xi = candidate(space, &deterministic, seed, bound, idx);
        let (a, b) = geodesic_system(space, &xi);
        a.solve(&b).is_none()
    });
    let refutation = witness_index.map(|idx| {
        let xi = candidate(space, &deterministic, seed, bound, idx);
        let (a, b) = geodesic_system(space, &xi);
        let aug = Matrix::from_fn(a.nrows(), a.ncols() + 1, |r, c| {
            if c == a.ncols() { b[r].clone() } else { a.at(r, c).clone() }
        });
        Refutation {
            xi,
            rank_coeff: a.rank(),
            rank_aug: aug.rank(),
            candidate_index: idx,
        }
    });
    (refutation, total)
}

/// Looks for a matrix L with phi(xi, L xi, zeta_j) = 0 identically in xi
/// with c = 0. Each zeta_j condition is a quadratic form in xi, so the
/// identity is a linear system over the symmetric coefficient positions.
/// The same L certifies the complexified space: the identity holds
/// coefficient by coefficient. Failure here is inconclusive, not a
/// refutation: completions may exist without any linear section.
pub fn certify_go_linear(space: &ReductiveSpace) -> Option<Matrix> {
    let lm = space.dim_m();
    let lh = space.dim_h();
    let dim = space.dim();
    // t[j][a][b] = <[zeta_a, zeta_j]_m, zeta_b>, u[j][k][b] = <[h_k, zeta_j]_m, zeta_b>
    let mut t = vec![vec![vec![Scalar::zero(); lm]; lm]; lm];
    let mut u = vec![vec![vec![Scalar::zero(); lm]; lh]; lm];
    for j in 0..lm {
        let zeta_j = crate::space::basis_vec(dim, space.complement()[j]);
        for a in 0..lm {
            let zeta_a = crate::space::basis_vec(dim, space.complement()[a]);
            let br = space.bracket_m(&zeta_a, &zeta_j);
            for b in 0..lm {
                t[j][a][b] = space.metric_eval(&br, &crate::space::basis_vec(lm, b));
            }
        }
        for k in 0..lh {
            let hk = crate::space::basis_vec(dim, space.isotropy()[k]);
            let br = space.bracket_m(&hk, &zeta_j);
            for b in 0..lm {
                u[j][k][b] = space.metric_eval(&br, &crate::space::basis_vec(lm, b));
            }
        }
    }
    let unknowns = lh * lm;
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for j in 0..lm {
        for a in 0..lm {
            for b in a..lm {
                let mut row = vec![Scalar::zero(); unknowns];
                for k in 0..lh {
                    if a == b {
                        row[k * lm + a] = u[j][k][a].clone();
                    } else {
                        row[k * lm + a] += &u[j][k][b];
                        row[k * lm + b] += &u[j][k][a];
                    }
                }
                let constant = if a == b {
                    t[j][a][a].clone()
                } else {
                    &t[j][a][b] + &t[j][b][a]
                };
                rows.push(row);
                rhs.push(-constant);
            }
        }
    }
    let system = Matrix::from_rows(rows);
    let solution = system.solve(&rhs)?;
    Some(Matrix::from_fn(lh, lm, |k, a| solution[k * lm + a].clone()))
}

/// Re-checks a certificate pointwise: n seeded random xi must all be
/// completed by alpha = L xi with c = 0. Returns the failure count.
pub fn verify_certificate(
    space: &ReductiveSpace,
    l: &Matrix,
    n: usize,
    seed: u64,
    bound: i64,
) -> usize {
    let lm = space.dim_m();
    if lm == 0 {
        return 0;
    }
    let gaussian = space.field() == Field::Gaussian;
    (0..n)
        .filter(|&i| {
            let xi = sampling::random_nonzero_vector(
                &mut sampling::rng_for(seed, i as u64),
                lm,
                gaussian,
                bound,
            );
            let alpha = l.mul_vec(&xi);
            let point = ModuliPoint::new(space, xi, alpha, Scalar::zero());
            !omega_member(space, &point)
        })
        .count()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GoMode {
    Auto,
    Refute,
    Sample,
    Certify,
}

/// The full three-mode verdict. Auto tries certification first, then the
/// refutation search, and otherwise reports sampling consistency. A found
/// certificate is re-verified on the requested number of samples; the
/// failure count lands in the samples block and must be zero.
pub fn go_verdict(
    space: &ReductiveSpace,
    mode: GoMode,
    n_random: usize,
    seed: u64,
    bound: i64,
) -> GoReport {
    let name = space.name().to_string();
    let certified = |l: Matrix| {
        let failed = verify_certificate(space, &l, n_random, seed, bound);
        GoReport {
            space: name.clone(),
            mode: "certified_linear".to_string(),
            witness: None,
            ranks: None,
            samples: SampleBlock { tested: n_random, failed, seed },
            graph_map: Some(matrix_rows(&l)),
        }
    };
    let searched = |n_random: usize| {
        let (refutation, total) = find_refutation(space, n_random, seed, bound);
        match refutation {
            Some(r) => GoReport {
                space: name.clone(),
                mode: "refuted".to_string(),
                witness: Some(r.xi.clone()),
                ranks: Some([r.rank_coeff, r.rank_aug]),
                samples: SampleBlock { tested: r.candidate_index + 1, failed: 1, seed },
                graph_map: None,
            },
            None => GoReport {
                space: name.clone(),
                mode: "sampled_consistent".to_string(),
                witness: None,
                ranks: None,
                samples: SampleBlock { tested: total, failed: 0, seed },
                graph_map: None,
            },
        }
    };
    match mode {
        GoMode::Certify => match certify_go_linear(space) {
            Some(l) => certified(l),
            None => GoReport {
                space: name.clone(),
                mode: "certify_inconclusive".to_string(),
                witness: None,
                ranks: None,
                samples: SampleBlock { tested: 0, failed: 0, seed },
                graph_map: None,
            },
        },
        GoMode::Refute | GoMode::Sample => searched(n_random),
        GoMode::Auto => match certify_go_linear(space) {
            Some(l) => certified(l),
            None => searched(n_random),
        },
    }
}

pub(crate) fn matrix_rows(m: &Matrix) -> Vec<Vec<Scalar>> {
    (0..m.nrows()).map(|r| m.row(r).to_vec()).collect()
}

/// Membership in the completion variety must be unchanged when a rational
/// point is read in the complexified space: the defining polynomial has the
/// same coefficients. Samples a mix of members and non-members.
pub fn check_omega_realform(
    space: &ReductiveSpace,
    n: usize,
    seed: u64,
    bound: i64,
) -> Result<OmegaReport, crate::Error> {
    if space.field() != Field::Rational {
        return Err(crate::Error::input(
            "realform membership check needs a rational-field space".to_string(),
        ));
    }
    let crown = complexify(space)?;
    let lm = space.dim_m();
    let mut discrepancies = 0;
    let mut tested = 0;
    if lm > 0 {
        for idx in 0..n {
            let mut rng = sampling::rng_for(seed, idx as u64);
            let xi = sampling::random_nonzero_vector(&mut rng, lm, false, bound);
            let point = if idx % 2 == 0 {
                match solve_geodesic_vector(space, &xi) {
                    Some(p) => p,
                    None => random_point(space, xi, &mut rng, bound),
                }
            } else {
                random_point(space, xi, &mut rng, bound)
            };
            let member_real = omega_member(space, &point);
            let member_crown = omega_member(&crown, &point);
            if member_real != member_crown {
                discrepancies += 1;
            }
            tested += 1;
        }
    }
    Ok(OmegaReport {
        space: space.name().to_string(),
        samples: crate::report::OmegaSamples { tested, seed },
        discrepancies,
    })
}

fn random_point(
    space: &ReductiveSpace,
    xi: Vec<Scalar>,
    rng: &mut rand_chacha::ChaCha8Rng,
    bound: i64,
) -> ModuliPoint {
    let alpha = sampling::random_vector(rng, space.dim_h(), false, bound);
    let c = if space.metric_eval(&xi, &xi).is_zero() {
        sampling::random_scalar(rng, false, bound)
    } else {
        Scalar::zero()
    };
    ModuliPoint::new(space, xi, alpha, c)
}

/// Runs the auto verdict on the space and its complexification. A hard
/// violation is one side refuted while the other is certified; refuted
/// versus sampled-consistent is only a sampling escape, reported as a note.
pub fn check_crown_go_consistency(
    space: &ReductiveSpace,
    n_random: usize,
    seed: u64,
    bound: i64,
) -> Result<CrownGoReport, crate::Error> {
    let crown = complexify(space)?;
    let here = go_verdict(space, GoMode::Auto, n_random, seed, bound);
    let there = go_verdict(&crown, GoMode::Auto, n_random, seed, bound);
    let pair = (here.mode.as_str(), there.mode.as_str());
    let violation = matches!(
        pair,
        ("refuted", "certified_linear") | ("certified_linear", "refuted")
    );
    let mut notes = Vec::new();
    if matches!(pair, ("refuted", "sampled_consistent") | ("sampled_consistent", "refuted")) {
        notes.push("sampling escape: one side refuted, the other only sampled".to_string());
    }
    Ok(CrownGoReport {
        space: space.name().to_string(),
        space_mode: here.mode,
        crown_mode: there.mode,
        violation,
        notes,
    })
}
