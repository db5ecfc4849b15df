//! Deterministic candidate enumeration and seeded random vectors. Every
//! random draw is a pure function of (seed, sample index), so parallel and
//! serial runs produce identical reports.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::linalg::{vec_add, vec_is_zero, vec_sub};
use crate::scalar::Scalar;
use crate::space::{basis_vec, Field, ReductiveSpace};

/// The deterministic prefix tested before any random sampling: every
/// complement basis vector, then pairwise sums and pairwise differences.
/// Cheap refutation witnesses live here, independent of any seed.
pub fn enumeration(space: &ReductiveSpace) -> Vec<Vec<Scalar>> {
    let lm = space.dim_m();
    let mut out = Vec::new();
    for a in 0..lm {
        out.push(basis_vec(lm, a));
    }
    for a in 0..lm {
        for b in a + 1..lm {
            out.push(vec_add(&basis_vec(lm, a), &basis_vec(lm, b)));
        }
    }
    for a in 0..lm {
        for b in a + 1..lm {
            out.push(vec_sub(&basis_vec(lm, a), &basis_vec(lm, b)));
        }
    }
    out
}

/// Null vectors v + i*w built from enumeration pairs with matching norms
/// and vanishing cross term, so that the metric square is exactly zero.
/// Only meaningful for gaussian-field spaces; returns empty otherwise.
pub fn null_candidates(space: &ReductiveSpace, enumeration: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    if space.field() != Field::Gaussian {
        return Vec::new();
    }
    let i = Scalar::i();
    let mut out = Vec::new();
    for (a, v) in enumeration.iter().enumerate() {
        for (b, w) in enumeration.iter().enumerate() {
            if a == b {
                continue;
            }
            if space.metric_eval(v, v) == space.metric_eval(w, w)
                && space.metric_eval(v, w).is_zero()
            {
                let xi: Vec<Scalar> = v
                    .iter()
                    .zip(w)
                    .map(|(vc, wc)| vc + &(&i * wc))
                    .collect();
                if !vec_is_zero(&xi) {
                    out.push(xi);
                }
            }
        }
    }
    out
}

/// One generator per (seed, index) pair; parallel iteration over indices
/// cannot perturb any draw.
pub fn rng_for(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn random_coord(rng: &mut ChaCha8Rng, gaussian: bool, bound: i64) -> Scalar {
    let re = rng.random_range(-bound..=bound);
    if gaussian {
        let im = rng.random_range(-bound..=bound);
        Scalar::gaussian_int(re, im)
    } else {
        Scalar::from_int(re)
    }
}

/// Random coordinate vector with integer entries in [-bound, bound]
/// (both parts, in a gaussian field). All-zero draws are redrawn.
pub fn random_nonzero_vector(
    rng: &mut ChaCha8Rng,
    len: usize,
    gaussian: bool,
    bound: i64,
) -> Vec<Scalar> {
    assert!(len > 0, "empty vector cannot be nonzero");
    loop {
        let v: Vec<Scalar> = (0..len).map(|_| random_coord(rng, gaussian, bound)).collect();
        if !vec_is_zero(&v) {
            return v;
        }
    }
}

/// Random vector that may be zero (used for isotropy components).
pub fn random_vector(rng: &mut ChaCha8Rng, len: usize, gaussian: bool, bound: i64) -> Vec<Scalar> {
    (0..len).map(|_| random_coord(rng, gaussian, bound)).collect()
}

pub fn random_scalar(rng: &mut ChaCha8Rng, gaussian: bool, bound: i64) -> Scalar {
    random_coord(rng, gaussian, bound)
}
