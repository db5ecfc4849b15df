//! Isotropy invariants in the symmetric algebra of the complement.
//!
//! Each isotropy generator acts on polynomials in the complement coordinates
//! as a derivation; degree-d invariants are the joint kernel of those
//! actions restricted to the degree-d monomial span.

use std::collections::BTreeMap;

use crate::linalg::Matrix;
use crate::report::InvariantsReport;
use crate::scalar::Scalar;
use crate::space::{basis_vec, Field, ReductiveSpace};

/// Polynomial in the complement coordinates, homogeneous of the given degree.
/// Keys are exponent vectors of length dim_m.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymPoly {
    pub degree: usize,
    pub coeffs: BTreeMap<Vec<u32>, Scalar>,
}

/// Degree-d exponent vectors in descending lexicographic order, so for two
/// variables and degree 2 the order is x^2, xy, y^2.
pub fn monomials(vars: usize, degree: u32) -> Vec<Vec<u32>> {
    if vars == 0 {
        return if degree == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    let mut current = vec![0u32; vars];
    fill(&mut out, &mut current, 0, degree);
    out
}

fn fill(out: &mut Vec<Vec<u32>>, current: &mut Vec<u32>, pos: usize, remaining: u32) {
    if pos + 1 == current.len() {
        current[pos] = remaining;
        out.push(current.clone());
        return;
    }
    for e in (0..=remaining).rev() {
        current[pos] = e;
        fill(out, current, pos + 1, remaining - e);
    }
}

/// Matrix of the derivation induced by the isotropy generator at position
/// h_pos, acting on the degree-d monomial basis. Columns are images.
pub fn derivation_matrix(space: &ReductiveSpace, h_pos: usize, degree: u32) -> Matrix {
    let lm = space.dim_m();
    let basis = monomials(lm, degree);
    let index: BTreeMap<&[u32], usize> = basis
        .iter()
        .enumerate()
        .map(|(i, m)| (m.as_slice(), i))
        .collect();
    let h_full = basis_vec(space.dim(), space.isotropy()[h_pos]);
    // base[a]: m-coordinates of the action on the a-th complement vector.
    let base: Vec<Vec<Scalar>> = (0..lm)
        .map(|a| {
            let zeta_full = basis_vec(space.dim(), space.complement()[a]);
            space.bracket_m(&h_full, &zeta_full)
        })
        .collect();
    let n = basis.len();
    let mut mat = Matrix::zeros(n, n);
    for (col, mono) in basis.iter().enumerate() {
        for a in 0..lm {
            if mono[a] == 0 {
                continue;
            }
            let factor = Scalar::from_int(i64::from(mono[a]));
            for b in 0..lm {
                let coeff = &base[a][b];
                if coeff.is_zero() {
                    continue;
                }
                let mut image = mono.clone();
                image[a] -= 1;
                image[b] += 1;
                let row = index[image.as_slice()];
                let updated = mat.at(row, col) + &(&factor * coeff);
                mat.set(row, col, updated);
            }
        }
    }
    mat
}

/// Basis of degree-d invariants, echelon-normalized over the monomial order.
pub fn invariant_basis(space: &ReductiveSpace, degree: u32) -> Vec<SymPoly> {
    let basis = monomials(space.dim_m(), degree);
    let n = basis.len();
    let lh = space.dim_h();
    let mut stacked = Matrix::zeros(lh * n, n);
    for j in 0..lh {
        let d = derivation_matrix(space, j, degree);
        for r in 0..n {
            for c in 0..n {
                stacked.set(j * n + r, c, d.at(r, c).clone());
            }
        }
    }
    stacked
        .kernel_basis()
        .into_iter()
        .map(|v| {
            let coeffs = basis
                .iter()
                .zip(v)
                .filter(|(_, s)| !s.is_zero())
                .map(|(m, s)| (m.clone(), s))
                .collect();
            SymPoly {
                degree: degree as usize,
                coeffs,
            }
        })
        .collect()
}

pub fn invariant_dims(space: &ReductiveSpace, max_degree: usize) -> Vec<usize> {
    (0..=max_degree)
        .map(|d| invariant_basis(space, d as u32).len())
        .collect()
}

/// Dimension table up to the cap. Rational spaces also get the table over
/// their complexification; the dimensions agree because the defining linear
/// systems have rational coefficients either way.
pub fn invariants_report(space: &ReductiveSpace, max_degree: usize) -> InvariantsReport {
    let dims = invariant_dims(space, max_degree);
    let (crown_dims, consistent) = match space.field() {
        Field::Rational => {
            let crown = crate::family::complexify(space)
                .expect("rational space always complexifies");
            let cd = invariant_dims(&crown, max_degree);
            let ok = cd == dims;
            (Some(cd), Some(ok))
        }
        Field::Gaussian => (None, None),
    };
    InvariantsReport {
        space: space.name().to_string(),
        max_degree,
        dims,
        crown_dims,
        consistent,
    }
}
