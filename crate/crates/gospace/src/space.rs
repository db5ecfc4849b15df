//! The Lie-algebra model of a reductive homogeneous space: structure
//! constants, the splitting into isotropy and complement, the invariant
//! metric on the complement, and exact validation of all of it.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::linalg::Matrix;
use crate::scalar::Scalar;
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Field {
    Rational,
    Gaussian,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TagValue {
    True,
    False,
    Unknown,
}

impl Serialize for TagValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            TagValue::True => serializer.serialize_bool(true),
            TagValue::False => serializer.serialize_bool(false),
            TagValue::Unknown => serializer.serialize_str("unknown"),
        }
    }
}

impl<'de> Deserialize<'de> for TagValue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Bool(bool),
            Text(String),
        }
        match Repr::deserialize(deserializer)? {
            Repr::Bool(true) => Ok(TagValue::True),
            Repr::Bool(false) => Ok(TagValue::False),
            Repr::Text(t) if t == "unknown" => Ok(TagValue::Unknown),
            Repr::Text(t) => Err(serde::de::Error::custom(format!(
                "tag value must be true, false, or \"unknown\", got {t:?}"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Tag {
    pub value: TagValue,
    pub source: String,
}

/// Metadata keys the audit understands. Anything else in `tags` is rejected
/// at load time.
pub const KNOWN_TAGS: [&str; 6] = [
    "symmetric",
    "weakly_symmetric",
    "naturally_reductive",
    "geodesic_orbit",
    "commutative",
    "datri",
];

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub coeffs: BTreeMap<String, Scalar>,
}

/// On-disk form of a space. All scalars are grammar strings.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceFile {
    pub name: String,
    pub field: Field,
    pub dimension: usize,
    pub basis: Vec<String>,
    pub brackets: Vec<BracketEntry>,
    pub isotropy: Vec<usize>,
    pub metric: Vec<Vec<Scalar>>,
    #[serde(default)]
    pub tags: BTreeMap<String, Tag>,
}

impl SpaceFile {
    pub fn read(path: &Path) -> Result<Self, Error> {
        let text = std::fs::read_to_string(path)?;
        Ok(serde_json::from_str(&text)?)
    }
}

#[derive(Debug, Clone)]
pub struct ReductiveSpace {
    pub(crate) name: String,
    pub(crate) field: Field,
    pub(crate) dim: usize,
    pub(crate) labels: Vec<String>,
    /// Full structure tensor: tensor[i][j] = coordinates of [e_i, e_j].
    /// Filled antisymmetrically from the i < j input entries.
    pub(crate) tensor: Vec<Vec<Vec<Scalar>>>,
    pub(crate) isotropy: Vec<usize>,
    pub(crate) complement: Vec<usize>,
    pub(crate) metric: Matrix,
    pub(crate) tags: BTreeMap<String, Tag>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationFailure {
    pub check: String,
    pub witness: Vec<usize>,
    pub message: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ValidationReport {
    pub space: String,
    pub valid: bool,
    pub failures: Vec<ValidationFailure>,
}

impl ReductiveSpace {
    pub fn from_file(file: &SpaceFile) -> Result<Self, Error> {
        let dim = file.dimension;
        if file.basis.len() != dim {
            return Err(Error::input(format!(
                "dimension is {dim} but basis lists {} labels",
                file.basis.len()
            )));
        }
        {
            let mut seen = std::collections::BTreeSet::new();
            for label in &file.basis {
                if !seen.insert(label) {
                    return Err(Error::input(format!("duplicate basis label {label:?}")));
                }
            }
        }
        let mut tensor = vec![vec![vec![Scalar::zero(); dim]; dim]; dim];
        let mut seen_pairs = std::collections::BTreeSet::new();
        for entry in &file.brackets {
            if entry.i >= entry.j {
                return Err(Error::input(format!(
                    "bracket entry ({}, {}) must have i < j",
                    entry.i, entry.j
                )));
            }
            if entry.j >= dim {
                return Err(Error::input(format!(
                    "bracket entry ({}, {}) is out of range for dimension {dim}",
                    entry.i, entry.j
                )));
            }
            if !seen_pairs.insert((entry.i, entry.j)) {
                return Err(Error::input(format!(
                    "duplicate bracket entry ({}, {})",
                    entry.i, entry.j
                )));
            }
            for (key, value) in &entry.coeffs {
                let k: usize = key
                    .parse()
                    .map_err(|_| Error::input(format!("bracket coefficient key {key:?} is not an index")))?;
                if k >= dim {
                    return Err(Error::input(format!(
                        "bracket coefficient index {k} is out of range for dimension {dim}"
                    )));
                }
                tensor[entry.i][entry.j][k] = value.clone();
                tensor[entry.j][entry.i][k] = -value;
            }
        }
        if file.isotropy.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::input(
                "isotropy indices must be strictly increasing".to_string(),
            ));
        }
        if let Some(&outside) = file.isotropy.iter().find(|&&k| k >= dim) {
            return Err(Error::input(format!(
                "isotropy index {outside} is out of range for dimension {dim}"
            )));
        }
        let complement: Vec<usize> = (0..dim).filter(|k| !file.isotropy.contains(k)).collect();
        let lm = complement.len();
        if file.metric.len() != lm || file.metric.iter().any(|row| row.len() != lm) {
            return Err(Error::input(format!(
                "metric must be {lm}x{lm} over the complement basis"
            )));
        }
        let metric = Matrix::from_fn(lm, lm, |r, c| file.metric[r][c].clone());
        for key in file.tags.keys() {
            if !KNOWN_TAGS.contains(&key.as_str()) {
                return Err(Error::input(format!("unknown tag {key:?}")));
            }
        }
        Ok(ReductiveSpace {
            name: file.name.clone(),
            field: file.field,
            dim,
            labels: file.basis.clone(),
            tensor,
            isotropy: file.isotropy.clone(),
            complement,
            metric,
            tags: file.tags.clone(),
        })
    }

    pub fn load(path: &Path) -> Result<Self, Error> {
        Self::from_file(&SpaceFile::read(path)?)
    }

    pub fn to_file(&self) -> SpaceFile {
        let mut brackets = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let coeffs: BTreeMap<String, Scalar> = self.tensor[i][j]
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(k, v)| (k.to_string(), v.clone()))
                    .collect();
                if !coeffs.is_empty() {
                    brackets.push(BracketEntry { i, j, coeffs });
                }
            }
        }
        SpaceFile {
            name: self.name.clone(),
            field: self.field,
            dimension: self.dim,
            basis: self.labels.clone(),
            brackets,
            isotropy: self.isotropy.clone(),
            metric: (0..self.dim_m())
                .map(|r| (0..self.dim_m()).map(|c| self.metric.at(r, c).clone()).collect())
                .collect(),
            tags: self.tags.clone(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn dim_m(&self) -> usize {
        self.complement.len()
    }

    pub fn dim_h(&self) -> usize {
        self.isotropy.len()
    }

    pub fn isotropy(&self) -> &[usize] {
        &self.isotropy
    }

    pub fn complement(&self) -> &[usize] {
        &self.complement
    }

    pub fn label(&self, full_index: usize) -> &str {
        &self.labels[full_index]
    }

    pub fn metric(&self) -> &Matrix {
        &self.metric
    }

    pub fn tags(&self) -> &BTreeMap<String, Tag> {
        &self.tags
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Scalar] {
        &self.tensor[i][j]
    }

    /// [x, y] in full coordinates.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(x.len(), self.dim, "dimension mismatch");
        assert_eq!(y.len(), self.dim, "dimension mismatch");
        let mut out = vec![Scalar::zero(); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if i == j || y[j].is_zero() {
                    continue;
                }
                let weight = &x[i] * &y[j];
                for (k, c) in self.tensor[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &(c * &weight);
                    }
                }
            }
        }
        out
    }

    /// Restriction of full coordinates to the complement positions.
    pub fn project_m(&self, full: &[Scalar]) -> Vec<Scalar> {
        self.complement.iter().map(|&k| full[k].clone()).collect()
    }

    /// Restriction of full coordinates to the isotropy positions.
    pub fn project_h(&self, full: &[Scalar]) -> Vec<Scalar> {
        self.isotropy.iter().map(|&k| full[k].clone()).collect()
    }

    pub fn embed_m(&self, mv: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(mv.len(), self.dim_m(), "dimension mismatch");
        let mut full = vec![Scalar::zero(); self.dim];
        for (pos, &k) in self.complement.iter().enumerate() {
            full[k] = mv[pos].clone();
        }
        full
    }

    pub fn embed_h(&self, hv: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(hv.len(), self.dim_h(), "dimension mismatch");
        let mut full = vec![Scalar::zero(); self.dim];
        for (pos, &k) in self.isotropy.iter().enumerate() {
            full[k] = hv[pos].clone();
        }
        full
    }

    /// [x, y]_m for full-coordinate inputs.
    pub fn bracket_m(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.project_m(&self.bracket(x, y))
    }

    /// The inner product on the complement: xiᵀ Q zeta, complex bilinear
    /// over the gaussian field.
    pub fn metric_eval(&self, xi: &[Scalar], zeta: &[Scalar]) -> Scalar {
        assert_eq!(xi.len(), self.dim_m(), "dimension mismatch");
        assert_eq!(zeta.len(), self.dim_m(), "dimension mismatch");
        let mut acc = Scalar::zero();
        for a in 0..self.dim_m() {
            if xi[a].is_zero() {
                continue;
            }
            for b in 0..self.dim_m() {
                if !zeta[b].is_zero() {
                    acc += &(&(&xi[a] * self.metric.at(a, b)) * &zeta[b]);
                }
            }
        }
        acc
    }

    /// Signature of the metric. Complex bilinear forms have no signature;
    /// a gaussian-field space of complex dimension n reports (n, n), the
    /// split signature of the underlying real form family.
    pub fn signature(&self) -> (usize, usize) {
        match self.field {
            Field::Rational => self.metric.signature(),
            Field::Gaussian => (self.dim_m(), self.dim_m()),
        }
    }

    /// [m, m] ⊆ h test. The witness is the first complement pair (by
    /// position) whose bracket has a nonzero complement component, given as
    /// full basis indices.
    pub fn is_symmetric_pair(&self) -> (bool, Option<(usize, usize)>) {
        for a in 0..self.dim_m() {
            for b in a + 1..self.dim_m() {
                let full = self.bracket_basis(self.complement[a], self.complement[b]);
                if self.complement.iter().any(|&k| !full[k].is_zero()) {
                    return (false, Some((self.complement[a], self.complement[b])));
                }
            }
        }
        (true, None)
    }

    /// Checks every structural identity exactly. Bracket witnesses are full
    /// basis indices; metric witnesses are positions in the metric matrix.
    pub fn validate(&self) -> ValidationReport {
        let mut failures = Vec::new();
        let n = self.dim;

        if self.field == Field::Rational {
            'realness: for i in 0..n {
                for j in i + 1..n {
                    for k in 0..n {
                        if !self.tensor[i][j][k].is_real() {
                            failures.push(ValidationFailure {
                                check: "rational_field".to_string(),
                                witness: vec![i, j, k],
                                message: format!(
                                    "structure constant c({i},{j},{k}) = {} is not rational",
                                    self.tensor[i][j][k]
                                ),
                            });
                            break 'realness;
                        }
                    }
                }
            }
            'metric_realness: for a in 0..self.dim_m() {
                for b in 0..self.dim_m() {
                    if !self.metric.at(a, b).is_real() {
                        failures.push(ValidationFailure {
                            check: "rational_field".to_string(),
                            witness: vec![a, b],
                            message: format!(
                                "metric entry ({a},{b}) = {} is not rational",
                                self.metric.at(a, b)
                            ),
                        });
                        break 'metric_realness;
                    }
                }
            }
        }

        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let mut acc = self.bracket(self.bracket_basis(i, j), &basis_vec(n, k));
                    let t2 = self.bracket(self.bracket_basis(j, k), &basis_vec(n, i));
                    let t3 = self.bracket(self.bracket_basis(k, i), &basis_vec(n, j));
                    for idx in 0..n {
                        acc[idx] += &t2[idx];
                        acc[idx] += &t3[idx];
                    }
                    if acc.iter().any(|v| !v.is_zero()) {
                        failures.push(ValidationFailure {
                            check: "jacobi".to_string(),
                            witness: vec![i, j, k],
                            message: format!(
                                "jacobi identity fails on ({}, {}, {})",
                                self.labels[i], self.labels[j], self.labels[k]
                            ),
                        });
                    }
                }
            }
        }

        for (p, &a) in self.isotropy.iter().enumerate() {
            for &b in &self.isotropy[p + 1..] {
                let full = self.bracket_basis(a, b);
                if self.complement.iter().any(|&k| !full[k].is_zero()) {
                    failures.push(ValidationFailure {
                        check: "isotropy_subalgebra".to_string(),
                        witness: vec![a, b],
                        message: format!(
                            "[{}, {}] leaves the isotropy subalgebra",
                            self.labels[a], self.labels[b]
                        ),
                    });
                }
            }
        }

        for &a in &self.isotropy {
            for &b in &self.complement {
                let full = self.bracket_basis(a, b);
                if self.isotropy.iter().any(|&k| !full[k].is_zero()) {
                    failures.push(ValidationFailure {
                        check: "reductive_complement".to_string(),
                        witness: vec![a, b],
                        message: format!(
                            "[{}, {}] leaves the complement",
                            self.labels[a], self.labels[b]
                        ),
                    });
                }
            }
        }

        for a in 0..self.dim_m() {
            for b in a + 1..self.dim_m() {
                if self.metric.at(a, b) != self.metric.at(b, a) {
                    failures.push(ValidationFailure {
                        check: "metric_symmetric".to_string(),
                        witness: vec![a, b],
                        message: format!("metric entries ({a},{b}) and ({b},{a}) differ"),
                    });
                }
            }
        }

        if self.metric.rank() != self.dim_m() {
            failures.push(ValidationFailure {
                check: "metric_nondegenerate".to_string(),
                witness: vec![],
                message: format!(
                    "metric rank {} is below the complement dimension {}",
                    self.metric.rank(),
                    self.dim_m()
                ),
            });
        }

        for &alpha in &self.isotropy {
            let alpha_full = basis_vec(n, alpha);
            for a in 0..self.dim_m() {
                let za = self.embed_m(&basis_vec(self.dim_m(), a));
                let ad_a = self.bracket_m(&alpha_full, &za);
                for b in a..self.dim_m() {
                    let zb = self.embed_m(&basis_vec(self.dim_m(), b));
                    let ad_b = self.bracket_m(&alpha_full, &zb);
                    let lhs = &self.metric_eval(&ad_a, &basis_vec(self.dim_m(), b))
                        + &self.metric_eval(&basis_vec(self.dim_m(), a), &ad_b);
                    if !lhs.is_zero() {
                        failures.push(ValidationFailure {
                            check: "metric_invariance".to_string(),
                            witness: vec![alpha, self.complement[a], self.complement[b]],
                            message: format!(
                                "metric is not invariant under {} on ({}, {})",
                                self.labels[alpha],
                                self.labels[self.complement[a]],
                                self.labels[self.complement[b]]
                            ),
                        });
                    }
                }
            }
        }

        ValidationReport {
            space: self.name.clone(),
            valid: failures.is_empty(),
            failures,
        }
    }
}

/// Full-coordinate basis vector e_k (also used for complement-coordinate
/// unit vectors; the dim argument decides).
pub(crate) fn basis_vec(dim: usize, k: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); dim];
    v[k] = Scalar::one();
    v
}
