//! Real form families: complexification to a shared crown, conjugations,
//! extraction of real members from their fixed sets, whole-family
//! consistency verification, and the tag audit.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;

use crate::geodesic::{go_verdict, GoMode};
use crate::invariants::invariants_report;
use crate::linalg::Matrix;
use crate::natred::natred_report;
use crate::pbw::commutator_report;
use crate::report::{AuditReport, FamilyMemberReport, FamilyReport, GoReport};
use crate::scalar::Scalar;
use crate::space::{basis_vec, BracketEntry, Field, ReductiveSpace, SpaceFile, TagValue};
use crate::Error;

/// Same structure constants and metric entries over the gaussian field. The
/// crown of a crown is rejected.
pub fn complexify(space: &ReductiveSpace) -> Result<ReductiveSpace, Error> {
    if space.field() == Field::Gaussian {
        return Err(Error::input(format!(
            "{} is already over the gaussian field",
            space.name()
        )));
    }
    let mut file = space.to_file();
    file.field = Field::Gaussian;
    file.name = format!("{}-crown", space.name());
    file.tags = BTreeMap::new();
    ReductiveSpace::from_file(&file)
}

/// The anti-linear map v -> matrix * conj(v) on the crown basis.
#[derive(Debug, Clone)]
pub struct Conjugation {
    pub matrix: Matrix,
}

impl Conjugation {
    pub fn new(rows: Vec<Vec<Scalar>>, dim: usize) -> Result<Self, Error> {
        if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
            return Err(Error::input(format!(
                "conjugation matrix must be {dim} x {dim}"
            )));
        }
        Ok(Conjugation {
            matrix: Matrix::from_rows(rows),
        })
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        let conjugated: Vec<Scalar> = v.iter().map(Scalar::conj).collect();
        self.matrix.mul_vec(&conjugated)
    }
}

fn real_part(s: &Scalar) -> Scalar {
    let mut out = Scalar::zero();
    out.re = s.re.clone();
    out
}

fn imag_part(s: &Scalar) -> Scalar {
    let mut out = Scalar::zero();
    out.re = s.im.clone();
    out
}

/// Checks the four conjugation requirements exactly: involutive, bracket
/// automorphism, splitting-preserving, and isometric up to conjugation.
/// Returns one failure string per violated requirement, with a witness.
pub fn validate_conjugation(crown: &ReductiveSpace, sigma: &Conjugation) -> Vec<String> {
    let dim = crown.dim();
    let a = &sigma.matrix;
    let mut failures = Vec::new();

    let conj_a = Matrix::from_fn(dim, dim, |r, c| a.at(r, c).conj());
    if a.mul_mat(&conj_a) != Matrix::identity(dim) {
        failures.push("not involutive: matrix * conj(matrix) is not the identity".to_string());
    }

    if let Some(&j) = crown
        .isotropy()
        .iter()
        .find(|&&j| crown.complement().iter().any(|&r| !a.at(r, j).is_zero()))
    {
        failures.push(format!(
            "isotropy basis vector {j} is not mapped into the isotropy"
        ));
    }
    if let Some(&j) = crown
        .complement()
        .iter()
        .find(|&&j| crown.isotropy().iter().any(|&r| !a.at(r, j).is_zero()))
    {
        failures.push(format!(
            "complement basis vector {j} is not mapped into the complement"
        ));
    }

    'automorphism: for i in 0..dim {
        for j in i + 1..dim {
            let lhs = sigma.apply(crown.bracket_basis(i, j));
            let rhs = crown.bracket(
                &sigma.apply(&basis_vec(dim, i)),
                &sigma.apply(&basis_vec(dim, j)),
            );
            if lhs != rhs {
                failures.push(format!("not a bracket automorphism at basis pair ({i}, {j})"));
                break 'automorphism;
            }
        }
    }

    let lm = crown.dim_m();
    'isometry: for p in 0..lm {
        for q in p..lm {
            let sp = crown.project_m(&sigma.apply(&basis_vec(dim, crown.complement()[p])));
            let sq = crown.project_m(&sigma.apply(&basis_vec(dim, crown.complement()[q])));
            if crown.metric_eval(&sp, &sq) != crown.metric().at(p, q).conj() {
                failures.push(format!("not isometric at complement pair ({p}, {q})"));
                break 'isometry;
            }
        }
    }
    failures
}

/// Fixed vectors of sigma within one block of the splitting, via the real
/// doubling of (sigma - id): with block restriction P + iQ and a fixed
/// vector x + iy, the conditions are (P - I)x + Qy = 0 and Qx - (P + I)y = 0.
/// The echelon kernel over unknowns (x, y) prefers pure-real vectors, then
/// imaginary-led ones; the result is re-sorted by leading crown index with
/// real-led vectors first.
fn fixed_block(
    crown: &ReductiveSpace,
    sigma: &Conjugation,
    block: &[usize],
) -> Result<Vec<Vec<Scalar>>, Error> {
    let n = block.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    let dim = crown.dim();
    let a = &sigma.matrix;
    let one = Scalar::one();
    let mut system = Matrix::zeros(2 * n, 2 * n);
    for r in 0..n {
        for c in 0..n {
            let entry = a.at(block[r], block[c]);
            let p = real_part(entry);
            let q = imag_part(entry);
            let p_minus = if r == c { &p - &one } else { p.clone() };
            let p_plus = if r == c { &p + &one } else { p.clone() };
            system.set(r, c, p_minus);
            system.set(r, n + c, q.clone());
            system.set(n + r, c, q);
            system.set(n + r, n + c, -p_plus);
        }
    }
    let kernel = system.kernel_basis();
    if kernel.len() != n {
        return Err(Error::input(format!(
            "fixed set has real dimension {} on a block of complex dimension {n}",
            kernel.len()
        )));
    }
    let mut vectors: Vec<Vec<Scalar>> = kernel
        .into_iter()
        .map(|v| {
            let mut full = vec![Scalar::zero(); dim];
            for r in 0..n {
                let mut coord = Scalar::zero();
                coord.re = v[r].re.clone();
                coord.im = v[n + r].re.clone();
                full[block[r]] = coord;
            }
            full
        })
        .collect();
    vectors.sort_by_key(|v| {
        let lead = v
            .iter()
            .position(|s| !s.is_zero())
            .expect("kernel vectors are nonzero");
        (lead, real_part(&v[lead]).is_zero())
    });
    Ok(vectors)
}

fn member_label(crown: &ReductiveSpace, v: &[Scalar], position: usize) -> String {
    let support: Vec<usize> = v
        .iter()
        .enumerate()
        .filter(|(_, s)| !s.is_zero())
        .map(|(k, _)| k)
        .collect();
    if let [k] = support[..] {
        if v[k].is_one() {
            return crown.label(k).to_string();
        }
        if v[k] == Scalar::i() {
            return format!("i*{}", crown.label(k));
        }
    }
    format!("f{position}")
}

/// Extracts the real member fixed by a conjugation: fixed basis per block
/// (complement first), structure constants by solving back through the
/// fixed-basis matrix, metric restricted by bilinearity. Members whose
/// structure constants or metric leave the rational field are rejected.
pub fn real_form(
    crown: &ReductiveSpace,
    sigma: &Conjugation,
    name: &str,
) -> Result<ReductiveSpace, Error> {
    if crown.field() != Field::Gaussian {
        return Err(Error::input(
            "real forms are extracted from a gaussian-field crown".to_string(),
        ));
    }
    let failures = validate_conjugation(crown, sigma);
    if !failures.is_empty() {
        return Err(Error::input(format!(
            "invalid conjugation for member {name}: {}",
            failures.join("; ")
        )));
    }
    let dim = crown.dim();
    let lm = crown.dim_m();
    let mut fixed = fixed_block(crown, sigma, crown.complement())?;
    fixed.extend(fixed_block(crown, sigma, crown.isotropy())?);
    let f = Matrix::from_fn(dim, dim, |r, c| fixed[c][r].clone());

    let basis: Vec<String> = fixed
        .iter()
        .enumerate()
        .map(|(t, v)| member_label(crown, v, t))
        .collect();

    let mut brackets = Vec::new();
    for s in 0..dim {
        for t in s + 1..dim {
            let w = crown.bracket(&fixed[s], &fixed[t]);
            let z = f.solve(&w).ok_or_else(|| {
                Error::input(format!("fixed vectors of member {name} are not independent"))
            })?;
            if let Some(k) = z.iter().position(|c| !c.is_real()) {
                return Err(Error::input(format!(
                    "member {name} has a non-rational structure constant at pair ({s}, {t}), coordinate {k}"
                )));
            }
            let coeffs: BTreeMap<String, Scalar> = z
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k.to_string(), c))
                .collect();
            if !coeffs.is_empty() {
                brackets.push(BracketEntry { i: s, j: t, coeffs });
            }
        }
    }

    let mut metric = Vec::with_capacity(lm);
    for p in 0..lm {
        let mp = crown.project_m(&fixed[p]);
        let mut row = Vec::with_capacity(lm);
        for q in 0..lm {
            let mq = crown.project_m(&fixed[q]);
            let value = crown.metric_eval(&mp, &mq);
            if !value.is_real() {
                return Err(Error::input(format!(
                    "member {name} has a non-rational metric entry at ({p}, {q})"
                )));
            }
            row.push(value);
        }
        metric.push(row);
    }

    let file = SpaceFile {
        name: name.to_string(),
        field: Field::Rational,
        dimension: dim,
        basis,
        brackets,
        isotropy: (lm..dim).collect(),
        metric,
        tags: BTreeMap::new(),
    };
    let member = ReductiveSpace::from_file(&file)?;
    let report = member.validate();
    if !report.valid {
        let checks: Vec<&str> = report.failures.iter().map(|f| f.check.as_str()).collect();
        return Err(Error::input(format!(
            "extracted member {name} fails validation: {}",
            checks.join(", ")
        )));
    }
    Ok(member)
}

/// On-disk family: a crown (inline or a path relative to the family file)
/// and members given either by conjugation matrices or as full spaces.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyFile {
    pub name: String,
    pub crown: CrownSource,
    pub members: Vec<MemberSource>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum CrownSource {
    Inline(Box<SpaceFile>),
    Reference(String),
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum MemberSource {
    Conjugation {
        name: String,
        conjugation: Vec<Vec<Scalar>>,
    },
    Direct {
        name: String,
        space: Box<SpaceFile>,
    },
}

#[derive(Debug, Clone)]
pub struct FamilyMember {
    pub name: String,
    pub space: ReductiveSpace,
    /// Supplied as a full space rather than derived from a conjugation;
    /// such members are additionally compared against the crown.
    pub direct: bool,
}

#[derive(Debug, Clone)]
pub struct Family {
    pub name: String,
    pub crown: ReductiveSpace,
    pub members: Vec<FamilyMember>,
}

pub fn load_family(path: &Path) -> Result<Family, Error> {
    let text = std::fs::read_to_string(path)?;
    let file: FamilyFile = serde_json::from_str(&text)?;
    family_from_file(&file, path.parent())
}

pub fn family_from_file(file: &FamilyFile, base: Option<&Path>) -> Result<Family, Error> {
    let crown_file = match &file.crown {
        CrownSource::Inline(sf) => (**sf).clone(),
        CrownSource::Reference(rel) => {
            let path = match base {
                Some(dir) => dir.join(rel),
                None => Path::new(rel).to_path_buf(),
            };
            SpaceFile::read(&path)?
        }
    };
    if crown_file.field != Field::Gaussian {
        return Err(Error::input(format!(
            "family {}: the crown must be over the gaussian field",
            file.name
        )));
    }
    let crown = ReductiveSpace::from_file(&crown_file)?;
    let crown_report = crown.validate();
    if !crown_report.valid {
        let checks: Vec<&str> = crown_report.failures.iter().map(|f| f.check.as_str()).collect();
        return Err(Error::input(format!(
            "family {}: crown fails validation: {}",
            file.name,
            checks.join(", ")
        )));
    }
    let mut members = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for source in &file.members {
        let (name, space, direct) = match source {
            MemberSource::Conjugation { name, conjugation } => {
                let sigma = Conjugation::new(conjugation.clone(), crown.dim())?;
                (name.clone(), real_form(&crown, &sigma, name)?, false)
            }
            MemberSource::Direct { name, space } => {
                let mut sf = (**space).clone();
                sf.name = name.clone();
                let member = ReductiveSpace::from_file(&sf)?;
                if member.field() != Field::Rational {
                    return Err(Error::input(format!(
                        "family {}: direct member {name} must be over the rational field",
                        file.name
                    )));
                }
                let report = member.validate();
                if !report.valid {
                    let checks: Vec<&str> =
                        report.failures.iter().map(|f| f.check.as_str()).collect();
                    return Err(Error::input(format!(
                        "family {}: member {name} fails validation: {}",
                        file.name,
                        checks.join(", ")
                    )));
                }
                (name.clone(), member, true)
            }
        };
        if !seen.insert(name.clone()) {
            return Err(Error::input(format!(
                "family {}: duplicate member name {name}",
                file.name
            )));
        }
        members.push(FamilyMember { name, space, direct });
    }
    Ok(Family {
        name: file.name.clone(),
        crown,
        members,
    })
}

fn member_report(
    space: &ReductiveSpace,
    n_samples: usize,
    seed: u64,
    bound: i64,
    degree_cap: usize,
) -> FamilyMemberReport {
    let (p, q) = space.signature();
    FamilyMemberReport {
        name: space.name().to_string(),
        signature: [p, q],
        go: go_verdict(space, GoMode::Auto, n_samples, seed, bound),
        natred: natred_report(space),
        invariants: invariants_report(space, degree_cap),
        commutators: commutator_report(space, degree_cap),
    }
}

fn same_structure(a: &ReductiveSpace, b: &ReductiveSpace) -> bool {
    a.dim() == b.dim()
        && a.isotropy() == b.isotropy()
        && a.metric() == b.metric()
        && (0..a.dim())
            .all(|i| (0..a.dim()).all(|j| a.bracket_basis(i, j) == b.bracket_basis(i, j)))
}

/// Runs the full per-space analysis on the crown and every member, then
/// cross-checks the family: no refuted-versus-certified split, one natural
/// reductivity answer, one commutator refutation outcome, and direct members
/// must complexify to the crown's exact structure constants.
pub fn family_verify(
    family: &Family,
    n_samples: usize,
    seed: u64,
    bound: i64,
    degree_cap: usize,
) -> FamilyReport {
    let crown = member_report(&family.crown, n_samples, seed, bound, degree_cap);
    let members: Vec<FamilyMemberReport> = family
        .members
        .iter()
        .map(|m| member_report(&m.space, n_samples, seed, bound, degree_cap))
        .collect();

    let mut violations = Vec::new();
    for m in &family.members {
        if !m.direct {
            continue;
        }
        match complexify(&m.space) {
            Ok(c) => {
                if !same_structure(&c, &family.crown) {
                    violations.push(format!(
                        "member {} does not complexify to the family crown",
                        m.name
                    ));
                }
            }
            Err(e) => violations.push(format!("member {} cannot be complexified: {e}", m.name)),
        }
    }

    let all = std::iter::once(&crown).chain(&members);
    let refuted: Vec<&str> = all
        .clone()
        .filter(|r| r.go.mode == "refuted")
        .map(|r| r.name.as_str())
        .collect();
    let certified: Vec<&str> = all
        .clone()
        .filter(|r| r.go.mode == "certified_linear")
        .map(|r| r.name.as_str())
        .collect();
    if !refuted.is_empty() && !certified.is_empty() {
        violations.push(format!(
            "geodesic orbit property refuted on {} but certified on {}",
            refuted.join(", "),
            certified.join(", ")
        ));
    }

    let disagreeing: Vec<&str> = members
        .iter()
        .filter(|r| r.natred.natred != crown.natred.natred)
        .map(|r| r.name.as_str())
        .collect();
    if !disagreeing.is_empty() {
        violations.push(format!(
            "natural reductivity is {} on the crown but not on {}",
            crown.natred.natred,
            disagreeing.join(", ")
        ));
    }

    let crown_commutes = crown.commutators.refutations.is_empty();
    let comm_disagreeing: Vec<&str> = members
        .iter()
        .filter(|r| r.commutators.refutations.is_empty() != crown_commutes)
        .map(|r| r.name.as_str())
        .collect();
    if !comm_disagreeing.is_empty() {
        violations.push(format!(
            "commutator refutation outcome differs from the crown on {}",
            comm_disagreeing.join(", ")
        ));
    }

    FamilyReport {
        family: family.name.clone(),
        crown,
        members,
        violations,
    }
}

/// Tag-versus-computation consistency. Each distinct contradiction is
/// reported once; a refuted verdict against a weakly_symmetric tag is one
/// error, not two.
pub fn inclusion_audit(
    space: &ReductiveSpace,
    go: &GoReport,
    natred: bool,
    symmetric_pair: bool,
) -> AuditReport {
    let tag_true = |key: &str| {
        space
            .tags()
            .get(key)
            .is_some_and(|t| t.value == TagValue::True)
    };
    let refuted = go.mode == "refuted";
    let certified = go.mode == "certified_linear";
    let mut errors = Vec::new();
    if tag_true("weakly_symmetric") && refuted {
        errors.push(
            "tagged weakly_symmetric, but the geodesic orbit property is refuted; weakly \
             symmetric spaces are geodesic orbit spaces"
                .to_string(),
        );
    }
    if tag_true("naturally_reductive") && !natred {
        errors.push("tagged naturally_reductive, but the trilinear identity fails".to_string());
    }
    if tag_true("naturally_reductive") && refuted {
        errors.push(
            "tagged naturally_reductive, but the geodesic orbit property is refuted".to_string(),
        );
    }
    if natred && !certified {
        errors.push(
            "computed naturally reductive, but no linear completion certificate was produced"
                .to_string(),
        );
    }
    if tag_true("symmetric") && !symmetric_pair {
        errors.push(
            "tagged symmetric, but the complement brackets leave the isotropy".to_string(),
        );
    }
    AuditReport {
        space: space.name().to_string(),
        errors,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{heisenberg_wsym, sphere2, su2_diag};
    use crate::report::SampleBlock;
    use crate::space::Tag;

    fn s(t: &str) -> Scalar {
        t.parse().unwrap()
    }

    fn load(file: crate::space::SpaceFile) -> ReductiveSpace {
        ReductiveSpace::from_file(&file).unwrap()
    }

    fn sphere_crown() -> ReductiveSpace {
        complexify(&load(sphere2())).unwrap()
    }

    fn diag(entries: [&str; 3]) -> Vec<Vec<Scalar>> {
        (0..3)
            .map(|r| {
                (0..3)
                    .map(|c| if r == c { s(entries[r]) } else { s("0") })
                    .collect()
            })
            .collect()
    }

    fn conj(entries: [&str; 3]) -> Conjugation {
        Conjugation::new(diag(entries), 3).unwrap()
    }

    #[test]
    fn complexify_keeps_structure_and_reports_split_signature() {
        let sphere = load(sphere2());
        let crown = complexify(&sphere).unwrap();
        assert_eq!(crown.name(), "sphere2-crown");
        assert_eq!(crown.field(), Field::Gaussian);
        assert_eq!(crown.signature(), (2, 2));
        assert!(same_structure(&crown, &complexify(&sphere).unwrap()));
        assert_eq!(crown.bracket_basis(0, 1), load(sphere2()).bracket_basis(0, 1));
        assert!(crown.tags().is_empty());
        assert!(complexify(&crown).is_err());
    }

    #[test]
    fn conjugation_validation() {
        let crown = sphere_crown();
        assert!(validate_conjugation(&crown, &conj(["1", "1", "1"])).is_empty());
        assert!(validate_conjugation(&crown, &conj(["1", "-1", "-1"])).is_empty());
        let bad = validate_conjugation(&crown, &conj(["2", "1", "1"]));
        assert!(bad.iter().any(|f| f.contains("not involutive")), "{bad:?}");
        // i * conj fixes the splitting and the metric but breaks the bracket.
        let twisted = validate_conjugation(&crown, &conj(["i", "i", "1"]));
        assert!(
            twisted.iter().any(|f| f.contains("automorphism")),
            "{twisted:?}"
        );
    }

    #[test]
    fn identity_conjugation_recovers_the_rational_space() {
        let sphere = load(sphere2());
        let crown = complexify(&sphere).unwrap();
        let member = real_form(&crown, &conj(["1", "1", "1"]), "sphere2").unwrap();
        assert!(same_structure(&member, &sphere));
        assert_eq!(member.label(0), "e0");
        assert_eq!(member.label(2), "e2");
        assert_eq!(member.signature(), (2, 0));
    }

    #[test]
    fn round_trip_through_the_crown() {
        for file in [sphere2(), heisenberg_wsym(), su2_diag(1, 2, 3)] {
            let space = load(file);
            let crown = complexify(&space).unwrap();
            let n = space.dim();
            let identity = (0..n)
                .map(|r| {
                    (0..n)
                        .map(|c| if r == c { s("1") } else { s("0") })
                        .collect()
                })
                .collect();
            let sigma = Conjugation::new(identity, n).unwrap();
            let member = real_form(&crown, &sigma, space.name()).unwrap();
            assert!(same_structure(&member, &space), "{}", space.name());
        }
    }

    #[test]
    fn de_sitter_member() {
        let crown = sphere_crown();
        let member = real_form(&crown, &conj(["1", "-1", "-1"]), "ds2").unwrap();
        let labels: Vec<&str> = (0..3).map(|k| member.label(k)).collect();
        assert_eq!(labels, vec!["e0", "i*e1", "i*e2"]);
        assert_eq!(member.isotropy(), &[2]);
        assert_eq!(member.bracket_basis(0, 1), &[s("0"), s("0"), s("1")]);
        assert_eq!(member.bracket_basis(0, 2), &[s("0"), s("-1"), s("0")]);
        assert_eq!(member.bracket_basis(1, 2), &[s("-1"), s("0"), s("0")]);
        assert_eq!(member.metric().at(0, 0), &s("1"));
        assert_eq!(member.metric().at(1, 1), &s("-1"));
        assert_eq!(member.metric().at(0, 1), &s("0"));
        assert_eq!(member.signature(), (1, 1));
    }

    #[test]
    fn hyperbolic_member() {
        let crown = sphere_crown();
        let member = real_form(&crown, &conj(["-1", "-1", "1"]), "h2").unwrap();
        let labels: Vec<&str> = (0..3).map(|k| member.label(k)).collect();
        assert_eq!(labels, vec!["i*e0", "i*e1", "e2"]);
        assert_eq!(member.bracket_basis(0, 1), &[s("0"), s("0"), s("-1")]);
        assert_eq!(member.bracket_basis(0, 2), &[s("0"), s("-1"), s("0")]);
        assert_eq!(member.bracket_basis(1, 2), &[s("1"), s("0"), s("0")]);
        assert_eq!(member.metric().at(0, 0), &s("-1"));
        assert_eq!(member.metric().at(1, 1), &s("-1"));
        assert_eq!(member.signature(), (0, 2));
    }

    #[test]
    fn invalid_conjugations_are_rejected() {
        let crown = sphere_crown();
        assert!(real_form(&crown, &conj(["2", "1", "1"]), "bad").is_err());
        let sphere = load(sphere2());
        assert!(real_form(&sphere, &conj(["1", "1", "1"]), "bad").is_err());
    }

    fn sphere_family_json() -> String {
        let crown = {
            let mut f = sphere2();
            f.field = Field::Gaussian;
            f.name = "sphere2-crown".to_string();
            serde_json::to_string(&f).unwrap()
        };
        format!(
            r#"{{
            "name": "sphere-family",
            "crown": {crown},
            "members": [
                {{"name": "sphere2", "conjugation": [["1","0","0"],["0","1","0"],["0","0","1"]]}},
                {{"name": "ds2", "conjugation": [["1","0","0"],["0","-1","0"],["0","0","-1"]]}},
                {{"name": "h2", "conjugation": [["-1","0","0"],["0","-1","0"],["0","0","1"]]}}
            ]
        }}"#
        )
    }

    #[test]
    fn sphere_family_verifies_clean() {
        let file: FamilyFile = serde_json::from_str(&sphere_family_json()).unwrap();
        let family = family_from_file(&file, None).unwrap();
        assert_eq!(family.members.len(), 3);
        let report = family_verify(&family, 20, 0, 10, 2);
        assert!(report.violations.is_empty(), "{:?}", report.violations);
        assert_eq!(report.crown.go.mode, "certified_linear");
        assert_eq!(report.crown.signature, [2, 2]);
        for member in &report.members {
            assert_eq!(member.go.mode, "certified_linear", "{}", member.name);
            assert!(member.natred.natred, "{}", member.name);
        }
        assert_eq!(report.members[1].signature, [1, 1]);
        assert_eq!(report.members[2].signature, [0, 2]);
    }

    #[test]
    fn direct_member_from_another_family_is_flagged() {
        let file: FamilyFile = serde_json::from_str(&format!(
            r#"{{
            "name": "mixed",
            "crown": {},
            "members": [
                {{"name": "intruder", "space": {}}}
            ]
        }}"#,
            {
                let mut f = sphere2();
                f.field = Field::Gaussian;
                f.name = "sphere2-crown".to_string();
                serde_json::to_string(&f).unwrap()
            },
            serde_json::to_string(&su2_diag(1, 2, 3)).unwrap()
        ))
        .unwrap();
        let family = family_from_file(&file, None).unwrap();
        let report = family_verify(&family, 10, 0, 10, 1);
        assert!(report
            .violations
            .iter()
            .any(|v| v.contains("does not complexify")));
        assert!(report
            .violations
            .iter()
            .any(|v| v.contains("refuted on intruder")));
    }

    fn fake_go(mode: &str) -> GoReport {
        GoReport {
            space: "test".to_string(),
            mode: mode.to_string(),
            witness: None,
            ranks: None,
            samples: SampleBlock {
                tested: 0,
                failed: 0,
                seed: 0,
            },
            graph_map: None,
        }
    }

    fn tag_space(mut file: crate::space::SpaceFile, tags: &[(&str, TagValue)]) -> ReductiveSpace {
        for (key, value) in tags {
            file.tags.insert(
                key.to_string(),
                Tag {
                    value: *value,
                    source: "test".to_string(),
                },
            );
        }
        load(file)
    }

    #[test]
    fn audit_passes_on_consistent_tags() {
        let sphere = tag_space(
            sphere2(),
            &[
                ("symmetric", TagValue::True),
                ("weakly_symmetric", TagValue::True),
                ("naturally_reductive", TagValue::True),
                ("geodesic_orbit", TagValue::True),
            ],
        );
        let report = inclusion_audit(&sphere, &fake_go("certified_linear"), true, true);
        assert!(report.errors.is_empty(), "{:?}", report.errors);
    }

    #[test]
    fn weakly_symmetric_tag_against_refutation_is_one_error() {
        let su2 = tag_space(su2_diag(1, 2, 3), &[("weakly_symmetric", TagValue::True)]);
        let report = inclusion_audit(&su2, &fake_go("refuted"), false, false);
        assert_eq!(report.errors.len(), 1, "{:?}", report.errors);
    }

    #[test]
    fn natred_tag_against_computation_is_two_errors_when_also_refuted() {
        let su2 = tag_space(su2_diag(1, 2, 3), &[("naturally_reductive", TagValue::True)]);
        let report = inclusion_audit(&su2, &fake_go("refuted"), false, false);
        assert_eq!(report.errors.len(), 2, "{:?}", report.errors);
    }

    #[test]
    fn computed_natred_needs_a_certificate() {
        let sphere = tag_space(sphere2(), &[]);
        let report = inclusion_audit(&sphere, &fake_go("sampled_consistent"), true, true);
        assert_eq!(report.errors.len(), 1);
        let report = inclusion_audit(&sphere, &fake_go("certified_linear"), true, true);
        assert!(report.errors.is_empty());
    }

    #[test]
    fn symmetric_tag_needs_symmetric_pair() {
        let heis = tag_space(
            crate::fixtures::heisenberg_bare(),
            &[("symmetric", TagValue::True)],
        );
        let report = inclusion_audit(&heis, &fake_go("refuted"), false, false);
        assert_eq!(report.errors.len(), 1, "{:?}", report.errors);
    }
}
