//! JSON report shapes. Field declaration order is serialization order, and
//! every map inside is ordered, so identical inputs produce identical bytes.

use serde::Serialize;

use crate::scalar::Scalar;
use crate::space::ValidationReport;

#[derive(Debug, Clone, Serialize)]
pub struct SampleBlock {
    pub tested: usize,
    pub failed: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct GoReport {
    pub space: String,
    pub mode: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<Scalar>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ranks: Option<[usize; 2]>,
    pub samples: SampleBlock,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph_map: Option<Vec<Vec<Scalar>>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct OmegaSamples {
    pub tested: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct OmegaReport {
    pub space: String,
    pub samples: OmegaSamples,
    pub discrepancies: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct CrownGoReport {
    pub space: String,
    pub space_mode: String,
    pub crown_mode: String,
    pub violation: bool,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct NatredReport {
    pub space: String,
    pub natred: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<[usize; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub crown_natred: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub consistent: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct InvariantsReport {
    pub space: String,
    pub max_degree: usize,
    pub dims: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub crown_dims: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub consistent: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantRef {
    pub degree: usize,
    pub index: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct CommTerm {
    pub monomial: Vec<String>,
    pub coeff: Scalar,
}

#[derive(Debug, Clone, Serialize)]
pub struct CommRefutation {
    pub p: InvariantRef,
    pub q: InvariantRef,
    pub nonzero_term: CommTerm,
}

#[derive(Debug, Clone, Serialize)]
pub struct CommutatorReport {
    pub space: String,
    pub degree_cap: usize,
    pub dims: Vec<usize>,
    pub status: String,
    pub refutations: Vec<CommRefutation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub crown_consistent: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SymmetricPairReport {
    pub symmetric: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<[usize; 2]>,
}

#[derive(Debug, Clone, Serialize)]
pub struct AuditReport {
    pub space: String,
    pub errors: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalyzeReport {
    pub space: String,
    pub validation: ValidationReport,
    pub signature: [usize; 2],
    pub symmetric_pair: SymmetricPairReport,
    pub go: GoReport,
    pub natred: NatredReport,
    pub invariants: InvariantsReport,
    pub commutators: CommutatorReport,
    pub inclusion_audit: AuditReport,
}

#[derive(Debug, Clone, Serialize)]
pub struct FamilyMemberReport {
    pub name: String,
    pub signature: [usize; 2],
    pub go: GoReport,
    pub natred: NatredReport,
    pub invariants: InvariantsReport,
    pub commutators: CommutatorReport,
}

#[derive(Debug, Clone, Serialize)]
pub struct FamilyReport {
    pub family: String,
    pub crown: FamilyMemberReport,
    pub members: Vec<FamilyMemberReport>,
    pub violations: Vec<String>,
}
