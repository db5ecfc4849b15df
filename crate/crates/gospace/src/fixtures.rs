//! Inline space definitions shared by the unit tests. These mirror the
//! shipped catalog but keep the tests independent of file paths.

use crate::space::SpaceFile;

pub fn sphere2() -> SpaceFile {
    serde_json::from_str(
        r#"{
        "name": "sphere2",
        "field": "rational",
        "dimension": 3,
        "basis": ["e0", "e1", "e2"],
        "brackets": [
            {"i": 0, "j": 1, "coeffs": {"2": "1"}},
            {"i": 0, "j": 2, "coeffs": {"1": "-1"}},
            {"i": 1, "j": 2, "coeffs": {"0": "1"}}
        ],
        "isotropy": [2],
        "metric": [["1", "0"], ["0", "1"]],
        "tags": {}
    }"#,
    )
    .unwrap()
}

/// su(2) with a left-invariant diagonal metric and trivial isotropy.
pub fn su2_diag(q0: i64, q1: i64, q2: i64) -> SpaceFile {
    serde_json::from_str(&format!(
        r#"{{
        "name": "su2-{q0}{q1}{q2}",
        "field": "rational",
        "dimension": 3,
        "basis": ["e0", "e1", "e2"],
        "brackets": [
            {{"i": 0, "j": 1, "coeffs": {{"2": "1"}}}},
            {{"i": 0, "j": 2, "coeffs": {{"1": "-1"}}}},
            {{"i": 1, "j": 2, "coeffs": {{"0": "1"}}}}
        ],
        "isotropy": [],
        "metric": [["{q0}", "0", "0"], ["0", "{q1}", "0"], ["0", "0", "{q2}"]],
        "tags": {{}}
    }}"#
    ))
    .unwrap()
}

pub fn heisenberg_bare() -> SpaceFile {
    serde_json::from_str(
        r#"{
        "name": "heisenberg-bare",
        "field": "rational",
        "dimension": 3,
        "basis": ["x", "y", "z"],
        "brackets": [{"i": 0, "j": 1, "coeffs": {"2": "1"}}],
        "isotropy": [],
        "metric": [["1","0","0"],["0","1","0"],["0","0","1"]],
        "tags": {}
    }"#,
    )
    .unwrap()
}

/// The Heisenberg algebra extended by its rotation, with the rotation as
/// isotropy: [x,y] = z, [t,x] = y, [t,y] = -x.
pub fn heisenberg_wsym() -> SpaceFile {
    serde_json::from_str(
        r#"{
        "name": "heisenberg-wsym",
        "field": "rational",
        "dimension": 4,
        "basis": ["x", "y", "z", "t"],
        "brackets": [
            {"i": 0, "j": 1, "coeffs": {"2": "1"}},
            {"i": 0, "j": 3, "coeffs": {"1": "-1"}},
            {"i": 1, "j": 3, "coeffs": {"0": "1"}}
        ],
        "isotropy": [3],
        "metric": [["1","0","0"],["0","1","0"],["0","0","1"]],
        "tags": {}
    }"#,
    )
    .unwrap()
}

pub fn abelian_flat() -> SpaceFile {
    serde_json::from_str(
        r#"{
        "name": "abelian-flat",
        "field": "rational",
        "dimension": 3,
        "basis": ["e0", "e1", "e2"],
        "brackets": [],
        "isotropy": [],
        "metric": [["1","0","0"],["0","1","0"],["0","0","1"]],
        "tags": {}
    }"#,
    )
    .unwrap()
}
