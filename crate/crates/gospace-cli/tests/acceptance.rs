//! Acceptance suite over the shipped catalog: one test per criterion, each
//! printing a single PASS line with the checked facts.

use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use gospace::family::{complexify, family_verify, inclusion_audit, load_family, Family};
use gospace::geodesic::{
    certify_go_linear, check_crown_go_consistency, check_omega_realform, find_refutation,
    geodesic_system, go_verdict, solve_geodesic_vector, verify_certificate, GoMode,
};
use gospace::invariants::{derivation_matrix, invariant_basis, invariant_dims};
use gospace::linalg::Matrix;
use gospace::natred::{is_naturally_reductive, natred_witness, psi};
use gospace::pbw::{commutator_report, PbwEngine, Strategy};
use gospace::sampling;
use gospace::scalar::Scalar;
use gospace::space::{ReductiveSpace, SpaceFile};

const SPACE_NAMES: [&str; 7] = [
    "abelian-flat",
    "heisenberg-bare",
    "heisenberg-wsym",
    "sphere2",
    "su2-123",
    "su2-berger",
    "su2-round",
];

fn catalog_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../catalog")
}

fn catalog_path(name: &str) -> PathBuf {
    catalog_dir().join(format!("{name}.json"))
}

fn load(name: &str) -> ReductiveSpace {
    let file = SpaceFile::read(&catalog_path(name)).unwrap();
    ReductiveSpace::from_file(&file).unwrap()
}

fn family() -> Family {
    load_family(&catalog_path("sphere-family")).unwrap()
}

fn s(t: &str) -> Scalar {
    t.parse().unwrap()
}

fn unit(dim: usize, k: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); dim];
    v[k] = Scalar::one();
    v
}

#[test]
fn acceptance_01_catalog_integrity() {
    let start = Instant::now();
    for name in SPACE_NAMES {
        let space = load(name);
        let report = space.validate();
        assert!(report.valid, "{name}: {:?}", report.failures);
    }
    let family = family();
    assert!(family.crown.validate().valid);
    for member in &family.members {
        assert!(member.space.validate().valid, "{}", member.name);
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!(
        "ACCEPTANCE 1 PASS - catalog integrity: 7 spaces and the family validate in {elapsed:?}"
    );
}

#[test]
fn acceptance_02_geodesic_solutions_are_exact() {
    let sphere = load("sphere2");
    for j in 0..2 {
        let point = solve_geodesic_vector(&sphere, &unit(2, j)).expect("basis direction solves");
        assert!(point.alpha.iter().all(Scalar::is_zero), "direction {j}");
        assert!(point.c.is_zero());
    }

    let heis = load("heisenberg-wsym");
    let cases = [
        ("1", "2", "3"),
        ("1", "0", "-2"),
        ("0", "1", "1/2"),
        ("2", "-1", "0"),
        ("5", "5", "5"),
    ];
    for (a, b, c0) in cases {
        let xi = vec![s(a), s(b), s(c0)];
        let point = solve_geodesic_vector(&heis, &xi).expect("completes in the rotation");
        assert_eq!(point.alpha, vec![s(c0)], "xi = ({a}, {b}, {c0})");
        assert!(point.c.is_zero());
    }

    let su2 = load("su2-123");
    let xi = vec![s("1"), s("1"), s("0")];
    assert!(solve_geodesic_vector(&su2, &xi).is_none());
    println!(
        "ACCEPTANCE 2 PASS - geodesic solutions: sphere basis completes with zero, the \
         nilpotent family completes with the central coefficient, e0 + e1 has no completion"
    );
}

#[test]
fn acceptance_03_refutations_use_the_deterministic_prefix() {
    for name in ["su2-123", "heisenberg-bare"] {
        let space = load(name);
        let (refutation, total) = find_refutation(&space, 0, 0, 10);
        let r = refutation.unwrap_or_else(|| panic!("{name} must refute without randomness"));
        let prefix = sampling::enumeration(&space).len();
        assert_eq!(total, prefix, "{name}: no random candidates were requested");
        assert!(r.candidate_index < prefix, "{name}");
        assert_eq!(r.rank_aug, r.rank_coeff + 1, "{name}");
        let (a, b) = geodesic_system(&space, &r.xi);
        assert!(a.solve(&b).is_none(), "{name}: witness re-checks");
        assert_eq!(a.rank(), r.rank_coeff, "{name}");
    }
    println!(
        "ACCEPTANCE 3 PASS - refutations: su2-123 and heisenberg-bare fail inside the \
         enumeration prefix with rank jump exactly one"
    );
}

#[test]
fn acceptance_04_certificates_verify_on_a_thousand_samples() {
    let mut spaces = vec![load("sphere2"), load("su2-round"), load("heisenberg-wsym")];
    for member in family().members {
        spaces.push(member.space);
    }
    for space in &spaces {
        let l = certify_go_linear(space)
            .unwrap_or_else(|| panic!("{} must certify", space.name()));
        assert_eq!(
            verify_certificate(space, &l, 1000, 0, 10),
            0,
            "{}",
            space.name()
        );
        let report = go_verdict(space, GoMode::Auto, 200, 0, 10);
        assert_eq!(report.mode, "certified_linear", "{}", space.name());
    }
    println!(
        "ACCEPTANCE 4 PASS - certification: {} spaces certified and re-verified on 1000 \
         seeded samples each with zero defects",
        spaces.len()
    );
}

#[test]
fn acceptance_05_crown_consistency() {
    for name in SPACE_NAMES {
        let space = load(name);
        let report = check_crown_go_consistency(&space, 200, 0, 10).unwrap();
        assert!(
            !report.violation,
            "{name}: {} vs {}",
            report.space_mode, report.crown_mode
        );
    }
    let report = family_verify(&family(), 200, 0, 10, 4);
    assert!(report.violations.is_empty(), "{:?}", report.violations);
    let mut all = vec![&report.crown];
    all.extend(&report.members);
    assert_eq!(all.len(), 4);
    for member in all {
        assert_eq!(member.go.mode, "certified_linear", "{}", member.name);
        assert_eq!(member.go.samples.tested, 200, "{}", member.name);
        assert_eq!(member.go.samples.failed, 0, "{}", member.name);
        assert_eq!(member.go.samples.seed, 0, "{}", member.name);
    }
    println!(
        "ACCEPTANCE 5 PASS - crown consistency: no verdict flips across complexification; \
         the sphere family is certified throughout with 200 clean samples at seed 0"
    );
}

#[test]
fn acceptance_06_completion_variety_is_field_stable() {
    for name in SPACE_NAMES {
        let space = load(name);
        let report = check_omega_realform(&space, 200, 0, 10).unwrap();
        assert_eq!(report.samples.tested, 200, "{name}");
        assert_eq!(report.discrepancies, 0, "{name}");
    }
    println!(
        "ACCEPTANCE 6 PASS - completion membership: 200 sampled points per space agree \
         between each rational space and its crown"
    );
}

#[test]
fn acceptance_07_natural_reductivity_decisions() {
    let expectations = [
        ("abelian-flat", true),
        ("heisenberg-bare", false),
        ("heisenberg-wsym", false),
        ("sphere2", true),
        ("su2-123", false),
        ("su2-berger", false),
        ("su2-round", true),
    ];
    for (name, expected) in expectations {
        let space = load(name);
        assert_eq!(is_naturally_reductive(&space), expected, "{name}");
        let crown = complexify(&space).unwrap();
        assert_eq!(is_naturally_reductive(&crown), expected, "{name} crown");
    }
    let su2 = load("su2-123");
    assert_eq!(natred_witness(&su2), Some([0, 1, 2]));
    assert_eq!(psi(&su2, &unit(3, 0), &unit(3, 1), &unit(3, 2)), s("1"));
    let heis = load("heisenberg-wsym");
    assert_eq!(natred_witness(&heis), Some([0, 1, 2]));
    assert_eq!(psi(&heis, &unit(3, 0), &unit(3, 1), &unit(3, 2)), s("1"));
    println!(
        "ACCEPTANCE 7 PASS - natural reductivity: exact decisions match on all spaces and \
         crowns, with unit trilinear witnesses on su2-123 and heisenberg-wsym"
    );
}

#[test]
fn acceptance_08_invariant_dimensions() {
    let sphere = load("sphere2");
    assert_eq!(invariant_dims(&sphere, 4), vec![1, 0, 1, 0, 1]);
    let crown = complexify(&sphere).unwrap();
    assert_eq!(invariant_dims(&crown, 4), vec![1, 0, 1, 0, 1]);

    // independent oracle: the rotation derivation on degree-2 monomials
    // (x^2, xy, y^2 in the fixed order) and its kernel, built by hand
    let oracle = Matrix::from_rows(vec![
        vec![s("0"), s("-1"), s("0")],
        vec![s("2"), s("0"), s("-2")],
        vec![s("0"), s("1"), s("0")],
    ]);
    assert_eq!(derivation_matrix(&sphere, 0, 2), oracle);
    let kernel = oracle.kernel_basis();
    assert_eq!(kernel.len(), 1);
    assert_eq!(kernel[0], vec![s("1"), s("0"), s("1")]);
    let quadric = &invariant_basis(&sphere, 2)[0];
    assert_eq!(quadric.coeffs.len(), 2);
    assert_eq!(quadric.coeffs[&vec![2, 0]], s("1"));
    assert_eq!(quadric.coeffs[&vec![0, 2]], s("1"));

    let heis = load("heisenberg-wsym");
    let degree_one = invariant_basis(&heis, 1);
    assert_eq!(degree_one.len(), 1);
    assert_eq!(degree_one[0].coeffs.len(), 1);
    assert_eq!(degree_one[0].coeffs[&vec![0, 0, 1]], s("1"));
    println!(
        "ACCEPTANCE 8 PASS - invariants: sphere dimensions [1, 0, 1, 0, 1] over both fields \
         against a hand-built derivation kernel; the nilpotent degree-1 invariant is the center"
    );
}

#[test]
fn acceptance_09_commutator_engine() {
    let sphere = load("sphere2");
    let report = commutator_report(&sphere, 4);
    assert!(report.refutations.is_empty());
    assert_eq!(report.dims, vec![1, 0, 1, 0, 1]);

    for name in SPACE_NAMES {
        let space = load(name);
        let crown = complexify(&space).unwrap();
        for space in [&space, &crown] {
            let mut engine = PbwEngine::new(space);
            for degree in 1..=3u32 {
                for poly in invariant_basis(space, degree) {
                    let sym = engine.symmetrize(&poly);
                    let self_commutator = engine.commutator(&sym, &sym);
                    assert!(
                        self_commutator.is_empty(),
                        "{} degree {degree}",
                        space.name()
                    );
                }
            }
        }
    }

    let heis = load("heisenberg-wsym");
    let mut left = PbwEngine::new(&heis);
    let mut right = PbwEngine::new(&heis);
    let mut rng = sampling::rng_for(9, 0);
    for _ in 0..100 {
        let len = rand::Rng::random_range(&mut rng, 0..=5);
        let word: Vec<usize> = (0..len)
            .map(|_| rand::Rng::random_range(&mut rng, 0..4))
            .collect();
        assert_eq!(
            left.normal_form(&word, Strategy::Leftmost),
            right.normal_form(&word, Strategy::Rightmost),
            "{word:?}"
        );
    }
    println!(
        "ACCEPTANCE 9 PASS - commutators: sphere invariants commute to degree 4, \
         self-commutators vanish everywhere, both rewrite strategies agree on 100 words"
    );
}

#[test]
fn acceptance_10_inclusion_audit() {
    for name in SPACE_NAMES {
        let space = load(name);
        let go = go_verdict(&space, GoMode::Auto, 200, 0, 10);
        let natred = is_naturally_reductive(&space);
        let (symmetric, _) = space.is_symmetric_pair();
        let audit = inclusion_audit(&space, &go, natred, symmetric);
        assert!(audit.errors.is_empty(), "{name}: {:?}", audit.errors);
    }
    let bad_path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/su2-123-badtag.json");
    let file = SpaceFile::read(&bad_path).unwrap();
    let bad = ReductiveSpace::from_file(&file).unwrap();
    let go = go_verdict(&bad, GoMode::Auto, 200, 0, 10);
    let natred = is_naturally_reductive(&bad);
    let (symmetric, _) = bad.is_symmetric_pair();
    let audit = inclusion_audit(&bad, &go, natred, symmetric);
    assert_eq!(audit.errors.len(), 1, "{:?}", audit.errors);
    println!(
        "ACCEPTANCE 10 PASS - audit: shipped tags are contradiction-free; the deliberately \
         mistagged space yields exactly one error"
    );
}

#[test]
fn acceptance_11_reports_are_deterministic() {
    let exe = env!("CARGO_BIN_EXE_gospace");
    let mut files: Vec<PathBuf> = SPACE_NAMES.iter().map(|n| catalog_path(n)).collect();
    files.push(catalog_path("sphere-family"));
    for file in &files {
        let runs: Vec<Vec<u8>> = [None, None, Some("1"), Some("8")]
            .iter()
            .map(|threads| {
                let mut command = Command::new(exe);
                command.arg("analyze").arg(file);
                match threads {
                    Some(n) => command.env("GOSPACE_THREADS", n),
                    None => command.env_remove("GOSPACE_THREADS"),
                };
                let output = command.output().expect("analyze runs");
                assert!(
                    output.status.code().is_some(),
                    "{}: killed by signal",
                    file.display()
                );
                output.stdout
            })
            .collect();
        assert_eq!(runs[0], runs[1], "{}: rerun differs", file.display());
        assert_eq!(runs[0], runs[2], "{}: one thread differs", file.display());
        assert_eq!(runs[0], runs[3], "{}: eight threads differ", file.display());
        assert!(!runs[0].is_empty(), "{}", file.display());
    }
    println!(
        "ACCEPTANCE 11 PASS - determinism: analyze output is byte-identical across reruns \
         and across one and eight worker threads on all {} catalog files",
        files.len()
    );
}
