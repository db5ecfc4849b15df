//! Normal forms in the enveloping algebra and degree-capped commutativity
//! tests for the algebra of invariant operators.
//!
//! Letters are complement positions first, isotropy positions last, so a
//! normal word is a non-decreasing letter sequence and the left ideal
//! generated by the isotropy is spanned by normal words containing an
//! isotropy letter. Reduction modulo that ideal is then a word filter.

use std::collections::{BTreeMap, HashMap};

use crate::invariants::{invariant_basis, SymPoly};
use crate::report::{CommRefutation, CommTerm, CommutatorReport, InvariantRef};
use crate::scalar::Scalar;
use crate::space::{Field, ReductiveSpace};

/// Word in the enveloping algebra, ordered by length then lexicographically,
/// so map iteration yields the shortest, lexicographically first term first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word(pub Vec<usize>);

impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

pub type PbwElement = BTreeMap<Word, Scalar>;

pub fn add_term(element: &mut PbwElement, word: Word, coeff: Scalar) {
    if coeff.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match element.entry(word) {
        Entry::Vacant(slot) => {
            slot.insert(coeff);
        }
        Entry::Occupied(mut slot) => {
            *slot.get_mut() += &coeff;
            if slot.get().is_zero() {
                slot.remove();
            }
        }
    }
}

/// Which out-of-order adjacent pair a straightening step rewrites. Both
/// strategies reach the same normal form; running them against each other is
/// the confluence check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

impl Strategy {
    fn slot(self) -> usize {
        match self {
            Strategy::Leftmost => 0,
            Strategy::Rightmost => 1,
        }
    }
}

pub struct PbwEngine<'a> {
    space: &'a ReductiveSpace,
    to_full: Vec<usize>,
    // brackets[a][b]: [e_a, e_b] in letter coordinates, sparse.
    brackets: Vec<Vec<Vec<(usize, Scalar)>>>,
    cache: [HashMap<Vec<usize>, PbwElement>; 2],
}

impl<'a> PbwEngine<'a> {
    pub fn new(space: &'a ReductiveSpace) -> Self {
        let dim = space.dim();
        let to_full: Vec<usize> = space
            .complement()
            .iter()
            .chain(space.isotropy())
            .copied()
            .collect();
        let mut to_letter = vec![0usize; dim];
        for (letter, &full) in to_full.iter().enumerate() {
            to_letter[full] = letter;
        }
        let brackets = (0..dim)
            .map(|a| {
                (0..dim)
                    .map(|b| {
                        space
                            .bracket_basis(to_full[a], to_full[b])
                            .iter()
                            .enumerate()
                            .filter(|(_, c)| !c.is_zero())
                            .map(|(k, c)| (to_letter[k], c.clone()))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        PbwEngine {
            space,
            to_full,
            brackets,
            cache: [HashMap::new(), HashMap::new()],
        }
    }

    pub fn letter_label(&self, letter: usize) -> &str {
        self.space.label(self.to_full[letter])
    }

    /// Straightens one raw word: e_b e_a with b > a becomes
    /// e_a e_b + [e_b, e_a], recursively, with memoization. The result is a
    /// combination of non-decreasing words.
    pub fn normal_form(&mut self, word: &[usize], strategy: Strategy) -> PbwElement {
        if let Some(hit) = self.cache[strategy.slot()].get(word) {
            return hit.clone();
        }
        let positions = 0..word.len().saturating_sub(1);
        let inversion = match strategy {
            Strategy::Leftmost => positions.clone().find(|&p| word[p] > word[p + 1]),
            Strategy::Rightmost => positions.rev().find(|&p| word[p] > word[p + 1]),
        };
        let result = match inversion {
            None => {
                let mut single = PbwElement::new();
                single.insert(Word(word.to_vec()), Scalar::one());
                single
            }
            Some(p) => {
                let mut swapped = word.to_vec();
                swapped.swap(p, p + 1);
                let mut acc = self.normal_form(&swapped, strategy);
                let corrections = self.brackets[word[p]][word[p + 1]].clone();
                for (letter, coeff) in corrections {
                    let mut contracted = Vec::with_capacity(word.len() - 1);
                    contracted.extend_from_slice(&word[..p]);
                    contracted.push(letter);
                    contracted.extend_from_slice(&word[p + 2..]);
                    for (w, c) in self.normal_form(&contracted, strategy) {
                        add_term(&mut acc, w, &coeff * &c);
                    }
                }
                acc
            }
        };
        self.cache[strategy.slot()].insert(word.to_vec(), result.clone());
        result
    }

    pub fn normalize(&mut self, raw: &[(Vec<usize>, Scalar)], strategy: Strategy) -> PbwElement {
        let mut acc = PbwElement::new();
        for (word, coeff) in raw {
            for (w, c) in self.normal_form(word, strategy) {
                add_term(&mut acc, w, coeff * &c);
            }
        }
        acc
    }

    /// The symmetrization of a polynomial: each monomial averages over all
    /// arrangements of its letters, each arrangement straightened.
    pub fn symmetrize(&mut self, poly: &SymPoly) -> PbwElement {
        let mut acc = PbwElement::new();
        for (exponents, coeff) in &poly.coeffs {
            let mut letters = Vec::new();
            for (a, &e) in exponents.iter().enumerate() {
                letters.extend(std::iter::repeat(a).take(e as usize));
            }
            let arrangements = multiset_permutations(letters);
            let share = coeff / &Scalar::from_int(arrangements.len() as i64);
            for arrangement in &arrangements {
                for (w, c) in self.normal_form(arrangement, Strategy::Leftmost) {
                    add_term(&mut acc, w, &share * &c);
                }
            }
        }
        acc
    }

    /// Projection modulo the left ideal generated by the isotropy: every
    /// normal word containing an isotropy letter is dropped.
    pub fn reduce_mod_isotropy(&self, element: &PbwElement) -> PbwElement {
        let lm = self.space.dim_m();
        element
            .iter()
            .filter(|(w, _)| w.0.iter().all(|&l| l < lm))
            .map(|(w, c)| (w.clone(), c.clone()))
            .collect()
    }

    /// [P, Q] = PQ - QP as a normal-form element, not yet reduced.
    pub fn commutator(&mut self, p: &PbwElement, q: &PbwElement) -> PbwElement {
        let mut acc = PbwElement::new();
        for (w1, c1) in p {
            for (w2, c2) in q {
                let coeff = c1 * c2;
                let mut forward = w1.0.clone();
                forward.extend_from_slice(&w2.0);
                for (w, c) in self.normal_form(&forward, Strategy::Leftmost) {
                    add_term(&mut acc, w, &coeff * &c);
                }
                let mut backward = w2.0.clone();
                backward.extend_from_slice(&w1.0);
                for (w, c) in self.normal_form(&backward, Strategy::Leftmost) {
                    add_term(&mut acc, w, -&(&coeff * &c));
                }
            }
        }
        acc
    }
}

/// All distinct arrangements of a letter multiset, lexicographically.
pub fn multiset_permutations(mut letters: Vec<usize>) -> Vec<Vec<usize>> {
    letters.sort_unstable();
    let mut out = vec![letters.clone()];
    while next_permutation(&mut letters) {
        out.push(letters.clone());
    }
    out
}

fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

fn refutation_scan(space: &ReductiveSpace, degree_cap: usize) -> (Vec<usize>, Vec<CommRefutation>) {
    let bases: Vec<Vec<SymPoly>> = (0..=degree_cap)
        .map(|d| invariant_basis(space, d as u32))
        .collect();
    let dims = bases.iter().map(Vec::len).collect();
    let mut engine = PbwEngine::new(space);
    let mut refs = Vec::new();
    for (d, basis) in bases.iter().enumerate() {
        for i in 0..basis.len() {
            refs.push(InvariantRef { degree: d, index: i });
        }
    }
    let sym: Vec<PbwElement> = refs
        .iter()
        .map(|r| engine.symmetrize(&bases[r.degree][r.index]))
        .collect();
    let mut refutations = Vec::new();
    // Self-commutators vanish identically, so the scan starts past the
    // diagonal. It stops at the first refutation: one nonzero commutator
    // already settles non-commutativity, and the pair order is canonical.
    'scan: for s in 0..refs.len() {
        for t in s + 1..refs.len() {
            let bracket = engine.commutator(&sym[s], &sym[t]);
            let reduced = engine.reduce_mod_isotropy(&bracket);
            if let Some((word, coeff)) = reduced.iter().next() {
                refutations.push(CommRefutation {
                    p: refs[s].clone(),
                    q: refs[t].clone(),
                    nonzero_term: CommTerm {
                        monomial: word
                            .0
                            .iter()
                            .map(|&l| engine.letter_label(l).to_string())
                            .collect(),
                        coeff: coeff.clone(),
                    },
                });
                break 'scan;
            }
        }
    }
    (dims, refutations)
}

/// Degree-capped commutativity test of the invariant operator algebra.
/// A nonzero reduced commutator of symmetrized invariants refutes
/// commutativity; an all-zero scan is evidence up to the cap, not a proof.
/// Rational spaces are rescanned over their complexification and the two
/// refutation outcomes must agree.
pub fn commutator_report(space: &ReductiveSpace, degree_cap: usize) -> CommutatorReport {
    let (dims, refutations) = refutation_scan(space, degree_cap);
    let crown_consistent = match space.field() {
        Field::Rational => {
            let crown = crate::family::complexify(space)
                .expect("rational space always complexifies");
            let (_, crown_refutations) = refutation_scan(&crown, degree_cap);
            Some(crown_refutations.is_empty() == refutations.is_empty())
        }
        Field::Gaussian => None,
    };
    let status = if refutations.is_empty() {
        format!("commutative up to degree {degree_cap} (evidence, not proof)")
    } else {
        "refuted".to_string()
    };
    CommutatorReport {
        space: space.name().to_string(),
        degree_cap,
        dims,
        status,
        refutations,
        crown_consistent,
    }
}
