// Shared by the integration suites and the acceptance runner.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::sync::Arc;

use grder_core::abhom::{abelianization, hom_group};
use grder_core::derivation::{self, Derivation, DerivationReport};
use grder_core::groupoid::{self, character_bracket};
use grder_core::groups::Subgroup;
use grder_core::rings::construct_ring;
use grder_core::{Element, FiniteGroup, FiniteRing, GroupRing, GroupSpec, RingSpec, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Outcome = Result<usize, String>;

pub fn group(spec: &str) -> FiniteGroup {
    let s: GroupSpec = spec.parse().unwrap_or_else(|e| panic!("{spec}: {e}"));
    grder_core::groups::construct_group(&s, 64).unwrap()
}

pub fn ring(spec: &str) -> FiniteRing {
    let s: RingSpec = spec.parse().unwrap_or_else(|e| panic!("{spec}: {e}"));
    construct_ring(&s, 256).unwrap()
}

pub fn group_ring(g: &str, r: &str) -> GroupRing {
    GroupRing::new(group(g), ring(r))
}

/// Every group of order at most 12 reachable from the built-in constructors,
/// up to isomorphism where it was cheap to avoid repeats.
pub const SMALL_GROUPS: &[&str] = &[
    "C1",
    "C2",
    "C3",
    "C4",
    "C2xC2",
    "C5",
    "C6",
    "S3",
    "C7",
    "C8",
    "C2xC4",
    "C2xC2xC2",
    "dihedral:2",
    "C9",
    "C3xC3",
    "C10",
    "dihedral:1xC3",
    "C11",
    "C12",
    "C2xC6",
    "dihedral:3",
    "S3xC2",
];

pub const SMALL_RINGS: &[&str] = &["Z2", "Z3", "Z4", "Z6", "GF:2:2", "Z2xZ2"];

/// Rings with at most 16 elements, several per additive structure.
pub const HOM_RINGS: &[&str] = &[
    "Z2",
    "Z3",
    "Z4",
    "Z5",
    "Z6",
    "Z7",
    "Z8",
    "Z9",
    "Z10",
    "Z11",
    "Z12",
    "Z13",
    "Z14",
    "Z15",
    "Z16",
    "GF:2:2",
    "GF:2:3",
    "GF:2:4",
    "GF:3:2",
    "Z2xZ2",
    "Z2xZ4",
    "Z2xZ8",
    "Z4xZ4",
    "Z2xZ2xZ2",
    "Z2xZ2xZ4",
    "Z3xZ3",
    "Z2xZ6",
    "Z2xGF:2:2",
    "Z2xZ2xZ2xZ2",
];

/// `(parent, generators)` of subgroups with at most 12 elements; `*` stands
/// for the whole parent.
pub const HOM_DOMAINS: &[(&str, &[&str])] = &[
    ("C1", &[]),
    ("C2", &["g"]),
    ("C3", &["g"]),
    ("C4", &["g"]),
    ("C5", &["g"]),
    ("C6", &["g"]),
    ("C7", &["g"]),
    ("C8", &["g"]),
    ("C9", &["g"]),
    ("C10", &["g"]),
    ("C11", &["g"]),
    ("C12", &["g"]),
    ("C2xC2", &["*"]),
    ("C2xC4", &["*"]),
    ("C2xC6", &["*"]),
    ("C3xC3", &["*"]),
    ("C2xC2xC2", &["*"]),
    ("S3", &["(12)", "(123)"]),
    ("dihedral:2", &["r", "s"]),
    ("dihedral:3", &["r", "s"]),
    ("S3xC2", &["*"]),
    ("S4", &["(123)", "(12)(34)"]),
    ("S4", &["(1234)", "(13)"]),
    ("S4", &["(12)", "(34)"]),
];

fn names_to_subgroup(g: &FiniteGroup, gens: &[&str]) -> Subgroup {
    if gens == ["*"] {
        return g.as_subgroup();
    }
    let idx = gens
        .iter()
        .map(|n| g.index_of(n).unwrap_or_else(|| panic!("no element {n}")))
        .collect::<Vec<_>>();
    Subgroup::generated_by(g, idx)
}

/// Every additive map `H → (A, +)`, as value tables over `H.elements()`,
/// found by assigning images to a generating set and keeping the
/// assignments that extend to a homomorphism.
pub fn brute_force_homs(g: &FiniteGroup, h: &Subgroup, ring: &FiniteRing) -> BTreeSet<Vec<Scalar>> {
    let elems = h.elements();
    let pos: HashMap<Element, usize> = elems.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let mut gens: Vec<Element> = Vec::new();
    while Subgroup::generated_by(g, gens.iter().copied()).order() < h.order() {
        let span = Subgroup::generated_by(g, gens.iter().copied());
        gens.push(*elems.iter().find(|&&x| !span.contains(x)).unwrap());
    }
    let values: Vec<Scalar> = ring.elements().collect();
    let mut out = BTreeSet::new();
    let mut choice = vec![0usize; gens.len()];
    'outer: loop {
        let mut f: Vec<Option<Scalar>> = vec![None; elems.len()];
        f[pos[&g.identity()]] = Some(0);
        let mut queue = VecDeque::from([g.identity()]);
        let mut ok = true;
        while let Some(x) = queue.pop_front() {
            let fx = f[pos[&x]].unwrap();
            for (i, &s) in gens.iter().enumerate() {
                let y = g.mul(x, s);
                let fy = ring.add(fx, values[choice[i]]);
                match f[pos[&y]] {
                    None => {
                        f[pos[&y]] = Some(fy);
                        queue.push_back(y);
                    }
                    Some(v) if v != fy => ok = false,
                    _ => {}
                }
            }
        }
        if ok {
            let table: Vec<Scalar> = f.into_iter().map(Option::unwrap).collect();
            let additive = elems.iter().all(|&x| {
                elems
                    .iter()
                    .all(|&y| table[pos[&g.mul(x, y)]] == ring.add(table[pos[&x]], table[pos[&y]]))
            });
            if additive {
                out.insert(table);
            }
        }
        let mut i = 0;
        while i < choice.len() {
            choice[i] += 1;
            if choice[i] < values.len() {
                continue 'outer;
            }
            choice[i] = 0;
            i += 1;
        }
        break;
    }
    out
}

/// Brute force against `hom_group` on every domain and ring above.
pub fn check_hom_arithmetic() -> Outcome {
    let mut cases = 0;
    let mut parents: HashMap<&str, FiniteGroup> = HashMap::new();
    for &(parent, gens) in HOM_DOMAINS {
        let g = parents
            .entry(parent)
            .or_insert_with(|| group(parent))
            .clone();
        let h = names_to_subgroup(&g, gens);
        if h.order() > 12 {
            return Err(format!(
                "domain <{gens:?}> in {parent} has order {}",
                h.order()
            ));
        }
        let quotient = Arc::new(abelianization(&g, &h));
        for &r in HOM_RINGS {
            let ring = Arc::new(ring(r));
            if ring.size() > 16 {
                return Err(format!("{r} has more than 16 elements"));
            }
            let brute = brute_force_homs(&g, &h, &ring);
            let homs = hom_group(&quotient, &ring);
            if homs.size() as usize != brute.len() {
                return Err(format!(
                    "Hom(<{gens:?}> in {parent}, {r}): hom_group size {} but {} maps",
                    homs.size(),
                    brute.len()
                ));
            }
            let listed: BTreeSet<Vec<Scalar>> = homs
                .elements(&quotient, &ring)
                .iter()
                .map(|phi| {
                    h.elements()
                        .iter()
                        .map(|&x| phi.evaluate(x).unwrap())
                        .collect()
                })
                .collect();
            if listed != brute {
                return Err(format!(
                    "Hom(<{gens:?}> in {parent}, {r}): element sets differ"
                ));
            }
            cases += 1;
        }
    }
    Ok(cases)
}

/// Invariants of `Hom(Z_{p^i}, Z_{q^j})`: `Z_{p^min(i,j)}` when `p = q`, else 0.
pub fn check_cyclic_hom_law() -> Outcome {
    let mut cases = 0;
    let powers = [
        (2u64, 1u32),
        (2, 2),
        (2, 3),
        (2, 4),
        (3, 1),
        (3, 2),
        (5, 1),
        (7, 1),
        (11, 1),
        (13, 1),
    ];
    for &(p, i) in &powers {
        for &(q, j) in &powers {
            let g = FiniteGroup::cyclic(p.pow(i) as usize);
            let quotient = Arc::new(abelianization(&g, &g.as_subgroup()));
            let ring = Arc::new(FiniteRing::zm(q.pow(j)));
            let homs = hom_group(&quotient, &ring);
            let expected = if p == q { vec![(p, i.min(j))] } else { vec![] };
            if homs.structure != expected {
                return Err(format!(
                    "Hom(Z{}, Z{}) has structure {:?}, expected {expected:?}",
                    p.pow(i),
                    q.pow(j),
                    homs.structure
                ));
            }
            cases += 1;
        }
    }
    Ok(cases)
}

/// Characters of every report generator are additive on every composable
/// pair.
pub fn check_character_additivity(gr: &GroupRing, report: &DerivationReport) -> Outcome {
    let mut cases = 0;
    for d in report.generators() {
        if !d.character().is_additive(gr) {
            return Err("a generator's character is not additive".into());
        }
        cases += 1;
    }
    Ok(cases)
}

/// `restrict ∘ section = id` on every hom of every class, and
/// `χ − Σ section(restrict χ)` vanishes on loops for every generator.
pub fn check_section_split(gr: &GroupRing, report: &DerivationReport) -> Outcome {
    let mut cases = 0;
    for &u in gr.representatives() {
        let q = gr.centralizer_quotient(u);
        for phi in hom_group(&q, gr.ring_arc()).elements(&q, gr.ring_arc()) {
            let chi = groupoid::section(gr, u, &phi);
            let back = groupoid::restrict_to_loops(gr, &chi, u).map_err(|e| e.to_string())?;
            if back != phi {
                return Err(format!(
                    "restriction of the section at {} is not the identity",
                    gr.group().name(u)
                ));
            }
            if !chi.is_additive(gr) {
                return Err(format!("section at {} is not additive", gr.group().name(u)));
            }
            cases += 1;
        }
    }
    for d in report.generators() {
        let chi = d.character();
        let mut rest = chi.clone();
        for &u in gr.representatives() {
            let phi = groupoid::restrict_to_loops(gr, &chi, u).map_err(|e| e.to_string())?;
            rest = rest.sub(gr, &groupoid::section(gr, u, &phi));
        }
        if !groupoid::is_trivial_on_loops(gr, &rest) {
            return Err("removing the sections leaves loop values".into());
        }
        cases += 1;
    }
    Ok(cases)
}

pub fn check_leibniz(gr: &GroupRing, report: &DerivationReport) -> Outcome {
    let mut cases = 0;
    for d in report.generators() {
        if !derivation::leibniz_check(gr, d) {
            return Err("a generator breaks the Leibniz rule".into());
        }
        cases += 1;
    }
    Ok(cases)
}

/// `Σ_{g ∈ [u]} ad(g) = 0` for every class.
pub fn check_class_sums(gr: &GroupRing) -> Outcome {
    let ring = gr.ring();
    for (i, class) in gr.classes().classes.iter().enumerate() {
        let total = class.iter().fold(Derivation::zero(gr.order()), |acc, &g| {
            acc.add(ring, &derivation::ad(gr, g))
        });
        if !total.is_zero() {
            return Err(format!("class {i} has a nonzero ad sum"));
        }
    }
    Ok(gr.classes().len())
}

pub fn check_bracket(gr: &GroupRing, report: &DerivationReport) -> Outcome {
    let gens: Vec<&Derivation> = report.generators().collect();
    let mut cases = 0;
    for a in &gens {
        for b in &gens {
            let lhs = derivation::derivation_commutator(gr, a, b).character();
            let rhs = character_bracket(gr, &a.character(), &b.character());
            if lhs != rhs {
                return Err("commutator and bracket disagree".into());
            }
            cases += 1;
        }
    }
    Ok(cases)
}

/// A random integer combination of the report generators.
pub fn random_derivation(
    gr: &GroupRing,
    report: &DerivationReport,
    rng: &mut impl Rng,
) -> Derivation {
    let ring = gr.ring();
    report
        .generators()
        .fold(Derivation::zero(gr.order()), |acc, d| {
            acc.add(ring, &d.int_mul(ring, rng.random_range(0..ring.size())))
        })
}

pub fn check_round_trip(
    gr: &GroupRing,
    report: &DerivationReport,
    seed: u64,
    samples: usize,
) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let d = random_derivation(gr, report, &mut rng);
        let parts = derivation::decompose(gr, &d).map_err(|e| e.to_string())?;
        let back = derivation::reconstruct(gr, &parts).map_err(|e| e.to_string())?;
        if back != d {
            return Err("reconstruct(decompose(d)) differs from d".into());
        }
        let inner = derivation::is_inner(gr, &d).map_err(|e| e.to_string())?;
        if inner != parts.outer_is_zero() {
            return Err("is_inner disagrees with the outer part".into());
        }
    }
    Ok(samples)
}
