//! Derivations of `A[G]` as coefficient tables.
//!
//! A derivation is stored as its `|G| × |G|` table with entry `(h, g)` the
//! coefficient of `h` in `d(g)`. This is exactly the character value on the
//! morphism `(h, g)`, so the table and character views share indices.

use std::sync::Arc;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::abelian;
use crate::abhom::{self, HomAb};
use crate::error::{Error, Result};
use crate::group_ring::{GroupRing, GroupRingElement};
use crate::groupoid::{self, Character, Morphism, Transports};
use crate::groups::{Element, FiniteGroup};
use crate::par;
use crate::rings::{FiniteRing, RingSpec, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Derivation {
    n: usize,
    entries: Vec<Scalar>,
}

impl Derivation {
    pub fn zero(n: usize) -> Self {
        Derivation {
            n,
            entries: vec![0; n * n],
        }
    }

    /// Row-major: `entries[h * n + g]`.
    pub fn from_entries(n: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::Mismatch);
        }
        Ok(Derivation { n, entries })
    }

    pub fn from_rows(rows: &[Vec<Scalar>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Mismatch);
        }
        Ok(Derivation {
            n,
            entries: rows.concat(),
        })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    /// Coefficient of `h` in `d(g)`.
    pub fn get(&self, h: Element, g: Element) -> Scalar {
        self.entries[h * self.n + g]
    }

    pub fn set(&mut self, h: Element, g: Element, value: Scalar) {
        self.entries[h * self.n + g] = value;
    }

    pub fn rows(&self) -> Vec<Vec<Scalar>> {
        self.entries
            .chunks(self.n.max(1))
            .map(<[Scalar]>::to_vec)
            .take(self.n)
            .collect()
    }

    /// `d(g)`
    pub fn column(&self, g: Element) -> GroupRingElement {
        GroupRingElement {
            coeffs: (0..self.n).map(|h| self.get(h, g)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }

    pub fn add(&self, ring: &FiniteRing, other: &Derivation) -> Derivation {
        self.zip(other, |a, b| ring.add(a, b))
    }

    pub fn sub(&self, ring: &FiniteRing, other: &Derivation) -> Derivation {
        self.zip(other, |a, b| ring.sub(a, b))
    }

    pub fn scale(&self, ring: &FiniteRing, a: Scalar) -> Derivation {
        Derivation {
            n: self.n,
            entries: self.entries.iter().map(|&x| ring.mul(a, x)).collect(),
        }
    }

    pub fn int_mul(&self, ring: &FiniteRing, k: u64) -> Derivation {
        Derivation {
            n: self.n,
            entries: self.entries.iter().map(|&x| ring.int_mul(k, x)).collect(),
        }
    }

    fn zip(&self, other: &Derivation, f: impl Fn(Scalar, Scalar) -> Scalar) -> Derivation {
        assert_eq!(self.n, other.n, "derivations over different groups");
        Derivation {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    pub fn character(&self) -> Character {
        let mut chi = Character::zero();
        for h in 0..self.n {
            for g in 0..self.n {
                chi.set(Morphism::new(h, g), self.get(h, g));
            }
        }
        chi
    }

    pub fn from_character(n: usize, chi: &Character) -> Derivation {
        let mut d = Derivation::zero(n);
        for (m, x) in chi.support() {
            d.set(m.u, m.v, x);
        }
        d
    }

    /// Additive order of the table as an element of `A^{n²}`.
    pub fn additive_order(&self, ring: &FiniteRing) -> u64 {
        self.entries
            .iter()
            .map(|&a| ring.additive_order(a))
            .fold(1, |acc, o| acc / abelian::gcd(acc, o) * o)
    }
}

/// `ad_a` for a group element `a`.
pub fn ad(gr: &GroupRing, a: Element) -> Derivation {
    let g = gr.group();
    let ring = gr.ring();
    let mut d = Derivation::zero(g.order());
    for x in g.elements() {
        let (left, right) = (g.mul(a, x), g.mul(x, a));
        if left != right {
            d.set(left, x, ring.one());
            d.set(right, x, ring.neg(ring.one()));
        }
    }
    d
}

/// `ad_y: x ↦ yx − xy` for a general element `y` of `A[G]`.
pub fn ad_element(gr: &GroupRing, y: &GroupRingElement) -> Derivation {
    let n = gr.order();
    let mut d = Derivation::zero(n);
    for g in 0..n {
        let col = gr.commutator(y, &gr.basis(g));
        for (h, &c) in col.coeffs.iter().enumerate() {
            d.set(h, g, c);
        }
    }
    d
}

/// Linear extension of the columns: `d(Σ λ^g g) = Σ λ^g d(g)`.
pub fn apply(gr: &GroupRing, d: &Derivation, x: &GroupRingElement) -> GroupRingElement {
    let ring = gr.ring();
    let mut out = gr.zero();
    for (g, &lambda) in x.coeffs.iter().enumerate() {
        if lambda == 0 {
            continue;
        }
        for h in 0..d.n {
            let c = d.get(h, g);
            if c != 0 {
                out.coeffs[h] = ring.add(out.coeffs[h], ring.mul(lambda, c));
            }
        }
    }
    out
}

/// `d(g₁g₂) = d(g₁)g₂ + g₁d(g₂)` for every pair of basis elements.
pub fn leibniz_check(gr: &GroupRing, d: &Derivation) -> bool {
    let g = gr.group();
    let ring = gr.ring();
    if d.n != g.order() {
        return false;
    }
    par::all_range(g.order(), |g1| {
        let g1_inv = g.inv(g1);
        g.elements().all(|g2| {
            let prod = g.mul(g1, g2);
            let g2_inv = g.inv(g2);
            g.elements().all(|h| {
                let rhs = ring.add(d.get(g.mul(h, g2_inv), g1), d.get(g.mul(g1_inv, h), g2));
                d.get(h, prod) == rhs
            })
        })
    })
}

/// `{ad_g : g ∉ representatives}`, ascending by `g`.
pub fn inner_basis(gr: &GroupRing) -> Vec<(Element, Derivation)> {
    let labels: Vec<Element> = gr
        .group()
        .elements()
        .filter(|&g| !gr.classes().is_representative(g))
        .collect();
    let mats = par::map_slice(&labels, |&g| ad(gr, g));
    labels.into_iter().zip(mats).collect()
}

/// A derivation of a finite group ring is inner iff its character vanishes on
/// every loop.
pub fn is_inner(gr: &GroupRing, d: &Derivation) -> Result<bool> {
    if !leibniz_check(gr, d) {
        return Err(Error::NotADerivation);
    }
    Ok(vanishes_on_loops(gr, d))
}

fn vanishes_on_loops(gr: &GroupRing, d: &Derivation) -> bool {
    let g = gr.group();
    par::all_range(g.order(), |v| {
        g.elements().all(|u| !g.commutes(u, v) || d.get(u, v) == 0)
    })
}

/// The derivation attached to `φ ∈ Hom(Z(u_rep), A)`.
///
/// On a loop `(u, v)` at an object `x` of the class of `u_rep` the entry is
/// `φ(c v c⁻¹)` with `c` the smallest element such that `c x c⁻¹ = u_rep`.
/// Any other morphism `(u, v): x → y` of that component gets `φ(c_y v c_x⁻¹)`,
/// which keeps the table additive. Entries outside the component are zero.
pub fn outer_generator(gr: &GroupRing, u_rep: Element, phi: &HomAb) -> Result<Derivation> {
    let g = gr.group();
    let centralizer = g.centralizer(u_rep);
    if phi.domain().elements() != centralizer.elements() {
        return Err(Error::Mismatch);
    }
    let mut d = Derivation::zero(g.order());
    if phi.is_zero() {
        return Ok(d);
    }
    let transports = Transports::new(gr, u_rep);
    for &x in transports.objects() {
        for psi in groupoid::morphisms_from(g, x) {
            d.set(psi.u, psi.v, phi.evaluate(transports.carry(g, psi))?);
        }
    }
    Ok(d)
}

/// `d(x) = τ(x)·xz` for central `z` and `τ ∈ Hom(G, A)`.
pub fn central_derivation(gr: &GroupRing, z: Element, tau: &HomAb) -> Result<Derivation> {
    let g = gr.group();
    if !g.is_central(z) {
        return Err(Error::NotCentral(z));
    }
    if tau.domain().order() != g.order() {
        return Err(Error::Mismatch);
    }
    let mut d = Derivation::zero(g.order());
    for x in g.elements() {
        d.set(g.mul(x, z), x, tau.evaluate(x)?);
    }
    Ok(d)
}

/// Inner and outer parts of a derivation, one entry per conjugacy class.
#[derive(Debug, Clone)]
pub struct Decomposition {
    /// Vertex function on each class; `d_inner = Σ_g p(g)·ad_g`.
    pub potentials: Vec<Vec<(Element, Scalar)>>,
    /// Restriction to the loops at each class representative.
    pub outer: Vec<HomAb>,
}

impl Decomposition {
    pub fn outer_is_zero(&self) -> bool {
        self.outer.iter().all(HomAb::is_zero)
    }
}

pub fn decompose(gr: &GroupRing, d: &Derivation) -> Result<Decomposition> {
    if !leibniz_check(gr, d) {
        return Err(Error::NotADerivation);
    }
    let chi = d.character();
    let reps = gr.representatives();
    let outer = reps
        .iter()
        .map(|&u| groupoid::restrict_to_loops(gr, &chi, u))
        .collect::<Result<Vec<_>>>()?;
    let loop_part = reps
        .iter()
        .zip(&outer)
        .fold(Character::zero(), |acc, (&u, phi)| {
            acc.add(gr, &groupoid::section(gr, u, phi))
        });
    let rest = chi.sub(gr, &loop_part);
    let potentials = (0..reps.len())
        .map(|c| groupoid::potential(gr, &rest, c))
        .collect::<Result<Vec<_>>>()?;
    Ok(Decomposition { potentials, outer })
}

/// `Σ_g p(g)·ad_g + Σ_i outer_generator(u_i, φ_i)`
pub fn reconstruct(gr: &GroupRing, parts: &Decomposition) -> Result<Derivation> {
    let ring = gr.ring();
    let mut d = Derivation::zero(gr.order());
    for &(g, p) in parts.potentials.iter().flatten() {
        if p != 0 {
            d = d.add(ring, &ad(gr, g).scale(ring, p));
        }
    }
    for (&u, phi) in gr.representatives().iter().zip(&parts.outer) {
        d = d.add(ring, &outer_generator(gr, u, phi)?);
    }
    Ok(d)
}

/// `d₁∘d₂ − d₂∘d₁`, evaluated column by column through `apply`.
pub fn derivation_commutator(gr: &GroupRing, d1: &Derivation, d2: &Derivation) -> Derivation {
    let n = gr.order();
    let cols = par::map_range(n, |g| {
        let x = gr.basis(g);
        let a = apply(gr, d1, &apply(gr, d2, &x));
        let b = apply(gr, d2, &apply(gr, d1, &x));
        gr.sub(&a, &b)
    });
    let mut out = Derivation::zero(n);
    for (g, col) in cols.into_iter().enumerate() {
        for (h, c) in col.coeffs.into_iter().enumerate() {
            out.set(h, g, c);
        }
    }
    out
}

/// One generator of the outer part.
#[derive(Debug, Clone)]
pub struct OuterGenerator {
    pub class_representative: Element,
    pub hom: HomAb,
    pub derivation: Derivation,
    /// Order of the hom in its hom group; this multiple of the generator is inner.
    pub additive_order: u64,
    /// `(p, k)` with `additive_order = p^k`.
    pub summand: (u64, u32),
}

/// Outcome of the outer-vanishing criteria.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Criteria {
    /// No prime divides both `|(A, +)|` and `|G/[G,G]|`. Read as a prediction
    /// that every derivation is inner.
    pub prime_disjointness_criterion: bool,
    /// Every `Hom(Z(u), A)` vanishes, so every derivation is inner.
    pub exact_outer_trivial: bool,
    /// `gcd(ord(g), m) = 1` for every `g`; only defined for `A = Z/mZ`.
    pub gcd_sufficient: Option<bool>,
    /// The prime criterion disagrees with the exact answer.
    pub conflict: bool,
}

/// Evaluates the criteria for a finite ring or the torsion-free tag.
pub fn outer_vanishing_check(
    group: &FiniteGroup,
    ring: &RingSpec,
    max_ring_size: u64,
) -> Result<Criteria> {
    if ring.is_torsion_free_tag() {
        // (A, +) has no torsion: no prime can meet the abelianization and no
        // nonzero map from a finite group lands in A.
        return Ok(Criteria {
            prime_disjointness_criterion: true,
            exact_outer_trivial: true,
            gcd_sufficient: None,
            conflict: false,
        });
    }
    let r = crate::rings::construct_ring(ring, max_ring_size)?;
    let gr = GroupRing::new(group.clone(), r);
    Ok(criteria(&gr))
}

pub fn criteria(gr: &GroupRing) -> Criteria {
    let g = gr.group();
    let ring = gr.ring_arc();
    let ring_primes: Vec<u64> = abelian::prime_factors(ring.size())
        .into_iter()
        .map(|(p, _)| p)
        .collect();
    let quotient_primes = gr.group_quotient().primes();
    let prime_disjointness_criterion = !ring_primes.iter().any(|p| quotient_primes.contains(p));
    let exact_outer_trivial = gr
        .representatives()
        .iter()
        .all(|&u| abhom::hom_group(&gr.centralizer_quotient(u), ring).is_trivial());
    let gcd_sufficient = ring.modulus().map(|m| {
        g.elements()
            .all(|x| abelian::gcd(g.element_order(x), m) == 1)
    });
    Criteria {
        prime_disjointness_criterion,
        exact_outer_trivial,
        gcd_sufficient,
        conflict: prime_disjointness_criterion != exact_outer_trivial,
    }
}

/// `Der(A[G]) ≅ Inn ⊕ ⊕_u Hom(Z(u), A)`, with explicit generators.
#[derive(Debug, Clone)]
pub struct DerivationReport {
    pub representatives: Vec<Element>,
    pub inner_basis: Vec<(Element, Derivation)>,
    pub inner_rank: usize,
    pub out_generators: Vec<OuterGenerator>,
    /// Primary invariants `(p, k)` of `Der` as an abelian group.
    pub module_structure: Vec<(u64, u32)>,
    pub criteria: Criteria,
}

impl DerivationReport {
    pub fn cardinality(&self) -> BigUint {
        invariants_cardinality(&self.module_structure)
    }

    /// Every generator, inner first.
    pub fn generators(&self) -> impl Iterator<Item = &Derivation> {
        self.inner_basis
            .iter()
            .map(|(_, d)| d)
            .chain(self.out_generators.iter().map(|o| &o.derivation))
    }
}

pub fn invariants_cardinality(invariants: &[(u64, u32)]) -> BigUint {
    invariants.iter().fold(BigUint::from(1u32), |acc, &(p, k)| {
        acc * BigUint::from(p).pow(k)
    })
}

/// Sorts invariants by prime, larger exponents first within a prime.
pub fn canonical_invariants(mut invariants: Vec<(u64, u32)>) -> Vec<(u64, u32)> {
    invariants.retain(|&(_, k)| k > 0);
    invariants.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
    invariants
}

pub fn derivation_module_report(gr: &GroupRing) -> Result<DerivationReport> {
    let ring: &Arc<FiniteRing> = gr.ring_arc();
    let inner_basis = inner_basis(gr);
    let inner_rank = inner_basis.len();
    let reps = gr.representatives().to_vec();
    let per_class = par::map_slice(&reps, |&u| -> Result<Vec<OuterGenerator>> {
        let homs = abhom::hom_group(&gr.centralizer_quotient(u), ring);
        homs.generators
            .iter()
            .zip(&homs.structure)
            .map(|(phi, &(p, k))| {
                Ok(OuterGenerator {
                    class_representative: u,
                    hom: phi.clone(),
                    derivation: outer_generator(gr, u, phi)?,
                    additive_order: p.pow(k),
                    summand: (p, k),
                })
            })
            .collect()
    });
    let mut out_generators = Vec::new();
    for gens in per_class {
        out_generators.extend(gens?);
    }
    let ring_invariants = ring.additive_decomposition().invariants();
    let mut module = Vec::new();
    for _ in 0..inner_rank {
        module.extend(ring_invariants.iter().copied());
    }
    module.extend(out_generators.iter().map(|o| o.summand));
    Ok(DerivationReport {
        representatives: reps,
        inner_basis,
        inner_rank,
        out_generators,
        module_structure: canonical_invariants(module),
        criteria: criteria(gr),
    })
}
