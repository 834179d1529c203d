//! Abelianization of subgroups and the additive hom-sets `Hom_Ab(H, A)`.
//!
//! Every additive map from `H` into a ring factors through `H/[H,H]`, so a
//! homomorphism is stored as the images of the primary cyclic generators of
//! the abelianization. `Hom(Z_{q^j}, Z_{p^i})` is zero unless `p = q`, in
//! which case it is cyclic of order `p^{min(i,j)}`, generated by
//! `1 ↦ p^{i - min(i,j)}`.

use std::fmt;
use std::sync::Arc;

use crate::abelian::{self, AbelianStructure};
use crate::error::{Error, Result};
use crate::groups::{Element, FiniteGroup, Subgroup};
use crate::rings::{FiniteRing, Scalar};

/// Smallest subgroup of `h` containing every commutator `a b a⁻¹ b⁻¹`.
pub fn commutator_subgroup(group: &FiniteGroup, h: &Subgroup) -> Subgroup {
    let els = h.elements();
    let commutators = els.iter().flat_map(|&a| {
        els.iter()
            .map(move |&b| group.mul(group.mul(a, b), group.mul(group.inv(a), group.inv(b))))
    });
    Subgroup::generated_by(group, commutators)
}

/// Primary cyclic summand of an abelianization, with a parent-group element
/// whose coset generates it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuotientComponent {
    pub prime: u64,
    pub exponent: u32,
    pub generator: Element,
}

impl QuotientComponent {
    pub fn order(&self) -> u64 {
        self.prime.pow(self.exponent)
    }
}

/// The projection `π: H → H/[H,H]` and the primary decomposition of the
/// quotient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianQuotient {
    domain: Subgroup,
    commutator: Subgroup,
    /// Coset index of each parent element, `None` outside `H`.
    projection: Vec<Option<usize>>,
    /// Minimal element of each coset.
    cosets: Vec<Element>,
    structure: AbelianStructure,
}

impl AbelianQuotient {
    pub fn domain(&self) -> &Subgroup {
        &self.domain
    }

    pub fn commutator(&self) -> &Subgroup {
        &self.commutator
    }

    pub fn size(&self) -> usize {
        self.cosets.len()
    }

    /// `π(g)` as a coset index.
    pub fn project(&self, g: Element) -> Option<usize> {
        self.projection.get(g).copied().flatten()
    }

    pub fn coset_representative(&self, coset: usize) -> Element {
        self.cosets[coset]
    }

    pub fn components(&self) -> Vec<QuotientComponent> {
        self.structure
            .factors
            .iter()
            .map(|f| QuotientComponent {
                prime: f.prime,
                exponent: f.exponent,
                generator: self.cosets[f.generator],
            })
            .collect()
    }

    pub fn invariants(&self) -> Vec<(u64, u32)> {
        self.structure.invariants()
    }

    /// Coordinates of `π(g)` against the component generators.
    pub fn coordinates(&self, g: Element) -> Option<&[u64]> {
        self.project(g).map(|c| self.structure.coords[c].as_slice())
    }

    pub fn primes(&self) -> Vec<u64> {
        let mut ps: Vec<u64> = self.structure.factors.iter().map(|f| f.prime).collect();
        ps.dedup();
        ps
    }
}

pub fn abelianization(group: &FiniteGroup, h: &Subgroup) -> AbelianQuotient {
    let commutator = commutator_subgroup(group, h);
    let mut projection = vec![None; group.order()];
    let mut cosets = Vec::new();
    for &x in h.elements() {
        if projection[x].is_some() {
            continue;
        }
        for &k in commutator.elements() {
            projection[group.mul(x, k)] = Some(cosets.len());
        }
        cosets.push(x);
    }
    let structure = abelian::decompose(cosets.len(), 0, |a, b| {
        projection[group.mul(cosets[a], cosets[b])].expect("subgroup is closed")
    });
    AbelianQuotient {
        domain: h.clone(),
        commutator,
        projection,
        cosets,
        structure,
    }
}

/// An additive homomorphism `H → A`, stored by the images of the
/// abelianization's component generators.
#[derive(Clone)]
pub struct HomAb {
    quotient: Arc<AbelianQuotient>,
    codomain: Arc<FiniteRing>,
    images: Vec<Scalar>,
}

impl PartialEq for HomAb {
    fn eq(&self, other: &Self) -> bool {
        self.quotient.domain == other.quotient.domain && self.images == other.images
    }
}

impl Eq for HomAb {}

impl fmt::Debug for HomAb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HomAb")
            .field("domain", &self.quotient.domain.elements())
            .field("images", &self.images)
            .finish()
    }
}

impl HomAb {
    /// Checks `ord(c_i) · image_i = 0` for every component.
    pub fn new(
        quotient: Arc<AbelianQuotient>,
        codomain: Arc<FiniteRing>,
        images: Vec<Scalar>,
    ) -> Result<Self> {
        let comps = quotient.components();
        if images.len() != comps.len()
            || comps
                .iter()
                .zip(&images)
                .any(|(c, &a)| codomain.int_mul(c.order(), a) != 0)
        {
            return Err(Error::NotAdditive(quotient.domain.elements()[0]));
        }
        Ok(HomAb {
            quotient,
            codomain,
            images,
        })
    }

    pub fn zero(quotient: Arc<AbelianQuotient>, codomain: Arc<FiniteRing>) -> Self {
        let images = vec![0; quotient.structure.factors.len()];
        HomAb {
            quotient,
            codomain,
            images,
        }
    }

    /// Reads off images of generators from `f` and checks that the
    /// resulting homomorphism agrees with `f` on the whole domain.
    pub fn from_values(
        quotient: Arc<AbelianQuotient>,
        codomain: Arc<FiniteRing>,
        f: impl Fn(Element) -> Scalar,
    ) -> Option<Self> {
        let images = quotient
            .components()
            .iter()
            .map(|c| f(c.generator))
            .collect();
        let hom = HomAb::new(quotient, codomain, images).ok()?;
        hom.domain()
            .elements()
            .iter()
            .all(|&g| hom.evaluate(g).ok() == Some(f(g)))
            .then_some(hom)
    }

    pub fn quotient(&self) -> &Arc<AbelianQuotient> {
        &self.quotient
    }

    pub fn domain(&self) -> &Subgroup {
        &self.quotient.domain
    }

    pub fn codomain(&self) -> &FiniteRing {
        &self.codomain
    }

    pub fn images(&self) -> &[Scalar] {
        &self.images
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(|&a| a == 0)
    }

    /// `φ(g) = φ̂(π(g))`.
    pub fn evaluate(&self, g: Element) -> Result<Scalar> {
        let coords = self
            .quotient
            .coordinates(g)
            .ok_or(Error::OutsideDomain(g))?;
        Ok(coords.iter().zip(&self.images).fold(0, |acc, (&c, &a)| {
            self.codomain.add(acc, self.codomain.int_mul(c, a))
        }))
    }

    pub fn add(&self, other: &HomAb) -> HomAb {
        let images = self
            .images
            .iter()
            .zip(&other.images)
            .map(|(&a, &b)| self.codomain.add(a, b))
            .collect();
        HomAb {
            images,
            ..self.clone()
        }
    }

    pub fn int_mul(&self, k: u64) -> HomAb {
        let images = self
            .images
            .iter()
            .map(|&a| self.codomain.int_mul(k, a))
            .collect();
        HomAb {
            images,
            ..self.clone()
        }
    }

    /// Order of this homomorphism in the additive group `Hom_Ab(H, A)`.
    pub fn additive_order(&self) -> u64 {
        self.images
            .iter()
            .map(|&a| self.codomain.additive_order(a))
            .fold(1, |acc, o| acc / abelian::gcd(acc, o) * o)
    }
}

/// `Hom_Ab(H, A)` with independent generators and their cyclic structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomGroup {
    pub generators: Vec<HomAb>,
    /// `(p, k)` per generator: the generator spans a `Z_{p^k}` summand.
    pub structure: Vec<(u64, u32)>,
}

impl HomGroup {
    pub fn is_trivial(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.structure.iter().map(|&(p, k)| p.pow(k)).product()
    }

    /// All homomorphisms, as integer combinations of the generators.
    pub fn elements(
        &self,
        quotient: &Arc<AbelianQuotient>,
        codomain: &Arc<FiniteRing>,
    ) -> Vec<HomAb> {
        let orders: Vec<u64> = self.structure.iter().map(|&(p, k)| p.pow(k)).collect();
        let mut out = Vec::with_capacity(self.size() as usize);
        let mut digits = vec![0u64; orders.len()];
        loop {
            let hom = self.generators.iter().zip(&digits).fold(
                HomAb::zero(quotient.clone(), codomain.clone()),
                |acc, (g, &c)| acc.add(&g.int_mul(c)),
            );
            out.push(hom);
            let mut i = 0;
            while i < digits.len() {
                digits[i] += 1;
                if digits[i] < orders[i] {
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
            if i == digits.len() {
                break;
            }
        }
        out
    }
}

/// Generators of `Hom_Ab(H, A)` built componentwise from the abelianization
/// of `H` and the additive decomposition of `A`.
pub fn hom_group(quotient: &Arc<AbelianQuotient>, ring: &Arc<FiniteRing>) -> HomGroup {
    let ring_parts = ring.additive_decomposition();
    let comps = quotient.components();
    let mut generators = Vec::new();
    let mut structure = Vec::new();
    for (ci, c) in comps.iter().enumerate() {
        for r in ring_parts.factors.iter().filter(|r| r.prime == c.prime) {
            let k = r.exponent.min(c.exponent);
            let mut images = vec![0; comps.len()];
            images[ci] = ring.int_mul(r.prime.pow(r.exponent - k), r.generator as Scalar);
            generators.push(HomAb {
                quotient: quotient.clone(),
                codomain: ring.clone(),
                images,
            });
            structure.push((r.prime, k));
        }
    }
    HomGroup {
        generators,
        structure,
    }
}
