//! The group ring `A[G]` and its elements.

use std::sync::Arc;

use crate::abhom::{self, AbelianQuotient};
use crate::error::{Error, Result};
use crate::groups::{self, ConjugacyClassSet, Element, FiniteGroup, GroupSpec};
use crate::rings::{self, FiniteRing, RingSpec, Scalar};

/// Size caps applied when building from specs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_group_order: usize,
    pub max_ring_size: u64,
    /// Largest group the brute-force oracle accepts.
    pub max_oracle_group_order: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_group_order: groups::DEFAULT_MAX_GROUP_ORDER,
            max_ring_size: rings::DEFAULT_MAX_RING_SIZE,
            max_oracle_group_order: 24,
        }
    }
}

/// Shared context: a group, a coefficient ring, and the conjugacy data every
/// derivation computation needs.
#[derive(Debug, Clone)]
pub struct GroupRing {
    group: Arc<FiniteGroup>,
    ring: Arc<FiniteRing>,
    classes: ConjugacyClassSet,
    /// Abelianized centralizer of each class representative, in class order.
    centralizers: Vec<Arc<AbelianQuotient>>,
}

impl GroupRing {
    pub fn new(group: FiniteGroup, ring: FiniteRing) -> Self {
        let classes = group.conjugacy_classes();
        let centralizers = classes
            .representatives
            .iter()
            .map(|&u| Arc::new(abhom::abelianization(&group, &group.centralizer(u))))
            .collect();
        GroupRing {
            group: Arc::new(group),
            ring: Arc::new(ring),
            classes,
            centralizers,
        }
    }

    pub fn from_specs(group: &GroupSpec, ring: &RingSpec, limits: &Limits) -> Result<Self> {
        let g = groups::construct_group(group, limits.max_group_order)?;
        let r = rings::construct_ring(ring, limits.max_ring_size)?;
        Ok(GroupRing::new(g, r))
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn ring_arc(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn classes(&self) -> &ConjugacyClassSet {
        &self.classes
    }

    pub fn representatives(&self) -> &[Element] {
        &self.classes.representatives
    }

    pub fn class_index(&self, x: Element) -> usize {
        self.classes.class_of[x]
    }

    /// `Z(u)/[Z(u), Z(u)]`, cached for class representatives.
    pub fn centralizer_quotient(&self, u: Element) -> Arc<AbelianQuotient> {
        let class = self.class_index(u);
        if self.classes.representatives[class] == u {
            self.centralizers[class].clone()
        } else {
            Arc::new(abhom::abelianization(
                &self.group,
                &self.group.centralizer(u),
            ))
        }
    }

    /// `G/[G, G]`; the centralizer of the identity is the whole group.
    pub fn group_quotient(&self) -> Arc<AbelianQuotient> {
        self.centralizers[0].clone()
    }

    pub fn zero(&self) -> GroupRingElement {
        GroupRingElement {
            coeffs: vec![0; self.order()],
        }
    }

    /// The basis element `g`.
    pub fn basis(&self, g: Element) -> GroupRingElement {
        let mut x = self.zero();
        x.coeffs[g] = self.ring.one();
        x
    }

    pub fn element(&self, coeffs: Vec<Scalar>) -> Result<GroupRingElement> {
        if coeffs.len() != self.order() || coeffs.iter().any(|&c| c as u64 >= self.ring.size()) {
            return Err(Error::Mismatch);
        }
        Ok(GroupRingElement { coeffs })
    }

    /// `Σ_{g ∈ class} g`
    pub fn class_sum(&self, class: usize) -> GroupRingElement {
        let mut x = self.zero();
        for &g in &self.classes.classes[class] {
            x.coeffs[g] = self.ring.one();
        }
        x
    }

    pub fn add(&self, x: &GroupRingElement, y: &GroupRingElement) -> GroupRingElement {
        GroupRingElement {
            coeffs: x
                .coeffs
                .iter()
                .zip(&y.coeffs)
                .map(|(&a, &b)| self.ring.add(a, b))
                .collect(),
        }
    }

    pub fn sub(&self, x: &GroupRingElement, y: &GroupRingElement) -> GroupRingElement {
        GroupRingElement {
            coeffs: x
                .coeffs
                .iter()
                .zip(&y.coeffs)
                .map(|(&a, &b)| self.ring.sub(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, a: Scalar, x: &GroupRingElement) -> GroupRingElement {
        GroupRingElement {
            coeffs: x.coeffs.iter().map(|&c| self.ring.mul(a, c)).collect(),
        }
    }

    /// Convolution product: `(xy)_k = Σ_{gh = k} x_g y_h`.
    pub fn gr_mul(&self, x: &GroupRingElement, y: &GroupRingElement) -> GroupRingElement {
        let mut out = self.zero();
        for (g, &a) in x.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (h, &b) in y.coeffs.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let k = self.group.mul(g, h);
                out.coeffs[k] = self.ring.add(out.coeffs[k], self.ring.mul(a, b));
            }
        }
        out
    }

    /// `xy - yx`
    pub fn commutator(&self, x: &GroupRingElement, y: &GroupRingElement) -> GroupRingElement {
        self.sub(&self.gr_mul(x, y), &self.gr_mul(y, x))
    }

    /// Renders an element as `2*(12) + 3*e`, omitting zero terms.
    pub fn display(&self, x: &GroupRingElement) -> String {
        let terms: Vec<String> = x
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(g, &c)| {
                if c == self.ring.one() {
                    self.group.name(g).to_string()
                } else {
                    format!("{}*{}", self.ring.display(c), self.group.name(g))
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

/// `Σ λ^g g`, stored densely by group element index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupRingElement {
    pub coeffs: Vec<Scalar>,
}

impl GroupRingElement {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z4_s3() -> GroupRing {
        GroupRing::new(FiniteGroup::symmetric(3), FiniteRing::zm(4))
    }

    #[test]
    fn identity_is_neutral() {
        let gr = z4_s3();
        let x = gr.element(vec![1, 2, 3, 0, 1, 2]).unwrap();
        assert_eq!(gr.gr_mul(&gr.basis(0), &x), x);
        assert_eq!(gr.gr_mul(&x, &gr.basis(0)), x);
    }

    #[test]
    fn zero_divisor_in_z4_s3() {
        let gr = z4_s3();
        let t = gr.group().index_of("(12)").unwrap();
        let a = gr.add(&gr.basis(0), &gr.basis(t));
        let b = gr.add(&gr.basis(0), &gr.scale(3, &gr.basis(t)));
        assert!(gr.gr_mul(&a, &b).is_zero());
    }

    #[test]
    fn class_sums_are_central() {
        let gr = GroupRing::new(FiniteGroup::dihedral(3), FiniteRing::gf(2, 2));
        for c in 0..gr.classes().len() {
            let k = gr.class_sum(c);
            for g in gr.group().elements() {
                assert!(gr.commutator(&k, &gr.basis(g)).is_zero());
            }
        }
    }

    #[test]
    fn product_is_associative_and_distributive() {
        let gr = z4_s3();
        let xs: Vec<GroupRingElement> = (0..4)
            .map(|s| {
                gr.element((0..6).map(|i| ((i * 7 + s * 3) % 4) as Scalar).collect())
                    .unwrap()
            })
            .collect();
        for x in &xs {
            for y in &xs {
                for z in &xs {
                    assert_eq!(
                        gr.gr_mul(&gr.gr_mul(x, y), z),
                        gr.gr_mul(x, &gr.gr_mul(y, z))
                    );
                    assert_eq!(
                        gr.gr_mul(x, &gr.add(y, z)),
                        gr.add(&gr.gr_mul(x, y), &gr.gr_mul(x, z))
                    );
                }
            }
        }
    }

    #[test]
    fn spec_limits_apply() {
        let err = GroupRing::from_specs(
            &GroupSpec::Symmetric { n: 5 },
            &RingSpec::Zm { m: 4 },
            &Limits::default(),
        )
        .unwrap_err();
        assert!(err.is_size_limit());
    }
}
