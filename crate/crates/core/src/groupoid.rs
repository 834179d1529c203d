//! The groupoid of the adjoint action and its characters.
//!
//! Objects are group elements. A morphism `(u, v)` goes from `v⁻¹u` to
//! `uv⁻¹`. Composition is diagrammatic: for `φ = (u₁, v₁): a → b` and
//! `ψ = (u₂, v₂): b → c`, `then_compose(φ, ψ) = (u₂v₁, v₂v₁): a → c`.
//! Loops at `a` are exactly `(va, v)` with `v ∈ Z(a)`, and composing loops
//! multiplies the centralizer elements.
//!
//! A character is an additive function on morphisms. The character of a
//! derivation `d` takes `(h, g)` to the coefficient of `h` in `d(g)`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::abhom::HomAb;
use crate::error::{Error, Result};
use crate::group_ring::GroupRing;
use crate::groups::{Element, FiniteGroup};
use crate::rings::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Morphism {
    pub u: Element,
    pub v: Element,
}

impl Morphism {
    pub fn new(u: Element, v: Element) -> Self {
        Morphism { u, v }
    }

    /// The identity morphism `(a, e)` at `a`.
    pub fn identity(a: Element) -> Self {
        Morphism { u: a, v: 0 }
    }

    /// `v⁻¹u`
    pub fn source(&self, g: &FiniteGroup) -> Element {
        g.mul(g.inv(self.v), self.u)
    }

    /// `uv⁻¹`
    pub fn target(&self, g: &FiniteGroup) -> Element {
        g.mul(self.u, g.inv(self.v))
    }

    pub fn is_loop(&self, g: &FiniteGroup) -> bool {
        g.commutes(self.u, self.v)
    }

    /// The morphism `b → a` undoing `self: a → b`.
    pub fn inverse(&self, g: &FiniteGroup) -> Morphism {
        let vi = g.inv(self.v);
        Morphism {
            u: g.mul(g.mul(vi, self.u), vi),
            v: vi,
        }
    }
}

/// `φ` followed by `ψ`.
pub fn then_compose(g: &FiniteGroup, phi: Morphism, psi: Morphism) -> Result<Morphism> {
    let (t, s) = (phi.target(g), psi.source(g));
    if t != s {
        return Err(Error::NotComposable {
            target: t,
            source_obj: s,
        });
    }
    Ok(Morphism {
        u: g.mul(psi.u, phi.v),
        v: g.mul(psi.v, phi.v),
    })
}

/// `Hom(a, a)`, paired with the centralizer element each loop corresponds to.
pub fn loops_at(g: &FiniteGroup, a: Element) -> Vec<(Element, Morphism)> {
    g.centralizer(a)
        .elements()
        .iter()
        .map(|&v| (v, Morphism::new(g.mul(v, a), v)))
        .collect()
}

/// Every morphism with source `a`: one per `v ∈ G`.
pub fn morphisms_from(g: &FiniteGroup, a: Element) -> Vec<Morphism> {
    g.elements()
        .map(|v| Morphism::new(g.mul(v, a), v))
        .collect()
}

/// `Hom(a, b)`
pub fn hom_set(g: &FiniteGroup, a: Element, b: Element) -> Vec<Morphism> {
    morphisms_from(g, a)
        .into_iter()
        .filter(|m| m.target(g) == b)
        .collect()
}

/// A function on morphisms, stored sparsely by `(u, v)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Character {
    values: BTreeMap<(Element, Element), Scalar>,
}

impl Character {
    pub fn zero() -> Self {
        Character::default()
    }

    pub fn get(&self, m: Morphism) -> Scalar {
        self.values.get(&(m.u, m.v)).copied().unwrap_or(0)
    }

    pub fn set(&mut self, m: Morphism, value: Scalar) {
        if value == 0 {
            self.values.remove(&(m.u, m.v));
        } else {
            self.values.insert((m.u, m.v), value);
        }
    }

    /// Nonzero values in `(u, v)` order.
    pub fn support(&self) -> impl Iterator<Item = (Morphism, Scalar)> + '_ {
        self.values
            .iter()
            .map(|(&(u, v), &x)| (Morphism::new(u, v), x))
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn add(&self, gr: &GroupRing, other: &Character) -> Character {
        let mut out = self.clone();
        for (m, x) in other.support() {
            out.set(m, gr.ring().add(out.get(m), x));
        }
        out
    }

    pub fn sub(&self, gr: &GroupRing, other: &Character) -> Character {
        let mut out = self.clone();
        for (m, x) in other.support() {
            out.set(m, gr.ring().sub(out.get(m), x));
        }
        out
    }

    /// Checks `χ(φ then ψ) = χ(φ) + χ(ψ)` over every composable pair.
    pub fn is_additive(&self, gr: &GroupRing) -> bool {
        let g = gr.group();
        let ring = gr.ring();
        crate::par::all_range(g.order(), |a| {
            morphisms_from(g, a).into_iter().all(|phi| {
                morphisms_from(g, phi.target(g)).into_iter().all(|psi| {
                    let comp = then_compose(g, phi, psi).expect("composable by construction");
                    self.get(comp) == ring.add(self.get(phi), self.get(psi))
                })
            })
        })
    }
}

/// Character of `ad_a`, by the four-case formula on `(h, g)`.
pub fn ad_character(gr: &GroupRing, a: Element) -> Character {
    let g = gr.group();
    let ring = gr.ring();
    let mut chi = Character::zero();
    for u in g.elements() {
        for v in g.elements() {
            let m = Morphism::new(u, v);
            let at_target = m.target(g) == a;
            let at_source = m.source(g) == a;
            let value = match (at_target, at_source) {
                (true, false) => ring.one(),
                (false, true) => ring.neg(ring.one()),
                _ => 0,
            };
            chi.set(m, value);
        }
    }
    chi
}

pub fn is_trivial_on_loops(gr: &GroupRing, chi: &Character) -> bool {
    first_nonzero_loop(gr, chi).is_none()
}

fn first_nonzero_loop(gr: &GroupRing, chi: &Character) -> Option<Morphism> {
    chi.support()
        .map(|(m, _)| m)
        .find(|m| m.is_loop(gr.group()))
}

/// Vertex function `p` on the class with index `class` such that
/// `χ(φ) = p(target φ) − p(source φ)`, normalized by `p(representative) = 0`.
///
/// Each object `x` is reached from the representative through `(g·u₀, g)`
/// for the smallest `g` with `g u₀ g⁻¹ = x`.
pub fn potential(gr: &GroupRing, chi: &Character, class: usize) -> Result<Vec<(Element, Scalar)>> {
    let g = gr.group();
    let members = &gr.classes().classes[class];
    for &x in members {
        for (_, lp) in loops_at(g, x) {
            if chi.get(lp) != 0 {
                return Err(Error::NotTrivialOnLoops { u: lp.u, v: lp.v });
            }
        }
    }
    let rep = gr.classes().representatives[class];
    Ok(members
        .iter()
        .map(|&x| {
            let c = g
                .conjugator(rep, x)
                .expect("x is conjugate to the representative");
            (x, chi.get(Morphism::new(g.mul(c, rep), c)))
        })
        .collect())
}

/// Extends a homomorphism on `Z(u_rep) ≅ Hom(u_rep, u_rep)` to a character on
/// the whole component of `u_rep`.
///
/// Each object `x` gets the transport `θ_x = (c·x, c): x → u_rep` with `c` the
/// smallest element such that `c x c⁻¹ = u_rep`. A morphism `ψ: x → y`
/// receives `φ(θ_x⁻¹ then ψ then θ_y)`. On a loop this is the conjugated value
/// `φ(c v c⁻¹)`, independent of the transport chosen. Off loops the values are
/// generally nonzero: a character that vanishes off loops but not on them
/// cannot be additive once the class has more than one element.
pub fn section(gr: &GroupRing, u_rep: Element, phi: &HomAb) -> Character {
    let g = gr.group();
    let mut chi = Character::zero();
    if phi.is_zero() {
        return chi;
    }
    let transports = Transports::new(gr, u_rep);
    for &x in transports.objects() {
        for psi in morphisms_from(g, x) {
            let value = phi
                .evaluate(transports.carry(g, psi))
                .expect("centralizer element");
            chi.set(psi, value);
        }
    }
    chi
}

/// Canonical morphisms from every object of a class to its representative.
#[derive(Debug, Clone)]
pub struct Transports {
    objects: Vec<Element>,
    /// `conjugators[x]` is the smallest `c` with `c x c⁻¹ = u_rep`, or `None`
    /// outside the class.
    conjugators: Vec<Option<Element>>,
}

impl Transports {
    pub fn new(gr: &GroupRing, u_rep: Element) -> Self {
        let g = gr.group();
        let objects = gr.classes().classes[gr.class_index(u_rep)].clone();
        let mut conjugators = vec![None; g.order()];
        for &x in &objects {
            conjugators[x] = g.conjugator(x, u_rep);
        }
        Transports {
            objects,
            conjugators,
        }
    }

    pub fn objects(&self) -> &[Element] {
        &self.objects
    }

    /// `θ_x: x → u_rep`
    pub fn to_representative(&self, g: &FiniteGroup, x: Element) -> Morphism {
        let c = self.conjugators[x].expect("object lies in the class");
        Morphism::new(g.mul(c, x), c)
    }

    /// The centralizer element of the loop `θ_x⁻¹ then ψ then θ_y` at the
    /// representative, for `ψ: x → y`. Equals `c_y v c_x⁻¹` for `ψ = (u, v)`.
    pub fn carry(&self, g: &FiniteGroup, psi: Morphism) -> Element {
        let (x, y) = (psi.source(g), psi.target(g));
        let back = self.to_representative(g, x).inverse(g);
        let there = then_compose(g, back, psi).expect("θ_x⁻¹ ends at the source of ψ");
        let lp =
            then_compose(g, there, self.to_representative(g, y)).expect("ψ ends where θ_y starts");
        debug_assert!(lp.is_loop(g));
        lp.v
    }
}

/// `v ↦ χ((v·u_rep, v))` on `Z(u_rep)`.
pub fn restrict_to_loops(gr: &GroupRing, chi: &Character, u_rep: Element) -> Result<HomAb> {
    let g = gr.group();
    let quotient = gr.centralizer_quotient(u_rep);
    HomAb::from_values(quotient, gr.ring_arc().clone(), |v| {
        chi.get(Morphism::new(g.mul(v, u_rep), v))
    })
    .ok_or(Error::NotAdditive(u_rep))
}

/// `{χ₁, χ₂}(a, g) = Σ_h χ₁(a, h) χ₂(h, g) − χ₂(a, h) χ₁(h, g)`
pub fn character_bracket(gr: &GroupRing, chi1: &Character, chi2: &Character) -> Character {
    let ring = gr.ring();
    // index each character by its second coordinate: h ↦ [(a, χ(a, h))]
    let by_column = |chi: &Character| {
        let mut cols: BTreeMap<Element, Vec<(Element, Scalar)>> = BTreeMap::new();
        for (m, x) in chi.support() {
            cols.entry(m.v).or_default().push((m.u, x));
        }
        cols
    };
    let (cols1, cols2) = (by_column(chi1), by_column(chi2));
    let mut out = Character::zero();
    let mut accumulate =
        |left: &BTreeMap<Element, Vec<(Element, Scalar)>>, right: &Character, sign: bool| {
            for (m, y) in right.support() {
                let (h, g) = (m.u, m.v);
                for &(a, x) in left.get(&h).map(Vec::as_slice).unwrap_or(&[]) {
                    let key = Morphism::new(a, g);
                    let term = ring.mul(x, y);
                    let updated = if sign {
                        ring.add(out.get(key), term)
                    } else {
                        ring.sub(out.get(key), term)
                    };
                    out.set(key, updated);
                }
            }
        };
    accumulate(&cols1, chi2, true);
    accumulate(&cols2, chi1, false);
    out
}

/// Graphviz rendering, one cluster per conjugacy class.
pub fn to_dot(gr: &GroupRing, include_loops: bool) -> String {
    let g = gr.group();
    let mut out = String::from("digraph adjoint_groupoid {\n");
    for (ci, class) in gr.classes().classes.iter().enumerate() {
        let _ = writeln!(out, "  subgraph cluster_{ci} {{");
        let _ = writeln!(out, "    label=\"[{}]\";", escape(g.name(class[0])));
        for &x in class {
            let _ = writeln!(out, "    n{x} [label=\"{}\"];", escape(g.name(x)));
        }
        for &x in class {
            for m in morphisms_from(g, x) {
                if !include_loops && m.is_loop(g) {
                    continue;
                }
                let _ = writeln!(
                    out,
                    "    n{} -> n{} [label=\"({},{})\"];",
                    x,
                    m.target(g),
                    escape(g.name(m.u)),
                    escape(g.name(m.v))
                );
            }
        }
        out.push_str("  }\n");
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
