//! Serializable documents for reports, criteria and verdicts.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::abhom::AbelianQuotient;
use crate::derivation::{Criteria, DerivationReport};
use crate::group_ring::GroupRing;
use crate::groups::GroupSpec;
use crate::oracle::Verdict;
use crate::rings::{RingSpec, Scalar};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Invariant {
    pub prime: u64,
    pub exponent: u32,
}

fn invariants(list: &[(u64, u32)]) -> Vec<Invariant> {
    list.iter()
        .map(|&(prime, exponent)| Invariant { prime, exponent })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassEntry {
    pub representative: String,
    pub size: usize,
    pub centralizer_order: usize,
    /// Primary invariants of the abelianized centralizer.
    pub centralizer_abelianization: Vec<Invariant>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InnerEntry {
    pub label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<Scalar>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomImage {
    /// A centralizer element whose class generates one cyclic factor.
    pub generator: String,
    pub image: Scalar,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OuterEntry {
    pub class_representative: String,
    pub hom_images: Vec<HomImage>,
    pub additive_order: u64,
    /// Presentation relation, e.g. `2*(D1 + Inn) = Inn`.
    pub relation: String,
    /// Row `h`, column `g`: coefficient of `h` in `d(g)`.
    pub matrix: Vec<Vec<Scalar>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub group: GroupSpec,
    pub ring: RingSpec,
    pub group_order: usize,
    pub ring_size: u64,
    pub element_names: Vec<String>,
    pub classes: Vec<ClassEntry>,
    pub inner_rank: usize,
    pub inner_basis: Vec<InnerEntry>,
    pub outer_generators: Vec<OuterEntry>,
    pub module_structure: Vec<Invariant>,
    pub cardinality: String,
    pub criteria: Criteria,
}

fn quotient_invariants(q: &AbelianQuotient) -> Vec<Invariant> {
    invariants(&q.invariants())
}

pub fn report_document(
    gr: &GroupRing,
    group: &GroupSpec,
    ring: &RingSpec,
    report: &DerivationReport,
    include_inner_matrices: bool,
) -> ReportDocument {
    let g = gr.group();
    let classes = gr
        .classes()
        .classes
        .iter()
        .zip(gr.representatives())
        .map(|(members, &u)| {
            let q = gr.centralizer_quotient(u);
            ClassEntry {
                representative: g.name(u).to_string(),
                size: members.len(),
                centralizer_order: q.domain().order(),
                centralizer_abelianization: quotient_invariants(&q),
            }
        })
        .collect();
    let inner_basis = report
        .inner_basis
        .iter()
        .map(|(label, d)| InnerEntry {
            label: format!("ad({})", g.name(*label)),
            matrix: include_inner_matrices.then(|| d.rows()),
        })
        .collect();
    let outer_generators = report
        .out_generators
        .iter()
        .enumerate()
        .map(|(i, o)| {
            let comps = o.hom.quotient().components();
            OuterEntry {
                class_representative: g.name(o.class_representative).to_string(),
                hom_images: comps
                    .iter()
                    .zip(o.hom.images())
                    .map(|(c, &image)| HomImage {
                        generator: g.name(c.generator).to_string(),
                        image,
                    })
                    .collect(),
                additive_order: o.additive_order,
                relation: format!("{}*(D{} + Inn) = Inn", o.additive_order, i + 1),
                matrix: o.derivation.rows(),
            }
        })
        .collect();
    ReportDocument {
        schema_version: SCHEMA_VERSION,
        group: group.clone(),
        ring: ring.clone(),
        group_order: g.order(),
        ring_size: gr.ring().size(),
        element_names: g.names().to_vec(),
        classes,
        inner_rank: report.inner_rank,
        inner_basis,
        outer_generators,
        module_structure: invariants(&report.module_structure),
        cardinality: report.cardinality().to_string(),
        criteria: report.criteria,
    }
}

fn format_invariants(list: &[Invariant]) -> String {
    if list.is_empty() {
        return "0".into();
    }
    let mut parts: Vec<(String, usize)> = Vec::new();
    for inv in list {
        let name = format!("Z{}", inv.prime.pow(inv.exponent));
        match parts.last_mut() {
            Some((last, count)) if *last == name => *count += 1,
            _ => parts.push((name, 1)),
        }
    }
    parts
        .into_iter()
        .map(|(name, count)| {
            if count == 1 {
                name
            } else {
                format!("{name}^{count}")
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn format_criteria(c: &Criteria, out: &mut String) {
    let _ = writeln!(out, "criteria:");
    let _ = writeln!(
        out,
        "  prime disjointness predicts inner only: {}",
        c.prime_disjointness_criterion
    );
    let _ = writeln!(
        out,
        "  exact: every derivation inner: {}",
        c.exact_outer_trivial
    );
    match c.gcd_sufficient {
        Some(b) => {
            let _ = writeln!(out, "  gcd(ord(g), m) = 1 for all g: {b}");
        }
        None => {
            let _ = writeln!(out, "  gcd criterion: not applicable");
        }
    }
    if c.conflict {
        let _ = writeln!(
            out,
            "  criterion-conflict: prime disjointness disagrees with the exact answer"
        );
    }
}

fn format_matrix(rows: &[Vec<Scalar>], out: &mut String) {
    for row in rows {
        let cells: Vec<String> = row.iter().map(u32::to_string).collect();
        let _ = writeln!(out, "      [{}]", cells.join(" "));
    }
}

pub fn render_text(doc: &ReportDocument) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "group ring: {}[{}]", doc.ring, doc.group);
    let _ = writeln!(out, "|G| = {}, |A| = {}", doc.group_order, doc.ring_size);
    let _ = writeln!(out, "elements: {}", doc.element_names.join(" "));
    let _ = writeln!(out, "classes:");
    for c in &doc.classes {
        let _ = writeln!(
            out,
            "  [{}] size {}, centralizer order {}, abelianized {}",
            c.representative,
            c.size,
            c.centralizer_order,
            format_invariants(&c.centralizer_abelianization)
        );
    }
    let labels: Vec<&str> = doc.inner_basis.iter().map(|e| e.label.as_str()).collect();
    let _ = writeln!(out, "inner rank: {}", doc.inner_rank);
    let _ = writeln!(
        out,
        "inner basis: {}",
        if labels.is_empty() {
            "(empty)".into()
        } else {
            labels.join(", ")
        }
    );
    for e in &doc.inner_basis {
        if let Some(m) = &e.matrix {
            let _ = writeln!(out, "    {}:", e.label);
            format_matrix(m, &mut out);
        }
    }
    let _ = writeln!(out, "outer generators: {}", doc.outer_generators.len());
    for (i, o) in doc.outer_generators.iter().enumerate() {
        let images: Vec<String> = o
            .hom_images
            .iter()
            .map(|h| format!("{} -> {}", h.generator, h.image))
            .collect();
        let _ = writeln!(
            out,
            "  D{} at [{}]: {{{}}}, order {}; {}",
            i + 1,
            o.class_representative,
            images.join(", "),
            o.additive_order,
            o.relation
        );
        format_matrix(&o.matrix, &mut out);
    }
    let _ = writeln!(
        out,
        "Der = {} ({} elements)",
        format_invariants(&doc.module_structure),
        doc.cardinality
    );
    format_criteria(&doc.criteria, &mut out);
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriteriaDocument {
    pub schema_version: u32,
    pub group: GroupSpec,
    pub ring: RingSpec,
    pub criteria: Criteria,
}

pub fn render_criteria_text(doc: &CriteriaDocument) -> String {
    let mut out = format!("group ring: {}[{}]\n", doc.ring, doc.group);
    format_criteria(&doc.criteria, &mut out);
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyDocument {
    pub schema_version: u32,
    pub group: GroupSpec,
    pub ring: RingSpec,
    pub passed: bool,
    pub verdict: Verdict,
    pub criteria: Criteria,
    pub notes: Vec<String>,
}

pub fn verify_document(
    group: &GroupSpec,
    ring: &RingSpec,
    verdict: Verdict,
    criteria: Criteria,
) -> VerifyDocument {
    let mut notes = Vec::new();
    if criteria.conflict {
        notes.push(format!(
            "criterion-conflict: prime disjointness predicts {}, exact answer is {}",
            if criteria.prime_disjointness_criterion {
                "inner only"
            } else {
                "outer derivations"
            },
            if criteria.exact_outer_trivial {
                "inner only"
            } else {
                "outer derivations"
            },
        ));
    }
    VerifyDocument {
        schema_version: SCHEMA_VERSION,
        group: group.clone(),
        ring: ring.clone(),
        passed: verdict.passed(),
        verdict,
        criteria,
        notes,
    }
}

pub fn render_verify_text(doc: &VerifyDocument) -> String {
    let v = &doc.verdict;
    let mark = |b: bool| if b { "PASS" } else { "FAIL" };
    let mut out = format!("group ring: {}[{}]\n", doc.ring, doc.group);
    let _ = writeln!(
        out,
        "{} (a) cardinality: claimed {}, spanned {}, solver {}",
        mark(v.cardinality_match),
        v.report_cardinality,
        v.report_span_cardinality,
        v.oracle_cardinality
    );
    let _ = writeln!(
        out,
        "{} (b) report generators solve the Leibniz system",
        mark(v.report_generators_in_span)
    );
    let _ = writeln!(
        out,
        "{} (c) solver generators decompose and reassemble",
        mark(v.oracle_generators_decompose)
    );
    let _ = writeln!(
        out,
        "{} (d) loop-vanishing solutions equal the inner span",
        mark(v.inner_matches_loop_trivial)
    );
    for n in &doc.notes {
        let _ = writeln!(out, "note: {n}");
    }
    let _ = writeln!(
        out,
        "{}, cardinality {}",
        mark(doc.passed),
        v.oracle_cardinality
    );
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApplyDocument {
    pub schema_version: u32,
    pub derivation: String,
    pub element: serde_json::Map<String, serde_json::Value>,
    pub result: serde_json::Map<String, serde_json::Value>,
}

/// `{name: coefficient}` for the nonzero coefficients.
pub fn element_map(
    gr: &GroupRing,
    coeffs: &[Scalar],
) -> serde_json::Map<String, serde_json::Value> {
    coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(g, &c)| (gr.group().name(g).to_string(), serde_json::Value::from(c)))
        .collect()
}
