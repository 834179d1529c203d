//! Brute-force solver for the Leibniz system.
//!
//! Unknowns are the `|G|²` table entries `x[h, g]`. For every pair
//! `(g₁, g₂)` and every `h` the rule `d(g₁g₂) = d(g₁)g₂ + g₁d(g₂)` gives
//!
//! ```text
//! x[h, g₁g₂] − x[hg₂⁻¹, g₁] − x[g₁⁻¹h, g₂] = 0
//! ```
//!
//! The solver knows nothing about groupoids or centralizers. It splits the
//! unknowns into blocks that share no equation, splits the ring into local
//! factors (`Z/p^eZ` and Galois fields), and in each piece compresses the
//! rows to echelon form before reducing to Smith form. Over a local ring
//! every ideal is a power of the maximal ideal, so pivoting on the entry of
//! least valuation keeps every division exact.

use std::collections::HashSet;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::derivation::{
    self, canonical_invariants, invariants_cardinality, Decomposition, Derivation, DerivationReport,
};
use crate::error::{Error, Result};
use crate::group_ring::{GroupRing, Limits};
use crate::groups::FiniteGroup;
use crate::par;
use crate::rings::{FiniteRing, LocalComponent, LocalKind, Scalar};

/// One homogeneous equation with small integer coefficients.
pub type Equation = Vec<(usize, i64)>;

/// All Leibniz equations, duplicate terms combined, zero equations dropped.
pub fn leibniz_equations(g: &FiniteGroup) -> Vec<Equation> {
    let n = g.order();
    let mut out = Vec::with_capacity(n * n * n);
    for g1 in g.elements() {
        let g1_inv = g.inv(g1);
        for g2 in g.elements() {
            let prod = g.mul(g1, g2);
            let g2_inv = g.inv(g2);
            for h in g.elements() {
                let terms = [
                    (h * n + prod, 1),
                    (g.mul(h, g2_inv) * n + g1, -1),
                    (g.mul(g1_inv, h) * n + g2, -1),
                ];
                let eq = combine(&terms);
                if !eq.is_empty() {
                    out.push(eq);
                }
            }
        }
    }
    out
}

fn combine(terms: &[(usize, i64)]) -> Equation {
    let mut eq: Equation = Vec::with_capacity(terms.len());
    for &(i, c) in terms {
        match eq.iter_mut().find(|(j, _)| *j == i) {
            Some(t) => t.1 += c,
            None => eq.push((i, c)),
        }
    }
    eq.retain(|&(_, c)| c != 0);
    eq.sort_unstable();
    eq
}

/// Groups unknowns that are linked through some equation.
fn blocks(unknowns: usize, equations: &[Equation]) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut parent: Vec<usize> = (0..unknowns).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for eq in equations {
        let first = find(&mut parent, eq[0].0);
        for &(i, _) in &eq[1..] {
            let r = find(&mut parent, i);
            if r != first {
                let (lo, hi) = (first.min(r), first.max(r));
                parent[hi] = lo;
            }
        }
    }
    let roots: Vec<usize> = (0..unknowns).map(|x| find(&mut parent, x)).collect();
    let mut index = vec![usize::MAX; unknowns];
    let mut out: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for (x, &r) in roots.iter().enumerate() {
        if index[r] == usize::MAX {
            index[r] = out.len();
            out.push((Vec::new(), Vec::new()));
        }
        out[index[r]].0.push(x);
    }
    for (e, eq) in equations.iter().enumerate() {
        out[index[roots[eq[0].0]]].1.push(e);
    }
    out
}

/// Arithmetic in one local factor of the coefficient ring.
#[derive(Debug, Clone)]
enum Local {
    /// `Z/p^eZ`
    Chain { p: u64, e: u32, q: u64 },
    /// `GF(p^k)` with its own multiplication table.
    Field { ring: FiniteRing, p: u64, k: u32 },
}

impl Local {
    fn new(comp: &LocalComponent) -> Self {
        match &comp.kind {
            LocalKind::PrimePower { p, e } => Local::Chain {
                p: *p,
                e: *e,
                q: p.pow(*e),
            },
            LocalKind::Field { field, p, k } => Local::Field {
                ring: field.clone(),
                p: *p,
                k: *k,
            },
        }
    }

    fn prime(&self) -> u64 {
        match self {
            Local::Chain { p, .. } | Local::Field { p, .. } => *p,
        }
    }

    fn add(&self, a: Scalar, b: Scalar) -> Scalar {
        match self {
            Local::Chain { q, .. } => ((a as u64 + b as u64) % q) as Scalar,
            Local::Field { ring, .. } => ring.add(a, b),
        }
    }

    fn sub(&self, a: Scalar, b: Scalar) -> Scalar {
        match self {
            Local::Chain { q, .. } => ((a as u64 + q - b as u64) % q) as Scalar,
            Local::Field { ring, .. } => ring.sub(a, b),
        }
    }

    fn mul(&self, a: Scalar, b: Scalar) -> Scalar {
        match self {
            Local::Chain { q, .. } => ((a as u64 * b as u64) % q) as Scalar,
            Local::Field { ring, .. } => ring.mul(a, b),
        }
    }

    fn coefficient(&self, c: i64) -> Scalar {
        match self {
            Local::Chain { q, .. } => c.rem_euclid(*q as i64) as Scalar,
            Local::Field { p, .. } => c.rem_euclid(*p as i64) as Scalar,
        }
    }

    /// Nilpotency length: `e` for `Z/p^eZ`, 1 for a field.
    fn length(&self) -> u32 {
        match self {
            Local::Chain { e, .. } => *e,
            Local::Field { .. } => 1,
        }
    }

    /// Largest `v` with `a ∈ m^v`; `length()` for zero.
    fn valuation(&self, a: Scalar) -> u32 {
        if a == 0 {
            return self.length();
        }
        match self {
            Local::Chain { p, .. } => {
                let (mut a, mut v) = (a as u64, 0);
                while a % p == 0 {
                    a /= p;
                    v += 1;
                }
                v
            }
            Local::Field { .. } => 0,
        }
    }

    /// Some `y` with `b·y = a`, assuming `valuation(b) ≤ valuation(a)`.
    fn divide(&self, a: Scalar, b: Scalar) -> Scalar {
        match self {
            Local::Chain { p, q, .. } => {
                let v = self.valuation(b);
                let pv = p.pow(v);
                let unit = b as u64 / pv;
                ((a as u64 / pv) % q * unit_inverse(unit, *q) % q) as Scalar
            }
            Local::Field { ring, .. } => ring.mul(a, field_inverse(ring, b)),
        }
    }

    /// Generators with their `(p, exponent)` orders of `{y : d·y = 0}` for a
    /// diagonal entry `d` of valuation `v`.
    fn annihilator(&self, v: u32) -> Vec<(Scalar, u32)> {
        match self {
            Local::Chain { p, e, .. } => {
                if v == 0 {
                    Vec::new()
                } else {
                    vec![(p.pow(e - v) as Scalar, v)]
                }
            }
            Local::Field { p, k, .. } => {
                if v == 0 {
                    Vec::new()
                } else {
                    (0..*k).map(|i| (p.pow(i) as Scalar, 1)).collect()
                }
            }
        }
    }

    /// Integer coefficients of `y` against `annihilator(v)`, if `y` lies in it.
    fn annihilator_coords(&self, v: u32, y: Scalar) -> Option<Vec<u64>> {
        match self {
            Local::Chain { p, e, .. } => {
                if v == 0 {
                    return (y == 0).then(Vec::new);
                }
                let step = p.pow(e - v);
                (y as u64)
                    .is_multiple_of(step)
                    .then(|| vec![y as u64 / step])
            }
            Local::Field { p, k, .. } => {
                if v == 0 {
                    return (y == 0).then(Vec::new);
                }
                let mut y = y as u64;
                Some(
                    (0..*k)
                        .map(|_| {
                            let d = y % p;
                            y /= p;
                            d
                        })
                        .collect(),
                )
            }
        }
    }

    /// Size of `d·A` for a diagonal entry of valuation `v`, as `(p, exponent)`
    /// pieces of the image.
    fn image(&self, v: u32) -> Vec<(u64, u32)> {
        match self {
            Local::Chain { p, e, .. } => {
                if v < *e {
                    vec![(*p, e - v)]
                } else {
                    Vec::new()
                }
            }
            Local::Field { p, k, .. } => {
                if v == 0 {
                    vec![(*p, 1); *k as usize]
                } else {
                    Vec::new()
                }
            }
        }
    }
}

fn unit_inverse(u: u64, q: u64) -> u64 {
    let (mut a, mut b) = (u as i128 % q as i128, q as i128);
    let (mut x0, mut x1) = (1i128, 0i128);
    while b != 0 {
        let t = a / b;
        (a, b) = (b, a - t * b);
        (x0, x1) = (x1, x0 - t * x1);
    }
    debug_assert_eq!(a, 1, "not a unit");
    x0.rem_euclid(q as i128) as u64
}

fn field_inverse(ring: &FiniteRing, b: Scalar) -> Scalar {
    // b^(|F| − 2)
    let mut e = ring.size() - 2;
    let (mut acc, mut base) = (ring.one(), b);
    while e > 0 {
        if e & 1 == 1 {
            acc = ring.mul(acc, base);
        }
        base = ring.mul(base, base);
        e >>= 1;
    }
    acc
}

/// Rows kept in echelon form: each row starts at its pivot column, and pivot
/// columns are distinct.
struct Echelon<'a> {
    local: &'a Local,
    width: usize,
    /// Pivot row for each column, if any.
    pivots: Vec<Option<Vec<Scalar>>>,
}

impl<'a> Echelon<'a> {
    fn new(local: &'a Local, width: usize) -> Self {
        Echelon {
            local,
            width,
            pivots: vec![None; width],
        }
    }

    fn insert(&mut self, mut row: Vec<Scalar>) {
        let l = self.local;
        let mut start = 0;
        loop {
            let Some(c) = (start..self.width).find(|&c| row[c] != 0) else {
                return;
            };
            match &mut self.pivots[c] {
                slot @ None => {
                    *slot = Some(row);
                    return;
                }
                Some(pivot) => {
                    if l.valuation(row[c]) < l.valuation(pivot[c]) {
                        std::mem::swap(pivot, &mut row);
                    }
                    let f = l.divide(row[c], pivot[c]);
                    for j in c..self.width {
                        if pivot[j] != 0 {
                            row[j] = l.sub(row[j], l.mul(f, pivot[j]));
                        }
                    }
                    debug_assert_eq!(row[c], 0);
                    start = c + 1;
                }
            }
        }
    }

    fn rows(self) -> Vec<Vec<Scalar>> {
        self.pivots.into_iter().flatten().collect()
    }
}

/// `L·M·V = diag(d)` with `V` invertible; only `V`, `V⁻¹` and the diagonal
/// valuations are kept.
struct Smith {
    /// Valuation of each diagonal entry, `length()` past the rank.
    valuations: Vec<u32>,
    v: Vec<Vec<Scalar>>,
    v_inv: Vec<Vec<Scalar>>,
}

fn smith(local: &Local, mut m: Vec<Vec<Scalar>>, width: usize) -> Smith {
    let l = local;
    let mut v: Vec<Vec<Scalar>> = (0..width).map(|i| unit_row(width, i)).collect();
    let mut v_inv = v.clone();
    let mut valuations = vec![l.length(); width];
    let rows = m.len();
    for t in 0..width.min(rows) {
        // least valuation in the trailing block, first in row-major order
        let mut best: Option<(u32, usize, usize)> = None;
        for (i, row) in m.iter().enumerate().skip(t) {
            for (j, &x) in row.iter().enumerate().skip(t) {
                if x != 0 {
                    let val = l.valuation(x);
                    if best.is_none_or(|(b, _, _)| val < b) {
                        best = Some((val, i, j));
                    }
                }
            }
            if best.is_some_and(|(b, _, _)| b == 0) {
                break;
            }
        }
        let Some((val, i, j)) = best else { break };
        m.swap(t, i);
        if j != t {
            for row in m.iter_mut() {
                row.swap(t, j);
            }
            for row in v.iter_mut() {
                row.swap(t, j);
            }
            v_inv.swap(t, j);
        }
        let pivot = m[t][t];
        for i in t + 1..rows {
            if m[i][t] != 0 {
                let f = l.divide(m[i][t], pivot);
                #[allow(clippy::needless_range_loop)] // reads row t while writing row i
                for c in t..width {
                    let x = l.mul(f, m[t][c]);
                    m[i][c] = l.sub(m[i][c], x);
                }
            }
        }
        for c in t + 1..width {
            if m[t][c] != 0 {
                let f = l.divide(m[t][c], pivot);
                // column c -= f · column t, on m and on V; V⁻¹ gets row t += f · row c
                m[t][c] = 0;
                for row in v.iter_mut() {
                    row[c] = l.sub(row[c], l.mul(f, row[t]));
                }
                let (head, tail) = v_inv.split_at_mut(c);
                for (a, &b) in head[t].iter_mut().zip(&tail[0]) {
                    *a = l.add(*a, l.mul(f, b));
                }
            }
        }
        valuations[t] = val;
    }
    Smith {
        valuations,
        v,
        v_inv,
    }
}

fn unit_row(width: usize, i: usize) -> Vec<Scalar> {
    let mut r = vec![0; width];
    r[i] = 1;
    r
}

/// Kernel of one block over one local factor.
#[derive(Debug, Clone)]
struct Piece {
    unknowns: Vec<usize>,
    component: usize,
    valuations: Vec<u32>,
    v_inv: Vec<Vec<Scalar>>,
    /// Index of this piece's first generator in the module's generator list.
    offset: usize,
}

/// All derivations of `A[G]` as an abelian group.
#[derive(Debug, Clone)]
pub struct SolutionModule {
    pub unknown_count: usize,
    pub generators: Vec<Derivation>,
    /// `(p, k)` per generator: each generator spans a `Z_{p^k}` summand.
    pub orders: Vec<(u64, u32)>,
    pub invariants: Vec<(u64, u32)>,
    pub cardinality: BigUint,
    ring: FiniteRing,
    components: Vec<LocalComponent>,
    pieces: Vec<Piece>,
}

impl SolutionModule {
    /// Integer coefficients `c` with `d = Σ c_i·generator_i`, each reduced
    /// below the generator's order, or `None` when `d` is not a solution.
    pub fn coordinates(&self, d: &Derivation) -> Option<Vec<u64>> {
        if d.size() * d.size() != self.unknown_count {
            return None;
        }
        let mut coords = vec![0u64; self.generators.len()];
        let locals: Vec<Local> = self.components.iter().map(Local::new).collect();
        for piece in &self.pieces {
            let comp = &self.components[piece.component];
            let l = &locals[piece.component];
            let x: Vec<Scalar> = piece
                .unknowns
                .iter()
                .map(|&u| self.ring.project(comp, d.entries()[u]))
                .collect();
            let mut at = piece.offset;
            for (t, row) in piece.v_inv.iter().enumerate() {
                let y = row
                    .iter()
                    .zip(&x)
                    .fold(0, |acc, (&a, &b)| l.add(acc, l.mul(a, b)));
                let cs = l.annihilator_coords(piece.valuations[t], y)?;
                for c in cs {
                    coords[at] = c;
                    at += 1;
                }
            }
        }
        Some(coords)
    }

    pub fn contains(&self, d: &Derivation) -> bool {
        self.coordinates(d).is_some()
    }

    pub fn combination(&self, coeffs: &[u64]) -> Derivation {
        let n = (self.unknown_count as f64).sqrt() as usize;
        self.generators
            .iter()
            .zip(coeffs)
            .fold(Derivation::zero(n), |acc, (g, &c)| {
                acc.add(&self.ring, &g.int_mul(&self.ring, c))
            })
    }

    /// Every solution, as integer combinations of the generators. Refuses
    /// modules larger than `max`.
    pub fn enumerate(&self, max: u64) -> Option<Vec<Derivation>> {
        if self.cardinality > BigUint::from(max) {
            return None;
        }
        let orders: Vec<u64> = self.orders.iter().map(|&(p, k)| p.pow(k)).collect();
        let mut digits = vec![0u64; orders.len()];
        let mut out = Vec::new();
        loop {
            out.push(self.combination(&digits));
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
                return Some(out);
            }
        }
    }
}

fn check_oracle_size(gr: &GroupRing, limits: &Limits) -> Result<()> {
    if gr.order() > limits.max_oracle_group_order {
        return Err(Error::SizeLimit {
            what: "oracle group order",
            actual: gr.order() as u64,
            limit: limits.max_oracle_group_order as u64,
        });
    }
    if gr.ring().size() > limits.max_ring_size {
        return Err(Error::SizeLimit {
            what: "ring size",
            actual: gr.ring().size(),
            limit: limits.max_ring_size,
        });
    }
    Ok(())
}

/// Solves the full Leibniz system.
pub fn solve_all_derivations(gr: &GroupRing, limits: &Limits) -> Result<SolutionModule> {
    check_oracle_size(gr, limits)?;
    let equations = leibniz_equations(gr.group());
    Ok(solve_equations(gr, &equations))
}

/// Solves the Leibniz system with its equations taken in the given order.
pub fn solve_with_order(gr: &GroupRing, order: &[usize]) -> Result<SolutionModule> {
    let equations = leibniz_equations(gr.group());
    if order.len() != equations.len() || {
        let mut seen = vec![false; order.len()];
        order
            .iter()
            .any(|&i| i >= seen.len() || std::mem::replace(&mut seen[i], true))
    } {
        return Err(Error::Mismatch);
    }
    let permuted: Vec<Equation> = order.iter().map(|&i| equations[i].clone()).collect();
    Ok(solve_equations(gr, &permuted))
}

pub fn equation_count(g: &FiniteGroup) -> usize {
    leibniz_equations(g).len()
}

/// Solutions that also vanish at every `(u, v)` with `uv = vu`.
pub fn solve_loop_constrained(gr: &GroupRing, limits: &Limits) -> Result<SolutionModule> {
    check_oracle_size(gr, limits)?;
    let g = gr.group();
    let n = g.order();
    let mut equations = leibniz_equations(g);
    for u in g.elements() {
        for v in g.elements() {
            if g.commutes(u, v) {
                equations.push(vec![(u * n + v, 1)]);
            }
        }
    }
    Ok(solve_equations(gr, &equations))
}

fn solve_equations(gr: &GroupRing, equations: &[Equation]) -> SolutionModule {
    let n = gr.order();
    let unknowns = n * n;
    let ring = gr.ring().clone();
    let components = ring.local_components();
    let mut seen = HashSet::new();
    let distinct: Vec<&Equation> = equations.iter().filter(|e| seen.insert(*e)).collect();
    let owned: Vec<Equation> = distinct.into_iter().cloned().collect();
    let blocks = blocks(unknowns, &owned);

    let jobs: Vec<(usize, usize)> = (0..blocks.len())
        .flat_map(|b| (0..components.len()).map(move |c| (b, c)))
        .collect();
    let solved = par::map_slice(&jobs, |&(b, c)| {
        let (vars, eqs) = &blocks[b];
        let local = Local::new(&components[c]);
        let position = |u: usize| vars.binary_search(&u).expect("unknown in block");
        let mut echelon = Echelon::new(&local, vars.len());
        for &e in eqs {
            let mut row = vec![0; vars.len()];
            for &(u, coeff) in &owned[e] {
                row[position(u)] = local.coefficient(coeff);
            }
            echelon.insert(row);
        }
        let s = smith(&local, echelon.rows(), vars.len());
        let mut gens = Vec::new();
        for (t, &val) in s.valuations.iter().enumerate() {
            for (scale, exp) in local.annihilator(val) {
                let column: Vec<Scalar> = s.v.iter().map(|row| local.mul(row[t], scale)).collect();
                gens.push((column, (local.prime(), exp)));
            }
        }
        (gens, s.valuations, s.v_inv)
    });

    let mut generators = Vec::new();
    let mut orders = Vec::new();
    let mut pieces = Vec::new();
    for (&(b, c), (gens, valuations, v_inv)) in jobs.iter().zip(solved) {
        let vars = &blocks[b].0;
        pieces.push(Piece {
            unknowns: vars.clone(),
            component: c,
            valuations,
            v_inv,
            offset: generators.len(),
        });
        for (column, order) in gens {
            let mut entries = vec![0; unknowns];
            for (&u, &x) in vars.iter().zip(&column) {
                entries[u] = ring.embed(&components[c], x);
            }
            generators.push(Derivation::from_entries(n, entries).expect("square table"));
            orders.push(order);
        }
    }
    let invariants = canonical_invariants(orders.clone());
    SolutionModule {
        unknown_count: unknowns,
        cardinality: invariants_cardinality(&invariants),
        generators,
        orders,
        invariants,
        ring,
        components,
        pieces,
    }
}

/// Abelian invariants of the subgroup of `A^{n²}` spanned by `vectors` as an
/// `A`-module.
pub fn span_invariants(ring: &FiniteRing, vectors: &[Derivation]) -> Vec<(u64, u32)> {
    let Some(first) = vectors.first() else {
        return Vec::new();
    };
    let width = first.entries().len();
    let mut out = Vec::new();
    for comp in ring.local_components() {
        let local = Local::new(&comp);
        let mut echelon = Echelon::new(&local, width);
        for d in vectors {
            echelon.insert(
                d.entries()
                    .iter()
                    .map(|&x| ring.project(&comp, x))
                    .collect(),
            );
        }
        let s = smith(&local, echelon.rows(), width);
        for &val in &s.valuations {
            out.extend(local.image(val));
        }
    }
    canonical_invariants(out)
}

/// Outcome of checking a report against the solver.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    /// Claimed cardinality of the report's module structure.
    pub report_cardinality: String,
    /// Cardinality of the span of the report's generators.
    pub report_span_cardinality: String,
    pub oracle_cardinality: String,
    pub oracle_invariants: Vec<(u64, u32)>,
    /// (a) claim, span and solver agree on size and invariants.
    pub cardinality_match: bool,
    /// (b) every report generator solves the Leibniz system.
    pub report_generators_in_span: bool,
    /// (c) every solver generator splits into inner and outer parts and
    /// reassembles exactly.
    pub oracle_generators_decompose: bool,
    /// (d) the loop-vanishing solutions are exactly the inner span.
    pub inner_matches_loop_trivial: bool,
}

impl Verdict {
    pub fn passed(&self) -> bool {
        self.cardinality_match
            && self.report_generators_in_span
            && self.oracle_generators_decompose
            && self.inner_matches_loop_trivial
    }
}

pub fn compare(gr: &GroupRing, report: &DerivationReport, sol: &SolutionModule) -> Verdict {
    let ring = gr.ring();
    let report_gens: Vec<Derivation> = report.generators().cloned().collect();
    let span = span_invariants(ring, &report_gens);
    let span_card = invariants_cardinality(&span);
    let cardinality_match = report.cardinality() == sol.cardinality
        && span_card == sol.cardinality
        && report.module_structure == sol.invariants
        && span == sol.invariants;

    let report_generators_in_span = par::map_slice(&report_gens, |d| sol.contains(d))
        .into_iter()
        .all(|x| x);

    let oracle_generators_decompose = par::map_slice(&sol.generators, |d| {
        derivation::decompose(gr, d)
            .and_then(|parts: Decomposition| derivation::reconstruct(gr, &parts))
            .is_ok_and(|r| &r == d)
    })
    .into_iter()
    .all(|x| x);

    let inner: Vec<Derivation> = report.inner_basis.iter().map(|(_, d)| d.clone()).collect();
    let inner_span = span_invariants(ring, &inner);
    let inner_matches_loop_trivial = match solve_loop_constrained(
        gr,
        &Limits {
            max_oracle_group_order: usize::MAX,
            max_ring_size: u64::MAX,
            ..Limits::default()
        },
    ) {
        Ok(loops_zero) => {
            loops_zero.invariants == inner_span
                && inner.iter().all(|d| loops_zero.contains(d))
                && sol.generators.iter().all(|d| {
                    // inner exactly when adding it does not enlarge the inner span
                    let mut with = inner.clone();
                    with.push(d.clone());
                    let is_in_span = span_invariants(ring, &with) == inner_span;
                    derivation::is_inner(gr, d).ok() == Some(is_in_span)
                })
        }
        Err(_) => false,
    };

    Verdict {
        report_cardinality: report.cardinality().to_string(),
        report_span_cardinality: span_card.to_string(),
        oracle_cardinality: sol.cardinality.to_string(),
        oracle_invariants: sol.invariants.clone(),
        cardinality_match,
        report_generators_in_span,
        oracle_generators_decompose,
        inner_matches_loop_trivial,
    }
}
