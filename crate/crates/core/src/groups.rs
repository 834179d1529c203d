//! Finite groups stored as Cayley tables.
//!
//! Element `0` is always the identity. Permutations compose right to left:
//! `(σ·τ)(x) = σ(τ(x))`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::par;

pub const DEFAULT_MAX_GROUP_ORDER: usize = 64;
pub const MAX_SYMMETRIC_DEGREE: usize = 5;

/// Index of a group element inside its [`FiniteGroup`].
pub type Element = usize;

/// Recipe for building a group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GroupSpec {
    Symmetric {
        n: usize,
    },
    Cyclic {
        m: usize,
    },
    /// `⟨r, s | r^{2n} = s^2 = (rs)^2 = 1⟩`, of order `4n`.
    Dihedral {
        n: usize,
    },
    Table {
        table: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        names: Option<Vec<String>>,
    },
    Product {
        factors: Vec<GroupSpec>,
    },
}

impl GroupSpec {
    /// Order of the group this spec describes, without building it.
    pub fn planned_order(&self) -> Result<u64> {
        match self {
            GroupSpec::Symmetric { n } => {
                if *n == 0 || *n > MAX_SYMMETRIC_DEGREE {
                    return Err(Error::InvalidGroup(format!(
                        "symmetric degree must be in 1..={MAX_SYMMETRIC_DEGREE}, got {n}"
                    )));
                }
                Ok((1..=*n as u64).product())
            }
            GroupSpec::Cyclic { m } => {
                if *m == 0 {
                    return Err(Error::InvalidGroup(
                        "cyclic order must be at least 1".into(),
                    ));
                }
                Ok(*m as u64)
            }
            GroupSpec::Dihedral { n } => {
                if *n == 0 {
                    return Err(Error::InvalidGroup(
                        "dihedral parameter must be at least 1".into(),
                    ));
                }
                Ok(4 * *n as u64)
            }
            GroupSpec::Table { table, .. } => {
                if table.is_empty() {
                    return Err(Error::InvalidGroup("empty multiplication table".into()));
                }
                Ok(table.len() as u64)
            }
            GroupSpec::Product { factors } => {
                if factors.is_empty() {
                    return Err(Error::InvalidGroup(
                        "product needs at least one factor".into(),
                    ));
                }
                factors
                    .iter()
                    .try_fold(1u64, |acc, f| Ok(acc.saturating_mul(f.planned_order()?)))
            }
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Symmetric { n } => write!(f, "symmetric:{n}"),
            GroupSpec::Cyclic { m } => write!(f, "cyclic:{m}"),
            GroupSpec::Dihedral { n } => write!(f, "dihedral:{n}"),
            GroupSpec::Table { table, .. } => write!(f, "table:{}", table.len()),
            GroupSpec::Product { factors } => {
                for (i, g) in factors.iter().enumerate() {
                    if i > 0 {
                        f.write_str("x")?;
                    }
                    write!(f, "{g}")?;
                }
                Ok(())
            }
        }
    }
}

/// Parses `S3`, `C4`, `symmetric:3`, `cyclic:4`, `dihedral:3`, products
/// joined with `x` (`S3xC2`), or a JSON object.
impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('{') {
            return serde_json::from_str(s).map_err(|e| Error::InvalidGroup(e.to_string()));
        }
        let parts: Vec<&str> = s.split('x').collect();
        if parts.len() > 1 {
            let factors = parts
                .into_iter()
                .map(str::parse)
                .collect::<Result<Vec<GroupSpec>>>()?;
            return Ok(GroupSpec::Product { factors });
        }
        let bad = || Error::InvalidGroup(format!("cannot parse group spec {s:?}"));
        let number = |t: &str| t.parse::<usize>().map_err(|_| bad());
        let (kind, arg) = match s.split_once(':') {
            Some((k, a)) => (k.to_ascii_lowercase(), number(a)?),
            None => {
                let split = s.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?;
                (s[..split].to_ascii_lowercase(), number(&s[split..])?)
            }
        };
        match kind.as_str() {
            "s" | "sym" | "symmetric" => Ok(GroupSpec::Symmetric { n: arg }),
            "c" | "cyclic" => Ok(GroupSpec::Cyclic { m: arg }),
            "dihedral" | "dih" => Ok(GroupSpec::Dihedral { n: arg }),
            _ => Err(bad()),
        }
    }
}

/// A finite group given by its full multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<Element>,
    inverse: Vec<Element>,
    names: Vec<String>,
}

impl FiniteGroup {
    /// Validates a Cayley table. Element 0 must be the identity.
    pub fn from_table(table: Vec<Vec<usize>>, names: Option<Vec<String>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty multiplication table".into()));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidGroup(format!(
                    "row {i} has length {}, expected {n}",
                    row.len()
                )));
            }
            let mut seen = vec![false; n];
            for &x in row {
                if x >= n || std::mem::replace(&mut seen[x], true) {
                    return Err(Error::InvalidGroup(format!(
                        "row {i} is not a permutation of 0..{n}"
                    )));
                }
            }
        }
        for c in 0..n {
            let mut seen = vec![false; n];
            for row in &table {
                if std::mem::replace(&mut seen[row[c]], true) {
                    return Err(Error::InvalidGroup(format!(
                        "column {c} is not a permutation of 0..{n}"
                    )));
                }
            }
        }
        if (0..n).any(|x| table[0][x] != x || table[x][0] != x) {
            return Err(Error::InvalidGroup("element 0 must be the identity".into()));
        }
        let flat: Vec<Element> = table.into_iter().flatten().collect();
        let associative = par::all_range(n, |a| {
            (0..n).all(|b| {
                let ab = flat[a * n + b];
                (0..n).all(|c| flat[ab * n + c] == flat[a * n + flat[b * n + c]])
            })
        });
        if !associative {
            return Err(Error::InvalidGroup(
                "multiplication is not associative".into(),
            ));
        }
        let inverse = (0..n)
            .map(|a| {
                (0..n)
                    .find(|&b| flat[a * n + b] == 0)
                    .expect("latin square row contains identity")
            })
            .collect();
        let names = match names {
            Some(names) if names.len() == n => names,
            Some(names) => {
                return Err(Error::InvalidGroup(format!(
                    "{} names given for {n} elements",
                    names.len()
                )))
            }
            None => (0..n)
                .map(|i| {
                    if i == 0 {
                        "e".to_string()
                    } else {
                        format!("g{i}")
                    }
                })
                .collect(),
        };
        Ok(FiniteGroup {
            order: n,
            table: flat,
            inverse,
            names,
        })
    }

    fn from_closure(names: Vec<String>, mul: impl Fn(usize, usize) -> usize) -> Self {
        let n = names.len();
        let table: Vec<Element> = (0..n * n).map(|i| mul(i / n, i % n)).collect();
        let inverse = (0..n)
            .map(|a| {
                (0..n)
                    .find(|&b| table[a * n + b] == 0)
                    .expect("group has inverses")
            })
            .collect();
        FiniteGroup {
            order: n,
            table,
            inverse,
            names,
        }
    }

    /// Permutations of `{1..n}`, those fixing the larger points first.
    pub fn symmetric(n: usize) -> Self {
        let mut perms: Vec<Vec<u8>> = Vec::new();
        let mut current: Vec<u8> = (0..n as u8).collect();
        permutations(&mut current, 0, &mut perms);
        perms.sort_by(|a, b| b.iter().rev().cmp(a.iter().rev()));
        let index: HashMap<Vec<u8>, usize> = perms
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let names = perms.iter().map(|p| cycle_notation(p)).collect();
        FiniteGroup::from_closure(names, |a, b| {
            let (s, t) = (&perms[a], &perms[b]);
            let composed: Vec<u8> = t.iter().map(|&x| s[x as usize]).collect();
            index[&composed]
        })
    }

    pub fn cyclic(m: usize) -> Self {
        let names = (0..m)
            .map(|i| match i {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{i}"),
            })
            .collect();
        FiniteGroup::from_closure(names, |a, b| (a + b) % m)
    }

    /// Order `4n`: elements `r^0..r^{2n-1}` followed by `s, rs, …, r^{2n-1}s`.
    pub fn dihedral(n: usize) -> Self {
        let rot = 2 * n;
        let power = |i: usize| match i {
            0 => String::new(),
            1 => "r".to_string(),
            _ => format!("r^{i}"),
        };
        let names = (0..2 * rot)
            .map(|x| match (x < rot, x % rot) {
                (true, 0) => "e".to_string(),
                (true, i) => power(i),
                (false, i) => format!("{}s", power(i)),
            })
            .collect();
        // r^i s^a · r^j s^b = r^{i + (-1)^a j} s^{a+b}
        FiniteGroup::from_closure(names, |x, y| {
            let (i, a) = (x % rot, x / rot);
            let (j, b) = (y % rot, y / rot);
            let k = if a == 0 {
                (i + j) % rot
            } else {
                (i + rot - j) % rot
            };
            ((a + b) % 2) * rot + k
        })
    }

    /// Direct product; index `a·|B| + b` for the pair `(a, b)`.
    pub fn product(a: &FiniteGroup, b: &FiniteGroup) -> Self {
        let nb = b.order;
        let names = (0..a.order * nb)
            .map(|x| {
                let (i, j) = (x / nb, x % nb);
                if x == 0 {
                    "e".to_string()
                } else {
                    format!("({},{})", a.names[i], b.names[j])
                }
            })
            .collect();
        FiniteGroup::from_closure(names, |x, y| {
            a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb)
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Element {
        0
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.order
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: Element) -> Element {
        self.inverse[a]
    }

    /// `g x g⁻¹`
    #[inline]
    pub fn conjugate(&self, g: Element, x: Element) -> Element {
        self.mul(self.mul(g, x), self.inverse[g])
    }

    #[inline]
    pub fn commutes(&self, a: Element, b: Element) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| (a..self.order).all(|b| self.commutes(a, b)))
    }

    pub fn is_central(&self, z: Element) -> bool {
        self.elements().all(|g| self.commutes(g, z))
    }

    pub fn name(&self, a: Element) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<Element> {
        let name = name.trim();
        self.names.iter().position(|n| n == name)
    }

    /// Rows of the multiplication table.
    pub fn table_rows(&self) -> Vec<Vec<Element>> {
        self.table.chunks(self.order).map(<[_]>::to_vec).collect()
    }

    /// Smallest `k ≥ 1` with `g^k = e`.
    pub fn element_order(&self, g: Element) -> u64 {
        let mut k = 1;
        let mut acc = g;
        while acc != 0 {
            acc = self.mul(acc, g);
            k += 1;
        }
        k
    }

    pub fn conjugacy_classes(&self) -> ConjugacyClassSet {
        let mut class_of = vec![usize::MAX; self.order];
        let mut classes = Vec::new();
        let mut representatives = Vec::new();
        for x in self.elements() {
            if class_of[x] != usize::MAX {
                continue;
            }
            let mut class: Vec<Element> = self.elements().map(|g| self.conjugate(g, x)).collect();
            class.sort_unstable();
            class.dedup();
            for &y in &class {
                class_of[y] = classes.len();
            }
            representatives.push(x);
            classes.push(class);
        }
        ConjugacyClassSet {
            classes,
            representatives,
            class_of,
        }
    }

    pub fn centralizer(&self, u: Element) -> Subgroup {
        Subgroup {
            elements: self.elements().filter(|&g| self.commutes(g, u)).collect(),
        }
    }

    /// The whole group viewed as a subgroup of itself.
    pub fn as_subgroup(&self) -> Subgroup {
        Subgroup {
            elements: self.elements().collect(),
        }
    }

    /// Some `g` with `g x g⁻¹ = y`, smallest index first.
    pub fn conjugator(&self, x: Element, y: Element) -> Option<Element> {
        self.elements().find(|&g| self.conjugate(g, x) == y)
    }
}

fn permutations(current: &mut Vec<u8>, k: usize, out: &mut Vec<Vec<u8>>) {
    if k == current.len() {
        out.push(current.clone());
        return;
    }
    for i in k..current.len() {
        current.swap(k, i);
        permutations(current, k + 1, out);
        current.swap(k, i);
    }
}

/// One-based cycle notation, each cycle starting at its smallest point.
fn cycle_notation(p: &[u8]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] as usize == start {
            continue;
        }
        out.push('(');
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            out.push_str(&(x + 1).to_string());
            x = p[x] as usize;
        }
        out.push(')');
    }
    if out.is_empty() {
        "e".to_string()
    } else {
        out
    }
}

pub fn construct_group(spec: &GroupSpec, max_order: usize) -> Result<FiniteGroup> {
    let order = spec.planned_order()?;
    if order > max_order as u64 {
        return Err(Error::SizeLimit {
            what: "group order",
            actual: order,
            limit: max_order as u64,
        });
    }
    Ok(match spec {
        GroupSpec::Symmetric { n } => FiniteGroup::symmetric(*n),
        GroupSpec::Cyclic { m } => FiniteGroup::cyclic(*m),
        GroupSpec::Dihedral { n } => FiniteGroup::dihedral(*n),
        GroupSpec::Table { table, names } => FiniteGroup::from_table(table.clone(), names.clone())?,
        GroupSpec::Product { factors } => {
            let mut acc = construct_group(&factors[0], max_order)?;
            for f in &factors[1..] {
                acc = FiniteGroup::product(&acc, &construct_group(f, max_order)?);
            }
            acc
        }
    })
}

/// Partition of a group into conjugacy classes, ordered by representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClassSet {
    pub classes: Vec<Vec<Element>>,
    /// Minimal element index of each class.
    pub representatives: Vec<Element>,
    pub class_of: Vec<usize>,
}

impl ConjugacyClassSet {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    pub fn is_representative(&self, x: Element) -> bool {
        self.representatives[self.class_of[x]] == x
    }
}

/// A subgroup, as a sorted list of parent element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    elements: Vec<Element>,
}

impl Subgroup {
    /// Smallest subgroup containing `generators`.
    pub fn generated_by(
        group: &FiniteGroup,
        generators: impl IntoIterator<Item = Element>,
    ) -> Self {
        let mut member = vec![false; group.order()];
        member[0] = true;
        let mut elements = vec![0];
        let gens: Vec<Element> = generators.into_iter().collect();
        let mut i = 0;
        while i < elements.len() {
            let x = elements[i];
            for &g in &gens {
                let y = group.mul(x, g);
                if !member[y] {
                    member[y] = true;
                    elements.push(y);
                }
            }
            i += 1;
        }
        elements.sort_unstable();
        Subgroup { elements }
    }

    /// Checks closure and returns the subgroup.
    pub fn from_elements(group: &FiniteGroup, mut elements: Vec<Element>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        let set = Subgroup { elements };
        let closed = set.contains(0)
            && set.elements.iter().all(|&a| {
                set.contains(group.inv(a))
                    && set.elements.iter().all(|&b| set.contains(group.mul(a, b)))
            });
        if closed {
            Ok(set)
        } else {
            Err(Error::InvalidGroup("element set is not a subgroup".into()))
        }
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: Element) -> bool {
        self.elements.binary_search(&x).is_ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> FiniteGroup {
        FiniteGroup::symmetric(3)
    }

    fn assert_group_axioms(g: &FiniteGroup) {
        let n = g.order();
        for x in g.elements() {
            assert_eq!(g.mul(0, x), x);
            assert_eq!(g.mul(x, 0), x);
            assert_eq!(g.mul(x, g.inv(x)), 0);
            for y in g.elements() {
                for z in g.elements() {
                    assert_eq!(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)));
                }
            }
        }
        assert!(n > 0);
    }

    #[test]
    fn builtin_families_satisfy_axioms() {
        for g in [
            FiniteGroup::symmetric(1),
            FiniteGroup::symmetric(3),
            FiniteGroup::symmetric(4),
            FiniteGroup::cyclic(1),
            FiniteGroup::cyclic(7),
            FiniteGroup::dihedral(1),
            FiniteGroup::dihedral(3),
            FiniteGroup::product(&FiniteGroup::cyclic(2), &FiniteGroup::symmetric(3)),
        ] {
            assert_group_axioms(&g);
        }
    }

    #[test]
    fn symmetric_three_layout() {
        let g = s3();
        assert_eq!(g.order(), 6);
        let names: Vec<&str> = g.elements().map(|x| g.name(x)).collect();
        assert_eq!(names, ["e", "(12)", "(23)", "(132)", "(123)", "(13)"]);
        let t12 = g.index_of("(12)").unwrap();
        let t13 = g.index_of("(13)").unwrap();
        // (12)(13) = (132) with right-to-left composition
        assert_eq!(g.name(g.mul(t12, t13)), "(132)");
        assert_eq!(g.name(g.mul(t13, t12)), "(123)");
    }

    #[test]
    fn element_orders() {
        let g = s3();
        assert_eq!(g.element_order(0), 1);
        assert_eq!(g.element_order(g.index_of("(123)").unwrap()), 3);
        assert_eq!(g.element_order(g.index_of("(12)").unwrap()), 2);
        let d = FiniteGroup::dihedral(2);
        assert_eq!(d.name(1), "r");
        assert_eq!(d.element_order(1), 4);
        for x in d.elements() {
            assert_eq!(d.order() as u64 % d.element_order(x), 0);
        }
    }

    #[test]
    fn conjugacy_classes_of_examples() {
        let cs = s3().conjugacy_classes();
        assert_eq!(cs.sizes(), vec![1, 3, 2]);
        assert_eq!(cs.representatives, vec![0, 1, 3]);

        let c4 = FiniteGroup::cyclic(4).conjugacy_classes();
        assert_eq!(c4.sizes(), vec![1, 1, 1, 1]);

        let mut sizes = FiniteGroup::dihedral(3).conjugacy_classes().sizes();
        sizes.sort();
        assert_eq!(sizes, vec![1, 1, 2, 2, 3, 3]);
    }

    #[test]
    fn centralizers_and_orbit_stabilizer() {
        let g = s3();
        let t12 = g.index_of("(12)").unwrap();
        assert_eq!(g.centralizer(t12).elements(), &[0, t12]);
        assert_eq!(g.centralizer(0).order(), 6);

        let d = FiniteGroup::dihedral(3);
        let s = d.index_of("s").unwrap();
        let z = d.centralizer(s);
        let names: Vec<&str> = z.elements().iter().map(|&x| d.name(x)).collect();
        assert_eq!(names, ["e", "r^3", "s", "r^3s"]);

        for grp in [g, d, FiniteGroup::symmetric(4)] {
            let cs = grp.conjugacy_classes();
            for x in grp.elements() {
                let class_size = cs.classes[cs.class_of[x]].len();
                assert_eq!(class_size * grp.centralizer(x).order(), grp.order());
            }
            assert_eq!(cs.sizes().iter().sum::<usize>(), grp.order());
        }
    }

    #[test]
    fn table_validation() {
        let bad_row = vec![vec![0, 1, 2], vec![1, 1, 0], vec![2, 0, 1]];
        assert!(matches!(
            FiniteGroup::from_table(bad_row, None),
            Err(Error::InvalidGroup(_))
        ));

        // latin square with identity 0 that is not associative (order 5 loop)
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = FiniteGroup::from_table(loop5, None).unwrap_err();
        assert_eq!(
            err,
            Error::InvalidGroup("multiplication is not associative".into())
        );

        let z3 = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]];
        assert_eq!(
            FiniteGroup::from_table(z3, None).unwrap(),
            FiniteGroup::cyclic(3).with_default_names()
        );
    }

    #[test]
    fn spec_parsing_and_limits() {
        assert_eq!(
            "S3".parse::<GroupSpec>().unwrap(),
            GroupSpec::Symmetric { n: 3 }
        );
        assert_eq!(
            "dihedral:3".parse::<GroupSpec>().unwrap(),
            GroupSpec::Dihedral { n: 3 }
        );
        assert_eq!(
            "S3xC2".parse::<GroupSpec>().unwrap(),
            GroupSpec::Product {
                factors: vec![GroupSpec::Symmetric { n: 3 }, GroupSpec::Cyclic { m: 2 }]
            }
        );
        let json: GroupSpec = r#"{"kind":"cyclic","m":5}"#.parse().unwrap();
        assert_eq!(json, GroupSpec::Cyclic { m: 5 });
        assert!("Q8".parse::<GroupSpec>().is_err());

        let spec = GroupSpec::Dihedral { n: 3 };
        assert_eq!(construct_group(&spec, 64).unwrap().order(), 12);
        assert_eq!(
            construct_group(&spec, 64)
                .unwrap()
                .conjugacy_classes()
                .len(),
            6
        );
        assert!(construct_group(&GroupSpec::Symmetric { n: 5 }, 64)
            .unwrap_err()
            .is_size_limit());
        assert!(matches!(
            construct_group(&GroupSpec::Symmetric { n: 6 }, 1000),
            Err(Error::InvalidGroup(_))
        ));
        assert!(construct_group(&GroupSpec::Cyclic { m: 0 }, 64).is_err());
    }

    #[test]
    fn generated_subgroups() {
        let g = s3();
        let a3 = Subgroup::generated_by(&g, [g.index_of("(123)").unwrap()]);
        assert_eq!(a3.order(), 3);
        assert!(Subgroup::from_elements(&g, vec![0, 1, 2]).is_err());
        assert!(Subgroup::from_elements(&g, a3.elements().to_vec()).is_ok());
    }

    impl FiniteGroup {
        fn with_default_names(mut self) -> Self {
            self.names = (0..self.order)
                .map(|i| {
                    if i == 0 {
                        "e".to_string()
                    } else {
                        format!("g{i}")
                    }
                })
                .collect();
            self
        }
    }
}
