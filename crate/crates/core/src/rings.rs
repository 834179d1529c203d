//! Finite commutative unital rings: `Z/mZ`, `GF(p^k)` and finite products.
//!
//! Every element is a canonical index in `0..size`. For `Z/mZ` the index is
//! the residue; for `GF(p^k)` it is `Σ c_i p^i` over the coefficient vector
//! in the polynomial basis; for products it is the mixed-radix tuple with the
//! first factor most significant. Index `0` is always the additive identity.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::abelian::{self, AbelianStructure};
use crate::error::{Error, Result};

pub const DEFAULT_MAX_RING_SIZE: u64 = 256;

/// Canonical index of a ring element.
pub type Scalar = u32;

/// Additive group of a ring as primary cyclic components `(p, i, generator)`.
pub type AdditivePrimaryDecomposition = AbelianStructure;

/// Recipe for building coefficients.
///
/// `Integers` is a tag standing for any torsion-free ring. It carries no
/// arithmetic and is accepted only by the outer-vanishing criteria.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum RingSpec {
    Zm {
        m: u64,
    },
    #[serde(rename = "GF")]
    Gf {
        p: u64,
        k: u32,
        /// Ascending coefficients of a monic irreducible of degree `k`.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        modulus: Option<Vec<u64>>,
    },
    #[serde(rename = "product")]
    Product {
        factors: Vec<RingSpec>,
    },
    Integers,
}

impl RingSpec {
    pub fn is_torsion_free_tag(&self) -> bool {
        matches!(self, RingSpec::Integers)
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Zm { m } => write!(f, "Zm:{m}"),
            RingSpec::Gf {
                p,
                k,
                modulus: None,
            } => write!(f, "GF:{p}:{k}"),
            RingSpec::Gf {
                p,
                k,
                modulus: Some(c),
            } => {
                let c: Vec<String> = c.iter().map(u64::to_string).collect();
                write!(f, "GF:{p}:{k}:{}", c.join(","))
            }
            RingSpec::Product { factors } => {
                for (i, r) in factors.iter().enumerate() {
                    if i > 0 {
                        f.write_str("x")?;
                    }
                    write!(f, "{r}")?;
                }
                Ok(())
            }
            RingSpec::Integers => f.write_str("Integers"),
        }
    }
}

/// Parses `Z4`, `Zm:4`, `GF:2:2`, `GF:2:2:1,1,1`, `Integers`, products
/// joined with `x` (`Z2xZ3`), or a JSON object.
impl FromStr for RingSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('{') {
            return serde_json::from_str(s).map_err(|e| Error::InvalidRing(e.to_string()));
        }
        let parts: Vec<&str> = s.split('x').collect();
        if parts.len() > 1 {
            let factors = parts
                .into_iter()
                .map(str::parse)
                .collect::<Result<Vec<RingSpec>>>()?;
            return Ok(RingSpec::Product { factors });
        }
        let bad = || Error::InvalidRing(format!("cannot parse ring spec {s:?}"));
        let int = |t: &str| t.trim().parse::<u64>().map_err(|_| bad());
        let fields: Vec<&str> = s.split(':').collect();
        match fields.as_slice() {
            ["Integers" | "integers" | "Z"] => Ok(RingSpec::Integers),
            ["Zm" | "Z" | "zm", m] => Ok(RingSpec::Zm { m: int(m)? }),
            [single] if single.starts_with('Z') => Ok(RingSpec::Zm {
                m: int(&single[1..])?,
            }),
            ["GF" | "gf", p, k] => Ok(RingSpec::Gf {
                p: int(p)?,
                k: int(k)? as u32,
                modulus: None,
            }),
            ["GF" | "gf", p, k, coeffs] => Ok(RingSpec::Gf {
                p: int(p)?,
                k: int(k)? as u32,
                modulus: Some(coeffs.split(',').map(int).collect::<Result<_>>()?),
            }),
            _ => Err(bad()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct GaloisField {
    p: u64,
    k: u32,
    /// Monic, ascending, length `k + 1`.
    modulus: Vec<u64>,
    mul_table: Vec<Scalar>,
}

impl GaloisField {
    fn size(&self) -> u64 {
        self.p.pow(self.k)
    }

    fn decode(&self, mut x: Scalar) -> Vec<u64> {
        (0..self.k)
            .map(|_| {
                let c = x as u64 % self.p;
                x /= self.p as Scalar;
                c
            })
            .collect()
    }

    fn encode(&self, coeffs: &[u64]) -> Scalar {
        coeffs.iter().rev().fold(0u64, |acc, &c| acc * self.p + c) as Scalar
    }

    fn add(&self, a: Scalar, b: Scalar) -> Scalar {
        let (x, y) = (self.decode(a), self.decode(b));
        let sum: Vec<u64> = x.iter().zip(&y).map(|(a, b)| (a + b) % self.p).collect();
        self.encode(&sum)
    }

    fn neg(&self, a: Scalar) -> Scalar {
        let x: Vec<u64> = self
            .decode(a)
            .iter()
            .map(|c| (self.p - c) % self.p)
            .collect();
        self.encode(&x)
    }

    fn mul_slow(&self, a: Scalar, b: Scalar) -> Scalar {
        let (x, y) = (self.decode(a), self.decode(b));
        let k = self.k as usize;
        let mut prod = vec![0u64; 2 * k];
        for (i, &xi) in x.iter().enumerate() {
            for (j, &yj) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + xi * yj) % self.p;
            }
        }
        poly_rem_monic(&mut prod, &self.modulus, self.p);
        self.encode(&prod[..k])
    }

    fn mul(&self, a: Scalar, b: Scalar) -> Scalar {
        if self.mul_table.is_empty() {
            self.mul_slow(a, b)
        } else {
            self.mul_table[a as usize * self.size() as usize + b as usize]
        }
    }

    fn display(&self, a: Scalar) -> String {
        if self.k == 1 {
            return a.to_string();
        }
        let c = self.decode(a);
        let terms: Vec<String> = (0..c.len())
            .rev()
            .filter(|&i| c[i] != 0)
            .map(|i| {
                let coeff = if c[i] == 1 && i > 0 {
                    String::new()
                } else {
                    c[i].to_string()
                };
                match i {
                    0 => coeff,
                    1 => format!("{coeff}x"),
                    _ => format!("{coeff}x^{i}"),
                }
            })
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join("+")
        }
    }
}

/// Reduces `poly` (ascending coefficients) modulo a monic `modulus` in place.
fn poly_rem_monic(poly: &mut [u64], modulus: &[u64], p: u64) {
    let deg = modulus.len() - 1;
    for top in (deg..poly.len()).rev() {
        let c = poly[top];
        if c == 0 {
            continue;
        }
        for (i, &m) in modulus.iter().enumerate() {
            let idx = top - deg + i;
            poly[idx] = (poly[idx] + p - (c * m) % p) % p;
        }
    }
}

/// True iff the monic `modulus` has no monic factor of degree `1..=deg/2`.
pub fn is_irreducible(modulus: &[u64], p: u64) -> bool {
    let deg = modulus.len() - 1;
    for d in 1..=deg / 2 {
        for low in 0..p.pow(d as u32) {
            let mut divisor: Vec<u64> = (0..d).map(|i| (low / p.pow(i as u32)) % p).collect();
            divisor.push(1);
            let mut rem = modulus.to_vec();
            poly_rem_monic(&mut rem, &divisor, p);
            if rem[..d].iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Smallest monic irreducible of degree `k` over `Z_p`, ordering candidates
/// by their lower coefficients read as a base-`p` number.
pub fn default_modulus(p: u64, k: u32) -> Vec<u64> {
    (0..p.pow(k))
        .map(|low| {
            let mut c: Vec<u64> = (0..k).map(|i| (low / p.pow(i)) % p).collect();
            c.push(1);
            c
        })
        .find(|c| is_irreducible(c, p))
        .expect("irreducible polynomials exist in every degree")
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum RingKind {
    Zm { m: u64 },
    Gf(GaloisField),
    Product(Vec<FiniteRing>),
}

/// A finite commutative unital ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteRing {
    kind: RingKind,
    size: u64,
}

pub fn construct_ring(spec: &RingSpec, max_size: u64) -> Result<FiniteRing> {
    let ring = match spec {
        RingSpec::Zm { m } => {
            if *m == 0 {
                return Err(Error::InvalidRing("modulus must be at least 1".into()));
            }
            check_size(*m, max_size)?;
            FiniteRing {
                kind: RingKind::Zm { m: *m },
                size: *m,
            }
        }
        RingSpec::Gf { p, k, modulus } => {
            if !abelian::is_prime(*p) {
                return Err(Error::InvalidRing(format!("{p} is not prime")));
            }
            if *k == 0 {
                return Err(Error::InvalidRing(
                    "extension degree must be at least 1".into(),
                ));
            }
            let size = p.checked_pow(*k).unwrap_or(u64::MAX);
            check_size(size, max_size)?;
            let modulus = match modulus {
                None => default_modulus(*p, *k),
                Some(c) => {
                    if c.len() != *k as usize + 1 || c.last() != Some(&1) {
                        return Err(Error::InvalidRing(format!(
                            "modulus must be monic of degree {k} (ascending coefficients)"
                        )));
                    }
                    if c.iter().any(|&x| x >= *p) {
                        return Err(Error::InvalidRing(format!(
                            "modulus coefficients must be below {p}"
                        )));
                    }
                    if !is_irreducible(c, *p) {
                        return Err(Error::InvalidRing("modulus is reducible".into()));
                    }
                    c.clone()
                }
            };
            let mut field = GaloisField {
                p: *p,
                k: *k,
                modulus,
                mul_table: Vec::new(),
            };
            if size <= 256 {
                let n = size as Scalar;
                field.mul_table = (0..n * n).map(|i| field.mul_slow(i / n, i % n)).collect();
            }
            FiniteRing {
                kind: RingKind::Gf(field),
                size,
            }
        }
        RingSpec::Product { factors } => {
            if factors.is_empty() {
                return Err(Error::InvalidRing(
                    "product needs at least one factor".into(),
                ));
            }
            let factors = factors
                .iter()
                .map(|f| construct_ring(f, max_size))
                .collect::<Result<Vec<_>>>()?;
            let size = factors
                .iter()
                .fold(1u64, |acc, f| acc.saturating_mul(f.size));
            check_size(size, max_size)?;
            FiniteRing {
                kind: RingKind::Product(factors),
                size,
            }
        }
        RingSpec::Integers => return Err(Error::SymbolicRing),
    };
    Ok(ring)
}

fn check_size(size: u64, max: u64) -> Result<()> {
    if size > max {
        Err(Error::SizeLimit {
            what: "ring size",
            actual: size,
            limit: max,
        })
    } else {
        Ok(())
    }
}

impl FiniteRing {
    pub fn zm(m: u64) -> Self {
        construct_ring(&RingSpec::Zm { m }, u64::MAX).expect("valid modulus")
    }

    pub fn gf(p: u64, k: u32) -> Self {
        construct_ring(
            &RingSpec::Gf {
                p,
                k,
                modulus: None,
            },
            u64::MAX,
        )
        .expect("valid field")
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn elements(&self) -> impl Iterator<Item = Scalar> {
        0..self.size as Scalar
    }

    pub fn zero(&self) -> Scalar {
        0
    }

    pub fn one(&self) -> Scalar {
        match &self.kind {
            RingKind::Zm { m } => (1 % m) as Scalar,
            RingKind::Gf(_) => 1,
            RingKind::Product(fs) => {
                self.encode_tuple(&fs.iter().map(FiniteRing::one).collect::<Vec<_>>())
            }
        }
    }

    pub fn is_field(&self) -> bool {
        match &self.kind {
            RingKind::Zm { m } => abelian::is_prime(*m),
            RingKind::Gf(_) => true,
            RingKind::Product(_) => false,
        }
    }

    fn decode_tuple(&self, mut x: Scalar) -> Vec<Scalar> {
        let RingKind::Product(fs) = &self.kind else {
            unreachable!("tuple decoding on a non-product ring")
        };
        let mut out = vec![0; fs.len()];
        for (slot, f) in out.iter_mut().zip(fs).rev() {
            *slot = (x as u64 % f.size) as Scalar;
            x = (x as u64 / f.size) as Scalar;
        }
        out
    }

    fn encode_tuple(&self, parts: &[Scalar]) -> Scalar {
        let RingKind::Product(fs) = &self.kind else {
            unreachable!("tuple encoding on a non-product ring")
        };
        fs.iter()
            .zip(parts)
            .fold(0u64, |acc, (f, &x)| acc * f.size + x as u64) as Scalar
    }

    fn zip_with(
        &self,
        a: Scalar,
        b: Scalar,
        op: impl Fn(&FiniteRing, Scalar, Scalar) -> Scalar,
    ) -> Scalar {
        let RingKind::Product(fs) = &self.kind else {
            unreachable!()
        };
        let (x, y) = (self.decode_tuple(a), self.decode_tuple(b));
        let parts: Vec<Scalar> = fs
            .iter()
            .zip(x.iter().zip(&y))
            .map(|(f, (&a, &b))| op(f, a, b))
            .collect();
        self.encode_tuple(&parts)
    }

    pub fn add(&self, a: Scalar, b: Scalar) -> Scalar {
        match &self.kind {
            RingKind::Zm { m } => ((a as u64 + b as u64) % m) as Scalar,
            RingKind::Gf(f) => f.add(a, b),
            RingKind::Product(_) => self.zip_with(a, b, FiniteRing::add),
        }
    }

    pub fn neg(&self, a: Scalar) -> Scalar {
        match &self.kind {
            RingKind::Zm { m } => ((m - a as u64) % m) as Scalar,
            RingKind::Gf(f) => f.neg(a),
            RingKind::Product(_) => self.zip_with(a, a, |f, x, _| f.neg(x)),
        }
    }

    pub fn sub(&self, a: Scalar, b: Scalar) -> Scalar {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Scalar, b: Scalar) -> Scalar {
        match &self.kind {
            RingKind::Zm { m } => ((a as u64 * b as u64) % m) as Scalar,
            RingKind::Gf(f) => f.mul(a, b),
            RingKind::Product(_) => self.zip_with(a, b, FiniteRing::mul),
        }
    }

    /// `k · a` in the additive group.
    pub fn int_mul(&self, mut k: u64, a: Scalar) -> Scalar {
        let mut acc = 0;
        let mut base = a;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(acc, base);
            }
            base = self.add(base, base);
            k >>= 1;
        }
        acc
    }

    /// `n · 1`, for any integer `n`.
    pub fn from_int(&self, n: i64) -> Scalar {
        let x = self.int_mul(n.unsigned_abs(), self.one());
        if n < 0 {
            self.neg(x)
        } else {
            x
        }
    }

    /// Least `k ≥ 1` with `k · a = 0`.
    pub fn additive_order(&self, a: Scalar) -> u64 {
        let mut k = 1;
        let mut acc = a;
        while acc != 0 {
            acc = self.add(acc, a);
            k += 1;
        }
        k
    }

    pub fn characteristic(&self) -> u64 {
        self.additive_order(self.one())
    }

    pub fn additive_decomposition(&self) -> AdditivePrimaryDecomposition {
        abelian::decompose(self.size as usize, 0, |a, b| {
            self.add(a as Scalar, b as Scalar) as usize
        })
    }

    /// The modulus when this ring is `Z/mZ`.
    pub fn modulus(&self) -> Option<u64> {
        match self.kind {
            RingKind::Zm { m } => Some(m),
            _ => None,
        }
    }

    pub fn display(&self, a: Scalar) -> String {
        match &self.kind {
            RingKind::Zm { .. } => a.to_string(),
            RingKind::Gf(f) => f.display(a),
            RingKind::Product(fs) => {
                let parts: Vec<String> = fs
                    .iter()
                    .zip(self.decode_tuple(a))
                    .map(|(f, x)| f.display(x))
                    .collect();
                format!("({})", parts.join(","))
            }
        }
    }

    /// Splits the ring into local factors: `Z/p^eZ` pieces (by CRT) and
    /// Galois fields.
    pub fn local_components(&self) -> Vec<LocalComponent> {
        let mut out = Vec::new();
        self.collect_local(&mut Vec::new(), &mut out);
        out
    }

    fn collect_local(&self, path: &mut Vec<usize>, out: &mut Vec<LocalComponent>) {
        match &self.kind {
            RingKind::Zm { m } => {
                for (p, e) in abelian::prime_factors(*m) {
                    let q = p.pow(e);
                    let rest = m / q;
                    // idempotent ≡ 1 (mod q), ≡ 0 (mod rest)
                    let idempotent = (0..*m)
                        .step_by(rest as usize)
                        .find(|x| x % q == 1 % q)
                        .unwrap_or(0);
                    out.push(LocalComponent {
                        kind: LocalKind::PrimePower { p, e },
                        path: path.clone(),
                        idempotent,
                    });
                }
            }
            RingKind::Gf(f) => out.push(LocalComponent {
                kind: LocalKind::Field {
                    field: self.clone(),
                    p: f.p,
                    k: f.k,
                },
                path: path.clone(),
                idempotent: 1,
            }),
            RingKind::Product(fs) => {
                for (i, f) in fs.iter().enumerate() {
                    path.push(i);
                    f.collect_local(path, out);
                    path.pop();
                }
            }
        }
    }

    /// Image of `x` in a local component.
    pub fn project(&self, comp: &LocalComponent, x: Scalar) -> Scalar {
        let mut ring = self;
        let mut x = x;
        for &i in &comp.path {
            let RingKind::Product(fs) = &ring.kind else {
                unreachable!()
            };
            x = ring.decode_tuple(x)[i];
            ring = &fs[i];
        }
        match comp.kind {
            LocalKind::PrimePower { p, e } => (x as u64 % p.pow(e)) as Scalar,
            LocalKind::Field { .. } => x,
        }
    }

    /// Element of this ring whose projection onto `comp` is `v` and whose
    /// projections onto all other components vanish.
    pub fn embed(&self, comp: &LocalComponent, v: Scalar) -> Scalar {
        self.embed_at(comp, &comp.path, v)
    }

    fn embed_at(&self, comp: &LocalComponent, path: &[usize], v: Scalar) -> Scalar {
        match (&self.kind, path.split_first()) {
            (RingKind::Product(fs), Some((&i, rest))) => {
                let mut parts = vec![0; fs.len()];
                parts[i] = fs[i].embed_at(comp, rest, v);
                self.encode_tuple(&parts)
            }
            (RingKind::Zm { m }, None) => ((v as u64 * comp.idempotent) % m) as Scalar,
            (RingKind::Gf(_), None) => v,
            _ => unreachable!("component path does not match ring shape"),
        }
    }
}

/// Shape of one local factor of a finite ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LocalKind {
    /// `Z/p^eZ`, elements are residues.
    PrimePower { p: u64, e: u32 },
    /// A Galois field; `field` is the ring itself with its own indexing.
    Field { field: FiniteRing, p: u64, k: u32 },
}

/// A local factor together with the route to reach it inside the ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalComponent {
    pub kind: LocalKind,
    path: Vec<usize>,
    idempotent: u64,
}
