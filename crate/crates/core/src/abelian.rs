//! Primary decomposition of small finite abelian groups given by an addition
//! closure on element indices.
//!
//! Generators are extracted greedily: within each Sylow subgroup, repeatedly
//! take an element of maximal order modulo the span found so far and lift it
//! to an element of the same order. No integer matrices are involved.

use serde::{Deserialize, Serialize};

/// One cyclic summand `Z_{p^e}` together with a generating element index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicFactor {
    pub prime: u64,
    pub exponent: u32,
    pub generator: usize,
}

impl CyclicFactor {
    pub fn order(&self) -> u64 {
        self.prime.pow(self.exponent)
    }
}

/// A finite abelian group written as a direct sum of primary cyclic groups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianStructure {
    pub factors: Vec<CyclicFactor>,
    /// `coords[x][i]` is the coefficient of factor `i` in element `x`.
    pub coords: Vec<Vec<u64>>,
}

impl AbelianStructure {
    pub fn size(&self) -> u64 {
        self.factors.iter().map(CyclicFactor::order).product()
    }

    /// `(prime, exponent)` pairs in factor order.
    pub fn invariants(&self) -> Vec<(u64, u32)> {
        self.factors.iter().map(|f| (f.prime, f.exponent)).collect()
    }
}

pub fn prime_factors(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && prime_factors(n) == vec![(n, 1)]
}

/// If `n` is a power of a single prime, returns `(p, e)`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    match prime_factors(n).as_slice() {
        [(p, e)] => Some((*p, *e)),
        _ => None,
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Decomposes the abelian group on `0..n` with identity `zero` and the given
/// addition.
pub fn decompose<F>(n: usize, zero: usize, add: F) -> AbelianStructure
where
    F: Fn(usize, usize) -> usize,
{
    let orders: Vec<u64> = (0..n)
        .map(|x| {
            let mut k = 1;
            let mut acc = x;
            while acc != zero {
                acc = add(acc, x);
                k += 1;
            }
            k
        })
        .collect();

    let mut factors = Vec::new();
    for (p, _) in prime_factors(n as u64) {
        let sylow: Vec<usize> = (0..n)
            .filter(|&x| prime_power(orders[x]).is_some_and(|(q, _)| q == p) || x == zero)
            .collect();
        let mut span = vec![false; n];
        span[zero] = true;
        let mut span_size = 1usize;

        while span_size < sylow.len() {
            // Element of maximal order modulo the current span; ties go to
            // the smallest index.
            let mut best: Option<(usize, u64)> = None;
            for &x in &sylow {
                if span[x] {
                    continue;
                }
                let mut k = 1;
                let mut acc = x;
                while !span[acc] {
                    acc = add(acc, x);
                    k += 1;
                }
                if best.is_none_or(|(_, bk)| k > bk) {
                    best = Some((x, k));
                }
            }
            let (x, quotient_order) = best.expect("span smaller than Sylow subgroup");

            let members: Vec<usize> = (0..n).filter(|&s| span[s]).collect();
            let lifted = members
                .iter()
                .map(|&s| add(x, s))
                .filter(|&y| orders[y] == quotient_order)
                .min()
                .expect("an element of maximal quotient order always lifts");

            let mut next = vec![false; n];
            let mut multiple = zero;
            for _ in 0..quotient_order {
                for &s in &members {
                    next[add(s, multiple)] = true;
                }
                multiple = add(multiple, lifted);
            }
            span = next;
            span_size *= quotient_order as usize;

            let (_, exponent) = prime_power(quotient_order).expect("p-power order");
            factors.push(CyclicFactor {
                prime: p,
                exponent,
                generator: lifted,
            });
        }
    }

    let mut coords = vec![Vec::new(); n];
    let mut digits = vec![0u64; factors.len()];
    let total: u64 = factors.iter().map(CyclicFactor::order).product();
    for _ in 0..total {
        let mut x = zero;
        for (f, &c) in factors.iter().zip(&digits) {
            for _ in 0..c {
                x = add(x, f.generator);
            }
        }
        coords[x] = digits.clone();
        for (d, f) in digits.iter_mut().zip(&factors) {
            *d += 1;
            if *d < f.order() {
                break;
            }
            *d = 0;
        }
    }

    AbelianStructure { factors, coords }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic_sum(moduli: &[usize]) -> (usize, impl Fn(usize, usize) -> usize + '_) {
        let n: usize = moduli.iter().product();
        let add = move |a: usize, b: usize| {
            let (mut a, mut b) = (a, b);
            let mut out = 0;
            let mut radix = 1;
            for &m in moduli {
                out += ((a % m + b % m) % m) * radix;
                radix *= m;
                a /= m;
                b /= m;
            }
            out
        };
        (n, add)
    }

    #[test]
    fn z12_splits_into_z4_and_z3() {
        let s = decompose(12, 0, |a, b| (a + b) % 12);
        assert_eq!(s.invariants(), vec![(2, 2), (3, 1)]);
        assert_eq!(s.factors[0].generator, 3);
        assert_eq!(s.factors[1].generator, 4);
    }

    #[test]
    fn z2_times_z4_times_z3() {
        let (n, add) = cyclic_sum(&[2, 4, 3]);
        let s = decompose(n, 0, &add);
        assert_eq!(s.invariants(), vec![(2, 2), (2, 1), (3, 1)]);
        assert_eq!(s.size(), 24);
        let mut seen = std::collections::HashSet::new();
        for c in &s.coords {
            assert!(seen.insert(c.clone()));
        }
    }

    #[test]
    fn trivial_group() {
        let s = decompose(1, 0, |_, _| 0);
        assert!(s.factors.is_empty());
        assert_eq!(s.coords, vec![Vec::<u64>::new()]);
    }

    #[test]
    fn prime_helpers() {
        assert_eq!(prime_factors(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(prime_power(49), Some((7, 2)));
        assert_eq!(prime_power(12), None);
        assert!(is_prime(251));
        assert!(!is_prime(1));
        assert_eq!(gcd(12, 18), 6);
    }
}
