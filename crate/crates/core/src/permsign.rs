//! Permutations of `{0, .., n-1}`, their cycles and signs, and the
//! number-theoretic symbols built on them.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use serde_json::Value;

use crate::error::{Error, Result};

/// A bijection of `{0, .., n-1}` stored by its images.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

/// Multiset of cycle lengths, `length -> multiplicity`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CycleType(pub BTreeMap<usize, usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::NotBijective(format!(
                    "image {x} repeated or out of range"
                )));
            }
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// `x -> r*x mod n`, defined when `gcd(r, n) = 1`.
    pub fn multiplication(r: i64, n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::NotCoprime(r, n));
        }
        let rr = (r as i128).rem_euclid(n as i128) as u64;
        if rr.gcd(&n) != 1 {
            return Err(Error::NotCoprime(r, n));
        }
        let images = (0..n as u128)
            .map(|x| ((rr as u128 * x) % n as u128) as usize)
            .collect();
        Ok(Permutation { images })
    }

    /// Builds a permutation from disjoint cycles; unlisted points are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        for c in cycles {
            for (k, &x) in c.iter().enumerate() {
                if x >= n {
                    return Err(Error::NotBijective(format!("{x} out of range")));
                }
                images[x] = c[(k + 1) % c.len()];
            }
        }
        Permutation::new(images)
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// `self` after `other`: `x -> self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.len());
        while e > 0 {
            if e & 1 == 1 {
                acc = base.compose(&acc);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Disjoint cycles, each starting at its smallest element, ordered by
    /// that element. Fixed points appear as 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    /// The cycle through `start`, beginning at `start`.
    pub fn cycle_from(&self, start: usize) -> Vec<usize> {
        let mut cycle = vec![start];
        let mut x = self.images[start];
        while x != start {
            cycle.push(x);
            x = self.images[x];
        }
        cycle
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut t = BTreeMap::new();
        for c in self.cycles() {
            *t.entry(c.len()).or_insert(0) += 1;
        }
        CycleType(t)
    }

    /// `(-1)^(n - #cycles)`.
    pub fn sign(&self) -> i8 {
        if (self.len() - self.cycles().len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Sign by counting inversions. Quadratic; meant for cross-checks.
    pub fn sign_by_inversions(&self) -> i8 {
        let n = self.len();
        let mut inv = 0usize;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    inv += 1;
                }
            }
        }
        if inv.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn is_single_cycle(&self) -> bool {
        !self.is_empty() && self.cycle_from(0).len() == self.len()
    }

    pub fn to_json(&self) -> Value {
        Value::from(self.images.clone())
    }

    /// Cycle notation, e.g. `(0,7,3,6,2,5,1,8,4)`. Fixed points are kept.
    pub fn cycle_notation(&self) -> String {
        self.cycles()
            .iter()
            .map(|c| {
                let inner: Vec<String> = c.iter().map(ToString::to_string).collect();
                format!("({})", inner.join(","))
            })
            .collect()
    }
}

impl CycleType {
    pub fn total(&self) -> usize {
        self.0.iter().map(|(len, mult)| len * mult).sum()
    }

    pub fn sign(&self) -> i8 {
        let odd: usize = self
            .0
            .iter()
            .filter(|(len, _)| *len % 2 == 0)
            .map(|(_, mult)| mult)
            .sum();
        if odd.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for CycleType {
    /// `1^a 2^b 4^c`, omitting zero multiplicities.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .filter(|(_, m)| **m > 0)
            .map(|(len, m)| format!("{len}^{m}"))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// Sign of `x -> r*x` on `Z/nZ`.
pub fn zolotareff(r: i64, n: u64) -> Result<i8> {
    Ok(Permutation::multiplication(r, n)?.sign())
}

/// Jacobi symbol `(r/n)` for odd positive `n`, by quadratic reciprocity.
pub fn jacobi(r: i64, n: u64) -> Result<i8> {
    if n.is_multiple_of(2) {
        return Err(Error::EvenModulus(n));
    }
    let mut a = (r as i128).rem_euclid(n as i128) as u64;
    let mut m = n;
    let mut acc = 1i8;
    loop {
        if m == 1 {
            return Ok(acc);
        }
        a %= m;
        if a == 0 {
            return Ok(0);
        }
        while a.is_multiple_of(2) {
            a /= 2;
            if m % 8 == 3 || m % 8 == 5 {
                acc = -acc;
            }
        }
        if a % 4 == 3 && m % 4 == 3 {
            acc = -acc;
        }
        std::mem::swap(&mut a, &mut m);
    }
}

/// Euler's totient by trial-division factorization.
pub fn euler_phi(mut n: u64) -> u64 {
    assert!(n >= 1, "totient of 0");
    let mut phi = n;
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if n > 1 {
        phi -= phi / n;
    }
    phi
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiplication_cycles() {
        let p = Permutation::multiplication(5, 13).unwrap();
        assert_eq!(p.cycle_type().to_string(), "1^1 4^3");
        assert_eq!(p.sign(), -1);
        let p = Permutation::multiplication(2, 7).unwrap();
        assert_eq!(p.cycles(), vec![vec![0], vec![1, 2, 4], vec![3, 6, 5]]);
    }

    #[test]
    fn identity_sign() {
        let id = Permutation::identity(5);
        assert_eq!(id.cycle_type().to_string(), "1^5");
        assert_eq!(id.sign(), 1);
    }

    #[test]
    fn nine_cycle_from_exchange_images() {
        let p = Permutation::new(vec![7, 8, 5, 6, 0, 1, 2, 3, 4]).unwrap();
        assert_eq!(p.cycle_notation(), "(0,7,3,6,2,5,1,8,4)");
        assert!(p.is_single_cycle());
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(matches!(
            Permutation::new(vec![0, 0]),
            Err(Error::NotBijective(_))
        ));
        assert!(matches!(
            Permutation::new(vec![2, 0]),
            Err(Error::NotBijective(_))
        ));
        assert_eq!(zolotareff(2, 4), Err(Error::NotCoprime(2, 4)));
    }

    #[test]
    fn zolotareff_values() {
        assert_eq!(zolotareff(2, 7), Ok(1));
        assert_eq!(zolotareff(1, 9), Ok(1));
        assert_eq!(zolotareff(5, 13), Ok(-1));
        assert_eq!(zolotareff(-1, 5), Ok(1));
        assert_eq!(zolotareff(0, 1), Ok(1));
    }

    #[test]
    fn jacobi_values() {
        assert_eq!(jacobi(2, 7), Ok(1));
        assert_eq!(jacobi(12345, 1), Ok(1));
        assert_eq!(jacobi(3, 5), Ok(-1));
        assert_eq!(jacobi(6, 9), Ok(0));
        assert_eq!(jacobi(-1, 7), Ok(-1));
        assert_eq!(jacobi(2, 8), Err(Error::EvenModulus(8)));
    }

    #[test]
    fn totients() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(7), 6);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(36), 12);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn coprime(max_n: u64) -> impl Strategy<Value = (i64, i64, u64)> {
            (2..max_n)
                .prop_flat_map(|n| (1..n as i64, 1..n as i64, Just(n)))
                .prop_filter("coprime", |(r, s, n)| {
                    (*r as u64).gcd(n) == 1 && (*s as u64).gcd(n) == 1
                })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(500))]

            #[test]
            fn zolotareff_is_multiplicative((r, s, n) in coprime(200)) {
                let rs = (r * s) % n as i64;
                prop_assert_eq!(
                    zolotareff(rs, n).unwrap(),
                    zolotareff(r, n).unwrap() * zolotareff(s, n).unwrap()
                );
            }

            #[test]
            fn cycle_sign_matches_inversions(images in (0usize..=9).prop_flat_map(|n| {
                Just((0..n).collect::<Vec<_>>()).prop_shuffle()
            })) {
                let p = Permutation::new(images).unwrap();
                prop_assert_eq!(p.sign(), p.sign_by_inversions());
                prop_assert_eq!(p.sign(), p.cycle_type().sign());
            }

            #[test]
            fn nonzero_residue_sign_equals_full_sign((r, _s, n) in coprime(120)) {
                // x -> rx fixes 0, so dropping it keeps the sign
                let full = Permutation::multiplication(r, n).unwrap();
                let restricted = Permutation::new(
                    (1..n as usize).map(|x| full.apply(x) - 1).collect()
                ).unwrap();
                prop_assert_eq!(restricted.sign(), full.sign());
            }
        }
    }
}
