//! The Fibonacci slope `[0; 1, 1, ..]`: its word chain, the closed-form
//! determinantal vectors it specializes to, and the sign of
//! `x -> F_{m-2} x` on `Z/F_m`.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::permsign::CycleType;
use crate::words::Word;

/// `F_m` with `F_0 = 0`, `F_1 = F_2 = 1`.
pub fn fib(m: u64) -> BigUint {
    let (mut a, mut b) = (BigUint::zero(), BigUint::one());
    for _ in 0..m {
        (a, b) = (b.clone(), a + b);
    }
    a
}

/// `L_m` with `L_0 = 2`, `L_1 = 1`.
pub fn lucas(m: u64) -> BigUint {
    let (mut a, mut b) = (BigUint::from(2u8), BigUint::one());
    for _ in 0..m {
        (a, b) = (b.clone(), a + b);
    }
    a
}

/// `F_k` for any integer `k`, using `F_{-k} = (-1)^(k+1) F_k`.
pub fn fib_signed(k: i64) -> BigInt {
    let v = BigInt::from(fib(k.unsigned_abs()));
    if k < 0 && k % 2 == 0 {
        -v
    } else {
        v
    }
}

fn fib_i64(k: i64) -> i64 {
    fib_signed(k).to_i64().expect("small index")
}

/// Index, Fibonacci and Lucas values together.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibContext {
    pub m: u64,
    pub f: BigUint,
    pub l: BigUint,
}

impl FibContext {
    pub fn new(m: u64) -> Self {
        FibContext {
            m,
            f: fib(m),
            l: lucas(m),
        }
    }
}

/// `w_0, .., w_{count-1}` from `w_{-2} = 1`, `w_{-1} = 0`:
/// `w_v = w_{v-1} w_{v-2}` for even `v`, `w_{v-2} w_{v-1}` for odd `v`.
pub fn fib_word_chain(count: usize) -> Vec<Word<u8>> {
    let (mut older, mut old) = (vec![1u8], vec![0u8]);
    let mut out = Vec::with_capacity(count);
    for nu in 0..count {
        let next = if nu % 2 == 0 {
            [old.as_slice(), older.as_slice()].concat()
        } else {
            [older.as_slice(), old.as_slice()].concat()
        };
        out.push(Word::new(next.clone()));
        (older, old) = (old, next);
    }
    out
}

/// The closed form specialized to the Fibonacci slope.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FibPrediction {
    pub n: usize,
    pub nu: usize,
    pub i: usize,
    pub composition: Vec<usize>,
    pub alphabet: Vec<i64>,
    /// Distinct absolute values of the components.
    pub abs_values: Vec<i64>,
}

/// `v` with `F_{v+2} <= n <= F_{v+3} - 1`.
pub fn fib_nu(n: usize) -> Result<usize> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("length {n} < 2")));
    }
    (1..90)
        .find(|&nu| n < fib(nu as u64 + 3).to_usize().unwrap_or(usize::MAX))
        .ok_or_else(|| Error::OutOfRange(format!("length {n} too large")))
}

/// Composition `(F_{v+1} - i, i, F_{v+2} - i)` over
/// `{-F_v, -F_{v-2}, F_{v-1}}` for even `v`, and
/// `(F_{v+2} - i, i, F_{v+1} - i)` over `{-F_{v-1}, F_{v-2}, F_v}` for odd `v`.
pub fn fib_detvec_prediction(n: usize) -> Result<FibPrediction> {
    let nu = fib_nu(n)?;
    let v = nu as i64;
    let f = |k: i64| fib_i64(k);
    let i = f(v + 3) as usize - 1 - n;
    let (small, large) = (f(v + 1) as usize, f(v + 2) as usize);
    let (composition, alphabet) = if nu % 2 == 0 {
        (
            vec![small - i, i, large - i],
            vec![-f(v), -f(v - 2), f(v - 1)],
        )
    } else {
        (
            vec![large - i, i, small - i],
            vec![-f(v - 1), f(v - 2), f(v)],
        )
    };
    let mut abs_values: Vec<i64> = alphabet
        .iter()
        .zip(&composition)
        .filter(|(_, &c)| c > 0)
        .map(|(a, _)| a.abs())
        .collect();
    abs_values.sort_unstable();
    abs_values.dedup();
    Ok(FibPrediction {
        n,
        nu,
        i,
        composition,
        alphabet,
        abs_values,
    })
}

/// `|det|` of the `n` largest factors at `n = F_{v+3} - 1`:
/// `F_{v-1}` for even `v`, `F_v` for odd `v`.
pub fn boundary_largest_minor(nu: usize) -> i64 {
    if nu.is_multiple_of(2) {
        fib_i64(nu as i64 - 1)
    } else {
        fib_i64(nu as i64)
    }
}

/// Closed-form cycle type and sign of `x -> F_{m-2} x` on `Z/F_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibSign {
    pub m: u64,
    /// Which of the four cases applies: `'a'`..`'d'`.
    pub case: char,
    pub cycle_type: CycleType,
    pub sign: i8,
}

/// Largest `m` whose `F_m` fits comfortably in `usize` cycle counts.
const MAX_SIGN_INDEX: u64 = 90;

fn cycle_type(parts: &[(usize, u64)]) -> CycleType {
    CycleType(
        parts
            .iter()
            .filter(|(_, mult)| *mult > 0)
            .map(|&(len, mult)| (len, mult as usize))
            .collect::<BTreeMap<_, _>>(),
    )
}

pub fn fib_sign(m: u64) -> Result<FibSign> {
    if m < 3 {
        return Err(Error::IndexTooSmall(format!("m = {m} < 3")));
    }
    if m > MAX_SIGN_INDEX {
        return Err(Error::OutOfRange(format!("m = {m} > {MAX_SIGN_INDEX}")));
    }
    let f = |k: u64| fib(k).to_u64().expect("m <= 90");
    let fm = f(m);
    let (case, ct) = if m.is_multiple_of(4) {
        let l = lucas(m / 2).to_u64().expect("m <= 90");
        ('a', cycle_type(&[(1, l), (2, (fm - l) / 2)]))
    } else if m % 4 == 2 {
        let h = f(m / 2);
        ('b', cycle_type(&[(1, h), (2, (fm - h) / 2)]))
    } else if m % 6 == 3 {
        ('d', cycle_type(&[(1, 2), (4, (fm - 2) / 4)]))
    } else {
        ('c', cycle_type(&[(1, 1), (4, (fm - 1) / 4)]))
    };
    Ok(FibSign {
        m,
        case,
        sign: ct.sign(),
        cycle_type: ct,
    })
}

/// `+1` for `m = 1, 2, 3, 4, 9, 11 (mod 12)`, `-1` otherwise.
pub fn fib_sign_table(m: u64) -> i8 {
    match m % 12 {
        1 | 2 | 3 | 4 | 9 | 11 => 1,
        _ => -1,
    }
}

/// Outcome of the three gcd identities for one `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GcdLemma {
    /// `gcd(F_{6k+1} - 1, F_{6k+3}) = 2`
    pub a: bool,
    /// `gcd(F_{6k+3} - 1, F_{6k+5}) = 1`
    pub b: bool,
    /// `gcd(F_{6k-1} - 1, F_{6k+1}) = 1`, for `k >= 1`
    pub c: Option<bool>,
}

pub fn gcd_lemma_check(k: u64) -> GcdLemma {
    let g = |x: u64, y: u64| (fib(x) - BigUint::one()).gcd(&fib(y));
    GcdLemma {
        a: g(6 * k + 1, 6 * k + 3) == BigUint::from(2u8),
        b: g(6 * k + 3, 6 * k + 5).is_one(),
        c: (k >= 1).then(|| g(6 * k - 1, 6 * k + 1).is_one()),
    }
}

impl GcdLemma {
    pub fn holds(&self) -> bool {
        self.a && self.b && self.c.unwrap_or(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permsign::{zolotareff, Permutation};
    use crate::sturmian::{
        determinantal_vector_closed, determinantal_vector_oracle, factor_matrix, SturmianSlope,
    };
    use crate::words::ChristoffelKind;

    #[test]
    fn numbers() {
        assert_eq!(fib(7), BigUint::from(13u8));
        assert_eq!(fib(10), BigUint::from(55u8));
        assert_eq!(fib(0), BigUint::zero());
        assert_eq!(lucas(4), BigUint::from(7u8));
        assert_eq!(lucas(6), BigUint::from(18u8));
        assert_eq!(fib_signed(-1), BigInt::one());
        assert_eq!(fib_signed(-2), BigInt::from(-1));
        let ctx = FibContext::new(5);
        assert_eq!((ctx.f, ctx.l), (BigUint::from(5u8), BigUint::from(11u8)));
    }

    #[test]
    fn word_chain() {
        let chain = fib_word_chain(5);
        let s: Vec<String> = chain.iter().map(ToString::to_string).collect();
        assert_eq!(s, ["01", "001", "00101", "00100101", "0010010100101"]);
        let sturm = SturmianSlope::fibonacci(12).all_chain_words().unwrap();
        let chain = fib_word_chain(10);
        assert_eq!(chain[..], sturm[..10]);
        for (nu, w) in chain.iter().enumerate() {
            let nu = nu as u64;
            assert_eq!(BigUint::from(w.len()), fib(nu + 3));
            assert_eq!(BigUint::from(w.count(&0)), fib(nu + 2));
            assert_eq!(BigUint::from(w.count(&1)), fib(nu + 1));
            assert_eq!(w.is_christoffel(), ChristoffelKind::Lower);
        }
    }

    #[test]
    fn predictions() {
        let p = fib_detvec_prediction(4).unwrap();
        assert_eq!((p.nu, p.i), (2, 0));
        assert_eq!(p.composition, [2, 0, 3]);
        assert_eq!(p.alphabet, [-1, 0, 1]);
        assert_eq!(p.abs_values, [1]);
        let p = fib_detvec_prediction(3).unwrap();
        assert_eq!((p.nu, p.i, p.composition.clone()), (2, 1, vec![1, 1, 2]));
        assert!(fib_detvec_prediction(1).is_err());
    }

    #[test]
    fn predictions_agree_with_closed_form() {
        let s = SturmianSlope::fibonacci(12);
        for n in 2..=33 {
            let p = fib_detvec_prediction(n).unwrap();
            let ctx = determinantal_vector_closed(&s, n).unwrap().context.unwrap();
            assert_eq!((p.nu, p.i), (ctx.nu, ctx.i), "n = {n}");
            if p.i == 0 {
                assert_eq!(ctx.composition, [p.composition[0], p.composition[2]]);
                assert_eq!(ctx.alphabet, [p.alphabet[0], p.alphabet[2]]);
            } else {
                assert_eq!(ctx.composition, p.composition);
                assert_eq!(ctx.alphabet, p.alphabet);
            }
        }
    }

    #[test]
    fn boundary_minors() {
        let s = SturmianSlope::fibonacci(14);
        for nu in 2..=7usize {
            let n = fib(nu as u64 + 3).to_usize().unwrap() - 1;
            let v = determinantal_vector_oracle(&factor_matrix(&s, n).unwrap()).unwrap();
            assert_eq!(
                v.components.last().unwrap().abs(),
                boundary_largest_minor(nu),
                "nu = {nu}"
            );
        }
    }

    #[test]
    fn sign_examples() {
        let s = fib_sign(7).unwrap();
        assert_eq!(
            (s.case, s.cycle_type.to_string(), s.sign),
            ('c', "1^1 4^3".into(), -1)
        );
        let s = fib_sign(9).unwrap();
        assert_eq!(
            (s.case, s.cycle_type.to_string(), s.sign),
            ('d', "1^2 4^8".into(), 1)
        );
        let s = fib_sign(12).unwrap();
        assert_eq!(
            (s.case, s.cycle_type.to_string(), s.sign),
            ('a', "1^18 2^63".into(), -1)
        );
        assert_eq!(fib_sign(3).unwrap().cycle_type.to_string(), "1^2");
        assert!(matches!(fib_sign(2), Err(Error::IndexTooSmall(_))));
    }

    #[test]
    fn sign_matches_permutations() {
        for m in 3..=25u64 {
            let s = fib_sign(m).unwrap();
            let fm = fib(m).to_u64().unwrap();
            let p = Permutation::multiplication(fib(m - 2).to_i64().unwrap(), fm).unwrap();
            assert_eq!(s.cycle_type, p.cycle_type(), "m = {m}");
            assert_eq!(s.cycle_type.total() as u64, fm);
            assert_eq!(s.sign, p.sign());
        }
        for m in 3..=30u64 {
            let z = zolotareff(fib(m - 2).to_i64().unwrap(), fib(m).to_u64().unwrap()).unwrap();
            assert_eq!(fib_sign_table(m), z, "m = {m}");
            assert_eq!(fib_sign(m).unwrap().sign, z);
        }
    }

    #[test]
    fn gcd_lemma() {
        assert_eq!(
            gcd_lemma_check(0),
            GcdLemma {
                a: true,
                b: true,
                c: None
            }
        );
        assert!(gcd_lemma_check(1).holds());
        for k in 0..=8 {
            assert!(gcd_lemma_check(k).holds(), "k = {k}");
        }
    }
}
