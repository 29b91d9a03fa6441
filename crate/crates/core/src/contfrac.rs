//! Continued fractions, continuants and the Stern-Brocot tree, as they
//! govern lengths and standard factorizations of Christoffel words.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::words::SlopeRatio;

/// Finite continued fraction `[n_0; n_1, .., n_k]` with `n_0 >= 0` and
/// later quotients `>= 1`. A trailing quotient 1 is accepted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct ContinuedFraction {
    quotients: Vec<u64>,
}

impl ContinuedFraction {
    pub fn new(quotients: Vec<u64>) -> Result<Self> {
        if quotients.is_empty() {
            return Err(Error::InvalidCF("no quotients".into()));
        }
        if let Some(pos) = quotients.iter().skip(1).position(|&q| q == 0) {
            return Err(Error::InvalidCF(format!("quotient {} is 0", pos + 1)));
        }
        Ok(ContinuedFraction { quotients })
    }

    /// Expansion of `ones/zeros` by Euclid, in canonical form.
    pub fn from_ratio(slope: SlopeRatio) -> Result<Self> {
        let (mut p, mut q) = (slope.ones(), slope.zeros());
        if q == 0 {
            return Err(Error::OutOfRange(format!(
                "{slope} has no finite expansion"
            )));
        }
        let mut quotients = Vec::new();
        while q != 0 {
            quotients.push(p / q);
            (p, q) = (q, p % q);
        }
        ContinuedFraction::new(quotients)
    }

    pub fn quotients(&self) -> &[u64] {
        &self.quotients
    }

    /// Index `k` of the last quotient.
    pub fn last_index(&self) -> usize {
        self.quotients.len() - 1
    }

    /// Canonical form: a trailing 1 is folded into its predecessor.
    pub fn normalize(&self) -> ContinuedFraction {
        let mut q = self.quotients.clone();
        if q.len() > 1 && q[q.len() - 1] == 1 {
            q.pop();
            *q.last_mut().expect("nonempty") += 1;
        }
        ContinuedFraction { quotients: q }
    }

    pub fn is_canonical(&self) -> bool {
        self.quotients.len() == 1 || *self.quotients.last().expect("nonempty") >= 2
    }

    pub fn value_exact(&self) -> BigRational {
        let q: Vec<BigInt> = self.quotients.iter().map(|&x| BigInt::from(x)).collect();
        BigRational::new(continuant(&q), continuant(&q[1..]))
    }
}

impl TryFrom<Vec<u64>> for ContinuedFraction {
    type Error = Error;

    fn try_from(v: Vec<u64>) -> Result<Self> {
        ContinuedFraction::new(v)
    }
}

impl From<ContinuedFraction> for Vec<u64> {
    fn from(cf: ContinuedFraction) -> Self {
        cf.quotients
    }
}

impl fmt::Display for ContinuedFraction {
    /// `[n0;n1,n2,...]`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rest: Vec<String> = self.quotients[1..]
            .iter()
            .map(ToString::to_string)
            .collect();
        if rest.is_empty() {
            write!(f, "[{}]", self.quotients[0])
        } else {
            write!(f, "[{};{}]", self.quotients[0], rest.join(","))
        }
    }
}

impl FromStr for ContinuedFraction {
    type Err = Error;

    /// Accepts `[n0;n1,...]`, `[n0,n1,...]` and bare `n0,n1,...`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
        let quotients = inner
            .split([',', ';'])
            .map(|t| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::Parse(format!("bad quotient {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        ContinuedFraction::new(quotients)
    }
}

/// `K()` = 1, `K(x_1)` = `x_1`, `K(x_1..x_n) = K(x_1..x_{n-1}) x_n + K(x_1..x_{n-2})`.
pub fn continuant(xs: &[BigInt]) -> BigInt {
    let (mut prev, mut cur) = (BigInt::zero(), BigInt::one());
    for x in xs {
        (prev, cur) = (cur.clone(), &cur * x + prev);
    }
    cur
}

pub fn continuant_u64(xs: &[u64]) -> BigInt {
    continuant(&xs.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>())
}

/// 2x2 integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PMatrix(pub [[BigInt; 2]; 2]);

impl PMatrix {
    /// `P(a) = [[a, 1], [1, 0]]`.
    pub fn p(a: u64) -> Self {
        PMatrix([
            [BigInt::from(a), BigInt::one()],
            [BigInt::one(), BigInt::zero()],
        ])
    }

    pub fn identity() -> Self {
        PMatrix([
            [BigInt::one(), BigInt::zero()],
            [BigInt::zero(), BigInt::one()],
        ])
    }

    pub fn mul(&self, o: &PMatrix) -> PMatrix {
        let (a, b) = (&self.0, &o.0);
        let e = |i: usize, j: usize| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j];
        PMatrix([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn det(&self) -> BigInt {
        let m = &self.0;
        &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0]
    }

    pub fn swap_columns(&self) -> PMatrix {
        let m = &self.0;
        PMatrix([
            [m[0][1].clone(), m[0][0].clone()],
            [m[1][1].clone(), m[1][0].clone()],
        ])
    }

    fn entry_u64(&self, i: usize, j: usize) -> Result<u64> {
        self.0[i][j]
            .to_u64()
            .ok_or_else(|| Error::OutOfRange(format!("entry {} overflows", self.0[i][j])))
    }
}

impl fmt::Display for PMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.0;
        write!(f, "[[{},{}],[{},{}]]", m[0][0], m[0][1], m[1][0], m[1][1])
    }
}

/// `P(n_0) P(n_1) .. P(n_k)`.
pub fn p_product(quotients: &[u64]) -> PMatrix {
    quotients
        .iter()
        .fold(PMatrix::identity(), |acc, &a| acc.mul(&PMatrix::p(a)))
}

fn ratio_from_big(num: BigInt, den: BigInt) -> Result<SlopeRatio> {
    let conv = |x: &BigInt| {
        x.to_u64()
            .ok_or_else(|| Error::OutOfRange(format!("{x} does not fit in 64 bits")))
    };
    SlopeRatio::new(conv(&num)?, conv(&den)?)
}

/// `K(n_0..n_k) / K(n_1..n_k)` as a slope `ones/zeros`.
pub fn cf_value(cf: &ContinuedFraction) -> Result<SlopeRatio> {
    let q = cf.quotients();
    ratio_from_big(continuant_u64(q), continuant_u64(&q[1..]))
}

/// All `[n_0, .., n_{m-1}, h]` with `1 <= h <= n_m`, in order of `m` then `h`.
pub fn semiconvergents(cf: &ContinuedFraction) -> Result<Vec<SlopeRatio>> {
    let q = cf.quotients();
    let mut out = Vec::new();
    for m in 0..q.len() {
        for h in 1..=q[m] {
            let mut prefix = q[..m].to_vec();
            prefix.push(h);
            out.push(cf_value(&ContinuedFraction::new(prefix)?)?);
        }
    }
    Ok(out)
}

/// `|w| = K(n_0..n_k) + K(n_1..n_k)`.
pub fn christoffel_length(cf: &ContinuedFraction) -> BigInt {
    let q = cf.quotients();
    continuant_u64(q) + continuant_u64(&q[1..])
}

/// Letter counts of the standard factorization `w = w' w''` of a lower
/// Christoffel word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PppFactorization {
    /// `P(n_0) .. P(n_{m-1}) P(n_m - 1)`.
    pub matrix: PMatrix,
    /// Parity of `m`: columns were swapped when odd.
    pub m_is_even: bool,
    /// `(|w'|_0, |w'|_1)`.
    pub left_counts: (u64, u64),
    /// `(|w''|_0, |w''|_1)`.
    pub right_counts: (u64, u64),
}

/// The product `P(n_0) .. P(n_{m-1}) P(n_m - 1)` reads
/// `[[|w'|_1, |w''|_1], [|w'|_0, |w''|_0]]` for even `m`, columns
/// swapped for odd `m`.
pub fn ppp_factorization(cf: &ContinuedFraction) -> Result<PppFactorization> {
    let q = cf.quotients();
    if q == [0] {
        return Err(Error::InvalidCF(
            "[0] is the slope of the single letter 0".into(),
        ));
    }
    let m = cf.last_index();
    let mut factors = q[..m].to_vec();
    factors.push(q[m] - 1);
    let matrix = p_product(&factors);
    let m_is_even = m.is_multiple_of(2);
    let counts = if m_is_even {
        matrix.clone()
    } else {
        matrix.swap_columns()
    };
    Ok(PppFactorization {
        left_counts: (counts.entry_u64(1, 0)?, counts.entry_u64(0, 0)?),
        right_counts: (counts.entry_u64(1, 1)?, counts.entry_u64(0, 1)?),
        matrix,
        m_is_even,
    })
}

/// `S = s / (1 + s)`: proportion of ones from the ones-to-zeros ratio.
pub fn lower_to_upper(s: &BigRational) -> Result<BigRational> {
    if s.is_negative() {
        return Err(Error::OutOfRange(format!("slope {s} is negative")));
    }
    Ok(s / (BigRational::one() + s))
}

/// `s = S / (1 - S)`, for `0 < S < 1`.
pub fn upper_to_lower(big_s: &BigRational) -> Result<BigRational> {
    if !big_s.is_positive() || *big_s >= BigRational::one() {
        return Err(Error::OutOfRange(format!("{big_s} not in (0, 1)")));
    }
    Ok(big_s / (BigRational::one() - big_s))
}

/// `[0, a_1, a_2, ..]` becomes `[0, a_1 - 1, a_2, ..]` if `a_1 >= 2`,
/// and `[a_2, ..]` if `a_1 = 1`.
pub fn cf_upper_to_lower(cf: &ContinuedFraction) -> Result<ContinuedFraction> {
    let q = cf.normalize().quotients;
    match q.as_slice() {
        [0, a1, rest @ ..] if *a1 >= 2 => {
            let mut out = vec![0, a1 - 1];
            out.extend_from_slice(rest);
            ContinuedFraction::new(out)
        }
        [0, 1, rest @ ..] if !rest.is_empty() => ContinuedFraction::new(rest.to_vec()),
        _ => Err(Error::OutOfRange(format!("{cf} not in (0, 1)"))),
    }
}

/// Inverse of [`cf_upper_to_lower`].
pub fn cf_lower_to_upper(cf: &ContinuedFraction) -> Result<ContinuedFraction> {
    let q = cf.normalize().quotients;
    let out = match q.as_slice() {
        [0] => vec![0],
        [0, a1, rest @ ..] => {
            let mut out = vec![0, a1 + 1];
            out.extend_from_slice(rest);
            out
        }
        _ => {
            let mut out = vec![0, 1];
            out.extend_from_slice(&q);
            out
        }
    };
    ContinuedFraction::new(out)
}

/// A step in the Stern-Brocot tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Turn {
    Left,
    Right,
}

impl fmt::Display for Turn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Turn::Left => "ℓ",
            Turn::Right => "r",
        })
    }
}

fn descend(slope: SlopeRatio) -> Result<(Vec<Turn>, Vec<SlopeRatio>)> {
    if slope.ones() == 0 || slope.zeros() == 0 {
        return Err(Error::OutOfRange(format!(
            "{slope} is not a positive finite slope"
        )));
    }
    let (mut lo, mut hi) = ((0u64, 1u64), (1u64, 0u64));
    let mut turns = Vec::new();
    let mut nodes = Vec::new();
    loop {
        let node = SlopeRatio::new(lo.0 + hi.0, lo.1 + hi.1)?;
        nodes.push(node);
        match slope.cmp_value(node) {
            std::cmp::Ordering::Equal => return Ok((turns, nodes)),
            std::cmp::Ordering::Less => {
                turns.push(Turn::Left);
                hi = (node.ones(), node.zeros());
            }
            std::cmp::Ordering::Greater => {
                turns.push(Turn::Right);
                lo = (node.ones(), node.zeros());
            }
        }
    }
}

/// Left/right path from the root `1/1` down to `slope`.
pub fn stern_brocot_path(slope: SlopeRatio) -> Result<Vec<Turn>> {
    Ok(descend(slope)?.0)
}

/// Nodes visited from the root to `slope`, both included.
pub fn stern_brocot_nodes(slope: SlopeRatio) -> Result<Vec<SlopeRatio>> {
    Ok(descend(slope)?.1)
}

pub fn path_string(turns: &[Turn]) -> String {
    turns.iter().map(ToString::to_string).collect()
}
