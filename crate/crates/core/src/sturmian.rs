//! Factor matrices of Sturmian sequences and their determinantal vectors.
//!
//! For a slope `s` given by a continued fraction prefix, the lower
//! Christoffel words `01 = w_0, w_1, ..` at the Stern-Brocot nodes toward
//! `s` carry all factors: for `|w_{v-1}| <= n < |w_v|`, the `n + 1` factors
//! of length `n` are the circular factors of `w_v`. Stacking them in
//! decreasing order gives the `(n+1) x n` matrix `G_n`, whose signed
//! maximal minors form the determinantal vector `V_n`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::bwgroup::inverse_mod;
use crate::contfrac::{semiconvergents, ContinuedFraction};
use crate::error::{Error, Result};
use crate::iet::{build_sigma, standard_encoding, Composition};
use crate::numeric::bareiss_det;
use crate::permsign::zolotareff;
use crate::words::{lower_christoffel, Word};

/// A Sturmian slope `s = lim |w|_1 / |w|_0`, known through a prefix of
/// its continued fraction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SturmianSlope {
    cf: ContinuedFraction,
}

impl SturmianSlope {
    pub fn new(cf: ContinuedFraction) -> Self {
        SturmianSlope { cf }
    }

    pub fn from_quotients(q: &[u64]) -> Result<Self> {
        Ok(SturmianSlope::new(ContinuedFraction::new(q.to_vec())?))
    }

    /// `[0; 1, 1, ..]` with `ones` trailing quotients.
    pub fn fibonacci(ones: usize) -> Self {
        let mut q = vec![0];
        q.extend(std::iter::repeat_n(1, ones));
        SturmianSlope::new(ContinuedFraction::new(q).expect("valid"))
    }

    pub fn cf(&self) -> &ContinuedFraction {
        &self.cf
    }

    /// `w_0 = 01, w_1, ..` as far as the prefix determines them.
    pub fn all_chain_words(&self) -> Result<Vec<Word<u8>>> {
        semiconvergents(&self.cf)?
            .into_iter()
            .map(|s| lower_christoffel(s, (0u8, 1u8)))
            .collect()
    }

    /// `w_v` and `w_{v-1}` for the unique `v` with `|w_{v-1}| <= n < |w_v|`.
    fn locate(&self, n: usize) -> Result<(usize, Word<u8>, Word<u8>)> {
        let chain = christoffel_chain(self, n)?;
        let nu = chain.len() - 1;
        if nu == 0 {
            return Err(Error::OutOfRange(format!("length {n} is below |w_0| = 2")));
        }
        Ok((nu, chain[nu].clone(), chain[nu - 1].clone()))
    }

    pub fn chain_word(&self, nu: usize) -> Result<Word<u8>> {
        self.all_chain_words()?
            .into_iter()
            .nth(nu)
            .ok_or_else(|| Error::InsufficientCF(format!("{} has no w_{nu}", self.cf)))
    }
}

/// Chain words up to and including the first one longer than `max_len`.
pub fn christoffel_chain(s: &SturmianSlope, max_len: usize) -> Result<Vec<Word<u8>>> {
    let mut out = Vec::new();
    for w in s.all_chain_words()? {
        let done = w.len() > max_len;
        out.push(w);
        if done {
            return Ok(out);
        }
    }
    Err(Error::InsufficientCF(format!(
        "{} gives no chain word longer than {max_len}",
        s.cf
    )))
}

/// `G_n`: the `n + 1` factors of length `n`, in decreasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorMatrix {
    pub n: usize,
    pub rows: Vec<Word<u8>>,
    /// Row indices in `G_{N-1}` (built from the same `w_v`) whose
    /// length-`n` prefixes are these rows.
    pub origin: Option<Vec<usize>>,
}

impl FactorMatrix {
    pub fn from_rows(rows: Vec<Word<u8>>) -> Result<Self> {
        let n = rows.first().map_or(0, |r| r.len());
        if rows.len() != n + 1 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch(format!(
                "{} rows for factor length {n}",
                rows.len()
            )));
        }
        Ok(FactorMatrix {
            n,
            rows,
            origin: None,
        })
    }

    pub fn int_rows(&self) -> Vec<Vec<i64>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|&x| x as i64).collect())
            .collect()
    }

    /// Rows as strings of digits.
    pub fn row_strings(&self) -> Vec<String> {
        self.rows.iter().map(ToString::to_string).collect()
    }

    pub fn index_of(&self, factor: &Word<u8>) -> Option<usize> {
        self.rows.iter().position(|r| r == factor)
    }
}

/// Removed rows `j q mod N` for `j = 1..=i`, the complement kept in order.
fn surviving_rows(big_n: usize, q: usize, i: usize) -> Vec<usize> {
    let removed: BTreeSet<usize> = (1..=i).map(|j| j * q % big_n).collect();
    (0..big_n).filter(|x| !removed.contains(x)).collect()
}

fn factor_rows(w: &Word<u8>, n: usize) -> Result<Vec<Word<u8>>> {
    if n == 0 {
        return Ok(vec![Word::new(vec![])]);
    }
    w.circular_factors(n)
}

pub fn factor_matrix(s: &SturmianSlope, n: usize) -> Result<FactorMatrix> {
    if n == 0 {
        return Err(Error::OutOfRange("factor length 0".into()));
    }
    let chain = christoffel_chain(s, n)?;
    let w = chain.last().expect("nonempty");
    let rows = factor_rows(w, n)?;
    debug_assert_eq!(rows.len(), n + 1);
    let big_n = w.len();
    let q = w.count(&0);
    let origin = (chain.len() >= 2).then(|| surviving_rows(big_n, q, big_n - 1 - n));
    Ok(FactorMatrix { n, rows, origin })
}

/// Parameters of the closed form behind a determinantal vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosedFormContext {
    pub nu: usize,
    #[serde(rename = "N")]
    pub big_n: usize,
    pub i: usize,
    pub epsilon: i8,
    pub t: i64,
    pub composition: Vec<usize>,
    pub alphabet: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeterminantalVector {
    pub components: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub context: Option<ClosedFormContext>,
}

impl DeterminantalVector {
    pub fn plain(components: Vec<i64>) -> Self {
        DeterminantalVector {
            components,
            context: None,
        }
    }

    pub fn negated(&self) -> Vec<i64> {
        self.components.iter().map(|x| -x).collect()
    }

    pub fn equals_up_to_sign(&self, other: &[i64]) -> bool {
        self.components == other || self.negated() == other
    }

    pub fn abs_word(&self) -> Word<i64> {
        self.components.iter().map(|x| x.abs()).collect()
    }

    pub fn as_word(&self) -> Word<i64> {
        Word::new(self.components.clone())
    }
}

fn to_i64(x: BigInt) -> Result<i64> {
    x.to_i64()
        .ok_or_else(|| Error::OutOfRange(format!("minor {x} overflows 64 bits")))
}

/// `a_i = (-1)^(k-i) det(A without row i)` for a `(k+1) x k` matrix.
pub fn determinantal_vector(rows: &[Vec<i64>]) -> Result<Vec<i64>> {
    let k = rows
        .len()
        .checked_sub(1)
        .ok_or_else(|| Error::DimensionMismatch("no rows".into()))?;
    if rows.iter().any(|r| r.len() != k) {
        return Err(Error::DimensionMismatch(format!(
            "expected {} x {k}",
            k + 1
        )));
    }
    (0..=k)
        .map(|i| {
            let minor: Vec<Vec<BigInt>> = rows
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, r)| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect();
            let det = to_i64(bareiss_det(minor))?;
            Ok(if (k - i) % 2 == 0 { det } else { -det })
        })
        .collect()
}

pub fn determinantal_vector_oracle(a: &FactorMatrix) -> Result<DeterminantalVector> {
    Ok(DeterminantalVector::plain(determinantal_vector(
        &a.int_rows(),
    )?))
}

/// `d_j`: number of `j' <= j` with `j' q mod N < j q mod N`.
fn d_counts(big_n: usize, q: usize, i: usize) -> Vec<usize> {
    let residues: Vec<usize> = (1..=i).map(|j| j * q % big_n).collect();
    residues
        .iter()
        .enumerate()
        .map(|(j, &x)| residues[..j].iter().filter(|&&y| y < x).count())
        .collect()
}

/// `V_n` from the closed form: the standard encoding of
/// `(|w''|, |w'|)` over `{-|w'|_1, |w''|_1}` times `eps` when `n = N - 1`,
/// else of `(|w''| - i, i, |w'| - i)` over
/// `{-|w'|_1, |w''|_1 - |w'|_1, |w''|_1}` times `eps (-1)^t`.
pub fn determinantal_vector_closed(s: &SturmianSlope, n: usize) -> Result<DeterminantalVector> {
    if n < 2 {
        return determinantal_vector_oracle(&factor_matrix(s, n)?);
    }
    let (nu, w, _) = s.locate(n)?;
    let big_n = w.len();
    let r = w.count(&1);
    let q = big_n - r;
    let (w1, w2) = w.standard_factorization()?;
    let epsilon = zolotareff(r as i64, big_n as u64)?;
    let low = -(w1.count(&1) as i64);
    let high = w2.count(&1) as i64;
    let i = big_n - 1 - n;
    let (composition, alphabet, t) = if i == 0 {
        (vec![w2.len(), w1.len()], vec![low, high], 0)
    } else {
        let d = d_counts(big_n, q, i);
        let t: i64 = (1..=i)
            .map(|j| big_n as i64 - j as i64 + d[j - 1] as i64 - (j * q % big_n) as i64)
            .sum();
        (
            vec![w2.len() - i, i, w1.len() - i],
            vec![low, high + low, high],
            t,
        )
    };
    let sigma = build_sigma(&Composition::new(composition.clone())?)?;
    let word = standard_encoding(&sigma, &alphabet)?;
    let sign = epsilon as i64 * if t % 2 == 0 { 1 } else { -1 };
    Ok(DeterminantalVector {
        components: word.iter().map(|x| sign * x).collect(),
        context: Some(ClosedFormContext {
            nu,
            big_n,
            i,
            epsilon,
            t,
            composition,
            alphabet,
        }),
    })
}

/// One matrix of the chain `G_{N-1} -> .. -> G_{|w_{v-1}|-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GStep {
    pub matrix: FactorMatrix,
    /// `h_i` of the arrow into this matrix.
    pub h: Option<usize>,
}

/// `h_i = (i q mod N) - d_i` for `i = 1..=count`.
pub fn h_sequence(big_n: usize, q: usize, count: usize) -> Vec<usize> {
    let d = d_counts(big_n, q, count);
    (1..=count).map(|i| i * q % big_n - d[i - 1]).collect()
}

pub fn g_chain(s: &SturmianSlope, nu: usize) -> Result<Vec<GStep>> {
    if nu == 0 {
        return Err(Error::OutOfRange("the chain starts at w_1".into()));
    }
    let chain = s.all_chain_words()?;
    if chain.len() <= nu {
        return Err(Error::InsufficientCF(format!("{} has no w_{nu}", s.cf)));
    }
    let w = &chain[nu];
    let big_n = w.len();
    let q = w.count(&0);
    let bottom = chain[nu - 1].len() - 1;
    let hs = h_sequence(big_n, q, big_n - 1 - bottom);
    let mut out = Vec::new();
    for n in (bottom..big_n).rev() {
        let i = big_n - 1 - n;
        out.push(GStep {
            matrix: FactorMatrix {
                n,
                rows: factor_rows(w, n)?,
                origin: Some(surviving_rows(big_n, q, i)),
            },
            h: (i > 0).then(|| hs[i - 1]),
        });
    }
    Ok(out)
}

/// `A ->h B`: rows `h-1`, `h` of `A` agree except for final entries 1 and
/// 0, and `B` is `A` without row `h` and without its last column.
pub fn check_arrow(a: &FactorMatrix, b: &FactorMatrix, h: usize) -> bool {
    let k = a.n;
    if h == 0 || h > k || b.n + 1 != k {
        return false;
    }
    let (up, down) = (&a.rows[h - 1], &a.rows[h]);
    let pair_ok = up[..k - 1] == down[..k - 1] && up[k - 1] == 1 && down[k - 1] == 0;
    let expected: Vec<&[u8]> = a
        .rows
        .iter()
        .enumerate()
        .filter(|(j, _)| *j != h)
        .map(|(_, r)| &r[..k - 1])
        .collect();
    let actual: Vec<&[u8]> = b.rows.iter().map(|r| r.letters()).collect();
    pair_ok && expected == actual
}

/// Merges components `h-1` and `h` by adding them.
pub fn merge_components(v: &[i64], h: usize) -> Vec<i64> {
    let mut out = v[..h - 1].to_vec();
    out.push(v[h - 1] + v[h]);
    out.extend_from_slice(&v[h + 1..]);
    out
}

/// `V_{n+1} -> V_n`: split `V` into two palindromes `u v`, merge the
/// components at `|u| - 1` and `|u|`, and multiply by `(-1)^(k-|u|)`.
pub fn vector_merge_step(v: &DeterminantalVector) -> Result<DeterminantalVector> {
    let (h, merged) = merge_with_position(v)?;
    let k = v.components.len() - 1;
    let sign = if (k - h).is_multiple_of(2) { 1 } else { -1 };
    Ok(DeterminantalVector::plain(
        merged.into_iter().map(|x| sign * x).collect(),
    ))
}

/// Position `h` from the palindromic factorization and the unsigned merge.
pub fn merge_with_position(v: &DeterminantalVector) -> Result<(usize, Vec<i64>)> {
    let (u, _) = v
        .as_word()
        .palindromic_factorization()
        .map_err(|e| Error::NotPerfectlyClustering(format!("{:?}: {e}", v.components)))?;
    let h = u.len();
    Ok((h, merge_components(&v.components, h)))
}

/// The right-special factor of length `n` and the minor left when it is
/// dropped from `G_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialFactor {
    pub factor: Word<u8>,
    pub row: usize,
    pub determinant: i64,
    /// Middle letter of the closed-form alphabet, sign included.
    pub middle_letter: i64,
}

/// The unique `u` of length `n` with both `u0` and `u1` factors.
pub fn right_special_factor(s: &SturmianSlope, n: usize) -> Result<Word<u8>> {
    let longer = factor_matrix(s, n + 1)?;
    let prefixes: Vec<&[u8]> = longer.rows.iter().map(|r| &r[..n]).collect();
    let special: Vec<&[u8]> = prefixes
        .windows(2)
        .filter(|w| w[0] == w[1])
        .map(|w| w[0])
        .collect();
    match special.as_slice() {
        [u] => Ok(Word::new(u.to_vec())),
        _ => Err(Error::OutOfRange(format!(
            "{} right-special factors of length {n}",
            special.len()
        ))),
    }
}

pub fn special_factor(s: &SturmianSlope, n: usize) -> Result<SpecialFactor> {
    let closed = determinantal_vector_closed(s, n)?;
    let ctx = closed
        .context
        .as_ref()
        .ok_or_else(|| Error::OutOfRange(format!("length {n} is below the closed-form range")))?;
    if ctx.i == 0 {
        return Err(Error::OutOfRange(format!(
            "n = N - 1 = {n}: two-letter alphabet, no middle letter"
        )));
    }
    let g = factor_matrix(s, n)?;
    let factor = right_special_factor(s, n)?;
    let row = g.index_of(&factor).expect("special factor is a factor");
    let minor: Vec<Vec<BigInt>> = g
        .int_rows()
        .into_iter()
        .enumerate()
        .filter(|(j, _)| *j != row)
        .map(|(_, r)| r.into_iter().map(BigInt::from).collect())
        .collect();
    let determinant = to_i64(bareiss_det(minor))?;
    let sign = ctx.epsilon as i64 * if ctx.t % 2 == 0 { 1 } else { -1 };
    Ok(SpecialFactor {
        factor,
        row,
        determinant,
        middle_letter: sign * ctx.alphabet[1],
    })
}

/// Determinant of `G_n` without its right-special row.
pub fn special_factor_determinant(s: &SturmianSlope, n: usize) -> Result<i64> {
    Ok(special_factor(s, n)?.determinant)
}

/// `(q*, r*)`, the inverses of `|w|_0` and `|w|_1` modulo `|w|`.
pub fn inverse_counts(w: &Word<u8>) -> Option<(usize, usize)> {
    let n = w.len();
    Some((
        inverse_mod(w.count(&0) % n, n)?,
        inverse_mod(w.count(&1) % n, n)?,
    ))
}
