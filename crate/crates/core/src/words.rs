//! Finite words over totally ordered alphabets.
//!
//! Letters are any `Ord + Clone` type; the crate mostly uses `u8` for
//! binary words, `i64`/`BigInt` for determinantal vectors and `char` for
//! the `a < b < c` encodings. Burrows-Wheeler tables here list the
//! conjugates in *decreasing* lexicographic order.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Deref;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A finite sequence of letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word<L>(Vec<L>);

impl<L> Word<L> {
    pub fn new(letters: Vec<L>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[L] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<L> {
        self.0
    }

    pub fn map<M>(&self, f: impl FnMut(&L) -> M) -> Word<M> {
        Word(self.0.iter().map(f).collect())
    }
}

impl<L> Deref for Word<L> {
    type Target = [L];

    fn deref(&self) -> &[L] {
        &self.0
    }
}

impl<L> From<Vec<L>> for Word<L> {
    fn from(v: Vec<L>) -> Self {
        Word(v)
    }
}

impl<L> FromIterator<L> for Word<L> {
    fn from_iter<I: IntoIterator<Item = L>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl Word<u8> {
    /// Parses a string of decimal digits, e.g. `"0001001"`.
    pub fn from_digits(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as u8)
                    .ok_or_else(|| Error::Parse(format!("not a digit: {c:?}")))
            })
            .collect()
    }
}

impl From<&str> for Word<char> {
    fn from(s: &str) -> Self {
        s.chars().collect()
    }
}

impl<L: fmt::Display> fmt::Display for Word<L> {
    /// Bare string when every letter prints as one digit or latin letter,
    /// comma-separated values otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        let compact = parts.iter().all(|p| {
            let mut cs = p.chars();
            matches!((cs.next(), cs.next()), (Some(c), None) if c.is_ascii_alphanumeric())
        });
        if compact {
            f.write_str(&parts.concat())
        } else {
            f.write_str(&parts.join(","))
        }
    }
}

/// Slope `ones/zeros` of a binary Christoffel word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SlopeRatio {
    ones: u64,
    zeros: u64,
}

impl SlopeRatio {
    pub fn new(ones: u64, zeros: u64) -> Result<Self> {
        if ones == 0 && zeros == 0 {
            return Err(Error::InvalidSlope("0/0".into()));
        }
        if ones.gcd(&zeros) != 1 {
            return Err(Error::InvalidSlope(format!(
                "{ones}/{zeros} is not in lowest terms"
            )));
        }
        Ok(SlopeRatio { ones, zeros })
    }

    pub fn ones(self) -> u64 {
        self.ones
    }

    pub fn zeros(self) -> u64 {
        self.zeros
    }

    /// Length of the associated Christoffel word.
    pub fn word_len(self) -> u64 {
        self.ones + self.zeros
    }

    /// Mediant `(r + r') / (q + q')`.
    pub fn mediant(self, other: SlopeRatio) -> Result<SlopeRatio> {
        SlopeRatio::new(self.ones + other.ones, self.zeros + other.zeros)
    }

    /// Compares `self` and `other` as rationals.
    pub fn cmp_value(self, other: SlopeRatio) -> std::cmp::Ordering {
        (self.ones as u128 * other.zeros as u128).cmp(&(other.ones as u128 * self.zeros as u128))
    }
}

impl fmt::Display for SlopeRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.ones, self.zeros)
    }
}

/// Position of `j` in a Christoffel word with `r` high letters out of `n`,
/// shifted by `row`: row `0` is the upper word, row `n-1` the lower one.
pub(crate) fn christoffel_bit(n: usize, r: usize, row: usize, j: usize) -> bool {
    let q = n - r;
    (row + q * j) % n < r
}

fn check_alphabet<L: Ord>(alphabet: &(L, L)) -> Result<()> {
    if alphabet.0 < alphabet.1 {
        Ok(())
    } else {
        Err(Error::InvalidAlphabet("expected two letters a < b".into()))
    }
}

/// Lower Christoffel word of the given slope over `{a < b}`.
pub fn lower_christoffel<L: Ord + Clone>(slope: SlopeRatio, alphabet: (L, L)) -> Result<Word<L>> {
    check_alphabet(&alphabet)?;
    let n = slope.word_len() as usize;
    let r = slope.ones() as usize;
    Ok((0..n)
        .map(|j| {
            if christoffel_bit(n, r, n - 1, j) {
                alphabet.1.clone()
            } else {
                alphabet.0.clone()
            }
        })
        .collect())
}

/// Upper Christoffel word: the reversal of the lower one.
pub fn upper_christoffel<L: Ord + Clone>(slope: SlopeRatio, alphabet: (L, L)) -> Result<Word<L>> {
    check_alphabet(&alphabet)?;
    let n = slope.word_len() as usize;
    let r = slope.ones() as usize;
    Ok((0..n)
        .map(|j| {
            if christoffel_bit(n, r, 0, j) {
                alphabet.1.clone()
            } else {
                alphabet.0.clone()
            }
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChristoffelKind {
    Lower,
    Upper,
    No,
}

impl<L: Ord + Clone> Word<L> {
    /// Number of occurrences of `letter`.
    pub fn count(&self, letter: &L) -> usize {
        self.0.iter().filter(|x| *x == letter).count()
    }

    /// Distinct letters in increasing order.
    pub fn alphabet(&self) -> Vec<L> {
        self.0
            .iter()
            .cloned()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    }

    pub fn rotation(&self, k: usize) -> Word<L> {
        let n = self.len();
        if n == 0 {
            return self.clone();
        }
        let k = k % n;
        let mut v = self.0[k..].to_vec();
        v.extend_from_slice(&self.0[..k]);
        Word(v)
    }

    pub fn reversal(&self) -> Word<L> {
        Word(self.0.iter().rev().cloned().collect())
    }

    pub fn is_palindrome(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    /// Not a proper power of a shorter word. The empty word is not primitive.
    pub fn is_primitive(&self) -> bool {
        let n = self.len();
        n > 0
            && (1..n)
                .filter(|p| n.is_multiple_of(*p))
                .all(|p| (p..n).any(|i| self.0[i] != self.0[i - p]))
    }

    /// Strictly smaller than each of its proper rotations.
    pub fn is_lyndon(&self) -> bool {
        let n = self.len();
        n > 0 && (1..n).all(|k| self.0[..] < self.rotation(k).0[..])
    }

    /// Lexicographically least rotation.
    pub fn min_rotation(&self) -> Word<L> {
        (0..self.len())
            .map(|k| self.rotation(k))
            .min()
            .unwrap_or_else(|| self.clone())
    }

    /// The `|w|` rotations, starting with `w` itself.
    pub fn conjugates(&self) -> Result<Vec<Word<L>>> {
        if !self.is_primitive() {
            return Err(Error::NotPrimitive);
        }
        Ok((0..self.len()).map(|k| self.rotation(k)).collect())
    }

    /// Rows of the Burrows-Wheeler table: conjugates in decreasing order.
    pub fn bw_rows(&self) -> Result<Vec<Word<L>>> {
        let mut rows = self.conjugates()?;
        rows.sort_by(|a, b| b.cmp(a));
        Ok(rows)
    }

    /// Last column of the Burrows-Wheeler table, top to bottom.
    pub fn bw_last_column(&self) -> Result<Vec<L>> {
        Ok(self
            .bw_rows()?
            .into_iter()
            .map(|row| row.0.last().cloned().expect("nonempty"))
            .collect())
    }

    /// Distinct length-`n` circular factors in decreasing order.
    pub fn circular_factors(&self, n: usize) -> Result<Vec<Word<L>>> {
        if !self.is_primitive() {
            return Err(Error::NotPrimitive);
        }
        if n > self.len() {
            return Err(Error::LengthOutOfRange(format!(
                "factor length {n} exceeds word length {}",
                self.len()
            )));
        }
        let set: BTreeSet<Word<L>> = (0..self.len())
            .map(|k| Word(self.rotation(k).0[..n].to_vec()))
            .collect();
        Ok(set.into_iter().rev().collect())
    }

    /// Last column of the BW table is nondecreasing.
    pub fn is_perfectly_clustering(&self) -> Result<bool> {
        let col = self.bw_last_column()?;
        Ok(col.windows(2).all(|w| w[0] <= w[1]))
    }

    /// Classifies the word by the Burrows-Wheeler characterization: two
    /// coprime letter counts, a monotone last column, and the word sitting
    /// at the bottom (lower) or top (upper) of its table.
    pub fn is_christoffel(&self) -> ChristoffelKind {
        let alpha = self.alphabet();
        if alpha.len() != 2 {
            return ChristoffelKind::No;
        }
        let (na, nb) = (self.count(&alpha[0]), self.count(&alpha[1]));
        if na.gcd(&nb) != 1 {
            return ChristoffelKind::No;
        }
        let Ok(rows) = self.bw_rows() else {
            return ChristoffelKind::No;
        };
        let monotone = rows.windows(2).all(|w| w[0].0.last() <= w[1].0.last());
        if !monotone {
            ChristoffelKind::No
        } else if rows.last() == Some(self) {
            ChristoffelKind::Lower
        } else if rows.first() == Some(self) {
            ChristoffelKind::Upper
        } else {
            ChristoffelKind::No
        }
    }

    /// Same answer as [`Word::is_christoffel`], obtained by regenerating
    /// the candidate word from its letter counts. Single letters count as
    /// both lower and upper (slopes `0/1` and `1/0`).
    fn christoffel_kind_by_generation(&self, alphabet: &(L, L)) -> (bool, bool) {
        if self.len() == 1 {
            let ok = self.0[0] == alphabet.0 || self.0[0] == alphabet.1;
            return (ok, ok);
        }
        if self.0.iter().any(|x| *x != alphabet.0 && *x != alphabet.1) {
            return (false, false);
        }
        let r = self.count(&alphabet.1) as u64;
        let q = self.count(&alphabet.0) as u64;
        let Ok(slope) = SlopeRatio::new(r, q) else {
            return (false, false);
        };
        let lower = lower_christoffel(slope, alphabet.clone()).map(|w| &w == self);
        let upper = upper_christoffel(slope, alphabet.clone()).map(|w| &w == self);
        (lower.unwrap_or(false), upper.unwrap_or(false))
    }

    /// Unique split `w = w'w''` into two Christoffel words of the same kind.
    pub fn standard_factorization(&self) -> Result<(Word<L>, Word<L>)> {
        let kind = self.is_christoffel();
        if kind == ChristoffelKind::No || self.len() < 2 {
            return Err(Error::NotChristoffel(
                "standard factorization needs a Christoffel word of length >= 2".into(),
            ));
        }
        let alpha = self.alphabet();
        let alphabet = (alpha[0].clone(), alpha[1].clone());
        let wanted = |(lower, upper): (bool, bool)| match kind {
            ChristoffelKind::Lower => lower,
            _ => upper,
        };
        let splits: Vec<usize> = (1..self.len())
            .filter(|&k| {
                let (u, v) = (Word(self.0[..k].to_vec()), Word(self.0[k..].to_vec()));
                wanted(u.christoffel_kind_by_generation(&alphabet))
                    && wanted(v.christoffel_kind_by_generation(&alphabet))
            })
            .collect();
        match splits.as_slice() {
            [k] => Ok((Word(self.0[..*k].to_vec()), Word(self.0[*k..].to_vec()))),
            _ => Err(Error::NotChristoffel(format!(
                "{} candidate standard factorizations",
                splits.len()
            ))),
        }
    }

    /// All split points `k` (1 <= k < |w|) with both halves palindromes.
    pub fn palindromic_splits(&self) -> Vec<usize> {
        (1..self.len())
            .filter(|&k| {
                let (u, v) = self.0.split_at(k);
                u.iter().eq(u.iter().rev()) && v.iter().eq(v.iter().rev())
            })
            .collect()
    }

    /// The unique proper factorization into two palindromes.
    pub fn palindromic_factorization(&self) -> Result<(Word<L>, Word<L>)> {
        match self.palindromic_splits().as_slice() {
            [] => Err(Error::NoPalindromicSplit),
            [k] => Ok((Word(self.0[..*k].to_vec()), Word(self.0[*k..].to_vec()))),
            many => Err(Error::AmbiguousSplit(many.len())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bin(s: &str) -> Word<u8> {
        Word::from_digits(s).unwrap()
    }

    fn slope(r: u64, q: u64) -> SlopeRatio {
        SlopeRatio::new(r, q).unwrap()
    }

    #[test]
    fn christoffel_generation() {
        assert_eq!(
            lower_christoffel(slope(2, 5), (0u8, 1)).unwrap(),
            bin("0001001")
        );
        assert_eq!(lower_christoffel(slope(1, 1), (0u8, 1)).unwrap(), bin("01"));
        assert_eq!(
            lower_christoffel(slope(8, 3), (0u8, 1)).unwrap(),
            bin("01101110111")
        );
        assert_eq!(
            upper_christoffel(slope(2, 5), (0u8, 1)).unwrap(),
            bin("1001000")
        );
        assert_eq!(upper_christoffel(slope(1, 1), (0u8, 1)).unwrap(), bin("10"));
        assert_eq!(
            upper_christoffel(slope(8, 3), (0u8, 1)).unwrap(),
            bin("11101110110")
        );
        assert_eq!(lower_christoffel(slope(0, 1), (0u8, 1)).unwrap(), bin("0"));
        assert_eq!(lower_christoffel(slope(1, 0), (0u8, 1)).unwrap(), bin("1"));
    }

    #[test]
    fn invalid_inputs() {
        assert!(matches!(SlopeRatio::new(2, 4), Err(Error::InvalidSlope(_))));
        assert!(matches!(SlopeRatio::new(0, 0), Err(Error::InvalidSlope(_))));
        assert!(matches!(
            lower_christoffel(slope(1, 2), (1u8, 0)),
            Err(Error::InvalidAlphabet(_))
        ));
    }

    #[test]
    fn conjugates_and_primitivity() {
        let rai = Word::from("rai");
        let conj: Vec<String> = rai
            .conjugates()
            .unwrap()
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(conj, ["rai", "air", "ira"]);
        assert_eq!(bin("01").conjugates().unwrap(), vec![bin("01"), bin("10")]);
        assert!(!bin("0101").is_primitive());
        assert_eq!(bin("0101").conjugates(), Err(Error::NotPrimitive));

        let fig1 = [
            "1001000", "1000100", "0100100", "0100010", "0010010", "0010001", "0001001",
        ];
        let rows = bin("0001001").bw_rows().unwrap();
        assert_eq!(rows, fig1.iter().map(|s| bin(s)).collect::<Vec<_>>());
    }

    #[test]
    fn simple_predicates() {
        assert!(bin("0001001").is_lyndon());
        assert!(!bin("0010001").is_lyndon());
        assert!(Word::from("aca").is_palindrome());
        assert_eq!(bin("0011").reversal(), bin("1100"));
    }

    #[test]
    fn circular_factor_lists() {
        assert_eq!(
            bin("00101").circular_factors(3).unwrap(),
            ["101", "100", "010", "001"].map(bin).to_vec()
        );
        assert_eq!(
            bin("01").circular_factors(1).unwrap(),
            vec![bin("1"), bin("0")]
        );
        assert!(matches!(
            bin("01").circular_factors(3),
            Err(Error::LengthOutOfRange(_))
        ));
        let g10 = bin("01101110111").circular_factors(10).unwrap();
        assert_eq!(g10.len(), 11);
        assert_eq!(g10[0], bin("1110111011"));
        assert_eq!(g10[10], bin("0110111011"));
    }

    #[test]
    fn christoffel_classification() {
        assert_eq!(bin("0001001").is_christoffel(), ChristoffelKind::Lower);
        assert_eq!(bin("1001000").is_christoffel(), ChristoffelKind::Upper);
        assert_eq!(bin("0011").is_christoffel(), ChristoffelKind::No);
        assert_eq!(bin("0010001").is_christoffel(), ChristoffelKind::No);
        assert_eq!(bin("000").is_christoffel(), ChristoffelKind::No);
        assert_eq!(Word::from("abc").is_christoffel(), ChristoffelKind::No);
    }

    #[test]
    fn standard_factorizations() {
        assert_eq!(
            bin("01101110111").standard_factorization().unwrap(),
            (bin("0110111"), bin("0111"))
        );
        assert_eq!(
            bin("01").standard_factorization().unwrap(),
            (bin("0"), bin("1"))
        );
        assert_eq!(
            bin("0001001").standard_factorization().unwrap(),
            (bin("0001"), bin("001"))
        );
        assert_eq!(
            bin("1001000").standard_factorization().unwrap(),
            (bin("100"), bin("1000"))
        );
        assert!(matches!(
            bin("0").standard_factorization(),
            Err(Error::NotChristoffel(_))
        ));
        assert!(bin("0011").standard_factorization().is_err());
    }

    #[test]
    fn palindromic_factorizations() {
        let w = Word::from("acaccaccacc");
        let (u, v) = w.palindromic_factorization().unwrap();
        assert_eq!(
            (u.to_string(), v.to_string()),
            ("aca".into(), "ccaccacc".into())
        );
        assert_eq!(
            bin("01").palindromic_factorization().unwrap(),
            (bin("0"), bin("1"))
        );
        let v10 = Word::new(vec![-5i64, 3, -5, 3, 3, -5, 3, 3, -5, 3, 3]);
        let (u, v) = v10.palindromic_factorization().unwrap();
        assert_eq!(u.letters(), &[-5, 3, -5]);
        assert_eq!(v.letters(), &[3, 3, -5, 3, 3, -5, 3, 3]);
        assert_eq!(
            bin("0110").palindromic_factorization(),
            Err(Error::NoPalindromicSplit)
        );
        assert_eq!(
            bin("000").palindromic_factorization(),
            Err(Error::AmbiguousSplit(2))
        );
    }

    #[test]
    fn perfect_clustering() {
        assert!(bin("0001001").is_perfectly_clustering().unwrap());
        assert_eq!(
            bin("0001001").bw_last_column().unwrap(),
            vec![0, 0, 0, 0, 0, 1, 1]
        );
        assert!(Word::from("acbcbcacc").is_perfectly_clustering().unwrap());
        assert!(!bin("010011").is_perfectly_clustering().unwrap());
        assert_eq!(
            bin("0101").is_perfectly_clustering(),
            Err(Error::NotPrimitive)
        );
    }

    #[test]
    fn display_forms() {
        assert_eq!(bin("0001001").to_string(), "0001001");
        assert_eq!(Word::new(vec![-5i64, 3]).to_string(), "-5,3");
        assert_eq!(Word::new(vec![10u32, 3]).to_string(), "10,3");
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn coprime_pair(max_len: u64) -> impl Strategy<Value = SlopeRatio> {
            (1..max_len, 1..max_len)
                .prop_filter("coprime", move |(r, q)| r.gcd(q) == 1 && r + q <= max_len)
                .prop_map(|(r, q)| SlopeRatio::new(r, q).unwrap())
        }

        proptest! {
            #[test]
            fn lower_and_upper_are_conjugate_reversals(s in coprime_pair(50)) {
                let lo = lower_christoffel(s, (0u8, 1)).unwrap();
                let up = upper_christoffel(s, (0u8, 1)).unwrap();
                prop_assert_eq!(lo.reversal(), up.clone());
                prop_assert!(lo.conjugates().unwrap().contains(&up));
                prop_assert_eq!(lo.is_christoffel(), ChristoffelKind::Lower);
                prop_assert_eq!(up.is_christoffel(), ChristoffelKind::Upper);
            }

            #[test]
            fn standard_factorization_has_determinant_one(s in coprime_pair(100)) {
                prop_assume!(s.word_len() >= 2);
                let w = lower_christoffel(s, (0u8, 1)).unwrap();
                let (u, v) = w.standard_factorization().unwrap();
                let det = (u.count(&0) * v.count(&1)) as i64 - (u.count(&1) * v.count(&0)) as i64;
                prop_assert_eq!(det, 1);
                let mut joined = u.letters().to_vec();
                joined.extend_from_slice(v.letters());
                prop_assert_eq!(Word::new(joined), w);
            }
        }
    }
}
