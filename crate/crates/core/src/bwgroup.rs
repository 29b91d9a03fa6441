//! Burrows-Wheeler matrices of Christoffel words and their group structure.
//!
//! `M_n(a, b, r)` is the BW matrix of the length-`n` Christoffel word over
//! `{a < b}` with `r` occurrences of `b`. For fixed `n` these matrices form
//! a commutative group isomorphic to `K* x K* x (Z/nZ)*` through
//! `M_n(a, b, r) -> ((n-r)a + rb, b - a, r)`. Multiplication, inversion and
//! the determinant are all computed through that triple.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::numeric::{ExactMatrix, FieldScalar, ScalarKind};
use crate::permsign::zolotareff;
use crate::words::{christoffel_bit, Word};

/// Parameters `(n, a, b, r)` of a Christoffel matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChristoffelParams {
    n: usize,
    a: FieldScalar,
    b: FieldScalar,
    r: usize,
}

/// Image of a Christoffel matrix under the group isomorphism:
/// row sum `c`, letter difference `d`, multiplier `r` acting on `Z/nZ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTriple {
    pub n: usize,
    pub c: FieldScalar,
    pub d: FieldScalar,
    pub r: usize,
}

/// Inverse of `x` modulo `n`, in `[0, n)`.
pub(crate) fn inverse_mod(x: usize, n: usize) -> Option<usize> {
    if n == 1 {
        return Some(0);
    }
    let e = (x as i64).extended_gcd(&(n as i64));
    (e.gcd == 1).then(|| e.x.rem_euclid(n as i64) as usize)
}

impl ChristoffelParams {
    pub fn new(n: usize, a: FieldScalar, b: FieldScalar, r: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParams(format!("order {n} < 2")));
        }
        if r == 0 || r >= n || r.gcd(&n) != 1 {
            return Err(Error::InvalidParams(format!(
                "r = {r} must be a unit in [1, {n})"
            )));
        }
        if a.kind() != b.kind() {
            return Err(Error::KindMismatch(
                "a and b live in different fields".into(),
            ));
        }
        a.kind().check_characteristic(n)?;
        if a == b {
            return Err(Error::InvalidParams("a = b".into()));
        }
        Ok(ChristoffelParams { n, a, b, r })
    }

    /// `M_n(a, b, r)` with integer letters.
    pub fn ints(n: usize, a: i64, b: i64, r: usize) -> Result<Self> {
        ChristoffelParams::new(n, FieldScalar::int(a), FieldScalar::int(b), r)
    }

    /// The group identity `M_n(0, 1, 1) = I_n`.
    pub fn identity(n: usize, kind: ScalarKind) -> Result<Self> {
        ChristoffelParams::new(
            n,
            FieldScalar::integer_in(kind, 0),
            FieldScalar::integer_in(kind, 1),
            1,
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> &FieldScalar {
        &self.a
    }

    pub fn b(&self) -> &FieldScalar {
        &self.b
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn kind(&self) -> ScalarKind {
        self.a.kind()
    }

    /// Number of `a` letters, `n - r`.
    pub fn q(&self) -> usize {
        self.n - self.r
    }

    /// Inverse of `r` in `[n]`.
    pub fn r_star(&self) -> usize {
        inverse_mod(self.r, self.n).expect("r is a unit")
    }

    /// Inverse of `q` in `[n]`.
    pub fn q_star(&self) -> usize {
        inverse_mod(self.q(), self.n).expect("q is a unit")
    }

    /// `Q` with `r * r* = 1 + Q n`.
    pub fn big_q(&self) -> usize {
        (self.r * self.r_star() - 1) / self.n
    }

    /// Common row and column sum `(n - r) a + r b`.
    pub fn row_sum(&self) -> FieldScalar {
        self.a
            .scale(self.q() as i64)
            .add(&self.b.scale(self.r as i64))
            .expect("same kind")
    }

    /// Lower Christoffel word over `{a, b}`: `n - r` letters `a`, `r` letters `b`.
    pub fn lower_word(&self) -> Word<FieldScalar> {
        self.row_word(self.n - 1)
    }

    fn row_word(&self, i: usize) -> Word<FieldScalar> {
        (0..self.n)
            .map(|j| {
                if christoffel_bit(self.n, self.r, i, j) {
                    self.b.clone()
                } else {
                    self.a.clone()
                }
            })
            .collect()
    }
}

/// BW matrix of a primitive word: its conjugates in decreasing order.
pub fn bw_matrix<L>(w: &Word<L>) -> Result<ExactMatrix>
where
    L: Ord + Clone + Into<FieldScalar>,
{
    let rows = w.bw_rows()?;
    ExactMatrix::from_rows(
        rows.into_iter()
            .map(|row| row.into_letters().into_iter().map(Into::into).collect())
            .collect(),
    )
}

/// `M_n(a, b, r)`, entry `(i, j)` being `b` exactly when
/// `(i + q j) mod n < r`.
pub fn christoffel_matrix(p: &ChristoffelParams) -> ExactMatrix {
    let rows = (0..p.n).map(|i| p.row_word(i).into_letters()).collect();
    ExactMatrix::from_rows(rows).expect("square, uniform kind")
}

impl GroupTriple {
    pub fn mul(&self, other: &GroupTriple) -> Result<GroupTriple> {
        if self.n != other.n {
            return Err(Error::OrderMismatch(self.n, other.n));
        }
        Ok(GroupTriple {
            n: self.n,
            c: self.c.mul(&other.c)?,
            d: self.d.mul(&other.d)?,
            r: self.r * other.r % self.n,
        })
    }

    pub fn inverse(&self) -> Result<GroupTriple> {
        Ok(GroupTriple {
            n: self.n,
            c: self.c.inv().map_err(|_| Error::NonInvertibleRowSum)?,
            d: self.d.inv()?,
            r: inverse_mod(self.r, self.n).ok_or_else(|| {
                Error::InvalidParams(format!("{} not a unit mod {}", self.r, self.n))
            })?,
        })
    }
}

pub fn to_triple(p: &ChristoffelParams) -> Result<GroupTriple> {
    let c = p.row_sum();
    if c.is_zero() {
        return Err(Error::NonInvertibleRowSum);
    }
    Ok(GroupTriple {
        n: p.n,
        c,
        d: p.b.sub(&p.a)?,
        r: p.r,
    })
}

/// Preimage of a triple: `a = (c - r d)/n`, `b = (c + (n - r) d)/n`.
pub fn from_triple(n: usize, t: &GroupTriple) -> Result<ChristoffelParams> {
    if t.n != n {
        return Err(Error::OrderMismatch(n, t.n));
    }
    if t.c.kind() != t.d.kind() {
        return Err(Error::KindMismatch(
            "c and d live in different fields".into(),
        ));
    }
    t.c.kind().check_characteristic(n)?;
    if t.c.is_zero() {
        return Err(Error::NonInvertibleRowSum);
    }
    let n_inv = FieldScalar::integer_in(t.c.kind(), n as i64).inv()?;
    let a = t.c.sub(&t.d.scale(t.r as i64))?.mul(&n_inv)?;
    let b = t.c.add(&t.d.scale((n - t.r) as i64))?.mul(&n_inv)?;
    ChristoffelParams::new(n, a, b, t.r)
}

/// Parameters of the product matrix `M(p1) M(p2)`.
pub fn group_mul(p1: &ChristoffelParams, p2: &ChristoffelParams) -> Result<ChristoffelParams> {
    if p1.n != p2.n {
        return Err(Error::OrderMismatch(p1.n, p2.n));
    }
    if p1.kind() != p2.kind() {
        return Err(Error::KindMismatch(
            "factors live in different fields".into(),
        ));
    }
    from_triple(p1.n, &to_triple(p1)?.mul(&to_triple(p2)?)?)
}

pub fn group_inverse(p: &ChristoffelParams) -> Result<ChristoffelParams> {
    from_triple(p.n, &to_triple(p)?.inverse()?)
}

/// Inverse of `M_n(0, 1, r)` as `M_n(-Q/r, 1 - Q/r, r*)`, read straight
/// from the closed formula rather than through the triple.
pub fn inverse_of_binary(n: usize, r: usize, kind: ScalarKind) -> Result<ChristoffelParams> {
    let p = ChristoffelParams::identity(n, kind)?;
    let p = ChristoffelParams::new(n, p.a.clone(), p.b.clone(), r)?;
    let q_over_r = FieldScalar::integer_in(kind, p.big_q() as i64)
        .div(&FieldScalar::integer_in(kind, r as i64))?;
    let one = FieldScalar::integer_in(kind, 1);
    ChristoffelParams::new(n, q_over_r.neg(), one.sub(&q_over_r)?, p.r_star())
}

/// `((n - r) a + r b) (b - a)^(n-1) sgn(x -> r x)`.
pub fn det_closed(p: &ChristoffelParams) -> Result<FieldScalar> {
    let d = p.b.sub(&p.a)?;
    let sign = zolotareff(p.r as i64, p.n as u64)?;
    Ok(p.row_sum().mul(&d.pow(p.n as u64 - 1))?.scale(sign as i64))
}

/// Column `j = i r* mod n` at which rows `i-1` and `i` differ.
pub fn consecutive_rows_square(p: &ChristoffelParams, i: usize) -> Result<usize> {
    if i == 0 || i >= p.n {
        return Err(Error::IndexOutOfRange(format!(
            "row {i} not in [1, {})",
            p.n
        )));
    }
    Ok(i * p.r_star() % p.n)
}

/// Checks on the actual matrix that rows `i-1`, `i` agree outside the
/// `[[b, a], [a, b]]` block at columns `j-1, j`.
pub fn check_consecutive_rows(p: &ChristoffelParams, i: usize) -> Result<bool> {
    let j = consecutive_rows_square(p, i)?;
    let m = christoffel_matrix(p);
    let (up, down) = (m.row(i - 1), m.row(i));
    let block_ok = up[j - 1] == p.b && up[j] == p.a && down[j - 1] == p.a && down[j] == p.b;
    let rest_ok = (0..p.n)
        .filter(|&c| c != j - 1 && c != j)
        .all(|c| up[c] == down[c]);
    Ok(block_ok && rest_ok)
}

/// First column reads `b^r a^(n-r)` and each later column is the previous
/// one shifted cyclically down by `r`.
pub fn column_shift_check(p: &ChristoffelParams) -> bool {
    let m = christoffel_matrix(p);
    let n = p.n;
    let first = m.column(0);
    let first_ok = first
        .iter()
        .enumerate()
        .all(|(i, x)| *x == if i < p.r { p.b.clone() } else { p.a.clone() });
    let shifts_ok = (1..n).all(|j| {
        let prev = m.column(j - 1);
        let cur = m.column(j);
        (0..n).all(|i| cur[i] == prev[(i + n - p.r) % n])
    });
    first_ok && shifts_ok
}

/// For `h = j q mod n`, rows `h-1` and `h` agree on columns
/// `0..n-j-1` and hold `b`, `a` at column `n-j-1`; checked for every
/// `j` in `1..n`.
pub fn corollary_ba_check(p: &ChristoffelParams) -> bool {
    let m = christoffel_matrix(p);
    let n = p.n;
    (1..n).all(|j| corollary_ba_holds(&m, p, j))
}

pub(crate) fn corollary_ba_holds(m: &ExactMatrix, p: &ChristoffelParams, j: usize) -> bool {
    let n = p.n;
    let h = j * p.q() % n;
    let col = n - j - 1;
    let (up, down) = (m.row(h - 1), m.row(h));
    (0..col).all(|c| up[c] == down[c]) && up[col] == p.b && down[col] == p.a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m7_0_1_2() -> ExactMatrix {
        ExactMatrix::from_int_rows(&[
            [1, 0, 0, 1, 0, 0, 0],
            [1, 0, 0, 0, 1, 0, 0],
            [0, 1, 0, 0, 1, 0, 0],
            [0, 1, 0, 0, 0, 1, 0],
            [0, 0, 1, 0, 0, 1, 0],
            [0, 0, 1, 0, 0, 0, 1],
            [0, 0, 0, 1, 0, 0, 1],
        ])
        .unwrap()
    }

    fn p(n: usize, a: i64, b: i64, r: usize) -> ChristoffelParams {
        ChristoffelParams::ints(n, a, b, r).unwrap()
    }

    #[test]
    fn matrices_from_words_and_params() {
        let w = Word::from_digits("0001001").unwrap();
        assert_eq!(bw_matrix(&w).unwrap(), m7_0_1_2());
        assert_eq!(christoffel_matrix(&p(7, 0, 1, 2)), m7_0_1_2());
        let w = Word::from_digits("01").unwrap();
        assert_eq!(
            bw_matrix(&w).unwrap(),
            ExactMatrix::identity(2, ScalarKind::Rational)
        );
        let w = Word::from_digits("0101011").unwrap();
        assert_eq!(bw_matrix(&w).unwrap(), christoffel_matrix(&p(7, 0, 1, 4)));
    }

    #[test]
    fn triples() {
        let t = to_triple(&p(7, 0, 1, 2)).unwrap();
        assert_eq!(
            (t.c.clone(), t.d.clone(), t.r),
            (FieldScalar::int(2), FieldScalar::int(1), 2)
        );
        let back = from_triple(7, &t).unwrap();
        assert_eq!(back, p(7, 0, 1, 2));

        let t = GroupTriple {
            n: 7,
            c: FieldScalar::ratio(1, 2).unwrap(),
            d: FieldScalar::int(1),
            r: 4,
        };
        let q = from_triple(7, &t).unwrap();
        assert_eq!(q.a(), &FieldScalar::ratio(-1, 2).unwrap());
        assert_eq!(q.b(), &FieldScalar::ratio(1, 2).unwrap());
        assert_eq!(q.r(), 4);
    }

    #[test]
    fn powers_of_m7_0_1_2() {
        let m = p(7, 0, 1, 2);
        let sq = group_mul(&m, &m).unwrap();
        assert_eq!(sq, p(7, 0, 1, 4));
        let cube = group_mul(&sq, &m).unwrap();
        assert_eq!(cube, p(7, 1, 2, 1));
        let raw = christoffel_matrix(&m)
            .mat_mul(&christoffel_matrix(&m))
            .unwrap();
        assert_eq!(christoffel_matrix(&sq), raw);
    }

    #[test]
    fn identity_element() {
        for n in 2..9 {
            let id = ChristoffelParams::identity(n, ScalarKind::Rational).unwrap();
            assert_eq!(
                christoffel_matrix(&id),
                ExactMatrix::identity(n, ScalarKind::Rational)
            );
            assert_eq!(group_inverse(&id).unwrap(), id);
        }
    }

    #[test]
    fn inverses() {
        let m = p(7, 0, 1, 2);
        let inv = group_inverse(&m).unwrap();
        assert_eq!(inv.a(), &FieldScalar::ratio(-1, 2).unwrap());
        assert_eq!(inv.b(), &FieldScalar::ratio(1, 2).unwrap());
        assert_eq!(inv.r(), 4);
        assert_eq!(inverse_of_binary(7, 2, ScalarKind::Rational).unwrap(), inv);
        let prod = christoffel_matrix(&m)
            .mat_mul(&christoffel_matrix(&inv))
            .unwrap();
        assert_eq!(prod, ExactMatrix::identity(7, ScalarKind::Rational));

        // M_7(1, 2, 1) = I + J; its inverse is I - J/8.
        let m = p(7, 1, 2, 1);
        let inv = group_inverse(&m).unwrap();
        assert_eq!(inv.a(), &FieldScalar::ratio(-1, 8).unwrap());
        assert_eq!(inv.b(), &FieldScalar::ratio(7, 8).unwrap());
        let prod = christoffel_matrix(&m)
            .mat_mul(&christoffel_matrix(&inv))
            .unwrap();
        assert_eq!(prod, ExactMatrix::identity(7, ScalarKind::Rational));
    }

    #[test]
    fn inverse_routes_agree_for_binary_alphabet() {
        for n in 2..40usize {
            for r in (1..n).filter(|r| r.gcd(&n) == 1) {
                let via_triple = group_inverse(&p(n, 0, 1, r)).unwrap();
                let via_formula = inverse_of_binary(n, r, ScalarKind::Rational).unwrap();
                assert_eq!(via_triple, via_formula, "n={n} r={r}");
            }
        }
    }

    #[test]
    fn determinants() {
        assert_eq!(det_closed(&p(7, 0, 1, 2)).unwrap(), FieldScalar::int(2));
        assert_eq!(det_closed(&p(5, 0, 1, 1)).unwrap(), FieldScalar::int(1));
        assert_eq!(det_closed(&p(7, 1, 2, 1)).unwrap(), FieldScalar::int(8));
        assert_eq!(
            christoffel_matrix(&p(7, 1, 2, 1)).det_exact().unwrap(),
            FieldScalar::int(8)
        );
    }

    #[test]
    fn consecutive_rows() {
        let m = p(7, 0, 1, 2);
        assert_eq!(m.r_star(), 4);
        assert_eq!(consecutive_rows_square(&m, 1).unwrap(), 4);
        assert_eq!(consecutive_rows_square(&m, 2).unwrap(), 1);
        for i in 1..7 {
            assert!(check_consecutive_rows(&m, i).unwrap());
        }
        assert!(matches!(
            consecutive_rows_square(&m, 0),
            Err(Error::IndexOutOfRange(_))
        ));
        assert!(consecutive_rows_square(&m, 7).is_err());
    }

    #[test]
    fn structural_checks() {
        assert!(column_shift_check(&p(7, 0, 1, 2)));
        assert_eq!(
            christoffel_matrix(&p(7, 0, 1, 2)).column(0),
            [1, 1, 0, 0, 0, 0, 0].map(FieldScalar::int).to_vec()
        );
        assert!(column_shift_check(&p(2, 0, 1, 1)));
        let m = p(7, 0, 1, 2);
        let mat = christoffel_matrix(&m);
        // j = 1 gives h = 5
        assert!(corollary_ba_holds(&mat, &m, 1));
        assert!(corollary_ba_check(&m));
    }

    #[test]
    fn param_validation() {
        assert!(ChristoffelParams::ints(6, 0, 1, 2).is_err());
        assert!(ChristoffelParams::ints(6, 1, 1, 1).is_err());
        assert!(ChristoffelParams::ints(1, 0, 1, 1).is_err());
        let a = FieldScalar::residue(0, 7).unwrap();
        let b = FieldScalar::residue(1, 7).unwrap();
        assert!(matches!(
            ChristoffelParams::new(7, a.clone(), b.clone(), 2),
            Err(Error::CharacteristicTooSmall { .. })
        ));
        assert!(ChristoffelParams::new(5, a, b, 2).is_ok());
        assert_eq!(to_triple(&p(3, -1, 2, 1)), Err(Error::NonInvertibleRowSum));
        assert!(matches!(
            group_mul(&p(5, 0, 1, 2), &p(7, 0, 1, 2)),
            Err(Error::OrderMismatch(5, 7))
        ));
    }

    #[test]
    fn modular_group() {
        let k = |v| FieldScalar::residue(v, 11).unwrap();
        let m = ChristoffelParams::new(7, k(3), k(5), 3).unwrap();
        let inv = group_inverse(&m).unwrap();
        let prod = christoffel_matrix(&m)
            .mat_mul(&christoffel_matrix(&inv))
            .unwrap();
        assert_eq!(prod, ExactMatrix::identity(7, ScalarKind::Modular(11)));
        assert_eq!(
            det_closed(&m).unwrap(),
            christoffel_matrix(&m).det_exact().unwrap()
        );
    }

    mod props {
        use super::*;
        use crate::permsign::{euler_phi, Permutation};
        use proptest::prelude::*;

        fn params(max_n: usize) -> impl Strategy<Value = ChristoffelParams> {
            (2..=max_n)
                .prop_flat_map(|n| (Just(n), 1..n, -6i64..6, 1i64..4, -6i64..6, 1i64..4))
                .prop_filter_map("valid params", |(n, r, an, ad, bn, bd)| {
                    let a = FieldScalar::ratio(an, ad).ok()?;
                    let b = FieldScalar::ratio(bn, bd).ok()?;
                    ChristoffelParams::new(n, a, b, r).ok()
                })
        }

        fn invertible(max_n: usize) -> impl Strategy<Value = ChristoffelParams> {
            params(max_n).prop_filter("c != 0", |p| !p.row_sum().is_zero())
        }

        fn pair(max_n: usize) -> impl Strategy<Value = (ChristoffelParams, ChristoffelParams)> {
            (2..=max_n).prop_flat_map(move |n| {
                let same = move |p: &ChristoffelParams| p.n() == n;
                (
                    invertible(max_n).prop_filter("order", same),
                    invertible(max_n).prop_filter("order", same),
                )
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(200))]

            #[test]
            fn triple_roundtrip(p in invertible(40)) {
                prop_assert_eq!(from_triple(p.n(), &to_triple(&p).unwrap()).unwrap(), p);
            }

            #[test]
            fn isomorphism((p1, p2) in pair(12)) {
                let lhs = to_triple(&group_mul(&p1, &p2).unwrap()).unwrap();
                let rhs = to_triple(&p1).unwrap().mul(&to_triple(&p2).unwrap()).unwrap();
                prop_assert_eq!(lhs, rhs);
                let raw = christoffel_matrix(&p1).mat_mul(&christoffel_matrix(&p2)).unwrap();
                prop_assert_eq!(christoffel_matrix(&group_mul(&p1, &p2).unwrap()), raw);
            }

            #[test]
            fn inverse_gives_identity(p in invertible(15)) {
                let prod = christoffel_matrix(&p)
                    .mat_mul(&christoffel_matrix(&group_inverse(&p).unwrap()))
                    .unwrap();
                prop_assert_eq!(prod, ExactMatrix::identity(p.n(), ScalarKind::Rational));
            }

            #[test]
            fn matches_bw_of_lower_word(p in params(30)) {
                // sort over the digit word, then substitute 0 -> a, 1 -> b
                let slope = crate::words::SlopeRatio::new(p.r() as u64, p.q() as u64).unwrap();
                let w = crate::words::lower_christoffel(slope, (0u8, 1u8)).unwrap();
                let digits = bw_matrix(&w).unwrap();
                let sub = |x: &FieldScalar| if x.is_zero() { p.a().clone() } else { p.b().clone() };
                let rows = digits.row_vectors().map(|r| r.iter().map(sub).collect()).collect();
                prop_assert_eq!(ExactMatrix::from_rows(rows).unwrap(), christoffel_matrix(&p));
                prop_assert_eq!(p.lower_word().into_letters(), christoffel_matrix(&p).row(p.n() - 1).to_vec());
                prop_assert!(column_shift_check(&p));
                prop_assert!(corollary_ba_check(&p));
            }

            #[test]
            fn line_sums_and_ones_vector(p in params(30)) {
                let m = christoffel_matrix(&p);
                let c = p.row_sum();
                let zero = c.zero_like();
                for i in 0..p.n() {
                    let row = m.row(i).iter().fold(zero.clone(), |acc, x| acc.add(x).unwrap());
                    let col = m.column(i).iter().fold(zero.clone(), |acc, x| acc.add(x).unwrap());
                    prop_assert_eq!(&row, &c);
                    prop_assert_eq!(&col, &c);
                }
                let ones = vec![c.one_like(); p.n()];
                prop_assert_eq!(m.left_mul_vector(&ones).unwrap(), vec![c; p.n()]);
            }

            #[test]
            fn difference_vectors(p in params(30)) {
                let m = christoffel_matrix(&p);
                let n = p.n();
                let d = p.b().sub(p.a()).unwrap();
                let unit = |i: usize, j: usize| {
                    let mut v = vec![d.zero_like(); n];
                    v[i] = d.one_like();
                    v[j] = d.one_like().neg();
                    v
                };
                for i in 1..n {
                    let j = consecutive_rows_square(&p, i).unwrap();
                    let lhs = m.left_mul_vector(&unit(i - 1, i)).unwrap();
                    let rhs: Vec<_> = unit(j - 1, j).iter().map(|x| x.mul(&d).unwrap()).collect();
                    prop_assert_eq!(lhs, rhs);
                    prop_assert!(check_consecutive_rows(&p, i).unwrap());
                }
            }

            #[test]
            fn multiplier_order_divides_totient(p in params(60)) {
                let w = Permutation::multiplication(p.r() as i64, p.n() as u64).unwrap();
                prop_assert!(w.pow(euler_phi(p.n() as u64)).is_identity());
            }

            #[test]
            fn closed_determinant(p in params(12)) {
                prop_assert_eq!(det_closed(&p).unwrap(), christoffel_matrix(&p).det_exact().unwrap());
            }
        }
    }
}
