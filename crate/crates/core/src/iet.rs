//! Symmetric discrete interval exchanges.
//!
//! A composition `(c_1, .., c_l)` of `n` cuts `{0, .., n-1}` into
//! consecutive intervals `I_1, .., I_l` and, in reverse order of sizes, into
//! `J_1, .., J_l`. The exchange maps each `I_h` increasingly onto
//! `J_{l+1-h}`. Circular exchanges are encoded into perfectly clustering
//! Lyndon words by reading their cycle form.

use std::collections::BTreeSet;

use num_integer::Integer;

use crate::bwgroup::inverse_mod;
use crate::error::{Error, Result};
use crate::permsign::Permutation;
use crate::words::Word;

/// Nonnegative parts with a positive sum. Zero parts are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().sum::<usize>() == 0 {
            return Err(Error::EmptyComposition);
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts `l`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Start of `I_h` (0-based `h`).
    pub fn interval_start(&self, h: usize) -> usize {
        self.parts[..h].iter().sum()
    }

    /// Index `h` of the interval `I_h` containing `x`.
    pub fn interval_of(&self, x: usize) -> usize {
        let mut end = 0;
        for (h, &c) in self.parts.iter().enumerate() {
            end += c;
            if x < end {
                return h;
            }
        }
        panic!("{x} outside composition of {}", self.total())
    }
}

/// An interval exchange together with the composition defining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IetPermutation {
    sigma: Permutation,
    composition: Composition,
}

impl IetPermutation {
    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn composition(&self) -> &Composition {
        &self.composition
    }

    pub fn len(&self) -> usize {
        self.sigma.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sigma.is_empty()
    }

    /// Encoding of the cycle form starting at `start`.
    pub fn encoding_from<L: Clone>(&self, start: usize, alphabet: &[L]) -> Result<Word<L>> {
        if !is_circular(self) {
            return Err(Error::NotCircular);
        }
        if alphabet.len() != self.composition.len() {
            return Err(Error::AlphabetSizeMismatch {
                expected: self.composition.len(),
                got: alphabet.len(),
            });
        }
        Ok(self
            .sigma
            .cycle_from(start)
            .into_iter()
            .map(|x| alphabet[self.composition.interval_of(x)].clone())
            .collect())
    }
}

pub fn build_sigma(c: &Composition) -> Result<IetPermutation> {
    if c.total() == 0 {
        return Err(Error::EmptyComposition);
    }
    let mut images = Vec::with_capacity(c.total());
    let mut after: usize = c.total();
    for &part in c.parts() {
        // I_h lands on J_{l+1-h}, which starts at the sum of the later parts
        after -= part;
        images.extend(after..after + part);
    }
    Ok(IetPermutation {
        sigma: Permutation::new(images).expect("interval exchange is a bijection"),
        composition: c.clone(),
    })
}

pub fn is_circular(p: &IetPermutation) -> bool {
    p.sigma.is_single_cycle()
}

/// `c_1 + c_2` and `c_2 + c_3` coprime.
pub fn pak_redlich_circular(c1: usize, c2: usize, c3: usize) -> bool {
    (c1 + c2).gcd(&(c2 + c3)) == 1
}

pub fn two_interval_circular(c1: usize, c2: usize) -> bool {
    c1.gcd(&c2) == 1
}

/// Word read off the cycle form starting at 0, letter `j` standing for
/// the elements of `I_j`.
pub fn standard_encoding<L: Clone>(p: &IetPermutation, alphabet: &[L]) -> Result<Word<L>> {
    p.encoding_from(0, alphabet)
}

/// Deletes every element `>= k` from the cycle form of a circular
/// permutation.
pub fn restrict_cycle(sigma: &Permutation, k: usize) -> Result<Permutation> {
    if !sigma.is_single_cycle() {
        return Err(Error::NotCircular);
    }
    if k == 0 || k > sigma.len() {
        return Err(Error::RestrictionOutOfRange(format!(
            "size {k} of {}",
            sigma.len()
        )));
    }
    let kept: Vec<usize> = sigma.cycle_from(0).into_iter().filter(|&x| x < k).collect();
    Ok(Permutation::from_cycles(k, &[kept]).expect("kept elements are distinct"))
}

/// Restriction of the two-interval exchange `(g, r)` to `{0, .., k-1}`
/// with `k = g + r - i`. The result carries the composition
/// `(g - i, i, r - i)`.
pub fn cyclic_restriction(p: &IetPermutation, k: usize) -> Result<IetPermutation> {
    let (g, r) = two_interval_parts(p.composition())?;
    let n = g + r;
    if k > n || n - k > g.min(r) {
        return Err(Error::RestrictionOutOfRange(format!(
            "size {k} needs 0 <= {n} - {k} <= {}",
            g.min(r)
        )));
    }
    let i = n - k;
    let sigma = restrict_cycle(&p.sigma, k)?;
    let composition = Composition::new(vec![g - i, i, r - i])?;
    debug_assert_eq!(sigma, build_sigma(&composition).expect("nonempty").sigma);
    Ok(IetPermutation { sigma, composition })
}

/// Accepts `(g, r)` and `(g, 0, r)`, both circular.
fn two_interval_parts(c: &Composition) -> Result<(usize, usize)> {
    let (g, r) = match c.parts() {
        [g, r] | [g, 0, r] => (*g, *r),
        other => {
            return Err(Error::RestrictionOutOfRange(format!(
                "composition {other:?} is not a two-interval exchange"
            )))
        }
    };
    if !two_interval_circular(g, r) {
        return Err(Error::NotCircular);
    }
    Ok((g, r))
}

/// One word of a restriction chain and the merge position that produced
/// it from its predecessor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainLink<L> {
    pub word: Word<L>,
    /// `p` such that letters `p-1, p` of the previous word became `b`.
    pub merged_at: Option<usize>,
}

/// Merge positions `i g* mod N - d_i` for `i = 1..=g`, where `d_i` counts
/// the `j <= i` with `j g* mod N < i g* mod N`.
pub fn merge_positions(g: usize, n_total: usize) -> Result<Vec<usize>> {
    let g_star = inverse_mod(g % n_total.max(1), n_total)
        .ok_or(Error::NotCoprime(g as i64, n_total as u64))?;
    let residues: Vec<usize> = (1..=g).map(|i| i * g_star % n_total).collect();
    Ok(residues
        .iter()
        .enumerate()
        .map(|(i, &x)| x - residues[..i].iter().filter(|&&y| y < x).count())
        .collect())
}

/// The chain `v_{N-1} -> .. -> v_{N-g-1}` of standard encodings of
/// `(g - i, i, r - i)` over `{a < b < c}`, each arrow replacing one
/// factor `ac` by `b`.
pub fn restriction_word_chain<L: Clone>(
    g: usize,
    r: usize,
    alphabet: [L; 3],
) -> Result<Vec<ChainLink<L>>> {
    if g.gcd(&r) != 1 {
        return Err(Error::NotCoprime(g as i64, r as u64));
    }
    if g > r {
        return Err(Error::RestrictionOutOfRange(format!("needs {g} <= {r}")));
    }
    let positions = merge_positions(g, g + r)?;
    let top = build_sigma(&Composition::new(vec![g, 0, r])?)?;
    let mut chain = vec![ChainLink {
        word: standard_encoding(&top, &alphabet)?,
        merged_at: None,
    }];
    for (i, &pos) in (1..=g).zip(&positions) {
        let p = cyclic_restriction(&top, g + r - i)?;
        chain.push(ChainLink {
            word: standard_encoding(&p, &alphabet)?,
            merged_at: Some(pos),
        });
    }
    Ok(chain)
}

/// Replaces letters `p-1, p` by `b`.
pub fn merge_at<L: Clone>(w: &Word<L>, p: usize, b: L) -> Word<L> {
    let mut letters = w.letters()[..p - 1].to_vec();
    letters.push(b);
    letters.extend_from_slice(&w.letters()[p + 1..]);
    Word::new(letters)
}

const MAX_ENUM_LEN: usize = 18;

fn check_enum_size(n: usize, l: usize) -> Result<()> {
    if n == 0 || n > MAX_ENUM_LEN || !(2..=3).contains(&l) {
        return Err(Error::SizeLimit(format!(
            "length {n} must be in 1..={MAX_ENUM_LEN} and alphabet size {l} in 2..=3"
        )));
    }
    Ok(())
}

fn first_letters(l: usize) -> Vec<char> {
    ('a'..).take(l).collect()
}

/// Lyndon words of length exactly `n` over `k` letters `0..k`, in
/// lexicographic order (Fredricksen-Kessler-Maiorana).
pub fn lyndon_words(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if n == 0 || k == 0 {
        return out;
    }
    // Duval's successor: each w visited is a Lyndon word of length <= n
    let mut w: Vec<usize> = vec![0];
    loop {
        if w.len() == n {
            out.push(w.clone());
        }
        let m = w.len();
        while w.len() < n {
            w.push(w[w.len() - m]);
        }
        while w.last() == Some(&(k - 1)) {
            w.pop();
        }
        match w.last_mut() {
            Some(x) => *x += 1,
            None => break,
        }
    }
    out
}

/// PC Lyndon words by filtering all Lyndon words with the BW test.
pub fn pc_lyndon_by_filter(n: usize, l: usize) -> Result<BTreeSet<Word<char>>> {
    check_enum_size(n, l)?;
    let letters = first_letters(l);
    Ok(lyndon_words(n, l)
        .into_iter()
        .map(|w| w.into_iter().map(|i| letters[i]).collect::<Word<char>>())
        .filter(|w| w.is_perfectly_clustering().unwrap_or(false))
        .collect())
}

/// PC Lyndon words as standard encodings of circular compositions.
pub fn pc_lyndon_by_encoding(n: usize, l: usize) -> Result<BTreeSet<Word<char>>> {
    check_enum_size(n, l)?;
    let letters = first_letters(l);
    let mut out = BTreeSet::new();
    for parts in compositions(n, l) {
        let p = build_sigma(&Composition::new(parts)?)?;
        if is_circular(&p) {
            out.insert(standard_encoding(&p, &letters)?);
        }
    }
    Ok(out)
}

/// All PC Lyndon words of length `n` over the first `l` letters, sorted.
pub fn enumerate_pc_words(n: usize, l: usize) -> Result<Vec<Word<char>>> {
    Ok(pc_lyndon_by_encoding(n, l)?.into_iter().collect())
}

/// Weak compositions of `n` into `l` parts.
pub fn compositions(n: usize, l: usize) -> Vec<Vec<usize>> {
    if l == 0 {
        return if n == 0 { vec![vec![]] } else { vec![] };
    }
    if l == 1 {
        return vec![vec![n]];
    }
    (0..=n)
        .flat_map(|first| {
            compositions(n - first, l - 1)
                .into_iter()
                .map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sigma(parts: &[usize]) -> IetPermutation {
        build_sigma(&Composition::new(parts.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn sigma_images() {
        assert_eq!(
            sigma(&[2, 2, 5]).sigma().images(),
            &[7, 8, 5, 6, 0, 1, 2, 3, 4]
        );
        assert_eq!(sigma(&[2, 0, 3]).sigma().images(), &[3, 4, 0, 1, 2]);
        assert_eq!(sigma(&[1, 1]).sigma().images(), &[1, 0]);
        assert_eq!(
            sigma(&[3, 1, 6]).sigma().images(),
            &[7, 8, 9, 6, 0, 1, 2, 3, 4, 5]
        );
        assert_eq!(Composition::new(vec![0, 0]), Err(Error::EmptyComposition));
    }

    #[test]
    fn three_branch_translation() {
        for c in compositions(12, 3) {
            let (c1, c2, c3) = (c[0], c[1], c[2]);
            let Ok(comp) = Composition::new(c.clone()) else {
                continue;
            };
            let p = build_sigma(&comp).unwrap();
            for x in 0..12 {
                let expect = if x < c1 {
                    x + c2 + c3
                } else if x < c1 + c2 {
                    x + c3 - c1
                } else {
                    x - c1 - c2
                };
                assert_eq!(p.sigma().apply(x), expect);
            }
        }
    }

    #[test]
    fn circularity() {
        assert!(is_circular(&sigma(&[2, 2, 5])));
        assert!(!is_circular(&sigma(&[2, 2, 2])));
        assert!(is_circular(&sigma(&[1, 1])));
        assert!(pak_redlich_circular(2, 2, 5));
        assert!(!pak_redlich_circular(2, 2, 2));
        assert!(two_interval_circular(1, 1));
        assert_eq!(
            sigma(&[2, 2, 5]).sigma().cycle_notation(),
            "(0,7,3,6,2,5,1,8,4)"
        );
    }

    #[test]
    fn encodings() {
        let abc = ['a', 'b', 'c'];
        assert_eq!(
            standard_encoding(&sigma(&[2, 2, 5]), &abc)
                .unwrap()
                .to_string(),
            "acbcbcacc"
        );
        assert_eq!(
            standard_encoding(&sigma(&[2, 0, 3]), &abc)
                .unwrap()
                .to_string(),
            "acacc"
        );
        let w = standard_encoding(&sigma(&[1, 1, 2]), &[-1i64, 0, 1]).unwrap();
        assert_eq!(w.letters(), &[-1, 1, 0, 1]);
        assert_eq!(
            standard_encoding(&sigma(&[2, 2, 2]), &abc),
            Err(Error::NotCircular)
        );
        assert_eq!(
            standard_encoding(&sigma(&[2, 2, 5]), &['a', 'b']),
            Err(Error::AlphabetSizeMismatch {
                expected: 3,
                got: 2
            })
        );
    }

    #[test]
    fn restrictions() {
        let top = sigma(&[4, 7]);
        assert_eq!(cyclic_restriction(&top, 11).unwrap().sigma(), top.sigma());
        assert_eq!(
            cyclic_restriction(&top, 9).unwrap().sigma(),
            sigma(&[2, 2, 5]).sigma()
        );
        assert_eq!(
            cyclic_restriction(&top, 10).unwrap().sigma(),
            sigma(&[3, 1, 6]).sigma()
        );
        assert!(matches!(
            cyclic_restriction(&top, 6),
            Err(Error::RestrictionOutOfRange(_))
        ));
        assert_eq!(
            cyclic_restriction(&sigma(&[2, 4]), 5),
            Err(Error::NotCircular)
        );
    }

    #[test]
    fn golden_chain() {
        let chain = restriction_word_chain(4, 7, ['a', 'b', 'c']).unwrap();
        let words: Vec<String> = chain.iter().map(|l| l.word.to_string()).collect();
        assert_eq!(
            words,
            [
                "acaccaccacc",
                "acbcaccacc",
                "acbcbcacc",
                "acbcbcbc",
                "bbcbcbc"
            ]
        );
        let pos: Vec<_> = chain.iter().filter_map(|l| l.merged_at).collect();
        assert_eq!(pos, [3, 5, 7, 1]);
        for pair in chain.windows(2) {
            let p = pair[1].merged_at.unwrap();
            assert_eq!(&pair[0].word.letters()[p - 1..=p], &['a', 'c']);
            assert_eq!(merge_at(&pair[0].word, p, 'b'), pair[1].word);
        }
    }

    #[test]
    fn small_chains() {
        let chain = restriction_word_chain(1, 1, ['a', 'b', 'c']).unwrap();
        assert_eq!(chain[0].word.to_string(), "ac");
        assert_eq!(chain[1].word.to_string(), "b");
        assert_eq!(chain[1].merged_at, Some(1));
        let chain = restriction_word_chain(1, 2, ['a', 'b', 'c']).unwrap();
        assert_eq!(chain[0].word.to_string(), "acc");
        assert_eq!(chain[1].word.to_string(), "bc");
        assert_eq!(
            restriction_word_chain(2, 4, ['a', 'b', 'c']),
            Err(Error::NotCoprime(2, 4))
        );
    }

    #[test]
    fn lyndon_counts() {
        // necklace-polynomial counts
        assert_eq!(lyndon_words(1, 2).len(), 2);
        assert_eq!(lyndon_words(6, 2).len(), 9);
        assert_eq!(lyndon_words(4, 3).len(), 18);
        assert_eq!(lyndon_words(2, 2), vec![vec![0, 1]]);
        for w in lyndon_words(8, 3) {
            assert!(Word::new(w).is_lyndon());
        }
    }

    #[test]
    fn pc_enumeration() {
        let two: Vec<String> = enumerate_pc_words(2, 2)
            .unwrap()
            .iter()
            .map(|w| w.to_string())
            .collect();
        assert_eq!(two, ["ab"]);
        let nine = enumerate_pc_words(9, 3).unwrap();
        assert!(nine.contains(&Word::from("acbcbcacc")));
        let seven = enumerate_pc_words(7, 2).unwrap();
        assert_eq!(seven.len(), 6);
        assert!(seven.contains(&Word::from("aaabaab")));
        for n in 1..=9 {
            assert_eq!(
                pc_lyndon_by_filter(n, 3).unwrap(),
                pc_lyndon_by_encoding(n, 3).unwrap()
            );
        }
        assert!(matches!(
            enumerate_pc_words(19, 3),
            Err(Error::SizeLimit(_))
        ));
        assert!(matches!(enumerate_pc_words(5, 4), Err(Error::SizeLimit(_))));
    }

    #[test]
    fn cycle_forms_give_conjugacy_class() {
        let p = sigma(&[2, 2, 5]);
        let base = standard_encoding(&p, &['a', 'b', 'c']).unwrap();
        let from_all: BTreeSet<_> = (0..9)
            .map(|s| p.encoding_from(s, &['a', 'b', 'c']).unwrap())
            .collect();
        let conj: BTreeSet<_> = base.conjugates().unwrap().into_iter().collect();
        assert_eq!(from_all, conj);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn restriction_paths_agree((g, r, i) in (1usize..30, 1usize..30)
                .prop_filter("coprime", |(g, r)| g.gcd(r) == 1)
                .prop_flat_map(|(g, r)| (Just(g), Just(r), 0..=g.min(r))))
            {
                let top = build_sigma(&Composition::new(vec![g, r]).unwrap()).unwrap();
                let restricted = restrict_cycle(top.sigma(), g + r - i).unwrap();
                let direct = build_sigma(&Composition::new(vec![g - i, i, r - i]).unwrap()).unwrap();
                prop_assert_eq!(&restricted, direct.sigma());
            }

            #[test]
            fn chains_merge_disjoint_ac((g, r) in (1usize..25, 1usize..40)
                .prop_filter("coprime, g <= r", |(g, r)| g.gcd(r) == 1 && g <= r))
            {
                let chain = restriction_word_chain(g, r, ['a', 'b', 'c']).unwrap();
                prop_assert_eq!(chain.len(), g + 1);
                for pair in chain.windows(2) {
                    let p = pair[1].merged_at.unwrap();
                    prop_assert_eq!(&pair[0].word.letters()[p - 1..=p], &['a', 'c']);
                    prop_assert_eq!(merge_at(&pair[0].word, p, 'b'), pair[1].word.clone());
                }
            }
        }
    }
}
