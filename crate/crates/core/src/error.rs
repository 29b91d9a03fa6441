use thiserror::Error;

/// Every failure the library can report. The CLI prints the variant name
/// so that users can tell which operation rejected the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("DivisionByZero: division by a zero scalar")]
    DivisionByZero,
    #[error("KindMismatch: {0}")]
    KindMismatch(String),
    #[error("DimensionMismatch: {0}")]
    DimensionMismatch(String),
    #[error("InvalidModulus: {0} is not a prime")]
    InvalidModulus(u64),
    #[error("CharacteristicTooSmall: modulus {modulus} must exceed the order {order}")]
    CharacteristicTooSmall { modulus: u64, order: usize },
    #[error("Parse: {0}")]
    Parse(String),

    #[error("InvalidSlope: {0}")]
    InvalidSlope(String),
    #[error("InvalidAlphabet: {0}")]
    InvalidAlphabet(String),
    #[error("NotPrimitive: the word is a proper power")]
    NotPrimitive,
    #[error("LengthOutOfRange: {0}")]
    LengthOutOfRange(String),
    #[error("NotChristoffel: {0}")]
    NotChristoffel(String),
    #[error("NoPalindromicSplit: the word is not a product of two palindromes")]
    NoPalindromicSplit,
    #[error("AmbiguousSplit: the word has {0} palindromic factorizations")]
    AmbiguousSplit(usize),

    #[error("InvalidParams: {0}")]
    InvalidParams(String),
    #[error("NonInvertibleRowSum: the row sum (n-r)a+rb vanishes")]
    NonInvertibleRowSum,
    #[error("OrderMismatch: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("IndexOutOfRange: {0}")]
    IndexOutOfRange(String),

    #[error("NotBijective: {0}")]
    NotBijective(String),
    #[error("NotCoprime: gcd({0}, {1}) != 1")]
    NotCoprime(i64, u64),
    #[error("EvenModulus: {0}")]
    EvenModulus(u64),

    #[error("EmptyComposition")]
    EmptyComposition,
    #[error("NotCircular: the interval exchange has more than one cycle")]
    NotCircular,
    #[error("AlphabetSizeMismatch: expected {expected} letters, got {got}")]
    AlphabetSizeMismatch { expected: usize, got: usize },
    #[error("RestrictionOutOfRange: {0}")]
    RestrictionOutOfRange(String),
    #[error("SizeLimit: {0}")]
    SizeLimit(String),

    #[error("InvalidCF: {0}")]
    InvalidCF(String),
    #[error("OutOfRange: {0}")]
    OutOfRange(String),

    #[error("InsufficientCF: {0}")]
    InsufficientCF(String),
    #[error("NotPerfectlyClustering: {0}")]
    NotPerfectlyClustering(String),

    #[error("IndexTooSmall: {0}")]
    IndexTooSmall(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
