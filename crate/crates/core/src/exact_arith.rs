//! Exact extended rationals and finite continued fractions.
//!
//! Every quantity in this crate is an exact rational number or the single
//! unsigned point at infinity. Nothing is ever approximated by a float.
//!
//! Continued fractions are written in *reverse nesting order*: the entries
//! `[a1, a2, ..., an]` denote
//!
//! ```text
//! an + 1/(a(n-1) + 1/( ... + 1/a1))
//! ```
//!
//! so the last entry is the integer part and the first entry is the most
//! deeply nested one. This is the order in which rational tangles
//! `R(a1, ..., an)` are built up twist by twist.

use std::fmt;
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("no finite expansion: the value is infinite")]
    NoFiniteExpansion,
    #[error("operation undefined at infinity: {0}")]
    Infinite(&'static str),
    #[error("a continued fraction needs at least one entry")]
    EmptyContinuedFraction,
    #[error("cannot parse {input:?} as a rational number")]
    Parse { input: String },
}

/// A rational number or the unsigned point at infinity.
///
/// Finite values are always reduced with a positive denominator (that is
/// what [`BigRational`] guarantees), `0` is `0/1`, and any `p/0` collapses
/// to the one [`ExtRational::Infinity`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ExtRational {
    Finite(BigRational),
    Infinity,
}

impl ExtRational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Self {
        let (numer, denom) = (numer.into(), denom.into());
        if denom.is_zero() {
            ExtRational::Infinity
        } else {
            ExtRational::Finite(BigRational::new(numer, denom))
        }
    }

    pub fn integer(value: impl Into<BigInt>) -> Self {
        ExtRational::Finite(BigRational::from_integer(value.into()))
    }

    pub fn zero() -> Self {
        ExtRational::integer(0)
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtRational::Infinity)
    }

    pub fn as_finite(&self) -> Option<&BigRational> {
        match self {
            ExtRational::Finite(r) => Some(r),
            ExtRational::Infinity => None,
        }
    }

    pub fn finite(&self, what: &'static str) -> Result<&BigRational, ArithError> {
        self.as_finite().ok_or(ArithError::Infinite(what))
    }

    /// Reduced numerator; `1` for infinity, read as `1/0`.
    pub fn numer(&self) -> BigInt {
        match self {
            ExtRational::Finite(r) => r.numer().clone(),
            ExtRational::Infinity => BigInt::one(),
        }
    }

    /// Reduced denominator; `0` for infinity.
    pub fn denom(&self) -> BigInt {
        match self {
            ExtRational::Finite(r) => r.denom().clone(),
            ExtRational::Infinity => BigInt::zero(),
        }
    }

    /// `1/x`, with `1/0 = inf` and `1/inf = 0`.
    pub fn recip(&self) -> Self {
        match self {
            ExtRational::Infinity => ExtRational::zero(),
            ExtRational::Finite(r) if r.is_zero() => ExtRational::Infinity,
            ExtRational::Finite(r) => ExtRational::Finite(r.recip()),
        }
    }

    /// Canonical string used in machine-readable output: always `p/q`
    /// (reduced, `q >= 1`), or `inf`.
    pub fn to_canonical_string(&self) -> String {
        match self {
            ExtRational::Finite(r) => format_ratio(r),
            ExtRational::Infinity => "inf".to_string(),
        }
    }
}

/// `p/q` with the denominator always written, even when it is 1.
pub fn format_ratio(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

impl From<BigRational> for ExtRational {
    fn from(r: BigRational) -> Self {
        ExtRational::Finite(r)
    }
}

impl From<i64> for ExtRational {
    fn from(v: i64) -> Self {
        ExtRational::integer(v)
    }
}

impl fmt::Display for ExtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRational::Finite(r) if r.is_integer() => write!(f, "{}", r.numer()),
            ExtRational::Finite(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            ExtRational::Infinity => f.write_str("inf"),
        }
    }
}

/// Parses `p/q`, a bare integer `p`, or `inf` / `∞`. Fractions need not be
/// given in lowest terms; `p/0` reads as infinity.
impl FromStr for ExtRational {
    type Err = ArithError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ArithError::Parse { input: s.to_string() };
        let t = s.trim();
        if t.eq_ignore_ascii_case("inf") || t == "∞" {
            return Ok(ExtRational::Infinity);
        }
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| err())?;
        let den: BigInt = den.parse().map_err(|_| err())?;
        Ok(ExtRational::new(num, den))
    }
}

/// A finite continued fraction `[a1, ..., an]`, `n >= 1`, in reverse
/// nesting order (see the module docs). Zero and negative entries are
/// allowed; a zero intermediate denominator simply makes the tail infinite.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ContinuedFraction {
    entries: Vec<BigInt>,
}

impl ContinuedFraction {
    pub fn new(entries: Vec<BigInt>) -> Result<Self, ArithError> {
        if entries.is_empty() {
            return Err(ArithError::EmptyContinuedFraction);
        }
        Ok(ContinuedFraction { entries })
    }

    pub fn from_i64s(entries: &[i64]) -> Result<Self, ArithError> {
        Self::new(entries.iter().map(|&a| BigInt::from(a)).collect())
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, a) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("]")
    }
}

/// Evaluates `an + 1/(a(n-1) + ... + 1/a1)` exactly.
///
/// Runs the unimodular recurrence `(h, k) -> (a*h + k, h)` starting from
/// `(a1, 1)`; the pair never becomes `(0, 0)`, so a zero intermediate value
/// just passes through infinity and comes back.
pub fn cf_to_rational(cf: &ContinuedFraction) -> ExtRational {
    let mut iter = cf.entries.iter();
    let first = iter.next().expect("continued fraction is non-empty");
    let mut h = first.clone();
    let mut k = BigInt::one();
    for a in iter {
        let next = a * &h + &k;
        k = std::mem::replace(&mut h, next);
    }
    ExtRational::new(h, k)
}

/// Floor-based Euclidean expansion, emitted in reverse nesting order so that
/// `cf_to_rational(&rational_to_cf(r)?) == r`.
pub fn rational_to_cf(r: &ExtRational) -> Result<ContinuedFraction, ArithError> {
    let r = r.as_finite().ok_or(ArithError::NoFiniteExpansion)?;
    let mut num = r.numer().clone();
    let mut den = r.denom().clone();
    let mut partial_quotients = Vec::new();
    loop {
        let (q, rem) = num.div_mod_floor(&den);
        partial_quotients.push(q);
        if rem.is_zero() {
            break;
        }
        num = std::mem::replace(&mut den, rem);
    }
    partial_quotients.reverse();
    ContinuedFraction::new(partial_quotients)
}

/// The representative of `r` modulo 1 in `[0, 1)`.
pub fn mod_one(r: &ExtRational) -> Result<ExtRational, ArithError> {
    let r = r.finite("mod 1")?;
    Ok(ExtRational::Finite(frac_part(r)))
}

/// `r - floor(r)` on a finite rational.
pub fn frac_part(r: &BigRational) -> BigRational {
    r - r.floor()
}
