//! Rational tangles and the two tangle triples `(A, B, C)` whose
//! `R(inf)`-closure is the trivial knot.
//!
//! A rational tangle is determined up to equivalence by its fraction in
//! `Q ∪ {inf}`, so that is all we keep, together with the continued
//! fraction it was built from when there is one.

use std::fmt;

use crate::exact_arith::{cf_to_rational, ContinuedFraction, ExtRational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalTangle {
    presentation: Option<ContinuedFraction>,
    fraction: ExtRational,
}

impl RationalTangle {
    /// `R(a1, ..., an)`.
    pub fn from_cf(presentation: ContinuedFraction) -> Self {
        let fraction = cf_to_rational(&presentation);
        RationalTangle {
            presentation: Some(presentation),
            fraction,
        }
    }

    /// `R(a1, ..., an)` from machine integers.
    ///
    /// # Panics
    /// If `entries` is empty.
    pub fn from_entries(entries: &[i64]) -> Self {
        Self::from_cf(ContinuedFraction::from_i64s(entries).expect("tangle needs at least one entry"))
    }

    /// `R(r)` without a twist presentation.
    pub fn from_fraction(fraction: ExtRational) -> Self {
        RationalTangle {
            presentation: None,
            fraction,
        }
    }

    pub fn presentation(&self) -> Option<&ContinuedFraction> {
        self.presentation.as_ref()
    }

    pub fn fraction(&self) -> &ExtRational {
        &self.fraction
    }
}

impl fmt::Display for RationalTangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.presentation {
            Some(cf) => {
                let entries: Vec<String> = cf.entries().iter().map(|a| a.to_string()).collect();
                write!(f, "R({}) = R({})", entries.join(", "), self.fraction)
            }
            None => write!(f, "R({})", self.fraction),
        }
    }
}

pub fn tangle_fraction(t: &RationalTangle) -> ExtRational {
    t.fraction.clone()
}

/// Two rational tangles are equivalent exactly when their fractions agree.
pub fn tangles_equivalent(t1: &RationalTangle, t2: &RationalTangle) -> bool {
    t1.fraction == t2.fraction
}

/// Which of the two solution families a triple belongs to.
///
/// `Case1` is written `k(l, m, n, 0)`, `Case2` is `k(l, m, 0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyCase {
    Case1,
    Case2,
}

impl fmt::Display for FamilyCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyCase::Case1 => "case1",
            FamilyCase::Case2 => "case2",
        })
    }
}

/// The tangles `A, B, C` for one member of either family:
///
/// * `Case1`: `A = R(l)`, `B = R(m, -l)`, `C = R(-n, 2, m-1, 2, 0)`
/// * `Case2`: `A = R(l)`, `B = R(p, -2, m, -l)`, `C = R(m-1, 2, 0)`
///
/// Up to equivalence these are the only triples with trivial `R(inf)`
/// closure, modulo the rotation that swaps `A` and `B`. That swap is not
/// normalized away here; see [`TangleTriple::interchanged`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TangleTriple {
    case: FamilyCase,
    l: i64,
    m: i64,
    /// `n` in `Case1`, `p` in `Case2`.
    third: i64,
    a: RationalTangle,
    b: RationalTangle,
    c: RationalTangle,
}

pub fn make_tangle_triple(case: FamilyCase, l: i64, m: i64, n_or_p: i64) -> TangleTriple {
    let (l128, m128, x128) = (l as i128, m as i128, n_or_p as i128);
    let entries = |v: &[i128]| {
        let big: Vec<num::BigInt> = v.iter().map(|&a| a.into()).collect();
        RationalTangle::from_cf(ContinuedFraction::new(big).expect("non-empty"))
    };
    let a = entries(&[l128]);
    let (b, c) = match case {
        FamilyCase::Case1 => (
            entries(&[m128, -l128]),
            entries(&[-x128, 2, m128 - 1, 2, 0]),
        ),
        FamilyCase::Case2 => (
            entries(&[x128, -2, m128, -l128]),
            entries(&[m128 - 1, 2, 0]),
        ),
    };
    TangleTriple {
        case,
        l,
        m,
        third: n_or_p,
        a,
        b,
        c,
    }
}

impl TangleTriple {
    pub fn case(&self) -> FamilyCase {
        self.case
    }

    pub fn l(&self) -> i64 {
        self.l
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn n(&self) -> Option<i64> {
        (self.case == FamilyCase::Case1).then_some(self.third)
    }

    pub fn p(&self) -> Option<i64> {
        (self.case == FamilyCase::Case2).then_some(self.third)
    }

    pub fn a(&self) -> &RationalTangle {
        &self.a
    }

    pub fn b(&self) -> &RationalTangle {
        &self.b
    }

    pub fn c(&self) -> &RationalTangle {
        &self.c
    }

    /// `(B, A, C)`: the same knot seen through the rotation exchanging the
    /// `A` and `B` slots.
    pub fn interchanged(&self) -> [RationalTangle; 3] {
        [self.b.clone(), self.a.clone(), self.c.clone()]
    }
}
