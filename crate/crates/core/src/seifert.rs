//! Seifert fibered spaces over the disk and the sphere, described by their
//! Seifert invariants `beta/alpha`.
//!
//! The sign convention is the one used when the invariants are written
//! down by the families module. Reversing the orientation of every space
//! negates all invariants at once ([`orientation_reversed`]); verdicts that
//! compare two spaces under the same convention do not change.

use std::collections::BTreeSet;
use std::fmt;

use num::bigint::{BigInt, BigUint};
use num::rational::BigRational;
use num::Zero;
use thiserror::Error;

use crate::exact_arith::{format_ratio, frac_part, ExtRational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeifertError {
    #[error("Seifert invariant must be finite")]
    InfiniteInvariant,
    #[error("a Seifert half over the disk carries exactly 2 invariants, got {0}")]
    DiskArity(usize),
    #[error("a sphere descriptor carries at most 3 invariants, got {0}")]
    SphereArity(usize),
    #[error("not a D²(p,q) with p,q ≥ 2, not a valid Seifert half (index {0})")]
    NotSeifertHalf(BigUint),
    #[error("index sets are only defined for Seifert halves over the disk")]
    NotOverDisk,
    #[error("cannot compare a space over {0} with a space over {1}")]
    BaseMismatch(Base, Base),
    #[error("index {0} is below 2 and cannot appear in an index set")]
    IndexTooSmall(BigUint),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Base {
    DiskD2,
    SphereS2,
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Base::DiskD2 => "D²",
            Base::SphereS2 => "S²",
        })
    }
}

/// Index of the exceptional fiber with Seifert invariant `-q/p`: `|p|`,
/// i.e. the reduced denominator. Integers give 1 (a regular fiber).
pub fn index_of_invariant(inv: &ExtRational) -> Result<BigUint, SeifertError> {
    let r = inv.as_finite().ok_or(SeifertError::InfiniteInvariant)?;
    Ok(index_of(r))
}

pub(crate) fn index_of(r: &BigRational) -> BigUint {
    r.denom().magnitude().clone()
}

/// Seifert invariant `-q/p` and index `|p|` of the core of the solid torus
/// double covering a rational tangle ball of fraction `p/q`.
///
/// `None` when `p = 0`: the invariant would be infinite.
pub fn core_fiber_of_tangle(fraction: &ExtRational) -> Option<(BigRational, BigUint)> {
    let p = fraction.numer();
    if p.is_zero() {
        return None;
    }
    let q = fraction.denom();
    Some((BigRational::new(-q, p.clone()), p.magnitude().clone()))
}

/// The set `{p, q}` of exceptional indices of a Seifert half; duplicates
/// collapse. Every member is at least 2.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IndexSet(BTreeSet<BigUint>);

impl IndexSet {
    pub fn new<I>(indices: I) -> Result<Self, SeifertError>
    where
        I: IntoIterator<Item = BigUint>,
    {
        let mut set = BTreeSet::new();
        for idx in indices {
            if idx < BigUint::from(2u32) {
                return Err(SeifertError::IndexTooSmall(idx));
            }
            set.insert(idx);
        }
        Ok(IndexSet(set))
    }

    pub fn from_u64s(indices: &[u64]) -> Result<Self, SeifertError> {
        Self::new(indices.iter().map(|&i| BigUint::from(i)))
    }

    /// Ascending.
    pub fn iter(&self) -> impl Iterator<Item = &BigUint> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", items.join(", "))
    }
}

/// A Seifert fibered space over `D²` or `S²`.
///
/// Over `D²` this is always a Seifert half: two invariants. Over `S²` at
/// most three invariants are kept; integer invariants there are regular
/// fibers and are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SfsDescriptor {
    base: Base,
    invariants: Vec<BigRational>,
    /// Sum of the original invariants, kept once a sphere descriptor has
    /// been reduced mod 1.
    recorded_total: Option<BigRational>,
    label: Option<String>,
}

impl SfsDescriptor {
    pub fn new(base: Base, invariants: Vec<BigRational>) -> Result<Self, SeifertError> {
        match base {
            Base::DiskD2 if invariants.len() != 2 => {
                return Err(SeifertError::DiskArity(invariants.len()))
            }
            Base::SphereS2 if invariants.len() > 3 => {
                return Err(SeifertError::SphereArity(invariants.len()))
            }
            _ => {}
        }
        Ok(SfsDescriptor {
            base,
            invariants,
            recorded_total: None,
            label: None,
        })
    }

    pub fn from_ext(base: Base, invariants: &[ExtRational]) -> Result<Self, SeifertError> {
        let finite = invariants
            .iter()
            .map(|r| r.as_finite().cloned().ok_or(SeifertError::InfiniteInvariant))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(base, finite)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn invariants(&self) -> &[BigRational] {
        &self.invariants
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    /// Sum of the invariants as originally given (survives normalization).
    pub fn total(&self) -> BigRational {
        match &self.recorded_total {
            Some(t) => t.clone(),
            None => self
                .invariants
                .iter()
                .fold(BigRational::zero(), |acc, r| acc + r),
        }
    }
}

impl fmt::Display for SfsDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.invariants.iter().map(format_ratio).collect();
        write!(f, "{}({})", self.base, items.join(", "))
    }
}

/// Reduces every invariant mod 1 and sorts.
///
/// Over `S²` the sum of the original invariants is recorded alongside, and
/// residues equal to 0 (regular fibers) are dropped.
pub fn sfs_normalize(d: &SfsDescriptor) -> SfsDescriptor {
    let mut residues: Vec<BigRational> = d.invariants.iter().map(frac_part).collect();
    let recorded_total = match d.base {
        Base::DiskD2 => None,
        Base::SphereS2 => {
            residues.retain(|r| !r.is_zero());
            Some(d.total())
        }
    };
    residues.sort();
    SfsDescriptor {
        base: d.base,
        invariants: residues,
        recorded_total,
        label: d.label.clone(),
    }
}

/// Whether an orientation-preserving, fiber-preserving homeomorphism exists.
///
/// Bounded case: the multisets of invariants mod 1 agree. Closed case:
/// additionally the invariant sums agree.
pub fn sfs_homeomorphic_op(d1: &SfsDescriptor, d2: &SfsDescriptor) -> Result<bool, SeifertError> {
    if d1.base != d2.base {
        return Err(SeifertError::BaseMismatch(d1.base, d2.base));
    }
    let (n1, n2) = (sfs_normalize(d1), sfs_normalize(d2));
    let same_residues = n1.invariants == n2.invariants;
    Ok(match d1.base {
        Base::DiskD2 => same_residues,
        Base::SphereS2 => same_residues && n1.total() == n2.total(),
    })
}

/// The same space with the opposite orientation: every invariant negated.
pub fn orientation_reversed(d: &SfsDescriptor) -> SfsDescriptor {
    SfsDescriptor {
        base: d.base,
        invariants: d.invariants.iter().map(|r| -r).collect(),
        recorded_total: d.recorded_total.as_ref().map(|t| -t),
        label: d.label.clone(),
    }
}

pub fn index_set_of(d: &SfsDescriptor) -> Result<IndexSet, SeifertError> {
    if d.base != Base::DiskD2 {
        return Err(SeifertError::NotOverDisk);
    }
    let indices: Vec<BigUint> = d.invariants.iter().map(index_of).collect();
    if let Some(bad) = indices.iter().find(|i| **i < BigUint::from(2u32)) {
        return Err(SeifertError::NotSeifertHalf(bad.clone()));
    }
    IndexSet::new(indices)
}

/// `beta / alpha` from machine integers.
pub fn ratio(beta: i64, alpha: i64) -> BigRational {
    BigRational::new(BigInt::from(beta), BigInt::from(alpha))
}
