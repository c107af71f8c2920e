//! The two families of Seifert fibered surgeries.
//!
//! * Twisted torus knots `K(p, q, p+q, n)` with the integral slope
//!   `pq + n(p+q)²`.
//! * Knots `k(A, B, C)` built from a tangle triple, with the slopes
//!   `γ0`, `γ1` coming from the fillings `R(0)`, `R(1)`.
//!
//! For each surgery we compute the exceptional fibers of the result, the
//! index sets of the two known primitive/Seifert positions and, where the
//! Seifert invariants are known in closed form, the Seifert halves
//! themselves.

use std::fmt;

use num::bigint::{BigInt, BigUint};
use num::rational::BigRational;
use num::{Integer, Signed};
use thiserror::Error;

use crate::distinctness::Verdict;
use crate::seifert::{index_set_of, Base, IndexSet, SeifertError, SfsDescriptor};
use crate::tangle::{make_tangle_triple, FamilyCase, TangleTriple};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid twisted torus knot parameters: {0}")]
    InvalidParams(String),
    #[error("Seifert half degenerates; positions need |n| ≥ 2 (n = 0, ±1 are excluded)")]
    DegenerateTtkHalf,
    #[error("theorem hypotheses fail: not a D²(p,q), p,q ≥ 2 Seifert half ({0} fiber has index {1})")]
    DegenerateEmHalf(FiberSlot, BigUint),
    #[error("braid index formula out of stated range (needs l > 0 and m ≠ 0)")]
    BraidIndexOutOfRange,
    #[error(transparent)]
    Seifert(#[from] SeifertError),
}

/// `K(p, q, p+q, n)`: the torus knot `T(p, q)` twisted `n` times along an
/// unknot linking it `p + q` times.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwistedTorusKnotParams {
    p: i64,
    q: i64,
    n: i64,
}

impl TwistedTorusKnotParams {
    /// Requires `gcd(p, q) = 1`, `|p|, |q| ≥ 2` and `|p + q| > 1`.
    pub fn new(p: i64, q: i64, n: i64) -> Result<Self, FamilyError> {
        let (p128, q128) = (p as i128, q as i128);
        if p128.gcd(&q128) != 1 {
            return Err(FamilyError::InvalidParams(format!(
                "gcd(p,q) ≠ 1 (gcd({p}, {q}) = {})",
                p128.gcd(&q128)
            )));
        }
        if p128.abs() < 2 {
            return Err(FamilyError::InvalidParams(format!("|p| ≥ 2 fails (p = {p})")));
        }
        if q128.abs() < 2 {
            return Err(FamilyError::InvalidParams(format!("|q| ≥ 2 fails (q = {q})")));
        }
        if (p128 + q128).abs() <= 1 {
            return Err(FamilyError::InvalidParams(format!(
                "|p+q| > 1 fails (p+q = {})",
                p128 + q128
            )));
        }
        Ok(TwistedTorusKnotParams { p, q, n })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    /// Linking number of the torus knot with the twisting circle.
    pub fn linking_number(&self) -> BigInt {
        BigInt::from(self.p) + self.q
    }
}

impl fmt::Display for TwistedTorusKnotParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K({}, {}, {}, {})", self.p, self.q, self.linking_number(), self.n)
    }
}

/// Which `R(s)` closes the tangle: `s = 0` gives `γ0`, `s = 1` gives `γ1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SlopeIndex {
    Gamma0,
    Gamma1,
}

impl SlopeIndex {
    pub fn from_s(s: u8) -> Option<Self> {
        match s {
            0 => Some(SlopeIndex::Gamma0),
            1 => Some(SlopeIndex::Gamma1),
            _ => None,
        }
    }

    pub fn s(&self) -> u8 {
        match self {
            SlopeIndex::Gamma0 => 0,
            SlopeIndex::Gamma1 => 1,
        }
    }
}

/// `k(l, m, n, 0)` (`Case1`) or `k(l, m, 0, p)` (`Case2`) together with the
/// slope `γs`. Every integer choice is accepted; degenerate members are
/// reported downstream, not rejected here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EmKnotParams {
    pub case: FamilyCase,
    pub l: i64,
    pub m: i64,
    /// `n` for `Case1`, `p` for `Case2`.
    pub n_or_p: i64,
    pub slope: SlopeIndex,
}

impl EmKnotParams {
    pub fn case1(l: i64, m: i64, n: i64, slope: SlopeIndex) -> Self {
        EmKnotParams {
            case: FamilyCase::Case1,
            l,
            m,
            n_or_p: n,
            slope,
        }
    }

    pub fn case2(l: i64, m: i64, p: i64, slope: SlopeIndex) -> Self {
        EmKnotParams {
            case: FamilyCase::Case2,
            l,
            m,
            n_or_p: p,
            slope,
        }
    }

    pub fn tangle_triple(&self) -> TangleTriple {
        make_tangle_triple(self.case, self.l, self.m, self.n_or_p)
    }

    /// `k(2, 4, n, 0)` at `γ1`, the one member whose Seifert halves are
    /// known invariant by invariant.
    pub fn has_known_seifert_halves(&self) -> bool {
        self.case == FamilyCase::Case1 && self.l == 2 && self.m == 4 && self.slope == SlopeIndex::Gamma1
    }
}

impl fmt::Display for EmKnotParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.case {
            FamilyCase::Case1 => write!(f, "k({}, {}, {}, 0)", self.l, self.m, self.n_or_p)?,
            FamilyCase::Case2 => write!(f, "k({}, {}, 0, {})", self.l, self.m, self.n_or_p)?,
        }
        write!(f, " at γ{}", self.slope.s())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SlopeDescriptor {
    Integer(BigInt),
    Symbolic(SlopeIndex),
}

impl fmt::Display for SlopeDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SlopeDescriptor::Integer(v) => write!(f, "{v}"),
            SlopeDescriptor::Symbolic(s) => write!(f, "gamma{}", s.s()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BergeType {
    VII,
    VIII,
    Unspecified,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ResultClass {
    /// Indices of the exceptional fibers, as a sorted multiset.
    SeifertOverS2(Vec<BigUint>),
    LensSpace(BergeType),
    ConnectedSumOfTwoLensSpaces,
    Degenerate(String),
}

impl fmt::Display for ResultClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ResultClass::SeifertOverS2(idx) => {
                let items: Vec<String> = idx.iter().map(|i| i.to_string()).collect();
                write!(f, "Seifert fibered over S² with exceptional indices ({})", items.join(", "))
            }
            ResultClass::LensSpace(BergeType::VII) => f.write_str("lens space (Berge type VII)"),
            ResultClass::LensSpace(BergeType::VIII) => f.write_str("lens space (Berge type VIII)"),
            ResultClass::LensSpace(BergeType::Unspecified) => f.write_str("lens space"),
            ResultClass::ConnectedSumOfTwoLensSpaces => {
                f.write_str("connected sum of two lens spaces")
            }
            ResultClass::Degenerate(reason) => write!(f, "degenerate: {reason}"),
        }
    }
}

/// One primitive/Seifert position at the level of computable data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsPosition {
    surface_label: String,
    slope: SlopeDescriptor,
    index_set: IndexSet,
    seifert_half: Option<SfsDescriptor>,
}

impl PsPosition {
    pub fn new(surface_label: impl Into<String>, slope: SlopeDescriptor, index_set: IndexSet) -> Self {
        PsPosition {
            surface_label: surface_label.into(),
            slope,
            index_set,
            seifert_half: None,
        }
    }

    /// A position whose index set is read off its Seifert half.
    pub fn with_seifert_half(
        surface_label: impl Into<String>,
        slope: SlopeDescriptor,
        seifert_half: SfsDescriptor,
    ) -> Result<Self, SeifertError> {
        let index_set = index_set_of(&seifert_half)?;
        Ok(PsPosition {
            surface_label: surface_label.into(),
            slope,
            index_set,
            seifert_half: Some(seifert_half),
        })
    }

    pub fn surface_label(&self) -> &str {
        &self.surface_label
    }

    pub fn slope(&self) -> &SlopeDescriptor {
        &self.slope
    }

    pub fn index_set(&self) -> &IndexSet {
        &self.index_set
    }

    pub fn seifert_half(&self) -> Option<&SfsDescriptor> {
        self.seifert_half.as_ref()
    }
}

fn abs_index(v: BigInt) -> BigUint {
    v.magnitude().clone()
}

pub fn ttk_surgery_slope(params: &TwistedTorusKnotParams) -> SlopeDescriptor {
    let p = BigInt::from(params.p);
    let q = BigInt::from(params.q);
    let n = BigInt::from(params.n);
    let lk = &p + &q;
    SlopeDescriptor::Integer(&p * &q + n * &lk * &lk)
}

pub fn ttk_result_classification(params: &TwistedTorusKnotParams) -> ResultClass {
    match params.n {
        0 => ResultClass::ConnectedSumOfTwoLensSpaces,
        1 => ResultClass::LensSpace(BergeType::VII),
        -1 => ResultClass::LensSpace(BergeType::VIII),
        n => {
            let mut idx: Vec<BigUint> = [params.p, params.q, n]
                .iter()
                .map(|&v| abs_index(v.into()))
                .collect();
            idx.sort();
            ResultClass::SeifertOverS2(idx)
        }
    }
}

/// The positions on `F` (index set `{|q|, |n|}`) and `F'` (`{|p|, |n|}`).
pub fn ttk_ps_positions(params: &TwistedTorusKnotParams) -> Result<Vec<PsPosition>, FamilyError> {
    if (params.n as i128).abs() <= 1 {
        return Err(FamilyError::DegenerateTtkHalf);
    }
    let slope = ttk_surgery_slope(params);
    let idx = |v: i64| abs_index(v.into());
    let on_f = IndexSet::new([idx(params.q), idx(params.n)])?;
    let on_f_prime = IndexSet::new([idx(params.p), idx(params.n)])?;
    Ok(vec![
        PsPosition::new("F", slope.clone(), on_f),
        PsPosition::new("F'", slope, on_f_prime),
    ])
}

/// Sufficient condition only: `false` means "not certified".
pub fn ttk_hyperbolic_certified(params: &TwistedTorusKnotParams) -> bool {
    (params.n as i128).abs() > 3
}

/// Which branch ball an exceptional fiber comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FiberSlot {
    A,
    B,
    C,
}

impl fmt::Display for FiberSlot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FiberSlot::A => "A",
            FiberSlot::B => "B",
            FiberSlot::C => "C",
        })
    }
}

/// Exceptional-fiber indices of `k(A, B, C)(γs)`, kept by branch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberIndices {
    pub a: BigUint,
    pub b: BigUint,
    pub c: BigUint,
}

impl FiberIndices {
    pub fn get(&self, slot: FiberSlot) -> &BigUint {
        match slot {
            FiberSlot::A => &self.a,
            FiberSlot::B => &self.b,
            FiberSlot::C => &self.c,
        }
    }

    /// Ascending multiset.
    pub fn sorted(&self) -> Vec<BigUint> {
        let mut v = vec![self.a.clone(), self.b.clone(), self.c.clone()];
        v.sort();
        v
    }

    fn first_below_two(&self) -> Option<(FiberSlot, &BigUint)> {
        let two = BigUint::from(2u32);
        [FiberSlot::A, FiberSlot::B, FiberSlot::C]
            .into_iter()
            .map(|s| (s, self.get(s)))
            .find(|(_, i)| **i < two)
    }
}

pub fn em_exceptional_indices(params: &EmKnotParams) -> FiberIndices {
    let l = BigInt::from(params.l);
    let m = BigInt::from(params.m);
    let x = BigInt::from(params.n_or_p);
    let one = BigInt::from(1);
    let two = BigInt::from(2);
    let three = BigInt::from(3);
    let (a, b, c) = match (params.case, params.slope) {
        (FamilyCase::Case1, SlopeIndex::Gamma0) => {
            let n = &x;
            (
                &l - &one,
                &l * &m + &m - &one,
                &two * &m * n - &m - n + &one,
            )
        }
        (FamilyCase::Case1, SlopeIndex::Gamma1) => {
            let n = &x;
            (
                &l + &one,
                &l * &m - &m - &one,
                &two * &m * n - &m + n,
            )
        }
        (FamilyCase::Case2, SlopeIndex::Gamma0) => {
            let p = &x;
            (
                &l - &one,
                &two * &l * &m * p - &l * &m - &l * p + &two * &m * p - &m - &three * p + &one,
                &m - &one,
            )
        }
        (FamilyCase::Case2, SlopeIndex::Gamma1) => {
            let p = &x;
            (
                &l + &one,
                &two * &l * &m * p - &l * &m - &l * p - &two * &m * p + &m - p + &one,
                m.clone(),
            )
        }
    };
    FiberIndices {
        a: abs_index(a),
        b: abs_index(b),
        c: abs_index(c),
    }
}

/// `(16n - 7) / (9n - 4)`, the C-fiber invariant of `k(2, 4, n, 0)(γ1)`.
pub fn k24_c_invariant(n: i64) -> BigRational {
    let n = BigInt::from(n);
    BigRational::new(BigInt::from(16) * &n - 7, BigInt::from(9) * &n - 4)
}

/// Seifert halves of the two positions of `k(2, 4, n, 0)(γ1)`: over `S~`
/// the invariants `4/3, (16n-7)/(9n-4)`, over `S~'` the invariants
/// `-1/3, (16n-7)/(9n-4)`.
pub fn k24_seifert_halves(n: i64) -> (SfsDescriptor, SfsDescriptor) {
    let c = k24_c_invariant(n);
    let third = |b: i64| BigRational::new(b.into(), 3.into());
    let s = SfsDescriptor::new(Base::DiskD2, vec![third(4), c.clone()])
        .expect("two invariants")
        .with_label(format!("W[K] for k(2,4,{n},0), γ1, surface S~"));
    let s_prime = SfsDescriptor::new(Base::DiskD2, vec![third(-1), c])
        .expect("two invariants")
        .with_label(format!("W[K] for k(2,4,{n},0), γ1, surface S~'"));
    (s, s_prime)
}

/// Positions on `S~` (fibers of branches B, C) and `S~'` (branches A, C).
pub fn em_ps_positions(params: &EmKnotParams) -> Result<Vec<PsPosition>, FamilyError> {
    let idx = em_exceptional_indices(params);
    if let Some((slot, bad)) = idx.first_below_two() {
        return Err(FamilyError::DegenerateEmHalf(slot, bad.clone()));
    }
    let slope = SlopeDescriptor::Symbolic(params.slope);
    if params.has_known_seifert_halves() {
        let (s, s_prime) = k24_seifert_halves(params.n_or_p);
        return Ok(vec![
            PsPosition::with_seifert_half("S~", slope.clone(), s)?,
            PsPosition::with_seifert_half("S~'", slope, s_prime)?,
        ]);
    }
    Ok(vec![
        PsPosition::new("S~", slope.clone(), IndexSet::new([idx.b.clone(), idx.c.clone()])?),
        PsPosition::new("S~'", slope, IndexSet::new([idx.a, idx.c])?),
    ])
}

/// The A-fiber and B-fiber indices differ.
pub fn em_theorem_hypothesis(params: &EmKnotParams) -> bool {
    let idx = em_exceptional_indices(params);
    idx.a != idx.b
}

pub fn em_braid_index(params: &EmKnotParams) -> Result<BigInt, FamilyError> {
    if params.l <= 0 || params.m == 0 {
        return Err(FamilyError::BraidIndexOutOfRange);
    }
    let l = BigInt::from(params.l);
    let m = BigInt::from(params.m);
    let lm = (&l * &m).abs();
    let one = BigInt::from(1);
    Ok(match (params.case, params.m > 0) {
        (FamilyCase::Case1, true) => 2 * lm - one,
        (FamilyCase::Case1, false) => 2 * lm + one,
        (FamilyCase::Case2, true) => 2 * lm - l - one,
        (FamilyCase::Case2, false) => 2 * lm + l + one,
    })
}

/// Classification of `k(A, B, C)(γs)` from its fiber indices. Three
/// indices ≥ 2 give a Seifert space over `S²` with three exceptional fibers;
/// anything else is reported as degenerate.
pub fn em_result_classification(params: &EmKnotParams) -> ResultClass {
    let idx = em_exceptional_indices(params);
    let sorted = idx.sorted();
    let two = BigUint::from(2u32);
    if sorted.iter().all(|i| *i >= two) {
        return ResultClass::SeifertOverS2(sorted);
    }
    let reason = match idx.first_below_two() {
        Some((slot, i)) if *i == BigUint::from(0u32) => {
            format!("{slot}-fiber has index 0; no Seifert fibration with these fibers")
        }
        Some((slot, _)) => {
            let exceptional = sorted.iter().filter(|i| **i >= two).count();
            format!("{slot}-fiber has index 1; only {exceptional} exceptional fibers")
        }
        None => unreachable!("some index is below 2"),
    };
    ResultClass::Degenerate(reason)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Ttk,
    Em,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Ttk => "ttk",
            Family::Em => "emk",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyParams {
    Ttk(TwistedTorusKnotParams),
    Em(EmKnotParams),
}

impl FamilyParams {
    pub fn family(&self) -> Family {
        match self {
            FamilyParams::Ttk(_) => Family::Ttk,
            FamilyParams::Em(_) => Family::Em,
        }
    }
}

/// Everything computed about one surgery. `verdict` is filled in by
/// [`crate::distinctness::decide_surgery`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurgeryRecord {
    pub params: FamilyParams,
    pub slope: SlopeDescriptor,
    pub classification: ResultClass,
    pub positions: Vec<PsPosition>,
    /// Why `positions` is empty, when it is.
    pub position_error: Option<FamilyError>,
    pub verdict: Option<Verdict>,
    pub hyperbolic_certified: Option<bool>,
    pub tangle_triple: Option<TangleTriple>,
    pub exceptional_indices: Option<FiberIndices>,
    pub hypothesis_holds: Option<bool>,
    pub braid_index: Option<BigInt>,
}

impl SurgeryRecord {
    pub fn family(&self) -> Family {
        self.params.family()
    }

    pub fn for_ttk(params: TwistedTorusKnotParams) -> Self {
        let (positions, position_error) = match ttk_ps_positions(&params) {
            Ok(p) => (p, None),
            Err(e) => (Vec::new(), Some(e)),
        };
        SurgeryRecord {
            params: FamilyParams::Ttk(params),
            slope: ttk_surgery_slope(&params),
            classification: ttk_result_classification(&params),
            positions,
            position_error,
            verdict: None,
            hyperbolic_certified: Some(ttk_hyperbolic_certified(&params)),
            tangle_triple: None,
            exceptional_indices: None,
            hypothesis_holds: None,
            braid_index: None,
        }
    }

    pub fn for_em(params: EmKnotParams) -> Self {
        let (positions, position_error) = match em_ps_positions(&params) {
            Ok(p) => (p, None),
            Err(e) => (Vec::new(), Some(e)),
        };
        SurgeryRecord {
            params: FamilyParams::Em(params),
            slope: SlopeDescriptor::Symbolic(params.slope),
            classification: em_result_classification(&params),
            positions,
            position_error,
            verdict: None,
            hyperbolic_certified: None,
            tangle_triple: Some(params.tangle_triple()),
            exceptional_indices: Some(em_exceptional_indices(&params)),
            hypothesis_holds: Some(em_theorem_hypothesis(&params)),
            braid_index: em_braid_index(&params).ok(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::ExtRational;
    use crate::seifert::{index_of_invariant, ratio};
    use crate::tangle::tangle_fraction;

    fn ttk(p: i64, q: i64, n: i64) -> TwistedTorusKnotParams {
        TwistedTorusKnotParams::new(p, q, n).unwrap()
    }

    fn uints(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&i| BigUint::from(i)).collect()
    }

    fn set(v: &[u64]) -> IndexSet {
        IndexSet::from_u64s(v).unwrap()
    }

    fn int(v: i64) -> SlopeDescriptor {
        SlopeDescriptor::Integer(v.into())
    }

    #[test]
    fn ttk_validation() {
        assert!(matches!(
            TwistedTorusKnotParams::new(2, 4, 5),
            Err(FamilyError::InvalidParams(msg)) if msg.contains("gcd")
        ));
        assert!(TwistedTorusKnotParams::new(1, 3, 5).is_err());
        assert!(TwistedTorusKnotParams::new(3, -1, 5).is_err());
        assert!(matches!(
            TwistedTorusKnotParams::new(2, -3, 5),
            Err(FamilyError::InvalidParams(msg)) if msg.contains("p+q")
        ));
        assert!(TwistedTorusKnotParams::new(-2, 3, 5).is_err());
        assert!(TwistedTorusKnotParams::new(-2, -3, 5).is_ok());
        assert_eq!(ttk(2, 3, 0).linking_number(), BigInt::from(5));
    }

    #[test]
    fn ttk_slopes() {
        assert_eq!(ttk_surgery_slope(&ttk(2, 3, 0)), int(6));
        assert_eq!(ttk_surgery_slope(&ttk(2, 3, 2)), int(56));
        assert_eq!(ttk_surgery_slope(&ttk(3, 5, -2)), int(-113));
    }

    #[test]
    fn ttk_classification() {
        assert_eq!(
            ttk_result_classification(&ttk(2, 3, 0)),
            ResultClass::ConnectedSumOfTwoLensSpaces
        );
        assert_eq!(
            ttk_result_classification(&ttk(2, 3, 1)),
            ResultClass::LensSpace(BergeType::VII)
        );
        assert_eq!(
            ttk_result_classification(&ttk(2, 3, -1)),
            ResultClass::LensSpace(BergeType::VIII)
        );
        assert_eq!(
            ttk_result_classification(&ttk(2, 3, 5)),
            ResultClass::SeifertOverS2(uints(&[2, 3, 5]))
        );
    }

    #[test]
    fn ttk_positions() {
        let pos = ttk_ps_positions(&ttk(2, 3, 5)).unwrap();
        assert_eq!(pos.len(), 2);
        assert_eq!(pos[0].index_set(), &set(&[3, 5]));
        assert_eq!(pos[1].index_set(), &set(&[2, 5]));
        assert_eq!(pos[0].slope(), &int(131));
        assert_eq!(pos[1].slope(), &int(131));
        assert_eq!(pos[0].surface_label(), "F");
        assert!(pos[0].seifert_half().is_none());

        let pos = ttk_ps_positions(&ttk(2, 3, 2)).unwrap();
        assert_eq!(pos[0].index_set(), &set(&[2, 3]));
        assert_eq!(pos[1].index_set(), &set(&[2]));
        assert_eq!(pos[0].slope(), &int(56));

        let pos = ttk_ps_positions(&ttk(3, 5, -4)).unwrap();
        assert_eq!(pos[0].index_set(), &set(&[4, 5]));
        assert_eq!(pos[1].index_set(), &set(&[3, 4]));
        assert_eq!(pos[0].slope(), &int(-241));

        for n in [-1, 0, 1] {
            assert_eq!(
                ttk_ps_positions(&ttk(2, 3, n)),
                Err(FamilyError::DegenerateTtkHalf)
            );
        }
    }

    #[test]
    fn ttk_positions_always_differ() {
        for p in -12i64..=12 {
            for q in -12i64..=12 {
                let Ok(base) = TwistedTorusKnotParams::new(p, q, 0) else {
                    continue;
                };
                for n in (-12i64..=12).filter(|n| n.abs() >= 2) {
                    let params = ttk(base.p(), base.q(), n);
                    let pos = ttk_ps_positions(&params).unwrap();
                    assert_ne!(pos[0].index_set(), pos[1].index_set(), "{params}");
                }
            }
        }
    }

    #[test]
    fn hyperbolicity_certificate() {
        assert!(ttk_hyperbolic_certified(&ttk(2, 3, 5)));
        assert!(!ttk_hyperbolic_certified(&ttk(2, 3, 3)));
        assert!(ttk_hyperbolic_certified(&ttk(2, 3, -4)));
    }

    #[test]
    fn em_indices_examples() {
        let i = em_exceptional_indices(&EmKnotParams::case1(2, 4, 1, SlopeIndex::Gamma1));
        assert_eq!(i.sorted(), uints(&[3, 3, 5]));
        let i = em_exceptional_indices(&EmKnotParams::case1(3, 2, 2, SlopeIndex::Gamma0));
        assert_eq!((i.a, i.b, i.c), (2u32.into(), 7u32.into(), 5u32.into()));
        let i = em_exceptional_indices(&EmKnotParams::case2(2, 4, 1, SlopeIndex::Gamma0));
        assert_eq!((i.a, i.b, i.c), (1u32.into(), 8u32.into(), 3u32.into()));
        let i = em_exceptional_indices(&EmKnotParams::case2(3, 2, 2, SlopeIndex::Gamma1));
        assert_eq!((i.a, i.b, i.c), (4u32.into(), 5u32.into(), 2u32.into()));
    }

    #[test]
    fn em_positions_k24() {
        let pos = em_ps_positions(&EmKnotParams::case1(2, 4, 2, SlopeIndex::Gamma1)).unwrap();
        assert_eq!(pos[0].surface_label(), "S~");
        assert_eq!(pos[0].index_set(), &set(&[3, 14]));
        assert_eq!(pos[1].index_set(), &set(&[3, 14]));
        assert_eq!(
            pos[0].seifert_half().unwrap().invariants(),
            &[ratio(4, 3), ratio(25, 14)]
        );
        assert_eq!(
            pos[1].seifert_half().unwrap().invariants(),
            &[ratio(-1, 3), ratio(25, 14)]
        );
        assert_eq!(pos[0].slope(), &SlopeDescriptor::Symbolic(SlopeIndex::Gamma1));
    }

    #[test]
    fn em_positions_index_only() {
        let pos = em_ps_positions(&EmKnotParams::case1(3, 2, 2, SlopeIndex::Gamma0)).unwrap();
        assert_eq!(pos[0].index_set(), &set(&[5, 7]));
        assert_eq!(pos[1].index_set(), &set(&[2, 5]));
        assert!(pos[0].seifert_half().is_none());

        let pos = em_ps_positions(&EmKnotParams::case2(3, 2, 2, SlopeIndex::Gamma1)).unwrap();
        assert_eq!(pos[0].index_set(), &set(&[2, 5]));
        assert_eq!(pos[1].index_set(), &set(&[2, 4]));
    }

    #[test]
    fn em_positions_degenerate() {
        let err = em_ps_positions(&EmKnotParams::case2(2, 4, 1, SlopeIndex::Gamma0)).unwrap_err();
        assert_eq!(err, FamilyError::DegenerateEmHalf(FiberSlot::A, 1u32.into()));
        assert!(err.to_string().contains("theorem hypotheses fail"));
    }

    #[test]
    fn hypothesis_examples() {
        assert!(em_theorem_hypothesis(&EmKnotParams::case1(3, 2, 0, SlopeIndex::Gamma0)));
        assert!(!em_theorem_hypothesis(&EmKnotParams::case1(2, 4, 0, SlopeIndex::Gamma1)));
        assert!(em_theorem_hypothesis(&EmKnotParams::case2(2, 4, 1, SlopeIndex::Gamma1)));
    }

    #[test]
    fn braid_index_examples() {
        let b = |p: EmKnotParams| em_braid_index(&p).unwrap();
        assert_eq!(b(EmKnotParams::case1(2, 4, 0, SlopeIndex::Gamma0)), BigInt::from(15));
        assert_eq!(b(EmKnotParams::case1(2, -3, 0, SlopeIndex::Gamma0)), BigInt::from(13));
        assert_eq!(b(EmKnotParams::case2(3, 2, 0, SlopeIndex::Gamma0)), BigInt::from(8));
        assert_eq!(b(EmKnotParams::case2(3, -2, 0, SlopeIndex::Gamma0)), BigInt::from(16));
        assert_eq!(
            em_braid_index(&EmKnotParams::case1(0, 4, 0, SlopeIndex::Gamma0)),
            Err(FamilyError::BraidIndexOutOfRange)
        );
        assert_eq!(
            em_braid_index(&EmKnotParams::case1(2, 0, 0, SlopeIndex::Gamma0)),
            Err(FamilyError::BraidIndexOutOfRange)
        );
    }

    #[test]
    fn k24_family_matches_printed_orbifold() {
        for n in -200i64..=200 {
            let idx = em_exceptional_indices(&EmKnotParams::case1(2, 4, n, SlopeIndex::Gamma1));
            let expected = vec![
                index_of_invariant(&ExtRational::new(-1, 3)).unwrap(),
                index_of_invariant(&ExtRational::new(4, 3)).unwrap(),
                index_of_invariant(&k24_c_invariant(n).into()).unwrap(),
            ];
            let mut expected = expected;
            expected.sort();
            assert_eq!(idx.sorted(), expected, "n={n}");
            assert_eq!(idx.c, BigUint::from((9 * n - 4).unsigned_abs()));
        }
    }

    #[test]
    fn k24_c_invariant_is_reduced() {
        for n in -10_000i64..=10_000 {
            let r = k24_c_invariant(n);
            assert_eq!(r.numer().magnitude(), &BigUint::from((16 * n - 7).unsigned_abs()));
            assert_eq!(r.denom().magnitude(), &BigUint::from((9 * n - 4).unsigned_abs()));
        }
    }

    #[test]
    fn case1_gamma0_c_index_from_tangle() {
        for m in -10i64..=10 {
            for n in -10i64..=10 {
                let params = EmKnotParams::case1(2, m, n, SlopeIndex::Gamma0);
                let c = tangle_fraction(params.tangle_triple().c());
                assert_eq!(
                    c.numer().magnitude(),
                    &em_exceptional_indices(&params).c,
                    "m={m} n={n}"
                );
            }
        }
    }

    #[test]
    fn seifert_half_matches_index_set() {
        for n in -50i64..=50 {
            let pos = em_ps_positions(&EmKnotParams::case1(2, 4, n, SlopeIndex::Gamma1)).unwrap();
            for p in &pos {
                assert_eq!(&index_set_of(p.seifert_half().unwrap()).unwrap(), p.index_set());
            }
        }
    }

    #[test]
    fn em_classification() {
        assert_eq!(
            em_result_classification(&EmKnotParams::case1(3, 2, 2, SlopeIndex::Gamma0)),
            ResultClass::SeifertOverS2(uints(&[2, 5, 7]))
        );
        assert!(matches!(
            em_result_classification(&EmKnotParams::case2(2, 4, 1, SlopeIndex::Gamma0)),
            ResultClass::Degenerate(r) if r.contains("A-fiber has index 1")
        ));
        assert!(matches!(
            em_result_classification(&EmKnotParams::case1(1, 2, 2, SlopeIndex::Gamma0)),
            ResultClass::Degenerate(r) if r.contains("index 0")
        ));
    }

    #[test]
    fn records() {
        let r = SurgeryRecord::for_ttk(ttk(2, 3, 0));
        assert!(r.positions.is_empty());
        assert_eq!(r.position_error, Some(FamilyError::DegenerateTtkHalf));
        assert_eq!(r.hyperbolic_certified, Some(false));

        let r = SurgeryRecord::for_em(EmKnotParams::case1(2, 4, 2, SlopeIndex::Gamma1));
        assert_eq!(r.positions.len(), 2);
        assert_eq!(r.hypothesis_holds, Some(false));
        assert_eq!(r.braid_index, Some(BigInt::from(15)));
        assert_eq!(r.family(), Family::Em);
    }
}
