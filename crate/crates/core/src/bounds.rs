//! Closed-form lower and upper bounds on the pebbling number, and the exact
//! comparison predicates between them.
//!
//! All arithmetic is integral (`u128`, checked) or exact rational; nothing is
//! evaluated in floating point. The singleton graph is reported with `d = 0`
//! and every bound equal to 1.

use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundError {
    #[error("invalid invariants n = {n}, d = {d}: need 1 <= d <= n - 1 (or n = 1, d = 0)")]
    InvalidInvariants { n: u32, d: u32 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("bound value overflows 128 bits")]
    Overflow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundName {
    /// `max{n, 2^d}`.
    TrivialLower,
    /// `(n - 1)(2^d - 1) + 1`.
    TrivialUpper,
    /// `(n - d)(2^d - 1) + 1`.
    PathCover,
    /// `(n + ⌊(n-1)/d⌋ - 1) 2^(d-1) - n + 2`.
    DisjointPaths,
    /// `2^(d+1) γ + n - 4γ + 1`, γ the size of an efficient dominating set.
    EfficientDomination,
    /// `2^(d+1) γ + n - 3γ + 1`, γ the domination number.
    Domination,
    /// `n + 1` when `d = 2`.
    DiameterTwo,
}

impl BoundName {
    /// Upper bounds in best-bound tie-break order.
    pub const UPPER_PRIORITY: [BoundName; 6] = [
        BoundName::DiameterTwo,
        BoundName::EfficientDomination,
        BoundName::Domination,
        BoundName::DisjointPaths,
        BoundName::PathCover,
        BoundName::TrivialUpper,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            BoundName::TrivialLower => "trivial_lower",
            BoundName::TrivialUpper => "trivial_upper",
            BoundName::PathCover => "path_cover",
            BoundName::DisjointPaths => "disjoint_paths",
            BoundName::EfficientDomination => "efficient_domination",
            BoundName::Domination => "domination",
            BoundName::DiameterTwo => "diameter_two",
        }
    }
}

impl fmt::Display for BoundName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The invariants a bound consumed.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundInputs {
    pub n: u32,
    pub d: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma_eff: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
}

impl BoundInputs {
    fn nd(n: u32, d: u32) -> Self {
        BoundInputs {
            n,
            d,
            ..Default::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundValue {
    pub name: BoundName,
    /// Present iff `applicable`.
    pub value: Option<u128>,
    pub applicable: bool,
    pub inputs: BoundInputs,
}

impl BoundValue {
    fn some(name: BoundName, value: u128, inputs: BoundInputs) -> Self {
        BoundValue {
            name,
            value: Some(value),
            applicable: true,
            inputs,
        }
    }

    fn inapplicable(name: BoundName, inputs: BoundInputs) -> Self {
        BoundValue {
            name,
            value: None,
            applicable: false,
            inputs,
        }
    }

    pub fn is_upper(&self) -> bool {
        self.name != BoundName::TrivialLower
    }
}

fn validate(n: u32, d: u32) -> Result<(), BoundError> {
    let ok = (n == 1 && d == 0) || (n >= 2 && d >= 1 && d < n);
    if ok {
        Ok(())
    } else {
        Err(BoundError::InvalidInvariants { n, d })
    }
}

fn pow2(e: u32) -> Result<u128, BoundError> {
    1u128.checked_shl(e).filter(|_| e < 127).ok_or(BoundError::Overflow)
}

/// Checked evaluation helper: `a * b`.
fn mul(a: u128, b: u128) -> Result<u128, BoundError> {
    a.checked_mul(b).ok_or(BoundError::Overflow)
}

fn add(a: u128, b: u128) -> Result<u128, BoundError> {
    a.checked_add(b).ok_or(BoundError::Overflow)
}

/// `max{n, 2^d} <= f(G) <= (n - 1)(2^d - 1) + 1`.
pub fn trivial_bounds(n: u32, d: u32) -> Result<(BoundValue, BoundValue), BoundError> {
    validate(n, d)?;
    let inputs = BoundInputs::nd(n, d);
    let p = pow2(d)?;
    let lower = (n as u128).max(p);
    let upper = add(mul(n as u128 - 1, p - 1)?, 1)?;
    Ok((
        BoundValue::some(BoundName::TrivialLower, lower, inputs),
        BoundValue::some(BoundName::TrivialUpper, upper, inputs),
    ))
}

/// `(n - d)(2^d - 1) + 1`, from covering V by paths ending at the root.
pub fn path_cover_bound(n: u32, d: u32) -> Result<BoundValue, BoundError> {
    validate(n, d)?;
    let v = add(mul((n - d) as u128, pow2(d)? - 1)?, 1)?;
    Ok(BoundValue::some(BoundName::PathCover, v, BoundInputs::nd(n, d)))
}

/// `φ(j) = (n - j)(2^j - 1)`, for `1 <= j <= n - 1`.
pub fn phi(n: u32, j: u32) -> u128 {
    (n - j) as u128 * ((1u128 << j) - 1)
}

/// Exhaustively checks `φ(j + 1) >= φ(j)` for `1 <= j <= n - 2`.
pub fn phi_monotone_check(n: u32) -> bool {
    assert!((2..=120).contains(&n), "n out of range");
    (1..n.saturating_sub(1)).all(|j| phi(n, j + 1) >= phi(n, j))
}

/// `(n + ⌊(n-1)/d⌋ - 1) 2^(d-1) - n + 2`.
pub fn disjoint_paths_bound(n: u32, d: u32) -> Result<BoundValue, BoundError> {
    validate(n, d)?;
    let inputs = BoundInputs::nd(n, d);
    if n == 1 {
        return Ok(BoundValue::some(BoundName::DisjointPaths, 1, inputs));
    }
    let c = ((n - 1) / d) as u128;
    let v = mul(n as u128 + c - 1, pow2(d - 1)?)? + 2 - n as u128;
    Ok(BoundValue::some(BoundName::DisjointPaths, v, inputs))
}

/// Per-root form of the disjoint-paths bound:
/// `(n - 1)(2^(e-1) - 1) + c 2^(e-1) + 1` with `c = ⌊(n-1)/e⌋`.
pub fn disjoint_paths_rooted_bound(n: u32, ecc: u32) -> Result<u128, BoundError> {
    if ecc == 0 {
        return Ok(1);
    }
    let half = pow2(ecc - 1)?;
    let c = ((n - 1) / ecc) as u128;
    add(add(mul(n as u128 - 1, half - 1)?, mul(c, half)?)?, 1)
}

/// `2^(d+1) γ + n - 4γ + 1`; inapplicable without an efficient dominating set.
pub fn efficient_domination_bound(n: u32, d: u32, gamma_eff: Option<u32>) -> Result<BoundValue, BoundError> {
    validate(n, d)?;
    let inputs = BoundInputs {
        gamma_eff,
        ..BoundInputs::nd(n, d)
    };
    let Some(g) = gamma_eff else {
        return Ok(BoundValue::inapplicable(BoundName::EfficientDomination, inputs));
    };
    check_gamma(n, g)?;
    if n == 1 {
        return Ok(BoundValue::some(BoundName::EfficientDomination, 1, inputs));
    }
    let g = g as u128;
    // 2^(d+1) >= 4, so the subtraction cannot go negative.
    let v = add(mul(pow2(d + 1)? - 4, g)?, n as u128 + 1)?;
    Ok(BoundValue::some(BoundName::EfficientDomination, v, inputs))
}

/// `2^(d+1) γ + n - 3γ + 1`, γ the domination number.
pub fn domination_bound(n: u32, d: u32, gamma: u32) -> Result<BoundValue, BoundError> {
    validate(n, d)?;
    check_gamma(n, gamma)?;
    let inputs = BoundInputs {
        gamma: Some(gamma),
        ..BoundInputs::nd(n, d)
    };
    if n == 1 {
        return Ok(BoundValue::some(BoundName::Domination, 1, inputs));
    }
    let v = add(mul(pow2(d + 1)? - 3, gamma as u128)?, n as u128 + 1)?;
    Ok(BoundValue::some(BoundName::Domination, v, inputs))
}

fn check_gamma(n: u32, gamma: u32) -> Result<(), BoundError> {
    if gamma == 0 || gamma > n {
        return Err(BoundError::InvalidParameter(format!(
            "dominating set size {gamma} outside 1..={n}"
        )));
    }
    Ok(())
}

/// k-pebbling number of the star on `m` vertices, `4k + m - 3`.
///
/// Requires `m >= 3`: for `m = 2` the star is the single edge, whose
/// k-pebbling number is `2k`, not `4k - 1`. See [`star_k_pebbling_formula`].
pub fn star_k_pebbling_number(k: u32, m: u32) -> Result<u128, BoundError> {
    if m < 3 {
        return Err(BoundError::InvalidParameter(format!(
            "star k-pebbling formula needs m >= 3 vertices, got {m}"
        )));
    }
    star_k_pebbling_formula(k, m)
}

/// The raw expression `4k + m - 3` for any `m >= 2`, without the domain check.
pub fn star_k_pebbling_formula(k: u32, m: u32) -> Result<u128, BoundError> {
    if k == 0 || m < 2 {
        return Err(BoundError::InvalidParameter(format!(
            "need k >= 1 and m >= 2, got k = {k}, m = {m}"
        )));
    }
    Ok(4 * k as u128 + m as u128 - 3)
}

/// `n + 1`, applicable only for diameter 2.
pub fn diameter_two_bound(n: u32, d: u32) -> BoundValue {
    let inputs = BoundInputs::nd(n, d);
    if d == 2 {
        BoundValue::some(BoundName::DiameterTwo, n as u128 + 1, inputs)
    } else {
        BoundValue::inapplicable(BoundName::DiameterTwo, inputs)
    }
}

/// Every bound for one set of invariants, in a fixed order.
pub fn all_bounds(
    n: u32,
    d: u32,
    gamma: u32,
    gamma_eff: Option<u32>,
) -> Result<Vec<BoundValue>, BoundError> {
    let (lower, upper) = trivial_bounds(n, d)?;
    Ok(vec![
        lower,
        upper,
        path_cover_bound(n, d)?,
        disjoint_paths_bound(n, d)?,
        efficient_domination_bound(n, d, gamma_eff)?,
        domination_bound(n, d, gamma)?,
        diameter_two_bound(n, d),
    ])
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BestBound {
    pub name: BoundName,
    pub value: u128,
}

/// Minimum applicable upper bound, ties broken by [`BoundName::UPPER_PRIORITY`].
pub fn best_bound(bounds: &[BoundValue]) -> Option<BestBound> {
    BoundName::UPPER_PRIORITY
        .iter()
        .filter_map(|&name| {
            bounds
                .iter()
                .find(|b| b.name == name)
                .and_then(|b| b.value)
                .map(|value| BestBound { name, value })
        })
        .enumerate()
        .min_by_key(|(i, b)| (b.value, *i))
        .map(|(_, b)| b)
}

/// Outcome of one comparison predicate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Predicate {
    Holds,
    Fails,
    /// Zero denominator (`d = 1`) or no efficient dominating set.
    Inapplicable,
}

impl Predicate {
    fn from_bool(b: bool) -> Self {
        if b {
            Predicate::Holds
        } else {
            Predicate::Fails
        }
    }

    pub fn holds(self) -> bool {
        self == Predicate::Holds
    }
}

/// Sufficient conditions on γ for a domination bound to be at most another bound.
///
/// Field names read `<dominating bound>_vs_<other bound>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Predicates {
    pub efficient_vs_trivial: Predicate,
    pub domination_vs_trivial: Predicate,
    pub efficient_vs_path_cover: Predicate,
    pub domination_vs_path_cover: Predicate,
    pub efficient_vs_disjoint_paths: Predicate,
    pub domination_vs_disjoint_paths: Predicate,
}

impl Predicates {
    /// `(predicate, dominating bound, other bound)` triples.
    pub fn pairs(&self) -> [(Predicate, BoundName, BoundName); 6] {
        use BoundName::*;
        [
            (self.efficient_vs_trivial, EfficientDomination, TrivialUpper),
            (self.domination_vs_trivial, Domination, TrivialUpper),
            (self.efficient_vs_path_cover, EfficientDomination, PathCover),
            (self.domination_vs_path_cover, Domination, PathCover),
            (self.efficient_vs_disjoint_paths, EfficientDomination, DisjointPaths),
            (self.domination_vs_disjoint_paths, Domination, DisjointPaths),
        ]
    }
}

type Q = Ratio<i128>;

/// `γ <= num / den`, exactly; `None` when `den = 0`.
fn gamma_at_most(gamma: u32, num: i128, den: i128) -> Option<bool> {
    (den != 0).then(|| Q::from_integer(gamma as i128) <= Q::new(num, den))
}

/// Evaluates the six comparison predicates with exact rationals.
///
/// The efficient-set predicates use `gamma_eff` and are inapplicable without
/// one; those three also have denominator `2^(d+1) - 4`, which vanishes at
/// `d = 1`.
pub fn comparison_predicates(
    n: u32,
    d: u32,
    gamma: u32,
    gamma_eff: Option<u32>,
) -> Result<Predicates, BoundError> {
    validate(n, d)?;
    if n == 1 || d > 100 {
        return Err(BoundError::InvalidParameter(format!(
            "predicates need 2 <= n and d <= 100, got n = {n}, d = {d}"
        )));
    }
    let n_ = n as i128;
    let d_ = d as i128;
    let p = 1i128 << d; // 2^d
    let half = p / 2; // 2^(d-1)
    let c = ((n - 1) / d) as i128;

    let vs_trivial = (p - 2) * n_ - (p - 1);
    let vs_path_cover = (p - 2) * n_ - d_ * (p - 1);
    // As commonly stated; the (c - 1) 2^(d-1) term enters with a minus sign,
    // which makes the condition stricter than the exact one (see tests).
    let vs_disjoint = (half - 2) * n_ - (c - 1) * half + 1;

    let eff = |num: i128| -> Predicate {
        match gamma_eff.and_then(|g| gamma_at_most(g, num, 2 * p - 4)) {
            Some(b) => Predicate::from_bool(b),
            None => Predicate::Inapplicable,
        }
    };
    let dom = |num: i128| -> Predicate {
        Predicate::from_bool(gamma_at_most(gamma, num, 2 * p - 3).unwrap())
    };
    Ok(Predicates {
        efficient_vs_trivial: eff(vs_trivial),
        domination_vs_trivial: dom(vs_trivial),
        efficient_vs_path_cover: eff(vs_path_cover),
        domination_vs_path_cover: dom(vs_path_cover),
        efficient_vs_disjoint_paths: eff(vs_disjoint),
        domination_vs_disjoint_paths: dom(vs_disjoint),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(b: Result<BoundValue, BoundError>) -> u128 {
        b.unwrap().value.unwrap()
    }

    #[test]
    fn trivial_examples() {
        let (lo, hi) = trivial_bounds(5, 1).unwrap();
        assert_eq!((lo.value, hi.value), (Some(5), Some(5)));
        let (lo, hi) = trivial_bounds(5, 4).unwrap();
        assert_eq!((lo.value, hi.value), (Some(16), Some(61)));
        let (lo, hi) = trivial_bounds(2, 1).unwrap();
        assert_eq!((lo.value, hi.value), (Some(2), Some(2)));
        assert_eq!(
            trivial_bounds(4, 4),
            Err(BoundError::InvalidInvariants { n: 4, d: 4 })
        );
        assert!(trivial_bounds(3, 0).is_err());
    }

    #[test]
    fn path_cover_examples() {
        assert_eq!(v(path_cover_bound(5, 1)), 5);
        assert_eq!(v(path_cover_bound(5, 4)), 16);
        assert_eq!(v(path_cover_bound(6, 3)), 22);
    }

    #[test]
    fn phi_is_monotone() {
        assert!(phi_monotone_check(5));
        assert!(phi_monotone_check(2));
        assert!(phi_monotone_check(10));
        assert_eq!(phi(10, 8), 2 * 255);
    }

    #[test]
    fn disjoint_paths_examples() {
        assert_eq!(v(disjoint_paths_bound(5, 1)), 5);
        assert_eq!(v(disjoint_paths_bound(5, 4)), 37);
        // c = 1: (6 + 1 - 1) * 4 - 6 + 2.
        assert_eq!(v(disjoint_paths_bound(6, 3)), 20);
    }

    #[test]
    fn efficient_domination_examples() {
        for n in 2..20 {
            assert_eq!(v(efficient_domination_bound(n, 1, Some(1))), n as u128 + 1);
            // K_{1,n}
            assert_eq!(v(efficient_domination_bound(n + 1, 2, Some(1))), n as u128 + 6);
        }
        assert_eq!(v(efficient_domination_bound(3, 2, Some(1))), 8);
        let none = efficient_domination_bound(5, 2, None).unwrap();
        assert!(!none.applicable && none.value.is_none());
        assert!(efficient_domination_bound(5, 2, Some(0)).is_err());
    }

    #[test]
    fn domination_examples() {
        for n in (2..30).step_by(2) {
            // double star on n + 2 vertices
            assert_eq!(v(domination_bound(n + 2, 3, 2)), n as u128 + 29);
        }
        assert_eq!(v(domination_bound(7, 1, 1)), 9);
        assert_eq!(v(domination_bound(5, 2, 1)), 11);
    }

    #[test]
    fn star_k_pebbling_values() {
        assert_eq!(star_k_pebbling_number(1, 4), Ok(5));
        assert_eq!(star_k_pebbling_number(2, 4), Ok(9));
        assert!(star_k_pebbling_number(1, 2).is_err());
        assert_eq!(star_k_pebbling_formula(1, 2), Ok(3));
        assert!(star_k_pebbling_number(0, 4).is_err());
    }

    #[test]
    fn diameter_two_gate() {
        assert_eq!(diameter_two_bound(5, 2).value, Some(6));
        let off = diameter_two_bound(5, 3);
        assert!(!off.applicable && off.value.is_none());
    }

    #[test]
    fn singleton_convention() {
        let b = all_bounds(1, 0, 1, Some(1)).unwrap();
        for x in b.iter().filter(|b| b.name != BoundName::DiameterTwo) {
            assert_eq!(x.value, Some(1), "{:?}", x.name);
        }
    }

    #[test]
    fn best_bound_selection() {
        let b = all_bounds(5, 2, 1, Some(1)).unwrap();
        assert_eq!(
            best_bound(&b),
            Some(BestBound {
                name: BoundName::DiameterTwo,
                value: 6
            })
        );
        // K_6: trivial, path cover and disjoint paths tie at 6.
        let b = all_bounds(6, 1, 1, Some(1)).unwrap();
        assert_eq!(best_bound(&b).unwrap().name, BoundName::DisjointPaths);
    }

    #[test]
    fn predicate_examples() {
        let p = comparison_predicates(12, 2, 2, Some(2)).unwrap();
        assert_eq!(p.domination_vs_trivial, Predicate::Holds);
        let p = comparison_predicates(5, 1, 1, Some(1)).unwrap();
        assert_eq!(p.efficient_vs_trivial, Predicate::Inapplicable);
        assert_eq!(p.efficient_vs_path_cover, Predicate::Inapplicable);
        assert_eq!(p.efficient_vs_disjoint_paths, Predicate::Inapplicable);
        // 53/13 ≈ 4.08
        let p = comparison_predicates(10, 3, 3, None).unwrap();
        assert_eq!(p.domination_vs_trivial, Predicate::Holds);
        assert_eq!(comparison_predicates(10, 3, 4, None).unwrap().domination_vs_trivial, Predicate::Holds);
        assert_eq!(comparison_predicates(10, 3, 5, None).unwrap().domination_vs_trivial, Predicate::Fails);
        assert_eq!(p.efficient_vs_trivial, Predicate::Inapplicable);
    }

    #[test]
    fn disjoint_path_predicate_is_conservative() {
        // n = 40, d = 2: c = 19, so the exact condition γ·4 <= 0·40 + 18·2 + 1
        // allows γ <= 9 while the stated one needs γ·4 <= -35.
        let p = comparison_predicates(40, 2, 9, Some(9)).unwrap();
        assert_eq!(p.efficient_vs_disjoint_paths, Predicate::Fails);
        let efficient = v(efficient_domination_bound(40, 2, Some(9)));
        let disjoint = v(disjoint_paths_bound(40, 2));
        assert!(efficient <= disjoint);
    }

    #[test]
    fn overflow_is_reported() {
        assert_eq!(path_cover_bound(200, 150), Err(BoundError::Overflow));
        assert!(domination_bound(64, 63, 2).is_ok());
    }
}
