//! Constructions that induce one connective from another.
//!
//! * the natural negation of a conjunction: for each `x`, the supremum of the
//!   zero set of `t -> C(x, t)`;
//! * the natural negation of a disjunction: the infimum of the one set of
//!   `t -> D(x, t)`;
//! * the pseudo-inverse of a monotone function and the patched pseudo-inverse
//!   that turns a continuous negation's inverse back into a strictly
//!   decreasing negation;
//! * the implication `(x, y) -> D(N(x), y)` and the reverse constructions
//!   `N_I(x) = I(x, 0)` and `D_I(x, y) = I(aleph(x), y)`.
//!
//! Monotonicity makes every sup/inf here the boundary of a monotone
//! predicate, so it is located by an endpoint check plus bisection: after the
//! halvings bottom out in double precision the returned endpoint is the last
//! floating-point number on the true side of the predicate. No grid fallback
//! is involved, which keeps induced values consistent with the exact `0`/`1`
//! tests used elsewhere.

use crate::analysis::continuity::unary_continuity;
use crate::config::NumericConfig;
use crate::connective::{BinaryConnective, ConnectiveKind, DeclaredFlags, UnaryFunction};
use crate::expr::Axis;
use crate::validate::{kind_validation, validate_negation};
use thiserror::Error;

/// Grid cap for the precondition checks the induction operations run on
/// their inputs (full-resolution validation is the catalog's job).
const PRECHECK_GRID: usize = 65;

/// Failure of an induction operation.
#[derive(Debug, Error)]
pub enum InduceError {
    #[error("`{name}` is a {got}, expected a {expected}")]
    KindMismatch {
        name: String,
        expected: ConnectiveKind,
        got: ConnectiveKind,
    },
    #[error("`{name}` failed validation: {detail}")]
    NotValidated { name: String, detail: String },
    #[error("`{name}` is not monotone: {detail}")]
    NotMonotone { name: String, detail: String },
    #[error("`{name}` is constant on the grid")]
    ConstantFunction { name: String },
    #[error("`{name}` is not a continuous fuzzy negation: {detail}")]
    NotContinuousNegation { name: String, detail: String },
    #[error("`{name}` is not a fuzzy negation: {detail}")]
    InvalidNegation { name: String, detail: String },
    #[error("`{name}` violates the required axioms: {detail}")]
    AxiomsFailed { name: String, detail: String },
}

/// A negation induced from a conjunction or disjunction.
///
/// The backing function is bisection-defined, memoized on the configured
/// grid; `is_negation` records whether the boundary value that decides
/// negation-hood (`N(1) = 0` for conjunction-induced, `N(0) = 1` for
/// disjunction-induced) actually holds — the other endpoint and monotonicity
/// come for free from the absorbing element.
#[derive(Debug, Clone)]
pub struct InducedNegation {
    pub function: UnaryFunction,
    /// Name of the originating connective.
    pub source: String,
    pub is_negation: bool,
}

/// Boundary of a down-set predicate: largest `t` with `p` true, assuming
/// `p(0)`. Returns the last double on the true side.
fn sup_true(p: impl Fn(f64) -> bool, iters: u32) -> f64 {
    if p(1.0) {
        return 1.0;
    }
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    for _ in 0..iters {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if p(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Boundary of an up-set predicate: smallest `t` with `p` true, assuming
/// `p(1)`. Returns the first double on the true side.
fn inf_true(p: impl Fn(f64) -> bool, iters: u32) -> f64 {
    if p(0.0) {
        return 0.0;
    }
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    for _ in 0..iters {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if p(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

fn require_kind(
    b: &BinaryConnective,
    expected: ConnectiveKind,
    cfg: &NumericConfig,
) -> Result<(), InduceError> {
    if b.kind() != expected {
        return Err(InduceError::KindMismatch {
            name: b.name().to_string(),
            expected,
            got: b.kind(),
        });
    }
    let check = kind_validation(b, cfg, PRECHECK_GRID);
    if !check.holds_verdict() {
        return Err(InduceError::NotValidated {
            name: b.name().to_string(),
            detail: check
                .witness
                .map_or_else(|| "boundary or monotonicity check failed".into(), |w| w.detail),
        });
    }
    Ok(())
}

fn assert_non_increasing_grid(f: &UnaryFunction, cfg: &NumericConfig) -> Result<(), InduceError> {
    let pts = cfg.grid_points_1d();
    let mut prev = f.eval(pts[0]);
    for &x in &pts[1..] {
        let v = f.eval(x);
        if v > prev + cfg.eps_eq {
            return Err(InduceError::NotValidated {
                name: f.name().to_string(),
                detail: format!("induced map increases at x = {x}: {prev} -> {v}"),
            });
        }
        prev = v;
    }
    Ok(())
}

/// Natural negation of a conjunction: `x` maps to the supremum of
/// `{t | C(x, t) = 0}`.
///
/// The zero set is a sub-interval containing 0 (the absorbing element forces
/// `C(x, 0) = 0`), so its right endpoint is found by an endpoint check and
/// bisection of `C(x, t) <= eps_zero`.
pub fn natural_negation_of_conjunction(
    c: &BinaryConnective,
    cfg: &NumericConfig,
) -> Result<InducedNegation, InduceError> {
    require_kind(c, ConnectiveKind::Conjunction, cfg)?;
    let conj = c.clone();
    let eps_zero = cfg.eps_zero;
    let iters = cfg.bisect_iters;
    let function = UnaryFunction::memoized(format!("N[{}]", c.name()), cfg.grid_1d, move |x| {
        let at_zero = conj.eval(x, 0.0);
        assert!(
            at_zero <= eps_zero,
            "zero set of {} is empty at x = {x}: C(x, 0) = {at_zero}",
            conj.name()
        );
        if conj.eval(x, 1.0) <= eps_zero {
            1.0
        } else {
            sup_true(|t| conj.eval(x, t) <= eps_zero, iters)
        }
    });
    assert_non_increasing_grid(&function, cfg)?;
    let is_negation = function.eval(1.0).abs() <= cfg.eps_eq;
    Ok(InducedNegation {
        function,
        source: c.name().to_string(),
        is_negation,
    })
}

/// Natural negation of a disjunction: `x` maps to the infimum of
/// `{t | D(x, t) = 1}` — the dual construction.
pub fn natural_negation_of_disjunction(
    d: &BinaryConnective,
    cfg: &NumericConfig,
) -> Result<InducedNegation, InduceError> {
    require_kind(d, ConnectiveKind::Disjunction, cfg)?;
    let disj = d.clone();
    let eps_one = cfg.eps_one;
    let iters = cfg.bisect_iters;
    let function = UnaryFunction::memoized(format!("N[{}]", d.name()), cfg.grid_1d, move |x| {
        let at_one = disj.eval(x, 1.0);
        assert!(
            at_one >= 1.0 - eps_one,
            "one set of {} is empty at x = {x}: D(x, 1) = {at_one}",
            disj.name()
        );
        if disj.eval(x, 0.0) >= 1.0 - eps_one {
            0.0
        } else {
            inf_true(|t| disj.eval(x, t) >= 1.0 - eps_one, iters)
        }
    });
    assert_non_increasing_grid(&function, cfg)?;
    let is_negation = (function.eval(0.0) - 1.0).abs() <= cfg.eps_eq;
    Ok(InducedNegation {
        function,
        source: d.name().to_string(),
        is_negation,
    })
}

/// Pseudo-inverse of a monotone non-constant function on `[0, 1]`.
///
/// For non-increasing `f` this is `y -> sup {x | f(x) > y}`, for
/// non-decreasing `f` it is `y -> sup {x | f(x) < y}`; both predicates are
/// down-sets in `x`, with the convention that the supremum of the empty set
/// is 0.
pub fn pseudo_inverse(
    f: &UnaryFunction,
    cfg: &NumericConfig,
) -> Result<UnaryFunction, InduceError> {
    let pts = crate::validate::negation_points(f, cfg);
    let values: Vec<f64> = pts.iter().map(|&x| f.eval(x)).collect();
    let mut rises = false;
    let mut falls = false;
    for w in values.windows(2) {
        if w[1] > w[0] + cfg.eps_eq {
            rises = true;
        }
        if w[1] < w[0] - cfg.eps_eq {
            falls = true;
        }
    }
    if rises && falls {
        return Err(InduceError::NotMonotone {
            name: f.name().to_string(),
            detail: "both increases and decreases on the grid".into(),
        });
    }
    if !rises && !falls {
        return Err(InduceError::ConstantFunction {
            name: f.name().to_string(),
        });
    }

    let inner = f.clone();
    let iters = cfg.bisect_iters;
    let non_increasing = falls;
    let g = move |y: f64| {
        let p = |x: f64| {
            if non_increasing {
                inner.eval(x) > y
            } else {
                inner.eval(x) < y
            }
        };
        if !p(0.0) {
            0.0 // empty set
        } else {
            sup_true(p, iters)
        }
    };
    Ok(UnaryFunction::memoized(
        format!("{}^(-1)", f.name()),
        cfg.grid_1d,
        g,
    ))
}

/// Patched pseudo-inverse of a continuous negation: the pseudo-inverse on
/// `(0, 1]` with the value at 0 forced to 1. The result is a strictly
/// decreasing negation `A` with `N(A(x)) = x` everywhere and `A(N(x)) = x` on
/// the range of `A`; all three facts are asserted on a coarse grid and a
/// violation reports the continuity premise as broken.
pub fn aleph(n: &UnaryFunction, cfg: &NumericConfig) -> Result<UnaryFunction, InduceError> {
    let as_negation = validate_negation(n, cfg);
    if !as_negation.holds_verdict() {
        return Err(InduceError::NotContinuousNegation {
            name: n.name().to_string(),
            detail: as_negation
                .witness
                .map_or_else(|| "negation conditions failed".into(), |w| w.detail),
        });
    }
    let scan = unary_continuity(n, cfg);
    if !scan.continuous() {
        let (at, jump) = scan.worst();
        return Err(InduceError::NotContinuousNegation {
            name: n.name().to_string(),
            detail: format!("jump of {jump} at x = {at}"),
        });
    }

    let pinv = pseudo_inverse(n, cfg)?;
    let inner = pinv.clone();
    let result = UnaryFunction::from_fn(format!("aleph[{}]", n.name()), Vec::new(), move |x| {
        if x == 0.0 {
            1.0
        } else {
            inner.eval(x)
        }
    });

    // postconditions, checked on a coarse grid
    let coarse: Vec<f64> = (0..=256).map(|i| i as f64 / 256.0).collect();
    let fail = |detail: String| InduceError::NotContinuousNegation {
        name: n.name().to_string(),
        detail,
    };
    let mut prev = result.eval(0.0);
    for &x in &coarse[1..] {
        let v = result.eval(x);
        if v.is_nan() || v >= prev {
            return Err(fail(format!(
                "patched pseudo-inverse is not strictly decreasing at x = {x}"
            )));
        }
        prev = v;
    }
    if result.eval(0.0) != 1.0 || result.eval(1.0).abs() > cfg.eps_eq {
        return Err(fail("patched pseudo-inverse misses the negation endpoints".into()));
    }
    for &x in &coarse {
        let back = n.eval(result.eval(x));
        if (back - x).abs() > cfg.eps_eq {
            return Err(fail(format!(
                "N(aleph({x})) = {back}, expected {x} — continuity premise fails numerically"
            )));
        }
    }
    for &t in &coarse {
        let x = result.eval(t);
        let round = result.eval(n.eval(x));
        if (round - x).abs() > cfg.eps_eq {
            return Err(fail(format!(
                "aleph(N({x})) = {round} on the range of aleph, expected {x}"
            )));
        }
    }
    Ok(result)
}

/// The implication `(x, y) -> D(N(x), y)` induced by a disjunction and a
/// negation. The composition always satisfies the implication axioms when
/// the inputs are valid; this is re-checked on a coarse grid.
pub fn implication_from_dn(
    d: &BinaryConnective,
    n: &UnaryFunction,
    cfg: &NumericConfig,
) -> Result<BinaryConnective, InduceError> {
    require_kind(d, ConnectiveKind::Disjunction, cfg)?;
    let as_negation = validate_negation(n, cfg);
    if !as_negation.holds_verdict() {
        return Err(InduceError::InvalidNegation {
            name: n.name().to_string(),
            detail: as_negation
                .witness
                .map_or_else(|| "negation conditions failed".into(), |w| w.detail),
        });
    }
    let (dd, nn) = (d.clone(), n.clone());
    let composed = BinaryConnective::from_fn(
        format!("I[{},{}]", d.name(), n.name()),
        ConnectiveKind::Implication,
        DeclaredFlags::none(),
        move |x, y| dd.eval(nn.eval(x), y),
    );
    let check = kind_validation(&composed, cfg, PRECHECK_GRID);
    if !check.holds_verdict() {
        return Err(InduceError::AxiomsFailed {
            name: composed.name().to_string(),
            detail: check
                .witness
                .map_or_else(|| "implication axioms failed".into(), |w| w.detail),
        });
    }
    Ok(composed)
}

/// The negation `x -> I(x, 0)` extracted from an implication candidate.
/// Requires the monotonicity axiom in the first argument and the corner
/// values `I(0,0) = 1`, `I(1,0) = 0`.
pub fn negation_of_implication(
    i: &BinaryConnective,
    cfg: &NumericConfig,
) -> Result<UnaryFunction, InduceError> {
    let fail = |detail: String| InduceError::AxiomsFailed {
        name: i.name().to_string(),
        detail,
    };
    if i.eval(0.0, 0.0) < 1.0 - cfg.eps_one {
        return Err(fail(format!("I(0,0) = {}", i.eval(0.0, 0.0))));
    }
    if i.eval(1.0, 0.0) > cfg.eps_zero {
        return Err(fail(format!("I(1,0) = {}", i.eval(1.0, 0.0))));
    }
    // first-argument monotonicity on a capped grid, all ordered pairs
    let pts = crate::config::uniform_grid(PRECHECK_GRID);
    for &y in &pts {
        for a in 0..pts.len() {
            for b in a + 1..pts.len() {
                let (va, vb) = (i.eval(pts[a], y), i.eval(pts[b], y));
                if vb > va + cfg.eps_eq {
                    return Err(fail(format!(
                        "I(., {y}) increases from {va} at x={} to {vb} at x={}",
                        pts[a], pts[b]
                    )));
                }
            }
        }
    }
    let inner = i.clone();
    let breakpoints = i.section_breakpoints(Axis::Y, 0.0);
    let function = UnaryFunction::from_fn(format!("N[{}]", i.name()), breakpoints, move |x| {
        inner.eval(x, 0.0)
    });
    let check = validate_negation(&function, cfg);
    if !check.holds_verdict() {
        return Err(fail(check
            .witness
            .map_or_else(|| "extracted map is not a negation".into(), |w| w.detail)));
    }
    Ok(function)
}

/// Rebuilds a disjunction from an implication through the patched
/// pseudo-inverse of its extracted negation: `D(x, y) = I(aleph(x), y)`.
/// Requires the extracted negation to be continuous.
pub fn disjunction_from_implication(
    i: &BinaryConnective,
    cfg: &NumericConfig,
) -> Result<BinaryConnective, InduceError> {
    let n_i = negation_of_implication(i, cfg)?;
    disjunction_via_negation(i, &n_i, cfg)
}

/// Like [`disjunction_from_implication`] but with an explicitly supplied
/// continuous negation in place of the extracted one — the tool for probing
/// what happens when the negation context of an implication is swapped.
pub fn disjunction_via_negation(
    i: &BinaryConnective,
    n: &UnaryFunction,
    cfg: &NumericConfig,
) -> Result<BinaryConnective, InduceError> {
    let al = aleph(n, cfg)?;
    let (ii, aa) = (i.clone(), al.clone());
    let composed = BinaryConnective::from_fn(
        format!("D[{}]", i.name()),
        ConnectiveKind::Disjunction,
        DeclaredFlags::none(),
        move |x, y| ii.eval(aa.eval(x), y),
    );
    let check = kind_validation(&composed, cfg, PRECHECK_GRID);
    if !check.holds_verdict() {
        return Err(InduceError::AxiomsFailed {
            name: composed.name().to_string(),
            detail: check
                .witness
                .map_or_else(|| "composed map is not a disjunction".into(), |w| w.detail),
        });
    }
    Ok(composed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fuzz::random_monotone_connective;

    fn cfg() -> NumericConfig {
        NumericConfig {
            grid_1d: 513,
            grid_2d: 65,
            ..NumericConfig::default()
        }
    }

    fn conj(name: &str, src: &str) -> BinaryConnective {
        BinaryConnective::parse(name, ConnectiveKind::Conjunction, DeclaredFlags::none(), src)
            .unwrap()
    }

    fn disj(name: &str, src: &str) -> BinaryConnective {
        BinaryConnective::parse(name, ConnectiveKind::Disjunction, DeclaredFlags::none(), src)
            .unwrap()
    }

    /// Brute-force oracle: largest sample with `f <= eps`, scanning from
    /// above.
    fn sup_scan(f: impl Fn(f64) -> f64, eps: f64, samples: usize) -> f64 {
        for i in (0..=samples).rev() {
            let t = i as f64 / samples as f64;
            if f(t) <= eps {
                return t;
            }
        }
        0.0
    }

    /// Brute-force oracle: smallest sample with `f >= 1 - eps`.
    fn inf_scan(f: impl Fn(f64) -> f64, eps: f64, samples: usize) -> f64 {
        for i in 0..=samples {
            let t = i as f64 / samples as f64;
            if f(t) >= 1.0 - eps {
                return t;
            }
        }
        1.0
    }

    #[test]
    fn lukasiewicz_induces_standard_negation() {
        let c = conj("T_L", "max(x + y - 1, 0)");
        let induced = natural_negation_of_conjunction(&c, &cfg()).unwrap();
        assert!(induced.is_negation);
        assert!((induced.function.eval(0.3) - 0.7).abs() < 1e-9);
        for i in 0..=64 {
            let x = i as f64 / 64.0;
            assert!((induced.function.eval(x) - (1.0 - x)).abs() < 1e-9);
        }
    }

    #[test]
    fn absorbing_element_pins_zero() {
        let c = conj("T_P", "x*y");
        let induced = natural_negation_of_conjunction(&c, &cfg()).unwrap();
        assert_eq!(induced.function.eval(0.0), 1.0);
        assert!(induced.function.eval(0.5).abs() < 1e-9);
    }

    #[test]
    fn projection_like_conjunction_is_flagged_not_a_negation() {
        let c = conj("C_3", "piece(y = 1 : x ; else : 0)");
        let induced = natural_negation_of_conjunction(&c, &cfg()).unwrap();
        assert!(!induced.is_negation);
        assert!((induced.function.eval(1.0) - 1.0).abs() < 1e-9);
    }

    #[test]
    fn bisection_matches_dense_scan_oracle() {
        let c = random_monotone_connective(1, 17, ConnectiveKind::Conjunction, false);
        let induced = natural_negation_of_conjunction(&c, &cfg()).unwrap();
        for i in 0..17 {
            let x = i as f64 / 16.0;
            let oracle = sup_scan(|t| c.eval(x, t), 0.0, 1_000_000);
            let got = induced.function.eval(x);
            assert!(
                (got - oracle).abs() <= 1e-5,
                "x = {x}: bisection {got} vs oracle {oracle}"
            );
        }
    }

    #[test]
    fn disjunction_negation_via_sqrt_profile() {
        let d = disj("D_5", "min(1, x + sqrt(y))");
        let induced = natural_negation_of_disjunction(&d, &cfg()).unwrap();
        assert!(induced.is_negation);
        assert!((induced.function.eval(0.5) - 0.25).abs() < 1e-9);
        let oracle = inf_scan(|t| d.eval(0.5, t), 0.0, 1_000_000);
        assert!((induced.function.eval(0.5) - oracle).abs() <= 1e-5);
        assert_eq!(induced.function.eval(1.0), 0.0);
    }

    #[test]
    fn lifted_square_disjunction_induces_standard_negation() {
        let d = disj("remark41_D", "piece(x + y > 1 : 1 ; else : pow(x, 2) + pow(y, 2))");
        let induced = natural_negation_of_disjunction(&d, &cfg()).unwrap();
        assert!(induced.is_negation);
        for i in 0..=64 {
            let x = i as f64 / 64.0;
            assert!(
                (induced.function.eval(x) - (1.0 - x)).abs() < 1e-9,
                "x = {x}"
            );
        }
    }

    #[test]
    fn kind_is_enforced() {
        let d = disj("D_2", "piece(x + y >= 1 : 1 ; else : y)");
        assert!(matches!(
            natural_negation_of_conjunction(&d, &cfg()),
            Err(InduceError::KindMismatch { .. })
        ));
    }

    #[test]
    fn pseudo_inverse_of_clipped_slope() {
        let n = UnaryFunction::parse("rem42_N", "piece(x <= 1/2 : 1 - 2*x ; else : 0)").unwrap();
        let pinv = pseudo_inverse(&n, &cfg()).unwrap();
        for i in 0..=64 {
            let y = i as f64 / 64.0;
            let expected = 0.5 - 0.5 * y;
            assert!(
                (pinv.eval(y) - expected).abs() < 1e-9,
                "y = {y}: {} vs {expected}",
                pinv.eval(y)
            );
        }
        // not a negation: pinv(0) = 0.5
        assert!((pinv.eval(0.0) - 0.5).abs() < 1e-9);
    }

    #[test]
    fn pseudo_inverse_is_involutive_for_standard_negation() {
        let n = UnaryFunction::parse("N_S", "1 - x").unwrap();
        let pinv = pseudo_inverse(&n, &cfg()).unwrap();
        for i in 0..=64 {
            let y = i as f64 / 64.0;
            assert!((pinv.eval(y) - (1.0 - y)).abs() < 1e-9);
        }
    }

    #[test]
    fn pseudo_inverse_of_least_negation_is_zero() {
        let n = UnaryFunction::parse("N_G1", "piece(x = 0 : 1 ; else : 0)").unwrap();
        let pinv = pseudo_inverse(&n, &cfg()).unwrap();
        for i in 1..=10 {
            let y = i as f64 / 10.0;
            let oracle = {
                // sup over a dense scan of {x | N(x) > y}
                let mut best = 0.0;
                for k in 0..=1_000_000 {
                    let x = k as f64 / 1e6;
                    if n.eval(x) > y {
                        best = x;
                    }
                }
                best
            };
            assert!((pinv.eval(y) - oracle).abs() <= 1e-5);
            assert!(pinv.eval(y).abs() <= 1e-9);
        }
    }

    #[test]
    fn constant_and_non_monotone_rejected() {
        let constant = UnaryFunction::from_fn("half", vec![], |_| 0.5);
        assert!(matches!(
            pseudo_inverse(&constant, &cfg()),
            Err(InduceError::ConstantFunction { .. })
        ));
        let vee = UnaryFunction::from_fn("vee", vec![], |x| (x - 0.5).abs() * 2.0);
        assert!(matches!(
            pseudo_inverse(&vee, &cfg()),
            Err(InduceError::NotMonotone { .. })
        ));
    }

    #[test]
    fn aleph_patches_the_origin() {
        let n = UnaryFunction::parse("rem42_N", "piece(x <= 1/2 : 1 - 2*x ; else : 0)").unwrap();
        let al = aleph(&n, &cfg()).unwrap();
        assert_eq!(al.eval(0.0), 1.0);
        assert!((al.eval(0.5) - 0.25).abs() < 1e-9);
        // recovery identities
        assert!((n.eval(al.eval(0.4)) - 0.4).abs() < 1e-9);
        assert!((n.eval(al.eval(0.8)) - 0.8).abs() < 1e-9);
    }

    #[test]
    fn aleph_of_standard_negation_is_itself() {
        let n = UnaryFunction::parse("N_S", "1 - x").unwrap();
        let al = aleph(&n, &cfg()).unwrap();
        for i in 0..=32 {
            let x = i as f64 / 32.0;
            assert!((al.eval(x) - (1.0 - x)).abs() < 1e-9);
        }
        assert!((n.eval(al.eval(0.4)) - 0.4).abs() < 1e-12);
    }

    #[test]
    fn aleph_rejects_discontinuous_negations() {
        let n = UnaryFunction::parse("N_G1", "piece(x = 0 : 1 ; else : 0)").unwrap();
        assert!(matches!(
            aleph(&n, &cfg()),
            Err(InduceError::NotContinuousNegation { .. })
        ));
    }

    #[test]
    fn dn_implication_reproduces_goedel_form() {
        let d2 = disj("D_2", "piece(x + y >= 1 : 1 ; else : y)");
        let n_s = UnaryFunction::parse("N_S", "1 - x").unwrap();
        let i = implication_from_dn(&d2, &n_s, &cfg()).unwrap();
        assert_eq!(i.kind(), ConnectiveKind::Implication);
        assert!((i.eval(0.7, 0.4) - 0.4).abs() < 1e-12);
        assert_eq!(i.eval(0.0, 0.0), 1.0);
        assert_eq!(i.eval(0.3, 0.3), 1.0);
    }

    #[test]
    fn dn_implication_with_greatest_negation() {
        let d7 = disj(
            "D_7",
            "piece(x = 0 && y = 0 : 0 ; x = 1 : 1 ; y = 1 : 1 ; else : y)",
        );
        let n_g2 = UnaryFunction::parse("N_G2", "piece(x < 1 : 1 ; else : 0)").unwrap();
        let i = implication_from_dn(&d7, &n_g2, &cfg()).unwrap();
        assert!((i.eval(1.0, 0.3) - 0.3).abs() < 1e-12);
        assert_eq!(i.eval(0.5, 0.0), 1.0);
    }

    #[test]
    fn negation_extraction_from_implications() {
        let i_rc = BinaryConnective::parse(
            "I_RC",
            ConnectiveKind::Implication,
            DeclaredFlags::none(),
            "1 - x + x*y",
        )
        .unwrap();
        let n = negation_of_implication(&i_rc, &cfg()).unwrap();
        assert!((n.eval(0.3) - 0.7).abs() < 1e-12);

        let i_rs = BinaryConnective::parse(
            "I_RS",
            ConnectiveKind::Implication,
            DeclaredFlags::none(),
            "piece(x <= y : 1 ; else : 0)",
        )
        .unwrap();
        let n = negation_of_implication(&i_rs, &cfg()).unwrap();
        assert_eq!(n.eval(0.0), 1.0);
        assert_eq!(n.eval(0.5), 0.0);
    }

    #[test]
    fn disjunction_rebuild_matches_catalog_form() {
        let i3 = BinaryConnective::parse(
            "I_3",
            ConnectiveKind::Implication,
            DeclaredFlags::none(),
            "piece(x <= y : 1 ; else : 1 - x)",
        )
        .unwrap();
        let d = disjunction_from_implication(&i3, &cfg()).unwrap();
        let d3 = disj("D_3", "piece(x + y >= 1 : 1 ; else : x)");
        for i in 0..=100 {
            for j in 0..=100 {
                let (x, y) = (i as f64 / 100.0, j as f64 / 100.0);
                assert!(
                    (d.eval(x, y) - d3.eval(x, y)).abs() <= 1e-9,
                    "({x}, {y}): {} vs {}",
                    d.eval(x, y),
                    d3.eval(x, y)
                );
            }
        }
    }

    #[test]
    fn swapped_negation_context_produces_the_discontinuous_disjunction() {
        let i_rc = BinaryConnective::parse(
            "I_RC",
            ConnectiveKind::Implication,
            DeclaredFlags::none(),
            "1 - x + x*y",
        )
        .unwrap();
        let n = UnaryFunction::parse("rem42_N", "piece(x <= 1/2 : 1 - 2*x ; else : 0)").unwrap();
        let d = disjunction_via_negation(&i_rc, &n, &cfg()).unwrap();
        // at x = 0 the map follows y; for x > 0 it is (x + y - x*y + 1) / 2
        assert!((d.eval(0.0, 0.3) - 0.3).abs() < 1e-12);
        assert!((d.eval(0.5, 0.0) - 0.75).abs() < 1e-9);
        assert!((d.eval(0.25, 0.5) - 0.5 * (0.25 + 0.5 - 0.125 + 1.0)).abs() < 1e-9);
    }

    #[test]
    fn rebuild_rejects_discontinuous_extracted_negation() {
        let i_rs = BinaryConnective::parse(
            "I_RS",
            ConnectiveKind::Implication,
            DeclaredFlags::none(),
            "piece(x <= y : 1 ; else : 0)",
        )
        .unwrap();
        assert!(matches!(
            disjunction_from_implication(&i_rs, &cfg()),
            Err(InduceError::NotContinuousNegation { .. })
        ));
    }
}
