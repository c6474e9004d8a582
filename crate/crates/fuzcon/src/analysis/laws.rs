//! The named-law registry.
//!
//! Every law is checked exhaustively over the configured grid (pairs for
//! binary laws, a deterministic stride subsample of about 1e5 triples for the
//! exchange principle) and reports the *worst* violation as its witness:
//! re-evaluating the witness point reproduces the failure, and the worst
//! offender is the most informative one.

use super::continuity::{unary_continuity, Side};
use crate::config::NumericConfig;
use crate::connective::{BinaryConnective, UnaryFunction};
use crate::induce;
use crate::report::{CheckResult, Witness};
use crate::validate::triple_stride;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Identifiers of the checkable laws.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LawId {
    /// `I(1, y) = y`: the neutral property.
    Np,
    /// `I(x, I(y, z)) = I(y, I(x, z))`: the exchange principle.
    Ep,
    /// `I(x, x) = 1`: the identity principle.
    Ip,
    /// `I(x, y) = 1  <=>  x <= y`: the ordering property.
    Op,
    /// `I(x, y) = I(N(y), N(x))`: contraposition w.r.t. `N`.
    Cp,
    /// `I(N(x), y) = I(N(y), x)`: left contraposition.
    LCp,
    /// `I(x, N(y)) = I(y, N(x))`: right contraposition.
    RCp,
    /// `D(N(x), x) = 1`.
    Lem1,
    /// `D(x, N(x)) = 1`.
    Lem2,
    /// Both halves of the law of excluded middle.
    Lem,
    /// `C(N(x), x) = 0`.
    Lc1,
    /// `C(x, N(x)) = 0`.
    Lc2,
    /// Both halves of the law of contradiction.
    Lc,
    /// Sections through equal extracted-negation values coincide:
    /// `N_F(x1) = N_F(x2)` forces `F(x1, .) = F(x2, .)`.
    Cond47,
    /// The excluded-middle inequalities: `N_D(N(x)) <= x` and
    /// `N(x) >= N_D(x)`.
    LemIneq,
    /// The contradiction inequalities: `N_C(N(x)) >= x` and
    /// `N(x) <= N_C(x)`.
    LcIneq,
    /// `D(0, y) = y`: 0 is a left neutral element.
    Neutral0,
}

impl LawId {
    pub const ALL: [LawId; 17] = [
        LawId::Np,
        LawId::Ep,
        LawId::Ip,
        LawId::Op,
        LawId::Cp,
        LawId::LCp,
        LawId::RCp,
        LawId::Lem1,
        LawId::Lem2,
        LawId::Lem,
        LawId::Lc1,
        LawId::Lc2,
        LawId::Lc,
        LawId::Cond47,
        LawId::LemIneq,
        LawId::LcIneq,
        LawId::Neutral0,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LawId::Np => "NP",
            LawId::Ep => "EP",
            LawId::Ip => "IP",
            LawId::Op => "OP",
            LawId::Cp => "CP",
            LawId::LCp => "L-CP",
            LawId::RCp => "R-CP",
            LawId::Lem1 => "LEM1",
            LawId::Lem2 => "LEM2",
            LawId::Lem => "LEM",
            LawId::Lc1 => "LC1",
            LawId::Lc2 => "LC2",
            LawId::Lc => "LC",
            LawId::Cond47 => "COND_4_7",
            LawId::LemIneq => "LEM_INEQ",
            LawId::LcIneq => "LC_INEQ",
            LawId::Neutral0 => "NEUTRAL_0",
        }
    }
}

impl fmt::Display for LawId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LawId {
    type Err = AnalysisError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let needle = s.to_ascii_uppercase();
        LawId::ALL
            .into_iter()
            .find(|l| l.name() == needle)
            .ok_or_else(|| AnalysisError::UnknownLaw(s.to_string()))
    }
}

/// Named operand slots for laws and theorems.
#[derive(Debug, Clone, Copy, Default)]
pub struct LawOperands<'a> {
    pub implication: Option<&'a BinaryConnective>,
    pub conjunction: Option<&'a BinaryConnective>,
    pub disjunction: Option<&'a BinaryConnective>,
    pub negation: Option<&'a UnaryFunction>,
    pub second_negation: Option<&'a UnaryFunction>,
}

impl<'a> LawOperands<'a> {
    pub fn implication(i: &'a BinaryConnective) -> Self {
        LawOperands {
            implication: Some(i),
            ..Self::default()
        }
    }

    pub fn disjunction_negation(d: &'a BinaryConnective, n: &'a UnaryFunction) -> Self {
        LawOperands {
            disjunction: Some(d),
            negation: Some(n),
            ..Self::default()
        }
    }

    pub fn conjunction_negation(c: &'a BinaryConnective, n: &'a UnaryFunction) -> Self {
        LawOperands {
            conjunction: Some(c),
            negation: Some(n),
            ..Self::default()
        }
    }

    pub fn with_negation(mut self, n: &'a UnaryFunction) -> Self {
        self.negation = Some(n);
        self
    }
}

/// Law or theorem dispatch failure.
#[derive(Debug, Error)]
pub enum AnalysisError {
    #[error("law {law} needs operand `{missing}`")]
    SignatureMismatch { law: String, missing: &'static str },
    #[error("unknown law `{0}`")]
    UnknownLaw(String),
    #[error("unknown theorem `{0}`")]
    UnknownTheorem(String),
}

/// Tracks the worst violation seen so far.
pub(crate) struct WorstWitness {
    pub margin: f64,
    pub witness: Option<Witness>,
}

impl WorstWitness {
    pub fn new() -> Self {
        WorstWitness {
            margin: 0.0,
            witness: None,
        }
    }

    pub fn offer(&mut self, margin: f64, make: impl FnOnce() -> Witness) {
        if margin > self.margin || self.witness.is_none() {
            self.margin = margin;
            self.witness = Some(make());
        }
    }

    pub fn into_result(self, law: &str, cfg: &NumericConfig) -> CheckResult {
        match self.witness {
            None => CheckResult::holds(law, cfg),
            Some(w) => CheckResult::fails(law, w, cfg),
        }
    }
}

fn need<'a, T>(
    slot: Option<&'a T>,
    law: LawId,
    missing: &'static str,
) -> Result<&'a T, AnalysisError> {
    slot.ok_or(AnalysisError::SignatureMismatch {
        law: law.to_string(),
        missing,
    })
}

/// Checks one law against the supplied operands.
pub fn check_law(
    law: LawId,
    ops: &LawOperands<'_>,
    cfg: &NumericConfig,
) -> Result<CheckResult, AnalysisError> {
    match law {
        LawId::Np => {
            let i = need(ops.implication, law, "implication")?;
            Ok(pointwise_identity(law, cfg, |y| (i.eval(1.0, y), y)))
        }
        LawId::Ep => {
            let i = need(ops.implication, law, "implication")?;
            Ok(exchange_principle(i, cfg))
        }
        LawId::Ip => {
            let i = need(ops.implication, law, "implication")?;
            Ok(equals_one(law, cfg, |x| i.eval(x, x), "I(x, x)"))
        }
        LawId::Op => {
            let i = need(ops.implication, law, "implication")?;
            Ok(ordering_property(i, cfg))
        }
        LawId::Cp => {
            let i = need(ops.implication, law, "implication")?;
            let n = need(ops.negation, law, "negation")?;
            Ok(pair_identity(law, cfg, |x, y| {
                (i.eval(x, y), i.eval(n.eval(y), n.eval(x)))
            }))
        }
        LawId::LCp => {
            let i = need(ops.implication, law, "implication")?;
            let n = need(ops.negation, law, "negation")?;
            Ok(pair_identity(law, cfg, |x, y| {
                (i.eval(n.eval(x), y), i.eval(n.eval(y), x))
            }))
        }
        LawId::RCp => {
            let i = need(ops.implication, law, "implication")?;
            let n = need(ops.negation, law, "negation")?;
            Ok(pair_identity(law, cfg, |x, y| {
                (i.eval(x, n.eval(y)), i.eval(y, n.eval(x)))
            }))
        }
        LawId::Lem1 => {
            let d = need(ops.disjunction, law, "disjunction")?;
            let n = need(ops.negation, law, "negation")?;
            Ok(equals_one(law, cfg, |x| d.eval(n.eval(x), x), "D(N(x), x)"))
        }
        LawId::Lem2 => {
            let d = need(ops.disjunction, law, "disjunction")?;
            let n = need(ops.negation, law, "negation")?;
            Ok(equals_one(law, cfg, |x| d.eval(x, n.eval(x)), "D(x, N(x))"))
        }
        LawId::Lem => {
            let d = need(ops.disjunction, law, "disjunction")?;
            let n = need(ops.negation, law, "negation")?;
            let mut worst = WorstWitness::new();
            scan_equals_one(&mut worst, cfg, |x| d.eval(n.eval(x), x), "D(N(x), x)");
            scan_equals_one(&mut worst, cfg, |x| d.eval(x, n.eval(x)), "D(x, N(x))");
            Ok(worst.into_result(law.name(), cfg))
        }
        LawId::Lc1 => {
            let c = need(ops.conjunction, law, "conjunction")?;
            let n = need(ops.negation, law, "negation")?;
            Ok(equals_zero(law, cfg, |x| c.eval(n.eval(x), x), "C(N(x), x)"))
        }
        LawId::Lc2 => {
            let c = need(ops.conjunction, law, "conjunction")?;
            let n = need(ops.negation, law, "negation")?;
            Ok(equals_zero(law, cfg, |x| c.eval(x, n.eval(x)), "C(x, N(x))"))
        }
        LawId::Lc => {
            let c = need(ops.conjunction, law, "conjunction")?;
            let n = need(ops.negation, law, "negation")?;
            let mut worst = WorstWitness::new();
            scan_equals_zero(&mut worst, cfg, |x| c.eval(n.eval(x), x), "C(N(x), x)");
            scan_equals_zero(&mut worst, cfg, |x| c.eval(x, n.eval(x)), "C(x, N(x))");
            Ok(worst.into_result(law.name(), cfg))
        }
        LawId::Cond47 => {
            let f = ops
                .implication
                .or(ops.conjunction)
                .or(ops.disjunction)
                .ok_or(AnalysisError::SignatureMismatch {
                    law: law.to_string(),
                    missing: "implication (any binary operand)",
                })?;
            Ok(equal_negation_sections(f, cfg))
        }
        LawId::LemIneq => {
            let d = need(ops.disjunction, law, "disjunction")?;
            let n = need(ops.negation, law, "negation")?;
            let induced = match induce::natural_negation_of_disjunction(d, cfg) {
                Ok(i) => i,
                Err(e) => {
                    return Ok(CheckResult::precondition_failed(
                        law.name(),
                        format!("valid disjunction: {e}"),
                        cfg,
                    ))
                }
            };
            let nd = &induced.function;
            let mut worst = WorstWitness::new();
            for &x in &cfg.grid_points_1d() {
                let lhs = nd.eval(n.eval(x));
                if lhs > x + cfg.eps_eq {
                    worst.offer(lhs - x, || {
                        Witness::new(
                            vec![x],
                            vec![lhs],
                            format!("N_D(N({x})) = {lhs} exceeds {x}"),
                        )
                    });
                }
                let (nv, ndv) = (n.eval(x), nd.eval(x));
                if nv < ndv - cfg.eps_eq {
                    worst.offer(ndv - nv, || {
                        Witness::new(
                            vec![x],
                            vec![nv, ndv],
                            format!("N({x}) = {nv} falls below N_D({x}) = {ndv}"),
                        )
                    });
                }
            }
            Ok(worst.into_result(law.name(), cfg))
        }
        LawId::LcIneq => {
            let c = need(ops.conjunction, law, "conjunction")?;
            let n = need(ops.negation, law, "negation")?;
            let induced = match induce::natural_negation_of_conjunction(c, cfg) {
                Ok(i) => i,
                Err(e) => {
                    return Ok(CheckResult::precondition_failed(
                        law.name(),
                        format!("valid conjunction: {e}"),
                        cfg,
                    ))
                }
            };
            let nc = &induced.function;
            let mut worst = WorstWitness::new();
            for &x in &cfg.grid_points_1d() {
                let lhs = nc.eval(n.eval(x));
                if lhs < x - cfg.eps_eq {
                    worst.offer(x - lhs, || {
                        Witness::new(
                            vec![x],
                            vec![lhs],
                            format!("N_C(N({x})) = {lhs} falls below {x}"),
                        )
                    });
                }
                let (nv, ncv) = (n.eval(x), nc.eval(x));
                if nv > ncv + cfg.eps_eq {
                    worst.offer(nv - ncv, || {
                        Witness::new(
                            vec![x],
                            vec![nv, ncv],
                            format!("N({x}) = {nv} exceeds N_C({x}) = {ncv}"),
                        )
                    });
                }
            }
            Ok(worst.into_result(law.name(), cfg))
        }
        LawId::Neutral0 => {
            let d = need(ops.disjunction, law, "disjunction")?;
            Ok(pointwise_identity(law, cfg, |y| (d.eval(0.0, y), y)))
        }
    }
}

/// `value = target` for every 1-D grid point, worst defect wins.
fn pointwise_identity(
    law: LawId,
    cfg: &NumericConfig,
    f: impl Fn(f64) -> (f64, f64),
) -> CheckResult {
    let mut worst = WorstWitness::new();
    for &y in &cfg.grid_points_1d() {
        let (value, target) = f(y);
        let defect = (value - target).abs();
        if defect > cfg.eps_eq {
            worst.offer(defect, || {
                Witness::new(
                    vec![y],
                    vec![value, target],
                    format!("value {value}, expected {target}"),
                )
            });
        }
    }
    worst.into_result(law.name(), cfg)
}

fn scan_equals_one(
    worst: &mut WorstWitness,
    cfg: &NumericConfig,
    f: impl Fn(f64) -> f64,
    label: &str,
) {
    for &x in &cfg.grid_points_1d() {
        let v = f(x);
        if v < 1.0 - cfg.eps_one {
            worst.offer(1.0 - v, || {
                Witness::new(vec![x], vec![v], format!("{label} = {v} at x = {x}"))
            });
        }
    }
}

fn equals_one(law: LawId, cfg: &NumericConfig, f: impl Fn(f64) -> f64, label: &str) -> CheckResult {
    let mut worst = WorstWitness::new();
    scan_equals_one(&mut worst, cfg, f, label);
    worst.into_result(law.name(), cfg)
}

fn scan_equals_zero(
    worst: &mut WorstWitness,
    cfg: &NumericConfig,
    f: impl Fn(f64) -> f64,
    label: &str,
) {
    for &x in &cfg.grid_points_1d() {
        let v = f(x);
        if v > cfg.eps_zero {
            worst.offer(v, || {
                Witness::new(vec![x], vec![v], format!("{label} = {v} at x = {x}"))
            });
        }
    }
}

fn equals_zero(law: LawId, cfg: &NumericConfig, f: impl Fn(f64) -> f64, label: &str) -> CheckResult {
    let mut worst = WorstWitness::new();
    scan_equals_zero(&mut worst, cfg, f, label);
    worst.into_result(law.name(), cfg)
}

/// `lhs = rhs` over all grid pairs.
fn pair_identity(
    law: LawId,
    cfg: &NumericConfig,
    f: impl Fn(f64, f64) -> (f64, f64),
) -> CheckResult {
    let pts = cfg.grid_points_2d();
    let mut worst = WorstWitness::new();
    for &x in &pts {
        for &y in &pts {
            let (lhs, rhs) = f(x, y);
            let defect = (lhs - rhs).abs();
            if defect > cfg.eps_eq {
                worst.offer(defect, || {
                    Witness::new(
                        vec![x, y],
                        vec![lhs, rhs],
                        format!("{lhs} vs {rhs} at ({x}, {y})"),
                    )
                });
            }
        }
    }
    worst.into_result(law.name(), cfg)
}

fn exchange_principle(i: &BinaryConnective, cfg: &NumericConfig) -> CheckResult {
    let pts = cfg.grid_points_2d();
    let stride = triple_stride(pts.len());
    let idx: Vec<usize> = (0..pts.len()).step_by(stride).chain([pts.len() - 1]).collect();
    let mut worst = WorstWitness::new();
    for &a in &idx {
        for &b in &idx {
            for &c in &idx {
                let (x, y, z) = (pts[a], pts[b], pts[c]);
                let lhs = i.eval(x, i.eval(y, z));
                let rhs = i.eval(y, i.eval(x, z));
                let defect = (lhs - rhs).abs();
                if defect > cfg.eps_eq {
                    worst.offer(defect, || {
                        Witness::new(
                            vec![x, y, z],
                            vec![lhs, rhs],
                            format!("I(x, I(y, z)) = {lhs} vs I(y, I(x, z)) = {rhs}"),
                        )
                    });
                }
            }
        }
    }
    worst.into_result(LawId::Ep.name(), cfg)
}

fn ordering_property(i: &BinaryConnective, cfg: &NumericConfig) -> CheckResult {
    let pts = cfg.grid_points_2d();
    let mut worst = WorstWitness::new();
    for &x in &pts {
        for &y in &pts {
            let v = i.eval(x, y);
            // "= 1" read exactly: a value of exactly 1 asserts x <= y
            if v == 1.0 && x > y + cfg.eps_eq {
                worst.offer(x - y, || {
                    Witness::new(
                        vec![x, y],
                        vec![v],
                        format!("I({x}, {y}) = 1 although x > y"),
                    )
                });
            }
            if x <= y && v < 1.0 - cfg.eps_one {
                worst.offer(1.0 - v, || {
                    Witness::new(
                        vec![x, y],
                        vec![v],
                        format!("I({x}, {y}) = {v} although x <= y"),
                    )
                });
            }
        }
    }
    worst.into_result(LawId::Op.name(), cfg)
}

/// Condition: sections through equal extracted-negation values must agree.
fn equal_negation_sections(f: &BinaryConnective, cfg: &NumericConfig) -> CheckResult {
    let pts = cfg.grid_points_2d();
    let nf: Vec<f64> = pts.iter().map(|&x| f.eval(x, 0.0)).collect();
    let mut worst = WorstWitness::new();
    for a in 0..pts.len() {
        for b in a + 1..pts.len() {
            if (nf[a] - nf[b]).abs() > cfg.eps_eq {
                continue;
            }
            for &y in &pts {
                let (va, vb) = (f.eval(pts[a], y), f.eval(pts[b], y));
                let defect = (va - vb).abs();
                if defect > cfg.eps_eq {
                    worst.offer(defect, || {
                        Witness::new(
                            vec![pts[a], pts[b], y],
                            vec![va, vb],
                            format!(
                                "N_F({}) = N_F({}) but F({}, {y}) = {va} vs F({}, {y}) = {vb}",
                                pts[a], pts[b], pts[a], pts[b]
                            ),
                        )
                    });
                }
            }
        }
    }
    worst.into_result(LawId::Cond47.name(), cfg)
}

/// Convenience wrapper: checks the continuity of the extracted negation
/// `x -> F(x, 0)` of any binary map. Used by the independence-table checks.
pub fn extracted_negation_continuous(f: &BinaryConnective, cfg: &NumericConfig) -> bool {
    let inner = f.clone();
    let breakpoints = f.section_breakpoints(crate::expr::Axis::Y, 0.0);
    let nf = UnaryFunction::from_fn(format!("N[{}]", f.name()), breakpoints, move |x| {
        inner.eval(x, 0.0)
    });
    unary_continuity(&nf, cfg).continuous()
}

/// One-sided continuity verdict of a binary connective along both arguments,
/// used as a theorem precondition.
pub(crate) fn one_sided_continuous(
    b: &BinaryConnective,
    side: Side,
    cfg: &NumericConfig,
) -> bool {
    let scan = super::continuity::detect_continuity_2d(b, cfg);
    match side {
        Side::Below => scan.left_continuous,
        Side::Above => scan.right_continuous,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connective::{ConnectiveKind, DeclaredFlags};

    fn cfg() -> NumericConfig {
        NumericConfig {
            grid_1d: 257,
            grid_2d: 65,
            ..NumericConfig::default()
        }
    }

    fn implication(name: &str, src: &str) -> BinaryConnective {
        BinaryConnective::parse(name, ConnectiveKind::Implication, DeclaredFlags::none(), src)
            .unwrap()
    }

    #[test]
    fn goedel_implication_laws() {
        let i = implication("I_GD", "piece(x <= y : 1 ; else : y)");
        let n_s = UnaryFunction::parse("N_S", "1 - x").unwrap();
        let c = cfg();
        assert!(check_law(LawId::Np, &LawOperands::implication(&i), &c)
            .unwrap()
            .holds_verdict());
        assert!(check_law(LawId::Ip, &LawOperands::implication(&i), &c)
            .unwrap()
            .holds_verdict());
        assert!(check_law(LawId::Op, &LawOperands::implication(&i), &c)
            .unwrap()
            .holds_verdict());
        assert!(check_law(LawId::Ep, &LawOperands::implication(&i), &c)
            .unwrap()
            .holds_verdict());
        // contraposition with the standard negation fails for the Goedel form
        let r = check_law(
            LawId::Cp,
            &LawOperands::implication(&i).with_negation(&n_s),
            &c,
        )
        .unwrap();
        assert!(!r.holds_verdict());
    }

    #[test]
    fn excluded_middle_fails_on_the_lifted_square() {
        let d = BinaryConnective::parse(
            "remark41_D",
            ConnectiveKind::Disjunction,
            DeclaredFlags::none(),
            "piece(x + y > 1 : 1 ; else : pow(x, 2) + pow(y, 2))",
        )
        .unwrap();
        let n_s = UnaryFunction::parse("N_S", "1 - x").unwrap();
        let c = cfg();
        let lem = check_law(LawId::Lem, &LawOperands::disjunction_negation(&d, &n_s), &c).unwrap();
        assert!(!lem.holds_verdict());
        let w = lem.witness.unwrap();
        // the worst witness is the middle of the square
        assert!((w.point[0] - 0.5).abs() < 1e-12, "witness {:?}", w.point);
        assert!((w.values[0] - 0.5).abs() < 1e-12);

        // yet both induced-negation inequalities hold
        let ineq =
            check_law(LawId::LemIneq, &LawOperands::disjunction_negation(&d, &n_s), &c).unwrap();
        assert!(ineq.holds_verdict(), "{ineq}");
    }

    #[test]
    fn ordering_property_witnesses() {
        // constant 1 fails the "= 1 forces x <= y" direction
        let top = implication("top", "max(x*y, 1)");
        let r = check_law(LawId::Op, &LawOperands::implication(&top), &cfg()).unwrap();
        assert!(!r.holds_verdict());
        let w = r.witness.unwrap();
        assert!(w.point[0] > w.point[1]);
    }

    #[test]
    fn section_condition_fails_for_step_implication() {
        let i_rs = implication("I_RS", "piece(x <= y : 1 ; else : 0)");
        let r = check_law(LawId::Cond47, &LawOperands::implication(&i_rs), &cfg()).unwrap();
        assert!(!r.holds_verdict());
        let w = r.witness.unwrap();
        // witness: two positive x with equal N_F but different sections
        assert!(w.point[0] > 0.0 && w.point[1] > w.point[0]);
        assert_eq!(w.values, vec![1.0, 0.0]);
        // the reported triple reproduces the violation
        assert_eq!(i_rs.eval(w.point[0], w.point[2]), 1.0);
        assert_eq!(i_rs.eval(w.point[1], w.point[2]), 0.0);
    }

    #[test]
    fn missing_operand_is_a_signature_mismatch() {
        let err = check_law(LawId::Lem, &LawOperands::default(), &cfg()).unwrap_err();
        assert!(matches!(err, AnalysisError::SignatureMismatch { .. }));
    }

    #[test]
    fn law_ids_roundtrip_through_strings() {
        for law in LawId::ALL {
            assert_eq!(law.name().parse::<LawId>().unwrap(), law);
        }
        assert!("NOPE".parse::<LawId>().is_err());
    }
}
