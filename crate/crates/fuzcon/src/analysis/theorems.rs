//! Theorem conclusions checked on concrete operands.
//!
//! Each entry verifies the *conclusion* of one characterization result after
//! establishing its hypotheses numerically. Hypotheses that cannot be
//! established yield `PreconditionFailed` naming the missing one; conclusions
//! are then checked with worst-violation witnesses. Equivalence statements
//! are checked as verdict agreement of their two sides; round-trip statements
//! as sup-norm distances on the grid.

use super::classify::classify_negation;
use super::continuity::{detect_continuity_2d, unary_continuity, Side};
use super::laws::{check_law, one_sided_continuous, AnalysisError, LawId, LawOperands, WorstWitness};
use crate::config::NumericConfig;
use crate::connective::{BinaryConnective, UnaryFunction};
use crate::expr::Axis;
use crate::induce::{
    self, aleph, implication_from_dn, natural_negation_of_conjunction,
    natural_negation_of_disjunction,
};
use crate::report::{CheckResult, Witness};
use crate::validate::{kind_validation, validate_negation};
use std::fmt;
use std::str::FromStr;

/// Identifiers of the verifiable theorem conclusions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TheoremId {
    /// Strong negations are strict.
    Lemma21,
    /// `N1 ∘ N2 = id` forces `N1` continuous and `N2` strictly decreasing.
    Lemma22,
    /// The ordering property implies the identity principle.
    Lemma23,
    /// Left-continuous conjunctions: the zero-set supremum is attained, the
    /// membership biconditional holds, and the induced negation is
    /// left-continuous.
    Prop31,
    /// Commutative conjunctions: continuity of the induced negation implies
    /// it is strong; discontinuity implies it is not strictly decreasing.
    Prop32,
    /// Commutative conjunctions: the four classification flags of the
    /// induced negation agree.
    Thm31,
    /// Dual of `Prop31` for right-continuous disjunctions.
    Prop33,
    /// Dual of `Prop32` for commutative disjunctions.
    Prop34,
    /// Dual of `Thm31` for commutative disjunctions.
    Thm32,
    /// Right-continuous disjunctions: excluded middle is equivalent to the
    /// induced-negation inequalities.
    Prop41,
    /// Left-continuous conjunctions: contradiction is equivalent to the dual
    /// inequalities.
    Prop42,
    /// `D(N(x), y)` is always an implication; neutrality corresponds to 0
    /// being a left neutral element; commutative+associative gives the
    /// exchange principle.
    Lemma43,
    /// Identity principle iff excluded middle holds in its first half; for
    /// commutative disjunctions the ordering property characterization.
    Prop44,
    /// The five properties of implications induced with the disjunction's
    /// own natural negation.
    Prop45,
    /// The patched pseudo-inverse of a continuous negation is a strictly
    /// decreasing negation satisfying the recovery identities.
    Lemma45,
    /// Round-trip: an implication with continuous extracted negation and the
    /// section condition is exactly `D_I(N_I(x), y)`, with `D_I` right
    /// neutral at 0, and the representation is pinned on the range of `N_I`.
    Thm41,
    /// Round-trip under a strict extracted negation (section condition is
    /// automatic).
    Cor41,
    /// Round-trip under a strong extracted negation.
    Cor42,
    /// Continuity transfer: with a strict extracted negation, the
    /// implication is continuous iff the rebuilt disjunction is.
    Thm42,
    /// Second-argument monotonicity + right contraposition w.r.t. the
    /// extracted negation characterize implications rebuilt from commutative
    /// disjunctions with neutral element 0.
    Lemma48,
    /// `Lemma48` with the disjunction's natural negation; the natural
    /// negation of the rebuilt disjunction is compared against the extracted
    /// one.
    Thm43,
}

impl TheoremId {
    pub const ALL: [TheoremId; 21] = [
        TheoremId::Lemma21,
        TheoremId::Lemma22,
        TheoremId::Lemma23,
        TheoremId::Prop31,
        TheoremId::Prop32,
        TheoremId::Thm31,
        TheoremId::Prop33,
        TheoremId::Prop34,
        TheoremId::Thm32,
        TheoremId::Prop41,
        TheoremId::Prop42,
        TheoremId::Lemma43,
        TheoremId::Prop44,
        TheoremId::Prop45,
        TheoremId::Lemma45,
        TheoremId::Thm41,
        TheoremId::Cor41,
        TheoremId::Cor42,
        TheoremId::Thm42,
        TheoremId::Lemma48,
        TheoremId::Thm43,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::Lemma21 => "LEMMA_2_1",
            TheoremId::Lemma22 => "LEMMA_2_2",
            TheoremId::Lemma23 => "LEMMA_2_3",
            TheoremId::Prop31 => "PROP_3_1",
            TheoremId::Prop32 => "PROP_3_2",
            TheoremId::Thm31 => "THM_3_1",
            TheoremId::Prop33 => "PROP_3_3",
            TheoremId::Prop34 => "PROP_3_4",
            TheoremId::Thm32 => "THM_3_2",
            TheoremId::Prop41 => "PROP_4_1",
            TheoremId::Prop42 => "PROP_4_2",
            TheoremId::Lemma43 => "LEMMA_4_3",
            TheoremId::Prop44 => "PROP_4_4",
            TheoremId::Prop45 => "PROP_4_5",
            TheoremId::Lemma45 => "LEMMA_4_5",
            TheoremId::Thm41 => "THM_4_1",
            TheoremId::Cor41 => "COR_4_1",
            TheoremId::Cor42 => "COR_4_2",
            TheoremId::Thm42 => "THM_4_2",
            TheoremId::Lemma48 => "LEMMA_4_8",
            TheoremId::Thm43 => "THM_4_3",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = AnalysisError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let needle = s.to_ascii_uppercase();
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name() == needle)
            .ok_or_else(|| AnalysisError::UnknownTheorem(s.to_string()))
    }
}

/// Accumulates the sub-conclusions of a compound theorem.
struct Conclusions {
    law_id: &'static str,
    notes: Vec<String>,
    witness: Option<Witness>,
}

impl Conclusions {
    fn new(law_id: &'static str) -> Self {
        Conclusions {
            law_id,
            notes: Vec::new(),
            witness: None,
        }
    }

    fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    fn require(&mut self, label: &str, ok: bool, witness: impl FnOnce() -> Witness) {
        if ok {
            self.notes.push(format!("{label}: holds"));
        } else {
            let w = witness();
            self.notes.push(format!("{label}: fails ({})", w.detail));
            if self.witness.is_none() {
                self.witness = Some(w);
            }
        }
    }

    fn require_check(&mut self, label: &str, check: &CheckResult) {
        self.require(label, check.holds_verdict(), || {
            check
                .witness
                .clone()
                .unwrap_or_else(|| Witness::new(vec![], vec![], format!("{label} failed")))
        });
    }

    /// Requires two verdicts to agree (equivalence statements).
    fn require_agreement(&mut self, label: &str, lhs: &CheckResult, rhs: &CheckResult) {
        let ok = lhs.holds_verdict() == rhs.holds_verdict();
        self.require(label, ok, || {
            let side = if lhs.holds_verdict() { rhs } else { lhs };
            side.witness.clone().unwrap_or_else(|| {
                Witness::new(
                    vec![],
                    vec![],
                    format!(
                        "{label}: sides disagree ({} vs {})",
                        lhs.verdict, rhs.verdict
                    ),
                )
            })
        });
    }

    fn finish(self, cfg: &NumericConfig) -> CheckResult {
        let mut result = match self.witness {
            None => CheckResult::holds(self.law_id, cfg),
            Some(w) => CheckResult::fails(self.law_id, w, cfg),
        };
        result.notes = self.notes;
        result
    }
}

fn need<'a, T>(
    slot: Option<&'a T>,
    thm: TheoremId,
    missing: &'static str,
) -> Result<&'a T, AnalysisError> {
    slot.ok_or(AnalysisError::SignatureMismatch {
        law: thm.to_string(),
        missing,
    })
}

fn precondition(thm: TheoremId, missing: impl Into<String>, cfg: &NumericConfig) -> CheckResult {
    CheckResult::precondition_failed(thm.name(), missing, cfg)
}

fn verified_commutative(b: &BinaryConnective, cfg: &NumericConfig) -> bool {
    if let Some(g) = b.grid() {
        return g.is_symmetric();
    }
    let pts = cfg.grid_points_2d();
    pts.iter().all(|&x| {
        pts.iter()
            .all(|&y| (b.eval(x, y) - b.eval(y, x)).abs() <= cfg.eps_eq)
    })
}

fn verified_associative(b: &BinaryConnective, cfg: &NumericConfig) -> bool {
    let pts = cfg.grid_points_2d();
    let stride = crate::validate::triple_stride(pts.len());
    let idx: Vec<usize> = (0..pts.len()).step_by(stride).chain([pts.len() - 1]).collect();
    idx.iter().all(|&a| {
        idx.iter().all(|&b_| {
            idx.iter().all(|&c| {
                let (x, y, z) = (pts[a], pts[b_], pts[c]);
                (b.eval(b.eval(x, y), z) - b.eval(x, b.eval(y, z))).abs() <= cfg.eps_eq
            })
        })
    })
}

fn extracted_negation(i: &BinaryConnective) -> UnaryFunction {
    let inner = i.clone();
    let breakpoints = i.section_breakpoints(Axis::Y, 0.0);
    UnaryFunction::from_fn(format!("N[{}]", i.name()), breakpoints, move |x| {
        inner.eval(x, 0.0)
    })
}

fn sup_diff_unary(f: &UnaryFunction, g: &UnaryFunction, pts: &[f64]) -> (f64, f64) {
    let mut worst = (0.0, 0.0);
    for &x in pts {
        let d = (f.eval(x) - g.eval(x)).abs();
        if d > worst.1 {
            worst = (x, d);
        }
    }
    worst
}

/// Verifies one theorem conclusion against the operands.
pub fn verify_theorem(
    thm: TheoremId,
    ops: &LawOperands<'_>,
    cfg: &NumericConfig,
) -> Result<CheckResult, AnalysisError> {
    match thm {
        TheoremId::Lemma21 => {
            let n = need(ops.negation, thm, "negation")?;
            if !validate_negation(n, cfg).holds_verdict() {
                return Ok(precondition(thm, "fuzzy negation", cfg));
            }
            let r = classify_negation(n, cfg);
            let mut out = Conclusions::new(thm.name());
            out.note(format!(
                "strong: {}, strict: {}",
                r.strong.holds, r.strict.holds
            ));
            out.require("strong implies strict", !r.strong.holds || r.strict.holds, || {
                r.strict
                    .witness
                    .clone()
                    .unwrap_or_else(|| Witness::new(vec![], vec![], "strict fails"))
            });
            Ok(out.finish(cfg))
        }
        TheoremId::Lemma22 => {
            let n1 = need(ops.negation, thm, "negation")?;
            let n2 = need(ops.second_negation, thm, "second_negation")?;
            if !validate_negation(n1, cfg).holds_verdict()
                || !validate_negation(n2, cfg).holds_verdict()
            {
                return Ok(precondition(thm, "two fuzzy negations", cfg));
            }
            let mut worst = (0.0f64, 0.0f64);
            for &x in &cfg.grid_points_1d() {
                let d = (n1.eval(n2.eval(x)) - x).abs();
                if d > worst.1 {
                    worst = (x, d);
                }
            }
            if worst.1 > cfg.eps_eq {
                return Ok(precondition(
                    thm,
                    format!("N1∘N2 = id (off by {} at x = {})", worst.1, worst.0),
                    cfg,
                ));
            }
            let r1 = classify_negation(n1, cfg);
            let r2 = classify_negation(n2, cfg);
            let mut out = Conclusions::new(thm.name());
            out.require("first factor continuous", r1.continuous.holds, || {
                r1.continuous.witness.clone().unwrap()
            });
            out.require(
                "second factor strictly decreasing",
                r2.strictly_decreasing.holds,
                || r2.strictly_decreasing.witness.clone().unwrap(),
            );
            Ok(out.finish(cfg))
        }
        TheoremId::Lemma23 => {
            let i = need(ops.implication, thm, "implication")?;
            if !kind_validation(i, cfg, cfg.grid_2d).holds_verdict() {
                return Ok(precondition(thm, "fuzzy implication (I1)-(I5)", cfg));
            }
            let op = check_law(LawId::Op, &LawOperands::implication(i), cfg)?;
            let ip = check_law(LawId::Ip, &LawOperands::implication(i), cfg)?;
            let mut out = Conclusions::new(thm.name());
            out.note(format!("OP: {}, IP: {}", op.verdict, ip.verdict));
            out.require("ordering implies identity", !op.holds_verdict() || ip.holds_verdict(), || {
                ip.witness.clone().unwrap()
            });
            Ok(out.finish(cfg))
        }
        TheoremId::Prop31 => {
            let c = need(ops.conjunction, thm, "conjunction")?;
            if !kind_validation(c, cfg, cfg.grid_2d).holds_verdict() {
                return Ok(precondition(thm, "fuzzy conjunction", cfg));
            }
            if !one_sided_continuous(c, Side::Below, cfg) {
                return Ok(precondition(thm, "left-continuity", cfg));
            }
            let induced = match natural_negation_of_conjunction(c, cfg) {
                Ok(i) => i,
                Err(e) => return Ok(precondition(thm, e.to_string(), cfg)),
            };
            let nc = &induced.function;
            let mut out = Conclusions::new(thm.name());

            let mut attained = WorstWitness::new();
            for &x in &cfg.grid_points_1d() {
                let v = c.eval(x, nc.eval(x));
                if v > cfg.eps_zero {
                    attained.offer(v, || {
                        Witness::new(vec![x], vec![v], format!("C(x, N_C(x)) = {v} at x = {x}"))
                    });
                }
            }
            let attained = attained.into_result("max-attained", cfg);
            out.require_check("zero-set supremum attained", &attained);

            let pts = cfg.grid_points_2d();
            let mut bicond = WorstWitness::new();
            for &x in &pts {
                let ncx = nc.eval(x);
                for &y in &pts {
                    let lhs = c.eval(x, y) <= cfg.eps_zero;
                    let rhs = ncx >= y - cfg.eps_eq;
                    if lhs != rhs {
                        bicond.offer(1.0, || {
                            Witness::new(
                                vec![x, y],
                                vec![c.eval(x, y), ncx],
                                format!(
                                    "C = {} but N_C(x) = {ncx} at ({x}, {y})",
                                    c.eval(x, y)
                                ),
                            )
                        });
                    }
                }
            }
            out.require_check("membership biconditional", &bicond.into_result("eq-3-3", cfg));

            let r = classify_negation(nc, cfg);
            out.require("induced negation left-continuous", r.left_continuous.holds, || {
                r.left_continuous.witness.clone().unwrap()
            });
            Ok(out.finish(cfg))
        }
        TheoremId::Prop33 => {
            let d = need(ops.disjunction, thm, "disjunction")?;
            if !kind_validation(d, cfg, cfg.grid_2d).holds_verdict() {
                return Ok(precondition(thm, "fuzzy disjunction", cfg));
            }
            if !one_sided_continuous(d, Side::Above, cfg) {
                return Ok(precondition(thm, "right-continuity", cfg));
            }
            let induced = match natural_negation_of_disjunction(d, cfg) {
                Ok(i) => i,
                Err(e) => return Ok(precondition(thm, e.to_string(), cfg)),
            };
            let nd = &induced.function;
            let mut out = Conclusions::new(thm.name());

            let mut attained = WorstWitness::new();
            for &x in &cfg.grid_points_1d() {
                let v = d.eval(x, nd.eval(x));
                if v < 1.0 - cfg.eps_one {
                    attained.offer(1.0 - v, || {
                        Witness::new(vec![x], vec![v], format!("D(x, N_D(x)) = {v} at x = {x}"))
                    });
                }
            }
            out.require_check(
                "one-set infimum attained",
                &attained.into_result("min-attained", cfg),
            );

            let pts = cfg.grid_points_2d();
            let mut bicond = WorstWitness::new();
            for &x in &pts {
                let ndx = nd.eval(x);
                for &y in &pts {
                    let lhs = d.eval(x, y) >= 1.0 - cfg.eps_one;
                    let rhs = ndx <= y + cfg.eps_eq;
                    if lhs != rhs {
                        bicond.offer(1.0, || {
                            Witness::new(
                                vec![x, y],
                                vec![d.eval(x, y), ndx],
                                format!("D = {} but N_D(x) = {ndx} at ({x}, {y})", d.eval(x, y)),
                            )
                        });
                    }
                }
            }
            out.require_check("membership biconditional", &bicond.into_result("eq-3-7", cfg));

            let r = classify_negation(nd, cfg);
            out.require(
                "induced negation right-continuous",
                r.right_continuous.holds,
                || r.right_continuous.witness.clone().unwrap(),
            );
            Ok(out.finish(cfg))
        }
        TheoremId::Prop32 | TheoremId::Thm31 => {
            let c = need(ops.conjunction, thm, "conjunction")?;
            if !kind_validation(c, cfg, cfg.grid_2d).holds_verdict() {
                return Ok(precondition(thm, "fuzzy conjunction", cfg));
            }
            if !verified_commutative(c, cfg) {
                return Ok(precondition(thm, "commutativity", cfg));
            }
            let induced = match natural_negation_of_conjunction(c, cfg) {
                Ok(i) => i,
                Err(e) => return Ok(precondition(thm, e.to_string(), cfg)),
            };
            if !induced.is_negation {
                return Ok(precondition(thm, "induced map is a fuzzy negation", cfg));
            }
            Ok(equivalence_conclusion(thm, &induced.function, cfg))
        }
        TheoremId::Prop34 | TheoremId::Thm32 => {
            let d = need(ops.disjunction, thm, "disjunction")?;
            if !kind_validation(d, cfg, cfg.grid_2d).holds_verdict() {
                return Ok(precondition(thm, "fuzzy disjunction", cfg));
            }
            if !verified_commutative(d, cfg) {
                return Ok(precondition(thm, "commutativity", cfg));
            }
            let induced = match natural_negation_of_disjunction(d, cfg) {
                Ok(i) => i,
                Err(e) => return Ok(precondition(thm, e.to_string(), cfg)),
            };
            if !induced.is_negation {
                return Ok(precondition(thm, "induced map is a fuzzy negation", cfg));
            }
            Ok(equivalence_conclusion(thm, &induced.function, cfg))
        }
        TheoremId::Prop41 => {
            let d = need(ops.disjunction, thm, "disjunction")?;
            let n = need(ops.negation, thm, "negation")?;
            if !kind_validation(d, cfg, cfg.grid_2d).holds_verdict() {
                return Ok(precondition(thm, "fuzzy disjunction", cfg));
            }
            if !validate_negation(n, cfg).holds_verdict() {
                return Ok(precondition(thm, "fuzzy negation", cfg));
            }
            if !one_sided_continuous(d, Side::Above, cfg) {
                return Ok(precondition(thm, "right-continuity", cfg));
            }
            let ops2 = LawOperands::disjunction_negation(d, n);
            let lem = check_law(LawId::Lem, &ops2, cfg)?;
            let ineq = check_law(LawId::LemIneq, &ops2, cfg)?;
            let mut out = Conclusions::new(thm.name());
            out.note(format!("LEM: {}, LEM_INEQ: {}", lem.verdict, ineq.verdict));
            out.require_agreement("excluded middle iff inequalities", &lem, &ineq);
            Ok(out.finish(cfg))
        }
        TheoremId::Prop42 => {
            let c = need(ops.conjunction, thm, "conjunction")?;
            let n = need(ops.negation, thm, "negation")?;
            if !kind_validation(c, cfg, cfg.grid_2d).holds_verdict() {
                return Ok(precondition(thm, "fuzzy conjunction", cfg));
            }
            if !validate_negation(n, cfg).holds_verdict() {
                return Ok(precondition(thm, "fuzzy negation", cfg));
            }
            if !one_sided_continuous(c, Side::Below, cfg) {
                return Ok(precondition(thm, "left-continuity", cfg));
            }
            let ops2 = LawOperands::conjunction_negation(c, n);
            let lc = check_law(LawId::Lc, &ops2, cfg)?;
            let ineq = check_law(LawId::LcIneq, &ops2, cfg)?;
            let mut out = Conclusions::new(thm.name());
            out.note(format!("LC: {}, LC_INEQ: {}", lc.verdict, ineq.verdict));
            out.require_agreement("contradiction iff inequalities", &lc, &ineq);
            Ok(out.finish(cfg))
        }
        TheoremId::Lemma43 => {
            let d = need(ops.disjunction, thm, "disjunction")?;
            let n = need(ops.negation, thm, "negation")?;
            let composed = match implication_from_dn(d, n, cfg) {
                Ok(i) => i,
                Err(e) => return Ok(precondition(thm, e.to_string(), cfg)),
            };
            let mut out = Conclusions::new(thm.name());
            out.require_check(
                "composition satisfies (I1)-(I5)",
                &kind_validation(&composed, cfg, cfg.grid_2d),
            );
            let np = check_law(LawId::Np, &LawOperands::implication(&composed), cfg)?;
            let neutral = check_law(
                LawId::Neutral0,
                &LawOperands {
                    disjunction: Some(d),
                    ..LawOperands::default()
                },
                cfg,
            )?;
            out.note(format!("NP: {}, NEUTRAL_0: {}", np.verdict, neutral.verdict));
            out.require_agreement("neutrality iff left neutral element 0", &np, &neutral);
            if verified_commutative(d, cfg) && verified_associative(d, cfg) {
                let ep = check_law(LawId::Ep, &LawOperands::implication(&composed), cfg)?;
                out.require_check("exchange principle (commutative+associative)", &ep);
            } else {
                out.note("exchange clause skipped: commutativity+associativity not established");
            }
            Ok(out.finish(cfg))
        }
        TheoremId::Prop44 => {
            let d = need(ops.disjunction, thm, "disjunction")?;
            let n = need(ops.negation, thm, "negation")?;
            let composed = match implication_from_dn(d, n, cfg) {
                Ok(i) => i,
                Err(e) => return Ok(precondition(thm, e.to_string(), cfg)),
            };
            let ops_dn = LawOperands::disjunction_negation(d, n);
            let ip = check_law(LawId::Ip, &LawOperands::implication(&composed), cfg)?;
            let lem1 = check_law(LawId::Lem1, &ops_dn, cfg)?;
            let mut out = Conclusions::new(thm.name());
            out.note(format!("IP: {}, LEM1: {}", ip.verdict, lem1.verdict));
            out.require_agreement("identity principle iff first excluded-middle half", &ip, &lem1);

            if verified_commutative(d, cfg) {
                let induced = match natural_negation_of_disjunction(d, cfg) {
                    Ok(i) => i,
                    Err(e) => return Ok(precondition(thm, e.to_string(), cfg)),
                };
                let op = check_law(LawId::Op, &LawOperands::implication(&composed), cfg)?;
                let (at, diff) =
                    sup_diff_unary(n, &induced.function, &cfg.grid_points_1d());
                let n_strong = classify_negation(n, cfg).strong.holds;
                let nd_strong = classify_negation(&induced.function, cfg).strong.holds;
                let rhs_ok =
                    lem1.holds_verdict() && diff <= cfg.eps_eq && n_strong && nd_strong;
                out.note(format!(
                    "OP: {}; N = N_D within {diff} (worst at {at}); strong: {n_strong}/{nd_strong}",
                    op.verdict
                ));
                out.require(
                    "ordering characterization (commutative case)",
                    op.holds_verdict() == rhs_ok,
                    || {
                        op.witness.clone().unwrap_or_else(|| {
                            Witness::new(
                                vec![at],
                                vec![n.eval(at), induced.function.eval(at)],
                                "ordering-property characterization sides disagree",
                            )
                        })
                    },
                );
            } else {
                out.note("ordering clause skipped: commutativity not established");
            }
            Ok(out.finish(cfg))
        }
        TheoremId::Prop45 => {
            let d = need(ops.disjunction, thm, "disjunction")?;
            if !kind_validation(d, cfg, cfg.grid_2d).holds_verdict() {
                return Ok(precondition(thm, "fuzzy disjunction", cfg));
            }
            let induced = match natural_negation_of_disjunction(d, cfg) {
                Ok(i) => i,
                Err(e) => return Ok(precondition(thm, e.to_string(), cfg)),
            };
            if !induced.is_negation {
                return Ok(precondition(thm, "natural negation is a fuzzy negation", cfg));
            }
            let nd = induced.function;
            let composed = match implication_from_dn(d, &nd, cfg) {
                Ok(i) => i,
                Err(e) => return Ok(precondition(thm, e.to_string(), cfg)),
            };
            let i_ops = LawOperands::implication(&composed);
            let dn_ops = LawOperands::disjunction_negation(d, &nd);
            let mut out = Conclusions::new(thm.name());

            let np = check_law(LawId::Np, &i_ops, cfg)?;
            let neutral = check_law(
                LawId::Neutral0,
                &LawOperands {
                    disjunction: Some(d),
                    ..LawOperands::default()
                },
                cfg,
            )?;
            out.require_agreement("neutrality iff left neutral element 0", &np, &neutral);

            let comm = verified_commutative(d, cfg);
            if comm && verified_associative(d, cfg) {
                let ep = check_law(LawId::Ep, &i_ops, cfg)?;
                out.require_check("exchange principle", &ep);
            } else {
                out.note("exchange clause skipped: commutativity+associativity not established");
            }

            let ip = check_law(LawId::Ip, &i_ops, cfg)?;
            let lem1 = check_law(LawId::Lem1, &dn_ops, cfg)?;
            out.require_agreement("identity principle iff first excluded-middle half", &ip, &lem1);

            let op = check_law(LawId::Op, &i_ops, cfg)?;
            let strong = classify_negation(&nd, cfg);
            let rhs = lem1.holds_verdict() && strong.strong.holds;
            out.require(
                "ordering iff excluded-middle half and strong natural negation",
                op.holds_verdict() == rhs,
                || {
                    op.witness.clone().unwrap_or_else(|| {
                        Witness::new(vec![], vec![], "ordering characterization disagrees")
                    })
                },
            );

            if comm {
                let rcp = check_law(LawId::RCp, &i_ops.with_negation(&nd), cfg)?;
                out.require_check("right contraposition (commutative case)", &rcp);
                if strong.continuous.holds {
                    let lcp = check_law(LawId::LCp, &i_ops.with_negation(&nd), cfg)?;
                    let cp = check_law(LawId::Cp, &i_ops.with_negation(&nd), cfg)?;
                    out.require_check("left contraposition (continuous case)", &lcp);
                    out.require_check("contraposition (continuous case)", &cp);
                } else {
                    out.note("contraposition clauses skipped: natural negation not continuous");
                }
            } else {
                out.note("contraposition clauses skipped: commutativity not established");
            }
            Ok(out.finish(cfg))
        }
        TheoremId::Lemma45 => {
            let n = need(ops.negation, thm, "negation")?;
            if !validate_negation(n, cfg).holds_verdict() {
                return Ok(precondition(thm, "fuzzy negation", cfg));
            }
            if !unary_continuity(n, cfg).continuous() {
                return Ok(precondition(thm, "continuity", cfg));
            }
            let al = match aleph(n, cfg) {
                Ok(a) => a,
                Err(e) => return Ok(precondition(thm, e.to_string(), cfg)),
            };
            let mut out = Conclusions::new(thm.name());
            out.require_check("patched inverse is a negation", &validate_negation(&al, cfg));
            let r = classify_negation(&al, cfg);
            out.require("patched inverse strictly decreasing", r.strictly_decreasing.holds, || {
                r.strictly_decreasing.witness.clone().unwrap()
            });

            let mut recover = WorstWitness::new();
            for &x in &cfg.grid_points_1d() {
                let v = n.eval(al.eval(x));
                let defect = (v - x).abs();
                if defect > cfg.eps_eq {
                    recover.offer(defect, || {
                        Witness::new(vec![x], vec![v], format!("N(aleph({x})) = {v}"))
                    });
                }
            }
            out.require_check(
                "forward recovery identity",
                &recover.into_result("eq-4-3", cfg),
            );

            let mut on_range = WorstWitness::new();
            for &t in &cfg.grid_points_1d() {
                let x = al.eval(t);
                let v = al.eval(n.eval(x));
                let defect = (v - x).abs();
                if defect > cfg.eps_eq {
                    on_range.offer(defect, || {
                        Witness::new(vec![x], vec![v], format!("aleph(N({x})) = {v}"))
                    });
                }
            }
            out.require_check(
                "backward recovery on the range",
                &on_range.into_result("eq-4-4", cfg),
            );
            Ok(out.finish(cfg))
        }
        TheoremId::Thm41 | TheoremId::Cor41 | TheoremId::Cor42 => {
            let i = need(ops.implication, thm, "implication")?;
            if !kind_validation(i, cfg, cfg.grid_2d).holds_verdict() {
                return Ok(precondition(thm, "fuzzy implication (I1)-(I5)", cfg));
            }
            let n_i = extracted_negation(i);
            let r = classify_negation(&n_i, cfg);
            match thm {
                TheoremId::Thm41 => {
                    if !r.continuous.holds {
                        return Ok(precondition(thm, "continuity of the extracted negation", cfg));
                    }
                    let cond = check_law(LawId::Cond47, &LawOperands::implication(i), cfg)?;
                    if !cond.holds_verdict() {
                        return Ok(precondition(thm, "section condition", cfg));
                    }
                }
                TheoremId::Cor41 => {
                    if !r.strict.holds {
                        return Ok(precondition(thm, "strictness of the extracted negation", cfg));
                    }
                }
                TheoremId::Cor42 => {
                    if !r.strong.holds {
                        return Ok(precondition(thm, "strongness of the extracted negation", cfg));
                    }
                }
                _ => unreachable!(),
            }
            let d = match induce::disjunction_from_implication(i, cfg) {
                Ok(d) => d,
                Err(e) => return Ok(precondition(thm, e.to_string(), cfg)),
            };
            let mut out = Conclusions::new(thm.name());
            out.require_check(
                "rebuilt map is a fuzzy disjunction",
                &kind_validation(&d, cfg, cfg.grid_2d),
            );

            let pts = cfg.grid_points_2d();
            let mut rebuild = WorstWitness::new();
            for &x in &pts {
                let nx = n_i.eval(x);
                for &y in &pts {
                    let (lhs, rhs) = (d.eval(nx, y), i.eval(x, y));
                    let defect = (lhs - rhs).abs();
                    if defect > cfg.eps_eq {
                        rebuild.offer(defect, || {
                            Witness::new(
                                vec![x, y],
                                vec![lhs, rhs],
                                format!("D_I(N_I(x), y) = {lhs} vs I = {rhs} at ({x}, {y})"),
                            )
                        });
                    }
                }
            }
            out.require_check(
                "round-trip equality (pins the representation on the range of the extracted negation)",
                &rebuild.into_result("roundtrip", cfg),
            );

            let mut neutral = WorstWitness::new();
            for &x in &cfg.grid_points_1d() {
                let v = d.eval(x, 0.0);
                let defect = (v - x).abs();
                if defect > cfg.eps_eq {
                    neutral.offer(defect, || {
                        Witness::new(vec![x], vec![v], format!("D_I({x}, 0) = {v}"))
                    });
                }
            }
            out.require_check(
                "0 is a right neutral element of the rebuilt disjunction",
                &neutral.into_result("right-neutral", cfg),
            );
            Ok(out.finish(cfg))
        }
        TheoremId::Thm42 => {
            let i = need(ops.implication, thm, "implication")?;
            if !kind_validation(i, cfg, cfg.grid_2d).holds_verdict() {
                return Ok(precondition(thm, "fuzzy implication (I1)-(I5)", cfg));
            }
            let extracted;
            let n = match ops.negation {
                Some(n) => n,
                None => {
                    extracted = extracted_negation(i);
                    &extracted
                }
            };
            let r = classify_negation(n, cfg);
            if !r.strict.holds {
                return Ok(precondition(thm, "strictness of the negation", cfg));
            }
            let d = match induce::disjunction_via_negation(i, n, cfg) {
                Ok(d) => d,
                Err(e) => return Ok(precondition(thm, e.to_string(), cfg)),
            };
            let ci = detect_continuity_2d(i, cfg);
            let cd = detect_continuity_2d(&d, cfg);
            let mut out = Conclusions::new(thm.name());
            out.note(format!(
                "implication continuous: {}, rebuilt disjunction continuous: {}",
                ci.continuous, cd.continuous
            ));
            out.require(
                "continuity transfers both ways",
                ci.continuous == cd.continuous,
                || {
                    let w = if ci.continuous { cd.witness } else { ci.witness };
                    match w {
                        Some(j) => Witness::new(
                            vec![j.x, j.y],
                            vec![j.jump],
                            format!("jump of {} at ({}, {})", j.jump, j.x, j.y),
                        ),
                        None => Witness::new(vec![], vec![], "continuity verdicts disagree"),
                    }
                },
            );
            Ok(out.finish(cfg))
        }
        TheoremId::Lemma48 | TheoremId::Thm43 => {
            let i = need(ops.implication, thm, "implication")?;
            let n_i = match induce::negation_of_implication(i, cfg) {
                Ok(n) => n,
                Err(e) => return Ok(precondition(thm, e.to_string(), cfg)),
            };
            let mut out = Conclusions::new(thm.name());
            if thm == TheoremId::Thm43 {
                out.note(
                    "statement fixes N = N_D; verified through the extracted negation, which \
                     coincides with the natural negation of the rebuilt disjunction below",
                );
            }

            // left side: (I2) + right contraposition + continuity
            let pts = cfg.grid_points_2d();
            let mut i2_ok = true;
            'i2: for &x in &pts {
                let mut prev = i.eval(x, 0.0);
                for &y in &pts[1..] {
                    let v = i.eval(x, y);
                    if v < prev - cfg.eps_eq {
                        i2_ok = false;
                        break 'i2;
                    }
                    prev = v;
                }
            }
            let rcp = check_law(
                LawId::RCp,
                &LawOperands::implication(i).with_negation(&n_i),
                cfg,
            )?;
            let n_continuous = unary_continuity(&n_i, cfg).continuous();
            let lhs = i2_ok && rcp.holds_verdict() && n_continuous;
            out.note(format!(
                "(I2): {i2_ok}, R-CP(N_I): {}, N_I continuous: {n_continuous}",
                rcp.verdict
            ));

            // right side: the rebuilt disjunction is commutative with neutral 0
            // and reproduces I
            let rhs = match induce::disjunction_via_negation(i, &n_i, cfg) {
                Err(_) => false,
                Ok(d) => {
                    let comm = verified_commutative(&d, cfg);
                    let mut neutral_ok = true;
                    let mut rebuild_ok = true;
                    for &x in &pts {
                        if (d.eval(0.0, x) - x).abs() > cfg.eps_eq
                            || (d.eval(x, 0.0) - x).abs() > cfg.eps_eq
                        {
                            neutral_ok = false;
                            break;
                        }
                    }
                    'rb: for &x in &pts {
                        let nx = n_i.eval(x);
                        for &y in &pts {
                            if (d.eval(nx, y) - i.eval(x, y)).abs() > cfg.eps_eq {
                                rebuild_ok = false;
                                break 'rb;
                            }
                        }
                    }
                    out.note(format!(
                        "rebuilt disjunction: commutative {comm}, neutral 0 {neutral_ok}, reproduces I {rebuild_ok}"
                    ));
                    if thm == TheoremId::Thm43 && comm && neutral_ok {
                        if let Ok(nat) = natural_negation_of_disjunction(&d, cfg) {
                            let (at, diff) =
                                sup_diff_unary(&nat.function, &n_i, &cfg.grid_points_1d());
                            out.note(format!(
                                "natural negation of rebuilt disjunction matches N_I within {diff} (worst at {at})"
                            ));
                        }
                    }
                    comm && neutral_ok && rebuild_ok
                }
            };
            out.require("characterization sides agree", lhs == rhs, || {
                Witness::new(
                    vec![],
                    vec![],
                    format!("left side {lhs} vs right side {rhs}"),
                )
            });
            Ok(out.finish(cfg))
        }
    }
}

/// The four-flag agreement conclusion shared by the two equivalence
/// theorems.
fn equivalence_conclusion(
    thm: TheoremId,
    induced: &UnaryFunction,
    cfg: &NumericConfig,
) -> CheckResult {
    let r = classify_negation(induced, cfg);
    let flags = r.equivalence_flags();
    let mut out = Conclusions::new(thm.name());
    out.note(format!(
        "strictly_decreasing: {}, continuous: {}, strict: {}, strong: {}",
        flags[0], flags[1], flags[2], flags[3]
    ));
    out.require("four classification flags agree", r.flags_agree(), || {
        let w = [
            &r.strictly_decreasing,
            &r.continuous,
            &r.strict,
            &r.strong,
        ]
        .iter()
        .find_map(|p| p.witness.clone());
        w.unwrap_or_else(|| Witness::new(vec![], vec![], "flag disagreement"))
    });
    out.finish(cfg)
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

    fn conj(name: &str, src: &str) -> BinaryConnective {
        BinaryConnective::parse(name, ConnectiveKind::Conjunction, DeclaredFlags::none(), src)
            .unwrap()
    }

    fn implication(name: &str, src: &str) -> BinaryConnective {
        BinaryConnective::parse(name, ConnectiveKind::Implication, DeclaredFlags::none(), src)
            .unwrap()
    }

    #[test]
    fn equivalence_holds_for_lukasiewicz() {
        let c = conj("T_L", "max(x + y - 1, 0)");
        let r = verify_theorem(
            TheoremId::Thm31,
            &LawOperands {
                conjunction: Some(&c),
                ..LawOperands::default()
            },
            &cfg(),
        )
        .unwrap();
        assert!(r.holds_verdict(), "{r}");
    }

    #[test]
    fn equivalence_precondition_fails_without_commutativity() {
        let c = conj(
            "two_slope",
            "piece(x < 1/2 : max(x/2 + y - 1, 0) ; else : max(x + y - 1, 0))",
        );
        let r = verify_theorem(
            TheoremId::Thm31,
            &LawOperands {
                conjunction: Some(&c),
                ..LawOperands::default()
            },
            &cfg(),
        )
        .unwrap();
        assert_eq!(r.verdict, crate::report::Verdict::PreconditionFailed);
        assert!(r.missing_hypothesis.unwrap().contains("commutativity"));
    }

    #[test]
    fn roundtrip_for_linear_implication() {
        let i = implication("I_RC", "1 - x + x*y");
        let r = verify_theorem(TheoremId::Thm41, &LawOperands::implication(&i), &cfg()).unwrap();
        assert!(r.holds_verdict(), "{r}");
        let c41 = verify_theorem(TheoremId::Cor41, &LawOperands::implication(&i), &cfg()).unwrap();
        assert!(c41.holds_verdict(), "{c41}");
        let c42 = verify_theorem(TheoremId::Cor42, &LawOperands::implication(&i), &cfg()).unwrap();
        assert!(c42.holds_verdict(), "{c42}");
    }

    #[test]
    fn continuity_transfer_needs_strictness() {
        let i = implication("I_RC", "1 - x + x*y");
        let clipped =
            UnaryFunction::parse("rem42_N", "piece(x <= 1/2 : 1 - 2*x ; else : 0)").unwrap();
        let r = verify_theorem(
            TheoremId::Thm42,
            &LawOperands::implication(&i).with_negation(&clipped),
            &cfg(),
        )
        .unwrap();
        assert_eq!(r.verdict, crate::report::Verdict::PreconditionFailed);
        assert!(r.missing_hypothesis.unwrap().contains("strict"));
    }

    #[test]
    fn continuity_transfer_holds_with_strict_negation() {
        let i = implication("I_RC", "1 - x + x*y");
        let r = verify_theorem(TheoremId::Thm42, &LawOperands::implication(&i), &cfg()).unwrap();
        assert!(r.holds_verdict(), "{r}");
    }

    #[test]
    fn membership_proposition_for_left_continuous_conjunction() {
        let c = conj("T_nM", "piece(x + y <= 1 : 0 ; else : min(x, y))");
        let r = verify_theorem(
            TheoremId::Prop31,
            &LawOperands {
                conjunction: Some(&c),
                ..LawOperands::default()
            },
            &cfg(),
        )
        .unwrap();
        assert!(r.holds_verdict(), "{r}");

        // the drastic conjunction is not left-continuous
        let t_d = conj("T_D", "piece(x < 1 && y < 1 : 0 ; else : min(x, y))");
        let r = verify_theorem(
            TheoremId::Prop31,
            &LawOperands {
                conjunction: Some(&t_d),
                ..LawOperands::default()
            },
            &cfg(),
        )
        .unwrap();
        assert_eq!(r.verdict, crate::report::Verdict::PreconditionFailed);
        assert!(r.missing_hypothesis.unwrap().contains("left-continuity"));
    }

    #[test]
    fn excluded_middle_equivalence_under_right_continuity() {
        let d = BinaryConnective::parse(
            "D_2",
            ConnectiveKind::Disjunction,
            DeclaredFlags::none(),
            "piece(x + y >= 1 : 1 ; else : y)",
        )
        .unwrap();
        let n_s = UnaryFunction::parse("N_S", "1 - x").unwrap();
        let r = verify_theorem(
            TheoremId::Prop41,
            &LawOperands::disjunction_negation(&d, &n_s),
            &cfg(),
        )
        .unwrap();
        assert!(r.holds_verdict(), "{r}");
    }

    #[test]
    fn induced_implication_properties_for_the_quadratic_disjunction() {
        let d = BinaryConnective::parse(
            "D_4",
            ConnectiveKind::Disjunction,
            DeclaredFlags::none().commutative(true),
            "min(1, pow(x, 2) + pow(y, 2))",
        )
        .unwrap();
        let r = verify_theorem(
            TheoremId::Prop45,
            &LawOperands {
                disjunction: Some(&d),
                ..LawOperands::default()
            },
            &cfg(),
        )
        .unwrap();
        assert!(r.holds_verdict(), "{r}");
        // the right-contraposition clause ran (commutative + continuous case)
        assert!(r.notes.iter().any(|n| n.contains("right contraposition")));
    }

    #[test]
    fn composition_lemma_on_mixed_pair() {
        let d = BinaryConnective::parse(
            "D_4",
            ConnectiveKind::Disjunction,
            DeclaredFlags::none(),
            "min(1, pow(x, 2) + pow(y, 2))",
        )
        .unwrap();
        let n_s = UnaryFunction::parse("N_S", "1 - x").unwrap();
        let r = verify_theorem(
            TheoremId::Lemma43,
            &LawOperands::disjunction_negation(&d, &n_s),
            &cfg(),
        )
        .unwrap();
        assert!(r.holds_verdict(), "{r}");
        // commutative but not associative: the exchange clause is skipped
        assert!(r.notes.iter().any(|n| n.contains("exchange clause skipped")));
    }

    #[test]
    fn factorization_forces_continuity_and_strict_decrease() {
        let n = UnaryFunction::parse("rem42_N", "piece(x <= 1/2 : 1 - 2*x ; else : 0)").unwrap();
        let al = crate::induce::aleph(&n, &cfg()).unwrap();
        let r = verify_theorem(
            TheoremId::Lemma22,
            &LawOperands {
                negation: Some(&n),
                second_negation: Some(&al),
                ..LawOperands::default()
            },
            &cfg(),
        )
        .unwrap();
        assert!(r.holds_verdict(), "{r}");

        let l45 = verify_theorem(
            TheoremId::Lemma45,
            &LawOperands {
                negation: Some(&n),
                ..LawOperands::default()
            },
            &cfg(),
        )
        .unwrap();
        assert!(l45.holds_verdict(), "{l45}");
    }

    #[test]
    fn contraposition_characterization_agrees_on_both_sides() {
        // max(1 - x, y) rebuilds to the commutative maximum with neutral 0:
        // both sides of the characterization hold
        let kd = implication("I_KD", "max(1 - x, y)");
        let r = verify_theorem(TheoremId::Lemma48, &LawOperands::implication(&kd), &cfg()).unwrap();
        assert!(r.holds_verdict(), "{r}");
        let r = verify_theorem(TheoremId::Thm43, &LawOperands::implication(&kd), &cfg()).unwrap();
        assert!(r.holds_verdict(), "{r}");

        // the quadratic implication rebuilds to a non-commutative
        // disjunction and fails right contraposition: both sides false,
        // agreement again
        let i4 = implication("I_4", "min(1, 1 - pow(x, 2) + pow(y, 2))");
        let r = verify_theorem(TheoremId::Lemma48, &LawOperands::implication(&i4), &cfg()).unwrap();
        assert!(r.holds_verdict(), "{r}");
        assert!(r.notes.iter().any(|n| n.contains("R-CP(N_I): fails")));
    }

    #[test]
    fn theorem_ids_roundtrip_through_strings() {
        for thm in TheoremId::ALL {
            assert_eq!(thm.name().parse::<TheoremId>().unwrap(), thm);
        }
        assert!("THM_9_9".parse::<TheoremId>().is_err());
    }
}
