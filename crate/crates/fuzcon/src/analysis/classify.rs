//! Classification of fuzzy negations: monotonicity, continuity, strictness,
//! involutivity.

use super::continuity::{unary_continuity, UnaryContinuity};
use crate::config::NumericConfig;
use crate::connective::UnaryFunction;
use crate::report::Witness;
use crate::validate::negation_points;

/// One classified property: whether it holds, and a witness when it fails.
#[derive(Debug, Clone, serde::Serialize)]
pub struct PropertyVerdict {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl PropertyVerdict {
    fn holds() -> Self {
        PropertyVerdict {
            holds: true,
            witness: None,
        }
    }

    fn fails(witness: Witness) -> Self {
        PropertyVerdict {
            holds: false,
            witness: Some(witness),
        }
    }
}

/// Classification of a negation candidate at a given resolution.
///
/// `strict` is by definition the conjunction of `strictly_decreasing` and
/// `continuous`; `strong` is measured independently as the involution defect,
/// which lets tests confirm that strong implies strict instead of assuming
/// it.
#[derive(Debug, Clone, serde::Serialize)]
pub struct NegationClassReport {
    pub name: String,
    pub non_increasing: PropertyVerdict,
    pub continuous: PropertyVerdict,
    pub left_continuous: PropertyVerdict,
    pub right_continuous: PropertyVerdict,
    pub strictly_decreasing: PropertyVerdict,
    pub strict: PropertyVerdict,
    pub strong: PropertyVerdict,
    /// Largest measured `|N(N(x)) - x|`.
    pub involution_defect: f64,
    pub tolerances: NumericConfig,
}

impl NegationClassReport {
    /// The four flags the induced-negation equivalence theorems quantify
    /// over.
    pub fn equivalence_flags(&self) -> [bool; 4] {
        [
            self.strictly_decreasing.holds,
            self.continuous.holds,
            self.strict.holds,
            self.strong.holds,
        ]
    }

    pub fn flags_agree(&self) -> bool {
        let f = self.equivalence_flags();
        f.iter().all(|&b| b == f[0])
    }

    /// Internal consistency: strong implies strict implies both strictly
    /// decreasing and continuous.
    pub fn consistent(&self) -> bool {
        (!self.strong.holds || self.strict.holds)
            && (!self.strict.holds || (self.strictly_decreasing.holds && self.continuous.holds))
    }
}

/// Classifies a negation candidate on the grid plus its breakpoints.
pub fn classify_negation(n: &UnaryFunction, cfg: &NumericConfig) -> NegationClassReport {
    let pts = negation_points(n, cfg);
    let values: Vec<f64> = pts.iter().map(|&x| n.eval(x)).collect();

    let mut non_increasing = PropertyVerdict::holds();
    'pairs: for a in 0..pts.len() {
        for b in a + 1..pts.len() {
            if values[b] > values[a] + cfg.eps_eq {
                non_increasing = PropertyVerdict::fails(Witness::new(
                    vec![pts[a], pts[b]],
                    vec![values[a], values[b]],
                    format!("increases from {} to {}", values[a], values[b]),
                ));
                break 'pairs;
            }
        }
    }

    // plateau = adjacent values equal within tolerance
    let mut strictly_decreasing = if non_increasing.holds {
        PropertyVerdict::holds()
    } else {
        PropertyVerdict {
            holds: false,
            witness: non_increasing.witness.clone(),
        }
    };
    if strictly_decreasing.holds {
        for (p, v) in pts.windows(2).zip(values.windows(2)) {
            if (v[0] - v[1]).abs() <= cfg.eps_eq {
                strictly_decreasing = PropertyVerdict::fails(Witness::new(
                    vec![p[0], p[1]],
                    vec![v[0], v[1]],
                    format!("plateau: N({}) = N({}) = {}", p[0], p[1], v[0]),
                ));
                break;
            }
        }
    }

    let scan: UnaryContinuity = unary_continuity(n, cfg);
    let jump_verdict = |ok: bool, at: f64, jump: f64, side: &str| {
        if ok {
            PropertyVerdict::holds()
        } else {
            PropertyVerdict::fails(Witness::new(
                vec![at],
                vec![jump],
                format!("jump of {jump} at {at} ({side})"),
            ))
        }
    };
    let left_continuous = jump_verdict(
        scan.from_below.ok,
        scan.from_below.at,
        scan.from_below.max_jump,
        "from below",
    );
    let right_continuous = jump_verdict(
        scan.from_above.ok,
        scan.from_above.at,
        scan.from_above.max_jump,
        "from above",
    );
    let continuous = if scan.continuous() {
        PropertyVerdict::holds()
    } else {
        let (at, jump) = scan.worst();
        PropertyVerdict::fails(Witness::new(
            vec![at],
            vec![jump],
            format!("jump of {jump} at {at}"),
        ))
    };

    let strict = match (&strictly_decreasing, &continuous) {
        (a, _) if !a.holds => PropertyVerdict {
            holds: false,
            witness: a.witness.clone(),
        },
        (_, b) if !b.holds => PropertyVerdict {
            holds: false,
            witness: b.witness.clone(),
        },
        _ => PropertyVerdict::holds(),
    };

    // involution defect over the grid
    let mut defect = 0.0f64;
    let mut defect_at = 0.0f64;
    let mut defect_val = 0.0f64;
    for (&x, &v) in pts.iter().zip(&values) {
        let nn = n.eval(v);
        let d = (nn - x).abs();
        if d > defect {
            defect = d;
            defect_at = x;
            defect_val = nn;
        }
    }
    let strong = if defect <= cfg.eps_eq {
        PropertyVerdict::holds()
    } else {
        PropertyVerdict::fails(Witness::new(
            vec![defect_at],
            vec![defect_val],
            format!("N(N({defect_at})) = {defect_val}, off by {defect}"),
        ))
    };

    NegationClassReport {
        name: n.name().to_string(),
        non_increasing,
        continuous,
        left_continuous,
        right_continuous,
        strictly_decreasing,
        strict,
        strong,
        involution_defect: defect,
        tolerances: cfg.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> NumericConfig {
        NumericConfig {
            grid_1d: 1025,
            ..NumericConfig::default()
        }
    }

    #[test]
    fn standard_negation_is_strong() {
        let n = UnaryFunction::parse("N_S", "1 - x").unwrap();
        let r = classify_negation(&n, &cfg());
        assert!(r.continuous.holds);
        assert!(r.strictly_decreasing.holds);
        assert!(r.strict.holds);
        assert!(r.strong.holds);
        assert!(r.consistent() && r.flags_agree());
    }

    #[test]
    fn squared_negation_continuous_but_not_strong() {
        let n = UnaryFunction::parse("sq", "pow(1 - x, 2)").unwrap();
        let r = classify_negation(&n, &cfg());
        assert!(r.continuous.holds);
        assert!(r.strictly_decreasing.holds);
        assert!(!r.strong.holds);
        // the defect at 0.5 is (1 - 1/4)^2 - 1/2 = 0.0625
        let at_half = (n.eval(n.eval(0.5)) - 0.5).abs();
        assert!((at_half - 0.0625).abs() < 1e-12);
        assert!(r.involution_defect >= 0.0625);
        assert!(r.consistent());
    }

    #[test]
    fn two_slope_negation_discontinuous_but_strictly_decreasing() {
        let n = UnaryFunction::parse("two_slope", "piece(x < 1/2 : 1 - x/2 ; else : 1 - x)").unwrap();
        let r = classify_negation(&n, &cfg());
        assert!(!r.continuous.holds);
        assert!(r.strictly_decreasing.holds);
        assert!(!r.strict.holds);
        assert!(!r.strong.holds);
        let w = r.continuous.witness.clone().unwrap();
        assert!((w.point[0] - 0.5).abs() < 1e-9);
        assert!(w.values[0] >= 0.2);
        assert!(r.consistent());
    }

    #[test]
    fn least_negation_all_flags_false() {
        let n = UnaryFunction::parse("N_G1", "piece(x = 0 : 1 ; else : 0)").unwrap();
        let r = classify_negation(&n, &cfg());
        assert!(r.non_increasing.holds);
        assert!(!r.continuous.holds);
        assert!(!r.strictly_decreasing.holds);
        assert!(!r.strict.holds);
        assert!(!r.strong.holds);
        assert!(r.flags_agree());
    }
}
