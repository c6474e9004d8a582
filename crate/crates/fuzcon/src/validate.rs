//! Numerical validation of connectives and negations.
//!
//! Kind-specific boundary conditions are checked exactly, monotonicity over
//! all ordered grid pairs along each axis (deterministic, no random pairs),
//! and every declared flag is re-verified: commutativity and associativity by
//! sampled identities, one-sided continuity by one-sided limits at section
//! breakpoints and grid points, neutral elements by sampled identity. A
//! declared flag that fails verification fails the whole check — theorem
//! preconditions gate on verified flags, never on declarations alone.

use crate::analysis::continuity::{section_jump_scan, Side};
use crate::config::NumericConfig;
use crate::connective::{BinaryConnective, ConnectiveKind, NeutralSide, UnaryFunction};
use crate::expr::Axis;
use crate::report::{CheckResult, Witness};

/// Values sampled from a connective may stray this far outside `[0, 1]`.
const RANGE_TOL: f64 = 1e-9;

struct Failures {
    witness: Option<(String, Witness)>,
    notes: Vec<String>,
}

impl Failures {
    fn new() -> Self {
        Failures {
            witness: None,
            notes: Vec::new(),
        }
    }

    fn pass(&mut self, what: &str) {
        self.notes.push(format!("{what}: holds"));
    }

    fn fail(&mut self, what: &str, witness: Witness) {
        self.notes.push(format!("{what}: fails ({})", witness.detail));
        if self.witness.is_none() {
            self.witness = Some((what.to_string(), witness));
        }
    }

    fn check(&mut self, what: &str, outcome: Option<Witness>) {
        match outcome {
            None => self.pass(what),
            Some(w) => self.fail(what, w),
        }
    }

    fn into_result(self, law_id: String, cfg: &NumericConfig) -> CheckResult {
        let mut result = match self.witness {
            None => CheckResult::holds(law_id, cfg),
            Some((_, w)) => CheckResult::fails(law_id, w, cfg),
        };
        result.notes = self.notes;
        result
    }
}

/// Verifies boundary conditions, monotonicity and every declared flag of a
/// binary connective. All failures are verdicts, never errors.
pub fn validate_connective(b: &BinaryConnective, cfg: &NumericConfig) -> CheckResult {
    let mut failures = Failures::new();
    let pts = validation_grid(b, cfg.grid_2d);
    let values = sample(b, &pts);

    range_check(&pts, &values, &mut failures);
    kind_checks(b, &pts, &values, &mut failures, cfg);

    let flags = *b.flags();
    if flags.commutative {
        failures.check("commutative", commutativity_witness(&pts, &values, cfg.eps_eq));
    }
    if flags.associative {
        failures.check("associative", associativity_witness(b, &pts, cfg.eps_eq));
    }
    if flags.left_continuous {
        failures.check("left_continuous", one_sided_witness(b, &pts, Side::Below, cfg));
    }
    if flags.right_continuous {
        failures.check(
            "right_continuous",
            one_sided_witness(b, &pts, Side::Above, cfg),
        );
    }
    if let Some(neutral) = flags.neutral {
        failures.check("neutral_element", neutral_witness(b, &pts, neutral, cfg.eps_eq));
    }

    failures.into_result(format!("validate:{}", b.name()), cfg)
}

/// Boundary + monotonicity only, on a capped grid; the precondition check
/// used by the induction operations. Grid-backed connectives are checked
/// exhaustively at their own nodes (bilinear interpolation preserves
/// monotonicity and bounds between nodes).
pub(crate) fn kind_validation(
    b: &BinaryConnective,
    cfg: &NumericConfig,
    max_grid: usize,
) -> CheckResult {
    let mut failures = Failures::new();
    let pts = validation_grid(b, cfg.grid_2d.min(max_grid));
    let values = sample(b, &pts);
    range_check(&pts, &values, &mut failures);
    kind_checks(b, &pts, &values, &mut failures, cfg);
    failures.into_result(format!("validate-kind:{}", b.name()), cfg)
}

fn validation_grid(b: &BinaryConnective, n: usize) -> Vec<f64> {
    match b.grid() {
        Some(g) => {
            let m = g.size();
            (0..m).map(|i| i as f64 / (m - 1) as f64).collect()
        }
        None => crate::config::uniform_grid(n),
    }
}

fn sample(b: &BinaryConnective, pts: &[f64]) -> Vec<f64> {
    let n = pts.len();
    let mut values = vec![0.0; n * n];
    for (i, &x) in pts.iter().enumerate() {
        for (j, &y) in pts.iter().enumerate() {
            values[i * n + j] = b.eval(x, y);
        }
    }
    values
}

fn range_check(pts: &[f64], values: &[f64], failures: &mut Failures) {
    let n = pts.len();
    let mut witness = None;
    'scan: for i in 0..n {
        for j in 0..n {
            let v = values[i * n + j];
            if !((-RANGE_TOL..=1.0 + RANGE_TOL).contains(&v)) {
                witness = Some(Witness::new(
                    vec![pts[i], pts[j]],
                    vec![v],
                    format!("value {v} escapes [0,1]"),
                ));
                break 'scan;
            }
        }
    }
    failures.check("range", witness);
}

fn kind_checks(
    b: &BinaryConnective,
    pts: &[f64],
    values: &[f64],
    failures: &mut Failures,
    cfg: &NumericConfig,
) {
    match b.kind() {
        ConnectiveKind::Conjunction => {
            failures.check(
                "boundary",
                corner_witness(b, &[(1.0, 1.0, 1.0), (0.0, 0.0, 0.0), (1.0, 0.0, 0.0), (0.0, 1.0, 0.0)]),
            );
            failures.check("absorbing_zero", {
                let mut w = None;
                for &t in pts {
                    for (x, y) in [(t, 0.0), (0.0, t)] {
                        let v = b.eval(x, y);
                        if v > cfg.eps_zero {
                            w = Some(Witness::new(
                                vec![x, y],
                                vec![v],
                                format!("value {v} on an absorbing edge"),
                            ));
                        }
                    }
                    if w.is_some() {
                        break;
                    }
                }
                w
            });
            failures.check(
                "monotone",
                monotone_witness(pts, values, [Dir::Up, Dir::Up], cfg.eps_eq),
            );
        }
        ConnectiveKind::Disjunction => {
            failures.check(
                "boundary",
                corner_witness(b, &[(0.0, 0.0, 0.0), (1.0, 1.0, 1.0), (1.0, 0.0, 1.0), (0.0, 1.0, 1.0)]),
            );
            failures.check("absorbing_one", {
                let mut w = None;
                for &t in pts {
                    for (x, y) in [(t, 1.0), (1.0, t)] {
                        let v = b.eval(x, y);
                        if v < 1.0 - cfg.eps_one {
                            w = Some(Witness::new(
                                vec![x, y],
                                vec![v],
                                format!("value {v} on an absorbing edge"),
                            ));
                        }
                    }
                    if w.is_some() {
                        break;
                    }
                }
                w
            });
            failures.check(
                "monotone",
                monotone_witness(pts, values, [Dir::Up, Dir::Up], cfg.eps_eq),
            );
        }
        ConnectiveKind::Implication => {
            failures.check(
                "boundary",
                corner_witness(b, &[(0.0, 0.0, 1.0), (1.0, 1.0, 1.0), (1.0, 0.0, 0.0)]),
            );
            failures.check(
                "monotone",
                monotone_witness(pts, values, [Dir::Down, Dir::Up], cfg.eps_eq),
            );
        }
        ConnectiveKind::Raw => {}
    }
}

fn corner_witness(b: &BinaryConnective, expectations: &[(f64, f64, f64)]) -> Option<Witness> {
    for &(x, y, want) in expectations {
        let v = b.eval(x, y);
        if v != want {
            return Some(Witness::new(
                vec![x, y],
                vec![v],
                format!("corner value {v}, expected {want}"),
            ));
        }
    }
    None
}

#[derive(Clone, Copy, PartialEq)]
enum Dir {
    Up,
    Down,
}

/// All ordered pairs along each axis; `dirs[0]` is the required direction in
/// the first argument.
fn monotone_witness(pts: &[f64], values: &[f64], dirs: [Dir; 2], eps: f64) -> Option<Witness> {
    let n = pts.len();
    let violated = |lo: f64, hi: f64, dir: Dir| match dir {
        Dir::Up => hi < lo - eps,
        Dir::Down => hi > lo + eps,
    };
    for j in 0..n {
        for a in 0..n {
            for b in a + 1..n {
                let (lo, hi) = (values[a * n + j], values[b * n + j]);
                if violated(lo, hi, dirs[0]) {
                    return Some(Witness::new(
                        vec![pts[a], pts[j], pts[b]],
                        vec![lo, hi],
                        format!(
                            "first argument: value goes {lo} -> {hi} from x={} to x={}",
                            pts[a], pts[b]
                        ),
                    ));
                }
            }
        }
    }
    for i in 0..n {
        for a in 0..n {
            for b in a + 1..n {
                let (lo, hi) = (values[i * n + a], values[i * n + b]);
                if violated(lo, hi, dirs[1]) {
                    return Some(Witness::new(
                        vec![pts[i], pts[a], pts[b]],
                        vec![lo, hi],
                        format!(
                            "second argument: value goes {lo} -> {hi} from y={} to y={}",
                            pts[a], pts[b]
                        ),
                    ));
                }
            }
        }
    }
    None
}

fn commutativity_witness(pts: &[f64], values: &[f64], eps: f64) -> Option<Witness> {
    let n = pts.len();
    let mut worst: Option<(f64, usize, usize)> = None;
    for i in 0..n {
        for j in 0..i {
            let d = (values[i * n + j] - values[j * n + i]).abs();
            if d > eps && worst.is_none_or(|(w, _, _)| d > w) {
                worst = Some((d, i, j));
            }
        }
    }
    worst.map(|(_, i, j)| {
        Witness::new(
            vec![pts[i], pts[j]],
            vec![values[i * n + j], values[j * n + i]],
            format!(
                "f({}, {}) = {} but f({}, {}) = {}",
                pts[i],
                pts[j],
                values[i * n + j],
                pts[j],
                pts[i],
                values[j * n + i]
            ),
        )
    })
}

/// Deterministic stride subsample of the grid cube, roughly 1e5 triples.
pub(crate) fn triple_stride(n: usize) -> usize {
    (n / 46).max(1)
}

fn associativity_witness(b: &BinaryConnective, pts: &[f64], eps: f64) -> Option<Witness> {
    let stride = triple_stride(pts.len());
    let idx: Vec<usize> = (0..pts.len()).step_by(stride).chain([pts.len() - 1]).collect();
    let mut worst: Option<(f64, f64, f64, f64, f64, f64)> = None;
    for &i in &idx {
        for &j in &idx {
            for &k in &idx {
                let (x, y, z) = (pts[i], pts[j], pts[k]);
                let lhs = b.eval(b.eval(x, y), z);
                let rhs = b.eval(x, b.eval(y, z));
                let d = (lhs - rhs).abs();
                if d > eps && worst.is_none_or(|(w, ..)| d > w) {
                    worst = Some((d, x, y, z, lhs, rhs));
                }
            }
        }
    }
    worst.map(|(_, x, y, z, lhs, rhs)| {
        Witness::new(
            vec![x, y, z],
            vec![lhs, rhs],
            format!("f(f(x,y),z) = {lhs} but f(x,f(y,z)) = {rhs}"),
        )
    })
}

fn one_sided_witness(
    b: &BinaryConnective,
    pts: &[f64],
    side: Side,
    cfg: &NumericConfig,
) -> Option<Witness> {
    let mut worst: Option<(f64, f64, f64)> = None; // jump, varying coord, fixed coord
    let mut consider = |jump: f64, at: f64, fixed: f64| {
        if jump > cfg.jump_threshold && worst.is_none_or(|(w, _, _)| jump > w) {
            worst = Some((jump, at, fixed));
        }
    };
    for &fixed in pts {
        // section along the first argument (second fixed)
        let f = |t: f64| b.eval(t, fixed);
        let bps = b.section_breakpoints(Axis::Y, fixed);
        for (at, jump) in section_jump_scan(&f, pts, &bps, side, cfg) {
            consider(jump, at, fixed);
        }
        // section along the second argument (first fixed)
        let g = |t: f64| b.eval(fixed, t);
        let bps = b.section_breakpoints(Axis::X, fixed);
        for (at, jump) in section_jump_scan(&g, pts, &bps, side, cfg) {
            consider(jump, at, fixed);
        }
    }
    worst.map(|(jump, at, fixed)| {
        Witness::new(
            vec![at, fixed],
            vec![jump],
            format!("one-sided jump of {jump} along a section"),
        )
    })
}

fn neutral_witness(
    b: &BinaryConnective,
    pts: &[f64],
    neutral: crate::connective::NeutralElement,
    eps: f64,
) -> Option<Witness> {
    let e = neutral.value;
    for &t in pts {
        if matches!(neutral.side, NeutralSide::Left | NeutralSide::Both) {
            let v = b.eval(e, t);
            if (v - t).abs() > eps {
                return Some(Witness::new(
                    vec![e, t],
                    vec![v],
                    format!("f({e}, {t}) = {v}, expected {t}"),
                ));
            }
        }
        if matches!(neutral.side, NeutralSide::Right | NeutralSide::Both) {
            let v = b.eval(t, e);
            if (v - t).abs() > eps {
                return Some(Witness::new(
                    vec![t, e],
                    vec![v],
                    format!("f({t}, {e}) = {v}, expected {t}"),
                ));
            }
        }
    }
    None
}

/// Checks the defining conditions of a fuzzy negation: endpoint values
/// exactly, non-increase over all ordered pairs of grid points and
/// breakpoints.
pub fn validate_negation(f: &UnaryFunction, cfg: &NumericConfig) -> CheckResult {
    let mut failures = Failures::new();
    let pts = negation_points(f, cfg);
    let values: Vec<f64> = pts.iter().map(|&x| f.eval(x)).collect();

    let at0 = f.eval(0.0);
    let at1 = f.eval(1.0);
    failures.check(
        "endpoints",
        if at0 != 1.0 {
            Some(Witness::new(vec![0.0], vec![at0], format!("N(0) = {at0}, expected 1")))
        } else if at1 != 0.0 {
            Some(Witness::new(vec![1.0], vec![at1], format!("N(1) = {at1}, expected 0")))
        } else {
            None
        },
    );

    failures.check("range", {
        let mut w = None;
        for (&x, &v) in pts.iter().zip(&values) {
            if !((-RANGE_TOL..=1.0 + RANGE_TOL).contains(&v)) {
                w = Some(Witness::new(vec![x], vec![v], format!("value {v} escapes [0,1]")));
                break;
            }
        }
        w
    });

    failures.check("non_increasing", {
        let mut w = None;
        'outer: for a in 0..pts.len() {
            for b in a + 1..pts.len() {
                if values[b] > values[a] + cfg.eps_eq {
                    w = Some(Witness::new(
                        vec![pts[a], pts[b]],
                        vec![values[a], values[b]],
                        format!("increases from {} to {}", values[a], values[b]),
                    ));
                    break 'outer;
                }
            }
        }
        w
    });

    failures.into_result(format!("validate-negation:{}", f.name()), cfg)
}

/// Grid points merged with the function's breakpoints, sorted.
pub(crate) fn negation_points(f: &UnaryFunction, cfg: &NumericConfig) -> Vec<f64> {
    let mut pts = cfg.grid_points_1d();
    pts.extend_from_slice(f.breakpoints());
    pts.sort_by(f64::total_cmp);
    pts.dedup();
    pts
}
