//! Registration checks and breakpoint extraction.
//!
//! A 1-D section of a connective can only change branch where some switch
//! function crosses zero: the difference of a guard comparison's sides, or
//! the difference of the two arguments of a `min`/`max`. Collecting the zeros
//! of all switch functions along a section yields every point where the
//! section may be discontinuous or non-smooth.

use super::{Arity, Axis, Expr, Node, ParseError};

/// Values may stray this far outside `[0, 1]` before registration rejects
/// the expression.
const RANGE_TOL: f64 = 1e-9;

/// How close two breakpoints may be before they merge.
const MERGE_TOL: f64 = 1e-9;

/// Coarse sample count used when hunting switch-function zeros.
const SCAN_INTERVALS: usize = 512;

/// Validates a freshly parsed expression: piecewise coverage and range over a
/// sample grid.
pub(super) fn check_registration(expr: &Expr) -> Result<(), ParseError> {
    match expr.arity() {
        Arity::Unary => {
            for i in 0..=1000usize {
                let x = i as f64 / 1000.0;
                check_point(expr.body(), x, f64::NAN, x, 0.0)?;
            }
        }
        Arity::Binary => {
            for i in 0..=100usize {
                let x = i as f64 / 100.0;
                for j in 0..=100usize {
                    let y = j as f64 / 100.0;
                    check_point(expr.body(), x, y, x, y)?;
                }
            }
        }
    }
    Ok(())
}

fn check_point(body: &Node, x: f64, y: f64, px: f64, py: f64) -> Result<(), ParseError> {
    match eval_covered(body, x, y) {
        None => Err(ParseError::Coverage { x: px, y: py }),
        Some(v) if !((-RANGE_TOL..=1.0 + RANGE_TOL).contains(&v)) => Err(ParseError::Range {
            x: px,
            y: py,
            value: v,
        }),
        Some(_) => Ok(()),
    }
}

/// Like `Node::eval` but reports a piecewise branch miss instead of yielding
/// NaN, so coverage gaps are distinguishable from domain errors.
fn eval_covered(node: &Node, x: f64, y: f64) -> Option<f64> {
    use super::BinOp;
    Some(match node {
        Node::Var(Axis::X) => x,
        Node::Var(Axis::Y) => y,
        Node::Const(r) => r.to_f64(),
        Node::Neg(a) => -eval_covered(a, x, y)?,
        Node::Bin(op, a, b) => {
            let (a, b) = (eval_covered(a, x, y)?, eval_covered(b, x, y)?);
            match op {
                BinOp::Add => a + b,
                BinOp::Sub => a - b,
                BinOp::Mul => a * b,
                BinOp::Div => a / b,
            }
        }
        Node::Min(a, b) => eval_covered(a, x, y)?.min(eval_covered(b, x, y)?),
        Node::Max(a, b) => eval_covered(a, x, y)?.max(eval_covered(b, x, y)?),
        Node::Sqrt(a) => eval_covered(a, x, y)?.sqrt(),
        Node::Pow(a, r) => {
            let base = eval_covered(a, x, y)?;
            if r.den == 1 {
                base.powi(r.num as i32)
            } else {
                base.powf(r.to_f64())
            }
        }
        Node::Piecewise(branches, otherwise) => {
            for branch in branches {
                let mut fired = true;
                for cmp in &branch.guard {
                    let lhs = eval_covered(&cmp.lhs, x, y)?;
                    let rhs = eval_covered(&cmp.rhs, x, y)?;
                    if !cmp.op.holds(lhs, rhs) {
                        fired = false;
                        break;
                    }
                }
                if fired {
                    return eval_covered(&branch.value, x, y);
                }
            }
            return otherwise.as_deref().and_then(|n| eval_covered(n, x, y));
        }
    })
}

/// Interior points of `(0, 1)` where a 1-D section of the expression can
/// change branch.
///
/// For a unary expression pass `fixed = None`; for a binary expression name
/// the axis that is held fixed and its value — `Some((Axis::X, 0.4))` slices
/// at `x = 0.4`, varying `y`.
pub fn section_breakpoints(expr: &Expr, fixed: Option<(Axis, f64)>) -> Vec<f64> {
    type Section = Box<dyn Fn(&Node, f64) -> f64>;
    let section: Section = match (expr.arity(), fixed) {
        (Arity::Unary, None) => Box::new(|n: &Node, t: f64| {
            eval_covered(n, t, f64::NAN).unwrap_or(f64::NAN)
        }),
        (Arity::Binary, Some((Axis::X, v))) => {
            Box::new(move |n: &Node, t: f64| eval_covered(n, v, t).unwrap_or(f64::NAN))
        }
        (Arity::Binary, Some((Axis::Y, v))) => {
            Box::new(move |n: &Node, t: f64| eval_covered(n, t, v).unwrap_or(f64::NAN))
        }
        (arity, fixed) => panic!("section_breakpoints: {arity:?} with fixed axis {fixed:?}"),
    };

    let mut pairs = Vec::new();
    collect_switches(expr.body(), &mut pairs);

    let mut points = Vec::new();
    for (a, b) in pairs {
        let g = |t: f64| section(a, t) - section(b, t);
        scan_zeros(&g, &mut points);
    }
    points.sort_by(f64::total_cmp);
    points.dedup_by(|a, b| (*a - *b).abs() <= MERGE_TOL);
    points.retain(|t| *t > 1e-12 && *t < 1.0 - 1e-12);
    points
}

/// Collects `(lhs, rhs)` pairs whose difference switching sign can change the
/// active branch: guard comparisons and `min`/`max` arguments.
fn collect_switches<'a>(node: &'a Node, out: &mut Vec<(&'a Node, &'a Node)>) {
    match node {
        Node::Var(_) | Node::Const(_) => {}
        Node::Neg(a) | Node::Sqrt(a) | Node::Pow(a, _) => collect_switches(a, out),
        Node::Bin(_, a, b) => {
            collect_switches(a, out);
            collect_switches(b, out);
        }
        Node::Min(a, b) | Node::Max(a, b) => {
            out.push((a, b));
            collect_switches(a, out);
            collect_switches(b, out);
        }
        Node::Piecewise(branches, otherwise) => {
            for branch in branches {
                for cmp in &branch.guard {
                    out.push((&cmp.lhs, &cmp.rhs));
                    collect_switches(&cmp.lhs, out);
                    collect_switches(&cmp.rhs, out);
                }
                collect_switches(&branch.value, out);
            }
            if let Some(n) = otherwise {
                collect_switches(n, out);
            }
        }
    }
}

/// Finds zeros of `g` on `[0, 1]`: an affine fast path for straight-line
/// switch functions plus a sign-change scan with bisection refinement.
fn scan_zeros(g: &impl Fn(f64) -> f64, out: &mut Vec<f64>) {
    let (g0, gm, g1) = (g(0.0), g(0.5), g(1.0));
    if g0.is_finite() && gm.is_finite() && g1.is_finite() {
        let scale = g0.abs().max(g1.abs()).max(1.0);
        if (gm - 0.5 * (g0 + g1)).abs() <= 1e-12 * scale && g0 != g1 {
            let root = g0 / (g0 - g1);
            if (0.0..=1.0).contains(&root) {
                out.push(root);
            }
            // affine functions have that single zero
            return;
        }
    }

    let n = SCAN_INTERVALS;
    let vals: Vec<f64> = (0..=n).map(|i| g(i as f64 / n as f64)).collect();
    for i in 0..=n {
        let t = i as f64 / n as f64;
        if vals[i] == 0.0 {
            // only the edges of a zero plateau mark a branch change
            let left_nonzero = i > 0 && vals[i - 1] != 0.0;
            let right_nonzero = i < n && vals[i + 1] != 0.0;
            if left_nonzero || right_nonzero {
                out.push(t);
            }
        }
        if i < n && vals[i].is_finite() && vals[i + 1].is_finite() && vals[i] * vals[i + 1] < 0.0 {
            out.push(refine_root(g, t, (i + 1) as f64 / n as f64, vals[i]));
        }
    }
}

fn refine_root(g: &impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, g_lo: f64) -> f64 {
    let lo_sign = g_lo.is_sign_positive();
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let v = g(mid);
        if v == 0.0 {
            return mid;
        }
        if v.is_sign_positive() == lo_sign {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

#[cfg(test)]
mod tests {
    use super::super::parse_connective;
    use super::*;

    #[test]
    fn lukasiewicz_section_breakpoint() {
        let e = parse_connective("max(x + y - 1, 0)").unwrap();
        let bps = section_breakpoints(&e, Some((Axis::X, 0.4)));
        assert_eq!(bps.len(), 1);
        assert!((bps[0] - 0.6).abs() < 1e-9, "got {:?}", bps);
    }

    #[test]
    fn single_branch_has_no_breakpoints() {
        let e = parse_connective("1 - x").unwrap();
        assert!(section_breakpoints(&e, None).is_empty());
    }

    #[test]
    fn piecewise_guards_and_clamps_all_found() {
        let e = parse_connective(
            "piece(x < 1/2 : max(x/2 + y - 1, 0) ; else : max(x + y - 1, 0))",
        )
        .unwrap();
        let bps = section_breakpoints(&e, Some((Axis::Y, 0.9)));
        assert!(
            bps.iter().any(|t| (t - 0.5).abs() < 1e-9),
            "0.5 missing from {:?}",
            bps
        );
        assert!(bps.iter().any(|t| (t - 0.1).abs() < 1e-9));
        assert!(bps.iter().any(|t| (t - 0.2).abs() < 1e-9));
    }

    #[test]
    fn nonlinear_switch_located() {
        // x^2 + y^2 = 1 along y at x = 0.6 crosses t = 0.8
        let e = parse_connective("min(1, pow(x, 2) + pow(y, 2))").unwrap();
        let bps = section_breakpoints(&e, Some((Axis::X, 0.6)));
        assert!(bps.iter().any(|t| (t - 0.8).abs() < 1e-9), "{:?}", bps);
    }

    #[test]
    fn uncovered_domain_rejected() {
        let err = parse_connective("piece(x < 1/2 : 0)").unwrap_err();
        assert!(matches!(err, ParseError::Coverage { .. }));
    }

    #[test]
    fn out_of_range_rejected() {
        let err = parse_connective("x + y").unwrap_err();
        assert!(matches!(err, ParseError::Range { .. }));
        let err = parse_connective("x - y").unwrap_err();
        assert!(matches!(err, ParseError::Range { .. }));
    }

    #[test]
    fn breakpoints_sorted_dedup_interior() {
        let e = parse_connective(
            "piece(x + y <= 1 : 0 ; else : min(x, y))",
        )
        .unwrap();
        let bps = section_breakpoints(&e, Some((Axis::X, 0.3)));
        for w in bps.windows(2) {
            assert!(w[0] < w[1]);
        }
        for t in &bps {
            assert!(*t > 0.0 && *t < 1.0);
        }
        // guard x + y = 1 gives 0.7, the clamp min(x, y) switches at 0.3
        assert!(bps.iter().any(|t| (t - 0.7).abs() < 1e-9));
        assert!(bps.iter().any(|t| (t - 0.3).abs() < 1e-9));
    }
}
