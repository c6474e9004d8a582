//! Numerical jump detection.
//!
//! Continuity is undecidable from samples; these are verdicts at a stated
//! resolution. A one-sided limit at `x` is probed with the two smallest
//! applicable offsets from `jump_offsets`. The gap estimate at offset `d`
//! is `|f(x ± d) - f(x)|`; a genuine jump keeps the estimate essentially
//! constant as `d` shrinks, while a continuous stretch (even one with a
//! root-type infinite slope) shrinks it by a factor. A point is flagged only
//! when the smallest-offset estimate exceeds `jump_threshold` *and* fails to
//! halve against the previous offset — a plain threshold would misread steep
//! continuous sections, e.g. `sqrt(1 - x^2)` near 1, as jumps.

use crate::config::NumericConfig;
use crate::connective::{BinaryConnective, UnaryFunction};
use crate::expr::Axis;

/// Which one-sided limit is probed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// Limit from below: left-continuity.
    Below,
    /// Limit from above: right-continuity.
    Above,
}

/// Certified one-sided jump of `f` at `x`, or `0.0` when the evidence is
/// consistent with continuity at this resolution.
pub(crate) fn one_sided_jump(
    f: &impl Fn(f64) -> f64,
    x: f64,
    side: Side,
    cfg: &NumericConfig,
) -> f64 {
    let mut offsets: Vec<f64> = cfg
        .jump_offsets
        .iter()
        .copied()
        .filter(|d| match side {
            Side::Below => x - d >= 0.0,
            Side::Above => x + d <= 1.0,
        })
        .collect();
    offsets.sort_by(|a, b| b.total_cmp(a));
    let Some(&smallest) = offsets.last() else {
        return 0.0;
    };
    let base = f(x);
    let estimate = |d: f64| {
        let probe = match side {
            Side::Below => x - d,
            Side::Above => x + d,
        };
        (f(probe) - base).abs()
    };
    let e_min = estimate(smallest);
    if e_min.is_nan() || e_min <= cfg.jump_threshold {
        return 0.0;
    }
    if offsets.len() >= 2 {
        let e_prev = estimate(offsets[offsets.len() - 2]);
        if 2.0 * e_min <= e_prev {
            return 0.0; // estimate still shrinking: slope, not a jump
        }
    }
    e_min
}

/// Scans a section at grid points plus breakpoints; returns every flagged
/// `(location, jump)` for the requested side.
pub(crate) fn section_jump_scan(
    f: &impl Fn(f64) -> f64,
    grid: &[f64],
    breakpoints: &[f64],
    side: Side,
    cfg: &NumericConfig,
) -> Vec<(f64, f64)> {
    let mut pts: Vec<f64> = grid.iter().chain(breakpoints).copied().collect();
    pts.sort_by(f64::total_cmp);
    pts.dedup();
    let mut out = Vec::new();
    for x in pts {
        let jump = one_sided_jump(f, x, side, cfg);
        if jump > 0.0 {
            out.push((x, jump));
        }
    }
    out
}

/// One-sided scan summary.
#[derive(Debug, Clone, Copy)]
pub struct SideScan {
    pub ok: bool,
    pub max_jump: f64,
    /// Location of the largest jump (meaningful when `!ok`).
    pub at: f64,
}

/// Continuity verdicts for a unary function at the configured resolution.
#[derive(Debug, Clone, Copy)]
pub struct UnaryContinuity {
    pub from_below: SideScan,
    pub from_above: SideScan,
}

impl UnaryContinuity {
    pub fn continuous(&self) -> bool {
        self.from_below.ok && self.from_above.ok
    }

    /// Largest jump either side, with its location.
    pub fn worst(&self) -> (f64, f64) {
        if self.from_below.max_jump >= self.from_above.max_jump {
            (self.from_below.at, self.from_below.max_jump)
        } else {
            (self.from_above.at, self.from_above.max_jump)
        }
    }
}

/// Scans a unary function over the 1-D grid plus its breakpoints.
pub fn unary_continuity(f: &UnaryFunction, cfg: &NumericConfig) -> UnaryContinuity {
    let grid = cfg.grid_points_1d();
    let eval = |x: f64| f.eval(x);
    let side = |s: Side| {
        let flagged = section_jump_scan(&eval, &grid, f.breakpoints(), s, cfg);
        let (at, max_jump) = flagged
            .iter()
            .fold((0.0, 0.0), |acc, &(x, j)| if j > acc.1 { (x, j) } else { acc });
        SideScan {
            ok: flagged.is_empty(),
            max_jump,
            at,
        }
    };
    UnaryContinuity {
        from_below: side(Side::Below),
        from_above: side(Side::Above),
    }
}

/// Largest detected jump of a binary connective, with its location.
#[derive(Debug, Clone, Copy)]
pub struct JumpWitness {
    pub x: f64,
    pub y: f64,
    pub jump: f64,
    /// The axis that was varying when the jump was seen.
    pub varying: Axis,
    pub side: Side,
}

/// Continuity verdicts for a binary connective: 1-D sections are scanned both
/// ways at every grid line plus each section's breakpoints.
#[derive(Debug, Clone, Copy)]
pub struct BinaryContinuity {
    pub continuous: bool,
    /// No jump when any argument is approached from below.
    pub left_continuous: bool,
    /// No jump when any argument is approached from above.
    pub right_continuous: bool,
    pub max_jump: f64,
    pub witness: Option<JumpWitness>,
}

/// Scans all sections of `b` and aggregates the verdicts.
pub fn detect_continuity_2d(b: &BinaryConnective, cfg: &NumericConfig) -> BinaryContinuity {
    let grid = cfg.grid_points_2d();
    let mut left_ok = true;
    let mut right_ok = true;
    let mut worst: Option<JumpWitness> = None;

    let mut consider = |witness: JumpWitness| {
        match witness.side {
            Side::Below => left_ok = false,
            Side::Above => right_ok = false,
        }
        if worst.is_none_or(|w| witness.jump > w.jump) {
            worst = Some(witness);
        }
    };

    for &fixed in &grid {
        // varying the first argument
        let f = |t: f64| b.eval(t, fixed);
        let bps = b.section_breakpoints(Axis::Y, fixed);
        for side in [Side::Below, Side::Above] {
            for (at, jump) in section_jump_scan(&f, &grid, &bps, side, cfg) {
                consider(JumpWitness {
                    x: at,
                    y: fixed,
                    jump,
                    varying: Axis::X,
                    side,
                });
            }
        }
        // varying the second argument
        let g = |t: f64| b.eval(fixed, t);
        let bps = b.section_breakpoints(Axis::X, fixed);
        for side in [Side::Below, Side::Above] {
            for (at, jump) in section_jump_scan(&g, &grid, &bps, side, cfg) {
                consider(JumpWitness {
                    x: fixed,
                    y: at,
                    jump,
                    varying: Axis::Y,
                    side,
                });
            }
        }
    }

    BinaryContinuity {
        continuous: left_ok && right_ok,
        left_continuous: left_ok,
        right_continuous: right_ok,
        max_jump: worst.map_or(0.0, |w| w.jump),
        witness: worst,
    }
}
