//! Numeric resolution and tolerance settings shared by every check.
//!
//! All verdicts produced by this crate are *numerical* verdicts: they hold at
//! a stated grid resolution and set of tolerances, and every report embeds the
//! configuration it was produced with so results stay auditable.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Resolution and tolerance knobs for grid sweeps, bisection and jump
/// detection.
///
/// The defaults are tuned so that every bundled catalog fixture is decided
/// correctly: jumps in the catalog are 0.25 or larger while `jump_threshold`
/// is `1e-5`, and the closed forms produce exact `0.0`/`1.0` through their
/// `min`/`max` clamps, which is why `eps_zero` and `eps_one` default to exact
/// comparison.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NumericConfig {
    /// Sample count for 1-D sweeps (negation grids, section scans).
    pub grid_1d: usize,
    /// Samples per axis for 2-D sweeps (monotonicity, law checks).
    pub grid_2d: usize,
    /// Halving steps used when locating sup/inf of a monotone predicate.
    pub bisect_iters: u32,
    /// Tolerance for value-equality comparisons.
    pub eps_eq: f64,
    /// Slack allowed in `= 0` tests (`0.0` means exact).
    pub eps_zero: f64,
    /// Slack allowed in `= 1` tests (`0.0` means exact).
    pub eps_one: f64,
    /// One-sided probe offsets for jump detection, largest first.
    pub jump_offsets: [f64; 3],
    /// Smallest one-sided gap reported as a discontinuity.
    pub jump_threshold: f64,
}

impl Default for NumericConfig {
    fn default() -> Self {
        NumericConfig {
            grid_1d: 4097,
            grid_2d: 257,
            bisect_iters: 80,
            eps_eq: 1e-9,
            eps_zero: 0.0,
            eps_one: 0.0,
            jump_offsets: [1e-4, 1e-5, 1e-6],
            jump_threshold: 1e-5,
        }
    }
}

/// Invalid configuration value.
#[derive(Debug, Error, PartialEq)]
pub enum ConfigError {
    #[error("grid sizes must be at least 3 (got {0})")]
    GridTooSmall(usize),
    #[error("bisect_iters must be at least 30 (got {0})")]
    TooFewIterations(u32),
    #[error("{name} must be positive (got {value})")]
    NonPositive { name: &'static str, value: f64 },
    #[error("{name} must be non-negative (got {value})")]
    Negative { name: &'static str, value: f64 },
    #[error("unknown config key `{0}`")]
    UnknownKey(String),
    #[error("could not parse value for `{key}`: {value}")]
    BadValue { key: String, value: String },
}

impl NumericConfig {
    /// Checks the invariants every consumer of the config relies on.
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.grid_1d < 3 {
            return Err(ConfigError::GridTooSmall(self.grid_1d));
        }
        if self.grid_2d < 3 {
            return Err(ConfigError::GridTooSmall(self.grid_2d));
        }
        if self.bisect_iters < 30 {
            return Err(ConfigError::TooFewIterations(self.bisect_iters));
        }
        if self.eps_eq.is_nan() || self.eps_eq <= 0.0 {
            return Err(ConfigError::NonPositive {
                name: "eps_eq",
                value: self.eps_eq,
            });
        }
        for (name, value) in [("eps_zero", self.eps_zero), ("eps_one", self.eps_one)] {
            if value.is_nan() || value < 0.0 {
                return Err(ConfigError::Negative { name, value });
            }
        }
        for delta in self.jump_offsets {
            if delta.is_nan() || delta <= 0.0 {
                return Err(ConfigError::NonPositive {
                    name: "jump_offsets",
                    value: delta,
                });
            }
        }
        if self.jump_threshold.is_nan() || self.jump_threshold <= 0.0 {
            return Err(ConfigError::NonPositive {
                name: "jump_threshold",
                value: self.jump_threshold,
            });
        }
        Ok(())
    }

    /// Applies a `key=value` override as accepted by the CLI `--config` flag.
    pub fn apply_override(&mut self, key: &str, value: &str) -> Result<(), ConfigError> {
        fn parse<T: std::str::FromStr>(key: &str, value: &str) -> Result<T, ConfigError> {
            value.parse().map_err(|_| ConfigError::BadValue {
                key: key.to_string(),
                value: value.to_string(),
            })
        }
        match key {
            "grid_1d" => self.grid_1d = parse(key, value)?,
            "grid_2d" => self.grid_2d = parse(key, value)?,
            "bisect_iters" => self.bisect_iters = parse(key, value)?,
            "eps_eq" => self.eps_eq = parse(key, value)?,
            "eps_zero" => self.eps_zero = parse(key, value)?,
            "eps_one" => self.eps_one = parse(key, value)?,
            "jump_threshold" => self.jump_threshold = parse(key, value)?,
            _ => return Err(ConfigError::UnknownKey(key.to_string())),
        }
        self.validate()
    }

    /// The 1-D sample grid `0, 1/(n-1), ..., 1`.
    pub fn grid_points_1d(&self) -> Vec<f64> {
        uniform_grid(self.grid_1d)
    }

    /// The per-axis sample grid used for 2-D sweeps.
    pub fn grid_points_2d(&self) -> Vec<f64> {
        uniform_grid(self.grid_2d)
    }
}

/// `n` evenly spaced points covering `[0, 1]` with exact endpoints.
pub fn uniform_grid(n: usize) -> Vec<f64> {
    assert!(n >= 2);
    let step = (n - 1) as f64;
    (0..n).map(|i| i as f64 / step).collect()
}
