//! Evaluable connectives on the unit square and unit interval.
//!
//! A [`BinaryConnective`] or [`UnaryFunction`] can be backed by a parsed
//! closed-form expression, by a monotone interpolation grid (the fuzzer's
//! instances), or by an opaque composition such as `D(N(x), y)`. Downstream
//! checks only see the evaluation surface, so induced objects and closed
//! forms run through exactly the same verifications.

use crate::expr::{self, Axis, Expr};
use crate::fuzz::MonotoneGridFunction;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

/// Role a binary connective plays; decides which boundary conditions and
/// monotonicity directions are validated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConnectiveKind {
    Conjunction,
    Disjunction,
    Implication,
    /// Any `[0,1]² → [0,1]` map; only the range is validated.
    Raw,
}

impl fmt::Display for ConnectiveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ConnectiveKind::Conjunction => "conjunction",
            ConnectiveKind::Disjunction => "disjunction",
            ConnectiveKind::Implication => "implication",
            ConnectiveKind::Raw => "raw",
        };
        f.write_str(s)
    }
}

/// Which argument position a neutral element is declared for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NeutralSide {
    Left,
    Right,
    Both,
}

/// A declared neutral element, e.g. `1` on both sides for a t-norm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NeutralElement {
    pub value: f64,
    pub side: NeutralSide,
}

/// Structural properties a connective is declared to have. Declarations are
/// verified numerically by `catalog::validate_connective`; a mismatch is a
/// check failure, not silent trust.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct DeclaredFlags {
    pub commutative: bool,
    pub associative: bool,
    pub left_continuous: bool,
    pub right_continuous: bool,
    pub neutral: Option<NeutralElement>,
}

impl DeclaredFlags {
    pub fn none() -> Self {
        Self::default()
    }

    /// Flags of a t-norm: commutative, associative, neutral element 1.
    pub fn t_norm() -> Self {
        DeclaredFlags {
            commutative: true,
            associative: true,
            neutral: Some(NeutralElement {
                value: 1.0,
                side: NeutralSide::Both,
            }),
            ..Self::default()
        }
    }

    /// Flags of a t-conorm: commutative, associative, neutral element 0.
    pub fn t_conorm() -> Self {
        DeclaredFlags {
            commutative: true,
            associative: true,
            neutral: Some(NeutralElement {
                value: 0.0,
                side: NeutralSide::Both,
            }),
            ..Self::default()
        }
    }

    pub fn commutative(mut self, value: bool) -> Self {
        self.commutative = value;
        self
    }

    pub fn left_continuous(mut self, value: bool) -> Self {
        self.left_continuous = value;
        self
    }

    pub fn right_continuous(mut self, value: bool) -> Self {
        self.right_continuous = value;
        self
    }
}

#[derive(Clone)]
enum BinaryBackend {
    Expr(Expr),
    Grid(Arc<MonotoneGridFunction>),
    Composed(Arc<dyn Fn(f64, f64) -> f64 + Send + Sync>),
}

/// An evaluable `[0,1]² → [0,1]` map with a kind and declared flags.
#[derive(Clone)]
pub struct BinaryConnective {
    name: String,
    kind: ConnectiveKind,
    flags: DeclaredFlags,
    backend: BinaryBackend,
}

impl fmt::Debug for BinaryConnective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BinaryConnective")
            .field("name", &self.name)
            .field("kind", &self.kind)
            .finish_non_exhaustive()
    }
}

impl BinaryConnective {
    /// Wraps a parsed binary expression.
    ///
    /// # Panics
    /// If the expression is unary.
    pub fn from_expr(
        name: impl Into<String>,
        kind: ConnectiveKind,
        flags: DeclaredFlags,
        expr: Expr,
    ) -> Self {
        assert_eq!(
            expr.arity(),
            expr::Arity::Binary,
            "binary connective needs a binary expression"
        );
        BinaryConnective {
            name: name.into(),
            kind,
            flags,
            backend: BinaryBackend::Expr(expr),
        }
    }

    /// Parses `source` and wraps it; convenience for fixtures and tests.
    pub fn parse(
        name: impl Into<String>,
        kind: ConnectiveKind,
        flags: DeclaredFlags,
        source: &str,
    ) -> Result<Self, expr::ParseError> {
        Ok(Self::from_expr(name, kind, flags, expr::parse_connective(source)?))
    }

    /// Wraps a monotone interpolation grid.
    pub fn from_grid(name: impl Into<String>, grid: MonotoneGridFunction) -> Self {
        let kind = grid.kind();
        let flags = DeclaredFlags {
            commutative: grid.is_symmetric(),
            ..DeclaredFlags::default()
        };
        BinaryConnective {
            name: name.into(),
            kind,
            flags,
            backend: BinaryBackend::Grid(Arc::new(grid)),
        }
    }

    /// Wraps an opaque composition.
    pub fn from_fn(
        name: impl Into<String>,
        kind: ConnectiveKind,
        flags: DeclaredFlags,
        f: impl Fn(f64, f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        BinaryConnective {
            name: name.into(),
            kind,
            flags,
            backend: BinaryBackend::Composed(Arc::new(f)),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> ConnectiveKind {
        self.kind
    }

    pub fn flags(&self) -> &DeclaredFlags {
        &self.flags
    }

    /// The defining expression, when the connective is expression-backed.
    pub fn expr(&self) -> Option<&Expr> {
        match &self.backend {
            BinaryBackend::Expr(e) => Some(e),
            _ => None,
        }
    }

    /// The interpolation grid, when the connective is grid-backed.
    pub fn grid(&self) -> Option<&MonotoneGridFunction> {
        match &self.backend {
            BinaryBackend::Grid(g) => Some(g),
            _ => None,
        }
    }

    pub fn eval(&self, x: f64, y: f64) -> f64 {
        match &self.backend {
            BinaryBackend::Expr(e) => e.eval_raw(x, y),
            BinaryBackend::Grid(g) => g.eval(x, y),
            BinaryBackend::Composed(f) => f(x, y),
        }
    }

    /// Interior points where the 1-D section obtained by fixing `axis` at
    /// `value` can change branch. Empty for opaque compositions.
    pub fn section_breakpoints(&self, axis: Axis, value: f64) -> Vec<f64> {
        match &self.backend {
            BinaryBackend::Expr(e) => expr::section_breakpoints(e, Some((axis, value))),
            BinaryBackend::Grid(g) => g.interior_nodes(),
            BinaryBackend::Composed(_) => Vec::new(),
        }
    }

    /// Returns a copy with a different kind tag (used when reinterpreting a
    /// raw fixture as an implication candidate).
    pub fn with_kind(&self, kind: ConnectiveKind) -> Self {
        let mut c = self.clone();
        c.kind = kind;
        c
    }

    /// Returns a copy with different declared flags.
    pub fn with_flags(&self, flags: DeclaredFlags) -> Self {
        let mut c = self.clone();
        c.flags = flags;
        c
    }
}

struct MemoizedUnary {
    f: Box<dyn Fn(f64) -> f64 + Send + Sync>,
    grid_n: usize,
    grid: Vec<f64>,
    cache: RwLock<HashMap<u64, f64>>,
}

impl MemoizedUnary {
    fn eval(&self, x: f64) -> f64 {
        let scaled = x * (self.grid_n - 1) as f64;
        if scaled >= 0.0 && scaled <= (self.grid_n - 1) as f64 && scaled.fract() == 0.0 {
            return self.grid[scaled as usize];
        }
        let key = x.to_bits();
        if let Some(v) = self.cache.read().expect("cache poisoned").get(&key) {
            return *v;
        }
        let v = (self.f)(x);
        self.cache.write().expect("cache poisoned").insert(key, v);
        v
    }
}

#[derive(Clone)]
enum UnaryBackend {
    Expr(Expr),
    Fn(Arc<dyn Fn(f64) -> f64 + Send + Sync>),
    Memoized(Arc<MemoizedUnary>),
}

/// An evaluable `[0,1] → [0,1]` map: negation candidates, pseudo-inverses,
/// sections of binary connectives.
#[derive(Clone)]
pub struct UnaryFunction {
    name: String,
    backend: UnaryBackend,
    breakpoints: Vec<f64>,
}

impl fmt::Debug for UnaryFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("UnaryFunction")
            .field("name", &self.name)
            .finish_non_exhaustive()
    }
}

impl UnaryFunction {
    /// Wraps a parsed unary expression; breakpoints come from its guards.
    ///
    /// # Panics
    /// If the expression is binary.
    pub fn from_expr(name: impl Into<String>, expr: Expr) -> Self {
        assert_eq!(
            expr.arity(),
            expr::Arity::Unary,
            "unary function needs a unary expression"
        );
        let breakpoints = expr::section_breakpoints(&expr, None);
        UnaryFunction {
            name: name.into(),
            backend: UnaryBackend::Expr(expr),
            breakpoints,
        }
    }

    /// Parses `source` and wraps it.
    pub fn parse(name: impl Into<String>, source: &str) -> Result<Self, expr::ParseError> {
        Ok(Self::from_expr(name, expr::parse_connective(source)?))
    }

    /// Wraps a plain closure, with optionally known breakpoints.
    pub fn from_fn(
        name: impl Into<String>,
        breakpoints: Vec<f64>,
        f: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        UnaryFunction {
            name: name.into(),
            backend: UnaryBackend::Fn(Arc::new(f)),
            breakpoints,
        }
    }

    /// Wraps an expensive closure (bisection-backed induced negations),
    /// precomputing it on a uniform grid of `grid_n` points and caching every
    /// off-grid query. The cache is synchronized, so sharing across threads
    /// is safe.
    pub fn memoized(
        name: impl Into<String>,
        grid_n: usize,
        f: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        assert!(grid_n >= 2);
        let grid = (0..grid_n)
            .map(|i| f(i as f64 / (grid_n - 1) as f64))
            .collect();
        UnaryFunction {
            name: name.into(),
            backend: UnaryBackend::Memoized(Arc::new(MemoizedUnary {
                f: Box::new(f),
                grid_n,
                grid,
            cache: RwLock::new(HashMap::new()),
            })),
            breakpoints: Vec::new(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Renames the function, keeping the backend.
    pub fn renamed(&self, name: impl Into<String>) -> Self {
        let mut f = self.clone();
        f.name = name.into();
        f
    }

    /// The defining expression, when expression-backed.
    pub fn expr(&self) -> Option<&Expr> {
        match &self.backend {
            UnaryBackend::Expr(e) => Some(e),
            _ => None,
        }
    }

    /// Known interior points where the function may be discontinuous or
    /// non-smooth. Sorted, deduplicated, all in `(0, 1)`.
    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    pub fn eval(&self, x: f64) -> f64 {
        match &self.backend {
            UnaryBackend::Expr(e) => e.eval_raw(x, f64::NAN),
            UnaryBackend::Fn(f) => f(x),
            UnaryBackend::Memoized(m) => m.eval(x),
        }
    }
}
