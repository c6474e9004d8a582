//! A small piecewise expression language on the unit interval/square.
//!
//! Every connective shipped in the catalog is written in this language:
//! expression trees over the variables `x` and `y`, exact rational constants,
//! the operators `+ - * /`, `min`, `max`, `sqrt`, `pow(e, r)` with a rational
//! exponent, and guarded piecewise branches
//!
//! ```text
//! piece(x + y >= 1 : 1 ; else : y)
//! ```
//!
//! Guards are conjunctions of comparisons (`<`, `<=`, `=`, `>`, `>=`) and are
//! resolved in declaration order, mirroring how "otherwise" rows are written
//! in the usual tables of fuzzy connectives. Comparisons are exact on the
//! computed doubles; constants are parsed as exact rationals and converted to
//! binary floating point once, so evaluation is reproducible across
//! platforms.
//!
//! [`parse_connective`] is the registration entry point: it parses, checks
//! that the branches cover the domain, and checks that sampled values stay
//! inside `[0, 1]`.

mod analyze;
mod parse;
mod print;

pub use analyze::section_breakpoints;
pub use parse::ParseError;

use std::fmt;
use std::sync::Arc;

/// Number of arguments an expression takes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Arity {
    Unary,
    Binary,
}

/// Which variable of a binary expression is held fixed when slicing it down
/// to one dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
}

/// An exact rational constant together with its one-time double conversion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rational {
    pub num: i64,
    pub den: i64,
}

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "rational with zero denominator");
        let g = gcd(num.unsigned_abs(), den.unsigned_abs()) as i64;
        let sign = if den < 0 { -1 } else { 1 };
        Rational {
            num: sign * num / g,
            den: sign * den / g,
        }
    }

    pub fn integer(n: i64) -> Self {
        Rational { num: n, den: 1 }
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if a == 0 && b == 0 {
        return 1;
    }
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CmpOp {
    Lt,
    Le,
    Eq,
    Gt,
    Ge,
}

impl CmpOp {
    fn holds(self, lhs: f64, rhs: f64) -> bool {
        match self {
            CmpOp::Lt => lhs < rhs,
            CmpOp::Le => lhs <= rhs,
            CmpOp::Eq => lhs == rhs,
            CmpOp::Gt => lhs > rhs,
            CmpOp::Ge => lhs >= rhs,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            CmpOp::Lt => "<",
            CmpOp::Le => "<=",
            CmpOp::Eq => "=",
            CmpOp::Gt => ">",
            CmpOp::Ge => ">=",
        }
    }
}

/// One comparison inside a piecewise guard.
#[derive(Debug, Clone, PartialEq)]
pub struct Comparison {
    pub lhs: Node,
    pub op: CmpOp,
    pub rhs: Node,
}

/// A guarded branch of a piecewise expression.
#[derive(Debug, Clone, PartialEq)]
pub struct Branch {
    /// Conjunction of comparisons; empty means "always".
    pub guard: Vec<Comparison>,
    pub value: Node,
}

/// Expression tree node.
#[derive(Debug, Clone, PartialEq)]
pub enum Node {
    Var(Axis),
    Const(Rational),
    Neg(Box<Node>),
    Bin(BinOp, Box<Node>, Box<Node>),
    Min(Box<Node>, Box<Node>),
    Max(Box<Node>, Box<Node>),
    Sqrt(Box<Node>),
    Pow(Box<Node>, Rational),
    /// Ordered branches plus an optional `else` catch-all.
    Piecewise(Vec<Branch>, Option<Box<Node>>),
}

impl Node {
    fn eval(&self, x: f64, y: f64) -> f64 {
        match self {
            Node::Var(Axis::X) => x,
            Node::Var(Axis::Y) => y,
            Node::Const(r) => r.to_f64(),
            Node::Neg(a) => -a.eval(x, y),
            Node::Bin(op, a, b) => {
                let (a, b) = (a.eval(x, y), b.eval(x, y));
                match op {
                    BinOp::Add => a + b,
                    BinOp::Sub => a - b,
                    BinOp::Mul => a * b,
                    BinOp::Div => a / b,
                }
            }
            Node::Min(a, b) => a.eval(x, y).min(b.eval(x, y)),
            Node::Max(a, b) => a.eval(x, y).max(b.eval(x, y)),
            Node::Sqrt(a) => a.eval(x, y).sqrt(),
            Node::Pow(a, r) => {
                let base = a.eval(x, y);
                if r.den == 1 {
                    base.powi(r.num as i32)
                } else {
                    base.powf(r.to_f64())
                }
            }
            Node::Piecewise(branches, otherwise) => {
                for branch in branches {
                    if branch
                        .guard
                        .iter()
                        .all(|c| c.op.holds(c.lhs.eval(x, y), c.rhs.eval(x, y)))
                    {
                        return branch.value.eval(x, y);
                    }
                }
                match otherwise {
                    Some(node) => node.eval(x, y),
                    None => f64::NAN,
                }
            }
        }
    }

    fn uses(&self, axis: Axis) -> bool {
        match self {
            Node::Var(v) => *v == axis,
            Node::Const(_) => false,
            Node::Neg(a) | Node::Sqrt(a) | Node::Pow(a, _) => a.uses(axis),
            Node::Bin(_, a, b) | Node::Min(a, b) | Node::Max(a, b) => {
                a.uses(axis) || b.uses(axis)
            }
            Node::Piecewise(branches, otherwise) => {
                branches.iter().any(|b| {
                    b.value.uses(axis)
                        || b.guard
                            .iter()
                            .any(|c| c.lhs.uses(axis) || c.rhs.uses(axis))
                }) || otherwise.as_ref().is_some_and(|n| n.uses(axis))
            }
        }
    }
}

/// A parsed, range-checked piecewise expression of one or two variables.
///
/// Immutable after parsing; evaluation is stateless and safe to share across
/// threads.
#[derive(Debug, Clone, PartialEq)]
pub struct Expr {
    arity: Arity,
    body: Arc<Node>,
}

/// Evaluation failure.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum EvalError {
    #[error("expression takes {expected:?} argument(s), point has {got}")]
    ArityMismatch { expected: Arity, got: usize },
}

impl Expr {
    pub fn arity(&self) -> Arity {
        self.arity
    }

    pub(crate) fn body(&self) -> &Node {
        &self.body
    }

    /// Evaluates a unary expression.
    pub fn eval1(&self, x: f64) -> Result<f64, EvalError> {
        if self.arity != Arity::Unary {
            return Err(EvalError::ArityMismatch {
                expected: self.arity,
                got: 1,
            });
        }
        Ok(self.body.eval(x, f64::NAN))
    }

    /// Evaluates a binary expression.
    pub fn eval2(&self, x: f64, y: f64) -> Result<f64, EvalError> {
        if self.arity != Arity::Binary {
            return Err(EvalError::ArityMismatch {
                expected: self.arity,
                got: 2,
            });
        }
        Ok(self.body.eval(x, y))
    }

    /// Evaluates at a point of matching arity.
    pub fn evaluate(&self, point: &[f64]) -> Result<f64, EvalError> {
        match (self.arity, point) {
            (Arity::Unary, [x]) => Ok(self.body.eval(*x, f64::NAN)),
            (Arity::Binary, [x, y]) => Ok(self.body.eval(*x, *y)),
            _ => Err(EvalError::ArityMismatch {
                expected: self.arity,
                got: point.len(),
            }),
        }
    }

    /// Evaluation that assumes the caller got the arity right; unary
    /// expressions ignore `y`.
    pub(crate) fn eval_raw(&self, x: f64, y: f64) -> f64 {
        self.body.eval(x, y)
    }

    /// Renders the expression in the canonical form accepted by the parser.
    pub fn to_canonical_string(&self) -> String {
        print::print(&self.body)
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

impl std::str::FromStr for Expr {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_connective(s)
    }
}

/// Parses a connective definition and validates it for registration:
/// the piecewise branches must cover the domain and sampled values must stay
/// in `[0, 1]`.
///
/// Arity is deduced from the variables used (`y` anywhere makes the
/// expression binary).
pub fn parse_connective(source: &str) -> Result<Expr, ParseError> {
    let node = parse::parse(source)?;
    let arity = if node.uses(Axis::Y) {
        Arity::Binary
    } else {
        Arity::Unary
    };
    let expr = Expr {
        arity,
        body: Arc::new(node),
    };
    analyze::check_registration(&expr)?;
    Ok(expr)
}

/// Parses a definition file: one `name := expr` per line, `#` starts a
/// comment. Returns definitions in file order.
pub fn parse_definition_file(text: &str) -> Result<Vec<(String, Expr)>, ParseError> {
    let mut defs = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(idx) => &raw[..idx],
            None => raw,
        };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let Some((name, body)) = line.split_once(":=") else {
            return Err(ParseError::Syntax {
                position: 0,
                expected: format!("`name := expr` on line {}", lineno + 1),
            });
        };
        let name = name.trim();
        if name.is_empty() || !name.chars().all(|c| c.is_alphanumeric() || c == '_') {
            return Err(ParseError::Syntax {
                position: 0,
                expected: format!("a definition name on line {}", lineno + 1),
            });
        }
        let expr = parse_connective(body.trim()).map_err(|e| e.on_line(lineno + 1))?;
        defs.push((name.to_string(), expr));
    }
    Ok(defs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(src: &str) -> Expr {
        parse_connective(src).unwrap()
    }

    #[test]
    fn lukasiewicz_conjunction_values() {
        let e = p("max(x + y - 1, 0)");
        assert_eq!(e.arity(), Arity::Binary);
        assert!((e.eval2(0.7, 0.6).unwrap() - 0.3).abs() < 1e-15);
        assert_eq!(e.eval2(0.2, 0.3).unwrap(), 0.0);
    }

    #[test]
    fn standard_negation_boundaries() {
        let e = p("1 - x");
        assert_eq!(e.arity(), Arity::Unary);
        assert_eq!(e.eval1(0.0).unwrap(), 1.0);
        assert_eq!(e.eval1(1.0).unwrap(), 0.0);
    }

    #[test]
    fn piecewise_order_resolved() {
        let e = p("piece(x + y >= 1 : 1 ; else : y)");
        assert_eq!(e.eval2(0.5, 0.5).unwrap(), 1.0);
        assert_eq!(e.eval2(0.2, 0.3).unwrap(), 0.3);
    }

    #[test]
    fn clamped_quadratic_disjunction() {
        let e = p("min(1, pow(x, 2) + pow(y, 2))");
        assert_eq!(e.eval2(0.6, 0.8).unwrap(), 1.0);
        assert!((e.eval2(0.3, 0.4).unwrap() - 0.25).abs() < 1e-15);
    }

    #[test]
    fn arity_mismatch_rejected() {
        let e = p("1 - x");
        assert!(e.eval2(0.1, 0.2).is_err());
        assert!(e.evaluate(&[0.1, 0.2]).is_err());
        assert!(p("min(x, y)").eval1(0.1).is_err());
    }

    #[test]
    fn rational_constants_fold_exactly() {
        let e = p("3/4 * x");
        assert_eq!(e.eval1(1.0).unwrap(), 0.75);
        let e = p("1/2 - x/2");
        assert_eq!(e.eval1(0.5).unwrap(), 0.25);
    }

    #[test]
    fn definition_file_parses() {
        let defs = parse_definition_file(
            "# two classics\nT_L := max(x + y - 1, 0)\nN_S := 1 - x # standard\n",
        )
        .unwrap();
        assert_eq!(defs.len(), 2);
        assert_eq!(defs[0].0, "T_L");
        assert_eq!(defs[1].1.eval1(0.25).unwrap(), 0.75);
    }

    #[test]
    fn evaluation_is_pure() {
        let e = p("piece(x < 1/2 : max(x/2 + y - 1, 0) ; else : max(x + y - 1, 0))");
        let a = e.eval2(0.3, 0.9).unwrap();
        let b = e.eval2(0.3, 0.9).unwrap();
        assert_eq!(a.to_bits(), b.to_bits());
    }
}
