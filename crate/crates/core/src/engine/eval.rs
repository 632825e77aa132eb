//! Script evaluation on a concrete base triangle.
//!
//! Bindings are evaluated in order into an environment. Geometric degeneracy
//! (a collapsed construction, parallel lines, a zero ray, a non-finite
//! scalar) poisons the affected binding; assertions that touch a poisoned
//! value are recorded as degenerate skips while the rest still run. Argument
//! kind mismatches are programming errors in the script and surface as
//! [`EvalError`] instead.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::centers::{self, Triangle, Vertex};
use crate::dsl::{builtin, Assertion, Expr, Script, Stmt, ValueKind};
use crate::geom::{
    angle_at, dot, foot, intersect_lines, line_through, midpoint, reflect, vector_between, Circle,
    Line, Point, Vector,
};

use super::{
    check_coincides, check_equal, check_on_circle, check_perpendicular, CheckOutcome,
    ToleranceContext,
};

/// A runtime script value.
#[derive(Clone, Copy, Debug)]
pub enum Value {
    Point(Point),
    Vector(Vector),
    Line(Line),
    Circle(Circle),
    Scalar(f64),
}

impl Value {
    pub fn kind(&self) -> ValueKind {
        match self {
            Value::Point(_) => ValueKind::Point,
            Value::Vector(_) => ValueKind::Vector,
            Value::Line(_) => ValueKind::Line,
            Value::Circle(_) => ValueKind::Circle,
            Value::Scalar(_) => ValueKind::Scalar,
        }
    }
}

/// A kind mismatch (or similar programming error) found while evaluating a
/// script. Deterministic for a given script, unlike geometric degeneracy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalError {
    /// The originating binding name or assertion position.
    pub context: String,
    pub message: String,
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "in {}: {}", self.context, self.message)
    }
}

impl core::error::Error for EvalError {}

/// Per-assertion outcome of one trial.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum AssertionOutcome {
    Pass {
        residual: f64,
    },
    Fail {
        residual: f64,
    },
    /// A value feeding the assertion degenerated; the trial is skipped for
    /// this assertion, neither passed nor failed.
    Skipped,
}

/// `None` marks a geometrically degenerate (poisoned) value.
type Slot = Option<Value>;

fn scalar(x: f64) -> Slot {
    x.is_finite().then_some(Value::Scalar(x))
}

fn from_point(r: Result<Point, centers::DegenerateTriangle>) -> Slot {
    r.ok().map(Value::Point)
}

fn apply_builtin(name: &str, args: &[Value]) -> Result<Slot, String> {
    let sig = builtin(name).expect("parser admits only known builtins");
    for (i, (arg, want)) in args.iter().zip(sig.params).enumerate() {
        if arg.kind() != *want {
            return Err(format!(
                "'{}' argument {}: expected {}, got {}",
                name,
                i + 1,
                want,
                arg.kind()
            ));
        }
    }

    let point = |i: usize| match args[i] {
        Value::Point(p) => p,
        _ => unreachable!(),
    };
    let vector = |i: usize| match args[i] {
        Value::Vector(v) => v,
        _ => unreachable!(),
    };
    let line = |i: usize| match args[i] {
        Value::Line(l) => l,
        _ => unreachable!(),
    };
    let num = |i: usize| match args[i] {
        Value::Scalar(s) => s,
        _ => unreachable!(),
    };
    let tri = || Triangle::new(point(0), point(1), point(2));

    Ok(match name {
        "orthocenter" => from_point(centers::orthocenter(&tri())),
        "incenter" => from_point(centers::incenter(&tri())),
        "circumcenter" => centers::circumcircle(&tri())
            .ok()
            .map(|c| Value::Point(c.center)),
        "circumradius" => centers::circumcircle(&tri())
            .ok()
            .map(|c| Value::Scalar(c.radius)),
        "circumcircle" => centers::circumcircle(&tri()).ok().map(Value::Circle),
        // Midpoint of the arc cut by the last two arguments, away from the first.
        "arc_midpoint" => from_point(centers::arc_midpoint(&tri(), Vertex::A)),
        "reflect" => Some(Value::Point(reflect(point(0), line(1)))),
        "line" => line_through(point(0), point(1)).ok().map(Value::Line),
        "intersect" => intersect_lines(line(0), line(1)).ok().map(Value::Point),
        "foot" => Some(Value::Point(foot(point(0), line(1)))),
        "midpoint" => Some(Value::Point(midpoint(point(0), point(1)))),
        "vec" => Some(Value::Vector(vector_between(point(0), point(1)))),
        "dot" => scalar(dot(vector(0), vector(1))),
        "length" => scalar(vector(0).norm()),
        "dist" => scalar(vector_between(point(0), point(1)).norm()),
        // The vertex is the SECOND argument: angle(B, A, C) is the angle at A.
        "angle" => angle_at(point(1), point(0), point(2))
            .ok()
            .map(Value::Scalar),
        "sin" => scalar(crate::num::sin(num(0))),
        "cos" => scalar(crate::num::cos(num(0))),
        "add" => scalar(num(0) + num(1)),
        "sub" => scalar(num(0) - num(1)),
        "mul" => scalar(num(0) * num(1)),
        "div" => scalar(num(0) / num(1)),
        _ => unreachable!("unknown builtin '{}'", name),
    })
}

fn eval_expr(expr: &Expr, env: &BTreeMap<&str, Slot>) -> Result<Slot, String> {
    match expr {
        Expr::Number { value, .. } => Ok(Some(Value::Scalar(*value))),
        Expr::Ident { name, .. } => Ok(*env
            .get(name.as_str())
            .expect("parser guarantees bound identifiers")),
        Expr::Call { name, args, .. } => {
            let mut values = Vec::with_capacity(args.len());
            for arg in args {
                match eval_expr(arg, env)? {
                    Some(v) => values.push(v),
                    // Degeneracy poisons the whole call.
                    None => return Ok(None),
                }
            }
            apply_builtin(name, &values)
        }
    }
}

fn eval_assertion(
    assertion: &Assertion,
    index: usize,
    env: &BTreeMap<&str, Slot>,
    tol: &ToleranceContext,
) -> Result<AssertionOutcome, EvalError> {
    let context = || match &assertion.label {
        Some(label) => format!("assertion {} (\"{}\")", index, label),
        None => format!("assertion {}", index),
    };
    let err = |message: String| EvalError {
        context: context(),
        message,
    };

    let lhs = eval_expr(&assertion.args[0], env).map_err(&err)?;
    let rhs = eval_expr(&assertion.args[1], env).map_err(&err)?;
    let (Some(lhs), Some(rhs)) = (lhs, rhs) else {
        return Ok(AssertionOutcome::Skipped);
    };

    let want = assertion.kind.params();
    for (value, want) in [(&lhs, want[0]), (&rhs, want[1])] {
        if value.kind() != want {
            return Err(err(format!(
                "{}: expected {}, got {}",
                assertion.kind.name(),
                want,
                value.kind()
            )));
        }
    }

    let outcome = match (assertion.kind, lhs, rhs) {
        (crate::dsl::AssertionKind::Perpendicular, Value::Vector(u), Value::Vector(v)) => {
            check_perpendicular(u, v, tol)
        }
        (crate::dsl::AssertionKind::Coincides, Value::Point(p), Value::Point(q)) => {
            check_coincides(p, q, tol)
        }
        (crate::dsl::AssertionKind::Equal, Value::Scalar(a), Value::Scalar(b)) => {
            check_equal(a, b, tol)
        }
        (crate::dsl::AssertionKind::OnCircle, Value::Point(p), Value::Circle(c)) => {
            check_on_circle(p, c, tol)
        }
        _ => unreachable!("kinds checked above"),
    };

    Ok(match outcome {
        CheckOutcome::Pass { residual } => AssertionOutcome::Pass { residual },
        CheckOutcome::Fail { residual } => AssertionOutcome::Fail { residual },
        CheckOutcome::Degenerate => AssertionOutcome::Skipped,
    })
}

/// Evaluates every binding and assertion of `script` on `base`, yielding one
/// outcome per assertion in script order. Degeneracy in a shared binding
/// skips only its dependents; kind mismatches abort with [`EvalError`].
pub fn evaluate(
    script: &Script,
    base: &Triangle,
    tol: &ToleranceContext,
) -> Result<Vec<AssertionOutcome>, EvalError> {
    let mut env: BTreeMap<&str, Slot> = BTreeMap::new();
    env.insert(script.triangle[0].as_str(), Some(Value::Point(base.a)));
    env.insert(script.triangle[1].as_str(), Some(Value::Point(base.b)));
    env.insert(script.triangle[2].as_str(), Some(Value::Point(base.c)));

    let mut outcomes = Vec::with_capacity(script.assertion_count());
    let mut index = 0usize;
    for stmt in &script.statements {
        match stmt {
            Stmt::Let(binding) => {
                let slot = eval_expr(&binding.expr, &env).map_err(|message| EvalError {
                    context: format!("binding '{}'", binding.name),
                    message,
                })?;
                env.insert(binding.name.as_str(), slot);
            }
            Stmt::Assert(assertion) => {
                outcomes.push(eval_assertion(assertion, index, &env, tol)?);
                index += 1;
            }
        }
    }
    Ok(outcomes)
}
