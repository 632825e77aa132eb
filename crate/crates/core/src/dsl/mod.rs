//! The `.geo` construction-script language: lexer, recursive-descent parser,
//! AST, and diagnostics.
//!
//! A script declares one free triangle, then binds derived objects and
//! asserts relations between them:
//!
//! ```text
//! @expect pass
//! triangle A B C
//! let H = orthocenter(A, B, C)
//! assert coincides(H, H) : "trivially true"
//! ```
//!
//! Statements are line-oriented; expressions are prefix function calls over
//! a fixed builtin set (no infix operators, no user functions). Comments run
//! from `#` to end of line. Identifiers are bound before use and never
//! rebound; arities are checked at parse time, argument kinds at evaluation
//! time.

mod lexer;
mod parser;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub use parser::parse;

/// 1-based source position.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: u32,
    pub col: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiagnosticKind {
    Syntax,
    Semantic,
}

/// A parse-time failure, pointing at the first offending token.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub kind: DiagnosticKind,
    pub pos: Pos,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.pos.line, self.pos.col, self.message)
    }
}

impl core::error::Error for Diagnostic {}

/// Stable single-line rendering: `file:line:col: message`.
pub fn format_diagnostic(file: &str, diag: &Diagnostic) -> String {
    format!(
        "{}:{}:{}: {}",
        file, diag.pos.line, diag.pos.col, diag.message
    )
}

/// Runtime kinds of script values.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ValueKind {
    Point,
    Vector,
    Line,
    Circle,
    Scalar,
}

impl fmt::Display for ValueKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            ValueKind::Point => "Point",
            ValueKind::Vector => "Vector",
            ValueKind::Line => "Line",
            ValueKind::Circle => "Circle",
            ValueKind::Scalar => "Scalar",
        };
        f.write_str(name)
    }
}

/// Signature of a builtin function.
#[derive(Clone, Copy, Debug)]
pub struct BuiltinSig {
    pub name: &'static str,
    pub params: &'static [ValueKind],
    pub ret: ValueKind,
}

use ValueKind::{Circle as Ci, Line as L, Point as P, Scalar as S, Vector as V};

/// The fixed builtin set. `arc_midpoint(O, P, Q)` is the midpoint of the arc
/// cut by `P`, `Q` not containing `O`; `angle(P, O, Q)` is the angle at its
/// second argument.
#[rustfmt::skip]
pub const BUILTINS: &[BuiltinSig] = &[
    BuiltinSig { name: "orthocenter",  params: &[P, P, P], ret: P },
    BuiltinSig { name: "incenter",     params: &[P, P, P], ret: P },
    BuiltinSig { name: "circumcenter", params: &[P, P, P], ret: P },
    BuiltinSig { name: "circumradius", params: &[P, P, P], ret: S },
    BuiltinSig { name: "circumcircle", params: &[P, P, P], ret: Ci },
    BuiltinSig { name: "arc_midpoint", params: &[P, P, P], ret: P },
    BuiltinSig { name: "reflect",      params: &[P, L],    ret: P },
    BuiltinSig { name: "line",         params: &[P, P],    ret: L },
    BuiltinSig { name: "intersect",    params: &[L, L],    ret: P },
    BuiltinSig { name: "foot",         params: &[P, L],    ret: P },
    BuiltinSig { name: "midpoint",     params: &[P, P],    ret: P },
    BuiltinSig { name: "vec",          params: &[P, P],    ret: V },
    BuiltinSig { name: "dot",          params: &[V, V],    ret: S },
    BuiltinSig { name: "length",       params: &[V],       ret: S },
    BuiltinSig { name: "dist",         params: &[P, P],    ret: S },
    BuiltinSig { name: "angle",        params: &[P, P, P], ret: S },
    BuiltinSig { name: "sin",          params: &[S],       ret: S },
    BuiltinSig { name: "cos",          params: &[S],       ret: S },
    BuiltinSig { name: "add",          params: &[S, S],    ret: S },
    BuiltinSig { name: "sub",          params: &[S, S],    ret: S },
    BuiltinSig { name: "mul",          params: &[S, S],    ret: S },
    BuiltinSig { name: "div",          params: &[S, S],    ret: S },
];

pub fn builtin(name: &str) -> Option<&'static BuiltinSig> {
    BUILTINS.iter().find(|b| b.name == name)
}

/// Script-level pass/fail expectation (`@expect` pragma; defaults to pass).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expectation {
    Pass,
    Fail,
}

/// An expression: identifier reference, numeric literal, or builtin call.
#[derive(Clone, Debug)]
pub enum Expr {
    Ident {
        name: String,
        pos: Pos,
    },
    Number {
        value: f64,
        pos: Pos,
    },
    Call {
        name: String,
        pos: Pos,
        args: Vec<Expr>,
    },
}

impl Expr {
    pub fn pos(&self) -> Pos {
        match self {
            Expr::Ident { pos, .. } | Expr::Number { pos, .. } | Expr::Call { pos, .. } => *pos,
        }
    }
}

// Structural identity ignores source positions, so a pretty-printed script
// reparses to an equal AST.
impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Expr::Ident { name: a, .. }, Expr::Ident { name: b, .. }) => a == b,
            (Expr::Number { value: a, .. }, Expr::Number { value: b, .. }) => a == b,
            (
                Expr::Call {
                    name: a, args: ax, ..
                },
                Expr::Call {
                    name: b, args: bx, ..
                },
            ) => a == b && ax == bx,
            _ => false,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Binding {
    pub name: String,
    pub expr: Expr,
    pub pos: Pos,
}

impl PartialEq for Binding {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.expr == other.expr
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AssertionKind {
    Perpendicular,
    Coincides,
    Equal,
    OnCircle,
}

impl AssertionKind {
    pub fn name(self) -> &'static str {
        match self {
            AssertionKind::Perpendicular => "perpendicular",
            AssertionKind::Coincides => "coincides",
            AssertionKind::Equal => "equal",
            AssertionKind::OnCircle => "on_circle",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "perpendicular" => Some(AssertionKind::Perpendicular),
            "coincides" => Some(AssertionKind::Coincides),
            "equal" => Some(AssertionKind::Equal),
            "on_circle" => Some(AssertionKind::OnCircle),
            _ => None,
        }
    }

    /// Expected argument kinds.
    pub fn params(self) -> [ValueKind; 2] {
        match self {
            AssertionKind::Perpendicular => [V, V],
            AssertionKind::Coincides => [P, P],
            AssertionKind::Equal => [S, S],
            AssertionKind::OnCircle => [P, Ci],
        }
    }
}

#[derive(Clone, Debug)]
pub struct Assertion {
    pub kind: AssertionKind,
    pub args: Vec<Expr>,
    pub label: Option<String>,
    pub pos: Pos,
}

impl PartialEq for Assertion {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind && self.args == other.args && self.label == other.label
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Stmt {
    Let(Binding),
    Assert(Assertion),
}

/// A parsed construction script. Invariants (enforced by [`parse`]): exactly
/// one triangle declaration, before any statement; every identifier bound
/// before use; no rebinding.
#[derive(Clone, Debug, PartialEq)]
pub struct Script {
    pub expectation: Expectation,
    pub triangle: [String; 3],
    pub statements: Vec<Stmt>,
}

impl Script {
    /// Assertions in script order, with their indices.
    pub fn assertions(&self) -> impl Iterator<Item = (usize, &Assertion)> {
        self.statements
            .iter()
            .filter_map(|s| match s {
                Stmt::Assert(a) => Some(a),
                Stmt::Let(_) => None,
            })
            .enumerate()
    }

    pub fn assertion_count(&self) -> usize {
        self.assertions().count()
    }
}

fn write_expr(out: &mut String, expr: &Expr) {
    use core::fmt::Write;
    match expr {
        Expr::Ident { name, .. } => out.push_str(name),
        Expr::Number { value, .. } => {
            let _ = write!(out, "{}", value);
        }
        Expr::Call { name, args, .. } => {
            out.push_str(name);
            out.push('(');
            for (i, arg) in args.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                write_expr(out, arg);
            }
            out.push(')');
        }
    }
}

/// Canonical source rendering; `parse(to_source(s))` is structurally
/// identical to `s`.
pub fn to_source(script: &Script) -> String {
    let mut out = String::new();
    out.push_str(match script.expectation {
        Expectation::Pass => "@expect pass\n",
        Expectation::Fail => "@expect fail\n",
    });
    out.push_str("triangle ");
    out.push_str(&script.triangle[0]);
    out.push(' ');
    out.push_str(&script.triangle[1]);
    out.push(' ');
    out.push_str(&script.triangle[2]);
    out.push('\n');
    for stmt in &script.statements {
        match stmt {
            Stmt::Let(b) => {
                out.push_str("let ");
                out.push_str(&b.name);
                out.push_str(" = ");
                write_expr(&mut out, &b.expr);
                out.push('\n');
            }
            Stmt::Assert(a) => {
                out.push_str("assert ");
                out.push_str(a.kind.name());
                out.push('(');
                for (i, arg) in a.args.iter().enumerate() {
                    if i > 0 {
                        out.push_str(", ");
                    }
                    write_expr(&mut out, arg);
                }
                out.push(')');
                if let Some(label) = &a.label {
                    out.push_str(" : \"");
                    out.push_str(label);
                    out.push('"');
                }
                out.push('\n');
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_minimal_script() {
        let script =
            parse("triangle A B C\nlet H = orthocenter(A,B,C)\nassert coincides(H,H)").unwrap();
        assert_eq!(script.expectation, Expectation::Pass);
        assert_eq!(script.triangle, ["A", "B", "C"]);
        assert_eq!(script.statements.len(), 2);
        assert_eq!(script.assertion_count(), 1);
    }

    #[test]
    fn missing_triangle_declaration() {
        let err = parse("let H = orthocenter(A,B,C)").unwrap_err();
        assert_eq!(err.kind, DiagnosticKind::Semantic);
        assert_eq!(err.pos, Pos { line: 1, col: 1 });
    }

    #[test]
    fn assertion_arity_is_checked() {
        let err = parse("triangle A B C\nassert perpendicular(vec(A,B))").unwrap_err();
        assert_eq!(err.kind, DiagnosticKind::Semantic);
        assert!(err.message.contains("perpendicular expects 2 arguments"));
        assert_eq!(err.pos, Pos { line: 2, col: 8 });
    }

    #[test]
    fn diagnostics_format_as_file_line_col() {
        let diag = Diagnostic {
            kind: DiagnosticKind::Syntax,
            pos: Pos { line: 3, col: 7 },
            message: alloc::string::String::from("expected ')'"),
        };
        assert_eq!(
            format_diagnostic("lemma1.geo", &diag),
            "lemma1.geo:3:7: expected ')'"
        );
    }

    #[test]
    fn unbound_identifier_is_reported() {
        let err = parse("triangle A B C\nlet H = orthocenter(A, B, X1)").unwrap_err();
        assert_eq!(err.kind, DiagnosticKind::Semantic);
        assert!(err.message.contains("unbound identifier 'X1'"));
        assert_eq!(err.pos, Pos { line: 2, col: 27 });
    }

    #[test]
    fn parse_is_deterministic() {
        let src = "@expect fail\ntriangle A B C\nlet u = vec(A, B)\nassert equal(dot(u, u), 2) : \"squared length\"\n";
        assert_eq!(parse(src).unwrap(), parse(src).unwrap());
    }

    #[test]
    fn pretty_print_round_trips() {
        let src = "@expect fail\ntriangle P1 Q R\nlet u = vec(P1, Q)\nlet s = add(dot(u, u), 1.5e-3)\nassert equal(s, 2) : \"has label\"\nassert on_circle(P1, circumcircle(P1, Q, R))\n";
        let script = parse(src).unwrap();
        let printed = to_source(&script);
        let reparsed = parse(&printed).unwrap();
        assert_eq!(script, reparsed);
        // Canonical text is a fixed point of the printer.
        assert_eq!(printed, to_source(&reparsed));
    }

    #[test]
    fn labels_survive_round_trip() {
        let script = parse("triangle A B C\nassert coincides(A, A) : \"self\"").unwrap();
        let Stmt::Assert(a) = &script.statements[0] else {
            panic!("expected assertion")
        };
        assert_eq!(a.label.as_deref(), Some("self"));
    }
}
