//! Recursive-descent parser over the token stream. Binding discipline
//! (no use-before-bind, no rebinding, one triangle declaration) is enforced
//! here so a parsed [`Script`] always satisfies its invariants.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::lexer::{lex, Tok, Token};
use super::{
    builtin, Assertion, AssertionKind, Binding, Diagnostic, DiagnosticKind, Expectation, Expr, Pos,
    Script, Stmt,
};

const RESERVED: &[&str] = &[
    "triangle",
    "let",
    "assert",
    "perpendicular",
    "coincides",
    "equal",
    "on_circle",
];

struct Parser {
    tokens: Vec<Token>,
    index: usize,
    bound: BTreeSet<String>,
}

fn syntax(pos: Pos, message: String) -> Diagnostic {
    Diagnostic {
        kind: DiagnosticKind::Syntax,
        pos,
        message,
    }
}

fn semantic(pos: Pos, message: String) -> Diagnostic {
    Diagnostic {
        kind: DiagnosticKind::Semantic,
        pos,
        message,
    }
}

/// Parses a `.geo` source into a [`Script`], or reports a diagnostic at the
/// first offending token.
pub fn parse(source: &str) -> Result<Script, Diagnostic> {
    let source = source.strip_prefix('\u{feff}').unwrap_or(source);
    let tokens = lex(source)?;
    Parser {
        tokens,
        index: 0,
        bound: BTreeSet::new(),
    }
    .script()
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.index]
    }

    fn next(&mut self) -> Token {
        let token = self.tokens[self.index].clone();
        if self.index + 1 < self.tokens.len() {
            self.index += 1;
        }
        token
    }

    fn skip_newlines(&mut self) {
        while matches!(self.peek().tok, Tok::Newline) {
            self.next();
        }
    }

    fn expect_end_of_line(&mut self) -> Result<(), Diagnostic> {
        match self.peek().tok {
            Tok::Newline | Tok::Eof => {
                self.next();
                Ok(())
            }
            _ => {
                let t = self.peek();
                Err(syntax(
                    t.pos,
                    format!("expected end of line, found {}", t.tok.describe()),
                ))
            }
        }
    }

    fn expect_ident(&mut self, what: &str) -> Result<(String, Pos), Diagnostic> {
        let token = self.next();
        match token.tok {
            Tok::Ident(name) => Ok((name, token.pos)),
            other => Err(syntax(
                token.pos,
                format!("expected {}, found {}", what, other.describe()),
            )),
        }
    }

    /// Checks that `name` can be introduced as a fresh binding.
    fn bindable(&self, name: &str, pos: Pos) -> Result<(), Diagnostic> {
        if RESERVED.contains(&name) {
            return Err(semantic(pos, format!("'{}' is a reserved word", name)));
        }
        if builtin(name).is_some() {
            return Err(semantic(
                pos,
                format!("'{}' is a builtin function name and cannot be bound", name),
            ));
        }
        if self.bound.contains(name) {
            return Err(semantic(
                pos,
                format!("identifier '{}' is already bound", name),
            ));
        }
        Ok(())
    }

    fn script(&mut self) -> Result<Script, Diagnostic> {
        let mut expectation = Expectation::Pass;

        self.skip_newlines();
        while matches!(self.peek().tok, Tok::At) {
            expectation = self.pragma()?;
            self.skip_newlines();
        }

        let triangle = self.triangle_declaration()?;

        let mut statements = Vec::new();
        loop {
            self.skip_newlines();
            let token = self.peek().clone();
            match &token.tok {
                Tok::Eof => break,
                Tok::Ident(name) if name == "let" => statements.push(Stmt::Let(self.binding()?)),
                Tok::Ident(name) if name == "assert" => {
                    statements.push(Stmt::Assert(self.assertion()?))
                }
                Tok::Ident(name) if name == "triangle" => {
                    return Err(semantic(
                        token.pos,
                        String::from("duplicate triangle declaration"),
                    ));
                }
                Tok::At => {
                    return Err(syntax(
                        token.pos,
                        String::from("pragmas must appear before the triangle declaration"),
                    ));
                }
                other => {
                    return Err(syntax(
                        token.pos,
                        format!("expected 'let' or 'assert', found {}", other.describe()),
                    ));
                }
            }
        }

        Ok(Script {
            expectation,
            triangle,
            statements,
        })
    }

    fn pragma(&mut self) -> Result<Expectation, Diagnostic> {
        self.next(); // '@'
        let (word, pos) = self.expect_ident("'expect'")?;
        if word != "expect" {
            return Err(syntax(
                pos,
                format!("expected 'expect' after '@', found '{}'", word),
            ));
        }
        let (value, vpos) = self.expect_ident("'pass' or 'fail'")?;
        let expectation = match value.as_str() {
            "pass" => Expectation::Pass,
            "fail" => Expectation::Fail,
            other => {
                return Err(syntax(
                    vpos,
                    format!("expected 'pass' or 'fail', found '{}'", other),
                ))
            }
        };
        self.expect_end_of_line()?;
        Ok(expectation)
    }

    fn triangle_declaration(&mut self) -> Result<[String; 3], Diagnostic> {
        let token = self.peek().clone();
        match &token.tok {
            Tok::Ident(name) if name == "triangle" => {
                self.next();
            }
            Tok::Ident(name) if name == "let" || name == "assert" => {
                return Err(semantic(
                    token.pos,
                    String::from("expected triangle declaration before any statement"),
                ));
            }
            Tok::Eof => {
                return Err(semantic(
                    token.pos,
                    String::from("missing triangle declaration"),
                ));
            }
            other => {
                return Err(syntax(
                    token.pos,
                    format!("expected 'triangle', found {}", other.describe()),
                ));
            }
        }
        let mut names: [String; 3] = [String::new(), String::new(), String::new()];
        for slot in names.iter_mut() {
            let (name, pos) = self.expect_ident("a vertex name")?;
            self.bindable(&name, pos)?;
            self.bound.insert(name.clone());
            *slot = name;
        }
        self.expect_end_of_line()?;
        Ok(names)
    }

    fn binding(&mut self) -> Result<Binding, Diagnostic> {
        let let_token = self.next(); // 'let'
        let (name, name_pos) = self.expect_ident("an identifier")?;
        self.bindable(&name, name_pos)?;
        match self.peek().tok {
            Tok::Equals => {
                self.next();
            }
            _ => {
                let t = self.peek();
                return Err(syntax(
                    t.pos,
                    format!("expected '=', found {}", t.tok.describe()),
                ));
            }
        }
        let expr = self.expr()?;
        self.expect_end_of_line()?;
        // Bound only now: the right-hand side must not refer to the name.
        self.bound.insert(name.clone());
        Ok(Binding {
            name,
            expr,
            pos: let_token.pos,
        })
    }

    fn assertion(&mut self) -> Result<Assertion, Diagnostic> {
        let assert_token = self.next(); // 'assert'
        let (kind_name, kind_pos) = self.expect_ident("an assertion kind")?;
        let Some(kind) = AssertionKind::from_name(&kind_name) else {
            return Err(syntax(
                kind_pos,
                format!("unknown assertion '{}'", kind_name),
            ));
        };
        let args = self.call_args()?;
        if args.len() != 2 {
            return Err(semantic(
                kind_pos,
                format!("{} expects 2 arguments, found {}", kind_name, args.len()),
            ));
        }
        let label = match self.peek().tok {
            Tok::Colon => {
                self.next();
                let token = self.next();
                match token.tok {
                    Tok::Str(text) => Some(text),
                    other => {
                        return Err(syntax(
                            token.pos,
                            format!(
                                "expected a string label after ':', found {}",
                                other.describe()
                            ),
                        ))
                    }
                }
            }
            _ => None,
        };
        self.expect_end_of_line()?;
        Ok(Assertion {
            kind,
            args,
            label,
            pos: assert_token.pos,
        })
    }

    fn call_args(&mut self) -> Result<Vec<Expr>, Diagnostic> {
        match self.peek().tok {
            Tok::LParen => {
                self.next();
            }
            _ => {
                let t = self.peek();
                return Err(syntax(
                    t.pos,
                    format!("expected '(', found {}", t.tok.describe()),
                ));
            }
        }
        let mut args = Vec::new();
        if matches!(self.peek().tok, Tok::RParen) {
            self.next();
            return Ok(args);
        }
        loop {
            args.push(self.expr()?);
            let token = self.next();
            match token.tok {
                Tok::Comma => continue,
                Tok::RParen => break,
                other => {
                    return Err(syntax(
                        token.pos,
                        format!("expected ',' or ')', found {}", other.describe()),
                    ))
                }
            }
        }
        Ok(args)
    }

    fn expr(&mut self) -> Result<Expr, Diagnostic> {
        let token = self.next();
        match token.tok {
            Tok::Number(value) => Ok(Expr::Number {
                value,
                pos: token.pos,
            }),
            Tok::Ident(name) => {
                if matches!(self.peek().tok, Tok::LParen) {
                    let args = self.call_args()?;
                    let Some(sig) = builtin(&name) else {
                        return Err(semantic(token.pos, format!("unknown function '{}'", name)));
                    };
                    if args.len() != sig.params.len() {
                        return Err(semantic(
                            token.pos,
                            format!(
                                "'{}' expects {} arguments, found {}",
                                name,
                                sig.params.len(),
                                args.len()
                            ),
                        ));
                    }
                    Ok(Expr::Call {
                        name,
                        pos: token.pos,
                        args,
                    })
                } else {
                    if !self.bound.contains(&name) {
                        return Err(semantic(
                            token.pos,
                            format!("unbound identifier '{}'", name),
                        ));
                    }
                    Ok(Expr::Ident {
                        name,
                        pos: token.pos,
                    })
                }
            }
            other => Err(syntax(
                token.pos,
                format!("expected an expression, found {}", other.describe()),
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn byte_order_mark_is_tolerated() {
        assert!(parse("\u{feff}triangle A B C\nassert coincides(A, A)").is_ok());
    }

    #[test]
    fn pragma_sets_expectation() {
        let s = parse("@expect fail\ntriangle A B C\nassert coincides(A, B)").unwrap();
        assert_eq!(s.expectation, Expectation::Fail);
    }

    #[test]
    fn later_pragma_wins() {
        let s = parse("@expect fail\n@expect pass\ntriangle A B C").unwrap();
        assert_eq!(s.expectation, Expectation::Pass);
    }

    #[test]
    fn rebinding_is_rejected() {
        let err =
            parse("triangle A B C\nlet H = midpoint(A, B)\nlet H = midpoint(B, C)").unwrap_err();
        assert_eq!(err.kind, DiagnosticKind::Semantic);
        assert_eq!(err.pos, Pos { line: 3, col: 5 });
        assert!(err.message.contains("'H' is already bound"));
    }

    #[test]
    fn vertex_names_are_bindings_too() {
        let err = parse("triangle A B A").unwrap_err();
        assert_eq!(err.pos, Pos { line: 1, col: 14 });
        assert!(err.message.contains("'A' is already bound"));

        let err = parse("triangle A B C\nlet A = midpoint(B, C)").unwrap_err();
        assert_eq!(err.pos, Pos { line: 2, col: 5 });
    }

    #[test]
    fn builtin_names_cannot_be_bound() {
        let err = parse("triangle A B C\nlet dot = midpoint(A, B)").unwrap_err();
        assert_eq!(err.kind, DiagnosticKind::Semantic);
        assert!(err.message.contains("builtin function name"));
    }

    #[test]
    fn duplicate_triangle_is_rejected() {
        let err = parse("triangle A B C\ntriangle D E F").unwrap_err();
        assert_eq!(err.kind, DiagnosticKind::Semantic);
        assert_eq!(err.pos, Pos { line: 2, col: 1 });
        assert!(err.message.contains("duplicate triangle declaration"));
    }

    #[test]
    fn unknown_function_is_semantic() {
        let err = parse("triangle A B C\nlet P = centroid(A, B, C)").unwrap_err();
        assert_eq!(err.kind, DiagnosticKind::Semantic);
        assert_eq!(err.pos, Pos { line: 2, col: 9 });
        assert!(err.message.contains("unknown function 'centroid'"));
    }

    #[test]
    fn builtin_arity_is_checked_at_parse_time() {
        let err = parse("triangle A B C\nlet P = midpoint(A)").unwrap_err();
        assert_eq!(err.kind, DiagnosticKind::Semantic);
        assert!(err
            .message
            .contains("'midpoint' expects 2 arguments, found 1"));
    }

    #[test]
    fn unbalanced_call_reports_end_of_line() {
        let err = parse("triangle A B C\nlet H = orthocenter(A, B, C\n").unwrap_err();
        assert_eq!(err.kind, DiagnosticKind::Syntax);
        assert_eq!(err.pos, Pos { line: 2, col: 28 });
        assert!(err.message.contains("expected ',' or ')'"));
    }

    #[test]
    fn multiple_statements_per_line_are_rejected() {
        let err = parse("triangle A B C\nlet u = vec(A, B) let v = vec(B, C)").unwrap_err();
        assert_eq!(err.kind, DiagnosticKind::Syntax);
        assert!(err.message.contains("expected end of line"));
    }

    #[test]
    fn empty_argument_list_hits_arity_check() {
        let err = parse("triangle A B C\nlet s = sin()").unwrap_err();
        assert!(err.message.contains("'sin' expects 1 arguments, found 0"));
    }
}
