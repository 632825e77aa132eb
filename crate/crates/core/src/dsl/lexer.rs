//! Hand-rolled lexer for `.geo` sources. Tracks 1-based line/column (counted
//! in characters) for every token; comments run from `#` to end of line.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{Diagnostic, DiagnosticKind, Pos};

#[derive(Clone, Debug, PartialEq)]
pub(super) enum Tok {
    Ident(String),
    Number(f64),
    Str(String),
    LParen,
    RParen,
    Comma,
    Equals,
    Colon,
    At,
    Newline,
    Eof,
}

impl Tok {
    pub(super) fn describe(&self) -> String {
        match self {
            Tok::Ident(name) => format!("'{}'", name),
            Tok::Number(_) => String::from("numeric literal"),
            Tok::Str(_) => String::from("string literal"),
            Tok::LParen => String::from("'('"),
            Tok::RParen => String::from("')'"),
            Tok::Comma => String::from("','"),
            Tok::Equals => String::from("'='"),
            Tok::Colon => String::from("':'"),
            Tok::At => String::from("'@'"),
            Tok::Newline => String::from("end of line"),
            Tok::Eof => String::from("end of file"),
        }
    }
}

#[derive(Clone, Debug)]
pub(super) struct Token {
    pub tok: Tok,
    pub pos: Pos,
}

fn syntax_error(pos: Pos, message: String) -> Diagnostic {
    Diagnostic {
        kind: DiagnosticKind::Syntax,
        pos,
        message,
    }
}

pub(super) fn lex(source: &str) -> Result<Vec<Token>, Diagnostic> {
    let mut tokens = Vec::new();
    let mut chars = source.chars().peekable();
    let mut line: u32 = 1;
    let mut col: u32 = 1;

    macro_rules! bump {
        () => {{
            let ch = chars.next();
            if let Some(c) = ch {
                if c == '\n' {
                    line += 1;
                    col = 1;
                } else {
                    col += 1;
                }
            }
            ch
        }};
    }

    while let Some(&ch) = chars.peek() {
        let pos = Pos { line, col };
        match ch {
            '\n' => {
                bump!();
                tokens.push(Token {
                    tok: Tok::Newline,
                    pos,
                });
            }
            c if c.is_whitespace() => {
                bump!();
            }
            '#' => {
                while let Some(&c) = chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    bump!();
                }
            }
            '(' => {
                bump!();
                tokens.push(Token {
                    tok: Tok::LParen,
                    pos,
                });
            }
            ')' => {
                bump!();
                tokens.push(Token {
                    tok: Tok::RParen,
                    pos,
                });
            }
            ',' => {
                bump!();
                tokens.push(Token {
                    tok: Tok::Comma,
                    pos,
                });
            }
            '=' => {
                bump!();
                tokens.push(Token {
                    tok: Tok::Equals,
                    pos,
                });
            }
            ':' => {
                bump!();
                tokens.push(Token {
                    tok: Tok::Colon,
                    pos,
                });
            }
            '@' => {
                bump!();
                tokens.push(Token { tok: Tok::At, pos });
            }
            '"' => {
                bump!();
                let mut text = String::new();
                loop {
                    match chars.peek() {
                        Some('"') => {
                            bump!();
                            break;
                        }
                        Some('\n') | None => {
                            return Err(syntax_error(
                                pos,
                                String::from("unterminated string literal"),
                            ));
                        }
                        Some(&c) => {
                            text.push(c);
                            bump!();
                        }
                    }
                }
                tokens.push(Token {
                    tok: Tok::Str(text),
                    pos,
                });
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut name = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        name.push(c);
                        bump!();
                    } else {
                        break;
                    }
                }
                tokens.push(Token {
                    tok: Tok::Ident(name),
                    pos,
                });
            }
            c if c.is_ascii_digit() => {
                let mut text = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_digit() {
                        text.push(c);
                        bump!();
                    } else {
                        break;
                    }
                }
                if chars.peek() == Some(&'.') {
                    // Look ahead: a fraction needs at least one digit.
                    let mut ahead = chars.clone();
                    ahead.next();
                    if ahead.peek().is_some_and(|c| c.is_ascii_digit()) {
                        text.push('.');
                        bump!();
                        while let Some(&c) = chars.peek() {
                            if c.is_ascii_digit() {
                                text.push(c);
                                bump!();
                            } else {
                                break;
                            }
                        }
                    }
                }
                if matches!(chars.peek(), Some('e') | Some('E')) {
                    text.push('e');
                    bump!();
                    if matches!(chars.peek(), Some('+') | Some('-')) {
                        text.push(*chars.peek().unwrap());
                        bump!();
                    }
                    let mut digits = false;
                    while let Some(&c) = chars.peek() {
                        if c.is_ascii_digit() {
                            text.push(c);
                            digits = true;
                            bump!();
                        } else {
                            break;
                        }
                    }
                    if !digits {
                        return Err(syntax_error(pos, String::from("malformed numeric literal")));
                    }
                }
                let value: f64 = text
                    .parse()
                    .map_err(|_| syntax_error(pos, String::from("malformed numeric literal")))?;
                if !value.is_finite() {
                    return Err(syntax_error(
                        pos,
                        String::from("numeric literal out of range"),
                    ));
                }
                tokens.push(Token {
                    tok: Tok::Number(value),
                    pos,
                });
            }
            c => {
                return Err(syntax_error(pos, format!("unexpected character '{}'", c)));
            }
        }
    }
    tokens.push(Token {
        tok: Tok::Eof,
        pos: Pos { line, col },
    });
    Ok(tokens)
}
