//! Ideal expressions.
//!
//! ```text
//! ideal  := term (',' term)*
//! term   := factor ('*' factor)*
//! factor := var ('^' uint)?
//! ```
//!
//! Whitespace is insignificant. Variables come from `--vars`, or default to
//! `x1, ..., xn` with `n` the largest index mentioned.

use std::fmt;

use serre_core::{Exponent, MonomialIdeal, MAX_VARS};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at position {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

fn error(position: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        position,
        message: message.into(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedIdeal {
    pub vars: Vec<String>,
    pub ideal: MonomialIdeal,
    pub warnings: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Token<'a> {
    Ident(&'a str),
    Number(&'a str),
    Caret,
    Star,
    Comma,
    Minus,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token<'_>)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let c = bytes[pos];
        let start = pos;
        let token = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                pos += 1;
                continue;
            }
            b'^' => Token::Caret,
            b'*' => Token::Star,
            b',' => Token::Comma,
            b'-' => Token::Minus,
            b'0'..=b'9' => {
                while pos + 1 < bytes.len() && bytes[pos + 1].is_ascii_digit() {
                    pos += 1;
                }
                Token::Number(&text[start..=pos])
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while pos + 1 < bytes.len() && (bytes[pos + 1].is_ascii_alphanumeric() || bytes[pos + 1] == b'_') {
                    pos += 1;
                }
                Token::Ident(&text[start..=pos])
            }
            _ => {
                let ch = text[start..].chars().next().expect("in bounds");
                return Err(error(start, format!("unexpected character '{ch}'")));
            }
        };
        out.push((start, token));
        pos += 1;
    }
    Ok(out)
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Splits a `--vars` list such as `x,y,z`.
pub fn parse_vars(list: &str) -> Result<Vec<String>, ParseError> {
    let mut vars: Vec<String> = Vec::new();
    let mut offset = 0;
    for piece in list.split(',') {
        let name = piece.trim();
        let at = offset + piece.find(name).unwrap_or(0);
        if !valid_name(name) {
            return Err(error(at, format!("invalid variable name '{name}'")));
        }
        if vars.iter().any(|v| v == name) {
            return Err(error(at, format!("variable '{name}' declared twice")));
        }
        vars.push(name.to_string());
        offset += piece.len() + 1;
    }
    if vars.len() > MAX_VARS {
        return Err(error(0, format!("at most {MAX_VARS} variables are supported")));
    }
    Ok(vars)
}

/// `x1, ..., xn` where `n` is the largest `k` in an identifier `xk`.
fn default_vars(tokens: &[(usize, Token<'_>)]) -> Result<Vec<String>, ParseError> {
    let mut n = 0;
    for &(pos, tok) in tokens {
        if let Token::Ident(name) = tok {
            let index = name
                .strip_prefix('x')
                .and_then(|k| k.parse::<usize>().ok())
                .filter(|&k| k >= 1 && !name[1..].starts_with('0'))
                .ok_or_else(|| {
                    error(
                        pos,
                        format!("unknown variable '{name}' (declare variables with --vars)"),
                    )
                })?;
            if index > MAX_VARS {
                return Err(error(
                    pos,
                    format!("variable '{name}' exceeds the limit of {MAX_VARS} variables"),
                ));
            }
            n = n.max(index);
        }
    }
    Ok((1..=n).map(|k| format!("x{k}")).collect())
}

struct Parser<'a> {
    tokens: Vec<(usize, Token<'a>)>,
    at: usize,
    end: usize,
    vars: &'a [String],
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<(usize, Token<'a>)> {
        self.tokens.get(self.at).copied()
    }

    fn position(&self) -> usize {
        self.peek().map_or(self.end, |(p, _)| p)
    }

    fn ideal(&mut self) -> Result<Vec<Exponent>, ParseError> {
        let mut gens = vec![self.term()?];
        while let Some((_, Token::Comma)) = self.peek() {
            self.at += 1;
            gens.push(self.term()?);
        }
        if let Some((pos, tok)) = self.peek() {
            return Err(error(pos, format!("expected ',' or '*', found {}", describe(tok))));
        }
        Ok(gens)
    }

    fn term(&mut self) -> Result<Exponent, ParseError> {
        let mut exps = vec![0i32; self.vars.len()];
        self.factor(&mut exps)?;
        while let Some((_, Token::Star)) = self.peek() {
            self.at += 1;
            self.factor(&mut exps)?;
        }
        Ok(Exponent::new(exps))
    }

    fn factor(&mut self, exps: &mut [i32]) -> Result<(), ParseError> {
        let pos = self.position();
        let Some((_, Token::Ident(name))) = self.peek() else {
            let found = self.peek().map_or("end of input".to_string(), |(_, t)| describe(t));
            return Err(error(pos, format!("expected a variable, found {found}")));
        };
        let index = self
            .vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| error(pos, format!("unknown variable '{name}'")))?;
        self.at += 1;
        let mut exponent = 1i32;
        if let Some((_, Token::Caret)) = self.peek() {
            self.at += 1;
            let pos = self.position();
            match self.peek() {
                Some((_, Token::Number(digits))) => {
                    exponent = digits
                        .parse()
                        .map_err(|_| error(pos, format!("exponent '{digits}' is too large")))?;
                    self.at += 1;
                }
                Some((_, Token::Minus)) => return Err(error(pos, "negative exponent")),
                other => {
                    let found = other.map_or("end of input".to_string(), |(_, t)| describe(t));
                    return Err(error(pos, format!("expected an exponent, found {found}")));
                }
            }
        }
        exps[index] = exps[index]
            .checked_add(exponent)
            .ok_or_else(|| error(pos, "exponent overflow"))?;
        Ok(())
    }
}

fn describe(tok: Token<'_>) -> String {
    match tok {
        Token::Ident(s) => format!("'{s}'"),
        Token::Number(s) => format!("'{s}'"),
        Token::Caret => "'^'".into(),
        Token::Star => "'*'".into(),
        Token::Comma => "','".into(),
        Token::Minus => "'-'".into(),
    }
}

/// Parses `text` over `vars`, or over default variables when `vars` is `None`.
pub fn parse_ideal(text: &str, vars: Option<&[String]>) -> Result<ParsedIdeal, ParseError> {
    let tokens = tokenize(text)?;
    let vars: Vec<String> = match vars {
        Some(v) => v.to_vec(),
        None => default_vars(&tokens)?,
    };
    if vars.is_empty() {
        return Err(error(0, "no variables: declare them with --vars or use x1, x2, ..."));
    }
    let mut parser = Parser {
        tokens,
        at: 0,
        end: text.len(),
        vars: &vars,
    };
    let gens = parser.ideal()?;
    let mut warnings = Vec::new();
    if gens.iter().any(|g| g.entries().iter().all(|&e| e == 0)) {
        warnings.push("a generator equals 1, so the ideal is the whole ring".to_string());
    }
    let ideal = MonomialIdeal::new(vars.len(), gens).map_err(|e| error(0, e.to_string()))?;
    Ok(ParsedIdeal { vars, ideal, warnings })
}

/// `x^2*y` style rendering of a monomial; `1` for the empty product.
pub fn format_monomial(vars: &[String], m: &Exponent) -> String {
    let factors: Vec<String> = m
        .entries()
        .iter()
        .enumerate()
        .filter(|&(_, &e)| e != 0)
        .map(|(i, &e)| {
            if e == 1 {
                vars[i].clone()
            } else {
                format!("{}^{e}", vars[i])
            }
        })
        .collect();
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("*")
    }
}

pub fn format_ideal(vars: &[String], ideal: &MonomialIdeal) -> Vec<String> {
    ideal.gens().iter().map(|g| format_monomial(vars, g)).collect()
}
