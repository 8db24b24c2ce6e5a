//! Text format for presentations.
//!
//! ```text
//! # comment to end of line
//! gens: a b
//! rels: a^2 b^3 (a b)^2
//! rels: (b^-1 a b a)
//! ```
//!
//! The first significant line lists generator names, each following line adds
//! whitespace-separated relator terms. A term is an identifier, an identifier
//! with an integer exponent (`a^-1`, `a^3`), or a parenthesized product of
//! terms with an optional exponent that distributes over the subword.

use thiserror::Error;

use super::Presentation;
use crate::word::Word;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}, column {col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, col: usize, message: impl Into<String>) -> Self {
        ParseError { line, col, message: message.into() }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Ident(String),
    Int(i32),
    Caret,
    LParen,
    RParen,
}

struct Lexer {
    tokens: Vec<(Token, usize, usize)>,
    pos: usize,
    line: usize,
    end_col: usize,
}

fn lex_line(line_no: usize, text: &str) -> Result<Lexer, ParseError> {
    let mut tokens = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        match c {
            ' ' | '\t' => i += 1,
            '#' => break,
            '(' => {
                tokens.push((Token::LParen, line_no, col));
                i += 1;
            }
            ')' => {
                tokens.push((Token::RParen, line_no, col));
                i += 1;
            }
            '^' => {
                tokens.push((Token::Caret, line_no, col));
                i += 1;
            }
            '-' | '0'..='9' => {
                let start = i;
                if c == '-' {
                    i += 1;
                }
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                let value = text.parse::<i32>().map_err(|_| {
                    ParseError::new(line_no, col, format!("invalid integer `{text}`"))
                })?;
                tokens.push((Token::Int(value), line_no, col));
            }
            _ if c.is_ascii_alphabetic() => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                tokens.push((Token::Ident(chars[start..i].iter().collect()), line_no, col));
            }
            _ => return Err(ParseError::new(line_no, col, format!("unexpected character `{c}`"))),
        }
    }
    Ok(Lexer { tokens, pos: 0, line: line_no, end_col: chars.len() + 1 })
}

impl Lexer {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _, _)| t)
    }

    fn here(&self) -> (usize, usize) {
        self.tokens
            .get(self.pos)
            .map(|&(_, l, c)| (l, c))
            .unwrap_or((self.line, self.end_col))
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(t, _, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }
}

fn parse_exponent(lex: &mut Lexer) -> Result<i32, ParseError> {
    let (line, col) = lex.here();
    match lex.next() {
        Some(Token::Int(n)) => Ok(n),
        _ => Err(ParseError::new(line, col, "expected integer exponent after `^`")),
    }
}

/// term := atom | atom "^" int | "(" term+ ")" ["^" int]
fn parse_term(lex: &mut Lexer, names: &[String]) -> Result<Word, ParseError> {
    let (line, col) = lex.here();
    let body = match lex.next() {
        Some(Token::Ident(name)) => {
            let index = names.iter().position(|n| *n == name).ok_or_else(|| {
                ParseError::new(line, col, format!("unknown generator name `{name}`"))
            })?;
            Word::generator(index + 1)
        }
        Some(Token::LParen) => {
            let mut product = Word::identity();
            loop {
                match lex.peek() {
                    Some(Token::RParen) => {
                        lex.next();
                        break;
                    }
                    Some(_) => product = product.concat(&parse_term(lex, names)?),
                    None => {
                        let (l, c) = lex.here();
                        return Err(ParseError::new(l, c, "unclosed `(`"));
                    }
                }
            }
            product
        }
        other => {
            return Err(ParseError::new(
                line,
                col,
                format!("expected identifier or `(`, found {other:?}"),
            ))
        }
    };
    if lex.peek() == Some(&Token::Caret) {
        lex.next();
        let (el, ec) = lex.here();
        let exponent = parse_exponent(lex)?;
        if body.len().saturating_mul(exponent.unsigned_abs() as usize) > 10_000_000 {
            return Err(ParseError::new(el, ec, "exponent too large"));
        }
        Ok(body.pow(exponent))
    } else {
        Ok(body)
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Parses the one-presentation-per-file text format. The result carries an
/// empty name; callers label it.
pub fn parse_presentation(text: &str) -> Result<Presentation, ParseError> {
    let mut gen_names: Option<Vec<String>> = None;
    let mut relators: Vec<Word> = Vec::new();
    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let stripped = match raw_line.find('#') {
            Some(p) => &raw_line[..p],
            None => raw_line,
        };
        if stripped.trim().is_empty() {
            continue;
        }
        let trimmed = stripped.trim_start();
        let indent = stripped.len() - trimmed.len();
        if gen_names.is_none() {
            let Some(rest) = trimmed.strip_prefix("gens:") else {
                return Err(ParseError::new(line_no, indent + 1, "expected `gens:` line first"));
            };
            let names: Vec<String> = rest.split_whitespace().map(str::to_owned).collect();
            if names.is_empty() {
                return Err(ParseError::new(line_no, indent + 6, "at least one generator required"));
            }
            for name in &names {
                if !is_identifier(name) {
                    return Err(ParseError::new(
                        line_no,
                        indent + 6,
                        format!("invalid generator name `{name}`"),
                    ));
                }
            }
            for (i, name) in names.iter().enumerate() {
                if names[..i].contains(name) {
                    return Err(ParseError::new(
                        line_no,
                        indent + 6,
                        format!("duplicate generator name `{name}`"),
                    ));
                }
            }
            gen_names = Some(names);
            continue;
        }
        let Some(rest) = trimmed.strip_prefix("rels:") else {
            return Err(ParseError::new(line_no, indent + 1, "expected `rels:` line"));
        };
        let names = gen_names.as_ref().unwrap();
        let offset = indent + "rels:".len();
        let mut lex = lex_line(line_no, rest)?;
        lex.end_col += offset;
        for t in &mut lex.tokens {
            t.2 += offset;
        }
        while lex.peek().is_some() {
            let (l, c) = lex.here();
            let relator = parse_term(&mut lex, names)?;
            if relator.is_empty() {
                return Err(ParseError::new(l, c, "relator reduces to the empty word"));
            }
            relators.push(relator);
        }
    }
    let Some(gen_names) = gen_names else {
        return Err(ParseError::new(1, 1, "expected `gens:` line first"));
    };
    Ok(Presentation::new(String::new(), gen_names, relators)
        .expect("parser enforces presentation invariants"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_generator_power() {
        let p = parse_presentation("gens: a\nrels: a^2").unwrap();
        assert_eq!(p.rank(), 1);
        assert_eq!(p.relators().len(), 1);
        assert_eq!(p.relators()[0].letters(), &[1, 1]);
    }

    #[test]
    fn three_relators_with_group() {
        let p = parse_presentation("gens: a b\nrels: a^2 b^3 (a b)^2").unwrap();
        assert_eq!(p.rank(), 2);
        assert_eq!(p.relators().len(), 3);
        assert_eq!(p.relators()[2].letters(), &[1, 2, 1, 2]);
    }

    #[test]
    fn missing_gens_line_is_an_error() {
        let err = parse_presentation("rels: a^2").unwrap_err();
        assert_eq!((err.line, err.col), (1, 1));
        assert!(err.message.contains("gens:"));
    }

    #[test]
    fn unknown_generator_reports_position() {
        let err = parse_presentation("gens: a\nrels: a^2 c").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(err.message.contains("`c`"));
    }

    #[test]
    fn empty_relator_rejected() {
        let err = parse_presentation("gens: a\nrels: (a a^-1)").unwrap_err();
        assert!(err.message.contains("empty"));
        let err = parse_presentation("gens: a\nrels: a^0").unwrap_err();
        assert!(err.message.contains("empty"));
    }

    #[test]
    fn inverse_atoms_and_nested_groups() {
        let p = parse_presentation("gens: a b\nrels: (b^-1 a b a) ((a b)^2 a)^-1").unwrap();
        assert_eq!(p.relators()[0].letters(), &[-2, 1, 2, 1]);
        assert_eq!(p.relators()[1].letters(), &[-1, -2, -1, -2, -1]);
    }

    #[test]
    fn comments_and_blank_lines_ignored() {
        let text = "# header\n\ngens: a # trailing\n# mid\nrels: a^2\n";
        let p = parse_presentation(text).unwrap();
        assert_eq!(p.rank(), 1);
        assert_eq!(p.relators().len(), 1);
    }

    #[test]
    fn multiple_rels_lines_accumulate() {
        let p = parse_presentation("gens: a b\nrels: a^2\nrels: b^3\n").unwrap();
        assert_eq!(p.relators().len(), 2);
    }

    #[test]
    fn render_then_parse_is_fixed_point() {
        let p = parse_presentation("gens: a b\nrels: a^2 b^3 (a b)^2 (b^-1 a b a)").unwrap();
        let rendered = p.render();
        let reparsed = parse_presentation(&rendered).unwrap();
        assert_eq!(p.gen_names(), reparsed.gen_names());
        assert_eq!(p.relators(), reparsed.relators());
        let again = parse_presentation(&reparsed.render()).unwrap();
        assert_eq!(reparsed.relators(), again.relators());
    }
}
