//! Tokenizer for `.smltt` sources.

use super::SyntaxError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Num(usize),
    Str(String),
    /// `0s`
    Zero,
    LParen,
    RParen,
    LBrace,
    RBrace,
    Comma,
    Colon,
    Dot,
    /// `.1` / `.2`
    Proj(u8),
    Arrow,
    Star2,
    FatArrow,
    Assign,
    Le,
    Lt,
    Caret,
    Bang,
    Eof,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

#[derive(Clone, Debug)]
pub struct Token {
    pub tok: Tok,
    pub pos: Pos,
}

fn ident_start(c: char) -> bool {
    c.is_alphabetic() || c == '_'
}

fn ident_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\''
}

/// Unicode spellings and their ASCII equivalents.
fn alias(c: char) -> Option<&'static str> {
    Some(match c {
        'λ' => "fun",
        '∀' => "forall",
        '∃' => "exists",
        '→' => "->",
        '≤' => "<=",
        '↑' => "^",
        '⊤' => "Top",
        '⊥' => "Bot",
        '⋆' => "star",
        '×' => "**",
        '⇒' => "=>",
        _ => return None,
    })
}

pub fn lex(src: &str) -> Result<Vec<Token>, SyntaxError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0usize, 1usize, 1usize);
    let at = |i: usize| chars.get(i).copied();
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, col };
        let start = i;
        let mut push = |tok: Tok| out.push(Token { tok, pos });
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        if c == '-' && at(i + 1) == Some('-') {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        if let Some(a) = alias(c) {
            i += 1;
            let tok = match a {
                "->" => Tok::Arrow,
                "<=" => Tok::Le,
                "^" => Tok::Caret,
                "**" => Tok::Star2,
                "=>" => Tok::FatArrow,
                word => Tok::Ident(word.to_string()),
            };
            push(tok);
            col += 1;
            continue;
        }
        if ident_start(c) {
            // Identifiers may contain '-' before an alphanumeric character and
            // '.' before a letter (qualified names).
            while let Some(d) = at(i) {
                let next = at(i + 1);
                if ident_char(d)
                    || (d == '-' && next.is_some_and(|n| n.is_alphanumeric()))
                    || (d == '.' && next.is_some_and(ident_start))
                {
                    i += 1;
                } else {
                    break;
                }
            }
            let word: String = chars[start..i].iter().collect();
            push(Tok::Ident(word));
        } else if c.is_ascii_digit() {
            while at(i).is_some_and(|d| d.is_ascii_digit()) {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            if at(i) == Some('s') && !at(i + 1).is_some_and(ident_char) {
                if digits != "0" {
                    return Err(SyntaxError::new(pos, "only `0s` carries the size suffix"));
                }
                i += 1;
                push(Tok::Zero);
            } else {
                let n = digits
                    .parse()
                    .map_err(|_| SyntaxError::new(pos, "number too large"))?;
                push(Tok::Num(n));
            }
        } else if c == '"' {
            i += 1;
            while at(i).is_some_and(|d| d != '"' && d != '\n') {
                i += 1;
            }
            if at(i) != Some('"') {
                return Err(SyntaxError::new(pos, "unterminated string"));
            }
            let s: String = chars[start + 1..i].iter().collect();
            i += 1;
            push(Tok::Str(s));
        } else {
            let two: String = chars[i..chars.len().min(i + 2)].iter().collect();
            let (tok, len) = match two.as_str() {
                "->" => (Tok::Arrow, 2),
                "**" => (Tok::Star2, 2),
                "=>" => (Tok::FatArrow, 2),
                ":=" => (Tok::Assign, 2),
                "<=" => (Tok::Le, 2),
                ".1" => (Tok::Proj(1), 2),
                ".2" => (Tok::Proj(2), 2),
                _ => match c {
                    '(' => (Tok::LParen, 1),
                    ')' => (Tok::RParen, 1),
                    '{' => (Tok::LBrace, 1),
                    '}' => (Tok::RBrace, 1),
                    ',' => (Tok::Comma, 1),
                    ':' => (Tok::Colon, 1),
                    '.' => (Tok::Dot, 1),
                    '<' => (Tok::Lt, 1),
                    '^' => (Tok::Caret, 1),
                    '!' => (Tok::Bang, 1),
                    _ => {
                        return Err(SyntaxError::new(pos, format!("unexpected character `{c}`")))
                    }
                },
            };
            i += len;
            push(tok);
        }
        col += i - start;
    }
    out.push(Token {
        tok: Tok::Eof,
        pos: Pos { line, col },
    });
    Ok(out)
}
