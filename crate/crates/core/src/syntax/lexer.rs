use alloc::string::String;
use alloc::vec::Vec;

use super::{ParseError, SourceSpan};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Tok {
    Ident(String),
    LParen,
    RParen,
    Comma,
    Dot,
    Not,
    And,
    Or,
    Implies,
    Forall,
    Exists,
    Top,
    Bot,
    Eof,
}

impl Tok {
    pub(crate) fn describe(&self) -> &'static str {
        match self {
            Tok::Ident(_) => "identifier",
            Tok::LParen => "`(`",
            Tok::RParen => "`)`",
            Tok::Comma => "`,`",
            Tok::Dot => "`.`",
            Tok::Not => "`~`",
            Tok::And => "`&`",
            Tok::Or => "`|`",
            Tok::Implies => "`->`",
            Tok::Forall => "`forall`",
            Tok::Exists => "`exists`",
            Tok::Top => "`top`",
            Tok::Bot => "`bot`",
            Tok::Eof => "end of input",
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Token {
    pub tok: Tok,
    pub span: SourceSpan,
}

pub(crate) fn tokenize(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(start, c)) = chars.peek() {
        let single = |tok| (tok, start + c.len_utf8());
        let (tok, end) = match c {
            c if c.is_whitespace() => {
                chars.next();
                continue;
            }
            '(' => single(Tok::LParen),
            ')' => single(Tok::RParen),
            ',' => single(Tok::Comma),
            '.' => single(Tok::Dot),
            '~' | '¬' | '!' => single(Tok::Not),
            '&' | '∧' => single(Tok::And),
            '|' | '∨' => single(Tok::Or),
            '→' => single(Tok::Implies),
            '∀' => single(Tok::Forall),
            '∃' => single(Tok::Exists),
            '⊤' => single(Tok::Top),
            '⊥' => single(Tok::Bot),
            '-' => {
                chars.next();
                match chars.peek() {
                    Some(&(_, '>')) => (Tok::Implies, start + 2),
                    _ => {
                        return Err(ParseError::new(
                            SourceSpan::new(start, start + 1),
                            "expected `->`",
                        ));
                    }
                }
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut end = start;
                while let Some(&(i, c)) = chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        end = i + c.len_utf8();
                        chars.next();
                    } else {
                        break;
                    }
                }
                let word = &text[start..end];
                let tok = match word {
                    "forall" => Tok::Forall,
                    "exists" => Tok::Exists,
                    "top" => Tok::Top,
                    "bot" => Tok::Bot,
                    _ => Tok::Ident(word.into()),
                };
                out.push(Token {
                    tok,
                    span: SourceSpan::new(start, end),
                });
                continue;
            }
            other => {
                let span = SourceSpan::new(start, start + other.len_utf8());
                return Err(ParseError::new(
                    span,
                    alloc::format!("unexpected character `{other}`"),
                ));
            }
        };
        chars.next();
        out.push(Token {
            tok,
            span: SourceSpan::new(start, end),
        });
    }
    out.push(Token {
        tok: Tok::Eof,
        span: SourceSpan::new(text.len(), text.len()),
    });
    Ok(out)
}
