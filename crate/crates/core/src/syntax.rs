//! Shared parse error type and a minimal s-expression reader.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError { line, column, message: message.into() }
    }
}

/// 1-based source position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SExpr {
    Atom(String, Pos),
    List(Vec<SExpr>, Pos),
}

impl SExpr {
    pub fn pos(&self) -> Pos {
        match self {
            SExpr::Atom(_, p) | SExpr::List(_, p) => *p,
        }
    }

    pub fn error(&self, message: impl Into<String>) -> ParseError {
        let p = self.pos();
        ParseError::new(p.line, p.column, message)
    }

    pub fn as_atom(&self) -> Result<&str, ParseError> {
        match self {
            SExpr::Atom(s, _) => Ok(s),
            SExpr::List(..) => Err(self.error("expected an identifier")),
        }
    }

    pub fn as_list(&self) -> Result<&[SExpr], ParseError> {
        match self {
            SExpr::List(items, _) => Ok(items),
            SExpr::Atom(..) => Err(self.error("expected a list")),
        }
    }

    /// The list's head keyword and its arguments.
    pub fn as_form(&self) -> Result<(&str, &[SExpr]), ParseError> {
        let items = self.as_list()?;
        match items.first() {
            Some(SExpr::Atom(head, _)) => Ok((head, &items[1..])),
            _ => Err(self.error("expected a keyword form")),
        }
    }
}

impl fmt::Display for SExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SExpr::Atom(s, _) => f.write_str(s),
            SExpr::List(items, _) => {
                f.write_str("(")?;
                for (i, it) in items.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "{it}")?;
                }
                f.write_str(")")
            }
        }
    }
}

/// Incremental reader over a source text, tracking line and column.
pub struct Reader<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    pos: Pos,
}

impl<'a> Reader<'a> {
    pub fn new(text: &'a str, start: Pos) -> Self {
        Reader { chars: text.chars().peekable(), pos: start }
    }

    pub fn pos(&self) -> Pos {
        self.pos
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.pos.line += 1;
            self.pos.column = 1;
        } else {
            self.pos.column += 1;
        }
        Some(c)
    }

    pub fn skip_blank(&mut self) {
        while let Some(&c) = self.chars.peek() {
            if c == '#' {
                while let Some(&c) = self.chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    self.bump();
                }
            } else if c.is_whitespace() {
                self.bump();
            } else {
                break;
            }
        }
    }

    pub fn at_end(&mut self) -> bool {
        self.skip_blank();
        self.chars.peek().is_none()
    }

    pub fn read(&mut self) -> Result<SExpr, ParseError> {
        self.skip_blank();
        let start = self.pos;
        match self.chars.peek().copied() {
            None => Err(ParseError::new(start.line, start.column, "unexpected end of input")),
            Some(')') => Err(ParseError::new(start.line, start.column, "unbalanced `)`")),
            Some('(') => {
                self.bump();
                let mut items = Vec::new();
                loop {
                    self.skip_blank();
                    match self.chars.peek() {
                        None => return Err(ParseError::new(start.line, start.column, "unclosed `(`")),
                        Some(')') => {
                            self.bump();
                            return Ok(SExpr::List(items, start));
                        }
                        Some(_) => items.push(self.read()?),
                    }
                }
            }
            Some(_) => {
                let mut s = String::new();
                while let Some(&c) = self.chars.peek() {
                    if c.is_whitespace() || c == '(' || c == ')' || c == '#' {
                        break;
                    }
                    s.push(c);
                    self.bump();
                }
                Ok(SExpr::Atom(s, start))
            }
        }
    }
}

/// Reads exactly one s-expression from `text`.
pub fn read_one(text: &str) -> Result<SExpr, ParseError> {
    let mut r = Reader::new(text, Pos { line: 1, column: 1 });
    let e = r.read()?;
    if !r.at_end() {
        let p = r.pos();
        return Err(ParseError::new(p.line, p.column, "trailing input"));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nested_lists() {
        let e = read_one("(node (base g)\n  (seqfam (v) (graph c) (vertex v)))").unwrap();
        assert_eq!(e.to_string(), "(node (base g) (seqfam (v) (graph c) (vertex v)))");
        let (head, args) = e.as_form().unwrap();
        assert_eq!(head, "node");
        assert_eq!(args[1].pos(), Pos { line: 2, column: 3 });
    }

    #[test]
    fn unclosed_reports_opening_position() {
        let err = read_one("  (a (b c)").unwrap_err();
        assert_eq!((err.line, err.column), (1, 3));
    }

    #[test]
    fn trailing_input_rejected() {
        assert!(read_one("(a) b").is_err());
    }
}
