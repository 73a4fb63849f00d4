//! JSON-compatible tree parser that keeps source positions.

use std::fmt;

/// Line and column, both 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Node {
    Null,
    Bool(bool),
    /// Numbers keep their source text; only integers are meaningful here.
    Number(String),
    Str(String),
    Array(Vec<Value>),
    Object(Vec<(String, Pos, Value)>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Value {
    pub pos: Pos,
    pub node: Node,
}

impl Value {
    pub fn type_name(&self) -> &'static str {
        match self.node {
            Node::Null => "null",
            Node::Bool(_) => "boolean",
            Node::Number(_) => "number",
            Node::Str(_) => "string",
            Node::Array(_) => "array",
            Node::Object(_) => "object",
        }
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        match &self.node {
            Node::Object(fields) => fields.iter().find(|(k, _, _)| k == key).map(|(_, _, v)| v),
            _ => None,
        }
    }

    pub fn to_serde(&self) -> serde_json::Value {
        use serde_json::Value as J;
        match &self.node {
            Node::Null => J::Null,
            Node::Bool(b) => J::Bool(*b),
            Node::Number(s) => s
                .parse::<serde_json::Number>()
                .map(J::Number)
                .unwrap_or_else(|_| J::String(s.clone())),
            Node::Str(s) => J::String(s.clone()),
            Node::Array(items) => J::Array(items.iter().map(Value::to_serde).collect()),
            Node::Object(fields) => J::Object(fields.iter().map(|(k, _, v)| (k.clone(), v.to_serde())).collect()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyntaxError {
    pub pos: Pos,
    pub found: String,
    pub expected: Vec<&'static str>,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: syntax error: found {}, expected ", self.pos, self.found)?;
        match self.expected.as_slice() {
            [one] => write!(f, "{one}"),
            many => write!(f, "one of {}", many.join(", ")),
        }
    }
}

pub const MAX_DEPTH: usize = 128;

pub fn parse(text: &str) -> Result<Value, SyntaxError> {
    let mut p = Parser {
        chars: text.chars().collect(),
        at: 0,
        line: 1,
        col: 1,
    };
    p.skip_ws();
    let v = p.value(0)?;
    p.skip_ws();
    if p.peek().is_some() {
        return Err(p.error(&["end of input"]));
    }
    Ok(v)
}

struct Parser {
    chars: Vec<char>,
    at: usize,
    line: usize,
    col: usize,
}

const VALUE_START: &[&str] = &["'{'", "'['", "string", "number", "true", "false", "null"];

impl Parser {
    fn pos(&self) -> Pos {
        Pos {
            line: self.line,
            col: self.col,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.at += 1;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn error(&self, expected: &[&'static str]) -> SyntaxError {
        let found = match self.peek() {
            None => "end of input".to_string(),
            Some(c) if c.is_control() => format!("{:?}", c),
            Some(c) => format!("'{c}'"),
        };
        SyntaxError {
            pos: self.pos(),
            found,
            expected: expected.to_vec(),
        }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if matches!(c, ' ' | '\t' | '\n' | '\r') {
                self.bump();
            } else {
                break;
            }
        }
    }

    fn expect(&mut self, c: char, name: &'static str) -> Result<(), SyntaxError> {
        if self.peek() == Some(c) {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&[name]))
        }
    }

    fn value(&mut self, depth: usize) -> Result<Value, SyntaxError> {
        let pos = self.pos();
        let node = match self.peek() {
            Some('{') | Some('[') if depth >= MAX_DEPTH => {
                return Err(SyntaxError {
                    pos,
                    found: "nesting deeper than 128 levels".to_string(),
                    expected: vec!["a shallower document"],
                })
            }
            Some('{') => self.object(depth)?,
            Some('[') => self.array(depth)?,
            Some('"') => Node::Str(self.string()?),
            Some(c) if c == '-' || c.is_ascii_digit() => Node::Number(self.number()?),
            Some(c) if c.is_ascii_alphabetic() => self.keyword()?,
            _ => return Err(self.error(VALUE_START)),
        };
        Ok(Value { pos, node })
    }

    fn keyword(&mut self) -> Result<Node, SyntaxError> {
        for (word, node) in [
            ("true", Node::Bool(true)),
            ("false", Node::Bool(false)),
            ("null", Node::Null),
        ] {
            let end = self.at + word.len();
            if end <= self.chars.len() && self.chars[self.at..end].iter().copied().eq(word.chars()) {
                for _ in 0..word.len() {
                    self.bump();
                }
                return Ok(node);
            }
        }
        Err(self.error(VALUE_START))
    }

    fn object(&mut self, depth: usize) -> Result<Node, SyntaxError> {
        self.bump();
        let mut fields = Vec::new();
        self.skip_ws();
        if self.peek() == Some('}') {
            self.bump();
            return Ok(Node::Object(fields));
        }
        loop {
            self.skip_ws();
            let kpos = self.pos();
            if self.peek() != Some('"') {
                return Err(self.error(&["string key"]));
            }
            let key = self.string()?;
            self.skip_ws();
            self.expect(':', "':'")?;
            self.skip_ws();
            let v = self.value(depth + 1)?;
            fields.push((key, kpos, v));
            self.skip_ws();
            match self.peek() {
                Some(',') => {
                    self.bump();
                }
                Some('}') => {
                    self.bump();
                    return Ok(Node::Object(fields));
                }
                _ => return Err(self.error(&["','", "'}'"])),
            }
        }
    }

    fn array(&mut self, depth: usize) -> Result<Node, SyntaxError> {
        self.bump();
        let mut items = Vec::new();
        self.skip_ws();
        if self.peek() == Some(']') {
            self.bump();
            return Ok(Node::Array(items));
        }
        loop {
            self.skip_ws();
            items.push(self.value(depth + 1)?);
            self.skip_ws();
            match self.peek() {
                Some(',') => {
                    self.bump();
                }
                Some(']') => {
                    self.bump();
                    return Ok(Node::Array(items));
                }
                _ => return Err(self.error(&["','", "']'"])),
            }
        }
    }

    fn string(&mut self) -> Result<String, SyntaxError> {
        self.bump();
        let mut out = String::new();
        loop {
            match self.peek() {
                None => return Err(self.error(&["'\"'"])),
                Some('"') => {
                    self.bump();
                    return Ok(out);
                }
                Some('\\') => {
                    self.bump();
                    let c = match self.peek() {
                        Some('"') => '"',
                        Some('\\') => '\\',
                        Some('/') => '/',
                        Some('b') => '\u{8}',
                        Some('f') => '\u{c}',
                        Some('n') => '\n',
                        Some('r') => '\r',
                        Some('t') => '\t',
                        Some('u') => {
                            self.bump();
                            out.push(self.unicode_escape()?);
                            continue;
                        }
                        _ => return Err(self.error(&["escape character"])),
                    };
                    self.bump();
                    out.push(c);
                }
                Some(c) if (c as u32) < 0x20 => return Err(self.error(&["'\"'", "string character"])),
                Some(c) => {
                    self.bump();
                    out.push(c);
                }
            }
        }
    }

    fn hex4(&mut self) -> Result<u32, SyntaxError> {
        let mut v = 0u32;
        for _ in 0..4 {
            match self.peek().and_then(|c| c.to_digit(16)) {
                Some(d) => {
                    v = v * 16 + d;
                    self.bump();
                }
                None => return Err(self.error(&["hex digit"])),
            }
        }
        Ok(v)
    }

    fn unicode_escape(&mut self) -> Result<char, SyntaxError> {
        let hi = self.hex4()?;
        if (0xD800..0xDC00).contains(&hi) {
            if self.peek() != Some('\\') {
                return Err(self.error(&["low surrogate escape"]));
            }
            self.bump();
            self.expect('u', "'u'")?;
            let lo = self.hex4()?;
            if !(0xDC00..0xE000).contains(&lo) {
                return Err(self.error(&["low surrogate escape"]));
            }
            let c = 0x10000 + ((hi - 0xD800) << 10) + (lo - 0xDC00);
            return char::from_u32(c).ok_or_else(|| self.error(&["valid code point"]));
        }
        char::from_u32(hi).ok_or_else(|| self.error(&["valid code point"]))
    }

    fn digits(&mut self, out: &mut String) -> bool {
        let start = out.len();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            out.push(c);
            self.bump();
        }
        out.len() > start
    }

    fn number(&mut self) -> Result<String, SyntaxError> {
        let mut s = String::new();
        if self.peek() == Some('-') {
            s.push('-');
            self.bump();
        }
        if self.peek() == Some('0') {
            s.push('0');
            self.bump();
        } else if !self.digits(&mut s) {
            return Err(self.error(&["digit"]));
        }
        if self.peek() == Some('.') {
            s.push('.');
            self.bump();
            if !self.digits(&mut s) {
                return Err(self.error(&["digit"]));
            }
        }
        if matches!(self.peek(), Some('e') | Some('E')) {
            s.push('e');
            self.bump();
            if let Some(c @ ('+' | '-')) = self.peek() {
                s.push(c);
                self.bump();
            }
            if !self.digits(&mut s) {
                return Err(self.error(&["digit"]));
            }
        }
        Ok(s)
    }
}
