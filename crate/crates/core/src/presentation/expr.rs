//! Integer index expressions used by relation templates: `+`, `-`, `*`,
//! parentheses, literals and single-word variables.

use std::collections::HashMap;

use crate::error::{Error, Result};

pub type Env = HashMap<String, i64>;

struct Parser<'a> {
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
    env: &'a Env,
}

impl Parser<'_> {
    fn error(&self, what: &str) -> Error {
        Error::Parse(format!("index expression `{}`: {what}", self.src))
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<i64> {
        let mut value = self.term()?;
        while let Some(op @ ('+' | '-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            value = if op == '+' { value + rhs } else { value - rhs };
        }
        Ok(value)
    }

    fn term(&mut self) -> Result<i64> {
        let mut value = self.factor()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            value *= self.factor()?;
        }
        Ok(value)
    }

    fn factor(&mut self) -> Result<i64> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error("missing `)`"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some('-') => {
                self.pos += 1;
                Ok(-self.factor()?)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
                    self.pos += 1;
                }
                let text: String = self.chars[start..self.pos].iter().collect();
                text.parse().map_err(|_| self.error("number too large"))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self
                    .chars
                    .get(self.pos)
                    .is_some_and(char::is_ascii_alphanumeric)
                {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                self.env
                    .get(&name)
                    .copied()
                    .ok_or_else(|| self.error(&format!("unbound `{name}`")))
            }
            _ => Err(self.error("expected a value")),
        }
    }
}

pub fn eval(src: &str, env: &Env) -> Result<i64> {
    let mut p = Parser {
        src,
        chars: src.chars().collect(),
        pos: 0,
        env,
    };
    let v = p.expr()?;
    if p.peek().is_some() {
        return Err(p.error("trailing input"));
    }
    Ok(v)
}

/// Evaluates a comparison such as `k < 2*n + 2`.
pub fn holds(cond: &str, env: &Env) -> Result<bool> {
    for op in ["<=", ">=", "!=", "<", ">", "="] {
        if let Some((lhs, rhs)) = cond.split_once(op) {
            let (a, b) = (eval(lhs, env)?, eval(rhs, env)?);
            return Ok(match op {
                "<=" => a <= b,
                ">=" => a >= b,
                "!=" => a != b,
                "<" => a < b,
                ">" => a > b,
                _ => a == b,
            });
        }
    }
    Err(Error::Parse(format!("condition `{cond}`")))
}

/// Replaces every `{expr}` in `template` by its value.
pub fn substitute(template: &str, env: &Env) -> Result<String> {
    let mut out = String::with_capacity(template.len());
    let mut rest = template;
    while let Some(open) = rest.find('{') {
        out.push_str(&rest[..open]);
        let close = rest[open..]
            .find('}')
            .ok_or_else(|| Error::Parse(format!("template `{template}`: unclosed `{{`")))?;
        let value = eval(&rest[open + 1..open + close], env)?;
        out.push_str(&value.to_string());
        rest = &rest[open + close + 1..];
    }
    out.push_str(rest);
    Ok(out)
}
