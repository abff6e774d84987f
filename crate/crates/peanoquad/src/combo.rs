//! Parser for rule-combination expressions such as `0.5*g2+0.5*lob3`.
//!
//! Grammar: a sum of `<rational>*<rulename>` terms, where the rational is a
//! `p/q` fraction, an integer, or a finite decimal; `-` between terms negates
//! the following coefficient. Names resolve against the exact builtins first,
//! then the numeric node table.

use crate::numeric::NodeTable;
use crate::rational::{parse_rational, Rational};
use crate::rules::{builtin_rule, QuadratureRule, RuleCombination, RuleError};
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("combo parse error at byte {position}: {message}")]
pub struct ComboParseError {
    pub position: usize,
    pub message: String,
}

/// A parsed but unresolved combination: coefficients and rule names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComboSpec {
    pub terms: Vec<(Rational, String)>,
}

impl ComboSpec {
    /// Resolves rule names and builds the combination.
    pub fn resolve(&self, table: &NodeTable) -> Result<RuleCombination, RuleError> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (coef, name) in &self.terms {
            let rule = lookup_rule(name, table)?;
            terms.push((coef.clone(), rule));
        }
        RuleCombination::new(terms)
    }

    pub fn describe(&self) -> String {
        self.terms
            .iter()
            .map(|(c, n)| format!("{c}*{n}"))
            .collect::<Vec<_>>()
            .join("+")
    }
}

/// A rule by name: exact builtins, then the numeric table.
pub fn lookup_rule(name: &str, table: &NodeTable) -> Result<QuadratureRule, RuleError> {
    match builtin_rule(name) {
        Ok(r) => Ok(r),
        Err(RuleError::UnknownRule(_)) => table
            .rule(name)
            .map_err(|_| RuleError::UnknownRule(name.to_string())),
        Err(e) => Err(e),
    }
}

struct Scanner<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn skip_ws(&mut self) {
        while self.text[self.pos..].starts_with(' ') {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn error(&self, message: impl Into<String>) -> ComboParseError {
        ComboParseError {
            position: self.pos,
            message: message.into(),
        }
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if pred(c) {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
        &self.text[start..self.pos]
    }
}

/// Parses a combination expression into coefficients and names.
pub fn parse_combo(text: &str) -> Result<ComboSpec, ComboParseError> {
    let mut s = Scanner { text, pos: 0 };
    let mut terms = Vec::new();
    s.skip_ws();
    if s.peek().is_none() {
        return Err(s.error("empty combination"));
    }
    loop {
        s.skip_ws();
        let mut negative = false;
        match s.peek() {
            Some('+') => {
                s.pos += 1;
            }
            Some('-') => {
                negative = true;
                s.pos += 1;
            }
            _ if terms.is_empty() => {}
            Some(c) => return Err(s.error(format!("expected `+` or `-`, found `{c}`"))),
            None => break,
        }
        s.skip_ws();
        let coef_start = s.pos;
        let coef_text = s.take_while(|c| c.is_ascii_digit() || c == '.' || c == '/');
        if coef_text.is_empty() {
            return Err(s.error("expected a rational coefficient"));
        }
        let mut coef = parse_rational(coef_text).map_err(|e| ComboParseError {
            position: coef_start,
            message: e.to_string(),
        })?;
        if negative {
            coef = -coef;
        }
        s.skip_ws();
        if s.peek() != Some('*') {
            return Err(s.error("expected `*` between coefficient and rule name"));
        }
        s.pos += 1;
        s.skip_ws();
        let name = s.take_while(|c| c.is_ascii_alphanumeric() || c == '_');
        if name.is_empty() {
            return Err(s.error("expected a rule name"));
        }
        terms.push((coef, name.to_string()));
        s.skip_ws();
        match s.peek() {
            None => break,
            Some('+') | Some('-') => {}
            Some(c) => return Err(s.error(format!("unexpected `{c}`"))),
        }
    }
    if terms.iter().all(|(c, _)| c.is_zero()) {
        return Err(ComboParseError {
            position: 0,
            message: "combination has no nonzero coefficient".to_string(),
        });
    }
    Ok(ComboSpec { terms })
}
