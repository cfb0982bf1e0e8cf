//! Ideal input grammar.
//!
//! ```text
//! input    := [ "vars" ":" name ("," name)* ] monomial ("," monomial)*
//! monomial := "1" | factor ("*" factor)*
//! factor   := name ("^" integer)?
//! name     := [A-Za-z][A-Za-z0-9_]*
//! ```
//!
//! Whitespace (including newlines) is insignificant. Without a `vars:`
//! header, variables are ordered by first appearance; with one, the
//! header fixes both the set and the order, and unknown names are
//! rejected.

use std::fmt;

use monobox::{Monomial, MonomialIdeal};

/// A parsed ideal: named variables plus raw exponent vectors, one per
/// generator, in input order (not yet reduced).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealSpec {
    pub variables: Vec<String>,
    pub generators: Vec<Vec<u64>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at {}:{}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Scanner<'a> {
    rest: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    col: usize,
}

impl<'a> Scanner<'a> {
    fn new(text: &'a str) -> Self {
        Scanner {
            rest: text.chars().peekable(),
            line: 1,
            col: 1,
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            col: self.col,
            message: message.into(),
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.rest.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn skip_ws(&mut self) {
        while matches!(self.rest.peek(), Some(c) if c.is_whitespace()) {
            self.bump();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.rest.peek().copied()
    }

    fn eat(&mut self, expected: char) -> bool {
        if self.peek() == Some(expected) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn ident(&mut self) -> Option<String> {
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() => {}
            _ => return None,
        }
        let mut name = String::new();
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
            name.push(self.bump().unwrap());
        }
        Some(name)
    }

    fn integer(&mut self) -> Result<u64, ParseError> {
        if self.peek() == Some('-') {
            return Err(self.error("negative exponents are not allowed"));
        }
        let mut digits = String::new();
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            digits.push(self.bump().unwrap());
        }
        if digits.is_empty() {
            return Err(self.error("expected an integer"));
        }
        digits
            .parse::<u64>()
            .map_err(|_| self.error(format!("exponent {digits} does not fit in 64 bits")))
    }
}

/// One generator as (name, exponent) factors; repeated names add up.
fn parse_monomial(s: &mut Scanner) -> Result<Vec<(String, u64)>, ParseError> {
    s.skip_ws();
    if s.peek() == Some('1') {
        s.bump();
        return Ok(Vec::new());
    }
    let mut factors = Vec::new();
    loop {
        s.skip_ws();
        let Some(name) = s.ident() else {
            return Err(s.error("expected a variable name"));
        };
        s.skip_ws();
        let exp = if s.eat('^') {
            s.skip_ws();
            s.integer()?
        } else {
            1
        };
        factors.push((name, exp));
        s.skip_ws();
        if !s.eat('*') {
            break;
        }
    }
    Ok(factors)
}

impl IdealSpec {
    pub fn parse(text: &str) -> Result<IdealSpec, ParseError> {
        let mut s = Scanner::new(text);
        s.skip_ws();

        // optional `vars:` header
        let mut declared: Option<Vec<String>> = None;
        let mut probe = text.trim_start();
        if probe.starts_with("vars") {
            probe = probe["vars".len()..].trim_start();
            if probe.starts_with(':') {
                // consume the header through the scanner to keep positions
                s.ident();
                s.skip_ws();
                s.bump(); // ':'
                let mut names = Vec::new();
                loop {
                    s.skip_ws();
                    let Some(name) = s.ident() else {
                        return Err(s.error("expected a variable name in the vars header"));
                    };
                    if names.contains(&name) {
                        return Err(s.error(format!("duplicate variable {name}")));
                    }
                    names.push(name);
                    s.skip_ws();
                    if !s.eat(',') {
                        break;
                    }
                }
                declared = Some(names);
            }
        }

        let mut variables: Vec<String> = declared.clone().unwrap_or_default();
        let fixed = declared.is_some();
        let mut raw_gens: Vec<Vec<(String, u64)>> = Vec::new();
        loop {
            s.skip_ws();
            let (line, col) = (s.line, s.col);
            let factors = parse_monomial(&mut s)?;
            for (name, _) in &factors {
                if !variables.contains(name) {
                    if fixed {
                        return Err(ParseError {
                            line,
                            col,
                            message: format!("unknown variable {name} (not in the vars header)"),
                        });
                    }
                    variables.push(name.clone());
                }
            }
            raw_gens.push(factors);
            s.skip_ws();
            if !s.eat(',') {
                break;
            }
        }
        s.skip_ws();
        if s.peek().is_some() {
            return Err(s.error("expected ',' or end of input"));
        }
        if raw_gens.is_empty() {
            return Err(s.error("expected at least one generator"));
        }

        let generators = raw_gens
            .into_iter()
            .map(|factors| {
                let mut exps = vec![0u64; variables.len()];
                for (name, e) in factors {
                    let idx = variables.iter().position(|v| v == &name).unwrap();
                    exps[idx] = exps[idx].checked_add(e).ok_or(ParseError {
                        line: 0,
                        col: 0,
                        message: format!("exponent of {name} overflows 64 bits"),
                    })?;
                }
                Ok(exps)
            })
            .collect::<Result<Vec<_>, ParseError>>()?;

        Ok(IdealSpec {
            variables,
            generators,
        })
    }

    /// Canonical text form: `vars:` header plus the generators, each in
    /// `x^a*y^b` notation. Parsing this back reproduces the spec.
    #[allow(dead_code)] // round-trip surface, exercised by the tests
    pub fn to_text(&self) -> String {
        let gens: Vec<String> = self
            .generators
            .iter()
            .map(|g| format_exponents(g, &self.variables))
            .collect();
        format!("vars: {}\n{}\n", self.variables.join(", "), gens.join(", "))
    }

    pub fn num_vars(&self) -> usize {
        self.variables.len()
    }

    pub fn to_ideal(&self) -> monobox::Result<MonomialIdeal> {
        MonomialIdeal::from_generators(
            self.num_vars(),
            self.generators
                .iter()
                .map(|g| Monomial::new(g.clone()))
                .collect(),
        )
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        format_exponents(m.exponents(), &self.variables)
    }

    pub fn format_ideal(&self, ideal: &MonomialIdeal) -> String {
        if ideal.is_zero() {
            return "<0>".to_string();
        }
        let gens: Vec<String> = ideal
            .generators()
            .iter()
            .map(|g| self.format_monomial(g))
            .collect();
        format!("<{}>", gens.join(", "))
    }

    /// Parses a bare generator list (no header) over this spec's
    /// variables; used for secondary operands like `colon --by`.
    pub fn parse_operand(&self, text: &str) -> Result<Vec<Monomial>, ParseError> {
        let mut s = Scanner::new(text);
        let mut out = Vec::new();
        loop {
            s.skip_ws();
            let (line, col) = (s.line, s.col);
            let factors = parse_monomial(&mut s)?;
            let mut exps = vec![0u64; self.num_vars()];
            for (name, e) in factors {
                let Some(idx) = self.variables.iter().position(|v| v == &name) else {
                    return Err(ParseError {
                        line,
                        col,
                        message: format!("unknown variable {name}"),
                    });
                };
                exps[idx] = exps[idx].checked_add(e).ok_or(ParseError {
                    line,
                    col,
                    message: format!("exponent of {name} overflows 64 bits"),
                })?;
            }
            out.push(Monomial::new(exps));
            s.skip_ws();
            if !s.eat(',') {
                break;
            }
        }
        s.skip_ws();
        if s.peek().is_some() {
            return Err(s.error("expected ',' or end of input"));
        }
        Ok(out)
    }
}

fn format_exponents(exps: &[u64], vars: &[String]) -> String {
    let mut parts = Vec::new();
    for (v, &e) in vars.iter().zip(exps) {
        match e {
            0 => {}
            1 => parts.push(v.clone()),
            _ => parts.push(format!("{v}^{e}")),
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_without_header() {
        let spec = IdealSpec::parse("x^3, y^3, z^3, x*y*z").unwrap();
        assert_eq!(spec.variables, vec!["x", "y", "z"]);
        assert_eq!(
            spec.generators,
            vec![
                vec![3, 0, 0],
                vec![0, 3, 0],
                vec![0, 0, 3],
                vec![1, 1, 1]
            ]
        );
    }

    #[test]
    fn header_fixes_the_variable_order() {
        let spec = IdealSpec::parse("vars: z, y, x\nx^2, y*z").unwrap();
        assert_eq!(spec.variables, vec!["z", "y", "x"]);
        assert_eq!(spec.generators, vec![vec![0, 0, 2], vec![1, 1, 0]]);
    }

    #[test]
    fn unknown_variable_under_header_is_an_error() {
        let err = IdealSpec::parse("vars: x, y\nx*w").unwrap_err();
        assert!(err.message.contains("unknown variable w"), "{err}");
        assert_eq!(err.line, 2);
    }

    #[test]
    fn unit_monomial_and_zero_exponent() {
        let spec = IdealSpec::parse("x^0").unwrap();
        assert_eq!(spec.generators, vec![vec![0]]);
        assert!(spec.to_ideal().unwrap().is_unit());

        let spec = IdealSpec::parse("vars: x, y\n1, x^2").unwrap();
        assert_eq!(spec.generators[0], vec![0, 0]);
    }

    #[test]
    fn repeated_factors_accumulate() {
        let spec = IdealSpec::parse("x^2*x*y").unwrap();
        assert_eq!(spec.generators, vec![vec![3, 1]]);
    }

    #[test]
    fn error_positions_point_at_the_problem() {
        let err = IdealSpec::parse("x^3,\n y^-2").unwrap_err();
        assert_eq!((err.line, err.col), (2, 4));
        assert!(err.message.contains("negative"), "{err}");

        let err = IdealSpec::parse("x^").unwrap_err();
        assert_eq!((err.line, err.col), (1, 3));

        let err = IdealSpec::parse("x + y").unwrap_err();
        assert_eq!(err.line, 1);
        assert!(err.message.contains("expected ',' or end of input"));
    }

    #[test]
    fn exponent_overflow_is_reported() {
        let err = IdealSpec::parse("x^99999999999999999999").unwrap_err();
        assert!(err.message.contains("64 bits"), "{err}");
    }

    #[test]
    fn empty_input_is_an_error() {
        assert!(IdealSpec::parse("").is_err());
        assert!(IdealSpec::parse("   \n ").is_err());
    }

    #[test]
    fn round_trip_is_identity() {
        for text in [
            "x^3, y^3, z^3, x*y*z",
            "vars: a, b\na^5, b^5, a*b^4, a^4*b",
            "x^0",
            "vars: x, y, z, w\nx^53, y^56, z^59, w^61, x^50*y^18*z^20*w^25",
        ] {
            let spec = IdealSpec::parse(text).unwrap();
            let again = IdealSpec::parse(&spec.to_text()).unwrap();
            assert_eq!(spec, again, "round trip through {:?}", spec.to_text());
        }
    }

    #[test]
    fn operand_parsing_uses_the_main_variable_universe() {
        let spec = IdealSpec::parse("x^3, y^3").unwrap();
        let ops = spec.parse_operand("x*y^2, y").unwrap();
        assert_eq!(ops[0].exponents(), &[1, 2]);
        assert_eq!(ops[1].exponents(), &[0, 1]);
        assert!(spec.parse_operand("z").is_err());
    }

    #[test]
    fn formatting() {
        let spec = IdealSpec::parse("x^3, y^3, x*y^2").unwrap();
        let ideal = spec.to_ideal().unwrap();
        assert_eq!(spec.format_ideal(&ideal), "<x^3, x*y^2, y^3>");
        assert_eq!(spec.format_monomial(&Monomial::one(2)), "1");
    }
}
