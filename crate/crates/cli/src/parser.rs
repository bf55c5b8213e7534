//! Recursive-descent parser for cycle expressions.

use std::str::FromStr;

use rankone_core::Rational;

use crate::ast::{AtomAst, ExprAst, Factor, SymRef, Term};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("{line}:{col}: expected {}, found {found}", expected.join(" or "))]
    Syntax {
        line: usize,
        col: usize,
        found: String,
        expected: Vec<String>,
    },
    #[error("{line}:{col}: symbol `{name}` needs a bigrade annotation `{name}[codim,weight]`")]
    MissingGrade { line: usize, col: usize, name: String },
    #[error("{line}:{col}: {message}")]
    Invalid { line: usize, col: usize, message: String },
}

impl ParseError {
    pub fn position(&self) -> (usize, usize) {
        match self {
            ParseError::Syntax { line, col, .. }
            | ParseError::MissingGrade { line, col, .. }
            | ParseError::Invalid { line, col, .. } => (*line, *col),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(String),
    Punct(char),
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Int(s) => format!("integer `{s}`"),
            Tok::Punct(c) => format!("`{c}`"),
            Tok::End => "end of input".to_string(),
        }
    }
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let (mut line, mut col) = (1, 1);
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        if c == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            col += 1;
            i += 1;
            continue;
        }
        let start = i;
        let tok = if c.is_ascii_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_' || chars[i] == '\'') {
                i += 1;
            }
            Tok::Ident(chars[start..i].iter().collect())
        } else if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            Tok::Int(chars[start..i].iter().collect())
        } else if "[](),+-*/^".contains(c) {
            i += 1;
            Tok::Punct(c)
        } else {
            return Err(ParseError::Invalid {
                line,
                col,
                message: format!("unexpected character `{c}`"),
            });
        };
        col += i - start;
        out.push(Token { tok, line: l0, col: c0 });
    }
    out.push(Token {
        tok: Tok::End,
        line,
        col,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

const ATOM_START: [&str; 3] = ["symbol", "`(`", "`gamma`"];

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn here(&self) -> (usize, usize) {
        let t = &self.toks[self.pos];
        (t.line, t.col)
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        let (line, col) = self.here();
        ParseError::Syntax {
            line,
            col,
            found: self.peek().describe(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Punct(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&[&format!("`{c}`")]))
        }
    }

    fn expr(&mut self) -> Result<ExprAst, ParseError> {
        let mut terms = vec![self.term(false)?];
        loop {
            if self.eat('+') {
                terms.push(self.term(false)?);
            } else if self.eat('-') {
                terms.push(self.term(true)?);
            } else {
                return Ok(ExprAst { terms });
            }
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(self.peek(), Tok::Ident(_) | Tok::Punct('('))
    }

    fn term(&mut self, mut negate: bool) -> Result<Term, ParseError> {
        if self.eat('-') {
            negate = !negate;
        }
        let sign = if negate { Rational::integer(-1) } else { Rational::one() };
        if let Tok::Int(_) = self.peek() {
            let c = self.rat()? * sign;
            let factors = if self.eat('*') || self.starts_atom() {
                self.factors()?
            } else {
                Vec::new()
            };
            return Ok(Term {
                coeff: Some(c),
                factors,
            });
        }
        if !self.starts_atom() {
            let mut expected = vec!["integer"];
            expected.extend(ATOM_START);
            if !negate {
                expected.insert(0, "`-`");
            }
            return Err(self.error(&expected));
        }
        let factors = self.factors()?;
        Ok(Term {
            coeff: negate.then_some(sign),
            factors,
        })
    }

    fn factors(&mut self) -> Result<Vec<Factor>, ParseError> {
        let mut out = vec![self.factor()?];
        while self.eat('*') {
            out.push(self.factor()?);
        }
        Ok(out)
    }

    fn factor(&mut self) -> Result<Factor, ParseError> {
        let atom = self.atom()?;
        let power = if self.eat('^') {
            let (line, col) = self.here();
            let k = self.uint()?;
            Some(u32::try_from(k).map_err(|_| ParseError::Invalid {
                line,
                col,
                message: "exponent too large".to_string(),
            })?)
        } else {
            None
        };
        Ok(Factor { atom, power })
    }

    fn atom(&mut self) -> Result<AtomAst, ParseError> {
        if self.eat('(') {
            let e = self.expr()?;
            self.expect(')')?;
            return Ok(AtomAst::Paren(Box::new(e)));
        }
        let (line, col) = self.here();
        let name = match self.peek().clone() {
            Tok::Ident(name) => name,
            _ => return Err(self.error(&ATOM_START)),
        };
        self.bump();
        match name.as_str() {
            "gamma" => Ok(AtomAst::Gamma),
            "FB" | "inv" => {
                self.expect('(')?;
                let e = Box::new(self.expr()?);
                self.expect(')')?;
                Ok(if name == "FB" { AtomAst::Fb(e) } else { AtomAst::Inv(e) })
            }
            "star" => {
                self.expect('(')?;
                let x = self.sym()?;
                self.expect(',')?;
                let y = self.sym()?;
                self.expect(')')?;
                Ok(AtomAst::Star(x, y))
            }
            "pt" if *self.peek() != Tok::Punct('[') => Ok(AtomAst::Point),
            _ => {
                if *self.peek() != Tok::Punct('[') {
                    return Err(ParseError::MissingGrade { line, col, name });
                }
                Ok(AtomAst::Sym(self.grade(name)?))
            }
        }
    }

    fn sym(&mut self) -> Result<SymRef, ParseError> {
        let (line, col) = self.here();
        match self.peek().clone() {
            Tok::Ident(name) => {
                self.bump();
                if *self.peek() != Tok::Punct('[') {
                    return Err(ParseError::MissingGrade { line, col, name });
                }
                self.grade(name)
            }
            _ => Err(self.error(&["symbol"])),
        }
    }

    fn grade(&mut self, name: String) -> Result<SymRef, ParseError> {
        self.expect('[')?;
        let codim = self.int()?;
        self.expect(',')?;
        let weight = self.int()?;
        self.expect(']')?;
        Ok(SymRef { name, codim, weight })
    }

    fn int(&mut self) -> Result<i32, ParseError> {
        let neg = self.eat('-');
        let (line, col) = self.here();
        let k = self.uint()?;
        let k = i32::try_from(k).map_err(|_| ParseError::Invalid {
            line,
            col,
            message: "grade index too large".to_string(),
        })?;
        Ok(if neg { -k } else { k })
    }

    fn uint(&mut self) -> Result<u64, ParseError> {
        let (line, col) = self.here();
        match self.peek().clone() {
            Tok::Int(s) => {
                self.bump();
                s.parse().map_err(|_| ParseError::Invalid {
                    line,
                    col,
                    message: format!("integer `{s}` is too large"),
                })
            }
            _ => Err(self.error(&["integer"])),
        }
    }

    fn rat(&mut self) -> Result<Rational, ParseError> {
        let (line, col) = self.here();
        let Tok::Int(numer) = self.bump().tok else {
            unreachable!("caller checked for an integer");
        };
        let text = if self.eat('/') {
            match self.peek().clone() {
                Tok::Int(denom) => {
                    self.bump();
                    format!("{numer}/{denom}")
                }
                _ => return Err(self.error(&["integer"])),
            }
        } else {
            numer
        };
        Rational::from_str(&text).map_err(|e| ParseError::Invalid {
            line,
            col,
            message: format!("bad rational `{text}`: {e}"),
        })
    }
}

/// Parses a complete expression.
pub fn parse(text: &str) -> Result<ExprAst, ParseError> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.error(&["`+`", "`-`", "`*`", "end of input"]));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sum_of_two_terms() {
        let e = parse("z[1,1] + 2*w[0,0]*gamma").unwrap();
        assert_eq!(e.terms.len(), 2);
        assert_eq!(e.terms[1].coeff, Some(Rational::integer(2)));
        assert_eq!(e.terms[1].factors.len(), 2);
    }

    #[test]
    fn transform_with_power() {
        let e = parse("FB(z[3,1])*gamma^2").unwrap();
        assert_eq!(e.terms.len(), 1);
        let f = &e.terms[0].factors;
        assert!(matches!(f[0].atom, AtomAst::Fb(_)));
        assert_eq!(f[1].power, Some(2));
    }

    #[test]
    fn single_index_is_an_error() {
        let err = parse("z[1]").unwrap_err();
        match err {
            ParseError::Syntax {
                line, col, expected, ..
            } => {
                assert_eq!((line, col), (1, 4));
                assert_eq!(expected, vec!["`,`"]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn missing_grade() {
        assert!(matches!(parse("z + 1"), Err(ParseError::MissingGrade { col: 1, .. })));
        assert!(matches!(parse("star(C, C[3,0])"), Err(ParseError::MissingGrade { .. })));
    }

    #[test]
    fn sugar_and_signs() {
        assert_eq!(parse("1").unwrap().terms[0].coeff, Some(Rational::one()));
        let e = parse("-z[1,0] - 3/6 w[0,0]").unwrap();
        assert_eq!(e.terms[0].coeff, Some(Rational::integer(-1)));
        assert_eq!(e.terms[1].coeff, Some(Rational::new(-1, 2)));
        assert!(matches!(parse("pt").unwrap().terms[0].factors[0].atom, AtomAst::Point));
    }

    #[test]
    fn positions_span_lines() {
        let err = parse("z[1,1] +\n  * w[0,0]").unwrap_err();
        assert_eq!(err.position(), (2, 3));
        assert!(parse("1/0").is_err());
        assert!(parse("z[1,1] $").is_err());
        assert!(parse("").is_err());
    }

    #[test]
    fn printer_round_trip() {
        for text in [
            "z[1,1] + 2*w[0,0]*gamma",
            "-FB(z[1,1]) - 1/2*FB(w[0,0]*gamma)",
            "star(C[3,0],C[3,1])^2 - 1 + 1*pt",
            "inv((a[1,0] + b[2,1]))*gamma^3",
        ] {
            let e = parse(text).unwrap();
            assert_eq!(e.to_string(), text);
            assert_eq!(parse(&e.to_string()).unwrap(), e);
        }
    }
}
