//! Text formats for fields, field elements, octonions, Albert vectors and
//! generator words.
//!
//! ```text
//! field     := [ "q=" ] ( q | p "^" k )
//! modulus   := "[" int { "," int } "]"            constant term first, monic
//! element   := [ "-" ] int | "[" int { "," int } "]"
//! octonion  := "0" | "[" element * 8 "]" | term { ("+" | "-") term }
//! term      := [ "-" ] [ element "*" ] name
//! name      := "e-1" | "ewb" | "ew" | "e0" | "e-0" | "e-w" | "e-wb" | "e1" | "1"
//! vector    := "(" element "," element "," element "|" octonion ";" octonion ";" octonion ")"
//! generator := kind [ ":" ("x" | "u") "=" octonion ]
//! word      := [ generator { ";" generator } ]
//! ```
//!
//! Whitespace is allowed between tokens.

use std::fmt;

use albert_e6_core::albert::{Albert, AlbertVector};
use albert_e6_core::gf::{FieldElement, FieldSpec, Gf};
use albert_e6_core::octonion::{Octonion, Octonions, BASIS_NAMES};
use albert_e6_core::se6::{GeneratorKind, GeneratorSpec};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub expected: String,
    pub found: Option<char>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at position {}: expected {}, found ", self.position, self.expected)?;
        match self.found {
            Some(c) => write!(f, "{c:?}"),
            None => write!(f, "end of input"),
        }
    }
}

pub type ParseResult<T> = Result<T, ParseError>;

/// Names accepted for basis octonions, longest first so prefixes never win.
const NAMES_BY_LENGTH: [(&str, Option<usize>); 9] = [
    ("e-wb", Some(6)),
    ("e-1", Some(0)),
    ("ewb", Some(1)),
    ("e-0", Some(4)),
    ("e-w", Some(5)),
    ("ew", Some(2)),
    ("e0", Some(3)),
    ("e1", Some(7)),
    ("1", None),
];

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn error<T>(&mut self, expected: impl Into<String>) -> ParseResult<T> {
        let found = self.peek();
        Err(ParseError { position: self.pos, expected: expected.into(), found })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> ParseResult<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.error(format!("{c:?}"))
        }
    }

    fn eat_str(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn finish(&mut self, what: &str) -> ParseResult<()> {
        if self.peek().is_none() {
            Ok(())
        } else {
            self.error(format!("end of {what}"))
        }
    }

    fn uint(&mut self) -> ParseResult<u64> {
        self.skip_ws();
        let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return self.error("an unsigned integer");
        }
        let start = self.pos;
        let text = &self.rest()[..digits];
        match text.parse() {
            Ok(n) => {
                self.pos += digits;
                Ok(n)
            }
            Err(_) => Err(ParseError {
                position: start,
                expected: "an integer that fits in 64 bits".into(),
                found: text.chars().next(),
            }),
        }
    }

    fn uint_list(&mut self) -> ParseResult<(usize, Vec<u64>)> {
        self.skip_ws();
        let start = self.pos;
        self.expect('[')?;
        let mut out = vec![self.uint()?];
        while self.eat(',') {
            out.push(self.uint()?);
        }
        self.expect(']')?;
        Ok((start, out))
    }

    fn element(&mut self, f: &Gf) -> ParseResult<FieldElement> {
        self.skip_ws();
        let start = self.pos;
        let p = f.characteristic() as u64;
        let k = f.spec().degree() as usize;
        if self.peek() == Some('[') {
            let (_, cs) = self.uint_list()?;
            if cs.len() != k || cs.iter().any(|&c| c >= p) {
                return Err(ParseError {
                    position: start,
                    expected: format!("{k} coefficients in 0..{p}, constant term first"),
                    found: Some('['),
                });
            }
            let cs: Vec<u32> = cs.iter().map(|&c| c as u32).collect();
            return Ok(f.from_coeffs(&cs).expect("coefficients validated"));
        }
        let negative = self.eat('-');
        let n = self.uint()?;
        if n >= p {
            let expected = if k == 1 {
                format!("an integer in 0..{p}")
            } else {
                format!("an integer in 0..{p} or a list of {k} coefficients")
            };
            return Err(ParseError { position: start, expected, found: self.src[start..].chars().next() });
        }
        let x = f.from_int(n as i64);
        Ok(if negative { f.neg(x) } else { x })
    }

    fn basis_name(&mut self) -> Option<Option<usize>> {
        self.skip_ws();
        let rest = self.rest();
        let &(name, idx) = NAMES_BY_LENGTH
            .iter()
            .find(|(n, _)| rest.starts_with(n) && !rest[n.len()..].starts_with(|c: char| c.is_ascii_alphanumeric()))?;
        self.pos += name.len();
        Some(idx)
    }

    fn octonion(&mut self, o: &Octonions) -> ParseResult<Octonion> {
        let f = o.field();
        self.skip_ws();
        if self.peek() == Some('[') {
            let save = self.pos;
            // over extension fields a bracket may also open a coefficient of a term
            let is_coefficient = f.spec().degree() > 1 && self.uint_list().is_ok() && self.peek() == Some('*');
            self.pos = save;
            if !is_coefficient {
                self.expect('[')?;
                let mut coords = [FieldElement::ZERO; 8];
                for (i, c) in coords.iter_mut().enumerate() {
                    if i > 0 {
                        self.expect(',')?;
                    }
                    *c = self.element(f)?;
                }
                if self.peek() == Some(',') {
                    return self.error("']' after 8 coordinates");
                }
                self.expect(']')?;
                return Ok(Octonion(coords));
            }
        }
        if self.rest().starts_with('0') && !self.rest()[1..].trim_start().starts_with('*') {
            self.pos += 1;
            return Ok(Octonion::ZERO);
        }
        let mut acc = self.term(o)?;
        loop {
            // a leading '-' belongs to the next term
            if self.eat('+') || self.peek() == Some('-') {
                acc = o.add(&acc, &self.term(o)?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self, o: &Octonions) -> ParseResult<Octonion> {
        let f = o.field();
        let negative = self.eat('-');
        let save = self.pos;
        let coef = match self.basis_name() {
            Some(idx) if self.peek() != Some('*') => return Ok(signed(o, negative, f.one(), idx)),
            _ => {
                self.pos = save;
                if !matches!(self.peek(), Some(c) if c.is_ascii_digit() || c == '[') {
                    return self.error(
                        "an octonion: 0, [8 coordinates] or a sum of basis names e-1 ewb ew e0 e-0 e-w e-wb e1",
                    );
                }
                let c = self.element(f)?;
                self.expect('*')?;
                c
            }
        };
        match self.basis_name() {
            Some(idx) => Ok(signed(o, negative, coef, idx)),
            None => self.error("a basis name: e-1 ewb ew e0 e-0 e-w e-wb e1 or 1"),
        }
    }

    fn vector(&mut self, j: &Albert) -> ParseResult<AlbertVector> {
        let f = j.field();
        self.expect('(')?;
        let a = self.element(f)?;
        self.expect(',')?;
        let b = self.element(f)?;
        self.expect(',')?;
        let c = self.element(f)?;
        self.expect('|')?;
        let xa = self.octonion(j.octonions())?;
        self.expect(';')?;
        let xb = self.octonion(j.octonions())?;
        self.expect(';')?;
        let xc = self.octonion(j.octonions())?;
        self.expect(')')?;
        Ok(AlbertVector { a, b, c, oct_a: xa, oct_b: xb, oct_c: xc })
    }

    fn generator(&mut self, o: &Octonions) -> ParseResult<GeneratorSpec> {
        self.skip_ws();
        let start = self.pos;
        let len = self.rest().bytes().take_while(u8::is_ascii_alphabetic).count();
        let name = &self.rest()[..len];
        let kind = match GeneratorKind::from_name(name) {
            Some(k) => k,
            None => {
                let names: Vec<&str> = GeneratorKind::ALL.iter().map(|k| k.name()).collect();
                return self.error(format!("a generator kind ({})", names.join(", ")));
            }
        };
        self.pos += len;
        if !kind.has_param() {
            return Ok(GeneratorSpec { kind, param: None });
        }
        self.expect(':')?;
        if !(self.eat('x') || self.eat('u')) {
            return self.error("a parameter name, x or u");
        }
        self.expect('=')?;
        let x = self.octonion(o)?;
        let g = GeneratorSpec::new(kind, x);
        g.validate(o).map_err(|e| ParseError {
            position: start,
            expected: format!("a valid {} generator ({e})", kind.name()),
            found: self.src[start..].chars().next(),
        })?;
        Ok(g)
    }
}

fn signed(o: &Octonions, negative: bool, coef: FieldElement, idx: Option<usize>) -> Octonion {
    let f = o.field();
    let coef = if negative { f.neg(coef) } else { coef };
    let unit = match idx {
        Some(i) => Octonion::basis(i),
        None => Octonion::one(),
    };
    o.scale(coef, &unit)
}

/// Parses `q`, `p^k` or `q=p^k`, with an optional modulus literal.
pub fn parse_field(q: &str, modulus: Option<&str>) -> ParseResult<FieldSpec> {
    let mut c = Cursor::new(q);
    c.eat_str("q=");
    let start = c.pos;
    let base = c.uint()?;
    let exp = if c.eat('^') { c.uint()? } else { 1 };
    c.finish("field order")?;
    let bad = |expected: String| ParseError { position: start, expected, found: q[start..].chars().next() };
    let (base, exp) = match (u32::try_from(base), u32::try_from(exp)) {
        (Ok(b), Ok(e)) => (b, e),
        _ => return Err(bad("a prime power q <= 256".into())),
    };
    let q_val = base.checked_pow(exp).filter(|&v| v <= 256).ok_or_else(|| bad("a prime power q <= 256".into()))?;
    let (p, k) = albert_e6_core::gf::prime_power(q_val).ok_or_else(|| bad("a prime power q <= 256".into()))?;
    match modulus {
        None => FieldSpec::new(p, k).map_err(|e| bad(format!("a supported field order ({e})"))),
        Some(m) => {
            let mut c = Cursor::new(m);
            c.eat_str("modulus=");
            let (pos, cs) = c.uint_list()?;
            c.finish("modulus")?;
            let cs: Vec<u32> = cs.iter().map(|&x| u32::try_from(x).unwrap_or(u32::MAX)).collect();
            FieldSpec::with_modulus(p, cs).map_err(|e| ParseError {
                position: pos,
                expected: format!("a monic irreducible polynomial of degree {k} over GF({p}) ({e})"),
                found: Some('['),
            })
        }
    }
}

pub fn parse_element(f: &Gf, s: &str) -> ParseResult<FieldElement> {
    let mut c = Cursor::new(s);
    let x = c.element(f)?;
    c.finish("field element")?;
    Ok(x)
}

pub fn parse_octonion(o: &Octonions, s: &str) -> ParseResult<Octonion> {
    let mut c = Cursor::new(s);
    let x = c.octonion(o)?;
    c.finish("octonion")?;
    Ok(x)
}

pub fn parse_vector(j: &Albert, s: &str) -> ParseResult<AlbertVector> {
    let mut c = Cursor::new(s);
    let v = c.vector(j)?;
    c.finish("vector")?;
    Ok(v)
}

pub fn parse_generator(o: &Octonions, s: &str) -> ParseResult<GeneratorSpec> {
    let mut c = Cursor::new(s);
    let g = c.generator(o)?;
    c.finish("generator")?;
    Ok(g)
}

/// Parses a `;`-separated word; the empty string is the empty word.
pub fn parse_word(o: &Octonions, s: &str) -> ParseResult<Vec<GeneratorSpec>> {
    let mut c = Cursor::new(s);
    let mut word = Vec::new();
    if c.peek().is_none() {
        return Ok(word);
    }
    loop {
        word.push(c.generator(o)?);
        if !c.eat(';') {
            break;
        }
    }
    c.finish("word")?;
    Ok(word)
}

pub fn format_element(f: &Gf, x: FieldElement) -> String {
    f.format(x)
}

/// `0` for the zero octonion, otherwise the bracketed coordinate list.
pub fn format_octonion(f: &Gf, x: &Octonion) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let cs: Vec<String> = x.0.iter().map(|&c| f.format(c)).collect();
    format!("[{}]", cs.join(","))
}

pub fn format_vector(f: &Gf, v: &AlbertVector) -> String {
    format!(
        "({},{},{}|{};{};{})",
        f.format(v.a),
        f.format(v.b),
        f.format(v.c),
        format_octonion(f, &v.oct_a),
        format_octonion(f, &v.oct_b),
        format_octonion(f, &v.oct_c)
    )
}

pub fn format_generator(f: &Gf, g: &GeneratorSpec) -> String {
    match g.param {
        None => g.kind.name().into(),
        Some(x) => {
            let var = if g.kind.is_unipotent() { "x" } else { "u" };
            format!("{}:{var}={}", g.kind.name(), format_octonion(f, &x))
        }
    }
}

pub fn format_word(f: &Gf, word: &[GeneratorSpec]) -> String {
    word.iter().map(|g| format_generator(f, g)).collect::<Vec<_>>().join(";")
}

/// Basis names in coordinate order, for help texts.
pub fn basis_names() -> String {
    BASIS_NAMES.join(" ")
}
