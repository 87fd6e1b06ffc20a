//! The shared textual grammar and the `.ideal` / `.mat` file formats.
//!
//! Polynomials: `x0^2*x1 - 3*x2^3`, variables `x0..x{n}`, integer (or
//! `a/b` rational) coefficients, reduced mod p over a prime field.
//!
//! Files start with a header line `ring n=<vars> p=<char>` (`p=0` means
//! the rationals). An `.ideal` file then holds one polynomial per line; a
//! `.mat` file holds one row per line with entries separated by `;`.

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::matrix::PolyMatrix;
use crate::ring::{Coeff, FieldSpec, Monomial, MonomialOrder, Polynomial, Ring};

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str, line: usize) -> Self {
        Cursor { src: src.as_bytes(), pos: 0, line, col: 1 }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        if c == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ') | Some(b'\t') | Some(b'\r')) {
            self.bump();
        }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse { line: self.line, col: self.col, msg: msg.into() }
    }

    fn number(&mut self) -> Result<u64> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        if self.pos == start {
            return Err(self.err("expected a number"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse::<u64>()
            .map_err(|_| self.err("number out of range"))
    }
}

fn parse_coeff(cur: &mut Cursor, ring: &Ring) -> Result<Coeff> {
    let num = cur.number()?;
    cur.skip_ws();
    if cur.peek() == Some(b'/') {
        cur.bump();
        cur.skip_ws();
        let den = cur.number()?;
        if den == 0 {
            return Err(cur.err("zero denominator"));
        }
        return Ok(ring.cfrom_ratio(num as i64, den as i64));
    }
    Ok(ring.cfrom_i64(num as i64))
}

/// Parse a single polynomial in the shared grammar.
pub fn parse_poly(ring: &Ring, input: &str) -> Result<Polynomial> {
    parse_poly_at(ring, input, 1)
}

fn parse_poly_at(ring: &Ring, input: &str, line: usize) -> Result<Polynomial> {
    let mut cur = Cursor::new(input, line);
    let mut pairs: Vec<(Monomial, Coeff)> = Vec::new();
    cur.skip_ws();
    if cur.peek().is_none() {
        return Err(cur.err("empty polynomial"));
    }
    let mut first = true;
    loop {
        cur.skip_ws();
        let mut negate = false;
        match cur.peek() {
            Some(b'+') => {
                cur.bump();
            }
            Some(b'-') => {
                negate = true;
                cur.bump();
            }
            None if !first => break,
            _ if first => {}
            _ => return Err(cur.err("expected `+` or `-`")),
        }
        first = false;
        cur.skip_ws();
        // term: [coeff] ('*'? is required between factors) factors
        let mut coeff = ring.cone();
        let mut mono = Monomial::one(ring.n_vars());
        let mut saw_factor = false;
        if matches!(cur.peek(), Some(c) if c.is_ascii_digit()) {
            coeff = parse_coeff(&mut cur, ring)?;
            saw_factor = true;
        }
        loop {
            cur.skip_ws();
            if saw_factor {
                if cur.peek() == Some(b'*') {
                    cur.bump();
                    cur.skip_ws();
                } else {
                    break;
                }
            }
            match cur.peek() {
                Some(b'x') => {
                    cur.bump();
                    let idx = cur.number()? as usize;
                    if idx >= ring.n_vars() {
                        return Err(cur.err(format!(
                            "variable x{idx} out of range (ring has {} variables)",
                            ring.n_vars()
                        )));
                    }
                    let mut exp: u32 = 1;
                    cur.skip_ws();
                    if cur.peek() == Some(b'^') {
                        cur.bump();
                        cur.skip_ws();
                        exp = cur.number()? as u32;
                    }
                    if exp > u16::MAX as u32 {
                        return Err(cur.err("exponent too large"));
                    }
                    let mut exps = vec![0u16; ring.n_vars()];
                    exps[idx] = exp as u16;
                    mono = mono.mul(&Monomial::from_exps(&exps));
                    saw_factor = true;
                }
                Some(c) if c.is_ascii_digit() && !saw_factor => {
                    coeff = ring.cmul(&coeff, &parse_coeff(&mut cur, ring)?);
                    saw_factor = true;
                }
                _ if saw_factor => break,
                _ => return Err(cur.err("expected a coefficient or a variable like `x0`")),
            }
        }
        if !saw_factor {
            return Err(cur.err("empty term"));
        }
        if negate {
            coeff = ring.cneg(&coeff);
        }
        pairs.push((mono, coeff));
        cur.skip_ws();
        if cur.peek().is_none() {
            break;
        }
    }
    Ok(Polynomial::from_pairs(ring, pairs))
}

/// Header line `ring n=<vars> p=<char>`; returns the ring (degrevlex).
pub fn parse_header(line_text: &str, line: usize) -> Result<Ring> {
    let mk_err = |col: usize, msg: &str| Error::Parse { line, col, msg: msg.to_string() };
    let trimmed = line_text.trim();
    let rest = trimmed
        .strip_prefix("ring")
        .ok_or_else(|| mk_err(1, "expected header `ring n=<vars> p=<char>`"))?;
    let mut n_vars: Option<usize> = None;
    let mut p: Option<u64> = None;
    for tok in rest.split_whitespace() {
        if let Some(v) = tok.strip_prefix("n=") {
            n_vars =
                Some(v.parse().map_err(|_| mk_err(1, "bad variable count in header"))?);
        } else if let Some(v) = tok.strip_prefix("p=") {
            p = Some(v.parse().map_err(|_| mk_err(1, "bad characteristic in header"))?);
        } else {
            return Err(mk_err(1, "unknown header field"));
        }
    }
    let n_vars = n_vars.ok_or_else(|| mk_err(1, "header is missing `n=`"))?;
    let p = p.unwrap_or(crate::ring::DEFAULT_PRIME);
    let field = if p == 0 { FieldSpec::Rationals } else { FieldSpec::Prime(p) };
    if let FieldSpec::Prime(q) = field {
        if q < 2 || !(2..q).take_while(|d| d * d <= q).all(|d| q % d != 0) {
            return Err(mk_err(1, "characteristic must be 0 or a prime"));
        }
    }
    Ok(Ring::new(n_vars, field, MonomialOrder::DegRevLex))
}

/// Parse an `.ideal` document: header, then one polynomial per line.
/// Blank lines and `#` comments are skipped.
pub fn parse_ideal_str(src: &str) -> Result<Ideal> {
    let mut ring: Option<Ring> = None;
    let mut gens = Vec::new();
    for (i, raw) in src.lines().enumerate() {
        let line_no = i + 1;
        let text = raw.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        match &ring {
            None => ring = Some(parse_header(text, line_no)?),
            Some(r) => gens.push(parse_poly_at(r, text, line_no)?),
        }
    }
    let ring = ring.ok_or(Error::Parse {
        line: 1,
        col: 1,
        msg: "missing `ring` header".to_string(),
    })?;
    Ideal::new(&ring, gens).map_err(|e| match e {
        Error::Precondition(msg) => Error::Parse { line: 1, col: 1, msg },
        other => other,
    })
}

/// Parse a `.mat` document: header, then one row per line, `;`-separated.
pub fn parse_matrix_str(src: &str) -> Result<PolyMatrix> {
    let mut ring: Option<Ring> = None;
    let mut rows: Vec<Vec<Polynomial>> = Vec::new();
    for (i, raw) in src.lines().enumerate() {
        let line_no = i + 1;
        let text = raw.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        match &ring {
            None => ring = Some(parse_header(text, line_no)?),
            Some(r) => {
                let mut row = Vec::new();
                for chunk in text.split(';') {
                    row.push(parse_poly_at(r, chunk, line_no)?);
                }
                rows.push(row);
            }
        }
    }
    let ring = ring.ok_or(Error::Parse {
        line: 1,
        col: 1,
        msg: "missing `ring` header".to_string(),
    })?;
    if rows.is_empty() {
        return Err(Error::Parse { line: 1, col: 1, msg: "matrix has no rows".to_string() });
    }
    let width = rows[0].len();
    if rows.iter().any(|r| r.len() != width) {
        return Err(Error::Parse {
            line: 1,
            col: 1,
            msg: "rows have different lengths".to_string(),
        });
    }
    Ok(PolyMatrix::new(&ring, rows))
}

pub fn header_string(ring: &Ring) -> String {
    format!("ring n={} p={}", ring.n_vars(), ring.field().characteristic())
}

pub fn ideal_to_string(ideal: &Ideal) -> String {
    let mut out = header_string(ideal.ring());
    for g in ideal.generators() {
        out.push('\n');
        out.push_str(&g.to_string());
    }
    out.push('\n');
    out
}

pub fn matrix_to_string(m: &PolyMatrix) -> String {
    let mut out = header_string(m.ring());
    for i in 0..m.rows() {
        out.push('\n');
        let row: Vec<String> = (0..m.cols()).map(|j| m.entry(i, j).to_string()).collect();
        out.push_str(&row.join("; "));
    }
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_basic() {
        let r = Ring::fp(3);
        let p = parse_poly(&r, "x0^2*x1 - 3*x2^3").unwrap();
        assert_eq!(p.n_terms(), 2);
        assert_eq!(p.to_string(), "x0^2*x1 - 3*x2^3");
    }

    #[test]
    fn parse_error_has_position() {
        let r = Ring::fp(2);
        match parse_poly(&r, "x0 + x7") {
            Err(Error::Parse { line, col, .. }) => {
                assert_eq!(line, 1);
                assert!(col > 4);
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn ideal_file_round_trip() {
        let src = "ring n=4 p=32003\nx0*x3 - x1*x2\nx0*x2 - x1^2\n";
        let ideal = parse_ideal_str(src).unwrap();
        assert_eq!(ideal.generators().len(), 2);
        let again = parse_ideal_str(&ideal_to_string(&ideal)).unwrap();
        assert_eq!(ideal.generators(), again.generators());
    }

    #[test]
    fn matrix_file_round_trip() {
        let src = "ring n=5 p=32003\nx0; x1 + x4; 0; x2\n0; x1; x2; x0 + x1\n";
        let m = parse_matrix_str(src).unwrap();
        assert_eq!((m.rows(), m.cols()), (2, 4));
        let again = parse_matrix_str(&matrix_to_string(&m)).unwrap();
        assert_eq!(m, again);
    }

    #[test]
    fn rational_header() {
        let src = "ring n=2 p=0\nx0^2 - 1/2*x1^2\n";
        let ideal = parse_ideal_str(src).unwrap();
        assert_eq!(ideal.ring().field(), &FieldSpec::Rationals);
    }

    #[test]
    fn bad_header_rejected() {
        assert!(parse_ideal_str("ring n=2 p=15\nx0\n").is_err());
        assert!(parse_ideal_str("x0 + x1\n").is_err());
    }
}
