//! Text forms for families, modules, operators and words.

use qes_core::superops::{default_stair_q, MatDiffOp, SuperFamily};
use qes_core::{DiffOp, GeneratorFamily, ModuleSpec, Rational, Word};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("expected {expected} at position {pos} in {input:?}")]
    Syntax { input: String, pos: usize, expected: &'static str },
    #[error("unknown {kind} {name:?}")]
    Unknown { kind: &'static str, name: String },
    #[error("{0}")]
    Invalid(String),
}

/// `name(a,b,...)` or a bare `name`.
fn call(input: &str) -> Result<(String, Vec<u32>), ParseError> {
    let s = input.trim();
    let Some(open) = s.find('(') else {
        return Ok((s.to_string(), Vec::new()));
    };
    if !s.ends_with(')') {
        return Err(ParseError::Syntax { input: s.into(), pos: s.len(), expected: "')'" });
    }
    let name = s[..open].trim().to_string();
    let args = s[open + 1..s.len() - 1]
        .split(',')
        .map(|a| {
            a.trim().parse::<u32>().map_err(|_| ParseError::Invalid(format!("bad integer {:?} in {s:?}", a.trim())))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok((name, args))
}

fn arity(input: &str, args: &[u32], n: &[usize]) -> Result<(), ParseError> {
    if n.contains(&args.len()) {
        Ok(())
    } else {
        Err(ParseError::Invalid(format!("{input:?} takes {n:?} arguments, got {}", args.len())))
    }
}

/// `sl2(n)`, `g11(n,m)`, `g15(n)`, `g24(r,p)`; a bare `g15` or `sl2` takes
/// its weight from `default_n`.
pub fn parse_family(input: &str, default_n: Option<u32>) -> Result<GeneratorFamily, ParseError> {
    let (name, args) = call(input)?;
    let n_or_default = |args: &[u32]| -> Result<u32, ParseError> {
        match args {
            [n] => Ok(*n),
            [] => default_n.ok_or_else(|| ParseError::Invalid(format!("{input:?} needs a weight, e.g. {name}(3)"))),
            _ => Err(ParseError::Invalid(format!("{input:?} takes one argument"))),
        }
    };
    match name.to_ascii_lowercase().as_str() {
        "sl2" => Ok(GeneratorFamily::Sl2(n_or_default(&args)?)),
        "g15" => Ok(GeneratorFamily::G15(n_or_default(&args)?)),
        "g11" => {
            arity(input, &args, &[2])?;
            Ok(GeneratorFamily::G11(args[0], args[1]))
        }
        "g24" => {
            arity(input, &args, &[2])?;
            if args[0] < 2 {
                return Err(ParseError::Invalid(format!("{input:?}: r must be at least 2")));
            }
            Ok(GeneratorFamily::G24 { r: args[0], p: args[1] })
        }
        _ => Err(ParseError::Unknown { kind: "family", name }),
    }
}

/// `P(n)`, `R(n,m)`, `T(n)`, `S(r,p,q)`; `S(r,p)` is untruncated.
pub fn parse_module(input: &str) -> Result<ModuleSpec, ParseError> {
    let (name, args) = call(input)?;
    match name.as_str() {
        "P" => {
            arity(input, &args, &[1])?;
            Ok(ModuleSpec::Poly1D(args[0]))
        }
        "R" => {
            arity(input, &args, &[2])?;
            Ok(ModuleSpec::Rect(args[0], args[1]))
        }
        "T" => {
            arity(input, &args, &[1])?;
            Ok(ModuleSpec::Tri(args[0]))
        }
        "S" => {
            arity(input, &args, &[2, 3])?;
            if args[0] < 2 {
                return Err(ParseError::Invalid(format!("{input:?}: r must be at least 2")));
            }
            Ok(match args[..] {
                [r, p] => ModuleSpec::stair(r, p),
                [r, p, q] => ModuleSpec::Stair { r, p, q },
                _ => unreachable!(),
            })
        }
        _ => Err(ParseError::Unknown { kind: "module", name }),
    }
}

/// `sR(n,m,D,G)`, `sT(n,D)`, `sS(r,p)` or `sS(r,p,q)`.
pub fn parse_super(input: &str) -> Result<SuperFamily, ParseError> {
    let (name, args) = call(input)?;
    let fam = match name.as_str() {
        "sR" => {
            arity(input, &args, &[4])?;
            SuperFamily::Rect { n: args[0], m: args[1], delta: args[2], gamma: args[3] }
        }
        "sT" => {
            arity(input, &args, &[2])?;
            SuperFamily::Tri { n: args[0], delta: args[1] }
        }
        "sS" => {
            arity(input, &args, &[2, 3])?;
            let (r, p) = (args[0], args[1]);
            let q = args.get(2).copied().unwrap_or_else(|| default_stair_q(r, p));
            SuperFamily::Stair { r, p, q }
        }
        _ => return Err(ParseError::Unknown { kind: "super family", name }),
    };
    fam.validate().map_err(|e| ParseError::Invalid(e.to_string()))?;
    Ok(fam)
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn err(&self, expected: &'static str) -> ParseError {
        ParseError::Syntax { input: self.src.into(), pos: self.pos, expected }
    }

    fn number(&mut self) -> Option<u64> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
        if len == 0 {
            return None;
        }
        self.pos += len;
        rest[..len].parse().ok()
    }

    fn ident(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest.find(|c: char| !c.is_ascii_alphanumeric()).unwrap_or(rest.len());
        if len == 0 || !rest.starts_with(|c: char| c.is_ascii_alphabetic()) {
            return None;
        }
        self.pos += len;
        Some(&rest[..len])
    }
}

fn expr(lx: &mut Lexer) -> Result<DiffOp, ParseError> {
    let mut acc = if lx.eat('-') { -term(lx)? } else { term(lx)? };
    loop {
        if lx.eat('+') {
            acc = acc + term(lx)?;
        } else if lx.eat('-') {
            acc = acc - term(lx)?;
        } else {
            return Ok(acc);
        }
    }
}

fn term(lx: &mut Lexer) -> Result<DiffOp, ParseError> {
    let mut acc = factor(lx)?;
    while lx.eat('*') {
        acc = acc.compose(&factor(lx)?);
    }
    Ok(acc)
}

fn factor(lx: &mut Lexer) -> Result<DiffOp, ParseError> {
    let base = atom(lx)?;
    if lx.eat('^') {
        let k = lx.number().ok_or_else(|| lx.err("exponent"))?;
        let k = u32::try_from(k).map_err(|_| lx.err("small exponent"))?;
        return Ok(base.pow(k));
    }
    Ok(base)
}

fn atom(lx: &mut Lexer) -> Result<DiffOp, ParseError> {
    if lx.eat('(') {
        let e = expr(lx)?;
        if !lx.eat(')') {
            return Err(lx.err("')'"));
        }
        return Ok(e);
    }
    if lx.eat('-') {
        return Ok(-atom(lx)?);
    }
    if let Some(num) = lx.number() {
        let mut c = Rational::from_integer(num.into());
        if lx.eat('/') {
            let den = lx.number().ok_or_else(|| lx.err("denominator"))?;
            if den == 0 {
                return Err(ParseError::Invalid("zero denominator".into()));
            }
            c /= Rational::from_integer(den.into());
        }
        return Ok(DiffOp::scalar(c));
    }
    match lx.ident() {
        Some("x") => Ok(DiffOp::x()),
        Some("y") => Ok(DiffOp::y()),
        Some("Dx") => Ok(DiffOp::dx()),
        Some("Dy") => Ok(DiffOp::dy()),
        Some(other) => Err(ParseError::Unknown { kind: "symbol", name: other.into() }),
        None => Err(lx.err("a number, x, y, Dx, Dy or '('")),
    }
}

/// Sums of products of `x`, `y`, `Dx`, `Dy` and rationals `p/q`; products
/// compose left to right, so `Dx*x` is `x*Dx + 1`.
pub fn parse_operator(input: &str) -> Result<DiffOp, ParseError> {
    let mut lx = Lexer { src: input, pos: 0 };
    let e = expr(&mut lx)?;
    if lx.peek().is_some() {
        return Err(lx.err("end of input"));
    }
    Ok(e)
}

/// `[[t11, t12], [t21, t22]]`.
pub fn parse_matrix_operator(input: &str) -> Result<MatDiffOp, ParseError> {
    let s = input.trim();
    let inner = s
        .strip_prefix("[[")
        .and_then(|t| t.strip_suffix("]]"))
        .ok_or(ParseError::Syntax { input: s.into(), pos: 0, expected: "[[t11, t12], [t21, t22]]" })?;
    let rows: Vec<&str> = inner.split("],").collect();
    if rows.len() != 2 {
        return Err(ParseError::Invalid(format!("{s:?}: expected two rows")));
    }
    let mut entries = Vec::new();
    for row in rows {
        let row = row.trim().trim_start_matches('[');
        let cells: Vec<&str> = row.split(',').collect();
        if cells.len() != 2 {
            return Err(ParseError::Invalid(format!("{s:?}: expected two entries per row")));
        }
        for c in cells {
            entries.push(parse_operator(c)?);
        }
    }
    let mut it = entries.into_iter();
    let mut next = || it.next().unwrap_or_default();
    Ok(MatDiffOp::new(next(), next(), next(), next()))
}

/// `J1^2*J7*J8` over the given names; `1` is the empty word.
pub fn parse_word(input: &str, names: &[String]) -> Result<Word, ParseError> {
    let s = input.trim();
    if s == "1" {
        return Ok(Word::one());
    }
    let mut w = Word::one();
    for part in s.split('*') {
        let (name, pow) = match part.split_once('^') {
            Some((n, p)) => (n.trim(), p.trim().parse::<u32>().map_err(|_| ParseError::Invalid(format!("bad power in {part:?}")))?),
            None => (part.trim(), 1),
        };
        let g = names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| ParseError::Unknown { kind: "generator", name: name.into() })?;
        w.push(g, pow);
    }
    Ok(w)
}

/// Exact rational from `p` or `p/q`.
pub fn parse_rational(input: &str) -> Result<Rational, ParseError> {
    let op = parse_operator(input)?;
    op.as_scalar().ok_or_else(|| ParseError::Invalid(format!("{input:?} is not a number")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use qes_core::rational::{frac, int};

    #[test]
    fn families_and_modules() {
        assert_eq!(parse_family("g24(2,4)", None).unwrap(), GeneratorFamily::G24 { r: 2, p: 4 });
        assert_eq!(parse_family("g15", Some(3)).unwrap(), GeneratorFamily::G15(3));
        assert!(parse_family("g15", None).is_err());
        assert!(parse_family("g99(1)", None).is_err());
        assert_eq!(parse_module("S(2,4,2)").unwrap(), ModuleSpec::Stair { r: 2, p: 4, q: 2 });
        assert_eq!(parse_module("T(3)").unwrap(), ModuleSpec::Tri(3));
        assert!(parse_module("R(1)").is_err());
        assert_eq!(parse_super("sS(2,4)").unwrap(), SuperFamily::Stair { r: 2, p: 4, q: 1 });
        assert!(parse_super("sT(1,2)").is_err());
    }

    #[test]
    fn operators() {
        let t = parse_operator("x^2*Dx - 2*x").unwrap();
        assert_eq!(t, DiffOp::monomial(int(1), 2, 0, 1, 0) - DiffOp::monomial(int(2), 1, 0, 0, 0));
        assert_eq!(parse_operator("Dx*x").unwrap(), DiffOp::monomial(int(1), 1, 0, 1, 0) + DiffOp::identity());
        assert_eq!(parse_operator("-3/4*y").unwrap(), DiffOp::monomial(frac(-3, 4), 0, 1, 0, 0));
        let sq = DiffOp::monomial(int(1), 2, 0, 0, 0) + DiffOp::monomial(int(2), 1, 1, 0, 0) + DiffOp::monomial(int(1), 0, 2, 0, 0);
        assert_eq!(parse_operator("(x + y)^2").unwrap(), sq);
        assert!(parse_operator("x +").is_err());
        assert!(parse_operator("z").is_err());
        let m = parse_matrix_operator("[[0, 1], [x, Dx]]").unwrap();
        assert_eq!(m.t12, DiffOp::identity());
        assert_eq!(m.t22, DiffOp::dx());
    }

    #[test]
    fn words() {
        let names: Vec<String> = (1..=8).map(|i| format!("J{i}")).collect();
        let w = parse_word("J1^2*J7*J8", &names).unwrap();
        assert_eq!(w.format(&names), "J1^2*J7*J8");
        assert!(parse_word("J9", &names).is_err());
        assert_eq!(parse_rational("7/2").unwrap(), frac(7, 2));
    }
}
