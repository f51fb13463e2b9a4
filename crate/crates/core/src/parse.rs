//! Text syntax for algebra objects and subgroups.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary ('*' unary)*
//! unary := '-' unary | '+' unary | power
//! power := atom ('^' '-'? int)?
//! atom  := int ('/' int)? | generator | '(' expr ')' | '[' expr ',' expr ']'
//! ```
//!
//! Generators are `x1 .. xr`, with the aliases `x, y, z` when r ≤ 3.
//! Negative powers and commutators `[a, b]` require unit operands.

use num_bigint::BigInt;

use crate::algebra::{AlgebraElement, AlgebraMatrix, AlgebraVector, Field, Word, MAX_RANK};
use crate::error::{Error, Result};
use crate::groups::Subgroup;
use crate::module::Submodule;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Gen(usize),
    Op(char),
    End,
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
    rank: usize,
}

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        pos,
        msg: msg.into(),
    })
}

impl Lexer<'_> {
    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += self.src[self.pos..]
                .chars()
                .next()
                .map_or(1, char::len_utf8);
        }
    }

    /// Returns the next token and its starting offset.
    fn next(&mut self) -> Result<(Tok, usize)> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[self.pos..];
        let Some(c) = rest.chars().next() else {
            return Ok((Tok::End, start));
        };
        if c.is_ascii_digit() {
            let len = rest
                .find(|ch: char| !ch.is_ascii_digit())
                .unwrap_or(rest.len());
            self.pos += len;
            let n: BigInt = rest[..len].parse().expect("digits");
            return Ok((Tok::Int(n), start));
        }
        if c.is_ascii_alphabetic() {
            let len = rest
                .find(|ch: char| !ch.is_ascii_alphanumeric())
                .unwrap_or(rest.len());
            self.pos += len;
            let name = &rest[..len];
            return Ok((Tok::Gen(self.generator(name, start)?), start));
        }
        if "+-*^/()[],".contains(c) {
            self.pos += 1;
            return Ok((Tok::Op(c), start));
        }
        err(start, format!("unexpected character '{c}'"))
    }

    fn generator(&self, name: &str, pos: usize) -> Result<usize> {
        let alias = ["x", "y", "z"].iter().position(|&a| a == name);
        if let Some(i) = alias {
            if self.rank <= 3 && i < self.rank {
                return Ok(i);
            }
        } else if let Some(digits) = name.strip_prefix('x') {
            if let Ok(i) = digits.parse::<usize>() {
                if (1..=self.rank).contains(&i) && !digits.starts_with('0') {
                    return Ok(i - 1);
                }
            }
        }
        err(
            pos,
            format!("unknown generator '{name}' in rank {}", self.rank),
        )
    }
}

struct Parser<'a> {
    lex: Lexer<'a>,
    tok: Tok,
    tok_pos: usize,
    field: Field,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, field: Field, rank: usize) -> Result<Self> {
        if rank == 0 || rank > MAX_RANK {
            return Err(Error::InvalidArgument(format!(
                "free rank {rank} outside 1..={MAX_RANK}"
            )));
        }
        let mut lex = Lexer { src, pos: 0, rank };
        let (tok, tok_pos) = lex.next()?;
        Ok(Parser {
            lex,
            tok,
            tok_pos,
            field,
        })
    }

    fn rank(&self) -> usize {
        self.lex.rank
    }

    fn bump(&mut self) -> Result<()> {
        let (t, p) = self.lex.next()?;
        self.tok = t;
        self.tok_pos = p;
        Ok(())
    }

    fn eat(&mut self, c: char) -> Result<bool> {
        if self.tok == Tok::Op(c) {
            self.bump()?;
            return Ok(true);
        }
        Ok(false)
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if !self.eat(c)? {
            return err(self.tok_pos, format!("expected '{c}'"));
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<AlgebraElement> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+')? {
                acc = &acc + &self.term()?;
            } else if self.eat('-')? {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<AlgebraElement> {
        let mut acc = self.unary()?;
        while self.eat('*')? {
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<AlgebraElement> {
        if self.eat('-')? {
            return Ok(-&self.unary()?);
        }
        if self.eat('+')? {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<AlgebraElement> {
        let pos = self.tok_pos;
        let base = self.atom()?;
        if !self.eat('^')? {
            return Ok(base);
        }
        let negative = self.eat('-')?;
        let exp_pos = self.tok_pos;
        let Tok::Int(n) = self.tok.clone() else {
            return err(exp_pos, "expected an integer exponent");
        };
        self.bump()?;
        let n: u32 = n
            .try_into()
            .or_else(|_| err(exp_pos, "exponent too large"))?;
        if negative {
            let inv = base
                .unit_inverse()
                .or_else(|_| err(pos, format!("negative power of non-unit {base}")))?;
            Ok(inv.pow(n))
        } else {
            Ok(base.pow(n))
        }
    }

    fn atom(&mut self) -> Result<AlgebraElement> {
        let pos = self.tok_pos;
        let rank = self.rank();
        match self.tok.clone() {
            Tok::Int(n) => {
                self.bump()?;
                let mut den = BigInt::from(1);
                if self.eat('/')? {
                    let dpos = self.tok_pos;
                    let Tok::Int(d) = self.tok.clone() else {
                        return err(dpos, "expected a denominator");
                    };
                    self.bump()?;
                    den = d;
                }
                let c = self
                    .field
                    .from_ratio(&n, &den)
                    .or_else(|_| err(pos, "division by zero"))?;
                Ok(AlgebraElement::scalar(self.field, rank, c))
            }
            Tok::Gen(g) => {
                self.bump()?;
                Ok(AlgebraElement::from_word(
                    self.field,
                    rank,
                    Word::generator(g),
                ))
            }
            Tok::Op('(') => {
                self.bump()?;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Op('[') => {
                self.bump()?;
                let a = self.expr()?;
                self.expect(',')?;
                let b = self.expr()?;
                self.expect(']')?;
                let ai = a
                    .unit_inverse()
                    .or_else(|_| err(pos, format!("commutator of non-unit {a}")))?;
                let bi = b
                    .unit_inverse()
                    .or_else(|_| err(pos, format!("commutator of non-unit {b}")))?;
                Ok(&(&(&a * &b) * &ai) * &bi)
            }
            Tok::End => err(pos, "unexpected end of input"),
            Tok::Op(c) => err(pos, format!("unexpected '{c}'")),
        }
    }

    fn finish(&mut self) -> Result<()> {
        if self.tok != Tok::End {
            return err(self.tok_pos, "trailing input");
        }
        Ok(())
    }
}

/// Parses and evaluates an element of K[F].
pub fn parse_element(src: &str, field: Field, rank: usize) -> Result<AlgebraElement> {
    let mut p = Parser::new(src, field, rank)?;
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

/// Parses a group element: an expression evaluating to a monomial with
/// coefficient 1.
pub fn parse_word(src: &str, rank: usize) -> Result<Word> {
    let e = parse_element(src, Field::Rational, rank)?;
    match e.as_unit() {
        Some((c, w)) if c.is_one() => Ok(w.clone()),
        _ => Err(Error::InvalidWord(format!(
            "'{src}' is not a group element"
        ))),
    }
}

/// Splits at `sep` outside brackets, recording piece offsets.
fn split_top<'a>(src: &'a str, seps: &[char]) -> Vec<(usize, &'a str)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in src.char_indices() {
        match c {
            '(' | '[' | '{' => depth += 1,
            ')' | ']' | '}' => depth -= 1,
            _ if depth == 0 && seps.contains(&c) => {
                out.push((start, &src[start..i]));
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    out.push((start, &src[start..]));
    out
}

fn shift(e: Error, offset: usize) -> Error {
    match e {
        Error::Parse { pos, msg } => Error::Parse {
            pos: pos + offset,
            msg,
        },
        other => other,
    }
}

/// Number of entries of a braced vector, if `src` is one.
pub fn vector_length(src: &str) -> Option<usize> {
    let t = src.trim();
    let inner = t.strip_prefix('{')?.strip_suffix('}')?;
    Some(split_top(inner, &[',']).len())
}

/// Width of a module spec, read off its first braced generator.
pub fn module_width(src: &str) -> Option<usize> {
    split_top(src, &[';'])
        .first()
        .and_then(|(_, g)| vector_length(g))
}

/// Parses `{f1, f2, ...}`, or a bare element when `k = 1`.
pub fn parse_vector(src: &str, field: Field, rank: usize, k: usize) -> Result<AlgebraVector> {
    let trimmed = src.trim_start();
    let lead = src.len() - trimmed.len();
    let t = trimmed.trim_end();
    let entries: Vec<AlgebraElement> = match t.strip_prefix('{').and_then(|s| s.strip_suffix('}')) {
        Some(inner) => split_top(inner, &[','])
            .into_iter()
            .map(|(off, piece)| {
                parse_element(piece, field, rank).map_err(|e| shift(e, lead + 1 + off))
            })
            .collect::<Result<_>>()?,
        None => vec![parse_element(t, field, rank).map_err(|e| shift(e, lead))?],
    };
    if entries.len() != k {
        return Err(Error::DimensionMismatch(format!(
            "vector '{}' has {} entries, expected {k}",
            t,
            entries.len()
        )));
    }
    AlgebraVector::new(entries)
}

/// Parses generators separated by `;`. A lone `1` is the whole module.
pub fn parse_module(src: &str, field: Field, rank: usize, k: usize) -> Result<Submodule> {
    if src.trim() == "1" {
        return Submodule::whole(field, rank, k);
    }
    let gens = split_top(src, &[';'])
        .into_iter()
        .filter(|(_, piece)| !piece.trim().is_empty())
        .map(|(off, piece)| parse_vector(piece, field, rank, k).map_err(|e| shift(e, off)))
        .collect::<Result<Vec<_>>>()?;
    Submodule::new(field, rank, k, gens)
}

/// Parses a matrix: rows separated by `;`, entries by `,`.
pub fn parse_matrix(src: &str, field: Field, rank: usize) -> Result<AlgebraMatrix> {
    let rows = split_top(src, &[';'])
        .into_iter()
        .map(|(roff, row)| {
            split_top(row, &[','])
                .into_iter()
                .map(|(off, e)| parse_element(e, field, rank).map_err(|er| shift(er, roff + off)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    AlgebraMatrix::from_rows(field, rank, rows)
}

/// Parses words separated by `;` or `,`; the identity `1` contributes
/// nothing.
pub fn parse_subgroup(src: &str, rank: usize) -> Result<Subgroup> {
    let gens = split_top(src, &[';', ','])
        .into_iter()
        .filter(|(_, piece)| !piece.trim().is_empty())
        .map(|(off, piece)| parse_word(piece, rank).map_err(|e| shift(e, off)))
        .collect::<Result<Vec<_>>>()?;
    Subgroup::new(rank, gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn elements() {
        let q = Field::Rational;
        assert_eq!(
            parse_element("(x-1)*(x^2+x+1)", q, 2).unwrap().to_string(),
            "x^3 - 1"
        );
        assert_eq!(parse_element("x*x^-1", q, 2).unwrap().to_string(), "1");
        assert_eq!(
            parse_element("x*y^-1*x^2 - 1", q, 2).unwrap().to_string(),
            "x*y^-1*x^2 - 1"
        );
        assert_eq!(
            parse_element("[x,y] - 1", q, 2).unwrap().to_string(),
            "x*y*x^-1*y^-1 - 1"
        );
        assert_eq!(
            parse_element("-1/2*x + 3/6", q, 2).unwrap().to_string(),
            "-1/2*x + 1/2"
        );
        assert_eq!(parse_element("x3*x1", q, 3).unwrap().to_string(), "z*x");
        assert_eq!(parse_element("x4", q, 4).unwrap().to_string(), "x4");
        assert_eq!(
            parse_element("(2*x)^-1", q, 1).unwrap().to_string(),
            "1/2*x^-1"
        );
        assert_eq!(
            parse_element("2 + 2", Field::Prime(3), 2)
                .unwrap()
                .to_string(),
            "1"
        );
    }

    #[test]
    fn errors_carry_positions() {
        let q = Field::Rational;
        assert_eq!(
            parse_element("x + w", q, 2).unwrap_err(),
            Error::Parse {
                pos: 4,
                msg: "unknown generator 'w' in rank 2".into()
            }
        );
        assert!(matches!(
            parse_element("z", q, 2),
            Err(Error::Parse { pos: 0, .. })
        ));
        assert!(matches!(
            parse_element("(x-1)^-1", q, 2),
            Err(Error::Parse { pos: 0, .. })
        ));
        assert!(matches!(
            parse_element("1/0", q, 2),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_element("x +", q, 2),
            Err(Error::Parse { pos: 3, .. })
        ));
        assert!(matches!(
            parse_element("x y", q, 2),
            Err(Error::Parse { pos: 2, .. })
        ));
        assert!(parse_element("1/2", Field::Prime(2), 2).is_err());
    }

    #[test]
    fn modules_and_words() {
        let f = Field::Prime(2);
        let m = parse_module("{x-1, 0}; {y, [x,y]}", f, 2, 2).unwrap();
        assert_eq!(m.gens().len(), 2);
        assert_eq!(m.gens()[1].to_string(), "{y, x*y*x^-1*y^-1}");
        assert!(parse_module("{x-1}", f, 2, 2).is_err());
        assert_eq!(parse_module("1", f, 2, 3).unwrap().gens().len(), 3);
        assert_eq!(vector_length(" {a, [x,y], c} "), Some(3));
        let h = parse_subgroup("x^2; [x,y], y*x", 2).unwrap();
        assert_eq!(h.gens().len(), 3);
        assert!(parse_word("x + y", 2).is_err());
        assert_eq!(parse_word("1", 2).unwrap(), Word::identity());
        let q = parse_matrix("x-1, x-1, y-1", f, 2).unwrap();
        assert_eq!((q.rows(), q.cols()), (1, 3));
    }
}
