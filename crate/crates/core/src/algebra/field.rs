use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest admissible characteristic; keeps residue products inside `u128`
/// and trial division cheap.
pub const MAX_CHARACTERISTIC: u64 = 1 << 31;

/// The coefficient field: a prime field GF(p) or the rationals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Prime(u64),
    Rational,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if p > MAX_CHARACTERISTIC {
            return Err(Error::InvalidField(format!("characteristic {p} too large")));
        }
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(Field::Prime(p))
    }

    /// Parses `gf:<p>`, `gf<p>`, `q` or `rational`.
    pub fn parse(spec: &str) -> Result<Field> {
        let s = spec.trim().to_ascii_lowercase();
        if s == "q" || s == "rational" || s == "rationals" {
            return Ok(Field::Rational);
        }
        let digits = s
            .strip_prefix("gf:")
            .or_else(|| s.strip_prefix("gf"))
            .ok_or_else(|| Error::InvalidField(spec.to_string()))?;
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::InvalidField(spec.to_string()))?;
        Field::prime(p)
    }

    pub fn characteristic(&self) -> Option<u64> {
        match self {
            Field::Prime(p) => Some(*p),
            Field::Rational => None,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Prime(p) => Scalar::Mod { value: 0, p: *p },
            Field::Rational => Scalar::Rat(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            Field::Prime(p) => Scalar::Mod {
                value: n.rem_euclid(*p as i64) as u64,
                p: *p,
            },
            Field::Rational => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match self {
            Field::Prime(p) => {
                let m = BigInt::from(*p);
                let r = n.mod_floor(&m);
                Scalar::Mod {
                    value: r.to_u64().expect("residue fits"),
                    p: *p,
                }
            }
            Field::Rational => Scalar::Rat(BigRational::from_integer(n.clone())),
        }
    }

    /// The scalar `num / den`.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        let d = self.from_bigint(den);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.from_bigint(num);
        Ok(n.mul(&d.inv()?))
    }

    /// Number of elements, `None` for the rationals.
    pub fn order(&self) -> Option<u64> {
        self.characteristic()
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Prime(p) => write!(f, "gf:{p}"),
            Field::Rational => write!(f, "q"),
        }
    }
}

/// An exact field element tagged with its field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    /// Residue in `[0, p)`.
    Mod { value: u64, p: u64 },
    /// Fraction in lowest terms with positive denominator.
    Rat(BigRational),
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Mod { p, .. } => Field::Prime(*p),
            Scalar::Rat(_) => Field::Rational,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Mod { value, .. } => *value == 0,
            Scalar::Rat(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Mod { value, .. } => *value == 1,
            Scalar::Rat(r) => r.is_one(),
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, p: q }) => {
                debug_assert_eq!(p, q);
                Scalar::Mod {
                    value: (a + b) % p,
                    p: *p,
                }
            }
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            _ => panic!("scalar field mismatch"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Mod { value, p } => Scalar::Mod {
                value: (p - value) % p,
                p: *p,
            },
            Scalar::Rat(a) => Scalar::Rat(-a),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, p: q }) => {
                debug_assert_eq!(p, q);
                Scalar::Mod {
                    value: ((*a as u128 * *b as u128) % *p as u128) as u64,
                    p: *p,
                }
            }
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            _ => panic!("scalar field mismatch"),
        }
    }

    /// Multiplicative inverse (extended gcd for residues).
    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Mod { value, p } => {
                let e = (*value as i64).extended_gcd(&(*p as i64));
                Scalar::Mod {
                    value: e.x.rem_euclid(*p as i64) as u64,
                    p: *p,
                }
            }
            Scalar::Rat(a) => Scalar::Rat(a.recip()),
        })
    }

    /// Signed integer view used for printing: residues are shown in the
    /// balanced range `(-p/2, p/2]`.
    pub fn to_rational(&self) -> BigRational {
        match self {
            Scalar::Mod { value, p } => {
                let v = if *value > p / 2 {
                    -((p - value) as i64)
                } else {
                    *value as i64
                };
                BigRational::from_integer(BigInt::from(v))
            }
            Scalar::Rat(a) => a.clone(),
        }
    }

    /// Whether the printed form carries a leading minus sign.
    pub fn is_printed_negative(&self) -> bool {
        self.to_rational().is_negative()
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.to_rational();
        if r.is_integer() {
            write!(f, "{}", r.numer())
        } else {
            write!(f, "{}/{}", r.numer(), r.denom())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_specs() {
        assert_eq!(Field::parse("gf:2").unwrap(), Field::Prime(2));
        assert_eq!(Field::parse("GF7").unwrap(), Field::Prime(7));
        assert_eq!(Field::parse("q").unwrap(), Field::Rational);
        assert!(Field::parse("gf:4").is_err());
        assert!(Field::parse("gf:1").is_err());
        assert!(Field::parse("reals").is_err());
    }

    #[test]
    fn modular_inverse() {
        let f = Field::Prime(7);
        for n in 1..7 {
            let a = f.from_i64(n);
            assert!(a.mul(&a.inv().unwrap()).is_one());
        }
        assert_eq!(f.zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn residues_normalized() {
        let f = Field::Prime(3);
        assert_eq!(f.from_i64(-1), Scalar::Mod { value: 2, p: 3 });
        assert_eq!(f.from_i64(-1).to_string(), "-1");
        assert_eq!(Field::Prime(2).from_i64(-1).to_string(), "1");
        let half = Field::Rational
            .from_ratio(&BigInt::from(2), &BigInt::from(-4))
            .unwrap();
        assert_eq!(half.to_string(), "-1/2");
        assert!(Field::Prime(5)
            .from_ratio(&BigInt::from(1), &BigInt::from(10))
            .is_err());
    }
}
