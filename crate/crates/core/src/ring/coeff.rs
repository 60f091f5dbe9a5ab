//! Coefficient fields: the rationals and prime fields `F_p` with `p < 2^31`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The coefficient field of a polynomial ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Rational,
    Prime(u32),
}

/// A field element. Rationals are kept in lowest terms with a positive
/// denominator (guaranteed by `BigRational`); residues live in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coeff {
    Q(BigRational),
    Fp(u32),
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p as u64 {
        if (p as u64).is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// Builds a field from a characteristic: `0` gives the rationals.
    pub fn from_characteristic(p: u32) -> Result<Field> {
        match p {
            0 => Ok(Field::Rational),
            p if p >= (1 << 31) => Err(Error::InvalidInput(format!(
                "characteristic {p} exceeds 2^31"
            ))),
            p if is_prime(p) => Ok(Field::Prime(p)),
            p => Err(Error::InvalidInput(format!("{p} is not a prime"))),
        }
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Coeff {
        match self {
            Field::Rational => Coeff::Q(BigRational::zero()),
            Field::Prime(_) => Coeff::Fp(0),
        }
    }

    pub fn one(&self) -> Coeff {
        match self {
            Field::Rational => Coeff::Q(BigRational::one()),
            Field::Prime(_) => Coeff::Fp(1),
        }
    }

    pub fn from_i64(&self, v: i64) -> Coeff {
        match self {
            Field::Rational => Coeff::Q(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Coeff::Fp(v.rem_euclid(*p as i64) as u32),
        }
    }

    /// Maps a rational number into the field; fails when the denominator
    /// vanishes modulo `p`.
    pub fn from_rational(&self, q: &BigRational) -> Result<Coeff> {
        match self {
            Field::Rational => Ok(Coeff::Q(q.clone())),
            Field::Prime(p) => {
                let pb = BigInt::from(*p);
                let num = q.numer().mod_floor(&pb).to_u64().unwrap_or(0);
                let den = q.denom().mod_floor(&pb).to_u64().unwrap_or(0);
                if den == 0 {
                    return Err(Error::InvalidInput(format!(
                        "denominator {} vanishes modulo {p}",
                        q.denom()
                    )));
                }
                let inv = mod_inverse(den as u32, *p);
                Ok(Coeff::Fp(((num * inv as u64) % *p as u64) as u32))
            }
        }
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (a, b, self) {
            (Coeff::Q(x), Coeff::Q(y), _) => Coeff::Q(x + y),
            (Coeff::Fp(x), Coeff::Fp(y), Field::Prime(p)) => {
                Coeff::Fp(((*x as u64 + *y as u64) % *p as u64) as u32)
            }
            _ => mixed(),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (a, b, self) {
            (Coeff::Q(x), Coeff::Q(y), _) => Coeff::Q(x - y),
            (Coeff::Fp(x), Coeff::Fp(y), Field::Prime(p)) => {
                Coeff::Fp(((*x as u64 + *p as u64 - *y as u64) % *p as u64) as u32)
            }
            _ => mixed(),
        }
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (a, b, self) {
            (Coeff::Q(x), Coeff::Q(y), _) => Coeff::Q(x * y),
            (Coeff::Fp(x), Coeff::Fp(y), Field::Prime(p)) => {
                Coeff::Fp(((*x as u64 * *y as u64) % *p as u64) as u32)
            }
            _ => mixed(),
        }
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match (a, self) {
            (Coeff::Q(x), _) => Coeff::Q(-x),
            (Coeff::Fp(0), _) => Coeff::Fp(0),
            (Coeff::Fp(x), Field::Prime(p)) => Coeff::Fp(p - x),
            _ => mixed(),
        }
    }

    /// Multiplicative inverse. Panics on zero: callers only invert leading
    /// coefficients.
    pub fn inv(&self, a: &Coeff) -> Coeff {
        assert!(!a.is_zero(), "inverse of zero");
        match (a, self) {
            (Coeff::Q(x), _) => Coeff::Q(x.recip()),
            (Coeff::Fp(x), Field::Prime(p)) => Coeff::Fp(mod_inverse(*x, *p)),
            _ => mixed(),
        }
    }

    pub fn div(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.mul(a, &self.inv(b))
    }

    pub fn pow(&self, a: &Coeff, mut e: u64) -> Coeff {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Parses the decimal representation used by [`Coeff`]'s `Display`.
    pub fn parse_integer(&self, digits: &str) -> Result<Coeff> {
        let n: BigInt = digits
            .parse()
            .map_err(|_| Error::InvalidInput(format!("bad integer literal `{digits}`")))?;
        self.from_rational(&BigRational::from_integer(n))
    }
}

fn mixed() -> ! {
    panic!("coefficients from different fields")
}

fn mod_inverse(a: u32, p: u32) -> u32 {
    // p prime: a^(p-2)
    let (mut base, mut e, mut acc) = (a as u64 % p as u64, p as u64 - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    acc as u32
}

impl Coeff {
    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Q(x) => x.is_zero(),
            Coeff::Fp(x) => *x == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Q(x) => x.is_one(),
            Coeff::Fp(x) => *x == 1,
        }
    }

    /// Signed view used for printing: rationals as they are, residues in the
    /// symmetric range `(-p/2, p/2]`.
    pub(crate) fn is_negative(&self, field: &Field) -> bool {
        match (self, field) {
            (Coeff::Q(x), _) => x.is_negative(),
            (Coeff::Fp(x), Field::Prime(p)) => *x > p / 2,
            _ => false,
        }
    }

    pub(crate) fn display_in(&self, field: &Field) -> String {
        match (self, field) {
            (Coeff::Q(x), _) => {
                if x.is_integer() {
                    x.numer().to_string()
                } else {
                    format!("{}/{}", x.numer(), x.denom())
                }
            }
            (Coeff::Fp(x), Field::Prime(p)) => {
                if *x > p / 2 {
                    format!("-{}", p - x)
                } else {
                    x.to_string()
                }
            }
            (Coeff::Fp(x), _) => x.to_string(),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "QQ"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}
