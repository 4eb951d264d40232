//! Exact scalars over F2, prime fields F_p, and the rationals.
//!
//! A [`Scalar`] carries its field with it, so mixing fields is caught at the
//! operation that does it. The checked `try_*` methods report that as an
//! error; the operator impls treat it as a programming bug and panic.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// The coefficient field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    F2,
    /// An odd prime below 2^31.
    Fp(u32),
    Q,
}

impl Field {
    /// The prime field of order `p`. `p = 2` gives [`Field::F2`].
    pub fn prime(p: u32) -> Result<Field> {
        if p == 2 {
            return Ok(Field::F2);
        }
        if !(3..1 << 31).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidField(format!("F{p}: need a prime below 2^31")));
        }
        Ok(Field::Fp(p))
    }

    /// Characteristic of the field (0 for Q).
    pub fn characteristic(self) -> u32 {
        match self {
            Field::F2 => 2,
            Field::Fp(p) => p,
            Field::Q => 0,
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    /// Image of an integer under the canonical ring map Z -> field.
    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            Field::F2 => Scalar::F2(v.rem_euclid(2) == 1),
            Field::Fp(p) => Scalar::Fp {
                value: v.rem_euclid(p as i64) as u32,
                p,
            },
            Field::Q => Scalar::Q(Box::new(BigRational::from_integer(BigInt::from(v)))),
        }
    }

    /// Image of `num/den`; fails when `den` vanishes in the field.
    pub fn from_ratio(self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        match self {
            Field::Q => {
                if den.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(Scalar::Q(Box::new(BigRational::new(num.clone(), den.clone()))))
            }
            _ => {
                let m = BigInt::from(self.characteristic());
                let reduce = |x: &BigInt| -> i64 {
                    let r = ((x % &m) + &m) % &m;
                    i64::try_from(r).expect("residue fits in i64")
                };
                self.from_i64(reduce(num)).try_div(&self.from_i64(reduce(den)))
            }
        }
    }

    /// Parse a literal: an integer or `num/den`.
    pub fn parse_scalar(self, s: &str) -> Result<Scalar> {
        let bad = || Error::Validation(format!("bad scalar literal {s:?}"));
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
        let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
        self.from_ratio(&n, &d)
    }

    /// Number of elements for finite fields.
    pub fn order(self) -> Option<u64> {
        match self {
            Field::Q => None,
            f => Some(f.characteristic() as u64),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::F2 => write!(f, "F2"),
            Field::Fp(p) => write!(f, "F{p}"),
            Field::Q => write!(f, "Q"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Field> {
        let s = s.trim();
        if s == "Q" {
            return Ok(Field::Q);
        }
        let p = s
            .strip_prefix('F')
            .and_then(|p| p.parse::<u32>().ok())
            .ok_or_else(|| Error::InvalidField(s.to_string()))?;
        Field::prime(p)
    }
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

/// Inverse of `a` modulo `p` by the extended Euclidean algorithm.
fn inv_mod(a: u32, p: u32) -> u32 {
    let (mut r0, mut r1) = (p as i64, a as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1);
    t0.rem_euclid(p as i64) as u32
}

/// A field element in canonical form.
///
/// Rationals are boxed so the common finite-field case stays two words wide.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    F2(bool),
    Fp { value: u32, p: u32 },
    Q(Box<BigRational>),
}

/// The operations accepted by [`arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Inv,
}

/// Apply `op` to `a` (and `b` for binary ops).
pub fn arith(op: ArithOp, a: &Scalar, b: Option<&Scalar>) -> Result<Scalar> {
    let rhs = || b.ok_or_else(|| Error::Validation(format!("{op:?} needs two operands")));
    match op {
        ArithOp::Add => a.try_add(rhs()?),
        ArithOp::Sub => a.try_sub(rhs()?),
        ArithOp::Mul => a.try_mul(rhs()?),
        ArithOp::Div => a.try_div(rhs()?),
        ArithOp::Neg => Ok(-a),
        ArithOp::Inv => a.inv(),
    }
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::F2(_) => Field::F2,
            Scalar::Fp { p, .. } => Field::Fp(*p),
            Scalar::Q(_) => Field::Q,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::F2(b) => !b,
            Scalar::Fp { value, .. } => *value == 0,
            Scalar::Q(q) => q.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::F2(b) => *b,
            Scalar::Fp { value, .. } => *value == 1,
            Scalar::Q(q) => q.is_one(),
        }
    }

    fn check(&self, other: &Scalar) -> Result<()> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.field(), other.field()))
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        Ok(match (self, other) {
            (Scalar::F2(a), Scalar::F2(b)) => Scalar::F2(a ^ b),
            (Scalar::Fp { value: a, p }, Scalar::Fp { value: b, .. }) => Scalar::Fp {
                value: ((*a as u64 + *b as u64) % *p as u64) as u32,
                p: *p,
            },
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(Box::new(a.as_ref() + b.as_ref())),
            _ => unreachable!(),
        })
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        Ok(match (self, other) {
            (Scalar::F2(a), Scalar::F2(b)) => Scalar::F2(a & b),
            (Scalar::Fp { value: a, p }, Scalar::Fp { value: b, .. }) => Scalar::Fp {
                value: ((*a as u64 * *b as u64) % *p as u64) as u32,
                p: *p,
            },
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(Box::new(a.as_ref() * b.as_ref())),
            _ => unreachable!(),
        })
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        self.try_mul(&other.inv()?)
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::F2(_) => Scalar::F2(true),
            Scalar::Fp { value, p } => Scalar::Fp {
                value: inv_mod(*value, *p),
                p: *p,
            },
            Scalar::Q(q) => Scalar::Q(Box::new(q.recip())),
        })
    }

    /// `-1` raised to `k`.
    pub fn sign(field: Field, odd: bool) -> Scalar {
        if odd {
            -&field.one()
        } else {
            field.one()
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::F2(b) => write!(f, "{}", *b as u8),
            Scalar::Fp { value, .. } => write!(f, "{value}"),
            Scalar::Q(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Scalar::Q(q) => write!(f, "{}/{}", q.numer(), q.denom()),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match self {
            Scalar::F2(b) => Scalar::F2(*b),
            Scalar::Fp { value, p } => Scalar::Fp {
                value: if *value == 0 { 0 } else { p - value },
                p: *p,
            },
            Scalar::Q(q) => Scalar::Q(Box::new(-q.as_ref())),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;

            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs).expect("operands from different fields")
            }
        }

        impl $trait<Scalar> for Scalar {
            type Output = Scalar;

            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);
