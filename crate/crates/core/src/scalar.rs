//! Exact field scalars: arbitrary-precision rationals and prime fields.
//!
//! Every computation in this crate is exact; there is no floating point
//! anywhere. The default field is `Q` (rationals in lowest terms), with
//! `Gf<P>` available for cross-checking results modulo a prime.

use crate::error::Error;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::fmt;

/// An exact field element.
///
/// Canonical form is unique: rationals are kept reduced with positive
/// denominator (guaranteed by `BigRational`), residues live in `[0, P)`.
pub trait Scalar:
    Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    /// Parses `"p/q"` or `"p"` (decimal integers, optional leading `-`).
    fn parse(s: &str) -> Result<Self, Error>;
    /// Renders in the canonical `"p/q"` form, omitting `/q` when `q = 1`.
    fn render(&self) -> String;
    /// Tag used in the `"field"` key of JSON files: `"q"` or `"gf:<p>"`.
    fn field_tag() -> String;
}

/// A rational number in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Rat(BigRational);

impl Rat {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn as_ratio(&self) -> &BigRational {
        &self.0
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

fn parse_int_pair(s: &str) -> Result<(BigInt, BigInt), Error> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad numerator in scalar {s:?}")))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad denominator in scalar {s:?}")))?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in scalar {s:?}")));
    }
    Ok((n, d))
}

impl Scalar for Rat {
    fn zero() -> Self {
        Rat(BigRational::zero())
    }
    fn one() -> Self {
        Rat(BigRational::one())
    }
    fn from_i64(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }
    fn add(&self, rhs: &Self) -> Self {
        Rat(&self.0 + &rhs.0)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Rat(&self.0 - &rhs.0)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Rat(&self.0 * &rhs.0)
    }
    fn neg(&self) -> Self {
        Rat(-&self.0)
    }
    fn inv(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Rat(self.0.recip()))
        }
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn parse(s: &str) -> Result<Self, Error> {
        let (n, d) = parse_int_pair(s)?;
        Ok(Rat(BigRational::new(n, d)))
    }
    fn render(&self) -> String {
        if self.0.denom().is_one() {
            self.0.numer().to_string()
        } else {
            format!("{}/{}", self.0.numer(), self.0.denom())
        }
    }
    fn field_tag() -> String {
        "q".into()
    }
}

/// A residue modulo the prime `P`, kept in `[0, P)`.
///
/// `P` must be prime and small enough that `P * P` fits in `u64`; inversion
/// uses Fermat's little theorem.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Gf<const P: u64>(u64);

impl<const P: u64> Gf<P> {
    pub fn new(v: i64) -> Self {
        let p = P as i64;
        Gf(v.rem_euclid(p) as u64)
    }

    pub fn residue(&self) -> u64 {
        self.0
    }

    fn pow(mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= P;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % P;
            }
            base = base * base % P;
            exp >>= 1;
        }
        acc
    }
}

impl<const P: u64> fmt::Display for Gf<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Scalar for Gf<P> {
    fn zero() -> Self {
        Gf(0)
    }
    fn one() -> Self {
        Gf(1 % P)
    }
    fn from_i64(n: i64) -> Self {
        Gf::new(n)
    }
    fn add(&self, rhs: &Self) -> Self {
        Gf((self.0 + rhs.0) % P)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Gf((self.0 + P - rhs.0) % P)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Gf(self.0 * rhs.0 % P)
    }
    fn neg(&self) -> Self {
        Gf((P - self.0) % P)
    }
    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(Gf(Self::pow(self.0, P - 2)))
        }
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn parse(s: &str) -> Result<Self, Error> {
        let (n, d) = parse_int_pair(s)?;
        let reduce = |x: &BigInt| -> u64 {
            let m = x % BigInt::from(P);
            let m = if m.is_negative() { m + BigInt::from(P) } else { m };
            u64::try_from(m).expect("residue fits u64")
        };
        let num = Gf::<P>(reduce(&n));
        let den = Gf::<P>(reduce(&d));
        let den_inv = den
            .inv()
            .ok_or_else(|| Error::Parse(format!("scalar {s:?} has denominator divisible by {P}")))?;
        Ok(num.mul(&den_inv))
    }
    fn render(&self) -> String {
        self.0.to_string()
    }
    fn field_tag() -> String {
        format!("gf:{P}")
    }
}
