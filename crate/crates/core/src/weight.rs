//! Exact trust weights in `[0, 1]`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::WeightError;

/// A degree of trust, held as an exact rational so products compare exactly.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(BigRational);

impl Weight {
    pub fn new(value: BigRational) -> Result<Self, WeightError> {
        if value.is_negative() || value > BigRational::one() {
            return Err(WeightError::OutOfRange(display_ratio(&value)));
        }
        Ok(Weight(value))
    }

    pub fn from_ratio(numer: i64, denom: i64) -> Result<Self, WeightError> {
        if denom == 0 {
            return Err(WeightError::Malformed(format!("{numer}/{denom}")));
        }
        Self::new(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn one() -> Self {
        Weight(BigRational::one())
    }

    pub fn zero() -> Self {
        Weight(BigRational::zero())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn as_ratio(&self) -> &BigRational {
        &self.0
    }

    /// Product of two weights; closed on `[0, 1]`.
    pub fn mul(&self, other: &Weight) -> Weight {
        Weight(&self.0 * &other.0)
    }

    /// The numerator and denominator in lowest terms, rendered as `n/d` (or `n` when `d = 1`).
    pub fn to_fraction_string(&self) -> String {
        display_ratio(&self.0)
    }

    /// Exact decimal expansion, if the denominator only has factors 2 and 5.
    pub fn to_decimal_string(&self) -> Option<String> {
        decimal_expansion(&self.0)
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

/// Multiplies weights exactly.
pub fn weight_mul(a: &Weight, b: &Weight) -> Weight {
    a.mul(b)
}

impl Default for Weight {
    fn default() -> Self {
        Weight::one()
    }
}

fn display_ratio(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn decimal_expansion(r: &BigRational) -> Option<String> {
    let mut denom = r.denom().clone();
    let two = BigInt::from(2);
    let five = BigInt::from(5);
    let ten = BigInt::from(10);
    let (mut twos, mut fives) = (0u32, 0u32);
    while (&denom % &two).is_zero() {
        denom /= &two;
        twos += 1;
    }
    while (&denom % &five).is_zero() {
        denom /= &five;
        fives += 1;
    }
    if !denom.is_one() {
        return None;
    }
    let digits = twos.max(fives);
    let scaled = r.numer() * ten.pow(digits) / r.denom();
    if digits == 0 {
        return Some(scaled.to_string());
    }
    let s = format!("{:0>width$}", scaled.to_string(), width = digits as usize + 1);
    let (int_part, frac_part) = s.split_at(s.len() - digits as usize);
    Some(format!("{int_part}.{frac_part}"))
}

impl fmt::Display for Weight {
    /// Decimal when the value has a finite expansion, otherwise `n/d`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_decimal_string() {
            Some(d) => f.write_str(&d),
            None => f.write_str(&self.to_fraction_string()),
        }
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Weight({})", self.to_fraction_string())
    }
}

impl FromStr for Weight {
    type Err = WeightError;

    /// Accepts `0.25`, `1`, `1/3`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let malformed = || WeightError::Malformed(s.to_string());
        let all_digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
        let value = if let Some((n, d)) = s.split_once('/') {
            if !all_digits(n) || !all_digits(d) {
                return Err(malformed());
            }
            let n: BigInt = n.parse().map_err(|_| malformed())?;
            let d: BigInt = d.parse().map_err(|_| malformed())?;
            if d.is_zero() {
                return Err(malformed());
            }
            BigRational::new(n, d)
        } else if let Some((i, frac)) = s.split_once('.') {
            if !all_digits(i) || !all_digits(frac) {
                return Err(malformed());
            }
            let numer: BigInt = format!("{i}{frac}").parse().map_err(|_| malformed())?;
            BigRational::new(numer, BigInt::from(10).pow(frac.len() as u32))
        } else {
            if !all_digits(s) {
                return Err(malformed());
            }
            BigRational::from_integer(s.parse().map_err(|_| malformed())?)
        };
        Weight::new(value)
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
