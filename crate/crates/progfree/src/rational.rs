//! Exact rational arithmetic over `i128` with overflow-checked operations.
//!
//! Block-interval endpoints are floors and ceilings of rational powers.
//! Computing them in floating point would make membership counts depend on
//! rounding, so everything stays in integers and operations that could
//! overflow return an error instead of wrapping.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RationalError {
    #[error("denominator must be nonzero")]
    ZeroDenominator,
    #[error("arithmetic overflow in exact rational computation")]
    Overflow,
    #[error("value {0} does not fit in 64 bits")]
    OutOfRange(String),
    #[error("invalid rational literal {0:?} (expected `p` or `p/q`)")]
    Parse(String),
}

/// A reduced fraction with positive denominator.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i128,
    den: i128,
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

impl Rational {
    pub fn new(num: i64, den: i64) -> Result<Self, RationalError> {
        if den == 0 {
            return Err(RationalError::ZeroDenominator);
        }
        Ok(Self::reduced(num as i128, den as i128))
    }

    pub const fn from_int(n: i64) -> Self {
        Rational {
            num: n as i128,
            den: 1,
        }
    }

    pub(crate) const fn from_i128(n: i128) -> Self {
        Rational { num: n, den: 1 }
    }

    fn reduced(num: i128, den: i128) -> Self {
        debug_assert!(den != 0);
        let g = gcd(num, den);
        let (mut num, mut den) = if g == 0 { (0, 1) } else { (num / g, den / g) };
        if den < 0 {
            num = -num;
            den = -den;
        }
        Rational { num, den }
    }

    pub fn numerator(self) -> i128 {
        self.num
    }

    pub fn denominator(self) -> i128 {
        self.den
    }

    pub fn is_integer(self) -> bool {
        self.den == 1
    }

    pub fn checked_add(self, rhs: Self) -> Result<Self, RationalError> {
        let lhs = self
            .num
            .checked_mul(rhs.den)
            .ok_or(RationalError::Overflow)?;
        let rhn = rhs
            .num
            .checked_mul(self.den)
            .ok_or(RationalError::Overflow)?;
        let num = lhs.checked_add(rhn).ok_or(RationalError::Overflow)?;
        let den = self
            .den
            .checked_mul(rhs.den)
            .ok_or(RationalError::Overflow)?;
        Ok(Self::reduced(num, den))
    }

    pub fn checked_sub(self, rhs: Self) -> Result<Self, RationalError> {
        self.checked_add(Rational {
            num: -rhs.num,
            den: rhs.den,
        })
    }

    pub fn checked_mul(self, rhs: Self) -> Result<Self, RationalError> {
        // Cross-reduce first so intermediate products stay small.
        let g1 = gcd(self.num, rhs.den).max(1);
        let g2 = gcd(rhs.num, self.den).max(1);
        let num = (self.num / g1)
            .checked_mul(rhs.num / g2)
            .ok_or(RationalError::Overflow)?;
        let den = (self.den / g2)
            .checked_mul(rhs.den / g1)
            .ok_or(RationalError::Overflow)?;
        Ok(Self::reduced(num, den))
    }

    pub fn checked_div(self, rhs: Self) -> Result<Self, RationalError> {
        if rhs.num == 0 {
            return Err(RationalError::ZeroDenominator);
        }
        self.checked_mul(Rational::reduced(rhs.den, rhs.num))
    }

    pub fn checked_pow(self, exp: u32) -> Result<Self, RationalError> {
        let mut acc = Rational::from_int(1);
        for _ in 0..exp {
            acc = acc.checked_mul(self)?;
        }
        Ok(acc)
    }

    /// Largest integer not above the value, as an `i64`.
    pub fn floor_i64(self) -> Result<i64, RationalError> {
        let f = self.num.div_euclid(self.den);
        i64::try_from(f).map_err(|_| RationalError::OutOfRange(self.to_string()))
    }

    /// Smallest integer not below the value, as an `i64`.
    pub fn ceil_i64(self) -> Result<i64, RationalError> {
        let c = -(-self.num).div_euclid(self.den);
        i64::try_from(c).map_err(|_| RationalError::OutOfRange(self.to_string()))
    }

    pub fn abs(self) -> Self {
        Rational {
            num: self.num.abs(),
            den: self.den,
        }
    }

    pub fn is_positive(self) -> bool {
        self.num > 0
    }

    /// Decimal rendering with the given number of significant digits.
    /// Only for output formatting; all comparisons stay exact.
    pub fn to_decimal(self, significant: usize) -> String {
        if self.num == 0 {
            return "0".to_string();
        }
        let v = self.num as f64 / self.den as f64;
        let magnitude = v.abs().log10().floor() as i64;
        let decimals = (significant as i64 - 1 - magnitude).clamp(0, 30) as usize;
        format!("{v:.decimals$}")
    }
}

/// Total order without overflow: compare integer parts, then recurse on the
/// reciprocals of the fractional parts (continued-fraction comparison).
fn cmp_frac(mut an: i128, mut ad: i128, mut bn: i128, mut bd: i128) -> Ordering {
    loop {
        let qa = an.div_euclid(ad);
        let qb = bn.div_euclid(bd);
        if qa != qb {
            return qa.cmp(&qb);
        }
        let ra = an - qa * ad;
        let rb = bn - qb * bd;
        match (ra == 0, rb == 0) {
            (true, true) => return Ordering::Equal,
            (true, false) => return Ordering::Less,
            (false, true) => return Ordering::Greater,
            (false, false) => {
                // a = q + ra/ad, b = q + rb/bd; compare ra/ad vs rb/bd by
                // comparing their reciprocals in reverse.
                (an, ad, bn, bd) = (bd, rb, ad, ra);
            }
        }
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_frac(self.num, self.den, other.num, other.den)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Rational {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl FromStr for Rational {
    type Err = RationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || RationalError::Parse(s.to_string());
        match s.split_once('/') {
            None => Ok(Rational::from_int(s.trim().parse().map_err(|_| bad())?)),
            Some((p, q)) => {
                let p: i64 = p.trim().parse().map_err(|_| bad())?;
                let q: i64 = q.trim().parse().map_err(|_| bad())?;
                Rational::new(p, q)
            }
        }
    }
}
