//! Coefficient types.
//!
//! Everything numeric in the crate is generic over [`Scalar`]: exact
//! rationals for the identities that must hold on the nose, and floats
//! when only an approximate value is wanted.

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{Num, Zero};

pub trait Scalar:
    Clone + Debug + PartialEq + Num + Neg<Output = Self> + Send + Sync + 'static
{
    fn from_int(v: i64) -> Self;

    fn from_frac(num: i64, den: i64) -> Self {
        Self::from_int(num) / Self::from_int(den)
    }

    /// `"a/b"` for exact types, decimal otherwise.
    fn render(&self) -> String;

    fn parse(s: &str) -> Option<Self>;

    fn pow_i(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc * self.clone();
        }
        acc
    }
}

macro_rules! impl_float_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            fn from_int(v: i64) -> Self {
                v as $t
            }
            fn render(&self) -> String {
                format!("{}", self)
            }
            fn parse(s: &str) -> Option<Self> {
                match s.split_once('/') {
                    Some((a, b)) => {
                        Some(a.trim().parse::<$t>().ok()? / b.trim().parse::<$t>().ok()?)
                    }
                    None => s.trim().parse().ok(),
                }
            }
        }
    };
}

impl_float_scalar!(f32);
impl_float_scalar!(f64);

impl Scalar for BigRational {
    fn from_int(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn render(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }
    fn parse(s: &str) -> Option<Self> {
        let (a, b) = s.split_once('/').unwrap_or((s, "1"));
        let num: BigInt = a.trim().parse().ok()?;
        let den: BigInt = b.trim().parse().ok()?;
        if den.is_zero() {
            return None;
        }
        Some(BigRational::new(num, den))
    }
}

impl Scalar for Ratio<i64> {
    fn from_int(v: i64) -> Self {
        Ratio::from_integer(v)
    }
    fn render(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }
    fn parse(s: &str) -> Option<Self> {
        let (a, b) = s.split_once('/').unwrap_or((s, "1"));
        let den: i64 = b.trim().parse().ok()?;
        if den == 0 {
            return None;
        }
        Some(Ratio::new(a.trim().parse().ok()?, den))
    }
}

/// `1/q` raised to `e` (negative `e` gives `q^|e|`).
pub(crate) fn inv_q_pow<S: Scalar>(q: u32, e: i32) -> S {
    let q = S::from_int(q as i64);
    if e >= 0 {
        S::one() / q.pow_i(e as u32)
    } else {
        q.pow_i(e.unsigned_abs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_render_parse() {
        let r = BigRational::from_frac(6, 4);
        assert_eq!(r.render(), "3/2");
        assert_eq!(BigRational::parse("3/2"), Some(r));
        assert_eq!(BigRational::parse("5"), Some(BigRational::from_int(5)));
        assert_eq!(BigRational::parse("1/0"), None);
        assert_eq!(BigRational::from_int(1).render(), "1/1");
    }

    #[test]
    fn inverse_powers() {
        let a: BigRational = inv_q_pow(2, 3);
        assert_eq!(a, BigRational::from_frac(1, 8));
        let b: BigRational = inv_q_pow(3, -2);
        assert_eq!(b, BigRational::from_int(9));
        let c: f64 = inv_q_pow(2, 1);
        assert_eq!(c, 0.5);
    }
}
