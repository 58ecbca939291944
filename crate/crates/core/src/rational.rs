//! Exact arithmetic helpers. Rationals are `num_rational::BigRational`, always
//! kept reduced with a positive denominator, and render as `p/q` (or `p`).

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serializer;

pub type ExactRational = BigRational;

pub fn rat(x: i64) -> ExactRational {
    BigRational::from_integer(BigInt::from(x))
}

pub fn rat_big(x: BigInt) -> ExactRational {
    BigRational::from_integer(x)
}

pub fn rat_uint(x: &BigUint) -> ExactRational {
    BigRational::from_integer(BigInt::from(x.clone()))
}

pub fn factorial(n: usize) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// `C(n, k)` for non-negative `n`; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// `(Σ k_i)! / ∏ k_i!`.
pub fn multinomial(parts: &[usize]) -> BigUint {
    let mut total = 0;
    let mut acc = BigUint::one();
    for &k in parts {
        total += k;
        acc *= binomial(total, k);
    }
    acc
}

pub fn serialize_rational<S: Serializer>(x: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rendering() {
        assert_eq!(rat(3).to_string(), "3");
        assert_eq!((rat(1) / rat(-2)).to_string(), "-1/2");
        assert_eq!((rat(4) / rat(6)).to_string(), "2/3");
        assert_eq!("6/4".parse::<BigRational>().unwrap(), rat(3) / rat(2));
    }

    #[test]
    fn counting() {
        assert_eq!(factorial(0), BigUint::one());
        assert_eq!(factorial(5), BigUint::from(120u32));
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(2, 5), BigUint::zero());
        assert_eq!(multinomial(&[1, 1]), BigUint::from(2u32));
        assert_eq!(multinomial(&[2, 1, 3]), BigUint::from(60u32));
        assert_eq!(multinomial(&[]), BigUint::one());
    }
}
