//! Small arithmetic helpers shared across modules.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Gcd-free fraction accumulator.
///
/// Long summation loops add hundreds of rationals; reducing after every step
/// costs a big-integer gcd each time. This keeps the running numerator and
/// denominator unreduced and performs a single reduction in `into_ratio`.
#[derive(Debug, Clone)]
pub(crate) struct FracSum {
    num: BigInt,
    den: BigInt,
}

impl FracSum {
    pub fn zero() -> Self {
        FracSum {
            num: BigInt::zero(),
            den: BigInt::one(),
        }
    }

    /// Adds n/d. `d` must be positive.
    pub fn add(&mut self, n: &BigInt, d: &BigInt) {
        debug_assert!(d.is_positive());
        self.num = &self.num * d + n * &self.den;
        self.den = &self.den * d;
    }

    pub fn add_ratio(&mut self, r: &BigRational) {
        self.add(r.numer(), r.denom());
    }

    pub fn into_ratio(self) -> BigRational {
        BigRational::new(self.num, self.den)
    }
}

/// 2^e as an exact rational, for any sign of e.
pub(crate) fn pow2(e: i64) -> BigRational {
    if e >= 0 {
        BigRational::from_integer(BigInt::one() << e as usize)
    } else {
        BigRational::new(BigInt::one(), BigInt::one() << (-e) as usize)
    }
}

/// Nearest-integer division for positive `d`; the second field reports
/// whether the division was exact (remainder zero).
pub(crate) fn round_div_nearest(n: &BigInt, d: &BigInt) -> (BigInt, bool) {
    debug_assert!(d.is_positive());
    let (q, r) = n.div_mod_floor(d);
    if r.is_zero() {
        return (q, true);
    }
    // round half away from floor: compare 2r against d
    if &r * 2 >= *d {
        (q + 1, false)
    } else {
        (q, false)
    }
}

/// Number of Euler-Maclaurin correction pairs to use for a requested
/// precision. More pairs shrink the power of N needed for a given target;
/// the cap keeps the Bernoulli table at a sane size for huge precisions
/// (the summation limit doubles instead).
pub(crate) fn em_tail_order(precision_bits: u32) -> u32 {
    (precision_bits / 4).clamp(2, 400)
}
