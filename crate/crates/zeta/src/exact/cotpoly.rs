use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Integer-coefficient polynomial Q_n with
/// d^n/dz^n cot(pi z) = pi^n * Q_n(cot(pi z)).
///
/// Coefficients are stored densely, index = power of cot(pi z). Splitting the
/// pi^n factor off into the caller keeps every coefficient an exact integer.
/// For chain-generated polynomials: deg Q_n = n + 1, the leading coefficient
/// is (-1)^n * n!, and only powers with the parity of n + 1 are populated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CotPoly {
    order: u32,
    coeffs: Vec<BigInt>,
}

impl CotPoly {
    /// Q_0(c) = c, the cotangent itself.
    pub fn initial() -> Self {
        CotPoly {
            order: 0,
            coeffs: vec![BigInt::zero(), BigInt::one()],
        }
    }

    /// Builds a polynomial from raw coefficients, trimming trailing zeros so
    /// `degree` stays honest. The zero polynomial keeps a single zero entry.
    pub fn new(order: u32, mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.len() > 1 && coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        CotPoly { order, coeffs }
    }

    /// The derivative order n in d^n/dz^n cot(pi z).
    pub fn order(&self) -> u32 {
        self.order
    }

    /// Coefficients by ascending power of cot(pi z).
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn leading_coefficient(&self) -> &BigInt {
        self.coeffs.last().expect("coeffs never empty")
    }

    /// Q_n(1). cot(pi/4) = 1, so evaluating at the quarter point is the
    /// plain coefficient sum.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc + c)
    }
}

/// One step of the derivative chain: Q_{n+1}(c) = -Q_n'(c) * (1 + c^2).
///
/// This is the image of d/dz in c-space, since
/// d cot(pi z)/dz = -pi (1 + cot^2 pi z); the resulting power of pi is
/// tracked by the `order` field, not the coefficients.
pub fn diff_cot_poly(p: &CotPoly) -> CotPoly {
    let q = p.coeffs();
    if q.len() <= 1 {
        // constant (including the zero polynomial): derivative vanishes
        return CotPoly::new(p.order() + 1, vec![BigInt::zero()]);
    }
    // dq = Q_n'
    let dq: Vec<BigInt> = (0..q.len() - 1).map(|i| &q[i + 1] * (i as u64 + 1)).collect();
    // r = -dq * (1 + c^2)
    let mut r = vec![BigInt::zero(); dq.len() + 2];
    for (i, v) in dq.iter().enumerate() {
        r[i] -= v;
        r[i + 2] -= v;
    }
    CotPoly::new(p.order() + 1, r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn first_step_matches_minus_one_minus_c_squared() {
        let q1 = diff_cot_poly(&CotPoly::initial());
        assert_eq!(q1.order(), 1);
        assert_eq!(q1.coeffs(), ints(&[-1, 0, -1]).as_slice());
    }

    #[test]
    fn second_step_hand_applied() {
        // -Q_1'(c) * (1 + c^2) = 2c (1 + c^2) = 2c + 2c^3
        let q2 = diff_cot_poly(&diff_cot_poly(&CotPoly::initial()));
        assert_eq!(q2.order(), 2);
        assert_eq!(q2.coeffs(), ints(&[0, 2, 0, 2]).as_slice());
    }

    #[test]
    fn zero_polynomial_stays_zero() {
        let z = CotPoly::new(3, vec![BigInt::zero()]);
        let dz = diff_cot_poly(&z);
        assert!(dz.is_zero());
        assert_eq!(dz.order(), 4);
    }

    #[test]
    fn eval_at_one_is_coefficient_sum() {
        let mut p = CotPoly::initial();
        let mut values = Vec::new();
        for _ in 0..8 {
            p = diff_cot_poly(&p);
            values.push(p.eval_at_one());
        }
        assert_eq!(values[0], BigInt::from(-2)); // Q_1(1)
        assert_eq!(values[2], BigInt::from(-16)); // Q_3(1)
        assert_eq!(values[4], BigInt::from(-512)); // Q_5(1)
        assert_eq!(values[6], BigInt::from(-34816)); // Q_7(1)
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        let p = CotPoly::new(0, ints(&[0, 1, 0, 0]));
        assert_eq!(p.degree(), 1);
        assert_eq!(p.leading_coefficient(), &BigInt::one());
    }
}
