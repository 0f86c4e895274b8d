use super::{rat, Field, LaurentPoly, Poly, Rational, Ring};
use num_traits::Zero;
use std::fmt;

/// Element of the field of rational functions in `q` over the
/// rationals, stored as a reduced fraction with monic denominator.
#[derive(Clone, PartialEq)]
pub struct RatFunc {
    num: Poly<Rational>,
    den: Poly<Rational>, // monic, coprime to num
}

impl RatFunc {
    pub fn new(num: Poly<Rational>, den: Poly<Rational>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFunc {
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        let g = num.gcd(&den);
        let num = num.div_exact(&g).unwrap();
        let den = den.div_exact(&g).unwrap();
        let lead = den.leading_coeff();
        RatFunc {
            num: num.scale(&lead.inv()),
            den: den.monic(),
        }
    }

    pub fn from_poly(p: Poly<Rational>) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Self::from_poly(Poly::x())
    }

    pub fn q_pow(e: i64) -> Self {
        if e >= 0 {
            Self::from_poly(Poly::monomial(rat(1), e as usize))
        } else {
            RatFunc {
                num: Poly::one(),
                den: Poly::monomial(rat(1), (-e) as usize),
            }
        }
    }

    pub fn from_laurent(f: &LaurentPoly) -> Self {
        let shift = f.min_exp().unwrap_or(0).min(0);
        let num = Poly::from_coeffs({
            let top = f.max_exp().unwrap_or(0) - shift;
            let mut cs = vec![rat(0); (top + 1) as usize];
            for (e, c) in f.terms() {
                cs[(e - shift) as usize] = c.clone();
            }
            cs
        });
        RatFunc::new(num, Poly::monomial(rat(1), (-shift) as usize))
    }

    /// Inverse image under the Laurent embedding, when the denominator
    /// is a pure power of `q`.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        let d = self.den.degree().unwrap();
        if self.den != Poly::monomial(rat(1), d) {
            return None;
        }
        Some(LaurentPoly::from_terms(
            self.num
                .coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| (i as i64 - d as i64, c.clone())),
        ))
    }

    pub fn numerator(&self) -> &Poly<Rational> {
        &self.num
    }

    pub fn denominator(&self) -> &Poly<Rational> {
        &self.den
    }

    /// Evaluate at a rational point where the denominator is nonzero.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        if Zero::is_zero(&d) {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }
}

impl Ring for RatFunc {
    fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }
    fn one() -> Self {
        RatFunc {
            num: Poly::one(),
            den: Poly::one(),
        }
    }
    fn add(&self, rhs: &Self) -> Self {
        RatFunc::new(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        RatFunc::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
    fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn from_int(n: i64) -> Self {
        RatFunc::constant(rat(n))
    }
}

impl Field for RatFunc {
    fn inv(&self) -> Self {
        assert!(!self.num.is_zero(), "division by zero");
        RatFunc::new(self.den.clone(), self.num.clone())
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly::one() {
            write!(f, "{:?}", self.num)
        } else {
            write!(f, "({:?})/({:?})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_and_field_ops() {
        // (q^2 - 1)/(q - 1) = q + 1
        let f = RatFunc::new(
            Poly::from_coeffs(vec![rat(-1), rat(0), rat(1)]),
            Poly::from_coeffs(vec![rat(-1), rat(1)]),
        );
        assert_eq!(f, RatFunc::from_poly(Poly::from_coeffs(vec![rat(1), rat(1)])));
        assert_eq!(f.mul(&f.inv()), RatFunc::one());
        assert!(f.sub(&f).is_zero());
    }

    #[test]
    fn laurent_roundtrip() {
        let f = LaurentPoly::from_terms([(2, rat(1)), (-3, rat(-5)), (0, rat(2))]);
        let r = RatFunc::from_laurent(&f);
        assert_eq!(r.to_laurent().unwrap(), f);
        // q/(q+1) has a non-monomial denominator
        let g = RatFunc::new(Poly::x(), Poly::from_coeffs(vec![rat(1), rat(1)]));
        assert!(g.to_laurent().is_none());
    }

    #[test]
    fn quantum_int_as_fraction() {
        // (q^2 - q^{-2})/(q - q^{-1}) = q + q^{-1}
        let a = RatFunc::from_laurent(&(&LaurentPoly::q_pow(2) - &LaurentPoly::q_pow(-2)));
        let b = RatFunc::from_laurent(&(&LaurentPoly::q_pow(1) - &LaurentPoly::q_pow(-1)));
        assert_eq!(
            a.div(&b).to_laurent().unwrap(),
            LaurentPoly::quantum_int(2)
        );
    }
}
