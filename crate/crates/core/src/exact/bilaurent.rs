use super::{Field, LaurentPoly, Poly, RatFunc, Rational, Ring};
use std::collections::BTreeMap;
use std::fmt;

/// Element of ℚ(q)(a): a reduced fraction of polynomials in `a` whose
/// coefficients are rational functions in `q`. Hosts framing-variable
/// evaluations, with `a = q^N` specialization recovering one-variable
/// invariants.
#[derive(Clone, PartialEq)]
pub struct BiLaurent {
    num: Poly<RatFunc>,
    den: Poly<RatFunc>, // monic in a, coprime to num
}

impl BiLaurent {
    pub fn new(num: Poly<RatFunc>, den: Poly<RatFunc>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return BiLaurent {
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        let g = num.gcd(&den);
        let num = num.div_exact(&g).unwrap();
        let den = den.div_exact(&g).unwrap();
        let lead = den.leading_coeff();
        BiLaurent {
            num: num.scale(&lead.inv()),
            den: den.monic(),
        }
    }

    /// The variable `a`.
    pub fn a() -> Self {
        Self::a_pow(1)
    }

    pub fn a_pow(e: i64) -> Self {
        if e >= 0 {
            BiLaurent {
                num: Poly::monomial(RatFunc::one(), e as usize),
                den: Poly::one(),
            }
        } else {
            BiLaurent {
                num: Poly::one(),
                den: Poly::monomial(RatFunc::one(), (-e) as usize),
            }
        }
    }

    pub fn q_pow(e: i64) -> Self {
        Self::from_ratfunc(RatFunc::q_pow(e))
    }

    pub fn from_ratfunc(r: RatFunc) -> Self {
        BiLaurent {
            num: Poly::constant(r),
            den: Poly::one(),
        }
    }

    pub fn from_laurent(f: &LaurentPoly) -> Self {
        Self::from_ratfunc(RatFunc::from_laurent(f))
    }

    pub fn int(n: i64) -> Self {
        Self::from_ratfunc(RatFunc::from_int(n))
    }

    /// Substitute a = q^N.
    pub fn subst_a(&self, n: i64) -> RatFunc {
        let a = RatFunc::q_pow(n);
        let num = self.num.eval(&a);
        let den = self.den.eval(&a);
        assert!(!den.is_zero(), "pole at a = q^{}", n);
        num.div(&den)
    }

    /// Monomial expansion c·a^i·q^j keyed by (i, j), when the
    /// denominator is a monomial in `a` and every coefficient is a
    /// Laurent polynomial in `q`.
    pub fn monomials(&self) -> Option<BTreeMap<(i64, i64), Rational>> {
        let d = self.den.degree().unwrap();
        if self.den != Poly::monomial(RatFunc::one(), d) {
            return None;
        }
        let mut out = BTreeMap::new();
        for (i, c) in self.num.coeffs().iter().enumerate() {
            let lp = c.to_laurent()?;
            for (j, r) in lp.terms() {
                if !num_traits::Zero::is_zero(r) {
                    out.insert((i as i64 - d as i64, *j), r.clone());
                }
            }
        }
        Some(out)
    }
}

impl Ring for BiLaurent {
    fn zero() -> Self {
        BiLaurent {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }
    fn one() -> Self {
        BiLaurent {
            num: Poly::one(),
            den: Poly::one(),
        }
    }
    fn add(&self, rhs: &Self) -> Self {
        BiLaurent::new(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        BiLaurent::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
    fn neg(&self) -> Self {
        BiLaurent {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn from_int(n: i64) -> Self {
        BiLaurent::int(n)
    }
}

impl Field for BiLaurent {
    fn inv(&self) -> Self {
        assert!(!self.num.is_zero(), "division by zero");
        BiLaurent::new(self.den.clone(), self.num.clone())
    }
}

impl fmt::Debug for BiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for BiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(ms) = self.monomials() {
            if ms.is_empty() {
                return write!(f, "0");
            }
            let mut first = true;
            for ((i, j), c) in ms.iter().rev() {
                let neg = num_traits::Signed::is_negative(c);
                let abs = num_traits::Signed::abs(c);
                if first {
                    if neg {
                        write!(f, "-")?;
                    }
                    first = false;
                } else if neg {
                    write!(f, "-")?;
                } else {
                    write!(f, "+")?;
                }
                let mut factors: Vec<String> = vec![];
                if !num_traits::One::is_one(&abs) || (*i == 0 && *j == 0) {
                    factors.push(abs.to_string());
                }
                match *i {
                    0 => {}
                    1 => factors.push("a".into()),
                    e => factors.push(format!("a^{}", e)),
                }
                match *j {
                    0 => {}
                    1 => factors.push("q".into()),
                    e => factors.push(format!("q^{}", e)),
                }
                write!(f, "{}", factors.join("*"))?;
            }
            Ok(())
        } else {
            write!(f, "({:?})/({:?})", self.num, self.den)
        }
    }
}

/// Laurent polynomial in `a` with `LaurentPoly`-in-`q` coefficients and
/// a second grading variable `t` confined to even powers. Used for
/// bigraded dimension series.
#[derive(Clone, PartialEq, Default)]
pub struct BigradedLaurent {
    // key: (power of t, power of a is absent; this is (t, coefficient))
    terms: BTreeMap<i64, LaurentPoly>,
}

impl BigradedLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        let mut s = Self::zero();
        s.add_term(0, LaurentPoly::one());
        s
    }

    pub fn monomial(t_exp: i64, q: LaurentPoly) -> Self {
        let mut s = Self::zero();
        s.add_term(t_exp, q);
        s
    }

    pub fn add_term(&mut self, t_exp: i64, q: LaurentPoly) {
        if q.is_zero() {
            return;
        }
        let entry = self.terms.entry(t_exp).or_insert_with(LaurentPoly::zero);
        *entry = &*entry + &q;
        if entry.is_zero() {
            self.terms.remove(&t_exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, t_exp: i64) -> LaurentPoly {
        self.terms.get(&t_exp).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (t, c) in rhs.terms.iter() {
            out.add_term(*t, c.clone());
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (t1, c1) in self.terms.iter() {
            for (t2, c2) in rhs.terms.iter() {
                out.add_term(t1 + t2, c1 * c2);
            }
        }
        out
    }

    /// Set t = 1.
    pub fn forget_t(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for c in self.terms.values() {
            out = &out + c;
        }
        out
    }
}

impl fmt::Display for BigradedLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (t, c) in self.terms.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if *t == 0 {
                write!(f, "({})", c)?;
            } else if *t == 1 {
                write!(f, "t*({})", c)?;
            } else {
                write!(f, "t^{}*({})", t, c)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BigradedLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::super::rat;
    use super::*;

    #[test]
    fn subst_a_specializes() {
        // (a - a^{-1})/(q - q^{-1}) at a = q^2 gives [2] = q + q^{-1}
        let num = BiLaurent::a_pow(1).sub(&BiLaurent::a_pow(-1));
        let den = BiLaurent::q_pow(1).sub(&BiLaurent::q_pow(-1));
        let f = num.div(&den);
        assert_eq!(
            f.subst_a(2).to_laurent().unwrap(),
            LaurentPoly::quantum_int(2)
        );
        assert_eq!(f.subst_a(1).to_laurent().unwrap(), LaurentPoly::one());
    }

    #[test]
    fn monomial_expansion() {
        let f = BiLaurent::a_pow(-2)
            .mul(&BiLaurent::q_pow(3))
            .add(&BiLaurent::int(5));
        let ms = f.monomials().unwrap();
        assert_eq!(ms.get(&(-2, 3)), Some(&rat(1)));
        assert_eq!(ms.get(&(0, 0)), Some(&rat(5)));
        assert_eq!(f.to_string(), "5+a^-2*q^3");
    }

    #[test]
    fn field_axioms_spot_check() {
        let x = BiLaurent::a_pow(3).add(&BiLaurent::q_pow(-1));
        assert_eq!(x.mul(&x.inv()), BiLaurent::one());
        assert!(x.sub(&x).is_zero());
    }
}
