use alloc::string::String;

use super::{poly_gcd, Domain, Field, ParamPoly, Rational};

/// Element of ℚ(p₁,…,p_k): a reduced quotient of parameter polynomials.
///
/// Numerator and denominator are coprime and the denominator has leading
/// coefficient 1, so equal values have identical representations. The
/// symbol names live in the owning ring, not in each value.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ParamRatio {
    num: ParamPoly,
    den: ParamPoly,
}

impl ParamRatio {
    pub fn from_rational(c: Rational) -> Self {
        ParamRatio {
            num: ParamPoly::constant(c),
            den: ParamPoly::one(),
        }
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_rational(Rational::from_int(v))
    }

    pub fn from_poly(p: ParamPoly) -> Self {
        ParamRatio {
            num: p,
            den: ParamPoly::one(),
        }
    }

    pub fn symbol(i: usize) -> Self {
        Self::from_poly(ParamPoly::var(i))
    }

    /// Reduces `num / den` to canonical form; `None` if `den` is zero.
    pub fn new(num: ParamPoly, den: ParamPoly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(Self::zero());
        }
        let g = poly_gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides"),
                den.div_exact(&g).expect("gcd divides"),
            )
        };
        Some(Self::normalized(num, den))
    }

    fn normalized(num: ParamPoly, den: ParamPoly) -> Self {
        let lc = den.leading_coeff();
        if lc.is_one() {
            ParamRatio { num, den }
        } else {
            let inv = lc.inv().expect("nonzero");
            ParamRatio {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn numer(&self) -> &ParamPoly {
        &self.num
    }

    pub fn denom(&self) -> &ParamPoly {
        &self.den
    }

    /// The value as a rational number, if it involves no symbol.
    pub fn as_rational(&self) -> Option<Rational> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(&n / &d)
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn support_mask(&self) -> u32 {
        self.num.support_mask() | self.den.support_mask()
    }

    /// Substitutes rational values for some symbols (by index).
    pub fn specialize(&self, values: &[(usize, Rational)]) -> Result<Self, PoleAtAssignment> {
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        for (i, v) in values {
            num = num.eval_var(*i, v);
            den = den.eval_var(*i, v);
        }
        Self::new(num, den).ok_or(PoleAtAssignment)
    }

    /// Renames symbol `i` to `map[i]`.
    pub fn remap(&self, map: &[usize]) -> Self {
        let num = self.num.remap(map);
        let den = self.den.remap(map);
        Self::normalized(num, den)
    }

    pub fn pow(&self, e: u32) -> Self {
        ParamRatio {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    /// Canonical text using `names` for the symbols, e.g. `(a)/(a^2 - 4)`.
    pub fn to_string_with(&self, names: &[&str]) -> String {
        let n = self.num.to_string_with(names);
        if self.den.is_one() {
            return n;
        }
        let d = self.den.to_string_with(names);
        let n_bare = self.num.len() == 1 && self.num.leading_coeff().is_integer();
        let d_bare = self.den.len() == 1 && !d.contains('*');
        let n = if n_bare { n } else { alloc::format!("({n})") };
        let d = if d_bare { d } else { alloc::format!("({d})") };
        alloc::format!("{n}/{d}")
    }

    /// True when the value prints as a single signed factor, so it can
    /// multiply a monomial without parentheses.
    pub fn is_simple(&self) -> bool {
        self.den.is_one() && self.num.len() <= 1
    }

    /// Sign of the leading numerator coefficient.
    pub fn leading_sign(&self) -> i32 {
        self.num.leading_coeff().signum()
    }
}

/// A denominator vanished under a specialization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("denominator vanishes at the assignment")]
pub struct PoleAtAssignment;

impl Domain for ParamRatio {
    fn zero() -> Self {
        ParamRatio {
            num: ParamPoly::zero(),
            den: ParamPoly::one(),
        }
    }
    fn one() -> Self {
        ParamRatio {
            num: ParamPoly::one(),
            den: ParamPoly::one(),
        }
    }
    fn from_i64(v: i64) -> Self {
        Self::from_int(v)
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
    fn add(&self, rhs: &Self) -> Self {
        if self.num.is_zero() {
            return rhs.clone();
        }
        if rhs.num.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Self::from_poly(self.num.add(&rhs.num));
        }
        if self.den == rhs.den {
            return Self::new(self.num.add(&rhs.num), self.den.clone()).expect("nonzero");
        }
        let g = poly_gcd(&self.den, &rhs.den);
        let (d1, d2) = if g.is_one() {
            (self.den.clone(), rhs.den.clone())
        } else {
            (
                self.den.div_exact(&g).expect("gcd divides"),
                rhs.den.div_exact(&g).expect("gcd divides"),
            )
        };
        let num = self.num.mul(&d2).add(&rhs.num.mul(&d1));
        let den = self.den.mul(&d2);
        if g.is_one() {
            // coprime denominators leave nothing to cancel
            Self::normalized(num, den)
        } else {
            Self::new(num, den).expect("nonzero")
        }
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        if self.num.is_zero() || rhs.num.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Self::from_poly(self.num.mul(&rhs.num));
        }
        let cancel = |n: &ParamPoly, d: &ParamPoly| -> (ParamPoly, ParamPoly) {
            if d.is_one() || n.is_constant() {
                return (n.clone(), d.clone());
            }
            let g = poly_gcd(n, d);
            if g.is_one() {
                (n.clone(), d.clone())
            } else {
                (
                    n.div_exact(&g).expect("gcd divides"),
                    d.div_exact(&g).expect("gcd divides"),
                )
            }
        };
        let (n1, d2) = cancel(&self.num, &rhs.den);
        let (n2, d1) = cancel(&rhs.num, &self.den);
        Self::normalized(n1.mul(&n2), d1.mul(&d2))
    }
    fn neg(&self) -> Self {
        ParamRatio {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        Field::div(self, rhs)
    }
}

impl Field for ParamRatio {
    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            return None;
        }
        Some(Self::normalized(self.den.clone(), self.num.clone()))
    }
    fn div(&self, rhs: &Self) -> Option<Self> {
        Some(self.mul(&rhs.inv()?))
    }
}

impl From<Rational> for ParamRatio {
    fn from(c: Rational) -> Self {
        Self::from_rational(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> ParamRatio {
        ParamRatio::symbol(0)
    }

    fn k(v: i64) -> ParamRatio {
        ParamRatio::from_int(v)
    }

    #[test]
    fn rational_sum() {
        let x = ParamRatio::from_rational(Rational::frac(1, 2));
        let y = ParamRatio::from_rational(Rational::frac(1, 3));
        assert_eq!(
            x.add(&y).as_rational().unwrap(),
            Rational::frac(5, 6)
        );
    }

    #[test]
    fn factor_cancellation() {
        let num = a().mul(&a()).sub(&k(4));
        let den = a().sub(&k(2));
        assert_eq!(num.div(&den).unwrap(), a().add(&k(2)));
    }

    #[test]
    fn zero_tests() {
        assert!(k(0).is_zero());
        let d = a().mul(&a()).sub(&k(4));
        assert!(!d.is_zero());
        let e = d.sub(&a().sub(&k(2)).mul(&a().add(&k(2))));
        assert!(e.is_zero());
    }

    #[test]
    fn division_by_zero_is_none() {
        assert!(a().div(&k(0)).is_none());
    }

    #[test]
    fn specialization() {
        let x = a().div(&a().mul(&a()).sub(&k(4))).unwrap();
        let at3 = x.specialize(&[(0, Rational::from_int(3))]).unwrap();
        assert_eq!(at3.as_rational().unwrap(), Rational::frac(3, 5));
        assert_eq!(
            x.specialize(&[(0, Rational::from_int(2))]),
            Err(PoleAtAssignment)
        );
        // s^2 (a^2 - 4) at s = 1/7, a = 0
        let s = ParamRatio::symbol(1);
        let y = s.mul(&s).mul(&a().mul(&a()).sub(&k(4)));
        let v = y
            .specialize(&[(1, Rational::frac(1, 7)), (0, Rational::zero())])
            .unwrap();
        assert_eq!(v.as_rational().unwrap(), Rational::frac(-4, 49));
    }

    #[test]
    fn denominator_is_monic() {
        let x = k(3).div(&a().mul(&k(2)).sub(&k(6))).unwrap();
        assert!(x.denom().leading_coeff().is_one());
        assert_eq!(x.to_string_with(&["a"]), "(3/2)/(a - 3)");
    }
}
