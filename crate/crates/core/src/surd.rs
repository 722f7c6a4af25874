//! Real numbers of the form `shift + coeff·√radicand` with rational parts.
//!
//! Comparisons against rationals are exact (by squaring integers); the
//! decimal view is a certified enclosing interval.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Serialize, Serializer};

use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq)]
pub struct Surd {
    pub shift: Rational,
    pub coeff: Rational,
    pub radicand: Rational,
}

/// Closed interval `[lo, hi]` known to contain a real number.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Enclosure {
    pub lo: Rational,
    pub hi: Rational,
}

impl Enclosure {
    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }
}

impl Surd {
    /// `coeff·√radicand`; both must be non-negative.
    pub fn sqrt_times(coeff: Rational, radicand: Rational) -> Surd {
        Surd::new(Rational::zero(), coeff, radicand)
    }

    pub fn new(shift: Rational, coeff: Rational, radicand: Rational) -> Surd {
        assert!(!coeff.is_negative() && !radicand.is_negative());
        Surd {
            shift,
            coeff,
            radicand,
        }
    }

    /// Exact comparison with a rational.
    pub fn cmp_rational(&self, x: &Rational) -> Ordering {
        // shift + c√R  vs  x   <=>   c√R  vs  y = x − shift
        let y = x - &self.shift;
        let lhs_sq = &self.coeff * &self.coeff * &self.radicand;
        if y.is_negative() {
            return Ordering::Greater;
        }
        lhs_sq.cmp(&(&y * &y))
    }

    pub fn gt(&self, x: &Rational) -> bool {
        self.cmp_rational(x) == Ordering::Greater
    }

    pub fn ge(&self, x: &Rational) -> bool {
        self.cmp_rational(x) != Ordering::Less
    }

    /// Interval of width at most `10^-12` containing the value.
    pub fn enclosure(&self) -> Enclosure {
        let r = &self.radicand;
        // √(a/b) = √(a·b)/b; scale so that one unit in the last place of the
        // integer root times coeff is below 10^-12.
        let (a, b) = (r.numer().clone(), r.denom().clone());
        let c_ceil = self.coeff.ceil() + BigInt::from(1);
        let scale = BigInt::from(10u64).pow(12) * c_ceil;
        let target = &a * &b * &scale * &scale;
        let root = target.sqrt();
        let den = &b * &scale;
        let exact = &root * &root == target;
        let lo_root = Rational::from_big(root.clone(), den.clone());
        let hi_root = if exact {
            lo_root.clone()
        } else {
            Rational::from_big(root + BigInt::from(1), den)
        };
        Enclosure {
            lo: &self.shift + &(&self.coeff * &lo_root),
            hi: &self.shift + &(&self.coeff * &hi_root),
        }
    }

    pub fn approx(&self) -> f64 {
        let e = self.enclosure();
        (e.lo.to_f64() + e.hi.to_f64()) / 2.0
    }

    pub fn is_rational(&self) -> bool {
        if self.coeff.is_zero() || self.radicand.is_zero() {
            return true;
        }
        let p = self.radicand.numer() * self.radicand.denom();
        let s = p.sqrt();
        &s * &s == p && !p.is_negative()
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*sqrt({})", self.shift, self.coeff, self.radicand)
    }
}

impl fmt::Debug for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} ~ {}", self.approx())
    }
}

impl Serialize for Surd {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let e = self.enclosure();
        let mut st = s.serialize_struct("Surd", 5)?;
        st.serialize_field("expr", &self.to_string())?;
        st.serialize_field("lo", &e.lo)?;
        st.serialize_field("hi", &e.hi)?;
        st.serialize_field("approx", &self.approx())?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compare_exactly() {
        let s = Surd::sqrt_times(Rational::from_int(10), Rational::from_int(4)); // 20
        assert_eq!(s.cmp_rational(&Rational::from_int(20)), Ordering::Equal);
        assert!(s.gt(&Rational::from_int(17)));
        let t = Surd::sqrt_times(Rational::from_int(13), Rational::from_int(13));
        assert!(t.gt(&Rational::from_int(46)));
        assert!(!t.gt(&Rational::from_int(47)));
        let neg = Surd::new(
            Rational::from_int(-5),
            Rational::one(),
            Rational::from_int(2),
        );
        assert!(neg.gt(&Rational::from_int(-4)));
        assert!(!neg.gt(&Rational::from_int(-3)));
    }

    #[test]
    fn enclosure_is_tight_and_sound() {
        let s = Surd::new(
            Rational::new(-1, 2),
            Rational::new(1, 2),
            Rational::from_int(41),
        );
        let e = s.enclosure();
        assert!(e.width() <= Rational::new(1, 1_000_000_000));
        assert!(s.ge(&e.lo));
        assert!(!s.gt(&e.hi));
        assert!((s.approx() - 2.7015621187).abs() < 1e-9);
        let exact = Surd::sqrt_times(Rational::one(), Rational::from_int(9));
        assert_eq!(exact.enclosure().lo, Rational::from_int(3));
        assert!(exact.is_rational());
    }
}
