use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Point;

/// A bivariate Laurent polynomial with arbitrary-precision integer
/// coefficients, stored sparsely by exponent pair. Zero coefficients are
/// never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Point, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(Point::ORIGIN)
    }

    /// `x^a y^b`.
    pub fn monomial(exp: Point) -> Self {
        LaurentPoly::term(exp, BigInt::one())
    }

    pub fn term(exp: Point, coeff: BigInt) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(exp, coeff);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Point, BigInt)>>(terms: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: Point, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: Point) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (Point, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Value at `x = y = 1`.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn shift(&self, by: Point) -> LaurentPoly {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e + by, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> LaurentPoly {
        if k.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(*ea + *eb, ca * cb);
            }
        }
        out
    }

    /// `self^n` by binary exponentiation; `p^0 = 1`.
    pub fn pow(&self, mut n: u32) -> LaurentPoly {
        let mut base = self.clone();
        let mut acc = LaurentPoly::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::mul(self, rhs)
    }
}

impl fmt::Display for LaurentPoly {
    /// Writes e.g. `x + y + x^-1*y^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let var = |name: &str, e: i64| match e {
            0 => None,
            1 => Some(name.to_string()),
            _ => Some(format!("{name}^{e}")),
        };
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let mono: Vec<String> = [var("x", e.x), var("y", e.y)]
                .into_iter()
                .flatten()
                .collect();
            let negative = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            match (mono.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => write!(f, "{}", mono.join("*"))?,
                (false, false) => write!(f, "{mag}*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{ModelTag, StepSet};
    use proptest::prelude::*;

    #[test]
    fn pow_zero_is_one() {
        let lam = StepSet::named(ModelTag::ReverseKreweras).generating_function();
        assert_eq!(lam.pow(0), LaurentPoly::one());
        let mr = StepSet::named(ModelTag::MishnaRechnitzer).generating_function();
        assert_eq!(mr.pow(1), mr);
    }

    #[test]
    fn square_of_reverse_kreweras() {
        // Brute force over the 9 ordered step pairs.
        let steps = StepSet::named(ModelTag::ReverseKreweras);
        let mut hits = std::collections::BTreeMap::<Point, i64>::new();
        for &s in steps.steps() {
            for &u in steps.steps() {
                *hits.entry(s + u).or_default() += 1;
            }
        }
        assert_eq!(hits[&Point::new(1, 1)], 2);
        let sq = steps.generating_function().pow(2);
        for (p, n) in hits {
            assert_eq!(sq.coeff(p), BigInt::from(n));
        }
        assert_eq!(sq.coeff(Point::new(1, 1)), BigInt::from(2));
    }

    #[test]
    fn cancellation_removes_terms() {
        let a = LaurentPoly::monomial(Point::new(1, -1));
        let d = &a - &a;
        assert!(d.is_zero());
        assert_eq!(d.num_terms(), 0);
    }

    #[test]
    fn display() {
        let lam = StepSet::named(ModelTag::ReverseKreweras).generating_function();
        assert_eq!(lam.to_string(), "x^-1*y^-1 + y + x");
        let p = LaurentPoly::term(Point::ORIGIN, BigInt::from(-3));
        assert_eq!(p.to_string(), "-3");
    }

    fn sparse_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec(((-2i64..=2, -2i64..=2), -3i64..=3), 0..5).prop_map(|ts| {
            LaurentPoly::from_terms(
                ts.into_iter()
                    .map(|((x, y), c)| (Point::new(x, y), BigInt::from(c))),
            )
        })
    }

    proptest! {
        #[test]
        fn pow_adds_exponents(p in sparse_poly(), m in 0u32..=6, n in 0u32..=6) {
            prop_assert_eq!(p.pow(m + n), p.pow(m).mul(&p.pow(n)));
        }

        #[test]
        fn mul_commutes(p in sparse_poly(), q in sparse_poly()) {
            prop_assert_eq!(p.mul(&q), q.mul(&p));
        }
    }
}
