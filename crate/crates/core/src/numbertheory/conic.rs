//! Rational parametrization of `d Y^2 = a T^2 + b T + c` from a rational point.

use num_traits::Zero;
use super::NumberTheoryError;
use crate::algebra::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conic {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
    pub base: (Rational, Rational),
}

impl Conic {
    pub fn new(
        a: Rational,
        b: Rational,
        c: Rational,
        d: Rational,
        base: (Rational, Rational),
    ) -> Result<Self, NumberTheoryError> {
        if d.is_zero() {
            return Err(NumberTheoryError::Domain("d must be nonzero".into()));
        }
        if (&b * &b - Rational::from_integer(4.into()) * &a * &c).is_zero() {
            return Err(NumberTheoryError::Domain(
                "degenerate conic: b^2 - 4ac = 0".into(),
            ));
        }
        let conic = Conic { a, b, c, d, base };
        if !conic.contains(&conic.base.0, &conic.base.1) {
            return Err(NumberTheoryError::Domain("base point is not on the conic".into()));
        }
        Ok(conic)
    }

    pub fn contains(&self, t: &Rational, y: &Rational) -> bool {
        &self.d * y * y == &self.a * t * t + &self.b * t + &self.c
    }

    /// Second intersection of the line of slope `lambda` through the base
    /// point; `None` when the line meets the conic only there.
    pub fn point(&self, lambda: &Rational) -> Option<(Rational, Rational)> {
        let (t1, y1) = &self.base;
        let two = Rational::from_integer(2.into());
        let denom = &self.d * lambda * lambda - &self.a;
        if denom.is_zero() {
            return None;
        }
        let u = (&two * &self.a * t1 + &self.b - &two * &self.d * y1 * lambda) / denom;
        Some((t1 + &u, y1 + lambda * &u))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, ratio};

    #[test]
    fn on_curve() {
        let k = Conic::new(int(1), int(0), int(-1), int(1), (int(1), int(0))).unwrap();
        for l in [ratio(1, 2), int(3), ratio(-5, 7)] {
            let (t, y) = k.point(&l).unwrap();
            assert!(k.contains(&t, &y));
        }
        let k = Conic::new(int(1), int(1), int(0), int(2), (int(0), int(0))).unwrap();
        let (t, y) = k.point(&int(1)).unwrap();
        assert!(k.contains(&t, &y));
        assert_eq!((t, y), (int(1), int(1)));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Conic::new(int(1), int(0), int(-1), int(1), (int(2), int(0))).is_err());
        assert!(Conic::new(int(1), int(0), int(0), int(1), (int(0), int(0))).is_err());
        assert!(Conic::new(int(1), int(0), int(-1), int(0), (int(1), int(0))).is_err());
    }
}
