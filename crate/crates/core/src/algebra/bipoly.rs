//! Polynomials in Y whose coefficients are polynomials in T.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::ring::{self, trim};
use super::{AlgebraError, RatPoly, Rational};

/// `P(T, Y) = sum_i c_i(T) Y^i`, coefficients lowest Y-degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BiPoly {
    coeffs: Vec<RatPoly>,
}

impl BiPoly {
    pub fn new(mut coeffs: Vec<RatPoly>) -> Self {
        trim(&mut coeffs);
        BiPoly { coeffs }
    }

    /// A polynomial in Y with constant coefficients.
    pub fn from_y_poly(p: &RatPoly) -> Self {
        Self::new(p.coeffs().iter().cloned().map(RatPoly::constant).collect())
    }

    pub fn coeffs(&self) -> &[RatPoly] {
        &self.coeffs
    }

    pub fn degree_y(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `P(t0, Y)` as a univariate polynomial.
    pub fn specialize(&self, t0: &Rational) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| c.eval(t0)).collect())
    }

    /// Discriminant with respect to Y, a polynomial in T.
    pub fn discriminant(&self) -> Result<RatPoly, AlgebraError> {
        ring::discriminant(&self.coeffs)
            .ok_or_else(|| AlgebraError::Domain("discriminant needs Y-degree at least 1".into()))
    }

    pub fn to_wire(&self) -> Vec<Vec<String>> {
        self.coeffs.iter().map(RatPoly::to_wire).collect()
    }

    pub fn from_wire(v: &[Vec<String>]) -> Result<Self, AlgebraError> {
        if v.len() > super::MAX_POLY_DEGREE + 1 {
            return Err(AlgebraError::Parse("bivariate polynomial too large".into()));
        }
        Ok(Self::new(
            v.iter()
                .map(|c| RatPoly::from_wire(c))
                .collect::<Result<_, _>>()?,
        ))
    }
}

impl Serialize for BiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_wire().serialize(s)
    }
}

impl<'de> Deserialize<'de> for BiPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<Vec<String>>::deserialize(d)?;
        BiPoly::from_wire(&v).map_err(serde::de::Error::custom)
    }
}

/// Monic polynomial in T whose roots are the critical values `M(b)` for the
/// roots `b` of `M'`: the resultant in Y of `M'(Y)` and `T - M(Y)`.
pub fn critical_values_poly(m: &RatPoly) -> Result<RatPoly, AlgebraError> {
    match m.degree() {
        Some(d) if d >= 2 => {}
        _ => {
            return Err(AlgebraError::Domain(
                "critical values need degree at least 2".into(),
            ))
        }
    }
    let dm = BiPoly::from_y_poly(&m.derivative());
    let mut shifted: Vec<RatPoly> = m.coeffs().iter().map(|c| RatPoly::constant(-c)).collect();
    shifted[0] = &shifted[0] + &RatPoly::t();
    let res = ring::resultant(dm.coeffs(), &shifted);
    Ok(res.monic())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    #[test]
    fn critical_values_examples() {
        let sq = RatPoly::from_ints(&[0, 0, 1]);
        assert_eq!(critical_values_poly(&sq).unwrap(), RatPoly::t());
        let cubic = RatPoly::from_ints(&[0, -3, 0, 1]);
        assert_eq!(critical_values_poly(&cubic).unwrap(), RatPoly::from_ints(&[-4, 0, 1]));
        let quintic = RatPoly::from_ints(&[0, 1, 0, 0, 0, 1]);
        let cv = critical_values_poly(&quintic).unwrap();
        assert_eq!(cv.degree(), Some(4));
        assert!(cv.is_squarefree());
        assert!(critical_values_poly(&RatPoly::from_ints(&[1, 1])).is_err());
    }

    #[test]
    fn cubic_family_discriminant() {
        // Y^3 + T^2 Y + T^2
        let t2 = RatPoly::from_ints(&[0, 0, 1]);
        let p = BiPoly::new(vec![t2.clone(), t2, RatPoly::zero(), RatPoly::one()]);
        let expected = RatPoly::from_ints(&[0, 0, 0, 0, -27, 0, -4]);
        assert_eq!(p.discriminant().unwrap(), expected);
        assert_eq!(p.specialize(&int(2)), RatPoly::from_ints(&[4, 4, 0, 1]));
    }
}
