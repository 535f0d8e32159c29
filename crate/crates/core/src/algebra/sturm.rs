//! Real root counting with Sturm sequences.

use num_traits::{Signed, Zero};

use super::{AlgebraError, RatPoly, Rational};

pub(crate) struct SturmChain {
    seq: Vec<RatPoly>,
}

impl SturmChain {
    pub(crate) fn new(p: &RatPoly) -> Result<Self, AlgebraError> {
        if p.is_zero() {
            return Err(AlgebraError::Domain("Sturm sequence of zero".into()));
        }
        let mut seq = vec![p.primitive(), p.derivative().primitive()];
        while !seq[seq.len() - 1].is_zero() {
            let n = seq.len();
            let r = seq[n - 2].rem(&seq[n - 1])?;
            // Positive rescaling keeps signs intact.
            seq.push((-&r).primitive_signed());
        }
        seq.pop();
        Ok(SturmChain { seq })
    }

    fn changes(signs: impl Iterator<Item = i8>) -> usize {
        let mut last = 0i8;
        let mut n = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                n += 1;
            }
            last = s;
        }
        n
    }

    pub(crate) fn changes_at(&self, x: &Rational) -> usize {
        Self::changes(self.seq.iter().map(|q| sign(&q.eval(x))))
    }

    fn changes_at_infinity(&self, positive: bool) -> usize {
        Self::changes(self.seq.iter().map(|q| {
            let s = sign(&q.leading());
            let odd = q.degree().unwrap_or(0) % 2 == 1;
            if !positive && odd {
                -s
            } else {
                s
            }
        }))
    }

    pub(crate) fn total(&self) -> usize {
        self.changes_at_infinity(false) - self.changes_at_infinity(true)
    }

    /// Distinct roots in the half-open interval `(a, b]`.
    pub(crate) fn count_in(&self, a: &Rational, b: &Rational) -> usize {
        self.changes_at(a) - self.changes_at(b)
    }
}

fn sign(q: &Rational) -> i8 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

impl RatPoly {
    /// Like `primitive` but keeps the sign of the leading coefficient.
    pub(crate) fn primitive_signed(&self) -> RatPoly {
        if self.leading().is_negative() {
            -&self.primitive()
        } else {
            self.primitive()
        }
    }
}

/// Number of distinct real roots.
pub fn sturm_real_root_count(p: &RatPoly) -> Result<usize, AlgebraError> {
    Ok(SturmChain::new(p)?.total())
}
