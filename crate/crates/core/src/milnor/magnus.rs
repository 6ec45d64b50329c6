//! Truncated Magnus expansion into noncommuting power series.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::milnor::word::Word;
use crate::Scalar;

/// An element of `Z<<X_1..X_m>>` truncated above `degree_cap`. In reduced
/// mode, monomials with a repeated variable are also set to zero, which
/// leaves a finite ring that still sees every non-repeating coefficient.
///
/// Variables are 0-based; monomials are stored as index sequences.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MagnusSeries<T> {
    m: usize,
    degree_cap: usize,
    reduced: bool,
    coeffs: BTreeMap<Vec<u8>, T>,
}

fn has_repeat(word: &[u8]) -> bool {
    let mut seen = 0u128;
    for &i in word {
        let bit = 1u128 << i;
        if seen & bit != 0 {
            return true;
        }
        seen |= bit;
    }
    false
}

impl<T: Scalar> MagnusSeries<T> {
    pub fn one(m: usize, degree_cap: usize, reduced: bool) -> Self {
        assert!(m <= 128, "at most 128 variables");
        let mut coeffs = BTreeMap::new();
        coeffs.insert(Vec::new(), T::one());
        MagnusSeries { m, degree_cap, reduced, coeffs }
    }

    /// Image of `x_i` (`inverse = false`) or `x_i^{-1}`.
    pub fn generator(m: usize, degree_cap: usize, reduced: bool, i: usize, inverse: bool) -> Self {
        assert!(i < m);
        let mut s = Self::one(m, degree_cap, reduced);
        let top = if !inverse || reduced { degree_cap.min(1) } else { degree_cap };
        for n in 1..=top {
            let c = if inverse && n % 2 == 1 { -T::one() } else { T::one() };
            s.coeffs.insert(vec![i as u8; n], c);
        }
        s
    }

    pub fn variables(&self) -> usize {
        self.m
    }

    pub fn degree_cap(&self) -> usize {
        self.degree_cap
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// Coefficient of `X_{i_1} ... X_{i_k}` (0-based indices).
    pub fn coefficient(&self, monomial: &[usize]) -> T {
        let key: Vec<u8> = monomial.iter().map(|&i| i as u8).collect();
        self.coeffs.get(&key).cloned().unwrap_or_else(T::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u8], &T)> {
        self.coeffs.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&Vec::new()).is_some_and(|c| c.is_one())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(
            (self.m, self.degree_cap, self.reduced),
            (other.m, other.degree_cap, other.reduced),
            "series from different rings"
        );
        let mut out: BTreeMap<Vec<u8>, T> = BTreeMap::new();
        for (a, ca) in &self.coeffs {
            for (b, cb) in &other.coeffs {
                if a.len() + b.len() > self.degree_cap {
                    continue;
                }
                let mut key = Vec::with_capacity(a.len() + b.len());
                key.extend_from_slice(a);
                key.extend_from_slice(b);
                if self.reduced && has_repeat(&key) {
                    continue;
                }
                let v = ca.clone() * cb.clone();
                let slot = out.entry(key).or_insert_with(T::zero);
                *slot = slot.clone() + v;
            }
        }
        out.retain(|_, v| !v.is_zero());
        MagnusSeries { coeffs: out, ..*self }
    }
}

impl<T: fmt::Display> fmt::Debug for MagnusSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, v) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{v}")?;
            for i in k {
                write!(f, "X{}", i + 1)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Expands a word in `x_1..x_m` (letters `±1..±m`) with `x_i -> 1 + X_i`.
pub fn magnus_expand<T: Scalar>(w: &Word, m: usize, degree_cap: usize, reduced: bool) -> Result<MagnusSeries<T>> {
    let mut s = MagnusSeries::one(m, degree_cap, reduced);
    for &letter in w.letters() {
        let i = letter.unsigned_abs() as usize;
        if letter == 0 || i > m {
            return Err(Error::Letter { letter, m });
        }
        s = s.mul(&MagnusSeries::generator(m, degree_cap, reduced, i - 1, letter < 0));
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type Ser = MagnusSeries<BigInt>;

    #[test]
    fn inverse_generator_series() {
        let inv = Ser::generator(1, 4, false, 0, true);
        assert_eq!(inv.coefficient(&[0, 0, 0]), BigInt::from(-1));
        assert_eq!(inv.coefficient(&[0, 0, 0, 0]), BigInt::from(1));
        let x = Ser::generator(1, 4, false, 0, false);
        assert!(x.mul(&inv).is_one());
        let r = Ser::generator(2, 3, true, 1, true);
        assert_eq!(r.terms().count(), 2);
    }

    #[test]
    fn commutator_by_hand() {
        // (1+X1)(1+X2)(1-X1)(1-X2) in the reduced ring with two variables:
        // the degree-2 part is X1X2 - X2X1 and nothing else survives.
        let w = Word::from_letters(vec![1, 2, -1, -2]);
        let s: Ser = magnus_expand(&w, 2, 2, true).unwrap();
        assert_eq!(s.coefficient(&[]), BigInt::from(1));
        assert_eq!(s.coefficient(&[0]), BigInt::from(0));
        assert_eq!(s.coefficient(&[0, 1]), BigInt::from(1));
        assert_eq!(s.coefficient(&[1, 0]), BigInt::from(-1));
        assert_eq!(s.terms().count(), 3);
    }

    #[test]
    fn letter_out_of_range() {
        let w = Word::from_letters(vec![3]);
        assert!(matches!(magnus_expand::<BigInt>(&w, 2, 2, false), Err(Error::Letter { letter: 3, m: 2 })));
    }
}
