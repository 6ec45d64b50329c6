//! Freely reduced words in a free group on `x_1..x_m`.

use std::fmt;

/// Letters are `±i` for `x_i^{±1}`, `i >= 1`. Kept freely reduced.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<i64>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn generator(i: usize, inverse: bool) -> Self {
        let g = i as i64 + 1;
        Word(vec![if inverse { -g } else { g }])
    }

    /// Freely reduces the given letters.
    pub fn from_letters(letters: Vec<i64>) -> Self {
        let mut w = Word::identity();
        for l in letters {
            w.push(l);
        }
        w
    }

    fn push(&mut self, letter: i64) {
        if self.0.last() == Some(&-letter) {
            self.0.pop();
        } else {
            self.0.push(letter);
        }
    }

    pub fn letters(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for &l in &other.0 {
            w.push(l);
        }
        w
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| -l).collect())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            if *l < 0 {
                write!(f, "x{}^-1", -l)?;
            } else {
                write!(f, "x{l}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_reduction() {
        let w = Word::from_letters(vec![1, 2, -2, -1, 3]);
        assert_eq!(w.letters(), &[3]);
        let a = Word::from_letters(vec![1, 2]);
        assert!(a.mul(&a.inverse()).is_empty());
        assert_eq!(format!("{:?}", Word::from_letters(vec![1, -2])), "x1 x2^-1");
    }
}
