use std::fmt;

use crate::error::{Error, Result};
use crate::words::cox::CoxWord;

/// A freely reduced word in the free group `F_m`.
///
/// A letter `k > 0` is the generator `x_k`, and `-k` its inverse. The freely
/// reduced sequence is the unique normal form. Rank 0 is allowed and holds
/// only the empty word.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord {
    rank: usize,
    letters: Vec<isize>,
}

impl FreeWord {
    pub fn identity(rank: usize) -> Self {
        FreeWord {
            rank,
            letters: Vec::new(),
        }
    }

    /// The generator `x_i`.
    pub fn generator(rank: usize, index: usize) -> Result<Self> {
        Self::reduce(rank, [index as isize])
    }

    /// Freely reduces a raw signed letter sequence.
    pub fn reduce<I>(rank: usize, raw: I) -> Result<Self>
    where
        I: IntoIterator<Item = isize>,
    {
        let mut letters: Vec<isize> = Vec::new();
        for x in raw {
            let idx = x.unsigned_abs();
            if x == 0 || idx > rank {
                return Err(Error::IndexOutOfRange {
                    index: idx,
                    rank,
                });
            }
            if letters.last() == Some(&-x) {
                letters.pop();
            } else {
                letters.push(x);
            }
        }
        Ok(FreeWord { rank, letters })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[isize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    fn check_rank(&self, other: &FreeWord) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                found: other.rank,
            });
        }
        Ok(())
    }

    pub fn mul(&self, other: &FreeWord) -> Result<FreeWord> {
        self.check_rank(other)?;
        let mut letters = self.letters.clone();
        for &x in &other.letters {
            if letters.last() == Some(&-x) {
                letters.pop();
            } else {
                letters.push(x);
            }
        }
        Ok(FreeWord {
            rank: self.rank,
            letters,
        })
    }

    pub fn inv(&self) -> FreeWord {
        FreeWord {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|x| -x).collect(),
        }
    }

    /// Exponent-sum vector, entry `i` counting signed occurrences of `x_i`.
    pub fn abelianize(&self) -> ExpVector {
        let mut entries = vec![0i64; self.rank];
        for &x in &self.letters {
            let idx = x.unsigned_abs() - 1;
            entries[idx] += x.signum() as i64;
        }
        ExpVector { entries }
    }

    /// Substitutes `x_i = s_i s_{i+1}` and reduces, producing a word of rank
    /// `m + 1`. Inverse of [`CoxWord::to_free_basis`] on its image.
    pub fn to_cox_word(&self) -> CoxWord {
        let mut raw: Vec<usize> = Vec::with_capacity(2 * self.letters.len());
        for &x in &self.letters {
            let i = x.unsigned_abs();
            if x > 0 {
                raw.push(i);
                raw.push(i + 1);
            } else {
                raw.push(i + 1);
                raw.push(i);
            }
        }
        CoxWord::reduce(self.rank + 1, raw).expect("letters are within 1..=rank+1")
    }
}

impl fmt::Display for FreeWord {
    /// Text format: whitespace-separated `x<k>` / `x<k>^-1` tokens, `e` for
    /// the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        for (pos, x) in self.letters.iter().enumerate() {
            if pos > 0 {
                write!(f, " ")?;
            }
            if *x > 0 {
                write!(f, "x{x}")?;
            } else {
                write!(f, "x{}^-1", -x)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeWord(m={}, \"{}\")", self.rank, self)
    }
}

/// An integer exponent vector, the abelianized image of a free word.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExpVector {
    entries: Vec<i64>,
}

impl ExpVector {
    pub fn zero(dimension: usize) -> Self {
        ExpVector {
            entries: vec![0; dimension],
        }
    }

    pub fn from_entries(entries: Vec<i64>) -> Self {
        ExpVector { entries }
    }

    pub fn dimension(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn add(&self, other: &ExpVector) -> Result<ExpVector> {
        if self.entries.len() != other.entries.len() {
            return Err(Error::DimensionMismatch {
                expected: self.entries.len(),
                found: other.entries.len(),
            });
        }
        Ok(ExpVector {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }
}

impl fmt::Debug for ExpVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExpVector({:?})", self.entries)
    }
}

impl fmt::Display for ExpVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (pos, v) in self.entries.iter().enumerate() {
            if pos > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fw(rank: usize, raw: &[isize]) -> FreeWord {
        FreeWord::reduce(rank, raw.iter().copied()).unwrap()
    }

    #[test]
    fn reduce_cancels_inverse_pair() {
        assert!(fw(2, &[1, -1]).is_identity());
        assert_eq!(fw(2, &[1, 2, -2, 1, 2]).letters(), &[1, 1, 2]);
    }

    #[test]
    fn reduce_rejects_bad_index() {
        assert!(FreeWord::reduce(2, [3]).is_err());
        assert!(FreeWord::reduce(2, [0]).is_err());
    }

    #[test]
    fn mul_and_inv() {
        assert_eq!(fw(2, &[1, 2]).mul(&fw(2, &[-2])).unwrap(), fw(2, &[1]));
        assert_eq!(fw(2, &[1, -2]).inv(), fw(2, &[2, -1]));
        let u = fw(3, &[1, -2, 3, 3]);
        assert!(u.mul(&u.inv()).unwrap().is_identity());
    }

    #[test]
    fn abelianize_counts_exponents() {
        assert_eq!(fw(2, &[1, 2, 1]).abelianize().entries(), &[2, 1]);
        assert_eq!(FreeWord::identity(2).abelianize().entries(), &[0, 0]);
        assert_eq!(fw(3, &[1, -2]).abelianize().entries(), &[1, -1, 0]);
    }

    #[test]
    fn to_cox_word_examples() {
        assert_eq!(fw(2, &[1]).to_cox_word().letters(), &[1, 2]);
        assert_eq!(fw(2, &[1, 2]).to_cox_word().letters(), &[1, 3]);
        assert!(FreeWord::identity(2).to_cox_word().is_identity());
    }

    #[test]
    fn round_trip_through_cox() {
        for raw in [vec![1, 2, -1], vec![2, 2, 1], vec![-1, -2, -1], vec![1]] {
            let w = fw(2, &raw);
            assert_eq!(w.to_cox_word().to_free_basis().unwrap(), w);
        }
    }

    #[test]
    fn display_format() {
        assert_eq!(fw(2, &[1, -2]).to_string(), "x1 x2^-1");
        assert_eq!(FreeWord::identity(2).to_string(), "e");
    }
}
