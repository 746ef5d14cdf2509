use std::fmt;

use crate::error::{Error, Result};
use crate::words::free::FreeWord;

/// A reduced word in the universal Coxeter group `W_n`, the free product of
/// `n` copies of the cyclic group of order two.
///
/// Letters are 1-based generator indices. Since the only relators are the
/// squares of the generators, deleting equal adjacent letters yields a unique
/// normal form, so structural equality decides equality of group elements.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoxWord {
    rank: usize,
    letters: Vec<usize>,
}

impl CoxWord {
    /// The identity element of `W_n`.
    pub fn identity(rank: usize) -> Result<Self> {
        if rank < 1 {
            return Err(Error::RankTooSmall { rank, min: 1 });
        }
        Ok(CoxWord {
            rank,
            letters: Vec::new(),
        })
    }

    /// The generator `s_i`.
    pub fn generator(rank: usize, index: usize) -> Result<Self> {
        Self::reduce(rank, [index])
    }

    /// Reduces a raw letter sequence to normal form by repeatedly deleting
    /// equal adjacent pairs.
    pub fn reduce<I>(rank: usize, raw: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        if rank < 1 {
            return Err(Error::RankTooSmall { rank, min: 1 });
        }
        let mut letters: Vec<usize> = Vec::new();
        for x in raw {
            if x < 1 || x > rank {
                return Err(Error::IndexOutOfRange { index: x, rank });
            }
            if letters.last() == Some(&x) {
                letters.pop();
            } else {
                letters.push(x);
            }
        }
        Ok(CoxWord { rank, letters })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[usize] {
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

    fn check_rank(&self, other: &CoxWord) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                found: other.rank,
            });
        }
        Ok(())
    }

    /// Group multiplication: concatenate and reduce.
    pub fn mul(&self, other: &CoxWord) -> Result<CoxWord> {
        self.check_rank(other)?;
        let mut letters = self.letters.clone();
        for &x in &other.letters {
            if letters.last() == Some(&x) {
                letters.pop();
            } else {
                letters.push(x);
            }
        }
        Ok(CoxWord {
            rank: self.rank,
            letters,
        })
    }

    /// Group inverse. Every generator is an involution, so this is letter
    /// reversal.
    pub fn inv(&self) -> CoxWord {
        CoxWord {
            rank: self.rank,
            letters: self.letters.iter().rev().copied().collect(),
        }
    }

    /// The sign homomorphism value: `(-1)^len`, i.e. each generator maps
    /// to `-1`.
    pub fn sign(&self) -> i8 {
        if self.letters.len() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Writes `self = c * core * c^-1` with `core` cyclically reduced,
    /// stripping equal first/last letters greedily. Returns `(core, c)`.
    pub fn cyclic_reduce(&self) -> (CoxWord, CoxWord) {
        let mut lo = 0;
        let mut hi = self.letters.len();
        let mut conj = Vec::new();
        while hi - lo >= 2 && self.letters[lo] == self.letters[hi - 1] {
            conj.push(self.letters[lo]);
            lo += 1;
            hi -= 1;
        }
        let core = CoxWord {
            rank: self.rank,
            letters: self.letters[lo..hi].to_vec(),
        };
        let conjugator = CoxWord {
            rank: self.rank,
            letters: conj,
        };
        (core, conjugator)
    }

    /// If `self` is a nontrivial involution, returns the index `i` of the
    /// unique generator it is conjugate to. Returns `None` otherwise.
    ///
    /// In the free product of copies of Z2, an element has order two exactly
    /// when its cyclic core is a single letter.
    pub fn involution_class(&self) -> Option<usize> {
        let (core, _) = self.cyclic_reduce();
        if core.letters.len() == 1 {
            Some(core.letters[0])
        } else {
            None
        }
    }

    /// Rewrites an even-length word over the kernel basis `x_i = s_i s_{i+1}`,
    /// producing a freely reduced word of rank `n - 1`.
    ///
    /// Consecutive letter pairs `(a, b)` telescope: `a < b` gives
    /// `x_a x_{a+1} .. x_{b-1}`, and `a > b` gives the inverse run.
    pub fn to_free_basis(&self) -> Result<FreeWord> {
        if self.letters.len() % 2 != 0 {
            return Err(Error::OddWord {
                len: self.letters.len(),
            });
        }
        let mut raw: Vec<isize> = Vec::new();
        for pair in self.letters.chunks(2) {
            let (a, b) = (pair[0], pair[1]);
            if a < b {
                for t in a..b {
                    raw.push(t as isize);
                }
            } else {
                for t in (b..a).rev() {
                    raw.push(-(t as isize));
                }
            }
        }
        FreeWord::reduce(self.rank - 1, raw)
    }

    /// Deletes every letter with index `>= 3` and reduces, yielding a word of
    /// rank 2. This is the projection onto the subgroup generated by the
    /// first two generators.
    pub fn project_to_w2(&self) -> Result<CoxWord> {
        if self.rank < 2 {
            return Err(Error::RankTooSmall {
                rank: self.rank,
                min: 2,
            });
        }
        CoxWord::reduce(2, self.letters.iter().copied().filter(|&x| x <= 2))
    }
}

impl fmt::Display for CoxWord {
    /// Text format: whitespace-separated `s<k>` tokens, `e` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        for (pos, x) in self.letters.iter().enumerate() {
            if pos > 0 {
                write!(f, " ")?;
            }
            write!(f, "s{x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CoxWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoxWord(n={}, \"{}\")", self.rank, self)
    }
}
