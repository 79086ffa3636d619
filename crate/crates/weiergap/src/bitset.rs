//! Fixed-width bit vector used for semigroup membership bookkeeping.
//!
//! A membership map for genus `g` spans the window `[0, 2g]`, so widths stay
//! small; sum-closure checks reduce to OR-ing shifted copies of the word
//! array against itself.

/// Dense bit vector over `[0, width)` backed by 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub(crate) struct BitVector {
    words: Vec<u64>,
    width: usize,
}

const WORD_BITS: usize = 64;

impl BitVector {
    /// All-zero vector of the given width.
    pub fn zero(width: usize) -> Self {
        BitVector {
            words: vec![0; width.div_ceil(WORD_BITS)],
            width,
        }
    }

    /// Vector with every bit in `[0, width)` set.
    pub fn all_set(width: usize) -> Self {
        let mut v = Self::zero(width);
        for w in &mut v.words {
            *w = u64::MAX;
        }
        v.trim_tail();
        v
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn set(&mut self, bit: usize) {
        debug_assert!(bit < self.width);
        self.words[bit / WORD_BITS] |= 1u64 << (bit % WORD_BITS);
    }

    pub fn clear(&mut self, bit: usize) {
        debug_assert!(bit < self.width);
        self.words[bit / WORD_BITS] &= !(1u64 << (bit % WORD_BITS));
    }

    pub fn test(&self, bit: usize) -> bool {
        if bit >= self.width {
            return false;
        }
        self.words[bit / WORD_BITS] >> (bit % WORD_BITS) & 1 == 1
    }

    /// Positions of set bits, ascending.
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(idx, &word)| {
            let base = idx * WORD_BITS;
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(base + bit)
            })
        })
    }

    pub fn first_one(&self) -> Option<usize> {
        for (idx, &word) in self.words.iter().enumerate() {
            if word != 0 {
                return Some(idx * WORD_BITS + word.trailing_zeros() as usize);
            }
        }
        None
    }

    /// `self |= other << shift`, truncated to this vector's width.
    pub fn or_shifted(&mut self, other: &BitVector, shift: usize) {
        let word_shift = shift / WORD_BITS;
        let bit_shift = shift % WORD_BITS;
        let n = self.words.len();
        for (i, &src) in other.words.iter().enumerate() {
            if src == 0 {
                continue;
            }
            let lo = i + word_shift;
            if lo < n {
                self.words[lo] |= src << bit_shift;
            }
            if bit_shift != 0 {
                let hi = lo + 1;
                if hi < n {
                    self.words[hi] |= src >> (WORD_BITS - bit_shift);
                }
            }
        }
        self.trim_tail();
    }

    /// Bits set in `self` but not in `other` (widths must match).
    pub fn and_not(&self, other: &BitVector) -> BitVector {
        debug_assert_eq!(self.width, other.width);
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & !b)
            .collect();
        BitVector {
            words,
            width: self.width,
        }
    }

    pub fn intersect(&self, other: &BitVector) -> BitVector {
        debug_assert_eq!(self.width, other.width);
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & b)
            .collect();
        BitVector {
            words,
            width: self.width,
        }
    }

    fn trim_tail(&mut self) {
        let tail = self.width % WORD_BITS;
        if tail != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
    }
}

impl std::fmt::Debug for BitVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BitVector[{}]{{", self.width)?;
        let mut first = true;
        for bit in self.iter_ones() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{bit}")?;
            first = false;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_test_clear() {
        let mut v = BitVector::zero(13);
        assert!(!v.test(5));
        v.set(5);
        v.set(0);
        v.set(12);
        assert!(v.test(0) && v.test(5) && v.test(12));
        assert_eq!(v.iter_ones().collect::<Vec<_>>(), vec![0, 5, 12]);
        v.clear(5);
        assert!(!v.test(5));
        assert_eq!(v.iter_ones().count(), 2);
        assert!(!v.test(100));
    }

    #[test]
    fn all_set_respects_width() {
        let v = BitVector::all_set(70);
        assert_eq!(v.iter_ones().count(), 70);
        assert_eq!(v.first_one(), Some(0));
        assert!(v.test(69));
        assert!(!v.test(70));
    }

    #[test]
    fn or_shifted_crosses_word_boundary() {
        let mut acc = BitVector::zero(140);
        let mut src = BitVector::zero(140);
        src.set(2);
        src.set(63);
        src.set(70);
        acc.or_shifted(&src, 3);
        assert_eq!(acc.iter_ones().collect::<Vec<_>>(), vec![5, 66, 73]);
        // shifting past the width drops bits instead of wrapping
        acc.or_shifted(&src, 135);
        assert_eq!(acc.iter_ones().collect::<Vec<_>>(), vec![5, 66, 73, 137]);
    }

    #[test]
    fn and_not_and_intersect() {
        let mut a = BitVector::zero(10);
        let mut b = BitVector::zero(10);
        for bit in [1, 3, 5, 7] {
            a.set(bit);
        }
        for bit in [3, 7, 9] {
            b.set(bit);
        }
        assert_eq!(a.and_not(&b).iter_ones().collect::<Vec<_>>(), vec![1, 5]);
        assert_eq!(a.intersect(&b).iter_ones().collect::<Vec<_>>(), vec![3, 7]);
    }
}
