//! Square bit matrices for relations over a fixed universe.

use sha2::{Digest, Sha256};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BitMatrix {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        BitMatrix {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = BitMatrix::new(n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        let w = &mut self.bits[i * self.words + j / 64];
        if v {
            *w |= 1 << (j % 64);
        } else {
            *w &= !(1 << (j % 64));
        }
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words..(i + 1) * self.words]
    }

    /// Indices `j` with `self[i][j]` set.
    pub fn row_ones(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(i).iter().enumerate().flat_map(|(w, &word)| {
            let mut word = word;
            std::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let b = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(w * 64 + b)
            })
        })
    }

    fn or_row_from(&mut self, dst: usize, src: usize) {
        let w = self.words;
        if dst == src {
            return;
        }
        let (d, s) = if dst < src {
            let (lo, hi) = self.bits.split_at_mut(src * w);
            (&mut lo[dst * w..dst * w + w], &hi[..w])
        } else {
            let (lo, hi) = self.bits.split_at_mut(dst * w);
            (&mut hi[..w], &lo[src * w..src * w + w])
        };
        for (a, b) in d.iter_mut().zip(s) {
            *a |= *b;
        }
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Warshall closure with word-parallel row unions.
    pub fn transitive_closure(&self) -> BitMatrix {
        let mut m = self.clone();
        for k in 0..self.n {
            for i in 0..self.n {
                if m.get(i, k) {
                    m.or_row_from(i, k);
                }
            }
        }
        m
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.n).all(|i| self.get(i, i))
    }

    pub fn is_transitive(&self) -> bool {
        self.transitive_closure() == *self
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.n).all(|i| (i + 1..self.n).all(|j| !(self.get(i, j) && self.get(j, i))))
    }

    /// Covering pairs of a partial order: `i ≠ j`, `i R j`, and no `k`
    /// strictly between. Input must be reflexive, transitive, antisymmetric.
    pub fn transitive_reduction(&self) -> BitMatrix {
        let mut out = BitMatrix::new(self.n);
        for i in 0..self.n {
            for j in self.row_ones(i) {
                if i == j {
                    continue;
                }
                let between = self.row_ones(i).any(|k| k != i && k != j && self.get(k, j));
                if !between {
                    out.set(i, j, true);
                }
            }
        }
        out
    }

    /// `self ∧ ¬other`, entrywise.
    pub fn and_not(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (a, b) in out.bits.iter_mut().zip(&other.bits) {
            *a &= !b;
        }
        out
    }

    /// Row-major bit string, entry `(i, j)` at position `i * n + j`, most
    /// significant bit of each byte first, zero-padded to a whole byte.
    pub fn to_bytes(&self) -> Vec<u8> {
        let total = self.n * self.n;
        let mut out = vec![0u8; total.div_ceil(8)];
        for i in 0..self.n {
            for j in self.row_ones(i) {
                let k = i * self.n + j;
                out[k / 8] |= 0x80 >> (k % 8);
            }
        }
        out
    }

    pub fn from_bytes(n: usize, bytes: &[u8]) -> Option<BitMatrix> {
        if bytes.len() != (n * n).div_ceil(8) {
            return None;
        }
        let mut m = BitMatrix::new(n);
        for i in 0..n {
            for j in 0..n {
                let k = i * n + j;
                if bytes[k / 8] & (0x80 >> (k % 8)) != 0 {
                    m.set(i, j, true);
                }
            }
        }
        Some(m)
    }

    /// SHA-256 of [`BitMatrix::to_bytes`] prefixed with the dimension.
    pub fn digest(&self) -> [u8; 32] {
        let mut h = Sha256::new();
        h.update((self.n as u64).to_le_bytes());
        h.update(self.to_bytes());
        h.finalize().into()
    }
}
