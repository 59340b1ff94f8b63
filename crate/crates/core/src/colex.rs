//! Colexicographic ranking of k-subsets and the packed bit vectors indexed by it.
//!
//! The colex rank of a sorted subset `a_1 < a_2 < ... < a_k` is
//! `C(a_1, 1) + C(a_2, 2) + ... + C(a_k, k)`. All k-subsets of `0..n` occupy
//! exactly the ranks `0..C(n, k)`, and the subsets of `0..m` form a prefix of
//! the subsets of `0..n` for `m <= n`.

use std::cmp::Ordering;

/// Binomial coefficient `C(n, k)`, saturating at `u64::MAX`.
pub fn binom(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

#[inline]
pub(crate) fn binom_usize(n: usize, k: usize) -> usize {
    binom(n, k) as usize
}

/// Colex rank of a strictly increasing subset.
pub fn rank(subset: &[usize]) -> usize {
    debug_assert!(subset.windows(2).all(|w| w[0] < w[1]));
    subset
        .iter()
        .enumerate()
        .map(|(j, &a)| binom_usize(a, j + 1))
        .sum()
}

/// Rank of the triple `a < b < c`.
#[inline(always)]
pub fn rank3(a: usize, b: usize, c: usize) -> usize {
    debug_assert!(a < b && b < c);
    c * (c - 1) * (c - 2) / 6 + b * (b - 1) / 2 + a
}

/// Rank of the pair `a < b`.
#[inline(always)]
pub fn rank2(a: usize, b: usize) -> usize {
    debug_assert!(a < b);
    b * (b - 1) / 2 + a
}

/// Inverse of [`rank`]: the `k`-subset with the given colex rank, ascending.
pub fn unrank(mut idx: usize, k: usize) -> Vec<usize> {
    let mut out = vec![0; k];
    for j in (1..=k).rev() {
        // largest a with C(a, j) <= idx
        let mut a = j - 1;
        while binom_usize(a + 1, j) <= idx {
            a += 1;
        }
        out[j - 1] = a;
        idx -= binom_usize(a, j);
    }
    out
}

/// Iterator over the `k`-subsets of `0..n` in ascending colex order.
#[derive(Debug, Clone)]
pub struct ColexSubsets {
    n: usize,
    current: Vec<usize>,
    done: bool,
}

impl ColexSubsets {
    pub fn new(n: usize, k: usize) -> Self {
        ColexSubsets {
            n,
            current: (0..k).collect(),
            done: k > n,
        }
    }
}

impl Iterator for ColexSubsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let k = self.current.len();
        // bump the lowest position that has room, reset everything below it
        let mut j = 0;
        loop {
            if j == k {
                self.done = true;
                break;
            }
            let limit = if j + 1 < k {
                self.current[j + 1]
            } else {
                self.n
            };
            if self.current[j] + 1 < limit {
                self.current[j] += 1;
                for (i, slot) in self.current.iter_mut().enumerate().take(j) {
                    *slot = i;
                }
                break;
            }
            j += 1;
        }
        Some(out)
    }
}

/// Calls `f` on every `k`-subset of `items` (given in ascending order), in colex order
/// of positions, without allocating per subset.
pub(crate) fn for_each_subset_of<F: FnMut(&[usize])>(items: &[usize], k: usize, mut f: F) {
    let mut buf = Vec::with_capacity(k);
    for idx in ColexSubsets::new(items.len(), k) {
        buf.clear();
        buf.extend(idx.iter().map(|&i| items[i]));
        f(&buf);
    }
}

/// A fixed-length bit vector packed into 64-bit words, bit `i` in word `i / 64`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut v = BitVec {
            len,
            words: vec![u64::MAX; len.div_ceil(64)],
        };
        v.clear_tail();
        v
    }

    fn clear_tail(&mut self) {
        let rem = self.len % 64;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline(always)]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let bit = 1u64 << (i % 64);
        if value {
            self.words[i / 64] |= bit;
        } else {
            self.words[i / 64] &= !bit;
        }
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn negated(&self) -> BitVec {
        let mut v = BitVec {
            len: self.len,
            words: self.words.iter().map(|w| !w).collect(),
        };
        v.clear_tail();
        v
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + t)
                }
            })
        })
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Lexicographic order reading bit 0 first, with an unset bit before a set one.
    pub fn lex_cmp(&self, other: &BitVec) -> Ordering {
        for (a, b) in self.words.iter().zip(&other.words) {
            let diff = a ^ b;
            if diff != 0 {
                let low = diff & diff.wrapping_neg();
                return if a & low == 0 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                };
            }
        }
        self.len.cmp(&other.len)
    }
}
