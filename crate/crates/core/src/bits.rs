//! Helpers for multi-word bitsets stored as `&[u64]`.

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

#[inline]
pub(crate) fn test(set: &[u64], i: usize) -> bool {
    (set[i / 64] >> (i % 64)) & 1 == 1
}

#[inline]
pub(crate) fn set(set: &mut [u64], i: usize) {
    set[i / 64] |= 1u64 << (i % 64);
}

#[inline]
pub(crate) fn clear(set: &mut [u64], i: usize) {
    set[i / 64] &= !(1u64 << (i % 64));
}

#[inline]
pub(crate) fn count(set: &[u64]) -> usize {
    set.iter().map(|w| w.count_ones() as usize).sum()
}

#[inline]
pub(crate) fn is_empty(set: &[u64]) -> bool {
    set.iter().all(|&w| w == 0)
}

pub(crate) fn and_into(dst: &mut [u64], a: &[u64], b: &[u64]) {
    for ((d, x), y) in dst.iter_mut().zip(a).zip(b) {
        *d = x & y;
    }
}

/// Set bits `0..n`.
pub(crate) fn full(n: usize) -> Vec<u64> {
    let mut v = vec![u64::MAX; words_for(n)];
    if n % 64 != 0 {
        if let Some(last) = v.last_mut() {
            *last = (1u64 << (n % 64)) - 1;
        }
    }
    v
}

pub(crate) struct Ones<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let tz = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * 64 + tz);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

pub(crate) fn ones(words: &[u64]) -> Ones<'_> {
    Ones {
        words,
        idx: 0,
        cur: words.first().copied().unwrap_or(0),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ones_crosses_word_boundaries() {
        let mut s = vec![0u64; 3];
        for i in [0, 63, 64, 130] {
            set(&mut s, i);
        }
        assert_eq!(ones(&s).collect::<Vec<_>>(), vec![0, 63, 64, 130]);
        assert_eq!(count(&s), 4);
        clear(&mut s, 64);
        assert!(!test(&s, 64));
        assert_eq!(full(65).len(), 2);
        assert_eq!(count(&full(65)), 65);
    }
}
