//! Helpers for `u64` vertex sets.

/// Iterates the indices of the set bits, lowest first.
pub(crate) fn ones(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

/// Mask with the lowest `n` bits set.
#[inline]
pub(crate) const fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) fn count(mask: u64) -> usize {
    mask.count_ones() as usize
}

/// All `k`-subsets of the low `n` bits in increasing numeric order
/// (Gosper's hack).
pub(crate) fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit = low_bits(n);
    let mut next = if k > n { None } else { Some(low_bits(k)) };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur.wrapping_add(c);
            if r == 0 {
                None
            } else {
                let succ = (((r ^ cur) >> 2) / c) | r;
                (succ & !limit == 0).then_some(succ)
            }
        };
        Some(cur)
    })
}
