use num_bigint::BigUint;
use num_traits::{One, Zero};

/// r-Stirling numbers of the second kind: partitions of `{1..n}` into `k`
/// blocks with `1..r` in distinct blocks.
///
/// `T(r,r) = 1`, `T(n,k) = 0` for `k < r`, `T(n+1,k) = k·T(n,k) + T(n,k-1)`.
pub fn r_stirling(n: u32, k: u32, r: u32) -> BigUint {
    if n < r || k < r || k > n {
        return BigUint::zero();
    }
    // row[j] holds T(m, r + j)
    let width = (k - r + 1) as usize;
    let mut row = vec![BigUint::zero(); width];
    row[0] = BigUint::one();
    for _ in r..n {
        let mut next = vec![BigUint::zero(); width];
        for j in 0..width {
            let blocks = r + j as u32;
            next[j] = &row[j] * blocks;
            if j > 0 {
                next[j] += &row[j - 1];
            }
        }
        row = next;
    }
    row[width - 1].clone()
}

/// Unsigned Stirling numbers of the first kind, `c(n+1,k) = n·c(n,k) + c(n,k-1)`.
pub fn stirling_first_unsigned(n: u32, k: u32) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let mut row = vec![BigUint::zero(); k as usize + 1];
    row[0] = BigUint::one();
    for m in 0..n {
        for j in (0..=k as usize).rev() {
            let carry = if j > 0 { row[j - 1].clone() } else { BigUint::zero() };
            row[j] = &row[j] * m + carry;
        }
    }
    row[k as usize].clone()
}
