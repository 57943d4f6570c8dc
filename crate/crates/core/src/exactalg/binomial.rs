use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Binomial coefficient with the convention `C(n, r) = 0` whenever `r < 0` or `r > n`.
///
/// Negative `n` also yields zero; none of the callers need the extended
/// (upper-negation) definition.
pub fn binom(n: i64, r: i64) -> BigInt {
    if r < 0 || n < 0 || r > n {
        return BigInt::zero();
    }
    let r = r.min(n - r);
    let mut acc = BigInt::one();
    for i in 0..r {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn binom_i64(n: i64, r: i64) -> i64 {
    i64::try_from(binom(n, r)).expect("binomial coefficient overflows i64")
}
