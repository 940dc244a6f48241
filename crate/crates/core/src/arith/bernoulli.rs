use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use spin::Mutex;

use super::rat::Rat;

static CACHE: Mutex<Vec<Rat>> = Mutex::new(Vec::new());

/// Bernoulli number `B_m` with `B_1 = -1/2`, from
/// `sum_{j=0}^{m} C(m+1, j) B_j = 0`. Values are memoized.
pub fn bernoulli(m: usize) -> Rat {
    let mut cache = CACHE.lock();
    while cache.len() <= m {
        let k = cache.len();
        let next = if k == 0 {
            Rat::one()
        } else if k > 1 && k % 2 == 1 {
            Rat::zero()
        } else {
            // binom runs over C(k+1, j) for j = 0..k-1
            let mut binom = BigInt::one();
            let mut acc = Rat::zero();
            for (j, b) in cache.iter().enumerate() {
                if !b.is_zero() {
                    acc += b * Rat::from_integer(binom.clone());
                }
                binom = binom * BigInt::from(k + 1 - j) / BigInt::from(j + 1);
            }
            -acc / Rat::from_integer(BigInt::from(k + 1))
        };
        cache.push(next);
    }
    cache[m].clone()
}
