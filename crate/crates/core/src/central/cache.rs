use std::sync::OnceLock;

use num_traits::Zero;
use parking_lot::RwLock;

use crate::arith::{choose, ExactInteger};

/// Append-only tables of `c_n`, `C_n` and Motzkin numbers `M_n`, shared by
/// every recursive route as ground truth.
///
/// `c_n` is grown one step at a time from the factorial quotient
/// `(2n)! / (n!)^2`, i.e. `c_n = c_{n-1} (2n)(2n-1) / n^2`; `C_n` is
/// `c_n / (n + 1)`; `M_n` is the binomial sum over `C_k`.
#[derive(Default)]
pub struct SequenceCache {
    centrals: RwLock<Vec<ExactInteger>>,
    catalans: RwLock<Vec<ExactInteger>>,
    motzkins: RwLock<Vec<ExactInteger>>,
}

static SEQUENCES: OnceLock<SequenceCache> = OnceLock::new();

/// The process-wide cache.
pub fn sequences() -> &'static SequenceCache {
    SEQUENCES.get_or_init(SequenceCache::default)
}

impl SequenceCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Makes `c_0..=c_n` and `C_0..=C_n` available.
    pub fn ensure(&self, n: usize) {
        if self.centrals.read().len() > n && self.catalans.read().len() > n {
            return;
        }
        let mut centrals = self.centrals.write();
        if centrals.is_empty() {
            centrals.push(ExactInteger::from(1));
        }
        while centrals.len() <= n {
            let k = centrals.len();
            let next = &centrals[k - 1] * (2 * k) * (2 * k - 1) / (k * k);
            centrals.push(next);
        }
        let mut catalans = self.catalans.write();
        while catalans.len() <= n {
            let k = catalans.len();
            catalans.push(&centrals[k] / (k + 1));
        }
    }

    pub fn central(&self, n: usize) -> ExactInteger {
        if let Some(v) = self.centrals.read().get(n) {
            return v.clone();
        }
        self.ensure(n);
        self.centrals.read()[n].clone()
    }

    pub fn catalan(&self, n: usize) -> ExactInteger {
        if let Some(v) = self.catalans.read().get(n) {
            return v.clone();
        }
        self.ensure(n);
        self.catalans.read()[n].clone()
    }

    /// `C_n`, or 0 for negative `n` (convenient in congruence right-hand sides).
    pub fn catalan_or_zero(&self, n: i64) -> ExactInteger {
        if n < 0 {
            ExactInteger::zero()
        } else {
            self.catalan(n as usize)
        }
    }

    /// `M_n = sum_{k <= n/2} binom(n, 2k) C_k`.
    pub fn motzkin(&self, n: usize) -> ExactInteger {
        if let Some(v) = self.motzkins.read().get(n) {
            return v.clone();
        }
        self.ensure(n / 2);
        let mut motzkins = self.motzkins.write();
        while motzkins.len() <= n {
            let i = motzkins.len();
            let mut acc = ExactInteger::zero();
            for k in 0..=i / 2 {
                acc += choose(i as i64, 2 * k as i64) * self.catalan(k);
            }
            motzkins.push(acc);
        }
        motzkins[n].clone()
    }

    /// Number of cached central/Catalan entries.
    pub fn len(&self) -> usize {
        self.catalans.read().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `c_n = (n + 1) C_n` for every cached `n`, and the seeds are 1.
    pub fn invariants_hold(&self) -> bool {
        let centrals = self.centrals.read();
        let catalans = self.catalans.read();
        let seeds = centrals.first().map_or(true, |c| *c == ExactInteger::from(1))
            && catalans.first().map_or(true, |c| *c == ExactInteger::from(1))
            && self
                .motzkins
                .read()
                .first()
                .map_or(true, |c| *c == ExactInteger::from(1));
        seeds && catalans.iter().enumerate().all(|(n, cat)| centrals[n] == cat * (n + 1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    #[test]
    fn matches_closed_form() {
        let cache = SequenceCache::new();
        assert!(cache.is_empty());
        for n in (0..=300).step_by(7) {
            assert_eq!(cache.central(n), choose(2 * n as i64, n as i64));
        }
        assert_eq!(cache.catalan(16), int(35357670));
        assert_eq!(cache.motzkin(4), int(9));
        assert_eq!(cache.motzkin(0), int(1));
        assert!(cache.invariants_hold());
        assert_eq!(cache.catalan_or_zero(-1), int(0));
    }

    #[test]
    fn concurrent_fill() {
        use rayon::prelude::*;
        let cache = SequenceCache::new();
        let got: Vec<ExactInteger> = (0..400usize).into_par_iter().map(|n| cache.catalan(n)).collect();
        for (n, v) in got.iter().enumerate() {
            assert_eq!(*v, choose(2 * n as i64, n as i64) / (n + 1));
        }
        assert!(cache.invariants_hold());
    }
}
