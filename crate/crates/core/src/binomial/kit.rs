//! Process-wide memo tables for factorials, double factorials and unsigned
//! Stirling numbers of the first kind. Tables only grow; readers never see
//! a partially written row.

use std::sync::OnceLock;

use parking_lot::RwLock;

use crate::arith::ExactInteger;

#[derive(Default)]
pub struct FactorialKit {
    factorials: RwLock<Vec<ExactInteger>>,
    // Index i holds (i - 1)!!, so index 0 is (-1)!!.
    double_factorials: RwLock<Vec<ExactInteger>>,
    stirling_rows: RwLock<Vec<Vec<ExactInteger>>>,
}

static KIT: OnceLock<FactorialKit> = OnceLock::new();
static STIRLING_CHECKED: OnceLock<()> = OnceLock::new();

/// The shared instance.
pub fn kit() -> &'static FactorialKit {
    KIT.get_or_init(FactorialKit::default)
}

impl FactorialKit {
    pub fn factorial(&self, n: u64) -> ExactInteger {
        let n = n as usize;
        if let Some(v) = self.factorials.read().get(n) {
            return v.clone();
        }
        let mut table = self.factorials.write();
        if table.is_empty() {
            table.push(ExactInteger::from(1));
        }
        while table.len() <= n {
            let k = table.len();
            let next = &table[k - 1] * k;
            table.push(next);
        }
        table[n].clone()
    }

    /// `n!!` for `n >= -1`, with `(-1)!! = 0!! = 1`.
    pub fn double_factorial(&self, n: i64) -> ExactInteger {
        assert!(n >= -1, "double factorial of {n}");
        let idx = (n + 1) as usize;
        if let Some(v) = self.double_factorials.read().get(idx) {
            return v.clone();
        }
        let mut table = self.double_factorials.write();
        while table.len() <= idx {
            let i = table.len();
            let value = if i < 2 {
                ExactInteger::from(1)
            } else {
                // i holds (i - 1)!! = (i - 1) * (i - 3)!!
                &table[i - 2] * (i - 1)
            };
            table.push(value);
        }
        table[idx].clone()
    }

    /// Falling factorial `(n)_j = n (n - 1) ... (n - j + 1)`.
    pub fn falling(&self, n: i64, j: u64) -> ExactInteger {
        let mut acc = ExactInteger::from(1);
        for k in 0..j as i64 {
            acc *= n - k;
        }
        acc
    }

    /// Unsigned Stirling number of the first kind: permutations of `n`
    /// elements with `k` cycles.
    pub fn stirling_first_unsigned(&self, n: u64, k: u64) -> ExactInteger {
        let (n, k) = (n as usize, k as usize);
        if k > n {
            return ExactInteger::from(0);
        }
        if let Some(row) = self.stirling_rows.read().get(n) {
            return row[k].clone();
        }
        let mut rows = self.stirling_rows.write();
        if rows.is_empty() {
            rows.push(vec![ExactInteger::from(1)]);
        }
        while rows.len() <= n {
            let i = rows.len();
            let prev = &rows[i - 1];
            let mut row = vec![ExactInteger::from(0); i + 1];
            for (c, slot) in row.iter_mut().enumerate().skip(1) {
                // s(i, c) = s(i-1, c-1) + (i-1) s(i-1, c)
                let mut v = prev[c - 1].clone();
                if c < i {
                    v += &prev[c] * (i - 1);
                }
                *slot = v;
            }
            rows.push(row);
        }
        rows[n][k].clone()
    }

    /// Checks `(q)_j = sum_i (-1)^{j-i} s(j, i) q^i` for `j, q <= 12`.
    pub fn stirling_convention_holds(&self) -> bool {
        (0..=12u64).all(|j| {
            (0..=12i64).all(|q| {
                let mut acc = ExactInteger::from(0);
                for i in 0..=j {
                    let term = self.stirling_first_unsigned(j, i) * ExactInteger::from(q).pow(i as u32);
                    if (j - i) % 2 == 0 {
                        acc += term;
                    } else {
                        acc -= term;
                    }
                }
                acc == self.falling(q, j)
            })
        })
    }

    /// Panics once, on first use, if the Stirling convention is inconsistent.
    pub(crate) fn ensure_stirling_convention(&self) {
        STIRLING_CHECKED.get_or_init(|| {
            assert!(
                self.stirling_convention_holds(),
                "unsigned Stirling table disagrees with the falling-factorial expansion"
            );
        });
    }
}
