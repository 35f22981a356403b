use std::fmt::Write as _;

use num_traits::Zero;

use super::krawtchouk_direct;
use crate::arith::{binomial, ExactInteger};

/// The `(n+1) x (n+1)` grid of `K_p^n(j)`, row `p`, column `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KrawtchoukTable {
    order: i64,
    values: Vec<Vec<ExactInteger>>,
}

/// Fills the table row by row from the defining sum.
pub fn build_table(n: i64) -> KrawtchoukTable {
    assert!(n >= 0, "table order must be nonnegative");
    let values = (0..=n)
        .map(|p| {
            (0..=n)
                .map(|j| krawtchouk_direct(n, p, j).expect("0 <= p <= n"))
                .collect()
        })
        .collect();
    KrawtchoukTable { order: n, values }
}

impl KrawtchoukTable {
    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn values(&self) -> &[Vec<ExactInteger>] {
        &self.values
    }

    pub fn get(&self, p: usize, j: usize) -> &ExactInteger {
        &self.values[p][j]
    }

    pub fn row_sum(&self, p: usize) -> ExactInteger {
        self.values[p].iter().sum()
    }

    pub fn column_sum(&self, j: usize) -> ExactInteger {
        self.values.iter().map(|row| &row[j]).sum()
    }

    /// Checks the structural invariants: first row all ones, second row
    /// `n - 2j`, first column `binom(n, p)`, vanishing column sums for
    /// `j >= 1` and vanishing row sums for odd `p`.
    pub fn invariant_violations(&self) -> Vec<String> {
        let n = self.order;
        let size = n as usize + 1;
        let mut out = Vec::new();
        for j in 0..size {
            if self.values[0][j] != ExactInteger::from(1) {
                out.push(format!("entry (0, {j}) != 1"));
            }
            if n >= 1 && self.values[1][j] != ExactInteger::from(n - 2 * j as i64) {
                out.push(format!("entry (1, {j}) != n - 2j"));
            }
            if j >= 1 && !self.column_sum(j).is_zero() {
                out.push(format!("column {j} does not sum to 0"));
            }
        }
        for p in 0..size {
            if self.values[p][0] != binomial(n, p as i64) {
                out.push(format!("entry ({p}, 0) != binom(n, p)"));
            }
            if p % 2 == 1 && !self.row_sum(p).is_zero() {
                out.push(format!("odd row {p} does not sum to 0"));
            }
        }
        out
    }

    /// Rows `p = 0..=n`, comma separated, no header, trailing newline.
    pub fn to_csv(&self) -> String {
        let mut s = String::new();
        for row in &self.values {
            let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            s.push_str(&line.join(","));
            s.push('\n');
        }
        s
    }

    /// `{"order":n,"values":[[...],...]}` with exact decimal entries.
    pub fn to_json(&self) -> String {
        let mut s = String::new();
        write!(s, "{{\"order\":{},\"values\":[", self.order).unwrap();
        for (i, row) in self.values.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            s.push('[');
            for (k, v) in row.iter().enumerate() {
                if k > 0 {
                    s.push(',');
                }
                write!(s, "{v}").unwrap();
            }
            s.push(']');
        }
        s.push_str("]}");
        s
    }
}

// Transcribed entry for entry from the published matrices K_1 ... K_8,
// including the K_6 row p = 5 entry at j = 4 exactly as printed.
const K1: [[i64; 2]; 2] = [[1, 1], [1, -1]];
const K2: [[i64; 3]; 3] = [[1, 1, 1], [2, 0, -2], [1, -1, 1]];
const K3: [[i64; 4]; 4] = [[1, 1, 1, 1], [3, 1, -1, -3], [3, -1, -1, 3], [1, -1, 1, -1]];
const K4: [[i64; 5]; 5] = [
    [1, 1, 1, 1, 1],
    [4, 2, 0, -2, -4],
    [6, 0, -2, 0, 6],
    [4, -2, 0, 2, -4],
    [1, -1, 1, -1, 1],
];
const K5: [[i64; 6]; 6] = [
    [1, 1, 1, 1, 1, 1],
    [5, 3, 1, -1, -3, -5],
    [10, 2, -2, -2, 2, 10],
    [10, -2, -2, 2, 2, -10],
    [5, -3, 1, 1, -3, 5],
    [1, -1, 1, -1, 1, -1],
];
const K6: [[i64; 7]; 7] = [
    [1, 1, 1, 1, 1, 1, 1],
    [6, 4, 2, 0, -2, -4, -6],
    [15, 5, -1, -3, -1, 5, 15],
    [20, 0, -4, 0, 4, 0, -20],
    [15, -5, -1, 3, -1, -5, 15],
    [6, -4, 2, 0, 2, 4, -6],
    [1, -1, 1, -1, 1, -1, 1],
];
const K7: [[i64; 8]; 8] = [
    [1, 1, 1, 1, 1, 1, 1, 1],
    [7, 5, 3, 1, -1, -3, -5, -7],
    [21, 9, 1, -3, -3, 1, 9, 21],
    [35, 5, -5, -3, 3, 5, -5, -35],
    [35, -5, -5, 3, 3, -5, -5, 35],
    [21, -9, 1, 3, -3, -1, 9, -21],
    [7, -5, 3, -1, -1, 3, -5, 7],
    [1, -1, 1, -1, 1, -1, 1, -1],
];
const K8: [[i64; 9]; 9] = [
    [1, 1, 1, 1, 1, 1, 1, 1, 1],
    [8, 6, 4, 2, 0, -2, -4, -6, -8],
    [28, 14, 4, -2, -4, -2, 4, 14, 28],
    [56, 14, -4, -6, 0, 6, 4, -14, -56],
    [70, 0, -10, 0, 6, 0, -10, 0, 70],
    [56, -14, -4, 6, 0, -6, 4, 14, -56],
    [28, -14, 4, 2, -4, 2, 4, -14, 28],
    [8, -6, 4, -2, 0, 2, -4, 6, -8],
    [1, -1, 1, -1, 1, -1, 1, -1, 1],
];

fn rows<const N: usize>(m: &[[i64; N]; N]) -> Vec<Vec<i64>> {
    m.iter().map(|r| r.to_vec()).collect()
}

/// The published reference matrices for orders 1 through 8, as printed.
pub fn printed_table_one() -> Vec<(i64, Vec<Vec<i64>>)> {
    vec![
        (1, rows(&K1)),
        (2, rows(&K2)),
        (3, rows(&K3)),
        (4, rows(&K4)),
        (5, rows(&K5)),
        (6, rows(&K6)),
        (7, rows(&K7)),
        (8, rows(&K8)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn as_i64(t: &KrawtchoukTable) -> Vec<Vec<i64>> {
        t.values()
            .iter()
            .map(|r| r.iter().map(|v| i64::try_from(v).unwrap()).collect())
            .collect()
    }

    #[test]
    fn small_tables() {
        assert_eq!(
            as_i64(&build_table(2)),
            vec![vec![1, 1, 1], vec![2, 0, -2], vec![1, -1, 1]]
        );
        assert_eq!(as_i64(&build_table(4))[2], vec![6, 0, -2, 0, 6]);
        assert_eq!(as_i64(&build_table(1)), vec![vec![1, 1], vec![1, -1]]);
        assert_eq!(as_i64(&build_table(0)), vec![vec![1]]);
    }

    #[test]
    fn invariants_hold() {
        for n in 0..=40 {
            assert!(build_table(n).invariant_violations().is_empty(), "n={n}");
        }
    }

    #[test]
    fn printed_reference_differs_only_at_known_misprint() {
        let mut mismatches = Vec::new();
        for (n, printed) in printed_table_one() {
            let t = build_table(n);
            for (p, row) in printed.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    if *t.get(p, j) != int(*v) {
                        mismatches.push((n, p, j, *v));
                    }
                }
            }
        }
        assert_eq!(mismatches, vec![(6, 5, 4, 2)]);
        assert_eq!(*build_table(6).get(5, 4), int(-2));
    }

    #[test]
    fn serializations() {
        assert_eq!(build_table(2).to_csv(), "1,1,1\n2,0,-2\n1,-1,1\n");
        assert_eq!(build_table(0).to_json(), "{\"order\":0,\"values\":[[1]]}");
        let csv = build_table(8).to_csv();
        assert_eq!(csv.lines().nth(4).unwrap(), "70,0,-10,0,6,0,-10,0,70");
    }
}
