//! Shared numeric helpers: log-factorials, compensated summation, tolerant
//! comparison, and the fixed-width float formatting used by the CLI.

use std::sync::OnceLock;

/// ln(n!) for n < EXACT_LIMIT comes from a cumulative table; larger n use the
/// Stirling series, whose truncation error at n >= 1024 is below 1e-19.
const EXACT_LIMIT: u64 = 1024;

fn ln_factorial_table() -> &'static [f64] {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut table = Vec::with_capacity(EXACT_LIMIT as usize);
        let mut acc = CompensatedSum::new();
        table.push(0.0); // ln 0! = 0
        for n in 1..EXACT_LIMIT {
            acc.add((n as f64).ln());
            table.push(acc.total());
        }
        table
    })
}

/// ln(n!)
pub fn ln_factorial(n: u64) -> f64 {
    if n < EXACT_LIMIT {
        return ln_factorial_table()[n as usize];
    }
    // ln n! = (n + 1/2) ln n - n + (1/2) ln(2 pi) + 1/(12n) - 1/(360 n^3) + 1/(1260 n^5)
    let x = n as f64;
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    (x + 0.5) * x.ln() - x
        + 0.5 * (2.0 * std::f64::consts::PI).ln()
        + inv * (1.0 / 12.0 - inv2 * (1.0 / 360.0 - inv2 / 1260.0))
}

/// ln C(n, k); requires k <= n.
pub fn ln_binomial(n: u64, k: u64) -> f64 {
    debug_assert!(k <= n);
    ln_factorial(n) - ln_factorial(k) - ln_factorial(n - k)
}

/// Neumaier-compensated running sum: keeps the low-order bits that plain
/// accumulation drops, so reduction order does not move test results.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, value: f64) {
        let t = self.sum + value;
        if self.sum.abs() >= value.abs() {
            self.compensation += (self.sum - t) + value;
        } else {
            self.compensation += (value - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn total(&self) -> f64 {
        self.sum + self.compensation
    }
}

/// True when a and b agree within `rel` relative tolerance, falling back to
/// `abs` absolute tolerance near zero.
pub fn nearly_equal(a: f64, b: f64, rel: f64, abs: f64) -> bool {
    let diff = (a - b).abs();
    diff <= abs || diff <= rel * a.abs().max(b.abs())
}

/// 17 significant digits in normalized scientific notation; round-trips any
/// finite f64 exactly, so repeated runs emit bit-identical text.
pub fn format_sig17(x: f64) -> String {
    format!("{x:.16e}")
}

/// C(n, k) as an exact integer; None on u128 overflow, Some(0) when k > n.
pub fn binomial_u128(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut result: u128 = 1;
    for i in 1..=k {
        // result * (n - k + i) is always divisible by i at this point.
        result = result.checked_mul((n - k + i) as u128)? / i as u128;
    }
    Some(result)
}
