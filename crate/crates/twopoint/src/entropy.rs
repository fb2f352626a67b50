//! Shannon entropy of two-point and binomial outcome schemes, plus the
//! differential entropy of the normal limit for contrast.

use crate::error::{Error, Result};
use crate::numeric::{ln_binomial, CompensatedSum};
use crate::prospect::TrialCount;

/// Probabilities whose terms fall below this bound contribute nothing a
/// double can represent; they are skipped rather than exponentiated.
const TERM_FLOOR: f64 = 1e-300;

/// H = -p log2 p - (1-p) log2 (1-p), with 0 log2 0 = 0.
pub fn two_point_entropy(p: f64) -> Result<f64> {
    if !p.is_finite() || !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidProbability(p));
    }
    let q = 1.0 - p;
    let mut h = 0.0;
    if p > 0.0 {
        h -= p * p.log2();
    }
    if q > 0.0 {
        h -= q * q.log2();
    }
    Ok(h)
}

/// Entropy in bits of the n+1 outcome scheme with binomial probabilities
/// C(n,k) p^k (1-p)^(n-k). The sum and the mean of n plays share this value,
/// since entropy depends on probabilities only, not on outcome spacing.
///
/// Coefficients go through log space so n can be large; the summation window
/// is clipped to 40 standard deviations plus 40 around n*p, outside of which
/// every term is far below TERM_FLOOR.
pub fn binomial_entropy_exact(p: f64, n: TrialCount) -> Result<f64> {
    if !p.is_finite() || !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidProbability(p));
    }
    if p == 0.0 || p == 1.0 {
        return Ok(0.0);
    }
    let n = n.get();
    let nf = n as f64;
    let (ln_p, ln_q) = (p.ln(), (1.0 - p).ln());
    let center = nf * p;
    let half_width = 40.0 * (center * (1.0 - p)).sqrt() + 40.0;
    let lo = (center - half_width).floor().max(0.0) as u64;
    let hi = ((center + half_width).ceil() as u64).min(n);
    let mut h = CompensatedSum::new();
    for k in lo..=hi {
        let ln_term = ln_binomial(n, k) + k as f64 * ln_p + (n - k) as f64 * ln_q;
        let prob = ln_term.exp();
        if prob < TERM_FLOOR {
            continue;
        }
        h.add(-prob * ln_term);
    }
    Ok((h.total() / std::f64::consts::LN_2).max(0.0))
}

/// Stirling-substitution form of the binomial scheme entropy:
///
/// H(p,n) ~ n H - (P1 + P_{n-1}) log2 n
///          - ((n + 1/2) log2 n - (1/2) log2 2pi) (1 - P0 - P1 - P_{n-1} - P_n)
///          + sum_{k=2}^{n-2} P_k ((k + 1/2) log2 k + (n-k+1/2) log2 (n-k))
///
/// The interior sum needs k to range over 2..=n-2, hence n >= 4; factorials
/// of large arguments never appear.
pub fn binomial_entropy_stirling(p: f64, n: TrialCount) -> Result<f64> {
    if !p.is_finite() || !(0.0 < p && p < 1.0) {
        return Err(Error::InvalidProbability(p));
    }
    let n = n.get();
    if n < 4 {
        return Err(Error::StirlingTooFewTrials(n));
    }
    let nf = n as f64;
    let (ln_p, ln_q) = (p.ln(), (1.0 - p).ln());
    let prob = |k: u64| -> f64 {
        let ln_term = ln_binomial(n, k) + k as f64 * ln_p + (n - k) as f64 * ln_q;
        let v = ln_term.exp();
        if v < TERM_FLOOR {
            0.0
        } else {
            v
        }
    };
    let p0 = prob(0);
    let p1 = prob(1);
    let pn1 = prob(n - 1);
    let pn = prob(n);
    let mut interior = CompensatedSum::new();
    for k in 2..=(n - 2) {
        let pk = prob(k);
        if pk == 0.0 {
            continue;
        }
        let kf = k as f64;
        let mf = (n - k) as f64;
        interior.add(pk * ((kf + 0.5) * kf.log2() + (mf + 0.5) * mf.log2()));
    }
    let single = two_point_entropy(p)?;
    let bulk = 1.0 - p0 - p1 - pn1 - pn;
    let log2_2pi = (2.0 * std::f64::consts::PI).log2();
    Ok(nf * single - (p1 + pn1) * nf.log2() - ((nf + 0.5) * nf.log2() - 0.5 * log2_2pi) * bulk
        + interior.total())
}

/// Differential entropy of a normal distribution: (1/2) log2(2 pi e variance).
/// Negative for small variance, unlike the discrete scheme entropies.
pub fn normal_differential_entropy(variance: f64) -> Result<f64> {
    if !variance.is_finite() || variance <= 0.0 {
        return Err(Error::NonPositiveVariance(variance));
    }
    Ok(0.5 * (2.0 * std::f64::consts::PI * std::f64::consts::E * variance).log2())
}
