//! Two-point random variables and the closed-form statistics of their sample
//! means over repeated independent plays.

use crate::entropy;
use crate::error::{Error, Result};

/// A gamble paying `a_p` with probability `p` and `a_q` with probability
/// `1 - p`. Construction normalizes orientation so that `a_q <= a_p`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Prospect {
    a_p: f64,
    a_q: f64,
    p: f64,
}

impl Prospect {
    /// Builds a prospect, swapping the outcomes (and replacing p with 1 - p)
    /// when given with a_p < a_q, so the stored orientation is canonical.
    pub fn new(a_p: f64, a_q: f64, p: f64) -> Result<Self> {
        if !a_p.is_finite() {
            return Err(Error::NonFiniteOutcome(a_p));
        }
        if !a_q.is_finite() {
            return Err(Error::NonFiniteOutcome(a_q));
        }
        if !p.is_finite() || !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidProbability(p));
        }
        if a_p < a_q {
            Ok(Self {
                a_p: a_q,
                a_q: a_p,
                p: 1.0 - p,
            })
        } else {
            Ok(Self { a_p, a_q, p })
        }
    }

    /// Constant prospect paying `value` with certainty.
    pub fn constant(value: f64) -> Result<Self> {
        Self::new(value, value, 1.0)
    }

    pub fn a_p(&self) -> f64 {
        self.a_p
    }

    pub fn a_q(&self) -> f64 {
        self.a_q
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn q(&self) -> f64 {
        1.0 - self.p
    }

    /// a_p - a_q; nonnegative by construction.
    pub fn spread(&self) -> f64 {
        self.a_p - self.a_q
    }

    /// True when the variable is deterministic: coinciding outcomes or a
    /// degenerate probability.
    pub fn is_constant(&self) -> bool {
        self.a_p == self.a_q || self.p == 0.0 || self.p == 1.0
    }

    /// The sure value when deterministic, None otherwise.
    pub fn constant_value(&self) -> Option<f64> {
        if self.a_p == self.a_q || self.p == 1.0 {
            Some(self.a_p)
        } else if self.p == 0.0 {
            Some(self.a_q)
        } else {
            None
        }
    }

    /// Smallest outcome with positive probability.
    pub fn support_min(&self) -> f64 {
        if self.p == 1.0 {
            self.a_p
        } else {
            self.a_q
        }
    }

    /// Largest outcome with positive probability.
    pub fn support_max(&self) -> f64 {
        if self.p == 0.0 {
            self.a_q
        } else {
            self.a_p
        }
    }

    /// The prospect with both outcomes negated (a gain mirrored into a loss).
    pub fn reflected(&self) -> Self {
        // Negation swaps which outcome is larger, so renormalize.
        Self {
            a_p: -self.a_q,
            a_q: -self.a_p,
            p: 1.0 - self.p,
        }
    }
}

/// Number of independent plays, at least 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct TrialCount(u64);

impl TrialCount {
    pub fn new(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroTrials);
        }
        Ok(Self(n))
    }

    pub fn get(&self) -> u64 {
        self.0
    }
}

/// N = floor(frequency * duration): how many plays fit into a time budget.
pub fn trials_from_time(frequency: f64, duration: f64) -> Result<TrialCount> {
    if !frequency.is_finite() {
        return Err(Error::NonFiniteArgument {
            name: "frequency",
            value: frequency,
        });
    }
    if !duration.is_finite() {
        return Err(Error::NonFiniteArgument {
            name: "duration",
            value: duration,
        });
    }
    if frequency < 0.0 {
        return Err(Error::NegativeArgument {
            name: "frequency",
            value: frequency,
        });
    }
    if duration < 0.0 {
        return Err(Error::NegativeArgument {
            name: "duration",
            value: duration,
        });
    }
    let n = (frequency * duration).floor();
    if n < 1.0 {
        return Err(Error::ZeroTrials);
    }
    TrialCount::new(n as u64)
}

/// Mean, central moments, shape ratios, and entropy of one variable or of a
/// sample mean. Skewness and excess kurtosis are absent exactly when the
/// variance is zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentSet {
    pub mean: f64,
    pub variance: f64,
    pub mu3: f64,
    pub mu4: f64,
    pub skewness: Option<f64>,
    pub excess_kurtosis: Option<f64>,
    pub entropy_bits: f64,
}

impl MomentSet {
    pub fn stdev(&self) -> f64 {
        self.variance.sqrt()
    }
}

/// mean = (a_p - a_q) p + a_q
/// variance = (a_p - a_q)^2 p (1-p)
/// mu3 = (a_p - a_q)^3 p (1-p) (1-2p)
/// mu4 = (a_p - a_q)^4 p (1-p) (1 - 3 p (1-p))
/// skewness = (1-2p) / sqrt(p(1-p))
/// excess kurtosis = (1 - 6 p (1-p)) / (p (1-p))
/// entropy = -p log2 p - (1-p) log2 (1-p)
pub fn two_point_moments(prospect: &Prospect) -> MomentSet {
    let d = prospect.spread();
    let p = prospect.p();
    let q = prospect.q();
    let pq = p * q;
    let variance = d * d * pq;
    let (skewness, excess_kurtosis) = if variance > 0.0 {
        (Some((q - p) / pq.sqrt()), Some((1.0 - 6.0 * pq) / pq))
    } else {
        (None, None)
    };
    MomentSet {
        mean: d * p + prospect.a_q(),
        variance,
        mu3: d * d * d * pq * (q - p),
        mu4: d * d * d * d * pq * (1.0 - 3.0 * pq),
        skewness,
        excess_kurtosis,
        entropy_bits: entropy::two_point_entropy(p).expect("p validated by Prospect"),
    }
}

/// Statistics of the mean of n independent plays of the prospect:
/// variance shrinks by n, mu3 by n^2, skewness by sqrt(n), excess kurtosis
/// by n, while the mean stays put. mu4 uses the closed form
/// mu4 = (a_p - a_q)^4 p(1-p) [1 + 3 (n-2) p(1-p)] / n^3
/// which is stable for large n. Entropy is the full binomial-scheme entropy.
pub fn sample_mean_moments(prospect: &Prospect, n: TrialCount) -> MomentSet {
    let d = prospect.spread();
    let p = prospect.p();
    let q = prospect.q();
    let pq = p * q;
    let nf = n.get() as f64;
    let variance = d * d * pq / nf;
    let (skewness, excess_kurtosis) = if variance > 0.0 {
        (
            Some((q - p) / (pq.sqrt() * nf.sqrt())),
            Some((1.0 - 6.0 * pq) / (pq * nf)),
        )
    } else {
        (None, None)
    };
    MomentSet {
        mean: d * p + prospect.a_q(),
        variance,
        mu3: d * d * d * pq * (q - p) / (nf * nf),
        mu4: d * d * d * d * pq * (1.0 + 3.0 * (nf - 2.0) * pq) / (nf * nf * nf),
        skewness,
        excess_kurtosis,
        entropy_bits: entropy::binomial_entropy_exact(p, n).expect("p validated by Prospect"),
    }
}

/// Beginning (raw) moments alpha_k = E(xi^k), k = 0..4, with alpha0 = 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RawMoments {
    pub alpha0: f64,
    pub alpha1: f64,
    pub alpha2: f64,
    pub alpha3: f64,
    pub alpha4: f64,
}

impl RawMoments {
    pub fn new(alpha0: f64, alpha1: f64, alpha2: f64, alpha3: f64, alpha4: f64) -> Result<Self> {
        if alpha0 != 1.0 {
            return Err(Error::InvalidRawMoments(alpha0));
        }
        Ok(Self {
            alpha0,
            alpha1,
            alpha2,
            alpha3,
            alpha4,
        })
    }

    /// alpha_k = a_p^k p + a_q^k (1-p)
    pub fn from_prospect(prospect: &Prospect) -> Self {
        let (a_p, a_q) = (prospect.a_p(), prospect.a_q());
        let (p, q) = (prospect.p(), prospect.q());
        let mut alphas = [1.0; 5];
        let mut pow_p = 1.0;
        let mut pow_q = 1.0;
        for alpha in alphas.iter_mut().skip(1) {
            pow_p *= a_p;
            pow_q *= a_q;
            *alpha = pow_p * p + pow_q * q;
        }
        Self {
            alpha0: alphas[0],
            alpha1: alphas[1],
            alpha2: alphas[2],
            alpha3: alphas[3],
            alpha4: alphas[4],
        }
    }
}

/// Central moments mu_0..mu_4 from raw moments:
/// mu2 = a2 - a1^2
/// mu3 = a3 - 3 a1 a2 + 2 a1^3
/// mu4 = a4 - 4 a1 a3 + 6 a1^2 a2 - 3 a1^4
pub fn central_from_raw(raw: &RawMoments) -> [f64; 5] {
    let a1 = raw.alpha1;
    let a2 = raw.alpha2;
    let a3 = raw.alpha3;
    let a4 = raw.alpha4;
    [
        1.0,
        0.0,
        a2 - a1 * a1,
        a3 - 3.0 * a1 * a2 + 2.0 * a1 * a1 * a1,
        a4 - 4.0 * a1 * a3 + 6.0 * a1 * a1 * a2 - 3.0 * a1 * a1 * a1 * a1,
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    fn p3() -> Prospect {
        Prospect::new(4000.0, 0.0, 0.8).unwrap()
    }

    #[test]
    fn risky_gain_moments() {
        let m = two_point_moments(&p3());
        assert_eq!(m.mean, 3200.0);
        assert_relative_eq!(m.stdev(), 1600.0, max_relative = 1e-13);
        assert_relative_eq!(m.mu3, -6.144e9, max_relative = 1e-13);
        assert_relative_eq!(m.mu4, 2.12992e13, max_relative = 1e-13);
        assert_relative_eq!(m.skewness.unwrap(), -1.5, max_relative = 1e-15);
        assert_relative_eq!(m.excess_kurtosis.unwrap(), 0.25, max_relative = 1e-13);
        assert_abs_diff_eq!(m.entropy_bits, 0.721928, epsilon = 1e-6);
    }

    #[test]
    fn sure_award_is_degenerate() {
        let m = two_point_moments(&Prospect::constant(3000.0).unwrap());
        assert_eq!(m.mean, 3000.0);
        assert_eq!(m.variance, 0.0);
        assert!(m.skewness.is_none());
        assert!(m.excess_kurtosis.is_none());
        assert_eq!(m.entropy_bits, 0.0);
    }

    #[test]
    fn fair_coin_moments() {
        let m = two_point_moments(&Prospect::new(1.0, 0.0, 0.5).unwrap());
        assert_eq!(m.mean, 0.5);
        assert_eq!(m.variance, 0.25);
        assert_eq!(m.skewness.unwrap(), 0.0);
        assert_eq!(m.excess_kurtosis.unwrap(), -2.0);
        assert_eq!(m.entropy_bits, 1.0);
    }

    #[test]
    fn constructor_swaps_orientation() {
        let a = Prospect::new(0.0, 4000.0, 0.2).unwrap();
        assert_eq!(a.a_p(), 4000.0);
        assert_eq!(a.a_q(), 0.0);
        assert_eq!(a.p(), 0.8);
        assert_eq!(two_point_moments(&a), two_point_moments(&p3()));
    }

    #[test]
    fn reflection_flips_odd_moments() {
        let loss = p3().reflected();
        assert_eq!(loss.a_p(), 0.0);
        assert_eq!(loss.a_q(), -4000.0);
        assert_relative_eq!(loss.p(), 0.2, max_relative = 1e-15);
        let m = two_point_moments(&loss);
        let g = two_point_moments(&p3());
        assert_eq!(m.mean, -3200.0);
        assert_relative_eq!(m.stdev(), 1600.0, max_relative = 1e-13);
        assert_relative_eq!(m.skewness.unwrap(), 1.5, max_relative = 1e-15);
        assert_relative_eq!(m.mu3, -g.mu3, max_relative = 1e-15);
        assert_eq!(m.mu4, g.mu4);
        assert_relative_eq!(
            m.excess_kurtosis.unwrap(),
            g.excess_kurtosis.unwrap(),
            max_relative = 1e-12
        );
        assert_relative_eq!(m.entropy_bits, g.entropy_bits, max_relative = 1e-12);
    }

    #[test]
    fn single_play_mean_equals_variable() {
        let one = TrialCount::new(1).unwrap();
        let a = sample_mean_moments(&p3(), one);
        let b = two_point_moments(&p3());
        assert_eq!(a.mean, b.mean);
        assert_eq!(a.variance, b.variance);
        assert_eq!(a.mu3, b.mu3);
        assert_eq!(a.mu4, b.mu4);
        assert_eq!(a.skewness, b.skewness);
        assert_eq!(a.excess_kurtosis, b.excess_kurtosis);
        assert_relative_eq!(a.entropy_bits, b.entropy_bits, max_relative = 1e-12);
    }

    /// Moments of the mean of n plays computed straight from the binomial
    /// outcome lattice, with no shrinking-rate shortcuts.
    fn enumerated_moments(prospect: &Prospect, n: u64) -> (f64, f64, f64, f64) {
        let p = prospect.p();
        let mut mean = 0.0;
        let mut probs = Vec::new();
        let mut values = Vec::new();
        for k in 0..=n {
            let prob = (crate::numeric::ln_binomial(n, k)
                + k as f64 * p.ln()
                + (n - k) as f64 * (1.0 - p).ln())
            .exp();
            let value =
                (k as f64 * prospect.a_p() + (n - k) as f64 * prospect.a_q()) / n as f64;
            mean += prob * value;
            probs.push(prob);
            values.push(value);
        }
        let central = |r: i32| -> f64 {
            probs
                .iter()
                .zip(&values)
                .map(|(prob, value)| prob * (value - mean).powi(r))
                .sum()
        };
        (mean, central(2), central(3), central(4))
    }

    #[test]
    fn four_plays_match_enumeration() {
        let n = TrialCount::new(4).unwrap();
        let m = sample_mean_moments(&p3(), n);
        assert_relative_eq!(m.variance, 1600.0 * 1600.0 / 4.0, max_relative = 1e-13);
        assert_relative_eq!(m.skewness.unwrap(), -0.75, max_relative = 1e-15);
        assert_relative_eq!(m.excess_kurtosis.unwrap(), 0.0625, max_relative = 1e-12);
        let (mean, mu2, mu3, mu4) = enumerated_moments(&p3(), 4);
        assert_relative_eq!(m.mean, mean, max_relative = 1e-12);
        assert_relative_eq!(m.variance, mu2, max_relative = 1e-12);
        assert_relative_eq!(m.mu3, mu3, max_relative = 1e-12);
        assert_relative_eq!(m.mu4, mu4, max_relative = 1e-12);
    }

    #[test]
    fn lattice_enumeration_up_to_twelve_plays() {
        let cases = [
            Prospect::new(4000.0, 0.0, 0.8).unwrap(),
            Prospect::new(0.0, -4000.0, 0.2).unwrap(),
            Prospect::new(250.0, -120.0, 0.37).unwrap(),
        ];
        for prospect in &cases {
            for n in 1..=12 {
                let m = sample_mean_moments(prospect, TrialCount::new(n).unwrap());
                let (mean, mu2, mu3, mu4) = enumerated_moments(prospect, n);
                assert_relative_eq!(m.mean, mean, max_relative = 1e-9);
                assert_relative_eq!(m.variance, mu2, max_relative = 1e-9);
                assert_relative_eq!(m.mu3, mu3, max_relative = 1e-9, epsilon = 1e-9);
                assert_relative_eq!(m.mu4, mu4, max_relative = 1e-9);
            }
        }
    }

    #[test]
    fn variance_scales_with_plays_to_the_last_bit() {
        // Algebraically variance(n) * n == variance(1); floating point keeps
        // the identity to within one rounding of the divide/multiply pair.
        let base = two_point_moments(&p3()).variance;
        for n in [1u64, 2, 3, 7, 100, 8320] {
            let m = sample_mean_moments(&p3(), TrialCount::new(n).unwrap());
            assert_relative_eq!(m.variance * n as f64, base, max_relative = 5e-16);
        }
    }

    #[test]
    fn play_budget_from_rate_and_horizon() {
        assert_eq!(trials_from_time(2.0, 80.0 * 52.0).unwrap().get(), 8320);
        assert_eq!(trials_from_time(80.0 * 5.0 / 12.0, 1.0).unwrap().get(), 33);
        assert!(matches!(
            trials_from_time(1.0, 0.5),
            Err(Error::ZeroTrials)
        ));
        assert!(matches!(
            trials_from_time(-1.0, 2.0),
            Err(Error::NegativeArgument { .. })
        ));
    }

    #[test]
    fn zero_trial_count_rejected() {
        assert!(matches!(TrialCount::new(0), Err(Error::ZeroTrials)));
        assert_eq!(TrialCount::new(33).unwrap().get(), 33);
    }

    #[test]
    fn raw_to_central_standard_case() {
        let raw = RawMoments::new(1.0, 0.0, 1.0, 0.0, 3.0).unwrap();
        assert_eq!(central_from_raw(&raw), [1.0, 0.0, 1.0, 0.0, 3.0]);
    }

    #[test]
    fn raw_to_central_matches_direct_moments() {
        for prospect in [
            p3(),
            Prospect::new(0.0, -4000.0, 0.2).unwrap(),
            Prospect::new(13.5, -2.25, 0.125).unwrap(),
        ] {
            let mu = central_from_raw(&RawMoments::from_prospect(&prospect));
            let m = two_point_moments(&prospect);
            assert_relative_eq!(mu[2], m.variance, max_relative = 1e-9);
            assert_relative_eq!(mu[3], m.mu3, max_relative = 1e-9);
            assert_relative_eq!(mu[4], m.mu4, max_relative = 1e-9);
        }
    }

    #[test]
    fn raw_moments_require_unit_mass() {
        assert!(matches!(
            RawMoments::new(0.99, 0.0, 1.0, 0.0, 3.0),
            Err(Error::InvalidRawMoments(_))
        ));
    }

    #[test]
    fn bad_inputs_rejected() {
        assert!(matches!(
            Prospect::new(f64::NAN, 0.0, 0.5),
            Err(Error::NonFiniteOutcome(_))
        ));
        assert!(matches!(
            Prospect::new(1.0, 0.0, 1.5),
            Err(Error::InvalidProbability(_))
        ));
        assert!(matches!(
            Prospect::new(1.0, 0.0, f64::NAN),
            Err(Error::InvalidProbability(_))
        ));
    }
}
