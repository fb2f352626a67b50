//! Law-of-large-numbers sample-size estimates and the success-frequency
//! margin at which a risky prospect's sample mean crosses a sure award.

use crate::error::{Error, Result};
use crate::prospect::Prospect;

/// Smallest number of trials n0 guaranteeing
/// P{ |successes/n - p| <= epsilon } > 1 - confidence_complement for every
/// n >= n0, independent of p:
///
/// n0 = smallest integer strictly greater than
///      (1 + epsilon)/epsilon^2 * ln(1/confidence_complement) + 1/epsilon.
///
/// The logarithm is natural. As the confidence complement approaches 1 the
/// bound collapses toward 1/epsilon.
pub fn prokhorov_min_trials(epsilon: f64, confidence_complement: f64) -> Result<u64> {
    if !epsilon.is_finite() || epsilon <= 0.0 {
        return Err(Error::InvalidEpsilon(epsilon));
    }
    let eta = confidence_complement;
    if !eta.is_finite() || eta <= 0.0 || eta >= 1.0 {
        return Err(Error::InvalidEta(eta));
    }
    let bound = (1.0 + epsilon) / (epsilon * epsilon) * (1.0 / eta).ln() + 1.0 / epsilon;
    if !bound.is_finite() || bound >= u64::MAX as f64 {
        return Err(Error::TrialBoundOverflow { bound });
    }
    Ok(bound.floor() as u64 + 1)
}

/// Success-frequency margin below which the sample mean of a risky prospect
/// paying `a_p` or nothing drops under a sure award:
///
/// epsilon = |sure_amount / a_p - p|.
///
/// Requires a zero failure payoff and 0 < sure_amount < a_p.
pub fn comparison_threshold_epsilon(random: &Prospect, sure_amount: f64) -> Result<f64> {
    if random.a_q() != 0.0 {
        return Err(Error::ThresholdUndefined(format!(
            "the risky prospect must pay zero on failure, got {}",
            random.a_q()
        )));
    }
    if !sure_amount.is_finite() || sure_amount <= 0.0 {
        return Err(Error::ThresholdUndefined(format!(
            "the sure amount must be positive, got {sure_amount}"
        )));
    }
    if random.a_p() <= sure_amount {
        return Err(Error::ThresholdUndefined(format!(
            "the success payoff {} must exceed the sure amount {sure_amount}",
            random.a_p()
        )));
    }
    Ok((sure_amount / random.a_p() - random.p()).abs())
}
