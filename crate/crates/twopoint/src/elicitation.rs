//! Two-stage certainty-equivalent elicitation.
//!
//! A respondent is offered a descending ladder of sure amounts as
//! alternatives to a risky prospect. A coarse geometric ladder brackets the
//! acceptance threshold, a linear ladder refines the bracket, and the cash
//! equivalent is the midpoint of the lowest accepted and highest rejected
//! refined amounts.

use crate::error::{Error, Result};
use crate::prospect::Prospect;

/// Interior rungs per ladder stage.
pub const DEFAULT_INTERIOR_COUNT: usize = 7;

/// A geometric ladder of sure amounts between two same-sign endpoints.
#[derive(Clone, Debug)]
pub struct GeometricLadder {
    /// Common ratio c = (high/low)^(1/(interior_count+1)).
    pub ratio: f64,
    /// Interior values high/c, high/c^2, ..., in descending order.
    pub values: Vec<f64>,
}

/// A linear ladder refining the bracket around an acceptance threshold.
#[derive(Clone, Debug)]
pub struct RefinedLadder {
    /// Bracket edge 25% beyond the highest rejected amount.
    pub lower: f64,
    /// Bracket edge 25% beyond the lowest accepted amount.
    pub upper: f64,
    /// Interior values upper - k(upper-lower)/(interior_count+1), descending.
    pub values: Vec<f64>,
}

/// Builds the coarse ladder: interior_count sure amounts in geometric
/// progression strictly between low and high.
///
/// The endpoints must be nonzero, of the same sign, and ordered high >= low;
/// mixed signs or a zero endpoint leave no geometric progression.
pub fn geometric_ladder(high: f64, low: f64, interior_count: usize) -> Result<GeometricLadder> {
    for (name, value) in [("high", high), ("low", low)] {
        if !value.is_finite() {
            return Err(Error::NonFiniteArgument { name, value });
        }
    }
    if high == 0.0 || low == 0.0 || (high > 0.0) != (low > 0.0) || high < low {
        return Err(Error::NonPositiveEndpoint { high, low });
    }
    let ratio = (high / low).powf(1.0 / (interior_count as f64 + 1.0));
    let values = (1..=interior_count)
        .map(|i| high * ratio.powi(-(i as i32)))
        .collect();
    Ok(GeometricLadder { ratio, values })
}

/// Builds the fine ladder: interior_count equally spaced sure amounts
/// strictly inside a bracket widened 25% beyond each response.
pub fn refine_linear_ladder(
    lowest_accepted: f64,
    highest_rejected: f64,
    interior_count: usize,
) -> Result<RefinedLadder> {
    for (name, value) in [
        ("lowest_accepted", lowest_accepted),
        ("highest_rejected", highest_rejected),
    ] {
        if !value.is_finite() {
            return Err(Error::NonFiniteArgument { name, value });
        }
    }
    if lowest_accepted <= highest_rejected {
        return Err(Error::InconsistentResponses(format!(
            "lowest accepted amount {lowest_accepted} does not exceed highest rejected {highest_rejected}"
        )));
    }
    if lowest_accepted == 0.0
        || highest_rejected == 0.0
        || (lowest_accepted > 0.0) != (highest_rejected > 0.0)
    {
        return Err(Error::NonPositiveEndpoint {
            high: lowest_accepted,
            low: highest_rejected,
        });
    }
    // each bound moves 25% away from the other, keeping its sign
    let (upper, lower) = if lowest_accepted > 0.0 {
        (lowest_accepted * 1.25, highest_rejected / 1.25)
    } else {
        (lowest_accepted / 1.25, highest_rejected * 1.25)
    };
    let step = (upper - lower) / (interior_count as f64 + 1.0);
    let values = (1..=interior_count)
        .map(|k| upper - step * k as f64)
        .collect();
    Ok(RefinedLadder { lower, upper, values })
}

/// Presents descending sure amounts to the respondent and returns the
/// lowest accepted and highest rejected ones.
///
/// A monotone respondent accepts a prefix of the descending values; an
/// acceptance after a rejection is contradictory and rejected.
fn poll(values: &[f64], respondent: &mut impl FnMut(f64) -> bool) -> Result<(Option<f64>, Option<f64>)> {
    let mut lowest_accepted = None;
    let mut highest_rejected = None;
    for &offer in values {
        if respondent(offer) {
            if highest_rejected.is_some() {
                return Err(Error::InconsistentResponses(format!(
                    "sure amount {offer} accepted after a larger amount was rejected"
                )));
            }
            lowest_accepted = Some(offer);
        } else if highest_rejected.is_none() {
            highest_rejected = Some(offer);
        }
    }
    Ok((lowest_accepted, highest_rejected))
}

/// Elicits the cash equivalent of a prospect from an accept/reject oracle
/// over sure amounts.
///
/// Runs the geometric ladder between the prospect's outcomes, refines
/// linearly around the response boundary, and returns the midpoint of the
/// lowest accepted and highest rejected refined amounts. When a stage is
/// accepted or rejected wholesale, the missing boundary falls back to the
/// stage's own edge. A sure amount is its own cash equivalent.
pub fn certainty_equivalent(prospect: &Prospect, mut respondent: impl FnMut(f64) -> bool) -> Result<f64> {
    if let Some(value) = prospect.constant_value() {
        return Ok(value);
    }
    let high = prospect.a_p();
    let low = prospect.a_q();
    let coarse = geometric_ladder(high, low, DEFAULT_INTERIOR_COUNT)?;
    let (accepted, rejected) = poll(&coarse.values, &mut respondent)?;
    let fine = refine_linear_ladder(accepted.unwrap_or(high), rejected.unwrap_or(low), DEFAULT_INTERIOR_COUNT)?;
    let (accepted, rejected) = poll(&fine.values, &mut respondent)?;
    Ok(0.5 * (accepted.unwrap_or(fine.upper) + rejected.unwrap_or(fine.lower)))
}
