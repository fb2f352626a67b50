//! Monte Carlo replication of n-trial sample means of a two-point prospect.
//!
//! Every replication owns a counter-based ChaCha8 stream derived from the
//! run seed and the replication index, so results are bit-identical for a
//! fixed seed no matter how many threads execute, and distinct replications
//! never share state. Moment reduction over the collected means is
//! sequential and compensated for the same reason.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::numeric::CompensatedSum;
use crate::prospect::{Prospect, TrialCount};

/// Hard ceiling on total variates drawn in one call (trials x replications).
const MAX_DRAWS: u128 = 1_000_000_000;

/// Number of contiguous batches used for standard-error estimates.
const BATCHES: usize = 25;

/// Central moments of the replicated sample means.
///
/// `variance`, `mu3`, and `mu4` divide by the replication count, matching
/// the population convention of the analytic moment routines. Shape ratios
/// are absent when the observed variance is zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EmpiricalMoments {
    pub mean: f64,
    pub variance: f64,
    pub mu3: f64,
    pub mu4: f64,
    pub skewness: Option<f64>,
    pub excess_kurtosis: Option<f64>,
}

/// Batch-means standard errors for the statistics in [`EmpiricalMoments`].
///
/// The run is split into 25 contiguous batches; each statistic is computed
/// per batch and its standard error estimated as the sample deviation of
/// the batch values divided by sqrt(25). Shape-ratio errors are absent when
/// any batch is degenerate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StandardErrors {
    pub mean: f64,
    pub variance: f64,
    pub skewness: Option<f64>,
    pub excess_kurtosis: Option<f64>,
}

/// Result of a replicated sample-mean simulation.
///
/// `means` holds one sample mean per replication, in replication order.
/// `standard_errors` is present once the run has at least two replications
/// per batch (50 or more replications in total).
#[derive(Debug, Clone, PartialEq)]
pub struct SimulatedMeans {
    pub moments: EmpiricalMoments,
    pub standard_errors: Option<StandardErrors>,
    pub means: Vec<f64>,
}

fn validate_run(trials: TrialCount, replications: u64) -> Result<()> {
    if replications == 0 {
        return Err(Error::ZeroReplications);
    }
    let draws = trials.get() as u128 * replications as u128;
    if draws > MAX_DRAWS {
        return Err(Error::SimulationTooLarge { draws });
    }
    Ok(())
}

/// Count of successes in `trials` Bernoulli draws on the stream
/// `(seed, replication)`, comparing a 53-bit uniform against p.
fn successes(seed: u64, replication: u64, trials: u64, p: f64) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(replication);
    let mut count = 0u64;
    for _ in 0..trials {
        if rng.gen::<f64>() < p {
            count += 1;
        }
    }
    count
}

fn central_moments(values: &[f64]) -> EmpiricalMoments {
    let count = values.len() as f64;
    let mut total = CompensatedSum::new();
    for &value in values {
        total.add(value);
    }
    let mean = total.total() / count;
    let mut sum2 = CompensatedSum::new();
    let mut sum3 = CompensatedSum::new();
    let mut sum4 = CompensatedSum::new();
    for &value in values {
        let d = value - mean;
        let d2 = d * d;
        sum2.add(d2);
        sum3.add(d2 * d);
        sum4.add(d2 * d2);
    }
    let variance = sum2.total() / count;
    let mu3 = sum3.total() / count;
    let mu4 = sum4.total() / count;
    let (skewness, excess_kurtosis) = if variance > 0.0 {
        (
            Some(mu3 / (variance * variance.sqrt())),
            Some(mu4 / (variance * variance) - 3.0),
        )
    } else {
        (None, None)
    };
    EmpiricalMoments {
        mean,
        variance,
        mu3,
        mu4,
        skewness,
        excess_kurtosis,
    }
}

/// Sample deviation of the batch statistics divided by sqrt(batch count).
fn batch_spread(stats: &[f64]) -> f64 {
    let count = stats.len() as f64;
    let mut total = CompensatedSum::new();
    for &value in stats {
        total.add(value);
    }
    let mean = total.total() / count;
    let mut sum2 = CompensatedSum::new();
    for &value in stats {
        let d = value - mean;
        sum2.add(d * d);
    }
    (sum2.total() / (count - 1.0)).sqrt() / count.sqrt()
}

fn batch_standard_errors(means: &[f64]) -> Option<StandardErrors> {
    if means.len() < 2 * BATCHES {
        return None;
    }
    let batch_size = means.len() / BATCHES;
    let mut batch_means = Vec::with_capacity(BATCHES);
    let mut batch_variances = Vec::with_capacity(BATCHES);
    let mut batch_skews = Vec::with_capacity(BATCHES);
    let mut batch_kurtoses = Vec::with_capacity(BATCHES);
    let mut degenerate = false;
    for batch in 0..BATCHES {
        let chunk = &means[batch * batch_size..(batch + 1) * batch_size];
        let moments = central_moments(chunk);
        batch_means.push(moments.mean);
        batch_variances.push(moments.variance);
        match (moments.skewness, moments.excess_kurtosis) {
            (Some(g1), Some(g2)) => {
                batch_skews.push(g1);
                batch_kurtoses.push(g2);
            }
            _ => degenerate = true,
        }
    }
    Some(StandardErrors {
        mean: batch_spread(&batch_means),
        variance: batch_spread(&batch_variances),
        skewness: (!degenerate).then(|| batch_spread(&batch_skews)),
        excess_kurtosis: (!degenerate).then(|| batch_spread(&batch_kurtoses)),
    })
}

/// Simulates `replications` independent n-trial sample means of the
/// prospect and reports their empirical central moments alongside
/// batch-means standard errors.
///
/// Fixing the seed fixes every reported number exactly; the total number of
/// draws is capped at 10^9.
pub fn simulate_sample_means(
    prospect: &Prospect,
    trials: TrialCount,
    replications: u64,
    seed: u64,
) -> Result<SimulatedMeans> {
    validate_run(trials, replications)?;
    let n = trials.get();
    let p = prospect.p();
    let floor = prospect.a_q();
    let spread = prospect.spread();
    let means: Vec<f64> = (0..replications)
        .into_par_iter()
        .map(|replication| {
            let wins = successes(seed, replication, n, p);
            floor + (wins as f64 / n as f64) * spread
        })
        .collect();
    let moments = central_moments(&means);
    let standard_errors = batch_standard_errors(&means);
    Ok(SimulatedMeans {
        moments,
        standard_errors,
        means,
    })
}

/// Fraction of replications whose success frequency lands within
/// `epsilon` of the success probability:
///
/// coverage = #{ |successes/n - p| <= epsilon } / replications.
pub fn empirical_coverage(
    prospect: &Prospect,
    trials: TrialCount,
    replications: u64,
    seed: u64,
    epsilon: f64,
) -> Result<f64> {
    if !epsilon.is_finite() || epsilon < 0.0 {
        return Err(Error::InvalidEpsilon(epsilon));
    }
    validate_run(trials, replications)?;
    let n = trials.get();
    let p = prospect.p();
    let inside: u64 = (0..replications)
        .into_par_iter()
        .map(|replication| {
            let wins = successes(seed, replication, n, p);
            let deviation = (wins as f64 / n as f64 - p).abs();
            u64::from(deviation <= epsilon)
        })
        .sum();
    Ok(inside as f64 / replications as f64)
}
