//! Jackpot growth between wins as a function of time, and the participation
//! pulse implied by a growth curve: the fraction of the population buying in
//! over one inter-drawing interval.

use crate::error::{Error, Result};

/// Deterministic jackpot trajectory since the last reset at time `t0`
/// (years).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum JackpotGrowthModel {
    /// Logistic growth from `j0` toward the carrying capacity `j_max`:
    /// J(t) = j_max * j0 * e^(k (t - t0)) / (j_max + j0 * (e^(k (t - t0)) - 1)).
    Logistic {
        j0: f64,
        j_max: f64,
        k: f64,
        t0: f64,
    },
    /// Unbounded exponential growth: J(t) = j0 * e^(k (t - t0)).
    Exponential { j0: f64, k: f64, t0: f64 },
}

impl JackpotGrowthModel {
    pub fn logistic(j0: f64, j_max: f64, k: f64, t0: f64) -> Result<Self> {
        validate_base(j0, k, t0)?;
        if !j_max.is_finite() || j_max <= j0 {
            return Err(Error::InvalidGrowthModel(format!(
                "ceiling must be finite and exceed the starting jackpot, got {j_max}"
            )));
        }
        Ok(JackpotGrowthModel::Logistic { j0, j_max, k, t0 })
    }

    pub fn exponential(j0: f64, k: f64, t0: f64) -> Result<Self> {
        validate_base(j0, k, t0)?;
        Ok(JackpotGrowthModel::Exponential { j0, k, t0 })
    }
}

fn validate_base(j0: f64, k: f64, t0: f64) -> Result<()> {
    if !j0.is_finite() || j0 <= 0.0 {
        return Err(Error::InvalidGrowthModel(format!(
            "starting jackpot must be finite and positive, got {j0}"
        )));
    }
    if !k.is_finite() || k <= 0.0 {
        return Err(Error::InvalidGrowthModel(format!(
            "growth rate must be finite and positive, got {k}"
        )));
    }
    if !t0.is_finite() {
        return Err(Error::InvalidGrowthModel(format!(
            "start time must be finite, got {t0}"
        )));
    }
    Ok(())
}

/// Jackpot value at time `t` (years) under `model`.
pub fn jackpot_value(model: &JackpotGrowthModel, t: f64) -> f64 {
    match *model {
        JackpotGrowthModel::Logistic { j0, j_max, k, t0 } => {
            let x = k * (t - t0);
            // e^x overflows past ~709 and the curve is flat to every float
            // digit long before that.
            if x > 600.0 {
                return j_max;
            }
            let e = x.exp();
            // J < j_max for all finite t; min() only strips rounding
            // overshoot near saturation.
            (j_max * j0 * e / (j_max + j0 * (e - 1.0))).min(j_max)
        }
        JackpotGrowthModel::Exponential { j0, k, t0 } => j0 * (k * (t - t0)).exp(),
    }
}

/// Participation pulse derived from a logistic jackpot curve: the fraction
/// of the population joining during one inter-drawing interval `dt`, modeled
/// as `c_scale` times the jackpot increase over that interval.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParticipationModel {
    j0: f64,
    j_max: f64,
    k: f64,
    c_scale: f64,
    dt: f64,
}

/// Build the participation pulse for a logistic curve starting at `j0` with
/// ceiling `j_max` and rate `k` (per year), scale `c_scale` (fraction per
/// dollar), and inter-drawing interval `dt` (years).
pub fn participation_over_time(
    j0: f64,
    j_max: f64,
    k: f64,
    c_scale: f64,
    dt: f64,
) -> Result<ParticipationModel> {
    // Reuse the logistic constructor's constraints on j0, j_max, k.
    JackpotGrowthModel::logistic(j0, j_max, k, 0.0)?;
    if !c_scale.is_finite() || c_scale <= 0.0 {
        return Err(Error::InvalidGrowthModel(format!(
            "participation scale must be finite and positive, got {c_scale}"
        )));
    }
    if !dt.is_finite() || dt <= 0.0 {
        return Err(Error::InvalidGrowthModel(format!(
            "drawing interval must be finite and positive, got {dt}"
        )));
    }
    Ok(ParticipationModel {
        j0,
        j_max,
        k,
        c_scale,
        dt,
    })
}

impl ParticipationModel {
    /// Participating fraction at time `t`:
    ///
    /// f(t) = c (J_max - J_0) J_max J_0 e^(kt) (e^(k dt) - 1) /
    ///        [(J_max - J_0)^2 + (J_max - J_0) J_0 e^(kt) (e^(k dt) + 1)
    ///         + J_0^2 e^(2kt) e^(k dt)]
    ///
    /// which equals c * (J(t + dt) - J(t)) on the logistic curve. Evaluated
    /// with e^(-kt) factored out so large t decays to zero instead of
    /// producing inf/inf.
    pub fn fraction_at(&self, t: f64) -> f64 {
        let d0 = self.j_max - self.j0;
        let ekdt = (self.k * self.dt).exp();
        let emt = (-self.k * t).exp();
        let numerator = self.c_scale * d0 * self.j_max * self.j0 * (ekdt - 1.0) * emt;
        let denominator =
            d0 * d0 * emt * emt + d0 * self.j0 * (ekdt + 1.0) * emt + self.j0 * self.j0 * ekdt;
        numerator / denominator
    }

    /// Time of the participation peak:
    /// t_max = ln((J_max - J_0) / (J_0 e^(k dt / 2))) / k.
    pub fn peak_time(&self) -> f64 {
        ((self.j_max - self.j0) / (self.j0 * (self.k * self.dt / 2.0).exp())).ln() / self.k
    }

    /// Peak participating fraction:
    /// f_max = c J_max (e^(k dt / 2) - 1) / (e^(k dt / 2) + 1).
    pub fn peak_fraction(&self) -> f64 {
        let half = (self.k * self.dt / 2.0).exp();
        self.c_scale * self.j_max * (half - 1.0) / (half + 1.0)
    }
}
