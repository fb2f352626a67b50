//! Expected profit and loss of a lottery play: annuity-to-cash conversion,
//! jackpot sharing among simultaneous players, EV as a function of the
//! announced jackpot, and the linear-in-jackpot form whose root is the
//! break-even jackpot.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lottery::config::LotteryConfig;
use crate::lottery::odds::match_probability;
use crate::numeric::{format_sig17, CompensatedSum};

/// Annuity schedule: equal annual payments over `years` discounted at `rate`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnnuityTerms {
    years: u32,
    rate: f64,
}

impl AnnuityTerms {
    pub fn new(years: u32, rate: f64) -> Result<Self> {
        if years == 0 {
            return Err(Error::InvalidAnnuity("years must be at least 1".into()));
        }
        if !rate.is_finite() || rate < 0.0 {
            return Err(Error::InvalidAnnuity(format!(
                "rate must be finite and nonnegative, got {rate}"
            )));
        }
        Ok(AnnuityTerms { years, rate })
    }

    pub fn years(&self) -> u32 {
        self.years
    }

    pub fn rate(&self) -> f64 {
        self.rate
    }
}

/// Present value of an advertised annuitized jackpot per advertised dollar:
///
/// factor = years * rate / ((1 + rate)^years - 1)
///
/// A single payment or a zero rate means no discounting at all, so those
/// cases return exactly 1.
pub fn annuity_cash_factor(terms: &AnnuityTerms) -> f64 {
    if terms.years == 1 || terms.rate == 0.0 {
        return 1.0;
    }
    let years = f64::from(terms.years);
    years * terms.rate / (years * terms.rate.ln_1p()).exp_m1()
}

/// Outcome of sharing a jackpot among `m` independently chosen tickets.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JackpotSplit {
    /// Probability that at least one of the `m` tickets hits the jackpot.
    pub win_probability: f64,
    /// Expected fraction of the jackpot received by one winning ticket,
    /// conditional on at least one winner; `None` when no tickets play.
    pub split_coefficient: Option<f64>,
}

/// Win probability and expected split share for `m_tickets` tickets each
/// hitting with probability 1/`q_jackpot`.
///
/// win = 1 - (1 - 1/q)^m, computed as -expm1(m * ln1p(-1/q)).
///
/// The split coefficient is sum over K >= 1 of C(m, K)/K * p^K * (1-p)^(m-K)
/// divided by the win probability: the chance of K winners times the 1/K
/// share each receives. Terms are accumulated in log space with the binomial
/// log updated incrementally; differences of large ln-factorials would lose
/// about eight digits here.
pub fn jackpot_split(m_tickets: u64, q_jackpot: f64) -> Result<JackpotSplit> {
    if !q_jackpot.is_finite() || q_jackpot <= 1.0 {
        return Err(Error::InvalidConfig(format!(
            "jackpot odds must be finite and greater than 1, got {q_jackpot}"
        )));
    }
    if m_tickets == 0 {
        return Ok(JackpotSplit {
            win_probability: 0.0,
            split_coefficient: None,
        });
    }
    let m = m_tickets as f64;
    let ln_miss = (-1.0 / q_jackpot).ln_1p();
    let ln_hit = (1.0 / q_jackpot).ln();
    let win_probability = -(m * ln_miss).exp_m1();

    let mut share = CompensatedSum::new();
    let mut ln_binom = 0.0_f64;
    let mut k = 0u64;
    loop {
        k += 1;
        let kf = k as f64;
        ln_binom += ((m - kf + 1.0) / kf).ln();
        let ln_term = ln_binom - kf.ln() + kf * ln_hit + (m - kf) * ln_miss;
        let term = ln_term.exp();
        share.add(term);
        if term < 1e-18 * share.total() || k >= m_tickets {
            break;
        }
    }
    // share/win <= 1 exactly; float rounding can overshoot by an ulp at m=1.
    let split_coefficient = (share.total() / win_probability).min(1.0);
    Ok(JackpotSplit {
        win_probability,
        split_coefficient: Some(split_coefficient),
    })
}

/// Expected profit of one ticket when the announced jackpot is an annuity
/// value, `m_tickets` tickets play in total, and taxable prizes are reduced
/// by `tax`:
///
/// E = (1 - tax) * annuity * split * J / q_jackpot + fixed prizes - price.
///
/// The evaluated ticket itself always exists, so a ticket count of zero is
/// treated as one.
pub fn expected_pnl(
    config: &LotteryConfig,
    announced_jackpot: f64,
    m_tickets: u64,
    terms: &AnnuityTerms,
    tax: f64,
) -> Result<f64> {
    if !announced_jackpot.is_finite() {
        return Err(Error::NonFiniteArgument {
            name: "announced_jackpot",
            value: announced_jackpot,
        });
    }
    if announced_jackpot < 0.0 {
        return Err(Error::NegativeArgument {
            name: "announced_jackpot",
            value: announced_jackpot,
        });
    }
    validate_tax(tax)?;
    let split = jackpot_split(m_tickets.max(1), config.jackpot_odds())?;
    let coefficient = split
        .split_coefficient
        .expect("at least one ticket plays");
    let jackpot_tax = if config.jackpot_tier().taxable { 1.0 - tax } else { 1.0 };
    let jackpot_term = jackpot_tax
        * annuity_cash_factor(terms)
        * coefficient
        * announced_jackpot
        * match_probability(config, &config.jackpot_tier().matches)?;
    Ok(jackpot_term + fixed_prize_expectation(config, tax)? - config.price())
}

/// Expected profit when `effective_jackpot` is already the cash value one
/// winner keeps (annuity, splitting, and jackpot tax folded in); `tax`
/// reduces only the taxable fixed prizes:
///
/// E = J* / q_jackpot + fixed prizes - price.
pub fn expected_pnl_simple(
    config: &LotteryConfig,
    effective_jackpot: f64,
    tax: f64,
) -> Result<f64> {
    if !effective_jackpot.is_finite() {
        return Err(Error::NonFiniteArgument {
            name: "effective_jackpot",
            value: effective_jackpot,
        });
    }
    validate_tax(tax)?;
    let jackpot_term =
        effective_jackpot * match_probability(config, &config.jackpot_tier().matches)?;
    Ok(jackpot_term + fixed_prize_expectation(config, tax)? - config.price())
}

fn validate_tax(tax: f64) -> Result<()> {
    if !tax.is_finite() || !(0.0..1.0).contains(&tax) {
        return Err(Error::InvalidConfig(format!(
            "tax rate must lie in [0, 1), got {tax}"
        )));
    }
    Ok(())
}

fn fixed_prize_expectation(config: &LotteryConfig, tax: f64) -> Result<f64> {
    let mut sum = CompensatedSum::new();
    for tier in config.fixed_tiers() {
        let keep = if tier.taxable { 1.0 - tax } else { 1.0 };
        sum.add(tier.amount * keep * match_probability(config, &tier.matches)?);
    }
    Ok(sum.total())
}

/// EV of a play as a linear function of the announced jackpot:
/// E(J) = slope * split * J + intercept.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EraEquation {
    pub slope: f64,
    pub intercept: f64,
}

/// EV line for the 5/52 + 1/52 matrix (2002), 40% tax, 30-year annuity at 2%.
pub const MEGA_MILLIONS_2002_LINE: EraEquation = EraEquation {
    slope: 3.28e-9,
    intercept: -0.82,
};

/// EV line for the 5/56 + 1/46 matrix (2005), 40% tax, 30-year annuity at 2%.
pub const MEGA_MILLIONS_2005_LINE: EraEquation = EraEquation {
    slope: 2.53e-9,
    intercept: -0.85,
};

/// EV line for the 5/75 + 1/15 matrix (2013), 40% tax, 30-year annuity at 2%.
pub const MEGA_MILLIONS_2013_LINE: EraEquation = EraEquation {
    slope: 1.71e-9,
    intercept: -0.85,
};

/// Announced jackpot at which the EV line crosses zero for a given split
/// coefficient: J = -intercept / (slope * split).
pub fn breakeven_jackpot(equation: EraEquation, split_coefficient: f64) -> Result<f64> {
    if !equation.slope.is_finite() || equation.slope <= 0.0 {
        return Err(Error::InvalidConfig(format!(
            "slope must be finite and positive, got {}",
            equation.slope
        )));
    }
    if !equation.intercept.is_finite() {
        return Err(Error::NonFiniteArgument {
            name: "intercept",
            value: equation.intercept,
        });
    }
    if !split_coefficient.is_finite() || split_coefficient <= 0.0 {
        return Err(Error::InvalidConfig(format!(
            "split coefficient must be finite and positive, got {split_coefficient}"
        )));
    }
    Ok(-equation.intercept / (equation.slope * split_coefficient))
}

/// Tickets sold in a drawing, estimated from the jackpot increase since the
/// previous drawing: three tickets per dollar of cash-value increase.
pub fn estimate_tickets(jackpot_delta: f64, annuity_to_cash: f64) -> Result<u64> {
    for (name, value) in [
        ("jackpot_delta", jackpot_delta),
        ("annuity_to_cash", annuity_to_cash),
    ] {
        if !value.is_finite() {
            return Err(Error::NonFiniteArgument { name, value });
        }
        if value < 0.0 {
            return Err(Error::NegativeArgument { name, value });
        }
    }
    Ok((3.0 * jackpot_delta * annuity_to_cash).round() as u64)
}

/// Fraction of an adult population playing when `tickets` are sold and each
/// player buys `n_mean` tickets on average.
pub fn participation_fraction(
    tickets: u64,
    adult_population: u64,
    n_mean: f64,
) -> Result<f64> {
    if adult_population == 0 {
        return Err(Error::InvalidConfig(
            "adult population must be positive".into(),
        ));
    }
    if !n_mean.is_finite() || n_mean <= 0.0 {
        return Err(Error::InvalidConfig(format!(
            "mean tickets per player must be finite and positive, got {n_mean}"
        )));
    }
    Ok(tickets as f64 / (n_mean * adult_population as f64))
}

/// One cell of an EV surface over announced jackpots and ticket counts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvPoint {
    pub jackpot: f64,
    pub tickets: u64,
    pub ev: f64,
}

/// Evaluate [`expected_pnl`] over the cartesian grid of jackpots and ticket
/// counts. Rows vary jackpot first, matching the render order.
pub fn ev_surface(
    config: &LotteryConfig,
    jackpots: &[f64],
    ticket_counts: &[u64],
    terms: &AnnuityTerms,
    tax: f64,
) -> Result<Vec<EvPoint>> {
    let grid: Vec<(f64, u64)> = jackpots
        .iter()
        .flat_map(|&j| ticket_counts.iter().map(move |&m| (j, m)))
        .collect();
    grid.par_iter()
        .map(|&(jackpot, tickets)| {
            let ev = expected_pnl(config, jackpot, tickets, terms, tax)?;
            Ok(EvPoint {
                jackpot,
                tickets,
                ev,
            })
        })
        .collect()
}

/// Text table of an EV surface: one `jackpot tickets ev` line per point
/// under a `#` header, floats at 17 significant digits.
pub fn render_ev_surface(points: &[EvPoint]) -> String {
    let mut out = String::from("# jackpot tickets ev\n");
    for point in points {
        out.push_str(&format!(
            "{} {} {}\n",
            format_sig17(point.jackpot),
            point.tickets,
            format_sig17(point.ev)
        ));
    }
    out
}
