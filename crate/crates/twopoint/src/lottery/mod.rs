//! Lottery plays as two-point prospects at scale: hypergeometric match
//! odds, game descriptions, expected profit and loss with annuity, tax, and
//! jackpot-splitting effects, and jackpot growth over time.

pub mod config;
pub mod ev;
pub mod growth;
pub mod odds;

pub use config::{LotteryConfig, PrizeTier};
pub use ev::{
    annuity_cash_factor, breakeven_jackpot, estimate_tickets, ev_surface, expected_pnl,
    expected_pnl_simple, jackpot_split, participation_fraction, render_ev_surface, AnnuityTerms,
    EraEquation, EvPoint, JackpotSplit, MEGA_MILLIONS_2002_LINE, MEGA_MILLIONS_2005_LINE,
    MEGA_MILLIONS_2013_LINE,
};
pub use growth::{jackpot_value, participation_over_time, JackpotGrowthModel, ParticipationModel};
pub use odds::{
    all_match_vectors, any_prize_probability, match_probability, reciprocal_odds, FieldSpec,
};
