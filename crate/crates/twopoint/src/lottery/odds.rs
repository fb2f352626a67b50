//! Multi-field lottery odds: hypergeometric match probabilities and their
//! reciprocals.

use crate::error::{Error, Result};
use crate::lottery::config::LotteryConfig;
use crate::numeric::{binomial_u128, ln_binomial, CompensatedSum};

/// One drawing field: the player picks `picked` numbers out of `total` balls
/// and the house draws the same count from that field.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FieldSpec {
    total: u32,
    picked: u32,
}

impl FieldSpec {
    pub fn new(total: u32, picked: u32) -> Result<Self> {
        if picked < 1 || picked > total {
            return Err(Error::InvalidConfig(format!(
                "field must pick between 1 and its ball count {total}, got {picked}"
            )));
        }
        Ok(FieldSpec { total, picked })
    }

    pub fn total(&self) -> u32 {
        self.total
    }

    pub fn picked(&self) -> u32 {
        self.picked
    }
}

pub(crate) fn validate_matches(fields: &[FieldSpec], matches: &[u32]) -> Result<()> {
    if matches.len() != fields.len() {
        return Err(Error::MatchVectorLength {
            expected: fields.len(),
            got: matches.len(),
        });
    }
    for (index, (field, &matched)) in fields.iter().zip(matches).enumerate() {
        if matched > field.picked() {
            return Err(Error::InvalidMatchVector {
                field: index,
                matched: u64::from(matched),
                picked: u64::from(field.picked()),
            });
        }
    }
    Ok(())
}

/// Reciprocal odds for one match vector, exact while the integer products fit
/// u128, otherwise carried in log space.
enum OddsValue {
    Exact { numerator: u128, denominator: u128 },
    Logarithmic { ln_q: f64 },
}

fn exact_odds(fields: &[FieldSpec], matches: &[u32]) -> Option<OddsValue> {
    let mut numerator: u128 = 1;
    let mut denominator: u128 = 1;
    for (field, &matched) in fields.iter().zip(matches) {
        let total = u64::from(field.total());
        let picked = u64::from(field.picked());
        let matched = u64::from(matched);
        numerator = numerator.checked_mul(binomial_u128(total, picked)?)?;
        let ways = binomial_u128(picked, matched)?
            .checked_mul(binomial_u128(total - picked, picked - matched)?)?;
        denominator = denominator.checked_mul(ways)?;
    }
    Some(OddsValue::Exact {
        numerator,
        denominator,
    })
}

fn log_odds(fields: &[FieldSpec], matches: &[u32]) -> OddsValue {
    let mut ln_q = 0.0;
    for (field, &matched) in fields.iter().zip(matches) {
        let total = u64::from(field.total());
        let picked = u64::from(field.picked());
        let matched = u64::from(matched);
        ln_q += ln_binomial(total, picked);
        if picked - matched > total - picked {
            // Impossible pattern: fewer matches than the unpicked balls allow.
            return OddsValue::Logarithmic { ln_q: f64::INFINITY };
        }
        ln_q -= ln_binomial(picked, matched);
        ln_q -= ln_binomial(total - picked, picked - matched);
    }
    OddsValue::Logarithmic { ln_q }
}

fn odds_value(fields: &[FieldSpec], matches: &[u32]) -> Result<OddsValue> {
    validate_matches(fields, matches)?;
    Ok(exact_odds(fields, matches).unwrap_or_else(|| log_odds(fields, matches)))
}

/// Q = prod C(F, f) / prod [C(f, r) C(F-f, f-r)]: one chance in Q of hitting
/// the given match vector. Exact integers divide exactly; an impossible
/// pattern (zero probability) yields infinity.
pub fn reciprocal_odds(config: &LotteryConfig, matches: &[u32]) -> Result<f64> {
    match odds_value(config.fields(), matches)? {
        OddsValue::Exact {
            numerator,
            denominator,
        } => {
            if denominator == 0 {
                Ok(f64::INFINITY)
            } else if numerator % denominator == 0 {
                Ok((numerator / denominator) as f64)
            } else {
                Ok(numerator as f64 / denominator as f64)
            }
        }
        OddsValue::Logarithmic { ln_q } => Ok(ln_q.exp()),
    }
}

/// Probability of hitting the given match vector (the reciprocal of Q,
/// computed without the double rounding of 1/Q).
pub fn match_probability(config: &LotteryConfig, matches: &[u32]) -> Result<f64> {
    match odds_value(config.fields(), matches)? {
        OddsValue::Exact {
            numerator,
            denominator,
        } => Ok(denominator as f64 / numerator as f64),
        OddsValue::Logarithmic { ln_q } => Ok((-ln_q).exp()),
    }
}

/// Probability that a single ticket wins any listed prize, with its
/// reciprocal ("one chance in ...").
pub fn any_prize_probability(config: &LotteryConfig) -> (f64, f64) {
    let mut sum = CompensatedSum::new();
    for tier in config.tiers() {
        let probability = match_probability(config, &tier.matches)
            .expect("config tiers are validated at construction");
        sum.add(probability);
    }
    let probability = sum.total();
    (probability, 1.0 / probability)
}

/// Every match vector the field layout admits (0..=picked per field), in
/// lexicographic order; the hypergeometric probabilities over this set sum
/// to one.
pub fn all_match_vectors(fields: &[FieldSpec]) -> Vec<Vec<u32>> {
    let mut vectors = vec![Vec::new()];
    for field in fields {
        let mut extended = Vec::with_capacity(vectors.len() * (field.picked() as usize + 1));
        for prefix in &vectors {
            for matched in 0..=field.picked() {
                let mut next = prefix.clone();
                next.push(matched);
                extended.push(next);
            }
        }
        vectors = extended;
    }
    vectors
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lottery::config::LotteryConfig;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    #[test]
    fn field_spec_rejects_bad_picks() {
        assert!(FieldSpec::new(75, 0).is_err());
        assert!(FieldSpec::new(5, 6).is_err());
        let field = FieldSpec::new(75, 5).unwrap();
        assert_eq!(field.total(), 75);
        assert_eq!(field.picked(), 5);
    }

    #[test]
    fn mega_millions_2013_reciprocal_odds() {
        let config = LotteryConfig::mega_millions_2013();
        // Jackpot odds are an exact integer: C(75,5) * 15.
        assert_eq!(reciprocal_odds(&config, &[5, 1]).unwrap(), 258_890_850.0);
        let published = [
            ([5u32, 0u32], 18_492_203.571),
            ([4, 1], 739_688.143),
            ([4, 0], 52_834.867),
            ([3, 1], 10_720.118),
            ([3, 0], 765.723),
            ([2, 1], 472.946),
            ([1, 1], 56.471),
            ([0, 1], 21.391),
        ];
        for (matches, expected) in published {
            let q = reciprocal_odds(&config, &matches).unwrap();
            assert_abs_diff_eq!(q, expected, epsilon = 0.001);
        }
        // The non-integer tiers are exact rationals; spot-check two.
        assert_relative_eq!(
            reciprocal_odds(&config, &[5, 0]).unwrap(),
            129_445_425.0 / 7.0,
            max_relative = 1e-15
        );
        assert_relative_eq!(
            reciprocal_odds(&config, &[0, 1]).unwrap(),
            43_148_475.0 / 2_017_169.0,
            max_relative = 1e-15
        );
    }

    #[test]
    fn powerball_reciprocal_odds() {
        let config = LotteryConfig::powerball();
        assert_eq!(reciprocal_odds(&config, &[5, 1]).unwrap(), 175_223_510.0);
        let published = [
            ([5u32, 0u32], 5_153_632.647),
            ([4, 1], 648_975.963),
            ([4, 0], 19_087.528),
            ([3, 1], 12_244.829),
            ([3, 0], 360.142),
            ([2, 1], 706.432),
            ([1, 1], 110.813),
            ([0, 1], 55.406),
        ];
        for (matches, expected) in published {
            let q = reciprocal_odds(&config, &matches).unwrap();
            assert_abs_diff_eq!(q, expected, epsilon = 0.001);
        }
    }

    #[test]
    fn invalid_match_vectors_rejected() {
        let config = LotteryConfig::mega_millions_2013();
        assert!(matches!(
            reciprocal_odds(&config, &[6, 1]),
            Err(Error::InvalidMatchVector { field: 0, .. })
        ));
        assert!(matches!(
            reciprocal_odds(&config, &[5, 2]),
            Err(Error::InvalidMatchVector { field: 1, .. })
        ));
        assert!(matches!(
            reciprocal_odds(&config, &[5]),
            Err(Error::MatchVectorLength {
                expected: 2,
                got: 1
            })
        ));
    }

    #[test]
    fn impossible_pattern_has_infinite_odds() {
        // Picking all five of five balls always matches all five; fewer
        // matches cannot occur.
        let fields = vec![FieldSpec::new(5, 5).unwrap()];
        let tiers = vec![
            crate::lottery::config::PrizeTier::jackpot(vec![5]),
            crate::lottery::config::PrizeTier::fixed(vec![0], 1.0),
        ];
        let config = LotteryConfig::new("degenerate", fields, 1.0, tiers).unwrap();
        assert_eq!(reciprocal_odds(&config, &[5]).unwrap(), 1.0);
        assert_eq!(reciprocal_odds(&config, &[0]).unwrap(), f64::INFINITY);
        assert_eq!(match_probability(&config, &[0]).unwrap(), 0.0);
    }

    #[test]
    fn any_prize_probability_mega_millions() {
        let config = LotteryConfig::mega_millions_2013();
        let (probability, one_in) = any_prize_probability(&config);
        // Exact value is 2933734/43148475.
        assert_relative_eq!(
            probability,
            2_933_734.0 / 43_148_475.0,
            max_relative = 1e-14
        );
        assert_abs_diff_eq!(probability, 0.0679916034, epsilon = 1e-9);
        assert_abs_diff_eq!(one_in, 14.707698, epsilon = 1e-6);
    }

    #[test]
    fn any_prize_probability_powerball() {
        let config = LotteryConfig::powerball();
        let (probability, one_in) = any_prize_probability(&config);
        assert_relative_eq!(probability, 0.031400695032304742, max_relative = 1e-13);
        assert_relative_eq!(one_in, 31.846428844049768, max_relative = 1e-13);
    }

    #[test]
    fn sure_prize_config_reaches_probability_one() {
        // One field, pick 1 of 1: the single ball always matches.
        let fields = vec![FieldSpec::new(1, 1).unwrap()];
        let tiers = vec![crate::lottery::config::PrizeTier::jackpot(vec![1])];
        let config = LotteryConfig::new("sure thing", fields, 1.0, tiers).unwrap();
        assert_eq!(reciprocal_odds(&config, &[1]).unwrap(), 1.0);
        let (probability, one_in) = any_prize_probability(&config);
        assert_eq!(probability, 1.0);
        assert_eq!(one_in, 1.0);
    }

    #[test]
    fn winning_ticket_count_back_solve() {
        // 1,440,661 winning tickets in one drawing implies about 21.2 million
        // sold when every ticket wins with the any-prize probability.
        let config = LotteryConfig::mega_millions_2013();
        let (_, one_in) = any_prize_probability(&config);
        let tickets = 1_440_661.0 * one_in;
        assert_relative_eq!(tickets, 21_188_807.554459605, max_relative = 1e-12);
        assert_eq!(tickets.floor(), 21_188_807.0);
    }

    #[test]
    fn match_probabilities_sum_to_one() {
        for config in [
            LotteryConfig::mega_millions_2013(),
            LotteryConfig::mega_millions_2005(),
            LotteryConfig::mega_millions_2002(),
            LotteryConfig::powerball(),
        ] {
            let mut sum = CompensatedSum::new();
            for vector in all_match_vectors(config.fields()) {
                sum.add(match_probability(&config, &vector).unwrap());
            }
            assert_abs_diff_eq!(sum.total(), 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn exact_and_log_space_routes_agree() {
        // The hypergeometric closed form per field, multiplied in plain
        // floating point, must agree with the exact-integer route.
        let config = LotteryConfig::mega_millions_2013();
        for vector in all_match_vectors(config.fields()) {
            let exact = match_probability(&config, &vector).unwrap();
            let mut product = 1.0;
            for (field, &matched) in config.fields().iter().zip(&vector) {
                let total = u64::from(field.total());
                let picked = u64::from(field.picked());
                let matched = u64::from(matched);
                if picked - matched > total - picked {
                    product = 0.0;
                    break;
                }
                let ln = ln_binomial(picked, matched)
                    + ln_binomial(total - picked, picked - matched)
                    - ln_binomial(total, picked);
                product *= ln.exp();
            }
            assert_relative_eq!(exact, product, max_relative = 1e-12);
        }
    }
}
