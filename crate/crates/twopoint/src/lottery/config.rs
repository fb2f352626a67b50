//! Lottery game descriptions: field layout, ticket price, prize tiers, the
//! named game matrices used throughout, and a plain-text file format for
//! custom games.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::lottery::odds::{reciprocal_odds, validate_matches, FieldSpec};
use crate::numeric::format_sig17;

/// One prize tier: the match vector that wins it, the fixed award, and tax
/// treatment. The jackpot tier's award varies per drawing and is supplied to
/// the expectation functions instead of being stored here.
#[derive(Debug, Clone, PartialEq)]
pub struct PrizeTier {
    pub matches: Vec<u32>,
    pub amount: f64,
    pub jackpot: bool,
    pub taxable: bool,
}

impl PrizeTier {
    /// Fixed prize, untaxed unless marked with [`PrizeTier::taxed`].
    pub fn fixed(matches: Vec<u32>, amount: f64) -> Self {
        PrizeTier {
            matches,
            amount,
            jackpot: false,
            taxable: false,
        }
    }

    /// The jackpot tier. Jackpots are taxable.
    pub fn jackpot(matches: Vec<u32>) -> Self {
        PrizeTier {
            matches,
            amount: 0.0,
            jackpot: true,
            taxable: true,
        }
    }

    pub fn taxed(mut self) -> Self {
        self.taxable = true;
        self
    }
}

/// A lottery game: immutable after construction, so expectation surfaces can
/// be evaluated concurrently against a shared reference.
#[derive(Debug, Clone, PartialEq)]
pub struct LotteryConfig {
    name: String,
    fields: Vec<FieldSpec>,
    price: f64,
    tiers: Vec<PrizeTier>,
}

impl LotteryConfig {
    pub fn new(
        name: impl Into<String>,
        fields: Vec<FieldSpec>,
        price: f64,
        tiers: Vec<PrizeTier>,
    ) -> Result<Self> {
        let name = name.into();
        if name.is_empty() || name.contains('\n') || name.contains('\r') {
            return Err(Error::InvalidConfig(
                "name must be a nonempty single line".into(),
            ));
        }
        if fields.is_empty() {
            return Err(Error::InvalidConfig("at least one field is required".into()));
        }
        if !price.is_finite() || price < 0.0 {
            return Err(Error::InvalidConfig(format!(
                "ticket price must be finite and nonnegative, got {price}"
            )));
        }
        let mut jackpots = 0usize;
        for (index, tier) in tiers.iter().enumerate() {
            validate_matches(&fields, &tier.matches)?;
            if !tier.amount.is_finite() || tier.amount < 0.0 {
                return Err(Error::InvalidConfig(format!(
                    "prize amount must be finite and nonnegative, got {}",
                    tier.amount
                )));
            }
            if tier.jackpot {
                jackpots += 1;
            }
            if tiers[..index].iter().any(|other| other.matches == tier.matches) {
                return Err(Error::InvalidConfig(format!(
                    "duplicate prize tier for match vector {:?}",
                    tier.matches
                )));
            }
        }
        if jackpots != 1 {
            return Err(Error::InvalidConfig(format!(
                "exactly one jackpot tier is required, got {jackpots}"
            )));
        }
        Ok(LotteryConfig {
            name,
            fields,
            price,
            tiers,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn fields(&self) -> &[FieldSpec] {
        &self.fields
    }

    pub fn price(&self) -> f64 {
        self.price
    }

    pub fn tiers(&self) -> &[PrizeTier] {
        &self.tiers
    }

    pub fn jackpot_tier(&self) -> &PrizeTier {
        self.tiers
            .iter()
            .find(|tier| tier.jackpot)
            .expect("constructor guarantees one jackpot tier")
    }

    pub fn fixed_tiers(&self) -> impl Iterator<Item = &PrizeTier> {
        self.tiers.iter().filter(|tier| !tier.jackpot)
    }

    /// Reciprocal odds of the jackpot tier.
    pub fn jackpot_odds(&self) -> f64 {
        reciprocal_odds(self, &self.jackpot_tier().matches)
            .expect("jackpot tier is validated at construction")
    }

    /// Mega Millions matrix in force from October 2013: 5 of 75 plus 1 of 15,
    /// $1 a play. The jackpot and the $1,000,000 and $5,000 prizes are
    /// taxable.
    pub fn mega_millions_2013() -> Self {
        LotteryConfig::new(
            "Mega Millions 2013",
            vec![
                FieldSpec::new(75, 5).expect("static field layout"),
                FieldSpec::new(15, 1).expect("static field layout"),
            ],
            1.0,
            vec![
                PrizeTier::jackpot(vec![5, 1]),
                PrizeTier::fixed(vec![5, 0], 1_000_000.0).taxed(),
                PrizeTier::fixed(vec![4, 1], 5_000.0).taxed(),
                PrizeTier::fixed(vec![4, 0], 500.0),
                PrizeTier::fixed(vec![3, 1], 50.0),
                PrizeTier::fixed(vec![3, 0], 5.0),
                PrizeTier::fixed(vec![2, 1], 5.0),
                PrizeTier::fixed(vec![1, 1], 2.0),
                PrizeTier::fixed(vec![0, 1], 1.0),
            ],
        )
        .expect("static configuration is valid")
    }

    /// Mega Millions matrix 2005-2013: 5 of 56 plus 1 of 46, $1 a play.
    pub fn mega_millions_2005() -> Self {
        LotteryConfig::new(
            "Mega Millions 2005",
            vec![
                FieldSpec::new(56, 5).expect("static field layout"),
                FieldSpec::new(46, 1).expect("static field layout"),
            ],
            1.0,
            legacy_mega_millions_tiers(),
        )
        .expect("static configuration is valid")
    }

    /// Mega Millions matrix 2002-2005: 5 of 52 plus 1 of 52, $1 a play.
    pub fn mega_millions_2002() -> Self {
        LotteryConfig::new(
            "Mega Millions 2002",
            vec![
                FieldSpec::new(52, 5).expect("static field layout"),
                FieldSpec::new(52, 1).expect("static field layout"),
            ],
            1.0,
            legacy_mega_millions_tiers(),
        )
        .expect("static configuration is valid")
    }

    /// Powerball matrix: 5 of 59 plus 1 of 35, $2 a play.
    pub fn powerball() -> Self {
        LotteryConfig::new(
            "Powerball",
            vec![
                FieldSpec::new(59, 5).expect("static field layout"),
                FieldSpec::new(35, 1).expect("static field layout"),
            ],
            2.0,
            vec![
                PrizeTier::jackpot(vec![5, 1]),
                PrizeTier::fixed(vec![5, 0], 1_000_000.0).taxed(),
                PrizeTier::fixed(vec![4, 1], 10_000.0).taxed(),
                PrizeTier::fixed(vec![4, 0], 100.0),
                PrizeTier::fixed(vec![3, 1], 100.0),
                PrizeTier::fixed(vec![3, 0], 7.0),
                PrizeTier::fixed(vec![2, 1], 7.0),
                PrizeTier::fixed(vec![1, 1], 4.0),
                PrizeTier::fixed(vec![0, 1], 4.0),
            ],
        )
        .expect("static configuration is valid")
    }

    /// Serialize to the versioned plain-text format. Amounts carry 17
    /// significant digits, so a write/parse cycle reproduces every value
    /// bit for bit.
    pub fn to_text(&self) -> String {
        let mut text = String::new();
        text.push_str("# twopoint lottery game\n");
        text.push_str("version 1\n");
        let _ = writeln!(text, "name {}", self.name);
        let _ = writeln!(text, "price {}", format_sig17(self.price));
        for field in &self.fields {
            let _ = writeln!(text, "field {} {}", field.total(), field.picked());
        }
        for tier in &self.tiers {
            let matches = tier
                .matches
                .iter()
                .map(|m| m.to_string())
                .collect::<Vec<_>>()
                .join(",");
            let mut line = format!("tier {matches} {}", format_sig17(tier.amount));
            if tier.jackpot {
                line.push_str(" jackpot");
            }
            if tier.taxable {
                line.push_str(" taxable");
            }
            let _ = writeln!(text, "{line}");
        }
        text
    }

    /// Parse the plain-text format written by [`LotteryConfig::to_text`].
    pub fn from_text(text: &str) -> Result<Self> {
        let mut version_seen = false;
        let mut name: Option<String> = None;
        let mut price: Option<f64> = None;
        let mut fields = Vec::new();
        let mut tiers = Vec::new();
        for (number, raw) in text.lines().enumerate() {
            let line = raw.trim_end();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |what: &str| {
                Error::InvalidConfig(format!("line {}: {what}: {line}", number + 1))
            };
            if !version_seen {
                if line != "version 1" {
                    return Err(bad("expected `version 1` as the first entry"));
                }
                version_seen = true;
                continue;
            }
            if let Some(rest) = line.strip_prefix("name ") {
                name = Some(rest.to_string());
                continue;
            }
            let mut tokens = line.split_whitespace();
            match tokens.next() {
                Some("price") => {
                    let value = tokens
                        .next()
                        .ok_or_else(|| bad("price needs a value"))?
                        .parse::<f64>()
                        .map_err(|_| bad("unreadable price"))?;
                    price = Some(value);
                }
                Some("field") => {
                    let total = tokens
                        .next()
                        .and_then(|t| t.parse::<u32>().ok())
                        .ok_or_else(|| bad("field needs `total picked`"))?;
                    let picked = tokens
                        .next()
                        .and_then(|t| t.parse::<u32>().ok())
                        .ok_or_else(|| bad("field needs `total picked`"))?;
                    fields.push(FieldSpec::new(total, picked)?);
                }
                Some("tier") => {
                    let matches = tokens
                        .next()
                        .ok_or_else(|| bad("tier needs a match vector"))?
                        .split(',')
                        .map(|m| m.parse::<u32>().map_err(|_| bad("unreadable match count")))
                        .collect::<Result<Vec<u32>>>()?;
                    let amount = tokens
                        .next()
                        .ok_or_else(|| bad("tier needs an amount"))?
                        .parse::<f64>()
                        .map_err(|_| bad("unreadable amount"))?;
                    let mut tier = PrizeTier::fixed(matches, amount);
                    for flag in tokens {
                        match flag {
                            "jackpot" => tier.jackpot = true,
                            "taxable" => tier.taxable = true,
                            other => return Err(bad(&format!("unknown tier flag `{other}`"))),
                        }
                    }
                    tiers.push(tier);
                }
                Some(other) => return Err(bad(&format!("unknown key `{other}`"))),
                None => unreachable!("blank lines are skipped"),
            }
        }
        if !version_seen {
            return Err(Error::InvalidConfig("missing `version 1` header".into()));
        }
        let name = name.ok_or_else(|| Error::InvalidConfig("missing `name` entry".into()))?;
        let price = price.ok_or_else(|| Error::InvalidConfig("missing `price` entry".into()))?;
        LotteryConfig::new(name, fields, price, tiers)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_text())?;
        Ok(())
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        LotteryConfig::from_text(&text)
    }
}

/// The eight prizes after the jackpot shared by the 2002 and 2005 Mega
/// Millions matrices; the two largest fixed prizes are taxable.
fn legacy_mega_millions_tiers() -> Vec<PrizeTier> {
    vec![
        PrizeTier::jackpot(vec![5, 1]),
        PrizeTier::fixed(vec![5, 0], 250_000.0).taxed(),
        PrizeTier::fixed(vec![4, 1], 10_000.0).taxed(),
        PrizeTier::fixed(vec![4, 0], 150.0),
        PrizeTier::fixed(vec![3, 1], 150.0),
        PrizeTier::fixed(vec![3, 0], 7.0),
        PrizeTier::fixed(vec![2, 1], 10.0),
        PrizeTier::fixed(vec![1, 1], 3.0),
        PrizeTier::fixed(vec![0, 1], 2.0),
    ]
}
