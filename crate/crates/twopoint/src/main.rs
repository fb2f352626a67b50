//! Command line interface to the two-point prospect toolkit.
//!
//! Output is either whitespace-delimited columns (tables carry a `#`-prefixed
//! header line) or a single JSON object. Floats always render with 17
//! significant digits, so identical invocations are bit-identical. Results
//! that are mathematically undefined print the literal token `undefined`,
//! never 0. Exit codes: 0 success, 2 usage error, 1 domain error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use twopoint::choice::tables::{combination_row, CombinationClass, Rel, RowPrediction, Sym};
use twopoint::choice::{
    classify_pair, design_pair_with_skewness, deviation_bounds, difference_stats,
    enumerate_canonical_combinations, f1_of_gamma, limit_fraction, predict_fractions,
    ChoiceVerdict, DeviationParams, FractionPrediction,
};
use twopoint::elicitation::{
    certainty_equivalent, geometric_ladder, refine_linear_ladder, DEFAULT_INTERIOR_COUNT,
};
use twopoint::entropy::{binomial_entropy_exact, binomial_entropy_stirling, two_point_entropy};
use twopoint::fitting::{fit_jackpot_curve, CurveFamily, FixedCurve, JackpotPoint};
use twopoint::lottery::{
    annuity_cash_factor, any_prize_probability, breakeven_jackpot, ev_surface, expected_pnl,
    jackpot_split, match_probability, participation_over_time, reciprocal_odds, AnnuityTerms,
    EraEquation, JackpotGrowthModel, LotteryConfig, MEGA_MILLIONS_2002_LINE,
    MEGA_MILLIONS_2005_LINE, MEGA_MILLIONS_2013_LINE,
};
use twopoint::montecarlo::{empirical_coverage, simulate_sample_means};
use twopoint::numeric::format_sig17;
use twopoint::prospect::{sample_mean_moments, two_point_moments};
use twopoint::{bounds, datasets, MomentSet, Prospect, TrialCount};

#[derive(Parser)]
#[command(
    name = "twopoint",
    version,
    about = "Toolkit for decision making under risk with two-point prospects",
    long_about = "Toolkit for decision making under risk with two-point prospects: moments \
                  of sample means, entropy, choice classification and prediction, certainty \
                  equivalent elicitation, lottery odds and expected values, trial-count \
                  bounds, and Monte Carlo simulation."
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Columns)]
    format: Format,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Columns,
}

#[derive(Subcommand)]
enum Cmd {
    /// Moments of a two-point prospect and of its sample mean.
    #[command(subcommand)]
    Prospect(ProspectCmd),
    /// Entropy of two-point and binomial schemas.
    #[command(subcommand)]
    Entropy(EntropyCmd),
    /// Classification and prediction of choices between two prospects.
    #[command(subcommand)]
    Choice(ChoiceCmd),
    /// Certainty equivalent elicitation ladders.
    #[command(subcommand)]
    Elicit(ElicitCmd),
    /// Lottery odds, expected values, and jackpot dynamics.
    #[command(subcommand)]
    Lottery(LotteryCmd),
    /// Distribution-free trial-count bounds.
    #[command(subcommand)]
    Bounds(BoundsCmd),
    /// Monte Carlo simulation of sample means.
    #[command(subcommand)]
    Sim(SimCmd),
    /// Embedded observation datasets.
    #[command(subcommand)]
    Data(DataCmd),
}

/// A two-point prospect: a_p with probability p, else a_q.
#[derive(Args)]
struct ProspectArgs {
    /// Outcome paired with probability p.
    #[arg(allow_negative_numbers = true, long)]
    ap: f64,
    /// Alternative outcome, paired with probability 1 - p.
    #[arg(allow_negative_numbers = true, long)]
    aq: f64,
    /// Probability of the --ap outcome.
    #[arg(allow_negative_numbers = true, long)]
    p: f64,
}

impl ProspectArgs {
    fn build(&self) -> twopoint::Result<Prospect> {
        Prospect::new(self.ap, self.aq, self.p)
    }
}

/// An ordered pair of two-point prospects.
#[derive(Args)]
struct PairArgs {
    /// First prospect: outcome paired with probability p1.
    #[arg(allow_negative_numbers = true, long)]
    ap1: f64,
    /// First prospect: alternative outcome.
    #[arg(allow_negative_numbers = true, long)]
    aq1: f64,
    /// First prospect: probability of --ap1.
    #[arg(allow_negative_numbers = true, long)]
    p1: f64,
    /// Second prospect: outcome paired with probability p2.
    #[arg(allow_negative_numbers = true, long)]
    ap2: f64,
    /// Second prospect: alternative outcome.
    #[arg(allow_negative_numbers = true, long)]
    aq2: f64,
    /// Second prospect: probability of --ap2.
    #[arg(allow_negative_numbers = true, long)]
    p2: f64,
}

impl PairArgs {
    fn build(&self) -> twopoint::Result<(Prospect, Prospect)> {
        Ok((
            Prospect::new(self.ap1, self.aq1, self.p1)?,
            Prospect::new(self.ap2, self.aq2, self.p2)?,
        ))
    }
}

#[derive(Subcommand)]
enum ProspectCmd {
    /// Mean, variance, skewness, kurtosis, and entropy of one play.
    Moments(ProspectArgs),
    /// The same moments for the mean of n independent plays.
    SampleMean {
        #[command(flatten)]
        prospect: ProspectArgs,
        /// Number of independent plays averaged.
        #[arg(long)]
        n: u64,
    },
}

#[derive(Subcommand)]
enum EntropyCmd {
    /// Entropy in bits of a two-outcome schema with probabilities p, 1-p.
    TwoPoint {
        /// Probability of the first outcome.
        #[arg(allow_negative_numbers = true, long)]
        p: f64,
    },
    /// Exact entropy in bits of the binomial success-count schema.
    Binomial {
        /// Success probability per trial.
        #[arg(allow_negative_numbers = true, long)]
        p: f64,
        /// Number of trials.
        #[arg(long)]
        n: u64,
    },
    /// Large-n entropy approximation from the normal limit.
    Stirling {
        /// Success probability per trial.
        #[arg(allow_negative_numbers = true, long)]
        p: f64,
        /// Number of trials.
        #[arg(long)]
        n: u64,
    },
}

#[derive(Subcommand)]
enum ChoiceCmd {
    /// Classify a prospect pair by interval pattern and probability case.
    Classify(PairArgs),
    /// Long-run choice fraction for n1, n2 plays under deviation band (a, b).
    Predict {
        #[command(flatten)]
        pair: PairArgs,
        /// Plays of the first prospect per comparison.
        #[arg(long)]
        n1: u64,
        /// Plays of the second prospect per comparison.
        #[arg(long)]
        n2: u64,
        /// Upper deviation multiple of sigma.
        #[arg(allow_negative_numbers = true, long)]
        a: f64,
        /// Lower deviation multiple of sigma.
        #[arg(allow_negative_numbers = true, long)]
        b: f64,
    },
    /// Choice fraction in the infinite-trials limit (by mean alone).
    Limit(PairArgs),
    /// Moments, support, and admissible deviation multiples of the
    /// sample-mean difference.
    Bounds {
        #[command(flatten)]
        pair: PairArgs,
        /// Plays of the first prospect per comparison.
        #[arg(long)]
        n1: u64,
        /// Plays of the second prospect per comparison.
        #[arg(long)]
        n2: u64,
    },
    /// Enumerate endpoint ordering patterns and the admissible decision rows.
    Enumerate,
    /// Design a risky-versus-sure pair hitting a target mean, variance, and
    /// skewness of the difference.
    Design {
        /// Target mean of the sample-mean difference.
        #[arg(allow_negative_numbers = true, long)]
        mean: f64,
        /// Target variance of the sample-mean difference.
        #[arg(allow_negative_numbers = true, long)]
        variance: f64,
        /// Target skewness of the sample-mean difference.
        #[arg(allow_negative_numbers = true, long)]
        gamma1: f64,
        /// Plays averaged per comparison.
        #[arg(long)]
        n: u64,
        /// Unfavorable outcome of the risky prospect.
        #[arg(allow_negative_numbers = true, long, default_value_t = 0.0)]
        aq1: f64,
    },
    /// Choice fraction as a function of target skewness at fixed mean and
    /// variance.
    GammaSweep {
        /// Target mean of the sample-mean difference.
        #[arg(allow_negative_numbers = true, long)]
        mean: f64,
        /// Target variance of the sample-mean difference.
        #[arg(allow_negative_numbers = true, long)]
        variance: f64,
        /// Plays averaged per comparison.
        #[arg(long)]
        n: u64,
        /// Deviation band scale: a = const-a * a_max.
        #[arg(allow_negative_numbers = true, long, default_value_t = 1.0)]
        const_a: f64,
        /// Deviation band scale: b = const-b * b_max.
        #[arg(allow_negative_numbers = true, long, default_value_t = 1.0)]
        const_b: f64,
        /// Lowest skewness in the sweep.
        #[arg(allow_negative_numbers = true, long)]
        gamma_min: f64,
        /// Highest skewness in the sweep.
        #[arg(allow_negative_numbers = true, long)]
        gamma_max: f64,
        /// Number of grid intervals between the endpoints.
        #[arg(long, default_value_t = 20)]
        steps: u32,
    },
}

#[derive(Subcommand)]
enum ElicitCmd {
    /// Geometric ladder of sure amounts between two endpoints.
    Ladder {
        /// Largest sure amount offered.
        #[arg(allow_negative_numbers = true, long)]
        high: f64,
        /// Smallest sure amount offered.
        #[arg(allow_negative_numbers = true, long)]
        low: f64,
        /// Rungs strictly between the endpoints.
        #[arg(long, default_value_t = DEFAULT_INTERIOR_COUNT)]
        rungs: usize,
    },
    /// Linear refinement ladder around a bracketing pair of responses.
    Refine {
        /// Lowest sure amount the respondent accepted.
        #[arg(allow_negative_numbers = true, long)]
        accepted: f64,
        /// Highest sure amount the respondent rejected.
        #[arg(allow_negative_numbers = true, long)]
        rejected: f64,
        /// Rungs strictly between the widened endpoints.
        #[arg(long, default_value_t = DEFAULT_INTERIOR_COUNT)]
        rungs: usize,
    },
    /// Certainty equivalent of a prospect for a threshold respondent who
    /// accepts any sure amount at or above the threshold.
    Ce {
        #[command(flatten)]
        prospect: ProspectArgs,
        /// Smallest sure amount the respondent accepts.
        #[arg(allow_negative_numbers = true, long)]
        threshold: f64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Game {
    #[value(name = "megamillions-2013")]
    MegaMillions2013,
    #[value(name = "megamillions-2005")]
    MegaMillions2005,
    #[value(name = "megamillions-2002")]
    MegaMillions2002,
    #[value(name = "powerball")]
    Powerball,
}

impl Game {
    fn config(self) -> LotteryConfig {
        match self {
            Game::MegaMillions2013 => LotteryConfig::mega_millions_2013(),
            Game::MegaMillions2005 => LotteryConfig::mega_millions_2005(),
            Game::MegaMillions2002 => LotteryConfig::mega_millions_2002(),
            Game::Powerball => LotteryConfig::powerball(),
        }
    }
}

/// Which lottery to compute for: a built-in game or a config file.
#[derive(Args)]
struct GameArgs {
    /// Built-in game.
    #[arg(long, value_enum, required_unless_present = "config", conflicts_with = "config")]
    game: Option<Game>,
    /// Game description file written by LotteryConfig::save.
    #[arg(long, value_name = "PATH")]
    config: Option<PathBuf>,
}

impl GameArgs {
    fn load(&self) -> twopoint::Result<LotteryConfig> {
        match (&self.game, &self.config) {
            (_, Some(path)) => LotteryConfig::load(path),
            (Some(game), None) => Ok(game.config()),
            (None, None) => unreachable!("clap enforces one source"),
        }
    }
}

/// Annuity and tax assumptions for expected-value calculations.
#[derive(Args)]
struct PayoutArgs {
    /// Annuity horizon in years.
    #[arg(long, default_value_t = 30)]
    years: u32,
    /// Annual discount rate.
    #[arg(allow_negative_numbers = true, long, default_value_t = 0.02)]
    rate: f64,
    /// Tax rate applied to taxable prizes.
    #[arg(allow_negative_numbers = true, long, default_value_t = 0.4)]
    tax: f64,
}

impl PayoutArgs {
    fn terms(&self) -> twopoint::Result<AnnuityTerms> {
        AnnuityTerms::new(self.years, self.rate)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Era {
    #[value(name = "2002")]
    Y2002,
    #[value(name = "2005")]
    Y2005,
    #[value(name = "2013")]
    Y2013,
}

impl Era {
    fn line(self) -> EraEquation {
        match self {
            Era::Y2002 => MEGA_MILLIONS_2002_LINE,
            Era::Y2005 => MEGA_MILLIONS_2005_LINE,
            Era::Y2013 => MEGA_MILLIONS_2013_LINE,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Logistic,
    Exponential,
}

#[derive(Subcommand)]
enum LotteryCmd {
    /// Odds of a match vector, or of every prize tier.
    Odds {
        #[command(flatten)]
        source: GameArgs,
        /// Matched count per field, e.g. 5,1. Omit for all tiers.
        #[arg(long = "match", value_delimiter = ',', num_args = 1..)]
        matches: Option<Vec<u32>>,
    },
    /// Expected profit or loss of one ticket.
    Ev {
        #[command(flatten)]
        source: GameArgs,
        /// Announced annuity jackpot.
        #[arg(allow_negative_numbers = true, long)]
        jackpot: f64,
        /// Tickets in play for the drawing.
        #[arg(long)]
        tickets: u64,
        #[command(flatten)]
        payout: PayoutArgs,
    },
    /// Expected value over a grid of jackpots and ticket counts.
    EvSurface {
        #[command(flatten)]
        source: GameArgs,
        /// Announced jackpots, comma separated.
        #[arg(allow_negative_numbers = true, long, value_delimiter = ',', num_args = 1..)]
        jackpots: Vec<f64>,
        /// Ticket counts, comma separated.
        #[arg(allow_negative_numbers = true, long, value_delimiter = ',', num_args = 1..)]
        tickets: Vec<f64>,
        #[command(flatten)]
        payout: PayoutArgs,
    },
    /// Jackpot at which the expected value of a ticket reaches zero.
    Breakeven {
        /// Era of the fitted expected-value line.
        #[arg(long, value_enum, required_unless_present = "slope", conflicts_with_all = ["slope", "intercept"])]
        era: Option<Era>,
        /// Slope of a custom expected-value line (per jackpot dollar).
        #[arg(allow_negative_numbers = true, long, requires = "intercept")]
        slope: Option<f64>,
        /// Intercept of a custom expected-value line.
        #[arg(allow_negative_numbers = true, long, requires = "slope")]
        intercept: Option<f64>,
        /// Expected jackpot share kept by a winner after splitting.
        #[arg(allow_negative_numbers = true, long, default_value_t = 1.0)]
        coefficient: f64,
    },
    /// Win probability and expected jackpot share for m tickets.
    Split {
        /// Tickets in play for the drawing.
        #[arg(long)]
        tickets: u64,
        /// Reciprocal jackpot odds; defaults to the game's.
        #[arg(allow_negative_numbers = true, long, required_unless_present_any = ["game", "config"])]
        q: Option<f64>,
        #[command(flatten)]
        source: OptionalGameArgs,
    },
    /// Fit a growth curve to a run of rising jackpots.
    FitJackpot {
        /// Growth family.
        #[arg(long, value_enum, default_value_t = Family::Logistic)]
        family: Family,
        /// Hold the starting jackpot fixed at this value.
        #[arg(allow_negative_numbers = true, long)]
        j0: Option<f64>,
        /// Hold the ceiling fixed at this value (logistic only).
        #[arg(allow_negative_numbers = true, long)]
        jmax: Option<f64>,
        /// Jackpot run CSV (date,t_years,jackpot); defaults to the embedded
        /// 2015 Mega Millions run.
        #[arg(long, value_name = "PATH")]
        csv: Option<PathBuf>,
    },
    /// Participation fraction over time implied by logistic jackpot growth.
    Participation {
        /// Logistic growth rate per year.
        #[arg(allow_negative_numbers = true, long)]
        k: f64,
        /// Starting jackpot.
        #[arg(allow_negative_numbers = true, long, default_value_t = 15e6)]
        j0: f64,
        /// Jackpot ceiling.
        #[arg(allow_negative_numbers = true, long, default_value_t = 5e8)]
        jmax: f64,
        /// Tickets per adult per jackpot dollar.
        #[arg(allow_negative_numbers = true, long, default_value_t = 1.3e-9)]
        c_scale: f64,
        /// Time between drawings in years.
        #[arg(allow_negative_numbers = true, long, default_value_t = 0.011)]
        dt: f64,
        /// Tabulate the fraction from t = 0 to this horizon (years).
        #[arg(allow_negative_numbers = true, long)]
        until: Option<f64>,
        /// Number of table intervals; omit for no table.
        #[arg(long)]
        steps: Option<u32>,
    },
}

/// Optional game source for commands with another way to get the odds.
#[derive(Args)]
struct OptionalGameArgs {
    /// Built-in game.
    #[arg(long, value_enum, conflicts_with_all = ["config", "q"])]
    game: Option<Game>,
    /// Game description file written by LotteryConfig::save.
    #[arg(long, value_name = "PATH", conflicts_with = "q")]
    config: Option<PathBuf>,
}

#[derive(Subcommand)]
enum BoundsCmd {
    /// Smallest trial count guaranteeing the sample mean stays within
    /// epsilon of the expectation with confidence 1 - eta.
    Prokhorov {
        /// Allowed deviation of the sample mean (per unit of spread).
        #[arg(allow_negative_numbers = true, long, required_unless_present = "sure", conflicts_with_all = ["ap", "p", "sure"])]
        epsilon: Option<f64>,
        /// Confidence complement (probability of straying farther).
        #[arg(allow_negative_numbers = true, long)]
        eta: f64,
        /// Favorable outcome of a zero-floor prospect to compare.
        #[arg(allow_negative_numbers = true, long, requires_all = ["p", "sure"])]
        ap: Option<f64>,
        /// Unfavorable outcome of the compared prospect.
        #[arg(allow_negative_numbers = true, long, default_value_t = 0.0)]
        aq: f64,
        /// Probability of the favorable outcome.
        #[arg(allow_negative_numbers = true, long, requires_all = ["ap", "sure"])]
        p: Option<f64>,
        /// Sure amount the prospect is compared against.
        #[arg(allow_negative_numbers = true, long, requires_all = ["ap", "p"])]
        sure: Option<f64>,
    },
}

#[derive(Subcommand)]
enum SimCmd {
    /// Simulate replicated sample means and report empirical moments.
    Means {
        #[command(flatten)]
        prospect: ProspectArgs,
        /// Plays averaged per replication.
        #[arg(long)]
        n: u64,
        /// Number of replications.
        #[arg(long)]
        replications: u64,
        /// Seed of the deterministic generator.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write every simulated mean to this file, one per line.
        #[arg(long, value_name = "PATH")]
        dump: Option<PathBuf>,
    },
    /// Fraction of replications whose success frequency lands within
    /// epsilon of p.
    Coverage {
        #[command(flatten)]
        prospect: ProspectArgs,
        /// Plays averaged per replication.
        #[arg(long)]
        n: u64,
        /// Number of replications.
        #[arg(long)]
        replications: u64,
        /// Allowed deviation of the success frequency from p.
        #[arg(allow_negative_numbers = true, long)]
        epsilon: f64,
        /// Seed of the deterministic generator.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum DataCmd {
    /// Write the embedded datasets as CSV files.
    Export {
        /// Target directory; defaults to $TWOPOINT_DATA_DIR, then ./data.
        #[arg(long, value_name = "DIR")]
        dir: Option<PathBuf>,
    },
}

/// One output value. Integers print plainly; floats at 17 significant
/// digits; absent math (zero-variance skewness, undefined fractions) as the
/// token `undefined`; structurally missing values (a cross row that was
/// never consulted) as `none` / JSON null.
enum Cell {
    UInt(u64),
    Float(f64),
    MaybeFloat(Option<f64>),
    MaybeUInt(Option<u64>),
    Text(String),
    Bool(bool),
}

impl Cell {
    fn column_text(&self) -> String {
        match self {
            Cell::UInt(v) => v.to_string(),
            Cell::Float(v) => float_text(*v),
            Cell::MaybeFloat(Some(v)) => float_text(*v),
            Cell::MaybeFloat(None) => "undefined".to_string(),
            Cell::MaybeUInt(Some(v)) => v.to_string(),
            Cell::MaybeUInt(None) => "none".to_string(),
            Cell::Text(v) => v.clone(),
            Cell::Bool(v) => v.to_string(),
        }
    }

    fn json_value(&self) -> serde_json::Value {
        use serde_json::Value;
        match self {
            Cell::UInt(v) => Value::from(*v),
            Cell::Float(v) | Cell::MaybeFloat(Some(v)) => {
                if v.is_finite() {
                    Value::from(*v)
                } else {
                    Value::from("undefined")
                }
            }
            Cell::MaybeFloat(None) => Value::from("undefined"),
            Cell::MaybeUInt(Some(v)) => Value::from(*v),
            Cell::MaybeUInt(None) => Value::Null,
            Cell::Text(v) => Value::from(v.as_str()),
            Cell::Bool(v) => Value::from(*v),
        }
    }
}

fn float_text(v: f64) -> String {
    if v.is_finite() {
        format_sig17(v)
    } else {
        "undefined".to_string()
    }
}

struct Table {
    /// JSON key holding the row array.
    key: &'static str,
    columns: Vec<&'static str>,
    rows: Vec<Vec<Cell>>,
}

/// The result of one subcommand: named scalars plus an optional table.
struct Report {
    scalars: Vec<(&'static str, Cell)>,
    table: Option<Table>,
}

impl Report {
    fn new(scalars: Vec<(&'static str, Cell)>) -> Self {
        Report { scalars, table: None }
    }

    fn with_table(mut self, table: Table) -> Self {
        self.table = Some(table);
        self
    }

    fn render(&self, format: Format) -> String {
        match format {
            Format::Columns => self.render_columns(),
            Format::Json => self.render_json(),
        }
    }

    fn render_columns(&self) -> String {
        let mut out = String::new();
        for (name, cell) in &self.scalars {
            out.push_str(name);
            out.push(' ');
            out.push_str(&cell.column_text());
            out.push('\n');
        }
        if let Some(table) = &self.table {
            out.push('#');
            for column in &table.columns {
                out.push(' ');
                out.push_str(column);
            }
            out.push('\n');
            for row in &table.rows {
                let mut first = true;
                for cell in row {
                    if !first {
                        out.push(' ');
                    }
                    first = false;
                    out.push_str(&cell.column_text());
                }
                out.push('\n');
            }
        }
        out
    }

    fn render_json(&self) -> String {
        let mut object = serde_json::Map::new();
        for (name, cell) in &self.scalars {
            object.insert((*name).to_string(), cell.json_value());
        }
        if let Some(table) = &self.table {
            let rows: Vec<serde_json::Value> = table
                .rows
                .iter()
                .map(|row| {
                    let mut entry = serde_json::Map::new();
                    for (column, cell) in table.columns.iter().zip(row) {
                        entry.insert((*column).to_string(), cell.json_value());
                    }
                    serde_json::Value::Object(entry)
                })
                .collect();
            object.insert(table.key.to_string(), serde_json::Value::Array(rows));
        }
        let mut buffer = Vec::new();
        let mut serializer =
            serde_json::Serializer::with_formatter(&mut buffer, Sig17Formatter::default());
        serde::Serialize::serialize(&serde_json::Value::Object(object), &mut serializer)
            .expect("writing JSON to memory cannot fail");
        let mut text = String::from_utf8(buffer).expect("serde_json emits UTF-8");
        text.push('\n');
        text
    }
}

/// Compact JSON, except every float renders with 17 significant digits, the
/// same spelling the columnar mode uses.
#[derive(Default)]
struct Sig17Formatter;

impl serde_json::ser::Formatter for Sig17Formatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> std::io::Result<()>
    where
        W: ?Sized + std::io::Write,
    {
        writer.write_all(format_sig17(value).as_bytes())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(report) => {
            print!("{}", report.render(cli.format));
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}

fn run(command: &Cmd) -> twopoint::Result<Report> {
    match command {
        Cmd::Prospect(cmd) => run_prospect(cmd),
        Cmd::Entropy(cmd) => run_entropy(cmd),
        Cmd::Choice(cmd) => run_choice(cmd),
        Cmd::Elicit(cmd) => run_elicit(cmd),
        Cmd::Lottery(cmd) => run_lottery(cmd),
        Cmd::Bounds(cmd) => run_bounds(cmd),
        Cmd::Sim(cmd) => run_sim(cmd),
        Cmd::Data(cmd) => run_data(cmd),
    }
}

fn moment_cells(scalars: &mut Vec<(&'static str, Cell)>, moments: &MomentSet) {
    scalars.push(("mean", Cell::Float(moments.mean)));
    scalars.push(("variance", Cell::Float(moments.variance)));
    scalars.push(("stdev", Cell::Float(moments.stdev())));
    scalars.push(("mu3", Cell::Float(moments.mu3)));
    scalars.push(("mu4", Cell::Float(moments.mu4)));
    scalars.push(("skewness", Cell::MaybeFloat(moments.skewness)));
    scalars.push(("excess_kurtosis", Cell::MaybeFloat(moments.excess_kurtosis)));
    scalars.push(("entropy_bits", Cell::Float(moments.entropy_bits)));
}

fn run_prospect(cmd: &ProspectCmd) -> twopoint::Result<Report> {
    match cmd {
        ProspectCmd::Moments(args) => {
            let prospect = args.build()?;
            let moments = two_point_moments(&prospect);
            let mut scalars = vec![
                ("ap", Cell::Float(prospect.a_p())),
                ("aq", Cell::Float(prospect.a_q())),
                ("p", Cell::Float(prospect.p())),
            ];
            moment_cells(&mut scalars, &moments);
            Ok(Report::new(scalars))
        }
        ProspectCmd::SampleMean { prospect, n } => {
            let prospect = prospect.build()?;
            let trials = TrialCount::new(*n)?;
            let moments = sample_mean_moments(&prospect, trials);
            let mut scalars = vec![
                ("ap", Cell::Float(prospect.a_p())),
                ("aq", Cell::Float(prospect.a_q())),
                ("p", Cell::Float(prospect.p())),
                ("n", Cell::UInt(*n)),
            ];
            moment_cells(&mut scalars, &moments);
            Ok(Report::new(scalars))
        }
    }
}

fn run_entropy(cmd: &EntropyCmd) -> twopoint::Result<Report> {
    match cmd {
        EntropyCmd::TwoPoint { p } => {
            let bits = two_point_entropy(*p)?;
            Ok(Report::new(vec![
                ("p", Cell::Float(*p)),
                ("entropy_bits", Cell::Float(bits)),
            ]))
        }
        EntropyCmd::Binomial { p, n } => {
            let trials = TrialCount::new(*n)?;
            let bits = binomial_entropy_exact(*p, trials)?;
            Ok(Report::new(vec![
                ("p", Cell::Float(*p)),
                ("n", Cell::UInt(*n)),
                ("entropy_bits", Cell::Float(bits)),
            ]))
        }
        EntropyCmd::Stirling { p, n } => {
            let trials = TrialCount::new(*n)?;
            let bits = binomial_entropy_stirling(*p, trials)?;
            Ok(Report::new(vec![
                ("p", Cell::Float(*p)),
                ("n", Cell::UInt(*n)),
                ("entropy_bits", Cell::Float(bits)),
            ]))
        }
    }
}

fn compact_pattern(ordering: &[Sym; 4], relations: &[Rel; 3]) -> String {
    let mut text = String::from(ordering[0].label());
    for (i, rel) in relations.iter().enumerate() {
        text.push(match rel {
            Rel::Eq => '=',
            Rel::Lt => '<',
        });
        text.push_str(ordering[i + 1].label());
    }
    text
}

fn class_label(class: CombinationClass) -> &'static str {
    match class {
        CombinationClass::Disjoint => "disjoint",
        CombinationClass::Adjacent => "adjacent",
        CombinationClass::Overlapping => "overlapping",
        CombinationClass::Point => "point",
    }
}

fn prediction_label(prediction: RowPrediction) -> &'static str {
    match prediction {
        RowPrediction::Zero => "0",
        RowPrediction::One => "1",
        RowPrediction::ZeroOrUndefined => "0|undefined",
        RowPrediction::OneOrUndefined => "1|undefined",
        RowPrediction::Undefined => "undefined",
        RowPrediction::RequiresModel => "model",
    }
}

fn fraction_cells(prediction: FractionPrediction) -> (&'static str, Option<f64>) {
    match prediction {
        FractionPrediction::Determined(f) => ("determined", Some(f)),
        FractionPrediction::Undefined => ("undefined", None),
    }
}

fn run_choice(cmd: &ChoiceCmd) -> twopoint::Result<Report> {
    match cmd {
        ChoiceCmd::Classify(pair) => {
            let (p1, p2) = pair.build()?;
            let classified = classify_pair(&p1, &p2);
            let (verdict, f1) = match classified.verdict {
                ChoiceVerdict::Determined(f) => ("determined", Some(f)),
                ChoiceVerdict::Undefined => ("undefined", None),
                ChoiceVerdict::RequiresModel => ("requires-model", None),
            };
            let combo = &classified.combination;
            Ok(Report::new(vec![
                (
                    "pattern",
                    Cell::Text(compact_pattern(&combo.ordering, &combo.relations)),
                ),
                ("class", Cell::Text(class_label(combo.class).to_string())),
                (
                    "combination_row",
                    Cell::MaybeUInt(combo.row.map(u64::from)),
                ),
                (
                    "probability_case",
                    Cell::UInt(u64::from(classified.probability_case)),
                ),
                (
                    "cross_row",
                    Cell::MaybeUInt(classified.cross_row.map(u64::from)),
                ),
                ("swapped_lookup", Cell::Bool(classified.swapped_lookup)),
                ("verdict", Cell::Text(verdict.to_string())),
                ("f1", Cell::MaybeFloat(f1)),
            ]))
        }
        ChoiceCmd::Predict { pair, n1, n2, a, b } => {
            let (p1, p2) = pair.build()?;
            let trials1 = TrialCount::new(*n1)?;
            let trials2 = TrialCount::new(*n2)?;
            let params = DeviationParams::new(*a, *b)?;
            let stats = difference_stats(&p1, trials1, &p2, trials2);
            let bounds = deviation_bounds(&p1, trials1, &p2, trials2).ok();
            let prediction = predict_fractions(&p1, trials1, &p2, trials2, params)?;
            let (verdict, f1) = fraction_cells(prediction);
            Ok(Report::new(vec![
                ("mean", Cell::Float(stats.mean)),
                ("stdev", Cell::Float(stats.stdev())),
                ("a", Cell::Float(params.a())),
                ("b", Cell::Float(params.b())),
                ("a_max", Cell::MaybeFloat(bounds.map(|(a_max, _)| a_max))),
                ("b_max", Cell::MaybeFloat(bounds.map(|(_, b_max)| b_max))),
                ("verdict", Cell::Text(verdict.to_string())),
                ("f1", Cell::MaybeFloat(f1)),
            ]))
        }
        ChoiceCmd::Limit(pair) => {
            let (p1, p2) = pair.build()?;
            let mean1 = two_point_moments(&p1).mean;
            let mean2 = two_point_moments(&p2).mean;
            let (verdict, f1) = fraction_cells(limit_fraction(&p1, &p2));
            Ok(Report::new(vec![
                ("mean1", Cell::Float(mean1)),
                ("mean2", Cell::Float(mean2)),
                ("verdict", Cell::Text(verdict.to_string())),
                ("f1", Cell::MaybeFloat(f1)),
            ]))
        }
        ChoiceCmd::Bounds { pair, n1, n2 } => {
            let (p1, p2) = pair.build()?;
            let trials1 = TrialCount::new(*n1)?;
            let trials2 = TrialCount::new(*n2)?;
            let stats = difference_stats(&p1, trials1, &p2, trials2);
            let (a_max, b_max) = deviation_bounds(&p1, trials1, &p2, trials2)?;
            Ok(Report::new(vec![
                ("mean", Cell::Float(stats.mean)),
                ("variance", Cell::Float(stats.variance)),
                ("stdev", Cell::Float(stats.stdev())),
                ("mu3", Cell::Float(stats.mu3)),
                ("mu4", Cell::Float(stats.mu4)),
                ("skewness", Cell::MaybeFloat(stats.skewness)),
                ("excess_kurtosis", Cell::MaybeFloat(stats.excess_kurtosis)),
                ("eta_min", Cell::Float(stats.eta_min)),
                ("eta_max", Cell::Float(stats.eta_max)),
                ("entropy_bits", Cell::Float(stats.entropy_bits)),
                ("a_max", Cell::Float(a_max)),
                ("b_max", Cell::Float(b_max)),
            ]))
        }
        ChoiceCmd::Enumerate => {
            let (raw, canonical, admissible) = enumerate_canonical_combinations();
            let rows = admissible
                .iter()
                .map(|combo| {
                    let row = combo.row.expect("admissible combinations carry a row");
                    let prediction =
                        combo.prediction.expect("admissible combinations carry a verdict");
                    vec![
                        Cell::UInt(u64::from(row)),
                        Cell::Text(compact_pattern(&combo.ordering, &combo.relations)),
                        Cell::Text(class_label(combo.class).to_string()),
                        Cell::Text(prediction_label(prediction).to_string()),
                        Cell::UInt(u64::from(combination_row(row).swap_partner)),
                    ]
                })
                .collect();
            Ok(Report::new(vec![
                ("raw_patterns", Cell::UInt(raw as u64)),
                ("canonical_patterns", Cell::UInt(canonical.len() as u64)),
                ("admissible_rows", Cell::UInt(admissible.len() as u64)),
            ])
            .with_table(Table {
                key: "rows",
                columns: vec!["row", "pattern", "class", "prediction", "swap_partner"],
                rows,
            }))
        }
        ChoiceCmd::Design { mean, variance, gamma1, n, aq1 } => {
            let trials = TrialCount::new(*n)?;
            let (risky, sure) = design_pair_with_skewness(*mean, *variance, *gamma1, trials, *aq1)?;
            Ok(Report::new(vec![
                ("target_mean", Cell::Float(*mean)),
                ("target_variance", Cell::Float(*variance)),
                ("target_gamma1", Cell::Float(*gamma1)),
                ("n", Cell::UInt(*n)),
                ("ap1", Cell::Float(risky.a_p())),
                ("aq1", Cell::Float(risky.a_q())),
                ("p1", Cell::Float(risky.p())),
                (
                    "award",
                    Cell::Float(sure.constant_value().unwrap_or(sure.a_p())),
                ),
            ]))
        }
        ChoiceCmd::GammaSweep {
            mean,
            variance,
            n,
            const_a,
            const_b,
            gamma_min,
            gamma_max,
            steps,
        } => {
            let trials = TrialCount::new(*n)?;
            let count = *steps as usize;
            let grid: Vec<f64> = (0..=count)
                .map(|i| {
                    let fraction = i as f64 / count.max(1) as f64;
                    gamma_min + (gamma_max - gamma_min) * fraction
                })
                .collect();
            let sweep = f1_of_gamma(*mean, *variance, trials, *const_a, *const_b, &grid)?;
            let rows = sweep
                .into_iter()
                .map(|(gamma1, f1)| vec![Cell::Float(gamma1), Cell::Float(f1)])
                .collect();
            Ok(Report::new(vec![
                ("target_mean", Cell::Float(*mean)),
                ("target_variance", Cell::Float(*variance)),
                ("n", Cell::UInt(*n)),
                ("const_a", Cell::Float(*const_a)),
                ("const_b", Cell::Float(*const_b)),
            ])
            .with_table(Table {
                key: "rows",
                columns: vec!["gamma1", "f1"],
                rows,
            }))
        }
    }
}

fn ladder_table(values: &[f64]) -> Table {
    Table {
        key: "rungs",
        columns: vec!["rung", "value"],
        rows: values
            .iter()
            .enumerate()
            .map(|(i, value)| vec![Cell::UInt(i as u64 + 1), Cell::Float(*value)])
            .collect(),
    }
}

fn run_elicit(cmd: &ElicitCmd) -> twopoint::Result<Report> {
    match cmd {
        ElicitCmd::Ladder { high, low, rungs } => {
            let ladder = geometric_ladder(*high, *low, *rungs)?;
            Ok(Report::new(vec![("ratio", Cell::Float(ladder.ratio))])
                .with_table(ladder_table(&ladder.values)))
        }
        ElicitCmd::Refine { accepted, rejected, rungs } => {
            let ladder = refine_linear_ladder(*accepted, *rejected, *rungs)?;
            Ok(Report::new(vec![
                ("lower", Cell::Float(ladder.lower)),
                ("upper", Cell::Float(ladder.upper)),
            ])
            .with_table(ladder_table(&ladder.values)))
        }
        ElicitCmd::Ce { prospect, threshold } => {
            let prospect = prospect.build()?;
            let theta = *threshold;
            let ce = certainty_equivalent(&prospect, |offer| offer >= theta)?;
            Ok(Report::new(vec![
                ("threshold", Cell::Float(theta)),
                ("certainty_equivalent", Cell::Float(ce)),
            ]))
        }
    }
}

fn match_label(matches: &[u32]) -> String {
    let parts: Vec<String> = matches.iter().map(u32::to_string).collect();
    parts.join(",")
}

/// Game names are free text; columnar values must stay whitespace-free.
fn game_label(config: &LotteryConfig) -> Cell {
    Cell::Text(config.name().replace(char::is_whitespace, "-"))
}

fn run_lottery(cmd: &LotteryCmd) -> twopoint::Result<Report> {
    match cmd {
        LotteryCmd::Odds { source, matches } => {
            let config = source.load()?;
            let name = game_label(&config);
            match matches {
                Some(matches) => {
                    let probability = match_probability(&config, matches)?;
                    let one_in = reciprocal_odds(&config, matches)?;
                    Ok(Report::new(vec![
                        ("game", name),
                        ("match", Cell::Text(match_label(matches))),
                        ("probability", Cell::Float(probability)),
                        ("one_in", Cell::Float(one_in)),
                    ]))
                }
                None => {
                    let (any_probability, any_one_in) = any_prize_probability(&config);
                    let rows = config
                        .tiers()
                        .iter()
                        .map(|tier| {
                            let probability = match_probability(&config, &tier.matches)?;
                            let one_in = reciprocal_odds(&config, &tier.matches)?;
                            Ok(vec![
                                Cell::Text(match_label(&tier.matches)),
                                Cell::Float(probability),
                                Cell::Float(one_in),
                            ])
                        })
                        .collect::<twopoint::Result<Vec<_>>>()?;
                    Ok(Report::new(vec![
                        ("game", name),
                        ("any_prize_probability", Cell::Float(any_probability)),
                        ("any_prize_one_in", Cell::Float(any_one_in)),
                    ])
                    .with_table(Table {
                        key: "tiers",
                        columns: vec!["match", "probability", "one_in"],
                        rows,
                    }))
                }
            }
        }
        LotteryCmd::Ev { source, jackpot, tickets, payout } => {
            let config = source.load()?;
            let terms = payout.terms()?;
            let split = jackpot_split((*tickets).max(1), config.jackpot_odds())?;
            let ev = expected_pnl(&config, *jackpot, *tickets, &terms, payout.tax)?;
            Ok(Report::new(vec![
                ("game", game_label(&config)),
                ("jackpot", Cell::Float(*jackpot)),
                ("tickets", Cell::UInt(*tickets)),
                ("years", Cell::UInt(u64::from(payout.years))),
                ("rate", Cell::Float(payout.rate)),
                ("tax", Cell::Float(payout.tax)),
                ("annuity_factor", Cell::Float(annuity_cash_factor(&terms))),
                ("win_probability", Cell::Float(split.win_probability)),
                ("split_coefficient", Cell::MaybeFloat(split.split_coefficient)),
                ("ev", Cell::Float(ev)),
            ]))
        }
        LotteryCmd::EvSurface { source, jackpots, tickets, payout } => {
            let config = source.load()?;
            let terms = payout.terms()?;
            let ticket_counts: Vec<u64> = tickets.iter().map(|&t| t.max(0.0) as u64).collect();
            let points = ev_surface(&config, jackpots, &ticket_counts, &terms, payout.tax)?;
            let rows = points
                .iter()
                .map(|point| {
                    vec![
                        Cell::Float(point.jackpot),
                        Cell::UInt(point.tickets),
                        Cell::Float(point.ev),
                    ]
                })
                .collect();
            Ok(Report::new(vec![
                ("game", game_label(&config)),
                ("years", Cell::UInt(u64::from(payout.years))),
                ("rate", Cell::Float(payout.rate)),
                ("tax", Cell::Float(payout.tax)),
            ])
            .with_table(Table {
                key: "points",
                columns: vec!["jackpot", "tickets", "ev"],
                rows,
            }))
        }
        LotteryCmd::Breakeven { era, slope, intercept, coefficient } => {
            let line = match era {
                Some(era) => era.line(),
                None => EraEquation {
                    slope: slope.expect("clap enforces slope with intercept"),
                    intercept: intercept.expect("clap enforces intercept with slope"),
                },
            };
            let (slope, intercept) = (line.slope, line.intercept);
            let jackpot = breakeven_jackpot(line, *coefficient)?;
            Ok(Report::new(vec![
                ("slope", Cell::Float(slope)),
                ("intercept", Cell::Float(intercept)),
                ("coefficient", Cell::Float(*coefficient)),
                ("jackpot", Cell::Float(jackpot)),
            ]))
        }
        LotteryCmd::Split { tickets, q, source } => {
            let q_jackpot = match (q, &source.game, &source.config) {
                (Some(q), _, _) => *q,
                (None, _, Some(path)) => LotteryConfig::load(path)?.jackpot_odds(),
                (None, Some(game), None) => game.config().jackpot_odds(),
                (None, None, None) => unreachable!("clap enforces one odds source"),
            };
            let split = jackpot_split(*tickets, q_jackpot)?;
            Ok(Report::new(vec![
                ("tickets", Cell::UInt(*tickets)),
                ("q", Cell::Float(q_jackpot)),
                ("win_probability", Cell::Float(split.win_probability)),
                ("split_coefficient", Cell::MaybeFloat(split.split_coefficient)),
            ]))
        }
        LotteryCmd::FitJackpot { family, j0, jmax, csv } => {
            let points: Vec<JackpotPoint> = match csv {
                Some(path) => {
                    let text = std::fs::read_to_string(path)?;
                    datasets::import_growth_csv(&text)?
                        .iter()
                        .map(|row| JackpotPoint {
                            t: f64::from(row.day) / 365.0,
                            jackpot: row.jackpot,
                        })
                        .collect()
                }
                None => datasets::growth_points_by_day(),
            };
            let curve_family = match family {
                Family::Logistic => CurveFamily::Logistic,
                Family::Exponential => CurveFamily::Exponential,
            };
            let fixed = FixedCurve { j0: *j0, j_max: *jmax };
            let fit = fit_jackpot_curve(&points, curve_family, fixed)?;
            let (family_name, j0, j_max, k, t0) = match fit.model {
                JackpotGrowthModel::Logistic { j0, j_max, k, t0 } => {
                    ("logistic", j0, Some(j_max), k, t0)
                }
                JackpotGrowthModel::Exponential { j0, k, t0 } => ("exponential", j0, None, k, t0),
            };
            let residuals = fit.residuals(&points);
            let rows = points
                .iter()
                .zip(&residuals)
                .map(|(point, residual)| {
                    vec![
                        Cell::Float(point.t),
                        Cell::Float(point.jackpot),
                        Cell::Float(point.jackpot - residual),
                        Cell::Float(*residual),
                    ]
                })
                .collect();
            Ok(Report::new(vec![
                ("family", Cell::Text(family_name.to_string())),
                ("j0", Cell::Float(j0)),
                ("j_max", Cell::MaybeFloat(j_max)),
                ("k", Cell::Float(k)),
                ("t0", Cell::Float(t0)),
                ("sse", Cell::Float(fit.sse)),
            ])
            .with_table(Table {
                key: "points",
                columns: vec!["t", "jackpot", "fitted", "residual"],
                rows,
            }))
        }
        LotteryCmd::Participation { k, j0, jmax, c_scale, dt, until, steps } => {
            let model = participation_over_time(*j0, *jmax, *k, *c_scale, *dt)?;
            let mut report = Report::new(vec![
                ("j0", Cell::Float(*j0)),
                ("j_max", Cell::Float(*jmax)),
                ("k", Cell::Float(*k)),
                ("c_scale", Cell::Float(*c_scale)),
                ("dt", Cell::Float(*dt)),
                ("peak_time", Cell::Float(model.peak_time())),
                ("peak_fraction", Cell::Float(model.peak_fraction())),
            ]);
            if let Some(steps) = steps {
                let horizon = until.unwrap_or_else(|| 2.0 * model.peak_time());
                let count = (*steps).max(1) as usize;
                let rows = (0..=count)
                    .map(|i| {
                        let t = horizon * i as f64 / count as f64;
                        vec![Cell::Float(t), Cell::Float(model.fraction_at(t))]
                    })
                    .collect();
                report = report.with_table(Table {
                    key: "curve",
                    columns: vec!["t", "fraction"],
                    rows,
                });
            }
            Ok(report)
        }
    }
}

fn run_bounds(cmd: &BoundsCmd) -> twopoint::Result<Report> {
    match cmd {
        BoundsCmd::Prokhorov { epsilon, eta, ap, aq, p, sure } => {
            let mut scalars = Vec::new();
            let epsilon = match (epsilon, ap, p, sure) {
                (Some(epsilon), ..) => *epsilon,
                (None, Some(ap), Some(p), Some(sure)) => {
                    let prospect = Prospect::new(*ap, *aq, *p)?;
                    let derived = bounds::comparison_threshold_epsilon(&prospect, *sure)?;
                    scalars.push(("ap", Cell::Float(*ap)));
                    scalars.push(("aq", Cell::Float(*aq)));
                    scalars.push(("p", Cell::Float(*p)));
                    scalars.push(("sure", Cell::Float(*sure)));
                    derived
                }
                _ => unreachable!("clap enforces epsilon or a full comparison"),
            };
            let trials = bounds::prokhorov_min_trials(epsilon, *eta)?;
            scalars.push(("epsilon", Cell::Float(epsilon)));
            scalars.push(("eta", Cell::Float(*eta)));
            scalars.push(("trials", Cell::UInt(trials)));
            Ok(Report::new(scalars))
        }
    }
}

fn run_sim(cmd: &SimCmd) -> twopoint::Result<Report> {
    match cmd {
        SimCmd::Means { prospect, n, replications, seed, dump } => {
            let prospect = prospect.build()?;
            let trials = TrialCount::new(*n)?;
            let run = simulate_sample_means(&prospect, trials, *replications, *seed)?;
            if let Some(path) = dump {
                let mut text = String::with_capacity(run.means.len() * 24);
                for mean in &run.means {
                    text.push_str(&format_sig17(*mean));
                    text.push('\n');
                }
                std::fs::write(path, text)?;
            }
            let moments = &run.moments;
            let errors = run.standard_errors.as_ref();
            Ok(Report::new(vec![
                ("n", Cell::UInt(*n)),
                ("replications", Cell::UInt(*replications)),
                ("seed", Cell::UInt(*seed)),
                ("mean", Cell::Float(moments.mean)),
                ("variance", Cell::Float(moments.variance)),
                ("stdev", Cell::Float(moments.variance.sqrt())),
                ("mu3", Cell::Float(moments.mu3)),
                ("mu4", Cell::Float(moments.mu4)),
                ("skewness", Cell::MaybeFloat(moments.skewness)),
                ("excess_kurtosis", Cell::MaybeFloat(moments.excess_kurtosis)),
                ("se_mean", Cell::MaybeFloat(errors.map(|e| e.mean))),
                ("se_variance", Cell::MaybeFloat(errors.map(|e| e.variance))),
                ("se_skewness", Cell::MaybeFloat(errors.and_then(|e| e.skewness))),
                (
                    "se_excess_kurtosis",
                    Cell::MaybeFloat(errors.and_then(|e| e.excess_kurtosis)),
                ),
            ]))
        }
        SimCmd::Coverage { prospect, n, replications, epsilon, seed } => {
            let prospect = prospect.build()?;
            let trials = TrialCount::new(*n)?;
            let coverage = empirical_coverage(&prospect, trials, *replications, *seed, *epsilon)?;
            Ok(Report::new(vec![
                ("n", Cell::UInt(*n)),
                ("replications", Cell::UInt(*replications)),
                ("epsilon", Cell::Float(*epsilon)),
                ("seed", Cell::UInt(*seed)),
                ("coverage", Cell::Float(coverage)),
            ]))
        }
    }
}

fn run_data(cmd: &DataCmd) -> twopoint::Result<Report> {
    match cmd {
        DataCmd::Export { dir } => {
            let target = dir.clone().unwrap_or_else(|| {
                std::env::var_os("TWOPOINT_DATA_DIR")
                    .map(PathBuf::from)
                    .unwrap_or_else(|| PathBuf::from("data"))
            });
            datasets::write_csv_files(&target)?;
            let rows = ["experiments.csv", "jackpot_growth.csv", "jackpot_history.csv"]
                .iter()
                .map(|file| vec![Cell::Text((*file).to_string())])
                .collect();
            Ok(Report::new(vec![(
                "dir",
                Cell::Text(target.display().to_string()),
            )])
            .with_table(Table {
                key: "files",
                columns: vec!["file"],
                rows,
            }))
        }
    }
}
