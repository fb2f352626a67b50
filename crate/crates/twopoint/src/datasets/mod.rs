//! Embedded observation datasets: 73 published two-prospect choice
//! experiments, the Mega Millions jackpot history and one jackpot growth
//! run, and the participating-state population list behind the
//! potential-buyer estimate. Each dataset can be exported to CSV and read
//! back without loss; the compiled-in copies are authoritative.

mod embedded;

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::fitting::JackpotPoint;
use crate::prospect::Prospect;

/// Study a choice experiment was taken from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    KahnemanTversky1979,
    TverskyKahneman1992,
    Williams1966,
}

impl Source {
    pub fn tag(&self) -> &'static str {
        match self {
            Source::KahnemanTversky1979 => "kahneman1979",
            Source::TverskyKahneman1992 => "tversky1992",
            Source::Williams1966 => "williams1966",
        }
    }

    pub fn from_tag(tag: &str) -> Result<Source> {
        match tag {
            "kahneman1979" => Ok(Source::KahnemanTversky1979),
            "tversky1992" => Ok(Source::TverskyKahneman1992),
            "williams1966" => Ok(Source::Williams1966),
            other => Err(Error::DatasetParse(format!("unknown source tag {other:?}"))),
        }
    }
}

/// Decision-table coordinates of an ordered prospect pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableRefs {
    /// Endpoint-pattern row, 1 through 26.
    pub combination_row: u8,
    /// Probability case, 1 through 11.
    pub probability_case: u8,
    /// Cross-table row; absent when the pattern as ordered has no direct
    /// cross entry and the swapped pair's coordinates supply one.
    pub cross_row: Option<u8>,
}

/// One published two-prospect choice experiment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExperimentRow {
    pub id: u8,
    pub prospect1: Prospect,
    pub prospect2: Prospect,
    /// Observed fraction of respondents preferring the first prospect,
    /// where the study reports one.
    pub f1_observed: Option<f64>,
    pub voters: Option<u32>,
    pub source: Source,
    pub table_refs: TableRefs,
    /// Marks outcome values converted to modern dollars from non-monetary
    /// prizes; such rows deserve low weight in fits.
    pub low_confidence: bool,
}

/// One winning drawing in the jackpot history.
#[derive(Debug, Clone, PartialEq)]
pub struct JackpotHistoryRow {
    pub date: String,
    pub amount_millions: f64,
    pub winners: u32,
    /// Marks the drawings singled out as jackpot candidates for analysis.
    pub starred: bool,
}

/// One announced jackpot during a growth run between two winning drawings.
#[derive(Debug, Clone, PartialEq)]
pub struct GrowthRow {
    pub date: String,
    /// Days since the run started.
    pub day: u32,
    /// Year fraction day/365 rounded to four decimals, as printed in the
    /// source table.
    pub t_years: f64,
    pub jackpot: f64,
}

/// The 73 experiment rows, verbatim.
pub fn load_experiments() -> Vec<ExperimentRow> {
    embedded::EXPERIMENTS
        .iter()
        .map(
            |&(id, ap1, aq1, p1, ap2, aq2, p2, f1, voters, source, t2, t3, t4)| ExperimentRow {
                id,
                prospect1: Prospect::new(ap1, aq1, p1).expect("embedded prospect is valid"),
                prospect2: Prospect::new(ap2, aq2, p2).expect("embedded prospect is valid"),
                f1_observed: f1,
                voters,
                source,
                table_refs: TableRefs {
                    combination_row: t2,
                    probability_case: t3,
                    cross_row: t4,
                },
                low_confidence: matches!(id, 14 | 15),
            },
        )
        .collect()
}

/// All winning drawings, newest first, in the printed order.
pub fn load_jackpot_history() -> Vec<JackpotHistoryRow> {
    embedded::HISTORY
        .iter()
        .map(|&(date, amount_millions, winners, starred)| JackpotHistoryRow {
            date: date.to_string(),
            amount_millions,
            winners,
            starred,
        })
        .collect()
}

/// The 20 announced jackpots of the tracked growth run.
pub fn jackpot_growth_rows() -> Vec<GrowthRow> {
    embedded::GROWTH
        .iter()
        .map(|&(date, day, t_years, jackpot)| GrowthRow {
            date: date.to_string(),
            day,
            t_years,
            jackpot,
        })
        .collect()
}

/// Growth run as fit points over the printed four-decimal year fractions.
pub fn load_jackpot_growth() -> Vec<JackpotPoint> {
    embedded::GROWTH
        .iter()
        .map(|&(_, _, t_years, jackpot)| JackpotPoint { t: t_years, jackpot })
        .collect()
}

/// Growth run as fit points over exact day counts, t = day/365. Curve fits
/// need this full-precision time axis; the printed four-decimal fractions
/// shift the fitted rate in its last digits.
pub fn growth_points_by_day() -> Vec<JackpotPoint> {
    embedded::GROWTH
        .iter()
        .map(|&(_, day, _, jackpot)| JackpotPoint {
            t: day as f64 / 365.0,
            jackpot,
        })
        .collect()
}

/// Resident populations of the participating jurisdictions.
pub fn state_populations() -> &'static [(&'static str, u64)] {
    &embedded::STATE_POPULATIONS
}

/// Sum of the embedded population list.
pub fn resident_population() -> u64 {
    embedded::STATE_POPULATIONS.iter().map(|&(_, n)| n).sum()
}

/// Residents scaled by a share in [0, 1], rounded to the nearest person.
pub fn population_share(factor: f64) -> Result<u64> {
    if !factor.is_finite() {
        return Err(Error::NonFiniteArgument {
            name: "factor",
            value: factor,
        });
    }
    if !(0.0..=1.0).contains(&factor) {
        return Err(Error::InvalidProbability(factor));
    }
    Ok((resident_population() as f64 * factor).round() as u64)
}

/// Potential ticket buyers: the 76 percent of residents who are 18 or
/// older.
pub fn adult_population() -> u64 {
    population_share(0.76).expect("0.76 is a valid share")
}

/// Serial day number of an M/D/Y date (days since 1970-01-01, civil
/// calendar). Used to recover day offsets from printed dates.
fn civil_day_number(date: &str) -> Result<i64> {
    let bad = || Error::DatasetParse(format!("bad date {date:?}, expected M/D/Y"));
    let mut parts = date.split('/');
    let mut next = || -> Result<i64> {
        parts
            .next()
            .and_then(|p| p.trim().parse().ok())
            .ok_or_else(bad)
    };
    let month = next()?;
    let day = next()?;
    let year = next()?;
    if !(1..=12).contains(&month) || !(1..=31).contains(&day) || year < 1600 {
        return Err(bad());
    }
    let y = if month <= 2 { year - 1 } else { year };
    let era = y / 400;
    let yoe = y - era * 400;
    let mp = (month + 9) % 12;
    let doy = (153 * mp + 2) / 5 + day - 1;
    let doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    Ok(era * 146_097 + doe - 719_468)
}

const EXPERIMENT_HEADER: [&str; 13] = [
    "id", "ap1", "aq1", "p1", "ap2", "aq2", "p2", "f1", "voters", "source", "t2", "t3", "t4",
];
const GROWTH_HEADER: [&str; 3] = ["date", "t_years", "jackpot"];
const HISTORY_HEADER: [&str; 4] = ["date", "amount_millions", "winners", "starred"];

fn csv_error(err: csv::Error) -> Error {
    Error::DatasetParse(err.to_string())
}

fn finish_csv(writer: csv::Writer<Vec<u8>>) -> String {
    let bytes = writer
        .into_inner()
        .expect("flushing an in-memory csv writer cannot fail");
    String::from_utf8(bytes).expect("csv output is utf-8")
}

fn option_field<T: ToString>(value: &Option<T>) -> String {
    value.as_ref().map(T::to_string).unwrap_or_default()
}

fn expect_header(record: &csv::StringRecord, expected: &[&str]) -> Result<()> {
    if record.len() == expected.len() && record.iter().zip(expected).all(|(a, &b)| a == b) {
        Ok(())
    } else {
        Err(Error::DatasetParse(format!(
            "unexpected header {:?}, expected {expected:?}",
            record.iter().collect::<Vec<_>>()
        )))
    }
}

fn parse_field<T: std::str::FromStr>(field: &str, name: &str, line: usize) -> Result<T> {
    field.trim().parse().map_err(|_| {
        Error::DatasetParse(format!("line {line}: bad {name} value {field:?}"))
    })
}

fn parse_option<T: std::str::FromStr>(field: &str, name: &str, line: usize) -> Result<Option<T>> {
    if field.trim().is_empty() {
        Ok(None)
    } else {
        parse_field(field, name, line).map(Some)
    }
}

/// Experiments as CSV. Missing fractions, voter counts, and cross rows
/// become empty cells; numbers print in shortest round-trip form.
pub fn export_experiments_csv() -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(EXPERIMENT_HEADER).expect("in-memory write");
    for row in load_experiments() {
        writer
            .write_record([
                row.id.to_string(),
                row.prospect1.a_p().to_string(),
                row.prospect1.a_q().to_string(),
                row.prospect1.p().to_string(),
                row.prospect2.a_p().to_string(),
                row.prospect2.a_q().to_string(),
                row.prospect2.p().to_string(),
                option_field(&row.f1_observed),
                option_field(&row.voters),
                row.source.tag().to_string(),
                row.table_refs.combination_row.to_string(),
                row.table_refs.probability_case.to_string(),
                option_field(&row.table_refs.cross_row),
            ])
            .expect("in-memory write");
    }
    finish_csv(writer)
}

pub fn import_experiments_csv(text: &str) -> Result<Vec<ExperimentRow>> {
    let mut reader = csv::ReaderBuilder::new().from_reader(text.as_bytes());
    expect_header(reader.headers().map_err(csv_error)?, &EXPERIMENT_HEADER)?;
    let mut rows = Vec::new();
    for (index, record) in reader.records().enumerate() {
        let record = record.map_err(csv_error)?;
        let line = index + 2;
        if record.len() != EXPERIMENT_HEADER.len() {
            return Err(Error::DatasetParse(format!(
                "line {line}: expected {} fields, got {}",
                EXPERIMENT_HEADER.len(),
                record.len()
            )));
        }
        let id: u8 = parse_field(&record[0], "id", line)?;
        let ap1: f64 = parse_field(&record[1], "ap1", line)?;
        let aq1: f64 = parse_field(&record[2], "aq1", line)?;
        let p1: f64 = parse_field(&record[3], "p1", line)?;
        let ap2: f64 = parse_field(&record[4], "ap2", line)?;
        let aq2: f64 = parse_field(&record[5], "aq2", line)?;
        let p2: f64 = parse_field(&record[6], "p2", line)?;
        rows.push(ExperimentRow {
            id,
            prospect1: Prospect::new(ap1, aq1, p1)?,
            prospect2: Prospect::new(ap2, aq2, p2)?,
            f1_observed: parse_option(&record[7], "f1", line)?,
            voters: parse_option(&record[8], "voters", line)?,
            source: Source::from_tag(record[9].trim())?,
            table_refs: TableRefs {
                combination_row: parse_field(&record[10], "t2", line)?,
                probability_case: parse_field(&record[11], "t3", line)?,
                cross_row: parse_option(&record[12], "t4", line)?,
            },
            // The modern-dollar conversion rows are identified by id.
            low_confidence: matches!(id, 14 | 15),
        });
    }
    Ok(rows)
}

pub fn export_growth_csv() -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(GROWTH_HEADER).expect("in-memory write");
    for row in jackpot_growth_rows() {
        writer
            .write_record([
                row.date.clone(),
                row.t_years.to_string(),
                row.jackpot.to_string(),
            ])
            .expect("in-memory write");
    }
    finish_csv(writer)
}

pub fn import_growth_csv(text: &str) -> Result<Vec<GrowthRow>> {
    let mut reader = csv::ReaderBuilder::new().from_reader(text.as_bytes());
    expect_header(reader.headers().map_err(csv_error)?, &GROWTH_HEADER)?;
    let mut rows: Vec<GrowthRow> = Vec::new();
    let mut start_day = 0;
    for (index, record) in reader.records().enumerate() {
        let record = record.map_err(csv_error)?;
        let line = index + 2;
        if record.len() != GROWTH_HEADER.len() {
            return Err(Error::DatasetParse(format!(
                "line {line}: expected {} fields, got {}",
                GROWTH_HEADER.len(),
                record.len()
            )));
        }
        let date = record[0].trim().to_string();
        let serial = civil_day_number(&date)?;
        if rows.is_empty() {
            start_day = serial;
        }
        let day = serial - start_day;
        if day < 0 {
            return Err(Error::DatasetParse(format!(
                "line {line}: date {date:?} precedes the first row"
            )));
        }
        rows.push(GrowthRow {
            date,
            day: day as u32,
            t_years: parse_field(&record[1], "t_years", line)?,
            jackpot: parse_field(&record[2], "jackpot", line)?,
        });
    }
    Ok(rows)
}

pub fn export_history_csv() -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(HISTORY_HEADER).expect("in-memory write");
    for row in load_jackpot_history() {
        writer
            .write_record([
                row.date.clone(),
                row.amount_millions.to_string(),
                row.winners.to_string(),
                row.starred.to_string(),
            ])
            .expect("in-memory write");
    }
    finish_csv(writer)
}

pub fn import_history_csv(text: &str) -> Result<Vec<JackpotHistoryRow>> {
    let mut reader = csv::ReaderBuilder::new().from_reader(text.as_bytes());
    expect_header(reader.headers().map_err(csv_error)?, &HISTORY_HEADER)?;
    let mut rows = Vec::new();
    for (index, record) in reader.records().enumerate() {
        let record = record.map_err(csv_error)?;
        let line = index + 2;
        if record.len() != HISTORY_HEADER.len() {
            return Err(Error::DatasetParse(format!(
                "line {line}: expected {} fields, got {}",
                HISTORY_HEADER.len(),
                record.len()
            )));
        }
        let date = record[0].trim().to_string();
        civil_day_number(&date)?;
        let winners: u32 = parse_field(&record[2], "winners", line)?;
        if winners == 0 {
            return Err(Error::DatasetParse(format!(
                "line {line}: a recorded drawing needs at least one winner"
            )));
        }
        rows.push(JackpotHistoryRow {
            date,
            amount_millions: parse_field(&record[1], "amount_millions", line)?,
            winners,
            starred: parse_field(&record[3], "starred", line)?,
        });
    }
    Ok(rows)
}

/// Writes all three datasets as CSV files into `dir`.
pub fn write_csv_files(dir: &Path) -> Result<()> {
    fs::create_dir_all(dir)?;
    fs::write(dir.join("experiments.csv"), export_experiments_csv())?;
    fs::write(dir.join("jackpot_growth.csv"), export_growth_csv())?;
    fs::write(dir.join("jackpot_history.csv"), export_history_csv())?;
    Ok(())
}
