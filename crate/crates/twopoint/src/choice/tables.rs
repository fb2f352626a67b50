//! Decision tables for pairwise comparison of two-point prospects.
//!
//! A comparison is classified by where the two outcome intervals
//! [min1, max1] and [min2, max2] sit relative to each other (26 admissible
//! canonical combinations), by which probability case applies (11 cases),
//! and, for overlapping intervals, by a 42-row cross table that refines the
//! verdict per probability case.

/// Interval endpoint symbols in priority order; the priority breaks ties
/// inside runs of equal values so every pattern has one canonical spelling.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Sym {
    Min1,
    Max1,
    Min2,
    Max2,
}

impl Sym {
    pub const ALL: [Sym; 4] = [Sym::Min1, Sym::Max1, Sym::Min2, Sym::Max2];

    pub fn label(self) -> &'static str {
        match self {
            Sym::Min1 => "min1",
            Sym::Max1 => "max1",
            Sym::Min2 => "min2",
            Sym::Max2 => "max2",
        }
    }

    /// Relabels prospect 1 endpoints as prospect 2 endpoints and vice versa.
    pub fn swapped(self) -> Sym {
        match self {
            Sym::Min1 => Sym::Min2,
            Sym::Max1 => Sym::Max2,
            Sym::Min2 => Sym::Min1,
            Sym::Max2 => Sym::Max1,
        }
    }
}

/// Relation between two adjacent symbols in an ordering chain.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Rel {
    Eq,
    Lt,
}

/// How the two outcome intervals relate to each other.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CombinationClass {
    /// The intervals share no point.
    Disjoint,
    /// The intervals share exactly one endpoint.
    Adjacent,
    /// The intervals share more than one point, or one sits strictly inside
    /// the other.
    Overlapping,
    /// All four endpoints coincide.
    Point,
}

/// Verdict attached to a decision-table row before probabilities (or, for
/// the cross table, after them) are taken into account.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RowPrediction {
    /// Prospect 2 is never worse: f1 = 0.
    Zero,
    /// Prospect 1 is never worse: f1 = 1.
    One,
    /// f1 = 0 unless both prospects degenerate to the same constant.
    ZeroOrUndefined,
    /// f1 = 1 unless both prospects degenerate to the same constant.
    OneOrUndefined,
    /// The prospects are indistinguishable; no rational preference exists.
    Undefined,
    /// The ordering alone cannot decide; a behavioral model is required.
    RequiresModel,
}

/// One admissible canonical combination of interval endpoints.
#[derive(Clone, Copy, Debug)]
pub struct CombinationRow {
    /// 1-based row index.
    pub index: u8,
    /// Symbols in nondecreasing value order.
    pub ordering: [Sym; 4],
    /// Relation between consecutive symbols of `ordering`.
    pub relations: [Rel; 3],
    pub class: CombinationClass,
    pub prediction: RowPrediction,
    /// Row describing the same pattern after the prospects trade places.
    pub swap_partner: u8,
}

use CombinationClass as Cc;
use Rel::{Eq as E, Lt as L};
use RowPrediction as Rp;
use Sym::{Max1 as M1, Max2 as M2, Min1 as m1, Min2 as m2};

/// The 26 admissible canonical combinations in their published order.
pub const COMBINATION_ROWS: [CombinationRow; 26] = [
    CombinationRow { index: 1, ordering: [m1, M1, m2, M2], relations: [L, L, L], class: Cc::Disjoint, prediction: Rp::Zero, swap_partner: 17 },
    CombinationRow { index: 2, ordering: [m1, M1, m2, M2], relations: [L, L, E], class: Cc::Disjoint, prediction: Rp::Zero, swap_partner: 18 },
    CombinationRow { index: 3, ordering: [m1, M1, m2, M2], relations: [L, E, L], class: Cc::Adjacent, prediction: Rp::ZeroOrUndefined, swap_partner: 24 },
    CombinationRow { index: 4, ordering: [m1, M1, m2, M2], relations: [L, E, E], class: Cc::Adjacent, prediction: Rp::ZeroOrUndefined, swap_partner: 23 },
    CombinationRow { index: 5, ordering: [m1, m2, M1, M2], relations: [L, L, L], class: Cc::Overlapping, prediction: Rp::RequiresModel, swap_partner: 21 },
    CombinationRow { index: 6, ordering: [m1, m2, M1, M2], relations: [L, L, E], class: Cc::Overlapping, prediction: Rp::RequiresModel, swap_partner: 20 },
    CombinationRow { index: 7, ordering: [m1, m2, M2, M1], relations: [L, L, L], class: Cc::Overlapping, prediction: Rp::RequiresModel, swap_partner: 19 },
    CombinationRow { index: 8, ordering: [m1, m2, M2, M1], relations: [L, E, L], class: Cc::Overlapping, prediction: Rp::RequiresModel, swap_partner: 22 },
    CombinationRow { index: 9, ordering: [m1, M1, m2, M2], relations: [E, L, L], class: Cc::Disjoint, prediction: Rp::Zero, swap_partner: 25 },
    CombinationRow { index: 10, ordering: [m1, M1, m2, M2], relations: [E, L, E], class: Cc::Disjoint, prediction: Rp::Zero, swap_partner: 26 },
    CombinationRow { index: 11, ordering: [m1, M1, m2, M2], relations: [E, E, L], class: Cc::Adjacent, prediction: Rp::ZeroOrUndefined, swap_partner: 16 },
    CombinationRow { index: 12, ordering: [m1, M1, m2, M2], relations: [E, E, E], class: Cc::Point, prediction: Rp::Undefined, swap_partner: 12 },
    CombinationRow { index: 13, ordering: [m1, m2, M1, M2], relations: [E, L, L], class: Cc::Overlapping, prediction: Rp::RequiresModel, swap_partner: 15 },
    CombinationRow { index: 14, ordering: [m1, m2, M1, M2], relations: [E, L, E], class: Cc::Overlapping, prediction: Rp::RequiresModel, swap_partner: 14 },
    CombinationRow { index: 15, ordering: [m1, m2, M2, M1], relations: [E, L, L], class: Cc::Overlapping, prediction: Rp::RequiresModel, swap_partner: 13 },
    CombinationRow { index: 16, ordering: [m1, m2, M2, M1], relations: [E, E, L], class: Cc::Adjacent, prediction: Rp::OneOrUndefined, swap_partner: 11 },
    CombinationRow { index: 17, ordering: [m2, M2, m1, M1], relations: [L, L, L], class: Cc::Disjoint, prediction: Rp::One, swap_partner: 1 },
    CombinationRow { index: 18, ordering: [m2, M2, m1, M1], relations: [L, L, E], class: Cc::Disjoint, prediction: Rp::One, swap_partner: 2 },
    CombinationRow { index: 19, ordering: [m2, m1, M1, M2], relations: [L, L, L], class: Cc::Overlapping, prediction: Rp::RequiresModel, swap_partner: 7 },
    CombinationRow { index: 20, ordering: [m2, m1, M1, M2], relations: [L, L, E], class: Cc::Overlapping, prediction: Rp::RequiresModel, swap_partner: 6 },
    CombinationRow { index: 21, ordering: [m2, m1, M2, M1], relations: [L, L, L], class: Cc::Overlapping, prediction: Rp::RequiresModel, swap_partner: 5 },
    CombinationRow { index: 22, ordering: [m2, m1, M1, M2], relations: [L, E, L], class: Cc::Overlapping, prediction: Rp::RequiresModel, swap_partner: 8 },
    CombinationRow { index: 23, ordering: [m2, m1, M1, M2], relations: [L, E, E], class: Cc::Adjacent, prediction: Rp::OneOrUndefined, swap_partner: 4 },
    CombinationRow { index: 24, ordering: [m2, m1, M2, M1], relations: [L, E, L], class: Cc::Adjacent, prediction: Rp::OneOrUndefined, swap_partner: 3 },
    CombinationRow { index: 25, ordering: [m2, M2, m1, M1], relations: [E, L, L], class: Cc::Disjoint, prediction: Rp::One, swap_partner: 9 },
    CombinationRow { index: 26, ordering: [m2, M2, m1, M1], relations: [E, L, E], class: Cc::Disjoint, prediction: Rp::One, swap_partner: 10 },
];

/// One probability case: where (p1, p2) sit in [0, 1]^2.
#[derive(Clone, Copy, Debug)]
pub struct ProbabilityCase {
    /// 1-based case index.
    pub index: u8,
    pub label: &'static str,
    /// Case describing the same probabilities after the prospects trade
    /// places.
    pub swap_partner: u8,
}

/// The 11 exhaustive, mutually exclusive probability cases.
pub const PROBABILITY_CASES: [ProbabilityCase; 11] = [
    ProbabilityCase { index: 1, label: "p1 = 0, p2 = 0", swap_partner: 1 },
    ProbabilityCase { index: 2, label: "p1 = 0, 0 < p2 < 1", swap_partner: 4 },
    ProbabilityCase { index: 3, label: "p1 = 0, p2 = 1", swap_partner: 7 },
    ProbabilityCase { index: 4, label: "0 < p1 < 1, p2 = 0", swap_partner: 2 },
    ProbabilityCase { index: 5, label: "0 < p1 = p2 < 1", swap_partner: 5 },
    ProbabilityCase { index: 6, label: "0 < p1 < 1, p2 = 1", swap_partner: 8 },
    ProbabilityCase { index: 7, label: "p1 = 1, p2 = 0", swap_partner: 3 },
    ProbabilityCase { index: 8, label: "p1 = 1, 0 < p2 < 1", swap_partner: 6 },
    ProbabilityCase { index: 9, label: "p1 = 1, p2 = 1", swap_partner: 9 },
    ProbabilityCase { index: 10, label: "0 < p1 < p2 < 1", swap_partner: 11 },
    ProbabilityCase { index: 11, label: "0 < p2 < p1 < 1", swap_partner: 10 },
];

/// Picks the probability case for a pair of single-trial win probabilities.
///
/// The cases partition [0, 1]^2, so exactly one applies.
pub fn probability_case(p1: f64, p2: f64) -> u8 {
    debug_assert!((0.0..=1.0).contains(&p1) && (0.0..=1.0).contains(&p2));
    if p1 == 0.0 {
        if p2 == 0.0 {
            1
        } else if p2 == 1.0 {
            3
        } else {
            2
        }
    } else if p1 == 1.0 {
        if p2 == 0.0 {
            7
        } else if p2 == 1.0 {
            9
        } else {
            8
        }
    } else if p2 == 0.0 {
        4
    } else if p2 == 1.0 {
        6
    } else if p1 == p2 {
        5
    } else if p1 < p2 {
        10
    } else {
        11
    }
}

/// One row of the cross table: an overlapping combination refined by a
/// probability case.
#[derive(Clone, Copy, Debug)]
pub struct CrossRow {
    /// 1-based row index.
    pub index: u8,
    /// Combination row, one of {5, 6, 7, 8, 13, 14}.
    pub combination_row: u8,
    /// Probability case, one of {2, 4, 5, 6, 8, 10, 11}.
    pub probability_case: u8,
    pub prediction: RowPrediction,
}

/// Combination rows covered by the cross table. Rows 15 and 19 through 22
/// are reached by swapping the prospects and flipping the verdict; cases
/// 1, 3, 7, and 9 make both prospects constant, which is decided directly.
pub const CROSS_COMBINATIONS: [u8; 6] = [5, 6, 7, 8, 13, 14];
/// Probability cases covered by the cross table, in column order.
pub const CROSS_CASES: [u8; 7] = [2, 4, 5, 6, 8, 10, 11];

const fn cross(index: u8, combination_row: u8, probability_case: u8, prediction: RowPrediction) -> CrossRow {
    CrossRow { index, combination_row, probability_case, prediction }
}

/// The 42 cross-table rows in their published order.
pub const CROSS_ROWS: [CrossRow; 42] = [
    cross(1, 5, 2, Rp::Zero),
    cross(2, 5, 4, Rp::RequiresModel),
    cross(3, 5, 5, Rp::Zero),
    cross(4, 5, 6, Rp::Zero),
    cross(5, 5, 8, Rp::RequiresModel),
    cross(6, 5, 10, Rp::RequiresModel),
    cross(7, 5, 11, Rp::RequiresModel),
    cross(8, 6, 2, Rp::Zero),
    cross(9, 6, 4, Rp::RequiresModel),
    cross(10, 6, 5, Rp::Zero),
    cross(11, 6, 6, Rp::Zero),
    cross(12, 6, 8, Rp::One),
    cross(13, 6, 10, Rp::Zero),
    cross(14, 6, 11, Rp::RequiresModel),
    cross(15, 7, 2, Rp::Zero),
    cross(16, 7, 4, Rp::RequiresModel),
    cross(17, 7, 5, Rp::RequiresModel),
    cross(18, 7, 6, Rp::RequiresModel),
    cross(19, 7, 8, Rp::One),
    cross(20, 7, 10, Rp::RequiresModel),
    cross(21, 7, 11, Rp::RequiresModel),
    cross(22, 8, 2, Rp::Zero),
    cross(23, 8, 4, Rp::RequiresModel),
    cross(24, 8, 5, Rp::RequiresModel),
    cross(25, 8, 6, Rp::RequiresModel),
    cross(26, 8, 8, Rp::One),
    cross(27, 8, 10, Rp::RequiresModel),
    cross(28, 8, 11, Rp::RequiresModel),
    cross(29, 13, 2, Rp::Zero),
    cross(30, 13, 4, Rp::One),
    cross(31, 13, 5, Rp::Zero),
    cross(32, 13, 6, Rp::Zero),
    cross(33, 13, 8, Rp::RequiresModel),
    cross(34, 13, 10, Rp::Zero),
    cross(35, 13, 11, Rp::RequiresModel),
    cross(36, 14, 2, Rp::Zero),
    cross(37, 14, 4, Rp::One),
    cross(38, 14, 5, Rp::Undefined),
    cross(39, 14, 6, Rp::Zero),
    cross(40, 14, 8, Rp::One),
    cross(41, 14, 10, Rp::Zero),
    cross(42, 14, 11, Rp::One),
];

/// Looks up a cross-table row by combination row and probability case.
pub fn cross_row(combination_row: u8, probability_case: u8) -> Option<&'static CrossRow> {
    CROSS_ROWS
        .iter()
        .find(|r| r.combination_row == combination_row && r.probability_case == probability_case)
}

/// Looks up a combination row by index (1 through 26).
pub fn combination_row(index: u8) -> &'static CombinationRow {
    &COMBINATION_ROWS[index as usize - 1]
}
