//! Pairwise comparison of two-point prospects.
//!
//! The comparison works on the difference variable eta, the gap between the
//! two sample means after n1 and n2 plays. Where the outcome intervals alone
//! decide the matter, a decision-table classification settles it; where they
//! overlap, the deviation-ratio model predicts the long-run fraction f1 of
//! choices favoring the first prospect from two nonnegative deviation
//! multiples (a, b) of sigma(eta).

pub mod tables;

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::numeric::nearly_equal;
use crate::prospect::{sample_mean_moments, two_point_moments, Prospect, TrialCount};
use tables::{
    combination_row, cross_row, probability_case, CombinationClass, CombinationRow, CrossRow,
    Rel, RowPrediction, Sym, CROSS_COMBINATIONS, PROBABILITY_CASES,
};

/// Equality tolerance for comparing outcome values and means.
#[derive(Clone, Copy, Debug)]
pub struct Tolerance {
    pub relative: f64,
    /// Absolute fallback for values near zero.
    pub absolute: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance { relative: 1e-9, absolute: 1e-12 }
    }
}

impl Tolerance {
    pub fn eq(&self, a: f64, b: f64) -> bool {
        nearly_equal(a, b, self.relative, self.absolute)
    }
}

/// Moments and support of the difference between two independent sample
/// means.
#[derive(Clone, Copy, Debug)]
pub struct DifferenceStats {
    pub mean: f64,
    pub variance: f64,
    pub mu3: f64,
    pub mu4: f64,
    /// None when the variance is zero.
    pub skewness: Option<f64>,
    /// None when the variance is zero.
    pub excess_kurtosis: Option<f64>,
    /// Smallest possible difference, min1 - max2.
    pub eta_min: f64,
    /// Largest possible difference, max1 - min2.
    pub eta_max: f64,
    /// Entropy in bits of the four-outcome single-trial difference schema.
    pub entropy_bits: f64,
}

impl DifferenceStats {
    pub fn stdev(&self) -> f64 {
        self.variance.sqrt()
    }

    /// Lower edge of the deviation band, E - b sigma.
    pub fn eta_low(&self, b: f64) -> f64 {
        self.mean - b * self.stdev()
    }

    /// Upper edge of the deviation band, E + a sigma.
    pub fn eta_high(&self, a: f64) -> f64 {
        self.mean + a * self.stdev()
    }
}

/// Nonnegative deviation multiples (a, b) of sigma(eta).
#[derive(Clone, Copy, Debug)]
pub struct DeviationParams {
    a: f64,
    b: f64,
}

impl DeviationParams {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        for (name, value) in [("a", a), ("b", b)] {
            if !value.is_finite() {
                return Err(Error::NonFiniteArgument { name, value });
            }
            if value < 0.0 {
                return Err(Error::NegativeDeviation { name, value });
            }
        }
        Ok(DeviationParams { a, b })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }
}

/// Predicted long-run fraction of choices favoring the first prospect.
#[derive(Clone, Copy, PartialEq, Debug)]
pub enum FractionPrediction {
    Determined(f64),
    /// Neither prospect is ever preferred: no rational choice exists.
    Undefined,
}

/// Outcome of the interval classification of a prospect pair.
#[derive(Clone, Copy, PartialEq, Debug)]
pub enum ChoiceVerdict {
    /// The intervals and probabilities force f1 to this value.
    Determined(f64),
    /// The prospects are indistinguishable; no rational preference exists.
    Undefined,
    /// The intervals overlap in a way only a behavioral model can resolve.
    RequiresModel,
}

/// A canonical ordering pattern of the four interval endpoints.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct CanonicalCombination {
    /// Endpoint symbols in nondecreasing value order.
    pub ordering: [Sym; 4],
    /// Relation between consecutive symbols.
    pub relations: [Rel; 3],
    pub class: CombinationClass,
    /// Admissible row index (patterns with min > max have none).
    pub row: Option<u8>,
    /// The row's verdict before probabilities are applied.
    pub prediction: Option<RowPrediction>,
}

impl fmt::Display for CanonicalCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.ordering[0].label())?;
        for (i, rel) in self.relations.iter().enumerate() {
            let sep = match rel {
                Rel::Eq => "=",
                Rel::Lt => "<",
            };
            write!(f, " {} {}", sep, self.ordering[i + 1].label())?;
        }
        Ok(())
    }
}

/// Full classification of an ordered prospect pair.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct ClassifiedPair {
    pub combination: CanonicalCombination,
    /// Probability case index, 1 through 11.
    pub probability_case: u8,
    /// Cross-table row consulted, if the combination needed one.
    pub cross_row: Option<u8>,
    /// True when the cross table was consulted with the prospects swapped
    /// (the verdict has already been flipped back).
    pub swapped_lookup: bool,
    pub verdict: ChoiceVerdict,
}

fn assemble(groups: &[Vec<Sym>]) -> ([Sym; 4], [Rel; 3]) {
    let mut ordering = [Sym::Min1; 4];
    let mut relations = [Rel::Lt; 3];
    let mut pos = 0;
    for (gi, group) in groups.iter().enumerate() {
        for (si, &sym) in group.iter().enumerate() {
            ordering[pos] = sym;
            if pos > 0 {
                relations[pos - 1] = if si == 0 && gi > 0 { Rel::Lt } else { Rel::Eq };
            }
            pos += 1;
        }
    }
    debug_assert_eq!(pos, 4);
    (ordering, relations)
}

/// Rewrites a pattern in canonical form: runs of '='-connected symbols are
/// sorted by symbol priority.
fn canonicalize(ordering: [Sym; 4], relations: [Rel; 3]) -> ([Sym; 4], [Rel; 3]) {
    let mut groups: Vec<Vec<Sym>> = vec![vec![ordering[0]]];
    for (i, rel) in relations.iter().enumerate() {
        match rel {
            Rel::Eq => groups.last_mut().unwrap().push(ordering[i + 1]),
            Rel::Lt => groups.push(vec![ordering[i + 1]]),
        }
    }
    for group in &mut groups {
        group.sort();
    }
    assemble(&groups)
}

/// Rank of each symbol (indexed by `Sym as usize`): equal symbols share a
/// rank, each '<' increases it.
fn rank_of(ordering: &[Sym; 4], relations: &[Rel; 3]) -> [u8; 4] {
    let mut ranks = [0u8; 4];
    let mut r = 0;
    ranks[ordering[0] as usize] = 0;
    for i in 0..3 {
        if relations[i] == Rel::Lt {
            r += 1;
        }
        ranks[ordering[i + 1] as usize] = r;
    }
    ranks
}

fn is_admissible(ranks: &[u8; 4]) -> bool {
    ranks[Sym::Min1 as usize] <= ranks[Sym::Max1 as usize]
        && ranks[Sym::Min2 as usize] <= ranks[Sym::Max2 as usize]
}

fn derive_class(ranks: &[u8; 4]) -> CombinationClass {
    let (a, b) = (ranks[Sym::Min1 as usize], ranks[Sym::Max1 as usize]);
    let (c, d) = (ranks[Sym::Min2 as usize], ranks[Sym::Max2 as usize]);
    let (l1, h1) = (a.min(b), a.max(b));
    let (l2, h2) = (c.min(d), c.max(d));
    if l1 == h1 && l2 == h2 && l1 == l2 {
        CombinationClass::Point
    } else if h1 < l2 || h2 < l1 {
        CombinationClass::Disjoint
    } else if h1 == l2 || h2 == l1 {
        CombinationClass::Adjacent
    } else {
        CombinationClass::Overlapping
    }
}

fn find_row(ordering: &[Sym; 4], relations: &[Rel; 3]) -> Option<&'static CombinationRow> {
    tables::COMBINATION_ROWS
        .iter()
        .find(|r| &r.ordering == ordering && &r.relations == relations)
}

fn make_combination(ordering: [Sym; 4], relations: [Rel; 3]) -> CanonicalCombination {
    let ranks = rank_of(&ordering, &relations);
    let row = if is_admissible(&ranks) { find_row(&ordering, &relations) } else { None };
    CanonicalCombination {
        ordering,
        relations,
        class: derive_class(&ranks),
        row: row.map(|r| r.index),
        prediction: row.map(|r| r.prediction),
    }
}

fn permutations() -> Vec<[Sym; 4]> {
    fn permute(arr: &mut [Sym; 4], k: usize, out: &mut Vec<[Sym; 4]>) {
        if k == 4 {
            out.push(*arr);
            return;
        }
        for i in k..4 {
            arr.swap(k, i);
            permute(arr, k + 1, out);
            arr.swap(k, i);
        }
    }
    let mut out = Vec::with_capacity(24);
    permute(&mut Sym::ALL.clone(), 0, &mut out);
    out
}

/// Enumerates every ordering pattern of the four interval endpoints.
///
/// Returns the raw pattern count (24 permutations times 8 relation masks),
/// the distinct canonical patterns, and the admissible subset (those with
/// min <= max for both prospects) sorted by row index.
pub fn enumerate_canonical_combinations() -> (usize, Vec<CanonicalCombination>, Vec<CanonicalCombination>) {
    let mut raw = 0usize;
    let mut seen = BTreeSet::new();
    let mut canonical = Vec::new();
    for perm in permutations() {
        for mask in 0..8u8 {
            raw += 1;
            let relations = [
                if mask & 1 != 0 { Rel::Eq } else { Rel::Lt },
                if mask & 2 != 0 { Rel::Eq } else { Rel::Lt },
                if mask & 4 != 0 { Rel::Eq } else { Rel::Lt },
            ];
            let (o, r) = canonicalize(perm, relations);
            let key = (o.map(|s| s as u8), r.map(|x| x as u8));
            if seen.insert(key) {
                canonical.push(make_combination(o, r));
            }
        }
    }
    let mut admissible: Vec<CanonicalCombination> =
        canonical.iter().filter(|c| c.row.is_some()).copied().collect();
    admissible.sort_by_key(|c| c.row.unwrap());
    (raw, canonical, admissible)
}

/// Derives the canonical pattern of a prospect pair from its endpoint values.
fn pattern_of(p1: &Prospect, p2: &Prospect, tol: Tolerance) -> ([Sym; 4], [Rel; 3]) {
    let values = [p1.a_q(), p1.a_p(), p2.a_q(), p2.a_p()];
    let mut order: Vec<(f64, Sym)> = values.iter().copied().zip(Sym::ALL).collect();
    order.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap().then(x.1.cmp(&y.1)));
    let mut groups: Vec<Vec<Sym>> = vec![vec![order[0].1]];
    let mut last = order[0].0;
    for &(v, s) in &order[1..] {
        if tol.eq(v, last) {
            groups.last_mut().unwrap().push(s);
        } else {
            groups.push(vec![s]);
        }
        last = v;
    }
    for group in &mut groups {
        group.sort();
    }
    assemble(&groups)
}

/// The value a prospect is pinned to, if its outcomes coincide within
/// tolerance or its probability is degenerate.
fn effective_constant(p: &Prospect, tol: Tolerance) -> Option<f64> {
    if tol.eq(p.a_p(), p.a_q()) {
        Some(p.a_p())
    } else if p.p() == 1.0 {
        Some(p.a_p())
    } else if p.p() == 0.0 {
        Some(p.a_q())
    } else {
        None
    }
}

fn row_verdict(prediction: RowPrediction) -> ChoiceVerdict {
    match prediction {
        RowPrediction::Zero | RowPrediction::ZeroOrUndefined => ChoiceVerdict::Determined(0.0),
        RowPrediction::One | RowPrediction::OneOrUndefined => ChoiceVerdict::Determined(1.0),
        RowPrediction::Undefined => ChoiceVerdict::Undefined,
        RowPrediction::RequiresModel => ChoiceVerdict::RequiresModel,
    }
}

fn flip_verdict(v: ChoiceVerdict) -> ChoiceVerdict {
    match v {
        ChoiceVerdict::Determined(f) => ChoiceVerdict::Determined(1.0 - f),
        other => other,
    }
}

/// Classifies an ordered prospect pair with the default tolerance.
pub fn classify_pair(p1: &Prospect, p2: &Prospect) -> ClassifiedPair {
    classify_pair_with_tolerance(p1, p2, Tolerance::default())
}

/// Classifies an ordered prospect pair by interval pattern and probability
/// case, resolving the verdict through the decision tables.
pub fn classify_pair_with_tolerance(p1: &Prospect, p2: &Prospect, tol: Tolerance) -> ClassifiedPair {
    let (ordering, relations) = pattern_of(p1, p2, tol);
    let combination = make_combination(ordering, relations);
    let row = combination.row.expect("a prospect pair always yields an admissible pattern");
    let case = probability_case(p1.p(), p2.p());

    // Two pinned prospects are compared by their constants alone.
    if let (Some(c1), Some(c2)) = (effective_constant(p1, tol), effective_constant(p2, tol)) {
        let verdict = if tol.eq(c1, c2) {
            ChoiceVerdict::Undefined
        } else if c1 > c2 {
            ChoiceVerdict::Determined(1.0)
        } else {
            ChoiceVerdict::Determined(0.0)
        };
        return ClassifiedPair {
            combination,
            probability_case: case,
            cross_row: None,
            swapped_lookup: false,
            verdict,
        };
    }

    let (verdict, cross, swapped) = match combination.class {
        CombinationClass::Disjoint | CombinationClass::Adjacent => {
            (row_verdict(combination.prediction.unwrap()), None, false)
        }
        // A point pattern with a non-pinned prospect can only arise from
        // tolerance chaining; everything is equal within tolerance.
        CombinationClass::Point => (ChoiceVerdict::Undefined, None, false),
        CombinationClass::Overlapping => {
            if CROSS_COMBINATIONS.contains(&row) {
                let cr: &CrossRow = cross_row(row, case)
                    .expect("cases leaving a prospect random are covered by the cross table");
                (row_verdict(cr.prediction), Some(cr.index), false)
            } else {
                let partner = combination_row(row).swap_partner;
                let swapped_case = PROBABILITY_CASES[case as usize - 1].swap_partner;
                let cr: &CrossRow = cross_row(partner, swapped_case)
                    .expect("cases leaving a prospect random are covered by the cross table");
                (flip_verdict(row_verdict(cr.prediction)), Some(cr.index), true)
            }
        }
    };
    ClassifiedPair {
        combination,
        probability_case: case,
        cross_row: cross,
        swapped_lookup: swapped,
        verdict,
    }
}

/// Entropy in bits of the four-outcome single-trial difference schema.
/// Coinciding outcome values stay unmerged.
fn schema_entropy(p1: &Prospect, p2: &Prospect) -> f64 {
    eta_support_single_trial(p1, p2)
        .iter()
        .filter(|(_, prob)| *prob > 0.0)
        .map(|(_, prob)| -prob * prob.log2())
        .sum()
}

/// Support of the single-trial difference eta = xi1 - xi2 as four
/// (value, probability) outcomes in fixed order: (win, win), (win, lose),
/// (lose, win), (lose, lose).
pub fn eta_support_single_trial(p1: &Prospect, p2: &Prospect) -> [(f64, f64); 4] {
    [
        (p1.a_p() - p2.a_p(), p1.p() * p2.p()),
        (p1.a_p() - p2.a_q(), p1.p() * p2.q()),
        (p1.a_q() - p2.a_p(), p1.q() * p2.p()),
        (p1.a_q() - p2.a_q(), p1.q() * p2.q()),
    ]
}

/// Moments of eta, the difference of the two sample means after n1 and n2
/// independent plays.
///
/// E(eta) = E1 - E2, D(eta) = D1/n1 + D2/n2, mu3 = mu3_1/n1^2 - mu3_2/n2^2,
/// mu4 = mu4(mean1) + 6 D(mean1) D(mean2) + mu4(mean2).
pub fn difference_stats(p1: &Prospect, n1: TrialCount, p2: &Prospect, n2: TrialCount) -> DifferenceStats {
    let m1 = sample_mean_moments(p1, n1);
    let m2 = sample_mean_moments(p2, n2);
    let mean = m1.mean - m2.mean;
    let variance = m1.variance + m2.variance;
    let mu3 = m1.mu3 - m2.mu3;
    let mu4 = m1.mu4 + 6.0 * m1.variance * m2.variance + m2.mu4;
    let (skewness, excess_kurtosis) = if variance > 0.0 {
        let sd = variance.sqrt();
        (Some(mu3 / (sd * sd * sd)), Some(mu4 / (variance * variance) - 3.0))
    } else {
        (None, None)
    };
    DifferenceStats {
        mean,
        variance,
        mu3,
        mu4,
        skewness,
        excess_kurtosis,
        eta_min: p1.a_q() - p2.a_p(),
        eta_max: p1.a_p() - p2.a_q(),
        entropy_bits: schema_entropy(p1, p2),
    }
}

/// Limit of f1 as the number of plays grows without bound: the prospect
/// with the larger mean wins every time; equal means leave no preference.
pub fn limit_fraction(p1: &Prospect, p2: &Prospect) -> FractionPrediction {
    limit_fraction_with_tolerance(p1, p2, Tolerance::default())
}

pub fn limit_fraction_with_tolerance(p1: &Prospect, p2: &Prospect, tol: Tolerance) -> FractionPrediction {
    let e1 = two_point_moments(p1).mean;
    let e2 = two_point_moments(p2).mean;
    if tol.eq(e1, e2) {
        FractionPrediction::Undefined
    } else if e1 > e2 {
        FractionPrediction::Determined(1.0)
    } else {
        FractionPrediction::Determined(0.0)
    }
}

/// Largest admissible deviation multiples (a_max, b_max), keeping the
/// deviation band inside the support of eta:
/// a_max = (eta_max - E)/sigma, b_max = (E - eta_min)/sigma.
///
/// Errors with ZeroVariance when eta is constant.
pub fn deviation_bounds(p1: &Prospect, n1: TrialCount, p2: &Prospect, n2: TrialCount) -> Result<(f64, f64)> {
    let stats = difference_stats(p1, n1, p2, n2);
    if stats.variance <= 0.0 {
        return Err(Error::ZeroVariance);
    }
    let sd = stats.stdev();
    Ok(((stats.eta_max - stats.mean) / sd, (stats.mean - stats.eta_min) / sd))
}

/// Predicts f1 = max(E + a sigma, 0) / (max(-E + b sigma, 0) + max(E + a sigma, 0)).
///
/// When eta has zero variance the deviation parameters play no role and the
/// verdict follows the means alone. Identically distributed sample means
/// force a = b = 0, leaving the ratio undefined. Parameters outside the
/// deviation bounds are rejected.
pub fn predict_fractions(
    p1: &Prospect,
    n1: TrialCount,
    p2: &Prospect,
    n2: TrialCount,
    params: DeviationParams,
) -> Result<FractionPrediction> {
    let stats = difference_stats(p1, n1, p2, n2);
    if stats.variance <= 0.0 {
        return Ok(limit_fraction(p1, p2));
    }
    let (a_max, b_max) = deviation_bounds(p1, n1, p2, n2)?;
    // Slack of one part in 1e9 admits parameters computed from the bounds
    // themselves.
    for (name, value, max) in [("a", params.a, a_max), ("b", params.b, b_max)] {
        if value > max * (1.0 + 1e-9) + 1e-12 {
            return Err(Error::DeviationOutOfBounds { name, value, max });
        }
    }
    if p1 == p2 && n1 == n2 {
        return Ok(FractionPrediction::Undefined);
    }
    let sd = stats.stdev();
    let up = (stats.mean + params.a * sd).max(0.0);
    let down = (-stats.mean + params.b * sd).max(0.0);
    if up == 0.0 && down == 0.0 {
        return Ok(FractionPrediction::Undefined);
    }
    Ok(FractionPrediction::Determined(up / (up + down)))
}

/// Solves the iso-f1 line for b given a:
/// b = a (1 - f1)/f1 + E / (sigma f1).
///
/// Valid in the regime where both deviation terms are active.
pub fn b_from_a(stats: &DifferenceStats, f1: f64, a: f64) -> Result<f64> {
    if !f1.is_finite() || f1 <= 0.0 || f1 >= 1.0 {
        return Err(Error::DegenerateTargetFraction(f1));
    }
    if !a.is_finite() {
        return Err(Error::NonFiniteArgument { name: "a", value: a });
    }
    if a < 0.0 {
        return Err(Error::NegativeDeviation { name: "a", value: a });
    }
    if stats.variance <= 0.0 {
        return Err(Error::ZeroVariance);
    }
    Ok(a * (1.0 - f1) / f1 + stats.mean / (stats.stdev() * f1))
}

/// Builds a two-point prospect and a sure award whose difference of sample
/// means after n plays reproduces the target mean, variance, and skewness:
///
/// p1 = 1/2 - (gamma1/2) sqrt(n/(4 + n gamma1^2)),
/// max1 = min1 + sqrt(D n (4 + n gamma1^2)),
/// award = min1 - E + sqrt(D n) sqrt(p1/(1-p1)).
pub fn design_pair_with_skewness(
    target_e: f64,
    target_d: f64,
    gamma1: f64,
    n: TrialCount,
    a_q1: f64,
) -> Result<(Prospect, Prospect)> {
    for (name, value) in [("target_e", target_e), ("gamma1", gamma1), ("a_q1", a_q1)] {
        if !value.is_finite() {
            return Err(Error::NonFiniteArgument { name, value });
        }
    }
    if !target_d.is_finite() || target_d <= 0.0 {
        return Err(Error::InvalidDesignTarget(format!(
            "target variance must be positive and finite, got {target_d}"
        )));
    }
    let nf = n.get() as f64;
    let g = gamma1 * nf.sqrt();
    let root = (4.0 + g * g).sqrt();
    // root - g loses precision for large positive g; use (root-g)(root+g) = 4.
    let diff = if g >= 0.0 { 4.0 / (root + g) } else { root - g };
    let sum = if g >= 0.0 { root + g } else { 4.0 / diff };
    let p1 = diff / (2.0 * root);
    let odds = diff / sum; // p1/(1-p1)
    let a_p1 = a_q1 + (target_d * nf * (4.0 + g * g)).sqrt();
    let a_q2 = a_q1 - target_e + (target_d * nf).sqrt() * odds.sqrt();
    Ok((Prospect::new(a_p1, a_q1, p1)?, Prospect::constant(a_q2)?))
}

/// Sweeps gamma1 over a grid, at each point designing the pair for
/// (target_e, target_d, gamma1), setting a = a_max/const_a and
/// b = b_max/const_b from
/// a_max = (sqrt(n)/2)(sqrt(4 + n gamma1^2) + gamma1 sqrt(n)),
/// b_max = (sqrt(n)/2)(sqrt(4 + n gamma1^2) - gamma1 sqrt(n)),
/// and predicting f1. Returns (gamma1, f1) pairs.
pub fn f1_of_gamma(
    target_e: f64,
    target_d: f64,
    n: TrialCount,
    const_a: f64,
    const_b: f64,
    gamma1_grid: &[f64],
) -> Result<Vec<(f64, f64)>> {
    for (name, value) in [("const_a", const_a), ("const_b", const_b)] {
        if !value.is_finite() || value < 1.0 {
            return Err(Error::InvalidDesignTarget(format!(
                "{name} must be a finite value of at least 1, got {value}"
            )));
        }
    }
    let nf = n.get() as f64;
    let mut out = Vec::with_capacity(gamma1_grid.len());
    for &gamma1 in gamma1_grid {
        if !gamma1.is_finite() {
            return Err(Error::NonFiniteArgument { name: "gamma1", value: gamma1 });
        }
        let (risky, award) = design_pair_with_skewness(target_e, target_d, gamma1, n, 0.0)?;
        let g = gamma1 * nf.sqrt();
        let root = (4.0 + g * g).sqrt();
        let half = nf.sqrt() / 2.0;
        // a_max b_max = n; derive the cancellation-prone one from the other.
        let (a_max, b_max) = if g >= 0.0 {
            let am = half * (root + g);
            (am, nf / am)
        } else {
            let bm = half * (root - g);
            (nf / bm, bm)
        };
        let params = DeviationParams::new(a_max / const_a, b_max / const_b)?;
        match predict_fractions(&risky, n, &award, n, params)? {
            FractionPrediction::Determined(f1) => out.push((gamma1, f1)),
            // a_max/const_a and b_max/const_b are strictly positive, so at
            // least one deviation term is active.
            FractionPrediction::Undefined => unreachable!("positive deviation multiples always determine f1"),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    fn prospect(a_p: f64, a_q: f64, p: f64) -> Prospect {
        Prospect::new(a_p, a_q, p).unwrap()
    }

    fn one() -> TrialCount {
        TrialCount::new(1).unwrap()
    }

    #[test]
    fn enumeration_counts() {
        let (raw, canonical, admissible) = enumerate_canonical_combinations();
        assert_eq!(raw, 192);
        assert_eq!(canonical.len(), 75);
        assert_eq!(admissible.len(), 26);
    }

    #[test]
    fn admissible_patterns_match_the_embedded_rows() {
        let (_, _, admissible) = enumerate_canonical_combinations();
        for (i, combo) in admissible.iter().enumerate() {
            let row = combination_row(i as u8 + 1);
            assert_eq!(combo.row, Some(row.index));
            assert_eq!(combo.ordering, row.ordering);
            assert_eq!(combo.relations, row.relations);
            // class stored in the table must agree with the rank geometry
            assert_eq!(combo.class, row.class);
            assert_eq!(combo.prediction, Some(row.prediction));
        }
    }

    #[test]
    fn swapping_prospects_lands_on_the_partner_row() {
        for row in &tables::COMBINATION_ROWS {
            let swapped: Vec<Sym> = row.ordering.iter().map(|s| s.swapped()).collect();
            let (o, r) = canonicalize(swapped.try_into().unwrap(), row.relations);
            let partner = find_row(&o, &r).expect("swap of an admissible pattern is admissible");
            assert_eq!(partner.index, row.swap_partner, "row {}", row.index);
        }
    }

    #[test]
    fn disjoint_rows_predict_without_a_model() {
        for row in &tables::COMBINATION_ROWS {
            if row.class == CombinationClass::Disjoint {
                assert!(matches!(row.prediction, RowPrediction::Zero | RowPrediction::One));
            }
        }
    }

    #[test]
    fn classify_overlapping_pair_requires_model() {
        // risky gain vs sure award: intervals [0, 4000] and [3000, 3000]
        let c = classify_pair(&prospect(4000.0, 0.0, 0.8), &prospect(3000.0, 3000.0, 1.0));
        assert_eq!(c.combination.row, Some(8));
        assert_eq!(c.probability_case, 6);
        assert_eq!(c.cross_row, Some(25));
        assert!(!c.swapped_lookup);
        assert_eq!(c.verdict, ChoiceVerdict::RequiresModel);
    }

    #[test]
    fn classify_nested_intervals_via_swap() {
        // [0, 6000] strictly contains [0, 3000]: the pattern row exceeds the
        // cross table and is resolved through the partner row.
        let c = classify_pair(&prospect(6000.0, 0.0, 0.45), &prospect(3000.0, 0.0, 0.9));
        assert_eq!(c.combination.row, Some(15));
        assert_eq!(c.probability_case, 10);
        assert_eq!(c.cross_row, Some(35));
        assert!(c.swapped_lookup);
        assert_eq!(c.verdict, ChoiceVerdict::RequiresModel);
    }

    #[test]
    fn classify_distinct_constants() {
        let c = classify_pair(&prospect(1.0, 1.0, 1.0), &prospect(2.0, 2.0, 1.0));
        assert_eq!(c.combination.row, Some(10));
        assert_eq!(c.verdict, ChoiceVerdict::Determined(0.0));

        let c = classify_pair(&prospect(2.0, 2.0, 0.5), &prospect(1.0, 1.0, 0.5));
        assert_eq!(c.combination.row, Some(26));
        assert_eq!(c.verdict, ChoiceVerdict::Determined(1.0));
    }

    #[test]
    fn classify_identical_constants_leaves_no_preference() {
        let c = classify_pair(&prospect(5.0, 5.0, 1.0), &prospect(5.0, 5.0, 1.0));
        assert_eq!(c.combination.row, Some(12));
        assert_eq!(c.combination.class, CombinationClass::Point);
        assert_eq!(c.verdict, ChoiceVerdict::Undefined);
    }

    #[test]
    fn classify_degenerate_probability_pins_a_random_interval() {
        // [0, 4000] with p = 1 collapses onto 4000, beating the sure 3000
        let c = classify_pair(&prospect(4000.0, 0.0, 1.0), &prospect(3000.0, 3000.0, 0.5));
        assert_eq!(c.combination.row, Some(8));
        assert_eq!(c.verdict, ChoiceVerdict::Determined(1.0));
        // and with p = 0 it collapses onto 0, losing
        let c = classify_pair(&prospect(4000.0, 0.0, 0.0), &prospect(3000.0, 3000.0, 0.5));
        assert_eq!(c.verdict, ChoiceVerdict::Determined(0.0));
    }

    #[test]
    fn classify_adjacent_touching_intervals() {
        // [0, 10] touches [10, 20]: prospect 2 wins unless both pin to 10
        let c = classify_pair(&prospect(10.0, 0.0, 0.5), &prospect(20.0, 10.0, 0.5));
        assert_eq!(c.combination.row, Some(3));
        assert_eq!(c.combination.class, CombinationClass::Adjacent);
        assert_eq!(c.verdict, ChoiceVerdict::Determined(0.0));

        let c = classify_pair(&prospect(10.0, 0.0, 1.0), &prospect(20.0, 10.0, 0.0));
        assert_eq!(c.combination.row, Some(3));
        assert_eq!(c.verdict, ChoiceVerdict::Undefined);
    }

    #[test]
    fn classify_identical_risky_prospects() {
        let p = prospect(100.0, -50.0, 0.3);
        let c = classify_pair(&p, &p);
        assert_eq!(c.combination.row, Some(14));
        assert_eq!(c.probability_case, 5);
        assert_eq!(c.cross_row, Some(38));
        assert_eq!(c.verdict, ChoiceVerdict::Undefined);
    }

    #[test]
    fn classify_dominated_same_support() {
        // same outcomes, higher win probability dominates
        let c = classify_pair(&prospect(100.0, 0.0, 0.2), &prospect(100.0, 0.0, 0.7));
        assert_eq!(c.combination.row, Some(14));
        assert_eq!(c.probability_case, 10);
        assert_eq!(c.cross_row, Some(41));
        assert_eq!(c.verdict, ChoiceVerdict::Determined(0.0));

        let c = classify_pair(&prospect(100.0, 0.0, 0.7), &prospect(100.0, 0.0, 0.2));
        assert_eq!(c.cross_row, Some(42));
        assert_eq!(c.verdict, ChoiceVerdict::Determined(1.0));
    }

    #[test]
    fn difference_of_risky_gain_and_sure_award() {
        let stats = difference_stats(
            &prospect(4000.0, 0.0, 0.8),
            one(),
            &prospect(3000.0, 3000.0, 1.0),
            one(),
        );
        assert_relative_eq!(stats.mean, 200.0, max_relative = 1e-13);
        assert_relative_eq!(stats.stdev(), 1600.0, max_relative = 1e-13);
        assert_eq!(stats.eta_min, -3000.0);
        assert_eq!(stats.eta_max, 1000.0);
        // schema entropy equals the entropy of the only random operand
        assert_relative_eq!(stats.entropy_bits, 0.721928094887362, max_relative = 1e-14);
    }

    #[test]
    fn difference_of_two_risky_prospects() {
        // equal means, unequal spreads
        let stats = difference_stats(
            &prospect(6000.0, 0.0, 0.45),
            one(),
            &prospect(3000.0, 0.0, 0.9),
            one(),
        );
        assert_eq!(stats.mean, 0.0);
        assert_relative_eq!(stats.stdev(), 3117.6914536239792, max_relative = 1e-13);
        assert_relative_eq!(stats.skewness.unwrap(), 0.24056261216234406, max_relative = 1e-12);
        assert_relative_eq!(stats.excess_kurtosis.unwrap(), -1.6111111111111118, max_relative = 1e-12);
        assert_relative_eq!(stats.entropy_bits, 1.4617700475770894, max_relative = 1e-13);
        assert_eq!(stats.eta_min, -3000.0);
        assert_eq!(stats.eta_max, 6000.0);
    }

    #[test]
    fn difference_of_identical_constants_is_degenerate() {
        let c = prospect(10.0, 10.0, 1.0);
        let stats = difference_stats(&c, one(), &c, one());
        assert_eq!(stats.mean, 0.0);
        assert_eq!(stats.variance, 0.0);
        assert!(stats.skewness.is_none());
        assert!(stats.excess_kurtosis.is_none());
        assert_eq!(stats.entropy_bits, 0.0);
    }

    #[test]
    fn more_plays_shrink_the_difference_variance() {
        let p1 = prospect(4000.0, 0.0, 0.8);
        let p2 = prospect(3000.0, 3000.0, 1.0);
        let one_play = difference_stats(&p1, one(), &p2, one());
        let n = TrialCount::new(16).unwrap();
        let many = difference_stats(&p1, n, &p2, n);
        assert_relative_eq!(many.variance, one_play.variance / 16.0, max_relative = 1e-15);
        assert_eq!(many.mean, one_play.mean);
        // support bounds stay put: means never leave the outcome hull
        assert_eq!(many.eta_min, one_play.eta_min);
        assert_eq!(many.eta_max, one_play.eta_max);
    }

    #[test]
    fn eta_support_orders_and_sums() {
        let support = eta_support_single_trial(&prospect(4000.0, 0.0, 0.8), &prospect(3000.0, 3000.0, 1.0));
        assert_eq!(support.map(|(v, _)| v), [1000.0, 1000.0, -3000.0, -3000.0]);
        assert_eq!(support[0].1, 0.8);
        assert_eq!(support[1].1, 0.0);
        assert_abs_diff_eq!(support[2].1, 0.2, epsilon = 1e-16);
        assert_eq!(support[3].1, 0.0);
        let total: f64 = support.iter().map(|(_, p)| p).sum();
        assert_relative_eq!(total, 1.0, max_relative = 1e-15);
        let mean: f64 = support.iter().map(|(v, p)| v * p).sum();
        assert_relative_eq!(mean, 200.0, max_relative = 1e-13);
    }

    #[test]
    fn fair_coin_differences() {
        let coin = prospect(1.0, 0.0, 0.5);
        let support = eta_support_single_trial(&coin, &coin);
        assert_eq!(support, [(0.0, 0.25), (1.0, 0.25), (-1.0, 0.25), (0.0, 0.25)]);
        // four unmerged cells of 1/4 each
        let stats = difference_stats(&coin, one(), &coin, one());
        assert_eq!(stats.entropy_bits, 2.0);
    }

    #[test]
    fn limit_fraction_follows_the_means() {
        let risky = prospect(4000.0, 0.0, 0.8); // mean 3200
        assert_eq!(
            limit_fraction(&risky, &prospect(3000.0, 3000.0, 1.0)),
            FractionPrediction::Determined(1.0)
        );
        assert_eq!(
            limit_fraction(&risky, &prospect(3300.0, 3300.0, 1.0)),
            FractionPrediction::Determined(0.0)
        );
        assert_eq!(
            limit_fraction(&risky, &prospect(3200.0, 3200.0, 1.0)),
            FractionPrediction::Undefined
        );
    }

    #[test]
    fn deviation_bounds_for_gain_and_mirrored_loss() {
        let (a_max, b_max) = deviation_bounds(
            &prospect(4000.0, 0.0, 0.8),
            one(),
            &prospect(3000.0, 3000.0, 1.0),
            one(),
        )
        .unwrap();
        assert_relative_eq!(a_max, 0.5, max_relative = 1e-13);
        assert_relative_eq!(b_max, 2.0, max_relative = 1e-13);

        // reflection swaps the roles of the two bounds
        let (a_max, b_max) = deviation_bounds(
            &prospect(0.0, -4000.0, 0.2),
            one(),
            &prospect(-3000.0, -3000.0, 1.0),
            one(),
        )
        .unwrap();
        assert_relative_eq!(a_max, 2.0, max_relative = 1e-13);
        assert_relative_eq!(b_max, 0.5, max_relative = 1e-13);
    }

    #[test]
    fn deviation_bounds_need_a_random_operand() {
        let c = prospect(5.0, 5.0, 1.0);
        assert!(matches!(
            deviation_bounds(&c, one(), &c, one()),
            Err(Error::ZeroVariance)
        ));
    }

    #[test]
    fn predicted_fraction_for_risky_gain() {
        let f = predict_fractions(
            &prospect(4000.0, 0.0, 0.8),
            one(),
            &prospect(3000.0, 3000.0, 1.0),
            one(),
            DeviationParams::new(0.0, 0.625).unwrap(),
        )
        .unwrap();
        match f {
            FractionPrediction::Determined(f1) => assert_relative_eq!(f1, 0.2, max_relative = 1e-14),
            other => panic!("expected a determined fraction, got {other:?}"),
        }
    }

    #[test]
    fn predicted_fraction_for_risky_loss() {
        let f = predict_fractions(
            &prospect(0.0, -4000.0, 0.2),
            one(),
            &prospect(-3000.0, -3000.0, 1.0),
            one(),
            DeviationParams::new(1.5625, 0.0).unwrap(),
        )
        .unwrap();
        match f {
            FractionPrediction::Determined(f1) => assert_relative_eq!(f1, 0.92, max_relative = 1e-14),
            other => panic!("expected a determined fraction, got {other:?}"),
        }
    }

    #[test]
    fn out_of_bounds_parameters_are_rejected() {
        let err = predict_fractions(
            &prospect(4000.0, 0.0, 0.8),
            one(),
            &prospect(3000.0, 3000.0, 1.0),
            one(),
            DeviationParams::new(0.6, 0.0).unwrap(),
        )
        .unwrap_err();
        assert!(matches!(err, Error::DeviationOutOfBounds { name: "a", .. }));

        assert!(matches!(
            DeviationParams::new(-0.1, 0.0),
            Err(Error::NegativeDeviation { name: "a", .. })
        ));
    }

    #[test]
    fn identical_prospects_admit_no_preference() {
        let p = prospect(100.0, -50.0, 0.3);
        let f = predict_fractions(&p, one(), &p, one(), DeviationParams::new(0.1, 0.1).unwrap()).unwrap();
        assert_eq!(f, FractionPrediction::Undefined);
    }

    #[test]
    fn constant_pair_ignores_parameters() {
        let f = predict_fractions(
            &prospect(3.0, 3.0, 1.0),
            one(),
            &prospect(2.0, 2.0, 1.0),
            one(),
            DeviationParams::new(7.0, 9.0).unwrap(),
        )
        .unwrap();
        assert_eq!(f, FractionPrediction::Determined(1.0));
    }

    #[test]
    fn equal_means_split_by_parameter_ratio() {
        // E = 0: f1 = a/(a+b)
        let p1 = prospect(100.0, -100.0, 0.5);
        let p2 = prospect(50.0, -50.0, 0.5);
        let f = predict_fractions(&p1, one(), &p2, one(), DeviationParams::new(0.5, 1.0).unwrap()).unwrap();
        match f {
            FractionPrediction::Determined(f1) => assert_relative_eq!(f1, 1.0 / 3.0, max_relative = 1e-14),
            other => panic!("expected a determined fraction, got {other:?}"),
        }
        let f = predict_fractions(&p1, one(), &p2, one(), DeviationParams::new(1.0, 1.0).unwrap()).unwrap();
        assert_eq!(f, FractionPrediction::Determined(0.5));
        // both deviation terms shut off
        let f = predict_fractions(&p1, one(), &p2, one(), DeviationParams::new(0.0, 0.0).unwrap()).unwrap();
        assert_eq!(f, FractionPrediction::Undefined);
    }

    #[test]
    fn iso_fraction_line_for_risky_gain() {
        let stats = difference_stats(
            &prospect(4000.0, 0.0, 0.8),
            one(),
            &prospect(3000.0, 3000.0, 1.0),
            one(),
        );
        let b0 = b_from_a(&stats, 0.2, 0.0).unwrap();
        assert_relative_eq!(b0, 0.625, max_relative = 1e-13);
        let b1 = b_from_a(&stats, 0.2, 0.1).unwrap();
        assert_relative_eq!(b1, 1.025, max_relative = 1e-13);
        // slope (1-f1)/f1 = 4
        assert_relative_eq!((b1 - b0) / 0.1, 4.0, max_relative = 1e-12);

        // points on the line reproduce the fraction
        for a in [0.0, 0.1, 0.34] {
            let b = b_from_a(&stats, 0.2, a).unwrap();
            let f = predict_fractions(
                &prospect(4000.0, 0.0, 0.8),
                one(),
                &prospect(3000.0, 3000.0, 1.0),
                one(),
                DeviationParams::new(a, b).unwrap(),
            )
            .unwrap();
            match f {
                FractionPrediction::Determined(f1) => assert_relative_eq!(f1, 0.2, max_relative = 1e-12),
                other => panic!("expected a determined fraction, got {other:?}"),
            }
        }
    }

    #[test]
    fn iso_fraction_line_for_risky_loss() {
        let stats = difference_stats(
            &prospect(0.0, -4000.0, 0.2),
            one(),
            &prospect(-3000.0, -3000.0, 1.0),
            one(),
        );
        // intercept E/(sigma f1) = -200/(1600 * 0.92) = -25/184
        let b0 = b_from_a(&stats, 0.92, 0.0).unwrap();
        assert_relative_eq!(b0, -25.0 / 184.0, max_relative = 1e-12);
        assert_relative_eq!(
            b_from_a(&stats, 0.92, 1.0).unwrap() - b0,
            2.0 / 23.0,
            max_relative = 1e-12
        );
    }

    #[test]
    fn degenerate_fraction_targets_are_rejected() {
        let stats = difference_stats(
            &prospect(4000.0, 0.0, 0.8),
            one(),
            &prospect(3000.0, 3000.0, 1.0),
            one(),
        );
        assert!(matches!(b_from_a(&stats, 0.0, 0.1), Err(Error::DegenerateTargetFraction(_))));
        assert!(matches!(b_from_a(&stats, 1.0, 0.1), Err(Error::DegenerateTargetFraction(_))));
        assert!(matches!(b_from_a(&stats, 0.5, -0.1), Err(Error::NegativeDeviation { .. })));
    }

    #[test]
    fn designed_pair_reproduces_the_gain_problem() {
        let (risky, award) = design_pair_with_skewness(200.0, 2_560_000.0, -1.5, one(), 0.0).unwrap();
        assert_eq!(risky.a_p(), 4000.0);
        assert_eq!(risky.a_q(), 0.0);
        assert_eq!(risky.p(), 0.8);
        assert_eq!(award.constant_value(), Some(3000.0));
    }

    #[test]
    fn designed_pair_reproduces_the_loss_problem() {
        // fixing max1 = 0 means min1 = -sqrt(D n (4 + n gamma1^2))
        let (risky, award) = design_pair_with_skewness(-200.0, 2_560_000.0, 1.5, one(), -4000.0).unwrap();
        assert_eq!(risky.a_p(), 0.0);
        assert_eq!(risky.a_q(), -4000.0);
        assert_eq!(risky.p(), 0.2);
        assert_eq!(award.constant_value(), Some(-3000.0));
    }

    #[test]
    fn zero_skew_design_is_a_fair_coin() {
        let (risky, _) = design_pair_with_skewness(10.0, 400.0, 0.0, one(), 0.0).unwrap();
        assert_eq!(risky.p(), 0.5);
    }

    #[test]
    fn designed_pair_hits_the_targets() {
        for &(e, d, gamma1, n) in &[
            (200.0, 2_560_000.0, -1.5, 1u64),
            (-200.0, 2_560_000.0, 1.5, 1),
            (0.0, 4.0, 0.7, 4),
            (-3.5, 0.25, 3.25, 9),
            (1e6, 1e10, -0.01, 52),
        ] {
            let trials = TrialCount::new(n).unwrap();
            let (risky, award) = design_pair_with_skewness(e, d, gamma1, trials, 7.0).unwrap();
            let stats = difference_stats(&risky, trials, &award, trials);
            assert_relative_eq!(stats.mean, e, max_relative = 1e-9, epsilon = 1e-9);
            assert_relative_eq!(stats.variance, d, max_relative = 1e-9);
            assert_relative_eq!(stats.skewness.unwrap(), gamma1, max_relative = 1e-9, epsilon = 1e-12);
        }
    }

    #[test]
    fn design_rejects_bad_targets() {
        assert!(design_pair_with_skewness(0.0, 0.0, 0.5, one(), 0.0).is_err());
        assert!(design_pair_with_skewness(0.0, -4.0, 0.5, one(), 0.0).is_err());
        assert!(design_pair_with_skewness(f64::NAN, 1.0, 0.5, one(), 0.0).is_err());
    }

    #[test]
    fn gamma_sweep_reproduces_published_fractions() {
        // gain problem hyperbola point: a = a_max/2, b = 1.625 b_max/2
        let points = f1_of_gamma(200.0, 2_560_000.0, one(), 2.0, 2.0 / 1.625, &[-1.5]).unwrap();
        assert_eq!(points.len(), 1);
        assert_eq!(points[0].0, -1.5);
        assert_relative_eq!(points[0].1, 0.2, max_relative = 1e-13);

        // loss problem: a = a_max/1.25, b = 3 b_max/460
        let points = f1_of_gamma(-200.0, 2_560_000.0, one(), 1.25, 460.0 / 3.0, &[1.5]).unwrap();
        assert_relative_eq!(points[0].1, 0.92, max_relative = 1e-13);
    }

    #[test]
    fn gamma_sweep_rises_with_skewness_here() {
        let grid = [-1.5, -0.75, 0.0, 0.75, 1.5];
        let points = f1_of_gamma(200.0, 2_560_000.0, one(), 2.0, 2.0 / 1.625, &grid).unwrap();
        for pair in points.windows(2) {
            assert!(pair[0].1 < pair[1].1, "f1 must grow along {pair:?}");
        }
    }

    #[test]
    fn gamma_sweep_validates_scale_constants() {
        assert!(f1_of_gamma(200.0, 2_560_000.0, one(), 0.9, 2.0, &[0.0]).is_err());
        assert!(f1_of_gamma(200.0, 2_560_000.0, one(), 2.0, f64::INFINITY, &[0.0]).is_err());
    }

    #[test]
    fn designed_bounds_multiply_to_the_play_count() {
        for &(gamma1, n) in &[(-1.5, 1u64), (1.5, 1), (0.0, 3), (2.5, 7), (-0.3, 40)] {
            let trials = TrialCount::new(n).unwrap();
            let (risky, award) = design_pair_with_skewness(200.0, 2_560_000.0, gamma1, trials, 0.0).unwrap();
            let (a_max, b_max) = deviation_bounds(&risky, trials, &award, trials).unwrap();
            assert_relative_eq!(a_max * b_max, n as f64, max_relative = 1e-9);
        }
    }

    #[test]
    fn display_spells_the_pattern() {
        let c = classify_pair(&prospect(4000.0, 0.0, 0.8), &prospect(3000.0, 3000.0, 1.0));
        assert_eq!(c.combination.to_string(), "min1 < min2 = max2 < max1");
    }
}
