//! Raw table values compiled into the library.
//!
//! These constants are the authoritative copies; the CSV files shipped
//! under `data/` are generated from them and checked for agreement in
//! tests.

use super::Source::{
    self, KahnemanTversky1979 as KT, TverskyKahneman1992 as TK, Williams1966 as WM,
};

/// id, ap1, aq1, p1, ap2, aq2, p2, f1, voters, source, t2, t3, t4.
pub(super) type ExperimentTuple = (
    u8,
    f64,
    f64,
    f64,
    f64,
    f64,
    f64,
    Option<f64>,
    Option<u32>,
    Source,
    u8,
    u8,
    Option<u8>,
);

pub(super) const EXPERIMENTS: [ExperimentTuple; 73] = [
    (1, 2500.0, 0.0, 0.33, 2400.0, 0.0, 0.34, Some(0.83), Some(72), KT, 15, 10, None),
    (2, 4000.0, 0.0, 0.80, 3000.0, 3000.0, 1.0, Some(0.20), Some(95), KT, 8, 6, Some(25)),
    (3, 4000.0, 0.0, 0.20, 3000.0, 0.0, 0.25, Some(0.65), Some(95), KT, 15, 10, None),
    (4, 6000.0, 0.0, 0.45, 3000.0, 0.0, 0.90, Some(0.14), Some(66), KT, 15, 10, None),
    (5, 6000.0, 0.0, 0.001, 3000.0, 0.0, 0.002, Some(0.73), Some(66), KT, 15, 10, None),
    (6, 0.0, -4000.0, 0.20, -3000.0, -3000.0, 1.0, Some(0.92), Some(95), KT, 8, 6, Some(25)),
    (7, 0.0, -4000.0, 0.80, 0.0, -3000.0, 0.75, Some(0.42), Some(95), KT, 6, 11, Some(14)),
    (8, 0.0, -6000.0, 0.55, 0.0, -3000.0, 0.10, Some(0.92), Some(66), KT, 6, 11, Some(14)),
    (9, 0.0, -6000.0, 0.999, 0.0, -3000.0, 0.998, Some(0.30), Some(66), KT, 6, 11, Some(14)),
    (10, 1000.0, 0.0, 0.50, 500.0, 500.0, 1.0, Some(0.16), Some(70), KT, 8, 6, Some(25)),
    (11, 0.0, -1000.0, 0.50, -500.0, -500.0, 1.0, Some(0.69), Some(68), KT, 8, 6, Some(25)),
    (12, 5000.0, 0.0, 0.001, 5.0, 5.0, 1.0, Some(0.72), Some(72), KT, 8, 6, Some(25)),
    (13, 0.0, -5000.0, 0.999, -5.0, -5.0, 1.0, Some(0.17), Some(72), KT, 8, 6, Some(25)),
    (14, 1260.0, 1260.0, 1.0, 3394.0, 0.0, 0.50, Some(0.78), Some(72), KT, 22, 8, None),
    (15, 1260.0, 0.0, 0.10, 3394.0, 0.0, 0.05, Some(0.33), Some(72), KT, 13, 11, Some(35)),
    (16, 9.0, 9.0, 1.0, 50.0, 0.0, 0.10, None, Some(25), TK, 22, 8, None),
    (17, 21.0, 21.0, 1.0, 50.0, 0.0, 0.50, None, Some(25), TK, 22, 8, None),
    (18, 37.0, 37.0, 1.0, 50.0, 0.0, 0.90, None, Some(25), TK, 22, 8, None),
    (19, -8.0, -8.0, 1.0, 0.0, -50.0, 0.90, None, Some(25), TK, 22, 8, None),
    (20, -21.0, -21.0, 1.0, 0.0, -50.0, 0.50, None, Some(25), TK, 22, 8, None),
    (21, -39.0, -39.0, 1.0, 0.0, -50.0, 0.10, None, Some(25), TK, 22, 8, None),
    (22, 14.0, 14.0, 1.0, 100.0, 0.0, 0.05, None, Some(25), TK, 22, 8, None),
    (23, 25.0, 25.0, 1.0, 100.0, 0.0, 0.25, None, Some(25), TK, 22, 8, None),
    (24, 36.0, 36.0, 1.0, 100.0, 0.0, 0.50, None, Some(25), TK, 22, 8, None),
    (25, 52.0, 52.0, 1.0, 100.0, 0.0, 0.75, None, Some(25), TK, 22, 8, None),
    (26, 78.0, 78.0, 1.0, 100.0, 0.0, 0.95, None, Some(25), TK, 22, 8, None),
    (27, -8.0, -8.0, 1.0, 0.0, -100.0, 0.95, None, Some(25), TK, 22, 8, None),
    (28, -23.5, -23.5, 1.0, 0.0, -100.0, 0.75, None, Some(25), TK, 22, 8, None),
    (29, -42.0, -42.0, 1.0, 0.0, -100.0, 0.50, None, Some(25), TK, 22, 8, None),
    (30, -63.0, -63.0, 1.0, 0.0, -100.0, 0.25, None, Some(25), TK, 22, 8, None),
    (31, -84.0, -84.0, 1.0, 0.0, -100.0, 0.05, None, Some(25), TK, 22, 8, None),
    (32, 10.0, 10.0, 1.0, 200.0, 0.0, 0.01, None, Some(25), TK, 22, 8, None),
    (33, 20.0, 20.0, 1.0, 200.0, 0.0, 0.10, None, Some(25), TK, 22, 8, None),
    (34, 76.0, 76.0, 1.0, 200.0, 0.0, 0.50, None, Some(25), TK, 22, 8, None),
    (35, 131.0, 131.0, 1.0, 200.0, 0.0, 0.90, None, Some(25), TK, 22, 8, None),
    (36, 188.0, 188.0, 1.0, 200.0, 0.0, 0.99, None, Some(25), TK, 22, 8, None),
    (37, -3.0, -3.0, 1.0, 0.0, -200.0, 0.99, None, Some(25), TK, 22, 8, None),
    (38, -23.0, -23.0, 1.0, 0.0, -200.0, 0.90, None, Some(25), TK, 22, 8, None),
    (39, -89.0, -89.0, 1.0, 0.0, -200.0, 0.50, None, Some(25), TK, 22, 8, None),
    (40, -155.0, -155.0, 1.0, 0.0, -200.0, 0.10, None, Some(25), TK, 22, 8, None),
    (41, -190.0, -190.0, 1.0, 0.0, -200.0, 0.01, None, Some(25), TK, 22, 8, None),
    (42, 12.0, 12.0, 1.0, 400.0, 0.0, 0.01, None, Some(25), TK, 22, 8, None),
    (43, 377.0, 377.0, 1.0, 400.0, 0.0, 0.99, None, Some(25), TK, 22, 8, None),
    (44, -14.0, -14.0, 1.0, 0.0, -400.0, 0.99, None, Some(25), TK, 22, 8, None),
    (45, -380.0, -380.0, 1.0, 0.0, -400.0, 0.01, None, Some(25), TK, 22, 8, None),
    (46, 59.0, 59.0, 1.0, 100.0, 50.0, 0.10, None, Some(25), TK, 22, 8, None),
    (47, 71.0, 71.0, 1.0, 100.0, 50.0, 0.50, None, Some(25), TK, 22, 8, None),
    (48, 83.0, 83.0, 1.0, 100.0, 50.0, 0.90, None, Some(25), TK, 22, 8, None),
    (49, -59.0, -59.0, 1.0, -50.0, -100.0, 0.90, None, Some(25), TK, 22, 8, None),
    (50, -71.0, -71.0, 1.0, -50.0, -100.0, 0.50, None, Some(25), TK, 22, 8, None),
    (51, -85.0, -85.0, 1.0, -50.0, -100.0, 0.10, None, Some(25), TK, 22, 8, None),
    (52, 64.0, 64.0, 1.0, 150.0, 50.0, 0.05, None, Some(25), TK, 22, 8, None),
    (53, 72.5, 72.5, 1.0, 150.0, 50.0, 0.25, None, Some(25), TK, 22, 8, None),
    (54, 86.0, 86.0, 1.0, 150.0, 50.0, 0.50, None, Some(25), TK, 22, 8, None),
    (55, 102.0, 102.0, 1.0, 150.0, 50.0, 0.75, None, Some(25), TK, 22, 8, None),
    (56, 128.0, 128.0, 1.0, 150.0, 50.0, 0.95, None, Some(25), TK, 22, 8, None),
    (57, -60.0, -60.0, 1.0, -50.0, -150.0, 0.95, None, Some(25), TK, 22, 8, None),
    (58, -71.0, -71.0, 1.0, -50.0, -150.0, 0.75, None, Some(25), TK, 22, 8, None),
    (59, -92.0, -92.0, 1.0, -50.0, -150.0, 0.50, None, Some(25), TK, 22, 8, None),
    (60, -113.0, -113.0, 1.0, -50.0, -150.0, 0.25, None, Some(25), TK, 22, 8, None),
    (61, -132.0, -132.0, 1.0, -50.0, -150.0, 0.05, None, Some(25), TK, 22, 8, None),
    (62, 118.0, 118.0, 1.0, 200.0, 100.0, 0.05, None, Some(25), TK, 22, 8, None),
    (63, 130.0, 130.0, 1.0, 200.0, 100.0, 0.25, None, Some(25), TK, 22, 8, None),
    (64, 141.0, 141.0, 1.0, 200.0, 100.0, 0.50, None, Some(25), TK, 22, 8, None),
    (65, 162.0, 162.0, 1.0, 200.0, 100.0, 0.75, None, Some(25), TK, 22, 8, None),
    (66, 178.0, 178.0, 1.0, 200.0, 100.0, 0.95, None, Some(25), TK, 22, 8, None),
    (67, -112.0, -112.0, 1.0, -100.0, -200.0, 0.95, None, Some(25), TK, 22, 8, None),
    (68, -121.0, -121.0, 1.0, -100.0, -200.0, 0.75, None, Some(25), TK, 22, 8, None),
    (69, -142.0, -142.0, 1.0, -100.0, -200.0, 0.50, None, Some(25), TK, 22, 8, None),
    (70, -158.0, -158.0, 1.0, -100.0, -200.0, 0.25, None, Some(25), TK, 22, 8, None),
    (71, -179.0, -179.0, 1.0, -100.0, -200.0, 0.05, None, Some(25), TK, 22, 8, None),
    (72, 100.0, -100.0, 0.65, 0.0, 0.0, 1.0, Some(0.50), None, WM, 8, 6, Some(25)),
    (73, 0.0, -200.0, 0.20, -100.0, -100.0, 1.0, Some(0.50), None, WM, 8, 6, Some(25)),
];

/// date, amount in millions, winning tickets, starred candidate.
pub(super) const HISTORY: [(&str, f64, u32, bool); 145] = [
    ("1/3/2014", 61.0, 1, false),
    ("12/17/2013", 648.0, 2, true),
    ("10/1/2013", 189.0, 1, false),
    ("7/26/2013", 19.0, 1, false),
    ("7/16/2013", 20.0, 1, false),
    ("7/5/2013", 80.0, 1, false),
    ("5/31/2013", 30.0, 1, false),
    ("5/17/2013", 198.0, 2, false),
    ("3/12/2013", 41.0, 1, false),
    ("2/19/2013", 26.0, 1, false),
    ("2/5/2013", 19.0, 1, false),
    ("1/25/2013", 89.0, 1, false),
    ("12/14/2012", 35.0, 1, false),
    ("11/27/2012", 50.0, 1, false),
    ("11/2/2012", 33.0, 1, false),
    ("10/16/2012", 61.0, 2, false),
    ("9/18/2012", 14.0, 1, false),
    ("9/11/2012", 120.0, 1, false),
    ("7/27/2012", 52.0, 1, false),
    ("7/3/2012", 85.0, 1, false),
    ("5/29/2012", 32.0, 1, false),
    ("5/15/2012", 25.0, 1, false),
    ("5/4/2012", 118.0, 1, false),
    ("3/30/2012", 656.0, 3, true),
    ("1/24/2012", 72.0, 1, false),
    ("12/27/2011", 208.0, 1, false),
    ("11/1/2011", 78.0, 1, false),
    ("9/30/2011", 113.0, 2, false),
    ("8/19/2011", 32.0, 1, false),
    ("8/5/2011", 99.0, 1, false),
    ("7/1/2011", 107.0, 1, false),
    ("5/27/2011", 35.0, 1, false),
    ("5/13/2011", 27.0, 1, false),
    ("5/3/2011", 51.0, 1, false),
    ("4/15/2011", 72.0, 1, false),
    ("3/25/2011", 319.0, 1, false),
    ("2/1/2011", 93.0, 2, false),
    ("1/4/2011", 380.0, 2, true),
    ("11/9/2010", 25.0, 1, false),
    ("10/29/2010", 141.0, 1, false),
    ("9/17/2010", 54.0, 1, false),
    ("8/27/2010", 135.0, 1, false),
    ("7/16/2010", 64.0, 1, false),
    ("6/22/2010", 26.0, 1, false),
    ("6/11/2010", 36.0, 1, false),
    ("5/28/2010", 12.0, 1, false),
    ("5/25/2010", 64.0, 1, false),
    ("5/4/2010", 266.0, 1, false),
    ("3/12/2010", 20.0, 1, false),
    ("3/5/2010", 134.0, 1, false),
    ("1/29/2010", 144.0, 1, false),
    ("12/22/2009", 165.0, 1, false),
    ("11/10/2009", 77.0, 2, false),
    ("10/16/2009", 200.0, 1, false),
    ("9/1/2009", 12.0, 1, false),
    ("8/28/2009", 336.0, 2, false),
    ("7/7/2009", 133.0, 1, false),
    ("5/29/2009", 35.0, 1, false),
    ("5/15/2009", 38.0, 2, false),
    ("5/1/2009", 227.0, 3, false),
    ("3/13/2009", 26.0, 1, false),
    ("3/3/2009", 216.0, 1, false),
    ("1/13/2009", 22.0, 1, false),
    ("1/2/2009", 47.0, 1, false),
    ("12/12/2008", 207.0, 1, false),
    ("10/21/2008", 42.0, 1, false),
    ("10/3/2008", 42.0, 1, false),
    ("9/16/2008", 15.0, 1, false),
    ("9/9/2008", 24.0, 1, false),
    ("8/29/2008", 133.0, 1, false),
    ("7/22/2008", 126.0, 1, false),
    ("6/13/2008", 57.0, 1, false),
    ("5/23/2008", 17.0, 2, false),
    ("5/16/2008", 196.0, 1, false),
    ("4/1/2008", 136.0, 1, false),
    ("2/22/2008", 275.0, 1, false),
    ("1/1/2008", 33.0, 1, false),
    ("12/18/2007", 163.0, 2, false),
    ("11/2/2007", 75.0, 1, false),
    ("10/5/2007", 27.0, 1, false),
    ("9/25/2007", 12.0, 1, false),
    ("9/21/2007", 61.0, 1, false),
    ("8/31/2007", 330.0, 4, false),
    ("7/6/2007", 128.0, 1, false),
    ("5/29/2007", 44.0, 1, false),
    ("5/11/2007", 113.0, 1, false),
    ("4/6/2007", 105.0, 1, false),
    ("3/6/2007", 390.0, 2, true),
    ("1/9/2007", 125.0, 1, false),
    ("12/1/2006", 40.0, 1, false),
    ("11/14/2006", 75.0, 1, false),
    ("10/17/2006", 55.0, 1, false),
    ("9/26/2006", 15.0, 1, false),
    ("9/19/2006", 12.0, 1, false),
    ("9/15/2006", 163.0, 1, false),
    ("8/1/2006", 31.0, 1, false),
    ("7/18/2006", 49.0, 1, false),
    ("6/27/2006", 24.0, 1, false),
    ("6/16/2006", 35.0, 1, false),
    ("6/2/2006", 47.0, 1, false),
    ("5/16/2006", 94.0, 1, false),
    ("4/18/2006", 265.0, 1, false),
    ("2/28/2006", 270.0, 1, false),
    ("1/6/2006", 15.0, 1, false),
    ("12/30/2005", 88.0, 1, false),
    ("11/29/2005", 35.0, 2, false),
    ("11/15/2005", 315.0, 1, false),
    ("9/16/2005", 258.0, 1, false),
    ("7/22/2005", 170.0, 1, false),
    ("6/3/2005", 106.0, 1, false),
    ("4/22/2005", 208.0, 1, false),
    ("3/1/2005", 115.0, 1, false),
    ("1/18/2005", 131.0, 1, false),
    ("12/3/2004", 25.0, 1, false),
    ("11/19/2004", 149.0, 1, false),
    ("10/1/2004", 106.0, 1, false),
    ("8/20/2004", 52.0, 1, false),
    ("7/27/2004", 10.0, 1, false),
    ("7/23/2004", 47.0, 1, false),
    ("7/2/2004", 294.0, 1, true),
    ("5/7/2004", 67.0, 1, false),
    ("4/9/2004", 109.0, 1, false),
    ("3/2/2004", 21.0, 1, false),
    ("2/20/2004", 239.0, 1, false),
    ("12/30/2003", 162.0, 1, false),
    ("11/11/2003", 70.0, 3, false),
    ("10/7/2003", 12.0, 1, false),
    ("9/30/2003", 150.0, 1, false),
    ("8/8/2003", 50.0, 1, false),
    ("7/11/2003", 34.0, 1, false),
    ("6/20/2003", 183.0, 1, false),
    ("4/25/2003", 46.0, 1, false),
    ("3/28/2003", 20.0, 1, false),
    ("3/14/2003", 43.0, 1, false),
    ("2/18/2003", 12.0, 1, false),
    ("2/11/2003", 128.0, 1, false),
    ("12/24/2002", 68.0, 1, false),
    ("11/19/2002", 16.0, 1, false),
    ("11/8/2002", 93.0, 1, false),
    ("9/27/2002", 37.0, 1, false),
    ("9/6/2002", 17.0, 1, false),
    ("8/27/2002", 108.0, 1, false),
    ("7/16/2002", 165.0, 1, false),
    ("5/24/2002", 12.0, 1, false),
    ("5/17/2002", 28.0, 1, false),
];

/// date, days since the run started, year fraction as printed, jackpot.
pub(super) const GROWTH: [(&str, u32, f64, f64); 20] = [
    ("3/27/2015", 0, 0.0000, 15_000_000.0),
    ("3/31/2015", 4, 0.0110, 20_000_000.0),
    ("4/3/2015", 7, 0.0192, 25_000_000.0),
    ("4/7/2015", 11, 0.0301, 30_000_000.0),
    ("4/10/2015", 14, 0.0384, 39_000_000.0),
    ("4/14/2015", 18, 0.0493, 47_000_000.0),
    ("4/17/2015", 21, 0.0575, 55_000_000.0),
    ("4/21/2015", 25, 0.0685, 65_000_000.0),
    ("4/24/2015", 28, 0.0767, 74_000_000.0),
    ("4/28/2015", 32, 0.0877, 85_000_000.0),
    ("5/1/2015", 35, 0.0959, 96_000_000.0),
    ("5/5/2015", 39, 0.1068, 110_000_000.0),
    ("5/8/2015", 42, 0.1151, 126_000_000.0),
    ("5/12/2015", 46, 0.1260, 140_000_000.0),
    ("5/15/2015", 49, 0.1342, 159_000_000.0),
    ("5/19/2015", 53, 0.1452, 173_000_000.0),
    ("5/22/2015", 56, 0.1534, 194_000_000.0),
    ("5/26/2015", 60, 0.1644, 214_000_000.0),
    ("5/29/2015", 63, 0.1726, 233_000_000.0),
    ("6/2/2015", 67, 0.1836, 260_000_000.0),
];

/// Resident populations of the 44 participating states, the District of
/// Columbia, and the U.S. Virgin Islands.
pub(super) const STATE_POPULATIONS: [(&str, u64); 46] = [
    ("AR", 2_966_369),
    ("AZ", 6_731_484),
    ("CA", 38_802_500),
    ("CO", 5_355_866),
    ("CT", 3_596_677),
    ("DE", 935_614),
    ("FL", 19_893_297),
    ("GA", 10_097_343),
    ("IA", 3_107_124),
    ("ID", 1_634_464),
    ("IL", 12_880_580),
    ("IN", 6_596_855),
    ("KS", 2_904_021),
    ("KY", 4_413_457),
    ("LA", 4_649_676),
    ("MA", 6_745_408),
    ("MD", 5_976_407),
    ("ME", 1_330_089),
    ("MI", 9_909_877),
    ("MN", 5_458_333),
    ("MO", 6_063_589),
    ("MT", 1_023_579),
    ("NC", 9_943_964),
    ("ND", 739_482),
    ("NE", 1_881_503),
    ("NH", 87_137),
    ("NJ", 8_938_175),
    ("NM", 2_085_572),
    ("NY", 19_746_227),
    ("OH", 11_594_163),
    ("OK", 3_878_051),
    ("OR", 3_970_239),
    ("PA", 12_787_209),
    ("RI", 1_055_173),
    ("SC", 4_832_482),
    ("SD", 853_175),
    ("TN", 6_549_352),
    ("TX", 27_695_284),
    ("VA", 8_326_289),
    ("VT", 626_562),
    ("WA", 7_061_530),
    ("WI", 5_757_564),
    ("WV", 1_850_326),
    ("WY", 584_153),
    ("DC", 658_893),
    ("VI", 106_405),
];
