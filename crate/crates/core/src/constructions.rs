//! The four extremal colorings `G1(n,k)`..`G4(n,k)` of `K_n`, their closed-form
//! color counts, the competing anti-Ramsey formulas, and the transition table
//! between families.
//!
//! Every formula is evaluated in exact integer (or rational) arithmetic.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::graph::{pairs, EdgeColoredGraph, GraphBuilder};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    G1,
    G2,
    G3,
    G4,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::G1, Family::G2, Family::G3, Family::G4];

    /// Order used to break ties between families with equal color counts.
    pub const TIE_ORDER: [Family; 4] = [Family::G4, Family::G3, Family::G2, Family::G1];

    pub fn name(self) -> &'static str {
        match self {
            Family::G1 => "G1",
            Family::G2 => "G2",
            Family::G3 => "G3",
            Family::G4 => "G4",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "G1" => Ok(Family::G1),
            "G2" => Ok(Family::G2),
            "G3" => Ok(Family::G3),
            "G4" => Ok(Family::G4),
            _ => Err(Error::InvalidParams(format!("unknown family {s:?}"))),
        }
    }
}

/// Vertex layout of a construction. `X` comes first, then `Y1`, then `Y2`.
/// Families with a single `Y` part put it in `y1` and leave `y2` empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layout {
    pub x: Range<usize>,
    pub y1: Range<usize>,
    pub y2: Range<usize>,
}

impl Layout {
    fn from_sizes(x: usize, y1: usize, y2: usize) -> Self {
        Layout { x: 0..x, y1: x..x + y1, y2: x + y1..x + y1 + y2 }
    }

    /// `Y1 ∪ Y2`.
    pub fn y(&self) -> Range<usize> {
        self.y1.start..self.y2.end
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionSpec {
    pub family: Family,
    pub n: usize,
    pub k: usize,
    pub layout: Layout,
}

impl ConstructionSpec {
    /// Validates `(family, n, k)` and derives the part sizes.
    pub fn new(family: Family, n: usize, k: usize) -> Result<Self> {
        let fail = |why: String| Err(Error::InvalidParams(format!("{family}({n},{k}): {why}")));
        let layout = match family {
            Family::G1 | Family::G2 | Family::G3 => {
                if k < 2 {
                    return fail("requires k >= 2".into());
                }
                if n < 3 * k {
                    return fail("requires n >= 3k".into());
                }
                match family {
                    Family::G1 => {
                        let y = n - k + 2;
                        Layout::from_sizes(k - 2, y / 2, y.div_ceil(2))
                    }
                    Family::G2 => {
                        let x = 2 * k - 3;
                        if n + 6 < 4 * k {
                            return fail("requires n >= 4k - 6 so that |Y2| >= 0".into());
                        }
                        Layout::from_sizes(x, n / 2, n.div_ceil(2) - x)
                    }
                    _ => Layout::from_sizes(2 * k - 3, n - 2 * k + 3, 0),
                }
            }
            Family::G4 => {
                if k < 1 {
                    return fail("requires k >= 1".into());
                }
                if n + 1 < 3 * k {
                    return fail("requires n >= 3k - 1".into());
                }
                Layout::from_sizes(3 * k - 1, n + 1 - 3 * k, 0)
            }
        };
        debug_assert_eq!(layout.y2.end, n);
        Ok(ConstructionSpec { family, n, k, layout })
    }

    fn in_rainbow_part(&self, u: usize, v: usize) -> bool {
        let l = &self.layout;
        let (x, y1, y2) = (&l.x, &l.y1, &l.y2);
        let across = |a: &Range<usize>, b: &Range<usize>| {
            (a.contains(&u) && b.contains(&v)) || (a.contains(&v) && b.contains(&u))
        };
        match self.family {
            // K_X ∨ K_{Y1,Y2}
            Family::G1 => {
                (x.contains(&u) || x.contains(&v)) || across(y1, y2)
            }
            // Y1 joined to (K_X ∪ independent Y2)
            Family::G2 => (x.contains(&u) && x.contains(&v)) || across(y1, x) || across(y1, y2),
            // Y joined to K_X
            Family::G3 => x.contains(&u) || x.contains(&v),
            Family::G4 => unreachable!("G4 is colored vertex by vertex"),
        }
    }

    /// Generates the coloring; colors are canonically relabeled.
    pub fn build(&self) -> EdgeColoredGraph {
        let n = self.n;
        let mut b = GraphBuilder::new(n).expect("n >= 3k >= 2");
        match self.family {
            Family::G4 => {
                let x = self.layout.x.end;
                let mut next = 1u32;
                for (u, v) in pairs(x) {
                    b.add(u, v, next).expect("fresh pair");
                    next += 1;
                }
                // y_j receives one new color on all edges back to X ∪ {y_1..y_{j-1}}.
                for y in x..n {
                    for u in 0..y {
                        b.add(u, y, next).expect("fresh pair");
                    }
                    next += 1;
                }
            }
            _ => {
                let rainbow: Vec<(usize, usize)> =
                    pairs(n).filter(|&(u, v)| self.in_rainbow_part(u, v)).collect();
                let shared = rainbow.len() as u32 + 1;
                let mut next = 1u32;
                for (u, v) in pairs(n) {
                    if self.in_rainbow_part(u, v) {
                        b.add(u, v, next).expect("fresh pair");
                        next += 1;
                    } else {
                        b.add(u, v, shared).expect("fresh pair");
                    }
                }
            }
        }
        b.finish().canonical()
    }
}

pub fn build_construction(family: Family, n: usize, k: usize) -> Result<EdgeColoredGraph> {
    Ok(ConstructionSpec::new(family, n, k)?.build())
}

fn choose2(m: i64) -> i64 {
    if m < 2 {
        0
    } else {
        m * (m - 1) / 2
    }
}

/// Closed-form color count `c(G_i(n,k))`.
pub fn color_count_formula(family: Family, n: usize, k: usize) -> Result<i64> {
    ConstructionSpec::new(family, n, k)?;
    let (n, k) = (n as i64, k as i64);
    Ok(match family {
        Family::G1 => choose2(k - 2) + (k - 2) * (n - k + 2) + (n - k + 2).pow(2) / 4 + 1,
        Family::G2 => choose2(2 * k - 3) + n * n / 4 + 1,
        Family::G3 => choose2(2 * k - 3) + (n - 2 * k + 3) * (2 * k - 3) + 1,
        Family::G4 => choose2(3 * k - 1) + n - 3 * k + 1,
    })
}

fn require_conjecture_range(n: usize, k: usize) -> Result<()> {
    if k < 2 || n < 3 * k {
        return Err(Error::InvalidParams(format!("requires k >= 2 and n >= 3k, got n={n}, k={k}")));
    }
    Ok(())
}

/// The family maximizing the color count at `(n, k)`; ties go to the family
/// listed first in [`Family::TIE_ORDER`].
pub fn best_construction(n: usize, k: usize) -> Result<(Family, i64)> {
    require_conjecture_range(n, k)?;
    let mut best: Option<(Family, i64)> = None;
    for family in Family::TIE_ORDER {
        if let Ok(value) = color_count_formula(family, n, k) {
            if best.is_none_or(|(_, b)| value > b) {
                best = Some((family, value));
            }
        }
    }
    Ok(best.expect("G3 and G4 are valid whenever n >= 3k, k >= 2"))
}

/// `max{ C(3k-1,2) + n - 3k + 1, ⌊(n-k+2)²/4⌋ + (k-2)(n-k+2) + C(k-2,2) + 1 }`.
pub fn conjectured_value(n: usize, k: usize) -> Result<i64> {
    require_conjecture_range(n, k)?;
    let (n, k) = (n as i64, k as i64);
    let first = choose2(3 * k - 1) + n - 3 * k + 1;
    let second = (n - k + 2).pow(2) / 4 + (k - 2) * (n - k + 2) + choose2(k - 2) + 1;
    Ok(first.max(second))
}

/// `⌊(n-k+1)²/4⌋ + (k-2)(n-k+2) + C(k-2,2) + 1`, stated for `n >= 15k + 27`.
///
/// Note the `(n-k+1)` inside the floor, where [`conjectured_value`] and the
/// `G1` count use `(n-k+2)`; both are kept so the gap can be reported.
pub fn large_n_formula_value(n: usize, k: usize) -> Result<i64> {
    if k < 2 || n < 15 * k + 27 {
        return Err(Error::InvalidParams(format!("requires k >= 2 and n >= 15k + 27, got n={n}, k={k}")));
    }
    let (n, k) = (n as i64, k as i64);
    Ok((n - k + 1).pow(2) / 4 + (k - 2) * (n - k + 2) + choose2(k - 2) + 1)
}

/// One row of the family comparison at fixed `(n, k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComparisonRow {
    pub n: usize,
    pub k: usize,
    /// `c(G1)..c(G4)`; `None` where the family is undefined.
    pub counts: [Option<i64>; 4],
    pub conjectured: i64,
    pub best_family: Family,
    pub best_value: i64,
    pub violated: bool,
}

fn counts_at(n: usize, k: usize) -> [Option<i64>; 4] {
    Family::ALL.map(|f| color_count_formula(f, n, k).ok())
}

/// Compares the best construction with the conjectured value for each `n` in `ns`.
pub fn counterexample_report(k: usize, ns: impl IntoIterator<Item = usize>) -> Result<Vec<ComparisonRow>> {
    ns.into_iter()
        .map(|n| {
            let conjectured = conjectured_value(n, k)?;
            let (best_family, best_value) = best_construction(n, k)?;
            Ok(ComparisonRow {
                n,
                k,
                counts: counts_at(n, k),
                conjectured,
                best_family,
                best_value,
                violated: best_value > conjectured,
            })
        })
        .collect()
}

pub type Rational = Ratio<i64>;

/// A row of the published transition table: `family` is claimed best for
/// `low <= n <= high` (`high = None` means unbounded).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionRow {
    pub family: Family,
    pub low: Rational,
    pub high: Option<Rational>,
}

impl TransitionRow {
    pub fn contains(&self, n: usize) -> bool {
        let n = Rational::from_integer(n as i64);
        self.low <= n && self.high.is_none_or(|h| n <= h)
    }
}

/// Lower edge of the `G3` range, `(13k²-25k+8)/(4k-8)`.
pub fn g4_g3_boundary(k: usize) -> Rational {
    let k = k as i64;
    Rational::new(13 * k * k - 25 * k + 8, 4 * k - 8)
}

/// Lower edge of the `G1` range as published, `(9k²-6k)/(2k-4)`.
pub fn g2_g1_boundary(k: usize) -> Rational {
    let k = k as i64;
    Rational::new(9 * k * k - 6 * k, 2 * k - 4)
}

/// The four published rows for `k >= 3`.
pub fn transition_table(k: usize) -> Result<Vec<TransitionRow>> {
    if k < 3 {
        return Err(Error::InvalidParams(format!("transition boundaries degenerate for k = {k} < 3")));
    }
    let ki = k as i64;
    let g4_hi = g4_g3_boundary(k);
    let g2_lo = Rational::from_integer(4 * ki - 6);
    let g1_lo = g2_g1_boundary(k);
    Ok(vec![
        TransitionRow { family: Family::G4, low: Rational::from_integer(3 * ki), high: Some(g4_hi) },
        TransitionRow { family: Family::G3, low: g4_hi, high: Some(g2_lo) },
        TransitionRow { family: Family::G2, low: g2_lo, high: Some(g1_lo) },
        TransitionRow { family: Family::G1, low: g1_lo, high: None },
    ])
}

/// Maximal runs `(family, first n, last n)` of the exact argmax over `ns`.
pub fn argmax_runs(k: usize, ns: Range<usize>) -> Result<Vec<(Family, usize, usize)>> {
    let mut runs: Vec<(Family, usize, usize)> = Vec::new();
    for n in ns {
        let (f, _) = best_construction(n, k)?;
        match runs.last_mut() {
            Some((g, _, end)) if *g == f && *end + 1 == n => *end = n,
            _ => runs.push((f, n, n)),
        }
    }
    Ok(runs)
}

/// One point of the color-count curves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveRow {
    pub n: usize,
    pub counts: [Option<i64>; 4],
}

pub fn family_curves(k: usize, n_max: usize) -> Result<Vec<CurveRow>> {
    if k < 3 || n_max < 3 * k {
        return Err(Error::InvalidParams(format!("requires k >= 3 and n_max >= 3k, got k={k}, n_max={n_max}")));
    }
    Ok((3 * k..=n_max).map(|n| CurveRow { n, counts: counts_at(n, k) }).collect())
}

fn cell(v: Option<i64>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

pub fn curves_csv(rows: &[CurveRow]) -> String {
    let mut out = String::from("n,c_G1,c_G2,c_G3,c_G4\n");
    for r in rows {
        let cells: Vec<String> = r.counts.iter().map(|&c| cell(c)).collect();
        out.push_str(&format!("{},{}\n", r.n, cells.join(",")));
    }
    out
}

pub fn comparison_csv(rows: &[ComparisonRow]) -> String {
    let mut out = String::from("n,k,c_G1,c_G2,c_G3,c_G4,conjectured,best_family,best_value,violated\n");
    for r in rows {
        let cells: Vec<String> = r.counts.iter().map(|&c| cell(c)).collect();
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            r.n,
            r.k,
            cells.join(","),
            r.conjectured,
            r.best_family,
            r.best_value,
            r.violated
        ));
    }
    out
}

/// Renders an exact rational as a terminating or truncated decimal
/// (`digits` places after the point).
pub fn rational_decimal(r: Rational, digits: usize) -> String {
    let (num, den) = (*r.numer(), *r.denom());
    let neg = num < 0;
    let num = num.unsigned_abs() as u128;
    let den = den as u128;
    let int = num / den;
    let mut rem = num % den;
    let mut frac = String::new();
    for _ in 0..digits {
        if rem == 0 {
            break;
        }
        rem *= 10;
        frac.push(char::from(b'0' + (rem / den) as u8));
        rem %= den;
    }
    let sign = if neg { "-" } else { "" };
    if frac.is_empty() {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}

pub fn transitions_csv(rows: &[TransitionRow]) -> String {
    let mut out = String::from("family,n_low,n_high\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{}\n",
            r.family,
            rational_decimal(r.low, 12),
            r.high.map(|h| rational_decimal(h, 12)).unwrap_or_else(|| "inf".into())
        ));
    }
    out
}
