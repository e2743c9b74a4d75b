//! Closed-form colouring bounds for maps and empire maps, the table of known
//! chromatic empire numbers, and the slack calculus for uniform complete
//! empire graphs.
//!
//! The formulas are floors of `(a + √D) / 2`. For integer `a` and `D >= 0`,
//! `⌊(a + √D)/2⌋ = ⌊(a + ⌊√D⌋)/2⌋`, so everything is done with an exact
//! integer square root and never touches floating point. The arithmetic is
//! generic over [`ExactInt`] so the same code runs on `i64`, `i128` and
//! `BigInt`.

use std::fmt::{self, Write as _};

use num_integer::{Integer, Roots};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Signed exact integers with a floor square root.
pub trait ExactInt: Integer + Roots + Clone + From<i64> + fmt::Debug + fmt::Display {}

impl<T> ExactInt for T where T: Integer + Roots + Clone + From<i64> + fmt::Debug + fmt::Display {}

fn int<T: ExactInt>(x: i64) -> T {
    T::from(x)
}

/// `⌊(a + √d) / 2⌋` for `d >= 0`.
fn half_floor_root<T: ExactInt>(a: T, d: T) -> T {
    debug_assert!(d >= T::zero());
    (a + d.sqrt()).div_floor(&int(2))
}

/// Largest number of colours any map on a surface of Euler characteristic
/// `chi <= 0` can need: `⌊(7 + √(49 − 24χ)) / 2⌋`.
pub fn heawood_upper<T: ExactInt>(chi: T) -> Result<T> {
    if chi > T::zero() {
        return Err(Error::PositiveEulerCharacteristic(
            chi.to_string().parse().unwrap_or(i64::MAX),
        ));
    }
    Ok(half_floor_root(int(7), int::<T>(49) - int::<T>(24) * chi))
}

/// Upper bound on the chromatic empire number of m-pire maps on the genus-g
/// surface: `⌊(6m + 1 + √((6m + 1)² + 24(2g − 2))) / 2⌋`.
pub fn empire_upper<T: ExactInt>(g: T, m: T) -> Result<T> {
    if g < T::zero() {
        return Err(Error::InvalidArgument(format!("negative genus {g}")));
    }
    if m < T::one() {
        return Err(Error::InvalidArgument(format!("empire size {m} must be at least 1")));
    }
    let a = int::<T>(6) * m + T::one();
    let d = a.clone() * a.clone() + int::<T>(24) * (int::<T>(2) * g - int(2));
    Ok(half_floor_root(a, d))
}

/// The easy special forms of [`empire_upper`]: `6m` on the sphere and `6m + 1`
/// for `1 <= g <= (m + 2)/2`.
pub fn simplified_upper(g: u64, m: u64) -> Option<u64> {
    if m == 0 {
        return None;
    }
    if g == 0 {
        Some(6 * m)
    } else if 2 * g <= m + 2 {
        Some(6 * m + 1)
    } else {
        None
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundStatus {
    Exact,
    OpenInterval,
}

/// What is known about `h_{g,m}`.
///
/// `conjectured_exact` is set when the value is open and the upper bound is
/// only conjectured to be attained; proven values leave it unset.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundResult {
    pub lower: Option<u64>,
    pub upper: u64,
    pub status: BoundStatus,
    pub provenance: Vec<String>,
    pub conjectured_exact: bool,
}

impl BoundResult {
    pub fn is_exact(&self) -> bool {
        self.status == BoundStatus::Exact
    }
}

fn upper_u64(g: u64, m: u64) -> Result<u64> {
    let h = empire_upper(i128::from(g), i128::from(m))?;
    u64::try_from(h).map_err(|_| Error::InvalidArgument(format!("bound for g={g}, m={m} overflows")))
}

/// The proven value of `h_{g,m}` and the rule that settles it, if any.
fn exact_value(g: u64, m: u64) -> Result<Option<(u64, &'static str)>> {
    let upper = upper_u64(g, m)?;
    let rule = match (g, m) {
        (0, 1) => Some("four-colour"),
        (_, 1) => Some("map-colour-theorem"),
        (0, _) => Some("wessel-plane"),
        (1, _) => Some("wessel-torus"),
        (3, 2) => Some("triple-torus-2pire"),
        _ if m + 2 >= 2 * g => Some("monotone-lift"),
        _ => None,
    };
    Ok(rule.map(|r| match r {
        "triple-torus-2pire" => (14, r),
        _ => (upper, r),
    }))
}

/// Known value or bracketing interval for `h_{g,m}`.
///
/// Exact cases: the sphere, torus and double torus for every `m`; `m = 1` on
/// every surface; `m >= 2g − 2` for `g >= 1`; and `h_{3,2} = 14`. Otherwise
/// the lower end is the best exact value on a lower genus with the same `m`
/// and the upper end is [`empire_upper`].
pub fn known_value(g: u64, m: u64) -> Result<BoundResult> {
    if m == 0 {
        return Err(Error::InvalidArgument("empire size must be at least 1".into()));
    }
    let upper = upper_u64(g, m)?;
    if let Some((value, rule)) = exact_value(g, m)? {
        let mut provenance = Vec::new();
        if rule == "monotone-lift" {
            // lower end lifted from the torus, upper end from the simplified bound
            provenance.push("wessel-torus".to_string());
        }
        provenance.push(rule.to_string());
        return Ok(BoundResult {
            lower: Some(value),
            upper: value,
            status: BoundStatus::Exact,
            provenance,
            conjectured_exact: false,
        });
    }
    // exact values below g can only sit at these genera
    let mut best: Option<(u64, &'static str)> = None;
    for g2 in [0, 1, 2, 3, m / 2 + 1] {
        if g2 >= g {
            continue;
        }
        if let Some((v, rule)) = exact_value(g2, m)? {
            if best.is_none_or(|(b, _)| v > b) {
                best = Some((v, rule));
            }
        }
    }
    let mut provenance = Vec::new();
    if let Some((_, rule)) = best {
        if rule != "monotone-lift" {
            provenance.push(rule.to_string());
        }
        provenance.push("monotone-lift".to_string());
    }
    provenance.push("empire-upper-bound".to_string());
    Ok(BoundResult {
        lower: best.map(|(v, _)| v),
        upper,
        status: BoundStatus::OpenInterval,
        provenance,
        conjectured_exact: true,
    })
}

/// `2E − 3C`: zero exactly for triangulations of a simple graph.
pub fn slack<T: ExactInt>(edges: T, countries: T) -> T {
    int::<T>(2) * edges - int::<T>(3) * countries
}

/// Slack of a hypothetical uniform complete empire graph with `h` empires of
/// `m` vertices on the genus-g surface, `h` the empire upper bound.
pub fn uniform_slack<T: ExactInt>(g: T, m: T) -> Result<T> {
    if g < T::one() {
        return Err(Error::InvalidArgument(format!("genus {g} must be at least 1")));
    }
    let h = empire_upper(g.clone(), m.clone())?;
    let v = h.clone() * m;
    let e = h.clone() * (h - T::one()) / int(2);
    let c = e.clone() - v + int(2) - int::<T>(2) * g;
    Ok(slack(e, c))
}

/// How many vertices can go from the uniform graph before the slack turns
/// negative; each removal costs 3.
pub fn vertex_removal_budget<T: ExactInt>(g: T, m: T) -> Result<T> {
    Ok(uniform_slack(g, m)?.div_floor(&int(3)))
}

/// Markdown table of [`known_value`] for `g = 0..=gmax` and `m = 1..=mmax`.
/// Open cells read `lo..hi`.
pub fn markdown_table(gmax: u64, mmax: u64) -> Result<String> {
    if mmax == 0 {
        return Err(Error::InvalidArgument("table needs at least one empire size".into()));
    }
    let mut out = String::from("| g \\ m |");
    for m in 1..=mmax {
        write!(out, " {m} |").unwrap();
    }
    out.push_str("\n|---|");
    for _ in 1..=mmax {
        out.push_str("---|");
    }
    out.push('\n');
    for g in 0..=gmax {
        write!(out, "| {g} |").unwrap();
        for m in 1..=mmax {
            let r = known_value(g, m)?;
            match (r.status, r.lower) {
                (BoundStatus::Exact, _) => write!(out, " {} |", r.upper),
                (_, Some(lo)) => write!(out, " {lo}..{} |", r.upper),
                (_, None) => write!(out, " ..{} |", r.upper),
            }
            .unwrap();
        }
        out.push('\n');
    }
    Ok(out)
}
