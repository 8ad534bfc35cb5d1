//! Closed-form membership counting and density profiles for the interval
//! families underlying the block constructions.
//!
//! A family is a disjoint increasing union of integer intervals, optionally
//! mirrored into the negatives and optionally containing zero. Membership
//! counts come from clipping intervals, never from materializing the set,
//! so profiles over ranges like 2*10^9 cost O(blocks). The density ratio of
//! a symmetric family at n is count/(2n+1), counting over [-n, n]; for a
//! positive family it is count/n over [1, n].
//!
//! The density function rises inside a block and decays in the gap after
//! it, so its extremes sit at block ends (local maxima) and at the points
//! just before a block starts (local minima). Profiles evaluate exactly
//! those points. The running envelope fields carry the most recent local
//! minimum and maximum; those are the sequences that converge to the
//! family's lower and upper density.

use serde::Serialize;
use thiserror::Error;

use crate::rational::{Rational, RationalError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DensityError {
    #[error("exact arithmetic overflow while evaluating the family")]
    Overflow,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("precondition {name} not met: {detail}")]
    PreconditionNotMet { name: &'static str, detail: String },
}

impl From<RationalError> for DensityError {
    fn from(_: RationalError) -> Self {
        DensityError::Overflow
    }
}

/// Family identity for the closed-form density values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DensityKind {
    /// Positive intervals [ceil(a^n), floor(b a^n)] with a = 2b.
    Beta4 { b: Rational },
    /// Mirrored intervals [5^i, floor(5^(i+1)/3)].
    Z3Density,
    /// Positive intervals tuned for (r, s) 3-term avoidance, at the
    /// limiting parameters.
    RsPos { r: u32, s: u32 },
    /// Mirrored variant of the above.
    RsZ { r: u32, s: u32 },
}

/// Closed-form (lower density, upper density) of the family's ground set.
pub fn theoretical_densities(kind: &DensityKind) -> Result<(Rational, Rational), DensityError> {
    let one = Rational::from_int(1);
    match kind {
        DensityKind::Beta4 { b } => {
            if *b <= one {
                return Err(DensityError::InvalidParameter(format!(
                    "b must exceed 1, got {b}"
                )));
            }
            // lower (b-1)/(2b-1); upper (1 - 1/b)(1 + 1/(2b-1)).
            let two_b_minus_1 = b.checked_mul(Rational::from_int(2))?.checked_sub(one)?;
            let lower = b.checked_sub(one)?.checked_div(two_b_minus_1)?;
            let upper = one
                .checked_sub(one.checked_div(*b)?)?
                .checked_mul(one.checked_add(one.checked_div(two_b_minus_1)?)?)?;
            Ok((lower, upper))
        }
        DensityKind::Z3Density => Ok((Rational::new(1, 6).unwrap(), Rational::new(1, 2).unwrap())),
        DensityKind::RsPos { r, s } => {
            let (r, s) = check_rs(*r, *s)?;
            // lower rs/(r+s)^2; upper s/(r+s).
            let sum = r.checked_add(s)?;
            let lower = r.checked_mul(s)?.checked_div(sum.checked_mul(sum)?)?;
            let upper = s.checked_div(sum)?;
            Ok((lower, upper))
        }
        DensityKind::RsZ { r, s } => {
            let (r, s) = check_rs(*r, *s)?;
            // lower rs/((r+s)(r+2s)); upper s/(r+s).
            let sum = r.checked_add(s)?;
            let deep = r.checked_add(s.checked_mul(Rational::from_int(2))?)?;
            let lower = r.checked_mul(s)?.checked_div(sum.checked_mul(deep)?)?;
            let upper = s.checked_div(sum)?;
            Ok((lower, upper))
        }
    }
}

fn check_rs(r: u32, s: u32) -> Result<(Rational, Rational), DensityError> {
    if r == 0 || s == 0 {
        return Err(DensityError::InvalidParameter("need r, s >= 1".into()));
    }
    Ok((Rational::from_int(r as i64), Rational::from_int(s as i64)))
}

/// A concrete interval family with blocks materialized (as endpoints only)
/// far enough to answer queries up to `coverage`.
#[derive(Debug, Clone)]
pub struct IntervalFamily {
    kind: &'static str,
    intervals: Vec<(i64, i64)>,
    symmetric: bool,
    includes_zero: bool,
    coverage: i64,
}

impl IntervalFamily {
    /// Positive family [ceil(a^n), floor(b a^n)] with a = 2b.
    pub fn beta4(b: Rational, coverage: i64) -> Result<Self, DensityError> {
        if b <= Rational::from_int(1) {
            return Err(DensityError::InvalidParameter(format!(
                "b must exceed 1, got {b}"
            )));
        }
        let a = b.checked_mul(Rational::from_int(2))?;
        Ok(IntervalFamily {
            kind: "beta4",
            intervals: ratio_intervals(a, b, coverage)?,
            symmetric: false,
            includes_zero: false,
            coverage,
        })
    }

    /// Mirrored family [5^i, floor(5^(i+1)/3)].
    pub fn z3_density(coverage: i64) -> Result<Self, DensityError> {
        let a = Rational::from_int(5);
        let b = Rational::new(5, 3).unwrap();
        Ok(IntervalFamily {
            kind: "z3-density",
            intervals: ratio_intervals(a, b, coverage)?,
            symmetric: true,
            includes_zero: false,
            coverage,
        })
    }

    /// Positive family [ceil(a^n), floor(b a^n)].
    pub fn rs_pos(a: Rational, b: Rational, coverage: i64) -> Result<Self, DensityError> {
        check_ratio_params(a, b)?;
        Ok(IntervalFamily {
            kind: "rs-pos",
            intervals: ratio_intervals(a, b, coverage)?,
            symmetric: false,
            includes_zero: false,
            coverage,
        })
    }

    /// Mirrored family [ceil(a^n), floor(b a^n)].
    pub fn rs_z(a: Rational, b: Rational, coverage: i64) -> Result<Self, DensityError> {
        check_ratio_params(a, b)?;
        Ok(IntervalFamily {
            kind: "rs-z",
            intervals: ratio_intervals(a, b, coverage)?,
            symmetric: true,
            includes_zero: false,
            coverage,
        })
    }

    /// Arbitrary disjoint increasing intervals, for tests and ad-hoc sets.
    pub fn custom(
        intervals: Vec<(i64, i64)>,
        symmetric: bool,
        includes_zero: bool,
    ) -> Result<Self, DensityError> {
        let mut last_hi = 0i64;
        for &(lo, hi) in &intervals {
            if lo < 1 || hi < lo {
                return Err(DensityError::InvalidParameter(format!(
                    "interval [{lo}, {hi}] must satisfy 1 <= lo <= hi"
                )));
            }
            if lo <= last_hi {
                return Err(DensityError::InvalidParameter(
                    "intervals must be increasing and disjoint".into(),
                ));
            }
            last_hi = hi;
        }
        let coverage = i64::MAX;
        Ok(IntervalFamily {
            kind: "custom",
            intervals,
            symmetric,
            includes_zero,
            coverage,
        })
    }

    pub fn kind(&self) -> &'static str {
        self.kind
    }

    pub fn intervals(&self) -> &[(i64, i64)] {
        &self.intervals
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }
}

fn check_ratio_params(a: Rational, b: Rational) -> Result<(), DensityError> {
    if b <= Rational::from_int(1) || a <= b {
        return Err(DensityError::InvalidParameter(format!(
            "need 1 < b < a, got a = {a}, b = {b}"
        )));
    }
    Ok(())
}

/// Endpoint pairs [ceil(a^n), floor(b a^n)] for n = 1, 2, ... until the
/// interval starts past `limit`; empty intervals are dropped.
fn ratio_intervals(a: Rational, b: Rational, limit: i64) -> Result<Vec<(i64, i64)>, DensityError> {
    let mut intervals = Vec::new();
    let mut power = Rational::from_int(1);
    loop {
        power = power.checked_mul(a)?;
        let lo = power.ceil_i64()?;
        if lo > limit {
            return Ok(intervals);
        }
        let hi = b.checked_mul(power)?.floor_i64()?;
        if lo <= hi {
            intervals.push((lo, hi));
        }
    }
}

/// Exact |S intersect [1, n]| for positive families, |S intersect [-n, n]|
/// for symmetric ones, by interval clipping.
pub fn member_count(family: &IntervalFamily, n: i64) -> u64 {
    assert!(n >= 0, "member_count needs n >= 0");
    assert!(
        n <= family.coverage,
        "query at {n} beyond the family's materialized coverage {}",
        family.coverage
    );
    let mut count: u64 = 0;
    for &(lo, hi) in &family.intervals {
        if lo > n {
            break;
        }
        let clipped = hi.min(n) - lo + 1;
        count += clipped as u64;
    }
    if family.symmetric {
        count *= 2;
    }
    if family.includes_zero {
        count += 1;
    }
    count
}

/// Where an evaluation point sits on the density curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PointKind {
    /// Just before a block starts: a local minimum of the ratio.
    Dip,
    /// At a block end: a local maximum of the ratio.
    Peak,
    /// The requested endpoint n itself.
    End,
}

#[derive(Debug, Clone, Serialize)]
pub struct DensityRecord {
    pub n: i64,
    pub member_count: u64,
    pub ratio: Rational,
    /// Most recent local-minimum ratio: the running sample of the lower
    /// density envelope.
    pub running_inf: Rational,
    /// Most recent local-maximum ratio: the running sample of the upper
    /// density envelope.
    pub running_sup: Rational,
    pub point: PointKind,
}

/// Evaluates the density ratio at every extremal point up to `n_max`, plus
/// `n_max` itself, in increasing order of n.
pub fn density_profile(family: &IntervalFamily, n_max: i64) -> Vec<DensityRecord> {
    assert!(n_max >= 1, "profile needs n_max >= 1");
    let mut points: Vec<(i64, PointKind)> = Vec::new();
    for &(lo, hi) in &family.intervals {
        if lo > 1 && lo - 1 <= n_max {
            points.push((lo - 1, PointKind::Dip));
        }
        if hi <= n_max {
            points.push((hi, PointKind::Peak));
        }
        if lo > n_max {
            break;
        }
    }
    points.push((n_max, PointKind::End));
    points.sort_by_key(|&(n, kind)| (n, kind_rank(kind)));
    points.dedup_by_key(|&mut (n, _)| n);

    let mut running_inf: Option<Rational> = None;
    let mut running_sup: Option<Rational> = None;
    let mut records = Vec::with_capacity(points.len());
    for (n, point) in points {
        let count = member_count(family, n);
        let denominator = if family.symmetric { 2 * n + 1 } else { n };
        let ratio = Rational::new(count as i64, denominator).expect("n >= 1");
        match point {
            PointKind::Dip => running_inf = Some(ratio),
            PointKind::Peak => running_sup = Some(ratio),
            PointKind::End => {}
        }
        records.push(DensityRecord {
            n,
            member_count: count,
            ratio,
            running_inf: running_inf.unwrap_or(ratio),
            running_sup: running_sup.unwrap_or(ratio),
            point,
        });
    }
    records
}

/// Extremal tags win over the plain endpoint tag when n collides.
fn kind_rank(kind: PointKind) -> u8 {
    match kind {
        PointKind::Dip => 0,
        PointKind::Peak => 1,
        PointKind::End => 2,
    }
}

// ---------------------------------------------------------------------------
// Exact per-block audit of the construction inequalities.

/// Which construction's per-block growth conditions to evaluate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BlockConditionSpec {
    Z3Density,
    Beta4 {
        b: Rational,
    },
    RsPos {
        r: u32,
        s: u32,
        a: Rational,
        b: Rational,
    },
    RsZ {
        r: u32,
        s: u32,
        a: Rational,
        b: Rational,
    },
    Rs6 {
        r: u32,
        s: u32,
        a: i64,
    },
    Z6,
}

#[derive(Debug, Clone, Serialize)]
pub struct InequalityCheck {
    pub name: &'static str,
    pub lhs: Rational,
    pub rhs: Rational,
    /// Whether the inequality must hold strictly.
    pub strict: bool,
    pub holds: bool,
    pub is_equality: bool,
}

impl InequalityCheck {
    fn le(name: &'static str, lhs: Rational, rhs: Rational) -> Self {
        InequalityCheck {
            name,
            lhs,
            rhs,
            strict: false,
            holds: lhs <= rhs,
            is_equality: lhs == rhs,
        }
    }

    fn lt(name: &'static str, lhs: Rational, rhs: Rational) -> Self {
        InequalityCheck {
            name,
            lhs,
            rhs,
            strict: true,
            holds: lhs < rhs,
            is_equality: lhs == rhs,
        }
    }

    fn gt(name: &'static str, lhs: Rational, rhs: Rational) -> Self {
        InequalityCheck {
            name,
            lhs,
            rhs,
            strict: true,
            holds: lhs > rhs,
            is_equality: lhs == rhs,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BlockCheck {
    pub i: u32,
    pub inequalities: Vec<InequalityCheck>,
}

impl BlockCheck {
    pub fn holds(&self) -> bool {
        self.inequalities.iter().all(|c| c.holds)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BlockConditionReport {
    pub kind: &'static str,
    pub checks: Vec<BlockCheck>,
    pub all_hold: bool,
}

/// Evaluates the exact growth inequalities justifying each construction,
/// block by block for i <= i_max. Overflow of the exact arithmetic is a
/// refusal, and a base parameter at or below its strict bound is a
/// precondition failure, not a false verdict.
pub fn verify_block_conditions(
    spec: &BlockConditionSpec,
    i_max: u32,
) -> Result<BlockConditionReport, DensityError> {
    let (kind, checks) = match spec {
        BlockConditionSpec::Z3Density => ("z3-density", z3_checks(i_max)?),
        BlockConditionSpec::Beta4 { b } => ("beta4", beta4_checks(*b, i_max)?),
        BlockConditionSpec::RsPos { r, s, a, b } => {
            ("rs-pos", ratio_family_checks(*r, *s, *a, *b, i_max, false)?)
        }
        BlockConditionSpec::RsZ { r, s, a, b } => {
            ("rs-z", ratio_family_checks(*r, *s, *a, *b, i_max, true)?)
        }
        BlockConditionSpec::Rs6 { r, s, a } => ("rs6", rs6_checks(*r, *s, *a, i_max)?),
        BlockConditionSpec::Z6 => ("z6", rs6_checks(1, 1, 10, i_max)?),
    };
    let all_hold = checks.iter().all(BlockCheck::holds);
    Ok(BlockConditionReport {
        kind,
        checks,
        all_hold,
    })
}

fn z3_checks(i_max: u32) -> Result<Vec<BlockCheck>, DensityError> {
    let mut checks = Vec::new();
    let mut pow5: i128 = 5; // 5^i
    for i in 1..=i_max {
        let next = pow5.checked_mul(5).ok_or(DensityError::Overflow)?; // 5^(i+1)
        let e_i = next / 3; // floor((5/3) 5^i)
        let e_next = next.checked_mul(5).ok_or(DensityError::Overflow)? / 3;
        checks.push(BlockCheck {
            i,
            inequalities: vec![
                InequalityCheck::lt(
                    "block span < gap to next block",
                    Rational::from_i128(2 * e_i),
                    Rational::from_i128(next - e_i),
                ),
                InequalityCheck::gt(
                    "gap step + next start > next block end",
                    Rational::from_i128((next - e_i) + next),
                    Rational::from_i128(e_next),
                ),
            ],
        });
        pow5 = next;
    }
    Ok(checks)
}

fn beta4_checks(b: Rational, i_max: u32) -> Result<Vec<BlockCheck>, DensityError> {
    if b <= Rational::from_int(1) {
        return Err(DensityError::InvalidParameter(format!(
            "b must exceed 1, got {b}"
        )));
    }
    let a = b.checked_mul(Rational::from_int(2))?;
    let mut checks = Vec::new();
    let mut power = a; // a^i
    for i in 1..=i_max {
        let next = power.checked_mul(a)?;
        // Doubling the block end must not pass the next block start.
        let lhs = b.checked_mul(power)?.checked_mul(Rational::from_int(2))?;
        checks.push(BlockCheck {
            i,
            inequalities: vec![InequalityCheck::le("2 b a^i <= a^(i+1)", lhs, next)],
        });
        power = next;
    }
    Ok(checks)
}

fn ratio_family_checks(
    r: u32,
    s: u32,
    a: Rational,
    b: Rational,
    i_max: u32,
    mirrored: bool,
) -> Result<Vec<BlockCheck>, DensityError> {
    if r == 0 || s == 0 {
        return Err(DensityError::InvalidParameter("need r, s >= 1".into()));
    }
    check_ratio_params(a, b)?;
    let (r, s) = (Rational::from_int(r as i64), Rational::from_int(s as i64));
    let mut checks = Vec::new();
    let mut power = a;
    for i in 1..=i_max {
        let next = power.checked_mul(a)?;
        let block_end = b.checked_mul(power)?;
        let gap = next.checked_sub(block_end)?;
        // Span of reachable second terms, scaled by s, must stay inside the
        // gap scaled by r; strict for mirrored families whose span doubles.
        let span = if mirrored {
            block_end.checked_mul(Rational::from_int(2))?
        } else {
            block_end
        };
        let first = if mirrored {
            InequalityCheck::lt(
                "span * s < gap * r",
                span.checked_mul(s)?,
                gap.checked_mul(r)?,
            )
        } else {
            InequalityCheck::le(
                "span * s <= gap * r",
                span.checked_mul(s)?,
                gap.checked_mul(r)?,
            )
        };
        // Escaping the block must overshoot the next block's end.
        let lhs = gap.checked_mul(s)?.checked_add(next.checked_mul(r)?)?;
        let rhs = b.checked_mul(next)?.checked_mul(r)?;
        let second = InequalityCheck::gt("gap * s + a^(i+1) * r > b a^(i+1) * r", lhs, rhs);
        checks.push(BlockCheck {
            i,
            inequalities: vec![first, second],
        });
        power = next;
    }
    Ok(checks)
}

fn rs6_checks(r: u32, s: u32, a: i64, i_max: u32) -> Result<Vec<BlockCheck>, DensityError> {
    if r == 0 || s == 0 {
        return Err(DensityError::InvalidParameter("need r, s >= 1".into()));
    }
    let (r, s) = (r as i128, s as i128);
    let r3 = r * r * r;
    let reach = r3 + 2 * (s * r * r + s * s * r + s * s * s);
    if (a as i128) * r3 <= reach {
        return Err(DensityError::PreconditionNotMet {
            name: "a > 1 + 2(s/r + s^2/r^2 + s^3/r^3)",
            detail: format!("a = {a} does not strictly exceed {reach}/{r3}"),
        });
    }
    let mut checks = Vec::new();
    let mut power: i128 = a as i128; // a^(i+1) starting at i = 0
    for i in 0..=i_max {
        let next = power.checked_mul(a as i128).ok_or(DensityError::Overflow)?;
        let lhs = power.checked_mul(reach).ok_or(DensityError::Overflow)?;
        let rhs = next.checked_mul(r3).ok_or(DensityError::Overflow)?;
        checks.push(BlockCheck {
            i,
            inequalities: vec![InequalityCheck::lt(
                "reachable span stays below the block after next",
                Rational::from_i128(lhs),
                Rational::from_i128(rhs),
            )],
        });
        power = next;
    }
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rational(p: i64, q: i64) -> Rational {
        Rational::new(p, q).unwrap()
    }

    fn beta4_family(b: i64, coverage: i64) -> IntervalFamily {
        IntervalFamily::beta4(Rational::from_int(b), coverage).unwrap()
    }

    #[test]
    fn member_count_examples_for_b_two() {
        let fam = beta4_family(2, 1_000);
        assert_eq!(member_count(&fam, 8), 5);
        assert_eq!(member_count(&fam, 3), 0);
        assert_eq!(member_count(&fam, 20), 10);
    }

    #[test]
    fn member_count_matches_materialized_sets() {
        let fam = beta4_family(2, 3_000);
        let mut set = std::collections::BTreeSet::new();
        for &(lo, hi) in fam.intervals() {
            set.extend(lo..=hi);
        }
        for n in [0, 1, 4, 8, 15, 16, 33, 128, 129, 2048, 3000] {
            let expected = if n >= 1 {
                set.range(1..=n).count() as u64
            } else {
                0
            };
            assert_eq!(member_count(&fam, n), expected, "n = {n}");
        }

        let sym = IntervalFamily::z3_density(700).unwrap();
        let mut signed = std::collections::BTreeSet::new();
        for &(lo, hi) in sym.intervals() {
            signed.extend(lo..=hi);
            signed.extend(-hi..=-lo);
        }
        for n in [0, 4, 5, 8, 24, 25, 41, 125, 600] {
            let expected = signed.range(-n..=n).count() as u64;
            assert_eq!(member_count(&sym, n), expected, "n = {n}");
        }
    }

    #[test]
    fn single_interval_family_has_ratio_one() {
        let fam = IntervalFamily::custom(vec![(1, 500)], false, false).unwrap();
        for rec in density_profile(&fam, 500) {
            assert_eq!(rec.ratio, Rational::from_int(1));
        }
    }

    #[test]
    fn custom_validation() {
        assert!(IntervalFamily::custom(vec![(0, 5)], false, false).is_err());
        assert!(IntervalFamily::custom(vec![(1, 5), (5, 9)], false, false).is_err());
        assert!(IntervalFamily::custom(vec![(1, 5), (7, 9)], false, false).is_ok());
    }

    #[test]
    fn profile_points_are_extremal_and_ordered() {
        let fam = beta4_family(2, 10_000);
        let records = density_profile(&fam, 2_000);
        assert!(records.windows(2).all(|w| w[0].n < w[1].n));
        // Between adjacent evaluation points the ratio is monotone, so every
        // dense ratio must lie between the endpoint ratios.
        for pair in records.windows(2) {
            let (lo_r, hi_r) = if pair[0].ratio <= pair[1].ratio {
                (pair[0].ratio, pair[1].ratio)
            } else {
                (pair[1].ratio, pair[0].ratio)
            };
            if pair[1].n - pair[0].n > 512 {
                continue; // dense scan only on small gaps
            }
            for n in (pair[0].n + 1)..pair[1].n {
                let ratio = Rational::new(member_count(&fam, n) as i64, n).unwrap();
                assert!(ratio >= lo_r && ratio <= hi_r, "n = {n}");
            }
        }
    }

    #[test]
    fn theoretical_values_match_closed_forms() {
        let (lo, hi) = theoretical_densities(&DensityKind::RsPos { r: 1, s: 3 }).unwrap();
        assert_eq!((lo, hi), (rational(3, 16), rational(3, 4)));
        let (lo, hi) = theoretical_densities(&DensityKind::RsZ { r: 1, s: 1 }).unwrap();
        assert_eq!((lo, hi), (rational(1, 6), rational(1, 2)));
        let (lo, hi) = theoretical_densities(&DensityKind::RsPos { r: 1, s: 1 }).unwrap();
        assert_eq!((lo, hi), (rational(1, 4), rational(1, 2)));
        let (lo, hi) = theoretical_densities(&DensityKind::Z3Density).unwrap();
        assert_eq!((lo, hi), (rational(1, 6), rational(1, 2)));
        let (lo, hi) = theoretical_densities(&DensityKind::Beta4 {
            b: Rational::from_int(10),
        })
        .unwrap();
        assert_eq!((lo, hi), (rational(9, 19), rational(18, 19)));
    }

    #[test]
    fn envelope_samples_converge_for_z3() {
        let fam = IntervalFamily::z3_density(2_000_000).unwrap();
        let records = density_profile(&fam, 1_953_125); // 5^9
        let last = records.last().unwrap();
        let tol = rational(1, 100);
        let inf_gap = last.running_inf.checked_sub(rational(1, 6)).unwrap().abs();
        let sup_gap = last.running_sup.checked_sub(rational(1, 2)).unwrap().abs();
        assert!(inf_gap < tol, "inf gap {inf_gap:?}");
        assert!(sup_gap < tol, "sup gap {sup_gap:?}");
    }

    #[test]
    fn block_conditions_z3() {
        let report = verify_block_conditions(&BlockConditionSpec::Z3Density, 10).unwrap();
        assert!(report.all_hold);
        assert_eq!(report.checks.len(), 10);
    }

    #[test]
    fn block_conditions_beta4_equality_accepted() {
        let spec = BlockConditionSpec::Beta4 {
            b: Rational::from_int(2),
        };
        let report = verify_block_conditions(&spec, 8).unwrap();
        assert!(report.all_hold);
        assert!(
            report
                .checks
                .iter()
                .all(|c| c.inequalities.iter().all(|q| q.is_equality))
        );
    }

    #[test]
    fn block_conditions_rs_families() {
        let spec = BlockConditionSpec::RsPos {
            r: 1,
            s: 3,
            a: Rational::from_int(14),
            b: rational(13, 4),
        };
        assert!(verify_block_conditions(&spec, 8).unwrap().all_hold);
        let spec = BlockConditionSpec::RsZ {
            r: 1,
            s: 1,
            a: Rational::from_int(6),
            b: rational(5, 3),
        };
        assert!(verify_block_conditions(&spec, 8).unwrap().all_hold);
    }

    #[test]
    fn block_conditions_rs6_bound_is_a_precondition() {
        let at_bound = BlockConditionSpec::Rs6 { r: 1, s: 1, a: 7 };
        assert!(matches!(
            verify_block_conditions(&at_bound, 3),
            Err(DensityError::PreconditionNotMet { .. })
        ));
        let above = BlockConditionSpec::Rs6 { r: 1, s: 1, a: 8 };
        assert!(verify_block_conditions(&above, 3).unwrap().all_hold);
        assert!(
            verify_block_conditions(&BlockConditionSpec::Z6, 5)
                .unwrap()
                .all_hold
        );
    }

    #[test]
    fn overflow_is_a_refusal() {
        assert!(matches!(
            verify_block_conditions(&BlockConditionSpec::Z3Density, 60),
            Err(DensityError::Overflow)
        ));
    }
}
