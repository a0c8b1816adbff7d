//! Numeric verification of the identities tying counts to closed forms:
//! shuffling of dent orientations (plain and centrally symmetric),
//! condensation on vertex-deleted regions, the small-parameter bijections
//! to dented semihexagons, and the three-term recurrences behind them.
//!
//! Every check compares exact integers, cross-multiplied where the identity
//! is a ratio; a check whose both sides count zero tilings reports
//! `vacuous` instead of silently passing.

mod kuo;
mod sweep;

pub use kuo::{check_kuo, choose_kuo_vertices, KuoCase, KuoVertices};
pub use sweep::{
    sweep_base_cases, sweep_fern_closed, sweep_fern_shuffle, sweep_kuo, sweep_recurrences,
    sweep_shuffle_cs, sweep_shuffle_h, FernGrid, GridCs, GridH, GridSmall, SweepGrid,
};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::enumerate::{count_cs_tilings, count_tilings, CountError};
use crate::formulas::{
    cs_shuffle_ratio, pp, s_fn, shuffle_ratio, thm24_rhs, thm25_rhs, FormulaError,
};
use crate::region::{
    build_cs, build_e, build_e_prime, build_h, build_r, build_t, BuildError, Region,
};
use crate::spec::{Fern, IndexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Vacuous,
}

/// Outcome of one identity check, with both sides as exact decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    #[serde(rename = "case")]
    pub case_id: String,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub witness: Vec<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    fn equality(case_id: String, lhs: &BigUint, rhs: &BigUint, witness: Vec<String>) -> Self {
        CheckReport {
            case_id,
            status: if lhs == rhs { Status::Pass } else { Status::Fail },
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            witness,
        }
    }

    /// Cross-multiplied ratio identity `m1 / m2 == ratio`, vacuous when both
    /// counts are zero.
    fn ratio(
        case_id: String,
        m1: &BigUint,
        m2: &BigUint,
        ratio: &BigRational,
        mut witness: Vec<String>,
    ) -> Self {
        witness.push(format!("predicted ratio {ratio}"));
        if m1.is_zero() && m2.is_zero() {
            return CheckReport {
                case_id,
                status: Status::Vacuous,
                lhs: "0".into(),
                rhs: "0".into(),
                witness,
            };
        }
        let lhs = BigInt::from(m1.clone()) * ratio.denom();
        let rhs = BigInt::from(m2.clone()) * ratio.numer();
        CheckReport {
            case_id,
            status: if lhs == rhs { Status::Pass } else { Status::Fail },
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            witness,
        }
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum CheckError {
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error(transparent)]
    Build(#[from] BuildError),
    #[error(transparent)]
    Count(#[from] CountError),
    #[error(transparent)]
    Formula(#[from] FormulaError),
}

/// Deliberate corruption of one factor in a predicted ratio; the negative
/// control proving the sweeps can fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mutation {
    /// Replace the PP(u, d, y) factor by PP(u, d, y+1).
    PpYShift,
    /// Add one to the numerator of the pairwise-difference ratio.
    DeltaOffByOne,
}

fn fmt_sets(u: &IndexSet, d: &IndexSet, b: &IndexSet) -> String {
    format!("U={u} D={d} B={b}")
}

/// Shuffling identity for plain tilings of doubly-dented hexagons: the count
/// ratio between two orientation shuffles of the same dent positions equals
/// the predicted product.
#[allow(clippy::too_many_arguments)]
pub fn check_shuffle_h(
    x: u32,
    y: u32,
    u: &IndexSet,
    d: &IndexSet,
    b: &IndexSet,
    u2: &IndexSet,
    d2: &IndexSet,
    mutation: Option<Mutation>,
) -> Result<CheckReport, CheckError> {
    let mut ratio = shuffle_ratio(u, d, u2, d2, y)?;
    if mutation == Some(Mutation::PpYShift) {
        let honest = BigInt::from(pp(u.len() as u32, d.len() as u32, y));
        let warped = BigInt::from(pp(u.len() as u32, d.len() as u32, y + 1));
        ratio *= BigRational::new(warped, honest);
    }
    let r1 = build_h(x, y, u, d, b)?;
    let r2 = build_h(x, y, u2, d2, b)?;
    let m1 = count_tilings(&r1);
    let m2 = count_tilings(&r2);
    Ok(CheckReport::ratio(
        format!(
            "shuffle-h x={x} y={y} {} | U'={u2} D'={d2}",
            fmt_sets(u, d, b)
        ),
        &m1,
        &m2,
        &ratio,
        vec![format!("M={m1}"), format!("M'={m2}")],
    ))
}

/// Shuffling identity for centrally symmetric tilings: checks both the
/// pairwise-difference ratio and the squared square-root relation
/// Mc(R)^2 M(R') == Mc(R')^2 M(R).
#[allow(clippy::too_many_arguments)]
pub fn check_shuffle_cs(
    x: u32,
    y: u32,
    u: &IndexSet,
    d: &IndexSet,
    b: &IndexSet,
    u2: &IndexSet,
    d2: &IndexSet,
    mutation: Option<Mutation>,
) -> Result<CheckReport, CheckError> {
    let mut ratio = cs_shuffle_ratio(x, y, u, d, u2, d2)?;
    if mutation == Some(Mutation::DeltaOffByOne) {
        ratio = BigRational::new(ratio.numer() + BigInt::one(), ratio.denom().clone());
    }
    let r1 = build_cs(x, y, u, d, b)?;
    let r2 = build_cs(x, y, u2, d2, b)?;
    let mc1 = count_cs_tilings(&r1)?;
    let mc2 = count_cs_tilings(&r2)?;
    let m1 = count_tilings(&r1);
    let m2 = count_tilings(&r2);
    let case_id = format!(
        "shuffle-cs x={x} y={y} {} | U'={u2} D'={d2}",
        fmt_sets(u, d, b)
    );
    let witness = vec![
        format!("Mc={mc1}"),
        format!("Mc'={mc2}"),
        format!("M={m1}"),
        format!("M'={m2}"),
    ];
    // squared square-root relation, exact on both sides
    let sq_lhs = &mc1 * &mc1 * &m2;
    let sq_rhs = &mc2 * &mc2 * &m1;
    if sq_lhs != sq_rhs {
        return Ok(CheckReport {
            case_id,
            status: Status::Fail,
            lhs: sq_lhs.to_string(),
            rhs: sq_rhs.to_string(),
            witness,
        });
    }
    Ok(CheckReport::ratio(case_id, &mc1, &mc2, &ratio, witness))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BaseCaseKind {
    /// y = 0: fold along the axis.
    Y0,
    /// x = 2|B|: every free position carries a vertical tile.
    X2b,
    /// y = 1: the central vertical tile is forced.
    Y1,
    /// x = 2|B|+1: vertical tiles everywhere free except the center.
    X2b1,
}

/// One small-parameter bijection: the symmetric count of the region equals
/// the plain count of a dented semihexagon with the dent set the bijection
/// prescribes.
pub fn check_base_case(
    kind: BaseCaseKind,
    x: u32,
    y: u32,
    u: &IndexSet,
    d: &IndexSet,
    b: &IndexSet,
) -> Result<CheckReport, CheckError> {
    let bb = b.len() as u32;
    match kind {
        BaseCaseKind::Y0 if y != 0 => {
            return Err(CheckError::Hypothesis(format!("y = {y}, expected 0")));
        }
        BaseCaseKind::X2b if x != 2 * bb => {
            return Err(CheckError::Hypothesis(format!(
                "x = {x}, expected 2|B| = {}",
                2 * bb
            )));
        }
        BaseCaseKind::Y1 if y != 1 || x % 2 != 0 => {
            return Err(CheckError::Hypothesis(format!(
                "need y = 1 and even x, got x = {x}, y = {y}"
            )));
        }
        BaseCaseKind::X2b1 if x != 2 * bb + 1 || y % 2 != 0 => {
            return Err(CheckError::Hypothesis(format!(
                "need x = 2|B|+1 and even y, got x = {x}, y = {y}"
            )));
        }
        _ => {}
    }
    let region = build_cs(x, y, u, d, b)?;
    let mc = count_cs_tilings(&region)?;
    let n = u.union(d).len() as u32;
    let axis = x + y + 2 * n;
    let m_param = 2 * n - u.len() as u32 - d.len() as u32;
    let folded = u.union(&d.mirrored(axis + 1));
    let dents = match kind {
        BaseCaseKind::Y0 => folded,
        BaseCaseKind::X2b => folded.union(&region.axis_free()),
        BaseCaseKind::Y1 => folded.with((axis + 1) / 2),
        BaseCaseKind::X2b1 => folded.union(&region.axis_free().without((axis + 1) / 2)),
    };
    let half = build_t(dents.len() as u32, x + m_param, &dents)?;
    let m_half = count_tilings(&half);
    Ok(CheckReport::equality(
        format!("base-{kind:?} x={x} y={y} {}", fmt_sets(u, d, b)).to_lowercase(),
        &mc,
        &m_half,
        vec![format!("Mc={mc}"), format!("dents={dents}")],
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RecurrenceCase {
    /// Position 1 carries an up-dent only.
    One,
    /// Position 1 is free of dents and barriers.
    Two,
    /// Position 1 carries both dents.
    Three,
}

/// The three-term condensation recurrence on the labelled family of derived
/// regions for the given induction case. Restricted to even x + y, the
/// parity for which the labelled reductions are stated.
pub fn check_recurrence(
    case: RecurrenceCase,
    x: u32,
    y: u32,
    u: &IndexSet,
    d: &IndexSet,
    b: &IndexSet,
) -> Result<CheckReport, CheckError> {
    let bb = b.len() as u32;
    if (x + y) % 2 != 0 {
        return Err(CheckError::Hypothesis(format!(
            "x + y = {} must be even for the labelled recurrences",
            x + y
        )));
    }
    if x < 2 * bb + 2 || y < 2 || u.len() + d.len() == 0 {
        return Err(CheckError::Hypothesis(format!(
            "induction step needs x >= 2|B|+2, y >= 2, dents present; got x={x} y={y}"
        )));
    }
    match case {
        RecurrenceCase::One if !(u.contains(1) && !d.contains(1)) => {
            return Err(CheckError::Hypothesis("need 1 in U only".into()));
        }
        RecurrenceCase::Two if u.contains(1) || d.contains(1) || b.contains(1) => {
            return Err(CheckError::Hypothesis("need position 1 free".into()));
        }
        RecurrenceCase::Three if !(u.contains(1) && d.contains(1)) => {
            return Err(CheckError::Hypothesis("need 1 in both U and D".into()));
        }
        _ => {}
    }
    let region = build_cs(x, y, u, d, b)?;
    let free = region.axis_free();
    let axis = region.axis_len();
    let alpha = free
        .iter()
        .next()
        .ok_or_else(|| CheckError::Hypothesis("no free position".into()))?;
    let beta = free
        .iter()
        .filter(|&p| p <= axis / 2)
        .last()
        .ok_or_else(|| CheckError::Hypothesis("no free position left of center".into()))?;
    let shift = |s: &IndexSet| s.shifted_left().map_err(CheckError::Build);
    let bl = shift(b)?;
    // the eight regions of the identity, per case
    let (abcd, ab, cd, ac, bd, ad, bc) = match case {
        RecurrenceCase::One => (
            build_cs(
                x - 2,
                y - 2,
                &shift(&u.with(alpha).without(1))?,
                &shift(&d.with(beta))?,
                &bl,
            )?,
            build_cs(x, y, &shift(&u.without(1))?, &shift(d)?, &bl)?,
            build_cs(x - 2, y - 2, &u.with(alpha), &d.with(beta), b)?,
            build_cs(x, y - 2, &u.with(alpha), d, b)?,
            build_cs(x - 2, y, &shift(&u.without(1))?, &shift(&d.with(beta))?, &bl)?,
            build_cs(x, y - 2, u, &d.with(beta), b)?,
            build_cs(x - 2, y, &shift(&u.with(alpha).without(1))?, &shift(d)?, &bl)?,
        ),
        RecurrenceCase::Two => (
            build_cs(x - 2, y - 2, &shift(u)?, &shift(&d.with(beta))?, &bl)?,
            build_cs(x, y - 2, u, &d.with(1), b)?,
            build_cs(x - 2, y - 2, &u.with(1), &d.with(beta), b)?,
            build_cs(x, y - 2, &u.with(1), d, b)?,
            build_cs(x - 2, y - 2, u, &d.with(1).with(beta), b)?,
            build_cs(x, y - 2, u, &d.with(beta), b)?,
            build_cs(x - 2, y, &shift(u)?, &shift(d)?, &bl)?,
        ),
        RecurrenceCase::Three => (
            build_cs(x - 2, y - 2, &u.with(alpha).without(1), &d.with(beta), b)?,
            build_cs(x, y, &u.without(1), d, b)?,
            build_cs(x - 2, y - 2, &u.with(alpha), &d.with(beta), b)?,
            build_cs(x, y - 2, &u.with(alpha), d, b)?,
            build_cs(x - 2, y, &u.without(1), &d.with(beta), b)?,
            build_cs(x, y - 2, u, &d.with(beta), b)?,
            build_cs(x - 2, y, &u.with(alpha).without(1), d, b)?,
        ),
    };
    let mc = |r: &Region| count_cs_tilings(r).map_err(CheckError::Count);
    let m0 = mc(&region)?;
    let (v_abcd, v_ab, v_cd) = (mc(&abcd)?, mc(&ab)?, mc(&cd)?);
    let (v_ac, v_bd, v_ad, v_bc) = (mc(&ac)?, mc(&bd)?, mc(&ad)?, mc(&bc)?);
    let lhs = &m0 * &v_abcd;
    let rhs = &v_ab * &v_cd + &v_ac * &v_bd + &v_ad * &v_bc;
    Ok(CheckReport::equality(
        format!(
            "recurrence-{case:?} x={x} y={y} {} alpha={alpha} beta={beta}",
            fmt_sets(u, d, b)
        )
        .to_lowercase(),
        &lhs,
        &rhs,
        vec![
            format!("Mc={m0}"),
            format!("Mc(abcd)={v_abcd}"),
            format!(
                "Mc(ab)={v_ab} Mc(cd)={v_cd} Mc(ac)={v_ac} Mc(bd)={v_bd} Mc(ad)={v_ad} Mc(bc)={v_bc}"
            ),
        ],
    ))
}

/// Parameters for the fern-level theorems.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FernCheck {
    /// Shuffling of plain counts between two fern lists with equal totals.
    Shuffle21 {
        x: u32,
        y: u32,
        ferns: Vec<Fern>,
        ferns2: Vec<Fern>,
        gaps: Vec<u32>,
    },
    /// Symmetric-count shuffling over a lattice-point center.
    Shuffle22 {
        x: u32,
        y: u32,
        ferns: Vec<Fern>,
        ferns2: Vec<Fern>,
        gaps: Vec<u32>,
    },
    /// Symmetric-count shuffling over a mid-edge center.
    Shuffle23 {
        x: u32,
        y: u32,
        ferns: Vec<Fern>,
        ferns2: Vec<Fern>,
        gaps: Vec<u32>,
    },
    /// Closed form for the two-fern lattice-point-centered count.
    Closed24 { x: u32, y: u32, f1: Fern, f2: Fern },
    /// Closed form for the two-fern mid-edge-centered count.
    Closed25 { x: u32, y: u32, f1: Fern, f2: Fern },
}

fn check_equal_totals(ferns: &[Fern], ferns2: &[Fern]) -> Result<(), CheckError> {
    if ferns.len() != ferns2.len()
        || ferns
            .iter()
            .zip(ferns2)
            .any(|(f, g)| f.total() != g.total())
    {
        return Err(CheckError::Hypothesis(
            "fern lists must match in length and per-fern totals".into(),
        ));
    }
    Ok(())
}

fn fmt_ferns(ferns: &[Fern]) -> String {
    let parts: Vec<String> = ferns
        .iter()
        .map(|f| {
            let lens: Vec<String> = f.lengths.iter().map(|l| l.to_string()).collect();
            format!("{:?}[{}]", f.first, lens.join(","))
        })
        .collect();
    parts.join(";")
}

/// Verify one fern-level theorem instance.
pub fn check_fern_theorem(check: &FernCheck) -> Result<CheckReport, CheckError> {
    match check {
        FernCheck::Shuffle21 {
            x,
            y,
            ferns,
            ferns2,
            gaps,
        } => {
            check_equal_totals(ferns, ferns2)?;
            let r1 = build_r(*x, *y, ferns, gaps)?;
            let r2 = build_r(*x, *y, ferns2, gaps)?;
            let m1 = count_tilings(&r1);
            let m2 = count_tilings(&r2);
            let s_up1 = s_fn(&r1.upper_dent_seq())?;
            let s_dn1 = s_fn(&r1.lower_dent_seq())?;
            let s_up2 = s_fn(&r2.upper_dent_seq())?;
            let s_dn2 = s_fn(&r2.lower_dent_seq())?;
            let pp1 = pp(r1.up_dents().len() as u32, r1.down_dents().len() as u32, *y);
            let pp2 = pp(r2.up_dents().len() as u32, r2.down_dents().len() as u32, *y);
            let ratio = BigRational::new(
                BigInt::from(&s_up1 * &s_dn1 * &pp1),
                BigInt::from(&s_up2 * &s_dn2 * &pp2),
            );
            Ok(CheckReport::ratio(
                format!(
                    "fern-2.1 x={x} y={y} F={} F'={}",
                    fmt_ferns(ferns),
                    fmt_ferns(ferns2)
                ),
                &m1,
                &m2,
                &ratio,
                vec![format!("M={m1}"), format!("M'={m2}")],
            ))
        }
        FernCheck::Shuffle22 {
            x,
            y,
            ferns,
            ferns2,
            gaps,
        }
        | FernCheck::Shuffle23 {
            x,
            y,
            ferns,
            ferns2,
            gaps,
        } => {
            check_equal_totals(ferns, ferns2)?;
            let mid_edge = matches!(check, FernCheck::Shuffle23 { .. });
            let (r1, r2) = if mid_edge {
                (
                    build_e_prime(*x, *y, ferns, gaps)?,
                    build_e_prime(*x, *y, ferns2, gaps)?,
                )
            } else {
                (build_e(*x, *y, ferns, gaps)?, build_e(*x, *y, ferns2, gaps)?)
            };
            let mc1 = count_cs_tilings(&r1)?;
            let mc2 = count_cs_tilings(&r2)?;
            let m1 = count_tilings(&r1);
            let m2 = count_tilings(&r2);
            let s1 = s_fn(&r1.upper_dent_seq())?;
            let s2 = s_fn(&r2.upper_dent_seq())?;
            let which = if mid_edge { "2.3" } else { "2.2" };
            let case_id = format!(
                "fern-{which} x={x} y={y} F={} F'={}",
                fmt_ferns(ferns),
                fmt_ferns(ferns2)
            );
            let witness = vec![
                format!("Mc={mc1}"),
                format!("Mc'={mc2}"),
                format!("M={m1}"),
                format!("M'={m2}"),
            ];
            let sq_lhs = &mc1 * &mc1 * &m2;
            let sq_rhs = &mc2 * &mc2 * &m1;
            if sq_lhs != sq_rhs {
                return Ok(CheckReport {
                    case_id,
                    status: Status::Fail,
                    lhs: sq_lhs.to_string(),
                    rhs: sq_rhs.to_string(),
                    witness,
                });
            }
            let ratio = BigRational::new(BigInt::from(s1), BigInt::from(s2));
            Ok(CheckReport::ratio(case_id, &mc1, &mc2, &ratio, witness))
        }
        FernCheck::Closed24 { x, y, f1, f2 } => {
            let region = build_e(*x, *y, &[f1.clone(), f2.clone()], &[(x + y) / 2])?;
            let mc = count_cs_tilings(&region)?;
            let rhs = thm24_rhs(*x, *y, f1, f2)?;
            Ok(CheckReport::equality(
                format!(
                    "fern-2.4 x={x} y={y} F={}",
                    fmt_ferns(&[f1.clone(), f2.clone()])
                ),
                &mc,
                &rhs,
                vec![format!("Mc={mc}")],
            ))
        }
        FernCheck::Closed25 { x, y, f1, f2 } => {
            let region = build_e_prime(*x, *y, &[f1.clone(), f2.clone()], &[(x + y - 1) / 2])?;
            let mc = count_cs_tilings(&region)?;
            let rhs = thm25_rhs(*x, *y, f1, f2)?;
            Ok(CheckReport::equality(
                format!(
                    "fern-2.5 x={x} y={y} F={}",
                    fmt_ferns(&[f1.clone(), f2.clone()])
                ),
                &mc,
                &rhs,
                vec![format!("Mc={mc}")],
            ))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spec::Orientation;

    fn idx(v: &[u32]) -> IndexSet {
        IndexSet::new(v.to_vec()).unwrap()
    }

    #[test]
    fn shuffle_h_examples() {
        // identical configurations: ratio one
        let r = check_shuffle_h(
            2,
            1,
            &idx(&[1, 3]),
            &idx(&[2]),
            &IndexSet::empty(),
            &idx(&[1, 3]),
            &idx(&[2]),
            None,
        )
        .unwrap();
        assert_eq!(r.status, Status::Pass);
        // flipping a dent: predicted ratio 2
        let r = check_shuffle_h(
            1,
            1,
            &idx(&[1, 3]),
            &idx(&[2]),
            &IndexSet::empty(),
            &idx(&[1]),
            &idx(&[2, 3]),
            None,
        )
        .unwrap();
        assert_eq!(r.status, Status::Pass);
        assert!(r.witness.iter().any(|w| w.contains("ratio 2")));
    }

    #[test]
    fn shuffle_h_mutation_trips() {
        let r = check_shuffle_h(
            1,
            1,
            &idx(&[1, 3]),
            &idx(&[2]),
            &IndexSet::empty(),
            &idx(&[1]),
            &idx(&[2, 3]),
            Some(Mutation::PpYShift),
        )
        .unwrap();
        assert_eq!(r.status, Status::Fail);
    }

    #[test]
    fn shuffle_cs_documented_pair() {
        let r = check_shuffle_cs(
            2,
            2,
            &idx(&[1, 2]),
            &IndexSet::empty(),
            &IndexSet::empty(),
            &idx(&[1]),
            &idx(&[2]),
            None,
        )
        .unwrap();
        assert_eq!(r.status, Status::Pass);
        assert!(r.witness.iter().any(|w| w.contains("ratio 1/6")));
    }

    #[test]
    fn base_case_y0_example() {
        let r = check_base_case(
            BaseCaseKind::Y0,
            2,
            0,
            &idx(&[1]),
            &IndexSet::empty(),
            &IndexSet::empty(),
        )
        .unwrap();
        assert_eq!(r.status, Status::Pass);
        // wrong kind for the parameters
        assert!(matches!(
            check_base_case(
                BaseCaseKind::Y1,
                2,
                0,
                &idx(&[1]),
                &IndexSet::empty(),
                &IndexSet::empty()
            ),
            Err(CheckError::Hypothesis(_))
        ));
    }

    #[test]
    fn recurrence_case_one_tiny() {
        let r = check_recurrence(
            RecurrenceCase::One,
            2,
            2,
            &idx(&[1]),
            &IndexSet::empty(),
            &IndexSet::empty(),
        )
        .unwrap();
        assert_eq!(r.status, Status::Pass, "{r:?}");
    }

    #[test]
    fn fern_identical_lists_ratio_one() {
        let ferns = vec![
            Fern::new(vec![1], Orientation::Up),
            Fern::new(vec![1], Orientation::Down),
        ];
        let r = check_fern_theorem(&FernCheck::Shuffle21 {
            x: 2,
            y: 1,
            ferns: ferns.clone(),
            ferns2: ferns,
            gaps: vec![3],
        })
        .unwrap();
        assert_eq!(r.status, Status::Pass);
    }

    #[test]
    fn fern_closed_24_tiny() {
        let r = check_fern_theorem(&FernCheck::Closed24 {
            x: 2,
            y: 2,
            f1: Fern::new(vec![1], Orientation::Up),
            f2: Fern::empty(),
        })
        .unwrap();
        assert_eq!(r.status, Status::Pass, "{r:?}");
    }
}
