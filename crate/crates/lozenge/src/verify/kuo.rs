//! Condensation on centrally symmetric regions: pick four symmetric vertex
//! pairs (two at opposite hexagon corners, two on the axis) and verify
//!
//!   Mc(G) Mc(G_abcd) = Mc(G_ab) Mc(G_cd) + Mc(G_ac) Mc(G_bd) + Mc(G_ad) Mc(G_bc)
//!
//! on the vertex-deleted counts.

use std::collections::BTreeSet;

use crate::cell::Cell;
use crate::enumerate::count_cs_with_deletions;
use crate::region::Region;
use crate::spec::RegionSpec;

use super::{CheckError, CheckReport};

/// Which membership case position 1 is in; mirrors the four induction cases.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KuoCase {
    /// 1 carries an up-dent only.
    UMinusD,
    /// 1 carries a down-dent only (the rotated variant: orientation picks flip).
    DMinusU,
    /// 1 is free.
    Neither,
    /// 1 carries both dents.
    Both,
}

impl KuoCase {
    /// The case matching a region's own dent sets.
    pub fn of(u1: bool, d1: bool) -> KuoCase {
        match (u1, d1) {
            (true, false) => KuoCase::UMinusD,
            (false, true) => KuoCase::DMinusU,
            (false, false) => KuoCase::Neither,
            (true, true) => KuoCase::Both,
        }
    }
}

/// Four symmetric cell pairs: corners (a, b) and axis positions (c, d).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KuoVertices {
    pub a: (Cell, Cell),
    pub b: (Cell, Cell),
    pub c: (Cell, Cell),
    pub d: (Cell, Cell),
}

impl KuoVertices {
    pub fn cells(&self) -> [Cell; 8] {
        [
            self.a.0, self.a.1, self.b.0, self.b.1, self.c.0, self.c.1, self.d.0, self.d.1,
        ]
    }
}

/// Choose the eight condensation cells for a centrally symmetric region:
/// the a-pair at the northeast/southwest corners, the b-pair at the
/// northwest/southeast corners, the c-pair at the outermost free axis
/// positions, the d-pair at the innermost ones (for a mid-edge center, the
/// two cells of the central position). Fails on base-case regions, where no
/// valid choice exists.
pub fn choose_kuo_vertices(region: &Region, case: KuoCase) -> Result<KuoVertices, CheckError> {
    let Some(RegionSpec::Cs { x, y, u, d, b }) = region.spec() else {
        return Err(CheckError::Hypothesis(
            "condensation vertices are defined for centrally symmetric regions".into(),
        ));
    };
    let sigma = *region.sigma().expect("cs regions carry sigma");
    if KuoCase::of(u.contains(1), d.contains(1)) != case {
        return Err(CheckError::Hypothesis(format!(
            "region dents at position 1 do not match case {case:?}"
        )));
    }
    let (u_len, d_len) = (u.len() as u32, d.len() as u32);
    if *x < 2 * b.len() as u32 + 2 || *y < 2 || u_len + d_len == 0 {
        return Err(CheckError::Hypothesis(format!(
            "base-case region (x={x}, y={y}, |U|+|D|={}): no valid vertex choice",
            u_len + d_len
        )));
    }
    let axis = region.axis_len();
    let rows_above = (y + u_len + d_len) as i32;
    let a_cell = Cell::up(rows_above - 1, axis as i32);
    let b_cell = Cell::down(rows_above - 1, rows_above + 1);
    let free = region.axis_free();
    let alpha = free
        .iter()
        .next()
        .ok_or_else(|| CheckError::Hypothesis("no free axis position".into()))?;
    // the rotated case flips which orientation is picked at each axis spot
    let flip = case == KuoCase::DMinusU;
    let c0 = if flip {
        Cell::down(-1, alpha as i32)
    } else {
        Cell::up(0, alpha as i32)
    };
    let d0 = if axis % 2 == 1 {
        let center = (axis + 1) / 2;
        if alpha == center {
            return Err(CheckError::Hypothesis(
                "only the central position is free".into(),
            ));
        }
        // the central pair is its own image either way
        Cell::up(0, center as i32)
    } else {
        let beta = free
            .iter()
            .filter(|&p| p <= axis / 2)
            .last()
            .ok_or_else(|| CheckError::Hypothesis("no free position left of center".into()))?;
        if flip {
            Cell::up(0, beta as i32)
        } else {
            Cell::down(-1, beta as i32)
        }
    };
    let verts = KuoVertices {
        a: (a_cell, sigma.apply(a_cell)),
        b: (b_cell, sigma.apply(b_cell)),
        c: (c0, sigma.apply(c0)),
        d: (d0, sigma.apply(d0)),
    };
    for cell in verts.cells() {
        if !region.cells().contains(&cell) {
            return Err(CheckError::Hypothesis(format!(
                "chosen cell {cell:?} is not in the region"
            )));
        }
    }
    Ok(verts)
}

/// Verify the condensation identity for the given vertex choice.
pub fn check_kuo(region: &Region, verts: &KuoVertices) -> Result<CheckReport, CheckError> {
    let sigma = region
        .sigma()
        .ok_or(CheckError::Hypothesis("region carries no symmetry".into()))?;
    for (p, q) in [verts.a, verts.b, verts.c, verts.d] {
        if sigma.apply(p) != q {
            return Err(CheckError::Hypothesis(format!(
                "{p:?} and {q:?} are not images of each other"
            )));
        }
    }
    let del = |pairs: &[(Cell, Cell)]| -> BTreeSet<Cell> {
        pairs.iter().flat_map(|&(p, q)| [p, q]).collect()
    };
    let mc = |cells: &BTreeSet<Cell>| count_cs_with_deletions(region, cells);
    let whole = mc(&BTreeSet::new())?;
    let abcd = mc(&del(&[verts.a, verts.b, verts.c, verts.d]))?;
    let ab = mc(&del(&[verts.a, verts.b]))?;
    let cd = mc(&del(&[verts.c, verts.d]))?;
    let ac = mc(&del(&[verts.a, verts.c]))?;
    let bd = mc(&del(&[verts.b, verts.d]))?;
    let ad = mc(&del(&[verts.a, verts.d]))?;
    let bc = mc(&del(&[verts.b, verts.c]))?;
    let lhs = &whole * &abcd;
    let rhs = &ab * &cd + &ac * &bd + &ad * &bc;
    let spec_str = match region.spec() {
        Some(RegionSpec::Cs { x, y, u, d, b }) => {
            format!("x={x} y={y} U={u} D={d} B={b}")
        }
        _ => format!("axis={}", region.axis_len()),
    };
    Ok(CheckReport::equality(
        format!("kuo {spec_str}"),
        &lhs,
        &rhs,
        vec![
            format!("Mc={whole} Mc(abcd)={abcd}"),
            format!("Mc(ab)={ab} Mc(cd)={cd} Mc(ac)={ac} Mc(bd)={bd} Mc(ad)={ad} Mc(bc)={bc}"),
        ],
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::region::build_cs;
    use crate::spec::IndexSet;
    use crate::verify::Status;

    fn idx(v: &[u32]) -> IndexSet {
        IndexSet::new(v.to_vec()).unwrap()
    }

    #[test]
    fn vertex_choice_concrete_cells() {
        let region = build_cs(4, 2, &idx(&[1]), &IndexSet::empty(), &IndexSet::empty()).unwrap();
        // axis 8, three rows above; free positions 2..7
        let v = choose_kuo_vertices(&region, KuoCase::UMinusD).unwrap();
        assert_eq!(v.a.0, Cell::up(2, 8));
        assert_eq!(v.a.1, Cell::down(-3, 1));
        assert_eq!(v.b.0, Cell::down(2, 4));
        assert_eq!(v.b.1, Cell::up(-3, 5));
        assert_eq!(v.c.0, Cell::up(0, 2));
        assert_eq!(v.c.1, Cell::down(-1, 7));
        assert_eq!(v.d.0, Cell::down(-1, 4));
        assert_eq!(v.d.1, Cell::up(0, 5));
        for cell in v.cells() {
            assert!(region.cells().contains(&cell));
        }
    }

    #[test]
    fn base_case_region_has_no_choice() {
        let region = build_cs(0, 2, &idx(&[1]), &IndexSet::empty(), &IndexSet::empty()).unwrap();
        assert!(matches!(
            choose_kuo_vertices(&region, KuoCase::UMinusD),
            Err(CheckError::Hypothesis(_))
        ));
    }

    #[test]
    fn kuo_identity_on_tiny_regions() {
        for (x, y, u, d) in [
            (2u32, 2u32, vec![1u32], vec![]),
            (2, 2, vec![1], vec![2]),
            (3, 2, vec![1], vec![]),
            (2, 3, vec![2], vec![1]),
        ] {
            let region = build_cs(x, y, &idx(&u), &idx(&d), &IndexSet::empty()).unwrap();
            let case = KuoCase::of(idx(&u).contains(1), idx(&d).contains(1));
            let verts = choose_kuo_vertices(&region, case).unwrap();
            let report = check_kuo(&region, &verts).unwrap();
            assert_eq!(report.status, Status::Pass, "{report:?}");
        }
    }

    #[test]
    fn mismatched_pair_is_rejected() {
        let region = build_cs(4, 2, &idx(&[1]), &IndexSet::empty(), &IndexSet::empty()).unwrap();
        let mut v = choose_kuo_vertices(&region, KuoCase::UMinusD).unwrap();
        v.c.1 = Cell::up(0, 3);
        assert!(matches!(
            check_kuo(&region, &v),
            Err(CheckError::Hypothesis(_))
        ));
    }
}
