//! Region construction on the triangular lattice.
//!
//! Every region family here is a convex hexagon (or trapezoid) minus a set
//! of removed unit triangles, plus optional barriers along the horizontal
//! axis through its west and east vertices. Axis positions are numbered
//! 1..=axis_len from the west; the up-cell and down-cell at position `i` are
//! `Cell::up(0, i)` and `Cell::down(-1, i)`, and together they form the
//! vertical lozenge at `i` (which a barrier at `i` forbids).

use std::collections::BTreeSet;

use thiserror::Error;

use crate::cell::{Cell, SigmaCenter};
use crate::spec::{Fern, IndexSet, Orientation, RegionSpec};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum BuildError {
    #[error("index set must be strictly increasing positive integers, got {0:?}")]
    BadIndexSet(Vec<u32>),
    #[error("expected {expected} dents, got {got}")]
    DentCount { expected: usize, got: usize },
    #[error("position {pos} outside the axis range 1..={axis_len}")]
    PositionRange { pos: u32, axis_len: u32 },
    #[error("barriers overlap dents at {0}")]
    BarrierOverlap(IndexSet),
    #[error("barrier budget exceeded: {got} > {max}")]
    TooManyBarriers { got: usize, max: usize },
    #[error("dent set meets its own mirror image at {0}")]
    MirrorOverlap(IndexSet),
    #[error("central position {0} may not carry a dent or barrier")]
    CenterBlocked(u32),
    #[error("{0}")]
    Parity(String),
    #[error("gap list does not fit: {0}")]
    Gaps(String),
    #[error("dent sequence must be nonempty")]
    EmptySeq,
    #[error("fern triangle sticks out of the hexagon at {0:?}")]
    FernOverflow(Cell),
    #[error("adjacent fern triangles must alternate orientation")]
    FernAlternation,
    #[error("region is not centrally symmetric")]
    NotSymmetric,
}

/// A concrete cell set with axis metadata.
///
/// Regions are immutable after construction; every operation that changes
/// the cell set returns a fresh value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    cells: BTreeSet<Cell>,
    axis_len: u32,
    up_dents: IndexSet,
    down_dents: IndexSet,
    barriers: IndexSet,
    sigma: Option<SigmaCenter>,
    untileable: bool,
    spec: Option<RegionSpec>,
}

impl Region {
    pub fn cells(&self) -> &BTreeSet<Cell> {
        &self.cells
    }

    pub fn axis_len(&self) -> u32 {
        self.axis_len
    }

    pub fn up_dents(&self) -> &IndexSet {
        &self.up_dents
    }

    pub fn down_dents(&self) -> &IndexSet {
        &self.down_dents
    }

    pub fn barriers(&self) -> &IndexSet {
        &self.barriers
    }

    pub fn sigma(&self) -> Option<&SigmaCenter> {
        self.sigma.as_ref()
    }

    /// The 180-degree rotation of the region, or an error when the cell set
    /// does not admit one.
    pub fn symmetry_map(&self) -> Result<SigmaCenter, BuildError> {
        self.sigma.ok_or(BuildError::NotSymmetric)
    }

    /// Set when forced-lozenge elimination found an uncoverable cell; every
    /// counting operation reports 0 for such a region.
    pub fn is_untileable(&self) -> bool {
        self.untileable
    }

    pub fn spec(&self) -> Option<&RegionSpec> {
        self.spec.as_ref()
    }

    /// Axis positions free of dents and barriers (the obstacle complement).
    pub fn axis_free(&self) -> IndexSet {
        (1..=self.axis_len)
            .filter(|&p| {
                !self.up_dents.contains(p)
                    && !self.down_dents.contains(p)
                    && !self.barriers.contains(p)
            })
            .collect()
    }

    /// True iff the edge between two adjacent cells is forbidden by a
    /// barrier (only vertical axis edges ever are).
    pub fn edge_barred(&self, a: &Cell, b: &Cell) -> bool {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        hi.row == 0 && hi.up && lo.row == -1 && !lo.up && hi.pos == lo.pos
            && hi.pos > 0
            && self.barriers.contains(hi.pos as u32)
    }

    /// Neighbours of `c` that are present and reachable (barriers excluded).
    pub fn open_neighbors(&self, c: &Cell) -> Vec<Cell> {
        c.neighbors()
            .into_iter()
            .filter(|n| self.cells.contains(n) && !self.edge_barred(c, n))
            .collect()
    }

    /// Iteratively strips cells with a unique partner together with that
    /// partner. A cell with no partner at all marks the region untileable
    /// (count 0); the region is then returned as-is with the flag set.
    /// Tiling counts are preserved either way, and the operation is
    /// idempotent.
    pub fn remove_forced(&self) -> Region {
        let mut out = self.clone();
        if out.untileable {
            return out;
        }
        let mut queue: Vec<Cell> = out.cells.iter().copied().collect();
        while let Some(c) = queue.pop() {
            if !out.cells.contains(&c) {
                continue;
            }
            let nbs = out.open_neighbors(&c);
            match nbs.len() {
                0 => {
                    out.untileable = true;
                    return out;
                }
                1 => {
                    let partner = nbs[0];
                    out.cells.remove(&c);
                    out.cells.remove(&partner);
                    for n in partner.neighbors().into_iter().chain(c.neighbors()) {
                        if out.cells.contains(&n) {
                            queue.push(n);
                        }
                    }
                }
                _ => {}
            }
        }
        debug_assert!(out.sigma_consistent());
        out
    }

    /// The region with `deleted` removed from the cell set.
    pub fn without_cells(&self, deleted: &BTreeSet<Cell>) -> Result<Region, BuildError> {
        for c in deleted {
            if !self.cells.contains(c) {
                return Err(BuildError::FernOverflow(*c));
            }
        }
        let mut out = self.clone();
        for c in deleted {
            out.cells.remove(c);
        }
        if !out.sigma_consistent() {
            out.sigma = None;
        }
        out.spec = None;
        Ok(out)
    }

    /// The region rotated 180 degrees about the center of its axis. Used to
    /// check that counting is rotation-invariant.
    pub fn rotated_180(&self) -> Region {
        let sigma = SigmaCenter::for_axis(self.axis_len);
        let n1 = self.axis_len + 1;
        Region {
            cells: self.cells.iter().map(|&c| sigma.apply(c)).collect(),
            axis_len: self.axis_len,
            up_dents: self.down_dents.mirrored(n1),
            down_dents: self.up_dents.mirrored(n1),
            barriers: self.barriers.mirrored(n1),
            sigma: None,
            untileable: self.untileable,
            spec: None,
        }
    }

    /// Run lengths of up-dents and free stretches along the axis, starting
    /// with the (possibly empty) dent block at position 1 and ending with
    /// the last dent block. This is the dent sequence of the generalized
    /// dented semihexagon sitting above the axis.
    pub fn upper_dent_seq(&self) -> Vec<u32> {
        dent_seq(&self.up_dents, self.axis_len)
    }

    /// Same for the down-dents below the axis.
    pub fn lower_dent_seq(&self) -> Vec<u32> {
        dent_seq(&self.down_dents, self.axis_len)
    }

    /// Canonical key identifying the matching problem: the cell set plus the
    /// barriers that still block an edge.
    pub(crate) fn count_key(&self) -> (Vec<Cell>, Vec<u32>) {
        let cells: Vec<Cell> = self.cells.iter().copied().collect();
        let barriers = self
            .barriers
            .iter()
            .filter(|&p| {
                self.cells.contains(&Cell::up(0, p as i32))
                    && self.cells.contains(&Cell::down(-1, p as i32))
            })
            .collect();
        (cells, barriers)
    }

    fn sigma_consistent(&self) -> bool {
        match self.sigma {
            None => true,
            Some(s) => self.cells.iter().all(|&c| self.cells.contains(&s.apply(c))),
        }
    }
}

fn dent_seq(dents: &IndexSet, axis_len: u32) -> Vec<u32> {
    let mut seq = Vec::new();
    let mut p = 1;
    let mut in_dent = true;
    let mut run = 0u32;
    while p <= axis_len {
        if dents.contains(p) == in_dent {
            run += 1;
            p += 1;
        } else {
            seq.push(run);
            run = 0;
            in_dent = !in_dent;
        }
    }
    seq.push(run);
    if !in_dent {
        seq.pop(); // trailing free stretch carries no dent information
    }
    if seq.is_empty() {
        seq.push(0);
    }
    seq
}

/// Rasterize the convex region between piecewise-linear boundaries. `l2` and
/// `r2` give twice the Cartesian x of the left and right boundary on each
/// lattice line; a cell belongs to the region iff all its corners do.
fn rasterize(
    rows: std::ops::Range<i32>,
    l2: impl Fn(i32) -> i64,
    r2: impl Fn(i32) -> i64,
) -> BTreeSet<Cell> {
    let mut cells = BTreeSet::new();
    let ceil_div2 = |v: i64| if v >= 0 { (v + 1) / 2 } else { v / 2 };
    let floor_div2 = |v: i64| if v >= 0 { v / 2 } else { (v - 1) / 2 };
    for j in rows {
        let (lj, rj, lj1, rj1) = (l2(j), r2(j), l2(j + 1), r2(j + 1));
        let j64 = j as i64;
        // up-cell: base [2p-j, 2p-j+2] on line j, apex 2p-j+1 on line j+1
        let lo = ceil_div2((lj + j64).max(lj1 + j64 - 1));
        let hi = floor_div2((rj + j64 - 2).min(rj1 + j64 - 1));
        for p in lo..=hi {
            cells.insert(Cell::up(j, p as i32));
        }
        // down-cell: bottom vertex 2p-j on line j, top edge [2p-j-1, 2p-j+1]
        let lo = ceil_div2((lj + j64).max(lj1 + j64 + 1));
        let hi = floor_div2((rj + j64).min(rj1 + j64 - 1));
        for p in lo..=hi {
            cells.insert(Cell::down(j, p as i32));
        }
    }
    cells
}

/// Cells of the hexagon with horizontal axis of length `axis_len` between
/// rows 0 and -1, `upper` rows above the axis and `lower` rows below; both
/// pairs of slanted sides have equal length, the north side is
/// `axis_len - upper` and the south side `axis_len - lower`.
fn axis_hexagon_cells(axis_len: u32, upper: u32, lower: u32) -> BTreeSet<Cell> {
    let l = axis_len as i64;
    rasterize(
        -(lower as i32)..(upper as i32),
        |h| 2 + (h as i64).abs(),
        move |h| 2 + 2 * l - (h as i64).abs(),
    )
}

/// Cells of the big triangle of the given orientation whose base occupies
/// axis positions `start..start+size`.
fn triangle_cells(orient: Orientation, start: u32, size: u32) -> Vec<Cell> {
    let (p, s) = (start as i32, size as i32);
    let mut out = Vec::new();
    for j in 0..s {
        match orient {
            Orientation::Up => {
                for b in p + j..=p + s - 1 {
                    out.push(Cell::up(j, b));
                }
                for b in p + j + 1..=p + s - 1 {
                    out.push(Cell::down(j, b));
                }
            }
            Orientation::Down => {
                for b in p..=p + s - 1 - j {
                    out.push(Cell::down(-1 - j, b));
                }
                for b in p..=p + s - 2 - j {
                    out.push(Cell::up(-1 - j, b));
                }
            }
        }
    }
    out
}

fn check_range(set: &IndexSet, axis_len: u32) -> Result<(), BuildError> {
    if let Some(max) = set.max() {
        if max > axis_len {
            return Err(BuildError::PositionRange {
                pos: max,
                axis_len,
            });
        }
    }
    Ok(())
}

/// Keep the axis-centered rotation only when the region is invariant under
/// it (cells, dents and barriers alike).
fn detect_axis_sigma(
    cells: &BTreeSet<Cell>,
    axis_len: u32,
    barriers: &IndexSet,
) -> Option<SigmaCenter> {
    let s = SigmaCenter::for_axis(axis_len);
    let symmetric = cells.iter().all(|&c| cells.contains(&s.apply(c)))
        && *barriers == barriers.mirrored(axis_len + 1);
    symmetric.then_some(s)
}

/// Hexagon with sides a, b, c, a, b, c clockwise from the north. The axis
/// runs through the west vertex; its length is a + min(b, c).
pub fn build_hexagon(a: u32, b: u32, c: u32) -> Region {
    let (ai, bi, ci) = (a as i64, b as i64, c as i64);
    let cells = rasterize(
        -(b as i32)..(c as i32),
        |h| 2 + (h as i64).abs(),
        move |h| (2 + 2 * ai + 2 * bi + h as i64).min(2 + 2 * ai + 2 * ci - h as i64),
    );
    let sigma = SigmaCenter {
        row_sum: c as i32 - b as i32 - 1,
        pos_sum: (a + c) as i32 + 1,
    };
    debug_assert!(cells.iter().all(|&x| cells.contains(&sigma.apply(x))));
    Region {
        cells,
        axis_len: a + b.min(c),
        up_dents: IndexSet::empty(),
        down_dents: IndexSet::empty(),
        barriers: IndexSet::empty(),
        sigma: Some(sigma),
        untileable: false,
        spec: Some(RegionSpec::Hex { a, b, c }),
    }
}

/// Doubly-dented hexagon: sides x+n-u, y+u, y+d, x+n-d, y+d, y+u with
/// up-dents at `u_set`, down-dents at `d_set` and barriers at `b_set` along
/// the axis of length x+y+n, where n = |U ∪ D|.
pub fn build_h(
    x: u32,
    y: u32,
    u_set: &IndexSet,
    d_set: &IndexSet,
    b_set: &IndexSet,
) -> Result<Region, BuildError> {
    let n = u_set.union(d_set).len() as u32;
    let axis_len = x + y + n;
    check_range(u_set, axis_len)?;
    check_range(d_set, axis_len)?;
    check_range(b_set, axis_len)?;
    let dented = u_set.union(d_set);
    let clash = b_set.intersection(&dented);
    if !clash.is_empty() {
        return Err(BuildError::BarrierOverlap(clash));
    }
    if b_set.len() > x as usize {
        return Err(BuildError::TooManyBarriers {
            got: b_set.len(),
            max: x as usize,
        });
    }
    let (u, d) = (u_set.len() as u32, d_set.len() as u32);
    let mut cells = axis_hexagon_cells(axis_len, y + u, y + d);
    for s in u_set.iter() {
        cells.remove(&Cell::up(0, s as i32));
    }
    for t in d_set.iter() {
        cells.remove(&Cell::down(-1, t as i32));
    }
    let sigma = detect_axis_sigma(&cells, axis_len, b_set);
    Ok(Region {
        cells,
        axis_len,
        up_dents: u_set.clone(),
        down_dents: d_set.clone(),
        barriers: b_set.clone(),
        sigma,
        untileable: false,
        spec: Some(RegionSpec::H {
            x,
            y,
            u: u_set.clone(),
            d: d_set.clone(),
            b: b_set.clone(),
        }),
    })
}

/// Dented semihexagon: the upper half of the hexagon b, a, a, b, a, a with
/// `a` up-cells removed along the base at the given positions.
pub fn build_t(a: u32, b: u32, dents: &IndexSet) -> Result<Region, BuildError> {
    if dents.len() != a as usize {
        return Err(BuildError::DentCount {
            expected: a as usize,
            got: dents.len(),
        });
    }
    let mut region = build_h(b, 0, dents, &IndexSet::empty(), &IndexSet::empty())?;
    region.spec = Some(RegionSpec::T {
        a,
        b,
        dents: dents.clone(),
    });
    Ok(region)
}

/// Generalized dented semihexagon S(a_1, ..., a_n): triangular dents of
/// sizes a_1, a_3, ... separated by gaps a_2, a_4, ... along the base of a
/// trapezoid, the first dent touching the west vertex. Constructed as the
/// unit-dented semihexagon over the same intervals with its forced lozenges
/// removed.
pub fn build_s(seq: &[u32]) -> Result<Region, BuildError> {
    if seq.is_empty() {
        return Err(BuildError::EmptySeq);
    }
    let odd: u32 = seq.iter().step_by(2).sum();
    let even: u32 = seq.iter().skip(1).step_by(2).sum();
    let mut dents = Vec::new();
    let mut pos = 1u32;
    for (i, &len) in seq.iter().enumerate() {
        if i % 2 == 0 {
            dents.extend(pos..pos + len);
        }
        pos += len;
    }
    let t = build_t(odd, even, &IndexSet::new(dents)?)?;
    let mut region = t.remove_forced();
    region.spec = Some(RegionSpec::S { seq: seq.to_vec() });
    Ok(region)
}

/// Centrally symmetric doubly-dented hexagon: up-dents U ∪ (N+1-D),
/// down-dents D ∪ (N+1-U) and barriers B ∪ (N+1-B) with N = x+y+2n. The
/// parameter sets must avoid their own mirror images so that the composed
/// doubly-dented hexagon is consistent, and for odd N the central position
/// must stay free.
pub fn build_cs(
    x: u32,
    y: u32,
    u_set: &IndexSet,
    d_set: &IndexSet,
    b_set: &IndexSet,
) -> Result<Region, BuildError> {
    let n = u_set.union(d_set).len() as u32;
    let axis_len = x + y + 2 * n;
    let n1 = axis_len + 1;
    check_range(u_set, axis_len)?;
    check_range(d_set, axis_len)?;
    check_range(b_set, axis_len)?;
    let dented = u_set.union(d_set);
    if axis_len % 2 == 1 {
        let center = n1 / 2;
        if dented.contains(center) || b_set.contains(center) {
            return Err(BuildError::CenterBlocked(center));
        }
    }
    let mirror_clash = dented.intersection(&dented.mirrored(n1));
    if !mirror_clash.is_empty() {
        return Err(BuildError::MirrorOverlap(mirror_clash));
    }
    if !b_set.is_disjoint(&dented) {
        return Err(BuildError::BarrierOverlap(b_set.intersection(&dented)));
    }
    if 2 * b_set.len() > x as usize {
        return Err(BuildError::TooManyBarriers {
            got: 2 * b_set.len(),
            max: x as usize,
        });
    }
    let full_u = u_set.union(&d_set.mirrored(n1));
    let full_d = d_set.union(&u_set.mirrored(n1));
    let full_b = b_set.union(&b_set.mirrored(n1));
    let mut region = build_h(x, y, &full_u, &full_d, &full_b)?;
    debug_assert!(region.sigma.is_some());
    region.spec = Some(RegionSpec::Cs {
        x,
        y,
        u: u_set.clone(),
        d: d_set.clone(),
        b: b_set.clone(),
    });
    Ok(region)
}

/// Hexagon with ferns removed: sides x+d, y+u, y+d, x+u, y+d, y+u where u
/// and d total the up- and down-pointing side lengths over all ferns. The
/// first fern starts at the west vertex, the last ends at the east vertex,
/// and consecutive ferns are separated by the given gaps.
pub fn build_r(x: u32, y: u32, ferns: &[Fern], gaps: &[u32]) -> Result<Region, BuildError> {
    if ferns.is_empty() || gaps.len() + 1 != ferns.len() {
        return Err(BuildError::Gaps(format!(
            "need one gap between consecutive ferns: {} ferns, {} gaps",
            ferns.len(),
            gaps.len()
        )));
    }
    let gap_sum: u32 = gaps.iter().sum();
    if gap_sum != x + y {
        return Err(BuildError::Gaps(format!(
            "gaps sum to {gap_sum}, expected x + y = {}",
            x + y
        )));
    }
    let u: u32 = ferns.iter().map(Fern::up_total).sum();
    let d: u32 = ferns.iter().map(Fern::down_total).sum();
    let axis_len = x + y + u + d;
    let mut cells = axis_hexagon_cells(axis_len, y + u, y + d);
    let mut up_dents = Vec::new();
    let mut down_dents = Vec::new();
    let mut pos = 1u32;
    for (i, fern) in ferns.iter().enumerate() {
        for (j, &len) in fern.lengths.iter().enumerate() {
            let orient = fern.orientation(j);
            for cell in triangle_cells(orient, pos, len) {
                if !cells.remove(&cell) {
                    return Err(BuildError::FernOverflow(cell));
                }
            }
            match orient {
                Orientation::Up => up_dents.extend(pos..pos + len),
                Orientation::Down => down_dents.extend(pos..pos + len),
            }
            pos += len;
        }
        if i + 1 < ferns.len() {
            pos += gaps[i];
        }
    }
    debug_assert_eq!(pos, axis_len + 1);
    let up_dents = IndexSet::new(up_dents)?;
    let down_dents = IndexSet::new(down_dents)?;
    let sigma = detect_axis_sigma(&cells, axis_len, &IndexSet::empty());
    Ok(Region {
        cells,
        axis_len,
        up_dents,
        down_dents,
        barriers: IndexSet::empty(),
        sigma,
        untileable: false,
        spec: Some(RegionSpec::R {
            x,
            y,
            ferns: ferns.to_vec(),
            gaps: gaps.to_vec(),
        }),
    })
}

fn mirrored_fern_layout(
    ferns: &[Fern],
    gaps: &[u32],
    middle_gap: Option<u32>,
) -> Result<(Vec<Fern>, Vec<u32>), BuildError> {
    let k = ferns.len();
    let mut full_ferns: Vec<Fern> = ferns.to_vec();
    let mut full_gaps: Vec<u32> = gaps.to_vec();
    match middle_gap {
        // Last fern merges with its own reflection at the center.
        None => {
            let merged = ferns[k - 1].joined(&ferns[k - 1].reflected())?;
            full_ferns[k - 1] = merged;
        }
        Some(g) => {
            full_ferns.push(ferns[k - 1].reflected());
            full_gaps.push(g);
        }
    }
    for i in (0..k - 1).rev() {
        full_ferns.push(ferns[i].reflected());
        full_gaps.push(gaps[i]);
    }
    Ok((full_ferns, full_gaps))
}

/// Symmetric hexagon with mirrored collinear ferns removed; the last input
/// fern touches the symmetry center, which is a lattice point (x + y even).
/// The half gap list must sum to (x + y) / 2.
pub fn build_e(x: u32, y: u32, ferns: &[Fern], gaps: &[u32]) -> Result<Region, BuildError> {
    if (x + y) % 2 != 0 {
        return Err(BuildError::Parity(format!(
            "x + y = {} must be even for a lattice-point center",
            x + y
        )));
    }
    if ferns.is_empty() || gaps.len() + 1 != ferns.len() {
        return Err(BuildError::Gaps(format!(
            "need one gap between consecutive ferns: {} ferns, {} gaps",
            ferns.len(),
            gaps.len()
        )));
    }
    let (full_ferns, full_gaps) = mirrored_fern_layout(ferns, gaps, None)?;
    let mut region = build_r(x, y, &full_ferns, &full_gaps)?;
    if region.sigma.is_none() {
        return Err(BuildError::NotSymmetric);
    }
    region.spec = Some(RegionSpec::E {
        x,
        y,
        ferns: ferns.to_vec(),
        gaps: gaps.to_vec(),
    });
    Ok(region)
}

/// Variant of the symmetric fern hexagon whose center is the midpoint of a
/// unit gap (x + y odd): the mirrored halves are separated by a central gap
/// of one.
pub fn build_e_prime(x: u32, y: u32, ferns: &[Fern], gaps: &[u32]) -> Result<Region, BuildError> {
    if (x + y) % 2 != 1 {
        return Err(BuildError::Parity(format!(
            "x + y = {} must be odd for a mid-edge center",
            x + y
        )));
    }
    if ferns.is_empty() || gaps.len() + 1 != ferns.len() {
        return Err(BuildError::Gaps(format!(
            "need one gap between consecutive ferns: {} ferns, {} gaps",
            ferns.len(),
            gaps.len()
        )));
    }
    let (full_ferns, full_gaps) = mirrored_fern_layout(ferns, gaps, Some(1))?;
    let mut region = build_r(x, y, &full_ferns, &full_gaps)?;
    if region.sigma.is_none() {
        return Err(BuildError::NotSymmetric);
    }
    region.spec = Some(RegionSpec::Eprime {
        x,
        y,
        ferns: ferns.to_vec(),
        gaps: gaps.to_vec(),
    });
    Ok(region)
}

/// Build a region from its declarative description.
pub fn build_region(spec: &RegionSpec) -> Result<Region, BuildError> {
    match spec {
        RegionSpec::Hex { a, b, c } => Ok(build_hexagon(*a, *b, *c)),
        RegionSpec::T { a, b, dents } => build_t(*a, *b, dents),
        RegionSpec::S { seq } => build_s(seq),
        RegionSpec::H { x, y, u, d, b } => build_h(*x, *y, u, d, b),
        RegionSpec::Cs { x, y, u, d, b } => build_cs(*x, *y, u, d, b),
        RegionSpec::R { x, y, ferns, gaps } => build_r(*x, *y, ferns, gaps),
        RegionSpec::E { x, y, ferns, gaps } => build_e(*x, *y, ferns, gaps),
        RegionSpec::Eprime { x, y, ferns, gaps } => build_e_prime(*x, *y, ferns, gaps),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(v: &[u32]) -> IndexSet {
        IndexSet::new(v.to_vec()).unwrap()
    }

    #[test]
    fn hexagon_cell_counts() {
        assert_eq!(build_hexagon(0, 0, 0).cells().len(), 0);
        let h = build_hexagon(1, 1, 1);
        assert_eq!(h.cells().len(), 6);
        assert_eq!(h.axis_len(), 2);
        assert_eq!(build_hexagon(2, 2, 2).cells().len(), 24);
        // area of the a,b,c hexagon in unit triangles
        for a in 0..=3u32 {
            for b in 0..=3u32 {
                for c in 0..=3u32 {
                    let n = build_hexagon(a, b, c).cells().len() as u32;
                    assert_eq!(n, 2 * (a * b + b * c + c * a), "hex({a},{b},{c})");
                }
            }
        }
    }

    #[test]
    fn hexagon_sigma_holds_for_unequal_slants() {
        let h = build_hexagon(1, 2, 3);
        let s = h.symmetry_map().unwrap();
        for &c in h.cells() {
            assert!(h.cells().contains(&s.apply(c)));
            assert_eq!(s.apply(s.apply(c)), c);
            assert_eq!(s.apply(c).up, !c.up);
        }
    }

    #[test]
    fn t_region_validity() {
        assert!(build_t(1, 2, &idx(&[2])).is_ok());
        // wrong dent count
        assert!(matches!(
            build_t(2, 1, &idx(&[1])),
            Err(BuildError::DentCount { .. })
        ));
        // dent out of range: axis is a + b
        assert!(matches!(
            build_t(2, 1, &idx(&[1, 4])),
            Err(BuildError::PositionRange { .. })
        ));
        let t = build_t(2, 1, &idx(&[1, 3])).unwrap();
        assert_eq!(t.axis_len(), 3);
        // balanced after removing a up-cells
        let ups = t.cells().iter().filter(|c| c.up).count();
        let downs = t.cells().len() - ups;
        assert_eq!(ups, downs);
    }

    #[test]
    fn t_fully_forced_collapses() {
        let t = build_t(2, 0, &idx(&[1, 2])).unwrap();
        let r = t.remove_forced();
        assert!(!r.is_untileable());
        assert!(r.cells().is_empty());
    }

    #[test]
    fn s_region_examples() {
        let s = build_s(&[2]).unwrap();
        assert!(s.cells().is_empty());
        assert!(!s.is_untileable());

        let s = build_s(&[1, 1, 1]).unwrap();
        assert_eq!(s.axis_len(), 3);
        assert!(!s.cells().is_empty());
    }

    #[test]
    fn h_region_figure_instance() {
        // doubly-dented hexagon with x=4, y=3, five up-dents, four down-dents
        // and two barriers; axis x+y+n with n = 7
        let h = build_h(
            4,
            3,
            &idx(&[2, 4, 5, 8, 11]),
            &idx(&[4, 9, 11, 12]),
            &idx(&[6, 13]),
        )
        .unwrap();
        assert_eq!(h.axis_len(), 14);
        assert!(h.sigma().is_none());
        // both cells survive at a barrier position
        assert!(h.cells().contains(&Cell::up(0, 6)));
        assert!(h.cells().contains(&Cell::down(-1, 6)));
        assert!(h.edge_barred(&Cell::up(0, 6), &Cell::down(-1, 6)));
        assert!(!h.edge_barred(&Cell::up(0, 7), &Cell::down(-1, 7)));
        // dent positions are absent
        assert!(!h.cells().contains(&Cell::up(0, 2)));
        assert!(h.cells().contains(&Cell::down(-1, 2)));
    }

    #[test]
    fn h_without_dents_is_hexagon() {
        let h = build_h(3, 2, &IndexSet::empty(), &IndexSet::empty(), &IndexSet::empty()).unwrap();
        let hex = build_hexagon(3, 2, 2);
        assert_eq!(h.cells(), hex.cells());
        assert!(h.sigma().is_some());
    }

    #[test]
    fn h_validity_errors() {
        assert!(matches!(
            build_h(1, 1, &idx(&[1]), &IndexSet::empty(), &idx(&[1])),
            Err(BuildError::BarrierOverlap(_))
        ));
        assert!(matches!(
            build_h(0, 1, &IndexSet::empty(), &IndexSet::empty(), &idx(&[1])),
            Err(BuildError::TooManyBarriers { .. })
        ));
    }

    #[test]
    fn h_small_dent_pair() {
        let h = build_h(0, 1, &idx(&[1]), &idx(&[1]), &IndexSet::empty()).unwrap();
        assert_eq!(h.axis_len(), 2);
        assert!(!h.cells().contains(&Cell::up(0, 1)));
        assert!(!h.cells().contains(&Cell::down(-1, 1)));
    }

    #[test]
    fn cs_matches_composed_h() {
        let cs = build_cs(2, 2, &idx(&[1]), &IndexSet::empty(), &IndexSet::empty()).unwrap();
        let h = build_h(2, 2, &idx(&[1]), &idx(&[6]), &IndexSet::empty()).unwrap();
        assert_eq!(cs.cells(), h.cells());
        assert_eq!(cs.axis_len(), 6);
        let s = cs.symmetry_map().unwrap();
        // axis up-cell 2 pairs with axis down-cell 5
        assert_eq!(s.apply(Cell::up(0, 2)), Cell::down(-1, 5));
    }

    #[test]
    fn cs_allows_coincident_up_down_dent() {
        // U and D may intersect: both cells at 1 (and at the mirror 6) go
        let cs = build_cs(2, 2, &idx(&[1]), &idx(&[1]), &IndexSet::empty()).unwrap();
        for p in [1, 6] {
            assert!(!cs.cells().contains(&Cell::up(0, p)));
            assert!(!cs.cells().contains(&Cell::down(-1, p)));
        }
    }

    #[test]
    fn cs_validity_errors() {
        // n = 2, N = 6: {3, 4} is its own mirror image
        let err = build_cs(1, 1, &idx(&[3, 4]), &IndexSet::empty(), &IndexSet::empty());
        assert!(matches!(err, Err(BuildError::MirrorOverlap(_))), "{err:?}");
        // odd axis: central position must stay free of dents and barriers
        let err = build_cs(1, 2, &idx(&[3]), &IndexSet::empty(), &IndexSet::empty());
        assert!(matches!(err, Err(BuildError::CenterBlocked(3))), "{err:?}");
        let err = build_cs(2, 1, &IndexSet::empty(), &IndexSet::empty(), &idx(&[2]));
        assert!(matches!(err, Err(BuildError::CenterBlocked(2))), "{err:?}");
    }

    #[test]
    fn cs_plain_is_symmetric_hexagon() {
        let cs = build_cs(3, 2, &IndexSet::empty(), &IndexSet::empty(), &IndexSet::empty()).unwrap();
        let hex = build_hexagon(3, 2, 2);
        assert_eq!(cs.cells(), hex.cells());
        assert!(cs.sigma().is_some());
    }

    #[test]
    fn r_with_empty_ferns_is_hexagon() {
        let ferns = vec![Fern::empty(), Fern::empty()];
        let r = build_r(2, 1, &ferns, &[3]).unwrap();
        let hex = build_hexagon(2, 1, 1);
        assert_eq!(r.cells(), hex.cells());
    }

    #[test]
    fn r_single_up_triangle_hole() {
        let ferns = vec![
            Fern::new(vec![2], Orientation::Up),
            Fern::empty(),
        ];
        let r = build_r(1, 1, &ferns, &[2]).unwrap();
        assert_eq!(r.axis_len(), 4);
        assert_eq!(r.up_dents().as_slice(), &[1, 2]);
        assert!(!r.cells().contains(&Cell::up(0, 1)));
        assert!(!r.cells().contains(&Cell::up(1, 2)));
        assert!(r.cells().contains(&Cell::down(-1, 1)));
    }

    #[test]
    fn r_gap_sum_checked() {
        let ferns = vec![Fern::empty(), Fern::empty()];
        assert!(matches!(
            build_r(2, 1, &ferns, &[2]),
            Err(BuildError::Gaps(_))
        ));
    }

    #[test]
    fn e_region_is_symmetric_and_merges_middle() {
        // one fern of a single up-triangle, mirrored through the center
        let ferns = vec![Fern::empty(), Fern::new(vec![1], Orientation::Up)];
        let e = build_e(2, 2, &ferns, &[2]).unwrap();
        assert!(e.sigma().is_some());
        assert_eq!(e.axis_len(), 6);
        // merged middle fern: up-triangle at 3, mirrored down-triangle at 4
        assert_eq!(e.up_dents().as_slice(), &[3]);
        assert_eq!(e.down_dents().as_slice(), &[4]);
        assert!(matches!(
            build_e(2, 1, &ferns, &[1]),
            Err(BuildError::Parity(_))
        ));
    }

    #[test]
    fn e_prime_region_center_gap() {
        let ferns = vec![Fern::new(vec![1], Orientation::Up), Fern::empty()];
        let ep = build_e_prime(2, 1, &ferns, &[1]).unwrap();
        assert!(ep.sigma().is_some());
        assert_eq!(ep.axis_len(), 5);
        assert_eq!(ep.up_dents().as_slice(), &[1]);
        assert_eq!(ep.down_dents().as_slice(), &[5]);
        assert!(matches!(
            build_e_prime(2, 2, &ferns, &[1]),
            Err(BuildError::Parity(_))
        ));
    }

    #[test]
    fn remove_forced_is_idempotent() {
        let t = build_t(3, 1, &idx(&[1, 2, 4])).unwrap();
        let once = t.remove_forced();
        let twice = once.remove_forced();
        assert_eq!(once.cells(), twice.cells());
        assert_eq!(once.is_untileable(), twice.is_untileable());
    }

    #[test]
    fn upper_dent_seq_reads_blocks() {
        let s = build_s(&[2, 2, 2, 3, 1, 2, 4]).unwrap();
        assert_eq!(s.upper_dent_seq(), vec![2, 2, 2, 3, 1, 2, 4]);
        let hex = build_hexagon(2, 1, 1);
        assert_eq!(hex.upper_dent_seq(), vec![0]);
    }

    #[test]
    fn axis_free_excludes_obstacles() {
        // axis length 2 + 1 + 2 = 5; dents at 2 and 4, barrier at 1
        let h = build_h(2, 1, &idx(&[2]), &idx(&[4]), &idx(&[1])).unwrap();
        assert_eq!(h.axis_free().as_slice(), &[3, 5]);
    }

    #[test]
    fn symmetry_map_errors_on_asymmetric_region() {
        let h = build_h(1, 1, &idx(&[1]), &IndexSet::empty(), &IndexSet::empty()).unwrap();
        assert_eq!(h.symmetry_map(), Err(BuildError::NotSymmetric));
    }

    #[test]
    fn spec_round_trip_rebuilds_identical_region() {
        let specs = [
            RegionSpec::Hex { a: 2, b: 1, c: 3 },
            RegionSpec::Cs {
                x: 2,
                y: 2,
                u: idx(&[1]),
                d: idx(&[2]),
                b: IndexSet::empty(),
            },
            RegionSpec::S { seq: vec![1, 1, 1] },
            RegionSpec::Eprime {
                x: 2,
                y: 1,
                ferns: vec![Fern::new(vec![1], Orientation::Up), Fern::empty()],
                gaps: vec![1],
            },
        ];
        for spec in specs {
            let js = serde_json::to_string(&spec).unwrap();
            let back: RegionSpec = serde_json::from_str(&js).unwrap();
            let r1 = build_region(&spec).unwrap();
            let r2 = build_region(&back).unwrap();
            assert_eq!(r1, r2);
        }
    }
}
