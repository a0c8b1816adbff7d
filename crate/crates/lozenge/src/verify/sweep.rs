//! Deterministic parameter sweeps over the checkers. Instance lists are
//! generated in a fixed grid order; checking fans out across a thread pool
//! capped by `TILINGS_THREADS`, and the report order follows the grid
//! regardless of scheduling. Instances whose parameters fall outside a
//! checker's hypotheses are skipped, not reported.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::sync::OnceLock;

use crate::region::build_cs;
use crate::spec::{Fern, IndexSet, Orientation};

use super::kuo::{check_kuo, choose_kuo_vertices, KuoCase};
use super::{
    check_base_case, check_fern_theorem, check_recurrence, check_shuffle_cs, check_shuffle_h,
    BaseCaseKind, CheckError, CheckReport, FernCheck, Mutation, RecurrenceCase,
};

fn pool() -> &'static rayon::ThreadPool {
    static POOL: OnceLock<rayon::ThreadPool> = OnceLock::new();
    POOL.get_or_init(|| {
        let threads = std::env::var("TILINGS_THREADS")
            .ok()
            .and_then(|v| v.parse::<usize>().ok())
            .unwrap_or(0);
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("thread pool")
    })
}

fn run_all<T, F>(items: Vec<T>, f: F) -> Vec<CheckReport>
where
    T: Send + Sync,
    F: Fn(&T) -> Option<CheckReport> + Send + Sync,
{
    pool().install(|| {
        items
            .par_iter()
            .map(|item| f(item))
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect()
    })
}

fn run_all_flat<T, F>(items: Vec<T>, f: F) -> Vec<CheckReport>
where
    T: Send + Sync,
    F: Fn(&T) -> Vec<CheckReport> + Send + Sync,
{
    pool().install(|| {
        items
            .par_iter()
            .map(|item| f(item))
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect()
    })
}

/// k-element subsets of `pool`, in lexicographic order.
fn k_subsets(pool: &[u32], k: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(pool: &[u32], from: usize, k: usize, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        let need = k - current.len();
        for i in from..=pool.len().saturating_sub(need) {
            current.push(pool[i]);
            rec(pool, i + 1, k, current, out);
            current.pop();
        }
    }
    rec(pool, 0, k, &mut current, &mut out);
    out
}

/// All (U, D) orientation splits of the dent positions `w` around the fixed
/// intersection choice: each position goes to U only, D only, or both.
fn splits(w: &[u32]) -> Vec<(IndexSet, IndexSet)> {
    let mut out = Vec::new();
    let n = w.len();
    for assign in 0..3u32.pow(n as u32) {
        let mut u = Vec::new();
        let mut d = Vec::new();
        let mut code = assign;
        for &p in w {
            match code % 3 {
                0 => u.push(p),
                1 => d.push(p),
                _ => {
                    u.push(p);
                    d.push(p);
                }
            }
            code /= 3;
        }
        out.push((
            IndexSet::new(u).expect("sorted"),
            IndexSet::new(d).expect("sorted"),
        ));
    }
    out
}

fn compatible(a: &(IndexSet, IndexSet), b: &(IndexSet, IndexSet)) -> bool {
    a.0.intersection(&a.1) == b.0.intersection(&b.1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridH {
    pub x_max: u32,
    pub y_max: u32,
    pub n_max: u32,
    pub b_max: u32,
}

impl Default for GridH {
    fn default() -> Self {
        GridH {
            x_max: 3,
            y_max: 3,
            n_max: 3,
            b_max: 1,
        }
    }
}

/// Every valid shuffle pair of doubly-dented hexagons within the grid.
pub fn sweep_shuffle_h(grid: &GridH, mutation: Option<Mutation>) -> Vec<CheckReport> {
    let mut items = Vec::new();
    for x in 0..=grid.x_max {
        for y in 0..=grid.y_max {
            for n in 0..=grid.n_max {
                let axis = x + y + n;
                let positions: Vec<u32> = (1..=axis).collect();
                for w in k_subsets(&positions, n as usize) {
                    let configs = splits(&w);
                    let rest: Vec<u32> =
                        positions.iter().copied().filter(|p| !w.contains(p)).collect();
                    let mut barrier_sets = vec![IndexSet::empty()];
                    for size in 1..=grid.b_max.min(x) as usize {
                        for b in k_subsets(&rest, size) {
                            barrier_sets.push(IndexSet::new(b).expect("sorted"));
                        }
                    }
                    for i in 0..configs.len() {
                        for j in i..configs.len() {
                            if !compatible(&configs[i], &configs[j]) {
                                continue;
                            }
                            for b in &barrier_sets {
                                items.push((
                                    x,
                                    y,
                                    configs[i].clone(),
                                    configs[j].clone(),
                                    b.clone(),
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    run_all(items, |(x, y, c1, c2, b)| {
        check_shuffle_h(*x, *y, &c1.0, &c1.1, b, &c2.0, &c2.1, mutation).ok()
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridCs {
    pub max_axis: u32,
    pub b_max: u32,
}

impl Default for GridCs {
    fn default() -> Self {
        GridCs {
            max_axis: 12,
            b_max: 0,
        }
    }
}

/// Mirror-compatible dent position sets: choose `n` mirror classes of the
/// axis and one side from each.
fn cs_position_sets(axis: u32, n: u32) -> Vec<Vec<u32>> {
    let half: Vec<u32> = (1..=axis / 2).collect();
    let mut out = Vec::new();
    for classes in k_subsets(&half, n as usize) {
        for sides in 0..1u32 << n {
            let mut w: Vec<u32> = classes
                .iter()
                .enumerate()
                .map(|(i, &p)| {
                    if sides >> i & 1 == 0 {
                        p
                    } else {
                        axis + 1 - p
                    }
                })
                .collect();
            w.sort_unstable();
            out.push(w);
        }
    }
    out
}

/// Every valid shuffle pair of centrally symmetric regions with axis length
/// at most `max_axis`, covering both lattice-point and mid-edge centers.
///
/// Within one family (fixed positions, intersection and barriers) each
/// configuration is checked against the family's first configuration; the
/// predicted ratios are multiplicative under composition, so reference
/// coverage spans every pair, and a zero count anywhere in a nonzero family
/// still surfaces as a failing reference pair.
pub fn sweep_shuffle_cs(grid: &GridCs, mutation: Option<Mutation>) -> Vec<CheckReport> {
    let mut families = Vec::new();
    for x in 0..=grid.max_axis {
        for y in 0..=grid.max_axis.saturating_sub(x) {
            for n in 0..=(grid.max_axis - x - y) / 2 {
                let axis = x + y + 2 * n;
                for w in cs_position_sets(axis, n) {
                    let mut barrier_sets = vec![IndexSet::empty()];
                    for size in 1..=(grid.b_max.min(x / 2)) as usize {
                        let free: Vec<u32> = (1..=axis / 2)
                            .filter(|p| !w.contains(p) && !w.contains(&(axis + 1 - p)))
                            .collect();
                        for b in k_subsets(&free, size) {
                            barrier_sets.push(IndexSet::new(b).expect("sorted"));
                        }
                    }
                    for b in barrier_sets {
                        families.push((x, y, w.clone(), b));
                    }
                }
            }
        }
    }
    run_all_flat(families, |(x, y, w, b)| {
        let mut reports = Vec::new();
        // reference configuration per intersection class
        let mut refs: Vec<(IndexSet, IndexSet, IndexSet)> = Vec::new();
        for (u, d) in splits(w) {
            let inter = u.intersection(&d);
            let reference = match refs.iter().find(|(i, _, _)| *i == inter) {
                Some((_, ru, rd)) => (ru.clone(), rd.clone()),
                None => {
                    refs.push((inter, u.clone(), d.clone()));
                    (u.clone(), d.clone())
                }
            };
            match check_shuffle_cs(*x, *y, &u, &d, b, &reference.0, &reference.1, mutation) {
                Ok(report) => reports.push(report),
                // center blocked or similar: not in hypothesis
                Err(CheckError::Build(_)) | Err(CheckError::Formula(_)) => {}
                Err(e) => panic!("unexpected sweep error: {e}"),
            }
        }
        reports
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridSmall {
    pub max_axis: u32,
}

impl Default for GridSmall {
    fn default() -> Self {
        GridSmall { max_axis: 10 }
    }
}

/// Condensation identity over every centrally symmetric region in the grid
/// that admits a vertex choice; spans the four position-1 cases and both
/// center parities.
pub fn sweep_kuo(grid: &GridSmall) -> Vec<CheckReport> {
    let mut items = Vec::new();
    for b_size in 0..=1u32 {
        for x in (2 * b_size + 2)..=grid.max_axis {
            for y in 2..=grid.max_axis.saturating_sub(x) {
                for n in 1..=(grid.max_axis - x - y) / 2 {
                    let axis = x + y + 2 * n;
                    for w in cs_position_sets(axis, n) {
                        let mut barrier_sets = vec![IndexSet::empty()];
                        if b_size == 1 {
                            barrier_sets.clear();
                            let free: Vec<u32> = (1..=axis / 2)
                                .filter(|p| !w.contains(p) && !w.contains(&(axis + 1 - p)))
                                .collect();
                            for b in k_subsets(&free, 1) {
                                barrier_sets.push(IndexSet::new(b).expect("sorted"));
                            }
                        }
                        for (u, d) in splits(&w) {
                            for b in &barrier_sets {
                                items.push((x, y, u.clone(), d.clone(), b.clone()));
                            }
                        }
                    }
                }
            }
        }
    }
    run_all(items, |(x, y, u, d, b)| {
        let region = build_cs(*x, *y, u, d, b).ok()?;
        let case = KuoCase::of(u.contains(1), d.contains(1));
        let verts = choose_kuo_vertices(&region, case).ok()?;
        Some(check_kuo(&region, &verts).expect("valid vertices"))
    })
}

/// All four base-case bijections on every in-hypothesis instance within the
/// axis bound.
pub fn sweep_base_cases(grid: &GridSmall) -> Vec<CheckReport> {
    let mut items: Vec<(BaseCaseKind, u32, u32, IndexSet, IndexSet, IndexSet)> = Vec::new();
    let mut push_family =
        |kind: BaseCaseKind, x: u32, y: u32, b_size: u32, items: &mut Vec<_>| {
            if x + y > grid.max_axis {
                return;
            }
            for n in 0..=(grid.max_axis - x - y) / 2 {
                let axis = x + y + 2 * n;
                for w in cs_position_sets(axis, n) {
                    let free: Vec<u32> = (1..=axis / 2)
                        .filter(|p| !w.contains(p) && !w.contains(&(axis + 1 - p)))
                        .collect();
                    for b in k_subsets(&free, b_size as usize) {
                        let b = IndexSet::new(b).expect("sorted");
                        for (u, d) in splits(&w) {
                            items.push((kind, x, y, u.clone(), d.clone(), b.clone()));
                        }
                    }
                }
            }
        };
    for b_size in 0..=1u32 {
        for x in 0..=grid.max_axis {
            if 2 * b_size <= x {
                push_family(BaseCaseKind::Y0, x, 0, b_size, &mut items);
            }
        }
        for y in 0..=grid.max_axis {
            push_family(BaseCaseKind::X2b, 2 * b_size, y, b_size, &mut items);
        }
        for x in (0..=grid.max_axis).step_by(2) {
            if 2 * b_size <= x {
                push_family(BaseCaseKind::Y1, x, 1, b_size, &mut items);
            }
        }
        for y in (0..=grid.max_axis).step_by(2) {
            push_family(BaseCaseKind::X2b1, 2 * b_size + 1, y, b_size, &mut items);
        }
    }
    run_all(items, |(kind, x, y, u, d, b)| {
        match check_base_case(*kind, *x, *y, u, d, b) {
            Ok(report) => Some(report),
            Err(CheckError::Build(_)) => None,
            Err(e) => panic!("unexpected base-case error: {e}"),
        }
    })
}

/// The three labelled recurrences on every in-hypothesis instance (even
/// x + y) within the axis bound.
pub fn sweep_recurrences(grid: &GridSmall) -> Vec<CheckReport> {
    let mut items = Vec::new();
    for b_size in 0..=1u32 {
        for x in (2 * b_size + 2)..=grid.max_axis {
            for y in 2..=grid.max_axis.saturating_sub(x) {
                if (x + y) % 2 != 0 {
                    continue;
                }
                for n in 1..=(grid.max_axis - x - y) / 2 {
                    let axis = x + y + 2 * n;
                    for w in cs_position_sets(axis, n) {
                        let mut barrier_sets = vec![IndexSet::empty()];
                        if b_size == 1 {
                            barrier_sets.clear();
                            // barriers shift left in the derived regions
                            let free: Vec<u32> = (2..=axis / 2)
                                .filter(|p| !w.contains(p) && !w.contains(&(axis + 1 - p)))
                                .collect();
                            for b in k_subsets(&free, 1) {
                                barrier_sets.push(IndexSet::new(b).expect("sorted"));
                            }
                        }
                        for (u, d) in splits(&w) {
                            let case = match (u.contains(1), d.contains(1)) {
                                (true, false) => RecurrenceCase::One,
                                (false, false) => RecurrenceCase::Two,
                                (true, true) => RecurrenceCase::Three,
                                // handled by the rotation of case One
                                (false, true) => continue,
                            };
                            for b in &barrier_sets {
                                items.push((case, x, y, u.clone(), d.clone(), b.clone()));
                            }
                        }
                    }
                }
            }
        }
    }
    run_all(items, |(case, x, y, u, d, b)| {
        match check_recurrence(*case, *x, *y, u, d, b) {
            Ok(report) => Some(report),
            Err(CheckError::Build(_)) => None,
            Err(e) => panic!("unexpected recurrence error: {e}"),
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FernGrid {
    pub total_max: u32,
    pub x_max: u32,
    pub y_max: u32,
}

impl Default for FernGrid {
    fn default() -> Self {
        FernGrid {
            total_max: 3,
            x_max: 4,
            y_max: 4,
        }
    }
}

/// All fern shapes of the given total length (compositions into positive
/// parts, both starting orientations), or just the empty fern for total 0.
fn fern_shapes(total: u32, up_only: bool) -> Vec<Fern> {
    if total == 0 {
        return vec![Fern::empty()];
    }
    let mut comps = Vec::new();
    let mut stack = vec![(Vec::<u32>::new(), total)];
    while let Some((prefix, rem)) = stack.pop() {
        if rem == 0 {
            comps.push(prefix);
            continue;
        }
        for part in 1..=rem {
            let mut next = prefix.clone();
            next.push(part);
            stack.push((next, rem - part));
        }
    }
    comps.sort();
    let mut out = Vec::new();
    for c in comps {
        out.push(Fern::new(c.clone(), Orientation::Up));
        if !up_only {
            out.push(Fern::new(c, Orientation::Down));
        }
    }
    out
}

/// Positive compositions of `total` into exactly `parts` parts.
fn gap_compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    let mut stack = vec![(Vec::<u32>::new(), total)];
    while let Some((prefix, rem)) = stack.pop() {
        if prefix.len() + 1 == parts {
            if rem >= 1 {
                let mut full = prefix;
                full.push(rem);
                out.push(full);
            }
            continue;
        }
        for part in 1..rem {
            let mut next = prefix.clone();
            next.push(part);
            stack.push((next, rem - part));
        }
    }
    out.sort();
    out
}

/// Fern-level shuffling sweeps (theorems on R, E and E' regions).
pub fn sweep_fern_shuffle(which: u32, grid: &FernGrid) -> Vec<CheckReport> {
    assert!(matches!(which, 21 | 22 | 23));
    let mut items = Vec::new();
    for x in 0..=grid.x_max {
        for y in 0..=grid.y_max {
            match which {
                21 => {
                    // two ferns, one separating gap equal to x + y
                    if x + y < 1 {
                        continue;
                    }
                    for t1 in 0..=grid.total_max {
                        for t2 in 0..=(grid.total_max - t1) {
                            let shapes1 = fern_shapes(t1, false);
                            let shapes2 = fern_shapes(t2, false);
                            for f1 in &shapes1 {
                                for f1b in &shapes1 {
                                    for f2 in &shapes2 {
                                        for f2b in &shapes2 {
                                            items.push((
                                                x,
                                                y,
                                                vec![f1.clone(), f2.clone()],
                                                vec![f1b.clone(), f2b.clone()],
                                                vec![x + y],
                                            ));
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
                22 | 23 => {
                    let parity_ok = if which == 22 {
                        (x + y) % 2 == 0
                    } else {
                        (x + y) % 2 == 1
                    };
                    if !parity_ok {
                        continue;
                    }
                    let half = if which == 22 { (x + y) / 2 } else { (x + y - 1) / 2 };
                    for t1 in 0..=grid.total_max {
                        for t2 in 0..=(grid.total_max - t1) {
                            let shapes1 = fern_shapes(t1, false);
                            let shapes2 = fern_shapes(t2, false);
                            for f1 in &shapes1 {
                                for f1b in &shapes1 {
                                    for f2 in &shapes2 {
                                        for f2b in &shapes2 {
                                            items.push((
                                                x,
                                                y,
                                                vec![f1.clone(), f2.clone()],
                                                vec![f1b.clone(), f2b.clone()],
                                                vec![half],
                                            ));
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
                _ => unreachable!(),
            }
        }
    }
    run_all(items, move |(x, y, ferns, ferns2, gaps)| {
        let check = match which {
            21 => FernCheck::Shuffle21 {
                x: *x,
                y: *y,
                ferns: ferns.clone(),
                ferns2: ferns2.clone(),
                gaps: gaps.clone(),
            },
            22 => FernCheck::Shuffle22 {
                x: *x,
                y: *y,
                ferns: ferns.clone(),
                ferns2: ferns2.clone(),
                gaps: gaps.clone(),
            },
            _ => FernCheck::Shuffle23 {
                x: *x,
                y: *y,
                ferns: ferns.clone(),
                ferns2: ferns2.clone(),
                gaps: gaps.clone(),
            },
        };
        match check_fern_theorem(&check) {
            Ok(report) => Some(report),
            Err(CheckError::Build(_)) => None,
            Err(e) => panic!("unexpected fern sweep error: {e}"),
        }
    })
}

/// Closed-form sweeps for the two-fern symmetric counts; fern shapes start
/// up-pointing as the closed forms require.
pub fn sweep_fern_closed(which: u32, grid: &FernGrid) -> Vec<CheckReport> {
    assert!(matches!(which, 24 | 25));
    let mut items = Vec::new();
    for x in 0..=grid.x_max {
        for y in 0..=grid.y_max {
            let parity_ok = if which == 24 {
                x % 2 == 0 && y % 2 == 0
            } else {
                (x + y) % 2 == 1
            };
            if !parity_ok || (which == 25 && x + y < 1) {
                continue;
            }
            for t1 in 0..=grid.total_max {
                for t2 in 0..=(grid.total_max - t1) {
                    for f1 in fern_shapes(t1, true) {
                        for f2 in fern_shapes(t2, true) {
                            items.push((x, y, f1.clone(), f2));
                        }
                    }
                }
            }
        }
    }
    run_all(items, move |(x, y, f1, f2)| {
        let check = if which == 24 {
            FernCheck::Closed24 {
                x: *x,
                y: *y,
                f1: f1.clone(),
                f2: f2.clone(),
            }
        } else {
            FernCheck::Closed25 {
                x: *x,
                y: *y,
                f1: f1.clone(),
                f2: f2.clone(),
            }
        };
        match check_fern_theorem(&check) {
            Ok(report) => Some(report),
            Err(CheckError::Build(_)) => None,
            Err(e) => panic!("unexpected fern sweep error: {e}"),
        }
    })
}

/// A sweep description as read from a grid file: the theorem tag picks the
/// family, the remaining keys its bounds.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "theorem")]
pub enum SweepGrid {
    #[serde(rename = "1.1")]
    ShuffleH(GridH),
    #[serde(rename = "1.2")]
    ShuffleCs(GridCs),
    #[serde(rename = "kuo")]
    Kuo(GridSmall),
    #[serde(rename = "base")]
    Base(GridSmall),
    #[serde(rename = "recurrence")]
    Recurrence(GridSmall),
    #[serde(rename = "2.1")]
    Fern21(FernGrid),
    #[serde(rename = "2.2")]
    Fern22(FernGrid),
    #[serde(rename = "2.3")]
    Fern23(FernGrid),
    #[serde(rename = "2.4")]
    Fern24(FernGrid),
    #[serde(rename = "2.5")]
    Fern25(FernGrid),
}

impl SweepGrid {
    pub fn run(&self, mutation: Option<Mutation>) -> Vec<CheckReport> {
        match self {
            SweepGrid::ShuffleH(g) => sweep_shuffle_h(g, mutation),
            SweepGrid::ShuffleCs(g) => sweep_shuffle_cs(g, mutation),
            SweepGrid::Kuo(g) => sweep_kuo(g),
            SweepGrid::Base(g) => sweep_base_cases(g),
            SweepGrid::Recurrence(g) => sweep_recurrences(g),
            SweepGrid::Fern21(g) => sweep_fern_shuffle(21, g),
            SweepGrid::Fern22(g) => sweep_fern_shuffle(22, g),
            SweepGrid::Fern23(g) => sweep_fern_shuffle(23, g),
            SweepGrid::Fern24(g) => sweep_fern_closed(24, g),
            SweepGrid::Fern25(g) => sweep_fern_closed(25, g),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::Status;

    #[test]
    fn tiny_cs_sweep_passes() {
        let reports = sweep_shuffle_cs(
            &GridCs {
                max_axis: 6,
                b_max: 0,
            },
            None,
        );
        assert!(!reports.is_empty());
        assert!(reports.iter().all(|r| r.passed()), "{:?}", reports
            .iter()
            .find(|r| !r.passed()));
    }

    #[test]
    fn empty_grid_is_empty() {
        let reports = sweep_kuo(&GridSmall { max_axis: 3 });
        assert!(reports.is_empty());
    }

    #[test]
    fn grid_file_round_trip() {
        let js = r#"{"theorem":"1.2","max_axis":8,"b_max":0}"#;
        let grid: SweepGrid = serde_json::from_str(js).unwrap();
        assert_eq!(
            grid,
            SweepGrid::ShuffleCs(GridCs {
                max_axis: 8,
                b_max: 0
            })
        );
    }

    #[test]
    fn mutation_breaks_a_tiny_sweep() {
        let honest = sweep_shuffle_h(
            &GridH {
                x_max: 1,
                y_max: 1,
                n_max: 2,
                b_max: 0,
            },
            None,
        );
        assert!(honest.iter().all(|r| r.passed()));
        let mutated = sweep_shuffle_h(
            &GridH {
                x_max: 1,
                y_max: 1,
                n_max: 2,
                b_max: 0,
            },
            Some(Mutation::PpYShift),
        );
        assert!(mutated.iter().any(|r| r.status == Status::Fail));
    }
}
