//! Exact counting and enumeration of tilings, i.e. perfect matchings of the
//! region's dual graph.
//!
//! Counting runs two independent engines: a left-to-right frontier DP (the
//! default; handles desk-scale regions with large counts) and a
//! fewest-choices backtracking search (the cross-check oracle, cost
//! proportional to the count itself). Centrally symmetric tilings are
//! counted by searching over orbits of tiles under the rotation; filtering
//! the full enumeration is kept as the test oracle.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::cell::{Cell, Lozenge, SigmaCenter};
use crate::region::Region;

pub type BigCount = BigUint;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum CountError {
    #[error("region carries no symmetry map")]
    MissingSigma,
    #[error("deleted cell {0:?} is not in the region")]
    DeletionOutsideRegion(Cell),
    #[error("deleted cell set is not closed under the symmetry")]
    DeletionNotSymmetric,
}

/// A set of lozenges exactly covering the region.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Tiling {
    pub lozenges: BTreeSet<Lozenge>,
}

impl Tiling {
    pub fn is_cs(&self, sigma: &SigmaCenter) -> bool {
        self.lozenges.iter().all(|l| self.lozenges.contains(&l.image(sigma)))
    }
}

/// True iff the tiling is invariant under the rotation.
pub fn is_cs_tiling(tiling: &Tiling, sigma: &SigmaCenter) -> bool {
    tiling.is_cs(sigma)
}

struct Graph {
    cells: Vec<Cell>,
    adj: Vec<Vec<u32>>,
    sigma: Option<Vec<u32>>,
}

impl Graph {
    fn new(region: &Region) -> Graph {
        let mut cells: Vec<Cell> = region.cells().iter().copied().collect();
        cells.sort_by_key(|c| (c.scan_col(), c.row, c.up));
        let index: HashMap<Cell, u32> = cells
            .iter()
            .enumerate()
            .map(|(i, &c)| (c, i as u32))
            .collect();
        let adj: Vec<Vec<u32>> = cells
            .iter()
            .map(|c| {
                let mut nb: Vec<u32> = c
                    .neighbors()
                    .into_iter()
                    .filter(|n| index.contains_key(n) && !region.edge_barred(c, n))
                    .map(|n| index[&n])
                    .collect();
                nb.sort_unstable();
                nb
            })
            .collect();
        let sigma = region.sigma().map(|s| {
            cells
                .iter()
                .map(|&c| {
                    let img = s.apply(c);
                    *index.get(&img).expect("sigma image inside region")
                })
                .collect()
        });
        Graph { cells, adj, sigma }
    }

    fn balanced(&self) -> bool {
        let ups = self.cells.iter().filter(|c| c.up).count();
        2 * ups == self.cells.len()
    }

}

/// Frontier DP over cells in scan order. State: the set of already-visited
/// cells still waiting for a later partner. Matchings are counted once each
/// because every tile is committed when its rightmost cell is visited.
fn count_dp(g: &Graph) -> BigUint {
    let n = g.cells.len();
    if n == 0 {
        return BigUint::one();
    }
    if n % 2 == 1 || !g.balanced() {
        return BigUint::zero();
    }
    matchings_frontier(&g.adj, &vec![false; n])
}

/// Count the coverings of a vertex list by chosen edges plus self-covers:
/// every vertex is either matched to a neighbour or, where `self_cover`
/// allows it, covered alone. With `self_cover` all false this is the
/// perfect-matching count.
fn matchings_frontier(adj: &[Vec<u32>], self_cover: &[bool]) -> BigUint {
    let span = adj
        .iter()
        .enumerate()
        .flat_map(|(i, nb)| nb.iter().map(move |&j| (j as usize).abs_diff(i)))
        .max()
        .unwrap_or(0);
    if span <= 60 {
        match matchings_masked_u128(adj, self_cover) {
            Some(n) => BigUint::from(n),
            None => matchings_masked(adj, self_cover),
        }
    } else {
        matchings_general(adj, self_cover)
    }
}

/// Allocation-free variant of the masked DP; bails out to the big-integer
/// path on overflow.
fn matchings_masked_u128(adj: &[Vec<u32>], self_cover: &[bool]) -> Option<u128> {
    let n = adj.len();
    if n == 0 {
        return Some(1);
    }
    let last_nb = last_neighbor_of(adj);
    let mut base = 0usize;
    let mut states: HashMap<u64, u128> = HashMap::new();
    states.insert(0, 1);
    for i in 0..n {
        let new_base = i.saturating_sub(60);
        if new_base > base {
            let shift = new_base - base;
            let mut shifted = HashMap::with_capacity(states.len());
            for (mask, cnt) in states {
                if mask & ((1u64 << shift) - 1) == 0 {
                    let slot = shifted.entry(mask >> shift).or_insert(0u128);
                    *slot = slot.checked_add(cnt)?;
                }
            }
            states = shifted;
            base = new_base;
        }
        let mut kill = 0u64;
        for j in base..i {
            if last_nb[j] < i {
                kill |= 1u64 << (j - base);
            }
        }
        if kill != 0 {
            states.retain(|mask, _| mask & kill == 0);
        }
        let has_future = adj[i].iter().any(|&j| j as usize > i);
        let bit = 1u64 << (i - base);
        let mut next: HashMap<u64, u128> = HashMap::with_capacity(states.len() * 2);
        for (mask, cnt) in &states {
            for &j in &adj[i] {
                let j = j as usize;
                if j < base || j >= i {
                    continue;
                }
                let jbit = 1u64 << (j - base);
                if mask & jbit != 0 {
                    let slot = next.entry(mask & !jbit).or_insert(0);
                    *slot = slot.checked_add(*cnt)?;
                }
            }
            if has_future {
                let slot = next.entry(mask | bit).or_insert(0);
                *slot = slot.checked_add(*cnt)?;
            }
            if self_cover[i] {
                let slot = next.entry(*mask).or_insert(0);
                *slot = slot.checked_add(*cnt)?;
            }
        }
        states = next;
    }
    Some(states.remove(&0).unwrap_or(0))
}

fn last_neighbor_of(adj: &[Vec<u32>]) -> Vec<usize> {
    adj.iter()
        .map(|nb| nb.last().map_or(0, |&j| j as usize))
        .collect()
}

fn matchings_masked(adj: &[Vec<u32>], self_cover: &[bool]) -> BigUint {
    let n = adj.len();
    if n == 0 {
        return BigUint::one();
    }
    let last_nb = last_neighbor_of(adj);
    let mut base = 0usize;
    let mut states: HashMap<u64, BigUint> = HashMap::new();
    states.insert(0, BigUint::one());
    for i in 0..n {
        // slide the window; open cells falling off can never be matched now
        let new_base = i.saturating_sub(60);
        if new_base > base {
            let shift = new_base - base;
            let mut shifted = HashMap::with_capacity(states.len());
            for (mask, cnt) in states {
                if mask & ((1u64 << shift) - 1) == 0 {
                    *shifted.entry(mask >> shift).or_insert_with(BigUint::zero) += cnt;
                }
            }
            states = shifted;
            base = new_base;
        }
        // states holding a cell with no neighbour left to match it are dead
        let mut kill = 0u64;
        for j in base..i {
            if last_nb[j] < i {
                kill |= 1u64 << (j - base);
            }
        }
        if kill != 0 {
            states.retain(|mask, _| mask & kill == 0);
        }
        let has_future = adj[i].iter().any(|&j| j as usize > i);
        let bit = 1u64 << (i - base);
        let mut next: HashMap<u64, BigUint> = HashMap::with_capacity(states.len() * 2);
        for (mask, cnt) in &states {
            for &j in &adj[i] {
                let j = j as usize;
                if j < base || j >= i {
                    continue;
                }
                let jbit = 1u64 << (j - base);
                if mask & jbit != 0 {
                    *next.entry(mask & !jbit).or_insert_with(BigUint::zero) += cnt;
                }
            }
            if has_future {
                *next.entry(mask | bit).or_insert_with(BigUint::zero) += cnt;
            }
            if self_cover[i] {
                *next.entry(*mask).or_insert_with(BigUint::zero) += cnt;
            }
        }
        states = next;
    }
    states.remove(&0).unwrap_or_else(BigUint::zero)
}

fn matchings_general(adj: &[Vec<u32>], self_cover: &[bool]) -> BigUint {
    let n = adj.len();
    let last_nb = last_neighbor_of(adj);
    let mut states: HashMap<Vec<u32>, BigUint> = HashMap::new();
    states.insert(Vec::new(), BigUint::one());
    for i in 0..n {
        states.retain(|open, _| open.iter().all(|&j| last_nb[j as usize] >= i));
        let has_future = adj[i].iter().any(|&j| j as usize > i);
        let mut next: HashMap<Vec<u32>, BigUint> = HashMap::with_capacity(states.len() * 2);
        for (open, cnt) in &states {
            for &j in &adj[i] {
                if (j as usize) < i {
                    if let Ok(k) = open.binary_search(&j) {
                        let mut reduced = open.clone();
                        reduced.remove(k);
                        *next.entry(reduced).or_insert_with(BigUint::zero) += cnt;
                    }
                }
            }
            if has_future {
                let mut grown = open.clone();
                grown.push(i as u32);
                *next.entry(grown).or_insert_with(BigUint::zero) += cnt;
            }
            if self_cover[i] {
                *next.entry(open.clone()).or_insert_with(BigUint::zero) += cnt;
            }
        }
        states = next;
    }
    states.remove(&Vec::new()).unwrap_or_else(BigUint::zero)
}

/// Quotient of the dual graph by the rotation: one vertex per cell orbit,
/// one edge per tile orbit. The self-paired central vertical tile (present
/// only over a mid-edge center) shows up as a self-cover option on its
/// orbit. Symmetric tilings correspond exactly to coverings of this graph.
fn quotient_graph(g: &Graph, sigma: &[u32]) -> (Vec<Vec<u32>>, Vec<bool>) {
    let n = g.cells.len();
    let mut orbit_of = vec![u32::MAX; n];
    let mut reps = Vec::new();
    for i in 0..n {
        if i <= sigma[i] as usize {
            orbit_of[i] = reps.len() as u32;
            orbit_of[sigma[i] as usize] = reps.len() as u32;
            reps.push(i);
        }
    }
    let m = reps.len();
    let mut adj: Vec<Vec<u32>> = vec![Vec::new(); m];
    let mut self_cover = vec![false; m];
    let mut seen: std::collections::HashSet<(u32, u32)> = std::collections::HashSet::new();
    for i in 0..n {
        for &j in &g.adj[i] {
            let j = j as usize;
            if j < i {
                continue;
            }
            let (oi, oj) = (orbit_of[i], orbit_of[j]);
            if oi == oj {
                // the two cells of one orbit are adjacent: central vertical
                self_cover[oi as usize] = true;
            } else if seen.insert((oi.min(oj), oi.max(oj))) {
                adj[oi as usize].push(oj);
                adj[oj as usize].push(oi);
            }
        }
    }
    for nb in &mut adj {
        nb.sort_unstable();
    }
    (adj, self_cover)
}

/// Pick the uncovered cell with the fewest uncovered partners.
fn pick_cell(g: &Graph, covered: &[bool]) -> Option<(usize, Vec<usize>)> {
    let mut best: Option<(usize, Vec<usize>)> = None;
    for i in 0..g.cells.len() {
        if covered[i] {
            continue;
        }
        let opts: Vec<usize> = g.adj[i]
            .iter()
            .map(|&j| j as usize)
            .filter(|&j| !covered[j])
            .collect();
        let better = match &best {
            None => true,
            Some((_, b)) => opts.len() < b.len(),
        };
        if better {
            let empty = opts.is_empty();
            best = Some((i, opts));
            if empty {
                break;
            }
        }
    }
    best
}

fn count_backtrack_rec(g: &Graph, covered: &mut [bool], remaining: usize) -> BigUint {
    if remaining == 0 {
        return BigUint::one();
    }
    let Some((i, opts)) = pick_cell(g, covered) else {
        return BigUint::zero();
    };
    let mut total = BigUint::zero();
    for j in opts {
        covered[i] = true;
        covered[j] = true;
        total += count_backtrack_rec(g, covered, remaining - 2);
        covered[i] = false;
        covered[j] = false;
    }
    total
}

fn count_cs_rec(g: &Graph, sigma: &[u32], covered: &mut [bool], remaining: usize) -> BigUint {
    if remaining == 0 {
        return BigUint::one();
    }
    let Some((i, opts)) = pick_cell(g, covered) else {
        return BigUint::zero();
    };
    let mut total = BigUint::zero();
    for j in opts {
        let (si, sj) = (sigma[i] as usize, sigma[j] as usize);
        if si == j {
            // the tile is its own image: the central vertical lozenge
            covered[i] = true;
            covered[j] = true;
            total += count_cs_rec(g, sigma, covered, remaining - 2);
            covered[i] = false;
            covered[j] = false;
        } else if !covered[si] && !covered[sj] && si != i && si != j && sj != i && sj != j {
            for k in [i, j, si, sj] {
                covered[k] = true;
            }
            total += count_cs_rec(g, sigma, covered, remaining - 4);
            for k in [i, j, si, sj] {
                covered[k] = false;
            }
        }
    }
    total
}

type CacheKey = (Vec<Cell>, Vec<u32>);

fn m_cache() -> &'static Mutex<HashMap<CacheKey, BigUint>> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, BigUint>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn mc_cache() -> &'static Mutex<HashMap<(CacheKey, (i32, i32)), BigUint>> {
    static CACHE: OnceLock<Mutex<HashMap<(CacheKey, (i32, i32)), BigUint>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Exact number of tilings; 1 for the empty region. Memoized per cell set.
pub fn count_tilings(region: &Region) -> BigCount {
    if region.is_untileable() {
        return BigUint::zero();
    }
    let key = region.count_key();
    if let Some(hit) = m_cache().lock().unwrap().get(&key) {
        return hit.clone();
    }
    let result = count_dp(&Graph::new(region));
    m_cache()
        .lock()
        .unwrap()
        .insert(key, result.clone());
    result
}

/// The independent counting strategy: plain backtracking, no memoization.
/// Work grows with the count itself, so keep it for desk-scale regions.
pub fn count_tilings_backtrack(region: &Region) -> BigCount {
    if region.is_untileable() {
        return BigUint::zero();
    }
    let g = Graph::new(region);
    if g.cells.len() % 2 == 1 || !g.balanced() {
        return BigUint::zero();
    }
    let mut covered = vec![false; g.cells.len()];
    let n = g.cells.len();
    count_backtrack_rec(&g, &mut covered, n)
}

/// Exact number of tilings invariant under the region's rotation: the
/// search space is the quotient of the dual graph by the rotation, whose
/// coverings (matchings plus the optional self-paired central vertical
/// tile) are exactly the symmetric tilings.
pub fn count_cs_tilings(region: &Region) -> Result<BigCount, CountError> {
    let sigma = *region.sigma().ok_or(CountError::MissingSigma)?;
    if region.is_untileable() {
        return Ok(BigUint::zero());
    }
    let key = (region.count_key(), (sigma.row_sum, sigma.pos_sum));
    if let Some(hit) = mc_cache().lock().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let g = Graph::new(region);
    let result = if g.cells.len() % 2 == 1 || !g.balanced() {
        BigUint::zero()
    } else {
        let perm = g.sigma.clone().expect("sigma permutation");
        let (qadj, self_cover) = quotient_graph(&g, &perm);
        matchings_frontier(&qadj, &self_cover)
    };
    mc_cache().lock().unwrap().insert(key, result.clone());
    Ok(result)
}

/// Independent route for the symmetric count: backtracking that places
/// whole orbits of tiles at once. No memoization; cost tracks the count.
pub fn count_cs_tilings_backtrack(region: &Region) -> Result<BigCount, CountError> {
    let _ = region.sigma().ok_or(CountError::MissingSigma)?;
    if region.is_untileable() {
        return Ok(BigUint::zero());
    }
    let g = Graph::new(region);
    if g.cells.len() % 2 == 1 || !g.balanced() {
        return Ok(BigUint::zero());
    }
    let perm = g.sigma.clone().expect("sigma permutation");
    let mut covered = vec![false; g.cells.len()];
    let n = g.cells.len();
    Ok(count_cs_rec(&g, &perm, &mut covered, n))
}

/// Filtering oracle for the symmetric count: enumerate everything, keep the
/// invariant tilings. Only sensible when the full count is small.
pub fn count_cs_tilings_by_filter(region: &Region) -> Result<BigCount, CountError> {
    let sigma = *region.sigma().ok_or(CountError::MissingSigma)?;
    let hits = enumerate_tilings(region)
        .into_iter()
        .filter(|t| t.is_cs(&sigma))
        .count();
    Ok(BigUint::from(hits))
}

fn visit_rec(
    g: &Graph,
    covered: &mut [bool],
    stack: &mut Vec<Lozenge>,
    remaining: usize,
    f: &mut impl FnMut(&Tiling) -> bool,
) -> bool {
    if remaining == 0 {
        let tiling = Tiling {
            lozenges: stack.iter().copied().collect(),
        };
        return f(&tiling);
    }
    let Some((i, opts)) = pick_cell(g, covered) else {
        return true;
    };
    for j in opts {
        covered[i] = true;
        covered[j] = true;
        stack.push(Lozenge::new(g.cells[i], g.cells[j]));
        let keep_going = visit_rec(g, covered, stack, remaining - 2, f);
        stack.pop();
        covered[i] = false;
        covered[j] = false;
        if !keep_going {
            return false;
        }
    }
    true
}

/// Visit every tiling exactly once, in a fixed deterministic order; the
/// callback returns false to stop early.
pub fn visit_tilings(region: &Region, mut f: impl FnMut(&Tiling) -> bool) {
    if region.is_untileable() {
        return;
    }
    let g = Graph::new(region);
    if g.cells.len() % 2 == 1 || !g.balanced() {
        return;
    }
    let mut covered = vec![false; g.cells.len()];
    let mut stack = Vec::new();
    let n = g.cells.len();
    visit_rec(&g, &mut covered, &mut stack, n, &mut f);
}

/// All tilings of the region. Emission count equals `count_tilings`.
pub fn enumerate_tilings(region: &Region) -> Vec<Tiling> {
    let mut out = Vec::new();
    visit_tilings(region, |t| {
        out.push(t.clone());
        true
    });
    out
}

/// The k-th tiling (0-based) in enumeration order, if it exists.
pub fn nth_tiling(region: &Region, k: usize) -> Option<Tiling> {
    let mut seen = 0usize;
    let mut hit = None;
    visit_tilings(region, |t| {
        if seen == k {
            hit = Some(t.clone());
            false
        } else {
            seen += 1;
            true
        }
    });
    hit
}

/// Matching count of the cell-deleted region.
pub fn count_with_deletions(
    region: &Region,
    deleted: &BTreeSet<Cell>,
) -> Result<BigCount, CountError> {
    for c in deleted {
        if !region.cells().contains(c) {
            return Err(CountError::DeletionOutsideRegion(*c));
        }
    }
    let rest = region.without_cells(deleted).expect("subset checked");
    Ok(count_tilings(&rest))
}

/// Symmetric matching count of the cell-deleted region; the deleted set must
/// be closed under the rotation.
pub fn count_cs_with_deletions(
    region: &Region,
    deleted: &BTreeSet<Cell>,
) -> Result<BigCount, CountError> {
    let sigma = *region.sigma().ok_or(CountError::MissingSigma)?;
    for c in deleted {
        if !region.cells().contains(c) {
            return Err(CountError::DeletionOutsideRegion(*c));
        }
        if !deleted.contains(&sigma.apply(*c)) {
            return Err(CountError::DeletionNotSymmetric);
        }
    }
    let rest = region.without_cells(deleted).expect("subset checked");
    debug_assert!(rest.sigma().is_some());
    count_cs_tilings(&rest)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::region::{build_hexagon, build_t, build_h};
    use crate::spec::IndexSet;

    fn idx(v: &[u32]) -> IndexSet {
        IndexSet::new(v.to_vec()).unwrap()
    }

    #[test]
    fn hexagon_counts() {
        let h1 = build_hexagon(1, 1, 1);
        assert_eq!(count_tilings(&h1), BigUint::from(2u32));
        let h2 = build_hexagon(2, 2, 2);
        assert_eq!(count_tilings(&h2), BigUint::from(20u32));
        let empty = build_hexagon(0, 0, 0);
        assert_eq!(count_tilings(&empty), BigUint::one());
    }

    #[test]
    fn cs_counts() {
        let h1 = build_hexagon(1, 1, 1);
        assert_eq!(count_cs_tilings(&h1).unwrap(), BigUint::zero());
        let h2 = build_hexagon(2, 2, 2);
        assert_eq!(count_cs_tilings(&h2).unwrap(), BigUint::from(4u32));
        let empty = build_hexagon(0, 0, 0);
        assert_eq!(count_cs_tilings(&empty).unwrap(), BigUint::one());
        // every symmetric tiling found by filtering is confirmed invariant
        let sigma = *h2.sigma().unwrap();
        let all = enumerate_tilings(&h2);
        assert_eq!(all.len(), 20);
        assert_eq!(all.iter().filter(|t| t.is_cs(&sigma)).count(), 4);
    }

    #[test]
    fn missing_sigma_is_an_error() {
        let t = build_t(1, 2, &idx(&[2])).unwrap();
        assert_eq!(count_cs_tilings(&t), Err(CountError::MissingSigma));
    }

    #[test]
    fn enumerate_matches_count() {
        let t = build_t(2, 1, &idx(&[1, 3])).unwrap();
        assert_eq!(count_tilings(&t), BigUint::from(2u32));
        assert_eq!(enumerate_tilings(&t).len(), 2);
        let forced = build_t(2, 0, &idx(&[1, 2])).unwrap();
        assert_eq!(enumerate_tilings(&forced).len(), 1);
        // unbalanced region: no tilings
        let h1 = build_hexagon(1, 1, 1);
        let bad = h1
            .without_cells(&[Cell::up(0, 1)].into_iter().collect())
            .unwrap();
        assert_eq!(count_tilings(&bad), BigUint::zero());
        assert!(enumerate_tilings(&bad).is_empty());
    }

    #[test]
    fn deletion_counts() {
        let h1 = build_hexagon(1, 1, 1);
        assert_eq!(
            count_with_deletions(&h1, &BTreeSet::new()).unwrap(),
            BigUint::from(2u32)
        );
        // odd leftover cell count
        let one: BTreeSet<Cell> = [Cell::up(0, 1)].into_iter().collect();
        assert_eq!(count_with_deletions(&h1, &one).unwrap(), BigUint::zero());
        assert_eq!(
            count_cs_with_deletions(&h1, &one),
            Err(CountError::DeletionNotSymmetric)
        );
        let pair: BTreeSet<Cell> = [Cell::up(0, 1), Cell::down(-1, 2)].into_iter().collect();
        let cs = count_cs_with_deletions(&h1, &pair).unwrap();
        let plain = count_with_deletions(&h1, &pair).unwrap();
        assert!(cs <= plain);
    }

    #[test]
    fn barriers_block_vertical_tiles() {
        // plain 1,1,1 hexagon has 2 tilings; one uses the vertical tile at
        // position 1, the other the vertical tile at position 2; a barrier
        // at 1 kills exactly one of them
        let free = build_h(1, 1, &IndexSet::empty(), &IndexSet::empty(), &IndexSet::empty())
            .unwrap();
        assert_eq!(count_tilings(&free), BigUint::from(2u32));
        let barred = build_h(1, 1, &IndexSet::empty(), &IndexSet::empty(), &idx(&[1])).unwrap();
        assert_eq!(count_tilings(&barred), BigUint::one());
    }

    #[test]
    fn dual_strategies_agree() {
        let regions = [
            build_hexagon(2, 2, 2),
            build_hexagon(3, 2, 1),
            build_t(2, 1, &idx(&[1, 3])).unwrap(),
            build_h(2, 1, &idx(&[2]), &idx(&[4]), &idx(&[1])).unwrap(),
        ];
        for r in &regions {
            assert_eq!(count_tilings(r), count_tilings_backtrack(r));
        }
    }

    #[test]
    fn rotation_preserves_counts() {
        let h = build_h(2, 1, &idx(&[2, 3]), &idx(&[1]), &idx(&[5])).unwrap();
        assert_eq!(count_tilings(&h), count_tilings(&h.rotated_180()));
    }
}
