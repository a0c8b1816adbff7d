//! Unit triangles of the triangular lattice and their adjacency.
//!
//! Rows of cells are indexed by signed integers with the axis between rows 0
//! and -1: row 0 holds the up-cells whose bases lie on the axis, row -1 the
//! down-cells whose top edges lie on it. Within row `r`, the up-cell `pos`
//! has its base from lattice vertex `(r, pos)` to `(r, pos + 1)`; the
//! down-cell `pos` has its bottom vertex at `(r, pos)`. Left to right a row
//! reads `... D(p) U(p) D(p+1) U(p+1) ...`.

use serde::{Deserialize, Serialize};

/// One unit triangle, addressed by row, position and orientation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub row: i32,
    pub pos: i32,
    pub up: bool,
}

impl Cell {
    pub fn up(row: i32, pos: i32) -> Cell {
        Cell { row, pos, up: true }
    }

    pub fn down(row: i32, pos: i32) -> Cell {
        Cell { row, pos, up: false }
    }

    /// The three edge-neighbours on the infinite lattice.
    ///
    /// An up-cell touches the down-cell to its left, the one to its right and
    /// the one below its base; a down-cell the mirror image of that.
    pub fn neighbors(&self) -> [Cell; 3] {
        if self.up {
            [
                Cell::down(self.row, self.pos),
                Cell::down(self.row, self.pos + 1),
                Cell::down(self.row - 1, self.pos),
            ]
        } else {
            [
                Cell::up(self.row, self.pos),
                Cell::up(self.row, self.pos - 1),
                Cell::up(self.row + 1, self.pos),
            ]
        }
    }

    /// True iff `self` and `other` share an edge (form a lozenge).
    pub fn is_adjacent(&self, other: &Cell) -> bool {
        self.neighbors().contains(other)
    }

    /// Doubled Cartesian x-coordinate of the cell's leftmost point; cells
    /// sorted by this key are swept left to right by the counting DP, and
    /// neighbouring cells always land within one unit of each other.
    pub fn scan_col(&self) -> i32 {
        if self.up {
            2 * self.pos - self.row
        } else {
            2 * self.pos - self.row - 1
        }
    }
}

/// A 180-degree rotation of the lattice, stored as the coordinate sums it
/// preserves: `cell` maps to the opposite-orientation cell at
/// `(row_sum - row, pos_sum - pos)`. Any such map is an involution that
/// preserves adjacency.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SigmaCenter {
    pub row_sum: i32,
    pub pos_sum: i32,
}

impl SigmaCenter {
    /// The rotation about the center of an axis-symmetric region with the
    /// given axis length: position `i` maps to `axis_len + 1 - i` and row `r`
    /// to `-1 - r`.
    pub fn for_axis(axis_len: u32) -> SigmaCenter {
        SigmaCenter {
            row_sum: -1,
            pos_sum: axis_len as i32 + 1,
        }
    }

    pub fn apply(&self, c: Cell) -> Cell {
        Cell {
            row: self.row_sum - c.row,
            pos: self.pos_sum - c.pos,
            up: !c.up,
        }
    }
}

/// An unordered pair of adjacent cells: one tile.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Lozenge(pub Cell, pub Cell);

impl Lozenge {
    /// Canonical form with the smaller cell first.
    pub fn new(a: Cell, b: Cell) -> Lozenge {
        debug_assert!(a.is_adjacent(&b));
        if a <= b {
            Lozenge(a, b)
        } else {
            Lozenge(b, a)
        }
    }

    pub fn image(&self, sigma: &SigmaCenter) -> Lozenge {
        Lozenge::new(sigma.apply(self.0), sigma.apply(self.1))
    }

    /// True for the vertical tile crossing the axis at some position.
    pub fn is_vertical_at_axis(&self) -> bool {
        let (a, b) = (self.0, self.1);
        a.row == -1 && !a.up && b.row == 0 && b.up && a.pos == b.pos
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adjacency_is_symmetric() {
        let c = Cell::up(3, 5);
        for n in c.neighbors() {
            assert!(n.neighbors().contains(&c));
        }
        let c = Cell::down(-2, 4);
        for n in c.neighbors() {
            assert!(n.neighbors().contains(&c));
        }
    }

    #[test]
    fn vertical_pair_at_axis_position() {
        // The up-cell and down-cell at axis position i form the vertical tile.
        let up = Cell::up(0, 7);
        let down = Cell::down(-1, 7);
        assert!(up.is_adjacent(&down));
        assert!(Lozenge::new(up, down).is_vertical_at_axis());
        assert!(!Lozenge::new(up, Cell::down(0, 7)).is_vertical_at_axis());
    }

    #[test]
    fn sigma_is_an_adjacency_preserving_involution() {
        let s = SigmaCenter::for_axis(6);
        let c = Cell::up(2, 4);
        assert_eq!(s.apply(s.apply(c)), c);
        assert_eq!(s.apply(Cell::up(0, 2)), Cell::down(-1, 5));
        for n in c.neighbors() {
            assert!(s.apply(c).is_adjacent(&s.apply(n)));
        }
    }
}
