//! Per-cell distance guarantees `(∂(w,u), ∂(v,w))`, each linear in g*.

use serde::Serialize;

use crate::partition::Cell;

/// `k·g* + c`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lin {
    pub k: u32,
    pub c: i32,
}

impl Lin {
    pub const fn new(k: u32, c: i32) -> Self {
        Lin { k, c }
    }

    pub fn at(self, gstar: u32) -> u32 {
        let v = (self.k * gstar) as i64 + self.c as i64;
        v.max(0) as u32
    }
}

/// Allowed `∂(w,u)` and `∂(v,w)` for the members of one cell.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundRow {
    pub to_u: Lin,
    pub from_v: Lin,
}

const fn row(k1: u32, c1: i32, k2: u32, c2: i32) -> BoundRow {
    BoundRow { to_u: Lin::new(k1, c1), from_v: Lin::new(k2, c2) }
}

/// Constant row.
const fn cst(a: i32, b: i32) -> BoundRow {
    row(0, a, 0, b)
}

/// Bound on the directed diameter of the final orientation.
pub fn diameter_bound(gstar: u32) -> u32 {
    gstar + 13
}

/// Row for a cell, `None` where no guarantee exists. Coarse cells carry the
/// summary rows; leaf cells the sharper ones.
pub fn bound_row(cell: Cell) -> Option<BoundRow> {
    use Cell::*;
    let r = match cell {
        U => row(0, 0, 1, -1),
        V => row(1, -1, 0, 0),
        S22 => cst(2, 2),

        A => row(1, -1, 1, 3),
        B => row(0, 9, 1, -1),
        Ap => row(0, 2, 1, 1),
        Bp => row(1, 1, 0, 2),
        I => row(1, 0, 0, 9),
        J => cst(8, 2),
        Ip => row(1, 2, 1, 5),
        Jp => row(0, 11, 1, 1),
        K => cst(3, 5),
        L => cst(7, 4),
        Kp => row(1, 2, 0, 9),
        Lp => cst(7, 4),
        X | Xp => row(1, 1, 0, 6),
        M => row(1, 2, 0, 7),
        Mp => row(1, 3, 0, 8),

        A1 => cst(1, 2),
        A2 | A3 => cst(1, 3),
        A4 => cst(1, 4),
        A5 | A6 => cst(1, 5),
        A7 => cst(1, 6),
        A8 => cst(1, 7),
        A91 => cst(1, 6),
        A92 => cst(1, 7),
        A93 => row(0, 1, 1, 3),
        A94 => row(1, -1, 2, -2),
        A95 => row(0, 2, 1, 1),
        Ap1 | Ap2 | Ap3 => row(0, 2, 1, 1),

        B1 => cst(2, 1),
        B2 | B3 => cst(3, 1),
        B4 => cst(4, 1),
        B5 | B6 => cst(5, 1),
        B7 => cst(6, 1),
        B8 => cst(9, 1),
        B9 => cst(8, 1),
        B10a => row(2, -2, 1, -1),
        B10b => row(1, 1, 0, 2),
        Bp1 | Bp2 | Bp3 => row(1, 1, 0, 2),

        I1 => cst(2, 3),
        I2 | I3 => cst(2, 4),
        I4 => cst(2, 5),
        I5 => cst(2, 6),
        I61a => cst(3, 4),
        I61ba => row(1, 0, 0, 4),
        I61bb => row(0, 2, 1, 2),
        I61c => cst(3, 5),
        I62a => cst(2, 5),
        I62b => row(0, 2, 1, 2),
        I62ca => row(1, -2, 2, -3),
        I62cb => row(1, 0, 1, 3),
        I62cc => row(1, 0, 0, 9),

        Ip1 => cst(2, 5),
        Ip2 => cst(2, 6),
        Ip3 => row(1, -2, 2, -3),
        Ip41 | Ip51 => row(1, 1, 0, 6),
        Ip42 => row(1, 0, 1, 3),
        Ip52 => row(1, 1, 1, 4),
        Ip61 => row(1, 2, 0, 6),
        Ip62 => row(1, 2, 1, 4),
        Ip71 | Ip72 | Ip73 => row(1, 1, 0, 6),
        Ip81 | Ip82 | Ip83 => row(1, 1, 1, 5),

        J1 => cst(3, 2),
        J2 | J3 => cst(4, 2),
        J4 => cst(5, 2),
        J5 => cst(8, 2),
        J6 => cst(7, 2),
        Jp1 => row(2, -3, 1, -2),
        Jp2 => row(0, 5, 1, 0),
        Jp31 => cst(6, 3),
        Jp32 => row(0, 9, 1, 0),
        Jp41 => row(0, 6, 1, 1),
        Jp42 => row(0, 10, 1, 0),
        Jp51 | Jp52 | Jp53 => row(0, 7, 1, 1),
        Jp61 | Jp62 | Jp63 => row(0, 11, 1, 1),

        X0 | XMulti | XJ | XI => cst(3, 3),
        XKM => cst(5, 3),
        XL => cst(3, 5),
        Xp1 => cst(5, 3),
        Xp2 | Xp3 => cst(3, 6),
        Xp4 => row(1, 1, 1, 1),
        Xp5 => cst(4, 4),

        K1 => cst(3, 4),
        K2 | K3 => cst(3, 5),
        Kp1 => row(1, -1, 1, 1),
        Kp21 | Kp22 | Kp23 => row(1, 2, 0, 8),
        Kp3 => row(1, 1, 0, 8),
        Kp4 => row(1, 1, 0, 6),
        Kp5 => row(1, 1, 1, 3),
        Kp6 => cst(5, 8),
        Kp7 => row(1, 2, 0, 8),
        Kp81 | Kp82 | Kp83 => row(1, 2, 1, 4),
        Kp91 | Kp92 | Kp93 => row(1, 2, 0, 9),

        L1 => cst(4, 3),
        L2 => cst(5, 3),
        L3 => cst(4, 4),
        L4 => cst(7, 3),
        Lp11 | Lp12 | Lp13 | Lp2 | Lp3 | Lp41 | Lp42 | Lp43 => cst(6, 4),
        Lp51 | Lp52 | Lp53 => cst(6, 4),
        Lp54 => cst(7, 4),

        M1 => cst(4, 4),
        M2 => cst(6, 5),
        M31 => row(1, 0, 1, 0),
        M32 => row(1, 2, 0, 7),
        Mp1 => row(1, 0, 1, 0),
        Mp21 | Mp22 | Mp23 => row(1, 3, 0, 8),
        _ => return None,
    };
    Some(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn leaf_rows_fit_under_coarse_rows() {
        for &c in Cell::ALL {
            if !c.children().is_empty() {
                continue;
            }
            let (Some(leaf), Some(top)) = (bound_row(c), bound_row(c.root())) else {
                continue;
            };
            for g in [4, 5] {
                assert!(leaf.to_u.at(g) <= top.to_u.at(g), "{c} to_u at g={g}");
                assert!(leaf.from_v.at(g) <= top.from_v.at(g), "{c} from_v at g={g}");
            }
        }
    }

    #[test]
    fn every_row_fits_the_diameter_bound() {
        for &c in Cell::ALL {
            if let Some(r) = bound_row(c) {
                for g in [4, 5] {
                    // ∂(x,y) <= ∂(x,u) + ∂(u,v) + ∂(v,y) with ∂(u,v) = 1
                    assert!(r.to_u.at(g) + 1 + r.from_v.at(g) <= 2 * diameter_bound(g));
                }
            }
        }
    }

    #[test]
    fn only_k10_lacks_a_leaf_row() {
        let missing: Vec<Cell> = Cell::ALL
            .iter()
            .copied()
            .filter(|c| c.children().is_empty() && bound_row(*c).is_none())
            .collect();
        assert_eq!(missing, vec![Cell::Kp10]);
    }
}
