//! Exact hexagonal-grid geometry: Eisenstein coordinates, cells, benzels,
//! the five prototiles, symmetries, and the proper 3-coloring.
//!
//! Every quantity here is an exact integer. A point `a + b*w` (with
//! `w = e^{2*pi*i/3}`) is stored as the pair `(a, b)`. For half-plane
//! tests we use the doubled real part `u = 2a - b` together with `v = b`
//! (the imaginary part in units of `sqrt(3)/2`), so that the common
//! irrational factor cancels out of every cross product.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// The Eisenstein integer `a + b*w` with `w = e^{2*pi*i/3}`.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EisensteinPoint {
    pub a: i64,
    pub b: i64,
}

impl EisensteinPoint {
    pub const fn new(a: i64, b: i64) -> Self {
        EisensteinPoint { a, b }
    }

    /// Multiplication by `w`, i.e. rotation by 120 degrees about the origin.
    /// Uses `w^2 = -1 - w`, so `w * (a + b*w) = -b + (a - b)*w`.
    pub fn rot120(self) -> Self {
        EisensteinPoint::new(-self.b, self.a - self.b)
    }

    /// Complex conjugation (reflection across the real axis).
    /// `conj(a + b*w) = a + b*w^2 = (a - b) - b*w`.
    pub fn conj(self) -> Self {
        EisensteinPoint::new(self.a - self.b, -self.b)
    }

    /// Doubled real part: `2*Re(a + b*w) = 2a - b`.
    pub fn u(self) -> i64 {
        2 * self.a - self.b
    }

    /// Imaginary part in units of `sqrt(3)/2`.
    pub fn v(self) -> i64 {
        self.b
    }

    pub fn add(self, o: Self) -> Self {
        EisensteinPoint::new(self.a + o.a, self.b + o.b)
    }

    pub fn sub(self, o: Self) -> Self {
        EisensteinPoint::new(self.a - o.a, self.b - o.b)
    }

    pub fn neg(self) -> Self {
        EisensteinPoint::new(-self.a, -self.b)
    }
}

impl fmt::Debug for EisensteinPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}+{}w)", self.a, self.b)
    }
}

/// Sort key placing cells in reading order: by doubled real part, then by
/// the imaginary index. Used for canonical translations and tile anchors.
fn uv_key(p: EisensteinPoint) -> (i64, i64) {
    (p.u(), p.v())
}

/// A hexagonal cell, identified by its center.
///
/// Cell centers form the coset `1 + L` where `L` is the lattice generated
/// by `1 - w^2 = 2 + w` and `w - w^2 = 1 + 2w`; concretely `(a, b)` is a
/// cell center iff `a + b = 1 (mod 3)`. The six vertices of a cell are
/// `center +/- 1, center +/- w, center +/- w^2`.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct HexCell {
    pub center: EisensteinPoint,
}

/// The six center offsets between edge-adjacent cells.
pub const HEX_NEIGHBOR_OFFSETS: [EisensteinPoint; 6] = [
    EisensteinPoint::new(2, 1),
    EisensteinPoint::new(-2, -1),
    EisensteinPoint::new(1, 2),
    EisensteinPoint::new(-1, -2),
    EisensteinPoint::new(1, -1),
    EisensteinPoint::new(-1, 1),
];

impl HexCell {
    pub fn new(a: i64, b: i64) -> Result<Self> {
        let p = EisensteinPoint::new(a, b);
        if (a + b).rem_euclid(3) != 1 {
            return Err(Error::invalid(
                "hex cell",
                format!("{p:?} is not a cell center (need a + b = 1 mod 3)"),
            ));
        }
        Ok(HexCell { center: p })
    }

    /// Unchecked constructor for centers already known to be valid.
    pub(crate) fn from_center(center: EisensteinPoint) -> Self {
        debug_assert_eq!((center.a + center.b).rem_euclid(3), 1);
        HexCell { center }
    }

    /// The six vertices `center +/- 1, +/- w, +/- w^2`.
    pub fn vertices(self) -> [EisensteinPoint; 6] {
        let c = self.center;
        let one = EisensteinPoint::new(1, 0);
        let w = EisensteinPoint::new(0, 1);
        let w2 = EisensteinPoint::new(-1, -1);
        [
            c.add(one),
            c.sub(one),
            c.add(w),
            c.sub(w),
            c.add(w2),
            c.sub(w2),
        ]
    }

    pub fn neighbors(self) -> [HexCell; 6] {
        HEX_NEIGHBOR_OFFSETS.map(|d| HexCell::from_center(self.center.add(d)))
    }

    pub fn is_adjacent(self, other: HexCell) -> bool {
        let d = other.center.sub(self.center);
        HEX_NEIGHBOR_OFFSETS.contains(&d)
    }
}

impl fmt::Debug for HexCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H{:?}", self.center)
    }
}

/// Proper 3-coloring of the cells: `(a - b) mod 3`. Adjacent cells always
/// get distinct colors, and the coloring is invariant under translation
/// by `3 * (1 - w^2)` (and any lattice vector with `a = b (mod 3)`).
pub fn three_coloring(cell: HexCell) -> u8 {
    (cell.center.a - cell.center.b).rem_euclid(3) as u8
}

/// A finite set of hexagonal cells.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct HexRegion {
    cells: BTreeSet<HexCell>,
}

impl HexRegion {
    pub fn new(cells: impl IntoIterator<Item = HexCell>) -> Self {
        HexRegion {
            cells: cells.into_iter().collect(),
        }
    }

    pub fn cells(&self) -> impl Iterator<Item = HexCell> + '_ {
        self.cells.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, cell: HexCell) -> bool {
        self.cells.contains(&cell)
    }

    pub fn rotate120(&self) -> HexRegion {
        HexRegion::new(self.cells().map(|c| HexCell::from_center(c.center.rot120())))
    }

    pub fn reflect(&self) -> HexRegion {
        HexRegion::new(self.cells().map(|c| HexCell::from_center(c.center.conj())))
    }

    pub fn translate(&self, d: EisensteinPoint) -> Result<HexRegion> {
        if (d.a + d.b).rem_euclid(3) != 0 {
            return Err(Error::invalid(
                "translation",
                format!("{d:?} does not preserve the cell lattice"),
            ));
        }
        Ok(HexRegion::new(
            self.cells().map(|c| HexCell::from_center(c.center.add(d))),
        ))
    }

    /// Canonical translate: the minimal cell (ordered by `(2*Re, v)`) is
    /// moved to the base cell with center 1.
    pub fn canonicalize(&self) -> HexRegion {
        match self.cells().min_by_key(|c| uv_key(c.center)) {
            None => HexRegion::default(),
            Some(m) => {
                let d = EisensteinPoint::new(1, 0).sub(m.center);
                self.translate(d).expect("cell-to-cell translation")
            }
        }
    }

    /// Cells sorted lexicographically by `(a, b)`, the JSON order.
    pub fn sorted_coords(&self) -> Vec<(i64, i64)> {
        let mut v: Vec<(i64, i64)> = self.cells().map(|c| (c.center.a, c.center.b)).collect();
        v.sort_unstable();
        v
    }

    pub fn from_coords(coords: &[(i64, i64)]) -> Result<HexRegion> {
        let cells: Result<Vec<HexCell>> = coords.iter().map(|&(a, b)| HexCell::new(a, b)).collect();
        Ok(HexRegion::new(cells?))
    }
}

/// The five prototile kinds of the hexagonal grid.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum HexKind {
    RightStone,
    LeftStone,
    VerticalBone,
    RisingBone,
    FallingBone,
}

pub const HEX_KINDS: [HexKind; 5] = [
    HexKind::RightStone,
    HexKind::LeftStone,
    HexKind::VerticalBone,
    HexKind::RisingBone,
    HexKind::FallingBone,
];

impl HexKind {
    /// Cell-center offsets from the anchor (the lexicographically minimal
    /// cell of the tile in `(2*Re, v)` order).
    pub fn offsets(self) -> [EisensteinPoint; 3] {
        match self {
            // {1, w, w^2} anchored at w^2
            HexKind::RightStone => [
                EisensteinPoint::new(0, 0),
                EisensteinPoint::new(1, 2),
                EisensteinPoint::new(2, 1),
            ],
            // {1, w, 2 + 2w} anchored at w
            HexKind::LeftStone => [
                EisensteinPoint::new(0, 0),
                EisensteinPoint::new(1, -1),
                EisensteinPoint::new(2, 1),
            ],
            HexKind::VerticalBone => [
                EisensteinPoint::new(0, 0),
                EisensteinPoint::new(1, 2),
                EisensteinPoint::new(2, 4),
            ],
            HexKind::RisingBone => [
                EisensteinPoint::new(0, 0),
                EisensteinPoint::new(2, 1),
                EisensteinPoint::new(4, 2),
            ],
            HexKind::FallingBone => [
                EisensteinPoint::new(0, 0),
                EisensteinPoint::new(1, -1),
                EisensteinPoint::new(2, -2),
            ],
        }
    }

    pub fn is_stone(self) -> bool {
        matches!(self, HexKind::RightStone | HexKind::LeftStone)
    }

    /// Short names used by the CLI: RS, LS, VB, RB, FB.
    pub fn short_name(self) -> &'static str {
        match self {
            HexKind::RightStone => "RS",
            HexKind::LeftStone => "LS",
            HexKind::VerticalBone => "VB",
            HexKind::RisingBone => "RB",
            HexKind::FallingBone => "FB",
        }
    }

    pub fn from_short_name(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "RS" => Ok(HexKind::RightStone),
            "LS" => Ok(HexKind::LeftStone),
            "VB" => Ok(HexKind::VerticalBone),
            "RB" => Ok(HexKind::RisingBone),
            "FB" => Ok(HexKind::FallingBone),
            other => Err(Error::Parse(format!(
                "unknown prototile {other:?} (expected RS, LS, VB, RB or FB)"
            ))),
        }
    }

    /// Classify a set of three cells as a translate of one of the five
    /// prototiles, if it is one.
    pub fn classify(cells: &[HexCell; 3]) -> Option<HexKind> {
        let anchor = cells.iter().min_by_key(|c| uv_key(c.center))?.center;
        let mut offs: Vec<EisensteinPoint> = cells.iter().map(|c| c.center.sub(anchor)).collect();
        offs.sort_unstable_by_key(|p| uv_key(*p));
        HEX_KINDS
            .into_iter()
            .find(|k| k.offsets().as_slice() == offs.as_slice())
    }
}

fn check_benzel_domain(a: i64, b: i64) -> Result<()> {
    if a < 2 {
        return Err(Error::domain(format!("need 2 <= a, got a = {a}")));
    }
    if b < 2 {
        return Err(Error::domain(format!("need 2 <= b, got b = {b}")));
    }
    if a > 2 * b {
        return Err(Error::domain(format!("need a <= 2b, got a = {a}, 2b = {}", 2 * b)));
    }
    if b > 2 * a {
        return Err(Error::domain(format!("need b <= 2a, got b = {b}, 2a = {}", 2 * a)));
    }
    Ok(())
}

/// The bounding hexagon of the `(a,b)`-benzel in `(u, v)` coordinates,
/// listed counterclockwise. The vertices are `a*w + b`, `-a*w^2 - b`,
/// `a*w^2 + b*w`, `-a - b*w`, `a + b*w^2`, `-a*w - b*w^2`.
fn benzel_hexagon_uv(a: i64, b: i64) -> [(i64, i64); 6] {
    [
        (2 * b - a, a),
        (a - 2 * b, a),
        (-a - b, b - a),
        (b - 2 * a, -b),
        (2 * a - b, -b),
        (a + b, b - a),
    ]
}

/// Is `(u, v)` inside or on the closed convex hexagon?
fn point_in_hexagon(hex: &[(i64, i64); 6], p: (i64, i64)) -> bool {
    for i in 0..6 {
        let (x0, y0) = hex[i];
        let (x1, y1) = hex[(i + 1) % 6];
        let cross = (x1 - x0) * (p.1 - y0) - (y1 - y0) * (p.0 - x0);
        if cross < 0 {
            return false;
        }
    }
    true
}

/// The `(a,b)`-benzel: all cells whose six vertices lie inside or on the
/// hexagon with vertices `a*w + b`, `-a*w^2 - b`, `a*w^2 + b*w`,
/// `-a - b*w`, `a + b*w^2`, `-a*w - b*w^2`.
pub fn benzel(a: i64, b: i64) -> Result<HexRegion> {
    check_benzel_domain(a, b)?;
    let hex = benzel_hexagon_uv(a, b);
    let bound = a + b; // generous |a'|,|b'| bound on candidate centers
    let mut cells = Vec::new();
    for ca in -bound..=bound {
        for cb in -bound..=bound {
            if (ca + cb).rem_euclid(3) != 1 {
                continue;
            }
            let cell = HexCell::from_center(EisensteinPoint::new(ca, cb));
            if cell
                .vertices()
                .iter()
                .all(|p| point_in_hexagon(&hex, (p.u(), p.v())))
            {
                cells.push(cell);
            }
        }
    }
    Ok(HexRegion::new(cells))
}

/// Number of cells in the `(a,b)`-benzel, by the closed formula.
pub fn benzel_size(a: i64, b: i64) -> Result<i64> {
    check_benzel_domain(a, b)?;
    let q = -a * a + 4 * a * b - b * b - a - b;
    let n = match (a + b).rem_euclid(3) {
        0 | 2 => q / 2,
        _ => (q + 2) / 2,
    };
    Ok(n)
}

/// Conway-Lagarias invariant of the `(a,b)`-benzel: the constant value of
/// (#right stones - #left stones) over all its stones-and-bones tilings.
pub fn cl_invariant(a: i64, b: i64) -> Result<i64> {
    check_benzel_domain(a, b)?;
    let v = match (a + b).rem_euclid(3) {
        0 => (3 * a * a - 6 * a * b + 3 * b * b - a - b) / 6,
        1 => (-a * a + 4 * a * b - b * b - a - b + 2) / 6,
        _ => (3 * a * a - 6 * a * b + 3 * b * b + a + b - 2) / 6,
    };
    Ok(v)
}
