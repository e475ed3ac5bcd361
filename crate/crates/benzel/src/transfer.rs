//! The bijection between hexagonal-grid cells and square-grid boxes.
//!
//! Deleting the vertical strips of the hexagonal grid that are traversed
//! only by horizontal edges, compressing, rescaling and rotating by 90
//! degrees turns cells into diamond-oriented unit squares ("boxes"). We
//! implement the composite as a closed-form map on Eisenstein centers,
//! normalized so that the cell with center 1 maps to the box with center
//! (0, 1):
//!
//! ```text
//!     (a, b)  |->  (-b, (2a - b + 1) / 3)
//! ```
//!
//! Adjacency through the four non-horizontal hex edges becomes box edge
//! adjacency; the two cells joined by a horizontal edge land two columns
//! apart, which is why the vertical bone transfers to three pairwise
//! disconnected boxes.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::hexgrid::{EisensteinPoint, HexCell, HexKind, HexRegion};
use crate::{Error, Result};

/// A diamond-oriented unit square with vertices `(x +/- 1, y)` and
/// `(x, y +/- 1)`. Centers satisfy `x + y` odd.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SquareBox {
    pub x: i64,
    pub y: i64,
}

/// The four center offsets between edge-adjacent boxes.
pub const BOX_NEIGHBOR_OFFSETS: [(i64, i64); 4] = [(1, 1), (1, -1), (-1, 1), (-1, -1)];

impl SquareBox {
    pub fn new(x: i64, y: i64) -> Result<Self> {
        if (x + y).rem_euclid(2) != 1 {
            return Err(Error::invalid(
                "box",
                format!("({x}, {y}) has even coordinate sum"),
            ));
        }
        Ok(SquareBox { x, y })
    }

    pub(crate) fn at(x: i64, y: i64) -> Self {
        debug_assert_eq!((x + y).rem_euclid(2), 1);
        SquareBox { x, y }
    }

    pub fn is_adjacent(self, o: SquareBox) -> bool {
        BOX_NEIGHBOR_OFFSETS.contains(&(o.x - self.x, o.y - self.y))
    }
}

impl fmt::Debug for SquareBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.x, self.y)
    }
}

/// A finite set of boxes.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SquareRegion {
    boxes: BTreeSet<SquareBox>,
}

impl SquareRegion {
    pub fn new(boxes: impl IntoIterator<Item = SquareBox>) -> Self {
        SquareRegion {
            boxes: boxes.into_iter().collect(),
        }
    }

    pub fn boxes(&self) -> impl Iterator<Item = SquareBox> + '_ {
        self.boxes.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    pub fn contains(&self, b: SquareBox) -> bool {
        self.boxes.contains(&b)
    }

    pub fn translate(&self, dx: i64, dy: i64) -> Result<SquareRegion> {
        if (dx + dy).rem_euclid(2) != 0 {
            return Err(Error::invalid(
                "translation",
                format!("({dx}, {dy}) does not preserve box parity"),
            ));
        }
        Ok(SquareRegion::new(
            self.boxes().map(|b| SquareBox::at(b.x + dx, b.y + dy)),
        ))
    }

    /// Canonical translate: the minimal box (lexicographic `(x, y)`) is
    /// moved to (0, 1).
    pub fn canonicalize(&self) -> SquareRegion {
        match self.boxes().next() {
            None => SquareRegion::default(),
            Some(m) => self.translate(-m.x, 1 - m.y).expect("parity-preserving"),
        }
    }

    pub fn union(&self, other: &SquareRegion) -> SquareRegion {
        SquareRegion::new(self.boxes().chain(other.boxes()))
    }

    pub fn difference(&self, other: &SquareRegion) -> SquareRegion {
        SquareRegion::new(self.boxes().filter(|b| !other.contains(*b)))
    }

    pub fn is_disjoint(&self, other: &SquareRegion) -> bool {
        self.boxes().all(|b| !other.contains(b))
    }

    pub fn is_subset(&self, other: &SquareRegion) -> bool {
        self.boxes().all(|b| other.contains(b))
    }

    pub fn sorted_coords(&self) -> Vec<(i64, i64)> {
        self.boxes().map(|b| (b.x, b.y)).collect()
    }

    pub fn from_coords(coords: &[(i64, i64)]) -> Result<SquareRegion> {
        let boxes: Result<Vec<SquareBox>> = coords.iter().map(|&(x, y)| SquareBox::new(x, y)).collect();
        Ok(SquareRegion::new(boxes?))
    }
}

/// The five square-grid prototiles (images of the hex prototiles).
/// The first four are the four connected 3-ribbons; the vertical-bone
/// image is three pairwise non-adjacent boxes in one row.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum SquareKind {
    MountainStone,
    ValleyStone,
    NegativeBone,
    PositiveBone,
    VerticalBoneImage,
}

pub const SQUARE_KINDS: [SquareKind; 5] = [
    SquareKind::MountainStone,
    SquareKind::ValleyStone,
    SquareKind::NegativeBone,
    SquareKind::PositiveBone,
    SquareKind::VerticalBoneImage,
];

/// The four connected 3-ribbon prototiles.
pub const RIBBON_KINDS: [SquareKind; 4] = [
    SquareKind::MountainStone,
    SquareKind::ValleyStone,
    SquareKind::NegativeBone,
    SquareKind::PositiveBone,
];

impl SquareKind {
    /// Box offsets from the lexicographically minimal box.
    pub fn offsets(self) -> [(i64, i64); 3] {
        match self {
            SquareKind::MountainStone => [(0, 0), (1, 1), (2, 0)],
            SquareKind::ValleyStone => [(0, 0), (1, -1), (2, 0)],
            SquareKind::NegativeBone => [(0, 0), (1, -1), (2, -2)],
            SquareKind::PositiveBone => [(0, 0), (1, 1), (2, 2)],
            SquareKind::VerticalBoneImage => [(0, 0), (2, 0), (4, 0)],
        }
    }

    pub fn is_connected(self) -> bool {
        !matches!(self, SquareKind::VerticalBoneImage)
    }

    pub fn classify(boxes: &[SquareBox; 3]) -> Option<SquareKind> {
        let mut sorted = *boxes;
        sorted.sort_unstable();
        let a = sorted[0];
        let offs = sorted.map(|b| (b.x - a.x, b.y - a.y));
        SQUARE_KINDS.into_iter().find(|k| k.offsets() == offs)
    }

    /// The hex prototile this square prototile is the image of.
    pub fn hex_kind(self) -> HexKind {
        match self {
            SquareKind::MountainStone => HexKind::RightStone,
            SquareKind::ValleyStone => HexKind::LeftStone,
            SquareKind::NegativeBone => HexKind::RisingBone,
            SquareKind::PositiveBone => HexKind::FallingBone,
            SquareKind::VerticalBoneImage => HexKind::VerticalBone,
        }
    }
}

impl HexKind {
    /// The square-grid image of this prototile.
    pub fn square_kind(self) -> SquareKind {
        match self {
            HexKind::RightStone => SquareKind::MountainStone,
            HexKind::LeftStone => SquareKind::ValleyStone,
            HexKind::RisingBone => SquareKind::NegativeBone,
            HexKind::FallingBone => SquareKind::PositiveBone,
            HexKind::VerticalBone => SquareKind::VerticalBoneImage,
        }
    }
}

/// Transfer a hex cell to its box.
pub fn hex_to_square(cell: HexCell) -> SquareBox {
    let EisensteinPoint { a, b } = cell.center;
    // a + b = 1 (mod 3) guarantees divisibility
    SquareBox::at(-b, (2 * a - b + 1).div_euclid(3))
}

/// Transfer a box back to its hex cell.
pub fn square_to_hex(bx: SquareBox) -> HexCell {
    let b = -bx.x;
    let a = (3 * bx.y + b - 1) / 2;
    HexCell::from_center(EisensteinPoint::new(a, b))
}

/// Elementwise image of a hex region in the square grid.
pub fn transfer_region(region: &HexRegion) -> SquareRegion {
    SquareRegion::new(region.cells().map(hex_to_square))
}

/// Elementwise preimage of a square region in the hexagonal grid.
pub fn transfer_region_back(region: &SquareRegion) -> HexRegion {
    HexRegion::new(region.boxes().map(square_to_hex))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hexgrid::{benzel, HEX_KINDS};
    use proptest::prelude::*;

    #[test]
    fn normalization_is_pinned() {
        let base = HexCell::new(1, 0).unwrap();
        assert_eq!(hex_to_square(base), SquareBox::at(0, 1));
        assert_eq!(square_to_hex(SquareBox::at(0, 1)), base);
    }

    #[test]
    fn prototile_images_match() {
        // place each hex prototile on genuine cells anchored at 1 and
        // classify the image
        let base = EisensteinPoint::new(1, 0);
        for k in HEX_KINDS {
            let cells = k.offsets().map(|d| HexCell::from_center(base.add(d)));
            let boxes = cells.map(hex_to_square);
            assert_eq!(SquareKind::classify(&boxes), Some(k.square_kind()), "{k:?}");
        }
    }

    #[test]
    fn vertical_bone_image_is_disconnected() {
        let offs = SquareKind::VerticalBoneImage.offsets();
        let boxes: Vec<SquareBox> = offs.iter().map(|&(x, y)| SquareBox::at(x, y + 1)).collect();
        for i in 0..3 {
            for j in (i + 1)..3 {
                assert!(!boxes[i].is_adjacent(boxes[j]));
            }
        }
    }

    #[test]
    fn benzel_2_2_transfers_to_a_mountain_stone() {
        let img = transfer_region(&benzel(2, 2).unwrap());
        let boxes: Vec<SquareBox> = img.boxes().collect();
        let arr = [boxes[0], boxes[1], boxes[2]];
        assert_eq!(SquareKind::classify(&arr), Some(SquareKind::MountainStone));
    }

    #[test]
    fn b_7_8_has_three_boxes_of_maximal_height() {
        let img = transfer_region(&benzel(7, 8).unwrap());
        assert_eq!(img.len(), 48);
        let top = img.boxes().map(|b| b.y).max().unwrap();
        assert_eq!(img.boxes().filter(|b| b.y == top).count(), 3);
    }

    #[test]
    fn empty_region_transfers_to_empty() {
        assert!(transfer_region(&HexRegion::default()).is_empty());
    }

    #[test]
    fn odd_parity_is_enforced() {
        assert!(SquareBox::new(0, 0).is_err());
        assert!(SquareBox::new(2, 1).is_ok());
    }

    proptest! {
        #[test]
        fn round_trip_hex(a in -60i64..60, k in 0i64..60) {
            // walk to a valid center: pick b with a + b = 1 mod 3
            let b = k * 3 + (1 - a).rem_euclid(3);
            let c = HexCell::new(a, b).unwrap();
            prop_assert_eq!(square_to_hex(hex_to_square(c)), c);
        }

        #[test]
        fn round_trip_square(x in -60i64..60, k in -30i64..30) {
            let y = 2 * k + (1 - x).rem_euclid(2);
            let b = SquareBox::new(x, y).unwrap();
            prop_assert_eq!(hex_to_square(square_to_hex(b)), b);
        }

        #[test]
        fn non_horizontal_adjacency_is_preserved(a in -30i64..30, k in 0i64..30, dir in 0usize..4) {
            let b = k * 3 + (1 - a).rem_euclid(3);
            let c = HexCell::new(a, b).unwrap();
            // the four non-vertical neighbor offsets
            let offs = [(2i64, 1i64), (-2, -1), (1, -1), (-1, 1)];
            let (da, db) = offs[dir];
            let n = HexCell::new(a + da, b + db).unwrap();
            prop_assert!(hex_to_square(c).is_adjacent(hex_to_square(n)));
        }
    }
}
