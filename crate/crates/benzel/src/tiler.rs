//! Exhaustive exact-cover enumeration of stones-and-bones tilings of hex
//! regions and 3-ribbon tilings of square regions, with exact counting.
//!
//! The search always branches on the lexicographically least uncovered
//! cell and tries prototiles in a fixed kind order, so enumeration order
//! and counts are deterministic. A connected-component size-mod-3 prune
//! runs after every placement whenever all allowed prototiles are
//! edge-connected.

use num_bigint::BigUint;
use num_traits::One;

use crate::hexgrid::{HexCell, HexKind, HexRegion, HEX_KINDS};
use crate::transfer::{SquareBox, SquareKind, SquareRegion, SQUARE_KINDS};
use crate::young::v_band;
use crate::{Error, Result};

/// A prototile translate in the hex grid.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct HexPlacement {
    pub kind: HexKind,
    pub anchor: HexCell,
}

impl HexPlacement {
    pub fn cells(&self) -> [HexCell; 3] {
        self.kind
            .offsets()
            .map(|d| HexCell::new(self.anchor.center.a + d.a, self.anchor.center.b + d.b).unwrap())
    }
}

/// A prototile translate in the square grid.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct SquarePlacement {
    pub kind: SquareKind,
    pub anchor: SquareBox,
}

impl SquarePlacement {
    pub fn boxes(&self) -> [SquareBox; 3] {
        self.kind
            .offsets()
            .map(|(dx, dy)| SquareBox::new(self.anchor.x + dx, self.anchor.y + dy).unwrap())
    }
}

/// A complete tiling of a hex region.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct HexTiling {
    placements: Vec<HexPlacement>,
}

impl HexTiling {
    pub fn placements(&self) -> &[HexPlacement] {
        &self.placements
    }

    pub fn len(&self) -> usize {
        self.placements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.placements.is_empty()
    }

    pub fn region(&self) -> HexRegion {
        HexRegion::new(self.placements.iter().flat_map(|p| p.cells()))
    }

    pub fn stats(&self) -> TilingStats {
        TilingStats::tally(self.placements.iter().map(|p| p.kind))
    }
}

/// A complete tiling of a square region.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct SquareTiling {
    placements: Vec<SquarePlacement>,
}

impl SquareTiling {
    pub fn placements(&self) -> &[SquarePlacement] {
        &self.placements
    }

    pub fn len(&self) -> usize {
        self.placements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.placements.is_empty()
    }

    pub fn region(&self) -> SquareRegion {
        SquareRegion::new(self.placements.iter().flat_map(|p| p.boxes()))
    }

    pub fn stats(&self) -> TilingStats {
        TilingStats::tally(self.placements.iter().map(|p| p.kind.hex_kind()))
    }
}

/// Exact census of a tiling by prototile kind (hex vocabulary; square
/// tilings report through the transfer dictionary).
#[derive(Copy, Clone, PartialEq, Eq, Debug, Default)]
pub struct TilingStats {
    pub right_stones: usize,
    pub left_stones: usize,
    pub vertical_bones: usize,
    pub rising_bones: usize,
    pub falling_bones: usize,
}

impl TilingStats {
    fn tally(kinds: impl Iterator<Item = HexKind>) -> TilingStats {
        let mut s = TilingStats::default();
        for k in kinds {
            match k {
                HexKind::RightStone => s.right_stones += 1,
                HexKind::LeftStone => s.left_stones += 1,
                HexKind::VerticalBone => s.vertical_bones += 1,
                HexKind::RisingBone => s.rising_bones += 1,
                HexKind::FallingBone => s.falling_bones += 1,
            }
        }
        s
    }

    /// #right stones - #left stones (the Conway-Lagarias census).
    pub fn cl(&self) -> i64 {
        self.right_stones as i64 - self.left_stones as i64
    }

    pub fn total(&self) -> usize {
        self.right_stones + self.left_stones + self.vertical_bones + self.rising_bones
            + self.falling_bones
    }
}

/// One compiled placement: prototile index into the caller's kind table
/// plus the three covered cell indices.
struct Compiled {
    tile: usize,
    cells: [u32; 3],
}

/// The shared search core over indexed cells.
struct Solver {
    n: usize,
    /// placements grouped by their minimal covered cell index
    buckets: Vec<Vec<Compiled>>,
    neighbors: Vec<Vec<u32>>,
    prune: bool,
}

impl Solver {
    /// Visit every exact cover; the visitor returns false to stop early.
    /// Each solution is reported as (placement-bucket cell, index within
    /// bucket) pairs resolved to `Compiled` references.
    fn search(&self, mut visit: impl FnMut(&[&Compiled]) -> bool) {
        if self.n % 3 != 0 {
            return;
        }
        if self.n == 0 {
            visit(&[]);
            return;
        }
        let mut covered = vec![false; self.n];
        let mut stack: Vec<&Compiled> = Vec::with_capacity(self.n / 3);
        self.rec(0, &mut covered, &mut stack, &mut visit);
    }

    fn rec<'a>(
        &'a self,
        from: usize,
        covered: &mut [bool],
        stack: &mut Vec<&'a Compiled>,
        visit: &mut impl FnMut(&[&Compiled]) -> bool,
    ) -> bool {
        let mut c = from;
        while c < self.n && covered[c] {
            c += 1;
        }
        if c == self.n {
            return visit(stack);
        }
        for p in &self.buckets[c] {
            if p.cells.iter().any(|&i| covered[i as usize]) {
                continue;
            }
            for &i in &p.cells {
                covered[i as usize] = true;
            }
            let viable = !self.prune || self.components_ok(covered, c + 1);
            if viable {
                stack.push(p);
                let keep_going = self.rec(c + 1, covered, stack, visit);
                stack.pop();
                if !keep_going {
                    for &i in &p.cells {
                        covered[i as usize] = false;
                    }
                    return false;
                }
            }
            for &i in &p.cells {
                covered[i as usize] = false;
            }
        }
        true
    }

    /// Every connected component of uncovered cells must have size
    /// divisible by 3 (all prototiles cover 3 cells).
    fn components_ok(&self, covered: &[bool], from: usize) -> bool {
        let mut seen = covered.to_vec();
        let mut queue: Vec<u32> = Vec::new();
        for start in from..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.clear();
            queue.push(start as u32);
            let mut size = 0usize;
            while let Some(i) = queue.pop() {
                size += 1;
                for &j in &self.neighbors[i as usize] {
                    if !seen[j as usize] {
                        seen[j as usize] = true;
                        queue.push(j);
                    }
                }
            }
            if size % 3 != 0 {
                return false;
            }
        }
        true
    }
}

fn check_allowed<T>(allowed: &[T]) -> Result<()> {
    if allowed.is_empty() {
        return Err(Error::domain("the allowed prototile set must be nonempty".to_string()));
    }
    Ok(())
}

fn hex_solver(region: &HexRegion, allowed: &[HexKind]) -> (Solver, Vec<HexCell>, Vec<HexKind>) {
    let mut cells: Vec<HexCell> = region.cells().collect();
    cells.sort_by_key(|c| (c.center.a, c.center.b));
    let index = |c: HexCell| cells.binary_search_by_key(&(c.center.a, c.center.b), |x| (x.center.a, x.center.b)).ok();
    // fixed kind order regardless of how the caller listed them
    let kinds: Vec<HexKind> = HEX_KINDS.iter().copied().filter(|k| allowed.contains(k)).collect();
    let mut buckets: Vec<Vec<Compiled>> = (0..cells.len()).map(|_| Vec::new()).collect();
    for (t, kind) in kinds.iter().enumerate() {
        for anchor in &cells {
            let covered: Option<Vec<u32>> = kind
                .offsets()
                .iter()
                .map(|d| {
                    HexCell::new(anchor.center.a + d.a, anchor.center.b + d.b)
                        .ok()
                        .and_then(&index)
                        .map(|i| i as u32)
                })
                .collect();
            if let Some(mut cs) = covered {
                cs.sort_unstable();
                let min = cs[0] as usize;
                buckets[min].push(Compiled { tile: t, cells: [cs[0], cs[1], cs[2]] });
            }
        }
    }
    for b in &mut buckets {
        b.sort_by_key(|p| (p.tile, p.cells));
    }
    let neighbors: Vec<Vec<u32>> = cells
        .iter()
        .map(|c| {
            c.neighbors()
                .iter()
                .filter_map(|n| index(*n).map(|i| i as u32))
                .collect()
        })
        .collect();
    let solver = Solver { n: cells.len(), buckets, neighbors, prune: true };
    (solver, cells, kinds)
}

fn square_solver(
    region: &SquareRegion,
    allowed: &[SquareKind],
) -> (Solver, Vec<SquareBox>, Vec<SquareKind>) {
    let mut boxes: Vec<SquareBox> = region.boxes().collect();
    boxes.sort();
    let index = |b: SquareBox| boxes.binary_search(&b).ok();
    let kinds: Vec<SquareKind> =
        SQUARE_KINDS.iter().copied().filter(|k| allowed.contains(k)).collect();
    let mut buckets: Vec<Vec<Compiled>> = (0..boxes.len()).map(|_| Vec::new()).collect();
    for (t, kind) in kinds.iter().enumerate() {
        for anchor in &boxes {
            let covered: Option<Vec<u32>> = kind
                .offsets()
                .iter()
                .map(|(dx, dy)| {
                    SquareBox::new(anchor.x + dx, anchor.y + dy)
                        .ok()
                        .and_then(&index)
                        .map(|i| i as u32)
                })
                .collect();
            if let Some(mut cs) = covered {
                cs.sort_unstable();
                let min = cs[0] as usize;
                buckets[min].push(Compiled { tile: t, cells: [cs[0], cs[1], cs[2]] });
            }
        }
    }
    for b in &mut buckets {
        b.sort_by_key(|p| (p.tile, p.cells));
    }
    let neighbors: Vec<Vec<u32>> = boxes
        .iter()
        .map(|b| {
            crate::transfer::BOX_NEIGHBOR_OFFSETS
                .iter()
                .filter_map(|&(dx, dy)| {
                    SquareBox::new(b.x + dx, b.y + dy).ok().and_then(&index).map(|i| i as u32)
                })
                .collect()
        })
        .collect();
    // the vertical bone's image is disconnected, so the component prune
    // is unsound when it is allowed
    let prune = kinds.iter().all(|k| k.is_connected());
    let solver = Solver { n: boxes.len(), buckets, neighbors, prune };
    (solver, boxes, kinds)
}

/// Every tiling of a hex region by the allowed prototiles, in
/// deterministic order, truncated at `limit` if given.
pub fn enumerate_hex_tilings(
    region: &HexRegion,
    allowed: &[HexKind],
    limit: Option<usize>,
) -> Result<Vec<HexTiling>> {
    check_allowed(allowed)?;
    let (solver, cells, kinds) = hex_solver(region, allowed);
    let mut out = Vec::new();
    solver.search(|sol| {
        let mut placements: Vec<HexPlacement> = sol
            .iter()
            .map(|p| HexPlacement { kind: kinds[p.tile], anchor: cells[p.cells[0] as usize] })
            .collect();
        placements.sort();
        out.push(HexTiling { placements });
        limit.map_or(true, |l| out.len() < l)
    });
    Ok(out)
}

/// Exact tiling count without materializing tilings.
pub fn count_hex_tilings(region: &HexRegion, allowed: &[HexKind]) -> Result<BigUint> {
    check_allowed(allowed)?;
    let (solver, _, _) = hex_solver(region, allowed);
    let mut n = BigUint::ZERO;
    solver.search(|_| {
        n += BigUint::one();
        true
    });
    Ok(n)
}

/// Every tiling of a square region by the allowed prototiles.
pub fn enumerate_square_tilings(
    region: &SquareRegion,
    allowed: &[SquareKind],
    limit: Option<usize>,
) -> Result<Vec<SquareTiling>> {
    check_allowed(allowed)?;
    let (solver, boxes, kinds) = square_solver(region, allowed);
    let mut out = Vec::new();
    solver.search(|sol| {
        let mut placements: Vec<SquarePlacement> = sol
            .iter()
            .map(|p| SquarePlacement { kind: kinds[p.tile], anchor: boxes[p.cells[0] as usize] })
            .collect();
        placements.sort();
        out.push(SquareTiling { placements });
        limit.map_or(true, |l| out.len() < l)
    });
    Ok(out)
}

/// Exact square-mode tiling count without materializing tilings.
pub fn count_square_tilings(region: &SquareRegion, allowed: &[SquareKind]) -> Result<BigUint> {
    check_allowed(allowed)?;
    let (solver, _, _) = square_solver(region, allowed);
    let mut n = BigUint::ZERO;
    solver.search(|_| {
        n += BigUint::one();
        true
    });
    Ok(n)
}

/// The prototile sets of the two one-sided problems, square vocabulary:
/// mountainless = no mountain stone, valleyless = no valley stone.
pub const MOUNTAINLESS_KINDS: [SquareKind; 3] =
    [SquareKind::ValleyStone, SquareKind::NegativeBone, SquareKind::PositiveBone];
pub const VALLEYLESS_KINDS: [SquareKind; 3] =
    [SquareKind::MountainStone, SquareKind::NegativeBone, SquareKind::PositiveBone];

/// The valley-stone placements in the band V_m that occur in mountainless
/// tilings of V_m: exactly 2m of them, each extending to a unique such
/// tiling.
pub fn valley_positions(m: u64) -> Result<Vec<SquarePlacement>> {
    if m < 1 {
        return Err(Error::domain(format!("need m >= 1, got m = {m}")));
    }
    let band = v_band(m)?;
    let tilings = enumerate_square_tilings(&band, &MOUNTAINLESS_KINDS, None)?;
    let mut positions = Vec::new();
    for t in tilings {
        let valleys: Vec<SquarePlacement> = t
            .placements()
            .iter()
            .copied()
            .filter(|p| p.kind == SquareKind::ValleyStone)
            .collect();
        if valleys.len() != 1 {
            return Err(Error::invalid(
                "tiling",
                format!("mountainless tiling of V_{m} has {} valley stones", valleys.len()),
            ));
        }
        positions.push(valleys[0]);
    }
    positions.sort();
    let before = positions.len();
    positions.dedup();
    if positions.len() != before {
        return Err(Error::invalid(
            "tiling",
            format!("a valley position of V_{m} extends to several tilings"),
        ));
    }
    Ok(positions)
}
