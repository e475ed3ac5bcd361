//! Ribbons, ribbon tableaux, tuple Young tableaux, the abacus (SW)
//! bijection, and the Compress bijection.
//!
//! A k-ribbon is an edge-connected set of `k` boxes with pairwise
//! distinct x-coordinates, i.e. a path of boxes stepping `(+1, ±1)`.
//! Adding or removing one k-ribbon at the top of a Young diagram is the
//! word move swapping `w(n) = o` with `w(n+k) = x`.

use std::collections::BTreeMap;

use crate::transfer::{SquareBox, SquareRegion};
use crate::young::{
    abacus_word, core_of_charges, from_quotient, k_quotient, partition_of, young_region,
    AbacusWord, Charges, Partition, Step,
};
use crate::{Error, Result};

/// A k-ribbon: boxes sorted by x, consecutive x, y steps of ±1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Ribbon {
    boxes: Vec<SquareBox>,
}

impl Ribbon {
    pub fn new(boxes: impl IntoIterator<Item = SquareBox>) -> Result<Self> {
        let mut boxes: Vec<SquareBox> = boxes.into_iter().collect();
        boxes.sort();
        boxes.dedup();
        if boxes.is_empty() {
            return Err(Error::invalid("ribbon", "no boxes".to_string()));
        }
        for w in boxes.windows(2) {
            if w[1].x != w[0].x + 1 || (w[1].y - w[0].y).abs() != 1 {
                return Err(Error::invalid(
                    "ribbon",
                    format!("boxes {:?} and {:?} do not form a diagonal step", w[0], w[1]),
                ));
            }
        }
        Ok(Ribbon { boxes })
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn boxes(&self) -> &[SquareBox] {
        &self.boxes
    }

    pub fn region(&self) -> SquareRegion {
        SquareRegion::new(self.boxes.iter().copied())
    }

    /// Real part of the ribbon's leftmost point.
    pub fn leftmost_real(&self) -> i64 {
        self.boxes[0].x - 1
    }
}

/// An unordered ribbon tiling: pairwise disjoint ribbons.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct RibbonTiling {
    tiles: Vec<Ribbon>,
}

impl RibbonTiling {
    pub fn new(tiles: impl IntoIterator<Item = Ribbon>) -> Result<Self> {
        let mut tiles: Vec<Ribbon> = tiles.into_iter().collect();
        tiles.sort();
        let total: usize = tiles.iter().map(Ribbon::len).sum();
        let union: SquareRegion =
            SquareRegion::new(tiles.iter().flat_map(|t| t.boxes().iter().copied()));
        if union.len() != total {
            return Err(Error::invalid("tiling", "tiles overlap".to_string()));
        }
        Ok(RibbonTiling { tiles })
    }

    pub fn empty() -> Self {
        RibbonTiling { tiles: Vec::new() }
    }

    pub fn tiles(&self) -> &[Ribbon] {
        &self.tiles
    }

    pub fn len(&self) -> usize {
        self.tiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tiles.is_empty()
    }

    pub fn region(&self) -> SquareRegion {
        SquareRegion::new(self.tiles.iter().flat_map(|t| t.boxes().iter().copied()))
    }
}

/// An ordered ribbon tableau over a base partition (the k-core): every
/// prefix base + T_1 + ... + T_i is a Young diagram.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RibbonTableau {
    base: Partition,
    tiles: Vec<Ribbon>,
}

impl RibbonTableau {
    pub fn new(base: Partition, tiles: impl IntoIterator<Item = Ribbon>) -> Result<Self> {
        let tiles: Vec<Ribbon> = tiles.into_iter().collect();
        // validate the prefix property while computing the running shape
        let mut region = young_region(&base);
        for (i, t) in tiles.iter().enumerate() {
            if !t.region().is_disjoint(&region) {
                return Err(Error::invalid("tableau", format!("tile {} overlaps prefix", i + 1)));
            }
            region = region.union(&t.region());
            region_to_partition(&region).map_err(|_| {
                Error::invalid("tableau", format!("prefix through tile {} is not a Young diagram", i + 1))
            })?;
        }
        Ok(RibbonTableau { base, tiles })
    }

    pub fn base(&self) -> &Partition {
        &self.base
    }

    pub fn tiles(&self) -> &[Ribbon] {
        &self.tiles
    }

    pub fn len(&self) -> usize {
        self.tiles.len()
    }

    /// The full partition tiled by base + all tiles.
    pub fn shape(&self) -> Partition {
        let mut region = young_region(&self.base);
        for t in &self.tiles {
            region = region.union(&t.region());
        }
        region_to_partition(&region).expect("validated at construction")
    }

    pub fn tiling(&self) -> RibbonTiling {
        RibbonTiling::new(self.tiles.iter().cloned()).expect("tiles are disjoint")
    }
}

/// A strict Young tableau: a filling of a Russian-notation diagram with
/// distinct positive integers increasing upward (both northeast along a
/// column of constant cell index and northwest along a part).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StrictYoungTableau {
    shape: Partition,
    /// entries[i][j] is the label of the box in part i+1 at depth j+1
    entries: Vec<Vec<u64>>,
}

impl StrictYoungTableau {
    pub fn new(shape: Partition, entries: Vec<Vec<u64>>) -> Result<Self> {
        if entries.len() != shape.len()
            || entries.iter().zip(shape.parts()).any(|(row, &p)| row.len() != p as usize)
        {
            return Err(Error::invalid("tableau", "entry rows do not match shape".to_string()));
        }
        let t = StrictYoungTableau { shape, entries };
        for (i, row) in t.entries.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if v == 0 {
                    return Err(Error::invalid("tableau", "labels must be positive".to_string()));
                }
                if j + 1 < row.len() && row[j + 1] <= v {
                    return Err(Error::invalid("tableau", "not increasing along part".to_string()));
                }
                if i + 1 < t.entries.len() && t.entries[i + 1].len() > j && t.entries[i + 1][j] <= v
                {
                    return Err(Error::invalid("tableau", "not increasing across parts".to_string()));
                }
            }
        }
        Ok(t)
    }

    pub fn empty() -> Self {
        StrictYoungTableau { shape: Partition::empty(), entries: Vec::new() }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn entries(&self) -> &[Vec<u64>] {
        &self.entries
    }

    pub fn content(&self) -> Vec<u64> {
        let mut c: Vec<u64> = self.entries.iter().flatten().copied().collect();
        c.sort_unstable();
        c
    }
}

/// A k-tuple of strict Young tableaux whose contents partition [m].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TupleYoungTableau {
    components: Vec<StrictYoungTableau>,
}

impl TupleYoungTableau {
    pub fn new(components: Vec<StrictYoungTableau>) -> Result<Self> {
        let mut all: Vec<u64> = components.iter().flat_map(|c| c.content()).collect();
        all.sort_unstable();
        let m = all.len() as u64;
        if all != (1..=m).collect::<Vec<_>>() {
            return Err(Error::invalid("tuple tableau", format!("contents are not 1..={m}")));
        }
        Ok(TupleYoungTableau { components })
    }

    pub fn components(&self) -> &[StrictYoungTableau] {
        &self.components
    }

    pub fn shapes(&self) -> Vec<Partition> {
        self.components.iter().map(|c| c.shape().clone()).collect()
    }

    pub fn size(&self) -> usize {
        self.components.iter().map(|c| c.shape().size() as usize).sum()
    }
}

/// Decode a box set back to the partition whose Russian-notation diagram
/// it is; errors if the region is not of that form.
pub fn region_to_partition(r: &SquareRegion) -> Result<Partition> {
    let mut parts: BTreeMap<i64, i64> = BTreeMap::new();
    for b in r.boxes() {
        let i = (b.y + b.x + 1) / 2;
        let j = (b.y - b.x + 1) / 2;
        if i < 1 || j < 1 {
            return Err(Error::invalid("region", format!("box {b:?} outside the cone")));
        }
        let e = parts.entry(i).or_insert(0);
        *e = (*e).max(j);
    }
    let n = parts.keys().max().copied().unwrap_or(0);
    let mut vec = Vec::with_capacity(n as usize);
    for i in 1..=n {
        vec.push(*parts.get(&i).unwrap_or(&0) as u64);
    }
    let p = Partition::new(vec)
        .map_err(|_| Error::invalid("region", "part lengths not weakly decreasing".to_string()))?;
    if young_region(&p) != *r {
        return Err(Error::invalid("region", "boxes do not fill a Young diagram".to_string()));
    }
    Ok(p)
}

/// Positions `n` at which a k-ribbon can be added to `p` (word move
/// `x` at n, `o` at n+k, swapped).
pub fn addable_positions(p: &Partition, k: usize) -> Vec<i64> {
    let w = abacus_word(p);
    let (win, lo) = w.window();
    let hi = lo + win.len() as i64;
    let k = k as i64;
    ((lo - k)..hi)
        .filter(|&n| w.at(n) == Step::Down && w.at(n + k) == Step::Up)
        .collect()
}

/// Add a k-ribbon at word position `n`; returns the larger partition and
/// the ribbon itself.
pub fn add_ribbon(p: &Partition, n: i64, k: usize) -> Result<(Partition, Ribbon)> {
    let w = abacus_word(p);
    if w.at(n) != Step::Down || w.at(n + k as i64) != Step::Up {
        return Err(Error::invalid(
            "ribbon move",
            format!("cannot add a {k}-ribbon at position {n}"),
        ));
    }
    let bigger = swap_word(&w, n, n + k as i64)?;
    let tile = Ribbon::new(
        young_region(&bigger).difference(&young_region(p)).boxes(),
    )?;
    debug_assert_eq!(tile.len(), k);
    Ok((bigger, tile))
}

/// Remove the k-ribbon whose word move is `o` at `n`, `x` at `n + k`.
pub fn remove_ribbon(p: &Partition, n: i64, k: usize) -> Result<(Partition, Ribbon)> {
    let w = abacus_word(p);
    if w.at(n) != Step::Up || w.at(n + k as i64) != Step::Down {
        return Err(Error::invalid(
            "ribbon move",
            format!("cannot remove a {k}-ribbon at position {n}"),
        ));
    }
    let smaller = swap_word(&w, n, n + k as i64)?;
    let tile = Ribbon::new(
        young_region(p).difference(&young_region(&smaller)).boxes(),
    )?;
    Ok((smaller, tile))
}

fn swap_word(w: &AbacusWord, n1: i64, n2: i64) -> Result<Partition> {
    let (win, lo) = w.window();
    let hi = (lo + win.len() as i64).max(n1 + 1).max(n2 + 1);
    let lo = lo.min(n1).min(n2);
    let window: Vec<Step> = (lo..hi)
        .map(|n| {
            if n == n1 || n == n2 {
                match w.at(n) {
                    Step::Up => Step::Down,
                    Step::Down => Step::Up,
                }
            } else {
                w.at(n)
            }
        })
        .collect();
    partition_of(&AbacusWord::new(window, lo))
}

/// The abacus bijection: peel tiles from the top, labeling the box that
/// leaves the k-quotient at each step.
pub fn sw(t: &RibbonTableau, k: usize) -> Result<TupleYoungTableau> {
    let shape = t.shape();
    let data = k_quotient(&shape, k)?;
    if *t.base() != data.core {
        return Err(Error::invalid(
            "tableau",
            format!("base {:?} is not the {k}-core {:?}", t.base(), data.core),
        ));
    }
    let mut labels: Vec<BTreeMap<(usize, usize), u64>> = vec![BTreeMap::new(); k];
    let mut cur = shape;
    let mut q_cur = data.quotient.clone();
    for (r, tile) in t.tiles().iter().enumerate().rev() {
        let smaller_region = young_region(&cur).difference(&tile.region());
        let smaller = region_to_partition(&smaller_region)?;
        let q_smaller = k_quotient(&smaller, k)?.quotient;
        // locate the component that shrank
        let n = tile.leftmost_real();
        let j = n.rem_euclid(k as i64) as usize;
        if q_cur[j] == q_smaller[j] {
            return Err(Error::invalid(
                "tableau",
                format!("tile {} did not shrink component {j}", r + 1),
            ));
        }
        let diff = young_region(&q_cur[j]).difference(&young_region(&q_smaller[j]));
        let b = diff.boxes().next().expect("single-box difference");
        debug_assert_eq!(diff.len(), 1);
        let (i, jj) = (((b.y + b.x + 1) / 2) as usize, ((b.y - b.x + 1) / 2) as usize);
        labels[j].insert((i, jj), r as u64 + 1);
        cur = smaller;
        q_cur = q_smaller;
    }
    let components: Result<Vec<StrictYoungTableau>> = data
        .quotient
        .iter()
        .zip(&labels)
        .map(|(shape, lab)| {
            let entries: Vec<Vec<u64>> = shape
                .parts()
                .iter()
                .enumerate()
                .map(|(i0, &len)| {
                    (1..=len as usize).map(|jj| lab[&(i0 + 1, jj)]).collect()
                })
                .collect();
            StrictYoungTableau::new(shape.clone(), entries)
        })
        .collect();
    TupleYoungTableau::new(components?)
}

/// Inverse of the abacus bijection: grow from the core, adding the tile
/// indicated by each label in increasing order.
pub fn sw_inverse(t: &TupleYoungTableau, charges: &Charges, k: usize) -> Result<RibbonTableau> {
    if t.components().len() != k {
        return Err(Error::invalid(
            "tuple tableau",
            format!("expected {k} components, got {}", t.components().len()),
        ));
    }
    let core = core_of_charges(charges, k)?;
    let m = t.size() as u64;
    // label -> (component, part lengths prefix): rebuild each component
    // partition as labels are added
    let mut where_is: BTreeMap<u64, (usize, usize)> = BTreeMap::new();
    for (j, comp) in t.components().iter().enumerate() {
        for (i0, row) in comp.entries().iter().enumerate() {
            for &v in row {
                where_is.insert(v, (j, i0));
            }
        }
    }
    let mut comps: Vec<Vec<u64>> = vec![Vec::new(); k];
    let mut cur = core.clone();
    let mut tiles = Vec::with_capacity(m as usize);
    for r in 1..=m {
        let &(j, i0) = where_is
            .get(&r)
            .ok_or_else(|| Error::invalid("tuple tableau", format!("label {r} missing")))?;
        while comps[j].len() <= i0 {
            comps[j].push(0);
        }
        comps[j][i0] += 1;
        let quotient: Result<Vec<Partition>> = comps
            .iter()
            .map(|parts| {
                Partition::new(parts.iter().copied().filter(|&p| p > 0).collect()).map_err(|_| {
                    Error::invalid("tuple tableau", format!("prefix at label {r} is not a partition"))
                })
            })
            .collect();
        let next = from_quotient(&quotient?, charges, k)?;
        let tile = Ribbon::new(
            young_region(&next).difference(&young_region(&cur)).boxes(),
        )?;
        if tile.len() != k {
            return Err(Error::invalid(
                "tuple tableau",
                format!("label {r} does not add a {k}-ribbon"),
            ));
        }
        tiles.push(tile);
        cur = next;
    }
    RibbonTableau::new(core, tiles)
}

/// All orderings of a tiling's tiles that form ribbon tableaux over the
/// given base (the linear extensions of the below-ness order).
pub fn tableaux_of(t: &RibbonTiling, base: &Partition) -> Result<Vec<RibbonTableau>> {
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    let mut used = vec![false; t.len()];
    let mut region = young_region(base);
    rec(t, base, &mut chosen, &mut used, &mut region, &mut out)?;
    return Ok(out);

    fn rec(
        t: &RibbonTiling,
        base: &Partition,
        chosen: &mut Vec<usize>,
        used: &mut [bool],
        region: &mut SquareRegion,
        out: &mut Vec<RibbonTableau>,
    ) -> Result<()> {
        if chosen.len() == t.len() {
            out.push(RibbonTableau::new(
                base.clone(),
                chosen.iter().map(|&i| t.tiles()[i].clone()),
            )?);
            return Ok(());
        }
        // tiles are already sorted by minimal box, so index order is the
        // deterministic tie-break
        for i in 0..t.len() {
            if used[i] {
                continue;
            }
            let tile = &t.tiles()[i];
            let bigger = region.union(&tile.region());
            if region_to_partition(&bigger).is_ok() {
                used[i] = true;
                chosen.push(i);
                let saved = std::mem::replace(region, bigger);
                rec(t, base, chosen, used, region, out)?;
                *region = saved;
                chosen.pop();
                used[i] = false;
            }
        }
        Ok(())
    }
}

/// All k-ribbon tableaux of shape lambda over its k-core, generated by
/// repeatedly adding addable ribbons.
pub fn all_tableaux(lambda: &Partition, k: usize) -> Result<Vec<RibbonTableau>> {
    let core = k_quotient(lambda, k)?.core;
    let target = young_region(lambda);
    let mut out = Vec::new();
    let mut tiles: Vec<Ribbon> = Vec::new();
    grow(&core, &core.clone(), &target, k, &mut tiles, &mut out)?;
    return Ok(out);

    fn grow(
        core: &Partition,
        cur: &Partition,
        target: &SquareRegion,
        k: usize,
        tiles: &mut Vec<Ribbon>,
        out: &mut Vec<RibbonTableau>,
    ) -> Result<()> {
        if young_region(cur) == *target {
            out.push(RibbonTableau::new(core.clone(), tiles.clone())?);
            return Ok(());
        }
        for n in addable_positions(cur, k) {
            let (next, tile) = add_ribbon(cur, n, k)?;
            if young_region(&next).is_subset(target) {
                tiles.push(tile);
                grow(core, &next, target, k, tiles, out)?;
                tiles.pop();
            }
        }
        Ok(())
    }
}

/// All unordered k-ribbon tilings of lambda (deduplicated tableaux).
pub fn all_tilings(lambda: &Partition, k: usize) -> Result<Vec<RibbonTiling>> {
    let mut tilings: Vec<RibbonTiling> =
        all_tableaux(lambda, k)?.iter().map(RibbonTableau::tiling).collect();
    tilings.sort();
    tilings.dedup();
    Ok(tilings)
}

/// One half of a box, tracked through strip surgery: the x-coordinate of
/// its vertical edge (the box center), its height, and its side.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
struct Half {
    edge: i64,
    y: i64,
    left: bool,
}

/// Compress a k-ribbon tiling of lambda (empty k-core, component j of the
/// quotient empty) into a (k-1)-ribbon tiling of the reduced partition.
pub fn compress(t: &RibbonTiling, k: usize, j: usize) -> Result<RibbonTiling> {
    compress_strips(t, k, &[j])
}

/// Remark-4.4 generalization: remove several empty components at once.
pub fn compress_multi(t: &RibbonTiling, k: usize, js: &[usize]) -> Result<RibbonTiling> {
    compress_strips(t, k, js)
}

fn check_strip_args(k: usize, js: &[usize]) -> Result<()> {
    if js.is_empty() || js.len() >= k {
        return Err(Error::domain(format!(
            "need between 1 and {} strip classes, got {}",
            k - 1,
            js.len()
        )));
    }
    let mut seen = js.to_vec();
    seen.sort_unstable();
    seen.dedup();
    if seen.len() != js.len() || seen.iter().any(|&j| j >= k) {
        return Err(Error::domain(format!("strip classes {js:?} invalid for k = {k}")));
    }
    Ok(())
}

fn compress_strips(t: &RibbonTiling, k: usize, js: &[usize]) -> Result<RibbonTiling> {
    check_strip_args(k, js)?;
    let lambda = region_to_partition(&t.region())?;
    let data = k_quotient(&lambda, k)?;
    if !data.charges.is_zero() {
        return Err(Error::invalid(
            "tiling",
            format!("{k}-charges {:?} are not zero", data.charges.0),
        ));
    }
    for &j in js {
        if !data.quotient[j].is_empty() {
            return Err(Error::invalid(
                "tiling",
                format!("quotient component {j} is {:?}, not empty", data.quotient[j]),
            ));
        }
    }
    let green = |r: i64| js.iter().any(|&j| r.rem_euclid(k as i64) == j as i64);
    let shift = |strip: i64| -> (i64, i64) {
        // (dx, dy) applied to the half in this strip
        if strip >= 0 {
            let m = (0..strip).filter(|&r| green(r)).count() as i64;
            (-m, -m)
        } else {
            let m = (strip + 1..0).filter(|&r| green(r)).count() as i64;
            (m, -m)
        }
    };
    let kk = k - js.len();
    let mut reduced: Vec<Partition> = Vec::with_capacity(kk);
    for (idx, q) in data.quotient.iter().enumerate() {
        if !js.contains(&idx) {
            reduced.push(q.clone());
        }
    }
    // the 1-quotient of a partition is the partition itself
    let rho = if kk == 1 {
        reduced[0].clone()
    } else {
        from_quotient(&reduced, &Charges::zeros(kk), kk)?
    };
    let mut new_tiles = Vec::with_capacity(t.len());
    for tile in t.tiles() {
        let mut halves: Vec<Half> = Vec::new();
        for b in tile.boxes() {
            for (strip, left) in [(b.x - 1, true), (b.x, false)] {
                if green(strip) {
                    continue;
                }
                let (dx, dy) = shift(strip);
                halves.push(Half { edge: b.x + dx, y: b.y + dy, left });
            }
        }
        new_tiles.push(pair_halves(&halves, kk)?);
    }
    let result = RibbonTiling::new(new_tiles)?;
    if result.region() != young_region(&rho) {
        return Err(Error::invalid("tiling", "compressed tiles do not tile the target".to_string()));
    }
    Ok(result)
}

/// Reassemble halves into boxes: a box needs a left and a right half at
/// the same edge and height. A lone half is completed into a full box
/// (used by the inverse lift, where the missing half fills a reinserted
/// strip).
fn pair_halves(halves: &[Half], ribbon_len: usize) -> Result<Ribbon> {
    let mut boxes: Vec<SquareBox> = Vec::new();
    let mut lefts: BTreeMap<(i64, i64), u32> = BTreeMap::new();
    let mut rights: BTreeMap<(i64, i64), u32> = BTreeMap::new();
    for h in halves {
        *(if h.left { &mut lefts } else { &mut rights }).entry((h.edge, h.y)).or_insert(0) += 1;
    }
    for (&(e, y), &c) in lefts.iter() {
        if c > 1 || rights.get(&(e, y)).copied().unwrap_or(0) > 1 {
            return Err(Error::invalid("tiling", "halves collide during surgery".to_string()));
        }
        boxes.push(SquareBox::at(e, y));
        rights.remove(&(e, y));
    }
    for (&(e, y), &c) in rights.iter() {
        if c > 1 {
            return Err(Error::invalid("tiling", "halves collide during surgery".to_string()));
        }
        boxes.push(SquareBox::at(e, y));
    }
    let r = Ribbon::new(boxes)?;
    if r.len() != ribbon_len {
        return Err(Error::invalid(
            "tiling",
            format!("surgery produced a {}-ribbon, expected {}", r.len(), ribbon_len),
        ));
    }
    Ok(r)
}

/// Lift a (k-1)-ribbon tiling of rho to the unique k-ribbon tiling of
/// lambda (quotient of rho with an empty component inserted at slot j)
/// that compresses to it.
pub fn compress_inverse(d: &RibbonTiling, k: usize, j: usize) -> Result<RibbonTiling> {
    check_strip_args(k, &[j])?;
    let kk = k - 1;
    let rho = region_to_partition(&d.region())?;
    let data = if rho.is_empty() || kk == 1 {
        None // the 1-core is always empty
    } else {
        Some(k_quotient(&rho, kk)?)
    };
    if let Some(data) = &data {
        if !data.charges.is_zero() {
            return Err(Error::invalid(
                "tiling",
                format!("{kk}-charges {:?} are not zero", data.charges.0),
            ));
        }
    }
    let green = |r: i64| r.rem_euclid(k as i64) == j as i64;
    // map a strip index of rho back to the corresponding non-green strip
    // of lambda
    let unmap_strip = |v: i64| -> i64 {
        if v >= 0 {
            let mut u = 0i64;
            let mut seen = 0i64;
            loop {
                if !green(u) {
                    if seen == v {
                        return u;
                    }
                    seen += 1;
                }
                u += 1;
            }
        } else {
            let mut u = -1i64;
            let mut seen = -1i64;
            loop {
                if !green(u) {
                    if seen == v {
                        return u;
                    }
                    seen -= 1;
                }
                u -= 1;
            }
        }
    };
    let mut new_tiles = Vec::with_capacity(d.len());
    for tile in d.tiles() {
        let mut halves: Vec<Half> = Vec::new();
        for b in tile.boxes() {
            for (strip, left) in [(b.x - 1, true), (b.x, false)] {
                let u = unmap_strip(strip);
                // the half slides back out by |u - strip| strips, and up
                // by the same amount
                halves.push(Half {
                    edge: b.x + (u - strip),
                    y: b.y + (u - strip).abs(),
                    left,
                });
            }
        }
        new_tiles.push(pair_halves(&halves, k)?);
    }
    let result = RibbonTiling::new(new_tiles)?;
    // the union must be the Young diagram of the expanded partition
    region_to_partition(&result.region())?;
    Ok(result)
}
