//! SVG and ASCII rendering of hex/square regions and tilings, with
//! optional green-strip and red-border overlays on Russian-notation
//! diagrams.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::hexgrid::{HexCell, HexKind, HexRegion};
use crate::tiler::{HexTiling, SquareTiling};
use crate::transfer::{SquareBox, SquareKind, SquareRegion};
use crate::young::{lambda_n, young_region};
use crate::Result;

/// Output format selector shared by the CLI renderers.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Format {
    Svg,
    Ascii,
    Json,
}

impl std::str::FromStr for Format {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "svg" => Ok(Format::Svg),
            "ascii" => Ok(Format::Ascii),
            "json" => Ok(Format::Json),
            other => Err(crate::Error::Parse(format!(
                "unknown format {other:?} (expected svg, ascii, or json)"
            ))),
        }
    }
}

fn default_palette() -> BTreeMap<&'static str, &'static str> {
    BTreeMap::from([
        ("RS", "#d95f02"),
        ("LS", "#7570b3"),
        ("VB", "#1b9e77"),
        ("RB", "#e7298a"),
        ("FB", "#66a61e"),
        ("region", "#d0d0d0"),
    ])
}

fn svg_header(min_x: f64, min_y: f64, w: f64, h: f64, scale: f64) -> String {
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{:.2} {:.2} {:.2} {:.2}\" width=\"{:.0}\" height=\"{:.0}\">\n",
        min_x, min_y, w, h, w * scale, h * scale
    )
}

fn polygon(points: &[(f64, f64)], fill: &str, stroke: &str, width: f64) -> String {
    let pts: Vec<String> = points.iter().map(|(x, y)| format!("{x:.3},{y:.3}")).collect();
    format!(
        "  <polygon points=\"{}\" fill=\"{}\" stroke=\"{}\" stroke-width=\"{:.3}\"/>\n",
        pts.join(" "),
        fill,
        stroke,
        width
    )
}

/// Cartesian position of an Eisenstein point (y grows upward; callers
/// flip for SVG).
fn eisenstein_xy(a: i64, b: i64) -> (f64, f64) {
    let sqrt3 = 3f64.sqrt();
    (a as f64 - b as f64 / 2.0, b as f64 * sqrt3 / 2.0)
}

fn hex_cell_polygon(cell: HexCell) -> Vec<(f64, f64)> {
    // order the six vertices around the center by angle
    let (cx, cy) = eisenstein_xy(cell.center.a, cell.center.b);
    let mut vs: Vec<(f64, f64)> = cell
        .vertices()
        .iter()
        .map(|p| eisenstein_xy(p.a, p.b))
        .collect();
    vs.sort_by(|u, v| {
        let au = (u.1 - cy).atan2(u.0 - cx);
        let av = (v.1 - cy).atan2(v.0 - cx);
        au.partial_cmp(&av).unwrap()
    });
    vs.iter().map(|&(x, y)| (x, -y)).collect()
}

/// SVG for a hex region; if a tiling is given its tiles are colored by
/// kind over the region silhouette.
pub fn svg_hex(region: &HexRegion, tiling: Option<&HexTiling>, scale: f64) -> String {
    let palette = default_palette();
    let polys: Vec<(Vec<(f64, f64)>, &str)> = match tiling {
        None => region
            .cells()
            .map(|c| (hex_cell_polygon(c), palette["region"]))
            .collect(),
        Some(t) => t
            .placements()
            .iter()
            .flat_map(|p| {
                let fill = palette[p.kind.short_name()];
                p.cells().map(move |c| (hex_cell_polygon(c), fill))
            })
            .collect(),
    };
    let (mut lo_x, mut lo_y, mut hi_x, mut hi_y) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for (poly, _) in &polys {
        for &(x, y) in poly {
            lo_x = lo_x.min(x);
            lo_y = lo_y.min(y);
            hi_x = hi_x.max(x);
            hi_y = hi_y.max(y);
        }
    }
    if polys.is_empty() {
        (lo_x, lo_y, hi_x, hi_y) = (0.0, 0.0, 1.0, 1.0);
    }
    let mut s = svg_header(lo_x - 0.5, lo_y - 0.5, hi_x - lo_x + 1.0, hi_y - lo_y + 1.0, scale);
    for (poly, fill) in &polys {
        s += &polygon(poly, fill, "#333333", 0.06);
    }
    s += "</svg>\n";
    s
}

fn box_polygon(b: SquareBox) -> Vec<(f64, f64)> {
    let (x, y) = (b.x as f64, b.y as f64);
    vec![(x, -(y + 1.0)), (x + 1.0, -y), (x, -(y - 1.0)), (x - 1.0, -y)]
}

/// Optional overlays for Russian-notation drawings.
#[derive(Clone, Default)]
pub struct Overlays {
    /// shade strips with real part in class j mod k
    pub green_strips: Option<(usize, usize)>,
    /// draw the red borders of the band decomposition of lambda_n
    pub red_borders_lambda_n: Option<u64>,
}

/// SVG for a square region; tiles colored by kind when a tiling is given.
pub fn svg_square(
    region: &SquareRegion,
    tiling: Option<&SquareTiling>,
    overlays: &Overlays,
    scale: f64,
) -> String {
    let palette = default_palette();
    let polys: Vec<(Vec<(f64, f64)>, &str)> = match tiling {
        None => region
            .boxes()
            .map(|b| (box_polygon(b), palette["region"]))
            .collect(),
        Some(t) => t
            .placements()
            .iter()
            .flat_map(|p| {
                let fill = palette[p.kind.hex_kind().short_name()];
                p.boxes().map(move |b| (box_polygon(b), fill))
            })
            .collect(),
    };
    let xs: Vec<i64> = region.boxes().map(|b| b.x).collect();
    let ys: Vec<i64> = region.boxes().map(|b| b.y).collect();
    let (lo_x, hi_x) = (xs.iter().min().copied().unwrap_or(0), xs.iter().max().copied().unwrap_or(1));
    let (lo_y, hi_y) = (ys.iter().min().copied().unwrap_or(0), ys.iter().max().copied().unwrap_or(1));
    let mut s = svg_header(
        (lo_x - 2) as f64,
        (-(hi_y + 2)) as f64,
        (hi_x - lo_x + 4) as f64,
        (hi_y - lo_y + 4) as f64,
        scale,
    );
    if let Some((k, j)) = overlays.green_strips {
        for r in (lo_x - 1)..=(hi_x + 1) {
            if r.rem_euclid(k as i64) == j as i64 {
                let _ = write!(
                    s,
                    "  <rect x=\"{}\" y=\"{}\" width=\"1\" height=\"{}\" fill=\"#00aa0040\"/>\n",
                    r,
                    -(hi_y + 2),
                    hi_y - lo_y + 4
                );
            }
        }
    }
    for (poly, fill) in &polys {
        s += &polygon(poly, fill, "#333333", 0.05);
    }
    if let Some(n) = overlays.red_borders_lambda_n {
        s += &red_border_segments(n);
    }
    s += "</svg>\n";
    s
}

/// The red borders between the V-bands of lambda_n: box edges separating
/// band m from band m+1.
fn red_border_segments(n: u64) -> String {
    let mut band_of: BTreeMap<(i64, i64), u64> = BTreeMap::new();
    for m in (1..=n).rev() {
        if let Ok(region) = lambda_n(m).and_then(|p| {
            young_region(&p).translate(0, 4 * (n as i64 - m as i64))
        }) {
            for b in region.boxes() {
                band_of.insert((b.x, b.y), m);
            }
        }
    }
    let mut s = String::new();
    for (&(x, y), &m) in &band_of {
        // the upper-left and upper-right edges of this box against a box
        // of a different band
        for (nx, ny, e) in [
            (x - 1, y + 1, ((x - 1) as f64, -(y as f64), x as f64, -(y as f64 + 1.0))),
            (x + 1, y + 1, (x as f64, -(y as f64 + 1.0), (x + 1) as f64, -(y as f64))),
        ] {
            if band_of.get(&(nx, ny)).is_some_and(|&m2| m2 != m) {
                let _ = write!(
                    s,
                    "  <line x1=\"{:.1}\" y1=\"{:.1}\" x2=\"{:.1}\" y2=\"{:.1}\" stroke=\"#cc0000\" stroke-width=\"0.12\"/>\n",
                    e.0, e.1, e.2, e.3
                );
            }
        }
    }
    s
}

/// ASCII sketch of a square region or tiling: one character per box,
/// tiles lettered a, b, c, ... in placement order.
pub fn ascii_square(region: &SquareRegion, tiling: Option<&SquareTiling>) -> String {
    let mut ch: BTreeMap<(i64, i64), char> = BTreeMap::new();
    match tiling {
        None => {
            for b in region.boxes() {
                ch.insert((b.x, b.y), '#');
            }
        }
        Some(t) => {
            for (i, p) in t.placements().iter().enumerate() {
                let letter = (b'a' + (i % 26) as u8) as char;
                for b in p.boxes() {
                    ch.insert((b.x, b.y), letter);
                }
            }
        }
    }
    grid_to_text(&ch)
}

/// ASCII sketch of a hex region or tiling, cells projected to columns
/// `2a - b` and rows `b`.
pub fn ascii_hex(region: &HexRegion, tiling: Option<&HexTiling>) -> String {
    let mut ch: BTreeMap<(i64, i64), char> = BTreeMap::new();
    let proj = |c: HexCell| (2 * c.center.a - c.center.b, c.center.b);
    match tiling {
        None => {
            for c in region.cells() {
                ch.insert(proj(c), '#');
            }
        }
        Some(t) => {
            for (i, p) in t.placements().iter().enumerate() {
                let letter = (b'a' + (i % 26) as u8) as char;
                for c in p.cells() {
                    ch.insert(proj(c), letter);
                }
            }
        }
    }
    grid_to_text(&ch)
}

fn grid_to_text(ch: &BTreeMap<(i64, i64), char>) -> String {
    if ch.is_empty() {
        return String::from("(empty)\n");
    }
    let lo_x = ch.keys().map(|&(x, _)| x).min().unwrap();
    let hi_x = ch.keys().map(|&(x, _)| x).max().unwrap();
    let lo_y = ch.keys().map(|&(_, y)| y).min().unwrap();
    let hi_y = ch.keys().map(|&(_, y)| y).max().unwrap();
    let mut s = String::new();
    for y in (lo_y..=hi_y).rev() {
        let mut line = String::new();
        for x in lo_x..=hi_x {
            line.push(*ch.get(&(x, y)).unwrap_or(&' '));
        }
        s += line.trim_end();
        s.push('\n');
    }
    s
}

/// Keep the palette keyed by the user-facing kind names.
pub fn kind_color(kind: SquareKind) -> &'static str {
    default_palette()[kind.hex_kind().short_name()]
}

pub fn hex_kind_color(kind: HexKind) -> &'static str {
    default_palette()[kind.short_name()]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hexgrid::{benzel, HEX_KINDS};
    use crate::tiler::{enumerate_hex_tilings, enumerate_square_tilings, MOUNTAINLESS_KINDS};
    use crate::transfer::transfer_region;

    #[test]
    fn svg_hex_well_formed() {
        let b = benzel(3, 3).unwrap();
        let t = &enumerate_hex_tilings(&b, &HEX_KINDS, Some(1)).unwrap()[0];
        for svg in [svg_hex(&b, None, 20.0), svg_hex(&b, Some(t), 20.0)] {
            assert!(svg.starts_with("<svg "));
            assert!(svg.trim_end().ends_with("</svg>"));
            assert_eq!(svg.matches("<polygon").count(), b.len());
        }
    }

    #[test]
    fn svg_square_with_overlays() {
        let region = young_region(&lambda_n(2).unwrap());
        let t = &enumerate_square_tilings(&region, &MOUNTAINLESS_KINDS, Some(1)).unwrap()[0];
        let overlays = Overlays {
            green_strips: Some((3, 1)),
            red_borders_lambda_n: Some(2),
        };
        let svg = svg_square(&region, Some(t), &overlays, 20.0);
        assert!(svg.starts_with("<svg "));
        assert!(svg.contains("<rect "));
        assert!(svg.contains("stroke=\"#cc0000\""));
        assert_eq!(svg.matches("<polygon").count(), region.len());
    }

    #[test]
    fn ascii_outputs_are_printable() {
        let b = benzel(4, 5).unwrap();
        let sq = transfer_region(&b);
        for text in [
            ascii_hex(&b, None),
            ascii_square(&sq, None),
            ascii_square(&SquareRegion::new([]), None),
        ] {
            assert!(text.chars().all(|c| c == '\n' || (' '..='~').contains(&c)));
            assert!(!text.is_empty());
        }
        // a tiling paints exactly the region cells
        let t = &enumerate_square_tilings(&sq, &MOUNTAINLESS_KINDS, Some(1)).unwrap()[0];
        let painted = ascii_square(&sq, Some(t)).chars().filter(|c| c.is_ascii_lowercase()).count();
        assert_eq!(painted, sq.len());
    }

    #[test]
    fn format_parsing() {
        assert_eq!("svg".parse::<Format>().unwrap(), Format::Svg);
        assert!("png".parse::<Format>().is_err());
    }
}
