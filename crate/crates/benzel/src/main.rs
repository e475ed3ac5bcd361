//! Command-line front end: region generation, transfer, bijection demos,
//! enumeration, verification, and rendering.
//!
//! Exit codes: 0 success, 1 check failure or zero tilings, 2 usage error.

use std::io::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use benzel::hexgrid::{benzel, HexKind};
use benzel::render::{self, Format, Overlays};
use benzel::ribbons::{all_tableaux, all_tilings, compress, region_to_partition, sw};
use benzel::tiler::{
    count_hex_tilings, count_square_tilings, enumerate_hex_tilings, enumerate_square_tilings,
    HexTiling, SquareTiling,
};
use benzel::transfer::{transfer_region, SquareKind, SquareRegion};
use benzel::verify::{self, Budget, CheckReport};
use benzel::young::{abacus_word, k_quotient, lambda_n, young_region, Partition};
use benzel::{Error, Result};

#[derive(Parser)]
#[command(name = "benzel", version, about = "Stones-and-bones tilings of benzels")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate the (a,b)-benzel
    Gen {
        a: i64,
        b: i64,
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Transfer the (a,b)-benzel to the square grid
    Transfer {
        a: i64,
        b: i64,
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Abacus views of a partition: word, quotient, core, or charges
    Abacus {
        #[arg(value_parser = ["word", "quotient", "core", "charges"])]
        view: String,
        /// partition as comma-separated parts, or "-" for empty
        partition: String,
        #[arg(long, default_value_t = 3)]
        k: usize,
    },
    /// Demonstrate the abacus bijection on all ribbon tableaux of a shape
    Sw {
        /// partition as comma-separated parts
        shape: String,
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Demonstrate Compress on all k-ribbon tilings of a shape
    Compress {
        /// partition as comma-separated parts
        shape: String,
        #[arg(long, default_value_t = 3)]
        k: usize,
        /// empty quotient slot to delete
        #[arg(long, default_value_t = 0)]
        j: usize,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Count tilings of a region (exit 1 if the count is zero)
    Count {
        #[command(flatten)]
        region: RegionArgs,
        /// allowed prototiles, e.g. LS,RB,FB
        #[arg(long, default_value = "RS,LS,VB,RB,FB")]
        tiles: String,
    },
    /// Enumerate tilings (exit 1 if there are none)
    Enumerate {
        #[command(flatten)]
        region: RegionArgs,
        #[arg(long, default_value = "RS,LS,VB,RB,FB")]
        tiles: String,
        #[arg(long)]
        limit: Option<usize>,
        /// write one JSON file per tiling into this directory
        #[arg(long)]
        emit: Option<std::path::PathBuf>,
    },
    /// Run the theorem/conjecture harness
    Verify {
        #[arg(value_parser = ["all", "thm1", "thm2", "thm3", "conjecture", "invariant"])]
        what: String,
        #[arg(long)]
        max_sum: Option<i64>,
        #[arg(long)]
        json: bool,
    },
    /// Render a region or one of its tilings
    Render {
        #[command(flatten)]
        region: RegionArgs,
        #[arg(long)]
        tiles: Option<String>,
        /// render the i-th tiling (0-based) instead of the bare region
        #[arg(long)]
        index: Option<usize>,
        #[arg(long, default_value = "svg")]
        format: String,
        /// overlay green strips for residue J of K, as "K,J"
        #[arg(long)]
        green: Option<String>,
        /// overlay the red borders of lambda_n's band decomposition
        #[arg(long)]
        red_borders: Option<u64>,
        #[arg(long, short)]
        out: Option<std::path::PathBuf>,
    },
}

/// A region given as a benzel, a lambda_n diagram, or a partition shape.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct RegionArgs {
    /// benzel parameters "a,b"
    #[arg(long)]
    benzel: Option<String>,
    /// the nested-V partition lambda_n
    #[arg(long)]
    lambda: Option<u64>,
    /// an arbitrary partition's Young diagram, comma-separated parts
    #[arg(long)]
    shape: Option<String>,
}

/// Either grid's region, hex preferred when it is available.
enum Region {
    Hex(benzel::hexgrid::HexRegion),
    Square(SquareRegion),
}

impl RegionArgs {
    fn build(&self) -> Result<Region> {
        if let Some(s) = &self.benzel {
            let (a, b) = parse_pair(s)?;
            return Ok(Region::Hex(benzel(a, b)?));
        }
        if let Some(n) = self.lambda {
            return Ok(Region::Square(young_region(&lambda_n(n)?)));
        }
        if let Some(s) = &self.shape {
            return Ok(Region::Square(young_region(&Partition::parse(s)?)));
        }
        unreachable!("clap enforces one of the three");
    }
}

fn parse_pair(s: &str) -> Result<(i64, i64)> {
    let parts: Vec<&str> = s.split(',').collect();
    let err = || Error::Parse(format!("expected \"a,b\", got {s:?}"));
    if parts.len() != 2 {
        return Err(err());
    }
    Ok((
        parts[0].trim().parse().map_err(|_| err())?,
        parts[1].trim().parse().map_err(|_| err())?,
    ))
}

fn parse_tiles(s: &str) -> Result<Vec<HexKind>> {
    let mut kinds = Vec::new();
    for name in s.split(',') {
        let k = HexKind::from_short_name(name.trim())?;
        if !kinds.contains(&k) {
            kinds.push(k);
        }
    }
    Ok(kinds)
}

fn region_json(r: &Region) -> serde_json::Value {
    match r {
        Region::Hex(h) => json!({ "grid": "hex", "cells": h.sorted_coords() }),
        Region::Square(s) => json!({ "grid": "square", "boxes": s.sorted_coords() }),
    }
}

fn hex_tiling_json(t: &HexTiling) -> serde_json::Value {
    json!({
        "grid": "hex",
        "placements": t.placements().iter().map(|p| json!({
            "kind": p.kind.short_name(),
            "anchor": [p.anchor.center.a, p.anchor.center.b],
        })).collect::<Vec<_>>(),
    })
}

fn square_tiling_json(t: &SquareTiling) -> serde_json::Value {
    json!({
        "grid": "square",
        "placements": t.placements().iter().map(|p| json!({
            "kind": p.kind.hex_kind().short_name(),
            "anchor": [p.anchor.x, p.anchor.y],
        })).collect::<Vec<_>>(),
    })
}

/// Enumerated tilings of either grid, with shared accessors for output.
enum Tilings {
    Hex(Vec<HexTiling>),
    Square(Vec<SquareTiling>),
}

impl Tilings {
    fn len(&self) -> usize {
        match self {
            Tilings::Hex(v) => v.len(),
            Tilings::Square(v) => v.len(),
        }
    }

    fn json(&self, i: usize) -> serde_json::Value {
        match self {
            Tilings::Hex(v) => hex_tiling_json(&v[i]),
            Tilings::Square(v) => square_tiling_json(&v[i]),
        }
    }
}

fn enumerate(region: &Region, tiles: &[HexKind], limit: Option<usize>) -> Result<Tilings> {
    match region {
        Region::Hex(h) => {
            // square mode suffices (and is ground truth anyway for
            // 3-ribbon subsets); hex mode handles the vertical bone
            Ok(Tilings::Hex(enumerate_hex_tilings(h, tiles, limit)?))
        }
        Region::Square(s) => {
            let kinds: Vec<SquareKind> = tiles.iter().map(|k| k.square_kind()).collect();
            Ok(Tilings::Square(enumerate_square_tilings(s, &kinds, limit)?))
        }
    }
}

fn count(region: &Region, tiles: &[HexKind]) -> Result<num_bigint::BigUint> {
    match region {
        Region::Hex(h) => count_hex_tilings(h, tiles),
        Region::Square(s) => {
            let kinds: Vec<SquareKind> = tiles.iter().map(|k| k.square_kind()).collect();
            count_square_tilings(s, &kinds)
        }
    }
}

fn print_reports(reports: &[CheckReport], as_json: bool) -> bool {
    let mut all_pass = true;
    for r in reports {
        all_pass &= r.passed();
        if as_json {
            println!("{}", serde_json::to_string(r).expect("serializable"));
        } else {
            println!(
                "{}: {} ({} instances, {} ms)",
                r.name,
                r.verdict,
                r.instances.len(),
                r.elapsed_ms
            );
            for f in r.failures() {
                println!("  FAIL {}: expected {}, observed {}", f.params, f.expected, f.observed);
            }
        }
    }
    all_pass
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Gen { a, b, format } => {
            let region = Region::Hex(benzel(a, b)?);
            emit_region(&region, format.parse()?, None)?;
        }
        Command::Transfer { a, b, format } => {
            let region = Region::Square(transfer_region(&benzel(a, b)?));
            emit_region(&region, format.parse()?, None)?;
        }
        Command::Abacus { view, partition, k } => {
            let p = Partition::parse(&partition)?;
            match view.as_str() {
                "word" => println!("{}", abacus_word(&p).to_text()),
                _ => {
                    let data = k_quotient(&p, k)?;
                    let out = match view.as_str() {
                        "quotient" => json!({
                            "quotient": data.quotient.iter().map(|q| q.to_string()).collect::<Vec<_>>(),
                            "charges": data.charges.0,
                            "core": data.core.to_string(),
                        }),
                        "core" => json!(data.core.to_string()),
                        _ => json!(data.charges.0),
                    };
                    println!("{out}");
                }
            }
        }
        Command::Sw { shape, k, limit } => {
            let p = Partition::parse(&shape)?;
            let tableaux = all_tableaux(&p, k)?;
            for t in tableaux.iter().take(limit.unwrap_or(usize::MAX)) {
                let image = sw(t, k)?;
                let line = json!({
                    "tiles": t.tiles().iter().map(|r| r.boxes().iter().map(|b| [b.x, b.y]).collect::<Vec<_>>()).collect::<Vec<_>>(),
                    "tuple": image.components().iter().map(|c| json!({
                        "shape": c.shape().to_string(),
                        "entries": c.entries(),
                    })).collect::<Vec<_>>(),
                });
                println!("{line}");
            }
        }
        Command::Compress { shape, k, j, limit } => {
            let p = Partition::parse(&shape)?;
            let tilings = all_tilings(&p, k)?;
            for t in tilings.iter().take(limit.unwrap_or(usize::MAX)) {
                let d = compress(t, k, j)?;
                let line = json!({
                    "tiles": t.tiles().iter().map(|r| r.boxes().iter().map(|b| [b.x, b.y]).collect::<Vec<_>>()).collect::<Vec<_>>(),
                    "compressed_shape": region_to_partition(&d.region())?.to_string(),
                    "compressed_tiles": d.tiles().iter().map(|r| r.boxes().iter().map(|b| [b.x, b.y]).collect::<Vec<_>>()).collect::<Vec<_>>(),
                });
                println!("{line}");
            }
        }
        Command::Count { region, tiles } => {
            let region = region.build()?;
            let n = count(&region, &parse_tiles(&tiles)?)?;
            println!("{n}");
            if n == num_bigint::BigUint::ZERO {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Enumerate { region, tiles, limit, emit } => {
            let region = region.build()?;
            let tilings = enumerate(&region, &parse_tiles(&tiles)?, limit)?;
            if let Some(dir) = &emit {
                std::fs::create_dir_all(dir)?;
                for i in 0..tilings.len() {
                    let path = dir.join(format!("tiling_{i:06}.json"));
                    let mut f = std::fs::File::create(path)?;
                    writeln!(f, "{}", tilings.json(i))?;
                }
                eprintln!("wrote {} tilings to {}", tilings.len(), dir.display());
            } else {
                for i in 0..tilings.len() {
                    println!("{}", tilings.json(i));
                }
            }
            if tilings.len() == 0 {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Verify { what, max_sum, json } => {
            let mut budget = Budget::from_env();
            if let Some(m) = max_sum {
                budget = Budget { five_proto_max_sum: m, ribbon_max_sum: m };
            }
            let reports = match what.as_str() {
                "all" => verify::verify_all(budget)?,
                "thm1" => vec![verify::verify_unique_right_stones(budget.five_proto_max_sum)?],
                "thm2" => vec![verify::verify_mountainless(budget.ribbon_max_sum)?],
                "thm3" => vec![verify::verify_valleyless(budget.ribbon_max_sum)?],
                "conjecture" => vec![verify::check_conjecture(budget.ribbon_max_sum)?],
                _ => vec![
                    verify::verify_size_formula(budget.ribbon_max_sum)?,
                    verify::verify_coincidences(budget.ribbon_max_sum)?,
                    verify::verify_bone_collapse(budget.five_proto_max_sum.min(12))?,
                    verify::verify_cl_constancy(budget.five_proto_max_sum)?,
                ],
            };
            if !print_reports(&reports, json) {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Render { region, tiles, index, format, green, red_borders, out } => {
            let built = region.build()?;
            let format: Format = format.parse()?;
            let tiling = match index {
                None => None,
                Some(i) => {
                    let kinds = parse_tiles(tiles.as_deref().unwrap_or("RS,LS,VB,RB,FB"))?;
                    let ts = enumerate(&built, &kinds, Some(i + 1))?;
                    if ts.len() <= i {
                        return Err(Error::domain(format!(
                            "tiling index {i} out of range (found {})",
                            ts.len()
                        )));
                    }
                    Some((ts, i))
                }
            };
            let overlays = Overlays {
                green_strips: match green {
                    None => None,
                    Some(s) => {
                        let (k, j) = parse_pair(&s)?;
                        Some((k as usize, j as usize))
                    }
                },
                red_borders_lambda_n: red_borders,
            };
            let text = render_text(&built, tiling.as_ref(), format, &overlays)?;
            match out {
                None => print!("{text}"),
                Some(path) => std::fs::write(path, text)?,
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn emit_region(region: &Region, format: Format, overlays: Option<&Overlays>) -> Result<()> {
    let text = render_text(region, None, format, overlays.unwrap_or(&Overlays::default()))?;
    print!("{text}");
    Ok(())
}

fn render_text(
    region: &Region,
    tiling: Option<&(Tilings, usize)>,
    format: Format,
    overlays: &Overlays,
) -> Result<String> {
    let picked_hex = match tiling {
        Some((Tilings::Hex(v), i)) => Some(&v[*i]),
        _ => None,
    };
    let picked_square = match tiling {
        Some((Tilings::Square(v), i)) => Some(&v[*i]),
        _ => None,
    };
    Ok(match (region, format) {
        (_, Format::Json) => match tiling {
            Some((ts, i)) => format!("{}\n", ts.json(*i)),
            None => format!("{}\n", region_json(region)),
        },
        (Region::Hex(h), Format::Svg) => render::svg_hex(h, picked_hex, 24.0),
        (Region::Hex(h), Format::Ascii) => render::ascii_hex(h, picked_hex),
        (Region::Square(s), Format::Svg) => render::svg_square(s, picked_square, overlays, 24.0),
        (Region::Square(s), Format::Ascii) => render::ascii_square(s, picked_square),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Error::Parse(msg)) | Err(Error::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
