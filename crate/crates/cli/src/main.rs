//! Command-line front end: the `verify-paper` registry runner plus direct
//! access to the individual computations (Hilbert functions, determinant
//! line-bundle degrees, toric intersection data, index arithmetic, the
//! discriminant search, and the group-invariant dimensions).

use clap::{Parser, Subcommand};
use sextic_core::exactnum::{parse_rational, Rational};
use sextic_core::grouprep::{
    character_average, curve_symmetry_group, invariant_basis, sextic_symmetry_group,
    SpaceDescriptor, SymFactor,
};
use sextic_core::hilbert::{fit_odd_cubic, hypersurface_hilbert, HilbertSamples, OddCubic};
use sextic_core::invariants4d::{mu_ab, selfdual_index};
use sextic_core::kmline::km_pairings;
use sextic_core::registry;
use sextic_core::report;
use sextic_core::smoothcheck::{discriminant_eval, singular_points_search, SurfaceParams};
use sextic_core::toric::{
    edge_lattice_lengths, fan_and_intersections, polygon_area, support_numbers, LatticePolygon,
    SubLattice,
};
use serde_json::json;
use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "sextic",
    version,
    about = "Exact-arithmetic verification toolkit for the sextic moduli computations"
)]
struct Cli {
    /// Write the result as JSON to this path.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,

    /// Write the check reports as CSV to this path (verify-paper only).
    #[arg(long, global = true, value_name = "PATH")]
    csv: Option<PathBuf>,

    /// Seed for the randomized spot checks and the singularity search.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Only run checks whose id matches this glob ('*' wildcards).
    #[arg(long, global = true, value_name = "GLOB")]
    filter: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full check registry and report expected vs computed values.
    VerifyPaper,
    /// Hilbert function of a weighted hypersurface, graded by a twist.
    Hilbert {
        /// Ambient weights, comma separated.
        #[arg(long, default_value = "1,1,1,1,2")]
        weights: String,
        #[arg(long, default_value_t = 6)]
        hyp_degree: u32,
        #[arg(long, default_value_t = 2)]
        twist: u32,
        /// Single value "5" or inclusive range "1..10".
        #[arg(long, allow_hyphen_values = true, default_value = "1..10")]
        p: String,
    },
    /// Determinant line-bundle degrees for a cubic Hilbert polynomial.
    Km {
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true, default_value = "4")]
        alpha: Rational,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true, default_value = "7")]
        beta: Rational,
        /// Covering factor dividing the base parameter.
        #[arg(long, default_value_t = 6)]
        cover: u32,
    },
    /// Lattice polygon report: areas, edges, fan, intersection matrix.
    Toric {
        /// Vertices as "x,y;x,y;...".
        #[arg(long, allow_hyphen_values = true, default_value = "0,0;0,-6;-2,-6;-4,0")]
        polygon: String,
        /// Two lattice basis vectors as "x,y;x,y".
        #[arg(long, allow_hyphen_values = true, default_value = "1,1;1,-1")]
        lattice: String,
    },
    /// Virtual dimension of the negative self-dual harmonic space.
    Index {
        #[arg(long, allow_negative_numbers = true)]
        sigma: i64,
        #[arg(long, allow_negative_numbers = true)]
        e: i64,
    },
    /// The geography invariant 2(10 chi - 2 c1^2) from (c1^2, chi).
    Mu {
        #[arg(long, allow_negative_numbers = true)]
        a: i64,
        #[arg(long, allow_negative_numbers = true)]
        b: i64,
    },
    /// Discriminant values and a seeded numeric search for singular points.
    Smooth {
        #[arg(long = "A", value_parser = rational_arg, allow_hyphen_values = true)]
        a: Rational,
        #[arg(long = "B", value_parser = rational_arg, allow_hyphen_values = true)]
        b: Rational,
        #[arg(long, default_value_t = 1000)]
        attempts: u32,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Symmetry-group orders and invariant dimensions.
    Invariants,
}

fn rational_arg(text: &str) -> Result<Rational, String> {
    parse_rational(text).map_err(|e| e.to_string())
}

fn parse_pairs(text: &str) -> Result<Vec<(i64, i64)>, String> {
    text.split(';')
        .map(|chunk| {
            let (x, y) = chunk
                .split_once(',')
                .ok_or_else(|| format!("expected \"x,y\", got {chunk:?}"))?;
            let parse = |s: &str| {
                s.trim().parse::<i64>().map_err(|_| format!("bad integer {:?}", s.trim()))
            };
            Ok((parse(x)?, parse(y)?))
        })
        .collect()
}

fn parse_p_range(text: &str) -> Result<(i64, i64), String> {
    let bad = || format!("expected \"n\" or \"a..b\", got {text:?}");
    if let Some((lo, hi)) = text.split_once("..") {
        let lo = lo.trim().parse::<i64>().map_err(|_| bad())?;
        let hi = hi.trim().parse::<i64>().map_err(|_| bad())?;
        if lo > hi {
            return Err(format!("empty range {text:?}"));
        }
        Ok((lo, hi))
    } else {
        let p = text.trim().parse::<i64>().map_err(|_| bad())?;
        Ok((p, p))
    }
}

fn parse_weights(text: &str) -> Result<Vec<u32>, String> {
    let weights: Vec<u32> = text
        .split(',')
        .map(|s| s.trim().parse::<u32>().map_err(|_| format!("bad weight {:?}", s.trim())))
        .collect::<Result<_, _>>()?;
    if weights.is_empty() || weights.contains(&0) {
        return Err("weights must be positive".to_owned());
    }
    Ok(weights)
}

fn write_json(path: &Option<PathBuf>, value: &serde_json::Value) -> Result<(), String> {
    if let Some(path) = path {
        let mut text = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
        text.push('\n');
        fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    Ok(())
}

fn run_verify_paper(cli: &Cli) -> Result<i32, String> {
    let (reports, code) = registry::verify_paper(cli.filter.as_deref(), cli.seed);
    for r in &reports {
        println!(
            "[{}] {} ({}) expected {} | computed {} <{}>",
            r.status, r.id, r.section, r.expected, r.computed, r.provenance
        );
    }
    let matched = reports.iter().filter(|r| r.status == report::Status::Match).count();
    let flagged =
        reports.iter().filter(|r| r.status == report::Status::KnownDiscrepancy).count();
    let failing = reports.len() - matched - flagged;
    println!(
        "{} checks: {} match, {} known-discrepancy, {} failing",
        reports.len(),
        matched,
        flagged,
        failing
    );
    if code == 2 {
        eprintln!("filter {:?} matched no checks", cli.filter.as_deref().unwrap_or(""));
    }
    if let Some(path) = &cli.json {
        let text = report::to_json(&reports).map_err(|e| e.to_string())?;
        fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    if let Some(path) = &cli.csv {
        let text = report::to_csv(&reports).map_err(|e| e.to_string())?;
        fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    Ok(code)
}

fn run_hilbert(
    cli: &Cli,
    weights: &str,
    hyp_degree: u32,
    twist: u32,
    p: &str,
) -> Result<i32, String> {
    let weights = parse_weights(weights)?;
    let (lo, hi) = parse_p_range(p)?;
    let mut samples = Vec::new();
    for p in lo..=hi {
        let value = hypersurface_hilbert(&weights, hyp_degree, twist, p);
        println!("H({p}) = {value}");
        samples.push((p, i64::try_from(value).map_err(|_| "value overflows".to_owned())?));
    }
    let fit = HilbertSamples::new(samples.clone())
        .ok()
        .and_then(|s| fit_odd_cubic(&s).ok());
    match &fit {
        Some(cubic) => println!("odd cubic fit: ({}, {})", cubic.alpha, cubic.beta),
        None => println!("no odd cubic fits these values"),
    }
    write_json(
        &cli.json,
        &json!({
            "weights": weights,
            "hyp_degree": hyp_degree,
            "twist": twist,
            "values": samples,
            "fit": fit.map(|c| vec![c.alpha.to_string(), c.beta.to_string()]),
        }),
    )?;
    Ok(0)
}

fn run_km(cli: &Cli, alpha: &Rational, beta: &Rational, cover: u32) -> Result<i32, String> {
    if cover == 0 {
        return Err("cover must be positive".to_owned());
    }
    let degrees =
        km_pairings(&OddCubic { alpha: alpha.clone(), beta: beta.clone() }, cover);
    println!("deg L0 = {}", degrees.deg_l0);
    println!("deg L2 = {}", degrees.deg_l2);
    write_json(
        &cli.json,
        &json!({
            "alpha": alpha.to_string(),
            "beta": beta.to_string(),
            "cover": cover,
            "deg_l0": degrees.deg_l0.to_string(),
            "deg_l2": degrees.deg_l2.to_string(),
        }),
    )?;
    Ok(0)
}

fn run_toric(cli: &Cli, polygon: &str, lattice: &str) -> Result<i32, String> {
    let vertices = parse_pairs(polygon)?;
    let basis = parse_pairs(lattice)?;
    let [v1, v2] = basis[..] else {
        return Err("lattice needs exactly two basis vectors".to_owned());
    };
    let lat = SubLattice::new(v1, v2).map_err(|e| e.to_string())?;
    let poly = LatticePolygon::new(vertices)
        .and_then(|p| p.with_lattice(lat.clone()))
        .map_err(|e| e.to_string())?;
    let (std_area, norm_area) = polygon_area(&poly, &lat);
    let lengths = edge_lattice_lengths(&poly, &lat).map_err(|e| e.to_string())?;
    let (fan, matrix) = fan_and_intersections(&poly, &lat).map_err(|e| e.to_string())?;
    let supports = support_numbers(&poly, &lat).map_err(|e| e.to_string())?;

    let pair_list = |pairs: &[(i64, i64)]| {
        pairs.iter().map(|(x, y)| format!("({x}, {y})")).collect::<Vec<_>>().join(" ")
    };
    println!("vertices (canonical order): {}", pair_list(poly.vertices()));
    println!("standard area = {std_area}");
    println!("lattice-normalized area = {norm_area}");
    println!(
        "edge lattice lengths: [{}]",
        lengths.iter().map(u64::to_string).collect::<Vec<_>>().join(", ")
    );
    println!("fan rays: {}", pair_list(fan.rays()));
    println!(
        "adjacent cone determinants: [{}]",
        fan.cone_determinants().iter().map(i64::to_string).collect::<Vec<_>>().join(", ")
    );
    println!(
        "support numbers: [{}]",
        supports.iter().map(i64::to_string).collect::<Vec<_>>().join(", ")
    );
    let mut rows = Vec::new();
    println!("intersection matrix:");
    for i in 0..matrix.rows() {
        let row: Vec<String> = (0..matrix.cols()).map(|j| matrix.get(i, j).to_string()).collect();
        println!("  [{}]", row.join(", "));
        rows.push(row);
    }
    // a^T M a with a the support numbers doubles the normalized area.
    let self_pairing: Rational = (0..matrix.rows())
        .flat_map(|i| (0..matrix.cols()).map(move |j| (i, j)))
        .map(|(i, j)| {
            Rational::from_integer(supports[i].into())
                * Rational::from_integer(supports[j].into())
                * matrix.get(i, j)
        })
        .sum();
    println!("support class self-pairing = {self_pairing}");

    write_json(
        &cli.json,
        &json!({
            "vertices": poly.vertices(),
            "standard_area": std_area.to_string(),
            "normalized_area": norm_area.to_string(),
            "edge_lengths": lengths,
            "rays": fan.rays(),
            "cone_determinants": fan.cone_determinants(),
            "support_numbers": supports,
            "intersection_matrix": rows,
            "support_self_pairing": self_pairing.to_string(),
        }),
    )?;
    Ok(0)
}

fn run_index(cli: &Cli, sigma: i64, e: i64) -> Result<i32, String> {
    let index = selfdual_index(sigma, e);
    println!("index = {index}");
    write_json(
        &cli.json,
        &json!({ "sigma": sigma, "e": e, "index": index.to_string() }),
    )?;
    Ok(0)
}

fn run_mu(cli: &Cli, a: i64, b: i64) -> Result<i32, String> {
    let mu = mu_ab(a, b);
    println!("mu = {mu}");
    write_json(&cli.json, &json!({ "a": a, "b": b, "mu": mu }))?;
    Ok(0)
}

fn run_smooth(
    cli: &Cli,
    a: &Rational,
    b: &Rational,
    attempts: u32,
    tol: f64,
) -> Result<i32, String> {
    if !(tol > 0.0) {
        return Err("tol must be positive".to_owned());
    }
    let params = SurfaceParams::new(a.clone(), b.clone());
    let mut disc_values = Vec::new();
    for signs in [(1i8, 1i8), (1, -1), (-1, 1), (-1, -1)] {
        let value = discriminant_eval(&params, signs);
        let label = |s: i8| if s > 0 { '+' } else { '-' };
        println!("discriminant ({},{}) = {}", label(signs.0), label(signs.1), value);
        disc_values.push(value.to_string());
    }
    let hits = singular_points_search(&params, attempts, tol, cli.seed);
    let mut hit_rows = Vec::new();
    if hits.is_empty() {
        println!(
            "no singular points found in {attempts} attempts (not a smoothness proof)"
        );
    } else {
        println!("{} candidate singular points (tol {tol:e}):", hits.len());
        for hit in &hits {
            let mut coords = String::new();
            for c in &hit.point {
                let _ = write!(coords, "({:.6}{:+.6}i) ", c.re, c.im);
            }
            println!("  {} residual {:.3e}", coords.trim_end(), hit.residual);
            hit_rows.push(json!({
                "point": hit.point.iter().map(|c| [c.re, c.im]).collect::<Vec<_>>(),
                "residual": hit.residual,
            }));
        }
    }
    write_json(
        &cli.json,
        &json!({
            "a": a.to_string(),
            "b": b.to_string(),
            "attempts": attempts,
            "tol": tol,
            "seed": cli.seed,
            "discriminants": disc_values,
            "hits": hit_rows,
        }),
    )?;
    Ok(0)
}

fn run_invariants(cli: &Cli) -> Result<i32, String> {
    let sextic_group = sextic_symmetry_group();
    let curve_group = curve_symmetry_group();
    println!("sextic symmetry group (groups/G.txt): order {}", sextic_group.order());
    println!("curve symmetry group (groups/H.txt): order {}", curve_group.order());

    let tensor_sum = SpaceDescriptor::Sum(vec![
        SpaceDescriptor::TensorSym {
            factors: vec![
                SymFactor { vars: vec![0, 1], degree: 4 },
                SymFactor { vars: vec![2, 3], degree: 2 },
            ],
        },
        SpaceDescriptor::TensorSym {
            factors: vec![
                SymFactor { vars: vec![0, 1], degree: 2 },
                SymFactor { vars: vec![2, 3], degree: 4 },
            ],
        },
    ]);
    let spaces: [(&str, &sextic_core::grouprep::FiniteGroup, SpaceDescriptor); 4] = [
        ("degree-6 forms", &sextic_group, SpaceDescriptor::SymPower { degree: 6 }),
        ("dual wedge square", &sextic_group, SpaceDescriptor::DualWedgeSquare),
        ("bidegree (6,6)", &curve_group, SpaceDescriptor::Bihomogeneous { left: 6, right: 6 }),
        ("s4*s2 + s2*s4", &curve_group, tensor_sum),
    ];
    let mut table = Vec::new();
    for (label, group, space) in &spaces {
        let dim = invariant_basis(group, space).map_err(|e| e.to_string())?.len();
        let average = character_average(group, space).map_err(|e| e.to_string())?;
        println!("invariants in {label}: dimension {dim} (character average {average})");
        table.push(json!({ "space": label, "dimension": dim, "character_average": average }));
    }
    write_json(
        &cli.json,
        &json!({
            "g_order": sextic_group.order(),
            "h_order": curve_group.order(),
            "invariants": table,
        }),
    )?;
    Ok(0)
}

fn run(cli: &Cli) -> Result<i32, String> {
    match &cli.command {
        Command::VerifyPaper => run_verify_paper(cli),
        Command::Hilbert { weights, hyp_degree, twist, p } => {
            run_hilbert(cli, weights, *hyp_degree, *twist, p)
        }
        Command::Km { alpha, beta, cover } => run_km(cli, alpha, beta, *cover),
        Command::Toric { polygon, lattice } => run_toric(cli, polygon, lattice),
        Command::Index { sigma, e } => run_index(cli, *sigma, *e),
        Command::Mu { a, b } => run_mu(cli, *a, *b),
        Command::Smooth { a, b, attempts, tol } => run_smooth(cli, a, b, *attempts, *tol),
        Command::Invariants => run_invariants(cli),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(u8::try_from(code).unwrap_or(1)),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
