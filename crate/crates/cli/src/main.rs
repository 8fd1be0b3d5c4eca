mod report;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use linescheme_core::algebra::make_A;
use linescheme_core::fixtures::load_fixtures;
use linescheme_core::groebner::{dimension_degree_of_basis, Limits};
use linescheme_core::line_scheme::{
    compare_with_fixtures, component_catalog, line_scheme_from_displayed, line_scheme_ideal,
    verify_decomposition,
};
use linescheme_core::numeric::{
    enumerate_points, max_residual, six_lines_numeric, ComplexPoint, Tolerances,
};
use linescheme_core::plucker::{infinite_flags, lines_through_point};
use linescheme_core::point_scheme::{count_points, point_ideal, GenericPoints};
use linescheme_core::{Error, GaussianRational};

use report::Report;

#[derive(Parser)]
#[command(
    name = "linescheme",
    version,
    about = "Point and line schemes of the algebras A(gamma)"
)]
struct Cli {
    /// Parameter, a nonzero Gaussian rational such as `1`, `-4` or `1/2 + i`.
    #[arg(long, global = true, default_value = "1", allow_hyphen_values = true)]
    gamma: String,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Cap on S-pairs processed by one Buchberger run.
    #[arg(long, global = true, env = "LINESCHEME_MAX_PAIRS")]
    max_pairs: Option<usize>,
    /// Residual tolerance for numeric checks.
    #[arg(long, global = true, default_value_t = 1e-8)]
    tolerance: f64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Count the points of the point scheme and check σ.
    PointScheme {
        /// Also enumerate the points numerically.
        #[arg(long)]
        numeric: bool,
    },
    /// Build the 46 line-scheme polynomials and the component catalog.
    LineScheme {
        /// Verify the decomposition and compare with the stored list.
        #[arg(long)]
        verify: bool,
    },
    /// Lines of the line scheme through points of the point scheme.
    LinesThrough {
        /// Verify the six lines through the generic point exactly (default).
        #[arg(long)]
        symbolic: bool,
        /// Tabulate the six lines at every generic point numerically.
        #[arg(long)]
        numeric: bool,
        /// A coordinate point `e1`..`e4`, or `generic`.
        #[arg(long, default_value = "generic")]
        point: String,
    },
}

enum Failure {
    Usage(String),
    Verification(String),
    Resource(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceLimit(_) => Failure::Resource(e.to_string()),
            Error::ZeroGamma | Error::Syntax { .. } | Error::UnknownVariable(_) => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Verification(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok((report, ok)) => {
            match cli.format {
                Format::Text => print!("{}", report.text()),
                Format::Json => println!("{}", report.json()),
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Verification(m)) => {
            eprintln!("verification failed: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Resource(m)) => {
            eprintln!("{m}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: &Cli) -> Result<(Report, bool), Failure> {
    let gamma: GaussianRational = cli
        .gamma
        .parse()
        .map_err(|e: Error| Failure::Usage(format!("bad --gamma: {e}")))?;
    if gamma == GaussianRational::from_int(0) {
        return Err(Failure::Usage("gamma must be nonzero".into()));
    }
    if cli.tolerance.is_nan() || cli.tolerance <= 0.0 {
        return Err(Failure::Usage("--tolerance must be positive".into()));
    }
    let mut limits = Limits::default();
    if let Some(n) = cli.max_pairs {
        limits.max_pairs = n;
    }
    let tol = Tolerances {
        residual: cli.tolerance,
        ..Tolerances::default()
    };
    match &cli.command {
        Command::PointScheme { numeric } => point_scheme(&gamma, &limits, &tol, *numeric),
        Command::LineScheme { verify } => line_scheme(&gamma, &limits, *verify),
        Command::LinesThrough {
            symbolic,
            numeric,
            point,
        } => lines_through(&gamma, &limits, &tol, *symbolic, *numeric, point),
    }
}

fn point_scheme(
    gamma: &GaussianRational,
    limits: &Limits,
    tol: &Tolerances,
    numeric: bool,
) -> Result<(Report, bool), Failure> {
    let a = make_A(gamma)?;
    let r = count_points(&a, limits)?;
    let mut rep = Report::new("point-scheme", &gamma.to_string());
    rep.put("chart_counts", json!(r.chart_counts));
    rep.put("total", r.total);
    rep.put("distinct_count", r.distinct_count);
    rep.put(
        "multiplicity_profile",
        Value::Array(
            r.multiplicity_profile
                .iter()
                .map(|(m, n)| json!({"multiplicity": m, "points": n}))
                .collect(),
        ),
    );
    rep.put("rho1_squarefree", r.rho1_squarefree);
    rep.put("rho2_separable", r.rho2_separable);
    rep.put("dimension_degree", json!([r.hilbert.0, r.hilbert.1]));
    rep.put("rho_system", r.rho.holds());
    rep.put("sigma_orbit_sizes", json!(r.sigma.orbit_sizes));
    rep.put("sigma_checks", r.sigma.holds());
    rep.put("vanishing_pairs", r.vanishing_pairs);
    let mut ok = r.verified();
    if numeric {
        let pts = enumerate_points(gamma, tol)?;
        let minors = point_ideal(&a)?;
        let residual = max_residual(&pts, minors.generators());
        ok &= pts.len() == r.distinct_count && residual < tol.residual;
        rep.put("numeric_count", pts.len());
        rep.put("numeric_max_residual", format!("{residual:.1e}"));
        rep.put(
            "numeric_points",
            Value::Array(pts.iter().map(|p| Value::String(complex_row(p))).collect()),
        );
    }
    rep.put("verified", ok);
    Ok((rep, ok))
}

fn complex_row(p: &ComplexPoint) -> String {
    p.coords
        .iter()
        .map(|z| format!("{:+.9}{:+.9}i", z.re, z.im))
        .collect::<Vec<_>>()
        .join("  ")
}

fn line_scheme(
    gamma: &GaussianRational,
    limits: &Limits,
    verify: bool,
) -> Result<(Report, bool), Failure> {
    let a = make_A(gamma)?;
    let fixtures = load_fixtures()?;
    let l = line_scheme_ideal(&a)?;
    let catalog = component_catalog(gamma, &fixtures)?;
    let mut rep = Report::new("line-scheme", &gamma.to_string());
    rep.put(
        "polynomials",
        Value::Array(
            l.polys
                .iter()
                .map(|p| Value::String(p.to_string()))
                .collect(),
        ),
    );
    rep.put(
        "components",
        Value::Array(
            catalog
                .components
                .iter()
                .map(|c| {
                    json!({
                        "name": c.name,
                        "generators": c.ideal.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                        "dimension": c.expected.0,
                        "degree": c.expected.1,
                        "planar": c.planar,
                    })
                })
                .collect(),
        ),
    );
    let gb = l.groebner(limits)?;
    let dd = dimension_degree_of_basis(&gb);
    rep.put("dimension_degree", json!([dd.0, dd.1]));
    let mut ok = dd == (1, 20);
    if verify {
        let d = verify_decomposition(&l, &catalog, limits)?;
        rep.put(
            "decomposition",
            json!({
                "components_inside": d.components_inside,
                "union_covers": d.union_covers,
                "dimension_degree": [d.dimension_degree.0, d.dimension_degree.1],
                "component_degrees": d.component_degrees_ok,
                "degree_sum": d.degree_sum(),
                "holds": d.holds(),
            }),
        );
        let shown = line_scheme_from_displayed(&a, &fixtures)?;
        let c = compare_with_fixtures(&shown, &fixtures.line_scheme(gamma)?)?;
        rep.put(
            "stored_list",
            json!({
                "ideal_equal": c.ideal_equal,
                "span_equal": c.span_equal,
                "individually_matched": c.individually_matched,
                "combinations": c.combinations.len(),
                "total": c.total,
            }),
        );
        ok &= d.holds() && c.ideal_equal && c.span_equal;
    }
    rep.put("verified", ok);
    Ok((rep, ok))
}

fn lines_through(
    gamma: &GaussianRational,
    limits: &Limits,
    tol: &Tolerances,
    symbolic: bool,
    numeric: bool,
    point: &str,
) -> Result<(Report, bool), Failure> {
    let a = make_A(gamma)?;
    let fixtures = load_fixtures()?;
    let catalog = component_catalog(gamma, &fixtures)?;
    let mut rep = Report::new("lines-through", &gamma.to_string());
    rep.put("point", point);
    let mut ok = true;
    match point {
        "e1" | "e2" | "e3" | "e4" => {
            let j: usize = point[1..].parse().expect("digit");
            let flags = infinite_flags(gamma, &catalog, &fixtures, limits)?;
            let f = flags
                .iter()
                .find(|f| f.basis_point == j)
                .expect("four flags");
            rep.put("component", f.component.as_str());
            rep.put("lines", if f.holds() { "infinite" } else { "unverified" });
            rep.put(
                "curve_dimension_degree",
                json!([f.curve_dimension_degree.0, f.curve_dimension_degree.1]),
            );
            ok = f.holds();
        }
        "generic" => {
            if symbolic || !numeric {
                let l = line_scheme_ideal(&a)?;
                let z = GenericPoints::new(gamma, limits)?;
                let r = lines_through_point(&z, &catalog, &l.polys)?;
                rep.put("count", r.count);
                rep.put("pairwise_distinct", r.pairwise_distinct);
                rep.put(
                    "lines",
                    Value::Array(
                        r.lines
                            .iter()
                            .map(|c| {
                                json!({
                                    "component": c.component,
                                    "points": c.piece_length,
                                    "in_component": c.in_component,
                                    "in_line_scheme": c.in_line_scheme,
                                    "contains_point": c.contains_point,
                                })
                            })
                            .collect(),
                    ),
                );
                ok &= r.holds();
            }
            if numeric {
                let l = line_scheme_ideal(&a)?;
                let pts = enumerate_points(gamma, tol)?;
                let mut rows = Vec::new();
                let mut worst: f64 = 0.0;
                for (n, p) in pts.iter().enumerate().skip(4) {
                    let lines = six_lines_numeric(p, tol)?;
                    let mut names = Vec::new();
                    let mut here: f64 = 0.0;
                    for (line, _) in &lines {
                        here = l
                            .polys
                            .iter()
                            .map(|f| line.residual(f))
                            .fold(here, f64::max);
                        names.push(line.component.clone());
                    }
                    worst = worst.max(here);
                    rows.push(json!({
                        "index": n + 1,
                        "point": complex_row(p),
                        "lines": names.join(" "),
                        "residual": format!("{here:.0e}"),
                    }));
                }
                ok &= worst < tol.residual && rows.len() == pts.len() - 4;
                rep.put("numeric_points", rows.len());
                rep.put("numeric_max_residual", format!("{worst:.1e}"));
                rep.put("numeric_table", Value::Array(rows));
            }
        }
        other => {
            return Err(Failure::Usage(format!(
                "unknown point `{other}`; use e1..e4 or generic"
            )))
        }
    }
    rep.put("verified", ok);
    Ok((rep, ok))
}
