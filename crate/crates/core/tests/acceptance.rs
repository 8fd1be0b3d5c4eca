mod support;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use linescheme_core::algebra::make_A;
use linescheme_core::fixtures::{load_fixtures, FixtureSet};
use linescheme_core::groebner::{dimension_degree_of_basis, Limits};
use linescheme_core::line_scheme::{
    compare_with_fixtures, component_catalog, line_scheme_from_displayed, line_scheme_ideal,
    q_factorization, verify_decomposition,
};
use linescheme_core::numeric::{enumerate_points, max_residual, six_lines_numeric, Tolerances};
use linescheme_core::plucker::{
    infinite_flags, lines_through_point, ruling_lines, surface_containment, LineFamily, Quadric,
};
use linescheme_core::point_scheme::{
    compare_minors, count_points, point_ideal, sigma_orbits, GenericPoints,
};
use linescheme_core::GaussianRational;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn g(n: i64) -> GaussianRational {
    GaussianRational::from_int(n)
}

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn minors(fx: &FixtureSet) -> Outcome {
    let mut parts = Vec::new();
    let mut ok = true;
    for n in [1, 4, 5] {
        let c = compare_minors(
            &make_A(&g(n)).map_err(|e| e.to_string())?,
            &fx.point_scheme(&g(n)).unwrap(),
        )
        .map_err(|e| e.to_string())?;
        ok &= c.holds();
        parts.push(format!(
            "g={n} ideal {} unit multiples {}/{}",
            c.ideal_equal, c.unit_multiples, c.total
        ));
    }
    check(ok, parts.join("; "))
}

fn line_fixtures(fx: &FixtureSet) -> Outcome {
    let mut parts = Vec::new();
    let mut ok = true;
    for n in [1, 4, 5] {
        let a = make_A(&g(n)).unwrap();
        let shown = line_scheme_from_displayed(&a, fx).map_err(|e| e.to_string())?;
        let c = compare_with_fixtures(&shown, &fx.line_scheme(&g(n)).unwrap())
            .map_err(|e| e.to_string())?;
        let own = compare_with_fixtures(
            &line_scheme_ideal(&a).map_err(|e| e.to_string())?,
            &fx.line_scheme(&g(n)).unwrap(),
        )
        .map_err(|e| e.to_string())?;
        ok &= c.ideal_equal && c.polynomialwise();
        let missing: Vec<String> = c.combinations.iter().map(|(k, _)| k.to_string()).collect();
        parts.push(format!(
            "g={n} ideal {} span {} single matches {}/{} (own basis {}/{}), as combinations: {}",
            c.ideal_equal,
            c.span_equal,
            c.individually_matched,
            c.total,
            own.individually_matched,
            own.total,
            missing.join(",")
        ));
    }
    check(ok, parts.join("; "))
}

fn point_counts() -> Outcome {
    let limits = Limits::default();
    let mut parts = Vec::new();
    let mut ok = true;
    for n in [1, 4, 5, 2, -2] {
        let r = count_points(&make_A(&g(n)).unwrap(), &limits).map_err(|e| e.to_string())?;
        let special = n * n == 4;
        let expected = if special { 12 } else { 20 };
        ok &= r.verified()
            && r.total == 20
            && r.distinct_count == expected
            && r.rho1_squarefree != special
            && (!special || r.multiplicity_profile == vec![(1, 4), (2, 8)]);
        parts.push(format!(
            "g={n} charts {:?} distinct {}",
            r.chart_counts, r.distinct_count
        ));
    }
    check(ok, parts.join("; "))
}

fn sigma() -> Outcome {
    let s = sigma_orbits(&make_A(&g(1)).unwrap(), &Limits::default()).map_err(|e| e.to_string())?;
    check(
        s.holds() && s.orbit_sizes == vec![2, 2, 4, 4, 4, 4],
        format!("orbits {:?} order four {}", s.orbit_sizes, s.order_four),
    )
}

fn decomposition(fx: &FixtureSet) -> Outcome {
    let limits = Limits::default();
    let mut parts = Vec::new();
    let mut ok = true;
    for (n, count) in [(1, 7), (5, 7), (4, 8)] {
        let gamma = g(n);
        let l = line_scheme_ideal(&make_A(&gamma).unwrap()).map_err(|e| e.to_string())?;
        let cat = component_catalog(&gamma, fx).map_err(|e| e.to_string())?;
        let d = verify_decomposition(&l, &cat, &limits).map_err(|e| e.to_string())?;
        let splits = q_factorization(&gamma).is_some();
        ok &= d.holds() && cat.components.len() == count && splits == (n == 4);
        parts.push(format!(
            "g={n} components {} holds {} Q splits {}",
            cat.components.len(),
            d.holds(),
            splits
        ));
    }
    check(ok, parts.join("; "))
}

fn dimension_degree(fx: &FixtureSet) -> Outcome {
    let limits = Limits::default();
    let mut parts = Vec::new();
    let mut ok = true;
    for n in [1, 4, 5] {
        let gamma = g(n);
        let l = line_scheme_ideal(&make_A(&gamma).unwrap()).map_err(|e| e.to_string())?;
        let dd = dimension_degree_of_basis(&l.groebner(&limits).map_err(|e| e.to_string())?);
        let cat = component_catalog(&gamma, fx).map_err(|e| e.to_string())?;
        let d = verify_decomposition(&l, &cat, &limits).map_err(|e| e.to_string())?;
        let degrees: Vec<i64> = d.component_data.iter().map(|(_, (_, deg))| *deg).collect();
        // at γ = 4 the quartic L1 splits into two conics
        let expected = if n == 4 {
            vec![2, 2, 3, 3, 3, 3, 2, 2]
        } else {
            vec![4, 3, 3, 3, 3, 2, 2]
        };
        ok &=
            dd == (1, 20) && d.component_degrees_ok && degrees == expected && d.degree_sum() == 20;
        let shown: Vec<String> = d
            .component_data
            .iter()
            .map(|(c, (_, deg))| format!("{c}:{deg}"))
            .collect();
        parts.push(format!("g={n} {dd:?} [{}]", shown.join(" ")));
    }
    check(ok, parts.join("; "))
}

fn six_lines(fx: &FixtureSet) -> Outcome {
    let limits = Limits::default();
    let mut parts = Vec::new();
    let mut ok = true;
    for n in [1, 4] {
        let gamma = g(n);
        let l = line_scheme_ideal(&make_A(&gamma).unwrap()).map_err(|e| e.to_string())?;
        let cat = component_catalog(&gamma, fx).map_err(|e| e.to_string())?;
        let z = GenericPoints::new(&gamma, &limits).map_err(|e| e.to_string())?;
        let r = lines_through_point(&z, &cat, &l.polys).map_err(|e| e.to_string())?;
        let flags = infinite_flags(&gamma, &cat, fx, &limits).map_err(|e| e.to_string())?;
        let infinite = flags.iter().filter(|f| f.holds()).count();
        ok &= r.holds() && r.count == 6 && r.pairwise_distinct && infinite == 4;
        parts.push(format!(
            "g={n} lines {} distinct {} infinite at {infinite}/4 basis points",
            r.count, r.pairwise_distinct
        ));
    }
    check(ok, parts.join("; "))
}

fn containments(fx: &FixtureSet) -> Outcome {
    let limits = Limits::default();
    let mut ok = true;
    let mut parts = Vec::new();
    let contains = |f: &LineFamily, s: &str, gamma: &GaussianRational| {
        surface_containment(f, &fx.surface(s, gamma).unwrap(), &limits).map_err(|e| e.to_string())
    };
    for n in [1, 4, 5] {
        let gamma = g(n);
        let l1 = contains(&LineFamily::l1(&gamma).unwrap(), "quartic", &gamma)?;
        let l6a = contains(&LineFamily::l6a(&gamma).unwrap(), "Q6a", &gamma)?;
        let l6b = contains(&LineFamily::l6b(&gamma).unwrap(), "Q6b", &gamma)?;
        let crossed = contains(&LineFamily::l6a(&gamma).unwrap(), "Q6b", &gamma)?;
        ok &= l1 && l6a && l6b && !crossed;
        parts.push(format!("g={n} quartic {l1} Q6a {l6a} Q6b {l6b}"));
    }
    let gamma = g(4);
    let qa = contains(&LineFamily::l1a(&gamma).unwrap(), "Qa", &gamma)?;
    let qb = contains(&LineFamily::l1b(&gamma).unwrap(), "Qb", &gamma)?;
    let cat = component_catalog(&gamma, fx).map_err(|e| e.to_string())?;
    let mut rulings = true;
    for q in [Quadric::Q6a, Quadric::Q6b, Quadric::Qa, Quadric::Qb] {
        let comp = cat.get(q.component_name()).ok_or("missing component")?;
        for (d, e) in [(1, 0), (0, 1), (1, 1), (3, -2)] {
            let line = ruling_lines(q, (&g(d), &g(e))).map_err(|e| e.to_string())?;
            rulings &= line.satisfies(comp.ideal.generators());
        }
    }
    ok &= qa && qb && rulings;
    parts.push(format!("g=4 Qa {qa} Qb {qb} rulings {rulings}"));
    check(ok, parts.join("; "))
}

fn numeric() -> Outcome {
    let start = Instant::now();
    let tol = Tolerances::default();
    let a = make_A(&g(1)).unwrap();
    let pts = enumerate_points(&g(1), &tol).map_err(|e| e.to_string())?;
    let mut closest = f64::INFINITY;
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            closest = closest.min(pts[i].distance(&pts[j]));
        }
    }
    let minors = point_ideal(&a).map_err(|e| e.to_string())?;
    let point_residual = max_residual(&pts, minors.generators());
    let l = line_scheme_ideal(&a).map_err(|e| e.to_string())?;
    let mut line_residual: f64 = 0.0;
    let mut line_gap = f64::INFINITY;
    let mut six = 0;
    for p in pts.iter().skip(4) {
        let lines = six_lines_numeric(p, &tol).map_err(|e| e.to_string())?;
        six += (lines.len() == 6) as usize;
        for (i, (li, _)) in lines.iter().enumerate() {
            line_residual = l
                .polys
                .iter()
                .map(|f| li.residual(f))
                .fold(line_residual, f64::max);
            for (lj, _) in &lines[i + 1..] {
                line_gap = line_gap.min(li.distance(lj));
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    check(
        pts.len() == 20
            && closest > tol.distinct
            && point_residual < tol.residual
            && six == 16
            && line_gap > tol.distinct
            && line_residual < tol.residual
            && secs < 10.0,
        format!(
            "{} points, min distance {closest:.2e}, minor residual {point_residual:.1e}, six lines at {six}/16, \
             line gap {line_gap:.2e}, line residual {line_residual:.1e}, {secs:.2}s",
            pts.len()
        ),
    )
}

fn properties() -> Outcome {
    let mut failed = Vec::new();
    for (name, run) in support::ALL {
        if let Err(e) = run() {
            failed.push(format!("{name}: {e}"));
        }
    }
    check(
        failed.is_empty(),
        if failed.is_empty() {
            format!("{} suites x {} cases", support::ALL.len(), support::CASES)
        } else {
            failed.join("; ")
        },
    )
}

fn main() -> ExitCode {
    let fx = load_fixtures().expect("fixtures load");
    let criteria: [Criterion; 10] = [
        (
            "point-scheme minors match the stored quartics",
            Box::new(|| minors(&fx)),
        ),
        (
            "line-scheme polynomials match the stored list",
            Box::new(|| line_fixtures(&fx)),
        ),
        ("point counts", Box::new(point_counts)),
        ("sigma orbit profile", Box::new(sigma)),
        ("line-scheme decomposition", Box::new(|| decomposition(&fx))),
        ("dimension and degree", Box::new(|| dimension_degree(&fx))),
        (
            "six lines through generic points",
            Box::new(|| six_lines(&fx)),
        ),
        (
            "surface containments and rulings",
            Box::new(|| containments(&fx)),
        ),
        ("numeric cross-check", Box::new(numeric)),
        ("property suites", Box::new(properties)),
    ];
    let mut failures = 0;
    for (k, (title, run)) in criteria.iter().enumerate() {
        let outcome =
            catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let (tag, detail) = match outcome {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failures += 1;
                ("FAIL", d)
            }
        };
        println!("criterion {:>2} {tag}  {title}: {detail}", k + 1);
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
