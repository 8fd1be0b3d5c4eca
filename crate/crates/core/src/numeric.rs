//! Floating-point cross-check of the point counts and the six lines.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::arith::GaussianRational;
use crate::error::{Error, Result};
use crate::plucker::PluckerLine;
use crate::poly::Polynomial;
use crate::univariate::UPoly;

type C = Complex64;

#[derive(Clone, Copy, Debug)]
pub struct Tolerances {
    /// Residual bound for polynomial evaluations.
    pub residual: f64,
    /// Projective distance below which two points count as one.
    pub distinct: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            residual: 1e-8,
            distinct: 1e-6,
        }
    }
}

pub fn to_complex(c: &GaussianRational) -> C {
    let (re, im) = c.to_f64_pair();
    C::new(re, im)
}

fn horner(coeffs: &[C], z: C) -> (C, C) {
    let mut p = C::new(0.0, 0.0);
    let mut dp = C::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// All complex roots of `Σ coeffs[k]·x^k` by Aberth–Ehrlich iteration,
/// followed by a few Newton steps.
pub fn univariate_roots(coeffs: &[C]) -> Result<Vec<C>> {
    let mut coeffs = coeffs.to_vec();
    while coeffs.last().is_some_and(|c| c.norm() == 0.0) {
        coeffs.pop();
    }
    let n = coeffs.len().saturating_sub(1);
    if n == 0 {
        return Err(Error::Invalid("polynomial has no roots".into()));
    }
    let lead = coeffs[n];
    let monic: Vec<C> = coeffs.iter().map(|c| c / lead).collect();
    let radius = 1.0 + monic[..n].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let mut z: Vec<C> = (0..n)
        .map(|k| {
            C::from_polar(
                radius * 0.5,
                2.0 * std::f64::consts::PI * (k as f64 + 0.25) / n as f64,
            )
        })
        .collect();
    let mut converged = false;
    for _ in 0..1000 {
        let mut biggest: f64 = 0.0;
        for k in 0..n {
            let (p, dp) = horner(&monic, z[k]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let repulsion: C = (0..n)
                .filter(|&j| j != k)
                .map(|j| C::new(1.0, 0.0) / (z[k] - z[j]))
                .sum();
            let step = ratio / (C::new(1.0, 0.0) - ratio * repulsion);
            z[k] -= step;
            biggest = biggest.max(step.norm() / z[k].norm().max(1.0));
        }
        if biggest < 1e-15 {
            converged = true;
            break;
        }
    }
    if !converged && z.iter().any(|&r| horner(&monic, r).0.norm() > 1e-6) {
        return Err(Error::ConvergenceFailure(format!("degree {n}")));
    }
    for r in z.iter_mut() {
        for _ in 0..3 {
            let (p, dp) = horner(&monic, *r);
            if dp.norm() < 1e-300 {
                break;
            }
            *r -= p / dp;
        }
    }
    Ok(z)
}

pub fn upoly_roots(p: &UPoly) -> Result<Vec<C>> {
    univariate_roots(&p.coeffs().iter().map(to_complex).collect::<Vec<_>>())
}

/// A point of P³ with double-precision coordinates, scaled so the coordinate
/// of largest modulus is 1.
#[derive(Clone, Copy, Debug)]
pub struct ComplexPoint {
    pub coords: [C; 4],
}

impl ComplexPoint {
    pub fn new(c: [C; 4]) -> Result<Self> {
        let k = (0..4)
            .max_by(|&a, &b| c[a].norm().total_cmp(&c[b].norm()))
            .expect("four");
        if c[k].norm() == 0.0 {
            return Err(Error::Invalid("all coordinates are zero".into()));
        }
        Ok(ComplexPoint {
            coords: c.map(|x| x / c[k]),
        })
    }

    pub fn basis(k: usize) -> Self {
        let mut c = [C::new(0.0, 0.0); 4];
        c[k - 1] = C::new(1.0, 0.0);
        ComplexPoint { coords: c }
    }

    /// Sine of the angle between the two points as lines in C⁴.
    pub fn distance(&self, other: &ComplexPoint) -> f64 {
        projective_distance(&self.coords, &other.coords)
    }

    pub fn residual(&self, f: &Polynomial) -> f64 {
        f.eval_complex(&self.coords).norm()
    }
}

/// Sine of the angle between two nonzero vectors, up to complex scaling.
pub fn projective_distance(a: &[C], b: &[C]) -> f64 {
    let na: f64 = a.iter().map(|x| x.norm_sqr()).sum();
    let nb: f64 = b.iter().map(|x| x.norm_sqr()).sum();
    let dot: C = a.iter().zip(b).map(|(x, y)| x.conj() * y).sum();
    (1.0 - dot.norm_sqr() / (na * nb)).max(0.0).sqrt()
}

/// The coordinate points and the generic points from `x4` roots of ρ₁,
/// `x3` from ρ₂ and `x2` from ρ₃; clusters closer than the tolerance merge.
pub fn enumerate_points(gamma: &GaussianRational, tol: &Tolerances) -> Result<Vec<ComplexPoint>> {
    if num_traits::Zero::is_zero(gamma) {
        return Err(Error::ZeroGamma);
    }
    let g = to_complex(gamma);
    let zero = C::new(0.0, 0.0);
    let mut rho1 = vec![zero; 9];
    rho1[0] = g * g;
    rho1[4] = C::new(-4.0, 0.0);
    rho1[8] = C::new(1.0, 0.0);
    let x4s: Vec<C> = roots_with_multiplicity(&rho1, tol.distinct)?
        .into_iter()
        .map(|(r, _)| r)
        .collect();
    let i = C::i();
    let mut points: Vec<ComplexPoint> = (1..=4).map(ComplexPoint::basis).collect();
    for x4 in x4s {
        let disc = (C::new(4.0, 0.0) - x4.powi(4)).sqrt();
        for sign in [1.0, -1.0] {
            let x3 = (i * x4 * x4 + disc * sign) / 2.0;
            let x2 = (2.0 * i * x4.powi(3) - x3 * x4.powi(5)) / g;
            let p = ComplexPoint::new([C::new(1.0, 0.0), x2, x3, x4])?;
            if points.iter().all(|q| q.distance(&p) > tol.distinct) {
                points.push(p);
            }
        }
    }
    Ok(points)
}

/// Roots grouped into clusters closer than `eps`, each with its size; every
/// cluster centre is refined by Newton steps on the derivative of order
/// size − 1, where the root is simple.
pub fn roots_with_multiplicity(coeffs: &[C], eps: f64) -> Result<Vec<(C, usize)>> {
    let mut groups: Vec<Vec<C>> = Vec::new();
    for r in univariate_roots(coeffs)? {
        match groups.iter_mut().find(|g| (g[0] - r).norm() < eps.sqrt()) {
            Some(g) => g.push(r),
            None => groups.push(vec![r]),
        }
    }
    Ok(groups
        .into_iter()
        .map(|g| {
            let k = g.len();
            let mut d = coeffs.to_vec();
            for _ in 1..k {
                d = (1..d.len()).map(|j| d[j] * j as f64).collect();
            }
            let mut z = g.iter().sum::<C>() / k as f64;
            for _ in 0..5 {
                let (p, dp) = horner(&d, z);
                if dp.norm() < 1e-300 {
                    break;
                }
                z -= p / dp;
            }
            (z, k)
        })
        .collect())
}

/// Largest residual of `polys` over `points`.
pub fn max_residual(points: &[ComplexPoint], polys: &[Polynomial]) -> f64 {
    points
        .par_iter()
        .map(|p| polys.iter().map(|f| p.residual(f)).fold(0.0, f64::max))
        .reduce(|| 0.0, f64::max)
}

/// Plücker coordinates scaled to unit length.
#[derive(Clone, Debug)]
pub struct NumericLine {
    pub component: String,
    pub m: [C; 6],
}

impl NumericLine {
    fn join(component: &str, a: [C; 4], b: [C; 4]) -> NumericLine {
        let m = crate::algebra::PAIRS.map(|(i, j)| a[i] * b[j] - a[j] * b[i]);
        let n = m.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        NumericLine {
            component: component.to_string(),
            m: m.map(|x| x / n),
        }
    }

    pub fn residual(&self, f: &Polynomial) -> f64 {
        f.eval_complex(&self.m).norm()
    }

    pub fn distance(&self, other: &NumericLine) -> f64 {
        projective_distance(&self.m, &other.m)
    }

    /// `l1·row1 + l2·row2` for a spanning pair of rows.
    pub fn point_at(&self, rows: &[[C; 4]; 2], l1: C, l2: C) -> [C; 4] {
        [0, 1, 2, 3].map(|k| rows[0][k] * l1 + rows[1][k] * l2)
    }
}

/// The six lines through a generic point, one per family. The L6 line is
/// chosen by which of `x2 ∓ i·x3·x4` is smaller.
pub fn six_lines_numeric(
    p: &ComplexPoint,
    tol: &Tolerances,
) -> Result<Vec<(NumericLine, [[C; 4]; 2])>> {
    let c = p.coords;
    if c.iter().any(|x| x.norm() < tol.distinct) {
        return Err(Error::DegeneratePoint(format!("{c:?}")));
    }
    let [_, a2, a3, a4] = c.map(|x| x / c[0]);
    let (o, z, i) = (C::new(1.0, 0.0), C::new(0.0, 0.0), C::i());
    let e = |k: usize| {
        let mut v = [z; 4];
        v[k - 1] = o;
        v
    };
    let mut rows = vec![
        ("L1", [[o, z, a3, z], [z, a2, z, a4]]),
        ("L2", [e(2), [o, z, a3, a4]]),
        ("L3", [e(4), [o, a2, a3, z]]),
        ("L4", [e(3), [o, a2, z, a4]]),
        ("L5", [e(1), [z, a2, a3, a4]]),
    ];
    let plus = (a2 - i * a3 * a4).norm();
    let minus = (a2 + i * a3 * a4).norm();
    if plus < minus {
        rows.push(("L6a", [[o, z, z, a4], [z, i * a4, o, z]]));
    } else {
        rows.push(("L6b", [[o, z, z, a4], [z, -i * a4, o, z]]));
    }
    Ok(rows
        .into_iter()
        .map(|(name, r)| (NumericLine::join(name, r[0], r[1]), r))
        .collect())
}

/// Values of the two factors of `(x2 + x4 + x2·x3 − x3·x4)(x2 − x4 − x2·x3 − x3·x4)`.
pub fn dagger_factors(p: &ComplexPoint) -> (f64, f64) {
    let c = p.coords;
    let [_, a2, a3, a4] = c.map(|x| x / c[0]);
    (
        (a2 + a4 + a2 * a3 - a3 * a4).norm(),
        (a2 - a4 - a2 * a3 - a3 * a4).norm(),
    )
}

/// σ on a numeric point: swaps `e1 ↔ e2`, `e3 ↔ e4` and sends the generic
/// point `(1, x2, x3, x4)` to `(1, i·x2/x3², 1/x3, −i·x4)`.
pub fn sigma_numeric(p: &ComplexPoint, tol: &Tolerances) -> Result<ComplexPoint> {
    for (k, image) in [(1, 2), (2, 1), (3, 4), (4, 3)] {
        if p.distance(&ComplexPoint::basis(k)) < tol.distinct {
            return Ok(ComplexPoint::basis(image));
        }
    }
    let c = p.coords;
    if c[0].norm() < tol.distinct || c[2].norm() < tol.distinct {
        return Err(Error::UndefinedAtPoint(format!("{c:?}")));
    }
    let [_, a2, a3, a4] = c.map(|x| x / c[0]);
    let i = C::i();
    ComplexPoint::new([
        C::new(1.0, 0.0),
        i * a2 / (a3 * a3),
        C::new(1.0, 0.0) / a3,
        -i * a4,
    ])
}

/// Orbit sizes of σ on the point set, sorted; `None` if σ leaves the set.
pub fn sigma_orbit_profile(
    points: &[ComplexPoint],
    tol: &Tolerances,
) -> Result<Option<Vec<usize>>> {
    let mut image = Vec::with_capacity(points.len());
    for p in points {
        let q = sigma_numeric(p, tol)?;
        match points.iter().position(|r| r.distance(&q) < tol.distinct) {
            Some(k) => image.push(k),
            None => return Ok(None),
        }
    }
    let mut seen = vec![false; points.len()];
    let mut sizes = Vec::new();
    for start in 0..points.len() {
        if seen[start] {
            continue;
        }
        let mut k = start;
        let mut n = 0;
        while !seen[k] {
            seen[k] = true;
            k = image[k];
            n += 1;
        }
        sizes.push(n);
    }
    sizes.sort_unstable();
    Ok(Some(sizes))
}

/// Numeric counterpart of an exact line, for comparison.
pub fn to_numeric_line(l: &PluckerLine, component: &str) -> NumericLine {
    let m = l.m.clone().map(|c| to_complex(&c));
    let n = m.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
    NumericLine {
        component: component.to_string(),
        m: m.map(|x| x / n),
    }
}
