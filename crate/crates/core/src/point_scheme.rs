//! The point scheme: 4×4 minors of the relation matrix, chart-wise counts,
//! the triangular system for the generic points and the automorphism σ.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::algebra::{eval_bilinear, x_ring, QuadraticAlgebra};
use crate::arith::GaussianRational;
use crate::error::{Error, Result};
use crate::groebner::{
    buchberger, hilbert_dimension_degree, saturate, GroebnerBasis, Ideal, Limits, QuotientDim,
};
use crate::poly::{parse_poly, Polynomial, Ring};
use crate::univariate::UPoly;

/// A point of P³ with exact coordinates.
#[derive(Clone, Debug)]
pub struct ProjectivePoint(pub [GaussianRational; 4]);

impl ProjectivePoint {
    pub fn new(coords: [GaussianRational; 4]) -> Result<Self> {
        if coords.iter().all(Zero::is_zero) {
            return Err(Error::Invalid("all coordinates are zero".into()));
        }
        Ok(ProjectivePoint(coords))
    }

    pub fn from_ints(c: [i64; 4]) -> Result<Self> {
        ProjectivePoint::new(c.map(GaussianRational::from_int))
    }

    /// The coordinate point `e_k`, `k` in 1..=4.
    pub fn basis(k: usize) -> Self {
        let mut c = [0i64; 4];
        c[k - 1] = 1;
        ProjectivePoint::from_ints(c).expect("nonzero")
    }

    /// Scaled so the first nonzero coordinate is 1.
    pub fn normalized(&self) -> Self {
        let lead = self.0.iter().find(|c| !c.is_zero()).expect("nonzero point");
        let inv = lead.inverse().expect("nonzero");
        ProjectivePoint(std::array::from_fn(|k| &self.0[k] * &inv))
    }

    /// `Some(k)` when the point is `e_k`.
    pub fn basis_index(&self) -> Option<usize> {
        let nz: Vec<usize> = (0..4).filter(|&k| !self.0[k].is_zero()).collect();
        (nz.len() == 1).then(|| nz[0] + 1)
    }
}

impl PartialEq for ProjectivePoint {
    fn eq(&self, other: &Self) -> bool {
        self.normalized().0 == other.normalized().0
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Ideal of the 15 maximal minors of the relation matrix.
pub fn point_ideal(a: &QuadraticAlgebra) -> Result<Ideal> {
    let minors = a.relation_matrix().all_minors(4)?;
    Ideal::new(&x_ring(), minors)
}

/// How the computed minors compare with a stored list of quartics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorComparison {
    pub ideal_equal: bool,
    /// Computed minors that are a nonzero scalar multiple of some stored quartic.
    pub unit_multiples: usize,
    pub total: usize,
}

impl MinorComparison {
    pub fn holds(&self) -> bool {
        self.ideal_equal && self.unit_multiples == self.total
    }
}

pub fn compare_minors(a: &QuadraticAlgebra, stored: &[Polynomial]) -> Result<MinorComparison> {
    let computed = point_ideal(a)?;
    let stored_ideal = Ideal::new(&x_ring(), stored.to_vec())?;
    let ideal_equal = crate::groebner::ideals_equal(&computed, &stored_ideal)?;
    let unit_multiples = computed
        .generators()
        .iter()
        .filter(|m| !m.is_zero() && stored.iter().any(|f| m.scalar_ratio(f).is_some()))
        .count();
    Ok(MinorComparison {
        ideal_equal,
        unit_multiples,
        total: computed.generators().len(),
    })
}

/// Variables of the affine chart `x1 = 1`.
pub fn chart_ring() -> Arc<Ring> {
    Ring::with_names(&["x2", "x3", "x4"]).expect("valid names")
}

/// ρ₁, ρ₂, ρ₃ over x2, x3, x4.
pub fn rho_system(gamma: &GaussianRational) -> Result<[Polynomial; 3]> {
    if gamma.is_zero() {
        return Err(Error::ZeroGamma);
    }
    let r = chart_ring();
    Ok([
        parse_poly("x4^8 - 4*x4^4 + g^2", &r, Some(gamma))?,
        parse_poly("x3^2 - i*x3*x4^2 - 1", &r, None)?,
        parse_poly("g*x2 - 2*i*x4^3 + x3*x4^5", &r, Some(gamma))?,
    ])
}

/// Restriction of the minors to `x_k = 0` for `k < fixed` and `x_fixed = 1`,
/// over the remaining variables.
pub fn chart_ideal(point: &Ideal, fixed: usize) -> Result<Ideal> {
    let names: Vec<&str> = ["x1", "x2", "x3", "x4"][fixed + 1..].to_vec();
    let ring = Ring::with_names(&names)?;
    let mut assignment: Vec<(&str, Polynomial)> = Vec::new();
    for (k, name) in ["x1", "x2", "x3", "x4"].iter().enumerate().take(fixed + 1) {
        let v = if k == fixed {
            Polynomial::one(&ring)
        } else {
            Polynomial::zero(&ring)
        };
        assignment.push((name, v));
    }
    let gens = point
        .generators()
        .iter()
        .map(|g| g.substitute(&assignment, &ring))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(&ring, gens)
}

/// `I + ⟨squarefree parts of the minimal polynomials⟩`, the radical of a
/// zero-dimensional ideal in characteristic zero.
pub fn zero_dim_radical(ideal: &Ideal, limits: &Limits) -> Result<GroebnerBasis> {
    let gb = buchberger(ideal, limits)?;
    if gb.is_unit() {
        return Ok(gb);
    }
    let ring = ideal.ring().clone();
    let mut extra = Vec::new();
    for v in 0..ring.nvars() {
        let mp = gb.minimal_polynomial(v)?;
        extra.push(mp.squarefree_part().to_poly(&ring, v));
    }
    buchberger(&ideal.extend(&extra)?, limits)
}

/// Number of distinct points of a zero-dimensional ideal.
pub fn distinct_points(ideal: &Ideal, limits: &Limits) -> Result<usize> {
    zero_dim_radical(ideal, limits)?
        .quotient_dimension()
        .finite()
        .ok_or_else(|| Error::Invalid("ideal is not zero-dimensional".into()))
}

/// Residue computations modulo an ideal cutting out generic points in the
/// chart `x1 = 1`, by default ⟨ρ₁, ρ₂, ρ₃⟩.
#[derive(Clone, Debug)]
pub struct GenericPoints {
    gamma: GaussianRational,
    ideal: Ideal,
    gb: GroebnerBasis,
    limits: Limits,
}

impl GenericPoints {
    pub fn new(gamma: &GaussianRational, limits: &Limits) -> Result<Self> {
        let rho = rho_system(gamma)?;
        let ideal = Ideal::new(&chart_ring(), rho.to_vec())?;
        let gb = buchberger(&ideal, limits)?;
        Ok(GenericPoints {
            gamma: gamma.clone(),
            ideal,
            gb,
            limits: *limits,
        })
    }

    /// The subset where the extra polynomials also vanish.
    pub fn restrict(&self, extra: &[Polynomial]) -> Result<Self> {
        let ideal = self.ideal.extend(extra)?;
        let gb = buchberger(&ideal, &self.limits)?;
        Ok(GenericPoints {
            gamma: self.gamma.clone(),
            ideal,
            gb,
            limits: self.limits,
        })
    }

    /// Same points with the reduced structure.
    pub fn reduced(&self) -> Result<Self> {
        let gb = zero_dim_radical(&self.ideal, &self.limits)?;
        Ok(GenericPoints {
            gamma: self.gamma.clone(),
            ideal: gb.to_ideal(),
            gb,
            limits: self.limits,
        })
    }

    pub fn gamma(&self) -> &GaussianRational {
        &self.gamma
    }

    pub fn ring(&self) -> &Arc<Ring> {
        self.ideal.ring()
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn basis(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn is_empty(&self) -> bool {
        self.gb.is_unit()
    }

    /// Length of the quotient ring.
    pub fn length(&self) -> Result<usize> {
        self.gb
            .quotient_dimension()
            .finite()
            .ok_or_else(|| Error::Invalid("not zero-dimensional".into()))
    }

    pub fn distinct(&self) -> Result<usize> {
        distinct_points(&self.ideal, &self.limits)
    }

    /// `(1, x2, x3, x4)` over the chart ring.
    pub fn point(&self) -> [Polynomial; 4] {
        let r = self.ring();
        [
            Polynomial::one(r),
            Polynomial::var_index(r, 0),
            Polynomial::var_index(r, 1),
            Polynomial::var_index(r, 2),
        ]
    }

    pub fn var(&self, name: &str) -> Result<Polynomial> {
        self.ring().var(name)
    }

    pub fn reduce(&self, f: &Polynomial) -> Result<Polynomial> {
        self.gb.normal_form(f)
    }

    pub fn vanishes(&self, f: &Polynomial) -> Result<bool> {
        self.gb.contains(f)
    }

    /// `f` is nonzero at every point: `1 ∈ I + ⟨f⟩`.
    pub fn is_unit(&self, f: &Polynomial) -> Result<bool> {
        Ok(buchberger(&self.ideal.extend(std::slice::from_ref(f))?, &self.limits)?.is_unit())
    }

    /// No point where all of `fs` vanish: `1 ∈ I + ⟨fs⟩`.
    pub fn never_all_zero(&self, fs: &[Polynomial]) -> Result<bool> {
        Ok(buchberger(&self.ideal.extend(fs)?, &self.limits)?.is_unit())
    }

    pub fn inverse(&self, f: &Polynomial) -> Result<Polynomial> {
        self.gb.inverse_mod(f)
    }

    /// Composes `f` (over the chart ring) with coordinate images, reducing the result.
    pub fn compose(&self, f: &Polynomial, images: &[Polynomial; 3]) -> Result<Polynomial> {
        self.reduce(&f.compose(images, self.ring()))
    }
}

/// σ on the generic points as images of (x2, x3, x4), reduced mod the ideal:
/// `(i·x2·x3⁻², x3⁻¹, −i·x4)`.
pub fn sigma_images(z: &GenericPoints) -> Result<[Polynomial; 3]> {
    let [_, x2, x3, x4] = z.point();
    let inv3 = z.inverse(&x3)?;
    let i = GaussianRational::i();
    Ok([
        z.reduce(&(&x2 * &(&inv3 * &inv3)).scale(&i))?,
        inv3,
        x4.scale(&-&i),
    ])
}

/// Images of `σ^k`.
pub fn sigma_power(z: &GenericPoints, base: &[Polynomial; 3], k: u32) -> Result<[Polynomial; 3]> {
    let r = z.ring();
    let mut cur = [
        Polynomial::var_index(r, 0),
        Polynomial::var_index(r, 1),
        Polynomial::var_index(r, 2),
    ];
    for _ in 0..k {
        cur = [
            z.compose(&cur[0], base)?,
            z.compose(&cur[1], base)?,
            z.compose(&cur[2], base)?,
        ];
    }
    Ok(cur)
}

/// σ at an exact point of the point scheme.
pub fn sigma(p: &ProjectivePoint, a: &QuadraticAlgebra) -> Result<ProjectivePoint> {
    let ideal = point_ideal(a)?;
    if ideal.generators().iter().any(|g| !g.eval(&p.0).is_zero()) {
        return Err(Error::Invalid(format!("{p} is not on the point scheme")));
    }
    if let Some(k) = p.basis_index() {
        return Ok(ProjectivePoint::basis([2, 1, 4, 3][k - 1]));
    }
    let q = p.normalized();
    if q.0[0].is_zero() {
        return Err(Error::UndefinedAtPoint(p.to_string()));
    }
    let [_, a2, a3, a4] = q.0;
    let inv3 = a3
        .inverse()
        .map_err(|_| Error::UndefinedAtPoint(p.to_string()))?;
    let i = GaussianRational::i();
    ProjectivePoint::new([
        GaussianRational::one(),
        &(&i * &a2) * &(&inv3 * &inv3),
        inv3,
        -(&i * &a4),
    ])
}

/// Symbolic checks on σ over the generic points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaReport {
    pub maps_into_z: bool,
    pub preserves_minors: bool,
    pub order_four: bool,
    pub no_fixed_square: bool,
    pub basis_swaps: bool,
    pub orbit_sizes: Vec<usize>,
}

impl SigmaReport {
    pub fn holds(&self) -> bool {
        self.maps_into_z
            && self.preserves_minors
            && self.order_four
            && self.no_fixed_square
            && self.basis_swaps
    }
}

/// σ maps the generic points to themselves, has order exactly four at each of
/// them, and swaps `e1 ↔ e2`, `e3 ↔ e4`. Orbit sizes follow from the distinct count.
pub fn sigma_orbits(a: &QuadraticAlgebra, limits: &Limits) -> Result<SigmaReport> {
    let z = GenericPoints::new(a.gamma(), limits)?.reduced()?;
    let s = sigma_images(&z)?;
    let rho = rho_system(a.gamma())?;
    let maps_into_z = rho
        .iter()
        .map(|r| z.compose(r, &s))
        .all(|r| r.is_ok_and(|p| p.is_zero()));

    let ideal = point_ideal(a)?;
    let r = z.ring().clone();
    let image_point = [
        Polynomial::one(&r),
        s[0].clone(),
        s[1].clone(),
        s[2].clone(),
    ];
    let mut preserves_minors = true;
    for g in ideal.generators() {
        if !z.reduce(&g.compose(&image_point, &r))?.is_zero() {
            preserves_minors = false;
        }
    }

    let vars = [
        Polynomial::var_index(&r, 0),
        Polynomial::var_index(&r, 1),
        Polynomial::var_index(&r, 2),
    ];
    let s2 = sigma_power(&z, &s, 2)?;
    let s4 = sigma_power(&z, &s2, 2)?;
    let order_four = (0..3).all(|k| z.reduce(&(&s4[k] - &vars[k])).is_ok_and(|p| p.is_zero()));
    let diffs: Vec<Polynomial> = (0..3).map(|k| &s2[k] - &vars[k]).collect();
    let no_fixed_square = z.never_all_zero(&diffs)?;

    let mut basis_swaps = true;
    for k in 1..=4 {
        let e = ProjectivePoint::basis(k);
        let img = sigma(&e, a)?;
        if sigma(&img, a)? != e || img == e {
            basis_swaps = false;
        }
    }

    let n = z.distinct()?;
    let mut orbit_sizes = vec![2, 2];
    if order_four && no_fixed_square && n % 4 == 0 {
        orbit_sizes.extend(std::iter::repeat_n(4, n / 4));
    }
    Ok(SigmaReport {
        maps_into_z,
        preserves_minors,
        order_four,
        no_fixed_square,
        basis_swaps,
        orbit_sizes,
    })
}

/// Every relation vanishes bilinearly on `(e1,e2), (e2,e1), (e3,e4), (e4,e3)`
/// and on `(p, σ(p))` for the generic points `p`.
pub fn verify_vanishing_pairs(a: &QuadraticAlgebra, limits: &Limits) -> Result<bool> {
    let x = x_ring();
    for (k, l) in [(1, 2), (2, 1), (3, 4), (4, 3)] {
        let p = basis_polys(&x, k);
        let q = basis_polys(&x, l);
        if a.relations()
            .iter()
            .any(|t| !eval_bilinear(t, &p, &q).is_zero())
        {
            return Ok(false);
        }
    }
    let z = GenericPoints::new(a.gamma(), limits)?;
    let s = sigma_images(&z)?;
    let p = z.point();
    let q = [
        Polynomial::one(z.ring()),
        s[0].clone(),
        s[1].clone(),
        s[2].clone(),
    ];
    for t in a.relations() {
        if !z.vanishes(&eval_bilinear(t, &p, &q))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Constant polynomials for the coordinates of `e_k`.
pub fn basis_polys(ring: &Arc<Ring>, k: usize) -> Vec<Polynomial> {
    (1..=4)
        .map(|j| {
            if j == k {
                Polynomial::one(ring)
            } else {
                Polynomial::zero(ring)
            }
        })
        .collect()
}

/// Checks tying the chart ideal to the triangular system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhoCheck {
    /// Each ρ_j lies in the chart ideal saturated by x4.
    pub rho_in_saturation: bool,
    /// Each generator of that saturation lies in ⟨ρ₁, ρ₂, ρ₃⟩.
    pub saturation_in_rho: bool,
    /// The chart ideal is ⟨ρ₁, ρ₂, ρ₃⟩ ∩ ⟨x2, x3, x4⟩.
    pub chart_splits: bool,
}

impl RhoCheck {
    pub fn holds(&self) -> bool {
        self.rho_in_saturation && self.saturation_in_rho && self.chart_splits
    }
}

pub fn verify_rho_system(a: &QuadraticAlgebra, limits: &Limits) -> Result<RhoCheck> {
    let chart = chart_ideal(&point_ideal(a)?, 0)?;
    let ring = chart.ring().clone();
    let rho = rho_system(a.gamma())?;
    let rho_ideal = Ideal::new(&ring, rho.to_vec())?;
    let sat = saturate(&chart, &ring.var("x4")?, limits)?;
    let sat_gb = buchberger(&sat, limits)?;
    let rho_gb = buchberger(&rho_ideal, limits)?;
    let rho_in_saturation = sat_gb.contains_all(&rho)?;
    let saturation_in_rho = rho_gb.contains_all(sat.generators())?;
    // chart ⊆ ⟨ρ⟩ ∩ ⟨x2,x3,x4⟩ and both quotients have the same length
    let origin = Ideal::new(
        &ring,
        (0..3).map(|k| Polynomial::var_index(&ring, k)).collect(),
    )?;
    let origin_gb = buchberger(&origin, limits)?;
    let chart_gb = buchberger(&chart, limits)?;
    let inside =
        rho_gb.contains_all(chart.generators())? && origin_gb.contains_all(chart.generators())?;
    let lengths = match (chart_gb.quotient_dimension(), rho_gb.quotient_dimension()) {
        (QuotientDim::Finite(c), QuotientDim::Finite(r)) => c == r + 1,
        _ => false,
    };
    let disjoint = buchberger(&rho_ideal.extend(origin.generators())?, limits)?.is_unit();
    Ok(RhoCheck {
        rho_in_saturation,
        saturation_in_rho,
        chart_splits: inside && lengths && disjoint,
    })
}

#[derive(Clone, Debug)]
pub struct PointSchemeReport {
    pub gamma: GaussianRational,
    /// Quotient dimensions of the slices `x1=1`; `x1=0,x2=1`; `x1=x2=0,x3=1`; `x1=x2=x3=0,x4=1`.
    pub chart_counts: Vec<usize>,
    pub total: usize,
    pub distinct_count: usize,
    /// `(multiplicity, number of points)`, sorted by multiplicity.
    pub multiplicity_profile: Vec<(usize, usize)>,
    pub rho1_squarefree: bool,
    /// Discriminant of ρ₂ in x3 is a unit on the roots of ρ₁.
    pub rho2_separable: bool,
    pub hilbert: (i64, i64),
    pub rho: RhoCheck,
    pub sigma: SigmaReport,
    pub vanishing_pairs: bool,
}

impl PointSchemeReport {
    pub fn verified(&self) -> bool {
        let profile_total: usize = self.multiplicity_profile.iter().map(|(m, n)| m * n).sum();
        let profile_count: usize = self.multiplicity_profile.iter().map(|(_, n)| n).sum();
        self.total == 20
            && profile_total == 20
            && profile_count == self.distinct_count
            && self.hilbert == (0, 20)
            && self.rho2_separable
            && self.rho.holds()
            && self.sigma.holds()
            && self.vanishing_pairs
    }
}

pub fn count_points(a: &QuadraticAlgebra, limits: &Limits) -> Result<PointSchemeReport> {
    let ideal = point_ideal(a)?;
    let mut chart_counts = Vec::new();
    let mut distinct_count = 0;
    for fixed in 0..4 {
        let c = chart_ideal(&ideal, fixed)?;
        let gb = buchberger(&c, limits)?;
        let n = gb
            .quotient_dimension()
            .finite()
            .ok_or_else(|| Error::Invalid(format!("chart {fixed} is not zero-dimensional")))?;
        chart_counts.push(n);
        distinct_count += distinct_points(&c, limits)?;
    }
    let total = chart_counts.iter().sum();

    let rho = rho_system(a.gamma())?;
    let rho1 = UPoly::from_poly(&rho[0], 2)?;
    let rho1_squarefree = rho1.is_squarefree();
    // disc(ρ₂, x3) = 4 − x4⁴
    let disc = UPoly::new(vec![
        GaussianRational::from_int(4),
        GaussianRational::zero(),
        GaussianRational::zero(),
        GaussianRational::zero(),
        GaussianRational::from_int(-1),
    ]);
    let rho2_separable = rho1.gcd(&disc).degree() == Some(0);

    // per Yun factor s_k: the points over its roots have total length k·(their number)
    let z = GenericPoints::new(a.gamma(), limits)?;
    let mut profile: Vec<(usize, usize)> = vec![(1, 4)];
    for (k, s) in rho1.squarefree_decomposition().iter().enumerate() {
        if s.degree() == Some(0) {
            continue;
        }
        let mult = k + 1;
        let piece = s.to_poly(z.ring(), 2);
        let count = z.restrict(std::slice::from_ref(&piece))?.distinct()?;
        let length = z.restrict(&[piece.pow(mult as u32)])?.length()?;
        if length != mult * count {
            return Err(Error::Invalid(format!(
                "inconsistent multiplicity over factor {k}"
            )));
        }
        match profile.iter_mut().find(|(m, _)| *m == mult) {
            Some(e) => e.1 += count,
            None => profile.push((mult, count)),
        }
    }
    profile.sort();

    let hilbert = hilbert_dimension_degree(&ideal, limits)?;
    Ok(PointSchemeReport {
        gamma: a.gamma().clone(),
        chart_counts,
        total,
        distinct_count,
        multiplicity_profile: profile,
        rho1_squarefree,
        rho2_separable,
        hilbert,
        rho: verify_rho_system(a, limits)?,
        sigma: sigma_orbits(a, limits)?,
        vanishing_pairs: verify_vanishing_pairs(a, limits)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::make_A;

    fn g(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    #[test]
    fn fifteen_minors_vanish_at_e2() {
        let a = make_A(&g(1)).unwrap();
        let i = point_ideal(&a).unwrap();
        assert_eq!(i.generators().len(), 15);
        let e2 = ProjectivePoint::basis(2);
        assert!(i.generators().iter().all(|p| p.eval(&e2.0).is_zero()));
        let gb = i.groebner().unwrap();
        assert!(!gb.contains(&x_ring().var("x1").unwrap()).unwrap());
    }

    #[test]
    fn rho_examples() {
        let r = rho_system(&g(1)).unwrap();
        assert_eq!(r[0].to_string(), "x4^8 - 4*x4^4 + 1");
        assert_eq!(r[2].to_string(), "x3*x4^5 - 2*i*x4^3 + x2");
        let r2 = rho_system(&g(2)).unwrap();
        assert!(!UPoly::from_poly(&r2[0], 2).unwrap().is_squarefree());
        assert_eq!(r[1], r2[1]);
        assert!(matches!(rho_system(&g(0)), Err(Error::ZeroGamma)));
    }

    #[test]
    fn sigma_on_basis_points() {
        let a = make_A(&g(1)).unwrap();
        assert_eq!(
            sigma(&ProjectivePoint::basis(1), &a).unwrap(),
            ProjectivePoint::basis(2)
        );
        assert_eq!(
            sigma(&ProjectivePoint::basis(3), &a).unwrap(),
            ProjectivePoint::basis(4)
        );
        assert!(sigma(&ProjectivePoint::from_ints([1, 1, 1, 1]).unwrap(), &a).is_err());
    }

    #[test]
    fn generic_points_units() {
        let z = GenericPoints::new(&g(1), &Limits::default()).unwrap();
        for v in ["x2", "x3", "x4"] {
            assert!(z.is_unit(&z.var(v).unwrap()).unwrap());
        }
        assert_eq!(z.length().unwrap(), 16);
        let x3 = z.var("x3").unwrap();
        let inv = z.inverse(&x3).unwrap();
        assert!(z
            .vanishes(&(&(&inv * &x3) - &Polynomial::one(z.ring())))
            .unwrap());
    }

    #[test]
    fn chart_count_at_one() {
        let a = make_A(&g(1)).unwrap();
        let c = chart_ideal(&point_ideal(&a).unwrap(), 0).unwrap();
        assert_eq!(
            c.groebner().unwrap().quotient_dimension(),
            QuotientDim::Finite(17)
        );
    }
}
