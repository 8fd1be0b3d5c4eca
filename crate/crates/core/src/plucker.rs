//! Lines of P³ in Plücker coordinates: joins, incidence, the line families
//! carried by each component, their surfaces and rulings, and the lines
//! through a generic point of the point scheme.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::algebra::{x_ring, PAIRS};
use crate::arith::GaussianRational;
use crate::error::{Error, Result};
use crate::fixtures::FixtureSet;
use crate::groebner::{buchberger, dimension_degree_of_basis, radical_member_with, Ideal, Limits};
use crate::linalg::ScalarMatrix;
use crate::line_scheme::ComponentCatalog;
use crate::point_scheme::{GenericPoints, ProjectivePoint};
use crate::poly::{parse_poly, Polynomial, Ring};

type GR = GaussianRational;

/// Coordinates `(M12, M13, M14, M23, M24, M34)` of a line, up to scale.
#[derive(Clone, Debug)]
pub struct PluckerLine {
    pub m: [GR; 6],
}

impl PluckerLine {
    pub fn new(m: [GR; 6]) -> Result<Self> {
        if m.iter().all(Zero::is_zero) {
            return Err(Error::Invalid("all Pluecker coordinates are zero".into()));
        }
        let l = PluckerLine { m };
        if !l.satisfies_pluecker() {
            return Err(Error::Invalid(
                "coordinates violate the Pluecker relation".into(),
            ));
        }
        Ok(l)
    }

    pub fn get(&self, i: usize, j: usize) -> GR {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.m[pair(i, j)].clone(),
            std::cmp::Ordering::Greater => -&self.m[pair(j, i)],
            std::cmp::Ordering::Equal => GR::zero(),
        }
    }

    pub fn satisfies_pluecker(&self) -> bool {
        let m = &self.m;
        (&(&(&m[0] * &m[5]) - &(&m[1] * &m[4])) + &(&m[2] * &m[3])).is_zero()
    }

    /// Scaled so the first nonzero coordinate is 1.
    pub fn normalized(&self) -> PluckerLine {
        let lead = self
            .m
            .iter()
            .find(|c| !c.is_zero())
            .expect("nonzero")
            .clone();
        PluckerLine {
            m: self.m.clone().map(|c| &c / &lead),
        }
    }

    /// Two points spanning the line: columns `i`, `j` of the antisymmetric
    /// coordinate matrix for some `M_ij ≠ 0`.
    pub fn matrix(&self) -> LineMatrix {
        let (k, _) = self
            .m
            .iter()
            .enumerate()
            .find(|(_, c)| !c.is_zero())
            .expect("nonzero");
        let (i, j) = PAIRS[k];
        let col = |c: usize| {
            ProjectivePoint(
                (0..4)
                    .map(|r| self.get(r, c))
                    .collect::<Vec<_>>()
                    .try_into()
                    .unwrap(),
            )
        };
        LineMatrix {
            rows: [col(i), col(j)],
        }
    }

    /// Values of M-polynomials at this line.
    pub fn eval(&self, f: &Polynomial) -> GR {
        f.eval(&self.m)
    }

    pub fn satisfies(&self, fs: &[Polynomial]) -> bool {
        fs.iter().all(|f| self.eval(f).is_zero())
    }
}

impl PartialEq for PluckerLine {
    fn eq(&self, other: &Self) -> bool {
        (0..6).all(|i| {
            (0..6).all(|j| (&(&self.m[i] * &other.m[j]) - &(&self.m[j] * &other.m[i])).is_zero())
        })
    }
}

impl fmt::Display for PluckerLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.normalized();
        let parts: Vec<String> = n.m.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(" : "))
    }
}

fn pair(i: usize, j: usize) -> usize {
    PAIRS.iter().position(|&p| p == (i, j)).expect("i < j")
}

/// A rank-two 2×4 matrix whose rows span a line.
#[derive(Clone, Debug)]
pub struct LineMatrix {
    pub rows: [ProjectivePoint; 2],
}

impl LineMatrix {
    pub fn to_line(&self) -> Result<PluckerLine> {
        line_from_points(&self.rows[0], &self.rows[1])
    }
}

pub fn line_from_points(a: &ProjectivePoint, b: &ProjectivePoint) -> Result<PluckerLine> {
    let m = PAIRS.map(|(i, j)| &(&a.0[i] * &b.0[j]) - &(&a.0[j] * &b.0[i]));
    if m.iter().all(Zero::is_zero) {
        return Err(Error::DependentPoints);
    }
    Ok(PluckerLine { m })
}

/// The line cut out by two planes, given by their coefficient vectors.
pub fn line_from_planes(f: &[GR; 4], g: &[GR; 4]) -> Result<PluckerLine> {
    let null = ScalarMatrix::from_rows(vec![f.to_vec(), g.to_vec()])?.nullspace();
    if null.len() != 2 {
        return Err(Error::DependentPoints);
    }
    let p = |v: &Vec<GR>| ProjectivePoint(v.clone().try_into().expect("four"));
    line_from_points(&p(&null[0]), &p(&null[1]))
}

/// `p ∧ ℓ = 0`: for every triple `i<j<k`, `p_i M_jk − p_j M_ik + p_k M_ij = 0`.
pub fn point_on_line(p: &ProjectivePoint, l: &PluckerLine) -> bool {
    TRIPLES.iter().all(|&(i, j, k)| {
        let v =
            &(&(&p.0[i] * &l.get(j, k)) - &(&p.0[j] * &l.get(i, k))) + &(&p.0[k] * &l.get(i, j));
        v.is_zero()
    })
}

/// Rank test: `p` stacked onto a spanning matrix of `l` has rank two.
pub fn point_on_line_by_rank(p: &ProjectivePoint, l: &PluckerLine) -> bool {
    let lm = l.matrix();
    let rows = vec![lm.rows[0].0.to_vec(), lm.rows[1].0.to_vec(), p.0.to_vec()];
    ScalarMatrix::from_rows(rows).expect("3x4").rank() == 2
}

const TRIPLES: [(usize, usize, usize); 4] = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)];

/// Plücker coordinates of the join of two polynomial points.
pub fn join(a: &[Polynomial; 4], b: &[Polynomial; 4]) -> [Polynomial; 6] {
    PAIRS.map(|(i, j)| &(&a[i] * &b[j]) - &(&a[j] * &b[i]))
}

/// The four incidence forms of a polynomial point against polynomial coordinates.
pub fn incidence(p: &[Polynomial; 4], m: &[Polynomial; 6]) -> [Polynomial; 4] {
    let get = |i: usize, j: usize| m[pair(i, j)].clone();
    TRIPLES
        .map(|(i, j, k)| &(&(&p[i] * &get(j, k)) - &(&p[j] * &get(i, k))) + &(&p[k] * &get(i, j)))
}

/// A family of lines given by a parametrized 2×4 matrix. The family ring
/// holds the parameters followed by `l1, l2`, the coordinates along a line.
#[derive(Clone, Debug)]
pub struct LineFamily {
    pub name: String,
    pub ring: Arc<Ring>,
    pub rows: [[Polynomial; 4]; 2],
    pub constraints: Vec<Polynomial>,
}

impl LineFamily {
    fn build(
        name: &str,
        params: &[&str],
        rows: [[&str; 4]; 2],
        constraints: &[&str],
        gamma: &GR,
    ) -> Result<Self> {
        let mut names: Vec<&str> = params.to_vec();
        names.extend(["l1", "l2"]);
        let ring = Ring::with_names(&names)?;
        let p = |s: &str| parse_poly(s, &ring, Some(gamma));
        let row = |r: [&str; 4]| -> Result<[Polynomial; 4]> {
            Ok([p(r[0])?, p(r[1])?, p(r[2])?, p(r[3])?])
        };
        Ok(LineFamily {
            name: name.to_string(),
            rows: [row(rows[0])?, row(rows[1])?],
            constraints: constraints.iter().map(|c| p(c)).collect::<Result<_>>()?,
            ring,
        })
    }

    /// Matrix `(*)`: rows `(a1, 0, a3, 0)` and `(0, b2, 0, b4)`, the L1 lines.
    pub fn l1(gamma: &GR) -> Result<Self> {
        LineFamily::build(
            "L1",
            &["a1", "a3", "b2", "b4"],
            [["a1", "0", "a3", "0"], ["0", "b2", "0", "b4"]],
            &["a1^2*b2^2 + a3^2*b4^2 - g*a1*b2*a3*b4 - a1^2*b4^2 - b2^2*a3^2"],
            gamma,
        )
    }

    /// Matrix `(*)` under the linear condition for L1a.
    pub fn l1a(gamma: &GR) -> Result<Self> {
        LineFamily::build(
            "L1a",
            &["a1", "a3", "b2", "b4"],
            [["a1", "0", "a3", "0"], ["0", "b2", "0", "b4"]],
            &["a1*b2 + a1*b4 + b2*a3 - a3*b4"],
            gamma,
        )
    }

    pub fn l1b(gamma: &GR) -> Result<Self> {
        LineFamily::build(
            "L1b",
            &["a1", "a3", "b2", "b4"],
            [["a1", "0", "a3", "0"], ["0", "b2", "0", "b4"]],
            &["a1*b2 - a1*b4 - a3*b2 - a3*b4"],
            gamma,
        )
    }

    /// Rows `(a1, a2, a3, a4)` and `(s·a1, t·a2, t·a3, s·a4)` with `a1·a2 = i·a3·a4`.
    pub fn l6a(gamma: &GR) -> Result<Self> {
        LineFamily::build(
            "L6a",
            &["a1", "a2", "a3", "a4", "s", "t"],
            [["a1", "a2", "a3", "a4"], ["s*a1", "t*a2", "t*a3", "s*a4"]],
            &["a1*a2 - i*a3*a4"],
            gamma,
        )
    }

    /// As for L6a with `a3·a4 = i·a1·a2`.
    pub fn l6b(gamma: &GR) -> Result<Self> {
        LineFamily::build(
            "L6b",
            &["a1", "a2", "a3", "a4", "s", "t"],
            [["a1", "a2", "a3", "a4"], ["s*a1", "t*a2", "t*a3", "s*a4"]],
            &["a3*a4 - i*a1*a2"],
            gamma,
        )
    }

    /// `l1·row1 + l2·row2`.
    pub fn general_point(&self) -> Result<[Polynomial; 4]> {
        let l1 = self.ring.var("l1")?;
        let l2 = self.ring.var("l2")?;
        Ok([0, 1, 2, 3].map(|k| &(&l1 * &self.rows[0][k]) + &(&l2 * &self.rows[1][k])))
    }

    pub fn pluecker(&self) -> [Polynomial; 6] {
        join(&self.rows[0], &self.rows[1])
    }

    fn vanish_on_constraints(&self, fs: &[Polynomial], limits: &Limits) -> Result<bool> {
        let ideal = Ideal::new(&self.ring, self.constraints.clone())?;
        let gb = buchberger(&ideal, limits)?;
        for f in fs {
            if !radical_member_with(f, &ideal, &gb, limits)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Every line of the family has coordinates in the variety of `component`.
    pub fn lies_in(&self, component: &Ideal, limits: &Limits) -> Result<bool> {
        let m = self.pluecker();
        let fs: Vec<Polynomial> = component
            .generators()
            .iter()
            .map(|g| g.compose(&m, &self.ring))
            .collect();
        self.vanish_on_constraints(&fs, limits)
    }
}

/// Whether every point of every line of the family lies on the surface.
pub fn surface_containment(
    family: &LineFamily,
    surface: &Polynomial,
    limits: &Limits,
) -> Result<bool> {
    let f = surface.compose(&family.general_point()?, &family.ring);
    family.vanish_on_constraints(&[f], limits)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Quadric {
    Q6a,
    Q6b,
    Qa,
    Qb,
}

impl Quadric {
    pub fn surface_name(self) -> &'static str {
        match self {
            Quadric::Q6a => "Q6a",
            Quadric::Q6b => "Q6b",
            Quadric::Qa => "Qa",
            Quadric::Qb => "Qb",
        }
    }

    /// The component whose lines form the ruling.
    pub fn component_name(self) -> &'static str {
        match self {
            Quadric::Q6a => "L6a",
            Quadric::Q6b => "L6b",
            Quadric::Qa => "L1a",
            Quadric::Qb => "L1b",
        }
    }
}

/// One line of the named ruling. For Q6a the line is
/// `V(δx1 − εx4, δx3 + iεx2)` and for Q6b `V(δx3 − εx2, δx1 + iεx4)` with
/// `(δ, ε) = param`. For Qa the pair `(s, t)` stands for `α = t/s` in
/// `V(x1 − αx3, (α+1)x2 + (α−1)x4)`, and for Qb in
/// `V(x3 − αx1, (α−1)x2 + (α+1)x4)`; `s = 0` gives the line at infinity.
pub fn ruling_lines(quadric: Quadric, param: (&GR, &GR)) -> Result<PluckerLine> {
    let (d, e) = param;
    if d.is_zero() && e.is_zero() {
        return Err(Error::ZeroParameter);
    }
    let z = GR::zero();
    let i = GR::i();
    let (f, g) = match quadric {
        Quadric::Q6a => (
            [d.clone(), z.clone(), z.clone(), -e],
            [z.clone(), &i * e, d.clone(), z],
        ),
        Quadric::Q6b => (
            [z.clone(), -e, d.clone(), z.clone()],
            [d.clone(), z.clone(), z, &i * e],
        ),
        Quadric::Qa => (
            [d.clone(), z.clone(), -e, z.clone()],
            [z.clone(), e + d, z, e - d],
        ),
        Quadric::Qb => (
            [-e, z.clone(), d.clone(), z.clone()],
            [z.clone(), e - d, z, e + d],
        ),
    };
    line_from_planes(&f, &g)
}

/// The line `V(x1 − αx3, x2 − βx4)` of the L1 family.
pub fn l1_line(alpha: &GR, beta: &GR) -> Result<PluckerLine> {
    let (o, z) = (GR::one(), GR::zero());
    line_from_planes(
        &[o.clone(), z.clone(), -alpha, z.clone()],
        &[z.clone(), o, z, -beta],
    )
}

/// One of the six lines through the generic point, valid where `condition`
/// vanishes in addition to the point-scheme ideal.
#[derive(Clone, Debug)]
pub struct SymbolicLine {
    pub component: String,
    pub condition: Vec<Polynomial>,
    pub m: [Polynomial; 6],
}

#[derive(Clone, Debug)]
pub struct LineCheck {
    pub component: String,
    /// Length of the piece of the generic points where this line is used.
    pub piece_length: usize,
    pub in_component: bool,
    pub in_line_scheme: bool,
    pub contains_point: bool,
    pub nondegenerate: bool,
}

impl LineCheck {
    pub fn holds(&self) -> bool {
        self.in_component && self.in_line_scheme && self.contains_point && self.nondegenerate
    }
}

#[derive(Clone, Debug)]
pub struct SixLinesReport {
    pub gamma: GR,
    /// x2, x3, x4 are invertible on the generic points.
    pub units_certified: bool,
    pub lines: Vec<LineCheck>,
    /// Families whose pieces cover the generic points without overlap.
    pub families_partitioned: Vec<(String, bool)>,
    pub pairwise_distinct: bool,
    pub count: usize,
}

impl SixLinesReport {
    pub fn holds(&self) -> bool {
        self.units_certified
            && self.pairwise_distinct
            && self.count == 6
            && self.lines.iter().all(LineCheck::holds)
            && self.families_partitioned.iter().all(|(_, ok)| *ok)
    }
}

/// The lines through `(1, x2, x3, x4)` grouped by family, one entry per piece.
pub fn symbolic_lines(
    z: &GenericPoints,
    catalog: &ComponentCatalog,
) -> Result<Vec<(String, Vec<SymbolicLine>)>> {
    let r = z.ring();
    let [one, x2, x3, x4] = z.point();
    let zero = Polynomial::zero(r);
    let i = Polynomial::constant(r, GR::i());
    let e = |k: usize| {
        let mut v = [zero.clone(), zero.clone(), zero.clone(), zero.clone()];
        v[k - 1] = one.clone();
        v
    };
    let line = |name: &str, a: [Polynomial; 4], b: [Polynomial; 4], condition: Vec<Polynomial>| {
        SymbolicLine {
            component: name.to_string(),
            condition,
            m: join(&a, &b),
        }
    };

    let mut families = Vec::new();
    let l1_rows = (
        [one.clone(), zero.clone(), x3.clone(), zero.clone()],
        [zero.clone(), x2.clone(), zero.clone(), x4.clone()],
    );
    let l1_m = join(&l1_rows.0, &l1_rows.1);
    let l1 = if catalog.get("L1").is_some() {
        vec![line("L1", l1_rows.0.clone(), l1_rows.1.clone(), vec![])]
    } else {
        ["L1a", "L1b"]
            .iter()
            .map(|name| {
                let c = catalog
                    .get(name)
                    .ok_or_else(|| Error::Invalid(format!("catalog lacks {name}")))?;
                let linear = c.ideal.generators().last().expect("generators");
                let cond = z.reduce(&linear.compose(&l1_m, r))?;
                Ok(line(name, l1_rows.0.clone(), l1_rows.1.clone(), vec![cond]))
            })
            .collect::<Result<Vec<_>>>()?
    };
    families.push(("L1".to_string(), l1));
    families.push((
        "L2".into(),
        vec![line(
            "L2",
            e(2),
            [one.clone(), zero.clone(), x3.clone(), x4.clone()],
            vec![],
        )],
    ));
    families.push((
        "L3".into(),
        vec![line(
            "L3",
            e(4),
            [one.clone(), x2.clone(), x3.clone(), zero.clone()],
            vec![],
        )],
    ));
    families.push((
        "L4".into(),
        vec![line(
            "L4",
            e(3),
            [one.clone(), x2.clone(), zero.clone(), x4.clone()],
            vec![],
        )],
    ));
    families.push((
        "L5".into(),
        vec![line(
            "L5",
            e(1),
            [zero.clone(), x2.clone(), x3.clone(), x4.clone()],
            vec![],
        )],
    ));
    let base = [one.clone(), zero.clone(), zero.clone(), x4.clone()];
    let ix3x4 = &(&i * &x3) * &x4;
    let ix4 = &i * &x4;
    families.push((
        "L6".into(),
        vec![
            line(
                "L6a",
                base.clone(),
                [zero.clone(), ix4.clone(), one.clone(), zero.clone()],
                vec![&x2 - &ix3x4],
            ),
            line(
                "L6b",
                base,
                [zero.clone(), -&ix4, one.clone(), zero.clone()],
                vec![&x2 + &ix3x4],
            ),
        ],
    ));
    Ok(families)
}

fn compose_all(fs: &[Polynomial], m: &[Polynomial; 6], z: &GenericPoints) -> Vec<Polynomial> {
    fs.iter().map(|f| f.compose(m, z.ring())).collect()
}

/// Checks the six lines through the generic point of the point scheme.
/// `line_polys` are the 46 line-scheme polynomials.
pub fn lines_through_point(
    z: &GenericPoints,
    catalog: &ComponentCatalog,
    line_polys: &[Polynomial],
) -> Result<SixLinesReport> {
    let [_, x2, x3, x4] = z.point();
    for (name, v) in [("x2", &x2), ("x3", &x3), ("x4", &x4)] {
        if !z.is_unit(v)? {
            return Err(Error::NonUnit(name.to_string()));
        }
    }
    let point = z.point();
    let families = symbolic_lines(z, catalog)?;

    let flat: Vec<(usize, &SymbolicLine)> = families
        .iter()
        .enumerate()
        .flat_map(|(k, (_, ls))| ls.iter().map(move |l| (k, l)))
        .collect();
    let lines = flat
        .par_iter()
        .map(|(_, l)| -> Result<LineCheck> {
            let piece = if l.condition.is_empty() {
                z.clone()
            } else {
                z.restrict(&l.condition)?
            };
            let all_vanish = |fs: Vec<Polynomial>| -> Result<bool> {
                for f in &fs {
                    if !piece.vanishes(f)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            };
            let comp = catalog
                .get(&l.component)
                .ok_or_else(|| Error::Invalid(format!("catalog lacks {}", l.component)))?;
            Ok(LineCheck {
                component: l.component.clone(),
                piece_length: piece.length()?,
                in_component: all_vanish(compose_all(comp.ideal.generators(), &l.m, z))?,
                in_line_scheme: all_vanish(compose_all(line_polys, &l.m, z))?,
                contains_point: all_vanish(incidence(&point, &l.m).to_vec())?,
                nondegenerate: piece.never_all_zero(&l.m)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let mut families_partitioned = Vec::new();
    for (name, ls) in &families {
        let ok = if ls.len() == 1 {
            ls[0].condition.is_empty()
        } else {
            let product = ls
                .iter()
                .map(|l| l.condition[0].clone())
                .reduce(|a, b| &a * &b)
                .expect("pieces");
            let mut ok = z.vanishes(&product)?;
            for a in 0..ls.len() {
                for b in a + 1..ls.len() {
                    let mut both = ls[a].condition.clone();
                    both.extend(ls[b].condition.iter().cloned());
                    ok &= z.never_all_zero(&both)?;
                }
            }
            ok
        };
        families_partitioned.push((name.clone(), ok));
    }

    let mut pairwise_distinct = true;
    for a in 0..flat.len() {
        for b in a + 1..flat.len() {
            let ((fa, la), (fb, lb)) = (flat[a], flat[b]);
            if fa == fb {
                continue;
            }
            let mut gens: Vec<Polynomial> =
                la.condition.iter().chain(&lb.condition).cloned().collect();
            let (ma, mb) = (&la.m, &lb.m);
            for i in 0..6 {
                for j in i + 1..6 {
                    gens.push(&(&ma[i] * &mb[j]) - &(&ma[j] * &mb[i]));
                }
            }
            if !z.never_all_zero(&gens)? {
                pairwise_distinct = false;
            }
        }
    }

    let count = families_partitioned.iter().filter(|(_, ok)| *ok).count();
    Ok(SixLinesReport {
        gamma: z.gamma().clone(),
        units_certified: true,
        lines,
        families_partitioned,
        pairwise_distinct,
        count,
    })
}

/// `e_j` lies on infinitely many lines of the component joining it to a
/// planar curve: every join with a point of the curve lies in the component,
/// the curve is one-dimensional and misses `e_j`.
#[derive(Clone, Debug)]
pub struct InfiniteFlag {
    pub basis_point: usize,
    pub component: String,
    pub joins_in_component: bool,
    pub curve_dimension_degree: (i64, i64),
    pub misses_basis_point: bool,
}

impl InfiniteFlag {
    pub fn holds(&self) -> bool {
        self.joins_in_component && self.curve_dimension_degree.0 == 1 && self.misses_basis_point
    }
}

/// For `e1..e4`: the components L5, L2, L4, L3 and their curves C5, C2, C4, C3.
pub fn infinite_flags(
    gamma: &GR,
    catalog: &ComponentCatalog,
    fixtures: &FixtureSet,
    limits: &Limits,
) -> Result<Vec<InfiniteFlag>> {
    let table = [
        (1, "L5", "C5"),
        (2, "L2", "C2"),
        (3, "L4", "C4"),
        (4, "L3", "C3"),
    ];
    let x = x_ring();
    table
        .iter()
        .map(|&(j, comp, curve)| {
            let plane = Polynomial::var_index(&x, j - 1);
            let cubic = fixtures.surface(curve, gamma)?;
            let ideal = Ideal::new(&x, vec![plane, cubic])?;
            let gb = buchberger(&ideal, limits)?;
            let mut e = [0, 1, 2, 3].map(|_| Polynomial::zero(&x));
            e[j - 1] = Polynomial::one(&x);
            let r: [Polynomial; 4] = [0, 1, 2, 3].map(|k| Polynomial::var_index(&x, k));
            let m = join(&e, &r);
            let c = catalog
                .get(comp)
                .ok_or_else(|| Error::Invalid(format!("catalog lacks {comp}")))?;
            let mut joins_in_component = true;
            for g in c.ideal.generators() {
                if !radical_member_with(&g.compose(&m, &x), &ideal, &gb, limits)? {
                    joins_in_component = false;
                }
            }
            let ej = ProjectivePoint::basis(j);
            let misses_basis_point = !gb.basis().iter().all(|g| g.eval(&ej.0).is_zero());
            Ok(InfiniteFlag {
                basis_point: j,
                component: comp.to_string(),
                joins_in_component,
                curve_dimension_degree: dimension_degree_of_basis(&gb),
                misses_basis_point,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: [i64; 4]) -> ProjectivePoint {
        ProjectivePoint::from_ints(c).unwrap()
    }

    #[test]
    fn basis_joins() {
        let l = line_from_points(&ProjectivePoint::basis(1), &ProjectivePoint::basis(2)).unwrap();
        assert_eq!(
            l.m.clone().map(|c| c.to_string()),
            ["1", "0", "0", "0", "0", "0"]
        );
        let l = line_from_points(&ProjectivePoint::basis(3), &ProjectivePoint::basis(4)).unwrap();
        assert_eq!(
            l.m.clone().map(|c| c.to_string()),
            ["0", "0", "0", "0", "0", "1"]
        );
        assert!(matches!(
            line_from_points(&p([1, 2, 3, 4]), &p([2, 4, 6, 8])),
            Err(Error::DependentPoints)
        ));
    }

    #[test]
    fn star_matrix_coordinates() {
        let l = line_from_points(&p([2, 0, 3, 0]), &p([0, 5, 0, 7])).unwrap();
        assert_eq!(
            l.m.clone().map(|c| c.to_string()),
            ["10", "0", "14", "-15", "0", "21"]
        );
        assert!(l.satisfies_pluecker());
    }

    #[test]
    fn incidence_examples() {
        let l = line_from_points(&ProjectivePoint::basis(1), &ProjectivePoint::basis(2)).unwrap();
        assert!(point_on_line(&ProjectivePoint::basis(1), &l));
        assert!(!point_on_line(&ProjectivePoint::basis(3), &l));
        let (alpha, beta) = (GR::from_int(3), GR::from_int(-2));
        let line = l1_line(&alpha, &beta).unwrap();
        let q = ProjectivePoint([alpha.clone(), beta.clone(), GR::one(), GR::one()]);
        assert!(point_on_line(&q, &line));
        assert!(point_on_line_by_rank(&q, &line));
    }

    #[test]
    fn matrix_recovers_line() {
        let l = line_from_points(&p([1, 2, 0, -1]), &p([0, 1, 1, 3])).unwrap();
        assert_eq!(l.matrix().to_line().unwrap(), l);
    }

    #[test]
    fn ruling_examples() {
        let (o, z) = (GR::one(), GR::zero());
        let l = ruling_lines(Quadric::Q6a, (&o, &z)).unwrap();
        let e24 = line_from_points(&ProjectivePoint::basis(2), &ProjectivePoint::basis(4)).unwrap();
        assert_eq!(l, e24);
        let l = ruling_lines(Quadric::Q6b, (&z, &o)).unwrap();
        let e13 = line_from_points(&ProjectivePoint::basis(1), &ProjectivePoint::basis(3)).unwrap();
        assert_eq!(l, e13);
        assert!(matches!(
            ruling_lines(Quadric::Qa, (&z, &z)),
            Err(Error::ZeroParameter)
        ));
    }
}
