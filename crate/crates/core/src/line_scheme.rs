//! The line scheme in P⁵: minors of the 10×8 matrix built from the Koszul
//! dual, their rewriting in Plücker coordinates, the component catalog and
//! its verification.

use std::sync::{Arc, OnceLock};

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::algebra::{
    m_ring, matrix_to_tensors, n_ring, pairing, uv_ring, QuadraticAlgebra, M_VARS, PAIRS,
};
use crate::arith::GaussianRational;
use crate::error::{Error, Result};
use crate::fixtures::FixtureSet;
use crate::groebner::{
    buchberger, dimension_degree_of_basis, intersect, radical_member_with, reduce_fully,
    GroebnerBasis, Ideal, Limits,
};
use crate::linalg::{PolyMatrix, ScalarMatrix};
use crate::poly::{parse_poly, Monomial, Polynomial, Ring};

/// `[M̂(u) | M̂(v)]` for the computed dual basis.
pub fn build_big_matrix(a: &QuadraticAlgebra) -> Result<PolyMatrix> {
    let mh = a.m_hat()?;
    let uv = uv_ring();
    let left = mh.map(&uv, |p| p.substitute(&z_to("u", &uv)?, &uv))?;
    let right = mh.map(&uv, |p| p.substitute(&z_to("v", &uv)?, &uv))?;
    left.hconcat(&right)
}

fn z_to(prefix: &str, uv: &Arc<Ring>) -> Result<Vec<(&'static str, Polynomial)>> {
    let names = ["z1", "z2", "z3", "z4"];
    names
        .iter()
        .enumerate()
        .map(|(k, z)| Ok((*z, uv.var(&format!("{prefix}{}", k + 1))?)))
        .collect()
}

/// `N_ij = u_i v_j − u_j v_i` over the u,v ring.
pub fn n_images(uv: &Arc<Ring>) -> Vec<Polynomial> {
    PAIRS
        .iter()
        .map(|&(i, j)| {
            let ui = Polynomial::var_index(uv, i);
            let uj = Polynomial::var_index(uv, j);
            let vi = Polynomial::var_index(uv, 4 + i);
            let vj = Polynomial::var_index(uv, 4 + j);
            &(&ui * &vj) - &(&uj * &vi)
        })
        .collect()
}

/// Degree-four N-monomials not divisible by `N14·N23`, the leading monomial of
/// the Plücker relation in N; a basis of the degree-four part of the subring.
fn standard_n_monomials() -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut e = [0u16; 6];
    fn rec(k: usize, left: u16, e: &mut [u16; 6], out: &mut Vec<Monomial>) {
        if k == 5 {
            e[5] = left;
            if !(e[2] > 0 && e[3] > 0) {
                out.push(Monomial::from_exps(e));
            }
            return;
        }
        for d in (0..=left).rev() {
            e[k] = d;
            rec(k + 1, left - d, e, out);
        }
        e[k] = 0;
    }
    rec(0, 4, &mut e, &mut out);
    out
}

struct Rewriter {
    monomials: Vec<Monomial>,
    expansions: Vec<Polynomial>,
    rows: Vec<Monomial>,
    inverse: ScalarMatrix,
}

fn rewriter() -> &'static Rewriter {
    static R: OnceLock<Rewriter> = OnceLock::new();
    R.get_or_init(|| {
        let uv = uv_ring();
        let nr = n_ring();
        let images = n_images(&uv);
        let monomials = standard_n_monomials();
        let expansions: Vec<Polynomial> = monomials
            .iter()
            .map(|m| {
                Polynomial::monomial(&nr, m.clone(), GaussianRational::one()).compose(&images, &uv)
            })
            .collect();
        // all (4,4) monomials occurring, in a fixed order
        let mut all: Vec<Monomial> = expansions
            .iter()
            .flat_map(|p| p.terms().iter().map(|t| t.0.clone()))
            .collect();
        all.sort();
        all.dedup();
        let mut t = ScalarMatrix::zeros(monomials.len(), all.len());
        for (r, p) in expansions.iter().enumerate() {
            for (m, c) in p.terms() {
                let col = all.binary_search(m).expect("collected");
                t.set(r, col, c.clone());
            }
        }
        let (_, pivots) = t.rref();
        assert_eq!(pivots.len(), monomials.len(), "expansions are independent");
        let rows: Vec<Monomial> = pivots.iter().map(|&p| all[p].clone()).collect();
        let mut square = ScalarMatrix::zeros(rows.len(), monomials.len());
        for (c, p) in expansions.iter().enumerate() {
            for (r, m) in rows.iter().enumerate() {
                square.set(r, c, p.coeff(m));
            }
        }
        let inverse = square.inverse().expect("selected rows are independent");
        Rewriter {
            monomials,
            expansions,
            rows,
            inverse,
        }
    })
}

/// Writes a (4,4)-bihomogeneous polynomial in u,v as a quartic in the `N_ij`,
/// in normal form modulo the Plücker relation.
#[allow(non_snake_case)]
pub fn rewrite_in_N(f: &Polynomial) -> Result<Polynomial> {
    let uv = uv_ring();
    if !Ring::same(f.ring(), &uv) {
        return Err(Error::VarSetMismatch(
            "expected a polynomial in u1..u4, v1..v4".into(),
        ));
    }
    let nr = n_ring();
    if f.is_zero() {
        return Ok(Polynomial::zero(&nr));
    }
    if !f.is_bihomogeneous(&[0, 1, 2, 3], &[4, 5, 6, 7], 4, 4) {
        return Err(Error::NotInSubring);
    }
    let rw = rewriter();
    let b: Vec<GaussianRational> = rw.rows.iter().map(|m| f.coeff(m)).collect();
    let mut terms = Vec::new();
    let mut back = Polynomial::zero(&uv);
    for (k, m) in rw.monomials.iter().enumerate() {
        let mut c = GaussianRational::zero();
        for (j, bj) in b.iter().enumerate() {
            let a = rw.inverse.get(k, j);
            if !a.is_zero() && !bj.is_zero() {
                c += &(a * bj);
            }
        }
        if !c.is_zero() {
            back = &back + &rw.expansions[k].scale(&c);
            terms.push((m.clone(), c));
        }
    }
    if back != *f {
        return Err(Error::NotInSubring);
    }
    Ok(Polynomial::from_terms(&nr, terms))
}

/// `N12 ↦ M34, N13 ↦ −M24, N14 ↦ M23, N23 ↦ M14, N24 ↦ −M13, N34 ↦ M12`.
pub fn apply_pluecker_map(g: &Polynomial) -> Result<Polynomial> {
    let mr = m_ring();
    let v = |name: &str| mr.var(name).expect("Pluecker variable");
    let images = [
        v("M34"),
        -&v("M24"),
        v("M23"),
        v("M14"),
        -&v("M13"),
        v("M12"),
    ];
    if g.ring().nvars() != 6 {
        return Err(Error::VarSetMismatch(
            "expected a polynomial in N12..N34".into(),
        ));
    }
    Ok(g.compose(&images, &mr))
}

/// The Plücker polynomial `M12·M34 − M13·M24 + M14·M23`.
pub fn pluecker_polynomial() -> Polynomial {
    parse_poly("M12*M34 - M13*M24 + M14*M23", &m_ring(), None).expect("valid")
}

/// Remainder modulo the Plücker polynomial.
pub fn pluecker_normal_form(f: &Polynomial) -> Polynomial {
    reduce_fully(f, &[pluecker_polynomial().monic()])
}

/// Images in M of the 45 maximal minors of a 10×8 matrix over u,v.
pub fn mapped_minors(m: &PolyMatrix) -> Result<Vec<Polynomial>> {
    let minors = m.all_minors(8)?;
    minors
        .par_iter()
        .map(|f| apply_pluecker_map(&rewrite_in_N(f)?))
        .collect()
}

#[derive(Clone, Debug)]
pub struct LineSchemeIdeal {
    pub gamma: GaussianRational,
    /// P followed by the 45 mapped minors.
    pub polys: Vec<Polynomial>,
    pub ideal: Ideal,
}

impl LineSchemeIdeal {
    pub fn groebner(&self, limits: &Limits) -> Result<GroebnerBasis> {
        buchberger(&self.ideal, limits)
    }
}

fn from_polys(gamma: &GaussianRational, minors: Vec<Polynomial>) -> Result<LineSchemeIdeal> {
    let mut polys = vec![pluecker_polynomial()];
    polys.extend(minors);
    Ok(LineSchemeIdeal {
        gamma: gamma.clone(),
        ideal: Ideal::new(&m_ring(), polys.clone())?,
        polys,
    })
}

pub fn line_scheme_ideal(a: &QuadraticAlgebra) -> Result<LineSchemeIdeal> {
    from_polys(a.gamma(), mapped_minors(&build_big_matrix(a)?)?)
}

/// Same construction from the displayed matrix after checking it against `a`.
pub fn line_scheme_from_displayed(
    a: &QuadraticAlgebra,
    fixtures: &FixtureSet,
) -> Result<LineSchemeIdeal> {
    let shown = fixtures.big_matrix(a.gamma())?;
    if !displayed_matrix_matches(a, &shown)? {
        return Err(Error::Invalid(
            "displayed matrix does not present the Koszul dual".into(),
        ));
    }
    from_polys(a.gamma(), mapped_minors(&shown)?)
}

/// The displayed 10×8 matrix is `[D(u) | D(v)]` where the rows of `D` span
/// the orthogonal complement of the relations.
pub fn displayed_matrix_matches(a: &QuadraticAlgebra, shown: &PolyMatrix) -> Result<bool> {
    let uv = shown.ring().clone();
    let mut left = PolyMatrix::zeros(&uv, 10, 4);
    for r in 0..10 {
        for c in 0..4 {
            left.set(r, c, shown.get(r, c).clone());
            let swapped = shown.get(r, c).compose(&u_to_v(&uv), &uv);
            if &swapped != shown.get(r, c + 4) {
                return Ok(false);
            }
        }
    }
    let tensors = matrix_to_tensors(&left)?;
    let orthogonal = tensors
        .iter()
        .all(|d| a.relations().iter().all(|r| pairing(r, d).is_zero()));
    let rank = ScalarMatrix::from_rows(tensors.iter().map(|t| t.to_vec()).collect())?.rank();
    Ok(orthogonal && rank == 10)
}

fn u_to_v(uv: &Arc<Ring>) -> Vec<Polynomial> {
    (0..8)
        .map(|k| Polynomial::var_index(uv, if k < 4 { k + 4 } else { k }))
        .collect()
}

/// Scaled to leading coefficient 1 after reduction modulo P.
pub fn canonical_form(f: &Polynomial) -> Polynomial {
    pluecker_normal_form(f).monic()
}

/// Matches every computed polynomial to a fixture with the same canonical form.
/// Returns, for each computed polynomial, the index of its fixture.
pub fn match_fixtures(computed: &[Polynomial], fixtures: &[Polynomial]) -> Option<Vec<usize>> {
    let fx: Vec<Polynomial> = fixtures.iter().map(canonical_form).collect();
    let mut used = vec![false; fx.len()];
    let mut out = Vec::with_capacity(computed.len());
    for c in computed {
        let cf = canonical_form(c);
        let k = (0..fx.len()).find(|&k| !used[k] && fx[k] == cf)?;
        used[k] = true;
        out.push(k);
    }
    Some(out)
}

/// How a list of quartics relates to the computed minors modulo P.
#[derive(Clone, Debug)]
pub struct FixtureComparison {
    pub ideal_equal: bool,
    /// The two lists span the same space of quartics modulo P.
    pub span_equal: bool,
    /// Fixtures equal to a single computed polynomial up to scalar.
    pub individually_matched: usize,
    /// Remaining fixtures written as combinations of minors (1-based indices).
    pub combinations: Vec<(usize, Vec<(usize, GaussianRational)>)>,
    pub total: usize,
}

impl FixtureComparison {
    pub fn polynomialwise(&self) -> bool {
        self.individually_matched == self.total
    }
}

/// Compares `l` (P then the 45 minors) against 46 fixtures with the same layout.
pub fn compare_with_fixtures(
    l: &LineSchemeIdeal,
    fixtures: &[Polynomial],
) -> Result<FixtureComparison> {
    let fixture_ideal = Ideal::new(l.ideal.ring(), fixtures.to_vec())?;
    let ideal_equal = crate::groebner::ideals_equal(&l.ideal, &fixture_ideal)?;
    let computed: Vec<Polynomial> = l.polys.iter().map(canonical_form).collect();
    let fx: Vec<Polynomial> = fixtures.iter().map(canonical_form).collect();

    let mut monomials: Vec<Monomial> = computed
        .iter()
        .chain(&fx)
        .flat_map(|p| p.terms().iter().map(|t| t.0.clone()))
        .collect();
    monomials.sort();
    monomials.dedup();
    let quartic_minors: Vec<&Polynomial> = computed
        .iter()
        .filter(|p| p.total_degree() == Some(4))
        .collect();
    let mut system = ScalarMatrix::zeros(monomials.len(), quartic_minors.len());
    for (j, p) in quartic_minors.iter().enumerate() {
        for (i, m) in monomials.iter().enumerate() {
            system.set(i, j, p.coeff(m));
        }
    }
    let mut individually_matched = 0;
    let mut combinations = Vec::new();
    let mut span_equal = true;
    for (k, f) in fx.iter().enumerate() {
        if computed.contains(f) {
            individually_matched += 1;
            continue;
        }
        let b: Vec<GaussianRational> = monomials.iter().map(|m| f.coeff(m)).collect();
        match system.solve(&b) {
            Some(x) => combinations.push((
                k,
                x.into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(j, c)| (j + 1, c))
                    .collect(),
            )),
            None => span_equal = false,
        }
    }
    let rank = |ps: Vec<&Polynomial>| {
        let rows = ps
            .iter()
            .map(|p| monomials.iter().map(|m| p.coeff(m)).collect())
            .collect();
        ScalarMatrix::from_rows(rows).map(|m| m.rank())
    };
    let fixture_quartics: Vec<&Polynomial> =
        fx.iter().filter(|p| p.total_degree() == Some(4)).collect();
    span_equal &= rank(fixture_quartics)? == rank(quartic_minors)?;
    Ok(FixtureComparison {
        ideal_equal,
        span_equal,
        individually_matched,
        combinations,
        total: fixtures.len(),
    })
}

#[derive(Clone, Debug)]
pub struct Component {
    pub name: String,
    pub ideal: Ideal,
    /// Expected projective dimension and degree.
    pub expected: (i64, i64),
    pub planar: bool,
}

#[derive(Clone, Debug)]
pub struct ComponentCatalog {
    pub gamma: GaussianRational,
    pub components: Vec<Component>,
}

impl ComponentCatalog {
    pub fn names(&self) -> Vec<&str> {
        self.components.iter().map(|c| c.name.as_str()).collect()
    }

    pub fn without(&self, name: &str) -> ComponentCatalog {
        ComponentCatalog {
            gamma: self.gamma.clone(),
            components: self
                .components
                .iter()
                .filter(|c| c.name != name)
                .cloned()
                .collect(),
        }
    }

    pub fn get(&self, name: &str) -> Option<&Component> {
        self.components.iter().find(|c| c.name == name)
    }
}

/// `M12² + M34² + γ·M14·M23 − M14² − M23² + 2α·(M14·M23 + M12·M34)`.
pub fn q_form(gamma: &GaussianRational, alpha: &GaussianRational) -> Polynomial {
    let ring = m_ring();
    let base = parse_poly(
        "M12^2 + M34^2 + g*M14*M23 - M14^2 - M23^2",
        &ring,
        Some(gamma),
    )
    .expect("valid");
    let pencil = parse_poly("M14*M23 + M12*M34", &ring, None).expect("valid");
    &base + &pencil.scale(&(alpha + alpha))
}

/// Gram matrix of `q_form` in the order M12, M14, M23, M34.
pub fn q_gram_matrix(gamma: &GaussianRational, alpha: &GaussianRational) -> ScalarMatrix {
    let one = GaussianRational::one();
    let zero = GaussianRational::zero();
    let off = alpha + &(gamma / &GaussianRational::from_int(2));
    ScalarMatrix::from_rows(vec![
        vec![one.clone(), zero.clone(), zero.clone(), alpha.clone()],
        vec![zero.clone(), -&one, off.clone(), zero.clone()],
        vec![zero.clone(), off, -&one, zero.clone()],
        vec![alpha.clone(), zero.clone(), zero, one],
    ])
    .expect("square")
}

/// The linear factors of the pencil member that splits, when γ = ±4.
pub fn q_factorization(
    gamma: &GaussianRational,
) -> Option<(GaussianRational, Polynomial, Polynomial)> {
    let four = GaussianRational::from_int(4);
    let ring = m_ring();
    let (alpha, a, b) = if *gamma == four {
        (
            -GaussianRational::one(),
            "M12 - M34 + M14 - M23",
            "M12 - M34 - M14 + M23",
        )
    } else if *gamma == -&four {
        (
            GaussianRational::one(),
            "M12 + M34 + M14 + M23",
            "M12 + M34 - M14 - M23",
        )
    } else {
        return None;
    };
    let a = parse_poly(a, &ring, None).expect("valid");
    let b = parse_poly(b, &ring, None).expect("valid");
    debug_assert_eq!(&a * &b, q_form(gamma, &alpha));
    Some((alpha, a, b))
}

/// The component ideals with γ substituted; L1 splits when γ = ±4.
pub fn component_catalog(
    gamma: &GaussianRational,
    fixtures: &FixtureSet,
) -> Result<ComponentCatalog> {
    if gamma.is_zero() {
        return Err(Error::ZeroGamma);
    }
    let ring = m_ring();
    let mut components = Vec::new();
    let mut push =
        |name: &str, gens: Vec<Polynomial>, expected: (i64, i64), planar: bool| -> Result<()> {
            components.push(Component {
                name: name.to_string(),
                ideal: Ideal::new(&ring, gens)?,
                expected,
                planar,
            });
            Ok(())
        };
    match q_factorization(gamma) {
        Some((_, fa, fb)) => {
            let l1 = fixtures.component("L1", gamma)?;
            for (name, factor) in [("L1a", fa), ("L1b", fb)] {
                let mut gens = l1[..3].to_vec();
                gens.push(factor);
                push(name, gens, (1, 2), false)?;
            }
        }
        None => push("L1", fixtures.component("L1", gamma)?, (1, 4), false)?,
    }
    for name in ["L2", "L3", "L4", "L5"] {
        push(name, fixtures.component(name, gamma)?, (1, 3), true)?;
    }
    for name in ["L6a", "L6b"] {
        push(name, fixtures.component(name, gamma)?, (1, 2), true)?;
    }
    Ok(ComponentCatalog {
        gamma: gamma.clone(),
        components,
    })
}

#[derive(Clone, Debug, Default)]
pub struct DecompositionReport {
    /// Each component lies in the line scheme.
    pub components_inside: bool,
    /// The line scheme lies in the union of the components.
    pub union_covers: bool,
    /// Generators of the intersection that are plain members of the line ideal.
    pub intersection_members: usize,
    pub intersection_size: usize,
    pub dimension_degree: (i64, i64),
    pub component_data: Vec<(String, (i64, i64))>,
    pub component_degrees_ok: bool,
}

impl DecompositionReport {
    pub fn holds(&self) -> bool {
        self.components_inside
            && self.union_covers
            && self.dimension_degree == (1, 20)
            && self.component_degrees_ok
    }

    pub fn degree_sum(&self) -> i64 {
        self.component_data.iter().map(|(_, (_, d))| d).sum()
    }
}

/// Runs the four checks: components inside, union covers, (1, 20) for the
/// line scheme, and the declared data for each component.
pub fn verify_decomposition(
    l: &LineSchemeIdeal,
    c: &ComponentCatalog,
    limits: &Limits,
) -> Result<DecompositionReport> {
    let mut rep = DecompositionReport::default();
    let comp_gbs = c
        .components
        .par_iter()
        .map(|k| buchberger(&k.ideal, limits))
        .collect::<Result<Vec<_>>>()?;
    rep.components_inside = true;
    for gb in &comp_gbs {
        if !gb.contains_all(&l.polys)? {
            rep.components_inside = false;
        }
    }
    rep.component_degrees_ok = true;
    for (k, gb) in c.components.iter().zip(&comp_gbs) {
        let dd = dimension_degree_of_basis(gb);
        if dd != k.expected {
            rep.component_degrees_ok = false;
        }
        rep.component_data.push((k.name.clone(), dd));
    }

    let line_gb = l.groebner(limits)?;
    rep.dimension_degree = dimension_degree_of_basis(&line_gb);

    let mut inter = c.components[0].ideal.clone();
    for k in &c.components[1..] {
        inter = intersect(&inter, &k.ideal, limits)?;
    }
    let inter_gb = buchberger(&inter, limits)?;
    rep.intersection_size = inter_gb.basis().len();
    rep.union_covers = true;
    for f in inter_gb.basis() {
        if line_gb.contains(f)? {
            rep.intersection_members += 1;
        } else if !radical_member_with(f, &l.ideal, &line_gb, limits)? {
            rep.union_covers = false;
            break;
        }
    }
    Ok(rep)
}

/// Whether `V(component)` is smooth, working in the coordinates `ambient`
/// after setting the other Plücker coordinates to zero. The generators that
/// survive must form a complete intersection there.
pub fn jacobian_smoothness_check(
    component: &Ideal,
    ambient: &[&str],
    limits: &Limits,
) -> Result<bool> {
    let ring = Ring::with_names(ambient)?;
    let assignment: Vec<(&str, Polynomial)> = component
        .ring()
        .vars()
        .names()
        .iter()
        .filter(|n| !ambient.contains(&n.as_str()))
        .map(|n| (n.as_str(), Polynomial::zero(&ring)))
        .collect();
    let gens: Vec<Polynomial> = component
        .generators()
        .iter()
        .map(|g| g.substitute(&assignment, &ring))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|g| !g.is_zero())
        .collect();
    let n = ring.nvars();
    let r = gens.len();
    if r == 0 || r > n {
        return Err(Error::Invalid(
            "no complete intersection in the given coordinates".into(),
        ));
    }
    let mut jac = PolyMatrix::zeros(&ring, r, n);
    for (i, g) in gens.iter().enumerate() {
        for j in 0..n {
            jac.set(i, j, g.derivative(j));
        }
    }
    let mut all = gens.clone();
    all.extend(jac.all_minors(r)?);
    let gb = buchberger(&Ideal::new(&ring, all)?, limits)?;
    Ok(gb.quotient_dimension().finite().is_some())
}

/// Names of the M-variables that a component does not force to zero.
pub fn ambient_of(component: &Ideal) -> Vec<&'static str> {
    M_VARS
        .iter()
        .enumerate()
        .filter(|(k, _)| {
            !component.generators().iter().any(|g| {
                g.len() == 1 && g.total_degree() == Some(1) && g.terms()[0].0.exps()[*k] == 1
            })
        })
        .map(|(_, n)| *n)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::make_A;

    #[test]
    fn n_monomial_basis_size() {
        assert_eq!(standard_n_monomials().len(), 105);
    }

    #[test]
    fn rewrite_examples() {
        let uv = uv_ring();
        let n = n_images(&uv);
        let f = n[0].pow(4);
        assert_eq!(rewrite_in_N(&f).unwrap().to_string(), "N12^4");
        let g = &(&n[0] * &n[5]) * &(&n[1] * &n[4]);
        let r = rewrite_in_N(&g).unwrap();
        assert_eq!(r.compose(&n, &uv), g);
        let bad = uv.var("u1").unwrap().pow(4);
        assert!(matches!(rewrite_in_N(&bad), Err(Error::NotInSubring)));
    }

    #[test]
    fn pluecker_map_examples() {
        let nr = n_ring();
        let f = parse_poly("N12^4", &nr, None).unwrap();
        assert_eq!(apply_pluecker_map(&f).unwrap().to_string(), "M34^4");
        let f = parse_poly("N13*N24", &nr, None).unwrap();
        assert_eq!(apply_pluecker_map(&f).unwrap().to_string(), "M13*M24");
        let f = parse_poly("N14*N23", &nr, None).unwrap();
        assert_eq!(apply_pluecker_map(&f).unwrap().to_string(), "M14*M23");
    }

    #[test]
    fn big_matrix_shape() {
        let a = make_A(&GaussianRational::from_int(1)).unwrap();
        let m = build_big_matrix(&a).unwrap();
        assert_eq!((m.rows(), m.cols()), (10, 8));
        let uv = m.ring().clone();
        for r in 0..10 {
            for c in 0..4 {
                assert_eq!(&m.get(r, c).compose(&u_to_v(&uv), &uv), m.get(r, c + 4));
            }
        }
    }
}
