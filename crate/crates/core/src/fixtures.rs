//! Golden polynomial lists shipped with the crate. Each list is stored with
//! the parameter written `g` and bound to a concrete γ when parsed.

use std::sync::Arc;

use crate::algebra::{m_ring, uv_ring, x_ring};
use crate::arith::GaussianRational;
use crate::error::{Error, Result};
use crate::linalg::PolyMatrix;
use crate::poly::parse::{parse_expr, Expr};
use crate::poly::{Polynomial, Ring};

const POINT_SCHEME: &str = include_str!("../fixtures/point_scheme.txt");
const LINE_SCHEME: &str = include_str!("../fixtures/line_scheme.txt");
const BIG_MATRIX: &str = include_str!("../fixtures/big_matrix.txt");
const COMPONENTS: &str = include_str!("../fixtures/components.txt");
const SURFACES: &str = include_str!("../fixtures/surfaces.txt");

#[derive(Clone, Debug)]
pub struct FixtureSet {
    pub point_scheme_polys: Vec<String>,
    pub line_scheme_polys: Vec<String>,
    pub big_matrix: Vec<Vec<String>>,
    pub components: Vec<(String, Vec<String>)>,
    pub surfaces: Vec<(String, String)>,
}

fn content_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}

fn named(text: &str) -> Result<Vec<(String, &str)>> {
    content_lines(text)
        .map(|l| {
            l.split_once(':')
                .map(|(n, rest)| (n.trim().to_string(), rest.trim()))
                .ok_or_else(|| Error::Invalid(format!("fixture line `{l}` has no name")))
        })
        .collect()
}

fn split_list(s: &str) -> Vec<String> {
    s.split(';').map(|p| p.trim().to_string()).collect()
}

/// Parses the text against `ring` with a placeholder γ to validate it.
fn check(expr: &str, ring: &Arc<Ring>) -> Result<Expr> {
    let e = parse_expr(expr)?;
    e.eval(ring, Some(&GaussianRational::from_int(1)))?;
    Ok(e)
}

/// Loads and validates every list.
pub fn load_fixtures() -> Result<FixtureSet> {
    let point_scheme_polys: Vec<String> = content_lines(POINT_SCHEME).map(String::from).collect();
    let line_scheme_polys: Vec<String> = content_lines(LINE_SCHEME).map(String::from).collect();
    if point_scheme_polys.len() != 15 || line_scheme_polys.len() != 46 {
        return Err(Error::Invalid("fixture counts must be 15 and 46".into()));
    }
    let (x, m, uv) = (x_ring(), m_ring(), uv_ring());
    for p in &point_scheme_polys {
        check(p, &x)?;
    }
    for p in &line_scheme_polys {
        check(p, &m)?;
    }
    let big_matrix: Vec<Vec<String>> = content_lines(BIG_MATRIX).map(split_list).collect();
    if big_matrix.len() != 10 || big_matrix.iter().any(|r| r.len() != 8) {
        return Err(Error::Invalid("displayed matrix must be 10x8".into()));
    }
    for e in big_matrix.iter().flatten() {
        check(e, &uv)?;
    }
    let mut components = Vec::new();
    for (name, rest) in named(COMPONENTS)? {
        let gens = split_list(rest);
        for g in &gens {
            check(g, &m)?;
        }
        components.push((name, gens));
    }
    let mut surfaces = Vec::new();
    for (name, rest) in named(SURFACES)? {
        check(rest, &x)?;
        surfaces.push((name, rest.to_string()));
    }
    Ok(FixtureSet {
        point_scheme_polys,
        line_scheme_polys,
        big_matrix,
        components,
        surfaces,
    })
}

fn parse_all(
    list: &[String],
    ring: &Arc<Ring>,
    gamma: &GaussianRational,
) -> Result<Vec<Polynomial>> {
    list.iter()
        .map(|s| parse_expr(s)?.eval(ring, Some(gamma)))
        .collect()
}

impl FixtureSet {
    /// The fifteen quartics in x1..x4.
    pub fn point_scheme(&self, gamma: &GaussianRational) -> Result<Vec<Polynomial>> {
        parse_all(&self.point_scheme_polys, &x_ring(), gamma)
    }

    /// The forty-six line-scheme polynomials in M12..M34; the first is P.
    pub fn line_scheme(&self, gamma: &GaussianRational) -> Result<Vec<Polynomial>> {
        parse_all(&self.line_scheme_polys, &m_ring(), gamma)
    }

    /// The displayed 10×8 matrix over u1..u4, v1..v4.
    pub fn big_matrix(&self, gamma: &GaussianRational) -> Result<PolyMatrix> {
        let ring = uv_ring();
        let entries = self
            .big_matrix
            .iter()
            .flatten()
            .map(|s| parse_expr(s)?.eval(&ring, Some(gamma)))
            .collect::<Result<Vec<_>>>()?;
        PolyMatrix::new(&ring, 10, 8, entries)
    }

    pub fn component(&self, name: &str, gamma: &GaussianRational) -> Result<Vec<Polynomial>> {
        let (_, gens) = self
            .components
            .iter()
            .find(|(n, _)| n == name)
            .ok_or_else(|| Error::Invalid(format!("no component named {name}")))?;
        parse_all(gens, &m_ring(), gamma)
    }

    pub fn surface(&self, name: &str, gamma: &GaussianRational) -> Result<Polynomial> {
        let (_, s) = self
            .surfaces
            .iter()
            .find(|(n, _)| n == name)
            .ok_or_else(|| Error::Invalid(format!("no surface named {name}")))?;
        parse_expr(s)?.eval(&x_ring(), Some(gamma))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_first_entries() {
        let f = load_fixtures().unwrap();
        let g = GaussianRational::from_int(1);
        let ps = f.point_scheme(&g).unwrap();
        let ls = f.line_scheme(&g).unwrap();
        assert_eq!((ps.len(), ls.len()), (15, 46));
        assert_eq!(ps[0].to_string(), "x1^2*x2^2 + x3^2*x4^2");
        assert_eq!(ls[0].to_string(), "M14*M23 - M13*M24 + M12*M34");
        assert_eq!(ls[1].to_string(), "2*M13*M14*M23*M24");
    }

    #[test]
    fn degrees() {
        let f = load_fixtures().unwrap();
        let g = GaussianRational::from_int(5);
        for p in f.point_scheme(&g).unwrap() {
            assert!(p.is_homogeneous());
            assert_eq!(p.total_degree(), Some(4));
        }
        for (k, p) in f.line_scheme(&g).unwrap().iter().enumerate() {
            assert!(p.is_homogeneous());
            assert_eq!(p.total_degree(), Some(if k == 0 { 2 } else { 4 }));
        }
    }

    #[test]
    fn unbound_parameter_is_an_error() {
        let f = load_fixtures().unwrap();
        assert!(matches!(
            crate::poly::parse_poly(&f.point_scheme_polys[4], &x_ring(), None),
            Err(Error::UnboundParameter)
        ));
    }

    #[test]
    fn displayed_matrix_row() {
        let f = load_fixtures().unwrap();
        let m = f.big_matrix(&GaussianRational::from_int(1)).unwrap();
        let row: Vec<String> = m.row(6).iter().map(|p| p.to_string()).collect();
        assert_eq!(row, ["-u4", "0", "0", "i*u1", "-v4", "0", "0", "i*v1"]);
        assert_eq!(f.components.len(), 9);
    }
}
