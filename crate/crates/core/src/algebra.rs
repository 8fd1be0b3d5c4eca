//! Quadratic algebras on four generators, their relation matrices and
//! Koszul duals, and the coordinate symmetries of the A(γ) family.

use std::sync::Arc;

use num_traits::Zero;

use crate::arith::GaussianRational;
use crate::error::{Error, Result};
use crate::linalg::{PolyMatrix, ScalarMatrix};
use crate::poly::parse::parse_expr;
use crate::poly::{Polynomial, Ring, VarSet};

pub const X_VARS: [&str; 4] = ["x1", "x2", "x3", "x4"];
pub const Z_VARS: [&str; 4] = ["z1", "z2", "z3", "z4"];
pub const UV_VARS: [&str; 8] = ["u1", "u2", "u3", "u4", "v1", "v2", "v3", "v4"];
pub const N_VARS: [&str; 6] = ["N12", "N13", "N14", "N23", "N24", "N34"];
pub const M_VARS: [&str; 6] = ["M12", "M13", "M14", "M23", "M24", "M34"];

/// Index pairs `(i, j)`, zero-based, in the order of `M_VARS`.
pub const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

pub fn x_ring() -> Arc<Ring> {
    Ring::with_names(&X_VARS).expect("valid names")
}

pub fn z_ring() -> Arc<Ring> {
    Ring::with_names(&Z_VARS).expect("valid names")
}

pub fn uv_ring() -> Arc<Ring> {
    Ring::with_names(&UV_VARS).expect("valid names")
}

pub fn n_ring() -> Arc<Ring> {
    Ring::with_names(&N_VARS).expect("valid names")
}

pub fn m_ring() -> Arc<Ring> {
    Ring::with_names(&M_VARS).expect("valid names")
}

/// Position of `M_ij` (zero-based `i < j`) in `M_VARS`.
pub fn pair_index(i: usize, j: usize) -> usize {
    PAIRS.iter().position(|&p| p == (i, j)).expect("i < j < 4")
}

/// The defining relations of A(γ), left side minus right side, with `g` for γ.
pub const A_RELATIONS: [&str; 6] = [
    "x4*x1 - i*x1*x4",
    "x3*x3 - x1*x1",
    "x3*x1 - x1*x3 + x2*x2",
    "x3*x2 - i*x2*x3",
    "x4*x4 - x2*x2",
    "x4*x2 - x2*x4 + g*x1*x1",
];

/// A coefficient tensor on `V ⊗ V`: entry `4*k + j` is the coefficient of `x_k ⊗ x_j`.
pub type Tensor = [GaussianRational; 16];

fn zero_tensor() -> Tensor {
    std::array::from_fn(|_| GaussianRational::zero())
}

#[derive(Clone, Debug)]
pub struct QuadraticAlgebra {
    gamma: GaussianRational,
    relations: Vec<Tensor>,
}

/// A(γ).
#[allow(non_snake_case)]
pub fn make_A(gamma: &GaussianRational) -> Result<QuadraticAlgebra> {
    if gamma.is_zero() {
        return Err(Error::ZeroGamma);
    }
    QuadraticAlgebra::from_relations(&A_RELATIONS, gamma)
}

impl QuadraticAlgebra {
    /// Six relations in x1..x4, each optionally written `lhs = rhs`.
    pub fn from_relations<S: AsRef<str>>(
        relations: &[S],
        gamma: &GaussianRational,
    ) -> Result<QuadraticAlgebra> {
        if relations.len() != 6 {
            return Err(Error::Invalid(format!(
                "expected 6 relations, got {}",
                relations.len()
            )));
        }
        let vars = VarSet::new(&X_VARS)?;
        let mut tensors = Vec::with_capacity(6);
        for text in relations {
            let text = text.as_ref();
            let expr = match text.split_once('=') {
                Some((l, r)) => format!("({l}) - ({r})"),
                None => text.to_string(),
            };
            let mut t = zero_tensor();
            for (c, w) in parse_expr(&expr)?.eval_noncommutative(&vars, Some(gamma))? {
                if w.len() != 2 {
                    return Err(Error::Invalid(format!(
                        "relation `{text}` is not quadratic"
                    )));
                }
                t[4 * w[0] + w[1]] += &c;
            }
            tensors.push(t);
        }
        let alg = QuadraticAlgebra {
            gamma: gamma.clone(),
            relations: tensors,
        };
        let rank = alg.coefficient_matrix().rank();
        if rank != 6 {
            return Err(Error::RankDeficient { rank, expected: 6 });
        }
        Ok(alg)
    }

    /// Reads a presentation file: six non-empty, non-comment lines.
    pub fn from_presentation(text: &str, gamma: &GaussianRational) -> Result<QuadraticAlgebra> {
        let lines: Vec<&str> = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .collect();
        QuadraticAlgebra::from_relations(&lines, gamma)
    }

    pub fn gamma(&self) -> &GaussianRational {
        &self.gamma
    }

    pub fn relations(&self) -> &[Tensor] {
        &self.relations
    }

    /// 6×16 matrix with the relation tensors as rows.
    pub fn coefficient_matrix(&self) -> ScalarMatrix {
        ScalarMatrix::from_rows(self.relations.iter().map(|t| t.to_vec()).collect())
            .expect("rectangular")
    }

    /// The 6×4 matrix `M` of linear forms with `M·x` reproducing the relations.
    pub fn relation_matrix(&self) -> PolyMatrix {
        tensors_to_matrix(&self.relations, &x_ring())
    }

    /// Basis of the orthogonal complement of the relation span.
    pub fn koszul_dual_relations(&self) -> Result<Vec<Tensor>> {
        let m = self.coefficient_matrix();
        let rank = m.rank();
        if rank != 6 {
            return Err(Error::RankDeficient { rank, expected: 6 });
        }
        Ok(m.nullspace()
            .into_iter()
            .map(|v| std::array::from_fn(|k| v[k].clone()))
            .collect())
    }

    /// 10×4 matrix over z1..z4 with `M̂·z` reproducing the dual relations.
    pub fn m_hat(&self) -> Result<PolyMatrix> {
        Ok(tensors_to_matrix(&self.koszul_dual_relations()?, &z_ring()))
    }
}

/// Row `r`, column `j` holds `Σ_k t_r[k, j]·y_k`.
pub fn tensors_to_matrix(tensors: &[Tensor], ring: &Arc<Ring>) -> PolyMatrix {
    let mut m = PolyMatrix::zeros(ring, tensors.len(), 4);
    for (r, t) in tensors.iter().enumerate() {
        for j in 0..4 {
            let mut e = Polynomial::zero(ring);
            for k in 0..4 {
                let c = &t[4 * k + j];
                if !c.is_zero() {
                    e = &e + &Polynomial::var_index(ring, k).scale(c);
                }
            }
            m.set(r, j, e);
        }
    }
    m
}

/// Inverse of [`tensors_to_matrix`] for a matrix of linear forms in four variables.
pub fn matrix_to_tensors(m: &PolyMatrix) -> Result<Vec<Tensor>> {
    if m.cols() != 4 || m.ring().nvars() < 4 {
        return Err(Error::Invalid(
            "expected four columns of linear forms".into(),
        ));
    }
    let mut out = Vec::with_capacity(m.rows());
    for r in 0..m.rows() {
        let mut t = zero_tensor();
        for j in 0..4 {
            for (mono, c) in m.get(r, j).terms() {
                let k = mono
                    .exps()
                    .iter()
                    .position(|&e| e == 1)
                    .filter(|_| mono.degree() == 1 && mono.exps().iter().skip(4).all(|&e| e == 0))
                    .ok_or_else(|| {
                        Error::Invalid(format!(
                            "entry ({r}, {j}) is not linear in the first four variables"
                        ))
                    })?;
                t[4 * k + j] = c.clone();
            }
        }
        out.push(t);
    }
    Ok(out)
}

/// Pairing `Σ a[k]·b[k]` of a relation tensor with a dual tensor.
pub fn pairing(a: &Tensor, b: &Tensor) -> GaussianRational {
    let mut acc = GaussianRational::zero();
    for k in 0..16 {
        if !a[k].is_zero() && !b[k].is_zero() {
            acc += &(&a[k] * &b[k]);
        }
    }
    acc
}

/// Bilinear evaluation `Σ t[k, l]·p_k·q_l`.
pub fn eval_bilinear(t: &Tensor, p: &[Polynomial], q: &[Polynomial]) -> Polynomial {
    let ring = p[0].ring().clone();
    let mut acc = Polynomial::zero(&ring);
    for k in 0..4 {
        for l in 0..4 {
            let c = &t[4 * k + l];
            if !c.is_zero() {
                acc = &acc + &(&p[k] * &q[l]).scale(c);
            }
        }
    }
    acc
}

fn m_substitution(f: &Polynomial, images: [(usize, GaussianRational); 6]) -> Result<Polynomial> {
    let ring = f.ring().clone();
    if ring.vars().names() != M_VARS.map(String::from) {
        return Err(Error::VarSetMismatch(
            "expected the Pluecker ring M12..M34".into(),
        ));
    }
    let imgs: Vec<Polynomial> = images
        .iter()
        .map(|(k, c)| Polynomial::var_index(&ring, *k).scale(c))
        .collect();
    Ok(f.compose(&imgs, &ring))
}

/// Induced action of `x1 ↔ x3, x2 ↔ x4` on Plücker coordinates.
pub fn psi1_on_pluecker(f: &Polynomial) -> Result<Polynomial> {
    let one = GaussianRational::from_int(1);
    let m1 = GaussianRational::from_int(-1);
    m_substitution(
        f,
        [
            (5, one.clone()),
            (1, m1.clone()),
            (3, m1.clone()),
            (2, m1.clone()),
            (4, m1),
            (0, one),
        ],
    )
}

/// Pulls back along the Plücker action of `x2 ↔ λx3, x4 ↔ λx1` with `μ = λ²`;
/// the image of `V(I)` is `V(psi2(I))`. Requires `μ² = γ`.
pub fn psi2_on_pluecker(f: &Polynomial, mu: &GaussianRational) -> Result<Polynomial> {
    let one = GaussianRational::from_int(1);
    m_substitution(
        f,
        [
            (5, one.clone()),
            (4, mu.inverse()?),
            (2, one.clone()),
            (3, one.clone()),
            (1, mu.clone()),
            (0, one),
        ],
    )
}

/// `μ` with `μ² = γ` when it exists in ℚ(i).
pub fn psi2_parameter(gamma: &GaussianRational) -> Option<GaussianRational> {
    gamma.sqrt()
}

/// Plücker image of `x2 ↦ −x2`, which relates A(γ) and A(−γ).
pub fn sign_map_on_pluecker(f: &Polynomial) -> Result<Polynomial> {
    let one = GaussianRational::from_int(1);
    let m1 = GaussianRational::from_int(-1);
    m_substitution(
        f,
        [
            (0, m1.clone()),
            (1, one.clone()),
            (2, one.clone()),
            (3, m1.clone()),
            (4, m1),
            (5, one),
        ],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn g(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    #[test]
    fn zero_gamma_rejected() {
        assert!(matches!(make_A(&g(0)), Err(Error::ZeroGamma)));
    }

    #[test]
    fn relation_tensors() {
        let a = make_A(&g(4)).unwrap();
        let r2 = &a.relations()[1];
        assert_eq!(r2[4 * 2 + 2], g(1));
        assert_eq!(r2[0], g(-1));
        assert_eq!(r2.iter().filter(|c| !c.is_zero()).count(), 2);
        assert_eq!(a.relations()[5][0], g(4));
    }

    #[test]
    fn relation_matrix_rows() {
        let a = make_A(&g(3)).unwrap();
        let m = a.relation_matrix();
        let row: Vec<String> = m.row(0).iter().map(|p| p.to_string()).collect();
        assert_eq!(row, ["x4", "0", "0", "-i*x1"]);
        let row: Vec<String> = m.row(5).iter().map(|p| p.to_string()).collect();
        assert_eq!(row, ["3*x1", "x4", "0", "-x2"]);
        let x = x_ring();
        let xs: Vec<Polynomial> = X_VARS.iter().map(|v| x.var(v).unwrap()).collect();
        let mx = m.mul_vec(&xs).unwrap();
        // commutative image of x3*x1 - x1*x3 + x2*x2
        assert_eq!(mx[2].to_string(), "x2^2");
    }

    #[test]
    fn dual_has_ten_orthogonal_relations() {
        let a = make_A(&g(1)).unwrap();
        let dual = a.koszul_dual_relations().unwrap();
        assert_eq!(dual.len(), 10);
        for d in &dual {
            for r in a.relations() {
                assert!(pairing(r, d).is_zero());
            }
        }
        let mh = a.m_hat().unwrap();
        assert_eq!((mh.rows(), mh.cols()), (10, 4));
        assert_eq!(matrix_to_tensors(&mh).unwrap(), dual);
    }

    #[test]
    fn commutative_analogue_is_symmetric() {
        let rels = [
            "x1*x2 - x2*x1",
            "x1*x3 - x3*x1",
            "x1*x4 - x4*x1",
            "x2*x3 - x3*x2",
            "x2*x4 - x4*x2",
            "x3*x4 - x4*x3",
        ];
        let a = QuadraticAlgebra::from_relations(&rels, &g(1)).unwrap();
        let dual = a.koszul_dual_relations().unwrap();
        assert_eq!(dual.len(), 10);
        for d in dual {
            for k in 0..4 {
                for j in 0..4 {
                    assert_eq!(d[4 * k + j], d[4 * j + k]);
                }
            }
        }
    }

    #[test]
    fn rank_deficiency_detected() {
        let rels = ["x1*x2", "x1*x2", "x1*x3", "x1*x4", "x2*x3", "x2*x4"];
        assert!(matches!(
            QuadraticAlgebra::from_relations(&rels, &g(1)),
            Err(Error::RankDeficient { rank: 5, .. })
        ));
    }

    #[test]
    fn presentation_text() {
        let text = "# A(2)\nx4*x1 = i*x1*x4\nx3*x3 = x1*x1\nx3*x1 = x1*x3 - x2*x2\n\nx3*x2 = i*x2*x3\nx4*x4 = x2*x2\nx4*x2 = x2*x4 - g*x1*x1\n";
        let a = QuadraticAlgebra::from_presentation(text, &g(2)).unwrap();
        let b = make_A(&g(2)).unwrap();
        assert_eq!(a.relations(), b.relations());
    }

    #[test]
    fn symmetry_maps() {
        let r = m_ring();
        let f = parse_poly("M12^3 - M12*M23^2 - i*M23*M24^2", &r, None).unwrap();
        assert_eq!(
            psi1_on_pluecker(&f).unwrap().to_string(),
            parse_poly("M34^3 - M14^2*M34 + i*M14*M24^2", &r, None)
                .unwrap()
                .to_string()
        );
        assert_eq!(psi1_on_pluecker(&psi1_on_pluecker(&f).unwrap()).unwrap(), f);
        let h = psi2_on_pluecker(&f, &g(2)).unwrap();
        let l4 = parse_poly("M23^2*M34 + i*g*M13^2*M23 - M34^3", &r, Some(&g(4))).unwrap();
        assert_eq!(&h + &l4, Polynomial::zero(&r));
        let s = sign_map_on_pluecker(&f).unwrap();
        assert_eq!(s.to_string(), "-M12^3 + M12*M23^2 + i*M23*M24^2");
        assert_eq!(psi2_parameter(&g(4)), Some(g(2)));
        assert_eq!(psi2_parameter(&g(5)), None);
    }
}
