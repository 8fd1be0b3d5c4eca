//! Dense univariate polynomials over ℚ(i): gcd, derivative and squarefree
//! decomposition. Coefficients are stored in ascending degree order.

use num_traits::{One, Zero};

use crate::arith::GaussianRational;
use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UPoly(Vec<GaussianRational>);

impl UPoly {
    pub fn new(mut coeffs: Vec<GaussianRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly(coeffs)
    }

    /// Reads a polynomial that involves at most the variable `var`.
    pub fn from_poly(f: &Polynomial, var: usize) -> Result<Self> {
        let mut coeffs = Vec::new();
        for (m, c) in f.terms() {
            if m.exps().iter().enumerate().any(|(k, &e)| k != var && e > 0) {
                return Err(Error::Invalid(format!("`{f}` is not univariate")));
            }
            let d = m.exps()[var] as usize;
            if coeffs.len() <= d {
                coeffs.resize(d + 1, GaussianRational::zero());
            }
            coeffs[d] = c.clone();
        }
        Ok(UPoly::new(coeffs))
    }

    pub fn to_poly(&self, ring: &std::sync::Arc<crate::poly::Ring>, var: usize) -> Polynomial {
        let n = ring.nvars();
        let terms = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(d, c)| {
                let mut m = Monomial::one(n);
                m.0[var] = d as u16;
                (m, c.clone())
            })
            .collect();
        Polynomial::from_terms(ring, terms)
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn monic(&self) -> UPoly {
        match self.0.last() {
            Some(lc) => {
                let inv = lc.inverse().expect("nonzero leading coefficient");
                UPoly(self.0.iter().map(|c| c * &inv).collect())
            }
            None => self.clone(),
        }
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(d, c)| c * &GaussianRational::from_int(d as i64))
                .collect(),
        )
    }

    /// Quotient and remainder.
    pub fn div_rem(&self, d: &UPoly) -> Result<(UPoly, UPoly)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let inv = d.0[dd].inverse()?;
        let mut rem = self.0.clone();
        let mut quot = vec![GaussianRational::zero(); self.0.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1;
            let c = &rem[k] * &inv;
            if !c.is_zero() {
                for j in 0..=dd {
                    let v = &rem[k - dd + j] - &(&c * &d.0[j]);
                    rem[k - dd + j] = v;
                }
                quot[k - dd] = c;
            }
            rem.pop();
        }
        Ok((UPoly::new(quot), UPoly::new(rem)))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).expect("nonzero divisor").1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// Yun's algorithm: monic factors `s_1, s_2, ...` with `self = c·∏ s_k^k`,
    /// each `s_k` squarefree and pairwise coprime.
    pub fn squarefree_decomposition(&self) -> Vec<UPoly> {
        let f = self.monic();
        if f.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        let mut b = f.div_rem(&a0).unwrap().0;
        let mut c = fp.div_rem(&a0).unwrap().0;
        let mut d = c.sub(&b.derivative());
        let mut out = Vec::new();
        loop {
            let a = b.gcd(&d);
            out.push(a.clone());
            b = b.div_rem(&a).unwrap().0;
            if b.degree() == Some(0) {
                break;
            }
            c = d.div_rem(&a).unwrap().0;
            d = c.sub(&b.derivative());
        }
        while out.last().is_some_and(|s| s.degree() == Some(0)) {
            out.pop();
        }
        out
    }

    /// Product of the distinct monic irreducible factors.
    pub fn squarefree_part(&self) -> UPoly {
        let mut acc = UPoly::new(vec![GaussianRational::one()]);
        for s in self.squarefree_decomposition() {
            acc = acc.mul(&s);
        }
        acc
    }

    pub fn sub(&self, other: &UPoly) -> UPoly {
        let n = self.0.len().max(other.0.len());
        let z = GaussianRational::zero();
        UPoly::new(
            (0..n)
                .map(|k| self.0.get(k).unwrap_or(&z) - other.0.get(k).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn mul(&self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly(Vec::new());
        }
        let mut out = vec![GaussianRational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        UPoly::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn up(c: &[i64]) -> UPoly {
        UPoly::new(c.iter().map(|&x| GaussianRational::from_int(x)).collect())
    }

    #[test]
    fn gcd_and_squarefree() {
        // (x-1)^2 (x+2)
        let f = up(&[2, -3, 0, 1]);
        assert!(!f.is_squarefree());
        let dec = f.squarefree_decomposition();
        assert_eq!(dec, vec![up(&[2, 1]), up(&[-1, 1])]);
        assert_eq!(f.squarefree_part(), up(&[-2, 1, 1]));
        assert!(up(&[-1, 0, 0, 0, 1]).is_squarefree());
    }

    #[test]
    fn rho1_dichotomy() {
        // x^8 - 4x^4 + g^2
        let rho = |g2: i64| up(&[g2, 0, 0, 0, -4, 0, 0, 0, 1]);
        assert!(rho(1).is_squarefree());
        assert!(!rho(4).is_squarefree());
        let dec = rho(4).squarefree_decomposition();
        assert_eq!(dec.len(), 2);
        assert_eq!(dec[0], up(&[1]));
        assert_eq!(dec[1], up(&[-2, 0, 0, 0, 1]));
    }
}
