//! Text grammar for polynomials:
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*'? factor)*      -- juxtaposition only as in `2i`
//! factor := atom ('^' nat)?
//! atom   := rational | 'i' | 'g' | var | '(' expr ')'
//! rational := nat ('/' nat)?
//! ```
//!
//! `i` is the imaginary unit and `g` a parameter that must be bound to a
//! value before a polynomial is built.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Polynomial, Ring, VarSet};
use crate::arith::{BigRational, GaussianRational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigRational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut p = 0;
    let int_at = |mut q: usize| {
        let start = q;
        while q < bytes.len() && bytes[q].is_ascii_digit() {
            q += 1;
        }
        (start, q)
    };
    while p < bytes.len() {
        let c = bytes[p];
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => p += 1,
            b'+' => {
                out.push((p, Tok::Plus));
                p += 1
            }
            b'-' => {
                out.push((p, Tok::Minus));
                p += 1
            }
            b'*' => {
                out.push((p, Tok::Star));
                p += 1
            }
            b'^' => {
                out.push((p, Tok::Caret));
                p += 1
            }
            b'(' => {
                out.push((p, Tok::LParen));
                p += 1
            }
            b')' => {
                out.push((p, Tok::RParen));
                p += 1
            }
            b'0'..=b'9' => {
                let (a, b) = int_at(p);
                let num: BigInt = s[a..b].parse().expect("digits");
                let mut q = b;
                let mut den = BigInt::one();
                // allow whitespace-free `n/d` only
                if q < bytes.len() && bytes[q] == b'/' {
                    let (c0, c1) = int_at(q + 1);
                    if c0 == c1 {
                        return Err(Error::Syntax {
                            pos: q + 1,
                            msg: "expected denominator".into(),
                        });
                    }
                    den = s[c0..c1].parse().expect("digits");
                    if den.is_zero() {
                        return Err(Error::Syntax {
                            pos: c0,
                            msg: "zero denominator".into(),
                        });
                    }
                    q = c1;
                }
                out.push((p, Tok::Num(BigRational::new(num, den))));
                p = q;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                let start = p;
                while p < bytes.len() && (bytes[p].is_ascii_alphanumeric() || bytes[p] == b'_') {
                    p += 1;
                }
                out.push((start, Tok::Ident(s[start..p].to_string())));
            }
            _ => {
                return Err(Error::Syntax {
                    pos: p,
                    msg: format!("unexpected character `{}`", s[p..].chars().next().unwrap()),
                })
            }
        }
    }
    Ok(out)
}

/// Parsed expression tree, evaluated once variables and `g` are known.
#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Const(GaussianRational),
    Param,
    Var(String),
    Sum(Vec<(bool, Expr)>),
    Product(Vec<Expr>),
    Pow(Box<Expr>, u32),
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.0).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Syntax {
            pos: self.here(),
            msg: msg.to_string(),
        })
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut parts = Vec::new();
        let mut neg = false;
        match self.peek() {
            Some(Tok::Minus) => {
                neg = true;
                self.pos += 1;
            }
            Some(Tok::Plus) => self.pos += 1,
            _ => {}
        }
        parts.push((neg, self.term()?));
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    parts.push((false, self.term()?));
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    parts.push((true, self.term()?));
                }
                _ => break,
            }
        }
        if parts.len() == 1 && !parts[0].0 {
            Ok(parts.pop().unwrap().1)
        } else {
            Ok(Expr::Sum(parts))
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut factors = vec![self.factor()?];
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    factors.push(self.factor()?);
                }
                // `2i` style coefficients
                Some(Tok::Ident(id))
                    if id == "i" && matches!(factors.last(), Some(Expr::Const(_))) =>
                {
                    factors.push(self.factor()?);
                }
                _ => break,
            }
        }
        if factors.len() == 1 {
            Ok(factors.pop().unwrap())
        } else {
            Ok(Expr::Product(factors))
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        let atom = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            match self.peek() {
                Some(Tok::Num(q)) if q.is_integer() => {
                    let e: u32 = q.numer().try_into().map_err(|_| Error::Syntax {
                        pos: self.here(),
                        msg: "exponent too large".into(),
                    })?;
                    self.pos += 1;
                    Ok(Expr::Pow(Box::new(atom), e))
                }
                _ => self.err("expected natural-number exponent"),
            }
        } else {
            Ok(atom)
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek().cloned() {
            Some(Tok::Num(q)) => {
                self.pos += 1;
                Ok(Expr::Const(GaussianRational::from(q)))
            }
            Some(Tok::Ident(id)) => {
                self.pos += 1;
                Ok(match id.as_str() {
                    "i" => Expr::Const(GaussianRational::i()),
                    "g" => Expr::Param,
                    _ => Expr::Var(id),
                })
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(e)
                    }
                    _ => self.err("expected `)`"),
                }
            }
            None => self.err("unexpected end of input"),
            Some(t) => self.err(&format!("unexpected token {t:?}")),
        }
    }
}

/// Parses text into an expression tree without resolving variables.
pub fn parse_expr(text: &str) -> Result<Expr> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(Error::Syntax {
            pos: 0,
            msg: "empty input".into(),
        });
    }
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
    };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(e)
}

/// Parses a polynomial over `ring`. `gamma` binds the parameter `g`.
pub fn parse_poly(
    text: &str,
    ring: &Arc<Ring>,
    gamma: Option<&GaussianRational>,
) -> Result<Polynomial> {
    parse_expr(text)?.eval(ring, gamma)
}

/// A noncommutative word with coefficient: `coeff · x_{w0} x_{w1} …`.
pub type Word = (GaussianRational, Vec<usize>);

impl Expr {
    pub fn eval(&self, ring: &Arc<Ring>, gamma: Option<&GaussianRational>) -> Result<Polynomial> {
        Ok(match self {
            Expr::Const(c) => Polynomial::constant(ring, c.clone()),
            Expr::Param => {
                Polynomial::constant(ring, gamma.ok_or(Error::UnboundParameter)?.clone())
            }
            Expr::Var(v) => ring.var(v)?,
            Expr::Sum(parts) => {
                let mut acc = Polynomial::zero(ring);
                for (neg, e) in parts {
                    let v = e.eval(ring, gamma)?;
                    acc = if *neg { &acc - &v } else { &acc + &v };
                }
                acc
            }
            Expr::Product(fs) => {
                let mut acc = Polynomial::one(ring);
                for e in fs {
                    acc = &acc * &e.eval(ring, gamma)?;
                }
                acc
            }
            Expr::Pow(b, e) => b.eval(ring, gamma)?.pow(*e),
        })
    }

    /// Evaluates an expression with no variables and no parameter.
    pub fn eval_constant(&self) -> Result<GaussianRational> {
        let r = Ring::with_names::<&str>(&[])?;
        let p = self.eval(&r, None)?;
        Ok(p.leading_coeff()
            .cloned()
            .unwrap_or_else(GaussianRational::zero))
    }

    /// Whether the parameter `g` occurs.
    pub fn uses_param(&self) -> bool {
        match self {
            Expr::Param => true,
            Expr::Const(_) | Expr::Var(_) => false,
            Expr::Sum(p) => p.iter().any(|(_, e)| e.uses_param()),
            Expr::Product(f) => f.iter().any(Expr::uses_param),
            Expr::Pow(b, _) => b.uses_param(),
        }
    }

    /// Expands in the free (noncommutative) algebra on `vars`; products keep
    /// their written order, so `x3*x1` is the word `x3 x1`.
    pub fn eval_noncommutative(
        &self,
        vars: &VarSet,
        gamma: Option<&GaussianRational>,
    ) -> Result<Vec<Word>> {
        let map = self.nc(vars, gamma)?;
        Ok(map
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(w, c)| (c, w))
            .collect())
    }

    fn nc(
        &self,
        vars: &VarSet,
        gamma: Option<&GaussianRational>,
    ) -> Result<BTreeMap<Vec<usize>, GaussianRational>> {
        let mut out = BTreeMap::new();
        match self {
            Expr::Const(c) => {
                out.insert(vec![], c.clone());
            }
            Expr::Param => {
                out.insert(vec![], gamma.ok_or(Error::UnboundParameter)?.clone());
            }
            Expr::Var(v) => {
                let k = vars
                    .index_of(v)
                    .ok_or_else(|| Error::UnknownVariable(v.clone()))?;
                out.insert(vec![k], GaussianRational::one());
            }
            Expr::Sum(parts) => {
                for (neg, e) in parts {
                    for (w, c) in e.nc(vars, gamma)? {
                        let c = if *neg { -c } else { c };
                        *out.entry(w).or_insert_with(GaussianRational::zero) += &c;
                    }
                }
            }
            Expr::Product(fs) => {
                out.insert(vec![], GaussianRational::one());
                for f in fs {
                    let rhs = f.nc(vars, gamma)?;
                    out = nc_mul(&out, &rhs);
                }
            }
            Expr::Pow(b, e) => {
                let base = b.nc(vars, gamma)?;
                out.insert(vec![], GaussianRational::one());
                for _ in 0..*e {
                    out = nc_mul(&out, &base);
                }
            }
        }
        Ok(out)
    }
}

fn nc_mul(
    a: &BTreeMap<Vec<usize>, GaussianRational>,
    b: &BTreeMap<Vec<usize>, GaussianRational>,
) -> BTreeMap<Vec<usize>, GaussianRational> {
    let mut out = BTreeMap::new();
    for (wa, ca) in a {
        for (wb, cb) in b {
            let mut w = wa.clone();
            w.extend_from_slice(wb);
            *out.entry(w).or_insert_with(GaussianRational::zero) += &(ca * cb);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xring() -> Arc<Ring> {
        Ring::with_names(&["x1", "x2", "x3", "x4"]).unwrap()
    }

    #[test]
    fn parses_rho1_with_bound_gamma() {
        let r = xring();
        let one = GaussianRational::one();
        let p = parse_poly("x4^8 - 4*x4^4 + g^2", &r, Some(&one)).unwrap();
        assert_eq!(p.to_string(), "x4^8 - 4*x4^4 + 1");
    }

    #[test]
    fn zero_and_pluecker() {
        let r = xring();
        assert!(parse_poly("0", &r, None).unwrap().is_zero());
        let m = Ring::with_names(&["M12", "M13", "M14", "M23", "M24", "M34"]).unwrap();
        let p = parse_poly("M12*M34 - M13*M24 + M14*M23", &m, None).unwrap();
        assert_eq!(p.len(), 3);
        assert!(p.is_homogeneous());
    }

    #[test]
    fn errors() {
        let r = xring();
        assert!(
            matches!(parse_poly("x1 + y", &r, None), Err(Error::UnknownVariable(v)) if v == "y")
        );
        assert!(matches!(
            parse_poly("x1 + * x2", &r, None),
            Err(Error::Syntax { pos: 5, .. })
        ));
        assert!(matches!(
            parse_poly("g*x1", &r, None),
            Err(Error::UnboundParameter)
        ));
        assert!(matches!(
            parse_poly("(x1", &r, None),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_poly("x1 $", &r, None),
            Err(Error::Syntax { pos: 3, .. })
        ));
        assert!(matches!(
            parse_poly("", &r, None),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_poly("1/0", &r, None),
            Err(Error::Syntax { .. })
        ));
    }

    #[test]
    fn gaussian_coefficients() {
        let r = xring();
        let p = parse_poly("2i*x1 - 1/2*i*x2 + (1 + 2*i)*x3", &r, None).unwrap();
        assert_eq!(p.to_string(), "2*i*x1 - 1/2*i*x2 + (1 + 2*i)*x3");
        assert_eq!(parse_poly(&p.to_string(), &r, None).unwrap(), p);
    }

    #[test]
    fn noncommutative_words_keep_order() {
        let vars = VarSet::new(&["x1", "x2", "x3", "x4"]).unwrap();
        let e = parse_expr("x3*x1 - x1*x3 + x2^2").unwrap();
        let words = e.eval_noncommutative(&vars, None).unwrap();
        assert_eq!(words.len(), 3);
        assert!(words.contains(&(GaussianRational::one(), vec![2, 0])));
        assert!(words.contains(&(GaussianRational::from_int(-1), vec![0, 2])));
        assert!(words.contains(&(GaussianRational::one(), vec![1, 1])));
    }
}
