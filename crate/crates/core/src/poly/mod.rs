//! Sparse multivariate polynomials over ℚ(i).
//!
//! A [`Polynomial`] carries an [`Arc<Ring>`] naming its variables and the
//! monomial order used to sort its terms. Terms are stored in strictly
//! descending order with no zero coefficients, so equality of polynomials is
//! structural equality of the term vectors.

pub mod parse;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use crate::arith::GaussianRational;
use crate::error::{Error, Result};

pub use parse::{parse_poly, Expr};

/// Ordered list of distinct variable names.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VarSet {
    names: Vec<String>,
}

impl VarSet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (k, n) in names.iter().enumerate() {
            if names[..k].contains(n) {
                return Err(Error::Invalid(format!("duplicate variable `{n}`")));
            }
            if n == "i" || n == "g" {
                return Err(Error::Invalid(format!("`{n}` is reserved")));
            }
        }
        Ok(VarSet { names })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// Monomial orders. `Block(k)` compares the first `k` variables by degrevlex
/// and breaks ties with degrevlex on the remaining ones; it eliminates the
/// first block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    DegRevLex,
    Block(usize),
}

fn degrevlex(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Lex => a.0.cmp(&b.0),
            MonomialOrder::DegRevLex => degrevlex(&a.0, &b.0),
            MonomialOrder::Block(k) => {
                let k = k.min(a.0.len());
                degrevlex(&a.0[..k], &b.0[..k]).then_with(|| degrevlex(&a.0[k..], &b.0[k..]))
            }
        }
    }
}

/// A variable set together with a monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    vars: VarSet,
    order: MonomialOrder,
}

impl Ring {
    pub fn new(vars: VarSet, order: MonomialOrder) -> Arc<Ring> {
        Arc::new(Ring { vars, order })
    }

    /// Convenience constructor with degrevlex.
    pub fn with_names<S: AsRef<str>>(names: &[S]) -> Result<Arc<Ring>> {
        Ok(Ring::new(VarSet::new(names)?, MonomialOrder::DegRevLex))
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn with_order(&self, order: MonomialOrder) -> Arc<Ring> {
        Ring::new(self.vars.clone(), order)
    }

    pub fn var(self: &Arc<Self>, name: &str) -> Result<Polynomial> {
        let k = self
            .vars
            .index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(Polynomial::var_index(self, k))
    }

    pub fn same(a: &Arc<Ring>, b: &Arc<Ring>) -> bool {
        Arc::ptr_eq(a, b) || **a == **b
    }
}

/// Exponent vector, one entry per variable of the ambient ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub SmallVec<[u16; 10]>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(SmallVec::from_elem(0, n))
    }

    pub fn from_exps(e: &[u16]) -> Self {
        Monomial(SmallVec::from_slice(e))
    }

    pub fn var(n: usize, k: usize) -> Self {
        let mut m = Monomial::one(n);
        m.0[k] = 1;
        m
    }

    pub fn exps(&self) -> &[u16] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }
}

pub type Term = (Monomial, GaussianRational);

#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: Vec<Term>,
}

/// Ring operation selector used by [`Polynomial::apply`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingOp {
    Add,
    Sub,
    Mul,
}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<Ring>, c: GaussianRational) -> Self {
        let mut p = Polynomial::zero(ring);
        if !c.is_zero() {
            p.terms.push((Monomial::one(ring.nvars()), c));
        }
        p
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Polynomial::constant(ring, GaussianRational::one())
    }

    pub fn var_index(ring: &Arc<Ring>, k: usize) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::var(ring.nvars(), k), GaussianRational::one())],
        }
    }

    pub fn monomial(ring: &Arc<Ring>, m: Monomial, c: GaussianRational) -> Self {
        let mut p = Polynomial::zero(ring);
        if !c.is_zero() {
            p.terms.push((m, c));
        }
        p
    }

    /// Builds a polynomial from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms(ring: &Arc<Ring>, terms: Vec<Term>) -> Self {
        let order = ring.order();
        let mut terms = terms;
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += &c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    pub(crate) fn from_sorted_terms(ring: &Arc<Ring>, terms: Vec<Term>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order().cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<&GaussianRational> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn coeff(&self, m: &Monomial) -> GaussianRational {
        self.terms
            .iter()
            .find(|(tm, _)| tm == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(GaussianRational::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Degree in the given variable indices, maximised over terms.
    pub fn degree_in(&self, vars: &[usize]) -> Option<u32> {
        self.terms
            .iter()
            .map(|(m, _)| vars.iter().map(|&k| m.0[k] as u32).sum())
            .max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.iter().map(|(m, _)| m.degree());
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// True when every term has degree `du` in `first` and `dv` in `second`.
    pub fn is_bihomogeneous(&self, first: &[usize], second: &[usize], du: u32, dv: u32) -> bool {
        self.terms.iter().all(|(m, _)| {
            first.iter().map(|&k| m.0[k] as u32).sum::<u32>() == du
                && second.iter().map(|&k| m.0[k] as u32).sum::<u32>() == dv
        })
    }

    /// Indices of variables that occur in some term.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.ring.nvars())
            .filter(|&k| self.terms.iter().any(|(m, _)| m.0[k] > 0))
            .collect()
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if Ring::same(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::VarSetMismatch(format!(
                "{:?} vs {:?}",
                self.ring.vars().names(),
                other.ring.vars().names()
            )))
        }
    }

    pub fn apply(&self, other: &Polynomial, op: RingOp) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(match op {
            RingOp::Add => self.add_unchecked(other),
            RingOp::Sub => self.sub_unchecked(other),
            RingOp::Mul => self.mul_unchecked(other),
        })
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.apply(other, RingOp::Add)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.apply(other, RingOp::Sub)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.apply(other, RingOp::Mul)
    }

    fn merge(&self, other: &Polynomial, negate_other: bool) -> Polynomial {
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() && j < b.len() {
            match order.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate_other {
                        -&b[j].1
                    } else {
                        b[j].1.clone()
                    };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for (m, c) in &b[j..] {
            out.push((m.clone(), if negate_other { -c } else { c.clone() }));
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    fn add_unchecked(&self, other: &Polynomial) -> Polynomial {
        self.merge(other, false)
    }

    fn sub_unchecked(&self, other: &Polynomial) -> Polynomial {
        self.merge(other, true)
    }

    fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        if small.len() == 1 {
            let (m, c) = &small.terms[0];
            return large.mul_term(m, c);
        }
        let order = self.ring.order();
        let mut acc: BTreeMap<OrdKey, GaussianRational> = BTreeMap::new();
        for (ma, ca) in &small.terms {
            for (mb, cb) in &large.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                acc.entry(OrdKey(m, order))
                    .and_modify(|e| *e += &c)
                    .or_insert(c);
            }
        }
        let terms = acc
            .into_iter()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k.0, c))
            .collect();
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    /// Multiplies by `c·m`. Monomial orders are multiplicative, so the term order is preserved.
    pub fn mul_term(&self, m: &Monomial, c: &GaussianRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(tm, tc)| (tm.mul(m), tc * c))
                .collect(),
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, tc)| (m.clone(), tc * c))
                .collect(),
        }
    }

    /// Scales so the leading coefficient is 1.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.inverse().expect("nonzero leading coefficient")),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    /// Partial derivative with respect to variable `k`.
    pub fn derivative(&self, k: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.0[k] > 0)
            .map(|(m, c)| {
                let mut nm = m.clone();
                let e = nm.0[k];
                nm.0[k] -= 1;
                (nm, c * &GaussianRational::from_int(e as i64))
            })
            .collect();
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Re-sorts the terms for another ring over the same variables (typically a different order).
    pub fn with_ring(&self, ring: &Arc<Ring>) -> Result<Polynomial> {
        if ring.vars() != self.ring.vars() {
            return Err(Error::VarSetMismatch(
                "with_ring requires identical variables".into(),
            ));
        }
        Ok(Polynomial::from_terms(ring, self.terms.clone()))
    }

    /// Moves the polynomial into `target` by matching variable names. Every
    /// variable that occurs in `self` must exist in `target`.
    pub fn embed(&self, target: &Arc<Ring>) -> Result<Polynomial> {
        let map: Vec<Option<usize>> = self
            .ring
            .vars()
            .names()
            .iter()
            .map(|n| target.vars().index_of(n))
            .collect();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut nm = Monomial::one(target.nvars());
            for (k, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match map[k] {
                    Some(t) => nm.0[t] += e,
                    None => {
                        return Err(Error::VarSetMismatch(format!(
                            "variable `{}` missing from target ring",
                            self.ring.vars().names()[k]
                        )))
                    }
                }
            }
            terms.push((nm, c.clone()));
        }
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Substitutes polynomials (all over `target`) for variables. Variables
    /// without an assignment are carried over by name and must exist in `target`.
    pub fn substitute(
        &self,
        assignment: &[(&str, Polynomial)],
        target: &Arc<Ring>,
    ) -> Result<Polynomial> {
        let nv = self.ring.nvars();
        let mut images: Vec<Polynomial> = Vec::with_capacity(nv);
        for (k, name) in self.ring.vars().names().iter().enumerate() {
            if let Some((_, p)) = assignment.iter().find(|(n, _)| *n == name) {
                if !Ring::same(p.ring(), target) {
                    return Err(Error::VarSetMismatch(format!(
                        "image of `{name}` is over another ring"
                    )));
                }
                images.push(p.clone());
            } else if self.terms.iter().any(|(m, _)| m.0[k] > 0) {
                let t = target.vars().index_of(name).ok_or_else(|| {
                    Error::VarSetMismatch(format!("`{name}` neither assigned nor in target"))
                })?;
                images.push(Polynomial::var_index(target, t));
            } else {
                images.push(Polynomial::zero(target));
            }
        }
        for (n, _) in assignment {
            if self.ring.vars().index_of(n).is_none() {
                return Err(Error::UnknownVariable(n.to_string()));
            }
        }
        Ok(self.compose(&images, target))
    }

    /// Evaluates with `images[k]` substituted for variable `k`.
    pub fn compose(&self, images: &[Polynomial], target: &Arc<Ring>) -> Polynomial {
        let nv = self.ring.nvars();
        let maxdeg: Vec<u16> = (0..nv)
            .map(|k| self.terms.iter().map(|(m, _)| m.0[k]).max().unwrap_or(0))
            .collect();
        let mut powers: Vec<Vec<Polynomial>> = Vec::with_capacity(nv);
        for k in 0..nv {
            let mut pw = vec![Polynomial::one(target)];
            for e in 1..=maxdeg[k] as usize {
                let next = pw[e - 1].mul_unchecked(&images[k]);
                pw.push(next);
            }
            powers.push(pw);
        }
        let mut acc = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for k in 0..nv {
                let e = m.0[k] as usize;
                if e > 0 {
                    t = t.mul_unchecked(&powers[k][e]);
                }
            }
            acc = acc.add_unchecked(&t);
        }
        acc
    }

    /// Evaluates at a point of ℚ(i)ⁿ.
    pub fn eval(&self, point: &[GaussianRational]) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (k, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = &t * &point[k].pow(e as u32);
                }
            }
            acc += &t;
        }
        acc
    }

    /// Evaluates with complex floating-point values.
    pub fn eval_complex(&self, point: &[num_complex::Complex64]) -> num_complex::Complex64 {
        let mut acc = num_complex::Complex64::new(0.0, 0.0);
        for (m, c) in &self.terms {
            let (re, im) = c.to_f64_pair();
            let mut t = num_complex::Complex64::new(re, im);
            for (k, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t *= point[k].powu(e as u32);
                }
            }
            acc += t;
        }
        acc
    }

    /// Multiplies every coefficient so the leading coefficient becomes 1
    /// under degrevlex, independent of the ring's own order.
    pub fn normalized_degrevlex(&self) -> Polynomial {
        let c = self
            .terms
            .iter()
            .max_by(|a, b| MonomialOrder::DegRevLex.cmp(&a.0, &b.0))
            .map(|t| t.1.clone());
        match c {
            Some(c) => self.scale(&c.inverse().expect("nonzero")),
            None => self.clone(),
        }
    }

    /// Exact division: `Some(q)` with `self = q·d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        let (dm, dc) = d.leading_term()?;
        let dc_inv = dc.inverse().ok()?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.leading_term() {
            if !dm.divides(m) {
                return None;
            }
            let qm = dm.quotient_of(m);
            let qc = c * &dc_inv;
            rem = rem.sub_unchecked(&d.mul_term(&qm, &qc));
            quot.push((qm, qc));
        }
        Some(Polynomial::from_sorted_terms(&self.ring, quot))
    }

    /// If `other = c·self` for a nonzero scalar `c`, returns `c`.
    pub fn scalar_ratio(&self, other: &Polynomial) -> Option<GaussianRational> {
        if self.len() != other.len() || self.is_zero() {
            return None;
        }
        let c = other.terms[0].1.checked_div(&self.terms[0].1).ok()?;
        self.terms
            .iter()
            .zip(&other.terms)
            .all(|((ma, ca), (mb, cb))| ma == mb && &(ca * &c) == cb)
            .then_some(c)
    }
}

/// Monomial wrapped with an order so it can key a `BTreeMap`.
#[derive(Clone, PartialEq, Eq)]
struct OrdKey(Monomial, MonomialOrder);

impl PartialOrd for OrdKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for OrdKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.1.cmp(&self.0, &other.0)
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("ring mismatch")
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("ring mismatch")
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("ring mismatch")
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

fn fmt_monomial(names: &[String], m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (k, &e) in m.0.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(names[k].clone()),
            _ => parts.push(format!("{}^{}", names[k], e)),
        }
    }
    parts.join("*")
}

/// Splits a coefficient into a sign and a magnitude text. Coefficients with
/// both a real and an imaginary part are parenthesised and carry a `+` sign.
fn split_coeff(c: &GaussianRational) -> (bool, String, bool) {
    let fmt_q = |q: &crate::arith::BigRational| {
        if q.is_integer() {
            q.numer().to_string()
        } else {
            format!("{}/{}", q.numer(), q.denom())
        }
    };
    if c.im().is_zero() {
        let a = c.re().abs();
        (c.re().is_negative(), fmt_q(&a), a.is_one())
    } else if c.re().is_zero() {
        let a = c.im().abs();
        let txt = if a.is_one() {
            "i".to_string()
        } else {
            format!("{}*i", fmt_q(&a))
        };
        (c.im().is_negative(), txt, false)
    } else {
        (false, format!("({c})"), false)
    }
}

/// Canonical text: terms in descending order of the ring's monomial order.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = self.ring.vars().names();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let (neg, mag, unit) = split_coeff(c);
            let body = if m.is_one() {
                mag
            } else if unit {
                fmt_monomial(names, m)
            } else {
                format!("{}*{}", mag, fmt_monomial(names, m))
            };
            match (k, neg) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Prints a polynomial; the zero polynomial prints as `0`.
pub fn print_poly(f: &Polynomial) -> String {
    f.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(names: &[&str]) -> Arc<Ring> {
        Ring::with_names(names).unwrap()
    }

    #[test]
    fn arith_examples() {
        let r = ring(&["x1", "x2", "x3", "x4"]);
        let x1 = r.var("x1").unwrap();
        assert!(x1.apply(&x1, RingOp::Sub).unwrap().is_zero());
        let x3 = r.var("x3").unwrap();
        let d = &(&x3 * &x3) - &(&x1 * &x1);
        assert_eq!(d.to_string(), "-x1^2 + x3^2");

        let m = Ring::with_names(&["M12", "M13", "M14", "M23", "M24", "M34"]).unwrap();
        let i = Polynomial::constant(&m, GaussianRational::i());
        let m12 = m.var("M12").unwrap();
        let m34 = m.var("M34").unwrap();
        let a = &m12 + &(&i * &m34);
        let b = &m12 - &(&i * &m34);
        let expected = &(&m12 * &m12) + &(&m34 * &m34);
        assert_eq!(&a * &b, expected);
    }

    #[test]
    fn varset_mismatch() {
        let a = ring(&["x1"]).var("x1").unwrap();
        let b = ring(&["y"]).var("y").unwrap();
        assert!(matches!(a.try_add(&b), Err(Error::VarSetMismatch(_))));
    }

    #[test]
    fn degrevlex_basics() {
        let o = MonomialOrder::DegRevLex;
        let m = |e: &[u16]| Monomial::from_exps(e);
        // x1 > x2 > x3
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 1, 0])), Ordering::Greater);
        // x1*x3 < x2^2 in degrevlex
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert_eq!(
            MonomialOrder::Lex.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])),
            Ordering::Greater
        );
        // block order eliminates the first block
        let b = MonomialOrder::Block(1);
        assert_eq!(b.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
    }

    #[test]
    fn derivative_and_eval() {
        let r = ring(&["x", "y"]);
        let f = parse_poly("x^3*y + 2*x", &r, None).unwrap();
        assert_eq!(f.derivative(0).to_string(), "3*x^2*y + 2");
        let v = f.eval(&[GaussianRational::from_int(2), GaussianRational::i()]);
        assert_eq!(v, GaussianRational::from_parts((4, 1), (8, 1)));
    }

    #[test]
    fn substitute_examples() {
        let r = ring(&["x1", "x2", "x3", "x4"]);
        let rho2 = parse_poly("x3^2 - i*x3*x4^2 - x1^2", &r, None).unwrap();
        let target = ring(&["x1", "x2"]);
        let v = rho2
            .substitute(
                &[
                    ("x3", Polynomial::one(&target)),
                    ("x4", Polynomial::zero(&target)),
                    ("x1", Polynomial::one(&target)),
                ],
                &target,
            )
            .unwrap();
        assert!(v.is_zero());

        let m = ring(&["M12", "M13", "M14", "M23", "M24", "M34"]);
        let p = parse_poly("M12*M34 - M13*M24 + M14*M23", &m, None).unwrap();
        let z = Polynomial::zero(&m);
        let q = p.substitute(&[("M13", z.clone()), ("M24", z)], &m).unwrap();
        assert_eq!(q, parse_poly("M14*M23 + M12*M34", &m, None).unwrap());
    }

    #[test]
    fn substitute_rejects_missing_targets() {
        let r = ring(&["x1", "x2"]);
        let f = parse_poly("x1*x2", &r, None).unwrap();
        let t = ring(&["x1"]);
        assert!(matches!(
            f.substitute(&[], &t),
            Err(Error::VarSetMismatch(_))
        ));
    }

    #[test]
    fn print_zero_and_order() {
        let r = ring(&["x1", "x2", "x3", "x4"]);
        assert_eq!(Polynomial::zero(&r).to_string(), "0");
        let rho3 = parse_poly(
            "g*x2 - 2*i*x4^3 + x3*x4^5",
            &r,
            Some(&GaussianRational::one()),
        )
        .unwrap();
        assert_eq!(rho3.to_string(), "x3*x4^5 - 2*i*x4^3 + x2");
    }
}
