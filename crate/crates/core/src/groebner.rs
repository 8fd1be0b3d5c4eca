//! Buchberger's algorithm and the ideal toolkit built on it.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::arith::GaussianRational;
use crate::error::{Error, Result};
use crate::linalg::ScalarMatrix;
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring, VarSet};
use crate::univariate::UPoly;

/// Bounds on a single basis computation. Exceeding one is an error.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_pairs: usize,
    pub max_basis: usize,
    pub max_degree: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_pairs: 500_000,
            max_basis: 20_000,
            max_degree: 96,
        }
    }
}

/// Generators over a common ring; the ring's order is the ideal's order.
#[derive(Clone, Debug)]
pub struct Ideal {
    ring: Arc<Ring>,
    generators: Vec<Polynomial>,
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(ring: &Arc<Ring>, generators: Vec<Polynomial>) -> Result<Ideal> {
        if let Some(g) = generators.iter().find(|g| !Ring::same(g.ring(), ring)) {
            return Err(Error::VarSetMismatch(format!(
                "generator `{g}` is over another ring"
            )));
        }
        Ok(Ideal {
            ring: ring.clone(),
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
        })
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(|g| g.is_homogeneous())
    }

    /// The same ideal under another monomial order.
    pub fn with_order(&self, order: MonomialOrder) -> Ideal {
        let ring = self.ring.with_order(order);
        let generators = self
            .generators
            .iter()
            .map(|g| g.with_ring(&ring).expect("same variables"))
            .collect();
        Ideal { ring, generators }
    }

    /// `self + ⟨extra⟩`.
    pub fn extend(&self, extra: &[Polynomial]) -> Result<Ideal> {
        let mut gens = self.generators.clone();
        gens.extend_from_slice(extra);
        Ideal::new(&self.ring, gens)
    }

    pub fn groebner(&self) -> Result<GroebnerBasis> {
        buchberger(self, &Limits::default())
    }
}

/// A Gröbner basis. When `reduced` is set the basis is monic, interreduced
/// and sorted by descending leading monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Arc<Ring>,
    basis: Vec<Polynomial>,
    reduced: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuotientDim {
    Finite(usize),
    Infinite,
}

impl QuotientDim {
    pub fn finite(self) -> Option<usize> {
        match self {
            QuotientDim::Finite(n) => Some(n),
            QuotientDim::Infinite => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Pair {
    sugar: u32,
    lcm: Monomial,
    i: usize,
    j: usize,
    order: MonomialOrder,
}

impl PartialOrd for Pair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Pair {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sugar
            .cmp(&other.sugar)
            .then_with(|| self.order.cmp(&self.lcm, &other.lcm))
            .then_with(|| self.j.cmp(&other.j))
            .then_with(|| self.i.cmp(&other.i))
    }
}

/// `f - c·m·g` where `c·m·lt(g)` cancels the term of `f` at `m·lm(g)`.
fn reduce_step(
    f: &Polynomial,
    g: &Polynomial,
    target: &Monomial,
    tc: &GaussianRational,
) -> Polynomial {
    let (gm, gc) = g.leading_term().expect("nonzero reducer");
    let q = gm.quotient_of(target);
    let c = tc.checked_div(gc).expect("nonzero leading coefficient");
    f - &g.mul_term(&q, &c)
}

fn find_reducer<'a>(basis: &'a [Polynomial], m: &Monomial) -> Option<&'a Polynomial> {
    basis
        .iter()
        .find(|g| g.leading_monomial().is_some_and(|lm| lm.divides(m)))
}

/// Reduces the leading term until it is irreducible.
fn top_reduce(mut f: Polynomial, basis: &[Polynomial]) -> Polynomial {
    loop {
        let Some((m, c)) = f.leading_term() else {
            return f;
        };
        let Some(g) = find_reducer(basis, m) else {
            return f;
        };
        let (m, c) = (m.clone(), c.clone());
        f = reduce_step(&f, g, &m, &c);
    }
}

/// Full reduction of every term of `f` by `basis`.
pub fn reduce_fully(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let ring = f.ring().clone();
    let mut rem: Vec<(Monomial, GaussianRational)> = Vec::new();
    let mut cur = f.clone();
    loop {
        cur = top_reduce(cur, basis);
        let Some((m, c)) = cur.leading_term() else {
            break;
        };
        rem.push((m.clone(), c.clone()));
        let mut terms = cur.into_terms();
        terms.remove(0);
        cur = Polynomial::from_terms(&ring, terms);
    }
    Polynomial::from_terms(&ring, rem)
}

fn spoly(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (fm, fc) = f.leading_term().expect("nonzero");
    let (gm, gc) = g.leading_term().expect("nonzero");
    let l = fm.lcm(gm);
    let a = f.mul_term(&fm.quotient_of(&l), &fc.inverse().expect("nonzero"));
    let b = g.mul_term(&gm.quotient_of(&l), &gc.inverse().expect("nonzero"));
    &a - &b
}

/// Reduced Gröbner basis by Buchberger's algorithm with the sugar strategy
/// and the Gebauer–Möller pair criteria.
pub fn buchberger(ideal: &Ideal, limits: &Limits) -> Result<GroebnerBasis> {
    let ring = ideal.ring.clone();
    let order = ring.order();
    let mut gens: Vec<Polynomial> = ideal.generators.iter().map(|g| g.monic()).collect();
    gens.sort_by(|a, b| {
        order
            .cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
            .then_with(|| a.len().cmp(&b.len()))
    });

    let mut basis: Vec<Polynomial> = Vec::new();
    let mut sugar: Vec<u32> = Vec::new();
    let mut live: Vec<bool> = Vec::new();
    let mut pairs: BTreeSet<Pair> = BTreeSet::new();
    let mut processed = 0usize;

    for g in gens {
        let s = g.total_degree().unwrap_or(0);
        let h = top_reduce(g, &basis);
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return Ok(unit_basis(&ring));
        }
        insert(
            &mut basis,
            &mut sugar,
            &mut live,
            &mut pairs,
            h.monic(),
            s,
            order,
            limits,
        )?;
    }

    while let Some(p) = pairs.pop_first() {
        processed += 1;
        if processed > limits.max_pairs {
            return Err(Error::ResourceLimit(format!(
                "more than {} pairs",
                limits.max_pairs
            )));
        }
        let s = spoly(&basis[p.i], &basis[p.j]);
        let h = top_reduce(s, &basis);
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return Ok(unit_basis(&ring));
        }
        let deg = h.total_degree().unwrap_or(0);
        if deg > limits.max_degree {
            return Err(Error::ResourceLimit(format!(
                "basis degree {deg} exceeds {}",
                limits.max_degree
            )));
        }
        insert(
            &mut basis,
            &mut sugar,
            &mut live,
            &mut pairs,
            h.monic(),
            p.sugar,
            order,
            limits,
        )?;
    }

    Ok(GroebnerBasis {
        basis: interreduce(&basis, order),
        ring,
        reduced: true,
    })
}

fn unit_basis(ring: &Arc<Ring>) -> GroebnerBasis {
    GroebnerBasis {
        ring: ring.clone(),
        basis: vec![Polynomial::one(ring)],
        reduced: true,
    }
}

#[allow(clippy::too_many_arguments)]
fn insert(
    basis: &mut Vec<Polynomial>,
    sugar: &mut Vec<u32>,
    live: &mut Vec<bool>,
    pairs: &mut BTreeSet<Pair>,
    h: Polynomial,
    s: u32,
    order: MonomialOrder,
    limits: &Limits,
) -> Result<()> {
    if basis.len() >= limits.max_basis {
        return Err(Error::ResourceLimit(format!(
            "basis larger than {}",
            limits.max_basis
        )));
    }
    let k = basis.len();
    let hm = h.leading_monomial().unwrap().clone();
    let hdeg = hm.degree();

    // candidate pairs (i, k)
    let mut cand: Vec<(Monomial, usize, bool, u32)> = Vec::new();
    for i in 0..k {
        if !live[i] {
            continue;
        }
        let im = basis[i].leading_monomial().unwrap();
        let l = im.lcm(&hm);
        let ps = (sugar[i] + l.degree() - im.degree()).max(s + l.degree() - hdeg);
        cand.push((l, i, im.is_coprime(&hm), ps));
    }

    // chain criterion on old pairs
    pairs.retain(|p| {
        if !hm.divides(&p.lcm) {
            return true;
        }
        let li = basis[p.i].leading_monomial().unwrap().lcm(&hm);
        let lj = basis[p.j].leading_monomial().unwrap().lcm(&hm);
        li == p.lcm || lj == p.lcm
    });

    // criterion M: drop (i,k) if another lcm properly divides it
    let mut keep: Vec<bool> = vec![true; cand.len()];
    for a in 0..cand.len() {
        for b in 0..cand.len() {
            if a != b && cand[b].0 != cand[a].0 && cand[b].0.divides(&cand[a].0) {
                keep[a] = false;
                break;
            }
        }
    }
    // criterion F and product criterion: one representative per lcm class,
    // the whole class vanishes if any member is coprime
    let mut chosen: Vec<(Monomial, usize, u32)> = Vec::new();
    let mut seen: Vec<Monomial> = Vec::new();
    for a in 0..cand.len() {
        if !keep[a] || seen.contains(&cand[a].0) {
            continue;
        }
        seen.push(cand[a].0.clone());
        let class: Vec<usize> = (0..cand.len())
            .filter(|&b| keep[b] && cand[b].0 == cand[a].0)
            .collect();
        if class.iter().any(|&b| cand[b].2) {
            continue;
        }
        let best = class
            .iter()
            .min_by_key(|&&b| (cand[b].3, cand[b].1))
            .copied()
            .unwrap();
        chosen.push((cand[best].0.clone(), cand[best].1, cand[best].3));
    }

    for i in 0..k {
        if live[i] && hm.divides(basis[i].leading_monomial().unwrap()) {
            live[i] = false;
        }
    }

    basis.push(h);
    sugar.push(s);
    live.push(true);
    for (l, i, ps) in chosen {
        pairs.insert(Pair {
            sugar: ps,
            lcm: l,
            i,
            j: k,
            order,
        });
    }
    Ok(())
}

/// Minimal, fully reduced, monic basis sorted by descending leading monomial.
fn interreduce(basis: &[Polynomial], order: MonomialOrder) -> Vec<Polynomial> {
    let mut minimal: Vec<Polynomial> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let gm = g.leading_monomial().unwrap();
        let redundant = basis.iter().enumerate().any(|(j, h)| {
            let hm = h.leading_monomial().unwrap();
            j != k && hm.divides(gm) && (hm != gm || j < k)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    minimal.sort_by(|a, b| order.cmp(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()));
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .map(|(_, p)| p.clone())
            .collect();
        let lt = minimal[k].leading_term().unwrap().clone();
        let mut tail = minimal[k].clone().into_terms();
        tail.remove(0);
        let tail = reduce_fully(&Polynomial::from_terms(minimal[k].ring(), tail), &others);
        let mut terms = vec![lt];
        terms.extend(tail.into_terms());
        out.push(Polynomial::from_terms(minimal[k].ring(), terms).monic());
    }
    out
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_constant()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis
            .iter()
            .map(|g| g.leading_monomial().unwrap().clone())
            .collect()
    }

    pub fn to_ideal(&self) -> Ideal {
        Ideal {
            ring: self.ring.clone(),
            generators: self.basis.clone(),
        }
    }

    /// Remainder of `f` modulo the basis.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        let f = if Ring::same(f.ring(), &self.ring) {
            f.clone()
        } else if f.ring().vars() == self.ring.vars() {
            f.with_ring(&self.ring)?
        } else {
            return Err(Error::VarSetMismatch(
                "normal form over another ring".into(),
            ));
        };
        Ok(reduce_fully(&f, &self.basis))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn contains_all(&self, fs: &[Polynomial]) -> Result<bool> {
        for f in fs {
            if !self.contains(f)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Post-hoc Buchberger criterion: every S-polynomial reduces to zero.
    pub fn verify_s_pairs(&self) -> bool {
        for i in 0..self.basis.len() {
            for j in i + 1..self.basis.len() {
                if !reduce_fully(&spoly(&self.basis[i], &self.basis[j]), &self.basis).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Reduced-basis conditions: monic and no term divisible by another leading monomial.
    pub fn verify_reduced(&self) -> bool {
        let lms = self.leading_monomials();
        self.basis.iter().enumerate().all(|(k, g)| {
            g.leading_coeff().is_some_and(|c| c.is_one())
                && g.terms().iter().all(|(m, _)| {
                    lms.iter()
                        .enumerate()
                        .all(|(j, lm)| j == k || !lm.divides(m))
                })
        })
    }

    /// Monomials outside the leading-term ideal, or `None` when there are infinitely many.
    pub fn standard_monomials(&self) -> Option<Vec<Monomial>> {
        let n = self.ring.nvars();
        let lms = self.leading_monomials();
        if lms.iter().any(|m| m.is_one()) {
            return Some(Vec::new());
        }
        let mut bound = vec![0u16; n];
        for k in 0..n {
            bound[k] = lms
                .iter()
                .filter(|m| m.exps().iter().enumerate().all(|(j, &e)| j == k || e == 0))
                .map(|m| m.exps()[k])
                .min()?;
        }
        let mut out = Vec::new();
        let mut cur = vec![0u16; n];
        loop {
            let m = Monomial::from_exps(&cur);
            if !lms.iter().any(|l| l.divides(&m)) {
                out.push(m);
            }
            let mut k = 0;
            loop {
                if k == n {
                    out.sort_by(|a, b| self.ring.order().cmp(b, a));
                    return Some(out);
                }
                cur[k] += 1;
                if cur[k] < bound[k] {
                    break;
                }
                cur[k] = 0;
                k += 1;
            }
        }
    }

    pub fn quotient_dimension(&self) -> QuotientDim {
        match self.standard_monomials() {
            Some(v) => QuotientDim::Finite(v.len()),
            None => QuotientDim::Infinite,
        }
    }

    /// Coordinates of `NF(f)` on the standard monomials.
    fn coordinates(&self, f: &Polynomial, std: &[Monomial]) -> Result<Vec<GaussianRational>> {
        let nf = self.normal_form(f)?;
        Ok(std.iter().map(|m| nf.coeff(m)).collect())
    }

    /// `v` with `u·v ≡ 1`, for a zero-dimensional ideal.
    pub fn inverse_mod(&self, u: &Polynomial) -> Result<Polynomial> {
        let std = self
            .standard_monomials()
            .ok_or_else(|| Error::Invalid("inverse needs a zero-dimensional ideal".into()))?;
        if std.is_empty() {
            return Err(Error::NonUnit(u.to_string()));
        }
        let n = std.len();
        let mut mat = ScalarMatrix::zeros(n, n);
        for (c, m) in std.iter().enumerate() {
            let prod = u.mul_term(m, &GaussianRational::one());
            for (r, v) in self.coordinates(&prod, &std)?.into_iter().enumerate() {
                mat.set(r, c, v);
            }
        }
        let one = self.coordinates(&Polynomial::one(&self.ring), &std)?;
        let x = mat
            .solve(&one)
            .ok_or_else(|| Error::NonUnit(u.to_string()))?;
        let terms = std
            .into_iter()
            .zip(x)
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Ok(Polynomial::from_terms(&self.ring, terms))
    }

    /// Monic generator of `I ∩ k[x_var]` for a zero-dimensional ideal.
    pub fn minimal_polynomial(&self, var: usize) -> Result<UPoly> {
        let std = self.standard_monomials().ok_or_else(|| {
            Error::Invalid("minimal polynomial needs a zero-dimensional ideal".into())
        })?;
        let x = Polynomial::var_index(&self.ring, var);
        let mut powers: Vec<Vec<GaussianRational>> =
            vec![self.coordinates(&Polynomial::one(&self.ring), &std)?];
        let mut p = Polynomial::one(&self.ring);
        for _ in 0..=std.len() {
            p = self.normal_form(&(&p * &x))?;
            let v = self.coordinates(&p, &std)?;
            // solve Σ c_k powers[k] = -v
            let mut mat = ScalarMatrix::zeros(std.len(), powers.len());
            for (c, col) in powers.iter().enumerate() {
                for (r, val) in col.iter().enumerate() {
                    mat.set(r, c, val.clone());
                }
            }
            let rhs: Vec<GaussianRational> = v.iter().map(|c| -c).collect();
            if let Some(sol) = mat.solve(&rhs) {
                let mut coeffs = sol;
                coeffs.push(GaussianRational::one());
                return Ok(UPoly::new(coeffs));
            }
            powers.push(v);
        }
        Err(Error::Invalid("no minimal polynomial found".into()))
    }
}

/// `f ∈ I`.
pub fn ideal_member(f: &Polynomial, ideal: &Ideal) -> Result<bool> {
    if f.is_zero() {
        return Ok(true);
    }
    ideal.groebner()?.contains(f)
}

fn fresh_name(vars: &VarSet, base: &str) -> String {
    let mut name = base.to_string();
    let mut k = 0;
    while vars.index_of(&name).is_some() {
        k += 1;
        name = format!("{base}{k}");
    }
    name
}

/// Ring with one extra variable placed first and `Block(1)` order.
fn ring_with_leading_var(ring: &Arc<Ring>, base: &str) -> Result<(Arc<Ring>, String)> {
    let t = fresh_name(ring.vars(), base);
    let mut names = vec![t.clone()];
    names.extend(ring.vars().names().iter().cloned());
    Ok((Ring::new(VarSet::new(&names)?, MonomialOrder::Block(1)), t))
}

/// `f` vanishes on `V(I)`. Tries `f^k ∈ I` for small `k` first, then
/// tests `1 ∈ I + ⟨1 − t·f⟩`.
pub fn radical_member(f: &Polynomial, ideal: &Ideal, limits: &Limits) -> Result<bool> {
    if f.is_zero() {
        return Ok(true);
    }
    let gb = buchberger(ideal, limits)?;
    radical_member_with(f, ideal, &gb, limits)
}

/// As [`radical_member`] with a precomputed basis of `ideal`.
pub fn radical_member_with(
    f: &Polynomial,
    ideal: &Ideal,
    gb: &GroebnerBasis,
    limits: &Limits,
) -> Result<bool> {
    let mut p = f.clone();
    for _ in 0..3 {
        if gb.contains(&p)? {
            return Ok(true);
        }
        p = &p * f;
    }
    let (ext, t) = ring_with_leading_var(ideal.ring(), "t")?;
    let mut gens: Vec<Polynomial> = ideal
        .generators()
        .iter()
        .map(|g| g.embed(&ext))
        .collect::<Result<_>>()?;
    let tf = &ext.var(&t)? * &f.embed(&ext)?;
    gens.push(&Polynomial::one(&ext) - &tf);
    Ok(buchberger(&Ideal::new(&ext, gens)?, limits)?.is_unit())
}

/// Generators of `I ∩ k[keep]`, returned over the original ring.
pub fn eliminate(ideal: &Ideal, keep: &[&str], limits: &Limits) -> Result<Ideal> {
    let ring = ideal.ring();
    for k in keep {
        if ring.vars().index_of(k).is_none() {
            return Err(Error::UnknownVariable(k.to_string()));
        }
    }
    let mut names: Vec<String> = ring
        .vars()
        .names()
        .iter()
        .filter(|n| !keep.contains(&n.as_str()))
        .cloned()
        .collect();
    let nelim = names.len();
    names.extend(
        ring.vars()
            .names()
            .iter()
            .filter(|n| keep.contains(&n.as_str()))
            .cloned(),
    );
    let ext = Ring::new(VarSet::new(&names)?, MonomialOrder::Block(nelim));
    let gens = ideal
        .generators()
        .iter()
        .map(|g| g.embed(&ext))
        .collect::<Result<Vec<_>>>()?;
    let gb = buchberger(&Ideal::new(&ext, gens)?, limits)?;
    let kept = gb
        .basis()
        .iter()
        .filter(|g| g.support_vars().iter().all(|&v| v >= nelim))
        .map(|g| g.embed(ring))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ring, kept)
}

/// `I ∩ J` as the elimination of `t` from `t·I + (1 − t)·J`.
pub fn intersect(a: &Ideal, b: &Ideal, limits: &Limits) -> Result<Ideal> {
    if !Ring::same(a.ring(), b.ring()) {
        return Err(Error::VarSetMismatch(
            "intersect over different rings".into(),
        ));
    }
    let ring = a.ring();
    let (ext, t) = ring_with_leading_var(ring, "t")?;
    let tv = ext.var(&t)?;
    let one_minus_t = &Polynomial::one(&ext) - &tv;
    let mut gens = Vec::new();
    for g in a.generators() {
        gens.push(&tv * &g.embed(&ext)?);
    }
    for g in b.generators() {
        gens.push(&one_minus_t * &g.embed(&ext)?);
    }
    let gb = buchberger(&Ideal::new(&ext, gens)?, limits)?;
    let kept = gb
        .basis()
        .iter()
        .filter(|g| g.degree_in(&[0]).unwrap_or(0) == 0)
        .map(|g| g.embed(ring))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ring, kept)
}

/// `I : f^∞`.
pub fn saturate(ideal: &Ideal, f: &Polynomial, limits: &Limits) -> Result<Ideal> {
    let ring = ideal.ring();
    let (ext, t) = ring_with_leading_var(ring, "t")?;
    let mut gens = ideal
        .generators()
        .iter()
        .map(|g| g.embed(&ext))
        .collect::<Result<Vec<_>>>()?;
    gens.push(&Polynomial::one(&ext) - &(&ext.var(&t)? * &f.embed(&ext)?));
    let gb = buchberger(&Ideal::new(&ext, gens)?, limits)?;
    let kept = gb
        .basis()
        .iter()
        .filter(|g| g.degree_in(&[0]).unwrap_or(0) == 0)
        .map(|g| g.embed(ring))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ring, kept)
}

/// Same ideal: each basis contains the other's generators.
pub fn ideals_equal(a: &Ideal, b: &Ideal) -> Result<bool> {
    let ga = a.groebner()?;
    let gb = b.groebner()?;
    Ok(ga.contains_all(b.generators())? && gb.contains_all(a.generators())?)
}

pub fn quotient_dimension(ideal: &Ideal, limits: &Limits) -> Result<QuotientDim> {
    Ok(buchberger(ideal, limits)?.quotient_dimension())
}

/// Hilbert series numerator of `k[x_1..x_n]/⟨monomials⟩` over `(1-t)^n`,
/// as integer coefficients in ascending degree.
pub fn hilbert_numerator(monomials: &[Monomial], nvars: usize) -> Vec<i64> {
    let gens = minimalize(monomials.to_vec());
    numerator_rec(gens, nvars)
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for g in gens {
        if !out.iter().any(|o| o.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn poly_mul_i(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add_shift(a: &[i64], b: &[i64], shift: usize, sign: i64) -> Vec<i64> {
    let n = a.len().max(b.len() + shift);
    let mut out = vec![0i64; n];
    out[..a.len()].copy_from_slice(a);
    for (k, y) in b.iter().enumerate() {
        out[k + shift] += sign * y;
    }
    while out.len() > 1 && *out.last().unwrap() == 0 {
        out.pop();
    }
    out
}

fn numerator_rec(gens: Vec<Monomial>, nvars: usize) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|m| m.is_one()) {
        return vec![0];
    }
    // pairwise coprime generators: product of (1 - t^deg)
    let coprime =
        (0..gens.len()).all(|a| (a + 1..gens.len()).all(|b| gens[a].is_coprime(&gens[b])));
    if coprime {
        let mut acc = vec![1i64];
        for g in &gens {
            let mut f = vec![0i64; g.degree() as usize + 1];
            f[0] = 1;
            f[g.degree() as usize] -= 1;
            acc = poly_mul_i(&acc, &f);
        }
        return acc;
    }
    // pivot x_v^e with v shared by several generators and e below any pure power of v
    let mut best = (0usize, 0usize);
    for v in 0..nvars {
        let cnt = gens.iter().filter(|m| m.exps()[v] > 0).count();
        if cnt > best.1 {
            best = (v, cnt);
        }
    }
    let v = best.0;
    let e = gens
        .iter()
        .filter(|m| m.exps()[v] > 0 && m.exps()[v] as u32 != m.degree())
        .map(|m| m.exps()[v])
        .min()
        .expect("shared variable in a mixed generator");
    let pivot = {
        let mut p = vec![0u16; nvars];
        p[v] = e;
        Monomial::from_exps(&p)
    };
    // N(I) = N(I + ⟨p⟩) + t^deg(p) · N(I : p)
    let mut with_p = gens.clone();
    with_p.push(pivot.clone());
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|m| {
            let ex: Vec<u16> = m
                .exps()
                .iter()
                .zip(pivot.exps())
                .map(|(&a, &b)| a.saturating_sub(b))
                .collect();
            Monomial::from_exps(&ex)
        })
        .collect();
    let n1 = numerator_rec(minimalize(with_p), nvars);
    let n2 = numerator_rec(minimalize(colon), nvars);
    poly_add_shift(&n1, &n2, e as usize, 1)
}

/// Projective dimension and degree of `V(I)` for a homogeneous ideal.
/// The empty projective scheme has dimension `-1` and degree equal to
/// the (finite) affine quotient dimension.
pub fn hilbert_dimension_degree(ideal: &Ideal, limits: &Limits) -> Result<(i64, i64)> {
    if !ideal.is_homogeneous() {
        return Err(Error::NonHomogeneous);
    }
    let gb = buchberger(ideal, limits)?;
    Ok(dimension_degree_of_basis(&gb))
}

pub fn dimension_degree_of_basis(gb: &GroebnerBasis) -> (i64, i64) {
    let n = gb.ring().nvars();
    let mut num = hilbert_numerator(&gb.leading_monomials(), n);
    let mut k = 0usize;
    // divide by (1 - t) while the numerator vanishes at t = 1
    while num.iter().sum::<i64>() == 0 && !(num.len() == 1 && num[0] == 0) {
        let mut q = vec![0i64; num.len() - 1];
        let mut acc = 0i64;
        for d in 0..num.len() - 1 {
            acc += num[d];
            q[d] = acc;
        }
        num = q;
        k += 1;
    }
    if num.len() == 1 && num[0] == 0 {
        return (-1, 0);
    }
    let krull = n as i64 - k as i64;
    (krull - 1, num.iter().sum())
}
