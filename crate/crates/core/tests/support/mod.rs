#![allow(dead_code, clippy::eq_op)]

use std::cmp::Ordering;
use std::sync::Arc;

use num_traits::{One, Zero};
use proptest::prelude::*;
use proptest::test_runner::{TestCaseError, TestRunner};

use linescheme_core::groebner::{buchberger, reduce_fully, Ideal, Limits};
use linescheme_core::plucker::{
    l1_line, line_from_points, point_on_line, point_on_line_by_rank, PluckerLine,
};
use linescheme_core::point_scheme::ProjectivePoint;
use linescheme_core::{
    parse_poly, GaussianRational as GR, Monomial, MonomialOrder, Polynomial, Ring,
};

pub const CASES: u32 = 500;

type Check = Result<(), TestCaseError>;

fn run<S: Strategy>(strategy: S, test: impl Fn(S::Value) -> Check) -> Result<(), String> {
    TestRunner::new(ProptestConfig {
        cases: CASES,
        failure_persistence: None,
        ..ProptestConfig::default()
    })
    .run(&strategy, test)
    .map_err(|e| e.to_string())
}

fn gr() -> impl Strategy<Value = GR> {
    (-20i64..=20, 1i64..=9, -20i64..=20, 1i64..=9)
        .prop_map(|(a, b, c, d)| GR::from_parts((a, b), (c, d)))
}

fn small_gr() -> impl Strategy<Value = GR> {
    (-3i64..=3, -2i64..=2).prop_map(|(a, b)| GR::from_parts((a, 1), (b, 1)))
}

fn ring3() -> Arc<Ring> {
    Ring::with_names(&["x", "y", "z"]).unwrap()
}

fn monomial(n: usize, max: u16) -> impl Strategy<Value = Monomial> {
    proptest::collection::vec(0..=max, n).prop_map(|e| Monomial::from_exps(&e))
}

fn poly(
    ring: Arc<Ring>,
    terms: usize,
    deg: u16,
    coeff: BoxedStrategy<GR>,
) -> impl Strategy<Value = Polynomial> {
    let n = ring.nvars();
    proptest::collection::vec((monomial(n, deg), coeff), 0..=terms)
        .prop_map(move |ts| Polynomial::from_terms(&ring, ts))
}

fn any_poly() -> impl Strategy<Value = Polynomial> {
    poly(ring3(), 4, 3, gr().boxed())
}

fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (mf, cf) = f.leading_term().unwrap();
    let (mg, cg) = g.leading_term().unwrap();
    let l = mf.lcm(mg);
    let a = f.mul_term(&mf.quotient_of(&l), &(GR::one() / cf));
    let b = g.mul_term(&mg.quotient_of(&l), &(GR::one() / cg));
    &a - &b
}

// A 3×3 rank test on (a, b, p) written out with determinants.
fn collinear(a: &[GR; 4], b: &[GR; 4], p: &[GR; 4]) -> bool {
    for skip in 0..4 {
        let c: Vec<usize> = (0..4).filter(|&k| k != skip).collect();
        let m = |r: &[GR; 4], k: usize| r[c[k]].clone();
        let det = &(&(&m(a, 0) * &(&(&m(b, 1) * &m(p, 2)) - &(&m(b, 2) * &m(p, 1))))
            - &(&m(a, 1) * &(&(&m(b, 0) * &m(p, 2)) - &(&m(b, 2) * &m(p, 0)))))
            + &(&m(a, 2) * &(&(&m(b, 0) * &m(p, 1)) - &(&m(b, 1) * &m(p, 0))));
        if !det.is_zero() {
            return false;
        }
    }
    true
}

fn point4() -> impl Strategy<Value = [GR; 4]> {
    [small_gr(), small_gr(), small_gr(), small_gr()]
}

pub fn field_axioms() -> Result<(), String> {
    run((gr(), gr(), gr()), |(a, b, c)| {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &GR::zero(), a.clone());
        prop_assert_eq!(&a * &GR::one(), a.clone());
        prop_assert!((&a + &(-&a)).is_zero());
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        prop_assert_eq!(GR::from((&a * &a.conj()).re().clone()), &a * &a.conj());
        if a.is_zero() {
            prop_assert!(a.inverse().is_err());
        } else {
            prop_assert!((&a * &a.inverse().unwrap()).is_one());
            prop_assert_eq!(&(&b / &a) * &a, b.clone());
        }
        Ok(())
    })
}

pub fn ring_axioms() -> Result<(), String> {
    run((any_poly(), any_poly(), any_poly()), |(f, g, h)| {
        let ring = ring3();
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&f * &Polynomial::one(&ring), f.clone());
        prop_assert!((&f - &f).is_zero());
        prop_assert!((&f * &Polynomial::zero(&ring)).is_zero());
        if !f.is_zero() && !g.is_zero() {
            let fg = &f * &g;
            prop_assert_eq!(
                fg.total_degree(),
                Some(f.total_degree().unwrap() + g.total_degree().unwrap())
            );
            prop_assert_eq!(fg.div_exact(&g), Some(f.clone()));
        }
        Ok(())
    })
}

pub fn evaluation_is_a_ring_map() -> Result<(), String> {
    run(
        (
            any_poly(),
            any_poly(),
            proptest::array::uniform3(small_gr()),
        ),
        |(f, g, p)| {
            prop_assert_eq!((&f + &g).eval(&p), &f.eval(&p) + &g.eval(&p));
            prop_assert_eq!((&f * &g).eval(&p), &f.eval(&p) * &g.eval(&p));
            Ok(())
        },
    )
}

pub fn monomial_order_axioms() -> Result<(), String> {
    run(
        (monomial(4, 4), monomial(4, 4), monomial(4, 4), 0usize..=4),
        |(a, b, c, k)| {
            for order in [
                MonomialOrder::Lex,
                MonomialOrder::DegRevLex,
                MonomialOrder::Block(k),
            ] {
                let one = Monomial::one(4);
                prop_assert_eq!(order.cmp(&a, &b), order.cmp(&b, &a).reverse());
                prop_assert_eq!(order.cmp(&a, &b) == Ordering::Equal, a == b);
                prop_assert_eq!(order.cmp(&a, &b), order.cmp(&a.mul(&c), &b.mul(&c)));
                prop_assert_ne!(order.cmp(&one, &a), Ordering::Greater);
                prop_assert_ne!(order.cmp(&a, &a.mul(&c)), Ordering::Greater);
                if order.cmp(&a, &b) != Ordering::Greater && order.cmp(&b, &c) != Ordering::Greater
                {
                    prop_assert_ne!(order.cmp(&a, &c), Ordering::Greater);
                }
            }
            if a.degree() < b.degree() {
                prop_assert_eq!(MonomialOrder::DegRevLex.cmp(&a, &b), Ordering::Less);
            }
            Ok(())
        },
    )
}

pub fn buchberger_post_hoc() -> Result<(), String> {
    run(
        (
            proptest::collection::vec(poly(ring3(), 3, 2, small_gr().boxed()), 1..=3),
            poly(ring3(), 3, 2, small_gr().boxed()),
        ),
        |(gens, probe)| {
            let ring = ring3();
            let ideal = Ideal::new(&ring, gens.clone()).unwrap();
            let gb = buchberger(&ideal, &Limits::default()).unwrap();
            let basis = gb.basis();
            for i in 0..basis.len() {
                prop_assert!(basis[i].leading_coeff().unwrap().is_one());
                for j in i + 1..basis.len() {
                    prop_assert!(reduce_fully(&s_polynomial(&basis[i], &basis[j]), basis).is_zero());
                }
            }
            for g in &gens {
                prop_assert!(reduce_fully(g, basis).is_zero());
            }
            // Combinations of the generators are members and the normal form is
            // independent of the representative.
            let combo = gens
                .iter()
                .fold(Polynomial::zero(&ring), |acc, g| &acc + &(&probe * g));
            prop_assert!(gb.contains(&combo).unwrap());
            prop_assert_eq!(
                gb.normal_form(&(&probe + &combo)).unwrap(),
                gb.normal_form(&probe).unwrap()
            );
            Ok(())
        },
    )
}

pub fn pluecker_identity() -> Result<(), String> {
    run((point4(), point4()), |(a, b)| {
        match line_from_points(&ProjectivePoint(a.clone()), &ProjectivePoint(b.clone())) {
            Ok(l) => {
                let m = &l.m;
                let p = &(&(&m[0] * &m[5]) - &(&m[1] * &m[4])) + &(&m[2] * &m[3]);
                prop_assert!(p.is_zero());
                prop_assert!(l.satisfies_pluecker());
                prop_assert!(PluckerLine::new(l.m.clone()).is_ok());
                prop_assert_eq!(l.matrix().to_line().unwrap(), l);
            }
            Err(_) => {
                let dependent = (0..4)
                    .all(|i| (i + 1..4).all(|j| (&(&a[i] * &b[j]) - &(&a[j] * &b[i])).is_zero()));
                prop_assert!(dependent);
            }
        }
        Ok(())
    })
}

pub fn incidence_matches_rank() -> Result<(), String> {
    run(
        (point4(), point4(), point4(), small_gr(), small_gr()),
        |(a, b, p, s, t)| {
            let (pa, pb) = (ProjectivePoint(a.clone()), ProjectivePoint(b.clone()));
            if let Ok(l) = line_from_points(&pa, &pb) {
                if let Ok(q) = ProjectivePoint::new(p.clone()) {
                    prop_assert_eq!(point_on_line(&q, &l), collinear(&a, &b, &p));
                    prop_assert_eq!(point_on_line(&q, &l), point_on_line_by_rank(&q, &l));
                }
                let mix: [GR; 4] = std::array::from_fn(|k| &(&s * &a[k]) + &(&t * &b[k]));
                if let Ok(q) = ProjectivePoint::new(mix) {
                    prop_assert!(point_on_line(&q, &l));
                }
            }
            Ok(())
        },
    )
}

pub fn l1_lines_meet_their_planes() -> Result<(), String> {
    run(
        (gr(), gr(), small_gr(), small_gr()),
        |(alpha, beta, s, t)| {
            let l = l1_line(&alpha, &beta).unwrap();
            prop_assert!(l.satisfies_pluecker());
            let p = [&alpha * &s, &beta * &t, s.clone(), t.clone()];
            if let Ok(q) = ProjectivePoint::new(p) {
                prop_assert!(point_on_line(&q, &l));
            }
            Ok(())
        },
    )
}

pub fn scalar_round_trip() -> Result<(), String> {
    run(gr(), |a| {
        prop_assert_eq!(a.to_string().parse::<GR>().unwrap(), a);
        Ok(())
    })
}

pub fn poly_round_trip() -> Result<(), String> {
    run(any_poly(), |f| {
        let ring = ring3();
        let text = f.to_string();
        prop_assert_eq!(parse_poly(&text, &ring, None).unwrap(), f.clone());
        let spaced = text.replace(' ', "");
        prop_assert_eq!(parse_poly(&spaced, &ring, None).unwrap(), f);
        Ok(())
    })
}

pub type Suite = (&'static str, fn() -> Result<(), String>);

pub const ALL: [Suite; 10] = [
    ("field_axioms", field_axioms),
    ("ring_axioms", ring_axioms),
    ("evaluation_is_a_ring_map", evaluation_is_a_ring_map),
    ("monomial_order_axioms", monomial_order_axioms),
    ("buchberger_post_hoc", buchberger_post_hoc),
    ("pluecker_identity", pluecker_identity),
    ("incidence_matches_rank", incidence_matches_rank),
    ("l1_lines_meet_their_planes", l1_lines_meet_their_planes),
    ("scalar_round_trip", scalar_round_trip),
    ("poly_round_trip", poly_round_trip),
];
