use num_traits::{One, Zero};
use proptest::prelude::*;

use wronski::polyalg::{
    gcd, isolate_roots, ord_at, resultant, rotate_imaginary, squarefree_decomposition,
    squarefree_part, sturm_count, sturm_count_detailed, Bound, Interval, RatPoly,
};
use wronski::rational::{int, rat, Rational};

fn small_poly(max_degree: usize) -> impl Strategy<Value = RatPoly> {
    prop::collection::vec(-6i64..=6, 1..=max_degree + 1).prop_map(|c| RatPoly::from_ints(&c))
}

fn nonzero_poly(max_degree: usize) -> impl Strategy<Value = RatPoly> {
    small_poly(max_degree).prop_filter("nonzero", |p| !p.is_zero())
}

/// Rational roots with multiplicities, distinct roots guaranteed.
fn root_multiset() -> impl Strategy<Value = Vec<(Rational, u32)>> {
    prop::collection::btree_map((-12i64..=12, 1i64..=3), 1u32..=3, 1..=4).prop_map(|m| {
        let mut seen: Vec<(Rational, u32)> = Vec::new();
        for ((n, d), mult) in m {
            let r = rat(n, d);
            if !seen.iter().any(|(s, _)| *s == r) {
                seen.push((r, mult));
            }
        }
        seen
    })
}

fn from_roots(roots: &[(Rational, u32)]) -> RatPoly {
    roots.iter().fold(RatPoly::one(), |acc, (r, m)| {
        &acc * &RatPoly::linear_root(r).pow(*m)
    })
}

/// Determinant of a rational matrix by Gaussian elimination.
fn rational_det(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det *= &m[c][c];
        let pivot = m[c].clone();
        for row in m.iter_mut().skip(c + 1) {
            let f = &row[c] / &pivot[c];
            for (x, p) in row.iter_mut().zip(&pivot).skip(c) {
                *x -= &f * p;
            }
        }
    }
    det
}

/// Resultant as the determinant of the Sylvester matrix.
fn sylvester_resultant(p: &RatPoly, q: &RatPoly) -> Rational {
    let (m, n) = (p.degree().unwrap(), q.degree().unwrap());
    let size = m + n;
    if size == 0 {
        return Rational::one();
    }
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![Rational::zero(); size];
        for (j, c) in p.coeffs().iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![Rational::zero(); size];
        for (j, c) in q.coeffs().iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    rational_det(rows)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn gcd_divides_both_and_absorbs_common_factor(
        p in nonzero_poly(4), q in nonzero_poly(4), r in nonzero_poly(3)
    ) {
        let g = gcd(&p, &q).unwrap();
        prop_assert!(p.rem(&g).unwrap().is_zero());
        prop_assert!(q.rem(&g).unwrap().is_zero());
        prop_assert!(g.leading().unwrap().is_one());
        let gr = gcd(&(&p * &r), &(&q * &r)).unwrap();
        prop_assert!(gr.rem(&r).unwrap().is_zero());
    }

    #[test]
    fn squarefree_decomposition_reassembles(roots in root_multiset(), extra in 1i64..5) {
        // an irreducible quadratic factor keeps some roots off the real line
        let p = &from_roots(&roots) * &RatPoly::from_ints(&[extra, 0, 1]);
        let factors = squarefree_decomposition(&p).unwrap();
        let rebuilt = factors
            .iter()
            .fold(RatPoly::one(), |acc, f| &acc * &f.factor.pow(f.multiplicity as u32));
        prop_assert_eq!(rebuilt, p.monic());
        for f in &factors {
            prop_assert_eq!(squarefree_part(&f.factor).unwrap().monic(), f.factor.clone());
        }
        for (i, a) in factors.iter().enumerate() {
            for b in &factors[i + 1..] {
                prop_assert!(gcd(&a.factor, &b.factor).unwrap().is_constant());
            }
        }
    }

    #[test]
    fn sturm_isolation_and_mesh_agree(roots in root_multiset(), lo in -10i64..0, width in 1i64..20) {
        let p = &from_roots(&roots) * &RatPoly::from_ints(&[1, 0, 1]);
        let (a, b) = (int(lo), int(lo + width));
        let iv = Interval::finite(a.clone(), b.clone()).unwrap();
        let inside: Vec<&(Rational, u32)> =
            roots.iter().filter(|(r, _)| a < *r && *r < b).collect();
        let count = sturm_count_detailed(&p, &iv).unwrap();
        prop_assert_eq!(count.count, inside.len());
        prop_assert_eq!(count.root_at_lo, roots.iter().any(|(r, _)| *r == a));
        prop_assert_eq!(count.root_at_hi, roots.iter().any(|(r, _)| *r == b));
        let isolated = isolate_roots(&p, &iv).unwrap();
        prop_assert_eq!(isolated.len(), inside.len());
        let mut sorted = inside.clone();
        sorted.sort();
        for (iso, (r, m)) in isolated.iter().zip(sorted) {
            prop_assert!(iso.lo < *r && *r < iso.hi);
            prop_assert_eq!(iso.multiplicity, *m as usize);
        }
        // sign changes on a mesh avoiding the roots bound the count from below
        let simple = squarefree_part(&p).unwrap();
        let mesh: Vec<Rational> = (0..=width * 36).map(|i| &a + rat(i, 36) + rat(1, 1000)).filter(|x| *x < b).collect();
        let changes = mesh.windows(2).filter(|w| simple.sign_at(&w[0]) * simple.sign_at(&w[1]) < 0).count();
        prop_assert!(changes <= count.count);
    }

    #[test]
    fn whole_line_count_matches_distinct_roots(roots in root_multiset()) {
        let p = from_roots(&roots);
        prop_assert_eq!(sturm_count(&p, &Interval::real_line()).unwrap(), roots.len());
        let neg = Interval::new(Bound::NegInf, Bound::Finite(int(0))).unwrap();
        let expected = roots.iter().filter(|(r, _)| *r < int(0)).count();
        prop_assert_eq!(sturm_count(&p, &neg).unwrap(), expected);
    }

    #[test]
    fn resultant_matches_sylvester_and_detects_common_roots(p in nonzero_poly(4), q in nonzero_poly(4)) {
        let res = resultant(&p, &q).unwrap();
        prop_assert_eq!(&res, &sylvester_resultant(&p, &q));
        prop_assert_eq!(res.is_zero(), !gcd(&p, &q).unwrap().is_constant());
    }

    #[test]
    fn rotation_is_an_involution_on_parity_polynomials(c in prop::collection::vec(-9i64..=9, 1..6), odd in any::<bool>()) {
        // keep only the coefficients with the chosen parity
        let w = usize::from(odd);
        let coeffs: Vec<i64> = c.iter()
            .flat_map(|&v| if w == 1 { vec![0, v] } else { vec![v, 0] })
            .collect();
        let p = RatPoly::from_ints(&coeffs);
        let weight = p.degree().map_or(w, |d| d);
        let weight = if weight % 2 == w { weight } else { weight + 1 };
        let once = rotate_imaginary(&p, weight).unwrap();
        prop_assert_eq!(rotate_imaginary(&once, weight).unwrap(), p);
    }

    #[test]
    fn ord_matches_squarefree_multiplicity(a in -5i64..=5, m in 1usize..5, rest in nonzero_poly(3)) {
        let x0 = int(a);
        let rest = if rest.eval(&x0).is_zero() { &rest + &RatPoly::one() } else { rest };
        prop_assume!(!rest.is_zero() && !rest.eval(&x0).is_zero());
        let p = &RatPoly::linear_root(&x0).pow(m as u32) * &rest;
        prop_assert_eq!(ord_at(&p, &x0).unwrap(), m);
        let factors = squarefree_decomposition(&p).unwrap();
        let owner = factors.iter().find(|f| f.factor.eval(&x0).is_zero()).unwrap();
        prop_assert_eq!(owner.multiplicity, m);
    }
}

#[test]
fn parity_violation_is_reported() {
    let p = RatPoly::from_ints(&[1, 1]);
    assert!(rotate_imaginary(&p, 1).is_err());
}
