//! Properties of the polynomial kernel: parser round trips, resultants,
//! determinants and squarefree parts.

use num_bigint::BigInt;
use proptest::prelude::*;
use twistor_surfaces::poly::{bareiss_determinant, gcd, squarefree, sylvester_resultant};
use twistor_surfaces::{parse_poly, GaussianRational as G, MultiPoly, Rational};

const VARS: [&str; 3] = ["x", "y", "v"];

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

fn gaussian() -> impl Strategy<Value = G> {
    (rational(), rational()).prop_map(|(re, im)| G::new(re, im))
}

fn small_int() -> impl Strategy<Value = G> {
    (-4i64..=4, -2i64..=2).prop_map(|(re, im)| G::from_ints(re, im))
}

/// Sparse polynomial in `VARS` with total degree at most `deg`.
fn poly(deg: u32, max_terms: usize, coeff: BoxedStrategy<G>) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec(((0..=deg), (0..=deg), (0..=deg), coeff), 0..=max_terms).prop_map(move |ts| {
        MultiPoly::from_terms(
            &VARS,
            ts.into_iter()
                .filter(|(a, b, c, _)| a + b + c <= deg)
                .map(|(a, b, c, k)| (vec![a, b, c], k)),
        )
    })
}

fn cofactor_det(m: &[Vec<MultiPoly>]) -> MultiPoly {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = MultiPoly::zero(&VARS);
    for col in 0..n {
        let minor: Vec<Vec<MultiPoly>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(c, _)| *c != col).map(|(_, p)| p.clone()).collect())
            .collect();
        let term = &m[0][col] * &cofactor_det(&minor);
        acc = if col % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

fn square_matrix() -> impl Strategy<Value = Vec<Vec<MultiPoly>>> {
    (1usize..=4).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(poly(1, 2, small_int().boxed()), n), n)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn gaussian_parse_render(c in gaussian()) {
        let back: G = c.to_string().parse().unwrap();
        prop_assert_eq!(back, c);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn polynomial_parse_render(p in poly(4, 6, gaussian().boxed())) {
        let src = p.to_string();
        let back = parse_poly(&src, &VARS).unwrap();
        prop_assert_eq!(back, p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn bareiss_matches_cofactor(m in square_matrix()) {
        prop_assert_eq!(bareiss_determinant(&m), cofactor_det(&m));
    }

    #[test]
    fn resultant_commutes_with_specialization(
        p in poly(3, 5, small_int().boxed()),
        q in poly(3, 5, small_int().boxed()),
        a in small_int(),
        b in small_int(),
    ) {
        let dp = p.degree_in("v");
        let dq = q.degree_in("v");
        prop_assume!(dp > 0 && dq > 0);
        let at = |f: &MultiPoly| f.specialize("x", &a).specialize("y", &b);
        // leading coefficients in v must survive the specialization
        let lead = |f: &MultiPoly, d: usize| f.coefficients_in("v")[d].clone();
        prop_assume!(!at(&lead(&p, dp as usize)).is_zero() && !at(&lead(&q, dq as usize)).is_zero());
        let r = sylvester_resultant(&p, &q, "v").unwrap();
        let r_at = r.eval(&[("x", a.clone()), ("y", b.clone())]).unwrap();
        let rs = sylvester_resultant(&at(&p), &at(&q), "v").unwrap();
        prop_assert_eq!(rs.constant_value().unwrap(), r_at);
    }

    #[test]
    fn planted_common_factor_kills_resultant(
        c0 in poly(2, 3, small_int().boxed()),
        k in small_int(),
        p in poly(2, 3, small_int().boxed()),
        q in poly(2, 3, small_int().boxed()),
    ) {
        let linear = &MultiPoly::var(&VARS, "v") + &MultiPoly::constant(&VARS, k);
        let c = if c0.is_zero() { linear } else { &linear * &c0 };
        let pc = &p * &c;
        let qc = &q * &c;
        prop_assume!(!pc.is_zero() && !qc.is_zero());
        prop_assert!(sylvester_resultant(&pc, &qc, "v").unwrap().is_zero());
    }

    #[test]
    fn squarefree_is_coprime_with_derivative(
        f in poly(2, 3, small_int().boxed()),
        g in poly(2, 3, small_int().boxed()),
    ) {
        let p = &(&f * &f) * &g;
        prop_assume!(!p.is_constant());
        let s = squarefree(&p);
        prop_assert!(s.divides(&p));
        // a repeated factor involving x would survive in gcd(s, ds/dx)
        for x in VARS {
            prop_assert_eq!(gcd(&s, &s.derivative(x)).degree_in(x), 0, "{} not squarefree in {}", s, x);
        }
    }
}

#[test]
fn resultant_nonzero_without_common_factor() {
    let p = parse_poly("v^2 - x", &VARS).unwrap();
    let q = parse_poly("v - y", &VARS).unwrap();
    let r = sylvester_resultant(&p, &q, "v").unwrap();
    assert_eq!(r, parse_poly("y^2 - x", &VARS).unwrap());
}
