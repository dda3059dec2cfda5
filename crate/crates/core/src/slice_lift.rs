//! Twistor lift of a slice-regular polynomial `f = g + h·j`.
//!
//! The lift is the bihomogeneous map
//! `([s,u],[v0,v1]) ↦ [s v0^m, u v0^m, s G - u Ĥ, s H + u Ĝ]`
//! where capitals are degree-`m` homogenizations and `ĝ` conjugates the
//! coefficients of `g`. Over real `v` its `s,u`-lines are twistor lines.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::parse::parse_poly_expr;
use crate::poly::{homogenize, MultiPoly};
use crate::projective::Line3;
use crate::scalars::{GaussianRational as G, Rational};

pub const SLICE_VAR: &str = "v";
pub const LIFT_VARS: [&str; 4] = ["s", "u", "v0", "v1"];

/// `ĝ(v) = conj(g(v̄))`, i.e. coefficientwise conjugation.
pub fn hat_conj(g: &MultiPoly) -> MultiPoly {
    g.conj_coeffs()
}

#[derive(Clone, Debug, Serialize)]
pub struct SlicePair {
    g: MultiPoly,
    h: MultiPoly,
    m: u32,
}

impl SlicePair {
    pub fn new(g: MultiPoly, h: MultiPoly) -> Result<Self> {
        let vars = [SLICE_VAR.to_string()];
        let g = g.with_vars(&vars)?;
        let h = h.with_vars(&vars)?;
        let m = g.degree().max(h.degree());
        if m == 0 {
            return Err(Error::DegenerateLift);
        }
        Ok(Self { g, h, m })
    }

    pub fn from_exprs(g: &str, h: &str) -> Result<Self> {
        Self::new(parse_poly_expr(g, SLICE_VAR)?, parse_poly_expr(h, SLICE_VAR)?)
    }

    pub fn g(&self) -> &MultiPoly {
        &self.g
    }

    pub fn h(&self) -> &MultiPoly {
        &self.h
    }

    pub fn g_hat(&self) -> MultiPoly {
        hat_conj(&self.g)
    }

    pub fn h_hat(&self) -> MultiPoly {
        hat_conj(&self.h)
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn has_real_coeffs(&self) -> bool {
        self.g.has_real_coeffs() && self.h.has_real_coeffs()
    }
}

/// Bihomogeneous components `P0..P3` of bidegree `(1, m)` in
/// `(s, u) × (v0, v1)`.
#[derive(Clone, Debug)]
pub struct SurfaceParam {
    components: [MultiPoly; 4],
    m: u32,
}

impl SurfaceParam {
    pub fn components(&self) -> &[MultiPoly; 4] {
        &self.components
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn evaluate(&self, s: &G, u: &G, v0: &G, v1: &G) -> Vec<G> {
        let vals = [s.clone(), u.clone(), v0.clone(), v1.clone()];
        self.components.iter().map(|p| p.eval_slice(&vals)).collect()
    }

    /// Line swept by `[s,u]` at the affine parameter `v` (`[v0,v1] = [1,v]`).
    pub fn fiber_at(&self, v: &G) -> Line3 {
        let one = G::from(1);
        let zero = G::from(0);
        let a = self.evaluate(&one, &zero, &one, v);
        let b = self.evaluate(&zero, &one, &one, v);
        Line3::from_vecs(a, b).expect("first two coordinates are independent")
    }
}

fn lift_homogenize(p: &MultiPoly, m: u32) -> MultiPoly {
    homogenize(p, SLICE_VAR, "v0", m)
        .expect("m bounds the degree")
        .rename_var(SLICE_VAR, "v1")
        .with_vars(&LIFT_VARS.map(String::from))
        .expect("lift variables")
}

pub fn lift_param(pair: &SlicePair) -> SurfaceParam {
    let m = pair.m;
    let var = |n: &str| MultiPoly::var(&LIFT_VARS, n);
    let (s, u) = (var("s"), var("u"));
    let v0m = var("v0").pow(m);
    let g = lift_homogenize(&pair.g, m);
    let h = lift_homogenize(&pair.h, m);
    let g_hat = lift_homogenize(&pair.g_hat(), m);
    let h_hat = lift_homogenize(&pair.h_hat(), m);
    SurfaceParam {
        components: [
            &s * &v0m,
            &u * &v0m,
            &(&s * &g) - &(&u * &h_hat),
            &(&s * &h) + &(&u * &g_hat),
        ],
        m,
    }
}

/// The ruling line over the real parameter `v`.
pub fn real_fiber(param: &SurfaceParam, v: &Rational) -> Line3 {
    param.fiber_at(&G::real(v.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::projective::{pluecker_embed, ProjPoint};
    use crate::scalars::rat_int;
    use crate::twistor::is_twistor_line;

    fn lp(src: &str) -> MultiPoly {
        parse_poly(src, &LIFT_VARS).unwrap()
    }

    #[test]
    fn hat_conj_examples() {
        let g = parse_poly_expr("i*v + 1", "v").unwrap();
        assert_eq!(hat_conj(&g), parse_poly_expr("-i*v + 1", "v").unwrap());
        let g = parse_poly_expr("v^2 - 3*v + 2", "v").unwrap();
        assert_eq!(hat_conj(&g), g);
        let g = parse_poly_expr("(2+i)*v^3", "v").unwrap();
        assert_eq!(hat_conj(&hat_conj(&g)), g);
    }

    #[test]
    fn lift_examples() {
        let p = lift_param(&SlicePair::from_exprs("v", "0").unwrap());
        assert_eq!(p.components(), &[lp("s*v0"), lp("u*v0"), lp("s*v1"), lp("u*v1")]);

        let p = lift_param(&SlicePair::from_exprs("v", "v").unwrap());
        assert_eq!(
            p.components(),
            &[lp("s*v0"), lp("u*v0"), lp("(s - u)*v1"), lp("(s + u)*v1")]
        );

        assert!(matches!(SlicePair::from_exprs("1", "0"), Err(Error::DegenerateLift)));
    }

    #[test]
    fn bidegree() {
        let p = lift_param(&SlicePair::from_exprs("v^3 - i*v", "(1+i)*v^2 + 2").unwrap());
        for c in p.components() {
            assert!(c.is_homogeneous_in(&["s", "u"]));
            assert!(c.is_homogeneous_in(&["v0", "v1"]));
            let (e, _) = c.terms().next().unwrap();
            assert_eq!((e[0] + e[1], e[2] + e[3]), (1, 3));
        }
    }

    #[test]
    fn real_fiber_examples() {
        let p = lift_param(&SlicePair::from_exprs("v", "0").unwrap());
        let l = real_fiber(&p, &rat_int(2));
        let want = Line3::new(
            ProjPoint::from_ints(&[1, 0, 2, 0]).unwrap(),
            ProjPoint::from_ints(&[0, 1, 0, 2]).unwrap(),
        )
        .unwrap();
        assert_eq!(l, want);
        assert!(is_twistor_line(&pluecker_embed(&l)).is_twistor);

        let p = lift_param(&SlicePair::from_exprs("v", "v").unwrap());
        let l = real_fiber(&p, &rat_int(0));
        let want = Line3::new(
            ProjPoint::from_ints(&[1, 0, 0, 0]).unwrap(),
            ProjPoint::from_ints(&[0, 1, 0, 0]).unwrap(),
        )
        .unwrap();
        assert_eq!(l, want);
        assert!(is_twistor_line(&pluecker_embed(&l)).is_twistor);

        let p = lift_param(&SlicePair::from_exprs("v", "0").unwrap());
        let l = p.fiber_at(&G::i());
        assert!(!is_twistor_line(&pluecker_embed(&l)).is_twistor);
    }
}
