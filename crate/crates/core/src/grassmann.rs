//! Ruled surfaces from rational curves on the real quadric
//! `E = {t1 t6 = t4² + t5²}` inside `F = {t2 = t5, t3 = -t4}` ⊂ `Gr(2,4)`.
//!
//! On the chart `t6 = 1` a pair of real polynomials `(f4, f5)` in `w` gives
//! the curve `t(w) = (f4² + f5², f5, -f4, f4, f5, 1)`. Since `σ` is the
//! identity on `F`, every real point of the curve is a twistor line.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::parse::parse_poly_expr;
use crate::poly::{gcd, squarefree_part, MultiPoly};
use crate::projective::{pluecker_coords, Line3, PLUECKER_PAIRS};
use crate::sampling;
use crate::scalars::GaussianRational as G;

pub const CURVE_VAR: &str = "w";
const FAMILY_SEED: u64 = 0x6a_2b_4d;

#[derive(Clone, Debug, Serialize)]
pub struct ECurve {
    f4: MultiPoly,
    f5: MultiPoly,
    #[serde(skip)]
    t: [MultiPoly; 6],
}

pub fn e_curve(f4: &MultiPoly, f5: &MultiPoly) -> Result<ECurve> {
    let vars = [CURVE_VAR.to_string()];
    let f4 = f4.with_vars(&vars)?;
    let f5 = f5.with_vars(&vars)?;
    for f in [&f4, &f5] {
        if !f.has_real_coeffs() {
            return Err(Error::NonRealCoefficients(f.to_string()));
        }
    }
    if f4.degree() == 0 && f5.degree() == 0 {
        return Err(Error::BothConstant);
    }
    let f1 = &(&f4 * &f4) + &(&f5 * &f5);
    let t = [
        f1,
        f5.clone(),
        -&f4,
        f4.clone(),
        f5.clone(),
        MultiPoly::one(&[CURVE_VAR]),
    ];
    Ok(ECurve { f4, f5, t })
}

impl ECurve {
    pub fn from_exprs(f4: &str, f5: &str) -> Result<Self> {
        e_curve(
            &parse_poly_expr(f4, CURVE_VAR)?,
            &parse_poly_expr(f5, CURVE_VAR)?,
        )
    }

    pub fn f4(&self) -> &MultiPoly {
        &self.f4
    }

    pub fn f5(&self) -> &MultiPoly {
        &self.f5
    }

    /// The six Plücker coordinates of the curve, polynomial in `w`.
    pub fn t(&self) -> &[MultiPoly; 6] {
        &self.t
    }

    pub fn t_at(&self, w: &G) -> [G; 6] {
        let pt = [(CURVE_VAR, w.clone())];
        self.t.clone().map(|p| p.eval(&pt).expect("univariate in w"))
    }

    /// `max(deg f4, deg f5)`.
    pub fn k(&self) -> u32 {
        self.f4.degree().max(self.f5.degree())
    }
}

/// Ruling lines `span(A(w), B(w))` of the surface swept by an [`ECurve`].
#[derive(Clone, Debug)]
pub struct LineFamily {
    a: [MultiPoly; 4],
    b: [MultiPoly; 4],
    columns: (usize, usize),
    /// Gcd of the six Plücker minors of `(A, B)`; the pair is dependent
    /// exactly at its roots.
    degeneracy: MultiPoly,
    curve: ECurve,
}

impl LineFamily {
    pub fn a(&self) -> &[MultiPoly; 4] {
        &self.a
    }

    pub fn b(&self) -> &[MultiPoly; 4] {
        &self.b
    }

    pub fn columns(&self) -> (usize, usize) {
        self.columns
    }

    pub fn degeneracy(&self) -> &MultiPoly {
        &self.degeneracy
    }

    pub fn curve(&self) -> &ECurve {
        &self.curve
    }

    pub fn pluecker_polys(&self) -> [MultiPoly; 6] {
        PLUECKER_PAIRS.map(|(i, j)| &(&self.a[i] * &self.b[j]) - &(&self.a[j] * &self.b[i]))
    }

    pub fn points_at(&self, w: &G) -> (Vec<G>, Vec<G>) {
        let pt = [(CURVE_VAR, w.clone())];
        let ev = |v: &[MultiPoly; 4]| -> Vec<G> { v.iter().map(|p| p.eval(&pt).unwrap()).collect() };
        (ev(&self.a), ev(&self.b))
    }

    /// The ruling line at `w`; fails at the finitely many degenerate `w`.
    pub fn at(&self, w: &G) -> Result<Line3> {
        let (a, b) = self.points_at(w);
        Line3::from_vecs(a, b)
    }
}

fn column_content(col: &[MultiPoly; 4]) -> MultiPoly {
    col.iter().fold(MultiPoly::zero(&[CURVE_VAR]), |acc, p| gcd(&acc, p))
}

/// Picks two columns of the antisymmetric matrix `M(w)` built from `t(w)`,
/// lowest total degree first, that are independent at a random rational
/// `w`, and strips their polynomial content.
pub fn line_family(curve: &ECurve) -> Result<LineFamily> {
    let t = &curve.t;
    let zero = MultiPoly::zero(&[CURVE_VAR]);
    let mut m: [[MultiPoly; 4]; 4] = std::array::from_fn(|_| std::array::from_fn(|_| zero.clone()));
    for (k, &(a, b)) in PLUECKER_PAIRS.iter().enumerate() {
        m[a][b] = t[k].clone();
        m[b][a] = -&t[k];
    }
    let columns: Vec<[MultiPoly; 4]> = (0..4)
        .map(|c| {
            let col: [MultiPoly; 4] = std::array::from_fn(|r| m[r][c].clone());
            let content = column_content(&col);
            if content.is_zero() {
                col
            } else {
                col.map(|p| p.div_exact(&content).expect("content divides"))
            }
        })
        .collect();
    let col_degree = |c: &[MultiPoly; 4]| c.iter().map(|p| p.degree()).max().unwrap_or(0);
    let mut pairs: Vec<(usize, usize)> = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).collect();
    pairs.sort_by_key(|&(i, j)| (col_degree(&columns[i]) + col_degree(&columns[j]), i, j));

    let mut rng = sampling::rng(FAMILY_SEED);
    let probes: Vec<G> = (0..3).map(|_| sampling::real(&mut rng, 1000)).collect();
    let eval_col = |c: &[MultiPoly; 4], w: &G| -> Vec<G> {
        c.iter().map(|p| p.eval(&[(CURVE_VAR, w.clone())]).unwrap()).collect()
    };
    for (i, j) in pairs {
        let independent = probes.iter().any(|w| {
            pluecker_coords(&eval_col(&columns[i], w), &eval_col(&columns[j], w))
                .iter()
                .any(|c| !num_traits::Zero::is_zero(c))
        });
        if !independent {
            continue;
        }
        let a = columns[i].clone();
        let b = columns[j].clone();
        let minors = PLUECKER_PAIRS.map(|(x, y)| &(&a[x] * &b[y]) - &(&a[y] * &b[x]));
        let degeneracy = minors.iter().fold(zero.clone(), |acc, p| gcd(&acc, p));
        return Ok(LineFamily {
            a,
            b,
            columns: (i, j),
            degeneracy,
            curve: curve.clone(),
        });
    }
    Err(Error::RankCollapse)
}

/// For `trials` random rational `w1`, counts the distinct `w` with
/// `t(w) ∝ t(w1)`: since `t6 = 1` these are the common roots of
/// `f4(w) - f4(w1)` and `f5(w) - f5(w1)`. Returns false as soon as some
/// `w1` has a partner.
pub fn curve_injectivity_probe(curve: &ECurve, trials: usize) -> bool {
    curve_injectivity_probe_seeded(curve, trials, 0)
}

pub fn curve_injectivity_probe_seeded(curve: &ECurve, trials: usize, seed: u64) -> bool {
    assert!(trials >= 1, "at least one trial");
    let mut rng = sampling::rng(seed);
    (0..trials).all(|_| {
        let w1 = sampling::real(&mut rng, 50);
        partners(curve, &w1) == 1
    })
}

/// Number of distinct (complex) `w` with `t(w) = t(w1)`.
pub fn partners(curve: &ECurve, w1: &G) -> u32 {
    let pt = [(CURVE_VAR, w1.clone())];
    let shift = |f: &MultiPoly| -> MultiPoly {
        let c = MultiPoly::constant(&[CURVE_VAR], f.eval(&pt).unwrap());
        f - &c
    };
    let g = gcd(&shift(&curve.f4), &shift(&curve.f5));
    squarefree_part(&g, CURVE_VAR).degree_in(CURVE_VAR)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::projective::{pluecker_embed, proportional, sigma6, PlueckerPoint};
    use crate::twistor::is_twistor_line;

    fn wp(src: &str) -> MultiPoly {
        parse_poly(src, &[CURVE_VAR]).unwrap()
    }

    #[test]
    fn curve_examples() {
        let c = ECurve::from_exprs("w", "1").unwrap();
        let want = ["w^2 + 1", "1", "-w", "w", "1", "1"].map(wp);
        assert_eq!(c.t(), &want);

        let at0 = c.t_at(&G::from(0));
        assert_eq!(at0, [1, 1, 0, 0, 1, 1].map(G::int));
        assert!(is_twistor_line(&PlueckerPoint::new(at0).unwrap()).is_twistor);

        assert!(matches!(ECurve::from_exprs("i*w", "1"), Err(Error::NonRealCoefficients(_))));
        assert!(matches!(ECurve::from_exprs("2", "1/3"), Err(Error::BothConstant)));
    }

    #[test]
    fn curve_identities() {
        let c = ECurve::from_exprs("3*w^2 - w + 2", "w^3 - 5").unwrap();
        let t = c.t();
        assert_eq!(t[1], t[4]);
        assert_eq!(t[2], -&t[3]);
        assert!((&(&t[0] * &t[5]) - &(&(&t[4] * &t[4]) + &(&t[3] * &t[3]))).is_zero());
        assert!((&(&(&t[0] * &t[5]) - &(&t[1] * &t[4])) + &(&t[2] * &t[3])).is_zero());
        for p in t {
            assert_eq!(&p.conj_coeffs(), p);
        }
        let sig = sigma6(&c.t_at(&G::from(7)));
        assert_eq!(sig, c.t_at(&G::from(7)));
    }

    #[test]
    fn family_examples() {
        let c = ECurve::from_exprs("w", "1").unwrap();
        let fam = line_family(&c).unwrap();
        let l = fam.at(&G::from(0)).unwrap();
        assert_eq!(pluecker_embed(&l), PlueckerPoint::from_ints([1, 1, 0, 0, 1, 1]).unwrap());
        let l = fam.at(&G::from(1)).unwrap();
        assert!(proportional(pluecker_embed(&l).coords(), &c.t_at(&G::from(1))));

        let c = ECurve::from_exprs("0", "w").unwrap();
        assert_eq!(c.t(), &["w^2", "w", "0", "0", "w", "1"].map(wp));
        let fam = line_family(&c).unwrap();
        assert!(fam.degeneracy().is_constant());
    }

    #[test]
    fn injectivity_examples() {
        assert!(curve_injectivity_probe(&ECurve::from_exprs("w", "1").unwrap(), 5));
        let even = ECurve::from_exprs("w^2", "1").unwrap();
        assert!(!curve_injectivity_probe(&even, 5));
        assert_eq!(even.t_at(&G::from(1)), even.t_at(&G::from(-1)));
        assert!(curve_injectivity_probe(&ECurve::from_exprs("w", "w").unwrap(), 5));
    }
}
