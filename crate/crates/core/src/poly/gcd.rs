//! Exact division, recursive gcd, content and squarefree parts.
//!
//! The gcd works recursively: pick a main variable shared by both inputs,
//! split off the contents (gcd of the coefficients, one variable fewer) and
//! run a primitive pseudo-remainder sequence on the primitive parts. Two
//! shortcuts run first: trial division, and a coprimality test through
//! univariate images.

use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Exponent, MultiPoly};
use crate::scalars::GaussianRational;

impl MultiPoly {
    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &MultiPoly) -> Option<MultiPoly> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let (num, den) = self.align(d);
        if num.is_zero() {
            return Some(num);
        }
        if let Some(c) = den.constant_value() {
            return Some(num.scale(&c.inv().unwrap()));
        }
        let n = num.vars.len();
        let bound: Vec<u32> = (0..n)
            .map(|i| {
                let (a, b) = (num.degree_at(i), den.degree_at(i));
                if a < b {
                    u32::MAX
                } else {
                    a - b
                }
            })
            .collect();
        if bound.contains(&u32::MAX) {
            return None;
        }
        let (lead_e, lead_c) = den.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone()))?;
        let lead_inv = lead_c.inv().unwrap();
        let mut rem = num.clone();
        let mut quot = MultiPoly::zero_owned(num.vars.clone());
        while let Some((e, c)) = rem.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            let mut m: Exponent = Vec::with_capacity(n);
            for i in 0..n {
                if e[i] < lead_e[i] || e[i] - lead_e[i] > bound[i] {
                    return None;
                }
                m.push(e[i] - lead_e[i]);
            }
            let coef = &c * &lead_inv;
            for (de, dc) in &den.terms {
                let ne: Exponent = de.iter().zip(&m).map(|(a, b)| a + b).collect();
                rem.add_term(ne, -(dc * &coef));
            }
            quot.add_term(m, coef);
        }
        Some(quot)
    }

    pub fn divides(&self, other: &MultiPoly) -> bool {
        other.div_exact(self).is_some()
    }
}

/// Pseudo-remainder of `a` by `b` as polynomials in `var`.
fn pseudo_rem(a: &MultiPoly, b: &MultiPoly, var: &str) -> MultiPoly {
    let bc = b.coefficients_in(var);
    let db = bc.len() - 1;
    let lcb = bc[db].clone();
    let lcb_const = lcb.constant_value();
    let mut r = a.coefficients_in(var);
    trim(&mut r);
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let lcr = r[dr].clone();
        let shift = dr - db;
        match &lcb_const {
            Some(c) => {
                let factor = lcr.scale(&c.inv().unwrap());
                for k in 0..db {
                    r[k + shift] = &r[k + shift] - &(&factor * &bc[k]);
                }
            }
            None => {
                for x in r.iter_mut().take(dr) {
                    *x = &*x * &lcb;
                }
                for k in 0..db {
                    r[k + shift] = &r[k + shift] - &(&lcr * &bc[k]);
                }
            }
        }
        r.pop();
        trim(&mut r);
    }
    if r.is_empty() {
        return MultiPoly::zero_owned(a.vars.clone());
    }
    MultiPoly::from_coefficients_in(var, &r)
}

fn trim(r: &mut Vec<MultiPoly>) {
    while r.last().is_some_and(|c| c.is_zero()) {
        r.pop();
    }
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `var`; the
/// result does not involve `var`. Normalized to leading coefficient 1.
pub fn content_in(p: &MultiPoly, var: &str) -> MultiPoly {
    let mut coeffs: Vec<MultiPoly> = p.coefficients_in(var).into_iter().filter(|c| !c.is_zero()).collect();
    if coeffs.is_empty() {
        return p.clone();
    }
    coeffs.sort_by_key(|c| c.num_terms());
    let mut acc = coeffs[0].normalize();
    for c in &coeffs[1..] {
        if acc.is_constant() {
            break;
        }
        acc = gcd_inner(&acc, c).normalize();
    }
    if acc.is_constant() {
        MultiPoly::constant_owned(p.vars.clone(), GaussianRational::one())
    } else {
        acc
    }
}

/// Greatest common divisor, normalized to graded-lex leading coefficient 1.
/// The gcd with the zero polynomial is the other argument, normalized.
pub fn gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    let (a, b) = a.align(b);
    gcd_inner(&a, &b).normalize()
}

fn one_like(p: &MultiPoly) -> MultiPoly {
    MultiPoly::constant_owned(p.vars.clone(), GaussianRational::one())
}

fn gcd_inner(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.is_constant() || b.is_constant() {
        return one_like(a);
    }
    let (small, large) = if a.num_terms() <= b.num_terms() { (a, b) } else { (b, a) };
    if large.div_exact(small).is_some() {
        return small.clone();
    }
    let common: Vec<usize> = (0..a.vars.len())
        .filter(|&i| a.degree_at(i) > 0 && b.degree_at(i) > 0)
        .collect();
    if common.is_empty() {
        return one_like(a);
    }
    if coprime_by_images(a, b, &common) {
        return one_like(a);
    }
    let main = *common
        .iter()
        .min_by_key(|&&i| a.degree_at(i).max(b.degree_at(i)))
        .unwrap();
    let x = a.vars[main].clone();
    let ca = content_in(a, &x);
    let cb = content_in(b, &x);
    let c = gcd_inner(&ca, &cb).normalize();
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let g = primitive_prs(&pa, &pb, &x);
    (&c * &g).normalize()
}

fn primitive_part(p: &MultiPoly, var: &str) -> MultiPoly {
    let c = content_in(p, var);
    p.div_exact(&c).expect("content divides").normalize()
}

/// Primitive PRS for primitive inputs; returns the primitive gcd.
fn primitive_prs(a: &MultiPoly, b: &MultiPoly, var: &str) -> MultiPoly {
    let (mut f, mut g) = if a.degree_in(var) >= b.degree_in(var) {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    loop {
        if g.degree_in(var) == 0 {
            return one_like(a);
        }
        let r = pseudo_rem(&f, &g, var);
        if r.is_zero() {
            return primitive_part(&g, var);
        }
        if r.degree_in(var) == 0 {
            return one_like(a);
        }
        f = g;
        g = primitive_part(&r, var);
    }
}

/// True when the images of `a` and `b` under a random specialization of all
/// but one variable are coprime, for every shared variable. The leading
/// coefficients are kept nonzero, so a coprime image certifies that the true
/// gcd has degree zero in that variable.
fn coprime_by_images(a: &MultiPoly, b: &MultiPoly, common: &[usize]) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0f9c);
    let n = a.vars.len();
    'vars: for &x in common {
        let xname = a.vars[x].clone();
        for _attempt in 0..4 {
            let point: Vec<(String, GaussianRational)> = (0..n)
                .filter(|&i| i != x && (a.degree_at(i) > 0 || b.degree_at(i) > 0))
                .map(|i| (a.vars[i].clone(), GaussianRational::int(rng.gen_range(-97..=97))))
                .collect();
            let pt: Vec<(&str, GaussianRational)> =
                point.iter().map(|(v, c)| (v.as_str(), c.clone())).collect();
            let ia = a.specialize_all(&pt);
            let ib = b.specialize_all(&pt);
            if ia.degree_in(&xname) != a.degree_at(x) || ib.degree_in(&xname) != b.degree_at(x) {
                continue;
            }
            let g = univariate_gcd(&ia, &ib, &xname);
            if g.degree_in(&xname) == 0 {
                continue 'vars;
            }
            return false;
        }
        return false;
    }
    true
}

fn univariate_gcd(a: &MultiPoly, b: &MultiPoly, var: &str) -> MultiPoly {
    let (mut f, mut g) = (a.normalize(), b.normalize());
    while !g.is_zero() {
        let r = pseudo_rem(&f, &g, var);
        f = g;
        g = r.normalize();
    }
    f.normalize()
}

/// `p / gcd(p, ∂p/∂var)`, normalized. Removes repeated factors involving
/// `var`; factors free of `var` are dropped as well, so the result has the
/// same roots in `var` as `p`.
pub fn squarefree_part(p: &MultiPoly, var: &str) -> MultiPoly {
    assert!(!p.is_zero(), "squarefree part of the zero polynomial");
    let d = p.derivative(var);
    let g = gcd(p, &d);
    p.div_exact(&g).expect("gcd divides").normalize()
}

/// Product of the distinct irreducible factors of `p`, normalized.
pub fn squarefree(p: &MultiPoly) -> MultiPoly {
    assert!(!p.is_zero(), "squarefree part of the zero polynomial");
    let active: Vec<String> = p.active_vars().into_iter().map(String::from).collect();
    let Some(x) = active.iter().min_by_key(|v| p.degree_in(v)) else {
        return one_like(p);
    };
    let c = content_in(p, x);
    let pp = p.div_exact(&c).expect("content divides");
    let s = squarefree_part(&pp, x);
    (&s * &squarefree(&c)).normalize()
}

/// Largest `k` with `f^k | p` (`f` nonconstant).
pub fn multiplicity(f: &MultiPoly, p: &MultiPoly) -> u32 {
    assert!(!f.is_constant());
    let mut k = 0;
    let mut cur = p.clone();
    while let Some(q) = cur.div_exact(f) {
        k += 1;
        cur = q;
        if cur.is_constant() {
            break;
        }
    }
    k
}
