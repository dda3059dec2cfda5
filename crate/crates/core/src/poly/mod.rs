//! Sparse multivariate polynomials over the Gaussian rationals.
//!
//! A [`MultiPoly`] carries its own ordered variable list. Binary operations
//! between polynomials with different variable lists first merge the lists
//! (left operand's variables first), so callers rarely need to align by hand.

mod gcd;
mod json;
mod resultant;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalars::GaussianRational;

pub use gcd::{content_in, gcd, multiplicity, squarefree, squarefree_part};
pub use resultant::{bareiss_determinant, sylvester_matrix, sylvester_resultant};

pub type Exponent = Vec<u32>;

#[derive(Clone)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Exponent, GaussianRational>,
}

fn to_names(vars: &[&str]) -> Vec<String> {
    vars.iter().map(|s| s.to_string()).collect()
}

impl MultiPoly {
    pub fn zero(vars: &[&str]) -> Self {
        Self::zero_owned(to_names(vars))
    }

    pub(crate) fn zero_owned(vars: Vec<String>) -> Self {
        Self {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[&str], c: GaussianRational) -> Self {
        Self::constant_owned(to_names(vars), c)
    }

    pub(crate) fn constant_owned(vars: Vec<String>, c: GaussianRational) -> Self {
        let mut p = Self::zero_owned(vars);
        if !c.is_zero() {
            let n = p.vars.len();
            p.terms.insert(vec![0; n], c);
        }
        p
    }

    pub fn one(vars: &[&str]) -> Self {
        Self::constant(vars, GaussianRational::one())
    }

    /// The polynomial `name` over `vars`; `name` is appended if absent.
    pub fn var(vars: &[&str], name: &str) -> Self {
        let mut names = to_names(vars);
        if !names.iter().any(|v| v == name) {
            names.push(name.to_string());
        }
        let idx = names.iter().position(|v| v == name).unwrap();
        let mut e = vec![0; names.len()];
        e[idx] = 1;
        Self::monomial_owned(names, e, GaussianRational::one())
    }

    pub(crate) fn monomial_owned(vars: Vec<String>, exp: Exponent, c: GaussianRational) -> Self {
        assert_eq!(vars.len(), exp.len());
        let mut p = Self::zero_owned(vars);
        if !c.is_zero() {
            p.terms.insert(exp, c);
        }
        p
    }

    pub fn monomial(vars: &[&str], exp: &[u32], c: GaussianRational) -> Self {
        Self::monomial_owned(to_names(vars), exp.to_vec(), c)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing
    /// duplicates and dropping zeros.
    pub fn from_terms<I>(vars: &[&str], terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponent, GaussianRational)>,
    {
        Self::from_terms_owned(to_names(vars), terms)
    }

    pub(crate) fn from_terms_owned<I>(vars: Vec<String>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponent, GaussianRational)>,
    {
        let mut p = Self::zero_owned(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), p.vars.len(), "exponent length mismatch");
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Exponent, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    /// The constant value, if the polynomial is constant.
    pub fn constant_value(&self) -> Option<GaussianRational> {
        if !self.is_constant() {
            return None;
        }
        Some(self.terms.values().next().cloned().unwrap_or_else(GaussianRational::zero))
    }

    pub fn coefficient(&self, exp: &[u32]) -> GaussianRational {
        self.terms.get(exp).cloned().unwrap_or_else(GaussianRational::zero)
    }

    /// Total degree; zero for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: &str) -> u32 {
        match self.var_index(var) {
            Some(i) => self.degree_at(i),
            None => 0,
        }
    }

    pub(crate) fn degree_at(&self, i: usize) -> u32 {
        self.terms.keys().map(|e| e[i]).max().unwrap_or(0)
    }

    /// Variables that occur with positive exponent.
    pub fn active_vars(&self) -> Vec<&str> {
        (0..self.vars.len())
            .filter(|&i| self.degree_at(i) > 0)
            .map(|i| self.vars[i].as_str())
            .collect()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    /// Homogeneity in a subset of the variables.
    pub fn is_homogeneous_in(&self, vars: &[&str]) -> bool {
        let idx: Vec<usize> = vars.iter().filter_map(|v| self.var_index(v)).collect();
        let mut degs = self.terms.keys().map(|e| idx.iter().map(|&i| e[i]).sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    /// Re-expresses the polynomial over `vars`, which must contain every
    /// variable that occurs in `self`.
    pub fn with_vars(&self, vars: &[String]) -> Result<Self> {
        if vars == self.vars.as_slice() {
            return Ok(self.clone());
        }
        let mut map = Vec::with_capacity(self.vars.len());
        for (i, v) in self.vars.iter().enumerate() {
            match vars.iter().position(|w| w == v) {
                Some(j) => map.push(Some(j)),
                None if self.degree_at(i) == 0 => map.push(None),
                None => return Err(Error::MissingVariable(v.clone())),
            }
        }
        let terms = self.terms.iter().map(|(e, c)| {
            let mut ne = vec![0; vars.len()];
            for (i, &x) in e.iter().enumerate() {
                if let Some(j) = map[i] {
                    ne[j] = x;
                }
            }
            (ne, c.clone())
        });
        Ok(Self::from_terms_owned(vars.to_vec(), terms))
    }

    /// Both operands over the merged variable list.
    pub fn align(&self, other: &Self) -> (Self, Self) {
        if self.vars == other.vars {
            return (self.clone(), other.clone());
        }
        let mut vars = self.vars.clone();
        for v in &other.vars {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        (
            self.with_vars(&vars).expect("superset"),
            other.with_vars(&vars).expect("superset"),
        )
    }

    /// Drops `var` from the variable list; it must not occur.
    pub fn remove_var(&self, var: &str) -> Result<Self> {
        let vars: Vec<String> = self.vars.iter().filter(|v| *v != var).cloned().collect();
        self.with_vars(&vars)
    }

    pub fn rename_var(&self, from: &str, to: &str) -> Self {
        let mut p = self.clone();
        if let Some(i) = p.var_index(from) {
            p.vars[i] = to.to_string();
        }
        p
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero_owned(self.vars.clone());
        }
        Self {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    pub fn map_coeffs(&self, f: impl Fn(&GaussianRational) -> GaussianRational) -> Self {
        Self::from_terms_owned(
            self.vars.clone(),
            self.terms.iter().map(|(e, c)| (e.clone(), f(c))),
        )
    }

    /// Coefficientwise complex conjugation.
    pub fn conj_coeffs(&self) -> Self {
        self.map_coeffs(|c| c.conj())
    }

    pub fn has_real_coeffs(&self) -> bool {
        self.terms.values().all(|c| c.is_real())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = Self::constant_owned(self.vars.clone(), GaussianRational::one());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self, var: &str) -> Self {
        let Some(i) = self.var_index(var) else {
            return Self::zero_owned(self.vars.clone());
        };
        let terms = self.terms.iter().filter(|(e, _)| e[i] > 0).map(|(e, c)| {
            let mut ne = e.clone();
            ne[i] -= 1;
            (ne, c * &GaussianRational::int(e[i] as i64))
        });
        Self::from_terms_owned(self.vars.clone(), terms)
    }

    /// Exact value at a point. Every variable that occurs must be assigned.
    pub fn eval(&self, point: &[(&str, GaussianRational)]) -> Result<GaussianRational> {
        let mut vals = Vec::with_capacity(self.vars.len());
        for (i, v) in self.vars.iter().enumerate() {
            match point.iter().find(|(n, _)| n == v) {
                Some((_, x)) => vals.push(Some(x.clone())),
                None if self.degree_at(i) == 0 => vals.push(None),
                None => return Err(Error::MissingVariable(v.clone())),
            }
        }
        Ok(self.eval_slice_opt(&vals))
    }

    /// Evaluation with values given in variable-list order.
    pub fn eval_slice(&self, vals: &[GaussianRational]) -> GaussianRational {
        assert_eq!(vals.len(), self.vars.len());
        let opt: Vec<Option<GaussianRational>> = vals.iter().cloned().map(Some).collect();
        self.eval_slice_opt(&opt)
    }

    fn eval_slice_opt(&self, vals: &[Option<GaussianRational>]) -> GaussianRational {
        let mut cache: Vec<Vec<GaussianRational>> = vals
            .iter()
            .enumerate()
            .map(|(i, v)| match v {
                Some(x) => {
                    let d = self.degree_at(i) as usize;
                    let mut pw = Vec::with_capacity(d + 1);
                    pw.push(GaussianRational::one());
                    for k in 0..d {
                        let next = &pw[k] * x;
                        pw.push(next);
                    }
                    pw
                }
                None => vec![GaussianRational::one()],
            })
            .collect();
        let mut acc = GaussianRational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &x) in e.iter().enumerate() {
                if x > 0 {
                    t = &t * &cache[i][x as usize];
                }
            }
            acc = &acc + &t;
        }
        cache.clear();
        acc
    }

    /// Substitutes a value for one variable; the variable stays in the list
    /// with exponent zero everywhere.
    pub fn specialize(&self, var: &str, value: &GaussianRational) -> Self {
        let Some(i) = self.var_index(var) else {
            return self.clone();
        };
        let d = self.degree_at(i) as usize;
        let mut pw = vec![GaussianRational::one()];
        for k in 0..d {
            let next = &pw[k] * value;
            pw.push(next);
        }
        let terms = self.terms.iter().map(|(e, c)| {
            let mut ne = e.clone();
            let k = ne[i] as usize;
            ne[i] = 0;
            (ne, c * &pw[k])
        });
        Self::from_terms_owned(self.vars.clone(), terms)
    }

    /// Specializes several variables and drops them from the variable list.
    pub fn specialize_all(&self, point: &[(&str, GaussianRational)]) -> Self {
        let mut p = self.clone();
        for (v, x) in point {
            p = p.specialize(v, x);
        }
        let keep: Vec<String> = p
            .vars
            .iter()
            .filter(|v| !point.iter().any(|(n, _)| n == v))
            .cloned()
            .collect();
        p.with_vars(&keep).expect("specialized variables no longer occur")
    }

    /// Substitutes polynomials for variables. Variables not listed stay as
    /// they are. The result lives over the merged variable lists.
    pub fn compose(&self, subs: &[(&str, MultiPoly)]) -> Self {
        let mut target: Vec<String> = self
            .vars
            .iter()
            .filter(|v| !subs.iter().any(|(n, _)| n == v))
            .cloned()
            .collect();
        for (_, s) in subs {
            for v in &s.vars {
                if !target.contains(v) {
                    target.push(v.clone());
                }
            }
        }
        let images: Vec<MultiPoly> = self
            .vars
            .iter()
            .map(|v| match subs.iter().find(|(n, _)| n == v) {
                Some((_, s)) => s.with_vars(&target).expect("superset"),
                None => MultiPoly::var(&[], v).with_vars(&target).expect("superset"),
            })
            .collect();
        let mut power_cache: Vec<Vec<MultiPoly>> = images
            .iter()
            .map(|p| vec![MultiPoly::constant_owned(target.clone(), GaussianRational::one()), p.clone()])
            .collect();
        let mut acc = MultiPoly::zero_owned(target.clone());
        for (e, c) in &self.terms {
            let mut t = MultiPoly::constant_owned(target.clone(), c.clone());
            for (i, &x) in e.iter().enumerate() {
                let x = x as usize;
                if x == 0 {
                    continue;
                }
                while power_cache[i].len() <= x {
                    let next = &power_cache[i][power_cache[i].len() - 1] * &images[i];
                    power_cache[i].push(next);
                }
                t = &t * &power_cache[i][x];
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Coefficients as a polynomial in `var`: entry `k` multiplies `var^k`.
    /// The coefficients keep the full variable list (with `var` absent).
    pub fn coefficients_in(&self, var: &str) -> Vec<MultiPoly> {
        let Some(i) = self.var_index(var) else {
            return vec![self.clone()];
        };
        let d = self.degree_at(i) as usize;
        let mut out: Vec<BTreeMap<Exponent, GaussianRational>> = vec![BTreeMap::new(); d + 1];
        for (e, c) in &self.terms {
            let k = e[i] as usize;
            let mut ne = e.clone();
            ne[i] = 0;
            out[k].insert(ne, c.clone());
        }
        out.into_iter()
            .map(|terms| MultiPoly {
                vars: self.vars.clone(),
                terms,
            })
            .collect()
    }

    /// Inverse of [`MultiPoly::coefficients_in`]. All coefficients share the
    /// same variable list, which must contain `var`.
    pub fn from_coefficients_in(var: &str, coeffs: &[MultiPoly]) -> Self {
        let vars = coeffs[0].vars.clone();
        let i = vars.iter().position(|v| v == var).expect("var in list");
        let mut terms = BTreeMap::new();
        for (k, c) in coeffs.iter().enumerate() {
            debug_assert_eq!(c.vars, vars);
            for (e, x) in &c.terms {
                let mut ne = e.clone();
                ne[i] += k as u32;
                terms.insert(ne, x.clone());
            }
        }
        MultiPoly { vars, terms }
    }

    pub(crate) fn grlex_cmp(a: &Exponent, b: &Exponent) -> std::cmp::Ordering {
        let da: u32 = a.iter().sum();
        let db: u32 = b.iter().sum();
        da.cmp(&db).then_with(|| a.cmp(b))
    }

    /// Terms sorted by descending graded-lexicographic order.
    pub fn terms_grlex_desc(&self) -> Vec<(&Exponent, &GaussianRational)> {
        let mut t: Vec<_> = self.terms.iter().collect();
        t.sort_by(|x, y| Self::grlex_cmp(y.0, x.0));
        t
    }

    /// Leading coefficient in graded-lexicographic order.
    pub fn leading_coeff(&self) -> Option<GaussianRational> {
        self.terms
            .iter()
            .max_by(|x, y| Self::grlex_cmp(x.0, y.0))
            .map(|(_, c)| c.clone())
    }

    /// Scales so that the graded-lex leading coefficient is 1.
    pub fn normalize(&self) -> Self {
        match self.leading_coeff() {
            Some(lc) => self.scale(&lc.inv().expect("nonzero")),
            None => self.clone(),
        }
    }

    /// Whether `self = λ·other` for some nonzero scalar `λ`; returns `λ`.
    pub fn proportional_to(&self, other: &Self) -> Option<GaussianRational> {
        let (a, b) = self.align(other);
        if a.is_zero() || b.is_zero() {
            return None;
        }
        if a.terms.len() != b.terms.len() {
            return None;
        }
        let (e0, c0) = b.terms.iter().next().unwrap();
        let lambda = &a.coefficient(e0) / c0;
        if lambda.is_zero() {
            return None;
        }
        for (e, c) in &b.terms {
            if a.coefficient(e) != c * &lambda {
                return None;
            }
        }
        Some(lambda)
    }
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        if self.vars == other.vars {
            return self.terms == other.terms;
        }
        let (a, b) = self.align(other);
        a.terms == b.terms
    }
}

impl Eq for MultiPoly {}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, o: &MultiPoly) -> MultiPoly {
        if self.vars != o.vars {
            let (a, b) = self.align(o);
            return &a + &b;
        }
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), c.clone());
        }
        r
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, o: &MultiPoly) -> MultiPoly {
        if self.vars != o.vars {
            let (a, b) = self.align(o);
            return &a - &b;
        }
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), -c);
        }
        r
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, o: &MultiPoly) -> MultiPoly {
        if self.vars != o.vars {
            let (a, b) = self.align(o);
            return &a * &b;
        }
        let mut r = MultiPoly::zero_owned(self.vars.clone());
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                r.add_term(e, c1 * c2);
            }
        }
        r
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.map_coeffs(|c| -c)
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

macro_rules! owned_poly_binop {
    ($tr:ident, $f:ident) => {
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, o: MultiPoly) -> MultiPoly {
                (&self).$f(&o)
            }
        }
        impl<'a> $tr<&'a MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, o: &MultiPoly) -> MultiPoly {
                (&self).$f(o)
            }
        }
    };
}
owned_poly_binop!(Add, add);
owned_poly_binop!(Sub, sub);
owned_poly_binop!(Mul, mul);

/// Multiplies each monomial by `new_var^(degree - deg_var)`, producing a
/// polynomial homogeneous of `degree` in `{var, new_var}`.
pub fn homogenize(p: &MultiPoly, var: &str, new_var: &str, degree: u32) -> Result<MultiPoly> {
    let actual = p.degree_in(var);
    if degree < actual {
        return Err(Error::DegreeTooSmall {
            requested: degree,
            actual,
        });
    }
    let mut vars = p.vars.clone();
    if !vars.iter().any(|v| v == var) {
        vars.push(var.to_string());
    }
    if !vars.iter().any(|v| v == new_var) {
        vars.push(new_var.to_string());
    }
    let q = p.with_vars(&vars)?;
    let i = q.var_index(var).unwrap();
    let j = q.var_index(new_var).unwrap();
    let terms = q.terms.iter().map(|(e, c)| {
        let mut ne = e.clone();
        ne[j] += degree - e[i];
        (ne, c.clone())
    });
    Ok(MultiPoly::from_terms_owned(vars, terms))
}

fn fmt_monomial(vars: &[String], e: &[u32]) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &x)| x > 0)
        .map(|(i, &x)| {
            if x == 1 {
                vars[i].clone()
            } else {
                format!("{}^{}", vars[i], x)
            }
        })
        .collect();
    parts.join("*")
}

impl fmt::Display for MultiPoly {
    /// Renders in the expression grammar accepted by [`crate::parse`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms_grlex_desc().into_iter().enumerate() {
            let mono = fmt_monomial(&self.vars, e);
            let (neg, body) = if c.im.is_zero() {
                let neg = c.re.is_negative();
                let a = c.re.abs();
                let body = if mono.is_empty() {
                    a.to_string()
                } else if a.is_one() {
                    mono.clone()
                } else {
                    format!("{a}*{mono}")
                };
                (neg, body)
            } else if c.re.is_zero() {
                let neg = c.im.is_negative();
                let a = c.im.abs();
                let coef = if a.is_one() { "i".to_string() } else { format!("{a}*i") };
                let body = if mono.is_empty() { coef } else { format!("{coef}*{mono}") };
                (neg, body)
            } else {
                let body = if mono.is_empty() {
                    format!("({c})")
                } else {
                    format!("({c})*{mono}")
                };
                (false, body)
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

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [vars: {}]", self, self.vars.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{rat, GaussianRational as G};

    fn v() -> MultiPoly {
        MultiPoly::var(&["v"], "v")
    }

    #[test]
    fn eval_examples() {
        let p = &(&v() * &v()) + &MultiPoly::one(&["v"]);
        assert!(p.eval(&[("v", G::i())]).unwrap().is_zero());

        let z = ["z0", "z1", "z2", "z3"];
        let zv = |n: &str| MultiPoly::var(&z, n);
        let q = &(&zv("z1") * &zv("z2")) - &(&zv("z0") * &zv("z3"));
        let pt = [("z0", G::int(1)), ("z1", G::int(0)), ("z2", G::int(2)), ("z3", G::int(0))];
        assert!(q.eval(&pt).unwrap().is_zero());

        let w = MultiPoly::var(&["w"], "w");
        let half3 = G::real(rat(3, 2));
        assert_eq!(w.eval(&[("w", half3.clone())]).unwrap(), half3);
    }

    #[test]
    fn eval_missing_variable() {
        let p = &v() + &MultiPoly::var(&["v"], "w");
        assert!(matches!(
            p.eval(&[("v", G::int(1))]),
            Err(Error::MissingVariable(name)) if name == "w"
        ));
    }

    #[test]
    fn homogenize_examples() {
        let one = MultiPoly::one(&["v"]);
        let p = homogenize(&(&v() + &one), "v", "v0", 1).unwrap().rename_var("v", "v1");
        let v0 = MultiPoly::var(&["v0", "v1"], "v0");
        let v1 = MultiPoly::var(&["v0", "v1"], "v1");
        assert_eq!(p, &v1 + &v0);

        let p = homogenize(&(&(&v() * &v()) + &one), "v", "v0", 2).unwrap().rename_var("v", "v1");
        assert_eq!(p, &(&v1 * &v1) + &(&v0 * &v0));

        let p = homogenize(&v(), "v", "v0", 3).unwrap().rename_var("v", "v1");
        assert_eq!(p, &v1 * &(&v0 * &v0));
        assert!(p.is_homogeneous());

        assert!(matches!(
            homogenize(&v().pow(3), "v", "v0", 2),
            Err(Error::DegreeTooSmall { requested: 2, actual: 3 })
        ));
    }

    #[test]
    fn degree_is_additive() {
        let a = &v().pow(3) + &MultiPoly::var(&["v"], "w");
        let b = &v() - &MultiPoly::var(&["w"], "w").pow(2);
        assert_eq!((&a * &b).degree(), a.degree() + b.degree());
    }

    #[test]
    fn display_forms() {
        let p = MultiPoly::from_terms(
            &["v"],
            vec![
                (vec![2], G::int(1)),
                (vec![1], G::new(rat(0, 1), rat(1, 2))),
                (vec![0], G::int(-3)),
            ],
        );
        assert_eq!(p.to_string(), "v^2 + 1/2*i*v - 3");
        let q = MultiPoly::from_terms(&["v"], vec![(vec![1], G::from_ints(2, -1))]);
        assert_eq!(q.to_string(), "(2 - i)*v");
    }

    #[test]
    fn compose_linear_substitution() {
        let z = ["z0", "z1"];
        let f = &MultiPoly::var(&z, "z0") * &MultiPoly::var(&z, "z1");
        let s = MultiPoly::var(&["s", "u"], "s");
        let u = MultiPoly::var(&["s", "u"], "u");
        let g = f.compose(&[("z0", &s + &u), ("z1", &s - &u)]);
        assert_eq!(g, &(&s * &s) - &(&u * &u));
    }
}
