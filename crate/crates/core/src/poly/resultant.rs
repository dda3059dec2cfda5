//! Sylvester matrices and fraction-free determinants over polynomial rings.

use super::MultiPoly;
use crate::error::{Error, Result};

/// Sylvester matrix of `p` and `q` in `var`, rows of `p` first. Entries keep
/// the full variable list of the aligned inputs.
pub fn sylvester_matrix(p: &MultiPoly, q: &MultiPoly, var: &str) -> Vec<Vec<MultiPoly>> {
    let (p, q) = p.align(q);
    let pc = p.coefficients_in(var);
    let qc = q.coefficients_in(var);
    let m = pc.len() - 1;
    let n = qc.len() - 1;
    let size = m + n;
    let zero = MultiPoly::zero_owned(p.vars().to_vec());
    let mut rows = vec![vec![zero; size]; size];
    for i in 0..n {
        for k in 0..=m {
            rows[i][i + k] = pc[m - k].clone();
        }
    }
    for i in 0..m {
        for k in 0..=n {
            rows[n + i][i + k] = qc[n - k].clone();
        }
    }
    rows
}

/// Determinant by Bareiss fraction-free elimination. Every division is
/// exact in the polynomial ring, so entries never leave it.
pub fn bareiss_determinant(matrix: &[Vec<MultiPoly>]) -> MultiPoly {
    let n = matrix.len();
    assert!(matrix.iter().all(|r| r.len() == n), "square matrix required");
    if n == 0 {
        return MultiPoly::one(&[]);
    }
    let vars = matrix[0][0].vars().to_vec();
    let mut m: Vec<Vec<MultiPoly>> = matrix.to_vec();
    let mut negate = false;
    let mut prev = MultiPoly::constant_owned(vars.clone(), num_traits::One::one());
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return MultiPoly::zero_owned(vars);
            };
            m.swap(k, swap);
            negate = !negate;
        }
        let pivot = m[k][k].clone();
        for i in k + 1..n {
            let (top, bottom) = m.split_at_mut(i);
            let (row_k, row_i) = (&top[k], &mut bottom[0]);
            let lead = row_i[k].clone();
            for (x, y) in row_i[k + 1..].iter_mut().zip(&row_k[k + 1..]) {
                let num = if lead.is_zero() {
                    &*x * &pivot
                } else {
                    &(&*x * &pivot) - &(&lead * y)
                };
                *x = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            row_i[k] = MultiPoly::zero_owned(vars.clone());
        }
        prev = pivot;
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Resultant of `p` and `q` with respect to `var`: the determinant of the
/// Sylvester matrix with `p`'s rows first. `var` is dropped from the
/// variable list of the result.
pub fn sylvester_resultant(p: &MultiPoly, q: &MultiPoly, var: &str) -> Result<MultiPoly> {
    if p.degree_in(var) == 0 || q.degree_in(var) == 0 {
        return Err(Error::ZeroDegree(var.to_string()));
    }
    let det = bareiss_determinant(&sylvester_matrix(p, q, var));
    det.remove_var(var)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    const VARS: [&str; 7] = ["z0", "z1", "z2", "z3", "v", "a", "b"];

    fn p(src: &str) -> MultiPoly {
        parse_poly(src, &VARS).unwrap()
    }

    #[test]
    fn linear_pair() {
        let r = sylvester_resultant(&p("v - a"), &p("v - b"), "v").unwrap();
        assert_eq!(r, p("a - b"));
        assert!(r.var_index("v").is_none());
    }

    #[test]
    fn common_root_gives_zero() {
        let r = sylvester_resultant(&p("v^2 + 1"), &p("v - i"), "v").unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn quadric_from_two_lines() {
        let r = sylvester_resultant(&p("z0*v - z2"), &p("z1*v - z3"), "v").unwrap();
        assert!(r.proportional_to(&p("z1*z2 - z0*z3")).is_some());
    }

    #[test]
    fn constant_input_rejected() {
        assert!(matches!(
            sylvester_resultant(&p("z0 + 1"), &p("v"), "v"),
            Err(Error::ZeroDegree(_))
        ));
    }

    #[test]
    fn bareiss_needs_pivoting() {
        let m = vec![
            vec![p("0"), p("z0"), p("1")],
            vec![p("z1"), p("0"), p("2")],
            vec![p("1"), p("1"), p("z2")],
        ];
        // cofactor expansion by hand: -z0*(z1*z2 - 2) + (z1 - 0)
        assert_eq!(bareiss_determinant(&m), p("-z0*z1*z2 + 2*z0 + z1"));
    }
}
