//! Exact scalars: Gaussian rationals, rational quaternions and points of the
//! left quaternionic projective line.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Serde adapter writing a rational as `"p/q"` (or `"p"` for integers).
pub mod rational_str {
    use super::Rational;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse(&s).map_err(D::Error::custom)
    }

    pub fn parse(s: &str) -> Result<Rational, String> {
        let s = s.trim();
        let r = s
            .parse::<Rational>()
            .map_err(|e| format!("bad rational literal `{s}`: {e}"))?;
        Ok(r)
    }
}

/// An exact complex number `re + im·i` with rational parts.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        Self::new(rat_int(re), rat_int(im))
    }

    pub fn real(re: Rational) -> Self {
        Self::new(re, Rational::zero())
    }

    pub fn int(n: i64) -> Self {
        Self::real(rat_int(n))
    }

    pub fn i() -> Self {
        Self::from_ints(0, 1)
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    /// `|z|^2`, always a nonnegative rational.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.im.is_zero() {
            return Some(Self::real(self.re.recip()));
        }
        let n = self.norm_sqr();
        Some(Self::new(&self.re / &n, -&self.im / &n))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
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

    /// Floating approximation, only meant for diagnostics and sampling probes.
    pub fn to_complex64(&self) -> Complex64 {
        Complex64::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        Self::new(Rational::zero(), Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        Self::int(1)
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self::int(n)
    }
}

impl From<Rational> for GaussianRational {
    fn from(r: Rational) -> Self {
        Self::real(r)
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, o: &GaussianRational) -> GaussianRational {
        if self.im.is_zero() && o.im.is_zero() {
            return GaussianRational::real(&self.re * &o.re);
        }
        GaussianRational::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
}

impl<'a> Div<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn div(self, o: &GaussianRational) -> GaussianRational {
        if o.im.is_zero() {
            return GaussianRational::new(&self.re / &o.re, &self.im / &o.re);
        }
        self * &o.inv().expect("division by zero Gaussian rational")
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re.clone(), -self.im.clone())
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re, -self.im)
    }
}

macro_rules! owned_binop {
    ($tr:ident, $f:ident) => {
        impl $tr for GaussianRational {
            type Output = GaussianRational;
            fn $f(self, o: GaussianRational) -> GaussianRational {
                (&self).$f(&o)
            }
        }
        impl<'a> $tr<&'a GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $f(self, o: &GaussianRational) -> GaussianRational {
                (&self).$f(o)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

fn fmt_rational_term(r: &Rational) -> String {
    // A rational written so that it binds tighter than `*` on its right.
    r.abs().to_string()
}

impl fmt::Display for GaussianRational {
    /// Renders in the polynomial-expression grammar, e.g. `3/2`, `-i`,
    /// `1/2 + 2/3*i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let re0 = self.re.is_zero();
        let im0 = self.im.is_zero();
        if im0 {
            return write!(f, "{}", self.re);
        }
        let im_abs = self.im.abs();
        let im_part = if im_abs.is_one() {
            "i".to_string()
        } else {
            format!("{}*i", fmt_rational_term(&im_abs))
        };
        if re0 {
            if self.im.is_negative() {
                write!(f, "-{im_part}")
            } else {
                write!(f, "{im_part}")
            }
        } else {
            let sign = if self.im.is_negative() { '-' } else { '+' };
            write!(f, "{} {} {}", self.re, sign, im_part)
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for GaussianRational {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        crate::parse::parse_constant(s)
    }
}

#[derive(Serialize, Deserialize)]
struct GaussianRationalRepr {
    #[serde(with = "rational_str")]
    re: Rational,
    #[serde(with = "rational_str")]
    im: Rational,
}

impl Serialize for GaussianRational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GaussianRationalRepr {
            re: self.re.clone(),
            im: self.im.clone(),
        }
        .serialize(s)
    }
}

/// Input also accepts a constant expression string such as `"1/2 - i"`.
#[derive(Deserialize)]
#[serde(untagged)]
enum GaussianRationalInput {
    Parts(GaussianRationalRepr),
    Expr(String),
}

impl<'de> Deserialize<'de> for GaussianRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match GaussianRationalInput::deserialize(d)? {
            GaussianRationalInput::Parts(r) => Ok(Self::new(r.re, r.im)),
            GaussianRationalInput::Expr(src) => src.parse().map_err(serde::de::Error::custom),
        }
    }
}

/// A rational quaternion `r + x·i + y·j + z·k`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Quaternion {
    pub r: Rational,
    pub i: Rational,
    pub j: Rational,
    pub k: Rational,
}

impl Quaternion {
    pub fn new(r: Rational, i: Rational, j: Rational, k: Rational) -> Self {
        Self { r, i, j, k }
    }

    pub fn from_ints(r: i64, i: i64, j: i64, k: i64) -> Self {
        Self::new(rat_int(r), rat_int(i), rat_int(j), rat_int(k))
    }

    pub fn zero() -> Self {
        Self::from_ints(0, 0, 0, 0)
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0, 0, 0)
    }

    pub fn unit_i() -> Self {
        Self::from_ints(0, 1, 0, 0)
    }

    pub fn unit_j() -> Self {
        Self::from_ints(0, 0, 1, 0)
    }

    pub fn unit_k() -> Self {
        Self::from_ints(0, 0, 0, 1)
    }

    /// The quaternion `a + b·j` for complex `a`, `b` (complex numbers sit in
    /// the `1, i` plane).
    pub fn from_complex_pair(a: &GaussianRational, b: &GaussianRational) -> Self {
        // b·j = (b_re + b_im i) j = b_re j + b_im k
        Self::new(a.re.clone(), a.im.clone(), b.re.clone(), b.im.clone())
    }

    /// Inverse of [`Quaternion::from_complex_pair`].
    pub fn to_complex_pair(&self) -> (GaussianRational, GaussianRational) {
        (
            GaussianRational::new(self.r.clone(), self.i.clone()),
            GaussianRational::new(self.j.clone(), self.k.clone()),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.r.is_zero() && self.i.is_zero() && self.j.is_zero() && self.k.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(
            self.r.clone(),
            -self.i.clone(),
            -self.j.clone(),
            -self.k.clone(),
        )
    }

    pub fn norm_sqr(&self) -> Rational {
        &self.r * &self.r + &self.i * &self.i + &self.j * &self.j + &self.k * &self.k
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        let c = self.conj();
        Some(Self::new(&c.r / &n, &c.i / &n, &c.j / &n, &c.k / &n))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(&self.r * s, &self.i * s, &self.j * s, &self.k * s)
    }
}

/// Hamilton product `a·b`.
pub fn quat_mul(a: &Quaternion, b: &Quaternion) -> Quaternion {
    Quaternion::new(
        &a.r * &b.r - &a.i * &b.i - &a.j * &b.j - &a.k * &b.k,
        &a.r * &b.i + &a.i * &b.r + &a.j * &b.k - &a.k * &b.j,
        &a.r * &b.j - &a.i * &b.k + &a.j * &b.r + &a.k * &b.i,
        &a.r * &b.k + &a.i * &b.j - &a.j * &b.i + &a.k * &b.r,
    )
}

impl Mul for &Quaternion {
    type Output = Quaternion;
    fn mul(self, o: &Quaternion) -> Quaternion {
        quat_mul(self, o)
    }
}

impl Add for &Quaternion {
    type Output = Quaternion;
    fn add(self, o: &Quaternion) -> Quaternion {
        Quaternion::new(&self.r + &o.r, &self.i + &o.i, &self.j + &o.j, &self.k + &o.k)
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // e.g. `1 - 1/3*i + 2/3*j - k`; zero parts are omitted
        let mut first = true;
        for (c, unit) in [(&self.r, ""), (&self.i, "i"), (&self.j, "j"), (&self.k, "k")] {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            let body = match (unit, abs.is_one()) {
                ("", _) => abs.to_string(),
                (u, true) => u.to_string(),
                (u, false) => format!("{}*{u}", fmt_rational_term(&abs)),
            };
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A point `[q0, q1]` of the left quaternionic projective line, where
/// `[q0, q1] = [μ q0, μ q1]` for every nonzero quaternion `μ`.
#[derive(Clone, Debug)]
pub struct HPoint {
    q0: Quaternion,
    q1: Quaternion,
    canonical: bool,
}

impl HPoint {
    pub fn new(q0: Quaternion, q1: Quaternion) -> Result<Self> {
        if q0.is_zero() && q1.is_zero() {
            return Err(Error::ZeroPoint);
        }
        Ok(Self {
            q0,
            q1,
            canonical: false,
        })
    }

    pub fn q0(&self) -> &Quaternion {
        &self.q0
    }

    pub fn q1(&self) -> &Quaternion {
        &self.q1
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical
    }

    /// Left-multiplies both coordinates by `mu`.
    pub fn left_scale(&self, mu: &Quaternion) -> Result<Self> {
        Self::new(quat_mul(mu, &self.q0), quat_mul(mu, &self.q1))
    }
}

impl PartialEq for HPoint {
    fn eq(&self, other: &Self) -> bool {
        let a = hp1_normalize(self);
        let b = hp1_normalize(other);
        a.q0 == b.q0 && a.q1 == b.q1
    }
}

impl Eq for HPoint {}

/// Canonical representative: `[1, q0⁻¹ q1]` when `q0 ≠ 0`, else `[0, 1]`.
pub fn hp1_normalize(p: &HPoint) -> HPoint {
    if p.canonical {
        return p.clone();
    }
    let (q0, q1) = match p.q0.inv() {
        Some(inv) => (Quaternion::one(), quat_mul(&inv, &p.q1)),
        None => (Quaternion::zero(), Quaternion::one()),
    };
    HPoint {
        q0,
        q1,
        canonical: true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(r: i64, i: i64, j: i64, k: i64) -> Quaternion {
        Quaternion::from_ints(r, i, j, k)
    }

    #[test]
    fn basis_products() {
        let (one, i, j, k) = (q(1, 0, 0, 0), q(0, 1, 0, 0), q(0, 0, 1, 0), q(0, 0, 0, 1));
        let minus_one = q(-1, 0, 0, 0);
        assert_eq!(quat_mul(&i, &j), k);
        assert_eq!(quat_mul(&j, &k), i);
        assert_eq!(quat_mul(&k, &i), j);
        for u in [&i, &j, &k] {
            assert_eq!(quat_mul(u, u), minus_one);
        }
        for (a, b) in [(&i, &j), (&j, &k), (&k, &i)] {
            let ab = quat_mul(a, b);
            let ba = quat_mul(b, a);
            assert_eq!(ab, ba.scale(&rat_int(-1)));
        }
        let x = q(2, 0, 3, 0);
        assert_eq!(quat_mul(&one, &x), x);
    }

    #[test]
    fn j_times_complex_pair() {
        // j (a + b j) = -conj(b) + conj(a) j  with a = i, b = 1 + i
        let a = GaussianRational::from_ints(0, 1);
        let b = GaussianRational::from_ints(1, 1);
        let x = Quaternion::from_complex_pair(&a, &b);
        let got = quat_mul(&Quaternion::unit_j(), &x);
        let want = Quaternion::from_complex_pair(
            &GaussianRational::from_ints(-1, 1),
            &GaussianRational::from_ints(0, -1),
        );
        assert_eq!(got, want);
    }

    #[test]
    fn conj_times_self_is_norm() {
        let x = q(1, -2, 3, 5);
        let n = quat_mul(&x.conj(), &x);
        assert_eq!(n, Quaternion::new(rat_int(39), rat_int(0), rat_int(0), rat_int(0)));
    }

    #[test]
    fn normalize_examples() {
        let p = HPoint::new(q(0, 0, 1, 0), q(1, 0, 0, 0)).unwrap();
        let n = hp1_normalize(&p);
        assert_eq!(n.q0(), &q(1, 0, 0, 0));
        assert_eq!(n.q1(), &q(0, 0, -1, 0));

        let p = HPoint::new(q(1, 0, 0, 0), q(0, 0, 0, 0)).unwrap();
        let n = hp1_normalize(&p);
        assert_eq!((n.q0(), n.q1()), (&q(1, 0, 0, 0), &q(0, 0, 0, 0)));

        let p = HPoint::new(q(0, 0, 0, 0), q(2, 0, 0, 1)).unwrap();
        let n = hp1_normalize(&p);
        assert_eq!((n.q0(), n.q1()), (&q(0, 0, 0, 0), &q(1, 0, 0, 0)));
        assert!(n.is_canonical());
        assert_eq!(hp1_normalize(&n).q1(), n.q1());
    }

    #[test]
    fn zero_point_rejected() {
        assert!(matches!(
            HPoint::new(Quaternion::zero(), Quaternion::zero()),
            Err(Error::ZeroPoint)
        ));
    }

    #[test]
    fn gaussian_display() {
        assert_eq!(GaussianRational::new(rat(3, 2), rat(0, 1)).to_string(), "3/2");
        assert_eq!(GaussianRational::from_ints(0, -1).to_string(), "-i");
        assert_eq!(GaussianRational::new(rat(1, 2), rat(-2, 3)).to_string(), "1/2 - 2/3*i");
        let z = GaussianRational::new(rat(-7, 3), rat(5, 4));
        assert_eq!(z.to_string().parse::<GaussianRational>().unwrap(), z);
    }

    #[test]
    fn gaussian_json_shape() {
        let z = GaussianRational::new(rat(1, 2), rat(-3, 1));
        let v = serde_json::to_value(&z).unwrap();
        assert_eq!(v, serde_json::json!({"re": "1/2", "im": "-3"}));
        let back: GaussianRational = serde_json::from_value(v).unwrap();
        assert_eq!(back, z);
    }

    #[test]
    fn string_scalars_in_json() {
        let z: GaussianRational = serde_json::from_str("\"1/2 - i\"").unwrap();
        assert_eq!(z, GaussianRational::new(rat(1, 2), rat_int(-1)));
        assert!(serde_json::from_str::<GaussianRational>("\"v\"").is_err());
    }

    #[test]
    fn quaternion_display() {
        assert_eq!(Quaternion::from_ints(1, 0, -1, 0).to_string(), "1 - j");
        assert_eq!(Quaternion::new(rat_int(0), rat(-1, 3), rat_int(0), rat_int(2)).to_string(), "-1/3*i + 2*k");
        assert_eq!(Quaternion::zero().to_string(), "0");
    }
}
