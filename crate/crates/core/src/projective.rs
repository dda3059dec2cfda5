//! Points of CP³ and CP⁵, lines of CP³ and their Plücker coordinates, and
//! the involutions `j` (on CP³ and on the Grassmannian) and `σ`.
//!
//! Plücker coordinates follow the wedge labelling
//! `t = (p01, p02, p03, p12, p13, p23)` with `p_ab = A_a B_b - A_b B_a`, so
//! the Grassmannian is `t1 t6 - t2 t5 + t3 t4 = 0`.

use num_traits::Zero;
use serde::{de::Error as _, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalars::GaussianRational as G;

/// Index pairs `(a, b)` of the six Plücker coordinates, in order.
pub const PLUECKER_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// First pair `(i, j)` with `a_i b_j != a_j b_i`, if any.
pub fn first_violating_minor(a: &[G], b: &[G]) -> Option<(usize, usize)> {
    assert_eq!(a.len(), b.len());
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            if &a[i] * &b[j] != &a[j] * &b[i] {
                return Some((i, j));
            }
        }
    }
    None
}

/// Projective equality of two nonzero vectors.
pub fn proportional(a: &[G], b: &[G]) -> bool {
    a.len() == b.len()
        && a.iter().any(|x| !x.is_zero())
        && b.iter().any(|x| !x.is_zero())
        && first_violating_minor(a, b).is_none()
}

/// The scalar `λ` with `a = λ b`, when it exists and is nonzero.
pub fn ratio(a: &[G], b: &[G]) -> Option<G> {
    if !proportional(a, b) {
        return None;
    }
    let k = b.iter().position(|x| !x.is_zero())?;
    Some(&a[k] / &b[k])
}

#[derive(Clone, Debug)]
pub struct ProjPoint {
    coords: Vec<G>,
}

impl ProjPoint {
    pub fn new(coords: Vec<G>) -> Result<Self> {
        if coords.iter().all(|c| c.is_zero()) {
            return Err(Error::InvalidArgument("projective point with all coordinates zero".into()));
        }
        Ok(Self { coords })
    }

    pub fn from_ints(coords: &[i64]) -> Result<Self> {
        Self::new(coords.iter().map(|&c| G::int(c)).collect())
    }

    pub fn coords(&self) -> &[G] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn conj(&self) -> Self {
        Self {
            coords: self.coords.iter().map(G::conj).collect(),
        }
    }

    pub fn scale(&self, c: &G) -> Self {
        assert!(!c.is_zero());
        Self {
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }
}

impl PartialEq for ProjPoint {
    fn eq(&self, other: &Self) -> bool {
        proportional(&self.coords, &other.coords)
    }
}

/// Raw Plücker coordinates of the pair `(a, b)`.
pub fn pluecker_coords(a: &[G], b: &[G]) -> [G; 6] {
    assert!(a.len() == 4 && b.len() == 4, "lines live in CP3");
    PLUECKER_PAIRS.map(|(i, j)| &(&a[i] * &b[j]) - &(&a[j] * &b[i]))
}

/// A line of CP³ given by a spanning pair.
#[derive(Clone, Debug)]
pub struct Line3 {
    a: ProjPoint,
    b: ProjPoint,
}

impl Line3 {
    pub fn new(a: ProjPoint, b: ProjPoint) -> Result<Self> {
        if a.coords.len() != 4 || b.coords.len() != 4 {
            return Err(Error::InvalidArgument("line spanning points must lie in CP3".into()));
        }
        if pluecker_coords(&a.coords, &b.coords).iter().all(|c| c.is_zero()) {
            return Err(Error::DependentPoints);
        }
        Ok(Self { a, b })
    }

    pub fn from_vecs(a: Vec<G>, b: Vec<G>) -> Result<Self> {
        let a = ProjPoint::new(a).map_err(|_| Error::DependentPoints)?;
        let b = ProjPoint::new(b).map_err(|_| Error::DependentPoints)?;
        Self::new(a, b)
    }

    pub fn a(&self) -> &ProjPoint {
        &self.a
    }

    pub fn b(&self) -> &ProjPoint {
        &self.b
    }

    /// The point `s·A + u·B`.
    pub fn point(&self, s: &G, u: &G) -> Vec<G> {
        self.a
            .coords
            .iter()
            .zip(&self.b.coords)
            .map(|(x, y)| &(s * x) + &(u * y))
            .collect()
    }
}

impl PartialEq for Line3 {
    fn eq(&self, other: &Self) -> bool {
        proportional(&pluecker_embed(self).t, &pluecker_embed(other).t)
    }
}

/// A point of `Gr(2,4) ⊂ CP⁵`.
#[derive(Clone, Debug)]
pub struct PlueckerPoint {
    t: [G; 6],
}

/// `t1 t6 - t2 t5 + t3 t4`.
pub fn pluecker_relation(t: &[G; 6]) -> G {
    &(&(&t[0] * &t[5]) - &(&t[1] * &t[4])) + &(&t[2] * &t[3])
}

impl PlueckerPoint {
    pub fn new(t: [G; 6]) -> Result<Self> {
        if t.iter().all(|c| c.is_zero()) {
            return Err(Error::InvalidArgument("Pluecker vector is zero".into()));
        }
        let rel = pluecker_relation(&t);
        if !rel.is_zero() {
            return Err(Error::NotOnGrassmannian(rel.to_string()));
        }
        Ok(Self { t })
    }

    pub fn from_ints(t: [i64; 6]) -> Result<Self> {
        Self::new(t.map(G::int))
    }

    pub fn coords(&self) -> &[G; 6] {
        &self.t
    }

    pub fn scale(&self, c: &G) -> Self {
        assert!(!c.is_zero());
        Self {
            t: self.t.clone().map(|x| &x * c),
        }
    }
}

impl PartialEq for PlueckerPoint {
    fn eq(&self, other: &Self) -> bool {
        proportional(&self.t, &other.t)
    }
}

pub fn pluecker_embed(line: &Line3) -> PlueckerPoint {
    PlueckerPoint {
        t: pluecker_coords(&line.a.coords, &line.b.coords),
    }
}

/// The antisymmetric matrix `M[a][b] = p_ab`.
pub fn pluecker_matrix(t: &[G; 6]) -> [[G; 4]; 4] {
    let mut m: [[G; 4]; 4] = Default::default();
    for (k, &(a, b)) in PLUECKER_PAIRS.iter().enumerate() {
        m[a][b] = t[k].clone();
        m[b][a] = -&t[k];
    }
    m
}

/// A spanning pair of the line with coordinates `t`: two independent
/// columns of the antisymmetric Plücker matrix.
pub fn pluecker_extract(t: &PlueckerPoint) -> Result<Line3> {
    let rel = pluecker_relation(&t.t);
    if !rel.is_zero() {
        return Err(Error::NotOnGrassmannian(rel.to_string()));
    }
    let m = pluecker_matrix(&t.t);
    let cols: Vec<Vec<G>> = (0..4).map(|c| (0..4).map(|r| m[r][c].clone()).collect()).collect();
    for i in 0..4 {
        for j in i + 1..4 {
            if pluecker_coords(&cols[i], &cols[j]).iter().any(|c| !c.is_zero()) {
                return Line3::from_vecs(cols[i].clone(), cols[j].clone());
            }
        }
    }
    Err(Error::RankError)
}

/// Holomorphic part of `j`: `(z0, z1, z2, z3) ↦ (-z1, z0, -z3, z2)`.
pub fn j_linear(z: &[G]) -> Vec<G> {
    assert_eq!(z.len(), 4);
    vec![-&z[1], z[0].clone(), -&z[3], z[2].clone()]
}

/// `j[z0, z1, z2, z3] = [-z̄1, z̄0, -z̄3, z̄2]`.
pub fn j_cp3(z: &ProjPoint) -> ProjPoint {
    assert_eq!(z.coords.len(), 4, "j acts on CP3");
    ProjPoint {
        coords: j_linear(&z.conj().coords),
    }
}

/// `σ[t1:t2:t3:t4:t5:t6] = [t1:t5:-t4:-t3:t2:t6]`.
pub fn sigma6(t: &[G; 6]) -> [G; 6] {
    [
        t[0].clone(),
        t[4].clone(),
        -&t[3],
        -&t[2],
        t[1].clone(),
        t[5].clone(),
    ]
}

pub fn conj6(t: &[G; 6]) -> [G; 6] {
    t.clone().map(|x| x.conj())
}

/// The involution induced by `j` on the Grassmannian: `σ` followed by
/// coordinatewise conjugation.
pub fn j_gr(t: &PlueckerPoint) -> PlueckerPoint {
    PlueckerPoint {
        t: conj6(&sigma6(&t.t)),
    }
}

#[derive(Serialize, Deserialize)]
struct LineRepr {
    #[serde(rename = "A")]
    a: Vec<G>,
    #[serde(rename = "B")]
    b: Vec<G>,
}

impl Serialize for Line3 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        LineRepr {
            a: self.a.coords.clone(),
            b: self.b.coords.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Line3 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = LineRepr::deserialize(d)?;
        Line3::from_vecs(r.a, r.b).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct PlueckerRepr {
    t: Vec<G>,
}

impl Serialize for PlueckerPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PlueckerRepr { t: self.t.to_vec() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for PlueckerPoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = PlueckerRepr::deserialize(d)?;
        let t: [G; 6] = r
            .t
            .try_into()
            .map_err(|_| D::Error::custom("expected six Pluecker coordinates"))?;
        PlueckerPoint::new(t).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line(a: &[i64], b: &[i64]) -> Line3 {
        Line3::new(ProjPoint::from_ints(a).unwrap(), ProjPoint::from_ints(b).unwrap()).unwrap()
    }

    fn ints(t: [i64; 6]) -> [G; 6] {
        t.map(G::int)
    }

    #[test]
    fn embed_examples() {
        assert_eq!(pluecker_embed(&line(&[1, 0, 0, 0], &[0, 1, 0, 0])).coords(), &ints([1, 0, 0, 0, 0, 0]));
        assert_eq!(pluecker_embed(&line(&[0, 1, 1, 0], &[-1, 0, 0, 1])).coords(), &ints([1, 1, 0, 0, 1, 1]));
        let dep = Line3::new(
            ProjPoint::from_ints(&[1, 0, 0, 0]).unwrap(),
            ProjPoint::from_ints(&[2, 0, 0, 0]).unwrap(),
        );
        assert!(matches!(dep, Err(Error::DependentPoints)));
    }

    #[test]
    fn extract_examples() {
        let l = pluecker_extract(&PlueckerPoint::from_ints([1, 0, 0, 0, 0, 0]).unwrap()).unwrap();
        assert_eq!(l, line(&[1, 0, 0, 0], &[0, 1, 0, 0]));
        let l = pluecker_extract(&PlueckerPoint::from_ints([1, 1, 0, 0, 1, 1]).unwrap()).unwrap();
        assert_eq!(l, line(&[0, 1, 1, 0], &[1, 0, 0, -1]));
        assert!(matches!(
            PlueckerPoint::from_ints([1, 0, 0, 0, 0, 1]),
            Err(Error::NotOnGrassmannian(_))
        ));
    }

    #[test]
    fn j_cp3_examples() {
        let e0 = ProjPoint::from_ints(&[1, 0, 0, 0]).unwrap();
        assert_eq!(j_cp3(&e0).coords(), ProjPoint::from_ints(&[0, 1, 0, 0]).unwrap().coords());
        let z = ProjPoint::new(vec![G::int(1), G::i(), G::int(0), G::int(0)]).unwrap();
        assert_eq!(j_cp3(&z).coords(), &[G::i(), G::int(1), G::int(0), G::int(0)]);
        let z = ProjPoint::from_ints(&[1, 2, 3, 4]).unwrap();
        let jj = j_cp3(&j_cp3(&z));
        assert_eq!(jj.coords(), z.scale(&G::int(-1)).coords());
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma6(&ints([1, 0, 0, 0, 0, 0])), ints([1, 0, 0, 0, 0, 0]));
        assert_eq!(sigma6(&ints([0, 1, 0, 0, 0, 0])), ints([0, 0, 0, 0, 1, 0]));
        let t = ints([1, 2, 3, 4, 5, 6]);
        assert_eq!(sigma6(&sigma6(&t)), t);
    }

    #[test]
    fn j_gr_examples() {
        let jt = |t| j_gr(&PlueckerPoint::from_ints(t).unwrap()).coords().clone();
        assert_eq!(jt([1, 0, 0, 0, 0, 0]), ints([1, 0, 0, 0, 0, 0]));
        assert_eq!(jt([0, 1, 0, 0, 0, 0]), ints([0, 0, 0, 0, 1, 0]));
        assert_eq!(jt([1, 1, 0, 0, 1, 1]), ints([1, 1, 0, 0, 1, 1]));
    }

    #[test]
    fn json_shapes() {
        let l = line(&[0, 1, 1, 0], &[-1, 0, 0, 1]);
        let v = serde_json::to_value(&l).unwrap();
        assert_eq!(v["A"][1], serde_json::json!({"re": "1", "im": "0"}));
        let back: Line3 = serde_json::from_value(v).unwrap();
        assert_eq!(back, l);
        let bad = serde_json::json!({"t": [{"re":"1","im":"0"},{"re":"0","im":"0"},{"re":"0","im":"0"},
            {"re":"0","im":"0"},{"re":"0","im":"0"},{"re":"1","im":"0"}]});
        assert!(serde_json::from_value::<PlueckerPoint>(bad).is_err());
    }
}
