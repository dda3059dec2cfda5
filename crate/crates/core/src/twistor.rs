//! The twistor projection `π: CP³ → HP¹`, its fibers, and the exact
//! twistor-line test on Plücker coordinates.

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::projective::{
    first_violating_minor, j_cp3, j_gr, ratio, Line3, PlueckerPoint, ProjPoint,
};
use crate::scalars::{hp1_normalize, GaussianRational as G, HPoint, Quaternion};

/// Outcome of the twistor-line test for one Plücker point.
#[derive(Clone, Debug)]
pub struct TwistorCertificate {
    pub pluecker: PlueckerPoint,
    pub is_twistor: bool,
    /// `λ` with `j(t) = λ t`, present iff the line is a twistor line.
    pub lambda: Option<G>,
    /// A 2×2 minor of `[j(t); t]` that does not vanish, when not twistor.
    pub violating_minor: Option<(usize, usize)>,
    /// A rescaled lift with `j(t) = t` exactly.
    pub normal_form: Option<PlueckerPoint>,
}

impl Serialize for TwistorCertificate {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("TwistorCertificate", 4)?;
        st.serialize_field("pluecker", &self.pluecker)?;
        st.serialize_field("is_twistor", &self.is_twistor)?;
        st.serialize_field("lambda", &self.lambda)?;
        st.serialize_field("violating_minor", &self.violating_minor.map(|(i, j)| [i, j]))?;
        st.end()
    }
}

/// `π[z0, z1, z2, z3] = [z0 + z1 j, z2 + z3 j]`, in canonical form.
pub fn pi_project(z: &ProjPoint) -> HPoint {
    let c = z.coords();
    assert_eq!(c.len(), 4, "π is defined on CP3");
    let q0 = Quaternion::from_complex_pair(&c[0], &c[1]);
    let q1 = Quaternion::from_complex_pair(&c[2], &c[3]);
    hp1_normalize(&HPoint::new(q0, q1).expect("z is nonzero"))
}

/// The twistor line through `z`: the span of `z` and `j(z)`.
pub fn fiber_through(z: &ProjPoint) -> Line3 {
    Line3::new(z.clone(), j_cp3(z)).expect("j has no fixed points")
}

/// The twistor line `π⁻¹(q)`, seeded from the canonical representative
/// `[q0, q1]` with `q0 = a + b j`, `q1 = c + d j` as the point `(a, b, c, d)`.
pub fn fiber_over(q: &HPoint) -> Line3 {
    let n = hp1_normalize(q);
    let (a, b) = n.q0().to_complex_pair();
    let (c, d) = n.q1().to_complex_pair();
    let seed = ProjPoint::new(vec![a, b, c, d]).expect("canonical point is nonzero");
    fiber_through(&seed)
}

/// Exact test `j(t) ∝ t`.
pub fn is_twistor_line(t: &PlueckerPoint) -> TwistorCertificate {
    let jt = j_gr(t);
    match ratio(jt.coords(), t.coords()) {
        Some(lambda) => {
            let normal_form = j_fixed_lift(t, &lambda);
            TwistorCertificate {
                pluecker: t.clone(),
                is_twistor: true,
                lambda: Some(lambda),
                violating_minor: None,
                normal_form,
            }
        }
        None => TwistorCertificate {
            pluecker: t.clone(),
            is_twistor: false,
            lambda: None,
            violating_minor: first_violating_minor(jt.coords(), t.coords()),
            normal_form: None,
        },
    }
}

/// Validates raw coordinates against the Plücker relation, then tests.
pub fn is_twistor_coords(t: [G; 6]) -> Result<TwistorCertificate> {
    Ok(is_twistor_line(&PlueckerPoint::new(t)?))
}

/// Given `j(t) = λ t` with `|λ| = 1`, rescales by `μ` with `μ / μ̄ = λ`:
/// `μ = 1 + λ`, or `μ = i` when `λ = -1`. Both stay in `Q(i)`.
fn j_fixed_lift(t: &PlueckerPoint, lambda: &G) -> Option<PlueckerPoint> {
    let minus_one = -G::one();
    let mu = if *lambda == minus_one {
        G::i()
    } else {
        &G::one() + lambda
    };
    if mu.is_zero() {
        return None;
    }
    let lifted = t.scale(&mu);
    (j_gr(&lifted).coords() == lifted.coords()).then_some(lifted)
}
