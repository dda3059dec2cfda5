//! Exact certificates for constructed surfaces: j-invariance, twistor
//! rulings, degree parity and a generic fiber-count probe.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::grassmann::{line_family, partners, ECurve};
use crate::implicitize::{implicitize_ruled, implicitize_slice, ImplicitSurface, Z_VARS};
use crate::poly::{gcd, squarefree_part, MultiPoly};
use crate::projective::{pluecker_embed, Line3};
use crate::sampling;
use crate::scalars::{rational_str, GaussianRational as G, Rational};
use crate::slice_lift::{lift_param, real_fiber, SlicePair, SLICE_VAR};
use crate::twistor::{is_twistor_line, TwistorCertificate};

pub const FIBER_COUNT_POINTS: usize = 10;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct JInvariance {
    pub holds: bool,
    /// `λ` with `F̄(-z1, z0, -z3, z2) = λ F`.
    pub lambda: Option<G>,
}

/// `F̄(-z1, z0, -z3, z2)`, computed monomial by monomial:
/// `z0^a z1^b z2^c z3^d ↦ (-1)^(a+c) z0^b z1^a z2^d z3^c`.
pub fn j_pullback(f: &MultiPoly) -> MultiPoly {
    let f = f.with_vars(&Z_VARS.map(String::from)).expect("surface in z0..z3");
    MultiPoly::from_terms(
        &Z_VARS,
        f.terms().map(|(e, c)| {
            let c = c.conj();
            let c = if (e[0] + e[2]) % 2 == 1 { -c } else { c };
            (vec![e[1], e[0], e[3], e[2]], c)
        }),
    )
}

pub fn j_invariance(surface: &ImplicitSurface) -> JInvariance {
    let lambda = j_pullback(surface.f()).proportional_to(surface.f());
    JInvariance {
        holds: lambda.is_some(),
        lambda,
    }
}

/// `F(s A + u B)` as a polynomial in `s, u`.
pub fn restrict_to_line(f: &MultiPoly, line: &Line3) -> MultiPoly {
    let vars = ["s", "u"];
    let s = MultiPoly::var(&vars, "s");
    let u = MultiPoly::var(&vars, "u");
    let subs: Vec<(&str, MultiPoly)> = Z_VARS
        .iter()
        .zip(line.a().coords().iter().zip(line.b().coords()))
        .map(|(n, (a, b))| (*n, &s.scale(a) + &u.scale(b)))
        .collect();
    f.compose(&subs)
}

pub fn line_on_surface(surface: &ImplicitSurface, line: &Line3) -> bool {
    restrict_to_line(surface.f(), line).is_zero()
}

fn slice_eliminants(pair: &SlicePair, z: &[G]) -> (MultiPoly, MultiPoly) {
    let v = [SLICE_VAR];
    let c = |x: &G| MultiPoly::constant(&v, x.clone());
    let p1 = &(&(pair.g().scale(&z[0])) - &(pair.h_hat().scale(&z[1]))) - &c(&z[2]);
    let p2 = &(&(pair.h().scale(&z[0])) + &(pair.g_hat().scale(&z[1]))) - &c(&z[3]);
    (p1, p2)
}

/// Number of distinct `v` mapping onto the image point `z`, with `[s,u]`
/// read off from `z0, z1`.
fn preimage_count(pair: &SlicePair, z: &[G]) -> u32 {
    let (p1, p2) = slice_eliminants(pair, z);
    let g = gcd(&p1, &p2);
    if g.is_zero() {
        return u32::MAX;
    }
    squarefree_part(&g, SLICE_VAR).degree_in(SLICE_VAR)
}

fn modal(counts: impl IntoIterator<Item = u32>) -> u32 {
    let mut tally: BTreeMap<u32, usize> = BTreeMap::new();
    for c in counts {
        *tally.entry(c).or_default() += 1;
    }
    // ties resolve to the smaller count
    let best = tally.values().copied().max().unwrap_or(0);
    tally.into_iter().find(|&(_, n)| n == best).map(|(c, _)| c).unwrap_or(0)
}

/// Modal number of parameter values `v` over a random image point, over
/// [`FIBER_COUNT_POINTS`] points.
pub fn generic_fiber_count(pair: &SlicePair, surface: &ImplicitSurface) -> u32 {
    generic_fiber_count_seeded(pair, surface, 0)
}

pub fn generic_fiber_count_seeded(pair: &SlicePair, surface: &ImplicitSurface, seed: u64) -> u32 {
    let param = lift_param(pair);
    let mut rng = sampling::rng(seed);
    let counts: Vec<u32> = (0..FIBER_COUNT_POINTS)
        .map(|_| {
            let s = sampling::nonzero_complex(&mut rng, 20);
            let u = sampling::nonzero_complex(&mut rng, 20);
            let v = sampling::complex(&mut rng, 20);
            let z = param.evaluate(&s, &u, &G::from(1), &v);
            debug_assert!(num_traits::Zero::is_zero(&surface.eval(&z)));
            preimage_count(pair, &z)
        })
        .collect();
    modal(counts)
}

/// Modal number of real `w` sharing a ruling line with a random real `w1`.
pub fn ruling_fiber_count_seeded(curve: &ECurve, seed: u64) -> u32 {
    let mut rng = sampling::rng(seed);
    modal((0..FIBER_COUNT_POINTS).map(|_| partners(curve, &sampling::real(&mut rng, 50))))
}

/// Input of either construction; JSON `{"g", "h"}` or `{"f4", "f5"}`.
#[derive(Clone, Debug)]
#[allow(clippy::large_enum_variant)]
pub enum Construction {
    Slice(SlicePair),
    Grassmann(ECurve),
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ConstructionRepr {
    Slice { g: String, h: String },
    Grassmann { f4: String, f5: String },
}

impl Construction {
    pub fn slice(g: &str, h: &str) -> Result<Self> {
        Ok(Construction::Slice(SlicePair::from_exprs(g, h)?))
    }

    pub fn grassmann(f4: &str, f5: &str) -> Result<Self> {
        Ok(Construction::Grassmann(ECurve::from_exprs(f4, f5)?))
    }

    pub fn from_json(src: &str) -> Result<Self> {
        match serde_json::from_str::<ConstructionRepr>(src)? {
            ConstructionRepr::Slice { g, h } => Self::slice(&g, &h),
            ConstructionRepr::Grassmann { f4, f5 } => Self::grassmann(&f4, &f5),
        }
    }

    pub fn implicitize(&self) -> Result<ImplicitSurface> {
        match self {
            Construction::Slice(p) => implicitize_slice(p),
            Construction::Grassmann(c) => implicitize_ruled(&line_family(c)?),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FiberCount {
    Probed(u32),
    NotProbed,
}

impl Serialize for FiberCount {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            FiberCount::Probed(n) => s.serialize_u32(*n),
            FiberCount::NotProbed => s.serialize_str("not probed"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TwistorFiber {
    #[serde(with = "rational_str")]
    pub parameter: Rational,
    pub line: Line3,
    pub certificate: TwistorCertificate,
    pub on_surface: bool,
}

impl TwistorFiber {
    pub fn passes(&self) -> bool {
        self.on_surface && self.certificate.is_twistor
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    pub seed: u64,
    pub degree: u32,
    pub parity_ok: bool,
    pub j_invariance: JInvariance,
    pub twistor_fibers: Vec<TwistorFiber>,
    pub fiber_count: FiberCount,
}

impl Certificate {
    pub fn fibers_ok(&self) -> bool {
        self.twistor_fibers.iter().all(TwistorFiber::passes)
    }

    /// 0 when everything passes, else 2 (parity), 3 (j-invariance) or
    /// 4 (twistor fibers), first failure wins.
    pub fn exit_code(&self) -> i32 {
        if !self.parity_ok {
            2
        } else if !self.j_invariance.holds {
            3
        } else if !self.fibers_ok() {
            4
        } else {
            0
        }
    }
}

fn fiber_entry(surface: &ImplicitSurface, parameter: Rational, line: Line3) -> TwistorFiber {
    TwistorFiber {
        certificate: is_twistor_line(&pluecker_embed(&line)),
        on_surface: line_on_surface(surface, &line),
        parameter,
        line,
    }
}

/// Certificate for `surface`, built from `construction`, with `samples`
/// random real ruling parameters.
pub fn surface_report(
    construction: &Construction,
    surface: &ImplicitSurface,
    samples: usize,
    seed: u64,
) -> Result<Certificate> {
    let mut rng = sampling::rng(seed);
    let mut fibers = Vec::with_capacity(samples);
    let fiber_count = match construction {
        Construction::Slice(pair) => {
            let param = lift_param(pair);
            for _ in 0..samples {
                let v = sampling::rational(&mut rng, 20);
                fibers.push(fiber_entry(surface, v.clone(), real_fiber(&param, &v)));
            }
            FiberCount::Probed(generic_fiber_count_seeded(pair, surface, seed))
        }
        Construction::Grassmann(curve) => {
            let fam = line_family(curve)?;
            while fibers.len() < samples {
                let w = sampling::rational(&mut rng, 20);
                // degenerate w are finitely many; resample
                if let Ok(line) = fam.at(&G::real(w.clone())) {
                    fibers.push(fiber_entry(surface, w, line));
                }
            }
            FiberCount::Probed(ruling_fiber_count_seeded(curve, seed))
        }
    };
    let degree = surface.degree();
    Ok(Certificate {
        seed,
        degree,
        parity_ok: degree.is_multiple_of(2),
        j_invariance: j_invariance(surface),
        twistor_fibers: fibers,
        fiber_count,
    })
}

/// Implicitizes and reports in one step.
pub fn report_for(construction: &Construction, samples: usize, seed: u64) -> Result<(ImplicitSurface, Certificate)> {
    if samples == 0 {
        return Err(Error::InvalidArgument("at least one fiber sample is required".into()));
    }
    let surface = construction.implicitize()?;
    let cert = surface_report(construction, &surface, samples, seed)?;
    Ok((surface, cert))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::implicitize::{CleanupStep, Provenance};
    use crate::parse::parse_poly;
    use crate::projective::ProjPoint;
    use num_traits::One;

    fn surf(src: &str) -> ImplicitSurface {
        ImplicitSurface::from_polynomial(
            parse_poly(src, &Z_VARS).unwrap(),
            Provenance::Slice { g: "v".into(), h: "0".into() },
        )
        .unwrap()
    }

    fn line(a: &[i64], b: &[i64]) -> Line3 {
        Line3::new(ProjPoint::from_ints(a).unwrap(), ProjPoint::from_ints(b).unwrap()).unwrap()
    }

    #[test]
    fn j_invariance_examples() {
        let j = j_invariance(&surf("z1*z2 - z0*z3"));
        assert_eq!(j, JInvariance { holds: true, lambda: Some(G::one()) });
        let j = j_invariance(&surf("z0*z1"));
        assert_eq!(j.lambda, Some(-G::one()));
        assert!(!j_invariance(&surf("z0^2")).holds);
        assert_eq!(j_pullback(&parse_poly("z0^2", &Z_VARS).unwrap()), parse_poly("z1^2", &Z_VARS).unwrap());
    }

    #[test]
    fn line_on_surface_examples() {
        let f = surf("z1*z2 - z0*z3");
        assert!(line_on_surface(&f, &line(&[1, 0, 2, 0], &[0, 1, 0, 2])));
        let off = line(&[1, 0, 0, 0], &[0, 0, 0, 1]);
        assert!(!line_on_surface(&f, &off));
        let r = restrict_to_line(f.f(), &off);
        assert_eq!(r, parse_poly("-s*u", &["s", "u"]).unwrap());
        assert!(line_on_surface(&f, &line(&[1, 0, 0, 0], &[0, 1, 0, 0])));
    }

    #[test]
    fn fiber_count_examples() {
        for (g, h, want) in [("v", "0", 1), ("v^2", "0", 2), ("v", "v", 1)] {
            let pair = SlicePair::from_exprs(g, h).unwrap();
            let s = implicitize_slice(&pair).unwrap();
            assert_eq!(generic_fiber_count(&pair, &s), want, "g={g} h={h}");
        }
    }

    #[test]
    fn report_examples() {
        let c = Construction::slice("v", "0").unwrap();
        let (_, cert) = report_for(&c, 5, 0).unwrap();
        assert_eq!(cert.degree, 2);
        assert!(cert.parity_ok);
        assert_eq!(cert.j_invariance.lambda, Some(G::one()));
        assert_eq!(cert.twistor_fibers.len(), 5);
        assert!(cert.fibers_ok());
        assert_eq!(cert.fiber_count, FiberCount::Probed(1));
        assert_eq!(cert.exit_code(), 0);

        let c = Construction::grassmann("w", "1").unwrap();
        let (_, cert) = report_for(&c, 5, 0).unwrap();
        assert_eq!(cert.degree, 2);
        assert!(cert.j_invariance.holds);
        assert!(cert.fibers_ok());

        let c = Construction::slice("v^2", "0").unwrap();
        let (s, cert) = report_for(&c, 5, 0).unwrap();
        assert_eq!(cert.degree, 2);
        assert!(cert.parity_ok);
        assert_eq!(cert.fiber_count, FiberCount::Probed(2));
        assert!(s.cleanup().iter().any(|c| matches!(c, CleanupStep::Squarefree { multiplicity: 2, .. })));
    }

    #[test]
    fn construction_json() {
        assert!(matches!(Construction::from_json(r#"{"g": "v", "h": "0"}"#), Ok(Construction::Slice(_))));
        assert!(matches!(
            Construction::from_json(r#"{"f4": "w", "f5": "1"}"#),
            Ok(Construction::Grassmann(_))
        ));
        assert!(Construction::from_json(r#"{"x": 1}"#).is_err());
    }

    #[test]
    fn certificate_json_order() {
        let (_, cert) = report_for(&Construction::slice("v", "0").unwrap(), 1, 3).unwrap();
        let s = serde_json::to_string(&cert).unwrap();
        let pos = |k: &str| s.find(&format!("\"{k}\"")).unwrap();
        assert!(pos("seed") < pos("degree"));
        assert!(pos("degree") < pos("parity_ok"));
        assert!(pos("j_invariance") < pos("twistor_fibers"));
        assert!(pos("twistor_fibers") < pos("fiber_count"));
    }
}
