//! Implicit equations of the constructed surfaces by resultant elimination.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grassmann::{LineFamily, CURVE_VAR};
use crate::poly::{gcd, multiplicity, squarefree, sylvester_resultant, MultiPoly};
use crate::sampling;
use crate::scalars::GaussianRational as G;
use crate::slice_lift::{lift_param, SlicePair, SurfaceParam, SLICE_VAR};

pub const Z_VARS: [&str; 4] = ["z0", "z1", "z2", "z3"];
pub const MEMBERSHIP_SAMPLES: usize = 100;
const MEMBERSHIP_SEED: u64 = 0x3e3b;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "construction", rename_all = "snake_case")]
pub enum Provenance {
    Slice { g: String, h: String },
    Grassmann { f4: String, f5: String },
    /// Read from a file without construction data.
    Given,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "step", rename_all = "snake_case")]
pub enum CleanupStep {
    /// Gcd over the resultants of all pairs of ruling minors.
    PairGcd {
        pairs: Vec<[usize; 2]>,
        resultant_degrees: Vec<u32>,
        degree: u32,
    },
    /// Repeated factors removed; `multiplicity` is the largest `k` with
    /// `F^k` dividing the eliminant.
    Squarefree {
        raw_degree: u32,
        degree: u32,
        multiplicity: u32,
    },
    /// Scaled to graded-lex leading coefficient 1.
    Normalized,
    /// Degree above the parametrization's bound: a factor may be
    /// extraneous and irreducibility is not certified.
    IrreducibilityUncertified { degree: u32, bound: u32 },
}

#[derive(Clone, Debug, Serialize)]
pub struct ImplicitSurface {
    #[serde(rename = "F")]
    f: MultiPoly,
    degree: u32,
    cleanup: Vec<CleanupStep>,
    provenance: Provenance,
    #[serde(skip)]
    raw: MultiPoly,
}

impl ImplicitSurface {
    /// Wraps a homogeneous polynomial in `z0..z3` given from outside.
    pub fn from_polynomial(f: MultiPoly, provenance: Provenance) -> Result<Self> {
        let f = f.with_vars(&Z_VARS.map(String::from))?;
        if f.is_zero() || !f.is_homogeneous() {
            return Err(Error::InvalidArgument(
                "surface equation must be a nonzero homogeneous polynomial in z0..z3".into(),
            ));
        }
        Ok(Self {
            degree: f.degree(),
            raw: f.clone(),
            f,
            cleanup: Vec::new(),
            provenance,
        })
    }

    /// Reads `{"F": <polynomial>, "provenance": {...}}`; other fields are ignored.
    pub fn from_json(src: &str) -> Result<Self> {
        #[derive(Deserialize)]
        struct Repr {
            #[serde(rename = "F")]
            f: MultiPoly,
            provenance: Option<Provenance>,
        }
        let r: Repr = serde_json::from_str(src)?;
        Self::from_polynomial(r.f, r.provenance.unwrap_or(Provenance::Given))
    }

    pub fn f(&self) -> &MultiPoly {
        &self.f
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn cleanup(&self) -> &[CleanupStep] {
        &self.cleanup
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// The eliminant before squarefree cleanup.
    pub fn raw(&self) -> &MultiPoly {
        &self.raw
    }

    pub fn eval(&self, z: &[G]) -> G {
        self.f.eval_slice(z)
    }
}

/// Where membership samples come from.
#[derive(Clone, Copy)]
pub enum ParamSource<'a> {
    Slice(&'a SurfaceParam),
    Ruled(&'a LineFamily),
}

impl ParamSource<'_> {
    /// Image of a random parameter point.
    pub fn sample<R: rand::Rng>(&self, rng: &mut R) -> Vec<G> {
        let s = sampling::complex(rng, 20);
        let u = sampling::complex(rng, 20);
        match self {
            ParamSource::Slice(p) => {
                let v = sampling::complex(rng, 20);
                p.evaluate(&s, &u, &G::from(1), &v)
            }
            ParamSource::Ruled(fam) => {
                let w = sampling::complex(rng, 20);
                let (a, b) = fam.points_at(&w);
                a.iter().zip(&b).map(|(x, y)| &(&s * x) + &(&u * y)).collect()
            }
        }
    }
}

/// True iff `F` vanishes exactly at `samples` random parameter images.
pub fn membership_check(surface: &ImplicitSurface, source: ParamSource<'_>, samples: usize) -> Result<bool> {
    membership_check_seeded(surface, source, samples, MEMBERSHIP_SEED)
}

pub fn membership_check_seeded(
    surface: &ImplicitSurface,
    source: ParamSource<'_>,
    samples: usize,
    seed: u64,
) -> Result<bool> {
    if samples == 0 {
        return Err(Error::InvalidArgument("membership check needs at least one sample".into()));
    }
    let mut rng = sampling::rng(seed);
    Ok((0..samples).all(|_| {
        let z = source.sample(&mut rng);
        num_traits::Zero::is_zero(&surface.eval(&z))
    }))
}

fn z_names() -> [String; 4] {
    Z_VARS.map(String::from)
}

/// Squarefree cleanup and normalization shared by both routes.
fn clean(raw: &MultiPoly, cleanup: &mut Vec<CleanupStep>) -> MultiPoly {
    let f = squarefree(raw);
    let mult = if f.is_constant() { 0 } else { multiplicity(&f, raw) };
    cleanup.push(CleanupStep::Squarefree {
        raw_degree: raw.degree(),
        degree: f.degree(),
        multiplicity: mult,
    });
    cleanup.push(CleanupStep::Normalized);
    f.normalize()
}

/// Eliminates `v` from `z0 g(v) - z1 ĥ(v) - z2` and `z0 h(v) + z1 ĝ(v) - z3`.
pub fn implicitize_slice(pair: &SlicePair) -> Result<ImplicitSurface> {
    let mut vars: Vec<&str> = Z_VARS.to_vec();
    vars.push(SLICE_VAR);
    let names: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
    let z = |n: &str| MultiPoly::var(&vars, n);
    let up = |p: &MultiPoly| p.with_vars(&names).expect("univariate in v");
    let p1 = &(&(&z("z0") * &up(pair.g())) - &(&z("z1") * &up(&pair.h_hat()))) - &z("z2");
    let p2 = &(&(&z("z0") * &up(pair.h())) + &(&z("z1") * &up(&pair.g_hat()))) - &z("z3");
    if p1.degree_in(SLICE_VAR) == 0 || p2.degree_in(SLICE_VAR) == 0 {
        return Err(Error::DegenerateParametrization(
            "both eliminants must involve v".into(),
        ));
    }
    let raw = sylvester_resultant(&p1, &p2, SLICE_VAR)?.with_vars(&z_names())?;
    if raw.is_zero() {
        return Err(Error::DegenerateParametrization("resultant vanishes identically".into()));
    }
    if !raw.is_homogeneous() {
        return Err(Error::DegenerateParametrization("resultant is not homogeneous in z".into()));
    }
    let mut cleanup = Vec::new();
    let f = clean(&raw, &mut cleanup);
    let bound = 2 * pair.m();
    if f.degree() > bound {
        cleanup.push(CleanupStep::IrreducibilityUncertified {
            degree: f.degree(),
            bound,
        });
    }
    let surface = ImplicitSurface {
        degree: f.degree(),
        f,
        raw,
        cleanup,
        provenance: Provenance::Slice {
            g: pair.g().to_string(),
            h: pair.h().to_string(),
        },
    };
    let param = lift_param(pair);
    if !membership_check(&surface, ParamSource::Slice(&param), MEMBERSHIP_SAMPLES)? {
        return Err(Error::DegenerateParametrization(
            "eliminant does not vanish on the parametrization".into(),
        ));
    }
    Ok(surface)
}

fn det3(m: [[&MultiPoly; 3]; 3]) -> MultiPoly {
    let minor = |a: usize, b: usize, c: usize, d: usize| -> MultiPoly {
        &(m[1][a] * m[2][b]) - &(m[1][c] * m[2][d])
    };
    let t0 = m[0][0] * &minor(1, 2, 2, 1);
    let t1 = m[0][1] * &minor(0, 2, 2, 0);
    let t2 = m[0][2] * &minor(0, 1, 1, 0);
    &(&t0 - &t1) + &t2
}

/// The four 3×3 minors of `[z | A(w) | B(w)]`; minor `r` omits row `r`.
pub fn ruling_minors(family: &LineFamily) -> [MultiPoly; 4] {
    let mut vars: Vec<&str> = Z_VARS.to_vec();
    vars.push(CURVE_VAR);
    let names: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
    let zc: Vec<MultiPoly> = Z_VARS.iter().map(|n| MultiPoly::var(&vars, n)).collect();
    let a: Vec<MultiPoly> = family.a().iter().map(|p| p.with_vars(&names).unwrap()).collect();
    let b: Vec<MultiPoly> = family.b().iter().map(|p| p.with_vars(&names).unwrap()).collect();
    std::array::from_fn(|omit| {
        let rows: Vec<usize> = (0..4).filter(|&r| r != omit).collect();
        let m = [0, 1, 2].map(|k| {
            let r = rows[k];
            [&zc[r], &a[r], &b[r]]
        });
        det3(m)
    })
}

/// Gcd over the `w`-resultants of pairs of ruling minors, then squarefree.
pub fn implicitize_ruled(family: &LineFamily) -> Result<ImplicitSurface> {
    let minors = ruling_minors(family);
    let mut pairs: Vec<(usize, usize)> = (0..4)
        .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
        .filter(|&(i, j)| minors[i].degree_in(CURVE_VAR) > 0 && minors[j].degree_in(CURVE_VAR) > 0)
        .collect();
    if pairs.is_empty() {
        return Err(Error::DegenerateParametrization(
            "no two ruling minors involve w".into(),
        ));
    }
    pairs.sort_by_key(|&(i, j)| (minors[i].degree_in(CURVE_VAR) + minors[j].degree_in(CURVE_VAR), i, j));

    let mut acc: Option<MultiPoly> = None;
    let mut used = Vec::new();
    let mut degrees = Vec::new();
    for (i, j) in pairs {
        let r = sylvester_resultant(&minors[i], &minors[j], CURVE_VAR)?.with_vars(&z_names())?;
        if r.is_zero() {
            continue;
        }
        used.push([i, j]);
        degrees.push(r.degree());
        acc = Some(match acc {
            None => r.normalize(),
            Some(a) => gcd(&a, &r),
        });
    }
    let Some(raw) = acc else {
        return Err(Error::AllResultantsZero);
    };
    if raw.is_constant() {
        return Err(Error::DegenerateParametrization(
            "resultants of the ruling minors share no factor".into(),
        ));
    }
    let mut cleanup = vec![CleanupStep::PairGcd {
        pairs: used,
        resultant_degrees: degrees,
        degree: raw.degree(),
    }];
    let f = clean(&raw, &mut cleanup);
    let bound = 2 * family.curve().k();
    if f.degree() > bound {
        cleanup.push(CleanupStep::IrreducibilityUncertified {
            degree: f.degree(),
            bound,
        });
    }
    let surface = ImplicitSurface {
        degree: f.degree(),
        f,
        raw,
        cleanup,
        provenance: Provenance::Grassmann {
            f4: family.curve().f4().to_string(),
            f5: family.curve().f5().to_string(),
        },
    };
    if !membership_check(&surface, ParamSource::Ruled(family), MEMBERSHIP_SAMPLES)? {
        return Err(Error::DegenerateParametrization(
            "eliminant does not vanish on the ruling".into(),
        ));
    }
    Ok(surface)
}
