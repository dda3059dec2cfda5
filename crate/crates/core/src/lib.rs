//! Exact construction and certification of ruled surfaces in complex
//! projective 3-space that contain infinitely many twistor lines.
//!
//! Two constructions are provided:
//!
//! * [`slice_lift`]: the twistor lift `([s,u],[1,v]) -> [s, u, s g - u ĥ, s h + u ĝ]`
//!   of a slice-regular polynomial pair `(g, h)`;
//! * [`grassmann`]: a rational curve on the real quadric
//!   `t1 t6 = t4^2 + t5^2` inside the `σ`-fixed linear space of `Gr(2,4)`,
//!   swept into a ruled surface.
//!
//! Both are turned into an implicit equation by exact elimination
//! ([`implicitize`]) and certified by [`verify`]: even degree, `j`-invariance
//! and twistor-line membership of the real ruling lines.
//!
//! All symbolic work happens over the Gaussian rationals `Q(i)`.

pub mod cli;
pub mod error;
pub mod grassmann;
pub mod implicitize;
pub mod parse;
pub mod poly;
pub mod projective;
pub mod sampling;
pub mod scalars;
pub mod slice_lift;
pub mod twistor;
pub mod verify;

pub use error::{Error, Result};
pub use grassmann::{curve_injectivity_probe, e_curve, line_family, ECurve, LineFamily};
pub use implicitize::{
    implicitize_ruled, implicitize_slice, membership_check, CleanupStep, ImplicitSurface,
    ParamSource, Provenance,
};
pub use parse::{parse_poly, parse_poly_expr};
pub use poly::{homogenize, squarefree_part, sylvester_resultant, MultiPoly};
pub use projective::{
    j_cp3, j_gr, pluecker_embed, pluecker_extract, sigma6, Line3, PlueckerPoint, ProjPoint,
};
pub use scalars::{hp1_normalize, quat_mul, GaussianRational, HPoint, Quaternion, Rational};
pub use slice_lift::{hat_conj, lift_param, real_fiber, SlicePair, SurfaceParam};
pub use twistor::{fiber_over, fiber_through, is_twistor_line, pi_project, TwistorCertificate};
pub use verify::{
    generic_fiber_count, j_invariance, line_on_surface, surface_report, Certificate,
    Construction, FiberCount, JInvariance,
};
