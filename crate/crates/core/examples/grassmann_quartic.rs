// A conic on the real quadric `E` sweeps a quartic ruled surface whose
// real lines are all twistor lines.
//
// cargo run --example grassmann_quartic

use twistor_surfaces::verify::{report_for, Construction};
use twistor_surfaces::{curve_injectivity_probe, line_family, ECurve, GaussianRational};

/// Returns `(degree, certificate exit code)`.
pub fn run_example() -> twistor_surfaces::Result<(u32, i32)> {
    let curve = ECurve::from_exprs("w^2 - 1", "2*w")?;
    println!("t(w) = ({})", curve.t().iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", "));
    println!("injective on samples: {}", curve_injectivity_probe(&curve, 5));

    let fam = line_family(&curve)?;
    let l = fam.at(&GaussianRational::int(3))?;
    println!("line at w = 3 through {:?} and {:?}", l.a().coords(), l.b().coords());

    let (surface, cert) = report_for(&Construction::Grassmann(curve), 5, 1)?;
    println!("F = {}", surface.f());
    println!("degree {}, parity ok {}, j-invariant {}", cert.degree, cert.parity_ok, cert.j_invariance.holds);
    Ok((surface.degree(), cert.exit_code()))
}

fn main() -> twistor_surfaces::Result<()> {
    run_example().map(|_| ())
}
