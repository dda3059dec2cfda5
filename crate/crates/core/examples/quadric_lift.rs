// Twistor lift of `f(q) = q`: the smooth quadric `z1 z2 = z0 z3`, with a
// certificate for its real ruling.
//
// cargo run --example quadric_lift

use twistor_surfaces::verify::{report_for, Construction};
use twistor_surfaces::{lift_param, SlicePair};

/// Returns `(degree, twistor fibers certified)`.
pub fn run_example() -> twistor_surfaces::Result<(u32, usize)> {
    let pair = SlicePair::from_exprs("v", "0")?;
    let param = lift_param(&pair);
    for (k, p) in param.components().iter().enumerate() {
        println!("P{k} = {p}");
    }

    let (surface, cert) = report_for(&Construction::Slice(pair), 8, 0)?;
    println!("F = {}  (degree {})", surface.f(), surface.degree());
    println!("j-invariant with lambda = {:?}", cert.j_invariance.lambda.as_ref().map(|l| l.to_string()));
    for fib in &cert.twistor_fibers {
        println!(
            "v = {:>6}: twistor {}, on F {}",
            fib.parameter.to_string(),
            fib.certificate.is_twistor,
            fib.on_surface
        );
    }
    let good = cert.twistor_fibers.iter().filter(|f| f.passes()).count();
    Ok((surface.degree(), good))
}

fn main() -> twistor_surfaces::Result<()> {
    run_example().map(|_| ())
}
