// `f(q) = q²` covers the quadric twice: the eliminant is a square and the
// fiber-count probe reports 2.
//
// cargo run --example fiber_count

use twistor_surfaces::verify::generic_fiber_count;
use twistor_surfaces::{implicitize_slice, SlicePair};

/// Returns `(raw degree, degree, fiber count)`.
pub fn run_example() -> twistor_surfaces::Result<(u32, u32, u32)> {
    let pair = SlicePair::from_exprs("v^2", "0")?;
    let s = implicitize_slice(&pair)?;
    println!("raw eliminant: {}", s.raw());
    println!("after cleanup: {}", s.f());
    for step in s.cleanup() {
        println!("  {}", serde_json::to_string(step)?);
    }
    let n = generic_fiber_count(&pair, &s);
    println!("generic fiber count: {n}");
    Ok((s.raw().degree(), s.degree(), n))
}

fn main() -> twistor_surfaces::Result<()> {
    run_example().map(|_| ())
}
