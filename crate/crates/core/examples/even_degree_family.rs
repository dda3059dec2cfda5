// Random real slice pairs of degree `m` give surfaces of degree `2m`.
//
// cargo run --release --example even_degree_family

use rand::Rng;
use twistor_surfaces::sampling;
use twistor_surfaces::verify::generic_fiber_count;
use twistor_surfaces::{implicitize_slice, GaussianRational, MultiPoly, SlicePair};

fn random_poly(rng: &mut sampling::SampleRng, m: u32) -> MultiPoly {
    MultiPoly::from_terms(
        &["v"],
        (0..=m).map(|e| (vec![e], GaussianRational::int(rng.gen_range(-4..=4)))),
    )
}

/// Returns `(m, degree, fiber count)` per sampled pair.
pub fn run_example() -> twistor_surfaces::Result<Vec<(u32, u32, u32)>> {
    let mut rng = sampling::rng(7);
    let mut rows = Vec::new();
    for m in 1..=2 {
        for _ in 0..3 {
            let pair = SlicePair::new(random_poly(&mut rng, m), random_poly(&mut rng, m))?;
            let s = implicitize_slice(&pair)?;
            let n = generic_fiber_count(&pair, &s);
            println!(
                "m={} g={} h={} -> degree {} fiber count {}",
                pair.m(),
                pair.g(),
                pair.h(),
                s.degree(),
                n
            );
            rows.push((pair.m(), s.degree(), n));
        }
    }
    Ok(rows)
}

fn main() -> twistor_surfaces::Result<()> {
    run_example().map(|_| ())
}
