// Deciding exactly whether a line is a twistor line, and rescaling a
// twistor line's Plücker vector to a `j`-fixed one.
//
// cargo run --example twistor_predicate

use twistor_surfaces::{fiber_through, is_twistor_line, pluecker_embed, GaussianRational, PlueckerPoint, ProjPoint};

/// Returns the verdicts for a fiber and for a non-fiber.
pub fn run_example() -> twistor_surfaces::Result<(bool, bool)> {
    let z = ProjPoint::from_ints(&[2, -1, 3, 5])?;
    let fiber = pluecker_embed(&fiber_through(&z)).scale(&GaussianRational::from_ints(1, 2));
    let cert = is_twistor_line(&fiber);
    println!("fiber through z: twistor {}, lambda {:?}", cert.is_twistor, cert.lambda.as_ref().map(|l| l.to_string()));
    if let Some(nf) = &cert.normal_form {
        println!("j-fixed representative: {:?}", nf.coords());
    }

    let other = PlueckerPoint::from_ints([0, 1, 0, 0, 0, 0])?;
    let c2 = is_twistor_line(&other);
    println!("span(e0, e2): twistor {}, witness minor {:?}", c2.is_twistor, c2.violating_minor);
    println!("{}", serde_json::to_string(&c2)?);
    Ok((cert.is_twistor, c2.is_twistor))
}

fn main() -> twistor_surfaces::Result<()> {
    run_example().map(|_| ())
}
