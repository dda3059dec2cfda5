// The involution `j` on points and on Plücker coordinates, and the
// projection to the quaternionic line.
//
// cargo run --example involutions

use twistor_surfaces::{hp1_normalize, j_cp3, j_gr, pi_project, pluecker_embed, sigma6, HPoint, Line3, ProjPoint, Quaternion};

/// Returns whether `π(j z) = π(z)` for the sample point.
pub fn run_example() -> twistor_surfaces::Result<bool> {
    let z = ProjPoint::new(vec!["1".parse()?, "i".parse()?, "2 - i".parse()?, "1/3".parse()?])?;
    let jz = j_cp3(&z);
    println!("z   = {:?}", z.coords());
    println!("j z = {:?}", jz.coords());
    println!("j j z = {:?}", j_cp3(&jz).coords());

    let same = pi_project(&z) == pi_project(&jz);
    println!("pi(z) = [{}, {}], pi(jz) equal: {same}", pi_project(&z).q0(), pi_project(&z).q1());

    let h = HPoint::new(Quaternion::unit_j(), Quaternion::one())?;
    let n = hp1_normalize(&h);
    println!("[j, 1] normalizes to [{}, {}]", n.q0(), n.q1());

    let t = pluecker_embed(&Line3::new(z, ProjPoint::from_ints(&[0, 1, 0, 0])?)?);
    println!("t        = {:?}", t.coords());
    println!("sigma(t) = {:?}", sigma6(t.coords()));
    println!("j(t)     = {:?}", j_gr(&t).coords());
    Ok(same)
}

fn main() -> twistor_surfaces::Result<()> {
    run_example().map(|_| ())
}
