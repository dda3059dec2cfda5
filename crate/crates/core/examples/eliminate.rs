// The polynomial toolkit on its own: parsing, resultants, gcd and
// squarefree parts over `Q(i)`.
//
// cargo run --example eliminate

use twistor_surfaces::poly::{gcd, squarefree};
use twistor_surfaces::{parse_poly, sylvester_resultant};

/// Returns the rendered resultant.
pub fn run_example() -> twistor_surfaces::Result<String> {
    let vars = ["x", "y", "t"];
    // the circle x = 1 - t², y = 2t up to a common denominator
    let p = parse_poly("(1 + t^2)*x - (1 - t^2)", &vars)?;
    let q = parse_poly("(1 + t^2)*y - 2*t", &vars)?;
    let r = sylvester_resultant(&p, &q, "t")?;
    println!("Res_t = {r}");

    let a = parse_poly("(x - i*y)^2 * (x + y)", &vars)?;
    let b = parse_poly("(x - i*y) * (x - y)", &vars)?;
    println!("gcd = {}", gcd(&a, &b));
    println!("squarefree part = {}", squarefree(&a));
    Ok(r.to_string())
}

fn main() -> twistor_surfaces::Result<()> {
    run_example().map(|_| ())
}
