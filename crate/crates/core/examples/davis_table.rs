//! Relative cohomology of the Davis chamber and the rational cohomological dimension.

use coxeter_weyl::davis;
use coxeter_weyl::{named, Limits, Result};

fn main() -> Result<()> {
    let limits = Limits::default();
    let sys = named::pentagon_infinity();
    let k = davis::chamber_complex(&sys, &limits)?;
    println!("chamber of the pentagon with an infinite edge: dimension {}, {} simplices", k.dimension(), k.simplex_count());
    let table = davis::cohomology_table(&sys, &limits)?;
    print!("{}", table.to_tsv(&sys));
    println!("cd_Q = {}", davis::rational_cd(&sys, &limits)?);

    for (name, sys) in [("D_inf", named::d_infinity()), ("affine A2", named::affine_a2()), ("compact square", named::compact_hyperbolic_square())] {
        println!(
            "{name}: cd_Q = {}, more than one end by H^1 = {}",
            davis::rational_cd(&sys, &limits)?,
            davis::more_than_one_end_h1(&sys, &limits)?
        );
    }
    Ok(())
}
