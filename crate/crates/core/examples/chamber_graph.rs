//! Chamber graphs on balls and the ball-complement estimate of the number of ends.

use coxeter_weyl::cosetgraph;
use coxeter_weyl::{named, Limits, Result};

fn main() -> Result<()> {
    let limits = Limits::default();
    let sys = named::a2();
    let g = cosetgraph::chamber_graph(&sys, 3, &limits)?;
    print!("{}", g.to_dot(&sys));

    for (name, sys) in [("A2", named::a2()), ("D_inf", named::d_infinity()), ("affine A2", named::affine_a2()), ("free product of three A1", named::free3())] {
        let g = cosetgraph::chamber_graph(&sys, 7, &limits)?;
        println!("{name}: {} chambers in the 7-ball, estimate {} ends", g.vertex_count(), cosetgraph::ends_estimate(&g, 2, 7)?);
    }
    Ok(())
}
