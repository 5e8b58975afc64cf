//! Number of ends through spherical infinity-decompositions.

use coxeter_weyl::decompose::{self, xi_graph};
use coxeter_weyl::{named, Limits, Result, SpecialSubset};

fn main() -> Result<()> {
    let limits = Limits::default();
    let systems = [
        ("A2", named::a2()),
        ("D_inf", named::d_infinity()),
        ("D_inf x A1", named::d_infinity_x_a1()),
        ("affine A2", named::affine_a2()),
        ("free product of three A1", named::free3()),
        ("path with infinite chord", named::path_with_infinite_chord()),
    ];
    for (name, sys) in systems {
        let e = decompose::ends(&sys, &limits)?;
        println!("{name}: {} ends via {}", e.value, e.provenance.join(", "));
        if let Some(d) = decompose::find_spherical_infinity_decomposition(&sys, &limits)? {
            println!(
                "  split {} / {} over {}",
                sys.format_subset(d.down),
                sys.format_subset(d.up),
                sys.format_subset(d.meet)
            );
        }
    }

    let sys = named::free3();
    let xi = xi_graph(&sys, SpecialSubset::EMPTY)?;
    println!("Xi over the empty set in the free product is connected: {}", xi.is_connected());
    Ok(())
}
