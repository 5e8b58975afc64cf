//! Clique trees of the presentation diagram as graphs of special subgroups.

use coxeter_weyl::decompose::{self, Predicate};
use coxeter_weyl::{named, CoxeterSystem, DiagramKind, Limits, Result, SpecialSubset};

fn main() -> Result<()> {
    let limits = Limits::default();
    let sys = named::free3();
    let gog = decompose::visual_decomposition(&sys, &Predicate::Spherical, &limits)?;
    print!("{}", gog.to_dot(&sys));
    println!("virtually free: {}", decompose::is_virtually_free(&sys));

    let sys = named::d_infinity_x_affine_a2();
    match decompose::visual_decomposition(&sys, &Predicate::SphericalOrAffine, &limits) {
        Ok(gog) => println!("{}", gog.to_json(&sys)),
        Err(e) => println!("no decomposition with positive-type cliques: {e}"),
    }
    let tree = decompose::accessibility_tree(&sys, &limits)?;
    println!("accessibility tree: {}", tree.to_json(&sys));

    let small = |_: &CoxeterSystem, j: SpecialSubset| j.len() <= 2;
    let sys = named::path_with_infinite_chord();
    let g = sys.diagram(DiagramKind::Presentation).to_graph();
    println!("presentation diagram chordal: {}", decompose::is_chordal(&g).is_chordal());
    match decompose::visual_decomposition(&sys, &Predicate::User(&small), &limits) {
        Ok(gog) => print!("{}", gog.to_dot(&sys)),
        Err(e) => println!("{e}"),
    }
    Ok(())
}
