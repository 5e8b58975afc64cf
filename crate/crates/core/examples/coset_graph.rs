//! Residue graphs of a graph of special subgroups on a ball, and the tree check.

use coxeter_weyl::cosetgraph::{self, TreeVerdict, TREE_CAVEAT};
use coxeter_weyl::decompose::{self, GraphOfSpecialSubgroups, Predicate};
use coxeter_weyl::{named, Limits, Result};

fn main() -> Result<()> {
    let limits = Limits::default();

    let sys = named::free3();
    let gog = decompose::visual_decomposition(&sys, &Predicate::Spherical, &limits)?;
    let g = cosetgraph::coset_graph(&sys, &gog, 5, &limits)?;
    println!("free product, radius 5: {} residues, {} edges, {}", g.vertices.len(), g.edges.len(), cosetgraph::is_tree_within_ball(&g).tag());

    let sys = named::affine_a2();
    let ab = sys.subset(&["a", "b"])?;
    let bc = sys.subset(&["b", "c"])?;
    let gog = GraphOfSpecialSubgroups { vertex_sets: vec![ab, bc], edges: vec![(0, 1, ab.intersection(bc))], visual: false };
    let g = cosetgraph::coset_graph(&sys, &gog, 6, &limits)?;
    match cosetgraph::is_tree_within_ball(&g) {
        TreeVerdict::CycleFound(cycle) => println!("affine A2 split over b: cycle through {} residues", cycle.len()),
        other => println!("affine A2 split over b: {}", other.tag()),
    }
    if let Some(c) = cosetgraph::shortest_cycle(&g) {
        println!("shortest cycle has length {}", c.len());
    }
    println!("{TREE_CAVEAT}");
    Ok(())
}
