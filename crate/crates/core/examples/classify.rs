//! Classify the irreducible pieces of a few diagrams and cross-check against
//! the signature of the bilinear form.

use coxeter_weyl::catalog::{signature_discrepancy, Classifier};
use coxeter_weyl::{bilinear_signature, maximal_spherical_subsets, named, parse_system, Result};

fn main() -> Result<()> {
    let from_json = parse_system(r#"{"generators": ["r", "s", "t"], "labels": {"r,s": 4, "s,t": 4}}"#)?;
    let systems = [
        ("B3", named::b3()),
        ("affine A2", named::affine_a2()),
        ("compact square", named::compact_hyperbolic_square()),
        ("6-3-5 chain", named::chain_6_3_5()),
        ("D_inf x A1", named::d_infinity_x_a1()),
        ("affine C2 from JSON", from_json),
    ];
    for (name, sys) in systems {
        let mut c = Classifier::new(&sys);
        println!("{name}");
        for comp in sys.irreducible_components() {
            let t = c.classify_connected(comp);
            let check = match signature_discrepancy(&sys.restrict(comp)?, t) {
                None => "signature agrees".to_string(),
                Some(sig) => format!("signature disagrees: {sig:?}"),
            };
            println!("  {} : {t} ({}), {check}", sys.format_subset(comp), t.family());
        }
        println!("  signature {:?}", bilinear_signature(&sys, 1e-9)?);
        let maximal: Vec<String> = maximal_spherical_subsets(&sys).iter().map(|&j| sys.format_subset(j)).collect();
        println!("  maximal spherical subsets: {}", maximal.join(" "));
    }
    Ok(())
}
