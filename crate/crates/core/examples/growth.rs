//! Sphere sizes, truncated growth series and double-coset counts.

use coxeter_weyl::words::{self, ThicknessVector};
use coxeter_weyl::{named, Limits, Result};
use num_rational::BigRational;

fn main() -> Result<()> {
    let limits = Limits::default();
    for (name, sys) in [("A2", named::a2()), ("affine A2", named::affine_a2()), ("free product of three A1", named::free3())] {
        let census = words::ball(&sys, 6, &limits)?;
        println!("{name}: sphere sizes {:?}", census.sphere_sizes);
        let half = BigRational::new(1.into(), 2.into());
        println!("  W(1/2) up to length 6 = {}", words::poincare_partial(&sys, 6, &half, &limits)?);
        println!("  convergence exponent {}", words::convergence_exponent(&sys));
    }

    let sys = named::d_infinity();
    let q = ThicknessVector::from_pairs(&sys, &[("s", 2), ("t", 3)])?;
    let counts = words::double_coset_counts(&sys, &q, 100, &limits)?;
    println!("D_inf with thickness (2, 3): R(n) for n <= 100");
    for (n, r) in counts {
        println!("  R({n}) = {r}");
    }
    Ok(())
}
