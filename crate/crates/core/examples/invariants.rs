//! Full invariant reports and the rank-three table.

use coxeter_weyl::invariants::{self, rank3_case};
use coxeter_weyl::named;
use coxeter_weyl::words::ThicknessVector;
use coxeter_weyl::{Label, Limits, Result};

fn main() -> Result<()> {
    let limits = Limits::default();
    let sys = named::d_infinity();
    let q = ThicknessVector::uniform(&sys, 2)?;
    let report = invariants::invariant_report(&sys, Some(&q), &limits)?;
    println!("{}", serde_json::to_string_pretty(&report.to_json()).unwrap());

    for (name, sys) in [("compact square", named::compact_hyperbolic_square()), ("D_inf x affine A2", named::d_infinity_x_affine_a2())] {
        let r = invariants::invariant_report(&sys, None, &limits)?;
        println!("{name}: ends {}, cd_Q {}, algebraic rank {}, vcd {}", r.ends.value, r.cd_q, r.alg_rank, r.vcd.to_json());
    }

    println!("rank three:");
    let labels = [Label::Finite(2), Label::Finite(3), Label::Finite(7), Label::Infinity];
    for &x in &labels {
        for &y in &labels {
            let case = rank3_case(&named::triangle(x, y, Label::Finite(3)))?;
            println!("  ({x}, {y}, 3): case {} alg {} cd {} vcd {}", case.tag.roman(), case.alg_rank, case.cd_q, case.vcd);
        }
    }
    Ok(())
}
