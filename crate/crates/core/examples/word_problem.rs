//! Normal forms, products, inverses and descent sets in B3.

use coxeter_weyl::words::{self, parse_word};
use coxeter_weyl::{named, Limits, Result};

fn main() -> Result<()> {
    let sys = named::b3();
    let limits = Limits::default();
    for text in ["a b a", "b a b", "c b c b", "a a", "b c b c b c b c", "a b c a b c a b c"] {
        let nf = words::reduce(&sys, &parse_word(&sys, text)?, &limits)?;
        let descents = words::descent_set(&sys, &nf, &limits)?;
        println!("{text:<20} -> {:<14} length {} right descents {}", nf.display(&sys).to_string(), nf.len(), sys.format_subset(descents));
    }

    let u = words::reduce(&sys, &parse_word(&sys, "a b c")?, &limits)?;
    let v = words::inverse(&sys, &u, &limits)?;
    println!("({}) ^ -1 = {}", u.display(&sys), v.display(&sys));
    println!("product is identity: {}", words::product(&sys, &u, &v, &limits)?.is_identity());

    let w0 = words::reduce(&sys, &parse_word(&sys, "c b c b a b c b a")?, &limits)?;
    let expressions = words::reduced_expressions(&sys, &w0, &limits)?;
    println!("{} has {} reduced expressions", w0.display(&sys), expressions.len());
    Ok(())
}
