//! Small named systems used throughout the docs, examples and tests.

use crate::system::{CoxeterSystem, Label};

use Label::Finite as F;
use Label::Infinity as INF;

fn build(names: &[&str], labels: &[(&str, &str, Label)]) -> CoxeterSystem {
    CoxeterSystem::new(names, labels).expect("named systems are valid")
}

pub fn a1() -> CoxeterSystem {
    build(&["s"], &[])
}

pub fn a1_x_a1() -> CoxeterSystem {
    build(&["s", "t"], &[])
}

/// Dihedral group of order `2m`; `m = 2` gives `A_1 × A_1`.
pub fn dihedral(m: u32) -> CoxeterSystem {
    build(&["s", "t"], &[("s", "t", F(m))])
}

pub fn a2() -> CoxeterSystem {
    dihedral(3)
}

pub fn b2() -> CoxeterSystem {
    dihedral(4)
}

pub fn b3() -> CoxeterSystem {
    build(&["a", "b", "c"], &[("a", "b", F(3)), ("b", "c", F(4))])
}

/// The infinite dihedral group, `m_st = ∞`.
pub fn d_infinity() -> CoxeterSystem {
    build(&["s", "t"], &[("s", "t", INF)])
}

/// `D_∞ × A_1`.
pub fn d_infinity_x_a1() -> CoxeterSystem {
    build(&["s", "t", "u"], &[("s", "t", INF)])
}

pub fn affine_a2() -> CoxeterSystem {
    triangle(F(3), F(3), F(3))
}

/// Rank-3 system with `(m_ab, m_bc, m_ca)`.
pub fn triangle(ab: Label, bc: Label, ca: Label) -> CoxeterSystem {
    build(&["a", "b", "c"], &[("a", "b", ab), ("b", "c", bc), ("c", "a", ca)])
}

/// `m_ab = 3`, `m_ac = m_bc = ∞`: the free product `S_3 * C_2`.
pub fn free3() -> CoxeterSystem {
    triangle(F(3), INF, INF)
}

/// Path `a –3– b –3– c` with `m_ac = ∞`.
pub fn path_with_infinite_chord() -> CoxeterSystem {
    triangle(F(3), F(3), INF)
}

/// Square with cyclic labels 4, 3, 4, 3: compact hyperbolic of rank 4.
pub fn compact_hyperbolic_square() -> CoxeterSystem {
    build(
        &["a", "b", "c", "d"],
        &[("a", "b", F(4)), ("b", "c", F(3)), ("c", "d", F(4)), ("d", "a", F(3))],
    )
}

/// The four non-compact hyperbolic squares on `a, b, c, d` with edges
/// `d–c`, `d–a`, `a–b`, `c–b`.
pub fn noncompact_squares() -> Vec<CoxeterSystem> {
    [(3, 4, 4, 4), (3, 3, 6, 3), (4, 3, 6, 3), (5, 3, 6, 3)]
        .iter()
        .map(|&(dc, da, ab, cb)| {
            build(
                &["a", "b", "c", "d"],
                &[("d", "c", F(dc)), ("d", "a", F(da)), ("a", "b", F(ab)), ("c", "b", F(cb))],
            )
        })
        .collect()
}

/// Triangle `a, b, c` of 3s with a pendant `d –5– a`.
pub fn noncompact_star() -> CoxeterSystem {
    build(
        &["a", "b", "c", "d"],
        &[("d", "a", F(5)), ("a", "b", F(3)), ("a", "c", F(3)), ("b", "c", F(3))],
    )
}

/// Chain `a –6– b –3– c –5– d`.
pub fn chain_6_3_5() -> CoxeterSystem {
    build(&["a", "b", "c", "d"], &[("a", "b", F(6)), ("b", "c", F(3)), ("c", "d", F(5))])
}

/// Hexagon `a b c d e f` of 3s except `d –4– e`.
pub fn noncompact_hexagon() -> CoxeterSystem {
    build(
        &["a", "b", "c", "d", "e", "f"],
        &[
            ("a", "b", F(3)),
            ("b", "c", F(3)),
            ("c", "d", F(3)),
            ("d", "e", F(4)),
            ("e", "f", F(3)),
            ("f", "a", F(3)),
        ],
    )
}

/// `a –6– b`, with `b`, `c`, `d` forming a triangle of 3s. Non-compact
/// hyperbolic with four maximal spherical subsets.
pub fn remark_star() -> CoxeterSystem {
    build(
        &["a", "b", "c", "d"],
        &[("a", "b", F(6)), ("b", "c", F(3)), ("b", "d", F(3)), ("c", "d", F(3))],
    )
}

/// Five-cycle with every cycle edge labelled ∞ (other pairs commute).
pub fn pentagon_infinity() -> CoxeterSystem {
    build(
        &["p1", "p2", "p3", "p4", "p5"],
        &[("p1", "p2", INF), ("p2", "p3", INF), ("p3", "p4", INF), ("p4", "p5", INF), ("p5", "p1", INF)],
    )
}

/// `D_∞ × ~A_2` on `s, t, a, b, c`.
pub fn d_infinity_x_affine_a2() -> CoxeterSystem {
    build(
        &["s", "t", "a", "b", "c"],
        &[("s", "t", INF), ("a", "b", F(3)), ("b", "c", F(3)), ("c", "a", F(3))],
    )
}
