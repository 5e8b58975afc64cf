//! Algebraic rank, virtual cohomological dimension and the consolidated report.

use std::collections::HashMap;

use serde_json::{json, Value};

use crate::catalog::{signature_discrepancy, Classifier, TypeLabel};
use crate::davis;
use crate::decompose::{self, Ends, EndsCount};
use crate::error::{Error, Limits, Result};
use crate::system::{CoxeterSystem, SpecialSubset};
use crate::words::ThicknessVector;

/// Provenance tag for the algebraic rank: affine pieces contribute `|I|-1`,
/// every other irreducible non-spherical piece contributes 1.
pub const KRAMMER_RULE: &str = "KRAMMER_RULE";

fn contribution(c: &mut Classifier<'_>, i: SpecialSubset) -> usize {
    match c.component_type(i) {
        Some(t) if t.is_affine() => i.len() - 1,
        _ => 1,
    }
}

fn best_family(
    sys: &CoxeterSystem,
    c: &mut Classifier<'_>,
    a: SpecialSubset,
    memo: &mut HashMap<SpecialSubset, usize>,
) -> usize {
    let Some(x) = a.first() else { return 0 };
    if let Some(&v) = memo.get(&a) {
        return v;
    }
    let single = SpecialSubset::singleton(x);
    let mut best = best_family(sys, c, a.difference(single), memo);
    for rest in a.difference(single).subsets() {
        let i = rest.union(single);
        if sys.components_of(i).len() != 1 || c.is_spherical(i) {
            continue;
        }
        let mut blocked = i;
        for v in i.iter() {
            blocked = blocked.union(sys.coxeter_neighbours(v));
        }
        let v = contribution(c, i) + best_family(sys, c, a.difference(blocked), memo);
        best = best.max(v);
    }
    memo.insert(a, best);
    best
}

/// Maximum over pairwise-perpendicular families of irreducible non-spherical
/// subsets of the summed contributions (see [`KRAMMER_RULE`]).
pub fn algebraic_rank(sys: &CoxeterSystem, limits: &Limits) -> Result<usize> {
    if sys.rank() > limits.algebraic_rank_generators {
        return Err(Error::LimitExceeded(format!(
            "algebraic rank search is capped at {} generators",
            limits.algebraic_rank_generators
        )));
    }
    let mut c = Classifier::new(sys);
    Ok(best_family(sys, &mut c, sys.generators(), &mut HashMap::new()))
}

/// Exact value when `lo == hi`, otherwise an interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VcdBounds {
    pub lo: usize,
    pub hi: usize,
    pub provenance: Vec<&'static str>,
}

impl VcdBounds {
    fn exact(v: usize, tag: &'static str) -> Self {
        VcdBounds { lo: v, hi: v, provenance: vec![tag] }
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn to_json(&self) -> Value {
        if self.is_exact() {
            json!({ "exact": self.lo, "provenance": self.provenance })
        } else {
            json!({ "interval": [self.lo, self.hi], "provenance": self.provenance })
        }
    }
}

/// Table value for an irreducible system, if one applies. Hyperbolic values
/// are only used when the bilinear form confirms the classification.
fn table_value(sys: &CoxeterSystem, c: &mut Classifier<'_>) -> Option<VcdBounds> {
    let n = sys.rank();
    let t = c.classify_connected(sys.generators());
    match t {
        TypeLabel::Affine(_) => Some(VcdBounds::exact(n - 1, "AFFINE_TABLE")),
        TypeLabel::HyperbolicCompact if signature_discrepancy(sys, t).is_none() => {
            Some(VcdBounds::exact(n - 1, "HYPERBOLIC_TABLE"))
        }
        TypeLabel::HyperbolicNoncompact if signature_discrepancy(sys, t).is_none() => {
            Some(VcdBounds::exact(n - 2, "HYPERBOLIC_TABLE"))
        }
        _ => None,
    }
}

pub fn vcd_bounds(sys: &CoxeterSystem, limits: &Limits) -> Result<VcdBounds> {
    let mut c = Classifier::new(sys);
    if c.is_spherical(sys.generators()) {
        return Ok(VcdBounds::exact(0, "SPHERICAL"));
    }
    if sys.is_irreducible() {
        if let Some(v) = table_value(sys, &mut c) {
            return Ok(v);
        }
    }
    if sys.rank() == 3 {
        return Ok(VcdBounds::exact(rank3_case(sys)?.vcd, "RANK3_TABLE"));
    }
    if decompose::is_virtually_free(sys) {
        return Ok(VcdBounds::exact(1, "VF_THEOREM"));
    }
    let comps = sys.irreducible_components();
    if comps.len() > 1 {
        let mut sum = 0;
        let mut all_exact = true;
        for k in comps {
            let v = vcd_bounds(&sys.restrict(k)?, limits)?;
            all_exact &= v.is_exact();
            sum += v.lo;
        }
        if all_exact {
            return Ok(VcdBounds::exact(sum, "PRODUCT_RULE"));
        }
    }
    let lo = davis::rational_cd(sys, limits)?;
    let top = crate::catalog::maximal_spherical_subsets(sys).first().map_or(0, |j| j.len());
    let hi = top.min(sys.rank() - 1).max(lo);
    Ok(VcdBounds { lo, hi, provenance: vec!["DAVIS_LOWER_BOUND"] })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rank3Tag {
    Spherical,
    Affine,
    HasInfinity,
    CompactHyperbolic,
}

impl Rank3Tag {
    pub fn roman(self) -> &'static str {
        match self {
            Rank3Tag::Spherical => "i",
            Rank3Tag::Affine => "ii",
            Rank3Tag::HasInfinity => "iii",
            Rank3Tag::CompactHyperbolic => "iv",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rank3Case {
    pub tag: Rank3Tag,
    pub alg_rank: usize,
    pub cd_q: usize,
    pub vcd: usize,
}

/// Table lookup for three generators; the four cases are exhaustive.
pub fn rank3_case(sys: &CoxeterSystem) -> Result<Rank3Case> {
    if sys.rank() != 3 {
        return Err(Error::WrongRank { expected: 3, got: sys.rank() });
    }
    let mut c = Classifier::new(sys);
    let case = |tag, a, q, v| Rank3Case { tag, alg_rank: a, cd_q: q, vcd: v };
    let has_inf = (0..3).any(|i| (i + 1..3).any(|j| !sys.label(i, j).is_finite()));
    Ok(if c.is_spherical(sys.generators()) {
        case(Rank3Tag::Spherical, 0, 0, 0)
    } else if has_inf {
        case(Rank3Tag::HasInfinity, 1, 1, 1)
    } else if c.classify_connected(sys.generators()).is_affine() {
        case(Rank3Tag::Affine, 2, 2, 2)
    } else {
        case(Rank3Tag::CompactHyperbolic, 1, 2, 2)
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub generators: Vec<String>,
    /// Irreducible components with their types.
    pub components: Vec<(Vec<String>, String)>,
    pub ends: EndsCount,
    pub cd_q: usize,
    pub alg_rank: usize,
    pub vcd: VcdBounds,
    pub flat_rank_note: String,
    pub weyl_notes: Vec<String>,
}

impl InvariantReport {
    pub fn to_json(&self) -> Value {
        json!({
            "schema": 1,
            "generators": self.generators,
            "components": self.components.iter()
                .map(|(g, t)| json!({ "generators": g, "type": t }))
                .collect::<Vec<_>>(),
            "ends": self.ends.value.as_json(),
            "cd_q": self.cd_q,
            "alg_rank": self.alg_rank,
            "vcd": self.vcd.to_json(),
            "alg_rank_equals_cd_q": self.alg_rank == self.cd_q,
            "cd_q_equals_vcd": self.vcd.is_exact() && self.vcd.lo == self.cd_q,
            "flat_rank_note": self.flat_rank_note,
            "weyl_notes": self.weyl_notes,
            "provenance": {
                "ends": self.ends.provenance,
                "cd_q": ["DAVIS_ROUTE"],
                "alg_rank": [KRAMMER_RULE],
                "vcd": self.vcd.provenance,
            },
        })
    }
}

fn weyl_notes(sys: &CoxeterSystem, e: Ends, q: Option<&ThicknessVector>) -> Vec<String> {
    let mut notes = Vec::new();
    match e {
        Ends::Zero => notes.push(
            "e(G) = 0 iff e(W) = 0: a Weyl-transitive group G of type (W,S) is compact exactly when W is spherical"
                .to_string(),
        ),
        Ends::One => notes.push("e(G) = 1 iff e(W) = 1".to_string()),
        Ends::Two | Ends::Infinite => {
            notes.push(format!(
                "e(W) = {e} is only a lower bound: e(W) <= e(G), so the number of ends is not a Weyl invariant"
            ));
            notes.push(
                "for example SL_2(Q_p) acts Weyl-transitively on the (p+1)-regular tree, a building of type D_inf, \
                 and has infinitely many ends although e(D_inf) = 2"
                    .to_string(),
            );
        }
    }
    if let Some(q) = q {
        let thick: Vec<String> =
            (0..sys.rank()).map(|s| format!("{}={}", sys.name(s), q.get(s))).collect();
        notes.push(format!("thickness {}", thick.join(",")));
        if e == Ends::Two {
            let degrees: Vec<String> = (0..sys.rank())
                .filter(|&s| (0..sys.rank()).any(|t| !sys.label(s, t).is_finite()))
                .map(|s| (q.get(s) + 1).to_string())
                .collect();
            notes.push(format!(
                "with this thickness the D_inf factor is realized by a ({})-semiregular tree, which has infinitely many ends",
                degrees.join(",")
            ));
        }
    }
    notes
}

pub fn invariant_report(
    sys: &CoxeterSystem,
    thickness: Option<&ThicknessVector>,
    limits: &Limits,
) -> Result<InvariantReport> {
    let mut c = Classifier::new(sys);
    let components = sys
        .irreducible_components()
        .into_iter()
        .map(|k| (sys.subset_names(k), c.classify_connected(k).to_string()))
        .collect();
    let ends = decompose::ends(sys, limits)?;
    let cd_q = davis::rational_cd(sys, limits)?;
    let alg_rank = algebraic_rank(sys, limits)?;
    let vcd = vcd_bounds(sys, limits)?;
    let flat_rank_note = format!(
        "for every closed Weyl-transitive group G of automorphisms of a building of type (W,S): \
         flat-rk(G) <= alg-rk(W) = {alg_rank} <= cd_Q(W) = cd_Q(G) = {cd_q}"
    );
    let weyl_notes = weyl_notes(sys, ends.value, thickness);
    Ok(InvariantReport {
        generators: sys.names().to_vec(),
        components,
        ends,
        cd_q,
        alg_rank,
        vcd,
        flat_rank_note,
        weyl_notes,
    })
}
