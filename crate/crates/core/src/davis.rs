//! The Davis chamber and its relative rational cohomology.
//!
//! The chamber `K` is the order complex of the poset of spherical subsets
//! (including `∅`); the mirror `K_s` is the full subcomplex on the spherical
//! subsets containing `s`. For spherical `J`, `H^*(K, K^{S∖J}; ℚ)` is computed
//! from the relative cochain complex whose basis is the set of chains not
//! contained in `K^{S∖J}`. A chain `T_0 ⊊ … ⊊ T_k` lies in some mirror `K_s`
//! exactly when its bottom `T_0` contains `s`, so the relative basis consists
//! of the chains with `T_0 ⊆ J`.
//!
//! Non-vanishing of `H^k(K, K^{S∖J})` for some spherical `J` detects
//! `cd_ℚ(W) >= k`, and non-vanishing in degree one detects more than one end.

use std::collections::{BTreeMap, HashMap};

use crate::catalog::Classifier;
use crate::error::{Error, Limits, Result};
use crate::linalg::{self, SparseRow};
use crate::system::{CoxeterSystem, SpecialSubset};

#[derive(Debug, Clone)]
pub struct ChamberComplex {
    /// Spherical subsets ordered by `(size, mask)`; index 0 is `∅`.
    pub vertices: Vec<SpecialSubset>,
    /// `simplices[k]` lists the `k`-simplices as increasing vertex-index chains.
    pub simplices: Vec<Vec<Vec<usize>>>,
    rank: usize,
}

impl ChamberComplex {
    pub fn dimension(&self) -> usize {
        self.simplices.len() - 1
    }

    pub fn simplex_count(&self) -> usize {
        self.simplices.iter().map(Vec::len).sum()
    }

    /// Vertex indices of the mirror `K_s`.
    pub fn mirror(&self, s: usize) -> Vec<usize> {
        (0..self.vertices.len()).filter(|&v| self.vertices[v].contains(s)).collect()
    }

    /// Whether a simplex lies in `⋃_{s ∈ T} K_s`.
    pub fn in_mirrors(&self, simplex: &[usize], t: SpecialSubset) -> bool {
        !self.vertices[simplex[0]].intersection(t).is_empty()
    }

    /// Betti numbers of `(K, K^{S∖keep})` in degrees `0..=top`; chains are
    /// relative exactly when their bottom vertex is contained in `keep`.
    fn relative_dims(&self, keep: SpecialSubset, top: usize) -> Vec<usize> {
        let top = top.min(self.dimension());
        let rel: Vec<Vec<&Vec<usize>>> = (0..=(top + 1).min(self.dimension()))
            .map(|k| self.simplices[k].iter().filter(|c| self.vertices[c[0]].is_subset(keep)).collect())
            .collect();
        let index: Vec<HashMap<&[usize], usize>> = rel
            .iter()
            .map(|cs| cs.iter().enumerate().map(|(i, c)| (c.as_slice(), i)).collect())
            .collect();
        // ranks[k] = rank of the coboundary C^k -> C^{k+1}.
        let mut ranks = vec![0usize; top + 1];
        for k in 0..=top {
            if k + 1 >= rel.len() {
                break;
            }
            let rows: Vec<SparseRow> = rel[k + 1]
                .iter()
                .map(|sigma| {
                    let mut row: SparseRow = Vec::with_capacity(sigma.len());
                    let mut face = Vec::with_capacity(sigma.len() - 1);
                    for i in 0..sigma.len() {
                        face.clear();
                        face.extend(sigma.iter().enumerate().filter(|e| e.0 != i).map(|e| *e.1));
                        if let Some(&col) = index[k].get(face.as_slice()) {
                            row.push((col, if i % 2 == 0 { 1 } else { -1 }));
                        }
                    }
                    row.sort_unstable();
                    row
                })
                .collect();
            ranks[k] = linalg::rank(&rows, rel[k].len());
        }
        (0..=top)
            .map(|k| {
                let below = if k == 0 { 0 } else { ranks[k - 1] };
                rel[k].len() - ranks[k] - below
            })
            .collect()
    }

    /// `dim H^k(K, K^{S∖J}; ℚ)` for every `k <= dim K`.
    pub fn relative_cohomology(&self, j: SpecialSubset) -> Vec<usize> {
        self.relative_dims(j, self.dimension())
    }

    /// `dim H^k(K; ℚ)`.
    pub fn absolute_cohomology(&self) -> Vec<usize> {
        self.relative_dims(SpecialSubset::full(self.rank), self.dimension())
    }
}

/// Builds the Davis chamber of `sys`.
pub fn chamber_complex(sys: &CoxeterSystem, limits: &Limits) -> Result<ChamberComplex> {
    let vertices = Classifier::new(sys).spherical_subsets(limits.spherical_poset)?;
    let n = vertices.len();
    let ups: Vec<Vec<usize>> = (0..n)
        .map(|i| (i + 1..n).filter(|&j| vertices[i] != vertices[j] && vertices[i].is_subset(vertices[j])).collect())
        .collect();
    let mut simplices: Vec<Vec<Vec<usize>>> = vec![(0..n).map(|i| vec![i]).collect()];
    let mut total = n;
    loop {
        let last = simplices.last().expect("non-empty");
        let mut next = Vec::new();
        for c in last {
            for &j in &ups[*c.last().expect("non-empty chain")] {
                let mut d = c.clone();
                d.push(j);
                next.push(d);
            }
        }
        if next.is_empty() {
            break;
        }
        total += next.len();
        if total > limits.chamber_simplices {
            return Err(Error::LimitExceeded(format!(
                "Davis chamber exceeds {} simplices",
                limits.chamber_simplices
            )));
        }
        next.sort();
        simplices.push(next);
    }
    Ok(ChamberComplex { vertices, simplices, rank: sys.rank() })
}

fn require_spherical(sys: &CoxeterSystem, cx: &ChamberComplex, j: SpecialSubset) -> Result<()> {
    sys.check_subset(j)?;
    if cx.vertices.binary_search_by_key(&(j.len(), j.bits()), |v| (v.len(), v.bits())).is_err() {
        return Err(Error::NotSpherical(sys.format_subset(j)));
    }
    Ok(())
}

/// `dim H^k(K, K^{S∖J}; ℚ)` for spherical `J`.
pub fn relative_cohomology(sys: &CoxeterSystem, j: SpecialSubset, limits: &Limits) -> Result<Vec<usize>> {
    let cx = chamber_complex(sys, limits)?;
    require_spherical(sys, &cx, j)?;
    Ok(cx.relative_cohomology(j))
}

/// Relative cohomology for every spherical `J`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyTable {
    pub dimension: usize,
    pub rows: BTreeMap<SpecialSubset, Vec<usize>>,
}

impl CohomologyTable {
    /// Largest degree with a non-zero entry.
    pub fn top_degree(&self) -> usize {
        self.rows
            .values()
            .filter_map(|d| d.iter().rposition(|&x| x != 0))
            .max()
            .unwrap_or(0)
    }

    pub fn to_json(&self, sys: &CoxeterSystem) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = self
            .rows_in_order()
            .map(|(j, d)| serde_json::json!({ "J": sys.subset_names(j), "dims": d }))
            .collect();
        serde_json::json!({ "dimension": self.dimension, "rows": rows, "cd_q": self.top_degree() })
    }

    pub fn to_tsv(&self, sys: &CoxeterSystem) -> String {
        let mut out = String::from("J");
        for k in 0..=self.dimension {
            out.push_str(&format!("\tH{k}"));
        }
        out.push('\n');
        for (j, d) in self.rows_in_order() {
            out.push_str(&sys.format_subset(j));
            for x in d {
                out.push_str(&format!("\t{x}"));
            }
            out.push('\n');
        }
        out
    }

    /// Rows ordered by `(|J|, mask)`.
    pub fn rows_in_order(&self) -> impl Iterator<Item = (SpecialSubset, &Vec<usize>)> {
        let mut v: Vec<_> = self.rows.iter().map(|(j, d)| (*j, d)).collect();
        v.sort_by_key(|(j, _)| (j.len(), j.bits()));
        v.into_iter()
    }
}

pub fn cohomology_table(sys: &CoxeterSystem, limits: &Limits) -> Result<CohomologyTable> {
    let cx = chamber_complex(sys, limits)?;
    let rows = cx.vertices.iter().map(|&j| (j, cx.relative_cohomology(j))).collect();
    Ok(CohomologyTable { dimension: cx.dimension(), rows })
}

/// `cd_ℚ(W)`: the top degree of non-vanishing relative cohomology over all spherical `J`.
pub fn rational_cd(sys: &CoxeterSystem, limits: &Limits) -> Result<usize> {
    Ok(cohomology_table(sys, limits)?.top_degree())
}

/// `true` iff some spherical `J` has `H^1(K, K^{S∖J}; ℚ) ≠ 0`.
pub fn more_than_one_end_h1(sys: &CoxeterSystem, limits: &Limits) -> Result<bool> {
    let cx = chamber_complex(sys, limits)?;
    Ok(cx.vertices.iter().any(|&j| cx.relative_dims(j, 1).get(1).is_some_and(|&d| d != 0)))
}
