//! Residue graphs of a graph of special subgroups on balls of the Coxeter
//! complex, chamber graphs, and the ball-complement ends estimate.
//!
//! Chambers of the Coxeter complex are the group elements; the `J`-residue of
//! `w` is the coset `w W_J`, keyed by its minimal-length representative.

use std::collections::{HashMap, VecDeque};

use serde_json::{json, Value};

use crate::decompose::GraphOfSpecialSubgroups;
use crate::error::{Error, Limits, Result};
use crate::graph::{SimpleGraph, UnionFind};
use crate::system::CoxeterSystem;
use crate::words::{ball, BallCensus, NormalForm};

/// A residue `rep · W_{S_part}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Residue {
    /// Vertex (or edge) of the graph of groups this residue belongs to.
    pub part: usize,
    /// Minimal-length element of the coset.
    pub rep: NormalForm,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueEdge {
    pub residue: Residue,
    /// Index into [`CosetGraph::vertices`] of the residue of the origin vertex group.
    pub origin: usize,
    pub terminus: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetGraph {
    pub radius: usize,
    pub vertices: Vec<Residue>,
    pub edges: Vec<ResidueEdge>,
}

impl CosetGraph {
    pub fn to_graph(&self) -> SimpleGraph {
        let mut g = SimpleGraph::new(self.vertices.len());
        for e in &self.edges {
            g.add_edge(e.origin, e.terminus);
        }
        g
    }

    pub fn to_dot(&self, sys: &CoxeterSystem, gog: &GraphOfSpecialSubgroups) -> String {
        let mut out = String::from("graph residues {\n");
        for (i, r) in self.vertices.iter().enumerate() {
            out.push_str(&format!(
                "  r{i} [label=\"{} W{}\"];\n",
                r.rep.display(sys),
                sys.format_subset(gog.vertex_sets[r.part])
            ));
        }
        for e in &self.edges {
            out.push_str(&format!(
                "  r{} -- r{} [label=\"{} W{}\"];\n",
                e.origin,
                e.terminus,
                e.residue.rep.display(sys),
                sys.format_subset(gog.edges[e.residue.part].2)
            ));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self, sys: &CoxeterSystem) -> Value {
        json!({
            "radius": self.radius,
            "vertices": self.vertices.iter()
                .map(|r| json!({ "part": r.part, "rep": r.rep.display(sys).to_string() }))
                .collect::<Vec<_>>(),
            "edges": self.edges.iter()
                .map(|e| json!({
                    "part": e.residue.part,
                    "rep": e.residue.rep.display(sys).to_string(),
                    "from": e.origin,
                    "to": e.terminus,
                }))
                .collect::<Vec<_>>(),
        })
    }
}

/// Residue graph restricted to the residues meeting the ball of radius
/// `radius`, which must not exceed `census.radius`.
pub fn coset_graph_from_ball(
    census: &BallCensus,
    gog: &GraphOfSpecialSubgroups,
    radius: usize,
) -> Result<CosetGraph> {
    if radius > census.radius {
        return Err(Error::BadRadii { r: radius, big_r: census.radius });
    }
    if !gog.is_well_formed() {
        return Err(Error::Invalid("edge groups must lie in both endpoint groups".into()));
    }
    let end = census.sphere_start(radius + 1);
    let mut vertex_ids: HashMap<(usize, usize), usize> = HashMap::new();
    let mut vertices = Vec::new();
    let mut vertex = |part: usize, rep: usize, vertices: &mut Vec<Residue>| -> usize {
        *vertex_ids.entry((part, rep)).or_insert_with(|| {
            vertices.push(Residue { part, rep: census.elements[rep].clone() });
            vertices.len() - 1
        })
    };
    let mut seen_edges: HashMap<(usize, usize), ()> = HashMap::new();
    let mut edges = Vec::new();
    for w in 0..end {
        for (v, &set) in gog.vertex_sets.iter().enumerate() {
            vertex(v, census.coset_min(w, set), &mut vertices);
        }
        for (e, &(a, b, set)) in gog.edges.iter().enumerate() {
            let rep = census.coset_min(w, set);
            if seen_edges.insert((e, rep), ()).is_some() {
                continue;
            }
            let origin = vertex(a, census.coset_min(rep, gog.vertex_sets[a]), &mut vertices);
            let terminus = vertex(b, census.coset_min(rep, gog.vertex_sets[b]), &mut vertices);
            edges.push(ResidueEdge {
                residue: Residue { part: e, rep: census.elements[rep].clone() },
                origin,
                terminus,
            });
        }
    }
    Ok(CosetGraph { radius, vertices, edges })
}

pub fn coset_graph(
    sys: &CoxeterSystem,
    gog: &GraphOfSpecialSubgroups,
    radius: usize,
    limits: &Limits,
) -> Result<CosetGraph> {
    for &v in &gog.vertex_sets {
        sys.check_subset(v)?;
    }
    coset_graph_from_ball(&ball(sys, radius, limits)?, gog, radius)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TreeVerdict {
    AcyclicConnected,
    /// A shortest cycle, as vertex indices in cyclic order.
    CycleFound(Vec<usize>),
    /// Number of connected components.
    Disconnected(usize),
}

impl TreeVerdict {
    pub fn tag(&self) -> &'static str {
        match self {
            TreeVerdict::AcyclicConnected => "ACYCLIC_CONNECTED",
            TreeVerdict::CycleFound(_) => "CYCLE_FOUND",
            TreeVerdict::Disconnected(_) => "DISCONNECTED",
        }
    }
}

pub const TREE_CAVEAT: &str =
    "the verdict concerns the residues meeting the ball only: a cycle refutes tree-ness, \
     an acyclic connected ball is necessary but not sufficient for the full graph to be a tree";

/// Shortest path between the endpoints of edge `skip` that avoids that edge.
fn detour(adj: &[Vec<(usize, usize)>], from: usize, to: usize, skip: usize) -> Option<Vec<usize>> {
    let mut prev = vec![usize::MAX; adj.len()];
    prev[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        if v == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = prev[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for &(w, e) in &adj[v] {
            if e != skip && prev[w] == usize::MAX {
                prev[w] = v;
                queue.push_back(w);
            }
        }
    }
    None
}

fn adjacency(g: &CosetGraph) -> Vec<Vec<(usize, usize)>> {
    let mut adj = vec![Vec::new(); g.vertices.len()];
    for (i, e) in g.edges.iter().enumerate() {
        adj[e.origin].push((e.terminus, i));
        adj[e.terminus].push((e.origin, i));
    }
    adj
}

/// Cycle check first, then connectivity. The witness is a shortest cycle
/// through the first edge that closes a cycle in edge order.
pub fn is_tree_within_ball(g: &CosetGraph) -> TreeVerdict {
    let mut uf = UnionFind::new(g.vertices.len());
    if let Some(i) = g.edges.iter().position(|e| !uf.union(e.origin, e.terminus)) {
        let e = &g.edges[i];
        let cycle = detour(&adjacency(g), e.origin, e.terminus, i).expect("a closing edge lies on a cycle");
        return TreeVerdict::CycleFound(cycle);
    }
    let comps = g.to_graph().components().len();
    if comps > 1 {
        TreeVerdict::Disconnected(comps)
    } else {
        TreeVerdict::AcyclicConnected
    }
}

/// A shortest cycle of the residue graph (parallel edges count as 2-cycles).
pub fn shortest_cycle(g: &CosetGraph) -> Option<Vec<usize>> {
    let adj = adjacency(g);
    let mut best: Option<Vec<usize>> = None;
    for (i, e) in g.edges.iter().enumerate() {
        if let Some(p) = detour(&adj, e.origin, e.terminus, i) {
            if best.as_ref().is_none_or(|b| p.len() < b.len()) {
                best = Some(p);
            }
        }
    }
    best
}

/// Cayley graph of `W` restricted to a ball, with generator edges.
#[derive(Debug, Clone)]
pub struct ChamberGraph {
    pub radius: usize,
    pub census: BallCensus,
    /// `(u, v, s)` with `v = u s`, `u < v`.
    pub edges: Vec<(usize, usize, usize)>,
}

impl ChamberGraph {
    pub fn vertex_count(&self) -> usize {
        self.census.len()
    }

    pub fn to_graph(&self) -> SimpleGraph {
        SimpleGraph::from_edges(self.census.len(), &self.edges.iter().map(|&(a, b, _)| (a, b)).collect::<Vec<_>>())
    }

    pub fn to_dot(&self, sys: &CoxeterSystem) -> String {
        let mut out = String::from("graph chambers {\n");
        for (i, w) in self.census.elements.iter().enumerate() {
            out.push_str(&format!("  c{i} [label=\"{}\"];\n", w.display(sys)));
        }
        for &(a, b, s) in &self.edges {
            out.push_str(&format!("  c{a} -- c{b} [label=\"{}\"];\n", sys.name(s)));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self, sys: &CoxeterSystem) -> Value {
        json!({
            "radius": self.radius,
            "vertices": self.census.elements.iter().map(|w| w.display(sys).to_string()).collect::<Vec<_>>(),
            "edges": self.edges.iter().map(|&(a, b, s)| json!([a, b, sys.name(s)])).collect::<Vec<_>>(),
        })
    }
}

pub fn chamber_graph(sys: &CoxeterSystem, radius: usize, limits: &Limits) -> Result<ChamberGraph> {
    let census = ball(sys, radius, limits)?;
    let mut edges = Vec::new();
    for (u, row) in census.neighbours.iter().enumerate() {
        for (s, v) in row.iter().enumerate() {
            if let Some(v) = *v {
                if u < v {
                    edges.push((u, v, s));
                }
            }
        }
    }
    Ok(ChamberGraph { radius, census, edges })
}

/// Number of components of `B(R) ∖ B(r)` that reach the sphere of radius `R`;
/// 0 when that sphere is empty.
pub fn ends_estimate(g: &ChamberGraph, r: usize, big_r: usize) -> Result<usize> {
    if r >= big_r || big_r > g.radius {
        return Err(Error::BadRadii { r, big_r });
    }
    let lo = g.census.sphere_start(r + 1);
    let hi = g.census.sphere_start(big_r + 1);
    let outer = g.census.sphere_start(big_r);
    if outer == hi {
        return Ok(0);
    }
    let mut uf = UnionFind::new(hi - lo);
    for &(a, b, _) in &g.edges {
        if a >= lo && b >= lo && a < hi && b < hi {
            uf.union(a - lo, b - lo);
        }
    }
    let roots: std::collections::BTreeSet<usize> = (outer..hi).map(|w| uf.find(w - lo)).collect();
    Ok(roots.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::{visual_decomposition, Predicate};
    use crate::named;

    fn lim() -> Limits {
        Limits::default()
    }

    fn gog(sys: &CoxeterSystem, verts: &[&[&str]], edges: &[(usize, usize, &[&str])]) -> GraphOfSpecialSubgroups {
        GraphOfSpecialSubgroups {
            vertex_sets: verts.iter().map(|v| sys.subset(v).unwrap()).collect(),
            edges: edges.iter().map(|&(a, b, e)| (a, b, sys.subset(e).unwrap())).collect(),
            visual: false,
        }
    }

    #[test]
    fn d_infinity_line() {
        let d = named::d_infinity();
        let g = coset_graph(&d, &gog(&d, &[&["s"], &["t"]], &[(0, 1, &[])]), 3, &lim()).unwrap();
        assert_eq!(is_tree_within_ball(&g), TreeVerdict::AcyclicConnected);
        let t = g.to_graph();
        assert!((0..t.len()).all(|v| t.degree(v) <= 2));
        assert_eq!(g.edges.len(), 7);
    }

    #[test]
    fn free3_tree() {
        let f = named::free3();
        let g = coset_graph(&f, &gog(&f, &[&["a", "b"], &["c"]], &[(0, 1, &[])]), 2, &lim()).unwrap();
        assert_eq!(is_tree_within_ball(&g), TreeVerdict::AcyclicConnected);
    }

    #[test]
    fn affine_a2_cycle() {
        let a = named::affine_a2();
        let g = coset_graph(&a, &gog(&a, &[&["a", "b"], &["b", "c"]], &[(0, 1, &["b"])]), 4, &lim()).unwrap();
        assert!(matches!(is_tree_within_ball(&g), TreeVerdict::CycleFound(_)));
        assert_eq!(shortest_cycle(&g).unwrap().len(), 6);
    }

    #[test]
    fn missing_generator_disconnects() {
        let f = named::free3();
        let g = coset_graph(&f, &gog(&f, &[&["a"], &["c"]], &[(0, 1, &[])]), 2, &lim()).unwrap();
        assert!(matches!(is_tree_within_ball(&g), TreeVerdict::Disconnected(_)));
    }

    #[test]
    fn finite_coset_counts() {
        let a = named::a2();
        let g = coset_graph(&a, &gog(&a, &[&["s"]], &[]), 3, &lim()).unwrap();
        assert_eq!(g.vertices.len(), 3);
        for r in &g.vertices {
            assert!(!r.rep.word().last().is_some_and(|&x| x == 0));
        }
    }

    #[test]
    fn visual_outputs_are_trees() {
        for sys in [named::free3(), named::d_infinity(), named::path_with_infinite_chord(), named::d_infinity_x_a1()] {
            let v = visual_decomposition(&sys, &Predicate::Spherical, &lim()).unwrap();
            let census = ball(&sys, 6, &lim()).unwrap();
            for r in 0..=6 {
                let g = coset_graph_from_ball(&census, &v, r).unwrap();
                assert_eq!(is_tree_within_ball(&g), TreeVerdict::AcyclicConnected, "radius {r}");
            }
        }
    }

    #[test]
    fn chamber_examples() {
        let g = chamber_graph(&named::d_infinity(), 3, &lim()).unwrap();
        assert_eq!((g.vertex_count(), g.edges.len()), (7, 6));
        let g = chamber_graph(&named::a2(), 3, &lim()).unwrap();
        let t = g.to_graph();
        assert_eq!((g.vertex_count(), g.edges.len()), (6, 6));
        assert!((0..6).all(|v| t.degree(v) == 2));
        let g = chamber_graph(&named::affine_a2(), 1, &lim()).unwrap();
        assert_eq!((g.vertex_count(), g.edges.len()), (4, 3));
    }

    #[test]
    fn ends_estimate_examples() {
        let d = chamber_graph(&named::d_infinity(), 4, &lim()).unwrap();
        assert_eq!(ends_estimate(&d, 1, 4).unwrap(), 2);
        let a = chamber_graph(&named::affine_a2(), 6, &lim()).unwrap();
        assert_eq!(ends_estimate(&a, 1, 6).unwrap(), 1);
        let f = chamber_graph(&named::free3(), 5, &lim()).unwrap();
        assert!(ends_estimate(&f, 1, 5).unwrap() >= 3);
        let s = chamber_graph(&named::a2(), 5, &lim()).unwrap();
        assert_eq!(ends_estimate(&s, 1, 5).unwrap(), 0);
        assert_eq!(ends_estimate(&d, 4, 4), Err(Error::BadRadii { r: 4, big_r: 4 }));
    }
}
