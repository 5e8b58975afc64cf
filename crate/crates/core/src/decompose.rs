//! Infinity-decompositions, ends, chordality of the presentation diagram and
//! visual graph-of-groups decompositions.

use std::fmt;

use serde_json::{json, Value};

use crate::catalog::{Classifier, TypeLabel};
use crate::error::{Error, Limits, Result};
use crate::graph::{SimpleGraph, UnionFind};
use crate::system::{CoxeterSystem, DiagramKind, Label, SpecialSubset};

/// The presentation diagram induced on `S∖J`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XiGraph {
    pub vertices: SpecialSubset,
    pub edges: Vec<(usize, usize)>,
    pub components: Vec<SpecialSubset>,
}

impl XiGraph {
    pub fn is_connected(&self) -> bool {
        self.components.len() <= 1
    }
}

fn presentation_components(sys: &CoxeterSystem, within: SpecialSubset) -> Vec<SpecialSubset> {
    let mut left = within;
    let mut out = Vec::new();
    while let Some(start) = left.first() {
        let mut comp = SpecialSubset::singleton(start);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = SpecialSubset::EMPTY;
            for v in frontier.iter() {
                next = next.union(sys.presentation_neighbours(v));
            }
            next = next.intersection(within).difference(comp);
            comp = comp.union(next);
            frontier = next;
        }
        left = left.difference(comp);
        out.push(comp);
    }
    out
}

pub fn xi_graph(sys: &CoxeterSystem, j: SpecialSubset) -> Result<XiGraph> {
    sys.check_subset(j)?;
    if j == sys.generators() {
        return Err(Error::Invalid("J must be a proper subset of S".into()));
    }
    let vertices = sys.generators().difference(j);
    let idx: Vec<usize> = vertices.iter().collect();
    let mut edges = Vec::new();
    for (a, &u) in idx.iter().enumerate() {
        for &v in &idx[a + 1..] {
            if sys.label(u, v) != Label::Infinity {
                edges.push((u, v));
            }
        }
    }
    Ok(XiGraph { vertices, edges, components: presentation_components(sys, vertices) })
}

/// A cover `S = S_down ∪ S_up` with `m_st = ∞` whenever `s ∈ S_down∖S_meet`
/// and `t ∈ S_up∖S_meet`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InfinityDecomposition {
    pub down: SpecialSubset,
    pub up: SpecialSubset,
    pub meet: SpecialSubset,
}

impl InfinityDecomposition {
    pub fn is_nontrivial(&self) -> bool {
        !self.down.difference(self.meet).is_empty() && !self.up.difference(self.meet).is_empty()
    }

    /// Checks the defining conditions against `sys`, with `within` as the ambient generator set.
    pub fn is_valid_within(&self, sys: &CoxeterSystem, within: SpecialSubset) -> bool {
        if self.down.union(self.up) != within || self.down.intersection(self.up) != self.meet {
            return false;
        }
        let a = self.down.difference(self.meet);
        let b = self.up.difference(self.meet);
        a.iter().all(|s| b.iter().all(|t| sys.label(s, t) == Label::Infinity))
    }

    pub fn is_valid(&self, sys: &CoxeterSystem) -> bool {
        self.is_valid_within(sys, sys.generators())
    }
}

/// First spherical `J ⊊ within` (by size, then mask) whose `Ξ_J` inside
/// `within` is disconnected, from a precomputed sorted list of spherical subsets.
fn split_within(
    sys: &CoxeterSystem,
    spherical: &[SpecialSubset],
    within: SpecialSubset,
) -> Option<InfinityDecomposition> {
    for &j in spherical {
        if !j.is_subset(within) || j == within {
            continue;
        }
        let comps = presentation_components(sys, within.difference(j));
        if comps.len() >= 2 {
            let l = comps[0];
            return Some(InfinityDecomposition {
                down: l.union(j),
                up: within.difference(l),
                meet: j,
            });
        }
    }
    None
}

pub fn find_spherical_infinity_decomposition(
    sys: &CoxeterSystem,
    limits: &Limits,
) -> Result<Option<InfinityDecomposition>> {
    let spherical = Classifier::new(sys).spherical_subsets(limits.spherical_poset)?;
    Ok(split_within(sys, &spherical, sys.generators()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Ends {
    Zero,
    One,
    Two,
    Infinite,
}

impl Ends {
    pub fn as_json(self) -> Value {
        match self {
            Ends::Zero => json!(0),
            Ends::One => json!(1),
            Ends::Two => json!(2),
            Ends::Infinite => json!("inf"),
        }
    }
}

impl fmt::Display for Ends {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Ends::Zero => "0",
            Ends::One => "1",
            Ends::Two => "2",
            Ends::Infinite => "inf",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndsCount {
    pub value: Ends,
    /// Rules that fired, in order.
    pub provenance: Vec<&'static str>,
}

pub fn ends(sys: &CoxeterSystem, limits: &Limits) -> Result<EndsCount> {
    let mut c = Classifier::new(sys);
    if c.is_spherical(sys.generators()) {
        return Ok(EndsCount { value: Ends::Zero, provenance: vec!["SPHERICAL"] });
    }
    let spherical = c.spherical_subsets(limits.spherical_poset)?;
    if split_within(sys, &spherical, sys.generators()).is_none() {
        return Ok(EndsCount { value: Ends::One, provenance: vec!["XI_J_ROUTE"] });
    }
    let infinite: Vec<SpecialSubset> =
        sys.irreducible_components().into_iter().filter(|&k| !c.is_spherical(k)).collect();
    let two = match infinite.as_slice() {
        [k] => c.component_type(*k) == Some(TypeLabel::Affine(crate::catalog::AffineType::A(1))),
        _ => false,
    };
    Ok(EndsCount {
        value: if two { Ends::Two } else { Ends::Infinite },
        provenance: vec!["XI_J_ROUTE", "COMPONENT_RULE"],
    })
}

/// Outcome of a chordality test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Chordality {
    /// A perfect elimination ordering (reverse LexBFS order).
    Chordal(Vec<usize>),
    /// A chordless cycle of length at least four, in cyclic order.
    NotChordal(Vec<usize>),
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal(_))
    }
}

/// Lexicographic breadth-first search; returns the visit order.
pub fn lex_bfs(g: &SimpleGraph) -> Vec<usize> {
    let n = g.len();
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut done = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let v = (0..n)
            .filter(|&v| !done[v])
            .max_by(|&a, &b| labels[a].cmp(&labels[b]).then(b.cmp(&a)))
            .expect("unvisited vertex");
        done[v] = true;
        order.push(v);
        for &w in g.neighbours(v) {
            if !done[w] {
                labels[w].push(n - step);
            }
        }
    }
    order
}

fn later_neighbours(g: &SimpleGraph, order: &[usize]) -> Vec<Vec<usize>> {
    let mut pos = vec![0; g.len()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    order
        .iter()
        .map(|&v| {
            let mut ns: Vec<usize> = g.neighbours(v).iter().copied().filter(|&w| pos[w] > pos[v]).collect();
            ns.sort_unstable_by_key(|&w| pos[w]);
            ns
        })
        .collect()
}

/// Whether `order` is a perfect elimination ordering of `g`.
pub fn is_perfect_elimination_order(g: &SimpleGraph, order: &[usize]) -> bool {
    later_neighbours(g, order)
        .iter()
        .all(|ns| ns.iter().enumerate().all(|(i, &a)| ns[i + 1..].iter().all(|&b| g.has_edge(a, b))))
}

fn chordless_cycle(g: &SimpleGraph) -> Option<Vec<usize>> {
    for v in 0..g.len() {
        let ns: Vec<usize> = g.neighbours(v).iter().copied().collect();
        for (i, &x) in ns.iter().enumerate() {
            for &y in &ns[i + 1..] {
                if g.has_edge(x, y) {
                    continue;
                }
                let mut blocked = vec![false; g.len()];
                blocked[v] = true;
                for &w in &ns {
                    blocked[w] = w != x && w != y;
                }
                if let Some(path) = g.shortest_path(x, y, &blocked) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

pub fn is_chordal(g: &SimpleGraph) -> Chordality {
    let mut order = lex_bfs(g);
    order.reverse();
    if is_perfect_elimination_order(g, &order) {
        Chordality::Chordal(order)
    } else {
        Chordality::NotChordal(chordless_cycle(g).expect("a graph without a perfect elimination order has a chordless cycle"))
    }
}

/// Maximal cliques of a chordal graph read off a perfect elimination ordering,
/// each sorted, ordered by smallest vertex.
pub fn chordal_maximal_cliques(g: &SimpleGraph, peo: &[usize]) -> Vec<Vec<usize>> {
    let mut cands: Vec<Vec<usize>> = peo
        .iter()
        .zip(later_neighbours(g, peo))
        .map(|(&v, mut ns)| {
            ns.push(v);
            ns.sort_unstable();
            ns
        })
        .collect();
    cands.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    let mut out: Vec<Vec<usize>> = Vec::new();
    for c in cands {
        if !out.iter().any(|m| is_sub(&c, m)) {
            out.push(c);
        }
    }
    out.sort();
    out
}

fn is_sub(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_ok())
}

fn meet(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().copied().filter(|x| b.binary_search(x).is_ok()).collect()
}

/// Maximal cliques of an arbitrary graph (Bron–Kerbosch with pivoting),
/// each sorted, ordered lexicographically.
pub fn maximal_cliques(g: &SimpleGraph) -> Vec<Vec<usize>> {
    fn expand(g: &SimpleGraph, r: &mut Vec<usize>, p: Vec<usize>, x: Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if p.is_empty() && x.is_empty() {
            let mut c = r.clone();
            c.sort_unstable();
            out.push(c);
            return;
        }
        let pivot = p
            .iter()
            .chain(&x)
            .copied()
            .max_by_key(|&u| p.iter().filter(|&&w| g.has_edge(u, w)).count())
            .expect("p or x non-empty");
        let mut p = p;
        let mut x = x;
        let cands: Vec<usize> = p.iter().copied().filter(|&v| !g.has_edge(pivot, v)).collect();
        for v in cands {
            let np = p.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
            let nx = x.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
            r.push(v);
            expand(g, r, np, nx, out);
            r.pop();
            p.retain(|&w| w != v);
            x.push(v);
        }
    }
    let mut out = Vec::new();
    if g.is_empty() {
        return out;
    }
    expand(g, &mut Vec::new(), (0..g.len()).collect(), Vec::new(), &mut out);
    out.sort();
    out
}

/// A spanning tree on the maximal cliques of a chordal graph with the
/// clique-intersection property.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueTree {
    pub cliques: Vec<Vec<usize>>,
    /// `(i, j, cliques[i] ∩ cliques[j])`.
    pub edges: Vec<(usize, usize, Vec<usize>)>,
}

impl CliqueTree {
    /// Tree path between two cliques, inclusive.
    pub fn path(&self, from: usize, to: usize) -> Vec<usize> {
        let mut t = SimpleGraph::new(self.cliques.len());
        for &(a, b, _) in &self.edges {
            t.add_edge(a, b);
        }
        t.shortest_path(from, to, &vec![false; self.cliques.len()]).unwrap_or_default()
    }

    /// For every pair of cliques, their intersection lies in every clique on the path between them.
    pub fn has_intersection_property(&self) -> bool {
        let k = self.cliques.len();
        if self.edges.len() + 1 != k.max(1) {
            return false;
        }
        (0..k).all(|i| {
            (i + 1..k).all(|j| {
                let m = meet(&self.cliques[i], &self.cliques[j]);
                let p = self.path(i, j);
                !p.is_empty() && p.iter().all(|&c| is_sub(&m, &self.cliques[c]))
            })
        })
    }
}

/// Maximum-weight spanning tree of the clique-intersection graph.
pub fn clique_tree(g: &SimpleGraph) -> Result<CliqueTree> {
    let Chordality::Chordal(peo) = is_chordal(g) else {
        return Err(Error::NotChordal);
    };
    let cliques = chordal_maximal_cliques(g, &peo);
    let k = cliques.len();
    let mut pairs: Vec<(usize, usize, Vec<usize>)> = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            pairs.push((i, j, meet(&cliques[i], &cliques[j])));
        }
    }
    pairs.sort_by(|a, b| b.2.len().cmp(&a.2.len()).then((a.0, a.1).cmp(&(b.0, b.1))));
    let mut uf = UnionFind::new(k);
    let edges: Vec<_> = pairs.into_iter().filter(|(i, j, _)| uf.union(*i, *j)).collect();
    let tree = CliqueTree { cliques, edges };
    if !tree.has_intersection_property() {
        return Err(Error::Internal("clique tree violates the intersection property".into()));
    }
    Ok(tree)
}

/// Tree (or graph) of special subgroups: vertex `v` carries `W_{vertex_sets[v]}`,
/// an edge `(a, b, E)` carries `W_E` with `E` contained in both endpoint sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphOfSpecialSubgroups {
    pub vertex_sets: Vec<SpecialSubset>,
    pub edges: Vec<(usize, usize, SpecialSubset)>,
    pub visual: bool,
}

impl GraphOfSpecialSubgroups {
    pub fn covers(&self, sys: &CoxeterSystem) -> bool {
        self.vertex_sets.iter().fold(SpecialSubset::EMPTY, |a, &v| a.union(v)) == sys.generators()
    }

    pub fn is_tree(&self) -> bool {
        let n = self.vertex_sets.len();
        if n == 0 || self.edges.len() + 1 != n {
            return false;
        }
        let mut uf = UnionFind::new(n);
        self.edges.iter().all(|&(a, b, _)| uf.union(a, b))
    }

    /// Edge sets lie inside both endpoint sets and edges reference existing vertices.
    pub fn is_well_formed(&self) -> bool {
        let n = self.vertex_sets.len();
        self.edges.iter().all(|&(a, b, e)| {
            a < n && b < n && a != b && e.is_subset(self.vertex_sets[a]) && e.is_subset(self.vertex_sets[b])
        })
    }

    pub fn to_json(&self, sys: &CoxeterSystem) -> Value {
        json!({
            "visual": self.visual,
            "vertices": self.vertex_sets.iter().enumerate()
                .map(|(i, &v)| json!({ "id": i, "generators": sys.subset_names(v) }))
                .collect::<Vec<_>>(),
            "edges": self.edges.iter()
                .map(|&(a, b, e)| json!({ "from": a, "to": b, "generators": sys.subset_names(e) }))
                .collect::<Vec<_>>(),
        })
    }

    /// Reads the format written by [`Self::to_json`]; `visual` defaults to false.
    pub fn from_json(sys: &CoxeterSystem, v: &Value) -> Result<Self> {
        let names = |x: &Value| -> Result<SpecialSubset> {
            let arr = x
                .get("generators")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Malformed("missing \"generators\" array".into()))?;
            let mut out = Vec::new();
            for n in arr {
                out.push(n.as_str().ok_or_else(|| Error::Malformed("generator names must be strings".into()))?);
            }
            sys.subset(&out)
        };
        let verts = v
            .get("vertices")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Malformed("missing \"vertices\" array".into()))?;
        let mut ids = Vec::new();
        let mut vertex_sets = Vec::new();
        for x in verts {
            let id = x.get("id").cloned().unwrap_or_else(|| json!(ids.len()));
            if ids.contains(&id) {
                return Err(Error::Malformed(format!("duplicate vertex id {id}")));
            }
            ids.push(id);
            vertex_sets.push(names(x)?);
        }
        let lookup = |x: &Value, key: &str| -> Result<usize> {
            let id = x.get(key).ok_or_else(|| Error::Malformed(format!("edge without \"{key}\"")))?;
            ids.iter().position(|i| i == id).ok_or_else(|| Error::Malformed(format!("unknown vertex id {id}")))
        };
        let mut edges = Vec::new();
        for x in v.get("edges").and_then(Value::as_array).map(Vec::as_slice).unwrap_or_default() {
            edges.push((lookup(x, "from")?, lookup(x, "to")?, names(x)?));
        }
        let visual = v.get("visual").and_then(Value::as_bool).unwrap_or(false);
        let g = GraphOfSpecialSubgroups { vertex_sets, edges, visual };
        if !g.is_well_formed() {
            return Err(Error::Invalid("edge groups must lie in both endpoint groups".into()));
        }
        Ok(g)
    }

    pub fn to_dot(&self, sys: &CoxeterSystem) -> String {
        let mut out = String::from("graph G {\n");
        for (i, &v) in self.vertex_sets.iter().enumerate() {
            out.push_str(&format!("  v{i} [label=\"W{}\"];\n", sys.format_subset(v)));
        }
        for &(a, b, e) in &self.edges {
            out.push_str(&format!("  v{a} -- v{b} [label=\"W{}\"];\n", sys.format_subset(e)));
        }
        out.push_str("}\n");
        out
    }
}

/// Condition required of every maximal clique of the presentation diagram.
pub enum Predicate<'a> {
    Spherical,
    SphericalOrAffine,
    AtMostOneEnd,
    User(&'a dyn Fn(&CoxeterSystem, SpecialSubset) -> bool),
}

impl Predicate<'_> {
    pub fn holds(&self, sys: &CoxeterSystem, c: &mut Classifier<'_>, j: SpecialSubset, limits: &Limits) -> Result<bool> {
        Ok(match self {
            Predicate::Spherical => c.is_spherical(j),
            Predicate::SphericalOrAffine => c.is_positive_type(j),
            Predicate::AtMostOneEnd => ends(&sys.restrict(j)?, limits)?.value <= Ends::One,
            Predicate::User(f) => f(sys, j),
        })
    }
}

fn presentation_graph(sys: &CoxeterSystem) -> SimpleGraph {
    sys.diagram(DiagramKind::Presentation).to_graph()
}

/// Clique tree of the presentation diagram as a visual decomposition, provided
/// every maximal clique satisfies `pred`.
pub fn visual_decomposition(
    sys: &CoxeterSystem,
    pred: &Predicate<'_>,
    limits: &Limits,
) -> Result<GraphOfSpecialSubgroups> {
    let tree = clique_tree(&presentation_graph(sys))?;
    let mut c = Classifier::new(sys);
    let set = |v: &[usize]| SpecialSubset::from_indices(v.iter().copied());
    for clique in &tree.cliques {
        let j = set(clique);
        if !pred.holds(sys, &mut c, j, limits)? {
            return Err(Error::CliquePredicateFailed(sys.format_subset(j)));
        }
    }
    Ok(GraphOfSpecialSubgroups {
        vertex_sets: tree.cliques.iter().map(|k| set(k)).collect(),
        edges: tree.edges.iter().map(|(a, b, e)| (*a, *b, set(e))).collect(),
        visual: true,
    })
}

pub fn is_virtually_free(sys: &CoxeterSystem) -> bool {
    let mut c = Classifier::new(sys);
    if c.is_spherical(sys.generators()) {
        return false;
    }
    let g = presentation_graph(sys);
    let Chordality::Chordal(peo) = is_chordal(&g) else {
        return false;
    };
    chordal_maximal_cliques(&g, &peo)
        .iter()
        .all(|k| c.is_spherical(SpecialSubset::from_indices(k.iter().copied())))
}

/// Splits repeatedly along spherical infinity-decompositions until no vertex
/// group admits one. Old edges are reattached to the side containing their group.
pub fn accessibility_tree(sys: &CoxeterSystem, limits: &Limits) -> Result<GraphOfSpecialSubgroups> {
    let spherical = Classifier::new(sys).spherical_subsets(limits.spherical_poset)?;
    let mut g = GraphOfSpecialSubgroups {
        vertex_sets: vec![sys.generators()],
        edges: Vec::new(),
        visual: true,
    };
    let mut v = 0;
    while v < g.vertex_sets.len() {
        let Some(d) = split_within(sys, &spherical, g.vertex_sets[v]) else {
            v += 1;
            continue;
        };
        let new = g.vertex_sets.len();
        g.vertex_sets[v] = d.down;
        g.vertex_sets.push(d.up);
        for e in g.edges.iter_mut() {
            for end in [&mut e.0, &mut e.1] {
                if *end == v && !e.2.is_subset(d.down) {
                    *end = new;
                }
            }
        }
        g.edges.push((v, new, d.meet));
    }
    Ok(g)
}
