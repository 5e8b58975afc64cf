//! Coxeter systems, special subsets and the two labelled diagrams.
//!
//! A [`CoxeterSystem`] is stored as its full symmetric Coxeter matrix over an
//! ordered list of generator names. The order fixed at construction time is
//! used for every deterministic tie-break downstream (ShortLex order, subset
//! scans, clique orderings).

use std::collections::HashMap;
use std::fmt;

use serde::de::{Deserializer, MapAccess, Visitor};
use serde::Deserialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// Largest supported generating set; subsets are 64-bit masks.
pub const MAX_GENERATORS: usize = 64;

/// An entry `m_st` of a Coxeter matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Finite(u32),
    Infinity,
}

impl Label {
    pub fn is_finite(self) -> bool {
        matches!(self, Label::Finite(_))
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Label::Finite(m) => Some(m),
            Label::Infinity => None,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Finite(m) => write!(f, "{m}"),
            Label::Infinity => f.write_str("inf"),
        }
    }
}

/// A subset `J` of the generating set, as a bitmask over generator indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SpecialSubset(pub u64);

impl SpecialSubset {
    pub const EMPTY: SpecialSubset = SpecialSubset(0);

    pub fn full(rank: usize) -> Self {
        if rank >= 64 {
            SpecialSubset(u64::MAX)
        } else {
            SpecialSubset((1u64 << rank) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        SpecialSubset(1 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        SpecialSubset(it.into_iter().fold(0, |acc, i| acc | (1 << i)))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 & (1 << i) != 0
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn union(self, other: Self) -> Self {
        SpecialSubset(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        SpecialSubset(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        SpecialSubset(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Member indices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i)
            }
        })
    }

    /// All subsets of `self`, in increasing numeric order of their masks.
    pub fn subsets(self) -> impl Iterator<Item = SpecialSubset> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full { None } else { Some((cur.wrapping_sub(full)) & full) };
            Some(SpecialSubset(cur))
        })
    }
}

/// Which labelled graph to draw from a Coxeter matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagramKind {
    /// Edge iff `m_st != 2`.
    Coxeter,
    /// Edge iff `m_st != inf`.
    Presentation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramGraph {
    pub kind: DiagramKind,
    pub vertices: Vec<String>,
    /// `(i, j, m_ij)` with `i < j`, in lexicographic order of `(i, j)`.
    pub edges: Vec<(usize, usize, Label)>,
}

impl DiagramGraph {
    pub fn to_graph(&self) -> SimpleGraph {
        let mut g = SimpleGraph::new(self.vertices.len());
        for &(i, j, _) in &self.edges {
            g.add_edge(i, j);
        }
        g
    }
}

/// A Coxeter system `(W, S)` given by its Coxeter matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoxeterSystem {
    names: Vec<String>,
    matrix: Vec<Label>,
}

impl CoxeterSystem {
    /// Builds a system from generator names and the off-diagonal labels that
    /// differ from 2. Pairs may be listed in either order; repeating a pair
    /// with a different label is an error.
    pub fn new<S: AsRef<str>>(names: &[S], labels: &[(&str, &str, Label)]) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        let mut sys = Self::with_names(names)?;
        let mut seen: HashMap<(usize, usize), Label> = HashMap::new();
        for &(a, b, l) in labels {
            let i = sys.index_of(a)?;
            let j = sys.index_of(b)?;
            sys.set_checked(i, j, l, &mut seen)?;
        }
        Ok(sys)
    }

    /// Builds a system from a full matrix, validating every entry.
    pub fn from_matrix<S: AsRef<str>>(names: &[S], matrix: &[Vec<Label>]) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        let n = names.len();
        if matrix.len() != n || matrix.iter().any(|r| r.len() != n) {
            return Err(Error::Malformed("matrix shape does not match generators".into()));
        }
        let mut sys = Self::with_names(names)?;
        for i in 0..n {
            for j in 0..n {
                if matrix[i][j] != matrix[j][i] {
                    return Err(Error::InvalidLabel(format!("matrix not symmetric at ({i},{j})")));
                }
                validate_label(i == j, matrix[i][j], &sys.names[i], &sys.names[j])?;
                sys.matrix[i * n + j] = matrix[i][j];
            }
        }
        Ok(sys)
    }

    fn with_names(names: Vec<String>) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::Empty);
        }
        if names.len() > MAX_GENERATORS {
            return Err(Error::Malformed(format!(
                "at most {MAX_GENERATORS} generators are supported"
            )));
        }
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return Err(Error::DuplicateGenerator(a.clone()));
            }
        }
        Ok(Self::unchecked(names))
    }

    fn unchecked(names: Vec<String>) -> Self {
        let n = names.len();
        let mut matrix = vec![Label::Finite(2); n * n];
        for i in 0..n {
            matrix[i * n + i] = Label::Finite(1);
        }
        CoxeterSystem { names, matrix }
    }

    fn set_checked(
        &mut self,
        i: usize,
        j: usize,
        l: Label,
        seen: &mut HashMap<(usize, usize), Label>,
    ) -> Result<()> {
        validate_label(i == j, l, &self.names[i], &self.names[j])?;
        let key = (i.min(j), i.max(j));
        if let Some(prev) = seen.insert(key, l) {
            if prev != l {
                return Err(Error::Malformed(format!(
                    "conflicting labels for pair {},{}",
                    self.names[key.0], self.names[key.1]
                )));
            }
        }
        let n = self.rank();
        self.matrix[i * n + j] = l;
        self.matrix[j * n + i] = l;
        Ok(())
    }

    /// The trivial system with no generators (`W_∅`).
    pub fn empty() -> Self {
        CoxeterSystem { names: Vec::new(), matrix: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn label(&self, i: usize, j: usize) -> Label {
        self.matrix[i * self.rank() + j]
    }

    pub fn generators(&self) -> SpecialSubset {
        SpecialSubset::full(self.rank())
    }

    pub fn subset<S: AsRef<str>>(&self, names: &[S]) -> Result<SpecialSubset> {
        let mut out = SpecialSubset::EMPTY;
        for n in names {
            out.insert(self.index_of(n.as_ref())?);
        }
        Ok(out)
    }

    pub fn subset_names(&self, j: SpecialSubset) -> Vec<String> {
        j.iter().map(|i| self.names[i].clone()).collect()
    }

    /// `{a,b}` style rendering in generator order.
    pub fn format_subset(&self, j: SpecialSubset) -> String {
        format!("{{{}}}", self.subset_names(j).join(","))
    }

    pub fn check_subset(&self, j: SpecialSubset) -> Result<()> {
        if j.is_subset(self.generators()) {
            Ok(())
        } else {
            Err(Error::UnknownGenerator(format!("index mask {:#x} outside S", j.0)))
        }
    }

    pub fn diagram(&self, kind: DiagramKind) -> DiagramGraph {
        let n = self.rank();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let l = self.label(i, j);
                let present = match kind {
                    DiagramKind::Coxeter => l != Label::Finite(2),
                    DiagramKind::Presentation => l != Label::Infinity,
                };
                if present {
                    edges.push((i, j, l));
                }
            }
        }
        DiagramGraph { kind, vertices: self.names.clone(), edges }
    }

    /// Neighbours of `i` in the Coxeter diagram, as a mask.
    pub fn coxeter_neighbours(&self, i: usize) -> SpecialSubset {
        SpecialSubset::from_indices((0..self.rank()).filter(|&j| j != i && self.label(i, j) != Label::Finite(2)))
    }

    /// Neighbours of `i` in the presentation diagram, as a mask.
    pub fn presentation_neighbours(&self, i: usize) -> SpecialSubset {
        SpecialSubset::from_indices((0..self.rank()).filter(|&j| j != i && self.label(i, j) != Label::Infinity))
    }

    /// Connected components of the Coxeter diagram restricted to `within`,
    /// ordered by their first generator.
    pub fn components_of(&self, within: SpecialSubset) -> Vec<SpecialSubset> {
        let mut left = within;
        let mut out = Vec::new();
        while let Some(start) = left.first() {
            let mut comp = SpecialSubset::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = SpecialSubset::EMPTY;
                for v in frontier.iter() {
                    next = next.union(self.coxeter_neighbours(v));
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

    pub fn irreducible_components(&self) -> Vec<SpecialSubset> {
        self.components_of(self.generators())
    }

    pub fn is_irreducible(&self) -> bool {
        self.irreducible_components().len() == 1
    }

    /// The induced system `(W_J, J)`. The empty subset yields [`CoxeterSystem::empty`].
    pub fn restrict(&self, j: SpecialSubset) -> Result<CoxeterSystem> {
        self.check_subset(j)?;
        let idx: Vec<usize> = j.iter().collect();
        let names: Vec<String> = idx.iter().map(|&i| self.names[i].clone()).collect();
        let mut out = Self::unchecked(names);
        let n = idx.len();
        for (a, &i) in idx.iter().enumerate() {
            for (b, &k) in idx.iter().enumerate() {
                out.matrix[a * n + b] = self.label(i, k);
            }
        }
        Ok(out)
    }

    /// Serializes to the JSON input format: labels for every pair with
    /// `m != 2`, keys in generator order.
    pub fn to_json_value(&self) -> Value {
        let mut labels = serde_json::Map::new();
        for (i, j, l) in self.diagram(DiagramKind::Coxeter).edges {
            let v = match l {
                Label::Finite(m) => Value::from(m),
                Label::Infinity => Value::from("inf"),
            };
            labels.insert(format!("{},{}", self.names[i], self.names[j]), v);
        }
        let mut root = serde_json::Map::new();
        root.insert("generators".into(), Value::from(self.names.clone()));
        root.insert("labels".into(), Value::Object(labels));
        Value::Object(root)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("json value serializes")
    }
}

fn validate_label(diagonal: bool, l: Label, a: &str, b: &str) -> Result<()> {
    match (diagonal, l) {
        (true, Label::Finite(1)) => Ok(()),
        (true, _) => Err(Error::InvalidLabel(format!("diagonal entry for {a} must be 1, got {l}"))),
        (false, Label::Finite(m)) if m < 2 => {
            Err(Error::InvalidLabel(format!("label for {a},{b} must be >= 2 or inf, got {m}")))
        }
        _ => Ok(()),
    }
}

/// Label entries in document order; literal duplicate keys are kept so they
/// can be reported.
struct LabelEntries(Vec<(String, Value)>);

impl<'de> Deserialize<'de> for LabelEntries {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = LabelEntries;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an object of pair labels")
            }
            fn visit_map<A: MapAccess<'de>>(self, mut m: A) -> std::result::Result<LabelEntries, A::Error> {
                let mut out = Vec::new();
                while let Some((k, v)) = m.next_entry::<String, Value>()? {
                    out.push((k, v));
                }
                Ok(LabelEntries(out))
            }
        }
        d.deserialize_map(V)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SystemDoc {
    generators: Vec<String>,
    #[serde(default)]
    labels: Option<LabelEntries>,
}

fn parse_label_value(key: &str, v: &Value) -> Result<Label> {
    match v {
        Value::String(s) if matches!(s.as_str(), "inf" | "infinity" | "∞") => Ok(Label::Infinity),
        Value::Number(n) => match n.as_i64() {
            Some(m) if m >= 1 && m <= u32::MAX as i64 => Ok(Label::Finite(m as u32)),
            Some(m) => Err(Error::InvalidLabel(format!("label {m} for {key}"))),
            None => Err(Error::Malformed(format!("label for {key} is not an integer"))),
        },
        other => Err(Error::Malformed(format!("label for {key} must be an integer or \"inf\", got {other}"))),
    }
}

/// Parses the JSON input format
/// `{"generators": [...], "labels": {"x,y": m | "inf", ...}}`.
/// Unlisted off-diagonal pairs default to 2.
pub fn parse_system(text: &str) -> Result<CoxeterSystem> {
    let doc: SystemDoc = serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
    let mut sys = CoxeterSystem::with_names(doc.generators)?;
    let mut seen = HashMap::new();
    for (key, v) in doc.labels.map(|l| l.0).unwrap_or_default() {
        let parts: Vec<&str> = key.split(',').map(str::trim).collect();
        if parts.len() != 2 {
            return Err(Error::Malformed(format!("pair key `{key}` must be two names joined by a comma")));
        }
        let i = sys.index_of(parts[0])?;
        let j = sys.index_of(parts[1])?;
        let l = parse_label_value(&key, &v)?;
        sys.set_checked(i, j, l, &mut seen)?;
    }
    Ok(sys)
}

#[cfg(test)]
mod tests {
    use super::*;

    const D_INF: &str = r#"{"generators":["s","t"],"labels":{"s,t":"inf"}}"#;
    const AFF_A2: &str = r#"{"generators":["a","b","c"],"labels":{"a,b":3,"b,c":3,"a,c":3}}"#;

    #[test]
    fn parses_examples() {
        let d = parse_system(D_INF).unwrap();
        assert_eq!(d.label(0, 1), Label::Infinity);
        assert_eq!(d.label(1, 0), Label::Infinity);
        let a = parse_system(AFF_A2).unwrap();
        assert!((0..3).all(|i| (0..3).all(|j| i == j || a.label(i, j) == Label::Finite(3))));
        let bad = parse_system(r#"{"generators":["a"],"labels":{"a,a":2}}"#);
        assert!(matches!(bad, Err(Error::InvalidLabel(_))));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_system("{"), Err(Error::Malformed(_))));
        assert!(matches!(
            parse_system(r#"{"generators":["a","a"]}"#),
            Err(Error::DuplicateGenerator(_))
        ));
        assert!(matches!(
            parse_system(r#"{"generators":["a","b"],"labels":{"a,b":1}}"#),
            Err(Error::InvalidLabel(_))
        ));
        assert!(matches!(
            parse_system(r#"{"generators":["a","b"],"labels":{"a,b":0}}"#),
            Err(Error::InvalidLabel(_))
        ));
        assert!(matches!(
            parse_system(r#"{"generators":["a","b"],"labels":{"a,b":3,"b,a":4}}"#),
            Err(Error::Malformed(_))
        ));
        assert!(matches!(
            parse_system(r#"{"generators":["a","b"],"labels":{"a,b":3,"a,b":4}}"#),
            Err(Error::Malformed(_))
        ));
        // Agreeing repeats are harmless.
        assert!(parse_system(r#"{"generators":["a","b"],"labels":{"a,b":3,"b,a":3}}"#).is_ok());
        assert!(matches!(
            parse_system(r#"{"generators":["a","b"],"labels":{"a,z":3}}"#),
            Err(Error::UnknownGenerator(_))
        ));
        assert!(matches!(parse_system(r#"{"generators":[]}"#), Err(Error::Empty)));
    }

    #[test]
    fn diagrams() {
        let d = parse_system(D_INF).unwrap();
        let p = d.diagram(DiagramKind::Presentation);
        assert_eq!(p.vertices.len(), 2);
        assert!(p.edges.is_empty());
        let c = d.diagram(DiagramKind::Coxeter);
        assert_eq!(c.edges, vec![(0, 1, Label::Infinity)]);
        let a = parse_system(AFF_A2).unwrap();
        let p = a.diagram(DiagramKind::Presentation);
        assert_eq!(p.edges.len(), 3);
        assert!(p.edges.iter().all(|e| e.2 == Label::Finite(3)));
    }

    #[test]
    fn components() {
        let a1a1 = CoxeterSystem::new(&["s", "t"], &[]).unwrap();
        assert_eq!(
            a1a1.irreducible_components(),
            vec![SpecialSubset::singleton(0), SpecialSubset::singleton(1)]
        );
        let a = parse_system(AFF_A2).unwrap();
        assert_eq!(a.irreducible_components(), vec![SpecialSubset(0b111)]);
        let s = CoxeterSystem::new(&["a", "b", "c", "d"], &[("a", "b", Label::Infinity)]).unwrap();
        assert_eq!(
            s.irreducible_components(),
            vec![SpecialSubset(0b0011), SpecialSubset(0b0100), SpecialSubset(0b1000)]
        );
    }

    #[test]
    fn restriction() {
        let a = parse_system(AFF_A2).unwrap();
        let r = a.restrict(a.subset(&["a", "b"]).unwrap()).unwrap();
        assert_eq!(r.names(), &["a".to_string(), "b".to_string()]);
        assert_eq!(r.label(0, 1), Label::Finite(3));
        let d = parse_system(D_INF).unwrap();
        let s = d.restrict(SpecialSubset::singleton(0)).unwrap();
        assert_eq!(s.rank(), 1);
        let e = d.restrict(SpecialSubset::EMPTY).unwrap();
        assert!(e.is_empty());
        assert_eq!(e, CoxeterSystem::empty());
        assert!(matches!(d.restrict(SpecialSubset(0b100)), Err(Error::UnknownGenerator(_))));
    }

    #[test]
    fn serialization_order() {
        let a = parse_system(r#"{"generators":["b","a","c"],"labels":{"c,b":"inf","a,c":5}}"#).unwrap();
        assert_eq!(a.to_json(), r#"{"generators":["b","a","c"],"labels":{"b,c":"inf","a,c":5}}"#);
    }

    #[test]
    fn subset_enumeration() {
        let s = SpecialSubset(0b1010);
        let all: Vec<_> = s.subsets().collect();
        assert_eq!(all, vec![SpecialSubset(0), SpecialSubset(0b10), SpecialSubset(0b1000), SpecialSubset(0b1010)]);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![1, 3]);
    }
}
