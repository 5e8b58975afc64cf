//! Corpora and independent oracles shared by the integration and acceptance tests.
#![allow(dead_code)]

use std::collections::{HashMap, VecDeque};

use coxeter_weyl::{CoxeterSystem, Label, SimpleGraph};
use rand::Rng;

pub const INF: Label = Label::Infinity;

pub fn f(m: u32) -> Label {
    Label::Finite(m)
}

pub fn system(n: usize, labels: &[(usize, usize, Label)]) -> CoxeterSystem {
    let names: Vec<String> = (0..n).map(|i| format!("s{i}")).collect();
    let e: Vec<(&str, &str, Label)> =
        labels.iter().map(|&(a, b, l)| (names[a].as_str(), names[b].as_str(), l)).collect();
    CoxeterSystem::new(&names, &e).expect("valid system")
}

/// Every rank-3 system with pair labels drawn from `alphabet`, as `(m_ab, m_bc, m_ca, system)`.
pub fn rank3_corpus(alphabet: &[Label]) -> Vec<([Label; 3], CoxeterSystem)> {
    let mut out = Vec::new();
    for &x in alphabet {
        for &y in alphabet {
            for &z in alphabet {
                out.push(([x, y, z], system(3, &[(0, 1, x), (1, 2, y), (2, 0, z)])));
            }
        }
    }
    out
}

/// Every system of the given rank with pair labels drawn from `alphabet`.
pub fn all_systems(n: usize, alphabet: &[Label]) -> Vec<CoxeterSystem> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    let total = alphabet.len().pow(pairs.len() as u32);
    for mut code in 0..total {
        let mut labels = Vec::new();
        for &(i, j) in &pairs {
            labels.push((i, j, alphabet[code % alphabet.len()]));
            code /= alphabet.len();
        }
        out.push(system(n, &labels));
    }
    out
}

pub fn random_system(rng: &mut impl Rng, min_rank: usize, max_rank: usize) -> CoxeterSystem {
    const WEIGHTED: [Label; 10] = [
        Label::Finite(2),
        Label::Finite(2),
        Label::Finite(2),
        Label::Finite(3),
        Label::Finite(3),
        Label::Finite(4),
        Label::Finite(5),
        Label::Finite(6),
        Label::Infinity,
        Label::Infinity,
    ];
    let n = rng.gen_range(min_rank..=max_rank);
    let mut labels = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            labels.push((i, j, WEIGHTED[rng.gen_range(0..WEIGHTED.len())]));
        }
    }
    system(n, &labels)
}

/// A finite group given by permutation generators, with the shortlex-least
/// word of every element computed by breadth-first search in generator order.
pub struct PermutationOracle {
    pub gens: Vec<Vec<usize>>,
    pub shortlex: HashMap<Vec<usize>, Vec<u8>>,
}

impl PermutationOracle {
    pub fn new(gens: Vec<Vec<usize>>) -> Self {
        let degree = gens[0].len();
        let id: Vec<usize> = (0..degree).collect();
        let mut shortlex = HashMap::from([(id.clone(), Vec::new())]);
        let mut queue = VecDeque::from([id]);
        while let Some(p) = queue.pop_front() {
            let w = shortlex[&p].clone();
            for (s, g) in gens.iter().enumerate() {
                let q = right_act(&p, g);
                if !shortlex.contains_key(&q) {
                    let mut v = w.clone();
                    v.push(s as u8);
                    shortlex.insert(q.clone(), v);
                    queue.push_back(q);
                }
            }
        }
        PermutationOracle { gens, shortlex }
    }

    pub fn order(&self) -> usize {
        self.shortlex.len()
    }

    pub fn evaluate(&self, word: &[u8]) -> Vec<usize> {
        let mut p: Vec<usize> = (0..self.gens[0].len()).collect();
        for &s in word {
            p = right_act(&p, &self.gens[s as usize]);
        }
        p
    }

    pub fn normal_form(&self, word: &[u8]) -> &[u8] {
        &self.shortlex[&self.evaluate(word)]
    }
}

/// `p` followed by `g`, as maps on points.
fn right_act(p: &[usize], g: &[usize]) -> Vec<usize> {
    p.iter().map(|&x| g[x]).collect()
}

/// Dihedral group of order `2m` (m >= 3) acting on Z_m by `x -> -x` and `x -> 1 - x`.
pub fn dihedral_oracle(m: usize) -> PermutationOracle {
    let s = (0..m).map(|x| (m - x) % m).collect();
    let t = (0..m).map(|x| (m + 1 - x) % m).collect();
    PermutationOracle::new(vec![s, t])
}

/// A1 x A1 acting on two bits.
pub fn klein_oracle() -> PermutationOracle {
    PermutationOracle::new(vec![vec![1, 0, 3, 2], vec![2, 3, 0, 1]])
}

/// B_3 as signed permutations of {±1, ±2, ±3}; points `2i` and `2i+1` are `+i` and `-i`.
pub fn b3_oracle() -> PermutationOracle {
    let swap = |a: usize, b: usize| -> Vec<usize> {
        (0..6)
            .map(|p| {
                let (i, sign) = (p / 2, p % 2);
                let j = if i == a { b } else if i == b { a } else { i };
                2 * j + sign
            })
            .collect()
    };
    let negate_last: Vec<usize> = (0..6).map(|p| if p / 2 == 2 { p ^ 1 } else { p }).collect();
    PermutationOracle::new(vec![swap(0, 1), swap(1, 2), negate_last])
}

/// Brute force: some vertex subset of size >= 4 induces a cycle.
pub fn has_induced_long_cycle(g: &SimpleGraph) -> bool {
    let n = g.len();
    (0u32..1 << n).any(|mask| {
        if mask.count_ones() < 4 {
            return false;
        }
        let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let h = g.induced(&vs);
        (0..h.len()).all(|v| h.degree(v) == 2) && h.components().len() == 1
    })
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> SimpleGraph {
    let mut g = SimpleGraph::new(n);
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(a, b);
            }
        }
    }
    g
}

/// Checks the clique-intersection property by walking tree paths directly.
pub fn cip_holds(cliques: &[Vec<usize>], edges: &[(usize, usize, Vec<usize>)]) -> bool {
    let k = cliques.len();
    let mut adj = vec![Vec::new(); k];
    for &(a, b, _) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    for i in 0..k {
        let mut parent = vec![usize::MAX; k];
        parent[i] = i;
        let mut queue = VecDeque::from([i]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if parent[w] == usize::MAX {
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        for j in i + 1..k {
            if parent[j] == usize::MAX {
                return false;
            }
            let common: Vec<usize> = cliques[i].iter().copied().filter(|x| cliques[j].contains(x)).collect();
            let mut v = j;
            loop {
                if !common.iter().all(|x| cliques[v].contains(x)) {
                    return false;
                }
                if v == i {
                    break;
                }
                v = parent[v];
            }
        }
    }
    edges.len() + 1 == k.max(1)
}
