//! Word problem, ShortLex normal forms and ball enumeration.
//!
//! `reduce` implements Tits' solution: a word is reduced iff no word in its
//! braid-move class contains two equal adjacent letters, and any two reduced
//! expressions of an element are connected by braid moves. The normal form is
//! the lexicographically least word of the reduced class, where letters are
//! ordered by generator index.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Limits, Result};
use crate::system::{CoxeterSystem, Label, SpecialSubset};

/// ShortLex-least reduced expression of a group element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct NormalForm {
    word: Vec<u8>,
}

impl NormalForm {
    pub fn identity() -> Self {
        NormalForm { word: Vec::new() }
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    pub fn letters(&self) -> SpecialSubset {
        SpecialSubset::from_indices(self.word.iter().map(|&g| g as usize))
    }

    pub fn display<'a>(&'a self, sys: &'a CoxeterSystem) -> WordDisplay<'a> {
        WordDisplay { sys, word: &self.word }
    }
}

pub struct WordDisplay<'a> {
    sys: &'a CoxeterSystem,
    word: &'a [u8],
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("e");
        }
        for (i, &g) in self.word.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(self.sys.name(g as usize))?;
        }
        Ok(())
    }
}

/// Parses a whitespace-separated word of generator names. `e` or the empty
/// string is the identity.
pub fn parse_word(sys: &CoxeterSystem, text: &str) -> Result<Vec<u8>> {
    text.split_whitespace()
        .filter(|t| *t != "e" || sys.index_of("e").is_ok())
        .map(|t| sys.index_of(t).map(|i| i as u8))
        .collect()
}

enum Class {
    Reduced(HashSet<Vec<u8>>),
    Shorter(Vec<u8>),
}

fn free_reduce(word: &[u8]) -> Vec<u8> {
    let mut out: Vec<u8> = Vec::with_capacity(word.len());
    for &g in word {
        if out.last() == Some(&g) {
            out.pop();
        } else {
            out.push(g);
        }
    }
    out
}

fn braid_moves(sys: &CoxeterSystem, x: &[u8], mut f: impl FnMut(Vec<u8>)) {
    for i in 0..x.len().saturating_sub(1) {
        let (s, t) = (x[i], x[i + 1]);
        let Label::Finite(m) = sys.label(s as usize, t as usize) else { continue };
        let m = m as usize;
        if i + m > x.len() {
            continue;
        }
        let alternates = (0..m).all(|k| x[i + k] == if k % 2 == 0 { s } else { t });
        if alternates {
            let mut y = x.to_vec();
            for k in 0..m {
                y[i + k] = if k % 2 == 0 { t } else { s };
            }
            f(y);
        }
    }
}

/// Explores the braid class of `word`, stopping at the first deletable pair.
fn explore(sys: &CoxeterSystem, word: Vec<u8>, cap: usize) -> Result<Class> {
    let mut seen = HashSet::from([word.clone()]);
    let mut queue = VecDeque::from([word]);
    while let Some(x) = queue.pop_front() {
        if let Some(i) = x.windows(2).position(|p| p[0] == p[1]) {
            let mut y = x;
            y.drain(i..i + 2);
            return Ok(Class::Shorter(y));
        }
        let mut overflow = false;
        braid_moves(sys, &x, |y| {
            if !seen.contains(&y) {
                seen.insert(y.clone());
                queue.push_back(y);
                overflow |= seen.len() > cap;
            }
        });
        if overflow {
            return Err(Error::LimitExceeded(format!("braid class larger than {cap} words")));
        }
    }
    Ok(Class::Reduced(seen))
}

/// Braid class of a word already known to be reduced.
fn reduced_class(sys: &CoxeterSystem, word: &[u8], cap: usize) -> Result<HashSet<Vec<u8>>> {
    match explore(sys, word.to_vec(), cap)? {
        Class::Reduced(c) => Ok(c),
        Class::Shorter(_) => Err(Error::Invalid("word is not reduced".into())),
    }
}

fn check_word(sys: &CoxeterSystem, word: &[u8]) -> Result<()> {
    match word.iter().find(|&&g| g as usize >= sys.rank()) {
        Some(g) => Err(Error::UnknownGenerator(format!("generator index {g}"))),
        None => Ok(()),
    }
}

/// ShortLex normal form of the element represented by `word`.
pub fn reduce(sys: &CoxeterSystem, word: &[u8], limits: &Limits) -> Result<NormalForm> {
    check_word(sys, word)?;
    let mut w = free_reduce(word);
    loop {
        match explore(sys, w, limits.braid_class)? {
            Class::Shorter(v) => w = free_reduce(&v),
            Class::Reduced(class) => {
                let word = class.into_iter().min().unwrap_or_default();
                return Ok(NormalForm { word });
            }
        }
    }
}

/// `nf · s`.
pub fn multiply(sys: &CoxeterSystem, nf: &NormalForm, s: usize, limits: &Limits) -> Result<NormalForm> {
    if s >= sys.rank() {
        return Err(Error::UnknownGenerator(format!("generator index {s}")));
    }
    let mut w = nf.word.clone();
    w.push(s as u8);
    reduce(sys, &w, limits)
}

/// Product of two elements.
pub fn product(sys: &CoxeterSystem, u: &NormalForm, v: &NormalForm, limits: &Limits) -> Result<NormalForm> {
    let w: Vec<u8> = u.word.iter().chain(&v.word).copied().collect();
    reduce(sys, &w, limits)
}

pub fn inverse(sys: &CoxeterSystem, nf: &NormalForm, limits: &Limits) -> Result<NormalForm> {
    let w: Vec<u8> = nf.word.iter().rev().copied().collect();
    reduce(sys, &w, limits)
}

/// Right descent set `{s : ℓ(ws) < ℓ(w)}`: the last letters occurring in
/// the reduced braid class.
pub fn descent_set(sys: &CoxeterSystem, nf: &NormalForm, limits: &Limits) -> Result<SpecialSubset> {
    check_word(sys, &nf.word)?;
    let class = reduced_class(sys, &nf.word, limits.braid_class)?;
    Ok(SpecialSubset::from_indices(class.iter().filter_map(|w| w.last().map(|&g| g as usize))))
}

/// All reduced expressions of an element.
pub fn reduced_expressions(sys: &CoxeterSystem, nf: &NormalForm, limits: &Limits) -> Result<Vec<Vec<u8>>> {
    let mut v: Vec<_> = reduced_class(sys, &nf.word, limits.braid_class)?.into_iter().collect();
    v.sort();
    Ok(v)
}

/// The ball of radius `R` around the identity in the Cayley graph.
#[derive(Debug, Clone)]
pub struct BallCensus {
    pub radius: usize,
    /// Ordered by length, then lexicographically.
    pub elements: Vec<NormalForm>,
    pub sphere_sizes: Vec<usize>,
    pub descent_counts: BTreeMap<SpecialSubset, usize>,
    /// Descent set of each element.
    pub descents: Vec<SpecialSubset>,
    /// `neighbours[i][s]` is the index of `elements[i] · s` when it lies in the ball.
    pub neighbours: Vec<Vec<Option<usize>>>,
    index: HashMap<NormalForm, usize>,
}

impl BallCensus {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, nf: &NormalForm) -> Option<usize> {
        self.index.get(nf).copied()
    }

    /// Index of the first element of the given length.
    pub fn sphere_start(&self, len: usize) -> usize {
        self.sphere_sizes[..len.min(self.sphere_sizes.len())].iter().sum()
    }

    /// Minimal-length representative of `w W_J`, by right division inside the ball.
    pub fn coset_min(&self, mut w: usize, j: SpecialSubset) -> usize {
        loop {
            match self.descents[w].intersection(j).first() {
                Some(s) => w = self.neighbours[w][s].expect("ball is closed under descent"),
                None => return w,
            }
        }
    }
}

pub fn ball(sys: &CoxeterSystem, radius: usize, limits: &Limits) -> Result<BallCensus> {
    let n = sys.rank();
    let mut elements = vec![NormalForm::identity()];
    let mut index = HashMap::from([(NormalForm::identity(), 0usize)]);
    let mut sphere_sizes = vec![1usize];
    let mut descents = Vec::new();
    let mut neighbours: Vec<Vec<Option<usize>>> = vec![vec![None; n]];
    let mut start = 0;
    for k in 0..=radius {
        let end = elements.len();
        let mut pending: BTreeMap<Vec<u8>, Vec<(usize, usize)>> = BTreeMap::new();
        for w in start..end {
            let class = reduced_class(sys, &elements[w].word, limits.braid_class)?;
            let desc = SpecialSubset::from_indices(class.iter().filter_map(|x| x.last().map(|&g| g as usize)));
            descents.push(desc);
            if k == radius {
                continue;
            }
            for s in 0..n {
                if desc.contains(s) {
                    continue;
                }
                let mut x = elements[w].word.clone();
                x.push(s as u8);
                let next = reduced_class(sys, &x, limits.braid_class)?.into_iter().min().expect("non-empty class");
                pending.entry(next).or_default().push((w, s));
            }
        }
        if k == radius {
            break;
        }
        if elements.len() + pending.len() > limits.ball_elements {
            return Err(Error::LimitExceeded(format!("ball exceeds {} elements", limits.ball_elements)));
        }
        sphere_sizes.push(pending.len());
        for (word, links) in pending {
            let id = elements.len();
            let nf = NormalForm { word };
            index.insert(nf.clone(), id);
            elements.push(nf);
            neighbours.push(vec![None; n]);
            for (w, s) in links {
                neighbours[w][s] = Some(id);
                neighbours[id][s] = Some(w);
            }
        }
        start = end;
        if sphere_sizes[k + 1] == 0 {
            // Finite group exhausted; the remaining spheres are empty.
            sphere_sizes.resize(radius + 1, 0);
            break;
        }
    }
    let mut descent_counts = BTreeMap::new();
    for &d in &descents {
        *descent_counts.entry(d).or_insert(0) += 1;
    }
    Ok(BallCensus { radius, elements, sphere_sizes, descent_counts, descents, neighbours, index })
}

/// Thickness parameters `q_s >= 2`, constant on conjugate generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThicknessVector {
    values: Vec<u64>,
}

impl ThicknessVector {
    /// `values[i]` is `q` of generator `i`.
    pub fn new(sys: &CoxeterSystem, values: Vec<u64>) -> Result<Self> {
        if values.len() != sys.rank() {
            return Err(Error::InvalidThickness(format!(
                "expected {} values, got {}",
                sys.rank(),
                values.len()
            )));
        }
        for (i, &q) in values.iter().enumerate() {
            if q < 2 {
                return Err(Error::InvalidThickness(format!("q_{} = {q} < 2", sys.name(i))));
            }
        }
        for i in 0..sys.rank() {
            for j in i + 1..sys.rank() {
                if let Label::Finite(m) = sys.label(i, j) {
                    if m % 2 == 1 && values[i] != values[j] {
                        return Err(Error::InvalidThickness(format!(
                            "q_{} != q_{} although m = {m} is odd",
                            sys.name(i),
                            sys.name(j)
                        )));
                    }
                }
            }
        }
        Ok(ThicknessVector { values })
    }

    pub fn uniform(sys: &CoxeterSystem, q: u64) -> Result<Self> {
        Self::new(sys, vec![q; sys.rank()])
    }

    /// From `name = q` pairs; every generator must be assigned.
    pub fn from_pairs(sys: &CoxeterSystem, pairs: &[(&str, u64)]) -> Result<Self> {
        let mut values = vec![0; sys.rank()];
        for &(name, q) in pairs {
            values[sys.index_of(name)?] = q;
        }
        if let Some(i) = values.iter().position(|&q| q == 0) {
            return Err(Error::InvalidThickness(format!("no value for {}", sys.name(i))));
        }
        Self::new(sys, values)
    }

    pub fn get(&self, s: usize) -> u64 {
        self.values[s]
    }

    /// `q_w` along any reduced expression, or `None` on overflow.
    pub fn weight(&self, word: &[u8]) -> Option<u64> {
        word.iter().try_fold(1u64, |acc, &g| acc.checked_mul(self.values[g as usize]))
    }
}

/// `R(n) = #{w : q_w = n}` for `n <= max`, nonzero entries only.
pub fn double_coset_counts(
    sys: &CoxeterSystem,
    q: &ThicknessVector,
    max: u64,
    limits: &Limits,
) -> Result<BTreeMap<u64, u64>> {
    if max < 1 {
        return Err(Error::Invalid("N must be at least 1".into()));
    }
    if q.values.len() != sys.rank() {
        return Err(Error::InvalidThickness("thickness vector belongs to another system".into()));
    }
    // q_w >= 2^ℓ(w), so only lengths up to floor(log2 N) contribute.
    let radius = (63 - max.leading_zeros()) as usize;
    let census = ball(sys, radius, limits)?;
    let mut out = BTreeMap::new();
    for nf in &census.elements {
        if let Some(n) = q.weight(&nf.word).filter(|&n| n <= max) {
            *out.entry(n).or_insert(0) += 1;
        }
    }
    Ok(out)
}

/// `Σ_{ℓ(w) <= R} t^ℓ(w)` as an exact rational, for `0 < t <= 1`.
pub fn poincare_partial(sys: &CoxeterSystem, radius: usize, t: &BigRational, limits: &Limits) -> Result<BigRational> {
    if !t.is_positive() || *t > BigRational::one() {
        return Err(Error::Invalid(format!("t = {t} must satisfy 0 < t <= 1")));
    }
    let census = ball(sys, radius, limits)?;
    Ok(growth_sum(&census.sphere_sizes, t))
}

pub fn growth_sum(sphere_sizes: &[usize], t: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    let mut pow = BigRational::one();
    for &c in sphere_sizes {
        acc += &pow * BigRational::from_integer(BigInt::from(c));
        pow *= t;
    }
    acc
}

/// Smallest `k` with `2^k > |S|`; the growth series converges at `t = 2^-k`.
pub fn convergence_exponent(sys: &CoxeterSystem) -> u32 {
    let mut k = 0;
    while (1u64 << k) <= sys.rank() as u64 {
        k += 1;
    }
    k
}
