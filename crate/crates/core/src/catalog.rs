//! Recognition of spherical, affine and hyperbolic types.
//!
//! Irreducible components are matched against the classical finite and affine
//! diagram lists by labelled-graph isomorphism. Hyperbolicity is decided
//! combinatorially from the types of the maximal proper special subsets. The
//! signature of the geometric bilinear form is available as an independent
//! cross-check but never decides a classification.

use std::collections::HashMap;
use std::fmt;

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::system::{CoxeterSystem, Label, SpecialSubset};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SphericalType {
    A(usize),
    B(usize),
    D(usize),
    E(usize),
    F4,
    H(usize),
    I2(u32),
}

/// Affine types, indexed as usual by rank minus one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AffineType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E(usize),
    F4,
    G2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TypeLabel {
    Spherical(SphericalType),
    Affine(AffineType),
    HyperbolicCompact,
    HyperbolicNoncompact,
    OtherInfinite,
}

impl TypeLabel {
    pub fn is_spherical(self) -> bool {
        matches!(self, TypeLabel::Spherical(_))
    }

    pub fn is_affine(self) -> bool {
        matches!(self, TypeLabel::Affine(_))
    }

    pub fn is_hyperbolic(self) -> bool {
        matches!(self, TypeLabel::HyperbolicCompact | TypeLabel::HyperbolicNoncompact)
    }

    pub fn family(self) -> &'static str {
        match self {
            TypeLabel::Spherical(_) => "SPHERICAL",
            TypeLabel::Affine(_) => "AFFINE",
            TypeLabel::HyperbolicCompact => "HYPERBOLIC_COMPACT",
            TypeLabel::HyperbolicNoncompact => "HYPERBOLIC_NONCOMPACT",
            TypeLabel::OtherInfinite => "OTHER_INFINITE",
        }
    }
}

impl fmt::Display for SphericalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SphericalType::A(n) => write!(f, "A_{n}"),
            SphericalType::B(n) => write!(f, "B_{n}"),
            SphericalType::D(n) => write!(f, "D_{n}"),
            SphericalType::E(n) => write!(f, "E_{n}"),
            SphericalType::F4 => f.write_str("F_4"),
            SphericalType::H(n) => write!(f, "H_{n}"),
            SphericalType::I2(m) => write!(f, "I_2({m})"),
        }
    }
}

impl fmt::Display for AffineType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AffineType::A(n) => write!(f, "~A_{n}"),
            AffineType::B(n) => write!(f, "~B_{n}"),
            AffineType::C(n) => write!(f, "~C_{n}"),
            AffineType::D(n) => write!(f, "~D_{n}"),
            AffineType::E(n) => write!(f, "~E_{n}"),
            AffineType::F4 => f.write_str("~F_4"),
            AffineType::G2 => f.write_str("~G_2"),
        }
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeLabel::Spherical(t) => write!(f, "{t}"),
            TypeLabel::Affine(t) => write!(f, "{t}"),
            other => f.write_str(other.family()),
        }
    }
}

impl SphericalType {
    /// Group order.
    pub fn order(self) -> u128 {
        fn fact(n: usize) -> u128 {
            (1..=n as u128).product()
        }
        match self {
            SphericalType::A(n) => fact(n + 1),
            SphericalType::B(n) => (1u128 << n) * fact(n),
            SphericalType::D(n) => (1u128 << (n - 1)) * fact(n),
            SphericalType::E(6) => 51_840,
            SphericalType::E(7) => 2_903_040,
            SphericalType::E(_) => 696_729_600,
            SphericalType::F4 => 1152,
            SphericalType::H(3) => 120,
            SphericalType::H(_) => 14_400,
            SphericalType::I2(m) => 2 * m as u128,
        }
    }
}

/// Dense label matrix with `0` for infinity, `1` on the diagonal.
type Pattern = Vec<Vec<u32>>;

fn pattern(n: usize, edges: &[(usize, usize, u32)]) -> Pattern {
    let mut m = vec![vec![2u32; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    for &(a, b, l) in edges {
        m[a][b] = l;
        m[b][a] = l;
    }
    m
}

fn path(n: usize, labels: impl Fn(usize) -> u32) -> Vec<(usize, usize, u32)> {
    (0..n.saturating_sub(1)).map(|i| (i, i + 1, labels(i))).collect()
}

/// Catalog diagrams with exactly `n >= 3` nodes.
fn catalog(n: usize) -> Vec<(TypeLabel, Pattern)> {
    use AffineType as Af;
    use SphericalType as Sp;
    let mut out: Vec<(TypeLabel, Pattern)> = Vec::new();
    let sp = |t| TypeLabel::Spherical(t);
    let af = |t| TypeLabel::Affine(t);

    out.push((sp(Sp::A(n)), pattern(n, &path(n, |_| 3))));
    out.push((sp(Sp::B(n)), pattern(n, &path(n, |i| if i == n - 2 { 4 } else { 3 }))));
    if n >= 4 {
        let mut e = path(n - 1, |_| 3);
        e.push((n - 3, n - 1, 3));
        out.push((sp(Sp::D(n)), pattern(n, &e)));
    }
    if (6..=8).contains(&n) {
        let mut e = path(n - 1, |_| 3);
        e.push((2, n - 1, 3));
        out.push((sp(Sp::E(n)), pattern(n, &e)));
    }
    if n == 4 {
        out.push((sp(Sp::F4), pattern(4, &path(4, |i| if i == 1 { 4 } else { 3 }))));
    }
    if n == 3 || n == 4 {
        out.push((sp(Sp::H(n)), pattern(n, &path(n, |i| if i == 0 { 5 } else { 3 }))));
    }

    // Affine diagrams with n nodes have index n - 1.
    let k = n - 1;
    let mut cyc = path(n, |_| 3);
    cyc.push((n - 1, 0, 3));
    out.push((af(Af::A(k)), pattern(n, &cyc)));
    if n >= 4 {
        let mut e = vec![(0, 2, 3), (1, 2, 3)];
        e.extend((2..n - 1).map(|i| (i, i + 1, if i == n - 2 { 4 } else { 3 })));
        out.push((af(Af::B(k)), pattern(n, &e)));
    }
    out.push((af(Af::C(k)), pattern(n, &path(n, |i| if i == 0 || i == n - 2 { 4 } else { 3 }))));
    if n >= 5 {
        let mut e = vec![(0, 2, 3), (1, 2, 3)];
        e.extend((2..n - 3).map(|i| (i, i + 1, 3)));
        e.push((n - 3, n - 2, 3));
        e.push((n - 3, n - 1, 3));
        out.push((af(Af::D(k)), pattern(n, &e)));
    }
    match n {
        7 => {
            // Three arms of length two around node 0.
            let e = [(0, 1, 3), (1, 2, 3), (0, 3, 3), (3, 4, 3), (0, 5, 3), (5, 6, 3)];
            out.push((af(Af::E(6)), pattern(7, &e)));
        }
        8 => {
            let mut e = path(7, |_| 3);
            e.push((3, 7, 3));
            out.push((af(Af::E(7)), pattern(8, &e)));
        }
        9 => {
            let mut e = path(8, |_| 3);
            e.push((2, 8, 3));
            out.push((af(Af::E(8)), pattern(9, &e)));
        }
        5 => out.push((af(Af::F4), pattern(5, &path(5, |i| if i == 2 { 4 } else { 3 })))),
        3 => out.push((af(Af::G2), pattern(3, &path(3, |i| if i == 1 { 6 } else { 3 })))),
        _ => {}
    }
    out
}

fn signature_of(m: &Pattern, v: usize) -> (usize, Vec<u32>) {
    let mut ls: Vec<u32> = (0..m.len()).filter(|&w| w != v && m[v][w] != 2).map(|w| m[v][w]).collect();
    ls.sort_unstable();
    (ls.len(), ls)
}

fn edge_multiset(m: &Pattern) -> Vec<u32> {
    let mut ls = Vec::new();
    for i in 0..m.len() {
        for j in i + 1..m.len() {
            if m[i][j] != 2 {
                ls.push(m[i][j]);
            }
        }
    }
    ls.sort_unstable();
    ls
}

/// Labelled-graph isomorphism by backtracking over vertex images.
fn isomorphic(a: &Pattern, b: &Pattern) -> bool {
    let n = a.len();
    if b.len() != n || edge_multiset(a) != edge_multiset(b) {
        return false;
    }
    let sig_a: Vec<_> = (0..n).map(|v| signature_of(a, v)).collect();
    let sig_b: Vec<_> = (0..n).map(|v| signature_of(b, v)).collect();
    // Visit `a` in BFS order so every new vertex is constrained by a mapped neighbour.
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        order.push(s);
        let mut i = order.len() - 1;
        while i < order.len() {
            let v = order[i];
            for w in 0..n {
                if !seen[w] && a[v][w] != 2 {
                    seen[w] = true;
                    order.push(w);
                }
            }
            i += 1;
        }
    }
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(
        depth: usize,
        order: &[usize],
        a: &Pattern,
        b: &Pattern,
        sig_a: &[(usize, Vec<u32>)],
        sig_b: &[(usize, Vec<u32>)],
        image: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        for cand in 0..b.len() {
            if used[cand] || sig_a[v] != sig_b[cand] {
                continue;
            }
            let consistent = order[..depth].iter().all(|&u| a[v][u] == b[cand][image[u]]);
            if !consistent {
                continue;
            }
            image[v] = cand;
            used[cand] = true;
            if go(depth + 1, order, a, b, sig_a, sig_b, image, used) {
                return true;
            }
            used[cand] = false;
        }
        image[v] = usize::MAX;
        false
    }
    go(0, &order, a, b, &sig_a, &sig_b, &mut image, &mut used)
}

fn sub_pattern(sys: &CoxeterSystem, comp: SpecialSubset) -> Pattern {
    let idx: Vec<usize> = comp.iter().collect();
    idx.iter()
        .map(|&i| {
            idx.iter()
                .map(|&j| match sys.label(i, j) {
                    Label::Finite(m) => m,
                    Label::Infinity => 0,
                })
                .collect()
        })
        .collect()
}

/// Catalog type of a connected subset of the Coxeter diagram, or `None`
/// when it is neither spherical nor affine.
pub fn catalog_type(sys: &CoxeterSystem, comp: SpecialSubset) -> Option<TypeLabel> {
    let n = comp.len();
    match n {
        0 => None,
        1 => Some(TypeLabel::Spherical(SphericalType::A(1))),
        2 => {
            let mut it = comp.iter();
            let (i, j) = (it.next().unwrap(), it.next().unwrap());
            Some(match sys.label(i, j) {
                Label::Infinity => TypeLabel::Affine(AffineType::A(1)),
                Label::Finite(3) => TypeLabel::Spherical(SphericalType::A(2)),
                Label::Finite(4) => TypeLabel::Spherical(SphericalType::B(2)),
                Label::Finite(m) => TypeLabel::Spherical(SphericalType::I2(m)),
            })
        }
        _ => {
            let p = sub_pattern(sys, comp);
            if p.iter().flatten().any(|&m| m == 0 || m > 6) {
                return None;
            }
            catalog(n).into_iter().find(|(_, q)| isomorphic(&p, q)).map(|(t, _)| t)
        }
    }
}

/// Memoized spherical / catalog queries over the subsets of one system.
/// Not shared across threads; build one per task.
pub struct Classifier<'a> {
    sys: &'a CoxeterSystem,
    components: HashMap<SpecialSubset, Option<TypeLabel>>,
    spherical: HashMap<SpecialSubset, bool>,
}

impl<'a> Classifier<'a> {
    pub fn new(sys: &'a CoxeterSystem) -> Self {
        Classifier { sys, components: HashMap::new(), spherical: HashMap::new() }
    }

    pub fn system(&self) -> &'a CoxeterSystem {
        self.sys
    }

    /// Catalog type of a connected subset.
    pub fn component_type(&mut self, comp: SpecialSubset) -> Option<TypeLabel> {
        let sys = self.sys;
        *self.components.entry(comp).or_insert_with(|| catalog_type(sys, comp))
    }

    /// Components of `j` with their catalog types.
    pub fn types_of(&mut self, j: SpecialSubset) -> Vec<(SpecialSubset, Option<TypeLabel>)> {
        self.sys.components_of(j).into_iter().map(|c| (c, self.component_type(c))).collect()
    }

    pub fn is_spherical(&mut self, j: SpecialSubset) -> bool {
        if let Some(&b) = self.spherical.get(&j) {
            return b;
        }
        let b = self.types_of(j).iter().all(|(_, t)| t.is_some_and(TypeLabel::is_spherical));
        self.spherical.insert(j, b);
        b
    }

    /// Every component spherical or affine.
    pub fn is_positive_type(&mut self, j: SpecialSubset) -> bool {
        self.types_of(j).iter().all(|(_, t)| t.is_some())
    }

    /// Type of a connected subset, extending the catalog with the hyperbolic families.
    pub fn classify_connected(&mut self, comp: SpecialSubset) -> TypeLabel {
        if let Some(t) = self.component_type(comp) {
            return t;
        }
        let n = comp.len();
        let mut all_spherical = true;
        let mut all_positive = true;
        for x in comp.iter() {
            let rest = comp.difference(SpecialSubset::singleton(x));
            if !self.is_spherical(rest) {
                all_spherical = false;
                if !self.is_positive_type(rest) {
                    all_positive = false;
                    break;
                }
            }
        }
        if all_spherical {
            TypeLabel::HyperbolicCompact
        } else if all_positive && (3..=10).contains(&n) {
            TypeLabel::HyperbolicNoncompact
        } else {
            TypeLabel::OtherInfinite
        }
    }

    /// All spherical subsets, generated upward from the empty set.
    pub fn spherical_subsets(&mut self, cap: usize) -> Result<Vec<SpecialSubset>> {
        let n = self.sys.rank();
        let mut found = vec![SpecialSubset::EMPTY];
        let mut layer = vec![SpecialSubset::EMPTY];
        let mut seen = std::collections::HashSet::from([SpecialSubset::EMPTY]);
        while !layer.is_empty() {
            let mut next = Vec::new();
            for j in layer {
                for x in 0..n {
                    if j.contains(x) {
                        continue;
                    }
                    let k = j.union(SpecialSubset::singleton(x));
                    if seen.insert(k) && self.is_spherical(k) {
                        next.push(k);
                        found.push(k);
                        if found.len() > cap {
                            return Err(Error::LimitExceeded(format!(
                                "more than {cap} spherical subsets"
                            )));
                        }
                    }
                }
            }
            next.sort();
            layer = next;
        }
        found.sort_by_key(|j| (j.len(), j.bits()));
        Ok(found)
    }
}

/// Classifies an irreducible non-empty system.
pub fn classify_irreducible(sys: &CoxeterSystem) -> Result<TypeLabel> {
    if sys.is_empty() {
        return Err(Error::Empty);
    }
    if !sys.is_irreducible() {
        return Err(Error::NotIrreducible);
    }
    Ok(Classifier::new(sys).classify_connected(sys.generators()))
}

/// `true` iff `W_J` is finite. The empty subset is spherical.
pub fn is_spherical(sys: &CoxeterSystem, j: SpecialSubset) -> Result<bool> {
    sys.check_subset(j)?;
    Ok(Classifier::new(sys).is_spherical(j))
}

/// Inclusion-maximal spherical subsets, sorted by `(size desc, mask)`.
pub fn maximal_spherical_subsets(sys: &CoxeterSystem) -> Vec<SpecialSubset> {
    let mut c = Classifier::new(sys);
    // Only exceeded for systems far beyond any practical size.
    let all = c.spherical_subsets(usize::MAX).expect("uncapped");
    maximal_among(&all)
}

pub(crate) fn maximal_among(all: &[SpecialSubset]) -> Vec<SpecialSubset> {
    let set: std::collections::HashSet<_> = all.iter().copied().collect();
    let mut out: Vec<SpecialSubset> = all
        .iter()
        .copied()
        .filter(|&j| {
            // Spherical subsets are closed downward, so one-step extensions suffice.
            (0..64).all(|x| j.contains(x) || !set.contains(&j.union(SpecialSubset::singleton(x))))
        })
        .collect();
    out.sort_by_key(|j| (std::cmp::Reverse(j.len()), j.bits()));
    out
}

/// `B(α_s, α_t) = -cos(π / m_st)`, with `-1` for `m_st = ∞`.
pub fn bilinear_form(sys: &CoxeterSystem) -> DMatrix<f64> {
    let n = sys.rank();
    DMatrix::from_fn(n, n, |i, j| match sys.label(i, j) {
        Label::Finite(m) => -(std::f64::consts::PI / m as f64).cos(),
        Label::Infinity => -1.0,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Signature {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

/// Eigenvalue sign counts of the bilinear form at tolerance `tol`.
pub fn bilinear_signature(sys: &CoxeterSystem, tol: f64) -> Result<Signature> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Invalid(format!("tolerance must be positive, got {tol}")));
    }
    let mut sig = Signature { positive: 0, negative: 0, zero: 0 };
    if sys.is_empty() {
        return Ok(sig);
    }
    let eig = bilinear_form(sys).symmetric_eigen();
    for &l in eig.eigenvalues.iter() {
        if l > tol {
            sig.positive += 1;
        } else if l < -tol {
            sig.negative += 1;
        } else {
            sig.zero += 1;
        }
    }
    Ok(sig)
}

/// The signature a classification predicts, or `None` for `OTHER_INFINITE`.
pub fn expected_signature(t: TypeLabel, n: usize) -> Option<Signature> {
    match t {
        TypeLabel::Spherical(_) => Some(Signature { positive: n, negative: 0, zero: 0 }),
        TypeLabel::Affine(_) => Some(Signature { positive: n - 1, negative: 0, zero: 1 }),
        TypeLabel::HyperbolicCompact | TypeLabel::HyperbolicNoncompact => {
            Some(Signature { positive: n - 1, negative: 1, zero: 0 })
        }
        TypeLabel::OtherInfinite => None,
    }
}

/// Cross-checks a classification against the numerical signature. Returns
/// `Some(actual)` when they disagree.
pub fn signature_discrepancy(sys: &CoxeterSystem, t: TypeLabel) -> Option<Signature> {
    let expected = expected_signature(t, sys.rank())?;
    let actual = bilinear_signature(sys, 1e-9).ok()?;
    (actual != expected).then_some(actual)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    fn sys(n: usize, edges: &[(usize, usize, Label)]) -> CoxeterSystem {
        let names: Vec<String> = (0..n).map(|i| format!("s{i}")).collect();
        let e: Vec<(&str, &str, Label)> =
            edges.iter().map(|&(a, b, l)| (names[a].as_str(), names[b].as_str(), l)).collect();
        CoxeterSystem::new(&names, &e).unwrap()
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            classify_irreducible(&named::affine_a2()).unwrap(),
            TypeLabel::Affine(AffineType::A(2))
        );
        assert_eq!(
            classify_irreducible(&named::compact_hyperbolic_square()).unwrap(),
            TypeLabel::HyperbolicCompact
        );
        assert_eq!(classify_irreducible(&named::chain_6_3_5()).unwrap(), TypeLabel::HyperbolicNoncompact);
        assert_eq!(classify_irreducible(&named::pentagon_infinity()).unwrap(), TypeLabel::OtherInfinite);
        assert_eq!(classify_irreducible(&named::d_infinity()).unwrap(), TypeLabel::Affine(AffineType::A(1)));
    }

    #[test]
    fn classify_errors() {
        assert_eq!(classify_irreducible(&CoxeterSystem::empty()), Err(Error::Empty));
        assert_eq!(classify_irreducible(&sys(2, &[])), Err(Error::NotIrreducible));
    }

    #[test]
    fn recognizes_catalog_shapes() {
        use Label::Finite as F;
        let cases: Vec<(CoxeterSystem, TypeLabel)> = vec![
            (sys(3, &[(0, 1, F(4)), (1, 2, F(3))]), TypeLabel::Spherical(SphericalType::B(3))),
            (sys(3, &[(0, 1, F(3)), (1, 2, F(5))]), TypeLabel::Spherical(SphericalType::H(3))),
            (sys(4, &[(0, 1, F(3)), (1, 2, F(4)), (2, 3, F(3))]), TypeLabel::Spherical(SphericalType::F4)),
            (sys(4, &[(1, 0, F(3)), (1, 2, F(3)), (1, 3, F(3))]), TypeLabel::Spherical(SphericalType::D(4))),
            (
                sys(6, &[(0, 1, F(3)), (1, 2, F(3)), (2, 3, F(3)), (3, 4, F(3)), (2, 5, F(3))]),
                TypeLabel::Spherical(SphericalType::E(6)),
            ),
            (sys(3, &[(0, 1, F(4)), (1, 2, F(4))]), TypeLabel::Affine(AffineType::C(2))),
            (sys(3, &[(0, 1, F(6)), (1, 2, F(3))]), TypeLabel::Affine(AffineType::G2)),
            (
                sys(5, &[(0, 1, F(3)), (1, 2, F(4)), (2, 3, F(3)), (3, 4, F(3))]),
                TypeLabel::Affine(AffineType::F4),
            ),
            (sys(5, &[(0, 4, F(3)), (1, 4, F(3)), (2, 4, F(3)), (3, 4, F(3))]), TypeLabel::Affine(AffineType::D(4))),
            (sys(4, &[(0, 2, F(3)), (1, 2, F(3)), (2, 3, F(4))]), TypeLabel::Affine(AffineType::B(3))),
            (
                sys(7, &[(0, 1, F(3)), (1, 2, F(3)), (0, 3, F(3)), (3, 4, F(3)), (0, 5, F(3)), (5, 6, F(3))]),
                TypeLabel::Affine(AffineType::E(6)),
            ),
            (sys(3, &[(0, 1, F(2)), (1, 2, F(3)), (0, 2, F(7))]), TypeLabel::HyperbolicCompact),
        ];
        for (s, t) in cases {
            assert_eq!(classify_irreducible(&s).unwrap(), t, "{}", s.to_json());
            assert_eq!(signature_discrepancy(&s, t), None, "{}", s.to_json());
        }
    }

    #[test]
    fn spherical_queries() {
        let a = named::affine_a2();
        assert!(is_spherical(&a, a.subset(&["a", "b"]).unwrap()).unwrap());
        assert!(!is_spherical(&a, a.generators()).unwrap());
        assert!(is_spherical(&named::d_infinity(), SpecialSubset::EMPTY).unwrap());
        assert!(is_spherical(&a, SpecialSubset(0b1000)).is_err());
    }

    #[test]
    fn maximal_spherical_examples() {
        let sq = named::noncompact_squares()[0].clone();
        let m = maximal_spherical_subsets(&sq);
        let want: Vec<_> = [vec!["a", "c", "d"], vec!["b", "c", "d"], vec!["a", "b"]]
            .iter()
            .map(|v| sq.subset(v).unwrap())
            .collect();
        assert_eq!(m.len(), 3);
        for w in want {
            assert!(m.contains(&w));
        }
        let star = named::remark_star();
        let m = maximal_spherical_subsets(&star);
        assert_eq!(m.len(), 4);
        for w in [vec!["a", "c", "d"], vec!["a", "b"], vec!["b", "c"], vec!["b", "d"]] {
            assert!(m.contains(&star.subset(&w).unwrap()));
        }
        let d = named::d_infinity();
        assert_eq!(maximal_spherical_subsets(&d), vec![SpecialSubset(1), SpecialSubset(2)]);
    }

    #[test]
    fn signatures() {
        let a2 = named::a2();
        assert_eq!(bilinear_signature(&a2, 1e-9).unwrap(), Signature { positive: 2, negative: 0, zero: 0 });
        assert_eq!(
            bilinear_signature(&named::affine_a2(), 1e-9).unwrap(),
            Signature { positive: 2, negative: 0, zero: 1 }
        );
        assert_eq!(
            bilinear_signature(&named::compact_hyperbolic_square(), 1e-9).unwrap(),
            Signature { positive: 3, negative: 1, zero: 0 }
        );
        assert!(bilinear_signature(&a2, 0.0).is_err());
    }

    #[test]
    fn orders() {
        assert_eq!(SphericalType::B(3).order(), 48);
        assert_eq!(SphericalType::D(4).order(), 192);
        assert_eq!(SphericalType::A(2).order(), 6);
    }
}
