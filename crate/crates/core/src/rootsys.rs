//! Irreducible root systems of types A–G in simple-root coordinates.
//!
//! Simple roots are numbered following Bourbaki. Roots are stored once, in a
//! canonical order used by every other module: positive roots sorted by height
//! and then by coordinates in decreasing lexicographic order (so the simple
//! roots come first, as `E1, …, En`), followed by their negatives in the same
//! order. Root indices are therefore stable for a given Lie type.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{q, qi, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }

    pub fn is_classical(self) -> bool {
        matches!(self, Series::A | Series::B | Series::C | Series::D)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LieType {
    series: Series,
    rank: usize,
}

impl LieType {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B | Series::C => rank >= 2,
            Series::D => rank >= 3,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if ok {
            Ok(LieType { series, rank })
        } else {
            Err(Error::InvalidLieType(format!("{}{}", series.letter(), rank)))
        }
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Every valid type with `rank ≤ max_rank`, in a fixed order.
    pub fn all_up_to(max_rank: usize) -> Vec<LieType> {
        let mut out = Vec::new();
        for series in [Series::A, Series::B, Series::C, Series::D, Series::E, Series::F, Series::G] {
            for rank in 1..=max_rank {
                if let Ok(t) = LieType::new(series, rank) {
                    out.push(t);
                }
            }
        }
        out
    }

    /// Symmetrized bilinear form on the simple roots, long roots of squared
    /// length 2.
    fn simple_gram(&self) -> Vec<Vec<Q>> {
        let n = self.rank;
        let mut g = vec![vec![Q::zero(); n]; n];
        let link = |g: &mut Vec<Vec<Q>>, i: usize, j: usize, v: Q| {
            g[i][j] = v;
            g[j][i] = v;
        };
        match self.series {
            Series::A => {
                for i in 0..n {
                    g[i][i] = qi(2);
                    if i + 1 < n {
                        link(&mut g, i, i + 1, qi(-1));
                    }
                }
            }
            Series::B => {
                for i in 0..n {
                    g[i][i] = if i + 1 < n { qi(2) } else { qi(1) };
                    if i + 1 < n {
                        link(&mut g, i, i + 1, qi(-1));
                    }
                }
            }
            Series::C => {
                for i in 0..n {
                    g[i][i] = if i + 1 < n { qi(1) } else { qi(2) };
                }
                for i in 0..n - 1 {
                    let v = if i + 2 < n { q(-1, 2) } else { qi(-1) };
                    link(&mut g, i, i + 1, v);
                }
            }
            Series::D => {
                for i in 0..n {
                    g[i][i] = qi(2);
                }
                for i in 0..n - 2 {
                    link(&mut g, i, i + 1, qi(-1));
                }
                link(&mut g, n - 3, n - 1, qi(-1));
            }
            Series::E => {
                for i in 0..n {
                    g[i][i] = qi(2);
                }
                // Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4.
                link(&mut g, 0, 2, qi(-1));
                link(&mut g, 1, 3, qi(-1));
                for i in 2..n - 1 {
                    link(&mut g, i, i + 1, qi(-1));
                }
            }
            Series::F => {
                g[0][0] = qi(2);
                g[1][1] = qi(2);
                g[2][2] = qi(1);
                g[3][3] = qi(1);
                link(&mut g, 0, 1, qi(-1));
                link(&mut g, 1, 2, qi(-1));
                link(&mut g, 2, 3, q(-1, 2));
            }
            Series::G => {
                g[0][0] = q(2, 3);
                g[1][1] = qi(2);
                link(&mut g, 0, 1, qi(-1));
            }
        }
        g
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series.letter(), self.rank)
    }
}

impl FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = || Error::InvalidLieType(format!("{t:?} (expected a series letter A-G followed by the rank, e.g. C4)"));
        let mut chars = t.chars();
        let letter = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
        let series = match letter {
            'A' => Series::A,
            'B' => Series::B,
            'C' => Series::C,
            'D' => Series::D,
            'E' => Series::E,
            'F' => Series::F,
            'G' => Series::G,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        LieType::new(series, rank)
    }
}

/// A root as its integer coefficients over the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root(pub Vec<i32>);

impl Root {
    pub fn coords(&self) -> &[i32] {
        &self.0
    }

    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn negate(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    pub fn plus(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn minus(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scaled(&self, k: i32) -> Root {
        Root(self.0.iter().map(|c| c * k).collect())
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Parses `"[1,2,0]"`, `"1,2,0"` or `"1 2 0"` into a coordinate vector.
pub fn parse_root(text: &str) -> Result<Root> {
    let inner = text.trim().trim_start_matches('[').trim_end_matches(']');
    let coords = inner
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<i32>().map_err(|_| Error::Parse(format!("invalid root coordinates {text:?}"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(Root(coords))
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    lie_type: LieType,
    cartan: Vec<Vec<i32>>,
    gram: Vec<Vec<Q>>,
    roots: Vec<Root>,
    n_pos: usize,
    index: HashMap<Vec<i32>, usize>,
    killing_scale: Q,
    dual_coxeter: i128,
    marks: Vec<i32>,
    // (i, j) -> index of roots[i] + roots[j], if a root
    sums: Vec<Option<u32>>,
    killing: Vec<Q>,
}

impl RootSystem {
    pub fn build(lie_type: LieType) -> RootSystem {
        let n = lie_type.rank;
        let gram = lie_type.simple_gram();
        let cartan: Vec<Vec<i32>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let v = qi(2) * gram[i][j] / gram[j][j];
                        assert!(v.is_integer(), "non-integral Cartan entry");
                        *v.numer() as i32
                    })
                    .collect()
            })
            .collect();

        let positive = enumerate_positive_roots(&cartan);
        let n_pos = positive.len();
        let mut roots = positive.clone();
        roots.extend(positive.iter().map(Root::negate));
        let index: HashMap<Vec<i32>, usize> = roots.iter().enumerate().map(|(i, r)| (r.0.clone(), i)).collect();

        let total = roots.len();
        let mut sums = vec![None; total * total];
        for i in 0..total {
            for j in 0..total {
                if let Some(&k) = index.get(&roots[i].plus(&roots[j]).0) {
                    sums[i * total + j] = Some(k as u32);
                }
            }
        }

        let sym = |a: &Root, b: &Root| -> Q {
            let mut acc = Q::zero();
            for i in 0..n {
                if a.0[i] == 0 {
                    continue;
                }
                for j in 0..n {
                    if b.0[j] != 0 {
                        acc += gram[i][j] * Q::from_integer((a.0[i] * b.0[j]) as i128);
                    }
                }
            }
            acc
        };

        // Highest root is the unique root of maximal height; last in order.
        let highest = positive.last().cloned().expect("nonempty root system");
        let marks = highest.0.clone();
        let mut rho_theta = Q::zero();
        for r in &positive {
            rho_theta += sym(r, &highest);
        }
        rho_theta /= qi(2);
        let h_dual = rho_theta + Q::one();
        assert!(h_dual.is_integer(), "non-integral dual Coxeter number");
        let dual_coxeter = *h_dual.numer();
        let killing_scale = Q::new(1, 2 * dual_coxeter);

        let mut killing = vec![Q::zero(); total * total];
        for i in 0..total {
            for j in 0..total {
                killing[i * total + j] = killing_scale * sym(&roots[i], &roots[j]);
            }
        }

        RootSystem {
            lie_type,
            cartan,
            gram,
            roots,
            n_pos,
            index,
            killing_scale,
            dual_coxeter,
            marks,
            sums,
            killing,
        }
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank
    }

    pub fn cartan_matrix(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    /// Symmetrized form on simple roots (long roots have squared length 2).
    pub fn symmetrized_gram(&self) -> &[Vec<Q>] {
        &self.gram
    }

    pub fn killing_scale(&self) -> Q {
        self.killing_scale
    }

    pub fn dual_coxeter_number(&self) -> i128 {
        self.dual_coxeter
    }

    pub fn marks(&self) -> &[i32] {
        &self.marks
    }

    pub fn highest_root(&self) -> &Root {
        &self.roots[self.n_pos - 1]
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &Root {
        &self.roots[i]
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn num_positive(&self) -> usize {
        self.n_pos
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.n_pos]
    }

    pub fn is_positive(&self, i: usize) -> bool {
        i < self.n_pos
    }

    pub fn neg(&self, i: usize) -> usize {
        if i < self.n_pos {
            i + self.n_pos
        } else {
            i - self.n_pos
        }
    }

    pub fn index_of(&self, root: &Root) -> Option<usize> {
        self.index.get(&root.0).copied()
    }

    pub fn index_of_coords(&self, coords: &[i32]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    /// Index of `roots[i] + roots[j]` when that sum is a root.
    #[inline]
    pub fn sum(&self, i: usize, j: usize) -> Option<usize> {
        self.sums[i * self.roots.len() + j].map(|k| k as usize)
    }

    /// Index of `roots[i] - roots[j]` when that difference is a root.
    #[inline]
    pub fn diff(&self, i: usize, j: usize) -> Option<usize> {
        self.sum(i, self.neg(j))
    }

    /// `(roots[i], roots[j])_B`, the Killing pairing of `H_a` and `H_b`.
    #[inline]
    pub fn killing(&self, i: usize, j: usize) -> Q {
        self.killing[i * self.roots.len() + j]
    }

    /// Killing pairing of two arbitrary coordinate vectors.
    pub fn killing_coords(&self, a: &[i32], b: &[i32]) -> Q {
        let n = self.rank();
        let mut acc = Q::zero();
        for i in 0..n {
            for j in 0..n {
                if a[i] != 0 && b[j] != 0 {
                    acc += self.gram[i][j] * Q::from_integer((a[i] * b[j]) as i128);
                }
            }
        }
        acc * self.killing_scale
    }

    /// Killing pairing against a rational coordinate vector.
    pub fn killing_mixed(&self, a: &[i32], h: &[Q]) -> Q {
        let n = self.rank();
        let mut acc = Q::zero();
        for i in 0..n {
            if a[i] == 0 {
                continue;
            }
            for j in 0..n {
                if !h[j].is_zero() {
                    acc += self.gram[i][j] * h[j] * Q::from_integer(a[i] as i128);
                }
            }
        }
        acc * self.killing_scale
    }

    /// `(p, q)` for the `a`-string through `b`: `b - p·a, …, b + q·a`.
    pub fn root_string(&self, a: usize, b: usize) -> Result<(u32, u32)> {
        if a == b || self.neg(a) == b {
            return Err(Error::ProportionalRoots);
        }
        let ra = &self.roots[a];
        let rb = &self.roots[b];
        let mut p = 0;
        while self.index_of(&rb.minus(&ra.scaled(p as i32 + 1))).is_some() {
            p += 1;
        }
        let mut q = 0;
        while self.index_of(&rb.plus(&ra.scaled(q as i32 + 1))).is_some() {
            q += 1;
        }
        Ok((p, q))
    }

    pub fn has_mark_at_least(&self, k: i32) -> bool {
        self.marks.iter().any(|&m| m >= k)
    }

    /// Reflection of `roots[b]` in `roots[a]`.
    pub fn reflect(&self, a: usize, b: usize) -> Root {
        let ra = &self.roots[a];
        let rb = &self.roots[b];
        let c = Q::from_integer(2) * self.killing(b, a) / self.killing(a, a);
        assert!(c.is_integer());
        rb.minus(&ra.scaled(*c.numer() as i32))
    }

    /// Coordinates over the orthogonal basis `λ₁ … λₙ` for type C
    /// (`αᵢ = λᵢ − λᵢ₊₁`, `αₙ = 2λₙ`).
    pub fn c_series_lambda_coords(&self, i: usize) -> Option<Vec<i32>> {
        if self.lie_type.series != Series::C {
            return None;
        }
        let c = &self.roots[i].0;
        let n = c.len();
        let mut e = vec![0; n];
        for k in 0..n {
            let prev = if k == 0 { 0 } else { c[k - 1] };
            e[k] = if k + 1 < n { c[k] - prev } else { 2 * c[k] - prev };
        }
        Some(e)
    }

    /// Display label: `λ`-coordinates for type C, simple-root coordinates
    /// otherwise.
    pub fn label(&self, i: usize) -> String {
        match self.c_series_lambda_coords(i) {
            Some(e) => {
                let mut s = String::new();
                for (k, &c) in e.iter().enumerate() {
                    if c == 0 {
                        continue;
                    }
                    let sign = if c < 0 { "-" } else if s.is_empty() { "" } else { "+" };
                    let mag = if c.abs() == 1 { String::new() } else { c.abs().to_string() };
                    s.push_str(&format!("{sign}{mag}λ{}", k + 1));
                }
                s
            }
            None => self.roots[i].to_string(),
        }
    }
}

fn enumerate_positive_roots(cartan: &[Vec<i32>]) -> Vec<Root> {
    let n = cartan.len();
    let simple: Vec<Root> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            Root(v)
        })
        .collect();
    let mut known: std::collections::HashSet<Vec<i32>> = simple.iter().map(|r| r.0.clone()).collect();
    let mut all = simple.clone();
    let mut layer = simple;
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..n {
                let mut up = beta.0.clone();
                up[i] += 1;
                if known.contains(&up) {
                    continue;
                }
                // p = largest k with beta - k·alpha_i a root.
                let mut p = 0;
                loop {
                    let mut down = beta.0.clone();
                    down[i] -= p + 1;
                    if down[i] >= 0 && known.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i32 = (0..n).map(|j| beta.0[j] * cartan[j][i]).sum();
                if p - pairing > 0 {
                    known.insert(up.clone());
                    next.push(Root(up));
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.0.cmp(&a.0)));
    all
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(t: &str) -> RootSystem {
        RootSystem::build(t.parse().unwrap())
    }

    #[test]
    fn parse_lie_types() {
        assert_eq!("c4".parse::<LieType>().unwrap().to_string(), "C4");
        assert!("X9".parse::<LieType>().is_err());
        assert!("B1".parse::<LieType>().is_err());
        assert!("E9".parse::<LieType>().is_err());
        assert!("D2".parse::<LieType>().is_err());
        assert!("F5".parse::<LieType>().is_err());
        assert!("A".parse::<LieType>().is_err());
    }

    #[test]
    fn classical_root_counts() {
        let expected = [
            ("A1", 2),
            ("A2", 6),
            ("A5", 30),
            ("B2", 8),
            ("B3", 18),
            ("C3", 18),
            ("C4", 32),
            ("D4", 24),
            ("D5", 40),
            ("E6", 72),
            ("E7", 126),
            ("E8", 240),
            ("F4", 48),
            ("G2", 12),
        ];
        for (t, count) in expected {
            assert_eq!(rs(t).len(), count, "{t}");
        }
    }

    #[test]
    fn a2_roots() {
        let r = rs("A2");
        let pos: Vec<_> = r.positive_roots().iter().map(|x| x.0.clone()).collect();
        assert_eq!(pos, vec![vec![1, 0], vec![0, 1], vec![1, 1]]);
        let n0 = r.killing(0, 0);
        assert!(r.roots().iter().enumerate().all(|(i, _)| r.killing(i, i) == n0));
    }

    #[test]
    fn g2_roots_match_listing() {
        let r = rs("G2");
        let mut pos: Vec<_> = r.positive_roots().iter().map(|x| x.0.clone()).collect();
        pos.sort();
        let mut want = vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![2, 1], vec![3, 1], vec![3, 2]];
        want.sort();
        assert_eq!(pos, want);
        assert_eq!(r.marks(), &[3, 2]);
    }

    #[test]
    fn f4_highest_root() {
        let r = rs("F4");
        assert_eq!(r.highest_root().0, vec![2, 3, 4, 2]);
        assert_eq!(r.dual_coxeter_number(), 9);
    }

    #[test]
    fn c3_lambda_pattern() {
        let r = rs("C3");
        let mut labels: Vec<Vec<i32>> = (0..r.len()).map(|i| r.c_series_lambda_coords(i).unwrap()).collect();
        labels.sort();
        let mut want = Vec::new();
        for i in 0..3 {
            for j in 0..3 {
                if i == j {
                    let mut v = vec![0; 3];
                    v[i] = 2;
                    want.push(v.clone());
                    want.push(v.iter().map(|x| -x).collect());
                    continue;
                }
                let mut v = vec![0; 3];
                v[i] = 1;
                v[j] = -1;
                want.push(v);
                if i < j {
                    let mut w = vec![0; 3];
                    w[i] = 1;
                    w[j] = 1;
                    want.push(w.clone());
                    want.push(w.iter().map(|x| -x).collect());
                }
            }
        }
        want.sort();
        assert_eq!(labels, want);
    }

    #[test]
    fn c_series_killing_norms() {
        for n in 2..=6 {
            let r = RootSystem::build(LieType::new(Series::C, n).unwrap());
            let two_l1 = r.index_of(&Root(
                (0..n).map(|i| if i + 1 < n { 2 } else { 1 }).collect(),
            ))
            .unwrap();
            assert_eq!(r.label(two_l1), "2λ1");
            assert_eq!(r.killing(two_l1, two_l1), Q::new(1, n as i128 + 1));
            let l1_l2 = 0;
            assert_eq!(r.label(l1_l2), "λ1-λ2");
            assert_eq!(r.killing(l1_l2, l1_l2), Q::new(1, 2 * (n as i128 + 1)));
        }
    }

    #[test]
    fn root_strings() {
        let r = rs("G2");
        let a = r.index_of(&Root(vec![1, 0])).unwrap();
        let b = r.index_of(&Root(vec![0, 1])).unwrap();
        assert_eq!(r.root_string(a, b).unwrap(), (0, 3));
        assert!(r.root_string(a, a).is_err());
        assert!(r.root_string(a, r.neg(a)).is_err());

        let r = rs("A2");
        assert_eq!(r.root_string(0, 1).unwrap(), (0, 1));

        for n in 2..=5 {
            let r = RootSystem::build(LieType::new(Series::C, n).unwrap());
            let find = |e: Vec<i32>| (0..r.len()).find(|&i| r.c_series_lambda_coords(i).unwrap() == e).unwrap();
            let mut two_l1 = vec![0; n];
            two_l1[0] = 2;
            for j in 1..n {
                let mut b = vec![0; n];
                b[0] = -1;
                b[j] = 1;
                assert_eq!(r.root_string(find(two_l1.clone()), find(b)).unwrap(), (0, 1));
            }
        }
    }

    #[test]
    fn marks() {
        assert!(!rs("A5").has_mark_at_least(3));
        assert!(rs("G2").has_mark_at_least(3));
        assert!(rs("F4").has_mark_at_least(3));
        assert_eq!(rs("C4").marks(), &[2, 2, 2, 1]);
        assert_eq!(rs("A4").marks(), &[1, 1, 1, 1]);
        assert_eq!(rs("E6").marks(), &[1, 2, 2, 3, 2, 1]);
        assert_eq!(rs("E8").marks(), &[2, 3, 4, 6, 5, 4, 3, 2]);
    }
}
