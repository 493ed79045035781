//! Flag manifolds `G/K` from a painted subset `Π_K` of simple roots, their
//! isotropy summands, invariant almost-complex structures and metrics.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{self, BigQ};
use crate::rational::{fmt_q, parse_positive_list, to_big, Q};
use crate::rootsys::{LieType, RootSystem};

#[derive(Debug, Clone)]
pub struct FlagManifold {
    rs: Arc<RootSystem>,
    /// Painted simple roots, 0-based and sorted.
    painted: Vec<usize>,
    in_m: Vec<bool>,
    /// Summand of each `R_M` root (either sign); `None` on `R_K`.
    summand_of: Vec<Option<usize>>,
    summands: Vec<Vec<usize>>,
    /// Triples `(a, b, a+b)` of root indices lying in `R_M`.
    rm_triples: Vec<(usize, usize, usize)>,
}

impl FlagManifold {
    /// `painted` holds 1-based simple root indices.
    pub fn build(rs: Arc<RootSystem>, painted: &[usize]) -> Result<FlagManifold> {
        let rank = rs.rank();
        let mut p: Vec<usize> = Vec::new();
        for &i in painted {
            if i == 0 || i > rank {
                return Err(Error::IndexOutOfRange { index: i, rank });
            }
            p.push(i - 1);
        }
        p.sort_unstable();
        p.dedup();
        let unpainted: Vec<usize> = (0..rank).filter(|i| !p.contains(i)).collect();

        let total = rs.len();
        let in_m: Vec<bool> = (0..total).map(|i| unpainted.iter().any(|&u| rs.root(i).coords()[u] != 0)).collect();

        // Positive R_M roots are grouped by their coefficients on the unpainted
        // nodes; classes are met in canonical order so summand order follows
        // each class's minimal root.
        let mut keys: Vec<Vec<i32>> = Vec::new();
        let mut summands: Vec<Vec<usize>> = Vec::new();
        let mut summand_of = vec![None; total];
        for i in 0..rs.num_positive() {
            if !in_m[i] {
                continue;
            }
            let key: Vec<i32> = unpainted.iter().map(|&u| rs.root(i).coords()[u]).collect();
            let s = match keys.iter().position(|k| *k == key) {
                Some(s) => s,
                None => {
                    keys.push(key);
                    summands.push(Vec::new());
                    summands.len() - 1
                }
            };
            summands[s].push(i);
            summand_of[i] = Some(s);
            summand_of[rs.neg(i)] = Some(s);
        }

        let mut rm_triples = Vec::new();
        for a in 0..total {
            if !in_m[a] {
                continue;
            }
            for b in 0..total {
                if !in_m[b] {
                    continue;
                }
                if let Some(c) = rs.sum(a, b) {
                    if in_m[c] {
                        rm_triples.push((a, b, c));
                    }
                }
            }
        }

        Ok(FlagManifold { rs, painted: p, in_m, summand_of, summands, rm_triples })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn root_system_arc(&self) -> Arc<RootSystem> {
        Arc::clone(&self.rs)
    }

    pub fn lie_type(&self) -> LieType {
        self.rs.lie_type()
    }

    /// Painted nodes, 1-based.
    pub fn painted(&self) -> Vec<usize> {
        self.painted.iter().map(|i| i + 1).collect()
    }

    /// Unpainted nodes (`Π_M`), 1-based.
    pub fn unpainted(&self) -> Vec<usize> {
        (1..=self.rs.rank()).filter(|i| !self.painted.contains(&(i - 1))).collect()
    }

    pub fn is_maximal(&self) -> bool {
        self.painted.is_empty()
    }

    pub fn in_m(&self, i: usize) -> bool {
        self.in_m[i]
    }

    pub fn in_k(&self, i: usize) -> bool {
        !self.in_m[i]
    }

    pub fn num_summands(&self) -> usize {
        self.summands.len()
    }

    pub fn summands(&self) -> &[Vec<usize>] {
        &self.summands
    }

    pub fn summand_of(&self, i: usize) -> Option<usize> {
        self.summand_of[i]
    }

    /// Positive roots of `R_M` in canonical order.
    pub fn rm_positive(&self) -> Vec<usize> {
        (0..self.rs.num_positive()).filter(|&i| self.in_m[i]).collect()
    }

    /// Real dimension of `G/K`.
    pub fn real_dimension(&self) -> usize {
        self.in_m.iter().filter(|&&b| b).count()
    }

    pub fn rm_triples(&self) -> &[(usize, usize, usize)] {
        &self.rm_triples
    }

    /// `ε_α` for a root of `R_M`.
    pub fn eps(&self, acs: &AlmostComplexStructure, i: usize) -> i8 {
        let s = self.summand_of[i].expect("ε is only defined on R_M");
        let e = acs.signs[s];
        if self.rs.is_positive(i) {
            e
        } else {
            -e
        }
    }

    /// `λ_α` for a root of `R_M`.
    pub fn lambda(&self, metric: &InvariantMetric, i: usize) -> Q {
        metric.weights[self.summand_of[i].expect("λ is only defined on R_M")]
    }

    /// `R_M^+ = {α ∈ R_M : ε_α = 1}`, sorted by root index.
    pub fn rm_plus(&self, acs: &AlmostComplexStructure) -> Vec<usize> {
        (0..self.rs.len()).filter(|&i| self.in_m[i] && self.eps(acs, i) == 1).collect()
    }

    pub fn check_acs(&self, acs: &AlmostComplexStructure) -> Result<()> {
        if acs.signs.len() != self.num_summands() {
            return Err(Error::SummandCount { expected: self.num_summands(), got: acs.signs.len() });
        }
        Ok(())
    }

    pub fn check_metric(&self, metric: &InvariantMetric) -> Result<()> {
        if metric.weights.len() != self.num_summands() {
            return Err(Error::SummandCount { expected: self.num_summands(), got: metric.weights.len() });
        }
        Ok(())
    }

    /// All canonical almost-complex structures (first sign `+`), in binary
    /// counting order over the remaining summands.
    pub fn enumerate_acs(&self) -> Vec<AlmostComplexStructure> {
        let k = self.num_summands();
        if k == 0 {
            return vec![AlmostComplexStructure { signs: Vec::new() }];
        }
        (0..1u64 << (k - 1)).map(|mask| AlmostComplexStructure::from_mask(k, mask)).collect()
    }

    pub fn num_acs(&self) -> u64 {
        1u64 << self.num_summands().saturating_sub(1)
    }

    pub fn is_integrable(&self, acs: &AlmostComplexStructure) -> bool {
        self.rm_triples
            .iter()
            .all(|&(a, b, c)| !(self.eps(acs, a) == 1 && self.eps(acs, b) == 1) || self.eps(acs, c) == 1)
    }

    /// Rows `ε_α e_{s(α)} + ε_β e_{s(β)} − ε_{α+β} e_{s(α+β)}` over all
    /// triples in `R_M`.
    pub fn kahler_relations(&self, acs: &AlmostComplexStructure) -> Vec<Vec<Q>> {
        let k = self.num_summands();
        let mut rows: Vec<Vec<Q>> = Vec::new();
        for &(a, b, c) in &self.rm_triples {
            let mut row = vec![Q::zero(); k];
            row[self.summand_of[a].unwrap()] += Q::from_integer(self.eps(acs, a) as i128);
            row[self.summand_of[b].unwrap()] += Q::from_integer(self.eps(acs, b) as i128);
            row[self.summand_of[c].unwrap()] -= Q::from_integer(self.eps(acs, c) as i128);
            push_row(&mut rows, row);
        }
        rows
    }

    /// Rows `e_{s(α)} + e_{s(β)} − e_{s(α+β)}` for `α, β, α+β ∈ R_M^+`.
    pub fn quasi_kahler_relations(&self, acs: &AlmostComplexStructure) -> Vec<Vec<Q>> {
        let k = self.num_summands();
        let mut rows: Vec<Vec<Q>> = Vec::new();
        for &(a, b, c) in &self.rm_triples {
            if self.eps(acs, a) == 1 && self.eps(acs, b) == 1 && self.eps(acs, c) == 1 {
                let mut row = vec![Q::zero(); k];
                row[self.summand_of[a].unwrap()] += Q::one();
                row[self.summand_of[b].unwrap()] += Q::one();
                row[self.summand_of[c].unwrap()] -= Q::one();
                push_row(&mut rows, row);
            }
        }
        rows
    }

    pub fn is_kahler(&self, acs: &AlmostComplexStructure, metric: &InvariantMetric) -> bool {
        self.is_integrable(acs) && self.kahler_relations(acs).iter().all(|r| dot(r, &metric.weights).is_zero())
    }

    pub fn is_quasi_kahler(&self, acs: &AlmostComplexStructure, metric: &InvariantMetric) -> bool {
        self.quasi_kahler_relations(acs).iter().all(|r| dot(r, &metric.weights).is_zero())
    }

    /// Positive solutions of the Kähler relations; empty when `J` is not
    /// integrable.
    pub fn kahler_metrics(&self, acs: &AlmostComplexStructure) -> MetricCone {
        let rows = self.kahler_relations(acs);
        if !self.is_integrable(acs) {
            return MetricCone::empty(self.num_summands(), rows);
        }
        MetricCone::solve(self.num_summands(), rows)
    }

    pub fn quasi_kahler_metrics(&self, acs: &AlmostComplexStructure) -> MetricCone {
        MetricCone::solve(self.num_summands(), self.quasi_kahler_relations(acs))
    }

    /// Metrics whose Kähler form is closed: the quasi-Kähler relations together
    /// with the Kähler relations, with no integrability assumption.
    pub fn almost_kahler_metrics(&self, acs: &AlmostComplexStructure) -> MetricCone {
        let mut rows = self.quasi_kahler_relations(acs);
        for r in self.kahler_relations(acs) {
            push_row(&mut rows, r);
        }
        MetricCone::solve(self.num_summands(), rows)
    }

    /// Whether `λ ≡ 1` is Kähler for every invariant complex structure: no two
    /// roots of `R_M` sum to a root of `R_M`.
    pub fn lambda_one_is_kahler(&self) -> bool {
        self.rm_triples.is_empty()
    }

    /// A pair `α, γ ∈ R_M^+` with `α+γ ∈ R_M` and `α−γ ∉ R`, first in root
    /// index order.
    pub fn lemma_pair(&self, acs: &AlmostComplexStructure) -> Option<(usize, usize)> {
        self.lemma_candidates().into_iter().find(|&(a, g)| self.eps(acs, a) == 1 && self.eps(acs, g) == 1)
    }

    /// Every pair `(α, γ)` of `R_M` roots with `α+γ ∈ R_M`, `α−γ ∉ R`, sorted.
    pub fn lemma_candidates(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .rm_triples
            .iter()
            .filter(|&&(a, g, _)| self.rs.diff(a, g).is_none())
            .map(|&(a, g, _)| (a, g))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn is_lemma_pair(&self, acs: &AlmostComplexStructure, a: usize, g: usize) -> bool {
        self.in_m[a]
            && self.in_m[g]
            && self.eps(acs, a) == 1
            && self.eps(acs, g) == 1
            && self.rs.sum(a, g).is_some_and(|s| self.in_m[s])
            && self.rs.diff(a, g).is_none()
    }

    /// Text form `"C4 k=2,3,4"`; maximal flags print as the bare type.
    pub fn label(&self) -> String {
        let k: Vec<String> = self.painted().iter().map(|i| i.to_string()).collect();
        if k.is_empty() {
            return self.lie_type().to_string();
        }
        format!("{} k={}", self.lie_type(), k.join(","))
    }
}

impl fmt::Display for FlagManifold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// Parsed form of `"<type> k=<indices>"`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagSpec {
    pub lie_type: LieType,
    pub painted: Vec<usize>,
}

impl FlagSpec {
    pub fn build(&self) -> Result<FlagManifold> {
        FlagManifold::build(Arc::new(RootSystem::build(self.lie_type)), &self.painted)
    }
}

impl FromStr for FlagSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.split_whitespace();
        let lie_type: LieType = parts.next().ok_or_else(|| Error::Parse("empty flag description".into()))?.parse()?;
        let mut painted = Vec::new();
        for part in parts {
            let list = part
                .strip_prefix("k=")
                .ok_or_else(|| Error::Parse(format!("expected k=<indices>, got {part:?} (e.g. \"C4 k=2,3,4\")")))?;
            for tok in list.split(',').filter(|t| !t.is_empty()) {
                let i: usize = tok.trim().parse().map_err(|_| Error::Parse(format!("invalid node index {tok:?}")))?;
                painted.push(i);
            }
        }
        let rank = lie_type.rank();
        if let Some(&bad) = painted.iter().find(|&&i| i == 0 || i > rank) {
            return Err(Error::IndexOutOfRange { index: bad, rank });
        }
        Ok(FlagSpec { lie_type, painted })
    }
}

pub fn parse_flag(text: &str) -> Result<FlagManifold> {
    text.parse::<FlagSpec>()?.build()
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlmostComplexStructure {
    signs: Vec<i8>,
}

impl AlmostComplexStructure {
    /// Signs must be ±1 with `+` first.
    pub fn new(signs: Vec<i8>) -> Result<Self> {
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::Parse("signs must be +1 or -1".into()));
        }
        if signs.first().is_some_and(|&s| s != 1) {
            return Err(Error::NonCanonicalAcs);
        }
        Ok(AlmostComplexStructure { signs })
    }

    /// Any sign vector, including ones with `-` first. Used for local sign
    /// patterns that are not tied to a canonical representative.
    pub fn from_signs_unchecked(signs: Vec<i8>) -> Self {
        AlmostComplexStructure { signs }
    }

    /// Bit `j` of `mask` set means summand `j+1` gets `-`.
    pub fn from_mask(k: usize, mask: u64) -> Self {
        let mut signs = vec![1i8; k];
        for (j, s) in signs.iter_mut().enumerate().skip(1) {
            if mask >> (j - 1) & 1 == 1 {
                *s = -1;
            }
        }
        AlmostComplexStructure { signs }
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn all_plus(k: usize) -> Self {
        AlmostComplexStructure { signs: vec![1; k] }
    }
}

impl fmt::Display for AlmostComplexStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.signs {
            write!(f, "{}", if s > 0 { '+' } else { '-' })?;
        }
        Ok(())
    }
}

impl FromStr for AlmostComplexStructure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let signs = s
            .trim()
            .chars()
            .filter(|c| !c.is_whitespace() && *c != ',')
            .map(|c| match c {
                '+' => Ok(1),
                '-' => Ok(-1),
                _ => Err(Error::Parse(format!("invalid sign {c:?} in {s:?}; use a string like \"+-\""))),
            })
            .collect::<Result<Vec<i8>>>()?;
        AlmostComplexStructure::new(signs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InvariantMetric {
    weights: Vec<Q>,
}

impl InvariantMetric {
    pub fn new(weights: Vec<Q>) -> Result<Self> {
        if weights.iter().any(|w| !w.is_positive()) {
            return Err(Error::NonPositiveMetric);
        }
        Ok(InvariantMetric { weights })
    }

    pub fn ones(k: usize) -> Self {
        InvariantMetric { weights: vec![Q::one(); k] }
    }

    pub fn weights(&self) -> &[Q] {
        &self.weights
    }
}

impl fmt::Display for InvariantMetric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.weights.iter().map(fmt_q).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for InvariantMetric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        InvariantMetric::new(parse_positive_list(s)?)
    }
}

/// Positive solutions `{λ > 0 : Aλ = 0}` of a homogeneous linear system over
/// the summand weights.
#[derive(Debug, Clone, Serialize)]
pub struct MetricCone {
    pub dimension: usize,
    #[serde(serialize_with = "ser_rows")]
    pub constraints: Vec<Vec<Q>>,
    /// RREF basis of the solution space.
    #[serde(serialize_with = "ser_rows")]
    pub basis: Vec<Vec<Q>>,
    pub nonempty: bool,
    /// A positive solution when one exists, scaled to integers.
    #[serde(serialize_with = "ser_opt_row")]
    pub interior_point: Option<Vec<Q>>,
}

impl MetricCone {
    fn empty(dimension: usize, constraints: Vec<Vec<Q>>) -> Self {
        MetricCone { dimension, constraints, basis: Vec::new(), nonempty: false, interior_point: None }
    }

    pub fn solve(dimension: usize, constraints: Vec<Vec<Q>>) -> Self {
        let a: Vec<Vec<BigQ>> = constraints.iter().map(|r| r.iter().map(to_big).collect()).collect();
        let basis: Vec<Vec<Q>> = linalg::span_rref(&linalg::nullspace(&a, dimension)).iter().map(|v| from_big_vec(v)).collect();
        // A nonzero row of one sign has no positive solution.
        let definite = constraints
            .iter()
            .any(|r| r.iter().any(|x| !x.is_zero()) && (r.iter().all(|x| !x.is_negative()) || r.iter().all(|x| !x.is_positive())));
        if definite {
            return MetricCone { dimension, constraints, basis, nonempty: false, interior_point: None };
        }
        let a = linalg::span_rref(&a);
        // λ = 1 + μ with μ ≥ 0 and Aμ = −A·1.
        let b: Vec<BigQ> = a.iter().map(|r| -r.iter().fold(BigQ::zero(), |acc, x| acc + x)).collect();
        let interior = linalg::nonnegative_solution(&a, &b, dimension).map(|mu| {
            let lam: Vec<BigQ> = mu.into_iter().map(|x| x + BigQ::one()).collect();
            integral_direction(&lam)
        });
        MetricCone { dimension, constraints, basis, nonempty: interior.is_some(), interior_point: interior }
    }

    /// If the solution space is a single ray, its integral generator.
    pub fn ray(&self) -> Option<Vec<Q>> {
        if !self.nonempty || self.basis.len() != 1 {
            return None;
        }
        let big: Vec<BigQ> = self.basis[0].iter().map(to_big).collect();
        let v = integral_direction(&big);
        Some(if v.iter().any(|x| x.is_negative()) { v.iter().map(|x| -x).collect() } else { v })
    }

    /// Whether `λ` lies in the cone.
    pub fn contains(&self, weights: &[Q]) -> bool {
        self.nonempty && weights.iter().all(|w| w.is_positive()) && self.constraints.iter().all(|r| dot(r, weights).is_zero())
    }

    /// Same set of positive solutions: both empty, or both nonempty with the
    /// same solution space (a nonempty open cone spans its solution space).
    pub fn same_as(&self, other: &MetricCone) -> bool {
        match (self.nonempty, other.nonempty) {
            (false, false) => true,
            (true, true) => self.basis == other.basis,
            _ => false,
        }
    }

    pub fn describe(&self) -> String {
        if !self.nonempty {
            return "empty".into();
        }
        if let Some(r) = self.ray() {
            return format!("ray ({})", r.iter().map(fmt_q).collect::<Vec<_>>().join(","));
        }
        if self.constraints.is_empty() {
            return format!("all positive weights ({}-dimensional)", self.dimension);
        }
        let rows: Vec<String> = self.basis.iter().map(|v| format!("({})", v.iter().map(fmt_q).collect::<Vec<_>>().join(","))).collect();
        format!("{}-dimensional: positive part of span{{{}}}", self.basis.len(), rows.join(", "))
    }
}

fn ser_rows<S: serde::Serializer>(rows: &[Vec<Q>], s: S) -> std::result::Result<S::Ok, S::Error> {
    let v: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(fmt_q).collect()).collect();
    v.serialize(s)
}

fn ser_opt_row<S: serde::Serializer>(row: &Option<Vec<Q>>, s: S) -> std::result::Result<S::Ok, S::Error> {
    row.as_ref().map(|r| r.iter().map(fmt_q).collect::<Vec<_>>()).serialize(s)
}

fn dot(r: &[Q], w: &[Q]) -> Q {
    r.iter().zip(w).fold(Q::zero(), |acc, (a, b)| acc + a * b)
}

fn push_row(rows: &mut Vec<Vec<Q>>, row: Vec<Q>) {
    if row.iter().any(|x| !x.is_zero()) && !rows.contains(&row) {
        rows.push(row);
    }
}

fn from_big(x: &BigQ) -> Q {
    let n = x.numer().to_i128().expect("rational out of range");
    let d = x.denom().to_i128().expect("rational out of range");
    Q::new(n, d)
}

fn from_big_vec(v: &[BigQ]) -> Vec<Q> {
    v.iter().map(from_big).collect()
}

/// Clears denominators and common factors.
fn integral_direction(v: &[BigQ]) -> Vec<Q> {
    use num_integer::Integer;
    let mut l = BigInt::one();
    for x in v {
        l = l.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| (x * BigRational::from_integer(l.clone())).to_integer()).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        g = BigInt::one();
    }
    ints.iter().map(|x| Q::from_integer((x / &g).to_i128().expect("weight out of range"))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qi};

    fn flag(s: &str) -> FlagManifold {
        parse_flag(s).unwrap()
    }

    #[test]
    fn sp_flag_summands() {
        for n in 2..=5 {
            let painted: Vec<String> = (2..=n).map(|i| i.to_string()).collect();
            let f = flag(&format!("C{n} k={}", painted.join(",")));
            assert_eq!(f.num_summands(), 2);
            assert_eq!(f.summands()[0].len(), 2 * (n - 1));
            assert_eq!(f.summands()[1].len(), 1);
            assert_eq!(f.enumerate_acs().len(), 2);
        }
    }

    #[test]
    fn maximal_flag_has_singleton_summands() {
        let f = flag("A3");
        assert!(f.is_maximal());
        assert_eq!(f.num_summands(), 6);
        assert!(f.summands().iter().all(|s| s.len() == 1));
        assert_eq!(f.enumerate_acs().len(), 32);
    }

    #[test]
    fn parse_errors() {
        assert!(parse_flag("C4 k=5").is_err());
        assert!(parse_flag("C4 x=1").is_err());
        assert!("-+".parse::<AlmostComplexStructure>().is_err());
        assert!("+x".parse::<AlmostComplexStructure>().is_err());
        assert!("1,0".parse::<InvariantMetric>().is_err());
        assert_eq!("1,3/2".parse::<InvariantMetric>().unwrap().weights(), &[qi(1), q(3, 2)]);
    }

    #[test]
    fn sp_flag_kahler_and_quasi_kahler() {
        let f = flag("C4 k=2,3,4");
        let pp: AlmostComplexStructure = "++".parse().unwrap();
        let pm: AlmostComplexStructure = "+-".parse().unwrap();
        assert!(f.is_integrable(&pp));
        assert!(!f.is_integrable(&pm));
        assert_eq!(f.kahler_metrics(&pp).ray(), Some(vec![qi(1), qi(2)]));
        assert!(!f.kahler_metrics(&pm).nonempty);
        let qk = f.quasi_kahler_metrics(&pm);
        assert!(qk.constraints.is_empty() && qk.nonempty);
        for t in [q(1, 3), qi(1), qi(7)] {
            let m = InvariantMetric::new(vec![qi(1), t]).unwrap();
            assert!(f.is_quasi_kahler(&pm, &m));
            assert_eq!(f.is_quasi_kahler(&pp, &m), t == qi(2));
        }
        assert!(!f.lambda_one_is_kahler());
    }

    #[test]
    fn a2_maximal_quasi_kahler() {
        let f = flag("A2");
        let j = AlmostComplexStructure::all_plus(3);
        assert!(f.is_quasi_kahler(&j, &InvariantMetric::new(vec![qi(1), qi(1), qi(2)]).unwrap()));
        assert!(!f.is_quasi_kahler(&j, &InvariantMetric::ones(3)));
    }

    #[test]
    fn lambda_one_examples() {
        assert!(flag("A3 k=1,2").lambda_one_is_kahler());
        assert!(flag("D4 k=2,3,4").lambda_one_is_kahler());
        assert!(!flag("C3 k=2,3").lambda_one_is_kahler());
    }
}
