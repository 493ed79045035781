//! Normalized root-vector basis `{X_α, H_α}` and its structure constants.
//!
//! Integer Chevalley constants `N_{α,β} = ±(p+1)` are fixed by declaring
//! `N = +(p+1)` on every extraspecial pair (with respect to the canonical root
//! order) and propagating with the usual relations. Each Chevalley vector is
//! then rescaled by `c_α = √((α,α)_B / 2)` so that `B(X_α, X_{−α}) = 1` and
//! `[X_α, X_{−α}] = H_α`, giving
//! `m_{α,β}² = N²·(α,α)_B·(β,β)_B / (2·(α+β,α+β)_B)`.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::rational::{fmt_q, qi, Q};
use crate::rootsys::RootSystem;
use crate::surd::{SignedSqrt, Surd};

#[derive(Debug, Clone)]
pub struct ChevalleyTable {
    rs: Arc<RootSystem>,
    m: Vec<SignedSqrt>,
    m_surd: Vec<Surd>,
}

impl ChevalleyTable {
    pub fn build(rs: Arc<RootSystem>) -> ChevalleyTable {
        let n = integer_constants(&rs);
        let total = rs.len();
        let mut m = vec![SignedSqrt::zero(); total * total];
        for a in 0..total {
            for b in 0..total {
                let nab = n[a * total + b];
                if nab == 0 {
                    continue;
                }
                let s = rs.sum(a, b).expect("nonzero constant off the root set");
                let radicand = qi(nab as i128 * nab as i128) * rs.killing(a, a) * rs.killing(b, b) / (qi(2) * rs.killing(s, s));
                m[a * total + b] = SignedSqrt::new(nab.signum() as i8, radicand);
            }
        }
        Self::from_parts(rs, m)
    }

    fn from_parts(rs: Arc<RootSystem>, m: Vec<SignedSqrt>) -> ChevalleyTable {
        let m_surd = m.iter().map(SignedSqrt::to_surd).collect();
        ChevalleyTable { rs, m, m_surd }
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn root_system_arc(&self) -> Arc<RootSystem> {
        Arc::clone(&self.rs)
    }

    /// `m_{α,β}` by root index.
    #[inline]
    pub fn m(&self, a: usize, b: usize) -> &SignedSqrt {
        &self.m[a * self.rs.len() + b]
    }

    #[inline]
    pub fn m_surd(&self, a: usize, b: usize) -> &Surd {
        &self.m_surd[a * self.rs.len() + b]
    }

    #[inline]
    pub fn m_squared(&self, a: usize, b: usize) -> Q {
        self.m(a, b).square()
    }

    /// Replaces `X_α` by `s_α X_α` (`s_{−α} = s_α`); `signs` is indexed by
    /// positive root.
    pub fn regauge(&self, signs: &[i8]) -> ChevalleyTable {
        let rs = &self.rs;
        assert_eq!(signs.len(), rs.num_positive());
        let s = |i: usize| -> i8 { signs[if rs.is_positive(i) { i } else { rs.neg(i) }] };
        let total = rs.len();
        let mut m = self.m.clone();
        for a in 0..total {
            for b in 0..total {
                if let Some(c) = rs.sum(a, b) {
                    let f = s(a) * s(b) * s(c);
                    if f < 0 {
                        m[a * total + b] = m[a * total + b].neg();
                    }
                }
            }
        }
        Self::from_parts(Arc::clone(&self.rs), m)
    }

    /// Random regauging with a seeded generator.
    pub fn random_regauge(&self, seed: u64) -> ChevalleyTable {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let signs: Vec<i8> = (0..self.rs.num_positive()).map(|_| if rng.random::<bool>() { 1 } else { -1 }).collect();
        self.regauge(&signs)
    }

    /// Checks vanishing off the root set, the three sign identities and the
    /// magnitude law `m² = q(p+1)/2·(α,α)_B` on every root pair.
    pub fn verify_identities(&self) -> Result<()> {
        let rs = &self.rs;
        let total = rs.len();
        let fail = |a: usize, b: usize, what: &str| {
            Err(Error::Consistency(format!("{what} fails at ({}, {})", rs.root(a), rs.root(b))))
        };
        for a in 0..total {
            for b in 0..total {
                let mab = self.m(a, b);
                match rs.sum(a, b) {
                    None => {
                        if !mab.is_zero() {
                            return fail(a, b, "vanishing off the root set");
                        }
                    }
                    Some(c) => {
                        if mab.is_zero() {
                            return fail(a, b, "nonvanishing on the root set");
                        }
                        if self.m(b, a) != &mab.neg() {
                            return fail(a, b, "antisymmetry");
                        }
                        if self.m(rs.neg(a), rs.neg(b)) != &mab.neg() {
                            return fail(a, b, "m(-a,-b) = -m(a,b)");
                        }
                        let nc = rs.neg(c);
                        if self.m(b, nc) != mab || self.m(nc, a) != mab {
                            return fail(a, b, "cyclic identity");
                        }
                        let (p, q) = rs.root_string(a, b)?;
                        let want = Q::new(q as i128 * (p as i128 + 1), 2) * rs.killing(a, a);
                        if mab.square() != want {
                            return fail(a, b, "magnitude law");
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn basis_len(&self) -> usize {
        self.rs.len() + self.rs.rank()
    }

    /// Basis element `i`: root vectors first (canonical order), then
    /// `H_{E_1}, …, H_{E_n}`.
    pub fn basis_element(&self, i: usize) -> AlgebraElement {
        let n = self.rs.rank();
        if i < self.rs.len() {
            AlgebraElement::root_vector(n, i)
        } else {
            let mut h = vec![Q::zero(); n];
            h[i - self.rs.len()] = qi(1);
            AlgebraElement::cartan(h)
        }
    }

    /// `γ(H)` for `H = Σ hᵢ H_{Eᵢ}`.
    fn eval_root(&self, gamma: usize, h: &[Surd]) -> Surd {
        let mut acc = Surd::zero();
        let g = self.rs.root(gamma).coords();
        for (i, hi) in h.iter().enumerate() {
            if hi.is_zero() {
                continue;
            }
            let mut e = vec![0; g.len()];
            e[i] = 1;
            let k = self.rs.killing_coords(g, &e);
            acc += &hi.scale(&k);
        }
        acc
    }

    pub fn bracket(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        let rs = &self.rs;
        let n = rs.rank();
        let mut out = AlgebraElement::zero(n);
        for (&a, ca) in &x.root_part {
            for (&b, cb) in &y.root_part {
                let c = ca * cb;
                if b == rs.neg(a) {
                    for (i, &k) in rs.root(a).coords().iter().enumerate() {
                        if k != 0 {
                            out.cartan_part[i] += &c.scale(&qi(k as i128));
                        }
                    }
                } else if let Some(s) = rs.sum(a, b) {
                    out.add_root(s, &(&c * self.m_surd(a, b)));
                }
            }
        }
        if x.cartan_part.iter().any(|h| !h.is_zero()) {
            for (&b, cb) in &y.root_part {
                out.add_root(b, &(&self.eval_root(b, &x.cartan_part) * cb));
            }
        }
        if y.cartan_part.iter().any(|h| !h.is_zero()) {
            for (&a, ca) in &x.root_part {
                out.add_root(a, &-&(&self.eval_root(a, &y.cartan_part) * ca));
            }
        }
        out
    }

    fn jacobi_triple(&self, x: &AlgebraElement, y: &AlgebraElement, z: &AlgebraElement) -> bool {
        let t1 = self.bracket(&self.bracket(x, y), z);
        let t2 = self.bracket(&self.bracket(y, z), x);
        let t3 = self.bracket(&self.bracket(z, x), y);
        t1.plus(&t2).plus(&t3).is_zero()
    }

    /// Jacobi identity on `trials` random basis triples, and on every triple
    /// when the root system has at most 50 roots.
    pub fn verify_jacobi(&self, trials: usize, seed: u64) -> bool {
        let dim = self.basis_len();
        let basis: Vec<AlgebraElement> = (0..dim).map(|i| self.basis_element(i)).collect();
        if self.rs.len() <= 50 {
            for i in 0..dim {
                for j in 0..dim {
                    for k in 0..dim {
                        if !self.jacobi_triple(&basis[i], &basis[j], &basis[k]) {
                            return false;
                        }
                    }
                }
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..trials).all(|_| {
            let i = rng.random_range(0..dim);
            let j = rng.random_range(0..dim);
            let k = rng.random_range(0..dim);
            self.jacobi_triple(&basis[i], &basis[j], &basis[k])
        })
    }

    /// CSV dump of all nonzero constants: `alpha,beta,sign,radicand`, with
    /// coordinates space-separated.
    pub fn to_csv(&self) -> String {
        let rs = &self.rs;
        let mut out = String::from("alpha,beta,sign,radicand\n");
        let coords = |i: usize| rs.root(i).coords().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ");
        for a in 0..rs.len() {
            for b in 0..rs.len() {
                let m = self.m(a, b);
                if !m.is_zero() {
                    let _ = writeln!(out, "{},{},{},{}", coords(a), coords(b), m.sign(), fmt_q(m.radicand()));
                }
            }
        }
        out
    }
}

/// Element of `g^ℂ`: a Cartan part over `H_{E_1}, …, H_{E_n}` plus root-vector
/// coefficients keyed by root index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    pub cartan_part: Vec<Surd>,
    pub root_part: BTreeMap<usize, Surd>,
}

impl AlgebraElement {
    pub fn zero(rank: usize) -> Self {
        AlgebraElement { cartan_part: vec![Surd::zero(); rank], root_part: BTreeMap::new() }
    }

    pub fn root_vector(rank: usize, index: usize) -> Self {
        let mut x = Self::zero(rank);
        x.root_part.insert(index, Surd::from_q(qi(1)));
        x
    }

    pub fn cartan(h: Vec<Q>) -> Self {
        AlgebraElement { cartan_part: h.into_iter().map(Surd::from_q).collect(), root_part: BTreeMap::new() }
    }

    /// `H_α` for the root with index `i`.
    pub fn h_of(rs: &RootSystem, i: usize) -> Self {
        Self::cartan(rs.root(i).coords().iter().map(|&c| qi(c as i128)).collect())
    }

    fn add_root(&mut self, i: usize, c: &Surd) {
        if c.is_zero() {
            return;
        }
        let entry = self.root_part.entry(i).or_default();
        *entry += c;
        if entry.is_zero() {
            self.root_part.remove(&i);
        }
    }

    pub fn plus(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (h, o) in out.cartan_part.iter_mut().zip(&other.cartan_part) {
            *h += o;
        }
        for (&i, c) in &other.root_part {
            out.add_root(i, c);
        }
        out
    }

    pub fn scale(&self, k: &Surd) -> AlgebraElement {
        let mut out = AlgebraElement::zero(self.cartan_part.len());
        for (o, h) in out.cartan_part.iter_mut().zip(&self.cartan_part) {
            *o = h * k;
        }
        for (&i, c) in &self.root_part {
            out.add_root(i, &(c * k));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.root_part.is_empty() && self.cartan_part.iter().all(Surd::is_zero)
    }
}

/// Integer Chevalley constants `N_{α,β}` for every ordered root pair.
fn integer_constants(rs: &RootSystem) -> Vec<i64> {
    let total = rs.len();
    let npos = rs.num_positive();
    // Extraspecial pair of each positive non-simple root ξ: smallest α with
    // ξ − α a positive root.
    let mut extraspecial: Vec<Option<(usize, usize)>> = vec![None; npos];
    for (xi, slot) in extraspecial.iter_mut().enumerate() {
        for a in 0..xi {
            if let Some(b) = rs.diff(xi, a) {
                if rs.is_positive(b) {
                    *slot = Some((a, b));
                    break;
                }
            }
        }
    }
    let mut memo: Vec<Option<i64>> = vec![None; total * total];
    for a in 0..total {
        for b in 0..total {
            constant(rs, &extraspecial, &mut memo, a, b);
        }
    }
    memo.into_iter().map(|v| v.unwrap_or(0)).collect()
}

fn constant(rs: &RootSystem, extraspecial: &[Option<(usize, usize)>], memo: &mut Vec<Option<i64>>, a: usize, b: usize) -> i64 {
    let total = rs.len();
    if let Some(v) = memo[a * total + b] {
        return v;
    }
    let value = match rs.sum(a, b) {
        None => 0,
        Some(xi) => {
            let pa = rs.is_positive(a);
            let pb = rs.is_positive(b);
            let norm = |i: usize| rs.killing(i, i);
            match (pa, pb) {
                (true, true) => {
                    let (g, d) = extraspecial[xi].expect("positive sum of two positive roots is not simple");
                    if (a, b) == (g, d) {
                        let (p, _) = rs.root_string(a, b).expect("distinct roots");
                        p as i64 + 1
                    } else if (a, b) == (d, g) {
                        -constant(rs, extraspecial, memo, g, d)
                    } else {
                        let ngd = constant(rs, extraspecial, memo, g, d);
                        let ng = rs.neg(g);
                        let nd = rs.neg(d);
                        let mut acc = Q::zero();
                        if let Some(bg) = rs.sum(b, ng) {
                            let t = constant(rs, extraspecial, memo, b, ng) * constant(rs, extraspecial, memo, a, nd);
                            acc += qi(t as i128) / norm(bg);
                        }
                        if let Some(ag) = rs.sum(a, ng) {
                            let t = constant(rs, extraspecial, memo, ng, a) * constant(rs, extraspecial, memo, b, nd);
                            acc += qi(t as i128) / norm(ag);
                        }
                        let v = norm(xi) / qi(ngd as i128) * acc;
                        assert!(v.is_integer(), "non-integral Chevalley constant");
                        *v.numer() as i64
                    }
                }
                (false, false) => -constant(rs, extraspecial, memo, rs.neg(a), rs.neg(b)),
                (true, false) => {
                    let v = if rs.is_positive(xi) {
                        -(norm(xi) / norm(a)) * qi(constant(rs, extraspecial, memo, rs.neg(b), xi) as i128)
                    } else {
                        (norm(xi) / norm(b)) * qi(constant(rs, extraspecial, memo, rs.neg(xi), a) as i128)
                    };
                    assert!(v.is_integer() && !v.is_zero(), "non-integral Chevalley constant");
                    *v.numer() as i64
                }
                (false, true) => -constant(rs, extraspecial, memo, b, a),
            }
        }
    };
    memo[a * total + b] = Some(value);
    value
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;
    use crate::rootsys::{LieType, Root};

    fn table(t: &str) -> ChevalleyTable {
        ChevalleyTable::build(Arc::new(RootSystem::build(t.parse::<LieType>().unwrap())))
    }

    #[test]
    fn identities_small_types() {
        for t in ["A1", "A2", "A3", "B2", "B3", "C3", "G2", "D4", "F4"] {
            table(t).verify_identities().unwrap_or_else(|e| panic!("{t}: {e}"));
        }
    }

    #[test]
    fn jacobi_a2_and_g2_exhaustive() {
        assert!(table("A2").verify_jacobi(0, 1));
        assert!(table("G2").verify_jacobi(0, 1));
    }

    #[test]
    fn bracket_rules() {
        let ct = table("A2");
        let rs = ct.root_system();
        let x = AlgebraElement::root_vector(2, 0);
        let xm = AlgebraElement::root_vector(2, rs.neg(0));
        assert_eq!(ct.bracket(&x, &xm), AlgebraElement::h_of(rs, 0));
        let e12 = rs.index_of(&Root(vec![1, 1])).unwrap();
        assert!(ct.bracket(&x, &AlgebraElement::root_vector(2, e12)).is_zero());
        // [H_α, X_γ] = (γ,α)_B X_γ
        let h = AlgebraElement::h_of(rs, 1);
        let out = ct.bracket(&h, &AlgebraElement::root_vector(2, e12));
        assert_eq!(out.root_part[&e12], Surd::from_q(rs.killing(e12, 1)));
    }

    #[test]
    fn c_series_constants() {
        for n in 2..=6usize {
            let ct = table(&format!("C{n}"));
            let rs = ct.root_system();
            let find = |e: Vec<i32>| (0..rs.len()).find(|&i| rs.c_series_lambda_coords(i).unwrap() == e).unwrap();
            let lam = |pairs: &[(usize, i32)]| {
                let mut v = vec![0; n];
                for &(i, c) in pairs {
                    v[i] += c;
                }
                v
            };
            let two_l1 = find(lam(&[(0, 2)]));
            let nn = n as i128;
            for j in 1..n {
                let b = find(lam(&[(0, -1), (j, 1)]));
                assert_eq!(ct.m_squared(two_l1, b), q(1, 2 * (nn + 1)));
                for k in 1..n {
                    if k == j {
                        continue;
                    }
                    let a = find(lam(&[(0, 1), (j, -1)]));
                    let c = find(lam(&[(0, -1), (k, 1)]));
                    let d = find(lam(&[(0, -1), (k, -1)]));
                    assert_eq!(ct.m_squared(a, c), q(1, 4 * (nn + 1)));
                    assert_eq!(ct.m_squared(a, d), q(1, 4 * (nn + 1)));
                }
            }
        }
    }

    #[test]
    fn regauged_table_keeps_identities() {
        let ct = table("G2");
        for seed in 0..5 {
            let r = ct.random_regauge(seed);
            r.verify_identities().unwrap();
            assert!(r.verify_jacobi(0, seed));
        }
    }

    #[test]
    fn csv_dump_header() {
        let csv = table("A2").to_csv();
        assert!(csv.starts_with("alpha,beta,sign,radicand\n"));
        assert_eq!(csv.lines().count(), 1 + 12);
    }
}
