//! Chern connection and curvature of an invariant almost-Hermitian metric at
//! the origin of a flag manifold.
//!
//! With `∇_{X_α}X_β = c(α,β)·X_{α+β}` and the reductive formula
//! `R(X,Y)Z = ∇_X∇_Y Z − ∇_Y∇_X Z − ∇_{[X,Y]_m}Z − [[X,Y]_k, Z]`, every
//! entry `λ(R(X_a,X_b)X_c, X_d)` with `a+b+c+d = 0` reduces to
//! `−λ_e·coef`, `e = a+b+c`, because `λ(X_e, X_{−e}) = −λ_e`. The connection
//! vanishes whenever `α+β ∉ R_M`: pairing `∇_{X_α}X_β` against `X_γ` is
//! nonzero only for `γ = −α−β ∈ R_M`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::chevalley::ChevalleyTable;
use crate::error::Result;
use crate::flagspace::{AlmostComplexStructure, FlagManifold, InvariantMetric};
use crate::rational::{fmt_q, qi, Q};
use crate::surd::Surd;

/// Everything needed to evaluate the connection and curvature for a fixed
/// `(G/K, J, λ)`, with `ε` and `λ` expanded per root.
#[derive(Debug, Clone)]
pub struct Hermitian<'a> {
    ct: &'a ChevalleyTable,
    fm: &'a FlagManifold,
    /// `ε` per root index; 0 on `R_K`.
    eps: Vec<i8>,
    /// `λ` per root index; 0 on `R_K`.
    lam: Vec<Q>,
}

impl<'a> Hermitian<'a> {
    pub fn new(ct: &'a ChevalleyTable, fm: &'a FlagManifold, acs: &AlmostComplexStructure, metric: &InvariantMetric) -> Result<Self> {
        fm.check_acs(acs)?;
        fm.check_metric(metric)?;
        let n = fm.root_system().len();
        let eps = (0..n).map(|i| if fm.in_m(i) { fm.eps(acs, i) } else { 0 }).collect();
        let lam = (0..n).map(|i| if fm.in_m(i) { fm.lambda(metric, i) } else { Q::zero() }).collect();
        Ok(Hermitian { ct, fm, eps, lam })
    }

    pub fn table(&self) -> &ChevalleyTable {
        self.ct
    }

    pub fn flag(&self) -> &FlagManifold {
        self.fm
    }

    pub fn eps(&self, i: usize) -> i8 {
        self.eps[i]
    }

    pub fn lambda(&self, i: usize) -> Q {
        self.lam[i]
    }

    /// Roots of `R_M` with `ε = +1`, sorted by root index.
    pub fn rm_plus(&self) -> Vec<usize> {
        (0..self.eps.len()).filter(|&i| self.eps[i] == 1).collect()
    }

    /// Rational factor `r` with `∇_{X_α}X_β = r·m_{α,β}·X_{α+β}`.
    pub fn chern_factor(&self, a: usize, b: usize) -> Q {
        let rs = self.ct.root_system();
        let Some(s) = rs.sum(a, b) else {
            return Q::zero();
        };
        if !self.fm.in_m(s) || !self.fm.in_m(a) || !self.fm.in_m(b) {
            return Q::zero();
        }
        let (ea, eb, es) = (self.eps[a] as i128, self.eps[b] as i128, self.eps[s] as i128);
        let first = self.lam[b] * qi(1 + ea * es + ea * eb + eb * es);
        let second = self.lam[s] * qi(1 - ea * eb - ea * es + eb * es);
        (first + second) / (qi(4) * self.lam[s])
    }

    /// `c(α,β)` with `∇_{X_α}X_β = c(α,β)·X_{α+β}`.
    pub fn chern_coefficient(&self, a: usize, b: usize) -> Surd {
        let r = self.chern_factor(a, b);
        if r.is_zero() {
            return Surd::zero();
        }
        self.ct.m_surd(a, b).scale(&r)
    }

    /// `λ(R(X_a, X_b)X_c, X_d)`; zero unless `a+b+c+d = 0`.
    pub fn entry(&self, a: usize, b: usize, c: usize, d: usize) -> Surd {
        let rs = self.ct.root_system();
        match self.target(a, b, c) {
            Some(e) if rs.neg(e) == d => self.entry3(a, b, c, e),
            _ => Surd::zero(),
        }
    }

    /// Index of `a+b+c` when it is a root.
    fn target(&self, a: usize, b: usize, c: usize) -> Option<usize> {
        let rs = self.ct.root_system();
        let coords: Vec<i32> = (0..rs.rank())
            .map(|i| rs.root(a).coords()[i] + rs.root(b).coords()[i] + rs.root(c).coords()[i])
            .collect();
        rs.index_of_coords(&coords)
    }

    fn entry3(&self, a: usize, b: usize, c: usize, e: usize) -> Surd {
        let rs = self.ct.root_system();
        let fm = self.fm;
        if !(fm.in_m(a) && fm.in_m(b) && fm.in_m(c) && fm.in_m(e)) {
            return Surd::zero();
        }
        let mut coef = Surd::zero();
        // ∇_a ∇_b X_c
        if let Some(bc) = rs.sum(b, c) {
            let f = self.chern_factor(b, c);
            if !f.is_zero() {
                let g = self.chern_factor(a, bc);
                if !g.is_zero() {
                    coef += &(self.ct.m_surd(b, c) * self.ct.m_surd(a, bc)).scale(&(f * g));
                }
            }
        }
        // −∇_b ∇_a X_c
        if let Some(ac) = rs.sum(a, c) {
            let f = self.chern_factor(a, c);
            if !f.is_zero() {
                let g = self.chern_factor(b, ac);
                if !g.is_zero() {
                    coef += &(self.ct.m_surd(a, c) * self.ct.m_surd(b, ac)).scale(&-(f * g));
                }
            }
        }
        if b == rs.neg(a) {
            // −[H_a, X_c] = −(c,a)_B X_c
            coef += &Surd::from_q(-rs.killing(c, a));
        } else if let Some(ab) = rs.sum(a, b) {
            if fm.in_m(ab) {
                // −∇_{[X_a,X_b]_m} X_c
                let f = self.chern_factor(ab, c);
                if !f.is_zero() {
                    coef += &(self.ct.m_surd(a, b) * self.ct.m_surd(ab, c)).scale(&-f);
                }
            } else {
                // −[[X_a,X_b]_k, X_c]
                let m2 = self.ct.m_surd(ab, c);
                if !m2.is_zero() {
                    coef += &-&(self.ct.m_surd(a, b) * m2);
                }
            }
        }
        coef.scale(&-self.lam[e])
    }

    /// `R_{i j̄ k l̄} = λ(R(X_i, X_{−j})X_k, X_{−l})`.
    pub fn griffiths_entry(&self, i: usize, j: usize, k: usize, l: usize) -> Surd {
        let rs = self.ct.root_system();
        self.entry(i, rs.neg(j), k, rs.neg(l))
    }

    /// The two closed formulas for `R(X_α,X_{−α},X_γ,X_{−γ})` and
    /// `R(X_γ,X_{−α},X_α,X_{−γ})`, for `α, γ ∈ R_M^+`.
    ///
    /// At `γ = α` the term `m²_{α,−γ}` stands for the `[[X_α,X_{−α}],X_α]`
    /// contribution `(α,α)_B`.
    pub fn diag_oracle(&self, alpha: usize, gamma: usize) -> (Q, Q) {
        let rs = self.ct.root_system();
        let fm = self.fm;
        let (a, g) = (alpha, gamma);
        let delta1 = |i: Option<usize>| -> Q {
            match i {
                Some(i) if fm.in_m(i) && self.eps[i] == 1 => Q::one(),
                _ => Q::zero(),
            }
        };
        let delta_m1 = |i: Option<usize>| -> Q {
            match i {
                Some(i) if fm.in_m(i) && self.eps[i] == -1 => Q::one(),
                _ => Q::zero(),
            }
        };
        let sum = rs.sum(a, g);
        let gma = rs.diff(g, a);
        let m2_ag = self.ct.m_squared(a, g);
        let m2_amg = if a == g { rs.killing(a, a) } else { self.ct.m_squared(a, rs.neg(g)) };
        let tilde = |x: Option<usize>, v: Q| -> Q {
            match x {
                Some(i) if fm.in_m(i) => v,
                _ => Q::zero(),
            }
        };
        let lam_of = |x: Option<usize>| x.map(|i| self.lam[i]).unwrap_or_else(Q::zero);
        let (lam_a, lam_g) = (self.lam[a], self.lam[g]);

        let mut first = m2_amg - m2_ag;
        if let Some(i) = gma.filter(|&i| fm.in_m(i)) {
            first -= self.lam[i] / lam_g * tilde(gma, m2_amg) * delta1(Some(i));
        }
        if let Some(s) = sum.filter(|&s| fm.in_m(s)) {
            first += lam_g / self.lam[s] * tilde(sum, m2_ag) * delta1(Some(s));
        }
        first *= lam_g;

        let xi = match gma {
            Some(i) if fm.in_m(i) => lam_g * delta_m1(Some(i)) + lam_a * delta1(Some(i)),
            _ => lam_g,
        };
        let mut second = m2_amg * xi;
        if let Some(s) = sum.filter(|&s| fm.in_m(s)) {
            second -= lam_a * lam_g / lam_of(Some(s)) * m2_ag * delta1(Some(s));
        }
        (first, second)
    }

    /// All nonzero entries over `R_M`, assembled in parallel over the first
    /// index.
    pub fn tensor(&self) -> CurvatureTensor {
        let rs = self.ct.root_system();
        let rm: Vec<usize> = (0..rs.len()).filter(|&i| self.fm.in_m(i)).collect();
        let chunks: Vec<Vec<((usize, usize, usize, usize), Surd)>> = rm
            .par_iter()
            .map(|&a| {
                let mut out = Vec::new();
                for &b in &rm {
                    for &c in &rm {
                        if let Some(e) = self.target(a, b, c) {
                            let v = self.entry3(a, b, c, e);
                            if !v.is_zero() {
                                out.push(((a, b, c, rs.neg(e)), v));
                            }
                        }
                    }
                }
                out
            })
            .collect();
        CurvatureTensor { entries: chunks.into_iter().flatten().collect() }
    }
}

/// Sparse curvature values keyed by root indices `(α, β, γ, δ)`.
#[derive(Debug, Clone, Default)]
pub struct CurvatureTensor {
    pub entries: BTreeMap<(usize, usize, usize, usize), Surd>,
}

impl CurvatureTensor {
    pub fn get(&self, a: usize, b: usize, c: usize, d: usize) -> Surd {
        self.entries.get(&(a, b, c, d)).cloned().unwrap_or_default()
    }

    pub fn is_exact_rational(&self) -> bool {
        self.entries.values().all(Surd::is_rational)
    }

    /// CSV rows `alpha,beta,gamma,delta,exact,value,surd`: `value` is `p/q`
    /// when rational, else a float; `surd` is always the exact expression.
    pub fn to_csv(&self, ct: &ChevalleyTable) -> String {
        let rs = ct.root_system();
        let coords = |i: usize| rs.root(i).coords().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ");
        let mut out = String::from("alpha,beta,gamma,delta,exact,value,surd\n");
        for (&(a, b, c, d), v) in &self.entries {
            let (exact, value) = match v.as_rational() {
                Some(r) => (1, fmt_q(&r)),
                None => (0, format!("{:.17e}", v.to_f64())),
            };
            let _ = writeln!(out, "{},{},{},{},{},{},{}", coords(a), coords(b), coords(c), coords(d), exact, value, v);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flagspace::parse_flag;
    use crate::rational::q;
    use std::sync::Arc;

    fn setup(flag: &str) -> (ChevalleyTable, FlagManifold) {
        let fm = parse_flag(flag).unwrap();
        let ct = ChevalleyTable::build(fm.root_system_arc());
        (ct, fm)
    }

    #[test]
    fn connection_sign_cases() {
        let (ct, fm) = setup("A2");
        let rs = Arc::clone(&fm.root_system_arc());
        let s = rs.sum(0, 1).unwrap();
        let all_plus = AlmostComplexStructure::all_plus(3);
        let metric = InvariantMetric::new(vec![qi(1), qi(2), qi(3)]).unwrap();
        let h = Hermitian::new(&ct, &fm, &all_plus, &metric).unwrap();
        assert_eq!(h.chern_factor(0, 1), h.lambda(1) / h.lambda(s));
        assert!(h.chern_coefficient(0, rs.neg(0)).is_zero());
        // ε_α = ε_β = +1, ε_{α+β} = −1
        let j = AlmostComplexStructure::from_signs_unchecked(vec![1, 1, -1]);
        let h = Hermitian::new(&ct, &fm, &j, &metric).unwrap();
        assert!(h.chern_coefficient(0, 1).is_zero());
    }

    #[test]
    fn sp2_top_entry() {
        let (ct, fm) = setup("C2 k=2");
        let acs = AlmostComplexStructure::all_plus(2);
        let metric = InvariantMetric::new(vec![qi(1), qi(2)]).unwrap();
        let h = Hermitian::new(&ct, &fm, &acs, &metric).unwrap();
        let rs = ct.root_system();
        let top = fm.summands()[1][0];
        assert_eq!(rs.label(top), "2λ1");
        let v = h.griffiths_entry(top, top, top, top);
        assert_eq!(v.as_rational(), Some(q(2, 3)));
        let (o1, _) = h.diag_oracle(top, top);
        assert_eq!(o1, q(2, 3));
    }

    #[test]
    fn antisymmetry_and_zero_sum() {
        let (ct, fm) = setup("G2 k=1");
        let acs: AlmostComplexStructure = "+-".parse().unwrap();
        let metric = InvariantMetric::new(vec![qi(1), q(5, 2)]).unwrap();
        let h = Hermitian::new(&ct, &fm, &acs, &metric).unwrap();
        let t = h.tensor();
        assert!(!t.entries.is_empty());
        for (&(a, b, c, d), v) in &t.entries {
            assert_eq!(h.entry(b, a, c, d), -v);
        }
        let rs = ct.root_system();
        let a = fm.rm_positive()[0];
        assert!(h.entry(a, a, a, a).is_zero());
        assert!(h.entry(a, rs.neg(a), a, a).is_zero());
    }
}
