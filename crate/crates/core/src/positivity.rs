//! Griffiths, Nakano and dual-Nakano positivity of the Chern curvature.

use std::fmt;

use nalgebra::{Complex, DMatrix, SymmetricEigen};
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::chevalley::ChevalleyTable;
use crate::curvature::Hermitian;
use crate::error::{Error, Result};
use crate::flagspace::{AlmostComplexStructure, FlagManifold, InvariantMetric};
use crate::linalg::{self, BigQ};
use crate::rational::{fmt_q, q, qi, to_big, to_f64, Q};
use crate::rootsys::Series;
use crate::surd::Surd;

/// Largest dimension for which the exact elimination is attempted.
pub const EXACT_PSD_MAX_DIM: usize = 160;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum VerdictKind {
    DualNakanoPositive,
    DualNakanoSemipositive,
    NakanoPositive,
    NakanoSemipositive,
    GriffithsViolated,
    GriffithsSampledNonnegative,
    Indeterminate,
}

impl VerdictKind {
    pub fn as_str(self) -> &'static str {
        match self {
            VerdictKind::DualNakanoPositive => "DUAL_NAKANO_POSITIVE",
            VerdictKind::DualNakanoSemipositive => "DUAL_NAKANO_SEMIPOSITIVE",
            VerdictKind::NakanoPositive => "NAKANO_POSITIVE",
            VerdictKind::NakanoSemipositive => "NAKANO_SEMIPOSITIVE",
            VerdictKind::GriffithsViolated => "GRIFFITHS_VIOLATED",
            VerdictKind::GriffithsSampledNonnegative => "GRIFFITHS_SAMPLED_NONNEGATIVE",
            VerdictKind::Indeterminate => "INDETERMINATE",
        }
    }

    pub fn is_semipositive(self) -> bool {
        matches!(
            self,
            VerdictKind::DualNakanoPositive | VerdictKind::DualNakanoSemipositive | VerdictKind::NakanoPositive | VerdictKind::NakanoSemipositive
        )
    }
}

impl fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Griffiths-negative direction.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Witness {
    /// `u = X_α`, `v = X_γ` with exact value `R_{α ᾱ γ γ̄}`.
    BasisPair { alpha: Vec<i32>, gamma: Vec<i32>, value: String, value_f64: f64 },
    /// Sampled rank-one directions, as `(re, im)` over `R_M^+`.
    Directions { u: Vec<(f64, f64)>, v: Vec<(f64, f64)>, value: f64 },
}

impl Witness {
    pub fn value(&self) -> f64 {
        match self {
            Witness::BasisPair { value_f64, .. } => *value_f64,
            Witness::Directions { value, .. } => *value,
        }
    }
}

/// `α, γ ∈ R_M^+` with `α+γ ∈ R_M` and `α−γ ∉ R`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaCertificate {
    pub alpha: Vec<i32>,
    pub gamma: Vec<i32>,
    #[serde(skip)]
    pub alpha_index: usize,
    #[serde(skip)]
    pub gamma_index: usize,
}

pub fn lemma_certificate(fm: &FlagManifold, acs: &AlmostComplexStructure) -> Option<LemmaCertificate> {
    fm.lemma_pair(acs).map(|(a, g)| {
        let rs = fm.root_system();
        LemmaCertificate { alpha: rs.root(a).0.clone(), gamma: rs.root(g).0.clone(), alpha_index: a, gamma_index: g }
    })
}

/// `Σ R_{α β̄ γ δ̄} u^α ū^β v^γ v̄^δ` with `u`, `v` indexed like `h.rm_plus()`.
pub fn griffiths_form(h: &Hermitian, u: &[Complex<f64>], v: &[Complex<f64>]) -> f64 {
    let terms = griffiths_terms(h);
    evaluate_terms(&terms, u, v)
}

/// Nonzero `R_{i j̄ k l̄}` over positions in `R_M^+`, as floats.
pub fn griffiths_terms(h: &Hermitian) -> Vec<(usize, usize, usize, usize, f64)> {
    let plus = h.rm_plus();
    let rs = h.table().root_system();
    let pos = |r: usize| plus.binary_search(&r).ok();
    let mut out = Vec::new();
    for (i, &a) in plus.iter().enumerate() {
        for (j, &b) in plus.iter().enumerate() {
            for (k, &c) in plus.iter().enumerate() {
                // δ = α − β + γ
                let coords: Vec<i32> = (0..rs.rank()).map(|x| rs.root(a).0[x] - rs.root(b).0[x] + rs.root(c).0[x]).collect();
                let Some(d) = rs.index_of_coords(&coords) else { continue };
                let Some(l) = pos(d) else { continue };
                let v = h.griffiths_entry(a, b, c, d);
                if !v.is_zero() {
                    out.push((i, j, k, l, v.to_f64()));
                }
            }
        }
    }
    out
}

fn evaluate_terms(terms: &[(usize, usize, usize, usize, f64)], u: &[Complex<f64>], v: &[Complex<f64>]) -> f64 {
    let mut acc = Complex::new(0.0, 0.0);
    for &(i, j, k, l, r) in terms {
        acc += u[i] * u[j].conj() * v[k] * v[l].conj() * r;
    }
    acc.re
}

/// Hermitian matrix indexed by ordered pairs of `R_M^+` positions.
#[derive(Debug, Clone)]
pub struct PairMatrix {
    /// Row/column labels as positions `(p, q)` into `R_M^+`.
    pub labels: Vec<(usize, usize)>,
    pub entries: Vec<Vec<Surd>>,
}

impl PairMatrix {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn is_rational(&self) -> bool {
        self.entries.iter().all(|r| r.iter().all(Surd::is_rational))
    }

    pub fn to_f64(&self) -> DMatrix<f64> {
        let n = self.dim();
        DMatrix::from_fn(n, n, |i, j| self.entries[i][j].to_f64())
    }

    fn check_hermitian(&self, what: &str) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..i {
                if self.entries[i][j] != self.entries[j][i] {
                    return Err(Error::Consistency(format!("{what} matrix not Hermitian at {:?}/{:?}", self.labels[i], self.labels[j])));
                }
            }
        }
        Ok(())
    }
}

fn pair_matrix(h: &Hermitian, index: impl Fn(usize, usize, usize, usize) -> ((usize, usize), (usize, usize))) -> PairMatrix {
    let plus = h.rm_plus();
    let p = plus.len();
    let labels: Vec<(usize, usize)> = (0..p).flat_map(|a| (0..p).map(move |b| (a, b))).collect();
    let n = labels.len();
    let mut entries = vec![vec![Surd::zero(); n]; n];
    let rs = h.table().root_system();
    for i in 0..p {
        for j in 0..p {
            for k in 0..p {
                let coords: Vec<i32> = (0..rs.rank()).map(|x| rs.root(plus[i]).0[x] - rs.root(plus[j]).0[x] + rs.root(plus[k]).0[x]).collect();
                let Some(d) = rs.index_of_coords(&coords) else { continue };
                let Ok(l) = plus.binary_search(&d) else { continue };
                let v = h.griffiths_entry(plus[i], plus[j], plus[k], d);
                if v.is_zero() {
                    continue;
                }
                let (r, c) = index(i, j, k, l);
                entries[r.0 * p + r.1][c.0 * p + c.1] = v;
            }
        }
    }
    PairMatrix { labels, entries }
}

/// `M[(i,l),(j,k)] = R_{i j̄ k l̄}`.
pub fn dual_nakano_matrix(h: &Hermitian) -> Result<PairMatrix> {
    let m = pair_matrix(h, |i, j, k, l| ((i, l), (j, k)));
    m.check_hermitian("dual-Nakano")?;
    Ok(m)
}

/// `M[(i,k),(j,l)] = R_{i j̄ k l̄}`.
pub fn nakano_matrix(h: &Hermitian) -> Result<PairMatrix> {
    let m = pair_matrix(h, |i, j, k, l| ((i, k), (j, l)));
    m.check_hermitian("Nakano")?;
    Ok(m)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PsdMode {
    ExactIfRational,
    Float,
}

#[derive(Debug, Clone, Serialize)]
pub struct PsdReport {
    pub is_psd: bool,
    pub is_pd: bool,
    pub min_eig: f64,
    /// Negative direction when not PSD, kernel vector when singular PSD.
    pub witness: Option<Vec<f64>>,
    pub exact: bool,
}

pub fn psd_tolerance(m: &DMatrix<f64>) -> f64 {
    let norm = m.row_iter().map(|r| r.iter().map(|x| x.abs()).sum::<f64>()).fold(0.0, f64::max);
    1e-9 * norm.max(1.0)
}

pub fn min_eigen(m: &DMatrix<f64>) -> (f64, Vec<f64>) {
    if m.nrows() == 0 {
        return (0.0, Vec::new());
    }
    let eig = SymmetricEigen::new(m.clone());
    let (idx, &val) = eig.eigenvalues.iter().enumerate().min_by(|a, b| a.1.total_cmp(b.1)).unwrap();
    (val, eig.eigenvectors.column(idx).iter().copied().collect())
}

/// Rational symmetric matrix (as `Q`) check.
pub fn check_psd_rational(rows: &[Vec<Q>]) -> PsdReport {
    let n = rows.len();
    let fm = DMatrix::from_fn(n, n, |i, j| to_f64(&rows[i][j]));
    let (min_eig, _) = min_eigen(&fm);
    let big: Vec<Vec<BigQ>> = rows.iter().map(|r| r.iter().map(to_big).collect()).collect();
    let ex = linalg::exact_psd(&big);
    let to_f = |v: Vec<BigQ>| v.iter().map(crate::rational::big_to_f64).collect::<Vec<_>>();
    let witness = ex.negative_direction.map(to_f).or(ex.kernel_vector.map(to_f));
    PsdReport { is_psd: ex.is_psd, is_pd: ex.is_pd, min_eig, witness, exact: true }
}

pub fn check_psd(m: &PairMatrix, mode: PsdMode) -> PsdReport {
    if mode == PsdMode::ExactIfRational && m.is_rational() && m.dim() <= EXACT_PSD_MAX_DIM {
        let rows: Vec<Vec<Q>> = m.entries.iter().map(|r| r.iter().map(|x| x.as_rational().unwrap()).collect()).collect();
        return check_psd_rational(&rows);
    }
    check_psd_float(&m.to_f64())
}

pub fn check_psd_float(fm: &DMatrix<f64>) -> PsdReport {
    let tol = psd_tolerance(fm);
    let (min_eig, vec) = min_eigen(fm);
    let is_psd = min_eig >= -tol;
    let is_pd = min_eig > tol;
    let witness = if is_pd { None } else { Some(vec) };
    PsdReport { is_psd, is_pd, min_eig, witness, exact: false }
}

/// Exact scan over basis pairs, then `samples` random rank-one directions.
/// Returns the most negative witness below tolerance.
pub fn griffiths_falsify(h: &Hermitian, samples: usize, seed: u64) -> Option<Witness> {
    let rs = h.table().root_system();
    let plus = h.rm_plus();
    let mut best: Option<Witness> = None;
    let mut best_exact: Option<Surd> = None;
    for &a in &plus {
        for &g in &plus {
            let v = h.griffiths_entry(a, a, g, g);
            let x = v.to_f64();
            if x < 0.0 && best_exact.as_ref().is_none_or(|b| x < b.to_f64()) {
                best = Some(Witness::BasisPair { alpha: rs.root(a).0.clone(), gamma: rs.root(g).0.clone(), value: v.to_string(), value_f64: x });
                best_exact = Some(v);
            }
        }
    }
    if best.is_some() {
        return best;
    }
    if samples == 0 || plus.is_empty() {
        return None;
    }
    let terms = griffiths_terms(h);
    let scale = terms.iter().map(|t| t.4.abs()).fold(0.0, f64::max);
    let tol = 1e-9 * scale.max(1.0);
    let p = plus.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draw = |rng: &mut ChaCha8Rng| -> Vec<Complex<f64>> {
        let v: Vec<Complex<f64>> = (0..p).map(|_| Complex::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))).collect();
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt().max(f64::MIN_POSITIVE);
        v.into_iter().map(|z| z / norm).collect()
    };
    let mut worst: Option<(f64, Vec<Complex<f64>>, Vec<Complex<f64>>)> = None;
    for _ in 0..samples {
        let u = draw(&mut rng);
        let v = draw(&mut rng);
        let val = evaluate_terms(&terms, &u, &v);
        if val < -tol && worst.as_ref().is_none_or(|w| val < w.0) {
            worst = Some((val, u, v));
        }
    }
    worst.map(|(value, u, v)| Witness::Directions {
        u: u.iter().map(|z| (z.re, z.im)).collect(),
        v: v.iter().map(|z| (z.re, z.im)).collect(),
        value,
    })
}

/// The `(2n−1)`-square matrix of diagonal-pair dual-Nakano values of
/// `CP^{2n−1} = Sp(n)/Sp(n−1)×U(1)` with metric `(1, t)`, rows ordered
/// `λ₁−λ₂, λ₁+λ₂, …, λ₁−λₙ, λ₁+λₙ, 2λ₁`.
///
/// That is `n−1` pairs plus `2λ₁`, so `2n−1` rows. Counting to `2n+1` would
/// include roots that do not exist in `C_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct CpnMatrix {
    pub n: usize,
    pub t: Q,
    pub entries: Vec<Vec<Q>>,
}

pub fn build_cpn_matrix(n: usize, t: Q) -> Result<CpnMatrix> {
    if n < 2 {
        return Err(Error::Parse(format!("n must be at least 2, got {n}")));
    }
    if !t.is_positive() {
        return Err(Error::NonPositiveMetric);
    }
    let size = 2 * n - 1;
    let f = q(1, 2 * (n as i128 + 1));
    let mut e = vec![vec![q(1, 2); size]; size];
    for b in 0..n - 1 {
        let (i, j) = (2 * b, 2 * b + 1);
        e[i][i] = qi(1);
        e[j][j] = qi(1);
        e[i][j] = qi(1) - t.recip();
        e[j][i] = e[i][j];
    }
    for i in 0..size {
        e[i][size - 1] = qi(1);
        e[size - 1][i] = qi(1);
    }
    e[size - 1][size - 1] = qi(2) * t;
    for row in e.iter_mut() {
        for x in row.iter_mut() {
            *x *= f;
        }
    }
    Ok(CpnMatrix { n, t, entries: e })
}

/// Root indices of the `Sp(n)` flag (`C_n`, painted `2..n`) in the order
/// used by [`CpnMatrix`].
pub fn sp_flag_root_order(fm: &FlagManifold) -> Result<Vec<usize>> {
    let rs = fm.root_system();
    let n = rs.rank();
    if rs.lie_type().series() != Series::C || fm.painted() != (2..=n).collect::<Vec<_>>() {
        return Err(Error::Parse(format!("{fm} is not the Sp(n) projective-space flag")));
    }
    let find = |e: Vec<i32>| (0..rs.len()).find(|&i| rs.c_series_lambda_coords(i).unwrap() == e).expect("root of C_n");
    let mut order = Vec::new();
    for j in 1..n {
        for s in [-1, 1] {
            let mut e = vec![0; n];
            e[0] = 1;
            e[j] = s;
            order.push(find(e));
        }
    }
    let mut top = vec![0; n];
    top[0] = 2;
    order.push(find(top));
    Ok(order)
}

/// `[R_{α γ̄ γ ᾱ}]` over the given roots: the block of the dual-Nakano
/// matrix on diagonal pairs.
pub fn diagonal_pair_block(h: &Hermitian, roots: &[usize]) -> Vec<Vec<Surd>> {
    roots.iter().map(|&a| roots.iter().map(|&g| h.griffiths_entry(a, g, g, a)).collect()).collect()
}

#[derive(Debug, Clone)]
pub struct ClassifyOptions {
    pub samples: usize,
    pub seed: u64,
    pub psd_mode: PsdMode,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions { samples: 10_000, seed: 0, psd_mode: PsdMode::ExactIfRational }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Exactness {
    pub diagonal: bool,
    pub dual_nakano: bool,
    pub nakano: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub flag: String,
    pub acs: String,
    pub metric: String,
    pub verdict: VerdictKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_eig: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nakano_min_eig: Option<f64>,
    pub certificates: Vec<LemmaCertificate>,
    pub integrable: bool,
    pub kahler: bool,
    pub quasi_kahler: bool,
    pub exactness: Exactness,
    pub samples: usize,
    pub seed: u64,
    /// Exact diagonal values `R(X_α,X_{−α},X_γ,X_{−γ})` keyed `α|γ`.
    #[serde(skip)]
    pub diagonal: Vec<((usize, usize), Q)>,
}

impl Verdict {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("verdict serializes")
    }
}

/// Classification pipeline: exact diagonal scan, Lemma certificate, dual-
/// Nakano and Nakano PSD checks, then the sampling falsifier.
pub fn classify(
    ct: &ChevalleyTable,
    fm: &FlagManifold,
    acs: &AlmostComplexStructure,
    metric: &InvariantMetric,
    opts: &ClassifyOptions,
) -> Result<Verdict> {
    let h = Hermitian::new(ct, fm, acs, metric)?;
    let rs = ct.root_system();
    let plus = h.rm_plus();

    let mut diagonal = Vec::new();
    let mut witness: Option<(Q, Witness)> = None;
    for &a in &plus {
        for &g in &plus {
            let (v, _) = h.diag_oracle(a, g);
            diagonal.push(((a, g), v));
            if v.is_negative() && witness.as_ref().is_none_or(|(w, _)| v < *w) {
                let w = Witness::BasisPair { alpha: rs.root(a).0.clone(), gamma: rs.root(g).0.clone(), value: fmt_q(&v), value_f64: to_f64(&v) };
                witness = Some((v, w));
            }
        }
    }

    let integrable = fm.is_integrable(acs);
    let kahler = fm.is_kahler(acs, metric);
    let quasi_kahler = fm.is_quasi_kahler(acs, metric);
    let mut certificates = Vec::new();
    if quasi_kahler {
        if let Some(c) = lemma_certificate(fm, acs) {
            let (v, _) = h.diag_oracle(c.alpha_index, c.gamma_index);
            if !v.is_negative() {
                return Err(Error::Consistency(format!("certificate ({:?}, {:?}) has nonnegative diagonal value", c.alpha, c.gamma)));
            }
            certificates.push(c);
        }
    }

    let dn = dual_nakano_matrix(&h)?;
    let dn_psd = check_psd(&dn, opts.psd_mode);
    let nk = nakano_matrix(&h)?;
    let nk_psd = check_psd(&nk, opts.psd_mode);

    let violated = witness.is_some();
    if violated && (dn_psd.is_psd || nk_psd.is_psd) {
        return Err(Error::Consistency(format!("{fm} {acs} {metric}: PSD curvature with a negative diagonal value")));
    }

    let mut kind = if dn_psd.is_pd {
        VerdictKind::DualNakanoPositive
    } else if dn_psd.is_psd {
        VerdictKind::DualNakanoSemipositive
    } else if nk_psd.is_pd {
        VerdictKind::NakanoPositive
    } else if nk_psd.is_psd {
        VerdictKind::NakanoSemipositive
    } else {
        VerdictKind::Indeterminate
    };

    let mut witness = witness.map(|(_, w)| w);
    if violated {
        kind = VerdictKind::GriffithsViolated;
    } else if opts.samples > 0 || kind.is_semipositive() {
        let found = griffiths_falsify(&h, opts.samples, opts.seed);
        if kind.is_semipositive() {
            if let Some(w) = found {
                return Err(Error::Consistency(format!("{fm} {acs} {metric}: PSD curvature but Griffiths witness {}", w.value())));
            }
        } else if let Some(w) = found {
            kind = VerdictKind::GriffithsViolated;
            witness = Some(w);
        } else if opts.samples > 0 {
            kind = VerdictKind::GriffithsSampledNonnegative;
        }
    }

    Ok(Verdict {
        flag: fm.label(),
        acs: acs.to_string(),
        metric: metric.to_string(),
        verdict: kind,
        witness,
        min_eig: Some(dn_psd.min_eig),
        nakano_min_eig: Some(nk_psd.min_eig),
        certificates,
        integrable,
        kahler,
        quasi_kahler,
        exactness: Exactness { diagonal: true, dual_nakano: dn_psd.exact, nakano: nk_psd.exact },
        samples: opts.samples,
        seed: opts.seed,
        diagonal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flagspace::parse_flag;

    #[test]
    fn cpn_matrix_n2_t2() {
        let m = build_cpn_matrix(2, qi(2)).unwrap();
        let want = [[qi(1), q(1, 2), qi(1)], [q(1, 2), qi(1), qi(1)], [qi(1), qi(1), qi(4)]];
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(m.entries[i][j], want[i][j] * q(1, 6));
            }
        }
        assert!(check_psd_rational(&m.entries).is_pd);
    }

    #[test]
    fn cpn_singular_and_indefinite() {
        let r = check_psd_rational(&build_cpn_matrix(2, qi(1)).unwrap().entries);
        assert!(r.is_psd && !r.is_pd && r.witness.is_some());
        assert!(r.min_eig.abs() < 1e-12);
        let r = check_psd_rational(&build_cpn_matrix(2, q(1, 2)).unwrap().entries);
        assert!(!r.is_psd && r.min_eig < 0.0 && r.witness.is_some());
        assert!(!check_psd_rational(&build_cpn_matrix(3, qi(1)).unwrap().entries).is_pd);
    }

    #[test]
    fn identity_is_pd() {
        let r = check_psd_float(&DMatrix::identity(3, 3));
        assert!(r.is_pd && r.witness.is_none() && (r.min_eig - 1.0).abs() < 1e-12);
    }

    #[test]
    fn a1_matrices_agree() {
        let fm = parse_flag("A1").unwrap();
        let ct = ChevalleyTable::build(fm.root_system_arc());
        let h = Hermitian::new(&ct, &fm, &AlmostComplexStructure::all_plus(1), &InvariantMetric::ones(1)).unwrap();
        let dn = dual_nakano_matrix(&h).unwrap();
        let nk = nakano_matrix(&h).unwrap();
        assert_eq!(dn.entries, nk.entries);
        assert_eq!(dn.entries[0][0], h.griffiths_entry(0, 0, 0, 0));
    }

    #[test]
    fn sp2_griffiths_value() {
        let fm = parse_flag("C2 k=2").unwrap();
        let ct = ChevalleyTable::build(fm.root_system_arc());
        let h = Hermitian::new(&ct, &fm, &AlmostComplexStructure::all_plus(2), &InvariantMetric::new(vec![qi(1), qi(2)]).unwrap()).unwrap();
        let plus = h.rm_plus();
        let top = plus.iter().position(|&r| ct.root_system().label(r) == "2λ1").unwrap();
        let mut u = vec![Complex::new(0.0, 0.0); plus.len()];
        u[top] = Complex::new(1.0, 0.0);
        assert!((griffiths_form(&h, &u, &u) - 2.0 / 3.0).abs() < 1e-12);
        let zero = vec![Complex::new(0.0, 0.0); plus.len()];
        assert_eq!(griffiths_form(&h, &zero, &u), 0.0);
    }
}
