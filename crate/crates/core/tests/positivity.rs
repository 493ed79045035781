use flagcurv::chevalley::ChevalleyTable;
use flagcurv::curvature::Hermitian;
use flagcurv::flagspace::{parse_flag, AlmostComplexStructure, InvariantMetric};
use flagcurv::positivity::*;
use flagcurv::rational::{q, qi, Q};

fn sp_flag(n: usize) -> String {
    let k: Vec<String> = (2..=n).map(|i| i.to_string()).collect();
    format!("C{n} k={}", k.join(","))
}

#[test]
fn cpn_block_matches_dual_nakano_diagonal_pairs() {
    for n in 2..=5 {
        let fm = parse_flag(&sp_flag(n)).unwrap();
        let ct = ChevalleyTable::build(fm.root_system_arc());
        let order = sp_flag_root_order(&fm).unwrap();
        for t in [q(1, 2), qi(1), q(3, 2), qi(2), qi(5)] {
            let metric = InvariantMetric::new(vec![qi(1), t]).unwrap();
            let h = Hermitian::new(&ct, &fm, &AlmostComplexStructure::all_plus(2), &metric).unwrap();
            let block = diagonal_pair_block(&h, &order);
            let cpn = build_cpn_matrix(n, t).unwrap();
            let got: Vec<Vec<Q>> = block.iter().map(|r| r.iter().map(|x| x.as_rational().unwrap()).collect()).collect();
            assert_eq!(got, cpn.entries, "n={n} t={t}");
        }
    }
}

#[test]
fn sp_flag_verdicts() {
    for n in 2..=4 {
        let fm = parse_flag(&sp_flag(n)).unwrap();
        let ct = ChevalleyTable::build(fm.root_system_arc());
        let cases = [
            ("++", q(1, 2), VerdictKind::GriffithsViolated),
            ("++", qi(1), VerdictKind::DualNakanoSemipositive),
            ("++", q(3, 2), VerdictKind::DualNakanoPositive),
            ("++", qi(2), VerdictKind::DualNakanoPositive),
            ("++", qi(5), VerdictKind::DualNakanoPositive),
            ("+-", qi(1), VerdictKind::GriffithsViolated),
            ("+-", qi(3), VerdictKind::GriffithsViolated),
        ];
        for (acs, t, want) in cases {
            let metric = InvariantMetric::new(vec![qi(1), t]).unwrap();
            let opts = ClassifyOptions { samples: 200, ..Default::default() };
            let v = classify(&ct, &fm, &acs.parse().unwrap(), &metric, &opts).unwrap();
            assert_eq!(v.verdict, want, "n={n} {acs} t={t}");
            assert!(v.exactness.dual_nakano);
            if acs == "+-" {
                assert_eq!(v.certificates.len(), 1);
            }
        }
    }
}

#[test]
fn cpn_min_eigenvalue_changes_sign_at_one() {
    for n in 2..=6 {
        for k in 2..=12 {
            let t = q(k, 4);
            let m = build_cpn_matrix(n, t).unwrap();
            let rep = check_psd_rational(&m.entries);
            match k.cmp(&4) {
                std::cmp::Ordering::Less => assert!(!rep.is_psd && rep.min_eig < 0.0, "n={n} t={t}"),
                std::cmp::Ordering::Equal => assert!(rep.is_psd && !rep.is_pd && rep.min_eig.abs() <= 1e-12, "n={n}"),
                std::cmp::Ordering::Greater => assert!(rep.is_pd && rep.min_eig > 0.0, "n={n} t={t}"),
            }
        }
    }
}

#[test]
fn dual_nakano_psd_silences_falsifier() {
    let mut psd_cases = 0;
    for flag in ["C3 k=2,3", "C3 k=3", "A3 k=2", "G2 k=1", "B3 k=1,2"] {
        let fm = parse_flag(flag).unwrap();
        let ct = ChevalleyTable::build(fm.root_system_arc());
        let k = fm.num_summands();
        for metric in [InvariantMetric::ones(k), InvariantMetric::new((0..k).map(|i| q(i as i128 + 2, 2)).collect()).unwrap()] {
            for acs in fm.enumerate_acs() {
                let h = Hermitian::new(&ct, &fm, &acs, &metric).unwrap();
                let rep = check_psd(&dual_nakano_matrix(&h).unwrap(), PsdMode::ExactIfRational);
                if rep.is_psd {
                    psd_cases += 1;
                    assert!(griffiths_falsify(&h, 2000, 7).is_none(), "{flag} {acs} {metric}");
                }
            }
        }
    }
    assert!(psd_cases > 0);
}

#[test]
fn psd_verdict_ignores_row_order() {
    let fm = parse_flag("C3 k=2,3").unwrap();
    let ct = ChevalleyTable::build(fm.root_system_arc());
    for t in [q(1, 2), qi(1), qi(2)] {
        let metric = InvariantMetric::new(vec![qi(1), t]).unwrap();
        let h = Hermitian::new(&ct, &fm, &AlmostComplexStructure::all_plus(2), &metric).unwrap();
        let m = dual_nakano_matrix(&h).unwrap();
        let rows: Vec<Vec<Q>> = m.entries.iter().map(|r| r.iter().map(|x| x.as_rational().unwrap()).collect()).collect();
        let n = rows.len();
        let perm: Vec<usize> = (0..n).map(|i| (i * 7 + 3) % n).collect();
        assert_eq!(perm.iter().collect::<std::collections::BTreeSet<_>>().len(), n);
        let shuffled: Vec<Vec<Q>> = perm.iter().map(|&i| perm.iter().map(|&j| rows[i][j]).collect()).collect();
        let a = check_psd_rational(&rows);
        let b = check_psd_rational(&shuffled);
        assert_eq!((a.is_psd, a.is_pd), (b.is_psd, b.is_pd), "t={t}");
        assert!((a.min_eig - b.min_eig).abs() < 1e-12);
    }
}
