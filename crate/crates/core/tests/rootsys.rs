use flagcurv::rational::{qi, Q};
use flagcurv::rootsys::{LieType, RootSystem, Series};
use proptest::prelude::*;
use std::sync::OnceLock;

fn systems() -> &'static [RootSystem] {
    static CELL: OnceLock<Vec<RootSystem>> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut all: Vec<RootSystem> = LieType::all_up_to(4).into_iter().map(RootSystem::build).collect();
        for t in [(Series::E, 6), (Series::E, 7), (Series::E, 8), (Series::B, 6), (Series::D, 6)] {
            all.push(RootSystem::build(LieType::new(t.0, t.1).unwrap()));
        }
        all
    })
}

/// `(α,β)_B = Σ_γ (α,γ)_B (β,γ)_B` characterises the Killing normalisation.
#[test]
fn killing_trace_identity() {
    for rs in systems() {
        for a in 0..rs.rank() {
            for b in 0..rs.rank() {
                let sum: Q = (0..rs.len()).map(|g| rs.killing(a, g) * rs.killing(b, g)).fold(qi(0), |x, y| x + y);
                assert_eq!(sum, rs.killing(a, b), "{} simple {a},{b}", rs.lie_type());
            }
        }
    }
}

#[test]
fn killing_scale_uses_dual_coxeter() {
    for rs in systems() {
        assert_eq!(rs.killing_scale(), qi(1) / qi(2 * rs.dual_coxeter_number()), "{}", rs.lie_type());
    }
}

#[test]
fn canonical_order() {
    for rs in systems() {
        let p = rs.num_positive();
        assert_eq!(rs.len(), 2 * p);
        for i in 0..p {
            assert!(rs.root(i).is_positive());
            assert_eq!(rs.root(rs.neg(i)), &rs.root(i).negate());
            assert_eq!(rs.neg(i), p + i);
            if i > 0 {
                assert!(rs.root(i - 1).height() <= rs.root(i).height());
            }
        }
        assert_eq!(rs.root(p - 1), rs.highest_root());
        assert_eq!(rs.highest_root().coords(), rs.marks());
    }
}

fn pair() -> impl Strategy<Value = (usize, usize, usize)> {
    (0..systems().len()).prop_flat_map(|s| {
        let n = systems()[s].len();
        (Just(s), 0..n, 0..n)
    })
}

proptest! {
    #[test]
    fn reflections_permute_roots((s, a, b) in pair()) {
        let rs = &systems()[s];
        prop_assert!(rs.index_of(&rs.reflect(a, b)).is_some());
    }

    #[test]
    fn string_length_is_cartan_integer((s, a, b) in pair()) {
        let rs = &systems()[s];
        prop_assume!(a != b && rs.neg(a) != b);
        let (p, q) = rs.root_string(a, b).unwrap();
        let cartan = qi(2) * rs.killing(b, a) / rs.killing(a, a);
        prop_assert_eq!(qi(p as i128) - qi(q as i128), cartan);
        prop_assert!(p + q <= 3);
    }

    #[test]
    fn sums_stay_in_system((s, a, b) in pair()) {
        let rs = &systems()[s];
        let sum = rs.root(a).plus(rs.root(b));
        prop_assert_eq!(rs.sum(a, b).is_some(), rs.index_of(&sum).is_some());
    }
}
