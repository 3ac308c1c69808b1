use proptest::prelude::*;

use specht_core::paths::dominant_paths;
use specht_core::regularisation::{iota, is_ep_regular, r_e, reg_e, reg_ep, reg_prime_path};
use specht_core::{Path2, PathK};

fn dominant_path(max_len: usize) -> impl Strategy<Value = Path2> {
    prop::collection::vec(any::<bool>(), 0..=max_len).prop_map(|bits| {
        let mut h = 0i64;
        let steps: Vec<i8> = bits
            .into_iter()
            .map(|up| {
                let s = if up || h == 0 { 1 } else { -1 };
                h += s as i64;
                s
            })
            .collect();
        Path2::from_steps(&steps).unwrap()
    })
}

fn pathk(max_len: usize) -> impl Strategy<Value = PathK> {
    (2usize..=3).prop_flat_map(move |k| {
        prop::collection::vec(1..=k, 0..=max_len).prop_map(move |steps| PathK::new(k, steps).unwrap())
    })
}

fn scoped_pair() -> impl Strategy<Value = (usize, usize)> {
    prop::sample::select(vec![(2, 0), (3, 0), (4, 0), (2, 2), (3, 3), (3, 2), (2, 3), (4, 3), (5, 2)])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn affine_reflection_preserves_residues(pi in pathk(12), e in 2usize..=5, pick in any::<prop::sample::Index>()) {
        let spots: Vec<(usize, usize, usize, i64)> = (0..=pi.len())
            .flat_map(|a| pi.walls_at(a, e).into_iter().map(move |(r, t, m)| (a, r, t, m)))
            .collect();
        prop_assume!(!spots.is_empty());
        let (a, r, t, m) = spots[pick.index(spots.len())];
        let refl = pi.reflect_tail(a, r, t, m, e).unwrap();
        prop_assert_eq!(refl.residue_sequence(e), pi.residue_sequence(e));
        prop_assert_eq!(refl.reflect_tail(a, r, t, m, e).unwrap(), pi);
    }

    #[test]
    fn degrees_agree(pi in dominant_path(16), e in 2usize..=6) {
        let t = pi.to_tableau();
        let d = t.degree(e);
        prop_assert_eq!(pi.degree(e), d);
        prop_assert_eq!(pi.to_pathk().degree(e).unwrap(), d);
        prop_assert_eq!(Path2::from_tableau(&t).unwrap(), pi);
    }

    #[test]
    fn reg_e_is_idempotent_and_residue_preserving(pi in dominant_path(18), e in 2usize..=6) {
        let once = reg_e(&pi, e).unwrap();
        prop_assert_eq!(once.output.residue_sequence(e), pi.residue_sequence(e));
        prop_assert!(once.output.shape().is_e_restricted(e));
        let twice = reg_e(&once.output, e).unwrap();
        prop_assert_eq!(&twice.output, &once.output);
        prop_assert_eq!(twice.r_flag, 0);
        prop_assert!(once.r_flag <= 1);
    }

    #[test]
    fn iota_is_residue_preserving_involution(pi in dominant_path(18), e in 2usize..=6) {
        let img = iota(&pi, e);
        prop_assert_eq!(iota(&img, e), pi.clone());
        prop_assert_eq!(img.residue_sequence(e), pi.residue_sequence(e));
        if r_e(&pi, e) == 0 {
            prop_assert_eq!(img.degree(e), -pi.degree(e));
        }
    }

    #[test]
    fn reg_ep_lands_in_regular_set((e, p) in scoped_pair(), pi in dominant_path(24)) {
        let chain = reg_ep(&pi, e, p).unwrap();
        let out = chain.output();
        prop_assert!(is_ep_regular(out, e, p));
        prop_assert_eq!(out.residue_sequence(e), pi.residue_sequence(e));
        let zs = chain.zset();
        prop_assert!(zs.windows(2).all(|w| w[0] > w[1]));
        if is_ep_regular(&pi, e, p) {
            prop_assert!(chain.is_trivial());
        }
    }

    #[test]
    fn reg_prime_shifts_degree_by_r((e, p) in scoped_pair(), pi in dominant_path(24)) {
        let rp = reg_prime_path(&pi, e, p).unwrap();
        prop_assert_eq!(rp.output.residue_sequence(e), pi.residue_sequence(e));
        prop_assert_eq!(rp.output.shape(), rp.chain.output().shape());
        prop_assert!(is_ep_regular(&rp.output, e, p));
        prop_assert_eq!(rp.output.degree(e), pi.degree(e) - r_e(&pi, e) as i64);
    }
}

#[test]
fn every_dominant_path_round_trips() {
    for n in 0..=10 {
        let paths = dominant_paths(n);
        let mut words: Vec<String> = paths.iter().map(|p| p.step_word()).collect();
        words.sort();
        words.dedup();
        assert_eq!(words.len(), paths.len());
        for p in &paths {
            assert_eq!(&Path2::from_step_word(&p.step_word()).unwrap(), p);
        }
    }
}
