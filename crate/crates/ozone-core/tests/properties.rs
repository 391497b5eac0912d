//! Randomized property suites: contracts of the integer linear algebra and
//! agreement between the lattice route and the exhaustive oracle.

use ozone_core::{
    expand_series, hilbert_series, is_central, kernel_lattice, oracle_central_residues,
    pfaffian, pfaffian_adjugate, product_of_one_minus_powers, series_equal, smith_normal_form,
    verify_equivalences, IntMat, SkewParams,
};
use proptest::prelude::*;

fn arb_params() -> impl Strategy<Value = SkewParams> {
    (2usize..=4, 2i64..=12)
        .prop_flat_map(|(n, ell)| {
            proptest::collection::vec(0..ell, n * (n - 1) / 2)
                .prop_map(move |upper| SkewParams::from_upper(ell, n, &upper))
        })
        .prop_filter_map("matrix must present a noncommutative ring", Result::ok)
}

fn arb_int_matrix() -> impl Strategy<Value = IntMat> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
        proptest::collection::vec(-20i128..=20, r * c).prop_map(move |data| {
            let rows: Vec<Vec<i128>> = data.chunks(c).map(<[i128]>::to_vec).collect();
            IntMat::from_rows(rows).expect("dimensions are consistent by construction")
        })
    })
}

fn arb_skew_matrix(dims: &'static [usize]) -> impl Strategy<Value = IntMat> {
    proptest::sample::select(dims.to_vec()).prop_flat_map(|n| {
        proptest::collection::vec(-9i128..=9, n * (n - 1) / 2).prop_map(move |upper| {
            let mut rows = vec![vec![0i128; n]; n];
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    rows[i][j] = upper[k];
                    rows[j][i] = -upper[k];
                    k += 1;
                }
            }
            IntMat::from_rows(rows).expect("square by construction")
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn smith_normal_form_satisfies_its_contract(m in arb_int_matrix()) {
        let snf = smith_normal_form(&m).unwrap();
        // L * M * R is the diagonal matrix of the invariant factors.
        let product = snf.l.mul(&m).unwrap().mul(&snf.r).unwrap();
        let mut expected = IntMat::zero(m.rows(), m.cols());
        for (k, &d) in snf.d.iter().enumerate() {
            expected.set(k, k, d);
        }
        prop_assert_eq!(product.to_rows(), expected.to_rows());
        // Entries are nonnegative and each divides the next (zeros trail).
        for pair in snf.d.windows(2) {
            prop_assert!(pair[0] >= 0 && pair[1] >= 0);
            if pair[0] == 0 {
                prop_assert_eq!(pair[1], 0);
            } else {
                prop_assert_eq!(pair[1] % pair[0], 0);
            }
        }
        // The transforms are unimodular.
        prop_assert_eq!(snf.l.determinant().unwrap().abs(), 1);
        prop_assert_eq!(snf.r.determinant().unwrap().abs(), 1);
    }

    #[test]
    fn pfaffian_squares_to_the_determinant(m in arb_skew_matrix(&[2, 4, 6])) {
        let pf = pfaffian(&m).unwrap();
        prop_assert_eq!(pf * pf, m.determinant().unwrap());
    }

    #[test]
    fn pfaffian_adjugate_contracts_to_pfaffian(m in arb_skew_matrix(&[2, 4])) {
        let pf = pfaffian(&m).unwrap();
        let adj = pfaffian_adjugate(&m).unwrap();
        let mut scaled_identity = IntMat::zero(m.rows(), m.rows());
        for k in 0..m.rows() {
            scaled_identity.set(k, k, pf);
        }
        prop_assert_eq!(adj.mul(&m).unwrap().to_rows(), scaled_identity.to_rows());
    }

    #[test]
    fn normalization_is_idempotent(p in arb_params()) {
        let again = SkewParams::new(p.ell(), p.b().to_vec()).unwrap();
        prop_assert_eq!(again, p);
    }

    #[test]
    fn lattice_residues_match_exhaustive_scan(p in arb_params()) {
        let lattice = kernel_lattice(&p).unwrap().residues(1_000_000).unwrap();
        let scanned = oracle_central_residues(&p, 1_000_000).unwrap();
        prop_assert_eq!(lattice, scanned);
    }

    #[test]
    fn series_raw_and_reduced_forms_agree(p in arb_params()) {
        let s = hilbert_series(&p, 1_000_000).unwrap();
        let raw_den = product_of_one_minus_powers(&s.denominator_exponents).unwrap();
        prop_assert!(series_equal(
            &s.numerator,
            &raw_den,
            &s.reduced.numerator,
            &s.reduced.denominator,
        )
        .unwrap());
        let coeffs = expand_series(&s, 2 * p.ell() as usize).unwrap();
        prop_assert_eq!(coeffs[0], 1);
        prop_assert!(coeffs.iter().all(|&c| c >= 0));
    }

    #[test]
    fn generators_form_a_minimal_central_antichain(p in arb_params()) {
        let generators = ozone_core::center_generators(&p, 1_000_000).unwrap();
        for g in &generators {
            prop_assert!(is_central(&p, g).unwrap());
        }
        for (i, g) in generators.iter().enumerate() {
            for (j, h) in generators.iter().enumerate() {
                if i != j {
                    prop_assert!(
                        !g.iter().zip(h.iter()).all(|(a, b)| a <= b),
                        "generator {:?} dominates {:?}",
                        h,
                        g
                    );
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn structural_laws_hold_on_random_rings(p in arb_params()) {
        for law in verify_equivalences(&p, 1_000_000).unwrap() {
            prop_assert!(law.holds, "law {} failed: {:?}", law.law, law.detail);
        }
    }
}
