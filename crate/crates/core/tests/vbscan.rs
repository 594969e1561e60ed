mod common;

use common::{binom, q, rank, Q};
use proptest::prelude::*;
use vbetti_core::linalg::{IntMatrix, RatMatrix};
use vbetti_core::nilgroup::{FreeNilpotentSpec, NilpotentAction};
use vbetti_core::spectral::betti_numbers;
use vbetti_core::vbscan::{
    hirsch_bound, koszul_differential, koszul_dims, koszul_homology, power_subgroup, vb_scan, QModuleFD,
};

fn upper(d: usize, diag: &[i64], above: &[i64]) -> RatMatrix {
    let mut m = RatMatrix::zeros(d, d);
    let mut k = 0;
    for i in 0..d {
        m.set(i, i, q(diag[i]));
        for j in i + 1..d {
            m.set(i, j, q(above[k]));
            k += 1;
        }
    }
    m
}

/// Commuting upper-triangular operators `a_k I + b_k M` sharing the flag `e_1 ⊂ e_1,e_2 ⊂ …`.
fn random_module() -> impl Strategy<Value = QModuleFD> {
    (1usize..=4, 1usize..=3)
        .prop_flat_map(|(d, n)| {
            (
                Just(d),
                prop::collection::vec(prop::sample::select(vec![1i64, -1, 2, 3]), d),
                prop::collection::vec(-2i64..=2, d * (d - 1) / 2),
                prop::collection::vec((-1i64..=2, -1i64..=1), n),
            )
        })
        .prop_filter_map("singular generator", |(d, diag, above, coeffs)| {
            let m = upper(d, &diag, &above);
            let gens: Vec<RatMatrix> =
                coeffs.iter().map(|&(a, b)| &RatMatrix::identity(d).scale(&q(a)) + &m.scale(&q(b))).collect();
            QModuleFD::new(d, gens).ok()
        })
}

fn minus_identity_rows(g: &RatMatrix) -> Vec<Vec<Q>> {
    g.minus_identity().to_rows()
}

/// `dim M_Q = d − rank[g_1 − 1 | … | g_n − 1]`.
fn coinvariants(module: &QModuleFD) -> usize {
    let d = module.dim();
    let mut rows = vec![Vec::new(); d];
    for g in module.generators() {
        for (i, r) in minus_identity_rows(g).into_iter().enumerate() {
            rows[i].extend(r);
        }
    }
    d - rank(rows)
}

/// `dim M^Q = d − rank` of the stacked `g_i − 1`.
fn invariants(module: &QModuleFD) -> usize {
    let rows: Vec<Vec<Q>> = module.generators().iter().flat_map(minus_identity_rows).collect();
    module.dim() - rank(rows)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn koszul_complex_squares_to_zero(module in random_module()) {
        for p in 2..=module.rank() {
            let d = &koszul_differential(&module, p - 1) * &koszul_differential(&module, p);
            prop_assert!(d.is_zero());
        }
    }

    #[test]
    fn koszul_euler_characteristic_vanishes(module in random_module()) {
        let chi: i64 = koszul_dims(&module).iter().enumerate()
            .map(|(p, &h)| if p % 2 == 0 { h as i64 } else { -(h as i64) })
            .sum();
        prop_assert_eq!(chi, 0);
    }

    #[test]
    fn koszul_ends_are_coinvariants_and_invariants(module in random_module()) {
        prop_assert_eq!(koszul_homology(&module, 0), coinvariants(&module));
        prop_assert_eq!(koszul_homology(&module, module.rank()), invariants(&module));
    }

    #[test]
    fn subquotient_inequality(module in random_module(), k in 1usize..=3, m in 1u64..=6) {
        // U = span(e_1..e_k) is invariant because the generators are upper triangular
        let d = module.dim();
        prop_assume!(k < d);
        let basis: Vec<Vec<Q>> = (0..k).map(|i| (0..d).map(|j| q((i == j) as i64)).collect()).collect();
        let w = power_subgroup(&module, m).unwrap();
        let u = w.restrict(&basis).unwrap();
        let quotient = w.quotient(&basis).unwrap();
        prop_assert!(koszul_homology(&u, 0) <= koszul_homology(&w, 0) + koszul_homology(&quotient, 1));
    }

    #[test]
    fn powers_compose(module in random_module(), a in 1u64..=5, b in 1u64..=5) {
        let twice = power_subgroup(&power_subgroup(&module, a).unwrap(), b).unwrap();
        prop_assert_eq!(twice, power_subgroup(&module, a * b).unwrap());
    }
}

#[test]
fn trivial_module_has_binomial_homology() {
    for d in 0..=3 {
        for n in 1..=4 {
            let module = QModuleFD::trivial(d, n);
            let expected: Vec<usize> = (0..=n).map(|p| d * binom(n, p)).collect();
            assert_eq!(koszul_dims(&module), expected);
        }
    }
}

fn anosov_on_heisenberg() -> NilpotentAction {
    NilpotentAction::new(FreeNilpotentSpec::new(2, 2).unwrap(), vec![IntMatrix::from_i64(&[&[2, 1], &[1, 1]])]).unwrap()
}

#[test]
fn anosov_scan_is_stable() {
    let act = anosov_on_heisenberg();
    for j in 0..=3 {
        let report = vb_scan(&act, j, 64).unwrap();
        assert!(report.is_constant(), "j={j}: {:?}", report.totals());
        assert!(report.verdict.bounded);
        assert_eq!(report.observed_sup, report.verdict.reference_total);
    }
    assert_eq!(vb_scan(&act, 1, 64).unwrap().totals(), vec![1; 64]);
}

#[test]
fn trivial_action_scan_matches_closed_form() {
    for r in 2..=3 {
        let spec = FreeNilpotentSpec::new(r, 2).unwrap();
        let b = betti_numbers(&spec).unwrap();
        for n in 1..=2 {
            let act = NilpotentAction::trivial(spec, n);
            for j in 0..=3 {
                let report = vb_scan(&act, j, 6).unwrap();
                for row in &report.rows {
                    for t in &row.terms {
                        assert_eq!(t.dim, b[t.q] * binom(n, t.p), "r={r} n={n} j={j} {t:?}");
                    }
                }
                let closed: usize = (0..=j).map(|p| binom(n, p) * b.get(j - p).copied().unwrap_or(0)).sum();
                assert_eq!(report.totals(), vec![closed; 6]);
            }
        }
    }
}

#[test]
fn finite_order_action_grows_then_stabilizes() {
    // x ↦ −x on H₁ has no coinvariants until m is even
    let act =
        NilpotentAction::new(FreeNilpotentSpec::new(2, 2).unwrap(), vec![IntMatrix::from_i64(&[&[-1, 0], &[0, -1]])])
            .unwrap();
    let report = vb_scan(&act, 1, 6).unwrap();
    assert_eq!(report.totals(), vec![1, 3, 1, 3, 1, 3]);
    assert_eq!(report.verdict.reference_total, 3);
    assert!(report.verdict.bounded);
}

#[test]
fn hirsch_bound_is_binomial() {
    for h in 0..=10 {
        for j in 0..=h + 1 {
            assert_eq!(hirsch_bound(h, j), binom(h, j));
        }
    }
}
