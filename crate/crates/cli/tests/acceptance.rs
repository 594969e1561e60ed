//! Acceptance suite: one line per criterion, nonzero exit on any failure.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{binom, extension_lie_algebra, free_class2_lie_algebra, lie_algebra_betti, q, rank};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use vbetti_core::filtration::{bound, filtration_certificate, induced_homology_action, is_nilpotent_action};
use vbetti_core::linalg::{IntMatrix, RatMatrix};
use vbetti_core::nilgroup::{AbelianFG, CentralExtension, FreeNilpotentSpec, NilpotentAction};
use vbetti_core::sigma::{
    finite_dimensional_is_fully_tame, m_tame, m_tame_witness, sigma_complement, sigma_complement_principal, Cone,
    ConeUnion, CyclicModuleSpec, LaurentPoly,
};
use vbetti_core::spectral::{betti_numbers, d2_ks};
use vbetti_core::vbscan::{hirsch_bound, hypothesis_report, vb_scan};
use vbetti_core::Page;

type Check = std::result::Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Check {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:?}, limit {limit:?}"))
}

fn ks_spec(r: usize) -> FreeNilpotentSpec {
    FreeNilpotentSpec::new(r, 2).unwrap()
}

fn euler_and_duality(b: &[usize]) -> Check {
    let chi: i64 = b.iter().enumerate().map(|(j, &x)| if j % 2 == 0 { x as i64 } else { -(x as i64) }).sum();
    ensure(chi == 0, || format!("Euler characteristic {chi} for {b:?}"))?;
    let h = b.len() - 1;
    ensure((0..=h).all(|j| b[j] == b[h - j]), || format!("duality fails for {b:?}"))
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let b = betti_numbers(&ks_spec(2)).map_err(|e| e.to_string())?;
    ensure(b == [1, 2, 2, 1], || format!("betti {b:?}"))?;
    within(start, Duration::from_secs(1))?;
    // rank–nullity on the explicit d² matrices
    let rk = |p: usize, q: usize| if p >= 2 && q < 1 { rank(d2_ks(2, p, q).to_rows()) } else { 0 };
    let oracle: Vec<usize> = (0..=3)
        .map(|j| {
            (0..=j.min(2))
                .filter(|&p| j - p <= 1)
                .map(|p| {
                    let qd = j - p;
                    let incoming = if qd >= 1 { rk(p + 2, qd - 1) } else { 0 };
                    binom(2, p) * binom(1, qd) - rk(p, qd) - incoming
                })
                .sum()
        })
        .collect();
    ensure(oracle == b, || format!("rank–nullity oracle {oracle:?}"))?;
    ensure(lie_algebra_betti(&free_class2_lie_algebra(2)) == b, || "Chevalley–Eilenberg mismatch".into())?;
    euler_and_duality(&b)
}

fn criterion_2() -> Check {
    let start = Instant::now();
    for r in 2..=3 {
        let page = Page::free_nilpotent(&ks_spec(r)).map_err(|e| e.to_string())?;
        let h = r + binom(r, 2);
        let b: Vec<usize> = (0..=h).map(|j| (0..=j).map(|i| page.e3_dim(i, j - i)).sum()).collect();
        euler_and_duality(&b)?;
        ensure(lie_algebra_betti(&free_class2_lie_algebra(r)) == b, || format!("r={r}: CE mismatch {b:?}"))?;
    }
    within(start, Duration::from_secs(10))
}

fn random_pairing(rng: &mut StdRng, n: usize, a: usize) -> Vec<Vec<i64>> {
    (0..a).map(|_| (0..binom(n, 2)).map(|_| rng.gen_range(-2..=2)).collect()).collect()
}

fn extension(n: usize, a: usize, pairing: &[Vec<i64>]) -> CentralExtension {
    let rows: Vec<&[i64]> = pairing.iter().map(Vec::as_slice).collect();
    let m = if a == 0 { IntMatrix::zeros(0, binom(n, 2)) } else { IntMatrix::from_i64(&rows) };
    CentralExtension::new(AbelianFG::free(n), AbelianFG::free(a), m).unwrap()
}

fn criterion_3() -> Check {
    let mut rng = StdRng::seed_from_u64(3);
    for case in 0..100 {
        let n = rng.gen_range(1..=4);
        let a = rng.gen_range(0..=3);
        let pairing = random_pairing(&mut rng, n, a);
        let page = Page::e2(&extension(n, a, &pairing)).map_err(|e| e.to_string())?;
        ensure(page.d_squared_vanishes(), || format!("case {case}: n={n} a={a} {pairing:?}"))?;
    }
    for r in 1..=4 {
        let page = Page::free_nilpotent(&ks_spec(r)).map_err(|e| e.to_string())?;
        ensure(page.d_squared_vanishes(), || format!("KS page r={r}"))?;
    }
    Ok(())
}

fn criterion_4() -> Check {
    let mut rng = StdRng::seed_from_u64(4);
    let mut cases = 0;
    while cases < 100 {
        let n = rng.gen_range(2..=4);
        let a = rng.gen_range(1..=3.min(binom(n, 2)));
        let pairing = random_pairing(&mut rng, n, a);
        let rows: Vec<Vec<_>> = pairing.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
        if rank(rows) < a {
            continue;
        }
        cases += 1;
        let page = Page::e2(&extension(n, a, &pairing)).map_err(|e| e.to_string())?;
        for qd in 0..a {
            let d = page.differential(2, qd).expect("p = 2 differential");
            ensure(d.rank() == page.dim(0, qd + 1), || format!("d²_(2,{qd}) not onto for {pairing:?}"))?;
        }
        for qd in 1..=4 {
            ensure(page.e3_dim(0, qd) == 0, || format!("E³_(0,{qd}) ≠ 0 for {pairing:?}"))?;
        }
        let ce = lie_algebra_betti(&extension_lie_algebra(n, a, &pairing));
        let e3: Vec<usize> = (0..=n + a).map(|j| page.e3_total(j)).collect();
        ensure(e3.iter().zip(&ce).all(|(x, y)| x >= y), || format!("E³ {e3:?} below CE {ce:?}"))?;
    }
    Ok(())
}

fn criterion_5() -> Check {
    for r in 1..=3 {
        for c in 1..=3 {
            let spec = FreeNilpotentSpec::new(r, c).unwrap();
            for j in 0..=4 {
                let cert = filtration_certificate(&spec, j).map_err(|e| e.to_string())?;
                for layer in &cert.layers {
                    ensure(layer.tensor_degree <= bound(c, j), || format!("r={r} c={c} j={j}: {layer:?}"))?;
                }
                ensure(cert.verdict.bound_satisfied, || format!("r={r} c={c} j={j}: verdict"))?;
                if c <= 2 {
                    let b = betti_numbers(&spec).map_err(|e| e.to_string())?;
                    let expected = b.get(j).copied().unwrap_or(0);
                    ensure(cert.total_dimension() == expected, || {
                        format!("r={r} c={c} j={j}: layers sum to {} not {expected}", cert.total_dimension())
                    })?;
                }
            }
        }
    }
    Ok(())
}

/// `E³_{1,2}` of the Heisenberg group vanishes because its centre has rank 1,
/// so degree 3 is checked on ranks 3 and 4.
fn criterion_6() -> Check {
    for (r, j_max) in [(2, 2), (3, 3), (4, 3)] {
        for j in 1..=j_max {
            let cert = filtration_certificate(&ks_spec(r), j).map_err(|e| e.to_string())?;
            let layer = cert.first_layer().ok_or_else(|| format!("r={r} j={j}: no i=1 layer"))?;
            ensure(layer.tensor_degree == 2 * j - 1 && layer.tensor_degree == bound(2, j), || {
                format!("r={r} j={j}: degree {}", layer.tensor_degree)
            })?;
            ensure(layer.dimension > 0, || format!("r={r} j={j}: i=1 layer is zero"))?;
        }
    }
    Ok(())
}

fn poly(nvars: usize, terms: &[(i64, &[i64])]) -> LaurentPoly {
    LaurentPoly::from_int_terms(nvars, terms).unwrap()
}

fn criterion_7() -> Check {
    let limit = Duration::from_secs(1);
    let start = Instant::now();
    let f = poly(1, &[(1, &[1]), (-2, &[0])]);
    let sc = sigma_complement_principal(&f).map_err(|e| e.to_string())?;
    ensure(sc.is_empty(), || format!("Σ^c(t−2) = {sc:?}"))?;
    for m in 2..=12 {
        ensure(m_tame(&sc, m).unwrap(), || format!("t−2 not {m}-tame"))?;
    }
    within(start, limit)?;

    let start = Instant::now();
    let lamp = sigma_complement(&CyclicModuleSpec::free(1)).map_err(|e| e.to_string())?;
    let lamp = lamp.exact().ok_or("lamplighter Σ^c unresolved")?;
    ensure(!m_tame(lamp, 2).unwrap(), || "lamplighter is 2-tame".into())?;
    within(start, limit)?;

    let start = Instant::now();
    let f = poly(2, &[(1, &[0, 0]), (1, &[1, 0]), (1, &[0, 1])]);
    let sc = sigma_complement_principal(&f).map_err(|e| e.to_string())?;
    ensure(m_tame(&sc, 2).unwrap(), || "1+t+s not 2-tame".into())?;
    ensure(m_tame_witness(&sc, 3).unwrap().is_some(), || "1+t+s is 3-tame".into())?;
    let rays = [[0, 1], [1, 0], [-1, -1]];
    for r in rays {
        ensure(sc.contains(&[q(r[0]), q(r[1])]), || format!("{r:?} not in Σ^c(1+t+s)"))?;
    }
    ensure((0..2).all(|k| rays.iter().map(|r| r[k]).sum::<i64>() == 0), || "rays do not sum to 0".into())?;
    within(start, limit)
}

fn cross(a: [i64; 2], b: [i64; 2]) -> i64 {
    a[0] * b[1] - a[1] * b[0]
}

/// Closed convex sector from `u` counterclockwise to `w`, angle < π.
fn sector_contains(u: [i64; 2], w: [i64; 2], v: [i64; 2]) -> bool {
    v != [0, 0] && cross(u, v) >= 0 && cross(v, w) >= 0
}

fn antipodal_pair(sectors: &[([i64; 2], [i64; 2])]) -> bool {
    sectors.iter().any(|&(u, w)| {
        sectors.iter().any(|&(s, t)| {
            let (ns, nt) = ([-s[0], -s[1]], [-t[0], -t[1]]);
            [u, w].iter().any(|&r| sector_contains(ns, nt, r)) || [ns, nt].iter().any(|&r| sector_contains(u, w, r))
        })
    })
}

fn criterion_8() -> Check {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(8);
    let dir = |rng: &mut StdRng| loop {
        let d = [rng.gen_range(-3..=3), rng.gen_range(-3..=3)];
        if d != [0, 0] {
            return d;
        }
    };
    let mut cases = 0;
    while cases < 50 {
        let k = rng.gen_range(1..=3);
        let sectors: Vec<([i64; 2], [i64; 2])> = (0..k).map(|_| (dir(&mut rng), dir(&mut rng))).collect();
        if sectors.iter().any(|&(u, w)| cross(u, w) <= 0) {
            continue;
        }
        cases += 1;
        let cones =
            sectors.iter().map(|&(u, w)| Cone::from_i64(2, &[], &[&[-u[1], u[0]], &[w[1], -w[0]]]).unwrap()).collect();
        let sc = ConeUnion::new(cones).unwrap();
        ensure(m_tame(&sc, 2).unwrap() != antipodal_pair(&sectors), || format!("2-tame vs antipodal: {sectors:?}"))?;
        monotone(&sc)?;
    }
    for _ in 0..50 {
        let k = rng.gen_range(1..=3);
        let cones = (0..k)
            .map(|_| {
                let rows: Vec<Vec<i64>> =
                    (0..rng.gen_range(1..=3)).map(|_| (0..3).map(|_| rng.gen_range(-2..=2)).collect()).collect();
                let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
                Cone::from_i64(3, &[], &refs).unwrap()
            })
            .collect();
        monotone(&ConeUnion::new(cones).unwrap())?;
    }
    within(start, Duration::from_secs(30))
}

fn monotone(sc: &ConeUnion) -> Check {
    let tame: Vec<bool> = (2..=6).map(|m| m_tame(sc, m).unwrap()).collect();
    ensure(tame.windows(2).all(|w| w[0] || !w[1]), || format!("not monotone {tame:?} on {sc:?}"))
}

fn unipotent(rng: &mut StdRng, r: usize) -> IntMatrix {
    let mut rows = vec![vec![0i64; r]; r];
    for (i, row) in rows.iter_mut().enumerate() {
        row[i] = 1;
        for x in row.iter_mut().skip(i + 1) {
            *x = rng.gen_range(-2..=2);
        }
    }
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    IntMatrix::from_i64(&refs)
}

fn criterion_9() -> Check {
    let mut rng = StdRng::seed_from_u64(9);
    for case in 0..20 {
        let r = rng.gen_range(2..=3);
        let c = rng.gen_range(1..=2);
        let u = unipotent(&mut rng, r);
        let gens = vec![u.clone(), u.mul(&u).unwrap()];
        let act = NilpotentAction::new(FreeNilpotentSpec::new(r, c).unwrap(), gens).unwrap();
        for j in 0..=3 {
            let ops = induced_homology_action(&act, j).map_err(|e| e.to_string())?;
            let report = is_nilpotent_action(&ops).map_err(|e| e.to_string())?;
            ensure(report.nilpotent, || format!("case {case}: r={r} c={c} j={j} not nilpotent"))?;
        }
    }
    Ok(())
}

fn criterion_10() -> Check {
    let start = Instant::now();
    let heis = ks_spec(2);
    let anosov = NilpotentAction::new(heis, vec![IntMatrix::from_i64(&[&[2, 1], &[1, 1]])]).unwrap();
    for j in 0..=3 {
        let report = vb_scan(&anosov, j, 64).map_err(|e| e.to_string())?;
        ensure(report.is_constant() && report.verdict.bounded, || format!("j={j}: {:?}", report.totals()))?;
    }
    let b = betti_numbers(&heis).map_err(|e| e.to_string())?;
    for n in 1..=2 {
        let trivial = NilpotentAction::trivial(heis, n);
        for j in 0..=3 {
            let report = vb_scan(&trivial, j, 64).map_err(|e| e.to_string())?;
            for row in &report.rows {
                for t in &row.terms {
                    ensure(t.dim == b[t.q] * binom(n, t.p), || format!("n={n} j={j} m={}: {t:?}", row.m))?;
                }
            }
        }
    }
    within(start, Duration::from_secs(30))
}

fn criterion_11() -> Check {
    let primes = [2i64, 3, 5, 7];
    for n in 1..=4 {
        // Abels-style: diagonal action with distinct prime eigenvalues
        let actions: Vec<RatMatrix> = (0..n)
            .map(|i| {
                let d: Vec<_> = (0..2).map(|k| if k == 0 { q(primes[i]) } else { q(1) / q(primes[i]) }).collect();
                RatMatrix::diagonal(&d)
            })
            .collect();
        let cert = finite_dimensional_is_fully_tame(2, &actions).map_err(|e| e.to_string())?;
        for c in 1..=3 {
            let report = hypothesis_report(c, n, &cert.sigma_complement).map_err(|e| e.to_string())?;
            ensure(report.requirement == 2 * (c * (n - 1) + 1), || format!("requirement {}", report.requirement))?;
            ensure(report.holds && report.verdict == format!("vb_j finite for j ≤ {n}"), || {
                format!("c={c} n={n}: {}", report.verdict)
            })?;
        }
    }
    let lamp = sigma_complement(&CyclicModuleSpec::free(1)).map_err(|e| e.to_string())?;
    let report = hypothesis_report(2, 1, lamp.exact().ok_or("unresolved")?).map_err(|e| e.to_string())?;
    ensure(!report.holds && report.fails_at_m == Some(2), || format!("lamplighter: {}", report.verdict))
}

fn criterion_12() -> Check {
    for h in 0..=10 {
        for j in 0..=h + 1 {
            ensure(hirsch_bound(h, j) == binom(h, j), || format!("C({h},{j})"))?;
        }
    }
    ensure(hirsch_bound(3, 1) == 3 && hirsch_bound(4, 2) == 6, || "spot values".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("Heisenberg Betti numbers (1,2,2,1)", criterion_1),
        ("E3 Euler characteristic and duality for r = 2, 3", criterion_2),
        ("d2 squares to zero on random extensions and KS pages", criterion_3),
        ("surjective pairings give onto d2 and vanishing E3 column", criterion_4),
        ("filtration layers obey c(j-1)+1 and sum to Betti numbers", criterion_5),
        ("first layer reaches degree 2j-1 with nonzero dimension", criterion_6),
        ("Sigma and tameness fixtures", criterion_7),
        ("tameness is monotone and 2-tame iff no antipodal pair", criterion_8),
        ("unipotent actions are nilpotent on homology", criterion_9),
        ("virtual Betti scans are bounded and match closed forms", criterion_10),
        ("hypothesis report for finite-dimensional and lamplighter modules", criterion_11),
        ("hirsch_bound equals C(h,j)", criterion_12),
    ];
    let mut failed = 0;
    for (i, (desc, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        match check() {
            Ok(()) => println!("criterion {}: PASS {desc} ({:.2?})", i + 1, start.elapsed()),
            Err(e) => {
                failed += 1;
                println!("criterion {}: FAIL {desc}: {e}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
