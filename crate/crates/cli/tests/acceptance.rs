//! Acceptance suite. Prints one `criterion N: PASS|FAIL` line per criterion
//! and exits non-zero if any criterion fails.

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use psdsplit::linalg::{hermitian_eig, HermitianMatrix, MatrixC};
use psdsplit::psd::{nearest_psd, optimality_gap, psd_product_min_eig, split_pos_neg};
use psdsplit::random;
use psdsplit::spectra::{
    horn_check, horn_sets, practical_check, sum_spectrum_oracle, weyl_check, HornTriple,
    InequalityForm, SpectrumTriple,
};
use psdsplit::tensor::fixtures::{bell_phi_plus, werner};
use psdsplit::tensor::{
    additivity_residuals, commuting_additivity_check, commuting_family_approx, make_density,
    nearest_psd_tensor, operator_schmidt, ppt_check, tensor_split, tensor_sum_bound_report,
    BipartiteDims, SchmidtDecomposition, SchmidtTerm,
};
use rand::Rng;

const TOL: f64 = 1e-10;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within_time(start: Instant, limit: Duration) -> Result<Duration, String> {
    let elapsed = start.elapsed();
    ensure(elapsed < limit, || {
        format!("took {elapsed:.2?}, limit {limit:?}")
    })?;
    Ok(elapsed)
}

fn sign_vector<R: Rng>(rng: &mut R, n: usize) -> Vec<f64> {
    (0..n)
        .map(|_| if rng.gen_bool(0.5) { 1.0 } else { -1.0 })
        .collect()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut rng = random::rng(1);
    let mut worst = f64::INFINITY;
    let mut worst_at_plus: f64 = 0.0;
    for i in 0..10_000 {
        let n = 1 + i % 6;
        let a = random::random_hermitian(&mut rng, n);
        let rank = rng.gen_range(1..=n);
        let b = random::random_psd(&mut rng, n, rank);
        let gap = optimality_gap(&a, &b, TOL).map_err(|e| e.to_string())?;
        worst = worst.min(gap);
        if i % 10 == 0 {
            let plus = nearest_psd(&a, TOL).map_err(|e| e.to_string())?.approximant;
            worst_at_plus = worst_at_plus.max(
                optimality_gap(&a, &plus, TOL)
                    .map_err(|e| e.to_string())?
                    .abs(),
            );
        }
    }
    ensure(worst >= -1e-9, || format!("gap {worst:e} below -1e-9"))?;
    ensure(worst_at_plus <= 1e-9, || {
        format!("gap at A+ is {worst_at_plus:e}")
    })?;
    let t = within_time(start, Duration::from_secs(10))?;
    Ok(format!(
        "min gap {worst:.3e}, max |gap at A+| {worst_at_plus:.1e}, {t:.2?}"
    ))
}

/// Brute-force minimum of `‖A − LLᵀ‖_F` over lower-triangular `L` on a grid.
fn grid_min(a: &MatrixC, lo: [f64; 3], hi: [f64; 3], step: f64) -> (f64, [f64; 3]) {
    let (a11, a12, a22) = (a[(0, 0)].re, a[(0, 1)].re, a[(1, 1)].re);
    let count = |k: usize| ((hi[k] - lo[k]) / step).round() as i64;
    let mut best = (f64::INFINITY, lo);
    for i in 0..=count(0) {
        let l11 = lo[0] + i as f64 * step;
        for j in 0..=count(1) {
            let l21 = lo[1] + j as f64 * step;
            for k in 0..=count(2) {
                let l22 = lo[2] + k as f64 * step;
                let (b11, b12, b22) = (l11 * l11, l11 * l21, l21 * l21 + l22 * l22);
                let d2 = (a11 - b11).powi(2) + 2.0 * (a12 - b12).powi(2) + (a22 - b22).powi(2);
                if d2 < best.0 {
                    best = (d2, [l11, l21, l22]);
                }
            }
        }
    }
    (best.0.sqrt(), best.1)
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut rng = random::rng(2);
    let mut worst_coarse = f64::INFINITY;
    let mut worst_fine: f64 = 0.0;
    for _ in 0..50 {
        let a = random::random_real_symmetric(&mut rng, 2);
        let target = nearest_psd(&a, TOL).map_err(|e| e.to_string())?.distance;
        let (coarse, at) = grid_min(&a, [0.0, -1.5, 0.0], [1.5, 1.5, 1.5], 0.01);
        ensure(coarse >= target - 5e-2, || {
            format!("grid found {coarse} below {target} - 5e-2")
        })?;
        let lo = [
            (at[0] - 0.02).max(0.0),
            at[1] - 0.02,
            (at[2] - 0.02).max(0.0),
        ];
        let hi = [at[0] + 0.02, at[1] + 0.02, at[2] + 0.02];
        let (fine, _) = grid_min(&a, lo, hi, 0.001);
        ensure(fine >= target - 1e-9, || {
            format!("refined grid {fine} beats {target}")
        })?;
        ensure(fine <= coarse + 1e-12, || {
            format!("refinement went from {coarse} to {fine}")
        })?;
        ensure(fine - target <= 5e-3, || {
            format!("refined grid {fine} stays far from {target}")
        })?;
        worst_coarse = worst_coarse.min(coarse - target);
        worst_fine = worst_fine.max(fine - target);
    }
    let t = within_time(start, Duration::from_secs(10))?;
    Ok(format!(
        "min coarse excess {worst_coarse:.2e}, max refined excess {worst_fine:.2e}, {t:.2?}"
    ))
}

fn criterion_3() -> Outcome {
    let mut rng = random::rng(3);
    let mut worst = f64::INFINITY;
    for i in 0..10_000 {
        let n = 1 + i % 8;
        let (ra, rb) = (rng.gen_range(1..=n), rng.gen_range(1..=n));
        let a = random::random_psd(&mut rng, n, ra);
        let b = random::random_psd(&mut rng, n, rb);
        worst = worst.min(psd_product_min_eig(&a, &b, TOL).map_err(|e| e.to_string())?);
    }
    ensure(worst >= -1e-9, || format!("min eigenvalue {worst:e}"))?;
    Ok(format!("min eigenvalue {worst:.3e}"))
}

fn criterion_4() -> Outcome {
    let mut rng = random::rng(4);
    let mut worst_split: f64 = 0.0;
    let mut worst_bound = f64::INFINITY;
    for i in 0..1_000 {
        let (m, n) = (1 + i % 4, 1 + (i / 4) % 4);
        let b = random::random_hermitian(&mut rng, m);
        let c = random::random_hermitian(&mut rng, n);
        let factor = tensor_split(&b, &c, TOL).map_err(|e| e.to_string())?;
        let direct = split_pos_neg(&b.kron(&c).map_err(|e| e.to_string())?, TOL)
            .map_err(|e| e.to_string())?;
        let d = factor
            .plus
            .distance(&direct.plus)
            .unwrap()
            .max(factor.minus.distance(&direct.minus).unwrap());
        worst_split = worst_split.max(d);

        let near = nearest_psd_tensor(&b, &c, TOL).map_err(|e| e.to_string())?;
        let rank = rng.gen_range(1..=m * n);
        let psd = random::random_psd(&mut rng, m * n, rank);
        let dist = b.kron(&c).unwrap().distance(&psd).unwrap();
        worst_bound = worst_bound.min(dist - near.distance);
    }
    ensure(worst_split <= 1e-9, || {
        format!("factor vs direct split differ by {worst_split:e}")
    })?;
    ensure(worst_bound >= -1e-9, || {
        format!("random PSD C beat the distance by {:e}", -worst_bound)
    })?;
    Ok(format!(
        "max split mismatch {worst_split:.1e}, min distance excess {worst_bound:.3e}"
    ))
}

fn criterion_5() -> Outcome {
    let mut rng = random::rng(5);
    let mut worst_pair: f64 = 0.0;
    for i in 0..500 {
        let n = 1 + i % 6;
        let q = random::random_unitary(&mut rng, n);
        let signs = sign_vector(&mut rng, n);
        let da: Vec<f64> = signs.iter().map(|s| s * rng.gen_range(0.0..2.0)).collect();
        let db: Vec<f64> = signs.iter().map(|s| s * rng.gen_range(0.0..2.0)).collect();
        let a = HermitianMatrix::new(MatrixC::congruence_diag(&q, &da), 1e-9)
            .map_err(|e| e.to_string())?;
        let b = HermitianMatrix::new(MatrixC::congruence_diag(&q, &db), 1e-9)
            .map_err(|e| e.to_string())?;
        let r = commuting_additivity_check(&a, &b, 1e-9, i as u64).map_err(|e| e.to_string())?;
        worst_pair = worst_pair.max(r.residuals.plus).max(r.residuals.minus);
    }
    let mut worst_family: f64 = 0.0;
    for i in 0..500 {
        let (na, nb, len) = (1 + i % 3, 1 + (i / 3) % 3, 1 + (i / 9) % 3);
        let qa = random::random_unitary(&mut rng, na);
        let qb = random::random_unitary(&mut rng, nb);
        let (sa, sb) = (sign_vector(&mut rng, na), sign_vector(&mut rng, nb));
        let mut a_list = Vec::new();
        let mut b_list = Vec::new();
        for _ in 0..len {
            let da: Vec<f64> = sa.iter().map(|s| s * rng.gen_range(0.1..2.0)).collect();
            let db: Vec<f64> = sb.iter().map(|s| s * rng.gen_range(0.1..2.0)).collect();
            a_list.push(HermitianMatrix::new(MatrixC::congruence_diag(&qa, &da), 1e-9).unwrap());
            b_list.push(HermitianMatrix::new(MatrixC::congruence_diag(&qb, &db), 1e-9).unwrap());
        }
        let r =
            commuting_family_approx(&a_list, &b_list, 1e-9, i as u64).map_err(|e| e.to_string())?;
        let mut sum = HermitianMatrix::zeros(na * nb);
        for (a, b) in a_list.iter().zip(&b_list) {
            sum = sum.add(&a.kron(b).unwrap()).unwrap();
        }
        let direct = split_pos_neg(&sum, 1e-9).map_err(|e| e.to_string())?;
        let d = r.approximant.distance(&direct.plus).unwrap();
        worst_family = worst_family
            .max(d)
            .max((r.distance - direct.minus.frobenius_norm()).abs());
    }
    let x =
        HermitianMatrix::new(MatrixC::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]), TOL).unwrap();
    let z = HermitianMatrix::from_diag(&[1.0, -1.0]);
    let nc = additivity_residuals(&x, &z, TOL).map_err(|e| e.to_string())?;
    ensure(worst_pair <= 1e-9, || {
        format!("pair residual {worst_pair:e}")
    })?;
    ensure(worst_family <= 1e-9, || {
        format!("family vs direct split {worst_family:e}")
    })?;
    ensure(nc.plus > 0.1, || {
        format!("non-commuting residual only {}", nc.plus)
    })?;
    Ok(format!(
        "sign-compatible pairs {worst_pair:.1e}, families {worst_family:.1e}, non-commuting residual {:.3}",
        nc.plus
    ))
}

/// Commuting but sign-incompatible pair: reported, not gated.
fn sign_conflict_note() -> String {
    let a = HermitianMatrix::from_diag(&[1.0, -1.0]);
    let b = HermitianMatrix::from_diag(&[-2.0, 3.0]);
    match commuting_additivity_check(&a, &b, TOL, 0) {
        Ok(r) => format!(
            "commuting pair diag(1,-1), diag(-2,3): additivity residual {:.6} with {} sign conflict(s)",
            r.residuals.plus, r.sign_conflicts
        ),
        Err(e) => format!("commuting pair check failed: {e}"),
    }
}

fn criterion_6() -> Outcome {
    let mut rng = random::rng(6);
    let mut worst_rec: f64 = 0.0;
    let mut worst_lhs: f64 = 0.0;
    for i in 0..100 {
        let dims = if i % 2 == 0 {
            BipartiteDims::new(2, 2)
        } else {
            BipartiteDims::new(2, 3)
        }
        .unwrap();
        let rho = random::random_density(&mut rng, dims.total());
        let d = operator_schmidt(&rho, dims, TOL).map_err(|e| e.to_string())?;
        worst_rec = worst_rec.max(d.reconstruct().unwrap().distance(&rho).unwrap());
        let r = tensor_sum_bound_report(&d, TOL).map_err(|e| e.to_string())?;
        worst_lhs = worst_lhs.max(r.lhs);
        ensure(r.satisfied, || {
            format!("bound not satisfied on density {i}: {r:?}")
        })?;
        ensure(r.hypothesis_held, || {
            format!("density {i} not recognized as a state")
        })?;
    }
    ensure(worst_rec <= 1e-9, || {
        format!("reconstruction error {worst_rec:e}")
    })?;
    ensure(worst_lhs <= 1e-9, || format!("lhs {worst_lhs:e}"))?;

    let term = SchmidtTerm {
        weight: 1.0,
        b: HermitianMatrix::identity(2),
        c: HermitianMatrix::from_diag(&[1.0, -1.0]),
    };
    let decomp = SchmidtDecomposition::from_terms(BipartiteDims::new(2, 2).unwrap(), vec![term])
        .map_err(|e| e.to_string())?;
    let r = tensor_sum_bound_report(&decomp, TOL).map_err(|e| e.to_string())?;
    ensure((r.lhs - 2f64.sqrt()).abs() <= 1e-9, || {
        format!("counterexample lhs {}", r.lhs)
    })?;
    ensure(r.rhs == 0.0, || format!("counterexample rhs {}", r.rhs))?;
    Ok(format!(
        "reconstruction {worst_rec:.1e}, lhs {worst_lhs:.1e}; counterexample lhs {:.12}, rhs {}, satisfied {}",
        r.lhs, r.rhs, r.satisfied
    ))
}

fn werner_min_eig(p: f64) -> Result<f64, String> {
    let dims = BipartiteDims::new(2, 2).unwrap();
    let rho = make_density(werner(p), dims, TOL, false).map_err(|e| e.to_string())?;
    Ok(ppt_check(&rho, TOL).map_err(|e| e.to_string())?.min_eig)
}

fn criterion_7() -> Outcome {
    let dims = BipartiteDims::new(2, 2).unwrap();
    let bell = make_density(bell_phi_plus(), dims, TOL, false).map_err(|e| e.to_string())?;
    let ppt = ppt_check(&bell, TOL).map_err(|e| e.to_string())?;
    ensure((ppt.min_eig + 0.5).abs() <= 1e-9, || {
        format!("Bell min eigenvalue {}", ppt.min_eig)
    })?;
    let weights = operator_schmidt(bell.matrix(), dims, TOL)
        .map_err(|e| e.to_string())?
        .weights();
    ensure(
        weights.len() == 4 && weights.iter().all(|w| (w - 0.5).abs() <= 1e-8),
        || format!("Bell Schmidt weights {weights:?}"),
    )?;

    let (mut lo, mut hi) = (0.0, 1.0);
    while hi - lo > 1e-12 {
        let mid = 0.5 * (lo + hi);
        if werner_min_eig(mid)? >= 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let threshold = 0.5 * (lo + hi);
    ensure((threshold - 1.0 / 3.0).abs() <= 1e-9, || {
        format!("Werner threshold {threshold}")
    })?;
    let mut worst: f64 = 0.0;
    for k in 0..=20 {
        let p = k as f64 / 20.0;
        worst = worst.max((werner_min_eig(p)? - (1.0 - 3.0 * p) / 4.0).abs());
    }
    ensure(worst <= 1e-9, || {
        format!("Werner min eigenvalue off closed form by {worst:e}")
    })?;
    Ok(format!(
        "Bell min eig {:.12}, Werner threshold {threshold:.12}",
        ppt.min_eig
    ))
}

fn random_sorted<R: Rng>(rng: &mut R, n: usize) -> Vec<f64> {
    let mut v: Vec<f64> = (0..n).map(|_| rng.gen_range(-2.0..2.0)).collect();
    v.sort_by(|x, y| y.total_cmp(x));
    v
}

fn criterion_8() -> Outcome {
    let mut rng = random::rng(8);
    let mut checked = 0;
    for n in 2..=4 {
        for seed in 0..1_000u64 {
            let alpha = random_sorted(&mut rng, n);
            let beta = random_sorted(&mut rng, n);
            let t = sum_spectrum_oracle(&alpha, &beta, seed, 1e-12).map_err(|e| e.to_string())?;
            let h = horn_check(&t, 1e-9).map_err(|e| e.to_string())?;
            let w = weyl_check(&t, 1e-9).map_err(|e| e.to_string())?;
            let p = practical_check(&t, 1e-9).map_err(|e| e.to_string())?;
            ensure(
                h.violations.is_empty() && w.violations.is_empty() && p.violations.is_empty(),
                || format!("violation for n={n} seed={seed}"),
            )?;
            checked += h.checked;
        }
    }

    let expected = vec![
        HornTriple::new(vec![1], vec![1], vec![1]),
        HornTriple::new(vec![1], vec![2], vec![2]),
        HornTriple::new(vec![2], vec![1], vec![2]),
    ];
    let got = horn_sets(2, 1).map_err(|e| e.to_string())?;
    ensure(got.triples == expected, || {
        format!("horn_sets(2, 1) = {:?}", got.triples)
    })?;

    for _ in 0..1_000 {
        let n = rng.gen_range(2..=6);
        let t = SpectrumTriple::new(
            random_sorted(&mut rng, n),
            random_sorted(&mut rng, n),
            random_sorted(&mut rng, n),
        )
        .map_err(|e| e.to_string())?;
        let w = weyl_check(&t, 1e-9).map_err(|e| e.to_string())?;
        let h = horn_check(&t, 1e-9).map_err(|e| e.to_string())?;
        let r1: Vec<_> = h
            .violations_of(InequalityForm::Upper)
            .filter(|v| v.r == 1)
            .cloned()
            .collect();
        ensure(w.violations == r1, || {
            format!("weyl and horn r=1 disagree on {t:?}")
        })?;
    }
    Ok(format!(
        "3000 oracle triples, {checked} inequalities, no violations"
    ))
}

fn closed_form_2x2(a: &MatrixC) -> [f64; 2] {
    let (p, q) = (a[(0, 0)].re, a[(1, 1)].re);
    let mean = 0.5 * (p + q);
    let rad = (0.25 * (p - q).powi(2) + a[(0, 1)].norm_sqr()).sqrt();
    [mean + rad, mean - rad]
}

fn det3(m: &MatrixC) -> Complex64 {
    m[(0, 0)] * (m[(1, 1)] * m[(2, 2)] - m[(1, 2)] * m[(2, 1)])
        - m[(0, 1)] * (m[(1, 0)] * m[(2, 2)] - m[(1, 2)] * m[(2, 0)])
        + m[(0, 2)] * (m[(1, 0)] * m[(2, 1)] - m[(1, 1)] * m[(2, 0)])
}

/// Trigonometric roots of the characteristic cubic.
fn closed_form_3x3(a: &MatrixC) -> [f64; 3] {
    let p1 = a[(0, 1)].norm_sqr() + a[(0, 2)].norm_sqr() + a[(1, 2)].norm_sqr();
    let q = (a[(0, 0)].re + a[(1, 1)].re + a[(2, 2)].re) / 3.0;
    let p2 = (0..3).map(|i| (a[(i, i)].re - q).powi(2)).sum::<f64>() + 2.0 * p1;
    let p = (p2 / 6.0).sqrt();
    if p == 0.0 {
        return [q, q, q];
    }
    let b = (a - &MatrixC::identity(3).scale(q)).scale(1.0 / p);
    let r = (det3(&b).re / 2.0).clamp(-1.0, 1.0);
    let phi = r.acos() / 3.0;
    let e1 = q + 2.0 * p * phi.cos();
    let e3 = q + 2.0 * p * (phi + 2.0 * std::f64::consts::PI / 3.0).cos();
    [e1, 3.0 * q - e1 - e3, e3]
}

fn criterion_9() -> Outcome {
    let mut rng = random::rng(9);
    let (mut worst_res, mut worst_unit): (f64, f64) = (0.0, 0.0);
    for i in 0..1_000 {
        let n = 1 + i % 12;
        let a = random::random_hermitian(&mut rng, n).scaled(1.0 + (i % 5) as f64);
        let s = hermitian_eig(&a, TOL).map_err(|e| e.to_string())?;
        let q = s.vectors();
        let res = (a.matrix() * q)
            .distance(&(q * &MatrixC::from_diag(s.eigenvalues())))
            .unwrap();
        let unit = (&q.conj_transpose() * q)
            .distance(&MatrixC::identity(n))
            .unwrap();
        worst_res = worst_res.max(res / a.scale());
        worst_unit = worst_unit.max(unit / a.scale());
    }
    ensure(worst_res <= 1e-10, || {
        format!("relative residual {worst_res:e}")
    })?;
    ensure(worst_unit <= 1e-10, || {
        format!("relative unitarity defect {worst_unit:e}")
    })?;

    let mut worst_closed: f64 = 0.0;
    for _ in 0..500 {
        let a2 = random::random_hermitian(&mut rng, 2);
        let got = hermitian_eig(&a2, TOL).map_err(|e| e.to_string())?;
        for (g, e) in got.eigenvalues().iter().zip(closed_form_2x2(&a2)) {
            worst_closed = worst_closed.max((g - e).abs());
        }
        let a3 = random::random_hermitian(&mut rng, 3);
        let got = hermitian_eig(&a3, TOL).map_err(|e| e.to_string())?;
        for (g, e) in got.eigenvalues().iter().zip(closed_form_3x3(&a3)) {
            worst_closed = worst_closed.max((g - e).abs());
        }
    }
    ensure(worst_closed <= 1e-9, || {
        format!("closed-form mismatch {worst_closed:e}")
    })?;
    Ok(format!(
        "residual {worst_res:.1e}, unitarity {worst_unit:.1e}, closed form {worst_closed:.1e}"
    ))
}

fn fixture(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("tests/fixtures");
    p.push(name);
    p.display().to_string()
}

fn run_cli(args: &[&str]) -> Result<(i32, Vec<u8>), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_psdsplit"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    Ok((out.status.code().unwrap_or(-1), out.stdout))
}

fn criterion_10() -> Outcome {
    let indefinite = fixture("indefinite.json");
    let bell = fixture("bell.json");
    let cases: Vec<(Vec<&str>, i32)> = vec![
        (vec!["nearest-psd", "--in", &indefinite], 0),
        (vec!["ppt", "--in", &bell, "--dims", "2", "2"], 1),
        (
            vec!["horn", "--alpha", "1,0", "--beta", "1,0", "--gamma", "2,0"],
            0,
        ),
        (
            vec![
                "--seed",
                "7",
                "oracle-sum",
                "--alpha",
                "3,1,-2",
                "--beta",
                "1,0,-1",
            ],
            0,
        ),
        (
            vec!["--seed", "11", "random", "--kind", "density", "--n", "4"],
            0,
        ),
    ];
    for (args, code) in &cases {
        let (c1, o1) = run_cli(args)?;
        let (c2, o2) = run_cli(args)?;
        ensure(c1 == *code, || {
            format!("{args:?} exited {c1}, expected {code}")
        })?;
        ensure(c1 == c2 && o1 == o2, || {
            format!("{args:?} is not reproducible")
        })?;
    }
    let (_, ppt) = run_cli(&cases[1].0)?;
    let report: serde_json::Value = serde_json::from_slice(&ppt).map_err(|e| e.to_string())?;
    let min_eig = report["min_eig"].as_f64().unwrap_or(f64::NAN);
    ensure((min_eig + 0.5).abs() <= 1e-9, || {
        format!("ppt fixture min_eig {min_eig}")
    })?;
    Ok(format!(
        "{} commands reproducible, exit codes 0/1/0 on the fixtures",
        cases.len()
    ))
}

fn main() {
    let criteria: [(usize, fn() -> Outcome); 10] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
    ];
    let mut failed = 0;
    for (n, f) in criteria {
        match f() {
            Ok(detail) => println!("criterion {n}: PASS ({detail})"),
            Err(why) => {
                failed += 1;
                println!("criterion {n}: FAIL ({why})");
            }
        }
        if n == 5 {
            println!("criterion 5 note: {}", sign_conflict_note());
        }
    }
    println!("acceptance: {} of 10 criteria passed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
