use crate::error::{Error, Result};
use crate::linalg::{check_tol, hermitian_eig, HermitianMatrix, MatrixC};
use crate::random;
use crate::spectra::horn::{horn_sets, HornTriple, IndexSet};

/// Spectra `(α, β, γ)` of `A`, `B`, `C = A + B`, each sorted descending.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumTriple {
    alpha: Vec<f64>,
    beta: Vec<f64>,
    gamma: Vec<f64>,
}

pub(crate) fn check_sorted(v: &[f64], which: &'static str) -> Result<()> {
    if let Some(i) = v.iter().position(|x| !x.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "{which}[{i}] is not finite"
        )));
    }
    if let Some(i) = v.windows(2).position(|w| w[0] < w[1]) {
        return Err(Error::Unsorted {
            which,
            position: i + 1,
        });
    }
    Ok(())
}

impl SpectrumTriple {
    pub fn new(alpha: Vec<f64>, beta: Vec<f64>, gamma: Vec<f64>) -> Result<Self> {
        check_sorted(&alpha, "alpha")?;
        check_sorted(&beta, "beta")?;
        check_sorted(&gamma, "gamma")?;
        if alpha.is_empty() || alpha.len() != beta.len() || alpha.len() != gamma.len() {
            return Err(Error::DimensionMismatch {
                op: "SpectrumTriple",
                detail: format!("lengths {}, {}, {}", alpha.len(), beta.len(), gamma.len()),
            });
        }
        Ok(Self { alpha, beta, gamma })
    }

    pub fn n(&self) -> usize {
        self.alpha.len()
    }

    pub fn alpha(&self) -> &[f64] {
        &self.alpha
    }

    pub fn beta(&self) -> &[f64] {
        &self.beta
    }

    pub fn gamma(&self) -> &[f64] {
        &self.gamma
    }

    /// `|Σα + Σβ − Σγ|`.
    pub fn trace_residual(&self) -> f64 {
        let s = |v: &[f64]| v.iter().sum::<f64>();
        (s(&self.alpha) + s(&self.beta) - s(&self.gamma)).abs()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InequalityForm {
    /// `Σ_K γ ≤ Σ_I α + Σ_J β`
    Upper,
    /// `Σ_{K^c} γ ≥ Σ_{I^c} α + Σ_{J^c} β`
    Complement,
    /// `γ_k ≥ max_{i+j=n+k} (αᵢ + βⱼ)`
    PracticalLower,
    /// `γ_k ≤ min_{i+j=k+1} (αᵢ + βⱼ)`
    PracticalUpper,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub form: InequalityForm,
    /// Cardinality of the index sets of the originating Horn triple.
    pub r: usize,
    pub triple: HornTriple,
    pub lhs: f64,
    pub rhs: f64,
    /// Negative when violated.
    pub slack: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct InequalityReport {
    pub checked: usize,
    pub violations: Vec<Violation>,
    pub trace_residual: f64,
    pub trace_ok: bool,
}

impl InequalityReport {
    pub fn passed(&self) -> bool {
        self.trace_ok && self.violations.is_empty()
    }

    pub fn violations_of(&self, form: InequalityForm) -> impl Iterator<Item = &Violation> {
        self.violations.iter().filter(move |v| v.form == form)
    }
}

fn pick(v: &[f64], idx: &[usize]) -> f64 {
    idx.iter().map(|&i| v[i - 1]).sum()
}

pub fn complement(n: usize, idx: &[usize]) -> IndexSet {
    (1..=n).filter(|i| !idx.contains(i)).collect()
}

fn upper(t: &SpectrumTriple, tr: &HornTriple, r: usize) -> Violation {
    let lhs = pick(&t.gamma, &tr.k);
    let rhs = pick(&t.alpha, &tr.i) + pick(&t.beta, &tr.j);
    Violation {
        form: InequalityForm::Upper,
        r,
        triple: tr.clone(),
        lhs,
        rhs,
        slack: rhs - lhs,
    }
}

fn lower_complement(t: &SpectrumTriple, tr: &HornTriple, r: usize) -> Violation {
    let n = t.n();
    let lhs = pick(&t.gamma, &complement(n, &tr.k));
    let rhs = pick(&t.alpha, &complement(n, &tr.i)) + pick(&t.beta, &complement(n, &tr.j));
    Violation {
        form: InequalityForm::Complement,
        r,
        triple: tr.clone(),
        lhs,
        rhs,
        slack: lhs - rhs,
    }
}

/// Checks the trace identity and every Horn inequality for `r < n`, in both
/// the `≤` form and the complementary `≥` form. An inequality is violated
/// when its slack is below `−tol`.
pub fn horn_check(t: &SpectrumTriple, tol: f64) -> Result<InequalityReport> {
    check_tol(tol)?;
    let n = t.n();
    let trace_residual = t.trace_residual();
    let mut report = InequalityReport {
        checked: 0,
        violations: Vec::new(),
        trace_residual,
        trace_ok: trace_residual <= tol,
    };
    for r in 1..n {
        let set = horn_sets(n, r)?;
        for tr in &set.triples {
            for v in [upper(t, tr, r), lower_complement(t, tr, r)] {
                report.checked += 1;
                if v.slack < -tol {
                    report.violations.push(v);
                }
            }
        }
    }
    Ok(report)
}

/// `γ_{i+j−1} ≤ αᵢ + βⱼ` for all `i + j − 1 ≤ n`, in the same order as the
/// `r = 1` Horn triples.
pub fn weyl_check(t: &SpectrumTriple, tol: f64) -> Result<InequalityReport> {
    check_tol(tol)?;
    let n = t.n();
    let trace_residual = t.trace_residual();
    let mut report = InequalityReport {
        checked: 0,
        violations: Vec::new(),
        trace_residual,
        trace_ok: trace_residual <= tol,
    };
    for i in 1..=n {
        for j in 1..=n + 1 - i {
            let tr = HornTriple::new(vec![i], vec![j], vec![i + j - 1]);
            let v = upper(t, &tr, 1);
            report.checked += 1;
            if v.slack < -tol {
                report.violations.push(v);
            }
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn contains(&self, x: f64, tol: f64) -> bool {
        x >= self.lo - tol && x <= self.hi + tol
    }
}

/// Interval for each `γ_k`: `[max_{i+j=n+k}(αᵢ+βⱼ), min_{i+j=k+1}(αᵢ+βⱼ)]`.
pub fn practical_bounds(alpha: &[f64], beta: &[f64]) -> Result<Vec<Interval>> {
    check_sorted(alpha, "alpha")?;
    check_sorted(beta, "beta")?;
    if alpha.len() != beta.len() {
        return Err(Error::DimensionMismatch {
            op: "practical_bounds",
            detail: format!("alpha has {} entries, beta has {}", alpha.len(), beta.len()),
        });
    }
    let n = alpha.len();
    let pairs = |s: usize| {
        (1..=n).filter_map(move |i| {
            s.checked_sub(i)
                .filter(|&j| (1..=n).contains(&j))
                .map(|j| (i, j))
        })
    };
    Ok((1..=n)
        .map(|k| {
            let lo = pairs(n + k)
                .map(|(i, j)| alpha[i - 1] + beta[j - 1])
                .fold(f64::NEG_INFINITY, f64::max);
            let hi = pairs(k + 1)
                .map(|(i, j)| alpha[i - 1] + beta[j - 1])
                .fold(f64::INFINITY, f64::min);
            Interval { lo, hi }
        })
        .collect())
}

/// Checks each `γ_k` against [`practical_bounds`] with absolute tolerance.
pub fn practical_check(t: &SpectrumTriple, tol: f64) -> Result<InequalityReport> {
    check_tol(tol)?;
    let bounds = practical_bounds(&t.alpha, &t.beta)?;
    let trace_residual = t.trace_residual();
    let mut report = InequalityReport {
        checked: 0,
        violations: Vec::new(),
        trace_residual,
        trace_ok: trace_residual <= tol,
    };
    for (k, (iv, &g)) in bounds.iter().zip(&t.gamma).enumerate() {
        let tr = HornTriple::new(vec![], vec![], vec![k + 1]);
        report.checked += 2;
        if g < iv.lo - tol {
            report.violations.push(Violation {
                form: InequalityForm::PracticalLower,
                r: 1,
                triple: tr.clone(),
                lhs: g,
                rhs: iv.lo,
                slack: g - iv.lo,
            });
        }
        if g > iv.hi + tol {
            report.violations.push(Violation {
                form: InequalityForm::PracticalUpper,
                r: 1,
                triple: tr,
                lhs: g,
                rhs: iv.hi,
                slack: iv.hi - g,
            });
        }
    }
    Ok(report)
}

/// Sorted spectrum of `U·diag(α)·U† + V·diag(β)·V†`.
pub fn sum_spectrum(
    alpha: &[f64],
    beta: &[f64],
    u: &MatrixC,
    v: &MatrixC,
    tol: f64,
) -> Result<SpectrumTriple> {
    check_sorted(alpha, "alpha")?;
    check_sorted(beta, "beta")?;
    if alpha.len() != beta.len() || u.rows() != alpha.len() || v.rows() != beta.len() {
        return Err(Error::DimensionMismatch {
            op: "sum_spectrum",
            detail: format!(
                "alpha {}, beta {}, unitaries {} and {}",
                alpha.len(),
                beta.len(),
                u.rows(),
                v.rows()
            ),
        });
    }
    let a = MatrixC::congruence_diag(u, alpha);
    let b = MatrixC::congruence_diag(v, beta);
    let c = HermitianMatrix::symmetrize(&a + &b)?;
    let gamma = hermitian_eig(&c, tol)?.eigenvalues().to_vec();
    SpectrumTriple::new(alpha.to_vec(), beta.to_vec(), gamma)
}

/// Witness triple from an actual sum: `A` and `B` get the prescribed spectra
/// in independent random bases drawn from `seed`.
pub fn sum_spectrum_oracle(
    alpha: &[f64],
    beta: &[f64],
    seed: u64,
    tol: f64,
) -> Result<SpectrumTriple> {
    if alpha.len() != beta.len() {
        return Err(Error::DimensionMismatch {
            op: "sum_spectrum_oracle",
            detail: format!("alpha has {} entries, beta has {}", alpha.len(), beta.len()),
        });
    }
    let mut rng = random::rng(seed);
    let u = random::random_unitary(&mut rng, alpha.len());
    let v = random::random_unitary(&mut rng, beta.len());
    sum_spectrum(alpha, beta, &u, &v, tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: f64 = 1e-9;

    fn triple(a: &[f64], b: &[f64], g: &[f64]) -> SpectrumTriple {
        SpectrumTriple::new(a.to_vec(), b.to_vec(), g.to_vec()).unwrap()
    }

    #[test]
    fn horn_examples() {
        let r = horn_check(&triple(&[1.0, 0.0], &[1.0, 0.0], &[2.0, 0.0]), TOL).unwrap();
        assert!(r.passed());
        assert_eq!(r.trace_residual, 0.0);
        assert_eq!(r.checked, 6);

        let r = horn_check(&triple(&[1.0, 0.0], &[1.0, 0.0], &[3.0, -1.0]), TOL).unwrap();
        let v = r.violations_of(InequalityForm::Upper).next().unwrap();
        assert_eq!(v.triple, HornTriple::new(vec![1], vec![1], vec![1]));
        assert_eq!((v.lhs, v.rhs), (3.0, 2.0));
        assert!(r.trace_ok);
    }

    #[test]
    fn weyl_examples() {
        let r = weyl_check(&triple(&[2.0, 0.0], &[1.0, -1.0], &[3.0, -1.0]), TOL).unwrap();
        assert!(r.violations.is_empty());
        assert_eq!(r.checked, 3);

        let r = weyl_check(&triple(&[2.0, 0.0], &[1.0, -1.0], &[3.5, -1.5]), TOL).unwrap();
        assert_eq!(r.violations.len(), 1);
        assert_eq!(
            r.violations[0].triple,
            HornTriple::new(vec![1], vec![1], vec![1])
        );
        assert!((r.violations[0].slack + 0.5).abs() < 1e-15);
    }

    #[test]
    fn practical_examples() {
        let b = practical_bounds(&[3.0, 1.0], &[2.0, 0.0]).unwrap();
        assert_eq!(
            b,
            vec![Interval { lo: 3.0, hi: 5.0 }, Interval { lo: 1.0, hi: 3.0 }]
        );

        let b = practical_bounds(&[4.0, -2.0], &[0.0, 0.0]).unwrap();
        assert_eq!(
            b,
            vec![
                Interval { lo: 4.0, hi: 4.0 },
                Interval { lo: -2.0, hi: -2.0 }
            ]
        );

        let b = practical_bounds(&[1.0, -1.0], &[1.0, -1.0]).unwrap();
        assert_eq!(
            b,
            vec![
                Interval { lo: 0.0, hi: 2.0 },
                Interval { lo: -2.0, hi: 0.0 }
            ]
        );

        assert!(practical_bounds(&[1.0], &[1.0, 0.0]).is_err());
        assert!(matches!(
            practical_bounds(&[0.0, 1.0], &[1.0, 0.0]),
            Err(Error::Unsorted {
                which: "alpha",
                position: 1
            })
        ));
    }

    #[test]
    fn oracle_examples() {
        let id = MatrixC::identity(2);
        let t = sum_spectrum(&[1.0, 0.0], &[0.0, -1.0], &id, &id, 1e-10).unwrap();
        assert_eq!(t.gamma(), &[1.0, -1.0]);
        // β sorted descending as (1, 0) placed on the opposite diagonal slot
        let swap = MatrixC::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]);
        let t = sum_spectrum(&[1.0, 0.0], &[1.0, 0.0], &id, &swap, 1e-10).unwrap();
        assert_eq!(t.gamma(), &[1.0, 1.0]);

        let t = sum_spectrum_oracle(&[3.0, 1.0, -2.0], &[0.0, 0.0, 0.0], 17, 1e-10).unwrap();
        for (g, a) in t.gamma().iter().zip(t.alpha()) {
            assert!((g - a).abs() < 1e-12);
        }
        assert!(horn_check(&t, TOL).unwrap().passed());
    }

    #[test]
    fn rejects_unsorted() {
        assert!(matches!(
            SpectrumTriple::new(vec![1.0, 0.0], vec![1.0, 0.0], vec![0.0, 2.0]),
            Err(Error::Unsorted {
                which: "gamma",
                position: 1
            })
        ));
    }
}
