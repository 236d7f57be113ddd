//! Verification batteries exposed through the command line: each suite
//! replays a family of identities up to a requested weight and reports one
//! pass/fail line per identity, with the first counterexample when there is
//! one.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::arith::{
    double_factorial, factorial, frac, is_nonneg_integer, multinomial, odd_double_factorial,
    ratio,
};
use crate::characters::CharCache;
use crate::class_algebra::{
    connection_c_top_with, connection_c_with, verify_class_marginal, verify_class_series,
};
use crate::double_coset::{
    connection_b_with, diagonal_hook_coefficient, main_series_coefficient, main_series_table,
    pi_series, PhiTable,
};
use crate::error::Result;
use crate::oracle;
use crate::partitions::{
    class_size, coset_size, enumerate_partitions, hyperoctahedral_order, near_hooks, Partition,
};
use crate::zonal::zonal_z;

/// Outcome of one identity check.
#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub label: String,
    pub passed: bool,
    pub detail: Option<String>,
}

impl CheckOutcome {
    fn pass(label: impl Into<String>) -> Self {
        CheckOutcome {
            label: label.into(),
            passed: true,
            detail: None,
        }
    }

    fn fail(label: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckOutcome {
            label: label.into(),
            passed: false,
            detail: Some(detail.into()),
        }
    }
}

/// All outcomes of one suite run.
#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: String,
    pub n: usize,
    pub checks: Vec<CheckOutcome>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Character-formula class coefficients against brute-force factorization
/// counts, plus the row-sum identity, for every weight up to n.
pub fn class_oracle_suite(n: usize) -> Result<SuiteReport> {
    let mut checks = Vec::new();
    for k in 1..=n {
        let classes = enumerate_partitions(k);
        let mut cache = CharCache::new();
        let table = oracle::class_convolution_table(k)?;
        let mut outcome = CheckOutcome::pass(format!("class coefficients = brute force, n={k}"));
        'outer: for lam in &classes {
            for mu in &classes {
                for nu in &classes {
                    let fast = connection_c_with(&mut cache, lam, mu, nu)?;
                    let slow = &table[&(lam.clone(), mu.clone(), nu.clone())];
                    if &fast != slow {
                        outcome = CheckOutcome::fail(
                            outcome.label.clone(),
                            format!("({lam},{mu},{nu}): formula {fast}, oracle {slow}"),
                        );
                        break 'outer;
                    }
                }
            }
        }
        checks.push(outcome);

        let mut rows = CheckOutcome::pass(format!("Σ_μ c^n_λμ = |C_λ|, n={k}"));
        for lam in &classes {
            let mut total = BigInt::zero();
            for mu in &classes {
                total += connection_c_top_with(&mut cache, lam, mu)?;
            }
            if total != class_size(lam) {
                rows = CheckOutcome::fail(
                    rows.label.clone(),
                    format!("λ={lam}: sum {total}, class size {}", class_size(lam)),
                );
                break;
            }
        }
        checks.push(rows);
    }
    Ok(SuiteReport {
        suite: "class-oracle".into(),
        n,
        checks,
    })
}

/// Spherical-function double-coset coefficients against brute-force counts,
/// the main-series table against the oracle-expanded series, and row sums.
pub fn coset_oracle_suite(n: usize) -> Result<SuiteReport> {
    let mut checks = Vec::new();
    for k in 1..=n {
        let classes = enumerate_partitions(k);
        let phi = PhiTable::build(k)?;
        let raw = oracle::double_coset_convolution_table(k)?;
        let mut outcome =
            CheckOutcome::pass(format!("double coset coefficients = brute force, n={k}"));
        'outer: for lam in &classes {
            for mu in &classes {
                for nu in &classes {
                    let fast = connection_b_with(&phi, lam, mu, nu)?;
                    let slow = &raw[&(lam.clone(), mu.clone(), nu.clone())];
                    if &fast != slow {
                        outcome = CheckOutcome::fail(
                            outcome.label.clone(),
                            format!("({lam},{mu},{nu}): formula {fast}, oracle {slow}"),
                        );
                        break 'outer;
                    }
                }
            }
        }
        checks.push(outcome);

        // main series against the oracle counts pushed through p -> m
        let full = Partition::new(vec![k]);
        let expansions: Vec<_> = classes
            .iter()
            .map(crate::characters::powersum_to_monomial)
            .collect();
        let table = main_series_table(k);
        let scale = frac(BigInt::from(1), hyperoctahedral_order(k));
        let mut series = CheckOutcome::pass(format!("main series = oracle series, n={k}"));
        'cells: for alpha in &classes {
            for beta in &classes {
                let mut cell = BigRational::zero();
                for (li, lam) in classes.iter().enumerate() {
                    for (mi, mu) in classes.iter().enumerate() {
                        let b = &raw[&(lam.clone(), mu.clone(), full.clone())];
                        if b.is_zero() {
                            continue;
                        }
                        cell += ratio(b.clone())
                            * expansions[li].coeff(alpha)
                            * expansions[mi].coeff(beta);
                    }
                }
                cell *= &scale;
                let closed = table.get(alpha, beta);
                if cell != closed {
                    series = CheckOutcome::fail(
                        series.label.clone(),
                        format!("cell ({alpha},{beta}): oracle {cell}, closed {closed}"),
                    );
                    break 'cells;
                }
            }
        }
        checks.push(series);

        let mut rows = CheckOutcome::pass(format!("Σ_μ b^ν_λμ = |K_λ|, n={k}"));
        'rows: for nu in &classes {
            for lam in &classes {
                let mut total = BigInt::zero();
                for mu in &classes {
                    total += connection_b_with(&phi, lam, mu, nu)?;
                }
                if total != coset_size(lam) {
                    rows = CheckOutcome::fail(
                        rows.label.clone(),
                        format!("ν={nu}, λ={lam}: sum {total}, coset size {}", coset_size(lam)),
                    );
                    break 'rows;
                }
            }
        }
        checks.push(rows);
    }
    Ok(SuiteReport {
        suite: "coset-oracle".into(),
        n,
        checks,
    })
}

/// Closed-form near-hook zonal polynomials against the brute-force
/// spherical-function construction.
pub fn zonal_oracle_suite(n: usize) -> Result<SuiteReport> {
    let mut checks = Vec::new();
    for k in 1..=n {
        let hist = oracle::coset_histogram(k)?;
        let mut outcome = CheckOutcome::pass(format!("near-hook Z = brute-force Z, n={k}"));
        for shape in near_hooks(k) {
            let fast = zonal_z(shape);
            let slow = oracle::zonal_polynomial_with(&hist, &shape.to_partition())?;
            if !(fast == slow) {
                outcome = CheckOutcome::fail(
                    outcome.label.clone(),
                    format!("shape {shape}: expansions differ"),
                );
                break;
            }
        }
        checks.push(outcome);
    }
    Ok(SuiteReport {
        suite: "zonal-oracle".into(),
        n,
        checks,
    })
}

/// Closed forms that need no brute force: the two class-algebra series, the
/// main-series marginals and diagonals, the Π_n table rows, and the
/// integrality/symmetry of the full main-series table.
pub fn closed_forms_suite(n: usize) -> Result<SuiteReport> {
    let mut checks = Vec::new();
    for k in 1..=n {
        let report = verify_class_series(k)?;
        checks.push(if report.passed() {
            CheckOutcome::pass(format!("two-sided class series closed form, n={k}"))
        } else {
            CheckOutcome::fail(
                format!("two-sided class series closed form, n={k}"),
                format!("{:?}", report.first_mismatch),
            )
        });
        let report = verify_class_marginal(k)?;
        checks.push(if report.passed() {
            CheckOutcome::pass(format!("one-sided class series closed form, n={k}"))
        } else {
            CheckOutcome::fail(
                format!("one-sided class series closed form, n={k}"),
                format!("{:?}", report.first_mismatch),
            )
        });

        let full = Partition::new(vec![k]);
        let mut marginal = CheckOutcome::pass(format!("main series μ=(n) row, n={k}"));
        for lam in enumerate_partitions(k) {
            let mut expect = multinomial(k, lam.parts());
            for &part in lam.parts() {
                expect *= odd_double_factorial(part);
            }
            let got = main_series_coefficient(&lam, &full);
            if got != ratio(expect.clone()) {
                marginal = CheckOutcome::fail(
                    marginal.label.clone(),
                    format!("λ={lam}: got {got}, closed {expect}"),
                );
                break;
            }
        }
        checks.push(marginal);

        let mut diag = CheckOutcome::pass(format!("main series hook diagonals p≤2, n={k}"));
        for p in 0..=2usize {
            if k < p + 1 {
                continue;
            }
            let mut parts = vec![k - p];
            parts.extend(std::iter::repeat_n(1, p));
            let lam = Partition::from_unsorted(parts);
            let got = main_series_coefficient(&lam, &lam);
            let expect = diagonal_hook_coefficient(k, p);
            if got != ratio(expect.clone()) {
                diag = CheckOutcome::fail(
                    diag.label.clone(),
                    format!("p={p}: got {got}, closed {expect}"),
                );
                break;
            }
        }
        checks.push(diag);

        checks.push(pi_table_check(k));

        let table = main_series_table(k);
        let mut integral = CheckOutcome::pass(format!(
            "main series integral, nonnegative, symmetric, n={k}"
        ));
        for ((lam, mu), v) in &table.entries {
            if !is_nonneg_integer(v) || v != &table.get(mu, lam) {
                integral = CheckOutcome::fail(
                    integral.label.clone(),
                    format!("cell ({lam},{mu}) = {v}"),
                );
                break;
            }
        }
        checks.push(integral);
    }
    Ok(SuiteReport {
        suite: "closed-forms".into(),
        n,
        checks,
    })
}

/// The printed coefficient table for Π_n, all rows applicable at this n.
pub fn pi_table_check(n: usize) -> CheckOutcome {
    let label = format!("Π series coefficient table, n={n}");
    let series = pi_series(n);
    let ni = n as i64;
    let mut expectations: Vec<(Vec<usize>, BigRational)> = vec![
        (vec![n], ratio(double_factorial(2 * ni - 2))),
        (vec![1; n], ratio(factorial(n))),
    ];
    if n >= 2 {
        expectations.push((
            {
                let mut v = vec![n - 1];
                v.push(1);
                v
            },
            ratio(BigInt::from(ni) * double_factorial(2 * ni - 4)),
        ));
    }
    if n >= 3 && n - 2 >= 1 {
        expectations.push((
            vec![n - 2, 1, 1],
            ratio(BigInt::from(ni * (ni - 1)) * double_factorial(2 * ni - 6)),
        ));
    }
    if n >= 4 && n - 3 >= 1 {
        expectations.push((
            vec![n - 3, 1, 1, 1],
            ratio(BigInt::from(ni * (ni - 1) * (ni - 2)) * double_factorial(2 * ni - 8)),
        ));
    }
    if n >= 4 {
        expectations.push((
            vec![n - 2, 2],
            frac(
                BigInt::from(ni * (3 * ni - 5)) * double_factorial(2 * ni - 6),
                BigInt::from(2),
            ),
        ));
    }
    if n >= 6 {
        expectations.push((
            vec![n - 3, 3],
            frac(
                BigInt::from(ni * (5 * ni * ni - 21 * ni + 20)) * double_factorial(2 * ni - 8),
                BigInt::from(2),
            ),
        ));
    }
    if n >= 8 {
        expectations.push((
            vec![n - 4, 4],
            frac(
                BigInt::from(ni * (35 * ni * ni * ni - 270 * ni * ni + 649 * ni - 486))
                    * double_factorial(2 * ni - 10),
                BigInt::from(8),
            ),
        ));
    }
    for (parts, expect) in expectations {
        let lam = Partition::from_unsorted(parts);
        if lam.weight() != n {
            continue;
        }
        let got = series.coeff(&lam);
        if got != expect {
            return CheckOutcome::fail(label, format!("[m_{lam}]: got {got}, closed {expect}"));
        }
    }
    CheckOutcome::pass(label)
}
