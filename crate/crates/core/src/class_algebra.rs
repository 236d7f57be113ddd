//! Connection coefficients of the class algebra of S_n and the closed-form
//! monomial coefficients of their generating series.
//!
//! The structure constants are evaluated through the character sum
//! c^ν_{λμ} = n!/(z_λ z_μ) · Σ_α χ^α_λ χ^α_μ χ^α_ν / f^α, which for ν = (n)
//! collapses onto hook shapes. The resulting series over all (λ, μ) has a
//! closed product/factorial form which `verify_class_series` re-derives cell by cell
//! from the characters and the power-sum expansion.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::{expect_integer, factorial, ratio};
use crate::characters::{dimension, powersum_to_monomial, CharCache};
use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, z_of, Partition};

/// A grid of exact series coefficients indexed by pairs of partitions of n.
/// `normalization` documents the scalar the underlying series was divided by
/// before the coefficients were read off.
#[derive(Clone, Debug)]
pub struct SeriesCoefficientTable {
    pub n: usize,
    pub normalization: String,
    pub entries: BTreeMap<(Partition, Partition), BigRational>,
}

impl SeriesCoefficientTable {
    pub fn get(&self, lambda: &Partition, mu: &Partition) -> BigRational {
        self.entries
            .get(&(lambda.clone(), mu.clone()))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }
}

fn check_same_weight(parts: &[&Partition]) -> Result<usize> {
    let n = parts[0].weight();
    for p in &parts[1..] {
        if p.weight() != n {
            return Err(Error::WeightMismatch {
                left: n,
                right: p.weight(),
            });
        }
    }
    Ok(n)
}

/// c^ν_{λμ}: the number of ways to factor a fixed permutation of C_ν as a
/// product of one element of C_λ and one of C_μ, via the character sum.
/// The sum of rationals must come out a nonnegative integer; anything else
/// panics, since it would mean the character table is wrong.
pub fn connection_c(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<BigInt> {
    connection_c_with(&mut CharCache::new(), lambda, mu, nu)
}

/// As [`connection_c`] with a shared character cache for table sweeps.
pub fn connection_c_with(
    cache: &mut CharCache,
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
) -> Result<BigInt> {
    let n = check_same_weight(&[lambda, mu, nu])?;
    let mut sum = BigRational::zero();
    for alpha in enumerate_partitions(n) {
        let product = cache.chi(&alpha, lambda)?
            * cache.chi(&alpha, mu)?
            * cache.chi(&alpha, nu)?;
        if !product.is_zero() {
            sum += BigRational::new(product, dimension(&alpha));
        }
    }
    let scale = BigRational::new(factorial(n), z_of(lambda) * z_of(mu));
    let value = scale * sum;
    let int = expect_integer(&value, "class connection coefficient");
    assert!(
        !int.is_negative(),
        "negative class connection coefficient at ({lambda},{mu},{nu})"
    );
    Ok(int)
}

/// c^{(n)}_{λμ} via the hook-only reduction of the character sum:
/// n/(z_λ z_μ) · Σ_a (-1)^a (n-1-a)! a! χ^{(n-a,1^a)}_λ χ^{(n-a,1^a)}_μ.
pub fn connection_c_top(lambda: &Partition, mu: &Partition) -> Result<BigInt> {
    connection_c_top_with(&mut CharCache::new(), lambda, mu)
}

/// As [`connection_c_top`] with a shared character cache.
pub fn connection_c_top_with(
    cache: &mut CharCache,
    lambda: &Partition,
    mu: &Partition,
) -> Result<BigInt> {
    let n = check_same_weight(&[lambda, mu])?;
    if n == 0 {
        return Err(Error::InvalidArgument("weight must be positive".into()));
    }
    let mut sum = BigInt::zero();
    for a in 0..n {
        let mut hook_parts = vec![n - a];
        hook_parts.extend(std::iter::repeat_n(1, a));
        let hook = Partition::new(hook_parts);
        let term = factorial(n - 1 - a) * factorial(a) * cache.chi(&hook, lambda)?
            * cache.chi(&hook, mu)?;
        if a % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let value = BigRational::new(BigInt::from(n) * sum, z_of(lambda) * z_of(mu));
    let int = expect_integer(&value, "top class connection coefficient");
    assert!(
        !int.is_negative(),
        "negative top class connection coefficient at ({lambda},{mu})"
    );
    Ok(int)
}

/// Closed form for the coefficient of m_λ(x) m_μ(y) in the normalized series
/// (1/n) Σ c^n_{λμ} p_λ(x) p_μ(y): the factorial ratio
/// (n-ℓλ)! (n-ℓμ)! / (n+1-ℓλ-ℓμ)!, read as 0 when the argument of the
/// denominator factorial is negative.
pub fn class_series_coefficient(lambda: &Partition, mu: &Partition) -> BigInt {
    let n = lambda.weight();
    assert_eq!(n, mu.weight(), "partitions must share a weight");
    let ll = lambda.num_parts();
    let lm = mu.num_parts();
    if ll + lm > n + 1 {
        return BigInt::zero();
    }
    let num = factorial(n - ll) * factorial(n - lm);
    let den = factorial(n + 1 - ll - lm);
    let (q, r) = num_integer::Integer::div_rem(&num, &den);
    debug_assert!(r.is_zero());
    q
}

/// Closed form for the coefficient of m_λ(x) in the normalized single-series
/// Σ c^n_{λ,n} p_λ, namely n!/(n+1-ℓλ); an integer, returned as a rational.
pub fn class_marginal_coefficient(lambda: &Partition) -> BigRational {
    let n = lambda.weight();
    assert!(n >= 1, "weight must be positive");
    BigRational::new(
        factorial(n),
        BigInt::from(n + 1 - lambda.num_parts()),
    )
}

/// The closed-form table of [`class_series_coefficient`] over all pairs.
pub fn class_series_closed_table(n: usize) -> SeriesCoefficientTable {
    let classes = enumerate_partitions(n);
    let mut entries = BTreeMap::new();
    for lam in &classes {
        for mu in &classes {
            entries.insert(
                (lam.clone(), mu.clone()),
                ratio(class_series_coefficient(lam, mu)),
            );
        }
    }
    SeriesCoefficientTable {
        n,
        normalization: "1/n".to_string(),
        entries,
    }
}

/// The same table computed the long way: every c^n_{λμ} from the characters,
/// then the change of basis p ⊗ p -> m ⊗ m.
pub fn class_series_table(n: usize) -> Result<SeriesCoefficientTable> {
    let classes = enumerate_partitions(n);
    let mut cache = CharCache::new();
    let expansions: Vec<_> = classes.iter().map(powersum_to_monomial).collect();
    let mut top = BTreeMap::new();
    for lam in &classes {
        for mu in &classes {
            top.insert(
                (lam.clone(), mu.clone()),
                connection_c_top_with(&mut cache, lam, mu)?,
            );
        }
    }
    let mut entries = BTreeMap::new();
    let scale = BigRational::new(BigInt::one(), BigInt::from(n));
    for (ai, alpha) in classes.iter().enumerate() {
        for (bi, beta) in classes.iter().enumerate() {
            let mut cell = BigRational::zero();
            for (li, lam) in classes.iter().enumerate() {
                let la = expansions[li].coeff(alpha);
                if la.is_zero() {
                    continue;
                }
                for (mi, mu) in classes.iter().enumerate() {
                    let mb = expansions[mi].coeff(beta);
                    if mb.is_zero() {
                        continue;
                    }
                    cell += ratio(top[&(lam.clone(), mu.clone())].clone()) * &la * &mb;
                }
            }
            entries.insert((alpha.clone(), beta.clone()), cell * &scale);
            let _ = (ai, bi);
        }
    }
    Ok(SeriesCoefficientTable {
        n,
        normalization: "1/n".to_string(),
        entries,
    })
}

/// One cell mismatch found by a series verification.
#[derive(Clone, Debug)]
pub struct SeriesMismatch {
    pub lambda: Partition,
    pub mu: Option<Partition>,
    pub expanded: BigRational,
    pub closed_form: BigRational,
}

/// Outcome of comparing an expanded generating series against its closed form.
#[derive(Clone, Debug)]
pub struct SeriesCheckReport {
    pub n: usize,
    pub cells_checked: usize,
    pub first_mismatch: Option<SeriesMismatch>,
}

impl SeriesCheckReport {
    pub fn passed(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Expand (1/n) Σ c^n_{λμ} p_λ ⊗ p_μ into the m ⊗ m basis and compare every
/// cell against [`class_series_coefficient`].
pub fn verify_class_series(n: usize) -> Result<SeriesCheckReport> {
    let expanded = class_series_table(n)?;
    let classes = enumerate_partitions(n);
    let mut checked = 0;
    for lam in &classes {
        for mu in &classes {
            let closed = ratio(class_series_coefficient(lam, mu));
            let got = expanded.get(lam, mu);
            checked += 1;
            if got != closed {
                return Ok(SeriesCheckReport {
                    n,
                    cells_checked: checked,
                    first_mismatch: Some(SeriesMismatch {
                        lambda: lam.clone(),
                        mu: Some(mu.clone()),
                        expanded: got,
                        closed_form: closed,
                    }),
                });
            }
        }
    }
    Ok(SeriesCheckReport {
        n,
        cells_checked: checked,
        first_mismatch: None,
    })
}

/// Expand Σ_λ c^n_{λ,n} p_λ into the monomial basis and compare every
/// coefficient against [`class_marginal_coefficient`].
pub fn verify_class_marginal(n: usize) -> Result<SeriesCheckReport> {
    let classes = enumerate_partitions(n);
    let full = Partition::new(vec![n]);
    let mut cache = CharCache::new();
    let mut series = crate::characters::MonomialExpansion::new(n);
    for lam in &classes {
        let c = connection_c_top_with(&mut cache, lam, &full)?;
        if c.is_zero() {
            continue;
        }
        series.add_assign(&powersum_to_monomial(lam).scaled(&ratio(c)));
    }
    let mut checked = 0;
    for alpha in &classes {
        let closed = class_marginal_coefficient(alpha);
        let got = series.coeff(alpha);
        checked += 1;
        if got != closed {
            return Ok(SeriesCheckReport {
                n,
                cells_checked: checked,
                first_mismatch: Some(SeriesMismatch {
                    lambda: alpha.clone(),
                    mu: None,
                    expanded: got,
                    closed_form: closed,
                }),
            });
        }
    }
    Ok(SeriesCheckReport {
        n,
        cells_checked: checked,
        first_mismatch: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;
    use crate::partitions::class_size;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn connection_c_small_values() {
        let ones = p(&[1, 1, 1]);
        assert_eq!(connection_c(&ones, &ones, &ones).unwrap(), BigInt::one());
        let three = p(&[3]);
        assert_eq!(connection_c(&three, &three, &three).unwrap(), BigInt::one());
        assert_eq!(
            connection_c(&p(&[2, 1]), &p(&[2, 1]), &three).unwrap(),
            BigInt::from(3)
        );
        assert_eq!(
            connection_c(&p(&[2, 1]), &three, &three).unwrap(),
            BigInt::zero()
        );
        assert!(connection_c(&p(&[2]), &p(&[3]), &p(&[3])).is_err());
    }

    #[test]
    fn connection_c_matches_oracle_to_n4() {
        for n in 1..=4 {
            let table = oracle::class_convolution_table(n).unwrap();
            let mut cache = CharCache::new();
            for ((lam, mu, nu), expected) in &table {
                let got = connection_c_with(&mut cache, lam, mu, nu).unwrap();
                assert_eq!(&got, expected, "({lam},{mu},{nu})");
            }
        }
    }

    #[test]
    fn top_coefficient_agrees_with_general_formula() {
        for n in 1..=7 {
            let full = p(&[n]);
            let classes = enumerate_partitions(n);
            let mut cache = CharCache::new();
            for lam in &classes {
                for mu in &classes {
                    assert_eq!(
                        connection_c_top_with(&mut cache, lam, mu).unwrap(),
                        connection_c_with(&mut cache, lam, mu, &full).unwrap(),
                        "({lam},{mu})"
                    );
                }
            }
        }
    }

    #[test]
    fn top_row_sums_give_class_sizes() {
        for n in 1..=7 {
            let classes = enumerate_partitions(n);
            let mut cache = CharCache::new();
            for lam in &classes {
                let mut total = BigInt::zero();
                for mu in &classes {
                    total += connection_c_top_with(&mut cache, lam, mu).unwrap();
                }
                assert_eq!(total, class_size(lam), "row sum at λ={lam}");
            }
        }
    }

    #[test]
    fn class_algebra_count_symmetry() {
        // c^ν_{λμ} |C_ν| = c^μ_{λν} |C_μ|: both sides count the pairs
        // (α, β) ∈ C_λ × C_μ with αβ ∈ C_ν.
        for n in 1..=6 {
            let classes = enumerate_partitions(n);
            let mut cache = CharCache::new();
            for lam in &classes {
                for mu in &classes {
                    for nu in &classes {
                        let lhs = connection_c_with(&mut cache, lam, mu, nu).unwrap()
                            * class_size(nu);
                        let rhs = connection_c_with(&mut cache, lam, nu, mu).unwrap()
                            * class_size(mu);
                        assert_eq!(lhs, rhs, "({lam},{mu},{nu})");
                    }
                }
            }
        }
    }

    #[test]
    fn class_series_closed_form_values() {
        for n in 2..=9 {
            let full = p(&[n]);
            assert_eq!(class_series_coefficient(&full, &full), factorial(n - 1));
            for lam in enumerate_partitions(n) {
                assert_eq!(
                    class_series_coefficient(&lam, &full),
                    factorial(n - 1),
                    "μ = (n) column at λ={lam}"
                );
                if lam.num_parts() >= 2 {
                    assert_eq!(
                        class_series_coefficient(&p(&vec![1; n]), &lam),
                        BigInt::zero()
                    );
                }
            }
        }
    }

    #[test]
    fn class_series_closed_table_matches_oracle_series() {
        // expand the raw structure constants from the brute-force oracle
        for n in 1..=5 {
            let raw = oracle::class_convolution_table(n).unwrap();
            let classes = enumerate_partitions(n);
            let full = p(&[n]);
            let expansions: Vec<_> = classes.iter().map(powersum_to_monomial).collect();
            for alpha in &classes {
                for beta in &classes {
                    let mut cell = BigRational::zero();
                    for (li, lam) in classes.iter().enumerate() {
                        for (mi, mu) in classes.iter().enumerate() {
                            let c = &raw[&(lam.clone(), mu.clone(), full.clone())];
                            if c.is_zero() {
                                continue;
                            }
                            cell += ratio(c.clone())
                                * expansions[li].coeff(alpha)
                                * expansions[mi].coeff(beta);
                        }
                    }
                    cell /= ratio(BigInt::from(n));
                    assert_eq!(
                        cell,
                        ratio(class_series_coefficient(alpha, beta)),
                        "cell ({alpha},{beta}) at n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn class_marginal_closed_form_values() {
        assert_eq!(class_marginal_coefficient(&p(&[4])), ratio(factorial(3)));
        assert_eq!(class_marginal_coefficient(&p(&[1; 4])), ratio(factorial(4)));
        assert_eq!(class_marginal_coefficient(&p(&[2, 1, 1])), ratio(BigInt::from(12)));
    }

    #[test]
    fn verify_class_series_reports_pass() {
        for n in 1..=6 {
            let report = verify_class_series(n).unwrap();
            assert!(report.passed(), "two-sided series mismatch: {:?}", report.first_mismatch);
            let report = verify_class_marginal(n).unwrap();
            assert!(report.passed(), "one-sided series mismatch: {:?}", report.first_mismatch);
        }
    }

    #[test]
    fn series_table_is_symmetric() {
        let table = class_series_closed_table(5);
        for ((lam, mu), v) in &table.entries {
            assert_eq!(v, &table.get(mu, lam));
        }
    }
}
