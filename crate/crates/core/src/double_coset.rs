//! Connection coefficients of the double coset algebra of the
//! hyperoctahedral group B_n in S_2n, and the monomial expansions of their
//! generating series.
//!
//! The structure constants come from the spherical-function sum
//! b^ν_{λμ} = |K_ν|⁻¹ Σ_β φ^β_λ φ^β_μ φ^β_ν / H_{2β}. Setting ν = (n) kills
//! every β that is not a near hook, which turns the full series into a sum
//! over near hooks of products of zonal expansions; that closed route is
//! implemented by [`main_series_coefficient`] and [`pi_series`] and has no
//! cap on n, while the φ-based route is backed by the brute-force histogram
//! and therefore stops at n = 5.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::{double_factorial, expect_integer, factorial, frac, ratio};
use crate::characters::CharCache;
use crate::class_algebra::SeriesCoefficientTable;
use crate::error::{Error, Result};
use crate::oracle::{coset_histogram, phi_from_histogram, CosetHistogram};
use crate::partitions::{
    c_products, coset_size, enumerate_partitions, hyperoctahedral_order, near_hooks, NearHook,
    Partition,
};
use crate::zonal::{content_weight, main_hook_weight, type_weights};

/// φ^β_μ = Σ_{w ∈ K_μ} χ^{2β}(w), evaluated through the coset histogram.
/// Capped at n = 5 with the histogram.
pub fn phi(beta: &Partition, mu: &Partition) -> Result<BigInt> {
    if beta.weight() != mu.weight() {
        return Err(Error::WeightMismatch {
            left: beta.weight(),
            right: mu.weight(),
        });
    }
    let hist = coset_histogram(beta.weight())?;
    phi_from_histogram(&hist, &mut CharCache::new(), beta, mu)
}

/// All φ^β_μ of a given weight, sharing one histogram sweep and one
/// character cache.
pub struct PhiTable {
    n: usize,
    values: BTreeMap<(Partition, Partition), BigInt>,
}

impl PhiTable {
    pub fn build(n: usize) -> Result<Self> {
        let hist = coset_histogram(n)?;
        Self::from_histogram(&hist)
    }

    pub fn from_histogram(hist: &CosetHistogram) -> Result<Self> {
        let n = hist.n();
        let classes = enumerate_partitions(n);
        let mut cache = CharCache::new();
        let mut values = BTreeMap::new();
        for beta in &classes {
            for mu in &classes {
                values.insert(
                    (beta.clone(), mu.clone()),
                    phi_from_histogram(hist, &mut cache, beta, mu)?,
                );
            }
        }
        Ok(PhiTable { n, values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, beta: &Partition, mu: &Partition) -> &BigInt {
        &self.values[&(beta.clone(), mu.clone())]
    }
}

/// ∏ (2·coarm(s) - coleg(s)) over the boxes of λ, omitting the corner box.
/// Vanishes as soon as λ contains (2,2,2), i.e. whenever λ is not a near
/// hook.
pub fn phi_top_box_product(lambda: &Partition) -> BigInt {
    let mut acc = BigInt::one();
    for s in lambda.boxes() {
        if s.coarm == 0 && s.coleg == 0 {
            continue;
        }
        acc *= 2 * s.coarm as i64 - s.coleg as i64;
    }
    acc
}

/// φ^λ_{(n)} = |K_{(n)}|/|B_{n-1}| · ∏(2·coarm - coleg), for any λ ⊢ n.
pub fn phi_top(lambda: &Partition) -> BigInt {
    let n = lambda.weight();
    assert!(n >= 1);
    let scale = coset_size(&Partition::new(vec![n])) / hyperoctahedral_order(n - 1);
    scale * phi_top_box_product(lambda)
}

/// φ^{(a,b,1^c)}_{(n)} in closed form:
/// |K_{(n)}|/|B_{n-1}| · (-1)^{c+1}(c+1)!(2a-2)!!(2b-3)!! for b > 0, and
/// |K_{(n)}|/|B_{n-1}| · (2a-2)!! for the one-row hook. Cross-checked
/// against the box product on every call.
pub fn phi_top_nearhook(shape: NearHook) -> BigInt {
    let n = shape.weight();
    let scale = coset_size(&Partition::new(vec![n])) / hyperoctahedral_order(n - 1);
    let (a, b, c) = (shape.a, shape.b, shape.c);
    let mut product = double_factorial(2 * a as i64 - 2);
    if b > 0 {
        product *= factorial(c + 1) * double_factorial(2 * b as i64 - 3);
        if (c + 1) % 2 == 1 {
            product = -product;
        }
    }
    let value = scale * product;
    debug_assert_eq!(
        value,
        phi_top(&shape.to_partition()),
        "closed form and box product disagree at {shape}"
    );
    value
}

/// b^ν_{λμ}: the number of ways to factor a fixed element of K_ν as a
/// product of one element of K_λ and one of K_μ. Needs every φ^β of the
/// weight, so it inherits the histogram cap.
pub fn connection_b(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<BigInt> {
    let n = nu.weight();
    let table = PhiTable::build(n)?;
    connection_b_with(&table, lambda, mu, nu)
}

/// As [`connection_b`], reusing a prebuilt φ table.
pub fn connection_b_with(
    table: &PhiTable,
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
) -> Result<BigInt> {
    let n = nu.weight();
    for part in [lambda, mu] {
        if part.weight() != n {
            return Err(Error::WeightMismatch {
                left: part.weight(),
                right: n,
            });
        }
    }
    let mut sum = BigRational::zero();
    for beta in enumerate_partitions(n) {
        let (_, _, h) = c_products(&beta);
        let product = table.get(&beta, lambda) * table.get(&beta, mu) * table.get(&beta, nu);
        if !product.is_zero() {
            sum += frac(product, h);
        }
    }
    let value = sum / ratio(coset_size(nu));
    let int = expect_integer(&value, "double coset connection coefficient");
    assert!(
        !int.is_negative(),
        "negative double coset connection coefficient at ({lambda},{mu},{nu})"
    );
    Ok(int)
}

/// Coefficient of m_λ(x) m_μ(y) in the normalized main series
/// (1/(2^n n!)) Σ b^n_{λμ} p_λ(x) p_μ(y): a sum over near hooks of the
/// signed hook weight times one filling sum for each of λ and μ.
/// Closed-form route — no cap on n.
pub fn main_series_coefficient(lambda: &Partition, mu: &Partition) -> BigRational {
    let n = lambda.weight();
    assert_eq!(n, mu.weight(), "partitions must share a weight");
    let mut total = BigRational::zero();
    for hook in near_hooks(n) {
        let w_lambda = content_weight(hook, lambda).expect("weights match");
        if w_lambda.is_zero() {
            continue;
        }
        let w_mu = content_weight(hook, mu).expect("weights match");
        if w_mu.is_zero() {
            continue;
        }
        let r = main_hook_weight(n, hook.a, hook.b).expect("enumerated hooks are valid");
        total += r * w_lambda * w_mu;
    }
    total
}

/// The full main-series table over all pairs, sharing the per-hook filling
/// sums across cells.
pub fn main_series_table(n: usize) -> SeriesCoefficientTable {
    let classes = enumerate_partitions(n);
    let mut entries: BTreeMap<(Partition, Partition), BigRational> = BTreeMap::new();
    for lam in &classes {
        for mu in &classes {
            entries.insert((lam.clone(), mu.clone()), BigRational::zero());
        }
    }
    for hook in near_hooks(n) {
        let weights = type_weights(hook);
        let r = main_hook_weight(n, hook.a, hook.b).expect("enumerated hooks are valid");
        for (lam, wl) in &weights {
            for (mu, wm) in &weights {
                *entries.get_mut(&(lam.clone(), mu.clone())).unwrap() += &r * wl * wm;
            }
        }
    }
    SeriesCoefficientTable {
        n,
        normalization: "1/(2^n n!)".to_string(),
        entries,
    }
}

/// Closed form for the diagonal coefficient at λ = μ = (n-p, 1^p):
/// n(n-2p) ((n-p-1)!/(n-2p)!)² (2n-4p-1)!! when 2p ≤ n-1, else 0.
pub fn diagonal_hook_coefficient(n: usize, p: usize) -> BigInt {
    if 2 * p + 1 > n {
        return BigInt::zero();
    }
    let fact_ratio = frac(factorial(n - p - 1), factorial(n - 2 * p));
    let value = ratio(
        BigInt::from(n as i64)
            * BigInt::from((n - 2 * p) as i64)
            * double_factorial(2 * n as i64 - 4 * p as i64 - 1),
    ) * &fact_ratio
        * &fact_ratio;
    expect_integer(&value, "hook diagonal closed form")
}

/// The positive weight attached to the near hook (x, y, 1^{n-x-y}) in the
/// single-sided series Π_n: (2n-2)!! for the one-row hook, and
/// 2n (n+1-x-y)! (2x-2)!! (2y-3)!! / ((n+x-y)(n+y-x-1)) for y ≥ 1.
pub fn pi_hook_weight(n: usize, x: usize, y: usize) -> Result<BigRational> {
    if y == 0 {
        if x != n {
            return Err(Error::InvalidArgument(format!(
                "one-row weight needs x = n, got x={x}, n={n}"
            )));
        }
        return Ok(ratio(double_factorial(2 * n as i64 - 2)));
    }
    if x < y || x + y > n {
        return Err(Error::InvalidNearHook {
            a: x,
            b: y,
            c: n.saturating_sub(x + y),
        });
    }
    let num = BigInt::from(2 * n as i64)
        * factorial(n + 1 - x - y)
        * double_factorial(2 * x as i64 - 2)
        * double_factorial(2 * y as i64 - 3);
    let den = BigInt::from((n + x - y) as i64) * BigInt::from((n + y - x - 1) as i64);
    Ok(frac(num, den))
}

/// Monomial expansion of Π_n = (1/|B_n|) Σ_λ b^n_{λ,n} p_λ, assembled from
/// the near-hook filling sums. Closed-form route — no cap on n.
pub fn pi_series(n: usize) -> crate::characters::MonomialExpansion {
    let mut out = crate::characters::MonomialExpansion::new(n);
    for hook in near_hooks(n) {
        let r = pi_hook_weight(n, hook.a, hook.b).expect("enumerated hooks are valid");
        for (lam, w) in type_weights(hook) {
            out.add_term(lam, w * &r);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::odd_double_factorial;
    use crate::characters::powersum_to_monomial;
    use crate::oracle;
    use crate::zonal::{p_near_hook, q_near_hook};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn nh(a: usize, b: usize, c: usize) -> NearHook {
        NearHook::new(a, b, c).unwrap()
    }

    #[test]
    fn phi_small_tables_match_closed_top_column() {
        for n in 1..=4usize {
            let table = PhiTable::build(n).unwrap();
            let full = p(&[n]);
            for beta in enumerate_partitions(n) {
                assert_eq!(
                    table.get(&beta, &full),
                    &phi_top(&beta),
                    "φ^{beta}_({n})"
                );
            }
        }
    }

    #[test]
    fn phi_at_identity_coset_is_positive_and_large() {
        // K_{1^n} = B_n, so φ^β_{1^n} sums χ^{2β} over the whole subgroup
        let table = PhiTable::build(2).unwrap();
        assert_eq!(table.get(&p(&[2]), &p(&[1, 1])), &BigInt::from(8));
        // Σ_w∈B_n of the trivial character
        assert_eq!(
            phi(&p(&[2]), &p(&[1, 1])).unwrap(),
            hyperoctahedral_order(2)
        );
    }

    #[test]
    fn phi_top_examples() {
        assert_eq!(phi_top_nearhook(nh(1, 0, 0)), BigInt::from(2));
        for n in 1..=6usize {
            let scale = coset_size(&p(&[n])) / hyperoctahedral_order(n - 1);
            assert_eq!(
                phi_top_nearhook(nh(n, 0, 0)),
                scale * double_factorial(2 * n as i64 - 2)
            );
        }
        for bad in [vec![2, 2, 2], vec![3, 2, 2], vec![2, 2, 2, 1]] {
            assert_eq!(phi_top(&p(&bad)), BigInt::zero());
        }
    }

    #[test]
    fn connection_b_n1_and_totals() {
        let one = p(&[1]);
        assert_eq!(connection_b(&one, &one, &one).unwrap(), BigInt::from(2));

        // Σ over (λ,μ) of b^ν_{λμ} = |S_2n| for any fixed ν
        let table = PhiTable::build(2).unwrap();
        let classes = enumerate_partitions(2);
        for nu in &classes {
            let mut total = BigInt::zero();
            for lam in &classes {
                for mu in &classes {
                    total += connection_b_with(&table, lam, mu, nu).unwrap();
                }
            }
            assert_eq!(total, factorial(4), "ν = {nu}");
        }
    }

    #[test]
    fn connection_b_matches_brute_force_to_n3() {
        for n in 1..=3 {
            let table = PhiTable::build(n).unwrap();
            let raw = oracle::double_coset_convolution_table(n).unwrap();
            for ((lam, mu, nu), expected) in &raw {
                let got = connection_b_with(&table, lam, mu, nu).unwrap();
                assert_eq!(&got, expected, "({lam},{mu},{nu})");
            }
        }
    }

    #[test]
    fn connection_b_row_sums() {
        for n in 1..=3 {
            let table = PhiTable::build(n).unwrap();
            let classes = enumerate_partitions(n);
            for nu in &classes {
                for lam in &classes {
                    let mut total = BigInt::zero();
                    for mu in &classes {
                        total += connection_b_with(&table, lam, mu, nu).unwrap();
                    }
                    assert_eq!(total, coset_size(lam), "Σ_μ b^{nu}_{lam},μ");
                }
            }
        }
    }

    #[test]
    fn main_series_diagonal_and_top_row() {
        for n in 1..=8usize {
            let full = p(&[n]);
            assert_eq!(
                main_series_coefficient(&full, &full),
                ratio(odd_double_factorial(n))
            );
            for lam in enumerate_partitions(n) {
                let mut expect = crate::arith::multinomial(n, lam.parts());
                for &part in lam.parts() {
                    expect *= odd_double_factorial(part);
                }
                assert_eq!(
                    main_series_coefficient(&lam, &full),
                    ratio(expect),
                    "[m_{lam} m_({n})]"
                );
            }
        }
    }

    #[test]
    fn main_series_near_diagonal_closed_form() {
        for n in 3..=8usize {
            let lam = p(&[n - 1, 1]);
            assert_eq!(
                main_series_coefficient(&lam, &lam),
                ratio(diagonal_hook_coefficient(n, 1)),
                "p = 1 diagonal at n = {n}"
            );
        }
        for n in 5..=9usize {
            let mut parts = vec![n - 2];
            parts.extend([1, 1]);
            let lam = p(&parts);
            assert_eq!(
                main_series_coefficient(&lam, &lam),
                ratio(diagonal_hook_coefficient(n, 2)),
                "p = 2 diagonal at n = {n}"
            );
        }
    }

    #[test]
    fn diagonal_closed_form_values() {
        // p = 0 collapses to (2n-1)!!
        for n in 1..=10 {
            assert_eq!(diagonal_hook_coefficient(n, 0), odd_double_factorial(n));
        }
        // p = 2 printed form n(n-4)(n-3)²(2n-9)!!
        for n in 5..=10 {
            let expect = BigInt::from((n * (n - 4) * (n - 3) * (n - 3)) as i64)
                * double_factorial(2 * n as i64 - 9);
            assert_eq!(diagonal_hook_coefficient(n, 2), expect);
        }
        assert_eq!(diagonal_hook_coefficient(4, 2), BigInt::zero());
        assert_eq!(diagonal_hook_coefficient(6, 3), BigInt::zero());
    }

    #[test]
    fn main_series_is_symmetric_and_integral() {
        for n in 1..=8 {
            let table = main_series_table(n);
            for ((lam, mu), v) in &table.entries {
                assert_eq!(v, &table.get(mu, lam), "symmetry at ({lam},{mu})");
                assert!(
                    crate::arith::is_nonneg_integer(v),
                    "({lam},{mu}) -> {v} not a nonnegative integer"
                );
            }
        }
    }

    #[test]
    fn main_series_table_matches_oracle_to_n3() {
        for n in 1..=3usize {
            let raw = oracle::double_coset_convolution_table(n).unwrap();
            let classes = enumerate_partitions(n);
            let full = p(&[n]);
            let expansions: Vec<_> = classes.iter().map(powersum_to_monomial).collect();
            let table = main_series_table(n);
            let scale = frac(BigInt::one(), hyperoctahedral_order(n));
            for alpha in &classes {
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
                    assert_eq!(cell, table.get(alpha, beta), "cell ({alpha},{beta})");
                }
            }
        }
    }

    #[test]
    fn generating_series_consistency() {
        // (1/|B_n|) Σ b^n p ⊗ p with b from the spherical-function route
        // equals the near-hook expansion Σ (|B_n|/|K_n|) φ_top · P ⊗ Q,
        // cell by cell in the m ⊗ m basis.
        for n in 1..=4usize {
            let classes = enumerate_partitions(n);
            let hooks = near_hooks(n);
            let full = p(&[n]);
            let phi_table = PhiTable::build(n).unwrap();
            let expansions: Vec<_> = classes.iter().map(powersum_to_monomial).collect();
            let left_scale = frac(BigInt::one(), hyperoctahedral_order(n));
            let right_scale = frac(hyperoctahedral_order(n), coset_size(&full));
            let hook_expansions: Vec<_> = hooks
                .iter()
                .map(|h| (phi_top_nearhook(*h), p_near_hook(*h), q_near_hook(*h)))
                .collect();
            for alpha in &classes {
                for beta in &classes {
                    let mut left = BigRational::zero();
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
                            let b = connection_b_with(&phi_table, lam, mu, &full).unwrap();
                            left += ratio(b) * &la * mb;
                        }
                    }
                    left *= &left_scale;
                    let mut right = BigRational::zero();
                    for (phi_val, pexp, qexp) in &hook_expansions {
                        right += &right_scale
                            * ratio(phi_val.clone())
                            * pexp.coeff(alpha)
                            * qexp.coeff(beta);
                    }
                    assert_eq!(left, right, "cell ({alpha},{beta}) at n={n}");
                }
            }
        }
    }

    #[test]
    fn pi_series_closed_rows() {
        for n in 2..=7usize {
            let series = pi_series(n);
            assert_eq!(
                series.coeff(&p(&[n])),
                ratio(double_factorial(2 * n as i64 - 2))
            );
            assert_eq!(
                series.coeff(&p(&[n - 1, 1])),
                ratio(BigInt::from(n as i64) * double_factorial(2 * n as i64 - 4))
            );
            assert_eq!(series.coeff(&p(&vec![1; n])), ratio(factorial(n)));
        }
    }

    #[test]
    fn pi_series_matches_oracle_series() {
        // Π_n from the raw double-coset counts: (1/|B_n|) Σ_λ b^n_{λ,(n)} p_λ
        for n in 1..=3usize {
            let raw = oracle::double_coset_convolution_table(n).unwrap();
            let full = p(&[n]);
            let series = pi_series(n);
            let mut expect = crate::characters::MonomialExpansion::new(n);
            for lam in enumerate_partitions(n) {
                let b = &raw[&(lam.clone(), full.clone(), full.clone())];
                if b.is_zero() {
                    continue;
                }
                let coeff = frac(b.clone(), hyperoctahedral_order(n));
                expect.add_assign(&powersum_to_monomial(&lam).scaled(&coeff));
            }
            assert!(series == expect, "Π at n={n}");
        }
    }
}
