//! Irreducible characters of S_n and symmetric-function basis changes.
//!
//! - [`CharCache::chi`]: χ^λ_μ by the Murnaghan–Nakayama rule, memoized
//! - [`dimension`]: f^λ by the hook length formula
//! - [`kostka_hook`]: Kostka numbers for hook shapes, C(ℓ(λ)-1, a)
//! - [`MonomialExpansion`]: a symmetric function stored in the monomial basis
//! - [`powersum_to_monomial`], [`schur_hook_to_monomial`]: basis transitions

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{binomial, factorial, multinomial};
use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, hook_product, Partition};

/// Memoized Murnaghan–Nakayama evaluator.
///
/// The cache is owned by the caller rather than global, so concurrent
/// computations stay independent and deterministic. Keys are
/// (shape, remaining cycle parts).
pub struct CharCache {
    memo: HashMap<(Vec<usize>, Vec<usize>), BigInt>,
}

impl Default for CharCache {
    fn default() -> Self {
        Self::new()
    }
}

impl CharCache {
    pub fn new() -> Self {
        CharCache {
            memo: HashMap::new(),
        }
    }

    /// χ^λ_μ for λ, μ partitions of the same weight.
    pub fn chi(&mut self, lambda: &Partition, mu: &Partition) -> Result<BigInt> {
        if lambda.weight() != mu.weight() {
            return Err(Error::WeightMismatch {
                left: lambda.weight(),
                right: mu.weight(),
            });
        }
        Ok(self.chi_rec(lambda.parts(), mu.parts()))
    }

    fn chi_rec(&mut self, lambda: &[usize], mu: &[usize]) -> BigInt {
        if mu.is_empty() {
            return BigInt::one();
        }
        let key = (lambda.to_vec(), mu.to_vec());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        // Strip a border strip of length mu[0] from lambda, expressed on the
        // beta-set (first-column hook lengths): replace some b by b - t when
        // b - t is not already present; the strip height is the number of
        // beta values passed over.
        let t = mu[0];
        let len = lambda.len();
        let beta: Vec<usize> = lambda
            .iter()
            .enumerate()
            .map(|(i, &p)| p + (len - 1 - i))
            .collect();
        let mut total = BigInt::zero();
        for i in 0..len {
            if beta[i] < t {
                continue;
            }
            let target = beta[i] - t;
            if beta.contains(&target) {
                continue;
            }
            let height = beta.iter().filter(|&&b| target < b && b < beta[i]).count();
            let mut next_beta = beta.clone();
            next_beta[i] = target;
            next_beta.sort_unstable_by(|a, b| b.cmp(a));
            let next_lambda: Vec<usize> = next_beta
                .iter()
                .enumerate()
                .map(|(j, &b)| b - (len - 1 - j))
                .filter(|&p| p > 0)
                .collect();
            let sub = self.chi_rec(&next_lambda, &mu[1..]);
            if height % 2 == 0 {
                total += sub;
            } else {
                total -= sub;
            }
        }
        self.memo.insert(key, total.clone());
        total
    }
}

/// One-shot character evaluation; prefer a shared [`CharCache`] in loops.
pub fn character(lambda: &Partition, mu: &Partition) -> Result<BigInt> {
    CharCache::new().chi(lambda, mu)
}

/// f^λ = χ^λ_{1^n}, computed by the hook length formula n!/H_λ.
pub fn dimension(lambda: &Partition) -> BigInt {
    factorial(lambda.weight()) / hook_product(lambda)
}

/// Kostka number K_{(n-a,1^a) λ} = C(ℓ(λ)-1, a) for the hook of column depth a.
pub fn kostka_hook(a: usize, lambda: &Partition) -> Result<BigInt> {
    let n = lambda.weight();
    if n == 0 || a > n - 1 {
        return Err(Error::InvalidArgument(format!(
            "hook column depth {a} out of range for weight {n}"
        )));
    }
    Ok(binomial(lambda.num_parts() - 1, a))
}

/// A symmetric function of homogeneous degree stored as a map
/// partition -> coefficient in the monomial basis. Zero coefficients are
/// normalized away, so equality of maps is equality of functions.
#[derive(Clone, PartialEq, Eq)]
pub struct MonomialExpansion {
    degree: usize,
    coeffs: BTreeMap<Partition, BigRational>,
}

impl MonomialExpansion {
    pub fn new(degree: usize) -> Self {
        MonomialExpansion {
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Coefficient of m_λ; zero when absent.
    pub fn coeff(&self, lambda: &Partition) -> BigRational {
        self.coeffs.get(lambda).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, lambda: Partition, value: BigRational) {
        assert_eq!(
            lambda.weight(),
            self.degree,
            "term weight must match expansion degree"
        );
        if value.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(lambda);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(value);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += value;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &MonomialExpansion) {
        assert_eq!(self.degree, other.degree);
        for (lam, v) in &other.coeffs {
            self.add_term(lam.clone(), v.clone());
        }
    }

    pub fn scaled(&self, factor: &BigRational) -> MonomialExpansion {
        let mut out = MonomialExpansion::new(self.degree);
        if factor.is_zero() {
            return out;
        }
        for (lam, v) in &self.coeffs {
            out.coeffs.insert(lam.clone(), v * factor);
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Build from integer coefficients given as (parts, value) pairs.
    pub fn from_integer_terms(degree: usize, terms: &[(&[usize], i64)]) -> Self {
        let mut out = MonomialExpansion::new(degree);
        for (parts, v) in terms {
            out.add_term(
                Partition::new(parts.to_vec()),
                BigRational::from_integer(BigInt::from(*v)),
            );
        }
        out
    }
}

impl std::fmt::Debug for MonomialExpansion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .map(|(lam, v)| format!("{v}*m[{lam}]"))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// Expansion of the power sum p_λ in the monomial basis.
///
/// The coefficient of m_μ counts the maps from the parts of λ (kept distinct)
/// onto the parts of μ such that each part of μ receives exactly its value.
/// This is computed combinatorially, multiplicity block by multiplicity
/// block, so every coefficient is an exact nonnegative integer.
pub fn powersum_to_monomial(lambda: &Partition) -> MonomialExpansion {
    let n = lambda.weight();
    let mut out = MonomialExpansion::new(n);
    let blocks: Vec<(usize, usize)> = lambda.multiplicities().into_iter().collect();
    for mu in enumerate_partitions(n) {
        let count = count_refinements(&blocks, mu.parts());
        if !count.is_zero() {
            out.add_term(mu, BigRational::from_integer(count));
        }
    }
    out
}

/// Number of ways to distribute the parts of λ (grouped as (value, mult)
/// blocks, parts within a block distinguishable) over the slots of μ so that
/// slot j receives total μ_j.
fn count_refinements(blocks: &[(usize, usize)], mu: &[usize]) -> BigInt {
    fn go(blocks: &[(usize, usize)], rem: &mut Vec<usize>) -> BigInt {
        let Some(&(value, mult)) = blocks.first() else {
            return if rem.iter().all(|&r| r == 0) {
                BigInt::one()
            } else {
                BigInt::zero()
            };
        };
        // distribute `mult` distinguishable copies of `value` over the slots
        fn spread(
            value: usize,
            left: usize,
            slot: usize,
            rem: &mut Vec<usize>,
            counts: &mut Vec<usize>,
            blocks: &[(usize, usize)],
        ) -> BigInt {
            if slot == rem.len() {
                if left > 0 {
                    return BigInt::zero();
                }
                let ways = multinomial(counts.iter().sum(), counts);
                return ways * go(&blocks[1..], rem);
            }
            let max_here = (rem[slot] / value).min(left);
            let mut total = BigInt::zero();
            for k in 0..=max_here {
                rem[slot] -= k * value;
                counts.push(k);
                total += spread(value, left - k, slot + 1, rem, counts, blocks);
                counts.pop();
                rem[slot] += k * value;
            }
            total
        }
        let mut counts = Vec::new();
        spread(value, mult, 0, rem, &mut counts, blocks)
    }
    let mut rem = mu.to_vec();
    go(blocks, &mut rem)
}

/// Expansion of the hook Schur function s_{(n-a,1^a)} in the monomial basis,
/// using the hook Kostka numbers.
pub fn schur_hook_to_monomial(a: usize, n: usize) -> Result<MonomialExpansion> {
    if n == 0 || a > n - 1 {
        return Err(Error::InvalidArgument(format!(
            "hook column depth {a} out of range for weight {n}"
        )));
    }
    let mut out = MonomialExpansion::new(n);
    for mu in enumerate_partitions(n) {
        let k = kostka_hook(a, &mu)?;
        if !k.is_zero() {
            out.add_term(mu, BigRational::from_integer(k));
        }
    }
    Ok(out)
}
