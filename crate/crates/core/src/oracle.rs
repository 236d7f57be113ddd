//! Brute-force ground truth over small symmetric groups.
//!
//! Everything here works from first definitions — enumerate permutations,
//! classify them, count factorizations — precisely so that it shares no code
//! path with the character formulas and closed forms it is used to check.
//!
//! - [`Permutation`], [`cycle_type`], [`coset_type`]
//! - [`class_convolution`]: counts α·β = γ factorizations in S_n
//! - [`double_coset_convolution`]: the same in the double coset algebra of S_2n
//! - [`coset_histogram`]: joint (coset type, cycle type) census of S_2n
//! - [`zonal_polynomial`]: Z_β assembled from the histogram and characters

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use crate::characters::{CharCache, MonomialExpansion};
use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, hyperoctahedral_order, Partition};

/// Largest n for which S_n is enumerated by the class-algebra oracle.
pub const CLASS_ORACLE_MAX: usize = 8;
/// Largest n for which S_2n is enumerated (double cosets, histogram, zonal).
pub const COSET_ORACLE_MAX: usize = 5;

/// A permutation of {0, 1, ..., m-1} stored as its image vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(m: usize) -> Self {
        Permutation {
            images: (0..m).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let m = images.len();
        let mut seen = vec![false; m];
        for &v in &images {
            if v >= m || seen[v] {
                return Err(Error::InvalidArgument(format!(
                    "not a bijection on 0..{m}: {images:?}"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    /// Build from disjoint cycles on 0-based points.
    pub fn from_cycles(m: usize, cycles: &[&[usize]]) -> Self {
        let mut images: Vec<usize> = (0..m).collect();
        for cycle in cycles {
            for i in 0..cycle.len() {
                images[cycle[i]] = cycle[(i + 1) % cycle.len()];
            }
        }
        Permutation { images }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// (self ∘ other)(x) = self(other(x)).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len());
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Permutation { images }
    }
}

/// The fixed perfect matching (0 1)(2 3)...(2n-2 2n-1) whose centralizer in
/// S_2n is the hyperoctahedral group B_n.
pub fn f_star(n: usize) -> Permutation {
    Permutation {
        images: (0..2 * n).map(|i| i ^ 1).collect(),
    }
}

/// Generators of B_n inside S_2n: the within-pair swaps (2i 2i+1) and the
/// pair swaps (2i 2j)(2i+1 2j+1). Used to sample B_n without rejection.
pub fn hyperoctahedral_generators(n: usize) -> Vec<Permutation> {
    let mut gens = Vec::new();
    for i in 0..n {
        gens.push(Permutation::from_cycles(2 * n, &[&[2 * i, 2 * i + 1]]));
    }
    for i in 0..n {
        for j in (i + 1)..n {
            gens.push(Permutation::from_cycles(
                2 * n,
                &[&[2 * i, 2 * j], &[2 * i + 1, 2 * j + 1]],
            ));
        }
    }
    gens
}

/// Cycle type of a permutation, sorted decreasingly.
pub fn cycle_type(sigma: &Permutation) -> Partition {
    cycle_lengths(sigma.images())
}

fn cycle_lengths(images: &[usize]) -> Partition {
    let mut seen = vec![false; images.len()];
    let mut lens = Vec::new();
    for start in 0..images.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = images[x];
            len += 1;
        }
        lens.push(len);
    }
    Partition::from_unsorted(lens)
}

/// Coset type of ω ∈ S_2n: the cycle type of f⋆ ∘ ω ∘ f⋆ ∘ ω⁻¹ is of the
/// paired form (λ_1, λ_1, ..., λ_p, λ_p); the result is λ.
///
/// Panics if the pairing fails, which would contradict the underlying theory
/// and therefore indicates a bug.
pub fn coset_type(omega: &Permutation) -> Result<Partition> {
    let m = omega.len();
    if !m.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "coset type needs an even number of points, got {m}"
        )));
    }
    let inv = omega.inverse();
    let mut composed = vec![0usize; m];
    for (x, slot) in composed.iter_mut().enumerate() {
        *slot = omega.apply(inv.apply(x) ^ 1) ^ 1;
    }
    Ok(halve_paired_type(&cycle_lengths(&composed)))
}

fn halve_paired_type(paired: &Partition) -> Partition {
    let parts = paired.parts();
    assert!(parts.len().is_multiple_of(2), "unpaired coset cycle type {paired}");
    let mut halved = Vec::with_capacity(parts.len() / 2);
    for chunk in parts.chunks(2) {
        assert_eq!(
            chunk[0], chunk[1],
            "unpaired coset cycle type {paired}"
        );
        halved.push(chunk[0]);
    }
    Partition::new(halved)
}

/// Visit every permutation of {0..m-1} in lexicographic order.
///
/// Iterative successor generation; the callback receives the image slice
/// in place, so enumeration does not allocate per element.
pub fn for_each_permutation<F: FnMut(&[usize])>(m: usize, mut f: F) {
    let mut images: Vec<usize> = (0..m).collect();
    loop {
        f(&images);
        if !next_permutation(&mut images) {
            break;
        }
    }
}

fn next_permutation(a: &mut [usize]) -> bool {
    let n = a.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// The canonical representative of C_ν: cycles of decreasing length on
/// consecutive points.
pub fn canonical_class_rep(nu: &Partition) -> Permutation {
    let n = nu.weight();
    let mut images: Vec<usize> = (0..n).collect();
    let mut start = 0;
    for &len in nu.parts() {
        for k in 0..len {
            images[start + k] = start + (k + 1) % len;
        }
        start += len;
    }
    Permutation { images }
}

/// First `count` elements of C_ν in lexicographic enumeration order.
pub fn class_representatives(nu: &Partition, count: usize) -> Vec<Permutation> {
    let n = nu.weight();
    let mut reps = Vec::new();
    let mut images: Vec<usize> = (0..n).collect();
    loop {
        if cycle_lengths(&images) == *nu {
            reps.push(Permutation {
                images: images.clone(),
            });
            if reps.len() == count {
                break;
            }
        }
        if !next_permutation(&mut images) {
            break;
        }
    }
    reps
}

/// First `count` elements of K_ν in lexicographic enumeration order.
pub fn coset_representatives(nu: &Partition, count: usize) -> Result<Vec<Permutation>> {
    let n = nu.weight();
    check_cap("double coset oracle", n, COSET_ORACLE_MAX)?;
    let mut reps = Vec::new();
    let mut images: Vec<usize> = (0..2 * n).collect();
    loop {
        let perm = Permutation {
            images: images.clone(),
        };
        if coset_type(&perm)? == *nu {
            reps.push(perm);
            if reps.len() == count {
                break;
            }
        }
        if !next_permutation(&mut images) {
            break;
        }
    }
    Ok(reps)
}

fn check_cap(what: &'static str, n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::CapExceeded { what, n, cap });
    }
    Ok(())
}

fn check_weights(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<usize> {
    let n = nu.weight();
    for part in [lambda, mu] {
        if part.weight() != n {
            return Err(Error::WeightMismatch {
                left: part.weight(),
                right: n,
            });
        }
    }
    Ok(n)
}

/// Number of ways to write the canonical γ ∈ C_ν as α∘β with α ∈ C_λ and
/// β ∈ C_μ, counted by direct enumeration of α over S_n.
pub fn class_convolution(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<BigInt> {
    let n = check_weights(lambda, mu, nu)?;
    check_cap("class oracle", n, CLASS_ORACLE_MAX)?;
    let gamma = canonical_class_rep(nu);
    Ok(class_convolution_at(lambda, mu, &gamma))
}

/// As [`class_convolution`], with an explicit target permutation. Exposed so
/// tests can verify independence from the representative choice.
pub fn class_convolution_at(lambda: &Partition, mu: &Partition, gamma: &Permutation) -> BigInt {
    let n = gamma.len();
    let mut count = 0u64;
    // β = α⁻¹ ∘ γ
    let mut beta = vec![0usize; n];
    for_each_permutation(n, |alpha| {
        if cycle_lengths(alpha) != *lambda {
            return;
        }
        let mut inv = vec![0usize; n];
        for (i, &v) in alpha.iter().enumerate() {
            inv[v] = i;
        }
        for x in 0..n {
            beta[x] = inv[gamma.apply(x)];
        }
        if cycle_lengths(&beta) == *mu {
            count += 1;
        }
    });
    BigInt::from(count)
}

/// The full tensor of class-algebra structure constants of S_n, computed by
/// one sweep of S_n per target class.
pub fn class_convolution_table(
    n: usize,
) -> Result<BTreeMap<(Partition, Partition, Partition), BigInt>> {
    check_cap("class oracle", n, CLASS_ORACLE_MAX)?;
    let classes = enumerate_partitions(n);
    let mut table = BTreeMap::new();
    for nu in &classes {
        let gamma = canonical_class_rep(nu);
        let mut cells: BTreeMap<(Partition, Partition), u64> = BTreeMap::new();
        let mut beta = vec![0usize; n];
        for_each_permutation(n, |alpha| {
            let ta = cycle_lengths(alpha);
            let mut inv = vec![0usize; n];
            for (i, &v) in alpha.iter().enumerate() {
                inv[v] = i;
            }
            for x in 0..n {
                beta[x] = inv[gamma.apply(x)];
            }
            let tb = cycle_lengths(&beta);
            *cells.entry((ta, tb)).or_insert(0) += 1;
        });
        for lam in &classes {
            for mu in &classes {
                let v = cells.get(&(lam.clone(), mu.clone())).copied().unwrap_or(0);
                table.insert((lam.clone(), mu.clone(), nu.clone()), BigInt::from(v));
            }
        }
    }
    Ok(table)
}

/// Number of ways to write a fixed ω ∈ K_ν as σ₁∘σ₂ with σ₁ ∈ K_λ and
/// σ₂ ∈ K_μ, counted by enumeration of σ₁ over S_2n.
pub fn double_coset_convolution(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
) -> Result<BigInt> {
    let n = check_weights(lambda, mu, nu)?;
    check_cap("double coset oracle", n, COSET_ORACLE_MAX)?;
    let omega = coset_representatives(nu, 1)?
        .pop()
        .expect("every double coset is nonempty");
    double_coset_convolution_at(lambda, mu, &omega)
}

/// As [`double_coset_convolution`] with an explicit target ω.
pub fn double_coset_convolution_at(
    lambda: &Partition,
    mu: &Partition,
    omega: &Permutation,
) -> Result<BigInt> {
    let m = omega.len();
    let mut count = 0u64;
    let mut sigma2 = vec![0usize; m];
    let mut err = None;
    for_each_permutation(m, |sigma1| {
        if err.is_some() {
            return;
        }
        let perm = Permutation {
            images: sigma1.to_vec(),
        };
        match coset_type(&perm) {
            Ok(t) if t == *lambda => {}
            Ok(_) => return,
            Err(e) => {
                err = Some(e);
                return;
            }
        }
        let inv = perm.inverse();
        for (x, slot) in sigma2.iter_mut().enumerate() {
            *slot = inv.apply(omega.apply(x));
        }
        match coset_type(&Permutation {
            images: sigma2.clone(),
        }) {
            Ok(t) if t == *mu => count += 1,
            Ok(_) => {}
            Err(e) => err = Some(e),
        }
    });
    if let Some(e) = err {
        return Err(e);
    }
    Ok(BigInt::from(count))
}

/// The full tensor of double-coset structure constants of weight n. One
/// parallel sweep of S_2n per target coset, sharded by the first image.
pub fn double_coset_convolution_table(
    n: usize,
) -> Result<BTreeMap<(Partition, Partition, Partition), BigInt>> {
    check_cap("double coset oracle", n, COSET_ORACLE_MAX)?;
    let classes = enumerate_partitions(n);
    let mut table = BTreeMap::new();
    for nu in &classes {
        let omega = coset_representatives(nu, 1)?
            .pop()
            .expect("every double coset is nonempty");
        let cells = sweep_s2n(n, |sigma1| {
            let t1 = coset_type(sigma1).expect("even size");
            let inv = sigma1.inverse();
            let mut sigma2 = vec![0usize; 2 * n];
            for (x, slot) in sigma2.iter_mut().enumerate() {
                *slot = inv.apply(omega.apply(x));
            }
            let t2 = coset_type(&Permutation { images: sigma2 }).expect("even size");
            (t1, t2)
        });
        for lam in &classes {
            for mu in &classes {
                let v = cells.get(&(lam.clone(), mu.clone())).copied().unwrap_or(0);
                table.insert((lam.clone(), mu.clone(), nu.clone()), BigInt::from(v));
            }
        }
    }
    Ok(table)
}

/// Classify every element of S_2n and merge the counts. Work is sharded by
/// the first image value so shards merge by commutative addition and the
/// result is independent of thread count.
fn sweep_s2n<F>(n: usize, classify: F) -> BTreeMap<(Partition, Partition), u64>
where
    F: Fn(&Permutation) -> (Partition, Partition) + Sync,
{
    let m = 2 * n;
    (0..m)
        .into_par_iter()
        .map(|first| {
            let mut counts: BTreeMap<(Partition, Partition), u64> = BTreeMap::new();
            let rest: Vec<usize> = (0..m).filter(|&v| v != first).collect();
            let mut tail = rest.clone();
            let mut images = vec![0usize; m];
            loop {
                images[0] = first;
                images[1..].copy_from_slice(&tail);
                let key = classify(&Permutation {
                    images: images.clone(),
                });
                *counts.entry(key).or_insert(0) += 1;
                if !next_permutation(&mut tail) {
                    break;
                }
            }
            counts
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        })
}

/// Census of S_2n by (coset type, cycle type).
#[derive(Clone, Debug)]
pub struct CosetHistogram {
    n: usize,
    counts: BTreeMap<(Partition, Partition), BigInt>,
}

impl CosetHistogram {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn count(&self, coset: &Partition, cycle: &Partition) -> BigInt {
        self.counts
            .get(&(coset.clone(), cycle.clone()))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(Partition, Partition), &BigInt)> {
        self.counts.iter()
    }

    /// Total count within one double coset; must equal |K_λ|.
    pub fn coset_total(&self, coset: &Partition) -> BigInt {
        self.counts
            .iter()
            .filter(|((k, _), _)| k == coset)
            .map(|(_, v)| v)
            .sum()
    }
}

/// Single classifying pass over S_2n.
pub fn coset_histogram(n: usize) -> Result<CosetHistogram> {
    check_cap("coset histogram", n, COSET_ORACLE_MAX)?;
    if n == 0 {
        return Err(Error::InvalidArgument("histogram needs n >= 1".into()));
    }
    let raw = sweep_s2n(n, |omega| {
        let coset = coset_type(omega).expect("even size");
        let cycle = cycle_type(omega);
        (coset, cycle)
    });
    let counts = raw
        .into_iter()
        .map(|(k, v)| (k, BigInt::from(v)))
        .collect();
    Ok(CosetHistogram { n, counts })
}

/// φ^β_μ = Σ_{w ∈ K_μ} χ^{2β}(w), evaluated from a histogram.
pub fn phi_from_histogram(
    hist: &CosetHistogram,
    cache: &mut CharCache,
    beta: &Partition,
    mu: &Partition,
) -> Result<BigInt> {
    if beta.weight() != hist.n() || mu.weight() != hist.n() {
        return Err(Error::WeightMismatch {
            left: beta.weight(),
            right: hist.n(),
        });
    }
    let two_beta = beta.double();
    let mut total = BigInt::zero();
    for ((coset, cycle), count) in hist.iter() {
        if coset == mu {
            total += count * cache.chi(&two_beta, cycle)?;
        }
    }
    Ok(total)
}

/// The zonal polynomial Z_β = |B_n|⁻¹ Σ_λ φ^β_λ p_λ, assembled from the
/// histogram, the characters of S_2n, and the power-sum expansion. This is
/// the ground-truth construction the near-hook formulas are checked against.
pub fn zonal_polynomial(beta: &Partition) -> Result<MonomialExpansion> {
    let n = beta.weight();
    check_cap("zonal oracle", n, COSET_ORACLE_MAX)?;
    let hist = coset_histogram(n)?;
    zonal_polynomial_with(&hist, beta)
}

/// As [`zonal_polynomial`], reusing a precomputed histogram.
pub fn zonal_polynomial_with(
    hist: &CosetHistogram,
    beta: &Partition,
) -> Result<MonomialExpansion> {
    let n = beta.weight();
    let mut cache = CharCache::new();
    let mut out = MonomialExpansion::new(n);
    let b_order = hyperoctahedral_order(n);
    for lam in enumerate_partitions(n) {
        let phi = phi_from_histogram(hist, &mut cache, beta, &lam)?;
        if phi.is_zero() {
            continue;
        }
        let coeff = BigRational::new(phi, b_order.clone());
        out.add_assign(&crate::characters::powersum_to_monomial(&lam).scaled(&coeff));
    }
    Ok(out)
}
