//! Integer partitions, Young-diagram box statistics, and the hook/content
//! products used to normalize zonal polynomials.
//!
//! - [`Partition`]: weakly decreasing positive parts; the universal index type
//! - [`enumerate_partitions`]: all partitions of n in reverse lexicographic order
//! - [`z_of`], [`aut_of`], [`class_size`], [`coset_size`]: partition statistics
//! - [`c_products`], [`hook_product`]: the c, c' content products and H_{2λ}
//! - [`NearHook`]: partitions of the shape (a, b, 1^c)

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::arith::{factorial, pow2};
use crate::error::{Error, Result};

/// An integer partition: a weakly decreasing sequence of positive parts.
/// The empty sequence is the unique partition of 0.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Build a partition, panicking unless the parts are weakly decreasing
    /// and positive. Use the `FromStr` impl for fallible parsing of external
    /// input.
    pub fn new(parts: Vec<usize>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing: {parts:?}"
        );
        assert!(
            parts.iter().all(|&p| p > 0),
            "partition parts must be positive: {parts:?}"
        );
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Sort an arbitrary multiset of positive entries into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts ℓ(λ).
    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The i-th part (0-indexed), or 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Multiplicity map value -> number of parts equal to it.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        let parts = (1..=cols)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// Containment of Young diagrams: every row of `other` fits inside ours.
    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.num_parts()).all(|i| self.part(i) >= other.part(i))
    }

    /// The doubled partition (2λ_1, 2λ_2, ...).
    pub fn double(&self) -> Partition {
        Partition {
            parts: self.parts.iter().map(|&p| 2 * p).collect(),
        }
    }

    /// Iterate over the boxes of the diagram with their arm/leg statistics.
    pub fn boxes(&self) -> impl Iterator<Item = BoxStats> + '_ {
        let conj = self.conjugate();
        self.parts.iter().enumerate().flat_map(move |(r, &len)| {
            let conj = conj.clone();
            (0..len).map(move |c| BoxStats {
                arm: len - c - 1,
                leg: conj.part(c) - r - 1,
                coarm: c,
                coleg: r,
            })
        })
    }
}

/// Arm, leg, co-arm and co-leg lengths of one box of a Young diagram.
/// For the box in row r, column c (0-indexed): arm = λ_r - c - 1,
/// leg = λ'_c - r - 1, coarm = c, coleg = r.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoxStats {
    pub arm: usize,
    pub leg: usize,
    pub coarm: usize,
    pub coleg: usize,
}

impl fmt::Display for Partition {
    /// Dot-joined parts, e.g. `3.1.1`; the empty partition prints as `-`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let rendered: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", rendered.join("."))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({:?})", self.parts)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() || s == "-" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for piece in s.split('.') {
            let p: usize = piece.parse().map_err(|_| Error::InvalidPartition {
                input: s.to_string(),
                reason: format!("`{piece}` is not a positive integer"),
            })?;
            if p == 0 {
                return Err(Error::InvalidPartition {
                    input: s.to_string(),
                    reason: "parts must be positive".to_string(),
                });
            }
            parts.push(p);
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPartition {
                input: s.to_string(),
                reason: "parts must be weakly decreasing".to_string(),
            });
        }
        Ok(Partition { parts })
    }
}

/// All partitions of n, each exactly once, in reverse lexicographic order:
/// `[n]` first, `[1^n]` last. The order is part of the output contract of the
/// coefficient tables, which must be byte-stable across runs.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    descend(n, n, &mut stack, &mut out);
    out
}

fn descend(rem: usize, max: usize, stack: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rem == 0 {
        out.push(Partition {
            parts: stack.clone(),
        });
        return;
    }
    for k in (1..=rem.min(max)).rev() {
        stack.push(k);
        descend(rem - k, k, stack, out);
        stack.pop();
    }
}

/// z_λ = ∏_i i^{m_i(λ)} m_i(λ)!, the size of the centralizer of a permutation
/// of cycle type λ.
pub fn z_of(lambda: &Partition) -> BigInt {
    let mut acc = BigInt::one();
    for (value, mult) in lambda.multiplicities() {
        acc *= BigInt::from(value).pow(mult as u32);
        acc *= factorial(mult);
    }
    acc
}

/// Aut_λ = ∏_i m_i(λ)!, the number of ways to permute equal parts.
pub fn aut_of(lambda: &Partition) -> BigInt {
    let mut acc = BigInt::one();
    for (_, mult) in lambda.multiplicities() {
        acc *= factorial(mult);
    }
    acc
}

/// |C_λ| = n!/z_λ, the size of the conjugacy class of cycle type λ in S_n.
pub fn class_size(lambda: &Partition) -> BigInt {
    factorial(lambda.weight()) / z_of(lambda)
}

/// |K_λ| = |B_n|² / (2^{ℓ(λ)} z_λ), the size of the double coset of the
/// hyperoctahedral group B_n in S_{2n} indexed by λ ⊢ n.
pub fn coset_size(lambda: &Partition) -> BigInt {
    let b = hyperoctahedral_order(lambda.weight());
    (&b * &b) / (pow2(lambda.num_parts()) * z_of(lambda))
}

/// |B_n| = 2^n n!.
pub fn hyperoctahedral_order(n: usize) -> BigInt {
    pow2(n) * factorial(n)
}

/// Product of the hook lengths of λ.
pub fn hook_product(lambda: &Partition) -> BigInt {
    let mut acc = BigInt::one();
    for s in lambda.boxes() {
        acc *= s.arm + s.leg + 1;
    }
    acc
}

/// The content products c_λ = ∏ (2a(s) + l(s) + 1) and
/// c'_λ = ∏ (2(1 + a(s)) + l(s)), returned together with
/// H_{2λ} = c_λ c'_λ, the hook product of the doubled partition.
///
/// H_{2λ} is computed independently as `hook_product(2λ)` and asserted to
/// factor as c_λ c'_λ.
pub fn c_products(lambda: &Partition) -> (BigInt, BigInt, BigInt) {
    let mut c = BigInt::one();
    let mut c_prime = BigInt::one();
    for s in lambda.boxes() {
        c *= 2 * s.arm + s.leg + 1;
        c_prime *= 2 * (1 + s.arm) + s.leg;
    }
    let h = hook_product(&lambda.double());
    assert_eq!(h, &c * &c_prime, "H_2λ must equal c_λ·c'_λ for {lambda}");
    (c, c_prime, h)
}

/// True when `outer`/`inner` is a horizontal strip: the diagrams are nested
/// and interlace, so no column gains more than one box.
pub fn is_horizontal_strip(outer: &Partition, inner: &Partition) -> bool {
    if !outer.contains(inner) {
        return false;
    }
    (0..outer.num_parts()).all(|i| inner.part(i) >= outer.part(i + 1))
}

/// A near hook (a, b, 1^c): first row a, optional second row b, and a column
/// of c boxes below it.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct NearHook {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

impl NearHook {
    pub fn new(a: usize, b: usize, c: usize) -> Result<Self> {
        let valid = a >= 1 && a >= b && (b > 0 || c == 0);
        if !valid {
            return Err(Error::InvalidNearHook { a, b, c });
        }
        Ok(NearHook { a, b, c })
    }

    pub fn weight(&self) -> usize {
        self.a + self.b + self.c
    }

    pub fn to_partition(&self) -> Partition {
        let mut parts = vec![self.a];
        if self.b > 0 {
            parts.push(self.b);
        }
        parts.extend(std::iter::repeat_n(1, self.c));
        Partition::new(parts)
    }

    /// Recognize a partition of the form (a, b, 1^c); rows past the second
    /// must all equal 1.
    pub fn from_partition(lambda: &Partition) -> Option<NearHook> {
        if lambda.is_empty() {
            return None;
        }
        let parts = lambda.parts();
        if parts.len() >= 3 && parts[2..].iter().any(|&p| p != 1) {
            return None;
        }
        let a = parts[0];
        let b = parts.get(1).copied().unwrap_or(0);
        let c = parts.len().saturating_sub(2);
        Some(NearHook { a, b, c })
    }
}

impl fmt::Display for NearHook {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},1^{})", self.a, self.b, self.c)
    }
}

/// All near hooks of weight n, ordered by the position of their partition in
/// `enumerate_partitions(n)`.
pub fn near_hooks(n: usize) -> Vec<NearHook> {
    enumerate_partitions(n)
        .iter()
        .filter_map(NearHook::from_partition)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use proptest::prelude::*;

    /// p(n) by the pentagonal-number recurrence; independent of the
    /// enumeration used by the library.
    fn partition_count(n: usize) -> u64 {
        let mut table = vec![0u64; n + 1];
        table[0] = 1;
        for i in 1..=n {
            let mut sum: i64 = 0;
            let mut k: i64 = 1;
            loop {
                let g1 = (k * (3 * k - 1) / 2) as usize;
                if g1 > i {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                sum += sign * table[i - g1] as i64;
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g2 <= i {
                    sum += sign * table[i - g2] as i64;
                }
                k += 1;
            }
            table[i] = sum as u64;
        }
        table[n]
    }

    #[test]
    fn enumeration_order_n4() {
        let got: Vec<Vec<usize>> = enumerate_partitions(4)
            .iter()
            .map(|p| p.parts().to_vec())
            .collect();
        let expected = vec![
            vec![4],
            vec![3, 1],
            vec![2, 2],
            vec![2, 1, 1],
            vec![1, 1, 1, 1],
        ];
        assert_eq!(got, expected);
    }

    #[test]
    fn enumeration_of_zero_is_empty_partition() {
        let ps = enumerate_partitions(0);
        assert_eq!(ps.len(), 1);
        assert!(ps[0].is_empty());
    }

    #[test]
    fn enumeration_matches_pentagonal_recurrence() {
        for n in 0..=15 {
            let ps = enumerate_partitions(n);
            assert_eq!(ps.len() as u64, partition_count(n), "p({n})");
            // complete, duplicate-free, all of the right weight
            for w in ps.windows(2) {
                assert!(w[0] > w[1], "strictly decreasing reverse-lex order");
            }
            for p in &ps {
                assert_eq!(p.weight(), n);
            }
        }
        assert_eq!(enumerate_partitions(10).len(), 42);
    }

    #[test]
    fn z_aut_and_class_sizes() {
        assert_eq!(z_of(&Partition::new(vec![1, 1, 1])), BigInt::from(6));
        assert_eq!(z_of(&Partition::new(vec![3])), BigInt::from(3));
        assert_eq!(z_of(&Partition::new(vec![2, 2, 1])), BigInt::from(8));
        assert_eq!(aut_of(&Partition::new(vec![4, 4, 4, 1])), BigInt::from(6));
        assert_eq!(aut_of(&Partition::new(vec![5])), BigInt::one());
        assert_eq!(
            aut_of(&Partition::new(vec![2, 2, 1, 1, 1])),
            BigInt::from(12)
        );
        assert_eq!(class_size(&Partition::new(vec![1, 1, 1])), BigInt::one());
        assert_eq!(class_size(&Partition::new(vec![3])), BigInt::from(2));
        assert_eq!(class_size(&Partition::new(vec![2, 1])), BigInt::from(3));
    }

    #[test]
    fn class_sizes_partition_the_group() {
        for n in 0..=12 {
            let total: BigInt = enumerate_partitions(n).iter().map(class_size).sum();
            assert_eq!(total, factorial(n), "sum of |C_λ| over λ ⊢ {n}");
        }
    }

    #[test]
    fn coset_sizes_partition_s2n() {
        assert_eq!(coset_size(&Partition::new(vec![1])), BigInt::from(2));
        assert_eq!(coset_size(&Partition::new(vec![2])), BigInt::from(16));
        for n in 1..=8 {
            let total: BigInt = enumerate_partitions(n).iter().map(coset_size).sum();
            assert_eq!(total, factorial(2 * n), "sum of |K_λ| over λ ⊢ {n}");
        }
    }

    #[test]
    fn content_products() {
        assert_eq!(
            c_products(&Partition::new(vec![1])),
            (BigInt::one(), BigInt::from(2), BigInt::from(2))
        );
        assert_eq!(
            c_products(&Partition::new(vec![2])),
            (BigInt::from(3), BigInt::from(8), BigInt::from(24))
        );
        for n in 0..=10 {
            for lam in enumerate_partitions(n) {
                let (c, cp, h) = c_products(&lam);
                assert_eq!(h, c * cp);
            }
        }
    }

    #[test]
    fn doubling() {
        assert_eq!(Partition::empty().double(), Partition::empty());
        assert_eq!(
            Partition::new(vec![3, 1]).double(),
            Partition::new(vec![6, 2])
        );
        assert_eq!(
            Partition::new(vec![2, 2, 1]).double(),
            Partition::new(vec![4, 4, 2])
        );
    }

    #[test]
    fn conjugate_and_boxes() {
        let lam = Partition::new(vec![4, 2, 1]);
        assert_eq!(lam.conjugate(), Partition::new(vec![3, 2, 1, 1]));
        assert_eq!(lam.conjugate().conjugate(), lam);
        // box (0,0) of (4,2,1): arm 3, leg 2
        let first = lam.boxes().next().unwrap();
        assert_eq!((first.arm, first.leg, first.coarm, first.coleg), (3, 2, 0, 0));
        assert_eq!(hook_product(&Partition::new(vec![4])), factorial(4));
    }

    #[test]
    fn near_hook_recognition() {
        assert_eq!(
            NearHook::from_partition(&Partition::new(vec![6, 3, 1, 1])),
            Some(NearHook { a: 6, b: 3, c: 2 })
        );
        assert_eq!(
            NearHook::from_partition(&Partition::new(vec![2, 2, 2])),
            None
        );
        assert_eq!(NearHook::from_partition(&Partition::empty()), None);
        assert!(NearHook::new(2, 3, 0).is_err());
        assert!(NearHook::new(2, 0, 1).is_err());
        let nh = NearHook::new(3, 2, 2).unwrap();
        assert_eq!(nh.to_partition(), Partition::new(vec![3, 2, 1, 1]));
        assert_eq!(nh.weight(), 7);
    }

    #[test]
    fn near_hook_enumeration_counts() {
        // weight 3: (3), (2,1), (1,1,1)
        assert_eq!(near_hooks(3).len(), 3);
        // weight 8: the one-row hook plus pairs b=1..4
        assert_eq!(near_hooks(8).len(), 17);
    }

    #[test]
    fn horizontal_strips() {
        let outer = Partition::new(vec![4, 2]);
        assert!(is_horizontal_strip(&outer, &Partition::new(vec![2, 2])));
        assert!(is_horizontal_strip(&outer, &Partition::new(vec![3, 1])));
        assert!(!is_horizontal_strip(&outer, &Partition::new(vec![1, 1])));
        assert!(!is_horizontal_strip(&Partition::new(vec![1, 1]), &Partition::empty()));
        assert!(is_horizontal_strip(&Partition::new(vec![3]), &Partition::empty()));
        assert!(is_horizontal_strip(&outer, &outer));
    }

    #[test]
    fn parse_and_display_round_trip() {
        let p: Partition = "3.1.1".parse().unwrap();
        assert_eq!(p, Partition::new(vec![3, 1, 1]));
        assert_eq!(p.to_string(), "3.1.1");
        assert!("1.3".parse::<Partition>().is_err());
        assert!("3.0".parse::<Partition>().is_err());
        assert!("3.x".parse::<Partition>().is_err());
        assert_eq!("-".parse::<Partition>().unwrap(), Partition::empty());
    }

    proptest! {
        #[test]
        fn prop_hook_product_of_double_factors(n in 0usize..=9, idx in 0usize..1000) {
            let ps = enumerate_partitions(n);
            let lam = &ps[idx % ps.len()];
            let (c, cp, h) = c_products(lam);
            prop_assert_eq!(h, c * cp);
        }

        #[test]
        fn prop_display_parse_round_trip(parts in proptest::collection::vec(1usize..30, 0..8)) {
            let lam = Partition::from_unsorted(parts);
            let s = lam.to_string();
            let back: Partition = s.parse().unwrap();
            prop_assert_eq!(back, lam);
        }

        #[test]
        fn prop_class_size_positive(n in 1usize..=10, idx in 0usize..1000) {
            let ps = enumerate_partitions(n);
            let lam = &ps[idx % ps.len()];
            prop_assert!(class_size(lam) > BigInt::zero());
            prop_assert!(coset_size(lam) > BigInt::zero());
        }
    }
}
