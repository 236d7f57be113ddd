//! Zonal polynomials on near hooks.
//!
//! A column-strict tableau of shape (a, b, 1^c) is encoded by the triples
//! (a_i, b_i, c_i): how many boxes of the i-th largest entry sit in the first
//! row, the second row, and the column. Summing an explicit product of
//! binomial-square ratios over those fillings gives the monomial expansions
//! of the Q and P normalizations of the zonal polynomial.
//!
//! Two independent routes are kept alive on purpose:
//! - the closed product form ([`q_near_hook`], [`p_near_hook`]), and
//! - generic skew Pochhammer factors at parameter 1/2 ([`skew_phi`],
//!   [`skew_psi`]) multiplied along arbitrary horizontal-strip chains.
//!
//! The test suite holds them equal tableau by tableau.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{binomial, double_factorial, factorial, frac, multinomial, odd_double_factorial, pow2, ratio};
use crate::characters::MonomialExpansion;
use crate::error::{Error, Result};
use crate::partitions::{c_products, enumerate_partitions, is_horizontal_strip, NearHook, Partition};

/// ⟨x over y⟩ = C(x,y)² / C(2x,2y) for x ≥ y, and 0 otherwise.
pub fn gen_bin(x: usize, y: usize) -> BigRational {
    if y > x {
        return BigRational::zero();
    }
    let b = binomial(x, y);
    frac(&b * &b, binomial(2 * x, 2 * y))
}

/// ⟨⟨x over y⟩⟩ = C(x,y)² / C(2x+1,2y) for x ≥ y, and 0 otherwise.
pub fn var_gen_bin(x: usize, y: usize) -> BigRational {
    if y > x {
        return BigRational::zero();
    }
    let b = binomial(x, y);
    frac(&b * &b, binomial(2 * x + 1, 2 * y))
}

/// Multinomial extension ⟨n over λ⟩ = C(n;λ) · ∏(2λ_i-1)!! / (2n-1)!!.
pub fn gen_bin_multi(n: usize, lambda: &Partition) -> BigRational {
    assert_eq!(lambda.weight(), n);
    let mut num = multinomial(n, lambda.parts());
    for &part in lambda.parts() {
        num *= odd_double_factorial(part);
    }
    frac(num, odd_double_factorial(n))
}

/// The rational correction attached to a column box:
/// R(x,y,z,t,w) = (2x+w)(2y+w)(2z+w-1)(2t+w-1) /
///               ((2x+w-1)(2y+w+1)(2z+w-2)(2t+w)).
///
/// A zero denominator factor is reported by name; callers only evaluate R
/// when its exponent is 1, which keeps degenerate configurations out.
pub fn rfunc(x: i64, y: i64, z: i64, t: i64, w: i64) -> Result<BigRational> {
    let den_factors: [(&'static str, i64); 4] = [
        ("2x+w-1", 2 * x + w - 1),
        ("2y+w+1", 2 * y + w + 1),
        ("2z+w-2", 2 * z + w - 2),
        ("2t+w", 2 * t + w),
    ];
    for (name, v) in den_factors {
        if v == 0 {
            return Err(Error::ZeroDenominator {
                factor: name,
                x,
                y,
                z,
                t,
                w,
            });
        }
    }
    let num = (2 * x + w) * (2 * y + w) * (2 * z + w - 1) * (2 * t + w - 1);
    let den = (2 * x + w - 1) * (2 * y + w + 1) * (2 * z + w - 2) * (2 * t + w);
    Ok(frac(BigInt::from(num), BigInt::from(den)))
}

/// The signed weight attached to the near hook (x, y, 1^{n-x-y}) in the main
/// double-coset generating series. For y ≥ 1:
///
/// 2n (n+x-y+1)(n+y-x)(n-x-y)! (2x-1)!!(2y-2)!! /
///   ((-1)^{n+1-x-y} (n+x-y)(n+y-x-1)(2(x-y)+1)),
///
/// and (2n-1)!! for the one-row hook (x, y) = (n, 0).
pub fn main_hook_weight(n: usize, x: usize, y: usize) -> Result<BigRational> {
    if y == 0 {
        if x != n {
            return Err(Error::InvalidArgument(format!(
                "one-row weight needs x = n, got x={x}, n={n}"
            )));
        }
        return Ok(ratio(odd_double_factorial(n)));
    }
    if x < y || x + y > n {
        return Err(Error::InvalidNearHook {
            a: x,
            b: y,
            c: n.saturating_sub(x + y),
        });
    }
    let c = n - x - y;
    let mut num = BigInt::from(2 * n as i64)
        * BigInt::from((n + x - y + 1) as i64)
        * BigInt::from((n + y - x) as i64)
        * factorial(c)
        * double_factorial(2 * x as i64 - 1)
        * double_factorial(2 * y as i64 - 2);
    let den = BigInt::from((n + x - y) as i64)
        * BigInt::from((n + y - x - 1) as i64)
        * BigInt::from((2 * (x - y) + 1) as i64);
    if (c + 1) % 2 == 1 {
        num = -num;
    }
    Ok(frac(num, den))
}

// ---------------------------------------------------------------------------
// Skew Pochhammer factors at parameter 1/2
// ---------------------------------------------------------------------------

/// (t)_{-1/2} = Γ(t-1/2)/Γ(t) for t ≥ 1 a half-integer, encoded as
/// (rational, power of √π). Integer t carries √π^{+1}, half-integer t
/// carries √π^{-1}; in the skew products the powers cancel pairwise, which
/// is asserted, so every result is an exact rational.
fn poch_half(twice_t: i64) -> (BigRational, i32) {
    assert!(twice_t >= 2, "Pochhammer argument below 1: {twice_t}/2");
    if twice_t % 2 == 0 {
        // t = m+1: Γ(m+1/2)/Γ(m+1) = √π (2m)! / (4^m m!²)
        let m = (twice_t / 2 - 1) as usize;
        let mf = factorial(m);
        (frac(factorial(2 * m), pow2(2 * m) * &mf * &mf), 1)
    } else {
        // t = m+3/2: Γ(m+1)/Γ(m+3/2) = 2·4^m m!² / ((2m+1)! √π)
        let m = ((twice_t - 3) / 2) as usize;
        let mf = factorial(m);
        (
            frac(BigInt::from(2) * pow2(2 * m) * &mf * &mf, factorial(2 * m + 1)),
            -1,
        )
    }
}

fn check_strip(outer: &Partition, inner: &Partition) -> Result<()> {
    if !is_horizontal_strip(outer, inner) {
        return Err(Error::NotHorizontalStrip {
            outer: outer.to_string(),
            inner: inner.to_string(),
        });
    }
    Ok(())
}

fn skew_factor(outer: &Partition, inner: &Partition, lower: bool) -> Result<BigRational> {
    check_strip(outer, inner)?;
    // `lower` selects the ψ variant (product bounded by ℓ(inner), row-lattice
    // denominators); otherwise the φ variant (bounded by ℓ(outer)).
    let bound = if lower {
        inner.num_parts()
    } else {
        outer.num_parts()
    };
    let mut value = BigRational::one();
    let mut pi_pow: i32 = 0;
    for k in 1..=bound {
        for l in k..=bound {
            let diff = (l - k) as i64;
            let arg = |v: i64| 2 * v + diff + 2;
            let num1 = inner.part(k - 1) as i64 - outer.part(l) as i64;
            let num2 = outer.part(k - 1) as i64 - inner.part(l - 1) as i64;
            let (den1, den2) = if lower {
                (
                    outer.part(k - 1) as i64 - outer.part(l) as i64,
                    inner.part(k - 1) as i64 - inner.part(l - 1) as i64,
                )
            } else {
                (
                    outer.part(k - 1) as i64 - outer.part(l - 1) as i64,
                    inner.part(k - 1) as i64 - inner.part(l) as i64,
                )
            };
            for (v, up) in [(num1, true), (num2, true), (den1, false), (den2, false)] {
                let (q, p) = poch_half(arg(v));
                if up {
                    value *= q;
                    pi_pow += p;
                } else {
                    value /= q;
                    pi_pow -= p;
                }
            }
        }
    }
    assert_eq!(pi_pow, 0, "√π bookkeeping must cancel in skew factors");
    Ok(value)
}

/// ψ_{λ/μ} at parameter 1/2 for a horizontal strip λ/μ; the per-strip weight
/// of the P normalization.
pub fn skew_psi(outer: &Partition, inner: &Partition) -> Result<BigRational> {
    skew_factor(outer, inner, true)
}

/// φ_{λ/μ} at parameter 1/2 for a horizontal strip λ/μ; the per-strip weight
/// of the Q normalization.
pub fn skew_phi(outer: &Partition, inner: &Partition) -> Result<BigRational> {
    skew_factor(outer, inner, false)
}

// ---------------------------------------------------------------------------
// Column-strict chains (generic shapes)
// ---------------------------------------------------------------------------

/// All partitions ν ⊆ κ with |κ/ν| = `strip` such that κ/ν is a horizontal
/// strip, built directly from the interlacing condition κ_{j+1} ≤ ν_j ≤ κ_j.
fn horizontal_strip_predecessors(kappa: &Partition, strip: usize) -> Vec<Partition> {
    let total = match kappa.weight().checked_sub(strip) {
        Some(t) => t,
        None => return Vec::new(),
    };
    let rows = kappa.num_parts();
    let mut lows = vec![0usize; rows];
    let mut highs = vec![0usize; rows];
    for j in 0..rows {
        lows[j] = kappa.part(j + 1);
        highs[j] = kappa.part(j);
    }
    let bounds = StripBounds {
        low_suffix: suffix_sums(&lows),
        high_suffix: suffix_sums(&highs),
        lows,
        highs,
    };
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn go(j: usize, remaining: usize, b: &StripBounds, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if j == b.lows.len() {
            if remaining == 0 {
                out.push(Partition::from_unsorted(current.clone()));
            }
            return;
        }
        for v in b.lows[j]..=b.highs[j] {
            if v > remaining {
                break;
            }
            let left = remaining - v;
            if left < b.low_suffix[j + 1] || left > b.high_suffix[j + 1] {
                continue;
            }
            current.push(v);
            go(j + 1, left, b, current, out);
            current.pop();
        }
    }
    go(0, total, &bounds, &mut current, &mut out);
    out
}

/// Per-row interlacing bounds plus their suffix sums, for pruning.
struct StripBounds {
    lows: Vec<usize>,
    highs: Vec<usize>,
    low_suffix: Vec<usize>,
    high_suffix: Vec<usize>,
}

fn suffix_sums(values: &[usize]) -> Vec<usize> {
    let mut sums = vec![0; values.len() + 1];
    for j in (0..values.len()).rev() {
        sums[j] = sums[j + 1] + values[j];
    }
    sums
}

/// Every chain ∅ = λ^{(0)} ⊂ λ^{(1)} ⊂ ... ⊂ λ^{(p)} = `shape` in which
/// λ^{(i)}/λ^{(i-1)} is a horizontal strip of `strip_sizes[i-1]` boxes.
/// These are exactly the column-strict tableaux of the given shape whose
/// entry i appears `strip_sizes[i-1]` times.
pub fn column_strict_chains(shape: &Partition, strip_sizes: &[usize]) -> Vec<Vec<Partition>> {
    if strip_sizes.iter().sum::<usize>() != shape.weight() {
        return Vec::new();
    }
    fn go(current: &Partition, sizes: &[usize]) -> Vec<Vec<Partition>> {
        if sizes.is_empty() {
            return if current.is_empty() {
                vec![vec![current.clone()]]
            } else {
                Vec::new()
            };
        }
        let last = sizes[sizes.len() - 1];
        let mut chains = Vec::new();
        for prev in horizontal_strip_predecessors(current, last) {
            for mut chain in go(&prev, &sizes[..sizes.len() - 1]) {
                chain.push(current.clone());
                chains.push(chain);
            }
        }
        chains
    }
    go(shape, strip_sizes)
}

// ---------------------------------------------------------------------------
// Near-hook fillings
// ---------------------------------------------------------------------------

/// One column-strict tableau of near-hook shape, encoded by how many boxes of
/// each entry land in the first row, the second row, and the column. Entry
/// index i = 1 corresponds to the *largest* entry; the running remainders
/// (ā_i, b̄_i, c̄_i) walk the shape down to the empty partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NearHookFilling {
    pub shape: NearHook,
    pub content: Partition,
    /// (boxes in row 1, boxes in row 2, boxes in the column) per entry,
    /// largest entry first. Entry i has content[i-1] boxes in total.
    pub steps: Vec<(usize, usize, usize)>,
}

impl NearHookFilling {
    /// Remainder states (ā_i, b̄_i, c̄_i) for i = 0..=p; state 0 is the full
    /// shape, the last state is (0, 0, 0).
    pub fn states(&self) -> Vec<(usize, usize, usize)> {
        let mut states = Vec::with_capacity(self.steps.len() + 1);
        let mut state = (self.shape.a, self.shape.b, self.shape.c);
        states.push(state);
        for &(da, db, dc) in &self.steps {
            state = (state.0 - da, state.1 - db, state.2 - dc);
            states.push(state);
        }
        states
    }

    /// The partition chain ∅ = λ^{(0)} ⊂ ... ⊂ λ^{(p)} = shape this filling
    /// describes, compatible with [`column_strict_chains`] over the reversed
    /// content.
    pub fn chain(&self) -> Vec<Partition> {
        let states = self.states();
        (0..states.len())
            .rev()
            .map(|i| state_partition(states[i]))
            .collect()
    }

    /// The product of binomial-square factors this filling contributes to
    /// the zonal sums:
    /// ∏_i ⟨ā_{i-1}-b̄_{i-1} over a_i⟩ ⟨⟨ā_{i-1}-b̄_i over b_i⟩⟩
    ///     R(ā_i, ā_{i-1}, b̄_i, b̄_{i-1}, c̄_{i-1})^{c_i}.
    pub fn weight(&self) -> BigRational {
        let states = self.states();
        let mut w = BigRational::one();
        for (i, &(ai, bi, ci)) in self.steps.iter().enumerate() {
            let (pa, pb, pc) = states[i];
            let (ca, cb, _cc) = states[i + 1];
            w *= gen_bin(pa - pb, ai);
            w *= var_gen_bin(pa - cb, bi);
            if ci == 1 {
                let r = rfunc(ca as i64, pa as i64, cb as i64, pb as i64, pc as i64)
                    .expect("valid fillings cannot hit a zero denominator");
                w *= r;
            }
        }
        w
    }
}

fn state_partition((a, b, c): (usize, usize, usize)) -> Partition {
    if a == 0 {
        return Partition::empty();
    }
    let mut parts = vec![a];
    if b > 0 {
        parts.push(b);
    }
    parts.extend(std::iter::repeat_n(1, c));
    Partition::new(parts)
}

/// Is (a, b, 1^c) with these remainders a partition shape?
fn state_valid((a, b, c): (usize, usize, usize)) -> bool {
    a >= b && (b > 0 || c == 0)
}

/// All column-strict tableaux of the given near-hook shape and content,
/// encoded as step triples. Validity is decided by the chain condition:
/// every remainder state is a partition shape and consecutive shapes differ
/// by a horizontal strip.
pub fn enumerate_fillings(shape: NearHook, content: &Partition) -> Result<Vec<NearHookFilling>> {
    if shape.weight() != content.weight() {
        return Err(Error::WeightMismatch {
            left: shape.weight(),
            right: content.weight(),
        });
    }
    let p = content.num_parts();
    let mut out = Vec::new();
    let mut steps: Vec<(usize, usize, usize)> = Vec::with_capacity(p);
    fn go(
        shape: NearHook,
        content: &Partition,
        i: usize,
        state: (usize, usize, usize),
        steps: &mut Vec<(usize, usize, usize)>,
        out: &mut Vec<NearHookFilling>,
    ) {
        if i == content.num_parts() {
            debug_assert_eq!(state, (0, 0, 0), "weights force the chain to empty out");
            out.push(NearHookFilling {
                shape,
                content: content.clone(),
                steps: steps.clone(),
            });
            return;
        }
        let size = content.part(i);
        let (pa, pb, pc) = state;
        for ci in 0..=1usize.min(pc).min(size) {
            for bi in 0..=(size - ci).min(pb) {
                let ai = size - ci - bi;
                if ai > pa {
                    continue;
                }
                let next = (pa - ai, pb - bi, pc - ci);
                if !state_valid(next) {
                    continue;
                }
                // horizontal strip between consecutive shapes: the new first
                // row must cover the old second row, and a nonempty old
                // column pins the box of row 2 column 1 in place.
                if next.0 < pb {
                    continue;
                }
                if pc >= 1 && next.1 == 0 {
                    continue;
                }
                steps.push((ai, bi, ci));
                go(shape, content, i + 1, next, steps, out);
                steps.pop();
            }
        }
    }
    go(shape, content, 0, (shape.a, shape.b, shape.c), &mut steps, &mut out);
    Ok(out)
}

/// Σ over fillings of a given content of their weight; the inner sums of the
/// zonal expansions, grouped by content.
pub fn type_weights(shape: NearHook) -> BTreeMap<Partition, BigRational> {
    let mut out = BTreeMap::new();
    for mu in enumerate_partitions(shape.weight()) {
        let fillings = enumerate_fillings(shape, &mu).expect("weights match");
        if fillings.is_empty() {
            continue;
        }
        let total: BigRational = fillings.iter().map(|f| f.weight()).sum();
        if !total.is_zero() {
            out.insert(mu, total);
        }
    }
    out
}

/// The filling sum for one content only; what [`type_weights`] computes for
/// every content at once.
pub fn content_weight(shape: NearHook, content: &Partition) -> Result<BigRational> {
    let fillings = enumerate_fillings(shape, content)?;
    Ok(fillings.iter().map(|f| f.weight()).sum())
}

/// Global prefactor of the Q normalization: C(2a-2b, a-b) / (4^{a-b} (1+c)).
pub fn q_prefactor(shape: NearHook) -> BigRational {
    let d = shape.a - shape.b;
    frac(
        binomial(2 * d, d),
        pow2(2 * d) * BigInt::from(1 + shape.c),
    )
}

/// Global prefactor of the P normalization:
/// (2a+c+1)(2b+c) / ((2a+c)(2b+c-1) ⟨⟨a-1 over b-1⟩⟩) when b > 0, else 1.
pub fn p_prefactor(shape: NearHook) -> BigRational {
    if shape.b == 0 {
        return BigRational::one();
    }
    let (a, b, c) = (shape.a as i64, shape.b as i64, shape.c as i64);
    let num = BigInt::from((2 * a + c + 1) * (2 * b + c));
    let den = BigInt::from((2 * a + c) * (2 * b + c - 1));
    frac(num, den) / var_gen_bin(shape.a - 1, shape.b - 1)
}

/// Monomial expansion of Q_{(a,b,1^c)} from the closed product formula.
pub fn q_near_hook(shape: NearHook) -> MonomialExpansion {
    expansion_with_prefactor(shape, q_prefactor(shape))
}

/// Monomial expansion of P_{(a,b,1^c)} from the closed product formula.
pub fn p_near_hook(shape: NearHook) -> MonomialExpansion {
    expansion_with_prefactor(shape, p_prefactor(shape))
}

fn expansion_with_prefactor(shape: NearHook, prefactor: BigRational) -> MonomialExpansion {
    let mut out = MonomialExpansion::new(shape.weight());
    for (mu, w) in type_weights(shape) {
        out.add_term(mu, w * &prefactor);
    }
    out
}

/// The integral-form zonal polynomial Z = c'_λ Q_λ, asserted to coincide
/// with c_λ P_λ; the two reconstructions disagreeing would mean the
/// prefactors are inconsistent.
pub fn zonal_z(shape: NearHook) -> MonomialExpansion {
    let lambda = shape.to_partition();
    let (c, c_prime, _) = c_products(&lambda);
    let from_q = q_near_hook(shape).scaled(&ratio(c_prime));
    let from_p = p_near_hook(shape).scaled(&ratio(c));
    assert!(
        from_q == from_p,
        "c'·Q and c·P disagree for shape {shape}"
    );
    from_q
}
