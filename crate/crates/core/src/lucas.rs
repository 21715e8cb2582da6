//! p-ary digit combinatorics: Lucas binomials and Lucas sets, the
//! digit-splitting decomposition N = M + p^r·H, zero-blocks and the gaps
//! they force, membership in the index set 𝕁(S₀), and finite-horizon
//! Cesàro densities.

use crate::error::{CoreError, Result};
use alloc::format;
use alloc::vec::Vec;

/// Trial-division primality check; moduli here are small.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

pub(crate) fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(CoreError::NotPrime(p))
    }
}

/// Little-endian p-ary expansion in canonical form (no trailing zero digit;
/// zero has the empty expansion).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PAryExpansion {
    pub digits: Vec<u32>,
    pub p: u64,
}

impl PAryExpansion {
    /// Exact reconstruction Σ digits[i]·p^i.
    pub fn value(&self) -> u64 {
        let mut acc: u64 = 0;
        for &d in self.digits.iter().rev() {
            acc = acc * self.p + d as u64;
        }
        acc
    }

    pub fn digit(&self, i: usize) -> u32 {
        self.digits.get(i).copied().unwrap_or(0)
    }
}

/// Little-endian digits of `n` in base `p` (prime, validated).
pub fn p_ary_digits(n: u64, p: u64) -> Result<PAryExpansion> {
    check_prime(p)?;
    let mut digits = Vec::new();
    let mut n = n;
    while n > 0 {
        digits.push((n % p) as u32);
        n /= p;
    }
    Ok(PAryExpansion { digits, p })
}

/// C(n_big, n) mod p via the digit-wise product; never materializes the
/// binomial coefficient.
pub fn lucas_binomial(n_big: u64, n: u64, p: u64) -> Result<u64> {
    check_prime(p)?;
    let mut acc: u64 = 1;
    let (mut a, mut b) = (n_big, n);
    while b > 0 || a > 0 {
        let (da, db) = (a % p, b % p);
        if db > da {
            return Ok(0);
        }
        acc = acc * binom_small(da, db) % p;
        a /= p;
        b /= p;
    }
    Ok(acc)
}

/// C(a, b) for 0 ≤ b ≤ a < p (single digits).
fn binom_small(a: u64, b: u64) -> u64 {
    let b = b.min(a - b);
    let mut num: u64 = 1;
    let mut den: u64 = 1;
    for i in 0..b {
        num *= a - i;
        den *= i + 1;
    }
    num / den
}

/// The set Λ(N) of n whose digits are dominated by N's digits; exactly the n
/// with C(N,n) ≠ 0 mod p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LucasSet {
    /// Sorted. Cardinality is Π (digit+1).
    pub elements: Vec<u64>,
    pub n: u64,
    pub p: u64,
}

/// Enumerates Λ(N) by the digit-wise product, without scanning all n ≤ N.
pub fn lucas_set(n: u64, p: u64) -> Result<LucasSet> {
    let exp = p_ary_digits(n, p)?;
    let mut elements: Vec<u64> = alloc::vec![0];
    let mut place: u64 = 1;
    for &d in &exp.digits {
        if d > 0 {
            let base = elements.clone();
            for k in 1..=d as u64 {
                let off = k * place;
                elements.extend(base.iter().map(|&e| e + off));
            }
        }
        place = place.saturating_mul(p);
    }
    elements.sort_unstable();
    Ok(LucasSet { elements, n, p })
}

impl LucasSet {
    pub fn contains(&self, m: u64) -> bool {
        self.elements.binary_search(&m).is_ok()
    }
}

/// Splits N = M + p^r·H with M < p^r. Λ(N) is then the disjoint union of
/// the translates M' + p^r·h over M' ∈ Λ(M), h ∈ Λ(H), and the binomials
/// multiply along the split.
pub fn lucas_decompose(n: u64, r: u32, p: u64) -> Result<(u64, u64)> {
    check_prime(p)?;
    let pr = p
        .checked_pow(r)
        .ok_or(CoreError::Overflow("p^r in lucas_decompose"))?;
    Ok((n % pr, n / pr))
}

/// Number of zero-blocks in the p-ary expansion of H: pairs i < k with
/// H^(i−1) ≠ 0 ≠ H^(k) and H^(j) = 0 for i ≤ j < k (0-indexed digits).
pub fn zero_block_count(h: u64, p: u64) -> Result<usize> {
    let exp = p_ary_digits(h, p)?;
    let d = &exp.digits;
    let mut count = 0;
    let mut j = 1;
    while j < d.len() {
        if d[j] == 0 && d[j - 1] != 0 {
            // run of zeros starting at j; it is a zero-block iff a nonzero
            // digit exists above it (always true in canonical form unless
            // the run reaches the top, which it cannot: no trailing zeros)
            let mut k = j;
            while k < d.len() && d[k] == 0 {
                k += 1;
            }
            if k < d.len() {
                count += 1;
            }
            j = k;
        } else {
            j += 1;
        }
    }
    Ok(count)
}

/// Gaps in Λ(H): consecutive elements h₀ < h₁ of Λ(H) with a nonempty hole
/// between them (h₁ − h₀ ≥ 2) and h₁ ≥ p·h₀. Every zero-block forces one,
/// so the returned count is ≥ `zero_block_count(h, p)`.
pub fn gaps_in_lucas_set(h: u64, p: u64) -> Result<Vec<(u64, u64)>> {
    let set = lucas_set(h, p)?;
    let mut gaps = Vec::new();
    for w in set.elements.windows(2) {
        let (h0, h1) = (w[0], w[1]);
        if h1 - h0 >= 2 && h1 >= p.saturating_mul(h0) {
            gaps.push((h0, h1));
        }
    }
    Ok(gaps)
}

/// Membership in 𝕁(S₀): N admits a split N = M + p^r·H with H > 0 and
/// M, S₀ < p^{r−1}; equivalently some digit N^(ρ) = 0 with S₀ < p^ρ ≤ N.
pub fn in_j(n: u64, s0: u64, p: u64) -> Result<bool> {
    check_prime(p)?;
    if s0 < 1 {
        return Err(CoreError::InvalidArgument(format!("S0 must be ≥ 1, got {s0}")));
    }
    if n < p.saturating_mul(s0) {
        return Ok(false);
    }
    let exp = p_ary_digits(n, p)?;
    let mut power: u64 = 1;
    for rho in 0..exp.digits.len() {
        if power > s0 && exp.digit(rho) == 0 {
            return Ok(true);
        }
        power = match power.checked_mul(p) {
            Some(v) => v,
            None => return Ok(false),
        };
    }
    Ok(false)
}

/// The split certifying N ∈ 𝕁(S₀): the smallest r with N = M + p^r·H,
/// M, S₀ < p^{r−1} and H > 0. Errors when N ∉ 𝕁(S₀), naming the failed
/// digit condition.
pub fn j_split(n: u64, s0: u64, p: u64) -> Result<(u64, u32, u64)> {
    check_prime(p)?;
    let exp = p_ary_digits(n, p)?;
    let mut power: u64 = 1; // p^rho
    for rho in 0..exp.digits.len() {
        if power > s0 && exp.digit(rho) == 0 {
            let r = rho as u32 + 1;
            let (m, h) = lucas_decompose(n, r, p)?;
            if h > 0 {
                return Ok((m, r, h));
            }
        }
        power = match power.checked_mul(p) {
            Some(v) => v,
            None => break,
        };
    }
    Err(CoreError::InvalidArgument(format!(
        "{n} ∉ J({s0}) over p={p}: no digit N^(r) = 0 with S0 < p^r ≤ N"
    )))
}

/// Finite-horizon Cesàro density of an index set, with cumulative counts at
/// power-of-two checkpoints for monotonicity inspection.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityReport {
    pub horizon: u64,
    /// (checkpoint horizon, cumulative hit count), checkpoints at powers of
    /// two and at the final horizon.
    pub checkpoints: Vec<(u64, u64)>,
    pub final_count: u64,
}

impl DensityReport {
    pub fn final_density(&self) -> f64 {
        self.final_count as f64 / self.horizon as f64
    }

    /// Density at each checkpoint, for trend inspection.
    pub fn checkpoint_densities(&self) -> Vec<(u64, f64)> {
        self.checkpoints
            .iter()
            .map(|&(h, c)| (h, c as f64 / h as f64))
            .collect()
    }

    /// Relative Cesàro density of two index sets as the ratio of their
    /// final counts.
    pub fn relative_to(&self, other: &DensityReport) -> f64 {
        self.final_count as f64 / other.final_count as f64
    }
}

/// Counts {j ∈ [0, horizon) : indicator(j)}.
pub fn cesaro_density<F: FnMut(u64) -> bool>(mut indicator: F, horizon: u64) -> DensityReport {
    assert!(horizon >= 1, "horizon must be ≥ 1");
    let mut count = 0u64;
    let mut checkpoints = Vec::new();
    let mut next_cp = 1u64;
    for j in 0..horizon {
        if indicator(j) {
            count += 1;
        }
        if j + 1 == next_cp {
            checkpoints.push((j + 1, count));
            next_cp *= 2;
        }
    }
    if checkpoints.last().map(|&(h, _)| h) != Some(horizon) {
        checkpoints.push((horizon, count));
    }
    DensityReport {
        horizon,
        checkpoints,
        final_count: count,
    }
}
