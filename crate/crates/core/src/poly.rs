//! Sparse polynomial algebra of one-dimensional linear cellular automata
//! over ℤ/p. Composition of automata is multiplication of polynomials in
//! σ, so powers, geometry (diameter, centre), the bipartite normal form
//! Φ = 1 + Γ∘σ^f, and S-rank all live here.

use crate::error::{CoreError, Result};
use crate::frac::Frac;
use crate::lucas::{check_prime, j_split, lucas_set};
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

/// An LCA Φ = Σ_f φ_f σ^f as a sparse exponent → coefficient map.
/// Coefficients are in [1, p); zero terms are never stored. The empty map is
/// not representable: the zero polynomial is rejected on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LcaPolynomial {
    p: u64,
    terms: BTreeMap<i64, u64>,
}

impl LcaPolynomial {
    /// Builds from (exponent, coefficient) pairs; coefficients are reduced
    /// mod p, zero terms dropped, and the result must be nonzero.
    pub fn new<I: IntoIterator<Item = (i64, u64)>>(p: u64, terms: I) -> Result<LcaPolynomial> {
        check_prime(p)?;
        let mut map = BTreeMap::new();
        for (e, c) in terms {
            let c = (map.get(&e).copied().unwrap_or(0) + c % p) % p;
            if c == 0 {
                map.remove(&e);
            } else {
                map.insert(e, c);
            }
        }
        if map.is_empty() {
            return Err(CoreError::InvalidArgument(
                "zero polynomial is not an LCA".into(),
            ));
        }
        Ok(LcaPolynomial { p, terms: map })
    }

    /// A user-facing LCA must have at least two terms; powers of an LCA may
    /// legitimately collapse to one.
    pub fn new_lca<I: IntoIterator<Item = (i64, u64)>>(p: u64, terms: I) -> Result<LcaPolynomial> {
        let poly = Self::new(p, terms)?;
        if poly.terms.len() < 2 {
            return Err(CoreError::InvalidArgument(
                "an LCA needs at least two terms".into(),
            ));
        }
        Ok(poly)
    }

    /// The multiplicative identity 1 = σ^0.
    pub fn one(p: u64) -> LcaPolynomial {
        let mut terms = BTreeMap::new();
        terms.insert(0, 1);
        LcaPolynomial { p, terms }
    }

    /// A single term c·σ^e.
    pub fn monomial(p: u64, e: i64, c: u64) -> Result<LcaPolynomial> {
        Self::new(p, [(e, c)])
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: i64) -> u64 {
        self.terms.get(&e).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> Vec<i64> {
        self.terms.keys().copied().collect()
    }

    pub fn min_exponent(&self) -> i64 {
        *self.terms.keys().next().unwrap()
    }

    pub fn max_exponent(&self) -> i64 {
        *self.terms.keys().next_back().unwrap()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(0) == 1
    }

    /// max exponent − min exponent.
    pub fn diam(&self) -> u64 {
        (self.max_exponent() - self.min_exponent()) as u64
    }

    /// Exact centroid of the support.
    pub fn centre(&self) -> Frac {
        let sum: i64 = self.terms.keys().sum();
        Frac::new(sum, self.terms.len() as i64)
    }

    /// Sparse convolution, coefficients mod p.
    pub fn multiply(&self, other: &LcaPolynomial) -> Result<LcaPolynomial> {
        if self.p != other.p {
            return Err(CoreError::ModulusMismatch {
                left: self.p,
                right: other.p,
            });
        }
        let mut map: BTreeMap<i64, u64> = BTreeMap::new();
        for (&ea, &ca) in &self.terms {
            for (&eb, &cb) in &other.terms {
                let e = ea
                    .checked_add(eb)
                    .ok_or(CoreError::Overflow("exponent sum"))?;
                let c = (map.get(&e).copied().unwrap_or(0) + ca * cb) % self.p;
                if c == 0 {
                    map.remove(&e);
                } else {
                    map.insert(e, c);
                }
            }
        }
        if map.is_empty() {
            return Err(CoreError::InvalidArgument(
                "product collapsed to zero (inputs were not reduced?)".into(),
            ));
        }
        Ok(LcaPolynomial {
            p: self.p,
            terms: map,
        })
    }

    /// Reference powering by repeated multiplication. Φ^0 = 1.
    pub fn power_naive(&self, n: u64) -> Result<LcaPolynomial> {
        let mut acc = LcaPolynomial::one(self.p);
        for _ in 0..n {
            acc = acc.multiply(self)?;
        }
        Ok(acc)
    }

    /// Fast powering. Two-term polynomials a·σ^g + b·σ^h expand in closed
    /// form over the Lucas set Λ(N); anything larger goes through
    /// square-and-multiply. Identical to `power_naive`.
    pub fn power_fast(&self, n: u64) -> Result<LcaPolynomial> {
        if n == 0 {
            return Ok(LcaPolynomial::one(self.p));
        }
        if self.terms.len() == 1 {
            let (&e, &c) = self.terms.iter().next().unwrap();
            let exp = e
                .checked_mul(n as i64)
                .ok_or(CoreError::Overflow("monomial power exponent"))?;
            return LcaPolynomial::monomial(self.p, exp, pow_mod(c, n, self.p));
        }
        if self.terms.len() == 2 {
            // (a σ^g + b σ^h)^N = Σ_{k ∈ Λ(N)} C(N,k) a^{N−k} b^k σ^{g(N−k)+hk}
            let mut it = self.terms.iter();
            let (&g, &a) = it.next().unwrap();
            let (&h, &b) = it.next().unwrap();
            let lam = lucas_set(n, self.p)?;
            let mut terms = Vec::with_capacity(lam.elements.len());
            for &k in &lam.elements {
                let binom = crate::lucas::lucas_binomial(n, k, self.p)?;
                let coeff = binom * pow_mod(a, n - k, self.p) % self.p * pow_mod(b, k, self.p)
                    % self.p;
                let exp = g
                    .checked_mul((n - k) as i64)
                    .and_then(|x| h.checked_mul(k as i64).and_then(|y| x.checked_add(y)))
                    .ok_or(CoreError::Overflow("binomial power exponent"))?;
                terms.push((exp, coeff));
            }
            return LcaPolynomial::new(self.p, terms);
        }
        // general case: square-and-multiply in the polynomial ring
        let mut base = self.clone();
        let mut n = n;
        let mut acc = LcaPolynomial::one(self.p);
        loop {
            if n & 1 == 1 {
                acc = acc.multiply(&base)?;
            }
            n >>= 1;
            if n == 0 {
                break;
            }
            base = base.multiply(&base)?;
        }
        Ok(acc)
    }

    /// S-rank: the number of mutually S-separated pieces the support splits
    /// into. In one dimension a single sorted scan is exact: a split is
    /// valid iff the adjacent gap across it is ≥ S.
    pub fn s_rank(&self, s: u64) -> usize {
        s_rank_of_sites(&self.exponents(), s)
    }

    /// Applies Φ to a finite window: out_m = Σ_f φ_f·a_{m+f} componentwise
    /// mod p. The valid output range is the input range eroded by the
    /// exponent span; there is never any wraparound.
    pub fn apply(&self, input: &Config) -> Result<Config> {
        if self.p != input.p {
            return Err(CoreError::ModulusMismatch {
                left: self.p,
                right: input.p,
            });
        }
        let len = input.len() as i64;
        if len <= self.diam() as i64 {
            return Err(CoreError::InvalidArgument(format!(
                "window of {} sites is too short for an automaton of diameter {}",
                input.len(),
                self.diam()
            )));
        }
        let out_offset = input.offset - self.min_exponent();
        let out_len = (len - self.diam() as i64) as usize;
        let s = input.s;
        let mut cells = alloc::vec![0u8; out_len * s];
        for m in 0..out_len {
            let site_out = out_offset + m as i64;
            for (&f, &c) in &self.terms {
                let site_in = site_out + f;
                let idx = (site_in - input.offset) as usize * s;
                for comp in 0..s {
                    let v = cells[m * s + comp] as u64 + c * input.cells[idx + comp] as u64;
                    cells[m * s + comp] = (v % self.p) as u8;
                }
            }
        }
        Ok(Config {
            p: input.p,
            s,
            offset: out_offset,
            cells,
        })
    }

    /// Parses the CLI syntax `1+x^5+x^6+x^11`, with optional coefficients
    /// (`2x^3`) and negative exponents (`x^-2`). Errors carry the byte
    /// position of the offending token.
    pub fn parse(text: &str, p: u64) -> Result<LcaPolynomial> {
        check_prime(p)?;
        let bytes = text.as_bytes();
        let mut pos = 0usize;
        let mut terms: Vec<(i64, u64)> = Vec::new();
        let err = |pos: usize, msg: &str| CoreError::Parse {
            pos,
            msg: msg.into(),
        };
        loop {
            while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
                pos += 1;
            }
            if pos >= bytes.len() {
                return Err(err(pos, "expected a term"));
            }
            let start = pos;
            let mut coeff: Option<u64> = None;
            if bytes[pos].is_ascii_digit() {
                let mut v: u64 = 0;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    v = v * 10 + (bytes[pos] - b'0') as u64;
                    pos += 1;
                }
                coeff = Some(v);
            }
            let mut exp: i64 = 0;
            if pos < bytes.len() && (bytes[pos] == b'x' || bytes[pos] == b'X') {
                pos += 1;
                exp = 1;
                if pos < bytes.len() && bytes[pos] == b'^' {
                    pos += 1;
                    let neg = if pos < bytes.len() && bytes[pos] == b'-' {
                        pos += 1;
                        true
                    } else {
                        false
                    };
                    if pos >= bytes.len() || !bytes[pos].is_ascii_digit() {
                        return Err(err(pos, "expected an exponent"));
                    }
                    let mut v: i64 = 0;
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        v = v * 10 + (bytes[pos] - b'0') as i64;
                        pos += 1;
                    }
                    exp = if neg { -v } else { v };
                }
            } else if coeff.is_none() {
                return Err(err(start, "expected a coefficient or 'x'"));
            }
            terms.push((exp, coeff.unwrap_or(1)));
            while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
                pos += 1;
            }
            if pos >= bytes.len() {
                break;
            }
            if bytes[pos] != b'+' {
                return Err(err(pos, "expected '+' between terms"));
            }
            pos += 1;
        }
        LcaPolynomial::new(p, terms)
    }
}

impl fmt::Display for LcaPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (&e, &c) in &self.terms {
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match (e, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, c) => write!(f, "{c}x")?,
                (e, 1) => write!(f, "x^{e}")?,
                (e, c) => write!(f, "{c}x^{e}")?,
            }
        }
        Ok(())
    }
}

/// c^k mod p, reducing the exponent by Fermat.
fn pow_mod(c: u64, k: u64, p: u64) -> u64 {
    if c == 0 {
        return if k == 0 { 1 } else { 0 };
    }
    let k = if k >= p - 1 { k % (p - 1) } else { k };
    let mut acc = 1u64;
    let mut base = c % p;
    let mut k = k;
    while k > 0 {
        if k & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        k >>= 1;
    }
    acc
}

/// S-rank of a sorted-or-not site list: one greedy sorted scan, splitting
/// wherever an adjacent gap is ≥ S.
pub fn s_rank_of_sites(sites: &[i64], s: u64) -> usize {
    if sites.is_empty() {
        return 0;
    }
    let mut sorted: Vec<i64> = sites.to_vec();
    sorted.sort_unstable();
    let mut rank = 1;
    for w in sorted.windows(2) {
        if (w[1] - w[0]) as u64 >= s {
            rank += 1;
        }
    }
    rank
}

/// K_p = min(1/2, (4p−7)/(4p+4)); K_2 = 1/12, K_3 = 5/16, 1/2 for p ≥ 5.
pub fn k_p(p: u64) -> Result<Frac> {
    check_prime(p)?;
    let p = p as i64;
    Ok(Frac::new(1, 2).min(Frac::new(4 * p - 7, 4 * p + 4)))
}

/// The factorization Φ = 1 + Γ∘σ^f with Γ centred and diam(Γ) ≤ K_p·|f|.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteForm {
    pub gamma: LcaPolynomial,
    pub shift_exp: i64,
    pub p: u64,
}

impl BipartiteForm {
    /// Re-expands to 1 + Γ·σ^f.
    pub fn expand(&self) -> Result<LcaPolynomial> {
        let shifted = self
            .gamma
            .multiply(&LcaPolynomial::monomial(self.p, self.shift_exp, 1)?)?;
        let mut terms: Vec<(i64, u64)> = shifted.terms().collect();
        terms.push((0, 1));
        LcaPolynomial::new(self.p, terms)
    }
}

/// Searches for a bipartite factorization of Φ. The constant term must be
/// exactly 1; candidate shifts f are the integers within distance 1 of the
/// centroid of the non-constant support (|centre(Γ)| < 1 fails anywhere
/// else), tried in order of |f − centroid| so the most centred witness is
/// returned.
pub fn classify_bipartite(phi: &LcaPolynomial) -> Option<BipartiteForm> {
    let p = phi.p();
    if phi.coeff(0) != 1 || phi.term_count() < 2 {
        return None;
    }
    let rest: Vec<(i64, u64)> = phi.terms().filter(|&(e, _)| e != 0).collect();
    let exps: Vec<i64> = rest.iter().map(|&(e, _)| e).collect();
    let centre = {
        let sum: i64 = exps.iter().sum();
        Frac::new(sum, exps.len() as i64)
    };
    let diam = (exps.iter().max().unwrap() - exps.iter().min().unwrap()) as u64;
    let kp = k_p(p).ok()?;
    // integers f with |centre − f| < 1, i.e. f > centre − 1
    let lo = (centre.num() - centre.den()).div_euclid(centre.den()) + 1;
    let mut candidates: Vec<i64> = (lo..=lo + 2)
        .filter(|&f| f != 0 && centre.sub_int(f).abs() < Frac::integer(1))
        .collect();
    candidates.sort_by(|&a, &b| {
        centre
            .sub_int(a)
            .abs()
            .cmp(&centre.sub_int(b).abs())
            .then(a.cmp(&b))
    });
    for f in candidates {
        // diam(Γ) = diam of the shifted support, unchanged by the shift
        if Frac::integer(diam as i64) <= Frac::new(kp.num() * f.abs(), kp.den()) {
            let gamma =
                LcaPolynomial::new(p, rest.iter().map(|&(e, c)| (e - f, c))).ok()?;
            debug_assert!(gamma.centre().abs() < Frac::integer(1));
            return Some(BipartiteForm {
                gamma,
                shift_exp: f,
                p,
            });
        }
    }
    None
}

/// For N ∈ 𝕁(S₀), the split N = M + p^r·H (M, S₀ < p^{r−1}) and the
/// reassembled power Φ^M ∘ Θ^H with Θ = Φ^{p^r}; equal to Φ^N.
pub fn lucas_power_split(
    form: &BipartiteForm,
    n: u64,
    s0: u64,
) -> Result<(u64, u32, u64, LcaPolynomial)> {
    let (m, r, h) = j_split(n, s0, form.p)?;
    let phi = form.expand()?;
    let pr = form
        .p
        .checked_pow(r)
        .ok_or(CoreError::Overflow("p^r in lucas_power_split"))?;
    let theta = phi.power_fast(pr)?;
    let assembled = phi.power_fast(m)?.multiply(&theta.power_fast(h)?)?;
    Ok((m, r, h, assembled))
}

/// A finite window of a configuration in ((ℤ/p)^s)^ℤ: `cells` holds s
/// components per site, sites `offset..offset+len`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    pub p: u64,
    pub s: usize,
    pub offset: i64,
    pub cells: Vec<u8>,
}

impl Config {
    pub fn new(p: u64, s: usize, offset: i64, cells: Vec<u8>) -> Result<Config> {
        check_prime(p)?;
        if s == 0 || cells.len() % s != 0 {
            return Err(CoreError::InvalidArgument(
                "cell buffer must hold s components per site".into(),
            ));
        }
        if cells.iter().any(|&c| c as u64 >= p) {
            return Err(CoreError::InvalidArgument(
                "cell value out of range [0, p)".into(),
            ));
        }
        Ok(Config { p, s, offset, cells })
    }

    pub fn len(&self) -> usize {
        self.cells.len() / self.s
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Component vector at an absolute site.
    pub fn site(&self, site: i64) -> Option<&[u8]> {
        if site < self.offset || site >= self.offset + self.len() as i64 {
            return None;
        }
        let idx = (site - self.offset) as usize * self.s;
        Some(&self.cells[idx..idx + self.s])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn poly(p: u64, text: &str) -> LcaPolynomial {
        LcaPolynomial::parse(text, p).unwrap()
    }

    #[test]
    fn multiply_examples() {
        let p2 = poly(2, "1+x");
        let one = LcaPolynomial::one(2);
        assert_eq!(p2.multiply(&one).unwrap(), p2);
        assert_eq!(p2.multiply(&p2).unwrap(), poly(2, "1+x^2"));
        assert_eq!(p2.multiply(&poly(2, "1+x+x^2")).unwrap(), poly(2, "1+x^3"));
        assert!(poly(2, "1+x").multiply(&poly(3, "1+x")).is_err());
    }

    #[test]
    fn powers() {
        let p = poly(2, "1+x");
        assert!(p.power_naive(0).unwrap().is_one());
        assert_eq!(p.power_naive(4).unwrap(), poly(2, "1+x^4"));
        assert_eq!(p.power_fast(4).unwrap(), poly(2, "1+x^4"));
        // support of (1+x)^53 over p=2 is Λ(53)
        let p53 = p.power_fast(53).unwrap();
        let lam = lucas_set(53, 2).unwrap().elements;
        assert_eq!(
            p53.exponents(),
            lam.iter().map(|&e| e as i64).collect::<Vec<_>>()
        );
        // general (three-term) path agrees with naive
        let q = poly(3, "1+x+x^2");
        assert_eq!(q.power_fast(27).unwrap(), q.power_naive(27).unwrap());
    }

    #[test]
    fn geometry() {
        let p = poly(2, "1+x");
        assert_eq!(p.diam(), 1);
        assert_eq!(p.centre(), Frac::new(1, 2));
        let q = LcaPolynomial::new(3, [(-2, 1), (3, 1)]).unwrap();
        assert_eq!(q.diam(), 5);
        assert_eq!(q.centre(), Frac::new(1, 2));
        let m = LcaPolynomial::monomial(5, 7, 2).unwrap();
        assert_eq!(m.diam(), 0);
        assert_eq!(m.centre(), Frac::integer(7));
    }

    #[test]
    fn k_p_values() {
        assert_eq!(k_p(2).unwrap(), Frac::new(1, 12));
        assert_eq!(k_p(3).unwrap(), Frac::new(5, 16));
        assert_eq!(k_p(5).unwrap(), Frac::new(1, 2));
        assert_eq!(k_p(7).unwrap(), Frac::new(1, 2));
    }

    #[test]
    fn bipartite_table() {
        // 1 + (1+x)∘σ^12: bipartite for any prime
        for p in [2u64, 3, 5] {
            let form = classify_bipartite(&poly(p, "1+x^12+x^13")).unwrap();
            assert_eq!(form.shift_exp, 12);
            assert_eq!(form.gamma, poly(p, "1+x"));
            assert_eq!(form.expand().unwrap(), poly(p, "1+x^12+x^13"));
        }
        // 1+x^2+x^3: not bipartite for p ∈ {2,3}, bipartite for p ≥ 5
        assert!(classify_bipartite(&poly(2, "1+x^2+x^3")).is_none());
        assert!(classify_bipartite(&poly(3, "1+x^2+x^3")).is_none());
        assert!(classify_bipartite(&poly(5, "1+x^2+x^3")).is_some());
        // 1+x^14+x^19 = 1 + (x^-2+x^3)∘σ^16: p ≥ 3
        assert!(classify_bipartite(&poly(2, "1+x^14+x^19")).is_none());
        let f3 = classify_bipartite(&poly(3, "1+x^14+x^19")).unwrap();
        assert_eq!(f3.shift_exp, 16);
        assert_eq!(f3.gamma, LcaPolynomial::new(3, [(-2, 1), (3, 1)]).unwrap());
        // 1+x is bipartite for any prime
        for p in [2u64, 3, 5, 7] {
            let f = classify_bipartite(&poly(p, "1+x")).unwrap();
            assert_eq!(f.shift_exp, 1);
            assert!(f.gamma.is_one());
        }
    }

    #[test]
    fn s_rank_worked_example() {
        let phi = poly(2, "1+x^5+x^6+x^11+x^12+x^13");
        assert_eq!(phi.s_rank(4), 3);
        assert_eq!(phi.s_rank(1), 6);
        assert_eq!(phi.s_rank(7), 1);
    }

    #[test]
    fn power_split_53() {
        let form = classify_bipartite(&poly(2, "1+x")).unwrap();
        let (m, r, h, assembled) = lucas_power_split(&form, 53, 7).unwrap();
        assert_eq!((m, r, h), (5, 4, 3));
        assert_eq!(assembled, poly(2, "1+x").power_naive(53).unwrap());
        // N = p^r exactly: pure Frobenius step
        let (m, r, h, assembled) = lucas_power_split(&form, 16, 7).unwrap();
        assert_eq!((m, r, h), (0, 4, 1));
        assert_eq!(assembled, poly(2, "1+x^16"));
        // precondition failure names the digit condition
        let err = lucas_power_split(&form, 63, 7).unwrap_err();
        assert!(err.to_string().contains("J(7)"));
    }

    #[test]
    fn apply_windows() {
        let phi = poly(2, "1+x");
        let input = Config::new(2, 1, 0, vec![0, 1, 1, 0]).unwrap();
        let out = phi.apply(&input).unwrap();
        assert_eq!(out.offset, 0);
        assert_eq!(out.cells, vec![1, 0, 1]);
        // identity leaves the window unchanged
        let out = LcaPolynomial::one(2).apply(&input).unwrap();
        assert_eq!(out, input);
        // zeros map to zeros
        let z = Config::new(2, 1, -3, vec![0; 8]).unwrap();
        assert!(phi.apply(&z).unwrap().cells.iter().all(|&c| c == 0));
        // too-short window
        let tiny = Config::new(2, 1, 0, vec![1]).unwrap();
        assert!(phi.apply(&tiny).is_err());
    }

    #[test]
    fn parse_and_display() {
        let phi = poly(2, "1+x^5+x^6+x^11+x^12+x^13");
        assert_eq!(phi.to_string(), "1+x^5+x^6+x^11+x^12+x^13");
        let neg = LcaPolynomial::parse("x^-2+x^3", 3).unwrap();
        assert_eq!(neg.exponents(), vec![-2, 3]);
        assert_eq!(LcaPolynomial::parse(&neg.to_string(), 3).unwrap(), neg);
        let err = LcaPolynomial::parse("1+x^", 2).unwrap_err();
        assert!(matches!(err, CoreError::Parse { pos: 4, .. }));
        let err = LcaPolynomial::parse("1+*", 2).unwrap_err();
        assert!(matches!(err, CoreError::Parse { pos: 2, .. }));
        // coefficients reduce mod p; 2x^3 over p=2 vanishes
        assert!(LcaPolynomial::parse("2x^3", 2).is_err());
        assert_eq!(LcaPolynomial::parse("2x^3+x", 2).unwrap(), poly(2, "x"));
    }
}
