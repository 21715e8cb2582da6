//! Characters of ((ℤ/p)^s)^ℤ as finite site → frequency-vector maps.
//! A character is χ(a) = Π_k ω^{u_k·a_k} with ω = exp(2πi/p); evaluation
//! stays in exact angle arithmetic (an integer mod p), and only the caller
//! converts to a complex number.

use crate::error::{CoreError, Result};
use crate::lucas::{check_prime, lucas_binomial, lucas_set};
use crate::poly::{s_rank_of_sites, Config, LcaPolynomial};
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// An exact point on the unit circle: ω^num with ω = exp(2πi/p).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Phase {
    pub num: u64,
    pub p: u64,
}

impl Phase {
    pub fn one(p: u64) -> Phase {
        Phase { num: 0, p }
    }

    pub fn is_one(&self) -> bool {
        self.num == 0
    }

    /// The angle as a fraction of a full turn.
    pub fn turns(&self) -> (u64, u64) {
        (self.num, self.p)
    }
}

/// χ = ⊗_k χ_k with each χ_k given by a nonzero frequency vector in
/// (ℤ/p)^s. The empty map is the trivial character.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    p: u64,
    s: usize,
    freqs: BTreeMap<i64, Vec<u8>>,
}

impl Character {
    pub fn new<I: IntoIterator<Item = (i64, Vec<u8>)>>(
        p: u64,
        s: usize,
        freqs: I,
    ) -> Result<Character> {
        check_prime(p)?;
        if s == 0 {
            return Err(CoreError::InvalidArgument("s must be ≥ 1".into()));
        }
        let mut map = BTreeMap::new();
        for (site, mut u) in freqs {
            if u.len() != s {
                return Err(CoreError::InvalidArgument(
                    "frequency vector has wrong number of components".into(),
                ));
            }
            for c in u.iter_mut() {
                *c = (*c as u64 % p) as u8;
            }
            if u.iter().all(|&c| c == 0) {
                continue; // trivial factor, not stored
            }
            if map.insert(site, u).is_some() {
                return Err(CoreError::InvalidArgument(
                    "duplicate site in character".into(),
                ));
            }
        }
        Ok(Character { p, s, freqs: map })
    }

    pub fn trivial(p: u64, s: usize) -> Character {
        Character {
            p,
            s,
            freqs: BTreeMap::new(),
        }
    }

    /// Single-frequency character: all listed sites carry frequency 1
    /// (the parity character when p = 2, s = 1).
    pub fn unit_freq_at(p: u64, sites: &[i64]) -> Result<Character> {
        Character::new(p, 1, sites.iter().map(|&k| (k, alloc::vec![1u8])))
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn is_trivial(&self) -> bool {
        self.freqs.is_empty()
    }

    pub fn freqs(&self) -> impl Iterator<Item = (i64, &[u8])> + '_ {
        self.freqs.iter().map(|(&k, u)| (k, u.as_slice()))
    }

    pub fn sites(&self) -> Vec<i64> {
        self.freqs.keys().copied().collect()
    }

    /// Cardinality of the support.
    pub fn rank(&self) -> usize {
        self.freqs.len()
    }

    pub fn min_site(&self) -> Option<i64> {
        self.freqs.keys().next().copied()
    }

    pub fn max_site(&self) -> Option<i64> {
        self.freqs.keys().next_back().copied()
    }

    /// max site − min site; undefined for the trivial character.
    pub fn diam(&self) -> Result<u64> {
        if self.is_trivial() {
            return Err(CoreError::UndefinedInput("diam of the trivial character"));
        }
        Ok((self.max_site().unwrap() - self.min_site().unwrap()) as u64)
    }

    /// S-rank of the support; rank(χ) = s_rank(χ, 1).
    pub fn s_rank(&self, s_sep: u64) -> Result<usize> {
        if self.is_trivial() {
            return Err(CoreError::UndefinedInput("S-rank of the trivial character"));
        }
        Ok(s_rank_of_sites(&self.sites(), s_sep))
    }

    /// Exact evaluation on a window covering the support: the angle index
    /// Σ_k u_k·a_k mod p.
    pub fn evaluate(&self, window: &Config) -> Result<Phase> {
        if window.p != self.p || window.s != self.s {
            return Err(CoreError::InvalidArgument(
                "window and character live over different groups".into(),
            ));
        }
        let mut num: u64 = 0;
        for (&site, u) in &self.freqs {
            let a = window.site(site).ok_or_else(|| {
                CoreError::InvalidArgument(alloc::format!(
                    "window [{}, {}) does not cover character site {site}",
                    window.offset,
                    window.offset + window.len() as i64
                ))
            })?;
            for (uc, ac) in u.iter().zip(a) {
                num = (num + *uc as u64 * *ac as u64) % self.p;
            }
        }
        Ok(Phase { num, p: self.p })
    }

    /// χ∘Φ as a character: v_m = Σ_f φ_f·u_{m−f} mod p, zero vectors
    /// dropped. The orientation matches `LcaPolynomial::apply`, so that
    /// evaluate(pullback(χ,Φ), a) == evaluate(χ, apply(Φ, a)).
    pub fn pullback(&self, phi: &LcaPolynomial) -> Result<Character> {
        if phi.p() != self.p {
            return Err(CoreError::ModulusMismatch {
                left: self.p,
                right: phi.p(),
            });
        }
        let mut acc: BTreeMap<i64, Vec<u64>> = BTreeMap::new();
        for (k, u) in &self.freqs {
            for (f, c) in phi.terms() {
                let m = k
                    .checked_sub(f)
                    .ok_or(CoreError::Overflow("pullback site"))?;
                let entry = acc.entry(m).or_insert_with(|| alloc::vec![0u64; self.s]);
                for (comp, &uc) in u.iter().enumerate() {
                    entry[comp] = (entry[comp] + c * uc as u64) % self.p;
                }
            }
        }
        Character::new(
            self.p,
            self.s,
            acc.into_iter()
                .map(|(m, v)| (m, v.into_iter().map(|c| c as u8).collect::<Vec<u8>>())),
        )
    }

    /// The dilation stride: the least power p^r strictly exceeding diam(χ),
    /// so translated supports 𝕂 + p^r·ℓ are pairwise disjoint.
    pub fn ldm(&self) -> Result<u64> {
        let d = self.diam()?;
        let mut power: u64 = 1;
        while power <= d {
            power = power
                .checked_mul(self.p)
                .ok_or(CoreError::Overflow("ldm"))?;
        }
        Ok(power)
    }

    /// χ^[h]: the product over ℓ ∈ Λ(h) of χ translated by ldm(χ)·ℓ with
    /// frequencies scaled by the Lucas binomial of (h, ℓ). Equals the
    /// pull-back of χ through (1 + σ^{ldm(χ)})^h.
    pub fn dilate(&self, h: u64) -> Result<Character> {
        let stride = self.ldm()?;
        let lam = lucas_set(h, self.p)?;
        let mut freqs: Vec<(i64, Vec<u8>)> = Vec::new();
        for &ell in &lam.elements {
            let scale = lucas_binomial(h, ell, self.p)?;
            let shift = (stride as i64)
                .checked_mul(ell as i64)
                .ok_or(CoreError::Overflow("dilation shift"))?;
            for (&k, u) in &self.freqs {
                let site = k
                    .checked_add(shift)
                    .ok_or(CoreError::Overflow("dilation site"))?;
                let v: Vec<u8> = u
                    .iter()
                    .map(|&c| (c as u64 * scale % self.p) as u8)
                    .collect();
                freqs.push((site, v));
            }
        }
        Character::new(self.p, self.s, freqs)
    }

    /// Parses the CLI grammar: `sites=0,5,6 freqs=1,1,1` for s = 1, or
    /// `sites=0,1 freqs=(1|0),(2|1)` for s = 2. `trivial` denotes the
    /// trivial character.
    pub fn parse(text: &str, p: u64, s: usize) -> Result<Character> {
        check_prime(p)?;
        let text = text.trim();
        if text == "trivial" {
            return Ok(Character::trivial(p, s));
        }
        let mut sites: Option<Vec<i64>> = None;
        let mut freqs: Option<Vec<Vec<u8>>> = None;
        for part in text.split_whitespace() {
            let pos = part.as_ptr() as usize - text.as_ptr() as usize;
            if let Some(rest) = part.strip_prefix("sites=") {
                let mut v = Vec::new();
                for tok in rest.split(',') {
                    v.push(tok.parse::<i64>().map_err(|_| CoreError::Parse {
                        pos,
                        msg: alloc::format!("bad site '{tok}'"),
                    })?);
                }
                sites = Some(v);
            } else if let Some(rest) = part.strip_prefix("freqs=") {
                let mut v = Vec::new();
                for tok in rest.split(',') {
                    let tok = tok.trim();
                    let comps: Vec<&str> = if tok.starts_with('(') && tok.ends_with(')') {
                        tok[1..tok.len() - 1].split('|').collect()
                    } else {
                        alloc::vec![tok]
                    };
                    let mut u = Vec::new();
                    for c in comps {
                        u.push(c.parse::<u8>().map_err(|_| CoreError::Parse {
                            pos,
                            msg: alloc::format!("bad frequency '{c}'"),
                        })?);
                    }
                    v.push(u);
                }
                freqs = Some(v);
            } else {
                return Err(CoreError::Parse {
                    pos,
                    msg: String::from("expected sites=... or freqs=..."),
                });
            }
        }
        let sites = sites.ok_or(CoreError::Parse {
            pos: 0,
            msg: String::from("missing sites=..."),
        })?;
        let freqs = freqs.ok_or(CoreError::Parse {
            pos: 0,
            msg: String::from("missing freqs=..."),
        })?;
        if sites.len() != freqs.len() {
            return Err(CoreError::Parse {
                pos: 0,
                msg: String::from("sites and freqs have different lengths"),
            });
        }
        for u in &freqs {
            if u.len() != s {
                return Err(CoreError::Parse {
                    pos: 0,
                    msg: alloc::format!("each frequency needs {s} components"),
                });
            }
        }
        Character::new(p, s, sites.into_iter().zip(freqs))
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "trivial");
        }
        write!(f, "sites=")?;
        for (i, k) in self.freqs.keys().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{k}")?;
        }
        write!(f, " freqs=")?;
        for (i, u) in self.freqs.values().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if self.s == 1 {
                write!(f, "{}", u[0])?;
            } else {
                write!(f, "(")?;
                for (j, c) in u.iter().enumerate() {
                    if j > 0 {
                        write!(f, "|")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ")")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    #[test]
    fn evaluate_basics() {
        let trivial = Character::trivial(2, 1);
        let w = Config::new(2, 1, -1, vec![1, 0, 1]).unwrap();
        assert!(trivial.evaluate(&w).unwrap().is_one());

        let parity0 = Character::unit_freq_at(2, &[0]).unwrap();
        let w = Config::new(2, 1, 0, vec![1]).unwrap();
        assert_eq!(parity0.evaluate(&w).unwrap(), Phase { num: 1, p: 2 });

        // p=3, u0=1, u1=2 on a=(1,1): 1+2 ≡ 0 mod 3
        let chi = Character::new(3, 1, [(0i64, vec![1u8]), (1, vec![2u8])]).unwrap();
        let w = Config::new(3, 1, 0, vec![1, 1]).unwrap();
        assert!(chi.evaluate(&w).unwrap().is_one());

        // window not covering the support
        let w = Config::new(3, 1, 1, vec![1]).unwrap();
        assert!(chi.evaluate(&w).is_err());
    }

    #[test]
    fn rank_and_diam() {
        let chi = Character::unit_freq_at(2, &[0, 5, 6, 11, 12, 13]).unwrap();
        assert_eq!(chi.s_rank(4).unwrap(), 3);
        assert_eq!(chi.rank(), 6);
        assert_eq!(chi.s_rank(1).unwrap(), chi.rank());
        let single = Character::unit_freq_at(2, &[3]).unwrap();
        assert_eq!(single.rank(), 1);
        assert_eq!(single.diam().unwrap(), 0);
        assert!(Character::trivial(2, 1).diam().is_err());
    }

    #[test]
    fn pullback_examples() {
        let phi = LcaPolynomial::parse("1+x", 2).unwrap();
        let trivial = Character::trivial(2, 1);
        assert!(trivial.pullback(&phi).unwrap().is_trivial());

        let parity0 = Character::unit_freq_at(2, &[0]).unwrap();
        let pulled = parity0.pullback(&phi).unwrap();
        assert_eq!(pulled, Character::unit_freq_at(2, &[0, 1]).unwrap());
    }

    #[test]
    fn evaluation_consistency_exhaustive() {
        // all 4-site binary windows, Φ = 1+σ, χ = parity at {0,1}
        let phi = LcaPolynomial::parse("1+x", 2).unwrap();
        let chi = Character::unit_freq_at(2, &[0, 1]).unwrap();
        let pulled = chi.pullback(&phi).unwrap();
        for bits in 0..16u8 {
            let cells: Vec<u8> = (0..4).map(|i| (bits >> i) & 1).collect();
            let w = Config::new(2, 1, 0, cells).unwrap();
            let lhs = pulled.evaluate(&w).unwrap();
            let rhs = chi.evaluate(&phi.apply(&w).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn ldm_values() {
        let single = Character::unit_freq_at(2, &[7]).unwrap();
        assert_eq!(single.ldm().unwrap(), 1);
        let pair = Character::unit_freq_at(2, &[0, 1]).unwrap();
        assert_eq!(pair.ldm().unwrap(), 2);
        let wide = Character::unit_freq_at(2, &[0, 4]).unwrap();
        assert_eq!(wide.ldm().unwrap(), 8);
        // exact power of p: strictness matters
        let exact = Character::unit_freq_at(2, &[0, 2]).unwrap();
        assert_eq!(exact.ldm().unwrap(), 4);
    }

    #[test]
    fn dilation() {
        let parity0 = Character::unit_freq_at(2, &[0]).unwrap();
        assert_eq!(parity0.dilate(0).unwrap(), parity0);
        assert_eq!(
            parity0.dilate(1).unwrap(),
            Character::unit_freq_at(2, &[0, 1]).unwrap()
        );
        assert_eq!(
            parity0.dilate(3).unwrap(),
            Character::unit_freq_at(2, &[0, 1, 2, 3]).unwrap()
        );
        // dilation equals pull-back through (1+σ^{ldm})^h
        let chi = Character::unit_freq_at(2, &[0, 1]).unwrap();
        for h in [0u64, 1, 2, 3, 5, 12] {
            let stride = chi.ldm().unwrap();
            let phi = LcaPolynomial::new(2, [(0, 1), (stride as i64, 1)]).unwrap();
            let via_pullback = chi.pullback(&phi.power_fast(h).unwrap()).unwrap();
            assert_eq!(chi.dilate(h).unwrap(), via_pullback);
        }
    }

    #[test]
    fn parse_round_trip() {
        let chi = Character::parse("sites=0,5,6 freqs=1,1,1", 2, 1).unwrap();
        assert_eq!(chi, Character::unit_freq_at(2, &[0, 5, 6]).unwrap());
        assert_eq!(Character::parse(&chi.to_string(), 2, 1).unwrap(), chi);

        let chi2 = Character::parse("sites=0,1 freqs=(1|0),(2|1)", 3, 2).unwrap();
        assert_eq!(chi2.rank(), 2);
        assert_eq!(Character::parse(&chi2.to_string(), 3, 2).unwrap(), chi2);

        assert!(Character::parse("sites=0 freqs=1,1", 2, 1).is_err());
        assert!(Character::parse("nonsense", 2, 1).is_err());
        assert!(Character::parse("trivial", 5, 1).unwrap().is_trivial());
    }
}
