//! Exact evaluation of the counting formulas: necklace counts over words,
//! rotation-class counts over patterns, pattern counts, bounds for the
//! longest chordless path, extremal free-word lengths, and an
//! inclusion-exclusion identity used as a self-check.
//!
//! Everything here is arbitrary-precision integer arithmetic; no floating
//! point is used anywhere in this module.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::json;

use crate::{Error, Result};

/// Which count a [`CountResult`] carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountKind {
    /// Minimum size of an unavoidable set of words of length `n`.
    Mw,
    /// Number of conjugacy classes of patterns of length `n` over `[m]`.
    Tp,
    /// Minimum size of an unavoidable set of patterns; equals `Tp`.
    Mp,
    /// Number of patterns of length `n` over `[m]`.
    PatternCount,
    /// Upper bound for the longest chordless path in the pattern graph.
    CpUpper,
    /// Lower bound for the longest chordless path in the pattern graph.
    CpLower,
    /// Maximum length of a free word over all unavoidable word sets.
    Lw,
    /// Maximum length of a free pattern word, binary alphabet.
    Lp2,
}

impl CountKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CountKind::Mw => "mw",
            CountKind::Tp => "tp",
            CountKind::Mp => "mp",
            CountKind::PatternCount => "pattern_count",
            CountKind::CpUpper => "cp_upper",
            CountKind::CpLower => "cp_lower",
            CountKind::Lw => "lw",
            CountKind::Lp2 => "lp2",
        }
    }
}

/// An exact count, tagged with the parameters it was computed for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountResult {
    pub kind: CountKind,
    pub n: usize,
    pub m: usize,
    pub value: BigUint,
}

impl CountResult {
    /// `{kind, n, m, value}` with the value rendered in decimal.
    pub fn to_json(&self) -> String {
        json!({
            "kind": self.kind.as_str(),
            "n": self.n,
            "m": self.m,
            "value": self.value.to_string(),
        })
        .to_string()
    }
}

/// Lower and upper bound, as computed by the printed formulas; the pair is
/// reported without reconciling the two sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundPair {
    pub lower: BigUint,
    pub upper: BigUint,
}

/// Both sides of the identity `pattern_count(n, m) = rhs`, where `rhs` is
/// the Moebius sum without the `1/i` normalization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub lhs: BigUint,
    pub rhs: BigInt,
    pub equal: bool,
}

/// Extremal free-word lengths for word sets (`lw`) and binary pattern sets
/// (`lp_binary`) at the given parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalLengths {
    pub n: usize,
    pub alphabet: usize,
    pub lw: BigUint,
    pub lp_binary: BigUint,
}

/// Free-word length from a known longest-chordless-path value:
/// `C + n - 1`.
pub fn lp_from_cp(cp: &BigUint, n: usize) -> BigUint {
    cp + BigUint::from(n - 1)
}

/// Moebius function: 0 on repeated prime factors, otherwise `(-1)^r` for
/// `r` distinct prime factors.
pub fn mobius(k: u64) -> Result<i8> {
    if k == 0 {
        return Err(Error::InvalidParams("mobius(0) undefined".into()));
    }
    let mut k = k;
    let mut distinct = 0u32;
    let mut p = 2u64;
    while p * p <= k {
        if k % p == 0 {
            k /= p;
            if k % p == 0 {
                return Ok(0);
            }
            distinct += 1;
        }
        p += 1;
    }
    if k > 1 {
        distinct += 1;
    }
    Ok(if distinct % 2 == 0 { 1 } else { -1 })
}

/// Euler totient, with `euler_phi(1) = 1`.
pub fn euler_phi(k: u64) -> Result<u64> {
    if k == 0 {
        return Err(Error::InvalidParams("euler_phi(0) undefined".into()));
    }
    let mut k = k;
    let mut phi = k;
    let mut p = 2u64;
    while p * p <= k {
        if k % p == 0 {
            phi -= phi / p;
            while k % p == 0 {
                k /= p;
            }
        }
        p += 1;
    }
    if k > 1 {
        phi -= phi / k;
    }
    Ok(phi)
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

fn check_params(n: usize, m: usize) -> Result<()> {
    if n == 0 || m == 0 {
        return Err(Error::InvalidParams(format!(
            "parameters must be >= 1 (got n={n}, m={m})"
        )));
    }
    Ok(())
}

fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut r = BigUint::one();
    for j in 0..k {
        r = r * BigUint::from(n - j) / BigUint::from(j + 1);
    }
    r
}

fn pow_big(base: usize, exp: u64) -> BigUint {
    BigUint::from(base).pow(exp as u32)
}

/// Number of rotation classes of words of length `n` over an alphabet of
/// size `a`: `(1/n) sum_{d|n} phi(n/d) a^d`.
pub fn mw_count(n: usize, a: usize) -> Result<CountResult> {
    check_params(n, a)?;
    let mut total = BigUint::zero();
    for d in divisors(n as u64) {
        total += BigUint::from(euler_phi(n as u64 / d)?) * pow_big(a, d);
    }
    let (q, r) = total.div_rem(&BigUint::from(n));
    debug_assert!(r.is_zero());
    Ok(CountResult {
        kind: CountKind::Mw,
        n,
        m: a,
        value: q,
    })
}

/// Number of rotation classes of *primitive* words of length `i` over an
/// alphabet of size `b`: `(1/i) sum_{d|i} mu(d) b^{i/d}`.
fn primitive_class_count(i: u64, b: usize) -> BigUint {
    let mut total = BigInt::zero();
    for d in divisors(i) {
        let term = BigInt::from(pow_big(b, i / d));
        match mobius(d).expect("d >= 1") {
            1 => total += term,
            -1 => total -= term,
            _ => {}
        }
    }
    let (q, r) = total.div_rem(&BigInt::from(i));
    debug_assert!(r.is_zero() && !q.is_negative());
    q.to_biguint().expect("count is non-negative")
}

/// Per-divisor summand shared by `tp_count`, `cp_bounds`, and
/// `identity_check`: the signed inclusion-exclusion sum over missing
/// letters, counting rotation classes of primitive patterns of length `i`.
fn primitive_pattern_classes(i: u64, m: usize) -> BigUint {
    let q = (i as usize).min(m);
    let mut total = BigInt::zero();
    for j in 0..q {
        let term = BigInt::from(binomial(q - 1, j) * primitive_class_count(i, q - j));
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    debug_assert!(!total.is_negative());
    total.to_biguint().expect("class count is non-negative")
}

/// Number of conjugacy classes of patterns of length `n` over `[m]`.
pub fn tp_count(n: usize, m: usize) -> Result<CountResult> {
    check_params(n, m)?;
    let mut total = BigUint::zero();
    for i in divisors(n as u64) {
        total += primitive_pattern_classes(i, m);
    }
    Ok(CountResult {
        kind: CountKind::Tp,
        n,
        m,
        value: total,
    })
}

/// Minimum size of an unavoidable set of patterns of length `n` over
/// `[m]`; numerically equal to [`tp_count`].
pub fn mp_count(n: usize, m: usize) -> Result<CountResult> {
    let tp = tp_count(n, m)?;
    Ok(CountResult {
        kind: CountKind::Mp,
        ..tp
    })
}

/// Number of surjections from an `n`-set onto an `i`-set, by
/// inclusion-exclusion.
fn surjection_count(n: usize, i: usize) -> BigUint {
    let mut total = BigInt::zero();
    for j in 0..=i {
        let term = BigInt::from(binomial(i, j) * pow_big(i - j, n as u64));
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    debug_assert!(!total.is_negative());
    total.to_biguint().expect("surjection count is non-negative")
}

/// The same value by direct iteration over compositions of `n` into `i`
/// positive parts, multiplying binomials along the way.
fn surjection_count_by_compositions(n: usize, i: usize) -> BigUint {
    fn rec(rem: usize, parts: usize, acc: BigUint, total: &mut BigUint) {
        if parts == 1 {
            *total += acc;
            return;
        }
        for a in 1..=(rem - (parts - 1)) {
            rec(rem - a, parts - 1, &acc * binomial(rem, a), total);
        }
    }
    let mut total = BigUint::zero();
    if i >= 1 && i <= n {
        rec(n, i, BigUint::one(), &mut total);
    }
    total
}

// The composition iteration is the literal multinomial sum; the surjection
// closed form takes over once the number of compositions gets large.
const COMPOSITION_CUTOFF: usize = 20;

fn pattern_count_value(n: usize, m: usize) -> BigUint {
    let top = n.min(m);
    (1..=top)
        .map(|i| {
            if n <= COMPOSITION_CUTOFF {
                surjection_count_by_compositions(n, i)
            } else {
                surjection_count(n, i)
            }
        })
        .sum()
}

/// Number of patterns of length `n` over `[m]`: the sum over `i` of
/// multinomial counts of compositions of `n` into `i` positive parts.
pub fn pattern_count(n: usize, m: usize) -> Result<CountResult> {
    check_params(n, m)?;
    Ok(CountResult {
        kind: CountKind::PatternCount,
        n,
        m,
        value: pattern_count_value(n, m),
    })
}

/// Bounds for the longest chordless loop-free path in the pattern-overlap
/// graph: the `(i-1)`-weighted class sum above, and the pattern count one
/// length down below.
pub fn cp_bounds(n: usize, m: usize) -> Result<BoundPair> {
    if n < 2 || m < 2 {
        return Err(Error::InvalidParams(format!(
            "bounds require n >= 2 and m >= 2 (got n={n}, m={m})"
        )));
    }
    let mut upper = BigUint::zero();
    for i in divisors(n as u64) {
        upper += BigUint::from(i - 1) * primitive_pattern_classes(i, m);
    }
    let lower = pattern_count_value(n - 1, m);
    Ok(BoundPair { lower, upper })
}

/// Extremal free-word lengths: `a^{n-1} + n - 2` for word sets and
/// `2^{n-1} + n - 2` for binary pattern sets.
pub fn extremal_lengths(n: usize, a: usize) -> Result<ExtremalLengths> {
    if n < 2 || a == 0 {
        return Err(Error::InvalidParams(format!(
            "lengths require n >= 2 and a >= 1 (got n={n}, a={a})"
        )));
    }
    let lw = pow_big(a, (n - 1) as u64) + BigUint::from(n - 2);
    let lp_binary = pow_big(2, (n - 1) as u64) + BigUint::from(n - 2);
    Ok(ExtremalLengths {
        n,
        alphabet: a,
        lw,
        lp_binary,
    })
}

/// Checks that the pattern count equals the Moebius/inclusion-exclusion
/// sum without the `1/i` factor. Both sides are computed independently.
pub fn identity_check(n: usize, m: usize) -> Result<IdentityCheck> {
    check_params(n, m)?;
    let lhs = pattern_count_value(n, m);
    let mut rhs = BigInt::zero();
    for i in divisors(n as u64) {
        let q = (i as usize).min(m);
        for j in 0..q {
            let mut inner = BigInt::zero();
            for d in divisors(i) {
                let term = BigInt::from(pow_big(q - j, i / d));
                match mobius(d)? {
                    1 => inner += term,
                    -1 => inner -= term,
                    _ => {}
                }
            }
            let term = BigInt::from(binomial(q - 1, j)) * inner;
            if j % 2 == 0 {
                rhs += term;
            } else {
                rhs -= term;
            }
        }
    }
    let equal = BigInt::from(lhs.clone()) == rhs;
    Ok(IdentityCheck { lhs, rhs, equal })
}

/// Small-integer view of a count when it fits in `u64`; handy for tests
/// and table printing.
pub fn to_u64(v: &BigUint) -> Option<u64> {
    v.to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words;
    use crate::{Limits, Params};

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn mobius_values() {
        assert_eq!(mobius(1).unwrap(), 1);
        assert_eq!(mobius(12).unwrap(), 0);
        assert_eq!(mobius(30).unwrap(), -1);
        assert_eq!(mobius(2).unwrap(), -1);
        assert_eq!(mobius(6).unwrap(), 1);
        assert!(mobius(0).is_err());
    }

    #[test]
    fn phi_values() {
        assert_eq!(euler_phi(6).unwrap(), 2);
        assert_eq!(euler_phi(2).unwrap(), 1);
        assert_eq!(euler_phi(1).unwrap(), 1);
        assert_eq!(euler_phi(10).unwrap(), 4);
        assert!(euler_phi(0).is_err());
    }

    #[test]
    fn mw_small_values() {
        assert_eq!(mw_count(2, 2).unwrap().value, big(3));
        assert_eq!(mw_count(9, 2).unwrap().value, big(60));
        assert_eq!(mw_count(10, 2).unwrap().value, big(108));
        assert_eq!(mw_count(1, 5).unwrap().value, big(5));
    }

    /// Brute-force rotation-class count over all words of [a]^n.
    fn necklace_oracle(n: usize, a: usize) -> u64 {
        use std::collections::BTreeSet;
        let mut canonicals = BTreeSet::new();
        let total = (a as u64).pow(n as u32);
        for code in 0..total {
            let mut letters = Vec::with_capacity(n);
            let mut c = code;
            for _ in 0..n {
                letters.push((c % a as u64 + 1) as u32);
                c /= a as u64;
            }
            let w = words::Word::new(letters).unwrap();
            let canon = (0..n).map(|k| w.rotated(k)).min().unwrap();
            canonicals.insert(canon);
        }
        canonicals.len() as u64
    }

    #[test]
    fn mw_matches_brute_force_rotation_classes() {
        for n in 1..=6 {
            for a in 1..=3 {
                assert_eq!(
                    mw_count(n, a).unwrap().value,
                    big(necklace_oracle(n, a)),
                    "n={n} a={a}"
                );
            }
        }
    }

    #[test]
    fn mw_asymptotic_window() {
        // exact check of 0.9 <= mw(n,2) * n / 2^n <= 1.1 for n = 16..20
        for n in 16u64..=20 {
            let mw = mw_count(n as usize, 2).unwrap().value;
            let scaled = mw * big(n) * big(10);
            let pow = BigUint::from(2u64).pow(n as u32);
            assert!(scaled >= &pow * big(9), "n={n} below window");
            assert!(scaled <= &pow * big(11), "n={n} above window");
        }
    }

    #[test]
    fn tp_small_values() {
        assert_eq!(tp_count(3, 3).unwrap().value, big(5));
        assert_eq!(tp_count(4, 3).unwrap().value, big(14));
        for n in 1..=6 {
            assert_eq!(tp_count(n, 1).unwrap().value, big(1), "n={n}");
        }
        assert_eq!(mp_count(3, 3).unwrap().value, big(5));
        assert_eq!(mp_count(3, 3).unwrap().kind, CountKind::Mp);
    }

    #[test]
    fn tp_inert_beyond_n() {
        for n in 1..=7 {
            for m in n..=(n + 3) {
                assert_eq!(
                    tp_count(n, m).unwrap().value,
                    tp_count(n, n).unwrap().value,
                    "n={n} m={m}"
                );
            }
        }
    }

    #[test]
    fn tp_matches_class_grouping() {
        let lim = Limits::default();
        for n in 1..=6 {
            for m in 1..=4 {
                let classes =
                    words::pattern_conjugacy_classes(Params::new(n, m).unwrap(), &lim).unwrap();
                assert_eq!(tp_count(n, m).unwrap().value, big(classes.len() as u64));
            }
        }
    }

    #[test]
    fn pattern_count_small_values() {
        assert_eq!(pattern_count(3, 3).unwrap().value, big(13));
        assert_eq!(pattern_count(4, 3).unwrap().value, big(51));
        for n in 1..=6 {
            assert_eq!(pattern_count(n, 1).unwrap().value, big(1));
        }
    }

    #[test]
    fn composition_and_surjection_paths_agree() {
        for n in 1..=20 {
            for i in 1..=n.min(6) {
                assert_eq!(
                    surjection_count_by_compositions(n, i),
                    surjection_count(n, i),
                    "n={n} i={i}"
                );
            }
        }
    }

    #[test]
    fn bounds_small_values() {
        let b = cp_bounds(3, 2).unwrap();
        assert_eq!((b.lower, b.upper), (big(3), big(4)));
        let b = cp_bounds(3, 3).unwrap();
        assert_eq!(b.lower, big(3));
        assert!(cp_bounds(1, 2).is_err());
    }

    #[test]
    fn binary_chordless_value_is_within_bounds() {
        // exact binary value 2^{n-1} - 1 sits inside the printed bounds,
        // allowing the lower bound to overshoot by one
        for n in 2..=8usize {
            let exact = BigUint::from(2u64).pow(n as u32 - 1) - big(1);
            let b = cp_bounds(n, 2).unwrap();
            assert!(b.lower <= &exact + big(1), "n={n}: lower {} vs exact {exact}", b.lower);
            assert!(exact <= b.upper, "n={n}: exact {exact} vs upper {}", b.upper);
        }
    }

    #[test]
    fn extremal_length_values() {
        let e = extremal_lengths(3, 2).unwrap();
        assert_eq!(e.lw, big(5));
        let e = extremal_lengths(4, 2).unwrap();
        assert_eq!(e.lp_binary, big(10));
        assert_eq!(lp_from_cp(&big(3), 3), big(5));
        assert!(extremal_lengths(1, 2).is_err());
    }

    #[test]
    fn identity_small_values() {
        let c = identity_check(3, 3).unwrap();
        assert!(c.equal);
        assert_eq!(c.lhs, big(13));
        assert_eq!(c.rhs, BigInt::from(13));
        for n in 1..=6 {
            assert!(identity_check(n, 1).unwrap().equal);
        }
        let c = identity_check(5, 4).unwrap();
        assert!(c.equal);
        assert_eq!(c.lhs, big(421));
    }

    #[test]
    fn json_record_shape() {
        let r = tp_count(3, 3).unwrap();
        assert_eq!(
            r.to_json(),
            r#"{"kind":"tp","m":3,"n":3,"value":"5"}"#
        );
    }
}
