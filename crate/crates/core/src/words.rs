//! Words over the ordered alphabet `[m] = {1, ..., m}`: the pattern
//! predicate, conjugacy classes under cyclic shift, primitive roots, and
//! exhaustive pattern enumeration.
//!
//! A word is a pattern when its letter set is exactly `{1, ..., k}` for
//! `k` the maximum letter. Since a pattern of length `n` cannot use a
//! letter above `n`, pattern enumeration works over the effective alphabet
//! `[min(n, m)]`.

use std::collections::BTreeMap;
use std::fmt;

use crate::{Error, Limits, Result};

/// A single letter; always `>= 1`.
pub type Letter = u32;

/// A finite sequence of letters from `[m]`.
///
/// Ordering is lexicographic on the letter sequence. The empty word is a
/// valid value; operations that require nonemptiness say so.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    /// Builds a word, rejecting the letter 0.
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if letters.iter().any(|&a| a == 0) {
            return Err(Error::ZeroLetter);
        }
        Ok(Word(letters))
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_letter(&self) -> Option<Letter> {
        self.0.iter().copied().max()
    }

    /// Cyclic left rotation by `k` positions.
    pub fn rotated(&self, k: usize) -> Word {
        if self.0.is_empty() {
            return self.clone();
        }
        let k = k % self.0.len();
        let mut v = Vec::with_capacity(self.0.len());
        v.extend_from_slice(&self.0[k..]);
        v.extend_from_slice(&self.0[..k]);
        Word(v)
    }

    /// The word repeated `e` times.
    pub fn repeated(&self, e: usize) -> Word {
        Word(self.0.repeat(e))
    }

    /// Whether `other` occurs as a contiguous subword. The empty word
    /// occurs in every word.
    pub fn contains_subword(&self, other: &Word) -> bool {
        if other.is_empty() {
            return true;
        }
        if other.len() > self.len() {
            return false;
        }
        self.0.windows(other.len()).any(|w| w == other.letters())
    }

    /// True iff the letters occurring in the word are exactly `{1..k}` for
    /// `k` the maximum letter. The empty word is a pattern (`k = 0`).
    pub fn is_pattern(&self) -> bool {
        let k = match self.max_letter() {
            None => return true,
            Some(k) => k as usize,
        };
        if k > self.len() {
            return false;
        }
        let mut seen = vec![false; k];
        for &a in &self.0 {
            seen[(a - 1) as usize] = true;
        }
        seen.into_iter().all(|s| s)
    }

    /// True iff every contiguous window of length `n` is a pattern. Words
    /// shorter than `n` qualify iff they are themselves patterns.
    pub fn is_n_pattern_word(&self, n: usize) -> Result<bool> {
        if n == 0 {
            return Err(Error::InvalidParams("window length must be >= 1".into()));
        }
        if self.len() < n {
            return Ok(self.is_pattern());
        }
        Ok(self
            .0
            .windows(n)
            .all(|w| Word(w.to_vec()).is_pattern()))
    }

    /// Parses the word text format: a digit string (`"1213"`), or
    /// comma-separated integers (`"1,12,3"`) for alphabets past 9. Letters
    /// must lie in `1..=m`.
    pub fn parse(s: &str, m: usize) -> Result<Word> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::EmptyWord);
        }
        let letters: Vec<Letter> = if s.contains(',') {
            s.split(',')
                .map(|part| {
                    part.trim()
                        .parse::<Letter>()
                        .map_err(|_| Error::InvalidParams(format!("bad letter {part:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .ok_or_else(|| Error::InvalidParams(format!("bad letter {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        for &a in &letters {
            if a == 0 {
                return Err(Error::ZeroLetter);
            }
            if a as usize > m {
                return Err(Error::LetterOutOfRange {
                    letter: a,
                    alphabet: m,
                });
            }
        }
        Ok(Word(letters))
    }

    /// Renders in the word text format for an alphabet of size `m`:
    /// digits when `m <= 9`, comma-separated otherwise.
    pub fn to_text(&self, m: usize) -> String {
        if m <= 9 {
            self.0.iter().map(|a| a.to_string()).collect()
        } else {
            self.0
                .iter()
                .map(|a| a.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.max_letter().map_or(false, |k| k > 9);
        write!(f, "{}", self.to_text(if wide { 10 } else { 9 }))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Validated `(n, m)` parameters for pattern enumeration and graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Params {
    pub n: usize,
    pub m: usize,
}

impl Params {
    pub fn new(n: usize, m: usize) -> Result<Self> {
        if n == 0 || m == 0 {
            return Err(Error::InvalidParams(format!(
                "n and m must be >= 1 (got n={n}, m={m})"
            )));
        }
        Ok(Params { n, m })
    }

    /// A pattern of length `n` never uses a letter above `n`, so
    /// enumeration restricts to this alphabet size.
    pub fn effective_m(&self) -> usize {
        self.n.min(self.m)
    }
}

/// A conjugacy class: the orbit of a word under cyclic rotation.
///
/// Members are stored sorted; the representative is the lexicographically
/// least rotation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    members: Vec<Word>,
}

impl ConjugacyClass {
    pub fn members(&self) -> &[Word] {
        &self.members
    }

    pub fn representative(&self) -> &Word {
        &self.members[0]
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.members.binary_search(w).is_ok()
    }
}

/// A word written as `root^exponent` with `root` primitive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimitiveDecomposition {
    pub root: Word,
    pub exponent: usize,
}

/// All distinct rotations of `w`, sorted, with the least as representative.
pub fn conjugacy_class(w: &Word) -> Result<ConjugacyClass> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let mut members: Vec<Word> = (0..w.len()).map(|k| w.rotated(k)).collect();
    members.sort();
    members.dedup();
    Ok(ConjugacyClass { members })
}

/// The unique primitive root and exponent of a nonempty word.
pub fn primitive_decomposition(w: &Word) -> Result<PrimitiveDecomposition> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let n = w.len();
    for p in 1..=n {
        if n % p != 0 {
            continue;
        }
        let root = Word(w.letters()[..p].to_vec());
        if root.repeated(n / p) == *w {
            return Ok(PrimitiveDecomposition {
                root,
                exponent: n / p,
            });
        }
    }
    unreachable!("p = n always reproduces the word");
}

/// All patterns of length `p.n` over `[min(p.n, p.m)]`, in lexicographic
/// order with no duplicates.
pub fn enumerate_patterns(p: Params, limits: &Limits) -> Result<Vec<Word>> {
    let k = p.effective_m() as u32;
    let work = (k as usize)
        .checked_pow(p.n as u32)
        .ok_or(Error::VertexCapExceeded {
            required: usize::MAX,
            cap: limits.max_vertices,
        })?;
    if work > limits.max_vertices {
        return Err(Error::VertexCapExceeded {
            required: work,
            cap: limits.max_vertices,
        });
    }

    let mut out = Vec::new();
    let mut letters = vec![1u32; p.n];
    loop {
        let w = Word(letters.clone());
        if w.is_pattern() {
            out.push(w);
        }
        // lexicographic odometer over [k]^n
        let mut pos = p.n;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            if letters[pos] < k {
                letters[pos] += 1;
                for a in letters[pos + 1..].iter_mut() {
                    *a = 1;
                }
                break;
            }
        }
    }
}

/// Partition of `enumerate_patterns(p)` into conjugacy classes, ordered by
/// representative.
pub fn pattern_conjugacy_classes(p: Params, limits: &Limits) -> Result<Vec<ConjugacyClass>> {
    let patterns = enumerate_patterns(p, limits)?;
    let mut by_rep: BTreeMap<Word, ConjugacyClass> = BTreeMap::new();
    for w in &patterns {
        let class = conjugacy_class(w)?;
        by_rep.entry(class.representative().clone()).or_insert(class);
    }
    Ok(by_rep.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        Word::parse(s, 9).unwrap()
    }

    #[test]
    fn pattern_predicate() {
        assert!(w("1323").is_pattern());
        assert!(!w("2613").is_pattern());
        assert!(w("111").is_pattern());
        assert!(Word::empty().is_pattern());
        assert!(!w("2").is_pattern());
    }

    #[test]
    fn n_pattern_words() {
        assert!(w("1212").is_n_pattern_word(2).unwrap());
        assert!(!w("1213").is_n_pattern_word(2).unwrap());
        // a letter above the window length can never sit inside a pattern window
        assert!(!w("123").is_n_pattern_word(2).unwrap());
        // shorter than n: falls back to the pattern predicate
        assert!(w("12").is_n_pattern_word(5).unwrap());
        assert!(!w("13").is_n_pattern_word(5).unwrap());
        assert!(w("12").is_n_pattern_word(0).is_err());
    }

    #[test]
    fn conjugacy_classes_of_single_words() {
        let c = conjugacy_class(&w("112")).unwrap();
        assert_eq!(c.members(), &[w("112"), w("121"), w("211")]);
        assert_eq!(c.representative(), &w("112"));

        let c = conjugacy_class(&w("111")).unwrap();
        assert_eq!(c.members(), &[w("111")]);

        let c = conjugacy_class(&w("1212")).unwrap();
        assert_eq!(c.members(), &[w("1212"), w("2121")]);

        assert!(conjugacy_class(&Word::empty()).is_err());
    }

    #[test]
    fn primitive_roots() {
        let d = primitive_decomposition(&w("121212")).unwrap();
        assert_eq!((d.root, d.exponent), (w("12"), 3));

        let d = primitive_decomposition(&w("12121")).unwrap();
        assert_eq!((d.root.clone(), d.exponent), (w("12121"), 1));

        let d = primitive_decomposition(&w("1111")).unwrap();
        assert_eq!((d.root, d.exponent), (w("1"), 4));

        for s in ["121", "1221", "12121"] {
            assert_eq!(primitive_decomposition(&w(s)).unwrap().exponent, 1);
        }
        assert!(primitive_decomposition(&Word::empty()).is_err());
    }

    #[test]
    fn enumerate_small_patterns() {
        let lim = Limits::default();
        let p33 = enumerate_patterns(Params::new(3, 3).unwrap(), &lim).unwrap();
        assert_eq!(p33.len(), 13);
        let expected: Vec<Word> = [
            "111", "112", "121", "122", "123", "132", "211", "212", "213", "221", "231", "312",
            "321",
        ]
        .iter()
        .map(|s| w(s))
        .collect();
        assert_eq!(p33, expected);

        assert_eq!(
            enumerate_patterns(Params::new(1, 1).unwrap(), &lim).unwrap(),
            vec![w("1")]
        );
    }

    /// Independent evaluation of the composition-sum count
    /// sum_{i=1..min(n,m)} sum_{a_1+..+a_i=n, a_j>=1} n!/(a_1!..a_i!),
    /// kept separate from the formulas module on purpose.
    fn composition_sum_oracle(n: usize, m: usize) -> u64 {
        fn binom(n: usize, k: usize) -> u64 {
            let mut r = 1u64;
            for j in 0..k.min(n - k) {
                r = r * (n - j) as u64 / (j + 1) as u64;
            }
            r
        }
        // number of surjections [n] -> [parts] by direct composition sum
        fn surjections(rem: usize, parts: usize, acc: u64) -> u64 {
            if parts == 1 {
                return acc;
            }
            let mut total = 0;
            for a in 1..=(rem - (parts - 1)) {
                total += surjections(rem - a, parts - 1, acc * binom(rem, a));
            }
            total
        }
        (1..=n.min(m)).map(|i| surjections(n, i, 1)).sum()
    }

    #[test]
    fn enumeration_cardinality_matches_composition_sum() {
        let lim = Limits::default();
        assert_eq!(composition_sum_oracle(4, 3), 51);
        let p43 = enumerate_patterns(Params::new(4, 3).unwrap(), &lim).unwrap();
        assert_eq!(p43.len(), 51);
        for n in 1..=6 {
            for m in 1..=4 {
                let got = enumerate_patterns(Params::new(n, m).unwrap(), &lim)
                    .unwrap()
                    .len() as u64;
                assert_eq!(got, composition_sum_oracle(n, m), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn class_partition_small() {
        let lim = Limits::default();
        let classes = pattern_conjugacy_classes(Params::new(3, 3).unwrap(), &lim).unwrap();
        assert_eq!(classes.len(), 5);

        let classes = pattern_conjugacy_classes(Params::new(2, 2).unwrap(), &lim).unwrap();
        assert_eq!(classes.len(), 2);
        assert_eq!(classes[0].members(), &[w("11")]);
        assert_eq!(classes[1].members(), &[w("12"), w("21")]);

        for n in 1..=5 {
            let classes = pattern_conjugacy_classes(Params::new(n, 1).unwrap(), &lim).unwrap();
            assert_eq!(classes.len(), 1);
        }
    }

    #[test]
    fn enumeration_insensitive_to_alphabet_beyond_n() {
        let lim = Limits::default();
        for n in 1..=5 {
            let narrow = enumerate_patterns(Params::new(n, n).unwrap(), &lim).unwrap();
            let wide = enumerate_patterns(Params::new(n, 9).unwrap(), &lim).unwrap();
            assert_eq!(narrow, wide);
        }
    }

    #[test]
    fn enumeration_cap() {
        let tiny = Limits {
            max_vertices: 10,
            ..Limits::default()
        };
        assert!(matches!(
            enumerate_patterns(Params::new(4, 3).unwrap(), &tiny),
            Err(Error::VertexCapExceeded { .. })
        ));
    }

    #[test]
    fn text_format_round_trips() {
        assert_eq!(w("1213").to_text(9), "1213");
        let wide = Word::parse("1,12,3", 12).unwrap();
        assert_eq!(wide.to_text(12), "1,12,3");
        assert_eq!(Word::parse("1,12,3", 12).unwrap(), wide);
        assert!(Word::parse("103", 9).is_err());
        assert!(Word::parse("14", 3).is_err());
        assert!(Word::parse("", 3).is_err());
    }

    proptest! {
        #[test]
        fn rotations_preserve_patternhood(letters in proptest::collection::vec(1u32..=4, 1..8)) {
            let word = Word::new(letters).unwrap();
            if word.is_pattern() {
                for k in 0..word.len() {
                    prop_assert!(word.rotated(k).is_pattern());
                }
            }
        }

        #[test]
        fn class_size_times_exponent_is_length(letters in proptest::collection::vec(1u32..=3, 1..10)) {
            let word = Word::new(letters).unwrap();
            let class = conjugacy_class(&word).unwrap();
            let dec = primitive_decomposition(&word).unwrap();
            prop_assert_eq!(class.size() * dec.exponent, word.len());
            // all members share the exponent
            for member in class.members() {
                prop_assert_eq!(primitive_decomposition(member).unwrap().exponent, dec.exponent);
            }
        }

        #[test]
        fn classes_partition_the_enumeration(n in 1usize..=5, m in 1usize..=4) {
            let lim = Limits::default();
            let p = Params::new(n, m).unwrap();
            let patterns = enumerate_patterns(p, &lim).unwrap();
            let classes = pattern_conjugacy_classes(p, &lim).unwrap();
            let mut collected: Vec<Word> = classes
                .iter()
                .flat_map(|c| c.members().iter().cloned())
                .collect();
            collected.sort();
            prop_assert_eq!(collected, patterns);
        }
    }
}
