//! Symbol-level string operations: reverse complement, overlap, prefix,
//! distance, merge, periodicity, and equivalence.
//!
//! The overlap of `s` and `t` is the length of the longest `y` with
//! `s = xy`, `t = yz` and `x`, `z` nonempty, so full-length matches never
//! count and the self-overlap of a string is its longest proper border.

use std::fmt;

use crate::alphabet::{Alphabet, Symbol};
use crate::error::{Error, Result};

/// A string as a sequence of symbol ids.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SymbolString(Vec<Symbol>);

impl SymbolString {
    pub fn new(symbols: Vec<Symbol>) -> Self {
        SymbolString(symbols)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Symbol] {
        &self.0
    }

    /// Checks every symbol id against the alphabet range.
    pub fn validate(&self, a: &Alphabet) -> Result<()> {
        for &s in &self.0 {
            if !a.contains(s) {
                return Err(Error::InvalidInput(format!(
                    "symbol id {s} outside alphabet of size {}",
                    a.size()
                )));
            }
        }
        Ok(())
    }

    /// Renders via the alphabet's glyphs, falling back to `<id>` notation.
    pub fn display(&self, a: &Alphabet) -> String {
        if a.has_glyphs() {
            self.0.iter().map(|&s| a.glyph(s).unwrap()).collect()
        } else {
            let ids: Vec<String> = self.0.iter().map(|s| s.to_string()).collect();
            format!("<{}>", ids.join("."))
        }
    }

    /// Parses a glyph line into a symbol string.
    pub fn parse(text: &str, a: &Alphabet) -> Result<Self> {
        let mut out = Vec::with_capacity(text.len());
        for ch in text.chars() {
            match a.symbol_of(ch) {
                Some(s) => out.push(s),
                None => {
                    return Err(Error::InvalidInput(format!(
                        "character {ch:?} is not a glyph of the alphabet"
                    )))
                }
            }
        }
        Ok(SymbolString(out))
    }
}

impl From<Vec<Symbol>> for SymbolString {
    fn from(v: Vec<Symbol>) -> Self {
        SymbolString(v)
    }
}

impl From<&[Symbol]> for SymbolString {
    fn from(v: &[Symbol]) -> Self {
        SymbolString(v.to_vec())
    }
}

impl fmt::Display for SymbolString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ids: Vec<String> = self.0.iter().map(|s| s.to_string()).collect();
        write!(f, "[{}]", ids.join(" "))
    }
}

/// Reverse complement: `rc(s)[i] = complement(s[n-1-i])`.
pub fn rc(s: &SymbolString, a: &Alphabet) -> Result<SymbolString> {
    s.validate(a)?;
    Ok(rc_unchecked(s, a))
}

pub(crate) fn rc_unchecked(s: &SymbolString, a: &Alphabet) -> SymbolString {
    SymbolString(s.as_slice().iter().rev().map(|&x| a.complement(x)).collect())
}

/// KMP prefix function: `pf[i]` = longest proper border of `s[..=i]`.
pub(crate) fn prefix_function(s: &[Symbol]) -> Vec<usize> {
    let n = s.len();
    let mut pf = vec![0usize; n];
    let mut k = 0;
    for i in 1..n {
        while k > 0 && s[k] != s[i] {
            k = pf[k - 1];
        }
        if s[k] == s[i] {
            k += 1;
        }
        pf[i] = k;
    }
    pf
}

/// Longest proper suffix of `s` that is a proper prefix of `t`.
pub(crate) fn overlap_len(s: &[Symbol], t: &[Symbol]) -> usize {
    let pf = prefix_function(t);
    let mut k = 0;
    for &c in s {
        while k > 0 && t[k] != c {
            k = pf[k - 1];
        }
        if t[k] == c {
            k += 1;
        }
        if k == t.len() {
            // t occurred in full; only proper prefixes count.
            k = pf[k - 1];
        }
    }
    if k == s.len() {
        // the whole of s matched; only proper suffixes count.
        k = pf[k - 1];
    }
    k
}

fn check_nonempty(s: &SymbolString, role: &str) -> Result<()> {
    if s.is_empty() {
        return Err(Error::InvalidInput(format!("{role} string is empty")));
    }
    Ok(())
}

/// Overlap `ov(s, t)`; `0 <= ov(s,t) <= min(|s|,|t|) - 1`.
pub fn overlap(s: &SymbolString, t: &SymbolString) -> Result<usize> {
    check_nonempty(s, "first")?;
    check_nonempty(t, "second")?;
    Ok(overlap_len(s.as_slice(), t.as_slice()))
}

/// Prefix of `s` with respect to `t`: the first `|s| - ov(s,t)` symbols.
pub fn prefix(s: &SymbolString, t: &SymbolString) -> Result<SymbolString> {
    let ov = overlap(s, t)?;
    Ok(SymbolString(s.as_slice()[..s.len() - ov].to_vec()))
}

/// Distance `dist(s, t) = |s| - ov(s, t) >= 1`.
pub fn dist(s: &SymbolString, t: &SymbolString) -> Result<usize> {
    Ok(s.len() - overlap(s, t)?)
}

/// Merge of an ordered list: `pref(x_1,x_2)...pref(x_{r-1},x_r) x_r`, the
/// shortest string containing the `x_i` as substrings in this order
/// (for substring-free input lists).
pub fn merge(xs: &[SymbolString]) -> Result<SymbolString> {
    if xs.is_empty() {
        return Err(Error::InvalidInput("merge of an empty list".into()));
    }
    let mut out: Vec<Symbol> = Vec::new();
    for w in xs.windows(2) {
        let p = prefix(&w[0], &w[1])?;
        out.extend_from_slice(p.as_slice());
    }
    check_nonempty(xs.last().unwrap(), "last")?;
    out.extend_from_slice(xs.last().unwrap().as_slice());
    Ok(SymbolString(out))
}

/// Period of `s`: `|s|` minus the longest proper border of `s`.
pub fn period(s: &SymbolString) -> Result<usize> {
    check_nonempty(s, "input")?;
    let pf = prefix_function(s.as_slice());
    Ok(s.len() - pf[s.len() - 1])
}

/// Shortest `x` with `s = x^i y`, `y` a (possibly empty) prefix of `x`.
pub fn factor(s: &SymbolString) -> Result<SymbolString> {
    let p = period(s)?;
    Ok(SymbolString(s.as_slice()[..p].to_vec()))
}

/// Substring search; true iff `needle` occurs in `hay`.
pub fn contains(hay: &SymbolString, needle: &SymbolString) -> bool {
    let (h, n) = (hay.as_slice(), needle.as_slice());
    if n.is_empty() {
        return true;
    }
    if n.len() > h.len() {
        return false;
    }
    let pf = prefix_function(n);
    let mut k = 0;
    for &c in h {
        while k > 0 && n[k] != c {
            k = pf[k - 1];
        }
        if n[k] == c {
            k += 1;
        }
        if k == n.len() {
            return true;
        }
    }
    false
}

/// True iff `factor(s)` and `factor(t)` are cyclic shifts of each other.
pub fn equivalent(s: &SymbolString, t: &SymbolString) -> Result<bool> {
    let fs = factor(s)?;
    let ft = factor(t)?;
    if fs.len() != ft.len() {
        return Ok(false);
    }
    let mut doubled = ft.as_slice().to_vec();
    doubled.extend_from_slice(ft.as_slice());
    Ok(contains(&SymbolString(doubled), &fs))
}

/// True iff `s` occurs in `t` or in `rc(t)`.
pub(crate) fn contained_up_to_rc(s: &SymbolString, t: &SymbolString, a: &Alphabet) -> bool {
    contains(t, s) || contains(&rc_unchecked(t, a), s)
}

/// Indices of the strings surviving normalization, in input order.
///
/// A string is removed when it is equal to, rc-equal to, or (up to rc)
/// contained in another string that is kept: strict containments always
/// drop the shorter string, and among equal/rc-equal duplicates the first
/// occurrence wins.
pub fn normalize(a: &Alphabet, strings: &[SymbolString]) -> Result<Vec<usize>> {
    if strings.is_empty() {
        return Err(Error::EmptyInstance);
    }
    for s in strings {
        check_nonempty(s, "instance")?;
        s.validate(a)?;
    }
    let n = strings.len();
    let mut dropped = vec![false; n];
    // Strictly shorter strings contained (up to rc) in any other string go
    // first; containment chains end at a maximal string that stays.
    for i in 0..n {
        for j in 0..n {
            if i == j || strings[i].len() >= strings[j].len() {
                continue;
            }
            if contained_up_to_rc(&strings[i], &strings[j], a) {
                dropped[i] = true;
                break;
            }
        }
    }
    // Among surviving equal-length duplicates (equal or rc-equal), the
    // first occurrence is kept.
    for i in 0..n {
        if dropped[i] {
            continue;
        }
        for j in 0..i {
            if dropped[j] || strings[i].len() != strings[j].len() {
                continue;
            }
            if strings[i] == strings[j] || strings[i] == rc_unchecked(&strings[j], a) {
                dropped[i] = true;
                break;
            }
        }
    }
    Ok((0..n).filter(|&i| !dropped[i]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dna(s: &str) -> SymbolString {
        SymbolString::parse(s, &Alphabet::dna()).unwrap()
    }

    #[test]
    fn rc_examples() {
        let a = Alphabet::dna();
        assert_eq!(rc(&dna("ACG"), &a).unwrap(), dna("CGT"));
        assert_eq!(rc(&dna("ACGT"), &a).unwrap(), dna("ACGT"));
        let id = Alphabet::identity(2).unwrap();
        let aba = SymbolString::parse("aba", &id).unwrap();
        assert_eq!(rc(&aba, &id).unwrap(), aba);
    }

    #[test]
    fn rc_rejects_out_of_range() {
        let a = Alphabet::dna();
        assert!(rc(&SymbolString::new(vec![7]), &a).is_err());
    }

    #[test]
    fn overlap_examples() {
        assert_eq!(overlap(&dna("TACG"), &dna("CGTA")).unwrap(), 2);
        assert_eq!(overlap(&dna("AAC"), &dna("TTG")).unwrap(), 0);
        assert_eq!(overlap(&dna("AAA"), &dna("AAA")).unwrap(), 2);
        assert!(overlap(&dna(""), &dna("A")).is_err());
    }

    #[test]
    fn dist_and_prefix_examples() {
        assert_eq!(dist(&dna("TACG"), &dna("CGTA")).unwrap(), 2);
        assert_eq!(prefix(&dna("TACG"), &dna("CGTA")).unwrap(), dna("TA"));
        assert_eq!(dist(&dna("CAA"), &dna("AAC")).unwrap(), 1);
        assert_eq!(prefix(&dna("CAA"), &dna("AAC")).unwrap(), dna("C"));
        assert_eq!(dist(&dna("AAC"), &dna("TTG")).unwrap(), 3);
        assert_eq!(prefix(&dna("AAC"), &dna("TTG")).unwrap(), dna("AAC"));
    }

    #[test]
    fn merge_examples() {
        assert_eq!(merge(&[dna("TACG"), dna("CGTA")]).unwrap(), dna("TACGTA"));
        assert_eq!(merge(&[dna("AAC"), dna("CAA")]).unwrap(), dna("AACAA"));
        assert_eq!(merge(&[dna("AAC")]).unwrap(), dna("AAC"));
        assert!(merge(&[]).is_err());
    }

    #[test]
    fn period_factor_examples() {
        assert_eq!(period(&dna("ATAT")).unwrap(), 2);
        assert_eq!(factor(&dna("ATAT")).unwrap(), dna("AT"));
        assert_eq!(period(&dna("AACAA")).unwrap(), 3);
        assert_eq!(factor(&dna("AACAA")).unwrap(), dna("AAC"));
        assert_eq!(period(&dna("A")).unwrap(), 1);
        assert_eq!(factor(&dna("A")).unwrap(), dna("A"));
    }

    #[test]
    fn equivalent_examples() {
        assert!(equivalent(&dna("ATAT"), &dna("TATA")).unwrap());
        assert!(equivalent(&dna("AACAA"), &dna("CAAC")).unwrap());
        assert!(!equivalent(&dna("AT"), &dna("AA")).unwrap());
    }

    #[test]
    fn normalize_examples() {
        let a = Alphabet::dna();
        // rc("TACG") == "CGTA", so the pair collapses to the first string.
        let kept = normalize(&a, &[dna("TACG"), dna("CGTA")]).unwrap();
        assert_eq!(kept, vec![0]);
        let kept = normalize(&a, &[dna("AAC"), dna("CAA")]).unwrap();
        assert_eq!(kept, vec![0, 1]);
        let kept = normalize(&a, &[dna("ACGT"), dna("CG")]).unwrap();
        assert_eq!(kept, vec![0]);
        assert!(matches!(normalize(&a, &[]), Err(Error::EmptyInstance)));
    }

    #[test]
    fn normalize_drops_string_contained_in_later_one() {
        let a = Alphabet::dna();
        let kept = normalize(&a, &[dna("CG"), dna("ACGT")]).unwrap();
        assert_eq!(kept, vec![1]);
        // containment via rc: "TT" occurs in rc("AACA") = "TGTT"
        let kept = normalize(&a, &[dna("TT"), dna("AACA")]).unwrap();
        assert_eq!(kept, vec![1]);
    }

    #[test]
    fn contains_basics() {
        assert!(contains(&dna("GATTACA"), &dna("TTA")));
        assert!(!contains(&dna("GATTACA"), &dna("CAT")));
        assert!(contains(&dna("A"), &dna("")));
    }
}
