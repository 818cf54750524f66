//! Symbol alphabets with an involutive complement mapping.
//!
//! Strings are sequences of integer symbol ids; the alphabet carries the
//! complement permutation and optional display glyphs. The DNA alphabet
//! (A<->T, C<->G) is built in, and treating every symbol as its own
//! complement turns reverse complement into plain reversal.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Integer symbol id; always `< Alphabet::size()`.
pub type Symbol = u32;

/// Printable characters usable as generated glyphs. Excludes whitespace and
/// the characters with meaning in the instance format (`#`, `:`, `,`).
const GLYPH_POOL: &str = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789\
                          @%&*+=?!^~<>/|.;_-$()[]{}'";

/// A finite alphabet equipped with an involutive complement permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    complement: Vec<Symbol>,
    glyphs: Option<Vec<char>>,
}

impl Alphabet {
    /// Builds an alphabet from a complement permutation and optional glyphs.
    pub fn new(complement: Vec<Symbol>, glyphs: Option<Vec<char>>) -> Result<Self> {
        let k = complement.len();
        if k == 0 {
            return Err(Error::InvalidInput("alphabet must be nonempty".into()));
        }
        for (i, &c) in complement.iter().enumerate() {
            if c as usize >= k {
                return Err(Error::InvalidInput(format!(
                    "complement of symbol {i} is {c}, outside the alphabet"
                )));
            }
            if complement[c as usize] as usize != i {
                return Err(Error::InvalidInput(format!(
                    "complement is not an involution at symbol {i}"
                )));
            }
        }
        if let Some(g) = &glyphs {
            if g.len() != k {
                return Err(Error::InvalidInput(format!(
                    "expected {k} glyphs, got {}",
                    g.len()
                )));
            }
            let mut seen = HashMap::new();
            for (i, &ch) in g.iter().enumerate() {
                if let Some(j) = seen.insert(ch, i) {
                    return Err(Error::InvalidInput(format!(
                        "glyph {ch:?} assigned to both symbol {j} and symbol {i}"
                    )));
                }
            }
        }
        Ok(Alphabet { complement, glyphs })
    }

    /// The DNA alphabet A, C, G, T with A<->T and C<->G.
    pub fn dna() -> Self {
        Alphabet {
            complement: vec![3, 2, 1, 0],
            glyphs: Some(vec!['A', 'C', 'G', 'T']),
        }
    }

    /// Alphabet of `k` symbols, each its own complement (rc = reversal).
    pub fn identity(k: usize) -> Result<Self> {
        let mut glyphs = Vec::with_capacity(k);
        let mut seen = HashMap::new();
        for c in "abcdefghijklmnopqrstuvwxyz".chars().chain(GLYPH_POOL.chars()) {
            if glyphs.len() == k {
                break;
            }
            if seen.insert(c, ()).is_none() {
                glyphs.push(c);
            }
        }
        if glyphs.len() < k {
            return Err(Error::InvalidInput(format!(
                "no glyphs available for an identity alphabet of size {k}"
            )));
        }
        Alphabet::new((0..k as Symbol).collect(), Some(glyphs))
    }

    pub fn size(&self) -> usize {
        self.complement.len()
    }

    pub fn complement(&self, s: Symbol) -> Symbol {
        self.complement[s as usize]
    }

    pub fn glyph(&self, s: Symbol) -> Option<char> {
        self.glyphs.as_ref().map(|g| g[s as usize])
    }

    pub fn has_glyphs(&self) -> bool {
        self.glyphs.is_some()
    }

    /// Looks up the symbol id for a glyph.
    pub fn symbol_of(&self, ch: char) -> Option<Symbol> {
        let g = self.glyphs.as_ref()?;
        g.iter().position(|&c| c == ch).map(|i| i as Symbol)
    }

    /// True if `s` is a valid symbol id.
    pub fn contains(&self, s: Symbol) -> bool {
        (s as usize) < self.size()
    }

    /// Picks `count` fresh glyphs not already used by this alphabet.
    pub(crate) fn fresh_glyphs(&self, count: usize) -> Result<Vec<char>> {
        let used: Vec<char> = self.glyphs.clone().unwrap_or_default();
        let fresh: Vec<char> = GLYPH_POOL
            .chars()
            .filter(|c| !used.contains(c))
            .take(count)
            .collect();
        if fresh.len() < count {
            return Err(Error::InvalidInput(format!(
                "cannot allocate {count} fresh glyphs; pool exhausted"
            )));
        }
        Ok(fresh)
    }

    /// Renders the `#alphabet` header pair list, e.g. `A:T,C:G`.
    pub fn header_pairs(&self) -> Result<String> {
        let g = self
            .glyphs
            .as_ref()
            .ok_or_else(|| Error::InvalidInput("alphabet has no glyphs to render".into()))?;
        let mut parts = Vec::new();
        for i in 0..self.size() {
            let c = self.complement[i] as usize;
            if c >= i {
                parts.push(format!("{}:{}", g[i], g[c]));
            }
        }
        Ok(parts.join(","))
    }

    /// Parses the pair list of an `#alphabet` header line.
    pub fn from_header_pairs(pairs: &str, line: usize) -> Result<Self> {
        let mut glyphs: Vec<char> = Vec::new();
        let mut complement: Vec<Symbol> = Vec::new();
        let mut index = HashMap::new();
        for part in pairs.split(',') {
            let part = part.trim();
            let mut it = part.chars();
            let (a, colon, b, rest) = (it.next(), it.next(), it.next(), it.next());
            match (a, colon, b, rest) {
                (Some(a), Some(':'), Some(b), None) => {
                    if index.contains_key(&a) || (a != b && index.contains_key(&b)) {
                        return Err(Error::Parse {
                            line,
                            msg: format!("symbol declared twice in alphabet header: {part:?}"),
                        });
                    }
                    let ia = glyphs.len() as Symbol;
                    index.insert(a, ia);
                    glyphs.push(a);
                    if a == b {
                        complement.push(ia);
                    } else {
                        let ib = ia + 1;
                        index.insert(b, ib);
                        glyphs.push(b);
                        complement.push(ib);
                        complement.push(ia);
                    }
                }
                _ => {
                    return Err(Error::Parse {
                        line,
                        msg: format!("malformed alphabet pair {part:?}, expected x:y"),
                    })
                }
            }
        }
        if glyphs.is_empty() {
            return Err(Error::Parse {
                line,
                msg: "alphabet header declares no symbols".into(),
            });
        }
        Alphabet::new(complement, Some(glyphs))
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.header_pairs() {
            Ok(p) => write!(f, "{p}"),
            Err(_) => write!(f, "<{} symbols>", self.size()),
        }
    }
}
