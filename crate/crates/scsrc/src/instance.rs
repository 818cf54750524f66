//! Problem instances and the plain-text instance format.
//!
//! Format: an optional `#alphabet a:b,c:c,...` header declaring complement
//! pairs (a symbol paired with itself is its own complement), then one
//! string per line with symbols written as glyphs. Lines starting with `#`
//! (other than the header) and blank lines are ignored. Without a header
//! the DNA alphabet is assumed.

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::strings::{normalize, SymbolString};

/// A normalized instance: the string set together with its alphabet.
///
/// After construction the set plus its reverse complements is
/// substring-free; strings are nonempty and pairwise neither equal nor
/// rc-equal. Original input order is preserved among survivors.
#[derive(Debug, Clone)]
pub struct Instance {
    alphabet: Alphabet,
    strings: Vec<SymbolString>,
}

impl Instance {
    /// Validates and normalizes a raw string list.
    pub fn new(alphabet: Alphabet, strings: Vec<SymbolString>) -> Result<Self> {
        let kept = normalize(&alphabet, &strings)?;
        let strings = kept.into_iter().map(|i| strings[i].clone()).collect();
        Ok(Instance { alphabet, strings })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn strings(&self) -> &[SymbolString] {
        &self.strings
    }

    pub fn len(&self) -> usize {
        self.strings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.strings.is_empty()
    }
}

/// Raw parse result: alphabet plus the string list before normalization.
#[derive(Debug, Clone)]
pub struct RawInstance {
    pub alphabet: Alphabet,
    pub strings: Vec<SymbolString>,
}

impl RawInstance {
    pub fn normalized(&self) -> Result<Instance> {
        Instance::new(self.alphabet.clone(), self.strings.clone())
    }
}

/// Parses the plain-text instance format.
pub fn parse_instance(text: &str) -> Result<RawInstance> {
    let mut alphabet: Option<Alphabet> = None;
    let mut strings = Vec::new();
    for (idx, raw_line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw_line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("#alphabet") {
            if alphabet.is_some() {
                return Err(Error::Parse {
                    line: lineno,
                    msg: "duplicate #alphabet header".into(),
                });
            }
            if !strings.is_empty() {
                return Err(Error::Parse {
                    line: lineno,
                    msg: "#alphabet header must precede all strings".into(),
                });
            }
            alphabet = Some(Alphabet::from_header_pairs(rest.trim(), lineno)?);
            continue;
        }
        if line.starts_with('#') {
            continue; // comment
        }
        let a = alphabet.get_or_insert_with(Alphabet::dna);
        match SymbolString::parse(line, a) {
            Ok(s) => strings.push(s),
            Err(Error::InvalidInput(msg)) => {
                return Err(Error::Parse { line: lineno, msg });
            }
            Err(e) => return Err(e),
        }
    }
    Ok(RawInstance {
        alphabet: alphabet.unwrap_or_else(Alphabet::dna),
        strings,
    })
}

/// Writes strings in the instance format; emits the `#alphabet` header
/// when `header` is set.
pub fn write_instance(a: &Alphabet, strings: &[SymbolString], header: bool) -> Result<String> {
    if !a.has_glyphs() {
        return Err(Error::InvalidInput(
            "cannot write an instance for an alphabet without glyphs".into(),
        ));
    }
    let mut out = String::new();
    if header {
        out.push_str("#alphabet ");
        out.push_str(&a.header_pairs()?);
        out.push('\n');
    }
    for s in strings {
        s.validate(a)?;
        out.push_str(&s.display(a));
        out.push('\n');
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_dna_by_default() {
        let raw = parse_instance("AAC\nCAA\n").unwrap();
        assert_eq!(raw.alphabet, Alphabet::dna());
        assert_eq!(raw.strings.len(), 2);
        let inst = raw.normalized().unwrap();
        assert_eq!(inst.len(), 2);
    }

    #[test]
    fn parses_header_and_skips_comments() {
        let raw = parse_instance("# a comment\n#alphabet a:b,c:c\nabc\n\ncba\n").unwrap();
        assert_eq!(raw.alphabet.size(), 3);
        assert_eq!(raw.strings.len(), 2);
    }

    #[test]
    fn reports_offending_line() {
        let err = parse_instance("AAC\nAXC\n").unwrap_err();
        match err {
            Error::Parse { line, msg } => {
                assert_eq!(line, 2);
                assert!(msg.contains('X'), "message {msg:?} should name the glyph");
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn header_after_strings_is_rejected() {
        assert!(parse_instance("AAC\n#alphabet a:a\n").is_err());
    }

    #[test]
    fn write_round_trip() {
        let a = Alphabet::from_header_pairs("a:b,c:c", 1).unwrap();
        let strings = vec![
            SymbolString::parse("abc", &a).unwrap(),
            SymbolString::parse("ca", &a).unwrap(),
        ];
        let text = write_instance(&a, &strings, true).unwrap();
        assert_eq!(text, "#alphabet a:b,c:c\nabc\nca\n");
        let back = parse_instance(&text).unwrap();
        assert_eq!(back.alphabet, a);
        assert_eq!(back.strings, strings);
    }

    #[test]
    fn normalization_collapses_rc_duplicates() {
        let raw = parse_instance("TACG\nCGTA\n").unwrap();
        let inst = raw.normalized().unwrap();
        assert_eq!(inst.len(), 1);
        assert_eq!(inst.strings()[0].display(inst.alphabet()), "TACG");
    }
}
