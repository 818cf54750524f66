//! Critical rotations and cycle representatives.
//!
//! A cycle of the minimum cover, read as the merge of its strings, is
//! periodic with period equal to the cycle weight; conceptually it tiles a
//! semi-infinite string. The representative `t_c` is a window of that
//! tiling cut at a critical point of the periodic factor, so that its
//! overlap with any inequivalent representative is at most 2/3 of the sum
//! of the two periods. The critical point comes from the maximal-suffix
//! construction of the critical factorization theorem, and the bound is
//! re-checked on every pipeline run.

use std::fmt;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::graphs::{OrientedGraph, OrientedVertex};
use crate::strings::{self, SymbolString};

/// One cycle of a cover, with its merge text and distance weight.
#[derive(Debug, Clone)]
pub struct CycleString {
    /// Oriented vertices in cycle order, starting from the lowest id.
    pub vertices: Vec<OrientedVertex>,
    /// Merge of the corresponding strings in this rotation.
    pub text: SymbolString,
    /// Total distance weight around the cycle, including the closing arc.
    pub weight: u64,
}

impl CycleString {
    /// Assembles the cycle string for `vertices` read off `g`, checking
    /// that the merge period equals the cycle weight.
    pub(crate) fn from_vertices(g: &OrientedGraph, vertices: Vec<OrientedVertex>) -> Result<Self> {
        validate_cycle(&vertices)?;
        let r = vertices.len();
        let mut weight = 0u64;
        for q in 0..r {
            weight += g.dist(vertices[q], vertices[(q + 1) % r]) as u64;
        }
        let texts: Vec<SymbolString> =
            vertices.iter().map(|&u| g.str_of(u).clone()).collect();
        let text = strings::merge(&texts)?;
        let p = strings::period(&text)? as u64;
        if p != weight {
            return Err(Error::InternalInvariant(format!(
                "cycle merge has period {p} but cycle weight is {weight}; cover is not minimal"
            )));
        }
        Ok(CycleString { vertices, text, weight })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }
}

fn validate_cycle(vertices: &[OrientedVertex]) -> Result<()> {
    if vertices.len() < 2 {
        return Err(Error::InvalidCycle(format!(
            "cycle has length {}, need at least 2",
            vertices.len()
        )));
    }
    let mut clusters: Vec<usize> = vertices.iter().map(|u| u.cluster).collect();
    clusters.sort_unstable();
    clusters.dedup();
    if clusters.len() != vertices.len() {
        return Err(Error::InvalidCycle("cycle repeats a cluster".into()));
    }
    Ok(())
}

/// Representative string extracted from a cover cycle.
#[derive(Debug, Clone)]
pub struct Representative {
    /// The string `t_c`; its period equals the source cycle weight.
    pub text: SymbolString,
    /// Pivot index `j` into the cycle's vertex list: the merge of the
    /// rotation starting after `j` is a suffix of `text`.
    pub pivot: usize,
    /// Source cycle weight, kept so later stages never recompute periods.
    pub source_weight: u64,
    /// The cycle vertices rotated to start after the pivot; their merge is
    /// a suffix of `text`, so `text` contains each oriented string.
    pub rotation: Vec<OrientedVertex>,
}

impl fmt::Display for Representative {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rot: Vec<String> = self.rotation.iter().map(|u| u.to_string()).collect();
        write!(f, "pivot={} w={} rotation=[{}]", self.pivot, self.source_weight, rot.join(" "))
    }
}

/// Maximal suffix start under the given order (greater = inverted).
fn maximal_suffix(x: &[u32], order_greater: bool) -> usize {
    let mut left = 0;
    let mut right = 1;
    let mut offset = 0;
    let mut period = 1;
    while right + offset < x.len() {
        let a = x[right + offset];
        let b = x[left + offset];
        let suffix_smaller = if order_greater { a > b } else { a < b };
        if suffix_smaller {
            right += offset + 1;
            offset = 0;
            period = right - left;
        } else if a == b {
            if offset + 1 == period {
                right += period;
                offset = 0;
            } else {
                offset += 1;
            }
        } else {
            left = right;
            right += 1;
            offset = 0;
            period = 1;
        }
    }
    left
}

/// Critical point of `x`: a position `p` with `0 < p <= period(x)` at
/// which the local period of the infinite tiling of `factor(x)` equals
/// `period(x)`. The rotation of the tiling starting after `p` is the
/// critical rotation.
pub fn critical_point(x: &SymbolString) -> Result<usize> {
    let f = strings::factor(x)?;
    let w = f.len();
    if w == 1 {
        return Ok(1);
    }
    let i = maximal_suffix(f.as_slice(), false);
    let j = maximal_suffix(f.as_slice(), true);
    let p = i.max(j);
    debug_assert!(p < w, "critical position {p} outside [0, {w})");
    Ok(if p == 0 { w } else { p })
}

/// Local period of the infinite tiling of `f` at boundary `b >= 1`:
/// the smallest `p` such that positions match across the boundary wherever
/// both sides are defined. Brute-force; the test oracle for
/// `critical_point`.
pub fn local_period_oracle(f: &SymbolString, b: usize) -> usize {
    let w = f.len();
    let at = |i: usize| f.as_slice()[i % w];
    for p in 1..=w {
        let lo = b.saturating_sub(p);
        if (lo..b).all(|i| at(i) == at(i + p)) {
            return p;
        }
    }
    w
}

/// Extracts the representative of a cover cycle.
///
/// The pivot `j` and window are chosen so that the rotation merge starting
/// after `j` is a suffix of `t_c`, `t_c` is a substring of the wrap-around
/// merge starting at `j`, `period(t_c)` equals the cycle weight, and the
/// tiling of `factor(t_c)` is the critical rotation of the tiling of the
/// cycle merge's factor.
pub fn extract_representative(c: &CycleString, g: &OrientedGraph) -> Result<Representative> {
    validate_cycle(&c.vertices)?;
    let r = c.vertices.len();
    let w = c.weight as usize;

    // Start positions of each string on the periodic tiling of the merge.
    let mut pos = vec![0usize; r];
    for q in 1..r {
        pos[q] = pos[q - 1] + g.dist(c.vertices[q - 1], c.vertices[q]);
    }

    let p = critical_point(&c.text)?;
    let k0 = if p == 0 { w } else { p }; // window start, in (0, w]

    // The unique j with pos[j] < k0 <= pos[j] + dist(v_j, v_{j+1}).
    let mut j = r - 1;
    for q in 0..r {
        let d = g.dist(c.vertices[q], c.vertices[(q + 1) % r]);
        if pos[q] < k0 && k0 <= pos[q] + d {
            j = q;
            break;
        }
    }

    // Wrap-around merge starting at j: covers tiling positions
    // [pos[j], pos[j] + w + |str(v_j)|).
    let mut window_vertices: Vec<OrientedVertex> = Vec::with_capacity(r + 1);
    for q in 0..=r {
        window_vertices.push(c.vertices[(j + q) % r]);
    }
    let window_texts: Vec<SymbolString> =
        window_vertices.iter().map(|&u| g.str_of(u).clone()).collect();
    let window = strings::merge(&window_texts)?;
    let window_end = pos[j] + w + g.len_of(c.vertices[j]);
    debug_assert_eq!(window.len(), window_end - pos[j]);

    let len = window_end - k0;
    let text = SymbolString::from(&window.as_slice()[window.len() - len..]);

    let rotation: Vec<OrientedVertex> =
        (1..=r).map(|q| c.vertices[(j + q) % r]).collect();

    // The defining properties are cheap to check; a failure here signals
    // an implementation bug, never expected input.
    let rotation_texts: Vec<SymbolString> =
        rotation.iter().map(|&u| g.str_of(u).clone()).collect();
    let rotation_merge = strings::merge(&rotation_texts)?;
    let suffix_ok = text.len() >= rotation_merge.len()
        && text.as_slice()[text.len() - rotation_merge.len()..] == *rotation_merge.as_slice();
    if !suffix_ok {
        return Err(Error::InternalInvariant(
            "rotation merge is not a suffix of the representative".into(),
        ));
    }
    if !strings::contains(&window, &text) {
        return Err(Error::InternalInvariant(
            "representative is not a substring of the wrap-around merge".into(),
        ));
    }
    if strings::period(&text)? as u64 != c.weight {
        return Err(Error::InternalInvariant(
            "representative period differs from the cycle weight".into(),
        ));
    }
    if !strings::equivalent(&text, &rotation_merge)? {
        return Err(Error::InternalInvariant(
            "representative is not equivalent to the rotation merge".into(),
        ));
    }

    Ok(Representative { text, pivot: j, source_weight: c.weight, rotation })
}

/// One ordered-pair check of the rotation overlap bound.
#[derive(Debug, Clone)]
pub struct BoundCheck {
    /// Index of the lighter representative (w(d) <= w(c)).
    pub d: usize,
    /// Index of the heavier representative.
    pub c: usize,
    pub ov_forward: u64,
    pub ov_rc: u64,
    pub weight_sum: u64,
    pub ok: bool,
}

/// Result of checking the overlap bound over all representative pairs.
#[derive(Debug, Clone, Default)]
pub struct RotationBoundsReport {
    pub checks: Vec<BoundCheck>,
}

impl RotationBoundsReport {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn violations(&self) -> impl Iterator<Item = &BoundCheck> {
        self.checks.iter().filter(|c| !c.ok)
    }
}

/// Checks `3 * ov <= 2 * (w(d) + w(c))` for every ordered pair of
/// representatives with `w(d) <= w(c)`, in both the forward and the
/// reverse-complement form. Failures are reported, not thrown.
pub fn check_rotation_bounds(reps: &[Representative], a: &Alphabet) -> RotationBoundsReport {
    let mut report = RotationBoundsReport::default();
    for (di, d) in reps.iter().enumerate() {
        for (ci, c) in reps.iter().enumerate() {
            if di == ci || d.source_weight > c.source_weight {
                continue;
            }
            let ov_forward = strings::overlap(&d.text, &c.text).unwrap_or(0) as u64;
            let rc_d = strings::rc_unchecked(&d.text, a);
            let ov_rc = strings::overlap(&rc_d, &c.text).unwrap_or(0) as u64;
            let weight_sum = d.source_weight + c.source_weight;
            let ok = 3 * ov_forward <= 2 * weight_sum && 3 * ov_rc <= 2 * weight_sum;
            report.checks.push(BoundCheck { d: di, c: ci, ov_forward, ov_rc, weight_sum, ok });
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::instance::Instance;

    fn dna(s: &str) -> SymbolString {
        SymbolString::parse(s, &Alphabet::dna()).unwrap()
    }

    fn graph(strings: &[&str]) -> OrientedGraph {
        let a = Alphabet::dna();
        let strings = strings.iter().map(|s| SymbolString::parse(s, &a).unwrap()).collect();
        OrientedGraph::build(&Instance::new(a, strings).unwrap())
    }

    #[test]
    fn critical_point_examples() {
        // "AT": boundary 1 has local period 2 = period
        let p = critical_point(&dna("AT")).unwrap();
        assert_eq!(local_period_oracle(&dna("AT"), p), 2);
        // "AAT": the boundary before the unique T
        let p = critical_point(&dna("AAT")).unwrap();
        assert_eq!(p, 2);
        assert_eq!(local_period_oracle(&dna("AAT"), p), 3);
        // unary string
        assert_eq!(critical_point(&dna("A")).unwrap(), 1);
    }

    #[test]
    fn critical_point_is_critical_on_random_strings() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..500 {
            let len = rng.gen_range(1..=14);
            let s = SymbolString::new((0..len).map(|_| rng.gen_range(0..3u32)).collect());
            let w = strings::period(&s).unwrap();
            let f = strings::factor(&s).unwrap();
            let p = critical_point(&s).unwrap();
            assert!(p >= 1 && p <= w, "position {p} outside (0, {w}] for {s}");
            assert_eq!(local_period_oracle(&f, p), w, "not critical at {p} for {s}");
        }
    }

    #[test]
    fn extraction_on_two_cycle() {
        // cycle (AAC, CAA): weight 3, window "AACAAC", t_c = "CAAC"
        let g = graph(&["AAC", "CAA"]);
        let cyc = CycleString::from_vertices(
            &g,
            vec![OrientedVertex::forward(0), OrientedVertex::forward(1)],
        )
        .unwrap();
        assert_eq!(cyc.weight, 3);
        assert_eq!(cyc.text, dna("AACAA"));
        let rep = extract_representative(&cyc, &g).unwrap();
        assert_eq!(rep.text, dna("CAAC"));
        assert_eq!(rep.pivot, 0);
        assert_eq!(rep.source_weight, 3);
        assert_eq!(strings::period(&rep.text).unwrap(), 3);
    }

    #[test]
    fn extraction_rejects_malformed_cycles() {
        let g = graph(&["AAC", "CAA"]);
        let short = CycleString {
            vertices: vec![OrientedVertex::forward(0)],
            text: dna("AAC"),
            weight: 3,
        };
        assert!(matches!(extract_representative(&short, &g), Err(Error::InvalidCycle(_))));
        let repeated = CycleString {
            vertices: vec![OrientedVertex::forward(0), OrientedVertex::reverse(0)],
            text: dna("AAC"),
            weight: 3,
        };
        assert!(matches!(extract_representative(&repeated, &g), Err(Error::InvalidCycle(_))));
    }

    #[test]
    fn bounds_vacuous_for_single_representative() {
        let rep = Representative {
            text: dna("CAAC"),
            pivot: 0,
            source_weight: 3,
            rotation: vec![OrientedVertex::forward(1), OrientedVertex::forward(0)],
        };
        let report = check_rotation_bounds(&[rep], &Alphabet::dna());
        assert!(report.ok());
        assert!(report.checks.is_empty());
    }

    #[test]
    fn corrupted_rotation_fails_the_bound() {
        // Equivalent periodic strings overlap almost fully: (AT)* against
        // (TA)* has overlap 4 with weights 2 + 2, violating 3*4 <= 2*4.
        let bad_d = Representative {
            text: dna("ATATA"),
            pivot: 0,
            source_weight: 2,
            rotation: vec![],
        };
        let bad_c = Representative {
            text: dna("TATAT"),
            pivot: 0,
            source_weight: 2,
            rotation: vec![],
        };
        let report = check_rotation_bounds(&[bad_d, bad_c], &Alphabet::dna());
        assert!(!report.ok());
        let v: Vec<_> = report.violations().collect();
        assert!(!v.is_empty());
        assert_eq!((v[0].d, v[0].c), (0, 1));
    }
}
