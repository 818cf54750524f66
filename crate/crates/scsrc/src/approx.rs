//! The full approximation pipeline: first-level cycle cover,
//! representative extraction, second-level cover over the representatives,
//! cycle breaking, and concatenation. Also the greedy baseline and
//! solution verification.
//!
//! Cycle breaking removes, per second-level cycle, one arc at the vertex
//! of maximum period: the incoming arc when that vertex is a forward
//! representative, the outgoing arc otherwise. The piece length is then
//! the cycle weight plus the overlap lost, and the final superstring is
//! the plain concatenation of the pieces, so
//! `length = w(second cover) + sum of lost overlaps` holds exactly.

use std::io::Write;

use crate::alphabet::Alphabet;
use crate::cycle_cover::{
    build_gadget_graph, decompose_and_select, extract_f, min_cycle_cover_of_graph, mirror,
};
use crate::error::{Error, Result};
use crate::graphs::{Orientation, OrientedGraph, OrientedVertex};
use crate::instance::Instance;
use crate::matching::max_weight_perfect_matching;
use crate::rotation::{check_rotation_bounds, extract_representative, CycleString, Representative};
use crate::strings::{self, SymbolString};

/// A superstring solution: orientation and order of the surviving
/// strings, the realized text, and pipeline statistics when produced by
/// the approximation algorithm.
#[derive(Debug, Clone)]
pub struct Solution {
    /// Oriented surviving strings in the order they appear in `text`.
    pub order: Vec<OrientedVertex>,
    pub text: SymbolString,
    pub stats: Option<PipelineStats>,
}

impl Solution {
    pub fn length(&self) -> u64 {
        self.text.len() as u64
    }

    /// Renders the solution block: text line plus `#` metadata lines.
    pub fn render(&self, a: &Alphabet) -> String {
        let mut out = String::new();
        out.push_str(&self.text.display(a));
        out.push('\n');
        out.push_str(&format!("# length {}\n", self.length()));
        if let Some(stats) = &self.stats {
            out.push_str(&format!("# lower_bound {}\n", stats.lower_bound));
            out.push_str("# ratio_bound 8/3\n");
        }
        out
    }
}

/// Numbers produced along the pipeline, kept for bound checking.
#[derive(Debug, Clone)]
pub struct PipelineStats {
    /// Distance weight of the first-level cover: the lower bound on OPT.
    pub lower_bound: u64,
    /// Weight of each first-level cycle.
    pub first_cycle_weights: Vec<u64>,
    /// Distance weight of the second-level cover, when one was computed.
    pub second_cover_dist: Option<u64>,
    /// Per second-level cycle: the lost overlap and the source weights of
    /// the representatives on the cycle.
    pub cycle_breaks: Vec<CycleBreak>,
}

#[derive(Debug, Clone)]
pub struct CycleBreak {
    pub ov_lost: u64,
    pub member_source_weights: Vec<u64>,
}

/// One broken second-level cycle: representatives in linear order plus
/// the overlap sacrificed by deleting the closing arc.
#[derive(Debug, Clone)]
pub struct BrokenCycle {
    pub order: Vec<OrientedVertex>,
    pub ov_lost: u64,
}

/// Breaks a second-level cycle at the maximum-period vertex.
///
/// `source_weights[i]` is the period of representative `i` (its source
/// cycle weight); orientation does not change it. Ties pick the earliest
/// vertex in cycle order.
pub fn break_cycle(
    d: &CycleString,
    g: &OrientedGraph,
    source_weights: &[u64],
) -> Result<BrokenCycle> {
    let r = d.vertices.len();
    if r < 2 {
        return Err(Error::InvalidCycle(format!("cycle has length {r}, need at least 2")));
    }
    for u in &d.vertices {
        if u.cluster >= source_weights.len() {
            return Err(Error::InvalidCycle(format!(
                "cycle vertex {u} has no source weight"
            )));
        }
    }
    let p = (0..r)
        .max_by(|&a, &b| {
            source_weights[d.vertices[a].cluster]
                .cmp(&source_weights[d.vertices[b].cluster])
                .then(b.cmp(&a)) // ties: earliest index wins under max_by
        })
        .unwrap();
    let pivot = d.vertices[p];
    let (order, deleted): (Vec<OrientedVertex>, (OrientedVertex, OrientedVertex)) =
        if pivot.is_forward() {
            // delete the incoming arc: piece starts at the pivot
            let order: Vec<_> = (0..r).map(|q| d.vertices[(p + q) % r]).collect();
            (order, (d.vertices[(p + r - 1) % r], pivot))
        } else {
            // delete the outgoing arc: piece ends at the pivot
            let order: Vec<_> = (1..=r).map(|q| d.vertices[(p + q) % r]).collect();
            (order, (pivot, d.vertices[(p + 1) % r]))
        };
    let ov_lost = g.ov(deleted.0, deleted.1) as u64;
    Ok(BrokenCycle { order, ov_lost })
}

/// True iff `text` contains, for every string, the string itself or its
/// reverse complement. Vacuously true for an empty list.
pub fn verify(a: &Alphabet, originals: &[SymbolString], text: &SymbolString) -> bool {
    originals.iter().all(|s| {
        strings::contains(text, s) || strings::contains(text, &strings::rc_unchecked(s, a))
    })
}

/// Runs the approximation algorithm on a normalized instance.
pub fn solve(inst: &Instance) -> Result<Solution> {
    solve_traced(inst, &mut NoTrace)
}

/// Trace sink for the pipeline; `solve` uses the silent implementation,
/// the CLI's `--trace` writes every intermediate artifact.
pub trait TraceSink {
    fn emit(&mut self, _label: &str, _body: &str) {}
}

struct NoTrace;
impl TraceSink for NoTrace {}

/// Writes labeled records to an `io::Write`.
pub struct WriteTrace<W: Write>(pub W);

impl<W: Write> TraceSink for WriteTrace<W> {
    fn emit(&mut self, label: &str, body: &str) {
        let _ = writeln!(self.0, "== {label} ==");
        for line in body.lines() {
            let _ = writeln!(self.0, "{line}");
        }
    }
}

/// The pipeline with tracing hooks.
pub fn solve_traced(inst: &Instance, trace: &mut dyn TraceSink) -> Result<Solution> {
    let a = inst.alphabet();
    let m = inst.len();
    if m == 0 {
        return Err(Error::EmptyInstance);
    }
    if m == 1 {
        let text = inst.strings()[0].clone();
        let lower_bound = text.len() as u64;
        return Ok(Solution {
            order: vec![OrientedVertex::forward(0)],
            text,
            stats: Some(PipelineStats {
                lower_bound,
                first_cycle_weights: vec![],
                second_cover_dist: None,
                cycle_breaks: vec![],
            }),
        });
    }

    // Step 1: minimum-weight constrained cycle cover of the instance.
    let g = OrientedGraph::build(inst);
    trace.emit("distance graph", &g.dump_arcs());
    let gg = build_gadget_graph(&g)?;
    trace.emit("gadget graph", &gg.dump());
    let matching = max_weight_perfect_matching(gg.graph()).map_err(|e| match e {
        Error::Infeasible => {
            Error::InternalInvariant("gadget graph unexpectedly has no perfect matching".into())
        }
        other => other,
    })?;
    trace.emit("matching", &matching.dump());
    let f = extract_f(&gg, &matching)?;
    trace.emit("F", &f.dump());
    let fbar = mirror(&f, gg.m())?;
    trace.emit("F-bar", &fbar.dump());
    let cover = decompose_and_select(&f.union(&fbar), &g)?;
    trace.emit("first-level cover", &cover.dump());
    let lower_bound = cover.weight_dist;
    let first_cycle_weights: Vec<u64> = cover.cycles.iter().map(|c| c.weight).collect();

    // Step 2: extract one representative per cycle.
    let reps: Vec<Representative> = cover
        .cycles
        .iter()
        .map(|c| extract_representative(c, &g))
        .collect::<Result<_>>()?;
    for (i, rep) in reps.iter().enumerate() {
        trace.emit(&format!("representative {i}"), &format!("{rep} text={}", rep.text.display(a)));
    }
    let bounds = check_rotation_bounds(&reps, a);
    if !bounds.ok() {
        return Err(Error::InternalInvariant(
            "rotation overlap bound violated across representatives".into(),
        ));
    }

    // The representative set may contain containments; re-normalize.
    // Dropped representatives stay covered: they occur (up to rc) inside a
    // survivor, which the final text contains in one orientation.
    let rep_texts: Vec<SymbolString> = reps.iter().map(|r| r.text.clone()).collect();
    let survivors = strings::normalize(a, &rep_texts)?;
    let t_reps: Vec<&Representative> = survivors.iter().map(|&i| &reps[i]).collect();

    // Expands a piece of oriented representatives into the underlying
    // oriented input strings.
    let underlying = |piece: &[OrientedVertex]| -> Vec<OrientedVertex> {
        let mut out = Vec::new();
        for &tv in piece {
            let rep = t_reps[tv.cluster];
            if tv.is_forward() {
                out.extend(rep.rotation.iter().copied());
            } else {
                out.extend(rep.rotation.iter().rev().map(|&u| u.bar()));
            }
        }
        out
    };

    if t_reps.len() == 1 {
        // A single representative already contains every string of its
        // cycle, and every dropped representative up to rc.
        let text = t_reps[0].text.clone();
        if !verify(a, inst.strings(), &text) {
            return Err(Error::InternalInvariant(
                "single-representative output misses an input string".into(),
            ));
        }
        return Ok(Solution {
            order: underlying(&[OrientedVertex::forward(0)]),
            text,
            stats: Some(PipelineStats {
                lower_bound,
                first_cycle_weights,
                second_cover_dist: None,
                cycle_breaks: vec![],
            }),
        });
    }

    // Step 3: second-level cover over the representatives.
    let t_strings: Vec<SymbolString> = t_reps.iter().map(|r| r.text.clone()).collect();
    let t_inst = Instance::new(a.clone(), t_strings.clone())?;
    if t_inst.strings() != t_strings.as_slice() {
        return Err(Error::InternalInvariant(
            "representative set changed under a second normalization".into(),
        ));
    }
    let t_graph = OrientedGraph::build(&t_inst);
    let t_cover = min_cycle_cover_of_graph(&t_graph)?;
    trace.emit("second-level cover", &t_cover.dump());
    let source_weights: Vec<u64> = t_reps.iter().map(|r| r.source_weight).collect();

    // Step 4: break each cycle at its maximum-period vertex.
    let mut pieces: Vec<(BrokenCycle, SymbolString)> = Vec::new();
    let mut cycle_breaks = Vec::new();
    for d in &t_cover.cycles {
        let broken = break_cycle(d, &t_graph, &source_weights)?;
        let texts: Vec<SymbolString> =
            broken.order.iter().map(|&tv| t_graph.str_of(tv).clone()).collect();
        let piece = strings::merge(&texts)?;
        if piece.len() as u64 != d.weight + broken.ov_lost {
            return Err(Error::InternalInvariant(
                "piece length differs from cycle weight plus lost overlap".into(),
            ));
        }
        cycle_breaks.push(CycleBreak {
            ov_lost: broken.ov_lost,
            member_source_weights: d
                .vertices
                .iter()
                .map(|u| source_weights[u.cluster])
                .collect(),
        });
        pieces.push((broken, piece));
    }

    // Step 5: concatenate pieces, ordered by the smallest input string
    // index appearing in each piece.
    pieces.sort_by_key(|(broken, _)| {
        underlying(&broken.order).iter().map(|u| u.cluster).min().unwrap_or(usize::MAX)
    });
    let mut text_syms = Vec::new();
    let mut order = Vec::new();
    for (i, (broken, piece)) in pieces.iter().enumerate() {
        trace.emit(
            &format!("piece {i}"),
            &format!("ov_lost={} text={}", broken.ov_lost, piece.display(a)),
        );
        text_syms.extend_from_slice(piece.as_slice());
        order.extend(underlying(&broken.order));
    }
    let text = SymbolString::new(text_syms);

    if !verify(a, inst.strings(), &text) {
        return Err(Error::InternalInvariant("output misses an input string".into()));
    }
    Ok(Solution {
        order,
        text,
        stats: Some(PipelineStats {
            lower_bound,
            first_cycle_weights,
            second_cover_dist: Some(t_cover.weight_dist),
            cycle_breaks,
        }),
    })
}

/// Greedy baseline: repeatedly merge the orientation-pair of pieces with
/// maximum overlap. Ties prefer fewer reversed pieces, then the earliest
/// pair in scan order. Each merge fixes the orientation of both pieces.
pub fn greedy_baseline(inst: &Instance) -> Result<Solution> {
    struct Piece {
        text: SymbolString,
        members: Vec<OrientedVertex>,
    }
    let a = inst.alphabet();
    if inst.is_empty() {
        return Err(Error::EmptyInstance);
    }
    let mut pieces: Vec<Piece> = inst
        .strings()
        .iter()
        .enumerate()
        .map(|(i, s)| Piece { text: s.clone(), members: vec![OrientedVertex::forward(i)] })
        .collect();

    let oriented = |p: &Piece, o: Orientation| -> (SymbolString, Vec<OrientedVertex>) {
        match o {
            Orientation::Forward => (p.text.clone(), p.members.clone()),
            Orientation::Reverse => (
                strings::rc_unchecked(&p.text, a),
                p.members.iter().rev().map(|&u| u.bar()).collect(),
            ),
        }
    };

    while pieces.len() > 1 {
        let mut best: Option<(usize, usize, usize, usize, Orientation, Orientation)> = None;
        for i in 0..pieces.len() {
            for j in 0..pieces.len() {
                if i == j {
                    continue;
                }
                for oi in [Orientation::Forward, Orientation::Reverse] {
                    for oj in [Orientation::Forward, Orientation::Reverse] {
                        let (ti, _) = oriented(&pieces[i], oi);
                        let (tj, _) = oriented(&pieces[j], oj);
                        let ov = strings::overlap(&ti, &tj)?;
                        let revs = (oi == Orientation::Reverse) as usize
                            + (oj == Orientation::Reverse) as usize;
                        let better = match &best {
                            None => true,
                            Some(&(bov, brevs, ..)) => ov > bov || (ov == bov && revs < brevs),
                        };
                        if better {
                            best = Some((ov, revs, i, j, oi, oj));
                        }
                    }
                }
            }
        }
        let (_, _, i, j, oi, oj) = best.expect("at least two pieces");
        let (ti, mi) = oriented(&pieces[i], oi);
        let (tj, mj) = oriented(&pieces[j], oj);
        let text = strings::merge(&[ti, tj])?;
        let mut members = mi;
        members.extend(mj);
        let merged = Piece { text, members };
        let (hi, lo) = (i.max(j), i.min(j));
        pieces.remove(hi);
        pieces.remove(lo);
        pieces.push(merged);
    }

    let piece = pieces.pop().unwrap();
    Ok(Solution { order: piece.members, text: piece.text, stats: None })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(strings: &[&str]) -> Instance {
        let a = Alphabet::dna();
        let strings = strings.iter().map(|s| SymbolString::parse(s, &a).unwrap()).collect();
        Instance::new(a, strings).unwrap()
    }

    fn dna(s: &str) -> SymbolString {
        SymbolString::parse(s, &Alphabet::dna()).unwrap()
    }

    #[test]
    fn solve_two_string_example() {
        let i = inst(&["AAC", "CAA"]);
        let sol = solve(&i).unwrap();
        assert!(verify(i.alphabet(), i.strings(), &sol.text));
        let stats = sol.stats.as_ref().unwrap();
        assert_eq!(stats.lower_bound, 3);
        // brute-force OPT is 4 ("CAAC"); 3*len <= 8*4
        assert!(3 * sol.length() <= 8 * 4);
        assert_eq!(sol.text, dna("CAAC"));
    }

    #[test]
    fn solve_single_string() {
        let i = inst(&["ACGT"]);
        let sol = solve(&i).unwrap();
        assert_eq!(sol.text, dna("ACGT"));
        assert_eq!(sol.length(), 4);
    }

    #[test]
    fn solve_collapses_rc_duplicates() {
        let i = inst(&["TACG", "CGTA"]);
        assert_eq!(i.len(), 1);
        let sol = solve(&i).unwrap();
        assert_eq!(sol.text, dna("TACG"));
    }

    #[test]
    fn break_cycle_forward_and_reverse_pivot() {
        // T-level: two representatives with distinct periods.
        let t0 = dna("CAAC");
        let t1 = dna("GGA");
        let g = OrientedGraph::from_oriented_strings(vec![
            t0.clone(),
            strings::rc_unchecked(&t0, &Alphabet::dna()),
            t1.clone(),
            strings::rc_unchecked(&t1, &Alphabet::dna()),
        ])
        .unwrap();
        let d = CycleString {
            vertices: vec![OrientedVertex::forward(0), OrientedVertex::forward(1)],
            text: strings::merge(&[t0.clone(), t1.clone()]).unwrap(),
            weight: 7,
        };
        // source weights: rep 0 has period 3, rep 1 period 3 -> tie, pick
        // vertex 0 (earliest); forward pivot deletes the incoming arc.
        let broken = break_cycle(&d, &g, &[3, 3]).unwrap();
        assert_eq!(broken.order[0], OrientedVertex::forward(0));
        assert_eq!(broken.ov_lost, g.ov(OrientedVertex::forward(1), OrientedVertex::forward(0)) as u64);

        // reverse pivot deletes the outgoing arc: piece ends at the pivot
        let d2 = CycleString {
            vertices: vec![OrientedVertex::reverse(0), OrientedVertex::forward(1)],
            text: dna("A"),
            weight: 7,
        };
        let broken = break_cycle(&d2, &g, &[5, 3]).unwrap();
        assert_eq!(*broken.order.last().unwrap(), OrientedVertex::reverse(0));
        assert_eq!(
            broken.ov_lost,
            g.ov(OrientedVertex::reverse(0), OrientedVertex::forward(1)) as u64
        );
    }

    #[test]
    fn verify_examples() {
        let a = Alphabet::dna();
        assert!(verify(&a, &[dna("AAC"), dna("CAA")], &dna("CAAC")));
        assert!(!verify(&a, &[dna("AAC"), dna("CAA")], &dna("AAC")));
        assert!(verify(&a, &[], &dna("")));
    }

    #[test]
    fn greedy_example() {
        let i = inst(&["AAC", "CAA"]);
        let sol = greedy_baseline(&i).unwrap();
        assert_eq!(sol.text, dna("CAAC"));
        assert_eq!(sol.length(), 4);
        assert_eq!(
            sol.order,
            vec![OrientedVertex::forward(1), OrientedVertex::forward(0)]
        );
    }

    #[test]
    fn greedy_single_string_is_identity() {
        let i = inst(&["GATTACA"]);
        let sol = greedy_baseline(&i).unwrap();
        assert_eq!(sol.text, dna("GATTACA"));
    }

    #[test]
    fn accounting_identity_on_multi_cycle_instance() {
        // Two far-apart overlap groups force two first-level cycles.
        let i = inst(&["AAC", "CAA", "GGA", "AGG"]);
        let sol = solve(&i).unwrap();
        let stats = sol.stats.unwrap();
        if let Some(second) = stats.second_cover_dist {
            let lost: u64 = stats.cycle_breaks.iter().map(|b| b.ov_lost).sum();
            assert_eq!(sol.text.len() as u64, second + lost);
        }
    }
}
