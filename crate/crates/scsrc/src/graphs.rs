//! Oriented string copies and the overlap/distance graph.
//!
//! Every input string contributes two formal vertices, one per
//! orientation; they stay distinct even when the string equals its own
//! reverse complement. Arcs connect all ordered pairs except a vertex to
//! itself and to its own reverse-complement copy. One dense weight table
//! serves both the overlap view (maximize) and the distance view
//! (`dist(u,v) = |str(u)| - ov(u,v)`).

use std::fmt;

use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::overlaps::all_pairs_overlaps;
use crate::strings::{rc_unchecked, SymbolString};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Orientation {
    Forward,
    Reverse,
}

impl Orientation {
    pub fn flip(self) -> Self {
        match self {
            Orientation::Forward => Orientation::Reverse,
            Orientation::Reverse => Orientation::Forward,
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Orientation::Forward => write!(f, "+"),
            Orientation::Reverse => write!(f, "-"),
        }
    }
}

/// An oriented copy of an input string: `(cluster, +)` is the string
/// itself, `(cluster, -)` its reverse complement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrientedVertex {
    pub cluster: usize,
    pub orientation: Orientation,
}

impl OrientedVertex {
    pub fn forward(cluster: usize) -> Self {
        OrientedVertex { cluster, orientation: Orientation::Forward }
    }

    pub fn reverse(cluster: usize) -> Self {
        OrientedVertex { cluster, orientation: Orientation::Reverse }
    }

    /// The opposite-orientation copy of the same string.
    pub fn bar(self) -> Self {
        OrientedVertex { cluster: self.cluster, orientation: self.orientation.flip() }
    }

    pub fn is_forward(self) -> bool {
        self.orientation == Orientation::Forward
    }

    /// Dense id: forward copies are even, reverse copies odd.
    pub fn id(self) -> usize {
        2 * self.cluster + (self.orientation == Orientation::Reverse) as usize
    }

    pub fn from_id(id: usize) -> Self {
        OrientedVertex {
            cluster: id / 2,
            orientation: if id % 2 == 0 { Orientation::Forward } else { Orientation::Reverse },
        }
    }
}

impl fmt::Display for OrientedVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.cluster, self.orientation)
    }
}

/// The overlap graph over all oriented copies of an instance's strings.
#[derive(Debug, Clone)]
pub struct OrientedGraph {
    m: usize,
    strings: Vec<SymbolString>, // indexed by vertex id, 2m entries
    ov: Vec<Vec<usize>>,
}

impl OrientedGraph {
    /// Builds the graph over the 2m oriented copies; weights come from one
    /// all-pairs overlap table over the oriented strings.
    pub fn build(inst: &Instance) -> Self {
        let a = inst.alphabet();
        let mut strings = Vec::with_capacity(2 * inst.len());
        for s in inst.strings() {
            strings.push(s.clone());
            strings.push(rc_unchecked(s, a));
        }
        let ov = all_pairs_overlaps(&strings).expect("normalized instances are nonempty");
        OrientedGraph { m: inst.len(), strings, ov }
    }

    /// Graph over an explicit oriented-string list (the T-level graph of
    /// the second pipeline stage reuses this). The list must hold the
    /// forward/reverse copies interleaved, as produced by `build`.
    pub(crate) fn from_oriented_strings(strings: Vec<SymbolString>) -> Result<Self> {
        if strings.is_empty() || strings.len() % 2 != 0 {
            return Err(Error::InvalidInput(
                "oriented string list must be nonempty and even-length".into(),
            ));
        }
        let ov = all_pairs_overlaps(&strings)?;
        Ok(OrientedGraph { m: strings.len() / 2, strings, ov })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertex_count(&self) -> usize {
        2 * self.m
    }

    pub fn str_of(&self, u: OrientedVertex) -> &SymbolString {
        &self.strings[u.id()]
    }

    pub fn len_of(&self, u: OrientedVertex) -> usize {
        self.strings[u.id()].len()
    }

    /// True iff the arc `u -> v` exists (no self-loops, no rc-arcs).
    pub fn allowed(&self, u: OrientedVertex, v: OrientedVertex) -> bool {
        v != u && v != u.bar()
    }

    pub fn ov(&self, u: OrientedVertex, v: OrientedVertex) -> usize {
        debug_assert!(self.allowed(u, v));
        self.ov[u.id()][v.id()]
    }

    pub fn dist(&self, u: OrientedVertex, v: OrientedVertex) -> usize {
        self.len_of(u) - self.ov(u, v)
    }

    pub fn vertices(&self) -> impl Iterator<Item = OrientedVertex> {
        (0..2 * self.m).map(OrientedVertex::from_id)
    }

    /// Weighted edge list dump, one arc per line:
    /// `u_idx u_orient v_idx v_orient ov dist`.
    pub fn dump_arcs(&self) -> String {
        let mut out = String::new();
        for u in self.vertices() {
            for v in self.vertices() {
                if self.allowed(u, v) {
                    out.push_str(&format!(
                        "{} {} {} {} {} {}\n",
                        u.cluster,
                        u.orientation,
                        v.cluster,
                        v.orientation,
                        self.ov(u, v),
                        self.dist(u, v)
                    ));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;

    fn inst(strings: &[&str]) -> Instance {
        let a = Alphabet::dna();
        let strings = strings.iter().map(|s| SymbolString::parse(s, &a).unwrap()).collect();
        Instance::new(a, strings).unwrap()
    }

    fn v(cluster: usize, fwd: bool) -> OrientedVertex {
        if fwd { OrientedVertex::forward(cluster) } else { OrientedVertex::reverse(cluster) }
    }

    #[test]
    fn bar_is_involutive_and_ids_round_trip() {
        let u = v(3, false);
        assert_eq!(u.bar().bar(), u);
        assert_eq!(OrientedVertex::from_id(u.id()), u);
        assert_eq!(u.id(), 7);
    }

    #[test]
    fn two_string_example() {
        // {"AAC","CAA"}: rc copies are GTT and TTG.
        let g = OrientedGraph::build(&inst(&["AAC", "CAA"]));
        assert_eq!(g.vertex_count(), 4);
        let arcs: Vec<_> = g
            .vertices()
            .flat_map(|u| g.vertices().filter(move |&w| w != u).map(move |w| (u, w)))
            .filter(|&(u, w)| g.allowed(u, w))
            .collect();
        assert_eq!(arcs.len(), 8);
        assert_eq!(g.ov(v(0, true), v(1, true)), 1); // AAC -> CAA
        assert_eq!(g.ov(v(1, true), v(0, true)), 2); // CAA -> AAC
        assert_eq!(g.ov(v(0, false), v(1, false)), 2); // GTT -> TTG
        assert_eq!(g.ov(v(1, false), v(0, false)), 1); // TTG -> GTT
        // cross-cluster rc-pair arcs all have weight 0
        assert_eq!(g.ov(v(0, true), v(1, false)), 0);
        assert_eq!(g.ov(v(1, false), v(0, true)), 0);
        assert_eq!(g.ov(v(0, false), v(1, true)), 0);
        assert_eq!(g.ov(v(1, true), v(0, false)), 0);
        // overlap/distance duality
        assert_eq!(g.dist(v(0, true), v(1, true)), 2);
        assert_eq!(g.dist(v(1, true), v(0, true)), 1);
    }

    #[test]
    fn single_string_has_no_arcs() {
        let g = OrientedGraph::build(&inst(&["AAC"]));
        assert_eq!(g.vertex_count(), 2);
        let arcs = g
            .vertices()
            .flat_map(|u| g.vertices().map(move |w| (u, w)))
            .filter(|&(u, w)| g.allowed(u, w))
            .count();
        assert_eq!(arcs, 0);
    }

    #[test]
    fn rc_arc_symmetry_holds_arc_by_arc() {
        let g = OrientedGraph::build(&inst(&["AAC", "CAA", "GATTA"]));
        for u in g.vertices() {
            for w in g.vertices() {
                if g.allowed(u, w) {
                    assert_eq!(g.ov(u, w), g.ov(w.bar(), u.bar()), "arc {u}->{w}");
                }
            }
        }
    }
}
