//! Maximum-weight perfect matching in general weighted graphs.
//!
//! Primal-dual blossom method in the classic O(n^3) formulation (Galil's
//! survey; Edmonds' blossom and primal-dual ideas), run in
//! maximum-cardinality mode so that whenever a perfect matching exists the
//! result is a maximum-weight perfect matching. Vertex duals are stored
//! doubled, so with integer edge weights every quantity stays integral:
//! S-S edge slacks keep even parity and delta3 never truncates.
//!
//! Maximization is performed directly; weights are never negated.

use crate::error::{Error, Result};

type Weight = i64;

const NONE: usize = usize::MAX;

/// Undirected weighted graph for matching; no self-loops, no parallel
/// edges, integer weights >= 0.
#[derive(Debug, Clone)]
pub struct WeightedGraph {
    n: usize,
    edges: Vec<(usize, usize, u64)>,
}

impl WeightedGraph {
    pub fn new(n: usize, edges: Vec<(usize, usize, u64)>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        for &(u, v, _) in &edges {
            if u == v {
                return Err(Error::InvalidInput(format!("self-loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::InvalidInput(format!(
                    "edge ({u},{v}) outside vertex range 0..{n}"
                )));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidInput(format!("parallel edge ({u},{v})")));
            }
        }
        Ok(WeightedGraph { n, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize, u64)] {
        &self.edges
    }
}

/// A matching: vertex-disjoint pairs and their total weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    pub pairs: Vec<(usize, usize)>,
    pub weight: u64,
}

impl Matching {
    /// True iff every vertex of a graph on `n` vertices is covered.
    pub fn is_perfect(&self, n: usize) -> bool {
        self.pairs.len() * 2 == n
    }

    pub fn dump(&self) -> String {
        let mut out = String::new();
        for &(u, v) in &self.pairs {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

/// Computes a maximum-weight perfect matching, or `Err(Infeasible)` when
/// no perfect matching exists (distinct from a weight-0 perfect matching).
pub fn max_weight_perfect_matching(g: &WeightedGraph) -> Result<Matching> {
    if g.n == 0 {
        return Ok(Matching { pairs: vec![], weight: 0 });
    }
    if g.n % 2 != 0 || g.edges.is_empty() {
        return Err(Error::Infeasible);
    }
    let mate = Solver::new(g).run();
    let mut pairs = Vec::with_capacity(g.n / 2);
    let mut weight = 0u64;
    for v in 0..g.n {
        let p = mate[v];
        if p == NONE {
            return Err(Error::Infeasible);
        }
        let k = p / 2;
        let (i, j, w) = g.edges[k];
        if v == i.min(j) {
            pairs.push((i.min(j), i.max(j)));
            weight += w;
        }
    }
    Ok(Matching { pairs, weight })
}

/// State of one matching computation, following the textbook arrays:
/// vertices are 0..n, nontrivial blossoms n..2n.
struct Solver<'a> {
    edges: &'a [(usize, usize, u64)],
    n: usize,
    // endpoint[p]: vertex to which edge endpoint p is attached; endpoints
    // 2k and 2k+1 belong to edge k.
    endpoint: Vec<usize>,
    // neighbend[v]: remote endpoints of edges incident to v.
    neighbend: Vec<Vec<usize>>,
    mate: Vec<usize>,     // endpoint index or NONE
    label: Vec<u8>,       // 0 free, 1 S, 2 T (indexed by vertex/blossom)
    labelend: Vec<usize>, // endpoint through which the label was reached
    inblossom: Vec<usize>,
    blossomparent: Vec<usize>,
    blossomchilds: Vec<Vec<usize>>,
    blossombase: Vec<usize>,
    blossomendps: Vec<Vec<usize>>,
    bestedge: Vec<usize>,
    blossombestedges: Vec<Vec<usize>>,
    unusedblossoms: Vec<usize>,
    dualvar: Vec<Weight>, // 2*u(v) for vertices, z(b) for blossoms
    allowedge: Vec<bool>,
    queue: Vec<usize>,
}

impl<'a> Solver<'a> {
    fn new(g: &'a WeightedGraph) -> Self {
        let n = g.n;
        let nedge = g.edges.len();
        let maxweight = g.edges.iter().map(|e| e.2 as Weight).max().unwrap_or(0);
        let mut endpoint = Vec::with_capacity(2 * nedge);
        for &(i, j, _) in &g.edges {
            endpoint.push(i);
            endpoint.push(j);
        }
        let mut neighbend = vec![Vec::new(); n];
        for (k, &(i, j, _)) in g.edges.iter().enumerate() {
            neighbend[i].push(2 * k + 1);
            neighbend[j].push(2 * k);
        }
        Solver {
            edges: &g.edges,
            n,
            endpoint,
            neighbend,
            mate: vec![NONE; n],
            label: vec![0; 2 * n],
            labelend: vec![NONE; 2 * n],
            inblossom: (0..n).collect(),
            blossomparent: vec![NONE; 2 * n],
            blossomchilds: vec![Vec::new(); 2 * n],
            blossombase: (0..n).chain(std::iter::repeat(NONE).take(n)).collect(),
            blossomendps: vec![Vec::new(); 2 * n],
            bestedge: vec![NONE; 2 * n],
            blossombestedges: vec![Vec::new(); 2 * n],
            unusedblossoms: (n..2 * n).collect(),
            dualvar: (0..2 * n).map(|v| if v < n { maxweight } else { 0 }).collect(),
            allowedge: vec![false; nedge],
            queue: Vec::new(),
        }
    }

    fn slack(&self, k: usize) -> Weight {
        let (i, j, w) = self.edges[k];
        self.dualvar[i] + self.dualvar[j] - 2 * w as Weight
    }

    fn blossom_leaves(&self, b: usize) -> Vec<usize> {
        if b < self.n {
            return vec![b];
        }
        let mut leaves = Vec::new();
        let mut stack = vec![b];
        while let Some(t) = stack.pop() {
            if t < self.n {
                leaves.push(t);
            } else {
                stack.extend(self.blossomchilds[t].iter().copied());
            }
        }
        leaves
    }

    fn assign_label(&mut self, w: usize, t: u8, p: usize) {
        let b = self.inblossom[w];
        debug_assert!(self.label[w] == 0 && self.label[b] == 0);
        self.label[w] = t;
        self.label[b] = t;
        self.labelend[w] = p;
        self.labelend[b] = p;
        self.bestedge[w] = NONE;
        self.bestedge[b] = NONE;
        if t == 1 {
            self.queue.extend(self.blossom_leaves(b));
        } else {
            let base = self.blossombase[b];
            debug_assert!(self.mate[base] != NONE);
            let m = self.mate[base];
            self.assign_label(self.endpoint[m], 1, m ^ 1);
        }
    }

    /// Traces back from both sides of an S-S edge; returns the common
    /// ancestor base vertex, or NONE if an augmenting path was found.
    fn scan_blossom(&mut self, v: usize, w: usize) -> usize {
        let mut path = Vec::new();
        let mut base = NONE;
        let (mut v, mut w) = (v, w);
        while v != NONE || w != NONE {
            let mut b = self.inblossom[v];
            if self.label[b] & 4 != 0 {
                base = self.blossombase[b];
                break;
            }
            debug_assert_eq!(self.label[b], 1);
            path.push(b);
            self.label[b] = 5;
            debug_assert_eq!(self.labelend[b], self.mate[self.blossombase[b]]);
            if self.labelend[b] == NONE {
                v = NONE;
            } else {
                v = self.endpoint[self.labelend[b]];
                b = self.inblossom[v];
                debug_assert_eq!(self.label[b], 2);
                debug_assert!(self.labelend[b] != NONE);
                v = self.endpoint[self.labelend[b]];
            }
            if w != NONE {
                std::mem::swap(&mut v, &mut w);
            }
        }
        for b in path {
            self.label[b] = 1;
        }
        base
    }

    /// Folds the odd cycle through edge `k` with base `base` into a new
    /// blossom.
    fn add_blossom(&mut self, base: usize, k: usize) {
        let (mut v, mut w, _) = self.edges[k];
        let bb = self.inblossom[base];
        let mut bv = self.inblossom[v];
        let mut bw = self.inblossom[w];
        let b = self.unusedblossoms.pop().expect("no unused blossom slot");
        self.blossombase[b] = base;
        self.blossomparent[b] = NONE;
        self.blossomparent[bb] = b;

        let mut path = Vec::new();
        let mut endps = Vec::new();
        while bv != bb {
            self.blossomparent[bv] = b;
            path.push(bv);
            endps.push(self.labelend[bv]);
            debug_assert!(
                self.label[bv] == 2
                    || (self.label[bv] == 1
                        && self.labelend[bv] == self.mate[self.blossombase[bv]])
            );
            debug_assert!(self.labelend[bv] != NONE);
            v = self.endpoint[self.labelend[bv]];
            bv = self.inblossom[v];
        }
        path.push(bb);
        path.reverse();
        endps.reverse();
        endps.push(2 * k);
        while bw != bb {
            self.blossomparent[bw] = b;
            path.push(bw);
            endps.push(self.labelend[bw] ^ 1);
            debug_assert!(
                self.label[bw] == 2
                    || (self.label[bw] == 1
                        && self.labelend[bw] == self.mate[self.blossombase[bw]])
            );
            debug_assert!(self.labelend[bw] != NONE);
            w = self.endpoint[self.labelend[bw]];
            bw = self.inblossom[w];
        }

        debug_assert_eq!(self.label[bb], 1);
        self.label[b] = 1;
        self.labelend[b] = self.labelend[bb];
        self.dualvar[b] = 0;
        self.blossomchilds[b] = path;
        self.blossomendps[b] = endps;
        for leaf in self.blossom_leaves(b) {
            if self.label[self.inblossom[leaf]] == 2 {
                self.queue.push(leaf);
            }
            self.inblossom[leaf] = b;
        }

        // Compute the least-slack edges to neighbouring S-blossoms.
        let mut bestedgeto = vec![NONE; 2 * self.n];
        for &bv in &self.blossomchilds[b] {
            let nblists: Vec<Vec<usize>> = if self.blossombestedges[bv].is_empty() {
                self.blossom_leaves(bv)
                    .into_iter()
                    .map(|leaf| self.neighbend[leaf].iter().map(|&p| p / 2).collect())
                    .collect()
            } else {
                vec![self.blossombestedges[bv].clone()]
            };
            for nblist in nblists {
                for k in nblist {
                    let (mut i, mut j, _) = self.edges[k];
                    if self.inblossom[j] == b {
                        std::mem::swap(&mut i, &mut j);
                    }
                    let bj = self.inblossom[j];
                    if bj != b
                        && self.label[bj] == 1
                        && (bestedgeto[bj] == NONE || self.slack(k) < self.slack(bestedgeto[bj]))
                    {
                        bestedgeto[bj] = k;
                    }
                }
            }
            self.blossombestedges[bv].clear();
            self.bestedge[bv] = NONE;
        }
        self.blossombestedges[b] = bestedgeto.into_iter().filter(|&k| k != NONE).collect();
        self.bestedge[b] = NONE;
        for &k in &self.blossombestedges[b] {
            if self.bestedge[b] == NONE || self.slack(k) < self.slack(self.bestedge[b]) {
                self.bestedge[b] = k;
            }
        }
    }

    /// Expands (dissolves) blossom `b`.
    fn expand_blossom(&mut self, b: usize, endstage: bool) {
        let childs = self.blossomchilds[b].clone();
        for &s in &childs {
            self.blossomparent[s] = NONE;
            if s < self.n {
                self.inblossom[s] = s;
            } else if endstage && self.dualvar[s] == 0 {
                self.expand_blossom(s, endstage);
            } else {
                for leaf in self.blossom_leaves(s) {
                    self.inblossom[leaf] = s;
                }
            }
        }
        if !endstage && self.label[b] == 2 {
            // The blossom is dissolved mid-stage: relabel its children
            // along the alternating path through the entry endpoint.
            debug_assert!(self.labelend[b] != NONE);
            let entrychild = self.inblossom[self.endpoint[self.labelend[b] ^ 1]];
            let len = self.blossomchilds[b].len() as isize;
            let mut j = self.blossomchilds[b]
                .iter()
                .position(|&c| c == entrychild)
                .expect("entry child in blossom") as isize;
            let (jstep, endptrick): (isize, usize) = if j % 2 == 1 {
                j -= len;
                (1, 0)
            } else {
                (-1, 1)
            };
            let endps_at = |this: &Self, idx: isize| -> usize {
                let m = this.blossomendps[b].len() as isize;
                this.blossomendps[b][(((idx % m) + m) % m) as usize]
            };
            let childs_at = |this: &Self, idx: isize| -> usize {
                let m = this.blossomchilds[b].len() as isize;
                this.blossomchilds[b][(((idx % m) + m) % m) as usize]
            };
            let mut p = self.labelend[b];
            while j != 0 {
                self.label[self.endpoint[p ^ 1]] = 0;
                let q = endps_at(self, j - endptrick as isize) ^ endptrick;
                self.label[self.endpoint[q ^ 1]] = 0;
                self.assign_label(self.endpoint[p ^ 1], 2, p);
                self.allowedge[q / 2] = true;
                j += jstep;
                p = endps_at(self, j - endptrick as isize) ^ endptrick;
                self.allowedge[p / 2] = true;
                j += jstep;
            }
            let bv = childs_at(self, j);
            self.label[self.endpoint[p ^ 1]] = 2;
            self.label[bv] = 2;
            self.labelend[self.endpoint[p ^ 1]] = p;
            self.labelend[bv] = p;
            self.bestedge[bv] = NONE;
            j += jstep;
            while childs_at(self, j) != entrychild {
                let bv = childs_at(self, j);
                if self.label[bv] == 1 {
                    j += jstep;
                    continue;
                }
                let mut labelled = NONE;
                for v in self.blossom_leaves(bv) {
                    if self.label[v] != 0 {
                        labelled = v;
                        break;
                    }
                }
                if labelled != NONE {
                    let v = labelled;
                    debug_assert_eq!(self.label[v], 2);
                    debug_assert_eq!(self.inblossom[v], bv);
                    self.label[v] = 0;
                    self.label[self.endpoint[self.mate[self.blossombase[bv]]]] = 0;
                    let le = self.labelend[v];
                    self.assign_label(v, 2, le);
                }
                j += jstep;
            }
        }
        self.label[b] = 0;
        self.labelend[b] = NONE;
        self.blossomchilds[b].clear();
        self.blossomendps[b].clear();
        self.blossombase[b] = NONE;
        self.blossombestedges[b].clear();
        self.bestedge[b] = NONE;
        self.unusedblossoms.push(b);
    }

    /// Swaps matched/unmatched edges over the alternating path through
    /// blossom `b` between its base and vertex `v`.
    fn augment_blossom(&mut self, b: usize, v: usize) {
        let mut t = v;
        while self.blossomparent[t] != b {
            t = self.blossomparent[t];
        }
        if t >= self.n {
            self.augment_blossom(t, v);
        }
        let i = self.blossomchilds[b].iter().position(|&c| c == t).unwrap() as isize;
        let len = self.blossomchilds[b].len() as isize;
        let mut j = i;
        let (jstep, endptrick): (isize, usize) = if i % 2 == 1 {
            j -= len;
            (1, 0)
        } else {
            (-1, 1)
        };
        let endps_at = |this: &Self, idx: isize| -> usize {
            let m = this.blossomendps[b].len() as isize;
            this.blossomendps[b][(((idx % m) + m) % m) as usize]
        };
        let childs_at = |this: &Self, idx: isize| -> usize {
            let m = this.blossomchilds[b].len() as isize;
            this.blossomchilds[b][(((idx % m) + m) % m) as usize]
        };
        while j != 0 {
            j += jstep;
            let t = childs_at(self, j);
            let p = endps_at(self, j - endptrick as isize) ^ endptrick;
            if t >= self.n {
                self.augment_blossom(t, self.endpoint[p]);
            }
            j += jstep;
            let t = childs_at(self, j);
            if t >= self.n {
                self.augment_blossom(t, self.endpoint[p ^ 1]);
            }
            self.mate[self.endpoint[p]] = p ^ 1;
            self.mate[self.endpoint[p ^ 1]] = p;
        }
        let i = i as usize;
        self.blossomchilds[b].rotate_left(i);
        self.blossomendps[b].rotate_left(i);
        self.blossombase[b] = self.blossombase[self.blossomchilds[b][0]];
        debug_assert_eq!(self.blossombase[b], v);
    }

    /// Augments the matching along the path through edge `k`.
    fn augment_matching(&mut self, k: usize) {
        let (v, w, _) = self.edges[k];
        for (s0, p0) in [(v, 2 * k + 1), (w, 2 * k)] {
            let mut s = s0;
            let mut p = p0;
            loop {
                let bs = self.inblossom[s];
                debug_assert_eq!(self.label[bs], 1);
                debug_assert_eq!(self.labelend[bs], self.mate[self.blossombase[bs]]);
                if bs >= self.n {
                    self.augment_blossom(bs, s);
                }
                self.mate[s] = p;
                if self.labelend[bs] == NONE {
                    break;
                }
                let t = self.endpoint[self.labelend[bs]];
                let bt = self.inblossom[t];
                debug_assert_eq!(self.label[bt], 2);
                debug_assert!(self.labelend[bt] != NONE);
                s = self.endpoint[self.labelend[bt]];
                let j = self.endpoint[self.labelend[bt] ^ 1];
                debug_assert_eq!(self.blossombase[bt], t);
                if bt >= self.n {
                    self.augment_blossom(bt, j);
                }
                self.mate[j] = self.labelend[bt];
                p = self.labelend[bt] ^ 1;
            }
        }
    }

    /// Runs the main loop; returns `mate` as endpoint indices.
    fn run(mut self) -> Vec<usize> {
        let n = self.n;
        for _stage in 0..n {
            self.label.iter_mut().for_each(|l| *l = 0);
            self.bestedge.iter_mut().for_each(|e| *e = NONE);
            for list in self.blossombestedges[n..].iter_mut() {
                list.clear();
            }
            self.allowedge.iter_mut().for_each(|a| *a = false);
            self.queue.clear();
            for v in 0..n {
                if self.mate[v] == NONE && self.label[self.inblossom[v]] == 0 {
                    self.assign_label(v, 1, NONE);
                }
            }
            let mut augmented = false;
            loop {
                while let Some(v) = self.queue.pop() {
                    debug_assert_eq!(self.label[self.inblossom[v]], 1);
                    let ends = self.neighbend[v].clone();
                    let mut stop = false;
                    for p in ends {
                        let k = p / 2;
                        let w = self.endpoint[p];
                        if self.inblossom[v] == self.inblossom[w] {
                            continue;
                        }
                        let mut kslack = 0;
                        if !self.allowedge[k] {
                            kslack = self.slack(k);
                            if kslack <= 0 {
                                self.allowedge[k] = true;
                            }
                        }
                        if self.allowedge[k] {
                            if self.label[self.inblossom[w]] == 0 {
                                self.assign_label(w, 2, p ^ 1);
                            } else if self.label[self.inblossom[w]] == 1 {
                                let base = self.scan_blossom(v, w);
                                if base != NONE {
                                    self.add_blossom(base, k);
                                } else {
                                    self.augment_matching(k);
                                    augmented = true;
                                    stop = true;
                                    break;
                                }
                            } else if self.label[w] == 0 {
                                debug_assert_eq!(self.label[self.inblossom[w]], 2);
                                self.label[w] = 2;
                                self.labelend[w] = p ^ 1;
                            }
                        } else if self.label[self.inblossom[w]] == 1 {
                            let b = self.inblossom[v];
                            if self.bestedge[b] == NONE || kslack < self.slack(self.bestedge[b]) {
                                self.bestedge[b] = k;
                            }
                        } else if self.label[w] == 0
                            && (self.bestedge[w] == NONE || kslack < self.slack(self.bestedge[w]))
                        {
                            self.bestedge[w] = k;
                        }
                    }
                    if stop {
                        break;
                    }
                }
                if augmented {
                    break;
                }

                // Dual update; delta1 is skipped: unmatched vertices are
                // acceptable (their duals may go negative) and termination
                // is detected below.
                let mut deltatype = -1;
                let mut delta: Weight = 0;
                let mut deltaedge = NONE;
                let mut deltablossom = NONE;
                for v in 0..n {
                    if self.label[self.inblossom[v]] == 0 && self.bestedge[v] != NONE {
                        let d = self.slack(self.bestedge[v]);
                        if deltatype == -1 || d < delta {
                            delta = d;
                            deltatype = 2;
                            deltaedge = self.bestedge[v];
                        }
                    }
                }
                for b in 0..2 * n {
                    if self.blossomparent[b] == NONE
                        && self.label[b] == 1
                        && self.bestedge[b] != NONE
                    {
                        let kslack = self.slack(self.bestedge[b]);
                        debug_assert_eq!(kslack % 2, 0, "S-S slack parity");
                        let d = kslack / 2;
                        if deltatype == -1 || d < delta {
                            delta = d;
                            deltatype = 3;
                            deltaedge = self.bestedge[b];
                        }
                    }
                }
                for b in n..2 * n {
                    if self.blossombase[b] != NONE
                        && self.blossomparent[b] == NONE
                        && self.label[b] == 2
                        && (deltatype == -1 || self.dualvar[b] < delta)
                    {
                        delta = self.dualvar[b];
                        deltatype = 4;
                        deltablossom = b;
                    }
                }
                if deltatype == -1 {
                    // No further improvement possible; the current matching
                    // has maximum cardinality.
                    deltatype = 1;
                    delta = std::cmp::max(0, *self.dualvar[..n].iter().min().unwrap());
                }

                for v in 0..n {
                    match self.label[self.inblossom[v]] {
                        1 => self.dualvar[v] -= delta,
                        2 => self.dualvar[v] += delta,
                        _ => {}
                    }
                }
                for b in n..2 * n {
                    if self.blossombase[b] != NONE && self.blossomparent[b] == NONE {
                        match self.label[b] {
                            1 => self.dualvar[b] += 2 * delta,
                            2 => self.dualvar[b] -= 2 * delta,
                            _ => {}
                        }
                    }
                }

                match deltatype {
                    1 => break,
                    2 => {
                        self.allowedge[deltaedge] = true;
                        let (mut i, j, _) = self.edges[deltaedge];
                        if self.label[self.inblossom[i]] == 0 {
                            i = j;
                        }
                        debug_assert_eq!(self.label[self.inblossom[i]], 1);
                        self.queue.push(i);
                    }
                    3 => {
                        self.allowedge[deltaedge] = true;
                        let (i, _, _) = self.edges[deltaedge];
                        debug_assert_eq!(self.label[self.inblossom[i]], 1);
                        self.queue.push(i);
                    }
                    4 => self.expand_blossom(deltablossom, false),
                    _ => unreachable!(),
                }
            }
            if !augmented {
                break;
            }
            for b in n..2 * n {
                if self.blossomparent[b] == NONE
                    && self.blossombase[b] != NONE
                    && self.label[b] == 1
                    && self.dualvar[b] == 0
                {
                    self.expand_blossom(b, true);
                }
            }
        }
        self.mate
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn solve(n: usize, edges: Vec<(usize, usize, u64)>) -> Result<Matching> {
        max_weight_perfect_matching(&WeightedGraph::new(n, edges).unwrap())
    }

    #[test]
    fn k4_prefers_pair_sum_over_single_heavy_edge() {
        // brute force over the 3 perfect matchings of K4: {01,23}=10,
        // {02,13}=7, {03,12}=0.
        let m = solve(4, vec![(0, 1, 5), (2, 3, 5), (0, 2, 6), (1, 3, 1), (0, 3, 0), (1, 2, 0)])
            .unwrap();
        assert_eq!(m.weight, 10);
        assert_eq!(m.pairs, vec![(0, 1), (2, 3)]);
    }

    #[test]
    fn single_edge() {
        let m = solve(2, vec![(0, 1, 7)]).unwrap();
        assert_eq!(m.weight, 7);
        assert_eq!(m.pairs, vec![(0, 1)]);
    }

    #[test]
    fn zero_weight_is_feasible_not_infeasible() {
        let m = solve(4, vec![(0, 1, 0), (2, 3, 0)]).unwrap();
        assert_eq!(m.weight, 0);
        assert!(m.is_perfect(4));
    }

    #[test]
    fn infeasible_cases() {
        assert!(matches!(solve(4, vec![(0, 1, 3), (0, 2, 4)]), Err(Error::Infeasible)));
        assert!(matches!(solve(3, vec![(0, 1, 1), (1, 2, 1), (0, 2, 1)]), Err(Error::Infeasible)));
        assert!(matches!(solve(2, vec![]), Err(Error::Infeasible)));
    }

    #[test]
    fn empty_graph_is_trivially_perfect() {
        let m = solve(0, vec![]).unwrap();
        assert!(m.pairs.is_empty());
        assert_eq!(m.weight, 0);
    }

    #[test]
    fn odd_cycle_forces_blossom() {
        // 6 vertices: a 5-cycle with a pendant; weights force blossom use.
        let m = solve(
            6,
            vec![
                (0, 1, 8),
                (1, 2, 9),
                (2, 3, 8),
                (3, 4, 9),
                (4, 0, 8),
                (2, 5, 2),
            ],
        )
        .unwrap();
        assert!(m.is_perfect(6));
        // matchings covering all six vertices must use (2,5):
        // {01,34,25} = 8+9+2 = 19, {04,12,35?} no edge 35 -> {04,12,25}? 2 reused.
        // feasible: {(0,1),(3,4),(2,5)} and {(0,4),(1,2),(3,?)} infeasible.
        assert_eq!(m.weight, 19);
    }

    #[test]
    fn rejects_malformed_graphs() {
        assert!(WeightedGraph::new(2, vec![(0, 0, 1)]).is_err());
        assert!(WeightedGraph::new(2, vec![(0, 3, 1)]).is_err());
        assert!(WeightedGraph::new(3, vec![(0, 1, 1), (1, 0, 2)]).is_err());
    }
}
