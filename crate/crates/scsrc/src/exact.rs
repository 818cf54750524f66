//! Brute-force oracles: exact superstrings, exact constrained cycle
//! covers, and exact perfect matchings. Desk-scale only; every solver in
//! the main pipeline is tested against one of these.

use std::time::Instant;

use crate::approx::Solution;
use crate::error::{Error, Result};
use crate::graphs::{OrientedGraph, OrientedVertex};
use crate::instance::Instance;
use crate::matching::{Matching, WeightedGraph};
use crate::strings::{self, SymbolString};

/// Caps on oracle enumeration sizes.
#[derive(Debug, Clone)]
pub struct OracleBudget {
    pub max_strings: usize,
    pub max_matching_vertices: usize,
    pub time_limit: Option<std::time::Duration>,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget { max_strings: 7, max_matching_vertices: 14, time_limit: None }
    }
}

impl OracleBudget {
    fn check_strings(&self, m: usize) -> Result<()> {
        if m > self.max_strings {
            return Err(Error::BudgetExceeded(format!(
                "{m} strings exceed the cap of {}",
                self.max_strings
            )));
        }
        Ok(())
    }

    fn check_clock(&self, start: Instant) -> Result<()> {
        if let Some(limit) = self.time_limit {
            if start.elapsed() > limit {
                return Err(Error::BudgetExceeded("time limit exceeded".into()));
            }
        }
        Ok(())
    }
}

/// Exhaustive minimum superstring over all (orientation, permutation)
/// pairs; returns the lexicographically first minimizer (orientation mask
/// ascending, then permutation order).
pub fn opt_scsrc(inst: &Instance, budget: &OracleBudget) -> Result<(u64, Solution)> {
    let m = inst.len();
    budget.check_strings(m)?;
    let start = Instant::now();
    let g = OrientedGraph::build(inst);

    let mut best_len = u64::MAX;
    let mut best_order: Vec<OrientedVertex> = Vec::new();
    let mut order: Vec<OrientedVertex> = Vec::with_capacity(m);

    fn dfs(
        g: &OrientedGraph,
        mask: usize,
        used: &mut Vec<bool>,
        order: &mut Vec<OrientedVertex>,
        partial_dist: u64,
        best_len: &mut u64,
        best_order: &mut Vec<OrientedVertex>,
    ) {
        let m = used.len();
        if order.len() == m {
            let total = partial_dist + g.len_of(*order.last().unwrap()) as u64;
            if total < *best_len {
                *best_len = total;
                *best_order = order.clone();
            }
            return;
        }
        // every remaining string adds distance >= 1, the final string
        // length >= 1
        let remaining = (m - order.len()) as u64;
        if partial_dist + remaining + 1 > *best_len {
            return;
        }
        for i in 0..m {
            if used[i] {
                continue;
            }
            let v = if mask >> i & 1 == 0 {
                OrientedVertex::forward(i)
            } else {
                OrientedVertex::reverse(i)
            };
            let step = order.last().map_or(0, |&prev| g.dist(prev, v) as u64);
            used[i] = true;
            order.push(v);
            dfs(g, mask, used, order, partial_dist + step, best_len, best_order);
            order.pop();
            used[i] = false;
        }
    }

    for mask in 0..1usize << m {
        budget.check_clock(start)?;
        let mut used = vec![false; m];
        dfs(&g, mask, &mut used, &mut order, 0, &mut best_len, &mut best_order);
    }

    let texts: Vec<SymbolString> = best_order.iter().map(|&v| g.str_of(v).clone()).collect();
    let text = strings::merge(&texts)?;
    debug_assert_eq!(text.len() as u64, best_len);
    Ok((best_len, Solution { order: best_order, text, stats: None }))
}

/// Exhaustive minimum superstring for plain SCS (no reverse complements):
/// permutations only, over a substring-free sublist.
pub fn opt_scs(strings_in: &[SymbolString], budget: &OracleBudget) -> Result<(u64, SymbolString)> {
    if strings_in.is_empty() {
        return Err(Error::EmptyInstance);
    }
    for s in strings_in {
        if s.is_empty() {
            return Err(Error::InvalidInput("empty string in SCS instance".into()));
        }
    }
    // keep only strings not contained in another (first duplicate wins)
    let n = strings_in.len();
    let mut kept: Vec<usize> = Vec::new();
    for i in 0..n {
        let mut drop = false;
        for j in 0..n {
            if i == j {
                continue;
            }
            if strings::contains(&strings_in[j], &strings_in[i])
                && (strings_in[i].len() < strings_in[j].len() || (strings_in[i] == strings_in[j] && j < i))
            {
                drop = true;
                break;
            }
        }
        if !drop {
            kept.push(i);
        }
    }
    let set: Vec<SymbolString> = kept.into_iter().map(|i| strings_in[i].clone()).collect();
    let m = set.len();
    budget.check_strings(m)?;

    let mut dist = vec![vec![0u64; m]; m];
    for i in 0..m {
        for j in 0..m {
            if i != j {
                dist[i][j] = strings::dist(&set[i], &set[j])? as u64;
            }
        }
    }

    let mut best_len = u64::MAX;
    let mut best_perm: Vec<usize> = Vec::new();
    let mut perm: Vec<usize> = Vec::new();
    let mut used = vec![false; m];
    fn dfs(
        dist: &[Vec<u64>],
        lens: &[u64],
        used: &mut Vec<bool>,
        perm: &mut Vec<usize>,
        partial: u64,
        best_len: &mut u64,
        best_perm: &mut Vec<usize>,
    ) {
        let m = used.len();
        if perm.len() == m {
            let total = partial + lens[*perm.last().unwrap()];
            if total < *best_len {
                *best_len = total;
                *best_perm = perm.clone();
            }
            return;
        }
        if partial + (m - perm.len()) as u64 + 1 > *best_len {
            return;
        }
        for i in 0..m {
            if used[i] {
                continue;
            }
            let step = perm.last().map_or(0, |&p| dist[p][i]);
            used[i] = true;
            perm.push(i);
            dfs(dist, lens, used, perm, partial + step, best_len, best_perm);
            perm.pop();
            used[i] = false;
        }
    }
    let lens: Vec<u64> = set.iter().map(|s| s.len() as u64).collect();
    dfs(&dist, &lens, &mut used, &mut perm, 0, &mut best_len, &mut best_perm);

    let texts: Vec<SymbolString> = best_perm.iter().map(|&i| set[i].clone()).collect();
    let text = strings::merge(&texts)?;
    debug_assert_eq!(text.len() as u64, best_len);
    Ok((best_len, text))
}

/// Exhaustive minimum-weight constrained cycle cover: all orientation
/// choices times all fixed-point-free successor permutations.
pub fn opt_cycle_cover(inst: &Instance, budget: &OracleBudget) -> Result<u64> {
    let m = inst.len();
    if m < 2 {
        return Err(Error::TooSmall(format!("cycle covers need m >= 2, got {m}")));
    }
    budget.check_strings(m)?;
    let start = Instant::now();
    let g = OrientedGraph::build(inst);

    let mut best = u64::MAX;
    let mut perm: Vec<usize> = Vec::new();
    let mut used = vec![false; m];
    // successor permutation without fixed points = disjoint cycles of
    // length >= 2 over the selected vertices
    fn dfs(
        dist: &dyn Fn(usize, usize) -> u64,
        used: &mut Vec<bool>,
        perm: &mut Vec<usize>,
        acc: u64,
        best: &mut u64,
    ) {
        let m = used.len();
        if perm.len() == m {
            *best = (*best).min(acc);
            return;
        }
        if acc >= *best {
            return;
        }
        let i = perm.len();
        for j in 0..m {
            if used[j] || j == i {
                continue;
            }
            used[j] = true;
            perm.push(j);
            dfs(dist, used, perm, acc + dist(i, j), best);
            perm.pop();
            used[j] = false;
        }
    }

    for mask in 0..1usize << m {
        budget.check_clock(start)?;
        let vertex = |i: usize| {
            if mask >> i & 1 == 0 {
                OrientedVertex::forward(i)
            } else {
                OrientedVertex::reverse(i)
            }
        };
        let dist = |i: usize, j: usize| g.dist(vertex(i), vertex(j)) as u64;
        dfs(&dist, &mut used, &mut perm, 0, &mut best);
    }
    Ok(best)
}

/// Exhaustive maximum-weight perfect matching by recursive pairing.
pub fn brute_force_pm(g: &WeightedGraph, budget: &OracleBudget) -> Result<Matching> {
    let n = g.vertex_count();
    if n > budget.max_matching_vertices {
        return Err(Error::BudgetExceeded(format!(
            "{n} vertices exceed the cap of {}",
            budget.max_matching_vertices
        )));
    }
    if n == 0 {
        return Ok(Matching { pairs: vec![], weight: 0 });
    }
    if n % 2 != 0 {
        return Err(Error::Infeasible);
    }
    let mut adj = vec![vec![None::<u64>; n]; n];
    for &(u, v, w) in g.edges() {
        adj[u][v] = Some(w);
        adj[v][u] = Some(w);
    }

    fn dfs(
        adj: &[Vec<Option<u64>>],
        matched: &mut Vec<bool>,
        pairs: &mut Vec<(usize, usize)>,
        acc: u64,
        best: &mut Option<(u64, Vec<(usize, usize)>)>,
    ) {
        let n = matched.len();
        let u = match (0..n).find(|&v| !matched[v]) {
            Some(u) => u,
            None => {
                if best.as_ref().map_or(true, |(bw, _)| acc > *bw) {
                    *best = Some((acc, pairs.clone()));
                }
                return;
            }
        };
        matched[u] = true;
        for v in u + 1..n {
            if matched[v] {
                continue;
            }
            if let Some(w) = adj[u][v] {
                matched[v] = true;
                pairs.push((u, v));
                dfs(adj, matched, pairs, acc + w, best);
                pairs.pop();
                matched[v] = false;
            }
        }
        matched[u] = false;
    }

    let mut best = None;
    let mut matched = vec![false; n];
    let mut pairs = Vec::new();
    dfs(&adj, &mut matched, &mut pairs, 0, &mut best);
    match best {
        Some((weight, pairs)) => Ok(Matching { pairs, weight }),
        None => Err(Error::Infeasible),
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

    #[test]
    fn opt_scsrc_examples() {
        let b = OracleBudget::default();
        let (len, sol) = opt_scsrc(&inst(&["AAC", "CAA"]), &b).unwrap();
        assert_eq!(len, 4);
        assert_eq!(sol.text.display(&Alphabet::dna()), "CAAC");
        let (len, _) = opt_scsrc(&inst(&["ACGTA"]), &b).unwrap();
        assert_eq!(len, 5);
        // no overlaps anywhere: sum of lengths
        let (len, _) = opt_scsrc(&inst(&["AAA", "CCC"]), &b).unwrap();
        assert_eq!(len, 6);
    }

    #[test]
    fn opt_scsrc_respects_budget() {
        let b = OracleBudget { max_strings: 1, ..Default::default() };
        assert!(matches!(
            opt_scsrc(&inst(&["AAC", "CAA"]), &b),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn opt_cycle_cover_examples() {
        let b = OracleBudget::default();
        assert_eq!(opt_cycle_cover(&inst(&["AAC", "CAA"]), &b).unwrap(), 3);
        // no overlaps in any orientation pairing: sum of lengths
        assert_eq!(opt_cycle_cover(&inst(&["AAA", "CCC"]), &b).unwrap(), 6);
        assert!(matches!(
            opt_cycle_cover(&inst(&["AAC"]), &b),
            Err(Error::TooSmall(_))
        ));
    }

    #[test]
    fn brute_pm_examples() {
        let b = OracleBudget::default();
        let g = WeightedGraph::new(
            4,
            vec![(0, 1, 5), (2, 3, 5), (0, 2, 6), (1, 3, 1), (0, 3, 0), (1, 2, 0)],
        )
        .unwrap();
        let m = brute_force_pm(&g, &b).unwrap();
        assert_eq!(m.weight, 10);
        assert_eq!(m.pairs, vec![(0, 1), (2, 3)]);

        let g = WeightedGraph::new(2, vec![(0, 1, 7)]).unwrap();
        assert_eq!(brute_force_pm(&g, &b).unwrap().weight, 7);

        let g = WeightedGraph::new(4, vec![(0, 1, 0), (2, 3, 0)]).unwrap();
        let m = brute_force_pm(&g, &b).unwrap();
        assert_eq!(m.weight, 0);
        assert!(m.is_perfect(4));

        let g = WeightedGraph::new(4, vec![(0, 1, 3), (0, 2, 4)]).unwrap();
        assert!(matches!(brute_force_pm(&g, &b), Err(Error::Infeasible)));
    }

    #[test]
    fn lower_bound_chain_on_small_instance() {
        let b = OracleBudget::default();
        let i = inst(&["AAC", "CAA"]);
        let cover = opt_cycle_cover(&i, &b).unwrap();
        let (opt, _) = opt_scsrc(&i, &b).unwrap();
        assert!(cover <= opt);
    }
}
