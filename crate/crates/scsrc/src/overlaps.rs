//! All-pairs suffix-prefix overlap tables.
//!
//! The fast route builds one Aho-Corasick automaton over the whole string
//! set and reads every overlap off the failure-link structure in
//! O(total_length + m^2). The fallback runs the per-pair KMP scan in
//! O(total_length * m). Both are exposed; they must agree and tests check
//! that they do.

use std::collections::BTreeMap;

use crate::alphabet::Symbol;
use crate::error::{Error, Result};
use crate::strings::{overlap_len, SymbolString};

struct TrieNode {
    children: BTreeMap<Symbol, usize>,
    fail: usize,
    depth: usize,
    /// Strings whose full text ends exactly at this node.
    terminal_of: Vec<usize>,
    /// Strings having this node on the failure chain of their terminal,
    /// i.e. strings with a proper suffix equal to this node's path.
    suffix_of: Vec<usize>,
}

impl TrieNode {
    fn new(depth: usize) -> Self {
        TrieNode {
            children: BTreeMap::new(),
            fail: 0,
            depth,
            terminal_of: Vec::new(),
            suffix_of: Vec::new(),
        }
    }
}

fn check_input(strings: &[SymbolString]) -> Result<()> {
    if strings.is_empty() {
        return Err(Error::InvalidInput("overlap table of an empty list".into()));
    }
    for s in strings {
        if s.is_empty() {
            return Err(Error::InvalidInput("overlap table input contains an empty string".into()));
        }
    }
    Ok(())
}

/// `table[i][j] = ov(strings[i], strings[j])` for all ordered pairs,
/// including `i == j` (the longest proper border).
pub fn all_pairs_overlaps(strings: &[SymbolString]) -> Result<Vec<Vec<usize>>> {
    check_input(strings)?;
    let m = strings.len();

    let mut nodes = vec![TrieNode::new(0)];
    let mut terminal = vec![0usize; m];
    for (i, s) in strings.iter().enumerate() {
        let mut v = 0;
        for &c in s.as_slice() {
            let next = nodes.len();
            let depth = nodes[v].depth + 1;
            v = *nodes[v].children.entry(c).or_insert_with(|| {
                nodes.push(TrieNode::new(depth));
                next
            });
        }
        nodes[v].terminal_of.push(i);
        terminal[i] = v;
    }

    // BFS failure links.
    let mut order = Vec::with_capacity(nodes.len());
    let root_children: Vec<usize> = nodes[0].children.values().copied().collect();
    order.extend(&root_children);
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        let children: Vec<(Symbol, usize)> =
            nodes[v].children.iter().map(|(&c, &w)| (c, w)).collect();
        for (c, w) in children {
            let mut f = nodes[v].fail;
            loop {
                if let Some(&g) = nodes[f].children.get(&c) {
                    if g != w {
                        nodes[w].fail = g;
                        break;
                    }
                }
                if f == 0 {
                    break;
                }
                f = nodes[f].fail;
            }
            order.push(w);
        }
    }

    // Register every string on the failure chain of its terminal: those
    // nodes spell exactly the proper suffixes of the string that are
    // prefixes of some string in the set.
    for i in 0..m {
        let mut v = nodes[terminal[i]].fail;
        while v != 0 {
            nodes[v].suffix_of.push(i);
            v = nodes[v].fail;
        }
    }

    // DFS; stacks[i] holds the depths of suffix-of-i nodes on the current
    // root path. Reading answers before pushing at the same node keeps the
    // prefix side proper.
    let mut table = vec![vec![0usize; m]; m];
    let mut stacks: Vec<Vec<usize>> = vec![Vec::new(); m];
    enum Step {
        Enter(usize),
        Leave(usize),
    }
    let mut work = vec![Step::Enter(0)];
    while let Some(step) = work.pop() {
        match step {
            Step::Enter(v) => {
                for &j in &nodes[v].terminal_of {
                    for (i, stack) in stacks.iter().enumerate() {
                        table[i][j] = stack.last().copied().unwrap_or(0);
                    }
                }
                for &i in &nodes[v].suffix_of {
                    stacks[i].push(nodes[v].depth);
                }
                work.push(Step::Leave(v));
                for &w in nodes[v].children.values().rev() {
                    work.push(Step::Enter(w));
                }
            }
            Step::Leave(v) => {
                for &i in &nodes[v].suffix_of {
                    stacks[i].pop();
                }
            }
        }
    }
    Ok(table)
}

/// Same table via the per-pair KMP scan; the independent slow route.
pub fn all_pairs_overlaps_naive(strings: &[SymbolString]) -> Result<Vec<Vec<usize>>> {
    check_input(strings)?;
    let m = strings.len();
    let mut table = vec![vec![0usize; m]; m];
    for (j, t) in strings.iter().enumerate() {
        for (i, s) in strings.iter().enumerate() {
            table[i][j] = overlap_len(s.as_slice(), t.as_slice());
        }
    }
    Ok(table)
}
