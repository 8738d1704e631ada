//! Crystal operators on symplectic tableaux, the induced Weyl group
//! action, plain orbit walks and the crystal graph.
//!
//! The operators act through the column reading word: f_i raises the
//! marked letter one step along the chain 1 < ... < m < m-bar < ... <
//! 1-bar, e_i lowers it, and the marked position comes from the signature
//! rule on the word. Since the set of tableaux of a fixed shape is closed
//! under both operators, the result is again a tableau of the same shape.
//!
//! The map sigma_i applies f_i or e_i as often as the weight pairing with
//! the i-th simple coroot dictates; it realizes the i-th simple reflection
//! on weights. The composite sigma = sigma_1 ... sigma_m, with sigma_m
//! acting first, realizes the signed weight rotation
//! (w_1, ..., w_m) -> (-w_m, w_1, ..., w_{m-1})
//! and generates a cyclic group of order 2m.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::letter::Letter;
use crate::tableau::KNTableau;

pub fn apply_f(t: &KNTableau, i: usize) -> Option<KNTableau> {
    let pos = t.reading_word().f_position(i)?;
    let cell = t.reading_cells()[pos];
    let old = t.entry(cell).expect("reading cells lie in the shape");
    let out = t.with_replaced(cell, Letter::from_rank_unchecked(old.rank() + 1));
    debug_assert!(
        out.check().is_none(),
        "f_{i} left the tableau family: {out}"
    );
    Some(out)
}

pub fn apply_e(t: &KNTableau, i: usize) -> Option<KNTableau> {
    let pos = t.reading_word().e_position(i)?;
    let cell = t.reading_cells()[pos];
    let old = t.entry(cell).expect("reading cells lie in the shape");
    let out = t.with_replaced(cell, Letter::from_rank_unchecked(old.rank() - 1));
    debug_assert!(
        out.check().is_none(),
        "e_{i} left the tableau family: {out}"
    );
    Some(out)
}

/// Action of the i-th simple reflection: f_i^k when the coroot pairing k
/// of the weight is nonnegative, e_i^{-k} otherwise. The pairing equals
/// phi_i - epsilon_i, so the required moves never vanish.
pub fn sigma_i(t: &KNTableau, i: usize) -> KNTableau {
    let k = t.weight().pairing(i);
    let mut cur = t.clone();
    if k >= 0 {
        for _ in 0..k {
            cur = apply_f(&cur, i).expect("coroot pairing overcounts the lowering moves");
        }
    } else {
        for _ in 0..-k {
            cur = apply_e(&cur, i).expect("coroot pairing overcounts the raising moves");
        }
    }
    debug_assert_eq!(cur.weight(), t.weight().simple_reflection(i));
    cur
}

/// The rotation sigma = sigma_1 ... sigma_m, rightmost factor first.
pub fn sigma(t: &KNTableau) -> KNTableau {
    let mut cur = t.clone();
    for i in (1..=t.m()).rev() {
        cur = sigma_i(&cur, i);
    }
    debug_assert_eq!(cur.weight(), t.weight().signed_rotation());
    cur
}

/// Walks start, g(start), g^2(start), ... until the walk returns to start,
/// failing if it runs longer than max steps.
pub fn orbit(
    start: &KNTableau,
    action: impl Fn(&KNTableau) -> KNTableau,
    max: usize,
) -> Result<Vec<KNTableau>, Error> {
    let mut members = vec![start.clone()];
    let mut cur = action(start);
    while cur != *start {
        if members.len() >= max {
            return Err(Error::OrbitTooLong { max });
        }
        let next = action(&cur);
        members.push(cur);
        cur = next;
    }
    Ok(members)
}

/// Orbit sizes of an action on a closed set of tableaux, keyed by size.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrbitCensus {
    pub sizes: BTreeMap<usize, usize>,
}

impl OrbitCensus {
    pub fn total_members(&self) -> usize {
        self.sizes.iter().map(|(size, count)| size * count).sum()
    }

    pub fn orbit_count(&self) -> usize {
        self.sizes.values().sum()
    }
}

/// Partitions members into orbits by walking the action from each yet
/// unvisited member. The slice must be sorted so membership can be looked
/// up; an action value outside the slice is an error.
pub fn orbit_census(
    members: &[KNTableau],
    action: impl Fn(&KNTableau) -> KNTableau,
    max: usize,
) -> Result<OrbitCensus, Error> {
    debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
    let mut visited = vec![false; members.len()];
    let mut sizes = BTreeMap::new();
    for start in 0..members.len() {
        if visited[start] {
            continue;
        }
        let walk = orbit(&members[start], &action, max)?;
        for t in &walk {
            let idx = members.binary_search(t).map_err(|_| Error::ActionLeftSet)?;
            visited[idx] = true;
        }
        *sizes.entry(walk.len()).or_insert(0) += 1;
    }
    Ok(OrbitCensus { sizes })
}

/// The crystal graph on a closed, sorted set of tableaux: one node per
/// tableau in slice order, one labelled edge per lowering move inside the
/// set.
pub struct CrystalGraph {
    m: usize,
    nodes: Vec<KNTableau>,
    edges: Vec<(usize, usize, usize)>,
}

impl CrystalGraph {
    pub fn new(members: &[KNTableau], m: usize) -> Result<Self, Error> {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        let mut edges = Vec::new();
        for (src, t) in members.iter().enumerate() {
            for i in 1..=m {
                if let Some(next) = apply_f(t, i) {
                    let dst = members
                        .binary_search(&next)
                        .map_err(|_| Error::ActionLeftSet)?;
                    edges.push((src, i, dst));
                }
            }
        }
        Ok(CrystalGraph {
            m,
            nodes: members.to_vec(),
            edges,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn nodes(&self) -> &[KNTableau] {
        &self.nodes
    }

    /// Edges (source index, operator index, target index), sorted by
    /// source then operator.
    pub fn edges(&self) -> &[(usize, usize, usize)] {
        &self.edges
    }

    /// Node indices no lowering move reaches, the sources of the graph.
    pub fn source_nodes(&self) -> Vec<usize> {
        let mut has_incoming = vec![false; self.nodes.len()];
        for &(_, _, dst) in &self.edges {
            has_incoming[dst] = true;
        }
        (0..self.nodes.len())
            .filter(|&v| !has_incoming[v])
            .collect()
    }

    pub fn to_dot(&self) -> String {
        fn escape(s: &str) -> String {
            s.replace('\\', "\\\\").replace('"', "\\\"")
        }
        let mut out = String::from("digraph crystal {\n  rankdir=TB;\n");
        for (idx, node) in self.nodes.iter().enumerate() {
            out.push_str(&format!(
                "  t{idx} [label=\"{}\"];\n",
                escape(&node.to_json_string())
            ));
        }
        for &(src, i, dst) in &self.edges {
            out.push_str(&format!("  t{src} -> t{dst} [label=\"{i}\"];\n"));
        }
        out.push_str("}\n");
        out
    }
}
