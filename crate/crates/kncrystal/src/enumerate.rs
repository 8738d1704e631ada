//! Exhaustive construction of all tableaux of a shape, twice over: once
//! as the closure of the highest weight tableau under the lowering
//! operators, once by filtering column fillings against the defining
//! conditions. The two routes share no logic, so their agreement (and
//! agreement with the hook content count) is a real check.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use num_bigint::BigInt;
use serde::Serialize;

use crate::crystal::apply_f;
use crate::error::Error;
use crate::letter::Letter;
use crate::partition::Partition;
use crate::qpoly::formulas::hook_content_count;
use crate::tableau::{one_column_violation, two_column_violation, KNTableau};
use crate::weight::Weight;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Default ceiling on the number of members an enumeration may produce.
pub const DEFAULT_CAP: usize = 1_000_000;

/// A full set of tableaux of one shape on one alphabet, stored in
/// canonical sorted order together with its weight multiset. Construction
/// checks the cardinality against the hook content count rather than
/// assuming it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TableauSet {
    shape: Partition,
    m: usize,
    members: Vec<KNTableau>,
    weight_index: BTreeMap<Weight, usize>,
}

#[derive(Serialize)]
struct WeightCountJson {
    chi: Vec<i64>,
    count: usize,
}

#[derive(Serialize)]
struct SetJson {
    shape: Vec<usize>,
    m: usize,
    count: usize,
    weights: Vec<WeightCountJson>,
}

impl TableauSet {
    fn from_members(
        shape: Partition,
        m: usize,
        mut members: Vec<KNTableau>,
    ) -> Result<Self, Error> {
        members.sort();
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        let expected = hook_content_count(&shape, m)?;
        if BigInt::from(members.len()) != expected {
            return Err(Error::CountMismatch {
                got: members.len(),
                expected: expected.to_string(),
            });
        }
        let mut weight_index: BTreeMap<Weight, usize> = BTreeMap::new();
        for t in &members {
            *weight_index.entry(t.weight()).or_insert(0) += 1;
        }
        Ok(TableauSet {
            shape,
            m,
            members,
            weight_index,
        })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Members in canonical sorted order.
    pub fn members(&self) -> &[KNTableau] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Position of a tableau in the canonical order.
    pub fn index_of(&self, t: &KNTableau) -> Option<usize> {
        self.members.binary_search(t).ok()
    }

    /// The weight multiset as a map from weight to multiplicity.
    pub fn weight_multiset(&self) -> &BTreeMap<Weight, usize> {
        &self.weight_index
    }

    /// Multiplicity of one weight, zero if absent.
    pub fn count_at(&self, chi: &Weight) -> usize {
        self.weight_index.get(chi).copied().unwrap_or(0)
    }

    /// Shape, alphabet size, cardinality and the weight multiset as one
    /// stable JSON object.
    pub fn to_json_string(&self) -> String {
        let weights = self
            .weight_index
            .iter()
            .map(|(w, &count)| WeightCountJson {
                chi: w.coords().to_vec(),
                count,
            })
            .collect();
        serde_json::to_string(&SetJson {
            shape: self.shape.parts().to_vec(),
            m: self.m,
            count: self.members.len(),
            weights,
        })
        .expect("plain data serializes")
    }
}

fn precheck_cap(shape: &Partition, m: usize, cap: usize) -> Result<(), Error> {
    let expected = hook_content_count(shape, m)?;
    if expected > BigInt::from(cap) {
        return Err(Error::CapExceeded {
            needed: expected.to_string(),
            cap,
        });
    }
    Ok(())
}

fn lowerings(t: &KNTableau) -> Vec<KNTableau> {
    (1..=t.m()).filter_map(|i| apply_f(t, i)).collect()
}

fn grow(
    all: &mut BTreeSet<KNTableau>,
    mut next: Vec<KNTableau>,
    cap: usize,
) -> Result<Vec<KNTableau>, Error> {
    next.sort();
    next.dedup();
    let frontier: Vec<KNTableau> = next.into_iter().filter(|t| all.insert(t.clone())).collect();
    if all.len() > cap {
        return Err(Error::CapExceeded {
            needed: format!("more than {cap}"),
            cap,
        });
    }
    Ok(frontier)
}

/// Enumerates by breadth-first closure of the highest weight tableau
/// under every lowering operator.
pub fn enumerate_by_crystal(shape: &Partition, m: usize, cap: usize) -> Result<TableauSet, Error> {
    #[cfg(feature = "parallel")]
    {
        precheck_cap(shape, m, cap)?;
        let start = KNTableau::highest_weight(shape, m)?;
        let mut all = BTreeSet::from([start.clone()]);
        let mut frontier = vec![start];
        while !frontier.is_empty() {
            let next: Vec<KNTableau> = frontier.par_iter().flat_map_iter(lowerings).collect();
            frontier = grow(&mut all, next, cap)?;
        }
        TableauSet::from_members(shape.clone(), m, all.into_iter().collect())
    }
    #[cfg(not(feature = "parallel"))]
    {
        enumerate_by_crystal_sequential(shape, m, cap)
    }
}

/// Single-threaded form of [`enumerate_by_crystal`], always available as
/// a reference implementation.
pub fn enumerate_by_crystal_sequential(
    shape: &Partition,
    m: usize,
    cap: usize,
) -> Result<TableauSet, Error> {
    precheck_cap(shape, m, cap)?;
    let start = KNTableau::highest_weight(shape, m)?;
    let mut all = BTreeSet::from([start.clone()]);
    let mut frontier = vec![start];
    while !frontier.is_empty() {
        let next: Vec<KNTableau> = frontier.iter().flat_map(lowerings).collect();
        frontier = grow(&mut all, next, cap)?;
    }
    TableauSet::from_members(shape.clone(), m, all.into_iter().collect())
}

/// All strictly increasing columns of the given height whose entries pass
/// the one-column condition.
fn admissible_columns(m: usize, height: usize) -> Vec<Vec<Letter>> {
    fn build(
        m: usize,
        height: usize,
        next_rank: usize,
        cur: &mut Vec<Letter>,
        out: &mut Vec<Vec<Letter>>,
    ) {
        if cur.len() == height {
            if one_column_violation(m, cur, 1).is_none() {
                out.push(cur.clone());
            }
            return;
        }
        let remaining = height - cur.len();
        for rank in next_rank..=(2 * m + 1 - remaining) {
            cur.push(Letter::from_rank_unchecked(rank));
            build(m, height, rank + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if height > 2 * m {
        return out;
    }
    build(m, height, 1, &mut Vec::with_capacity(height), &mut out);
    out
}

fn columns_compatible(m: usize, left: &[Letter], right: &[Letter]) -> bool {
    right.iter().zip(left).all(|(r, l)| l <= r) && two_column_violation(m, left, right, 1).is_none()
}

fn assemble(m: usize, cols: &[Vec<Letter>]) -> KNTableau {
    let height = cols.first().map_or(0, Vec::len);
    let rows = (0..height)
        .map(|r| {
            cols.iter()
                .take_while(|c| c.len() > r)
                .map(|c| c[r])
                .collect()
        })
        .collect();
    let t = KNTableau::from_rows_unchecked(m, rows);
    debug_assert!(t.check().is_none());
    t
}

fn extend_columns(
    m: usize,
    heights: &[usize],
    by_height: &BTreeMap<usize, Vec<Vec<Letter>>>,
    cols: &mut Vec<Vec<Letter>>,
    out: &mut Vec<KNTableau>,
    cap: usize,
) -> Result<(), Error> {
    if cols.len() == heights.len() {
        if out.len() >= cap {
            return Err(Error::CapExceeded {
                needed: format!("more than {cap}"),
                cap,
            });
        }
        out.push(assemble(m, cols));
        return Ok(());
    }
    for candidate in &by_height[&heights[cols.len()]] {
        if let Some(prev) = cols.last() {
            if !columns_compatible(m, prev, candidate) {
                continue;
            }
        }
        cols.push(candidate.clone());
        extend_columns(m, heights, by_height, cols, out, cap)?;
        cols.pop();
    }
    Ok(())
}

fn column_tables(m: usize, heights: &[usize]) -> BTreeMap<usize, Vec<Vec<Letter>>> {
    let mut by_height = BTreeMap::new();
    for &h in heights {
        by_height
            .entry(h)
            .or_insert_with(|| admissible_columns(m, h));
    }
    by_height
}

/// Enumerates by generating admissible columns and keeping exactly the
/// column sequences whose adjacent pairs are compatible.
pub fn enumerate_by_filter(shape: &Partition, m: usize, cap: usize) -> Result<TableauSet, Error> {
    #[cfg(feature = "parallel")]
    {
        precheck_cap(shape, m, cap)?;
        let conjugate = shape.conjugate();
        let heights = conjugate.parts();
        if heights.is_empty() {
            let members = vec![KNTableau::new(m, Vec::new())?];
            return TableauSet::from_members(shape.clone(), m, members);
        }
        let by_height = column_tables(m, heights);
        let branches: Result<Vec<Vec<KNTableau>>, Error> = by_height[&heights[0]]
            .par_iter()
            .map(|first| {
                let mut cols = vec![first.clone()];
                let mut out = Vec::new();
                extend_columns(m, heights, &by_height, &mut cols, &mut out, cap)?;
                Ok(out)
            })
            .collect();
        let members: Vec<KNTableau> = branches?.into_iter().flatten().collect();
        if members.len() > cap {
            return Err(Error::CapExceeded {
                needed: format!("more than {cap}"),
                cap,
            });
        }
        TableauSet::from_members(shape.clone(), m, members)
    }
    #[cfg(not(feature = "parallel"))]
    {
        enumerate_by_filter_sequential(shape, m, cap)
    }
}

/// Single-threaded form of [`enumerate_by_filter`], always available as a
/// reference implementation.
pub fn enumerate_by_filter_sequential(
    shape: &Partition,
    m: usize,
    cap: usize,
) -> Result<TableauSet, Error> {
    precheck_cap(shape, m, cap)?;
    let conjugate = shape.conjugate();
    let heights = conjugate.parts();
    if heights.is_empty() {
        let members = vec![KNTableau::new(m, Vec::new())?];
        return TableauSet::from_members(shape.clone(), m, members);
    }
    let by_height = column_tables(m, heights);
    let mut members = Vec::new();
    extend_columns(m, heights, &by_height, &mut Vec::new(), &mut members, cap)?;
    TableauSet::from_members(shape.clone(), m, members)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn signed_rows(t: &KNTableau) -> Vec<Vec<i64>> {
        t.rows()
            .iter()
            .map(|r| r.iter().map(|l| l.to_signed(t.m())).collect())
            .collect()
    }

    #[test]
    fn one_row_of_two_boxes_on_the_smallest_alphabet() {
        let set = enumerate_by_filter(&shape(&[2]), 1, DEFAULT_CAP).unwrap();
        let listed: Vec<Vec<Vec<i64>>> = set.members().iter().map(signed_rows).collect();
        assert_eq!(
            listed,
            vec![vec![vec![1, 1]], vec![vec![1, -1]], vec![vec![-1, -1]]]
        );
        let crystal = enumerate_by_crystal(&shape(&[2]), 1, DEFAULT_CAP).unwrap();
        assert_eq!(crystal, set);
    }

    #[test]
    fn both_routes_agree_on_a_two_row_shape() {
        let a = enumerate_by_crystal(&shape(&[2, 1]), 2, DEFAULT_CAP).unwrap();
        let b = enumerate_by_filter(&shape(&[2, 1]), 2, DEFAULT_CAP).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 16);
        assert!(a.members().windows(2).all(|w| w[0] < w[1]));
        let hw = KNTableau::highest_weight(&shape(&[2, 1]), 2).unwrap();
        assert_eq!(a.index_of(&hw), Some(0));
    }

    #[test]
    fn square_shape_loses_two_fillings_to_the_two_column_condition() {
        let set = enumerate_by_filter(&shape(&[2, 2]), 2, DEFAULT_CAP).unwrap();
        assert_eq!(set.len(), 14);
        assert_eq!(
            enumerate_by_crystal(&shape(&[2, 2]), 2, DEFAULT_CAP).unwrap(),
            set
        );
    }

    #[test]
    fn empty_shape_has_exactly_the_empty_tableau() {
        let set = enumerate_by_crystal(&Partition::empty(), 2, DEFAULT_CAP).unwrap();
        assert_eq!(set.len(), 1);
        assert_eq!(set.members()[0].size(), 0);
        assert_eq!(set.count_at(&Weight::zero(2)), 1);
        assert_eq!(
            enumerate_by_filter(&Partition::empty(), 2, DEFAULT_CAP).unwrap(),
            set
        );
    }

    #[test]
    fn weight_multiset_is_symmetric_under_negation() {
        let set = enumerate_by_filter(&shape(&[2, 1]), 2, DEFAULT_CAP).unwrap();
        let total: usize = set.weight_multiset().values().sum();
        assert_eq!(total, set.len());
        for (w, &count) in set.weight_multiset() {
            assert_eq!(set.count_at(&w.negate()), count, "weight {w}");
        }
        assert_eq!(set.count_at(&Weight::new(vec![2, 1])), 1);
    }

    #[test]
    fn shapes_deeper_than_the_alphabet_are_rejected() {
        assert!(matches!(
            enumerate_by_filter(&shape(&[1, 1]), 1, DEFAULT_CAP),
            Err(Error::TooManyRows { rows: 2, m: 1 })
        ));
        assert!(matches!(
            enumerate_by_crystal(&shape(&[1, 1]), 1, DEFAULT_CAP),
            Err(Error::TooManyRows { rows: 2, m: 1 })
        ));
    }

    #[test]
    fn member_cap_stops_enumeration_before_it_starts() {
        let err = enumerate_by_crystal(&shape(&[2, 1]), 2, 10).unwrap_err();
        assert!(matches!(
            err,
            Error::CapExceeded { ref needed, cap: 10 } if needed == "16"
        ));
    }

    #[test]
    fn json_reports_count_and_weight_multiset() {
        let set = enumerate_by_filter(&shape(&[1]), 1, DEFAULT_CAP).unwrap();
        assert_eq!(
            set.to_json_string(),
            "{\"shape\":[1],\"m\":1,\"count\":2,\"weights\":[{\"chi\":[-1],\"count\":1},{\"chi\":[1],\"count\":1}]}"
        );
    }
}
