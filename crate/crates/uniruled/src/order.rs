//! The partial order on colored weighted graphs and their disjoint unions.
//!
//! The empty graph is smaller than any other graph. Two unions of admissible
//! graphs are compared by total area, then total arithmetic genus (or, in
//! genus-zero mode, by component count with the inequality reversed), then
//! the number of ambient tails, then the total divisor-tail degree reversed,
//! then the lexicographic order on the merged partitions reversed. An
//! admissible union sits below a strictly sup-admissible graph exactly when
//! its area does not exceed the latter's; strictly sup-admissible graphs are
//! never compared with each other.

use num::rational::BigRational;

use crate::error::Result;
use crate::graph::{classify, Admissibility, GraphContext, GraphList, LexOrd, WeightedPartition};

/// Outcome of comparing two graphs in the partial order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphOrd {
    Less,
    Greater,
    Equal,
    Incomparable,
}

impl GraphOrd {
    pub fn flip(self) -> GraphOrd {
        match self {
            GraphOrd::Less => GraphOrd::Greater,
            GraphOrd::Greater => GraphOrd::Less,
            other => other,
        }
    }

    pub fn is_le(self) -> bool {
        matches!(self, GraphOrd::Less | GraphOrd::Equal)
    }
}

/// How a union fits the admissibility categories.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ListKind {
    /// The empty graph.
    Empty,
    /// A disjoint union of one or more admissible graphs.
    AllAdmissible,
    /// A single connected strictly sup-admissible graph.
    StrictlySup,
    /// Anything else (e.g. a sub-admissible component, or a sup-admissible
    /// component mixed with others); such unions index no invariant and are
    /// compared with nothing but themselves.
    Outside,
}

pub fn classify_list(list: &GraphList, ctx: &GraphContext) -> Result<ListKind> {
    if list.is_empty() {
        return Ok(ListKind::Empty);
    }
    let mut kinds = Vec::with_capacity(list.components().len());
    for c in list.components() {
        kinds.push(classify(c, ctx)?);
    }
    if kinds.iter().all(|k| *k == Admissibility::Admissible) {
        return Ok(ListKind::AllAdmissible);
    }
    if kinds.len() == 1 && kinds[0] == Admissibility::StrictlySupAdmissible {
        return Ok(ListKind::StrictlySup);
    }
    Ok(ListKind::Outside)
}

/// Precomputed comparison data for one graph union, so that posets can run
/// quadratically many comparisons without re-deriving areas and partitions.
#[derive(Debug, Clone)]
pub struct OrderKey {
    pub kind: ListKind,
    pub area: BigRational,
    pub genus: i64,
    pub components: usize,
    pub x_tails: i64,
    pub mu_degree: i64,
    pub mu: WeightedPartition,
    pub canonical: String,
}

pub fn order_key(list: &GraphList, ctx: &GraphContext) -> Result<OrderKey> {
    let mu = list.merged_partition();
    Ok(OrderKey {
        kind: classify_list(list, ctx)?,
        area: list.total_area(ctx)?,
        genus: list.total_genus(),
        components: list.components().len(),
        x_tails: list.x_tail_count(),
        mu_degree: mu.degree(),
        mu,
        canonical: list.canonical_key(),
    })
}

/// Compares two graph unions in the partial order.
pub fn graph_compare(
    left: &GraphList,
    right: &GraphList,
    ctx: &GraphContext,
    genus_zero_mode: bool,
) -> Result<GraphOrd> {
    let l = order_key(left, ctx)?;
    let r = order_key(right, ctx)?;
    Ok(compare_keys(&l, &r, genus_zero_mode))
}

/// The comparison itself, on precomputed keys.
pub fn compare_keys(left: &OrderKey, right: &OrderKey, genus_zero_mode: bool) -> GraphOrd {
    if left.canonical == right.canonical {
        return GraphOrd::Equal;
    }
    if left.kind == ListKind::Empty {
        return GraphOrd::Less;
    }
    if right.kind == ListKind::Empty {
        return GraphOrd::Greater;
    }
    match (left.kind, right.kind) {
        (ListKind::AllAdmissible, ListKind::AllAdmissible) => {
            compare_admissible(left, right, genus_zero_mode)
        }
        (ListKind::AllAdmissible, ListKind::StrictlySup) => {
            if left.area <= right.area {
                GraphOrd::Less
            } else {
                GraphOrd::Incomparable
            }
        }
        (ListKind::StrictlySup, ListKind::AllAdmissible) => {
            if right.area <= left.area {
                GraphOrd::Greater
            } else {
                GraphOrd::Incomparable
            }
        }
        _ => GraphOrd::Incomparable,
    }
}

fn compare_admissible(left: &OrderKey, right: &OrderKey, genus_zero_mode: bool) -> GraphOrd {
    use std::cmp::Ordering::*;

    // (1) total area of the union class.
    match left.area.cmp(&right.area) {
        Less => return GraphOrd::Less,
        Greater => return GraphOrd::Greater,
        Equal => {}
    }
    // (2) total arithmetic genus, or component count reversed.
    if genus_zero_mode {
        match left.components.cmp(&right.components) {
            Greater => return GraphOrd::Less,
            Less => return GraphOrd::Greater,
            Equal => {}
        }
    } else {
        match left.genus.cmp(&right.genus) {
            Less => return GraphOrd::Less,
            Greater => return GraphOrd::Greater,
            Equal => {}
        }
    }
    // (3) number of ambient tails.
    match left.x_tails.cmp(&right.x_tails) {
        Less => return GraphOrd::Less,
        Greater => return GraphOrd::Greater,
        Equal => {}
    }
    // (4) total divisor-tail degree, reversed.
    match left.mu_degree.cmp(&right.mu_degree) {
        Greater => return GraphOrd::Less,
        Less => return GraphOrd::Greater,
        Equal => {}
    }
    // (5) lexicographic order on the merged partitions, reversed.
    match crate::graph::lex_compare(&left.mu, &right.mu) {
        LexOrd::LexGreater => GraphOrd::Less,
        LexOrd::LexLess => GraphOrd::Greater,
        LexOrd::LexEqual => GraphOrd::Equal,
    }
}
