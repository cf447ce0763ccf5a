//! Finite posets of graph unions: construction from explicit element lists,
//! exhaustive lower sets below a given standard graph, and the restricted
//! index with a divisor point insertion. The stored element order is always
//! a linear extension of the partial order, with incomparable elements and
//! equal-key elements tie-broken by their canonical serialization, so runs
//! are byte-stable.

use std::collections::{BTreeMap, BTreeSet};

use num::rational::BigRational;
use num::{One, Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::graph::{
    is_standard, is_standard_connected, CohWeight, ColoredGraph, GraphContext, GraphList,
    WeightedPartition,
};
use crate::order::{compare_keys, order_key, GraphOrd, ListKind, OrderKey};

/// How a poset decides comparability.
#[derive(Debug, Clone)]
enum Relation {
    /// The graph order over a context.
    Ordered {
        ctx: GraphContext,
        genus_zero: bool,
        keys: Vec<OrderKey>,
    },
    /// A trusted linear order: element `i` precedes element `j` iff `i < j`.
    /// Used when a serialized map arrives without its context.
    Positional,
}

/// A finite, deduplicated, linearly extended poset of graph unions.
#[derive(Debug, Clone)]
pub struct GraphPoset {
    elements: Vec<GraphList>,
    canonical: Vec<String>,
    relation: Relation,
}

impl GraphPoset {
    /// Builds a poset over the graph order, sorting the elements into a
    /// linear extension. Duplicate elements (byte-identical canonical form)
    /// are merged.
    pub fn new(elements: Vec<GraphList>, ctx: GraphContext, genus_zero: bool) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut unique = Vec::new();
        for e in elements {
            if seen.insert(e.canonical_key()) {
                unique.push(e);
            }
        }
        let keys: Vec<OrderKey> = unique
            .iter()
            .map(|e| order_key(e, &ctx))
            .collect::<Result<_>>()?;
        let order = linear_extension_order(&unique, &keys, genus_zero)?;
        let elements: Vec<GraphList> = order.iter().map(|&i| unique[i].clone()).collect();
        let keys: Vec<OrderKey> = order.iter().map(|&i| keys[i].clone()).collect();
        let canonical = elements.iter().map(|e| e.canonical_key()).collect();
        Ok(GraphPoset {
            elements,
            canonical,
            relation: Relation::Ordered {
                ctx,
                genus_zero,
                keys,
            },
        })
    }

    /// Accepts an element list as a trusted linear extension, without a
    /// context. Comparability is positional.
    pub fn from_linear_order(elements: Vec<GraphList>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for e in &elements {
            if !seen.insert(e.canonical_key()) {
                return Err(Error::PreconditionViolation(format!(
                    "duplicate poset element {}",
                    e.canonical_key()
                )));
            }
        }
        let canonical = elements.iter().map(|e| e.canonical_key()).collect();
        Ok(GraphPoset {
            elements,
            canonical,
            relation: Relation::Positional,
        })
    }

    /// Keeps the given element order but verifies it is a linear extension
    /// of the graph order over `ctx`. Used when a serialized poset arrives
    /// together with its context: stored coefficient indices must survive.
    pub fn from_elements_in_order(
        elements: Vec<GraphList>,
        ctx: GraphContext,
        genus_zero: bool,
    ) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for e in &elements {
            if !seen.insert(e.canonical_key()) {
                return Err(Error::PreconditionViolation(format!(
                    "duplicate poset element {}",
                    e.canonical_key()
                )));
            }
        }
        let keys: Vec<OrderKey> = elements
            .iter()
            .map(|e| order_key(e, &ctx))
            .collect::<Result<_>>()?;
        for i in 0..elements.len() {
            for j in (i + 1)..elements.len() {
                if compare_keys(&keys[i], &keys[j], genus_zero) == GraphOrd::Greater {
                    return Err(Error::PreconditionViolation(format!(
                        "stored order is not a linear extension: element {j} \
                         is below element {i}"
                    )));
                }
            }
        }
        let canonical = elements.iter().map(|e| e.canonical_key()).collect();
        Ok(GraphPoset {
            elements,
            canonical,
            relation: Relation::Ordered {
                ctx,
                genus_zero,
                keys,
            },
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Elements in linear-extension order.
    pub fn elements(&self) -> &[GraphList] {
        &self.elements
    }

    pub fn canonical_keys(&self) -> &[String] {
        &self.canonical
    }

    pub fn index_of(&self, element: &GraphList) -> Option<usize> {
        let key = element.canonical_key();
        self.canonical.iter().position(|k| *k == key)
    }

    /// Compares two elements by index.
    pub fn compare(&self, i: usize, j: usize) -> Result<GraphOrd> {
        self.check_index(i)?;
        self.check_index(j)?;
        match &self.relation {
            Relation::Ordered {
                genus_zero, keys, ..
            } => Ok(compare_keys(&keys[i], &keys[j], *genus_zero)),
            Relation::Positional => Ok(match i.cmp(&j) {
                std::cmp::Ordering::Less => GraphOrd::Less,
                std::cmp::Ordering::Greater => GraphOrd::Greater,
                std::cmp::Ordering::Equal => GraphOrd::Equal,
            }),
        }
    }

    /// True when an entry at `(row, col)` respects lower-triangularity:
    /// the column element is below the row element, with equal-key pairs
    /// accepted only in the direction of the stored linear extension.
    pub fn entry_allowed(&self, row: usize, col: usize) -> Result<bool> {
        if row == col {
            return Ok(true);
        }
        Ok(match self.compare(col, row)? {
            GraphOrd::Less => true,
            GraphOrd::Equal => col < row,
            GraphOrd::Greater | GraphOrd::Incomparable => false,
        })
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.elements.len() {
            return Err(Error::PreconditionViolation(format!(
                "index {i} out of range for a poset of {} elements",
                self.elements.len()
            )));
        }
        Ok(())
    }

    /// True when the two posets carry the same elements in the same order.
    pub fn same_elements(&self, other: &GraphPoset) -> bool {
        self.canonical == other.canonical
    }

    /// The context the order was built over, if any.
    pub fn context(&self) -> Option<&GraphContext> {
        match &self.relation {
            Relation::Ordered { ctx, .. } => Some(ctx),
            Relation::Positional => None,
        }
    }
}

/// Kahn's algorithm with available nodes processed in canonical-key order.
/// Returns positions into `elements`.
fn linear_extension_order(
    elements: &[GraphList],
    keys: &[OrderKey],
    genus_zero: bool,
) -> Result<Vec<usize>> {
    let n = elements.len();
    let mut successors: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut indegree = vec![0usize; n];
    for i in 0..n {
        for j in (i + 1)..n {
            match compare_keys(&keys[i], &keys[j], genus_zero) {
                GraphOrd::Less => {
                    successors[i].push(j);
                    indegree[j] += 1;
                }
                GraphOrd::Greater => {
                    successors[j].push(i);
                    indegree[i] += 1;
                }
                GraphOrd::Equal | GraphOrd::Incomparable => {}
            }
        }
    }
    let mut available: BTreeMap<&str, usize> = BTreeMap::new();
    for i in 0..n {
        if indegree[i] == 0 {
            available.insert(keys[i].canonical.as_str(), i);
        }
    }
    let mut order = Vec::with_capacity(n);
    loop {
        let Some((key, i)) = available.iter().next().map(|(k, &i)| (*k, i)) else {
            break;
        };
        available.remove(key);
        order.push(i);
        for &j in &successors[i] {
            indegree[j] -= 1;
            if indegree[j] == 0 {
                available.insert(keys[j].canonical.as_str(), j);
            }
        }
    }
    if order.len() != n {
        return Err(Error::CycleDetected(
            "the graph comparator produced a cyclic relation".into(),
        ));
    }
    Ok(order)
}

/// Rejects contexts over which the set of standard graphs below a root is
/// provably infinite, so that enumeration always terminates.
///
/// An ambient weight contributes `1` (degree 1) or `2 - deg` to the
/// dimension. Zero contributions (degree 2) and mixed signs allow insertion
/// multisets of unbounded size at fixed dimension. Without the genus-zero
/// restriction the genus term `2(n-3)(1-g)` must pin the genus: at `n = 3`
/// it cannot, and for `n > 3` (resp. `n < 3`) positive (resp. negative)
/// contributions let the genus escape upward.
fn check_enumerable(ctx: &GraphContext, genus_zero: bool) -> Result<()> {
    let contributions: Vec<i64> = ctx.xi.iter().map(xi_contribution).collect();
    if contributions.contains(&0) {
        return Err(Error::ContextNotFinite(
            "an ambient weight of degree 2 admits arbitrarily many insertions \
             at fixed dimension"
                .into(),
        ));
    }
    let has_pos = contributions.iter().any(|&c| c > 0);
    let has_neg = contributions.iter().any(|&c| c < 0);
    if has_pos && has_neg {
        return Err(Error::ContextNotFinite(
            "ambient weights of mixed dimension signs admit cancelling \
             insertion pairs"
                .into(),
        ));
    }
    if !genus_zero {
        if ctx.n == 3 {
            return Err(Error::ContextNotFinite(
                "at n = 3 the dimension does not constrain the genus; use \
                 genus-zero mode"
                    .into(),
            ));
        }
        if ctx.n > 3 && has_pos {
            return Err(Error::ContextNotFinite(
                "positive-dimension ambient weights let the genus grow without \
                 bound for n > 3"
                    .into(),
            ));
        }
        if ctx.n < 3 && has_neg {
            return Err(Error::ContextNotFinite(
                "negative-dimension ambient weights let the genus grow without \
                 bound for n < 3"
                    .into(),
            ));
        }
    }
    Ok(())
}

fn xi_contribution(w: &CohWeight) -> i64 {
    if w.degree == 1 {
        1
    } else {
        2 - w.degree as i64
    }
}

/// How the component generator picks genera.
#[derive(Debug, Clone, Copy)]
enum GenusRule {
    /// Fixed genus (the genus-zero variants).
    Fixed(i64),
    /// Solve `dimension = 0` for the genus; requires `n != 3`.
    Solve,
}

/// All standard connected graphs over the context with the prescribed total
/// divisor multiplicity and area at most `budget`.
fn standard_connected_with_total(
    ctx: &GraphContext,
    budget: &BigRational,
    total_mu: impl Fn(&crate::graph::ClassData) -> Option<i64>,
    genus_rule: GenusRule,
    max_mu_len: Option<usize>,
) -> Result<Vec<ColoredGraph>> {
    let mut out = Vec::new();
    for (class_id, data) in &ctx.classes {
        if !data.area.is_positive() || data.area > *budget {
            continue;
        }
        let Some(mu_total) = total_mu(data) else {
            continue;
        };
        if mu_total < 0 {
            continue;
        }
        let genus_min = genus_lower_bound(&data.area, &ctx.c_min);
        for mu in mu_multisets(&ctx.theta, mu_total, max_mu_len) {
            // M = sum (2 - 2 m_i - deg beta_i)
            let m_term: i64 = mu
                .pairs()
                .iter()
                .map(|(m, w)| 2 - 2 * (*m as i64) - w.degree as i64)
                .sum();
            let base = 2 * (data.c1 + data.d_dot) + m_term;
            for (x_tails, p) in xi_multisets(ctx, base, genus_min, genus_rule) {
                let genus = match genus_rule {
                    GenusRule::Fixed(g) => g,
                    GenusRule::Solve => {
                        // 2(n-3)(1-g) = -(base + p)
                        let slope = 2 * (ctx.n as i64 - 3);
                        debug_assert!(slope != 0);
                        let numerator = base + p + 2 * (ctx.n as i64 - 3);
                        if numerator % slope != 0 {
                            continue;
                        }
                        numerator / slope
                    }
                };
                let graph = ColoredGraph::new(genus, class_id.clone(), x_tails, mu.clone());
                if is_standard_connected(&graph, ctx).standard {
                    out.push(graph);
                }
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Smallest integer genus satisfying `g >= -area/c_min + 1`.
fn genus_lower_bound(area: &BigRational, c_min: &BigRational) -> i64 {
    let bound = BigRational::one() - area / c_min;
    bound.ceil().to_integer().to_i64().unwrap_or(i64::MIN)
}

/// All multisets of pairs `(m >= 1, theta weight)` with total multiplicity
/// exactly `total`, at most `max_len` pairs.
fn mu_multisets(theta: &[CohWeight], total: i64, max_len: Option<usize>) -> Vec<WeightedPartition> {
    let mut out = Vec::new();
    let mut parts: Vec<(i64, usize)> = Vec::new();
    fn recurse(
        theta: &[CohWeight],
        remaining: i64,
        max_m: i64,
        max_len: Option<usize>,
        parts: &mut Vec<(i64, usize)>,
        out: &mut Vec<WeightedPartition>,
    ) {
        if remaining == 0 {
            let pairs = parts
                .iter()
                .map(|&(m, wi)| (m as u32, theta[wi].clone()))
                .collect();
            out.push(WeightedPartition::new(pairs));
            return;
        }
        if let Some(cap) = max_len {
            if parts.len() >= cap {
                return;
            }
        }
        // Parts are chosen in non-increasing (multiplicity, weight-index)
        // order so each multiset is produced exactly once.
        for m in (1..=max_m.min(remaining)).rev() {
            let wi_start = match parts.last() {
                Some(&(pm, pwi)) if pm == m => pwi,
                _ => 0,
            };
            for wi in wi_start..theta.len() {
                parts.push((m, wi));
                recurse(theta, remaining - m, m, max_len, parts, out);
                parts.pop();
            }
        }
    }
    if total == 0 {
        out.push(WeightedPartition::empty());
        return out;
    }
    recurse(theta, total, total, max_len, &mut parts, &mut out);
    out
}

/// Ambient-tail multisets compatible with a vanishing dimension, together
/// with their total dimension contribution.
///
/// For fixed genus the contribution must exactly cancel `base + genus term`;
/// otherwise it ranges over the finite window allowed by the genus bound.
/// [`check_enumerable`] guarantees all contributions share one sign.
fn xi_multisets(
    ctx: &GraphContext,
    base: i64,
    genus_min: i64,
    genus_rule: GenusRule,
) -> Vec<(Vec<CohWeight>, i64)> {
    let (lo, hi) = match genus_rule {
        GenusRule::Fixed(g) => {
            let target = -(base + 2 * (ctx.n as i64 - 3) * (1 - g));
            (target, target)
        }
        GenusRule::Solve => {
            // g >= genus_min translates into a one-sided bound on the total
            // contribution p; the other side is 0 because all contributions
            // share one sign.
            let slope = 2 * (ctx.n as i64 - 3);
            let edge = slope * (genus_min - 1) - base;
            if ctx.n > 3 {
                (edge.min(0), 0)
            } else {
                (0, edge.max(0))
            }
        }
    };
    if lo > hi {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    fn recurse(
        ctx: &GraphContext,
        start: usize,
        sum: i64,
        lo: i64,
        hi: i64,
        current: &mut Vec<usize>,
        out: &mut Vec<(Vec<CohWeight>, i64)>,
    ) {
        if sum >= lo && sum <= hi {
            let tails = current.iter().map(|&i| ctx.xi[i].clone()).collect();
            out.push((tails, sum));
        }
        for i in start..ctx.xi.len() {
            let c = xi_contribution(&ctx.xi[i]);
            let next = sum + c;
            // All contributions share the sign of c; once past the window in
            // that direction nothing can return.
            if c > 0 && next > hi {
                continue;
            }
            if c < 0 && next < lo {
                continue;
            }
            current.push(i);
            recurse(ctx, i, next, lo, hi, current, out);
            current.pop();
        }
    }
    recurse(ctx, 0, 0, lo, hi, &mut current, &mut out);
    out
}

/// All multisets (with repetition) of candidate components whose total area
/// stays within the budget, emitted as graph unions.
fn component_unions(
    candidates: &[ColoredGraph],
    areas: &[BigRational],
    budget: &BigRational,
) -> Vec<GraphList> {
    let mut out = Vec::new();
    let mut current: Vec<ColoredGraph> = Vec::new();
    fn recurse(
        candidates: &[ColoredGraph],
        areas: &[BigRational],
        start: usize,
        remaining: &BigRational,
        current: &mut Vec<ColoredGraph>,
        out: &mut Vec<GraphList>,
    ) {
        if !current.is_empty() {
            out.push(GraphList::new(current.clone()));
        }
        for i in start..candidates.len() {
            if areas[i] > *remaining {
                continue;
            }
            current.push(candidates[i].clone());
            let next = remaining - &areas[i];
            recurse(candidates, areas, i, &next, current, out);
            current.pop();
        }
    }
    recurse(candidates, areas, 0, budget, &mut current, &mut out);
    out
}

/// The finite set of standard sup-admissible graph unions at or below the
/// root in the partial order, as a poset in linear-extension order.
///
/// The root must itself be standard (the empty root degenerately yields the
/// singleton poset). The context must pass the finiteness checks; see
/// [`Error::ContextNotFinite`].
pub fn lower_set(root: &GraphList, ctx: &GraphContext, genus_zero: bool) -> Result<GraphPoset> {
    ctx.validate()?;
    if root.is_empty() {
        return GraphPoset::new(vec![GraphList::empty()], ctx.clone(), genus_zero);
    }
    let report = is_standard(root, ctx);
    if !report.standard {
        return Err(Error::PreconditionViolation(format!(
            "the root graph is not standard: {}",
            report.reasons.join("; ")
        )));
    }
    let root_key = order_key(root, ctx)?;
    if root_key.kind == ListKind::Outside {
        return Err(Error::PreconditionViolation(
            "the root graph is neither admissible nor strictly sup-admissible".into(),
        ));
    }
    check_enumerable(ctx, genus_zero)?;
    let genus_rule = if genus_zero {
        GenusRule::Fixed(0)
    } else {
        GenusRule::Solve
    };
    let budget = root_key.area.clone();
    // Elements of the index other than the root itself are unions of
    // admissible standard components: strictly sup-admissible graphs are
    // never below another graph.
    let candidates =
        standard_connected_with_total(ctx, &budget, |data| Some(data.d_dot), genus_rule, None)?;
    let areas: Vec<BigRational> = candidates
        .iter()
        .map(|c| ctx.class_data(&c.class_id).map(|d| d.area.clone()))
        .collect::<Result<_>>()?;
    let mut elements = vec![root.clone()];
    for union in component_unions(&candidates, &areas, &budget) {
        let key = order_key(&union, ctx)?;
        if compare_keys(&key, &root_key, genus_zero).is_le() {
            elements.push(union);
        }
    }
    GraphPoset::new(elements, ctx.clone(), genus_zero)
}

/// The restricted index of genus-zero graphs with a divisor point insertion:
/// unions of standard admissible components of total arithmetic genus zero,
/// total area at most `V`, carrying a point-class divisor tail, together
/// with the strictly sup-admissible graphs on divisor classes of area
/// exactly `V` whose total multiplicity overshoots `D.A` by one. The empty
/// graph is excluded.
///
/// `min_class` must name a table class of area `V` coming from the divisor;
/// `max_insertions` caps the number of divisor tails per component.
pub fn build_dpt_index(
    ctx: &GraphContext,
    min_class: &str,
    max_insertions: usize,
) -> Result<GraphPoset> {
    ctx.validate()?;
    let v = ctx
        .v
        .clone()
        .ok_or_else(|| Error::VInfinite("the divisor is not uniruled".into()))?;
    let min_data = ctx.class_data(min_class)?;
    if min_data.area != v {
        return Err(Error::PreconditionViolation(format!(
            "class {min_class:?} has area {}, expected V = {}",
            crate::surface::rational_to_string(&min_data.area),
            crate::surface::rational_to_string(&v)
        )));
    }
    if !min_data.in_iota_image {
        return Err(Error::PreconditionViolation(format!(
            "class {min_class:?} does not come from the divisor"
        )));
    }
    check_enumerable(ctx, true)?;
    // At n = 3 the dimension cannot pin component genera, so only the
    // all-genus-zero part of the index is materialized; total arithmetic
    // genus zero then forces connectedness. Elsewhere genera are solved
    // from the dimension.
    let genus_rule = if ctx.n == 3 {
        GenusRule::Fixed(0)
    } else {
        check_enumerable(ctx, false)?;
        GenusRule::Solve
    };
    let point_degree = ctx.point_degree();
    let has_point = |list: &GraphList| {
        list.components().iter().any(|c| {
            c.d_tails
                .pairs()
                .iter()
                .any(|(_, w)| w.degree == point_degree)
        })
    };

    let mut elements: Vec<GraphList> = Vec::new();

    // Admissible part: unions with a point insertion and genus zero.
    let candidates = standard_connected_with_total(
        ctx,
        &v,
        |data| Some(data.d_dot),
        genus_rule,
        Some(max_insertions),
    )?;
    let areas: Vec<BigRational> = candidates
        .iter()
        .map(|c| ctx.class_data(&c.class_id).map(|d| d.area.clone()))
        .collect::<Result<_>>()?;
    for union in component_unions(&candidates, &areas, &v) {
        if union.total_genus() == 0 && has_point(&union) {
            elements.push(union);
        }
    }

    // Strictly sup-admissible part: connected, genus zero, class of area
    // exactly V from the divisor, total multiplicity D.A + 1, containing a
    // point insertion.
    let sup_candidates = standard_connected_with_total(
        ctx,
        &v,
        |data| {
            if data.in_iota_image && data.area == v {
                Some(data.d_dot + 1)
            } else {
                None
            }
        },
        GenusRule::Fixed(0),
        Some(max_insertions),
    )?;
    for graph in sup_candidates {
        let list = GraphList::singleton(graph);
        if has_point(&list) {
            elements.push(list);
        }
    }

    GraphPoset::new(elements, ctx.clone(), false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::ClassData;
    use num::bigint::BigInt;

    fn w(deg: u32, label: &str) -> CohWeight {
        CohWeight::new(deg, label)
    }

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    /// n = 4 context: divisor point class has degree 6. Class "A" supports
    /// a standard genus-0 graph with one point tail: dimension
    /// 2[c1 + 1 + d_dot] - 6 = 0 needs c1 + d_dot = 2.
    fn ctx_n4() -> GraphContext {
        let mut classes = BTreeMap::new();
        classes.insert(
            "A".to_string(),
            ClassData {
                area: rat(1),
                c1: 1,
                d_dot: 1,
                in_iota_image: true,
            },
        );
        classes.insert(
            "B".to_string(),
            ClassData {
                area: rat(2),
                c1: 2,
                d_dot: 2,
                in_iota_image: false,
            },
        );
        GraphContext {
            n: 4,
            c_min: rat(1),
            v: Some(rat(1)),
            classes,
            theta: vec![w(6, "pt"), w(0, "one")],
            xi: vec![],
        }
    }

    fn point_graph(class: &str, mult: u32) -> ColoredGraph {
        ColoredGraph::new(
            0,
            class,
            vec![],
            WeightedPartition::new(vec![(mult, w(6, "pt"))]),
        )
    }

    #[test]
    fn linear_extension_puts_empty_first() {
        let ctx = ctx_n4();
        let g = GraphList::singleton(point_graph("A", 1));
        let poset = GraphPoset::new(vec![g.clone(), GraphList::empty()], ctx, false).unwrap();
        assert_eq!(poset.elements()[0], GraphList::empty());
        assert_eq!(poset.elements()[1], g);
    }

    #[test]
    fn linear_extension_sorts_chains_and_breaks_ties() {
        let ctx = ctx_n4();
        let a = GraphList::singleton(point_graph("A", 1));
        let b = a.union(&a);
        let c = b.union(&a);
        // Areas 1 < 2 < 3 form a chain; shuffled input comes out sorted.
        let poset = GraphPoset::new(vec![c.clone(), a.clone(), b.clone()], ctx, false).unwrap();
        assert_eq!(poset.elements(), &[a, b, c]);
        assert_eq!(poset.compare(0, 2).unwrap(), GraphOrd::Less);
    }

    #[test]
    fn antichains_fall_back_to_serialization_order() {
        let ctx = ctx_n4();
        // Two strictly sup-admissible graphs on class A (in the divisor
        // image) are incomparable; the extension orders them by their
        // canonical serialization, stably across input orders.
        let s1 = GraphList::singleton(point_graph("A", 2));
        let s2 = GraphList::singleton(ColoredGraph::new(
            0,
            "A",
            vec![],
            WeightedPartition::new(vec![(2, w(0, "one"))]),
        ));
        let forward = GraphPoset::new(vec![s1.clone(), s2.clone()], ctx.clone(), false).unwrap();
        let backward = GraphPoset::new(vec![s2.clone(), s1.clone()], ctx, false).unwrap();
        assert_eq!(forward.elements(), backward.elements());
        assert_eq!(forward.compare(0, 1).unwrap(), GraphOrd::Incomparable);
        let mut keys = [s1.canonical_key(), s2.canonical_key()];
        keys.sort();
        assert_eq!(forward.canonical_keys(), &keys[..]);
    }

    #[test]
    fn positional_posets_are_totally_ordered() {
        let a = GraphList::singleton(point_graph("A", 1));
        let b = GraphList::singleton(point_graph("B", 2));
        let poset = GraphPoset::from_linear_order(vec![a, b]).unwrap();
        assert_eq!(poset.compare(0, 1).unwrap(), GraphOrd::Less);
        assert!(poset.entry_allowed(1, 0).unwrap());
        assert!(!poset.entry_allowed(0, 1).unwrap());
    }

    #[test]
    fn equal_key_entries_follow_the_stored_extension() {
        // Two graphs differing only in a same-degree label compare Equal
        // but are distinct elements; a coefficient between them is accepted
        // only with the column preceding the row in the extension.
        let mut ctx = ctx_n4();
        ctx.theta.push(w(6, "pt2"));
        let g1 = GraphList::singleton(point_graph("A", 1));
        let g2 = GraphList::singleton(ColoredGraph::new(
            0,
            "A",
            vec![],
            WeightedPartition::new(vec![(1, w(6, "pt2"))]),
        ));
        let poset = GraphPoset::new(vec![g1, g2], ctx, false).unwrap();
        assert_eq!(poset.compare(0, 1).unwrap(), GraphOrd::Equal);
        assert!(poset.entry_allowed(1, 0).unwrap());
        assert!(!poset.entry_allowed(0, 1).unwrap());
    }

    #[test]
    fn lower_set_solves_genera_downward_below_three() {
        // n = 2: the genus term 2(n-3)(1-g) has slope +2 in g, so higher
        // ambient-tail counts force lower genera; the degree-1 weight
        // contributes +1 per insertion.
        let mut classes = BTreeMap::new();
        classes.insert(
            "A".to_string(),
            ClassData {
                area: rat(1),
                c1: 1,
                d_dot: 1,
                in_iota_image: true,
            },
        );
        let ctx = GraphContext {
            n: 2,
            c_min: rat(1),
            v: Some(rat(1)),
            classes,
            theta: vec![w(2, "pt")],
            xi: vec![w(1, "u")],
        };
        // dim(A, g=0, mu=(1,pt)) = 2[1 - 1 + 1] + (2 - 2 - 2) = 0.
        let root = GraphList::singleton(ColoredGraph::new(
            0,
            "A",
            vec![],
            WeightedPartition::new(vec![(1, w(2, "pt"))]),
        ));
        assert!(is_standard(&root, &ctx).standard);
        let poset = lower_set(&root, &ctx, false).unwrap();
        assert!(poset.index_of(&root).is_some());
        // Two degree-1 tails would force genus -1, below the bound
        // 1 - 1/1 = 0, so no tailed variant survives.
        assert_eq!(poset.len(), 1);
        for e in poset.elements() {
            for c in e.components() {
                assert!(c.x_tails.is_empty());
                assert!(c.genus >= 0);
            }
        }
    }

    #[test]
    fn lower_set_of_empty_root() {
        let ctx = ctx_n4();
        let poset = lower_set(&GraphList::empty(), &ctx, false).unwrap();
        assert_eq!(poset.len(), 1);
        assert!(poset.elements()[0].is_empty());
    }

    #[test]
    fn lower_set_on_a_two_class_context() {
        let ctx = ctx_n4();
        let root = GraphList::singleton(point_graph("A", 1));
        assert!(is_standard(&root, &ctx).standard);
        let poset = lower_set(&root, &ctx, false).unwrap();
        // Everything in the lower set has area at most the root's.
        for e in poset.elements() {
            assert!(e.total_area(&ctx).unwrap() <= root.total_area(&ctx).unwrap());
        }
        assert!(poset.index_of(&root).is_some());
    }

    #[test]
    fn lower_set_rejects_non_standard_roots() {
        let ctx = ctx_n4();
        let bad = GraphList::singleton(ColoredGraph::new(
            5,
            "A",
            vec![],
            WeightedPartition::new(vec![(1, w(6, "pt"))]),
        ));
        assert!(matches!(
            lower_set(&bad, &ctx, false),
            Err(Error::PreconditionViolation(_))
        ));
    }

    #[test]
    fn context_finiteness_guards() {
        let mut ctx = ctx_n4();
        ctx.xi = vec![w(2, "bad")];
        let root = GraphList::singleton(point_graph("A", 1));
        assert!(matches!(
            lower_set(&root, &ctx, false),
            Err(Error::ContextNotFinite(_))
        ));

        let mut ctx = ctx_n4();
        ctx.xi = vec![w(1, "up"), w(3, "down")];
        assert!(matches!(
            lower_set(&root, &ctx, false),
            Err(Error::ContextNotFinite(_))
        ));

        // Positive contributions with n > 3 leave the genus unbounded.
        let mut ctx = ctx_n4();
        ctx.xi = vec![w(1, "up")];
        assert!(matches!(
            lower_set(&root, &ctx, false),
            Err(Error::ContextNotFinite(_))
        ));
    }

    #[test]
    fn dpt_index_requires_finite_v() {
        let mut ctx = ctx_n4();
        ctx.v = None;
        assert!(matches!(
            build_dpt_index(&ctx, "A", 3),
            Err(Error::VInfinite(_))
        ));
    }

    #[test]
    fn dpt_index_excludes_empty_and_has_point_insertions() {
        let ctx = ctx_n4();
        let poset = build_dpt_index(&ctx, "A", 3).unwrap();
        assert!(!poset.is_empty());
        for e in poset.elements() {
            assert!(!e.is_empty());
            let has_point = e
                .components()
                .iter()
                .any(|c| c.d_tails.pairs().iter().any(|(_, wt)| wt.degree == 6));
            assert!(
                has_point,
                "missing point insertion in {}",
                e.canonical_key()
            );
        }
    }
}
