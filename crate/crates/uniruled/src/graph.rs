//! Colored weighted graphs: a single vertex carrying a genus and a curve
//! class, decorated with ambient-space tails (each weighted by a cohomology
//! class of the total space) and divisor tails (each weighted by a
//! multiplicity and a cohomology class of the divisor). Finite disjoint
//! unions of such graphs are the index set of the correspondence transforms.
//!
//! Geometry enters only through a [`GraphContext`]: a finite table of
//! effective classes with their areas, first Chern numbers and intersection
//! numbers with the divisor, plus the two fixed cohomology bases.

use std::collections::BTreeMap;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::surface::{parse_rational, rational_to_string};

/// A cohomology weight: a degree and a label naming a fixed basis element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CohWeight {
    #[serde(rename = "deg")]
    pub degree: u32,
    pub label: String,
}

impl CohWeight {
    pub fn new(degree: u32, label: impl Into<String>) -> Self {
        CohWeight {
            degree,
            label: label.into(),
        }
    }
}

/// Outcome of the size relation on (multiplicity, weight) pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SizeOrd {
    Greater,
    Less,
    EqualSize,
}

/// Size relation: multiplicity first, then weight degree. Labels never
/// participate, so distinct pairs can be equal in size.
pub fn size_compare(p: &(u32, CohWeight), q: &(u32, CohWeight)) -> SizeOrd {
    match p.0.cmp(&q.0) {
        std::cmp::Ordering::Greater => SizeOrd::Greater,
        std::cmp::Ordering::Less => SizeOrd::Less,
        std::cmp::Ordering::Equal => match p.1.degree.cmp(&q.1.degree) {
            std::cmp::Ordering::Greater => SizeOrd::Greater,
            std::cmp::Ordering::Less => SizeOrd::Less,
            std::cmp::Ordering::Equal => SizeOrd::EqualSize,
        },
    }
}

/// Outcome of the lexicographic comparison of weighted partitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LexOrd {
    LexGreater,
    LexLess,
    LexEqual,
}

/// An ordered multiset of (multiplicity, divisor-cohomology-weight) pairs,
/// stored canonically in decreasing order by size.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<(u32, CohWeight)>", into = "Vec<(u32, CohWeight)>")]
pub struct WeightedPartition {
    pairs: Vec<(u32, CohWeight)>,
}

impl WeightedPartition {
    pub fn new(pairs: Vec<(u32, CohWeight)>) -> Self {
        let mut pairs = pairs;
        canonicalize_pairs(&mut pairs);
        WeightedPartition { pairs }
    }

    pub fn empty() -> Self {
        WeightedPartition { pairs: Vec::new() }
    }

    pub fn pairs(&self) -> &[(u32, CohWeight)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Total multiplicity.
    pub fn total(&self) -> i64 {
        self.pairs.iter().map(|(m, _)| *m as i64).sum()
    }

    /// Sum of the weight degrees.
    pub fn degree(&self) -> i64 {
        self.pairs.iter().map(|(_, w)| w.degree as i64).sum()
    }

    /// Multiset union with another partition.
    pub fn merge(&self, other: &WeightedPartition) -> WeightedPartition {
        let mut pairs = self.pairs.clone();
        pairs.extend(other.pairs.iter().cloned());
        WeightedPartition::new(pairs)
    }
}

impl From<Vec<(u32, CohWeight)>> for WeightedPartition {
    fn from(pairs: Vec<(u32, CohWeight)>) -> Self {
        WeightedPartition::new(pairs)
    }
}

impl From<WeightedPartition> for Vec<(u32, CohWeight)> {
    fn from(p: WeightedPartition) -> Self {
        p.pairs
    }
}

fn canonicalize_pairs(pairs: &mut [(u32, CohWeight)]) {
    // Decreasing by size; ties broken by label so that serialization is
    // canonical. The label order is invisible to the size and lex relations.
    pairs.sort_by(|a, b| {
        b.0.cmp(&a.0)
            .then(b.1.degree.cmp(&a.1.degree))
            .then(a.1.label.cmp(&b.1.label))
    });
}

/// Lexicographic comparison of two canonically ordered partitions: the first
/// position at which the sizes differ decides. When one partition is a strict
/// size-prefix of the other, the longer partition is the greater; adding a
/// pair therefore strictly increases the lex order.
pub fn lex_compare(mu: &WeightedPartition, nu: &WeightedPartition) -> LexOrd {
    for (p, q) in mu.pairs.iter().zip(nu.pairs.iter()) {
        match size_compare(p, q) {
            SizeOrd::Greater => return LexOrd::LexGreater,
            SizeOrd::Less => return LexOrd::LexLess,
            SizeOrd::EqualSize => {}
        }
    }
    match mu.len().cmp(&nu.len()) {
        std::cmp::Ordering::Greater => LexOrd::LexGreater,
        std::cmp::Ordering::Less => LexOrd::LexLess,
        std::cmp::Ordering::Equal => LexOrd::LexEqual,
    }
}

/// Per-class data in the effective-class table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassData {
    /// Symplectic area of the class; positive except for the zero class.
    #[serde(with = "rat_string")]
    pub area: BigRational,
    /// First Chern pairing.
    pub c1: i64,
    /// Intersection number with the divisor.
    pub d_dot: i64,
    /// Whether the class comes from the divisor.
    pub in_iota_image: bool,
}

/// The finite geometric input: half-dimension of the ambient space, the
/// effective-class table, the minimal curve area, the minimal
/// divisor-uniruled area `V` (absent when the divisor is not uniruled), and
/// the two cohomology bases.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphContext {
    /// Half-dimension of the ambient space (real dimension 2n).
    pub n: u32,
    /// Minimal symplectic area of a connected non-constant curve.
    #[serde(with = "rat_string")]
    pub c_min: BigRational,
    /// Minimal area of a divisor class with a nonzero point-inserted
    /// invariant; `None` means infinite.
    #[serde(default, with = "opt_rat_string")]
    pub v: Option<BigRational>,
    /// Effective classes, keyed by an arbitrary name.
    pub classes: BTreeMap<String, ClassData>,
    /// Basis of the divisor cohomology (degrees at most 2n-2).
    pub theta: Vec<CohWeight>,
    /// Basis of the ambient cohomology (degrees at most 2n).
    pub xi: Vec<CohWeight>,
}

impl GraphContext {
    /// Checks the structural invariants of the table.
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::PreconditionViolation(
                "half-dimension n must be at least 1".into(),
            ));
        }
        if !self.c_min.is_positive() {
            return Err(Error::PreconditionViolation(
                "c_min must be strictly positive".into(),
            ));
        }
        if let Some(v) = &self.v {
            if !v.is_positive() {
                return Err(Error::PreconditionViolation(
                    "V must be strictly positive when finite".into(),
                ));
            }
        }
        for (key, data) in &self.classes {
            if data.area.is_negative() {
                return Err(Error::PreconditionViolation(format!(
                    "class {key:?} has negative area"
                )));
            }
        }
        let d_cap = 2 * self.n - 2;
        for w in &self.theta {
            if w.degree > d_cap {
                return Err(Error::PreconditionViolation(format!(
                    "divisor weight {:?} exceeds degree bound {d_cap}",
                    w.label
                )));
            }
        }
        let x_cap = 2 * self.n;
        for w in &self.xi {
            if w.degree > x_cap {
                return Err(Error::PreconditionViolation(format!(
                    "ambient weight {:?} exceeds degree bound {x_cap}",
                    w.label
                )));
            }
        }
        Ok(())
    }

    pub fn class_data(&self, key: &str) -> Result<&ClassData> {
        self.classes
            .get(key)
            .ok_or_else(|| Error::MissingClassData(format!("class {key:?} not in the table")))
    }

    /// Degree of the divisor point class.
    pub fn point_degree(&self) -> u32 {
        2 * self.n - 2
    }

    /// True for divisor weights Poincare-dual to a point.
    pub fn is_point_weight(&self, w: &CohWeight) -> bool {
        w.degree == self.point_degree()
    }
}

/// A connected colored weighted graph: one vertex with a genus and a class,
/// ambient tails `x_tails` and divisor tails `d_tails`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "RawColoredGraph")]
pub struct ColoredGraph {
    pub genus: i64,
    #[serde(rename = "class")]
    pub class_id: String,
    pub x_tails: Vec<CohWeight>,
    pub d_tails: WeightedPartition,
}

#[derive(Deserialize)]
struct RawColoredGraph {
    genus: i64,
    #[serde(rename = "class")]
    class_id: String,
    #[serde(default)]
    x_tails: Vec<CohWeight>,
    #[serde(default)]
    d_tails: WeightedPartition,
}

impl Default for WeightedPartition {
    fn default() -> Self {
        WeightedPartition::empty()
    }
}

impl From<RawColoredGraph> for ColoredGraph {
    fn from(raw: RawColoredGraph) -> Self {
        ColoredGraph::new(raw.genus, raw.class_id, raw.x_tails, raw.d_tails)
    }
}

impl ColoredGraph {
    pub fn new(
        genus: i64,
        class_id: impl Into<String>,
        x_tails: Vec<CohWeight>,
        d_tails: WeightedPartition,
    ) -> Self {
        let mut x_tails = x_tails;
        // Canonical tail order: descending degree, then label.
        x_tails.sort_by(|a, b| b.degree.cmp(&a.degree).then(a.label.cmp(&b.label)));
        ColoredGraph {
            genus,
            class_id: class_id.into(),
            x_tails,
            d_tails,
        }
    }

    /// Number of degree-1 ambient insertions.
    pub fn x_degree_one_count(&self) -> i64 {
        self.x_tails.iter().filter(|w| w.degree == 1).count() as i64
    }
}

/// Admissibility of a connected graph: total divisor-tail multiplicity
/// compared with the intersection number of its class with the divisor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Admissibility {
    Admissible,
    StrictlySupAdmissible,
    StrictlySubAdmissible,
}

/// Compares the total multiplicity with `D.A`. Exceeding it is only
/// meaningful for classes coming from the divisor; other graphs fit no
/// category and are reported as an error.
pub fn classify(graph: &ColoredGraph, ctx: &GraphContext) -> Result<Admissibility> {
    let data = ctx.class_data(&graph.class_id)?;
    let total = graph.d_tails.total();
    match total.cmp(&data.d_dot) {
        std::cmp::Ordering::Equal => Ok(Admissibility::Admissible),
        std::cmp::Ordering::Less => Ok(Admissibility::StrictlySubAdmissible),
        std::cmp::Ordering::Greater => {
            if data.in_iota_image {
                Ok(Admissibility::StrictlySupAdmissible)
            } else {
                Err(Error::NotSupAdmissible(format!(
                    "graph on class {:?} has total multiplicity {total} > D.A = {} \
                     but the class does not come from the divisor",
                    graph.class_id, data.d_dot
                )))
            }
        }
    }
}

/// Expected dimension of a connected graph:
/// `2[C1(A) + (n-3)(1-g) + D.A] + sum_i (2 - 2 mu_i - deg beta_i)
///  + #(deg-1 ambient insertions) + sum_{deg alpha != 1} (2 - deg alpha)`.
pub fn dimension(graph: &ColoredGraph, ctx: &GraphContext) -> Result<i64> {
    let data = ctx.class_data(&graph.class_id)?;
    let n = ctx.n as i64;
    let mut dim = 2 * (data.c1 + (n - 3) * (1 - graph.genus) + data.d_dot);
    for (m, w) in graph.d_tails.pairs() {
        dim += 2 - 2 * (*m as i64) - w.degree as i64;
    }
    for w in &graph.x_tails {
        if w.degree == 1 {
            dim += 1;
        } else {
            dim += 2 - w.degree as i64;
        }
    }
    Ok(dim)
}

/// A finite disjoint union of connected graphs; the empty union is the
/// distinguished empty graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GraphList {
    components: Vec<ColoredGraph>,
}

impl GraphList {
    pub fn new(components: Vec<ColoredGraph>) -> Self {
        let mut components = components;
        components.sort();
        GraphList { components }
    }

    pub fn empty() -> Self {
        GraphList {
            components: Vec::new(),
        }
    }

    pub fn singleton(graph: ColoredGraph) -> Self {
        GraphList {
            components: vec![graph],
        }
    }

    pub fn components(&self) -> &[ColoredGraph] {
        &self.components
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Multiset union with another list; the empty graph is the identity.
    pub fn union(&self, other: &GraphList) -> GraphList {
        let mut components = self.components.clone();
        components.extend(other.components.iter().cloned());
        GraphList::new(components)
    }

    /// Total arithmetic genus `1 + sum (g_i - 1)`.
    pub fn total_genus(&self) -> i64 {
        1 + self.components.iter().map(|c| c.genus - 1).sum::<i64>()
    }

    /// Total symplectic area of the union class.
    pub fn total_area(&self, ctx: &GraphContext) -> Result<BigRational> {
        let mut area = BigRational::zero();
        for c in &self.components {
            area += ctx.class_data(&c.class_id)?.area.clone();
        }
        Ok(area)
    }

    /// Total number of ambient tails.
    pub fn x_tail_count(&self) -> i64 {
        self.components.iter().map(|c| c.x_tails.len() as i64).sum()
    }

    /// All divisor tails of all components, as one canonical partition.
    pub fn merged_partition(&self) -> WeightedPartition {
        let mut pairs = Vec::new();
        for c in &self.components {
            pairs.extend(c.d_tails.pairs().iter().cloned());
        }
        WeightedPartition::new(pairs)
    }

    /// Sum of component dimensions; zero for the empty graph.
    pub fn dimension(&self, ctx: &GraphContext) -> Result<i64> {
        let mut total = 0;
        for c in &self.components {
            total += dimension(c, ctx)?;
        }
        Ok(total)
    }

    /// Stable serialization used for deduplication and tie-breaking.
    pub fn canonical_key(&self) -> String {
        serde_json::to_string(self).expect("graph lists always serialize")
    }
}

impl Serialize for GraphList {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        if self.components.is_empty() {
            serializer.serialize_str("empty")
        } else {
            self.components.serialize(serializer)
        }
    }
}

impl<'de> Deserialize<'de> for GraphList {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Word(String),
            Components(Vec<ColoredGraph>),
        }
        match Repr::deserialize(deserializer)? {
            Repr::Word(w) if w == "empty" => Ok(GraphList::empty()),
            Repr::Word(w) => Err(serde::de::Error::custom(format!(
                "expected \"empty\" or an array of graphs, got {w:?}"
            ))),
            Repr::Components(c) => Ok(GraphList::new(c)),
        }
    }
}

/// Builds the disjoint union of connected graphs.
pub fn disjoint_union(graphs: Vec<ColoredGraph>) -> GraphList {
    GraphList::new(graphs)
}

/// Result of the standardness check, with one reason per failed clause.
#[derive(Debug, Clone)]
pub struct StandardReport {
    pub standard: bool,
    pub reasons: Vec<String>,
}

/// A connected graph is standard when its class is a nonzero effective
/// class, the genus respects `g >= -area/c_min + 1`, every ambient tail is
/// a basis element, every divisor tail has positive multiplicity and a basis
/// weight, and the expected dimension vanishes.
pub fn is_standard_connected(graph: &ColoredGraph, ctx: &GraphContext) -> StandardReport {
    let mut reasons = Vec::new();
    match ctx.classes.get(&graph.class_id) {
        None => reasons.push(format!("class {:?} is not effective", graph.class_id)),
        Some(data) => {
            if !data.area.is_positive() {
                reasons.push(format!("class {:?} is the zero class", graph.class_id));
            } else {
                // g >= -area/c_min + 1, exactly.
                let bound = BigRational::one() - &data.area / &ctx.c_min;
                if BigRational::from_integer(BigInt::from(graph.genus)) < bound {
                    reasons.push(format!(
                        "genus {} is below the bound {}",
                        graph.genus,
                        rational_to_string(&bound)
                    ));
                }
            }
        }
    }
    for w in &graph.x_tails {
        if !ctx.xi.contains(w) {
            reasons.push(format!(
                "ambient tail {:?} (degree {}) is not a basis element",
                w.label, w.degree
            ));
        }
    }
    for (m, w) in graph.d_tails.pairs() {
        if *m == 0 {
            reasons.push(format!("divisor tail {:?} has zero multiplicity", w.label));
        }
        if !ctx.theta.contains(w) {
            reasons.push(format!(
                "divisor tail {:?} (degree {}) is not a basis element",
                w.label, w.degree
            ));
        }
    }
    if reasons.is_empty() {
        match dimension(graph, ctx) {
            Ok(0) => {}
            Ok(d) => reasons.push(format!("dimension is {d}, not 0")),
            Err(e) => reasons.push(e.to_string()),
        }
    }
    StandardReport {
        standard: reasons.is_empty(),
        reasons,
    }
}

/// A list is standard when it is nonempty and every component is standard.
pub fn is_standard(list: &GraphList, ctx: &GraphContext) -> StandardReport {
    if list.is_empty() {
        return StandardReport {
            standard: false,
            reasons: vec!["the empty graph has no nonzero effective class".into()],
        };
    }
    let mut reasons = Vec::new();
    for (i, c) in list.components().iter().enumerate() {
        let report = is_standard_connected(c, ctx);
        for r in report.reasons {
            reasons.push(format!("component {i}: {r}"));
        }
    }
    StandardReport {
        standard: reasons.is_empty(),
        reasons,
    }
}

/// Serialization of rationals as `p/q` strings.
pub(crate) mod rat_string {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(
        value: &BigRational,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&rational_to_string(value))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<BigRational, D::Error> {
        let text = String::deserialize(deserializer)?;
        parse_rational(&text).map_err(serde::de::Error::custom)
    }
}

pub(crate) mod opt_rat_string {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(
        value: &Option<BigRational>,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        match value {
            Some(v) => serializer.serialize_some(&rational_to_string(v)),
            None => serializer.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Option<BigRational>, D::Error> {
        let text: Option<String> = Option::deserialize(deserializer)?;
        match text {
            None => Ok(None),
            Some(t) => parse_rational(&t)
                .map(Some)
                .map_err(serde::de::Error::custom),
        }
    }
}
