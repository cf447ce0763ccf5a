//! Enumeration and classification of curve classes on blow-ups of the plane:
//! (-1) classes, fiber classes, reduced classes, Cremona reduction, and
//! minimal-area searches under a symplectic form.
//!
//! A fiber class `(a|b1,...,bk)` is a primitive class with `a >= 0`,
//! `b_i >= 0`, `a^2 = sum b_i^2` and `3a = sum b_i + 2`. A (-1) class has
//! square -1 and first Chern pairing 1. Both enumerations are exhaustive for
//! `k <= 8`, where Cauchy-Schwarz applied to the linear condition yields a
//! finite range for the leading coefficient.

use std::collections::BTreeSet;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::surface::{DivisorClass, SurfaceModel, SymplecticForm};

/// A class with self-intersection -1 and first Chern pairing 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct MinusOneClass {
    class: DivisorClass,
}

impl MinusOneClass {
    pub fn new(class: DivisorClass) -> Result<Self> {
        if class.self_intersection() != BigInt::from(-1) {
            return Err(Error::PreconditionViolation(format!(
                "{class} has self-intersection {}, expected -1",
                class.self_intersection()
            )));
        }
        if class.c1_pairing() != BigInt::from(1) {
            return Err(Error::PreconditionViolation(format!(
                "{class} has C1 pairing {}, expected 1",
                class.c1_pairing()
            )));
        }
        Ok(MinusOneClass { class })
    }

    pub fn class(&self) -> &DivisorClass {
        &self.class
    }

    pub fn into_class(self) -> DivisorClass {
        self.class
    }
}

/// A primitive square-zero class of a genus-zero embedded sphere:
/// `a >= 0`, `b_i >= 0`, `a^2 = sum b_i^2`, `3a = sum b_i + 2`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FiberClass {
    class: DivisorClass,
}

impl FiberClass {
    pub fn new(class: DivisorClass) -> Result<Self> {
        let k = match class.model() {
            SurfaceModel::BlowupOfP2 { k } => *k,
            other => {
                return Err(Error::ModelMismatch(format!(
                    "fiber classes live on blow-ups, not {other:?}"
                )))
            }
        };
        let a = &class.coeffs()[0];
        let bs = &class.coeffs()[1..];
        if a.is_negative() || bs.iter().any(|b| b.is_negative()) {
            return Err(Error::PreconditionViolation(format!(
                "{class} has a negative coefficient"
            )));
        }
        let sq: BigInt = bs.iter().map(|b| b * b).sum();
        if a * a != sq {
            return Err(Error::PreconditionViolation(format!(
                "{class} is not square-zero on the blow-up of {k} points"
            )));
        }
        let sum: BigInt = bs.iter().sum();
        if BigInt::from(3) * a != sum + BigInt::from(2) {
            return Err(Error::PreconditionViolation(format!(
                "{class} fails the genus-zero adjunction condition"
            )));
        }
        if !class.is_primitive() {
            return Err(Error::PreconditionViolation(format!(
                "{class} is not primitive"
            )));
        }
        Ok(FiberClass { class })
    }

    pub fn class(&self) -> &DivisorClass {
        &self.class
    }

    pub fn into_class(self) -> DivisorClass {
        self.class
    }
}

/// All classes `(a; b)` on the blow-up of `k` points with square -1 and
/// first Chern pairing 1, sorted lexicographically by coefficient vector.
///
/// For `k <= 8` the search range is derived from Cauchy-Schwarz:
/// `(3a-1)^2 <= k(a^2+1)` for any solution. For `k >= 9` the set is
/// infinite and an explicit `a_bound` must be supplied.
pub fn enumerate_minus_one_classes(k: usize, a_bound: Option<i64>) -> Result<Vec<MinusOneClass>> {
    if k == 0 {
        return Ok(Vec::new());
    }
    if k > 8 && a_bound.is_none() {
        return Err(Error::UnboundedEnumeration(format!(
            "infinitely many -1 classes for k = {k}; supply a bound on |a|"
        )));
    }
    let feasible = |a: i64| -> bool {
        if k <= 8 {
            // (9-k) a^2 - 6a + (1-k) <= 0
            (9 - k as i64) * a * a - 6 * a + (1 - k as i64) <= 0
        } else {
            true
        }
    };
    let limit = match a_bound {
        Some(b) if b >= 0 => b,
        Some(b) => {
            return Err(Error::PreconditionViolation(format!(
                "a_bound must be non-negative, got {b}"
            )))
        }
        // For k <= 8 the feasible range is contained in [-2, 8].
        None => 8,
    };
    let mut out = Vec::new();
    for a in -limit..=limit {
        if !feasible(a) {
            continue;
        }
        let (Some(target_sum), Some(target_sq)) = (
            3i64.checked_mul(a).and_then(|v| v.checked_sub(1)),
            a.checked_mul(a).and_then(|v| v.checked_add(1)),
        ) else {
            return Err(Error::PreconditionViolation(
                "coefficient bound overflows the search arithmetic".into(),
            ));
        };
        if target_sq < 0 {
            continue;
        }
        let mut prefix = Vec::with_capacity(k);
        collect_square_sum_vectors(k, target_sum, target_sq, &mut prefix, &mut |b| {
            let mut coeffs = Vec::with_capacity(k + 1);
            coeffs.push(a);
            coeffs.extend_from_slice(b);
            out.push(coeffs);
        });
    }
    out.sort();
    out.dedup();
    out.into_iter()
        .map(|coeffs| {
            let class = DivisorClass::from_i64(SurfaceModel::blowup(k), &coeffs)?;
            MinusOneClass::new(class)
        })
        .collect()
}

/// Depth-first enumeration of integer vectors with a prescribed sum and sum
/// of squares, pruned by the square budget and Cauchy-Schwarz feasibility.
fn collect_square_sum_vectors(
    slots: usize,
    rem_sum: i64,
    rem_sq: i64,
    prefix: &mut Vec<i64>,
    sink: &mut impl FnMut(&[i64]),
) {
    if slots == 0 {
        if rem_sum == 0 && rem_sq == 0 {
            sink(prefix);
        }
        return;
    }
    if rem_sq < 0 {
        return;
    }
    // rem_sum^2 <= slots * rem_sq is necessary for a real solution.
    if rem_sum.saturating_mul(rem_sum) > (slots as i64).saturating_mul(rem_sq) {
        return;
    }
    let bound = isqrt(rem_sq);
    for b in -bound..=bound {
        prefix.push(b);
        collect_square_sum_vectors(slots - 1, rem_sum - b, rem_sq - b * b, prefix, sink);
        prefix.pop();
    }
}

fn isqrt(v: i64) -> i64 {
    if v <= 0 {
        return 0;
    }
    let mut r = (v as f64).sqrt() as i64;
    while (r + 1) * (r + 1) <= v {
        r += 1;
    }
    while r * r > v {
        r -= 1;
    }
    r
}

/// All fiber classes on the blow-up of `k` points, `1 <= k <= 8`.
///
/// With `expand_permutations = false` one representative per orbit of the
/// symmetric group on the exceptional classes is returned, with the `b`
/// vector sorted descending. With `true` every permutation is listed.
/// Output is sorted lexicographically by coefficient vector. `k = 0` yields
/// the empty list; see [`plane_minimal_uniruled`] for the plane itself.
pub fn enumerate_fiber_classes(k: usize, expand_permutations: bool) -> Result<Vec<FiberClass>> {
    if k == 0 {
        return Ok(Vec::new());
    }
    if k > 8 {
        return Err(Error::UnsupportedK(format!(
            "fiber-class enumeration is finite only for k <= 8, got {k}"
        )));
    }
    let mut reps: Vec<Vec<i64>> = Vec::new();
    // Largest a with (9-k) a^2 - 12a + 4 <= 0 is at most 11 for k <= 8.
    for a in 1..=12i64 {
        if (9 - k as i64) * a * a - 12 * a + 4 > 0 {
            continue;
        }
        let target_sum = 3 * a - 2;
        let target_sq = a * a;
        let mut prefix = Vec::with_capacity(k);
        collect_descending_vectors(k, a, target_sum, target_sq, &mut prefix, &mut |b| {
            let mut coeffs = Vec::with_capacity(k + 1);
            coeffs.push(a);
            coeffs.extend_from_slice(b);
            reps.push(coeffs);
        });
    }
    // Primitivity: a common divisor d of all coefficients divides
    // 3a - sum(b) = 2, so only d = 2 needs excluding.
    reps.retain(|coeffs| gcd_all(coeffs) == 1);
    let mut vectors: Vec<Vec<i64>> = if expand_permutations {
        let mut all = Vec::new();
        for rep in &reps {
            for perm in multiset_permutations(&rep[1..]) {
                let mut coeffs = Vec::with_capacity(rep.len());
                coeffs.push(rep[0]);
                coeffs.extend(perm);
                all.push(coeffs);
            }
        }
        all
    } else {
        reps
    };
    vectors.sort();
    vectors.dedup();
    vectors
        .into_iter()
        .map(|coeffs| {
            let class = DivisorClass::from_i64(SurfaceModel::blowup(k), &coeffs)?;
            FiberClass::new(class)
        })
        .collect()
}

/// Descending non-negative vectors with prescribed sum and sum of squares,
/// entries at most `cap`.
fn collect_descending_vectors(
    slots: usize,
    cap: i64,
    rem_sum: i64,
    rem_sq: i64,
    prefix: &mut Vec<i64>,
    sink: &mut impl FnMut(&[i64]),
) {
    if slots == 0 {
        if rem_sum == 0 && rem_sq == 0 {
            sink(prefix);
        }
        return;
    }
    if rem_sum < 0 || rem_sq < 0 {
        return;
    }
    if rem_sum > cap * slots as i64 {
        return;
    }
    for b in (0..=cap.min(rem_sum)).rev() {
        if b * b > rem_sq {
            continue;
        }
        prefix.push(b);
        collect_descending_vectors(slots - 1, b, rem_sum - b, rem_sq - b * b, prefix, sink);
        prefix.pop();
    }
}

fn gcd_all(values: &[i64]) -> i64 {
    values.iter().fold(0i64, |g, &v| gcd(g, v.abs()))
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// All distinct permutations of a multiset, in no particular order.
fn multiset_permutations(values: &[i64]) -> Vec<Vec<i64>> {
    let mut uniques: Vec<i64> = values.to_vec();
    uniques.sort_unstable();
    uniques.dedup();
    let mut counts: Vec<usize> = uniques
        .iter()
        .map(|u| values.iter().filter(|v| *v == u).count())
        .collect();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(values.len());
    fn recurse(
        uniques: &[i64],
        counts: &mut [usize],
        current: &mut Vec<i64>,
        total: usize,
        out: &mut Vec<Vec<i64>>,
    ) {
        if current.len() == total {
            out.push(current.clone());
            return;
        }
        for i in 0..uniques.len() {
            if counts[i] == 0 {
                continue;
            }
            counts[i] -= 1;
            current.push(uniques[i]);
            recurse(uniques, counts, current, total, out);
            current.pop();
            counts[i] += 1;
        }
    }
    recurse(&uniques, &mut counts, &mut current, values.len(), &mut out);
    out
}

/// True when `b` is descending non-negative and `a >= b1 + b2 + b3`
/// (with the vector padded by zeros for `k < 3`).
pub fn is_reduced(class: &DivisorClass) -> Result<bool> {
    let SurfaceModel::BlowupOfP2 { .. } = class.model() else {
        return Err(Error::ModelMismatch(
            "reducedness is defined on blow-up models".into(),
        ));
    };
    let a = &class.coeffs()[0];
    let bs = &class.coeffs()[1..];
    if bs.windows(2).any(|w| w[0] < w[1]) {
        return Ok(false);
    }
    if bs.iter().any(|b| b.is_negative()) {
        return Ok(false);
    }
    let zero = BigInt::zero();
    let top3: BigInt = (0..3).map(|i| bs.get(i).unwrap_or(&zero)).sum();
    Ok(*a >= top3)
}

/// One Cremona step: the descending-sorted class it was applied to and the
/// class it produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CremonaMove {
    pub input: DivisorClass,
    pub output: DivisorClass,
}

/// Repeatedly sorts the `b` vector descending and, while `a < b1 + b2 + b3`,
/// applies the Cremona move
/// `a -> 2a - b1 - b2 - b3`, `b_i -> a - (sum of the other two)` for
/// `i in {1,2,3}`. Every move preserves the self-intersection and the first
/// Chern pairing. Fails with `NotReducible` when the class cannot reach a
/// reduced form with positive leading coefficient.
pub fn cremona_reduce(class: &DivisorClass) -> Result<(DivisorClass, Vec<CremonaMove>)> {
    let SurfaceModel::BlowupOfP2 { k } = class.model() else {
        return Err(Error::ModelMismatch(
            "Cremona reduction is defined on blow-up models".into(),
        ));
    };
    let k = *k;
    let padded = k.max(3);
    let mut a = class.coeffs()[0].clone();
    let mut bs: Vec<BigInt> = class.coeffs()[1..].to_vec();
    bs.resize(padded, BigInt::zero());
    let mut log = Vec::new();
    loop {
        bs.sort_unstable_by(|x, y| y.cmp(x));
        let top3: BigInt = bs[..3].iter().sum();
        let nonneg = !bs.iter().any(|b| b.is_negative());
        if nonneg && a >= top3 {
            // Reduced. Trailing padding entries are zero on this path.
            let result = assemble(k, padded, &a, &bs)?;
            return Ok((result, log));
        }
        if !a.is_positive() {
            return Err(Error::NotReducible(format!(
                "reached {} without a reduced form",
                assemble_padded_display(&a, &bs)
            )));
        }
        if a < top3 {
            let before = assemble_any(padded, &a, &bs);
            let new_a = BigInt::from(2) * &a - &top3;
            let (b1, b2, b3) = (bs[0].clone(), bs[1].clone(), bs[2].clone());
            bs[0] = &a - &b2 - &b3;
            bs[1] = &a - &b1 - &b3;
            bs[2] = &a - &b1 - &b2;
            a = new_a;
            let after = assemble_any(padded, &a, &bs);
            log.push(CremonaMove {
                input: before,
                output: after,
            });
        } else {
            // a >= b1+b2+b3 yet not reduced: a negative tail coefficient
            // that no canonical-class-preserving move can repair.
            return Err(Error::NotReducible(format!(
                "{} has a negative coefficient and no move applies",
                assemble_padded_display(&a, &bs)
            )));
        }
    }
}

fn assemble(k: usize, padded: usize, a: &BigInt, bs: &[BigInt]) -> Result<DivisorClass> {
    if k < padded && bs[k..].iter().any(|b| !b.is_zero()) {
        // Cannot happen on the reduced path; moves only touch the padding
        // when they introduce negative entries, which never become reduced.
        return Err(Error::NotReducible(
            "reduction left the original lattice".into(),
        ));
    }
    let mut coeffs = Vec::with_capacity(k + 1);
    coeffs.push(a.clone());
    coeffs.extend_from_slice(&bs[..k]);
    DivisorClass::new(SurfaceModel::blowup(k), coeffs)
}

fn assemble_any(padded: usize, a: &BigInt, bs: &[BigInt]) -> DivisorClass {
    let mut coeffs = Vec::with_capacity(padded + 1);
    coeffs.push(a.clone());
    coeffs.extend_from_slice(bs);
    DivisorClass::new(SurfaceModel::blowup(padded), coeffs).unwrap()
}

fn assemble_padded_display(a: &BigInt, bs: &[BigInt]) -> String {
    let rest: Vec<String> = bs.iter().map(|b| b.to_string()).collect();
    format!("({a}|{})", rest.join(","))
}

/// All unordered pairs of (-1) classes summing to the given fiber class
/// with mutual intersection 1. Requires `2 <= k <= 8`.
pub fn decompose_fiber_class(fiber: &FiberClass) -> Result<Vec<(MinusOneClass, MinusOneClass)>> {
    let SurfaceModel::BlowupOfP2 { k } = fiber.class().model() else {
        unreachable!("fiber classes are validated to live on blow-ups");
    };
    let k = *k;
    if k < 2 {
        return Err(Error::PreconditionViolation(
            "a two-term (-1) decomposition needs k >= 2".into(),
        ));
    }
    if k > 8 {
        return Err(Error::UnboundedEnumeration(format!(
            "the -1 class list is infinite for k = {k}"
        )));
    }
    let minus_ones = enumerate_minus_one_classes(k, None)?;
    decompose_fiber_class_with(fiber, &minus_ones)
}

/// Decomposition search against a caller-supplied (-1) class list; callers
/// batching over many fiber classes enumerate the list once.
pub fn decompose_fiber_class_with(
    fiber: &FiberClass,
    minus_ones: &[MinusOneClass],
) -> Result<Vec<(MinusOneClass, MinusOneClass)>> {
    let index: BTreeSet<&DivisorClass> = minus_ones.iter().map(|m| m.class()).collect();
    let mut pairs = BTreeSet::new();
    for p in minus_ones {
        let q = fiber.class().sub(p.class())?;
        if !index.contains(&q) {
            continue;
        }
        if p.class().pairing(&q)? != BigInt::from(1) {
            continue;
        }
        let (lo, hi) = if *p.class() <= q {
            (p.class().clone(), q)
        } else {
            (q, p.class().clone())
        };
        pairs.insert((lo, hi));
    }
    if pairs.is_empty() {
        return Err(Error::NoDecomposition(format!(
            "{} admits no two-term (-1) decomposition",
            fiber.class()
        )));
    }
    pairs
        .into_iter()
        .map(|(p, q)| Ok((MinusOneClass::new(p)?, MinusOneClass::new(q)?)))
        .collect()
}

/// The outcome of the three necessary uniruledness checks: first Chern
/// pairing at least 2, non-negative square, and non-negative intersection
/// with every witness class carrying a non-trivial invariant.
#[derive(Debug, Clone)]
pub struct UniruledReport {
    pub c1_ok: bool,
    pub square_ok: bool,
    pub pairing_ok: bool,
    pub violating_witnesses: Vec<DivisorClass>,
}

impl UniruledReport {
    pub fn passes_all(&self) -> bool {
        self.c1_ok && self.square_ok && self.pairing_ok
    }
}

/// Default witness list: the (-1) classes together with the hyperplane on a
/// blow-up with `k <= 8`, the two factor classes on the product bundle, and
/// the fiber and section classes on the twisted bundle.
pub fn default_witnesses(model: &SurfaceModel) -> Result<Vec<DivisorClass>> {
    match model {
        SurfaceModel::BlowupOfP2 { k } => {
            if *k > 8 {
                return Err(Error::UnboundedEnumeration(format!(
                    "no finite default witness list for k = {k}; supply one"
                )));
            }
            let mut witnesses: Vec<DivisorClass> = enumerate_minus_one_classes(*k, None)?
                .into_iter()
                .map(MinusOneClass::into_class)
                .collect();
            witnesses.push(DivisorClass::hyperplane(*k));
            Ok(witnesses)
        }
        SurfaceModel::ProductS2xS2 => Ok(vec![
            DivisorClass::from_i64(SurfaceModel::ProductS2xS2, &[1, 0])?,
            DivisorClass::from_i64(SurfaceModel::ProductS2xS2, &[0, 1])?,
        ]),
        SurfaceModel::TwistedS2xS2 => Ok(vec![
            DivisorClass::from_i64(SurfaceModel::TwistedS2xS2, &[1, 0])?,
            DivisorClass::from_i64(SurfaceModel::TwistedS2xS2, &[0, 1])?,
        ]),
    }
}

/// Runs the necessary (not sufficient) uniruledness checks on a class.
/// `witnesses` defaults to [`default_witnesses`] for the class's model.
pub fn uniruled_necessary(
    class: &DivisorClass,
    witnesses: Option<&[DivisorClass]>,
) -> Result<UniruledReport> {
    let owned;
    let witnesses = match witnesses {
        Some(w) => w,
        None => {
            owned = default_witnesses(class.model())?;
            &owned
        }
    };
    let c1_ok = class.c1_pairing() >= BigInt::from(2);
    let square_ok = !class.self_intersection().is_negative();
    let mut violating = Vec::new();
    for w in witnesses {
        if class.pairing(w)?.is_negative() {
            violating.push(w.clone());
        }
    }
    Ok(UniruledReport {
        c1_ok,
        square_ok,
        pairing_ok: violating.is_empty(),
        violating_witnesses: violating,
    })
}

/// The fiber classes of strictly positive area attaining the minimal area
/// under the given form, permutations expanded, ties all returned in
/// lexicographic order.
pub fn minimal_fiber_class(form: &SymplecticForm, k: usize) -> Result<Vec<FiberClass>> {
    if k == 0 || k > 8 {
        return Err(Error::UnsupportedK(format!(
            "the minimal fiber class search needs 1 <= k <= 8, got {k}"
        )));
    }
    if *form.model() != SurfaceModel::blowup(k) {
        return Err(Error::ModelMismatch(format!(
            "form lives on {:?}, expected the blow-up of {k} points",
            form.model()
        )));
    }
    let candidates = enumerate_fiber_classes(k, true)?;
    let mut best: Option<BigRational> = None;
    let mut minimizers: Vec<FiberClass> = Vec::new();
    for fiber in candidates {
        let area = form.area(fiber.class())?;
        if !area.is_positive() {
            continue;
        }
        match &best {
            Some(b) if area > *b => {}
            Some(b) if area == *b => minimizers.push(fiber),
            _ => {
                best = Some(area);
                minimizers = vec![fiber];
            }
        }
    }
    if minimizers.is_empty() {
        return Err(Error::NoPositiveAreaFiberClass(
            "every fiber class has non-positive area; the form vector is not \
             realized by a symplectic form on the blow-up"
                .into(),
        ));
    }
    Ok(minimizers)
}

/// Minimal uniruled class of a sphere bundle, with all classes attaining the
/// minimum listed in `ties`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BundleMinimal {
    pub minimal: DivisorClass,
    pub ties: Vec<DivisorClass>,
}

/// On the product bundle the factor class of smaller area wins (both are
/// reported on a tie, with `A1` as the deterministic representative). On the
/// twisted bundle the fiber class `F0` is minimal for every form.
pub fn minimal_uniruled_for_bundle(
    model: &SurfaceModel,
    form: &SymplecticForm,
) -> Result<BundleMinimal> {
    if form.model() != model {
        return Err(Error::ModelMismatch(format!(
            "form lives on {:?}, expected {model:?}",
            form.model()
        )));
    }
    match model {
        SurfaceModel::BlowupOfP2 { .. } => Err(Error::ModelMismatch(
            "bundle minimal classes are defined on the two sphere bundles; \
             use the fiber-class search on blow-ups"
                .into(),
        )),
        SurfaceModel::ProductS2xS2 => {
            let a1 = DivisorClass::from_i64(model.clone(), &[1, 0])?;
            let a2 = DivisorClass::from_i64(model.clone(), &[0, 1])?;
            let area1 = form.area(&a1)?;
            let area2 = form.area(&a2)?;
            let (minimal, ties) = match area1.cmp(&area2) {
                std::cmp::Ordering::Less => (a1.clone(), vec![a1]),
                std::cmp::Ordering::Greater => (a2.clone(), vec![a2]),
                std::cmp::Ordering::Equal => (a1.clone(), vec![a1, a2]),
            };
            Ok(BundleMinimal { minimal, ties })
        }
        SurfaceModel::TwistedS2xS2 => {
            let f0 = DivisorClass::from_i64(model.clone(), &[1, 0])?;
            Ok(BundleMinimal {
                minimal: f0.clone(),
                ties: vec![f0],
            })
        }
    }
}

/// The plane has no fiber class; its minimal uniruled class is the line `H`,
/// with one point insertion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneMinimalUniruled {
    pub class: DivisorClass,
    pub insertions: usize,
}

pub fn plane_minimal_uniruled() -> PlaneMinimalUniruled {
    PlaneMinimalUniruled {
        class: DivisorClass::hyperplane(0),
        insertions: 1,
    }
}

/// Convenience: a-coefficient of a blow-up class as i64 when small.
pub fn leading_coefficient(class: &DivisorClass) -> Option<i64> {
    class.coeffs().first().and_then(|c| c.to_i64())
}
