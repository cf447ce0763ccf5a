//! Exact lower-triangular linear transforms over a graph poset, applied and
//! inverted by forward substitution along the stored linear extension.
//!
//! Coefficients live on ordered pairs `(i, j)` with the column element below
//! the row element; every diagonal coefficient must be present and nonzero,
//! which makes the map invertible. Coefficient values are caller-supplied
//! exact rationals; this module only guarantees the shape and the algebra.

use std::collections::BTreeMap;
use std::sync::Arc;

use num::rational::BigRational;
use num::Zero;

use crate::error::{Error, Result};
use crate::poset::GraphPoset;

/// A lower-triangular coefficient map over a poset.
#[derive(Debug, Clone)]
pub struct TriangularMap {
    poset: Arc<GraphPoset>,
    entries: BTreeMap<(usize, usize), BigRational>,
}

impl TriangularMap {
    /// Validates and stores the entries. Each `(row, col, value)` must have
    /// the column element at or below the row element in the partial order;
    /// incomparable pairs and pairs above the diagonal are rejected. All
    /// diagonal entries must be present and nonzero.
    pub fn new(
        poset: Arc<GraphPoset>,
        coefficients: Vec<(usize, usize, BigRational)>,
    ) -> Result<Self> {
        let n = poset.len();
        let mut entries = BTreeMap::new();
        for (row, col, value) in coefficients {
            if row >= n || col >= n {
                return Err(Error::InvalidEntry(format!(
                    "entry ({row}, {col}) out of range for a poset of {n} elements"
                )));
            }
            if !poset.entry_allowed(row, col)? {
                return Err(Error::InvalidEntry(format!(
                    "entry ({row}, {col}): the column element is not below the \
                     row element"
                )));
            }
            if entries.insert((row, col), value).is_some() {
                return Err(Error::InvalidEntry(format!(
                    "duplicate entry ({row}, {col})"
                )));
            }
        }
        for i in 0..n {
            match entries.get(&(i, i)) {
                None => {
                    return Err(Error::SingularDiagonal(format!(
                        "diagonal entry ({i}, {i}) is missing"
                    )))
                }
                Some(v) if v.is_zero() => {
                    return Err(Error::SingularDiagonal(format!(
                        "diagonal entry ({i}, {i}) is zero"
                    )))
                }
                Some(_) => {}
            }
        }
        Ok(TriangularMap { poset, entries })
    }

    /// The identity transform.
    pub fn identity(poset: Arc<GraphPoset>) -> Self {
        let entries = (0..poset.len())
            .map(|i| ((i, i), BigRational::from_integer(1.into())))
            .collect();
        TriangularMap { poset, entries }
    }

    pub fn poset(&self) -> &Arc<GraphPoset> {
        &self.poset
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &BigRational)> {
        self.entries.iter().map(|(&(i, j), v)| (i, j, v))
    }

    fn check_vector(&self, v: &InvariantVector) -> Result<()> {
        if !Arc::ptr_eq(&self.poset, &v.poset) && !self.poset.same_elements(&v.poset) {
            return Err(Error::PosetMismatch(
                "the vector was built over a different poset".into(),
            ));
        }
        Ok(())
    }

    /// `(Tv)_i = sum_{j at or below i} T(i,j) v_j`, exactly.
    pub fn apply(&self, v: &InvariantVector) -> Result<InvariantVector> {
        self.check_vector(v)?;
        let mut values = vec![BigRational::zero(); self.poset.len()];
        for (&(i, j), coeff) in &self.entries {
            if !v.values[j].is_zero() {
                values[i] += coeff * &v.values[j];
            }
        }
        Ok(InvariantVector {
            poset: Arc::clone(&self.poset),
            values,
        })
    }

    /// The unique `v` with `apply(T, v) = w`, by forward substitution along
    /// the linear extension.
    pub fn invert(&self, w: &InvariantVector) -> Result<InvariantVector> {
        self.check_vector(w)?;
        let n = self.poset.len();
        let mut values = vec![BigRational::zero(); n];
        for i in 0..n {
            let mut acc = w.values[i].clone();
            for (&(row, col), coeff) in self.entries.range((i, 0)..(i, i)) {
                debug_assert_eq!(row, i);
                if !values[col].is_zero() {
                    acc -= coeff * &values[col];
                }
            }
            let diag = self
                .entries
                .get(&(i, i))
                .ok_or_else(|| Error::SingularDiagonal(format!("missing diagonal at {i}")))?;
            if diag.is_zero() {
                return Err(Error::SingularDiagonal(format!("zero diagonal at {i}")));
            }
            values[i] = acc / diag;
        }
        Ok(InvariantVector {
            poset: Arc::clone(&self.poset),
            values,
        })
    }
}

/// A vector of exact rationals indexed by the elements of a poset.
#[derive(Debug, Clone)]
pub struct InvariantVector {
    poset: Arc<GraphPoset>,
    values: Vec<BigRational>,
}

impl PartialEq for InvariantVector {
    fn eq(&self, other: &Self) -> bool {
        self.poset.same_elements(&other.poset) && self.values == other.values
    }
}

impl InvariantVector {
    pub fn zero(poset: Arc<GraphPoset>) -> Self {
        let values = vec![BigRational::zero(); poset.len()];
        InvariantVector { poset, values }
    }

    pub fn new(poset: Arc<GraphPoset>, values: Vec<BigRational>) -> Result<Self> {
        if values.len() != poset.len() {
            return Err(Error::PosetMismatch(format!(
                "vector of length {} over a poset of {} elements",
                values.len(),
                poset.len()
            )));
        }
        Ok(InvariantVector { poset, values })
    }

    /// Builds a vector from sparse `(index, value)` entries.
    pub fn from_entries(
        poset: Arc<GraphPoset>,
        entries: Vec<(usize, BigRational)>,
    ) -> Result<Self> {
        let mut values = vec![BigRational::zero(); poset.len()];
        for (i, value) in entries {
            if i >= values.len() {
                return Err(Error::PosetMismatch(format!(
                    "vector index {i} out of range for a poset of {} elements",
                    values.len()
                )));
            }
            values[i] = value;
        }
        Ok(InvariantVector { poset, values })
    }

    pub fn poset(&self) -> &Arc<GraphPoset> {
        &self.poset
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }
}
