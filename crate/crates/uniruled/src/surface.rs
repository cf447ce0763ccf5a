//! Exact integer model of the degree-2 homology of the supported rational
//! surfaces: the blow-ups of the plane and the two sphere bundles over the
//! sphere, together with their intersection pairing, first Chern pairing and
//! symplectic area functional.
//!
//! Blow-up classes are stored as coefficient vectors `(a; b1, ..., bk)`
//! denoting `a*H - b1*E1 - ... - bk*Ek`, so the intersection pairing is
//! `a*a' - sum_i b_i*b_i'`.

use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, Signed, Zero};

use crate::error::{Error, Result};

/// The supported rational surfaces.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SurfaceModel {
    /// The blow-up of the projective plane in `k` points, basis `H, E1..Ek`.
    BlowupOfP2 { k: usize },
    /// The trivial sphere bundle, basis `A1, A2` with `A1.A2 = 1`.
    ProductS2xS2,
    /// The twisted sphere bundle, basis `F0, E` with `F0.F0 = 0`,
    /// `F0.E = 1`, `E.E = -1`.
    TwistedS2xS2,
}

impl SurfaceModel {
    pub fn blowup(k: usize) -> Self {
        SurfaceModel::BlowupOfP2 { k }
    }

    /// Rank of the degree-2 lattice.
    pub fn rank(&self) -> usize {
        match self {
            SurfaceModel::BlowupOfP2 { k } => k + 1,
            SurfaceModel::ProductS2xS2 | SurfaceModel::TwistedS2xS2 => 2,
        }
    }

    /// Ordered basis symbols.
    pub fn basis_labels(&self) -> Vec<String> {
        match self {
            SurfaceModel::BlowupOfP2 { k } => {
                let mut labels = vec!["H".to_string()];
                labels.extend((1..=*k).map(|i| format!("E{i}")));
                labels
            }
            SurfaceModel::ProductS2xS2 => vec!["A1".into(), "A2".into()],
            SurfaceModel::TwistedS2xS2 => vec!["F0".into(), "E".into()],
        }
    }

    /// The anticanonical class, whose pairing computes `C1`.
    pub fn c1_class(&self) -> DivisorClass {
        match self {
            SurfaceModel::BlowupOfP2 { k } => {
                let mut coeffs = vec![BigInt::from(3)];
                coeffs.extend(std::iter::repeat_n(BigInt::from(1), *k));
                DivisorClass::new(self.clone(), coeffs).unwrap()
            }
            SurfaceModel::ProductS2xS2 => DivisorClass::from_i64(self.clone(), &[2, 2]).unwrap(),
            SurfaceModel::TwistedS2xS2 => DivisorClass::from_i64(self.clone(), &[3, 2]).unwrap(),
        }
    }
}

/// An integral degree-2 homology class on a fixed surface model.
///
/// Coefficients are arbitrary-precision integers so that all pairings and
/// area computations are exact.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DivisorClass {
    model: SurfaceModel,
    coeffs: Vec<BigInt>,
}

impl DivisorClass {
    pub fn new(model: SurfaceModel, coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.len() != model.rank() {
            return Err(Error::ModelMismatch(format!(
                "class has {} coefficients but the model has rank {}",
                coeffs.len(),
                model.rank()
            )));
        }
        Ok(DivisorClass { model, coeffs })
    }

    pub fn from_i64(model: SurfaceModel, coeffs: &[i64]) -> Result<Self> {
        Self::new(model, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(model: SurfaceModel) -> Self {
        let rank = model.rank();
        DivisorClass {
            model,
            coeffs: vec![BigInt::zero(); rank],
        }
    }

    /// The hyperplane class `H` on a blow-up.
    pub fn hyperplane(k: usize) -> Self {
        let mut coeffs = vec![BigInt::from(1)];
        coeffs.extend(std::iter::repeat_n(BigInt::zero(), k));
        DivisorClass {
            model: SurfaceModel::blowup(k),
            coeffs,
        }
    }

    /// The `i`-th exceptional class `E_i` (1-based) on a blow-up.
    pub fn exceptional(k: usize, i: usize) -> Result<Self> {
        if i == 0 || i > k {
            return Err(Error::PreconditionViolation(format!(
                "exceptional index {i} out of range 1..={k}"
            )));
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[i] = BigInt::from(-1);
        Ok(DivisorClass {
            model: SurfaceModel::blowup(k),
            coeffs,
        })
    }

    pub fn model(&self) -> &SurfaceModel {
        &self.model
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// True when the gcd of all coefficients is 1.
    pub fn is_primitive(&self) -> bool {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g == BigInt::from(1)
    }

    pub fn add(&self, other: &DivisorClass) -> Result<DivisorClass> {
        self.check_same_model(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(DivisorClass {
            model: self.model.clone(),
            coeffs,
        })
    }

    pub fn sub(&self, other: &DivisorClass) -> Result<DivisorClass> {
        self.check_same_model(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(DivisorClass {
            model: self.model.clone(),
            coeffs,
        })
    }

    fn check_same_model(&self, other: &DivisorClass) -> Result<()> {
        if self.model != other.model {
            return Err(Error::ModelMismatch(format!(
                "classes live on different models: {:?} vs {:?}",
                self.model, other.model
            )));
        }
        Ok(())
    }

    /// Intersection pairing against another class on the same model.
    pub fn pairing(&self, other: &DivisorClass) -> Result<BigInt> {
        self.check_same_model(other)?;
        Ok(contract(&self.model, &self.coeffs, &other.coeffs))
    }

    pub fn self_intersection(&self) -> BigInt {
        contract(&self.model, &self.coeffs, &self.coeffs)
    }

    /// Pairing with the anticanonical class.
    pub fn c1_pairing(&self) -> BigInt {
        let c1 = self.model.c1_class();
        contract(&self.model, &c1.coeffs, &self.coeffs)
    }

    /// Rewrites a class on the twisted bundle in the blow-up presentation,
    /// via `F0 -> H - E1`, `E -> E1`.
    pub fn to_blowup_presentation(&self) -> Result<DivisorClass> {
        if self.model != SurfaceModel::TwistedS2xS2 {
            return Err(Error::ModelMismatch(
                "conversion is defined for the twisted bundle only".into(),
            ));
        }
        let f = &self.coeffs[0];
        let e = &self.coeffs[1];
        // x1*(H - E1) + x2*E1 = x1*H - (x1 - x2)*E1
        DivisorClass::new(SurfaceModel::blowup(1), vec![f.clone(), f - e])
    }

    /// Compact text form `a;b1,...,bk`.
    pub fn to_compact(&self) -> String {
        if self.coeffs.len() == 1 {
            return self.coeffs[0].to_string();
        }
        let rest: Vec<String> = self.coeffs[1..].iter().map(|c| c.to_string()).collect();
        format!("{};{}", self.coeffs[0], rest.join(","))
    }

    /// Table form `(a|b1,...,bk)` mirroring the usual blow-up notation.
    pub fn to_paren(&self) -> String {
        if self.coeffs.len() == 1 {
            return format!("({})", self.coeffs[0]);
        }
        let rest: Vec<String> = self.coeffs[1..].iter().map(|c| c.to_string()).collect();
        format!("({}|{})", self.coeffs[0], rest.join(","))
    }

    /// Parses `a;b1,...,bk` or `(a|b1,...,bk)` against a given model.
    pub fn parse(text: &str, model: &SurfaceModel) -> Result<Self> {
        let coeffs = parse_coeff_text(text)?;
        if coeffs.len() != model.rank() {
            return Err(Error::ModelMismatch(format!(
                "class text has {} coefficients but the model has rank {}",
                coeffs.len(),
                model.rank()
            )));
        }
        DivisorClass::new(model.clone(), coeffs)
    }

    /// Parses blow-up notation, inferring `k` from the coefficient count.
    pub fn parse_blowup(text: &str) -> Result<Self> {
        let coeffs = parse_coeff_text(text)?;
        let k = coeffs.len() - 1;
        DivisorClass::new(SurfaceModel::blowup(k), coeffs)
    }
}

fn parse_coeff_text(text: &str) -> Result<Vec<BigInt>> {
    let trimmed = text.trim();
    let inner = if let Some(stripped) = trimmed.strip_prefix('(') {
        stripped
            .strip_suffix(')')
            .ok_or_else(|| Error::Parse(format!("unbalanced parentheses in {trimmed:?}")))?
    } else {
        trimmed
    };
    let (head, tail) = match inner.split_once(['|', ';']) {
        Some((h, t)) => (h, Some(t)),
        None => (inner, None),
    };
    let mut coeffs = vec![parse_int(head)?];
    if let Some(tail) = tail {
        let tail = tail.trim();
        if !tail.is_empty() {
            for part in tail.split(',') {
                coeffs.push(parse_int(part)?);
            }
        }
    }
    Ok(coeffs)
}

fn parse_int(text: &str) -> Result<BigInt> {
    text.trim()
        .parse::<BigInt>()
        .map_err(|e| Error::Parse(format!("bad integer {:?}: {e}", text.trim())))
}

impl fmt::Display for DivisorClass {
    /// Symbolic rendering such as `2H-E1-E2-E3-E4` or `F0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels = self.model.basis_labels();
        // Blow-ups negate the b coefficients; bundles do not.
        let signs: Vec<i64> = match self.model {
            SurfaceModel::BlowupOfP2 { k } => {
                let mut s = vec![1];
                s.extend(std::iter::repeat_n(-1, k));
                s
            }
            _ => vec![1, 1],
        };
        let mut wrote = false;
        for ((c, label), sign) in self.coeffs.iter().zip(&labels).zip(&signs) {
            let value = c * BigInt::from(*sign);
            if value.is_zero() {
                continue;
            }
            if wrote {
                if value.is_negative() {
                    write!(f, "-")?;
                } else {
                    write!(f, "+")?;
                }
            } else if value.is_negative() {
                write!(f, "-")?;
            }
            let mag = value.abs();
            if mag == BigInt::from(1) {
                write!(f, "{label}")?;
            } else {
                write!(f, "{mag}{label}")?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A symplectic form class: a rational coefficient vector in the same basis,
/// all coefficients strictly positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymplecticForm {
    model: SurfaceModel,
    coeffs: Vec<BigRational>,
}

impl SymplecticForm {
    pub fn new(model: SurfaceModel, coeffs: Vec<BigRational>) -> Result<Self> {
        if coeffs.len() != model.rank() {
            return Err(Error::ModelMismatch(format!(
                "form has {} coefficients but the model has rank {}",
                coeffs.len(),
                model.rank()
            )));
        }
        if coeffs.iter().any(|c| !c.is_positive()) {
            return Err(Error::InvalidForm(
                "all form coefficients must be strictly positive".into(),
            ));
        }
        Ok(SymplecticForm { model, coeffs })
    }

    pub fn from_rationals(model: SurfaceModel, parts: &[(i64, i64)]) -> Result<Self> {
        let coeffs = parts
            .iter()
            .map(|&(p, q)| BigRational::new(BigInt::from(p), BigInt::from(q)))
            .collect();
        Self::new(model, coeffs)
    }

    pub fn model(&self) -> &SurfaceModel {
        &self.model
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Symplectic area of an integral class: the same contraction as the
    /// intersection pairing, with the form in the first slot.
    pub fn area(&self, class: &DivisorClass) -> Result<BigRational> {
        if self.model != *class.model() {
            return Err(Error::ModelMismatch(format!(
                "form on {:?} paired with class on {:?}",
                self.model,
                class.model()
            )));
        }
        let rat: Vec<BigRational> = class
            .coeffs()
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        Ok(contract_rational(&self.model, &self.coeffs, &rat))
    }
}

fn contract(model: &SurfaceModel, x: &[BigInt], y: &[BigInt]) -> BigInt {
    match model {
        SurfaceModel::BlowupOfP2 { .. } => {
            let mut acc = &x[0] * &y[0];
            for (a, b) in x[1..].iter().zip(&y[1..]) {
                acc -= a * b;
            }
            acc
        }
        SurfaceModel::ProductS2xS2 => &x[0] * &y[1] + &x[1] * &y[0],
        SurfaceModel::TwistedS2xS2 => &x[0] * &y[1] + &x[1] * &y[0] - &x[1] * &y[1],
    }
}

fn contract_rational(model: &SurfaceModel, x: &[BigRational], y: &[BigRational]) -> BigRational {
    match model {
        SurfaceModel::BlowupOfP2 { .. } => {
            let mut acc = &x[0] * &y[0];
            for (a, b) in x[1..].iter().zip(&y[1..]) {
                acc -= a * b;
            }
            acc
        }
        SurfaceModel::ProductS2xS2 => &x[0] * &y[1] + &x[1] * &y[0],
        SurfaceModel::TwistedS2xS2 => &x[0] * &y[1] + &x[1] * &y[0] - &x[1] * &y[1],
    }
}

/// Parses a rational written as `p/q` or a plain integer.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (parse_int(n)?, parse_int(d)?),
        None => (parse_int(t)?, BigInt::from(1)),
    };
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {t:?}")));
    }
    Ok(BigRational::new(num, den))
}

/// Renders a rational as `p/q` (or `p` when the denominator is 1).
pub fn rational_to_string(r: &BigRational) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
