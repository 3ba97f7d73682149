//! The measurable set class: monomial cells inside the unit cube and
//! finite unions of them.
//!
//! A cell fixes, coordinate by coordinate, either a graph (`Thin`) or a
//! band (`Thick`) between a lower bound and the lower bound plus a
//! positive thickness. Bounds are constants or posynomials (sums of
//! monomials with positive single-term coefficients) in the earlier
//! coordinates. Storing the thickness instead of an upper bound keeps
//! every fiber length a posynomial, so its valuation is the minimum of
//! finitely many affine functions of the coordinate valuations, and
//! sublevel sets can be carved out of the base along a monomial grid.
//!
//! Posynomials with positive coefficients are monotone in each variable
//! on the positive orthant (per term, by exponent sign), so their
//! extremes over a cell are certified by corner evaluations. That single
//! fact drives containment checks, thickness positivity, and the grid
//! classification used by the measure engine.

use std::cmp::Ordering;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::puiseux::{PuiseuxScalar, ScalarEnclosure, Valuation};
use crate::rat::{self, Rat};

/// Hard cap on ambient dimension.
pub const DIM_CAP: usize = 4;

/// Tolerance for interval coefficients produced by corner evaluations.
pub(crate) fn enclosure_tol() -> Rat {
    rat::rat(1, 1 << 40)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SetsError {
    #[error("bounds leave the unit cube: {0}")]
    OutOfRange(String),
    #[error("set class violated: {0}")]
    ClassViolation(String),
    #[error("the standard part has empty interior")]
    NoStdInterior,
    #[error("dimension {0} exceeds the cap {DIM_CAP}")]
    DimensionCap(usize),
    #[error("function is unbounded over the base: {0}")]
    Unbounded(String),
}

/// One monomial summand `q * t^g * prod x_i^(e_i)` with `q > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialTerm {
    /// Positive rational part of the coefficient.
    pub coeff_q: Rat,
    /// Power of `t` in the coefficient.
    pub coeff_exp: Rat,
    /// Per-variable exponents; rational, any sign.
    pub exps: Vec<Rat>,
}

impl MonomialTerm {
    pub fn new(coeff_q: Rat, coeff_exp: Rat, exps: Vec<Rat>) -> Result<Self, SetsError> {
        if !coeff_q.is_positive() {
            return Err(SetsError::ClassViolation(
                "monomial coefficients must be positive".into(),
            ));
        }
        Ok(Self { coeff_q, coeff_exp, exps })
    }

    fn is_constant(&self) -> bool {
        self.exps.iter().all(|e| e.is_zero())
    }

    fn coeff_scalar(&self) -> PuiseuxScalar {
        PuiseuxScalar::monomial(self.coeff_q.clone(), self.coeff_exp.clone())
    }
}

/// A posynomial in the coordinates `x_1 .. x_arity`, interpreted on the
/// positive orthant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialFn {
    arity: usize,
    terms: Vec<MonomialTerm>,
}

impl MonomialFn {
    pub fn new(arity: usize, terms: Vec<MonomialTerm>) -> Result<Self, SetsError> {
        for t in &terms {
            if t.exps.len() != arity {
                return Err(SetsError::ClassViolation(format!(
                    "term has {} exponents, expected {}",
                    t.exps.len(),
                    arity
                )));
            }
        }
        let mut f = Self { arity, terms };
        f.canonicalize();
        Ok(f)
    }

    pub fn zero(arity: usize) -> Self {
        Self { arity, terms: Vec::new() }
    }

    /// The coordinate function `x_(index+1)`.
    pub fn var(arity: usize, index: usize) -> Self {
        let mut exps = vec![Rat::zero(); arity];
        exps[index] = Rat::one();
        Self {
            arity,
            terms: vec![MonomialTerm {
                coeff_q: Rat::one(),
                coeff_exp: Rat::zero(),
                exps,
            }],
        }
    }

    fn canonicalize(&mut self) {
        self.terms
            .sort_by(|a, b| (&a.exps, &a.coeff_exp).cmp(&(&b.exps, &b.coeff_exp)));
        let mut out: Vec<MonomialTerm> = Vec::with_capacity(self.terms.len());
        for t in self.terms.drain(..) {
            if let Some(last) = out.last_mut() {
                if last.exps == t.exps && last.coeff_exp == t.coeff_exp {
                    last.coeff_q = &last.coeff_q + &t.coeff_q;
                    continue;
                }
            }
            out.push(t);
        }
        out.retain(|t| !t.coeff_q.is_zero());
        self.terms = out;
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> &[MonomialTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.is_constant())
    }

    /// The constant scalar value, when no term touches a variable.
    pub fn as_constant(&self) -> Option<PuiseuxScalar> {
        if self.is_constant() {
            Some(PuiseuxScalar::from_terms(
                self.terms
                    .iter()
                    .map(|t| (t.coeff_exp.clone(), t.coeff_q.clone())),
            ))
        } else {
            None
        }
    }

    /// Which variables appear with a nonzero exponent.
    pub fn vars(&self) -> Vec<bool> {
        let mut used = vec![false; self.arity];
        for t in &self.terms {
            for (i, e) in t.exps.iter().enumerate() {
                if !e.is_zero() {
                    used[i] = true;
                }
            }
        }
        used
    }

    /// True when some term has a coefficient of valuation zero; the
    /// standard part of the function is then positive on the open
    /// positive orthant.
    pub fn has_std_term(&self) -> bool {
        self.terms.iter().any(|t| t.coeff_exp.is_zero())
    }

    /// The real shadow: terms whose coefficient survives the standard
    /// part map.
    pub fn std_part(&self) -> StdPoly {
        StdPoly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .filter(|t| t.coeff_exp.is_zero())
                .map(|t| (t.coeff_q.clone(), t.exps.clone()))
                .collect(),
        }
    }

    /// Valuation of the function at a point with coordinate valuations
    /// `u`: the minimum over terms of `coeff_exp + sum e_i * u_i`.
    pub fn tropical_at(&self, u: &[Rat]) -> Option<Rat> {
        self.terms
            .iter()
            .map(|t| {
                let mut acc = t.coeff_exp.clone();
                for (e, ui) in t.exps.iter().zip(u) {
                    acc += e * ui;
                }
                acc
            })
            .min()
    }

    /// Monotone range over a box of coordinate ranges: per term, each
    /// variable contributes its lower or upper end according to the sign
    /// of the exponent; summing per-term extremes gives a sound
    /// enclosure of the function's range.
    pub fn range(
        &self,
        ranges: &[(ScalarEnclosure, ScalarEnclosure)],
    ) -> Result<(ScalarEnclosure, ScalarEnclosure), SetsError> {
        debug_assert!(ranges.len() >= self.arity);
        let tol = enclosure_tol();
        let mut lo_acc = ScalarEnclosure::zero();
        let mut hi_acc = ScalarEnclosure::zero();
        for t in &self.terms {
            let coeff = ScalarEnclosure::exact(&t.coeff_scalar());
            let mut term_lo = coeff.clone();
            let mut term_hi = coeff;
            for (i, e) in t.exps.iter().enumerate() {
                if e.is_zero() {
                    continue;
                }
                let (rlo, rhi) = &ranges[i];
                let (at_min, at_max) = if e.is_positive() {
                    (rlo, rhi)
                } else {
                    (rhi, rlo)
                };
                let plo = at_min.pow(e, &tol).ok_or_else(|| {
                    SetsError::Unbounded(format!("x{}^({}) over a range touching 0", i + 1, e))
                })?;
                let phi = at_max.pow(e, &tol).ok_or_else(|| {
                    SetsError::Unbounded(format!("x{}^({}) over a range touching 0", i + 1, e))
                })?;
                term_lo = term_lo.mul(&plo);
                term_hi = term_hi.mul(&phi);
            }
            lo_acc = lo_acc.add(&term_lo);
            hi_acc = hi_acc.add(&term_hi);
        }
        Ok((lo_acc, hi_acc))
    }

    /// Pointwise sum with another posynomial of the same arity.
    pub fn add_fn(&self, other: &MonomialFn) -> Result<MonomialFn, SetsError> {
        if self.arity != other.arity {
            return Err(SetsError::ClassViolation("arity mismatch".into()));
        }
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        MonomialFn::new(self.arity, terms)
    }

    /// Adds an exact scalar, term by term; fails when a negative part
    /// cannot be absorbed by an existing constant term.
    pub fn add_scalar(&self, s: &PuiseuxScalar) -> Result<MonomialFn, SetsError> {
        let mut terms = self.terms.clone();
        for (e, c) in s.terms() {
            let slot = terms
                .iter_mut()
                .find(|t| t.is_constant() && &t.coeff_exp == e);
            match slot {
                Some(t) => {
                    t.coeff_q = &t.coeff_q + c;
                    match t.coeff_q.cmp(&Rat::zero()) {
                        Ordering::Less => {
                            return Err(SetsError::ClassViolation(
                                "subtraction leaves a negative coefficient".into(),
                            ))
                        }
                        Ordering::Equal | Ordering::Greater => {}
                    }
                }
                None => {
                    if c.is_negative() {
                        return Err(SetsError::ClassViolation(
                            "subtraction is not allowed in the posynomial class".into(),
                        ));
                    }
                    terms.push(MonomialTerm {
                        coeff_q: c.clone(),
                        coeff_exp: e.clone(),
                        exps: vec![Rat::zero(); self.arity],
                    });
                }
            }
        }
        terms.retain(|t| !t.coeff_q.is_zero());
        MonomialFn::new(self.arity, terms)
    }

    /// Pointwise difference `self - other`, defined only when every
    /// coefficient stays nonnegative (no cancellation across distinct
    /// monomials).
    pub fn sub_fn(&self, other: &MonomialFn) -> Result<MonomialFn, SetsError> {
        if self.arity != other.arity {
            return Err(SetsError::ClassViolation("arity mismatch".into()));
        }
        let mut terms = self.terms.clone();
        for o in &other.terms {
            let slot = terms
                .iter_mut()
                .find(|t| t.exps == o.exps && t.coeff_exp == o.coeff_exp);
            match slot {
                Some(t) if t.coeff_q >= o.coeff_q => {
                    t.coeff_q = &t.coeff_q - &o.coeff_q;
                }
                _ => {
                    return Err(SetsError::ClassViolation(
                        "difference leaves the posynomial class".into(),
                    ))
                }
            }
        }
        terms.retain(|t| !t.coeff_q.is_zero());
        MonomialFn::new(self.arity, terms)
    }

    /// The bound function of coordinate `k` after the diagonal map
    /// `x_i -> lam_i * x_i`: each coefficient is multiplied by
    /// `lam_k / prod lam_i^(e_i)`. Requires single-term `lam_i` whose
    /// rational parts have exact rational powers.
    pub fn rescale_diag(&self, lams: &[PuiseuxScalar], k: usize) -> Result<MonomialFn, SetsError> {
        let lam_k = lams[k]
            .as_monomial()
            .ok_or_else(|| SetsError::ClassViolation("diagonal entry must be a monomial".into()))?;
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let mut q = &t.coeff_q * lam_k.1;
            let mut g = &t.coeff_exp + lam_k.0;
            for (i, e) in t.exps.iter().enumerate() {
                if e.is_zero() {
                    continue;
                }
                let (le, lc) = lams[i].as_monomial().ok_or_else(|| {
                    SetsError::ClassViolation("diagonal entry must be a monomial".into())
                })?;
                let lce = rat::pow_exact(lc, e).ok_or_else(|| {
                    SetsError::ClassViolation(format!(
                        "diagonal coefficient {lc} has no exact power {e}"
                    ))
                })?;
                q /= lce;
                g -= le * e;
            }
            terms.push(MonomialTerm { coeff_q: q, coeff_exp: g, exps: t.exps.clone() });
        }
        MonomialFn::new(self.arity, terms)
    }

    /// Reinterprets the function in an ambient space with `offset` extra
    /// leading coordinates (used by products).
    pub fn shift_vars(&self, offset: usize, new_arity: usize) -> MonomialFn {
        MonomialFn {
            arity: new_arity,
            terms: self
                .terms
                .iter()
                .map(|t| {
                    let mut exps = vec![Rat::zero(); new_arity];
                    for (i, e) in t.exps.iter().enumerate() {
                        exps[offset + i] = e.clone();
                    }
                    MonomialTerm {
                        coeff_q: t.coeff_q.clone(),
                        coeff_exp: t.coeff_exp.clone(),
                        exps,
                    }
                })
                .collect(),
        }
    }
}

/// A coordinate bound: an exact scalar constant or a posynomial in the
/// earlier coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound {
    Const(PuiseuxScalar),
    Fn(MonomialFn),
}

impl Bound {
    /// Normalizes variable-free posynomials to constants.
    pub fn from_fn(f: MonomialFn) -> Bound {
        match f.as_constant() {
            Some(c) => Bound::Const(c),
            None => Bound::Fn(f),
        }
    }

    pub fn zero() -> Bound {
        Bound::Const(PuiseuxScalar::zero())
    }

    pub fn as_const(&self) -> Option<&PuiseuxScalar> {
        match self {
            Bound::Const(s) => Some(s),
            Bound::Fn(_) => None,
        }
    }

    pub fn vars(&self, arity: usize) -> Vec<bool> {
        match self {
            Bound::Const(_) => vec![false; arity],
            Bound::Fn(f) => {
                let mut v = f.vars();
                v.resize(arity, false);
                v
            }
        }
    }

    pub(crate) fn range(
        &self,
        ranges: &[(ScalarEnclosure, ScalarEnclosure)],
    ) -> Result<(ScalarEnclosure, ScalarEnclosure), SetsError> {
        match self {
            Bound::Const(s) => {
                let e = ScalarEnclosure::exact(s);
                Ok((e.clone(), e))
            }
            Bound::Fn(f) => f.range(ranges),
        }
    }

    /// Adds a scalar constant, staying in the class.
    pub fn add_scalar(&self, s: &PuiseuxScalar) -> Result<Bound, SetsError> {
        match self {
            Bound::Const(c) => Ok(Bound::Const(c + s)),
            Bound::Fn(f) => Ok(Bound::from_fn(f.add_scalar(s)?)),
        }
    }

    pub fn add_fn(&self, g: &MonomialFn) -> Result<Bound, SetsError> {
        match self {
            Bound::Const(c) => {
                if c.is_zero() {
                    return Ok(Bound::from_fn(g.clone()));
                }
                if c.is_negative() {
                    return Err(SetsError::ClassViolation(
                        "cannot fold a negative constant into a posynomial".into(),
                    ));
                }
                Ok(Bound::from_fn(g.add_scalar(c)?))
            }
            Bound::Fn(f) => Ok(Bound::from_fn(f.add_fn(g)?)),
        }
    }

    fn shift_vars(&self, offset: usize, new_arity: usize) -> Bound {
        match self {
            Bound::Const(s) => Bound::Const(s.clone()),
            Bound::Fn(f) => Bound::Fn(f.shift_vars(offset, new_arity)),
        }
    }
}

/// One coordinate of a cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CellCoord {
    /// The coordinate equals the bound: a graph, lower-dimensional.
    Thin(Bound),
    /// The coordinate ranges over `(low, low + thick)` with `thick > 0`
    /// on the base.
    Thick { low: Bound, thick: Bound },
}

impl CellCoord {
    pub fn is_thick(&self) -> bool {
        matches!(self, CellCoord::Thick { .. })
    }
}

/// A cell: one coordinate descriptor per ambient dimension, each bound a
/// function of the earlier coordinates only. Cells live in the unit cube.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialCell {
    coords: Vec<CellCoord>,
}

impl MonomialCell {
    pub fn new(coords: Vec<CellCoord>) -> Result<Self, SetsError> {
        if coords.len() > DIM_CAP {
            return Err(SetsError::DimensionCap(coords.len()));
        }
        let cell = Self { coords };
        cell.validate()?;
        Ok(cell)
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[CellCoord] {
        &self.coords
    }

    pub fn is_open(&self) -> bool {
        self.coords.iter().all(CellCoord::is_thick)
    }

    pub fn has_thin(&self) -> bool {
        !self.is_open()
    }

    /// The cell of the first `k` coordinates.
    pub fn base(&self, k: usize) -> MonomialCell {
        MonomialCell { coords: self.coords[..k].to_vec() }
    }

    pub(crate) fn from_raw(coords: Vec<CellCoord>) -> MonomialCell {
        MonomialCell { coords }
    }

    /// Per-coordinate value ranges over the cell closure, as certified
    /// enclosures, derived corner-wise from the bound posynomials.
    pub(crate) fn ranges(&self) -> Result<Vec<(ScalarEnclosure, ScalarEnclosure)>, SetsError> {
        let mut ranges: Vec<(ScalarEnclosure, ScalarEnclosure)> = Vec::with_capacity(self.dim());
        for coord in &self.coords {
            let entry = match coord {
                CellCoord::Thin(b) => b.range(&ranges)?,
                CellCoord::Thick { low, thick } => {
                    let (flo, fhi) = low.range(&ranges)?;
                    let (_, hhi) = thick.range(&ranges)?;
                    (flo, fhi.add(&hhi))
                }
            };
            ranges.push(entry);
        }
        Ok(ranges)
    }

    fn validate(&self) -> Result<(), SetsError> {
        for (k, coord) in self.coords.iter().enumerate() {
            let arity_ok = |b: &Bound| match b {
                Bound::Const(_) => true,
                Bound::Fn(f) => f.arity() == k,
            };
            let ok = match coord {
                CellCoord::Thin(b) => arity_ok(b),
                CellCoord::Thick { low, thick } => arity_ok(low) && arity_ok(thick),
            };
            if !ok {
                return Err(SetsError::ClassViolation(format!(
                    "bound of coordinate {} must depend on earlier coordinates only",
                    k + 1
                )));
            }
        }
        let ranges = self.ranges()?;
        let zero = PuiseuxScalar::zero();
        let one = PuiseuxScalar::one();
        for (k, (lo, hi)) in ranges.iter().enumerate() {
            if lo.cmp_scalar(&zero) == Some(Ordering::Less) {
                return Err(SetsError::OutOfRange(format!(
                    "coordinate {} reaches below 0",
                    k + 1
                )));
            }
            match hi.cmp_scalar(&one) {
                Some(Ordering::Greater) => {
                    return Err(SetsError::OutOfRange(format!(
                        "coordinate {} reaches above 1",
                        k + 1
                    )))
                }
                None => {
                    return Err(SetsError::OutOfRange(format!(
                        "cannot certify coordinate {} stays within the unit interval",
                        k + 1
                    )))
                }
                _ => {}
            }
        }
        // Thickness must be positive somewhere on every thick coordinate
        // (positivity on the open base then follows from positive
        // coefficients), and thin bounds must be genuinely in range.
        for (k, coord) in self.coords.iter().enumerate() {
            if let CellCoord::Thick { thick, .. } = coord {
                match thick {
                    Bound::Const(h) => {
                        if !h.is_positive() {
                            return Err(SetsError::ClassViolation(format!(
                                "thickness of coordinate {} is not positive",
                                k + 1
                            )));
                        }
                    }
                    Bound::Fn(f) => {
                        if f.is_zero() {
                            return Err(SetsError::ClassViolation(format!(
                                "thickness of coordinate {} vanishes",
                                k + 1
                            )));
                        }
                        let (_, hhi) = f.range(&ranges[..k])?;
                        if !hhi.certainly_positive() {
                            return Err(SetsError::ClassViolation(format!(
                                "thickness of coordinate {} is not positive on the base",
                                k + 1
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// True when the standard part of the cell has nonempty interior:
    /// recursively, every coordinate is thick and its thickness keeps a
    /// term of coefficient valuation zero.
    pub fn has_std_interior(&self) -> bool {
        self.coords.iter().all(|coord| match coord {
            CellCoord::Thin(_) => false,
            CellCoord::Thick { thick, .. } => match thick {
                Bound::Const(h) => h.valuation() == Valuation::Finite(Rat::zero()),
                Bound::Fn(f) => f.has_std_term(),
            },
        })
    }

    /// Coefficientwise standard part; `None` when the shadow is
    /// degenerate.
    pub fn std_part(&self) -> Option<StdCell> {
        if !self.has_std_interior() {
            return None;
        }
        let coords = self
            .coords
            .iter()
            .enumerate()
            .map(|(k, coord)| match coord {
                CellCoord::Thick { low, thick } => {
                    let low = std_bound(low);
                    let thick = match thick {
                        Bound::Const(h) => StdPoly::constant(
                            k,
                            h.standard_part().expect("finite by containment"),
                        ),
                        Bound::Fn(f) => f.std_part(),
                    };
                    StdCoord { low, thick }
                }
                CellCoord::Thin(_) => unreachable!("std interior requires thick coordinates"),
            })
            .collect();
        Some(StdCell { coords })
    }
}

fn std_bound(b: &Bound) -> StdBound {
    match b {
        Bound::Const(s) => StdBound::Const(s.standard_part().expect("finite by containment")),
        Bound::Fn(f) => {
            let p = f.std_part();
            if p.terms.is_empty() {
                StdBound::Const(Rat::zero())
            } else {
                StdBound::Poly(p)
            }
        }
    }
}

/// A real-coefficient posynomial, the shadow of a [`MonomialFn`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StdPoly {
    pub arity: usize,
    /// `(coefficient, exponents)` with positive coefficients.
    pub terms: Vec<(Rat, Vec<Rat>)>,
}

impl StdPoly {
    pub fn constant(arity: usize, c: Rat) -> StdPoly {
        if c.is_zero() {
            StdPoly { arity, terms: Vec::new() }
        } else {
            StdPoly { arity, terms: vec![(c, vec![Rat::zero(); arity])] }
        }
    }

    /// Evaluates at a rational point (for tests and sanity checks).
    pub fn eval(&self, x: &[Rat]) -> Option<Rat> {
        let mut acc = Rat::zero();
        for (q, exps) in &self.terms {
            let mut term = q.clone();
            for (xi, e) in x.iter().zip(exps) {
                term *= rat::pow_exact(xi, e)?;
            }
            acc += term;
        }
        Some(acc)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StdBound {
    Const(Rat),
    Poly(StdPoly),
}

impl StdBound {
    pub fn arity(&self) -> usize {
        match self {
            StdBound::Const(_) => 0,
            StdBound::Poly(p) => p.arity,
        }
    }
}

/// One thick coordinate of a standard-part cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StdCoord {
    pub low: StdBound,
    pub thick: StdPoly,
}

/// The real shadow of a full-dimensional cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StdCell {
    pub coords: Vec<StdCoord>,
}

impl StdCell {
    pub fn dim(&self) -> usize {
        self.coords.len()
    }
}

/// A finite union of cells of equal dimension, pairwise disjoint up to
/// lower-dimensional overlap (the caller's responsibility; the measure
/// ignores lower-dimensional slack).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefinableSet {
    dim: usize,
    cells: Vec<MonomialCell>,
}

impl DefinableSet {
    pub fn from_cell(cell: MonomialCell) -> Self {
        Self { dim: cell.dim(), cells: vec![cell] }
    }

    pub fn from_cells(dim: usize, cells: Vec<MonomialCell>) -> Result<Self, SetsError> {
        for c in &cells {
            if c.dim() != dim {
                return Err(SetsError::ClassViolation(
                    "union members must have equal dimension".into(),
                ));
            }
        }
        Ok(Self { dim, cells })
    }

    pub fn empty(dim: usize) -> Self {
        Self { dim, cells: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn cells(&self) -> &[MonomialCell] {
        &self.cells
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn union(sets: Vec<DefinableSet>) -> Result<DefinableSet, SetsError> {
        let mut iter = sets.into_iter();
        let mut acc = iter
            .next()
            .ok_or_else(|| SetsError::ClassViolation("empty union".into()))?;
        for s in iter {
            if s.dim != acc.dim {
                return Err(SetsError::ClassViolation(
                    "union members must have equal dimension".into(),
                ));
            }
            acc.cells.extend(s.cells);
        }
        Ok(acc)
    }

    /// Cartesian product; the factors' cells pair up.
    pub fn product(&self, other: &DefinableSet) -> Result<DefinableSet, SetsError> {
        let dim = self.dim + other.dim;
        if dim > DIM_CAP {
            return Err(SetsError::DimensionCap(dim));
        }
        let mut cells = Vec::with_capacity(self.cells.len() * other.cells.len());
        for a in &self.cells {
            for b in &other.cells {
                let mut coords = a.coords.clone();
                for coord in &b.coords {
                    coords.push(match coord {
                        CellCoord::Thin(bound) => CellCoord::Thin(bound.shift_vars(self.dim, dim)),
                        CellCoord::Thick { low, thick } => CellCoord::Thick {
                            low: low.shift_vars(self.dim, dim),
                            thick: thick.shift_vars(self.dim, dim),
                        },
                    });
                }
                cells.push(MonomialCell::from_raw(coords));
            }
        }
        Ok(DefinableSet { dim, cells })
    }

    /// True when some cell is full-dimensional.
    pub fn has_interior(&self) -> bool {
        self.cells.iter().any(MonomialCell::is_open)
    }

    pub fn has_std_interior(&self) -> bool {
        self.cells.iter().any(MonomialCell::has_std_interior)
    }

    /// Standard parts of the cells that keep a full-dimensional shadow;
    /// the rest are dropped as null.
    pub fn std_part(&self) -> Result<Vec<StdCell>, SetsError> {
        let parts: Vec<StdCell> = self.cells.iter().filter_map(MonomialCell::std_part).collect();
        if parts.is_empty() {
            Err(SetsError::NoStdInterior)
        } else {
            Ok(parts)
        }
    }

    /// Splits every cell along the hyperplane `x_(axis+1) = cut`. Only
    /// coordinates with constant bounds split cleanly; anything else is
    /// a class violation. The cut slice itself is lower-dimensional and
    /// dropped.
    pub fn split_axis(&self, axis: usize, cut: &PuiseuxScalar) -> Result<DefinableSet, SetsError> {
        let mut out = Vec::new();
        for cell in &self.cells {
            match &cell.coords[axis] {
                CellCoord::Thin(_) => out.push(cell.clone()),
                CellCoord::Thick { low, thick } => {
                    let (a, h) = match (low.as_const(), thick.as_const()) {
                        (Some(a), Some(h)) => (a.clone(), h.clone()),
                        _ => {
                            return Err(SetsError::ClassViolation(
                                "axis splits need constant bounds on the cut coordinate".into(),
                            ))
                        }
                    };
                    let b = &a + &h;
                    if *cut <= a || *cut >= b {
                        out.push(cell.clone());
                        continue;
                    }
                    let mut lowc = cell.coords.clone();
                    lowc[axis] = CellCoord::Thick {
                        low: Bound::Const(a.clone()),
                        thick: Bound::Const(cut - &a),
                    };
                    let mut highc = cell.coords.clone();
                    highc[axis] = CellCoord::Thick {
                        low: Bound::Const(cut.clone()),
                        thick: Bound::Const(&b - cut),
                    };
                    out.push(MonomialCell::from_raw(lowc));
                    out.push(MonomialCell::from_raw(highc));
                }
            }
        }
        Ok(DefinableSet { dim: self.dim, cells: out })
    }
}

/// Convenience constructor for boxes: one `(a, b)` pair per coordinate,
/// `a = b` giving a thin coordinate.
pub fn make_box(bounds: &[(PuiseuxScalar, PuiseuxScalar)]) -> Result<MonomialCell, SetsError> {
    let zero = PuiseuxScalar::zero();
    let one = PuiseuxScalar::one();
    let mut coords = Vec::with_capacity(bounds.len());
    for (a, b) in bounds {
        if a < &zero || b > &one || a > b {
            return Err(SetsError::OutOfRange(format!(
                "box side [{a}, {b}] leaves the unit interval"
            )));
        }
        if a == b {
            coords.push(CellCoord::Thin(Bound::Const(a.clone())));
        } else {
            coords.push(CellCoord::Thick {
                low: Bound::Const(a.clone()),
                thick: Bound::Const(b - a),
            });
        }
    }
    MonomialCell::new(coords)
}

/// The variables that must be grid-split so that the listed seed
/// variables have certifiable ranges: the seeds, plus transitively the
/// variables of their coordinates' bounds.
pub(crate) fn needed_closure(cell: &MonomialCell, seed: &[bool]) -> Vec<bool> {
    let n = cell.dim();
    let mut needed = seed.to_vec();
    needed.resize(n, false);
    loop {
        let mut changed = false;
        for k in 0..n {
            if !needed[k] {
                continue;
            }
            let mut mark = |b: &Bound| {
                for (i, used) in b.vars(k).iter().enumerate() {
                    if *used && !needed[i] {
                        needed[i] = true;
                        changed = true;
                    }
                }
            };
            match &cell.coords[k] {
                CellCoord::Thin(b) => mark(b),
                CellCoord::Thick { low, thick } => {
                    mark(low);
                    mark(thick);
                }
            }
        }
        if !changed {
            return needed;
        }
    }
}

/// A subcell produced by the monomial grid, with cached coordinate
/// ranges. `exact` pieces partition their share of the cell; the rest
/// only cover it (mixed slabs the class cannot clip).
#[derive(Debug, Clone)]
pub(crate) struct GridPiece {
    pub cell: MonomialCell,
    pub ranges: Vec<(ScalarEnclosure, ScalarEnclosure)>,
    pub exact: bool,
    pub truncated: bool,
}

/// Splits `cell` along monomial grid hyperplanes `x_k = t^s`,
/// `s = 0, delta, 2*delta, ..`, for every needed coordinate, down to
/// valuation `depth` (one residual slab `(0, t^depth)` catches the
/// rest). Classification against the grid is certified by corner
/// comparisons; slabs that cross a non-constant bound are kept as
/// covering pieces only.
pub(crate) fn grid_split(
    cell: &MonomialCell,
    needed: &[bool],
    delta: &Rat,
    depth: &Rat,
) -> Result<Vec<GridPiece>, SetsError> {
    let mut pieces = vec![GridPiece {
        cell: MonomialCell::from_raw(Vec::new()),
        ranges: Vec::new(),
        exact: true,
        truncated: false,
    }];
    for (k, coord) in cell.coords().iter().enumerate() {
        let mut next: Vec<GridPiece> = Vec::new();
        for piece in &pieces {
            match coord {
                CellCoord::Thin(b) => {
                    let r = b.range(&piece.ranges)?;
                    next.push(extend_piece(piece, CellCoord::Thin(b.clone()), r));
                }
                CellCoord::Thick { low, thick } => {
                    let (flo, fhi) = low.range(&piece.ranges)?;
                    let (_, hhi) = thick.range(&piece.ranges)?;
                    let ghi = fhi.add(&hhi);
                    if !needed[k] {
                        next.push(extend_piece(piece, coord.clone(), (flo, ghi)));
                        continue;
                    }
                    match (low.as_const(), thick.as_const()) {
                        (Some(f), Some(h)) => {
                            split_const_coord(piece, f, h, delta, depth, &mut next);
                        }
                        _ => {
                            split_fn_coord(
                                piece,
                                coord,
                                (&flo, &fhi),
                                &ghi,
                                delta,
                                depth,
                                &mut next,
                            );
                        }
                    }
                }
            }
        }
        pieces = next;
    }
    Ok(pieces)
}

fn extend_piece(
    piece: &GridPiece,
    coord: CellCoord,
    range: (ScalarEnclosure, ScalarEnclosure),
) -> GridPiece {
    let mut cell_coords = piece.cell.coords().to_vec();
    cell_coords.push(coord);
    let mut ranges = piece.ranges.clone();
    ranges.push(range);
    GridPiece {
        cell: MonomialCell::from_raw(cell_coords),
        ranges,
        exact: piece.exact,
        truncated: piece.truncated,
    }
}

fn grid_point(s: &Rat) -> PuiseuxScalar {
    if s.is_zero() {
        PuiseuxScalar::one()
    } else {
        PuiseuxScalar::monomial(Rat::one(), s.clone())
    }
}

/// Exact clipping of a constant-bounded fiber `(f, f + h)` against the
/// grid slabs.
fn split_const_coord(
    piece: &GridPiece,
    f: &PuiseuxScalar,
    h: &PuiseuxScalar,
    delta: &Rat,
    depth: &Rat,
    out: &mut Vec<GridPiece>,
) {
    let g = f + h;
    let mut s = Rat::zero();
    while &s < depth {
        let hi_pt = grid_point(&s);
        let lo_pt = grid_point(&(&s + delta));
        if hi_pt <= *f {
            break; // all deeper slabs lie below the fiber
        }
        push_const_clip(piece, f, &g, &lo_pt, &hi_pt, false, out);
        s += delta;
    }
    // residual slab (0, t^depth)
    let lo_pt = PuiseuxScalar::zero();
    let hi_pt = grid_point(depth);
    if hi_pt > *f {
        push_const_clip(piece, f, &g, &lo_pt, &hi_pt, true, out);
    }
}

fn push_const_clip(
    piece: &GridPiece,
    f: &PuiseuxScalar,
    g: &PuiseuxScalar,
    slab_lo: &PuiseuxScalar,
    slab_hi: &PuiseuxScalar,
    truncated: bool,
    out: &mut Vec<GridPiece>,
) {
    let a = PuiseuxScalar::max(f, slab_lo);
    let b = PuiseuxScalar::min(g, slab_hi);
    if a >= b {
        return;
    }
    let coord = CellCoord::Thick {
        low: Bound::Const(a.clone()),
        thick: Bound::Const(&b - &a),
    };
    let range = (ScalarEnclosure::exact(&a), ScalarEnclosure::exact(&b));
    let mut p = extend_piece(piece, coord, range);
    p.truncated |= truncated;
    out.push(p);
}

/// Grid classification for a fiber with non-constant bounds: slabs
/// certifiably inside the fiber become constant-bounded pieces, a fiber
/// inside one slab stays untouched, and crossing slabs survive as
/// covering pieces only.
fn split_fn_coord(
    piece: &GridPiece,
    coord: &CellCoord,
    f_range: (&ScalarEnclosure, &ScalarEnclosure),
    g_hi: &ScalarEnclosure,
    delta: &Rat,
    depth: &Rat,
    out: &mut Vec<GridPiece>,
) {
    let certainly_le = |c: Option<Ordering>| matches!(c, Some(Ordering::Less | Ordering::Equal));
    let certainly_ge =
        |c: Option<Ordering>| matches!(c, Some(Ordering::Greater | Ordering::Equal));
    let (flo, fhi) = f_range;
    let mut s = Rat::zero();
    loop {
        let at_bottom = &s >= depth;
        let hi_pt = grid_point(&s);
        let lo_pt = if at_bottom {
            PuiseuxScalar::zero()
        } else {
            grid_point(&(&s + delta))
        };
        // skip only when the fiber is certainly below the slab
        if !at_bottom && certainly_le(g_hi.cmp_scalar(&lo_pt)) {
            s += delta;
            continue;
        }
        // stop once the fiber is certainly above the slab (and all deeper ones)
        if certainly_ge(flo.cmp_scalar(&hi_pt)) {
            break;
        }
        let fiber_inside_slab = certainly_ge(flo.cmp_scalar(&lo_pt))
            && certainly_le(g_hi.cmp_scalar(&hi_pt));
        if fiber_inside_slab {
            let range = (flo.clone(), g_hi.clone());
            out.push(extend_piece(piece, coord.clone(), range));
            return;
        }
        let slab_inside_fiber = certainly_le(fhi.cmp_scalar(&lo_pt))
            && g_lower_at_least(piece, coord, &hi_pt);
        let slab_coord = CellCoord::Thick {
            low: Bound::Const(lo_pt.clone()),
            thick: Bound::Const(&hi_pt - &lo_pt),
        };
        let range = (
            ScalarEnclosure::exact(&lo_pt),
            ScalarEnclosure::exact(&hi_pt),
        );
        let mut p = extend_piece(piece, slab_coord, range);
        p.truncated |= at_bottom;
        if !slab_inside_fiber {
            p.exact = false;
        }
        out.push(p);
        if at_bottom {
            break;
        }
        s += delta;
    }
}

/// Certifies `inf (low + thick) >= pt` over the piece by summing the
/// lower corner ranges of the bound and the thickness.
fn g_lower_at_least(piece: &GridPiece, coord: &CellCoord, pt: &PuiseuxScalar) -> bool {
    let CellCoord::Thick { low, thick } = coord else {
        return false;
    };
    let Ok((flo, _)) = low.range(&piece.ranges) else {
        return false;
    };
    let Ok((hlo, _)) = thick.range(&piece.ranges) else {
        return false;
    };
    let glo = flo.add(&hlo);
    matches!(
        glo.cmp_scalar(pt),
        Some(Ordering::Greater | Ordering::Equal)
    )
}

/// The grid hull of the sublevel set `{ v(thickness_k) <= level }` inside
/// the base of coordinate `k`: the union of grid pieces that certifiably
/// meet it. Every kept piece contains points where the thickness
/// valuation is at most `level` (certified at corners), the union covers
/// the sublevel set, and the result grows with `level`.
pub fn restrict_by_thickness_level(
    cell: &MonomialCell,
    k: usize,
    level: &Rat,
    delta: &Rat,
) -> Result<DefinableSet, SetsError> {
    let thick = match &cell.coords()[k] {
        CellCoord::Thick { thick, .. } => thick.clone(),
        CellCoord::Thin(_) => {
            return Err(SetsError::ClassViolation(
                "restriction needs a thick coordinate".into(),
            ))
        }
    };
    let base = cell.base(k);
    let seed = thick.vars(k);
    let needed = needed_closure(&base, &seed);
    let depth = level.clone().max(Rat::zero()) + crate::rat::rint(2);
    let depth = rat::ceil_to_step(&depth, delta);
    let pieces = grid_split(&base, &needed, delta, &depth)?;
    let mut kept = Vec::new();
    for piece in pieces {
        // The least thickness valuation over the piece is the valuation
        // of the upper range endpoint; the piece meets the sublevel set
        // when that is at most `level`.
        let (_, hhi) = thick.range(&piece.ranges)?;
        let vmin = match hhi.valuation() {
            Valuation::Finite(v) => v,
            Valuation::Infinite => continue,
        };
        if &vmin <= level {
            kept.push(piece.cell);
        }
    }
    DefinableSet::from_cells(k, kept)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rint};

    fn t() -> PuiseuxScalar {
        PuiseuxScalar::t()
    }

    fn tpow(n: i64, d: i64) -> PuiseuxScalar {
        PuiseuxScalar::monomial(rint(1), rat(n, d))
    }

    pub(crate) fn triangle() -> MonomialCell {
        // { 0 < x2 < x1 < t }
        MonomialCell::new(vec![
            CellCoord::Thick { low: Bound::zero(), thick: Bound::Const(t()) },
            CellCoord::Thick {
                low: Bound::zero(),
                thick: Bound::Fn(MonomialFn::var(1, 0)),
            },
        ])
        .unwrap()
    }

    #[test]
    fn box_construction() {
        let c = make_box(&[(PuiseuxScalar::zero(), t())]).unwrap();
        assert!(c.is_open());
        let thin = make_box(&[(PuiseuxScalar::constant(rat(1, 4)), PuiseuxScalar::constant(rat(1, 4)))])
            .unwrap();
        assert!(thin.has_thin());
        let two_d = make_box(&[
            (PuiseuxScalar::zero(), t()),
            (PuiseuxScalar::zero(), tpow(1, 2)),
        ])
        .unwrap();
        assert_eq!(two_d.dim(), 2);
        // out of range
        let err = make_box(&[(PuiseuxScalar::zero(), PuiseuxScalar::constant(rint(2)))]);
        assert!(matches!(err, Err(SetsError::OutOfRange(_))));
        let err = make_box(&[(PuiseuxScalar::constant(rint(-1)), PuiseuxScalar::zero())]);
        assert!(matches!(err, Err(SetsError::OutOfRange(_))));
    }

    #[test]
    fn interior_detection() {
        let thick = DefinableSet::from_cell(
            make_box(&[
                (PuiseuxScalar::zero(), t()),
                (PuiseuxScalar::zero(), tpow(2, 1)),
            ])
            .unwrap(),
        );
        assert!(thick.has_interior());
        let thin = DefinableSet::from_cell(
            make_box(&[
                (PuiseuxScalar::constant(rat(1, 4)), PuiseuxScalar::constant(rat(1, 4))),
                (PuiseuxScalar::zero(), PuiseuxScalar::one()),
            ])
            .unwrap(),
        );
        assert!(!thin.has_interior());
        let both = DefinableSet::union(vec![thin, thick]).unwrap();
        assert!(both.has_interior());
    }

    #[test]
    fn std_interior_detection() {
        let std_box = make_box(&[
            (PuiseuxScalar::zero(), PuiseuxScalar::constant(rat(1, 2))),
            (PuiseuxScalar::zero(), PuiseuxScalar::constant(rat(1, 3))),
        ])
        .unwrap();
        assert!(std_box.has_std_interior());
        let half_inf = make_box(&[
            (PuiseuxScalar::zero(), t()),
            (PuiseuxScalar::zero(), PuiseuxScalar::one()),
        ])
        .unwrap();
        assert!(!half_inf.has_std_interior());
        // thickness x1^2 + t over (0, 1/2): the x1^2 term survives
        let f = MonomialFn::new(
            1,
            vec![
                MonomialTerm::new(rint(1), rint(0), vec![rint(2)]).unwrap(),
                MonomialTerm::new(rint(1), rint(1), vec![rint(0)]).unwrap(),
            ],
        )
        .unwrap();
        let cell = MonomialCell::new(vec![
            CellCoord::Thick {
                low: Bound::zero(),
                thick: Bound::Const(PuiseuxScalar::constant(rat(1, 2))),
            },
            CellCoord::Thick { low: Bound::zero(), thick: Bound::Fn(f) },
        ])
        .unwrap();
        assert!(cell.has_std_interior());
        // independent check: the shadow thickness is positive at x1 = 1/4
        let shadow = cell.std_part().unwrap();
        let h0 = &shadow.coords[1].thick;
        assert_eq!(h0.eval(&[rat(1, 4)]), Some(rat(1, 16)));
    }

    #[test]
    fn std_part_examples() {
        // (0, 1/2 + t) -> (0, 1/2)
        let b = make_box(&[(
            PuiseuxScalar::zero(),
            &PuiseuxScalar::constant(rat(1, 2)) + &t(),
        )])
        .unwrap();
        let sp = b.std_part().unwrap();
        assert_eq!(sp.coords[0].thick, StdPoly::constant(0, rat(1, 2)));
        // cell (0, x1^2 + t) over (0, 1) -> (0, x1^2)
        let f = MonomialFn::new(
            1,
            vec![
                MonomialTerm::new(rint(1), rint(0), vec![rint(2)]).unwrap(),
                MonomialTerm::new(rint(1), rint(1), vec![rint(0)]).unwrap(),
            ],
        )
        .unwrap();
        let cell = MonomialCell::new(vec![
            CellCoord::Thick {
                low: Bound::zero(),
                thick: Bound::Const(PuiseuxScalar::one()),
            },
            CellCoord::Thick { low: Bound::zero(), thick: Bound::Fn(f) },
        ])
        .unwrap();
        let sp = cell.std_part().unwrap();
        assert_eq!(sp.coords[1].thick.terms, vec![(rint(1), vec![rint(2)])]);
        // (0,t)^2 has no standard interior
        let small = DefinableSet::from_cell(
            make_box(&[(PuiseuxScalar::zero(), t()), (PuiseuxScalar::zero(), t())]).unwrap(),
        );
        assert_eq!(small.std_part(), Err(SetsError::NoStdInterior));
    }

    #[test]
    fn thickness_positivity_enforced() {
        let err = make_box(&[(t(), t())]);
        assert!(err.is_ok(), "degenerate box is a thin cell");
        let zero_fn = MonomialFn::zero(1);
        let err = MonomialCell::new(vec![
            CellCoord::Thick { low: Bound::zero(), thick: Bound::Const(t()) },
            CellCoord::Thick { low: Bound::zero(), thick: Bound::Fn(zero_fn) },
        ]);
        assert!(matches!(err, Err(SetsError::ClassViolation(_))));
    }

    #[test]
    fn regression_cell_is_in_class() {
        // thickness t^2 / x1 over base (t^2, t); reaches exactly 1 at the
        // left corner, so containment holds with equality
        let f = MonomialFn::new(
            1,
            vec![MonomialTerm::new(rint(1), rint(2), vec![rint(-1)]).unwrap()],
        )
        .unwrap();
        let base_low = PuiseuxScalar::monomial(rint(1), rint(2));
        let cell = MonomialCell::new(vec![
            CellCoord::Thick {
                low: Bound::Const(base_low),
                thick: Bound::Const(&t() - &PuiseuxScalar::monomial(rint(1), rint(2))),
            },
            CellCoord::Thick { low: Bound::zero(), thick: Bound::Fn(f) },
        ]);
        assert!(cell.is_ok());
    }

    #[test]
    fn restrict_triangle_meets_level_one() {
        let tri = triangle();
        let delta = rat(1, 8);
        let restricted = restrict_by_thickness_level(&tri, 1, &rint(1), &delta).unwrap();
        assert!(!restricted.is_empty());
        // the point t/2 has valuation 1 and lies in some kept piece
        let pt = PuiseuxScalar::monomial(rat(1, 2), rint(1));
        let hit = restricted.cells().iter().any(|c| match &c.coords()[0] {
            CellCoord::Thick { low, thick } => {
                let a = low.as_const().unwrap();
                let b = a + thick.as_const().unwrap();
                *a < pt && pt < b
            }
            _ => false,
        });
        assert!(hit);
    }

    #[test]
    fn restrict_below_min_level_is_empty() {
        // thickness is constant t^2: attainable level is exactly 2
        let cell = MonomialCell::new(vec![
            CellCoord::Thick { low: Bound::zero(), thick: Bound::Const(t()) },
            CellCoord::Thick {
                low: Bound::zero(),
                thick: Bound::Const(PuiseuxScalar::monomial(rint(1), rint(2))),
            },
        ])
        .unwrap();
        let delta = rat(1, 8);
        let below = restrict_by_thickness_level(&cell, 1, &rint(1), &delta).unwrap();
        assert!(below.is_empty());
        let at = restrict_by_thickness_level(&cell, 1, &rint(2), &delta).unwrap();
        assert!(!at.is_empty());
    }

    #[test]
    fn restrict_is_monotone_in_level() {
        let tri = triangle();
        let delta = rat(1, 8);
        let small = restrict_by_thickness_level(&tri, 1, &rint(1), &delta).unwrap();
        let large = restrict_by_thickness_level(&tri, 1, &rat(3, 2), &delta).unwrap();
        assert!(small.cells().len() <= large.cells().len());
        for c in small.cells() {
            assert!(large.cells().contains(c));
        }
    }

    #[test]
    fn axis_split_of_triangle() {
        let tri = DefinableSet::from_cell(triangle());
        let cut = PuiseuxScalar::monomial(rat(1, 2), rint(1));
        let parts = tri.split_axis(0, &cut).unwrap();
        assert_eq!(parts.cells().len(), 2);
        // splitting along the dependent coordinate is out of class
        let err = tri.split_axis(1, &cut);
        assert!(matches!(err, Err(SetsError::ClassViolation(_))));
    }

    #[test]
    fn grid_split_of_interval_partitions() {
        let cell = make_box(&[(PuiseuxScalar::zero(), t())]).unwrap();
        let pieces = grid_split(&cell, &[true], &rat(1, 2), &rint(3)).unwrap();
        assert!(pieces.iter().all(|p| p.exact));
        assert!(pieces.iter().any(|p| p.truncated));
        // pieces tile (0, t): adjacent endpoints match
        let mut endpoints: Vec<(PuiseuxScalar, PuiseuxScalar)> = pieces
            .iter()
            .map(|p| match &p.cell.coords()[0] {
                CellCoord::Thick { low, thick } => {
                    let a = low.as_const().unwrap().clone();
                    let b = &a + thick.as_const().unwrap();
                    (a, b)
                }
                _ => panic!("thick expected"),
            })
            .collect();
        endpoints.sort_by(|x, y| x.0.cmp(&y.0));
        assert_eq!(endpoints.first().unwrap().0, PuiseuxScalar::zero());
        assert_eq!(endpoints.last().unwrap().1, t());
        for w in endpoints.windows(2) {
            assert_eq!(w[0].1, w[1].0);
        }
    }

    #[test]
    fn products_shift_variables() {
        let tri = DefinableSet::from_cell(triangle());
        let seg = DefinableSet::from_cell(make_box(&[(PuiseuxScalar::zero(), t())]).unwrap());
        let prod = seg.product(&tri).unwrap();
        assert_eq!(prod.dim(), 3);
        let cell = &prod.cells()[0];
        match &cell.coords()[2] {
            CellCoord::Thick { thick: Bound::Fn(f), .. } => {
                assert_eq!(f.arity(), 3);
                assert!(f.vars()[1] && !f.vars()[0]);
            }
            other => panic!("unexpected coordinate {other:?}"),
        }
    }
}
