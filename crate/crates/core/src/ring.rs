//! The coordinate ring `K[S]` of a finite point set `S ⊆ GF(q)^n`.
//!
//! A residue class `[f]` is identified by its evaluation vector on `S`
//! (position `i` holds the value at `points[i]`). A reduced polynomial
//! representative is carried along for display and export; it is not
//! unique when `S ≠ GF(q)^n` and never takes part in equality.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::gf::{Field, FieldElement};
use crate::poly::Polynomial;

/// Largest number of points that may be enumerated, both for `S` itself and
/// for `GF(q)^n` when computing complements.
pub const MAX_POINTS: u64 = 1 << 16;

pub type Point = Vec<FieldElement>;

/// A nonempty, duplicate-free, lexicographically ordered set of points.
pub struct PointSet {
    field: Field,
    nvars: usize,
    points: Vec<Point>,
    indicators: OnceLock<Vec<Polynomial>>,
}

fn space_size(field: &Field, nvars: usize) -> Option<u64> {
    (field.order() as u64)
        .checked_pow(nvars as u32)
        .filter(|&n| n <= MAX_POINTS)
}

/// Point of `GF(q)^n` with the given index in canonical (lexicographic)
/// order; the first coordinate is the most significant digit.
pub(crate) fn point_from_index(field: &Field, nvars: usize, mut idx: u64) -> Point {
    let q = field.order() as u64;
    let mut coords = vec![FieldElement::ZERO; nvars];
    for c in coords.iter_mut().rev() {
        *c = field.element((idx % q) as u32).expect("digit below q");
        idx /= q;
    }
    coords
}

/// `δ_a = Π_i (1 − (x_i − a_i)^{q−1})`: 1 at `a`, 0 elsewhere on `GF(q)^n`.
pub fn indicator_polynomial(field: &Field, point: &[FieldElement]) -> Polynomial {
    let n = point.len();
    let q = field.order() as u64;
    let one = Polynomial::one(field, n);
    let mut acc = one.clone();
    for (i, &a) in point.iter().enumerate() {
        let shifted = Polynomial::var(field, n, i)
            .and_then(|x| x.sub(&Polynomial::constant(field, n, a)))
            .and_then(|d| d.pow(q - 1))
            .and_then(|d| one.sub(&d))
            .and_then(|factor| acc.mul(&factor))
            .expect("operands share field and arity");
        acc = shifted;
    }
    acc
}

impl PointSet {
    /// Builds `S` from arbitrary-order points. Rejects empty input,
    /// duplicates, wrong arity, and out-of-range coordinates.
    pub fn new(field: &Field, nvars: usize, mut points: Vec<Point>) -> Result<Arc<PointSet>> {
        if nvars == 0 {
            return Err(Error::Invalid(
                "point sets need at least one variable".into(),
            ));
        }
        if points.is_empty() {
            return Err(Error::EmptyPointSet);
        }
        if points.len() as u64 > MAX_POINTS {
            return Err(Error::Capacity(format!(
                "{} points exceed the cap of 2^16",
                points.len()
            )));
        }
        for p in &points {
            if p.len() != nvars {
                return Err(Error::ArityMismatch {
                    expected: nvars,
                    found: p.len(),
                });
            }
            for a in p {
                field.element(a.index())?;
            }
        }
        points.sort();
        if points.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::DuplicatePoint);
        }
        Ok(Arc::new(PointSet {
            field: field.clone(),
            nvars,
            points,
            indicators: OnceLock::new(),
        }))
    }

    /// `S = GF(q)^n`.
    pub fn full(field: &Field, nvars: usize) -> Result<Arc<PointSet>> {
        let size = space_size(field, nvars).ok_or_else(|| {
            Error::Capacity(format!(
                "GF({})^{nvars} has more than 2^16 points",
                field.order()
            ))
        })?;
        let points = (0..size)
            .map(|i| point_from_index(field, nvars, i))
            .collect();
        Self::new(field, nvars, points)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn index_of(&self, point: &[FieldElement]) -> Option<usize> {
        self.points
            .binary_search_by(|p| p.as_slice().cmp(point))
            .ok()
    }

    /// Whether `S` is all of `GF(q)^n`.
    pub fn is_full(&self) -> bool {
        space_size(&self.field, self.nvars) == Some(self.points.len() as u64)
    }

    /// Indicator polynomials of the points of `S`, computed once.
    pub fn indicator_polynomials(&self) -> &[Polynomial] {
        self.indicators.get_or_init(|| {
            self.points
                .iter()
                .map(|p| indicator_polynomial(&self.field, p))
                .collect()
        })
    }

    pub fn format_point(&self, point: &[FieldElement]) -> String {
        let parts: Vec<_> = point
            .iter()
            .map(|&a| self.field.format_element(a))
            .collect();
        format!("({})", parts.join(","))
    }
}

impl PartialEq for PointSet {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.nvars == other.nvars && self.points == other.points
    }
}

impl Eq for PointSet {}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PointSet[{} n={}]{{", self.field, self.nvars)?;
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(&self.format_point(p))?;
        }
        f.write_str("}")
    }
}

pub(crate) fn same_ring(a: &Arc<PointSet>, b: &Arc<PointSet>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// A residue class `[f] ∈ K[S]`.
#[derive(Clone)]
pub struct RingElement {
    ring: Arc<PointSet>,
    values: Vec<FieldElement>,
    representative: Polynomial,
}

impl RingElement {
    /// Builds an element from an evaluation vector and a representative,
    /// checking that the representative takes those values on `S`.
    pub fn new(
        ring: &Arc<PointSet>,
        values: Vec<FieldElement>,
        representative: Polynomial,
    ) -> Result<RingElement> {
        if values.len() != ring.len() {
            return Err(Error::LengthMismatch {
                expected: ring.len(),
                found: values.len(),
            });
        }
        if representative.field() != ring.field() {
            return Err(Error::FieldMismatch);
        }
        if representative.nvars() != ring.nvars() {
            return Err(Error::ArityMismatch {
                expected: ring.nvars(),
                found: representative.nvars(),
            });
        }
        for (p, &v) in ring.points().iter().zip(&values) {
            ring.field().element(v.index())?;
            if representative.eval_unchecked(p) != v {
                return Err(Error::Invalid(
                    "representative does not match the evaluation vector".into(),
                ));
            }
        }
        Ok(RingElement {
            ring: ring.clone(),
            values,
            representative: representative.reduce_exponents(),
        })
    }

    fn from_parts(
        ring: &Arc<PointSet>,
        values: Vec<FieldElement>,
        representative: Polynomial,
    ) -> Self {
        debug_assert!(representative.is_reduced());
        debug_assert!(ring
            .points()
            .iter()
            .zip(&values)
            .all(|(p, &v)| representative.eval_unchecked(p) == v));
        RingElement {
            ring: ring.clone(),
            values,
            representative,
        }
    }

    /// The residue class `[f]`.
    pub fn embed(f: &Polynomial, ring: &Arc<PointSet>) -> Result<RingElement> {
        if f.field() != ring.field() {
            return Err(Error::FieldMismatch);
        }
        if f.nvars() != ring.nvars() {
            return Err(Error::ArityMismatch {
                expected: ring.nvars(),
                found: f.nvars(),
            });
        }
        let representative = f.reduce_exponents();
        let values = ring
            .points()
            .iter()
            .map(|p| representative.eval_unchecked(p))
            .collect();
        Ok(Self::from_parts(ring, values, representative))
    }

    pub fn constant(ring: &Arc<PointSet>, c: FieldElement) -> RingElement {
        Self::from_parts(
            ring,
            vec![c; ring.len()],
            Polynomial::constant(ring.field(), ring.nvars(), c),
        )
    }

    pub fn zero(ring: &Arc<PointSet>) -> RingElement {
        Self::constant(ring, FieldElement::ZERO)
    }

    pub fn one(ring: &Arc<PointSet>) -> RingElement {
        Self::constant(ring, FieldElement::ONE)
    }

    /// `δ_a`: value 1 at `point`, 0 at every other point of `S`.
    pub fn indicator(ring: &Arc<PointSet>, point: &[FieldElement]) -> Result<RingElement> {
        let idx = ring.index_of(point).ok_or(Error::NotInPointSet)?;
        let mut values = vec![FieldElement::ZERO; ring.len()];
        values[idx] = FieldElement::ONE;
        let representative = ring.indicator_polynomials()[idx].clone();
        Ok(Self::from_parts(ring, values, representative))
    }

    /// The unique element of `K[S]` with the given evaluation vector,
    /// represented by `Σ values[a] · δ_a`.
    pub fn interpolate(ring: &Arc<PointSet>, values: Vec<FieldElement>) -> Result<RingElement> {
        if values.len() != ring.len() {
            return Err(Error::LengthMismatch {
                expected: ring.len(),
                found: values.len(),
            });
        }
        for v in &values {
            ring.field().element(v.index())?;
        }
        let mut rep = Polynomial::zero(ring.field(), ring.nvars());
        for (delta, &v) in ring.indicator_polynomials().iter().zip(&values) {
            if !v.is_zero() {
                rep = rep.add(&delta.scale(v))?;
            }
        }
        Ok(Self::from_parts(ring, values, rep))
    }

    pub fn ring(&self) -> &Arc<PointSet> {
        &self.ring
    }

    pub fn field(&self) -> &Field {
        self.ring.field()
    }

    /// Evaluation vector, aligned with `ring().points()`.
    pub fn values(&self) -> &[FieldElement] {
        &self.values
    }

    pub fn representative(&self) -> &Polynomial {
        &self.representative
    }

    /// `[f] ≡ [0]`, i.e. `f` vanishes on all of `S`.
    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.values.iter().all(|&v| v == FieldElement::ONE)
    }

    /// Whether the element is nonzero at every point of `S`.
    pub fn is_unit(&self) -> bool {
        self.values.iter().all(|v| !v.is_zero())
    }

    fn check_ring(&self, other: &RingElement) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    fn zip_with(
        &self,
        other: &RingElement,
        op: impl Fn(FieldElement, FieldElement) -> FieldElement,
    ) -> Vec<FieldElement> {
        self.values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| op(a, b))
            .collect()
    }

    pub fn add(&self, other: &RingElement) -> Result<RingElement> {
        self.check_ring(other)?;
        let f = self.field();
        let values = self.zip_with(other, |a, b| f.add(a, b));
        let rep = self.representative.add(&other.representative)?;
        Ok(Self::from_parts(&self.ring, values, rep))
    }

    pub fn sub(&self, other: &RingElement) -> Result<RingElement> {
        self.check_ring(other)?;
        let f = self.field();
        let values = self.zip_with(other, |a, b| f.sub(a, b));
        let rep = self.representative.sub(&other.representative)?;
        Ok(Self::from_parts(&self.ring, values, rep))
    }

    pub fn neg(&self) -> RingElement {
        let f = self.field();
        let values = self.values.iter().map(|&a| f.neg(a)).collect();
        Self::from_parts(&self.ring, values, self.representative.neg())
    }

    pub fn mul(&self, other: &RingElement) -> Result<RingElement> {
        self.check_ring(other)?;
        let f = self.field();
        let values = self.zip_with(other, |a, b| f.mul(a, b));
        let rep = self
            .representative
            .mul(&other.representative)?
            .reduce_exponents();
        Ok(Self::from_parts(&self.ring, values, rep))
    }

    pub fn scale(&self, c: FieldElement) -> RingElement {
        let f = self.field();
        let values = self.values.iter().map(|&a| f.mul(a, c)).collect();
        Self::from_parts(&self.ring, values, self.representative.scale(c))
    }

    /// `self^e` by square-and-multiply, reducing the representative at
    /// every step; `[f]^0 = [1]`.
    pub fn pow(&self, e: u64) -> RingElement {
        let mut result = Self::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).expect("same ring");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same ring");
            }
        }
        result
    }

    /// `u(self)` for a univariate polynomial `u`, by Horner's rule in `K[S]`.
    pub fn apply_univariate(&self, u: &Polynomial) -> Result<RingElement> {
        if u.nvars() != 1 {
            return Err(Error::NotUnivariate);
        }
        if u.field() != self.field() {
            return Err(Error::FieldMismatch);
        }
        let deg = u.total_degree().unwrap_or(0) as u32;
        let mut acc = Self::zero(&self.ring);
        for d in (0..=deg).rev() {
            let c = u.coefficient(&[d]);
            acc = acc.mul(self)?.add(&Self::constant(&self.ring, c))?;
        }
        Ok(acc)
    }

    /// Points of `S` where the element vanishes.
    pub fn zero_set(&self) -> SubsetOfS {
        SubsetOfS {
            ring: self.ring.clone(),
            flags: self.values.iter().map(|v| v.is_zero()).collect(),
        }
    }
}

impl PartialEq for RingElement {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.values == other.values
    }
}

impl Eq for RingElement {}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vals: Vec<_> = self
            .values
            .iter()
            .map(|&v| self.field().format_element(v))
            .collect();
        write!(f, "[{}] values=({})", self.representative, vals.join(","))
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.representative)
    }
}

/// A subset `T ⊆ S`, stored as membership flags aligned with `S`.
#[derive(Clone)]
pub struct SubsetOfS {
    ring: Arc<PointSet>,
    flags: Vec<bool>,
}

impl SubsetOfS {
    pub fn from_flags(ring: &Arc<PointSet>, flags: Vec<bool>) -> Result<SubsetOfS> {
        if flags.len() != ring.len() {
            return Err(Error::LengthMismatch {
                expected: ring.len(),
                found: flags.len(),
            });
        }
        Ok(SubsetOfS {
            ring: ring.clone(),
            flags,
        })
    }

    /// Subset from a bitmask over the points of `S` (bit `i` ↔ `points[i]`).
    pub fn from_mask(ring: &Arc<PointSet>, mask: u64) -> SubsetOfS {
        SubsetOfS {
            ring: ring.clone(),
            flags: (0..ring.len())
                .map(|i| i < 64 && mask >> i & 1 == 1)
                .collect(),
        }
    }

    pub fn from_points(ring: &Arc<PointSet>, points: &[Point]) -> Result<SubsetOfS> {
        let mut flags = vec![false; ring.len()];
        for p in points {
            flags[ring.index_of(p).ok_or(Error::NotInPointSet)?] = true;
        }
        Ok(SubsetOfS {
            ring: ring.clone(),
            flags,
        })
    }

    pub fn empty(ring: &Arc<PointSet>) -> SubsetOfS {
        SubsetOfS {
            ring: ring.clone(),
            flags: vec![false; ring.len()],
        }
    }

    pub fn all(ring: &Arc<PointSet>) -> SubsetOfS {
        SubsetOfS {
            ring: ring.clone(),
            flags: vec![true; ring.len()],
        }
    }

    pub fn ring(&self) -> &Arc<PointSet> {
        &self.ring
    }

    pub fn flags(&self) -> &[bool] {
        &self.flags
    }

    pub fn contains_index(&self, i: usize) -> bool {
        self.flags[i]
    }

    pub fn len(&self) -> usize {
        self.flags.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.flags.iter().any(|&b| b)
    }

    /// Member points in canonical order.
    pub fn points(&self) -> Vec<&Point> {
        self.ring
            .points()
            .iter()
            .zip(&self.flags)
            .filter_map(|(p, &b)| b.then_some(p))
            .collect()
    }

    fn combine(&self, other: &SubsetOfS, op: impl Fn(bool, bool) -> bool) -> Result<SubsetOfS> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(SubsetOfS {
            ring: self.ring.clone(),
            flags: self
                .flags
                .iter()
                .zip(&other.flags)
                .map(|(&a, &b)| op(a, b))
                .collect(),
        })
    }

    pub fn union(&self, other: &SubsetOfS) -> Result<SubsetOfS> {
        self.combine(other, |a, b| a || b)
    }

    pub fn intersection(&self, other: &SubsetOfS) -> Result<SubsetOfS> {
        self.combine(other, |a, b| a && b)
    }

    pub fn difference(&self, other: &SubsetOfS) -> Result<SubsetOfS> {
        self.combine(other, |a, b| a && !b)
    }

    pub fn complement(&self) -> SubsetOfS {
        SubsetOfS {
            ring: self.ring.clone(),
            flags: self.flags.iter().map(|b| !b).collect(),
        }
    }

    pub fn is_subset_of(&self, other: &SubsetOfS) -> Result<bool> {
        Ok(self.difference(other)?.is_empty())
    }

    /// `Σ_{a ∈ T} δ_a`, the idempotent supported on `T`.
    pub fn indicator(&self) -> RingElement {
        let values = self
            .flags
            .iter()
            .map(|&b| {
                if b {
                    FieldElement::ONE
                } else {
                    FieldElement::ZERO
                }
            })
            .collect();
        RingElement::interpolate(&self.ring, values).expect("length matches")
    }
}

impl PartialEq for SubsetOfS {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.flags == other.flags
    }
}

impl Eq for SubsetOfS {}

impl fmt::Debug for SubsetOfS {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pts: Vec<_> = self
            .points()
            .into_iter()
            .map(|p| self.ring.format_point(p))
            .collect();
        write!(f, "{{{}}}", pts.join(", "))
    }
}

/// Generators of `I(S) ⊲ K[x]`: the field equations `x_i^q − x_i`, plus the
/// complement indicator `Σ_{b ∉ S} δ_b` when `S ≠ GF(q)^n`.
pub fn ideal_of_pointset(ring: &PointSet) -> Result<Vec<Polynomial>> {
    let field = ring.field();
    let n = ring.nvars();
    let size = space_size(field, n).ok_or_else(|| {
        Error::Capacity(format!(
            "GF({})^{n} has more than 2^16 points",
            field.order()
        ))
    })?;
    let mut gens = Vec::with_capacity(n + 1);
    for i in 0..n {
        let x = Polynomial::var(field, n, i)?;
        gens.push(x.pow(field.order() as u64)?.sub(&x)?);
    }
    if !ring.is_full() {
        let outside = size as usize - ring.len();
        // Σ over all of GF(q)^n of δ_b is 1, so sum over the smaller side.
        let complement = if outside <= ring.len() {
            let mut acc = Polynomial::zero(field, n);
            for idx in 0..size {
                let b = point_from_index(field, n, idx);
                if ring.index_of(&b).is_none() {
                    acc = acc.add(&indicator_polynomial(field, &b))?;
                }
            }
            acc
        } else {
            let mut acc = Polynomial::one(field, n);
            for delta in ring.indicator_polynomials() {
                acc = acc.sub(delta)?;
            }
            acc
        };
        gens.push(complement);
    }
    Ok(gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u32) -> Field {
        Field::from_order(q).unwrap()
    }

    fn pt(f: &Field, coords: &[i64]) -> Point {
        coords.iter().map(|&c| f.from_int(c)).collect()
    }

    fn x(f: &Field, n: usize, i: usize) -> Polynomial {
        Polynomial::var(f, n, i).unwrap()
    }

    fn ints(f: &Field, vals: &[i64]) -> Vec<FieldElement> {
        vals.iter().map(|&v| f.from_int(v)).collect()
    }

    #[test]
    fn point_set_construction() {
        let f = gf(3);
        let s = PointSet::new(&f, 1, vec![pt(&f, &[2]), pt(&f, &[0])]).unwrap();
        assert_eq!(s.points(), &[pt(&f, &[0]), pt(&f, &[2])]);
        assert_eq!(
            PointSet::new(&f, 1, vec![]).unwrap_err(),
            Error::EmptyPointSet
        );
        assert_eq!(
            PointSet::new(&f, 1, vec![pt(&f, &[1]), pt(&f, &[1])]).unwrap_err(),
            Error::DuplicatePoint
        );
        assert!(PointSet::new(&f, 2, vec![pt(&f, &[1])]).is_err());
        let full = PointSet::full(&f, 2).unwrap();
        assert_eq!(full.len(), 9);
        assert!(full.is_full());
        assert_eq!(full.points()[1], pt(&f, &[0, 1]));
        assert_eq!(full.points()[3], pt(&f, &[1, 0]));
        assert!(PointSet::full(&gf(256), 3).is_err());
    }

    #[test]
    fn embed_examples() {
        let f2 = gf(2);
        let s = PointSet::full(&f2, 1).unwrap();
        let xx = x(&f2, 1, 0);
        let e = RingElement::embed(&xx.pow(2).unwrap().add(&xx).unwrap(), &s).unwrap();
        assert!(e.is_zero());
        assert_eq!(e, RingElement::zero(&s));
        assert!(RingElement::embed(&Polynomial::one(&f2, 1), &s)
            .unwrap()
            .is_one());

        let f3 = gf(3);
        let s = PointSet::new(&f3, 1, vec![pt(&f3, &[1]), pt(&f3, &[2])]).unwrap();
        let e = RingElement::embed(&x(&f3, 1, 0).pow(2).unwrap(), &s).unwrap();
        assert_eq!(e.values(), ints(&f3, &[1, 1]).as_slice());

        assert_eq!(
            RingElement::embed(&x(&f2, 1, 0), &PointSet::full(&f3, 1).unwrap()).unwrap_err(),
            Error::FieldMismatch
        );
    }

    #[test]
    fn ring_op_examples() {
        let f2 = gf(2);
        let s = PointSet::full(&f2, 1).unwrap();
        let a = RingElement::embed(&x(&f2, 1, 0), &s).unwrap();
        let b =
            RingElement::embed(&x(&f2, 1, 0).add(&Polynomial::one(&f2, 1)).unwrap(), &s).unwrap();
        assert!(a.mul(&b).unwrap().is_zero());
        assert_eq!(RingElement::one(&s).mul(&a).unwrap(), a);

        let f4 = gf(4);
        let s4 = PointSet::full(&f4, 2).unwrap();
        let g = RingElement::embed(
            &x(&f4, 2, 0)
                .mul(&x(&f4, 2, 1))
                .unwrap()
                .add(&Polynomial::constant(&f4, 2, f4.generator()))
                .unwrap(),
            &s4,
        )
        .unwrap();
        assert_eq!(g.pow(4), g);
        assert!(g.pow(4).representative().is_reduced());

        let other = PointSet::full(&f2, 2).unwrap();
        assert_eq!(
            a.add(&RingElement::zero(&other)).unwrap_err(),
            Error::RingMismatch
        );
    }

    #[test]
    fn indicator_examples() {
        let f2 = gf(2);
        let s = PointSet::full(&f2, 1).unwrap();
        let d1 = RingElement::indicator(&s, &pt(&f2, &[1])).unwrap();
        assert_eq!(d1.representative(), &x(&f2, 1, 0));
        let d0 = RingElement::indicator(&s, &pt(&f2, &[0])).unwrap();
        assert_eq!(d0.representative().to_string(), "x + 1");
        let f3 = gf(3);
        let s3 = PointSet::full(&f3, 1).unwrap();
        let d = RingElement::indicator(&s3, &pt(&f3, &[0])).unwrap();
        assert_eq!(d.representative().to_string(), "2*x^2 + 1");
        assert_eq!(d.values(), ints(&f3, &[1, 0, 0]).as_slice());
        let partial = PointSet::new(&f3, 1, vec![pt(&f3, &[1])]).unwrap();
        assert_eq!(
            RingElement::indicator(&partial, &pt(&f3, &[0])).unwrap_err(),
            Error::NotInPointSet
        );
    }

    #[test]
    fn indicators_form_orthogonal_idempotents() {
        for (q, n) in [(2, 2), (3, 2), (4, 1), (2, 3), (5, 1)] {
            let f = gf(q);
            let s = PointSet::full(&f, n).unwrap();
            assert!(s.len() <= 64);
            let deltas: Vec<_> = s
                .points()
                .iter()
                .map(|p| RingElement::indicator(&s, p).unwrap())
                .collect();
            let mut total = RingElement::zero(&s);
            for (i, a) in deltas.iter().enumerate() {
                total = total.add(a).unwrap();
                for (j, b) in deltas.iter().enumerate() {
                    let prod = a.mul(b).unwrap();
                    if i == j {
                        assert_eq!(&prod, a);
                    } else {
                        assert!(prod.is_zero());
                    }
                }
            }
            assert!(total.is_one());
            assert_eq!(total.representative(), &Polynomial::one(&f, n));
        }
    }

    #[test]
    fn interpolate_examples() {
        let f2 = gf(2);
        let s = PointSet::full(&f2, 1).unwrap();
        assert!(RingElement::interpolate(&s, ints(&f2, &[0, 0]))
            .unwrap()
            .is_zero());
        let e = RingElement::interpolate(&s, ints(&f2, &[0, 1])).unwrap();
        assert_eq!(e, RingElement::embed(&x(&f2, 1, 0), &s).unwrap());
        assert_eq!(e.representative(), &x(&f2, 1, 0));
        assert!(matches!(
            RingElement::interpolate(&s, ints(&f2, &[1])),
            Err(Error::LengthMismatch { .. })
        ));

        let f3 = gf(3);
        let s = PointSet::new(
            &f3,
            2,
            vec![pt(&f3, &[0, 1]), pt(&f3, &[2, 2]), pt(&f3, &[1, 0])],
        )
        .unwrap();
        let f = x(&f3, 2, 0).pow(5).unwrap().add(&x(&f3, 2, 1)).unwrap();
        let e = RingElement::embed(&f, &s).unwrap();
        assert_eq!(
            RingElement::interpolate(&s, e.values().to_vec()).unwrap(),
            e
        );
    }

    #[test]
    fn explicit_constructor_checks_representative() {
        let f2 = gf(2);
        let s = PointSet::full(&f2, 1).unwrap();
        assert!(RingElement::new(&s, ints(&f2, &[0, 1]), x(&f2, 1, 0)).is_ok());
        assert!(RingElement::new(&s, ints(&f2, &[1, 1]), x(&f2, 1, 0)).is_err());
    }

    #[test]
    fn ideal_of_pointset_examples() {
        let f2 = gf(2);
        let s = PointSet::full(&f2, 1).unwrap();
        let gens = ideal_of_pointset(&s).unwrap();
        assert_eq!(gens.len(), 1);
        assert_eq!(gens[0].to_string(), "x^2 + x");

        let s1 = PointSet::new(&f2, 1, vec![pt(&f2, &[1])]).unwrap();
        let gens = ideal_of_pointset(&s1).unwrap();
        let shown: Vec<_> = gens.iter().map(|g| g.to_string()).collect();
        assert_eq!(shown, ["x^2 + x", "x + 1"]);

        let f3 = gf(3);
        let gens = ideal_of_pointset(&PointSet::full(&f3, 1).unwrap()).unwrap();
        assert_eq!(gens[0].to_string(), "x^3 + 2*x");
    }

    #[test]
    fn ideal_of_pointset_cuts_out_exactly_s() {
        for (q, n) in [(2, 2), (3, 2), (4, 1), (2, 3)] {
            let f = gf(q);
            let full = PointSet::full(&f, n).unwrap();
            // a few subsets of both sizes relative to the complement
            for stride in [1usize, 2, 3, 5] {
                let pts: Vec<_> = full.points().iter().step_by(stride).cloned().collect();
                let s = PointSet::new(&f, n, pts).unwrap();
                let gens = ideal_of_pointset(&s).unwrap();
                for b in full.points() {
                    let vanishes = gens.iter().all(|g| g.evaluate(b).unwrap().is_zero());
                    assert_eq!(
                        vanishes,
                        s.index_of(b).is_some(),
                        "q={q} n={n} stride={stride}"
                    );
                }
            }
        }
    }

    #[test]
    fn equal_embeddings_iff_difference_vanishes() {
        let f = gf(3);
        let s = PointSet::new(&f, 1, vec![pt(&f, &[0]), pt(&f, &[2])]).unwrap();
        let polys: Vec<Polynomial> = (0..9u32)
            .map(|i| {
                Polynomial::from_terms(
                    &f,
                    1,
                    [
                        (vec![2], f.from_int((i / 3) as i64)),
                        (vec![0], f.from_int((i % 3) as i64)),
                    ],
                )
                .unwrap()
            })
            .collect();
        for a in &polys {
            for b in &polys {
                let diff = a.sub(b).unwrap();
                let vanishes = s
                    .points()
                    .iter()
                    .all(|p| diff.evaluate(p).unwrap().is_zero());
                let same = RingElement::embed(a, &s).unwrap() == RingElement::embed(b, &s).unwrap();
                assert_eq!(vanishes, same);
            }
        }
    }

    #[test]
    fn subset_algebra() {
        let f = gf(2);
        let s = PointSet::full(&f, 2).unwrap();
        let a = SubsetOfS::from_mask(&s, 0b0011);
        let b = SubsetOfS::from_mask(&s, 0b0110);
        assert_eq!(a.union(&b).unwrap(), SubsetOfS::from_mask(&s, 0b0111));
        assert_eq!(
            a.intersection(&b).unwrap(),
            SubsetOfS::from_mask(&s, 0b0010)
        );
        assert_eq!(a.difference(&b).unwrap(), SubsetOfS::from_mask(&s, 0b0001));
        assert!(SubsetOfS::from_mask(&s, 0b0010).is_subset_of(&a).unwrap());
        assert_eq!(a.complement(), SubsetOfS::from_mask(&s, 0b1100));
        assert_eq!(a.indicator().values(), ints(&f, &[1, 1, 0, 0]).as_slice());
        assert!(SubsetOfS::from_flags(&s, vec![true]).is_err());
    }
}
