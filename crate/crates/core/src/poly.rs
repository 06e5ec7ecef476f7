//! Sparse multivariate polynomials over GF(q).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{Field, FieldElement};

/// Per-variable exponent cap for unreduced polynomials.
pub const MAX_EXPONENT: u64 = 1 << 20;

/// Exponent vector of a monomial.
///
/// Ordered graded-lexicographically: total degree first, ties broken by
/// comparing exponents of `x0`, `x1`, ... in turn.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| {
                let e = a as u64 + b as u64;
                if e > MAX_EXPONENT {
                    Err(Error::ExponentOverflow(e))
                } else {
                    Ok(e as u32)
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(Monomial)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Folds an exponent into `0..q`, mapping `e >= 1` to `((e - 1) mod (q - 1)) + 1`
/// so that `x^e` and its reduction agree at 0 as well as on the units.
pub fn reduce_exponent(e: u32, q: u32) -> u32 {
    if e < q {
        e
    } else {
        (e - 1) % (q - 1) + 1
    }
}

/// A polynomial in `nvars` variables over `field`. Zero coefficients are
/// never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    field: Field,
    nvars: usize,
    terms: BTreeMap<Monomial, FieldElement>,
}

impl Polynomial {
    pub fn zero(field: &Field, nvars: usize) -> Self {
        Polynomial {
            field: field.clone(),
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: &Field, nvars: usize, c: FieldElement) -> Self {
        let mut p = Self::zero(field, nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(nvars), c);
        }
        p
    }

    pub fn one(field: &Field, nvars: usize) -> Self {
        Self::constant(field, nvars, FieldElement::ONE)
    }

    /// The variable `x_i` (0-based).
    pub fn var(field: &Field, nvars: usize, i: usize) -> Result<Self> {
        if i >= nvars {
            return Err(Error::Invalid(format!(
                "variable index {i} out of range for {nvars} variables"
            )));
        }
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Ok(Self::monomial(field, Monomial(exps), FieldElement::ONE))
    }

    pub fn monomial(field: &Field, mono: Monomial, c: FieldElement) -> Self {
        let mut p = Self::zero(field, mono.0.len());
        if !c.is_zero() {
            p.terms.insert(mono, c);
        }
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, combining
    /// repeated monomials.
    pub fn from_terms<I>(field: &Field, nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, FieldElement)>,
    {
        let mut p = Self::zero(field, nvars);
        for (exps, c) in terms {
            if exps.len() != nvars {
                return Err(Error::ArityMismatch {
                    expected: nvars,
                    found: exps.len(),
                });
            }
            if let Some(&e) = exps.iter().find(|&&e| e as u64 > MAX_EXPONENT) {
                return Err(Error::ExponentOverflow(e as u64));
            }
            field.element(c.index())?;
            p.add_term(Monomial(exps), c);
        }
        Ok(p)
    }

    /// Univariate polynomial from dense coefficients, constant term first.
    pub fn univariate(field: &Field, coeffs: &[FieldElement]) -> Self {
        let mut p = Self::zero(field, 1);
        for (i, &c) in coeffs.iter().enumerate() {
            p.add_term(Monomial(vec![i as u32]), c);
        }
        p
    }

    fn add_term(&mut self, mono: Monomial, c: FieldElement) {
        if c.is_zero() {
            return;
        }
        let field = &self.field;
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = field.add(*o.get(), c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, FieldElement)> {
        self.terms.iter().rev().map(|(m, &c)| (m, c))
    }

    /// Coefficient of the given monomial (zero when absent).
    pub fn coefficient(&self, exponents: &[u32]) -> FieldElement {
        self.terms
            .get(&Monomial(exponents.to_vec()))
            .copied()
            .unwrap_or(FieldElement::ZERO)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    fn check_compatible(&self, other: &Polynomial) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.nvars != other.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                found: other.nvars,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn neg(&self) -> Polynomial {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = self.field.neg(*c);
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: FieldElement) -> Polynomial {
        if c.is_zero() {
            return Self::zero(&self.field, self.nvars);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = self.field.mul(*v, c);
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        let mut out = Self::zero(&self.field, self.nvars);
        for (ma, &ca) in &self.terms {
            for (mb, &cb) in &other.terms {
                out.add_term(ma.checked_mul(mb)?, self.field.mul(ca, cb));
            }
        }
        Ok(out)
    }

    /// `self^e` by repeated squaring; `f^0 = 1`.
    pub fn pow(&self, e: u64) -> Result<Polynomial> {
        if let Some(max) = self
            .terms
            .keys()
            .flat_map(|m| m.0.iter())
            .map(|&x| x as u64)
            .max()
        {
            if max.saturating_mul(e) > MAX_EXPONENT {
                return Err(Error::ExponentOverflow(max.saturating_mul(e)));
            }
        }
        let mut result = Self::one(&self.field, self.nvars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }

    /// Value at `point`.
    pub fn evaluate(&self, point: &[FieldElement]) -> Result<FieldElement> {
        if point.len() != self.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                found: point.len(),
            });
        }
        let q = self.field.order();
        if let Some(bad) = point.iter().find(|a| a.index() >= q) {
            return Err(Error::InvalidElement(format!(
                "index {} out of range for GF({q})",
                bad.index()
            )));
        }
        Ok(self.eval_unchecked(point))
    }

    pub(crate) fn eval_unchecked(&self, point: &[FieldElement]) -> FieldElement {
        let f = &self.field;
        let mut acc = FieldElement::ZERO;
        for (m, &c) in &self.terms {
            let mut v = c;
            for (&a, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    v = f.mul(v, f.pow(a, e as u64));
                    if v.is_zero() {
                        break;
                    }
                }
            }
            acc = f.add(acc, v);
        }
        acc
    }

    /// Reduces every exponent modulo the field equations `x_i^q = x_i`.
    /// The result has all exponents below `q` and the same value as `self`
    /// at every point of GF(q)^n.
    pub fn reduce_exponents(&self) -> Polynomial {
        let q = self.field.order();
        if self.terms.keys().all(|m| m.0.iter().all(|&e| e < q)) {
            return self.clone();
        }
        let mut out = Self::zero(&self.field, self.nvars);
        for (m, &c) in &self.terms {
            let exps = m.0.iter().map(|&e| reduce_exponent(e, q)).collect();
            out.add_term(Monomial(exps), c);
        }
        out
    }

    /// Whether every exponent is already below `q`.
    pub fn is_reduced(&self) -> bool {
        let q = self.field.order();
        self.terms.keys().all(|m| m.0.iter().all(|&e| e < q))
    }

    /// The same polynomial viewed in `nvars + extra` variables.
    pub fn extend_vars(&self, extra: usize) -> Polynomial {
        let mut out = Self::zero(&self.field, self.nvars + extra);
        for (m, &c) in &self.terms {
            let mut exps = m.0.clone();
            exps.resize(self.nvars + extra, 0);
            out.terms.insert(Monomial(exps), c);
        }
        out
    }

    /// Renders the polynomial with the given variable names.
    pub fn format_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let f = &self.field;
        let mut parts = Vec::with_capacity(self.terms.len());
        for (m, c) in self.terms() {
            let lit = f.format_element(c);
            let coeff = if lit.contains('+') {
                format!("({lit})")
            } else {
                lit
            };
            let mut factors = Vec::new();
            for (name, &e) in names.iter().zip(m.exponents()) {
                match e {
                    0 => {}
                    1 => factors.push(name.clone()),
                    e => factors.push(format!("{name}^{e}")),
                }
            }
            let part = if factors.is_empty() {
                coeff
            } else if c == FieldElement::ONE {
                factors.join("*")
            } else {
                format!("{coeff}*{}", factors.join("*"))
            };
            parts.push(part);
        }
        parts.join(" + ")
    }
}

/// Default variable names: `x, y, z` for up to three variables, otherwise
/// `x0, x1, ...`.
pub fn variable_names(nvars: usize) -> Vec<String> {
    if nvars <= 3 {
        ["x", "y", "z"][..nvars]
            .iter()
            .map(|s| s.to_string())
            .collect()
    } else {
        (0..nvars).map(|i| format!("x{i}")).collect()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with(&variable_names(self.nvars)))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}; n={}]({})", self.field, self.nvars, self)
    }
}

// Dense univariate helpers for the extended Euclidean algorithm.

fn to_dense(p: &Polynomial) -> Result<Vec<FieldElement>> {
    if p.nvars != 1 {
        return Err(Error::NotUnivariate);
    }
    let deg = p.total_degree().unwrap_or(0) as usize;
    let mut out = vec![FieldElement::ZERO; if p.is_zero() { 0 } else { deg + 1 }];
    for (m, &c) in &p.terms {
        out[m.0[0] as usize] = c;
    }
    Ok(out)
}

fn trim(mut a: Vec<FieldElement>) -> Vec<FieldElement> {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

/// Division with remainder of univariate polynomials: `a = quot * b + rem`
/// with `deg rem < deg b`.
pub fn univariate_divrem(a: &Polynomial, b: &Polynomial) -> Result<(Polynomial, Polynomial)> {
    a.check_compatible(b)?;
    let field = a.field.clone();
    let b_dense = trim(to_dense(b)?);
    let Some(&lead) = b_dense.last() else {
        return Err(Error::DivisionByZero);
    };
    let lead_inv = field.inv(lead)?;
    let mut r = trim(to_dense(a)?);
    let mut quot = vec![FieldElement::ZERO; r.len().saturating_sub(b_dense.len()) + 1];
    while r.len() >= b_dense.len() {
        let shift = r.len() - b_dense.len();
        let c = field.mul(*r.last().unwrap(), lead_inv);
        quot[shift] = c;
        for (i, &bi) in b_dense.iter().enumerate() {
            r[shift + i] = field.sub(r[shift + i], field.mul(c, bi));
        }
        r = trim(r);
    }
    Ok((
        Polynomial::univariate(&field, &quot),
        Polynomial::univariate(&field, &r),
    ))
}

/// Result of the extended Euclidean algorithm: `u*a + v*b = gcd`, `gcd` monic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtGcd {
    pub gcd: Polynomial,
    pub u: Polynomial,
    pub v: Polynomial,
}

/// Extended Euclidean algorithm over GF(q)[x].
pub fn univariate_ext_gcd(a: &Polynomial, b: &Polynomial) -> Result<ExtGcd> {
    a.check_compatible(b)?;
    if a.nvars != 1 {
        return Err(Error::NotUnivariate);
    }
    if a.is_zero() && b.is_zero() {
        return Err(Error::BothZero);
    }
    let field = a.field.clone();
    let zero = Polynomial::zero(&field, 1);
    let one = Polynomial::one(&field, 1);
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (one.clone(), zero.clone());
    let (mut t0, mut t1) = (zero, one);
    while !r1.is_zero() {
        let (quot, rem) = univariate_divrem(&r0, &r1)?;
        let s2 = s0.sub(&quot.mul(&s1)?)?;
        let t2 = t0.sub(&quot.mul(&t1)?)?;
        r0 = std::mem::replace(&mut r1, rem);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    let lead = r0.terms().next().map(|(_, c)| c).expect("gcd is nonzero");
    let norm = field.inv(lead)?;
    Ok(ExtGcd {
        gcd: r0.scale(norm),
        u: s0.scale(norm),
        v: t0.scale(norm),
    })
}
