//! Finite fields GF(p^k).
//!
//! Elements are stored as an index in `0..q`: the coefficient vector
//! `c_0 + c_1 t + ... + c_{k-1} t^{k-1}` maps to `sum c_i p^i`. Index order is
//! therefore the enumeration order (coefficient vectors in lexicographic
//! order, constant term fastest). Multiplication goes through discrete
//! log/antilog tables built once at construction.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest admissible field order.
pub const MAX_FIELD_ORDER: u32 = 1 << 16;
/// Largest admissible extension degree.
pub const MAX_DEGREE: u32 = 8;

/// Description of GF(p^k) together with its arithmetic tables.
pub struct FieldSpec {
    p: u32,
    k: u32,
    q: u32,
    /// Monic modulus, `k + 1` coefficients, constant term first.
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// Shared handle to a [`FieldSpec`]. Cheap to clone; equality compares
/// `(p, k, modulus)`.
#[derive(Clone)]
pub struct Field(Arc<FieldSpec>);

/// An element of some [`Field`], identified by its enumeration index.
///
/// Elements do not carry their field; arithmetic is performed through the
/// owning [`Field`]. Containers (polynomials, ring elements) carry the field
/// and reject mixing.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    /// Enumeration index of this element.
    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Dense F_p polynomial helpers on coefficient vectors (constant term first).
mod fp_poly {
    pub fn trim(mut a: Vec<u32>) -> Vec<u32> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn inv_mod_p(a: u32, p: u32) -> u32 {
        let mut r = 1u64;
        let mut b = a as u64 % p as u64;
        let mut e = p - 2;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p as u64;
            }
            b = b * b % p as u64;
            e >>= 1;
        }
        r as u32
    }

    /// Remainder of `a` divided by nonzero `b`.
    pub fn rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let b = trim(b.to_vec());
        let mut r = trim(a.to_vec());
        let lead_inv = inv_mod_p(*b.last().expect("nonzero divisor"), p);
        while r.len() >= b.len() {
            let shift = r.len() - b.len();
            let c = (*r.last().unwrap() as u64 * lead_inv as u64 % p as u64) as u32;
            for (i, &bi) in b.iter().enumerate() {
                let sub = (c as u64 * bi as u64 % p as u64) as u32;
                r[shift + i] = (r[shift + i] + p - sub) % p;
            }
            r = trim(r);
        }
        r
    }

    pub fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &ai) in a.iter().enumerate() {
            for (j, &bj) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + ai as u64 * bj as u64) % p as u64;
            }
        }
        trim(out.into_iter().map(|c| c as u32).collect())
    }
}

/// Exhaustive irreducibility test: no monic factor of degree `1..=deg/2`.
fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let deg = modulus.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            let mut cand = Vec::with_capacity(d + 1);
            let mut rest = idx;
            for _ in 0..d {
                cand.push((rest % p as u64) as u32);
                rest /= p as u64;
            }
            cand.push(1);
            if fp_poly::rem(modulus, &cand, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Lexicographically smallest monic irreducible of degree `k` over F_p,
/// coefficients compared constant term first. For `k = 1` this is `t`.
pub fn default_modulus(p: u32, k: u32) -> Vec<u32> {
    let k = k as usize;
    let count = (p as u64).pow(k as u32);
    for idx in 0..count {
        // c_0 is the most significant digit of the search order
        let mut cand = vec![0u32; k + 1];
        let mut rest = idx;
        for i in (0..k).rev() {
            cand[i] = (rest % p as u64) as u32;
            rest /= p as u64;
        }
        cand[k] = 1;
        if is_irreducible(&cand, p) {
            return cand;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

impl Field {
    /// Builds GF(p^k) with the default modulus.
    pub fn new(p: u32, k: u32) -> Result<Field> {
        Self::validate_params(p, k)?;
        Self::with_modulus(p, k, default_modulus(p, k))
    }

    /// Builds GF(q) from the field order `q = p^k`.
    pub fn from_order(q: u32) -> Result<Field> {
        let (p, k) = prime_power(q)
            .ok_or_else(|| Error::InvalidField(format!("{q} is not a prime power")))?;
        Self::new(p, k)
    }

    /// Builds GF(p^k) from an explicit monic modulus (constant term first).
    pub fn with_modulus(p: u32, k: u32, modulus: Vec<u32>) -> Result<Field> {
        Self::validate_params(p, k)?;
        if modulus.len() != k as usize + 1 {
            return Err(Error::InvalidField(format!(
                "modulus must have degree {k}, got {} coefficients",
                modulus.len()
            )));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidField(
                "modulus coefficient out of range".into(),
            ));
        }
        if modulus[k as usize] != 1 {
            return Err(Error::InvalidField("modulus must be monic".into()));
        }
        if !is_irreducible(&modulus, p) {
            return Err(Error::InvalidField(format!(
                "modulus {} is reducible over F_{p}",
                format_tpoly(&modulus)
            )));
        }
        let q = p.pow(k);
        let mut spec = FieldSpec {
            p,
            k,
            q,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
        };
        spec.build_tables();
        Ok(Field(Arc::new(spec)))
    }

    fn validate_params(p: u32, k: u32) -> Result<()> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if k == 0 || k > MAX_DEGREE {
            return Err(Error::InvalidField(format!(
                "extension degree must be in 1..={MAX_DEGREE}, got {k}"
            )));
        }
        match (p as u64).checked_pow(k) {
            Some(q) if q <= MAX_FIELD_ORDER as u64 => Ok(()),
            _ => Err(Error::InvalidField(format!(
                "field order {p}^{k} exceeds 2^16"
            ))),
        }
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.0
    }

    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.k
    }

    pub fn order(&self) -> u32 {
        self.0.q
    }

    /// Modulus coefficients, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::ONE
    }

    /// The generator `t` of the extension (equal to 0 when `k = 1`, since
    /// the default modulus is `t`).
    pub fn generator(&self) -> FieldElement {
        if self.0.k == 1 {
            FieldElement((self.0.p - self.0.modulus[0]) % self.0.p)
        } else {
            FieldElement(self.0.p)
        }
    }

    /// Element with the given enumeration index.
    pub fn element(&self, index: u32) -> Result<FieldElement> {
        if index < self.0.q {
            Ok(FieldElement(index))
        } else {
            Err(Error::InvalidElement(format!(
                "index {index} out of range for GF({})",
                self.0.q
            )))
        }
    }

    /// Element from its `k` coefficients in F_p (constant term first).
    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() != self.0.k as usize {
            return Err(Error::InvalidElement(format!(
                "expected {} coefficients, got {}",
                self.0.k,
                coeffs.len()
            )));
        }
        let mut idx = 0u32;
        for &c in coeffs.iter().rev() {
            if c >= self.0.p {
                return Err(Error::InvalidElement(format!(
                    "coefficient {c} not in F_{}",
                    self.0.p
                )));
            }
            idx = idx * self.0.p + c;
        }
        Ok(FieldElement(idx))
    }

    /// Image of an integer under `Z -> F_p -> F_q`.
    pub fn from_int(&self, n: i64) -> FieldElement {
        FieldElement(n.rem_euclid(self.0.p as i64) as u32)
    }

    /// Coefficients of `a` in the basis `1, t, ..., t^{k-1}`.
    pub fn coeffs(&self, a: FieldElement) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.0.k as usize);
        let mut rest = a.0;
        for _ in 0..self.0.k {
            out.push(rest % self.0.p);
            rest /= self.0.p;
        }
        out
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let p = self.0.p;
        if self.0.k == 1 {
            return FieldElement((a.0 + b.0) % p);
        }
        if p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0u32;
        let mut place = 1u32;
        while x > 0 || y > 0 {
            out += ((x % p + y % p) % p) * place;
            x /= p;
            y /= p;
            place *= p;
        }
        FieldElement(out)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let p = self.0.p;
        if p == 2 {
            return a;
        }
        if self.0.k == 1 {
            return FieldElement((p - a.0) % p);
        }
        let mut x = a.0;
        let mut out = 0u32;
        let mut place = 1u32;
        while x > 0 {
            out += ((p - x % p) % p) * place;
            x /= p;
            place *= p;
        }
        FieldElement(out)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement::ZERO;
        }
        let spec = &*self.0;
        FieldElement(spec.exp[(spec.log[a.0 as usize] + spec.log[b.0 as usize]) as usize])
    }

    /// `a^e` with `0^0 = 1`.
    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        if e == 0 {
            return FieldElement::ONE;
        }
        if a.0 == 0 {
            return FieldElement::ZERO;
        }
        let spec = &*self.0;
        let order = (spec.q - 1) as u64;
        let l = spec.log[a.0 as usize] as u64 * (e % order) % order;
        FieldElement(spec.exp[l as usize])
    }

    /// Multiplicative inverse, computed as `a^{q-2}`.
    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.0.q as u64 - 2))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// All `q` elements in enumeration order.
    pub fn enumerate(&self) -> impl Iterator<Item = FieldElement> + Clone {
        (0..self.0.q).map(FieldElement)
    }

    /// Literal form of an element: an integer for prime fields, a polynomial
    /// in `t` otherwise (e.g. `t+1`, `2*t^2+t`).
    pub fn format_element(&self, a: FieldElement) -> String {
        if self.0.k == 1 {
            return a.0.to_string();
        }
        format_tpoly(&self.coeffs(a))
    }

    /// Parses an element literal: an integer (reduced mod p) or a sum of
    /// terms `c`, `c*t^e`, `ct^e`, `t^e` with optional signs. Powers of `t`
    /// are reduced by the modulus.
    pub fn parse_element(&self, text: &str) -> Result<FieldElement> {
        let raw = parse_tpoly(text, self.0.p)?;
        if self.0.k == 1 && raw.len() > 1 {
            return Err(Error::InvalidElement(format!(
                "'{text}' uses t, which is not defined over the prime field GF({})",
                self.0.p
            )));
        }
        let mut r = fp_poly::rem(&raw, &self.0.modulus, self.0.p);
        if self.0.k == 1 {
            r = fp_poly::trim(raw);
        }
        r.resize(self.0.k as usize, 0);
        self.from_coeffs(&r)
    }

    /// Text descriptor, `GF(q)` for default moduli and
    /// `GF(q; modulus=...)` otherwise.
    pub fn descriptor(&self) -> String {
        let spec = &*self.0;
        if spec.k > 1 && spec.modulus != default_modulus(spec.p, spec.k) {
            format!("GF({}; modulus={})", spec.q, format_tpoly(&spec.modulus))
        } else {
            format!("GF({})", spec.q)
        }
    }

    /// Full descriptor including the modulus.
    pub fn full_descriptor(&self) -> String {
        format!(
            "GF({}; modulus={})",
            self.0.q,
            format_tpoly(&self.0.modulus)
        )
    }

    /// Parses `GF(q)`, `GF(p^k)`, or either followed by `; modulus=<poly in t>`.
    pub fn parse_descriptor(text: &str) -> Result<Field> {
        let s = text.trim();
        let inner = s
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::InvalidField(format!("expected GF(...), got '{s}'")))?;
        let (order_part, modulus_part) = match inner.split_once(';') {
            Some((a, b)) => (a.trim(), Some(b.trim())),
            None => (inner.trim(), None),
        };
        let (p, k) = if let Some((base, exp)) = order_part.split_once('^') {
            let p: u32 = base
                .trim()
                .parse()
                .map_err(|_| Error::InvalidField(format!("bad characteristic '{base}'")))?;
            let k: u32 = exp
                .trim()
                .parse()
                .map_err(|_| Error::InvalidField(format!("bad degree '{exp}'")))?;
            Self::validate_params(p, k)?;
            (p, k)
        } else {
            let q: u32 = order_part
                .parse()
                .map_err(|_| Error::InvalidField(format!("bad field order '{order_part}'")))?;
            prime_power(q)
                .ok_or_else(|| Error::InvalidField(format!("{q} is not a prime power")))?
        };
        match modulus_part {
            None => Field::new(p, k),
            Some(m) => {
                let body = m
                    .strip_prefix("modulus")
                    .map(str::trim_start)
                    .and_then(|r| r.strip_prefix('='))
                    .ok_or_else(|| {
                        Error::InvalidField(format!("expected 'modulus=...', got '{m}'"))
                    })?;
                let mut coeffs = fp_poly::trim(parse_tpoly(body, p)?);
                if coeffs.len() != k as usize + 1 {
                    return Err(Error::InvalidField(format!(
                        "modulus '{}' does not have degree {k}",
                        body.trim()
                    )));
                }
                coeffs.resize(k as usize + 1, 0);
                Field::with_modulus(p, k, coeffs)
            }
        }
    }
}

impl FieldSpec {
    fn slow_mul(&self, a: u32, b: u32) -> u32 {
        let to_vec = |x: u32| {
            let mut v = Vec::new();
            let mut r = x;
            for _ in 0..self.k {
                v.push(r % self.p);
                r /= self.p;
            }
            v
        };
        let prod = fp_poly::mul(&fp_poly::trim(to_vec(a)), &fp_poly::trim(to_vec(b)), self.p);
        let r = fp_poly::rem(&prod, &self.modulus, self.p);
        r.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    fn build_tables(&mut self) {
        let q = self.q;
        let order = q - 1;
        let generator = (1..q)
            .find(|&g| {
                let mut x = g;
                let mut n = 1;
                while x != 1 {
                    x = self.slow_mul(x, g);
                    n += 1;
                }
                n == order
            })
            .expect("the multiplicative group of a finite field is cyclic");
        let mut exp = vec![0u32; 2 * order as usize];
        let mut log = vec![0u32; q as usize];
        let mut x = 1u32;
        for i in 0..order {
            exp[i as usize] = x;
            exp[(i + order) as usize] = x;
            log[x as usize] = i;
            x = self.slow_mul(x, generator);
        }
        self.exp = exp;
        self.log = log;
    }
}

/// Returns `(p, k)` with `q = p^k`, if `q` is a prime power.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

fn format_tpoly(coeffs: &[u32]) -> String {
    let mut parts = Vec::new();
    for (i, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let part = match (i, c) {
            (0, c) => c.to_string(),
            (1, 1) => "t".to_string(),
            (1, c) => format!("{c}*t"),
            (i, 1) => format!("t^{i}"),
            (i, c) => format!("{c}*t^{i}"),
        };
        parts.push(part);
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join("+")
    }
}

/// Parses a sum of terms in `t` into an (untrimmed, unreduced) F_p
/// coefficient vector.
fn parse_tpoly(text: &str, p: u32) -> Result<Vec<u32>> {
    let bad = |msg: &str| Error::InvalidElement(format!("'{}': {msg}", text.trim()));
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(bad("empty literal"));
    }
    let bytes = s.as_bytes();
    let mut coeffs: Vec<u32> = vec![0];
    let mut pos = 0;
    while pos < bytes.len() {
        let mut negative = false;
        while pos < bytes.len() && (bytes[pos] == b'+' || bytes[pos] == b'-') {
            if bytes[pos] == b'-' {
                negative = !negative;
            }
            pos += 1;
        }
        let start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        let mut coeff: u64 = if start == pos {
            1
        } else {
            s[start..pos]
                .parse::<u64>()
                .map_err(|_| bad("integer too large"))?
                % p as u64
        };
        let mut degree = 0usize;
        let had_digits = start != pos;
        if pos < bytes.len() && bytes[pos] == b'*' {
            if !had_digits {
                return Err(bad("unexpected '*'"));
            }
            pos += 1;
            if pos >= bytes.len() || bytes[pos] != b't' {
                return Err(bad("expected 't' after '*'"));
            }
        }
        if pos < bytes.len() && bytes[pos] == b't' {
            pos += 1;
            degree = 1;
            if pos < bytes.len() && bytes[pos] == b'^' {
                pos += 1;
                let es = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                if es == pos {
                    return Err(bad("expected exponent after '^'"));
                }
                degree = s[es..pos].parse().map_err(|_| bad("exponent too large"))?;
                if degree > 64 {
                    return Err(bad("exponent too large"));
                }
            }
        } else if !had_digits {
            return Err(bad("expected an integer or 't'"));
        }
        if pos < bytes.len() && bytes[pos] != b'+' && bytes[pos] != b'-' {
            return Err(bad("unexpected character"));
        }
        if negative {
            coeff = (p as u64 - coeff) % p as u64;
        }
        if coeffs.len() <= degree {
            coeffs.resize(degree + 1, 0);
        }
        coeffs[degree] = ((coeffs[degree] as u64 + coeff) % p as u64) as u32;
    }
    Ok(coeffs)
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.k == other.0.k && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.full_descriptor())
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.descriptor())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u32) -> Field {
        Field::from_order(q).unwrap()
    }

    #[test]
    fn add_examples() {
        let f2 = gf(2);
        assert_eq!(f2.add(f2.one(), f2.one()), f2.zero());
        let f3 = gf(3);
        assert_eq!(f3.add(f3.from_int(2), f3.from_int(2)), f3.from_int(1));
        let f4 = gf(4);
        let t = f4.generator();
        let t1 = f4.parse_element("t+1").unwrap();
        assert_eq!(f4.add(t, t1), f4.one());
    }

    #[test]
    fn mul_examples() {
        let f2 = gf(2);
        assert_eq!(f2.mul(f2.one(), f2.one()), f2.one());
        let f4 = gf(4);
        assert_eq!(f4.modulus(), &[1, 1, 1]);
        let t = f4.generator();
        let t1 = f4.parse_element("t+1").unwrap();
        assert_eq!(f4.mul(t, t1), f4.one());
        let f5 = gf(5);
        assert_eq!(f5.mul(f5.from_int(2), f5.from_int(3)), f5.one());
    }

    /// Schoolbook product of coefficient vectors reduced by the modulus,
    /// independent of the log tables.
    fn table_oracle(field: &Field, a: FieldElement, b: FieldElement) -> FieldElement {
        let p = field.characteristic();
        let prod = fp_poly::mul(
            &fp_poly::trim(field.coeffs(a)),
            &fp_poly::trim(field.coeffs(b)),
            p,
        );
        let mut r = fp_poly::rem(&prod, field.modulus(), p);
        r.resize(field.degree() as usize, 0);
        field.from_coeffs(&r).unwrap()
    }

    #[test]
    fn multiplication_matches_schoolbook_table() {
        for q in [2, 3, 4, 5, 8, 9, 16, 25, 27] {
            let f = gf(q);
            for a in f.enumerate() {
                for b in f.enumerate() {
                    assert_eq!(f.mul(a, b), table_oracle(&f, a, b), "q={q}");
                }
            }
        }
    }

    #[test]
    fn inv_examples() {
        let f5 = gf(5);
        assert_eq!(f5.inv(f5.from_int(2)).unwrap(), f5.from_int(3));
        let f2 = gf(2);
        assert_eq!(f2.inv(f2.one()).unwrap(), f2.one());
        let f4 = gf(4);
        assert_eq!(
            f4.inv(f4.generator()).unwrap(),
            f4.parse_element("t+1").unwrap()
        );
        assert_eq!(f4.inv(f4.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn pow_examples() {
        let f4 = gf(4);
        let t = f4.generator();
        assert_eq!(f4.pow(t, 4), t);
        let f3 = gf(3);
        assert_eq!(f3.pow(f3.from_int(2), 2), f3.one());
        let f2 = gf(2);
        assert_eq!(f2.pow(f2.zero(), 0), f2.one());
    }

    #[test]
    fn enumerate_examples() {
        let show = |q| {
            let f = gf(q);
            f.enumerate()
                .map(|e| f.format_element(e))
                .collect::<Vec<_>>()
        };
        assert_eq!(show(2), ["0", "1"]);
        assert_eq!(show(3), ["0", "1", "2"]);
        assert_eq!(show(4), ["0", "1", "t", "t+1"]);
    }

    #[test]
    fn fermat_identities_exhaustive() {
        for q in [2, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
            let f = gf(q);
            let all: Vec<_> = f.enumerate().collect();
            assert_eq!(all.len(), q as usize);
            for &a in &all {
                assert_eq!(f.pow(a, q as u64), a);
                if !a.is_zero() {
                    assert_eq!(f.pow(a, q as u64 - 1), f.one());
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
                }
            }
        }
    }

    #[test]
    fn ring_axioms_exhaustive_small() {
        for q in [2, 3, 4, 5, 7, 8, 9] {
            let f = gf(q);
            for a in f.enumerate() {
                for b in f.enumerate() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.sub(f.add(a, b), b), a);
                    for c in f.enumerate() {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn default_moduli() {
        assert_eq!(default_modulus(2, 1), vec![0, 1]);
        assert_eq!(default_modulus(2, 2), vec![1, 1, 1]);
        assert_eq!(default_modulus(3, 2), vec![1, 0, 1]);
        assert_eq!(default_modulus(2, 3), vec![1, 0, 1, 1]);
        assert_eq!(default_modulus(2, 4), vec![1, 0, 0, 1, 1]);
        // every default modulus up to order 64 is irreducible and monic
        for q in 2..=64u32 {
            if let Some((p, k)) = prime_power(q) {
                let m = default_modulus(p, k);
                assert_eq!(m.len(), k as usize + 1);
                assert!(is_irreducible(&m, p));
            }
        }
    }

    #[test]
    fn construction_errors() {
        assert!(Field::new(4, 1).is_err());
        assert!(Field::new(2, 0).is_err());
        assert!(Field::new(2, 9).is_err());
        assert!(Field::new(257, 2).is_err());
        assert!(Field::from_order(6).is_err());
        assert!(Field::with_modulus(2, 2, vec![1, 0, 1]).is_err());
        assert!(Field::with_modulus(2, 2, vec![1, 1, 0]).is_err());
    }

    #[test]
    fn descriptors() {
        let a = Field::parse_descriptor("GF(4)").unwrap();
        let b = Field::parse_descriptor("GF(4; modulus=t^2+t+1)").unwrap();
        let c = Field::parse_descriptor("GF(2^2)").unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
        assert_eq!(a.descriptor(), "GF(4)");
        let odd = Field::parse_descriptor("GF(9; modulus=t^2+2*t+2)").unwrap();
        assert_ne!(odd, Field::from_order(9).unwrap());
        assert_eq!(odd.descriptor(), "GF(9; modulus=t^2+2*t+2)");
        assert_eq!(Field::parse_descriptor(&odd.descriptor()).unwrap(), odd);
        assert!(Field::parse_descriptor("GF(4; modulus=t^2+1)").is_err());
        assert!(Field::parse_descriptor("F(4)").is_err());
        assert_eq!(gf(5).descriptor(), "GF(5)");
    }

    #[test]
    fn element_literals_round_trip() {
        for q in [2, 3, 4, 8, 9, 27] {
            let f = gf(q);
            for a in f.enumerate() {
                assert_eq!(f.parse_element(&f.format_element(a)).unwrap(), a);
            }
        }
        let f4 = gf(4);
        // t^2 = t + 1
        assert_eq!(
            f4.parse_element("t^2").unwrap(),
            f4.parse_element("t+1").unwrap()
        );
        assert_eq!(f4.parse_element("-t").unwrap(), f4.generator());
        assert!(gf(5).parse_element("t").is_err());
        assert_eq!(gf(5).parse_element("-2").unwrap(), gf(5).from_int(3));
        assert!(f4.parse_element("x").is_err());
    }
}
