//! Ideals of `K[S]` and the ideal–variety correspondence.
//!
//! Every ideal `J ⊲ K[S]` is determined by its variety `V_S(J) ⊆ S`: `J`
//! consists of exactly the elements vanishing on `V_S(J)`, and equals the
//! principal ideal generated by the indicator of `S ∖ V_S(J)`. Membership,
//! equality and the ideal algebra are therefore computed on varieties,
//! while certificates give explicit combinations of the original
//! generators.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::{Field, FieldElement};
use crate::poly::{univariate_ext_gcd, Polynomial};
use crate::ring::{same_ring, PointSet, RingElement, SubsetOfS, MAX_POINTS};

/// A finitely generated ideal `⟨φ_1, …, φ_s⟩ ⊲ K[S]`.
#[derive(Clone)]
pub struct Ideal {
    ring: Arc<PointSet>,
    generators: Vec<RingElement>,
}

/// Witness `φ^m = Σ h_i φ_i` that `φ` lies in an ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipCertificate {
    pub exponent: u32,
    pub cofactors: Vec<RingElement>,
}

/// A single element `φ* = Σ ψ_i φ_i` of an ideal that vanishes nowhere on `S`.
#[derive(Clone, Debug)]
pub struct NonvanishingWitness {
    pub element: RingElement,
    pub weights: Vec<RingElement>,
}

/// Univariate identity `u(x)·x^m + v(x)·(x^q − x) = x` over GF(q).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BezoutWitness {
    pub m: u64,
    pub q: u32,
    pub u: Polynomial,
    pub v: Polynomial,
}

impl Ideal {
    pub fn new(generators: Vec<RingElement>) -> Result<Ideal> {
        let first = generators.first().ok_or(Error::NoGenerators)?;
        let ring = first.ring().clone();
        if generators.iter().any(|g| !same_ring(g.ring(), &ring)) {
            return Err(Error::RingMismatch);
        }
        Ok(Ideal { ring, generators })
    }

    pub fn principal(generator: RingElement) -> Ideal {
        Ideal {
            ring: generator.ring().clone(),
            generators: vec![generator],
        }
    }

    /// `⟨[0]⟩`.
    pub fn zero(ring: &Arc<PointSet>) -> Ideal {
        Self::principal(RingElement::zero(ring))
    }

    /// `⟨[1]⟩ = K[S]`.
    pub fn unit(ring: &Arc<PointSet>) -> Ideal {
        Self::principal(RingElement::one(ring))
    }

    pub fn ring(&self) -> &Arc<PointSet> {
        &self.ring
    }

    pub fn generators(&self) -> &[RingElement] {
        &self.generators
    }

    fn check_ring(&self, other: &Ideal) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    fn check_element(&self, phi: &RingElement) -> Result<()> {
        if same_ring(&self.ring, phi.ring()) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// `V_S(J)`: points of `S` where every generator vanishes.
    pub fn variety(&self) -> SubsetOfS {
        let flags = (0..self.ring.len())
            .map(|i| self.generators.iter().all(|g| g.values()[i].is_zero()))
            .collect();
        SubsetOfS::from_flags(&self.ring, flags).expect("one flag per point")
    }

    /// `J ≠ K[S]`, equivalently `V_S(J) ≠ ∅`.
    pub fn is_proper(&self) -> bool {
        !self.variety().is_empty()
    }

    /// Maximal ideals are exactly the vanishing ideals of single points.
    pub fn is_maximal(&self) -> bool {
        self.variety().len() == 1
    }

    /// Whether `phi ∈ J`, i.e. `phi` vanishes on `V_S(J)`.
    pub fn contains(&self, phi: &RingElement) -> Result<bool> {
        self.check_element(phi)?;
        let variety = self.variety();
        Ok(phi
            .values()
            .iter()
            .zip(variety.flags())
            .all(|(v, &in_variety)| !in_variety || v.is_zero()))
    }

    /// Certificate `phi = Σ h_i φ_i` (exponent 1). At each point the first
    /// generator that does not vanish there carries the whole value.
    pub fn certify(&self, phi: &RingElement) -> Result<MembershipCertificate> {
        self.check_element(phi)?;
        let field = self.ring.field();
        let s = self.generators.len();
        let mut cofactor_values = vec![vec![FieldElement::ZERO; self.ring.len()]; s];
        for (i, &target) in phi.values().iter().enumerate() {
            match self
                .generators
                .iter()
                .position(|g| !g.values()[i].is_zero())
            {
                Some(j) => {
                    cofactor_values[j][i] = field.div(target, self.generators[j].values()[i])?;
                }
                None if target.is_zero() => {}
                None => return Err(Error::NonMember),
            }
        }
        let cofactors = cofactor_values
            .into_iter()
            .map(|vals| RingElement::interpolate(&self.ring, vals))
            .collect::<Result<Vec<_>>>()?;
        Ok(MembershipCertificate {
            exponent: 1,
            cofactors,
        })
    }

    /// An element `φ* = Σ ψ_i φ_i` of `J` with empty zero set, where `ψ_i`
    /// selects at each point the first generator not vanishing there.
    /// Fails with [`Error::ProperIdeal`] when `V_S(J) ≠ ∅`.
    pub fn nonvanishing_witness(&self) -> Result<NonvanishingWitness> {
        let s = self.generators.len();
        let mut weights = vec![vec![FieldElement::ZERO; self.ring.len()]; s];
        for i in 0..self.ring.len() {
            let j = self
                .generators
                .iter()
                .position(|g| !g.values()[i].is_zero())
                .ok_or(Error::ProperIdeal)?;
            weights[j][i] = FieldElement::ONE;
        }
        let weights = weights
            .into_iter()
            .map(|vals| RingElement::interpolate(&self.ring, vals))
            .collect::<Result<Vec<_>>>()?;
        let mut element = RingElement::zero(&self.ring);
        for (w, g) in weights.iter().zip(&self.generators) {
            element = element.add(&w.mul(g)?)?;
        }
        Ok(NonvanishingWitness { element, weights })
    }

    /// Certificate `[1] = Σ h_i φ_i` for an ideal with empty variety, built
    /// as `[1] = (φ*)^{q−2} · φ*` with `φ*` from
    /// [`nonvanishing_witness`](Self::nonvanishing_witness).
    pub fn unit_certificate(&self) -> Result<MembershipCertificate> {
        let witness = self.nonvanishing_witness()?;
        let q = self.ring.field().order() as u64;
        let inverse = witness.element.pow(q - 2);
        let cofactors = witness
            .weights
            .iter()
            .map(|w| inverse.mul(w))
            .collect::<Result<Vec<_>>>()?;
        Ok(MembershipCertificate {
            exponent: 1,
            cofactors,
        })
    }

    /// `I + J`: concatenated generators.
    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let mut generators = self.generators.clone();
        generators.extend(other.generators.iter().cloned());
        Ok(Ideal {
            ring: self.ring.clone(),
            generators,
        })
    }

    /// `I · J`: all pairwise generator products.
    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let mut generators = Vec::with_capacity(self.generators.len() * other.generators.len());
        for a in &self.generators {
            for b in &other.generators {
                generators.push(a.mul(b)?);
            }
        }
        Ok(Ideal {
            ring: self.ring.clone(),
            generators,
        })
    }

    /// `I ∩ J = I_S(V_S(I) ∪ V_S(J))`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        Ok(vanishing_ideal(&self.variety().union(&other.variety())?))
    }

    /// `I : J = I_S(V_S(I) ∖ V_S(J))`.
    pub fn quotient(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        Ok(vanishing_ideal(
            &self.variety().difference(&other.variety())?,
        ))
    }

    /// Every ideal of `K[S]` is radical, so this is the identity.
    pub fn radical(&self) -> Ideal {
        self.clone()
    }

    /// Semantic equality: equal varieties.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        self.check_ring(other)?;
        Ok(self.variety() == other.variety())
    }

    /// `I ⊆ J`.
    pub fn is_subset_of(&self, other: &Ideal) -> Result<bool> {
        self.check_ring(other)?;
        other.variety().is_subset_of(&self.variety())
    }

    /// The canonical principal generator: indicator of `S ∖ V_S(J)`.
    pub fn principal_generator(&self) -> RingElement {
        self.variety().complement().indicator()
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<_> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "<{}>", gens.join(", "))
    }
}

/// `I_S(T)`, returned as the principal ideal of the indicator of `S ∖ T`.
/// `I_S(S) = ⟨[0]⟩` and `I_S(∅) = ⟨[1]⟩`.
pub fn vanishing_ideal(subset: &SubsetOfS) -> Ideal {
    Ideal::principal(subset.complement().indicator())
}

impl MembershipCertificate {
    /// Checks `Σ h_i φ_i = φ^m` pointwise on `S`.
    pub fn verify(&self, phi: &RingElement, ideal: &Ideal) -> Result<bool> {
        if self.cofactors.len() != ideal.generators.len() {
            return Ok(false);
        }
        ideal.check_element(phi)?;
        let mut total = RingElement::zero(ideal.ring());
        for (h, g) in self.cofactors.iter().zip(&ideal.generators) {
            total = total.add(&h.mul(g)?)?;
        }
        Ok(total == phi.pow(self.exponent as u64))
    }
}

/// The ideal `J~ = ⟨φ_1, …, φ_s, [1] − [y]φ⟩` over `S~ = S × GF(q)`, where
/// `y` is a new last variable. `V_{S~}(J~) = ∅` exactly when `phi` vanishes
/// on `V_S(J)`.
pub fn rabinowitsch_lift(ideal: &Ideal, phi: &RingElement) -> Result<(Arc<PointSet>, Ideal)> {
    ideal.check_element(phi)?;
    let ring = ideal.ring();
    let field = ring.field();
    let q = field.order() as u64;
    if ring.len() as u64 * q > MAX_POINTS {
        return Err(Error::Capacity(format!(
            "|S|·q = {} exceeds the cap of 2^16",
            ring.len() as u64 * q
        )));
    }
    let n = ring.nvars();
    let mut points = Vec::with_capacity(ring.len() * q as usize);
    for p in ring.points() {
        for c in field.enumerate() {
            let mut lifted = p.clone();
            lifted.push(c);
            points.push(lifted);
        }
    }
    let lifted_ring = PointSet::new(field, n + 1, points)?;
    let mut generators = ideal
        .generators
        .iter()
        .map(|g| RingElement::embed(&g.representative().extend_vars(1), &lifted_ring))
        .collect::<Result<Vec<_>>>()?;
    let y = Polynomial::var(field, n + 1, n)?;
    let rabinowitsch =
        Polynomial::one(field, n + 1).sub(&y.mul(&phi.representative().extend_vars(1))?)?;
    generators.push(RingElement::embed(&rabinowitsch, &lifted_ring)?);
    Ok((lifted_ring.clone(), Ideal::new(generators)?))
}

/// Cofactors with `u(x)·x^m + v(x)·(x^q − x) = x`, from the extended
/// Euclidean algorithm on `x^m` and `x^q − x`.
pub fn bezout_witness(m: u64, field: &Field) -> Result<BezoutWitness> {
    if m == 0 {
        return Err(Error::Invalid("exponent m must be at least 1".into()));
    }
    let x = Polynomial::var(field, 1, 0)?;
    let field_eq = x.pow(field.order() as u64)?.sub(&x)?;
    let g = univariate_ext_gcd(&x.pow(m)?, &field_eq)?;
    debug_assert_eq!(g.gcd, x);
    Ok(BezoutWitness {
        m,
        q: field.order(),
        u: g.u,
        v: g.v,
    })
}

impl BezoutWitness {
    /// Checks `u·x^m + v·(x^q − x) − x = 0` as a polynomial identity.
    pub fn verify(&self) -> Result<bool> {
        let field = self.u.field();
        let x = Polynomial::var(field, 1, 0)?;
        let field_eq = x.pow(self.q as u64)?.sub(&x)?;
        let lhs = self.u.mul(&x.pow(self.m)?)?.add(&self.v.mul(&field_eq)?)?;
        Ok(lhs.sub(&x)?.is_zero())
    }

    /// `u(φ)·φ^m`, which equals `φ` for every `φ ∈ K[S]`.
    pub fn reconstruct(&self, phi: &RingElement) -> Result<RingElement> {
        phi.apply_univariate(&self.u)?.mul(&phi.pow(self.m))
    }
}
