//! Exhaustive and sampled verifiers for the ideal–variety correspondence.
//!
//! Each verifier re-checks one structural statement about `K[S]` on
//! concrete instances and returns a [`VerificationReport`]. Where it is
//! affordable, results are cross-checked against brute-force oracles in
//! [`oracle`] that work directly from the definition of an ideal (all
//! `K[S]`-combinations of the generators) and never consult varieties.
//!
//! All verifiers are deterministic in `(inputs, seed)`.

use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{Field, FieldElement};
use crate::ideal::{bezout_witness, rabinowitsch_lift, vanishing_ideal, Ideal};
use crate::poly::Polynomial;
use crate::ring::{PointSet, RingElement, SubsetOfS};

/// Number of counterexamples kept verbatim in a report.
pub const MAX_REPORTED_FAILURES: usize = 10;

/// Outcome of one verifier run.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub statement_id: String,
    pub scope: String,
    pub instance_count: u64,
    /// Instances that were additionally cross-checked by a brute-force oracle.
    pub oracle_count: u64,
    pub failure_count: u64,
    /// The first [`MAX_REPORTED_FAILURES`] counterexamples.
    pub failures: Vec<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn new(statement_id: &str, scope: impl Into<String>) -> Self {
        VerificationReport {
            statement_id: statement_id.to_string(),
            scope: scope.into(),
            instance_count: 0,
            oracle_count: 0,
            failure_count: 0,
            failures: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        if !ok {
            self.failure_count += 1;
            if self.failures.len() < MAX_REPORTED_FAILURES {
                self.failures.push(describe());
            }
        }
    }

    fn fail_on_error<T>(&mut self, r: Result<T>, context: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.check(false, || format!("{}: unexpected error: {e}", context()));
                None
            }
        }
    }
}

/// Membership decision procedure under test.
pub type MembershipFn = dyn Fn(&RingElement, &Ideal) -> Result<bool> + Sync;

/// The library's membership test.
pub fn standard_membership(phi: &RingElement, ideal: &Ideal) -> Result<bool> {
    ideal.contains(phi)
}

/// A deliberately wrong membership test that ignores the first point of
/// the variety. Used to check that the verifiers detect faults.
pub fn membership_ignoring_first_variety_point(phi: &RingElement, ideal: &Ideal) -> Result<bool> {
    if !Arc::ptr_eq(phi.ring(), ideal.ring()) && **phi.ring() != **ideal.ring() {
        return Err(Error::RingMismatch);
    }
    let variety = ideal.variety();
    let skip = variety.flags().iter().position(|&b| b);
    Ok(variety
        .flags()
        .iter()
        .enumerate()
        .all(|(i, &in_v)| !in_v || Some(i) == skip || phi.values()[i].is_zero()))
}

/// Brute-force oracles over the function space `GF(q)^{|S|}`.
///
/// A function is encoded as its base-`q` index (position 0 least
/// significant). Sets of functions are bitmaps over that index space.
pub mod oracle {
    use crate::gf::{Field, FieldElement};

    /// Largest function space the oracles will enumerate.
    pub const MAX_FUNCTIONS: u64 = 1 << 16;

    #[derive(Clone)]
    pub struct FunctionSpace {
        field: Field,
        len: usize,
        size: u64,
    }

    impl FunctionSpace {
        /// `None` when `q^len` exceeds [`MAX_FUNCTIONS`].
        pub fn new(field: &Field, len: usize) -> Option<FunctionSpace> {
            let size = (field.order() as u64)
                .checked_pow(len as u32)
                .filter(|&s| s <= MAX_FUNCTIONS)?;
            Some(FunctionSpace {
                field: field.clone(),
                len,
                size,
            })
        }

        pub fn size(&self) -> u64 {
            self.size
        }

        pub fn decode(&self, mut idx: u64) -> Vec<FieldElement> {
            let q = self.field.order() as u64;
            (0..self.len)
                .map(|_| {
                    let v = self.field.element((idx % q) as u32).unwrap();
                    idx /= q;
                    v
                })
                .collect()
        }

        pub fn encode(&self, values: &[FieldElement]) -> u64 {
            let q = self.field.order() as u64;
            values
                .iter()
                .rev()
                .fold(0, |acc, v| acc * q + v.index() as u64)
        }

        fn pointwise(
            &self,
            a: &[FieldElement],
            b: &[FieldElement],
            op: impl Fn(FieldElement, FieldElement) -> FieldElement,
        ) -> Vec<FieldElement> {
            a.iter().zip(b).map(|(&x, &y)| op(x, y)).collect()
        }

        /// `{h·g : h ∈ K[S]}` by enumerating every `h`.
        pub fn multiples(&self, g: &[FieldElement]) -> Vec<bool> {
            let mut set = vec![false; self.size as usize];
            for h in 0..self.size {
                let prod = self.pointwise(&self.decode(h), g, |x, y| self.field.mul(x, y));
                set[self.encode(&prod) as usize] = true;
            }
            set
        }

        /// Whether `target = Σ h_i g_i` for some cofactors, given the
        /// multiple-sets of one or two generators.
        pub fn is_combination(&self, multiple_sets: &[&[bool]], target: &[FieldElement]) -> bool {
            match multiple_sets {
                [] => target.iter().all(|v| v.is_zero()),
                [a] => a[self.encode(target) as usize],
                [a, rest @ ..] => a.iter().enumerate().filter(|(_, &m)| m).any(|(i, _)| {
                    let first = self.decode(i as u64);
                    let remainder = self.pointwise(target, &first, |x, y| self.field.sub(x, y));
                    self.is_combination(rest, &remainder)
                }),
            }
        }

        /// `{φ : φ·ψ ∈ I for every ψ ∈ J}` for ideals given as function sets.
        pub fn quotient(&self, i_set: &[bool], j_set: &[bool]) -> Vec<bool> {
            let js: Vec<Vec<FieldElement>> = j_set
                .iter()
                .enumerate()
                .filter(|(_, &m)| m)
                .map(|(k, _)| self.decode(k as u64))
                .collect();
            (0..self.size)
                .map(|phi_idx| {
                    let phi = self.decode(phi_idx);
                    js.iter().all(|psi| {
                        let prod = self.pointwise(&phi, psi, |x, y| self.field.mul(x, y));
                        i_set[self.encode(&prod) as usize]
                    })
                })
                .collect()
        }
    }
}

use oracle::FunctionSpace;

fn show_values(field: &Field, values: &[FieldElement]) -> String {
    let parts: Vec<_> = values.iter().map(|&v| field.format_element(v)).collect();
    format!("({})", parts.join(","))
}

fn show_ideal(ideal: &Ideal) -> String {
    let field = ideal.ring().field();
    let gens: Vec<_> = ideal
        .generators()
        .iter()
        .map(|g| show_values(field, g.values()))
        .collect();
    format!("<{}>", gens.join(", "))
}

fn scope_of(ring: &PointSet) -> String {
    if ring.is_full() {
        format!("{} n={} S=FULL", ring.field(), ring.nvars())
    } else {
        let pts: Vec<_> = ring.points().iter().map(|p| ring.format_point(p)).collect();
        format!(
            "{} n={} S={{{}}}",
            ring.field(),
            ring.nvars(),
            pts.join(" ")
        )
    }
}

fn random_values(ring: &PointSet, rng: &mut ChaCha8Rng) -> Vec<FieldElement> {
    let q = ring.field().order();
    (0..ring.len())
        .map(|_| ring.field().element(rng.gen_range(0..q)).unwrap())
        .collect()
}

fn random_element(ring: &Arc<PointSet>, rng: &mut ChaCha8Rng) -> RingElement {
    RingElement::interpolate(ring, random_values(ring, rng)).expect("length matches")
}

fn element_from_index(ring: &Arc<PointSet>, space: &FunctionSpace, idx: u64) -> RingElement {
    RingElement::interpolate(ring, space.decode(idx)).expect("length matches")
}

/// Mixes a seed with a list of tags into an independent stream seed.
pub fn derive_seed(seed: u64, tags: &[u64]) -> u64 {
    let mut z = seed;
    for &t in tags {
        z = z.wrapping_add(0x9E37_79B9_7F4A_7C15).wrapping_add(t);
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^= z >> 31;
    }
    z
}

fn timed(mut report: VerificationReport, start: Instant) -> VerificationReport {
    report.elapsed = start.elapsed();
    report
}

/// Random proper-ideal-or-not generator lists, checked against the
/// Nullstellensatz: `I_S(V_S(J)) = J` for proper `J`, membership agrees with
/// vanishing on the variety (and with brute-force combinations when
/// `q^{|S|} <= 2^16` and `s <= 2`), certificates verify, and the
/// Rabinowitsch lift has empty variety exactly for members when
/// `|S|·q <= 64`.
pub fn verify_nullstellensatz(
    ring: &Arc<PointSet>,
    trials: usize,
    seed: u64,
) -> VerificationReport {
    verify_nullstellensatz_with(ring, trials, seed, &standard_membership)
}

/// [`verify_nullstellensatz`] with a substitutable membership procedure.
pub fn verify_nullstellensatz_with(
    ring: &Arc<PointSet>,
    trials: usize,
    seed: u64,
    membership: &MembershipFn,
) -> VerificationReport {
    let start = Instant::now();
    let mut report = VerificationReport::new("nullstellensatz", scope_of(ring));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let field = ring.field();
    let space = FunctionSpace::new(field, ring.len());
    let lift_ok = ring.len() as u64 * field.order() as u64 <= 64;

    for _ in 0..trials {
        let s = rng.gen_range(1..=3);
        let gens: Vec<_> = (0..s).map(|_| random_element(ring, &mut rng)).collect();
        let ideal = Ideal::new(gens).expect("nonempty, same ring");
        let variety = ideal.variety();
        let shown = show_ideal(&ideal);

        let oracle_sets: Option<Vec<Vec<bool>>> = space.as_ref().filter(|_| s <= 2).map(|sp| {
            ideal
                .generators()
                .iter()
                .map(|g| sp.multiples(g.values()))
                .collect()
        });

        if !variety.is_empty() {
            let back = vanishing_ideal(&variety);
            report.instance_count += 1;
            let eq = ideal.equals(&back);
            if let Some(eq) = report.fail_on_error(eq, || shown.clone()) {
                report.check(eq, || format!("{shown}: I_S(V_S(J)) differs from J"));
            }
            if let (Some(sp), Some(sets)) = (&space, &oracle_sets) {
                // mutual containment of J and <e> by enumeration
                let refs: Vec<&[bool]> = sets.iter().map(Vec::as_slice).collect();
                let e = back.generators()[0].values();
                let e_in_j = sp.is_combination(&refs, e);
                let e_multiples = sp.multiples(e);
                let j_in_e = ideal
                    .generators()
                    .iter()
                    .all(|g| e_multiples[sp.encode(g.values()) as usize]);
                report.oracle_count += 1;
                report.check(e_in_j && j_in_e, || {
                    format!("{shown}: brute force disagrees with I_S(V_S(J)) = J")
                });
            }
        }

        let mut candidates: Vec<RingElement> = ideal.generators().to_vec();
        candidates.push(random_element(ring, &mut rng));
        candidates.push(RingElement::zero(ring));
        candidates.push(RingElement::one(ring));
        candidates.push(ideal.principal_generator());
        let variety_points: Vec<usize> = (0..ring.len())
            .filter(|&i| variety.contains_index(i))
            .collect();
        let outside: Vec<usize> = (0..ring.len())
            .filter(|&i| !variety.contains_index(i))
            .collect();
        for &i in variety_points.iter().take(16).chain(outside.iter().take(4)) {
            candidates.push(RingElement::indicator(ring, &ring.points()[i]).expect("point of S"));
        }

        for phi in &candidates {
            report.instance_count += 1;
            let describe = || format!("J={shown} phi={}", show_values(field, phi.values()));
            let Some(claimed) = report.fail_on_error(membership(phi, &ideal), describe) else {
                continue;
            };
            let vanishes = phi
                .values()
                .iter()
                .zip(variety.flags())
                .all(|(v, &in_v)| !in_v || v.is_zero());
            report.check(claimed == vanishes, || {
                format!(
                    "{}: membership={claimed} but vanishing on V_S(J)={vanishes}",
                    describe()
                )
            });
            if let (Some(sp), Some(sets)) = (&space, &oracle_sets) {
                let refs: Vec<&[bool]> = sets.iter().map(Vec::as_slice).collect();
                let brute = sp.is_combination(&refs, phi.values());
                report.oracle_count += 1;
                report.check(claimed == brute, || {
                    format!(
                        "{}: membership={claimed} but brute-force combination={brute}",
                        describe()
                    )
                });
            }
            if claimed {
                match ideal.certify(phi) {
                    Ok(cert) => {
                        let ok = cert.verify(phi, &ideal).unwrap_or(false);
                        report.check(ok, || {
                            format!("{}: certificate does not verify", describe())
                        });
                    }
                    Err(e) => {
                        report.check(false, || format!("{}: certify failed: {e}", describe()))
                    }
                }
            }
            if lift_ok {
                if let Some((_, lifted)) =
                    report.fail_on_error(rabinowitsch_lift(&ideal, phi), describe)
                {
                    let empty = lifted.variety().is_empty();
                    report.check(empty == claimed, || {
                        format!(
                            "{}: lifted variety empty={empty} but membership={claimed}",
                            describe()
                        )
                    });
                }
            }
        }
    }
    timed(report, start)
}

/// Rabinowitsch criterion: `V_{S~}(J~) = ∅` iff `φ` vanishes on `V_S(J)`.
/// Exhaustive over all one- and two-generator ideals and all `φ` when that
/// is at most 2^10 cases, otherwise `trials` random cases.
pub fn verify_rabinowitsch(
    ring: &Arc<PointSet>,
    trials: usize,
    seed: u64,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let field = ring.field();
    if ring.len() as u64 * field.order() as u64 > 1 << 12 {
        return Err(Error::Capacity(
            "|S|·q exceeds 2^12 for the Rabinowitsch verifier".into(),
        ));
    }
    let mut report = VerificationReport::new("rabinowitsch", scope_of(ring));
    let space = FunctionSpace::new(field, ring.len());
    let exhaustive = space
        .as_ref()
        .filter(|sp| (sp.size() + sp.size() * sp.size()) * sp.size() <= 1 << 10);

    let check = |report: &mut VerificationReport, ideal: &Ideal, phi: &RingElement| {
        report.instance_count += 1;
        let vanishes = phi
            .values()
            .iter()
            .zip(ideal.variety().flags())
            .all(|(v, &in_v)| !in_v || v.is_zero());
        let describe = || {
            format!(
                "J={} phi={}",
                show_ideal(ideal),
                show_values(field, phi.values())
            )
        };
        if let Some((_, lifted)) = report.fail_on_error(rabinowitsch_lift(ideal, phi), describe) {
            let empty = lifted.variety().is_empty();
            report.check(empty == vanishes, || {
                format!(
                    "{}: lifted variety empty={empty}, phi vanishes on V_S(J)={vanishes}",
                    describe()
                )
            });
        }
    };

    if let Some(sp) = exhaustive {
        let elems: Vec<_> = (0..sp.size())
            .map(|i| element_from_index(ring, sp, i))
            .collect();
        let mut ideals: Vec<Ideal> = elems.iter().map(|g| Ideal::principal(g.clone())).collect();
        for a in &elems {
            for b in &elems {
                ideals.push(Ideal::new(vec![a.clone(), b.clone()])?);
            }
        }
        for ideal in &ideals {
            for phi in &elems {
                check(&mut report, ideal, phi);
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..trials {
            let s = rng.gen_range(1..=3);
            let gens = (0..s).map(|_| random_element(ring, &mut rng)).collect();
            let ideal = Ideal::new(gens)?;
            // bias half the cases towards members
            let phi = if rng.gen_bool(0.5) {
                random_element(ring, &mut rng).mul(&ideal.principal_generator())?
            } else {
                random_element(ring, &mut rng)
            };
            check(&mut report, &ideal, &phi);
        }
    }
    Ok(timed(report, start))
}

/// Weak Nullstellensatz: an ideal with empty variety has a unit certificate
/// `Σ h_i φ_i = [1]` and contains a single nowhere-vanishing element; an
/// ideal with nonempty variety has neither. Exhaustive over all generator
/// pairs when there are at most 2^12 of them, otherwise `trials` samples.
pub fn verify_weak(ring: &Arc<PointSet>, trials: usize, seed: u64) -> VerificationReport {
    let start = Instant::now();
    let mut report = VerificationReport::new("weak-nullstellensatz", scope_of(ring));
    let field = ring.field();
    let space = FunctionSpace::new(field, ring.len());
    let one = RingElement::one(ring);

    let check = |report: &mut VerificationReport,
                 ideal: &Ideal,
                 oracle: Option<(&FunctionSpace, [&[bool]; 2])>| {
        report.instance_count += 1;
        let shown = show_ideal(ideal);
        let empty = ideal.variety().is_empty();
        report.check(ideal.is_proper() != empty, || {
            format!("{shown}: is_proper inconsistent")
        });
        match ideal.unit_certificate() {
            Ok(cert) => {
                report.check(empty, || {
                    format!("{shown}: unit certificate for a proper ideal")
                });
                let ok = cert.verify(&one, ideal).unwrap_or(false);
                report.check(ok, || format!("{shown}: unit certificate does not verify"));
            }
            Err(Error::ProperIdeal) => {
                report.check(!empty, || {
                    format!("{shown}: no unit certificate despite empty variety")
                });
            }
            Err(e) => report.check(false, || format!("{shown}: unexpected error {e}")),
        }
        match ideal.nonvanishing_witness() {
            Ok(w) => {
                let ok = w.element.is_unit()
                    && ideal.contains(&w.element).unwrap_or(false)
                    && Ideal::principal(w.element.clone()).variety().is_empty();
                report.check(ok, || {
                    format!("{shown}: single-element witness vanishes somewhere")
                });
            }
            Err(_) => report.check(!empty, || {
                format!("{shown}: missing single-element witness")
            }),
        }
        if let Some((sp, sets)) = oracle {
            report.oracle_count += 1;
            let brute = sp.is_combination(&sets, one.values());
            report.check(brute == empty, || {
                format!("{shown}: brute force [1] in J = {brute}, empty variety = {empty}")
            });
        }
    };

    match space.as_ref().filter(|sp| sp.size() * sp.size() <= 1 << 12) {
        Some(sp) => {
            let elems: Vec<_> = (0..sp.size())
                .map(|i| element_from_index(ring, sp, i))
                .collect();
            let sets: Vec<Vec<bool>> = elems.iter().map(|e| sp.multiples(e.values())).collect();
            for (i, a) in elems.iter().enumerate() {
                for (j, b) in elems.iter().enumerate() {
                    let ideal = Ideal::new(vec![a.clone(), b.clone()]).expect("same ring");
                    check(&mut report, &ideal, Some((sp, [&sets[i], &sets[j]])));
                }
            }
        }
        None => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..trials {
                let a = random_element(ring, &mut rng);
                let b = random_element(ring, &mut rng);
                let ideal = Ideal::new(vec![a.clone(), b.clone()]).expect("same ring");
                let sets = space
                    .as_ref()
                    .map(|sp| (sp.multiples(a.values()), sp.multiples(b.values())));
                let oracle = match (&space, &sets) {
                    (Some(sp), Some((sa, sb))) => Some((sp, [sa.as_slice(), sb.as_slice()])),
                    _ => None,
                };
                check(&mut report, &ideal, oracle);
            }
        }
    }
    timed(report, start)
}

/// Radicality: `⟨φ⟩ = ⟨φ^m⟩` for random `φ` and `m ∈ [1, 2q]`, and the
/// Bézout reconstruction `φ = u(φ)·φ^m` holds exactly.
pub fn verify_radical(
    ring: &Arc<PointSet>,
    trials: usize,
    seed: u64,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = VerificationReport::new("radical", scope_of(ring));
    let field = ring.field();
    let q = field.order() as u64;
    let space = FunctionSpace::new(field, ring.len());
    let witnesses = (1..=2 * q)
        .map(|m| bezout_witness(m, field))
        .collect::<Result<Vec<_>>>()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..trials {
        let phi = match trial {
            0 => RingElement::zero(ring),
            1 => RingElement::one(ring),
            _ => random_element(ring, &mut rng),
        };
        let m = rng.gen_range(1..=2 * q);
        let power = phi.pow(m);
        let base = Ideal::principal(phi.clone());
        let powered = Ideal::principal(power.clone());
        report.instance_count += 1;
        let describe = || format!("phi={} m={m}", show_values(field, phi.values()));
        let eq = base.equals(&powered)? && powered.contains(&phi)? && base.contains(&power)?;
        report.check(eq, || format!("{}: <phi> != <phi^m>", describe()));
        let witness = &witnesses[(m - 1) as usize];
        let rebuilt = witness.reconstruct(&phi)?;
        report.check(rebuilt == phi, || {
            format!("{}: u(phi)*phi^m != phi", describe())
        });
        let cert = powered.certify(&phi)?;
        report.check(cert.verify(&phi, &powered)?, || {
            format!(
                "{}: certificate for phi in <phi^m> does not verify",
                describe()
            )
        });
        if let Some(sp) = &space {
            report.oracle_count += 1;
            let brute = sp.multiples(power.values())[sp.encode(phi.values()) as usize];
            report.check(brute, || {
                format!("{}: brute force finds phi outside <phi^m>", describe())
            });
        }
    }
    Ok(timed(report, start))
}

/// `u·x^m + v·(x^q − x) = x` as an exact polynomial identity for `m ≤ max_m`.
pub fn verify_bezout(field: &Field, max_m: u64) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = VerificationReport::new("bezout-witness", field.descriptor());
    for m in 1..=max_m {
        let w = bezout_witness(m, field)?;
        report.instance_count += 1;
        report.check(w.verify()?, || format!("m={m}: u={} v={}", w.u, w.v));
    }
    Ok(timed(report, start))
}

/// The correspondence `T ↦ I_S(T)`, `J ↦ V_S(J)` over every subset `T ⊆ S`:
/// `V_S(I_S(T)) = T`, inclusions reverse strictly, and the maximal ideals
/// are exactly the point ideals. Requires `|S| <= 16`; inclusion reversal is
/// checked on all comparable pairs when `|S| <= 10` and on covering pairs
/// otherwise.
pub fn verify_correspondence(ring: &Arc<PointSet>) -> Result<VerificationReport> {
    let start = Instant::now();
    let n = ring.len();
    if n > 16 {
        return Err(Error::Capacity(format!(
            "|S| = {n} exceeds 16 for subset enumeration"
        )));
    }
    let mut report = VerificationReport::new("correspondence", scope_of(ring));
    let masks = 1u64 << n;
    let ideals: Vec<Ideal> = (0..masks)
        .map(|mask| vanishing_ideal(&SubsetOfS::from_mask(ring, mask)))
        .collect();
    for (mask, ideal) in ideals.iter().enumerate() {
        let t = SubsetOfS::from_mask(ring, mask as u64);
        report.instance_count += 1;
        report.check(ideal.variety() == t, || {
            format!("T={t:?}: V_S(I_S(T)) != T")
        });
        report.check(ideal.is_maximal() == (t.len() == 1), || {
            format!(
                "T={t:?}: maximality {} but |T| = {}",
                ideal.is_maximal(),
                t.len()
            )
        });
        report.check(ideal.is_proper() == !t.is_empty(), || {
            format!("T={t:?}: properness disagrees with emptiness")
        });
    }
    let check_pair = |report: &mut VerificationReport, small: u64, big: u64| -> Result<()> {
        report.instance_count += 1;
        let (i_small, i_big) = (&ideals[small as usize], &ideals[big as usize]);
        // T1 ⊆ T2 ⇒ I_S(T2) ⊆ I_S(T1), strictly when T1 ≠ T2
        let reversed = i_small.contains(&i_big.generators()[0])?;
        let strict = small == big || !i_big.contains(&i_small.generators()[0])?;
        report.check(reversed && strict, || {
            format!(
                "T1={:?} T2={:?}: inclusion not reversed strictly",
                SubsetOfS::from_mask(ring, small),
                SubsetOfS::from_mask(ring, big)
            )
        });
        Ok(())
    };
    for big in 0..masks {
        if n <= 10 {
            // every submask of `big`
            let mut small = big;
            loop {
                check_pair(&mut report, small, big)?;
                if small == 0 {
                    break;
                }
                small = (small - 1) & big;
            }
        } else {
            for bit in 0..n {
                if big >> bit & 1 == 1 {
                    check_pair(&mut report, big & !(1 << bit), big)?;
                }
            }
        }
    }
    Ok(timed(report, start))
}

/// Ideal quotients of vanishing ideals: `I_S(T1) : I_S(T2) = I_S(T1 ∖ T2)`
/// and `V_S(I_S(T1) : I_S(T2)) = T1 ∖ T2` for every pair of subsets.
/// Requires `|S| <= 8` and `q^{|S|} <= 2^16`; when `q^{|S|} <= 64` the
/// quotient is also compared with the brute-force definition.
pub fn verify_quotient(ring: &Arc<PointSet>) -> Result<VerificationReport> {
    let start = Instant::now();
    let n = ring.len();
    let space = FunctionSpace::new(ring.field(), n)
        .filter(|_| n <= 8)
        .ok_or_else(|| {
            Error::Capacity("quotient verifier needs |S| <= 8 and q^|S| <= 2^16".into())
        })?;
    let mut report = VerificationReport::new("quotient", scope_of(ring));
    let masks = 1u64 << n;
    let subsets: Vec<SubsetOfS> = (0..masks).map(|m| SubsetOfS::from_mask(ring, m)).collect();
    let ideals: Vec<Ideal> = subsets.iter().map(vanishing_ideal).collect();
    let brute_sets: Option<Vec<Vec<bool>>> = (space.size() <= 64).then(|| {
        ideals
            .iter()
            .map(|i| space.multiples(i.generators()[0].values()))
            .collect()
    });
    for a in 0..masks as usize {
        for b in 0..masks as usize {
            report.instance_count += 1;
            let quot = ideals[a].quotient(&ideals[b])?;
            let diff = subsets[a].difference(&subsets[b])?;
            let expected = &ideals[a & !b];
            let describe = || format!("T1={:?} T2={:?}", subsets[a], subsets[b]);
            report.check(quot.equals(expected)?, || {
                format!("{}: I_S(T1):I_S(T2) != I_S(T1\\T2)", describe())
            });
            report.check(quot.variety() == diff, || {
                format!("{}: V_S(I:J) != V_S(I)\\V_S(J)", describe())
            });
            if let Some(sets) = &brute_sets {
                report.oracle_count += 1;
                let brute = space.quotient(&sets[a], &sets[b]);
                let ours = space.multiples(quot.generators()[0].values());
                report.check(brute == ours, || {
                    format!(
                        "{}: quotient differs from the brute-force definition",
                        describe()
                    )
                });
            }
        }
    }
    Ok(timed(report, start))
}

/// The two sum identities for `F = [f]^{q−1}`, `G = [g]^{q−1}`:
///
/// 1. `V_S(⟨FG − 1⟩) = V_S(⟨F − 1⟩) ∩ V_S(⟨G − 1⟩)` and
///    `⟨FG − 1⟩ = ⟨F − 1⟩ + ⟨G − 1⟩`;
/// 2. `V_S(⟨FG − F − G⟩) = V_S(⟨f⟩) ∩ V_S(⟨g⟩)` and
///    `⟨FG − F − G⟩ = ⟨f⟩ + ⟨g⟩`.
///
/// Exhaustive over all pairs `(f, g)` when there are at most 2^12 of them,
/// otherwise `samples` random pairs. Returns one report per identity.
pub fn verify_sum_identities(
    ring: &Arc<PointSet>,
    samples: usize,
    seed: u64,
) -> Result<[VerificationReport; 2]> {
    let start = Instant::now();
    let scope = scope_of(ring);
    let mut units = VerificationReport::new("sum-identity-units", scope.clone());
    let mut zeros = VerificationReport::new("sum-identity-zeros", scope);
    let field = ring.field();
    let q = field.order() as u64;
    let space = FunctionSpace::new(field, ring.len());
    let one = RingElement::one(ring);

    let pairs: Vec<(RingElement, RingElement)> =
        match space.as_ref().filter(|sp| sp.size() * sp.size() <= 1 << 12) {
            Some(sp) => {
                let elems: Vec<_> = (0..sp.size())
                    .map(|i| element_from_index(ring, sp, i))
                    .collect();
                elems
                    .iter()
                    .flat_map(|a| elems.iter().map(move |b| (a.clone(), b.clone())))
                    .collect()
            }
            None => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                (0..samples)
                    .map(|_| {
                        (
                            random_element(ring, &mut rng),
                            random_element(ring, &mut rng),
                        )
                    })
                    .collect()
            }
        };
    let brute_space = space.filter(|sp| sp.size() <= 1 << 8);

    for (f, g) in &pairs {
        let describe = || {
            format!(
                "f={} g={}",
                show_values(field, f.values()),
                show_values(field, g.values())
            )
        };
        let fp = f.pow(q - 1);
        let gp = g.pow(q - 1);
        let fg = fp.mul(&gp)?;

        let lhs = Ideal::principal(fg.sub(&one)?);
        let a = Ideal::principal(fp.sub(&one)?);
        let b = Ideal::principal(gp.sub(&one)?);
        units.instance_count += 1;
        units.check(
            lhs.variety() == a.variety().intersection(&b.variety())?,
            || format!("{}: variety identity fails", describe()),
        );
        units.check(lhs.equals(&a.sum(&b)?)?, || {
            format!("{}: ideal identity fails", describe())
        });

        let lhs2 = Ideal::principal(fg.sub(&fp)?.sub(&gp)?);
        let fi = Ideal::principal(f.clone());
        let gi = Ideal::principal(g.clone());
        zeros.instance_count += 1;
        zeros.check(
            lhs2.variety() == fi.variety().intersection(&gi.variety())?,
            || format!("{}: variety identity fails", describe()),
        );
        zeros.check(lhs2.equals(&fi.sum(&gi)?)?, || {
            format!("{}: ideal identity fails", describe())
        });

        if let Some(sp) = &brute_space {
            for (report, left, right) in [
                (&mut units, &lhs, [&a, &b]),
                (&mut zeros, &lhs2, [&fi, &gi]),
            ] {
                report.oracle_count += 1;
                let l = left.generators()[0].values();
                let r0 = sp.multiples(right[0].generators()[0].values());
                let r1 = sp.multiples(right[1].generators()[0].values());
                let left_in_right = sp.is_combination(&[&r0, &r1], l);
                let lset = sp.multiples(l);
                let right_in_left = right
                    .iter()
                    .all(|r| lset[sp.encode(r.generators()[0].values()) as usize]);
                report.check(left_in_right && right_in_left, || {
                    format!("{}: brute-force containment fails", describe())
                });
            }
        }
    }
    let elapsed = start.elapsed();
    units.elapsed = elapsed;
    zeros.elapsed = elapsed;
    Ok([units, zeros])
}

/// On `S = GF(q)^n`: `V_S(⟨[f]⟩) = S` iff `[f] ≡ [0]`, over `samples`
/// polynomials of degree up to `2q` per variable. Half of the samples are
/// built as combinations of the field equations and so are zero functions.
pub fn verify_zero_function(
    field: &Field,
    nvars: usize,
    samples: usize,
    seed: u64,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let q = field.order();
    if (q as u64)
        .checked_pow(nvars as u32)
        .is_none_or(|s| s > 1 << 12)
    {
        return Err(Error::Capacity(
            "zero-function verifier needs q^n <= 2^12".into(),
        ));
    }
    let ring = PointSet::full(field, nvars)?;
    let mut report = VerificationReport::new("zero-function", scope_of(&ring));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random_poly = |rng: &mut ChaCha8Rng| -> Result<Polynomial> {
        let nterms = rng.gen_range(1..=5);
        let terms: Vec<_> = (0..nterms)
            .map(|_| {
                let exps = (0..nvars).map(|_| rng.gen_range(0..=2 * q)).collect();
                (exps, field.element(rng.gen_range(1..q)).unwrap())
            })
            .collect();
        Polynomial::from_terms(field, nvars, terms)
    };
    for i in 0..samples {
        let constructed_zero = i % 2 == 1;
        let f = if constructed_zero {
            let mut acc = Polynomial::zero(field, nvars);
            for v in 0..nvars {
                let x = Polynomial::var(field, nvars, v)?;
                let eq = x.pow(q as u64)?.sub(&x)?;
                acc = acc.add(&random_poly(&mut rng)?.mul(&eq)?)?;
            }
            acc
        } else {
            random_poly(&mut rng)?
        };
        report.instance_count += 1;
        let class = RingElement::embed(&f, &ring)?;
        let whole = Ideal::principal(class.clone()).variety() == SubsetOfS::all(&ring);
        let zero = class.is_zero();
        // direct evaluation of the unreduced polynomial
        let direct_zero = ring
            .points()
            .iter()
            .map(|p| f.evaluate(p))
            .collect::<Result<Vec<_>>>()?
            .iter()
            .all(|v| v.is_zero());
        report.check(whole == zero && zero == direct_zero, || {
            format!("f={f}: variety-is-everything={whole}, zero class={zero}, direct={direct_zero}")
        });
        if constructed_zero {
            report.check(zero, || {
                format!("f={f}: combination of field equations is not [0]")
            });
        }
    }
    Ok(timed(report, start))
}

/// Parameters for [`verify_all`].
#[derive(Clone, Debug)]
pub struct VerifyGrid {
    pub fields: Vec<Field>,
    pub nvars: Vec<usize>,
    pub trials: usize,
    pub seed: u64,
    /// Random proper subsets per `(q, n)` cell, in addition to `GF(q)^n`.
    pub random_subsets: usize,
}

impl VerifyGrid {
    pub fn new(fields: Vec<Field>, nvars: Vec<usize>, trials: usize, seed: u64) -> Self {
        VerifyGrid {
            fields,
            nvars,
            trials,
            seed,
            random_subsets: 5,
        }
    }
}

/// A uniformly random nonempty proper subset of `GF(q)^n`.
pub fn random_proper_subset(
    field: &Field,
    nvars: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Arc<PointSet>> {
    let full = PointSet::full(field, nvars)?;
    let total = full.len();
    let size = rng.gen_range(1..total);
    let picked = rand::seq::index::sample(rng, total, size);
    let points = picked.iter().map(|i| full.points()[i].clone()).collect();
    PointSet::new(field, nvars, points)
}

/// Point sets of one grid cell: `GF(q)^n` followed by the random subsets.
pub fn cell_point_sets(
    field: &Field,
    nvars: usize,
    count: usize,
    seed: u64,
) -> Result<Vec<Arc<PointSet>>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sets = vec![PointSet::full(field, nvars)?];
    for _ in 0..count {
        sets.push(random_proper_subset(field, nvars, &mut rng)?);
    }
    Ok(sets)
}

fn verify_cell(
    field: &Field,
    nvars: usize,
    cell: u64,
    grid: &VerifyGrid,
) -> Result<Vec<VerificationReport>> {
    let q = field.order() as u64;
    let seed_for = |tags: &[u64]| {
        let mut all = vec![cell];
        all.extend_from_slice(tags);
        derive_seed(grid.seed, &all)
    };
    let sets = cell_point_sets(field, nvars, grid.random_subsets, seed_for(&[0]))?;
    let mut reports = Vec::new();
    for (k, ring) in sets.iter().enumerate() {
        let k = k as u64 + 1;
        reports.push(verify_nullstellensatz(ring, grid.trials, seed_for(&[k, 1])));
        if ring.len() as u64 * q <= 64 {
            reports.push(verify_rabinowitsch(ring, grid.trials, seed_for(&[k, 2]))?);
        }
        reports.push(verify_weak(ring, grid.trials, seed_for(&[k, 3])));
        reports.push(verify_radical(ring, grid.trials, seed_for(&[k, 4]))?);
        if ring.len() <= 12 {
            reports.push(verify_correspondence(ring)?);
        }
        if ring.len() <= 6 && FunctionSpace::new(field, ring.len()).is_some() {
            reports.push(verify_quotient(ring)?);
        }
        reports.extend(verify_sum_identities(ring, grid.trials, seed_for(&[k, 5]))?);
    }
    if q.checked_pow(nvars as u32).is_some_and(|s| s <= 1 << 12) {
        reports.push(verify_zero_function(
            field,
            nvars,
            grid.trials,
            seed_for(&[0, 6]),
        )?);
    }
    Ok(reports)
}

/// Runs every verifier over the grid: for each field and variable count,
/// `GF(q)^n` plus `random_subsets` random proper subsets; then the Bézout
/// identity per field for `m <= max(10, 2q)`. Cells run in parallel;
/// report order is fixed by grid order.
pub fn verify_all(grid: &VerifyGrid) -> Result<Vec<VerificationReport>> {
    let cells: Vec<(usize, &Field, usize)> = grid
        .fields
        .iter()
        .flat_map(|f| grid.nvars.iter().map(move |&n| (f, n)))
        .enumerate()
        .map(|(i, (f, n))| (i, f, n))
        .collect();
    let per_cell: Vec<Result<Vec<VerificationReport>>> = cells
        .par_iter()
        .map(|&(i, f, n)| verify_cell(f, n, i as u64, grid))
        .collect();
    let mut reports = Vec::new();
    for r in per_cell {
        reports.extend(r?);
    }
    if !grid.nvars.is_empty() {
        for field in &grid.fields {
            let max_m = (2 * field.order() as u64).max(10);
            reports.push(verify_bezout(field, max_m)?);
        }
    }
    Ok(reports)
}
