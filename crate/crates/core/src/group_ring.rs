//! Construction of the group ring `R[G]` as an explicit table.
//!
//! An element of `R[G]` is a coefficient vector indexed by group elements.
//! Vectors are mixed-radix encoded into a single dense index (the identity
//! coefficient is the least significant digit), which makes `R[G]` an ordinary
//! [`RingTable`] so that all of the heavy ideal/radical machinery applies
//! unchanged. The basis metadata retains the coefficient ring and group for
//! decoding, augmentation and scalar restriction.

use std::sync::Arc;

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::ring::ideal::{ideal_generated, IdealRef, Sidedness};
use crate::ring::{check_ring_cap, RingQuotient, RingTable};

/// Basis metadata carried by a group-ring table.
#[derive(Debug, Clone)]
pub struct GroupRingMeta {
    pub coeff: Arc<RingTable>,
    pub group: Arc<GroupTable>,
    powers: Vec<u64>,
}

impl GroupRingMeta {
    /// Coefficient vector of the element, indexed by group element.
    pub fn decode(&self, x: usize) -> Vec<usize> {
        let base = self.coeff.size() as u64;
        let mut digits = Vec::with_capacity(self.group.order());
        let mut v = x as u64;
        for _ in 0..self.group.order() {
            digits.push((v % base) as usize);
            v /= base;
        }
        digits
    }

    /// Inverse of [`GroupRingMeta::decode`].
    pub fn encode(&self, coeffs: &[usize]) -> usize {
        debug_assert_eq!(coeffs.len(), self.group.order());
        coeffs
            .iter()
            .zip(&self.powers)
            .map(|(&c, &p)| c as u64 * p)
            .sum::<u64>() as usize
    }

    /// The image of a coefficient-ring element under r -> r*1_G.
    pub fn embed_coeff(&self, r: usize) -> usize {
        r
    }

    /// The image of a group element under g -> 1_R*g.
    pub fn embed_group(&self, g: usize) -> usize {
        (self.coeff.one() as u64 * self.powers[g]) as usize
    }
}

/// Builds `R[G]` with full operation tables. The cardinality |R|^|G| must not
/// exceed `cap`.
pub fn build_group_ring(
    coeff: &Arc<RingTable>,
    group: &Arc<GroupTable>,
    cap: usize,
) -> Result<Arc<RingTable>> {
    let card = (coeff.size() as u128)
        .checked_pow(group.order() as u32)
        .ok_or_else(|| Error::CapExceeded {
            what: "group ring cardinality".into(),
            needed: u128::MAX,
            cap: cap as u128,
        })?;
    check_ring_cap(card, cap)?;
    let n = card as usize;
    let r = coeff.size();
    let go = group.order();
    let mut powers = Vec::with_capacity(go);
    let mut p = 1u64;
    for _ in 0..go {
        powers.push(p);
        p = p.saturating_mul(r as u64);
    }
    let meta = GroupRingMeta {
        coeff: Arc::clone(coeff),
        group: Arc::clone(group),
        powers,
    };
    // Decode every index once.
    let digits: Vec<Vec<usize>> = (0..n).map(|x| meta.decode(x)).collect();
    let mut add = vec![0u32; n * n];
    let mut mul = vec![0u32; n * n];
    let mut sum = vec![0usize; go];
    let mut conv = vec![0usize; go];
    for i in 0..n {
        let a = &digits[i];
        for j in 0..n {
            let b = &digits[j];
            for g in 0..go {
                sum[g] = coeff.add(a[g], b[g]);
            }
            add[i * n + j] = meta.encode(&sum) as u32;
            conv.iter_mut().for_each(|c| *c = 0);
            for g in 0..go {
                if a[g] == 0 {
                    continue;
                }
                for h in 0..go {
                    if b[h] == 0 {
                        continue;
                    }
                    let c = coeff.mul(a[g], b[h]);
                    if c != 0 {
                        let k = group.product(g, h);
                        conv[k] = coeff.add(conv[k], c);
                    }
                }
            }
            mul[i * n + j] = meta.encode(&conv) as u32;
        }
    }
    let ring = RingTable::from_tables(add, mul, Some(meta))?;
    // The canonical embeddings must be homomorphic.
    let meta = ring.group_ring_meta().unwrap();
    for x in 0..r {
        for y in 0..r {
            debug_assert_eq!(
                ring.mul(meta.embed_coeff(x), meta.embed_coeff(y)),
                meta.embed_coeff(coeff.mul(x, y))
            );
        }
    }
    for g in 0..go {
        for h in 0..go {
            debug_assert_eq!(
                ring.mul(meta.embed_group(g), meta.embed_group(h)),
                meta.embed_group(group.product(g, h))
            );
        }
    }
    Ok(Arc::new(ring))
}

fn meta_of(ring: &RingTable) -> Result<&GroupRingMeta> {
    ring.group_ring_meta()
        .ok_or_else(|| Error::Precondition("ring carries no group-ring basis metadata".into()))
}

/// Coefficient sum of a group-ring element; a surjective ring map onto the
/// coefficient ring whose kernel is the augmentation ideal.
pub fn augmentation(ring: &RingTable, x: usize) -> Result<usize> {
    let meta = meta_of(ring)?;
    Ok(meta
        .decode(x)
        .into_iter()
        .fold(0, |acc, c| meta.coeff.add(acc, c)))
}

/// The kernel of the augmentation map.
pub fn augmentation_ideal(ring: &RingTable) -> Result<IdealRef> {
    let mut members = BitSet::new(ring.size());
    for x in 0..ring.size() {
        if augmentation(ring, x)? == 0 {
            members.insert(x);
        }
    }
    let ideal = IdealRef {
        members,
        sidedness: Sidedness::TwoSided,
    };
    debug_assert!(ideal.verify(ring).is_ok());
    Ok(ideal)
}

/// Extends a two-sided coefficient ideal I to the ideal IG of `R[G]`: the
/// elements all of whose coefficients lie in I.
pub fn extend_coefficient_ideal(ring: &RingTable, coeff_ideal: &IdealRef) -> Result<IdealRef> {
    let meta = meta_of(ring)?;
    if coeff_ideal.sidedness != Sidedness::TwoSided {
        return Err(Error::NotTwoSided);
    }
    let mut members = BitSet::new(ring.size());
    for x in 0..ring.size() {
        if meta
            .decode(x)
            .iter()
            .all(|&c| coeff_ideal.members.contains(c))
        {
            members.insert(x);
        }
    }
    let ideal = IdealRef {
        members,
        sidedness: Sidedness::TwoSided,
    };
    debug_assert!(ideal.verify(ring).is_ok());
    Ok(ideal)
}

/// One verified isomorphism `R[G]/(I·R[G]) -> (R/I)[G]`.
#[derive(Debug, Clone)]
pub struct IsoCheck {
    pub size: usize,
    /// Coset index in `R[G]/IG` -> element index in `(R/I)[G]`.
    pub map: Vec<usize>,
}

/// Both quotient isomorphisms: modulo I and modulo I^2.
#[derive(Debug, Clone)]
pub struct QuotientIsoReport {
    pub mod_i: IsoCheck,
    pub mod_i_squared: IsoCheck,
}

fn verify_one_iso(
    group_ring: &Arc<RingTable>,
    group: &Arc<GroupTable>,
    coeff_quotient: &RingQuotient,
    extended: &IdealRef,
    cap: usize,
) -> Result<IsoCheck> {
    let meta = group_ring.group_ring_meta().unwrap();
    let target = build_group_ring(&coeff_quotient.ring, group, cap)?;
    let tmeta = target.group_ring_meta().unwrap();
    let quotient = group_ring.quotient_ring(extended)?;
    assert_eq!(
        quotient.ring.size(),
        target.size(),
        "quotient sizes must agree"
    );
    let map: Vec<usize> = quotient
        .reps
        .iter()
        .map(|&rep| {
            let coeffs: Vec<usize> = meta
                .decode(rep)
                .into_iter()
                .map(|c| coeff_quotient.project[c])
                .collect();
            tmeta.encode(&coeffs)
        })
        .collect();
    // Elementwise verification: bijective ring homomorphism sending 1 to 1.
    let mut seen = vec![false; target.size()];
    for &image in &map {
        assert!(!seen[image], "quotient map must be injective");
        seen[image] = true;
    }
    let m = map.len();
    for i in 0..m {
        for j in 0..m {
            assert_eq!(map[quotient.ring.add(i, j)], target.add(map[i], map[j]));
            assert_eq!(map[quotient.ring.mul(i, j)], target.mul(map[i], map[j]));
        }
    }
    assert_eq!(map[quotient.ring.one()], target.one());
    Ok(IsoCheck { size: m, map })
}

/// Constructs and verifies, element by element, the natural isomorphisms
/// `R[G]/IG = (R/I)[G]` and `R[G]/I^2G = (R/I^2)[G]` for a proper two-sided
/// ideal I of R.
pub fn verify_quotient_iso(
    coeff: &Arc<RingTable>,
    group: &Arc<GroupTable>,
    ideal: &IdealRef,
    cap: usize,
) -> Result<QuotientIsoReport> {
    if ideal.sidedness != Sidedness::TwoSided {
        return Err(Error::NotTwoSided);
    }
    if ideal.members.count() == coeff.size() {
        return Err(Error::ImproperIdeal);
    }
    let s = build_group_ring(coeff, group, cap)?;
    let q1 = coeff.quotient_ring(ideal)?;
    let ext1 = extend_coefficient_ideal(&s, ideal)?;
    let mod_i = verify_one_iso(&s, group, &q1, &ext1, cap)?;

    let mut sq_gens = Vec::new();
    for a in ideal.members.iter() {
        for b in ideal.members.iter() {
            sq_gens.push(coeff.mul(a, b));
        }
    }
    let i2 = ideal_generated(coeff, &sq_gens, Sidedness::TwoSided);
    let q2 = coeff.quotient_ring(&i2)?;
    let ext2 = extend_coefficient_ideal(&s, &i2)?;
    let mod_i_squared = verify_one_iso(&s, group, &q2, &ext2, cap)?;
    Ok(QuotientIsoReport {
        mod_i,
        mod_i_squared,
    })
}

/// Outcome of comparing J(`R[G]`) with J(R)·`R[G]`.
#[derive(Debug, Clone)]
pub struct RadicalTransfer {
    /// Whether |G|·1 is invertible in R and R is local, the hypotheses
    /// under which equality is guaranteed.
    pub preconditions_hold: bool,
    /// J(`R[G]`) == J(R)·`R[G]`, compared as element sets.
    pub equal: bool,
    /// J(R)·`R[G]` is contained in J(`R[G]`); holds for any artinian R.
    pub containment: bool,
    pub radical_size: usize,
    pub extended_size: usize,
}

/// Computes both sides of J(`R[G]`) = J(R)G concretely and reports equality,
/// along with the one-sided containment which needs no invertibility
/// hypothesis.
pub fn radical_transfer_check(
    coeff: &Arc<RingTable>,
    group: &Arc<GroupTable>,
    cap: usize,
) -> Result<RadicalTransfer> {
    let s = build_group_ring(coeff, group, cap)?;
    let jrg = extend_coefficient_ideal(&s, &coeff.jacobson_radical().ideal)?;
    let js = s.jacobson_radical().ideal.clone();
    let preconditions_hold = coeff.is_local().is_some() && coeff.is_n_one_unit(group.order());
    Ok(RadicalTransfer {
        preconditions_hold,
        equal: js.members == jrg.members,
        containment: jrg.members.is_subset(&js.members),
        radical_size: js.size(),
        extended_size: jrg.size(),
    })
}
