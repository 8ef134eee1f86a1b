//! Peirce decomposition into local factors, the abelian Köthe oracle, and
//! admissibility of a group over a local coefficient ring.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::group_ring::build_group_ring;

use super::ideal::{ideal_generated, is_pir_both, IdealRef, Sidedness};
use super::RingTable;

/// One local factor of an abelian ring.
#[derive(Debug, Clone)]
pub struct LocalFactor {
    pub factor: Arc<RingTable>,
    pub max_ideal: IdealRef,
    /// Characteristic of the residue division ring factor/J(factor).
    pub residue_char: usize,
    /// J(factor) = {0}.
    pub semiprimitive: bool,
    /// The centrally primitive idempotent in the parent cutting this factor.
    pub atom: usize,
    /// Parent element x -> index of e*x inside the factor.
    pub project: Vec<usize>,
}

impl RingTable {
    /// Central idempotents in index order.
    pub fn central_idempotents(&self) -> Vec<usize> {
        (0..self.size())
            .filter(|&e| self.mul(e, e) == e && self.is_central(e))
            .collect()
    }

    /// Atoms of the boolean algebra of central idempotents: nonzero central
    /// idempotents e with e*f in {0, e} for every central idempotent f.
    /// Atoms are pairwise orthogonal and sum to 1.
    pub fn central_idempotent_atoms(&self) -> Vec<usize> {
        let centrals = self.central_idempotents();
        let atoms: Vec<usize> = centrals
            .iter()
            .copied()
            .filter(|&e| {
                e != 0
                    && centrals.iter().all(|&f| {
                        let ef = self.mul(e, f);
                        ef == 0 || ef == e
                    })
            })
            .collect();
        // Structural sanity: orthogonal and summing to 1.
        let mut sum = 0;
        for (i, &a) in atoms.iter().enumerate() {
            sum = self.add(sum, a);
            for &b in &atoms[i + 1..] {
                assert_eq!(self.mul(a, b), 0, "atoms must be pairwise orthogonal");
            }
        }
        if self.size() > 1 {
            assert_eq!(sum, self.one(), "atoms must sum to 1");
        }
        atoms
    }
}

/// Splits an abelian ring into its local factors along the atoms of its
/// central idempotents (Peirce decomposition).
///
/// Fails with the witness idempotent when the ring is not abelian.
pub fn decompose_into_local(ring: &RingTable) -> Result<Vec<LocalFactor>> {
    if let Some(witness) = ring.non_central_idempotent() {
        return Err(Error::NotAbelian { witness });
    }
    let atoms = ring.central_idempotent_atoms();
    let mut factors = Vec::with_capacity(atoms.len());
    for &e in &atoms {
        // Elements of eR, sorted by parent index; e*0 = 0 lands at slot 0.
        let mut elems: Vec<usize> = (0..ring.size()).map(|x| ring.mul(e, x)).collect();
        elems.sort_unstable();
        elems.dedup();
        let pos = |x: usize| elems.binary_search(&x).expect("eR is closed");
        let m = elems.len();
        let mut add = vec![0u32; m * m];
        let mut mul = vec![0u32; m * m];
        for i in 0..m {
            for j in 0..m {
                add[i * m + j] = pos(ring.add(elems[i], elems[j])) as u32;
                mul[i * m + j] = pos(ring.mul(elems[i], elems[j])) as u32;
            }
        }
        let factor = Arc::new(RingTable::from_tables(add, mul, None)?);
        let max_ideal = factor
            .is_local()
            .expect("atom components of an abelian finite ring are local");
        let semiprimitive = max_ideal.is_zero();
        let residue = factor.quotient_ring(&max_ideal)?;
        let residue_char = residue.ring.characteristic();
        assert!(
            crate::group::is_prime(residue_char),
            "residue characteristic of a finite division ring is prime"
        );
        let project: Vec<usize> = (0..ring.size()).map(|x| pos(ring.mul(e, x))).collect();
        factors.push(LocalFactor {
            factor,
            max_ideal,
            residue_char,
            semiprimitive,
            atom: e,
            project,
        });
    }
    Ok(factors)
}

/// Köthe verdict for an abelian finite ring: finite rings are artinian, so
/// this reduces to the principal-ideal-ring property (checked on both sides
/// as a sanity cross-check; for abelian rings they agree).
pub fn is_kothe_abelian_oracle(ring: &RingTable, lattice_cap: usize) -> Result<bool> {
    if let Some(witness) = ring.non_central_idempotent() {
        return Err(Error::NotAbelian { witness });
    }
    let left = super::ideal::is_pir(ring, Sidedness::Left, lattice_cap)?;
    let right = super::ideal::is_pir(ring, Sidedness::Right, lattice_cap)?;
    assert_eq!(
        left.is_pir, right.is_pir,
        "left/right PIR disagree on an abelian ring"
    );
    Ok(left.is_pir && right.is_pir)
}

/// Admissibility of a finite group over a local artinian principal ideal
/// ring R: |G|·1 must be invertible in R/J(R) and every centrally primitive
/// idempotent of `(R/J(R))[G]` must be the image of one of `(R/J(R)^2)[G]`
/// under the canonical projection. Both group rings are materialized and
/// their atoms compared exhaustively.
pub fn is_r_admissible(
    ring: &Arc<RingTable>,
    group: &Arc<GroupTable>,
    ring_cap: usize,
    lattice_cap: usize,
) -> Result<bool> {
    if ring.is_local().is_none() {
        return Err(Error::NotLocal);
    }
    if !is_pir_both(ring, lattice_cap)?.is_pir {
        return Err(Error::Precondition(
            "coefficient ring is not a principal ideal ring".into(),
        ));
    }
    let j = ring.jacobson_radical().ideal.clone();
    let q1 = ring.quotient_ring(&j)?;
    if !q1.ring.is_n_one_unit(group.order()) {
        return Ok(false);
    }
    // J^2 as an ideal of R.
    let mut j2_gens = Vec::new();
    for a in j.members.iter() {
        for b in j.members.iter() {
            j2_gens.push(ring.mul(a, b));
        }
    }
    let j2 = ideal_generated(ring, &j2_gens, Sidedness::TwoSided);
    let q2 = ring.quotient_ring(&j2)?;
    let s1 = build_group_ring(&q1.ring, group, ring_cap)?;
    let s2 = build_group_ring(&q2.ring, group, ring_cap)?;
    let meta1 = s1.group_ring_meta().unwrap().clone();
    let meta2 = s2.group_ring_meta().unwrap().clone();
    // Canonical projection (R/J^2)[G] -> (R/J)[G], coefficientwise.
    let project = |x: usize| -> usize {
        let coeffs = meta2.decode(x);
        let mapped: Vec<usize> = coeffs.iter().map(|&c| q1.project[q2.reps[c]]).collect();
        meta1.encode(&mapped)
    };
    let atoms1 = s1.central_idempotent_atoms();
    let atoms2 = s2.central_idempotent_atoms();
    let images: Vec<usize> = atoms2.iter().map(|&a| project(a)).collect();
    Ok(atoms1.iter().all(|a1| images.contains(a1)))
}
