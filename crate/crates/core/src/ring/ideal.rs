//! One- and two-sided ideals as membership bit-vectors, plus the exhaustive
//! ideal-lattice closure used to decide whether a ring is a principal ideal
//! ring.
//!
//! Every one-sided ideal is a finite sum of principal ideals, so the lattice
//! is the closure of `{Rx : x in R}` under pairwise sum, and it suffices to
//! close under sums with principal ideals. The whole computation is
//! deterministic: principal ideals are discovered in element order and new
//! sums in worklist order, so the first non-principal ideal found is a
//! reproducible witness.

use std::collections::HashMap;

use crate::bits::BitSet;
use crate::error::{Error, Result};

use super::RingTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Sidedness {
    Left,
    Right,
    TwoSided,
}

/// An ideal as a membership bit-vector over the ring's element indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealRef {
    pub members: BitSet,
    pub sidedness: Sidedness,
}

impl IdealRef {
    pub fn size(&self) -> usize {
        self.members.count()
    }

    pub fn is_zero(&self) -> bool {
        self.size() == 1
    }

    /// Checks the membership invariants: additive subgroup plus absorption
    /// on the declared side(s).
    pub fn verify(&self, ring: &RingTable) -> Result<()> {
        if !self.members.contains(0) {
            return Err(Error::Malformed("ideal does not contain 0".into()));
        }
        for a in self.members.iter() {
            for b in self.members.iter() {
                if !self.members.contains(ring.add(a, b)) {
                    return Err(Error::Malformed("ideal not closed under addition".into()));
                }
            }
        }
        let absorb_left = |set: &BitSet| {
            set.iter()
                .all(|a| (0..ring.size()).all(|r| set.contains(ring.mul(r, a))))
        };
        let absorb_right = |set: &BitSet| {
            set.iter()
                .all(|a| (0..ring.size()).all(|r| set.contains(ring.mul(a, r))))
        };
        let ok = match self.sidedness {
            Sidedness::Left => absorb_left(&self.members),
            Sidedness::Right => absorb_right(&self.members),
            Sidedness::TwoSided => absorb_left(&self.members) && absorb_right(&self.members),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Malformed(
                "ideal does not absorb multiplication".into(),
            ))
        }
    }
}

/// Closes a seed set under addition. In a finite ring this yields an
/// additive subgroup (negatives appear as iterated sums).
pub fn additive_closure(ring: &RingTable, seed: &BitSet) -> BitSet {
    let mut members = BitSet::new(ring.size());
    members.insert(0);
    let mut list: Vec<usize> = vec![0];
    for x in seed.iter() {
        if members.insert(x) {
            list.push(x);
        }
    }
    let mut i = 0;
    while i < list.len() {
        for j in 0..list.len() {
            let s = ring.add(list[i], list[j]);
            if members.insert(s) {
                list.push(s);
            }
        }
        i += 1;
    }
    members
}

/// The principal left ideal Rx = {r*x}. Already an additive subgroup.
pub fn principal_left(ring: &RingTable, x: usize) -> BitSet {
    let mut set = BitSet::new(ring.size());
    for r in 0..ring.size() {
        set.insert(ring.mul(r, x));
    }
    set
}

/// The principal right ideal xR = {x*r}.
pub fn principal_right(ring: &RingTable, x: usize) -> BitSet {
    let mut set = BitSet::new(ring.size());
    for r in 0..ring.size() {
        set.insert(ring.mul(x, r));
    }
    set
}

/// The two-sided ideal RxR, i.e. the additive closure of {r*x*s}.
pub fn principal_two_sided(ring: &RingTable, x: usize) -> BitSet {
    let mut seed = BitSet::new(ring.size());
    for r in 0..ring.size() {
        let rx = ring.mul(r, x);
        for s in 0..ring.size() {
            seed.insert(ring.mul(rx, s));
        }
    }
    additive_closure(ring, &seed)
}

/// The ideal generated by a set of elements on the given side.
pub fn ideal_generated(ring: &RingTable, generators: &[usize], sidedness: Sidedness) -> IdealRef {
    let mut seed = BitSet::new(ring.size());
    seed.insert(0);
    for &g in generators {
        let part = match sidedness {
            Sidedness::Left => principal_left(ring, g),
            Sidedness::Right => principal_right(ring, g),
            Sidedness::TwoSided => principal_two_sided(ring, g),
        };
        for x in part.iter() {
            seed.insert(x);
        }
    }
    IdealRef {
        members: additive_closure(ring, &seed),
        sidedness,
    }
}

/// Verdict of the principal-ideal-ring oracle.
#[derive(Debug, Clone)]
pub struct PirOutcome {
    pub is_pir: bool,
    /// First non-principal ideal discovered, in deterministic order.
    pub witness: Option<IdealRef>,
    /// Number of distinct ideals discovered before the verdict.
    pub ideals_seen: usize,
}

struct LatticeClosure {
    ideals: Vec<BitSet>,
    first_non_principal: Option<usize>,
}

/// Sum-closure of the principal ideals on one side.
///
/// `stop_at_non_principal` makes the refutation path cheap: the closure
/// aborts as soon as the first non-principal ideal appears.
fn lattice_closure(
    ring: &RingTable,
    side: Sidedness,
    cap: usize,
    stop_at_non_principal: bool,
) -> Result<LatticeClosure> {
    let n = ring.size();
    let principal = |x: usize| match side {
        Sidedness::Left => principal_left(ring, x),
        Sidedness::Right => principal_right(ring, x),
        Sidedness::TwoSided => principal_two_sided(ring, x),
    };
    let mut index: HashMap<BitSet, usize> = HashMap::new();
    let mut ideals: Vec<BitSet> = Vec::new();
    let mut principal_of = vec![0usize; n];
    let mut generators: Vec<usize> = Vec::new();
    for x in 0..n {
        let p = principal(x);
        let idx = *index.entry(p.clone()).or_insert_with(|| {
            ideals.push(p);
            generators.push(ideals.len() - 1);
            ideals.len() - 1
        });
        principal_of[x] = idx;
    }
    let is_principal_set = |set: &BitSet, principal_of: &[usize], ideals: &[BitSet]| -> bool {
        set.iter().any(|x| &ideals[principal_of[x]] == set)
    };
    let mut first_non_principal = None;
    let mut i = 0;
    while i < ideals.len() {
        for &g in &generators {
            let p = ideals[g].clone();
            let base = ideals[i].clone();
            if p.is_subset(&base) {
                continue;
            }
            let mut sum = base.clone();
            for b in p.iter() {
                for a in base.iter() {
                    sum.insert(ring.add(a, b));
                }
            }
            if index.contains_key(&sum) {
                continue;
            }
            if ideals.len() >= cap {
                return Err(Error::CapExceeded {
                    what: "ideal lattice".into(),
                    needed: (ideals.len() + 1) as u128,
                    cap: cap as u128,
                });
            }
            let idx = ideals.len();
            index.insert(sum.clone(), idx);
            ideals.push(sum);
            let is_p = is_principal_set(&ideals[idx], &principal_of, &ideals);
            if !is_p && first_non_principal.is_none() {
                first_non_principal = Some(idx);
                if stop_at_non_principal {
                    return Ok(LatticeClosure {
                        ideals,
                        first_non_principal,
                    });
                }
            }
        }
        i += 1;
    }
    Ok(LatticeClosure {
        ideals,
        first_non_principal,
    })
}

/// All left (resp. right, two-sided) ideals, sorted canonically by
/// (cardinality, bit pattern).
pub fn all_ideals(ring: &RingTable, side: Sidedness, cap: usize) -> Result<Vec<IdealRef>> {
    let closure = lattice_closure(ring, side, cap, false)?;
    let mut sets = closure.ideals;
    sets.sort_by(|a, b| a.canonical_cmp(b));
    Ok(sets
        .into_iter()
        .map(|members| IdealRef {
            members,
            sidedness: side,
        })
        .collect())
}

/// A generator for the ideal, if it is principal on its declared side.
pub fn is_principal(ring: &RingTable, ideal: &IdealRef) -> Option<usize> {
    let principal = |x: usize| match ideal.sidedness {
        Sidedness::Left => principal_left(ring, x),
        Sidedness::Right => principal_right(ring, x),
        Sidedness::TwoSided => principal_two_sided(ring, x),
    };
    ideal
        .members
        .iter()
        .find(|&x| principal(x) == ideal.members)
}

/// Decides whether every ideal on the given side is principal.
///
/// On a negative verdict the witness is the first non-principal ideal in
/// the deterministic closure order.
pub fn is_pir(ring: &RingTable, side: Sidedness, cap: usize) -> Result<PirOutcome> {
    let closure = lattice_closure(ring, side, cap, true)?;
    match closure.first_non_principal {
        Some(idx) => Ok(PirOutcome {
            is_pir: false,
            witness: Some(IdealRef {
                members: closure.ideals[idx].clone(),
                sidedness: side,
            }),
            ideals_seen: closure.ideals.len(),
        }),
        None => Ok(PirOutcome {
            is_pir: true,
            witness: None,
            ideals_seen: closure.ideals.len(),
        }),
    }
}

/// Decides PIR on both sides; a Köthe-style verdict needs both.
pub fn is_pir_both(ring: &RingTable, cap: usize) -> Result<PirOutcome> {
    let left = is_pir(ring, Sidedness::Left, cap)?;
    if !left.is_pir {
        return Ok(left);
    }
    let right = is_pir(ring, Sidedness::Right, cap)?;
    Ok(right)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupDescriptor;
    use crate::ring::{materialize_ring, RingDescriptor};

    fn ring(d: RingDescriptor) -> std::sync::Arc<RingTable> {
        materialize_ring(&d, 65536).unwrap()
    }

    #[test]
    fn field_has_two_ideals_and_is_pir() {
        let f5 = ring(RingDescriptor::galois_field(5, 1));
        let ideals = all_ideals(&f5, Sidedness::Left, 1000).unwrap();
        assert_eq!(ideals.len(), 2);
        assert!(is_pir(&f5, Sidedness::Left, 1000).unwrap().is_pir);
    }

    #[test]
    fn f2_klein_four_group_ring_is_not_pir() {
        let r = ring(RingDescriptor::group_ring(
            RingDescriptor::galois_field(2, 1),
            GroupDescriptor::direct_product(vec![
                GroupDescriptor::cyclic(2),
                GroupDescriptor::cyclic(2),
            ]),
        ));
        assert_eq!(r.size(), 16);
        let out = is_pir_both(&r, 100_000).unwrap();
        assert!(!out.is_pir);
        let witness = out.witness.unwrap();
        witness.verify(&r).unwrap();
        assert!(is_principal(&r, &witness).is_none());
        // Witness reproducibility.
        let again = is_pir_both(&r, 100_000).unwrap().witness.unwrap();
        assert_eq!(witness, again);
    }

    #[test]
    fn z4_c3_group_ring_is_pir() {
        let r = ring(RingDescriptor::group_ring(
            RingDescriptor::zmod(4),
            GroupDescriptor::cyclic(3),
        ));
        assert_eq!(r.size(), 64);
        assert!(is_pir_both(&r, 100_000).unwrap().is_pir);
    }

    #[test]
    fn generated_ideals_verify() {
        let z6 = ring(RingDescriptor::zmod(6));
        let i = ideal_generated(&z6, &[2], Sidedness::TwoSided);
        assert_eq!(i.members.to_vec(), vec![0, 2, 4]);
        i.verify(&z6).unwrap();
        assert_eq!(is_principal(&z6, &i), Some(2));
    }
}
