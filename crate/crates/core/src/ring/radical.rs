//! Jacobson radical, locality, and idempotent lifting.
//!
//! For a finite ring the radical is `{x : 1 - a*x is a unit for all a}`,
//! computed by direct scan against the cached unit group. The radical of a
//! finite ring is nilpotent; the nilpotency index is found by multiplying
//! the ideal into itself until it collapses to zero.

use crate::bits::BitSet;
use crate::error::{Error, Result};

use super::ideal::{additive_closure, IdealRef, Sidedness};
use super::RingTable;

/// The Jacobson radical with its nilpotency index.
#[derive(Debug, Clone)]
pub struct Radical {
    pub ideal: IdealRef,
    /// Least k >= 1 with J^k = {0}. Equals 1 exactly when J = {0}.
    pub nilpotency_index: usize,
}

/// Product ideal I*J: the additive closure of pairwise products.
fn ideal_product(ring: &RingTable, a: &BitSet, b: &BitSet) -> BitSet {
    let mut seed = BitSet::new(ring.size());
    for x in a.iter() {
        for y in b.iter() {
            seed.insert(ring.mul(x, y));
        }
    }
    additive_closure(ring, &seed)
}

impl RingTable {
    /// The Jacobson radical, computed once and cached.
    pub fn jacobson_radical(&self) -> &Radical {
        self.radical_cache.get_or_init(|| {
            let n = self.size();
            let units = &self.units().members;
            let mut members = BitSet::new(n);
            for x in 0..n {
                let quasi_regular =
                    (0..n).all(|a| units.contains(self.sub(self.one(), self.mul(a, x))));
                if quasi_regular {
                    members.insert(x);
                }
            }
            let ideal = IdealRef {
                members,
                sidedness: Sidedness::TwoSided,
            };
            debug_assert!(ideal.verify(self).is_ok());
            // Nilpotency index: repeated ideal self-products must reach {0}.
            let mut index = 1;
            let mut power = ideal.members.clone();
            while power.count() > 1 {
                let next = ideal_product(self, &power, &ideal.members);
                assert!(
                    next.count() < power.count(),
                    "radical power chain failed to shrink: the table is inconsistent"
                );
                power = next;
                index += 1;
            }
            Radical {
                ideal,
                nilpotency_index: index,
            }
        })
    }

    /// J(R) = {0}.
    pub fn is_semiprimitive(&self) -> bool {
        self.jacobson_radical().ideal.is_zero()
    }

    /// For a local ring, returns the unique maximal (one- and two-sided)
    /// ideal, which is the radical. A finite ring is local exactly when its
    /// non-units coincide with the radical.
    pub fn is_local(&self) -> Option<IdealRef> {
        let j = self.jacobson_radical();
        if self.size() > 1 && self.units().count() + j.ideal.size() == self.size() {
            Some(j.ideal.clone())
        } else {
            None
        }
    }
}

/// Result of lifting an idempotent along a nilpotent ideal.
#[derive(Debug, Clone, Copy)]
pub struct LiftedIdempotent {
    pub idempotent: usize,
    pub iterations: usize,
}

/// Lifts an idempotent of R/I to an idempotent of R, for I a two-sided
/// nilpotent ideal.
///
/// `x0` is any representative with `x0^2 = x0 (mod I)`. The Newton-style
/// update `x <- 3x^2 - 2x^3` squares the defect `x^2 - x` relative to I at
/// every step, so at most ceil(log2 m) iterations are needed when I^m = 0.
pub fn lift_idempotent(ring: &RingTable, ideal: &IdealRef, x0: usize) -> Result<LiftedIdempotent> {
    if ideal.sidedness != Sidedness::TwoSided {
        return Err(Error::NotTwoSided);
    }
    ideal.verify(ring).map_err(|_| Error::NotTwoSided)?;
    // Nilpotency: powers must reach {0}.
    let mut power = ideal.members.clone();
    let mut guard = 0;
    while power.count() > 1 {
        let next = ideal_product(ring, &power, &ideal.members);
        if next.count() >= power.count() {
            return Err(Error::NotNilpotent);
        }
        power = next;
        guard += 1;
        if guard > ring.size() {
            return Err(Error::NotNilpotent);
        }
    }
    let defect = ring.sub(ring.mul(x0, x0), x0);
    if !ideal.members.contains(defect) {
        return Err(Error::NotIdempotent);
    }
    let mut x = x0;
    let mut iterations = 0;
    while ring.mul(x, x) != x {
        let x2 = ring.mul(x, x);
        let x3 = ring.mul(x2, x);
        let three_x2 = ring.add(x2, ring.add(x2, x2));
        let two_x3 = ring.add(x3, x3);
        x = ring.sub(three_x2, two_x3);
        iterations += 1;
        assert!(
            iterations <= ring.size(),
            "idempotent lift failed to converge: the ideal is not nilpotent"
        );
    }
    // The iterate never leaves its coset mod I.
    debug_assert!(ideal.members.contains(ring.sub(x, x0)));
    Ok(LiftedIdempotent {
        idempotent: x,
        iterations,
    })
}
