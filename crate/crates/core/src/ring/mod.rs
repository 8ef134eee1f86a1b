//! Finite unital rings as explicit operation tables.
//!
//! A [`RingTable`] stores full addition and multiplication tables over dense
//! element indices `0..size`, with `0` always the additive zero. Symbolic
//! [`RingDescriptor`]s materialize deterministically under a size cap, so
//! element indices can be pinned in fixtures. Galois fields use the
//! lexicographically least irreducible polynomial (coefficients compared
//! low-degree-first), not Conway polynomials; only the isomorphism class
//! matters here and this choice needs no tables.

pub mod decomp;
pub mod ideal;
pub mod radical;

use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{is_prime, materialize_group, GroupDescriptor};
use crate::group_ring::{build_group_ring, GroupRingMeta};

use ideal::{ideal_generated, IdealRef, Sidedness};
use radical::Radical;

/// Ring sizes up to this bound get full O(n^3) axiom validation on
/// construction; larger tables get the O(n^2) laws plus sampled triples.
const EXHAUSTIVE_VERIFY_MAX: usize = 192;

/// Physical representation bound: a materialized ring stores two n x n
/// index tables, so sizes beyond this are refused no matter how generous
/// the caller's cardinality cap is.
pub const MAX_TABLE_SIZE: usize = 8192;

/// Symbolic constructors for coefficient rings.
///
/// `IntegersMarker` stands for the ring of integers: it is never
/// materializable and is flagged non-artinian, which short-circuits the
/// classifier.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RingDescriptor {
    Zmod {
        n: usize,
    },
    GaloisField {
        p: usize,
        k: usize,
    },
    Product {
        factors: Vec<RingDescriptor>,
    },
    GroupRing {
        coeff: Box<RingDescriptor>,
        group: GroupDescriptor,
    },
    Quotient {
        base: Box<RingDescriptor>,
        generators: Vec<usize>,
    },
    IntegersMarker,
}

impl RingDescriptor {
    pub fn zmod(n: usize) -> Self {
        RingDescriptor::Zmod { n }
    }

    pub fn galois_field(p: usize, k: usize) -> Self {
        RingDescriptor::GaloisField { p, k }
    }

    pub fn group_ring(coeff: RingDescriptor, group: GroupDescriptor) -> Self {
        RingDescriptor::GroupRing {
            coeff: Box::new(coeff),
            group,
        }
    }

    /// True iff the marker for the integers occurs anywhere in the tree.
    pub fn contains_integers_marker(&self) -> bool {
        match self {
            RingDescriptor::IntegersMarker => true,
            RingDescriptor::Zmod { .. } | RingDescriptor::GaloisField { .. } => false,
            RingDescriptor::Product { factors } => {
                factors.iter().any(|f| f.contains_integers_marker())
            }
            RingDescriptor::GroupRing { coeff, .. } => coeff.contains_integers_marker(),
            RingDescriptor::Quotient { base, .. } => base.contains_integers_marker(),
        }
    }

    /// Cardinality of the materialized ring, if finite and representable.
    pub fn cardinality(&self) -> Option<u128> {
        match self {
            RingDescriptor::Zmod { n } => Some(*n as u128),
            RingDescriptor::GaloisField { p, k } => (*p as u128).checked_pow(*k as u32),
            RingDescriptor::Product { factors } => factors
                .iter()
                .try_fold(1u128, |acc, f| acc.checked_mul(f.cardinality()?)),
            RingDescriptor::GroupRing { coeff, group } => {
                let base = coeff.cardinality()?;
                let order = match materialize_group(group) {
                    Ok(g) => g.order() as u32,
                    Err(_) => return None,
                };
                base.checked_pow(order)
            }
            // The quotient's size depends on the generated ideal.
            RingDescriptor::Quotient { base, .. } => base.cardinality(),
            RingDescriptor::IntegersMarker => None,
        }
    }

    pub fn label(&self) -> String {
        match self {
            RingDescriptor::Zmod { n } => format!("Z{n}"),
            RingDescriptor::GaloisField { p, k } => {
                if *k == 1 {
                    format!("F{p}")
                } else {
                    format!("F{}", (*p as u128).pow(*k as u32))
                }
            }
            RingDescriptor::Product { factors } => factors
                .iter()
                .map(|f| f.label())
                .collect::<Vec<_>>()
                .join("x"),
            RingDescriptor::GroupRing { coeff, group } => {
                format!("{}[{}]", coeff.label(), group.label())
            }
            RingDescriptor::Quotient { base, generators } => {
                format!("{}/({:?})", base.label(), generators)
            }
            RingDescriptor::IntegersMarker => "Z".to_string(),
        }
    }
}

/// Invertible elements of a ring, with the inverse of each unit.
#[derive(Debug, Clone)]
pub struct UnitGroup {
    pub members: crate::bits::BitSet,
    /// `inverse[x]` is `Some(y)` with `x*y = y*x = 1` iff `x` is a unit.
    pub inverse: Vec<Option<u32>>,
}

impl UnitGroup {
    pub fn count(&self) -> usize {
        self.members.count()
    }
}

/// A finite unital ring as validated operation tables.
///
/// Index `0` is the zero element. `one == 0` only in the one-element ring.
/// Group rings carry basis metadata linking back to their coefficient ring
/// and basis group.
#[derive(Debug, Clone)]
pub struct RingTable {
    size: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    one: usize,
    basis: Option<GroupRingMeta>,
    units_cache: OnceLock<UnitGroup>,
    radical_cache: OnceLock<Radical>,
}

impl RingTable {
    /// Validates raw tables and builds the ring. The additive identity must
    /// already sit at index 0.
    pub fn from_tables(
        add: Vec<u32>,
        mul: Vec<u32>,
        basis: Option<GroupRingMeta>,
    ) -> Result<RingTable> {
        let size2 = add.len();
        let size = (size2 as f64).sqrt().round() as usize;
        if size == 0 || size * size != size2 || mul.len() != size2 {
            return Err(Error::Malformed("ring tables are not square".into()));
        }
        if add.iter().chain(mul.iter()).any(|&x| x as usize >= size) {
            return Err(Error::Malformed("ring table entry out of range".into()));
        }
        let at = |t: &[u32], i: usize, j: usize| t[i * size + j] as usize;
        for x in 0..size {
            if at(&add, 0, x) != x || at(&add, x, 0) != x {
                return Err(Error::Malformed(
                    "element 0 is not an additive identity".into(),
                ));
            }
        }
        let mut neg = vec![u32::MAX; size];
        for x in 0..size {
            match (0..size).find(|&y| at(&add, x, y) == 0) {
                Some(y) => neg[x] = y as u32,
                None => return Err(Error::Malformed(format!("element {x} has no negative"))),
            }
        }
        for a in 0..size {
            for b in 0..size {
                if at(&add, a, b) != at(&add, b, a) {
                    return Err(Error::Malformed("addition is not commutative".into()));
                }
            }
        }
        let one = (0..size)
            .find(|&e| (0..size).all(|x| at(&mul, e, x) == x && at(&mul, x, e) == x))
            .ok_or_else(|| Error::Malformed("no multiplicative identity".into()))?;
        if size > 1 && one == 0 {
            return Err(Error::Malformed(
                "1 = 0 in a ring with more than one element".into(),
            ));
        }
        let ring = RingTable {
            size,
            add,
            mul,
            neg,
            one,
            basis,
            units_cache: OnceLock::new(),
            radical_cache: OnceLock::new(),
        };
        if size <= EXHAUSTIVE_VERIFY_MAX {
            ring.verify_axioms_exhaustive()?;
        } else {
            ring.verify_axioms_sampled()?;
        }
        Ok(ring)
    }

    /// Checks associativity of both operations and two-sided distributivity
    /// over every triple. O(n^3); tests call this on small rings.
    pub fn verify_axioms_exhaustive(&self) -> Result<()> {
        let n = self.size;
        for a in 0..n {
            for b in 0..n {
                let ab_add = self.add(a, b);
                let ab_mul = self.mul(a, b);
                for c in 0..n {
                    if self.add(ab_add, c) != self.add(a, self.add(b, c)) {
                        return Err(Error::Malformed(format!(
                            "addition not associative at ({a},{b},{c})"
                        )));
                    }
                    if self.mul(ab_mul, c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::Malformed(format!(
                            "multiplication not associative at ({a},{b},{c})"
                        )));
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return Err(Error::Malformed(format!(
                            "left distributivity fails at ({a},{b},{c})"
                        )));
                    }
                    if self.mul(self.add(a, b), c) != self.add(self.mul(a, c), self.mul(b, c)) {
                        return Err(Error::Malformed(format!(
                            "right distributivity fails at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Deterministic strided sample of triples for rings too large for the
    /// cubic check. Construction paths are verified exhaustively at small
    /// sizes by the test suite.
    fn verify_axioms_sampled(&self) -> Result<()> {
        let n = self.size;
        let stride = (n / 31).max(1);
        let sample: Vec<usize> = (0..n)
            .step_by(stride)
            .chain([self.one, 1.min(n - 1)])
            .collect();
        for &a in &sample {
            for &b in &sample {
                for &c in &sample {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c))
                        || self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c))
                        || self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c))
                        || self.mul(self.add(a, b), c) != self.add(self.mul(a, c), self.mul(b, c))
                    {
                        return Err(Error::Malformed(format!(
                            "sampled ring axiom fails at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn one(&self) -> usize {
        self.one
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// Group-ring basis metadata, when this table was built as `R[G]`.
    pub fn group_ring_meta(&self) -> Option<&GroupRingMeta> {
        self.basis.as_ref()
    }

    /// `n * x` by repeated addition.
    pub fn n_times(&self, x: usize, n: usize) -> usize {
        let mut acc = 0;
        for _ in 0..n {
            acc = self.add(acc, x);
        }
        acc
    }

    /// Additive order of the multiplicative identity.
    pub fn characteristic(&self) -> usize {
        if self.size == 1 {
            return 1;
        }
        let mut acc = self.one;
        let mut k = 1;
        while acc != 0 {
            acc = self.add(acc, self.one);
            k += 1;
        }
        k
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.size).all(|a| (a..self.size).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// The group of invertible elements, computed once and cached.
    ///
    /// One-sided inverses in a finite ring are automatically two-sided; the
    /// scan still verifies both sides and treats disagreement as a broken
    /// table (panic), since the axioms make it impossible.
    pub fn units(&self) -> &UnitGroup {
        self.units_cache.get_or_init(|| {
            let n = self.size;
            let mut members = crate::bits::BitSet::new(n);
            let mut inverse = vec![None; n];
            for x in 0..n {
                if let Some(y) = (0..n).find(|&y| self.mul(x, y) == self.one) {
                    assert_eq!(
                        self.mul(y, x),
                        self.one,
                        "one-sided inverse disagreement: the table is inconsistent"
                    );
                    members.insert(x);
                    inverse[x] = Some(y as u32);
                }
            }
            if self.size == 1 {
                // The zero ring: 0 = 1 is its own inverse.
                members.insert(0);
                inverse[0] = Some(0);
            }
            UnitGroup { members, inverse }
        })
    }

    pub fn is_unit(&self, x: usize) -> bool {
        self.units().members.contains(x)
    }

    /// Whether `n * 1` is invertible.
    pub fn is_n_one_unit(&self, n: usize) -> bool {
        self.is_unit(self.n_times(self.one, n))
    }

    /// All solutions of e*e = e, in index order.
    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.size).filter(|&e| self.mul(e, e) == e).collect()
    }

    pub fn is_central(&self, x: usize) -> bool {
        (0..self.size).all(|y| self.mul(x, y) == self.mul(y, x))
    }

    /// Elements commuting with everything, in index order.
    pub fn center(&self) -> Vec<usize> {
        (0..self.size).filter(|&x| self.is_central(x)).collect()
    }

    /// First idempotent (in index order) that is not central, if any.
    pub fn non_central_idempotent(&self) -> Option<usize> {
        (0..self.size).find(|&e| self.mul(e, e) == e && !self.is_central(e))
    }

    /// A ring is abelian when every idempotent is central.
    pub fn is_abelian_ring(&self) -> bool {
        self.non_central_idempotent().is_none()
    }

    /// True iff every nonzero element is invertible (and 1 != 0).
    pub fn is_division_ring(&self) -> bool {
        self.size > 1 && self.units().count() == self.size - 1
    }

    /// Quotient by a proper two-sided ideal, with the natural projection.
    /// Cosets are ordered by minimal representative, so the zero coset is
    /// index 0.
    pub fn quotient_ring(&self, ideal: &IdealRef) -> Result<RingQuotient> {
        if ideal.sidedness != Sidedness::TwoSided {
            return Err(Error::NotTwoSided);
        }
        if ideal.members.count() == self.size {
            return Err(Error::ImproperIdeal);
        }
        debug_assert!(ideal.verify(self).is_ok());
        let n = self.size;
        let mut coset_of: Vec<Option<usize>> = vec![None; n];
        let mut reps: Vec<usize> = Vec::new();
        for x in 0..n {
            if coset_of[x].is_some() {
                continue;
            }
            let idx = reps.len();
            reps.push(x);
            for m in ideal.members.iter() {
                coset_of[self.add(x, m)] = Some(idx);
            }
        }
        let project: Vec<usize> = coset_of.into_iter().map(|c| c.unwrap()).collect();
        let m = reps.len();
        let mut add = vec![0u32; m * m];
        let mut mul = vec![0u32; m * m];
        for i in 0..m {
            for j in 0..m {
                add[i * m + j] = project[self.add(reps[i], reps[j])] as u32;
                mul[i * m + j] = project[self.mul(reps[i], reps[j])] as u32;
            }
        }
        let ring = RingTable::from_tables(add, mul, None)?;
        Ok(RingQuotient {
            ring: Arc::new(ring),
            project,
            reps,
        })
    }
}

/// A quotient ring together with the natural projection.
#[derive(Debug, Clone)]
pub struct RingQuotient {
    pub ring: Arc<RingTable>,
    /// Parent element index -> coset index.
    pub project: Vec<usize>,
    /// Coset index -> canonical (minimal) parent representative.
    pub reps: Vec<usize>,
}

/// Materializes a ring descriptor into full tables, refusing anything whose
/// cardinality exceeds `cap`.
pub fn materialize_ring(d: &RingDescriptor, cap: usize) -> Result<Arc<RingTable>> {
    match d {
        RingDescriptor::IntegersMarker => Err(Error::NonArtinian),
        RingDescriptor::Zmod { n } => {
            if *n == 0 {
                return Err(Error::Malformed("zmod needs n >= 1".into()));
            }
            check_ring_cap(*n as u128, cap)?;
            Ok(Arc::new(zmod(*n)?))
        }
        RingDescriptor::GaloisField { p, k } => {
            if !is_prime(*p) {
                return Err(Error::Malformed(format!("{p} is not prime")));
            }
            if *k == 0 {
                return Err(Error::Malformed("galois_field needs k >= 1".into()));
            }
            let card = (*p as u128)
                .checked_pow(*k as u32)
                .ok_or_else(|| Error::Malformed("galois_field size overflow".into()))?;
            check_ring_cap(card, cap)?;
            Ok(Arc::new(galois_field(*p, *k)?))
        }
        RingDescriptor::Product { factors } => {
            if factors.is_empty() {
                return Err(Error::Malformed("product needs at least one factor".into()));
            }
            let card = d.cardinality().ok_or(Error::NonArtinian)?;
            check_ring_cap(card, cap)?;
            let mut acc = materialize_ring(&factors[0], cap)?;
            for f in &factors[1..] {
                let next = materialize_ring(f, cap)?;
                acc = Arc::new(product_ring(&acc, &next)?);
            }
            Ok(acc)
        }
        RingDescriptor::GroupRing { coeff, group } => {
            let r = materialize_ring(coeff, cap)?;
            let g = materialize_group(group)?;
            build_group_ring(&r, &g, cap)
        }
        RingDescriptor::Quotient { base, generators } => {
            let r = materialize_ring(base, cap)?;
            if generators.iter().any(|&g| g >= r.size()) {
                return Err(Error::Malformed(
                    "quotient generator index out of range".into(),
                ));
            }
            let ideal = ideal_generated(&r, generators, Sidedness::TwoSided);
            let q = r.quotient_ring(&ideal)?;
            Ok(q.ring)
        }
    }
}

pub(crate) fn check_ring_cap(needed: u128, cap: usize) -> Result<()> {
    let effective = cap.min(MAX_TABLE_SIZE);
    if needed > effective as u128 {
        Err(Error::CapExceeded {
            what: "ring cardinality".into(),
            needed,
            cap: effective as u128,
        })
    } else {
        Ok(())
    }
}

fn zmod(n: usize) -> Result<RingTable> {
    let mut add = vec![0u32; n * n];
    let mut mul = vec![0u32; n * n];
    for i in 0..n {
        for j in 0..n {
            add[i * n + j] = ((i + j) % n) as u32;
            mul[i * n + j] = ((i * j) % n) as u32;
        }
    }
    RingTable::from_tables(add, mul, None)
}

/// Polynomial arithmetic over F_p on coefficient vectors (low degree first).
mod poly {
    pub fn normalize(v: &mut Vec<usize>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    pub fn rem(mut a: Vec<usize>, b: &[usize], p: usize) -> Vec<usize> {
        normalize(&mut a);
        let db = b.len() - 1;
        let lead_inv = mod_inverse(b[db], p);
        while a.len() > db {
            let da = a.len() - 1;
            let factor = (a[da] * lead_inv) % p;
            for i in 0..=db {
                let idx = da - db + i;
                a[idx] = (a[idx] + p - (factor * b[i]) % p) % p;
            }
            normalize(&mut a);
            if a.is_empty() {
                break;
            }
        }
        a
    }

    pub fn mul(a: &[usize], b: &[usize], p: usize) -> Vec<usize> {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut out = vec![0usize; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        normalize(&mut out);
        out
    }

    fn mod_inverse(a: usize, p: usize) -> usize {
        // p is prime and a != 0 mod p.
        let mut result = 1usize;
        let mut base = a % p;
        let mut exp = p - 2;
        while exp > 0 {
            if exp & 1 == 1 {
                result = result * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        result
    }

    /// Trial division by every monic polynomial of degree 1..=deg/2.
    pub fn is_irreducible(f: &[usize], p: usize) -> bool {
        let deg = f.len() - 1;
        for d in 1..=deg / 2 {
            // Enumerate monic divisor candidates of degree d.
            let count = p.pow(d as u32);
            for t in 0..count {
                let mut cand = Vec::with_capacity(d + 1);
                let mut tt = t;
                for _ in 0..d {
                    cand.push(tt % p);
                    tt /= p;
                }
                cand.push(1);
                if rem(f.to_vec(), &cand, p).is_empty() {
                    return false;
                }
            }
        }
        true
    }
}

/// The field with p^k elements. Elements are coefficient vectors of
/// polynomials of degree < k, mixed-radix encoded with the constant term as
/// the least significant digit.
fn galois_field(p: usize, k: usize) -> Result<RingTable> {
    let size = p.pow(k as u32);
    // Lexicographically least monic irreducible of degree k: candidate
    // tuples (c_0, ..., c_{k-1}) are scanned in lexicographic order with
    // the low-degree coefficient compared first.
    let mut modulus: Option<Vec<usize>> = None;
    'outer: for t in 0..size {
        let mut coeffs = Vec::with_capacity(k + 1);
        for i in 0..k {
            // c_0 varies slowest so tuple order is lexicographic on (c_0, ...).
            coeffs.push(t / p.pow((k - 1 - i) as u32) % p);
        }
        coeffs.push(1);
        if poly::is_irreducible(&coeffs, p) {
            modulus = Some(coeffs);
            break 'outer;
        }
    }
    let modulus = modulus.expect("an irreducible polynomial of every degree exists");
    let decode = |x: usize| -> Vec<usize> {
        let mut v = Vec::with_capacity(k);
        let mut xx = x;
        for _ in 0..k {
            v.push(xx % p);
            xx /= p;
        }
        poly::normalize(&mut v);
        v
    };
    let encode = |v: &[usize]| -> usize { v.iter().rev().fold(0, |acc, &c| acc * p + c) };
    let mut add = vec![0u32; size * size];
    let mut mul = vec![0u32; size * size];
    for i in 0..size {
        let a = decode(i);
        for j in 0..size {
            let b = decode(j);
            let mut sum = vec![0usize; k];
            for (idx, slot) in sum.iter_mut().enumerate() {
                let x = a.get(idx).copied().unwrap_or(0);
                let y = b.get(idx).copied().unwrap_or(0);
                *slot = (x + y) % p;
            }
            add[i * size + j] = encode(&sum) as u32;
            let prod = poly::rem(poly::mul(&a, &b, p), &modulus, p);
            mul[i * size + j] = encode(&prod) as u32;
        }
    }
    RingTable::from_tables(add, mul, None)
}

fn product_ring(a: &RingTable, b: &RingTable) -> Result<RingTable> {
    let size = a.size() * b.size();
    let nb = b.size();
    let mut add = vec![0u32; size * size];
    let mut mul = vec![0u32; size * size];
    for i in 0..size {
        let (i1, i2) = (i / nb, i % nb);
        for j in 0..size {
            let (j1, j2) = (j / nb, j % nb);
            add[i * size + j] = (a.add(i1, j1) * nb + b.add(i2, j2)) as u32;
            mul[i * size + j] = (a.mul(i1, j1) * nb + b.mul(i2, j2)) as u32;
        }
    }
    RingTable::from_tables(add, mul, None)
}
