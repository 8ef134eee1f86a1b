//! Finite groups as explicit Cayley tables.
//!
//! Elements are dense indices `0..order` with `0` always the identity.
//! Materialization from a [`GroupDescriptor`] is deterministic, so element
//! indices are stable across runs and can be pinned in fixtures. Subgroup
//! enumeration works by breadth-first closure over generator extensions
//! with bit-set deduplication, which is exhaustive for the desk-scale
//! orders this crate targets.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::bits::BitSet;
use crate::error::{Error, Result};

/// Largest group order `materialize_group` accepts. Validation is O(n^3).
pub const MAX_GROUP_ORDER: usize = 256;

/// Symbolic constructors for the groups the CLI understands.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GroupDescriptor {
    Cyclic { n: usize },
    Symmetric { n: usize },
    Dihedral { order: usize },
    Quaternion8,
    DirectProduct { factors: Vec<GroupDescriptor> },
    FromTable { product: Vec<Vec<usize>> },
}

impl GroupDescriptor {
    pub fn cyclic(n: usize) -> Self {
        GroupDescriptor::Cyclic { n }
    }

    pub fn symmetric(n: usize) -> Self {
        GroupDescriptor::Symmetric { n }
    }

    pub fn dihedral(order: usize) -> Self {
        GroupDescriptor::Dihedral { order }
    }

    pub fn direct_product(factors: Vec<GroupDescriptor>) -> Self {
        GroupDescriptor::DirectProduct { factors }
    }

    /// Short human-readable form used in traces and reports.
    pub fn label(&self) -> String {
        match self {
            GroupDescriptor::Cyclic { n } => format!("C{n}"),
            GroupDescriptor::Symmetric { n } => format!("S{n}"),
            GroupDescriptor::Dihedral { order } => format!("D{order}"),
            GroupDescriptor::Quaternion8 => "Q8".to_string(),
            GroupDescriptor::DirectProduct { factors } => factors
                .iter()
                .map(|f| f.label())
                .collect::<Vec<_>>()
                .join("x"),
            GroupDescriptor::FromTable { product } => format!("table({})", product.len()),
        }
    }
}

/// A finite group as a validated Cayley table.
///
/// Index `0` is the identity. The table is checked for associativity,
/// a two-sided identity and two-sided inverses on construction.
#[derive(Debug, Clone)]
pub struct GroupTable {
    order: usize,
    product: Vec<u32>,
    inverse: Vec<u32>,
}

/// A subgroup as a membership bit-vector over the parent's indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupRef {
    pub members: BitSet,
    pub is_normal: bool,
}

impl SubgroupRef {
    pub fn order(&self) -> usize {
        self.members.count()
    }
}

/// A quotient group together with the natural projection.
#[derive(Debug, Clone)]
pub struct GroupQuotient {
    pub group: Arc<GroupTable>,
    /// Parent element index -> coset index.
    pub project: Vec<usize>,
    /// Coset index -> canonical (minimal) parent representative.
    pub reps: Vec<usize>,
}

impl GroupTable {
    /// Validates a raw product table and builds the group.
    ///
    /// The identity is located and, if necessary, swapped into index 0, so
    /// callers can hand in any labeling.
    pub fn from_product_table(raw: &[Vec<usize>]) -> Result<GroupTable> {
        let n = raw.len();
        if n == 0 {
            return Err(Error::Malformed("empty product table".into()));
        }
        if n > MAX_GROUP_ORDER {
            return Err(Error::CapExceeded {
                what: "group order".into(),
                needed: n as u128,
                cap: MAX_GROUP_ORDER as u128,
            });
        }
        for row in raw {
            if row.len() != n || row.iter().any(|&x| x >= n) {
                return Err(Error::Malformed(
                    "product table is not square over 0..n".into(),
                ));
            }
        }
        // Locate the two-sided identity.
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| raw[e][x] == x && raw[x][e] == x))
            .ok_or_else(|| Error::Malformed("product table has no identity".into()))?;
        // Relabel by the transposition (0 identity) so that 0 is the identity.
        let sigma = |i: usize| -> usize {
            if i == 0 {
                identity
            } else if i == identity {
                0
            } else {
                i
            }
        };
        let mut product = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                product[i * n + j] = sigma(raw[sigma(i)][sigma(j)]) as u32;
            }
        }
        GroupTable::validate(n, product)
    }

    fn validate(n: usize, product: Vec<u32>) -> Result<GroupTable> {
        let at = |i: usize, j: usize| product[i * n + j] as usize;
        for x in 0..n {
            if at(0, x) != x || at(x, 0) != x {
                return Err(Error::Malformed(
                    "element 0 is not a two-sided identity".into(),
                ));
            }
        }
        let mut inverse = vec![u32::MAX; n];
        for x in 0..n {
            let inv = (0..n).find(|&y| at(x, y) == 0 && at(y, x) == 0);
            match inv {
                Some(y) => inverse[x] = y as u32,
                None => {
                    return Err(Error::Malformed(format!(
                        "element {x} has no two-sided inverse"
                    )))
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = at(a, b);
                for c in 0..n {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(Error::Malformed(format!(
                            "product is not associative at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        Ok(GroupTable {
            order: n,
            product,
            inverse,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn product(&self, a: usize, b: usize) -> usize {
        self.product[a * self.order + b] as usize
    }

    #[inline]
    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    /// Multiplicative order of an element.
    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.product(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a..self.order).all(|b| self.product(a, b) == self.product(b, a)))
    }

    /// True iff some element generates the whole group.
    pub fn is_cyclic(&self) -> bool {
        (0..self.order).any(|a| self.element_order(a) == self.order)
    }

    /// Closure of a seed set under the group product.
    ///
    /// A finite subset closed under the product is a subgroup, so inverses
    /// come for free.
    pub fn subgroup_closure(&self, seed: &BitSet) -> BitSet {
        let mut members = BitSet::new(self.order);
        members.insert(0);
        let mut list: Vec<usize> = vec![0];
        for g in seed.iter() {
            if members.insert(g) {
                list.push(g);
            }
        }
        let mut i = 0;
        while i < list.len() {
            for j in 0..list.len() {
                for p in [
                    self.product(list[i], list[j]),
                    self.product(list[j], list[i]),
                ] {
                    if members.insert(p) {
                        list.push(p);
                    }
                }
            }
            i += 1;
        }
        members
    }

    /// True iff `members` (assumed a subgroup) is normal in the group.
    pub fn is_normal_set(&self, members: &BitSet) -> bool {
        for g in 0..self.order {
            let ginv = self.inverse(g);
            for h in members.iter() {
                if !members.contains(self.product(self.product(g, h), ginv)) {
                    return false;
                }
            }
        }
        true
    }

    /// Enumerates all subgroups by breadth-first closure over generator
    /// extensions, returned in canonical (cardinality, bit-pattern) order.
    pub fn subgroups(&self, order_cap: usize) -> Result<Vec<SubgroupRef>> {
        if self.order > order_cap {
            return Err(Error::CapExceeded {
                what: "subgroup enumeration group order".into(),
                needed: self.order as u128,
                cap: order_cap as u128,
            });
        }
        let trivial = self.subgroup_closure(&BitSet::new(self.order));
        let mut seen: HashSet<BitSet> = HashSet::new();
        seen.insert(trivial.clone());
        let mut queue: Vec<BitSet> = vec![trivial];
        let mut i = 0;
        while i < queue.len() {
            let base = queue[i].clone();
            for g in 0..self.order {
                if base.contains(g) {
                    continue;
                }
                let mut seed = base.clone();
                seed.insert(g);
                let closed = self.subgroup_closure(&seed);
                if seen.insert(closed.clone()) {
                    queue.push(closed);
                }
            }
            i += 1;
        }
        queue.sort_by(|a, b| a.canonical_cmp(b));
        Ok(queue
            .into_iter()
            .map(|members| {
                let is_normal = self.is_normal_set(&members);
                SubgroupRef { members, is_normal }
            })
            .collect())
    }

    /// Builds the quotient group by a normal subgroup.
    ///
    /// Cosets are ordered by their minimal member, which places the identity
    /// coset at index 0.
    pub fn quotient_group(&self, n_sub: &SubgroupRef) -> Result<GroupQuotient> {
        if !self.is_normal_set(&n_sub.members) {
            return Err(Error::NotNormal);
        }
        let mut coset_of: Vec<Option<usize>> = vec![None; self.order];
        let mut reps: Vec<usize> = Vec::new();
        for g in 0..self.order {
            if coset_of[g].is_some() {
                continue;
            }
            let idx = reps.len();
            reps.push(g);
            for h in n_sub.members.iter() {
                coset_of[self.product(g, h)] = Some(idx);
            }
        }
        let project: Vec<usize> = coset_of.into_iter().map(|c| c.unwrap()).collect();
        let m = reps.len();
        let mut product = vec![0u32; m * m];
        for i in 0..m {
            for j in 0..m {
                product[i * m + j] = project[self.product(reps[i], reps[j])] as u32;
            }
        }
        let group = GroupTable::validate(m, product)?;
        Ok(GroupQuotient {
            group: Arc::new(group),
            project,
            reps,
        })
    }

    /// True iff |G| is a power of `p` (p^0 counts, so the trivial group
    /// is a p-group).
    pub fn is_p_group(&self, p: usize) -> Result<bool> {
        require_prime(p)?;
        let mut n = self.order;
        while n % p == 0 {
            n /= p;
        }
        Ok(n == 1)
    }

    /// True iff |G| is relatively prime to `p`.
    pub fn is_p_prime_group(&self, p: usize) -> Result<bool> {
        require_prime(p)?;
        Ok(self.order % p != 0)
    }

    /// Searches for a normal subgroup N with gcd(|N|, p) = 1 and G/N a
    /// cyclic p-group.
    ///
    /// The trivial quotient counts as a cyclic p-group of order p^0, so
    /// N = G qualifies whenever G is a p'-group. Among all witnesses the
    /// one with the largest order is returned (ties broken canonically).
    pub fn p_prime_by_cyclic_p_witness(
        &self,
        p: usize,
        order_cap: usize,
    ) -> Result<Option<SubgroupRef>> {
        require_prime(p)?;
        let mut best: Option<SubgroupRef> = None;
        for sub in self.subgroups(order_cap)? {
            if !sub.is_normal || sub.order() % p == 0 {
                continue;
            }
            let quotient = self.quotient_group(&sub)?;
            let qorder = quotient.group.order();
            let mut q = qorder;
            while q % p == 0 {
                q /= p;
            }
            if q != 1 || !quotient.group.is_cyclic() {
                continue;
            }
            let better = match &best {
                None => true,
                Some(b) => match sub.order().cmp(&b.order()) {
                    std::cmp::Ordering::Greater => true,
                    std::cmp::Ordering::Less => false,
                    std::cmp::Ordering::Equal => {
                        sub.members.canonical_cmp(&b.members) == std::cmp::Ordering::Less
                    }
                },
            };
            if better {
                best = Some(sub);
            }
        }
        Ok(best)
    }

    /// True iff every subgroup is normal.
    pub fn is_dedekind(&self, order_cap: usize) -> Result<bool> {
        Ok(self.subgroups(order_cap)?.iter().all(|s| s.is_normal))
    }

    /// True iff for every divisor d of |G| some subgroup has order d.
    pub fn is_lagrangian(&self, order_cap: usize) -> Result<bool> {
        let orders: HashSet<usize> = self
            .subgroups(order_cap)?
            .iter()
            .map(|s| s.order())
            .collect();
        Ok((1..=self.order)
            .filter(|d| self.order % d == 0)
            .all(|d| orders.contains(&d)))
    }
}

/// Deterministically builds the Cayley table described by `d`.
pub fn materialize_group(d: &GroupDescriptor) -> Result<Arc<GroupTable>> {
    let table = match d {
        GroupDescriptor::Cyclic { n } => cyclic(*n)?,
        GroupDescriptor::Symmetric { n } => symmetric(*n)?,
        GroupDescriptor::Dihedral { order } => dihedral(*order)?,
        GroupDescriptor::Quaternion8 => quaternion8(),
        GroupDescriptor::DirectProduct { factors } => {
            if factors.is_empty() {
                return Err(Error::Malformed(
                    "direct product needs at least one factor".into(),
                ));
            }
            let mut acc = materialize_group(&factors[0])?;
            for f in &factors[1..] {
                let next = materialize_group(f)?;
                acc = Arc::new(direct_product(&acc, &next)?);
            }
            return Ok(acc);
        }
        GroupDescriptor::FromTable { product } => GroupTable::from_product_table(product)?,
    };
    Ok(Arc::new(table))
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_GROUP_ORDER {
        return Err(Error::CapExceeded {
            what: "group order".into(),
            needed: n as u128,
            cap: MAX_GROUP_ORDER as u128,
        });
    }
    Ok(())
}

fn cyclic(n: usize) -> Result<GroupTable> {
    if n == 0 {
        return Err(Error::Malformed("cyclic group needs n >= 1".into()));
    }
    check_order(n)?;
    let mut product = vec![0u32; n * n];
    for i in 0..n {
        for j in 0..n {
            product[i * n + j] = ((i + j) % n) as u32;
        }
    }
    GroupTable::validate(n, product)
}

fn symmetric(n: usize) -> Result<GroupTable> {
    if n == 0 {
        return Err(Error::Malformed("symmetric group needs n >= 1".into()));
    }
    let order: usize = (1..=n).product();
    check_order(order)?;
    // Permutations in lexicographic order; the identity comes first.
    let mut perms: Vec<Vec<usize>> = Vec::with_capacity(order);
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        perms.push(current.clone());
        if !next_permutation(&mut current) {
            break;
        }
    }
    let index: HashMap<Vec<usize>, usize> = perms
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();
    let mut product = vec![0u32; order * order];
    for (i, p) in perms.iter().enumerate() {
        for (j, q) in perms.iter().enumerate() {
            // (p * q)(x) = p(q(x))
            let composed: Vec<usize> = (0..n).map(|x| p[q[x]]).collect();
            product[i * order + j] = index[&composed] as u32;
        }
    }
    GroupTable::validate(order, product)
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn dihedral(order: usize) -> Result<GroupTable> {
    if order < 2 || order % 2 != 0 {
        return Err(Error::Malformed(
            "dihedral group needs an even order >= 2".into(),
        ));
    }
    check_order(order)?;
    let n = order / 2;
    // Element s^a r^b is encoded as a*n + b; s r s = r^{-1}.
    let enc = |a: usize, b: usize| a * n + b;
    let mut product = vec![0u32; order * order];
    for a in 0..2usize {
        for b in 0..n {
            for c in 0..2usize {
                for d in 0..n {
                    let na = (a + c) % 2;
                    let nb = if c == 0 {
                        (b + d) % n
                    } else {
                        (n - b % n + d) % n
                    };
                    product[enc(a, b) * order + enc(c, d)] = enc(na, nb) as u32;
                }
            }
        }
    }
    GroupTable::validate(order, product)
}

fn quaternion8() -> GroupTable {
    // Elements 0..8 are +1, -1, +i, -i, +j, -j, +k, -k.
    let axis = |e: usize| e / 2;
    let neg = |e: usize| e % 2 == 1;
    let enc = |ax: usize, n: bool| ax * 2 + usize::from(n);
    // Products of base axes 1, i, j, k; (axis, sign) with sign true = negative.
    let base = |a: usize, b: usize| -> (usize, bool) {
        match (a, b) {
            (0, x) => (x, false),
            (x, 0) => (x, false),
            (1, 1) => (0, true),
            (2, 2) => (0, true),
            (3, 3) => (0, true),
            (1, 2) => (3, false),
            (2, 1) => (3, true),
            (2, 3) => (1, false),
            (3, 2) => (1, true),
            (3, 1) => (2, false),
            (1, 3) => (2, true),
            _ => unreachable!(),
        }
    };
    let mut product = vec![0u32; 64];
    for x in 0..8usize {
        for y in 0..8usize {
            let (ax, n) = base(axis(x), axis(y));
            product[x * 8 + y] = enc(ax, n ^ neg(x) ^ neg(y)) as u32;
        }
    }
    GroupTable::validate(8, product).expect("hard-coded quaternion table is valid")
}

fn direct_product(a: &GroupTable, b: &GroupTable) -> Result<GroupTable> {
    let order = a
        .order()
        .checked_mul(b.order())
        .ok_or_else(|| Error::Malformed("direct product order overflow".into()))?;
    check_order(order)?;
    let nb = b.order();
    let mut product = vec![0u32; order * order];
    for i in 0..order {
        let (i1, i2) = (i / nb, i % nb);
        for j in 0..order {
            let (j1, j2) = (j / nb, j % nb);
            product[i * order + j] = (a.product(i1, j1) * nb + b.product(i2, j2)) as u32;
        }
    }
    GroupTable::validate(order, product)
}

pub(crate) fn require_prime(p: usize) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::Malformed(format!("{p} is not prime")))
    }
}

pub fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(d: GroupDescriptor) -> Arc<GroupTable> {
        materialize_group(&d).unwrap()
    }

    #[test]
    fn cyclic_one_is_trivial() {
        let g = group(GroupDescriptor::cyclic(1));
        assert_eq!(g.order(), 1);
        assert!(g.is_cyclic());
    }

    #[test]
    fn symmetric_three_is_nonabelian_of_order_six() {
        let g = group(GroupDescriptor::symmetric(3));
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
    }

    #[test]
    fn c3_times_d8_has_order_24() {
        let g = group(GroupDescriptor::direct_product(vec![
            GroupDescriptor::cyclic(3),
            GroupDescriptor::dihedral(8),
        ]));
        assert_eq!(g.order(), 24);
        assert!(!g.is_abelian());
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(
            group(GroupDescriptor::cyclic(1))
                .subgroups(64)
                .unwrap()
                .len(),
            1
        );
        assert_eq!(
            group(GroupDescriptor::cyclic(4))
                .subgroups(64)
                .unwrap()
                .len(),
            3
        );
        let s3 = group(GroupDescriptor::symmetric(3));
        let subs = s3.subgroups(64).unwrap();
        assert_eq!(subs.len(), 6);
        assert_eq!(subs.iter().filter(|s| s.is_normal).count(), 3);
    }

    #[test]
    fn classical_subgroup_counts() {
        // D8: trivial, five of order 2, three of order 4, the whole group.
        let d8 = group(GroupDescriptor::dihedral(8));
        assert_eq!(d8.subgroups(64).unwrap().len(), 10);
        // Q8: trivial, the center, three cyclic of order 4, the whole group.
        let q8 = group(GroupDescriptor::Quaternion8);
        assert_eq!(q8.subgroups(64).unwrap().len(), 6);
        // Coprime factors: the lattice of C3 x D8 is the product lattice.
        let g = group(GroupDescriptor::direct_product(vec![
            GroupDescriptor::cyclic(3),
            GroupDescriptor::dihedral(8),
        ]));
        assert_eq!(g.subgroups(64).unwrap().len(), 20);
    }

    #[test]
    fn quotients() {
        let s3 = group(GroupDescriptor::symmetric(3));
        let a3 = s3
            .subgroups(64)
            .unwrap()
            .into_iter()
            .find(|s| s.order() == 3)
            .unwrap();
        let q = s3.quotient_group(&a3).unwrap();
        assert_eq!(q.group.order(), 2);
        assert!(q.group.is_cyclic());

        let g = group(GroupDescriptor::direct_product(vec![
            GroupDescriptor::cyclic(3),
            GroupDescriptor::dihedral(8),
        ]));
        let n = SubgroupRef {
            members: BitSet::from_indices(24, 0..8),
            is_normal: true,
        };
        let q = g.quotient_group(&n).unwrap();
        assert_eq!(q.group.order(), 3);
        assert!(q.group.is_cyclic());

        // Quotient by the trivial subgroup reproduces the group.
        let triv = SubgroupRef {
            members: BitSet::from_indices(6, [0]),
            is_normal: true,
        };
        let q = s3.quotient_group(&triv).unwrap();
        assert_eq!(q.group.order(), 6);
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(q.group.product(a, b), s3.product(a, b));
            }
        }
    }

    #[test]
    fn cyclicity() {
        assert!(group(GroupDescriptor::cyclic(6)).is_cyclic());
        let v4 = group(GroupDescriptor::direct_product(vec![
            GroupDescriptor::cyclic(2),
            GroupDescriptor::cyclic(2),
        ]));
        assert!(!v4.is_cyclic());
    }

    #[test]
    fn p_group_predicates() {
        let trivial = group(GroupDescriptor::cyclic(1));
        assert!(trivial.is_p_group(2).unwrap());
        assert!(trivial.is_p_prime_group(2).unwrap());
        let q8 = group(GroupDescriptor::Quaternion8);
        assert!(q8.is_p_group(2).unwrap());
        assert!(!q8.is_p_prime_group(2).unwrap());
        let s3 = group(GroupDescriptor::symmetric(3));
        assert!(!s3.is_p_group(5).unwrap());
        assert!(s3.is_p_prime_group(5).unwrap());
        assert!(s3.is_p_group(4).is_err());
    }

    #[test]
    fn p_prime_by_cyclic_p_witnesses() {
        let s3 = group(GroupDescriptor::symmetric(3));
        let w = s3.p_prime_by_cyclic_p_witness(2, 64).unwrap().unwrap();
        assert_eq!(w.order(), 3); // A3

        let v4 = group(GroupDescriptor::direct_product(vec![
            GroupDescriptor::cyclic(2),
            GroupDescriptor::cyclic(2),
        ]));
        assert!(v4.p_prime_by_cyclic_p_witness(2, 64).unwrap().is_none());

        let g = group(GroupDescriptor::direct_product(vec![
            GroupDescriptor::cyclic(3),
            GroupDescriptor::dihedral(8),
        ]));
        let w = g.p_prime_by_cyclic_p_witness(3, 64).unwrap().unwrap();
        assert_eq!(w.order(), 8);
        assert_eq!(w.members.to_vec(), (0..8).collect::<Vec<_>>()); // {e} x D8
    }

    #[test]
    fn witness_verifies_directly() {
        for (d, p) in [
            (GroupDescriptor::symmetric(3), 2),
            (GroupDescriptor::cyclic(6), 2),
            (GroupDescriptor::cyclic(6), 3),
            (
                GroupDescriptor::direct_product(vec![
                    GroupDescriptor::cyclic(3),
                    GroupDescriptor::dihedral(8),
                ]),
                3,
            ),
        ] {
            let g = group(d);
            if let Some(w) = g.p_prime_by_cyclic_p_witness(p, 64).unwrap() {
                assert!(g.is_normal_set(&w.members));
                assert_eq!(w.order() % p == 0, false);
                let q = g.quotient_group(&w).unwrap();
                assert!(q.group.is_cyclic());
                let mut m = q.group.order();
                while m % p == 0 {
                    m /= p;
                }
                assert_eq!(m, 1);
            }
        }
    }

    #[test]
    fn dedekind_groups() {
        assert!(group(GroupDescriptor::cyclic(12)).is_dedekind(64).unwrap());
        assert!(group(GroupDescriptor::Quaternion8).is_dedekind(64).unwrap());
        assert!(!group(GroupDescriptor::symmetric(3))
            .is_dedekind(64)
            .unwrap());
    }

    /// Even permutations of 4 letters in lexicographic order, composed as
    /// functions. Independent of the symmetric-group constructor.
    fn alternating4_table() -> Vec<Vec<usize>> {
        let mut perms: Vec<Vec<usize>> = Vec::new();
        let mut current: Vec<usize> = vec![0, 1, 2, 3];
        loop {
            let mut inversions = 0;
            for i in 0..4 {
                for j in i + 1..4 {
                    if current[i] > current[j] {
                        inversions += 1;
                    }
                }
            }
            if inversions % 2 == 0 {
                perms.push(current.clone());
            }
            if !next_permutation(&mut current) {
                break;
            }
        }
        assert_eq!(perms.len(), 12);
        let index: HashMap<Vec<usize>, usize> = perms
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        perms
            .iter()
            .map(|p| {
                perms
                    .iter()
                    .map(|q| index[&(0..4).map(|x| p[q[x]]).collect::<Vec<_>>()])
                    .collect()
            })
            .collect()
    }

    #[test]
    fn lagrangian_groups() {
        assert!(group(GroupDescriptor::cyclic(12))
            .is_lagrangian(64)
            .unwrap());
        assert!(group(GroupDescriptor::Quaternion8)
            .is_lagrangian(64)
            .unwrap());
        let a4 = group(GroupDescriptor::FromTable {
            product: alternating4_table(),
        });
        assert_eq!(a4.order(), 12);
        assert!(!a4.is_lagrangian(64).unwrap()); // no subgroup of order 6
    }

    #[test]
    fn lagrange_sanity_and_quotient_projection() {
        for d in [
            GroupDescriptor::symmetric(3),
            GroupDescriptor::Quaternion8,
            GroupDescriptor::dihedral(8),
        ] {
            let g = group(d);
            for s in g.subgroups(64).unwrap() {
                assert_eq!(g.order() % s.order(), 0);
                if s.is_normal {
                    let q = g.quotient_group(&s).unwrap();
                    assert_eq!(q.group.order(), g.order() / s.order());
                    // The projection is a surjective homomorphism.
                    for a in 0..g.order() {
                        for b in 0..g.order() {
                            assert_eq!(
                                q.project[g.product(a, b)],
                                q.group.product(q.project[a], q.project[b])
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn malformed_tables_are_rejected() {
        // Not closed / wrong shape.
        assert!(GroupTable::from_product_table(&[vec![0, 1], vec![1]]).is_err());
        // Latin-square-looking table without associativity cannot arise at
        // order 2; corrupt an S3 table instead.
        let s3 = symmetric(3).unwrap();
        let mut raw: Vec<Vec<usize>> = (0..6)
            .map(|i| (0..6).map(|j| s3.product(i, j)).collect())
            .collect();
        let corrupted = if raw[3][4] == 1 { 2 } else { 1 };
        raw[3][4] = corrupted;
        assert!(GroupTable::from_product_table(&raw).is_err());
    }

    #[test]
    fn identity_relabeling() {
        // Cyclic group of order 3 with the identity at index 2.
        let raw = vec![vec![1, 2, 0], vec![2, 0, 1], vec![0, 1, 2]];
        let g = GroupTable::from_product_table(&raw).unwrap();
        assert_eq!(g.identity(), 0);
        assert_eq!(g.product(0, 1), 1);
        assert!(g.is_cyclic());
    }
}
