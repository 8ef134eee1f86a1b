//! Finite modules over materialized rings, module homomorphisms, the
//! constructive averaging operator behind the pure-semisimplicity transfer,
//! and a bounded purity checker.
//!
//! Modules are full tables: an addition table over `0..size` and an action
//! table ring-element x module-element -> module-element. All module axioms
//! are checked exhaustively on construction, which keeps everything here at
//! desk scale by design.

use std::collections::HashMap;
use std::sync::Arc;

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::ring::RingTable;

/// Which scalars a homomorphism between modules over a group ring `R[G]`
/// commutes with: the embedded coefficient ring R only, or all of `R[G]`.
/// For modules over a plain ring the two coincide.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Linearity {
    CoefficientRing,
    GroupRing,
}

/// A finite left module with explicit addition and action tables.
#[derive(Debug, Clone)]
pub struct FiniteModule {
    size: usize,
    add: Vec<u32>,
    neg: Vec<u32>,
    /// action[r * size + m] = r·m
    action: Vec<u32>,
    ring: Arc<RingTable>,
}

impl FiniteModule {
    /// Validates the module axioms exhaustively and builds the module.
    pub fn new(ring: Arc<RingTable>, add: Vec<u32>, action: Vec<u32>) -> Result<FiniteModule> {
        let size2 = add.len();
        let size = (size2 as f64).sqrt().round() as usize;
        if size == 0 || size * size != size2 {
            return Err(Error::Malformed(
                "module addition table is not square".into(),
            ));
        }
        if action.len() != ring.size() * size {
            return Err(Error::Malformed(
                "module action table has the wrong shape".into(),
            ));
        }
        if add.iter().chain(action.iter()).any(|&x| x as usize >= size) {
            return Err(Error::Malformed("module table entry out of range".into()));
        }
        let a = |i: usize, j: usize| add[i * size + j] as usize;
        let act = |r: usize, m: usize| action[r * size + m] as usize;
        for m in 0..size {
            if a(0, m) != m || a(m, 0) != m {
                return Err(Error::Malformed("module zero is not an identity".into()));
            }
        }
        let mut neg = vec![u32::MAX; size];
        for m in 0..size {
            match (0..size).find(|&n| a(m, n) == 0) {
                Some(n) => neg[m] = n as u32,
                None => return Err(Error::Malformed("module element has no negative".into())),
            }
        }
        for i in 0..size {
            for j in 0..size {
                if a(i, j) != a(j, i) {
                    return Err(Error::Malformed(
                        "module addition is not commutative".into(),
                    ));
                }
                for k in 0..size {
                    if a(a(i, j), k) != a(i, a(j, k)) {
                        return Err(Error::Malformed(
                            "module addition is not associative".into(),
                        ));
                    }
                }
            }
        }
        for m in 0..size {
            if act(ring.one(), m) != m {
                return Err(Error::Malformed("module action is not unital".into()));
            }
        }
        for r in 0..ring.size() {
            for s in 0..ring.size() {
                let rs = ring.mul(r, s);
                let r_plus_s = ring.add(r, s);
                for m in 0..size {
                    if act(rs, m) != act(r, act(s, m)) {
                        return Err(Error::Malformed(
                            "module action is not associative over ring multiplication".into(),
                        ));
                    }
                    if act(r_plus_s, m) != a(act(r, m), act(s, m)) {
                        return Err(Error::Malformed(
                            "module action is not additive in the scalar".into(),
                        ));
                    }
                }
            }
        }
        for r in 0..ring.size() {
            for m in 0..size {
                let rm = act(r, m);
                for n in 0..size {
                    if act(r, a(m, n)) != a(rm, act(r, n)) {
                        return Err(Error::Malformed(
                            "module action is not additive in the module argument".into(),
                        ));
                    }
                }
            }
        }
        Ok(FiniteModule {
            size,
            add,
            neg,
            action,
            ring,
        })
    }

    /// The ring acting on itself by left multiplication.
    pub fn regular(ring: &Arc<RingTable>) -> FiniteModule {
        let n = ring.size();
        let mut add = vec![0u32; n * n];
        let mut action = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                add[i * n + j] = ring.add(i, j) as u32;
                action[i * n + j] = ring.mul(i, j) as u32;
            }
        }
        FiniteModule::new(Arc::clone(ring), add, action)
            .expect("the regular module satisfies the axioms")
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn ring(&self) -> &Arc<RingTable> {
        &self.ring
    }

    #[inline]
    pub fn add(&self, m: usize, n: usize) -> usize {
        self.add[m * self.size + n] as usize
    }

    #[inline]
    pub fn neg(&self, m: usize) -> usize {
        self.neg[m] as usize
    }

    #[inline]
    pub fn act(&self, r: usize, m: usize) -> usize {
        self.action[r * self.size + m] as usize
    }

    /// Ring-element indices whose action a map of the given linearity must
    /// respect.
    fn acting_elements(&self, linearity: Linearity) -> usize {
        match (linearity, self.ring.group_ring_meta()) {
            (Linearity::CoefficientRing, Some(meta)) => meta.coeff.size(),
            _ => self.ring.size(),
        }
    }

    /// Checks that `set` is closed under addition and the full ring action.
    pub fn is_submodule(&self, set: &BitSet) -> bool {
        if !set.contains(0) {
            return false;
        }
        for m in set.iter() {
            for n in set.iter() {
                if !set.contains(self.add(m, n)) {
                    return false;
                }
            }
            if (0..self.ring.size()).any(|r| !set.contains(self.act(r, m))) {
                return false;
            }
        }
        true
    }

    /// The submodule generated by a set, closing under a given linearity's
    /// scalars and addition.
    fn span(&self, seed: &BitSet, linearity: Linearity) -> BitSet {
        let scalars = self.acting_elements(linearity);
        let mut members = BitSet::new(self.size);
        members.insert(0);
        let mut list = vec![0usize];
        for m in seed.iter() {
            if members.insert(m) {
                list.push(m);
            }
        }
        let mut i = 0;
        while i < list.len() {
            let m = list[i];
            for r in 0..scalars {
                let rm = self.act(r, m);
                if members.insert(rm) {
                    list.push(rm);
                }
            }
            for j in 0..list.len() {
                let s = self.add(m, list[j]);
                if members.insert(s) {
                    list.push(s);
                }
            }
            i += 1;
        }
        members
    }

    /// Quotient by a submodule, with the natural projection.
    pub fn quotient(&self, sub: &BitSet) -> Result<(FiniteModule, Vec<usize>)> {
        if !self.is_submodule(sub) {
            return Err(Error::Precondition("not a submodule".into()));
        }
        let mut coset_of: Vec<Option<usize>> = vec![None; self.size];
        let mut reps = Vec::new();
        for m in 0..self.size {
            if coset_of[m].is_some() {
                continue;
            }
            let idx = reps.len();
            reps.push(m);
            for k in sub.iter() {
                coset_of[self.add(m, k)] = Some(idx);
            }
        }
        let project: Vec<usize> = coset_of.into_iter().map(|c| c.unwrap()).collect();
        let q = reps.len();
        let mut add = vec![0u32; q * q];
        for i in 0..q {
            for j in 0..q {
                add[i * q + j] = project[self.add(reps[i], reps[j])] as u32;
            }
        }
        let mut action = vec![0u32; self.ring.size() * q];
        for r in 0..self.ring.size() {
            for i in 0..q {
                action[r * q + i] = project[self.act(r, reps[i])] as u32;
            }
        }
        let module = FiniteModule::new(Arc::clone(&self.ring), add, action)?;
        Ok((module, project))
    }
}

/// A verified homomorphism between two modules over the same ring.
#[derive(Debug, Clone)]
pub struct ModuleHom {
    pub from: Arc<FiniteModule>,
    pub to: Arc<FiniteModule>,
    map: Vec<u32>,
    pub linearity: Linearity,
}

impl ModuleHom {
    /// Validates additivity and commutation with the tagged scalars.
    pub fn new(
        from: Arc<FiniteModule>,
        to: Arc<FiniteModule>,
        map: Vec<u32>,
        linearity: Linearity,
    ) -> Result<ModuleHom> {
        if map.len() != from.size() || map.iter().any(|&x| x as usize >= to.size()) {
            return Err(Error::Malformed("hom table has the wrong shape".into()));
        }
        if from.ring.size() != to.ring.size() {
            return Err(Error::Malformed(
                "hom endpoints live over different rings".into(),
            ));
        }
        let f = |m: usize| map[m] as usize;
        for m in 0..from.size() {
            for n in 0..from.size() {
                if f(from.add(m, n)) != to.add(f(m), f(n)) {
                    return Err(Error::Malformed("hom is not additive".into()));
                }
            }
        }
        let scalars = from.acting_elements(linearity);
        for r in 0..scalars {
            for m in 0..from.size() {
                if f(from.act(r, m)) != to.act(r, f(m)) {
                    return Err(Error::Malformed(
                        "hom does not commute with the tagged scalar action".into(),
                    ));
                }
            }
        }
        Ok(ModuleHom {
            from,
            to,
            map,
            linearity,
        })
    }

    #[inline]
    pub fn apply(&self, m: usize) -> usize {
        self.map[m] as usize
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.to.size()];
        for &v in &self.map {
            hit[v as usize] = true;
        }
        hit.iter().all(|&h| h)
    }

    /// True iff `other ∘ self` is the identity on the domain of `self`.
    pub fn is_section_of(&self, other: &ModuleHom) -> bool {
        (0..self.from.size()).all(|m| other.apply(self.apply(m)) == m)
    }
}

/// Restriction of scalars along r -> r·1_G: reinterprets a module over a
/// group ring `R[G]` as a module over R on the same underlying set.
pub fn restrict_scalars(module: &FiniteModule) -> Result<FiniteModule> {
    let meta = module
        .ring
        .group_ring_meta()
        .ok_or_else(|| Error::Precondition("coefficient ring lacks group-ring metadata".into()))?
        .clone();
    let r = meta.coeff.size();
    let mut action = vec![0u32; r * module.size()];
    for c in 0..r {
        let embedded = meta.embed_coeff(c);
        for m in 0..module.size() {
            action[c * module.size() + m] = module.act(embedded, m) as u32;
        }
    }
    FiniteModule::new(Arc::clone(&meta.coeff), module.add.clone(), action)
}

/// The averaging operator from the splitting transfer argument: given a
/// group-ring-linear surjection psi: L -> M and a coefficient-ring-linear
/// section phit of it, produces the group-ring-linear section
/// m -> |G|^{-1} · sum_g g^{-1}·phit(g·m), provided |G|·1 is invertible in
/// the coefficient ring.
///
/// The sum is evaluated in two fixed orders and must agree; the returned
/// hom is re-verified as group-ring-linear and as a section.
pub fn average_section(psi: &ModuleHom, phit: &ModuleHom) -> Result<ModuleHom> {
    if psi.linearity != Linearity::GroupRing {
        return Err(Error::Precondition("psi must be group-ring-linear".into()));
    }
    if !psi.is_surjective() {
        return Err(Error::Precondition("psi must be surjective".into()));
    }
    let l = &psi.from;
    let m = &psi.to;
    if phit.from.size() != m.size() || phit.to.size() != l.size() {
        return Err(Error::Precondition(
            "phit must map the target of psi back to its source".into(),
        ));
    }
    if !phit.is_section_of(psi) {
        return Err(Error::Precondition(
            "phit is not a set-level section of psi".into(),
        ));
    }
    let meta = l
        .ring
        .group_ring_meta()
        .ok_or_else(|| Error::Precondition("modules are not over a group ring".into()))?
        .clone();
    let coeff = &meta.coeff;
    let order = meta.group.order();
    let g_one = coeff.n_times(coeff.one(), order);
    let inv = coeff.units().inverse[g_one].ok_or_else(|| {
        Error::Precondition("|G|·1 is not invertible in the coefficient ring".into())
    })? as usize;
    let inv_scalar = meta.embed_coeff(inv);
    let summand = |g: usize, x: usize| -> usize {
        let moved = m.act(meta.embed_group(g), x);
        let lifted = phit.apply(moved);
        l.act(meta.embed_group(meta.group.inverse(g)), lifted)
    };
    let mut map = Vec::with_capacity(m.size());
    for x in 0..m.size() {
        let mut acc = 0usize;
        for g in 0..order {
            acc = l.add(acc, summand(g, x));
        }
        // Summation-order independence: the reversed order must agree.
        let mut acc_rev = 0usize;
        for g in (0..order).rev() {
            acc_rev = l.add(acc_rev, summand(g, x));
        }
        assert_eq!(acc, acc_rev, "averaging sum must not depend on order");
        map.push(l.act(inv_scalar, acc) as u32);
    }
    let phi = ModuleHom::new(
        Arc::clone(&psi.to),
        Arc::clone(&psi.from),
        map,
        Linearity::GroupRing,
    )?;
    if !phi.is_section_of(psi) {
        return Err(Error::Precondition(
            "averaged map failed the section check".into(),
        ));
    }
    Ok(phi)
}

/// Exhaustive search for a section of `psi` that is linear for the given
/// scalars. Generator images are drawn from the fibers of `psi`, and the
/// candidate count (product of fiber sizes) is bounded by `cap`.
///
/// Returns the first section in deterministic order, or `None` when the
/// search space is exhausted.
pub fn find_section(psi: &ModuleHom, linearity: Linearity, cap: u64) -> Result<Option<ModuleHom>> {
    if !psi.is_surjective() {
        return Err(Error::Precondition("psi must be surjective".into()));
    }
    let l = &psi.from;
    let m = &psi.to;
    // Greedy generating sequence for M under the requested linearity.
    let mut gens: Vec<usize> = Vec::new();
    let mut spanned = m.span(&BitSet::new(m.size()), linearity);
    while spanned.count() < m.size() {
        let next = (0..m.size()).find(|&x| !spanned.contains(x)).unwrap();
        gens.push(next);
        let mut seed = spanned.clone();
        seed.insert(next);
        spanned = m.span(&seed, linearity);
    }
    let fibers: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| (0..l.size()).filter(|&x| psi.apply(x) == g).collect())
        .collect();
    let candidates: u64 = fibers
        .iter()
        .map(|f| f.len() as u64)
        .try_fold(1u64, |acc, n| acc.checked_mul(n))
        .unwrap_or(u64::MAX);
    if candidates > cap {
        return Err(Error::CapExceeded {
            what: "section search space".into(),
            needed: candidates as u128,
            cap: cap as u128,
        });
    }
    let scalars = m.acting_elements(linearity);
    // Extends a partial map by linearity from its currently assigned points;
    // fails on any conflict or if the section property breaks.
    let extend = |img: &mut Vec<Option<u32>>| -> bool {
        let mut assigned: Vec<usize> = (0..m.size()).filter(|&x| img[x].is_some()).collect();
        let mut w = 0;
        while w < assigned.len() {
            let x = assigned[w];
            let fx = img[x].unwrap() as usize;
            if psi.apply(fx) != x {
                return false;
            }
            for r in 0..scalars {
                let rx = m.act(r, x);
                let frx = l.act(r, fx);
                match img[rx] {
                    Some(v) if v as usize != frx => return false,
                    Some(_) => {}
                    None => {
                        img[rx] = Some(frx as u32);
                        assigned.push(rx);
                    }
                }
            }
            for k in 0..assigned.len() {
                let y = assigned[k];
                let xy = m.add(x, y);
                let fxy = l.add(fx, img[y].unwrap() as usize);
                match img[xy] {
                    Some(v) if v as usize != fxy => return false,
                    Some(_) => {}
                    None => {
                        img[xy] = Some(fxy as u32);
                        assigned.push(xy);
                    }
                }
            }
            w += 1;
        }
        true
    };
    fn dfs(
        depth: usize,
        gens: &[usize],
        fibers: &[Vec<usize>],
        img: &[Option<u32>],
        extend: &dyn Fn(&mut Vec<Option<u32>>) -> bool,
    ) -> Option<Vec<Option<u32>>> {
        if depth == gens.len() {
            if img.iter().all(|x| x.is_some()) {
                return Some(img.to_vec());
            }
            return None;
        }
        for &candidate in &fibers[depth] {
            let mut next = img.to_vec();
            match next[gens[depth]] {
                Some(v) if v as usize != candidate => continue,
                _ => {}
            }
            next[gens[depth]] = Some(candidate as u32);
            if !extend(&mut next) {
                continue;
            }
            if let Some(done) = dfs(depth + 1, gens, fibers, &next, extend) {
                return Some(done);
            }
        }
        None
    }
    let mut img: Vec<Option<u32>> = vec![None; m.size()];
    img[0] = Some(0);
    if !extend(&mut img) {
        return Ok(None);
    }
    match dfs(0, &gens, &fibers, &img, &extend) {
        None => Ok(None),
        Some(img) => {
            let map: Vec<u32> = img.into_iter().map(|x| x.unwrap()).collect();
            let hom = ModuleHom::new(Arc::clone(m), Arc::clone(l), map, linearity)?;
            debug_assert!(hom.is_section_of(psi));
            Ok(Some(hom))
        }
    }
}

/// Exhaustive search for a coefficient-ring-linear section of `psi`.
pub fn find_coefficient_section(psi: &ModuleHom, cap: u64) -> Result<Option<ModuleHom>> {
    find_section(psi, Linearity::CoefficientRing, cap)
}

/// Result of a bounded purity scan. A clean scan is NOT a purity
/// certificate: only systems up to the requested matrix bounds were tried.
#[derive(Debug, Clone)]
pub enum PurityOutcome {
    NoViolationFound {
        max_rows: usize,
        max_cols: usize,
    },
    Violation {
        rows: usize,
        cols: usize,
        /// Row-major matrix of ring elements.
        matrix: Vec<usize>,
        /// Right-hand side, all entries in the submodule.
        rhs: Vec<usize>,
        /// A solution over the ambient module.
        ambient_solution: Vec<usize>,
    },
}

/// Checks the purity condition for all systems A·x = y with A up to
/// max_rows x max_cols over the ring and y over the submodule: solvability
/// in the ambient module must imply solvability inside the submodule.
pub fn bounded_purity_check(
    module: &FiniteModule,
    sub: &BitSet,
    max_rows: usize,
    max_cols: usize,
    work_cap: u64,
) -> Result<PurityOutcome> {
    if !module.is_submodule(sub) {
        return Err(Error::Precondition("not a submodule".into()));
    }
    let ring_size = module.ring().size() as u64;
    let msize = module.size() as u64;
    let mut work: u64 = 0;
    for rows in 1..=max_rows {
        for cols in 1..=max_cols {
            let cost = ring_size
                .checked_pow((rows * cols) as u32)
                .and_then(|mats| {
                    msize
                        .checked_pow(cols as u32)
                        .map(|s| mats.saturating_mul(s))
                })
                .map(|c| c.saturating_mul(rows as u64))
                .unwrap_or(u64::MAX);
            work = work.saturating_add(cost);
        }
    }
    if work > work_cap {
        return Err(Error::CapExceeded {
            what: "purity scan work".into(),
            needed: work as u128,
            cap: work_cap as u128,
        });
    }
    let sub_elems: Vec<usize> = sub.to_vec();
    for rows in 1..=max_rows {
        for cols in 1..=max_cols {
            let entries = rows * cols;
            let total = ring_size.pow(entries as u32);
            let mut matrix = vec![0usize; entries];
            for code in 0..total {
                let mut c = code;
                for slot in matrix.iter_mut() {
                    *slot = (c % ring_size) as usize;
                    c /= ring_size;
                }
                let eval = |xs: &[usize]| -> Vec<usize> {
                    (0..rows)
                        .map(|i| {
                            let mut acc = 0usize;
                            for (j, &x) in xs.iter().enumerate() {
                                acc = module.add(acc, module.act(matrix[i * cols + j], x));
                            }
                            acc
                        })
                        .collect()
                };
                // Values reachable over the ambient module (remembering one
                // solution each), then over the submodule.
                let mut ambient: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
                let mut xs = vec![0usize; cols];
                for xcode in 0..msize.pow(cols as u32) {
                    let mut c = xcode;
                    for slot in xs.iter_mut() {
                        *slot = (c % msize) as usize;
                        c /= msize;
                    }
                    ambient.entry(eval(&xs)).or_insert_with(|| xs.clone());
                }
                let mut inner: std::collections::HashSet<Vec<usize>> =
                    std::collections::HashSet::new();
                let scount = sub_elems.len() as u64;
                let mut idx = vec![0usize; cols];
                for xcode in 0..scount.pow(cols as u32) {
                    let mut c = xcode;
                    for slot in idx.iter_mut() {
                        *slot = (c % scount) as usize;
                        c /= scount;
                    }
                    let xs: Vec<usize> = idx.iter().map(|&i| sub_elems[i]).collect();
                    inner.insert(eval(&xs));
                }
                // Deterministic scan order over right-hand sides.
                let mut reachable: Vec<(&Vec<usize>, &Vec<usize>)> = ambient.iter().collect();
                reachable.sort_by(|a, b| a.0.cmp(b.0));
                for (value, preimage) in reachable {
                    if value.iter().all(|&v| sub.contains(v)) && !inner.contains(value) {
                        return Ok(PurityOutcome::Violation {
                            rows,
                            cols,
                            matrix: matrix.clone(),
                            rhs: value.clone(),
                            ambient_solution: preimage.clone(),
                        });
                    }
                }
            }
        }
    }
    Ok(PurityOutcome::NoViolationFound { max_rows, max_cols })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{materialize_group, GroupDescriptor};
    use crate::group_ring::{augmentation, build_group_ring};
    use crate::ring::{materialize_ring, RingDescriptor};

    fn group_ring(r: RingDescriptor, g: GroupDescriptor) -> Arc<RingTable> {
        build_group_ring(
            &materialize_ring(&r, 65536).unwrap(),
            &materialize_group(&g).unwrap(),
            65536,
        )
        .unwrap()
    }

    /// The coefficient ring as a module over `R[G]` through the augmentation,
    /// with the augmentation itself as the surjection.
    fn augmentation_setup(s: &Arc<RingTable>) -> (Arc<FiniteModule>, Arc<FiniteModule>, ModuleHom) {
        let meta = s.group_ring_meta().unwrap();
        let r = meta.coeff.clone();
        let l = Arc::new(FiniteModule::regular(s));
        let mut add = vec![0u32; r.size() * r.size()];
        for i in 0..r.size() {
            for j in 0..r.size() {
                add[i * r.size() + j] = r.add(i, j) as u32;
            }
        }
        let mut action = vec![0u32; s.size() * r.size()];
        for x in 0..s.size() {
            let a = augmentation(s, x).unwrap();
            for m in 0..r.size() {
                action[x * r.size() + m] = r.mul(a, m) as u32;
            }
        }
        let m = Arc::new(FiniteModule::new(Arc::clone(s), add, action).unwrap());
        let map: Vec<u32> = (0..s.size())
            .map(|x| augmentation(s, x).unwrap() as u32)
            .collect();
        let psi =
            ModuleHom::new(Arc::clone(&l), Arc::clone(&m), map, Linearity::GroupRing).unwrap();
        (l, m, psi)
    }

    #[test]
    fn restriction_of_the_regular_module() {
        let s = group_ring(
            RingDescriptor::galois_field(3, 1),
            GroupDescriptor::cyclic(2),
        );
        let reg = FiniteModule::regular(&s);
        let restricted = restrict_scalars(&reg).unwrap();
        assert_eq!(restricted.size(), 9);
        assert_eq!(restricted.ring().size(), 3);
        // The additive structure is untouched.
        for m in 0..9 {
            for n in 0..9 {
                assert_eq!(restricted.add(m, n), reg.add(m, n));
            }
        }
    }

    #[test]
    fn averaging_over_f3_c2() {
        let s = group_ring(
            RingDescriptor::galois_field(3, 1),
            GroupDescriptor::cyclic(2),
        );
        let (l, m, psi) = augmentation_setup(&s);
        // phit: c -> c·e, coefficient-ring-linear.
        let meta = s.group_ring_meta().unwrap();
        let map: Vec<u32> = (0..m.size()).map(|c| meta.embed_coeff(c) as u32).collect();
        let phit = ModuleHom::new(
            Arc::clone(&m),
            Arc::clone(&l),
            map,
            Linearity::CoefficientRing,
        )
        .unwrap();
        let phi = average_section(&psi, &phit).unwrap();
        // phi(c) = 2^{-1}·c·(e+g) = 2c·(e+g): coefficients (2c, 2c).
        for c in 0..3usize {
            let expected = meta.encode(&[(2 * c) % 3, (2 * c) % 3]);
            assert_eq!(phi.apply(c), expected);
        }
        assert!(phi.is_section_of(&psi));
        assert_eq!(phi.linearity, Linearity::GroupRing);
    }

    #[test]
    fn averaging_over_f5_c2() {
        let s = group_ring(
            RingDescriptor::galois_field(5, 1),
            GroupDescriptor::cyclic(2),
        );
        let (l, m, psi) = augmentation_setup(&s);
        let meta = s.group_ring_meta().unwrap();
        let map: Vec<u32> = (0..m.size()).map(|c| meta.embed_coeff(c) as u32).collect();
        let phit = ModuleHom::new(
            Arc::clone(&m),
            Arc::clone(&l),
            map,
            Linearity::CoefficientRing,
        )
        .unwrap();
        let phi = average_section(&psi, &phit).unwrap();
        // 2^{-1} = 3 in F5: phi(c) = 3c·(e+g).
        for c in 0..5usize {
            let expected = meta.encode(&[(3 * c) % 5, (3 * c) % 5]);
            assert_eq!(phi.apply(c), expected);
        }
    }

    #[test]
    fn averaging_over_the_trivial_group_returns_phit() {
        let s = group_ring(RingDescriptor::zmod(4), GroupDescriptor::cyclic(1));
        let l = Arc::new(FiniteModule::regular(&s));
        let ident: Vec<u32> = (0..s.size()).map(|x| x as u32).collect();
        let psi = ModuleHom::new(
            Arc::clone(&l),
            Arc::clone(&l),
            ident.clone(),
            Linearity::GroupRing,
        )
        .unwrap();
        let phit = ModuleHom::new(
            Arc::clone(&l),
            Arc::clone(&l),
            ident,
            Linearity::CoefficientRing,
        )
        .unwrap();
        let phi = average_section(&psi, &phit).unwrap();
        for x in 0..s.size() {
            assert_eq!(phi.apply(x), phit.apply(x));
        }
    }

    #[test]
    fn section_search_finds_the_augmentation_section() {
        let s = group_ring(
            RingDescriptor::galois_field(2, 1),
            GroupDescriptor::cyclic(2),
        );
        let (_, _, psi) = augmentation_setup(&s);
        let section = find_coefficient_section(&psi, 1 << 20)
            .unwrap()
            .expect("an F2-linear section exists");
        assert!(section.is_section_of(&psi));
        // The deterministic search lands on c -> c·e.
        assert_eq!(section.apply(1), 1);
        // No group-ring-linear section exists: |G|·1 = 0 blocks averaging.
        assert!(find_section(&psi, Linearity::GroupRing, 1 << 20)
            .unwrap()
            .is_none());
    }

    #[test]
    fn identity_has_the_identity_section() {
        let s = group_ring(
            RingDescriptor::galois_field(3, 1),
            GroupDescriptor::cyclic(2),
        );
        let l = Arc::new(FiniteModule::regular(&s));
        let ident: Vec<u32> = (0..s.size()).map(|x| x as u32).collect();
        let psi =
            ModuleHom::new(Arc::clone(&l), Arc::clone(&l), ident, Linearity::GroupRing).unwrap();
        let section = find_section(&psi, Linearity::GroupRing, 1 << 20)
            .unwrap()
            .unwrap();
        for x in 0..s.size() {
            assert_eq!(section.apply(x), x);
        }
    }

    #[test]
    fn purity_trivial_cases() {
        let s = group_ring(
            RingDescriptor::galois_field(2, 1),
            GroupDescriptor::cyclic(2),
        );
        let reg = FiniteModule::regular(&s);
        let whole = BitSet::full(reg.size());
        assert!(matches!(
            bounded_purity_check(&reg, &whole, 2, 2, 100_000_000).unwrap(),
            PurityOutcome::NoViolationFound { .. }
        ));
        let zero = BitSet::from_indices(reg.size(), [0]);
        assert!(matches!(
            bounded_purity_check(&reg, &zero, 2, 2, 100_000_000).unwrap(),
            PurityOutcome::NoViolationFound { .. }
        ));
    }

    #[test]
    fn radical_of_f2_c2_is_not_pure_in_the_regular_module() {
        let s = group_ring(
            RingDescriptor::galois_field(2, 1),
            GroupDescriptor::cyclic(2),
        );
        let reg = FiniteModule::regular(&s);
        let j = s.jacobson_radical().ideal.members.clone();
        match bounded_purity_check(&reg, &j, 1, 1, 100_000_000).unwrap() {
            PurityOutcome::Violation {
                rows,
                cols,
                matrix,
                rhs,
                ambient_solution,
            } => {
                assert_eq!((rows, cols), (1, 1));
                // (1+g)·x = (1+g): solvable in the module, not inside J.
                assert_eq!(matrix, vec![3]);
                assert_eq!(rhs, vec![3]);
                assert_eq!(s.mul(matrix[0], ambient_solution[0]), rhs[0]);
            }
            other => panic!("expected a violation, got {other:?}"),
        }
    }

    #[test]
    fn direct_summands_are_pure_up_to_2x2_systems() {
        // F3[C2] is semisimple, so the ideal cut off by a central idempotent
        // is a direct summand and must pass the purity scan.
        let s = group_ring(
            RingDescriptor::galois_field(3, 1),
            GroupDescriptor::cyclic(2),
        );
        let reg = FiniteModule::regular(&s);
        let atom = s.central_idempotent_atoms()[0];
        let summand = crate::ring::ideal::principal_left(&s, atom);
        assert!(reg.is_submodule(&summand));
        assert!(matches!(
            bounded_purity_check(&reg, &summand, 2, 2, 100_000_000).unwrap(),
            PurityOutcome::NoViolationFound { .. }
        ));
    }

    #[test]
    fn purity_cap_is_enforced() {
        let s = group_ring(
            RingDescriptor::galois_field(2, 1),
            GroupDescriptor::cyclic(2),
        );
        let reg = FiniteModule::regular(&s);
        let whole = BitSet::full(reg.size());
        assert!(matches!(
            bounded_purity_check(&reg, &whole, 3, 3, 10).unwrap_err(),
            Error::CapExceeded { .. }
        ));
    }

    #[test]
    fn restriction_preserves_submodule_bitvectors() {
        let s = group_ring(
            RingDescriptor::galois_field(2, 1),
            GroupDescriptor::cyclic(4),
        );
        let reg = FiniteModule::regular(&s);
        let restricted = restrict_scalars(&reg).unwrap();
        // An ideal of S stays a subgroup with the same bit-vector after
        // restriction; S-submodules are in particular R-submodules.
        let j = s.jacobson_radical().ideal.members.clone();
        assert!(reg.is_submodule(&j));
        let span_before = reg.span(&j, Linearity::CoefficientRing);
        let span_after = restricted.span(&j, Linearity::CoefficientRing);
        assert_eq!(span_before, span_after);
        assert_eq!(span_after, j);
    }

    #[test]
    fn trivial_module_restricts_to_itself() {
        let s = group_ring(
            RingDescriptor::galois_field(3, 1),
            GroupDescriptor::cyclic(2),
        );
        let zero = FiniteModule::new(Arc::clone(&s), vec![0], vec![0u32; s.size()]).unwrap();
        let restricted = restrict_scalars(&zero).unwrap();
        assert_eq!(restricted.size(), 1);
    }

    #[test]
    fn module_quotient_by_an_ideal() {
        let s = group_ring(
            RingDescriptor::galois_field(2, 1),
            GroupDescriptor::cyclic(2),
        );
        let reg = FiniteModule::regular(&s);
        let j = s.jacobson_radical().ideal.members.clone();
        let (q, project) = reg.quotient(&j).unwrap();
        assert_eq!(q.size(), 2);
        for m in 0..reg.size() {
            for n in 0..reg.size() {
                assert_eq!(project[reg.add(m, n)], q.add(project[m], project[n]));
            }
        }
    }
}
