//! The rule engine: structural theorems about group rings applied in a
//! fixed order to produce Yes/No/Unknown verdicts with citation traces.
//!
//! Every fired rule records its citation and the instantiated hypotheses,
//! each marked as computed (checked against materialized tables) or assumed
//! (taken from an explicit user flag, echoed into the verdict). Unknown is a
//! first-class answer: for non-abelian rings that are not principal ideal
//! rings neither direction is decided by any rule here, and the engine never
//! guesses.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{materialize_group, GroupDescriptor, GroupTable, SubgroupRef};
use crate::group_ring::build_group_ring;
use crate::ring::decomp::decompose_into_local;
use crate::ring::ideal::{all_ideals, is_pir_both, IdealRef, Sidedness};
use crate::ring::{materialize_ring, RingDescriptor, RingTable};

/// Size and enumeration caps. Exceeding a cap is always an explicit
/// outcome (a skipped rule or an error), never silent truncation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Caps {
    /// Largest ring cardinality that will be materialized.
    pub ring_size: usize,
    /// Largest number of distinct ideals an ideal-lattice closure may visit.
    pub ideal_lattice: usize,
    /// Largest quotient group ring the necessary-condition scan materializes.
    pub scan_quotient_size: usize,
    /// Largest group order for subgroup-lattice enumeration.
    pub group_order: usize,
    /// Largest candidate count for module section searches.
    pub section_candidates: u64,
    /// Work bound for bounded purity scans.
    pub purity_work: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            ring_size: 65536,
            ideal_lattice: 100_000,
            scan_quotient_size: 4096,
            group_order: 64,
            section_candidates: 1 << 20,
            purity_work: 100_000_000,
        }
    }
}

/// User-supplied assumptions, echoed into any trace that uses them.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct Assumptions {
    /// Asserts abelianness of `R[G]` when it is too large to check; facts of
    /// this kind are never trusted silently.
    pub abelian_group_ring: Option<bool>,
    pub caps: Caps,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Answer {
    Yes,
    No,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HypothesisStatus {
    Computed,
    Assumed,
}

/// One instantiated hypothesis of a rule, with its verification status.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Hypothesis {
    pub statement: String,
    pub status: HypothesisStatus,
    pub holds: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Citation {
    pub label: String,
    pub statement: String,
}

/// One rule evaluation, fired or not.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RuleApplication {
    pub rule_id: String,
    pub citations: Vec<Citation>,
    pub hypotheses: Vec<Hypothesis>,
    pub conclusion: String,
    pub decisive: bool,
    pub notes: Vec<String>,
}

/// A classification verdict with its full trace.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Verdict {
    pub answer: Answer,
    pub trace: Vec<RuleApplication>,
    /// Assumptions actually consumed by some rule, echoed verbatim.
    pub assumptions: Vec<String>,
    pub caps: Caps,
    pub unknown_reason: Option<String>,
}

impl Verdict {
    /// Rule id of the decisive step, if any.
    pub fn decisive_rule(&self) -> Option<&str> {
        self.trace
            .iter()
            .find(|r| r.decisive)
            .map(|r| r.rule_id.as_str())
    }

    pub fn notes(&self) -> impl Iterator<Item = &str> {
        self.trace
            .iter()
            .flat_map(|r| r.notes.iter().map(|n| n.as_str()))
    }
}

/// The theorem catalog backing rule citations. `Thm-DivNC` is listed for
/// completeness but is unreachable for materialized inputs: a finite
/// division ring always has positive characteristic.
pub const RULE_CATALOG: &[(&str, &str)] = &[
    ("Thm-Kothe", "An artinian principal ideal ring is a Köthe ring."),
    (
        "Thm-KCP",
        "A commutative ring is a Köthe ring iff it is an artinian principal ideal ring.",
    ),
    (
        "Thm-Behboodi",
        "An abelian ring is a Köthe ring iff it is an artinian principal ideal ring.",
    ),
    (
        "Thm-Connell",
        "R[G] is artinian iff R is artinian and G is finite.",
    ),
    (
        "Thm-PassmanDorsey",
        "For a division ring K of characteristic p > 0 and finite G, K[G] is a principal ideal ring iff G is p'-by-cyclic-p; in characteristic 0 it always is.",
    ),
    (
        "Thm-DorseyFinite",
        "For a local artinian principal ideal ring R with residue characteristic p > 0 and finite G, R[G] is a principal ideal ring iff G is p'-by-cyclic-p and, when R is not a division ring, G is R-admissible.",
    ),
    (
        "Prop-FaithWalker",
        "A pure semisimple ring is artinian.",
    ),
    (
        "Lem-HomomorphicImage",
        "Köthe, principal-ideal and pure-semisimple properties pass to surjective homomorphic images.",
    ),
    (
        "Prop-KoetheNec",
        "If R[G] is a Köthe ring (resp. pure semisimple) then so is (R/I)[G/N] for every proper ideal I and normal subgroup N; moreover R is artinian and G is finite.",
    ),
    (
        "Lem-Invertibility",
        "In a local ring with residue characteristic p > 0, n·1 is a unit iff p does not divide n.",
    ),
    (
        "Lem-PGroup",
        "If R is a local artinian principal ideal ring, not a division ring, with residue characteristic p, and R[G] is a principal ideal ring, then G is not a nontrivial p-group.",
    ),
    (
        "Lem-GAdmissible",
        "If R is a local artinian principal ideal ring, R[G] is abelian and |G|·1 is invertible in R, then G is R-admissible.",
    ),
    (
        "Thm-LocalCase",
        "For local R with R[G] abelian: R[G] is a Köthe ring iff R is a Köthe ring, G is a finite p'-by-cyclic-p group for the residue characteristic p when it is positive, and |G|·1 is invertible in R when R is not a division ring.",
    ),
    (
        "Lem-AbelianDecomp",
        "An artinian ring is a finite product of local rings iff every idempotent is central.",
    ),
    (
        "Thm-MainThmA",
        "Suppose R[G] is abelian. Then R[G] is a Köthe ring iff R is a Köthe ring decomposing into local rings (R_i, M_i), G is finite and p'-by-cyclic-p for every positive residue characteristic p = char(R_i/M_i), and |G|·1 is invertible in every R_i that is not semiprimitive.",
    ),
    (
        "Thm-DivNC",
        "For a division ring of characteristic 0, K[G] is a Köthe ring iff G is finite.",
    ),
    (
        "Thm-DivPrime",
        "For a division ring K of characteristic p > 0 and a finite lagrangian Dedekind group G, K[G] is a Köthe ring iff G is p'-by-cyclic-p or K[G] is semisimple.",
    ),
    (
        "Thm-Nicholson",
        "If R is local and G is a locally finite p-group with p in J(R), then R[G] is local.",
    ),
    (
        "Thm-Maschke",
        "If |G|·1 is invertible in R and R is semiprimitive artinian, then R[G] is semisimple.",
    ),
    (
        "Thm-RGPureSemisimple",
        "If |G|·1 is invertible in R, then R is pure semisimple iff R[G] is pure semisimple.",
    ),
    (
        "Thm-Girvan",
        "A commutative ring is a Köthe ring iff every module is pure projective, i.e. iff it is pure semisimple.",
    ),
    (
        "Cor-MainThmComm",
        "For commutative R and abelian G: R[G] is a Köthe ring iff R is a Köthe ring and G is finite and p'-by-cyclic-p for every residue characteristic of R, with |G|·1 invertible in every non-semiprimitive local factor.",
    ),
    (
        "Def-KotheImpliesPss",
        "Every Köthe ring is pure semisimple: a direct sum of cyclic modules is a direct sum of finitely generated modules.",
    ),
];

fn cite(label: &str) -> Citation {
    let statement = RULE_CATALOG
        .iter()
        .find(|(l, _)| *l == label)
        .map(|(_, s)| s.to_string())
        .unwrap_or_default();
    Citation {
        label: label.to_string(),
        statement,
    }
}

fn computed(statement: impl Into<String>, holds: bool) -> Hypothesis {
    Hypothesis {
        statement: statement.into(),
        status: HypothesisStatus::Computed,
        holds,
    }
}

fn assumed(statement: impl Into<String>, holds: bool) -> Hypothesis {
    Hypothesis {
        statement: statement.into(),
        status: HypothesisStatus::Assumed,
        holds,
    }
}

fn describe_members(v: &[usize]) -> String {
    if v.len() <= 24 {
        format!("{v:?}")
    } else {
        format!("[{} elements]", v.len())
    }
}

/// How abelianness of `R[G]` was settled, if it was.
enum AbelianInfo {
    Computed(bool),
    Assumed(bool),
    Unknown(String),
}

/// One refuting pair found by the necessary-condition scan.
#[derive(Debug, Clone)]
pub struct ScanRefutation {
    pub ideal: IdealRef,
    pub subgroup: SubgroupRef,
    pub quotient_ring_size: usize,
    /// Non-principal witness ideal inside the quotient group ring.
    pub witness: IdealRef,
}

/// Everything the scan looked at.
#[derive(Debug, Clone, Default)]
pub struct ScanOutcome {
    pub refutations: Vec<ScanRefutation>,
    pub skipped: Vec<String>,
    pub pairs_checked: usize,
}

fn scan_impl(
    ring: &Arc<RingTable>,
    group: &Arc<GroupTable>,
    caps: &Caps,
    stop_at_first: bool,
) -> Result<ScanOutcome> {
    let ideals = all_ideals(ring, Sidedness::TwoSided, caps.ideal_lattice)?;
    let subgroups = group.subgroups(caps.group_order)?;
    let mut pairs: Vec<(usize, usize, u128)> = Vec::new();
    for (ii, ideal) in ideals.iter().enumerate() {
        if ideal.size() == ring.size() {
            continue; // proper ideals only
        }
        for (si, sub) in subgroups.iter().enumerate() {
            if !sub.is_normal {
                continue;
            }
            let rq_size = (ring.size() / ideal.size().max(1)) as u128;
            let gq_order = (group.order() / sub.order().max(1)) as u32;
            let size = rq_size.checked_pow(gq_order).unwrap_or(u128::MAX);
            pairs.push((ii, si, size));
        }
    }
    pairs.sort_by_key(|&(ii, si, size)| (size, ii, si));
    let mut outcome = ScanOutcome::default();
    for (ii, si, size) in pairs {
        let ideal = &ideals[ii];
        let sub = &subgroups[si];
        if size > caps.scan_quotient_size as u128 {
            outcome.skipped.push(format!(
                "skipped (I of size {}, N of order {}): quotient group ring has {} elements, cap {}",
                ideal.size(),
                sub.order(),
                size,
                caps.scan_quotient_size
            ));
            continue;
        }
        let rq = ring.quotient_ring(ideal)?;
        let gq = group.quotient_group(sub)?;
        let s = build_group_ring(&rq.ring, &gq.group, caps.scan_quotient_size)?;
        outcome.pairs_checked += 1;
        if !s.is_abelian_ring() {
            continue;
        }
        let pir = is_pir_both(&s, caps.ideal_lattice)?;
        if !pir.is_pir {
            outcome.refutations.push(ScanRefutation {
                ideal: ideal.clone(),
                subgroup: sub.clone(),
                quotient_ring_size: s.size(),
                witness: pir.witness.unwrap(),
            });
            if stop_at_first {
                return Ok(outcome);
            }
        }
    }
    Ok(outcome)
}

/// Enumerates all proper two-sided ideals I of R and normal subgroups N of
/// G whose quotient group ring (R/I)[G/N] is materializable and abelian,
/// and reports every pair failing the principal-ideal oracle. An empty list
/// is not a proof that `R[G]` is a Köthe ring. Pairs over the size cap are
/// skipped and reported, not fatal.
pub fn necessary_condition_scan(
    ring: &Arc<RingTable>,
    group: &Arc<GroupTable>,
    caps: &Caps,
) -> Result<ScanOutcome> {
    scan_impl(ring, group, caps, false)
}

struct Engine<'a> {
    gd: &'a GroupDescriptor,
    rd: &'a RingDescriptor,
    asm: &'a Assumptions,
    trace: Vec<RuleApplication>,
    echoes: Vec<String>,
    blocked: Vec<String>,
    group: Option<Arc<GroupTable>>,
    ring: Option<Arc<RingTable>>,
    group_ring: Option<Arc<RingTable>>,
}

impl<'a> Engine<'a> {
    fn new(rd: &'a RingDescriptor, gd: &'a GroupDescriptor, asm: &'a Assumptions) -> Engine<'a> {
        Engine {
            gd,
            rd,
            asm,
            trace: Vec::new(),
            echoes: Vec::new(),
            blocked: Vec::new(),
            group: None,
            ring: None,
            group_ring: None,
        }
    }

    fn caps(&self) -> &Caps {
        &self.asm.caps
    }

    fn push(
        &mut self,
        rule_id: &str,
        citations: &[&str],
        hypotheses: Vec<Hypothesis>,
        conclusion: impl Into<String>,
        decisive: bool,
        notes: Vec<String>,
    ) {
        self.trace.push(RuleApplication {
            rule_id: rule_id.to_string(),
            citations: citations.iter().map(|l| cite(l)).collect(),
            hypotheses,
            conclusion: conclusion.into(),
            decisive,
            notes,
        });
    }

    fn echo_assumption(&mut self, text: String) {
        if !self.echoes.contains(&text) {
            self.echoes.push(text);
        }
    }

    fn verdict(self, answer: Answer) -> Verdict {
        let unknown_reason = match answer {
            Answer::Unknown => Some(if self.blocked.is_empty() {
                "no decisive rule applied".to_string()
            } else {
                self.blocked.join("; ")
            }),
            _ => None,
        };
        Verdict {
            answer,
            trace: self.trace,
            assumptions: self.echoes,
            caps: self.asm.caps.clone(),
            unknown_reason,
        }
    }

    /// Materializes the group, or records why it could not be.
    fn materialize_group(&mut self) -> Result<Option<Arc<GroupTable>>> {
        if self.group.is_none() {
            match materialize_group(self.gd) {
                Ok(g) => self.group = Some(g),
                Err(Error::CapExceeded { what, needed, cap }) => {
                    self.blocked.push(format!(
                        "group not materializable: {what} needs {needed}, cap {cap}"
                    ));
                    return Ok(None);
                }
                Err(e) => return Err(e),
            }
        }
        Ok(self.group.clone())
    }

    fn materialize_ring(&mut self) -> Result<Option<Arc<RingTable>>> {
        if self.ring.is_none() {
            match materialize_ring(self.rd, self.caps().ring_size) {
                Ok(r) => self.ring = Some(r),
                Err(Error::CapExceeded { what, needed, cap }) => {
                    self.blocked.push(format!(
                        "coefficient ring not materializable: {what} needs {needed}, cap {cap}"
                    ));
                    return Ok(None);
                }
                Err(e) => return Err(e),
            }
        }
        Ok(self.ring.clone())
    }

    /// Builds `R[G]` under the cap, caching the result.
    fn materialize_group_ring(
        &mut self,
        r: &Arc<RingTable>,
        g: &Arc<GroupTable>,
    ) -> Option<Arc<RingTable>> {
        if self.group_ring.is_none() {
            match build_group_ring(r, g, self.caps().ring_size) {
                Ok(s) => self.group_ring = Some(s),
                Err(Error::CapExceeded { what, needed, cap }) => {
                    self.blocked.push(format!(
                        "group ring not materializable: {what} needs {needed}, cap {cap}"
                    ));
                    return None;
                }
                Err(_) => return None,
            }
        }
        self.group_ring.clone()
    }

    /// Settles abelianness of `R[G]`: structurally when possible, by direct
    /// computation when materializable, else from the explicit assumption.
    fn abelianness(&mut self, r: &Arc<RingTable>, g: &Arc<GroupTable>) -> AbelianInfo {
        if r.is_commutative() && g.is_abelian() {
            return AbelianInfo::Computed(true);
        }
        if let Some(witness) = r.non_central_idempotent() {
            // R embeds in R[G]; a non-central idempotent of R stays one.
            let _ = witness;
            return AbelianInfo::Computed(false);
        }
        let card = (r.size() as u128).checked_pow(g.order() as u32);
        if card.map(|c| c <= self.caps().ring_size as u128) == Some(true) {
            if let Some(s) = self.materialize_group_ring(r, g) {
                return AbelianInfo::Computed(s.is_abelian_ring());
            }
        }
        if let Some(b) = self.asm.abelian_group_ring {
            self.echo_assumption(format!("abelian_group_ring={b}"));
            return AbelianInfo::Assumed(b);
        }
        AbelianInfo::Unknown(format!(
            "abelianness of R[G] undetermined: cardinality {} exceeds cap {} and no assumption given",
            card.map(|c| c.to_string()).unwrap_or_else(|| "overflow".into()),
            self.caps().ring_size
        ))
    }

    /// Prime divisors of the characteristic of a materialized ring.
    fn char_primes(r: &RingTable) -> Vec<usize> {
        let mut c = r.characteristic();
        let mut primes = Vec::new();
        let mut d = 2;
        while d * d <= c {
            if c % d == 0 {
                primes.push(d);
                while c % d == 0 {
                    c /= d;
                }
            }
            d += 1;
        }
        if c > 1 {
            primes.push(c);
        }
        primes
    }
}

/// The convention note attached when semisimplicity decides an instance
/// whose p'-by-cyclic-p status rests on the trivial-quotient convention.
fn trivial_quotient_convention_note(primes: &[usize], order: usize) -> String {
    format!(
        "convention note: |G| = {order} is coprime to the residue characteristic(s) {primes:?}, so \
         the p'-by-cyclic-p condition holds only through the trivial-quotient convention (N = G, \
         quotient of order p^0); a convention demanding a nontrivial cyclic p-quotient would refute \
         the product characterization here, contradicting semisimplicity, so this engine reports Yes"
    )
}

fn classify_kothe_impl(
    rd: &RingDescriptor,
    gd: &GroupDescriptor,
    asm: &Assumptions,
    include_brute_force: bool,
) -> Result<Verdict> {
    let mut e = Engine::new(rd, gd, asm);

    // R0: non-artinian coefficients.
    if rd.contains_integers_marker() {
        e.push(
            "R0",
            &["Thm-Connell", "Prop-FaithWalker", "Prop-KoetheNec"],
            vec![computed(
                "the coefficient descriptor contains the ring of integers, which is not artinian",
                true,
            )],
            "No: a Köthe group ring forces an artinian coefficient ring",
            true,
            vec![],
        );
        return Ok(e.verdict(Answer::No));
    }

    let Some(g) = e.materialize_group()? else {
        e.push(
            "R0",
            &["Thm-Connell"],
            vec![computed(
                "the group could not be materialized within caps",
                false,
            )],
            "not decisive",
            false,
            vec![],
        );
        return Ok(e.verdict(Answer::Unknown));
    };
    let r_opt = e.materialize_ring()?;

    // R1: Maschke semisimplicity.
    if let Some(r) = r_opt.clone() {
        let unit = r.is_n_one_unit(g.order());
        let semiprimitive = r.is_semiprimitive();
        let hyps = vec![
            computed(format!("|G|·1 = {}·1 is invertible in R", g.order()), unit),
            computed("J(R) = {0}", semiprimitive),
        ];
        if unit && semiprimitive {
            let mut notes =
                vec!["R[G] is semisimple, hence an artinian principal ideal ring".to_string()];
            if g.order() > 1 {
                notes.push(trivial_quotient_convention_note(
                    &Engine::char_primes(&r),
                    g.order(),
                ));
            }
            e.push(
                "R1",
                &["Thm-Maschke", "Thm-Kothe"],
                hyps,
                "Yes: semisimple group ring",
                true,
                notes,
            );
            return Ok(e.verdict(Answer::Yes));
        }
        e.push(
            "R1",
            &["Thm-Maschke", "Thm-Kothe"],
            hyps,
            "not decisive",
            false,
            vec![],
        );
    }

    // R2: division-ring coefficients of positive characteristic.
    let field_char: Option<usize> = match (&r_opt, rd) {
        (Some(r), _) if r.is_division_ring() => Some(r.characteristic()),
        (None, RingDescriptor::GaloisField { p, .. }) => Some(*p),
        (None, RingDescriptor::Zmod { n }) if crate::group::is_prime(*n) => Some(*n),
        _ => None,
    };
    if let Some(p) = field_char {
        match g.p_prime_by_cyclic_p_witness(p, e.caps().group_order) {
            Err(Error::CapExceeded { .. }) => {
                e.blocked
                    .push("subgroup enumeration over cap; division-ring rule skipped".into());
            }
            Err(err) => return Err(err),
            Ok(Some(witness)) => {
                e.push(
                    "R2",
                    &["Thm-PassmanDorsey", "Thm-Kothe"],
                    vec![
                        computed(format!("R is a division ring of characteristic {p}"), true),
                        computed(
                            format!(
                                "G is {p}'-by-cyclic-{p}: witness N of order {} = {}, cyclic quotient of order {}",
                                witness.order(),
                                describe_members(&witness.members.to_vec()),
                                g.order() / witness.order()
                            ),
                            true,
                        ),
                    ],
                    "Yes: K[G] is an artinian principal ideal ring",
                    true,
                    vec![],
                );
                return Ok(e.verdict(Answer::Yes));
            }
            Ok(None) => {
                let semisimple = g.order() % p != 0;
                let lagrangian = g.is_lagrangian(e.caps().group_order)?;
                let dedekind = g.is_dedekind(e.caps().group_order)?;
                let hyps = vec![
                    computed(format!("R is a division ring of characteristic {p}"), true),
                    computed(format!("G is {p}'-by-cyclic-{p}"), false),
                    computed("K[G] is semisimple (char does not divide |G|)", semisimple),
                    computed("G is lagrangian", lagrangian),
                    computed("G is a Dedekind group", dedekind),
                ];
                if !semisimple && lagrangian && dedekind {
                    e.push(
                        "R2",
                        &["Thm-DivPrime"],
                        hyps,
                        "No: neither p'-by-cyclic-p nor semisimple for a lagrangian Dedekind group",
                        true,
                        vec![],
                    );
                    return Ok(e.verdict(Answer::No));
                }
                e.push(
                    "R2",
                    &["Thm-PassmanDorsey", "Thm-DivPrime"],
                    hyps,
                    "not decisive: K[G] is not a principal ideal ring, and the lagrangian Dedekind refutation does not apply",
                    false,
                    vec![],
                );
            }
        }
    }

    // R3: the abelian product characterization.
    if let Some(r) = r_opt.clone() {
        let ab = e.abelianness(&r, &g);
        match ab {
            AbelianInfo::Computed(true) | AbelianInfo::Assumed(true) => {
                let ab_hyp = match ab {
                    AbelianInfo::Computed(_) => computed("R[G] is abelian", true),
                    _ => assumed("R[G] is abelian", true),
                };
                match decompose_into_local(&r) {
                    Err(err) => {
                        // Assumed abelianness contradicted by the coefficient ring.
                        e.push(
                            "R3",
                            &["Thm-MainThmA", "Lem-AbelianDecomp"],
                            vec![ab_hyp, computed(format!("R decomposes into local factors ({err})"), false)],
                            "not applicable: the abelianness assumption contradicts the materialized coefficient ring",
                            false,
                            vec![],
                        );
                    }
                    Ok(factors) => {
                        let r_pir = match is_pir_both(&r, e.caps().ideal_lattice) {
                            Ok(p) => p.is_pir,
                            Err(Error::CapExceeded { .. }) => {
                                e.blocked.push("ideal lattice of R over cap in R3".into());
                                return Ok(e.verdict(Answer::Unknown));
                            }
                            Err(err) => return Err(err),
                        };
                        let mut hyps = vec![
                            ab_hyp,
                            computed(
                                format!(
                                    "R is a finite product of {} local ring(s) with residue characteristic(s) {:?}",
                                    factors.len(),
                                    factors.iter().map(|f| f.residue_char).collect::<Vec<_>>()
                                ),
                                true,
                            ),
                            computed("R is a Köthe ring (artinian principal ideal ring)", r_pir),
                            computed("G is finite", true),
                        ];
                        let mut all_hold = r_pir;
                        let mut chars: Vec<usize> =
                            factors.iter().map(|f| f.residue_char).collect();
                        chars.sort_unstable();
                        chars.dedup();
                        for p in chars {
                            let wit = g.p_prime_by_cyclic_p_witness(p, e.caps().group_order)?;
                            let holds = wit.is_some();
                            all_hold &= holds;
                            hyps.push(computed(
                                match &wit {
                                    Some(w) => format!(
                                        "G is {p}'-by-cyclic-{p} (witness N of order {})",
                                        w.order()
                                    ),
                                    None => format!("G is {p}'-by-cyclic-{p}"),
                                },
                                holds,
                            ));
                        }
                        for (i, f) in factors.iter().enumerate() {
                            if !f.semiprimitive {
                                let holds = f.factor.is_n_one_unit(g.order());
                                all_hold &= holds;
                                hyps.push(computed(
                                    format!(
                                        "|G|·1 is invertible in the non-semiprimitive factor {} (size {})",
                                        i,
                                        f.factor.size()
                                    ),
                                    holds,
                                ));
                            }
                        }
                        let mut notes = Vec::new();
                        if r.is_commutative() && g.is_abelian() {
                            notes.push(
                                "commutative case: the maximal-ideal formulation applies verbatim"
                                    .to_string(),
                            );
                        }
                        let citations: &[&str] = if r.is_commutative() && g.is_abelian() {
                            &[
                                "Thm-MainThmA",
                                "Cor-MainThmComm",
                                "Lem-AbelianDecomp",
                                "Thm-Behboodi",
                            ]
                        } else {
                            &["Thm-MainThmA", "Lem-AbelianDecomp", "Thm-Behboodi"]
                        };
                        let conclusion = if all_hold {
                            "Yes: all product-characterization conditions hold"
                        } else {
                            "No: a product-characterization condition fails"
                        };
                        e.push("R3", citations, hyps, conclusion, true, notes);
                        return Ok(e.verdict(if all_hold { Answer::Yes } else { Answer::No }));
                    }
                }
            }
            AbelianInfo::Computed(false) => {
                e.push(
                    "R3",
                    &["Thm-MainThmA"],
                    vec![computed("R[G] is abelian", false)],
                    "not applicable: R[G] is not abelian",
                    false,
                    vec![],
                );
            }
            AbelianInfo::Assumed(false) => {
                e.push(
                    "R3",
                    &["Thm-MainThmA"],
                    vec![assumed("R[G] is abelian", false)],
                    "not applicable: R[G] assumed non-abelian",
                    false,
                    vec![],
                );
            }
            AbelianInfo::Unknown(reason) => {
                e.blocked.push(reason.clone());
                e.push(
                    "R3",
                    &["Thm-MainThmA"],
                    vec![],
                    format!("not applicable: {reason}"),
                    false,
                    vec![],
                );
            }
        }
    }

    // R4: local coefficient ring via admissibility (no abelianness needed
    // for the sufficiency direction).
    if let Some(r) = r_opt.clone() {
        if !r.is_division_ring() && r.is_local().is_some() {
            let pir_r = match is_pir_both(&r, e.caps().ideal_lattice) {
                Ok(p) => p.is_pir,
                Err(_) => false,
            };
            if pir_r {
                let j = r.jacobson_radical().ideal.clone();
                let residue = r.quotient_ring(&j)?.ring;
                let p = residue.characteristic();
                let wit = g.p_prime_by_cyclic_p_witness(p, e.caps().group_order)?;
                let adm = crate::ring::decomp::is_r_admissible(
                    &r,
                    &g,
                    e.caps().ring_size,
                    e.caps().ideal_lattice,
                );
                match adm {
                    Ok(adm) => {
                        let hyps = vec![
                            computed(
                                format!("R is a local artinian principal ideal ring with residue characteristic {p}"),
                                true,
                            ),
                            computed(
                                format!("G is {p}'-by-cyclic-{p}"),
                                wit.is_some(),
                            ),
                            computed("G is R-admissible", adm),
                        ];
                        if wit.is_some() && adm {
                            e.push(
                                "R4",
                                &["Thm-DorseyFinite", "Thm-Kothe"],
                                hyps,
                                "Yes: R[G] is an artinian principal ideal ring",
                                true,
                                vec![],
                            );
                            return Ok(e.verdict(Answer::Yes));
                        }
                        let mut notes = vec![
                            "R[G] is not a principal ideal ring; without abelianness this does not settle the Köthe question".to_string(),
                        ];
                        if g.order() > 1 && g.is_p_group(p).unwrap_or(false) {
                            notes.push(
                                "consistent with the p-group refutation: a nontrivial p-group over a non-division local coefficient ring never gives a principal ideal ring".to_string(),
                            );
                        }
                        e.push(
                            "R4",
                            &["Thm-DorseyFinite", "Lem-PGroup"],
                            hyps,
                            "not decisive",
                            false,
                            notes,
                        );
                    }
                    Err(Error::CapExceeded { .. }) => {
                        e.blocked
                            .push("admissibility check over cap; local rule skipped".into());
                    }
                    Err(err) => return Err(err),
                }
            }
        }
    }

    // R5: necessary-condition scan over quotient group rings.
    if let Some(r) = r_opt.clone() {
        match scan_impl(&r, &g, e.caps(), true) {
            Err(Error::CapExceeded { what, needed, cap }) => {
                e.blocked.push(format!(
                    "necessary-condition scan over cap: {what} needs {needed}, cap {cap}"
                ));
            }
            Err(err) => return Err(err),
            Ok(outcome) => {
                if let Some(refutation) = outcome.refutations.first() {
                    e.push(
                        "R5",
                        &["Prop-KoetheNec", "Lem-HomomorphicImage", "Thm-Behboodi"],
                        vec![
                            computed(
                                format!(
                                    "the abelian quotient (R/I)[G/N] with |I| = {}, |N| = {} has {} elements and is not a principal ideal ring (witness ideal of size {})",
                                    refutation.ideal.size(),
                                    refutation.subgroup.order(),
                                    refutation.quotient_ring_size,
                                    refutation.witness.size()
                                ),
                                true,
                            ),
                        ],
                        "No: a quotient of a Köthe group ring would be Köthe, but this one is not",
                        true,
                        vec![],
                    );
                    return Ok(e.verdict(Answer::No));
                }
                let mut notes = vec![format!(
                    "scanned {} quotient pairs without finding a refutation",
                    outcome.pairs_checked
                )];
                if !outcome.skipped.is_empty() {
                    notes.push(format!("{} pairs skipped over caps", outcome.skipped.len()));
                }
                e.push(
                    "R5",
                    &["Prop-KoetheNec"],
                    vec![],
                    "not decisive: no refuting quotient found",
                    false,
                    notes,
                );
            }
        }
    }

    // R6: brute force on the materialized group ring.
    if include_brute_force {
        if let Some(r) = r_opt {
            if let Some(s) = e.materialize_group_ring(&r, &g) {
                if s.is_abelian_ring() {
                    match is_pir_both(&s, e.caps().ideal_lattice) {
                        Ok(pir) => {
                            e.push(
                                "R6",
                                &["Thm-Behboodi"],
                                vec![
                                    computed("R[G] is abelian (exhaustive idempotent scan)", true),
                                    computed(
                                        "R[G] is a principal ideal ring (exhaustive lattice closure)",
                                        pir.is_pir,
                                    ),
                                ],
                                if pir.is_pir { "Yes: abelian artinian principal ideal ring" } else { "No: abelian but not a principal ideal ring" },
                                true,
                                vec![],
                            );
                            return Ok(e.verdict(if pir.is_pir {
                                Answer::Yes
                            } else {
                                Answer::No
                            }));
                        }
                        Err(Error::CapExceeded { .. }) => {
                            e.blocked
                                .push("ideal lattice of R[G] over cap in R6".into());
                        }
                        Err(err) => return Err(err),
                    }
                } else {
                    match is_pir_both(&s, e.caps().ideal_lattice) {
                        Ok(pir) if pir.is_pir => {
                            e.push(
                                "R6",
                                &["Thm-Kothe"],
                                vec![
                                    computed("R[G] is abelian", false),
                                    computed("R[G] is an artinian principal ideal ring", true),
                                ],
                                "Yes: principal ideal ring regardless of abelianness",
                                true,
                                vec![],
                            );
                            return Ok(e.verdict(Answer::Yes));
                        }
                        Ok(_) => {
                            e.blocked.push(
                                "non-abelian and not a principal ideal ring: a non-commutative Köthe ring need not be a principal ideal ring (Nakayama), so neither direction is decided"
                                    .into(),
                            );
                            e.push(
                                "R6",
                                &["Thm-Kothe", "Thm-Behboodi"],
                                vec![
                                    computed("R[G] is abelian", false),
                                    computed("R[G] is an artinian principal ideal ring", false),
                                ],
                                "Unknown: outside every decisive criterion",
                                false,
                                vec![],
                            );
                        }
                        Err(Error::CapExceeded { .. }) => {
                            e.blocked
                                .push("ideal lattice of R[G] over cap in R6".into());
                        }
                        Err(err) => return Err(err),
                    }
                }
            }
        }
    }

    Ok(e.verdict(Answer::Unknown))
}

/// Köthe classification with the full rule chain, brute force included.
pub fn classify_kothe(
    rd: &RingDescriptor,
    gd: &GroupDescriptor,
    asm: &Assumptions,
) -> Result<Verdict> {
    classify_kothe_impl(rd, gd, asm, true)
}

/// Köthe classification by theorem rules only: the brute-force fallback is
/// disabled so the verdict is independent of the whole-ring oracle. Used by
/// the agreement corpus.
pub fn classify_kothe_symbolic(
    rd: &RingDescriptor,
    gd: &GroupDescriptor,
    asm: &Assumptions,
) -> Result<Verdict> {
    classify_kothe_impl(rd, gd, asm, false)
}

/// Pure-semisimplicity classification.
///
/// The invertibility transfer is tried first: it is cheaper than the full
/// Köthe chain and the Köthe route subsumes it only for Yes answers.
pub fn classify_pure_semisimple(
    rd: &RingDescriptor,
    gd: &GroupDescriptor,
    asm: &Assumptions,
) -> Result<Verdict> {
    let mut e = Engine::new(rd, gd, asm);
    let marker = rd.contains_integers_marker();
    let g_opt = e.materialize_group()?;

    // P1: Maschke-type transfer along |G|·1 invertible.
    if let Some(g) = g_opt.clone() {
        if marker {
            if g.order() == 1 {
                e.push(
                    "P1",
                    &["Thm-RGPureSemisimple", "Prop-FaithWalker"],
                    vec![
                        computed("|G| = 1, so |G|·1 is invertible", true),
                        computed("R is pure semisimple (R is not artinian)", false),
                    ],
                    "No: pure semisimplicity transfers to the coefficient ring, which is not artinian",
                    true,
                    vec![],
                );
                return Ok(e.verdict(Answer::No));
            }
        } else if let Some(r) = e.materialize_ring()? {
            let unit = r.is_n_one_unit(g.order());
            if unit {
                let commutative = r.is_commutative();
                let abelian = commutative || r.is_abelian_ring();
                if abelian {
                    let pir = is_pir_both(&r, e.caps().ideal_lattice);
                    match pir {
                        Ok(pir) => {
                            let mut notes = vec![];
                            let citations: &[&str] = if commutative {
                                &["Thm-RGPureSemisimple", "Thm-Girvan", "Thm-KCP"]
                            } else {
                                notes.push(
                                    "R is abelian but not commutative: the Köthe/pure-semisimple equivalence is applied through the abelian principal-ideal characterization"
                                        .to_string(),
                                );
                                &["Thm-RGPureSemisimple", "Thm-Girvan", "Thm-Behboodi"]
                            };
                            let hyps = vec![
                                computed(
                                    format!("|G|·1 = {}·1 is invertible in R", g.order()),
                                    true,
                                ),
                                computed(
                                    if commutative {
                                        "R is commutative"
                                    } else {
                                        "R is abelian"
                                    },
                                    true,
                                ),
                                computed("R is a Köthe ring (principal ideal oracle)", pir.is_pir),
                            ];
                            let conclusion = if pir.is_pir {
                                "Yes: R is pure semisimple and the property transfers to R[G]"
                            } else {
                                "No: R is not pure semisimple and the property transfers from R[G]"
                            };
                            e.push("P1", citations, hyps, conclusion, true, notes);
                            return Ok(e.verdict(if pir.is_pir {
                                Answer::Yes
                            } else {
                                Answer::No
                            }));
                        }
                        Err(Error::CapExceeded { .. }) => {
                            e.blocked.push("ideal lattice of R over cap in P1".into());
                        }
                        Err(err) => return Err(err),
                    }
                } else {
                    e.push(
                        "P1",
                        &["Thm-RGPureSemisimple"],
                        vec![
                            computed(format!("|G|·1 = {}·1 is invertible in R", g.order()), true),
                            computed("R is commutative or abelian", false),
                        ],
                        "not decisive: pss(R[G]) = pss(R), but pure semisimplicity of a non-abelian R is not decided here",
                        false,
                        vec![],
                    );
                }
            } else {
                e.push(
                    "P1",
                    &["Thm-RGPureSemisimple"],
                    vec![computed(
                        format!("|G|·1 = {}·1 is invertible in R", g.order()),
                        false,
                    )],
                    "not applicable",
                    false,
                    vec![],
                );
            }
        }
    }

    // P0: a Köthe ring is pure semisimple.
    let kothe = classify_kothe_impl(rd, gd, asm, true)?;
    if kothe.answer == Answer::Yes {
        let mut notes = Vec::new();
        if let (Some(g), Some(r)) = (g_opt.clone(), e.materialize_ring()?) {
            if !r.is_n_one_unit(g.order()) {
                notes.push(format!(
                    "|G|·1 = {}·1 is not invertible in R here: invertibility is sufficient for the transfer, not necessary",
                    g.order()
                ));
            }
        }
        for echoed in kothe.assumptions {
            e.echo_assumption(echoed);
        }
        e.push(
            "P0",
            &["Def-KotheImpliesPss"],
            vec![computed(
                format!(
                    "R[G] is a Köthe ring (decisive rule {})",
                    kothe
                        .trace
                        .iter()
                        .find(|r| r.decisive)
                        .map(|r| r.rule_id.as_str())
                        .unwrap_or("?")
                ),
                true,
            )],
            "Yes: Köthe implies pure semisimple",
            true,
            notes,
        );
        return Ok(e.verdict(Answer::Yes));
    }

    // P2: necessity.
    if marker {
        e.push(
            "P2",
            &["Prop-FaithWalker", "Thm-Connell", "Prop-KoetheNec"],
            vec![computed(
                "the coefficient descriptor contains the ring of integers, which is not artinian",
                true,
            )],
            "No: a pure semisimple group ring forces an artinian coefficient ring",
            true,
            vec![],
        );
        return Ok(e.verdict(Answer::No));
    }
    if let (Some(g), Some(r)) = (g_opt, e.materialize_ring()?) {
        match scan_impl(&r, &g, e.caps(), true) {
            Err(Error::CapExceeded { what, needed, cap }) => {
                e.blocked.push(format!(
                    "necessary-condition scan over cap: {what} needs {needed}, cap {cap}"
                ));
            }
            Err(err) => return Err(err),
            Ok(outcome) => {
                if let Some(refutation) = outcome.refutations.first() {
                    e.push(
                        "P2",
                        &["Prop-KoetheNec", "Thm-Girvan", "Thm-Behboodi"],
                        vec![computed(
                            format!(
                                "the abelian quotient (R/I)[G/N] with |I| = {}, |N| = {} is not a principal ideal ring",
                                refutation.ideal.size(),
                                refutation.subgroup.order()
                            ),
                            true,
                        )],
                        "No: a pure semisimple group ring would make this quotient pure semisimple, hence Köthe, hence principal",
                        true,
                        vec![],
                    );
                    return Ok(e.verdict(Answer::No));
                }
            }
        }
    }

    // P3: out of rules.
    e.blocked
        .push("neither the transfer, the Köthe route, nor a necessity refutation applies".into());
    Ok(e.verdict(Answer::Unknown))
}
