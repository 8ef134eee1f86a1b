//! The oracle/theorem agreement corpus: sweeps small coefficient rings and
//! groups, classifies each instance symbolically (brute force disabled) and
//! through the exhaustive oracle route, and records every case where both
//! conclude.

use std::sync::Arc;

use serde::Serialize;

use koethe::classify::{classify_kothe_symbolic, Answer, Assumptions, Caps};
use koethe::group::materialize_group;
use koethe::group_ring::build_group_ring;
use koethe::ring::ideal::is_pir_both;
use koethe::ring::materialize_ring;
use koethe::{Error, GroupDescriptor, RingDescriptor, RingTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RowStatus {
    Agree,
    Disagree,
    SymbolicOnly,
    OracleOnly,
    Undecided,
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct CorpusRow {
    pub ring: String,
    pub group: String,
    pub size: u128,
    pub symbolic: Option<Answer>,
    pub symbolic_rule: Option<String>,
    pub oracle: Option<Answer>,
    pub status: RowStatus,
    pub note: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct CorpusReport {
    pub rows: Vec<CorpusRow>,
    pub compared: usize,
    pub disagreements: usize,
}

/// Coefficient rings up to the cardinality bound: prime-power fields plus
/// the non-field modular rings (primes are covered by the fields).
pub fn default_rings(max_card: usize) -> Vec<RingDescriptor> {
    let mut rings = Vec::new();
    for p in [2usize, 3, 5, 7, 11, 13] {
        let mut power = p;
        let mut k = 1;
        while power <= max_card {
            rings.push(RingDescriptor::galois_field(p, k));
            k += 1;
            power = power.saturating_mul(p);
        }
    }
    for n in 2..=max_card {
        if !koethe::group::is_prime(n) {
            rings.push(RingDescriptor::zmod(n));
        }
    }
    rings
}

/// Small groups up to the order bound: cyclic groups, elementary abelian
/// 2-groups, S3, D8 and Q8.
pub fn default_groups(max_order: usize) -> Vec<GroupDescriptor> {
    let mut groups: Vec<GroupDescriptor> = (1..=max_order).map(GroupDescriptor::cyclic).collect();
    let klein = GroupDescriptor::direct_product(vec![
        GroupDescriptor::cyclic(2),
        GroupDescriptor::cyclic(2),
    ]);
    if max_order >= 4 {
        groups.push(klein);
    }
    if max_order >= 8 {
        groups.push(GroupDescriptor::direct_product(vec![
            GroupDescriptor::cyclic(2),
            GroupDescriptor::cyclic(2),
            GroupDescriptor::cyclic(2),
        ]));
    }
    if max_order >= 6 {
        groups.push(GroupDescriptor::symmetric(3));
    }
    if max_order >= 8 {
        groups.push(GroupDescriptor::dihedral(8));
        groups.push(GroupDescriptor::Quaternion8);
    }
    groups
}

/// The brute-force route on a materialized group ring: the abelian oracle
/// decides both ways; a non-abelian principal ideal ring is a Köthe ring;
/// a non-abelian non-principal ring is inconclusive.
fn oracle_route(s: &Arc<RingTable>, lattice_cap: usize) -> koethe::Result<Option<Answer>> {
    let pir = is_pir_both(s, lattice_cap)?;
    if s.is_abelian_ring() {
        Ok(Some(if pir.is_pir { Answer::Yes } else { Answer::No }))
    } else if pir.is_pir {
        Ok(Some(Answer::Yes))
    } else {
        Ok(None)
    }
}

/// Runs the sweep. Instances whose group ring exceeds `size_cap` are
/// skipped (recorded, not fatal).
pub fn run(
    rings: &[RingDescriptor],
    groups: &[GroupDescriptor],
    size_cap: u128,
    caps: &Caps,
) -> koethe::Result<CorpusReport> {
    let asm = Assumptions {
        caps: caps.clone(),
        ..Default::default()
    };
    let mut rows = Vec::new();
    let mut compared = 0;
    let mut disagreements = 0;
    for rd in rings {
        let r = materialize_ring(rd, caps.ring_size)?;
        for gd in groups {
            let g = materialize_group(gd)?;
            let size = (r.size() as u128)
                .checked_pow(g.order() as u32)
                .unwrap_or(u128::MAX);
            if size > size_cap {
                rows.push(CorpusRow {
                    ring: rd.label(),
                    group: gd.label(),
                    size,
                    symbolic: None,
                    symbolic_rule: None,
                    oracle: None,
                    status: RowStatus::Skipped,
                    note: format!("group ring larger than the sweep cap {size_cap}"),
                });
                continue;
            }
            let symbolic_verdict = classify_kothe_symbolic(rd, gd, &asm)?;
            let symbolic = match symbolic_verdict.answer {
                Answer::Unknown => None,
                a => Some(a),
            };
            let symbolic_rule = symbolic_verdict.decisive_rule().map(|s| s.to_string());
            let oracle = match build_group_ring(&r, &g, caps.ring_size) {
                Ok(s) => oracle_route(&s, caps.ideal_lattice)?,
                Err(Error::CapExceeded { .. }) => None,
                Err(e) => return Err(e),
            };
            let (status, note) = match (symbolic, oracle) {
                (Some(a), Some(b)) if a == b => {
                    compared += 1;
                    (RowStatus::Agree, String::new())
                }
                (Some(a), Some(b)) => {
                    compared += 1;
                    disagreements += 1;
                    (
                        RowStatus::Disagree,
                        format!("symbolic {a:?} vs oracle {b:?}"),
                    )
                }
                (Some(_), None) => (
                    RowStatus::SymbolicOnly,
                    "oracle inconclusive (non-abelian, not principal)".into(),
                ),
                (None, Some(_)) => (RowStatus::OracleOnly, "no symbolic rule fired".into()),
                (None, None) => (RowStatus::Undecided, String::new()),
            };
            rows.push(CorpusRow {
                ring: rd.label(),
                group: gd.label(),
                size,
                symbolic,
                symbolic_rule,
                oracle,
                status,
                note,
            });
        }
    }
    Ok(CorpusReport {
        rows,
        compared,
        disagreements,
    })
}

fn answer_str(a: &Option<Answer>) -> &'static str {
    match a {
        Some(Answer::Yes) => "yes",
        Some(Answer::No) => "no",
        Some(Answer::Unknown) | None => "-",
    }
}

pub fn to_csv(report: &CorpusReport) -> String {
    use std::fmt::Write;
    let mut out = String::from("ring,group,size,symbolic,symbolic_rule,oracle,status,note\n");
    for row in &report.rows {
        writeln!(
            out,
            "{},{},{},{},{},{},{:?},{}",
            row.ring,
            row.group,
            row.size,
            answer_str(&row.symbolic),
            row.symbolic_rule.as_deref().unwrap_or("-"),
            answer_str(&row.oracle),
            row.status,
            row.note.replace(',', ";")
        )
        .unwrap();
    }
    writeln!(
        out,
        "# compared {} instances; {} disagreement(s)",
        report.compared, report.disagreements
    )
    .unwrap();
    out
}
