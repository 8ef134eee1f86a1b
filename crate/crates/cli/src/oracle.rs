//! Direct oracle access: ideal-lattice, idempotent, radical and
//! local-decomposition reports over a materialized ring descriptor.
//! All listings are sorted element-index lists, so outputs are
//! deterministic.

use serde::Serialize;

use koethe::classify::Caps;
use koethe::ring::decomp::decompose_into_local;
use koethe::ring::ideal::{is_pir, Sidedness};
use koethe::ring::materialize_ring;
use koethe::{Error, RingDescriptor};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleKind {
    Pir,
    Idempotents,
    Radical,
    LocalDecomp,
}

#[derive(Debug, Clone, Serialize)]
pub struct PirReport {
    pub ring: String,
    pub size: usize,
    /// For group rings: the ordered basis of group-element indices.
    pub basis: Option<Vec<usize>>,
    pub side: String,
    pub is_pir: bool,
    pub ideals_seen: usize,
    /// Members of the first non-principal ideal, when one exists.
    pub witness: Option<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct IdempotentsReport {
    pub ring: String,
    pub size: usize,
    pub basis: Option<Vec<usize>>,
    pub idempotents: Vec<usize>,
    pub non_central: Vec<usize>,
    pub abelian: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct RadicalReport {
    pub ring: String,
    pub size: usize,
    pub basis: Option<Vec<usize>>,
    pub members: Vec<usize>,
    pub nilpotency_index: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct FactorReport {
    pub size: usize,
    pub atom: usize,
    pub residue_char: usize,
    pub semiprimitive: bool,
    pub max_ideal: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct LocalDecompReport {
    pub ring: String,
    pub size: usize,
    pub abelian: bool,
    /// Witness idempotent when the ring is not abelian (no decomposition).
    pub non_central_witness: Option<usize>,
    pub factors: Vec<FactorReport>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum OracleReport {
    Pir(PirReport),
    Idempotents(IdempotentsReport),
    Radical(RadicalReport),
    LocalDecomp(LocalDecompReport),
}

pub fn run(
    kind: OracleKind,
    rd: &RingDescriptor,
    side: Sidedness,
    caps: &Caps,
) -> koethe::Result<OracleReport> {
    let ring = materialize_ring(rd, caps.ring_size)?;
    let label = rd.label();
    let basis = ring
        .group_ring_meta()
        .map(|m| (0..m.group.order()).collect::<Vec<_>>());
    match kind {
        OracleKind::Pir => {
            let outcome = is_pir(&ring, side, caps.ideal_lattice)?;
            Ok(OracleReport::Pir(PirReport {
                ring: label,
                size: ring.size(),
                basis,
                side: match side {
                    Sidedness::Left => "left".into(),
                    Sidedness::Right => "right".into(),
                    Sidedness::TwoSided => "two_sided".into(),
                },
                is_pir: outcome.is_pir,
                ideals_seen: outcome.ideals_seen,
                witness: outcome.witness.map(|w| w.members.to_vec()),
            }))
        }
        OracleKind::Idempotents => {
            let idempotents = ring.idempotents();
            let non_central: Vec<usize> = idempotents
                .iter()
                .copied()
                .filter(|&e| !ring.is_central(e))
                .collect();
            Ok(OracleReport::Idempotents(IdempotentsReport {
                ring: label,
                size: ring.size(),
                basis,
                abelian: non_central.is_empty(),
                idempotents,
                non_central,
            }))
        }
        OracleKind::Radical => {
            let radical = ring.jacobson_radical();
            Ok(OracleReport::Radical(RadicalReport {
                ring: label,
                size: ring.size(),
                basis,
                members: radical.ideal.members.to_vec(),
                nilpotency_index: radical.nilpotency_index,
            }))
        }
        OracleKind::LocalDecomp => match decompose_into_local(&ring) {
            Ok(factors) => Ok(OracleReport::LocalDecomp(LocalDecompReport {
                ring: label,
                size: ring.size(),
                abelian: true,
                non_central_witness: None,
                factors: factors
                    .iter()
                    .map(|f| FactorReport {
                        size: f.factor.size(),
                        atom: f.atom,
                        residue_char: f.residue_char,
                        semiprimitive: f.semiprimitive,
                        max_ideal: f.max_ideal.members.to_vec(),
                    })
                    .collect(),
            })),
            Err(Error::NotAbelian { witness }) => {
                Ok(OracleReport::LocalDecomp(LocalDecompReport {
                    ring: label,
                    size: ring.size(),
                    abelian: false,
                    non_central_witness: Some(witness),
                    factors: vec![],
                }))
            }
            Err(e) => Err(e),
        },
    }
}

pub fn render_text(report: &OracleReport) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    match report {
        OracleReport::Pir(r) => {
            writeln!(
                out,
                "ring: {} ({} elements), side: {}",
                r.ring, r.size, r.side
            )
            .unwrap();
            if r.is_pir {
                writeln!(
                    out,
                    "principal ideal ring: yes ({} ideals, every one principal)",
                    r.ideals_seen
                )
                .unwrap();
            } else {
                writeln!(out, "principal ideal ring: no").unwrap();
                let w = r.witness.as_ref().unwrap();
                writeln!(out, "witness ideal ({} elements): {:?}", w.len(), w).unwrap();
            }
        }
        OracleReport::Idempotents(r) => {
            writeln!(out, "ring: {} ({} elements)", r.ring, r.size).unwrap();
            writeln!(
                out,
                "idempotents ({}): {:?}",
                r.idempotents.len(),
                r.idempotents
            )
            .unwrap();
            writeln!(
                out,
                "non-central ({}): {:?}",
                r.non_central.len(),
                r.non_central
            )
            .unwrap();
            writeln!(out, "abelian: {}", r.abelian).unwrap();
        }
        OracleReport::Radical(r) => {
            writeln!(out, "ring: {} ({} elements)", r.ring, r.size).unwrap();
            writeln!(
                out,
                "radical ({} elements): {:?}",
                r.members.len(),
                r.members
            )
            .unwrap();
            writeln!(out, "nilpotency index: {}", r.nilpotency_index).unwrap();
        }
        OracleReport::LocalDecomp(r) => {
            writeln!(out, "ring: {} ({} elements)", r.ring, r.size).unwrap();
            if !r.abelian {
                writeln!(
                    out,
                    "not abelian: non-central idempotent at index {}",
                    r.non_central_witness.unwrap()
                )
                .unwrap();
            } else {
                writeln!(out, "local factors: {}", r.factors.len()).unwrap();
                for (i, f) in r.factors.iter().enumerate() {
                    writeln!(
                        out,
                        "  factor {}: size {}, atom {}, residue char {}, semiprimitive {}, max ideal {:?}",
                        i, f.size, f.atom, f.residue_char, f.semiprimitive, f.max_ideal
                    )
                    .unwrap();
                }
            }
        }
    }
    out
}
