//! Structured output documents for the `kunz` binary.
//!
//! Every `--json` invocation prints exactly one [`OutputDocument`] wrapping a
//! command-specific payload. Field names are part of the interface: they stay
//! stable across releases, arrays are emitted in sorted (or otherwise
//! documented deterministic) order, and each document deserializes back into
//! the value that produced it.

use serde::{Deserialize, Serialize};

/// Version stamp for the JSON layout. Bump only on breaking field changes.
pub const SCHEMA_VERSION: &str = "1";

/// Envelope around every JSON payload: a schema version, an echo of the
/// invoked command line, and the command-specific result.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputDocument<T> {
    pub schema_version: String,
    pub command: String,
    pub result: T,
}

/// Wrap `result` in an envelope echoing `command`.
pub fn document<T>(command: String, result: T) -> OutputDocument<T> {
    OutputDocument {
        schema_version: SCHEMA_VERSION.to_string(),
        command,
        result,
    }
}

/// Irreducibility flags for one semigroup. The `m_*` fields classify within
/// the fixed-multiplicity lattice; the bare fields classify among all
/// numerical semigroups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationDoc {
    pub irreducible: bool,
    pub symmetric: bool,
    pub pseudosymmetric: bool,
    pub m_irreducible: bool,
    pub m_symmetric: bool,
    pub m_pseudosymmetric: bool,
}

/// Full descriptor of one numerical semigroup, as printed by `analyze`.
///
/// `kunz` lists the coordinates without the leading multiplicity; `gaps` is
/// ascending; `special_gaps` lists only the special gaps exceeding the
/// multiplicity (the candidates for fixed-multiplicity decomposition).
/// `classification` is `null` for multiplicity 1, where the notions are not
/// defined.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupDoc {
    pub multiplicity: i64,
    pub kunz: Vec<i64>,
    pub generators: Vec<i64>,
    pub frobenius: i64,
    pub genus: i64,
    pub gaps: Vec<i64>,
    pub special_gaps: Vec<i64>,
    pub classification: Option<ClassificationDoc>,
}

/// Result of `decompose` (default, `--all`, or `--count` mode).
///
/// Each factor is its sorted minimal generating set; each decomposition lists
/// factors in ascending order of the special gap they close. `decompositions`
/// holds one entry in default mode and every minimal decomposition under
/// `--all`; under `--count` it is empty and `count` carries the total.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecomposeDoc {
    pub multiplicity: i64,
    pub kunz: Vec<i64>,
    pub decompositions: Vec<Vec<Vec<i64>>>,
    pub count: Option<usize>,
}

/// Result of `decompose --frobenius-parity`: can the input be written as an
/// intersection of same-multiplicity irreducibles whose Frobenius numbers all
/// have the requested parity?
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityDoc {
    pub multiplicity: i64,
    pub kunz: Vec<i64>,
    pub parity: String,
    pub decomposable: bool,
    /// A witness decomposition when one exists (factors as generator sets).
    pub witness: Option<Vec<Vec<i64>>>,
    /// A special gap no parity-respecting factor can close, when blocked.
    pub blocking_gap: Option<i64>,
}

/// Result of `family`: the arithmetic-progression semigroup
/// ⟨m, mh+d, mh+2d, …, mh+kd⟩ together with its closed-form classification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyDoc {
    pub m: i64,
    pub h: i64,
    pub d: i64,
    pub k: i64,
    pub generators: Vec<i64>,
    pub kunz: Vec<i64>,
    pub frobenius: i64,
    pub genus: i64,
    pub irreducible: bool,
    pub symmetric: bool,
    pub pseudosymmetric: bool,
}

/// Result of `enumerate`: every Kunz-coordinate vector of the requested
/// multiplicity with coordinates in `1..=max_coord` passing `filter`, in
/// ascending lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerateDoc {
    pub multiplicity: i64,
    pub max_coord: i64,
    pub filter: String,
    pub count: usize,
    pub vectors: Vec<Vec<i64>>,
    /// True when every emitted vector was revalidated against the
    /// brute-force oracle.
    pub verified: bool,
}

/// Per-check tally inside a [`VerifyDoc`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckDoc {
    pub name: String,
    pub passed: u64,
    pub failed: u64,
}

/// Result of `verify`: the cross-validation report for one corpus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyDoc {
    pub multiplicity: i64,
    pub max_coord: i64,
    pub checked: u64,
    pub clean: bool,
    pub checks: Vec<CheckDoc>,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}
