//! The F4 table of orthogonal subsets `D`, subsets `M` and bounds `F`, the
//! three G2 pairs, and their re-evaluation by the rank engine.

use serde::Serialize;

use crate::chevalley::ChevalleyTable;
use crate::enumerate::verify_m_conditions;
use crate::error::Result;
use crate::expr::{display_root, expand_pm, parse_root};
use crate::form::{
    canonical_form, check_isotropic, check_maximal_isotropic, form_rank, OrthoSubset, PrimeField,
};
use crate::rootsys::{Family, Root, RootSystem};
use crate::weyl;

/// A row as printed: `D`, `M` (with `±` shorthand), `|M|` and `F`.
#[derive(Debug, Clone, Copy)]
pub struct TableEntry {
    pub row: usize,
    pub d: &'static [&'static str],
    pub m: &'static [&'static str],
    pub m_size: usize,
    pub f: usize,
}

macro_rules! rows {
    ($( $n:literal : [$($d:literal),*] ; [$($m:literal),*] ; $ms:literal ; $f:literal ),* $(,)?) => {
        &[$( TableEntry { row: $n, d: &[$($d),*], m: &[$($m),*], m_size: $ms, f: $f } ),*]
    };
}

pub const F4_TABLE: &[TableEntry] = rows![
    1: ["e1+e3", "(e1-e2-e3+e4)/2"]; ["e1", "e4", "e1-e2", "e1±e4", "(e1+e2+e3±e4)/2"]; 7; 14,
    2: ["e1-e4", "(e1-e2-e3+e4)/2"]; ["e1-e2", "e1-e3", "(e1±e2-e3-e4)/2"]; 4; 8,
    3: ["e2+e4", "(e1-e2-e3+e4)/2"]; ["e4", "e2-e3"]; 2; 4,
    4: ["e1-e3", "(e1-e2+e3-e4)/2"]; ["e1-e2", "(e1-e2-e3±e4)/2"]; 3; 6,
    5: ["e1+e4", "(e1-e2+e3-e4)/2"]; ["e1", "e3", "e1-e2", "e1-e3", "(e1-e2±e3+e4)/2"]; 6; 12,
    6: ["e2+e3", "(e1-e2+e3-e4)/2"]; ["e3", "e3±e4"]; 3; 6,
    7: ["e2-e4", "(e1-e2+e3-e4)/2"]; ["e3-e4", "(e1-e2-e3-e4)/2"]; 2; 4,
    8: ["e1-e3", "(e1-e2+e3+e4)/2"]; ["e4", "e1-e2", "(e1-e2-e3±e4)/2"]; 4; 8,
    9: ["e1-e4", "(e1-e2+e3+e4)/2"]; ["e3", "e1-e2", "e1-e3", "(e1-e2±e3-e4)/2"]; 5; 10,
    10: ["e2+e3", "(e1-e2+e3+e4)/2"]; ["e3", "e3±e4", "(e1-e2+e3-e4)/2"]; 4; 8,
    11: ["e2+e4", "(e1-e2+e3+e4)/2"]; ["e4", "e3+e4", "(e1-e2-e3+e4)/2"]; 3; 6,
    12: ["e1+e3", "(e1+e2-e3-e4)/2"]; ["e1", "e2+e3", "e1±e4", "(e1-e2±e3±e4)/2"]; 8; 16,
    13: ["e1+e4", "(e1+e2-e3-e4)/2"]; ["e1", "e1-e2", "e1-e3", "(e1-e2±e3±e4)/2"]; 7; 14,
    14: ["e2+e3", "(e1+e2-e3-e4)/2"]; ["e2", "e2-e3", "e2±e4"]; 4; 8,
    15: ["e2+e4", "(e1+e2-e3-e4)/2"]; ["e2", "e2-e3", "e2-e4"]; 3; 6,
    16: ["e1+e3", "(e1+e2-e3+e4)/2"]; ["e1", "e4", "e1-e2", "e1±e4", "(e1-e2±e3±e4)/2"]; 9; 18,
    17: ["e1-e4", "(e1+e2-e3+e4)/2"]; ["e2", "e1-e2", "e1-e3", "e2-e3", "(e1±e2-e3-e4)/2"]; 6; 12,
    18: ["e2+e3", "(e1+e2-e3+e4)/2"]; ["e2", "e2±e4", "e4", "e2-e3"]; 5; 10,
    19: ["e2-e4", "(e1+e2-e3+e4)/2"]; ["e2", "e4", "e2-e3", "e2+e4"]; 4; 8,
    20: ["e1-e3", "(e1+e2+e3-e4)/2"]; ["e2", "e2-e3", "e2-e4", "e3-e4", "(e1±e2-e3-e4)/2"]; 6; 14,
    21: ["e1+e4", "(e1+e2+e3-e4)/2"]; ["e1", "e2", "e1-e3", "e2±e4", "(e1±e2-e3±e4)/2"]; 9; 20,
    22: ["e2+e4", "(e1+e2+e3-e4)/2"]; ["e2", "e3", "e2±e3", "e2-e4", "e3-e4"]; 6; 12,
    23: ["e1-e3", "(e1+e2+e3+e4)/2"]; ["e2", "e4", "e2±e3", "e2+e4", "(e1+e2-e3±e4)/2"]; 7; 16,
    24: ["e1-e4", "(e1+e2+e3+e4)/2"]; ["e2", "e3", "e2+e3", "e3-e4", "e2±e4", "(e1+e2±e3-e4)/2"]; 8; 18,
    25: ["e2-e4", "(e1+e2+e3+e4)/2"]; ["e2", "e2+e3", "e2+e4", "e3+e4", "e3", "e4", "e2-e3"]; 7; 14,
    26: ["e1-e3", "e2-e4", "(e1+e2+e3+e4)/2"]; ["e2", "e4", "e2+e4", "e2±e3", "(e1+e2-e3±e4)/2"]; 7; 16,
    27: ["e1-e3", "e2+e4", "(e1+e2+e3-e4)/2"]; ["e2", "e2-e3", "e2-e4", "e3-e4", "(e1±e2-e3-e4)/2"]; 6; 14,
    28: ["e1+e3", "e2+e4", "(e1-e2-e3+e4)/2"]; ["e1", "e4", "e1-e2", "e3±e4", "(e1-e2+e3±e4)/2"]; 7; 14,
    // Listed with (e1-e2+e3-e4)/2, which is not orthogonal to e2+e4. Flipping
    // the sign of e4 gives the listed |M| and F (and coincides with row 31).
    29: ["e1-e3", "e2+e4", "(e1-e2+e3+e4)/2"]; ["e2", "e2-e3", "(e1-e2-e3±e4)/2"]; 4; 10,
    30: ["e1+e4", "e2+e3", "(e1-e2+e3-e4)/2"]; ["e3", "e4", "e2+e4", "e3+e4", "(e1-e2±e3+e4)/2"]; 6; 14,
    31: ["e1-e3", "e2+e4", "(e1-e2+e3+e4)/2"]; ["e4", "e2-e3", "(e1-e2-e3±e4)/2"]; 4; 10,
    32: ["e1-e4", "e2+e3", "(e1-e2+e3+e4)/2"]; ["e3", "e2-e4", "e3-e4", "(e1-e2±e3-e4)/2"]; 5; 12,
    33: ["e1+e3", "e2+e4", "(e1+e2-e3-e4)/2"]; ["e1", "e2", "e2-e4", "e3±e4", "e2+e3", "(e1-e2+e3±e4)/2"]; 8; 18,
    34: ["e1+e4", "e2+e3", "(e1+e2-e3-e4)/2"]; ["e1", "e2", "e2-e3", "e3+e4", "e2+e4", "(e1-e2±e3+e4)/2"]; 7; 16,
    35: ["e1+e3", "e2-e4", "(e1+e2-e3+e4)/2"]; ["e1", "e4", "e1-e2", "e3±e4", "(e1-e2±e3±e4)/2"]; 9; 20,
    36: ["e1-e4", "e2+e3", "(e1+e2-e3+e4)/2"]; ["e2", "e2-e3", "e2-e4", "e3-e4", "(e1±e2-e3-e4)/2"]; 6; 14,
];

/// The three orthogonal pairs of G2, in fundamental coordinates.
pub const G2_TABLE: &[TableEntry] = rows![
    1: ["a1", "3a1+2a2"]; ["a2", "a1+a2"]; 2; 4,
    2: ["a1+a2", "3a1+a2"]; ["a1"]; 1; 4,
    3: ["a2", "2a1+a2"]; ["a1"]; 1; 4,
];

/// A table row re-evaluated: the listed data next to the computed values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub row: usize,
    pub d: Vec<String>,
    pub m: Vec<String>,
    pub m_size: usize,
    pub f: usize,
    pub dim_computed: usize,
    pub bound_computed: usize,
    /// `None` outside F4, where the `M` conditions are not defined.
    pub m_conditions: Option<bool>,
    /// The span of the roots outside `M` is a maximal isotropic subspace.
    pub p_maximal_isotropic: bool,
}

impl TableRow {
    /// The computed dimension is `2|M|` and the computed bound is `F`.
    pub fn consistent(&self) -> bool {
        self.dim_computed == 2 * self.m_size && self.bound_computed == self.f
    }
}

impl TableEntry {
    pub fn d_roots(&self, rs: &RootSystem) -> Result<Vec<Root>> {
        self.d.iter().map(|t| parse_root(rs, t)).collect()
    }

    /// `M` with every `±` expanded.
    pub fn m_roots(&self, rs: &RootSystem) -> Result<Vec<Root>> {
        self.m
            .iter()
            .flat_map(|t| expand_pm(t))
            .map(|t| parse_root(rs, &t))
            .collect()
    }

    pub fn evaluate(&self, tbl: &ChevalleyTable, field: PrimeField) -> Result<TableRow> {
        let rs = tbl.root_system();
        let d = self.d_roots(rs)?;
        let m = self.m_roots(rs)?;
        let sub = OrthoSubset::with_unit_xi(rs, d.clone(), field)?;
        let f = canonical_form(rs, &sub);
        let p: Vec<Root> = rs.positives().filter(|r| !m.contains(r)).collect();
        let p_maximal_isotropic =
            check_isotropic(tbl, &f, &p)? && check_maximal_isotropic(tbl, &f, &p)?;
        let m_conditions = match rs.id().family {
            Family::F => Some(verify_m_conditions(rs, &d, &m)?),
            _ => None,
        };
        Ok(TableRow {
            row: self.row,
            d: d.iter().map(|&r| display_root(rs, r)).collect(),
            m: m.iter().map(|&r| display_root(rs, r)).collect(),
            m_size: self.m_size,
            f: self.f,
            dim_computed: form_rank(tbl, &sub)?,
            bound_computed: weyl::involution_stats(rs, &d)?.bound,
            m_conditions,
            p_maximal_isotropic,
        })
    }
}

pub fn evaluate_table(
    entries: &[TableEntry],
    tbl: &ChevalleyTable,
    field: PrimeField,
) -> Result<Vec<TableRow>> {
    entries.iter().map(|e| e.evaluate(tbl, field)).collect()
}
