//! The two OOA(t, q+1, t, q) constructions.
//!
//! RUNS: selects q+1 blocks of t columns from the subinterval array of a
//! primitive degree-t LFSR sequence. Block 1 takes columns t-1..0, block 2
//! takes t..2t-1, and each remaining block takes t + j k_beta (mod k) for
//! one nonzero beta, where k_beta is the run-shift offset. The mod-k
//! reduction can make a block reuse a column index already taken by blocks
//! 1 or 2; that is expected (such labels never share a left-justified set)
//! and is reported through [`ColumnMap::collisions`] rather than treated as
//! an error. Every build is gated on full OOA verification.
//!
//! RTS: the classical Reed-Solomon construction with the same parameters.
//! Rows are indexed by the polynomials g over F_q of degree < t; for each
//! field element a, block column j holds the order j-1 Taylor (Hasse)
//! coefficient of g at a, and the final block holds the coefficients of g
//! from the top down.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{Elem, FieldSpec};
use crate::lfsr::LfsrSpec;
use crate::ooa::{self, Label, OoaArray};
use crate::poly::Poly;

/// Assignment of OOA column labels (i, j) to column indices of the
/// subinterval array, in row-major label order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnMap {
    entries: Vec<(Label, usize)>,
    k: usize,
}

impl ColumnMap {
    pub fn entries(&self) -> &[(Label, usize)] {
        &self.entries
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn column(&self, label: Label) -> Option<usize> {
        self.entries
            .iter()
            .find(|&&(l, _)| l == label)
            .map(|&(_, c)| c)
    }

    /// Subinterval-array columns used by more than one label, ascending.
    /// Left-justified sets never mix two labels of a colliding pair, so the
    /// OOA property is unaffected; the verifier is the arbiter.
    pub fn collisions(&self) -> Vec<usize> {
        let mut seen = BTreeSet::new();
        let mut dups = BTreeSet::new();
        for &(_, c) in &self.entries {
            if !seen.insert(c) {
                dups.insert(c);
            }
        }
        dups.into_iter().collect()
    }
}

/// The RUNS column assignment. Blocks 3.. are assigned to the nonzero field
/// elements in ascending code order.
pub fn runs_column_map(spec: &LfsrSpec) -> Result<ColumnMap> {
    let t = spec.t() as u64;
    if t < 3 {
        return Err(Error::BadDimension(
            "the RUNS construction needs t >= 3".into(),
        ));
    }
    let k = spec.window();
    let q = spec.base().q();
    let mut entries = Vec::with_capacity(((q + 1) * t) as usize);
    for j in 1..=t {
        entries.push(((1u32, j as u32), (t - j) as usize));
    }
    for j in 1..=t {
        entries.push(((2u32, j as u32), (t + j - 1) as usize));
    }
    for i in 3..=q + 1 {
        let beta = Elem(i - 2);
        let kb = spec.shift_offset(beta)? % k;
        for j in 1..=t {
            let col = (t + j * kb) % k;
            entries.push(((i as u32, j as u32), col as usize));
        }
    }
    debug_assert!(entries.iter().all(|&(_, c)| c < k as usize));
    Ok(ColumnMap {
        entries,
        k: k as usize,
    })
}

/// Builds the RUNS array from the subinterval array of `spec` and verifies
/// the OOA property before returning it.
pub fn build_runs_ooa(spec: &LfsrSpec) -> Result<OoaArray> {
    let map = runs_column_map(spec)?;
    let m = spec.subinterval_array();
    let rows: Vec<Vec<u64>> = m
        .rows()
        .iter()
        .map(|row| map.entries().iter().map(|&(_, c)| row[c].0).collect())
        .collect();
    let q = spec.base().q();
    let array = OoaArray::new(spec.t(), q as u32 + 1, spec.t(), q, 1, rows)?;
    let report = ooa::verify_ooa(&array);
    if !report.passed() {
        return Err(Error::ConstructionInvalid(alloc::format!(
            "RUNS array fails on {} left-justified sets",
            report.failures.len()
        )));
    }
    Ok(array)
}

/// Builds the Reed-Solomon (RTS) array with the same parameters and verifies
/// the OOA property before returning it.
pub fn build_rts_ooa(base: &FieldSpec, t: u32) -> Result<OoaArray> {
    if t < 2 {
        return Err(Error::BadDimension(
            "the RTS construction needs t >= 2".into(),
        ));
    }
    let q = base.q();
    let vt = crate::field::checked_pow(q, t).ok_or(Error::FieldTooLarge(u64::MAX))?;
    let tt = t as usize;
    let mut rows = Vec::with_capacity(vt as usize);
    for code in 0..vt {
        let mut coeffs = Vec::with_capacity(tt);
        let mut v = code;
        for _ in 0..tt {
            coeffs.push(Elem(v % q));
            v /= q;
        }
        let g = Poly::from_elems(coeffs.clone());
        let mut row = Vec::with_capacity((q as usize + 1) * tt);
        for a in base.elements() {
            for c in g.shifted_coefficients(base, a, tt) {
                row.push(c.0);
            }
        }
        for j in 1..=tt {
            row.push(coeffs[tt - j].0);
        }
        rows.push(row);
    }
    let array = OoaArray::new(t, q as u32 + 1, t, q, 1, rows)?;
    let report = ooa::verify_ooa(&array);
    if !report.passed() {
        return Err(Error::ConstructionInvalid(alloc::format!(
            "RTS array fails on {} left-justified sets",
            report.failures.len()
        )));
    }
    Ok(array)
}

/// The set of seed vectors behind the RUNS array: for each used column
/// label j of the subinterval array, the seed T_j with entries
/// Tr(alpha^{v+j} alpha^i), where the spec's own seed is the trace image of
/// alpha^v. Running the LFSR from T_j regenerates exactly column j.
#[derive(Debug, Clone)]
pub struct SeedVectorSet {
    pub v_exponent: u64,
    /// OOA labels in row-major order, with the column index each maps to.
    pub columns: Vec<(Label, usize)>,
    /// Seed vectors over F_q, aligned with `columns`.
    pub vectors: Vec<Vec<Elem>>,
}

pub fn seed_vectors(spec: &LfsrSpec) -> Result<SeedVectorSet> {
    let map = runs_column_map(spec)?;
    let gamma = spec.seed_element();
    let v_exponent = spec.log_alpha(gamma)?;
    let ext = spec.ext();
    let sub = spec.subfield();
    let t = spec.t() as u64;
    let mut vectors = Vec::with_capacity(map.entries().len());
    for &(_, col) in map.entries() {
        let mut y = ext.mul(gamma, ext.pow(spec.alpha(), col as u64));
        let mut vec_j = Vec::with_capacity(t as usize);
        for _ in 0..t {
            vec_j.push(sub.trace(ext, y));
            y = ext.mul(y, spec.alpha());
        }
        vectors.push(vec_j);
    }
    Ok(SeedVectorSet {
        v_exponent,
        columns: map.entries().to_vec(),
        vectors,
    })
}
