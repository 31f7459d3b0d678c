//! Coverage comparison rows: for one (q, t), censuses every RUNS array (one
//! per primitive polynomial of degree t over F_q) and the RTS array, over
//! all C((q+1)t, t) column subsets.
//!
//! Counts are exact integers; ratios are formatted to six decimal places
//! from the exact rationals. Both constructions are linear, so the census
//! uses the rank criterion on a row-space basis; its agreement with
//! brute-force tuple counting is enforced by the acceptance suite.

use alloc::string::String;
use alloc::vec::Vec;

use crate::construct;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::lfsr::LfsrSpec;
use crate::ooa::{self, format_ratio};
use crate::poly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub q: u64,
    pub t: u32,
    /// C((q+1)t, t), the census denominator.
    pub total_tsets: u64,
    /// Covered t-set counts for the RUNS arrays, one per primitive
    /// polynomial in enumeration order.
    pub runs_covered: Vec<u64>,
    /// Covered t-set count for the RTS array.
    pub rts_covered: u64,
}

impl TableRow {
    pub fn count_f(&self) -> usize {
        self.runs_covered.len()
    }

    pub fn runs_min(&self) -> u64 {
        *self
            .runs_covered
            .iter()
            .min()
            .expect("at least one polynomial")
    }

    pub fn runs_max(&self) -> u64 {
        *self
            .runs_covered
            .iter()
            .max()
            .expect("at least one polynomial")
    }

    pub fn runs_min_ratio(&self) -> f64 {
        self.runs_min() as f64 / self.total_tsets as f64
    }

    pub fn runs_max_ratio(&self) -> f64 {
        self.runs_max() as f64 / self.total_tsets as f64
    }

    /// Unweighted mean over the primitive polynomials.
    pub fn runs_avg_ratio(&self) -> f64 {
        let sum: u64 = self.runs_covered.iter().sum();
        sum as f64 / (self.count_f() as f64 * self.total_tsets as f64)
    }

    pub fn rts_ratio(&self) -> f64 {
        self.rts_covered as f64 / self.total_tsets as f64
    }

    /// `t=.. q=.. #f=.. min=.. max=.. avg=.. rts=..` with six-decimal ratios.
    pub fn line(&self) -> String {
        let total = self.total_tsets as u128;
        let sum: u128 = self.runs_covered.iter().map(|&c| c as u128).sum();
        alloc::format!(
            "t={} q={} #f={} min={} max={} avg={} rts={}",
            self.t,
            self.q,
            self.count_f(),
            format_ratio(self.runs_min() as u128, total),
            format_ratio(self.runs_max() as u128, total),
            format_ratio(sum, self.count_f() as u128 * total),
            format_ratio(self.rts_covered as u128, total),
        )
    }
}

/// Builds and censuses every RUNS array and the RTS array for (q, t).
/// Every array is OOA-verified as part of its build.
pub fn table1_stats(q: u64, t: u32) -> Result<TableRow> {
    if t < 3 {
        return Err(Error::BadDimension("comparison rows need t >= 3".into()));
    }
    let base = FieldSpec::with_cardinality(q)?;
    let polys = poly::enumerate_primitive(&base, t)?;
    let ncols = ((q + 1) * t as u64) as usize;
    let mut runs_covered = Vec::with_capacity(polys.len());
    let mut total = None;
    for f in &polys {
        let spec = LfsrSpec::with_impulse_seed(base.clone(), f.clone())?;
        let array = construct::build_runs_ooa(&spec)?;
        let basis = ooa::row_space_basis(&base, &array)?;
        let report = ooa::census_by_rank(&base, &basis, ncols);
        runs_covered.push(report.covered);
        total.get_or_insert(report.total);
    }
    let rts = construct::build_rts_ooa(&base, t)?;
    let basis = ooa::row_space_basis(&base, &rts)?;
    let rts_report = ooa::census_by_rank(&base, &basis, ncols);
    Ok(TableRow {
        q,
        t,
        total_tsets: total.unwrap_or(rts_report.total),
        runs_covered,
        rts_covered: rts_report.covered,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_q2_t3() {
        let row = table1_stats(2, 3).unwrap();
        assert_eq!(row.count_f(), 2);
        assert_eq!(row.total_tsets, 84);
        assert_eq!(row.runs_covered, vec![50, 50]);
        assert_eq!(row.rts_covered, 39);
        assert_eq!(
            row.line(),
            "t=3 q=2 #f=2 min=0.595238 max=0.595238 avg=0.595238 rts=0.464286"
        );
    }

    #[test]
    fn row_q3_t3() {
        let row = table1_stats(3, 3).unwrap();
        assert_eq!(row.count_f(), 4);
        assert_eq!(row.total_tsets, 220);
        assert_eq!(
            row.line(),
            "t=3 q=3 #f=4 min=0.709091 max=0.740909 avg=0.723864 rts=0.545455"
        );
    }

    #[test]
    fn rejects_small_t() {
        assert!(matches!(table1_stats(2, 2), Err(Error::BadDimension(_))));
    }
}
