//! Ordered orthogonal arrays: data model, left-justified set enumeration,
//! coverage verification and census, and the rank-based coverage criterion
//! for linear arrays.
//!
//! Columns of an N x ms array carry labels (i, j) with 1 <= i <= m,
//! 1 <= j <= s, in row-major order. A set of t columns is covered when every
//! t-tuple over the alphabet appears among its rows exactly lambda times; an
//! OOA requires this for every left-justified set (one closed under
//! decreasing j within a block).
//!
//! Text format:
//!
//! ```text
//! ooa t=<t> m=<m> s=<s> v=<v> lambda=<lambda> rows=<N>
//! (1,1) (1,2) ... (m,s)
//! <N rows of m*s space-separated symbol codes>
//! ```

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{self, Elem, FieldSpec};

/// Column label (block, depth), both 1-based.
pub type Label = (u32, u32);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OoaArray {
    t: u32,
    m: u32,
    s: u32,
    v: u64,
    lambda: u64,
    rows: Vec<Vec<u64>>,
}

impl OoaArray {
    pub fn new(t: u32, m: u32, s: u32, v: u64, lambda: u64, rows: Vec<Vec<u64>>) -> Result<Self> {
        if t == 0 || m == 0 || s == 0 || v < 2 || lambda == 0 {
            return Err(Error::BadArray(
                "parameters must be positive, v >= 2".into(),
            ));
        }
        if t as u64 > m as u64 * s as u64 {
            return Err(Error::BadArray("strength exceeds number of columns".into()));
        }
        let vt = field::checked_pow(v, t).ok_or_else(|| Error::BadArray("v^t overflow".into()))?;
        let n = lambda
            .checked_mul(vt)
            .ok_or_else(|| Error::BadArray("lambda v^t overflow".into()))?;
        if rows.len() as u64 != n {
            return Err(Error::BadArray(alloc::format!(
                "expected {n} rows, got {}",
                rows.len()
            )));
        }
        let ncols = (m * s) as usize;
        for row in &rows {
            if row.len() != ncols {
                return Err(Error::BadArray("row width mismatch".into()));
            }
            if row.iter().any(|&x| x >= v) {
                return Err(Error::BadArray("symbol out of range".into()));
            }
        }
        Ok(OoaArray {
            t,
            m,
            s,
            v,
            lambda,
            rows,
        })
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn v(&self) -> u64 {
        self.v
    }

    pub fn lambda(&self) -> u64 {
        self.lambda
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn n_cols(&self) -> usize {
        (self.m * self.s) as usize
    }

    /// Column labels in row-major order.
    pub fn labels(&self) -> Vec<Label> {
        let mut out = Vec::with_capacity(self.n_cols());
        for i in 1..=self.m {
            for j in 1..=self.s {
                out.push((i, j));
            }
        }
        out
    }

    pub fn column_index(&self, label: Label) -> Result<usize> {
        let (i, j) = label;
        if i == 0 || i > self.m || j == 0 || j > self.s {
            return Err(Error::UnknownLabel(render_label(label)));
        }
        Ok(((i - 1) * self.s + (j - 1)) as usize)
    }

    /// Replaces one symbol, revalidating the range. Mostly useful for
    /// perturbation tests.
    pub fn with_symbol(&self, row: usize, col: usize, value: u64) -> Result<Self> {
        if value >= self.v {
            return Err(Error::BadArray("symbol out of range".into()));
        }
        let mut rows = self.rows.clone();
        rows[row][col] = value;
        OoaArray::new(self.t, self.m, self.s, self.v, self.lambda, rows)
    }

    pub fn to_text(&self) -> String {
        let mut out = alloc::format!(
            "ooa t={} m={} s={} v={} lambda={} rows={}\n",
            self.t,
            self.m,
            self.s,
            self.v,
            self.lambda,
            self.rows.len()
        );
        let labels: Vec<String> = self.labels().iter().map(|&l| render_label(l)).collect();
        out.push_str(&labels.join(" "));
        out.push('\n');
        for row in &self.rows {
            let syms: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            out.push_str(&syms.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty input".into()))?;
        let mut parts = header.split_whitespace();
        if parts.next() != Some("ooa") {
            return Err(Error::Parse("expected header starting with 'ooa'".into()));
        }
        let mut t = None;
        let mut m = None;
        let mut s = None;
        let mut v = None;
        let mut lambda = None;
        let mut n = None;
        for tok in parts {
            let (key, value) = tok
                .split_once('=')
                .ok_or_else(|| Error::Parse(alloc::format!("bad header token {tok:?}")))?;
            let value: u64 = value
                .parse()
                .map_err(|_| Error::Parse(alloc::format!("bad value in {tok:?}")))?;
            match key {
                "t" => t = Some(value),
                "m" => m = Some(value),
                "s" => s = Some(value),
                "v" => v = Some(value),
                "lambda" => lambda = Some(value),
                "rows" => n = Some(value),
                _ => return Err(Error::Parse(alloc::format!("unknown header key {key:?}"))),
            }
        }
        let (Some(t), Some(m), Some(s), Some(v), Some(lambda), Some(n)) = (t, m, s, v, lambda, n)
        else {
            return Err(Error::Parse("missing header key".into()));
        };
        let label_line = lines
            .next()
            .ok_or_else(|| Error::Parse("missing labels".into()))?;
        let labels: Vec<&str> = label_line.split_whitespace().collect();
        let rows: Vec<Vec<u64>> = lines
            .map(|line| {
                line.split_whitespace()
                    .map(|tok| {
                        tok.parse::<u64>()
                            .map_err(|_| Error::Parse(alloc::format!("bad symbol {tok:?}")))
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        if rows.len() as u64 != n {
            return Err(Error::Parse(alloc::format!(
                "header declares {n} rows, found {}",
                rows.len()
            )));
        }
        let array = OoaArray::new(t as u32, m as u32, s as u32, v, lambda, rows)?;
        let expected: Vec<String> = array.labels().iter().map(|&l| render_label(l)).collect();
        if labels != expected.iter().map(String::as_str).collect::<Vec<_>>() {
            return Err(Error::Parse(
                "labels are not [m]x[s] in row-major order".into(),
            ));
        }
        Ok(array)
    }
}

pub fn render_label(label: Label) -> String {
    alloc::format!("({},{})", label.0, label.1)
}

pub fn parse_label(tok: &str) -> Result<Label> {
    let inner = tok
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(alloc::format!("bad label {tok:?}")))?;
    let (i, j) = inner
        .split_once(',')
        .ok_or_else(|| Error::Parse(alloc::format!("bad label {tok:?}")))?;
    let parse = |x: &str| {
        x.trim()
            .parse::<u32>()
            .map_err(|_| Error::Parse(alloc::format!("bad label {tok:?}")))
    };
    Ok((parse(i)?, parse(j)?))
}

/// Outcome of a verification pass or a coverage census.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverageReport {
    pub covered: u64,
    pub total: u64,
    /// Uncovered left-justified sets, rendered as space-joined label lists.
    /// Empty in census mode.
    pub failures: Vec<String>,
}

impl CoverageReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.covered == self.total
    }

    pub fn ratio(&self) -> f64 {
        self.covered as f64 / self.total as f64
    }

    /// `covered=<c> total=<T> ratio=<6dp>`
    pub fn summary_line(&self) -> String {
        alloc::format!(
            "covered={} total={} ratio={}",
            self.covered,
            self.total,
            format_ratio(self.covered as u128, self.total as u128)
        )
    }
}

/// `num/den` rounded half-up to six decimal places.
pub fn format_ratio(num: u128, den: u128) -> String {
    debug_assert!(den > 0);
    if den == 0 {
        return String::from("0.000000");
    }
    let scaled = num * 1_000_000;
    let mut q = scaled / den;
    if (scaled % den) * 2 >= den {
        q += 1;
    }
    alloc::format!("{}.{:06}", q / 1_000_000, q % 1_000_000)
}

/// All left-justified t-subsets of the m x s label grid, each sorted, enumerated by the
/// per-block prefix depths (d_1, ..., d_m), sum t, 0 <= d_i <= s.
pub fn left_justified_sets(m: u32, s: u32, t: u32) -> Vec<Vec<Label>> {
    let mut out = Vec::new();
    let mut depths = vec![0u32; m as usize];
    fn recurse(
        block: usize,
        remaining: u32,
        s: u32,
        depths: &mut Vec<u32>,
        out: &mut Vec<Vec<Label>>,
    ) {
        if block == depths.len() {
            if remaining == 0 {
                let mut set = Vec::new();
                for (i, &d) in depths.iter().enumerate() {
                    for j in 1..=d {
                        set.push((i as u32 + 1, j));
                    }
                }
                out.push(set);
            }
            return;
        }
        let max = s.min(remaining);
        for d in 0..=max {
            depths[block] = d;
            recurse(block + 1, remaining - d, s, depths, out);
        }
        depths[block] = 0;
    }
    recurse(0, t, s, &mut depths, &mut out);
    out
}

/// Visits every t-combination of {0, ..., n-1} in lexicographic order.
pub fn for_each_combination<F: FnMut(&[usize])>(n: usize, t: usize, mut visit: F) {
    if t > n {
        return;
    }
    let mut idx: Vec<usize> = (0..t).collect();
    loop {
        visit(&idx);
        // advance
        let mut i = t;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - t {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..t {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Brute-force coverage check of one projected column set: every tuple over
/// the alphabet must occur exactly `lambda` times among the rows.
pub(crate) fn covered_on_indices(
    rows: &[Vec<u64>],
    idxs: &[usize],
    v: u64,
    lambda: u64,
    counter: &mut Vec<u64>,
) -> bool {
    let tuples = v.pow(idxs.len() as u32) as usize;
    counter.clear();
    counter.resize(tuples, 0);
    for row in rows {
        let mut key = 0u64;
        for &c in idxs {
            key = key * v + row[c];
        }
        let slot = &mut counter[key as usize];
        *slot += 1;
        if *slot > lambda {
            return false;
        }
    }
    // Row count equals lambda * v^t, so if no tuple exceeded lambda they all
    // hit it exactly.
    true
}

/// Whether the named columns are lambda-covered, by brute-force counting.
pub fn is_covered(array: &OoaArray, cols: &[Label], lambda: u64) -> Result<bool> {
    if cols.len() != array.t() as usize {
        return Err(Error::BadDimension(alloc::format!(
            "expected {} columns, got {}",
            array.t(),
            cols.len()
        )));
    }
    if array.rows().len() as u64 != lambda * field::checked_pow(array.v(), array.t()).unwrap() {
        return Err(Error::BadDimension("rows != lambda v^t".into()));
    }
    let idxs = cols
        .iter()
        .map(|&l| array.column_index(l))
        .collect::<Result<Vec<_>>>()?;
    let mut counter = Vec::new();
    Ok(covered_on_indices(
        array.rows(),
        &idxs,
        array.v(),
        lambda,
        &mut counter,
    ))
}

/// Verification mode: checks every left-justified t-set at the declared
/// lambda. Failures are data, not errors.
pub fn verify_ooa(array: &OoaArray) -> CoverageReport {
    let sets = left_justified_sets(array.m(), array.s(), array.t());
    let mut counter = Vec::new();
    let mut covered = 0u64;
    let mut failures = Vec::new();
    for set in &sets {
        let idxs: Vec<usize> = set
            .iter()
            .map(|&l| array.column_index(l).expect("generated labels are valid"))
            .collect();
        if covered_on_indices(array.rows(), &idxs, array.v(), array.lambda(), &mut counter) {
            covered += 1;
        } else {
            let rendered: Vec<String> = set.iter().map(|&l| render_label(l)).collect();
            failures.push(rendered.join(" "));
        }
    }
    CoverageReport {
        covered,
        total: sets.len() as u64,
        failures,
    }
}

/// Census mode: ratio of covered t-sets over all C(ms, t) column subsets,
/// not only left-justified ones, by brute-force tuple counting. Requires
/// lambda = 1.
pub fn coverage_ratio(array: &OoaArray) -> Result<CoverageReport> {
    if array.lambda() != 1 {
        return Err(Error::BadArray("census mode requires lambda = 1".into()));
    }
    let ncols = array.n_cols();
    let t = array.t() as usize;
    let mut counter = Vec::new();
    let mut covered = 0u64;
    let mut total = 0u64;
    for_each_combination(ncols, t, |idxs| {
        total += 1;
        if covered_on_indices(array.rows(), idxs, array.v(), 1, &mut counter) {
            covered += 1;
        }
    });
    Ok(CoverageReport {
        covered,
        total,
        failures: Vec::new(),
    })
}

/// Census restricted to left-justified sets (lambda = 1); the ratio is 1
/// exactly when the array is an OOA.
pub fn left_justified_ratio(array: &OoaArray) -> Result<CoverageReport> {
    if array.lambda() != 1 {
        return Err(Error::BadArray("census mode requires lambda = 1".into()));
    }
    let mut report = verify_ooa(array);
    report.failures.clear();
    Ok(report)
}

/// Rank criterion: a set of generator column vectors is covered exactly when
/// it is linearly independent over F_q.
pub fn covered_iff_rank(field: &FieldSpec, vectors: &[Vec<Elem>]) -> bool {
    field::matrix_rank(field, vectors.to_vec()) == vectors.len()
}

/// Echelon basis of the row space of a linear array with lambda = 1 over
/// F_v. Errors if the rows do not form exactly the v^t points of a
/// t-dimensional subspace (rank t, all rows distinct).
pub fn row_space_basis(field: &FieldSpec, array: &OoaArray) -> Result<Vec<Vec<Elem>>> {
    if field.q() != array.v() {
        return Err(Error::FieldMismatch);
    }
    if array.lambda() != 1 {
        return Err(Error::BadArray(
            "linear coverage requires lambda = 1".into(),
        ));
    }
    let mut basis: Vec<Vec<Elem>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for row in array.rows() {
        let mut work: Vec<Elem> = row.iter().map(|&x| Elem(x)).collect();
        for (b, &p) in basis.iter().zip(&pivots) {
            if !work[p].is_zero() {
                let factor = work[p];
                for (w, &bc) in work.iter_mut().zip(b) {
                    *w = field.sub(*w, field.mul(factor, bc));
                }
            }
        }
        if let Some(p) = work.iter().position(|x| !x.is_zero()) {
            let inv = field.inv(work[p])?;
            for w in work.iter_mut() {
                *w = field.mul(*w, inv);
            }
            basis.push(work);
            pivots.push(p);
        }
    }
    if basis.len() != array.t() as usize {
        return Err(Error::BadArray(alloc::format!(
            "row space has rank {}, expected {}",
            basis.len(),
            array.t()
        )));
    }
    let distinct: BTreeSet<&Vec<u64>> = array.rows().iter().collect();
    if distinct.len() != array.rows().len() {
        return Err(Error::BadArray(
            "rows of a linear lambda=1 array must be distinct".into(),
        ));
    }
    Ok(basis)
}

/// Census over all C(ms, t) column subsets using the rank criterion on a row
/// space basis. Equivalent to [`coverage_ratio`] for linear arrays, and much
/// faster.
pub fn census_by_rank(field: &FieldSpec, basis: &[Vec<Elem>], ncols: usize) -> CoverageReport {
    let t = basis.len();
    let mut covered = 0u64;
    let mut total = 0u64;
    let mut scratch: Vec<Vec<Elem>> = vec![vec![Elem(0); t]; t];
    for_each_combination(ncols, t, |idxs| {
        total += 1;
        for (r, row) in scratch.iter_mut().enumerate() {
            for (c, &col) in idxs.iter().enumerate() {
                row[c] = basis[r][col];
            }
        }
        if rank_in_place(field, &mut scratch, t) == t {
            covered += 1;
        }
    });
    CoverageReport {
        covered,
        total,
        failures: Vec::new(),
    }
}

// The inner loop reads the pivot row while writing another row of the same
// matrix, so it stays index-based.
#[allow(clippy::needless_range_loop)]
fn rank_in_place(field: &FieldSpec, m: &mut [Vec<Elem>], size: usize) -> usize {
    let mut rank = 0;
    for col in 0..size {
        let Some(pivot) = (rank..size).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = field.inv(m[rank][col]).expect("pivot nonzero");
        for r in rank + 1..size {
            if !m[r][col].is_zero() {
                let factor = field.mul(m[r][col], inv);
                for c in col..size {
                    let s = field.mul(factor, m[rank][c]);
                    m[r][c] = field.sub(m[r][c], s);
                }
            }
        }
        rank += 1;
        if rank == size {
            break;
        }
    }
    rank
}

/// Column-count bounds for strength-t arrays over an alphabet of size q:
/// the classical orthogonal array bound on the number of columns, and the
/// bound on m for OOA(t, m, t, q) obtained from families of vectors with
/// every t of them independent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ColumnBounds {
    pub oa_bound: u64,
    pub ntset_m_bound: u64,
}

pub fn max_columns_bound(q: u64, t: u32) -> Result<ColumnBounds> {
    if t < 2 {
        return Err(Error::BadDimension("bounds need t >= 2".into()));
    }
    let t64 = t as u64;
    let oa_bound = if q <= t64 {
        t64 + 1
    } else if 3 <= t64 && t64 < q && q % 2 == 1 {
        q + t64 - 2
    } else {
        q + t64 - 1
    };
    let ntset_m_bound = q / (t64 / 2) + 1;
    Ok(ColumnBounds {
        oa_bound,
        ntset_m_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn fig1_array() -> OoaArray {
        let rows = vec![
            vec![0, 0, 1, 1, 1, 1],
            vec![1, 0, 1, 1, 0, 0],
            vec![1, 1, 1, 0, 1, 0],
            vec![1, 1, 0, 1, 0, 1],
            vec![0, 1, 1, 0, 0, 1],
            vec![1, 0, 0, 0, 1, 1],
            vec![0, 1, 0, 1, 1, 0],
            vec![0, 0, 0, 0, 0, 0],
        ];
        OoaArray::new(3, 3, 2, 2, 1, rows).unwrap()
    }

    #[test]
    fn left_justified_enumeration() {
        let sets = left_justified_sets(3, 2, 3);
        assert_eq!(sets.len(), 7);
        let expected: BTreeSet<Vec<Label>> = [
            vec![(1, 1), (1, 2), (2, 1)],
            vec![(1, 1), (1, 2), (3, 1)],
            vec![(1, 1), (2, 1), (2, 2)],
            vec![(1, 1), (2, 1), (3, 1)],
            vec![(1, 1), (3, 1), (3, 2)],
            vec![(2, 1), (2, 2), (3, 1)],
            vec![(2, 1), (3, 1), (3, 2)],
        ]
        .into_iter()
        .collect();
        let got: BTreeSet<Vec<Label>> = sets.into_iter().collect();
        assert_eq!(got, expected);

        assert_eq!(left_justified_sets(3, 3, 3).len(), 10);
        // s = 1 reduces to plain t-subsets of the blocks.
        let oa_sets = left_justified_sets(5, 1, 2);
        assert_eq!(oa_sets.len(), 10);
        assert!(oa_sets.iter().all(|s| s.iter().all(|&(_, j)| j == 1)));
    }

    #[test]
    fn fig1_is_an_ooa() {
        let array = fig1_array();
        assert!(is_covered(&array, &[(1, 1), (1, 2), (2, 1)], 1).unwrap());
        let report = verify_ooa(&array);
        assert!(report.passed());
        assert_eq!(report.covered, 7);
        assert_eq!(report.total, 7);
        assert_eq!(report.summary_line(), "covered=7 total=7 ratio=1.000000");
    }

    #[test]
    fn fig1_single_perturbations_all_fail() {
        let array = fig1_array();
        for r in 0..8 {
            for c in 0..6 {
                let flipped = 1 - array.rows()[r][c];
                let bad = array.with_symbol(r, c, flipped).unwrap();
                assert!(
                    !verify_ooa(&bad).passed(),
                    "perturbation at ({r},{c}) passed"
                );
            }
        }
    }

    #[test]
    fn duplicate_columns_are_uncovered() {
        let mut rows = Vec::new();
        for a in 0..2u64 {
            for b in 0..2u64 {
                for c in 0..2u64 {
                    rows.push(vec![a, a, b, c]);
                }
            }
        }
        let array = OoaArray::new(3, 2, 2, 2, 1, rows).unwrap();
        assert!(!is_covered(&array, &[(1, 1), (1, 2), (2, 1)], 1).unwrap());
        assert!(is_covered(&array, &[(1, 1), (2, 1), (2, 2)], 1).unwrap());
    }

    #[test]
    fn full_oa_census_ratio_is_one() {
        let rows = vec![vec![0, 0, 0], vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]];
        let array = OoaArray::new(2, 3, 1, 2, 1, rows).unwrap();
        let report = coverage_ratio(&array).unwrap();
        assert_eq!(report.covered, report.total);
        assert_eq!(report.total, 3);
        assert_eq!(
            format_ratio(report.covered as u128, report.total as u128),
            "1.000000"
        );
    }

    #[test]
    fn text_format_round_trip() {
        let array = fig1_array();
        let text = array.to_text();
        assert!(text.starts_with(
            "ooa t=3 m=3 s=2 v=2 lambda=1 rows=8\n(1,1) (1,2) (2,1) (2,2) (3,1) (3,2)\n"
        ));
        let parsed = OoaArray::from_text(&text).unwrap();
        assert_eq!(parsed, array);
        assert!(OoaArray::from_text("nonsense").is_err());
        assert!(OoaArray::from_text("ooa t=3 m=3 s=2 v=2 lambda=1 rows=2\n(1,1)\n0 0\n").is_err());
    }

    #[test]
    fn census_by_rank_agrees_with_brute_force() {
        // Subinterval array of the degree-3 binary sequence, censused both
        // ways over all C(7,3) subsets.
        let base = FieldSpec::build(2, 1).unwrap();
        let f = crate::poly::Poly::from_codes(&base, &[1, 1, 0, 1]).unwrap();
        let spec = crate::lfsr::LfsrSpec::with_impulse_seed(base.clone(), f).unwrap();
        let m = spec.subinterval_array();
        let array = OoaArray::new(3, 7, 1, 2, 1, m.rows_codes()).unwrap();
        let brute = coverage_ratio(&array).unwrap();
        let basis = row_space_basis(&base, &array).unwrap();
        let fast = census_by_rank(&base, &basis, array.n_cols());
        assert_eq!(brute.covered, fast.covered);
        assert_eq!(brute.total, fast.total);
        assert_eq!(brute.total, 35);

        // Three-way spot check against the generator-vector rank criterion
        // and the no-nonzero-zero-row characterization.
        for_each_combination(7, 3, |idxs| {
            let cols: Vec<Label> = idxs.iter().map(|&c| (c as u32 + 1, 1)).collect();
            let brute = is_covered(&array, &cols, 1).unwrap();
            let vectors: Vec<Vec<Elem>> = idxs
                .iter()
                .map(|&c| spec.alpha_power_coords(c as u64))
                .collect();
            assert_eq!(brute, covered_iff_rank(&base, &vectors));
            let no_zero_row = array.rows().iter().all(|row| {
                row.iter().any(|&x| x != 0) == idxs.iter().any(|&c| row[c] != 0)
                    || row.iter().all(|&x| x == 0)
            });
            assert_eq!(brute, no_zero_row);
        });
    }

    #[test]
    fn repeated_vectors_are_never_covered() {
        let f3 = FieldSpec::build(3, 1).unwrap();
        let v = vec![Elem(1), Elem(0), Elem(0)];
        let w = vec![Elem(0), Elem(1), Elem(1)];
        assert!(!covered_iff_rank(&f3, &[v.clone(), v.clone(), w.clone()]));
        let u = vec![Elem(1), Elem(0), Elem(1)];
        assert!(covered_iff_rank(&f3, &[v, w, u]));
    }

    #[test]
    fn row_space_basis_rejects_nonlinear() {
        // Shift every row of the Fig. 1 array by a constant: still 8 rows
        // but no longer a subspace (zero row missing, rank > t).
        let array = fig1_array();
        let rows: Vec<Vec<u64>> = array
            .rows()
            .iter()
            .map(|r| {
                let mut r = r.clone();
                r[0] ^= 1;
                r
            })
            .collect();
        let shifted = OoaArray::new(3, 3, 2, 2, 1, rows).unwrap();
        let f2 = FieldSpec::build(2, 1).unwrap();
        assert!(row_space_basis(&f2, &shifted).is_err());
    }

    #[test]
    fn bounds_examples() {
        assert_eq!(
            max_columns_bound(2, 3).unwrap(),
            ColumnBounds {
                oa_bound: 4,
                ntset_m_bound: 3
            }
        );
        assert_eq!(max_columns_bound(5, 3).unwrap().oa_bound, 6);
        let b = max_columns_bound(5, 4).unwrap();
        assert_eq!(b.ntset_m_bound, 3);
        assert!(b.ntset_m_bound < 5 + 1);
        assert_eq!(max_columns_bound(4, 2).unwrap().oa_bound, 4 + 2 - 1);
        assert!(max_columns_bound(3, 1).is_err());
    }

    #[test]
    fn ratio_formatting() {
        assert_eq!(format_ratio(50, 84), "0.595238");
        assert_eq!(format_ratio(39, 84), "0.464286");
        assert_eq!(format_ratio(1, 1), "1.000000");
        assert_eq!(format_ratio(0, 7), "0.000000");
        assert_eq!(format_ratio(1, 2), "0.500000");
    }

    #[test]
    fn combination_iterator_counts() {
        let mut count = 0;
        for_each_combination(9, 3, |_| count += 1);
        assert_eq!(count, 84);
        let mut seen = Vec::new();
        for_each_combination(4, 2, |c| seen.push(c.to_vec()));
        assert_eq!(
            seen,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }
}
