//! Maximum-period LFSR sequences over F_q and their run structure.
//!
//! A sequence is generated by a monic primitive characteristic polynomial
//! f = c_0 + c_1 x + ... + c_{t-1} x^{t-1} + x^t and a nonzero seed
//! (b_0, ..., b_{t-1}), via a_i = -sum_j c_j a_{i-t+j}. One full period of
//! q^t - 1 symbols is materialized and all indexing is cyclic.
//!
//! The analysis layer centers on the shift offsets k with
//! alpha^k (alpha - beta) = 1 for a root alpha of f: counting back k
//! positions realizes the map a_{i+1} - beta a_i on the sequence, which
//! turns runs into runs. The growth polynomial of a run of zeroes encodes,
//! through its root multiplicities, how far the run keeps growing under
//! repeated forward shifts; `run_matching` materializes the resulting
//! bijection between zero runs and longer nonzero runs.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{Elem, FieldSpec, SubfieldMap};
use crate::poly::{self, Poly};

/// A primitive LFSR specification together with the extension field F_{q^t}
/// and a distinguished root `alpha` of the characteristic polynomial in it.
#[derive(Debug, Clone)]
pub struct LfsrSpec {
    base: FieldSpec,
    ext: FieldSpec,
    sub: SubfieldMap,
    t: u32,
    charpoly: Poly,
    seed: Vec<Elem>,
    alpha: Elem,
    /// Inverse of dlog(alpha) modulo q^t - 1; used to take logs base alpha.
    alpha_log_inv: u64,
}

impl LfsrSpec {
    pub fn new(base: FieldSpec, charpoly: Poly, seed_codes: &[u64]) -> Result<Self> {
        let t = match charpoly.degree() {
            Some(t) if t >= 2 => t as u32,
            _ => {
                return Err(Error::BadDimension(
                    "characteristic polynomial must have degree >= 2".into(),
                ))
            }
        };
        if !charpoly.is_monic() {
            return Err(Error::NotMonic);
        }
        if !poly::is_primitive(&base, &charpoly)? {
            return Err(Error::NotPrimitive);
        }
        if seed_codes.len() != t as usize {
            return Err(Error::BadSeedLength {
                expected: t as usize,
                got: seed_codes.len(),
            });
        }
        let seed = seed_codes
            .iter()
            .map(|&c| base.elem(c))
            .collect::<Result<Vec<_>>>()?;
        if seed.iter().all(|s| s.is_zero()) {
            return Err(Error::ZeroSeed);
        }

        let ext = FieldSpec::build(base.p(), base.n() * t)?;
        let sub = SubfieldMap::new(&base, &ext)?;
        // Root of f in the extension, smallest element code among the
        // conjugates. When f coincides with the canonical modulus this is
        // the residue class of x itself.
        let embedded: Vec<Elem> = charpoly.coeffs().iter().map(|&c| sub.embed(c)).collect();
        let alpha = ext
            .elements()
            .find(|&x| {
                let mut acc = Elem(0);
                for &c in embedded.iter().rev() {
                    acc = ext.add(ext.mul(acc, x), c);
                }
                acc.is_zero()
            })
            .ok_or(Error::NotPrimitive)?;
        let n = ext.q() - 1;
        let alpha_log = ext.dlog(alpha).expect("alpha is nonzero");
        let alpha_log_inv =
            mod_inverse(alpha_log, n).expect("alpha is primitive, so its log is a unit");
        Ok(LfsrSpec {
            base,
            ext,
            sub,
            t,
            charpoly,
            seed,
            alpha,
            alpha_log_inv,
        })
    }

    /// Spec with the impulse seed (0, ..., 0, 1).
    pub fn with_impulse_seed(base: FieldSpec, charpoly: Poly) -> Result<Self> {
        let t = charpoly.degree().unwrap_or(0);
        let mut seed = vec![0u64; t];
        if let Some(last) = seed.last_mut() {
            *last = 1;
        }
        Self::new(base, charpoly, &seed)
    }

    pub fn base(&self) -> &FieldSpec {
        &self.base
    }

    pub fn ext(&self) -> &FieldSpec {
        &self.ext
    }

    pub fn subfield(&self) -> &SubfieldMap {
        &self.sub
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn charpoly(&self) -> &Poly {
        &self.charpoly
    }

    pub fn seed(&self) -> &[Elem] {
        &self.seed
    }

    pub fn alpha(&self) -> Elem {
        self.alpha
    }

    /// q^t - 1, the least period.
    pub fn period_len(&self) -> u64 {
        self.ext.q() - 1
    }

    /// k = (q^t - 1) / (q - 1), the subinterval window length.
    pub fn window(&self) -> u64 {
        self.period_len() / (self.base.q() - 1)
    }

    /// c_j of the characteristic polynomial; c_t = 1.
    pub fn coefficient(&self, j: u32) -> Elem {
        self.charpoly.coeff(j as usize)
    }

    /// One full period from the recurrence.
    pub fn period_sequence(&self) -> Sequence {
        let n = self.period_len() as usize;
        let t = self.t as usize;
        let neg: Vec<Elem> = (0..t)
            .map(|j| self.base.neg(self.charpoly.coeff(j)))
            .collect();
        let mut symbols = Vec::with_capacity(n);
        symbols.extend_from_slice(&self.seed);
        for i in t..n {
            let mut acc = Elem(0);
            for (j, &c) in neg.iter().enumerate() {
                acc = self.base.add(acc, self.base.mul(c, symbols[i - t + j]));
            }
            symbols.push(acc);
        }
        symbols.truncate(n);
        Sequence {
            symbols,
            q: self.base.q(),
        }
    }

    /// The unique gamma with b_i = Tr(gamma alpha^i) for every seed symbol,
    /// by exhaustive search over the extension field.
    pub fn seed_element(&self) -> Elem {
        let mut alpha_pows = Vec::with_capacity(self.t as usize);
        let mut acc = self.ext.one();
        for _ in 0..self.t {
            alpha_pows.push(acc);
            acc = self.ext.mul(acc, self.alpha);
        }
        'outer: for gamma in self.ext.nonzero_elements() {
            for (i, &pw) in alpha_pows.iter().enumerate() {
                let tr = self.sub.trace(&self.ext, self.ext.mul(gamma, pw));
                if tr != self.seed[i] {
                    continue 'outer;
                }
            }
            return gamma;
        }
        unreachable!("every nonzero seed has a trace representation")
    }

    /// One full period from the trace form a_i = Tr(gamma alpha^i). Equal to
    /// [`LfsrSpec::period_sequence`] symbol for symbol.
    pub fn period_by_trace(&self) -> Sequence {
        let n = self.period_len() as usize;
        let gamma = self.seed_element();
        let mut symbols = Vec::with_capacity(n);
        let mut y = gamma;
        for _ in 0..n {
            symbols.push(self.sub.trace(&self.ext, y));
            y = self.ext.mul(y, self.alpha);
        }
        Sequence {
            symbols,
            q: self.base.q(),
        }
    }

    /// Discrete logarithm base alpha.
    pub fn log_alpha(&self, y: Elem) -> Result<u64> {
        let n = self.period_len();
        let l = self.ext.dlog(y)?;
        Ok((l as u128 * self.alpha_log_inv as u128 % n as u128) as u64)
    }

    /// The unique offset k in Z_{q^t-1} with alpha^k (alpha - beta) = 1,
    /// for nonzero beta in the base field. Counting back k positions
    /// realizes a_{i+1} - beta a_i on the sequence.
    pub fn shift_offset(&self, beta: Elem) -> Result<u64> {
        if beta.is_zero() {
            return Err(Error::ZeroArgument);
        }
        let b = self.sub.embed(self.base.elem(beta.0)?);
        let d = self.ext.sub(self.alpha, b);
        let n = self.period_len();
        Ok((n - self.log_alpha(d)?) % n)
    }

    /// The same offset reduced modulo the window length k; valid for run
    /// arithmetic inside a single window because zero positions repeat with
    /// period k.
    pub fn shift_offset_mod_window(&self, beta: Elem) -> Result<u64> {
        Ok(self.shift_offset(beta)? % self.window())
    }

    /// Coordinates of alpha^idx over F_q in the basis 1, alpha, ...,
    /// alpha^{t-1}: the coefficients of x^idx mod f. These are the column
    /// generator vectors used by the rank coverage criterion.
    pub fn alpha_power_coords(&self, idx: u64) -> Vec<Elem> {
        let r = poly::powmod(&self.base, idx, &self.charpoly);
        (0..self.t as usize).map(|i| r.coeff(i)).collect()
    }

    /// The q^t x k subinterval array: row i is the window of length k
    /// starting at position i, plus a final all-zero row.
    pub fn subinterval_array(&self) -> SubintervalArray {
        let seq = self.period_sequence();
        let k = self.window() as usize;
        let n = self.period_len();
        let mut rows = Vec::with_capacity(n as usize + 1);
        for i in 0..n {
            rows.push((0..k as u64).map(|j| seq.at(i + j)).collect());
        }
        rows.push(vec![Elem(0); k]);
        SubintervalArray {
            rows,
            k,
            q: self.base.q(),
        }
    }
}

/// One full period of an LFSR sequence; indexing is cyclic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sequence {
    symbols: Vec<Elem>,
    q: u64,
}

impl Sequence {
    pub fn from_symbols(symbols: Vec<Elem>, q: u64) -> Self {
        Sequence { symbols, q }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[Elem] {
        &self.symbols
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Symbol at cyclic index i.
    pub fn at(&self, i: u64) -> Elem {
        self.symbols[(i % self.symbols.len() as u64) as usize]
    }

    /// Symbol at cyclic index `i - back`.
    pub fn at_back(&self, i: u64, back: u64) -> Elem {
        let n = self.symbols.len() as u64;
        self.at(i % n + n - back % n)
    }

    /// Whether positions n..n+l hold a (maximal) run of zeroes of length l.
    /// Length 0 means only that the symbol at n is nonzero.
    pub fn is_zero_run(&self, n: u64, l: usize) -> bool {
        if l == 0 {
            return !self.at(n).is_zero();
        }
        if self.at_back(n, 1).is_zero() || self.at(n + l as u64).is_zero() {
            return false;
        }
        (0..l as u64).all(|j| self.at(n + j).is_zero())
    }

    /// Digit string for q <= 9, space-separated codes otherwise.
    pub fn text(&self) -> String {
        let mut s = String::new();
        for (i, sym) in self.symbols.iter().enumerate() {
            if self.q > 9 && i > 0 {
                s.push(' ');
            }
            s.push_str(&alloc::format!("{}", sym.0));
        }
        s
    }
}

/// A maximal constant subinterval: symbols[start .. start+length) all equal
/// `symbol`, flanked on both sides (cyclically) by a different symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Run {
    pub start: u64,
    pub symbol: Elem,
    pub length: usize,
}

/// The complete multiset of maximal runs of the cyclic sequence, each once,
/// ordered by canonical start index.
pub fn find_runs(seq: &Sequence) -> Vec<Run> {
    let n = seq.len() as u64;
    let anchor = match (0..n).find(|&i| seq.at_back(i, 1) != seq.at(i)) {
        Some(a) => a,
        None => {
            // Constant sequence; a single degenerate run.
            return vec![Run {
                start: 0,
                symbol: seq.at(0),
                length: n as usize,
            }];
        }
    };
    let mut runs = Vec::new();
    let mut pos = anchor;
    let mut consumed = 0u64;
    while consumed < n {
        let symbol = seq.at(pos);
        let mut length = 1u64;
        while length < n && seq.at(pos + length) == symbol {
            length += 1;
        }
        runs.push(Run {
            start: pos % n,
            symbol,
            length: length as usize,
        });
        pos += length;
        consumed += length;
    }
    runs.sort_by_key(|r| r.start);
    runs
}

/// Per-(symbol, length) run counts for one period of a degree-t
/// maximum-period sequence, verified against the m-sequence run statistics:
/// for 1 <= l <= t-2 every element has (q-1)^2 q^{t-l-2} runs of length l;
/// at length t-1 nonzero elements have q-2 and zero has q-1; each nonzero
/// element has exactly one run of length t and zero has none.
pub fn run_census(seq: &Sequence, base: &FieldSpec, t: u32) -> Result<BTreeMap<(u64, usize), u64>> {
    let q = base.q();
    let mut census: BTreeMap<(u64, usize), u64> = BTreeMap::new();
    for run in find_runs(seq) {
        *census.entry((run.symbol.0, run.length)).or_insert(0) += 1;
    }
    let expected = |symbol: u64, l: usize| -> u64 {
        let t = t as usize;
        if l >= 1 && l + 2 <= t {
            (q - 1) * (q - 1) * q.pow((t - l - 2) as u32)
        } else if l + 1 == t {
            if symbol == 0 {
                q - 1
            } else {
                q.saturating_sub(2)
            }
        } else if l == t {
            if symbol == 0 {
                0
            } else {
                1
            }
        } else {
            0
        }
    };
    for symbol in 0..q {
        for l in 1..=t as usize + 1 {
            let got = census.get(&(symbol, l)).copied().unwrap_or(0);
            let want = expected(symbol, l);
            if got != want {
                return Err(Error::RunCensusMismatch(alloc::format!(
                    "symbol {symbol} length {l}: got {got}, expected {want}"
                )));
            }
        }
    }
    if census.keys().any(|&(_, l)| l > t as usize) {
        return Err(Error::RunCensusMismatch("run longer than t".into()));
    }
    Ok(census)
}

/// Positions of zeroes (relative to `start`) in the window of `window`
/// symbols beginning at `start`.
pub fn zero_positions(seq: &Sequence, start: u64, window: u64) -> Vec<u64> {
    (0..window)
        .filter(|&j| seq.at(start + j).is_zero())
        .collect()
}

/// Checks a_{i+1} - beta a_i = a_{i - k_beta} at every cyclic index.
pub fn shift_identity_holds(spec: &LfsrSpec, seq: &Sequence, beta: Elem) -> Result<bool> {
    let k = spec.shift_offset(beta)?;
    let base = spec.base();
    let n = seq.len() as u64;
    Ok((0..n).all(|i| {
        let lhs = base.sub(seq.at(i + 1), base.mul(beta, seq.at(i)));
        lhs == seq.at_back(i, k)
    }))
}

fn require_zero_run(seq: &Sequence, n: u64, l: usize) -> Result<()> {
    if seq.is_zero_run(n, l) {
        Ok(())
    } else {
        Err(Error::NotAZeroRun {
            start: n as usize,
            length: l,
        })
    }
}

/// The growth polynomial P of a run of zeroes of length l at position n,
/// for l <= t-3:
///
/// P(x) = sum_{j=0}^{t-l-1} c_{j+l+1} sum_{i=0}^{j} a_{n+l+j-i} x^i,
///
/// with c_t = 1. Its degree is exactly t-l-1, and the forward shift by
/// k_beta extends the run to length l+1 exactly when beta is a root of P;
/// more precisely the root multiplicity of beta equals
/// [`growth_count`]`(.., beta)`.
pub fn growth_polynomial(spec: &LfsrSpec, seq: &Sequence, n: u64, l: usize) -> Result<Poly> {
    let t = spec.t() as usize;
    // The root-multiplicity reading needs l <= t-3; the coefficient formula
    // itself (and the one-step factorization it satisfies) is good through
    // l = t-2, where the polynomial is linear.
    if l + 2 > t {
        return Err(Error::BadDimension(alloc::format!(
            "growth polynomial needs l <= t-2, got l={l}, t={t}"
        )));
    }
    require_zero_run(seq, n, l)?;
    let base = spec.base();
    let deg = t - l - 1;
    let mut coeffs = vec![Elem(0); deg + 1];
    for (i, coeff) in coeffs.iter_mut().enumerate() {
        let mut acc = Elem(0);
        for j in i..=deg {
            let c = spec.coefficient((j + l + 1) as u32);
            let a = seq.at(n + (l + j - i) as u64);
            acc = base.add(acc, base.mul(c, a));
        }
        *coeff = acc;
    }
    Ok(Poly::from_elems(coeffs))
}

/// The largest z >= 0 with a_{n + j k_beta} = 0 for j = 1..z (and nonzero at
/// j = z+1), for a run of zeroes of length l at n. Each of those positions
/// starts a zero run one symbol longer than the last.
pub fn growth_count(spec: &LfsrSpec, seq: &Sequence, n: u64, l: usize, beta: Elem) -> Result<u64> {
    require_zero_run(seq, n, l)?;
    let k = spec.shift_offset(beta)?;
    let mut z = 0u64;
    while seq.at(n + (z + 1) * k).is_zero() {
        z += 1;
        debug_assert!(z <= seq.len() as u64, "sequence has no nonzero symbol");
    }
    Ok(z)
}

/// The bijection between runs of zeroes of length exactly l and runs of
/// nonzero elements of length greater than l: the zero run at i maps to the
/// nonzero run starting at i + (l'-l) k_1 of its eventual length l', where
/// l'-l is one more than the number of zero growth steps. Errors if the
/// matching is not a perfect bijection.
pub fn run_matching(spec: &LfsrSpec, seq: &Sequence, l: usize) -> Result<Vec<(Run, Run)>> {
    let t = spec.t() as usize;
    if l < 1 || l > t - 1 {
        return Err(Error::BadDimension(alloc::format!(
            "run matching needs 1 <= l <= t-1, got l={l}, t={t}"
        )));
    }
    let k1 = spec.shift_offset(Elem(1))?;
    let runs = find_runs(seq);
    let mut targets: BTreeMap<u64, Run> = runs
        .iter()
        .filter(|r| !r.symbol.is_zero() && r.length > l)
        .map(|r| (r.start, *r))
        .collect();
    let mut pairs = Vec::new();
    for zr in runs.iter().filter(|r| r.symbol.is_zero() && r.length == l) {
        let z = growth_count(spec, seq, zr.start, l, Elem(1))?;
        let image_start = (zr.start + (z + 1) * k1) % seq.len() as u64;
        let image = targets
            .remove(&image_start)
            .ok_or(Error::RunMatchingFailed)?;
        if image.length != l + z as usize + 1 {
            return Err(Error::RunMatchingFailed);
        }
        pairs.push((*zr, image));
    }
    if !targets.is_empty() {
        return Err(Error::RunMatchingFailed);
    }
    Ok(pairs)
}

/// The q^t x k array whose rows are all cyclic windows of length
/// k = (q^t-1)/(q-1) of one period, plus the all-zero row. Columns are
/// labeled by Z_k.
#[derive(Debug, Clone)]
pub struct SubintervalArray {
    rows: Vec<Vec<Elem>>,
    k: usize,
    q: u64,
}

impl SubintervalArray {
    pub fn rows(&self) -> &[Vec<Elem>] {
        &self.rows
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Rows as plain symbol codes.
    pub fn rows_codes(&self) -> Vec<Vec<u64>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|e| e.0).collect())
            .collect()
    }
}

fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let quot = old_r / r;
        (old_r, r) = (r, old_r - quot * r);
        (old_s, s) = (s, old_s - quot * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec_f2_t4() -> LfsrSpec {
        let base = FieldSpec::build(2, 1).unwrap();
        let f = Poly::from_codes(&base, &[1, 1, 0, 0, 1]).unwrap();
        LfsrSpec::new(base, f, &[0, 0, 0, 1]).unwrap()
    }

    fn spec_f3_t4() -> LfsrSpec {
        let base = FieldSpec::build(3, 1).unwrap();
        let f = Poly::from_codes(&base, &[2, 2, 0, 0, 1]).unwrap();
        LfsrSpec::new(base, f, &[1, 0, 0, 0]).unwrap()
    }

    fn spec_f3_t3() -> LfsrSpec {
        let base = FieldSpec::build(3, 1).unwrap();
        let f = Poly::from_codes(&base, &[1, 2, 0, 1]).unwrap();
        LfsrSpec::new(base, f, &[1, 0, 0]).unwrap()
    }

    const PERIOD_F3_T4: &str = "1000100110121100210201221010111122201121\
                                2000200220212200120102112020222211102212";

    #[test]
    fn known_periods() {
        assert_eq!(spec_f2_t4().period_sequence().text(), "000100110101111");
        assert_eq!(
            spec_f3_t3().period_sequence().text(),
            "10020212210222001012112011"
        );
        assert_eq!(
            spec_f3_t4().period_sequence().text(),
            PERIOD_F3_T4.replace(char::is_whitespace, "")
        );
    }

    #[test]
    fn construction_errors() {
        let base = FieldSpec::build(2, 1).unwrap();
        let f = Poly::from_codes(&base, &[1, 1, 0, 0, 1]).unwrap();
        assert_eq!(
            LfsrSpec::new(base.clone(), f.clone(), &[0, 0, 0, 0]).unwrap_err(),
            Error::ZeroSeed
        );
        assert!(matches!(
            LfsrSpec::new(base.clone(), f.clone(), &[0, 1]).unwrap_err(),
            Error::BadSeedLength { .. }
        ));
        let reducible = Poly::from_codes(&base, &[1, 0, 1]).unwrap(); // (x+1)^2
        assert_eq!(
            LfsrSpec::new(base, reducible, &[0, 1]).unwrap_err(),
            Error::NotPrimitive
        );
    }

    #[test]
    fn trace_form_matches_recurrence() {
        for spec in [spec_f2_t4(), spec_f3_t4(), spec_f3_t3()] {
            assert_eq!(spec.period_sequence(), spec.period_by_trace());
        }
    }

    #[test]
    fn seed_element_defining_property() {
        let spec = spec_f3_t4();
        let gamma = spec.seed_element();
        let ext = spec.ext();
        for (i, &b) in spec.seed().iter().enumerate() {
            let y = ext.mul(gamma, ext.pow(spec.alpha(), i as u64));
            assert_eq!(spec.subfield().trace(ext, y), b);
        }
    }

    #[test]
    fn seed_from_unit_gamma() {
        // Seeds built as b_i = Tr(alpha^i) must recover gamma = 1.
        let base = FieldSpec::build(3, 1).unwrap();
        let f = Poly::from_codes(&base, &[2, 2, 0, 0, 1]).unwrap();
        let probe = LfsrSpec::new(base.clone(), f.clone(), &[1, 0, 0, 0]).unwrap();
        let ext = probe.ext();
        let seed: Vec<u64> = (0..4)
            .map(|i| probe.subfield().trace(ext, ext.pow(probe.alpha(), i)).0)
            .collect();
        let spec = LfsrSpec::new(base, f, &seed).unwrap();
        assert_eq!(spec.seed_element(), Elem(1));
    }

    #[test]
    fn scaled_seed_shifts_by_one() {
        // gamma and alpha*gamma generate cyclic shifts by one.
        let spec = spec_f3_t4();
        let gamma = spec.seed_element();
        let ext = spec.ext();
        let shifted_gamma = ext.mul(gamma, spec.alpha());
        let seed: Vec<u64> = (0..4)
            .map(|i| {
                spec.subfield()
                    .trace(ext, ext.mul(shifted_gamma, ext.pow(spec.alpha(), i)))
                    .0
            })
            .collect();
        let spec2 = LfsrSpec::new(spec.base().clone(), spec.charpoly().clone(), &seed).unwrap();
        let s1 = spec.period_sequence();
        let s2 = spec2.period_sequence();
        for i in 0..s1.len() as u64 {
            assert_eq!(s2.at(i), s1.at(i + 1));
        }
    }

    #[test]
    fn known_shift_offsets() {
        assert_eq!(spec_f2_t4().shift_offset(Elem(1)).unwrap(), 11);
        let spec = spec_f3_t4();
        assert_eq!(spec.shift_offset(Elem(1)).unwrap(), 27);
        assert_eq!(spec.shift_offset(Elem(2)).unwrap(), 76);
        assert_eq!(spec_f3_t3().shift_offset(Elem(1)).unwrap(), 23);
        assert_eq!(spec.shift_offset(Elem(0)).unwrap_err(), Error::ZeroArgument);
        assert_eq!(
            spec.shift_offset_mod_window(Elem(2)).unwrap(),
            76 % spec.window()
        );
    }

    #[test]
    fn shift_offset_defining_identity() {
        for spec in [spec_f2_t4(), spec_f3_t4(), spec_f3_t3()] {
            let ext = spec.ext();
            for beta in spec.base().nonzero_elements() {
                let k = spec.shift_offset(beta).unwrap();
                let lhs = ext.mul(
                    ext.pow(spec.alpha(), k),
                    ext.sub(spec.alpha(), spec.subfield().embed(beta)),
                );
                assert_eq!(lhs, Elem(1));
            }
        }
    }

    #[test]
    fn shift_identity_on_sequences() {
        for spec in [spec_f2_t4(), spec_f3_t4(), spec_f3_t3()] {
            let seq = spec.period_sequence();
            for beta in spec.base().nonzero_elements() {
                assert!(shift_identity_holds(&spec, &seq, beta).unwrap());
            }
        }
    }

    #[test]
    fn runs_partition_and_known_runs() {
        let spec = spec_f2_t4();
        let seq = spec.period_sequence();
        let runs = find_runs(&seq);
        let total: usize = runs.iter().map(|r| r.length).sum();
        assert_eq!(total, seq.len());
        // Single run of four ones at position 11; no zero run of length 4.
        assert!(runs.contains(&Run {
            start: 11,
            symbol: Elem(1),
            length: 4
        }));
        assert!(!runs.iter().any(|r| r.symbol.is_zero() && r.length == 4));

        let seq3 = spec_f3_t4().period_sequence();
        assert!(seq3.is_zero_run(18, 1));
        assert!(seq3.is_zero_run(27, 1));
        assert!(!seq3.is_zero_run(19, 1));
    }

    #[test]
    fn census_on_fixtures() {
        for spec in [spec_f2_t4(), spec_f3_t4(), spec_f3_t3()] {
            let seq = spec.period_sequence();
            let census = run_census(&seq, spec.base(), spec.t()).unwrap();
            // Spot checks of the closed-form counts.
            if spec.base().q() == 2 && spec.t() == 4 {
                assert_eq!(census.get(&(0, 1)).copied().unwrap_or(0), 2);
                assert_eq!(census.get(&(1, 4)).copied().unwrap_or(0), 1);
            }
            if spec.base().q() == 3 && spec.t() == 4 {
                assert_eq!(census.get(&(0, 3)).copied().unwrap_or(0), 2);
            }
        }
    }

    #[test]
    fn census_rejects_corrupted_sequence() {
        let spec = spec_f2_t4();
        let mut symbols = spec.period_sequence().symbols().to_vec();
        symbols[3] = Elem(0);
        let bad = Sequence::from_symbols(symbols, 2);
        assert!(matches!(
            run_census(&bad, spec.base(), spec.t()),
            Err(Error::RunCensusMismatch(_))
        ));
    }

    #[test]
    fn zero_positions_window_invariance() {
        let spec = spec_f2_t4();
        let seq = spec.period_sequence();
        let k = spec.window();
        assert_eq!(zero_positions(&seq, 0, k).len(), 7);
        for i in 0..k {
            for j in 1..spec.base().q() {
                assert_eq!(
                    zero_positions(&seq, i, k),
                    zero_positions(&seq, i + j * k, k)
                );
            }
        }
    }

    #[test]
    fn growth_polynomial_fixtures() {
        let spec = spec_f3_t4();
        let seq = spec.period_sequence();
        let p18 = growth_polynomial(&spec, &seq, 18, 1).unwrap();
        assert_eq!(p18.coeffs(), &[Elem(1), Elem(0), Elem(2)]); // 1 + 2x^2
        let p27 = growth_polynomial(&spec, &seq, 27, 1).unwrap();
        assert_eq!(p27.coeffs(), &[Elem(1), Elem(1), Elem(1)]); // 1 + x + x^2
        assert!(matches!(
            growth_polynomial(&spec, &seq, 19, 1),
            Err(Error::NotAZeroRun { .. })
        ));
        assert!(matches!(
            growth_polynomial(&spec, &seq, 18, 3),
            Err(Error::BadDimension(_))
        ));
    }

    #[test]
    fn growth_counts_match_multiplicities_on_fixture() {
        let spec = spec_f3_t4();
        let seq = spec.period_sequence();
        assert_eq!(growth_count(&spec, &seq, 18, 1, Elem(1)).unwrap(), 1);
        assert_eq!(growth_count(&spec, &seq, 18, 1, Elem(2)).unwrap(), 1);
        assert_eq!(growth_count(&spec, &seq, 27, 1, Elem(1)).unwrap(), 2);
        assert_eq!(growth_count(&spec, &seq, 27, 1, Elem(2)).unwrap(), 0);
        // The shifted runs themselves.
        assert!(seq.is_zero_run(18 + 27, 2));
        assert!(seq.is_zero_run(18 + 76, 2));
        assert!(seq.is_zero_run(27 + 2 * 27, 3));
        assert!(!seq.is_zero_run(27 + 76, 2));
    }

    #[test]
    fn growth_factorization_step() {
        // After one growth step by k_beta, the growth polynomial at
        // (n + k_beta, l+1) is the quotient of P by (x - beta), up to the
        // convention that both are produced by the same coefficient formula.
        let spec = spec_f3_t4();
        let seq = spec.period_sequence();
        let base = spec.base();
        for (n, beta) in [(18u64, Elem(1)), (18, Elem(2)), (27, Elem(1))] {
            let p = growth_polynomial(&spec, &seq, n, 1).unwrap();
            let k = spec.shift_offset(beta).unwrap();
            let shifted = growth_polynomial(&spec, &seq, n + k, 2).unwrap();
            let linear = Poly::from_elems(vec![base.neg(beta), Elem(1)]);
            assert_eq!(linear.mul(base, &shifted), p);
        }
    }

    #[test]
    fn run_matching_fixture() {
        let spec = spec_f3_t3();
        let seq = spec.period_sequence();
        let pairs1 = run_matching(&spec, &seq, 1).unwrap();
        let pairs2 = run_matching(&spec, &seq, 2).unwrap();
        // (q-1)^2 q^{t-l-2} zero runs of length 1, and q-1 of length t-1.
        assert_eq!(pairs1.len(), 4);
        assert_eq!(pairs2.len(), 2);
        let k1 = spec.shift_offset(Elem(1)).unwrap();
        let n = seq.len() as u64;
        for (z, nz) in pairs1.iter().chain(&pairs2) {
            assert!(nz.length > z.length);
            let diff = (nz.start + n - z.start) % n;
            let steps = (nz.length - z.length) as u64;
            assert_eq!(diff, steps * k1 % n, "start difference is (l'-l) k_1 mod N");
        }
    }

    #[test]
    fn run_matching_full_length() {
        // l = t-1 pairs the q-1 zero runs of length t-1 with the q-1 runs of
        // length exactly t, one per nonzero element.
        for spec in [spec_f2_t4(), spec_f3_t4(), spec_f3_t3()] {
            let seq = spec.period_sequence();
            let t = spec.t() as usize;
            let q = spec.base().q();
            let pairs = run_matching(&spec, &seq, t - 1).unwrap();
            assert_eq!(pairs.len(), (q - 1) as usize);
            let mut symbols: Vec<u64> = pairs.iter().map(|(_, nz)| nz.symbol.0).collect();
            symbols.sort_unstable();
            assert_eq!(symbols, (1..q).collect::<Vec<_>>());
            assert!(pairs.iter().all(|(_, nz)| nz.length == t));
        }
    }

    #[test]
    fn shrink_and_regrow_round_trip() {
        for spec in [spec_f2_t4(), spec_f3_t4(), spec_f3_t3()] {
            let seq = spec.period_sequence();
            let base = spec.base();
            let n = seq.len() as u64;
            let runs = find_runs(&seq);
            for run in runs.iter().filter(|r| r.length >= 2) {
                for beta in base.nonzero_elements() {
                    let k = spec.shift_offset(beta).unwrap();
                    let image_start = (run.start + n - k % n) % n;
                    let image_symbol = base.mul(run.symbol, base.sub(Elem(1), beta));
                    let image = runs
                        .iter()
                        .find(|r| r.start == image_start)
                        .expect("every position lies in some run");
                    assert_eq!(image.symbol, image_symbol);
                    assert_eq!(image.length, run.length - 1);
                    // Growing forward by k recovers the original start.
                    assert_eq!((image.start + k) % n, run.start);
                }
            }
        }
    }

    #[test]
    fn alpha_power_coords_basics() {
        let spec = spec_f3_t4();
        // x^i for i < t are unit vectors; x^t reduces to -(c_0..c_{t-1}).
        for i in 0..4u64 {
            let mut unit = vec![Elem(0); 4];
            unit[i as usize] = Elem(1);
            assert_eq!(spec.alpha_power_coords(i), unit);
        }
        let base = spec.base();
        let expected: Vec<Elem> = (0..4).map(|j| base.neg(spec.coefficient(j))).collect();
        assert_eq!(spec.alpha_power_coords(4), expected);
    }

    #[test]
    fn least_period_is_exact() {
        for spec in [spec_f2_t4(), spec_f3_t3()] {
            let seq = spec.period_sequence();
            let n = seq.len() as u64;
            let divisors: Vec<u64> = (1..n).filter(|d| n.is_multiple_of(*d)).collect();
            for d in divisors {
                assert!(
                    (0..n).any(|i| seq.at(i) != seq.at(i + d)),
                    "no proper period {d}"
                );
            }
        }
    }

    #[test]
    fn subinterval_array_shape() {
        let base = FieldSpec::build(2, 1).unwrap();
        let f = Poly::from_codes(&base, &[1, 1, 0, 1]).unwrap();
        let spec = LfsrSpec::with_impulse_seed(base, f).unwrap();
        let m = spec.subinterval_array();
        assert_eq!(m.rows().len(), 8);
        assert_eq!(m.k(), 7);
        assert!(m.rows().last().unwrap().iter().all(|e| e.is_zero()));
        // Every nonzero t-tuple appears exactly once in t consecutive columns.
        let t = 3;
        for c in 0..m.k() - t + 1 {
            let mut seen = alloc::collections::BTreeSet::new();
            for row in m.rows() {
                let tuple: Vec<u64> = (c..c + t).map(|j| row[j].0).collect();
                if tuple.iter().any(|&x| x != 0) {
                    assert!(seen.insert(tuple), "duplicate tuple in consecutive columns");
                }
            }
            assert_eq!(seen.len(), 7);
        }
    }

    #[test]
    fn sequence_text_wide_alphabet() {
        let base = FieldSpec::with_cardinality(11).unwrap();
        let f = poly::enumerate_primitive(&base, 2).unwrap().remove(0);
        let spec = LfsrSpec::with_impulse_seed(base, f).unwrap();
        let text = spec.period_sequence().text();
        assert!(text.contains(' '));
        assert_eq!(text.split(' ').count(), 120);
    }
}
