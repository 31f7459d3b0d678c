//! Finite fields GF(p^n) with a canonical integer encoding of elements.
//!
//! An element is encoded as an integer in `[0, q)` whose base-`p` digits are
//! its coefficients in the power basis of the modulus root (constant digit
//! first). Code 0 is the additive identity, code 1 the multiplicative one.
//! Prime fields use direct modular arithmetic; extension fields multiply
//! through power/log tables of the modulus root, which is always a generator
//! of the multiplicative group because the canonical modulus is primitive.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::poly;

/// Upper bound on field cardinality; beyond this the table-based design
/// stops being sensible.
pub const MAX_FIELD_SIZE: u64 = 1 << 20;

/// A field element, by its integer code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Elem(pub u64);

impl Elem {
    pub fn code(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// A concrete GF(p^n): prime, degree, canonical primitive modulus and the
/// multiplication tables derived from it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSpec {
    p: u64,
    n: u32,
    q: u64,
    /// Monic primitive polynomial over F_p, constant term first, length n+1.
    modulus: Vec<u64>,
    /// `exp[i]` = code of g^i for the modulus root g; length q-1.
    exp: Vec<u64>,
    /// `log[code]` = i with g^i = code; `log[0]` is a sentinel.
    log: Vec<u64>,
}

const LOG_SENTINEL: u64 = u64::MAX;

impl FieldSpec {
    /// Builds GF(p^n) with the canonical modulus: the first monic primitive
    /// polynomial of degree `n` over F_p in ascending order of the packed
    /// coefficient integer `c_0 + c_1 p + ... + c_{n-1} p^{n-1}`.
    pub fn build(p: u64, n: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if n == 0 {
            return Err(Error::BadDimension("extension degree must be >= 1".into()));
        }
        let q = checked_pow(p, n).ok_or(Error::FieldTooLarge(u64::MAX))?;
        if q > MAX_FIELD_SIZE {
            return Err(Error::FieldTooLarge(q));
        }
        if n == 1 {
            return Ok(Self::build_prime(p));
        }

        let base = Self::build_prime(p);
        let mut modulus = None;
        for low in 0..q {
            let mut coeffs: Vec<u64> = digits(low, p, n as usize);
            coeffs.push(1);
            let f = poly::Poly::from_codes(&base, &coeffs).expect("codes < p");
            if poly::is_primitive(&base, &f).expect("monic by construction") {
                modulus = Some(coeffs);
                break;
            }
        }
        let modulus = modulus.expect("a primitive polynomial of every degree exists");
        Ok(Self::from_tables(p, n, q, modulus))
    }

    /// Builds the field of cardinality `q`, factoring `q = p^n`.
    pub fn with_cardinality(q: u64) -> Result<Self> {
        let (p, n) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Self::build(p, n)
    }

    fn build_prime(p: u64) -> Self {
        // Canonical degree-1 modulus c0 + x with the smallest c0 whose root
        // -c0 generates the multiplicative group.
        let factors = prime_factors(p - 1);
        let mut c0 = 0;
        for cand in 0..p {
            let g = (p - cand) % p;
            if g == 0 {
                continue;
            }
            let primitive = factors.iter().all(|&r| mod_pow(g, (p - 1) / r, p) != 1);
            if primitive {
                c0 = cand;
                break;
            }
        }
        let g = (p - c0) % p;
        let mut exp = Vec::with_capacity((p - 1) as usize);
        let mut log = vec![LOG_SENTINEL; p as usize];
        let mut acc = 1u64;
        for i in 0..p - 1 {
            exp.push(acc);
            log[acc as usize] = i;
            acc = acc * g % p;
        }
        FieldSpec {
            p,
            n: 1,
            q: p,
            modulus: vec![c0, 1],
            exp,
            log,
        }
    }

    fn from_tables(p: u64, n: u32, q: u64, modulus: Vec<u64>) -> Self {
        // Power table of the residue class of x, reducing x^n by the modulus.
        let nn = n as usize;
        let mut exp = Vec::with_capacity((q - 1) as usize);
        let mut log = vec![LOG_SENTINEL; q as usize];
        let mut digs = vec![0u64; nn];
        digs[0] = 1;
        for i in 0..q - 1 {
            let code = pack(&digs, p);
            exp.push(code);
            log[code as usize] = i;
            // multiply by x
            let carry = digs[nn - 1];
            for d in (1..nn).rev() {
                digs[d] = digs[d - 1];
            }
            digs[0] = 0;
            if carry != 0 {
                for d in 0..nn {
                    // x^n = -sum modulus[d] x^d
                    digs[d] = (digs[d] + carry * (p - modulus[d]) % p) % p;
                }
            }
        }
        debug_assert!(log.iter().skip(1).all(|&v| v != LOG_SENTINEL));
        FieldSpec {
            p,
            n,
            q,
            modulus,
            exp,
            log,
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Canonical modulus, constant term first, length n+1.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// The root of the canonical modulus: the residue class of x for n > 1,
    /// the element -c0 for prime fields. Always generates the multiplicative
    /// group.
    pub fn generator(&self) -> Elem {
        if self.n == 1 {
            Elem((self.p - self.modulus[0]) % self.p)
        } else {
            Elem(self.p)
        }
    }

    pub fn zero(&self) -> Elem {
        Elem(0)
    }

    pub fn one(&self) -> Elem {
        Elem(1)
    }

    pub fn elem(&self, code: u64) -> Result<Elem> {
        if code < self.q {
            Ok(Elem(code))
        } else {
            Err(Error::BadElementCode { code, q: self.q })
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.q).map(Elem)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Elem> {
        (1..self.q).map(Elem)
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.n == 1 {
            Elem((a.0 + b.0) % self.p)
        } else {
            let mut out = 0u64;
            let mut mult = 1u64;
            let (mut x, mut y) = (a.0, b.0);
            for _ in 0..self.n {
                out += (x % self.p + y % self.p) % self.p * mult;
                x /= self.p;
                y /= self.p;
                mult *= self.p;
            }
            Elem(out)
        }
    }

    pub fn neg(&self, a: Elem) -> Elem {
        if self.n == 1 {
            Elem((self.p - a.0) % self.p)
        } else {
            let mut out = 0u64;
            let mut mult = 1u64;
            let mut x = a.0;
            for _ in 0..self.n {
                out += (self.p - x % self.p) % self.p * mult;
                x /= self.p;
                mult *= self.p;
            }
            Elem(out)
        }
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if self.n == 1 {
            return Elem(a.0 * b.0 % self.p);
        }
        if a.0 == 0 || b.0 == 0 {
            return Elem(0);
        }
        let e = (self.log[a.0 as usize] + self.log[b.0 as usize]) % (self.q - 1);
        Elem(self.exp[e as usize])
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let e = (self.q - 1 - self.log_nonzero(a)) % (self.q - 1);
        Ok(Elem(self.exp[e as usize]))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `x^e`, with the exponent reduced modulo q-1 for nonzero `x`.
    /// `0^0` is 1.
    pub fn pow(&self, x: Elem, e: u64) -> Elem {
        if x.0 == 0 {
            return if e == 0 { Elem(1) } else { Elem(0) };
        }
        let e = (self.log_nonzero(x) as u128 * (e % (self.q - 1)) as u128 % (self.q - 1) as u128)
            as u64;
        Elem(self.exp[e as usize])
    }

    /// Discrete logarithm with respect to [`FieldSpec::generator`].
    pub fn dlog(&self, x: Elem) -> Result<u64> {
        if x.0 == 0 {
            return Err(Error::LogOfZero);
        }
        Ok(self.log_nonzero(x))
    }

    fn log_nonzero(&self, x: Elem) -> u64 {
        self.log[x.0 as usize]
    }
}

/// Embedding of a base field into an extension of it, plus the trace map
/// back down. Built once and reused in sequence-generation loops.
#[derive(Debug, Clone)]
pub struct SubfieldMap {
    base_q: u64,
    /// Degree of the extension over the base.
    degree: u32,
    /// Image code in the extension, indexed by base code.
    embed: Vec<u64>,
    /// (ext code, base code) pairs sorted by ext code.
    retract: Vec<(u64, u64)>,
}

impl SubfieldMap {
    pub fn new(base: &FieldSpec, ext: &FieldSpec) -> Result<Self> {
        if base.p() != ext.p() || !ext.n().is_multiple_of(base.n()) {
            return Err(Error::NotASubfield {
                base: base.q(),
                ext: ext.q(),
            });
        }
        let degree = ext.n() / base.n();
        // The base modulus has F_p coefficients, which are valid codes in the
        // extension as-is; its smallest root there anchors the embedding.
        let root = ext
            .elements()
            .find(|&x| {
                let mut acc = Elem(0);
                for &c in base.modulus().iter().rev() {
                    acc = ext.add(ext.mul(acc, x), Elem(c));
                }
                acc.is_zero()
            })
            .expect("base modulus splits in the extension");
        let mut powers = Vec::with_capacity(base.n() as usize);
        let mut acc = ext.one();
        for _ in 0..base.n() {
            powers.push(acc);
            acc = ext.mul(acc, root);
        }
        let mut embed = Vec::with_capacity(base.q() as usize);
        let mut retract = Vec::with_capacity(base.q() as usize);
        for code in 0..base.q() {
            let ds = digits(code, base.p(), base.n() as usize);
            let mut img = Elem(0);
            for (d, pw) in ds.iter().zip(&powers) {
                img = ext.add(img, ext.mul(Elem(*d), *pw));
            }
            embed.push(img.0);
            retract.push((img.0, code));
        }
        retract.sort_unstable();
        Ok(SubfieldMap {
            base_q: base.q(),
            degree,
            embed,
            retract,
        })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Image of a base field element in the extension.
    pub fn embed(&self, x: Elem) -> Elem {
        Elem(self.embed[x.0 as usize])
    }

    /// Base-field preimage of an extension element, if it lies in the
    /// embedded subfield.
    pub fn retract(&self, y: Elem) -> Option<Elem> {
        self.retract
            .binary_search_by_key(&y.0, |&(e, _)| e)
            .ok()
            .map(|i| Elem(self.retract[i].1))
    }

    /// Trace down to the base field: x + x^q + ... + x^(q^(t-1)), re-encoded
    /// in the base field's code space.
    pub fn trace(&self, ext: &FieldSpec, x: Elem) -> Elem {
        let mut sum = Elem(0);
        let mut e = 1u64;
        for _ in 0..self.degree {
            sum = ext.add(sum, ext.pow(x, e));
            e *= self.base_q;
        }
        self.retract(sum).expect("trace lies in the base field")
    }
}

/// Trace from F_{q^t} down to F_q for a single element. For hot loops build
/// a [`SubfieldMap`] instead.
pub fn trace_to_base(ext: &FieldSpec, base: &FieldSpec, x: Elem) -> Result<Elem> {
    let map = SubfieldMap::new(base, ext)?;
    Ok(map.trace(ext, x))
}

/// Rank of a matrix of field elements, by Gaussian elimination.
/// Rows may be ragged; missing entries count as zero.
// The inner loop reads the pivot row while writing another row of the same
// matrix, so it stays index-based.
#[allow(clippy::needless_range_loop)]
pub fn matrix_rank(field: &FieldSpec, mut rows: Vec<Vec<Elem>>) -> usize {
    let ncols = rows.iter().map(Vec::len).max().unwrap_or(0);
    for r in rows.iter_mut() {
        r.resize(ncols, Elem(0));
    }
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = field.inv(rows[rank][col]).expect("pivot is nonzero");
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = field.mul(rows[r][col], inv);
                for c in col..ncols {
                    let s = field.mul(factor, rows[rank][c]);
                    rows[r][c] = field.sub(rows[r][c], s);
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

pub(crate) fn digits(mut x: u64, p: u64, len: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(x % p);
        x /= p;
    }
    out
}

pub(crate) fn pack(digits: &[u64], p: u64) -> u64 {
    digits.iter().rev().fold(0, |acc, &d| acc * p + d)
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `q = p^n` with p prime, or None.
pub(crate) fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q.is_multiple_of(p) {
            let mut rest = q;
            let mut n = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                n += 1;
            }
            return if rest == 1 { Some((p, n)) } else { None };
        }
        p += 1;
    }
    Some((q, 1))
}

pub(crate) fn checked_pow(p: u64, n: u32) -> Option<u64> {
    let mut acc = 1u64;
    for _ in 0..n {
        acc = acc.checked_mul(p)?;
    }
    Some(acc)
}

/// Distinct prime factors, ascending, by trial division.
pub(crate) fn prime_factors(mut x: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= x {
        if x.is_multiple_of(d) {
            out.push(d);
            while x.is_multiple_of(d) {
                x /= d;
            }
        }
        d += 1;
    }
    if x > 1 {
        out.push(x);
    }
    out
}

pub(crate) fn mod_pow(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_moduli() {
        assert_eq!(FieldSpec::build(2, 1).unwrap().modulus(), &[1, 1]);
        assert_eq!(FieldSpec::build(3, 1).unwrap().modulus(), &[1, 1]);
        assert_eq!(FieldSpec::build(2, 3).unwrap().modulus(), &[1, 1, 0, 1]);
        assert_eq!(FieldSpec::build(2, 4).unwrap().modulus(), &[1, 1, 0, 0, 1]);
        assert_eq!(FieldSpec::build(3, 2).unwrap().modulus(), &[2, 1, 1]);
        assert_eq!(FieldSpec::build(3, 4).unwrap().modulus(), &[2, 1, 0, 0, 1]);
        assert_eq!(FieldSpec::build(2, 2).unwrap().modulus(), &[1, 1, 1]);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(FieldSpec::build(6, 1).unwrap_err(), Error::NotPrime(6));
        assert_eq!(
            FieldSpec::with_cardinality(12).unwrap_err(),
            Error::NotPrimePower(12)
        );
        assert!(matches!(
            FieldSpec::build(2, 40),
            Err(Error::FieldTooLarge(_))
        ));
    }

    #[test]
    fn prime_field_arithmetic() {
        let f3 = FieldSpec::build(3, 1).unwrap();
        assert_eq!(f3.add(Elem(1), Elem(2)), Elem(0));
        assert_eq!(f3.mul(Elem(2), Elem(2)), Elem(1));
        assert_eq!(f3.inv(Elem(2)).unwrap(), Elem(2));
        assert_eq!(f3.inv(Elem(0)).unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn gf16_power_basis() {
        // With modulus 1 + x + x^4 the root a satisfies a^4 = a + 1.
        let f = FieldSpec::build(2, 4).unwrap();
        let a = f.generator();
        assert_eq!(a, Elem(2));
        assert_eq!(f.pow(a, 4), f.add(a, Elem(1)));
        assert_eq!(f.dlog(Elem(1)).unwrap(), 0);
        assert_eq!(f.dlog(a).unwrap(), 1);
        assert_eq!(f.dlog(f.add(a, Elem(1))).unwrap(), 4);
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
            let f = FieldSpec::with_cardinality(q).unwrap();
            for a in f.elements() {
                assert_eq!(f.add(a, f.neg(a)), Elem(0), "additive inverse in q={q}");
                assert_eq!(f.mul(f.one(), a), a, "identity in q={q}");
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), Elem(1), "inverse in q={q}");
                }
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.elements() {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(
                            f.mul(a, f.add(b, c)),
                            f.add(f.mul(a, b), f.mul(a, c)),
                            "distributivity in q={q}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn dlog_round_trip() {
        for q in [5u64, 8, 9, 16] {
            let f = FieldSpec::with_cardinality(q).unwrap();
            let g = f.generator();
            for k in 0..2 * (q - 1) {
                assert_eq!(f.dlog(f.pow(g, k)).unwrap(), k % (q - 1));
            }
        }
    }

    #[test]
    fn pow_edge_cases() {
        let f = FieldSpec::build(3, 2).unwrap();
        assert_eq!(f.pow(Elem(0), 0), Elem(1));
        assert_eq!(f.pow(Elem(0), 5), Elem(0));
        let g = f.generator();
        assert_eq!(f.pow(g, f.q() - 1), Elem(1));
    }

    #[test]
    fn trace_gf16_examples() {
        let ext = FieldSpec::build(2, 4).unwrap();
        let base = FieldSpec::build(2, 1).unwrap();
        // Tr(a) = a + a^2 + a^4 + a^8 = 0 for the canonical modulus.
        let a = ext.generator();
        assert_eq!(trace_to_base(&ext, &base, a).unwrap(), Elem(0));
        assert_eq!(trace_to_base(&ext, &base, Elem(0)).unwrap(), Elem(0));
    }

    #[test]
    fn trace_linear_and_surjective() {
        // Exhaustive over every (base, ext) pair with ext <= 81 elements.
        let pairs = [
            (2u64, 4u64),
            (2, 8),
            (2, 16),
            (2, 32),
            (2, 64),
            (3, 9),
            (3, 27),
            (3, 81),
            (4, 16),
            (4, 64),
            (5, 25),
            (7, 49),
            (8, 64),
            (9, 81),
        ];
        for (bq, eq) in pairs {
            let base = FieldSpec::with_cardinality(bq).unwrap();
            let ext = FieldSpec::with_cardinality(eq).unwrap();
            let map = SubfieldMap::new(&base, &ext).unwrap();
            let mut seen = vec![false; bq as usize];
            for x in ext.elements() {
                seen[map.trace(&ext, x).0 as usize] = true;
                for y in ext.elements() {
                    let lhs = map.trace(&ext, ext.add(x, y));
                    let rhs = base.add(map.trace(&ext, x), map.trace(&ext, y));
                    assert_eq!(lhs, rhs, "additivity of trace F_{eq} -> F_{bq}");
                }
                // F_q-homogeneity.
                for c in base.elements() {
                    let lhs = map.trace(&ext, ext.mul(map.embed(c), x));
                    let rhs = base.mul(c, map.trace(&ext, x));
                    assert_eq!(lhs, rhs, "homogeneity of trace F_{eq} -> F_{bq}");
                }
            }
            assert!(seen.iter().all(|&s| s), "trace onto F_{bq} is surjective");
        }
    }

    #[test]
    fn embedding_is_a_field_homomorphism() {
        let base = FieldSpec::with_cardinality(4).unwrap();
        let ext = FieldSpec::with_cardinality(64).unwrap();
        let map = SubfieldMap::new(&base, &ext).unwrap();
        for a in base.elements() {
            for b in base.elements() {
                assert_eq!(
                    map.embed(base.add(a, b)),
                    ext.add(map.embed(a), map.embed(b))
                );
                assert_eq!(
                    map.embed(base.mul(a, b)),
                    ext.mul(map.embed(a), map.embed(b))
                );
            }
            assert_eq!(map.retract(map.embed(a)), Some(a));
        }
        assert_eq!(
            SubfieldMap::new(&base, &FieldSpec::with_cardinality(32).unwrap()).unwrap_err(),
            Error::NotASubfield { base: 4, ext: 32 }
        );
    }

    #[test]
    fn rank_basics() {
        let f = FieldSpec::build(2, 1).unwrap();
        let rows = vec![
            vec![Elem(1), Elem(0), Elem(0)],
            vec![Elem(0), Elem(1), Elem(0)],
            vec![Elem(1), Elem(1), Elem(0)],
        ];
        assert_eq!(matrix_rank(&f, rows), 2);
        let f3 = FieldSpec::build(3, 1).unwrap();
        // (2,1) is 2*(1,2) over F_3.
        let rows = vec![vec![Elem(1), Elem(2)], vec![Elem(2), Elem(1)]];
        assert_eq!(matrix_rank(&f3, rows), 1);
        let rows = vec![vec![Elem(1), Elem(2)], vec![Elem(0), Elem(1)]];
        assert_eq!(matrix_rank(&f3, rows), 2);
    }
}
