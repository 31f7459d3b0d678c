//! Polynomials over a finite field: evaluation, division, root
//! multiplicities, Taylor (Hasse) coefficients, primitivity testing and
//! enumeration of primitive polynomials.
//!
//! Coefficients are stored constant term first with no trailing zeroes; the
//! zero polynomial has an empty coefficient list. The text form is the
//! comma-separated code list, e.g. `1,1,0,0,1` for 1 + x + x^4 over F_2.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{self, Elem, FieldSpec};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Elem>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly {
            coeffs: vec![Elem(1)],
        }
    }

    /// The monomial x.
    pub fn x() -> Self {
        Poly {
            coeffs: vec![Elem(0), Elem(1)],
        }
    }

    pub fn from_elems(coeffs: Vec<Elem>) -> Self {
        let mut p = Poly { coeffs };
        p.normalize();
        p
    }

    pub fn from_codes(field: &FieldSpec, codes: &[u64]) -> Result<Self> {
        let coeffs = codes
            .iter()
            .map(|&c| field.elem(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_elems(coeffs))
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    /// Coefficient of x^i, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(Elem(0))
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&Elem(1))
    }

    /// Horner evaluation.
    pub fn eval(&self, field: &FieldSpec, x: Elem) -> Elem {
        let mut acc = Elem(0);
        for &c in self.coeffs.iter().rev() {
            acc = field.add(field.mul(acc, x), c);
        }
        acc
    }

    pub fn add(&self, field: &FieldSpec, other: &Poly) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| field.add(self.coeff(i), other.coeff(i)))
            .collect();
        Poly::from_elems(coeffs)
    }

    pub fn mul(&self, field: &FieldSpec, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Elem(0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = field.add(coeffs[i + j], field.mul(a, b));
            }
        }
        Poly::from_elems(coeffs)
    }

    pub fn scale(&self, field: &FieldSpec, c: Elem) -> Poly {
        Poly::from_elems(self.coeffs.iter().map(|&a| field.mul(a, c)).collect())
    }

    /// Quotient and remainder by a nonzero divisor.
    pub fn divrem(&self, field: &FieldSpec, divisor: &Poly) -> Result<(Poly, Poly)> {
        let d = divisor.degree().ok_or(Error::ZeroPolynomial)?;
        let lead_inv = field.inv(*divisor.coeffs.last().unwrap())?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![Elem(0); rem.len() - d];
        for i in (d..rem.len()).rev() {
            let factor = field.mul(rem[i], lead_inv);
            if factor.is_zero() {
                continue;
            }
            quot[i - d] = factor;
            for (j, &dc) in divisor.coeffs.iter().enumerate() {
                let s = field.mul(factor, dc);
                rem[i - d + j] = field.sub(rem[i - d + j], s);
            }
        }
        Ok((Poly::from_elems(quot), Poly::from_elems(rem)))
    }

    /// All roots in the field together with their multiplicities.
    pub fn roots_with_multiplicity(&self, field: &FieldSpec) -> Result<Vec<(Elem, usize)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut out = Vec::new();
        for beta in field.elements() {
            if !self.eval(field, beta).is_zero() {
                continue;
            }
            let linear = Poly::from_elems(vec![field.neg(beta), Elem(1)]);
            let mut g = self.clone();
            let mut mult = 0usize;
            loop {
                let (quot, rem) = g.divrem(field, &linear)?;
                if !rem.is_zero() {
                    break;
                }
                mult += 1;
                g = quot;
                if g.is_zero() {
                    break;
                }
            }
            out.push((beta, mult));
        }
        Ok(out)
    }

    /// Multiplicity of `beta` as a root; 0 if not a root.
    pub fn root_multiplicity(&self, field: &FieldSpec, beta: Elem) -> Result<usize> {
        Ok(self
            .roots_with_multiplicity(field)?
            .into_iter()
            .find(|&(b, _)| b == beta)
            .map_or(0, |(_, m)| m))
    }

    /// The first `len` coefficients of g(x + a) in ascending powers: the
    /// Hasse derivatives of order 0..len at `a`, by repeated synthetic
    /// division by (x - a).
    pub fn shifted_coefficients(&self, field: &FieldSpec, a: Elem, len: usize) -> Vec<Elem> {
        let linear = Poly::from_elems(vec![field.neg(a), Elem(1)]);
        let mut out = Vec::with_capacity(len);
        let mut g = self.clone();
        for _ in 0..len {
            if g.is_zero() {
                out.push(Elem(0));
                continue;
            }
            let (quot, rem) = g.divrem(field, &linear).expect("divisor is monic");
            out.push(rem.coeff(0));
            g = quot;
        }
        out
    }

    pub fn to_code_string(&self) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut s = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            s.push_str(itoa(c.0).as_str());
        }
        s
    }

    pub fn parse(field: &FieldSpec, text: &str) -> Result<Self> {
        let codes = text
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::Parse(alloc::format!("bad coefficient {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Poly::from_codes(field, &codes)
    }
}

fn itoa(v: u64) -> String {
    alloc::format!("{v}")
}

/// x^e mod m for nonzero m, by square and multiply.
pub fn powmod(field: &FieldSpec, e: u64, m: &Poly) -> Poly {
    let rem = |p: Poly| p.divrem(field, m).expect("nonzero modulus").1;
    let mut result = rem(Poly::one());
    let mut base = rem(Poly::x());
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            result = rem(result.mul(field, &base));
        }
        base = rem(base.mul(field, &base));
        e >>= 1;
    }
    result
}

/// Primitivity test for a monic polynomial of degree t >= 1 over F_q:
/// irreducibility by trial division, then multiplicative order of the root
/// equal to q^t - 1, checked as x^((q^t-1)/r) != 1 mod f for every prime
/// factor r of q^t - 1.
pub fn is_primitive(field: &FieldSpec, f: &Poly) -> Result<bool> {
    let t = f.degree().ok_or(Error::ZeroPolynomial)?;
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    if t == 0 {
        return Ok(false);
    }
    if f.coeff(0).is_zero() {
        return Ok(false); // divisible by x
    }
    let q = field.q();
    // Trial division by monic polynomials of degree 1..=t/2.
    for d in 1..=t / 2 {
        let count = field::checked_pow(q, d as u32).expect("desk scale");
        for low in 0..count {
            let mut codes = Vec::with_capacity(d + 1);
            let mut v = low;
            for _ in 0..d {
                codes.push(v % q);
                v /= q;
            }
            codes.push(1);
            let divisor = Poly::from_codes(field, &codes)?;
            if f.divrem(field, &divisor)?.1.is_zero() {
                return Ok(false);
            }
        }
    }
    let order = field::checked_pow(q, t as u32).ok_or(Error::FieldTooLarge(u64::MAX))? - 1;
    for r in field::prime_factors(order) {
        let pw = powmod(field, order / r, f);
        if pw == Poly::one() {
            return Ok(false);
        }
    }
    debug_assert_eq!(powmod(field, order, f), Poly::one());
    Ok(true)
}

/// All monic primitive polynomials of degree t over the field, ascending by
/// the packed coefficient integer c_0 + c_1 q + ... + c_{t-1} q^{t-1}.
pub fn enumerate_primitive(field: &FieldSpec, t: u32) -> Result<Vec<Poly>> {
    if t == 0 {
        return Err(Error::BadDimension("degree must be >= 1".into()));
    }
    let q = field.q();
    let count = field::checked_pow(q, t).ok_or(Error::FieldTooLarge(u64::MAX))?;
    if count > field::MAX_FIELD_SIZE {
        return Err(Error::FieldTooLarge(count));
    }
    let mut out = Vec::new();
    for low in 0..count {
        let mut codes = Vec::with_capacity(t as usize + 1);
        let mut v = low;
        for _ in 0..t {
            codes.push(v % q);
            v /= q;
        }
        codes.push(1);
        let f = Poly::from_codes(field, &codes)?;
        if is_primitive(field, &f)? {
            out.push(f);
        }
    }
    Ok(out)
}
