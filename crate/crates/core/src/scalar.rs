//! Exact coefficients in ℚ(ζ_N)[q, q⁻¹].
//!
//! A [`Cyclotomic`] is a residue of ℚ\[x\] modulo the `N`-th cyclotomic
//! polynomial Φ_N, stored as a trimmed coefficient vector. A [`Scalar`] is a
//! finite Laurent polynomial in the central indeterminate `q` whose
//! coefficients are cyclotomic numbers. Both types are kept in canonical
//! form at all times, so structural equality is mathematical equality.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The field ℚ(ζ_N), described by the monic integer polynomial Φ_N.
#[derive(Debug, PartialEq, Eq)]
pub struct CyclotomicField {
    order: u32,
    /// Φ_N, low degree first; the last entry is 1.
    modulus: Vec<BigInt>,
}

impl CyclotomicField {
    /// Returns the shared field for `ζ_order`.
    pub fn get(order: u32) -> Result<Arc<CyclotomicField>> {
        if order == 0 {
            return Err(Error::InvalidOrder(order));
        }
        static CACHE: OnceLock<RwLock<HashMap<u32, Arc<CyclotomicField>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
        if let Some(f) = cache.read().expect("field cache poisoned").get(&order) {
            return Ok(Arc::clone(f));
        }
        let field = Arc::new(CyclotomicField {
            order,
            modulus: cyclotomic_polynomial(order),
        });
        let mut guard = cache.write().expect("field cache poisoned");
        Ok(Arc::clone(guard.entry(order).or_insert(field)))
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Degree of Φ_N, i.e. Euler's totient of N.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[BigInt] {
        &self.modulus
    }
}

/// Φ_n with integer coefficients, low degree first.
fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    // x^n - 1 divided by Φ_d for every proper divisor d.
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            num = exact_div_monic(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

fn exact_div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qlen = rem.len() - dd;
    let mut quot = vec![BigInt::zero(); qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[k + j] -= &c * dj;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

// ---- dense rational vectors modulo Φ_N ----

fn trim(v: &mut Vec<BigRational>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

fn vec_add(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, s) in out.iter_mut().zip(short) {
        *o += s;
    }
    trim(&mut out);
    out
}

fn vec_neg(a: &[BigRational]) -> Vec<BigRational> {
    a.iter().map(|c| -c).collect()
}

fn reduce(mut v: Vec<BigRational>, field: &CyclotomicField) -> Vec<BigRational> {
    let deg = field.degree();
    while v.len() > deg {
        let top = v.pop().expect("nonempty");
        if top.is_zero() {
            continue;
        }
        let base = v.len() - deg;
        for (j, m) in field.modulus[..deg].iter().enumerate() {
            v[base + j] -= &top * BigRational::from_integer(m.clone());
        }
    }
    trim(&mut v);
    v
}

fn vec_mul(a: &[BigRational], b: &[BigRational], field: &CyclotomicField) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    reduce(out, field)
}

/// Polynomial remainder over ℚ, both inputs trimmed, `b` nonzero.
fn poly_rem(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead = b[db].clone();
    while r.len() > db && !r.is_empty() {
        let top = r.last().expect("nonempty").clone();
        let shift = r.len() - 1 - db;
        let f = &top / &lead;
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] -= &f * bj;
        }
        r.pop();
        trim(&mut r);
    }
    r
}

fn poly_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let db = b.len() - 1;
    if a.len() <= db {
        return (Vec::new(), a.to_vec());
    }
    let mut r = a.to_vec();
    let mut q = vec![BigRational::zero(); a.len() - db];
    let lead = b[db].clone();
    while r.len() > db {
        let top = r.last().expect("nonempty").clone();
        let shift = r.len() - 1 - db;
        let f = &top / &lead;
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] -= &f * bj;
        }
        q[shift] = f;
        r.pop();
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

fn poly_mul_plain(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Inverse of a nonzero residue via the extended Euclidean algorithm.
fn vec_inv(a: &[BigRational], field: &CyclotomicField) -> Option<Vec<BigRational>> {
    if a.is_empty() {
        return None;
    }
    let m: Vec<BigRational> = field
        .modulus
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect();
    // invariant: s_i * a ≡ r_i (mod m)
    let (mut r0, mut r1) = (m.clone(), poly_rem(a, &m));
    let (mut s0, mut s1): (Vec<BigRational>, Vec<BigRational>) =
        (Vec::new(), vec![BigRational::one()]);
    while !r1.is_empty() {
        let (q, r) = poly_divmod(&r0, &r1);
        let qs = poly_mul_plain(&q, &s1);
        let s2 = vec_add(&s0, &vec_neg(&qs));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    // r0 is the gcd, a nonzero constant since Φ_N is irreducible.
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].clone();
    let inv: Vec<BigRational> = s0.iter().map(|x| x / &c).collect();
    Some(reduce(inv, field))
}

fn zeta_power_vec(k: i64, field: &CyclotomicField) -> Vec<BigRational> {
    let n = i64::from(field.order);
    let k = k.mod_floor(&n) as usize;
    let mut v = vec![BigRational::zero(); k + 1];
    v[k] = BigRational::one();
    reduce(v, field)
}

fn check_same(a: &CyclotomicField, b: &CyclotomicField) -> Result<()> {
    if a.order == b.order {
        Ok(())
    } else {
        Err(Error::OrderMismatch(a.order, b.order))
    }
}

/// An element of ℚ(ζ_N).
#[derive(Clone)]
pub struct Cyclotomic {
    field: Arc<CyclotomicField>,
    coeffs: Vec<BigRational>,
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order && self.coeffs == other.coeffs
    }
}
impl Eq for Cyclotomic {}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic<{}>({})", self.field.order, self)
    }
}

impl Cyclotomic {
    fn from_vec(field: Arc<CyclotomicField>, coeffs: Vec<BigRational>) -> Self {
        let coeffs = reduce(coeffs, &field);
        Cyclotomic { field, coeffs }
    }

    pub fn zero(order: u32) -> Result<Self> {
        Ok(Cyclotomic { field: CyclotomicField::get(order)?, coeffs: Vec::new() })
    }

    pub fn one(order: u32) -> Result<Self> {
        Self::from_rational(order, BigRational::one())
    }

    pub fn from_rational(order: u32, r: BigRational) -> Result<Self> {
        let field = CyclotomicField::get(order)?;
        Ok(Self::from_vec(field, vec![r]))
    }

    /// ζ_N^k for any integer k.
    pub fn zeta_pow(order: u32, k: i64) -> Result<Self> {
        let field = CyclotomicField::get(order)?;
        let coeffs = zeta_power_vec(k, &field);
        Ok(Cyclotomic { field, coeffs })
    }

    /// Builds `∑ coeffs[k] ζ^k`, reducing modulo Φ_N.
    pub fn from_coeffs(order: u32, coeffs: Vec<BigRational>) -> Result<Self> {
        Ok(Self::from_vec(CyclotomicField::get(order)?, coeffs))
    }

    pub fn order(&self) -> u32 {
        self.field.order
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    /// Canonical coefficients in the power basis 1, ζ, …, ζ^{φ(N)-1}, trailing zeros removed.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// The rational value, if this number lies in ℚ.
    pub fn to_rational(&self) -> Option<BigRational> {
        match self.coeffs.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        check_same(&self.field, &other.field)?;
        Ok(Cyclotomic { field: Arc::clone(&self.field), coeffs: vec_add(&self.coeffs, &other.coeffs) })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        check_same(&self.field, &other.field)?;
        Ok(Cyclotomic {
            field: Arc::clone(&self.field),
            coeffs: vec_mul(&self.coeffs, &other.coeffs, &self.field),
        })
    }

    pub fn inverse(&self) -> Result<Self> {
        let coeffs = vec_inv(&self.coeffs, &self.field).ok_or(Error::DivisionByZero)?;
        Ok(Cyclotomic { field: Arc::clone(&self.field), coeffs })
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Cyclotomic::one(self.order())?;
        let mut b = base;
        let mut e = e.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            b = &b * &b;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Single-term numbers `r·ζ^k` (k < φ(N)), used for sign-aware printing.
    fn as_monomial(&self) -> Option<(BigRational, usize)> {
        let mut nz = self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero());
        let (k, c) = nz.next()?;
        if nz.next().is_some() {
            return None;
        }
        Some((c.clone(), k))
    }
}

macro_rules! forward_binop {
    ($t:ty, $tr:ident, $m:ident, $checked:ident) => {
        impl $tr<&$t> for &$t {
            type Output = $t;
            fn $m(self, rhs: &$t) -> $t {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<$t> for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                (&self).$m(&rhs)
            }
        }
    };
}

impl Cyclotomic {
    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }
}

forward_binop!(Cyclotomic, Add, add, checked_add);
forward_binop!(Cyclotomic, Sub, sub, checked_sub);
forward_binop!(Cyclotomic, Mul, mul, checked_mul);

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { field: Arc::clone(&self.field), coeffs: vec_neg(&self.coeffs) }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

fn zeta_name(order: u32) -> &'static str {
    if order == 4 {
        "i"
    } else {
        "zeta"
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Writes `|r|·ζ^k` without sign, omitting a unit rational factor.
fn fmt_abs_monomial(r: &BigRational, k: usize, order: u32) -> String {
    let z = zeta_name(order);
    let a = r.abs();
    match (k, a.is_one()) {
        (0, _) => fmt_rational(&a),
        (1, true) => z.to_string(),
        (1, false) => format!("{}*{z}", fmt_rational(&a)),
        (_, true) => format!("{z}^{k}"),
        (_, false) => format!("{}*{z}^{k}", fmt_rational(&a)),
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let body = fmt_abs_monomial(c, k, self.field.order);
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// An element of ℚ(ζ_N)[q, q⁻¹] in canonical sparse form.
#[derive(Clone)]
pub struct Scalar {
    field: Arc<CyclotomicField>,
    /// q-exponent → nonzero, reduced, trimmed cyclotomic coefficient vector.
    terms: BTreeMap<i64, Vec<BigRational>>,
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order && self.terms == other.terms
    }
}
impl Eq for Scalar {}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar<{}>({})", self.field.order, self)
    }
}

impl Scalar {
    pub fn zero(order: u32) -> Result<Self> {
        Ok(Scalar { field: CyclotomicField::get(order)?, terms: BTreeMap::new() })
    }

    pub fn one(order: u32) -> Result<Self> {
        Self::from_int(order, 1)
    }

    pub fn from_int(order: u32, n: i64) -> Result<Self> {
        Self::from_rational(order, BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(order: u32, r: BigRational) -> Result<Self> {
        Ok(Self::monomial(Cyclotomic::from_rational(order, r)?, 0))
    }

    /// ζ_N.
    pub fn zeta(order: u32) -> Result<Self> {
        Self::zeta_pow(order, 1)
    }

    pub fn zeta_pow(order: u32, k: i64) -> Result<Self> {
        Ok(Self::monomial(Cyclotomic::zeta_pow(order, k)?, 0))
    }

    /// q^m.
    pub fn q_pow(order: u32, m: i64) -> Result<Self> {
        Ok(Self::monomial(Cyclotomic::one(order)?, m))
    }

    /// `c · q^m`.
    pub fn monomial(c: Cyclotomic, m: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c.coeffs);
        }
        Scalar { field: c.field, terms }
    }

    /// Builds a scalar from arbitrary (possibly repeated, unreduced) terms.
    pub fn from_terms(order: u32, raw: impl IntoIterator<Item = (i64, Vec<BigRational>)>) -> Result<Self> {
        let field = CyclotomicField::get(order)?;
        let mut acc: BTreeMap<i64, Vec<BigRational>> = BTreeMap::new();
        for (m, v) in raw {
            let v = reduce(v, &field);
            let e = acc.entry(m).or_default();
            *e = vec_add(e, &v);
        }
        acc.retain(|_, v| !v.is_empty());
        Ok(Scalar { field, terms: acc })
    }

    pub fn order(&self) -> u32 {
        self.field.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.get(&0).is_some_and(|v| v.len() == 1 && v[0].is_one())
    }

    /// Iterates `(q-exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, Cyclotomic)> + '_ {
        self.terms
            .iter()
            .map(|(m, v)| (*m, Cyclotomic { field: Arc::clone(&self.field), coeffs: v.clone() }))
    }

    /// The value as an element of ℚ(ζ_N) when no power of q occurs.
    pub fn as_constant(&self) -> Option<Cyclotomic> {
        match self.terms.len() {
            0 => Some(Cyclotomic { field: Arc::clone(&self.field), coeffs: Vec::new() }),
            1 => self
                .terms
                .get(&0)
                .map(|v| Cyclotomic { field: Arc::clone(&self.field), coeffs: v.clone() }),
            _ => None,
        }
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        self.as_constant()?.to_rational()
    }

    /// The exponent range of q occurring in this scalar.
    pub fn q_degree_range(&self) -> Option<(i64, i64)> {
        Some((*self.terms.keys().next()?, *self.terms.keys().next_back()?))
    }

    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        check_same(&self.field, &other.field)?;
        let mut terms = self.terms.clone();
        for (m, v) in &other.terms {
            let e = terms.entry(*m).or_default();
            *e = vec_add(e, v);
            if e.is_empty() {
                terms.remove(m);
            }
        }
        Ok(Scalar { field: Arc::clone(&self.field), terms })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        check_same(&self.field, &other.field)?;
        let mut terms: BTreeMap<i64, Vec<BigRational>> = BTreeMap::new();
        for (m, a) in &self.terms {
            for (n, b) in &other.terms {
                let p = vec_mul(a, b, &self.field);
                let e = terms.entry(m + n).or_default();
                *e = vec_add(e, &p);
            }
        }
        terms.retain(|_, v| !v.is_empty());
        Ok(Scalar { field: Arc::clone(&self.field), terms })
    }

    /// Inverse of a unit `c·q^m` (c ≠ 0).
    pub fn unit_inverse(&self) -> Result<Self> {
        if self.terms.len() != 1 {
            return Err(Error::NotAUnit(self.to_string()));
        }
        let (m, v) = self.terms.iter().next().expect("one term");
        let inv = vec_inv(v, &self.field).ok_or_else(|| Error::NotAUnit(self.to_string()))?;
        let mut terms = BTreeMap::new();
        terms.insert(-m, inv);
        Ok(Scalar { field: Arc::clone(&self.field), terms })
    }

    /// Integer power; negative exponents require a unit.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.unit_inverse()? } else { self.clone() };
        let mut acc = Scalar::one(self.order())?;
        let mut b = base;
        let mut e = e.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        Ok(acc)
    }

    pub fn scale_rational(&self, r: &BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !r.is_zero() {
            for (m, v) in &self.terms {
                terms.insert(*m, v.iter().map(|c| c * r).collect());
            }
        }
        Scalar { field: Arc::clone(&self.field), terms }
    }

    /// Sign-aware rendering of a single signed monomial `±c·ζ^k·q^m`:
    /// returns `(negative, body)` with `body` the absolute value, or `None`
    /// when the scalar is not of that shape.
    pub(crate) fn split_sign(&self) -> Option<(bool, String)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, v) = self.terms.iter().next().expect("one term");
        let c = Cyclotomic { field: Arc::clone(&self.field), coeffs: v.clone() };
        let (r, k) = c.as_monomial()?;
        let z = fmt_abs_monomial(&r, k, self.field.order);
        let body = if *m == 0 {
            z
        } else if k == 0 && r.abs().is_one() {
            fmt_qpow(*m)
        } else {
            format!("{z}*{}", fmt_qpow(*m))
        };
        Some((r.is_negative(), body))
    }
}

fn fmt_qpow(m: i64) -> String {
    if m == 1 {
        "q".to_string()
    } else {
        format!("q^{m}")
    }
}

forward_binop!(Scalar, Add, add, checked_add);
forward_binop!(Scalar, Sub, sub, checked_sub);
forward_binop!(Scalar, Mul, mul, checked_mul);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            field: Arc::clone(&self.field),
            terms: self.terms.iter().map(|(m, v)| (*m, vec_neg(v))).collect(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, v) in &self.terms {
            let c = Cyclotomic { field: Arc::clone(&self.field), coeffs: v.clone() };
            let (neg, body) = match c.as_monomial() {
                Some((r, k)) => {
                    let z = fmt_abs_monomial(&r, k, self.field.order);
                    let body = if *m == 0 {
                        z
                    } else if k == 0 && r.abs().is_one() {
                        fmt_qpow(*m)
                    } else {
                        format!("{z}*{}", fmt_qpow(*m))
                    };
                    (r.is_negative(), body)
                }
                None if *m == 0 => (false, format!("({c})")),
                None => (false, format!("({c})*{}", fmt_qpow(*m))),
            };
            match (first, neg) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> Scalar {
        Scalar::from_int(4, n).unwrap()
    }

    #[test]
    fn cyclotomic_polynomials() {
        let as_i64 = |n| -> Vec<i64> {
            cyclotomic_polynomial(n).iter().map(|c| c.try_into().unwrap()).collect()
        };
        assert_eq!(as_i64(1), vec![-1, 1]);
        assert_eq!(as_i64(2), vec![1, 1]);
        assert_eq!(as_i64(3), vec![1, 1, 1]);
        assert_eq!(as_i64(4), vec![1, 0, 1]);
        assert_eq!(as_i64(6), vec![1, -1, 1]);
        assert_eq!(as_i64(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(as_i64(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = Scalar::zeta(4).unwrap();
        assert_eq!(&i * &i, int(-1));
    }

    #[test]
    fn q_times_q_inverse() {
        let q = Scalar::q_pow(4, 1).unwrap();
        let qi = Scalar::q_pow(4, -1).unwrap();
        assert!((&q * &qi).is_one());
    }

    #[test]
    fn difference_of_squares() {
        let q = Scalar::q_pow(4, 1).unwrap();
        let lhs = (&int(1) + &q) * (&int(1) - &q);
        assert_eq!(lhs, &int(1) - &Scalar::q_pow(4, 2).unwrap());
    }

    #[test]
    fn unit_inverse_examples() {
        assert_eq!(int(-1).unit_inverse().unwrap(), int(-1));
        let i = Scalar::zeta(4).unwrap();
        let a = &i * &Scalar::q_pow(4, 3).unwrap();
        let inv = a.unit_inverse().unwrap();
        assert_eq!(inv, -&(&i * &Scalar::q_pow(4, -3).unwrap()));
        assert!((&a * &inv).is_one());
        let one_plus_q = &int(1) + &Scalar::q_pow(4, 1).unwrap();
        assert!(matches!(one_plus_q.unit_inverse(), Err(Error::NotAUnit(_))));
        assert!(matches!(int(0).unit_inverse(), Err(Error::NotAUnit(_))));
    }

    #[test]
    fn non_rational_cyclotomic_inverse() {
        // (1 + ζ_8) is a unit of ℚ(ζ_8); check the product is exactly 1.
        let z = Scalar::zeta(8).unwrap();
        let a = &Scalar::one(8).unwrap() + &z;
        let inv = a.unit_inverse().unwrap();
        assert!((&a * &inv).is_one());
    }

    #[test]
    fn order_mismatch_is_an_error() {
        let a = Scalar::one(4).unwrap();
        let b = Scalar::one(3).unwrap();
        assert_eq!(a.checked_add(&b), Err(Error::OrderMismatch(4, 3)));
        assert_eq!(a.checked_mul(&b), Err(Error::OrderMismatch(4, 3)));
    }

    #[test]
    fn zeta_is_primitive() {
        for n in [1u32, 2, 3, 4, 5, 6, 8, 12] {
            let z = Scalar::zeta(n).unwrap();
            assert!(z.pow(i64::from(n)).unwrap().is_one(), "ζ_{n}^{n} = 1");
            for m in 1..n {
                assert!(!z.pow(i64::from(m)).unwrap().is_one(), "ζ_{n}^{m} ≠ 1");
            }
        }
    }

    #[test]
    fn from_terms_canonicalizes() {
        let r = |n: i64| BigRational::from_integer(n.into());
        // ζ_4^2 + 1 written unreduced is zero.
        let s = Scalar::from_terms(4, [(2, vec![r(1), r(0), r(1)])]).unwrap();
        assert!(s.is_zero());
        let t = Scalar::from_terms(4, [(1, vec![r(2)]), (1, vec![r(-1)]), (0, vec![])]).unwrap();
        assert_eq!(t, Scalar::q_pow(4, 1).unwrap());
        let again = Scalar::from_terms(4, t.terms().map(|(m, c)| (m, c.coeffs().to_vec()))).unwrap();
        assert_eq!(again, t);
    }

    #[test]
    fn display_forms() {
        let i = Scalar::zeta(4).unwrap();
        assert_eq!(int(-3).to_string(), "-3");
        assert_eq!((&i * &Scalar::q_pow(4, -3).unwrap()).to_string(), "i*q^-3");
        assert_eq!((&int(1) + &i).to_string(), "(1 + i)");
        assert_eq!((&int(1) - &Scalar::q_pow(4, 2).unwrap()).to_string(), "1 - q^2");
        assert_eq!(Scalar::zeta(3).unwrap().to_string(), "zeta");
    }
}
