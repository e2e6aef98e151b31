//! Finite-dimensional modules over the twisted enveloping algebra with
//! generators X, Y, Z and relations XZ + ZX = 2X, YZ + ZY = −2Y,
//! X² − Y² = Z; and twisted group algebras k_σ[Γ].

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::cocycle::TwoCocycle;
use crate::error::{Error, Result};
use crate::group::{GradingGroup, GroupElement};
use crate::linalg::{generated_algebra_dim, rank, Field, Matrix};
use crate::scalar::{Cyclotomic, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    E,
    A,
    B,
    /// Anything not built by the family constructors.
    Other,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::E => "E",
            Family::A => "A",
            Family::B => "B",
            Family::Other => "other",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ModuleLabel {
    pub family: Family,
    pub n: usize,
    pub sign: Option<Sign>,
}

impl fmt::Display for ModuleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.family, self.n)?;
        if let Some(s) = self.sign {
            write!(f, "^{s}")?;
        }
        Ok(())
    }
}

/// X, Y, Z acting on k^d; column j is the image of basis vector j.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixModule {
    label: ModuleLabel,
    x: Matrix,
    y: Matrix,
    z: Matrix,
}

/// Exact check of XZ + ZX = 2X, YZ + ZY = −2Y and X² − Y² = Z.
pub fn relations_hold(x: &Matrix, y: &Matrix, z: &Matrix) -> Result<bool> {
    let two = Scalar::from_int(x.order(), 2)?;
    let r1 = x.checked_mul(z)?.checked_add(&z.checked_mul(x)?)?.checked_sub(&x.scale(&two))?;
    let r2 = y.checked_mul(z)?.checked_add(&z.checked_mul(y)?)?.checked_add(&y.scale(&two))?;
    let r3 = x.checked_mul(x)?.checked_sub(&y.checked_mul(y)?)?.checked_sub(z)?;
    Ok(r1.is_zero() && r2.is_zero() && r3.is_zero())
}

impl MatrixModule {
    /// Validates shapes, that Z is diagonal and that the relations hold.
    pub fn new(label: ModuleLabel, x: Matrix, y: Matrix, z: Matrix) -> Result<Self> {
        let d = x.rows();
        for (name, m) in [("X", &x), ("Y", &y), ("Z", &z)] {
            if !m.is_square() || m.rows() != d {
                return Err(Error::InvalidModule(format!("{label}: {name} is not {d}x{d}")));
            }
        }
        if d == 0 {
            return Err(Error::InvalidModule(format!("{label}: zero-dimensional")));
        }
        if !z.is_diagonal() {
            return Err(Error::InvalidModule(format!("{label}: Z is not diagonal")));
        }
        if !relations_hold(&x, &y, &z)? {
            return Err(Error::InvalidModule(format!("{label}: relations fail")));
        }
        Ok(MatrixModule { label, x, y, z })
    }

    pub fn label(&self) -> &ModuleLabel {
        &self.label
    }

    pub fn dim(&self) -> usize {
        self.x.rows()
    }

    pub fn order(&self) -> u32 {
        self.x.order()
    }

    pub fn x(&self) -> &Matrix {
        &self.x
    }

    pub fn y(&self) -> &Matrix {
        &self.y
    }

    pub fn z(&self) -> &Matrix {
        &self.z
    }

    pub fn spectrum(&self) -> Vec<Scalar> {
        self.z.diagonal()
    }

    /// Z-eigenvalues as integers, in basis order.
    pub fn integral_spectrum(&self) -> Result<Vec<i64>> {
        self.spectrum()
            .iter()
            .map(|s| {
                s.as_rational()
                    .filter(BigRational::is_integer)
                    .and_then(|r| r.to_integer().to_i64())
                    .ok_or_else(|| Error::InvalidModule(format!("{}: eigenvalue {s} is not an integer", self.label)))
            })
            .collect()
    }

    pub fn direct_sum(&self, other: &MatrixModule) -> Result<MatrixModule> {
        let label = ModuleLabel { family: Family::Other, n: self.dim() + other.dim(), sign: None };
        MatrixModule::new(
            label,
            self.x.direct_sum(&other.x)?,
            self.y.direct_sum(&other.y)?,
            self.z.direct_sum(&other.z)?,
        )
    }
}

pub fn verify_relations(m: &MatrixModule) -> Result<bool> {
    relations_hold(m.x(), m.y(), m.z())
}

/// Fills X, Y, Z from (column, row, value) triples.
struct Builder {
    order: u32,
    x: Matrix,
    y: Matrix,
    z: Matrix,
}

impl Builder {
    fn new(order: u32, d: usize) -> Result<Self> {
        Ok(Builder {
            order,
            x: Matrix::zeros(order, d, d)?,
            y: Matrix::zeros(order, d, d)?,
            z: Matrix::zeros(order, d, d)?,
        })
    }

    fn set(m: &mut Matrix, order: u32, from: usize, to: usize, v: i64) -> Result<()> {
        m.set(to, from, Scalar::from_int(order, v)?);
        Ok(())
    }

    fn x(&mut self, from: usize, to: usize, v: i64) -> Result<()> {
        Self::set(&mut self.x, self.order, from, to, v)
    }

    fn y(&mut self, from: usize, to: usize, v: i64) -> Result<()> {
        Self::set(&mut self.y, self.order, from, to, v)
    }

    fn z(&mut self, at: usize, v: i64) -> Result<()> {
        Self::set(&mut self.z, self.order, at, at, v)
    }

    fn finish(self, label: ModuleLabel) -> Result<MatrixModule> {
        let m = MatrixModule::new(label, self.x, self.y, self.z)?;
        m.integral_spectrum()?;
        Ok(m)
    }
}

fn to_i64(n: usize) -> Result<i64> {
    i64::try_from(n).map_err(|_| Error::InvalidParameter(format!("n = {n} too large")))
}

/// E_n, of dimension 2n + 1, in the basis ordered by decreasing Z-eigenvalue
/// (for n = 2: v_0, w_1, v_1, w_0, v_2).
pub fn build_e(n: usize, order: u32) -> Result<MatrixModule> {
    let ni = to_i64(n)?;
    // (is_w, k, eigenvalue)
    let mut basis: Vec<(bool, usize, i64)> = (0..=n).map(|k| (false, k, 2 * ni - 4 * k as i64)).collect();
    basis.extend((0..n).map(|k| (true, k, 4 * k as i64 + 2 - 2 * ni)));
    basis.sort_by_key(|&(_, _, e)| std::cmp::Reverse(e));
    let idx = |w: bool, k: usize| basis.iter().position(|&(bw, bk, _)| bw == w && bk == k).expect("basis vector");
    let (v, w) = (|k| idx(false, k), |k| idx(true, k));

    let mut b = Builder::new(order, 2 * n + 1)?;
    for (i, &(_, _, e)) in basis.iter().enumerate() {
        b.z(i, e)?;
    }
    for k in 0..n {
        let ki = k as i64;
        b.x(v(k), w(k), 1)?;
        b.x(w(k), v(k), 2 * ni + ki * (4 * ni - 2 - 4 * ki))?;
        b.y(w(k), v(k + 1), 1)?;
    }
    for k in 1..=n {
        let ki = k as i64;
        b.y(v(k), w(k - 1), ki * (4 * ni + 2 - 4 * ki))?;
    }
    b.finish(ModuleLabel { family: Family::E, n, sign: None })
}

/// A_n^±, of dimension n ≥ 1, basis v_0, …, v_{n−1}.
pub fn build_a(n: usize, sign: Sign, order: u32) -> Result<MatrixModule> {
    if n == 0 {
        return Err(Error::InvalidParameter("A_n needs n >= 1".into()));
    }
    let ni = to_i64(n)?;
    let s = sign.value();
    let m = n / 2;
    let w = |k: usize| n - 1 - k;
    let mut b = Builder::new(order, n)?;
    for k in 0..n {
        b.z(k, 2 * ni - 1 - 4 * k as i64)?;
    }
    for k in 0..m {
        let ki = k as i64;
        b.x(k, w(k), 1)?;
        b.x(w(k), k, 2 * ni - 1 + 4 * ki * (ni - ki - 1))?;
    }
    let (j_end, k_end) = if n.is_multiple_of(2) { (m.saturating_sub(1), m) } else { (m, m + 1) };
    for j in 0..j_end {
        b.y(w(j), j + 1, 1)?;
    }
    for k in 1..k_end {
        let ki = k as i64;
        b.y(k, w(k - 1), 4 * ki * (ni - ki))?;
    }
    if n.is_multiple_of(2) {
        b.y(m, m, s * ni)?;
    } else {
        b.x(m, m, s * ni)?;
    }
    b.finish(ModuleLabel { family: Family::A, n, sign: Some(sign) })
}

/// B_n^±, of dimension n + 1, basis v_0, …, v_{n−1}, u' with u' = (2n+1)·u,
/// so that Y v_0 = u' and Y u' = (2n+1) v_0.
pub fn build_b(n: usize, sign: Sign, order: u32) -> Result<MatrixModule> {
    let s = sign.value();
    if n == 0 {
        let mut b = Builder::new(order, 1)?;
        b.z(0, -1)?;
        b.y(0, 0, s)?;
        return b.finish(ModuleLabel { family: Family::B, n, sign: Some(sign) });
    }
    let ni = to_i64(n)?;
    let m = n / 2;
    let u = n;
    // w_k = v_{n−1−k}, with w_{−1} = u
    let w = |k: i64| if k < 0 { u } else { n - 1 - k as usize };
    let mut b = Builder::new(order, n + 1)?;
    for k in 0..n {
        b.z(k, 2 * ni - 1 - 4 * k as i64)?;
    }
    b.z(u, -2 * ni - 1)?;
    b.y(0, u, 1)?;
    b.y(u, 0, 2 * ni + 1)?;
    for k in 0..m {
        let ki = k as i64;
        b.x(k, w(ki), 1)?;
        b.x(w(ki), k, 4 * ni + 4 * ki * (ni - ki - 1))?;
    }
    let (j_end, k_end) = if n.is_multiple_of(2) { (m.saturating_sub(1), m) } else { (m, m + 1) };
    for j in 0..j_end {
        b.y(w(j as i64), j + 1, 1)?;
    }
    for k in 1..k_end {
        let ki = k as i64;
        b.y(k, w(ki - 1), 2 * ni + 1 + 4 * ki * (ni - ki))?;
    }
    if n.is_multiple_of(2) {
        b.y(m, m, s * (ni + 1))?;
    } else {
        b.x(m, m, s * (ni + 1))?;
    }
    b.finish(ModuleLabel { family: Family::B, n, sign: Some(sign) })
}

/// Every module of the three families with parameter ≤ `max_n`.
pub fn all_modules(max_n: usize, order: u32) -> Result<Vec<MatrixModule>> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        out.push(build_e(n, order)?);
        for s in Sign::BOTH {
            if n >= 1 {
                out.push(build_a(n, s, order)?);
            }
            out.push(build_b(n, s, order)?);
        }
    }
    Ok(out)
}

/// Burnside: X, Y, Z generate all of End(k^d).
pub fn is_simple(m: &MatrixModule) -> Result<bool> {
    let d = m.dim();
    Ok(generated_algebra_dim(&[m.x().clone(), m.y().clone(), m.z().clone()])? == d * d)
}

/// Whether Z has pairwise distinct diagonal entries.
pub fn multiplicity_free(m: &MatrixModule) -> bool {
    let spec = m.spectrum();
    spec.iter().enumerate().all(|(i, a)| spec[..i].iter().all(|b| a != b))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LadderCase {
    /// Y e_{λ_0} = 0
    One,
    /// Y e_{λ_0} ≠ 0
    Two,
}

impl LadderCase {
    pub fn number(self) -> u8 {
        match self {
            LadderCase::One => 1,
            LadderCase::Two => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LadderData {
    pub lambda0: i64,
    pub case: LadderCase,
    /// Eigenvalues of X² and Y² on each e_λ.
    pub x2: BTreeMap<i64, Scalar>,
    pub y2: BTreeMap<i64, Scalar>,
    /// Smallest n at which e_{λ_0 − 4n} or e_{2 − λ_0 + 4n} vanishes.
    pub n_star: usize,
    /// c_0, …, c_{n*}.
    pub c: Vec<Scalar>,
    /// X² and Y² are diagonal in the Z-eigenbasis.
    pub squares_diagonal: bool,
    /// x2(λ) − y2(λ) = λ for every eigenvalue.
    pub base_ok: bool,
    /// Y² on e_{λ_0−4k} and on e_{4k−2−λ_0} agree where both exist.
    pub c_consistent: bool,
    /// c_{k+1} = c_k + 2λ_0 − 8k − 2 for k < n*.
    pub recurrence_ok: bool,
    /// c_k = c_1 + 2(k−1)(λ_0 − 2k − 1) for k ≤ n*; `None` when n* = 0.
    pub ck_ok: Option<bool>,
    /// The closed form of the applicable case for k ≤ n*.
    pub closed_form_ok: bool,
}

impl LadderData {
    pub fn all_ok(&self) -> bool {
        self.squares_diagonal
            && self.base_ok
            && self.c_consistent
            && self.recurrence_ok
            && self.ck_ok.unwrap_or(true)
            && self.closed_form_ok
    }
}

pub fn ladder(m: &MatrixModule) -> Result<LadderData> {
    let order = m.order();
    let spec = m.integral_spectrum()?;
    if !multiplicity_free(m) {
        return Err(Error::InvalidModule(format!("{}: Z-spectrum has repeated eigenvalues", m.label())));
    }
    let at: BTreeMap<i64, usize> = spec.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let x2m = m.x().checked_mul(m.x())?;
    let y2m = m.y().checked_mul(m.y())?;
    let x2: BTreeMap<i64, Scalar> = at.iter().map(|(&e, &i)| (e, x2m.get(i, i).clone())).collect();
    let y2: BTreeMap<i64, Scalar> = at.iter().map(|(&e, &i)| (e, y2m.get(i, i).clone())).collect();
    let int = |v: i64| Scalar::from_int(order, v);

    let base_ok = at.keys().all(|&e| int(e).map(|v| &x2[&e] - &y2[&e] == v).unwrap_or(false));
    let lambda0 = *at.keys().next_back().expect("non-empty spectrum");
    let top = at[&lambda0];
    let case = if (0..m.dim()).all(|r| m.y().get(r, top).is_zero()) { LadderCase::One } else { LadderCase::Two };

    let exists = |e: i64| at.contains_key(&e);
    let mut n_star = 0usize;
    loop {
        let lam = lambda0 - 4 * n_star as i64;
        if !exists(lam) || !exists(2 - lam) {
            break;
        }
        n_star += 1;
    }
    let zero = Scalar::zero(order)?;
    let c_at = |k: i64| y2.get(&(4 * k - 2 - lambda0)).cloned().unwrap_or_else(|| zero.clone());
    let c_alt = |k: i64| y2.get(&(lambda0 - 4 * k)).cloned().unwrap_or_else(|| zero.clone());
    let c: Vec<Scalar> = (0..=n_star as i64).map(c_at).collect();
    let c_consistent = (0..=n_star as i64 + 1).all(|k| c_at(k) == c_alt(k));

    let recurrence_ok = (0..n_star).all(|k| {
        let ki = k as i64;
        int(2 * lambda0 - 8 * ki - 2).map(|d| c[k + 1] == &c[k] + &d).unwrap_or(false)
    });
    let ck_ok = (n_star >= 1).then(|| {
        (0..=n_star).all(|k| {
            let ki = k as i64;
            int(2 * (ki - 1) * (lambda0 - 2 * ki - 1)).map(|d| c[k] == &c_at(1) + &d).unwrap_or(false)
        })
    });
    let closed = |k: i64| match case {
        LadderCase::One => 2 * (k * lambda0 - (k - 1) * (2 * k + 1) - 1),
        LadderCase::Two => (2 * k + 1) * lambda0 - 2 * (k - 1) * (2 * k + 1),
    };
    let closed_form_ok = (0..=n_star).all(|k| int(closed(k as i64)).map(|v| c[k] == v).unwrap_or(false));

    Ok(LadderData {
        lambda0,
        case,
        x2,
        y2,
        n_star,
        c,
        squares_diagonal: x2m.is_diagonal() && y2m.is_diagonal(),
        base_ok,
        c_consistent,
        recurrence_ok,
        ck_ok,
        closed_form_ok,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmnibusReport {
    /// ZX = X(2I − Z)
    pub x_shifts: bool,
    /// ZY = Y(−2I − Z)
    pub y_shifts: bool,
    pub multiplicity_free: bool,
    /// X e_{λ_0} ≠ 0; `None` when dim < 3.
    pub top_not_killed: Option<bool>,
}

impl OmnibusReport {
    pub fn all_ok(&self) -> bool {
        self.x_shifts && self.y_shifts && self.multiplicity_free && self.top_not_killed.unwrap_or(true)
    }
}

pub fn check_omnibus(m: &MatrixModule) -> Result<OmnibusReport> {
    let order = m.order();
    let d = m.dim();
    let id = Matrix::identity(order, d)?;
    let two = Scalar::from_int(order, 2)?;
    let shift_x = id.scale(&two).checked_sub(m.z())?;
    let shift_y = id.scale(&-&two).checked_sub(m.z())?;
    let x_shifts = m.z().checked_mul(m.x())? == m.x().checked_mul(&shift_x)?;
    let y_shifts = m.z().checked_mul(m.y())? == m.y().checked_mul(&shift_y)?;
    let top_not_killed = if d >= 3 {
        let spec = m.integral_spectrum()?;
        let (top, _) = spec.iter().enumerate().max_by_key(|(_, &e)| e).expect("non-empty");
        Some((0..d).any(|r| !m.x().get(r, top).is_zero()))
    } else {
        None
    };
    Ok(OmnibusReport { x_shifts, y_shifts, multiplicity_free: multiplicity_free(m), top_not_killed })
}

fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let (n, d) = (r.numer().sqrt(), r.denom().sqrt());
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| BigRational::new(n, d))
}

fn signed_roots(r: &BigRational) -> Vec<BigRational> {
    match rational_sqrt(r) {
        Some(s) if s.is_zero() => vec![s],
        Some(s) => vec![s.clone(), -s],
        None => Vec::new(),
    }
}

/// All one-dimensional modules, found by solving xz + zx = 2x,
/// yz + zy = −2y, x² − y² = z over ℚ: the first two force x = 0 or z = 1,
/// and y = 0 or z = −1.
pub fn classify_dim1(order: u32) -> Result<Vec<MatrixModule>> {
    let zero = BigRational::zero();
    let one = BigRational::one();
    let mut candidates: Vec<[BigRational; 3]> = Vec::new();
    // x = 0, y = 0
    candidates.push([zero.clone(), zero.clone(), zero.clone()]);
    // x = 0, z = −1: −y² = −1
    for y in signed_roots(&one) {
        candidates.push([zero.clone(), y, -one.clone()]);
    }
    // z = 1, y = 0: x² = 1
    for x in signed_roots(&one) {
        candidates.push([x, zero.clone(), one.clone()]);
    }
    // z = 1 and z = −1 together is impossible.

    let two = BigRational::from_integer(BigInt::from(2));
    let solves = |[x, y, z]: &[BigRational; 3]| {
        &(x * z) * &two == x * &two && &(y * z) * &two == -(y * &two) && &(x * x) - &(y * y) == *z
    };
    candidates.retain(|c| solves(c));
    candidates.sort();
    candidates.dedup();

    let known: Vec<MatrixModule> = vec![
        build_a(1, Sign::Plus, order)?,
        build_a(1, Sign::Minus, order)?,
        build_b(0, Sign::Plus, order)?,
        build_b(0, Sign::Minus, order)?,
        build_e(0, order)?,
    ];
    let mut out = Vec::new();
    for [x, y, z] in candidates {
        let mat = |r: BigRational| Scalar::from_rational(order, r).and_then(|s| Matrix::from_rows(order, vec![vec![s]]));
        let (mx, my, mz) = (mat(x)?, mat(y)?, mat(z)?);
        let label = known
            .iter()
            .find(|k| (k.x(), k.y(), k.z()) == (&mx, &my, &mz))
            .map(|k| k.label().clone())
            .unwrap_or(ModuleLabel { family: Family::Other, n: 1, sign: None });
        out.push(MatrixModule::new(label, mx, my, mz)?);
    }
    out.sort_by(|a, b| a.label().cmp(b.label()));
    Ok(out)
}

/// Isomorphism invariant: sorted Z-spectrum plus the eigenvalue of X on
/// e_1 and of Y on e_{−1} (the only eigenvectors X or Y can fix).
fn invariant(m: &MatrixModule) -> Result<(Vec<i64>, Option<String>, Option<String>)> {
    let spec = m.integral_spectrum()?;
    let pos = |e: i64| spec.iter().position(|&v| v == e);
    let xfix = pos(1).map(|i| m.x().get(i, i).to_string());
    let yfix = pos(-1).map(|i| m.y().get(i, i).to_string());
    let mut sorted = spec.clone();
    sorted.sort_unstable();
    Ok((sorted, xfix, yfix))
}

/// Whether the listed modules are pairwise distinguished by their
/// invariants.
pub fn z_spectra_distinct(mods: &[MatrixModule]) -> Result<bool> {
    let inv = mods.iter().map(invariant).collect::<Result<Vec<_>>>()?;
    Ok(inv.iter().enumerate().all(|(i, a)| inv[..i].iter().all(|b| a != b)))
}

/// k_σ[Γ]: basis Γ, product g·h = σ(g, h)·(g + h).
#[derive(Clone, Debug)]
pub struct TwistedGroupAlgebra {
    group: GradingGroup,
    elements: Vec<GroupElement>,
    /// table[i][j] = (index of g_i + g_j, σ(g_i, g_j))
    table: Vec<Vec<(usize, Cyclotomic)>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssociativityCheck {
    pub associative: bool,
    pub triples_checked: usize,
    pub witness: Option<(GroupElement, GroupElement, GroupElement)>,
}

impl TwistedGroupAlgebra {
    pub fn new(sigma: &TwoCocycle) -> Result<Self> {
        let group = sigma.group().clone();
        let elements = group.enumerate()?;
        let mut table = Vec::with_capacity(elements.len());
        for g in &elements {
            let mut row = Vec::with_capacity(elements.len());
            for h in &elements {
                let s = sigma.value(g, h)?;
                let c = s.as_constant().ok_or_else(|| Error::NotOverField(s.to_string()))?;
                let k = group.index_of(&group.add(g, h)?)?;
                row.push((k, c));
            }
            table.push(row);
        }
        Ok(TwistedGroupAlgebra { group, elements, table })
    }

    pub fn group(&self) -> &GradingGroup {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    /// g_i · g_j as (basis index, coefficient).
    pub fn product(&self, i: usize, j: usize) -> &(usize, Cyclotomic) {
        &self.table[i][j]
    }

    fn zero(&self) -> Cyclotomic {
        self.table[0][0].1.zero_like()
    }

    /// Matrix of left multiplication by g_i (column j = g_i·g_j).
    pub fn left_mult(&self, i: usize) -> Vec<Vec<Cyclotomic>> {
        let n = self.dim();
        let mut m = vec![vec![self.zero(); n]; n];
        for j in 0..n {
            let (k, c) = &self.table[i][j];
            m[*k][j] = c.clone();
        }
        m
    }

    /// Gram matrix of T(u, v) = tr(L_u L_v) on the basis.
    pub fn trace_form(&self) -> Vec<Vec<Cyclotomic>> {
        let n = self.dim();
        let ls: Vec<_> = (0..n).map(|i| self.left_mult(i)).collect();
        let mut t = vec![vec![self.zero(); n]; n];
        for a in 0..n {
            for b in 0..n {
                let mut tr = self.zero();
                for i in 0..n {
                    for k in 0..n {
                        let x = &ls[a][i][k];
                        if !x.is_zero() && !ls[b][k][i].is_zero() {
                            tr = &tr + &(x * &ls[b][k][i]);
                        }
                    }
                }
                t[a][b] = tr;
            }
        }
        t
    }

    pub fn trace_form_rank(&self) -> usize {
        rank(self.trace_form())
    }

    /// Nondegenerate trace form (characteristic zero).
    pub fn is_semisimple(&self) -> bool {
        self.trace_form_rank() == self.dim()
    }

    /// dim of {Σ c_g g : commutes with every basis element}.
    pub fn center_dim(&self) -> usize {
        let n = self.dim();
        let mut rows = Vec::new();
        for h in 0..n {
            // coefficient of basis element k in (g·h − h·g), as a function of g
            let mut block = vec![vec![self.zero(); n]; n];
            for g in 0..n {
                let (k1, c1) = &self.table[g][h];
                block[*k1][g] = &block[*k1][g] + c1;
                let (k2, c2) = &self.table[h][g];
                block[*k2][g] = &block[*k2][g] - c2;
            }
            rows.extend(block);
        }
        n - rank(rows)
    }

    /// (g·h)·k = g·(h·k) on all basis triples.
    pub fn check_associative(&self) -> AssociativityCheck {
        let n = self.dim();
        let mut checked = 0;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    checked += 1;
                    let (ab, s1) = &self.table[a][b];
                    let (_, s2) = &self.table[*ab][c];
                    let (bc, t1) = &self.table[b][c];
                    let (_, t2) = &self.table[a][*bc];
                    if s1 * s2 != t1 * t2 {
                        return AssociativityCheck {
                            associative: false,
                            triples_checked: checked,
                            witness: Some((
                                self.elements[a].clone(),
                                self.elements[b].clone(),
                                self.elements[c].clone(),
                            )),
                        };
                    }
                }
            }
        }
        AssociativityCheck { associative: true, triples_checked: checked, witness: None }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(rows: &[Vec<i64>]) -> Matrix {
        Matrix::from_int_rows(4, rows).unwrap()
    }

    #[test]
    fn dimensions() {
        for n in 0..6 {
            assert_eq!(build_e(n, 4).unwrap().dim(), 2 * n + 1);
            assert_eq!(build_b(n, Sign::Minus, 4).unwrap().dim(), n + 1);
            if n > 0 {
                assert_eq!(build_a(n, Sign::Plus, 4).unwrap().dim(), n);
            }
        }
        assert!(build_a(0, Sign::Plus, 4).is_err());
    }

    #[test]
    fn a3_by_hand() {
        let m = build_a(3, Sign::Plus, 4).unwrap();
        assert_eq!(m.x(), &ints(&[vec![0, 0, 5], vec![0, 3, 0], vec![1, 0, 0]]));
        assert_eq!(m.y(), &ints(&[vec![0, 0, 0], vec![0, 0, 1], vec![0, 8, 0]]));
        assert_eq!(m.z(), &ints(&[vec![5, 0, 0], vec![0, 1, 0], vec![0, 0, -3]]));
    }

    #[test]
    fn flipped_z_breaks_relations() {
        let m = build_a(2, Sign::Plus, 4).unwrap();
        assert!(!relations_hold(m.x(), m.y(), &m.z().neg()).unwrap());
        let bad = MatrixModule::new(m.label().clone(), m.x().clone(), m.y().clone(), m.z().neg());
        assert!(matches!(bad, Err(Error::InvalidModule(_))));
    }

    #[test]
    fn direct_sum_is_not_simple() {
        let e0 = build_e(0, 4).unwrap();
        let s = e0.direct_sum(&e0).unwrap();
        assert!(!is_simple(&s).unwrap());
        assert!(matches!(ladder(&s), Err(Error::InvalidModule(_))));
    }

    #[test]
    fn rational_roots() {
        let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        assert_eq!(rational_sqrt(&r(9, 4)), Some(r(3, 2)));
        assert_eq!(rational_sqrt(&r(2, 1)), None);
        assert_eq!(rational_sqrt(&r(-1, 1)), None);
        assert_eq!(signed_roots(&r(0, 1)).len(), 1);
    }
}
