//! Dense matrices over [`Scalar`] and exact elimination over the fields ℚ
//! and ℚ(ζ_N).

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Cyclotomic, Scalar};

/// Exact field arithmetic used by the elimination routines.
pub trait Field: Clone + PartialEq + fmt::Debug {
    fn is_zero_elem(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn fadd(&self, other: &Self) -> Self;
    fn fsub(&self, other: &Self) -> Self;
    fn fmul(&self, other: &Self) -> Self;
    /// Multiplicative inverse; only called on nonzero elements.
    fn finv(&self) -> Self;
}

impl Field for BigRational {
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn fadd(&self, other: &Self) -> Self {
        self + other
    }
    fn fsub(&self, other: &Self) -> Self {
        self - other
    }
    fn fmul(&self, other: &Self) -> Self {
        self * other
    }
    fn finv(&self) -> Self {
        self.recip()
    }
}

impl Field for Cyclotomic {
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn zero_like(&self) -> Self {
        Cyclotomic::zero(self.order()).expect("order already validated")
    }
    fn fadd(&self, other: &Self) -> Self {
        self + other
    }
    fn fsub(&self, other: &Self) -> Self {
        self - other
    }
    fn fmul(&self, other: &Self) -> Self {
        self * other
    }
    fn finv(&self) -> Self {
        self.inverse().expect("pivot is nonzero")
    }
}

/// Row-echelon basis of a growing subspace of F^n.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    len: usize,
    /// (pivot column, row scaled so the pivot is 1)
    rows: Vec<(usize, Vec<F>)>,
}

impl<F: Field> Echelon<F> {
    pub fn new(len: usize) -> Self {
        Echelon { len, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, mut v: Vec<F>) -> Vec<F> {
        assert_eq!(v.len(), self.len, "vector length");
        for (p, row) in &self.rows {
            if v[*p].is_zero_elem() {
                continue;
            }
            let c = v[*p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero_elem() {
                    *x = x.fsub(&c.fmul(r));
                }
            }
        }
        v
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: Vec<F>) -> bool {
        let v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero_elem()) else {
            return false;
        };
        let inv = v[p].finv();
        let row = v.iter().map(|x| x.fmul(&inv)).collect();
        self.rows.push((p, row));
        true
    }
}

pub fn rank<F: Field>(rows: Vec<Vec<F>>) -> usize {
    let Some(len) = rows.first().map(Vec::len) else {
        return 0;
    };
    let mut e = Echelon::new(len);
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// Product of square d×d matrices stored row-major.
pub fn square_mul<F: Field>(a: &[F], b: &[F], d: usize) -> Vec<F> {
    let zero = a.first().or(b.first()).map(F::zero_like);
    let mut out = vec![zero.expect("non-empty"); d * d];
    for i in 0..d {
        for k in 0..d {
            let x = &a[i * d + k];
            if x.is_zero_elem() {
                continue;
            }
            for j in 0..d {
                let y = &b[k * d + j];
                if !y.is_zero_elem() {
                    out[i * d + j] = out[i * d + j].fadd(&x.fmul(y));
                }
            }
        }
    }
    out
}

/// A rectangular matrix over [`Scalar`], row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    order: u32,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix{:?}", self.to_strings())
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.to_strings() {
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(order: u32, rows: usize, cols: usize) -> Result<Self> {
        Ok(Matrix { order, rows, cols, data: vec![Scalar::zero(order)?; rows * cols] })
    }

    pub fn identity(order: u32, d: usize) -> Result<Self> {
        let mut m = Self::zeros(order, d, d)?;
        for i in 0..d {
            m.data[i * d + i] = Scalar::one(order)?;
        }
        Ok(m)
    }

    pub fn from_rows(order: u32, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidParameter("ragged matrix".into()));
        }
        let data: Vec<Scalar> = rows.into_iter().flatten().collect();
        if let Some(s) = data.iter().find(|s| s.order() != order) {
            return Err(Error::OrderMismatch(s.order(), order));
        }
        Ok(Matrix { order, rows: r, cols: c, data })
    }

    pub fn from_int_rows(order: u32, rows: &[Vec<i64>]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| Scalar::from_int(order, v)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(order, rows)
    }

    pub fn diagonal_from(order: u32, diag: &[Scalar]) -> Result<Self> {
        let d = diag.len();
        let mut m = Self::zeros(order, d, d)?;
        for (i, s) in diag.iter().enumerate() {
            m.set(i, i, s.clone());
        }
        Ok(m)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        assert_eq!(v.order(), self.order, "cyclotomic order");
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    fn same_shape(&self, other: &Matrix) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch(self.order, other.order));
        }
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::InvalidParameter(format!(
                "shape {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(Matrix { data, ..self.clone() })
    }

    pub fn checked_sub(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Ok(Matrix { data, ..self.clone() })
    }

    pub fn checked_mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.order != other.order {
            return Err(Error::OrderMismatch(self.order, other.order));
        }
        if self.cols != other.rows {
            return Err(Error::InvalidParameter(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.order, self.rows, other.cols)?;
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] = &out.data[idx] + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix { data: self.data.iter().map(|a| a * c).collect(), ..self.clone() }
    }

    pub fn neg(&self) -> Matrix {
        Matrix { data: self.data.iter().map(|a| -a).collect(), ..self.clone() }
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn diagonal(&self) -> Vec<Scalar> {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).collect()
    }

    pub fn trace(&self) -> Scalar {
        self.diagonal().iter().fold(Scalar::zero(self.order).expect("valid order"), |acc, x| &acc + x)
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Matrix) -> Result<Matrix> {
        if self.order != other.order {
            return Err(Error::OrderMismatch(self.order, other.order));
        }
        let mut out = Matrix::zeros(self.order, self.rows + other.rows, self.cols + other.cols)?;
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        Ok(out)
    }

    /// Entries as rationals, if they all are.
    pub fn to_rational(&self) -> Option<Vec<BigRational>> {
        self.data.iter().map(Scalar::as_rational).collect()
    }

    /// Entries as elements of ℚ(ζ_N); fails when some entry involves q.
    pub fn to_cyclotomic(&self) -> Result<Vec<Cyclotomic>> {
        self.data
            .iter()
            .map(|s| s.as_constant().ok_or_else(|| Error::NotOverField(s.to_string())))
            .collect()
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect()).collect()
    }
}

/// Rank of a matrix whose entries lie in ℚ(ζ_N).
pub fn matrix_rank(m: &Matrix) -> Result<usize> {
    fn rows<F: Clone>(v: Vec<F>, cols: usize) -> Vec<Vec<F>> {
        v.chunks(cols).map(<[F]>::to_vec).collect()
    }
    if m.rows() == 0 || m.cols() == 0 {
        return Ok(0);
    }
    match m.to_rational() {
        Some(v) => Ok(rank(rows(v, m.cols()))),
        None => Ok(rank(rows(m.to_cyclotomic()?, m.cols()))),
    }
}

/// Dimension of the unital algebra generated by square matrices, by span
/// closure of the identity under left multiplication.
pub fn generated_algebra_dim(gens: &[Matrix]) -> Result<usize> {
    let Some(first) = gens.first() else {
        return Err(Error::InvalidParameter("no generators".into()));
    };
    let d = first.rows();
    if gens.iter().any(|g| !g.is_square() || g.rows() != d || g.order() != first.order()) {
        return Err(Error::InvalidParameter("generators must be square of equal size".into()));
    }
    if d == 0 {
        return Ok(0);
    }
    let rational: Option<Vec<Vec<BigRational>>> = gens.iter().map(Matrix::to_rational).collect();
    match rational {
        Some(g) => Ok(span_closure(&g, d, BigRational::one())),
        None => {
            let g = gens.iter().map(Matrix::to_cyclotomic).collect::<Result<Vec<_>>>()?;
            Ok(span_closure(&g, d, Cyclotomic::one(first.order())?))
        }
    }
}

fn span_closure<F: Field>(gens: &[Vec<F>], d: usize, one: F) -> usize {
    let zero = one.zero_like();
    let mut id = vec![zero; d * d];
    for i in 0..d {
        id[i * d + i] = one.clone();
    }
    let mut basis = Echelon::new(d * d);
    basis.insert(id.clone());
    let mut queue = vec![id];
    while let Some(m) = queue.pop() {
        if basis.rank() == d * d {
            break;
        }
        for g in gens {
            let p = square_mul(g, &m, d);
            if basis.insert(p.clone()) {
                queue.push(p);
            }
        }
    }
    basis.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(rows: &[Vec<i64>]) -> Matrix {
        Matrix::from_int_rows(4, rows).unwrap()
    }

    #[test]
    fn product_and_identity() {
        let a = ints(&[vec![1, 2], vec![3, 4]]);
        let i = Matrix::identity(4, 2).unwrap();
        assert_eq!(a.checked_mul(&i).unwrap(), a);
        assert_eq!(a.checked_mul(&a).unwrap(), ints(&[vec![7, 10], vec![15, 22]]));
        assert!(a.checked_mul(&ints(&[vec![1, 2, 3]])).is_err());
    }

    #[test]
    fn ranks() {
        assert_eq!(matrix_rank(&ints(&[vec![1, 2], vec![2, 4]])).unwrap(), 1);
        assert_eq!(matrix_rank(&ints(&[vec![0, 0], vec![0, 0]])).unwrap(), 0);
        let i = Scalar::zeta(4).unwrap();
        let one = Scalar::one(4).unwrap();
        let m = Matrix::from_rows(4, vec![vec![one.clone(), i.clone()], vec![i.clone(), -&one]]).unwrap();
        assert_eq!(matrix_rank(&m).unwrap(), 1);
        let q = Scalar::q_pow(4, 1).unwrap();
        let m = Matrix::from_rows(4, vec![vec![q]]).unwrap();
        assert!(matches!(matrix_rank(&m), Err(Error::NotOverField(_))));
    }

    #[test]
    fn burnside_dimensions() {
        let e12 = ints(&[vec![0, 1], vec![0, 0]]);
        let e21 = ints(&[vec![0, 0], vec![1, 0]]);
        assert_eq!(generated_algebra_dim(&[e12.clone(), e21]).unwrap(), 4);
        assert_eq!(generated_algebra_dim(&[e12]).unwrap(), 2);
        let diag = ints(&[vec![1, 0], vec![0, 2]]);
        assert_eq!(generated_algebra_dim(&[diag]).unwrap(), 2);
    }
}
