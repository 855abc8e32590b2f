//! Dense square matrices over an exact scalar ring.
//!
//! The scheme algebra only ever multiplies 0/1 adjacency matrices and
//! compares the products entrywise, so the matrix type is generic over any
//! `num_traits::Num` scalar. The crate root exposes [`IntMatrix`](crate::IntMatrix)
//! for integer work and [`RatMatrix`](crate::RatMatrix) for rational work.

use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_traits::Num;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: Num + Copy> Matrix<T> {
    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![T::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    /// The all-ones matrix `J`.
    pub fn ones(n: usize) -> Self {
        Self { n, data: vec![T::one(); n * n] }
    }

    /// 0/1 matrix of a relation given by its pair list.
    pub fn from_pairs<I>(n: usize, pairs: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut m = Self::zeros(n);
        for (x, y) in pairs {
            m[(x, y)] = T::one();
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Self { n, data }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self[(j, i)])
    }

    pub fn scale(&self, c: T) -> Self {
        Self { n: self.n, data: self.data.iter().map(|&v| v * c).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    /// Product that skips zero entries of the left factor; adjacency matrices
    /// are sparse enough that this dominates the naive triple loop.
    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "matrix order mismatch");
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                let rrow = rhs.row(k);
                let orow = &mut out.data[i * n..(i + 1) * n];
                for (o, &b) in orow.iter_mut().zip(rrow) {
                    if !b.is_zero() {
                        *o = *o + a * b;
                    }
                }
            }
        }
        out
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.n + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.n + j]
    }
}

impl<T: Num + Copy> Add for &Matrix<T> {
    type Output = Matrix<T>;

    fn add(self, rhs: Self) -> Matrix<T> {
        assert_eq!(self.n, rhs.n, "matrix order mismatch");
        Matrix {
            n: self.n,
            data: self.data.iter().zip(&rhs.data).map(|(&a, &b)| a + b).collect(),
        }
    }
}

impl<T: Num + Copy> Sub for &Matrix<T> {
    type Output = Matrix<T>;

    fn sub(self, rhs: Self) -> Matrix<T> {
        assert_eq!(self.n, rhs.n, "matrix order mismatch");
        Matrix {
            n: self.n,
            data: self.data.iter().zip(&rhs.data).map(|(&a, &b)| a - b).collect(),
        }
    }
}

impl<T: Num + Copy> Mul for &Matrix<T> {
    type Output = Matrix<T>;

    fn mul(self, rhs: Self) -> Matrix<T> {
        self.matmul(rhs)
    }
}
