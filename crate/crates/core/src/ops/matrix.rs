use std::fmt;

use crate::error::{Error, Result};
use crate::kernel::{Poly, RatFun, XPoly};

/// Matrix of a linear map on the monomial basis: column `j` holds the
/// coefficients of `T x^j`. May be rectangular when `T` raises degree.
#[derive(Clone, PartialEq)]
pub struct OperatorMatrix {
    rows: usize,
    cols: usize,
    data: Vec<RatFun>,
}

impl fmt::Debug for OperatorMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "OperatorMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl OperatorMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        OperatorMatrix {
            rows,
            cols,
            data: vec![RatFun::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, RatFun::one());
        }
        m
    }

    /// Build from column polynomials; each must fit in `rows` slots.
    pub fn from_columns(rows: usize, columns: &[XPoly]) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() > rows {
                return Err(Error::TruncationExceeded(format!(
                    "column {j} has degree {} but only {rows} rows",
                    col.deg()
                )));
            }
            for (i, c) in col.coeffs().iter().enumerate() {
                m.set(i, j, c.clone());
            }
        }
        Ok(m)
    }

    /// Matrix of `map` on `x^0 ..= x^(cols-1)`.
    pub fn of_map(rows: usize, cols: usize, map: impl Fn(&XPoly) -> Result<XPoly>) -> Result<Self> {
        let columns = (0..cols)
            .map(|j| map(&Poly::monomial(RatFun::one(), j)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_columns(rows, &columns)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &RatFun {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RatFun) {
        self.data[i * self.cols + j] = v;
    }

    pub fn column(&self, j: usize) -> XPoly {
        Poly::from_coeffs((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(RatFun::is_zero)
    }

    /// True if `T x^j` has degree at most `j` for every column.
    pub fn is_degree_non_increasing(&self) -> bool {
        (0..self.cols).all(|j| (j + 1..self.rows).all(|i| self.get(i, j).is_zero()))
    }

    /// Copy into a `rows x cols` frame, failing if a nonzero entry is dropped.
    pub fn resized(&self, rows: usize, cols: usize) -> Result<Self> {
        let mut m = Self::zeros(rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                if i < rows && j < cols {
                    m.set(i, j, v.clone());
                } else if !v.is_zero() {
                    return Err(Error::TruncationExceeded(format!(
                        "entry ({i}, {j}) does not fit in {rows}x{cols}"
                    )));
                }
            }
        }
        Ok(m)
    }

    fn same_shape(&self, rhs: &Self) -> Result<()> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch {
                left: format!("{}x{}", self.rows, self.cols),
                right: format!("{}x{}", rhs.rows, rhs.cols),
            });
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.same_shape(rhs)?;
        Ok(OperatorMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.same_shape(rhs)?;
        Ok(OperatorMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                left: format!("{}x{}", self.rows, self.cols),
                right: format!("{}x{}", rhs.rows, rhs.cols),
            });
        }
        let mut m = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let v = m.get(i, j) + &(a * b);
                        m.set(i, j, v);
                    }
                }
            }
        }
        Ok(m)
    }

    /// Apply to a polynomial of degree below `cols`.
    pub fn apply(&self, p: &XPoly) -> Result<XPoly> {
        if p.len() > self.cols {
            return Err(Error::TruncationExceeded(format!(
                "degree {} exceeds matrix domain {}",
                p.deg(),
                self.cols - 1
            )));
        }
        let mut out = vec![RatFun::zero(); self.rows];
        for (j, c) in p.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, slot) in out.iter_mut().enumerate() {
                let a = self.get(i, j);
                if !a.is_zero() {
                    *slot = &*slot + &(a * c);
                }
            }
        }
        Ok(Poly::from_coeffs(out))
    }

    /// Rows of canonical coefficient strings.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect())
            .collect()
    }
}
