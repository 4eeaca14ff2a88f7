use super::subspace::{rref, Subspace};
use super::{zero_vector, Field, LabeledSpace, Scalar, Vector};
use crate::error::{Error, Result};

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_rows(field: Field, rows: Vec<Vector>, cols: usize) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::ShapeMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            if let Some(bad) = row.iter().find(|s| s.field() != field) {
                return Err(Error::ShapeMismatch(format!(
                    "entry {bad} does not belong to {field}"
                )));
            }
            data.extend(row);
        }
        Ok(Self {
            rows: n,
            cols,
            data,
        })
    }

    pub fn from_columns(field: Field, rows: usize, columns: &[Vector]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column {c} has the wrong length");
            for (r, x) in col.iter().enumerate() {
                m.data[r * m.cols + c] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }
}

/// A linear map between labeled spaces. Entry `(r, c)` is the coefficient of codomain basis
/// vector `r` in the image of domain basis vector `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinMap {
    field: Field,
    domain: LabeledSpace,
    codomain: LabeledSpace,
    matrix: Matrix,
}

impl LinMap {
    pub fn new(
        field: Field,
        domain: LabeledSpace,
        codomain: LabeledSpace,
        matrix: Matrix,
    ) -> Result<Self> {
        if matrix.rows != codomain.dim() || matrix.cols != domain.dim() {
            return Err(Error::ShapeMismatch(format!(
                "matrix is {}×{} but the map goes from dimension {} to {}",
                matrix.rows,
                matrix.cols,
                domain.dim(),
                codomain.dim()
            )));
        }
        Ok(Self {
            field,
            domain,
            codomain,
            matrix,
        })
    }

    /// Builds a map from the images of the domain basis vectors.
    pub fn from_columns(
        field: Field,
        domain: LabeledSpace,
        codomain: LabeledSpace,
        columns: &[Vector],
    ) -> Result<Self> {
        if columns.len() != domain.dim() {
            return Err(Error::ShapeMismatch(format!(
                "{} images given for a domain of dimension {}",
                columns.len(),
                domain.dim()
            )));
        }
        if let Some(c) = columns.iter().position(|c| c.len() != codomain.dim()) {
            return Err(Error::ShapeMismatch(format!(
                "image of basis vector {c} has length {}, codomain has dimension {}",
                columns[c].len(),
                codomain.dim()
            )));
        }
        let matrix = Matrix::from_columns(field, codomain.dim(), columns);
        Self::new(field, domain, codomain, matrix)
    }

    /// Builds a map by evaluating `image` on each domain basis index.
    pub fn from_fn(
        field: Field,
        domain: LabeledSpace,
        codomain: LabeledSpace,
        mut image: impl FnMut(usize) -> Vector,
    ) -> Result<Self> {
        let columns: Vec<Vector> = (0..domain.dim()).map(&mut image).collect();
        Self::from_columns(field, domain, codomain, &columns)
    }

    /// Same as [`LinMap::from_fn`] for fallible images.
    pub fn try_from_fn(
        field: Field,
        domain: LabeledSpace,
        codomain: LabeledSpace,
        mut image: impl FnMut(usize) -> Result<Vector>,
    ) -> Result<Self> {
        let columns = (0..domain.dim())
            .map(&mut image)
            .collect::<Result<Vec<_>>>()?;
        Self::from_columns(field, domain, codomain, &columns)
    }

    pub fn identity(field: Field, space: &LabeledSpace) -> Self {
        Self {
            field,
            domain: space.clone(),
            codomain: space.clone(),
            matrix: Matrix::identity(field, space.dim()),
        }
    }

    pub fn zero(field: Field, domain: &LabeledSpace, codomain: &LabeledSpace) -> Self {
        Self {
            field,
            domain: domain.clone(),
            codomain: codomain.clone(),
            matrix: Matrix::zeros(field, codomain.dim(), domain.dim()),
        }
    }

    /// Permutation map on basis vectors: basis vector `i` goes to basis vector `perm[i]`.
    pub fn permutation(
        field: Field,
        domain: &LabeledSpace,
        codomain: &LabeledSpace,
        perm: &[usize],
    ) -> Result<Self> {
        let mut m = Matrix::zeros(field, codomain.dim(), domain.dim());
        for (i, &j) in perm.iter().enumerate() {
            m.set(j, i, field.one());
        }
        Self::new(field, domain.clone(), codomain.clone(), m)
    }

    /// The swap `a⊗b ↦ b⊗a` from `A⊗B` to `B⊗A`.
    pub fn flip(field: Field, a: &LabeledSpace, b: &LabeledSpace) -> Self {
        let (n, m) = (a.dim(), b.dim());
        let perm: Vec<usize> = (0..n * m).map(|idx| (idx % m) * n + idx / m).collect();
        Self::permutation(field, &a.tensor(b), &b.tensor(a), &perm).expect("flip shapes agree")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn domain(&self) -> &LabeledSpace {
        &self.domain
    }

    pub fn codomain(&self) -> &LabeledSpace {
        &self.codomain
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn entry(&self, r: usize, c: usize) -> &Scalar {
        self.matrix.get(r, c)
    }

    /// Image of domain basis vector `c`.
    pub fn column(&self, c: usize) -> Vector {
        self.matrix.column(c)
    }

    /// Replaces the spaces by others of the same dimensions.
    pub fn relabel(&self, domain: &LabeledSpace, codomain: &LabeledSpace) -> Result<Self> {
        Self::new(
            self.field,
            domain.clone(),
            codomain.clone(),
            self.matrix.clone(),
        )
    }

    pub fn apply(&self, x: &[Scalar]) -> Vector {
        assert_eq!(x.len(), self.domain.dim(), "vector length vs domain");
        let mut out = zero_vector(self.field, self.codomain.dim());
        for (c, xc) in x.iter().enumerate() {
            if xc.is_zero() {
                continue;
            }
            for (r, o) in out.iter_mut().enumerate() {
                let m = self.matrix.get(r, c);
                if !m.is_zero() {
                    o.add_assign_ref(&(m * xc));
                }
            }
        }
        out
    }

    /// Evaluates a map out of a tensor product `U⊗V` on `x⊗y`.
    pub fn apply_pair(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        assert_eq!(
            x.len() * y.len(),
            self.domain.dim(),
            "pair lengths vs domain"
        );
        let mut out = zero_vector(self.field, self.codomain.dim());
        let m = y.len();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                let col = i * m + j;
                for (r, o) in out.iter_mut().enumerate() {
                    let e = self.matrix.get(r, col);
                    if !e.is_zero() {
                        o.add_assign_ref(&(e * &c));
                    }
                }
            }
        }
        out
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &LinMap) -> Result<LinMap> {
        if g.codomain != self.domain {
            return Err(Error::ShapeMismatch(format!(
                "cannot compose: inner spaces differ ({} vs {})",
                g.codomain.dim(),
                self.domain.dim()
            )));
        }
        let columns: Vec<Vector> = (0..g.domain.dim())
            .map(|c| self.apply(&g.column(c)))
            .collect();
        LinMap::from_columns(self.field, g.domain.clone(), self.codomain.clone(), &columns)
    }

    /// Kronecker product `self ⊗ g`.
    pub fn tensor(&self, g: &LinMap) -> LinMap {
        let (r1, c1) = (self.matrix.rows, self.matrix.cols);
        let (r2, c2) = (g.matrix.rows, g.matrix.cols);
        let mut m = Matrix::zeros(self.field, r1 * r2, c1 * c2);
        for i in 0..r1 {
            for j in 0..c1 {
                let a = self.matrix.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..r2 {
                    for l in 0..c2 {
                        let b = g.matrix.get(k, l);
                        if !b.is_zero() {
                            m.set(i * r2 + k, j * c2 + l, a * b);
                        }
                    }
                }
            }
        }
        LinMap {
            field: self.field,
            domain: self.domain.tensor(&g.domain),
            codomain: self.codomain.tensor(&g.codomain),
            matrix: m,
        }
    }

    fn same_shape(&self, other: &LinMap) -> Result<()> {
        if self.domain != other.domain || self.codomain != other.codomain {
            return Err(Error::ShapeMismatch(
                "maps have different domains or codomains".into(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &LinMap) -> Result<LinMap> {
        self.same_shape(other)?;
        let mut out = self.clone();
        for (a, b) in out.matrix.data.iter_mut().zip(&other.matrix.data) {
            a.add_assign_ref(b);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &LinMap) -> Result<LinMap> {
        self.add(&other.scale(&-self.field.one()))
    }

    pub fn scale(&self, c: &Scalar) -> LinMap {
        let mut out = self.clone();
        for a in out.matrix.data.iter_mut() {
            *a = &*a * c;
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.data.iter().all(Scalar::is_zero)
    }

    /// First domain basis index on which the two maps differ.
    pub fn first_difference(&self, other: &LinMap) -> Option<usize> {
        (0..self.domain.dim()).find(|&c| {
            (0..self.codomain.dim()).any(|r| self.entry(r, c) != other.entry(r, c))
        })
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.matrix.row_vectors();
        rref(&mut rows).len()
    }

    pub fn kernel(&self) -> Subspace {
        let n = self.domain.dim();
        let mut rows = self.matrix.row_vectors();
        let pivots = rref(&mut rows);
        let mut basis = Vec::new();
        for free in (0..n).filter(|c| !pivots.contains(c)) {
            let mut v = zero_vector(self.field, n);
            v[free] = self.field.one();
            for (row, &p) in rows.iter().zip(&pivots) {
                v[p] = -&row[free];
            }
            basis.push(v);
        }
        Subspace::spanned_by(self.field, self.domain.clone(), basis)
    }

    pub fn image(&self) -> Subspace {
        let columns: Vec<Vector> = (0..self.domain.dim()).map(|c| self.column(c)).collect();
        Subspace::spanned_by(self.field, self.codomain.clone(), columns)
    }

    /// One preimage of `target`: pivot variables solved, free variables zero.
    pub fn solve(&self, target: &[Scalar]) -> Result<Vector> {
        if target.len() != self.codomain.dim() {
            return Err(Error::ShapeMismatch(format!(
                "target has length {}, codomain dimension {}",
                target.len(),
                self.codomain.dim()
            )));
        }
        let n = self.domain.dim();
        let mut rows: Vec<Vector> = (0..self.codomain.dim())
            .map(|r| {
                let mut row = self.matrix.row(r).to_vec();
                row.push(target[r].clone());
                row
            })
            .collect();
        let pivots = rref(&mut rows);
        if pivots.last() == Some(&n) {
            return Err(Error::NoSolution);
        }
        let mut x = zero_vector(self.field, n);
        for (row, &p) in rows.iter().zip(&pivots) {
            x[p] = row[n].clone();
        }
        Ok(x)
    }

    /// Exact two-sided inverse.
    pub fn invert(&self) -> Result<LinMap> {
        let n = self.domain.dim();
        if self.codomain.dim() != n {
            return Err(Error::Singular);
        }
        let mut rows: Vec<Vector> = (0..n)
            .map(|r| {
                let mut row = self.matrix.row(r).to_vec();
                row.extend((0..n).map(|c| {
                    if c == r {
                        self.field.one()
                    } else {
                        self.field.zero()
                    }
                }));
                row
            })
            .collect();
        let pivots = rref(&mut rows);
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::Singular);
        }
        let inv_rows: Vec<Vector> = rows.into_iter().map(|r| r[n..].to_vec()).collect();
        let matrix = Matrix::from_rows(self.field, inv_rows, n)?;
        LinMap::new(
            self.field,
            self.codomain.clone(),
            self.domain.clone(),
            matrix,
        )
    }

}
