use super::map::LinMap;
use super::{axpy, zero_vector, Field, LabeledSpace, Scalar, Vector};
use crate::error::{Error, Result};

/// Reduces `rows` to reduced row-echelon form in place, dropping zero rows.
/// Returns the pivot column of each remaining row (strictly increasing).
pub fn rref(rows: &mut Vec<Vector>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let factor = -&row[c];
                axpy(row, &factor, &pivot_row);
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// A subspace stored by its reduced row-echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: Field,
    ambient: LabeledSpace,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn spanned_by(field: Field, ambient: LabeledSpace, vectors: Vec<Vector>) -> Self {
        let mut basis = vectors;
        for v in &basis {
            assert_eq!(v.len(), ambient.dim(), "spanning vector outside ambient");
        }
        let pivots = rref(&mut basis);
        Self {
            field,
            ambient,
            basis,
            pivots,
        }
    }

    pub fn zero(field: Field, ambient: LabeledSpace) -> Self {
        Self::spanned_by(field, ambient, Vec::new())
    }

    pub fn full(field: Field, ambient: LabeledSpace) -> Self {
        let n = ambient.dim();
        let basis = (0..n).map(|i| super::basis_vector(field, n, i)).collect();
        Self::spanned_by(field, ambient, basis)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient(&self) -> &LabeledSpace {
        &self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Reduced row-echelon basis.
    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v` minus its projection along the echelon basis; zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        let mut out = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if !out[p].is_zero() {
                let factor = -&out[p];
                axpy(&mut out, &factor, row);
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    /// Coordinates with respect to the echelon basis, `None` outside the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Inverse of [`Subspace::coordinates`].
    pub fn combine(&self, coords: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.field, self.ambient.dim());
        for (c, row) in coords.iter().zip(&self.basis) {
            axpy(&mut out, c, row);
        }
        out
    }

    /// Inclusion map from a space labeled by `labels` onto this subspace.
    pub fn inclusion(&self, domain: &LabeledSpace) -> Result<LinMap> {
        LinMap::from_columns(self.field, domain.clone(), self.ambient.clone(), &self.basis)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|v| other.contains(v))
    }

    /// Quotient of the ambient space by this subspace.
    pub fn quotient(&self) -> QuotientSpace {
        QuotientSpace::new(self.clone())
    }
}

/// `ambient / killed`, represented by the non-pivot coordinates of the echelon basis of
/// `killed` in ascending order.
#[derive(Clone, Debug)]
pub struct QuotientSpace {
    killed: Subspace,
    section: Vec<usize>,
    space: LabeledSpace,
    project: LinMap,
    lift: LinMap,
}

impl QuotientSpace {
    pub fn new(killed: Subspace) -> Self {
        let field = killed.field;
        let ambient = killed.ambient.clone();
        let section: Vec<usize> = (0..ambient.dim())
            .filter(|c| !killed.pivots.contains(c))
            .collect();
        let space = LabeledSpace::from_unique(
            section
                .iter()
                .map(|&c| format!("[{}]", ambient.label(c)))
                .collect(),
        );
        let q = section.len();
        let project = LinMap::from_fn(field, ambient.clone(), space.clone(), |c| {
            let reduced = killed.reduce(&super::basis_vector(field, ambient.dim(), c));
            section.iter().map(|&s| reduced[s].clone()).collect()
        })
        .expect("projection shape");
        let lift = LinMap::from_fn(field, space.clone(), ambient.clone(), |i| {
            super::basis_vector(field, ambient.dim(), section[i])
        })
        .expect("lift shape");
        debug_assert_eq!(q, ambient.dim() - killed.dim());
        Self {
            killed,
            section,
            space,
            project,
            lift,
        }
    }

    pub fn ambient(&self) -> &LabeledSpace {
        self.killed.ambient()
    }

    pub fn killed(&self) -> &Subspace {
        &self.killed
    }

    /// Ambient coordinates chosen as quotient representatives.
    pub fn section(&self) -> &[usize] {
        &self.section
    }

    pub fn space(&self) -> &LabeledSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn project(&self) -> &LinMap {
        &self.project
    }

    pub fn lift(&self) -> &LinMap {
        &self.lift
    }
}

/// Quotient of `ambient` by `x`.
pub fn quotient_by(ambient: &LabeledSpace, x: &Subspace) -> Result<QuotientSpace> {
    if x.ambient() != ambient {
        return Err(Error::ShapeMismatch(
            "subspace lives in a different ambient space".into(),
        ));
    }
    Ok(x.quotient())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rational
    }

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| q().from_i64(x)).collect()
    }

    #[test]
    fn rref_pivots_increase() {
        let mut rows = vec![v(&[0, 2, 4]), v(&[1, 1, 1]), v(&[1, 3, 5])];
        let pivots = rref(&mut rows);
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(rows, vec![v(&[1, 0, -1]), v(&[0, 1, 2])]);
    }

    #[test]
    fn quotient_by_zero_and_full() {
        let amb = LabeledSpace::new(["a", "b"]).unwrap();
        let zero = Subspace::zero(q(), amb.clone());
        let quo = quotient_by(&amb, &zero).unwrap();
        assert_eq!(quo.dim(), 2);
        assert_eq!(
            quo.project().matrix(),
            LinMap::identity(q(), &amb).matrix()
        );
        let full = Subspace::full(q(), amb.clone());
        assert_eq!(quotient_by(&amb, &full).unwrap().dim(), 0);
    }

    #[test]
    fn diagonal_collapse() {
        let amb = LabeledSpace::new(["e1", "e2"]).unwrap();
        let x = Subspace::spanned_by(q(), amb.clone(), vec![v(&[1, -1])]);
        let quo = quotient_by(&amb, &x).unwrap();
        assert_eq!(quo.dim(), 1);
        assert_eq!(quo.project().column(0), quo.project().column(1));
        let pl = quo.project().compose(quo.lift()).unwrap();
        assert_eq!(pl, LinMap::identity(q(), quo.space()));
        assert_eq!(quo.project().kernel(), x);
    }

    #[test]
    fn wrong_ambient_rejected() {
        let a = LabeledSpace::new(["a"]).unwrap();
        let b = LabeledSpace::new(["b"]).unwrap();
        assert!(quotient_by(&a, &Subspace::zero(q(), b)).is_err());
    }
}
