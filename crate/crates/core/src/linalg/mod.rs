//! Exact linear algebra over labeled finite-dimensional spaces.
//!
//! Every structure map in the crate is a dense [`LinMap`] whose columns are the images of
//! domain basis vectors. Tensor products order their basis row-major with the left factor
//! outermost, so the basis tuple `(i, j, k)` of `V⊗V⊗V` sits at index `(i*n + j)*n + k`.

mod map;
mod scalar;
mod space;
mod subspace;

pub use map::{LinMap, Matrix};
pub use scalar::{Field, Scalar};
pub use space::LabeledSpace;
pub use subspace::{quotient_by, rref, QuotientSpace, Subspace};

/// Dense coordinate vector.
pub type Vector = Vec<Scalar>;

pub fn zero_vector(field: Field, n: usize) -> Vector {
    vec![field.zero(); n]
}

pub fn basis_vector(field: Field, n: usize, i: usize) -> Vector {
    let mut v = zero_vector(field, n);
    v[i] = field.one();
    v
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// `y += c·x`.
pub fn axpy(y: &mut [Scalar], c: &Scalar, x: &[Scalar]) {
    debug_assert_eq!(y.len(), x.len());
    if c.is_zero() {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            yi.add_assign_ref(&(c * xi));
        }
    }
}

pub fn scale(c: &Scalar, x: &[Scalar]) -> Vector {
    x.iter().map(|xi| c * xi).collect()
}

pub fn sub(x: &[Scalar], y: &[Scalar]) -> Vector {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

/// Coordinates of `x⊗y` in the row-major tensor basis.
pub fn tensor_vectors(x: &[Scalar], y: &[Scalar]) -> Vector {
    let mut out = Vec::with_capacity(x.len() * y.len());
    for a in x {
        for b in y {
            out.push(a * b);
        }
    }
    out
}

/// Nonzero coordinates as `(index, coefficient)` pairs.
pub fn support(x: &[Scalar]) -> impl Iterator<Item = (usize, &Scalar)> {
    x.iter().enumerate().filter(|(_, c)| !c.is_zero())
}

/// Renders a vector as a linear combination of basis labels, e.g. `2/1·a + -1/2·b`.
pub fn format_vector(space: &LabeledSpace, x: &[Scalar]) -> String {
    let terms: Vec<String> = support(x)
        .map(|(i, c)| {
            if c.is_one() {
                space.label(i).to_string()
            } else {
                format!("{c}·{}", space.label(i))
            }
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}
