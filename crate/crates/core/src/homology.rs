//! Reduced simplicial homology over the rationals.
//!
//! Faces of each dimension are listed in lexicographic order of their sorted
//! vertex lists, and the augmented boundary
//! `∂[i_0, .., i_j] = Σ_k (-1)^k [i_0, .., î_k, .., i_j]` is assembled as an
//! integer matrix per dimension. Ranks come from fraction-free (Bareiss)
//! elimination: first in checked `i128`, and in arbitrary precision if an
//! intermediate minor overflows.

use num_bigint::BigInt;
use num_traits::{CheckedDiv, CheckedMul, CheckedSub, One, Zero};

use crate::complex::SimplicialComplex;
use crate::varset::VarSet;

/// Dense integer matrix in row-major order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn column(&self, c: usize) -> Vec<i64> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    /// `self * other`, or `None` on a shape mismatch.
    pub fn mul(&self, other: &IntMatrix) -> Option<IntMatrix> {
        if self.cols != other.rows {
            return None;
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        Some(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    /// Exact rank over the rationals.
    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        let small: Vec<i128> = self.data.iter().map(|&v| i128::from(v)).collect();
        match bareiss_rank(self.rows, self.cols, small) {
            Some(r) => r,
            None => {
                let big: Vec<BigInt> = self.data.iter().map(|&v| BigInt::from(v)).collect();
                bareiss_rank(self.rows, self.cols, big).expect("BigInt arithmetic cannot overflow")
            }
        }
    }
}

/// Fraction-free Gaussian elimination; `None` if an operation overflows `T`.
pub(crate) fn bareiss_rank<T>(rows: usize, cols: usize, mut m: Vec<T>) -> Option<usize>
where
    T: Clone + Zero + One + CheckedMul + CheckedSub + CheckedDiv,
{
    let mut prev = T::one();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m[r * cols + c].is_zero()) else {
            continue;
        };
        if p != rank {
            for j in 0..cols {
                m.swap(p * cols + j, rank * cols + j);
            }
        }
        let pivot = m[rank * cols + c].clone();
        for i in rank + 1..rows {
            let lead = m[i * cols + c].clone();
            for j in c + 1..cols {
                let a = pivot.checked_mul(&m[i * cols + j])?;
                let b = lead.checked_mul(&m[rank * cols + j])?;
                m[i * cols + j] = a.checked_sub(&b)?.checked_div(&prev)?;
            }
            m[i * cols + c] = T::zero();
        }
        prev = pivot;
        rank += 1;
    }
    Some(rank)
}

/// Faces by dimension and the augmented boundary maps of a complex.
///
/// `faces[k]` holds the faces of dimension `k - 1`; `boundaries[k]` is the map
/// from dimension `k - 1` chains to dimension `k - 2` chains, so
/// `boundaries[0]` (out of the empty face) has no rows and `boundaries[1]` is
/// the augmentation.
#[derive(Clone, Debug)]
pub struct ChainComplexData {
    pub faces: Vec<Vec<VarSet>>,
    pub boundaries: Vec<IntMatrix>,
}

impl ChainComplexData {
    /// Faces of dimension `dim`.
    pub fn faces_of_dim(&self, dim: isize) -> &[VarSet] {
        usize::try_from(dim + 1)
            .ok()
            .and_then(|k| self.faces.get(k))
            .map_or(&[], Vec::as_slice)
    }

    /// The boundary map out of dimension `dim`, if that dimension is present.
    pub fn boundary(&self, dim: isize) -> Option<&IntMatrix> {
        usize::try_from(dim + 1).ok().and_then(|k| self.boundaries.get(k))
    }

    /// Highest dimension with faces, `None` for the void complex.
    pub fn top_dimension(&self) -> Option<isize> {
        if self.faces.is_empty() {
            None
        } else {
            Some(self.faces.len() as isize - 2)
        }
    }
}

/// Builds the augmented oriented chain complex of `complex`.
pub fn boundary_matrices(complex: &SimplicialComplex) -> ChainComplexData {
    let Some(top) = complex.dimension() else {
        return ChainComplexData {
            faces: Vec::new(),
            boundaries: Vec::new(),
        };
    };
    let mut faces: Vec<Vec<VarSet>> = vec![Vec::new(); (top + 2) as usize];
    for f in complex.faces() {
        faces[f.len()].push(f);
    }
    for level in &mut faces {
        level.sort();
    }
    let mut boundaries = Vec::with_capacity(faces.len());
    boundaries.push(IntMatrix::zeros(0, faces[0].len()));
    for k in 1..faces.len() {
        let (lower, upper) = (&faces[k - 1], &faces[k]);
        let mut b = IntMatrix::zeros(lower.len(), upper.len());
        for (col, f) in upper.iter().enumerate() {
            for (pos, v) in f.iter().enumerate() {
                let sub = f.remove(v);
                let row = lower.binary_search(&sub).expect("faces are closed under subsets");
                b.set(row, col, if pos % 2 == 0 { 1 } else { -1 });
            }
        }
        boundaries.push(b);
    }
    ChainComplexData { faces, boundaries }
}

/// `dim H̃_j` for `j = -1, 0, ..`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HomologyDims {
    dims: Vec<usize>,
}

impl HomologyDims {
    pub fn from_vec(dims: Vec<usize>) -> Self {
        let mut dims = dims;
        while dims.last() == Some(&0) {
            dims.pop();
        }
        HomologyDims { dims }
    }

    /// `dim H̃_j`; zero outside the stored range.
    pub fn get(&self, j: isize) -> usize {
        usize::try_from(j + 1)
            .ok()
            .and_then(|k| self.dims.get(k))
            .copied()
            .unwrap_or(0)
    }

    pub fn is_acyclic(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    /// `(j, dim H̃_j)` for every nonzero entry.
    pub fn nonzero(&self) -> impl Iterator<Item = (isize, usize)> + '_ {
        self.dims
            .iter()
            .enumerate()
            .filter(|(_, &d)| d > 0)
            .map(|(k, &d)| (k as isize - 1, d))
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(k, &d)| if k % 2 == 1 { d as i64 } else { -(d as i64) })
            .sum()
    }
}

/// Reduced homology dimensions of `complex` over `Q`.
pub fn reduced_homology_dims(complex: &SimplicialComplex) -> HomologyDims {
    homology_of(&boundary_matrices(complex))
}

pub fn homology_of(data: &ChainComplexData) -> HomologyDims {
    let ranks: Vec<usize> = data.boundaries.iter().map(IntMatrix::rank).collect();
    let dims = (0..data.faces.len())
        .map(|k| {
            let next = ranks.get(k + 1).copied().unwrap_or(0);
            data.faces[k].len() - ranks[k] - next
        })
        .collect();
    HomologyDims::from_vec(dims)
}

/// `Σ_j (-1)^j f_j` over `j >= -1`, from face counts.
pub fn face_euler_characteristic(data: &ChainComplexData) -> i64 {
    data.faces
        .iter()
        .enumerate()
        .map(|(k, f)| if k % 2 == 1 { f.len() as i64 } else { -(f.len() as i64) })
        .sum()
}
