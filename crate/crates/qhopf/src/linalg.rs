//! Dense exact linear algebra over a [`FieldSpec`].

use crate::field::{FieldSpec, Scalar};

/// A linear map between abstract coordinate spaces, stored row-major:
/// `entries[r * src_dim + c]` is the coefficient of source basis vector `c`
/// in the image's `r`-th coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    pub src_dim: usize,
    pub dst_dim: usize,
    pub field: FieldSpec,
    pub entries: Vec<Scalar>,
}

impl LinearMap {
    pub fn zeros(field: FieldSpec, dst_dim: usize, src_dim: usize) -> LinearMap {
        LinearMap {
            src_dim,
            dst_dim,
            field,
            entries: vec![field.zero(); src_dim * dst_dim],
        }
    }

    pub fn identity(field: FieldSpec, dim: usize) -> LinearMap {
        let mut m = LinearMap::zeros(field, dim, dim);
        for i in 0..dim {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> LinearMap {
        let dst_dim = rows.len();
        let src_dim = rows.first().map_or(0, |r| r.len());
        let mut entries = Vec::with_capacity(dst_dim * src_dim);
        for r in rows {
            assert_eq!(r.len(), src_dim, "ragged rows");
            entries.extend(r);
        }
        LinearMap {
            src_dim,
            dst_dim,
            field,
            entries,
        }
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.src_dim + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.entries[r * self.src_dim + c] = v;
    }

    pub fn is_identity(&self) -> bool {
        self.src_dim == self.dst_dim
            && (0..self.dst_dim).all(|r| {
                (0..self.src_dim).all(|c| {
                    if r == c {
                        self.get(r, c).is_one()
                    } else {
                        self.get(r, c).is_zero()
                    }
                })
            })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &LinearMap) -> LinearMap {
        assert_eq!(self.src_dim, other.dst_dim, "compose dimension mismatch");
        let mut out = LinearMap::zeros(self.field, self.dst_dim, other.src_dim);
        for r in 0..self.dst_dim {
            for k in 0..self.src_dim {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.src_dim {
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(r, c).add(&a.mul(b));
                    out.set(r, c, cur);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &LinearMap) -> LinearMap {
        assert_eq!((self.src_dim, self.dst_dim), (other.src_dim, other.dst_dim));
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.add(b))
            .collect();
        LinearMap {
            entries,
            ..self.clone()
        }
    }

    pub fn sub(&self, other: &LinearMap) -> LinearMap {
        assert_eq!((self.src_dim, self.dst_dim), (other.src_dim, other.dst_dim));
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.sub(b))
            .collect();
        LinearMap {
            entries,
            ..self.clone()
        }
    }

    pub fn scale(&self, s: &Scalar) -> LinearMap {
        let entries = self.entries.iter().map(|a| a.mul(s)).collect();
        LinearMap {
            entries,
            ..self.clone()
        }
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.src_dim);
        (0..self.dst_dim)
            .map(|r| {
                let mut acc = self.field.zero();
                for c in 0..self.src_dim {
                    let e = self.get(r, c);
                    if !e.is_zero() && !v[c].is_zero() {
                        acc = acc.add(&e.mul(&v[c]));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn transpose(&self) -> LinearMap {
        let mut out = LinearMap::zeros(self.field, self.src_dim, self.dst_dim);
        for r in 0..self.dst_dim {
            for c in 0..self.src_dim {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    /// Kronecker product: source index `(c1, c2)` flattened with `c2` fastest.
    pub fn kron(&self, other: &LinearMap) -> LinearMap {
        let mut out = LinearMap::zeros(
            self.field,
            self.dst_dim * other.dst_dim,
            self.src_dim * other.src_dim,
        );
        for r1 in 0..self.dst_dim {
            for c1 in 0..self.src_dim {
                let a = self.get(r1, c1);
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..other.dst_dim {
                    for c2 in 0..other.src_dim {
                        let b = other.get(r2, c2);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(r1 * other.dst_dim + r2, c1 * other.src_dim + c2, a.mul(b));
                    }
                }
            }
        }
        out
    }

    /// The flip v⊗w ↦ w⊗v as a matrix on a d1·d2-dimensional space
    /// (first factor slowest on both sides).
    pub fn swap(field: FieldSpec, d1: usize, d2: usize) -> LinearMap {
        let mut m = LinearMap::zeros(field, d1 * d2, d1 * d2);
        for i in 0..d1 {
            for j in 0..d2 {
                m.set(j * d1 + i, i * d2 + j, field.one());
            }
        }
        m
    }

    /// Reduced row echelon form; returns (rref of [self | rhs columns], pivot columns).
    fn rref(mut aug: Vec<Vec<Scalar>>) -> (Vec<Vec<Scalar>>, Vec<usize>) {
        let rows = aug.len();
        let cols = aug.first().map_or(0, |r| r.len());
        let mut pivots = Vec::new();
        let mut pr = 0;
        for pc in 0..cols {
            if pr == rows || pivots.len() == rows {
                break;
            }
            let Some(sel) = (pr..rows).find(|&r| !aug[r][pc].is_zero()) else {
                continue;
            };
            aug.swap(pr, sel);
            let piv_inv = aug[pr][pc].inv().unwrap();
            for c in pc..cols {
                aug[pr][c] = aug[pr][c].mul(&piv_inv);
            }
            for r in 0..rows {
                if r != pr && !aug[r][pc].is_zero() {
                    let f = aug[r][pc].clone();
                    for c in pc..cols {
                        let v = aug[r][c].sub(&f.mul(&aug[pr][c]));
                        aug[r][c] = v;
                    }
                }
            }
            pivots.push(pc);
            pr += 1;
        }
        (aug, pivots)
    }

    pub fn inverse(&self) -> Option<LinearMap> {
        if self.src_dim != self.dst_dim {
            return None;
        }
        let n = self.src_dim;
        let mut aug: Vec<Vec<Scalar>> = Vec::with_capacity(n);
        for r in 0..n {
            let mut row: Vec<Scalar> = (0..n).map(|c| self.get(r, c).clone()).collect();
            row.extend((0..n).map(|c| {
                if r == c {
                    self.field.one()
                } else {
                    self.field.zero()
                }
            }));
            aug.push(row);
        }
        let (aug, pivots) = Self::rref(aug);
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| i != p) {
            return None;
        }
        let mut out = LinearMap::zeros(self.field, n, n);
        for r in 0..n {
            for c in 0..n {
                out.set(r, c, aug[r][n + c].clone());
            }
        }
        Some(out)
    }

    /// Solves `self * x = rhs` for one solution, or `None` if inconsistent.
    pub fn solve(&self, rhs: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(rhs.len(), self.dst_dim);
        let mut aug: Vec<Vec<Scalar>> = Vec::with_capacity(self.dst_dim);
        for r in 0..self.dst_dim {
            let mut row: Vec<Scalar> = (0..self.src_dim).map(|c| self.get(r, c).clone()).collect();
            row.push(rhs[r].clone());
            aug.push(row);
        }
        let (aug, pivots) = Self::rref(aug);
        if pivots.contains(&self.src_dim) {
            return None; // pivot in the rhs column: inconsistent
        }
        let mut x = vec![self.field.zero(); self.src_dim];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = aug[i][self.src_dim].clone();
        }
        Some(x)
    }

    /// A basis of the kernel, as column vectors.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let aug: Vec<Vec<Scalar>> = (0..self.dst_dim)
            .map(|r| (0..self.src_dim).map(|c| self.get(r, c).clone()).collect())
            .collect();
        let (rref, pivots) = Self::rref(aug);
        let mut basis = Vec::new();
        for free in 0..self.src_dim {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![self.field.zero(); self.src_dim];
            v[free] = self.field.one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = rref[i][free].neg();
            }
            basis.push(v);
        }
        basis
    }

    pub fn rank(&self) -> usize {
        let aug: Vec<Vec<Scalar>> = (0..self.dst_dim)
            .map(|r| (0..self.src_dim).map(|c| self.get(r, c).clone()).collect())
            .collect();
        Self::rref(aug).1.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(field: FieldSpec, rows: &[&[i64]]) -> LinearMap {
        LinearMap::from_rows(
            field,
            rows.iter()
                .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn inverse_roundtrip() {
        let f = FieldSpec::Rationals;
        let m = mat(f, &[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert!(m.compose(&inv).is_identity());
        assert!(inv.compose(&m).is_identity());
    }

    #[test]
    fn singular_has_no_inverse() {
        let f = FieldSpec::PrimeField(101);
        let m = mat(f, &[&[1, 2], &[2, 4]]);
        assert!(m.inverse().is_none());
        assert_eq!(m.nullspace().len(), 1);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let f = FieldSpec::Rationals;
        let m = mat(f, &[&[1, 2], &[2, 4]]);
        let x = m.solve(&[f.from_i64(3), f.from_i64(6)]).unwrap();
        assert_eq!(m.apply(&x), vec![f.from_i64(3), f.from_i64(6)]);
        assert!(m.solve(&[f.from_i64(3), f.from_i64(7)]).is_none());
    }

    #[test]
    fn kron_matches_blockwise() {
        let f = FieldSpec::Rationals;
        let a = mat(f, &[&[1, 2], &[3, 4]]);
        let b = mat(f, &[&[0, 1], &[1, 0]]);
        let k = a.kron(&b);
        assert_eq!(k.get(0, 1), &f.from_i64(1)); // a[0][0]*b[0][1]
        assert_eq!(k.get(3, 0), &f.from_i64(3)); // a[1][0]*b[1][0]
                                                 // (A⊗B)(C⊗D) = AC⊗BD
        let c = mat(f, &[&[1, 1], &[0, 1]]);
        let d = mat(f, &[&[2, 0], &[0, 3]]);
        assert_eq!(
            a.kron(&b).compose(&c.kron(&d)),
            a.compose(&c).kron(&b.compose(&d))
        );
    }
}
