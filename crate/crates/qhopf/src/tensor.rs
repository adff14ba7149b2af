//! Multi-leg dense tensors and the structure constants of a finite-dimensional
//! algebra with comultiplication and antipode data.

use crate::field::{FieldSpec, Scalar};
use crate::linalg::LinearMap;
use std::sync::Arc;

/// A dense tensor with an ordered list of legs. Coefficients are stored
/// row-major with the first leg slowest. A tensor with no legs is a scalar;
/// a tensor whose legs all have the algebra dimension is an element of H^{⊗k}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor {
    pub field: FieldSpec,
    pub dims: Vec<usize>,
    pub coeffs: Vec<Scalar>,
}

impl Tensor {
    pub fn zeros(field: FieldSpec, dims: Vec<usize>) -> Tensor {
        let size = dims.iter().product();
        Tensor {
            field,
            dims,
            coeffs: vec![field.zero(); size],
        }
    }

    pub fn scalar(field: FieldSpec, value: Scalar) -> Tensor {
        Tensor {
            field,
            dims: vec![],
            coeffs: vec![value],
        }
    }

    pub fn from_vec(field: FieldSpec, dims: Vec<usize>, coeffs: Vec<Scalar>) -> Tensor {
        assert_eq!(coeffs.len(), dims.iter().product::<usize>());
        Tensor {
            field,
            dims,
            coeffs,
        }
    }

    /// Standard basis vector e_i of a single leg.
    pub fn basis(field: FieldSpec, dim: usize, i: usize) -> Tensor {
        let mut t = Tensor::zeros(field, vec![dim]);
        t.coeffs[i] = field.one();
        t
    }

    pub fn n_legs(&self) -> usize {
        self.dims.len()
    }

    pub fn size(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn strides(dims: &[usize]) -> Vec<usize> {
        let mut s = vec![1usize; dims.len()];
        for i in (0..dims.len().saturating_sub(1)).rev() {
            s[i] = s[i + 1] * dims[i + 1];
        }
        s
    }

    pub fn get(&self, idx: &[usize]) -> &Scalar {
        let strides = Self::strides(&self.dims);
        let flat: usize = idx.iter().zip(&strides).map(|(i, s)| i * s).sum();
        &self.coeffs[flat]
    }

    pub fn set(&mut self, idx: &[usize], v: Scalar) {
        let strides = Self::strides(&self.dims);
        let flat: usize = idx.iter().zip(&strides).map(|(i, s)| i * s).sum();
        self.coeffs[flat] = v;
    }

    pub fn add(&self, other: &Tensor) -> Tensor {
        assert_eq!(self.dims, other.dims);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.add(b))
            .collect();
        Tensor {
            coeffs,
            ..self.clone()
        }
    }

    pub fn sub(&self, other: &Tensor) -> Tensor {
        assert_eq!(self.dims, other.dims);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.sub(b))
            .collect();
        Tensor {
            coeffs,
            ..self.clone()
        }
    }

    pub fn scale(&self, s: &Scalar) -> Tensor {
        let coeffs = self.coeffs.iter().map(|a| a.mul(s)).collect();
        Tensor {
            coeffs,
            ..self.clone()
        }
    }

    /// Outer product: legs of `other` appended after legs of `self`.
    pub fn outer(&self, other: &Tensor) -> Tensor {
        assert_eq!(self.field, other.field);
        let mut dims = self.dims.clone();
        dims.extend(&other.dims);
        let mut coeffs = Vec::with_capacity(self.size() * other.size());
        for a in &self.coeffs {
            if a.is_zero() {
                coeffs.extend(std::iter::repeat(self.field.zero()).take(other.size()));
            } else {
                coeffs.extend(other.coeffs.iter().map(|b| a.mul(b)));
            }
        }
        Tensor {
            field: self.field,
            dims,
            coeffs,
        }
    }

    /// Reorders legs: new leg `k` is old leg `perm[k]`.
    pub fn permute(&self, perm: &[usize]) -> Tensor {
        assert_eq!(perm.len(), self.dims.len());
        if perm.iter().enumerate().all(|(k, &p)| k == p) {
            return self.clone();
        }
        let new_dims: Vec<usize> = perm.iter().map(|&p| self.dims[p]).collect();
        let old_strides = Self::strides(&self.dims);
        let new_strides = Self::strides(&new_dims);
        let mut out = Tensor::zeros(self.field, new_dims.clone());
        let mut idx = vec![0usize; perm.len()];
        for flat_new in 0..self.size() {
            // decode flat_new in the new layout
            let mut rem = flat_new;
            for (k, &s) in new_strides.iter().enumerate() {
                idx[k] = rem / s;
                rem %= s;
            }
            let flat_old: usize = idx
                .iter()
                .enumerate()
                .map(|(k, &i)| i * old_strides[perm[k]])
                .sum();
            out.coeffs[flat_new] = self.coeffs[flat_old].clone();
        }
        out
    }

    /// Applies `map` to the legs listed in `in_positions` (flattened in that
    /// order, last fastest). The output legs, with dimensions `out_dims`, are
    /// appended at the end of the surviving legs.
    pub fn apply_map_at(
        &self,
        in_positions: &[usize],
        out_dims: &[usize],
        map: &LinearMap,
    ) -> Tensor {
        let in_size: usize = in_positions.iter().map(|&p| self.dims[p]).product();
        let out_size: usize = out_dims.iter().product();
        assert_eq!(map.src_dim, in_size, "map source does not match legs");
        assert_eq!(map.dst_dim, out_size, "map target does not match out_dims");
        // move the input legs to the end, in the listed order
        let others: Vec<usize> = (0..self.dims.len())
            .filter(|p| !in_positions.contains(p))
            .collect();
        let mut perm = others.clone();
        perm.extend(in_positions);
        let moved = self.permute(&perm);
        let outer_size = self.size() / in_size.max(1);
        let mut dims: Vec<usize> = others.iter().map(|&p| self.dims[p]).collect();
        dims.extend(out_dims);
        let mut out = Tensor::zeros(self.field, dims);
        for blk in 0..outer_size {
            let row = &moved.coeffs[blk * in_size..(blk + 1) * in_size];
            if row.iter().all(|c| c.is_zero()) {
                continue;
            }
            let img = map.apply(row);
            out.coeffs[blk * out_size..(blk + 1) * out_size].clone_from_slice(&img);
        }
        out
    }

    /// Applies a square map to one leg, keeping the leg in place.
    pub fn map_leg(&self, leg: usize, map: &LinearMap) -> Tensor {
        assert_eq!(map.src_dim, map.dst_dim);
        let t = self.apply_map_at(&[leg], &[map.dst_dim], map);
        let n = t.n_legs();
        let mut perm: Vec<usize> = (0..n - 1).collect();
        perm.insert(leg, n - 1);
        t.permute(&perm)
    }

    /// Reinterprets the tensor as a linear map: the first `n_out` legs index
    /// the target, the remaining legs index the source.
    pub fn into_map(self, n_out: usize) -> LinearMap {
        let dst_dim: usize = self.dims[..n_out].iter().product();
        let src_dim: usize = self.dims[n_out..].iter().product();
        LinearMap {
            src_dim,
            dst_dim,
            field: self.field,
            entries: self.coeffs,
        }
    }
}

/// Structure constants of a finite-dimensional unital algebra together with
/// comultiplication, counit and an invertible antipode.
#[derive(Debug, Clone)]
pub struct AlgebraCore {
    pub field: FieldSpec,
    pub dim: usize,
    pub basis_names: Vec<String>,
    /// H⊗H → H
    pub mult: LinearMap,
    /// the unit element, a 1-leg tensor
    pub unit: Tensor,
    /// H → H⊗H
    pub comult: LinearMap,
    /// H → k
    pub counit: LinearMap,
    pub antipode: LinearMap,
    pub antipode_inv: LinearMap,
}

impl AlgebraCore {
    /// Basic structural sanity: dimensions, unit laws, counit on the unit,
    /// S∘S⁻¹ = S⁻¹∘S = id. Deeper axioms are checked by the verification
    /// routines built on top.
    pub fn validate(&self) -> Result<(), String> {
        let n = self.dim;
        if self.basis_names.len() != n {
            return Err("basis name count mismatch".into());
        }
        for (what, map, dst, src) in [
            ("mult", &self.mult, n, n * n),
            ("comult", &self.comult, n * n, n),
            ("counit", &self.counit, 1, n),
            ("antipode", &self.antipode, n, n),
            ("antipode_inv", &self.antipode_inv, n, n),
        ] {
            if map.dst_dim != dst || map.src_dim != src {
                return Err(format!("{what} has wrong shape"));
            }
        }
        if self.unit.dims != vec![n] {
            return Err("unit has wrong shape".into());
        }
        // unit laws: left and right multiplication by 1 are the identity
        for side in 0..2 {
            for i in 0..n {
                let e = Tensor::basis(self.field, n, i);
                let pair = if side == 0 {
                    self.unit.outer(&e)
                } else {
                    e.outer(&self.unit)
                };
                let prod = pair.apply_map_at(&[0, 1], &[n], &self.mult);
                if prod != Tensor::basis(self.field, n, i) {
                    return Err(format!("unit law fails on basis {i}"));
                }
            }
        }
        if !self.antipode.compose(&self.antipode_inv).is_identity()
            || !self.antipode_inv.compose(&self.antipode).is_identity()
        {
            return Err("antipode_inv is not a two-sided inverse of the antipode".into());
        }
        let eps_unit = self.counit.apply(&self.unit.coeffs);
        if !eps_unit[0].is_one() {
            return Err("counit of the unit is not 1".into());
        }
        Ok(())
    }

    /// 1 ⊗ … ⊗ 1, with `k` legs.
    pub fn unit_element(&self, k: usize) -> Tensor {
        let mut t = Tensor::scalar(self.field, self.field.one());
        for _ in 0..k {
            t = t.outer(&self.unit);
        }
        t
    }
}

/// Places the legs of `x` at 0-based `positions` inside an element with
/// `total` legs, putting the unit on every other leg.
pub fn tensor_embed(
    core: &AlgebraCore,
    x: &Tensor,
    positions: &[usize],
    total: usize,
) -> Result<Tensor, String> {
    if positions.len() != x.n_legs() {
        return Err("one position per leg required".into());
    }
    let mut seen = vec![false; total];
    for &p in positions {
        if p >= total {
            return Err(format!("position {p} out of range for {total} legs"));
        }
        if seen[p] {
            return Err(format!("duplicate position {p}"));
        }
        seen[p] = true;
    }
    // x's legs first, then the padding units, then permute into place
    let mut t = x.clone();
    let mut order: Vec<usize> = positions.to_vec();
    for p in 0..total {
        if !seen[p] {
            t = t.outer(&core.unit);
            order.push(p);
        }
    }
    // order[k] = target position of current leg k; invert to a gather perm
    let mut perm = vec![0usize; total];
    for (k, &p) in order.iter().enumerate() {
        perm[p] = k;
    }
    Ok(t.permute(&perm))
}

/// Componentwise product of two elements of H^{⊗k}.
pub fn mul_elements(core: &AlgebraCore, x: &Tensor, y: &Tensor) -> Tensor {
    assert_eq!(x.dims, y.dims);
    let k = x.n_legs();
    let mut t = x.outer(y);
    // contract leg pairs one at a time to keep the working tensor small
    for leg in 0..k {
        // after `leg` contractions the layout is: results…, x-rest…, y-rest…
        let n_now = t.n_legs();
        let x_leg = leg; // x legs stay at their original positions until consumed
        let y_leg = n_now - (k - leg); // first remaining y leg
        t = t.apply_map_at(&[x_leg, y_leg], &[core.dim], &core.mult);
        // apply_map_at appends the product leg at the end; move it to x_leg
        let n_after = t.n_legs();
        let mut perm: Vec<usize> = (0..n_after - 1).collect();
        perm.insert(x_leg, n_after - 1);
        t = t.permute(&perm);
    }
    t
}

/// Inverts an element of H^{⊗k} under componentwise multiplication by solving
/// the linear system x·y = 1⊗…⊗1 and checking the two-sided property.
pub fn invert_element(core: &Arc<AlgebraCore>, x: &Tensor) -> Result<Tensor, String> {
    let k = x.n_legs();
    let n = core.dim;
    assert!(x.dims.iter().all(|&d| d == n), "not an element of H^{{⊗k}}");
    // left multiplication by x as a matrix on H^{⊗k}
    let mut t = x.clone();
    for leg in 0..k {
        // adjoin one identity block (source leg hidden at the end) and
        // multiply it into position immediately, keeping ≤ k+2 legs alive
        let ident = Tensor::from_vec(
            core.field,
            vec![n, n],
            LinearMap::identity(core.field, n).entries,
        );
        t = t.outer(&ident);
        let n_now = t.n_legs();
        t = t.apply_map_at(&[leg, n_now - 2], &[n], &core.mult);
        // layout now: …, hidden sources…, product; restore product to `leg`
        let n_after = t.n_legs();
        let mut perm: Vec<usize> = (0..n_after - 1).collect();
        perm.insert(leg, n_after - 1);
        t = t.permute(&perm);
    }
    // legs: k result legs, then k hidden source legs in creation order
    let lmult = t.into_map(k);
    let rhs = core.unit_element(k);
    let y_coeffs = lmult
        .solve(&rhs.coeffs)
        .ok_or("NotInvertible: no right inverse")?;
    let y = Tensor::from_vec(core.field, x.dims.clone(), y_coeffs);
    if mul_elements(core, x, &y) != rhs || mul_elements(core, &y, x) != rhs {
        return Err("NotInvertible: inverse check failed".into());
    }
    Ok(y)
}

/// Checks whether a linear map H_A → H_B preserves (or, with `anti`,
/// reverses) multiplication and sends unit to unit.
pub fn map_algebra(
    map: &LinearMap,
    a: &AlgebraCore,
    b: &AlgebraCore,
    anti: bool,
) -> Result<(), String> {
    if map.src_dim != a.dim || map.dst_dim != b.dim {
        return Err("dimension mismatch".into());
    }
    let unit_img = map.apply(&a.unit.coeffs);
    if unit_img != b.unit.coeffs {
        return Err("unit not preserved".into());
    }
    // f(xy) = f(x)f(y) (or f(y)f(x)) as maps H_A ⊗ H_A → H_B
    let f_of_prod = map.compose(&a.mult);
    let ff = map.kron(map);
    let prod_of_f = if anti {
        // swap the two tensor factors before multiplying
        let mut swap = LinearMap::zeros(b.field, b.dim * b.dim, b.dim * b.dim);
        for i in 0..b.dim {
            for j in 0..b.dim {
                swap.set(j * b.dim + i, i * b.dim + j, b.field.one());
            }
        }
        b.mult.compose(&swap).compose(&ff)
    } else {
        b.mult.compose(&ff)
    };
    if f_of_prod != prod_of_f {
        return Err(if anti {
            "multiplication not anti-preserved".into()
        } else {
            "multiplication not preserved".into()
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    /// The 2-dimensional group algebra kℤ₂ — enough structure for the engine
    /// tests here.
    pub fn tiny_group_algebra(field: FieldSpec) -> Arc<AlgebraCore> {
        let n = 2;
        let mut mult = LinearMap::zeros(field, n, n * n);
        for a in 0..n {
            for b in 0..n {
                mult.set((a + b) % 2, a * n + b, field.one());
            }
        }
        let mut comult = LinearMap::zeros(field, n * n, n);
        for a in 0..n {
            comult.set(a * n + a, a, field.one());
        }
        let mut counit = LinearMap::zeros(field, 1, n);
        for a in 0..n {
            counit.set(0, a, field.one());
        }
        let core = AlgebraCore {
            field,
            dim: n,
            basis_names: vec!["1".into(), "g".into()],
            mult,
            unit: Tensor::basis(field, n, 0),
            comult,
            counit,
            antipode: LinearMap::identity(field, n),
            antipode_inv: LinearMap::identity(field, n),
        };
        core.validate().unwrap();
        Arc::new(core)
    }

    #[test]
    fn permute_roundtrip() {
        let f = FieldSpec::Rationals;
        let core = tiny_group_algebra(f);
        let x = core
            .unit
            .outer(&Tensor::basis(f, 2, 1))
            .outer(&Tensor::basis(f, 2, 0));
        let p = x.permute(&[2, 0, 1]);
        assert_eq!(p.get(&[0, 0, 1]), &f.one());
        assert_eq!(p.permute(&[1, 2, 0]), x);
    }

    #[test]
    fn embed_pads_with_unit() {
        let f = FieldSpec::Rationals;
        let core = tiny_group_algebra(f);
        let g = Tensor::basis(f, 2, 1);
        let e = tensor_embed(&core, &g, &[1], 3).unwrap();
        assert_eq!(e.get(&[0, 1, 0]), &f.one());
        assert!(tensor_embed(&core, &g.outer(&g), &[0, 0], 2).is_err());
        assert_eq!(tensor_embed(&core, &g, &[0], 1).unwrap(), g);
    }

    #[test]
    fn invert_group_like() {
        let f = FieldSpec::Rationals;
        let core = tiny_group_algebra(f);
        let g = Tensor::basis(f, 2, 1);
        let gg = g.outer(&g);
        let inv = invert_element(&core, &gg).unwrap();
        assert_eq!(inv, gg); // g has order 2
        assert_eq!(invert_element(&core, &inv).unwrap(), gg);
        let zero = Tensor::zeros(f, vec![2]);
        assert!(invert_element(&core, &zero).is_err());
    }

    #[test]
    fn map_algebra_identity_and_zero() {
        let f = FieldSpec::Rationals;
        let core = tiny_group_algebra(f);
        assert!(map_algebra(&LinearMap::identity(f, 2), &core, &core, false).is_ok());
        assert!(map_algebra(&LinearMap::zeros(f, 2, 2), &core, &core, false).is_err());
    }
}
