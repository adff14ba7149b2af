//! Builtin example algebras, all self-verified at construction.

use crate::field::{FieldSpec, Scalar};
use crate::linalg::LinearMap;
use crate::quasi_hopf::{verify_all, QuasiHopfAlgebra};
use crate::tensor::{AlgebraCore, Tensor};
use std::sync::Arc;

/// A named example: the algebra plus an optional quasitriangular structure.
#[derive(Debug, Clone)]
pub struct Builtin {
    pub name: String,
    pub algebra: Arc<QuasiHopfAlgebra>,
    pub r_matrix: Option<Tensor>,
}

pub const BUILTIN_NAMES: &[&str] = &["kZ2", "kZ2_Rt", "sweedler4_Rtri", "H2", "dZ2"];

/// Group algebra of a finite abelian group given by its addition table:
/// Δ(g) = g⊗g, ε(g) = 1, S(g) = g⁻¹.
fn group_algebra(
    field: FieldSpec,
    table: &[Vec<usize>],
    inverse: &[usize],
    names: &[&str],
) -> Arc<AlgebraCore> {
    let n = table.len();
    let mut mult = LinearMap::zeros(field, n, n * n);
    for a in 0..n {
        for b in 0..n {
            mult.set(table[a][b], a * n + b, field.one());
        }
    }
    let mut comult = LinearMap::zeros(field, n * n, n);
    let mut counit = LinearMap::zeros(field, 1, n);
    let mut antipode = LinearMap::zeros(field, n, n);
    for a in 0..n {
        comult.set(a * n + a, a, field.one());
        counit.set(0, a, field.one());
        antipode.set(inverse[a], a, field.one());
    }
    Arc::new(AlgebraCore {
        field,
        dim: n,
        basis_names: names.iter().map(|s| s.to_string()).collect(),
        mult,
        unit: Tensor::basis(field, n, 0),
        comult,
        counit,
        antipode: antipode.clone(),
        antipode_inv: antipode.inverse().unwrap(),
    })
}

fn z2_core(field: FieldSpec) -> Arc<AlgebraCore> {
    group_algebra(field, &[vec![0, 1], vec![1, 0]], &[0, 1], &["1", "g"])
}

/// ½(1⊗1 + 1⊗g + g⊗1 − g⊗g), the nontrivial triangular R on kℤ₂.
fn z2_half_r(field: FieldSpec) -> Result<Tensor, String> {
    let half = field.from_fraction(1, 2)?;
    let mut r = Tensor::zeros(field, vec![2, 2]);
    r.set(&[0, 0], half.clone());
    r.set(&[0, 1], half.clone());
    r.set(&[1, 0], half.clone());
    r.set(&[1, 1], half.neg());
    Ok(r)
}

fn k_z2(field: FieldSpec, with_r: bool) -> Result<Builtin, String> {
    let core = z2_core(field);
    let unit = core.unit.clone();
    let phi = core.unit_element(3);
    let algebra = QuasiHopfAlgebra::new(core.clone(), phi, None, unit.clone(), unit)?;
    let r_matrix = if with_r {
        Some(z2_half_r(field)?)
    } else {
        Some(core.unit_element(2))
    };
    Ok(Builtin {
        name: if with_r {
            "kZ2_Rt".into()
        } else {
            "kZ2".into()
        },
        algebra,
        r_matrix,
    })
}

/// The 2-dimensional quasi-Hopf algebra k[g]/(g²−1) with the sign-cocycle
/// reassociator Φ = 1⊗1⊗1 − 2·p₋⊗p₋⊗p₋, S = id, α = g, β = 1.
fn h2(field: FieldSpec) -> Result<Builtin, String> {
    let core = z2_core(field);
    let quarter = field.from_fraction(1, 4)?;
    let mut phi = Tensor::zeros(field, vec![2, 2, 2]);
    for a in 0..2 {
        for b in 0..2 {
            for c in 0..2 {
                let sign = if (a + b + c) % 2 == 0 {
                    quarter.neg()
                } else {
                    quarter.clone()
                };
                let base = if a == 0 && b == 0 && c == 0 {
                    field.one()
                } else {
                    field.zero()
                };
                phi.set(&[a, b, c], base.add(&sign));
            }
        }
    }
    let alpha = Tensor::basis(field, 2, 1);
    let beta = core.unit.clone();
    let algebra = QuasiHopfAlgebra::new(core, phi, None, alpha, beta)?;
    Ok(Builtin {
        name: "H2".into(),
        algebra,
        r_matrix: None,
    })
}

/// Sweedler's 4-dimensional Hopf algebra with its triangular R-matrix.
/// Basis 1, x, g, gx with g² = 1, x² = 0, xg = −gx.
fn sweedler4(field: FieldSpec) -> Result<Builtin, String> {
    let n = 4;
    // index 2i+j encodes gⁱxʲ
    let idx = |i: usize, j: usize| 2 * i + j;
    let mut mult = LinearMap::zeros(field, n, n * n);
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    if j + l >= 2 {
                        continue; // x² = 0
                    }
                    let sign = if j * k == 1 {
                        field.from_i64(-1)
                    } else {
                        field.one()
                    };
                    mult.set(idx((i + k) % 2, j + l), idx(i, j) * n + idx(k, l), sign);
                }
            }
        }
    }
    // Δ(1)=1⊗1, Δ(x)=1⊗x+x⊗g, Δ(g)=g⊗g, Δ(gx)=g⊗gx+gx⊗1
    let mut comult = LinearMap::zeros(field, n * n, n);
    let one = idx(0, 0);
    let x = idx(0, 1);
    let g = idx(1, 0);
    let gx = idx(1, 1);
    comult.set(one * n + one, one, field.one());
    comult.set(one * n + x, x, field.one());
    comult.set(x * n + g, x, field.one());
    comult.set(g * n + g, g, field.one());
    comult.set(g * n + gx, gx, field.one());
    comult.set(gx * n + one, gx, field.one());
    let mut counit = LinearMap::zeros(field, 1, n);
    counit.set(0, one, field.one());
    counit.set(0, g, field.one());
    // S(1)=1, S(g)=g, S(x)=gx, S(gx)=−x
    let mut antipode = LinearMap::zeros(field, n, n);
    antipode.set(one, one, field.one());
    antipode.set(g, g, field.one());
    antipode.set(gx, x, field.one());
    antipode.set(x, gx, field.from_i64(-1));
    let core = Arc::new(AlgebraCore {
        field,
        dim: n,
        basis_names: vec!["1".into(), "x".into(), "g".into(), "gx".into()],
        mult,
        unit: Tensor::basis(field, n, 0),
        comult,
        counit,
        antipode_inv: antipode.inverse().ok_or("antipode not invertible")?,
        antipode,
    });
    let unit = core.unit.clone();
    let phi = core.unit_element(3);
    let algebra = QuasiHopfAlgebra::new(core, phi, None, unit.clone(), unit)?;
    // R = ½(1⊗1 + 1⊗g + g⊗1 − g⊗g)
    let half = field.from_fraction(1, 2)?;
    let mut r = Tensor::zeros(field, vec![n, n]);
    r.set(&[one, one], half.clone());
    r.set(&[one, g], half.clone());
    r.set(&[g, one], half.clone());
    r.set(&[g, g], half.neg());
    Ok(Builtin {
        name: "sweedler4_Rtri".into(),
        algebra,
        r_matrix: Some(r),
    })
}

/// Group algebra of ℤ₂×ℤ₂ (basis 1, u, g, ug) with the quasitriangular,
/// non-triangular R = ½(1⊗1 + u⊗1 + 1⊗g − u⊗g).
fn d_z2(field: FieldSpec) -> Result<Builtin, String> {
    // index 2i+j encodes uⁱgʲ
    let idx = |i: usize, j: usize| 2 * i + j;
    let mut table = vec![vec![0usize; 4]; 4];
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    table[idx(i, j)][idx(k, l)] = idx((i + k) % 2, (j + l) % 2);
                }
            }
        }
    }
    let core = group_algebra(field, &table, &[0, 1, 2, 3], &["1", "g", "u", "ug"]);
    let unit = core.unit.clone();
    let phi = core.unit_element(3);
    let algebra = QuasiHopfAlgebra::new(core, phi, None, unit.clone(), unit)?;
    let half = field.from_fraction(1, 2)?;
    let u = idx(1, 0);
    let g = idx(0, 1);
    let mut r = Tensor::zeros(field, vec![4, 4]);
    r.set(&[0, 0], half.clone());
    r.set(&[u, 0], half.clone());
    r.set(&[0, g], half.clone());
    r.set(&[u, g], half.neg());
    Ok(Builtin {
        name: "dZ2".into(),
        algebra,
        r_matrix: Some(r),
    })
}

/// Looks up a builtin by name and self-verifies the full axiom suite.
pub fn builtin(name: &str, field: FieldSpec) -> Result<Builtin, String> {
    let b = match name {
        "kZ2" => k_z2(field, false)?,
        "kZ2_Rt" => k_z2(field, true)?,
        "sweedler4_Rtri" => sweedler4(field)?,
        "H2" => h2(field)?,
        "dZ2" => d_z2(field)?,
        other => return Err(format!("unknown builtin {other:?}")),
    };
    verify_all(&b.algebra)
        .into_result()
        .map_err(|e| format!("builtin {name}: {e}"))?;
    Ok(b)
}

/// Finds an element of exact multiplicative order `n` in the field.
fn root_of_unity(field: FieldSpec, n: u64) -> Result<Scalar, String> {
    if n == 1 {
        return Ok(field.one());
    }
    match field {
        FieldSpec::Rationals => {
            if n == 2 {
                Ok(field.from_i64(-1))
            } else {
                Err(format!(
                    "no primitive {n}-th root of unity in the rationals"
                ))
            }
        }
        FieldSpec::PrimeField(p) => {
            if (p - 1) % n != 0 {
                return Err(format!("{n} does not divide {}", p - 1));
            }
            for c in 2..p {
                let zeta = field.from_i64(c as i64).pow((p - 1) / n);
                if (1..n).all(|k| !zeta.pow(k).is_one()) && zeta.pow(n).is_one() {
                    return Ok(zeta);
                }
            }
            Err("no root of unity found".into())
        }
    }
}

/// The function algebra on ℤ_n with reassociator built from the 3-cocycle
/// ω(a,b,c) = ζ^{q·a·⌊(b+c)/n⌋}; α = 1 and β is the diagonal element with
/// β_a = ω(a,−a,a)⁻¹, which satisfies both zig-zag normalizations.
pub fn cocycle_algebra(n: usize, q_exponent: i64, field: FieldSpec) -> Result<Builtin, String> {
    if n == 0 {
        return Err("n must be positive".into());
    }
    let zeta = root_of_unity(field, n as u64)?;
    let zpow = |e: i64| -> Scalar {
        let e = e.rem_euclid(n as i64) as u64;
        zeta.pow(e)
    };
    let dim = n;
    // δ-basis: δ_a δ_b = [a=b] δ_a; unit = Σ δ_a; Δ(δ_c) = Σ_{a+b=c} δ_a⊗δ_b
    let mut mult = LinearMap::zeros(field, dim, dim * dim);
    let mut comult = LinearMap::zeros(field, dim * dim, dim);
    let mut counit = LinearMap::zeros(field, 1, dim);
    let mut antipode = LinearMap::zeros(field, dim, dim);
    let mut unit = Tensor::zeros(field, vec![dim]);
    for a in 0..dim {
        mult.set(a, a * dim + a, field.one());
        for b in 0..dim {
            comult.set(a * dim + b, (a + b) % dim, field.one());
        }
        antipode.set((dim - a) % dim, a, field.one());
        unit.set(&[a], field.one());
    }
    counit.set(0, 0, field.one());
    let core = Arc::new(AlgebraCore {
        field,
        dim,
        basis_names: (0..dim).map(|a| format!("d{a}")).collect(),
        mult,
        unit,
        comult,
        counit,
        antipode_inv: antipode.inverse().unwrap(),
        antipode,
    });
    let carry = |b: usize, c: usize| ((b + c) / dim) as i64;
    let mut phi = Tensor::zeros(field, vec![dim, dim, dim]);
    for a in 0..dim {
        for b in 0..dim {
            for c in 0..dim {
                phi.set(&[a, b, c], zpow(q_exponent * a as i64 * carry(b, c)));
            }
        }
    }
    let alpha = core.unit.clone();
    let mut beta = Tensor::zeros(field, vec![dim]);
    for a in 0..dim {
        // ω(a,−a,a)⁻¹ = ζ^{−q·a·carry(n−a, a)}
        let carry_term = if a == 0 { 0 } else { 1 };
        beta.set(&[a], zpow(-q_exponent * a as i64 * carry_term));
    }
    let algebra = QuasiHopfAlgebra::new(core, phi, None, alpha, beta)?;
    verify_all(&algebra)
        .into_result()
        .map_err(|e| format!("cocycle algebra ({n},{q_exponent}): {e}"))?;
    Ok(Builtin {
        name: format!("cocycle_{n}_{q_exponent}"),
        algebra,
        r_matrix: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quasi_hopf::{gauge_twist, make_variant, Variant};

    fn fields() -> Vec<FieldSpec> {
        vec![FieldSpec::Rationals, FieldSpec::PrimeField(101)]
    }

    #[test]
    fn all_builtins_pass_axioms_and_derived_elements() {
        for field in fields() {
            for name in BUILTIN_NAMES {
                let b = builtin(name, field).unwrap();
                b.algebra.drinfeld_twist().unwrap();
                b.algebra.pq_elements().unwrap();
            }
        }
    }

    #[test]
    fn h2_needs_alpha_g() {
        // replacing α = g by α = 1 breaks the zig-zag normalization (q6)
        let field = FieldSpec::Rationals;
        let b = builtin("H2", field).unwrap();
        let h = &b.algebra;
        let broken = QuasiHopfAlgebra::new(
            h.core.clone(),
            h.phi.clone(),
            Some(h.phi_inv.clone()),
            h.core.unit.clone(),
            h.beta.clone(),
        )
        .unwrap();
        let rep = crate::quasi_hopf::verify_antipode(&broken);
        assert!(rep.entries.iter().any(|e| e.tag == "(q6)" && !e.pass));
    }

    #[test]
    fn variants_of_builtins_pass() {
        for name in BUILTIN_NAMES {
            let b = builtin(name, FieldSpec::PrimeField(101)).unwrap();
            for v in [Variant::Op, Variant::Cop, Variant::OpCop] {
                make_variant(&b.algebra, v).unwrap();
            }
        }
    }

    #[test]
    fn gauge_twist_by_unit_is_identity() {
        let b = builtin("H2", FieldSpec::Rationals).unwrap();
        let f = b.algebra.core.unit_element(2);
        let t = gauge_twist(&b.algebra, &f).unwrap();
        assert_eq!(t.phi, b.algebra.phi);
        assert_eq!(t.alpha, b.algebra.alpha);
        assert_eq!(t.core.comult, b.algebra.core.comult);
    }

    #[test]
    fn gauge_twist_kz2_by_half_r_kills_nothing() {
        // F = ½(1⊗1+1⊗g+g⊗1−g⊗g) on kℤ₂: Δ_F = Δ and Φ_F = 1⊗1⊗1
        let b = builtin("kZ2", FieldSpec::Rationals).unwrap();
        let f = z2_half_r(FieldSpec::Rationals).unwrap();
        let t = gauge_twist(&b.algebra, &f).unwrap();
        assert_eq!(t.core.comult, b.algebra.core.comult);
        assert_eq!(t.phi, b.algebra.core.unit_element(3));
    }

    #[test]
    fn cocycle_algebras_pass() {
        cocycle_algebra(1, 0, FieldSpec::Rationals).unwrap();
        cocycle_algebra(2, 1, FieldSpec::Rationals).unwrap();
        cocycle_algebra(3, 1, FieldSpec::prime_field(7).unwrap()).unwrap();
        cocycle_algebra(4, 1, FieldSpec::prime_field(101).unwrap()).unwrap();
        assert!(cocycle_algebra(3, 1, FieldSpec::Rationals).is_err());
    }

    #[test]
    fn h2_phi_is_an_involution() {
        let b = builtin("H2", FieldSpec::Rationals).unwrap();
        assert_eq!(b.algebra.phi, b.algebra.phi_inv);
    }
}

/// All algebra maps H → k (one-dimensional modules) of a builtin, as 1×n
/// row maps. Shipped as constants per algebra and re-verified by the caller
/// when used as module actions.
pub fn characters(name: &str, field: FieldSpec) -> Result<Vec<LinearMap>, String> {
    let rows: Vec<Vec<i64>> = match name {
        "kZ2" | "kZ2_Rt" | "H2" => vec![vec![1, 1], vec![1, -1]],
        // basis 1, x, g, gx: x and gx die in any character
        "sweedler4_Rtri" => vec![vec![1, 0, 1, 0], vec![1, 0, -1, 0]],
        // basis 1, g, u, ug: four sign characters
        "dZ2" => vec![
            vec![1, 1, 1, 1],
            vec![1, -1, 1, -1],
            vec![1, 1, -1, -1],
            vec![1, -1, -1, 1],
        ],
        _ => return Err(format!("unknown builtin: {name}")),
    };
    Ok(rows
        .into_iter()
        .map(|r| {
            let entries: Vec<Scalar> = r.into_iter().map(|v| field.from_i64(v)).collect();
            let src_dim = entries.len();
            LinearMap {
                field,
                dst_dim: 1,
                src_dim,
                entries,
            }
        })
        .collect())
}

/// Searches for a quasitriangular structure on H2. The counit axioms force
/// R = (1−b)·1⊗1 + b·(1⊗g + g⊗1 − g⊗g); this scans b and returns the first
/// value passing the full verification (none exists over the rationals;
/// over F_p one exists whenever the defining quadratic has a root).
pub fn h2_r_matrix(field: FieldSpec) -> Option<Tensor> {
    let b = builtin("H2", field).ok()?;
    let range: Vec<i64> = match field {
        FieldSpec::PrimeField(p) => (0..p as i64).collect(),
        FieldSpec::Rationals => (-8..=8).collect(),
    };
    for bv in range {
        let bb = field.from_i64(bv);
        let one = field.one();
        let coeffs = vec![one.sub(&bb), bb.clone(), bb.clone(), bb.neg()];
        let r = Tensor::from_vec(field, vec![2, 2], coeffs);
        if crate::quasitriangular::verify_qt(&b.algebra, &r).all_pass() {
            return Some(r);
        }
    }
    None
}
