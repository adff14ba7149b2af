//! Quasitriangular structure: R-matrix axioms, the two closed forms of R⁻¹,
//! the square-of-the-antipode element u, and triangularity.

use crate::quasi_hopf::QuasiHopfAlgebra;
use crate::report::VerificationReport;
use crate::tensor::{invert_element, mul_elements, tensor_embed, Tensor};

/// A verified quasitriangular structure on a quasi-Hopf algebra.
#[derive(Debug, Clone)]
pub struct QTStructure {
    pub r: Tensor,
    pub r_inv: Tensor,
    pub u: Tensor,
    pub u_inv: Tensor,
    pub triangular: bool,
}

/// Checks the R-matrix axioms: the two hexagon-style coproduct identities,
/// the intertwining of Δ and Δ^op, and counit normalization.
pub fn verify_qt(h: &QuasiHopfAlgebra, r: &Tensor) -> VerificationReport {
    let mut rep = VerificationReport::new();
    let core = &h.core;
    let n = core.dim;
    if r.dims != vec![n, n] {
        rep.record("(qt)", false, "R must have two legs");
        return rep;
    }
    // Φ_{σ(1)σ(2)σ(3)} = X^{σ⁻¹(1)} ⊗ X^{σ⁻¹(2)} ⊗ X^{σ⁻¹(3)}
    let phi_312 = h.phi.permute(&[1, 2, 0]);
    let phi_inv_132 = h.phi_inv.permute(&[0, 2, 1]);
    let phi_inv_231 = h.phi_inv.permute(&[2, 0, 1]);
    let phi_213 = h.phi.permute(&[1, 0, 2]);
    let r13 = tensor_embed(core, r, &[0, 2], 3).unwrap();
    let r23 = tensor_embed(core, r, &[1, 2], 3).unwrap();
    let r12 = tensor_embed(core, r, &[0, 1], 3).unwrap();
    let prod = |factors: &[&Tensor]| -> Tensor {
        let mut acc = factors[0].clone();
        for f in &factors[1..] {
            acc = mul_elements(core, &acc, f);
        }
        acc
    };
    // (qt1): (Δ⊗id)(R) = Φ₃₁₂ R₁₃ Φ⁻¹₁₃₂ R₂₃ Φ
    {
        let mut w = h.word();
        let rl = w.constant(r);
        let (r11, r12l) = w.coproduct(rl[0]);
        let lhs = w.finish_tensor(&[r11, r12l, rl[1]]);
        let rhs = prod(&[&phi_312, &r13, &phi_inv_132, &r23, &h.phi]);
        rep.check("(qt1)", lhs == rhs);
    }
    // (qt2): (id⊗Δ)(R) = Φ⁻¹₂₃₁ R₁₃ Φ₂₁₃ R₁₂ Φ⁻¹
    {
        let mut w = h.word();
        let rl = w.constant(r);
        let (r21, r22) = w.coproduct(rl[1]);
        let lhs = w.finish_tensor(&[rl[0], r21, r22]);
        let rhs = prod(&[&phi_inv_231, &r13, &phi_213, &r12, &h.phi_inv]);
        rep.check("(qt2)", lhs == rhs);
    }
    // (qt3): Δ^op(h) R = R Δ(h) for all h
    {
        let mut w = h.word();
        let s = w.source();
        let (h1, h2) = w.coproduct(s);
        let rl = w.constant(r);
        let o1 = w.mul(h2, rl[0]);
        let o2 = w.mul(h1, rl[1]);
        let lhs = w.finish_map(&[o1, o2]);
        let mut w = h.word();
        let s = w.source();
        let (h1, h2) = w.coproduct(s);
        let rl = w.constant(r);
        let o1 = w.mul(rl[0], h1);
        let o2 = w.mul(rl[1], h2);
        let rhs = w.finish_map(&[o1, o2]);
        rep.check("(qt3)", lhs == rhs);
    }
    // (qt4): (ε⊗id)(R) = (id⊗ε)(R) = 1
    {
        let left = r.apply_map_at(&[0], &[], &core.counit);
        let right = r.apply_map_at(&[1], &[], &core.counit);
        rep.check("(qt4)", left == core.unit && right == core.unit);
    }
    rep
}

/// Computes R⁻¹ three independent ways — two closed forms and a direct
/// linear solve — and insists they agree.
pub fn r_inverse(h: &QuasiHopfAlgebra, r: &Tensor) -> Result<Tensor, String> {
    let core = &h.core;
    let pq = h.pq_elements()?;
    // closed form 1: R⁻¹ = X¹βS(Y²R¹x¹X²)αY³x³X³₂ ⊗ Y¹R²x²X³₁
    let via_zigzag = {
        let mut w = h.word();
        let x_caps = w.constant(&h.phi); // X
        let (x31, x32) = w.coproduct(x_caps[2]);
        let x_low = w.constant(&h.phi_inv); // x
        let t = w.mul(x_low[0], x_caps[1]); // x¹X²
        let rl = w.constant(r);
        let a = w.mul(rl[0], t); // R¹x¹X²
        let b = w.mul(rl[1], x_low[1]); // R²x²
        let c = w.mul(x_low[2], x32); // x³X³₂
        let y = w.constant(&h.phi); // Y
        let s = w.mul(y[1], a);
        let s = w.antipode(s); // S(Y²R¹x¹X²)
        let be = w.constant1(&h.beta);
        let al = w.constant1(&h.alpha);
        let leg1 = w.mul_all(&[x_caps[0], be, s, al, y[2], c]);
        let leg2 = w.mul_all(&[y[0], b, x31]);
        w.finish_tensor(&[leg1, leg2])
    };
    // closed form 2: R⁻¹ = q̃²₁X²R¹p¹ ⊗ q̃²₂X³S⁻¹(q̃¹X¹R²p²)
    let via_pq = {
        let mut w = h.word();
        let q = w.constant(&pq.q_l);
        let (q21, q22) = w.coproduct(q[1]);
        let x = w.constant(&h.phi);
        let rl = w.constant(r);
        let p = w.constant(&pq.p_r);
        let t = w.mul_all(&[q[0], x[0], rl[1], p[1]]);
        let t = w.antipode_inv(t);
        let leg1 = w.mul_all(&[q21, x[1], rl[0], p[0]]);
        let leg2 = w.mul_all(&[q22, x[2], t]);
        w.finish_tensor(&[leg1, leg2])
    };
    let via_solve = invert_element(core, r)?;
    if via_zigzag != via_solve || via_pq != via_solve {
        return Err("ConsistencyFailure: the three routes to R⁻¹ disagree".into());
    }
    Ok(via_solve)
}

/// Computes u = S(R²p²)αR¹p¹ and its closed-form inverse, and verifies
/// ε(u)=1, S²(u)=u, S²(h)=uhu⁻¹, S(R²)αR¹=S(α)u, and the compatibility of
/// the antipode twist with R.
pub fn u_element(h: &QuasiHopfAlgebra, r: &Tensor) -> Result<(Tensor, Tensor), String> {
    let core = &h.core;
    let pq = h.pq_elements()?;
    let u = {
        let mut w = h.word();
        let rl = w.constant(r);
        let p = w.constant(&pq.p_r);
        let t = w.mul(rl[1], p[1]);
        let t = w.antipode(t);
        let al = w.constant1(&h.alpha);
        let b = w.mul(rl[0], p[0]);
        let out = w.mul_all(&[t, al, b]);
        w.finish_tensor(&[out])
    };
    // u⁻¹ = X¹R²p²S(S(X²R¹p¹)αX³)
    let u_inv = {
        let mut w = h.word();
        let x = w.constant(&h.phi);
        let rl = w.constant(r);
        let p = w.constant(&pq.p_r);
        let a = w.mul(rl[1], p[1]); // R²p²
        let b = w.mul(rl[0], p[0]); // R¹p¹
        let c = w.mul(x[1], b);
        let c = w.antipode(c); // S(X²R¹p¹)
        let al = w.constant1(&h.alpha);
        let d = w.mul_all(&[c, al, x[2]]);
        let d = w.antipode(d);
        let out = w.mul_all(&[x[0], a, d]);
        w.finish_tensor(&[out])
    };
    let unit = core.unit.clone();
    if mul_elements(core, &u, &u_inv) != unit || mul_elements(core, &u_inv, &u) != unit {
        return Err("ConsistencyFailure: u·u⁻¹ ≠ 1".into());
    }
    if u.apply_map_at(&[0], &[], &core.counit).coeffs[0] != core.field.one() {
        return Err("ConsistencyFailure: ε(u) ≠ 1".into());
    }
    if h.s_of(&h.s_of(&u)) != u {
        return Err("ConsistencyFailure: S²(u) ≠ u".into());
    }
    // (sqina): S²(h) = u h u⁻¹ for all h
    {
        let mut w = h.word();
        let s = w.source();
        let ul = w.constant1(&u);
        let vl = w.constant1(&u_inv);
        let out = w.mul_all(&[ul, s, vl]);
        let conj = w.finish_map(&[out]);
        let s2 = core.antipode.compose(&core.antipode);
        if conj != s2 {
            return Err("ConsistencyFailure: S² is not conjugation by u".into());
        }
    }
    // (sext): S(R²)αR¹ = S(α)u
    {
        let mut w = h.word();
        let rl = w.constant(r);
        let sr2 = w.antipode(rl[1]);
        let al = w.constant1(&h.alpha);
        let out = w.mul_all(&[sr2, al, rl[0]]);
        let lhs = w.finish_tensor(&[out]);
        let rhs = mul_elements(core, &h.s_of(&h.alpha), &u);
        if lhs != rhs {
            return Err("ConsistencyFailure: S(R²)αR¹ ≠ S(α)u".into());
        }
    }
    // (ext): f₂₁ R f⁻¹ = (S⊗S)(R)
    {
        let tw = h.drinfeld_twist()?;
        let f21 = tw.f.permute(&[1, 0]);
        let lhs = mul_elements(core, &mul_elements(core, &f21, r), &tw.f_inv);
        let rhs = r.map_leg(0, &core.antipode).map_leg(1, &core.antipode);
        if lhs != rhs {
            return Err("ConsistencyFailure: f₂₁Rf⁻¹ ≠ (S⊗S)(R)".into());
        }
    }
    Ok((u, u_inv))
}

/// Whether R⁻¹ = R₂₁.
pub fn is_triangular(h: &QuasiHopfAlgebra, r: &Tensor) -> Result<bool, String> {
    Ok(r_inverse(h, r)? == r.permute(&[1, 0]))
}

/// Verifies the axioms and assembles the full structure record.
pub fn make_qt(h: &QuasiHopfAlgebra, r: &Tensor) -> Result<QTStructure, String> {
    verify_qt(h, r).into_result()?;
    let r_inv = r_inverse(h, r)?;
    let (u, u_inv) = u_element(h, r)?;
    let triangular = r_inv == r.permute(&[1, 0]);
    Ok(QTStructure {
        r: r.clone(),
        r_inv,
        u,
        u_inv,
        triangular,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::builtin;
    use crate::field::FieldSpec;

    #[test]
    fn qt_builtins_pass() {
        for field in [FieldSpec::Rationals, FieldSpec::PrimeField(101)] {
            for (name, tri) in [
                ("kZ2", true),
                ("kZ2_Rt", true),
                ("sweedler4_Rtri", true),
                ("dZ2", false),
            ] {
                let b = builtin(name, field).unwrap();
                let r = b.r_matrix.as_ref().unwrap();
                let qt = make_qt(&b.algebra, r).unwrap();
                assert_eq!(qt.triangular, tri, "{name}");
            }
        }
    }

    #[test]
    fn kz2_rt_is_involutive() {
        let b = builtin("kZ2_Rt", FieldSpec::Rationals).unwrap();
        let r = b.r_matrix.as_ref().unwrap();
        assert_eq!(&r_inverse(&b.algebra, r).unwrap(), r);
    }

    #[test]
    fn trivial_r_on_sweedler_fails_qt3() {
        let b = builtin("sweedler4_Rtri", FieldSpec::Rationals).unwrap();
        let trivial = b.algebra.core.unit_element(2);
        let rep = verify_qt(&b.algebra, &trivial);
        assert!(rep.entries.iter().any(|e| e.tag == "(qt3)" && !e.pass));
    }

    #[test]
    fn u_is_g_on_kz2_rt() {
        // with Φ trivial, β = 1 and S = id: u = S(R²)R¹ = ½(1+g+g−1) = g
        let b = builtin("kZ2_Rt", FieldSpec::Rationals).unwrap();
        let (u, _) = u_element(&b.algebra, b.r_matrix.as_ref().unwrap()).unwrap();
        assert_eq!(u, Tensor::basis(FieldSpec::Rationals, 2, 1));
    }

    #[test]
    fn dz2_u_element() {
        // u = ½(1 + u + g − ug) in the group-element basis of dZ2
        let field = FieldSpec::Rationals;
        let b = builtin("dZ2", field).unwrap();
        let (u, _) = u_element(&b.algebra, b.r_matrix.as_ref().unwrap()).unwrap();
        let half = field.from_fraction(1, 2).unwrap();
        let mut expect = Tensor::zeros(field, vec![4]);
        expect.set(&[0], half.clone()); // 1
        expect.set(&[2], half.clone()); // u
        expect.set(&[1], half.clone()); // g
        expect.set(&[3], half.neg()); // ug
        assert_eq!(u, expect);
    }
}
