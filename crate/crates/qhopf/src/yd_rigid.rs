//! Rigidity of finite-dimensional left-left Yetter-Drinfeld modules and
//! the canonical isomorphisms M ≅ M**, (M⊗N)* ≅ M*⊗N*: closed forms are
//! computed from dual-basis formulas and checked against the categorical
//! composites built out of evaluation, coevaluation, associators, and the
//! braiding.

use crate::hmod::{dual_module, tensor_modules, DualSide};
use crate::linalg::LinearMap;
use crate::quasi_hopf::QuasiHopfAlgebra;
use crate::report::VerificationReport;
use crate::tensor::{invert_element, Tensor};
use crate::yd::{yd_braiding, yd_tensor, Flavor, YDModule, YDMorphism};
use std::sync::Arc;

/// The relations tying the q-elements, the reassociator, and the Drinfeld
/// twist together.
pub fn lemma31(h: &Arc<QuasiHopfAlgebra>) -> VerificationReport {
    let mut rep = VerificationReport::new();
    let pq = match h.pq_elements() {
        Ok(pq) => pq,
        Err(e) => {
            rep.record("fo1", false, &e);
            return rep;
        }
    };
    let tw = match h.drinfeld_twist() {
        Ok(tw) => tw,
        Err(e) => {
            rep.record("fo2", false, &e);
            return rep;
        }
    };
    // q̃¹X¹ ⊗ q̃²₁X² ⊗ q̃²₂X³ = S(x¹)q̃¹x²₁ ⊗ q̃²x²₂ ⊗ x³
    let lhs = {
        let mut w = h.word();
        let q = w.constant(&pq.q_l);
        let x = w.constant(&h.phi);
        let (q21, q22) = w.coproduct(q[1]);
        let o1 = w.mul(q[0], x[0]);
        let o2 = w.mul(q21, x[1]);
        let o3 = w.mul(q22, x[2]);
        w.finish_tensor(&[o1, o2, o3])
    };
    let rhs = {
        let mut w = h.word();
        let x = w.constant(&h.phi_inv);
        let q = w.constant(&pq.q_l);
        let (x21, x22) = w.coproduct(x[1]);
        let sx = w.antipode(x[0]);
        let o1 = w.mul_all(&[sx, q[0], x21]);
        let o2 = w.mul(q[1], x22);
        w.finish_tensor(&[o1, o2, x[2]])
    };
    rep.check("fo1", lhs == rhs);
    // S(p¹)q̃¹p²₁S(Q̃²)₁ ⊗ Q̃¹q̃²p²₂S(Q̃²)₂ = f
    let lhs = {
        let mut w = h.word();
        let p = w.constant(&pq.p_r);
        let q = w.constant(&pq.q_l);
        let qq = w.constant(&pq.q_l);
        let (p21, p22) = w.coproduct(p[1]);
        let sq = w.antipode(qq[1]);
        let (sq1, sq2) = w.coproduct(sq);
        let sp = w.antipode(p[0]);
        let o1 = w.mul_all(&[sp, q[0], p21, sq1]);
        let o2 = w.mul_all(&[qq[0], q[1], p22, sq2]);
        w.finish_tensor(&[o1, o2])
    };
    rep.check("fo2", lhs == tw.f);
    rep
}

/// Standalone two- and three-leg identities used when computing the tensor
/// isomorphism of duals.
pub fn section4_identities(h: &Arc<QuasiHopfAlgebra>) -> VerificationReport {
    let mut rep = VerificationReport::new();
    let pq = match h.pq_elements() {
        Ok(pq) => pq,
        Err(e) => {
            rep.record("ufo", false, &e);
            return rep;
        }
    };
    let tw = match h.drinfeld_twist() {
        Ok(tw) => tw,
        Err(e) => {
            rep.record("ufo", false, &e);
            return rep;
        }
    };
    // q¹g¹₁ ⊗ S(q²g¹₂)g² = S(X³)f¹ ⊗ S(X¹βS(X²)f²)
    let lhs = {
        let mut w = h.word();
        let q = w.constant(&pq.q_r);
        let g = w.constant(&tw.f_inv);
        let (g11, g12) = w.coproduct(g[0]);
        let o1 = w.mul(q[0], g11);
        let t = w.mul(q[1], g12);
        let st = w.antipode(t);
        let o2 = w.mul(st, g[1]);
        w.finish_tensor(&[o1, o2])
    };
    let rhs = {
        let mut w = h.word();
        let x = w.constant(&h.phi);
        let f = w.constant(&tw.f);
        let b = w.constant1(&h.beta);
        let sx3 = w.antipode(x[2]);
        let o1 = w.mul(sx3, f[0]);
        let sx2 = w.antipode(x[1]);
        let t = w.mul_all(&[x[0], b, sx2, f[1]]);
        let o2 = w.antipode(t);
        w.finish_tensor(&[o1, o2])
    };
    rep.check("ufo", lhs == rhs);
    // S(p²f¹)F¹f²₁ ⊗ S(p¹)F²f²₂ = q_L, with F another copy of f
    let lhs = {
        let mut w = h.word();
        let p = w.constant(&pq.p_r);
        let f = w.constant(&tw.f);
        let ff = w.constant(&tw.f);
        let (f21, f22) = w.coproduct(f[1]);
        let t = w.mul(p[1], f[0]);
        let st = w.antipode(t);
        let o1 = w.mul_all(&[st, ff[0], f21]);
        let sp = w.antipode(p[0]);
        let o2 = w.mul_all(&[sp, ff[1], f22]);
        w.finish_tensor(&[o1, o2])
    };
    rep.check("ufox", lhs == pq.q_l);
    // q¹[g¹S(q̃²₁X²)f²]₁ ⊗ S(q²[g¹S(q̃²₁X²)f²]₂)g²S(q̃¹X¹) ⊗ S(q̃²X³)f¹
    //   = f²F¹₂x² ⊗ S(F²x³) ⊗ f¹F¹₁x¹  (with F another copy of f)
    let lhs = {
        let mut w = h.word();
        let ql = w.constant(&pq.q_l);
        let x = w.constant(&h.phi);
        let (q21, q22) = w.coproduct(ql[1]);
        let g = w.constant(&tw.f_inv);
        let f = w.constant(&tw.f);
        let t = w.mul(q21, x[1]);
        let st = w.antipode(t);
        let inner = w.mul_all(&[g[0], st, f[1]]);
        let (i1, i2) = w.coproduct(inner);
        let q = w.constant(&pq.q_r);
        let o1 = w.mul(q[0], i1);
        let t2 = w.mul(q[1], i2);
        let st2 = w.antipode(t2);
        let t3 = w.mul(ql[0], x[0]);
        let st3 = w.antipode(t3);
        let o2 = w.mul_all(&[st2, g[1], st3]);
        let t4 = w.mul(q22, x[2]);
        let st4 = w.antipode(t4);
        let o3 = w.mul(st4, f[0]);
        w.finish_tensor(&[o1, o2, o3])
    };
    let rhs = {
        let mut w = h.word();
        let f = w.constant(&tw.f);
        let ff = w.constant(&tw.f);
        let x = w.constant(&h.phi_inv);
        let (ff11, ff12) = w.coproduct(ff[0]);
        let o1 = w.mul_all(&[f[1], ff12, x[1]]);
        let t = w.mul(ff[1], x[2]);
        let o2 = w.antipode(t);
        let o3 = w.mul_all(&[f[0], ff11, x[0]]);
        w.finish_tensor(&[o1, o2, o3])
    };
    rep.check("uf", lhs == rhs);
    rep
}

/// Reindexes a map built on the module side into the corresponding map on
/// dual coordinates: u: M → H⊗M with u[(a,j),i] becomes the coaction
/// λ[(a,i),j] on M*.
fn dualize_coaction(u: &LinearMap, n: usize, d: usize) -> LinearMap {
    Tensor::from_vec(u.field, vec![n, d, d], u.entries.clone())
        .permute(&[0, 2, 1])
        .into_map(2)
}

/// A dual Yetter-Drinfeld module with its evaluation and coevaluation.
#[derive(Debug, Clone)]
pub struct YDDualData {
    pub which: DualSide,
    pub dual: YDModule,
    pub ev: LinearMap,
    pub coev: LinearMap,
}

/// Builds M* (left dual) or *M (right dual) of a left-left YD module: the
/// module structure of the module-category dual, with the twist-conjugated
/// coaction; checks the YD axioms, that evaluation and coevaluation are
/// YD morphisms, and the snake identities.
pub fn yd_dual(m: &YDModule, which: DualSide) -> Result<YDDualData, String> {
    if m.flavor != Flavor::LL {
        return Err("duals are implemented for left-left modules".into());
    }
    let h = &m.h;
    let a = &m.module.action;
    let d = m.dim();
    let n = h.core.dim;
    let tw = h.drinfeld_twist()?;
    let base = dual_module(h, &m.module, which)?;
    let coaction = match which {
        DualSide::LeftDual => {
            // λ(m*) = ⟨m*, f²·(g¹·ᵢm)₍₀₎⟩ S⁻¹(f¹(g¹·ᵢm)₍₋₁₎g²) ⊗ ⁱm
            let u = {
                let mut w = h.word();
                let s = w.source_dim(d);
                let g = w.constant(&tw.f_inv);
                let gm = w.act(a, g[0], s);
                let (l, l0) = w.coact_left(&m.coaction, gm);
                let f = w.constant(&tw.f);
                let t = w.mul_all(&[f[0], l, g[1]]);
                let o1 = w.antipode_inv(t);
                let o2 = w.act(a, f[1], l0);
                w.finish_map(&[o1, o2])
            };
            dualize_coaction(&u, n, d)
        }
        DualSide::RightDual => {
            // λ(*m) = ⟨*m, S⁻¹(f¹)·(S⁻¹(g²)·ᵢm)₍₀₎⟩ g¹S((S⁻¹(g²)·ᵢm)₍₋₁₎)f² ⊗ ⁱm
            let u = {
                let mut w = h.word();
                let s = w.source_dim(d);
                let g = w.constant(&tw.f_inv);
                let sg = w.antipode_inv(g[1]);
                let gm = w.act(a, sg, s);
                let (l, l0) = w.coact_left(&m.coaction, gm);
                let f = w.constant(&tw.f);
                let sl = w.antipode(l);
                let o1 = w.mul_all(&[g[0], sl, f[1]]);
                let sf = w.antipode_inv(f[0]);
                let o2 = w.act(a, sf, l0);
                w.finish_map(&[o1, o2])
            };
            dualize_coaction(&u, n, d)
        }
    };
    let dual = YDModule::new(h.clone(), Flavor::LL, base.dual, coaction)?;
    // evaluation and coevaluation intertwine the YD structures
    let (pair_src, pair_dst) = match which {
        DualSide::LeftDual => (yd_tensor(&dual, m)?, yd_tensor(m, &dual)?),
        DualSide::RightDual => (yd_tensor(m, &dual)?, yd_tensor(&dual, m)?),
    };
    let triv = YDModule::trivial(h, Flavor::LL);
    YDMorphism::new(pair_src, triv.clone(), base.ev.clone())
        .map_err(|e| format!("evaluation: {e}"))?;
    YDMorphism::new(triv, pair_dst, base.coev.clone()).map_err(|e| format!("coevaluation: {e}"))?;
    Ok(YDDualData {
        which,
        dual,
        ev: base.ev,
        coev: base.coev,
    })
}

/// The transpose of a morphism through the duals; asserted to coincide with
/// the plain matrix transpose.
pub fn transpose(nu: &YDMorphism, which: DualSide) -> Result<YDMorphism, String> {
    let h = &nu.src.h;
    let field = h.field();
    let src_dual = yd_dual(&nu.src, which)?;
    let dst_dual = yd_dual(&nu.dst, which)?;
    let (dm, dn) = (nu.src.dim(), nu.dst.dim());
    let id_nstar = LinearMap::identity(field, dn);
    let id_mstar = LinearMap::identity(field, dm);
    let composite = match which {
        DualSide::LeftDual => {
            // ν*: N* → M*: (ev_N⊗M*) ∘ a⁻¹_{N*,N,M*} ∘ (N*⊗(ν⊗M*)) ∘ (N*⊗coev_M)
            let a_inv = crate::hmod::associator_inv(
                h,
                &dst_dual.dual.module,
                &nu.dst.module,
                &src_dual.dual.module,
            )?;
            dst_dual
                .ev
                .kron(&id_mstar)
                .compose(&a_inv.map)
                .compose(&id_nstar.kron(&nu.map.kron(&id_mstar)))
                .compose(&id_nstar.kron(&src_dual.coev))
        }
        DualSide::RightDual => {
            // *ν: *N → *M: (*M⊗ev'_N) ∘ a_{*M,N,*N} ∘ ((*M⊗ν)⊗*N) ∘ (coev'_M⊗*N)
            let a = crate::hmod::associator(
                h,
                &src_dual.dual.module,
                &nu.dst.module,
                &dst_dual.dual.module,
            )?;
            id_mstar
                .kron(&dst_dual.ev)
                .compose(&a.map)
                .compose(&id_mstar.kron(&nu.map).kron(&id_nstar))
                .compose(&src_dual.coev.kron(&id_nstar))
        }
    };
    let plain = nu.map.transpose();
    if composite != plain {
        return Err("transpose composite differs from the matrix transpose".into());
    }
    YDMorphism::new(dst_dual.dual, src_dual.dual, composite)
}

/// A pair of mutually inverse YD morphisms.
#[derive(Debug, Clone)]
pub struct CanonicalIso {
    pub map: YDMorphism,
    pub inverse: YDMorphism,
}

impl CanonicalIso {
    fn new(map: YDMorphism, inverse: YDMorphism) -> Result<CanonicalIso, String> {
        if !map.map.compose(&inverse.map).is_identity()
            || !inverse.map.compose(&map.map).is_identity()
        {
            return Err("maps are not mutually inverse".into());
        }
        Ok(CanonicalIso { map, inverse })
    }
}

/// The identification of M with the double duals *(M*) and (*M)*: the
/// coordinate identity, asserted equal to the categorical snake composites.
/// Returns (θ: M → *(M*), θ′: M → (*M)*).
pub fn canonical_theta(m: &YDModule) -> Result<(CanonicalIso, CanonicalIso), String> {
    let h = &m.h;
    let field = h.field();
    let d = m.dim();
    let id = LinearMap::identity(field, d);
    let left = yd_dual(m, DualSide::LeftDual)?;
    let right = yd_dual(m, DualSide::RightDual)?;
    let star_of_left = yd_dual(&left.dual, DualSide::RightDual)?;
    let left_of_star = yd_dual(&right.dual, DualSide::LeftDual)?;

    // θ′ composite into (*M)*: (ev'_M⊗(*M)*) ∘ a⁻¹_{M,*M,(*M)*} ∘ (M⊗coev_{*M})
    let theta_prime_composite = {
        let coev = yd_dual(&right.dual, DualSide::LeftDual)?.coev;
        let a_inv = crate::hmod::associator_inv(
            h,
            &m.module,
            &right.dual.module,
            &left_of_star.dual.module,
        )?;
        right
            .ev
            .kron(&id)
            .compose(&a_inv.map)
            .compose(&id.kron(&coev))
    };
    if theta_prime_composite != id {
        return Err("double-dual composite is not the coordinate identity".into());
    }
    // θ′⁻¹ composite: (ev_{*M}⊗M) ∘ a⁻¹_{(*M)*,*M,M} ∘ ((*M)*⊗coev'_M)
    let theta_prime_inv_composite = {
        let ev = left_of_star.ev.clone();
        let a_inv = crate::hmod::associator_inv(
            h,
            &left_of_star.dual.module,
            &right.dual.module,
            &m.module,
        )?;
        ev.kron(&id)
            .compose(&a_inv.map)
            .compose(&id.kron(&right.coev))
    };
    if theta_prime_inv_composite != id {
        return Err("inverse double-dual composite is not the coordinate identity".into());
    }
    let theta = CanonicalIso::new(
        YDMorphism::new(m.clone(), star_of_left.dual.clone(), id.clone())?,
        YDMorphism::new(star_of_left.dual, m.clone(), id.clone())?,
    )?;
    let theta_prime = CanonicalIso::new(
        YDMorphism::new(m.clone(), left_of_star.dual.clone(), theta_prime_composite)?,
        YDMorphism::new(left_of_star.dual, m.clone(), theta_prime_inv_composite)?,
    )?;
    Ok((theta, theta_prime))
}

/// Θ_M: M* → *M, closed form against the braiding composite, with the
/// closed-form inverse built from V = S⁻¹(f²p²)⊗S⁻¹(f¹p¹).
pub fn canonical_big_theta(m: &YDModule) -> Result<CanonicalIso, String> {
    let h = &m.h;
    let field = h.field();
    let a = &m.module.action;
    let d = m.dim();
    let tw = h.drinfeld_twist()?;
    let pq = h.pq_elements()?;
    let left = yd_dual(m, DualSide::LeftDual)?;
    let right = yd_dual(m, DualSide::RightDual)?;
    // closed form:
    // Θ(m*) = ⟨m*, S(p¹)f²·(g¹·ⱼm)₍₀₎⟩⟨ʲm, S(q²)S⁻¹(q¹S⁻¹(f¹(g¹·ⱼm)₍₋₁₎g²)p²)·ᵢm⟩ ⁱm
    let closed = {
        let mut w = h.word();
        let y = w.source_dim(d);
        let legs = w.constant(&identity_element(field, d));
        let g = w.constant(&tw.f_inv);
        let gm = w.act(a, g[0], legs[0]);
        let (l, l0) = w.coact_left(&m.coaction, gm);
        let f = w.constant(&tw.f);
        let p = w.constant(&pq.p_r);
        let sp = w.antipode(p[0]);
        let t1h = w.mul(sp, f[1]);
        let t1 = w.act(a, t1h, l0);
        let inner = w.mul_all(&[f[0], l, g[1]]);
        let si = w.antipode_inv(inner);
        let q = w.constant(&pq.q_r);
        let t2 = w.mul_all(&[q[0], si, p[1]]);
        let st2 = w.antipode_inv(t2);
        let sq = w.antipode(q[1]);
        let hh = w.mul(sq, st2);
        let z = w.act(a, hh, y);
        w.pair(legs[1], z, d);
        w.finish_map(&[t1])
    }
    .transpose();
    // categorical composite:
    // (*M⊗ev_M) ∘ a_{*M,M*,M} ∘ (c_{M*,*M}⊗M) ∘ a⁻¹_{M*,*M,M} ∘ (M*⊗coev'_M)
    let composite = {
        let id = LinearMap::identity(field, d);
        let (c, _) = yd_braiding(&left.dual, &right.dual)?;
        let a1 = crate::hmod::associator_inv(h, &left.dual.module, &right.dual.module, &m.module)?;
        let a2 = crate::hmod::associator(h, &right.dual.module, &left.dual.module, &m.module)?;
        id.kron(&left.ev)
            .compose(&a2.map)
            .compose(&c.map.kron(&id))
            .compose(&a1.map)
            .compose(&id.kron(&right.coev))
    };
    if closed != composite {
        return Err("closed form differs from the braiding composite".into());
    }
    // inverse closed form:
    // Θ⁻¹(*m) = ⟨*m, V²·ⱼm₍₀₎⟩⟨ʲm, βS(V¹ⱼm₍₋₁₎)·ᵢm⟩ ⁱm
    let v = {
        let mut w = h.word();
        let f = w.constant(&tw.f);
        let p = w.constant(&pq.p_r);
        let t1 = w.mul(f[1], p[1]);
        let o1 = w.antipode_inv(t1);
        let t2 = w.mul(f[0], p[0]);
        let o2 = w.antipode_inv(t2);
        w.finish_tensor(&[o1, o2])
    };
    let closed_inv = {
        let mut w = h.word();
        let y = w.source_dim(d);
        let legs = w.constant(&identity_element(field, d));
        let (l, l0) = w.coact_left(&m.coaction, legs[0]);
        let vv = w.constant(&v);
        let t1 = w.act(a, vv[1], l0);
        let b = w.constant1(&h.beta);
        let t2 = w.mul(vv[0], l);
        let st2 = w.antipode(t2);
        let hh = w.mul(b, st2);
        let z = w.act(a, hh, y);
        w.pair(legs[1], z, d);
        w.finish_map(&[t1])
    }
    .transpose();
    // inverse categorical composite:
    // (ev'_M⊗M*) ∘ a⁻¹_{M,*M,M*} ∘ (M⊗c⁻¹_{M*,*M}) ∘ a_{M,M*,*M} ∘ (coev_M⊗*M)
    let composite_inv = {
        let id = LinearMap::identity(field, d);
        let (_, c_inv) = yd_braiding(&left.dual, &right.dual)?;
        let a1 = crate::hmod::associator(h, &m.module, &left.dual.module, &right.dual.module)?;
        let a2 = crate::hmod::associator_inv(h, &m.module, &right.dual.module, &left.dual.module)?;
        right
            .ev
            .kron(&id)
            .compose(&a2.map)
            .compose(&id.kron(&c_inv.map))
            .compose(&a1.map)
            .compose(&left.coev.kron(&id))
    };
    if closed_inv != composite_inv {
        return Err("inverse closed form differs from the braiding composite".into());
    }
    CanonicalIso::new(
        YDMorphism::new(left.dual.clone(), right.dual.clone(), closed)?,
        YDMorphism::new(right.dual, left.dual, closed_inv)?,
    )
}

/// The identity tensor Σᵢ eᵢ⊗eⁱ.
fn identity_element(field: crate::field::FieldSpec, d: usize) -> Tensor {
    Tensor::from_vec(field, vec![d, d], LinearMap::identity(field, d).entries)
}

/// ʳΓ: M** → M and ˡΓ: **M → M with their closed-form inverses; the closed
/// forms are checked against the composites through θ/θ′ and Θ.
pub fn canonical_gamma(m: &YDModule) -> Result<(CanonicalIso, CanonicalIso), String> {
    let h = &m.h;
    let a = &m.module.action;
    let d = m.dim();
    let tw = h.drinfeld_twist()?;
    let pq = h.pq_elements()?;
    let left = yd_dual(m, DualSide::LeftDual)?;
    let right = yd_dual(m, DualSide::RightDual)?;
    let double_left = yd_dual(&left.dual, DualSide::LeftDual)?;
    let double_right = yd_dual(&right.dual, DualSide::RightDual)?;
    // 𝓕 = S(g²)f¹ ⊗ S(g¹)f² and its inverse
    let cal_f = {
        let mut w = h.word();
        let g = w.constant(&tw.f_inv);
        let f = w.constant(&tw.f);
        let sg2 = w.antipode(g[1]);
        let o1 = w.mul(sg2, f[0]);
        let sg1 = w.antipode(g[0]);
        let o2 = w.mul(sg1, f[1]);
        w.finish_tensor(&[o1, o2])
    };
    let cal_g = invert_element(&h.core, &cal_f)?;
    // ʳΓ(m**) = ⟨m**, ⁱm⟩ q¹S⁻²((S²(p¹)·ᵢm)^𝓕₍₋₁₎)p²S²(q²)·(S²(p¹)·ᵢm)^𝓕₍₀₎
    let gamma_r = {
        let mut w = h.word();
        let s = w.source_dim(d);
        let p = w.constant(&pq.p_r);
        let sp = w.antipode(p[0]);
        let ssp = w.antipode(sp);
        let t = w.act(a, ssp, s);
        // twisted coaction λ^𝓕
        let cg = w.constant(&cal_g);
        let gt = w.act(a, cg[0], t);
        let (l, l0) = w.coact_left(&m.coaction, gt);
        let cf = w.constant(&cal_f);
        let lf = w.mul_all(&[cf[0], l, cg[1]]);
        let m0 = w.act(a, cf[1], l0);
        let s1 = w.antipode_inv(lf);
        let s2 = w.antipode_inv(s1);
        let q = w.constant(&pq.q_r);
        let sq = w.antipode(q[1]);
        let ssq = w.antipode(sq);
        let hh = w.mul_all(&[q[0], s2, p[1], ssq]);
        let o = w.act(a, hh, m0);
        w.finish_map(&[o])
    };
    // composite: θ⁻¹_M ∘ Θ_{M*} (as matrices θ is the coordinate identity)
    let theta_mstar = canonical_big_theta(&left.dual)?;
    if gamma_r != theta_mstar.map.map {
        return Err("closed form of the right double-dual map differs from its composite".into());
    }
    // ʳΓ⁻¹(m) = ⟨ⁱm, S((p¹·m)₍₋₁₎p²)α·(p¹·m)₍₀₎⟩ *ⁱm
    let gamma_r_inv = {
        let mut w = h.word();
        let s = w.source_dim(d);
        let p = w.constant(&pq.p_r);
        let t = w.act(a, p[0], s);
        let (l, l0) = w.coact_left(&m.coaction, t);
        let t2 = w.mul(l, p[1]);
        let st2 = w.antipode(t2);
        let al = w.constant1(&h.alpha);
        let hh = w.mul(st2, al);
        let o = w.act(a, hh, l0);
        w.finish_map(&[o])
    };
    if gamma_r_inv != theta_mstar.inverse.map {
        return Err(
            "closed form of the inverse right double-dual map differs from its composite".into(),
        );
    }
    let iso_r = CanonicalIso::new(
        YDMorphism::new(double_left.dual.clone(), m.clone(), gamma_r)?,
        YDMorphism::new(m.clone(), double_left.dual, gamma_r_inv)?,
    )?;
    // ˡΓ(**m) = ⟨**m, ⁱm⟩ V¹g¹S((S⁻¹(V²g²)·ᵢm)₍₋₁₎)α·(S⁻¹(V²g²)·ᵢm)₍₀₎
    let v = {
        let mut w = h.word();
        let f = w.constant(&tw.f);
        let p = w.constant(&pq.p_r);
        let t1 = w.mul(f[1], p[1]);
        let o1 = w.antipode_inv(t1);
        let t2 = w.mul(f[0], p[0]);
        let o2 = w.antipode_inv(t2);
        w.finish_tensor(&[o1, o2])
    };
    let gamma_l = {
        let mut w = h.word();
        let s = w.source_dim(d);
        let vv = w.constant(&v);
        let g = w.constant(&tw.f_inv);
        let t = w.mul(vv[1], g[1]);
        let st = w.antipode_inv(t);
        let tm = w.act(a, st, s);
        let (l, l0) = w.coact_left(&m.coaction, tm);
        let sl = w.antipode(l);
        let al = w.constant1(&h.alpha);
        let hh = w.mul_all(&[vv[0], g[0], sl, al]);
        let o = w.act(a, hh, l0);
        w.finish_map(&[o])
    };
    // composite: θ′⁻¹_M ∘ Θ⁻¹_{*M} (θ′ is the coordinate identity)
    let theta_starm = canonical_big_theta(&right.dual)?;
    if gamma_l != theta_starm.inverse.map {
        return Err("closed form of the left double-dual map differs from its composite".into());
    }
    // ˡΓ⁻¹(m) = ⟨ⁱm, S⁻²(q¹(p¹·m)₍₋₁₎p²)q²·(p¹·m)₍₀₎⟩ *ⁱm
    let gamma_l_inv = {
        let mut w = h.word();
        let s = w.source_dim(d);
        let p = w.constant(&pq.p_r);
        let t = w.act(a, p[0], s);
        let (l, l0) = w.coact_left(&m.coaction, t);
        let q = w.constant(&pq.q_r);
        let t2 = w.mul_all(&[q[0], l, p[1]]);
        let s1 = w.antipode_inv(t2);
        let s2 = w.antipode_inv(s1);
        let hh = w.mul(s2, q[1]);
        let o = w.act(a, hh, l0);
        w.finish_map(&[o])
    };
    if gamma_l_inv != theta_starm.map.map {
        return Err(
            "closed form of the inverse left double-dual map differs from its composite".into(),
        );
    }
    let iso_l = CanonicalIso::new(
        YDMorphism::new(double_right.dual.clone(), m.clone(), gamma_l)?,
        YDMorphism::new(m.clone(), double_right.dual, gamma_l_inv)?,
    )?;
    Ok((iso_r, iso_l))
}

/// The four closed-form tensor-dual comparison maps, without the categorical
/// cross-checks performed by `canonical_sigma`.
pub(crate) struct SigmaOps {
    /// σ*: M*⊗N* → (M⊗N)*
    pub star: LinearMap,
    pub star_inv: LinearMap,
    /// *σ: *M⊗*N → *(M⊗N)
    pub lstar: LinearMap,
    pub lstar_inv: LinearMap,
}

pub(crate) fn sigma_ops(m: &YDModule, n: &YDModule) -> Result<SigmaOps, String> {
    let h = &m.h;
    let (am, an) = (&m.module.action, &n.module.action);
    let (dm, dn) = (m.dim(), n.dim());
    let tw = h.drinfeld_twist()?;
    let pq = h.pq_elements()?;
    // operator O on M⊗N with σ*(m*⊗n*)(m⊗n) = ⟨m*⊗n*, O(m⊗n)⟩:
    // O(m⊗n) = f²q̃²₂X³S⁻¹(q̃¹X¹(p¹·n)₍₋₁₎p²)·m ⊗ f¹q̃²₁X²·(p¹·n)₍₀₎
    let sigma = {
        let mut w = h.word();
        let (sm, sn) = (w.source_dim(dm), w.source_dim(dn));
        let p = w.constant(&pq.p_r);
        let pn = w.act(an, p[0], sn);
        let (l, l0) = w.coact_left(&n.coaction, pn);
        let ql = w.constant(&pq.q_l);
        let (q21, q22) = w.coproduct(ql[1]);
        let x = w.constant(&h.phi);
        let inner = w.mul_all(&[ql[0], x[0], l, p[1]]);
        let si = w.antipode_inv(inner);
        let f = w.constant(&tw.f);
        let h1 = w.mul_all(&[f[1], q22, x[2], si]);
        let o1 = w.act(am, h1, sm);
        let h2 = w.mul_all(&[f[0], q21, x[1]]);
        let o2 = w.act(an, h2, l0);
        w.finish_map(&[o1, o2])
    }
    .transpose();
    // inverse operator: P(m⊗n) = (g¹·n)₍₋₁₎g²·m ⊗ (g¹·n)₍₀₎
    let sigma_inv = {
        let mut w = h.word();
        let (sm, sn) = (w.source_dim(dm), w.source_dim(dn));
        let g = w.constant(&tw.f_inv);
        let gn = w.act(an, g[0], sn);
        let (l, l0) = w.coact_left(&n.coaction, gn);
        let hh = w.mul(l, g[1]);
        let o1 = w.act(am, hh, sm);
        w.finish_map(&[o1, l0])
    }
    .transpose();
    // *σ: *M⊗*N → *(M⊗N), closed form (with p_L = p̃¹⊗p̃², q_R = q¹⊗q²):
    // O'(m⊗n) = S⁻¹(f²q¹(x¹p̃¹S⁻¹(f¹)·n)₍₋₁₎x²p̃²₁)·m ⊗ S⁻¹(x³p̃²₂)q²·(x¹p̃¹S⁻¹(f¹)·n)₍₀₎
    let sigma_r = {
        let mut w = h.word();
        let (sm, sn) = (w.source_dim(dm), w.source_dim(dn));
        let f = w.constant(&tw.f);
        let sf = w.antipode_inv(f[0]);
        let p = w.constant(&pq.p_l);
        let x = w.constant(&h.phi_inv);
        let t = w.mul_all(&[x[0], p[0], sf]);
        let tn = w.act(an, t, sn);
        let (l, l0) = w.coact_left(&n.coaction, tn);
        let (p21, p22) = w.coproduct(p[1]);
        let q = w.constant(&pq.q_r);
        let inner = w.mul_all(&[f[1], q[0], l, x[1], p21]);
        let s1 = w.antipode_inv(inner);
        let o1 = w.act(am, s1, sm);
        let t2 = w.mul(x[2], p22);
        let s2 = w.antipode_inv(t2);
        let h2 = w.mul(s2, q[1]);
        let o2 = w.act(an, h2, l0);
        w.finish_map(&[o1, o2])
    }
    .transpose();
    // inverse: ⟨ν, (S⁻¹(g²)·ⱼn)₍₋₁₎S⁻¹(g¹)·ᵢm ⊗ (S⁻¹(g²)·ⱼn)₍₀₎⟩ ⁱm⊗ʲn
    let sigma_r_inv = {
        let mut w = h.word();
        let (sm, sn) = (w.source_dim(dm), w.source_dim(dn));
        let g = w.constant(&tw.f_inv);
        let sg2 = w.antipode_inv(g[1]);
        let gn = w.act(an, sg2, sn);
        let (l, l0) = w.coact_left(&n.coaction, gn);
        let sg1 = w.antipode_inv(g[0]);
        let hh = w.mul(l, sg1);
        let o1 = w.act(am, hh, sm);
        w.finish_map(&[o1, l0])
    }
    .transpose();
    Ok(SigmaOps {
        star: sigma,
        star_inv: sigma_inv,
        lstar: sigma_r,
        lstar_inv: sigma_r_inv,
    })
}

/// σ*: M*⊗N* → (M⊗N)* and *σ: *M⊗*N → *(M⊗N), with closed-form inverses.
/// The intermediate pairing map φ* is checked against its categorical
/// composite and its closed form ⟨m*,f¹·m⟩⟨n*,f²·n⟩, and σ* = φ*∘c⁻¹.
pub fn canonical_sigma(m: &YDModule, n: &YDModule) -> Result<(CanonicalIso, CanonicalIso), String> {
    let h = &m.h;
    let field = h.field();
    let (am, an) = (&m.module.action, &n.module.action);
    let (dm, dn) = (m.dim(), n.dim());
    let tw = h.drinfeld_twist()?;
    let SigmaOps {
        star: sigma,
        star_inv: sigma_inv,
        lstar: sigma_r,
        lstar_inv: sigma_r_inv,
    } = sigma_ops(m, n)?;
    let mn = yd_tensor(m, n)?;
    let m_left = yd_dual(m, DualSide::LeftDual)?;
    let n_left = yd_dual(n, DualSide::LeftDual)?;
    let mn_left = yd_dual(&mn, DualSide::LeftDual)?;
    // φ*_{N,M}: N*⊗M* → (M⊗N)*, closed form ⟨m*, f¹·m⟩⟨n*, f²·n⟩
    let phi_star = {
        let op = {
            let mut w = h.word();
            let (sm, sn) = (w.source_dim(dm), w.source_dim(dn));
            let f = w.constant(&tw.f);
            let o1 = w.act(am, f[0], sm);
            let o2 = w.act(an, f[1], sn);
            w.finish_map(&[o1, o2])
        };
        // reorder so the source runs over N*⊗M* coordinates
        Tensor::from_vec(field, vec![dm, dn, dm, dn], op.entries)
            .permute(&[2, 3, 1, 0])
            .into_map(2)
    };
    // categorical composite per the defining chain of (phir)
    let phi_star_composite = {
        let id_mn_star = LinearMap::identity(field, dm * dn);
        let id_nstar = LinearMap::identity(field, dn);
        let id_n = LinearMap::identity(field, dn);
        let nm_star = tensor_modules(&n_left.dual.module, &m_left.dual.module)?;
        let mn_mod = mn.module.clone();
        let a1 = crate::hmod::associator_inv(h, &nm_star, &mn_mod, &mn_left.dual.module)?;
        let a2 = crate::hmod::associator(h, &n_left.dual.module, &m_left.dual.module, &mn_mod)?;
        let a3 = crate::hmod::associator_inv(h, &m_left.dual.module, &m.module, &n.module)?;
        n_left
            .ev
            .kron(&id_mn_star)
            .compose(&id_nstar.kron(&m_left.ev.kron(&id_n)).kron(&id_mn_star))
            .compose(&id_nstar.kron(&a3.map).kron(&id_mn_star))
            .compose(&a2.map.kron(&id_mn_star))
            .compose(&a1.map)
            .compose(&LinearMap::identity(field, dn * dm).kron(&mn_left.coev))
    };
    if phi_star != phi_star_composite {
        return Err("pairing map differs from its categorical composite".into());
    }
    // σ* = φ* ∘ c⁻¹_{N*,M*}
    let (_, c_inv) = yd_braiding(&n_left.dual, &m_left.dual)?;
    if sigma != phi_star.compose(&c_inv.map) {
        return Err("tensor-dual map differs from pairing ∘ inverse braiding".into());
    }
    // φ*⁻¹(μ) = ⟨μ, g¹·ᵢm ⊗ g²·ⱼn⟩ ʲn⊗ⁱm
    let phi_star_inv = {
        let op = {
            let mut w = h.word();
            let (sm, sn) = (w.source_dim(dm), w.source_dim(dn));
            let g = w.constant(&tw.f_inv);
            let o1 = w.act(am, g[0], sm);
            let o2 = w.act(an, g[1], sn);
            w.finish_map(&[o1, o2])
        };
        Tensor::from_vec(field, vec![dm, dn, dm, dn], op.entries)
            .permute(&[3, 2, 0, 1])
            .into_map(2)
    };
    if !phi_star.compose(&phi_star_inv).is_identity() {
        return Err("pairing map inverse fails".into());
    }
    let dual_tensor_left = yd_tensor(&m_left.dual, &n_left.dual)?;
    let iso_left = CanonicalIso::new(
        YDMorphism::new(dual_tensor_left.clone(), mn_left.dual.clone(), sigma)?,
        YDMorphism::new(mn_left.dual, dual_tensor_left, sigma_inv)?,
    )?;
    let m_right = yd_dual(m, DualSide::RightDual)?;
    let n_right = yd_dual(n, DualSide::RightDual)?;
    let mn_right = yd_dual(&mn, DualSide::RightDual)?;
    let dual_tensor_right = yd_tensor(&m_right.dual, &n_right.dual)?;
    let iso_right = CanonicalIso::new(
        YDMorphism::new(dual_tensor_right.clone(), mn_right.dual.clone(), sigma_r)?,
        YDMorphism::new(mn_right.dual, dual_tensor_right, sigma_r_inv)?,
    )?;
    Ok((iso_left, iso_right))
}

/// For a module embedded through a quasitriangular structure the double-dual
/// maps collapse to the action of the u-element and its inverse.
pub fn qt_gamma_specialization(
    m: &YDModule,
    qt: &crate::quasitriangular::QTStructure,
) -> Result<(), String> {
    let h = &m.h;
    let a = &m.module.action;
    let d = m.dim();
    let act_by = |x: &Tensor| {
        let mut w = h.word();
        let s = w.source_dim(d);
        let c = w.constant1(x);
        let o = w.act(a, c, s);
        w.finish_map(&[o])
    };
    let (iso_r, iso_l) = canonical_gamma(m)?;
    if iso_r.map.map != act_by(&qt.u_inv) || iso_r.inverse.map != act_by(&qt.u) {
        return Err("right double-dual map is not the inverse u-action".into());
    }
    if iso_l.map.map != act_by(&qt.u) || iso_l.inverse.map != act_by(&qt.u_inv) {
        return Err("left double-dual map is not the u-action".into());
    }
    Ok(())
}

/// For modules embedded through a quasitriangular structure the tensor-dual
/// maps collapse to twisted actions of the inverse R-matrix.
pub fn qt_sigma_specialization(
    m: &YDModule,
    n: &YDModule,
    qt: &crate::quasitriangular::QTStructure,
) -> Result<(), String> {
    let h = &m.h;
    let tw = h.drinfeld_twist()?;
    let (am, an) = (&m.module.action, &n.module.action);
    let (dm, dn) = (m.dim(), n.dim());
    let (iso_left, iso_right) = canonical_sigma(m, n)?;
    // σ*(m*⊗n*)(m⊗n) = ⟨m*, f²R̄²·m⟩⟨n*, f¹R̄¹·n⟩
    let expected_left = {
        let mut w = h.word();
        let (sm, sn) = (w.source_dim(dm), w.source_dim(dn));
        let f = w.constant(&tw.f);
        let r = w.constant(&qt.r_inv);
        let h1 = w.mul(f[1], r[1]);
        let o1 = w.act(am, h1, sm);
        let h2 = w.mul(f[0], r[0]);
        let o2 = w.act(an, h2, sn);
        w.finish_map(&[o1, o2])
    }
    .transpose();
    if iso_left.map.map != expected_left {
        return Err("left-dual tensor map is not the inverse R-matrix form".into());
    }
    // *σ(*m⊗*n)(m⊗n) = ⟨*m, S⁻¹(f²R̄²)·m⟩⟨*n, S⁻¹(f¹R̄¹)·n⟩
    let expected_right = {
        let mut w = h.word();
        let (sm, sn) = (w.source_dim(dm), w.source_dim(dn));
        let f = w.constant(&tw.f);
        let r = w.constant(&qt.r_inv);
        let t1 = w.mul(f[1], r[1]);
        let h1 = w.antipode_inv(t1);
        let o1 = w.act(am, h1, sm);
        let t2 = w.mul(f[0], r[0]);
        let h2 = w.antipode_inv(t2);
        let o2 = w.act(an, h2, sn);
        w.finish_map(&[o1, o2])
    }
    .transpose();
    if iso_right.map.map != expected_right {
        return Err("right-dual tensor map is not the inverse R-matrix form".into());
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::{builtin, characters, h2_r_matrix, BUILTIN_NAMES};
    use crate::field::FieldSpec;
    use crate::quasitriangular::make_qt;
    use crate::yd::{random_module_morphism, random_yd_module};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const F101: FieldSpec = FieldSpec::PrimeField(101);

    fn qt_for(name: &str, field: FieldSpec) -> Option<crate::quasitriangular::QTStructure> {
        let b = builtin(name, field).unwrap();
        let r = match b.r_matrix {
            Some(r) => r,
            None => h2_r_matrix(field)?,
        };
        Some(make_qt(&b.algebra, &r).unwrap())
    }

    #[test]
    fn twist_identities_hold_on_all_builtins() {
        for name in BUILTIN_NAMES {
            for field in [FieldSpec::Rationals, F101] {
                let b = builtin(name, field).unwrap();
                let rep = lemma31(&b.algebra);
                assert!(rep.all_pass(), "{name}: {:?}", rep.into_result());
                let rep = section4_identities(&b.algebra);
                assert!(rep.all_pass(), "{name}: {:?}", rep.into_result());
            }
        }
    }

    #[test]
    fn yd_duals_and_theta() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for name in BUILTIN_NAMES {
            let b = builtin(name, F101).unwrap();
            let qt = qt_for(name, F101);
            let chars = characters(name, F101).unwrap();
            let m =
                random_yd_module(&b.algebra, qt.as_ref(), &chars, Flavor::LL, 3, &mut rng).unwrap();
            yd_dual(&m, DualSide::LeftDual).unwrap();
            yd_dual(&m, DualSide::RightDual).unwrap();
            let (theta, theta_prime) = canonical_theta(&m).unwrap();
            assert!(theta.map.map.is_identity());
            assert!(theta_prime.map.map.is_identity());
        }
    }

    #[test]
    fn big_theta_and_gamma_match_composites() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for name in BUILTIN_NAMES {
            let b = builtin(name, F101).unwrap();
            let qt = qt_for(name, F101);
            let chars = characters(name, F101).unwrap();
            let m =
                random_yd_module(&b.algebra, qt.as_ref(), &chars, Flavor::LL, 3, &mut rng).unwrap();
            canonical_big_theta(&m).unwrap();
            canonical_gamma(&m).unwrap();
            if let Some(qt) = &qt {
                qt_gamma_specialization(&m, qt).unwrap();
            }
        }
    }

    #[test]
    fn sigma_matches_pairing_and_braiding() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for name in ["kZ2_Rt", "sweedler4_Rtri", "dZ2"] {
            let b = builtin(name, F101).unwrap();
            let qt = qt_for(name, F101);
            let chars = characters(name, F101).unwrap();
            let m =
                random_yd_module(&b.algebra, qt.as_ref(), &chars, Flavor::LL, 2, &mut rng).unwrap();
            let n =
                random_yd_module(&b.algebra, qt.as_ref(), &chars, Flavor::LL, 2, &mut rng).unwrap();
            canonical_sigma(&m, &n).unwrap();
            qt_sigma_specialization(&m, &n, qt.as_ref().unwrap()).unwrap();
        }
    }

    #[test]
    fn transposes_and_naturality() {
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        for name in ["kZ2_Rt", "dZ2"] {
            let b = builtin(name, F101).unwrap();
            let qt = qt_for(name, F101).unwrap();
            let chars = characters(name, F101).unwrap();
            for _ in 0..3 {
                let m = random_yd_module(&b.algebra, Some(&qt), &chars, Flavor::LL, 3, &mut rng)
                    .unwrap();
                let n = random_yd_module(&b.algebra, Some(&qt), &chars, Flavor::LL, 3, &mut rng)
                    .unwrap();
                let f = random_module_morphism(&m.module, &n.module, &mut rng);
                let nu = YDMorphism::new(m.clone(), n.clone(), f).unwrap();
                let nu_star = transpose(&nu, DualSide::LeftDual).unwrap();
                let star_nu = transpose(&nu, DualSide::RightDual).unwrap();
                // naturality of Θ: Θ_M ∘ ν* = *ν ∘ Θ_N
                let th_m = canonical_big_theta(&m).unwrap();
                let th_n = canonical_big_theta(&n).unwrap();
                assert_eq!(
                    th_m.map.map.compose(&nu_star.map),
                    star_nu.map.compose(&th_n.map.map)
                );
                // naturality of Γ: ν ∘ ʳΓ_M = ʳΓ_N ∘ ν** (transposes are plain)
                let (gr_m, gl_m) = canonical_gamma(&m).unwrap();
                let (gr_n, gl_n) = canonical_gamma(&n).unwrap();
                let nu_double = nu.map.transpose().transpose();
                assert_eq!(
                    nu.map.compose(&gr_m.map.map),
                    gr_n.map.map.compose(&nu_double)
                );
                assert_eq!(
                    nu.map.compose(&gl_m.map.map),
                    gl_n.map.map.compose(&nu_double)
                );
            }
            // naturality of σ*: (ν⊗μ)ᵀ ∘ σ*_{M',N'} = σ*_{M,N} ∘ (ν*⊗μ*)
            let m =
                random_yd_module(&b.algebra, Some(&qt), &chars, Flavor::LL, 2, &mut rng).unwrap();
            let n =
                random_yd_module(&b.algebra, Some(&qt), &chars, Flavor::LL, 2, &mut rng).unwrap();
            let f = random_module_morphism(&m.module, &m.module, &mut rng);
            let g = random_module_morphism(&n.module, &n.module, &mut rng);
            let nu = YDMorphism::new(m.clone(), m.clone(), f).unwrap();
            let mu = YDMorphism::new(n.clone(), n.clone(), g).unwrap();
            let (sig, _) = canonical_sigma(&m, &n).unwrap();
            let lhs = nu.map.kron(&mu.map).transpose().compose(&sig.map.map);
            let rhs = sig
                .map
                .map
                .compose(&nu.map.transpose().kron(&mu.map.transpose()));
            assert_eq!(lhs, rhs);
        }
    }
}

#[cfg(test)]
mod prof_tests {
    use super::*;
    use crate::builtins::{builtin, characters};
    use crate::field::FieldSpec;
    use crate::quasitriangular::make_qt;
    use crate::yd::{random_yd_module, yd_braiding, Flavor};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::time::Instant;

    #[test]
    #[ignore]
    fn profile_yd_dual_pieces() {
        use std::time::Instant;
        let field = FieldSpec::PrimeField(101);
        let b = builtin("dZ2", field).unwrap();
        let qt = make_qt(&b.algebra, &b.r_matrix.clone().unwrap()).unwrap();
        let chars = characters("dZ2", field).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        let m = random_yd_module(&b.algebra, Some(&qt), &chars, Flavor::LL, 3, &mut rng).unwrap();
        let h = &m.h;
        let t0 = Instant::now();
        let base = crate::hmod::dual_module(h, &m.module, DualSide::LeftDual).unwrap();
        eprintln!("dual_module: {:?}", t0.elapsed());
        let tw = h.drinfeld_twist().unwrap();
        let d = m.dim();
        let u = {
            let mut w = h.word();
            let s = w.source_dim(d);
            let g = w.constant(&tw.f_inv);
            let gm = w.act(&m.module.action, g[0], s);
            let (l, l0) = w.coact_left(&m.coaction, gm);
            let f = w.constant(&tw.f);
            let t = w.mul_all(&[f[0], l, g[1]]);
            let o1 = w.antipode_inv(t);
            let o2 = w.act(&m.module.action, f[1], l0);
            w.finish_map(&[o1, o2])
        };
        let t0 = Instant::now();
        let coaction = {
            use crate::tensor::Tensor;
            Tensor::from_vec(field, vec![h.core.dim, d, d], u.entries.clone())
                .permute(&[0, 2, 1])
                .into_map(2)
        };
        eprintln!("coaction build: {:?}", t0.elapsed());
        let t0 = Instant::now();
        let dual = YDModule::new(h.clone(), Flavor::LL, base.dual, coaction).unwrap();
        eprintln!("YDModule::new (verify_yd): {:?}", t0.elapsed());
        let t0 = Instant::now();
        let ts = yd_tensor(&dual, &m).unwrap();
        eprintln!("yd_tensor: {:?}", t0.elapsed());
        let t0 = Instant::now();
        let triv = YDModule::trivial(h, Flavor::LL);
        YDMorphism::new(ts, triv.clone(), base.ev.clone()).unwrap();
        eprintln!("ev morphism check: {:?}", t0.elapsed());
        let t0 = Instant::now();
        let td = yd_tensor(&m, &dual).unwrap();
        YDMorphism::new(triv, td, base.coev.clone()).unwrap();
        eprintln!("coev morphism check: {:?}", t0.elapsed());
    }

    #[test]
    #[ignore]
    fn profile_building_blocks() {
        let field = FieldSpec::PrimeField(101);
        let b = builtin("dZ2", field).unwrap();
        let qt = make_qt(&b.algebra, &b.r_matrix.clone().unwrap()).unwrap();
        let chars = characters("dZ2", field).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        let t0 = Instant::now();
        let m = random_yd_module(&b.algebra, Some(&qt), &chars, Flavor::LL, 3, &mut rng).unwrap();
        eprintln!("sample dim {}: {:?}", m.dim(), t0.elapsed());
        let t0 = Instant::now();
        let ld = yd_dual(&m, DualSide::LeftDual).unwrap();
        eprintln!("yd_dual left: {:?}", t0.elapsed());
        let t0 = Instant::now();
        let _ = yd_dual(&m, DualSide::RightDual).unwrap();
        eprintln!("yd_dual right: {:?}", t0.elapsed());
        let t0 = Instant::now();
        let _ = yd_braiding(&ld.dual, &ld.dual).unwrap();
        eprintln!("braiding of duals: {:?}", t0.elapsed());
        let t0 = Instant::now();
        let _ = canonical_big_theta(&m).unwrap();
        eprintln!("big_theta: {:?}", t0.elapsed());
        let t0 = Instant::now();
        let _ = canonical_gamma(&m).unwrap();
        eprintln!("gamma: {:?}", t0.elapsed());
        let n = random_yd_module(&b.algebra, Some(&qt), &chars, Flavor::LL, 2, &mut rng).unwrap();
        let t0 = Instant::now();
        let _ = canonical_sigma(&m, &n).unwrap();
        eprintln!("sigma {}x{}: {:?}", m.dim(), n.dim(), t0.elapsed());
    }
}
