//! Quasi-Hopf algebras: axiom verification, op/cop variants, gauge twists,
//! the antipode twist with its γ and δ, and the p/q elements.

use crate::linalg::LinearMap;
use crate::program::Word;
use crate::report::VerificationReport;
use crate::tensor::{invert_element, mul_elements, AlgebraCore, Tensor};
use std::sync::{Arc, OnceLock};

/// The antipode-twist data: the gauge transformation conjugating Δ∘S to
/// (S⊗S)∘Δ^op, together with the intermediates γ and δ it is built from.
#[derive(Debug, Clone)]
pub struct DrinfeldTwist {
    pub f: Tensor,
    pub f_inv: Tensor,
    pub gamma: Tensor,
    pub delta: Tensor,
}

/// The four comparison elements p_R, q_R, p_L, q_L of H⊗H.
#[derive(Debug, Clone)]
pub struct PQElements {
    pub p_r: Tensor,
    pub q_r: Tensor,
    pub p_l: Tensor,
    pub q_l: Tensor,
}

/// A quasi-Hopf algebra: associative algebra with quasi-coassociative
/// coproduct controlled by the reassociator Φ, plus antipode data (S, α, β).
/// Derived elements (antipode twist, p/q elements) are computed lazily,
/// self-verified, and cached.
#[derive(Debug)]
pub struct QuasiHopfAlgebra {
    pub core: Arc<AlgebraCore>,
    pub phi: Tensor,
    pub phi_inv: Tensor,
    pub alpha: Tensor,
    pub beta: Tensor,
    twist: OnceLock<Result<DrinfeldTwist, String>>,
    pq: OnceLock<Result<PQElements, String>>,
}

impl QuasiHopfAlgebra {
    /// Builds the record and runs cheap structural checks. `phi_inv` is
    /// computed when not supplied, and cross-checked when it is.
    pub fn new(
        core: Arc<AlgebraCore>,
        phi: Tensor,
        phi_inv: Option<Tensor>,
        alpha: Tensor,
        beta: Tensor,
    ) -> Result<Arc<QuasiHopfAlgebra>, String> {
        core.validate()?;
        let n = core.dim;
        if phi.dims != vec![n, n, n] {
            return Err("reassociator must have three legs of the algebra dimension".into());
        }
        if alpha.dims != vec![n] || beta.dims != vec![n] {
            return Err("alpha and beta must be single algebra elements".into());
        }
        let computed_inv =
            invert_element(&core, &phi).map_err(|e| format!("reassociator not invertible: {e}"))?;
        let phi_inv = match phi_inv {
            None => computed_inv,
            Some(supplied) => {
                if supplied != computed_inv {
                    return Err("supplied reassociator inverse fails the cross-check".into());
                }
                supplied
            }
        };
        let eps_a = core.counit.apply(&alpha.coeffs)[0].clone();
        let eps_b = core.counit.apply(&beta.coeffs)[0].clone();
        if !eps_a.mul(&eps_b).is_one() {
            return Err("ε(α)ε(β) ≠ 1".into());
        }
        Ok(Arc::new(QuasiHopfAlgebra {
            core,
            phi,
            phi_inv,
            alpha,
            beta,
            twist: OnceLock::new(),
            pq: OnceLock::new(),
        }))
    }

    pub fn field(&self) -> crate::field::FieldSpec {
        self.core.field
    }

    pub fn dim(&self) -> usize {
        self.core.dim
    }

    pub fn word(&self) -> Word {
        Word::new(&self.core)
    }

    /// Applies the antipode matrix to a one-leg element.
    pub fn s_of(&self, t: &Tensor) -> Tensor {
        t.map_leg(0, &self.core.antipode)
    }

    /// Applies the inverse antipode matrix to a one-leg element.
    pub fn s_inv_of(&self, t: &Tensor) -> Tensor {
        t.map_leg(0, &self.core.antipode_inv)
    }

    /// Rescales α and β so that ε(α) = ε(β) = 1.
    pub fn normalized(&self) -> Result<Arc<QuasiHopfAlgebra>, String> {
        let eps_a = self.core.counit.apply(&self.alpha.coeffs)[0].clone();
        let alpha = self.alpha.scale(&eps_a.inv().ok_or("ε(α) = 0")?);
        let beta = self.beta.scale(&eps_a);
        QuasiHopfAlgebra::new(
            self.core.clone(),
            self.phi.clone(),
            Some(self.phi_inv.clone()),
            alpha,
            beta,
        )
    }
}

/// Checks the quasi-bialgebra axioms: associativity, Δ and ε being algebra
/// maps, quasi-coassociativity, counit laws, the 3-cocycle identity and the
/// counit normalizations of Φ.
pub fn verify_quasi_bialgebra(h: &QuasiHopfAlgebra) -> VerificationReport {
    let mut rep = VerificationReport::new();
    let core = &h.core;
    let n = core.dim;

    // associativity of the multiplication
    {
        let mut w = h.word();
        let (a, b, c) = (w.source(), w.source(), w.source());
        let ab = w.mul(a, b);
        let out = w.mul(ab, c);
        let lhs = w.finish_map(&[out]);
        let mut w = h.word();
        let (a, b, c) = (w.source(), w.source(), w.source());
        let bc = w.mul(b, c);
        let out = w.mul(a, bc);
        let rhs = w.finish_map(&[out]);
        rep.check("(assoc)", lhs == rhs);
    }
    // Δ is an algebra map
    {
        let mut w = h.word();
        let (a, b) = (w.source(), w.source());
        let ab = w.mul(a, b);
        let (p, q) = w.coproduct(ab);
        let lhs = w.finish_map(&[p, q]);
        let mut w = h.word();
        let (a, b) = (w.source(), w.source());
        let (a1, a2) = w.coproduct(a);
        let (b1, b2) = w.coproduct(b);
        let p = w.mul(a1, b1);
        let q = w.mul(a2, b2);
        let rhs = w.finish_map(&[p, q]);
        let unit_ok = {
            let d1 = core.comult.apply(&core.unit.coeffs);
            d1 == core.unit.outer(&core.unit).coeffs
        };
        rep.record("(delta-alg)", lhs == rhs && unit_ok, "Δ is an algebra map");
    }
    // ε is an algebra map
    {
        let mut w = h.word();
        let (a, b) = (w.source(), w.source());
        let ab = w.mul(a, b);
        w.counit(ab);
        let lhs = w.finish_map(&[]);
        let mut w = h.word();
        let (a, b) = (w.source(), w.source());
        w.counit(a);
        w.counit(b);
        let rhs = w.finish_map(&[]);
        rep.record("(eps-alg)", lhs == rhs, "ε is an algebra map");
    }
    // (q1): (id⊗Δ)(Δh) = Φ · (Δ⊗id)(Δh) · Φ⁻¹
    {
        let mut w = h.word();
        let s = w.source();
        let (s1, s2) = w.coproduct(s);
        let (s21, s22) = w.coproduct(s2);
        let lhs = w.finish_map(&[s1, s21, s22]);
        let mut w = h.word();
        let s = w.source();
        let (s1, s2) = w.coproduct(s);
        let (s11, s12) = w.coproduct(s1);
        let p = w.constant(&h.phi);
        let m1 = w.mul(p[0], s11);
        let m2 = w.mul(p[1], s12);
        let m3 = w.mul(p[2], s2);
        let q = w.constant(&h.phi_inv);
        let o1 = w.mul(m1, q[0]);
        let o2 = w.mul(m2, q[1]);
        let o3 = w.mul(m3, q[2]);
        let rhs = w.finish_map(&[o1, o2, o3]);
        rep.check("(q1)", lhs == rhs);
    }
    // (q2): counit laws
    {
        let mut w = h.word();
        let s = w.source();
        let (s1, s2) = w.coproduct(s);
        w.counit(s2);
        let left = w.finish_map(&[s1]);
        let mut w = h.word();
        let s = w.source();
        let (s1, s2) = w.coproduct(s);
        w.counit(s1);
        let right = w.finish_map(&[s2]);
        let id = LinearMap::identity(core.field, n);
        rep.check("(q2)", left == id && right == id);
    }
    // (q3): the 3-cocycle identity
    {
        let mut w = h.word();
        let a = w.constant(&h.phi); // (id⊗Δ⊗id)(Φ) built from this copy
        let (b, c) = w.coproduct(a[1]);
        let p = w.constant(&h.phi); // left factor 1⊗Φ
        let l2 = w.mul(p[0], b);
        let l3 = w.mul(p[1], c);
        let l4 = w.mul(p[2], a[2]);
        let q = w.constant(&h.phi); // right factor Φ⊗1
        let o1 = w.mul(a[0], q[0]);
        let o2 = w.mul(l2, q[1]);
        let o3 = w.mul(l3, q[2]);
        let lhs = w.finish_tensor(&[o1, o2, o3, l4]);
        let mut w = h.word();
        let a = w.constant(&h.phi); // (id⊗id⊗Δ)(Φ)
        let (b, c) = w.coproduct(a[2]);
        let p = w.constant(&h.phi); // (Δ⊗id⊗id)(Φ)
        let (p11, p12) = w.coproduct(p[0]);
        let o1 = w.mul(a[0], p11);
        let o2 = w.mul(a[1], p12);
        let o3 = w.mul(b, p[1]);
        let o4 = w.mul(c, p[2]);
        let rhs = w.finish_tensor(&[o1, o2, o3, o4]);
        rep.check("(q3)", lhs == rhs);
    }
    // (q4) and (q7): counit normalizations of Φ
    {
        let unit2 = h.core.unit_element(2);
        let mid = h.phi.apply_map_at(&[1], &[], &core.counit);
        let first = h.phi.apply_map_at(&[0], &[], &core.counit);
        let last = h.phi.apply_map_at(&[2], &[], &core.counit);
        rep.check("(q4)", mid == unit2);
        rep.check("(q7)", first == unit2 && last == unit2);
    }
    rep
}

/// Checks the antipode axioms (S anti-automorphism, the α/β cancellation
/// laws and the zig-zag normalizations) plus ε∘S = ε.
pub fn verify_antipode(h: &QuasiHopfAlgebra) -> VerificationReport {
    let mut rep = VerificationReport::new();
    let core = &h.core;

    match crate::tensor::map_algebra(&core.antipode, core, core, true) {
        Ok(()) => rep.record("(s-anti)", true, "S is an algebra anti-automorphism"),
        Err(e) => rep.record("(s-anti)", false, &e),
    }
    // (q5): S(h₁)αh₂ = ε(h)α and h₁βS(h₂) = ε(h)β
    {
        let mut w = h.word();
        let s = w.source();
        let (h1, h2) = w.coproduct(s);
        let sh1 = w.antipode(h1);
        let al = w.constant1(&h.alpha);
        let out = w.mul_all(&[sh1, al, h2]);
        let lhs = w.finish_map(&[out]);
        let mut w = h.word();
        let s = w.source();
        w.counit(s);
        let al = w.constant1(&h.alpha);
        let rhs = w.finish_map(&[al]);
        let left_ok = lhs == rhs;
        let mut w = h.word();
        let s = w.source();
        let (h1, h2) = w.coproduct(s);
        let sh2 = w.antipode(h2);
        let be = w.constant1(&h.beta);
        let out = w.mul_all(&[h1, be, sh2]);
        let lhs = w.finish_map(&[out]);
        let mut w = h.word();
        let s = w.source();
        w.counit(s);
        let be = w.constant1(&h.beta);
        let rhs = w.finish_map(&[be]);
        rep.check("(q5)", left_ok && lhs == rhs);
    }
    // (q6): X¹βS(X²)αX³ = 1 and S(x¹)αx²βS(x³) = 1
    {
        let mut w = h.word();
        let p = w.constant(&h.phi);
        let be = w.constant1(&h.beta);
        let sx2 = w.antipode(p[1]);
        let al = w.constant1(&h.alpha);
        let out = w.mul_all(&[p[0], be, sx2, al, p[2]]);
        let first = w.finish_tensor(&[out]);
        let mut w = h.word();
        let p = w.constant(&h.phi_inv);
        let sx1 = w.antipode(p[0]);
        let al = w.constant1(&h.alpha);
        let be = w.constant1(&h.beta);
        let sx3 = w.antipode(p[2]);
        let out = w.mul_all(&[sx1, al, p[1], be, sx3]);
        let second = w.finish_tensor(&[out]);
        rep.check("(q6)", first == h.core.unit && second == h.core.unit);
    }
    {
        let eps_s = core.counit.compose(&core.antipode);
        rep.record("(eps-s)", eps_s == core.counit, "ε∘S = ε");
    }
    rep
}

/// Runs both axiom families.
pub fn verify_all(h: &QuasiHopfAlgebra) -> VerificationReport {
    let mut rep = verify_quasi_bialgebra(h);
    rep.merge(verify_antipode(h));
    rep
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    Op,
    Cop,
    OpCop,
}

/// The opposite / coopposite / bi-opposite quasi-Hopf algebra. The result is
/// re-verified before being returned.
pub fn make_variant(h: &QuasiHopfAlgebra, which: Variant) -> Result<Arc<QuasiHopfAlgebra>, String> {
    let core = &h.core;
    let n = core.dim;
    let swap = LinearMap::swap(core.field, n, n);
    let (mult, comult) = match which {
        Variant::Op => (core.mult.compose(&swap), core.comult.clone()),
        Variant::Cop => (core.mult.clone(), swap.compose(&core.comult)),
        Variant::OpCop => (core.mult.compose(&swap), swap.compose(&core.comult)),
    };
    let (antipode, antipode_inv) = match which {
        Variant::Op | Variant::Cop => (core.antipode_inv.clone(), core.antipode.clone()),
        Variant::OpCop => (core.antipode.clone(), core.antipode_inv.clone()),
    };
    let (phi, phi_inv) = match which {
        Variant::Op => (h.phi_inv.clone(), h.phi.clone()),
        Variant::Cop => (h.phi_inv.permute(&[2, 1, 0]), h.phi.permute(&[2, 1, 0])),
        Variant::OpCop => (h.phi.permute(&[2, 1, 0]), h.phi_inv.permute(&[2, 1, 0])),
    };
    let (alpha, beta) = match which {
        Variant::Op => (h.s_inv_of(&h.beta), h.s_inv_of(&h.alpha)),
        Variant::Cop => (h.s_inv_of(&h.alpha), h.s_inv_of(&h.beta)),
        Variant::OpCop => (h.beta.clone(), h.alpha.clone()),
    };
    let new_core = Arc::new(AlgebraCore {
        field: core.field,
        dim: n,
        basis_names: core.basis_names.clone(),
        mult,
        unit: core.unit.clone(),
        comult,
        counit: core.counit.clone(),
        antipode,
        antipode_inv,
    });
    let out = QuasiHopfAlgebra::new(new_core, phi, Some(phi_inv), alpha, beta)?;
    verify_all(&out)
        .into_result()
        .map_err(|e| format!("variant fails axioms: {e}"))?;
    Ok(out)
}

/// Twists the quasi-Hopf structure by a gauge transformation F, producing
/// H_F with conjugated coproduct, the twisted reassociator, and the twisted
/// α, β. The result is re-verified.
pub fn gauge_twist(h: &QuasiHopfAlgebra, f: &Tensor) -> Result<Arc<QuasiHopfAlgebra>, String> {
    let core = &h.core;
    let n = core.dim;
    if f.dims != vec![n, n] {
        return Err("gauge transformation must have two legs".into());
    }
    let unit1 = core.unit.clone();
    if f.apply_map_at(&[0], &[], &core.counit) != unit1
        || f.apply_map_at(&[1], &[], &core.counit) != unit1
    {
        return Err("gauge transformation is not counital".into());
    }
    let f_inv = invert_element(core, f).map_err(|e| format!("gauge not invertible: {e}"))?;

    // Δ_F(h) = F Δ(h) F⁻¹
    let comult_f = {
        let mut w = h.word();
        let s = w.source();
        let (h1, h2) = w.coproduct(s);
        let fl = w.constant(f);
        let m1 = w.mul(fl[0], h1);
        let m2 = w.mul(fl[1], h2);
        let gl = w.constant(&f_inv);
        let o1 = w.mul(m1, gl[0]);
        let o2 = w.mul(m2, gl[1]);
        w.finish_map(&[o1, o2])
    };
    // Φ_F = (1⊗F) (id⊗Δ)(F) Φ (Δ⊗id)(F⁻¹) (F⁻¹⊗1), with the original Δ
    let phi_f = {
        let mut w = h.word();
        let a = w.constant(f); // (id⊗Δ)(F)
        let (a21, a22) = w.coproduct(a[1]);
        let fl = w.constant(f); // 1⊗F
        let l2 = w.mul(fl[0], a21);
        let l3 = w.mul(fl[1], a22);
        let p = w.constant(&h.phi);
        let k1 = w.mul(a[0], p[0]);
        let k2 = w.mul(l2, p[1]);
        let k3 = w.mul(l3, p[2]);
        let b = w.constant(&f_inv); // (Δ⊗id)(F⁻¹)
        let (b11, b12) = w.coproduct(b[0]);
        let m1 = w.mul(k1, b11);
        let m2 = w.mul(k2, b12);
        let m3 = w.mul(k3, b[1]);
        let g = w.constant(&f_inv); // F⁻¹⊗1
        let o1 = w.mul(m1, g[0]);
        let o2 = w.mul(m2, g[1]);
        w.finish_tensor(&[o1, o2, m3])
    };
    // α_F = S(G¹) α G²,  β_F = F¹ β S(F²)
    let alpha_f = {
        let mut w = h.word();
        let g = w.constant(&f_inv);
        let sg1 = w.antipode(g[0]);
        let al = w.constant1(&h.alpha);
        let out = w.mul_all(&[sg1, al, g[1]]);
        w.finish_tensor(&[out])
    };
    let beta_f = {
        let mut w = h.word();
        let fl = w.constant(f);
        let be = w.constant1(&h.beta);
        let sf2 = w.antipode(fl[1]);
        let out = w.mul_all(&[fl[0], be, sf2]);
        w.finish_tensor(&[out])
    };
    let new_core = Arc::new(AlgebraCore {
        comult: comult_f,
        basis_names: core.basis_names.clone(),
        ..(**core).clone()
    });
    let out = QuasiHopfAlgebra::new(new_core, phi_f, None, alpha_f, beta_f)?;
    verify_all(&out)
        .into_result()
        .map_err(|e| format!("twisted algebra fails axioms: {e}"))?;
    Ok(out)
}

impl QuasiHopfAlgebra {
    /// The gauge transformation f with f Δ(S(h)) f⁻¹ = (S⊗S)(Δ^op(h)),
    /// computed from its closed form and self-verified (cached).
    pub fn drinfeld_twist(&self) -> Result<&DrinfeldTwist, String> {
        self.twist
            .get_or_init(|| compute_drinfeld_twist(self))
            .as_ref()
            .map_err(|e| e.clone())
    }

    /// The p/q comparison elements, self-verified (cached).
    pub fn pq_elements(&self) -> Result<&PQElements, String> {
        self.pq
            .get_or_init(|| compute_pq_elements(self))
            .as_ref()
            .map_err(|e| e.clone())
    }
}

fn compute_drinfeld_twist(h: &QuasiHopfAlgebra) -> Result<DrinfeldTwist, String> {
    let core = &h.core;
    // γ = S(A²)αA³ ⊗ S(A¹)αA⁴  with  A = (Φ⊗1)(Δ⊗id⊗id)(Φ⁻¹)
    let gamma = {
        let mut w = h.word();
        let x = w.constant(&h.phi_inv);
        let (x11, x12) = w.coproduct(x[0]);
        let p = w.constant(&h.phi);
        let a1 = w.mul(p[0], x11);
        let a2 = w.mul(p[1], x12);
        let a3 = w.mul(p[2], x[1]);
        let a4 = x[2];
        let sa2 = w.antipode(a2);
        let al = w.constant1(&h.alpha);
        let g1 = w.mul_all(&[sa2, al, a3]);
        let sa1 = w.antipode(a1);
        let al = w.constant1(&h.alpha);
        let g2 = w.mul_all(&[sa1, al, a4]);
        w.finish_tensor(&[g1, g2])
    };
    // δ = B¹βS(B⁴) ⊗ B²βS(B³)  with  B = (Δ⊗id⊗id)(Φ)(Φ⁻¹⊗1)
    let delta = {
        let mut w = h.word();
        let p = w.constant(&h.phi);
        let (p11, p12) = w.coproduct(p[0]);
        let x = w.constant(&h.phi_inv);
        let b1 = w.mul(p11, x[0]);
        let b2 = w.mul(p12, x[1]);
        let b3 = w.mul(p[1], x[2]);
        let b4 = p[2];
        let be = w.constant1(&h.beta);
        let sb4 = w.antipode(b4);
        let d1 = w.mul_all(&[b1, be, sb4]);
        let be = w.constant1(&h.beta);
        let sb3 = w.antipode(b3);
        let d2 = w.mul_all(&[b2, be, sb3]);
        w.finish_tensor(&[d1, d2])
    };
    // f = (S⊗S)(Δ^op(x¹)) γ Δ(x²βS(x³))
    let f = {
        let mut w = h.word();
        let x = w.constant(&h.phi_inv);
        let be = w.constant1(&h.beta);
        let sx3 = w.antipode(x[2]);
        let t = w.mul_all(&[x[1], be, sx3]);
        let (t1, t2) = w.coproduct(t);
        let (x11, x12) = w.coproduct(x[0]);
        let sx12 = w.antipode(x12);
        let sx11 = w.antipode(x11);
        let c = w.constant(&gamma);
        let f1 = w.mul_all(&[sx12, c[0], t1]);
        let f2 = w.mul_all(&[sx11, c[1], t2]);
        w.finish_tensor(&[f1, f2])
    };
    // f⁻¹ = Δ(S(x¹)αx²) δ (S⊗S)(Δ^op(x³))
    let f_inv = {
        let mut w = h.word();
        let x = w.constant(&h.phi_inv);
        let sx1 = w.antipode(x[0]);
        let al = w.constant1(&h.alpha);
        let t = w.mul_all(&[sx1, al, x[1]]);
        let (t1, t2) = w.coproduct(t);
        let (x31, x32) = w.coproduct(x[2]);
        let sx32 = w.antipode(x32);
        let sx31 = w.antipode(x31);
        let d = w.constant(&delta);
        let g1 = w.mul_all(&[t1, d[0], sx32]);
        let g2 = w.mul_all(&[t2, d[1], sx31]);
        w.finish_tensor(&[g1, g2])
    };
    // self-checks
    let unit2 = core.unit_element(2);
    if mul_elements(core, &f, &f_inv) != unit2 || mul_elements(core, &f_inv, &f) != unit2 {
        return Err("antipode twist: f·f⁻¹ ≠ 1⊗1".into());
    }
    if f.apply_map_at(&[0], &[], &core.counit) != core.unit
        || f.apply_map_at(&[1], &[], &core.counit) != core.unit
    {
        return Err("antipode twist: f is not counital".into());
    }
    // (ca): f Δ(S(h)) f⁻¹ = (S⊗S)(Δ^op(h)) for all h
    {
        let mut w = h.word();
        let s = w.source();
        let sh = w.antipode(s);
        let (a, b) = w.coproduct(sh);
        let fl = w.constant(&f);
        let m1 = w.mul(fl[0], a);
        let m2 = w.mul(fl[1], b);
        let gl = w.constant(&f_inv);
        let o1 = w.mul(m1, gl[0]);
        let o2 = w.mul(m2, gl[1]);
        let lhs = w.finish_map(&[o1, o2]);
        let mut w = h.word();
        let s = w.source();
        let (h1, h2) = w.coproduct(s);
        let sh2 = w.antipode(h2);
        let sh1 = w.antipode(h1);
        let rhs = w.finish_map(&[sh2, sh1]);
        if lhs != rhs {
            return Err("antipode twist: conjugation identity fails".into());
        }
    }
    // fΔ(α) = γ and Δ(β)f⁻¹ = δ
    {
        let mut w = h.word();
        let al = w.constant1(&h.alpha);
        let (a1, a2) = w.coproduct(al);
        let fl = w.constant(&f);
        let o1 = w.mul(fl[0], a1);
        let o2 = w.mul(fl[1], a2);
        if w.finish_tensor(&[o1, o2]) != gamma {
            return Err("antipode twist: fΔ(α) ≠ γ".into());
        }
        let mut w = h.word();
        let be = w.constant1(&h.beta);
        let (b1, b2) = w.coproduct(be);
        let gl = w.constant(&f_inv);
        let o1 = w.mul(b1, gl[0]);
        let o2 = w.mul(b2, gl[1]);
        if w.finish_tensor(&[o1, o2]) != delta {
            return Err("antipode twist: Δ(β)f⁻¹ ≠ δ".into());
        }
    }
    // g¹S(g²α) = β and S(βf¹)f² = α
    {
        let mut w = h.word();
        let g = w.constant(&f_inv);
        let al = w.constant1(&h.alpha);
        let t = w.mul(g[1], al);
        let st = w.antipode(t);
        let out = w.mul(g[0], st);
        if w.finish_tensor(&[out]) != h.beta {
            return Err("antipode twist: g¹S(g²α) ≠ β".into());
        }
        let mut w = h.word();
        let fl = w.constant(&f);
        let be = w.constant1(&h.beta);
        let t = w.mul(be, fl[0]);
        let st = w.antipode(t);
        let out = w.mul(st, fl[1]);
        if w.finish_tensor(&[out]) != h.alpha {
            return Err("antipode twist: S(βf¹)f² ≠ α".into());
        }
    }
    // twisting by f sends Φ to (S⊗S⊗S)(Φ^{321})
    {
        let mut w = h.word();
        let a = w.constant(&f);
        let (a21, a22) = w.coproduct(a[1]);
        let fl = w.constant(&f);
        let l2 = w.mul(fl[0], a21);
        let l3 = w.mul(fl[1], a22);
        let p = w.constant(&h.phi);
        let k1 = w.mul(a[0], p[0]);
        let k2 = w.mul(l2, p[1]);
        let k3 = w.mul(l3, p[2]);
        let b = w.constant(&f_inv);
        let (b11, b12) = w.coproduct(b[0]);
        let m1 = w.mul(k1, b11);
        let m2 = w.mul(k2, b12);
        let m3 = w.mul(k3, b[1]);
        let g = w.constant(&f_inv);
        let o1 = w.mul(m1, g[0]);
        let o2 = w.mul(m2, g[1]);
        let phi_f = w.finish_tensor(&[o1, o2, m3]);
        let mut expect = h.phi.permute(&[2, 1, 0]);
        for leg in 0..3 {
            expect = expect.map_leg(leg, &core.antipode);
        }
        if phi_f != expect {
            return Err("antipode twist: twisted reassociator mismatch".into());
        }
    }
    Ok(DrinfeldTwist {
        f,
        f_inv,
        gamma,
        delta,
    })
}

fn compute_pq_elements(h: &QuasiHopfAlgebra) -> Result<PQElements, String> {
    let core = &h.core;
    // p_R = x¹ ⊗ x²βS(x³)
    let p_r = {
        let mut w = h.word();
        let x = w.constant(&h.phi_inv);
        let be = w.constant1(&h.beta);
        let sx3 = w.antipode(x[2]);
        let p2 = w.mul_all(&[x[1], be, sx3]);
        w.finish_tensor(&[x[0], p2])
    };
    // q_R = X¹ ⊗ S⁻¹(αX³)X²
    let q_r = {
        let mut w = h.word();
        let x = w.constant(&h.phi);
        let al = w.constant1(&h.alpha);
        let t = w.mul(al, x[2]);
        let st = w.antipode_inv(t);
        let q2 = w.mul(st, x[1]);
        w.finish_tensor(&[x[0], q2])
    };
    // p_L = X²S⁻¹(X¹β) ⊗ X³
    let p_l = {
        let mut w = h.word();
        let x = w.constant(&h.phi);
        let be = w.constant1(&h.beta);
        let t = w.mul(x[0], be);
        let st = w.antipode_inv(t);
        let p1 = w.mul(x[1], st);
        w.finish_tensor(&[p1, x[2]])
    };
    // q_L = S(x¹)αx² ⊗ x³
    let q_l = {
        let mut w = h.word();
        let x = w.constant(&h.phi_inv);
        let sx1 = w.antipode(x[0]);
        let al = w.constant1(&h.alpha);
        let q1 = w.mul_all(&[sx1, al, x[1]]);
        w.finish_tensor(&[q1, x[2]])
    };
    let unit2 = core.unit_element(2);
    // (qr1): Δ(h₁) p_R (1⊗S(h₂)) = p_R (h⊗1)
    {
        let mut w = h.word();
        let s = w.source();
        let (h1, h2) = w.coproduct(s);
        let (h11, h12) = w.coproduct(h1);
        let p = w.constant(&p_r);
        let sh2 = w.antipode(h2);
        let o1 = w.mul(h11, p[0]);
        let o2 = w.mul_all(&[h12, p[1], sh2]);
        let lhs = w.finish_map(&[o1, o2]);
        let mut w = h.word();
        let s = w.source();
        let p = w.constant(&p_r);
        let o1 = w.mul(p[0], s);
        let rhs = w.finish_map(&[o1, p[1]]);
        if lhs != rhs {
            return Err("p/q elements: right-p comparison identity fails".into());
        }
    }
    // (qr1a): (1⊗S⁻¹(h₂)) q_R Δ(h₁) = (h⊗1) q_R
    {
        let mut w = h.word();
        let s = w.source();
        let (h1, h2) = w.coproduct(s);
        let (h11, h12) = w.coproduct(h1);
        let q = w.constant(&q_r);
        let sh2 = w.antipode_inv(h2);
        let o1 = w.mul(q[0], h11);
        let o2 = w.mul_all(&[sh2, q[1], h12]);
        let lhs = w.finish_map(&[o1, o2]);
        let mut w = h.word();
        let s = w.source();
        let q = w.constant(&q_r);
        let o1 = w.mul(s, q[0]);
        let rhs = w.finish_map(&[o1, q[1]]);
        if lhs != rhs {
            return Err("p/q elements: right-q comparison identity fails".into());
        }
    }
    // (ql1a): (S(h₁)⊗1) q_L Δ(h₂) = (1⊗h) q_L
    {
        let mut w = h.word();
        let s = w.source();
        let (h1, h2) = w.coproduct(s);
        let (h21, h22) = w.coproduct(h2);
        let q = w.constant(&q_l);
        let sh1 = w.antipode(h1);
        let o1 = w.mul_all(&[sh1, q[0], h21]);
        let o2 = w.mul(q[1], h22);
        let lhs = w.finish_map(&[o1, o2]);
        let mut w = h.word();
        let s = w.source();
        let q = w.constant(&q_l);
        let o2 = w.mul(s, q[1]);
        let rhs = w.finish_map(&[q[0], o2]);
        if lhs != rhs {
            return Err("p/q elements: left-q comparison identity fails".into());
        }
    }
    // (pqr): Δ(q¹) p_R (1⊗S(q²)) = 1⊗1
    {
        let mut w = h.word();
        let q = w.constant(&q_r);
        let (q11, q12) = w.coproduct(q[0]);
        let p = w.constant(&p_r);
        let sq2 = w.antipode(q[1]);
        let o1 = w.mul(q11, p[0]);
        let o2 = w.mul_all(&[q12, p[1], sq2]);
        if w.finish_tensor(&[o1, o2]) != unit2 {
            return Err("p/q elements: q_R/p_R cancellation fails".into());
        }
    }
    // (pql): (S(p̃¹)⊗1) q_L Δ(p̃²) = 1⊗1
    {
        let mut w = h.word();
        let p = w.constant(&p_l);
        let (p21, p22) = w.coproduct(p[1]);
        let q = w.constant(&q_l);
        let sp1 = w.antipode(p[0]);
        let o1 = w.mul_all(&[sp1, q[0], p21]);
        let o2 = w.mul(q[1], p22);
        if w.finish_tensor(&[o1, o2]) != unit2 {
            return Err("p/q elements: q_L/p_L cancellation fails".into());
        }
    }
    // (pqla): Δ(q̃²) p_L (S⁻¹(q̃¹)⊗1) = 1⊗1
    {
        let mut w = h.word();
        let q = w.constant(&q_l);
        let (q21, q22) = w.coproduct(q[1]);
        let p = w.constant(&p_l);
        let sq1 = w.antipode_inv(q[0]);
        let o1 = w.mul_all(&[q21, p[0], sq1]);
        let o2 = w.mul(q22, p[1]);
        if w.finish_tensor(&[o1, o2]) != unit2 {
            return Err("p/q elements: p_L/q_L cancellation fails".into());
        }
    }
    // (tpr2): Φ (Δ⊗id)(p_R) (p_R⊗1)
    //       = (id⊗Δ)(Δ(x¹)p_R) (1 ⊗ g¹S(x³) ⊗ g²S(x²))
    {
        let twist = h.drinfeld_twist()?;
        let mut w = h.word();
        let p = w.constant(&p_r);
        let (p11, p12) = w.coproduct(p[0]);
        let f = w.constant(&h.phi);
        let m1 = w.mul(f[0], p11);
        let m2 = w.mul(f[1], p12);
        let m3 = w.mul(f[2], p[1]);
        let p2 = w.constant(&p_r);
        let o1 = w.mul(m1, p2[0]);
        let o2 = w.mul(m2, p2[1]);
        let lhs = w.finish_tensor(&[o1, o2, m3]);
        let mut w = h.word();
        let x = w.constant(&h.phi_inv);
        let (x11, x12) = w.coproduct(x[0]);
        let p = w.constant(&p_r);
        let c = w.mul(x11, p[0]);
        let d = w.mul(x12, p[1]);
        let (d1, d2) = w.coproduct(d);
        let g = w.constant(&twist.f_inv);
        let sx3 = w.antipode(x[2]);
        let sx2 = w.antipode(x[1]);
        let t2 = w.mul(g[0], sx3);
        let t3 = w.mul(g[1], sx2);
        let o2 = w.mul(d1, t2);
        let o3 = w.mul(d2, t3);
        let rhs = w.finish_tensor(&[c, o2, o3]);
        if lhs != rhs {
            return Err("p/q elements: coassociativity comparison identity fails".into());
        }
    }
    Ok(PQElements { p_r, q_r, p_l, q_l })
}
