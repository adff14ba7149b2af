//! Left/right H-modules as a monoidal category: tensor products with the
//! reassociator-twisted associativity constraint, left/right duals with
//! their snake identities, and the braiding of a quasitriangular structure.

use crate::field::FieldSpec;
use crate::linalg::LinearMap;
use crate::program::Word;
use crate::quasi_hopf::QuasiHopfAlgebra;
use crate::quasitriangular::QTStructure;
use crate::tensor::{AlgebraCore, Tensor};
use rand::Rng;
use std::sync::Arc;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A finite-dimensional H-module. The action is stored as one linear map:
/// H⊗M → M for left modules, M⊗H → M for right modules.
#[derive(Debug, Clone)]
pub struct HModule {
    pub core: Arc<AlgebraCore>,
    pub side: Side,
    pub dim: usize,
    pub action: LinearMap,
}

impl HModule {
    pub fn new(
        core: Arc<AlgebraCore>,
        side: Side,
        dim: usize,
        action: LinearMap,
    ) -> Result<HModule, String> {
        let m = HModule {
            core,
            side,
            dim,
            action,
        };
        m.validate()?;
        Ok(m)
    }

    /// For constructions that are modules by construction (tensor products,
    /// duals, transported structure); skips the representation check.
    fn new_unchecked(core: Arc<AlgebraCore>, side: Side, dim: usize, action: LinearMap) -> HModule {
        HModule {
            core,
            side,
            dim,
            action,
        }
    }

    /// Checks that the action is a unital representation (left) or a unital
    /// anti-ordered representation (right).
    pub fn validate(&self) -> Result<(), String> {
        let n = self.core.dim;
        let d = self.dim;
        if self.action.dst_dim != d || self.action.src_dim != n * d {
            return Err("action map has the wrong shape".into());
        }
        // 1 acts as the identity
        let mut w = Word::new(&self.core);
        let m = w.source_dim(d);
        let u = w.constant1(&self.core.unit);
        let out = match self.side {
            Side::Left => w.act(&self.action, u, m),
            Side::Right => w.act_right(&self.action, m, u),
        };
        if !w.finish_map(&[out]).is_identity() {
            return Err("unit does not act as the identity".into());
        }
        // (ab)·m = a·(b·m) for left; m·(ab) = (m·a)·b for right
        let mut w = Word::new(&self.core);
        let (a, b, m) = (w.source(), w.source(), w.source_dim(d));
        let ab = w.mul(a, b);
        let lhs = match self.side {
            Side::Left => {
                let out = w.act(&self.action, ab, m);
                w.finish_map(&[out])
            }
            Side::Right => {
                let out = w.act_right(&self.action, m, ab);
                w.finish_map(&[out])
            }
        };
        let mut w = Word::new(&self.core);
        let (a, b, m) = (w.source(), w.source(), w.source_dim(d));
        let rhs = match self.side {
            Side::Left => {
                let bm = w.act(&self.action, b, m);
                let out = w.act(&self.action, a, bm);
                w.finish_map(&[out])
            }
            Side::Right => {
                let ma = w.act_right(&self.action, m, a);
                let out = w.act_right(&self.action, ma, b);
                w.finish_map(&[out])
            }
        };
        if lhs != rhs {
            return Err("action is not multiplicative".into());
        }
        Ok(())
    }

    /// The regular module: H acting on itself by multiplication.
    pub fn regular(core: &Arc<AlgebraCore>, side: Side) -> HModule {
        HModule {
            core: core.clone(),
            side,
            dim: core.dim,
            action: core.mult.clone(),
        }
    }

    /// The trivial module k, with the action through the counit.
    pub fn trivial(core: &Arc<AlgebraCore>, side: Side) -> HModule {
        HModule {
            core: core.clone(),
            side,
            dim: 1,
            action: core.counit.clone(),
        }
    }

    /// Transport of structure along an invertible map p: the action
    /// h·m = p(h·p⁻¹(m)).
    pub fn conjugate(&self, p: &LinearMap) -> Result<HModule, String> {
        let p_inv = p.inverse().ok_or("basis change not invertible")?;
        let n = self.core.dim;
        let id_n = LinearMap::identity(self.core.field, n);
        let action = match self.side {
            Side::Left => p.compose(&self.action).compose(&id_n.kron(&p_inv)),
            Side::Right => p.compose(&self.action).compose(&p_inv.kron(&id_n)),
        };
        Ok(HModule::new_unchecked(
            self.core.clone(),
            self.side,
            self.dim,
            action,
        ))
    }
}

/// A linear map between modules that intertwines the actions.
#[derive(Debug, Clone)]
pub struct ModuleMorphism {
    pub src: HModule,
    pub dst: HModule,
    pub map: LinearMap,
}

impl ModuleMorphism {
    pub fn new(src: HModule, dst: HModule, map: LinearMap) -> Result<ModuleMorphism, String> {
        let m = ModuleMorphism { src, dst, map };
        m.validate()?;
        Ok(m)
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.src.side != self.dst.side {
            return Err("side mismatch".into());
        }
        if self.map.src_dim != self.src.dim || self.map.dst_dim != self.dst.dim {
            return Err("map has the wrong shape".into());
        }
        let core = &self.src.core;
        let lhs = {
            let mut w = Word::new(core);
            let (h, m) = (w.source(), w.source_dim(self.src.dim));
            let hm = match self.src.side {
                Side::Left => w.act(&self.src.action, h, m),
                Side::Right => w.act_right(&self.src.action, m, h),
            };
            let out = w.apply(&[hm], &[self.dst.dim], &self.map)[0];
            w.finish_map(&[out])
        };
        let rhs = {
            let mut w = Word::new(core);
            let (h, m) = (w.source(), w.source_dim(self.src.dim));
            let fm = w.apply(&[m], &[self.dst.dim], &self.map)[0];
            let out = match self.src.side {
                Side::Left => w.act(&self.dst.action, h, fm),
                Side::Right => w.act_right(&self.dst.action, fm, h),
            };
            w.finish_map(&[out])
        };
        if lhs != rhs {
            return Err("map does not intertwine the actions".into());
        }
        Ok(())
    }
}

/// Tensor product with the diagonal action h·(m⊗n) = h₁·m ⊗ h₂·n
/// (or (m⊗n)·h = m·h₁ ⊗ n·h₂ on the right).
pub fn tensor_modules(m: &HModule, n: &HModule) -> Result<HModule, String> {
    if !Arc::ptr_eq(&m.core, &n.core) && m.core.mult != n.core.mult {
        return Err("different algebras".into());
    }
    if m.side != n.side {
        return Err("side mismatch".into());
    }
    let core = &m.core;
    let action = match m.side {
        Side::Left => {
            let mut w = Word::new(core);
            let (h, u, v) = (w.source(), w.source_dim(m.dim), w.source_dim(n.dim));
            let (h1, h2) = w.coproduct(h);
            let o1 = w.act(&m.action, h1, u);
            let o2 = w.act(&n.action, h2, v);
            w.finish_map(&[o1, o2])
        }
        Side::Right => {
            let mut w = Word::new(core);
            let (u, v, h) = (w.source_dim(m.dim), w.source_dim(n.dim), w.source());
            let (h1, h2) = w.coproduct(h);
            let o1 = w.act_right(&m.action, u, h1);
            let o2 = w.act_right(&n.action, v, h2);
            w.finish_map(&[o1, o2])
        }
    };
    Ok(HModule::new_unchecked(
        core.clone(),
        m.side,
        m.dim * n.dim,
        action,
    ))
}

/// The associativity constraint (U⊗V)⊗W → U⊗(V⊗W): the reassociator acts
/// legwise (Φ for left modules, Φ⁻¹ on the right).
pub fn associator(
    h: &QuasiHopfAlgebra,
    u: &HModule,
    v: &HModule,
    w_mod: &HModule,
) -> Result<ModuleMorphism, String> {
    let src = tensor_modules(&tensor_modules(u, v)?, w_mod)?;
    let dst = tensor_modules(u, &tensor_modules(v, w_mod)?)?;
    let map = {
        let mut w = h.word();
        let (mu, mv, mw) = (
            w.source_dim(u.dim),
            w.source_dim(v.dim),
            w.source_dim(w_mod.dim),
        );
        let legs = match u.side {
            Side::Left => w.constant(&h.phi),
            Side::Right => w.constant(&h.phi_inv),
        };
        let (o1, o2, o3) = match u.side {
            Side::Left => (
                w.act(&u.action, legs[0], mu),
                w.act(&v.action, legs[1], mv),
                w.act(&w_mod.action, legs[2], mw),
            ),
            Side::Right => (
                w.act_right(&u.action, mu, legs[0]),
                w.act_right(&v.action, mv, legs[1]),
                w.act_right(&w_mod.action, mw, legs[2]),
            ),
        };
        w.finish_map(&[o1, o2, o3])
    };
    ModuleMorphism::new(src, dst, map)
}

/// The inverse associator, built from Φ⁻¹ and cross-checked as the matrix
/// inverse.
pub fn associator_inv(
    h: &QuasiHopfAlgebra,
    u: &HModule,
    v: &HModule,
    w_mod: &HModule,
) -> Result<ModuleMorphism, String> {
    let a = associator(h, u, v, w_mod)?;
    let map = {
        let mut w = h.word();
        let (mu, mv, mw) = (
            w.source_dim(u.dim),
            w.source_dim(v.dim),
            w.source_dim(w_mod.dim),
        );
        let legs = match u.side {
            Side::Left => w.constant(&h.phi_inv),
            Side::Right => w.constant(&h.phi),
        };
        let (o1, o2, o3) = match u.side {
            Side::Left => (
                w.act(&u.action, legs[0], mu),
                w.act(&v.action, legs[1], mv),
                w.act(&w_mod.action, legs[2], mw),
            ),
            Side::Right => (
                w.act_right(&u.action, mu, legs[0]),
                w.act_right(&v.action, mv, legs[1]),
                w.act_right(&w_mod.action, mw, legs[2]),
            ),
        };
        w.finish_map(&[o1, o2, o3])
    };
    if map.compose(&a.map).is_identity() && a.map.compose(&map).is_identity() {
        ModuleMorphism::new(a.dst, a.src, map)
    } else {
        Err("reassociator legwise inverse is not the matrix inverse".into())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DualSide {
    LeftDual,
    RightDual,
}

/// A dual module together with its evaluation and coevaluation.
#[derive(Debug, Clone)]
pub struct DualData {
    pub which: DualSide,
    pub dual: HModule,
    /// V*⊗V → k (left dual) or V⊗*V → k (right dual)
    pub ev: LinearMap,
    /// k → V⊗V* (left dual) or k → *V⊗V (right dual)
    pub coev: LinearMap,
}

/// The identity tensor Σᵢ eᵢ⊗eⁱ with two legs of dimension d.
fn identity_element(field: FieldSpec, d: usize) -> Tensor {
    Tensor::from_vec(field, vec![d, d], LinearMap::identity(field, d).entries)
}

/// Builds V* (action through S) or *V (action through S⁻¹) of a left module,
/// with evaluation/coevaluation twisted by α and β, and verifies the snake
/// identities.
pub fn dual_module(h: &QuasiHopfAlgebra, m: &HModule, which: DualSide) -> Result<DualData, String> {
    if m.side != Side::Left {
        return Err("duals are implemented for left modules".into());
    }
    let core = &h.core;
    let d = m.dim;
    let n = core.dim;
    // ⟨h·φ, v⟩ = ⟨φ, S(h)·v⟩ (left dual) or ⟨φ, S⁻¹(h)·v⟩ (right dual):
    // build (h, v) ↦ S^{±1}(h)·v and reindex into the action on coordinates
    let twisted = {
        let mut w = h.word();
        let (hh, v) = (w.source(), w.source_dim(d));
        let sh = match which {
            DualSide::LeftDual => w.antipode(hh),
            DualSide::RightDual => w.antipode_inv(hh),
        };
        let out = w.act(&m.action, sh, v);
        w.finish_map(&[out])
    };
    // twisted[j, (a,i)] = ⟨e^j, S(e_a)·e_i⟩ ⇒ dual action [(i), (a,j)]
    let dual_action = Tensor::from_vec(core.field, vec![d, n, d], twisted.entries)
        .permute(&[2, 1, 0])
        .into_map(1);
    let dual = HModule::new_unchecked(core.clone(), Side::Left, d, dual_action);
    let (ev, coev) = match which {
        DualSide::LeftDual => {
            // ev(φ⊗v) = φ(α·v);  coev(1) = β·vᵢ ⊗ vⁱ
            let ev = {
                let mut w = h.word();
                let (phi, v) = (w.source_dim(d), w.source_dim(d));
                let al = w.constant1(&h.alpha);
                let av = w.act(&m.action, al, v);
                w.pair(phi, av, d);
                w.finish_map(&[])
            };
            let coev = {
                let mut w = h.word();
                let legs = w.constant(&identity_element(core.field, d));
                let be = w.constant1(&h.beta);
                let bm = w.act(&m.action, be, legs[0]);
                w.finish_tensor(&[bm, legs[1]]).into_map(2)
            };
            (ev, coev)
        }
        DualSide::RightDual => {
            // ev'(v⊗φ) = φ(S⁻¹(α)·v);  coev'(1) = vⁱ ⊗ S⁻¹(β)·vᵢ
            let ev = {
                let mut w = h.word();
                let (v, phi) = (w.source_dim(d), w.source_dim(d));
                let al = w.constant1(&h.s_inv_of(&h.alpha));
                let av = w.act(&m.action, al, v);
                w.pair(phi, av, d);
                w.finish_map(&[])
            };
            let coev = {
                let mut w = h.word();
                let legs = w.constant(&identity_element(core.field, d));
                let be = w.constant1(&h.s_inv_of(&h.beta));
                let bm = w.act(&m.action, be, legs[0]);
                w.finish_tensor(&[legs[1], bm]).into_map(2)
            };
            (ev, coev)
        }
    };
    let data = DualData {
        which,
        dual,
        ev,
        coev,
    };
    verify_snakes(h, m, &data)?;
    Ok(data)
}

/// The two snake identities for the given dual data.
pub fn verify_snakes(h: &QuasiHopfAlgebra, m: &HModule, data: &DualData) -> Result<(), String> {
    let field = h.field();
    let d = m.dim;
    let id_v = LinearMap::identity(field, d);
    match data.which {
        DualSide::LeftDual => {
            // (V⊗ev) ∘ a_{V,V*,V} ∘ (coev⊗V) = V
            let a = associator(h, m, &data.dual, m)?;
            let snake1 = id_v
                .kron(&data.ev)
                .compose(&a.map)
                .compose(&data.coev.kron(&id_v));
            if !snake1.is_identity() {
                return Err("left-dual snake (coev then ev) fails".into());
            }
            // (ev⊗V*) ∘ a⁻¹_{V*,V,V*} ∘ (V*⊗coev) = V*
            let a_inv = associator_inv(h, &data.dual, m, &data.dual)?;
            let snake2 = data
                .ev
                .kron(&id_v)
                .compose(&a_inv.map)
                .compose(&id_v.kron(&data.coev));
            if !snake2.is_identity() {
                return Err("left-dual snake (dual side) fails".into());
            }
        }
        DualSide::RightDual => {
            // (ev'⊗V) ∘ a⁻¹_{V,*V,V} ∘ (V⊗coev') = V
            let a_inv = associator_inv(h, m, &data.dual, m)?;
            let snake1 = data
                .ev
                .kron(&id_v)
                .compose(&a_inv.map)
                .compose(&id_v.kron(&data.coev));
            if !snake1.is_identity() {
                return Err("right-dual snake (module side) fails".into());
            }
            // (*V⊗ev') ∘ a_{*V,V,*V} ∘ (coev'⊗*V) = *V
            let a = associator(h, &data.dual, m, &data.dual)?;
            let snake2 = id_v
                .kron(&data.ev)
                .compose(&a.map)
                .compose(&data.coev.kron(&id_v));
            if !snake2.is_identity() {
                return Err("right-dual snake (dual side) fails".into());
            }
        }
    }
    Ok(())
}

/// The braiding c_{M,N}(m⊗n) = R²·n ⊗ R¹·m of a quasitriangular structure.
pub fn qt_braiding(
    h: &QuasiHopfAlgebra,
    qt: &QTStructure,
    m: &HModule,
    n: &HModule,
) -> Result<ModuleMorphism, String> {
    let src = tensor_modules(m, n)?;
    let dst = tensor_modules(n, m)?;
    let map = braiding_map(h, &qt.r, m, n);
    ModuleMorphism::new(src, dst, map)
}

/// The inverse braiding, built from R⁻¹: c⁻¹(n⊗m) = R̄¹·m ⊗ R̄²·n.
pub fn qt_braiding_inv(
    h: &QuasiHopfAlgebra,
    qt: &QTStructure,
    m: &HModule,
    n: &HModule,
) -> Result<ModuleMorphism, String> {
    let src = tensor_modules(n, m)?;
    let dst = tensor_modules(m, n)?;
    let map = {
        let mut w = h.word();
        let (vn, vm) = (w.source_dim(n.dim), w.source_dim(m.dim));
        let r = w.constant(&qt.r_inv);
        let o1 = w.act(&m.action, r[0], vm);
        let o2 = w.act(&n.action, r[1], vn);
        w.finish_map(&[o1, o2])
    };
    ModuleMorphism::new(src, dst, map)
}

/// Just the matrix of (m⊗n) ↦ R²·n ⊗ R¹·m for a given 2-leg element R.
pub fn braiding_map(h: &QuasiHopfAlgebra, r: &Tensor, m: &HModule, n: &HModule) -> LinearMap {
    let mut w = h.word();
    let (vm, vn) = (w.source_dim(m.dim), w.source_dim(n.dim));
    let rl = w.constant(r);
    let o1 = w.act(&n.action, rl[1], vn);
    let o2 = w.act(&m.action, rl[0], vm);
    w.finish_map(&[o1, o2])
}

/// Both hexagon identities for the braiding against the associator.
pub fn verify_hexagons(
    h: &QuasiHopfAlgebra,
    qt: &QTStructure,
    m: &HModule,
    n: &HModule,
    p: &HModule,
) -> Result<(), String> {
    let np = tensor_modules(n, p)?;
    let mn = tensor_modules(m, n)?;
    // a_{N,P,M} ∘ c_{M,N⊗P} ∘ a_{M,N,P} = (N⊗c_{M,P}) ∘ a_{N,M,P} ∘ (c_{M,N}⊗P)
    {
        let lhs = associator(h, n, p, m)?
            .map
            .compose(&qt_braiding(h, qt, m, &np)?.map)
            .compose(&associator(h, m, n, p)?.map);
        let idn = LinearMap::identity(h.field(), n.dim);
        let idp = LinearMap::identity(h.field(), p.dim);
        let rhs = idn
            .kron(&qt_braiding(h, qt, m, p)?.map)
            .compose(&associator(h, n, m, p)?.map)
            .compose(&qt_braiding(h, qt, m, n)?.map.kron(&idp));
        if lhs != rhs {
            return Err("first hexagon fails".into());
        }
    }
    // a⁻¹_{P,M,N} ∘ c_{M⊗N,P} ∘ a⁻¹_{M,N,P} = (c_{M,P}⊗N) ∘ a⁻¹_{M,P,N} ∘ (M⊗c_{N,P})
    {
        let lhs = associator_inv(h, p, m, n)?
            .map
            .compose(&qt_braiding(h, qt, &mn, p)?.map)
            .compose(&associator_inv(h, m, n, p)?.map);
        let idm = LinearMap::identity(h.field(), m.dim);
        let idn = LinearMap::identity(h.field(), n.dim);
        let rhs = qt_braiding(h, qt, m, p)?
            .map
            .kron(&idn)
            .compose(&associator_inv(h, m, p, n)?.map)
            .compose(&idm.kron(&qt_braiding(h, qt, n, p)?.map));
        if lhs != rhs {
            return Err("second hexagon fails".into());
        }
    }
    Ok(())
}

/// A random invertible matrix (repeated draws until the determinant is
/// nonzero; over the rationals entries are small integers).
pub fn random_invertible<R: Rng>(field: FieldSpec, d: usize, rng: &mut R) -> LinearMap {
    loop {
        let mut m = LinearMap::zeros(field, d, d);
        for r in 0..d {
            for c in 0..d {
                let v = match field {
                    FieldSpec::Rationals => rng.gen_range(-4i64..=4),
                    FieldSpec::PrimeField(p) => rng.gen_range(0..p) as i64,
                };
                m.set(r, c, field.from_i64(v));
            }
        }
        if m.inverse().is_some() {
            return m;
        }
    }
}

/// A seeded random left module: a draw from the catalog {trivial, regular,
/// dual of regular} transported along a random basis change.
pub fn random_left_module<R: Rng>(h: &QuasiHopfAlgebra, rng: &mut R) -> Result<HModule, String> {
    let base = match rng.gen_range(0..3u32) {
        0 => HModule::trivial(&h.core, Side::Left),
        1 => HModule::regular(&h.core, Side::Left),
        _ => {
            dual_module(
                h,
                &HModule::regular(&h.core, Side::Left),
                DualSide::LeftDual,
            )?
            .dual
        }
    };
    let p = random_invertible(h.field(), base.dim, rng);
    base.conjugate(&p)
}

/// Direct sum of same-side modules over the same algebra, via inclusion
/// and projection maps.
pub fn direct_sum(mods: &[HModule]) -> Result<HModule, String> {
    if mods.is_empty() {
        return Err("empty direct sum".into());
    }
    let core = &mods[0].core;
    let side = mods[0].side;
    let field = core.field;
    let n = core.dim;
    let total: usize = mods.iter().map(|m| m.dim).sum();
    let id_n = LinearMap::identity(field, n);
    let mut action = LinearMap::zeros(field, total, n * total);
    let mut offset = 0;
    for m in mods {
        if m.side != side || m.core.mult != core.mult {
            return Err("incompatible summand".into());
        }
        let mut incl = LinearMap::zeros(field, total, m.dim);
        let mut proj = LinearMap::zeros(field, m.dim, total);
        for k in 0..m.dim {
            incl.set(offset + k, k, field.one());
            proj.set(k, offset + k, field.one());
        }
        let block = match side {
            Side::Left => incl.compose(&m.action).compose(&id_n.kron(&proj)),
            Side::Right => incl.compose(&m.action).compose(&proj.kron(&id_n)),
        };
        action = action.add(&block);
        offset += m.dim;
    }
    Ok(HModule::new_unchecked(core.clone(), side, total, action))
}

/// A seeded random left module of dimension at most max_dim: a direct sum
/// of draws from a catalog (one-dimensional modules given by chars, plus
/// the regular module and its dual when they fit), transported along a
/// random basis change.
pub fn random_left_module_capped<R: Rng>(
    h: &QuasiHopfAlgebra,
    chars: &[LinearMap],
    max_dim: usize,
    rng: &mut R,
) -> Result<HModule, String> {
    let mut catalog: Vec<HModule> = vec![HModule::trivial(&h.core, Side::Left)];
    for c in chars {
        catalog.push(HModule::new(h.core.clone(), Side::Left, 1, c.clone())?);
    }
    if h.core.dim <= max_dim {
        let reg = HModule::regular(&h.core, Side::Left);
        catalog.push(dual_module(h, &reg, DualSide::LeftDual)?.dual);
        catalog.push(reg);
    }
    let mut parts: Vec<HModule> = Vec::new();
    let mut total = 0;
    loop {
        let pick = catalog[rng.gen_range(0..catalog.len())].clone();
        if total + pick.dim > max_dim {
            break;
        }
        total += pick.dim;
        parts.push(pick);
        if total == max_dim || rng.gen_bool(0.3) {
            break;
        }
    }
    if parts.is_empty() {
        parts.push(catalog[0].clone());
    }
    let sum = direct_sum(&parts)?;
    let p = random_invertible(h.field(), sum.dim, rng);
    sum.conjugate(&p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::builtin;
    use crate::quasitriangular::make_qt;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn pentagon_on_builtins() {
        for name in crate::builtins::BUILTIN_NAMES {
            let b = builtin(name, FieldSpec::PrimeField(101)).unwrap();
            let h = &b.algebra;
            let mut rng = ChaCha8Rng::seed_from_u64(7);
            for _ in 0..3 {
                let mods: Vec<HModule> = (0..4)
                    .map(|_| random_left_module(h, &mut rng).unwrap())
                    .collect();
                let (u, v, w, x) = (&mods[0], &mods[1], &mods[2], &mods[3]);
                // (U⊗a_{V,W,X}) ∘ a_{U,V⊗W,X} ∘ (a_{U,V,W}⊗X) = a_{U,V,W⊗X} ∘ a_{U⊗V,W,X}
                let idu = LinearMap::identity(h.field(), u.dim);
                let idx = LinearMap::identity(h.field(), x.dim);
                let vw = tensor_modules(v, w).unwrap();
                let wx = tensor_modules(w, x).unwrap();
                let uv = tensor_modules(u, v).unwrap();
                let lhs = idu
                    .kron(&associator(h, v, w, x).unwrap().map)
                    .compose(&associator(h, u, &vw, x).unwrap().map)
                    .compose(&associator(h, u, v, w).unwrap().map.kron(&idx));
                let rhs = associator(h, u, v, &wx)
                    .unwrap()
                    .map
                    .compose(&associator(h, &uv, w, x).unwrap().map);
                assert_eq!(lhs, rhs, "pentagon fails on {name}");
            }
        }
    }

    #[test]
    fn snakes_on_builtins() {
        for name in crate::builtins::BUILTIN_NAMES {
            for field in [FieldSpec::Rationals, FieldSpec::PrimeField(101)] {
                let b = builtin(name, field).unwrap();
                let h = &b.algebra;
                let reg = HModule::regular(&h.core, Side::Left);
                dual_module(h, &reg, DualSide::LeftDual).unwrap();
                dual_module(h, &reg, DualSide::RightDual).unwrap();
                let mut rng = ChaCha8Rng::seed_from_u64(11);
                let m = random_left_module(h, &mut rng).unwrap();
                dual_module(h, &m, DualSide::LeftDual).unwrap();
                dual_module(h, &m, DualSide::RightDual).unwrap();
            }
        }
    }

    #[test]
    fn braiding_hexagons_and_naturality() {
        for name in ["kZ2", "kZ2_Rt", "sweedler4_Rtri", "dZ2"] {
            let b = builtin(name, FieldSpec::PrimeField(101)).unwrap();
            let h = &b.algebra;
            let qt = make_qt(h, b.r_matrix.as_ref().unwrap()).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(3);
            for _ in 0..3 {
                let m = random_left_module(h, &mut rng).unwrap();
                let n = random_left_module(h, &mut rng).unwrap();
                let p = random_left_module(h, &mut rng).unwrap();
                verify_hexagons(h, &qt, &m, &n, &p).unwrap();
                // inverse braiding really is the inverse
                let c = qt_braiding(h, &qt, &m, &n).unwrap();
                let ci = qt_braiding_inv(h, &qt, &m, &n).unwrap();
                assert!(c.map.compose(&ci.map).is_identity());
                assert!(ci.map.compose(&c.map).is_identity());
            }
        }
    }

    #[test]
    fn braiding_square_detects_triangularity() {
        let field = FieldSpec::Rationals;
        for (name, tri) in [("kZ2_Rt", true), ("dZ2", false)] {
            let b = builtin(name, field).unwrap();
            let h = &b.algebra;
            let qt = make_qt(h, b.r_matrix.as_ref().unwrap()).unwrap();
            let reg = HModule::regular(&h.core, Side::Left);
            let c = qt_braiding(h, &qt, &reg, &reg).unwrap();
            assert_eq!(c.map.compose(&c.map).is_identity(), tri, "{name}");
        }
    }

    #[test]
    fn trivial_r_gives_plain_swap() {
        let b = builtin("kZ2", FieldSpec::Rationals).unwrap();
        let h = &b.algebra;
        let qt = make_qt(h, b.r_matrix.as_ref().unwrap()).unwrap();
        let reg = HModule::regular(&h.core, Side::Left);
        let c = qt_braiding(h, &qt, &reg, &reg).unwrap();
        assert_eq!(c.map, LinearMap::swap(h.field(), 2, 2));
    }

    #[test]
    fn right_modules_work_too() {
        let b = builtin("H2", FieldSpec::Rationals).unwrap();
        let h = &b.algebra;
        let reg = HModule::regular(&h.core, Side::Right);
        let t = tensor_modules(&reg, &reg).unwrap();
        let a = associator(h, &reg, &reg, &reg).unwrap();
        assert!(a.map.inverse().is_some());
        assert_eq!(t.dim, 4);
    }
}
