//! The four Yetter-Drinfeld module flavors (left/right action × left/right
//! coaction), their tensor products, flavor braidings with closed-form
//! inverses, and the category-isomorphism functors between the flavors.

use crate::hmod::{tensor_modules, HModule, Side};
use crate::linalg::LinearMap;
use crate::program::Word;
use crate::quasi_hopf::QuasiHopfAlgebra;
use crate::quasitriangular::QTStructure;
use crate::report::VerificationReport;
use std::sync::Arc;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    /// left action, left coaction λ: M → H⊗M
    LL,
    /// left action, right coaction ρ: M → M⊗H
    LR,
    /// right action, left coaction
    RL,
    /// right action, right coaction
    RR,
}

impl Flavor {
    pub fn side(&self) -> Side {
        match self {
            Flavor::LL | Flavor::LR => Side::Left,
            Flavor::RL | Flavor::RR => Side::Right,
        }
    }

    /// True when the coaction lands in H⊗M (rather than M⊗H).
    pub fn coacts_left(&self) -> bool {
        matches!(self, Flavor::LL | Flavor::RL)
    }
}

#[derive(Debug, Clone)]
pub struct YDModule {
    pub h: Arc<QuasiHopfAlgebra>,
    pub flavor: Flavor,
    pub module: HModule,
    pub coaction: LinearMap,
}

impl YDModule {
    pub fn new(
        h: Arc<QuasiHopfAlgebra>,
        flavor: Flavor,
        module: HModule,
        coaction: LinearMap,
    ) -> Result<YDModule, String> {
        module.validate()?;
        let m = YDModule {
            h,
            flavor,
            module,
            coaction,
        };
        m.check_shape()?;
        verify_yd(&m).into_result()?;
        Ok(m)
    }

    fn new_unchecked(
        h: Arc<QuasiHopfAlgebra>,
        flavor: Flavor,
        module: HModule,
        coaction: LinearMap,
    ) -> YDModule {
        YDModule {
            h,
            flavor,
            module,
            coaction,
        }
    }

    fn check_shape(&self) -> Result<(), String> {
        let (n, d) = (self.h.core.dim, self.module.dim);
        if self.module.side != self.flavor.side() {
            return Err("module side does not match the flavor".into());
        }
        if self.coaction.src_dim != d || self.coaction.dst_dim != n * d {
            return Err("coaction map has the wrong shape".into());
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.module.dim
    }

    /// The trivial one-dimensional module with coaction 1⊗1.
    pub fn trivial(h: &Arc<QuasiHopfAlgebra>, flavor: Flavor) -> YDModule {
        let module = HModule::trivial(&h.core, flavor.side());
        let coaction = {
            let mut w = h.word();
            let m = w.source_dim(1);
            let u = w.constant1(&h.core.unit);
            if flavor.coacts_left() {
                w.finish_map(&[u, m])
            } else {
                w.finish_map(&[m, u])
            }
        };
        YDModule::new_unchecked(h.clone(), flavor, module, coaction)
    }
}

/// Checks the three flavor axioms on all basis pairs.
pub fn verify_yd(m: &YDModule) -> VerificationReport {
    let mut rep = VerificationReport::new();
    if let Err(e) = m.check_shape() {
        rep.record("shape", false, &e);
        return rep;
    }
    let h = &m.h;
    let a = &m.module.action;
    let co = &m.coaction;
    let d = m.module.dim;

    // counit axiom: applying ε to the H-leg of the coaction gives the identity
    let counit_tag = match m.flavor {
        Flavor::LL => "y2",
        Flavor::LR => "lry2",
        Flavor::RL => "rly2",
        Flavor::RR => "ry2",
    };
    {
        let mut w = h.word();
        let s = w.source_dim(d);
        let m0 = if m.flavor.coacts_left() {
            let (l, m0) = w.coact_left(co, s);
            w.counit(l);
            m0
        } else {
            let (m0, l) = w.coact_right(co, s);
            w.counit(l);
            m0
        };
        rep.check(
            counit_tag,
            w.finish_map(&[m0]) == LinearMap::identity(h.field(), d),
        );
    }

    match m.flavor {
        Flavor::LL => {
            // (y1)
            let lhs = {
                let mut w = h.word();
                let s = w.source_dim(d);
                let (m1, m0) = w.coact_left(co, s);
                let x = w.constant(&h.phi);
                let t = w.act(a, x[1], m0);
                let (t1, t0) = w.coact_left(co, t);
                let o1 = w.mul(x[0], m1);
                let o2 = w.mul(t1, x[2]);
                w.finish_map(&[o1, o2, t0])
            };
            let rhs = {
                let mut w = h.word();
                let s = w.source_dim(d);
                let y = w.constant(&h.phi);
                let ym = w.act(a, y[0], s);
                let (l, l0) = w.coact_left(co, ym);
                let (l1, l2) = w.coproduct(l);
                let x = w.constant(&h.phi);
                let o1 = w.mul_all(&[x[0], l1, y[1]]);
                let o2 = w.mul_all(&[x[1], l2, y[2]]);
                let o3 = w.act(a, x[2], l0);
                w.finish_map(&[o1, o2, o3])
            };
            rep.check("y1", lhs == rhs);
            // (y3)
            let lhs = {
                let mut w = h.word();
                let (hh, s) = (w.source(), w.source_dim(d));
                let (h1, h2) = w.coproduct(hh);
                let (m1, m0) = w.coact_left(co, s);
                let o1 = w.mul(h1, m1);
                let o2 = w.act(a, h2, m0);
                w.finish_map(&[o1, o2])
            };
            let rhs = {
                let mut w = h.word();
                let (hh, s) = (w.source(), w.source_dim(d));
                let (h1, h2) = w.coproduct(hh);
                let hm = w.act(a, h1, s);
                let (l, l0) = w.coact_left(co, hm);
                let o1 = w.mul(l, h2);
                w.finish_map(&[o1, l0])
            };
            rep.check("y3", lhs == rhs);
        }
        Flavor::LR => {
            // (lry1)
            let lhs = {
                let mut w = h.word();
                let s = w.source_dim(d);
                let (m0, m1) = w.coact_right(co, s);
                let x = w.constant(&h.phi_inv);
                let t = w.act(a, x[1], m0);
                let (t0, t1) = w.coact_right(co, t);
                let o2 = w.mul(t1, x[0]);
                let o3 = w.mul(x[2], m1);
                w.finish_map(&[t0, o2, o3])
            };
            let rhs = {
                let mut w = h.word();
                let s = w.source_dim(d);
                let y = w.constant(&h.phi_inv);
                let ym = w.act(a, y[2], s);
                let (m0, l) = w.coact_right(co, ym);
                let (l1, l2) = w.coproduct(l);
                let x = w.constant(&h.phi_inv);
                let o1 = w.act(a, x[0], m0);
                let o2 = w.mul_all(&[x[1], l1, y[0]]);
                let o3 = w.mul_all(&[x[2], l2, y[1]]);
                w.finish_map(&[o1, o2, o3])
            };
            rep.check("lry1", lhs == rhs);
            // (lry3)
            let lhs = {
                let mut w = h.word();
                let (hh, s) = (w.source(), w.source_dim(d));
                let (h1, h2) = w.coproduct(hh);
                let (m0, m1) = w.coact_right(co, s);
                let o1 = w.act(a, h1, m0);
                let o2 = w.mul(h2, m1);
                w.finish_map(&[o1, o2])
            };
            let rhs = {
                let mut w = h.word();
                let (hh, s) = (w.source(), w.source_dim(d));
                let (h1, h2) = w.coproduct(hh);
                let hm = w.act(a, h2, s);
                let (m0, l) = w.coact_right(co, hm);
                let o2 = w.mul(l, h1);
                w.finish_map(&[m0, o2])
            };
            rep.check("lry3", lhs == rhs);
        }
        Flavor::RL => {
            // (rly1)
            let lhs = {
                let mut w = h.word();
                let s = w.source_dim(d);
                let (m1, m0) = w.coact_left(co, s);
                let x = w.constant(&h.phi_inv);
                let t = w.act_right(a, m0, x[1]);
                let (t1, t0) = w.coact_left(co, t);
                let o1 = w.mul(m1, x[0]);
                let o2 = w.mul(x[2], t1);
                w.finish_map(&[o1, o2, t0])
            };
            let rhs = {
                let mut w = h.word();
                let s = w.source_dim(d);
                let y = w.constant(&h.phi_inv);
                let my = w.act_right(a, s, y[0]);
                let (l, l0) = w.coact_left(co, my);
                let (l1, l2) = w.coproduct(l);
                let x = w.constant(&h.phi_inv);
                let o1 = w.mul_all(&[y[1], l1, x[0]]);
                let o2 = w.mul_all(&[y[2], l2, x[1]]);
                let o3 = w.act_right(a, l0, x[2]);
                w.finish_map(&[o1, o2, o3])
            };
            rep.check("rly1", lhs == rhs);
            // (rly3)
            let lhs = {
                let mut w = h.word();
                let (hh, s) = (w.source(), w.source_dim(d));
                let (h1, h2) = w.coproduct(hh);
                let (m1, m0) = w.coact_left(co, s);
                let o1 = w.mul(m1, h1);
                let o2 = w.act_right(a, m0, h2);
                w.finish_map(&[o1, o2])
            };
            let rhs = {
                let mut w = h.word();
                let (hh, s) = (w.source(), w.source_dim(d));
                let (h1, h2) = w.coproduct(hh);
                let mh = w.act_right(a, s, h1);
                let (l, l0) = w.coact_left(co, mh);
                let o1 = w.mul(h2, l);
                w.finish_map(&[o1, l0])
            };
            rep.check("rly3", lhs == rhs);
        }
        Flavor::RR => {
            // (ry1)
            let lhs = {
                let mut w = h.word();
                let s = w.source_dim(d);
                let (m0, m1) = w.coact_right(co, s);
                let x = w.constant(&h.phi);
                let t = w.act_right(a, m0, x[1]);
                let (t0, t1) = w.coact_right(co, t);
                let o2 = w.mul(x[0], t1);
                let o3 = w.mul(m1, x[2]);
                w.finish_map(&[t0, o2, o3])
            };
            let rhs = {
                let mut w = h.word();
                let s = w.source_dim(d);
                let y = w.constant(&h.phi);
                let my = w.act_right(a, s, y[2]);
                let (l0, l) = w.coact_right(co, my);
                let (l1, l2) = w.coproduct(l);
                let x = w.constant(&h.phi);
                let o1 = w.act_right(a, l0, x[0]);
                let o2 = w.mul_all(&[y[0], l1, x[1]]);
                let o3 = w.mul_all(&[y[1], l2, x[2]]);
                w.finish_map(&[o1, o2, o3])
            };
            rep.check("ry1", lhs == rhs);
            // (ry3)
            let lhs = {
                let mut w = h.word();
                let (hh, s) = (w.source(), w.source_dim(d));
                let (h1, h2) = w.coproduct(hh);
                let (m0, m1) = w.coact_right(co, s);
                let o1 = w.act_right(a, m0, h1);
                let o2 = w.mul(m1, h2);
                w.finish_map(&[o1, o2])
            };
            let rhs = {
                let mut w = h.word();
                let (hh, s) = (w.source(), w.source_dim(d));
                let (h1, h2) = w.coproduct(hh);
                let mh = w.act_right(a, s, h2);
                let (l0, l) = w.coact_right(co, mh);
                let o2 = w.mul(h1, l);
                w.finish_map(&[l0, o2])
            };
            rep.check("ry3", lhs == rhs);
        }
    }
    rep
}

/// The reformulated compatibility (y3p) for left YD modules, plus the
/// converse: the defining coaction is recovered from (syd).
pub fn check_y3p(m: &YDModule) -> VerificationReport {
    let mut rep = VerificationReport::new();
    if m.flavor != Flavor::LL {
        rep.record("y3p", false, "only defined for left-left modules");
        return rep;
    }
    let h = &m.h;
    let a = &m.module.action;
    let co = &m.coaction;
    let d = m.module.dim;
    let pq = match h.pq_elements() {
        Ok(pq) => pq,
        Err(e) => {
            rep.record("y3p", false, &e);
            return rep;
        }
    };
    // (h·m)₍₋₁₎ ⊗ (h·m)₍₀₎
    let lhs = {
        let mut w = h.word();
        let (hh, s) = (w.source(), w.source_dim(d));
        let hm = w.act(a, hh, s);
        let (l, l0) = w.coact_left(co, hm);
        w.finish_map(&[l, l0])
    };
    // [q¹h₁]₁(p¹·m)₍₋₁₎p²S(q²h₂) ⊗ [q¹h₁]₂·(p¹·m)₍₀₎
    let rhs = {
        let mut w = h.word();
        let (hh, s) = (w.source(), w.source_dim(d));
        let (h1, h2) = w.coproduct(hh);
        let q = w.constant(&pq.q_r);
        let t = w.mul(q[0], h1);
        let (t1, t2) = w.coproduct(t);
        let p = w.constant(&pq.p_r);
        let pm = w.act(a, p[0], s);
        let (l, l0) = w.coact_left(co, pm);
        let sq = w.mul(q[1], h2);
        let sq = w.antipode(sq);
        let o1 = w.mul_all(&[t1, l, p[1], sq]);
        let o2 = w.act(a, t2, l0);
        w.finish_map(&[o1, o2])
    };
    rep.check("y3p", lhs == rhs);
    // (syd): λ(m) = q¹₁(p¹·m)₍₋₁₎p²S(q²) ⊗ q¹₂·(p¹·m)₍₀₎
    let syd = {
        let mut w = h.word();
        let s = w.source_dim(d);
        let q = w.constant(&pq.q_r);
        let (q11, q12) = w.coproduct(q[0]);
        let p = w.constant(&pq.p_r);
        let pm = w.act(a, p[0], s);
        let (l, l0) = w.coact_left(co, pm);
        let sq = w.antipode(q[1]);
        let o1 = w.mul_all(&[q11, l, p[1], sq]);
        let o2 = w.act(a, q12, l0);
        w.finish_map(&[o1, o2])
    };
    rep.check("syd", &syd == co);
    rep
}

/// A linear map intertwining both the action and the coaction.
#[derive(Debug, Clone)]
pub struct YDMorphism {
    pub src: YDModule,
    pub dst: YDModule,
    pub map: LinearMap,
}

impl YDMorphism {
    pub fn new(src: YDModule, dst: YDModule, map: LinearMap) -> Result<YDMorphism, String> {
        let m = YDMorphism { src, dst, map };
        m.validate()?;
        Ok(m)
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.src.flavor != self.dst.flavor {
            return Err("flavor mismatch".into());
        }
        crate::hmod::ModuleMorphism {
            src: self.src.module.clone(),
            dst: self.dst.module.clone(),
            map: self.map.clone(),
        }
        .validate()?;
        let h = &self.src.h;
        let (ds, dd) = (self.src.dim(), self.dst.dim());
        let lhs = {
            let mut w = h.word();
            let s = w.source_dim(ds);
            if self.src.flavor.coacts_left() {
                let (l, m0) = w.coact_left(&self.src.coaction, s);
                let fm = w.apply(&[m0], &[dd], &self.map)[0];
                w.finish_map(&[l, fm])
            } else {
                let (m0, l) = w.coact_right(&self.src.coaction, s);
                let fm = w.apply(&[m0], &[dd], &self.map)[0];
                w.finish_map(&[fm, l])
            }
        };
        let rhs = {
            let mut w = h.word();
            let s = w.source_dim(ds);
            let fm = w.apply(&[s], &[dd], &self.map)[0];
            if self.src.flavor.coacts_left() {
                let (l, m0) = w.coact_left(&self.dst.coaction, fm);
                w.finish_map(&[l, m0])
            } else {
                let (m0, l) = w.coact_right(&self.dst.coaction, fm);
                w.finish_map(&[m0, l])
            }
        };
        if lhs != rhs {
            return Err("map does not intertwine the coactions".into());
        }
        Ok(())
    }
}

/// Tensor product of two same-flavor modules: diagonal action and the
/// flavor's tensor coaction.
pub fn yd_tensor(m: &YDModule, n: &YDModule) -> Result<YDModule, String> {
    if m.flavor != n.flavor {
        return Err("flavor mismatch".into());
    }
    if !Arc::ptr_eq(&m.h, &n.h) {
        return Err("different algebras".into());
    }
    let h = &m.h;
    let module = tensor_modules(&m.module, &n.module)?;
    let (am, an) = (&m.module.action, &n.module.action);
    let (com, con) = (&m.coaction, &n.coaction);
    let (dm, dn) = (m.dim(), n.dim());
    let coaction = match m.flavor {
        Flavor::LL => {
            // λ(m⊗n) = X¹(x¹Y¹·m)₍₋₁₎x²(Y²·n)₍₋₁₎Y³ ⊗ X²·(x¹Y¹·m)₍₀₎ ⊗ X³x³·(Y²·n)₍₀₎
            let mut w = h.word();
            let (sm, sn) = (w.source_dim(dm), w.source_dim(dn));
            let y = w.constant(&h.phi);
            let x = w.constant(&h.phi_inv);
            let t = w.mul(x[0], y[0]);
            let tm = w.act(am, t, sm);
            let (l, l0) = w.coact_left(com, tm);
            let yn = w.act(an, y[1], sn);
            let (k, k0) = w.coact_left(con, yn);
            let big = w.constant(&h.phi);
            let o1 = w.mul_all(&[big[0], l, x[1], k, y[2]]);
            let o2 = w.act(am, big[1], l0);
            let t2 = w.mul(big[2], x[2]);
            let o3 = w.act(an, t2, k0);
            w.finish_map(&[o1, o2, o3])
        }
        Flavor::LR => {
            // ρ(m⊗n) = x¹X¹·(y²·m)₍₀₎ ⊗ x²·(X³y³·n)₍₀₎ ⊗ x³(X³y³·n)₍₁₎X²(y²·m)₍₁₎y¹
            let mut w = h.word();
            let (sm, sn) = (w.source_dim(dm), w.source_dim(dn));
            let y = w.constant(&h.phi_inv);
            let big = w.constant(&h.phi);
            let ym = w.act(am, y[1], sm);
            let (m0, m1) = w.coact_right(com, ym);
            let t = w.mul(big[2], y[2]);
            let tn = w.act(an, t, sn);
            let (n0, n1) = w.coact_right(con, tn);
            let x = w.constant(&h.phi_inv);
            let t1 = w.mul(x[0], big[0]);
            let o1 = w.act(am, t1, m0);
            let o2 = w.act(an, x[1], n0);
            let o3 = w.mul_all(&[x[2], n1, big[1], m1, y[0]]);
            w.finish_map(&[o1, o2, o3])
        }
        Flavor::RR => {
            // ρ(m⊗n) = (m·X²)₍₀₎·x¹Y¹ ⊗ (n·X³x³)₍₀₎·Y² ⊗ X¹(m·X²)₍₁₎x²(n·X³x³)₍₁₎Y³
            let mut w = h.word();
            let (sm, sn) = (w.source_dim(dm), w.source_dim(dn));
            let big = w.constant(&h.phi);
            let x = w.constant(&h.phi_inv);
            let mx = w.act_right(am, sm, big[1]);
            let (m0, m1) = w.coact_right(com, mx);
            let t = w.mul(big[2], x[2]);
            let nt = w.act_right(an, sn, t);
            let (n0, n1) = w.coact_right(con, nt);
            let y = w.constant(&h.phi);
            let t1 = w.mul(x[0], y[0]);
            let o1 = w.act_right(am, m0, t1);
            let o2 = w.act_right(an, n0, y[1]);
            let o3 = w.mul_all(&[big[0], m1, x[1], n1, y[2]]);
            w.finish_map(&[o1, o2, o3])
        }
        Flavor::RL => {
            // λ(m⊗n) = x³(n·x²)₍₋₁₎X²(m·x¹X¹)₍₋₁₎y¹ ⊗ (m·x¹X¹)₍₀₎·y² ⊗ (n·x²)₍₀₎·X³y³
            let mut w = h.word();
            let (sm, sn) = (w.source_dim(dm), w.source_dim(dn));
            let x = w.constant(&h.phi_inv);
            let big = w.constant(&h.phi);
            let t = w.mul(x[0], big[0]);
            let mt = w.act_right(am, sm, t);
            let (l, l0) = w.coact_left(com, mt);
            let nx = w.act_right(an, sn, x[1]);
            let (k, k0) = w.coact_left(con, nx);
            let y = w.constant(&h.phi_inv);
            let o1 = w.mul_all(&[x[2], k, big[1], l, y[0]]);
            let o2 = w.act_right(am, l0, y[1]);
            let t2 = w.mul(big[2], y[2]);
            let o3 = w.act_right(an, k0, t2);
            w.finish_map(&[o1, o2, o3])
        }
    };
    Ok(YDModule::new_unchecked(
        h.clone(),
        m.flavor,
        module,
        coaction,
    ))
}

/// The braiding c_{M,N}: M⊗N → N⊗M of each flavor, with its inverse:
/// closed forms for the LL/LR flavors (cross-checked against matrix
/// inversion), matrix inversion for RL/RR.
pub fn yd_braiding(m: &YDModule, n: &YDModule) -> Result<(YDMorphism, YDMorphism), String> {
    if m.flavor != n.flavor {
        return Err("flavor mismatch".into());
    }
    let h = &m.h;
    let (am, an) = (&m.module.action, &n.module.action);
    let (dm, dn) = (m.dim(), n.dim());
    let c = match m.flavor {
        Flavor::LL => {
            // c(m⊗n) = m₍₋₁₎·n ⊗ m₍₀₎
            let mut w = h.word();
            let (sm, sn) = (w.source_dim(dm), w.source_dim(dn));
            let (l, l0) = w.coact_left(&m.coaction, sm);
            let o1 = w.act(an, l, sn);
            w.finish_map(&[o1, l0])
        }
        Flavor::LR => {
            // c(m⊗n) = n₍₀₎ ⊗ n₍₁₎·m
            let mut w = h.word();
            let (sm, sn) = (w.source_dim(dm), w.source_dim(dn));
            let (n0, n1) = w.coact_right(&n.coaction, sn);
            let o2 = w.act(am, n1, sm);
            w.finish_map(&[n0, o2])
        }
        Flavor::RR => {
            // c(m⊗n) = n₍₀₎ ⊗ m·n₍₁₎
            let mut w = h.word();
            let (sm, sn) = (w.source_dim(dm), w.source_dim(dn));
            let (n0, n1) = w.coact_right(&n.coaction, sn);
            let o2 = w.act_right(am, sm, n1);
            w.finish_map(&[n0, o2])
        }
        Flavor::RL => {
            // c(m⊗n) = n·m₍₋₁₎ ⊗ m₍₀₎
            let mut w = h.word();
            let (sm, sn) = (w.source_dim(dm), w.source_dim(dn));
            let (l, l0) = w.coact_left(&m.coaction, sm);
            let o1 = w.act_right(an, sn, l);
            w.finish_map(&[o1, l0])
        }
    };
    let matrix_inv = c.inverse().ok_or("braiding is not invertible")?;
    let c_inv = match m.flavor {
        Flavor::LL => {
            // c⁻¹(n⊗m) = q̃²₁X²·(p¹·m)₍₀₎ ⊗ S⁻¹(q̃¹X¹(p¹·m)₍₋₁₎p²S(q̃²₂X³))·n
            let pq = h.pq_elements()?;
            let mut w = h.word();
            let (sn, sm) = (w.source_dim(dn), w.source_dim(dm));
            let p = w.constant(&pq.p_r);
            let pm = w.act(am, p[0], sm);
            let (l, l0) = w.coact_left(&m.coaction, pm);
            let q = w.constant(&pq.q_l);
            let (q21, q22) = w.coproduct(q[1]);
            let x = w.constant(&h.phi);
            let t = w.mul(q22, x[2]);
            let st = w.antipode(t);
            let inner = w.mul_all(&[q[0], x[0], l, p[1], st]);
            let sin = w.antipode_inv(inner);
            let o2 = w.act(an, sin, sn);
            let t1 = w.mul(q21, x[1]);
            let o1 = w.act(am, t1, l0);
            w.finish_map(&[o1, o2])
        }
        Flavor::LR => {
            // c⁻¹(n⊗m) = q¹₁x¹S(q²x³(p̃²·n)₍₁₎p̃¹)·m ⊗ q¹₂x²·(p̃²·n)₍₀₎
            let pq = h.pq_elements()?;
            let mut w = h.word();
            let (sn, sm) = (w.source_dim(dn), w.source_dim(dm));
            let p = w.constant(&pq.p_l);
            let pn = w.act(an, p[1], sn);
            let (n0, n1) = w.coact_right(&n.coaction, pn);
            let q = w.constant(&pq.q_r);
            let (q11, q12) = w.coproduct(q[0]);
            let x = w.constant(&h.phi_inv);
            let inner = w.mul_all(&[q[1], x[2], n1, p[0]]);
            let s = w.antipode(inner);
            let t = w.mul_all(&[q11, x[0], s]);
            let o1 = w.act(am, t, sm);
            let t2 = w.mul(q12, x[1]);
            let o2 = w.act(an, t2, n0);
            w.finish_map(&[o1, o2])
        }
        Flavor::RL | Flavor::RR => matrix_inv.clone(),
    };
    if c_inv != matrix_inv {
        return Err("closed-form braiding inverse disagrees with matrix inversion".into());
    }
    let src = yd_tensor(m, n)?;
    let dst = yd_tensor(n, m)?;
    let braiding = YDMorphism::new(src.clone(), dst.clone(), c)?;
    let inverse = YDMorphism {
        src: dst,
        dst: src,
        map: c_inv,
    };
    Ok((braiding, inverse))
}

/// Turns a left-right module into a left-left one: same action, coaction
/// λ(m) = q¹₁x¹S(q²x³(p̃²·m)₍₁₎p̃¹) ⊗ q¹₂x²·(p̃²·m)₍₀₎.
pub fn functor_f(m: &YDModule) -> Result<YDModule, String> {
    if m.flavor != Flavor::LR {
        return Err("expected a left-right module".into());
    }
    let h = &m.h;
    let a = &m.module.action;
    let d = m.dim();
    let pq = h.pq_elements()?;
    let coaction = {
        let mut w = h.word();
        let s = w.source_dim(d);
        let p = w.constant(&pq.p_l);
        let pm = w.act(a, p[1], s);
        let (m0, m1) = w.coact_right(&m.coaction, pm);
        let q = w.constant(&pq.q_r);
        let (q11, q12) = w.coproduct(q[0]);
        let x = w.constant(&h.phi_inv);
        let inner = w.mul_all(&[q[1], x[2], m1, p[0]]);
        let si = w.antipode(inner);
        let o1 = w.mul_all(&[q11, x[0], si]);
        let t = w.mul(q12, x[1]);
        let o2 = w.act(a, t, m0);
        w.finish_map(&[o1, o2])
    };
    let out = YDModule::new_unchecked(h.clone(), Flavor::LL, m.module.clone(), coaction);
    verify_yd(&out).into_result()?;
    Ok(out)
}

/// Builds the operator that sends a candidate right coaction to the left
/// coaction produced by functor_f, by evaluating it on basis maps.
fn f_operator(h: &Arc<QuasiHopfAlgebra>, module: &HModule) -> Result<LinearMap, String> {
    let d = module.dim;
    let n = h.core.dim;
    let field = h.field();
    let pq = h.pq_elements()?;
    let in_dim = d * n * d;
    let out_dim = n * d * d;
    let mut op = LinearMap::zeros(field, out_dim, in_dim);
    for k in 0..in_dim {
        let mut basis = LinearMap::zeros(field, d * n, d);
        basis.entries[k] = field.one();
        let image = {
            let mut w = h.word();
            let s = w.source_dim(d);
            let p = w.constant(&pq.p_l);
            let pm = w.act(&module.action, p[1], s);
            let (m0, m1) = w.coact_right(&basis, pm);
            let q = w.constant(&pq.q_r);
            let (q11, q12) = w.coproduct(q[0]);
            let x = w.constant(&h.phi_inv);
            let inner = w.mul_all(&[q[1], x[2], m1, p[0]]);
            let si = w.antipode(inner);
            let o1 = w.mul_all(&[q11, x[0], si]);
            let t = w.mul(q12, x[1]);
            let o2 = w.act(&module.action, t, m0);
            w.finish_map(&[o1, o2])
        };
        for r in 0..out_dim {
            op.set(r, k, image.entries[r].clone());
        }
    }
    Ok(op)
}

/// The inverse of functor_f: recovers the right coaction of a left-left
/// module by a linear solve against the functor_f formula, cross-checked
/// against the closed form read off from the braiding inverse.
pub fn functor_f_inv(m: &YDModule) -> Result<YDModule, String> {
    if m.flavor != Flavor::LL {
        return Err("expected a left-left module".into());
    }
    let h = &m.h;
    let a = &m.module.action;
    let d = m.dim();
    let pq = h.pq_elements()?;
    // closed form: ρ(m) = q̃²₁X²·(p¹·m)₍₀₎ ⊗ S⁻¹(q̃¹X¹(p¹·m)₍₋₁₎p²S(q̃²₂X³))
    let closed = {
        let mut w = h.word();
        let s = w.source_dim(d);
        let p = w.constant(&pq.p_r);
        let pm = w.act(a, p[0], s);
        let (l, l0) = w.coact_left(&m.coaction, pm);
        let q = w.constant(&pq.q_l);
        let (q21, q22) = w.coproduct(q[1]);
        let x = w.constant(&h.phi);
        let t = w.mul(q22, x[2]);
        let st = w.antipode(t);
        let inner = w.mul_all(&[q[0], x[0], l, p[1], st]);
        let o2 = w.antipode_inv(inner);
        let t1 = w.mul(q21, x[1]);
        let o1 = w.act(a, t1, l0);
        w.finish_map(&[o1, o2])
    };
    let op = f_operator(h, &m.module)?;
    let solved = op
        .solve(&m.coaction.entries)
        .ok_or("no right coaction maps onto the given left coaction")?;
    if solved != closed.entries {
        return Err("linear solve disagrees with the closed-form inverse".into());
    }
    let out = YDModule::new_unchecked(h.clone(), Flavor::LR, m.module.clone(), closed);
    verify_yd(&out).into_result()?;
    Ok(out)
}

/// Turns a left-left module into a right-right one: m·h = S(h)·m, with the
/// coaction conjugated by the Drinfeld twist.
pub fn functor_k(m: &YDModule) -> Result<YDModule, String> {
    if m.flavor != Flavor::LL {
        return Err("expected a left-left module".into());
    }
    let h = &m.h;
    let a = &m.module.action;
    let d = m.dim();
    let tw = h.drinfeld_twist()?;
    let action = {
        let mut w = h.word();
        let (s, hh) = (w.source_dim(d), w.source());
        let sh = w.antipode(hh);
        let o = w.act(a, sh, s);
        w.finish_map(&[o])
    };
    let module = HModule::new(h.core.clone(), Side::Right, d, action)?;
    // ρ(m) = f²·(g¹·m)₍₀₎ ⊗ S⁻¹(f¹(g¹·m)₍₋₁₎g²)
    let coaction = {
        let mut w = h.word();
        let s = w.source_dim(d);
        let g = w.constant(&tw.f_inv);
        let gm = w.act(a, g[0], s);
        let (l, l0) = w.coact_left(&m.coaction, gm);
        let f = w.constant(&tw.f);
        let o1 = w.act(a, f[1], l0);
        let inner = w.mul_all(&[f[0], l, g[1]]);
        let o2 = w.antipode_inv(inner);
        w.finish_map(&[o1, o2])
    };
    let out = YDModule::new_unchecked(h.clone(), Flavor::RR, module, coaction);
    verify_yd(&out).into_result()?;
    Ok(out)
}

/// The inverse of functor_k: h·m = m·S⁻¹(h), with
/// λ(m) = g¹S((m·S⁻¹(f¹))₍₁₎)f² ⊗ (m·S⁻¹(f¹))₍₀₎·S⁻¹(g²).
pub fn functor_k_inv(m: &YDModule) -> Result<YDModule, String> {
    if m.flavor != Flavor::RR {
        return Err("expected a right-right module".into());
    }
    let h = &m.h;
    let a = &m.module.action;
    let d = m.dim();
    let tw = h.drinfeld_twist()?;
    let action = {
        let mut w = h.word();
        let (hh, s) = (w.source(), w.source_dim(d));
        let sh = w.antipode_inv(hh);
        let o = w.act_right(a, s, sh);
        w.finish_map(&[o])
    };
    let module = HModule::new(h.core.clone(), Side::Left, d, action)?;
    let coaction = {
        let mut w = h.word();
        let s = w.source_dim(d);
        let f = w.constant(&tw.f);
        let sf = w.antipode_inv(f[0]);
        let mf = w.act_right(a, s, sf);
        let (m0, m1) = w.coact_right(&m.coaction, mf);
        let g = w.constant(&tw.f_inv);
        let sm = w.antipode(m1);
        let o1 = w.mul_all(&[g[0], sm, f[1]]);
        let sg = w.antipode_inv(g[1]);
        let o2 = w.act_right(a, m0, sg);
        w.finish_map(&[o1, o2])
    };
    let out = YDModule::new_unchecked(h.clone(), Flavor::LL, module, coaction);
    verify_yd(&out).into_result()?;
    Ok(out)
}

/// Turns a right-left module into a left-right one: h·m = m·S⁻¹(h), with
/// ρ(m) = g¹·(f²·m)₍₀₎ ⊗ g²S((f²·m)₍₋₁₎)f¹ (actions on the left are the
/// new ones).
pub fn functor_g(m: &YDModule) -> Result<YDModule, String> {
    if m.flavor != Flavor::RL {
        return Err("expected a right-left module".into());
    }
    let h = &m.h;
    let a = &m.module.action;
    let d = m.dim();
    let tw = h.drinfeld_twist()?;
    let action = {
        let mut w = h.word();
        let (hh, s) = (w.source(), w.source_dim(d));
        let sh = w.antipode_inv(hh);
        let o = w.act_right(a, s, sh);
        w.finish_map(&[o])
    };
    let module = HModule::new(h.core.clone(), Side::Left, d, action)?;
    let coaction = {
        let mut w = h.word();
        let s = w.source_dim(d);
        let f = w.constant(&tw.f);
        let sf = w.antipode_inv(f[1]);
        let fm = w.act_right(a, s, sf);
        let (l, l0) = w.coact_left(&m.coaction, fm);
        let g = w.constant(&tw.f_inv);
        let sg = w.antipode_inv(g[0]);
        let o1 = w.act_right(a, l0, sg);
        let sl = w.antipode(l);
        let o2 = w.mul_all(&[g[1], sl, f[0]]);
        w.finish_map(&[o1, o2])
    };
    let out = YDModule::new_unchecked(h.clone(), Flavor::LR, module, coaction);
    verify_yd(&out).into_result()?;
    Ok(out)
}

/// The inverse of functor_g: m·h = S(h)·m, with
/// λ(m) = S⁻¹(f²(g²·m)₍₁₎g¹) ⊗ f¹·(g²·m)₍₀₎.
pub fn functor_g_inv(m: &YDModule) -> Result<YDModule, String> {
    if m.flavor != Flavor::LR {
        return Err("expected a left-right module".into());
    }
    let h = &m.h;
    let a = &m.module.action;
    let d = m.dim();
    let tw = h.drinfeld_twist()?;
    let action = {
        let mut w = h.word();
        let (s, hh) = (w.source_dim(d), w.source());
        let sh = w.antipode(hh);
        let o = w.act(a, sh, s);
        w.finish_map(&[o])
    };
    let module = HModule::new(h.core.clone(), Side::Right, d, action)?;
    let coaction = {
        let mut w = h.word();
        let s = w.source_dim(d);
        let g = w.constant(&tw.f_inv);
        let gm = w.act(a, g[1], s);
        let (m0, m1) = w.coact_right(&m.coaction, gm);
        let f = w.constant(&tw.f);
        let inner = w.mul_all(&[f[1], m1, g[0]]);
        let o1 = w.antipode_inv(inner);
        let o2 = w.act(a, f[0], m0);
        w.finish_map(&[o1, o2])
    };
    let out = YDModule::new_unchecked(h.clone(), Flavor::RL, module, coaction);
    verify_yd(&out).into_result()?;
    Ok(out)
}

/// Embeds a left module into the left-left YD category along a
/// quasitriangular structure: λ(m) = R² ⊗ R¹·m.
pub fn qt_embed(
    h: &Arc<QuasiHopfAlgebra>,
    qt: &QTStructure,
    module: &HModule,
) -> Result<YDModule, String> {
    if module.side != Side::Left {
        return Err("expected a left module".into());
    }
    let coaction = {
        let mut w = h.word();
        let s = w.source_dim(module.dim);
        let r = w.constant(&qt.r);
        let o2 = w.act(&module.action, r[0], s);
        w.finish_map(&[r[1], o2])
    };
    let out = YDModule::new_unchecked(h.clone(), Flavor::LL, module.clone(), coaction);
    verify_yd(&out).into_result()?;
    Ok(out)
}

/// The identity element of Hom(M,N), or any intertwiner: a seeded random
/// element of the space of module morphisms (always contains 0; for M = N
/// it contains the identity).
pub fn random_module_morphism<R: rand::Rng>(
    src: &HModule,
    dst: &HModule,
    rng: &mut R,
) -> LinearMap {
    let field = src.core.field;
    let (ds, dd) = (src.dim, dst.dim);
    // operator sending f to (h,m) ↦ h·f(m) − f(h·m); module maps = nullspace
    let n = src.core.dim;
    let mut op = LinearMap::zeros(field, n * dd * ds, dd * ds);
    for k in 0..dd * ds {
        let mut basis = LinearMap::zeros(field, dd, ds);
        basis.entries[k] = field.one();
        let lhs = {
            let mut w = Word::new(&src.core);
            let (hh, s) = (w.source(), w.source_dim(ds));
            let fm = w.apply(&[s], &[dd], &basis)[0];
            let o = match src.side {
                Side::Left => w.act(&dst.action, hh, fm),
                Side::Right => w.act_right(&dst.action, fm, hh),
            };
            w.finish_map(&[o])
        };
        let rhs = {
            let mut w = Word::new(&src.core);
            let (hh, s) = (w.source(), w.source_dim(ds));
            let hm = match src.side {
                Side::Left => w.act(&src.action, hh, s),
                Side::Right => w.act_right(&src.action, s, hh),
            };
            let o = w.apply(&[hm], &[dd], &basis)[0];
            w.finish_map(&[o])
        };
        let diff = lhs.sub(&rhs);
        for r in 0..n * dd * ds {
            op.set(r, k, diff.entries[r].clone());
        }
    }
    let null = op.nullspace();
    let mut f = LinearMap::zeros(field, dd, ds);
    for v in &null {
        let c = match field {
            crate::field::FieldSpec::Rationals => field.from_i64(rng.gen_range(-3i64..=3)),
            crate::field::FieldSpec::PrimeField(p) => field.from_i64(rng.gen_range(0..p) as i64),
        };
        for (k, x) in v.iter().enumerate() {
            let t = f.entries[k].add(&c.mul(x));
            f.entries[k] = t;
        }
    }
    f
}

/// A seeded random YD module of the requested flavor over a quasitriangular
/// algebra: embeds a random small left module and transports it through the
/// flavor functors. Without a quasitriangular structure only the trivial
/// module is available.
pub fn random_yd_module<R: rand::Rng>(
    h: &Arc<QuasiHopfAlgebra>,
    qt: Option<&QTStructure>,
    chars: &[LinearMap],
    flavor: Flavor,
    max_dim: usize,
    rng: &mut R,
) -> Result<YDModule, String> {
    let ll = match qt {
        Some(qt) => {
            let m = crate::hmod::random_left_module_capped(h, chars, max_dim, rng)?;
            qt_embed(h, qt, &m)?
        }
        None => YDModule::trivial(h, Flavor::LL),
    };
    match flavor {
        Flavor::LL => Ok(ll),
        Flavor::LR => functor_f_inv(&ll),
        Flavor::RR => functor_k(&ll),
        Flavor::RL => functor_g_inv(&functor_f_inv(&ll)?),
    }
}

/// Both hexagon identities for the flavor braiding against the legwise
/// reassociator constraint of the flavor's module side.
pub fn verify_yd_hexagons(m: &YDModule, n: &YDModule, p: &YDModule) -> Result<(), String> {
    let h = &m.h;
    let assoc = |a: &YDModule, b: &YDModule, c: &YDModule| {
        crate::hmod::associator(h, &a.module, &b.module, &c.module).map(|x| x.map)
    };
    let assoc_inv = |a: &YDModule, b: &YDModule, c: &YDModule| {
        crate::hmod::associator_inv(h, &a.module, &b.module, &c.module).map(|x| x.map)
    };
    let braid = |a: &YDModule, b: &YDModule| yd_braiding(a, b).map(|(c, _)| c.map);
    let np = yd_tensor(n, p)?;
    let mn = yd_tensor(m, n)?;
    let idm = LinearMap::identity(h.field(), m.dim());
    let idn = LinearMap::identity(h.field(), n.dim());
    let idp = LinearMap::identity(h.field(), p.dim());
    let lhs = assoc(n, p, m)?
        .compose(&braid(m, &np)?)
        .compose(&assoc(m, n, p)?);
    let rhs = idn
        .kron(&braid(m, p)?)
        .compose(&assoc(n, m, p)?)
        .compose(&braid(m, n)?.kron(&idp));
    if lhs != rhs {
        return Err("first hexagon fails".into());
    }
    let lhs = assoc_inv(p, m, n)?
        .compose(&braid(&mn, p)?)
        .compose(&assoc_inv(m, n, p)?);
    let rhs = braid(m, p)?
        .kron(&idn)
        .compose(&assoc_inv(m, p, n)?)
        .compose(&idm.kron(&braid(n, p)?));
    if lhs != rhs {
        return Err("second hexagon fails".into());
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::{builtin, characters, h2_r_matrix, BUILTIN_NAMES};
    use crate::field::FieldSpec;
    use crate::hmod::{braiding_map, random_left_module_capped};
    use crate::quasitriangular::make_qt;
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
    fn trivial_module_passes_every_flavor() {
        for name in BUILTIN_NAMES {
            for field in [FieldSpec::Rationals, F101] {
                let b = builtin(name, field).unwrap();
                for flavor in [Flavor::LL, Flavor::LR, Flavor::RL, Flavor::RR] {
                    let m = YDModule::trivial(&b.algebra, flavor);
                    assert!(verify_yd(&m).all_pass(), "{name} {flavor:?}");
                }
            }
        }
    }

    #[test]
    fn kz2_adjoint_module_is_ll_yd() {
        for field in [FieldSpec::Rationals, F101] {
            let b = builtin("kZ2", field).unwrap();
            let h = &b.algebra;
            let n = h.core.dim;
            // adjoint action h ⊳ h' = h₁ h' S(h₂), coaction Δ
            let action = {
                let mut w = h.word();
                let (hh, s) = (w.source(), w.source_dim(n));
                let (h1, h2) = w.coproduct(hh);
                let sh = w.antipode(h2);
                let o = w.mul_all(&[h1, s, sh]);
                w.finish_map(&[o])
            };
            let module = crate::hmod::HModule::new(h.core.clone(), Side::Left, n, action).unwrap();
            let m = YDModule::new(h.clone(), Flavor::LL, module, h.core.comult.clone()).unwrap();
            assert!(check_y3p(&m).all_pass());
        }
    }

    #[test]
    fn qt_embedding_matches_module_braiding() {
        for name in ["kZ2", "kZ2_Rt", "sweedler4_Rtri", "dZ2", "H2"] {
            let field = F101;
            let b = builtin(name, field).unwrap();
            let h = &b.algebra;
            let qt = match qt_for(name, field) {
                Some(qt) => qt,
                None => continue,
            };
            let chars = characters(name, field).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(5);
            for _ in 0..3 {
                let mm = random_left_module_capped(h, &chars, 3, &mut rng).unwrap();
                let nn = random_left_module_capped(h, &chars, 3, &mut rng).unwrap();
                let ym = qt_embed(h, &qt, &mm).unwrap();
                let yn = qt_embed(h, &qt, &nn).unwrap();
                let (c, c_inv) = yd_braiding(&ym, &yn).unwrap();
                assert_eq!(c.map, braiding_map(h, &qt.r, &mm, &nn), "{name}");
                assert!(c.map.compose(&c_inv.map).is_identity());
            }
        }
    }

    #[test]
    fn functor_round_trips() {
        for name in BUILTIN_NAMES {
            let field = F101;
            let b = builtin(name, field).unwrap();
            let h = &b.algebra;
            let qt = qt_for(name, field);
            let chars = characters(name, field).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(17);
            for _ in 0..2 {
                let ll = random_yd_module(h, qt.as_ref(), &chars, Flavor::LL, 3, &mut rng).unwrap();
                let lr = functor_f_inv(&ll).unwrap();
                let back = functor_f(&lr).unwrap();
                assert_eq!(back.coaction, ll.coaction, "{name} F∘F_inv");
                let rr = functor_k(&ll).unwrap();
                let back = functor_k_inv(&rr).unwrap();
                assert_eq!(back.coaction, ll.coaction, "{name} K_inv∘K coaction");
                assert_eq!(
                    back.module.action, ll.module.action,
                    "{name} K_inv∘K action"
                );
                let rl = functor_g_inv(&lr).unwrap();
                let back = functor_g(&rl).unwrap();
                assert_eq!(back.coaction, lr.coaction, "{name} G∘G_inv coaction");
                assert_eq!(
                    back.module.action, lr.module.action,
                    "{name} G∘G_inv action"
                );
            }
        }
    }

    #[test]
    fn braidings_and_hexagons_all_flavors() {
        for name in ["kZ2_Rt", "sweedler4_Rtri", "dZ2"] {
            let field = F101;
            let b = builtin(name, field).unwrap();
            let h = &b.algebra;
            let qt = qt_for(name, field);
            let chars = characters(name, field).unwrap();
            for flavor in [Flavor::LL, Flavor::LR, Flavor::RL, Flavor::RR] {
                let mut rng = ChaCha8Rng::seed_from_u64(23);
                let m = random_yd_module(h, qt.as_ref(), &chars, flavor, 2, &mut rng).unwrap();
                let n = random_yd_module(h, qt.as_ref(), &chars, flavor, 2, &mut rng).unwrap();
                let p = random_yd_module(h, qt.as_ref(), &chars, flavor, 2, &mut rng).unwrap();
                let t = yd_tensor(&m, &n).unwrap();
                assert!(verify_yd(&t).all_pass(), "{name} {flavor:?} tensor");
                let (c, c_inv) = yd_braiding(&m, &n).unwrap();
                assert!(c.map.compose(&c_inv.map).is_identity(), "{name} {flavor:?}");
                verify_yd_hexagons(&m, &n, &p).unwrap_or_else(|e| {
                    panic!("{name} {flavor:?}: {e}");
                });
            }
        }
    }

    #[test]
    fn braiding_correspondence_under_f() {
        for name in ["kZ2_Rt", "dZ2"] {
            let field = F101;
            let b = builtin(name, field).unwrap();
            let h = &b.algebra;
            let qt = qt_for(name, field);
            let chars = characters(name, field).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(31);
            let m = random_yd_module(h, qt.as_ref(), &chars, Flavor::LR, 2, &mut rng).unwrap();
            let n = random_yd_module(h, qt.as_ref(), &chars, Flavor::LR, 2, &mut rng).unwrap();
            // mirror braiding of the left-right category: c̃_{M,N} = c⁻¹_{N,M}
            let (_, c_inv) = yd_braiding(&n, &m).unwrap();
            let fm = functor_f(&m).unwrap();
            let fn_ = functor_f(&n).unwrap();
            let (c_ll, _) = yd_braiding(&fm, &fn_).unwrap();
            assert_eq!(c_inv.map, c_ll.map, "{name}");
        }
    }

    #[test]
    fn random_morphisms_are_yd_morphisms() {
        let field = F101;
        let b = builtin("dZ2", field).unwrap();
        let h = &b.algebra;
        let qt = qt_for("dZ2", field).unwrap();
        let chars = characters("dZ2", field).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        let mm = random_left_module_capped(h, &chars, 3, &mut rng).unwrap();
        let ym = qt_embed(h, &qt, &mm).unwrap();
        let f = random_module_morphism(&mm, &mm, &mut rng);
        YDMorphism::new(ym.clone(), ym.clone(), f.clone()).unwrap();
        // the functors keep the underlying map, so it stays a morphism
        let lr = functor_f_inv(&ym).unwrap();
        YDMorphism::new(lr.clone(), lr, f).unwrap();
    }
}
