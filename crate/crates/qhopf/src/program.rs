//! Leg programs: a small step language for evaluating Sweedler-index
//! expressions, plus the [`Word`] builder used to transcribe formulas.
//!
//! A program manipulates one working tensor. Legs are referred to by stable
//! labels (not positions), so steps stay valid as legs are created and
//! consumed. "Source" legs carry an identity block whose hidden half indexes
//! the source coordinate of a linear map; finishing with sources present
//! yields the matrix of the transcribed formula.

use crate::linalg::LinearMap;
use crate::tensor::{tensor_embed, AlgebraCore, Tensor};
use std::sync::Arc;

pub type Leg = u64;

#[derive(Debug, Clone)]
pub enum Step {
    /// Adjoin a constant tensor; its legs get fresh labels.
    LoadConstant(Tensor),
    /// Adjoin the input in the given slot; its legs get fresh labels.
    LoadInput(usize),
    /// Adjoin an identity block of the given dimension; the visible half gets
    /// a fresh label, the hidden half becomes a source coordinate.
    LoadSource(usize),
    /// Multiply two algebra legs; the product gets a fresh label.
    MultiplyLegs(Leg, Leg),
    /// Replace an algebra leg by its coproduct; two fresh labels.
    CoproductAt(Leg),
    /// Apply the antipode on an algebra leg (label preserved).
    AntipodeAt(Leg),
    /// Apply the inverse antipode on an algebra leg (label preserved).
    AntipodeInvAt(Leg),
    /// Contract an algebra leg with the counit.
    CounitAt(Leg),
    /// Reorder the visible legs to the given label order.
    PermuteLegs(Vec<Leg>),
    /// Embed the whole working element into `total` legs at `positions`,
    /// padding with the unit. Only valid when no sources are pending.
    EmbedAt(Vec<usize>, usize),
    /// Contract the listed legs (in order, last fastest) with an arbitrary
    /// linear map; one fresh label per output leg. Covers module actions,
    /// coactions and every other structure map.
    ApplyMapAt {
        in_legs: Vec<Leg>,
        out_dims: Vec<usize>,
        map: LinearMap,
    },
}

/// A recorded formula: steps plus the labels of the output legs, in order.
#[derive(Debug, Clone)]
pub struct LegProgram {
    pub steps: Vec<Step>,
    pub outputs: Vec<Leg>,
}

impl LegProgram {
    /// Runs the program on concrete inputs and returns the resulting tensor.
    pub fn evaluate(&self, core: &Arc<AlgebraCore>, inputs: &[Tensor]) -> Tensor {
        let mut exec = Exec::new(core.clone());
        for step in &self.steps {
            exec.step(step, inputs);
        }
        exec.finish_tensor(&self.outputs)
    }
}

/// One connected component of the working state: a tensor whose legs are
/// the visible labels followed by its hidden source legs (tracked by opening
/// sequence number). Components stay factored until an operation entangles
/// them, so tensor sizes track the formula's true connectivity rather than
/// the number of loaded symbols.
struct Factor {
    t: Tensor,
    visible: Vec<Leg>,
    hidden: Vec<u64>,
}

/// Interpreter state: a list of factors plus label bookkeeping.
struct Exec {
    core: Arc<AlgebraCore>,
    factors: Vec<Factor>,
    next: Leg,
    n_sources: u64,
    created: Vec<Leg>,
}

impl Exec {
    fn new(core: Arc<AlgebraCore>) -> Exec {
        Exec {
            core,
            factors: Vec::new(),
            next: 0,
            n_sources: 0,
            created: Vec::new(),
        }
    }

    fn fresh(&mut self) -> Leg {
        let l = self.next;
        self.next += 1;
        self.created.push(l);
        l
    }

    fn factor_of(&self, leg: Leg) -> usize {
        self.factors
            .iter()
            .position(|f| f.visible.contains(&leg))
            .unwrap_or_else(|| panic!("unknown or consumed leg {leg}"))
    }

    fn load(&mut self, c: Tensor) -> Vec<Leg> {
        let legs: Vec<Leg> = (0..c.n_legs()).map(|_| self.fresh()).collect();
        self.factors.push(Factor {
            t: c,
            visible: legs.clone(),
            hidden: Vec::new(),
        });
        legs
    }

    /// Merges factor `j` into factor `i` by outer product, keeping visible
    /// legs first and both hidden blocks at the end. Returns the merged index.
    fn merge(&mut self, i: usize, j: usize) -> usize {
        let fj = self.factors.remove(j);
        let i = if j < i { i - 1 } else { i };
        let f = &mut self.factors[i];
        let (v1, h1) = (f.visible.len(), f.hidden.len());
        let (v2, h2) = (fj.visible.len(), fj.hidden.len());
        let t = f.t.outer(&fj.t);
        // legs are (vis1, hid1, vis2, hid2); move hid1 behind vis2
        let total = v1 + h1 + v2 + h2;
        let mut perm: Vec<usize> = Vec::with_capacity(total);
        perm.extend(0..v1);
        perm.extend(v1 + h1..v1 + h1 + v2);
        perm.extend(v1..v1 + h1);
        perm.extend(v1 + h1 + v2..total);
        f.t = t.permute(&perm);
        f.visible.extend(fj.visible);
        f.hidden.extend(fj.hidden);
        i
    }

    /// Brings every factor containing one of `legs` into a single factor.
    fn gather(&mut self, legs: &[Leg]) -> usize {
        let mut i = self.factor_of(legs[0]);
        loop {
            let other = legs.iter().copied().find_map(|l| {
                let j = self.factor_of(l);
                (j != i).then_some(j)
            });
            match other {
                Some(j) => i = self.merge(i, j),
                None => return i,
            }
        }
    }

    fn gather_all(&mut self) -> usize {
        if self.factors.is_empty() {
            self.factors.push(Factor {
                t: Tensor::scalar(self.core.field, self.core.field.one()),
                visible: Vec::new(),
                hidden: Vec::new(),
            });
        }
        while self.factors.len() > 1 {
            self.merge(0, 1);
        }
        0
    }

    fn apply(&mut self, in_legs: &[Leg], out_dims: &[usize], map: &LinearMap) -> Vec<Leg> {
        let i = self.gather(in_legs);
        let f = &mut self.factors[i];
        let positions: Vec<usize> = in_legs
            .iter()
            .map(|&l| {
                f.visible
                    .iter()
                    .position(|&x| x == l)
                    .unwrap_or_else(|| panic!("unknown or consumed leg {l}"))
            })
            .collect();
        let t = f.t.apply_map_at(&positions, out_dims, map);
        // survivors kept their relative order; outputs landed after the
        // hidden block, so pull them back to the end of the visible block
        let v = f.visible.len() - in_legs.len();
        let h = f.hidden.len();
        let o = out_dims.len();
        let mut perm: Vec<usize> = (0..v).collect();
        perm.extend(v + h..v + h + o);
        perm.extend(v..v + h);
        f.t = t.permute(&perm);
        let mut keep: Vec<Leg> = Vec::with_capacity(v);
        for &l in f.visible.iter() {
            if !in_legs.contains(&l) {
                keep.push(l);
            }
        }
        f.visible = keep;
        let outs: Vec<Leg> = (0..o).map(|_| self.fresh()).collect();
        self.factors[i].visible.extend(&outs);
        outs
    }

    fn step(&mut self, step: &Step, inputs: &[Tensor]) {
        self.created.clear();
        let n = self.core.dim;
        match step {
            Step::LoadConstant(c) => {
                self.load(c.clone());
            }
            Step::LoadInput(slot) => {
                let c = inputs
                    .get(*slot)
                    .unwrap_or_else(|| panic!("missing input slot {slot}"))
                    .clone();
                self.load(c);
            }
            Step::LoadSource(dim) => {
                let ident = Tensor::from_vec(
                    self.core.field,
                    vec![*dim, *dim],
                    LinearMap::identity(self.core.field, *dim).entries,
                );
                let l = self.fresh();
                let seq = self.n_sources;
                self.n_sources += 1;
                self.factors.push(Factor {
                    t: ident,
                    visible: vec![l],
                    hidden: vec![seq],
                });
            }
            Step::MultiplyLegs(a, b) => {
                let mult = self.core.mult.clone();
                self.apply(&[*a, *b], &[n], &mult);
            }
            Step::CoproductAt(a) => {
                let comult = self.core.comult.clone();
                self.apply(&[*a], &[n, n], &comult);
            }
            Step::AntipodeAt(a) => {
                let s = self.core.antipode.clone();
                let out = self.apply(&[*a], &[n], &s);
                // keep the caller's label alive
                let i = self.factor_of(out[0]);
                let f = &mut self.factors[i];
                let k = f.visible.iter().position(|&l| l == out[0]).unwrap();
                f.visible[k] = *a;
            }
            Step::AntipodeInvAt(a) => {
                let s = self.core.antipode_inv.clone();
                let out = self.apply(&[*a], &[n], &s);
                let i = self.factor_of(out[0]);
                let f = &mut self.factors[i];
                let k = f.visible.iter().position(|&l| l == out[0]).unwrap();
                f.visible[k] = *a;
            }
            Step::CounitAt(a) => {
                let eps = self.core.counit.clone();
                self.apply(&[*a], &[], &eps);
            }
            Step::PermuteLegs(order) => {
                let i = self.gather_all();
                let f = &mut self.factors[i];
                assert_eq!(
                    order.len(),
                    f.visible.len(),
                    "permutation must list all legs"
                );
                let mut perm: Vec<usize> = order
                    .iter()
                    .map(|&l| {
                        f.visible
                            .iter()
                            .position(|&x| x == l)
                            .unwrap_or_else(|| panic!("unknown or consumed leg {l}"))
                    })
                    .collect();
                let v = f.visible.len();
                // hidden legs end up in opening order (first = slowest)
                let mut hid: Vec<usize> = (0..f.hidden.len()).collect();
                hid.sort_by_key(|&k| f.hidden[k]);
                perm.extend(hid.iter().map(|&k| v + k));
                f.t = f.t.permute(&perm);
                f.visible = order.clone();
                f.hidden.sort_unstable();
            }
            Step::EmbedAt(positions, total) => {
                let i = self.gather_all();
                let f = &mut self.factors[i];
                assert_eq!(f.hidden.len(), 0, "embed with pending sources");
                f.t = tensor_embed(&self.core, &f.t, positions, *total)
                    .unwrap_or_else(|e| panic!("embed: {e}"));
                // fresh labels at the padded positions, existing labels moved
                let old = f.visible.clone();
                let mut labels = vec![0; *total];
                let mut seen = vec![false; *total];
                for (k, &p) in positions.iter().enumerate() {
                    labels[p] = old[k];
                    seen[p] = true;
                }
                for (p, s) in seen.iter().enumerate() {
                    if !s {
                        labels[p] = self.fresh();
                    }
                }
                self.factors[i].visible = labels;
            }
            Step::ApplyMapAt {
                in_legs,
                out_dims,
                map,
            } => {
                self.apply(in_legs, out_dims, &map.clone());
            }
        }
    }

    fn finish_tensor(mut self, outputs: &[Leg]) -> Tensor {
        self.step(&Step::PermuteLegs(outputs.to_vec()), &[]);
        let f = self.factors.remove(0);
        assert_eq!(
            f.hidden.len(),
            0,
            "sources pending; finish as a map instead"
        );
        f.t
    }

    fn finish_map(mut self, outputs: &[Leg]) -> LinearMap {
        self.step(&Step::PermuteLegs(outputs.to_vec()), &[]);
        let f = self.factors.remove(0);
        f.t.into_map(outputs.len())
    }
}

/// Fluent builder over the step machine. Every formula in the workbench is
/// transcribed as a `Word`; the recorded program can be replayed on inputs.
pub struct Word {
    exec: Exec,
    steps: Vec<Step>,
}

impl Word {
    pub fn new(core: &Arc<AlgebraCore>) -> Word {
        Word {
            exec: Exec::new(core.clone()),
            steps: Vec::new(),
        }
    }

    pub fn core(&self) -> &Arc<AlgebraCore> {
        &self.exec.core
    }

    fn run(&mut self, step: Step) -> Vec<Leg> {
        self.exec.step(&step, &[]);
        self.steps.push(step);
        self.exec.created.clone()
    }

    /// Adjoins a constant, returning one label per leg.
    pub fn constant(&mut self, c: &Tensor) -> Vec<Leg> {
        self.run(Step::LoadConstant(c.clone()))
    }

    /// Adjoins a one-leg constant.
    pub fn constant1(&mut self, c: &Tensor) -> Leg {
        assert_eq!(c.n_legs(), 1);
        self.constant(c)[0]
    }

    /// Opens a source leg of the algebra dimension (a formal input `h`).
    pub fn source(&mut self) -> Leg {
        let dim = self.exec.core.dim;
        self.run(Step::LoadSource(dim))[0]
    }

    /// Opens a source leg of arbitrary dimension (a formal module vector).
    pub fn source_dim(&mut self, dim: usize) -> Leg {
        self.run(Step::LoadSource(dim))[0]
    }

    pub fn mul(&mut self, a: Leg, b: Leg) -> Leg {
        self.run(Step::MultiplyLegs(a, b))[0]
    }

    /// Left-to-right product of several algebra legs. Evaluated right to
    /// left (valid by associativity) so that leading constants join the
    /// working state after the rest of the chain has contracted.
    pub fn mul_all(&mut self, legs: &[Leg]) -> Leg {
        let mut acc = *legs.last().unwrap();
        for &l in legs[..legs.len() - 1].iter().rev() {
            acc = self.mul(l, acc);
        }
        acc
    }

    pub fn coproduct(&mut self, a: Leg) -> (Leg, Leg) {
        let out = self.run(Step::CoproductAt(a));
        (out[0], out[1])
    }

    pub fn antipode(&mut self, a: Leg) -> Leg {
        self.run(Step::AntipodeAt(a));
        a
    }

    pub fn antipode_inv(&mut self, a: Leg) -> Leg {
        self.run(Step::AntipodeInvAt(a));
        a
    }

    pub fn counit(&mut self, a: Leg) {
        self.run(Step::CounitAt(a));
    }

    /// Contracts legs against an arbitrary linear map.
    pub fn apply(&mut self, in_legs: &[Leg], out_dims: &[usize], map: &LinearMap) -> Vec<Leg> {
        self.run(Step::ApplyMapAt {
            in_legs: in_legs.to_vec(),
            out_dims: out_dims.to_vec(),
            map: map.clone(),
        })
    }

    /// Left action `h · m` for an action map H⊗M → M.
    pub fn act(&mut self, action: &LinearMap, h: Leg, m: Leg) -> Leg {
        let d = action.dst_dim;
        self.apply(&[h, m], &[d], action)[0]
    }

    /// Right action `m · h` for an action map M⊗H → M.
    pub fn act_right(&mut self, action: &LinearMap, m: Leg, h: Leg) -> Leg {
        let d = action.dst_dim;
        self.apply(&[m, h], &[d], action)[0]
    }

    /// Left coaction `m ↦ m₍₋₁₎ ⊗ m₍₀₎` for a coaction map M → H⊗M.
    pub fn coact_left(&mut self, coaction: &LinearMap, m: Leg) -> (Leg, Leg) {
        let n = self.exec.core.dim;
        let d = coaction.dst_dim / n;
        let out = self.apply(&[m], &[n, d], coaction);
        (out[0], out[1])
    }

    /// Right coaction `m ↦ m₍₀₎ ⊗ m₍₁₎` for a coaction map M → M⊗H.
    pub fn coact_right(&mut self, coaction: &LinearMap, m: Leg) -> (Leg, Leg) {
        let n = self.exec.core.dim;
        let d = coaction.dst_dim / n;
        let out = self.apply(&[m], &[d, n], coaction);
        (out[0], out[1])
    }

    /// Pairing ⟨φ, m⟩ of a dual leg against a module leg; consumes both.
    pub fn pair(&mut self, phi: Leg, m: Leg, dim: usize) {
        let mut ev = LinearMap::zeros(self.exec.core.field, 1, dim * dim);
        for i in 0..dim {
            ev.set(0, i * dim + i, self.exec.core.field.one());
        }
        self.apply(&[phi, m], &[], &ev);
    }

    /// Finishes as a constant tensor with the given output legs, in order.
    pub fn finish_tensor(mut self, outputs: &[Leg]) -> Tensor {
        let outs = outputs.to_vec();
        self.steps.push(Step::PermuteLegs(outs.clone()));
        self.exec.finish_tensor(&outs)
    }

    /// Finishes as the matrix sending the source legs (first opened = slowest
    /// index) to the output legs.
    pub fn finish_map(mut self, outputs: &[Leg]) -> LinearMap {
        let outs = outputs.to_vec();
        self.steps.push(Step::PermuteLegs(outs.clone()));
        self.exec.finish_map(&outs)
    }

    /// Hands back the recorded program (outputs must be listed explicitly).
    pub fn into_program(self, outputs: &[Leg]) -> LegProgram {
        LegProgram {
            steps: self.steps,
            outputs: outputs.to_vec(),
        }
    }
}

/// Evaluates a standalone program on inputs.
pub fn evaluate(core: &Arc<AlgebraCore>, program: &LegProgram, inputs: &[Tensor]) -> Tensor {
    program.evaluate(core, inputs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::linalg::LinearMap;

    fn tiny(field: FieldSpec) -> Arc<AlgebraCore> {
        // kℤ₂ again, built inline to keep this module self-contained
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
        Arc::new(AlgebraCore {
            field,
            dim: n,
            basis_names: vec!["1".into(), "g".into()],
            mult,
            unit: Tensor::basis(field, n, 0),
            comult,
            counit,
            antipode: LinearMap::identity(field, n),
            antipode_inv: LinearMap::identity(field, n),
        })
    }

    #[test]
    fn antipode_word_gives_counit_times_unit() {
        // h ↦ h₁ β S(h₂) with β = 1 on a Hopf algebra equals ε(h)·1
        let f = FieldSpec::Rationals;
        let core = tiny(f);
        let mut w = Word::new(&core);
        let h = w.source();
        let (h1, h2) = w.coproduct(h);
        let sh2 = w.antipode(h2);
        let out = w.mul(h1, sh2);
        let m = w.finish_map(&[out]);
        // ε(h)·1: both basis vectors map to the unit
        let mut expect = LinearMap::zeros(f, 2, 2);
        expect.set(0, 0, f.one());
        expect.set(0, 1, f.one());
        assert_eq!(m, expect);
    }

    #[test]
    fn program_replay_matches_builder() {
        let f = FieldSpec::Rationals;
        let core = tiny(f);
        // program: (input₀)·g as a 1-leg element
        let g = Tensor::basis(f, 2, 1);
        let prog = LegProgram {
            steps: vec![
                Step::LoadInput(0),
                Step::LoadConstant(g),
                Step::MultiplyLegs(0, 1),
            ],
            outputs: vec![2],
        };
        let x = Tensor::basis(f, 2, 1); // g · g = 1
        assert_eq!(prog.evaluate(&core, &[x]), Tensor::basis(f, 2, 0));
    }

    #[test]
    fn evaluate_is_linear_in_inputs() {
        let f = FieldSpec::Rationals;
        let core = tiny(f);
        let prog = LegProgram {
            steps: vec![Step::LoadInput(0), Step::CoproductAt(0)],
            outputs: vec![1, 2],
        };
        let a = f.from_i64(3);
        let b = f.from_i64(-5);
        let u = Tensor::basis(f, 2, 0);
        let v = Tensor::basis(f, 2, 1);
        let lin = u.scale(&a).add(&v.scale(&b));
        let lhs = prog.evaluate(&core, &[lin]);
        let rhs = prog
            .evaluate(&core, &[u])
            .scale(&a)
            .add(&prog.evaluate(&core, &[v]).scale(&b));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn source_legs_give_matrices() {
        // (h, k) ↦ h·k recovers the multiplication matrix
        let f = FieldSpec::Rationals;
        let core = tiny(f);
        let mut w = Word::new(&core);
        let h = w.source();
        let k = w.source();
        let out = w.mul(h, k);
        assert_eq!(w.finish_map(&[out]), core.mult);
    }
}
