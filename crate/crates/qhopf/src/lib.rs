//! Exact-arithmetic workbench for finite-dimensional quasi-Hopf algebras:
//! axiom verification, Drinfeld twists, quasitriangular structure,
//! Yetter-Drinfeld modules in four flavors with the functors connecting them,
//! rigidity data, and braided Hopf algebras.

pub mod braided_hopf;
pub mod builtins;
pub mod field;
pub mod hmod;
pub mod linalg;
pub mod program;
pub mod quasi_hopf;
pub mod quasitriangular;
pub mod report;
pub mod specfile;
pub mod tensor;
pub mod yd;
pub mod yd_rigid;
