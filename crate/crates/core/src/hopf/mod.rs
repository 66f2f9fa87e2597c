//! Coproduct, antipode and counit, the super tensor sign rule, and exact
//! verification of the Hopf superalgebra structure.

pub mod algebra;
pub mod braid;
pub mod tensor;
pub mod verify;

pub use algebra::{
    antipode, antipode_word, coproduct, coproduct_word, counit, counit_word, relations, AlgebraElement,
    Relation, TensorElement, Word,
};
pub use braid::braid_phase;
pub use tensor::{TensorBasis, TensorContext, TensorVector};
pub use verify::{verify_coproduct, verify_hopf_axioms, verify_relations, Check, Counterexample, Status, VerificationReport};
