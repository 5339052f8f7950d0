//! Binary linear codes of prescribed level built from Boolean maps of bounded
//! combinatorial degree, and the code loops of doubly even codes.
//!
//! - [`gf2`]: vectors, codes, levels and weight identities over F_2.
//! - [`boolean_map`]: truth tables, derived forms, algebraic normal form.
//! - [`synthesis`]: the level-`r` code construction and its verifiers.
//! - [`loops`]: factor sets, code loops, Moufang and cubic-space checks.
//! - [`formats`] and [`cli`]: text formats and the `codeloop` binary.

pub mod boolean_map;
pub mod cli;
pub mod error;
pub mod formats;
pub mod gf2;
pub mod loops;
pub mod synthesis;

pub use boolean_map::{anf, combinatorial_degree, AlgebraicNormalForm, BooleanMap};
pub use error::{Error, Result};
pub use gf2::{code_level, enumerate_codewords, BitVector, CodeLevel, LinearCode};
pub use loops::{
    brackets, build_loop, check_cubic_axioms, check_moufang, extract_cubic_data, inverse_map,
    solve_factor_set, weight_forms, CayleyTable, CodeLoop, CubicSpaceData, FactorSet,
};
pub use synthesis::{
    check_condition, ckey_gadget, step_order, synthesize, synthesize_audited,
    verify_code_against_map, CKeyGadget, StepLabel, SynthesisResult,
};
