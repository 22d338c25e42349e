use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got} ({context})")]
    DimMismatch {
        expected: usize,
        got: usize,
        context: &'static str,
    },
    #[error("ring mismatch")]
    RingMismatch,
    #[error("matrix is not idempotent")]
    NotIdempotent,
    #[error("splitting unsupported over this ring (need a field)")]
    SplitUnsupported,
    #[error("enumeration cap exceeded: {required} maps required, cap is {cap}")]
    CapExceeded { required: u128, cap: u128 },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("unknown functor symbol `{0}`")]
    UnknownSymbol(String),
    #[error("ill-typed vertical composite: target of first is {first_target}, source of second is {second_source}")]
    IllTypedVert {
        first_target: String,
        second_source: String,
    },
    #[error("not a parallel pair: ({lhs_src} -> {lhs_tgt}) vs ({rhs_src} -> {rhs_tgt})")]
    NotParallel {
        lhs_src: String,
        lhs_tgt: String,
        rhs_src: String,
        rhs_tgt: String,
    },
    #[error("product is not associative")]
    NotAssociative,
    #[error("coproduct is not coassociative")]
    NotCoassociative,
    #[error("action law fails for the given module data")]
    NotAModule,
    #[error("coaction law fails for the given comodule data")]
    NotAComodule,
    #[error("unit not regular")]
    UnitNotRegular,
    #[error("counit not regular")]
    CounitNotRegular,
    #[error("\u{3bc} not compatible")]
    MultNotCompatible,
    #[error("\u{3b4} not compatible")]
    ComultNotCompatible,
    #[error("input is not an r-unital monad")]
    NotRUnital,
    #[error("input is not an r-counital comonad")]
    NotRCounital,
    #[error("input is not a weak monad")]
    NotWeakMonad,
    #[error("input is not a weak comonad")]
    NotWeakComonad,
    #[error("base algebra is not unital")]
    BaseNotUnital,
    #[error("required lifting diagram `{0}` does not commute")]
    LiftingDiagramFails(&'static str),
    #[error("invalid structure: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
