use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("group order {order} exceeds the configured cap {cap}")]
    OrderCapExceeded { order: usize, cap: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),
    #[error("invalid homomorphism: {0}")]
    InvalidHom(String),
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("homomorphisms do not share a codomain")]
    CodomainMismatch,
    #[error("subgroup or element belongs to a different group")]
    ParentMismatch,
    #[error("group {0} is not abelian")]
    NotAbelian(String),
    #[error("kernel is not abelian")]
    KernelNotAbelian,
    #[error("homomorphism is not surjective")]
    NotSurjective,
    #[error("search budget of {budget} nodes exhausted")]
    SearchBudgetExceeded { budget: u64 },
    #[error("syntax error at byte {offset}: expected {}", expected.join(" or "))]
    Syntax { offset: usize, expected: Vec<String> },
    #[error("elaboration error: {0}")]
    Elaboration(String),
}

impl Error {
    /// Budget exhaustion is a computational outcome, not a malformed request.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::SearchBudgetExceeded { .. })
    }
}
