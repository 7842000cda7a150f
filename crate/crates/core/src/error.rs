use thiserror::Error;

/// Errors raised by semigroup, ideal and classification operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("generators must be positive, got {0}")]
    NonPositiveGenerator(i64),
    #[error("generators have gcd {0}, expected 1")]
    GcdNotOne(i64),
    #[error("multiplicity is 1, the semigroup has no gaps")]
    MultiplicityOne,
    #[error("ideals are defined over different semigroups")]
    SemigroupMismatch,
    #[error("submodule is not contained in the ambient ideal")]
    NotContained,
    #[error("ideal must have exactly two minimal generators, found {0}")]
    NotTwoGenerated(usize),
    #[error("ideal does not satisfy the 2x2 canonical factorization condition")]
    ConditionNotSatisfied,
    #[error("precondition not met: {0}")]
    PreconditionNotMet(&'static str),
    #[error("enumeration exceeded the budget of {0} ideals")]
    EnumerationBudgetExceeded(u64),
    #[error("serialized value is inconsistent: {0}")]
    Inconsistent(String),
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;

/// Parses a comma separated integer list such as `"8,11,14,15"`.
pub fn parse_int_list(input: &str) -> Result<Vec<i64>> {
    let trimmed = input.trim().trim_start_matches('(').trim_end_matches(')');
    if trimmed.trim().is_empty() {
        return Err(Error::Parse {
            input: input.to_string(),
            reason: "empty list".into(),
        });
    }
    trimmed
        .split(',')
        .map(|tok| {
            tok.trim().parse::<i64>().map_err(|e| Error::Parse {
                input: input.to_string(),
                reason: e.to_string(),
            })
        })
        .collect()
}
