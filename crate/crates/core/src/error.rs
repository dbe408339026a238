use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet is empty")]
    EmptyAlphabet,
    #[error("duplicate character {0:?} in alphabet")]
    DuplicateSymbol(char),
    #[error("character {0:?} is reserved for the gap and cannot be an alphabet symbol")]
    ReservedSymbol(char),
    #[error("alphabet has {0} symbols; at most {max} are supported", max = crate::model::MAX_ALPHABET)]
    AlphabetTooLarge(usize),
    #[error("alphabet size must be between 1 and 26, got {0}")]
    SigmaOutOfRange(usize),
    #[error("character {ch:?} is not in alphabet {alphabet:?}")]
    ForeignSymbol { ch: char, alphabet: String },
    #[error("words are over different alphabets ({0:?} vs {1:?})")]
    MixedAlphabets(String, String),
    #[error("parameters out of range: {0}")]
    Range(String),
    #[error("oracle budget exceeded: {needed} > {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
}

pub type Result<T> = std::result::Result<T, Error>;
