use alloc::string::String;
use core::fmt;

/// Errors from the exact core. `no_std`-friendly; the lab crate wraps these.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoreError {
    /// The modulus is not a prime number.
    NotPrime(u64),
    /// Two operands live over different moduli.
    ModulusMismatch { left: u64, right: u64 },
    /// A precondition on an argument failed.
    InvalidArgument(String),
    /// An operation is undefined for this input (e.g. diameter of the
    /// trivial character).
    UndefinedInput(&'static str),
    /// Text input could not be parsed; `pos` is a byte offset.
    Parse { pos: usize, msg: String },
    /// Integer overflow would occur.
    Overflow(&'static str),
}

impl fmt::Display for CoreError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoreError::NotPrime(p) => write!(f, "{p} is not prime"),
            CoreError::ModulusMismatch { left, right } => {
                write!(f, "modulus mismatch: {left} vs {right}")
            }
            CoreError::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            CoreError::UndefinedInput(msg) => write!(f, "undefined for this input: {msg}"),
            CoreError::Parse { pos, msg } => write!(f, "parse error at {pos}: {msg}"),
            CoreError::Overflow(what) => write!(f, "integer overflow in {what}"),
        }
    }
}

pub type Result<T> = core::result::Result<T, CoreError>;
