use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u64),
    #[error("{0} is not a prime field size")]
    NotPrime(u64),
    #[error("column index {index} out of range for a matrix with {cols} columns")]
    ColumnOutOfRange { index: usize, cols: usize },
    #[error("column index {0} appears more than once")]
    DuplicateColumn(usize),
    #[error("matrix shape {rows}x{cols} does not match {len} entries")]
    Shape {
        rows: usize,
        cols: usize,
        len: usize,
    },
    #[error("invalid sweep configuration: {0}")]
    Config(String),
}
