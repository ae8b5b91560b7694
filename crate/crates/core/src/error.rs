use thiserror::Error;

use crate::bitcubes::CubeFamily;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid length {n} for {family} (supported: {supported})")]
    InvalidLength {
        family: CubeFamily,
        n: usize,
        supported: String,
    },

    #[error("vertex {vertex} is not a member of the {family} cube")]
    InvalidVertex { family: CubeFamily, vertex: String },

    #[error("cannot parse vertex {0:?}: expected at most 32 characters from {{0,1}}")]
    VertexParse(String),

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
