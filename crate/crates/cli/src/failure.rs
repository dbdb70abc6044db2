use std::process::ExitCode;

use wronski::Error;

/// Result of a command that ran to completion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Mismatch,
    Degenerate,
}

impl Outcome {
    pub fn code(self) -> ExitCode {
        ExitCode::from(match self {
            Outcome::Pass => 0,
            Outcome::Mismatch => 1,
            Outcome::Degenerate => 2,
        })
    }
}

pub const EXIT_MOMENTS: u8 = 3;
pub const EXIT_USAGE: u8 = 64;
pub const EXIT_SOFTWARE: u8 = 70;
pub const EXIT_IO: u8 = 74;

/// A command that could not run, with its exit status.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    pub fn io(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_IO,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::MomentsNotPositiveDefinite { .. } | Error::InsufficientMoments { .. } => {
                EXIT_MOMENTS
            }
            Error::ParameterOutOfRange { .. }
            | Error::NotStrictlyIncreasing(_)
            | Error::NotNondecreasing(_)
            | Error::EmptyPartition
            | Error::DuplicateIndex(_)
            | Error::EmptyInterval
            | Error::Parse(_) => EXIT_USAGE,
            Error::Io(_) => EXIT_IO,
            _ => EXIT_SOFTWARE,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}
