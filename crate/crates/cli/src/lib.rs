//! Library side of the `fullsub` command: experiment sweeps, CSV rows and
//! exit-code mapping. The binary in `main.rs` only parses arguments.

pub mod sweep;

use fullsub::Error;

/// Process exit code for a failed command: 2 for refusals (preconditions,
/// exact caps), 3 for verification failures, 1 for everything else.
pub fn exit_code(err: &anyhow::Error) -> i32 {
    match err.chain().find_map(|e| e.downcast_ref::<Error>()) {
        Some(Error::Precondition(_) | Error::CapExceeded { .. }) => 2,
        Some(Error::Verification(_)) => 3,
        _ => 1,
    }
}
