//! Cooperative cancellation for long computations.

use std::cell::RefCell;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use super::error::IdealError;

#[derive(Debug, Clone, Default)]
pub struct CancelToken(Arc<AtomicBool>);

thread_local! {
    static CURRENT: RefCell<Option<CancelToken>> = const { RefCell::new(None) };
}

impl CancelToken {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cancel(&self) {
        self.0.store(true, Ordering::Relaxed);
    }

    pub fn is_cancelled(&self) -> bool {
        self.0.load(Ordering::Relaxed)
    }

    /// Run `f` with this token visible to every checkpoint on the current
    /// thread.
    pub fn scope<R>(&self, f: impl FnOnce() -> R) -> R {
        let prev = CURRENT.with(|c| c.replace(Some(self.clone())));
        struct Restore(Option<CancelToken>);
        impl Drop for Restore {
            fn drop(&mut self) {
                let prev = self.0.take();
                CURRENT.with(|c| *c.borrow_mut() = prev);
            }
        }
        let _restore = Restore(prev);
        f()
    }
}

/// Checkpoint: fails once the token installed by [`CancelToken::scope`]
/// has been cancelled.
pub fn checkpoint() -> Result<(), IdealError> {
    CURRENT.with(|c| match &*c.borrow() {
        Some(t) if t.is_cancelled() => Err(IdealError::Cancelled),
        _ => Ok(()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn checkpoint_sees_scoped_token() {
        assert!(checkpoint().is_ok());
        let t = CancelToken::new();
        t.cancel();
        assert_eq!(t.scope(checkpoint), Err(IdealError::Cancelled));
        assert!(checkpoint().is_ok());
    }
}
