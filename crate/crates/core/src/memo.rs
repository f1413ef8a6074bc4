//! Grow-only memo tables shared across threads.

use std::sync::{Arc, Mutex};

/// Lazily extended sequence `0, 1, 2, ...`; entry `k` is built from entries `< k`.
///
/// The lock is held while extending, so concurrent first access fills each
/// entry exactly once. A builder must not touch the ladder it is filling.
pub(crate) struct Ladder<T> {
    cells: Mutex<Vec<Arc<T>>>,
}

impl<T> Ladder<T> {
    pub(crate) const fn new() -> Self {
        Self {
            cells: Mutex::new(Vec::new()),
        }
    }

    pub(crate) fn get(&self, n: usize, build: impl Fn(usize, &[Arc<T>]) -> T) -> Arc<T> {
        let mut cells = self.cells.lock().unwrap_or_else(|e| e.into_inner());
        while cells.len() <= n {
            let k = cells.len();
            let v = build(k, &cells);
            cells.push(Arc::new(v));
        }
        Arc::clone(&cells[n])
    }

    pub(crate) fn try_get<E>(
        &self,
        n: usize,
        build: impl Fn(usize, &[Arc<T>]) -> Result<T, E>,
    ) -> Result<Arc<T>, E> {
        let mut cells = self.cells.lock().unwrap_or_else(|e| e.into_inner());
        while cells.len() <= n {
            let k = cells.len();
            let v = build(k, &cells)?;
            cells.push(Arc::new(v));
        }
        Ok(Arc::clone(&cells[n]))
    }
}
