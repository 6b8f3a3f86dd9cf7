//! Execution mode for the data-parallel loops.
//!
//! With the `parallel` feature the `Parallel` mode runs on the rayon global
//! pool (or whatever pool the caller installed). Without the feature both
//! modes run sequentially, so callers never need their own `cfg` guards.

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mode {
    Sequential,
    #[default]
    Parallel,
}

impl Mode {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Mode::Parallel
    }
}

/// Maps `f` over `items`, preserving input order in the output.
pub fn map<T, R, F>(mode: Mode, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode.is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    let _ = mode;
    items.iter().map(f).collect()
}

/// Fills `out` in chunks of `chunk` entries; `f(row, slice)` writes one chunk.
pub fn fill_rows<T, F>(mode: Mode, out: &mut [T], chunk: usize, f: F)
where
    T: Send,
    F: Fn(usize, &mut [T]) + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode.is_parallel() {
        use rayon::prelude::*;
        out.par_chunks_mut(chunk)
            .enumerate()
            .for_each(|(i, row)| f(i, row));
        return;
    }
    let _ = mode;
    out.chunks_mut(chunk)
        .enumerate()
        .for_each(|(i, row)| f(i, row));
}
