//! Tiny dispatch layer between rayon and plain iteration.
//!
//! Hot loops call these helpers so the rest of the crate stays agnostic of
//! the `parallel` feature. Results are always in index order, so parallel
//! and sequential runs produce identical output.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Map `f` over `0..len`, collecting results in index order.
#[cfg(feature = "parallel")]
pub(crate) fn indexed_map<T: Send>(len: usize, f: impl Fn(usize) -> T + Sync + Send) -> Vec<T> {
    (0..len).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn indexed_map<T>(len: usize, f: impl Fn(usize) -> T) -> Vec<T> {
    (0..len).map(f).collect()
}

/// Sequential reference for [`indexed_map`]; always single-threaded.
pub(crate) fn indexed_map_seq<T>(len: usize, f: impl Fn(usize) -> T) -> Vec<T> {
    (0..len).map(f).collect()
}

/// Map `f` over a slice, collecting in order.
#[cfg(feature = "parallel")]
pub(crate) fn slice_map<T: Sync, U: Send>(items: &[T], f: impl Fn(&T) -> U + Sync + Send) -> Vec<U> {
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn slice_map<T, U>(items: &[T], f: impl Fn(&T) -> U) -> Vec<U> {
    items.iter().map(f).collect()
}

/// Sequential reference for [`slice_map`].
pub(crate) fn slice_map_seq<T, U>(items: &[T], f: impl Fn(&T) -> U) -> Vec<U> {
    items.iter().map(f).collect()
}

/// Filter-map `f` over a slice, keeping slice order among survivors.
#[cfg(feature = "parallel")]
pub(crate) fn slice_filter_map<T: Sync, U: Send>(
    items: &[T],
    f: impl Fn(&T) -> Option<U> + Sync + Send,
) -> Vec<U> {
    items.par_iter().filter_map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn slice_filter_map<T, U>(items: &[T], f: impl Fn(&T) -> Option<U>) -> Vec<U> {
    items.iter().filter_map(f).collect()
}

/// Sequential reference for [`slice_filter_map`].
pub(crate) fn slice_filter_map_seq<T, U>(items: &[T], f: impl Fn(&T) -> Option<U>) -> Vec<U> {
    items.iter().filter_map(f).collect()
}

/// True iff `f` holds for every index in `0..len`. Short-circuits.
#[cfg(feature = "parallel")]
pub(crate) fn indexed_all(len: usize, f: impl Fn(usize) -> bool + Sync + Send) -> bool {
    (0..len).into_par_iter().all(f)
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn indexed_all(len: usize, f: impl Fn(usize) -> bool) -> bool {
    (0..len).all(f)
}

/// First `Some` produced over `0..len`. Under rayon this is `find_map_first`,
/// so the answer matches the sequential one.
#[cfg(feature = "parallel")]
pub(crate) fn indexed_find_map<T: Send>(
    len: usize,
    f: impl Fn(usize) -> Option<T> + Sync + Send,
) -> Option<T> {
    (0..len).into_par_iter().find_map_first(f)
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn indexed_find_map<T>(len: usize, f: impl Fn(usize) -> Option<T>) -> Option<T> {
    (0..len).find_map(f)
}
