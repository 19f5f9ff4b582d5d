//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature, `Exec::Parallel` fans out over rayon;
//! without it every call runs on the current thread.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

impl Exec {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }
}

macro_rules! if_rayon {
    ($exec:expr, $items:expr, $par:ident, $seq:ident, $f:expr) => {{
        #[cfg(feature = "parallel")]
        {
            if $exec.is_parallel() {
                $items.$par().map($f).collect()
            } else {
                $items.$seq().map($f).collect()
            }
        }
        #[cfg(not(feature = "parallel"))]
        {
            let _ = $exec;
            $items.$seq().map($f).collect()
        }
    }};
}

/// Order-preserving map over a slice.
pub fn map<T, R, F>(exec: Exec, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    if_rayon!(exec, items, par_iter, iter, f)
}

/// Order-preserving map over an owned vector.
pub fn map_owned<T, R, F>(exec: Exec, items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    if_rayon!(exec, items, into_par_iter, into_iter, f)
}

/// Map then flatten, keeping input order.
pub fn flat_map<T, R, F>(exec: Exec, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Vec<R> + Sync + Send,
{
    map(exec, items, f).into_iter().flatten().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_modes_agree() {
        let v: Vec<u64> = (0..1000).collect();
        let a = map(Exec::Sequential, &v, |x| x * x);
        let b = map(Exec::Parallel, &v, |x| x * x);
        assert_eq!(a, b);
        let c = map_owned(Exec::Parallel, v.clone(), |x| x + 1);
        assert_eq!(c[999], 1000);
        let d = flat_map(Exec::Parallel, &v[..3], |x| vec![*x; 2]);
        assert_eq!(d, vec![0, 0, 1, 1, 2, 2]);
    }
}
