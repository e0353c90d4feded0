//! Streams over `ℕ` with class keys given by a function.

use std::hash::Hash;

use super::{DeclaredProfile, StreamHyperspace};
use crate::error::{Error, Result};
use crate::setsystem::full_mask;

/// `ℕ` in increasing order, with `E_i`-class of `x` named by `key(i, x)`.
#[derive(Clone)]
pub struct FnStream<K, F> {
    n: usize,
    key: F,
    profile: DeclaredProfile,
    _key: std::marker::PhantomData<fn() -> K>,
}

impl<K, F> FnStream<K, F>
where
    K: Clone + Eq + Hash,
    F: Fn(usize, u64) -> K,
{
    pub fn new(n: usize, profile: DeclaredProfile, key: F) -> Result<Self> {
        if n == 0 || profile.n() != n {
            return Err(Error::invalid(format!(
                "profile over {} indices for a stream with {n} relations",
                profile.n()
            )));
        }
        Ok(FnStream {
            n,
            key,
            profile,
            _key: std::marker::PhantomData,
        })
    }
}

/// Stream returned by [`collapsed`].
pub type CollapsedStream = FnStream<(), fn(usize, u64)>;

/// Every relation has a single class, shared by all of `ℕ`. The profile
/// nevertheless declares the full index set finite with `declared_bound`, a
/// claim the audit refutes once the prefix outgrows it.
pub fn collapsed(n: usize, declared_bound: usize) -> Result<CollapsedStream> {
    let profile = DeclaredProfile::new(n, [(full_mask(n), Some(declared_bound))])?;
    FnStream::new(n, profile, (|_, _| ()) as fn(usize, u64))
}

impl<K, F> StreamHyperspace for FnStream<K, F>
where
    K: Clone + Eq + Hash,
    F: Fn(usize, u64) -> K,
{
    type Element = u64;
    type Key = K;

    fn n(&self) -> usize {
        self.n
    }

    fn elements(&self) -> Box<dyn Iterator<Item = u64> + '_> {
        Box::new(0..)
    }

    fn class_key(&self, i: usize, x: &u64) -> K {
        (self.key)(i, *x)
    }

    fn declared_profile(&self) -> &DeclaredProfile {
        &self.profile
    }
}
