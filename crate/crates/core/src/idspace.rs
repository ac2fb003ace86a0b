//! Circular identifier namespace with Chord-style distance and successor
//! semantics.
//!
//! Identifiers live in `[0, 2^m)` and all comparisons are taken mod `2^m`.
//! The namespace width defaults to 64 bits but can be shrunk (down to 4
//! bits) so that tests can enumerate the whole ring.

use rand::Rng;
use std::fmt;

/// Identifier on the ring. Always `< 2^m` for the [`IdSpace`] that minted it.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct RingId(pub u64);

impl fmt::Debug for RingId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for RingId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Namespace parameters: the ring `[0, 2^bits)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IdSpace {
    bits: u32,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum IdSpaceError {
    #[error("namespace width must be in 4..=64, got {0}")]
    BadWidth(u32),
    #[error("no members")]
    NoMembers,
}

impl IdSpace {
    pub fn new(bits: u32) -> Result<Self, IdSpaceError> {
        if !(4..=64).contains(&bits) {
            return Err(IdSpaceError::BadWidth(bits));
        }
        Ok(IdSpace { bits })
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// All-ones mask for the namespace, i.e. `2^m - 1`.
    pub fn mask(&self) -> u64 {
        u64::MAX >> (64 - self.bits)
    }

    pub fn contains(&self, id: RingId) -> bool {
        id.0 <= self.mask()
    }

    /// Wrap an arbitrary integer onto the ring.
    pub fn wrap(&self, value: u64) -> RingId {
        RingId(value & self.mask())
    }

    /// Clockwise distance from `a` to `b`: `(b - a) mod 2^m`.
    ///
    /// Zero iff `a == b`. Minimizing `clockwise_distance(candidate, dest)`
    /// over a candidate set picks the candidate closest to `dest` without
    /// overshooting it.
    pub fn clockwise_distance(&self, a: RingId, b: RingId) -> u64 {
        debug_assert!(self.contains(a) && self.contains(b));
        b.0.wrapping_sub(a.0) & self.mask()
    }

    /// The member minimizing `clockwise_distance(id, member)`; `id` itself
    /// when it is a member. Ground-truth oracle for lookup correctness.
    pub fn global_successor<I>(&self, id: RingId, members: I) -> Result<RingId, IdSpaceError>
    where
        I: IntoIterator<Item = RingId>,
    {
        members
            .into_iter()
            .min_by_key(|&m| (self.clockwise_distance(id, m), m))
            .ok_or(IdSpaceError::NoMembers)
    }

    /// Uniform identifier; deterministic given the generator state.
    pub fn random_id<R: Rng>(&self, rng: &mut R) -> RingId {
        RingId(rng.gen::<u64>() & self.mask())
    }
}

impl Default for IdSpace {
    fn default() -> Self {
        IdSpace { bits: 64 }
    }
}
