//! X-Vine: a DHT that routes exclusively over social-network links.
//!
//! Nodes pick identifiers on a circular namespace and maintain *trails* —
//! recorded paths through consecutive friendship edges — to their overlay
//! successors and predecessors. Packets are forwarded hop-by-hop along
//! trails, shortcutting whenever an intermediate node knows a trail endpoint
//! that makes more namespace progress. Per-link and per-node caps on trail
//! state bound the routing tables of honest nodes and, more importantly, cap
//! the number of trails an attacker can push across its limited set of
//! attack edges.
//!
//! The crate is organized around a pure, transport-agnostic protocol state
//! machine ([`protocol::Node`]) that is driven either by the deterministic
//! discrete-event simulator ([`simengine`]) or by a small UDP runner
//! ([`wire`]). The [`adversary`] module stages Sybil attacks against a
//! simulated overlay, and [`analytic`] implements the recursive model of
//! expected lookup path length used to validate the simulator.

pub mod adversary;
pub mod analytic;
pub mod idspace;
pub mod protocol;
pub mod simengine;
pub mod socialgraph;
pub mod stats;
pub mod wire;

pub use idspace::{IdSpace, RingId};
pub use protocol::{Node, ProtocolConfig};
pub use simengine::{Overlay, SimConfig};
pub use socialgraph::SocialGraph;

/// Physical address of a participant, as seen by the protocol state machine.
///
/// The simulator instantiates the protocol with graph vertex indices, the
/// socket runner with `SocketAddr`. The state machine never interprets
/// addresses beyond equality and ordering.
pub trait Addr: Copy + Eq + Ord + std::fmt::Debug {}
impl<T: Copy + Eq + Ord + std::fmt::Debug> Addr for T {}
