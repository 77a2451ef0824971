//! p-spectral machinery for 3-uniform hypergraphs.
//!
//! The crate covers four areas:
//!
//! * [`hypergraph`], [`cancellative`], [`switching`], [`canonical`], [`io`]:
//!   representation of 3-graphs, the `T_3(n)` construction, links and
//!   shadows, cancellativity witnesses, the `T_v^u` switching operation,
//!   isomorphism-class keys and the `.hg3` text format.
//! * [`spectral`]: the polynomial form `P_G`, a certified solver for the
//!   p-spectral radius, the closed form for complete 3-partite 3-graphs,
//!   the `p = 1` Lagrangian, the Motzkin–Straus quadratic program and the
//!   `f_G(p)` profile.
//! * [`enumerate`]: isomorph-free generation of cancellative 3-graphs on
//!   few vertices and the verification campaigns built on it.
//! * [`par`]: the data-parallel execution switch (rayon behind the
//!   `parallel` feature, a sequential path otherwise).

pub mod cancellative;
pub mod canonical;
pub mod enumerate;
pub mod error;
pub mod hypergraph;
pub mod io;
pub mod par;
pub mod spectral;
pub mod switching;

pub use cancellative::{check_cancellative, links_edge_disjoint, CancellativityReport};
pub use canonical::{canonical_form, canonical_key, CanonicalKey};
pub use error::{Error, Result};
pub use hypergraph::{t3, turan3, Edge, LinkGraph, ShadowGraph, SimpleGraph, UniformHypergraph};
pub use par::Exec;
pub use switching::switch;
