//! Exact-arithmetic library for local invariants of elliptic curves over
//! small number rings: Weierstrass invariants, Tate's algorithm at primes
//! above two, effective models of the sign involution, the admissibility
//! certificate for the Kummer construction, rational-double-point
//! bookkeeping, and the supporting exact linear algebra.

pub mod dualgraph;
pub mod effmodel;
pub mod ff;
pub mod weierstrass;
pub mod kummer;
pub mod localtate;
pub mod monodromy;
pub mod numring;
pub mod selfcheck;

pub use numring::{LocalElem, LocalPrime, NumberRing, RingElement, Splitting, Valn};
