//! Explicit Hamiltonian cycles in s-stable Kneser graphs.
//!
//! The s-stable Kneser graph `K_{s-stab}(n, k)` has as vertices the k-subsets
//! of `{1..n}` whose elements sit at cyclic distance at least `s` from each
//! other, with edges between disjoint subsets. Rotation `i -> i+1 (mod n)` is
//! an automorphism, so vertices fall into rotation classes, each of which is a
//! cycle on its own. This crate
//!
//! * enumerates vertices and rotation classes ([`enumerate`]),
//! * builds the graph of "friend" classes, where one marked cell moves a
//!   single step, together with explicit adjacency witnesses ([`classgraph`]),
//! * splices the per-class rotation cycles along a spanning tree of that graph
//!   into one Hamiltonian cycle ([`hamilton`]),
//! * and checks the result with an independent verifier and a small
//!   backtracking oracle ([`verify`]).
//!
//! ```
//! use stable_kneser::{assemble_hamiltonian, verify::verify_vertices, Params};
//!
//! let p = Params::new(9, 3, 2).unwrap();
//! let cycle = assemble_hamiltonian(&p).unwrap();
//! assert_eq!(cycle.len(), 30);
//! assert!(verify_vertices(&p, &cycle).ok);
//! ```

pub mod classgraph;
pub mod cli;
pub mod enumerate;
mod error;
pub mod format;
pub mod hamilton;
pub mod model;
pub mod verify;

pub use classgraph::{build_sck, friend_witness, friends, sck_path_to_root, FriendEdge, SckGraph};
pub use enumerate::{count_vertices, enumerate_classes, enumerate_vertices, ClassCatalog, VertexStream};
pub use error::{Error, Result};
pub use hamilton::{assemble_hamiltonian, Construction};
pub use model::{canonical_class, class_order, gap_sequence, is_stable, ClassInfo, GapSequence, Params, Vertex};
