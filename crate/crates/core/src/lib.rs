//! Cubical complexes `M ⊗_G C(A)^{(1,…,1)}` of a permutation group `G ⊆ Sₙ`
//! acting on a right module `M`, where `C(A)^{(1,…,1)}` is the multilinear
//! part of the cosimplicial bar complex of the polynomial coalgebra
//! `k[x₁,…,xₙ]`.
//!
//! Everything is computed with exact rational arithmetic. The crate is
//! `no_std` and only needs `alloc`; IO, file formats and the command line
//! live in the `cubix` companion crate.
//!
//! Layout:
//!
//! * [`perm`]: permutations, enumerated subgroups, Young subgroups.
//! * [`linalg`]: sparse rational matrices, rank, kernels, echelon bases.
//! * [`modules`]: right `S_N`-modules given by generator matrices.
//! * [`lie`]: free Lie algebra combinatorics used by the Lie modules.
//! * [`cubical`]: words, cofaces, the full complex and `Cub(G, M)`.
//! * [`harrison`]: the Harrison subcomplex cut out by the first Eulerian idempotent.
//! * [`realizations`]: direct free-algebra constructions used as oracles.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod cubical;
pub mod error;
pub mod harrison;
pub mod lie;
pub mod linalg;
pub mod modules;
pub mod perm;
pub mod realizations;

pub use error::{Error, Result};
pub use linalg::{Rational, RationalMatrix, SparseVec};
pub use perm::{Content, GroupSpec, Permutation};
