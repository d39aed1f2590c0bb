//! Cayley incidence graphs of finite groups.
//!
//! A *cell collection* on a finite group `G` is a family of subsets
//! ("cells"), each containing the identity, that is closed under the
//! translation axiom: for every cell `C` and every `s ∈ C`, the translate
//! `s⁻¹C` is again a cell. When the cells additionally share a common size
//! `k` and pairwise intersect exactly in the identity, the family `π`
//! defines a bipartite, biregular *Cayley incidence graph*: one side is the
//! group itself, the other is the set of coset translates `{gC : g ∈ G,
//! C ∈ π}`, with `g` adjacent to every translate containing it.
//!
//! This crate builds those graphs and everything needed to study them at
//! desk scale (groups of order ≤ 64, graphs of ≤ 128 vertices):
//!
//! - [`group`]: dense multiplication-table groups with a named catalog of
//!   all groups of order 7–16 plus the usual suspects (dihedral, dicyclic,
//!   symmetric, semidirect products).
//! - [`cells`]: cell-family validation with staged verdicts and violation
//!   witnesses, translate classes, stabilizers, duals, products.
//! - [`graph`], [`spectrum`], [`canon`]: incidence/Cayley graph
//!   construction, girth, eigenvalues (with the `NNᵀ = A + ℓI` reduction to
//!   the underlying Cayley graph), canonical certificates and automorphism
//!   groups via individualization–refinement.
//! - [`cayleyness`]: Sabidussi-style regular-subgroup search plus
//!   constructive Cayley certificates (generalized dihedral / swap).
//! - [`constructions`], [`gf`]: perfect difference sets, affine and
//!   projective point–line incidences via small finite-field tables,
//!   two-cell structure classification, conversions from bipartite Cayley
//!   and bi-Cayley graphs.
//! - [`enumeration`], [`golden`]: exhaustive isomorph-free enumeration of
//!   all non-trivial families over a group, and the reference
//!   classification data for orders 7–16.
//! - [`verification`]: independent brute-force oracles and invariant
//!   suites used by tests and the CLI `verify` command.

#![forbid(unsafe_code)]

pub mod canon;
pub mod cayleyness;
pub mod cells;
pub mod constructions;
pub mod enumeration;
pub mod gf;
pub mod golden;
pub mod graph;
pub mod group;
pub mod perm;
pub mod serialize;
pub mod spectrum;
pub mod verification;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("group order {0} exceeds the supported maximum {max}", max = group::MAX_ORDER)]
    OrderTooLarge(usize),
    #[error("multiplication table is not a valid {0}x{0} Latin square: {1}")]
    BadTable(usize, String),
    #[error("element 0 is not a two-sided identity")]
    BadIdentity,
    #[error("associativity fails at triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("unknown group descriptor `{0}`")]
    UnknownDescriptor(String),
    #[error("element index {0} out of range for group of order {1}")]
    ElementOutOfRange(usize, usize),
    #[error("{0}")]
    BadArgument(String),
    #[error("family is not valid enough for this operation: requires {required}, found {found} ({witness})")]
    FamilyNotValid {
        required: cells::Validity,
        found: cells::Validity,
        witness: String,
    },
    #[error("malformed family JSON: {0}")]
    FamilyJson(String),
    #[error("graph has {0} vertices; canonical labeling supports at most 128")]
    GraphTooLarge(usize),
    #[error("time budget exhausted after {0} of {1} stages")]
    BudgetExhausted(usize, usize),
    #[error("no stored primitive polynomial for GF({0}^{1})")]
    NoPrimitivePolynomial(usize, u32),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
