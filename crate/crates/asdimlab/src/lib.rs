//! # asdimlab
//!
//! Certified upper and lower bounds on the asymptotic dimension of Artin,
//! Coxeter, and graph-labeled groups, computed from their finite labeled
//! defining graphs.
//!
//! The library decomposes a defining graph along free products and
//! clique-separator amalgams until base cases close the recursion, tracks a
//! `(lower, upper)` bound pair through the standard graph-of-groups
//! arithmetic, and emits a proof certificate — a decomposition tree naming
//! the rule behind every claim — that [`certificate::check`] re-validates
//! independently of the engine. Where no proven rule applies, the upper
//! bound is reported as `unknown` rather than guessed; the optional
//! conditional mode additionally bounds complete Artin graphs by their
//! clique number under the clique-number conjecture, flagging every result
//! that relies on it.
//!
//! ## Quick start
//!
//! ```
//! use asdimlab::{compute_bound, parse_input, Mode};
//!
//! let g = parse_input(
//!     "kind artin\n\
//!      vertex a\nvertex b\nvertex c\nvertex d\nvertex e\n\
//!      edge a b 3\nedge b c 3\nedge c d 3\nedge d e 3\nedge a e 3\n",
//! )?;
//! let result = compute_bound(&g, Mode::Unconditional)?;
//! assert_eq!(result.bound.lower, 2);
//! assert!(result.bound.exact);
//! asdimlab::check(&result.certificate, &g).unwrap();
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```
//!
//! ## Runnable examples
//!
//! Each major capability has a runnable example:
//!
//! ```bash
//! cargo run --example bound_basics            # compute and print bounds
//! cargo run --example certificate_roundtrip   # emit, check, and tamper with a proof
//! cargo run --example graph_group_relators    # relator words and graph-group bounds
//! cargo run --example conditional_mode        # conjecture-assisted vs proven bounds
//! cargo run --example small_graph_scan        # sweep all graphs of a given size
//! cargo run --example chromatic_comparison    # clique bound vs chromatic bound
//! ```
//!
//! The thin `asdimlab` binary exposes the same functionality on files; see
//! the README for the input grammar and the certificate format.

pub mod bound;
pub mod certificate;
pub mod cli;
pub mod engine;
pub mod graph;
pub mod input;
pub mod oracle;
pub mod word;

pub use bound::{Bound, ExtBound, Mode};
pub use certificate::{check, fingerprint, CertNode, CertParseError, Certificate, Rejection};
pub use engine::{
    combine_amalgam, combine_free_product, compute_bound, leaf_bound, lower_bound, rules_applied,
    select_clique_split, select_cycle_split, BoundResult, EngineError, RuleId, Split, SplitChoice,
};
pub use graph::{
    betti_number, chromatic_number_upper, clique_number, connected_components, find_cycle_vertex,
    full_subgraph, graph_stats, is_independent, maximal_cliques_of_max_size, neighbors,
    DefiningGraph, EdgeLabel, GraphError, GraphStats, GroupKind, VertexId, VertexSet,
};
pub use input::{canonical_text, parse_input, InputDocument, ParseError};
pub use word::{
    cyclic_reduce, free_reduce, is_forbidden_form, validate_edge_word, Letter, Word, WordError,
};
