//! Morpho-compositional translation of single-word terms across languages.
//!
//! A source term is decomposed into morphemes ([`decomposer`]), each group of
//! morphemes is translated through lookup tables ([`translator`]), translated
//! parts are permuted and concatenated into candidate lexical sequences
//! ([`recomposer`]) and finally the sequences are validated against a
//! lemmatized, POS-tagged target corpus ([`selector`]). Because recomposition
//! may yield several lexical items for one source word, the engine can produce
//! "fertile" translations such as `cytotoxic → toxique pour le cellule`.
//!
//! ```
//! use morphocomp::decomposer::decompose;
//! use morphocomp::resources::{ComponentInventory, ComponentKind, PipelineConfig};
//!
//! let mut inv = ComponentInventory::new("en");
//! inv.insert("cyto", ComponentKind::Confix).unwrap();
//! inv.insert("toxic", ComponentKind::Free).unwrap();
//! inv.insert("cytotoxic", ComponentKind::Free).unwrap();
//!
//! let rendered: Vec<String> = decompose("cytotoxic", &inv, &PipelineConfig::default())
//!     .iter()
//!     .map(|d| d.to_string())
//!     .collect();
//! assert_eq!(rendered, ["cyto+toxic", "cytotoxic"]);
//! ```
//!
//! The surrounding tooling builds resources ([`morphology`]) and scores
//! extraction output ([`evaluation`]).

pub mod cli;
pub mod combinatorics;
pub mod decomposer;
pub mod error;
pub mod evaluation;
pub mod morphology;
pub mod pipeline;
pub mod recomposer;
pub mod resources;
pub mod selector;
pub mod translator;

pub use error::{Error, Result};
