//! The combinatorial orders on multipartitions.

pub mod adjacency;
pub mod content;
pub mod dominance;
pub mod engine;
pub mod matrix;

pub use adjacency::{are_adjacent, are_adjacent_with, one_box_moves, AdjacencyWitness};
pub use content::{
    asymptotic_representative, is_asymptotic, is_generic, shifted_contents, CharVector,
    ContentVector,
};
pub use dominance::{asymptotic_geq, geq};
pub use engine::{
    build_order_matrix, find_drop_witness, lowest_box_drop, sandwich_classify, triangle,
    OrderEngine, OrderKind, OrderMatrix, Sandwich,
};
pub use matrix::BitMatrix;
