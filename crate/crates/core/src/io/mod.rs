//! File formats: edge lists, PACE tree decompositions, CSV/JSON tables.

mod edge_list;
mod format;
mod pace;
mod tables;

pub use edge_list::{
    read_edge_list, write_edge_list, write_ktree, write_partial, EdgeList, EdgeListHeader,
};
pub use format::fmt_sig12;
pub use pace::{read_pace_td, write_pace_td};
pub use tables::{
    theory_table, write_deviation_csv, write_histogram_csv, write_json, write_theory_csv,
    AnalysisSummary, ConcentrationOutput, RunMetadata, TheoryRow, TheoryTable,
};
