pub mod bench;
pub mod centralizer;
pub mod cli;
pub mod complex;
pub mod conjugacy;
pub mod error;
pub mod graph;
pub mod matching;
pub mod oracle;
pub mod piling;
pub mod random;
pub mod word;
