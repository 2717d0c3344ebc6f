//! Input documents, the staged pipeline behind the command line tool, and
//! its JSON reports.

pub mod input;
pub mod pipeline;

pub use input::{parse_input, read_input, InputSpec, Options};
pub use pipeline::{exit_code, fan_json, graph_summary, Command, Output, Session, Settings};
