//! dim U+_n from exact ranks, with random specializations beside them.
//!
//!     cargo run --release --example graded_dimensions -- 7

use qdg::freealg::{dims_table, DEFAULT_DEGREE_CAP};
use qdg::qcoeff::Ring;

fn main() -> qdg::Result<()> {
    let max = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    let rows = dims_table(&Ring::new(&[]), max, DEFAULT_DEGREE_CAP, 7)?;
    print!("{}", qdg::cli::render_dims(&rows));
    Ok(())
}
