//! Writes the disk picture and the analysis plots of a small patch as SVG.
//!
//! ```text
//! cargo run --example render_figures -- figures
//! ```

use std::path::PathBuf;

use qcft::io::commands::cmd_render;
use qcft::io::config::RunConfig;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let out = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(|| std::env::temp_dir().join("qcft-figures"));
    let config = RunConfig {
        steps: 3,
        output_dir: out,
        ..RunConfig::default()
    };
    for path in cmd_render(&config)? {
        println!("{}", path.display());
    }
    Ok(())
}
