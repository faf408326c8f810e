//! Regenerates the golden catalog files and their checksums.
//!
//! Usage: golden-build [DIR]   (defaults to the versioned data directory)

use std::path::PathBuf;
use std::process::ExitCode;

use towerforge::catalog::{golden_dir, write_golden};

fn main() -> ExitCode {
    let dir = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(golden_dir);
    match write_golden(&dir) {
        Ok(files) => {
            println!("wrote {} files to {}", files.len(), dir.display());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("golden-build: {e}");
            ExitCode::from(3)
        }
    }
}
