//! Write the basis matrices, tensors and manifest, then the derived matrix
//! families, the same way the `build` and `export` subcommands do.

use g2kit::cli::{write_build, write_export};
use g2kit::model::Model;

fn main() -> g2kit::error::Result<()> {
    let root = std::env::args()
        .nth(1)
        .map(std::path::PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("g2kit-build"));
    let model = Model::build()?;
    write_build(&model, &root.join("build"))?;
    write_export(&model, &root.join("export"))?;
    print!("{}", std::fs::read_to_string(root.join("build/manifest.txt"))?);
    for entry in std::fs::read_dir(root.join("export"))? {
        let entry = entry?;
        println!(
            "{} {} bytes",
            entry.file_name().to_string_lossy(),
            entry.metadata()?.len()
        );
    }
    Ok(())
}
