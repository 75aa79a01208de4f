//! Extract every invariant tensor by trace formulas, write the text files,
//! read them back and rebuild the derived matrix families.

use g2kit::model::Model;
use g2kit::rep::BasisCatalog;
use g2kit::tensors::TensorStore;

fn main() -> g2kit::error::Result<()> {
    let cat = BasisCatalog::build()?;
    let store = TensorStore::extract(&cat)?;
    for t in store.tensors() {
        println!("{:<20} dims={:?} nnz={}", t.name(), t.dims(), t.nnz());
    }

    let dir = std::env::temp_dir().join(format!("g2kit-tensors-{}", std::process::id()));
    store.save(&dir)?;
    let loaded = TensorStore::load(&dir)?;
    println!("round trip through {}: {}", dir.display(), loaded == store);

    let c = &loaded.c_ijk;
    println!("c_1,3,9 = {}", c.get(&[0, 2, 8]));

    let model = Model::with_store(cat, loaded)?;
    let d = &model.derived;
    println!(
        "H: {}  C: {}  Y: {}  ad: {}  Φ: {}",
        d.h.len(),
        d.c.len(),
        d.y.len(),
        d.ad.len(),
        d.phi.len()
    );
    println!("H sign: {}", d.h_sign);
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}
