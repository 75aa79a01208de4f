use crate::error::Result;
use crate::rep::BasisCatalog;
use crate::tensors::{DerivedMatrices, SparseStore, TensorStore};

/// Everything the checks read: basis matrices, tensors (dense and sparse)
/// and the matrix families rebuilt from the tensors.
#[derive(Clone, Debug)]
pub struct Model {
    pub catalog: BasisCatalog,
    pub store: TensorStore,
    pub sparse: SparseStore,
    pub derived: DerivedMatrices,
}

impl Model {
    pub fn build() -> Result<Self> {
        let catalog = BasisCatalog::build()?;
        let store = TensorStore::extract(&catalog)?;
        Self::with_store(catalog, store)
    }

    /// Uses a given (possibly loaded or perturbed) tensor store with freshly
    /// built basis matrices.
    pub fn with_store(catalog: BasisCatalog, store: TensorStore) -> Result<Self> {
        let derived = DerivedMatrices::build(&store)?;
        Ok(Self {
            sparse: store.sparse(),
            catalog,
            store,
            derived,
        })
    }
}
