//! The octonionic tensor ψ: its contraction identities hold, and it fails
//! the Jacobi identity on its own.

use g2kit::tensors::{build_psi, einsum, Sparse};

fn main() {
    let psi = build_psi().to_sparse();
    println!("nonzero ψ entries: {}", psi.nnz());

    let gram = einsum("abc,abd->cd", &[&psi, &psi]);
    println!(
        "ψ_abc ψ_abd = {}·δ_cd",
        gram.ratio_to(&Sparse::delta(7)).expect("proportional")
    );

    let cubic = einsum("fag,gbe,ecf->abc", &[&psi, &psi, &psi]);
    println!(
        "ψ_fag ψ_gbe ψ_ecf = {}·ψ_abc",
        cubic.ratio_to(&psi).expect("proportional")
    );

    let jacobi = einsum("abe,ecd->abcd", &[&psi, &psi])
        .add(&einsum("bce,ead->abcd", &[&psi, &psi]))
        .add(&einsum("cae,ebd->abcd", &[&psi, &psi]));
    let first = jacobi.entries().next().map(|(idx, v)| (idx, v.clone()));
    match first {
        Some((idx, v)) => {
            let one_based: Vec<usize> = idx.iter().map(|i| i + 1).collect();
            println!("Jacobi violated at {one_based:?}: {v}");
        }
        None => println!("Jacobi holds"),
    }
}
