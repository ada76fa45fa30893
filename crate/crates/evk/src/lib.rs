//! Algebraic structure of the spectral-radius eigenvectors of nonnegative
//! combinatorially symmetric weakly irreducible tensors.
//!
//! For such a tensor the eigenvectors associated with the spectral radius,
//! viewed projectively, form a finite abelian group: a module over the
//! integers modulo the tensor order. This crate computes that module
//! exactly from the Smith normal form of the tensor's incidence matrix:
//! its cardinality (the stabilizing index), its composition length (the
//! stabilizing dimension), an explicit generator decomposition, and the
//! cyclic index. A numeric layer reconstructs every eigenvector on the
//! spectral circle from the Perron vector and certifies it by residual, and
//! a hypergraph layer ties the invariants to structural bounds (path
//! covers, matchings, longest paths) for adjacency tensors.
//!
//! ```
//! use evk::hypergraph::UniformHypergraph;
//!
//! // A complete 3-uniform hypergraph has the Perron vector as its only
//! // projective eigenvector at the spectral radius.
//! let g = UniformHypergraph::complete(4, 3).unwrap();
//! let s = evk::eigenvariety::analyze(&g.adjacency_tensor()).unwrap();
//! assert_eq!(s.stabilizing_index().to_string(), "1");
//! assert_eq!(s.stabilizing_dimension(), 0);
//! ```

pub mod eigenvariety;
pub mod hypergraph;
pub mod io;
pub mod linalg;
pub mod matrix;
pub mod numeric;
pub mod tensor;
pub mod verify;

pub use matrix::IntMatrix;
pub use tensor::{MultiIndex, SymTensorSupport, TensorError};

// The guide chapters double as doctests so their code blocks stay honest.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/tensors-and-supports.md")]
    mod tensors_and_supports {}
    #[doc = include_str!("../../../book/src/smith-normal-form.md")]
    mod smith_normal_form {}
    #[doc = include_str!("../../../book/src/eigenvariety-structure.md")]
    mod eigenvariety_structure {}
    #[doc = include_str!("../../../book/src/spectral-numerics.md")]
    mod spectral_numerics {}
    #[doc = include_str!("../../../book/src/hypergraphs-and-bounds.md")]
    mod hypergraphs_and_bounds {}
    #[doc = include_str!("../../../book/src/command-line.md")]
    mod command_line {}
}
