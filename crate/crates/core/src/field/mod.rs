//! GF(4), polynomials over it, its extensions GF(4^z), and the fixed root of
//! unity used to label defining sets.

mod ext;
mod f4;
mod poly;
mod root;

pub use ext::{build_extension, ExtElem, ExtField};
pub(crate) use ext::mul_linear;
pub use f4::{hermitian, F4};
pub use poly::Poly;
pub use root::{fix_root_of_unity, RootOfUnity};
