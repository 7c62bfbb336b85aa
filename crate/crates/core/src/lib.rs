//! Lyubeznik size of monomial ideals, and how it behaves under polarization
//! and generic deformations.
//!
//! ```
//! use monosize::{parse_ideal, size, size_of_polarization};
//!
//! let ideal = parse_ideal("(x1^2,x2^2) & (x3^2,x4^2)").unwrap();
//! assert_eq!(size(&ideal).unwrap().size, 1);
//! let pol = size_of_polarization(&ideal).unwrap();
//! assert_eq!((pol.size_p, pol.c), (3, 4));
//! ```

pub mod corpus;
pub mod decomposition;
pub mod deformation;
pub mod error;
pub mod fuzz;
pub mod ideal;
pub mod limits;
pub mod monomial;
pub mod polarization;
pub mod random;
pub mod size;
pub mod text;

pub use decomposition::{
    irreducible_decomposition, irreducible_decomposition_with, irredundantize, recompose, Decomposition,
    IrreducibleComponent,
};
pub use deformation::{
    apply_deformation, find_generic_deformation, is_generic, is_strongly_generic, size_under_deformation,
    size_under_deformation_with, validate_deformation, DeformationSizes, DeformationVectors,
};
pub use error::{Error, Result};
pub use ideal::{minimalize, MonomialIdeal, PrimeSupport};
pub use limits::Limits;
pub use monomial::Monomial;
pub use polarization::{
    bar_family, build_top_base, compute_tlu, enumerate_top_bases, enumerate_top_bases_with, polarize,
    polarize_component, polarize_with, predict_equality, predict_equality_with, size_of_polarization,
    size_of_polarization_with, verify_equality, verify_equality_with, EqualityVerdict, PolarizationResult,
    PolarizationSizes, PolarizedVariable, PowerMatrix, TopBase,
};
pub use size::{
    minimal_covers, minimal_covers_with, radical, size, size_of_decomposition, size_of_decomposition_with,
    size_with, CoverFamily, SizeReport,
};
pub use text::{parse_ideal, parse_ideal_with};
