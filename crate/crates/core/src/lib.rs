//! Finite affine planes and the algebra of their translations.
//!
//! The crate builds (or loads) a finite incidence structure, checks that it
//! is an affine plane, enumerates its collineations, dilations and
//! translations, packages the translations as an explicit finite group, and
//! exhaustively checks that the trace-preserving endomorphisms of that group
//! form an associative ring with identity.
//!
//! ```
//! use affine_endo::{builder, endo, transgroup, AffinePlane, Bounds};
//!
//! let plane = AffinePlane::new(builder::build_prime_plane(3).unwrap()).unwrap();
//! let bounds = Bounds::default();
//! let translations = affine_endo::collineation::enumerate_translations(&plane, &bounds).unwrap();
//! let group = transgroup::build_group(&plane, &translations).unwrap();
//! let tp = endo::enumerate_tp_endomorphisms(&group, &bounds).unwrap();
//! assert_eq!(tp.len(), 3);
//! assert!(endo::check_ring_axioms(&group, &tp).all_passed());
//! ```

pub mod builder;
pub mod check;
pub mod collineation;
pub mod endo;
mod error;
pub mod incidence;
pub mod transgroup;
mod unionfind;

pub use check::{CheckResult, Witness};
pub use collineation::{ClassifiedMap, MapKind, PointBijection};
pub use endo::{GroupSelfMap, RingReport};
pub use error::{Error, Result};
pub use incidence::{
    AffinePlane, AxiomReport, DirectionId, DirectionPartition, IncidenceDocument, IncidencePlane,
    LineId, PointId,
};
pub use transgroup::TranslationGroup;

/// Size limits for the exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    /// Largest point count accepted by the collineation backtracking search.
    pub collineation_points: usize,
    /// Largest plane order (points per line) accepted by dilation enumeration.
    pub plane_order: usize,
    /// Largest translation-group order accepted by endomorphism enumeration.
    pub group_order: usize,
}

impl Bounds {
    pub const DEFAULT_COLLINEATION_POINTS: usize = 9;
    pub const DEFAULT_PLANE_ORDER: usize = 13;
    pub const DEFAULT_GROUP_ORDER: usize = 49;
}

impl Default for Bounds {
    fn default() -> Self {
        Self {
            collineation_points: Self::DEFAULT_COLLINEATION_POINTS,
            plane_order: Self::DEFAULT_PLANE_ORDER,
            group_order: Self::DEFAULT_GROUP_ORDER,
        }
    }
}
