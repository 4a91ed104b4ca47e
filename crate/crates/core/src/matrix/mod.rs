//! Matrix cones, quaternion matrices and δ-monotone maps.

pub mod cone;
pub mod monotone;
pub mod quaternion;

pub use cone::{
    angular_margin, cond_ratio, cone_constant, cone_membership, conf_split, h_delta, reduced4d_membership,
    reduced_distortion_bound_sq, ConeMembership, ConeParams, ConformalSplit, Reduced4d,
};
pub use monotone::{
    monotonicity_probe, quat_minimizer, radial_stretch, radial_stretch_differential, MonotonicityProbe, QuatMinimizer,
};
pub use quaternion::{project_im_quat, project_quat, quat_embed, QuatMatrix};
