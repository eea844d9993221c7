//! Special functions used by the series evaluators.

mod gamma;
mod hurwitz;
mod kernels;
mod zeta;

pub use gamma::{
    cos_half_pi, gamma, nearest_nonpos_integer, recip_gamma, recip_gamma_over_linear,
    recip_gamma_over_range, sin_half_pi, sin_pi, POLE_EPS,
};
pub use hurwitz::hurwitz_zeta;
pub use kernels::{
    beta_recip, binom_poly, dist_to_pos_even, dist_to_pos_odd, g_ccc, g_prefactor, g_small, g_ssc,
    gamma_cos, gamma_sin, recip_gamma_cos, recip_gamma_cos_over_linear, recip_gamma_sin,
    recip_gamma_sin_over_linear,
};
pub use zeta::{riemann_zeta, zeta_minus_one, BERNOULLI_EVEN};
