//! Numeric tests for the class 𝒯 of functions `∫ dμ(t)/(1 - tz)` and the
//! universal-convexity certification built on them.

mod certify;
mod handles;
mod liu_pego;
mod mfunc;

pub use certify::{certify_universal_convexity, paper_routes, scan_half_profile, CertReport, DeltaSummary, PaperRoute, Verdict};
pub use handles::{
    gauss_f, gauss_g, gauss_h, half_profile, psi_profile, ratio_h, ratio_w, ratio_w1, t_reciprocal_transform,
    AnalyticHandle,
};
pub use liu_pego::{check_liu_pego, CondI, CondII, CondIII, CondIV, GridSpec, TCheckReport, TVerdict};
pub use mfunc::{
    check_p31_hypotheses, check_p32_hypotheses, m1_handle, m1_p32, m2_handle, m2_p32, m_function_p31, m_function_p32,
    m_p31_handle, m_p32_handle, phi1, phi2, psi_via_phi1, psi_via_phi2,
};
