//! Right-hand sides of the approximation guarantees, as functions of the
//! optimum `OPT = argmax f(T) - c(T)`.
//!
//! All of them contain the loss term `A = c(OPT) ln(f(OPT) / c(OPT))`, which
//! is undefined when `OPT = ∅`; the functions return `None` then.

/// `A = c(OPT) · ln(f(OPT) / c(OPT))`.
pub fn additive_loss(f_opt: f64, c_opt: f64) -> Option<f64> {
    if c_opt > 0.0 && f_opt > 0.0 {
        Some(c_opt * libm::log(f_opt / c_opt))
    } else {
        None
    }
}

/// UP and threshold-ROI:
/// `γ(1-ε) f(OPT) - c(OPT) - A / (γ(1-ε))`.
pub fn up_bound(gamma: f64, epsilon: f64, f_opt: f64, c_opt: f64) -> Option<f64> {
    let a = additive_loss(f_opt, c_opt)?;
    let g = gamma * (1.0 - epsilon);
    Some(g * f_opt - c_opt - a / g)
}

/// γ-ROI: `γ f(OPT) - c(OPT) - A / γ`.
pub fn roi_bound(gamma: f64, f_opt: f64, c_opt: f64) -> Option<f64> {
    let a = additive_loss(f_opt, c_opt)?;
    Some(gamma * f_opt - c_opt - a / gamma)
}

/// Extra loss of UP on a δ-approximate oracle:
/// `2δ(β + n/γ + 1 + n(1-ε)β')` with `β = c(OPT)/c_min`, `β' = c_max/c(OPT)`.
pub fn noise_penalty(
    gamma: f64,
    epsilon: f64,
    delta: f64,
    n: usize,
    c_min: f64,
    c_max: f64,
    c_opt: f64,
) -> f64 {
    let n = n as f64;
    let beta = c_opt / c_min;
    let beta_prime = c_max / c_opt;
    2.0 * delta * (beta + n / gamma + 1.0 + n * (1.0 - epsilon) * beta_prime)
}

/// UP on a δ-approximate oracle: [`up_bound`] minus [`noise_penalty`].
/// `f_opt`/`c_opt` refer to the optimum of the true function.
#[allow(clippy::too_many_arguments)]
pub fn noisy_up_bound(
    gamma: f64,
    epsilon: f64,
    delta: f64,
    n: usize,
    c_min: f64,
    c_max: f64,
    f_opt: f64,
    c_opt: f64,
) -> Option<f64> {
    Some(
        up_bound(gamma, epsilon, f_opt, c_opt)?
            - noise_penalty(gamma, epsilon, delta, n, c_min, c_max, c_opt),
    )
}

/// Expected-value guarantee of UDG: `(1 - e^{-γ}) f(OPT) - c(OPT)`.
pub fn udg_expected_bound(gamma: f64, f_opt: f64, c_opt: f64) -> f64 {
    (1.0 - libm::exp(-gamma)) * f_opt - c_opt
}
