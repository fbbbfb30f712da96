//! Selection of global approximations among per-element partial solutions.

/// Default tie tolerance when comparing criterion values.
pub const TIE_TOLERANCE: f64 = 1e-9;

/// The optimal components of the consistent complex for one norm/space pair.
///
/// `criterion_values[x]` is the quantity minimized over elements `x`; every
/// element within the tie tolerance of the minimum is an optimum and carries
/// its own payload, in increasing element order.
#[derive(Clone, Debug, PartialEq)]
pub struct GlobalResult<P> {
    pub optima: Vec<usize>,
    pub payloads: Vec<P>,
    pub criterion_values: Vec<f64>,
    pub tolerance: f64,
}

impl<P> GlobalResult<P> {
    /// Picks every minimizer of `criterion_values` and builds its payload.
    pub fn select<F, E>(
        criterion_values: Vec<f64>,
        tolerance: f64,
        mut payload: F,
    ) -> Result<Self, E>
    where
        F: FnMut(usize) -> Result<P, E>,
    {
        let optima = argmin_set(&criterion_values, tolerance);
        let payloads = optima
            .iter()
            .map(|&x| payload(x))
            .collect::<Result<Vec<_>, E>>()?;
        Ok(Self {
            optima,
            payloads,
            criterion_values,
            tolerance,
        })
    }

    pub fn minimum(&self) -> f64 {
        self.criterion_values
            .iter()
            .copied()
            .fold(f64::INFINITY, f64::min)
    }

    pub fn payload_for(&self, element: usize) -> Option<&P> {
        self.optima
            .iter()
            .position(|&x| x == element)
            .map(|k| &self.payloads[k])
    }

    pub fn is_optimum(&self, element: usize) -> bool {
        self.optima.contains(&element)
    }
}

/// Indices whose value lies within `tolerance` of the minimum.
pub fn argmin_set(values: &[f64], tolerance: f64) -> Vec<usize> {
    let min = values.iter().copied().fold(f64::INFINITY, f64::min);
    values
        .iter()
        .enumerate()
        .filter(|(_, v)| **v <= min + tolerance)
        .map(|(i, _)| i)
        .collect()
}
