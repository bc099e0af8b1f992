//! The Varshni-Hellmann potential family.
//!
//! ```text
//! V(r) = a + (d - ab) e^(-αr) / r - c / r
//! ```
//!
//! Hellmann (`a = b = 0`), Varshni (`c = d = 0`), Yukawa (`a = b = c = 0`) and
//! Coulomb are special cases. Masses and ħ are carried explicitly; every
//! formula in the crate only sees them through `2μ/ħ²`.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Highest power of `αr` the truncated exponential series may keep.
pub const MAX_EXPANSION_ORDER: u32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PotentialParams {
    /// Constant offset, also the `r -> ∞` asymptote.
    pub a: f64,
    /// Varshni strength.
    pub b: f64,
    /// Coulomb strength.
    pub c: f64,
    /// Yukawa strength. Negative values are attractive.
    pub d: f64,
    /// Screening parameter.
    pub alpha: f64,
    /// Reduced mass.
    pub mu: f64,
    pub hbar: f64,
}

/// Combinations of the potential constants that recur in every closed form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedConstants {
    /// `a·b`
    pub ab: f64,
    /// `ab - d`, the strength of the screened part.
    pub s1: f64,
    /// `ab + c - d`, the net Coulomb strength seen near the origin.
    pub s2: f64,
}

/// Which form of the exponential is used when evaluating the potential.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PotentialForm {
    /// Exact `e^(-αr)`.
    #[default]
    Full,
    /// Third-order Taylor polynomial of `e^(-αr)`.
    Expanded,
}

impl std::str::FromStr for PotentialForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(Self::Full),
            "expanded" => Ok(Self::Expanded),
            other => Err(Error::Argument(format!("unknown potential form `{other}`"))),
        }
    }
}

impl Default for PotentialParams {
    /// Pure zero potential in the `ħ = 2μ = 1` convention.
    fn default() -> Self {
        Self {
            a: 0.0,
            b: 0.0,
            c: 0.0,
            d: 0.0,
            alpha: 0.0,
            mu: 0.5,
            hbar: 1.0,
        }
    }
}

impl PotentialParams {
    /// Builds and validates a full parameter set.
    pub fn new(a: f64, b: f64, c: f64, d: f64, alpha: f64, mu: f64, hbar: f64) -> Result<Self> {
        let params = Self {
            a,
            b,
            c,
            d,
            alpha,
            mu,
            hbar,
        };
        params.validate()?;
        Ok(params)
    }

    /// Hellmann potential `-c/r + d e^(-αr)/r` (`a = b = 0`).
    pub fn hellmann(c: f64, d: f64, alpha: f64) -> Result<Self> {
        Self {
            c,
            d,
            alpha,
            ..Self::default()
        }
        .validated()
    }

    /// Varshni potential `a - ab e^(-αr)/r` (`c = d = 0`).
    pub fn varshni(a: f64, b: f64, alpha: f64) -> Result<Self> {
        Self {
            a,
            b,
            alpha,
            ..Self::default()
        }
        .validated()
    }

    /// Attractive Yukawa potential `-strength · e^(-αr)/r` with `α = g · strength`.
    ///
    /// The strength is quoted as a positive number and stored as `d = -strength`
    /// so that the `+d e^(-αr)/r` term binds.
    pub fn yukawa(strength: f64, g: f64) -> Result<Self> {
        Self {
            d: -strength,
            alpha: g * strength,
            ..Self::default()
        }
        .validated()
    }

    /// Pure Coulomb potential `-c/r`.
    pub fn coulomb(c: f64) -> Result<Self> {
        Self {
            c,
            ..Self::default()
        }
        .validated()
    }

    pub fn with_mass(self, mu: f64) -> Result<Self> {
        Self { mu, ..self }.validated()
    }

    pub fn with_hbar(self, hbar: f64) -> Result<Self> {
        Self { hbar, ..self }.validated()
    }

    pub fn with_alpha(self, alpha: f64) -> Result<Self> {
        Self { alpha, ..self }.validated()
    }

    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("a", self.a),
            ("b", self.b),
            ("c", self.c),
            ("d", self.d),
            ("alpha", self.alpha),
            ("mu", self.mu),
            ("hbar", self.hbar),
        ];
        if let Some((name, v)) = fields.iter().find(|(_, v)| !v.is_finite()) {
            return Err(Error::Argument(format!("{name} must be finite, got {v}")));
        }
        if self.alpha < 0.0 {
            return Err(Error::Argument(format!(
                "alpha must be >= 0, got {}",
                self.alpha
            )));
        }
        if self.mu <= 0.0 {
            return Err(Error::Argument(format!("mu must be > 0, got {}", self.mu)));
        }
        if self.hbar <= 0.0 {
            return Err(Error::Argument(format!(
                "hbar must be > 0, got {}",
                self.hbar
            )));
        }
        Ok(())
    }

    fn validated(self) -> Result<Self> {
        self.validate()?;
        Ok(self)
    }

    pub fn derived(&self) -> DerivedConstants {
        let ab = self.a * self.b;
        DerivedConstants {
            ab,
            s1: ab - self.d,
            s2: ab + self.c - self.d,
        }
    }

    /// `μ/ħ²`; the radial equation only depends on the masses through this.
    pub fn mass_factor(&self) -> f64 {
        self.mu / (self.hbar * self.hbar)
    }

    /// Exact potential.
    pub fn eval_full(&self, r: f64) -> Result<f64> {
        check_radius(r)?;
        let DerivedConstants { s1, .. } = self.derived();
        Ok(self.a - s1 * (-self.alpha * r).exp() / r - self.c / r)
    }

    /// Potential with `e^(-αr)` replaced by its Taylor polynomial up to `(αr)^order`.
    pub fn eval_expanded(&self, r: f64, order: u32) -> Result<f64> {
        check_radius(r)?;
        if order > MAX_EXPANSION_ORDER {
            return Err(Error::Argument(format!(
                "expansion order must be in 0..={MAX_EXPANSION_ORDER}, got {order}"
            )));
        }
        let x = -self.alpha * r;
        let mut term = 1.0;
        let mut series = 1.0;
        for j in 1..=order {
            term *= x / f64::from(j);
            series += term;
        }
        let DerivedConstants { s1, .. } = self.derived();
        Ok(self.a - s1 * series / r - self.c / r)
    }

    pub fn eval(&self, r: f64, form: PotentialForm) -> Result<f64> {
        match form {
            PotentialForm::Full => self.eval_full(r),
            PotentialForm::Expanded => self.eval_expanded(r, MAX_EXPANSION_ORDER),
        }
    }

    /// Potential plus the centrifugal barrier `l(l+1)ħ²/(2μr²)`.
    pub fn effective_potential(&self, l: u32, r: f64, form: PotentialForm) -> Result<f64> {
        let v = self.eval(r, form)?;
        Ok(v + self.centrifugal(l, r))
    }

    pub(crate) fn centrifugal(&self, l: u32, r: f64) -> f64 {
        if l == 0 {
            return 0.0;
        }
        let l = f64::from(l);
        l * (l + 1.0) / (2.0 * self.mass_factor() * r * r)
    }
}

fn check_radius(r: f64) -> Result<()> {
    if r.is_finite() && r > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "radius must be finite and > 0, got {r}"
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn table1(alpha: f64) -> PotentialParams {
        PotentialParams::new(1.0, -1.0, 4.0, -4.0, alpha, 0.5, 1.0).unwrap()
    }

    #[test]
    fn coulomb_value() {
        let p = PotentialParams::coulomb(1.0).unwrap();
        assert_eq!(p.eval_full(2.0).unwrap(), -0.5);
    }

    #[test]
    fn full_form_direct_arithmetic() {
        let v = table1(0.05).eval_full(1.0).unwrap();
        assert_abs_diff_eq!(v, 1.0 - 3.0 * (-0.05f64).exp() - 4.0, epsilon = 1e-15);
        assert_abs_diff_eq!(v, -5.853688, epsilon = 5e-7);
    }

    #[test]
    fn unscreened_value_at_unit_radius() {
        let p = PotentialParams::new(0.3, 2.0, 1.5, -0.7, 0.0, 1.0, 1.0).unwrap();
        assert_eq!(p.eval_full(1.0).unwrap(), 0.3 + (-0.7 - 0.6 - 1.5));
    }

    #[test]
    fn expanded_hellmann_third_order() {
        let p = PotentialParams::hellmann(2.0, -1.0, 0.1).unwrap();
        let v = p.eval_expanded(1.0, 3).unwrap();
        assert_abs_diff_eq!(v, -3.0 + 0.1 - 0.005 + 0.001 / 6.0, epsilon = 1e-14);
        assert_abs_diff_eq!(v, -2.904833, epsilon = 5e-7);
    }

    #[test]
    fn expanded_order_zero_drops_screening() {
        let p = table1(0.05);
        for &r in &[0.1, 1.0, 7.5] {
            let v = p.eval_expanded(r, 0).unwrap();
            assert_abs_diff_eq!(v, 1.0 + (-4.0 + 1.0 - 4.0) / r, epsilon = 1e-13);
        }
    }

    #[test]
    fn expanded_matches_full_for_weak_screening() {
        let p = table1(0.01);
        let diff = (p.eval_full(1.0).unwrap() - p.eval_expanded(1.0, 3).unwrap()).abs();
        assert!(diff < 1e-8, "diff = {diff}");
    }

    #[test]
    fn expanded_rejects_bad_order_and_radius() {
        let p = table1(0.05);
        assert!(matches!(p.eval_expanded(1.0, 4), Err(Error::Argument(_))));
        assert!(matches!(p.eval_expanded(0.0, 3), Err(Error::Domain(_))));
        assert!(matches!(p.eval_full(-1.0), Err(Error::Domain(_))));
        assert!(matches!(p.eval_full(f64::NAN), Err(Error::Domain(_))));
        assert!(matches!(p.eval_full(f64::INFINITY), Err(Error::Domain(_))));
    }

    #[test]
    fn centrifugal_term() {
        let p = PotentialParams::coulomb(1.0)
            .unwrap()
            .with_mass(1.0)
            .unwrap();
        let v = p.effective_potential(1, 2.0, PotentialForm::Full).unwrap();
        assert_abs_diff_eq!(v, -0.25, epsilon = 1e-15);
    }

    #[test]
    fn effective_potential_approaches_offset() {
        let v = table1(0.05)
            .effective_potential(2, 1000.0, PotentialForm::Full)
            .unwrap();
        // -c/r and the barrier still contribute ~4e-3 at r = 1000
        assert!((v - 1.0).abs() < 5e-3);
        let far = table1(0.05)
            .effective_potential(0, 1e7, PotentialForm::Full)
            .unwrap();
        assert!((far - 1.0).abs() < 1e-6);
    }

    #[test]
    fn special_cases() {
        let h = PotentialParams::hellmann(2.0, -1.0, 0.005).unwrap();
        assert_eq!((h.a, h.b, h.c, h.d, h.alpha), (0.0, 0.0, 2.0, -1.0, 0.005));

        let y = PotentialParams::yukawa(2f64.sqrt(), 0.002).unwrap();
        assert_eq!((y.a, y.b, y.c), (0.0, 0.0, 0.0));
        assert_eq!(y.d, -(2f64.sqrt()));
        assert_abs_diff_eq!(y.alpha, 0.002 * 2f64.sqrt(), epsilon = 1e-18);

        let v = PotentialParams::varshni(-1.0, -1.0, 0.05).unwrap();
        assert_eq!((v.c, v.d), (0.0, 0.0));
        assert_eq!(v.derived().ab, 1.0);

        let c = PotentialParams::coulomb(1.0).unwrap();
        for &r in &[0.01, 0.5, 3.0, 100.0] {
            assert_eq!(c.eval_full(r).unwrap(), -1.0 / r);
        }
    }

    #[test]
    fn validation() {
        assert!(PotentialParams::new(0.0, 0.0, 1.0, 0.0, -0.1, 1.0, 1.0).is_err());
        assert!(PotentialParams::new(0.0, 0.0, 1.0, 0.0, 0.1, 0.0, 1.0).is_err());
        assert!(PotentialParams::new(0.0, 0.0, 1.0, 0.0, 0.1, 1.0, -1.0).is_err());
        assert!(PotentialParams::new(f64::NAN, 0.0, 1.0, 0.0, 0.1, 1.0, 1.0).is_err());
        assert!(PotentialParams::hellmann(f64::INFINITY, 0.0, 0.0).is_err());
    }

    #[test]
    fn derived_constants() {
        let d = table1(0.05).derived();
        assert_eq!(d.ab, -1.0);
        assert_eq!(d.s1, 3.0);
        assert_eq!(d.s2, 7.0);
    }

    fn any_params() -> impl Strategy<Value = PotentialParams> {
        (
            -5.0..5.0f64,
            -5.0..5.0f64,
            -5.0..5.0f64,
            -5.0..5.0f64,
            0.0..0.5f64,
            0.1..3.0f64,
            0.5..2.0f64,
        )
            .prop_map(|(a, b, c, d, alpha, mu, hbar)| PotentialParams {
                a,
                b,
                c,
                d,
                alpha,
                mu,
                hbar,
            })
    }

    proptest! {
        #[test]
        fn unscreened_reduces_to_shifted_coulomb(p in any_params(), r in 1e-3..100.0f64) {
            let p = PotentialParams { alpha: 0.0, ..p };
            let DerivedConstants { ab, .. } = p.derived();
            let expected = p.a + (p.d - ab - p.c) / r;
            let got = p.eval_full(r).unwrap();
            prop_assert!((got - expected).abs() <= 1e-12 * (1.0 + expected.abs()));
        }

        #[test]
        fn expansion_remainder_is_fourth_order(p in any_params(), r in 1e-3..10.0f64) {
            let s1 = p.derived().s1;
            prop_assume!(s1.abs() > 1e-3 && p.alpha > 1e-3 && p.alpha * r < 0.5);
            let diff = (p.eval_expanded(r, 3).unwrap() - p.eval_full(r).unwrap()).abs();
            let scale = p.alpha.powi(4) * r.powi(3) * s1.abs();
            // cancellation in the subtraction is bounded by a few ulps of the terms
            let noise = 1e-14 * (p.a.abs() + (s1.abs() + p.c.abs()) / r);
            prop_assert!(diff <= scale + noise, "diff {} scale {}", diff, scale);
        }

        #[test]
        fn s_wave_has_no_barrier(p in any_params(), r in 1e-3..100.0f64) {
            for form in [PotentialForm::Full, PotentialForm::Expanded] {
                prop_assert_eq!(p.effective_potential(0, r, form).unwrap(), p.eval(r, form).unwrap());
            }
        }

        #[test]
        fn coulomb_strength_shifts_uniformly(p in any_params(), r in 1e-2..100.0f64, dc in 0.01..3.0f64) {
            let q = PotentialParams { c: p.c + dc, ..p };
            let shift = p.eval_full(r).unwrap() - q.eval_full(r).unwrap();
            prop_assert!((shift - dc / r).abs() <= 1e-12 * (1.0 + p.eval_full(r).unwrap().abs() + dc / r));
        }
    }
}
