//! Textual initial-state specifications.
//!
//! Accepted forms:
//! - named states: `alpha1`, `alpha2`, `alpha3`, `spec`
//! - explicit components: `std:rR,iR;rS,iS;rL,iL` (standard basis) or
//!   `alpha:r1,i1;r2,i2;r3,i3`, with each component a `re,im` pair
//!
//! Explicit components are normalized on parse; the zero vector is rejected.

use qwalk_core::{c64, BasisTag, CoinParameter, CoinVector, Vec3};
use std::str::FromStr;

/// A parsed but not yet resolved initial coin state. The named forms depend
/// on the coin parameter (the alpha basis moves with rho), so turning a spec
/// into an actual state happens in [`StateSpec::resolve`].
#[derive(Clone, Debug, PartialEq)]
pub enum StateSpec {
    Alpha1,
    Alpha2,
    Alpha3,
    /// The superposition rho |alpha1> - sqrt(1 - rho^2) |alpha2> whose state
    /// recurrence crosses its site recurrence near rho ~ 0.79.
    Paradox,
    Components { components: Vec3, basis: BasisTag },
}

impl FromStr for StateSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "alpha1" => return Ok(StateSpec::Alpha1),
            "alpha2" => return Ok(StateSpec::Alpha2),
            "alpha3" => return Ok(StateSpec::Alpha3),
            "spec" => return Ok(StateSpec::Paradox),
            _ => {}
        }
        let (basis, rest) = if let Some(rest) = s.strip_prefix("std:") {
            (BasisTag::Standard, rest)
        } else if let Some(rest) = s.strip_prefix("alpha:") {
            (BasisTag::Alpha, rest)
        } else {
            return Err(format!(
                "unknown state '{s}'; expected alpha1|alpha2|alpha3|spec, \
                 std:re,im;re,im;re,im or alpha:re,im;re,im;re,im"
            ));
        };
        let parts: Vec<&str> = rest.split(';').collect();
        if parts.len() != 3 {
            return Err(format!(
                "state needs exactly 3 components separated by ';', got {}",
                parts.len()
            ));
        }
        let mut components = Vec3::zero();
        for (i, part) in parts.iter().enumerate() {
            components.0[i] = parse_complex(part)?;
        }
        let norm = components.norm();
        if norm < 1e-12 {
            return Err("state must not be the zero vector".into());
        }
        Ok(StateSpec::Components {
            components: components.scale(c64(1.0 / norm, 0.0)),
            basis,
        })
    }
}

fn parse_complex(part: &str) -> Result<qwalk_core::C64, String> {
    let mut halves = part.split(',');
    let (re, im) = match (halves.next(), halves.next(), halves.next()) {
        (Some(re), Some(im), None) => (re, im),
        _ => return Err(format!("component '{part}' is not a re,im pair")),
    };
    let re: f64 = re
        .trim()
        .parse()
        .map_err(|_| format!("cannot parse real part '{re}'"))?;
    let im: f64 = im
        .trim()
        .parse()
        .map_err(|_| format!("cannot parse imaginary part '{im}'"))?;
    if !re.is_finite() || !im.is_finite() {
        return Err(format!("component '{part}' must be finite"));
    }
    Ok(c64(re, im))
}

impl StateSpec {
    /// Builds the normalized coin state this spec names at the given coin
    /// parameter.
    pub fn resolve(&self, rho: CoinParameter) -> qwalk_core::Result<CoinVector> {
        let alpha_unit = |k: usize| {
            let mut v = Vec3::zero();
            v.0[k] = c64(1.0, 0.0);
            CoinVector::state(v, BasisTag::Alpha)
        };
        match self {
            StateSpec::Alpha1 => alpha_unit(0),
            StateSpec::Alpha2 => alpha_unit(1),
            StateSpec::Alpha3 => alpha_unit(2),
            StateSpec::Paradox => {
                let r = rho.get();
                let v = Vec3::from_real([r, -(1.0 - r * r).sqrt(), 0.0]);
                CoinVector::state(v, BasisTag::Alpha)
            }
            StateSpec::Components { components, basis } => {
                CoinVector::state(*components, *basis)
            }
        }
    }
}
