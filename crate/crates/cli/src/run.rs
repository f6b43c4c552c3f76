use superfit::fitting::{
    verify_cauchy, verify_conj41, verify_cor2, verify_lie, verify_thm1a, verify_thm1b_generic, GenericSetup, Report, SetupSpec,
};
use superfit::resolution::default_j_max;

use crate::args::{Bounds, Claim};

pub const DEFAULT_IMAX: usize = 4;

/// Runs one claim. For `cauchy` the instance is the componentwise bound.
pub fn run_claim(claim: Claim, spec: SetupSpec, bounds: &Bounds) -> superfit::Result<Report> {
    if claim == Claim::Cauchy {
        return Ok(verify_cauchy(bounds.tmax, spec));
    }
    let setup = GenericSetup::from_spec(spec)?;
    match claim {
        Claim::Thm1a => verify_thm1a(&setup),
        Claim::Thm1b => verify_thm1b_generic(&setup, bounds.samples, bounds.seed),
        Claim::Cor2 => verify_cor2(&setup),
        Claim::Lie => verify_lie(&setup),
        Claim::Conj41 => {
            let i_max = bounds.imax.unwrap_or(DEFAULT_IMAX);
            let j_max = bounds.jmax.unwrap_or_else(|| default_j_max(spec.d, spec.e));
            verify_conj41(&setup, i_max, j_max)
        }
        Claim::Cauchy => unreachable!("handled above"),
    }
}

/// The arguments of `superfit verify` that reproduce a run.
pub fn verify_argv(claim: Claim, spec: SetupSpec, bounds: &Bounds) -> Vec<String> {
    let mut argv = vec!["superfit".to_string(), "verify".to_string(), claim.name().to_string()];
    match claim {
        Claim::Cauchy => {
            argv.extend(["--tmax".to_string(), bounds.tmax.to_string(), "--dims".to_string()]);
            argv.extend([spec.d, spec.e, spec.m, spec.n].iter().map(|x| x.to_string()));
        }
        _ => {
            argv.extend([spec.d, spec.e, spec.m, spec.n].iter().map(|x| x.to_string()));
            argv.extend(["--char".to_string(), spec.characteristic.to_string()]);
        }
    }
    match claim {
        Claim::Thm1b => {
            argv.extend(["--samples".to_string(), bounds.samples.to_string(), "--seed".to_string(), bounds.seed.to_string()]);
        }
        Claim::Conj41 => {
            if let Some(i) = bounds.imax {
                argv.extend(["--imax".to_string(), i.to_string()]);
            }
            if let Some(j) = bounds.jmax {
                argv.extend(["--jmax".to_string(), j.to_string()]);
            }
        }
        _ => {}
    }
    argv
}
