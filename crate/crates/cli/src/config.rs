//! Layered run configuration: command-line flags override an optional
//! `key=value` config file, which overrides built-in defaults.
//!
//! All values are kept as raw strings until [`RawConfig`] is resolved, so
//! that a bad value is always reported with the name of the field it came
//! from, no matter where it was set.

use std::fmt;
use std::path::Path;

use swevortex::{EulerKind, EulerVortexField, StudyConfig, VortexFamily, VortexSpec};

/// A configuration problem; carries a human-readable message naming the
/// offending field.
#[derive(Debug)]
pub struct ConfigError(pub String);

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for ConfigError {}

fn err<T>(msg: impl Into<String>) -> Result<T, ConfigError> {
    Err(ConfigError(msg.into()))
}

/// Unresolved configuration; every field optional so that layers can be
/// merged before validation.
#[derive(Debug, Default, Clone)]
pub struct RawConfig {
    pub family: Option<String>,
    pub p: Option<String>,
    pub r0: Option<String>,
    pub h0: Option<String>,
    pub hmin: Option<String>,
    pub gamma_amp: Option<String>,
    pub g: Option<String>,
    pub center: Option<String>,
    pub uinf: Option<String>,
    pub n: Option<String>,
    pub meshes: Option<String>,
    pub cfl: Option<String>,
    pub tfinal: Option<String>,
    pub quad: Option<String>,
    pub euler: Option<String>,
    pub gas_gamma: Option<String>,
    pub rho0: Option<String>,
    pub p0: Option<String>,
    pub domain: Option<String>,
    pub time: Option<String>,
    pub points: Option<String>,
    pub rmax: Option<String>,
    pub averages: bool,
    pub full_precision: bool,
}

impl RawConfig {
    /// Parse a config file of `key = value` lines; `#` starts a comment.
    /// Keys use the same spelling as the command-line flags (without the
    /// leading dashes).
    pub fn from_file(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| ConfigError(format!("cannot read config file {}: {e}", path.display())))?;
        let mut cfg = Self::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return err(format!(
                    "{}:{}: expected `key = value`, got `{line}`",
                    path.display(),
                    lineno + 1
                ));
            };
            cfg.set(key.trim(), value.trim())?;
        }
        Ok(cfg)
    }

    fn set(&mut self, key: &str, value: &str) -> Result<(), ConfigError> {
        let slot = match key {
            "family" => &mut self.family,
            "p" => &mut self.p,
            "r0" => &mut self.r0,
            "h0" => &mut self.h0,
            "hmin" => &mut self.hmin,
            "gamma-amp" => &mut self.gamma_amp,
            "g" => &mut self.g,
            "center" => &mut self.center,
            "uinf" => &mut self.uinf,
            "N" => &mut self.n,
            "meshes" => &mut self.meshes,
            "cfl" => &mut self.cfl,
            "tfinal" => &mut self.tfinal,
            "quad" => &mut self.quad,
            "euler" => &mut self.euler,
            "gas-gamma" => &mut self.gas_gamma,
            "rho0" => &mut self.rho0,
            "p0" => &mut self.p0,
            "domain" => &mut self.domain,
            "time" => &mut self.time,
            "points" => &mut self.points,
            "rmax" => &mut self.rmax,
            "averages" | "full-precision" => {
                let flag = match value {
                    "true" | "1" | "yes" => true,
                    "false" | "0" | "no" => false,
                    _ => return err(format!("{key}: expected a boolean, got `{value}`")),
                };
                if key == "averages" {
                    self.averages = flag;
                } else {
                    self.full_precision = flag;
                }
                return Ok(());
            }
            _ => return err(format!("unknown config key `{key}`")),
        };
        *slot = Some(value.to_string());
        Ok(())
    }

    /// Fill every unset field of `self` from `fallback` (flags over file).
    pub fn or(mut self, fallback: Self) -> Self {
        macro_rules! take {
            ($($f:ident),*) => { $( if self.$f.is_none() { self.$f = fallback.$f; } )* };
        }
        take!(
            family, p, r0, h0, hmin, gamma_amp, g, center, uinf, n, meshes, cfl, tfinal, quad,
            euler, gas_gamma, rho0, p0, domain, time, points, rmax
        );
        self.averages |= fallback.averages;
        self.full_precision |= fallback.full_precision;
        self
    }
}

fn parse_f64(name: &str, s: &str) -> Result<f64, ConfigError> {
    s.trim()
        .parse()
        .map_err(|_| ConfigError(format!("{name}: expected a number, got `{s}`")))
}

fn parse_u32(name: &str, s: &str) -> Result<u32, ConfigError> {
    s.trim()
        .parse()
        .map_err(|_| ConfigError(format!("{name}: expected a positive integer, got `{s}`")))
}

fn parse_usize(name: &str, s: &str) -> Result<usize, ConfigError> {
    s.trim()
        .parse()
        .map_err(|_| ConfigError(format!("{name}: expected a positive integer, got `{s}`")))
}

fn parse_pair(name: &str, s: &str) -> Result<[f64; 2], ConfigError> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return err(format!("{name}: expected `X,Y`, got `{s}`"));
    }
    Ok([parse_f64(name, parts[0])?, parse_f64(name, parts[1])?])
}

fn opt<T>(
    field: &Option<String>,
    name: &str,
    parse: impl Fn(&str, &str) -> Result<T, ConfigError>,
) -> Result<Option<T>, ConfigError> {
    field.as_deref().map(|s| parse(name, s)).transpose()
}

/// Resolved settings shared by every subcommand.
pub struct Resolved {
    pub spec: VortexSpec,
    pub euler: Option<EulerVortexField>,
    pub study: StudyConfig,
    pub n: usize,
    pub meshes: Vec<usize>,
    pub time: f64,
    pub points: usize,
    pub rmax: f64,
    pub averages: bool,
    pub full_precision: bool,
}

impl RawConfig {
    pub fn resolve(&self) -> Result<Resolved, ConfigError> {
        let p = opt(&self.p, "p", parse_u32)?;
        let family = match self.family.as_deref().unwrap_or("cos") {
            "cos" => VortexFamily::CosPower { p: p.unwrap_or(1) },
            "gauss" => {
                if p.is_some() {
                    return err("p: not applicable to family `gauss`");
                }
                VortexFamily::Gaussian
            }
            "expbump" => VortexFamily::ExpBump { p: p.unwrap_or(2) },
            "arctan" => VortexFamily::ArctanBump { p: p.unwrap_or(2) },
            other => {
                return err(format!(
                    "family: expected one of cos, gauss, expbump, arctan; got `{other}`"
                ))
            }
        };

        let r0 = opt(&self.r0, "r0", parse_f64)?.unwrap_or(0.45);
        let h0 = opt(&self.h0, "h0", parse_f64)?.unwrap_or(1.0);
        let g = opt(&self.g, "g", parse_f64)?.unwrap_or(1.0);
        let center = opt(&self.center, "center", parse_pair)?.unwrap_or([0.5, 0.5]);
        let uinf = opt(&self.uinf, "uinf", parse_pair)?.unwrap_or([1.0, 1.0]);

        let hmin = opt(&self.hmin, "hmin", parse_f64)?;
        let gamma_amp = opt(&self.gamma_amp, "gamma-amp", parse_f64)?;
        let spec = match (hmin, gamma_amp) {
            (Some(_), Some(_)) => {
                return err("hmin, gamma-amp: mutually exclusive; give at most one")
            }
            (_, Some(gamma)) => VortexSpec::new(family, r0, h0, gamma, g, center, uinf),
            (hmin, None) => {
                VortexSpec::calibrated(family, r0, h0, hmin.unwrap_or(0.99), g, center, uinf)
            }
        }
        .map_err(|e| ConfigError(format!("vortex parameters: {e}")))?;

        let euler = match self.euler.as_deref() {
            None => None,
            Some(kind) => {
                let kind = match kind {
                    "isentropic" => EulerKind::Isentropic,
                    "isochoric" => EulerKind::Isochoric,
                    other => {
                        return err(format!(
                            "euler: expected `isentropic` or `isochoric`, got `{other}`"
                        ))
                    }
                };
                let gas_gamma = opt(&self.gas_gamma, "gas-gamma", parse_f64)?.unwrap_or(1.4);
                let rho0 = opt(&self.rho0, "rho0", parse_f64)?.unwrap_or(1.0);
                let p0 = opt(&self.p0, "p0", parse_f64)?.unwrap_or(1.0);
                Some(
                    EulerVortexField::new(kind, gas_gamma, rho0, p0, spec)
                        .map_err(|e| ConfigError(format!("euler parameters: {e}")))?,
                )
            }
        };

        let domain = match self.domain.as_deref() {
            None => [0.0, 0.0, 1.0, 1.0],
            Some(s) => {
                let parts: Vec<&str> = s.split(',').collect();
                if parts.len() != 4 {
                    return err(format!("domain: expected `X0,Y0,X1,Y1`, got `{s}`"));
                }
                let mut d = [0.0; 4];
                for (slot, part) in d.iter_mut().zip(&parts) {
                    *slot = parse_f64("domain", part)?;
                }
                d
            }
        };

        let study = StudyConfig {
            domain,
            cfl: opt(&self.cfl, "cfl", parse_f64)?.unwrap_or(0.95),
            t_final: opt(&self.tfinal, "tfinal", parse_f64)?.unwrap_or(1.0),
            quad_order: opt(&self.quad, "quad", parse_usize)?.unwrap_or(4),
        };
        if !(study.cfl > 0.0) {
            return err(format!("cfl: must be positive, got {}", study.cfl));
        }
        if study.quad_order == 0 {
            return err("quad: must be at least 1");
        }

        let n = opt(&self.n, "N", parse_usize)?.unwrap_or(64);
        let meshes = match self.meshes.as_deref() {
            None => match opt(&self.n, "N", parse_usize)? {
                Some(n) => vec![n],
                None => vec![8, 16, 32, 64, 128, 256, 512],
            },
            Some(s) => {
                let list: Result<Vec<usize>, _> =
                    s.split(',').map(|t| parse_usize("meshes", t)).collect();
                let list = list?;
                if list.is_empty() {
                    return err("meshes: list is empty");
                }
                if !list.windows(2).all(|w| w[0] < w[1]) {
                    return err(format!("meshes: must be strictly increasing, got `{s}`"));
                }
                list
            }
        };

        let points = opt(&self.points, "points", parse_usize)?.unwrap_or(2001);
        if points < 2 {
            return err("points: need at least 2 sample points");
        }
        let rmax = opt(&self.rmax, "rmax", parse_f64)?.unwrap_or((2.0 * r0).max(1.0));
        if !(rmax > 0.0) {
            return err(format!("rmax: must be positive, got {rmax}"));
        }

        Ok(Resolved {
            spec,
            euler,
            study,
            n,
            meshes,
            time: opt(&self.time, "time", parse_f64)?.unwrap_or(0.0),
            points,
            rmax,
            averages: self.averages,
            full_precision: self.full_precision,
        })
    }

    /// Parameter echo recorded in every output file header; sufficient to
    /// rerun the command exactly.
    pub fn echo(&self, resolved: &Resolved) -> Vec<(String, String)> {
        let spec = &resolved.spec;
        let mut items = vec![
            ("tool".to_string(), format!("swevortex {}", env!("CARGO_PKG_VERSION"))),
            (
                "family".to_string(),
                match spec.family {
                    VortexFamily::CosPower { p } => format!("cos p={p}"),
                    VortexFamily::Gaussian => "gauss".to_string(),
                    VortexFamily::ExpBump { p } => format!("expbump p={p}"),
                    VortexFamily::ArctanBump { p } => format!("arctan p={p}"),
                },
            ),
            ("r0".to_string(), format!("{:e}", spec.r0)),
            ("h0".to_string(), format!("{:e}", spec.h0)),
            ("gamma-amp".to_string(), format!("{:e}", spec.gamma_amp)),
            ("g".to_string(), format!("{:e}", spec.g)),
            ("center".to_string(), format!("{:e},{:e}", spec.center[0], spec.center[1])),
            ("uinf".to_string(), format!("{:e},{:e}", spec.u_inf[0], spec.u_inf[1])),
            ("cfl".to_string(), format!("{:e}", resolved.study.cfl)),
            ("tfinal".to_string(), format!("{:e}", resolved.study.t_final)),
            ("quad".to_string(), resolved.study.quad_order.to_string()),
            (
                "domain".to_string(),
                resolved
                    .study
                    .domain
                    .iter()
                    .map(|v| format!("{v:e}"))
                    .collect::<Vec<_>>()
                    .join(","),
            ),
        ];
        if let Some(euler) = &resolved.euler {
            items.push((
                "euler".to_string(),
                match euler.kind {
                    EulerKind::Isentropic => "isentropic".to_string(),
                    EulerKind::Isochoric => "isochoric".to_string(),
                },
            ));
            items.push(("gas-gamma".to_string(), format!("{:e}", euler.gamma_gas)));
            items.push(("rho0".to_string(), format!("{:e}", euler.rho0)));
            items.push(("p0".to_string(), format!("{:e}", euler.p0)));
        }
        items
    }
}
