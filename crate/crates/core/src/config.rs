//! `key = value` run configuration.
//!
//! One assignment per line; blank lines and lines starting with `#` are
//! ignored. Angles accept the `k*pi/m` syntax and stay exact.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use crate::angle::Angle;
use crate::cutoff::Smoothness;
use crate::error::{Error, Result};
use crate::exponents::{laplace_exponent, BcKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Problem {
    #[default]
    Laplace,
    Stokes,
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Problem::Laplace => "laplace",
            Problem::Stokes => "stokes",
        })
    }
}

impl FromStr for Problem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "laplace" => Ok(Problem::Laplace),
            "stokes" => Ok(Problem::Stokes),
            _ => Err(Error::validation("problem", format!("expected laplace or stokes, got `{s}`"))),
        }
    }
}

/// Either an explicit exponent or a Laplace boundary-condition preset.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExponentSelector {
    Lambda(f64),
    Preset { bc: BcKind, k: u32 },
}

impl fmt::Display for ExponentSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExponentSelector::Lambda(l) => write!(f, "lambda = {l:?}"),
            ExponentSelector::Preset { bc, k } => write!(f, "preset = {}:{k}", bc.short_name()),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub problem: Problem,
    pub omega: Angle,
    pub exponent: ExponentSelector,
    pub c1: f64,
    pub c2: f64,
    pub r0: f64,
    pub r1: f64,
    pub profile: Smoothness,
    pub out: PathBuf,
    pub tol: f64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            problem: Problem::Laplace,
            omega: Angle::pi_fraction(3, 2).expect("valid angle"),
            exponent: ExponentSelector::Preset {
                bc: BcKind::DirichletDirichlet,
                k: 1,
            },
            c1: 0.0,
            c2: 1.0,
            r0: 0.25,
            r1: 0.75,
            profile: Smoothness::C2Quintic,
            out: PathBuf::from("out"),
            tol: 1e-10,
        }
    }
}

const KEYS: [&str; 11] = [
    "problem", "omega", "lambda", "preset", "c1", "c2", "r0", "r1", "profile", "out", "tol",
];

/// Parses `dd:1`.
pub fn parse_preset(s: &str) -> Result<(BcKind, u32)> {
    let bad = || Error::validation("preset", format!("expected <bc>:<k> such as dd:1, got `{s}`"));
    let (bc, k) = s.split_once(':').ok_or_else(bad)?;
    Ok((bc.trim().parse()?, k.trim().parse().map_err(|_| bad())?))
}

/// Plain decimal or a fraction `p/q`.
pub fn parse_real(field: &str, s: &str) -> Result<f64> {
    let bad = || Error::validation(field, format!("not a number: `{s}`"));
    let v = match s.split_once('/') {
        Some((p, q)) => {
            let p: f64 = p.trim().parse().map_err(|_| bad())?;
            let q: f64 = q.trim().parse().map_err(|_| bad())?;
            p / q
        }
        None => s.trim().parse().map_err(|_| bad())?,
    };
    if !v.is_finite() {
        return Err(bad());
    }
    Ok(v)
}

fn positive(field: &str, v: f64) -> Result<f64> {
    if v > 0.0 {
        Ok(v)
    } else {
        Err(Error::validation(field, format!("must be positive, got {v}")))
    }
}

pub fn parse_config(text: &str) -> Result<RunConfig> {
    let mut cfg = RunConfig::default();
    let mut seen: Vec<&str> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let key_col = raw.len() - trimmed.len() + 1;
        let Some((key, value)) = trimmed.split_once('=') else {
            return Err(Error::Parse {
                line,
                column: key_col,
                message: "expected `key = value`".into(),
            });
        };
        let key = key.trim();
        let value = value.trim();
        let Some(&known) = KEYS.iter().find(|k| **k == key) else {
            return Err(Error::Parse {
                line,
                column: key_col,
                message: format!("unknown key `{key}`"),
            });
        };
        let clash = match known {
            "lambda" => seen.contains(&"preset"),
            "preset" => seen.contains(&"lambda"),
            _ => false,
        };
        if seen.contains(&known) || clash {
            return Err(Error::Parse {
                line,
                column: key_col,
                message: format!("`{key}` conflicts with an earlier line"),
            });
        }
        seen.push(known);
        match known {
            "problem" => cfg.problem = value.parse()?,
            "omega" => cfg.omega = value.parse()?,
            "lambda" => cfg.exponent = ExponentSelector::Lambda(parse_real("lambda", value)?),
            "preset" => {
                let (bc, k) = parse_preset(value)?;
                cfg.exponent = ExponentSelector::Preset { bc, k };
            }
            "c1" => cfg.c1 = parse_real("c1", value)?,
            "c2" => cfg.c2 = parse_real("c2", value)?,
            "r0" => cfg.r0 = positive("r0", parse_real("r0", value)?)?,
            "r1" => cfg.r1 = positive("r1", parse_real("r1", value)?)?,
            "profile" => cfg.profile = value.parse()?,
            "out" => {
                if value.is_empty() {
                    return Err(Error::validation("out", "empty path"));
                }
                cfg.out = PathBuf::from(value);
            }
            "tol" => cfg.tol = positive("tol", parse_real("tol", value)?)?,
            _ => unreachable!("key list is exhaustive"),
        }
    }
    if cfg.r0 >= cfg.r1 {
        return Err(Error::validation("r1", format!("need r0 < r1, got {} and {}", cfg.r0, cfg.r1)));
    }
    if let ExponentSelector::Preset { bc, k } = cfg.exponent {
        laplace_exponent(cfg.omega, bc, k).map_err(|e| Error::validation("preset", e.to_string()))?;
    }
    Ok(cfg)
}

impl fmt::Display for RunConfig {
    /// Canonical form: every key, fixed order, shortest round-trip floats.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "problem = {}", self.problem)?;
        writeln!(f, "omega = {}", self.omega)?;
        writeln!(f, "{}", self.exponent)?;
        writeln!(f, "c1 = {:?}", self.c1)?;
        writeln!(f, "c2 = {:?}", self.c2)?;
        writeln!(f, "r0 = {:?}", self.r0)?;
        writeln!(f, "r1 = {:?}", self.r1)?;
        writeln!(f, "profile = {}", self.profile)?;
        writeln!(f, "out = {}", self.out.display())?;
        writeln!(f, "tol = {:?}", self.tol)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn omega_fraction_is_exact() {
        let c = parse_config("omega = 3pi/2\n").unwrap();
        assert_eq!(c.omega.radians(), 1.5 * std::f64::consts::PI);
        assert_eq!(c.omega.pi_ratio(), Some((3, 2)));
    }

    #[test]
    fn omega_zero_is_rejected() {
        let e = parse_config("omega = 0").unwrap_err();
        assert!(matches!(e, Error::Validation { ref field, .. } if field == "omega"), "{e}");
    }

    #[test]
    fn parse_errors_have_positions() {
        match parse_config("tol = 1e-8\n  speed = 3\n") {
            Err(Error::Parse { line: 2, column: 3, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_config("omega 3pi/2"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(
            parse_config("lambda = 0.5\npreset = dd:1"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(parse_config("tol = 1\ntol = 2"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn value_errors_name_the_field() {
        for (text, field) in [
            ("tol = -1", "tol"),
            ("r0 = 0.9", "r1"),
            ("preset = dd:0", "preset"),
            ("profile = cubic", "profile"),
            ("lambda = x", "lambda"),
        ] {
            match parse_config(text) {
                Err(Error::Validation { field: f, .. }) => assert_eq!(f, field, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
    }

    #[test]
    fn comments_and_fractions() {
        let c = parse_config("# L-corner\n\nlambda = -2/3\nproblem = stokes\n").unwrap();
        assert_eq!(c.exponent, ExponentSelector::Lambda(-2.0 / 3.0));
        assert_eq!(c.problem, Problem::Stokes);
    }

    fn arb_config() -> impl Strategy<Value = RunConfig> {
        let angle = prop_oneof![
            (1i64..8, 1i64..8)
                .prop_filter("in (0, 2π]", |(p, q)| p <= &(2 * q))
                .prop_map(|(p, q)| Angle::pi_fraction(p, q).unwrap()),
            (0.01f64..std::f64::consts::TAU).prop_map(|r| Angle::from_radians(r).unwrap()),
        ];
        let exponent = prop_oneof![
            (-0.99f64..5.0).prop_map(ExponentSelector::Lambda),
            (1u32..5).prop_map(|k| ExponentSelector::Preset {
                bc: BcKind::DirichletDirichlet,
                k
            }),
            (0u32..5).prop_map(|k| ExponentSelector::Preset {
                bc: BcKind::NeumannNeumann,
                k
            }),
        ];
        (
            prop_oneof![Just(Problem::Laplace), Just(Problem::Stokes)],
            angle,
            exponent,
            (-10.0f64..10.0, -10.0f64..10.0),
            (0.01f64..1.0, 0.01f64..1.0),
            prop_oneof![Just(Smoothness::C2Quintic), Just(Smoothness::CInfExp)],
            "[a-z][a-z0-9_/]{0,12}",
            1e-14f64..1e-2,
        )
            .prop_map(|(problem, omega, exponent, (c1, c2), (r0, dr), profile, out, tol)| RunConfig {
                problem,
                omega,
                exponent,
                c1,
                c2,
                r0,
                r1: r0 + dr,
                profile,
                out: PathBuf::from(out),
                tol,
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn round_trip(cfg in arb_config()) {
            let text = cfg.to_string();
            let parsed = parse_config(&text).unwrap();
            prop_assert_eq!(&parsed, &cfg);
            prop_assert_eq!(parsed.to_string(), text);
        }
    }
}
