//! Settings merged from a key = value file and command-line flags.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::cyclic::{coset_generator_poly, cosets_from_reps, DistanceOptions, DEFAULT_BUDGET, DEFAULT_MC_SAMPLES};
use crate::error::{Error, Result};
use crate::field::{multiplicative_order, Field};
use crate::poly::{reduce_mod_xn1, Poly};
use crate::qc::{trace_h, DualForm};

pub const DEFAULT_SEED: u64 = 0;

pub const KEYS: &[&str] = &[
    "n",
    "p",
    "r",
    "f",
    "g",
    "h",
    "form",
    "f-cosets",
    "g-cosets",
    "budget",
    "mc-samples",
    "seed",
    "workers",
    "all-pairs",
];

/// Raw values by key, in the order they were set.
#[derive(Clone, Debug, Default)]
pub struct RawConfig {
    pub values: BTreeMap<String, String>,
}

impl RawConfig {
    pub fn parse(text: &str) -> Result<RawConfig> {
        let mut values = BTreeMap::new();
        for (no, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("line {}: expected key = value", no + 1)))?;
            let k = k.trim().replace('_', "-");
            if !KEYS.contains(&k.as_str()) {
                return Err(Error::Parse(format!("line {}: unknown key {k:?}", no + 1)));
            }
            values.insert(k, v.trim().to_string());
        }
        Ok(RawConfig { values })
    }

    pub fn set(&mut self, key: &str, value: impl Into<String>) {
        self.values.insert(key.to_string(), value.into());
    }

    fn get(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }

    fn num<T: std::str::FromStr>(&self, key: &str) -> Result<Option<T>> {
        self.get(key)
            .map(|v| {
                let v = v.replace('_', "");
                let parsed = match v.strip_prefix("0x") {
                    Some(hex) => u64::from_str_radix(hex, 16)
                        .ok()
                        .and_then(|x| x.to_string().parse().ok()),
                    None => v.parse().ok(),
                };
                parsed.ok_or_else(|| Error::Parse(format!("{key}: bad number {v:?}")))
            })
            .transpose()
    }
}

/// Generator source for f or g.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Selector {
    Poly(String),
    /// Coset representatives; the generator is the product over the
    /// cosets they name.
    Cosets(Vec<usize>),
}

impl Selector {
    fn parse(text: &str) -> Result<Selector> {
        match text.strip_prefix("cosets:") {
            Some(rest) => Ok(Selector::Cosets(parse_reps(rest)?)),
            None => Ok(Selector::Poly(
                text.strip_prefix("poly:").unwrap_or(text).trim().to_string(),
            )),
        }
    }

    pub fn resolve(&self, field: &Field, n: usize) -> Result<Poly> {
        match self {
            Selector::Poly(s) => Poly::parse(field, s),
            Selector::Cosets(reps) => {
                let cosets = cosets_from_reps(reps, n, field.order())?;
                coset_generator_poly(n, field, &cosets)
            }
        }
    }
}

pub fn parse_reps(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse()
                .map_err(|_| Error::Parse(format!("bad coset representative {s:?}")))
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum HSource {
    Poly(String),
    /// x + 1
    Linear,
    /// x^p - x
    ArtinSchreier,
    /// The trace construction with the given s and m = ord_n(q).
    Trace(u32),
}

impl HSource {
    fn parse(text: &str) -> Result<HSource> {
        let t = text.trim();
        Ok(match t {
            "linear" => HSource::Linear,
            "artin-schreier" => HSource::ArtinSchreier,
            _ => match t.strip_prefix("trace:") {
                Some(s) => HSource::Trace(
                    s.trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad trace parameter {s:?}")))?,
                ),
                None => HSource::Poly(t.strip_prefix("poly:").unwrap_or(t).to_string()),
            },
        })
    }

    pub fn resolve(&self, field: &Field, n: usize) -> Result<Poly> {
        let h = match self {
            HSource::Poly(s) => Poly::parse(field, s)?,
            HSource::Linear => Poly::parse(field, "x + 1")?,
            HSource::ArtinSchreier => Poly::monomial(field, 1, field.p() as usize).sub(&Poly::x(field)),
            HSource::Trace(s) => {
                let m = multiplicative_order(field.order(), n as u64)? as u32;
                trace_h(field, m, *s, n)?
            }
        };
        Ok(reduce_mod_xn1(&h, n))
    }
}

/// Fully validated settings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Settings {
    pub n: usize,
    pub p: u64,
    pub r: u32,
    pub f: Selector,
    pub g: Selector,
    pub h: HSource,
    pub forms: Vec<DualForm>,
    pub budget: u64,
    pub mc_samples: u64,
    pub seed: u64,
    #[serde(skip)]
    pub workers: Option<usize>,
    /// Search only: pair every f subset with every g subset rather than
    /// only subsets of g.
    pub all_pairs: bool,
    /// Search only: explicit coset pools; None means all cosets.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f_pool: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub g_pool: Option<Vec<usize>>,
}

impl Settings {
    pub fn from_raw(raw: &RawConfig) -> Result<Settings> {
        let n: usize = raw.num("n")?.ok_or_else(|| Error::Parse("n is required".into()))?;
        let p: u64 = raw.num("p")?.unwrap_or(2);
        let r: u32 = raw.num("r")?.unwrap_or(1);
        let f_pool = raw.get("f-cosets").map(parse_reps).transpose()?;
        let g_pool = raw.get("g-cosets").map(parse_reps).transpose()?;
        let pick = |key: &str, pool: &Option<Vec<usize>>| -> Result<Selector> {
            match (raw.get(key), pool) {
                (Some(v), _) => Selector::parse(v),
                (None, Some(reps)) => Ok(Selector::Cosets(reps.clone())),
                (None, None) => Ok(Selector::Poly("1".into())),
            }
        };
        let forms = match raw.get("form") {
            None => vec![DualForm::Symplectic],
            Some(v) => {
                let mut out = Vec::new();
                for s in v.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                    let form: DualForm = s.parse()?;
                    if !out.contains(&form) {
                        out.push(form);
                    }
                }
                out
            }
        };
        let all_pairs = match raw.get("all-pairs") {
            None => false,
            Some("true" | "1" | "yes" | "") => true,
            Some("false" | "0" | "no") => false,
            Some(v) => return Err(Error::Parse(format!("all-pairs: expected a boolean, got {v:?}"))),
        };
        Ok(Settings {
            n,
            p,
            r,
            f: pick("f", &f_pool)?,
            g: pick("g", &g_pool)?,
            h: raw.get("h").map(HSource::parse).transpose()?.unwrap_or(HSource::Linear),
            forms,
            budget: raw.num("budget")?.unwrap_or(DEFAULT_BUDGET),
            mc_samples: raw.num("mc-samples")?.unwrap_or(DEFAULT_MC_SAMPLES),
            seed: raw.num("seed")?.unwrap_or(DEFAULT_SEED),
            workers: raw.num("workers")?,
            all_pairs,
            f_pool,
            g_pool,
        })
    }

    pub fn field(&self) -> Result<Field> {
        Field::new(self.p, self.r)
    }

    pub fn distance_options(&self) -> DistanceOptions {
        DistanceOptions {
            budget: self.budget,
            mc_samples: self.mc_samples,
            seed: self.seed,
            workers: self.workers,
        }
    }

    /// The settings as a config file that reproduces them.
    pub fn to_config_text(&self) -> String {
        let sel = |s: &Selector| match s {
            Selector::Poly(p) => format!("poly:{p}"),
            Selector::Cosets(r) => format!("cosets:{}", join(r)),
        };
        let h = match &self.h {
            HSource::Poly(p) => format!("poly:{p}"),
            HSource::Linear => "linear".into(),
            HSource::ArtinSchreier => "artin-schreier".into(),
            HSource::Trace(s) => format!("trace:{s}"),
        };
        let forms: Vec<&str> = self.forms.iter().map(|f| f.label()).collect();
        let mut out = format!(
            "n = {}\np = {}\nr = {}\nf = {}\ng = {}\nh = {}\nform = {}\nbudget = {}\nmc-samples = {}\nseed = {}\n",
            self.n,
            self.p,
            self.r,
            sel(&self.f),
            sel(&self.g),
            h,
            forms.join(","),
            self.budget,
            self.mc_samples,
            self.seed
        );
        for (key, pool) in [("f-cosets", &self.f_pool), ("g-cosets", &self.g_pool)] {
            if let Some(reps) = pool {
                out.push_str(&format!("{key} = {}\n", join(reps)));
            }
        }
        if self.all_pairs {
            out.push_str("all-pairs = true\n");
        }
        out
    }
}

fn join(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}
