use std::sync::Arc;

use macdaha::coeffdomain::{parse_rational, rational_sqrt};
use macdaha::{BigRational, Cyclo, Error, Params, RatFunc, Result, RootSystem, Scalar, SpecPair, Weight};
use serde_json::{json, Value};

use crate::args::{Format, Mode, Opts};

/// Validated options, before a domain is chosen.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub rs: Option<Arc<RootSystem>>,
    pub mode: Mode,
    pub q0: BigRational,
    pub t: Option<Vec<BigRational>>,
    pub k: Option<String>,
    pub n: Option<i64>,
    pub b: Option<String>,
    pub c: Option<String>,
    pub a: Option<String>,
    pub classes: Option<String>,
    pub cap: Option<i64>,
    pub seed: u64,
    pub format: Format,
    pub jobs: usize,
    pub max_rank: usize,
}

pub enum Domain {
    Rational(Params<SpecPair>),
    Symbolic(Params<RatFunc>),
    Cyclotomic(Params<Cyclo>),
}

fn cfg(msg: impl Into<String>) -> Error {
    Error::Config(msg.into())
}

pub fn parse_ints(s: &str) -> Result<Vec<i64>> {
    s.split(',').map(|x| x.trim().parse::<i64>().map_err(|_| cfg(format!("not an integer list: {s}")))).collect()
}

impl RunConfig {
    pub fn from_opts(o: &Opts) -> Result<Self> {
        let rs = o.system.as_deref().map(RootSystem::from_label).transpose()?.map(Arc::new);
        let t = o
            .t
            .as_deref()
            .map(|s| s.split(',').map(parse_rational).collect::<Result<Vec<_>>>())
            .transpose()?;
        if o.jobs == 0 {
            return Err(cfg("--jobs must be at least 1"));
        }
        Ok(RunConfig {
            rs,
            mode: o.mode,
            q0: parse_rational(&o.q0)?,
            t,
            k: o.k.clone(),
            n: o.n,
            b: o.b.clone(),
            c: o.c.clone(),
            a: o.a.clone(),
            classes: o.classes.clone(),
            cap: o.cap,
            seed: o.seed,
            format: o.format,
            jobs: o.jobs,
            max_rank: o.max_rank,
        })
    }

    pub fn system(&self) -> Result<Arc<RootSystem>> {
        self.rs.clone().ok_or_else(|| cfg("--system is required"))
    }

    /// k per class; a single value applies to every class.
    pub fn k_for(&self, rs: &RootSystem) -> Result<Option<Vec<i64>>> {
        let Some(s) = &self.k else { return Ok(None) };
        let k = parse_ints(s)?;
        let k = match k.len() {
            1 => vec![k[0]; rs.num_classes()],
            n if n == rs.num_classes() => k,
            n => return Err(cfg(format!("{} has {} length classes, got {n} k-values", rs.label(), rs.num_classes()))),
        };
        if k.iter().any(|&x| x < 0) {
            return Err(cfg("k must be non-negative"));
        }
        Ok(Some(k))
    }

    /// An anti-dominant weight given on the command line.
    pub fn weight(&self, rs: &RootSystem, flag: &str, v: &Option<String>) -> Result<Weight> {
        let s = v.as_deref().ok_or_else(|| cfg(format!("--{flag} is required")))?;
        let b = parse_ints(s)?;
        if b.len() != rs.rank {
            return Err(cfg(format!("--{flag} needs {} coordinates for {}", rs.rank, rs.label())));
        }
        if !rs.is_antidominant(&b) {
            let (anti, _) = rs.to_antidominant(&b);
            return Err(cfg(format!(
                "--{flag} {s} is not anti-dominant; weights are indexed by anti-dominant b (its W-orbit representative is {})",
                anti.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
            )));
        }
        Ok(b)
    }

    pub fn shift_classes(&self, rs: &RootSystem) -> Result<Vec<usize>> {
        let v: Vec<usize> = match &self.classes {
            None => (0..rs.num_classes()).collect(),
            Some(s) => parse_ints(s)?.into_iter().map(|x| x as usize).collect(),
        };
        if v.is_empty() || v.iter().any(|&c| c >= rs.num_classes()) {
            return Err(cfg(format!("--classes must list classes below {}", rs.num_classes())));
        }
        Ok(v)
    }

    /// The coefficient domain for a single-table command.
    pub fn domain(&self, rs: &RootSystem) -> Result<Domain> {
        let k = self.k_for(rs)?;
        match self.mode {
            Mode::Rational => {
                if let Some(k) = k {
                    if self.t.is_some() {
                        return Err(cfg("give either --t or --k"));
                    }
                    return Ok(Domain::Rational(Params::rational_at_k(rs, self.q0.clone(), &k)?));
                }
                let s = match &self.t {
                    Some(t) => t
                        .iter()
                        .map(|x| rational_sqrt(x).ok_or_else(|| cfg(format!("t = {x} is not the square of a rational; t^(1/2) must be exact"))))
                        .collect::<Result<Vec<_>>>()?,
                    None => default_s(rs),
                };
                Ok(Domain::Rational(Params::rational(rs, self.q0.clone(), &s)?))
            }
            Mode::Symbolic => {
                if self.t.is_some() {
                    return Err(cfg("--t is not used in symbolic mode"));
                }
                Ok(Domain::Symbolic(match k {
                    Some(k) => Params::symbolic_at_k(rs, &k),
                    None => Params::symbolic(rs),
                }))
            }
            Mode::Cyclotomic => {
                let n = self.n.ok_or_else(|| cfg("cyclotomic mode needs --N"))?;
                let k = k.ok_or_else(|| cfg("cyclotomic mode needs --k"))?;
                if n < 1 {
                    return Err(cfg("--N must be positive"));
                }
                Ok(Domain::Cyclotomic(Params::cyclotomic(rs, Params::conductor_default(rs, n), &k)?))
            }
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "system": self.rs.as_ref().map(|r| r.label()),
            "mode": format!("{:?}", self.mode).to_lowercase(),
            "q0": (self.mode == Mode::Rational).then(|| self.q0.to_string()),
            "t": self.t.as_ref().map(|t| t.iter().map(|x| x.to_string()).collect::<Vec<_>>()),
            "k": self.k,
            "N": self.n,
            "b": self.b,
            "c": self.c,
            "a": self.a,
            "classes": self.classes,
            "cap": self.cap,
            "seed": self.seed,
        })
    }
}

/// s_nu = 5/3, 7/3, ...
pub fn default_s(rs: &RootSystem) -> Vec<BigRational> {
    (0..rs.num_classes()).map(|c| macdaha::coeffdomain::rat(5 + 2 * c as i64, 3)).collect()
}

/// Parameters with t_nu = 1 on the classes outside v.
pub fn trivial_off<S: Scalar>(mut p: Params<S>, v: &[usize]) -> Params<S> {
    for (c, s) in p.s.iter_mut().enumerate() {
        if !v.contains(&c) {
            *s = S::one();
        }
    }
    p
}
