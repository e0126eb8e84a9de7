use std::sync::Arc;

use macdaha::daha::{weight_box, Daha};
use macdaha::laurent::monomial_symmetric;
use macdaha::macdonald::MacdonaldTable;
use macdaha::modular::ModularData;
use macdaha::{Error, LaurentPoly, Params, Result, RootSystem, Weight};
use serde_json::json;

use crate::args::{DahaCmd, MacCmd, ModularCmd};
use crate::cache::{self, Field};
use crate::config::{trivial_off, Domain, RunConfig};
use crate::report::{Record, Report};

macro_rules! with_domain {
    ($dom:expr, $p:ident => $body:expr) => {
        match $dom {
            Domain::Rational($p) => $body,
            Domain::Symbolic($p) => $body,
            Domain::Cyclotomic($p) => $body,
        }
    };
}

fn report(command: &str, cfg: &RunConfig, data: Option<serde_json::Value>, records: Vec<Record>) -> Report {
    Report { command: command.into(), config: cfg.to_json(), data, records }
}

pub fn roots_show(cfg: &RunConfig) -> Result<Report> {
    let rs = cfg.system()?;
    Ok(report("roots show", cfg, Some(rs.to_json()), vec![]))
}

pub fn mac(cfg: &RunConfig, what: MacCmd) -> Result<Report> {
    let rs = cfg.system()?;
    let mut dom = cfg.domain(&rs)?;
    if let MacCmd::Shift = what {
        let v = cfg.shift_classes(&rs)?;
        if cfg.t.is_none() && cfg.k.is_none() {
            dom = match dom {
                Domain::Rational(p) => Domain::Rational(trivial_off(p, &v)),
                Domain::Symbolic(p) => Domain::Symbolic(trivial_off(p, &v)),
                Domain::Cyclotomic(p) => Domain::Cyclotomic(trivial_off(p, &v)),
            };
        }
    }
    let name = format!("mac {}", format!("{what:?}").to_lowercase());
    let (data, records) = with_domain!(dom, p => mac_in(cfg, rs, p, what)?);
    Ok(report(&name, cfg, data, records))
}

fn mac_in<S: Field>(cfg: &RunConfig, rs: Arc<RootSystem>, p: Params<S>, what: MacCmd) -> Result<(Option<serde_json::Value>, Vec<Record>)> {
    let mut tb = cache::open(rs.clone(), p);
    let mut data = None;
    let mut certs = Vec::new();
    match what {
        MacCmd::Poly => {
            let b = cfg.weight(&rs, "b", &cfg.b)?;
            let pb = tb.poly(&b)?;
            data = Some(json!({"b": b, "poly": pb.to_json()}));
            certs.push(tb.eigenvalue_check(&b)?);
        }
        MacCmd::Eval => {
            let b = cfg.weight(&rs, "b", &cfg.b)?;
            match cfg.k_for(&rs)? {
                Some(k) => {
                    certs.push(tb.evaluation_check_at_k(&b, &k)?);
                    if k.iter().all(|&x| x == 1) {
                        certs.push(tb.character_check(&b)?);
                    }
                }
                None => certs.push(tb.evaluation_check(&b)?),
            }
        }
        MacCmd::Norm => {
            let b = cfg.weight(&rs, "b", &cfg.b)?;
            let k = cfg.k_for(&rs)?.ok_or_else(|| Error::Config("mac norm works at t = q^k: give --k".into()))?;
            certs.push(tb.constant_term_check(&k)?);
            certs.push(tb.norm_check(&b, &k)?);
            certs.push(tb.orthogonality_check(&b, &k)?);
        }
        MacCmd::Duality => {
            let b = cfg.weight(&rs, "b", &cfg.b)?;
            let c = cfg.weight(&rs, "c", &cfg.c)?;
            certs.push(tb.duality_pair(&b, &c)?);
        }
        MacCmd::Pieri => {
            let a = cfg.weight(&rs, "a", &cfg.a)?;
            let b = cfg.weight(&rs, "b", &cfg.b)?;
            certs.push(tb.pieri(&a, &b)?);
            if rs.label() == "A1" && a == [-1] && b[0] < 0 {
                certs.push(tb.three_term_check(-b[0])?);
            }
        }
        MacCmd::Shift => {
            let v = cfg.shift_classes(&rs)?;
            let b = cfg.weight(&rs, "b", &cfg.b)?;
            let mut sh = tb.shifted_table(&v);
            certs.push(tb.shift_check(&v, &b, &mut sh)?);
            let target: Weight = b.iter().zip(tb.r_v(&v)).map(|(x, y)| x + y).collect();
            if rs.is_antidominant(&target) {
                certs.push(tb.key_lemma_check(&v, &b, &mut sh)?);
            }
        }
        MacCmd::Gauss => {
            let b = cfg.weight(&rs, "b", &cfg.b)?;
            certs.push(tb.gaussian_eigen_check(&b, 2, cfg.seed)?);
            certs.push(gauss_adjoint(&tb, &b)?);
        }
    }
    cache::store(&tb);
    Ok((data, certs.into_iter().map(Record::from_cert).collect()))
}

/// Self-adjointness of the Gaussian-twisted m_b on monomials of a unit box and m_{-rho}.
pub fn gauss_adjoint<S: Field>(tb: &MacdonaldTable<S>, b: &[i64]) -> Result<macdaha::certificate::Certificate> {
    let n = tb.d.n();
    let mut tests: Vec<LaurentPoly<S>> = weight_box(n, 1).into_iter().map(LaurentPoly::x).collect();
    tests.push(monomial_symmetric(&tb.d.rs, &vec![-1; n])?);
    tb.d.gaussian_self_adjoint_check(&monomial_symmetric(&tb.d.rs, b)?, &tests)
}

pub fn default_cap(rs: &RootSystem) -> i64 {
    match rs.rank {
        0..=2 => 3,
        3 => 2,
        _ => 1,
    }
}

pub fn daha(cfg: &RunConfig, what: DahaCmd) -> Result<Report> {
    let DahaCmd::Verify = what;
    let rs = cfg.system()?;
    let cap = cfg.cap.unwrap_or_else(|| default_cap(&rs));
    if cap < 0 {
        return Err(Error::Config("--cap must be non-negative".into()));
    }
    let dom = cfg.domain(&rs)?;
    let checks = with_domain!(dom, p => Daha::new(rs.clone(), p).verify_defining_relations(cap));
    let records = checks.into_iter().map(|r| Record::from_relation(&rs.label(), cap, r)).collect();
    Ok(report("daha verify", cfg, None, records))
}

pub fn modular_config(cfg: &RunConfig) -> Result<(Arc<RootSystem>, i64, Vec<i64>)> {
    let rs = cfg.system()?;
    let n = cfg.n.ok_or_else(|| Error::Config("modular commands need --N".into()))?;
    let k = cfg.k_for(&rs)?.unwrap_or_else(|| vec![1; rs.num_classes()]);
    Ok((rs, n, k))
}

pub fn modular(cfg: &RunConfig, what: ModularCmd) -> Result<Report> {
    let (rs, n, k) = modular_config(cfg)?;
    let md = ModularData::build(rs.clone(), n, &k)?;
    let label = rs.label();
    let (name, data, records) = match what {
        ModularCmd::Build => (
            "modular build",
            Some(json!({
                "system": label, "N": n, "k": k, "conductor": md.conductor, "classes": md.classes,
                "size": md.size(), "Btilde": md.btilde, "dual": md.dual,
            })),
            vec![],
        ),
        ModularCmd::Verify => {
            let checks = md.verify(cfg.seed)?;
            ("modular verify", None, checks.into_iter().map(|c| Record::from_modular(&label, n, &k, c)).collect())
        }
        ModularCmd::Export => ("modular export", Some(md.to_json()?), vec![]),
    };
    Ok(report(name, cfg, data, records))
}
