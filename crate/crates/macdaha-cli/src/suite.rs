use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, Mutex};

use macdaha::daha::{weight_box, Daha};
use macdaha::macdonald::MacdonaldTable;
use macdaha::modular::ModularData;
use macdaha::{BigRational, Error, Params, Result, RootSystem, SpecPair, Weight};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::cache::{self, Field};
use crate::commands::{default_cap, gauss_adjoint};
use crate::config::{default_s, trivial_off, RunConfig};
use crate::report::{Record, Report};

pub const SUITES: [&str; 4] = ["daha", "macdonald", "modular", "all"];
pub const SYSTEMS: [&str; 6] = ["A1", "A2", "B2", "G2", "A3", "B3"];

type Job = Box<dyn Fn() -> Result<Vec<Record>> + Send + Sync>;

pub struct Item {
    /// Which family of identities the item checks.
    pub family: &'static str,
    pub label: String,
    pub system: String,
    pub run: Job,
}

fn item(family: &'static str, label: impl Into<String>, rs: &RootSystem, run: impl Fn() -> Result<Vec<Record>> + Send + Sync + 'static) -> Item {
    Item { family, label: label.into(), system: rs.label(), run: Box::new(run) }
}

/// Anti-dominant b with 0 < -sum(b) <= level (b = 0 too if asked).
pub fn antidominant_upto(rs: &RootSystem, level: i64, with_zero: bool) -> Vec<Weight> {
    weight_box(rs.rank, level)
        .into_iter()
        .filter(|b| {
            let l = -b.iter().sum::<i64>();
            rs.is_antidominant(b) && l <= level && (l > 0 || with_zero)
        })
        .collect()
}

fn certs(cs: Vec<macdaha::certificate::Certificate>) -> Vec<Record> {
    cs.into_iter().map(Record::from_cert).collect()
}

fn symbolic_grid(rs: &RootSystem) -> bool {
    matches!(rs.label().as_str(), "A1" | "A2" | "B2")
}

fn level(rs: &RootSystem) -> i64 {
    if rs.rank <= 2 {
        3
    } else {
        2
    }
}

fn rational(rs: &RootSystem) -> Result<Params<SpecPair>> {
    Params::rational(rs, macdaha::coeffdomain::rat(3, 7), &default_s(rs))
}

/// A small rational away from 0 and +-1.
fn small_rational(rng: &mut ChaCha8Rng) -> BigRational {
    loop {
        let (n, d) = (rng.gen_range(2..=9i64), rng.gen_range(1..=9i64));
        if n != d {
            return macdaha::coeffdomain::rat(n, d);
        }
    }
}

pub fn systems(cfg: &RunConfig) -> Vec<Arc<RootSystem>> {
    let all: Vec<Arc<RootSystem>> = match &cfg.rs {
        Some(rs) => vec![rs.clone()],
        None => SYSTEMS.iter().map(|l| Arc::new(RootSystem::from_label(l).expect("known label"))).collect(),
    };
    all.into_iter().filter(|rs| rs.rank <= cfg.max_rank).collect()
}

pub fn daha_items(cfg: &RunConfig) -> Vec<Item> {
    systems(cfg)
        .into_iter()
        .map(|rs| {
            let cap = cfg.cap.unwrap_or_else(|| default_cap(&rs));
            let r = rs.clone();
            item("relations", format!("relations cap {cap}"), &rs, move || {
                let d = Daha::new(r.clone(), Params::symbolic(&r));
                Ok(d.verify_defining_relations(cap).into_iter().map(|c| Record::from_relation(&r.label(), cap, c)).collect())
            })
        })
        .collect()
}

fn eigen_and_evaluation<S: Field>(mut tb: MacdonaldTable<S>, bs: &[Weight]) -> Result<Vec<Record>> {
    let mut out = Vec::new();
    for b in bs {
        out.push(tb.eigenvalue_check(b)?);
        out.push(tb.evaluation_check(b)?);
    }
    cache::store(&tb);
    Ok(certs(out))
}

fn duality_all<S: Field>(mut tb: MacdonaldTable<S>, bs: &[Weight], point: Option<serde_json::Value>) -> Result<Vec<Record>> {
    let mut out = Vec::new();
    for i in 0..bs.len() {
        for j in i..bs.len() {
            let mut r = Record::from_cert(tb.duality_pair(&bs[i], &bs[j])?);
            if let Some(pt) = &point {
                r.detail["point"] = pt.clone();
            }
            out.push(r);
        }
    }
    cache::store(&tb);
    Ok(out)
}

pub fn macdonald_items(cfg: &RunConfig) -> Vec<Item> {
    let mut items = Vec::new();
    for rs in systems(cfg) {
        let bs = antidominant_upto(&rs, level(&rs), false);
        let sym = symbolic_grid(&rs);

        {
            let (r, bs) = (rs.clone(), bs.clone());
            items.push(item("eigenvalue", "eigenvalue and evaluation", &rs, move || {
                if sym {
                    eigen_and_evaluation(cache::open(r.clone(), Params::symbolic(&r)), &bs)
                } else {
                    eigen_and_evaluation(cache::open(r.clone(), rational(&r)?), &bs)
                }
            }));
        }

        if sym {
            let (r, bs) = (rs.clone(), bs.clone());
            items.push(item("duality", "duality symbolic", &rs, move || duality_all(cache::open(r.clone(), Params::symbolic(&r)), &bs, None)));
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x5eed_d0a1);
            let bs = antidominant_upto(&rs, 2, false);
            for k in 0..3 {
                let q0 = small_rational(&mut rng);
                let s: Vec<BigRational> = (0..rs.num_classes()).map(|_| small_rational(&mut rng)).collect();
                let (r, bs) = (rs.clone(), bs.clone());
                let pt = json!({"index": k, "q0": q0.to_string(), "s": s.iter().map(|x| x.to_string()).collect::<Vec<_>>()});
                items.push(item("duality", format!("duality point {k}"), &rs, move || {
                    duality_all(cache::open(r.clone(), Params::rational(&r, q0.clone(), &s)?), &bs, Some(pt.clone()))
                }));
            }
        }

        // evaluation at t = q^k and the character oracle at t = q
        for kk in [1, 2] {
            let r = rs.clone();
            let bs = antidominant_upto(&rs, level(&rs), false);
            items.push(item("evaluation", format!("evaluation at k={kk}"), &rs, move || {
                let k = vec![kk; r.num_classes()];
                let mut tb = cache::open(r.clone(), Params::symbolic_at_k(&r, &k));
                let mut out = Vec::new();
                for b in &bs {
                    out.push(tb.evaluation_check_at_k(b, &k)?);
                    if kk == 1 {
                        out.push(tb.character_check(b)?);
                    }
                }
                cache::store(&tb);
                Ok(certs(out))
            }));
        }

        if rs.rank <= 2 {
            for kk in [1, 2] {
                let r = rs.clone();
                let bs = bs.clone();
                items.push(item("norms", format!("norms at k={kk}"), &rs, move || {
                    let k = vec![kk; r.num_classes()];
                    let mut tb = cache::open(r.clone(), Params::symbolic_at_k(&r, &k));
                    let mut out = vec![tb.constant_term_check(&k)?];
                    for b in &bs {
                        out.push(tb.norm_check(b, &k)?);
                        out.push(tb.orthogonality_check(b, &k)?);
                    }
                    cache::store(&tb);
                    Ok(certs(out))
                }));
            }
        }
        if sym {
            let r = rs.clone();
            items.push(item("norms", "fmg at k=1", &rs, move || {
                let k = vec![1; r.num_classes()];
                let mut tb = cache::open(r.clone(), Params::symbolic_at_k(&r, &k));
                let mut out = Vec::new();
                for a in antidominant_upto(&r, 2, false) {
                    for b in r.dominance_span(&a) {
                        out.push(tb.fmg_check_at_k(&a, &b, &k)?);
                    }
                }
                cache::store(&tb);
                Ok(certs(out))
            }));
        }

        if rs.rank <= 2 {
            let r = rs.clone();
            let bs0 = antidominant_upto(&rs, level(&rs), true);
            items.push(item("pieri", "pieri", &rs, move || {
                let mut tb = cache::open(r.clone(), rational(&r)?);
                let mut out = Vec::new();
                for i in 0..r.rank {
                    let mut a = vec![0; r.rank];
                    a[i] = -1;
                    for b in &bs0 {
                        out.push(tb.pieri(&a, b)?);
                    }
                }
                cache::store(&tb);
                Ok(certs(out))
            }));
        }

        if rs.label() == "A1" {
            let r = rs.clone();
            items.push(item("pieri", "three-term recurrence", &rs, move || {
                let mut tb = cache::open(r.clone(), Params::symbolic(&r));
                let out = (1..=3).map(|n| tb.three_term_check(n)).collect::<Result<Vec<_>>>()?;
                cache::store(&tb);
                Ok(certs(out))
            }));
        }

        if matches!(rs.label().as_str(), "A1" | "A2") {
            let r = rs.clone();
            items.push(item("shift", "shift and key lemma", &rs, move || shift_family(&r, trivial_off(Params::symbolic(&r), &[0]), &[0])));
            let r = rs.clone();
            let seed = cfg.seed;
            items.push(item("gaussian", "gaussian", &rs, move || {
                let mut tb = cache::open(r.clone(), rational(&r)?);
                let mut out = Vec::new();
                for b in antidominant_upto(&r, 2, false) {
                    out.push(tb.gaussian_eigen_check(&b, 2, seed)?);
                    out.push(gauss_adjoint(&tb, &b)?);
                }
                cache::store(&tb);
                Ok(certs(out))
            }));
        }
    }
    items
}

fn shift_family<S: Field>(rs: &Arc<RootSystem>, p: Params<S>, v: &[usize]) -> Result<Vec<Record>> {
    let mut tb = cache::open(rs.clone(), p);
    let mut sh = tb.shifted_table(v);
    let mut out = Vec::new();
    for b in antidominant_upto(rs, 2, true) {
        out.push(tb.shift_check(v, &b, &mut sh)?);
        let target: Weight = b.iter().zip(tb.r_v(v)).map(|(x, y)| x + y).collect();
        if rs.is_antidominant(&target) {
            out.push(tb.key_lemma_check(v, &b, &mut sh)?);
        }
    }
    cache::store(&tb);
    Ok(certs(out))
}

pub const MODULAR_GRID: [(&str, i64, i64); 10] =
    [("A1", 3, 1), ("A1", 3, 2), ("A1", 5, 1), ("A1", 5, 2), ("A1", 8, 1), ("A1", 8, 2), ("A2", 4, 1), ("A2", 5, 1), ("B2", 6, 1), ("B2", 10, 1)];

pub fn modular_items(cfg: &RunConfig) -> Vec<Item> {
    let chosen: Vec<String> = systems(cfg).iter().map(|r| r.label()).collect();
    let seed = cfg.seed;
    MODULAR_GRID
        .iter()
        .filter(|(l, _, _)| chosen.iter().any(|c| c == l))
        .map(|&(l, n, kk)| {
            let rs = Arc::new(RootSystem::from_label(l).expect("known label"));
            let r = rs.clone();
            item("modular", format!("modular N={n} k={kk}"), &rs, move || {
                let k = vec![kk; r.num_classes()];
                let label = r.label();
                match ModularData::build(r.clone(), n, &k) {
                    Ok(md) => Ok(md.verify(seed)?.into_iter().map(|c| Record::from_modular(&label, n, &k, c)).collect()),
                    Err(Error::Precondition(m)) => {
                        let mut rec = Record::new("refused", &label, true, json!({"N": n, "k": k, "detail": m}));
                        rec.gating = false;
                        Ok(vec![rec])
                    }
                    Err(e) => Err(e),
                }
            })
        })
        .collect()
}

pub fn items(name: &str, cfg: &RunConfig) -> Result<Vec<Item>> {
    Ok(match name {
        "daha" => daha_items(cfg),
        "macdonald" => macdonald_items(cfg),
        "modular" => modular_items(cfg),
        "all" => {
            let mut v = daha_items(cfg);
            v.extend(macdonald_items(cfg));
            v.extend(modular_items(cfg));
            v
        }
        _ => return Err(Error::Config(format!("unknown suite {name}; expected one of {}", SUITES.join(", ")))),
    })
}

/// Runs items on `jobs` workers; results come back in item order.
pub fn run_items(items: &[Item], jobs: usize) -> Vec<Record> {
    let next = AtomicUsize::new(0);
    let slots: Vec<Mutex<Option<Vec<Record>>>> = items.iter().map(|_| Mutex::new(None)).collect();
    std::thread::scope(|s| {
        for _ in 0..jobs.min(items.len()).max(1) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                let Some(it) = items.get(i) else { break };
                let recs = match (it.run)() {
                    Ok(r) => r,
                    Err(e) => vec![Record::error(&it.label, &it.system, &e)],
                };
                *slots[i].lock().expect("slot lock") = Some(recs);
            });
        }
    });
    slots.into_iter().flat_map(|m| m.into_inner().expect("slot lock").expect("item ran")).collect()
}

pub fn run_suite(name: &str, cfg: &RunConfig) -> Result<Report> {
    let items = items(name, cfg)?;
    if items.is_empty() {
        return Err(Error::Config("no systems selected; check --system and --max-rank".into()));
    }
    Ok(suite_report(name, cfg, run_items(&items, cfg.jobs)))
}

pub fn suite_report(name: &str, cfg: &RunConfig, records: Vec<Record>) -> Report {
    let mut config = cfg.to_json();
    config["max_rank"] = json!(cfg.max_rank);
    Report { command: format!("suite {name}"), config, data: None, records }
}
