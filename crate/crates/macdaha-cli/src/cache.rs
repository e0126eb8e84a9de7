//! Optional on-disk memo of computed Macdonald polynomials, keyed by a hash of
//! the root system and the parameter values. Enabled by `MACDAHA_CACHE_DIR`.

use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;

use macdaha::daha::Daha;
use macdaha::macdonald::MacdonaldTable;
use macdaha::{LaurentPoly, Params, RootSystem, Scalar, Weight};
use serde::de::DeserializeOwned;
use serde::Serialize;
use sha2::{Digest, Sha256};

pub const ENV: &str = "MACDAHA_CACHE_DIR";

pub trait Field: Scalar + Serialize + DeserializeOwned + Send {}
impl<S: Scalar + Serialize + DeserializeOwned + Send> Field for S {}

type Stored<S> = Vec<(Weight, Vec<(Weight, S)>)>;

fn path_for<S: Scalar>(rs: &RootSystem, p: &Params<S>) -> Option<PathBuf> {
    let dir = std::env::var_os(ENV)?;
    let mut h = Sha256::new();
    h.update(format!("macdaha-table-1|{}|{}|{}", rs.label(), p.mhat, p.q0.canonical()));
    for s in &p.s {
        h.update(format!("|{}", s.canonical()));
    }
    Some(PathBuf::from(dir).join(format!("{:x}.json", h.finalize())))
}

pub fn open<S: Field>(rs: Arc<RootSystem>, p: Params<S>) -> MacdonaldTable<S> {
    let path = path_for(&rs, &p);
    let mut tb = MacdonaldTable::new(Daha::new(rs, p));
    if let Some(text) = path.and_then(|f| std::fs::read_to_string(f).ok()) {
        if let Ok(stored) = serde_json::from_str::<Stored<S>>(&text) {
            for (b, terms) in stored {
                tb.insert(b, LaurentPoly::from_terms(terms));
            }
        }
    }
    tb
}

/// Best effort: write to a temporary file and rename, so concurrent writers never leave a torn file.
pub fn store<S: Field>(tb: &MacdonaldTable<S>) {
    let Some(path) = path_for(&tb.d.rs, &tb.d.p) else { return };
    let stored: Stored<S> = tb.computed().map(|(b, p)| (b.clone(), p.terms().map(|(z, c)| (z.clone(), c.clone())).collect())).collect();
    let Ok(text) = serde_json::to_string(&stored) else { return };
    let _ = std::fs::create_dir_all(path.parent().expect("cache file has a parent"));
    static SEQ: AtomicUsize = AtomicUsize::new(0);
    let tmp = path.with_extension(format!("tmp{}-{}", std::process::id(), SEQ.fetch_add(1, Ordering::Relaxed)));
    if std::fs::write(&tmp, text).is_ok() {
        let _ = std::fs::rename(&tmp, &path);
    }
}
