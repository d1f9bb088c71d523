//! Normalised structure constants `P-hat_mu P-hat_nu = sum f^lambda_{mu nu} P-hat_lambda`,
//! with an optional on-disk cache.

use std::collections::BTreeMap;
use std::fs::{self, OpenOptions};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::partitions::{c_prime, Partition};
use crate::ring::{parse_ratfunc, RatFunc};

use super::symfunc::{macdonald_p, to_p_basis};

pub const CACHE_ENV: &str = "QBRANCH_CACHE_DIR";
const CACHE_FILE: &str = "structure-constants.txt";
const CACHE_HEADER: &str = "# qbranch structure constants v1";

type Table = BTreeMap<Partition, RatFunc>;

static TABLES: Memo<(Partition, Partition), Table> = Memo::new();

struct DiskState {
    dir: Option<PathBuf>,
    explicit: bool,
    loaded: Option<PathBuf>,
}

static DISK: Mutex<DiskState> = Mutex::new(DiskState {
    dir: None,
    explicit: false,
    loaded: None,
});

/// Overrides the cache directory (`None` disables the disk cache). Without a
/// call, the directory comes from `QBRANCH_CACHE_DIR`.
pub fn set_cache_dir(dir: Option<PathBuf>) {
    let mut d = DISK.lock().expect("cache lock");
    d.dir = dir;
    d.explicit = true;
    d.loaded = None;
}

/// The active cache directory, if any.
pub fn cache_dir() -> Option<PathBuf> {
    let d = DISK.lock().expect("cache lock");
    active_dir(&d)
}

fn active_dir(d: &DiskState) -> Option<PathBuf> {
    if d.explicit {
        d.dir.clone()
    } else {
        std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(PathBuf::from)
    }
}

fn ordered(mu: &Partition, nu: &Partition) -> (Partition, Partition) {
    if mu <= nu {
        (mu.clone(), nu.clone())
    } else {
        (nu.clone(), mu.clone())
    }
}

/// All nonzero `f^lambda_{mu nu}` as a map on `lambda`.
pub fn structure_constants(mu: &Partition, nu: &Partition) -> Result<Table> {
    let key = ordered(mu, nu);
    if let Some(t) = TABLES.get(&key) {
        return Ok(t);
    }
    load_disk_once()?;
    if let Some(t) = TABLES.get(&key) {
        return Ok(t);
    }
    let table = compute(&key.0, &key.1);
    TABLES.insert(key.clone(), table.clone());
    append_disk(&key.0, &key.1, &table)?;
    Ok(table)
}

/// A single coefficient `f^lambda_{mu nu}`.
pub fn structure_constant(lam: &Partition, mu: &Partition, nu: &Partition) -> Result<RatFunc> {
    if lam.weight() != mu.weight() + nu.weight() || !lam.contains(mu) || !lam.contains(nu) {
        return Ok(RatFunc::zero());
    }
    if mu.is_empty() {
        return Ok(if lam == nu { RatFunc::one() } else { RatFunc::zero() });
    }
    if nu.is_empty() {
        return Ok(if lam == mu { RatFunc::one() } else { RatFunc::zero() });
    }
    Ok(structure_constants(mu, nu)?
        .get(lam)
        .cloned()
        .unwrap_or_else(RatFunc::zero))
}

fn compute(mu: &Partition, nu: &Partition) -> Table {
    // l(mu)+l(nu) letters suffice: every lambda in the product has at most
    // that many parts
    let n = mu.len() + nu.len();
    let prod = macdonald_p(mu, n).mul(&macdonald_p(nu, n)).expect("same alphabet");
    let pb = to_p_basis(&prod);
    let scale_base = RatFunc::qt(0, (mu.n() + nu.n()) as i32)
        .div(&c_prime(mu).mul(&c_prime(nu)))
        .expect("c' nonzero");
    let mut out = Table::new();
    for (lam, f) in pb.coeffs() {
        let s = scale_base
            .mul(&c_prime(lam))
            .mul(&RatFunc::qt(0, -(lam.n() as i32)));
        out.insert(lam.clone(), f.mul(&s));
    }
    out
}

fn cache_path(dir: &Path) -> PathBuf {
    dir.join(CACHE_FILE)
}

fn load_disk_once() -> Result<()> {
    let mut d = DISK.lock().expect("cache lock");
    let Some(dir) = active_dir(&d) else {
        return Ok(());
    };
    if d.loaded.as_ref() == Some(&dir) {
        return Ok(());
    }
    d.loaded = Some(dir.clone());
    let path = cache_path(&dir);
    let Ok(text) = fs::read_to_string(&path) else {
        return Ok(());
    };
    let mut lines = text.lines();
    if lines.next() != Some(CACHE_HEADER) {
        // stale format: start over
        fs::remove_file(&path)?;
        return Ok(());
    }
    let mut tables: BTreeMap<(Partition, Partition), Table> = BTreeMap::new();
    for line in lines {
        let Some((mu, nu, lam, f)) = parse_record(line) else {
            continue;
        };
        let entry = tables.entry(ordered(&mu, &nu)).or_default();
        if !f.is_zero() {
            entry.insert(lam, f);
        }
    }
    for (k, t) in tables {
        TABLES.insert(k, t);
    }
    Ok(())
}

fn parse_record(line: &str) -> Option<(Partition, Partition, Partition, RatFunc)> {
    let mut it = line.splitn(4, '|');
    let mu = it.next()?.parse().ok()?;
    let nu = it.next()?.parse().ok()?;
    let lam = it.next()?.parse().ok()?;
    let f = parse_ratfunc(it.next()?).ok()?;
    Some((mu, nu, lam, f))
}

fn append_disk(mu: &Partition, nu: &Partition, table: &Table) -> Result<()> {
    let d = DISK.lock().expect("cache lock");
    let Some(dir) = active_dir(&d) else {
        return Ok(());
    };
    fs::create_dir_all(&dir)?;
    let path = cache_path(&dir);
    let fresh = !path.exists();
    let mut block = String::new();
    if fresh {
        block.push_str(CACHE_HEADER);
        block.push('\n');
    }
    if table.is_empty() {
        // records the pair as computed even though every coefficient vanishes
        block.push_str(&format!("{mu}|{nu}|{mu}|0\n"));
    }
    for (lam, f) in table {
        block.push_str(&format!("{mu}|{nu}|{lam}|{}\n", f.to_canonical()));
    }
    let mut file = OpenOptions::new().create(true).append(true).open(&path)?;
    file.write_all(block.as_bytes())?;
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CacheStats {
    pub path: Option<PathBuf>,
    pub records: usize,
    pub pairs: usize,
    pub bytes: u64,
    pub in_memory_pairs: usize,
}

/// Counts the records of the on-disk cache and the pairs held in memory.
pub fn cache_stats() -> Result<CacheStats> {
    let dir = cache_dir();
    let mut stats = CacheStats {
        path: dir.as_deref().map(cache_path),
        records: 0,
        pairs: 0,
        bytes: 0,
        in_memory_pairs: TABLES.len(),
    };
    if let Some(path) = &stats.path {
        if let Ok(text) = fs::read_to_string(path) {
            stats.bytes = text.len() as u64;
            let mut pairs = std::collections::BTreeSet::new();
            for line in text.lines().skip(1) {
                if let Some((mu, nu, _, _)) = parse_record(line) {
                    stats.records += 1;
                    pairs.insert(ordered(&mu, &nu));
                }
            }
            stats.pairs = pairs.len();
        }
    }
    Ok(stats)
}

/// Deletes the on-disk cache and forgets everything held in memory.
pub fn cache_clear() -> Result<()> {
    TABLES.clear();
    let mut d = DISK.lock().expect("cache lock");
    d.loaded = None;
    if let Some(dir) = active_dir(&d) {
        let path = cache_path(&dir);
        if path.exists() {
            fs::remove_file(&path).map_err(Error::from)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_ratfunc;

    fn p(parts: &[u32]) -> Partition {
        Partition::from(parts)
    }

    #[test]
    fn one_times_one() {
        let t = structure_constants(&p(&[1]), &p(&[1])).unwrap();
        let keys: Vec<_> = t.keys().cloned().collect();
        assert_eq!(keys, vec![p(&[2]), p(&[1, 1])]);
        // P_1^2 = P_2 + (1-q)(1+t)/(1-qt) P_11 before normalisation
        let f11 = structure_constant(&p(&[1, 1]), &p(&[1]), &p(&[1])).unwrap();
        let raw = parse_ratfunc("(1-q)*(1+t)/(1-q*t)").unwrap();
        let scale = c_prime(&p(&[1, 1])).mul(&RatFunc::qt(0, -1))
            .div(&c_prime(&p(&[1])).mul(&c_prime(&p(&[1]))))
            .unwrap();
        assert_eq!(f11, raw.mul(&scale));
        assert!(structure_constant(&p(&[2]), &p(&[]), &p(&[2])).unwrap().is_one());
        assert!(structure_constant(&p(&[2]), &p(&[]), &p(&[1, 1])).unwrap().is_zero());
    }
}
