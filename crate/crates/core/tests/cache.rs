use std::fs;

use qbranch_core::macdonald::structure::{cache_clear, cache_stats, set_cache_dir, structure_constants};
use qbranch_core::partitions::Partition;

fn p(parts: &[u32]) -> Partition {
    Partition::from(parts)
}

#[test]
fn disk_cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("structure-constants.txt"), "not a cache header\n1|1|2|1\n").ok();
    set_cache_dir(Some(dir.path().to_path_buf()));

    let first = structure_constants(&p(&[2, 1]), &p(&[1])).unwrap();
    let stats = cache_stats().unwrap();
    assert!(stats.records >= first.len(), "{stats:?}");
    assert_eq!(stats.pairs, 1);
    assert!(stats.bytes > 0);

    // a cleared cache recomputes the same table and writes it again
    cache_clear().unwrap();
    assert_eq!(cache_stats().unwrap().records, 0);
    let again = structure_constants(&p(&[1]), &p(&[2, 1])).unwrap();
    assert_eq!(first, again);
    assert!(cache_stats().unwrap().records > 0);
    set_cache_dir(None);
}
