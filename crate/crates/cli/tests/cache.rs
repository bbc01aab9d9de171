use std::fs;
use std::sync::Arc;

use modpart::decomposition_matrix;
use modpart_cli::cache::{cache_get, cache_path, cache_put, decode, encode};
use modpart_cli::{CliError, MatrixStore};

#[test]
fn put_then_get_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    for (l, r) in [(2, 0), (2, 6), (3, 7), (5, 5)] {
        let m = decomposition_matrix(r, l).unwrap();
        cache_put(dir.path(), &m).unwrap();
        assert_eq!(cache_get(dir.path(), l, r).unwrap(), Some(m));
    }
}

#[test]
fn cold_cache_is_absent() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(cache_get(dir.path(), 2, 4).unwrap(), None);
}

#[test]
fn encoding_is_byte_stable() {
    let a = encode(&decomposition_matrix(6, 3).unwrap());
    let b = encode(&decomposition_matrix(6, 3).unwrap());
    assert_eq!(a, b);
    let keys: Vec<usize> = ["checksum", "cols", "degree", "entries", "generator", "l", "rows"]
        .iter()
        .map(|k| a.find(&format!("\"{k}\":")).unwrap())
        .collect();
    assert!(keys.windows(2).all(|w| w[0] < w[1]), "keys not sorted");
}

fn integrity_message(text: &str, l: usize, r: usize) -> String {
    match decode(text, l, r) {
        Err(e @ CliError::Integrity(_)) => e.to_string(),
        other => panic!("expected an integrity error, got {other:?}"),
    }
}

#[test]
fn every_single_byte_change_in_values_is_rejected() {
    let good = encode(&decomposition_matrix(5, 2).unwrap());
    let start = good.find("\"entries\":").unwrap();
    let end = good.find(",\"generator\"").unwrap();
    for (k, c) in good.char_indices().filter(|(k, _)| (start..end).contains(k)) {
        let Some(d) = c.to_digit(10) else { continue };
        let mut bad = good.clone();
        bad.replace_range(k..k + 1, &((d + 1) % 10).to_string());
        assert!(integrity_message(&bad, 2, 5).starts_with("cache integrity"));
    }
}

#[test]
fn wrong_version_or_key_is_rejected() {
    let good = encode(&decomposition_matrix(4, 2).unwrap());
    let msg = integrity_message(&good.replace("llt-v1", "llt-v0"), 2, 4);
    assert!(msg.contains("generator"), "{msg}");
    let msg = integrity_message(&good, 3, 4);
    assert!(msg.contains("expected l=3"), "{msg}");
    assert!(integrity_message("{}", 2, 4).contains("malformed"));
    assert!(integrity_message(&good[..good.len() / 2], 2, 4).contains("malformed"));
}

#[test]
fn store_recomputes_after_tamper() {
    let dir = tempfile::tempdir().unwrap();
    let want = decomposition_matrix(5, 3).unwrap();
    cache_put(dir.path(), &want).unwrap();
    let file = cache_path(dir.path(), 3, 5);
    let text = fs::read_to_string(&file).unwrap();
    fs::write(&file, text.replace("[0,0,1]", "[0,0,2]")).unwrap();
    let store = MatrixStore::new(Some(dir.path().to_path_buf()));
    assert_eq!(*store.get(3, 5, false).unwrap(), want);
    assert_eq!(cache_get(dir.path(), 3, 5).unwrap(), Some(want));
}

#[test]
fn store_serves_one_matrix_to_concurrent_readers() {
    let dir = tempfile::tempdir().unwrap();
    let store = MatrixStore::new(Some(dir.path().to_path_buf()));
    let got: Vec<_> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..6).map(|_| s.spawn(|| store.get(2, 7, false).unwrap())).collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    assert!(got.windows(2).all(|w| Arc::ptr_eq(&w[0], &w[1])));
    assert_eq!(*got[0], decomposition_matrix(7, 2).unwrap());
    assert!(cache_path(dir.path(), 2, 7).exists());
}

#[test]
fn memory_only_store_writes_nothing() {
    let store = MatrixStore::in_memory();
    assert!(store.dir().is_none());
    let a = store.get(3, 4, false).unwrap();
    let b = store.get(3, 4, false).unwrap();
    assert!(Arc::ptr_eq(&a, &b));
    let forced = store.get(3, 4, true).unwrap();
    assert!(!Arc::ptr_eq(&a, &forced));
    assert_eq!(a, forced);
}
