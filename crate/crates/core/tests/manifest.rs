use bilevel_core::manifest::Manifest;
use bilevel_core::records;

#[test]
fn emit_then_load_is_identity() {
    let m = Manifest::from_registry();
    let back = Manifest::from_json(&m.to_json()).unwrap();
    assert_eq!(back, m);
    let reg: Vec<_> = records().cloned().collect();
    assert_eq!(back.problems, reg);
    assert_eq!(back.to_json(), m.to_json());
}

#[test]
fn file_round_trip() {
    let dir = std::env::temp_dir().join(format!("bilevel-manifest-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("manifest.json");
    let m = Manifest::from_registry();
    m.write(&path).unwrap();
    assert_eq!(Manifest::load(&path).unwrap(), m);
    std::fs::remove_dir_all(&dir).unwrap();
}
