use cylra_core::ca::CaAtomStructure;
use cylra_core::constructions::{monk_ra, MonkParams};
use cylra_core::serial::{LoadedStructure, StructureFile, FORMAT};

#[test]
fn ra_round_trip_is_byte_identical() {
    let s = monk_ra(MonkParams { greens: 3, reds: 2 }).unwrap();
    let file = StructureFile::from_ra(&s);
    let json = file.to_json();
    assert!(json.ends_with('\n'));
    assert!(json.contains(FORMAT));

    let parsed = StructureFile::from_json(&json).unwrap();
    let LoadedStructure::Ra(loaded) = parsed.load().unwrap() else {
        panic!("expected an ra structure");
    };
    assert_eq!(loaded, s);
    assert_eq!(StructureFile::from_ra(&loaded).to_json(), json);
}

#[test]
fn ca_round_trip_is_byte_identical() {
    let s = CaAtomStructure::full_set_dual(3, 2).unwrap();
    let file = StructureFile::from_ca(&s);
    let json = file.to_json();

    let parsed = StructureFile::from_json(&json).unwrap();
    let LoadedStructure::Ca(loaded) = parsed.load().unwrap() else {
        panic!("expected a ca structure");
    };
    assert_eq!(loaded, s);
    assert_eq!(StructureFile::from_ca(&loaded).to_json(), json);
}

#[test]
fn loader_rejects_bad_input() {
    // Wrong format marker.
    let s = monk_ra(MonkParams { greens: 2, reds: 2 }).unwrap();
    let mut file = StructureFile::from_ra(&s);
    file.format = "cylra-structure/99".into();
    assert!(file.load().is_err());

    // Converse that is not an involution must be rejected by validation.
    let json = StructureFile::from_ra(&s).to_json();
    let broken = json.replacen("\"converse\": [\n    0,", "\"converse\": [\n    1,", 1);
    assert_ne!(broken, json);
    let parsed = StructureFile::from_json(&broken).unwrap();
    assert!(parsed.load().is_err());

    // Unparseable text.
    assert!(StructureFile::from_json("{ not json").is_err());
}
