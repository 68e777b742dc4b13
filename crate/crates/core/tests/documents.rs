use std::path::PathBuf;

use fri_lab::benchmark::builtin_cases;
use fri_lab::document::{load_document, load_str, save_document, Arity, DocumentError, RuleBaseDocument};

fn fixture(id: u8) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(format!("../../fixtures/example{id}.toml"))
}

#[test]
fn fixtures_match_builtin_cases() {
    for c in builtin_cases() {
        let bytes = std::fs::read(fixture(c.id)).unwrap();
        let doc = load_document(&bytes).unwrap();
        assert_eq!(doc, RuleBaseDocument::from_case(&c), "example {}", c.id);
        let rb = doc.rule_base().unwrap();
        assert_eq!(rb.rules(), [c.lower.clone(), c.upper.clone()]);
        assert_eq!(doc.observation().unwrap(), c.observation);
    }
}

#[test]
fn fixtures_round_trip() {
    for id in 1..=9 {
        let doc = load_document(&std::fs::read(fixture(id)).unwrap()).unwrap();
        let saved = save_document(&doc);
        let again = load_str(&saved).unwrap();
        assert_eq!(again, doc, "example {id}");
        assert_eq!(save_document(&again), saved, "example {id}");
    }
}

#[test]
fn written_arity_is_preserved() {
    let doc = load_document(&std::fs::read(fixture(1)).unwrap()).unwrap();
    assert_eq!(doc.rules[0].antecedents[0].arity, Arity::Triangle);
    assert_eq!(doc.rules[0].consequent.arity, Arity::Singleton);
    assert_eq!(doc.rules[0].consequent.set.points(), [2.0; 4]);
}

#[test]
fn malformed_inputs_are_rejected_whole() {
    let good = std::fs::read_to_string(fixture(6)).unwrap();
    let cases = [
        good.replace("dimension = 1", "dimension = \"one\""),
        good.replace("[[rules]]", "[[rules]\n"),
        good.replace("consequent = [1.5, 2.5, 3.8]", "consequent = [1.5, 2.5, 3.8, 1.0]"),
        good.replace("version = \"1\"", "version = \"2\""),
        good.replace("[[4.2, 5.2, 6.7]]", "[[4.2, 5.2, 6.7], [1, 2, 3]]"),
        good.replace("dimension = 1", "dimension = 1\nunexpected = true"),
    ];
    for (k, text) in cases.iter().enumerate() {
        assert_ne!(text, &good, "mutation {k} did not apply");
        match load_str(text) {
            Err(DocumentError::Parse { line, column, .. }) => assert!(line >= 1 && column >= 1),
            Err(DocumentError::Validation(_)) => {}
            Ok(doc) => panic!("mutation {k} accepted: {doc:?}"),
        }
    }
}
