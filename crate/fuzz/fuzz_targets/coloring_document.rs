#![no_main]

//! Parser/validator entry point consumed by `circsym verify --input`.
//! Parsing plus validation must never panic; accepted documents must
//! round-trip and hold up under re-certification on small graphs.

use libfuzzer_sys::fuzz_target;

use circsym::document::ColoringDocument;
use circsym::verification;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(doc) = ColoringDocument::from_json(text) else {
        return;
    };
    let reparsed = ColoringDocument::from_json(&doc.to_json()).expect("roundtrip");
    assert_eq!(reparsed, doc);

    // re-certification is exercised only where the groups stay tiny
    if doc.n <= 16 {
        let cert = verification::certify(doc.n as usize, doc.k as usize, &doc.coloring())
            .expect("validated parameters certify");
        if !cert.distinguishing {
            let w = cert.witness.expect("witness accompanies a failure");
            assert!(!w.is_identity());
        }
    }
});
