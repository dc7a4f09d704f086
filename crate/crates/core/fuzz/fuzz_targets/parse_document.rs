#![no_main]

use libfuzzer_sys::fuzz_target;
use polymat::document::parse;

// Parsing never panics, and whatever parses re-emits to an equal document.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(doc) = parse(text) {
        let again = parse(&doc.emit()).expect("emitted documents parse");
        assert_eq!(again, doc);
    }
});
