#![no_main]

use libfuzzer_sys::fuzz_target;
use polymat::activity::activity_polynomials;
use polymat::document::parse;

// Small parsed documents either build or fail with an error, and every
// built polymatroid has as many bases as its polynomials count.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(doc) = parse(text) else {
        return;
    };
    if let Ok(instance) = doc.build(6) {
        let p = instance.polymatroid();
        let (int, ext) = activity_polynomials(p);
        let count = p.bases().len() as u64;
        assert_eq!(int.eval_one(), count);
        assert_eq!(ext.eval_one(), count);
    }
});
