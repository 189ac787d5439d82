#![no_main]

use ascii_rsa::keystore::parse_key_file;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(key) = parse_key_file(text) {
            // anything accepted must re-serialize to something that parses the same
            let again = parse_key_file(&key.serialize()).expect("serialized key parses");
            assert_eq!(again, key);
        }
    }
});
