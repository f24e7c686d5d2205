#![no_main]

use libfuzzer_sys::fuzz_target;

// The instance-file parser must never panic on untrusted input, and every
// record it accepts must survive a serialize -> reparse round trip.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(instances) = csint::engine::parse_instances(text) else {
        return;
    };
    for inst in instances {
        let json = serde_json::to_string(&inst).expect("accepted instances serialize");
        let back = csint::engine::parse_instances(&json).expect("round trip parses");
        assert_eq!(back.len(), 1);
        assert_eq!(back[0], inst);
    }
});
