#![no_main]

use libfuzzer_sys::fuzz_target;
use polymat::cli::{run, Command, Options, EXIT_INPUT, EXIT_OK, EXIT_VERIFICATION};

const COMMANDS: [Command; 6] = [
    Command::Validate,
    Command::Bases,
    Command::Poly,
    Command::Structure,
    Command::Coeffs,
    Command::Verify,
];

// The first byte picks the command; the rest is the document.
fuzz_target!(|data: &[u8]| {
    let Some((&pick, rest)) = data.split_first() else {
        return;
    };
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    let opts = Options {
        machine: pick & 0x80 != 0,
        max_n: Some(5),
        ..Options::default()
    };
    let out = run(COMMANDS[pick as usize % COMMANDS.len()], text, &opts);
    assert!([EXIT_OK, EXIT_VERIFICATION, EXIT_INPUT].contains(&out.status));
});
