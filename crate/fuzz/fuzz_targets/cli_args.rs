#![no_main]

use clap::Parser;
use libfuzzer_sys::fuzz_target;
use newton_strata_cli::{run, Command, RunConfig};

// whitespace-separated argv; only the cheap subcommands are executed
fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let args = std::iter::once("strata").chain(s.split_whitespace());
    let Ok(config) = RunConfig::try_parse_from(args) else { return };
    if config.out.is_some() {
        return;
    }
    if matches!(config.command, Command::Newton { .. } | Command::Psi { .. } | Command::Alcove { .. }) {
        let outcome = run(&config);
        assert!([0, 1, 2].contains(&outcome.code));
    }
});
