#![no_main]

use ergobound_cli::config::{ExperimentConfig, DEFAULT_MAX_JOINT_SIZE};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(cfg) = ExperimentConfig::from_toml(text) else { return };
    let Ok(exp) = cfg.resolve(None) else { return };
    // evaluate only what the default limits would allow
    if let Ok(point) = exp.point(None) {
        if exp.joint_size(&point) <= DEFAULT_MAX_JOINT_SIZE as u128 / 64 {
            let _ = ergobound::bound_report(&exp.rho, &exp.h_s, &point.weight, &point.bath);
        }
    }
});
