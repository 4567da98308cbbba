//! Vulnerability `max |S| - |N(S)|` over independent sets, compared with
//! support.

use graphreg::analysis::VULNERABILITY_MAX_N;
use graphreg::fixtures;
use graphreg::{has_support, vulnerability};

fn main() {
    let mut graphs = vec![("claw".to_string(), fixtures::claw()), ("paw".to_string(), fixtures::paw())];
    for n in 5..=9 {
        graphs.push((format!("bordered({n})"), fixtures::bordered(n)));
    }
    for (name, g) in graphs {
        let r = vulnerability(&g, VULNERABILITY_MAX_N).unwrap();
        let set: Vec<String> = r.witness.iter().map(|v| (v + 1).to_string()).collect();
        println!(
            "{name:<12} vulnerability {:>2}  S = {{{}}}  support {}",
            r.value,
            set.join(","),
            has_support(&g)
        );
    }
}
