use std::fmt::Write;

use hrank::classify::{ClassificationReport, CycleClass, CycleSign, OrientedReport};
use hrank::verify::{SweepConfig, SweepMode, SweepReport};
use serde_json::{json, Value};

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn joined(vs: &[usize]) -> String {
    vs.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// `+1`/`-1` for a cycle whose every edge is an arc.
fn cycle_sign(c: &CycleClass) -> Option<i64> {
    (c.forward + c.backward == c.length).then(|| if c.backward.is_multiple_of(2) { 1 } else { -1 })
}

fn verdict(r: &ClassificationReport) -> &'static str {
    match (r.upper_by_rank, r.lower_by_rank) {
        (true, true) => "upper- and lower-optimal (d = 0)",
        (true, false) => "upper-optimal",
        (false, true) => "lower-optimal",
        (false, false) => "neither bound attained",
    }
}

pub fn analysis_text(
    label: &str,
    r: &ClassificationReport,
    detail: bool,
    oriented: Option<&OrientedReport>,
) -> String {
    let mut s = String::new();
    let d = r.d as i64;
    writeln!(s, "graph    {label}").unwrap();
    writeln!(s, "n        {}", r.n).unwrap();
    writeln!(s, "rk       {}", r.rk).unwrap();
    writeln!(s, "r        {}", r.r).unwrap();
    writeln!(s, "d        {}", r.d).unwrap();
    writeln!(s, "m        {}", r.m).unwrap();
    writeln!(s, "omega    {}", r.omega).unwrap();
    writeln!(s, "diff     {}", r.diff).unwrap();
    writeln!(
        s,
        "bound    {} ({} <= {} <= {})",
        if r.bound_ok { "ok" } else { "VIOLATED" },
        -2 * d,
        r.diff,
        2 * d
    )
    .unwrap();
    for c in &r.conditions.cycles {
        writeln!(
            s,
            "cycle    l={} eta={} [{}]",
            c.length,
            c.eta,
            joined(&c.vertices)
        )
        .unwrap();
    }
    if detail {
        let cd = &r.conditions;
        writeln!(
            s,
            "(i)      cycles pairwise disjoint: {}",
            yes(cd.cycles_disjoint)
        )
        .unwrap();
        for c in &cd.cycles {
            writeln!(
                s,
                "(ii)     [{}] l mod 4 = {}, eta mod 4 = {}: upper class {}, lower class {}",
                joined(&c.vertices),
                c.length % 4,
                c.eta % 4,
                yes(c.upper_class),
                yes(c.lower_class)
            )
            .unwrap();
        }
        match &cd.crucial_trace {
            Some(t) => {
                let steps: Vec<String> = t.steps.iter().map(|(x, y)| format!("{x}-{y}")).collect();
                writeln!(
                    s,
                    "(iii)    crucial subgraph reachable: yes (delete {}; remaining [{}])",
                    if steps.is_empty() {
                        "nothing".to_string()
                    } else {
                        steps.join(", ")
                    },
                    joined(&t.terminal)
                )
                .unwrap();
            }
            None => writeln!(s, "(iii)    crucial subgraph reachable: no").unwrap(),
        }
        writeln!(
            s,
            "upper    by rank {}, by conditions {}",
            yes(r.upper_by_rank),
            yes(r.upper_by_conditions)
        )
        .unwrap();
        writeln!(
            s,
            "lower    by rank {}, by conditions {}",
            yes(r.lower_by_rank),
            yes(r.lower_by_conditions)
        )
        .unwrap();
        if let Some(o) = oriented {
            let signs: Vec<&str> = o
                .signs
                .iter()
                .map(|s| match s {
                    CycleSign::Positive => "even",
                    CycleSign::Negative => "odd",
                })
                .collect();
            writeln!(
                s,
                "oriented sr {}, H = iS {}, cycle orientation [{}], corollary upper {}, lower {}",
                o.skew_rank,
                yes(o.hermitian_is_i_skew),
                signs.join(" "),
                yes(o.corollary_upper),
                yes(o.corollary_lower)
            )
            .unwrap();
        }
    }
    writeln!(s, "verdict  {}", verdict(r)).unwrap();
    s
}

pub fn analysis_json(
    label: &str,
    r: &ClassificationReport,
    detail: bool,
    oriented: Option<&OrientedReport>,
) -> Value {
    let cycles: Vec<Value> = r
        .conditions
        .cycles
        .iter()
        .map(
            |c| json!({"l": c.length, "eta": c.eta, "sign": cycle_sign(c), "vertices": c.vertices}),
        )
        .collect();
    let mut v = json!({
        "graph": label,
        "n": r.n,
        "rk": r.rk,
        "r": r.r,
        "d": r.d,
        "m": r.m,
        "omega": r.omega,
        "diff": r.diff,
        "bound_ok": r.bound_ok,
        "upper_rank": r.upper_by_rank,
        "upper_cond": r.upper_by_conditions,
        "lower_rank": r.lower_by_rank,
        "lower_cond": r.lower_by_conditions,
        "cycles": cycles,
    });
    if detail {
        let cd = &r.conditions;
        v["conditions"] = json!({
            "cycles_disjoint": cd.cycles_disjoint,
            "upper_cycle_classes": cd.upper_cycle_classes,
            "lower_cycle_classes": cd.lower_cycle_classes,
            "crucial_reachable": cd.crucial_reachable,
            "crucial_steps": cd.crucial_trace.as_ref().map(|t| t.steps.clone()),
            "crucial_terminal": cd.crucial_trace.as_ref().map(|t| t.terminal.clone()),
        });
        if let Some(o) = oriented {
            v["oriented"] = json!({
                "skew_rank": o.skew_rank,
                "hermitian_is_i_skew": o.hermitian_is_i_skew,
                "corollary_upper": o.corollary_upper,
                "corollary_lower": o.corollary_lower,
            });
        }
    }
    v
}

pub fn sweep_json(report: &SweepReport, config: &SweepConfig) -> Value {
    let checks: serde_json::Map<String, Value> = report
        .checks
        .iter()
        .map(|(name, t)| {
            (
                name.to_string(),
                json!({"passed": t.passed, "failed": t.failed}),
            )
        })
        .collect();
    let failures: Vec<Value> = report
        .failures
        .iter()
        .map(|f| {
            json!({
                "check": f.check,
                "graph6": f.graph6,
                "orientation": f.orientation.as_ref().map(|c| c.to_string()),
            })
        })
        .collect();
    let (mode, samples) = match config.mode {
        SweepMode::Exhaustive => ("exhaustive", None),
        SweepMode::Sampled { samples } => ("sampled", Some(samples)),
    };
    json!({
        "mode": mode,
        "n": config.n_max,
        "samples": samples,
        "seed": report.seed,
        "underlying_graphs": report.underlying_graphs,
        "instances": report.instances,
        "fully_oriented": report.fully_oriented,
        "unicyclic": report.unicyclic,
        "upper_optimal": report.upper_optimal,
        "lower_optimal": report.lower_optimal,
        "checks": checks,
        "failures": failures,
        "failed_checks": report.total_failed(),
        "result": if report.all_passed() { "PASS" } else { "FAIL" },
    })
}
