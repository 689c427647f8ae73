//! JSON and CSV renderings. Rationals are always `"p/q"` strings and object
//! keys come out sorted.

use serde_json::{json, Map, Value};

use rotint_core::families::{SweepReport, Verdict};
use rotint_core::graph::{Certificate, RhoResult, Witness};
use rotint_core::{Rational, RotationInterval};

pub fn q(x: &Rational) -> Value {
    Value::String(x.to_fraction_string())
}

fn witness(w: &Witness) -> Value {
    match w {
        Witness::Cycle { vertices, weight } => json!({"kind": "cycle", "vertices": vertices, "weight": weight}),
        Witness::Orbit(pts) => json!({"kind": "orbit", "points": pts.iter().map(q).collect::<Vec<_>>()}),
        Witness::Horseshoe { lo, hi } => json!({"kind": "horseshoe", "fixed_point": [q(lo), q(hi)]}),
        Witness::IsolatedOrbit { period, lo, hi } => json!({"kind": "isolated-orbit", "period": period, "point": [q(lo), q(hi)]}),
        Witness::LiftPoint { x, p, q: qq } => json!({"kind": "lift-point", "x": q(x), "p": p, "q": qq}),
        Witness::Kneading { p, q: qq } => json!({"kind": "kneading", "p": p, "q": qq}),
    }
}

fn certificate(c: &Certificate) -> Value {
    match c {
        Certificate::Lift { p, q, exact } => json!({"kind": "lift", "p": p, "q": q, "exact": exact}),
        Certificate::Kneading { p, q } => json!({"kind": "kneading", "p": p, "q": q}),
        Certificate::Range => json!({"kind": "range"}),
    }
}

pub fn rho(r: &RhoResult) -> Value {
    match r {
        RhoResult::Exact { value, witness: w } => json!({"exact": true, "value": q(value), "bracket": [q(value), q(value)], "witness": witness(w)}),
        RhoResult::Bracket { lo, hi, lower, upper, depth } => json!({
            "exact": false,
            "bracket": [q(lo), q(hi)],
            "lower": certificate(lower),
            "upper": certificate(upper),
            "depth": depth,
        }),
    }
}

pub fn interval(iv: &RotationInterval) -> Value {
    match iv.left() {
        None => json!({"trivial": true, "exact": true, "interval": Value::Null}),
        Some(left) => json!({
            "trivial": false,
            "exact": left.is_exact(),
            "interval": [q(left.lo()), q(&RotationInterval::right())],
            "left": rho(left),
        }),
    }
}

pub fn verdict(v: &Verdict) -> Value {
    let mut hyps = Map::new();
    for h in &v.ledger {
        hyps.insert(h.name.to_string(), json!({"holds": h.holds, "exact": h.exact}));
    }
    json!({
        "holds": v.holds,
        "exact": v.exact,
        "semi_decision": !v.exact,
        "hypotheses": hyps,
        "witnesses": v.witnesses.iter().map(q).collect::<Vec<_>>(),
        "conclusion": v.conclusion,
        "notes": v.notes,
    })
}

pub fn sweep_summary(r: &SweepReport) -> Value {
    json!({
        "rows": r.rows.len(),
        "monotone": r.monotone,
        "violations": r.violations.iter().map(|(a, b)| [q(a), q(b)]).collect::<Vec<_>>(),
        "branch": r.branch.number(),
        "branch_holds": r.branch_holds,
        "branch_failures": r.branch_failures.iter().map(q).collect::<Vec<_>>(),
        "note": r.note,
    })
}

/// `nu,rho_lo,rho_hi,exact,flags`; flags are `;`-separated.
pub fn sweep_csv(r: &SweepReport) -> Result<String, csv::Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["nu", "rho_lo", "rho_hi", "exact", "flags"])?;
    for row in &r.rows {
        let (lo, hi, exact) = match &row.interval {
            Ok(iv) => match iv.left() {
                Some(l) => (l.lo().to_fraction_string(), l.hi().to_fraction_string(), l.is_exact().to_string()),
                None => (String::new(), String::new(), "true".into()),
            },
            Err(_) => (String::new(), String::new(), "false".into()),
        };
        w.write_record([row.nu.to_fraction_string(), lo, hi, exact, row.flags().join(";")])?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// Compact JSON; `serde_json` maps keep keys sorted.
pub fn render(v: &Value) -> String {
    v.to_string()
}
