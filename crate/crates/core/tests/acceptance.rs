//! One line per acceptance criterion; exits nonzero if any criterion fails.

use std::process::Command;
use std::time::{Duration, Instant};

use umbral::verify::{self, Cell, Status};

struct Outcome {
    pass: bool,
    detail: String,
}

type Criterion = (&'static str, Duration, fn() -> Outcome);

fn cells_outcome(cells: &[Cell]) -> Outcome {
    let failed: Vec<String> = cells
        .iter()
        .filter(|c| c.status != Status::Pass)
        .map(|c| format!("{} {} ({})", c.name, c.detail, status_word(c.status)))
        .collect();
    Outcome {
        pass: failed.is_empty(),
        detail: if failed.is_empty() {
            format!("{} cells", cells.len())
        } else {
            format!(
                "{} of {} cells not passing: {}",
                failed.len(),
                cells.len(),
                failed.join("; ")
            )
        },
    }
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::Skipped => "skipped",
    }
}

fn methods() -> Outcome {
    cells_outcome(&verify::methods(10))
}

fn laguerre() -> Outcome {
    let c = verify::laguerre_closed(10);
    Outcome {
        pass: c.status == Status::Pass,
        detail: c.detail,
    }
}

fn binomial() -> Outcome {
    cells_outcome(&verify::binomial(10))
}

fn sheffer() -> Outcome {
    cells_outcome(&verify::sheffer(8))
}

fn expansion() -> Outcome {
    let cells = verify::expansion(8, 50, 0x5eed);
    let mut o = cells_outcome(&cells);
    o.pass &= cells.len() == 51 && cells.iter().any(|c| c.name == "q_scaling");
    o
}

fn mutator() -> Outcome {
    let cells = verify::mutator(10);
    let mut o = cells_outcome(&cells);
    o.pass &= cells.iter().any(|c| c.name == "qgauss/qccr");
    o
}

fn nogo() -> Outcome {
    let cells = verify::nogo(10, 4);
    let mut o = cells_outcome(&cells);
    let witnesses: Vec<String> = cells
        .iter()
        .filter(|c| c.name == "fibonacci/binomial" || c.name == "square/binomial")
        .map(|c| format!("{}: {}", c.name, c.detail))
        .collect();
    o.pass &= witnesses.len() == 2 && witnesses.iter().all(|w| w.contains("witness at n = "));
    o.detail = format!("{}; {}", o.detail, witnesses.join("; "));
    o
}

fn su2() -> Outcome {
    let cells = verify::su2(12, 1e-10);
    let mut o = cells_outcome(&cells);
    o.pass &= cells.iter().any(|c| c.name == "j=6/q=undeformed");
    o
}

fn polar() -> Outcome {
    let required: Vec<Cell> = verify::polar(12, 1e-10)
        .into_iter()
        .filter(|c| {
            ["q=0.5", "q=1.5", "q=2.0", "q=undeformed"]
                .iter()
                .any(|q| c.name.ends_with(q))
        })
        .collect();
    let mut o = cells_outcome(&required);
    let convention = required.iter().all(|c| c.detail.contains("sigma1:"));
    let flagged = required.iter().all(|c| c.detail.contains("flagged:"));
    o.pass &= required.len() == 48 && convention;
    let sample = required
        .first()
        .map(|c| c.detail.clone())
        .unwrap_or_default();
    o.detail = format!("{}; convention present: {convention}; exchanged-moduli J- form flagged: {flagged}; e.g. {sample}", o.detail);
    o
}

fn weyl() -> Outcome {
    let cells = verify::weyl(24, 1e-10);
    let mut o = cells_outcome(&cells);
    o.pass &= cells.len() == 23
        && cells
            .iter()
            .all(|c| c.detail.contains("printed zero diagonal of P deviates"));
    if let Some(c) = cells.iter().find(|c| c.name == "n=4") {
        o.detail = format!("{}; n=4: {}", o.detail, c.detail);
    }
    o
}

fn pincherle() -> Outcome {
    cells_outcome(&verify::pincherle(8, 20, 0x5eed))
}

fn cli_determinism() -> Outcome {
    let exe = env!("CARGO_BIN_EXE_umbral");
    let run = |args: &[&str]| Command::new(exe).args(args).output().expect("spawn umbral");
    let exact: &[&[&str]] = &[
        &["table", "--psi", "fibonacci", "--N", "8"],
        &[
            "basic",
            "--psi",
            "qgauss",
            "--op",
            "laguerre",
            "--n",
            "6",
            "--method",
            "rodrigues3",
        ],
        &[
            "sheffer",
            "--psi",
            "square",
            "--op",
            "shifted-partial",
            "--s",
            "exp-psi-square",
            "--n",
            "5",
        ],
        &["laguerre", "--n", "5", "--alpha", "1/2"],
        &[
            "expand",
            "--psi",
            "qgauss",
            "--op",
            "partial-one-plus",
            "--N",
            "6",
            "--operator",
            "random",
        ],
        &["nogo", "--psi", "square", "--n", "4"],
    ];
    let mut bad = Vec::new();
    let mut count = 0;
    for args in exact {
        for fmt in ["json", "csv", "text"] {
            let mut full = args.to_vec();
            full.extend(["--format", fmt]);
            let a = run(&full);
            let b = run(&full);
            count += 1;
            if !a.status.success() || a.stdout != b.stdout || a.stdout.is_empty() {
                bad.push(format!("{} --format {fmt}", args[0]));
            }
        }
    }
    let v = run(&["verify", "--suite", "all", "--N", "8"]);
    let code = v.status.code();
    if code != Some(0) {
        bad.push(format!("verify --suite all exited {code:?}"));
    }
    Outcome {
        pass: bad.is_empty(),
        detail: if bad.is_empty() {
            format!("{count} invocations byte-identical; verify --suite all exit 0")
        } else {
            format!("failing: {}", bad.join(", "))
        },
    }
}

fn main() {
    let criteria: [Criterion; 12] = [
        (
            "basic-sequence methods agree on the 4x4 grid, n <= 10",
            Duration::from_secs(30),
            methods,
        ),
        (
            "closed q-Laguerre form equals the solve oracle, q -> 1 limit",
            Duration::from_secs(5),
            laguerre,
        ),
        (
            "binomial-type identity on the grid, n <= 10",
            Duration::from_secs(30),
            binomial,
        ),
        (
            "Sheffer binomial identity, three S factors, n <= 8",
            Duration::from_secs(30),
            sheffer,
        ),
        (
            "operator expansion roundtrip, 50 random + q-scaling, N = 8",
            Duration::from_secs(20),
            expansion,
        ),
        (
            "mutator identity on p_0..p_9 and q-CCR reduction",
            Duration::from_secs(10),
            mutator,
        ),
        (
            "quantum-plane binomial: identity for qgauss, witnesses otherwise",
            Duration::from_secs(10),
            nogo,
        ),
        (
            "su_q(2) commutators, j <= 6, q grid and undeformed",
            Duration::from_secs(5),
            su2,
        ),
        (
            "polar decomposition, j <= 6, real q and undeformed",
            Duration::from_secs(5),
            polar,
        ),
        (
            "generalized Clifford / Weyl pair, n <= 24",
            Duration::from_secs(5),
            weyl,
        ),
        (
            "Pincherle derivative equals commutator, 20 random series",
            Duration::from_secs(10),
            pincherle,
        ),
        (
            "CLI determinism and verify --suite all",
            Duration::from_secs(120),
            cli_determinism,
        ),
    ];
    let mut failures = 0;
    for (i, (name, budget, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let in_time = elapsed <= *budget;
        let pass = outcome.pass && in_time;
        if !pass {
            failures += 1;
        }
        println!(
            "criterion {:>2} {}: {name} [{:.2} s of {} s{}] {}",
            i + 1,
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            budget.as_secs(),
            if in_time { "" } else { ", over budget" },
            outcome.detail
        );
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
