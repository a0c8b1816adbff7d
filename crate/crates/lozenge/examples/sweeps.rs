use lozenge::verify::*;
use std::time::Instant;

fn summarize(name: &str, reports: &[CheckReport], t: Instant) {
    let pass = reports.iter().filter(|r| r.status == Status::Pass).count();
    let vac = reports.iter().filter(|r| r.status == Status::Vacuous).count();
    let fail: Vec<_> = reports.iter().filter(|r| r.status == Status::Fail).collect();
    println!(
        "{name}: {} reports ({pass} pass, {vac} vacuous, {} fail) in {:.1?}",
        reports.len(),
        fail.len(),
        t.elapsed()
    );
    for f in fail.iter().take(5) {
        println!("  FAIL {} lhs={} rhs={}", f.case_id, f.lhs, f.rhs);
    }
}

fn main() {
    let which = std::env::args().nth(1).unwrap_or_default();
    if which.is_empty() || which == "base" {
        let t = Instant::now();
        let r = sweep_base_cases(&GridSmall { max_axis: 12 });
        summarize("base(12)", &r, t);
    }
    if which.is_empty() || which == "rec" {
        let t = Instant::now();
        let r = sweep_recurrences(&GridSmall { max_axis: 10 });
        summarize("recurrences(10)", &r, t);
    }
    if which.is_empty() || which == "kuo" {
        let t = Instant::now();
        let r = sweep_kuo(&GridSmall { max_axis: 10 });
        summarize("kuo(10)", &r, t);
    }
    if which.is_empty() || which == "h" {
        let t = Instant::now();
        let r = sweep_shuffle_h(&GridH { x_max: 3, y_max: 3, n_max: 3, b_max: 1 }, None);
        summarize("shuffle-h(3,3,3,1)", &r, t);
    }
    if which.is_empty() || which == "cs" {
        let t = Instant::now();
        let r = sweep_shuffle_cs(&GridCs { max_axis: 12, b_max: 0 }, None);
        summarize("shuffle-cs(12)", &r, t);
    }
    if which.is_empty() || which == "fern" {
        for id in [21, 22, 23] {
            let t = Instant::now();
            let r = sweep_fern_shuffle(id, &FernGrid { total_max: 2, x_max: 3, y_max: 3 });
            summarize(&format!("fern-{id}(2,3,3)"), &r, t);
        }
        for id in [24, 25] {
            let t = Instant::now();
            let r = sweep_fern_closed(id, &FernGrid { total_max: 3, x_max: 4, y_max: 4 });
            summarize(&format!("fern-{id}(3,4,4)"), &r, t);
        }
    }
}
