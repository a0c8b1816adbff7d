use lozenge::verify::*;
use std::time::Instant;
fn main() {
    for axis in [8u32, 10, 11, 12] {
        let t = Instant::now();
        let r = sweep_shuffle_cs(&GridCs { max_axis: axis, b_max: 0 }, None);
        let fails = r.iter().filter(|x| x.status == Status::Fail).count();
        println!("cs({axis}): {} reports, {fails} fails, {:.1?}", r.len(), t.elapsed());
    }
}
