use lozenge::formulas::*;
use lozenge::*;

fn ferns1(a: u32) -> Fern {
    if a == 0 {
        Fern::empty()
    } else {
        Fern::new(vec![a], Orientation::Up)
    }
}

fn main() {
    // 1. s_fn vs region count
    let mut seqs: Vec<Vec<u32>> = vec![vec![0], vec![0, 2], vec![2, 0, 1]];
    for total in 1..=7u32 {
        // compositions of `total` into positive parts
        let mut stack = vec![(Vec::<u32>::new(), total)];
        while let Some((pfx, rem)) = stack.pop() {
            if rem == 0 {
                seqs.push(pfx);
                continue;
            }
            for part in 1..=rem {
                let mut nxt = pfx.clone();
                nxt.push(part);
                stack.push((nxt, rem - part));
            }
        }
    }
    let mut bad = 0;
    for seq in &seqs {
        let s = build_s(seq).unwrap();
        let cnt = count_tilings(&s);
        let val = s_fn(seq).unwrap();
        if cnt != val {
            println!("s_fn MISMATCH {seq:?}: region {cnt}, formula {val}");
            bad += 1;
        }
    }
    println!("s_fn checked on {} seqs, {} mismatches", seqs.len(), bad);

    // 2. mc_b_closed vs symmetric count of the two-single-triangle region
    let mut bad = 0;
    let mut n = 0;
    for x in [0u32, 2, 4] {
        for y in [0u32, 2, 4] {
            for a in 0..=3u32 {
                for c in 0..=3u32 {
                    if a + c > 3 {
                        continue;
                    }
                    let e = build_e(x, y, &[ferns1(a), ferns1(c)], &[(x + y) / 2]);
                    let Ok(e) = e else { continue };
                    let t0 = std::time::Instant::now();
                    let mc = count_cs_tilings(&e).unwrap();
                    if t0.elapsed().as_millis() > 200 {
                        println!("slow mc_b x={x} y={y} a={a} c={c}: {:?} count {mc}", t0.elapsed());
                    }
                    let f = mc_b_closed(x, y, a, c).unwrap();
                    n += 1;
                    if mc != f {
                        println!("mc_b MISMATCH x={x} y={y} a={a} c={c}: region {mc}, formula {f}");
                        bad += 1;
                    }
                }
            }
        }
    }
    println!("mc_b checked on {n} instances, {bad} mismatches");

    // 3. mc_bprime vs symmetric count
    let mut bad = 0;
    let mut n = 0;
    for x in 0..=4u32 {
        for y in 0..=4u32 {
            if (x + y) % 2 == 0 {
                continue;
            }
            for a in 0..=3u32 {
                for c in 0..=3u32 {
                    if a + c > 3 {
                        continue;
                    }
                    let ep = build_e_prime(x, y, &[ferns1(a), ferns1(c)], &[(x + y - 1) / 2]);
                    let Ok(ep) = ep else { continue };
                    let t0 = std::time::Instant::now();
                    let mc = count_cs_tilings(&ep).unwrap();
                    if t0.elapsed().as_millis() > 200 {
                        println!("slow mc_bp x={x} y={y} a={a} c={c}: {:?} count {mc}", t0.elapsed());
                    }
                    let case = BPrimeCase::for_parities(x, y).unwrap();
                    let f = mc_bprime_closed(x, y, a, c, case);
                    n += 1;
                    match f {
                        Ok(f) if f == mc => {}
                        other => {
                            println!(
                                "mc_bprime MISMATCH x={x} y={y} a={a} c={c} ({case:?}): region {mc}, formula {other:?}"
                            );
                            bad += 1;
                        }
                    }
                }
            }
        }
    }
    println!("mc_bprime checked on {n} instances, {bad} mismatches");
}
