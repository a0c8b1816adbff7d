//! Search a grammar of Pochhammer-product candidates for the y-odd closed
//! form, against ground truth from the enumerator.

use num_bigint::BigInt;
use num_traits::One;

use lozenge::formulas::{pochhammer, pp};
use lozenge::*;

fn ferns1(a: u32) -> Fern {
    if a == 0 {
        Fern::empty()
    } else {
        Fern::new(vec![a], Orientation::Up)
    }
}

#[derive(Clone, Copy, Debug)]
struct Cand {
    pp_args: (i64, i64, i64, i64, i64, i64), // coefficients for (xh, yh, a, c, const) triples encoded below
}

fn main() {
    // ground truth
    let mut data: Vec<(i64, i64, i64, i64, BigInt)> = Vec::new();
    for (x, y) in [
        (0u32, 1u32),
        (0, 3),
        (0, 5),
        (2, 1),
        (2, 3),
        (2, 5),
        (4, 1),
        (4, 3),
        (6, 1),
    ] {
        for a in 0..=3u32 {
            for c in 0..=3u32 {
                if a + c > 3 && (x + y) > 5 {
                    continue;
                }
                let Ok(ep) = build_e_prime(x, y, &[ferns1(a), ferns1(c)], &[(x + y - 1) / 2])
                else {
                    continue;
                };
                let mc = count_cs_tilings(&ep).unwrap();
                data.push((
                    x as i64,
                    y as i64,
                    a as i64,
                    c as i64,
                    BigInt::from(mc),
                ));
            }
        }
    }
    eprintln!("collected {} ground-truth points", data.len());

    // candidate grammar, shaped like the printed product:
    //   PP(p1, yh_or, p3)
    //   * prod_{i=i0}^{yh} (A + i)_c / (B + i)_c
    //   * prod_{i=1}^{xh} (C + i)_{L1} / (D + i)_{L1}
    //   * prod_{i=1}^{xh} (E + i)_{L2} / (G + i)_{L2}
    // all bases/lengths linear in (yh, a, c) with small constants.
    let mut survivors: Vec<String> = Vec::new();
    // base terms as closures computing from (xh, yh, a, c)
    type F = Box<dyn Fn(i64, i64, i64, i64) -> i64>;
    let terms: Vec<(String, F)> = vec![
        ("yh+a".into(), Box::new(|_, yh, a, _| yh + a) as F),
        ("yh+a+1".into(), Box::new(|_, yh, a, _| yh + a + 1)),
        ("yh+a+c".into(), Box::new(|_, yh, a, c| yh + a + c)),
        ("yh+a+c+1".into(), Box::new(|_, yh, a, c| yh + a + c + 1)),
        ("yh+a+2c+1".into(), Box::new(|_, yh, a, c| yh + a + 2 * c + 1)),
        ("0".into(), Box::new(|_, _, _, _| 0)),
        ("1".into(), Box::new(|_, _, _, _| 1)),
        ("c".into(), Box::new(|_, _, _, c| c)),
        ("c+1".into(), Box::new(|_, _, _, c| c + 1)),
        ("2c".into(), Box::new(|_, _, _, c| 2 * c)),
        ("2c+1".into(), Box::new(|_, _, _, c| 2 * c + 1)),
    ];
    let lens: Vec<(String, F)> = vec![
        ("yh".into(), Box::new(|_, yh, _, _| yh) as F),
        ("yh+1".into(), Box::new(|_, yh, _, _| yh + 1)),
        ("yh+c".into(), Box::new(|_, yh, _, c| yh + c)),
        ("yh+c+1".into(), Box::new(|_, yh, _, c| yh + c + 1)),
    ];
    let pp1: Vec<(String, F)> = vec![
        ("xh+c".into(), Box::new(|xh, _, _, c| xh + c) as F),
        ("xh+c+1".into(), Box::new(|xh, _, _, c| xh + c + 1)),
    ];
    let pp3: Vec<(String, F)> = vec![
        ("c".into(), Box::new(|_, _, _, c| c) as F),
        ("c+1".into(), Box::new(|_, _, _, c| c + 1)),
    ];

    let eval = |f: &F, xh: i64, yh: i64, a: i64, c: i64| f(xh, yh, a, c);

    // indices: A in terms[0..5], B in terms[5..11]; C,E in terms[0..5]; D,G in terms[5..11]
    let num_terms = [0usize, 1, 2, 3, 4];
    let den_terms = [5usize, 6, 7, 8, 9, 10];
    let mut tested = 0u64;
    for (p1n, p1f) in &pp1 {
        for (p3n, p3f) in &pp3 {
            for &ai in &num_terms {
                for &bi in &den_terms {
                    for i0 in [0i64, 1] {
                        for &ci in &num_terms {
                            for &di in &den_terms {
                                for (l1n, l1f) in &lens {
                                    for &ei in &num_terms {
                                        for &gi in &den_terms {
                                            for (l2n, l2f) in &lens {
                                                tested += 1;
                                                let mut ok = true;
                                                for (x, y, a, c, want) in &data {
                                                    let (xh, yh) = (x / 2, (y - 1) / 2);
                                                    let mut num = BigInt::from(pp(
                                                        eval(p1f, xh, yh, *a, *c).max(0) as u32,
                                                        yh as u32,
                                                        eval(p3f, xh, yh, *a, *c).max(0) as u32,
                                                    ));
                                                    let mut den = BigInt::one();
                                                    for i in i0..=yh {
                                                        num *= pochhammer(
                                                            eval(&terms[ai].1, xh, yh, *a, *c) + i,
                                                            *c as u32,
                                                        );
                                                        den *= pochhammer(
                                                            eval(&terms[bi].1, xh, yh, *a, *c) + i,
                                                            *c as u32,
                                                        );
                                                    }
                                                    let l1 = eval(l1f, xh, yh, *a, *c).max(0) as u32;
                                                    let l2 = eval(l2f, xh, yh, *a, *c).max(0) as u32;
                                                    for i in 1..=xh {
                                                        num *= pochhammer(
                                                            eval(&terms[ci].1, xh, yh, *a, *c) + i,
                                                            l1,
                                                        );
                                                        den *= pochhammer(
                                                            eval(&terms[di].1, xh, yh, *a, *c) + i,
                                                            l1,
                                                        );
                                                        num *= pochhammer(
                                                            eval(&terms[ei].1, xh, yh, *a, *c) + i,
                                                            l2,
                                                        );
                                                        den *= pochhammer(
                                                            eval(&terms[gi].1, xh, yh, *a, *c) + i,
                                                            l2,
                                                        );
                                                    }
                                                    if den.is_one() {
                                                        if num != *want {
                                                            ok = false;
                                                            break;
                                                        }
                                                    } else if &num != &(want * &den) {
                                                        ok = false;
                                                        break;
                                                    }
                                                }
                                                if ok {
                                                    survivors.push(format!(
                                                        "PP({p1n},yh,{p3n}) * prod_{{i={i0}}}^{{yh}} ({}+i)_c/({}+i)_c * prod_{{i=1}}^{{xh}} ({}+i)_{{{l1n}}}/({}+i)_{{{l1n}}} * ({}+i)_{{{l2n}}}/({}+i)_{{{l2n}}}",
                                                        terms[ai].0, terms[bi].0,
                                                        terms[ci].0, terms[di].0,
                                                        terms[ei].0, terms[gi].0
                                                    ));
                                                }
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    eprintln!("tested {tested} candidates");
    for s in &survivors {
        println!("SURVIVOR: {s}");
    }
    eprintln!("{} survivors", survivors.len());
}
