//! Fixed membership anchors, including every pure power `X^l - q` with
//! primes `l, q <= 7` against `E(p)` for primes `p <= 7`.

use std::thread;

use thalg::galois::{complex_conjugation, galois_data, Caps};
use thalg::membership::{FieldTag, Oracle};
use thalg::sturm::is_totally_real;
use thalg::PolyZ;

const PRIMES: [u64; 4] = [2, 3, 5, 7];

#[test]
fn pure_power_anchors() {
    let oracle = Oracle::default();
    let polys: Vec<(u64, u64)> = PRIMES.iter().flat_map(|&l| PRIMES.iter().map(move |&q| (l, q))).collect();
    thread::scope(|s| {
        for &(l, q) in &polys {
            let oracle = &oracle;
            s.spawn(move || {
                let f = PolyZ::pure_power(l as usize, q as i64);
                for p in PRIMES {
                    let got = oracle.has_root(&f, FieldTag::E(p)).unwrap();
                    let want = l == 2 || l == p;
                    assert_eq!(got, want, "X^{l} - {q} over E({p})");
                    assert_eq!(oracle.splits(&f, FieldTag::E(p)).unwrap(), want);
                }
            });
        }
    });
}

#[test]
fn field_anchors() {
    let z = PolyZ::from_i64s;
    let o = Oracle::default();
    // L: Q(sqrt 2), Q(i) inside, Q(2^(1/4)) not
    assert!(o.has_root(&z(&[-2, 0, 1]), FieldTag::L).unwrap());
    assert!(o.has_root(&z(&[1, 0, 1]), FieldTag::L).unwrap());
    assert!(!o.has_root(&z(&[-2, 0, 0, 0, 1]), FieldTag::L).unwrap());
    // a reducible input with one bad factor does not split
    let f = z(&[-2, 0, 1]).mul(&PolyZ::pure_power(5, 2));
    assert!(o.has_root(&f, FieldTag::E(3)).unwrap());
    assert!(!o.splits(&f, FieldTag::E(3)).unwrap());
    // QBAR
    assert!(o.has_root(&z(&[7, 0, 0, 1]), FieldTag::QBar).unwrap());
}

#[test]
fn conjugation_is_trivial_iff_totally_real() {
    let cases: [&[i64]; 7] = [
        &[-1, 1, 1],
        &[-1, -2, 1, 1],
        &[-2, 0, 0, 1],
        &[1, 0, 1],
        &[1, 0, 0, 0, 1],
        &[2, 0, -4, 0, 1],
        &[-3, 0, 1],
    ];
    for c in cases {
        let f = PolyZ::from_i64s(c);
        let d = galois_data(&f, Caps::default()).unwrap();
        let conj = complex_conjugation(&d.roots, &d.group).unwrap();
        assert_eq!(conj, d.conjugation);
        assert_eq!(is_totally_real(&f).unwrap(), conj.is_identity(), "{f}");
    }
}
