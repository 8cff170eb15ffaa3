//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thalg::axioms::{axiom_check, axiom_stream};
use thalg::embedding::{brute_force_solvable, epimorphisms, solve_embedding_problem, EmbeddingOutcome, EmbeddingProblem};
use thalg::factor::factor;
use thalg::galois::{galois_data, galois_group, splitting_field, Caps};
use thalg::group::catalogue;
use thalg::membership::{literal_e_search, ClassKind, FieldTag, Oracle};
use thalg::orbit::{build_blocks, full_basis, proper_subsets, verify_lemma, FpModule, Matrix};
use thalg::poly::{discriminant, squarefree_part};
use thalg::roots::isolate_roots;
use thalg::sentence::Family;
use thalg::sturm::{cauchy_bound, count_real_roots, is_totally_real, sturm_count};
use thalg::{Error, PolyZ, Rat};

type Check = std::result::Result<String, String>;

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 10] = [
        ("factorization oracle equivalence", c1_factor),
        ("real-root triple agreement", c2_real_roots),
        ("totally real anchors", c3_totally_real),
        ("galois fixtures and resolvent oracle", c4_galois),
        ("E(3) anchors and monotonicity chain", c5_membership),
        ("dichotomy property", c6_dichotomy),
        ("fidelity search agrees with H-criterion", c7_fidelity),
        ("axiom stream", c8_axioms),
        ("embedding problems vs brute force", c9_embedding),
        ("orbit lemma at truncation", c10_orbits),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let r = run();
        let secs = t.elapsed().as_secs_f64();
        match r {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} ({secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} ({secs:.1}s)", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn z(c: &[i64]) -> PolyZ {
    PolyZ::from_i64s(c)
}

fn monic(tail: &[i64]) -> PolyZ {
    let t: Vec<BigInt> = tail.iter().map(|&x| BigInt::from(x)).collect();
    PolyZ::monic_from_tail(&t)
}

/// Every coefficient tuple of length `n` over `[-h, h]`.
fn tails(n: usize, h: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|t| {
                (-h..=h).map(move |c| {
                    let mut t = t.clone();
                    t.push(c);
                    t
                })
            })
            .collect();
    }
    out
}

/// Reducibility of a monic integer polynomial of degree <= 4 by direct
/// search: an integer root, or (degree 4) a split into monic quadratics with
/// coefficients inside the Mignotte bound.
fn brute_reducible(a: &[i64]) -> bool {
    let n = a.len();
    let eval = |x: i64| -> i128 {
        let mut v: i128 = 1;
        for &c in a.iter().rev() {
            v = v * x as i128 + c as i128;
        }
        v
    };
    let a0 = a[0];
    if a0 == 0 {
        return n > 1;
    }
    let has_root = (1..=a0.abs()).filter(|d| a0 % d == 0).any(|d| eval(d) == 0 || eval(-d) == 0);
    if has_root {
        return n > 1;
    }
    if n < 4 {
        return false;
    }
    let norm = (1 + a.iter().map(|c| c * c).sum::<i64>()) as f64;
    let bound = (2.0 * norm.sqrt()).ceil() as i64 + 1;
    for c in -bound..=bound {
        if c == 0 || a0 % c != 0 {
            continue;
        }
        let e = a0 / c;
        for b in -bound..=bound {
            let d = a[3] - b;
            if c + e + b * d == a[2] && b * e + c * d == a[1] {
                return true;
            }
        }
    }
    false
}

fn c1_factor() -> Check {
    let mut count = 0;
    for n in 1..=4 {
        for t in tails(n, 3) {
            let f = monic(&t);
            let fz = factor(&f).map_err(|e| format!("{f}: {e}"))?;
            ensure(fz.reassemble() == f, || format!("{f} does not reassemble"))?;
            let reducible = !fz.is_irreducible();
            ensure(reducible == brute_reducible(&t), || format!("{f}: verdict differs from search"))?;
            count += 1;
        }
    }
    Ok(format!("{count} monic inputs"))
}

fn random_poly(rng: &mut ChaCha8Rng, max_deg: usize, h: i64) -> PolyZ {
    loop {
        let d = rng.gen_range(1..=max_deg);
        let c: Vec<i64> = (0..=d).map(|_| rng.gen_range(-h..=h)).collect();
        if c[d] != 0 {
            return z(&c);
        }
    }
}

fn c2_real_roots() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let eps = Rat::new(1.into(), 1024.into());
    for _ in 0..500 {
        let f = random_poly(&mut rng, 6, 10);
        let g = squarefree_part(&f).map_err(|e| e.to_string())?;
        let b = Rat::from_integer(cauchy_bound(&g) + 1);
        let s = sturm_count(&g, &-b.clone(), &b).map_err(|e| e.to_string())?;
        let c = count_real_roots(&f).map_err(|e| e.to_string())?;
        let r = isolate_roots(&g, &eps).map_err(|e| e.to_string())?.iter().filter(|x| x.is_real()).count();
        ensure(s == c && c == r, || format!("{f}: sturm {s}, count {c}, boxes {r}"))?;
    }
    Ok("500 random inputs".into())
}

fn c3_totally_real() -> Check {
    for (c, want) in [(&[-1, 1, 1][..], true), (&[-1, -2, 1, 1], true), (&[-2, 0, 0, 1], false), (&[1, 0, 1], false)] {
        let f = z(c);
        let got = is_totally_real(&f).map_err(|e| e.to_string())?;
        ensure(got == want, || format!("{f}: got {got}"))?;
    }
    Ok("4 anchors".into())
}

fn is_square(n: &BigInt) -> bool {
    !n.is_negative() && {
        let r = n.sqrt();
        &r * &r == *n
    }
}

/// Rational roots of a monic integer cubic.
fn int_roots(f: &PolyZ) -> Vec<BigInt> {
    let a0 = f.coeff(0);
    if a0.is_zero() {
        let mut r = int_roots(&PolyZ::new(f.coeffs()[1..].to_vec()));
        r.push(BigInt::zero());
        return r;
    }
    let m = a0.abs();
    let mut out = Vec::new();
    let mut d = BigInt::from(1);
    while d <= m {
        if m.is_multiple_of(&d) {
            for x in [d.clone(), -d.clone()] {
                if f.eval(&x).is_zero() {
                    out.push(x);
                }
            }
        }
        d += 1;
    }
    out
}

/// Galois group order of an irreducible monic quartic from its cubic
/// resolvent and discriminant (Kappe-Warren for the C4/D4 split).
fn resolvent_order(f: &PolyZ) -> usize {
    let a = |i| f.coeff(i);
    let (a0, a1, a2, a3) = (a(0), a(1), a(2), a(3));
    let r = PolyZ::new(vec![
        BigInt::from(4) * &a0 * &a2 - &a1 * &a1 - &a3 * &a3 * &a0,
        &a1 * &a3 - BigInt::from(4) * &a0,
        -a2.clone(),
        BigInt::from(1),
    ]);
    let d = discriminant(f).unwrap();
    let roots = int_roots(&r);
    match roots.len() {
        0 if is_square(&d) => 12,
        0 => 24,
        1 => {
            let t = &roots[0];
            let splits_over = |b: BigInt, c: BigInt| {
                let delta = &b * &b - BigInt::from(4) * c;
                is_square(&delta) || is_square(&(&delta * &d))
            };
            if splits_over(-t.clone(), a0.clone()) && splits_over(a3.clone(), &a2 - t) {
                4
            } else {
                8
            }
        }
        _ => 4,
    }
}

fn c4_galois() -> Check {
    let mut slowest = Duration::ZERO;
    let timed = |f: &PolyZ, slowest: &mut Duration| {
        let t = Instant::now();
        let tower = splitting_field(f)?;
        let g = galois_group(&tower)?;
        *slowest = (*slowest).max(t.elapsed());
        Ok::<_, Error>(g)
    };
    fn err(f: &PolyZ) -> impl Fn(Error) -> String + '_ {
        move |e| format!("{f}: {e}")
    }
    let f = z(&[1, 0, 1]);
    let g = timed(&f, &mut slowest).map_err(err(&f))?;
    ensure(g.order() == 2, || "X^2+1".into())?;
    let f = z(&[-2, 0, 0, 1]);
    let g = timed(&f, &mut slowest).map_err(err(&f))?;
    ensure(g.order() == 6 && g.is_transitive_on(&[0, 1, 2]), || "X^3-2".into())?;
    let f = z(&[1, 0, 0, 0, 1]);
    let g = timed(&f, &mut slowest).map_err(err(&f))?;
    ensure(
        g.order() == 4 && g.elements().iter().filter(|x| !x.is_identity()).all(|x| x.order() == 2),
        || "X^4+1 is not V4".into(),
    )?;
    let f = z(&[-2, 0, 0, 0, 1]);
    let g = timed(&f, &mut slowest).map_err(err(&f))?;
    ensure(g.order() == 8, || "X^4-2".into())?;
    // quartics across all five transitive groups
    let quartics: [&[i64]; 8] = [
        &[1, 0, 0, 0, 1],
        &[-2, 0, 0, 0, 1],
        &[1, 0, -10, 0, 1],
        &[2, 0, -4, 0, 1],
        &[5, 0, 5, 0, 1],
        &[1, 1, 0, 0, 1],
        &[12, 8, 0, 0, 1],
        &[3, 0, 0, 0, 1],
    ];
    let mut seen = BTreeMap::new();
    for c in quartics {
        let f = z(c);
        let g = timed(&f, &mut slowest).map_err(err(&f))?;
        let want = resolvent_order(&f);
        ensure(g.order() == want, || format!("{f}: tower {} vs resolvent {want}", g.order()))?;
        let fast = galois_data(&f, Caps::default()).map_err(err(&f))?;
        ensure(fast.group.order() == want, || format!("{f}: galois_data order {}", fast.group.order()))?;
        *seen.entry(want).or_insert(0) += 1;
    }
    ensure(slowest < Duration::from_secs(30), || format!("slowest fixture {slowest:?}"))?;
    Ok(format!("12 fixtures, quartic orders {seen:?}, slowest {:.1}s", slowest.as_secs_f64()))
}

/// 200 deterministic inputs of degree <= 5.
fn corpus() -> Vec<PolyZ> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    (0..200).map(|_| random_poly(&mut rng, 5, 4)).collect()
}

fn c5_membership() -> Check {
    let o = Oracle::default();
    let e3 = FieldTag::E(3);
    let run = |f: &PolyZ, k| o.has_root(f, k).map_err(|e| format!("{f} over {k}: {e}"));
    for (f, want) in [
        (z(&[-2, 0, 0, 1]), true),
        (PolyZ::pure_power(5, 2), false),
        (z(&[-2, 0, 1]), true),
        (z(&[1, 0, 1]), true),
    ] {
        ensure(o.splits(&f, e3).map_err(|e| e.to_string())? == want, || format!("{f} over E(3)"))?;
        ensure(run(&f, e3)? == want, || format!("{f} root over E(3)"))?;
    }
    let mut slowest = Duration::ZERO;
    let mut counts = [0usize; 4];
    for f in corpus() {
        let t = Instant::now();
        let v = [run(&f, FieldTag::TotR)?, run(&f, FieldTag::L)?, run(&f, e3)?, run(&f, FieldTag::QBar)?];
        slowest = slowest.max(t.elapsed());
        ensure(v.windows(2).all(|w| !w[0] || w[1]), || format!("{f}: chain broken {v:?}"))?;
        for (c, b) in counts.iter_mut().zip(v) {
            *c += b as usize;
        }
    }
    ensure(slowest < Duration::from_secs(60), || format!("slowest input {slowest:?}"))?;
    Ok(format!(
        "root counts QTOTR {} <= L {} <= E {} <= QBAR {}; slowest {:.1}s",
        counts[0],
        counts[1],
        counts[2],
        counts[3],
        slowest.as_secs_f64()
    ))
}

fn c6_dichotomy() -> Check {
    let o = Oracle::default();
    let mut n = 0;
    for f in corpus() {
        for g in factor(&f).map_err(|e| e.to_string())?.distinct() {
            let r = o.has_root(&g, FieldTag::E(3)).map_err(|e| e.to_string())?;
            let s = o.splits(&g, FieldTag::E(3)).map_err(|e| e.to_string())?;
            ensure(r == s, || format!("{g}: root {r}, splits {s}"))?;
            n += 1;
        }
    }
    Ok(format!("{n} irreducible factors"))
}

fn c7_fidelity() -> Check {
    let o = Oracle::default();
    let mut n = 0;
    let mut seen = std::collections::HashSet::new();
    for f in corpus() {
        for g in factor(&f).map_err(|e| e.to_string())?.distinct() {
            if g.deg() > 3 || !seen.insert(g.clone()) {
                continue;
            }
            let h = o.has_root(&g, FieldTag::E(3)).map_err(|e| e.to_string())?;
            let lit = literal_e_search(&g, 3, Caps::default()).map_err(|e| format!("{g}: {e}"))?;
            ensure(h == lit.is_some(), || format!("{g}: H {h}, literal {}", lit.is_some()))?;
            n += 1;
        }
    }
    Ok(format!("{n} distinct factors of degree <= 3, no disagreement"))
}

fn c8_axioms() -> Check {
    let runs: Vec<Vec<String>> = (0..3)
        .map(|_| {
            let o = Oracle::default();
            axiom_stream(3, 2, 3, &o).map(|rs| rs.iter().map(|r| r.to_line()).collect())
        })
        .collect::<Result<_, _>>()
        .map_err(|e: Error| e.to_string())?;
    ensure(runs[0] == runs[1] && runs[1] == runs[2], || "runs differ".into())?;
    let o = Oracle::default();
    let recs = axiom_stream(3, 2, 3, &o).map_err(|e| e.to_string())?;
    for r in &recs {
        ensure(axiom_check(r, &o), || format!("check failed: {}", r.to_line()))?;
    }
    let mut by_tuple: BTreeMap<Vec<BigInt>, Vec<Family>> = BTreeMap::new();
    for r in &recs {
        by_tuple.entry(r.coeffs.clone()).or_default().push(r.family);
    }
    let mut irreducible = 0;
    for n in 1..=3 {
        for t in tails(n, 2) {
            let a: Vec<BigInt> = t.iter().map(|&x| BigInt::from(x)).collect();
            let label = o.classify(&a, 3).map_err(|e| e.to_string())?;
            let fams = by_tuple.get(&a).cloned().unwrap_or_default();
            let ok = match label.kind {
                ClassKind::NotIrreducible => fams.is_empty(),
                ClassKind::IrrNoRootInE => fams == [Family::Dichotomy, Family::NoRoot],
                ClassKind::IrrSplitsInE => fams == [Family::Dichotomy, Family::Splits],
            };
            irreducible += (label.kind != ClassKind::NotIrreducible) as usize;
            ensure(ok, || format!("{t:?}: families {fams:?}"))?;
        }
    }
    Ok(format!("{} records, {irreducible} irreducible tuples partitioned", recs.len()))
}

fn c9_embedding() -> Check {
    let (medium, small) = (catalogue::medium(), catalogue::small());
    let (mut problems, mut solved) = (0, 0);
    for (gn, g) in &medium {
        for (bn, b) in &small {
            for (an, a) in small.iter().filter(|(_, a)| b.order() % a.order() == 0 && g.order() % a.order() == 0) {
                let alphas = epimorphisms(b, a);
                let phis = epimorphisms(g, a);
                for alpha in alphas.iter().take(2) {
                    for phi in phis.iter().take(3) {
                        let e = EmbeddingProblem::new(g.clone(), a.clone(), b.clone(), phi.clone(), alpha.clone())
                            .map_err(|e| e.to_string())?;
                        let out = solve_embedding_problem(&e);
                        let found = match &out {
                            EmbeddingOutcome::Solved(h) => {
                                ensure(e.verify(h), || format!("{gn}->{bn} over {an}: bad gamma"))?;
                                true
                            }
                            EmbeddingOutcome::NoSolution => false,
                        };
                        ensure(found == brute_force_solvable(&e), || format!("{gn}->{bn} over {an}: verdict differs"))?;
                        problems += 1;
                        solved += found as usize;
                    }
                }
            }
        }
    }
    Ok(format!("{problems} problems, {solved} solvable"))
}

fn diag(p: u32, d: usize, v: u32) -> Matrix {
    (0..d).map(|i| (0..d).map(|j| if i == j { v % p } else { 0 }).collect()).collect()
}

fn perm_matrix(d: usize, images: &[usize]) -> Matrix {
    let mut m = vec![vec![0; d]; d];
    for (i, &j) in images.iter().enumerate() {
        m[j][i] = 1;
    }
    m
}

fn c10_orbits() -> Check {
    let configs: Vec<(&str, FpModule, usize)> = vec![
        ("trivial F2^2", FpModule::trivial(2, 2).unwrap(), 2),
        ("trivial F2^3", FpModule::trivial(2, 3).unwrap(), 3),
        ("-1 on F3^3", FpModule::new(3, 3, vec![diag(3, 3, 2)]).unwrap(), 3),
        ("-1 on F3^6", FpModule::new(3, 6, vec![diag(3, 6, 2)]).unwrap(), 4),
        ("pair swaps on F2^4", FpModule::new(2, 4, vec![perm_matrix(4, &[1, 0, 3, 2])]).unwrap(), 2),
        ("pair swaps on F3^4", FpModule::new(3, 4, vec![perm_matrix(4, &[1, 0, 3, 2])]).unwrap(), 2),
        ("3-cycles on F2^6", FpModule::new(2, 6, vec![perm_matrix(6, &[1, 2, 0, 4, 5, 3])]).unwrap(), 2),
        ("swap+shift on F3^5", FpModule::new(3, 5, vec![perm_matrix(5, &[1, 0, 3, 4, 2])]).unwrap(), 2),
    ];
    let mut lines = Vec::new();
    for (name, m, count) in &configs {
        let blocks = build_blocks(m, *count).map_err(|e| format!("{name}: {e}"))?;
        let basis = full_basis(m, &blocks);
        let sets = proper_subsets(*count);
        let r = verify_lemma(m, &blocks, &basis, &sets).map_err(|e| format!("{name}: {e}"))?;
        let want = (1 << count) - 1;
        ensure(r.ok && r.hyperplanes.len() == want && r.distinct_orbits == want, || {
            format!("{name}: {} hyperplanes, {} orbits", r.hyperplanes.len(), r.distinct_orbits)
        })?;
        ensure(r.pairs.iter().all(|p| !p.conjugate && p.witness.is_some()), || format!("{name}: pair check"))?;
        lines.push(format!("{name} m={count}: {want}"));
    }
    let swap = FpModule::new(2, 2, vec![perm_matrix(2, &[1, 0])]).unwrap();
    ensure(
        matches!(build_blocks(&swap, 2), Err(Error::NoInvariantComplement { .. })),
        || "swap on F2^2 at m=2 did not raise NoInvariantComplement".into(),
    )?;
    Ok(format!("{}; swap F2^2 m=2 raises NoInvariantComplement", lines.join(", ")))
}
