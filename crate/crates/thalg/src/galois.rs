//! Splitting fields as explicit towers and Galois groups as permutations of
//! labelled complex roots.
//!
//! A tower is grown by adjoining one root at a time. After each step the field
//! is re-expressed by a primitive element `θ = r_j + k θ_prev`, so every
//! element, and every root, is a rational polynomial in `θ`. The automorphisms
//! are the embeddings of the tower into C; they are enumerated level by level
//! by sending each adjoined root to a root of the conjugated level polynomial,
//! with candidates separated by certified interval evaluation.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::cinterval::{eval_poly, CInterval};
use crate::error::{Error, Result};
use crate::factor::{factor, good_primes};
use crate::modp::{factor_degrees, PolyP};
use crate::numfield::{shift_sequence, NumberField, PolyK};
use crate::perm::{Perm, PermGroup};
use crate::poly::{clear_denominators, discriminant, is_squarefree, PolyQ, PolyZ, Rat};
use crate::roots::{RootBox, RootSet};

/// Default cap on `[Ñ : Q]`.
pub const DEFAULT_MAX_SPLITTING_DEGREE: usize = 2000;
/// Default cap on the degree of the defining polynomial.
pub const DEFAULT_MAX_DEFINING_DEGREE: usize = 8;

/// One adjunction step of a tower.
#[derive(Clone, Debug)]
pub struct Level {
    /// Minimal polynomial of the adjoined root over the field below, with
    /// coefficients written in the primitive element of that field.
    pub min_poly: PolyK,
    /// Label of the adjoined root.
    pub root: usize,
    pub root_box: RootBox,
    /// Primitive element of this level as integer combination of root labels.
    pub primitive: Vec<BigInt>,
    /// Minimal polynomial over Q of this level's primitive element.
    pub primitive_min_poly: PolyQ,
}

/// Splitting field of a squarefree polynomial as a tower of simple extensions.
#[derive(Clone, Debug)]
pub struct TowerField {
    poly: PolyZ,
    roots: RootSet,
    levels: Vec<Level>,
    field: NumberField,
    primitive: Vec<BigInt>,
    root_exprs: Vec<PolyQ>,
}

impl TowerField {
    pub fn poly(&self) -> &PolyZ {
        &self.poly
    }

    pub fn degree(&self) -> usize {
        self.field.degree()
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn roots(&self) -> &RootSet {
        &self.roots
    }

    pub fn root_boxes(&self) -> Vec<RootBox> {
        self.roots.boxes()
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    /// Root `j` as a polynomial in the primitive element.
    pub fn root_expr(&self, j: usize) -> &PolyQ {
        &self.root_exprs[j]
    }

    /// The primitive element as an integer combination of root labels.
    pub fn primitive(&self) -> &[BigInt] {
        &self.primitive
    }
}

fn combo_enclosure(roots: &RootSet, combo: &[BigInt], images: &[usize], bits: u32) -> CInterval {
    let mut acc = CInterval::zero();
    for (a, c) in combo.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let e = roots.enclosure(images[a]);
        acc = acc.add(&e.scale(&Rat::from_integer(c.clone()), bits));
    }
    acc
}

/// Evaluates `g(θ, r)` for `g ∈ K[x]`, `θ` and `r` as enclosures.
fn eval_polyk(g: &PolyK, theta: &CInterval, r: &CInterval, bits: u32) -> CInterval {
    let mut acc = CInterval::zero();
    for c in g.c.iter().rev() {
        let cv = eval_poly(c, theta, bits);
        acc = acc.mul(r, bits).add(&cv);
    }
    acc
}

/// Precision schedule: box width `2^-k` and working bits.
struct Precision {
    k: u32,
}

impl Precision {
    fn new() -> Self {
        Precision { k: 24 }
    }
    fn eps(&self) -> Rat {
        Rat::new(BigInt::one(), BigInt::one() << self.k)
    }
    fn bits(&self) -> u32 {
        2 * self.k + 64
    }
    fn bump(&mut self) -> Result<()> {
        self.k *= 2;
        if self.k > 1 << 16 {
            return Err(Error::EmbeddingUnresolved);
        }
        Ok(())
    }
}

/// Assigns each label to the unique factor vanishing at it, refining until
/// the assignment is unambiguous and each factor receives `deg` labels.
fn assign_labels(
    roots: &mut RootSet,
    prec: &mut Precision,
    combo: &[BigInt],
    factors: &[PolyK],
    labels: &[usize],
) -> Result<Vec<Vec<usize>>> {
    let ident: Vec<usize> = (0..roots.len()).collect();
    loop {
        roots.refine(&prec.eps());
        let bits = prec.bits();
        let theta = combo_enclosure(roots, combo, &ident, bits);
        let mut groups = vec![Vec::new(); factors.len()];
        let mut ok = true;
        for &j in labels {
            let r = roots.enclosure(j);
            let hits: Vec<usize> = factors
                .iter()
                .enumerate()
                .filter(|(_, g)| eval_polyk(g, &theta, &r, bits).contains_zero())
                .map(|(i, _)| i)
                .collect();
            if hits.len() != 1 {
                ok = false;
                break;
            }
            groups[hits[0]].push(j);
        }
        if ok && groups.iter().zip(factors).all(|(g, f)| g.len() == f.deg() as usize) {
            return Ok(groups);
        }
        prec.bump()?;
    }
}

/// Splits the labels of `roots` among pairwise coprime rational factors of
/// its polynomial.
pub(crate) fn label_factors(roots: &mut RootSet, factors: &[PolyZ]) -> Result<Vec<Vec<usize>>> {
    let ks: Vec<PolyK> = factors.iter().map(|g| PolyK::from_q(&g.to_q())).collect();
    let all: Vec<usize> = (0..roots.len()).collect();
    let zero = vec![BigInt::zero(); roots.len()];
    assign_labels(roots, &mut Precision::new(), &zero, &ks, &all)
}

/// Solves `sum_e x_e cols[e] = target` over Q (square, nonsingular).
fn solve(cols: &[Vec<Rat>], target: &[Rat]) -> Option<Vec<Rat>> {
    let n = cols.len();
    let mut a: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rat> = (0..n).map(|e| cols[e][i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    for c in 0..n {
        let piv = (c..n).find(|&i| !a[i][c].is_zero())?;
        a.swap(c, piv);
        let inv = a[c][c].recip();
        for x in a[c].iter_mut() {
            *x *= &inv;
        }
        for i in 0..n {
            if i != c && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let (ri, rc) = if i < c {
                    let (lo, hi) = a.split_at_mut(c);
                    (&mut lo[i], &hi[0])
                } else {
                    let (lo, hi) = a.split_at_mut(i);
                    (&mut hi[0], &lo[c])
                };
                for (x, y) in ri.iter_mut().zip(rc.iter()) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n].clone()).collect())
}

/// Given `K = Q(θ)`, `g` irreducible over `K` with root `α`, and `N` the
/// minimal polynomial of `θ' = α + kθ`, returns `P` with `θ = P(θ')`.
fn express_old_generator(field: &NumberField, g: &PolyK, k: i64, n_deg: usize) -> Result<PolyQ> {
    let dk = field.degree();
    let d = g.deg() as usize;
    let flatten = |p: &PolyK| -> Vec<Rat> {
        let mut v = vec![Rat::zero(); dk * d];
        for (j, c) in p.c.iter().enumerate() {
            for (i, x) in c.coeffs().iter().enumerate() {
                v[j * dk + i] = x.clone();
            }
        }
        v
    };
    let t = field.generator();
    let step = PolyK::new(vec![t.scale(&Rat::from_integer(BigInt::from(k))), PolyQ::one()]);
    let mut cols = Vec::with_capacity(n_deg);
    let mut cur = PolyK::from_q(&PolyQ::one());
    for _ in 0..n_deg {
        cols.push(flatten(&cur));
        cur = field.pdiv_rem(&field.pmul(&cur, &step), g).1;
    }
    let target = flatten(&PolyK::new(vec![t]));
    let x = solve(&cols, &target)
        .ok_or_else(|| Error::InconsistentTower("primitive element is not primitive".into()))?;
    Ok(PolyQ::new(x))
}

/// Substitution `a(θ) ↦ a(q(θ'))` into a new field, via cached powers of `q`
/// with integer numerators over a common denominator.
struct Composer {
    /// `q^k mod m` as (numerators, denominator).
    powers: Vec<(Vec<BigInt>, BigInt)>,
    width: usize,
}

impl Composer {
    fn new(q: &PolyQ, old_degree: usize, field: &NumberField) -> Self {
        let width = field.degree();
        let mut powers = Vec::with_capacity(old_degree);
        let mut cur = PolyQ::one();
        for k in 0..old_degree.max(1) {
            if k > 0 {
                cur = field.reduce(&cur.mul(q));
            }
            let (num, den) = clear_denominators(&cur);
            let mut v = num.coeffs().to_vec();
            v.resize(width, BigInt::zero());
            // clear_denominators returns cur = num * den
            let (n, d) = (den.numer().clone(), den.denom().clone());
            powers.push((v.into_iter().map(|c| c * &n).collect(), d));
        }
        Composer { powers, width }
    }

    fn apply(&self, a: &PolyQ) -> PolyQ {
        let cs = a.coeffs();
        if cs.is_empty() {
            return PolyQ::zero();
        }
        assert!(cs.len() <= self.powers.len(), "element not reduced");
        let mut den = BigInt::one();
        for (c, (_, d)) in cs.iter().zip(&self.powers) {
            if !c.is_zero() {
                den = den.lcm(&(c.denom() * d));
            }
        }
        let mut acc = vec![BigInt::zero(); self.width];
        for (c, (v, d)) in cs.iter().zip(&self.powers) {
            if c.is_zero() {
                continue;
            }
            let scale = c.numer() * (&den / (c.denom() * d));
            for (x, y) in acc.iter_mut().zip(v) {
                *x += &scale * y;
            }
        }
        PolyQ::new(acc.into_iter().map(|x| Rat::new(x, den.clone())).collect())
    }

    fn apply_k(&self, g: &PolyK) -> PolyK {
        PolyK::new(g.c.iter().map(|c| self.apply(c)).collect())
    }
}

/// Builds the splitting field of a squarefree `f` with `[Ñ:Q] <= cap`.
pub fn splitting_field(f: &PolyZ) -> Result<TowerField> {
    splitting_field_with_cap(f, DEFAULT_MAX_SPLITTING_DEGREE)
}

pub fn splitting_field_with_cap(f: &PolyZ, cap: usize) -> Result<TowerField> {
    let n = match f.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::DegreeTooSmall),
        Some(n) => n,
    };
    if !is_squarefree(f) {
        return Err(Error::NotSquarefree);
    }
    let mut roots = RootSet::new(f)?;
    let mut prec = Precision::new();
    let mut field = NumberField::rationals();
    let mut primitive = vec![BigInt::zero(); n];
    let mut exprs: Vec<Option<PolyQ>> = vec![None; n];
    let mut levels = Vec::new();

    let qfactors: Vec<PolyK> = factor(&f.primitive())?
        .distinct()
        .iter()
        .map(|g| PolyK::from_q(&g.to_q().monic()))
        .collect();
    let all: Vec<usize> = (0..n).collect();
    let groups = assign_labels(&mut roots, &mut prec, &primitive, &qfactors, &all)?;
    let mut pending: Vec<(PolyK, Vec<usize>)> = Vec::new();
    for (g, labels) in qfactors.into_iter().zip(groups) {
        if g.deg() == 1 {
            exprs[labels[0]] = Some(g.c[0].neg());
        } else {
            pending.push((g, labels));
        }
    }

    while !pending.is_empty() {
        let idx = (0..pending.len())
            .min_by_key(|&i| pending[i].1[0])
            .unwrap();
        let (g, labels) = pending.remove(idx);
        let j0 = labels[0];
        let dk = field.degree();
        let d = g.deg() as usize;
        let estimate = dk * d;
        if estimate > cap {
            return Err(Error::DegreeCapExceeded {
                estimate: estimate as u64,
                cap: cap as u64,
            });
        }
        // primitive element θ' = r_j0 + k θ
        let t = field.generator();
        let (k, nmin) = if dk == 1 {
            (0i64, g.to_q().expect("rational level").monic())
        } else {
            let mut found = None;
            for k in shift_sequence() {
                let kt = t.scale(&Rat::from_integer(BigInt::from(k)));
                let shifted = field.pshift(&g, &kt.neg());
                if !field.norm_squarefree_mod(&shifted) {
                    continue;
                }
                let nm = field.pnorm(&shifted).monic();
                if is_squarefree(&nm.to_primitive_z()) {
                    found = Some((k, nm));
                    break;
                }
            }
            found.unwrap()
        };
        let new_field = NumberField::new(nmin.clone());
        let p_old = if dk == 1 {
            PolyQ::zero()
        } else {
            express_old_generator(&field, &g, k, new_field.degree())?
        };
        // α = θ' - k P(θ')
        let alpha = PolyQ::x().sub(&p_old.scale(&Rat::from_integer(BigInt::from(k))));
        let alpha = new_field.reduce(&alpha);
        let composer = Composer::new(&p_old, field.degree(), &new_field);
        for e in exprs.iter_mut().flatten() {
            *e = composer.apply(e);
        }
        exprs[j0] = Some(alpha.clone());
        let mut new_prim: Vec<BigInt> = primitive.iter().map(|c| c * BigInt::from(k)).collect();
        new_prim[j0] += BigInt::one();

        let mapped_g = composer.apply_k(&g);
        let lin = PolyK::new(vec![alpha.neg(), PolyQ::one()]);
        let (rest, rem) = new_field.pdiv_rem(&mapped_g, &lin);
        if !rem.is_zero() {
            return Err(Error::InconsistentTower("adjoined root is not a root".into()));
        }
        levels.push(Level {
            min_poly: g.clone(),
            root: j0,
            root_box: roots.root_box(j0),
            primitive: new_prim.clone(),
            primitive_min_poly: nmin,
        });
        field = new_field;
        primitive = new_prim;

        let mut work: Vec<(PolyK, Vec<usize>)> = Vec::new();
        if rest.deg() >= 1 {
            work.push((rest, labels[1..].to_vec()));
        }
        for (h, ls) in pending.drain(..) {
            work.push((composer.apply_k(&h), ls));
        }
        for (h, ls) in work {
            let fs = field.factor(&h);
            let groups = assign_labels(&mut roots, &mut prec, &primitive, &fs, &ls)?;
            for (gk, ls) in fs.into_iter().zip(groups) {
                if gk.deg() == 1 {
                    exprs[ls[0]] = Some(gk.c[0].neg());
                } else {
                    pending.push((gk, ls));
                }
            }
        }
    }

    Ok(TowerField {
        poly: f.clone(),
        roots,
        levels,
        field,
        primitive,
        root_exprs: exprs.into_iter().map(|e| e.expect("all roots identified")).collect(),
    })
}

/// Extends a partial embedding level by level. Returns `false` when some
/// level has an ambiguous candidate set at this precision.
fn extend(
    t: &TowerField,
    roots: &RootSet,
    bits: u32,
    depth: usize,
    base: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) -> bool {
    let n = roots.len();
    if depth == t.levels.len() {
        out.push(base.clone());
        return true;
    }
    let level = &t.levels[depth];
    let theta = if depth == 0 {
        CInterval::zero()
    } else {
        combo_enclosure(roots, &t.levels[depth - 1].primitive, base, bits)
    };
    let used: BTreeSet<usize> = t.levels[..depth].iter().map(|l| base[l.root]).collect();
    let cands: Vec<usize> = (0..n)
        .filter(|j| !used.contains(j))
        .filter(|&j| eval_polyk(&level.min_poly, &theta, &roots.enclosure(j), bits).contains_zero())
        .collect();
    if cands.len() != level.min_poly.deg() as usize {
        return false;
    }
    for c in cands {
        base[level.root] = c;
        if !extend(t, roots, bits, depth + 1, base, out) {
            return false;
        }
    }
    base[level.root] = level.root;
    true
}

/// The Galois group of the tower's defining polynomial, acting on root labels.
pub fn galois_group(t: &TowerField) -> Result<PermGroup> {
    let mut roots = t.roots.clone();
    let n = roots.len();
    let mut prec = Precision::new();
    'retry: loop {
        roots.refine(&prec.eps());
        let bits = prec.bits();
        let mut leaves = Vec::new();
        let mut base: Vec<usize> = (0..n).collect();
        if !extend(t, &roots, bits, 0, &mut base, &mut leaves) {
            prec.bump()?;
            continue;
        }
        if leaves.len() != t.degree() {
            return Err(Error::InconsistentTower(format!(
                "{} embeddings for a field of degree {}",
                leaves.len(),
                t.degree()
            )));
        }
        // An automorphism is fixed by its action on the level roots, so
        // permutations are computed only until the leaves' restrictions are
        // all accounted for by the generated group.
        let level_roots: Vec<usize> = t.levels.iter().map(|l| l.root).collect();
        let restrict = |img: &dyn Fn(usize) -> usize| level_roots.iter().map(|&r| img(r)).collect::<Vec<usize>>();
        let leaf_keys: BTreeSet<Vec<usize>> = leaves.iter().map(|l| restrict(&|r| l[r])).collect();
        let mut gens: Vec<Perm> = Vec::new();
        let mut g = PermGroup::trivial(n);
        for images in &leaves {
            if g.order() == t.degree() {
                break;
            }
            let key = restrict(&|r| images[r]);
            if g.elements().iter().any(|p| restrict(&|r| p.apply(r)) == key) {
                continue;
            }
            let theta = combo_enclosure(&roots, &t.primitive, images, bits);
            let mut img = Vec::with_capacity(n);
            for j in 0..n {
                let v = eval_poly(&t.root_exprs[j], &theta, bits);
                let hits: Vec<usize> = (0..n).filter(|&i| v.overlaps_box(&roots.root_box(i))).collect();
                if hits.len() != 1 {
                    prec.bump()?;
                    continue 'retry;
                }
                img.push(hits[0] as u32);
            }
            let p = Perm::from_images(img)
                .ok_or_else(|| Error::InconsistentTower("embedding is not a bijection".into()))?;
            gens.push(p);
            g = PermGroup::generate(n, &gens, t.degree())
                .map_err(|_| Error::InconsistentTower("automorphisms generate too large a group".into()))?;
        }
        let group_keys: BTreeSet<Vec<usize>> = g.elements().iter().map(|p| restrict(&|r| p.apply(r))).collect();
        if g.order() != t.degree() || group_keys != leaf_keys {
            return Err(Error::InconsistentTower("group differs from the embeddings".into()));
        }
        return Ok(g);
    }
}

/// Complex conjugation on the labelled roots, as an element of `g`.
pub fn complex_conjugation(roots: &RootSet, g: &PermGroup) -> Result<Perm> {
    let img: Vec<u32> = (0..roots.len()).map(|i| roots.conjugate_of(i) as u32).collect();
    let c = Perm::from_images(img).ok_or(Error::EmbeddingUnresolved)?;
    if !g.contains(&c) {
        return Err(Error::InconsistentTower("complex conjugation outside the group".into()));
    }
    Ok(c)
}

/// How a Galois group was obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupCertificate {
    /// Explicit splitting-field tower of the given degree.
    Tower { degree: usize },
    /// Full symmetric group, certified by Frobenius cycle types: the listed
    /// primes supply a transposition power and primitivity.
    Symmetric { primes: Vec<u64> },
    /// Full alternating group: square discriminant, a 3-cycle power and
    /// primitivity from the listed primes.
    Alternating { primes: Vec<u64> },
}

/// Galois group of a squarefree polynomial with its complex conjugation.
#[derive(Clone, Debug)]
pub struct GaloisData {
    pub poly: PolyZ,
    pub roots: RootSet,
    pub group: PermGroup,
    pub conjugation: Perm,
    pub certificate: GroupCertificate,
}

/// Caps for Galois computations.
#[derive(Clone, Copy, Debug)]
pub struct Caps {
    pub max_splitting_degree: usize,
    pub max_defining_degree: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_splitting_degree: DEFAULT_MAX_SPLITTING_DEGREE,
            max_defining_degree: DEFAULT_MAX_DEFINING_DEGREE,
        }
    }
}

/// Number of Frobenius cycle types sampled when certifying S_n or A_n.
const FROBENIUS_SAMPLES: usize = 200;

pub fn galois_data(f: &PolyZ, caps: Caps) -> Result<GaloisData> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if n == 0 {
        return Err(Error::DegreeTooSmall);
    }
    if n > caps.max_defining_degree {
        return Err(Error::DegreeCapExceeded {
            estimate: n as u64,
            cap: caps.max_defining_degree as u64,
        });
    }
    if !is_squarefree(f) {
        return Err(Error::NotSquarefree);
    }
    let f = f.primitive();
    let irreducible = factor(&f)?.is_irreducible();
    if irreducible {
        if let Some(cert) = certify_full_group(&f) {
            let group = match cert {
                GroupCertificate::Alternating { .. } => PermGroup::alternating(n),
                _ => PermGroup::symmetric(n),
            };
            let roots = RootSet::new(&f)?;
            let conjugation = complex_conjugation(&roots, &group)?;
            return Ok(GaloisData {
                poly: f,
                roots,
                group,
                conjugation,
                certificate: cert,
            });
        }
    }
    let tower = splitting_field_with_cap(&f, caps.max_splitting_degree)?;
    let group = galois_group(&tower)?;
    let conjugation = complex_conjugation(tower.roots(), &group)?;
    Ok(GaloisData {
        poly: f,
        roots: tower.roots().clone(),
        group,
        conjugation,
        certificate: GroupCertificate::Tower {
            degree: tower.degree(),
        },
    })
}

fn is_prime(q: usize) -> bool {
    q >= 2 && (2..q).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

/// Dedekind: for a good prime the factorization pattern of `f mod p` is the
/// cycle type of a Galois element. Combined with Jordan-type criteria this
/// certifies `Gal = S_n` or `A_n` for irreducible `f`.
pub fn certify_full_group(f: &PolyZ) -> Option<GroupCertificate> {
    let n = f.deg() as usize;
    if n <= 2 {
        return Some(GroupCertificate::Symmetric { primes: vec![] });
    }
    let disc = discriminant(f).ok()?;
    let disc_square = !disc.is_negative() && {
        let s = disc.sqrt();
        &s * &s == disc
    };
    if n == 3 {
        // transitive subgroups of S3: A3 (square discriminant) or S3
        return Some(if disc_square {
            GroupCertificate::Alternating { primes: vec![] }
        } else {
            GroupCertificate::Symmetric { primes: vec![] }
        });
    }
    let mut primitive: Option<u64> = if is_prime(n) { Some(0) } else { None };
    let mut special: Option<u64> = None;
    for p in good_primes(f).take(FROBENIUS_SAMPLES) {
        let t = factor_degrees(&PolyP::from_z(f, p));
        if primitive.is_none() && primitivity_witness(&t, n) {
            primitive = Some(p);
        }
        if special.is_none() {
            let hit = if disc_square { three_cycle_power(&t) } else { transposition_power(&t) };
            if hit {
                special = Some(p);
            }
        }
        if let (Some(a), Some(b)) = (primitive, special) {
            let primes: Vec<u64> = [a, b].into_iter().filter(|&x| x != 0).collect();
            return Some(if disc_square {
                GroupCertificate::Alternating { primes }
            } else {
                GroupCertificate::Symmetric { primes }
            });
        }
    }
    None
}

/// Some power is a transposition: exactly one 2-cycle, other cycles odd.
fn transposition_power(t: &[usize]) -> bool {
    t.iter().filter(|&&c| c == 2).count() == 1 && t.iter().all(|&c| c == 2 || c % 2 == 1)
}

/// Some power is a 3-cycle: exactly one 3-cycle, other lengths prime to 3.
fn three_cycle_power(t: &[usize]) -> bool {
    t.iter().filter(|&&c| c == 3).count() == 1 && t.iter().all(|&c| c == 3 || c % 3 != 0)
}

/// An (n-1)-cycle fixing a point (2-transitivity), or a power that is a
/// q-cycle for a prime q > n/2; either forces a transitive group to be
/// primitive.
fn primitivity_witness(t: &[usize], n: usize) -> bool {
    if t == [1, n - 1] {
        return true;
    }
    t.iter().any(|&q| {
        is_prime(q) && 2 * q > n && t.iter().filter(|&&c| c % q == 0).count() == 1
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(c: &[i64]) -> PolyZ {
        PolyZ::from_i64s(c)
    }

    #[test]
    fn tower_degrees() {
        assert_eq!(splitting_field(&z(&[-2, 0, 1])).unwrap().degree(), 2);
        assert_eq!(splitting_field(&z(&[-2, 0, 0, 1])).unwrap().degree(), 6);
        let f = z(&[-2, 0, 1]).mul(&z(&[-3, 0, 1]));
        assert_eq!(splitting_field(&f).unwrap().degree(), 4);
        assert_eq!(splitting_field(&z(&[-1, 1])).unwrap().degree(), 1);
    }

    #[test]
    fn groups() {
        let g = galois_group(&splitting_field(&z(&[1, 0, 1])).unwrap()).unwrap();
        assert_eq!(g.order(), 2);
        let g = galois_group(&splitting_field(&z(&[1, 0, 0, 0, 1])).unwrap()).unwrap();
        assert_eq!(g.order(), 4);
        assert!(g.elements().iter().all(|x| x.is_identity() || x.order() == 2));
        let t = splitting_field(&z(&[-2, 0, 0, 0, 1])).unwrap();
        assert_eq!(t.degree(), 8);
        let g = galois_group(&t).unwrap();
        assert_eq!(g.order(), 8);
        assert!(g.is_transitive_on(&[0, 1, 2, 3]));
        assert!(!g.is_abelian());
    }

    #[test]
    fn conjugation() {
        let t = splitting_field(&z(&[-2, 0, 1])).unwrap();
        let g = galois_group(&t).unwrap();
        assert!(complex_conjugation(t.roots(), &g).unwrap().is_identity());
        let t = splitting_field(&z(&[1, 0, 1])).unwrap();
        let g = galois_group(&t).unwrap();
        let c = complex_conjugation(t.roots(), &g).unwrap();
        assert_eq!(c.cycle_type(), vec![2]);
        let t = splitting_field(&z(&[-2, 0, 0, 1])).unwrap();
        let g = galois_group(&t).unwrap();
        let c = complex_conjugation(t.roots(), &g).unwrap();
        assert_eq!(c.cycle_type(), vec![1, 2]);
        let real = (0..3).find(|&i| t.roots().is_real(i)).unwrap();
        assert!(c.fixes(real));
    }

    #[test]
    fn frobenius_certificates() {
        assert!(matches!(
            certify_full_group(&z(&[-1, -1, 0, 0, 0, 1])),
            Some(GroupCertificate::Symmetric { .. })
        ));
        // x^5 - 2 has group F20, never certified as S5 or A5
        assert_eq!(certify_full_group(&z(&[-2, 0, 0, 0, 0, 1])), None);
        // x^3 - 3x + 1 is cyclic of order 3
        assert!(matches!(
            certify_full_group(&z(&[1, -3, 0, 1])),
            Some(GroupCertificate::Alternating { .. })
        ));
    }
}
