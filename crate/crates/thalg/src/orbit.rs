//! Finite-dimensional model of orbit blocks and hyperplanes: a finite matrix
//! group acting on `F_p^dim`, blocks spanned by orbits, functionals `T_I`
//! that vanish exactly on the blocks indexed by `I`, and an exhaustive check
//! that their kernels lie in pairwise distinct orbits.
//!
//! Vectors are ordered by the integer `sum v_i p^(i-1)`, so `e_1` comes first.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};

pub type Vector = Vec<u32>;
/// Row-major square matrix acting on column vectors.
pub type Matrix = Vec<Vec<u32>>;

/// Default cap on `dim`.
pub const MAX_DIM: usize = 12;
const MAX_GROUP_ORDER: usize = 1 << 16;

/// Subspace in reduced row echelon form; equal subspaces compare equal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subspace {
    pub dim: usize,
    pub rows: Vec<Vector>,
}

impl Subspace {
    pub fn span(p: u32, dim: usize, vs: &[Vector]) -> Self {
        Subspace {
            dim,
            rows: rref(p, vs.to_vec()),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn contains(&self, p: u32, v: &[u32]) -> bool {
        let mut all = self.rows.clone();
        all.push(v.to_vec());
        rref(p, all).len() == self.rows.len()
    }
}

fn mul_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

fn inv_mod(a: u32, p: u32) -> u32 {
    crate::modp::inv_mod(a as u64, p as u64) as u32
}

/// Reduced row echelon form with zero rows removed.
pub fn rref(p: u32, mut m: Vec<Vector>) -> Vec<Vector> {
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, piv);
        let inv = inv_mod(m[r][c], p);
        for x in m[r].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        for i in 0..m.len() {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for j in 0..cols {
                    let sub = mul_mod(f, m[r][j], p);
                    m[i][j] = (m[i][j] + p - sub) % p;
                }
            }
        }
        r += 1;
    }
    m.truncate(r);
    m
}

pub fn rank(p: u32, vs: &[Vector]) -> usize {
    rref(p, vs.to_vec()).len()
}

pub fn mat_vec(p: u32, m: &Matrix, v: &[u32]) -> Vector {
    m.iter()
        .map(|row| {
            (row.iter().zip(v).map(|(&a, &b)| a as u64 * b as u64).sum::<u64>() % p as u64) as u32
        })
        .collect()
}

pub fn mat_mul(p: u32, a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| ((0..n).map(|k| a[i][k] as u64 * b[k][j] as u64).sum::<u64>() % p as u64) as u32)
                .collect()
        })
        .collect()
}

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| u32::from(i == j)).collect())
        .collect()
}

/// `k`-th vector in the fixed order.
pub fn vector_at(p: u32, dim: usize, mut k: u64) -> Vector {
    let mut v = vec![0u32; dim];
    for x in v.iter_mut() {
        *x = (k % p as u64) as u32;
        k /= p as u64;
    }
    v
}

pub fn unit(dim: usize, i: usize) -> Vector {
    let mut v = vec![0; dim];
    v[i] = 1;
    v
}

/// `F_p^dim` with a finite group of invertible matrices.
#[derive(Clone, Debug)]
pub struct FpModule {
    p: u32,
    dim: usize,
    generators: Vec<Matrix>,
    elements: Vec<Matrix>,
}

impl FpModule {
    pub fn new(p: u32, dim: usize, generators: Vec<Matrix>) -> Result<Self> {
        if p < 2 || (2..p).take_while(|d| d * d <= p).any(|d| p.is_multiple_of(d)) {
            return Err(Error::Invalid(format!("{p} is not prime")));
        }
        if dim == 0 || dim > MAX_DIM {
            return Err(Error::Invalid(format!("dimension must be in 1..={MAX_DIM}")));
        }
        let mut gens = Vec::with_capacity(generators.len());
        for g in generators {
            if g.len() != dim || g.iter().any(|r| r.len() != dim) {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: g.len(),
                });
            }
            let g: Matrix = g.into_iter().map(|r| r.into_iter().map(|x| x % p).collect()).collect();
            if rank(p, &g) != dim {
                return Err(Error::Invalid("generator is not invertible".into()));
            }
            gens.push(g);
        }
        let id = identity(dim);
        let mut seen: BTreeSet<Matrix> = BTreeSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                let y = mat_mul(p, g, &x);
                if seen.insert(y.clone()) {
                    if seen.len() > MAX_GROUP_ORDER {
                        return Err(Error::DegreeCapExceeded {
                            estimate: seen.len() as u64,
                            cap: MAX_GROUP_ORDER as u64,
                        });
                    }
                    queue.push_back(y);
                }
            }
        }
        Ok(FpModule {
            p,
            dim,
            generators: gens,
            elements: seen.into_iter().collect(),
        })
    }

    pub fn trivial(p: u32, dim: usize) -> Result<Self> {
        FpModule::new(p, dim, Vec::new())
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.generators
    }

    pub fn elements(&self) -> &[Matrix] {
        &self.elements
    }

    fn check(&self, v: &[u32]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: v.len(),
            });
        }
        Ok(())
    }

    /// `{g v : g ∈ G}`.
    pub fn orbit(&self, v: &[u32]) -> Result<BTreeSet<Vector>> {
        self.check(v)?;
        let v: Vector = v.iter().map(|x| x % self.p).collect();
        Ok(self.elements.iter().map(|g| mat_vec(self.p, g, &v)).collect())
    }

    pub fn image(&self, g: &Matrix, u: &Subspace) -> Subspace {
        let rows: Vec<Vector> = u.rows.iter().map(|r| mat_vec(self.p, g, r)).collect();
        Subspace::span(self.p, self.dim, &rows)
    }

    pub fn is_invariant(&self, u: &Subspace) -> bool {
        self.generators
            .iter()
            .all(|g| u.rows.iter().all(|r| u.contains(self.p, &mat_vec(self.p, g, r))))
    }

    fn vectors(&self) -> impl Iterator<Item = Vector> + '_ {
        let total = (self.p as u64).pow(self.dim as u32);
        (1..total).map(move |k| vector_at(self.p, self.dim, k))
    }
}

/// One block: a seed and a maximal independent subset of its orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitBlock {
    pub seed: Vector,
    pub basis: Vec<Vector>,
}

/// Orbit of `v` sorted in the fixed vector order.
fn ordered_orbit(m: &FpModule, v: &[u32]) -> Result<Vec<Vector>> {
    let mut o: Vec<Vector> = m.orbit(v)?.into_iter().collect();
    o.sort_by_key(|x| order_key(m.p, x));
    Ok(o)
}

fn order_key(p: u32, v: &[u32]) -> u64 {
    v.iter().rev().fold(0u64, |acc, &x| acc * p as u64 + x as u64)
}

fn max_independent(p: u32, vs: &[Vector]) -> Vec<Vector> {
    let mut out: Vec<Vector> = Vec::new();
    for v in vs {
        let mut t = out.clone();
        t.push(v.clone());
        if rank(p, &t) == t.len() {
            out = t;
        }
    }
    out
}

/// Builds `m` blocks. Block `i+1` is seeded from a G-invariant subspace
/// meeting the span of the previous blocks trivially: the orbit span of the
/// first vector that admits one, seeded at its first nonzero vector.
pub fn build_blocks(m: &FpModule, count: usize) -> Result<Vec<OrbitBlock>> {
    if count == 0 {
        return Err(Error::Invalid("block count must be at least 1".into()));
    }
    let p = m.p;
    let mut blocks: Vec<OrbitBlock> = Vec::new();
    let mut span: Vec<Vector> = Vec::new();
    for _ in 0..count {
        let base = rank(p, &span);
        let mut found = None;
        for v in m.vectors() {
            let o = ordered_orbit(m, &v)?;
            let w = max_independent(p, &o);
            let mut t = span.clone();
            t.extend(w.iter().cloned());
            if rank(p, &t) == base + w.len() {
                found = Some(Subspace::span(p, m.dim, &w));
                break;
            }
        }
        let Some(comp) = found else {
            return Err(Error::NoInvariantComplement {
                blocks: blocks.len(),
            });
        };
        let seed = m
            .vectors()
            .find(|v| comp.contains(p, v))
            .expect("nonzero subspace");
        let basis = max_independent(p, &ordered_orbit(m, &seed)?);
        span.extend(basis.iter().cloned());
        blocks.push(OrbitBlock { seed, basis });
    }
    let total: usize = blocks.iter().map(|b| b.basis.len()).sum();
    if rank(p, &span) != total {
        return Err(Error::Invalid("blocks are not independent".into()));
    }
    Ok(blocks)
}

/// The union of the blocks extended by standard basis vectors to a basis.
pub fn full_basis(m: &FpModule, blocks: &[OrbitBlock]) -> Vec<Vector> {
    let mut b: Vec<Vector> = blocks.iter().flat_map(|x| x.basis.iter().cloned()).collect();
    for i in 0..m.dim {
        let mut t = b.clone();
        t.push(unit(m.dim, i));
        if rank(m.p, &t) == t.len() {
            b = t;
        }
    }
    b
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperplaneSpec {
    /// 1-based block indices.
    pub index_set: BTreeSet<usize>,
    pub basis: Vec<Vector>,
    /// `χ_I` on `basis`.
    pub chi: Vec<u32>,
    /// `T_I` as a row vector: `T_I(v) = functional · v`.
    pub functional: Vector,
    pub kernel: Subspace,
}

impl HyperplaneSpec {
    pub fn eval(&self, p: u32, v: &[u32]) -> u32 {
        (self.functional.iter().zip(v).map(|(&a, &b)| a as u64 * b as u64).sum::<u64>() % p as u64) as u32
    }
}

/// `ker T_I` for a proper `I ⊂ {1..m}`, where `T_I` extends `χ_I`: 0 on the
/// blocks in `I`, 1 on every other basis vector.
pub fn hyperplane(
    m: &FpModule,
    blocks: &[OrbitBlock],
    basis: &[Vector],
    index_set: &BTreeSet<usize>,
) -> Result<HyperplaneSpec> {
    let p = m.p;
    let n = m.dim;
    if index_set.len() >= blocks.len() || index_set.iter().any(|&i| i == 0 || i > blocks.len()) {
        return Err(Error::IndexSetNotProper);
    }
    if basis.len() != n || rank(p, basis) != n {
        return Err(Error::Invalid("not a basis".into()));
    }
    let zero: BTreeSet<&Vector> = index_set
        .iter()
        .flat_map(|&i| blocks[i - 1].basis.iter())
        .collect();
    let chi: Vec<u32> = basis.iter().map(|b| u32::from(!zero.contains(b))).collect();
    // solve t · b_j = chi_j: rows [b_j | chi_j], transpose system
    let mut aug: Vec<Vector> = (0..n)
        .map(|j| {
            let mut r = basis[j].clone();
            r.push(chi[j]);
            r
        })
        .collect();
    aug = rref(p, aug);
    let functional: Vector = aug.iter().map(|r| r[n]).collect();
    // kernel of the row vector t
    let mut kernel_rows = Vec::new();
    let piv = functional.iter().position(|&x| x != 0).expect("T_I is onto");
    let inv = inv_mod(functional[piv], p);
    for j in 0..n {
        if j == piv {
            continue;
        }
        let mut v = unit(n, j);
        v[piv] = (p - mul_mod(functional[j], inv, p)) % p;
        kernel_rows.push(v);
    }
    let kernel = Subspace::span(p, n, &kernel_rows);
    debug_assert_eq!(kernel.rank(), n - 1);
    Ok(HyperplaneSpec {
        index_set: index_set.clone(),
        basis: basis.to_vec(),
        chi,
        functional,
        kernel,
    })
}

/// Some `g ∈ G` maps `u` onto `v`; exhaustive over the group.
pub fn same_orbit(m: &FpModule, u: &Subspace, v: &Subspace) -> Result<bool> {
    for s in [u, v] {
        if s.dim != m.dim {
            return Err(Error::DimensionMismatch {
                expected: m.dim,
                got: s.dim,
            });
        }
    }
    if u.rank() != v.rank() {
        return Err(Error::DimensionMismatch {
            expected: u.rank(),
            got: v.rank(),
        });
    }
    Ok(m.elements.iter().any(|g| &m.image(g, u) == v))
}

/// Why `ker T_I` and `ker T_J` cannot be conjugate: a block `i` in one set
/// but not the other and a vector `b` of it. `⟨B_i⟩` is invariant and lies
/// in one kernel, yet `b` is outside the other.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairWitness {
    pub block: usize,
    pub vector: Vector,
    pub value_in: u32,
    pub value_out: u32,
}

#[derive(Clone, Debug)]
pub struct PairCheck {
    pub first: usize,
    pub second: usize,
    pub conjugate: bool,
    pub witness: Option<PairWitness>,
}

#[derive(Clone, Debug)]
pub struct LemmaReport {
    pub hyperplanes: Vec<HyperplaneSpec>,
    pub pairs: Vec<PairCheck>,
    pub distinct_orbits: usize,
    pub ok: bool,
}

pub fn verify_lemma(
    m: &FpModule,
    blocks: &[OrbitBlock],
    basis: &[Vector],
    sets: &[BTreeSet<usize>],
) -> Result<LemmaReport> {
    let uniq: BTreeSet<&BTreeSet<usize>> = sets.iter().collect();
    if uniq.len() != sets.len() {
        return Err(Error::Invalid("index sets must be pairwise distinct".into()));
    }
    let hyps: Vec<HyperplaneSpec> = sets
        .iter()
        .map(|s| hyperplane(m, blocks, basis, s))
        .collect::<Result<_>>()?;
    let mut pairs = Vec::new();
    for a in 0..hyps.len() {
        for b in a + 1..hyps.len() {
            let conjugate = same_orbit(m, &hyps[a].kernel, &hyps[b].kernel)?;
            let witness = pair_witness(m.p, blocks, &hyps[a], &hyps[b]);
            pairs.push(PairCheck {
                first: a,
                second: b,
                conjugate,
                witness,
            });
        }
    }
    // orbit classes among the kernels
    let mut class: Vec<usize> = (0..hyps.len()).collect();
    for pc in &pairs {
        if pc.conjugate {
            let (x, y) = (class[pc.first], class[pc.second]);
            for c in class.iter_mut() {
                if *c == y {
                    *c = x;
                }
            }
        }
    }
    let distinct_orbits = class.iter().collect::<BTreeSet<_>>().len();
    let ok = pairs.iter().all(|pc| !pc.conjugate && pc.witness.is_some());
    Ok(LemmaReport {
        hyperplanes: hyps,
        pairs,
        distinct_orbits,
        ok,
    })
}

fn pair_witness(p: u32, blocks: &[OrbitBlock], a: &HyperplaneSpec, b: &HyperplaneSpec) -> Option<PairWitness> {
    let pick = |x: &HyperplaneSpec, y: &HyperplaneSpec| {
        x.index_set.difference(&y.index_set).next().map(|&i| {
            let v = blocks[i - 1].basis[0].clone();
            PairWitness {
                block: i,
                value_in: x.eval(p, &v),
                value_out: y.eval(p, &v),
                vector: v,
            }
        })
    };
    pick(a, b).or_else(|| pick(b, a)).filter(|w| w.value_in == 0 && w.value_out == 1)
}

/// All proper subsets of `{1..m}`, by size then lexicographically.
pub fn proper_subsets(m: usize) -> Vec<BTreeSet<usize>> {
    let mut out: Vec<BTreeSet<usize>> = (0u64..(1 << m) - 1)
        .map(|mask| (1..=m).filter(|i| mask >> (i - 1) & 1 == 1).collect())
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Parses a module file: `p dim`, then each generator as `dim` rows of
/// `dim` space-separated entries. Blank lines and `#` comments are ignored.
pub fn parse_module(text: &str) -> Result<FpModule> {
    let mut rows: Vec<(usize, Vec<u32>)> = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let body = line.split('#').next().unwrap();
        let mut nums = Vec::new();
        let mut pos = offset;
        for tok in body.split_whitespace() {
            let at = pos + body[pos - offset..].find(tok).unwrap();
            let n: u32 = tok
                .parse()
                .map_err(|_| Error::parse(at, format!("expected a non-negative integer, found `{tok}`")))?;
            nums.push(n);
            pos = at + tok.len();
        }
        if !nums.is_empty() {
            rows.push((offset, nums));
        }
        offset += line.len();
    }
    let Some((hpos, header)) = rows.first().cloned() else {
        return Err(Error::parse(0, "missing `p dim` header"));
    };
    if header.len() != 2 {
        return Err(Error::parse(hpos, "header must be `p dim`"));
    }
    let (p, dim) = (header[0], header[1] as usize);
    if dim == 0 {
        return Err(Error::parse(hpos, "dimension must be positive"));
    }
    let body = &rows[1..];
    if !body.len().is_multiple_of(dim) {
        return Err(Error::parse(text.len(), format!("matrix rows must come in groups of {dim}")));
    }
    let mut gens = Vec::new();
    for chunk in body.chunks(dim) {
        for (pos, r) in chunk {
            if r.len() != dim {
                return Err(Error::parse(*pos, format!("row must have {dim} entries")));
            }
        }
        gens.push(chunk.iter().map(|(_, r)| r.clone()).collect());
    }
    FpModule::new(p, dim, gens)
}

/// Parses index sets: sets separated by `;`, members by `,`; `-` or an empty
/// entry is the empty set.
pub fn parse_index_sets(text: &str) -> Result<Vec<BTreeSet<usize>>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for part in text.split(';') {
        let t = part.trim();
        let mut set = BTreeSet::new();
        if !(t.is_empty() || t == "-") {
            let mut local = 0;
            for tok in part.split(',') {
                let at = offset + local + (tok.len() - tok.trim_start().len());
                let n: usize = tok
                    .trim()
                    .parse()
                    .map_err(|_| Error::parse(at, format!("expected a block index, found `{}`", tok.trim())))?;
                if n == 0 {
                    return Err(Error::parse(at, "block indices start at 1"));
                }
                set.insert(n);
                local += tok.len() + 1;
            }
        }
        out.push(set);
        offset += part.len() + 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn swap2() -> FpModule {
        FpModule::new(2, 2, vec![vec![vec![0, 1], vec![1, 0]]]).unwrap()
    }

    fn neg(p: u32, d: usize) -> FpModule {
        let m: Matrix = (0..d)
            .map(|i| (0..d).map(|j| if i == j { p - 1 } else { 0 }).collect())
            .collect();
        FpModule::new(p, d, vec![m]).unwrap()
    }

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    #[test]
    fn orbits() {
        let t = FpModule::trivial(2, 2).unwrap();
        assert_eq!(t.orbit(&[1, 1]).unwrap().len(), 1);
        let o = swap2().orbit(&[1, 0]).unwrap();
        assert_eq!(o, BTreeSet::from([vec![1, 0], vec![0, 1]]));
        let o = neg(3, 2).orbit(&[1, 0]).unwrap();
        assert_eq!(o, BTreeSet::from([vec![1, 0], vec![2, 0]]));
        assert!(t.orbit(&[1]).is_err());
    }

    #[test]
    fn blocks() {
        let t = FpModule::trivial(2, 2).unwrap();
        let b = build_blocks(&t, 2).unwrap();
        assert_eq!(b[0].basis, vec![vec![1, 0]]);
        assert_eq!(b[1].basis, vec![vec![0, 1]]);
        let s = swap2();
        let b = build_blocks(&s, 1).unwrap();
        assert_eq!(b[0].basis, vec![vec![1, 0], vec![0, 1]]);
        assert!(matches!(
            build_blocks(&s, 2),
            Err(Error::NoInvariantComplement { blocks: 1 })
        ));
        let b = build_blocks(&neg(3, 3), 3).unwrap();
        let bases: Vec<Vec<Vector>> = b.iter().map(|x| x.basis.clone()).collect();
        assert_eq!(bases, vec![vec![unit(3, 0)], vec![unit(3, 1)], vec![unit(3, 2)]]);
    }

    #[test]
    fn hyperplanes() {
        let t = FpModule::trivial(2, 2).unwrap();
        let b = build_blocks(&t, 2).unwrap();
        let basis = full_basis(&t, &b);
        let h = hyperplane(&t, &b, &basis, &set(&[])).unwrap();
        assert_eq!(h.kernel, Subspace::span(2, 2, &[vec![1, 1]]));
        let h = hyperplane(&t, &b, &basis, &set(&[1])).unwrap();
        assert_eq!(h.kernel, Subspace::span(2, 2, &[vec![1, 0]]));
        assert!(matches!(
            hyperplane(&t, &b, &basis, &set(&[1, 2])),
            Err(Error::IndexSetNotProper)
        ));
        let n = neg(3, 2);
        let b = build_blocks(&n, 2).unwrap();
        let basis = full_basis(&n, &b);
        let h = hyperplane(&n, &b, &basis, &set(&[2])).unwrap();
        assert_eq!(h.kernel, Subspace::span(3, 2, &[vec![0, 1]]));
    }

    #[test]
    fn orbit_equivalence() {
        let s = swap2();
        let e1 = Subspace::span(2, 2, &[vec![1, 0]]);
        let e2 = Subspace::span(2, 2, &[vec![0, 1]]);
        assert!(same_orbit(&s, &e1, &e1).unwrap());
        assert!(same_orbit(&s, &e1, &e2).unwrap());
        let t = FpModule::trivial(2, 2).unwrap();
        assert!(!same_orbit(&t, &e1, &e2).unwrap());
    }

    #[test]
    fn lemma_reports() {
        let t = FpModule::trivial(2, 2).unwrap();
        let b = build_blocks(&t, 2).unwrap();
        let basis = full_basis(&t, &b);
        let r = verify_lemma(&t, &b, &basis, &proper_subsets(2)).unwrap();
        assert!(r.ok);
        assert_eq!(r.distinct_orbits, 3);
        let n = neg(3, 3);
        let b = build_blocks(&n, 3).unwrap();
        let basis = full_basis(&n, &b);
        let r = verify_lemma(&n, &b, &basis, &proper_subsets(3)).unwrap();
        assert!(r.ok);
        assert_eq!(r.hyperplanes.len(), 7);
        assert_eq!(r.distinct_orbits, 7);
        let b = build_blocks(&n, 1).unwrap();
        let basis = full_basis(&n, &b);
        let r = verify_lemma(&n, &b, &basis, &[set(&[])]).unwrap();
        assert!(r.ok && r.pairs.is_empty());
    }

    #[test]
    fn parsing() {
        let m = parse_module("2 2\n0 1\n1 0\n").unwrap();
        assert_eq!(m.elements().len(), 2);
        assert_eq!(parse_module("3 2 # header\n").unwrap().elements().len(), 1);
        assert!(matches!(parse_module("2 2\n0 x\n1 0\n"), Err(Error::Parse { pos: 6, .. })));
        assert!(parse_module("2 2\n1 1\n1 1\n").is_err());
        let s = parse_index_sets("-;1;1,2").unwrap();
        assert_eq!(s, vec![set(&[]), set(&[1]), set(&[1, 2])]);
        assert!(matches!(parse_index_sets("1,a"), Err(Error::Parse { pos: 2, .. })));
    }
}
