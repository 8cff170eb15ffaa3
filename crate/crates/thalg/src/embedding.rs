//! Finite embedding problems: given epimorphisms `φ: G → A` and `α: B → A`,
//! find an epimorphism `γ: G → B` with `α ∘ γ = φ`.

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Hom};
use crate::perm::{parse_cycles, Perm, PermGroup};

#[derive(Clone, Debug)]
pub struct EmbeddingProblem {
    pub g: FiniteGroup,
    pub a: FiniteGroup,
    pub b: FiniteGroup,
    pub phi: Hom,
    pub alpha: Hom,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EmbeddingOutcome {
    Solved(Hom),
    NoSolution,
}

impl EmbeddingProblem {
    /// Checks that `phi` and `alpha` are surjective homomorphisms.
    pub fn new(g: FiniteGroup, a: FiniteGroup, b: FiniteGroup, phi: Hom, alpha: Hom) -> Result<Self> {
        if !phi.is_hom(&g, &a) || !phi.is_surjective(&a) {
            return Err(Error::Invalid("phi is not an epimorphism G -> A".into()));
        }
        if !alpha.is_hom(&b, &a) || !alpha.is_surjective(&a) {
            return Err(Error::Invalid("alpha is not an epimorphism B -> A".into()));
        }
        Ok(EmbeddingProblem { g, a, b, phi, alpha })
    }

    /// A proper solution: surjective homomorphism with `α ∘ γ = φ`.
    pub fn verify(&self, gamma: &Hom) -> bool {
        gamma.is_hom(&self.g, &self.b)
            && gamma.is_surjective(&self.b)
            && (0..self.g.order()).all(|x| self.alpha.apply(gamma.apply(x)) == self.phi.apply(x))
    }
}

/// Backtracking over images of `G`'s generators, in generator order and in
/// increasing element index. Each prefix is checked for consistency on the
/// subgroup it generates; only `b` with `α(b) = φ(g_i)` are tried.
pub fn solve_embedding_problem(e: &EmbeddingProblem) -> EmbeddingOutcome {
    let gens = e.g.generators().to_vec();
    let cands: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| {
            (0..e.b.order())
                .filter(|&b| e.alpha.apply(b) == e.phi.apply(g))
                .collect()
        })
        .collect();
    let mut imgs = Vec::with_capacity(gens.len());
    match search(e, &gens, &cands, &mut imgs) {
        Some(h) => EmbeddingOutcome::Solved(h),
        None => EmbeddingOutcome::NoSolution,
    }
}

fn search(e: &EmbeddingProblem, gens: &[usize], cands: &[Vec<usize>], imgs: &mut Vec<usize>) -> Option<Hom> {
    let k = imgs.len();
    if k == gens.len() {
        let h = Hom::extend(&e.g, &e.b, gens, imgs)?;
        return (h.is_surjective(&e.b)).then_some(h);
    }
    for &b in &cands[k] {
        imgs.push(b);
        if Hom::extend(&e.g, &e.b, &gens[..=k], imgs).is_some() {
            if let Some(h) = search(e, gens, cands, imgs) {
                return Some(h);
            }
        }
        imgs.pop();
    }
    None
}

/// All homomorphisms `src → dst`, by trying every tuple of images for a
/// generating set and keeping those that extend consistently.
pub fn all_homs(src: &FiniteGroup, dst: &FiniteGroup) -> Vec<Hom> {
    let gens = src.generators().to_vec();
    let mut out = Vec::new();
    let mut imgs = vec![0usize; gens.len()];
    loop {
        if let Some(h) = Hom::extend(src, dst, &gens, &imgs) {
            out.push(h);
        }
        let mut i = gens.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            imgs[i] += 1;
            if imgs[i] < dst.order() {
                break;
            }
            imgs[i] = 0;
        }
    }
}

pub fn epimorphisms(src: &FiniteGroup, dst: &FiniteGroup) -> Vec<Hom> {
    all_homs(src, dst).into_iter().filter(|h| h.is_surjective(dst)).collect()
}

/// Independent existence check. When `|B|^|G| <= 2e6` every map is checked
/// directly. Otherwise generator images for a different generating set are
/// enumerated without pruning, extended blindly, and checked on all pairs.
pub fn brute_force_solvable(e: &EmbeddingProblem) -> bool {
    let (n, m) = (e.g.order(), e.b.order());
    let fits = (n as f64) * (m as f64).ln() <= (2.0e6f64).ln();
    if fits {
        let mut map = vec![0usize; n];
        loop {
            let h = Hom { images: map.clone() };
            if e.verify(&h) {
                return true;
            }
            let mut i = n;
            loop {
                if i == 0 {
                    return false;
                }
                i -= 1;
                map[i] += 1;
                if map[i] < m {
                    break;
                }
                map[i] = 0;
            }
        }
    }
    let gens = e.g.greedy_generators_rev();
    let mut imgs = vec![0usize; gens.len()];
    loop {
        let h = blind_extend(&e.g, &e.b, &gens, &imgs);
        if e.verify(&h) {
            return true;
        }
        let mut i = gens.len();
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            imgs[i] += 1;
            if imgs[i] < m {
                break;
            }
            imgs[i] = 0;
        }
    }
}

/// First-write-wins extension along a spanning tree of the Cayley graph.
fn blind_extend(src: &FiniteGroup, dst: &FiniteGroup, gens: &[usize], imgs: &[usize]) -> Hom {
    let mut map = vec![usize::MAX; src.order()];
    map[0] = 0;
    let mut stack = vec![0usize];
    while let Some(x) = stack.pop() {
        for (&g, &b) in gens.iter().zip(imgs) {
            let y = src.mul(x, g);
            if map[y] == usize::MAX {
                map[y] = dst.mul(map[x], b);
                stack.push(y);
            }
        }
    }
    Hom { images: map }
}

/// Largest group accepted from a problem file.
pub const MAX_PROBLEM_ORDER: usize = 1024;
/// Largest permutation degree accepted from a problem file.
pub const MAX_PROBLEM_DEGREE: usize = 64;

/// Parses a group-problem file.
///
/// ```text
/// # comment
/// group G perm 3        generators follow, one per line, cycle notation
/// (1,2,3)
/// (1,2)
/// group A table 2       N rows of N entries; element 0 is the identity
/// 0 1
/// 1 0
/// group B ...
/// phi   <img> <img> ...
/// alpha <img> <img> ...
/// ```
///
/// `G`, `A`, `B`, `phi` and `alpha` each appear once. For a `perm` source a
/// map lists images of the source generators in order; for a `table` source
/// it lists the image of every element. Images are written in the target's
/// syntax: an index for tables, cycle notation without spaces for
/// permutations. `phi: G -> A`, `alpha: B -> A`.
pub fn parse_problem(text: &str) -> Result<EmbeddingProblem> {
    let lines: Vec<(usize, &str)> = {
        let mut off = 0;
        text.split_inclusive('\n')
            .map(|raw| {
                let start = off;
                off += raw.len();
                (start, raw.split('#').next().unwrap().trim_end())
            })
            .filter(|(_, l)| !l.trim().is_empty())
            .collect()
    };
    let mut groups: [Option<Parsed>; 3] = [None, None, None];
    let mut maps: [Option<(usize, Vec<(usize, &str)>)>; 2] = [None, None];
    let mut k = 0;
    while k < lines.len() {
        let (pos, line) = lines[k];
        let toks = tokens(line, pos);
        k += 1;
        let (head_pos, head) = toks[0];
        match head {
            "group" => {
                if toks.len() != 4 {
                    return Err(Error::parse(head_pos, "expected `group NAME perm|table N`"));
                }
                let slot = match toks[1].1 {
                    "G" => 0,
                    "A" => 1,
                    "B" => 2,
                    other => return Err(Error::parse(toks[1].0, format!("unknown group `{other}`"))),
                };
                if groups[slot].is_some() {
                    return Err(Error::parse(toks[1].0, "group defined twice"));
                }
                let n: usize = toks[3]
                    .1
                    .parse()
                    .map_err(|_| Error::parse(toks[3].0, "expected a size"))?;
                let body_end = |k: usize| {
                    (k..lines.len())
                        .find(|&j| matches!(lines[j].1.split_whitespace().next(), Some("group" | "phi" | "alpha")))
                        .unwrap_or(lines.len())
                };
                groups[slot] = Some(match toks[2].1 {
                    "perm" => {
                        if n == 0 || n > MAX_PROBLEM_DEGREE {
                            return Err(Error::parse(toks[3].0, format!("degree outside 1..{MAX_PROBLEM_DEGREE}")));
                        }
                        let end = body_end(k);
                        let gens = lines[k..end]
                            .iter()
                            .map(|&(p, l)| parse_cycles(l, n).map_err(|e| shift(e, p)))
                            .collect::<Result<Vec<Perm>>>()?;
                        k = end;
                        Parsed::perm(n, gens, pos)?
                    }
                    "table" => {
                        if n == 0 || n > MAX_PROBLEM_ORDER {
                            return Err(Error::parse(toks[3].0, format!("size outside 1..{MAX_PROBLEM_ORDER}")));
                        }
                        if k + n > lines.len() {
                            return Err(Error::parse(text.len(), format!("expected {n} table rows")));
                        }
                        let mut rows = Vec::with_capacity(n);
                        for &(p, l) in &lines[k..k + n] {
                            let row = tokens(l, p)
                                .into_iter()
                                .map(|(q, t)| {
                                    t.parse::<u32>()
                                        .ok()
                                        .filter(|&x| (x as usize) < n)
                                        .ok_or_else(|| Error::parse(q, format!("entry outside 0..{n}")))
                                })
                                .collect::<Result<Vec<u32>>>()?;
                            if row.len() != n {
                                return Err(Error::parse(p, format!("row needs {n} entries")));
                            }
                            rows.push(row);
                        }
                        k += n;
                        Parsed {
                            group: FiniteGroup::from_table(rows).map_err(|e| at(e, pos))?,
                            gens: None,
                        }
                    }
                    other => return Err(Error::parse(toks[2].0, format!("unknown group kind `{other}`"))),
                });
            }
            "phi" | "alpha" => {
                let slot = usize::from(head == "alpha");
                if maps[slot].is_some() {
                    return Err(Error::parse(head_pos, "map defined twice"));
                }
                maps[slot] = Some((head_pos, toks[1..].to_vec()));
            }
            other => return Err(Error::parse(head_pos, format!("unexpected `{other}`"))),
        }
    }
    let take = |i: usize, name: &str| {
        groups[i]
            .clone()
            .ok_or_else(|| Error::parse(text.len(), format!("missing group {name}")))
    };
    let (g, a, b) = (take(0, "G")?, take(1, "A")?, take(2, "B")?);
    let mut homs = Vec::new();
    for (slot, src) in [(0, &g), (1, &b)] {
        let name = ["phi", "alpha"][slot];
        let (pos, toks) = maps[slot]
            .clone()
            .ok_or_else(|| Error::parse(text.len(), format!("missing {name}")))?;
        homs.push(src.map_to(&a, pos, &toks, name)?);
    }
    let alpha = homs.pop().unwrap();
    let phi = homs.pop().unwrap();
    EmbeddingProblem::new(g.group, a.group, b.group, phi, alpha)
}

#[derive(Clone)]
struct Parsed {
    group: FiniteGroup,
    /// Element indices of the listed generators, for `perm` groups.
    gens: Option<Vec<usize>>,
}

impl Parsed {
    fn perm(n: usize, gens: Vec<Perm>, pos: usize) -> Result<Self> {
        PermGroup::generate(n, &gens, MAX_PROBLEM_ORDER).map_err(|e| at(e, pos))?;
        let group = FiniteGroup::from_generators(n, &gens).map_err(|e| at(e, pos))?;
        let ids = gens.iter().map(|p| group.index_of(p).unwrap()).collect();
        Ok(Parsed { group, gens: Some(ids) })
    }

    fn element(&self, pos: usize, tok: &str) -> Result<usize> {
        match self.group.labels() {
            Some(labels) if self.gens.is_some() => {
                let p = parse_cycles(tok, labels[0].degree()).map_err(|e| shift(e, pos))?;
                self.group
                    .index_of(&p)
                    .ok_or_else(|| Error::parse(pos, format!("{tok} is not in the target group")))
            }
            _ => tok
                .parse::<usize>()
                .ok()
                .filter(|&x| x < self.group.order())
                .ok_or_else(|| Error::parse(pos, format!("element outside 0..{}", self.group.order()))),
        }
    }

    fn map_to(&self, dst: &Parsed, pos: usize, toks: &[(usize, &str)], name: &str) -> Result<Hom> {
        let imgs = toks
            .iter()
            .map(|&(q, t)| dst.element(q, t))
            .collect::<Result<Vec<usize>>>()?;
        match &self.gens {
            Some(gens) => {
                if imgs.len() != gens.len() {
                    return Err(Error::parse(pos, format!("{name} needs {} images", gens.len())));
                }
                Hom::extend(&self.group, &dst.group, gens, &imgs)
                    .ok_or_else(|| Error::Invalid(format!("{name} is not a homomorphism")))
            }
            None => {
                if imgs.len() != self.group.order() {
                    return Err(Error::parse(pos, format!("{name} needs {} images", self.group.order())));
                }
                Ok(Hom { images: imgs })
            }
        }
    }
}

/// Whitespace-separated tokens with byte offsets, `base` added.
fn tokens(line: &str, base: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices().chain(std::iter::once((line.len(), ' '))) {
        match (ch.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((base + s, &line[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    out
}

fn shift(e: Error, base: usize) -> Error {
    match e {
        Error::Parse { pos, msg } => Error::Parse { pos: pos + base, msg },
        other => other,
    }
}

fn at(e: Error, pos: usize) -> Error {
    match e {
        Error::Parse { .. } => e,
        other => Error::parse(pos, other.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::catalogue::*;

    fn canonical(n: usize, k: usize) -> Hom {
        // C_n -> C_k, x -> x mod k (index = exponent)
        Hom {
            images: (0..n).map(|x| x % k).collect(),
        }
    }

    #[test]
    fn spec_examples() {
        let e = EmbeddingProblem::new(cyclic(4), cyclic(2), cyclic(4), canonical(4, 2), canonical(4, 2)).unwrap();
        match solve_embedding_problem(&e) {
            EmbeddingOutcome::Solved(g) => {
                assert!(e.verify(&g));
                assert_eq!(g.images, vec![0, 1, 2, 3]);
            }
            _ => panic!(),
        }
        let e = EmbeddingProblem::new(cyclic(2), cyclic(2), cyclic(4), canonical(2, 2), canonical(4, 2)).unwrap();
        assert_eq!(solve_embedding_problem(&e), EmbeddingOutcome::NoSolution);
        assert!(!brute_force_solvable(&e));

        let s3 = symmetric3();
        let sign = epimorphisms(&s3, &cyclic(2)).remove(0);
        let e = EmbeddingProblem::new(s3.clone(), cyclic(2), cyclic(6), sign, canonical(6, 2)).unwrap();
        assert_eq!(solve_embedding_problem(&e), EmbeddingOutcome::NoSolution);
        assert_eq!(all_homs(&s3, &cyclic(6)).len(), 2);
        assert!(!brute_force_solvable(&e));
    }

    #[test]
    fn rejects_non_epimorphisms() {
        let bad = Hom { images: vec![0, 0, 0, 0] };
        assert!(EmbeddingProblem::new(cyclic(4), cyclic(2), cyclic(4), bad, canonical(4, 2)).is_err());
    }

    const S3_SIGN: &str = "\
# S3 onto C2 by sign, C6 onto C2
group G perm 3
(1,2,3)
(1,2)
group A table 2
0 1
1 0
group B table 6
0 1 2 3 4 5
1 2 3 4 5 0
2 3 4 5 0 1
3 4 5 0 1 2
4 5 0 1 2 3
5 0 1 2 3 4
phi 0 1
alpha 0 1 0 1 0 1
";

    #[test]
    fn problem_files() {
        let e = parse_problem(S3_SIGN).unwrap();
        assert_eq!((e.g.order(), e.a.order(), e.b.order()), (6, 2, 6));
        assert_eq!(solve_embedding_problem(&e), EmbeddingOutcome::NoSolution);

        let c4 = "group G perm 4\n(1,2,3,4)\ngroup A perm 4\n(1,3)(2,4)\ngroup B perm 4\n(1,2,3,4)\n\
                  phi (1,3)(2,4)\nalpha (1,3)(2,4)\n";
        let e = parse_problem(c4).unwrap();
        assert!(matches!(solve_embedding_problem(&e), EmbeddingOutcome::Solved(h) if e.verify(&h)));
    }

    #[test]
    fn problem_file_errors() {
        let err = |s: &str| parse_problem(s).unwrap_err();
        assert!(matches!(err("group X perm 3\n"), Error::Parse { pos: 6, .. }));
        assert!(matches!(err(&S3_SIGN.replace("phi 0 1", "phi 0 2")), Error::Parse { .. }));
        assert!(matches!(err(&S3_SIGN.replace("phi 0 1\n", "")), Error::Parse { .. }));
        assert!(matches!(err(&S3_SIGN.replace("(1,2)\n", "(1,2)\n(1,4)\n")), Error::Parse { .. }));
        // the non-surjective phi is rejected by the problem constructor
        assert!(matches!(err(&S3_SIGN.replace("phi 0 1", "phi 0 0")), Error::Invalid(_)));
        // identity not at index 0
        let bad = S3_SIGN.replace("0 1\n1 0\n", "1 0\n0 1\n");
        assert!(matches!(err(&bad), Error::Parse { .. }));
        assert!(matches!(err(&S3_SIGN.replace("phi 0 1", "phi 1 0")), Error::Invalid(_)));
    }
}
