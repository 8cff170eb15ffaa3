//! Permutations and finite permutation groups given by their full element set.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// Permutation of `0..n`; `p.apply(i) = p.0[i]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u32>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u32).collect())
    }

    /// From an image vector; `None` unless it is a bijection of `0..n`.
    pub fn from_images(images: Vec<u32>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return None;
            }
            seen[i] = true;
        }
        Some(Perm(images))
    }

    /// From disjoint cycles on `0..n`.
    pub fn from_cycles(n: usize, cycles: &[Vec<u32>]) -> Option<Self> {
        let mut img: Vec<u32> = (0..n as u32).collect();
        let mut touched = vec![false; n];
        for c in cycles {
            for (k, &a) in c.iter().enumerate() {
                let a = a as usize;
                if a >= n || touched[a] {
                    return None;
                }
                touched[a] = true;
                img[a] = c[(k + 1) % c.len()];
            }
        }
        Perm::from_images(img)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Perm(inv)
    }

    /// `h self h^-1`
    pub fn conjugate_by(&self, h: &Perm) -> Perm {
        h.compose(self).compose(&h.inverse())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    pub fn order(&self) -> usize {
        self.cycles().iter().fold(1, |l, c| lcm(l, c.len()))
    }

    pub fn fixes(&self, i: usize) -> bool {
        self.apply(i) == i
    }

    /// Nontrivial cycles, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut c = vec![s as u32];
            seen[s] = true;
            let mut j = self.apply(s);
            while j != s {
                seen[j] = true;
                c.push(j as u32);
                j = self.apply(j);
            }
            if c.len() > 1 {
                out.push(c);
            }
        }
        out
    }

    /// Cycle lengths including fixed points, sorted ascending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(|c| c.len()).collect();
        let fixed = self.0.len() - t.iter().sum::<usize>();
        t.extend(std::iter::repeat_n(1, fixed));
        t.sort_unstable();
        t
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// Parses 1-based cycle notation such as `(1,2,3)(4,5)` or `()`. Whitespace
/// is ignored; positions in errors are byte offsets into `text`.
pub fn parse_cycles(text: &str, degree: usize) -> Result<Perm> {
    let b = text.as_bytes();
    let mut i = 0;
    let skip = |i: &mut usize| {
        while *i < b.len() && b[*i].is_ascii_whitespace() {
            *i += 1;
        }
    };
    let mut cycles: Vec<Vec<u32>> = Vec::new();
    skip(&mut i);
    if i == b.len() {
        return Err(Error::parse(i, "expected `(`"));
    }
    while i < b.len() {
        if b[i] != b'(' {
            return Err(Error::parse(i, "expected `(`"));
        }
        i += 1;
        let mut cyc = Vec::new();
        skip(&mut i);
        if i < b.len() && b[i] == b')' {
            i += 1;
        } else {
            loop {
                skip(&mut i);
                let start = i;
                while i < b.len() && b[i].is_ascii_digit() {
                    i += 1;
                }
                let k: usize = text[start..i]
                    .parse()
                    .map_err(|_| Error::parse(start, "expected a point"))?;
                if k == 0 || k > degree {
                    return Err(Error::parse(start, format!("point {k} outside 1..{degree}")));
                }
                cyc.push((k - 1) as u32);
                skip(&mut i);
                match b.get(i) {
                    Some(b',') => i += 1,
                    Some(b')') => {
                        i += 1;
                        break;
                    }
                    _ => return Err(Error::parse(i, "expected `,` or `)`")),
                }
            }
        }
        let at = i;
        if !cyc.is_empty() {
            cycles.push(cyc);
        }
        if Perm::from_cycles(degree, &cycles).is_none() {
            return Err(Error::parse(at, "repeated point"));
        }
        skip(&mut i);
    }
    Ok(Perm::from_cycles(degree, &cycles).expect("checked"))
}

impl fmt::Display for Perm {
    /// 1-based cycle notation, `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs = self.cycles();
        if cs.is_empty() {
            return write!(f, "()");
        }
        for c in cs {
            write!(f, "(")?;
            for (k, x) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", x + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{self}")
    }
}

/// Finite permutation group with its complete, sorted element list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            elements: vec![Perm::identity(degree)],
        }
    }

    /// Closure of the generators under composition. `limit` bounds the order.
    pub fn generate(degree: usize, generators: &[Perm], limit: usize) -> Result<Self> {
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DimensionMismatch {
                    expected: degree,
                    got: g.degree(),
                });
            }
        }
        let id = Perm::identity(degree);
        let mut seen: BTreeSet<Perm> = BTreeSet::new();
        seen.insert(id.clone());
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in generators {
                let y = g.compose(&x);
                if seen.insert(y.clone()) {
                    if seen.len() > limit {
                        return Err(Error::DegreeCapExceeded {
                            estimate: seen.len() as u64,
                            cap: limit as u64,
                        });
                    }
                    queue.push_back(y);
                }
            }
        }
        Ok(PermGroup {
            degree,
            generators: generators.iter().filter(|g| !g.is_identity()).cloned().collect(),
            elements: seen.into_iter().collect(),
        })
    }

    /// Builds a group from a complete element list, checking closure.
    pub fn from_elements(degree: usize, elements: Vec<Perm>) -> Result<Self> {
        let set: BTreeSet<Perm> = elements.into_iter().collect();
        if !set.contains(&Perm::identity(degree)) {
            return Err(Error::Invalid("element set lacks the identity".into()));
        }
        for a in &set {
            for b in &set {
                if !set.contains(&a.compose(b)) {
                    return Err(Error::Invalid("element set is not closed".into()));
                }
            }
        }
        let elements: Vec<Perm> = set.into_iter().collect();
        let generators = minimal_generators(&elements);
        Ok(PermGroup {
            degree,
            generators,
            elements,
        })
    }

    pub fn symmetric(degree: usize) -> Self {
        let mut gens = Vec::new();
        if degree >= 2 {
            gens.push(Perm::from_cycles(degree, &[vec![0, 1]]).unwrap());
            gens.push(Perm::from_cycles(degree, &[(0..degree as u32).collect()]).unwrap());
        }
        PermGroup::generate(degree, &gens, usize::MAX).unwrap()
    }

    pub fn alternating(degree: usize) -> Self {
        let gens: Vec<Perm> = (2..degree as u32)
            .map(|k| Perm::from_cycles(degree, &[vec![0, 1, k]]).unwrap())
            .collect();
        PermGroup::generate(degree, &gens, usize::MAX).unwrap()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    /// Smallest subgroup containing `s`.
    pub fn subgroup_generated(&self, s: &[Perm]) -> Result<PermGroup> {
        if let Some(bad) = s.iter().find(|p| p.degree() != self.degree) {
            return Err(Error::DimensionMismatch {
                expected: self.degree,
                got: bad.degree(),
            });
        }
        if s.iter().any(|p| !self.contains(p)) {
            return Err(Error::ElementNotInGroup);
        }
        PermGroup::generate(self.degree, s, usize::MAX)
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        g.iter().all(|a| g.iter().all(|b| a.compose(b) == b.compose(a)))
    }

    /// Abelian with every element of order dividing `p` (the trivial group
    /// counts).
    pub fn is_elementary_abelian(&self, p: usize) -> bool {
        self.is_abelian() && self.elements.iter().all(|x| p.is_multiple_of(x.order()))
    }

    pub fn orbit(&self, i: usize) -> BTreeSet<usize> {
        self.elements.iter().map(|g| g.apply(i)).collect()
    }

    pub fn is_transitive_on(&self, points: &[usize]) -> bool {
        match points.first() {
            None => true,
            Some(&p) => {
                let o = self.orbit(p);
                o.len() == points.len() && points.iter().all(|q| o.contains(q))
            }
        }
    }

    /// Points fixed by every element.
    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.degree)
            .filter(|&i| self.generators.iter().all(|g| g.fixes(i)))
            .collect()
    }

    pub fn is_normal_in(&self, g: &PermGroup) -> bool {
        g.generators
            .iter()
            .all(|h| self.generators.iter().all(|x| self.contains(&x.conjugate_by(h))))
    }

    /// Conjugacy class of `x` in this group.
    pub fn conjugacy_class(&self, x: &Perm) -> Vec<Perm> {
        let set: BTreeSet<Perm> = self.elements.iter().map(|h| x.conjugate_by(h)).collect();
        set.into_iter().collect()
    }

    /// Smallest normal subgroup containing `s`.
    pub fn normal_closure(&self, s: &[Perm]) -> Result<PermGroup> {
        let mut gens: Vec<Perm> = s.to_vec();
        loop {
            let h = self.subgroup_generated(&gens)?;
            let extra: Vec<Perm> = gens
                .iter()
                .flat_map(|x| self.generators.iter().map(move |g| x.conjugate_by(g)))
                .filter(|y| !h.contains(y))
                .collect();
            if extra.is_empty() {
                return Ok(h);
            }
            for y in extra {
                if !gens.contains(&y) {
                    gens.push(y);
                }
            }
        }
    }

    /// All normal subgroups containing `s`, sorted by order.
    pub fn normal_subgroups_containing(&self, s: &[Perm]) -> Result<Vec<PermGroup>> {
        let base = self.normal_closure(s)?;
        let mut reps: Vec<Perm> = Vec::new();
        let mut covered: BTreeSet<Perm> = BTreeSet::new();
        for x in &self.elements {
            if covered.insert(x.clone()) {
                reps.push(x.clone());
                covered.extend(self.conjugacy_class(x));
            }
        }
        let mut found: Vec<PermGroup> = vec![base];
        let mut i = 0;
        while i < found.len() {
            for r in &reps {
                if found[i].contains(r) {
                    continue;
                }
                let mut gens = found[i].generators.clone();
                gens.push(r.clone());
                let n = self.normal_closure(&gens)?;
                if !found.iter().any(|m| m.elements == n.elements) {
                    found.push(n);
                }
            }
            i += 1;
        }
        found.sort_by_key(|m| m.order());
        Ok(found)
    }

    /// Restriction to a set of points that every element preserves.
    pub fn restrict(&self, points: &[usize]) -> Result<PermGroup> {
        let idx = |p: usize| points.iter().position(|&q| q == p);
        let mut out = BTreeSet::new();
        for g in &self.elements {
            let mut img = Vec::with_capacity(points.len());
            for &p in points {
                let j = idx(g.apply(p)).ok_or_else(|| {
                    Error::Invalid("point set is not invariant under the group".into())
                })?;
                img.push(j as u32);
            }
            out.insert(Perm(img));
        }
        PermGroup::from_elements(points.len(), out.into_iter().collect())
    }
}

/// Greedy generating set: walk the sorted elements, keep those not yet
/// generated.
fn minimal_generators(elements: &[Perm]) -> Vec<Perm> {
    let Some(first) = elements.first() else {
        return Vec::new();
    };
    let n = first.degree();
    let mut gens: Vec<Perm> = Vec::new();
    let mut current: BTreeSet<Perm> = BTreeSet::from([Perm::identity(n)]);
    for e in elements {
        if current.contains(e) {
            continue;
        }
        gens.push(e.clone());
        current = PermGroup::generate(n, &gens, usize::MAX)
            .unwrap()
            .elements
            .into_iter()
            .collect();
        if current.len() == elements.len() {
            break;
        }
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, c: &[&[u32]]) -> Perm {
        Perm::from_cycles(n, &c.iter().map(|x| x.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn group_orders() {
        assert_eq!(PermGroup::symmetric(3).order(), 6);
        assert_eq!(PermGroup::symmetric(5).order(), 120);
        assert_eq!(PermGroup::alternating(4).order(), 12);
    }

    #[test]
    fn subgroup_examples() {
        let s3 = PermGroup::symmetric(3);
        assert_eq!(s3.subgroup_generated(&[Perm::identity(3)]).unwrap().order(), 1);
        assert_eq!(s3.subgroup_generated(&[cyc(3, &[&[0, 1]])]).unwrap().order(), 2);
        // D4 on the square 0-1-2-3: rotation r, reflection s
        let r = cyc(4, &[&[0, 1, 2, 3]]);
        let s = cyc(4, &[&[1, 3]]);
        let d4 = PermGroup::generate(4, &[r.clone(), s], 100).unwrap();
        assert_eq!(d4.order(), 8);
        let reflections: Vec<Perm> = d4
            .elements()
            .iter()
            .filter(|g| g.order() == 2 && !(g.compose(g).is_identity() && **g == r.compose(&r)))
            .cloned()
            .collect();
        let products: Vec<Perm> = reflections
            .iter()
            .flat_map(|a| reflections.iter().map(move |b| a.compose(b)))
            .collect();
        let rot = d4.subgroup_generated(&products).unwrap();
        // exhaustive closure oracle: the rotation subgroup {1, r, r^2, r^3}
        let expected: BTreeSet<Perm> = (0..4)
            .map(|k| (0..k).fold(Perm::identity(4), |a, _| a.compose(&r)))
            .collect();
        assert_eq!(rot.elements().iter().cloned().collect::<BTreeSet<_>>(), expected);
        let bad = cyc(4, &[&[0, 1]]);
        assert_eq!(d4.subgroup_generated(&[bad]), Err(Error::ElementNotInGroup));
    }

    #[test]
    fn elementary_abelian() {
        let v4 = PermGroup::generate(4, &[cyc(4, &[&[0, 1], &[2, 3]]), cyc(4, &[&[0, 2], &[1, 3]])], 10).unwrap();
        assert!(v4.is_elementary_abelian(2));
        assert!(!v4.is_elementary_abelian(3));
        let c4 = PermGroup::generate(4, &[cyc(4, &[&[0, 1, 2, 3]])], 10).unwrap();
        assert!(c4.is_abelian() && !c4.is_elementary_abelian(2));
        assert!(PermGroup::trivial(3).is_elementary_abelian(5));
    }

    #[test]
    fn display_cycles() {
        assert_eq!(cyc(4, &[&[0, 2], &[1, 3]]).to_string(), "(1,3)(2,4)");
        assert_eq!(Perm::identity(2).to_string(), "()");
    }

    #[test]
    fn cycle_parsing() {
        let p = parse_cycles(" (1, 2,3)(4,5) ", 5).unwrap();
        assert_eq!(p.to_string(), "(1,2,3)(4,5)");
        assert!(parse_cycles("()", 3).unwrap().is_identity());
        assert!(matches!(parse_cycles("(1,2)(2,3)", 3), Err(Error::Parse { .. })));
        assert!(matches!(parse_cycles("(1,4)", 3), Err(Error::Parse { pos: 3, .. })));
        assert!(parse_cycles("", 3).is_err());
        assert!(parse_cycles("(1,", 3).is_err());
    }
}
