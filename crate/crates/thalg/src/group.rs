//! Abstract finite groups given by multiplication tables, and homomorphisms
//! between them.

use std::collections::{BTreeMap, VecDeque};

use crate::error::{Error, Result};
use crate::perm::{Perm, PermGroup};

/// A finite group on `0..n` with a multiplication table. Element 0 is the
/// identity. Optional permutation labels record where the group came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    mul: Vec<Vec<u32>>,
    inv: Vec<u32>,
    generators: Vec<usize>,
    labels: Option<Vec<Perm>>,
}

impl FiniteGroup {
    /// Validates a Cayley table, `table[a][b] = a*b`, whose element 0 is the
    /// identity.
    pub fn from_table(table: Vec<Vec<u32>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::Invalid("empty group".into()));
        }
        if table.iter().any(|r| r.len() != n || r.iter().any(|&x| x as usize >= n)) {
            return Err(Error::Invalid("table is not square over 0..n".into()));
        }
        if !(0..n).all(|a| table[0][a] as usize == a && table[a][0] as usize == a) {
            return Err(Error::Invalid("element 0 is not the identity".into()));
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b] as usize;
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c] as usize] {
                        return Err(Error::Invalid("not associative".into()));
                    }
                }
            }
        }
        let mut inv = vec![0u32; n];
        for a in 0..n {
            inv[a] = (0..n)
                .find(|&b| table[a][b] == 0)
                .ok_or_else(|| Error::Invalid("element without inverse".into()))? as u32;
        }
        let mut g = FiniteGroup {
            mul: table,
            inv,
            generators: Vec::new(),
            labels: None,
        };
        g.generators = g.greedy_generators();
        Ok(g)
    }

    /// Elements indexed in sorted order with the identity first; generators
    /// are those of `pg`.
    pub fn from_perm_group(pg: &PermGroup) -> Self {
        let elems: Vec<Perm> = pg.elements().to_vec();
        let index: BTreeMap<&Perm, u32> = elems.iter().enumerate().map(|(i, p)| (p, i as u32)).collect();
        let n = elems.len();
        let mul: Vec<Vec<u32>> = (0..n)
            .map(|a| (0..n).map(|b| index[&elems[a].compose(&elems[b])]).collect())
            .collect();
        let inv: Vec<u32> = elems.iter().map(|p| index[&p.inverse()]).collect();
        let mut generators: Vec<usize> = pg.generators().iter().map(|p| index[p] as usize).collect();
        generators.dedup();
        // sorted order puts the identity permutation first
        debug_assert!(elems[0].is_identity());
        let mut g = FiniteGroup {
            mul,
            inv,
            generators,
            labels: Some(elems),
        };
        if g.closure(&g.generators).len() != n {
            g.generators = g.greedy_generators();
        }
        g
    }

    pub fn from_generators(degree: usize, gens: &[Perm]) -> Result<Self> {
        let pg = PermGroup::generate(degree, gens, 1 << 16)?;
        let mut g = FiniteGroup::from_perm_group(&pg);
        let labels = g.labels.as_ref().unwrap();
        let mut ids: Vec<usize> = Vec::new();
        for p in gens.iter().filter(|p| !p.is_identity()) {
            let i = labels.binary_search(p).unwrap();
            if !ids.contains(&i) {
                ids.push(i);
            }
        }
        g.generators = ids;
        Ok(g)
    }

    pub fn cyclic(n: usize) -> Self {
        let table = (0..n)
            .map(|a| (0..n).map(|b| ((a + b) % n) as u32).collect())
            .collect();
        FiniteGroup::from_table(table).unwrap()
    }

    pub fn direct_product(&self, o: &FiniteGroup) -> FiniteGroup {
        let (n, m) = (self.order(), o.order());
        let table = (0..n * m)
            .map(|x| {
                (0..n * m)
                    .map(|y| {
                        let a = self.mul(x / m, y / m);
                        let b = o.mul(x % m, y % m);
                        (a * m + b) as u32
                    })
                    .collect()
            })
            .collect();
        FiniteGroup::from_table(table).unwrap()
    }

    pub fn order(&self) -> usize {
        self.mul.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn table(&self) -> &[Vec<u32>] {
        &self.mul
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn labels(&self) -> Option<&[Perm]> {
        self.labels.as_deref()
    }

    /// Index of a permutation label.
    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.labels.as_ref()?.binary_search(p).ok()
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul[a][b] == self.mul[b][a]))
    }

    /// Subgroup generated by `gens`, as a sorted element list.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(g, x);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..self.order()).filter(|&i| seen[i]).collect()
    }

    /// Greedy generating set: repeatedly add the smallest element outside
    /// the subgroup generated so far.
    pub fn greedy_generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut cur = self.closure(&gens);
        while cur.len() < self.order() {
            let next = (0..self.order()).find(|x| cur.binary_search(x).is_err()).unwrap();
            gens.push(next);
            cur = self.closure(&gens);
        }
        gens
    }

    /// Greedy generating set scanning from the largest index down.
    pub fn greedy_generators_rev(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut cur = self.closure(&gens);
        while cur.len() < self.order() {
            let next = (0..self.order()).rev().find(|x| cur.binary_search(x).is_err()).unwrap();
            gens.push(next);
            cur = self.closure(&gens);
        }
        gens
    }
}

/// A map between finite groups, stored on every element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hom {
    pub images: Vec<usize>,
}

impl Hom {
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// Extends generator images to a map on `⟨gens⟩`, failing on the first
    /// inconsistency. Succeeds iff the assignment extends to a homomorphism
    /// on the generated subgroup; unreached elements are `usize::MAX`.
    pub fn extend(src: &FiniteGroup, dst: &FiniteGroup, gens: &[usize], imgs: &[usize]) -> Option<Hom> {
        let mut map = vec![usize::MAX; src.order()];
        map[0] = 0;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (&g, &b) in gens.iter().zip(imgs) {
                let y = src.mul(g, x);
                let v = dst.mul(b, map[x]);
                if map[y] == usize::MAX {
                    map[y] = v;
                    queue.push_back(y);
                } else if map[y] != v {
                    return None;
                }
            }
        }
        Some(Hom { images: map })
    }

    /// Homomorphism property on all pairs.
    pub fn is_hom(&self, src: &FiniteGroup, dst: &FiniteGroup) -> bool {
        let n = src.order();
        self.images.len() == n
            && self.images.iter().all(|&x| x < dst.order())
            && (0..n).all(|a| {
                (0..n).all(|b| self.images[src.mul(a, b)] == dst.mul(self.images[a], self.images[b]))
            })
    }

    pub fn is_surjective(&self, dst: &FiniteGroup) -> bool {
        let mut hit = vec![false; dst.order()];
        for &x in &self.images {
            if x < hit.len() {
                hit[x] = true;
            }
        }
        hit.iter().all(|&h| h)
    }

    pub fn compose(&self, then: &Hom) -> Hom {
        Hom {
            images: self.images.iter().map(|&x| then.images[x]).collect(),
        }
    }
}

/// Named groups used by the embedding-problem suite.
pub mod catalogue {
    use super::FiniteGroup;
    use crate::perm::Perm;

    fn perm(n: usize, cycles: &[&[u32]]) -> Perm {
        let cs: Vec<Vec<u32>> = cycles.iter().map(|c| c.iter().map(|x| x - 1).collect()).collect();
        Perm::from_cycles(n, &cs).unwrap()
    }

    fn gen(n: usize, gens: &[Vec<&[u32]>]) -> FiniteGroup {
        let ps: Vec<Perm> = gens.iter().map(|g| perm(n, g)).collect();
        FiniteGroup::from_generators(n, &ps).unwrap()
    }

    pub fn cyclic(n: usize) -> FiniteGroup {
        FiniteGroup::cyclic(n)
    }

    pub fn dihedral(n: usize) -> FiniteGroup {
        let rot: Vec<u32> = (1..=n as u32).collect();
        let refl: Vec<Vec<u32>> = (1..=n as u32 / 2).map(|i| vec![i, n as u32 + 1 - i]).collect();
        let mut ps = vec![perm(n, &[&rot])];
        let r: Vec<&[u32]> = refl.iter().map(|c| c.as_slice()).collect();
        ps.push(perm(n, &r));
        FiniteGroup::from_generators(n, &ps).unwrap()
    }

    pub fn quaternion() -> FiniteGroup {
        gen(
            8,
            &[
                vec![&[1, 2, 3, 4], &[5, 6, 7, 8]],
                vec![&[1, 5, 3, 7], &[2, 8, 4, 6]],
            ],
        )
    }

    pub fn symmetric3() -> FiniteGroup {
        gen(3, &[vec![&[1, 2]], vec![&[1, 2, 3]]])
    }

    pub fn alternating4() -> FiniteGroup {
        gen(4, &[vec![&[1, 2, 3]], vec![&[1, 2], &[3, 4]]])
    }

    pub fn symmetric4() -> FiniteGroup {
        gen(4, &[vec![&[1, 2]], vec![&[1, 2, 3, 4]]])
    }

    /// Groups of order at most 8.
    pub fn small() -> Vec<(&'static str, FiniteGroup)> {
        let c2 = cyclic(2);
        vec![
            ("C1", cyclic(1)),
            ("C2", cyclic(2)),
            ("C3", cyclic(3)),
            ("C4", cyclic(4)),
            ("C2xC2", c2.direct_product(&c2)),
            ("C5", cyclic(5)),
            ("C6", cyclic(6)),
            ("S3", symmetric3()),
            ("C7", cyclic(7)),
            ("C8", cyclic(8)),
            ("C4xC2", cyclic(4).direct_product(&c2)),
            ("C2^3", c2.direct_product(&c2).direct_product(&c2)),
            ("D4", dihedral(4)),
            ("Q8", quaternion()),
        ]
    }

    /// Groups of order at most 24.
    pub fn medium() -> Vec<(&'static str, FiniteGroup)> {
        let c2 = cyclic(2);
        let mut v = small();
        v.extend([
            ("C9", cyclic(9)),
            ("C3xC3", cyclic(3).direct_product(&cyclic(3))),
            ("C10", cyclic(10)),
            ("D5", dihedral(5)),
            ("C12", cyclic(12)),
            ("C6xC2", cyclic(6).direct_product(&c2)),
            ("D6", dihedral(6)),
            ("A4", alternating4()),
            ("C2^4", c2.direct_product(&c2).direct_product(&c2).direct_product(&c2)),
            ("D8", dihedral(8)),
            ("C4xC4", cyclic(4).direct_product(&cyclic(4))),
            ("S3xC3", symmetric3().direct_product(&cyclic(3))),
            ("S4", symmetric4()),
            ("A4xC2", alternating4().direct_product(&c2)),
            ("C24", cyclic(24)),
        ]);
        v
    }
}

#[cfg(test)]
mod tests {
    use super::catalogue::*;
    use super::*;

    #[test]
    fn catalogue_orders() {
        let orders: Vec<usize> = medium().iter().map(|(_, g)| g.order()).collect();
        assert_eq!(
            orders,
            vec![1, 2, 3, 4, 4, 5, 6, 6, 7, 8, 8, 8, 8, 8, 9, 9, 10, 10, 12, 12, 12, 12, 16, 16, 16, 18, 24, 24, 24]
        );
        let q = quaternion();
        assert!(!q.is_abelian());
        assert_eq!((0..8).filter(|&x| q.element_order(x) == 2).count(), 1);
        let d = dihedral(4);
        assert_eq!((0..8).filter(|&x| d.element_order(x) == 2).count(), 5);
        assert!(!symmetric4().is_abelian());
    }

    #[test]
    fn table_validation() {
        assert!(FiniteGroup::from_table(vec![vec![0, 1], vec![1, 1]]).is_err());
        assert!(FiniteGroup::from_table(vec![vec![1, 0], vec![0, 1]]).is_err());
        let g = FiniteGroup::from_table(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(g.mul(1, 1), 0);
        assert_eq!(g.element_order(1), 2);
    }

    #[test]
    fn extension_detects_relations() {
        let c4 = cyclic(4);
        let c2 = cyclic(2);
        // generator of C4 to the generator of C2 is a hom; to C3's is not
        assert!(Hom::extend(&c4, &c2, &[1], &[1]).is_some());
        assert!(Hom::extend(&c4, &cyclic(3), &[1], &[1]).is_none());
    }
}
