//! Root and splitting decisions over the algebraic closure, the totally real
//! numbers, `L = Q^tot.r.(i)` and `E = L(p-th roots of L)`.
//!
//! For an irreducible `g` with Galois group `G` on its roots and complex
//! conjugation `c`, let `H` be the subgroup generated by all products `c c^h`.
//! `H` fixes `i` and `ζ_p`, so it embeds in the group of `g` alone and cuts
//! out the part of the splitting field lying in `L`. Then `g` has a root in
//! `L` iff `H` fixes a root, and in `E` iff `H` is elementary abelian `p`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::factor::factor;
use crate::galois::{
    complex_conjugation, galois_data, galois_group, label_factors, splitting_field_with_cap, Caps,
    GaloisData, GroupCertificate,
};
use crate::perm::{Perm, PermGroup};
use crate::poly::PolyZ;
use crate::sturm::is_totally_real;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldTag {
    QBar,
    TotR,
    L,
    E(u64),
}

impl FieldTag {
    pub fn e(p: u64) -> Result<Self> {
        check_prime(p)?;
        Ok(FieldTag::E(p))
    }
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldTag::QBar => write!(f, "QBAR"),
            FieldTag::TotR => write!(f, "QTOTR"),
            FieldTag::L => write!(f, "L"),
            FieldTag::E(p) => write!(f, "E({p})"),
        }
    }
}

fn check_prime(p: u64) -> Result<()> {
    if p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d)) {
        Ok(())
    } else {
        Err(Error::Invalid(format!("{p} is not prime")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassKind {
    NotIrreducible,
    IrrNoRootInE,
    IrrSplitsInE,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassLabel {
    pub kind: ClassKind,
    pub in_t_n: bool,
}

/// Evidence for one irreducible factor.
#[derive(Clone, Debug)]
pub struct FactorReport {
    pub factor: PolyZ,
    pub has_root: bool,
    /// Present when a Galois group was needed.
    pub group: Option<GroupReport>,
}

#[derive(Clone, Debug)]
pub struct GroupReport {
    pub order: usize,
    pub certificate: GroupCertificate,
    pub conjugation: Perm,
    /// Generators `c c^h` of `H`, identities dropped.
    pub h_generators: Vec<Perm>,
}

#[derive(Clone, Debug)]
pub struct Decision {
    pub field: FieldTag,
    pub has_root: bool,
    pub splits: bool,
    pub factors: Vec<FactorReport>,
}

/// The generators `c c^h` of `H`, one per conjugate of `c`.
pub fn h_generators(g: &PermGroup, c: &Perm) -> Vec<Perm> {
    g.conjugacy_class(c)
        .iter()
        .map(|d| c.compose(d))
        .filter(|x| !x.is_identity())
        .collect()
}

fn fixes_a_point(gens: &[Perm], n: usize) -> bool {
    (0..n).any(|i| gens.iter().all(|g| g.fixes(i)))
}

/// `⟨gens⟩` is elementary abelian `p`: generators commute and have order
/// dividing `p`.
fn generates_elementary_abelian(gens: &[Perm], p: u64) -> bool {
    gens.iter().all(|a| (p as usize).is_multiple_of(a.order()))
        && gens
            .iter()
            .all(|a| gens.iter().all(|b| a.compose(b) == b.compose(a)))
}

/// Decision procedures with a per-polynomial cache of Galois data. Cached
/// values are pure functions of the polynomial, so sharing an oracle never
/// changes answers.
#[derive(Debug, Default)]
pub struct Oracle {
    caps: Caps,
    cache: Mutex<HashMap<PolyZ, Arc<GaloisData>>>,
}

impl Oracle {
    pub fn new(caps: Caps) -> Self {
        Oracle {
            caps,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn caps(&self) -> Caps {
        self.caps
    }

    pub fn galois(&self, g: &PolyZ) -> Result<Arc<GaloisData>> {
        if let Some(d) = self.cache.lock().unwrap().get(g) {
            return Ok(d.clone());
        }
        let d = Arc::new(galois_data(g, self.caps)?);
        self.cache.lock().unwrap().insert(g.clone(), d.clone());
        Ok(d)
    }

    fn factor_decision(&self, g: &PolyZ, k: FieldTag) -> Result<FactorReport> {
        let (has_root, group) = match k {
            FieldTag::QBar => (true, None),
            FieldTag::TotR => (is_totally_real(g)?, None),
            FieldTag::L | FieldTag::E(_) => {
                let data = self.galois(g)?;
                let h = h_generators(&data.group, &data.conjugation);
                let ans = match k {
                    FieldTag::L => fixes_a_point(&h, data.group.degree()),
                    FieldTag::E(p) => generates_elementary_abelian(&h, p),
                    _ => unreachable!(),
                };
                let report = GroupReport {
                    order: data.group.order(),
                    certificate: data.certificate.clone(),
                    conjugation: data.conjugation.clone(),
                    h_generators: h,
                };
                (ans, Some(report))
            }
        };
        Ok(FactorReport {
            factor: g.clone(),
            has_root,
            group,
        })
    }

    pub fn decide(&self, f: &PolyZ, k: FieldTag) -> Result<Decision> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if let FieldTag::E(p) = k {
            check_prime(p)?;
        }
        let mut factors = Vec::new();
        for g in factor(f)?.distinct() {
            factors.push(self.factor_decision(&g, k)?);
        }
        Ok(Decision {
            field: k,
            has_root: factors.iter().any(|r| r.has_root),
            splits: factors.iter().all(|r| r.has_root),
            factors,
        })
    }

    pub fn has_root(&self, f: &PolyZ, k: FieldTag) -> Result<bool> {
        Ok(self.decide(f, k)?.has_root)
    }

    /// Every irreducible factor has a root in `k`; all four fields are
    /// normal over Q, so this is splitting.
    pub fn splits(&self, f: &PolyZ, k: FieldTag) -> Result<bool> {
        Ok(self.decide(f, k)?.splits)
    }

    pub fn classify(&self, a: &[BigInt], p: u64) -> Result<ClassLabel> {
        if a.is_empty() {
            return Err(Error::DegreeTooSmall);
        }
        check_prime(p)?;
        let f = PolyZ::monic_from_tail(a);
        if !factor(&f)?.is_irreducible() {
            return Ok(ClassLabel {
                kind: ClassKind::NotIrreducible,
                in_t_n: false,
            });
        }
        let in_t_n = is_totally_real(&f)?;
        let d = self.decide(&f, FieldTag::E(p))?;
        debug_assert_eq!(d.has_root, d.splits);
        Ok(ClassLabel {
            kind: if d.splits {
                ClassKind::IrrSplitsInE
            } else {
                ClassKind::IrrNoRootInE
            },
            in_t_n,
        })
    }
}

pub fn decide(f: &PolyZ, k: FieldTag, caps: Caps) -> Result<Decision> {
    Oracle::new(caps).decide(f, k)
}

pub fn has_root(f: &PolyZ, k: FieldTag) -> Result<bool> {
    Oracle::default().has_root(f, k)
}

pub fn splits(f: &PolyZ, k: FieldTag) -> Result<bool> {
    Oracle::default().splits(f, k)
}

pub fn classify(a: &[BigInt], p: u64) -> Result<ClassLabel> {
    Oracle::default().classify(a, p)
}

/// Witness from the literal search: a totally real Galois field `M` inside
/// the splitting field of `g (X^2+1) Φ_p`, given by its index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiteralWitness {
    pub m_degree: usize,
    pub group_order: usize,
}

pub fn cyclotomic(p: u64) -> PolyZ {
    PolyZ::new(vec![BigInt::from(1); p as usize])
}

/// Searches for a totally real Galois `M` with `[M:Q] <= n!` such that the
/// splitting field of `g` lies in an elementary abelian `p`-extension of
/// `M(i, ζ_p)`. `M` ranges over subfields of the splitting field of
/// `g (X^2+1) Φ_p`, i.e. normal subgroups `N ∋ c` of its group.
pub fn literal_e_search(g: &PolyZ, p: u64, caps: Caps) -> Result<Option<LiteralWitness>> {
    check_prime(p)?;
    if !factor(g)?.is_irreducible() {
        return Err(Error::NotIrreducible);
    }
    let n = g.deg() as usize;
    let mut parts: Vec<PolyZ> = vec![g.primitive()];
    for h in factor(&PolyZ::from_i64s(&[1, 0, 1]).mul(&cyclotomic(p)))?.distinct() {
        if !parts.contains(&h) {
            parts.push(h);
        }
    }
    let big = parts.iter().fold(PolyZ::one(), |acc, h| acc.mul(h));
    let tower = splitting_field_with_cap(&big, caps.max_splitting_degree)?;
    let group = galois_group(&tower)?;
    let mut roots = tower.roots().clone();
    let c = complex_conjugation(&roots, &group)?;
    let labels = label_factors(&mut roots, &parts)?;
    let g_labels = &labels[0];
    let aux: Vec<usize> = labels[1..].iter().flatten().copied().collect();
    let bound: usize = (1..=n).product();
    for nsub in group.normal_subgroups_containing(std::slice::from_ref(&c))? {
        let m_degree = group.order() / nsub.order();
        if m_degree > bound {
            continue;
        }
        let j: Vec<Perm> = nsub
            .elements()
            .iter()
            .filter(|x| aux.iter().all(|&a| x.fixes(a)))
            .cloned()
            .collect();
        let j = PermGroup::from_elements(group.degree(), j)?;
        if j.restrict(g_labels)?.is_elementary_abelian(p as usize) {
            return Ok(Some(LiteralWitness {
                m_degree,
                group_order: group.order(),
            }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(c: &[i64]) -> PolyZ {
        PolyZ::from_i64s(c)
    }

    fn b(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn spec_examples() {
        assert!(has_root(&z(&[1, 0, 1]), FieldTag::L).unwrap());
        assert!(has_root(&z(&[-2, 0, 0, 1]), FieldTag::E(3)).unwrap());
        assert!(!has_root(&z(&[-2, 0, 0, 0, 0, 1]), FieldTag::E(3)).unwrap());
        assert!(!has_root(&z(&[-2, 0, 0, 1]), FieldTag::TotR).unwrap());
        assert!(splits(&z(&[-2, 0, 1]), FieldTag::TotR).unwrap());
        assert!(splits(&z(&[-2, 0, 0, 1]), FieldTag::E(3)).unwrap());
        let f = z(&[-2, 0, 1]).mul(&z(&[-2, 0, 0, 0, 0, 1]));
        assert!(!splits(&f, FieldTag::E(3)).unwrap());
    }

    #[test]
    fn l_validation_cases() {
        assert!(has_root(&z(&[-2, 0, 1]), FieldTag::L).unwrap());
        assert!(!has_root(&z(&[-2, 0, 0, 0, 1]), FieldTag::L).unwrap());
        assert!(has_root(&z(&[1, 0, 1]), FieldTag::L).unwrap());
    }

    #[test]
    fn classify_examples() {
        let c = classify(&b(&[-1, 0]), 3).unwrap();
        assert_eq!(c.kind, ClassKind::NotIrreducible);
        let c = classify(&b(&[-1, 1]), 3).unwrap();
        assert_eq!(c.kind, ClassKind::IrrSplitsInE);
        assert!(c.in_t_n);
        let c = classify(&b(&[-2, 0, 0, 0, 0]), 3).unwrap();
        assert_eq!(c.kind, ClassKind::IrrNoRootInE);
        assert!(!c.in_t_n);
        assert!(classify(&b(&[1]), 4).is_err());
    }

    #[test]
    fn literal_search_agrees_on_small_cases() {
        for (c, p) in [
            (vec![-2i64, 0, 0, 1], 3u64),
            (vec![-2, 0, 0, 1], 2),
            (vec![1, 0, 1], 3),
            (vec![-2, 0, 1], 5),
            (vec![-1, -1, 1], 3),
        ] {
            let g = z(&c);
            let h = has_root(&g, FieldTag::E(p)).unwrap();
            let lit = literal_e_search(&g, p, Caps::default()).unwrap();
            assert_eq!(h, lit.is_some(), "{g} p={p}");
        }
    }
}
