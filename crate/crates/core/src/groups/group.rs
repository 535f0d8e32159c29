//! Finite permutation groups given by generators.

use std::collections::HashMap;
use std::sync::OnceLock;

use super::schreier::StabChain;
use super::{GroupError, Perm};

/// Default bound on the number of elements listed by [`PermGroup::elements`].
pub const DEFAULT_ENUMERATION_CAP: usize = 20_000;

/// Enumeration cap, overridable through `GALOIS_PARAM_CAP`.
pub fn enumeration_cap() -> usize {
    std::env::var("GALOIS_PARAM_CAP")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_ENUMERATION_CAP)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: Perm,
    pub size: usize,
    /// Indices into the element list.
    pub members: Vec<usize>,
}

struct Listing {
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
}

/// Classes plus the class index of every element.
type ClassTable = (Vec<ConjugacyClass>, Vec<usize>);

pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    chain: OnceLock<StabChain>,
    listing: OnceLock<Result<Listing, GroupError>>,
    classes: OnceLock<Result<ClassTable, GroupError>>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        PermGroup::new(self.degree, self.generators.clone()).expect("already validated")
    }
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("generators", &self.generators)
            .finish()
    }
}

impl PartialEq for PermGroup {
    /// Equal as subgroups of S_degree.
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree
            && self.order() == other.order()
            && other.generators.iter().all(|g| self.contains(g))
    }
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Perm>) -> Result<Self, GroupError> {
        if degree == 0 {
            return Err(GroupError::Invalid("degree must be positive".into()));
        }
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(GroupError::Invalid(format!(
                "generator {g} has degree {}, expected {degree}",
                g.degree()
            )));
        }
        Ok(PermGroup {
            degree,
            generators,
            chain: OnceLock::new(),
            listing: OnceLock::new(),
            classes: OnceLock::new(),
        })
    }

    pub fn symmetric(n: usize) -> Self {
        let mut gens = Vec::new();
        if n >= 2 {
            let cyc: Vec<usize> = (1..=n).map(|i| i % n).collect();
            gens.push(Perm::from_images(cyc).expect("cycle"));
            gens.push(Perm::from_cycles(n, &[&[0, 1]]).expect("transposition"));
        }
        Self::new(n, gens).expect("valid")
    }

    pub fn alternating(n: usize) -> Self {
        let gens = (2..n)
            .map(|k| Perm::from_cycles(n, &[&[0, 1, k]]).expect("3-cycle"))
            .collect();
        Self::new(n, gens).expect("valid")
    }

    /// Z/n acting regularly on n points.
    pub fn cyclic(n: usize) -> Self {
        let cyc: Vec<usize> = (1..=n).map(|i| i % n).collect();
        Self::new(n, vec![Perm::from_images(cyc).expect("cycle")]).expect("valid")
    }

    /// Dihedral group of order 2n on n points (n >= 3).
    pub fn dihedral(n: usize) -> Self {
        let rot: Vec<usize> = (1..=n).map(|i| i % n).collect();
        let refl: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
        Self::new(
            n,
            vec![Perm::from_images(rot).expect("rotation"), Perm::from_images(refl).expect("reflection")],
        )
        .expect("valid")
    }

    /// Z/2 x Z/2 inside S_4.
    pub fn klein_four() -> Self {
        Self::new(
            4,
            vec![
                Perm::from_cycles(4, &[&[0, 1], &[2, 3]]).expect("valid"),
                Perm::from_cycles(4, &[&[0, 2], &[1, 3]]).expect("valid"),
            ],
        )
        .expect("valid")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn identity(&self) -> Perm {
        Perm::identity(self.degree)
    }

    fn chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| StabChain::new(self.degree, &self.generators))
    }

    pub fn order(&self) -> u128 {
        self.chain().order()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.chain().contains(g)
    }

    /// Whether `elements` (assumed to lie in the group) generate it.
    pub fn generated_by(&self, elements: &[Perm]) -> bool {
        StabChain::new(self.degree, elements).order() == self.order()
    }

    fn listing(&self) -> Result<&Listing, GroupError> {
        self.listing
            .get_or_init(|| {
                let cap = enumeration_cap();
                if self.order() > cap as u128 {
                    return Err(GroupError::CapExceeded {
                        cap,
                        order: self.order(),
                    });
                }
                let id = self.identity();
                let mut elements = vec![id.clone()];
                let mut index = HashMap::from([(id, 0usize)]);
                let mut i = 0;
                while i < elements.len() {
                    for s in &self.generators {
                        let x = elements[i].mul(s);
                        if !index.contains_key(&x) {
                            index.insert(x.clone(), elements.len());
                            elements.push(x);
                        }
                    }
                    i += 1;
                }
                Ok(Listing { elements, index })
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    /// All elements, identity first, in breadth-first order from the generators.
    pub fn elements(&self) -> Result<&[Perm], GroupError> {
        Ok(&self.listing()?.elements)
    }

    pub fn index_of(&self, g: &Perm) -> Result<Option<usize>, GroupError> {
        Ok(self.listing()?.index.get(g).copied())
    }

    fn class_data(&self) -> Result<&(Vec<ConjugacyClass>, Vec<usize>), GroupError> {
        self.classes
            .get_or_init(|| {
                let listing = self.listing()?;
                let n = listing.elements.len();
                let mut class_of = vec![usize::MAX; n];
                let mut classes = Vec::new();
                let gens_inv: Vec<(Perm, Perm)> = self
                    .generators
                    .iter()
                    .map(|s| (s.inverse(), s.clone()))
                    .collect();
                for start in 0..n {
                    if class_of[start] != usize::MAX {
                        continue;
                    }
                    let id = classes.len();
                    class_of[start] = id;
                    let mut members = vec![start];
                    let mut k = 0;
                    while k < members.len() {
                        let x = &listing.elements[members[k]];
                        for (si, s) in &gens_inv {
                            let y = si.mul(x).mul(s);
                            let j = listing.index[&y];
                            if class_of[j] == usize::MAX {
                                class_of[j] = id;
                                members.push(j);
                            }
                        }
                        k += 1;
                    }
                    members.sort_unstable();
                    classes.push(ConjugacyClass {
                        representative: listing.elements[start].clone(),
                        size: members.len(),
                        members,
                    });
                }
                Ok((classes, class_of))
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Conjugacy classes; the first is the identity class.
    pub fn conjugacy_classes(&self) -> Result<&[ConjugacyClass], GroupError> {
        Ok(&self.class_data()?.0)
    }

    /// Index of the class containing `g`.
    pub fn class_index(&self, g: &Perm) -> Result<usize, GroupError> {
        let idx = self
            .index_of(g)?
            .ok_or_else(|| GroupError::Invalid(format!("{g} is not in the group")))?;
        Ok(self.class_data()?.1[idx])
    }

    /// Class index of each element, aligned with [`elements`](Self::elements).
    pub fn class_indices(&self) -> Result<&[usize], GroupError> {
        Ok(&self.class_data()?.1)
    }

    pub fn exponent(&self) -> Result<u64, GroupError> {
        use num_integer::Integer;
        Ok(self
            .conjugacy_classes()?
            .iter()
            .fold(1u64, |acc, c| acc.lcm(&c.representative.order())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sizes(g: &PermGroup) -> Vec<usize> {
        let mut s: Vec<usize> = g.conjugacy_classes().unwrap().iter().map(|c| c.size).collect();
        s.sort_unstable();
        s
    }

    #[test]
    fn enumeration_examples() {
        let s3 = PermGroup::new(
            3,
            vec![
                Perm::from_cycles(3, &[&[0, 1]]).unwrap(),
                Perm::from_cycles(3, &[&[0, 1, 2]]).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(s3.elements().unwrap().len(), 6);
        assert_eq!(PermGroup::symmetric(5).elements().unwrap().len(), 120);
        let a5 = PermGroup::new(
            5,
            vec![
                Perm::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap(),
                Perm::from_cycles(5, &[&[2, 3, 4]]).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(a5.elements().unwrap().len(), 60);
        assert_eq!(a5, PermGroup::alternating(5));
    }

    #[test]
    fn class_examples() {
        assert_eq!(sizes(&PermGroup::symmetric(3)), vec![1, 2, 3]);
        assert_eq!(sizes(&PermGroup::alternating(4)), vec![1, 3, 4, 4]);
        assert_eq!(sizes(&PermGroup::klein_four()), vec![1, 1, 1, 1]);
        assert_eq!(sizes(&PermGroup::symmetric(5)).len(), 7);
        assert_eq!(sizes(&PermGroup::alternating(5)), vec![1, 12, 12, 15, 20]);
    }

    #[test]
    fn cap_is_enforced() {
        let s9 = PermGroup::symmetric(9);
        assert_eq!(s9.order(), 362_880);
        assert!(matches!(s9.elements(), Err(GroupError::CapExceeded { .. })));
    }
}
