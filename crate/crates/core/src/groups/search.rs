//! Searches over class sets and tuples of small permutation groups.

use std::collections::{BTreeSet, HashSet};

use num_integer::Integer;
use serde::Serialize;

use super::{GroupError, Perm, PermGroup};

/// Largest order for which [`enumerate_subgroups`] runs.
pub const MAX_SUBGROUP_ENUMERATION_ORDER: u128 = 360;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GCompleteness {
    pub complete: bool,
    /// A tuple with one entry per class that generates a proper subgroup.
    pub witness: Option<Vec<Perm>>,
}

fn dedup(classes: &[usize]) -> Vec<usize> {
    let set: BTreeSet<usize> = classes.iter().copied().collect();
    set.into_iter().collect()
}

/// Whether no proper subgroup meets every class in `classes` (indices into
/// `g.conjugacy_classes()`). Equivalent test: every tuple `(x_1, .., x_s)`
/// with `x_i` in the i-th class generates `g`. The first entry is pinned to a
/// representative of the largest class, which loses nothing up to
/// conjugation.
pub fn is_g_complete(g: &PermGroup, classes: &[usize]) -> Result<GCompleteness, GroupError> {
    let cc = g.conjugacy_classes()?;
    let elems = g.elements()?;
    let mut cls = dedup(classes);
    if let Some(&bad) = cls.iter().find(|&&c| c >= cc.len()) {
        return Err(GroupError::Invalid(format!("no class with index {bad}")));
    }
    if cls.is_empty() {
        let complete = g.order() == 1;
        return Ok(GCompleteness {
            complete,
            witness: (!complete).then(Vec::new),
        });
    }
    let (pos, _) = cls
        .iter()
        .enumerate()
        .max_by_key(|(i, &c)| (cc[c].size, std::cmp::Reverse(*i)))
        .expect("nonempty");
    let first = cls.remove(pos);
    let rest: Vec<&[usize]> = cls.iter().map(|&c| cc[c].members.as_slice()).collect();
    let mut odometer = vec![0usize; rest.len()];
    let mut tuple = vec![cc[first].representative.clone()];
    tuple.extend(rest.iter().map(|m| elems[m[0]].clone()));
    loop {
        for (k, &i) in odometer.iter().enumerate() {
            tuple[k + 1] = elems[rest[k][i]].clone();
        }
        if !g.generated_by(&tuple) {
            return Ok(GCompleteness {
                complete: false,
                witness: Some(tuple),
            });
        }
        // advance
        let mut k = 0;
        loop {
            if k == odometer.len() {
                return Ok(GCompleteness {
                    complete: true,
                    witness: None,
                });
            }
            odometer[k] += 1;
            if odometer[k] < rest[k].len() {
                break;
            }
            odometer[k] = 0;
            k += 1;
        }
    }
}

/// A subgroup, as the sorted indices of its elements in `g.elements()`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    pub elements: Vec<usize>,
    pub generators: Vec<usize>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

struct Table {
    n: usize,
    mul: Vec<u32>,
}

impl Table {
    fn new(g: &PermGroup) -> Result<Self, GroupError> {
        let elems = g.elements()?;
        let n = elems.len();
        let mut mul = vec![0u32; n * n];
        for (i, x) in elems.iter().enumerate() {
            for (j, y) in elems.iter().enumerate() {
                let z = g.index_of(&x.mul(y))?.expect("closed under products");
                mul[i * n + j] = z as u32;
            }
        }
        Ok(Table { n, mul })
    }

    fn closure(&self, gens: &[usize]) -> Vec<bool> {
        let mut inside = vec![false; self.n];
        inside[0] = true;
        let mut queue = vec![0usize];
        while let Some(x) = queue.pop() {
            for &s in gens {
                let y = self.mul[x * self.n + s] as usize;
                if !inside[y] {
                    inside[y] = true;
                    queue.push(y);
                }
            }
        }
        inside
    }
}

fn to_subgroup(inside: &[bool], generators: Vec<usize>) -> Subgroup {
    Subgroup {
        elements: (0..inside.len()).filter(|&i| inside[i]).collect(),
        generators,
    }
}

/// All subgroups of `g`: cyclic subgroups, then joins with cyclic subgroups
/// until nothing new appears.
pub fn enumerate_subgroups(g: &PermGroup) -> Result<Vec<Subgroup>, GroupError> {
    if g.order() > MAX_SUBGROUP_ENUMERATION_ORDER {
        return Err(GroupError::TooLarge(format!(
            "subgroup enumeration is limited to order {MAX_SUBGROUP_ENUMERATION_ORDER}"
        )));
    }
    let table = Table::new(g)?;
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut cyclic = Vec::new();
    for x in 0..table.n {
        let s = to_subgroup(&table.closure(&[x]), vec![x]);
        if seen.insert(s.elements.clone()) {
            cyclic.push(s);
        }
    }
    let mut all = cyclic.clone();
    let mut frontier = cyclic.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for h in &frontier {
            let mut member = vec![false; table.n];
            for &e in &h.elements {
                member[e] = true;
            }
            for c in &cyclic {
                let x = c.generators[0];
                if member[x] {
                    continue;
                }
                let mut gens = h.generators.clone();
                gens.push(x);
                let s = to_subgroup(&table.closure(&gens), gens);
                if seen.insert(s.elements.clone()) {
                    next.push(s);
                }
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    all.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements.cmp(&b.elements)));
    Ok(all)
}

/// g-completeness decided from the subgroup list: fails iff some proper
/// subgroup meets every class.
pub fn is_g_complete_by_subgroups(g: &PermGroup, classes: &[usize]) -> Result<bool, GroupError> {
    let class_of = g.class_indices()?;
    let cls = dedup(classes);
    let order = g.order() as usize;
    for h in enumerate_subgroups(g)? {
        if h.order() == order {
            continue;
        }
        let met: HashSet<usize> = h.elements.iter().map(|&e| class_of[e]).collect();
        if cls.iter().all(|c| met.contains(c)) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn power_classes(g: &PermGroup, c: usize) -> Result<BTreeSet<usize>, GroupError> {
    let rep = &g.conjugacy_classes()?[c].representative;
    let mut out = BTreeSet::new();
    for a in 1..=rep.order() {
        out.insert(g.class_index(&rep.pow(a as i64))?);
    }
    Ok(out)
}

/// Classes `C_1..C_r` whose elements generate `g`, and a class `C` that is a
/// power of no `C_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassSetWitness {
    pub classes: Vec<usize>,
    pub outside: usize,
}

fn combinations(n: usize, r: usize, mut f: impl FnMut(&[usize]) -> Result<bool, GroupError>) -> Result<bool, GroupError> {
    if r > n {
        return Ok(false);
    }
    let mut idx: Vec<usize> = (0..r).collect();
    loop {
        if f(&idx)? {
            return Ok(true);
        }
        let mut i = r;
        loop {
            if i == 0 {
                return Ok(false);
            }
            i -= 1;
            if idx[i] < n - r + i {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..r {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Smallest-r witness (r <= 4) for the class-set condition, searching
/// nontrivial class subsets in lexicographic order.
pub fn find_class_set_cor53(g: &PermGroup) -> Result<Option<ClassSetWitness>, GroupError> {
    let cc = g.conjugacy_classes()?;
    let elems = g.elements()?;
    let nontrivial: Vec<usize> = (1..cc.len()).collect();
    let powers: Vec<BTreeSet<usize>> = (0..cc.len())
        .map(|c| power_classes(g, c))
        .collect::<Result<_, _>>()?;
    let mut found = None;
    for r in 1..=4usize.min(nontrivial.len()) {
        let hit = combinations(nontrivial.len(), r, |pick| {
            let chosen: Vec<usize> = pick.iter().map(|&i| nontrivial[i]).collect();
            let closure: BTreeSet<usize> = chosen.iter().flat_map(|&c| powers[c].iter().copied()).collect();
            let Some(outside) = (0..cc.len()).find(|c| !closure.contains(c)) else {
                return Ok(false);
            };
            let gens: Vec<Perm> = chosen
                .iter()
                .flat_map(|&c| cc[c].members.iter().map(|&m| elems[m].clone()))
                .collect();
            if g.generated_by(&gens) {
                found = Some(ClassSetWitness {
                    classes: chosen,
                    outside,
                });
                return Ok(true);
            }
            Ok(false)
        })?;
        if hit {
            break;
        }
    }
    Ok(found)
}

/// Whether the union of `classes` is closed under `m`-th powers for every
/// `m` coprime to the exponent of `g`.
pub fn is_rational_class_set(g: &PermGroup, classes: &[usize]) -> Result<bool, GroupError> {
    let cc = g.conjugacy_classes()?;
    let e = g.exponent()?;
    let set: BTreeSet<usize> = classes.iter().copied().collect();
    for &c in &set {
        let rep = &cc
            .get(c)
            .ok_or_else(|| GroupError::Invalid(format!("no class with index {c}")))?
            .representative;
        for m in (1..e.max(2)).filter(|m| m.gcd(&e) == 1) {
            if !set.contains(&g.class_index(&rep.pow(m as i64))?) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Output of the real-tuple construction: `tuple[0] = g_0`, followed by
/// `4r - 2` nontrivial elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RealTuple {
    pub r: usize,
    pub tuple: Vec<Perm>,
}

/// Results of the three checks on a real tuple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RealTupleCheck {
    pub product_one_and_generates: bool,
    pub g0_is_involution: bool,
    pub symmetric: bool,
    pub entries_nontrivial: bool,
}

impl RealTupleCheck {
    pub fn ok(&self) -> bool {
        self.product_one_and_generates && self.g0_is_involution && self.symmetric && self.entries_nontrivial
    }
}

fn find_involution(g: &PermGroup) -> Result<Perm, GroupError> {
    if g.order() % 2 == 1 {
        return Err(GroupError::NoInvolution);
    }
    for s in g.generators() {
        let o = s.order();
        if o % 2 == 0 {
            return Ok(s.pow((o / 2) as i64));
        }
    }
    g.elements()?
        .iter()
        .find(|x| x.order() == 2)
        .cloned()
        .ok_or(GroupError::NoInvolution)
}

/// Starts from an involution `g_1`, adds generators `g_2..g_r` until they
/// generate, appends `g_r^-1, .., g_2^-1`, sets `g_0 = g_1` and returns
/// `(g_0, g_0 g_{2r-1}^-1 g_0, .., g_0 g_1^-1 g_0, g_1, .., g_{2r-1})`.
pub fn real_tuple_construction(g: &PermGroup) -> Result<RealTuple, GroupError> {
    let g1 = find_involution(g)?;
    let mut base = vec![g1.clone()];
    for s in g.generators() {
        if !s.is_identity() && !PermGroup::new(g.degree(), base.clone())?.contains(s) {
            base.push(s.clone());
        }
    }
    let r = base.len();
    let mut gs = base.clone();
    gs.extend(base[1..].iter().rev().map(Perm::inverse));
    let g0 = g1;
    let mut tuple = vec![g0.clone()];
    tuple.extend(gs.iter().rev().map(|x| g0.mul(&x.inverse()).mul(&g0)));
    tuple.extend(gs);
    Ok(RealTuple { r, tuple })
}

/// Checks: the entries after `g_0` multiply to 1 and generate `g`; `g_0` has
/// order 2; `h_{R+1-i} = g_0 h_i^-1 g_0` for `i <= R/2`.
pub fn verify_real_tuple(g: &PermGroup, tuple: &[Perm]) -> RealTupleCheck {
    let Some((g0, hs)) = tuple.split_first() else {
        return RealTupleCheck {
            product_one_and_generates: false,
            g0_is_involution: false,
            symmetric: false,
            entries_nontrivial: false,
        };
    };
    let id = g.identity();
    let product = hs.iter().fold(id.clone(), |acc, h| acc.mul(h));
    let big_r = hs.len();
    let in_group = tuple.iter().all(|x| x.degree() == g.degree() && g.contains(x));
    RealTupleCheck {
        product_one_and_generates: in_group && product == id && g.generated_by(hs),
        g0_is_involution: g0.order() == 2,
        symmetric: big_r % 2 == 0
            && big_r >= 2
            && (0..big_r / 2).all(|i| hs[big_r - 1 - i] == g0.mul(&hs[i].inverse()).mul(g0)),
        entries_nontrivial: tuple.iter().all(|x| !x.is_identity()),
    }
}
